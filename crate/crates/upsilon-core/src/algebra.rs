//! Tensor product and dualization of complexes.
//!
//! The tensor product realizes connected sum: generators are pairs with
//! added gradings and filtration levels, and the boundary obeys the Leibniz
//! rule (signs are invisible over GF(2)). Dualization realizes mirroring:
//! gradings and filtration levels are negated and every arrow is reversed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::complex::{Complex, Generator};

/// Tensor product of two complexes. Generator ids are the ordered pairs
/// `"x⊗y"`; the pair `(x, y)` carries grading `M(x) + M(y)` and
/// bifiltration `(alg(x) + alg(y), alex(x) + alex(y))`.
///
/// The tensor product of admissible complexes is admissible.
pub fn tensor(a: &Complex, b: &Complex) -> Complex {
    let nb = b.generators().len();
    let pair_index = |ia: usize, ib: usize| ia * nb + ib;

    let mut generators = Vec::with_capacity(a.generators().len() * nb);
    for ga in a.generators() {
        for gb in b.generators() {
            generators.push(Generator::new(
                format!("{}⊗{}", ga.id, gb.id),
                ga.maslov + gb.maslov,
                ga.alg + gb.alg,
                ga.alex + gb.alex,
            ));
        }
    }

    let mut differential = Vec::with_capacity(generators.len());
    for ia in 0..a.generators().len() {
        for ib in 0..nb {
            let mut targets = BTreeSet::new();
            for &ta in a.boundary_of(ia) {
                targets.insert(pair_index(ta, ib));
            }
            for &tb in b.boundary_of(ib) {
                targets.insert(pair_index(ia, tb));
            }
            differential.push(targets);
        }
    }

    Complex::from_parts(generators, differential)
}

/// The dual complex: generator `x*` carries grading `-M(x)` and
/// bifiltration `(-alg(x), -alex(x))`, and `x* -> y*` exactly when
/// `y -> x`.
///
/// The input must be admissible; the result is re-validated rather than
/// assumed admissible, since a convention slip here (a classic source of
/// sign errors) would silently corrupt every mirror computation.
pub fn dual(c: &Complex) -> Complex {
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(format!("{}*", g.id), -g.maslov, -g.alg, -g.alex))
        .collect();
    let n = c.generators().len();
    let mut differential = alloc::vec![BTreeSet::new(); n];
    for source in 0..n {
        for &target in c.boundary_of(source) {
            differential[target].insert(source);
        }
    }
    let d = Complex::from_parts(generators, differential);
    let report = d.validate();
    assert!(
        report.is_admissible(),
        "dual of an admissible complex failed validation: {report}"
    );
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pl::jump_spectrum;
    use crate::upsilon::{tau, upsilon_at, upsilon_pl};
    use crate::{rational, ratio};
    use alloc::collections::BTreeMap;
    use alloc::vec::Vec;

    fn t23() -> Complex {
        Complex::staircase(&[1, 1]).unwrap()
    }

    fn t25() -> Complex {
        Complex::staircase(&[1, 1, 1, 1]).unwrap()
    }

    fn t37() -> Complex {
        Complex::staircase(&[1, 2, 1, 2, 2, 1, 2, 1]).unwrap()
    }

    type Signature = (Vec<(i64, i64, i64)>, Vec<((i64, i64, i64), (i64, i64, i64))>);

    /// Gradings, filtrations, and arrow endpoints up to renaming. Enough to
    /// recognize the canonical isomorphisms exercised below.
    fn signature(c: &Complex) -> Signature {
        let sig = |i: usize| {
            let g = c.generator(i);
            (g.maslov, g.alg, g.alex)
        };
        let mut gens: Vec<_> = (0..c.generators().len()).map(sig).collect();
        gens.sort();
        let mut arrows = Vec::new();
        for i in 0..c.generators().len() {
            for &t in c.boundary_of(i) {
                arrows.push((sig(i), sig(t)));
            }
        }
        arrows.sort();
        (gens, arrows)
    }

    #[test]
    fn unknot_is_tensor_unit() {
        for c in [t23(), t37()] {
            let u = tensor(&Complex::unknot(), &c);
            assert_eq!(signature(&u), signature(&c));
            assert_eq!(
                signature(&tensor(&c, &Complex::unknot())),
                signature(&c)
            );
        }
    }

    #[test]
    fn trefoil_sum_has_doubled_upsilon() {
        let sum = tensor(&t23(), &t23());
        assert_eq!(sum.generators().len(), 9);
        assert!(sum.validate().is_admissible());
        let f = upsilon_pl(&sum);
        assert_eq!(f.eval(ratio(1, 2)), rational(-1));
        assert_eq!(f.eval(rational(1)), rational(-2));
        assert_eq!(f, upsilon_pl(&t23()).add(&upsilon_pl(&t23())));

        let jumps = jump_spectrum(&f);
        assert_eq!(jumps.len(), 1);
        assert_eq!(jumps[0].t, rational(1));
    }

    #[test]
    fn knot_sum_mirror_cancels() {
        let c = t23();
        let sum = tensor(&c, &dual(&c));
        assert!(sum.validate().is_admissible());
        assert!(upsilon_pl(&sum).is_zero());
    }

    #[test]
    fn dual_involution_and_unknot() {
        assert_eq!(signature(&dual(&Complex::unknot())), signature(&Complex::unknot()));
        for c in [t23(), t25(), t37()] {
            assert_eq!(signature(&dual(&dual(&c))), signature(&c));
        }
    }

    #[test]
    fn dual_negates_upsilon() {
        let m = dual(&t23());
        assert_eq!(upsilon_at(&m, rational(1)), rational(1));
        for c in [Complex::unknot(), t23(), t25(), t37()] {
            assert_eq!(upsilon_pl(&dual(&c)), upsilon_pl(&c).neg());
        }
    }

    #[test]
    fn additivity_on_fixed_pairs() {
        let pairs = [(t23(), t25()), (t25(), t37()), (t23(), t37())];
        for (a, b) in pairs {
            let sum = tensor(&a, &b);
            assert!(sum.validate().is_admissible());
            assert_eq!(upsilon_pl(&sum), upsilon_pl(&a).add(&upsilon_pl(&b)));
        }
    }

    #[test]
    fn tau_is_additive_and_negated() {
        let a = t23();
        let b = t25();
        assert_eq!(
            tau(&tensor(&a, &b)).unwrap(),
            tau(&a).unwrap() + tau(&b).unwrap()
        );
        for c in [t23(), t25(), t37()] {
            assert_eq!(tau(&dual(&c)).unwrap(), -tau(&c).unwrap());
        }
    }

    #[test]
    fn tensor_ids_are_ordered_pairs() {
        let s = tensor(&t23(), &t23());
        let ids: BTreeMap<&str, usize> = s
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| (g.id.as_str(), i))
            .collect();
        assert!(ids.contains_key("b0⊗b1"));
        assert!(ids.contains_key("b1⊗b0"));
        let w = ids["w0⊗b0"];
        let targets: Vec<&str> = s
            .boundary_of(w)
            .iter()
            .map(|&t| s.generator(t).id.as_str())
            .collect();
        assert_eq!(targets, ["b0⊗b0", "b1⊗b0"]);
    }
}
