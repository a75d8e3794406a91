fn main() {
    std::process::exit(upsilon_cli::run());
}
