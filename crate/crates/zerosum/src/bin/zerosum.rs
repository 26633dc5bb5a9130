fn main() {
    std::process::exit(zerosum::cli::run());
}
