fn main() {
    std::process::exit(ghkit::cli::run());
}
