fn main() {
    std::process::exit(resurge::cli::run());
}
