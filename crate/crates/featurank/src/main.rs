fn main() {
    std::process::exit(featurank::cli::run(std::env::args()));
}
