fn main() {
    std::process::exit(rigdist::cli::run(std::env::args_os()));
}
