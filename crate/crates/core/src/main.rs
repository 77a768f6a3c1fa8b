fn main() {
    std::process::exit(quiverlab::cli::run(std::env::args_os()));
}
