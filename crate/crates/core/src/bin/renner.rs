fn main() {
    std::process::exit(renner::cli::run(std::env::args_os()));
}
