fn main() {
    std::process::exit(hamchain::cli::run(std::env::args_os()));
}
