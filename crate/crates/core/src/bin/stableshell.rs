fn main() {
    std::process::exit(stableshell::cli::run(std::env::args_os()));
}
