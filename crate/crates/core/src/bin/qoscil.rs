fn main() {
    std::process::exit(qoscil::cli::run(std::env::args_os()));
}
