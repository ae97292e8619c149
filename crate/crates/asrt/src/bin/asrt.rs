fn main() {
    std::process::exit(asrt::cli::run(std::env::args_os()));
}
