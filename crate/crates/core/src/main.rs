fn main() {
    std::process::exit(status_lab::cli::run(std::env::args_os()));
}
