fn main() {
    std::process::exit(abelslab::cli::run(std::env::args_os()));
}
