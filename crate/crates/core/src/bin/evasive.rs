fn main() {
    std::process::exit(evasive::cli::main_with_args(std::env::args_os()));
}
