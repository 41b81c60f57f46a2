fn main() {
    std::process::exit(polycomb::cli::main_with_args(std::env::args_os()));
}
