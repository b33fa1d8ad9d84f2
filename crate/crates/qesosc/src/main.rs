fn main() {
    std::process::exit(qesosc::cli::main_with_args(std::env::args_os()));
}
