fn main() {
    std::process::exit(qsusy::cli::main_with_args(std::env::args_os()));
}
