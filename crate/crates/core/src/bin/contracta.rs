fn main() {
    std::process::exit(contracta::cli::main_with_env());
}
