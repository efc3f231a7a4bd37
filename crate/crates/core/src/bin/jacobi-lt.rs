fn main() {
    std::process::exit(jacobi_lt::cli::main());
}
