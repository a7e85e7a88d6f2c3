fn main() {
    std::process::exit(dual_jacobsthal::cli::run(std::env::args_os()));
}
