fn main() {
    std::process::exit(dynatomic_cli::run(std::env::args_os()));
}
