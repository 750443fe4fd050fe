fn main() {
    std::process::exit(toroidal_cli::run(std::env::args_os()));
}
