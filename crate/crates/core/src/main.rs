fn main() {
    std::process::exit(wellbound::cli::run(std::env::args_os()));
}
