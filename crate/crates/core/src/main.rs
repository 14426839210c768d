fn main() {
    std::process::exit(matchstick::cli::run(std::env::args_os()));
}
