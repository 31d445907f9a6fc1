fn main() {
    std::process::exit(bcdmod::cli::run(std::env::args_os()));
}
