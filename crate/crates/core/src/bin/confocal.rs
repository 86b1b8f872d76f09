fn main() {
    std::process::exit(confocal::io::cli::run(std::env::args_os()));
}
