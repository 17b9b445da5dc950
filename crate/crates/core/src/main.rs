fn main() {
    std::process::exit(corridor_paths::cli::run(std::env::args_os()));
}
