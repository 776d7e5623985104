fn main() {
    std::process::exit(egomap_cli::run(std::env::args_os()));
}
