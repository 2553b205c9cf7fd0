fn main() {
    env_logger::init();
    std::process::exit(neighborly_cubical::cli::run_cli(std::env::args_os()));
}
