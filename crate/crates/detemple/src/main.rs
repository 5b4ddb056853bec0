fn main() {
    std::process::exit(detemple::cli::run_from_env());
}
