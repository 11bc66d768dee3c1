fn main() {
    std::process::exit(stclone::cli::run(std::env::args()));
}
