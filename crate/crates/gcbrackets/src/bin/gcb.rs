fn main() {
    std::process::exit(gcbrackets::cli::dispatch(std::env::args()));
}
