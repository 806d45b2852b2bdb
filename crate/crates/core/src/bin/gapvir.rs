fn main() {
    std::process::exit(gapvir::cli::run(std::env::args_os()));
}
