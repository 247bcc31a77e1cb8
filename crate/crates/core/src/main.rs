fn main() {
    std::process::exit(chain_spectra::cli::run(std::env::args_os()));
}
