fn main() {
    std::process::exit(multiseg::cli::run(std::env::args().skip(1)));
}
