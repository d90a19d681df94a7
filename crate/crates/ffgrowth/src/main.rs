fn main() {
    std::process::exit(ffgrowth::cli::run());
}
