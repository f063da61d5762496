fn main() {
    std::process::exit(gallai_ramsey::cli::run());
}
