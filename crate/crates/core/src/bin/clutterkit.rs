fn main() {
    std::process::exit(clutterkit::cli::main());
}
