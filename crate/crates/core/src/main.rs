fn main() {
    std::process::exit(qdb::cli::main());
}
