fn main() {
    std::process::exit(trirec::cli::main_entry());
}
