fn main() {
    std::process::exit(garside_burau::cli::main());
}
