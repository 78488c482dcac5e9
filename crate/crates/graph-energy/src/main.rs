fn main() {
    std::process::exit(graph_energy::cli::run());
}
