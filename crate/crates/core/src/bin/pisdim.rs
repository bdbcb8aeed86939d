fn main() {
    pisdim::cli::main()
}
