fn main() -> std::process::ExitCode {
    genexp::cli::main()
}
