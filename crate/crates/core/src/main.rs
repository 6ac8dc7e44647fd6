fn main() -> std::process::ExitCode {
    permcsp::cli::main()
}
