fn main() -> std::process::ExitCode {
    stablegram::cli::main()
}
