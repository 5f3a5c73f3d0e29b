use std::process::ExitCode;

fn main() -> ExitCode {
    domlat::cli::main()
}
