use std::process::ExitCode;

fn main() -> ExitCode {
    revsynth::cli::main()
}
