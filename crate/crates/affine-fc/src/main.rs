use std::process::ExitCode;

fn main() -> ExitCode {
    affine_fc::cli::run()
}
