use std::io;
use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = panic::catch_unwind(|| {
        let stdout = io::stdout();
        let stderr = io::stderr();
        donor_kmeans::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
    });
    match status {
        Ok(code) => ExitCode::from(code as u8),
        // the panic hook has already printed the message
        Err(_) => ExitCode::from(2),
    }
}
