use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = quatnorm::cli::run(std::env::args_os().skip(1), &mut std::io::stdin());
    let mut stream: Box<dyn Write> = if out.status == 2 {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = stream.write_all(out.output.as_bytes());
    ExitCode::from(out.status as u8)
}
