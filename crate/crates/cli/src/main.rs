use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = std::io::stdout();
    ExitCode::from(tropical_lie::run(&args, &mut out) as u8)
}
