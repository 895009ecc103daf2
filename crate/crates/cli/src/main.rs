use std::io::{IsTerminal, Write};

fn main() {
    let stdout = std::io::stdout();
    let tty = stdout.is_terminal();
    let mut out = stdout.lock();
    let code = hairpin_cli::run(std::env::args_os(), tty, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
