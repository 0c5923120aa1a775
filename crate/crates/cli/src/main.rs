use clap::Parser;

use powid_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("powid: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
