use clap::Parser;

fn main() {
    let cli = viscowave::cli::Cli::parse();
    if let Err(e) = viscowave::cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
