use clap::Parser;

fn main() {
    let cli = tdelay_cli::Cli::parse();
    std::process::exit(tdelay_cli::main_with(cli));
}
