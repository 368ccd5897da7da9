use clap::Parser;

fn main() {
    let cli = xi::cli::Cli::parse();
    std::process::exit(xi::cli::run(cli));
}
