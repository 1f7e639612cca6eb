use clap::Parser;

fn main() {
    let cli = qeis::cli::Cli::parse();
    std::process::exit(qeis::cli::run(cli));
}
