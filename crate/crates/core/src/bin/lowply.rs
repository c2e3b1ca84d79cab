use clap::Parser;

fn main() {
    std::process::exit(lowply::cli::run(lowply::cli::Cli::parse()));
}
