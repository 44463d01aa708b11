use clap::Parser;

fn main() {
    let cli = fcrystal::cli::Cli::parse();
    std::process::exit(fcrystal::cli::run(cli));
}
