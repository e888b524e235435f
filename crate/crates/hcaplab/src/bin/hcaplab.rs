use clap::Parser;

fn main() {
    let cli = hcaplab::cli::Cli::parse();
    std::process::exit(hcaplab::cli::run(&cli));
}
