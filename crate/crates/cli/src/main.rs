fn main() {
    std::process::exit(tswitch_cli::run(std::env::args_os()));
}
