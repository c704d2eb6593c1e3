fn main() {
    let (code, out) = binomial_cobar::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
