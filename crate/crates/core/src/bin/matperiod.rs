fn main() {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    let code = matperiod::cli::main_with_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
