fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let code = isokit::run(&args, &mut out);
    std::process::exit(code);
}
