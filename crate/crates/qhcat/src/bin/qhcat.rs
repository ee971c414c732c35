use std::io::Write;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let env_max_dim = std::env::var("QHCAT_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok());
    let json = args.iter().any(|a| a == "--json");
    let start = Instant::now();
    let outcome = qhcat::cli::run(&args, env_max_dim);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.output.as_bytes());
    if !json && outcome.exit_code != qhcat::cli::EXIT_USAGE {
        // Wall-clock line for humans only; JSON reports stay byte-identical
        // across runs.
        let _ = writeln!(stdout, "elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    std::process::exit(outcome.exit_code);
}
