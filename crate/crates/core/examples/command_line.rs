//! Driving the `jetspace` command line in-process, with a JSON config.

fn main() {
    let dir = std::env::temp_dir();
    let config = dir.join("jetspace-example.json");
    std::fs::write(&config, r#"{"p": 3, "e": 1, "n": "1..2", "seed": 42, "samples": 50}"#).unwrap();
    let report = dir.join("jetspace-example-report.json");
    let args = ["jetspace", "verify", "shifted", "--config", config.to_str().unwrap(), "--report", report.to_str().unwrap()];
    let code = jetspace::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit status {code}; report written to {}", report.display());
}
