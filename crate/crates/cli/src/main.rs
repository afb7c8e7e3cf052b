use std::collections::BTreeMap;
use std::io::Write;

fn main() {
    let env: BTreeMap<String, String> = std::env::vars().filter(|(k, _)| k.starts_with("GG_")).collect();
    let out = gg_cli::run(std::env::args().skip(1), &env);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
