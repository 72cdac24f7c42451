//! `key=value` configuration files, spliced into the argument list.
//!
//! Each entry becomes `--key value` (or a bare `--key` for `true`) inserted
//! right after the subcommand, so flags given on the command line come later
//! and take precedence.

use std::fs;

/// Reads `path` into flag tokens. Errors carry the 1-based line number.
pub fn config_args(path: &str) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    parse(&text).map_err(|e| format!("{path}: {e}"))
}

fn parse(text: &str) -> Result<Vec<String>, String> {
    let mut args = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "line {}: expected key=value, found '{line}'",
                k + 1
            ));
        };
        let (key, value) = (key.trim().trim_start_matches("--"), value.trim());
        if key.is_empty() || key == "config" {
            return Err(format!("line {}: invalid key '{key}'", k + 1));
        }
        match value {
            "true" => args.push(format!("--{key}")),
            "false" => {}
            _ => {
                args.push(format!("--{key}"));
                args.push(value.to_string());
            }
        }
    }
    Ok(args)
}

/// Expands every `--config FILE` in `argv` in place of the flag.
pub fn expand(argv: Vec<String>) -> Result<Vec<String>, String> {
    let mut files = Vec::new();
    let mut rest = Vec::with_capacity(argv.len());
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            files.push(it.next().ok_or("--config needs a file")?);
        } else if let Some(f) = a.strip_prefix("--config=") {
            files.push(f.to_string());
        } else {
            rest.push(a);
        }
    }
    if files.is_empty() {
        return Ok(rest);
    }
    let mut injected = Vec::new();
    for f in &files {
        injected.extend(config_args(f)?);
    }
    // Program name and subcommand first, then the file, then the command line.
    let at = rest.len().min(2);
    rest.splice(at..at, injected);
    Ok(rest)
}
