use std::path::Path;

/// Reads `key = value` lines into `--key value` arguments.
pub fn file_args(path: &Path) -> Result<Vec<String>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key = value", path.display(), i + 1))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || k == "config" {
            return Err(format!("{}:{}: bad key '{k}'", path.display(), i + 1));
        }
        out.push(format!("--{k}"));
        out.push(v.to_string());
    }
    Ok(out)
}

/// Splices the arguments from `--config FILE` in front of the command-line
/// flags, so later flags override them.
pub fn merge_argv(argv: Vec<String>) -> Result<Vec<String>, String> {
    let pos = argv.iter().position(|a| a == "--config" || a.starts_with("--config="));
    let Some(pos) = pos else { return Ok(argv) };
    let (path, span) = match argv[pos].strip_prefix("--config=") {
        Some(p) => (p.to_string(), 1),
        None => (argv.get(pos + 1).cloned().ok_or("--config needs a path")?, 2),
    };
    let extra = file_args(Path::new(&path))?;
    let mut rest: Vec<String> = argv[..pos].to_vec();
    rest.extend_from_slice(&argv[pos + span..]);
    // first non-flag after the program name is the subcommand
    let sub = rest.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 2).unwrap_or(rest.len());
    let mut out = rest[..sub].to_vec();
    out.extend(extra);
    out.extend_from_slice(&rest[sub..]);
    Ok(out)
}
