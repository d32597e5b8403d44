//! Argument parsers and file loading.

use std::path::Path;

use anyhow::Context;

/// An integer vector given as one argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords(pub Vec<i64>);

/// Integers separated by commas or whitespace, optionally in `()` or `[]`.
pub fn parse_coords(s: &str) -> Result<Coords, String> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let out: Vec<i64> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err("expected at least one integer".into());
    }
    Ok(Coords(out))
}

/// `g,b` for an ambient surface.
pub fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let v = parse_coords(s)?.0;
    match v.as_slice() {
        [g, b] if *g >= 0 && *b >= 0 => Ok((*g as u32, *b as u32)),
        _ => Err("expected `genus,boundary` with nonnegative entries".into()),
    }
}

pub fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords() {
        assert_eq!(parse_coords("6").unwrap().0, vec![6]);
        assert_eq!(parse_coords("(1, -2)").unwrap().0, vec![1, -2]);
        assert_eq!(parse_coords("[3 4 5]").unwrap().0, vec![3, 4, 5]);
        assert!(parse_coords("").is_err());
        assert!(parse_coords("1,x").is_err());
        assert_eq!(parse_pair("6,2").unwrap(), (6, 2));
        assert!(parse_pair("-1,2").is_err());
    }
}
