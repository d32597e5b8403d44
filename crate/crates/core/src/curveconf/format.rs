//! Textual configuration format.
//!
//! ```text
//! # A2 plumbing inside a one-holed torus
//! curves a1 a2
//! point p1 = (a1, a2, +1)
//! order a1 = p1            # optional; needed off trees for curves with 3+ points
//! ambient 1 1              # genus, boundary count
//! ```
//!
//! Presets `chain N`, `dynkin A<n>|E6` and `core standard` replace the explicit
//! lists. Blank lines and `#` comments are ignored.

use super::{CurveError, CurveSystem, DynkinType};

fn perr(line: usize, msg: impl Into<String>) -> CurveError {
    CurveError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_config(src: &str) -> Result<CurveSystem, CurveError> {
    let mut builder = CurveSystem::builder();
    let mut preset: Option<CurveSystem> = None;
    let mut ambient = None;
    let mut explicit = false;

    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match key {
            "curves" => {
                explicit = true;
                for name in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                    builder.curve(name);
                }
            }
            "point" => {
                explicit = true;
                let (id, triple) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `point <id> = (c1, c2, sign)`"))?;
                let triple = triple
                    .trim()
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| perr(line, "intersection must be a parenthesized triple"))?;
                let parts: Vec<&str> = triple.split(',').map(str::trim).collect();
                let [a, b, s] = parts.as_slice() else {
                    return Err(perr(line, "intersection must be `(c1, c2, sign)`"));
                };
                let sign = match *s {
                    "+1" | "1" | "+" => 1,
                    "-1" | "-" => -1,
                    other => return Err(perr(line, format!("bad sign `{other}`"))),
                };
                builder.point(id.trim(), *a, *b, sign);
            }
            "order" => {
                explicit = true;
                let (curve, ids) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `order <curve> = <ids>`"))?;
                builder.order(
                    curve.trim(),
                    ids.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()),
                );
            }
            "ambient" => {
                let nums: Vec<u32> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| perr(line, format!("bad integer `{t}`"))))
                    .collect::<Result<_, _>>()?;
                let [g, b] = nums.as_slice() else {
                    return Err(perr(line, "expected `ambient <genus> <boundary>`"));
                };
                ambient = Some((*g, *b));
            }
            "chain" => {
                let n: usize = rest.parse().map_err(|_| perr(line, "expected `chain <n>`"))?;
                preset = Some(CurveSystem::chain(n)?);
            }
            "dynkin" => preset = Some(CurveSystem::dynkin(rest.parse::<DynkinType>()?)?),
            "core" => {
                if rest != "standard" {
                    return Err(perr(line, format!("unknown core `{rest}`")));
                }
                preset = Some(CurveSystem::standard_core());
            }
            other => return Err(perr(line, format!("unknown key `{other}`"))),
        }
    }
    let sys = match preset {
        Some(_) if explicit => {
            return Err(perr(0, "a preset cannot be combined with explicit curves"));
        }
        Some(p) => {
            let amb = ambient.or(p.ambient());
            p.with_ambient(amb)
        }
        None => {
            if let Some((g, b)) = ambient {
                builder.ambient(g, b);
            }
            builder.build()?
        }
    };
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_a2() {
        let sys = parse_config(
            "# plumbing\ncurves a1 a2\npoint p1 = (a1, a2, +1)\nambient 1 1\n",
        )
        .unwrap();
        assert_eq!(sys.len(), 2);
        assert_eq!(sys.ambient(), Some((1, 1)));
        assert!(sys.is_spanning((1, 1)));
    }

    #[test]
    fn presets() {
        let core = parse_config("core standard").unwrap();
        assert_eq!(core.len(), 13);
        assert_eq!(core.ambient(), Some((6, 2)));
        let e6 = parse_config("dynkin E6\nambient 3 1").unwrap();
        assert!(e6.is_spanning(e6.ambient().unwrap()));
        assert_eq!(parse_config("chain 7").unwrap().len(), 7);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_config("curves a\nfoo"), Err(CurveError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_config("curves a b\npoint p = (a, b, 2)"),
            Err(CurveError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_config("curves a\npoint p = (a, z, +1)"),
            Err(CurveError::UnknownCurve(_))
        ));
        assert!(parse_config("chain 3\ncurves x").is_err());
    }
}
