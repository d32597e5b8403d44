//! Textual assemblage description.
//!
//! ```text
//! ambient 7 2                     # genus, boundary count to fill
//! modulus 0                       # 0 for a framing
//! core standard                 # or: chain <n> | dynkin <type>
//! boundary dC = -9                # core boundary values
//! boundary dD = -3
//! step h1 split dC -> x=-5 y=-5   # both ends on dC
//! step h2 merge x y -> dC=-11     # ends on x and y
//! winding h2 = 0                  # optional, default 0
//! ```
//!
//! When no `boundary` lines are given, the values compatible with the core
//! are used, named `d1, d2, ..`.

use crate::curveconf::{CurveSystem, DynkinType};

use super::{Assemblage, AssemblageError, AssemblageStep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblageFile {
    pub assemblage: Assemblage,
    pub initial: Vec<(String, i64)>,
}

fn perr(line: usize, msg: impl Into<String>) -> AssemblageError {
    AssemblageError::Parse {
        line,
        msg: msg.into(),
    }
}

fn named_value(line: usize, s: &str) -> Result<(String, i64), AssemblageError> {
    let (n, v) = s
        .split_once('=')
        .ok_or_else(|| perr(line, format!("expected `name=value`, got `{s}`")))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| perr(line, format!("bad value in `{s}`")))?;
    Ok((n.trim().to_string(), v))
}

pub fn parse_assemblage(src: &str) -> Result<AssemblageFile, AssemblageError> {
    let mut ambient = None;
    let mut modulus = 0u64;
    let mut core: Option<CurveSystem> = None;
    let mut initial = Vec::new();
    let mut steps: Vec<AssemblageStep> = Vec::new();
    let mut windings = Vec::new();

    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match key {
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
            "modulus" => modulus = rest.parse().map_err(|_| perr(line, "bad modulus"))?,
            "core" => {
                let mut it = rest.split_whitespace();
                core = Some(match (it.next(), it.next()) {
                    (Some("standard"), None) => CurveSystem::standard_core(),
                    (Some("chain"), Some(n)) => {
                        CurveSystem::chain(n.parse().map_err(|_| perr(line, "bad chain length"))?)?
                    }
                    (Some("dynkin"), Some(t)) => CurveSystem::dynkin(t.parse::<DynkinType>()?)?,
                    _ => return Err(perr(line, "expected `core standard|chain <n>|dynkin <type>`")),
                });
            }
            "boundary" => initial.push(named_value(line, rest)?),
            "winding" => windings.push((line, named_value(line, rest)?)),
            "step" => {
                let (lhs, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| perr(line, "expected `->` in step"))?;
                let lhs: Vec<&str> = lhs.split_whitespace().collect();
                let rhs: Vec<&str> = rhs.split_whitespace().collect();
                let step = match (lhs.as_slice(), rhs.as_slice()) {
                    ([curve, "split", comp], [a, b]) => AssemblageStep::split(
                        *curve,
                        *comp,
                        named_value(line, a)?,
                        named_value(line, b)?,
                    ),
                    ([curve, "merge", c1, c2], [n]) => {
                        AssemblageStep::merge(*curve, *c1, *c2, named_value(line, n)?)
                    }
                    _ => {
                        return Err(perr(
                            line,
                            "expected `step <curve> split <c> -> a=v b=w` or `step <curve> merge <c1> <c2> -> n=v`",
                        ))
                    }
                };
                steps.push(step);
            }
            other => return Err(perr(line, format!("unknown key `{other}`"))),
        }
    }
    let core = core.ok_or_else(|| perr(0, "missing `core`"))?;
    let ambient = ambient.ok_or_else(|| perr(0, "missing `ambient`"))?;
    for (line, (curve, w)) in windings {
        let step = steps
            .iter_mut()
            .find(|s| s.curve == curve)
            .ok_or_else(|| perr(line, format!("no step attaches `{curve}`")))?;
        step.winding = w;
    }
    if initial.is_empty() {
        initial = core
            .compatible_boundary_values()?
            .into_iter()
            .enumerate()
            .map(|(i, (_, v))| (format!("d{}", i + 1), v))
            .collect();
    }
    Ok(AssemblageFile {
        assemblage: Assemblage {
            core,
            steps,
            ambient,
            modulus,
        },
        initial,
    })
}

#[cfg(test)]
mod tests {
    use super::super::certify;
    use super::*;

    #[test]
    fn documented_example() {
        let f = parse_assemblage(
            "ambient 7 2\nmodulus 0\ncore standard\nboundary dC = -9\nboundary dD = -3\nstep h1 split dC -> x=-5 y=-5\nstep h2 merge x y -> dC=-11\nwinding h2 = 0\n",
        )
        .unwrap();
        assert_eq!(f.assemblage.steps.len(), 2);
        let cert = certify(&f.assemblage, &f.initial).unwrap();
        assert_eq!((cert.genus, cert.boundary), (7, 2));
        assert!(cert.generates);
    }

    #[test]
    fn default_boundary_values() {
        let f = parse_assemblage("ambient 3 1\ncore dynkin E6").unwrap();
        assert_eq!(f.initial, vec![("d1".to_string(), -5)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_assemblage("core standard"), Err(AssemblageError::Parse { .. })));
        assert!(matches!(
            parse_assemblage("ambient 1 1\ncore chain 2\nstep x split"),
            Err(AssemblageError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_assemblage("ambient 1 1\ncore chain 2\nwinding q = 1"),
            Err(AssemblageError::Parse { line: 3, .. })
        ));
    }
}
