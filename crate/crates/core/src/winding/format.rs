//! Textual winding input.
//!
//! ```text
//! genus 1
//! modulus 4
//! boundary d1            # optional list of boundary names
//! curve a = (1 0 0) : 0  # class in (a1 b1 .. ag bg d1 ..) coordinates, winding
//! curve b = (0 1 0) : 3
//! arc t = 3/2            # half-integral arc value
//! word a b^-1            # optional twist word
//! ```

use std::collections::BTreeMap;

use super::{HomologyCurve, TwistWord, WindingContext, WindingError, WindingFunction};

#[derive(Debug, Clone)]
pub struct WindingFile {
    pub context: WindingContext,
    pub curves: BTreeMap<String, HomologyCurve>,
    /// Curve names in declaration order.
    pub order: Vec<String>,
    pub function: WindingFunction,
    pub word: TwistWord,
}

fn perr(line: usize, msg: impl Into<String>) -> WindingError {
    WindingError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses `n`, `-n`, `n/2` into a doubled integer.
fn parse_half(line: usize, s: &str) -> Result<i64, WindingError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| perr(line, format!("bad value `{s}`")))?;
        if den.trim() != "2" {
            return Err(perr(line, "arc values are integers or halves"));
        }
        Ok(num)
    } else {
        let n: i64 = s.parse().map_err(|_| perr(line, format!("bad value `{s}`")))?;
        Ok(2 * n)
    }
}

pub fn parse_winding_file(src: &str) -> Result<WindingFile, WindingError> {
    let mut genus = None;
    let mut modulus = 0u64;
    let mut boundary = Vec::new();
    let mut curves = Vec::new();
    let mut arcs = Vec::new();
    let mut word = TwistWord::default();

    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match key {
            "genus" => genus = Some(rest.parse::<u32>().map_err(|_| perr(line, "bad genus"))?),
            "modulus" => modulus = rest.parse().map_err(|_| perr(line, "bad modulus"))?,
            "boundary" => boundary.extend(rest.split_whitespace().map(String::from)),
            "curve" => {
                let (name, spec) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `curve <name> = (<class>) : <winding>`"))?;
                let (class, value) = spec
                    .rsplit_once(':')
                    .ok_or_else(|| perr(line, "missing `: <winding>`"))?;
                let class = class
                    .trim()
                    .strip_prefix('(')
                    .and_then(|c| c.strip_suffix(')'))
                    .ok_or_else(|| perr(line, "class must be parenthesized"))?;
                let hclass: Vec<i64> = class
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| perr(line, format!("bad coordinate `{t}`"))))
                    .collect::<Result<_, _>>()?;
                let winding: i64 = value
                    .trim()
                    .parse()
                    .map_err(|_| perr(line, "bad winding value"))?;
                curves.push((line, HomologyCurve::new(name.trim(), hclass, winding)));
            }
            "arc" => {
                let (name, v) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `arc <name> = <value>`"))?;
                arcs.push((name.trim().to_string(), parse_half(line, v)?));
            }
            "word" => {
                word = rest.parse().map_err(|_| perr(line, "bad twist word"))?;
            }
            other => return Err(perr(line, format!("unknown key `{other}`"))),
        }
    }
    let genus = genus.ok_or_else(|| perr(0, "missing `genus`"))?;
    let context = WindingContext::new(modulus, genus, boundary);
    let mut function = WindingFunction::new(context.clone());
    let mut table = BTreeMap::new();
    let mut order = Vec::new();
    for (line, mut c) in curves {
        if c.hclass.len() != context.rank() {
            return Err(perr(
                line,
                format!("class has {} coordinates, expected {}", c.hclass.len(), context.rank()),
            ));
        }
        c.winding = context.residue(c.winding);
        function = function.with_value(c.name.clone(), c.winding);
        order.push(c.name.clone());
        if table.insert(c.name.clone(), c).is_some() {
            return Err(perr(line, "curve declared twice"));
        }
    }
    for (name, doubled) in arcs {
        function = function.with_arc_doubled(name, doubled);
    }
    for (name, _) in &word.letters {
        if !table.contains_key(name) {
            return Err(WindingError::UnknownCurve(name.clone()));
        }
    }
    Ok(WindingFile {
        context,
        curves: table,
        order,
        function,
        word,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_example() {
        let f = parse_winding_file(
            "genus 1\nmodulus 4\nboundary d1\ncurve a = (1 0 0) : 0\ncurve b = (0 1 0) : 7\narc t = 3/2\nword a b^-1\n",
        )
        .unwrap();
        assert_eq!(f.context.rank(), 3);
        assert_eq!(f.curves["b"].winding, 3);
        assert_eq!(f.function.arc_doubled("t"), Some(3));
        assert_eq!(f.word.letters.len(), 2);
        assert_eq!(f.order, vec!["a", "b"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_winding_file("modulus 2").is_err());
        assert!(matches!(
            parse_winding_file("genus 1\ncurve a = (1 0 0) : 0"),
            Err(WindingError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_winding_file("genus 1\ncurve a = (1 0) : 0\nword z"),
            Err(WindingError::UnknownCurve(_))
        ));
        assert!(parse_winding_file("genus 1\narc t = 1/3").is_err());
    }
}
