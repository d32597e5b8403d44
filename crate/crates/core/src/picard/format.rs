//! Textual lattice descriptions.
//!
//! ```text
//! # Hirzebruch surface F_2, basis (F, E)
//! name F2
//! rank 2
//! gram 0 1
//!      1 -2
//! canonical -4 -2
//! simply_connected true
//! jets {
//!   (3 1 : 1)    # E + 3F very ample
//!   (1 0 : 0)
//! }
//! ```
//!
//! Keys may be followed by an optional `=`. Line breaks, commas and extra
//! whitespace are insignificant; `#` starts a comment. `gram` is row-major
//! with `rank * rank` integers. Each jet entry is `(coords : level)`.

use std::sync::Arc;

use super::{JetLedger, PicardError, PicardLattice};

#[derive(Debug, Clone)]
pub struct LatticeFile {
    pub lattice: Arc<PicardLattice>,
    pub ledger: JetLedger,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Int(i64),
    Open,
    Close,
    LParen,
    RParen,
    Colon,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, PicardError> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut chars = line.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            match c {
                c if c.is_whitespace() || c == ',' || c == '=' => {
                    chars.next();
                }
                '{' | '}' | '(' | ')' | ':' => {
                    chars.next();
                    out.push((
                        lineno + 1,
                        match c {
                            '{' => Tok::Open,
                            '}' => Tok::Close,
                            '(' => Tok::LParen,
                            ')' => Tok::RParen,
                            _ => Tok::Colon,
                        },
                    ));
                }
                _ => {
                    let mut end = start;
                    while let Some(&(i, c)) = chars.peek() {
                        if c.is_whitespace() || ",={}():#".contains(c) {
                            break;
                        }
                        end = i + c.len_utf8();
                        chars.next();
                    }
                    let word = &line[start..end];
                    let tok = if word.starts_with(|c: char| c == '-' || c == '+' || c.is_ascii_digit()) {
                        Tok::Int(word.parse().map_err(|_| PicardError::Parse {
                            line: lineno + 1,
                            msg: format!("`{word}` is not an integer"),
                        })?)
                    } else {
                        Tok::Word(word.to_string())
                    };
                    out.push((lineno + 1, tok));
                }
            }
        }
    }
    Ok(out)
}

pub fn parse_lattice(src: &str) -> Result<LatticeFile, PicardError> {
    let toks = tokenize(src)?;
    let mut i = 0;
    let mut name = None;
    let mut rank: Option<usize> = None;
    let mut gram: Vec<i64> = Vec::new();
    let mut canonical: Vec<i64> = Vec::new();
    let mut simply_connected = true;
    let mut jets: Vec<(Vec<i64>, u32, usize)> = Vec::new();

    let err = |line: usize, msg: &str| PicardError::Parse {
        line,
        msg: msg.to_string(),
    };
    let ints = |i: &mut usize| {
        let mut v = Vec::new();
        while let Some((_, Tok::Int(n))) = toks.get(*i) {
            v.push(*n);
            *i += 1;
        }
        v
    };

    while i < toks.len() {
        let (line, tok) = &toks[i];
        let line = *line;
        i += 1;
        let Tok::Word(key) = tok else {
            return Err(err(line, "expected a key"));
        };
        match key.as_str() {
            "name" => match toks.get(i) {
                Some((_, Tok::Word(w))) => {
                    name = Some(w.clone());
                    i += 1;
                }
                Some((_, Tok::Int(n))) => {
                    name = Some(n.to_string());
                    i += 1;
                }
                _ => return Err(err(line, "`name` needs a value")),
            },
            "rank" => {
                let v = ints(&mut i);
                match v.as_slice() {
                    [r] if *r > 0 => rank = Some(*r as usize),
                    _ => return Err(err(line, "`rank` needs one positive integer")),
                }
            }
            "gram" => gram = ints(&mut i),
            "canonical" => canonical = ints(&mut i),
            "simply_connected" => match toks.get(i) {
                Some((_, Tok::Word(w))) if w == "true" || w == "false" => {
                    simply_connected = w == "true";
                    i += 1;
                }
                _ => return Err(err(line, "`simply_connected` must be true or false")),
            },
            "jets" => {
                if toks.get(i).map(|t| &t.1) != Some(&Tok::Open) {
                    return Err(err(line, "`jets` must be followed by `{`"));
                }
                i += 1;
                loop {
                    match toks.get(i) {
                        Some((_, Tok::Close)) => {
                            i += 1;
                            break;
                        }
                        Some((l, Tok::LParen)) => {
                            let l = *l;
                            i += 1;
                            let coords = ints(&mut i);
                            if toks.get(i).map(|t| &t.1) != Some(&Tok::Colon) {
                                return Err(err(l, "jet entry needs `:`"));
                            }
                            i += 1;
                            let level = match ints(&mut i).as_slice() {
                                [lv] if *lv >= 0 => *lv as u32,
                                _ => return Err(err(l, "jet level must be a nonnegative integer")),
                            };
                            if toks.get(i).map(|t| &t.1) != Some(&Tok::RParen) {
                                return Err(err(l, "jet entry needs `)`"));
                            }
                            i += 1;
                            jets.push((coords, level, l));
                        }
                        Some((l, _)) => return Err(err(*l, "malformed jets block")),
                        None => return Err(err(line, "unterminated jets block")),
                    }
                }
            }
            other => return Err(err(line, &format!("unknown key `{other}`"))),
        }
    }

    let rank = rank.unwrap_or(canonical.len());
    if canonical.len() != rank {
        return Err(err(0, "`canonical` length must equal `rank`"));
    }
    if gram.len() != rank * rank {
        return Err(err(0, "`gram` must hold rank*rank integers"));
    }
    let gram: Vec<Vec<i64>> = gram.chunks(rank).map(|c| c.to_vec()).collect();
    let lattice = PicardLattice::new(name, gram, canonical, simply_connected)?;
    let mut ledger = JetLedger::new(Arc::clone(&lattice));
    for (coords, level, line) in jets {
        let class = lattice.class(coords).map_err(|e| err(line, &e.to_string()))?;
        ledger.declare(&class, level, format!("declared in lattice file, line {line}"))?;
    }
    Ok(LatticeFile { lattice, ledger })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let src = "# Hirzebruch surface F_2\nname F2\nrank 2\ngram 0 1\n 1 -2\ncanonical -4 -2\nsimply_connected true\njets {\n (3 1 : 1) # very ample\n (1 0 : 0)\n}\n";
        let f = parse_lattice(src).unwrap();
        assert_eq!(f.lattice.name(), Some("F2"));
        assert_eq!(f.lattice.gram(), &[vec![0, 1], vec![1, -2]]);
        assert_eq!(f.ledger.len(), 2);
        let c = f.lattice.class(vec![3, 1]).unwrap();
        assert_eq!(f.ledger.level(&c), Some(1));
    }

    #[test]
    fn whitespace_and_equals_are_insignificant() {
        let a = parse_lattice("rank=1 gram=1 canonical=-3 name=P2").unwrap();
        let b = parse_lattice("name P2\n\nrank 1\ngram\n1\ncanonical -3").unwrap();
        assert_eq!(a.lattice, b.lattice);
    }

    #[test]
    fn errors_carry_lines() {
        assert!(matches!(
            parse_lattice("rank 1\ngram 1\ncanonical x3"),
            Err(PicardError::Parse { line: 3, .. }) | Err(PicardError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_lattice("rank 1\nfoo 2"),
            Err(PicardError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_lattice("rank 2\ngram 1 0 0 1\ncanonical 0 0"),
            Err(PicardError::Signature { .. })
        ));
    }
}
