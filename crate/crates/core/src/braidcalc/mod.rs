//! The abelianized calculus of simple braids on `d` boundary circles.
//!
//! `psi` sends a meridian twist `m(i,j)` to `e_i + e_j` and kills boundary
//! twists and declared stabilizer elements. Words are free: no braid
//! relations are applied, since `psi` is abelian.
//!
//! Word grammar, letters separated by whitespace or `*`:
//!
//! ```text
//! m(i,j)^e      meridian twist about a curve enclosing boundaries i and j
//! b(i)^e        twist about boundary circle i
//! s(tag)^e      declared element of the principal stabilizer
//! p(i;v1 .. v2g)^e  point-push of point i along a loop of class v
//! h(i,j)^e      half-twist exchanging points i and j
//! ```
//!
//! `p` and `h` only carry homology labels for `lambda`; `psi` rejects them.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("meridian needs two distinct indices, got ({0},{0})")]
    RepeatedIndex(usize),
    #[error("need d >= {min}, got {d}")]
    TooFewPoints { d: usize, min: usize },
    #[error("coordinate sum {0} is odd: not in the image of psi")]
    OddSum(i64),
    #[error("psi is not defined on `{0}`; tag it as a stabilizer element if it is one")]
    PsiUndefined(String),
    #[error("`{0}` has no homology label")]
    Unlabeled(String),
    #[error("label of `{name}` has length {got}, expected {expected}")]
    LabelLength {
        name: String,
        got: usize,
        expected: usize,
    },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidGenerator {
    /// Twist about a curve enclosing boundary circles `i < j`.
    Meridian(usize, usize),
    /// Twist about boundary circle `i`.
    Boundary(usize),
    /// An element known to lie in the principal stabilizer, with an identifying tag.
    Stabilizer(String),
    /// Point-push of point `i` along a loop with the given homology class.
    PointPush(usize, Vec<i64>),
    /// Half-twist exchanging points `i` and `j`.
    HalfTwist(usize, usize),
}

impl BraidGenerator {
    /// Meridian with indices put in increasing order.
    pub fn meridian(i: usize, j: usize) -> Result<Self, BraidError> {
        if i == j {
            return Err(BraidError::RepeatedIndex(i));
        }
        Ok(BraidGenerator::Meridian(i.min(j), i.max(j)))
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGenerator::Meridian(i, j) => write!(f, "m({i},{j})"),
            BraidGenerator::Boundary(i) => write!(f, "b({i})"),
            BraidGenerator::Stabilizer(t) => write!(f, "s({t})"),
            BraidGenerator::PointPush(i, v) => {
                let v: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "p({i};{})", v.join(" "))
            }
            BraidGenerator::HalfTwist(i, j) => write!(f, "h({i},{j})"),
        }
    }
}

/// A generator raised to an integer power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidLetter {
    pub generator: BraidGenerator,
    pub exponent: i64,
}

impl BraidLetter {
    pub fn new(generator: BraidGenerator, exponent: i64) -> Self {
        BraidLetter {
            generator,
            exponent,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.exponent)
        }
    }
}

pub fn format_word(word: &[BraidLetter]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn parse_word(src: &str) -> Result<Vec<BraidLetter>, BraidError> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let err = |pos: usize, msg: &str| BraidError::Parse {
        pos,
        msg: msg.to_string(),
    };
    let index = |s: &str, at: usize| -> Result<usize, BraidError> {
        s.trim()
            .parse::<usize>()
            .map_err(|_| err(at, &format!("bad index `{}`", s.trim())))
    };
    loop {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*') {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        if src[pos..] == *"1" {
            break;
        }
        let kind = bytes[pos];
        let start = pos;
        pos += 1;
        if bytes.get(pos) != Some(&b'(') {
            return Err(err(pos, "expected `(`"));
        }
        let close = src[pos..]
            .find(')')
            .map(|k| pos + k)
            .ok_or_else(|| err(pos, "missing `)`"))?;
        let inner = &src[pos + 1..close];
        pos = close + 1;
        let generator = match kind {
            b'm' | b'h' => {
                let (i, j) = inner
                    .split_once(',')
                    .ok_or_else(|| err(start, "expected two indices"))?;
                let (i, j) = (index(i, start)?, index(j, start)?);
                if kind == b'm' {
                    BraidGenerator::meridian(i, j)?
                } else if i == j {
                    return Err(BraidError::RepeatedIndex(i));
                } else {
                    BraidGenerator::HalfTwist(i.min(j), i.max(j))
                }
            }
            b'b' => BraidGenerator::Boundary(index(inner, start)?),
            b's' => {
                let tag = inner.trim();
                if tag.is_empty() {
                    return Err(err(start, "stabilizer elements need a tag"));
                }
                BraidGenerator::Stabilizer(tag.to_string())
            }
            b'p' => {
                let (i, class) = inner
                    .split_once(';')
                    .ok_or_else(|| err(start, "expected `p(i; class)`"))?;
                let class = class
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| err(start, "bad class entry")))
                    .collect::<Result<Vec<_>, _>>()?;
                BraidGenerator::PointPush(index(i, start)?, class)
            }
            _ => return Err(err(start, "unknown generator")),
        };
        let mut exponent = 1i64;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let s = pos;
            if matches!(bytes.get(pos), Some(b'-') | Some(b'+')) {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exponent = src[s..pos].parse().map_err(|_| err(s, "bad exponent"))?;
        }
        out.push(BraidLetter::new(generator, exponent));
    }
    Ok(out)
}

/// A vector in `Z^d` with even coordinate sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiImage(Vec<i64>);

impl PsiImage {
    pub fn new(v: Vec<i64>) -> Result<Self, BraidError> {
        let s: i64 = v.iter().sum();
        if s % 2 != 0 {
            return Err(BraidError::OddSum(s));
        }
        Ok(PsiImage(v))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for PsiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_index(i: usize, d: usize) -> Result<(), BraidError> {
    if i == 0 || i > d {
        Err(BraidError::IndexOutOfRange { index: i, d })
    } else {
        Ok(())
    }
}

pub fn psi(word: &[BraidLetter], d: usize) -> Result<PsiImage, BraidError> {
    if d < 3 {
        return Err(BraidError::TooFewPoints { d, min: 3 });
    }
    let mut v = vec![0i64; d];
    for letter in word {
        match &letter.generator {
            BraidGenerator::Meridian(i, j) => {
                check_index(*i, d)?;
                check_index(*j, d)?;
                v[i - 1] += letter.exponent;
                v[j - 1] += letter.exponent;
            }
            BraidGenerator::Boundary(i) => check_index(*i, d)?,
            BraidGenerator::Stabilizer(_) => {}
            other => return Err(BraidError::PsiUndefined(other.to_string())),
        }
    }
    PsiImage::new(v)
}

/// Membership in the principal stabilizer, read off from `psi = 0`.
pub fn in_stabilizer(word: &[BraidLetter], d: usize) -> Result<bool, BraidError> {
    Ok(psi(word, d)?.is_zero())
}

/// The correction word that cancels a `psi`-image `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionPlan {
    /// `m(3,i)^{-k_i}` for `i >= 4`.
    pub stage1: Vec<BraidLetter>,
    /// `(m(3,4) m(3,5) m(4,5)^{-1})^t` with `t = (k2' - k1' - k3') / 2`, written out.
    pub stage2: Vec<BraidLetter>,
    /// `m(1,2)^{-k1'}` then `m(2,3)^l`.
    pub stage3: Vec<BraidLetter>,
    /// `(k1', k2', k3')`.
    pub primed: [i64; 3],
    /// Exponent of the twist about `m(2,3)`.
    pub ell: i64,
}

impl CorrectionPlan {
    pub fn word(&self) -> Vec<BraidLetter> {
        let mut w = self.stage1.clone();
        w.extend(self.stage2.iter().cloned());
        w.extend(self.stage3.iter().cloned());
        w
    }
}

pub fn main_lemma_plan(k: &[i64]) -> Result<CorrectionPlan, BraidError> {
    let d = k.len();
    if d < 6 {
        return Err(BraidError::TooFewPoints { d, min: 6 });
    }
    let total: i64 = k.iter().sum();
    if total % 2 != 0 {
        return Err(BraidError::OddSum(total));
    }
    let m = |i, j, e| BraidLetter::new(BraidGenerator::Meridian(i, j), e);

    let stage1: Vec<BraidLetter> = (4..=d)
        .filter(|&i| k[i - 1] != 0)
        .map(|i| m(3, i, -k[i - 1]))
        .collect();
    let (k1, k2) = (k[0], k[1]);
    let k3 = k[2] - k[3..].iter().sum::<i64>();
    if (k1 + k2 + k3) % 2 != 0 {
        return Err(BraidError::Internal("primed exponents have odd sum".into()));
    }
    let t = (k2 - k1 - k3) / 2;
    let block = if t >= 0 {
        [m(3, 4, 1), m(3, 5, 1), m(4, 5, -1)]
    } else {
        [m(4, 5, 1), m(3, 5, -1), m(3, 4, -1)]
    };
    let stage2: Vec<BraidLetter> = (0..t.abs()).flat_map(|_| block.clone()).collect();
    let ell = k1 - k2;
    let mut stage3 = Vec::new();
    if k1 != 0 {
        stage3.push(m(1, 2, -k1));
    }
    if ell != 0 {
        stage3.push(m(2, 3, ell));
    }
    let plan = CorrectionPlan {
        stage1,
        stage2,
        stage3,
        primed: [k1, k2, k3],
        ell,
    };
    let image = psi(&plan.word(), d)?;
    if image.as_slice().iter().zip(k).any(|(a, b)| a + b != 0) {
        return Err(BraidError::Internal(format!(
            "plan leaves residue {image} on input {k:?}"
        )));
    }
    Ok(plan)
}

/// Renames point indices: `i` becomes `labels[i - 1]`.
pub fn relabel(word: &[BraidLetter], labels: &[usize]) -> Result<Vec<BraidLetter>, BraidError> {
    let d = labels.len();
    let map = |i: usize| -> Result<usize, BraidError> {
        check_index(i, d)?;
        Ok(labels[i - 1])
    };
    word.iter()
        .map(|l| {
            let generator = match &l.generator {
                BraidGenerator::Meridian(i, j) => BraidGenerator::meridian(map(*i)?, map(*j)?)?,
                BraidGenerator::HalfTwist(i, j) => {
                    let (a, b) = (map(*i)?, map(*j)?);
                    BraidGenerator::HalfTwist(a.min(b), a.max(b))
                }
                BraidGenerator::Boundary(i) => BraidGenerator::Boundary(map(*i)?),
                BraidGenerator::PointPush(i, c) => BraidGenerator::PointPush(map(*i)?, c.clone()),
                BraidGenerator::Stabilizer(t) => BraidGenerator::Stabilizer(t.clone()),
            };
            Ok(BraidLetter::new(generator, l.exponent))
        })
        .collect()
}

/// [`main_lemma_plan`] with the roles of points `1, 2, 3, ..` played by
/// `labels[0], labels[1], labels[2], ..`. `labels` is a permutation of `1..=d`.
pub fn main_lemma_plan_relabeled(k: &[i64], labels: &[usize]) -> Result<Vec<BraidLetter>, BraidError> {
    let d = k.len();
    if labels.len() != d {
        return Err(BraidError::LabelLength {
            name: "labels".into(),
            got: labels.len(),
            expected: d,
        });
    }
    let mut seen = vec![false; d];
    for &i in labels {
        check_index(i, d)?;
        if std::mem::replace(&mut seen[i - 1], true) {
            return Err(BraidError::RepeatedIndex(i));
        }
    }
    let local: Vec<i64> = labels.iter().map(|&i| k[i - 1]).collect();
    relabel(&main_lemma_plan(&local)?.word(), labels)
}

/// Total homology class traced by a word on a genus-`g` surface.
pub fn lambda(word: &[BraidLetter], genus: usize) -> Result<Vec<i64>, BraidError> {
    let mut v = vec![0i64; 2 * genus];
    for letter in word {
        match &letter.generator {
            BraidGenerator::PointPush(_, class) => {
                if class.len() != 2 * genus {
                    return Err(BraidError::LabelLength {
                        name: letter.generator.to_string(),
                        got: class.len(),
                        expected: 2 * genus,
                    });
                }
                for (a, c) in v.iter_mut().zip(class) {
                    *a += letter.exponent * c;
                }
            }
            BraidGenerator::Meridian(..)
            | BraidGenerator::Boundary(_)
            | BraidGenerator::HalfTwist(..) => {}
            BraidGenerator::Stabilizer(_) => {
                return Err(BraidError::Unlabeled(letter.generator.to_string()))
            }
        }
    }
    Ok(v)
}
