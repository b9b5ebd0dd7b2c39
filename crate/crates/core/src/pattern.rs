//! Pattern notation for colorings of `P_n⊙pK_1` and `C_n⊙pK_1`.
//!
//! A pattern lists spine colors left to right. Pendant colors are written in
//! parentheses after a spine vertex of color 1 (`21(3)41(2)`); every other
//! spine vertex has all of its pendants colored 1. Square brackets mark a
//! circular pattern (`[234]`). Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{is_packing_coloring_graph, Coloring};
use crate::error::{Error, Result};
use crate::graph::{CoronaLayout, Family, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub color: u8,
    pub pendants: Option<Vec<u8>>,
}

impl Token {
    pub fn plain(color: u8) -> Self {
        Token { color, pendants: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    tokens: Vec<Token>,
    circular: bool,
}

fn digit(c: u8) -> Result<()> {
    if (1..=9).contains(&c) {
        Ok(())
    } else {
        Err(Error::Pattern(format!("color {c} is not a single digit 1-9")))
    }
}

impl Pattern {
    pub fn new(tokens: Vec<Token>, circular: bool) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::Pattern("empty pattern".into()));
        }
        for t in &tokens {
            digit(t.color)?;
            if let Some(list) = &t.pendants {
                if t.color != 1 {
                    return Err(Error::Pattern(format!("pendant list after color {}", t.color)));
                }
                if list.is_empty() {
                    return Err(Error::Pattern("empty pendant list".into()));
                }
                for &c in list {
                    digit(c)?;
                }
            }
        }
        Ok(Pattern { tokens, circular })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn is_circular(&self) -> bool {
        self.circular
    }

    pub fn circular(&self) -> Pattern {
        Pattern { tokens: self.tokens.clone(), circular: true }
    }

    pub fn linear(&self) -> Pattern {
        Pattern { tokens: self.tokens.clone(), circular: false }
    }

    /// Linear pattern made of the first `n` tokens.
    pub fn prefix(&self, n: usize) -> Result<Pattern> {
        if n == 0 || n > self.len() {
            return Err(Error::Pattern(format!("no prefix of length {n} in a pattern of length {}", self.len())));
        }
        Pattern::new(self.tokens[..n].to_vec(), false)
    }

    /// `self` followed by `other`, keeping the circularity of `self`.
    pub fn concat(&self, other: &Pattern) -> Pattern {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        Pattern { tokens, circular: self.circular }
    }

    pub fn max_color(&self) -> u8 {
        self.tokens
            .iter()
            .flat_map(|t| std::iter::once(t.color).chain(t.pendants.iter().flatten().copied()))
            .max()
            .unwrap_or(0)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pattern(s)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.circular {
            f.write_str("[")?;
        }
        for t in &self.tokens {
            write!(f, "{}", t.color)?;
            if let Some(list) = &t.pendants {
                f.write_str("(")?;
                for c in list {
                    write!(f, "{c}")?;
                }
                f.write_str(")")?;
            }
        }
        if self.circular {
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, circular) = match (chars.first(), chars.last()) {
        (Some('['), Some(']')) if chars.len() >= 2 => (&chars[1..chars.len() - 1], true),
        (Some('['), _) => return Err(Error::Pattern("unclosed '['".into())),
        (_, Some(']')) => return Err(Error::Pattern("unmatched ']'".into())),
        _ => (&chars[..], false),
    };
    let mut tokens: Vec<Token> = Vec::new();
    let mut list: Option<Vec<u8>> = None;
    for &c in body {
        match c {
            '0'..='9' => {
                let d = c as u8 - b'0';
                match list.as_mut() {
                    Some(l) => l.push(d),
                    None => tokens.push(Token::plain(d)),
                }
            }
            '(' => {
                if list.is_some() {
                    return Err(Error::Pattern("nested '('".into()));
                }
                match tokens.last() {
                    Some(t) if t.pendants.is_none() => list = Some(Vec::new()),
                    Some(_) => return Err(Error::Pattern("two pendant lists on one token".into())),
                    None => return Err(Error::Pattern("pendant list without a spine color".into())),
                }
            }
            ')' => match list.take() {
                Some(l) => tokens.last_mut().expect("checked at '('").pendants = Some(l),
                None => return Err(Error::Pattern("unmatched ')'".into())),
            },
            '[' | ']' => return Err(Error::Pattern("brackets only around the whole pattern".into())),
            other => return Err(Error::Pattern(format!("unexpected character {other:?}"))),
        }
    }
    if list.is_some() {
        return Err(Error::Pattern("unclosed '('".into()));
    }
    Pattern::new(tokens, circular)
}

/// How pendant colors of color-1 spine vertices are resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ApplyOptions {
    /// Used for color-1 tokens written without a list.
    pub default_pendants: Option<Vec<u8>>,
    /// Allow lists longer than p (the first p entries are used).
    pub pendant_prefix: bool,
}

impl ApplyOptions {
    pub fn with_defaults(defaults: &[u8]) -> Self {
        ApplyOptions { default_pendants: Some(defaults.to_vec()), pendant_prefix: false }
    }
}

fn pendant_colors<'a>(t: &'a Token, i: usize, p: usize, opts: &'a ApplyOptions) -> Result<Option<&'a [u8]>> {
    if t.color != 1 || p == 0 {
        return Ok(None);
    }
    let list = match (&t.pendants, &opts.default_pendants) {
        (Some(l), _) | (None, Some(l)) => l.as_slice(),
        (None, None) => {
            return Err(Error::Pattern(format!("token {i} has color 1 but no pendant colors")));
        }
    };
    if list.len() < p || (list.len() > p && !opts.pendant_prefix) {
        return Err(Error::Pattern(format!(
            "token {i} lists {} pendant colors for p = {p}",
            list.len()
        )));
    }
    Ok(Some(&list[..p]))
}

/// Natural graph of a pattern: `C_n⊙pK_1` if circular, else `P_n⊙pK_1`.
pub fn pattern_graph(pat: &Pattern, p: usize) -> Result<Graph> {
    let f = if pat.circular { Family::Cycle } else { Family::Path };
    Graph::family(f, pat.len(), p)
}

/// Coloring of the corona layout of `pat` with spine length `n`.
pub fn apply_pattern(pat: &Pattern, n: usize, p: usize, opts: &ApplyOptions) -> Result<Coloring> {
    if pat.len() != n {
        return Err(Error::Pattern(format!("pattern has {} tokens for spine length {n}", pat.len())));
    }
    let layout = CoronaLayout { family: if pat.circular { Family::Cycle } else { Family::Path }, n, p };
    let mut col = vec![1u32; layout.vertex_count()];
    for (i, t) in pat.tokens.iter().enumerate() {
        col[i] = t.color as u32;
        if let Some(list) = pendant_colors(t, i, p, opts)? {
            for (j, &c) in list.iter().enumerate() {
                col[layout.pendant(i, j)] = c as u32;
            }
        }
    }
    Coloring::new(col)
}

/// Applies the pattern to its natural graph and runs the checker.
pub fn is_valid_pattern(pat: &Pattern, p: usize, opts: &ApplyOptions) -> bool {
    let Ok(g) = pattern_graph(pat, p) else { return false };
    match apply_pattern(pat, pat.len(), p, opts) {
        Ok(col) => is_packing_coloring_graph(&g, &col),
        Err(_) => false,
    }
}

/// `v` is compatible with `[u]` when `[uv]` is valid.
pub fn is_compatible(u: &Pattern, v: &Pattern, p: usize, opts: &ApplyOptions) -> bool {
    is_valid_pattern(&compose(u, 1, std::slice::from_ref(v)), p, opts)
}

/// Circular pattern: `base` repeated `repetitions` times, then the tails.
pub fn compose(base: &Pattern, repetitions: usize, tails: &[Pattern]) -> Pattern {
    let mut tokens = Vec::new();
    for _ in 0..repetitions {
        tokens.extend(base.tokens.iter().cloned());
    }
    for t in tails {
        tokens.extend(t.tokens.iter().cloned());
    }
    Pattern { tokens, circular: true }
}

/// Coloring of `P_n⊙pK_1` cut out of a long enough cycle colored by the
/// circular pattern: `C_m` with `m` the least multiple of the pattern length
/// that is at least `max(n, 2·len)`.
pub fn unroll(pat: &Pattern, n: usize, p: usize, opts: &ApplyOptions) -> Result<Coloring> {
    let len = pat.len();
    let need = n.max(2 * len);
    let m = need.div_ceil(len) * len;
    let big = compose(pat, m / len, &[]);
    let col = apply_pattern(&big, m, p, opts)?;
    let cyc = CoronaLayout { family: Family::Cycle, n: m, p };
    let mut keep: Vec<usize> = (0..n).collect();
    for i in 0..n {
        keep.extend(cyc.pendants(i));
    }
    Ok(col.restrict(&keep))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> Pattern {
        parse_pattern(s).unwrap()
    }

    #[test]
    fn parses_notation() {
        let a = pat("21(3)41(2)");
        assert!(!a.is_circular());
        assert_eq!(a.len(), 4);
        assert_eq!(a.tokens()[1].pendants, Some(vec![3]));
        assert_eq!(a.tokens()[3].pendants, Some(vec![2]));
        let b = pat("[23425 62342 57]");
        assert!(b.is_circular());
        assert_eq!(b.len(), 12);
        assert!(b.tokens().iter().all(|t| t.pendants.is_none()));
        assert_eq!(b.to_string(), "[234256234257]");
    }

    #[test]
    fn parse_errors() {
        for bad in ["1(2", "", "[]", "2(3)", "1()", "1(2(3))", "[123", "123]", "12a", "1(2)(3)", "(2)", "102", "1[2]"] {
            assert!(parse_pattern(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn apply_checks_lists() {
        let opts = ApplyOptions::default();
        let c = apply_pattern(&pat("21(3)41(2)"), 4, 1, &opts).unwrap();
        assert_eq!(c.colors(), &[2, 1, 4, 1, 1, 3, 1, 2]);
        assert!(apply_pattern(&pat("21(3)41(2)"), 5, 1, &opts).is_err());
        assert!(apply_pattern(&pat("1(23)"), 1, 1, &opts).is_err());
        let pre = ApplyOptions { pendant_prefix: true, ..Default::default() };
        assert_eq!(apply_pattern(&pat("1(23)"), 1, 1, &pre).unwrap().colors(), &[1, 2]);
        assert!(apply_pattern(&pat("1(2)"), 1, 2, &pre).is_err());
        assert!(apply_pattern(&pat("12"), 2, 1, &opts).is_err());
        let d = ApplyOptions::with_defaults(&[2, 3, 4]);
        assert_eq!(apply_pattern(&pat("15"), 2, 3, &d).unwrap().colors(), &[1, 5, 2, 3, 4, 1, 1, 1]);
    }

    #[test]
    fn validity_examples() {
        let o = ApplyOptions::default();
        assert!(is_valid_pattern(&pat("[234]"), 4, &o));
        assert!(is_valid_pattern(&pat("[23425324678]"), 4, &o));
        assert!(!is_valid_pattern(&pat("[2]"), 1, &o));
        assert!(is_valid_pattern(&pat("[1(24)3251(24)3267]"), 2, &o));
        assert!(is_compatible(&pat("[23425367]"), &pat("2342532467"), 4, &o));
        // [234234]: the two 3s are at distance 3
        assert!(!is_compatible(&pat("[234]"), &pat("234"), 3, &o));
    }

    #[test]
    fn compose_and_unroll() {
        let u = pat("[1(23)423526]");
        assert_eq!(compose(&u, 0, &[pat("234")]).to_string(), "[234]");
        assert_eq!(compose(&u, 2, &[]).len(), 14);
        let o = ApplyOptions::default();
        let c = unroll(&pat("[1(36)243256234 25]"), 12, 2, &o).unwrap();
        assert_eq!(c.len(), 36);
        assert_eq!(c.max_color(), 6);
        let g = Graph::family(Family::Path, 12, 2).unwrap();
        assert!(is_packing_coloring_graph(&g, &c));
    }
}
