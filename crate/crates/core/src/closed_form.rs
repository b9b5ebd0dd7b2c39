//! Exact packing chromatic numbers and optimal colorings for paths, cycles
//! and their generalized coronae.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{graph_violation, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::library as lib;
use crate::pattern::{apply_pattern, compose, parse_pattern, unroll, ApplyOptions, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphFamily {
    Path,
    Cycle,
    PathCorona,
    CycleCorona,
}

impl GraphFamily {
    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Cycle => "cycle",
            GraphFamily::PathCorona => "path-corona",
            GraphFamily::CycleCorona => "cycle-corona",
        }
    }

    pub fn base(self) -> Family {
        match self {
            GraphFamily::Path | GraphFamily::PathCorona => Family::Path,
            GraphFamily::Cycle | GraphFamily::CycleCorona => Family::Cycle,
        }
    }

    pub fn is_corona(self) -> bool {
        matches!(self, GraphFamily::PathCorona | GraphFamily::CycleCorona)
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "path" => Ok(GraphFamily::Path),
            "cycle" => Ok(GraphFamily::Cycle),
            "path-corona" => Ok(GraphFamily::PathCorona),
            "cycle-corona" => Ok(GraphFamily::CycleCorona),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyQuery {
    pub family: GraphFamily,
    pub n: usize,
    pub p: usize,
}

impl FamilyQuery {
    pub fn new(family: GraphFamily, n: usize, p: usize) -> Result<Self> {
        let q = FamilyQuery { family, n, p };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let min_n = match self.family.base() {
            Family::Path => 1,
            Family::Cycle => 3,
        };
        if self.n < min_n {
            return Err(Error::InvalidArgument(format!("{} needs n >= {min_n}", self.family)));
        }
        match (self.family.is_corona(), self.p) {
            (true, 0) => Err(Error::InvalidArgument(format!("{} needs p >= 1", self.family))),
            (false, p) if p > 0 => Err(Error::InvalidArgument(format!("{} takes no pendants", self.family))),
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        Graph::family(self.family.base(), self.n, self.p)
    }
}

impl fmt::Display for FamilyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} p={}", self.family, self.n, self.p)
    }
}

pub fn cycle_3k1_needs_seven(n: usize) -> bool {
    lib::CYCLE_3K1_SEVEN.binary_search(&n).is_ok()
}

pub fn pcn_closed_form(q: &FamilyQuery) -> Result<u32> {
    q.validate()?;
    let (n, p) = (q.n, q.p);
    let v = match q.family {
        GraphFamily::Path => match n {
            1 => 1,
            2 | 3 => 2,
            _ => 3,
        },
        GraphFamily::Cycle => {
            if n == 3 || n % 4 == 0 {
                3
            } else {
                4
            }
        }
        GraphFamily::PathCorona => match (p, n) {
            (_, 1) => 2,
            (_, 2) => 3,
            (1, 3) => 3,
            (_, 3 | 4) => 4,
            (1, 5..=9) => 4,
            (1, _) => 5,
            (2, 5..=11) => 5,
            (2, _) => 6,
            (3, 5..=8) => 5,
            (3, _) => 6,
            (_, n) if n <= 8 => 5,
            (_, n) if n <= 34 => 6,
            _ => 7,
        },
        GraphFamily::CycleCorona => match (p, n) {
            (1, 3 | 4) => 4,
            (1, _) => 5,
            (_, 3) => 4,
            (_, 4) => 5,
            (2, 9) => 7,
            (2, _) => 6,
            (_, 5 | 6) => 6,
            (3, n) if cycle_3k1_needs_seven(n) => 7,
            (3, _) => 6,
            (_, 11) => 8,
            _ => 7,
        },
    };
    Ok(v)
}

fn pat(s: &str) -> Pattern {
    parse_pattern(s).expect("stored patterns parse")
}

fn repeat_prefix(period: &str, n: usize) -> Pattern {
    let unit = pat(period);
    compose(&unit, n.div_ceil(unit.len()), &[]).prefix(n).expect("long enough")
}

/// Pattern for `C_n⊙pK_1` with p ≥ 4 (never colors the spine 1).
fn cycle_p4(n: usize) -> Pattern {
    match n {
        3..=6 => pat(lib::CYCLE_SMALL[n - 3]),
        7..=15 => pat(lib::CYCLE_P4_MID[n - 7]),
        _ => {
            let (q, r) = (n / 8, n % 8);
            let base = pat(lib::CYCLE_P4_BASE);
            if r == 3 {
                compose(&base, q - 2, &[pat(lib::CYCLE_P4_NINETEEN)])
            } else {
                compose(&base, q - 1, &[pat(lib::CYCLE_P4_MID[1 + r])])
            }
        }
    }
}

fn cycle_2k1(n: usize) -> Pattern {
    match n {
        3..=6 => pat(lib::CYCLE_SMALL[n - 3]),
        7..=13 => pat(lib::CYCLE_2K1_MID[n - 7]),
        _ => {
            let (q, r) = (n / 7, n % 7);
            let tail = match r {
                2 => pat(lib::CYCLE_2K1_NINE_TAIL),
                4 => pat(lib::CYCLE_2K1_ELEVEN_TAIL),
                _ => pat(lib::CYCLE_2K1_MID[r]),
            };
            compose(&pat(lib::CYCLE_2K1_BASE), q - 1, &[tail])
        }
    }
}

fn block(len: usize) -> Pattern {
    let (_, s) = lib::CYCLE_3K1_BLOCKS.iter().find(|(n, _)| *n == len).expect("block length");
    pat(s)
}

/// Block composition for `C_n⊙3K_1`, if n is reachable.
pub fn cycle_3k1_composition(n: usize) -> Option<Pattern> {
    let (q, r) = (n / 14, n % 14);
    let (min, drop, adds) = lib::CYCLE_3K1_RECIPES[r];
    if n < min {
        return None;
    }
    let tails: Vec<Pattern> = adds.iter().map(|&l| block(l)).collect();
    Some(compose(&block(14), q - drop, &tails))
}

fn cycle_3k1(n: usize) -> Result<(Pattern, ApplyOptions)> {
    let none = ApplyOptions::default();
    Ok(match n {
        3..=6 => (pat(lib::CYCLE_SMALL[n - 3]), none),
        11 => (pat(lib::CYCLE_3K1_ELEVEN), none),
        _ if cycle_3k1_needs_seven(n) => (cycle_p4(n), none),
        _ => {
            let p = cycle_3k1_composition(n)
                .ok_or_else(|| Error::Internal(format!("no Block composition for n = {n}")))?;
            (p, ApplyOptions::with_defaults(&lib::CYCLE_3K1_PENDANTS))
        }
    })
}

fn build(q: &FamilyQuery) -> Result<Coloring> {
    let (n, p) = (q.n, q.p);
    let none = ApplyOptions::default();
    let linear = |s: &str, n: usize| -> Result<Coloring> { apply_pattern(&pat(s).prefix(n)?, n, p, &none) };
    match q.family {
        GraphFamily::Path => apply_pattern(&repeat_prefix("1213", n), n, 0, &none),
        GraphFamily::Cycle => {
            let s = if n == 3 {
                "[123]".to_string()
            } else {
                format!("[{}{}]", "1213".repeat(n / 4), ["", "4", "14", "124"][n % 4])
            };
            apply_pattern(&pat(&s), n, 0, &none)
        }
        GraphFamily::PathCorona => match (p, n) {
            (1, 1..=9) => linear(lib::PATH_K1_SMALL[n - 1], n),
            (1, _) => apply_pattern(&repeat_prefix(lib::PATH_K1_PERIOD, n), n, p, &none),
            (2 | 3, 1..=4) => linear(lib::PATH_2K1_FOUR, n),
            (2, 5..=11) => linear(lib::PATH_2K1_ELEVEN, n),
            (2, _) => unroll(&pat(lib::PATH_2K1_CIRCULAR), n, p, &none),
            (3, 5..=8) => linear(lib::PATH_FIVE, n),
            (3, _) => unroll(&pat(lib::PATH_3K1_CIRCULAR), n, p, &none),
            (_, n) if n <= 8 => linear(lib::PATH_FIVE, n),
            (_, n) if n <= 34 => linear(lib::PATH_P4_LONG, n),
            _ => unroll(&pat(lib::PATH_P4_CIRCULAR), n, p, &none),
        },
        GraphFamily::CycleCorona => match p {
            1 => {
                let pt = if n <= 7 {
                    pat(lib::CYCLE_K1_SMALL[n - 3])
                } else {
                    let tail = pat(lib::CYCLE_K1_TAILS[n % 4]);
                    compose(&pat(lib::CYCLE_K1_BLOCK), (n - tail.len()) / 4, &[tail])
                };
                apply_pattern(&pt, n, p, &none)
            }
            2 => apply_pattern(&cycle_2k1(n), n, p, &none),
            3 => {
                let (pt, opts) = cycle_3k1(n)?;
                apply_pattern(&pt, n, p, &opts)
            }
            _ => apply_pattern(&cycle_p4(n), n, p, &none),
        },
    }
}

/// An optimal packing coloring of the queried graph, checked before return.
pub fn construct_coloring(q: &FamilyQuery) -> Result<Coloring> {
    let k = pcn_closed_form(q)?;
    let col = build(q)?;
    let g = q.graph()?;
    if let Some(v) = graph_violation(&g, &col)? {
        return Err(Error::Internal(format!("constructed coloring of {q} is invalid: {v}")));
    }
    if col.max_color() != k {
        return Err(Error::Internal(format!("constructed coloring of {q} uses {} colors, expected {k}", col.max_color())));
    }
    Ok(col)
}

/// Which spine vertex is assumed to get color 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinePosition {
    Endpoint,
    Interior,
    Cycle,
}

/// A spine vertex of color 1 has its neighbors pairwise at distance 2, so
/// they need distinct colors above 1: at least `degree + 1` colors overall.
pub fn forced_color_lower_bound(q: &FamilyQuery, pos: SpinePosition) -> Result<u32> {
    q.validate()?;
    let v = match (q.family, pos) {
        (GraphFamily::PathCorona, SpinePosition::Endpoint) => 0,
        (GraphFamily::PathCorona, SpinePosition::Interior) if q.n >= 3 => 1,
        (GraphFamily::CycleCorona, SpinePosition::Cycle) => 0,
        _ => return Err(Error::InvalidArgument(format!("no {pos:?} spine vertex in {q}"))),
    };
    Ok(q.graph()?.degree(v) as u32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(f: GraphFamily, n: usize, p: usize) -> FamilyQuery {
        FamilyQuery::new(f, n, p).unwrap()
    }

    #[test]
    fn headline_values() {
        use GraphFamily::*;
        assert_eq!(pcn_closed_form(&q(PathCorona, 9, 1)).unwrap(), 4);
        assert_eq!(pcn_closed_form(&q(PathCorona, 10, 1)).unwrap(), 5);
        assert_eq!(pcn_closed_form(&q(CycleCorona, 11, 4)).unwrap(), 8);
        assert_eq!(pcn_closed_form(&q(PathCorona, 34, 5)).unwrap(), 6);
        assert_eq!(pcn_closed_form(&q(PathCorona, 35, 5)).unwrap(), 7);
        assert_eq!(pcn_closed_form(&q(CycleCorona, 9, 2)).unwrap(), 7);
        assert_eq!(pcn_closed_form(&q(Path, 3, 0)).unwrap(), 2);
    }

    #[test]
    fn invalid_queries() {
        assert!(FamilyQuery::new(GraphFamily::Cycle, 2, 0).is_err());
        assert!(FamilyQuery::new(GraphFamily::PathCorona, 3, 0).is_err());
        assert!(FamilyQuery::new(GraphFamily::Path, 3, 1).is_err());
    }

    #[test]
    fn forced_bounds() {
        use GraphFamily::*;
        assert_eq!(forced_color_lower_bound(&q(PathCorona, 5, 4), SpinePosition::Interior).unwrap(), 7);
        assert_eq!(forced_color_lower_bound(&q(PathCorona, 5, 2), SpinePosition::Endpoint).unwrap(), 4);
        assert_eq!(forced_color_lower_bound(&q(CycleCorona, 5, 3), SpinePosition::Cycle).unwrap(), 6);
        assert!(forced_color_lower_bound(&q(CycleCorona, 5, 3), SpinePosition::Endpoint).is_err());
    }

    #[test]
    fn examples_from_proofs() {
        use GraphFamily::*;
        let c = construct_coloring(&q(PathCorona, 10, 1)).unwrap();
        for i in 1..=10usize {
            let spine = match i % 4 {
                1 | 3 => 1,
                2 => 2,
                _ => 3,
            };
            let pend = match i % 4 {
                0 | 2 => 1,
                1 => 4,
                _ => 5,
            };
            assert_eq!((c.get(i - 1), c.get(10 + i - 1)), (spine, pend), "position {i}");
        }
        let t = construct_coloring(&q(CycleCorona, 23, 3)).unwrap();
        let spine: String = t.colors()[..23].iter().map(|c| c.to_string()).collect();
        assert_eq!(format!("[{spine}]"), lib::CYCLE_3K1_BLOCKS[1].1.replace(' ', ""));
        assert_eq!(construct_coloring(&q(CycleCorona, 37, 3)).unwrap().max_color(), 6);
        assert_eq!(construct_coloring(&q(PathCorona, 12, 2)).unwrap().max_color(), 6);
    }
}
