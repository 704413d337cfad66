//! Disjoint cycle notation for permutations: parsing, construction, display.
//!
//! The parser accepts whitespace and multi-digit points, e.g. `(1, 12)(3,4)`.
//! It does not accept ellipses; long cycles are built programmatically.

use std::fmt;

use crate::error::{Error, Result};
use crate::transform::PartialTransformation;

/// A permutation written as disjoint cycles, each of length at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleNotation {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleNotation {
    pub fn new(degree: usize, cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; degree + 1];
        for cycle in &cycles {
            if cycle.len() < 2 {
                return Err(Error::CycleParse(format!(
                    "cycle of length {} (need at least 2)",
                    cycle.len()
                )));
            }
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen[p] {
                    return Err(Error::RepeatedCyclePoint(p));
                }
                seen[p] = true;
            }
        }
        Ok(CycleNotation { degree, cycles })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Result<PartialTransformation> {
        let mut images: Vec<usize> = (1..=self.degree).collect();
        for cycle in &self.cycles {
            for i in 0..cycle.len() {
                images[cycle[i] - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        PartialTransformation::transformation(self.degree, &images)
    }

    /// Canonical cycle decomposition of a permutation: each cycle starts at
    /// its least point, cycles ordered by least point, fixed points omitted.
    pub fn of(p: &PartialTransformation) -> Result<CycleNotation> {
        if !p.is_permutation() {
            return Err(Error::NotAPermutation {
                rank: p.rank(),
                dom: p.domain().len(),
            });
        }
        let n = p.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = p.image_of(start).unwrap();
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = p.image_of(x).unwrap();
            }
            if cycle.len() >= 2 {
                cycles.push(cycle);
            }
        }
        Ok(CycleNotation { degree: n, cycles })
    }
}

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses disjoint cycle notation like `(2,3)` or `(1, 10)(4,5)`; `()` is the
/// identity. Points must be distinct across all cycles and at most `degree`.
pub fn parse_cycles(degree: usize, text: &str) -> Result<PartialTransformation> {
    parse_cycle_notation(degree, text)?.to_permutation()
}

pub fn parse_cycle_notation(degree: usize, text: &str) -> Result<CycleNotation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(Error::CycleParse(format!("expected '(' at {:?}", rest)));
        };
        let Some(end) = after_open.find(')') else {
            return Err(Error::CycleParse("unclosed cycle".into()));
        };
        let body = after_open[..end].trim();
        if !body.is_empty() {
            let mut cycle = Vec::new();
            for entry in body.split(',') {
                let entry = entry.trim();
                let p: usize = entry
                    .parse()
                    .map_err(|_| Error::CycleParse(format!("bad point {:?}", entry)))?;
                cycle.push(p);
            }
            cycles.push(cycle);
        }
        rest = after_open[end + 1..].trim_start();
    }
    CycleNotation::new(degree, cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_transposition() {
        let p = parse_cycles(4, "(2,3)").unwrap();
        assert_eq!(p.to_string(), "[1, 3, 2, 4]");
    }

    #[test]
    fn parse_long_cycle_with_spaces() {
        // (3,7,6,4,5) at n=8 moves 3→7, 7→6, 6→4, 4→5, 5→3, fixes 1,2,8
        let p = parse_cycles(8, "(3, 7, 6, 4, 5)").unwrap();
        assert_eq!(p.image_of(3), Some(7));
        assert_eq!(p.image_of(7), Some(6));
        assert_eq!(p.image_of(6), Some(4));
        assert_eq!(p.image_of(4), Some(5));
        assert_eq!(p.image_of(5), Some(3));
        for fixed in [1, 2, 8] {
            assert_eq!(p.image_of(fixed), Some(fixed));
        }
    }

    #[test]
    fn round_trip() {
        let p = parse_cycles(6, "(1,2)(3,4,5)").unwrap();
        let cn = CycleNotation::of(&p).unwrap();
        assert_eq!(cn.to_string(), "(1,2)(3,4,5)");
        assert_eq!(cn.to_permutation().unwrap(), p);
    }

    #[test]
    fn to_cycles_of_transposition() {
        let p = PartialTransformation::transformation(4, &[2, 1, 3, 4]).unwrap();
        assert_eq!(CycleNotation::of(&p).unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_cycles(4, "(2,2)").is_err());
        assert!(parse_cycles(4, "(1,2)(2,3)").is_err());
        assert!(parse_cycles(4, "(5,1)").is_err());
        assert!(parse_cycles(4, "(1,2").is_err());
        assert!(parse_cycles(4, "(2,3,…,4)").is_err());
        assert!(CycleNotation::new(4, vec![vec![3]]).is_err());
    }

    #[test]
    fn identity_forms() {
        assert_eq!(
            parse_cycles(3, "").unwrap(),
            PartialTransformation::identity(3).unwrap()
        );
        assert_eq!(
            parse_cycles(3, "()").unwrap(),
            PartialTransformation::identity(3).unwrap()
        );
    }
}
