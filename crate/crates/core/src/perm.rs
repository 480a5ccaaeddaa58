//! Permutations of `{1, ..., d}`.
//!
//! Points are stored 0-based; everything textual (cycle notation, image
//! lists) is 1-based. Composition is left-to-right: `a.compose(&b)` applies
//! `a` first, then `b`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize + 1;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {degree} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image list is not a bijection of 1..{degree}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("bad degree {degree}")));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} outside 1..{degree}"
                    )));
                }
                if used[point - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} appears twice"
                    )));
                }
                used[point - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[point - 1] = next - 1;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation (`"(1 2 3)(4 5)"`, `"()"`) or a whitespace
    /// separated 1-based image list (`"2 3 1 5 4"`). For cycle notation the
    /// degree is the largest point mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('(') {
            let cycles = parse_cycles(text)?;
            let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
            Permutation::from_cycles(degree, &cycles)
        } else {
            let images = text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .ok()
                        .filter(|&x| x >= 1)
                        .map(|x| x - 1)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad image `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(images)
        }
    }

    /// Like [`Permutation::parse`], but pads to (and checks against) `degree`.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('(') {
            Permutation::from_cycles(degree, &parse_cycles(text)?)
        } else {
            let perm = Permutation::parse(text)?;
            if perm.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: perm.degree(),
                });
            }
            Ok(perm)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Moves every point by `offset` into a larger degree (used for direct
    /// products on disjoint point sets).
    pub fn shifted(&self, offset: usize, degree: usize) -> Result<Permutation> {
        if offset + self.degree() > degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: offset + self.degree(),
            });
        }
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, x) in self.images().enumerate() {
            images[offset + i] = offset + x;
        }
        Permutation::from_images(images)
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{text}`")))?;
        let close = inner_start
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
        let body = &inner_start[..close];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = inner_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [deg {}]", self.degree())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse_with_degree(s, d).unwrap()
    }

    #[test]
    fn compose_left_to_right() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        assert_eq!(a.compose(&b).unwrap(), p("(1 3 2)", 3));
    }

    #[test]
    fn identity_and_inverse_laws() {
        let g = p("(1 4 2)(3 5)", 5);
        let e = Permutation::identity(5);
        assert_eq!(e.compose(&g).unwrap(), g);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        let t = p("(1 2)(3 4)", 4);
        assert_eq!(t.inverse(), t);
        assert_eq!(e.inverse(), e);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = p("(1 2)", 2).compose(&p("(1 2 3)", 3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(p("(1 2 3 4 5)", 5).order(), 5);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
    }

    #[test]
    fn printing_and_parsing() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p("(3 1 2)(4 5)", 5).to_string(), "(1 2 3)(4 5)");
        let img = Permutation::parse("2 3 1 5 4").unwrap();
        assert_eq!(img, p("(1 2 3)(4 5)", 5));
        assert_eq!(Permutation::parse("(1,2)(3,4)").unwrap().degree(), 4);
        assert!(Permutation::parse("(1 2").is_err());
        assert!(Permutation::parse("2 2 1").is_err());
        assert!(Permutation::parse_with_degree("(1 5)", 4).is_err());
        assert!(Permutation::parse_with_degree("(1 2)(2 3)", 4).is_err());
    }
}
