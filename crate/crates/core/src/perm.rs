//! Permutations of a finite point set, the universal element representation.
//!
//! Points are 0-based internally; the textual cycle notation is 1-based, so
//! `(1,2)(3,4,5)` moves internal points 0,1 and 2,3,4. Composition is
//! right-to-left throughout the crate: `compose(p, q)` applies `q` first.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

/// Maximum supported degree. Keeps elements one byte per point.
pub const MAX_DEGREE: usize = 255;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1 && degree <= MAX_DEGREE);
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::input(format!(
                "degree must be in 1..={MAX_DEGREE}, got {degree}"
            )));
        }
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree {
                return Err(Error::input(format!(
                    "image {img} out of range for degree {degree}"
                )));
            }
            if seen[img] {
                return Err(Error::input(format!("image {img} repeated; not a bijection")));
            }
            seen[img] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. `(1,2)(3,4,5)`.
    /// The identity is written `()`. Points not named are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::input(format!(
                "degree must be in 1..={MAX_DEGREE}, got {degree}"
            )));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(Error::input("empty permutation string"));
        }
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::input(format!("expected '(' in permutation: {text}")));
            };
            let Some(end) = stripped.find(')') else {
                return Err(Error::input(format!("unclosed cycle in permutation: {text}")));
            };
            let body = &stripped[..end];
            rest = &stripped[end + 1..];
            if body.is_empty() {
                continue; // "()" — identity cycle
            }
            let mut pts = Vec::new();
            for tok in body.split(',') {
                let n: usize = tok
                    .parse()
                    .map_err(|_| Error::input(format!("bad point '{tok}' in permutation: {text}")))?;
                if n == 0 || n > degree {
                    return Err(Error::input(format!(
                        "point {n} out of range 1..={degree} in permutation: {text}"
                    )));
                }
                let p = n - 1;
                if moved[p] {
                    return Err(Error::input(format!(
                        "point {n} appears twice in permutation: {text}"
                    )));
                }
                moved[p] = true;
                pts.push(p);
            }
            if pts.len() < 2 {
                return Err(Error::input(format!("cycle of length < 2 in permutation: {text}")));
            }
            for w in 0..pts.len() {
                images[pts[w]] = pts[(w + 1) % pts.len()];
            }
        }
        Permutation::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))` — `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::input(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let images = other
            .images
            .iter()
            .map(|&i| self.images[i as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g` (the conjugate `self^g`).
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose_unchecked(&self.compose_unchecked(g))
    }

    /// Least k ≥ 1 with self^k = identity, as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            let pts: Vec<String> = cyc.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    #[test]
    fn involution_squared_is_identity() {
        let t = p("(1,2)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn three_cycle_squared() {
        let c = p("(1,2,3)", 3);
        assert_eq!(c.compose(&c).unwrap(), p("(1,3,2)", 3));
    }

    #[test]
    fn composition_convention_right_to_left() {
        // (0 1) ∘ (1 2) maps 0→1→2→0 under "q first, then p".
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        let c = a.compose(&b).unwrap();
        assert_eq!(c.apply(0), 1);
        assert_eq!(c.apply(1), 2);
        assert_eq!(c.apply(2), 0);
    }

    #[test]
    fn degree_mismatch_is_input_error() {
        let a = p("(1,2)", 3);
        let b = p("(1,2)", 4);
        assert!(a.compose(&b).is_err());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(p("(1,2)(3,4,5)", 5).order(), 6);
        assert_eq!(p("(1,2,3,4,5,6,7,8,9,10,11)", 11).order(), 11);
    }

    #[test]
    fn display_round_trip() {
        let x = p("(1,2)(3,4,5)", 6);
        assert_eq!(x.to_string(), "(1,2)(3,4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let back = Permutation::parse(&x.to_string(), 6).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse("(1,2", 3).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("(1,4)", 3).is_err());
        assert!(Permutation::parse("(1)", 3).is_err());
        assert!(Permutation::parse("", 3).is_err());
    }

    #[test]
    fn conjugation_convention() {
        // x^g = g⁻¹ x g: conjugating (1,2) by (2,3) gives (1,3).
        let x = p("(1,2)", 3);
        let g = p("(2,3)", 3);
        assert_eq!(x.conjugate_by(&g), p("(1,3)", 3));
    }
}
