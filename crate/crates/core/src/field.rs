//! Arithmetic in the small Galois fields the group constructors need.
//!
//! Extension fields are pinned to fixed irreducible polynomials so element
//! encodings are reproducible everywhere:
//! GF(4): x²+x+1, GF(8): x³+x+1, GF(9): x²+1, GF(16): x⁴+x+1.
//! Prime fields GF(p) are supported for any prime p that fits in a byte.

use crate::error::{Error, Result};
use std::fmt;

/// Field descriptor: characteristic `p`, extension degree `k`, and the
/// reduction of x^k to a lower-degree polynomial (empty for prime fields).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallField {
    p: u8,
    k: u8,
    /// Coefficients of x^k mod the irreducible, little-endian, length k.
    reduction: Vec<u8>,
}

fn is_prime(n: u8) -> bool {
    let n = n as u16;
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl SmallField {
    /// Field with q = p^k elements. Extension fields only for the pinned list.
    pub fn new(p: u8, k: u8) -> Result<SmallField> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let reduction = match (p, k) {
            (_, 1) => vec![],
            (2, 2) => vec![1, 1],       // x² = x + 1
            (2, 3) => vec![1, 1, 0],    // x³ = x + 1
            (3, 2) => vec![2, 0],       // x² = 2
            (2, 4) => vec![1, 1, 0, 0], // x⁴ = x + 1
            _ => {
                return Err(Error::input(format!(
                    "no pinned irreducible for GF({p}^{k})"
                )))
            }
        };
        Ok(SmallField { p, k, reduction })
    }

    /// Field with q elements, q a prime power from the pinned table.
    pub fn with_order(q: usize) -> Result<SmallField> {
        for p in 2u8..=255 {
            if !is_prime(p) {
                continue;
            }
            let mut pk = p as usize;
            let mut k = 1u8;
            while pk < q && k < 8 {
                pk *= p as usize;
                k += 1;
            }
            if pk == q {
                return SmallField::new(p, k);
            }
        }
        Err(Error::input(format!("{q} is not a supported prime power")))
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.k as u32)
    }

    pub fn zero(&self) -> FieldElem {
        self.element(&[]).unwrap()
    }

    pub fn one(&self) -> FieldElem {
        self.element(&[1]).unwrap()
    }

    /// Element from little-endian coefficients (short slices are padded).
    pub fn element(&self, coeffs: &[u8]) -> Result<FieldElem> {
        if coeffs.len() > self.k as usize {
            return Err(Error::input(format!(
                "{} coefficients for GF({}^{})",
                coeffs.len(),
                self.p,
                self.k
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::input(format!(
                "coefficient out of range mod {}",
                self.p
            )));
        }
        let mut full = coeffs.to_vec();
        full.resize(self.k as usize, 0);
        Ok(FieldElem {
            p: self.p,
            k: self.k,
            coeffs: full,
        })
    }

    /// The element whose value index (Σ cᵢ·pⁱ) is `v`.
    pub fn from_index(&self, v: usize) -> Result<FieldElem> {
        if v >= self.order() {
            return Err(Error::input(format!("index {v} out of field range")));
        }
        let mut coeffs = Vec::with_capacity(self.k as usize);
        let mut rest = v;
        for _ in 0..self.k {
            coeffs.push((rest % self.p as usize) as u8);
            rest /= self.p as usize;
        }
        self.element(&coeffs)
    }

    /// All elements in value order: 0, 1, …, q−1.
    pub fn elements(&self) -> Vec<FieldElem> {
        (0..self.order()).map(|v| self.from_index(v).unwrap()).collect()
    }

    fn check_member(&self, a: &FieldElem) -> Result<()> {
        if a.p != self.p || a.k != self.k {
            return Err(Error::input(format!(
                "element of GF({}^{}) used in GF({}^{})",
                a.p, a.k, self.p, self.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        Ok(FieldElem {
            p: self.p,
            k: self.k,
            coeffs,
        })
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check_member(a)?;
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        Ok(FieldElem {
            p: self.p,
            k: self.k,
            coeffs,
        })
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check_member(a)?;
        self.check_member(b)?;
        let k = self.k as usize;
        // Schoolbook product, degree ≤ 2k−2.
        let mut prod = vec![0u16; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] += x as u16 * y as u16;
            }
        }
        // Reduce x^d for d ≥ k using the pinned relation, highest degree first.
        for d in (k..prod.len()).rev() {
            let c = prod[d] % self.p as u16;
            prod[d] = 0;
            if c == 0 {
                continue;
            }
            for (i, &r) in self.reduction.iter().enumerate() {
                prod[d - k + i] += c * r as u16;
            }
        }
        let coeffs = prod[..k].iter().map(|&c| (c % self.p as u16) as u8).collect();
        Ok(FieldElem {
            p: self.p,
            k: self.k,
            coeffs,
        })
    }

    /// Multiplicative inverse by exhaustive search; fields here have ≤ 256 elements.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check_member(a)?;
        if a.is_zero() {
            return Err(Error::input("inversion of zero"));
        }
        let one = self.one();
        for cand in self.elements() {
            if self.mul(a, &cand)? == one {
                return Ok(cand);
            }
        }
        unreachable!("field axioms guarantee an inverse")
    }
}

/// One element of a `SmallField`, as polynomial coefficients mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    p: u8,
    k: u8,
    coeffs: Vec<u8>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Σ cᵢ·pⁱ — a canonical integer encoding, used for ordering.
    pub fn value_index(&self) -> usize {
        self.coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value_index().cmp(&other.value_index())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.value_index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_x_times_x_squared() {
        let f = SmallField::new(2, 3).unwrap();
        let x = f.element(&[0, 1]).unwrap();
        let x2 = f.element(&[0, 0, 1]).unwrap();
        let want = f.element(&[1, 1]).unwrap(); // x + 1
        assert_eq!(f.mul(&x, &x2).unwrap(), want);
    }

    #[test]
    fn gf9_x_squared_is_two() {
        let f = SmallField::new(3, 2).unwrap();
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(f.mul(&x, &x).unwrap(), f.element(&[2]).unwrap());
    }

    #[test]
    fn gf13_inverse_of_two() {
        let f = SmallField::new(13, 1).unwrap();
        let two = f.element(&[2]).unwrap();
        assert_eq!(f.inv(&two).unwrap(), f.element(&[7]).unwrap());
    }

    #[test]
    fn inversion_of_zero_rejected() {
        let f = SmallField::new(5, 1).unwrap();
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn inverse_times_self_is_one_everywhere() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 1), (7, 1), (13, 1)] {
            let f = SmallField::new(p, k).unwrap();
            for a in f.elements() {
                if a.is_zero() {
                    continue;
                }
                let inv = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &inv).unwrap(), f.one());
            }
        }
    }

    #[test]
    fn distributivity_exhaustive_small_fields() {
        for (p, k) in [(2u8, 2u8), (2, 3), (3, 2)] {
            let f = SmallField::new(p, k).unwrap();
            let elems = f.elements();
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        let lhs = f.mul(a, &f.add(b, c).unwrap()).unwrap();
                        let rhs = f
                            .add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_field_arithmetic_rejected() {
        let f4 = SmallField::new(2, 2).unwrap();
        let f8 = SmallField::new(2, 3).unwrap();
        let a = f4.one();
        let b = f8.one();
        assert!(f4.add(&a, &b).is_err());
    }

    #[test]
    fn with_order_resolves_prime_powers() {
        assert_eq!(SmallField::with_order(8).unwrap().characteristic(), 2);
        assert_eq!(SmallField::with_order(9).unwrap().characteristic(), 3);
        assert_eq!(SmallField::with_order(13).unwrap().degree(), 1);
        assert!(SmallField::with_order(12).is_err());
        assert!(SmallField::with_order(32).is_err());
    }
}
