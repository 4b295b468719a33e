//! Projective points over small fields and the permutations induced by
//! matrix actions. Used to realize PSL(2,q) on the q+1 points of the
//! projective line and PSL(3,3) on the 13 points of PG(2,3).

use crate::error::{Error, Result};
use crate::field::{FieldElem, SmallField};
use crate::perm::Permutation;

/// A point of projective space: a nonzero coordinate vector normalized so the
/// first nonzero coordinate is 1. Equal points have identical coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProjPoint {
    coords: Vec<FieldElem>,
}

impl ProjPoint {
    /// Normalizes a nonzero vector to its canonical representative.
    pub fn new(field: &SmallField, coords: Vec<FieldElem>) -> Result<ProjPoint> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::input("zero vector is not a projective point"));
        }
        let lead = coords.iter().find(|c| !c.is_zero()).unwrap();
        let scale = field.inv(lead)?;
        let coords = coords
            .iter()
            .map(|c| field.mul(&scale, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }
}

/// All points of P^{dim−1}(F_q) in lexicographic order of their normalized
/// coordinates. This order fixes the permutation-degree labeling downstream.
pub fn projective_points(field: &SmallField, dim: usize) -> Vec<ProjPoint> {
    let q = field.order();
    let total = q.pow(dim as u32);
    let mut pts = Vec::new();
    for code in 1..total {
        let mut rest = code;
        let mut coords = Vec::with_capacity(dim);
        for _ in 0..dim {
            coords.push(field.from_index(rest % q).unwrap());
            rest /= q;
        }
        coords.reverse();
        pts.push(ProjPoint::new(field, coords).unwrap());
    }
    pts.sort();
    pts.dedup();
    pts
}

/// A square matrix over a small field, row-major. Only the 2×2 and 3×3 cases
/// the group constructors need are supported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<FieldElem>) -> Result<Matrix> {
        if n != 2 && n != 3 {
            return Err(Error::input(format!("only 2×2 and 3×3 matrices supported, got {n}×{n}")));
        }
        if entries.len() != n * n {
            return Err(Error::input("entry count does not match dimension"));
        }
        Ok(Matrix { n, entries })
    }

    /// Builds a matrix from integer entries reduced into the prime subfield.
    pub fn from_ints(field: &SmallField, n: usize, ints: &[i64]) -> Result<Matrix> {
        let p = field.characteristic() as i64;
        let entries = ints
            .iter()
            .map(|&v| field.element(&[(v.rem_euclid(p)) as u8]))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn at(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.n + c]
    }

    pub fn det(&self, field: &SmallField) -> Result<FieldElem> {
        let m = |r: usize, c: usize| self.at(r, c);
        match self.n {
            2 => field.sub(
                &field.mul(m(0, 0), m(1, 1))?,
                &field.mul(m(0, 1), m(1, 0))?,
            ),
            3 => {
                let mut acc = field.zero();
                // Cofactor expansion along the first row.
                for c in 0..3 {
                    let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
                    let minor = field.sub(
                        &field.mul(m(1, c1), m(2, c2))?,
                        &field.mul(m(1, c2), m(2, c1))?,
                    )?;
                    acc = field.add(&acc, &field.mul(m(0, c), &minor)?)?;
                }
                Ok(acc)
            }
            _ => unreachable!(),
        }
    }

    pub fn scale(&self, field: &SmallField, s: &FieldElem) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| field.mul(s, e))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.n, entries)
    }

    fn apply(&self, field: &SmallField, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let mut out = Vec::with_capacity(self.n);
        for r in 0..self.n {
            let mut acc = field.zero();
            for c in 0..self.n {
                acc = field.add(&acc, &field.mul(self.at(r, c), &v[c])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// Image of a projective point under an invertible matrix.
pub fn projective_action(field: &SmallField, m: &Matrix, pt: &ProjPoint) -> Result<ProjPoint> {
    if m.det(field)?.is_zero() {
        return Err(Error::input("singular matrix has no projective action"));
    }
    ProjPoint::new(field, m.apply(field, pt.coords())?)
}

/// The permutation a matrix induces on the full point list of its projective
/// space. Point indices follow the canonical enumeration order.
pub fn induced_permutation(field: &SmallField, m: &Matrix) -> Result<Permutation> {
    let points = projective_points(field, m.size());
    let mut images = Vec::with_capacity(points.len());
    for pt in &points {
        let img = projective_action(field, m, pt)?;
        let idx = points
            .binary_search(&img)
            .map_err(|_| Error::input("matrix does not permute the point set"))?;
        images.push(idx);
    }
    Permutation::from_images(images)
}
