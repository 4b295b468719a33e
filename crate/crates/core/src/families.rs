//! Constructors for the group families under study, plus fixture ingestion
//! for the groups that ship as generator data (M11, M12, M22, Sz8).
//!
//! Fixture file grammar (plain text, UTF-8), one item per line:
//! ```text
//! # comment
//! name <string>
//! degree <int>
//! order <int>
//! gen <cycle-notation>                 (one line per generator)
//! label <cycle-notation> <classlabel>  (optional overrides)
//! ```
//! Cycle notation is 1-based, e.g. `(1,2)(3,4,5)`; the identity is `()`.

use crate::error::{Error, Result};
use crate::field::SmallField;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::projective::{induced_permutation, Matrix};

/// Pinned field orders for the PSL(2,q) constructor.
pub const PSL2_FIELDS: [usize; 6] = [4, 5, 7, 8, 9, 13];

/// Selector for every constructible group family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Abelian group as invariant factors, each ≥ 2.
    Abelian(Vec<usize>),
    /// Dihedral D_2n, n ≥ 3.
    Dihedral(usize),
    /// Dicyclic T_4n, n ≥ 2.
    Dicyclic(usize),
    /// Generalized dihedral Dih(A) for abelian A given by invariant factors.
    GeneralizedDihedral(Vec<usize>),
    Symmetric(usize),
    Alternating(usize),
    /// PSL(2,q) for q in the pinned field list.
    Psl2(usize),
    /// PSL(3,3) on the 13 points of PG(2,3).
    Psl33,
    /// A named fixture: M11, M12, M22, or Sz8.
    Fixture(String),
}

impl GroupSpec {
    pub fn display_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Abelian(fs) => factor_name(fs),
            GroupSpec::Dihedral(n) => format!("D{}", 2 * n),
            GroupSpec::Dicyclic(n) => format!("T{}", 4 * n),
            GroupSpec::GeneralizedDihedral(fs) => format!("Dih({})", factor_name(fs)),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Psl2(q) => format!("PSL(2,{q})"),
            GroupSpec::Psl33 => "PSL(3,3)".to_string(),
            GroupSpec::Fixture(name) => name.clone(),
        }
    }
}

fn factor_name(fs: &[usize]) -> String {
    fs.iter()
        .map(|f| format!("C{f}"))
        .collect::<Vec<_>>()
        .join("x")
}

/// Builds the group selected by `spec`, enumerating at most `cap` elements.
pub fn build(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => build_cyclic(*n, cap),
        GroupSpec::Abelian(fs) => build_abelian(fs, cap),
        GroupSpec::Dihedral(n) => build_dihedral(*n, cap),
        GroupSpec::Dicyclic(n) => build_dicyclic(*n, cap),
        GroupSpec::GeneralizedDihedral(fs) => make_generalized_dihedral(fs, cap),
        GroupSpec::Symmetric(n) => build_symmetric(*n, cap),
        GroupSpec::Alternating(n) => build_alternating(*n, cap),
        GroupSpec::Psl2(q) => build_psl2(*q, cap),
        GroupSpec::Psl33 => build_psl33(cap),
        GroupSpec::Fixture(name) => load_fixture(name, cap),
    }
}

fn build_cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::input("cyclic order must be ≥ 1"));
    }
    let gen = if n == 1 {
        Permutation::identity(1)
    } else {
        Permutation::from_images((1..n).chain([0]).collect())?
    };
    FiniteGroup::enumerate(&format!("C{n}"), &[gen], cap)
}

fn build_abelian(factors: &[usize], cap: usize) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return Err(Error::input("abelian factor list must be nonempty"));
    }
    if factors.iter().any(|&f| f < 2) {
        return Err(Error::input("abelian invariant factors must be ≥ 2"));
    }
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut base = 0;
    for &f in factors {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..f {
            images[base + i] = base + (i + 1) % f;
        }
        gens.push(Permutation::from_images(images)?);
        base += f;
    }
    FiniteGroup::enumerate(&factor_name(factors), &gens, cap)
}

fn build_dihedral(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::input("dihedral parameter must satisfy n ≥ 3"));
    }
    let rotation = Permutation::from_images((1..n).chain([0]).collect())?;
    let reflection = Permutation::from_images((0..n).map(|j| (n - j) % n).collect())?;
    FiniteGroup::enumerate(&format!("D{}", 2 * n), &[rotation, reflection], cap)
}

/// Dicyclic group T_4n = ⟨x, y | x^2n = 1, y² = x^n, y⁻¹xy = x⁻¹⟩ via its
/// regular representation on 4n points.
fn build_dicyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::input("dicyclic parameter must satisfy n ≥ 2"));
    }
    let two_n = 2 * n;
    let order = 4 * n;
    // element (i, ε) ↦ point ε·2n + i; multiplication:
    // (i,0)(j,δ) = (i+j, δ); (i,1)(j,0) = (i−j, 1); (i,1)(j,1) = (i−j+n, 0)
    let mult = |i: usize, e: usize, j: usize, d: usize| -> usize {
        let (k, f) = if e == 0 {
            ((i + j) % two_n, d)
        } else if d == 0 {
            ((i + two_n - j) % two_n, 1)
        } else {
            ((i + two_n - j + n) % two_n, 0)
        };
        f * two_n + k
    };
    let right_mul = |j: usize, d: usize| -> Result<Permutation> {
        Permutation::from_images(
            (0..order)
                .map(|p| mult(p % two_n, p / two_n, j, d))
                .collect(),
        )
    };
    let x = right_mul(1, 0)?;
    let y = right_mul(0, 1)?;
    FiniteGroup::enumerate(&format!("T{}", 4 * n), &[x, y], cap)
}

/// Generalized dihedral Dih(A) = A ⋊ C2 with the involution inverting A,
/// via the regular representation on 2|A| points.
pub fn make_generalized_dihedral(factors: &[usize], cap: usize) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return Err(Error::input("generalized dihedral needs a nonempty factor list"));
    }
    if factors.iter().any(|&f| f < 2) {
        return Err(Error::input("generalized dihedral factors must be ≥ 2"));
    }
    let a_order: usize = factors.iter().product();
    let order = 2 * a_order;
    // a ∈ A encoded in mixed radix over the factors; element (a, ε).
    let factors_owned: Vec<usize> = factors.to_vec();
    let add = move |a: usize, b: usize, negate_b: bool| -> usize {
        let mut out = 0;
        let mut stride = 1;
        let mut x = a;
        let mut y = b;
        for &f in &factors_owned {
            let xa = x % f;
            let yb = y % f;
            let yb = if negate_b { (f - yb) % f } else { yb };
            out += ((xa + yb) % f) * stride;
            stride *= f;
            x /= f;
            y /= f;
        }
        out
    };
    // (a,ε)·(c,δ) = (a + (−1)^ε c, ε⊕δ)
    let mult = |a: usize, e: usize, c: usize, d: usize| -> usize {
        let sum = add(a, c, e == 1);
        ((e + d) % 2) * a_order + sum
    };
    let mut gens = Vec::new();
    let mut stride = 1;
    for &f in factors {
        let gen_a = stride; // the generator of this cyclic factor
        gens.push(Permutation::from_images(
            (0..order)
                .map(|p| mult(p % a_order, p / a_order, gen_a, 0))
                .collect(),
        )?);
        stride *= f;
    }
    gens.push(Permutation::from_images(
        (0..order)
            .map(|p| mult(p % a_order, p / a_order, 0, 1))
            .collect(),
    )?);
    FiniteGroup::enumerate(&format!("Dih({})", factor_name(factors)), &gens, cap)
}

fn build_symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::input("symmetric degree must be ≥ 1"));
    }
    let name = format!("S{n}");
    if n == 1 {
        return FiniteGroup::enumerate(&name, &[Permutation::identity(1)], cap);
    }
    let mut gens = vec![Permutation::parse("(1,2)", n)?];
    if n >= 3 {
        gens.push(Permutation::from_images((1..n).chain([0]).collect())?);
    }
    FiniteGroup::enumerate(&name, &gens, cap)
}

fn build_alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::input("alternating degree must be ≥ 3"));
    }
    let name = format!("A{n}");
    let mut gens = vec![Permutation::parse("(1,2,3)", n)?];
    if n > 3 {
        // (1,…,n) for odd n, (2,…,n) for even n
        let cycle: Vec<usize> = if n % 2 == 1 {
            (1..n).chain([0]).collect()
        } else {
            std::iter::once(0).chain(2..n).chain([1]).collect()
        };
        gens.push(Permutation::from_images(cycle)?);
    }
    FiniteGroup::enumerate(&name, &gens, cap)
}

/// PSL(2,q) as the action of SL(2,q) on the q+1 points of the projective
/// line: transvections over a field basis plus the rotation [[0,−1],[1,0]].
/// The scalar kernel acts trivially, so the induced permutation group is
/// exactly PSL(2,q); the order is checked as part of the build.
fn build_psl2(q: usize, cap: usize) -> Result<FiniteGroup> {
    if !PSL2_FIELDS.contains(&q) {
        return Err(Error::input(format!(
            "PSL(2,q) is pinned to q ∈ {PSL2_FIELDS:?}, got {q}"
        )));
    }
    let field = SmallField::with_order(q)?;
    let mut gens = Vec::new();
    for i in 0..field.degree() {
        // transvection [[1, x^i], [0, 1]]
        let mut coeffs = vec![0u8; i as usize + 1];
        coeffs[i as usize] = 1;
        let beta = field.element(&coeffs)?;
        let m = Matrix::new(2, vec![field.one(), beta, field.zero(), field.one()])?;
        gens.push(induced_permutation(&field, &m)?);
    }
    let rot = Matrix::from_ints(&field, 2, &[0, -1, 1, 0])?;
    gens.push(induced_permutation(&field, &rot)?);
    let group = FiniteGroup::enumerate(&format!("PSL(2,{q})"), &gens, cap)?;
    let expected = q * (q - 1) * (q + 1) / if q % 2 == 0 { 1 } else { 2 };
    if group.order() != expected {
        return Err(Error::integrity(format!(
            "PSL(2,{q}) build produced order {}, expected {expected}",
            group.order()
        )));
    }
    Ok(group)
}

/// PSL(3,3) = SL(3,3) acting on the 13 points of PG(2,3), generated by a
/// transvection and a cyclic shift; the order check is part of the build.
fn build_psl33(cap: usize) -> Result<FiniteGroup> {
    let field = SmallField::new(3, 1)?;
    let a = Matrix::from_ints(&field, 3, &[1, 1, 0, 0, 1, 0, 0, 0, 1])?;
    let b = Matrix::from_ints(&field, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0])?;
    let gens = vec![
        induced_permutation(&field, &a)?,
        induced_permutation(&field, &b)?,
    ];
    let group = FiniteGroup::enumerate("PSL(3,3)", &gens, cap)?;
    if group.order() != 5616 {
        return Err(Error::integrity(format!(
            "PSL(3,3) build produced order {}, expected 5616",
            group.order()
        )));
    }
    Ok(group)
}

/// A parsed fixture file.
#[derive(Clone, Debug)]
pub struct FixtureRecord {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    /// representative cycle-notation → class label
    pub labels: Vec<(String, String)>,
}

impl FixtureRecord {
    pub fn parse(text: &str) -> Result<FixtureRecord> {
        let mut name = None;
        let mut degree = None;
        let mut order = None;
        let mut generators = Vec::new();
        let mut labels = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::integrity(format!("fixture line {} malformed: {line}", lineno + 1));
            let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
            let rest = rest.trim();
            match key {
                "name" => name = Some(rest.to_string()),
                "degree" => degree = Some(rest.parse::<usize>().map_err(|_| bad())?),
                "order" => order = Some(rest.parse::<usize>().map_err(|_| bad())?),
                "gen" => generators.push(rest.to_string()),
                "label" => {
                    let (cycles, label) = rest.rsplit_once(char::is_whitespace).ok_or_else(bad)?;
                    labels.push((cycles.trim().to_string(), label.to_string()));
                }
                _ => return Err(bad()),
            }
        }
        let record = FixtureRecord {
            name: name.ok_or_else(|| Error::integrity("fixture lacks a name line"))?,
            degree: degree.ok_or_else(|| Error::integrity("fixture lacks a degree line"))?,
            order: order.ok_or_else(|| Error::integrity("fixture lacks an order line"))?,
            generators,
            labels,
        };
        if record.generators.is_empty() {
            return Err(Error::integrity("fixture lacks gen lines"));
        }
        Ok(record)
    }

    /// Enumerates the group, checks the declared order, applies the label table.
    pub fn realize(&self, cap: usize) -> Result<FiniteGroup> {
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let mut group = FiniteGroup::enumerate(&self.name, &gens, cap)?;
        if group.order() != self.order {
            return Err(Error::integrity(format!(
                "fixture {} enumerated to order {}, declared {}",
                self.name,
                group.order(),
                self.order
            )));
        }
        let table = self
            .labels
            .iter()
            .map(|(cycles, label)| Ok((Permutation::parse(cycles, self.degree)?, label.clone())))
            .collect::<Result<Vec<_>>>()?;
        if !table.is_empty() {
            group.apply_label_table(&table)?;
        }
        Ok(group)
    }
}

/// The fixture files shipped with the crate.
pub fn fixture_source(name: &str) -> Result<&'static str> {
    match name {
        "M11" => Ok(include_str!("../fixtures/M11.fix")),
        "M12" => Ok(include_str!("../fixtures/M12.fix")),
        "M22" => Ok(include_str!("../fixtures/M22.fix")),
        "Sz8" => Ok(include_str!("../fixtures/Sz8.fix")),
        _ => Err(Error::integrity(format!(
            "no fixture named {name}; available: M11, M12, M22, Sz8"
        ))),
    }
}

/// Loads and realizes a shipped fixture.
pub fn load_fixture(name: &str, cap: usize) -> Result<FiniteGroup> {
    let record = FixtureRecord::parse(fixture_source(name)?)?;
    record.realize(cap)
}
