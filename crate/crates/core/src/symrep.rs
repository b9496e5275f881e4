//! Transposition representations of the symmetric group.
//!
//! A [`Representation`] assigns a matrix to each transposition `(i j)` of
//! `S_n`. Two fixed data sets are built in (the two-dimensional irrep of `S_4`
//! and a five-dimensional `S_5` row of star transpositions), and
//! [`young_orthogonal`] produces any irrep in Young's orthogonal form as long
//! as its entries stay inside Q(√2,√3).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use kzr_exact::{Field, FieldMatrix, FieldScalar, Matrix, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{KzError, Result};

/// Transposition `(i j)` with `1 ≤ i < j`, stored 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    i: usize,
    j: usize,
}

impl Transposition {
    /// Accepts either order of the two indices.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == 0 || i == j {
            return Err(KzError::InvalidTransposition(a, b, j));
        }
        Ok(Transposition { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn all(n: usize) -> impl Iterator<Item = Transposition> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Transposition { i, j }))
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

impl FromStr for Transposition {
    type Err = KzError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || KzError::Json(format!("bad transposition key {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Transposition::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    n: usize,
    dim: usize,
    partial: bool,
    matrices: BTreeMap<Transposition, FieldMatrix>,
}

impl Representation {
    /// Builds a representation from `(i, j, P)` triples; `partial` marks data
    /// that intentionally covers only some transpositions.
    pub fn new(n: usize, dim: usize, partial: bool, entries: Vec<(usize, usize, FieldMatrix)>) -> Result<Self> {
        let mut matrices = BTreeMap::new();
        for (a, b, m) in entries {
            let t = Transposition::new(a, b)?;
            if t.j > n {
                return Err(KzError::InvalidTransposition(a, b, n));
            }
            if m.shape() != (dim, dim) {
                return Err(kzr_exact::ExactError::ShapeMismatch {
                    op: "representation",
                    left: (dim, dim),
                    right: m.shape(),
                }
                .into());
            }
            matrices.insert(t, m);
        }
        let rep = Representation { n, dim, partial, matrices };
        if !partial {
            let missing = rep.missing_pairs();
            if !missing.is_empty() {
                return Err(KzError::MissingMatrix(missing));
            }
        }
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    /// Matrix of `(a b)`; order of the indices does not matter.
    pub fn get(&self, a: usize, b: usize) -> Option<&FieldMatrix> {
        Transposition::new(a, b).ok().and_then(|t| self.matrices.get(&t))
    }

    pub fn matrices(&self) -> impl Iterator<Item = (&Transposition, &FieldMatrix)> {
        self.matrices.iter()
    }

    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        Transposition::all(self.n)
            .filter(|t| !self.matrices.contains_key(t))
            .map(|t| (t.i, t.j))
            .collect()
    }

    /// Copy with one matrix replaced; handy for building broken fixtures.
    pub fn with_matrix(&self, a: usize, b: usize, m: FieldMatrix) -> Result<Self> {
        let mut out = self.clone();
        out.matrices.insert(Transposition::new(a, b)?, m);
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| KzError::Json(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    n: usize,
    dim: usize,
    #[serde(default)]
    partial: bool,
    matrices: BTreeMap<String, FieldMatrix>,
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        // keys go out in numeric pair order, which a string-keyed map would not keep
        struct Ordered<'a>(&'a BTreeMap<Transposition, FieldMatrix>);
        impl Serialize for Ordered<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().map(|(k, v)| (k.to_string(), v)))
            }
        }
        let mut st = s.serialize_struct("Representation", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("partial", &self.partial)?;
        st.serialize_field("matrices", &Ordered(&self.matrices))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RepresentationJson::deserialize(d)?;
        let mut entries = Vec::new();
        for (k, m) in raw.matrices {
            let t: Transposition = k.parse().map_err(D::Error::custom)?;
            entries.push((t.i, t.j, m));
        }
        Representation::new(raw.n, raw.dim, raw.partial, entries).map_err(D::Error::custom)
    }
}

fn parse_matrix(rows: &[&[&str]]) -> FieldMatrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| FieldScalar::parse(s).expect("builtin entry")).collect())
            .collect(),
    )
    .expect("builtin matrix is rectangular")
}

/// The two-dimensional irreducible representation of `S_4`.
pub fn builtin_s4_22() -> Representation {
    let p12 = parse_matrix(&[&["1", "0"], &["0", "-1"]]);
    let p13 = parse_matrix(&[&["-1/2", "-√3/2"], &["-√3/2", "1/2"]]);
    let p23 = parse_matrix(&[&["-1/2", "√3/2"], &["√3/2", "1/2"]]);
    Representation::new(
        4,
        2,
        false,
        vec![
            (1, 2, p12.clone()),
            (3, 4, p12),
            (1, 3, p13.clone()),
            (2, 4, p13),
            (2, 3, p23.clone()),
            (1, 4, p23),
        ],
    )
    .expect("builtin S4 data is complete")
}

/// Star transpositions `(1 k)` of a five-dimensional `S_5` data set; only the
/// first row is given, so the result is partial.
pub fn builtin_s5_gen1() -> Representation {
    let p12 = parse_matrix(&[
        &["1", "0", "0", "0", "0"],
        &["0", "1", "0", "0", "0"],
        &["0", "0", "-1", "0", "0"],
        &["0", "0", "0", "1", "0"],
        &["0", "0", "0", "0", "-1"],
    ]);
    let p13 = parse_matrix(&[
        &["1", "0", "0", "0", "0"],
        &["0", "-1/2", "-√3/2", "0", "0"],
        &["0", "-√3/2", "1/2", "0", "0"],
        &["0", "0", "0", "-1/2", "-√3/2"],
        &["0", "0", "0", "-√3/2", "1/2"],
    ]);
    let p14 = parse_matrix(&[
        &["-1/3", "-√2/3", "-√6/3", "0", "0"],
        &["-√2/3", "5/6", "-√3/6", "0", "0"],
        &["-√6/3", "-√3/6", "1/2", "0", "0"],
        &["0", "0", "0", "-1/2", "√3/2"],
        &["0", "0", "0", "√3/2", "1/2"],
    ]);
    let p15 = parse_matrix(&[
        &["-1/3", "√2/9", "√6/9", "-4/9", "-4√3/9"],
        &["√2/9", "-19/54", "23√3/54", "-8√2/27", "4√6/27"],
        &["√6/9", "23√3/54", "1/2", "4√6/27", "0"],
        &["-4/9", "-8√2/27", "4√6/27", "37/54", "-5√3/54"],
        &["-4√3/9", "4√6/27", "0", "-5√3/54", "1/2"],
    ]);
    Representation::new(5, 5, true, vec![(1, 2, p12), (1, 3, p13), (1, 4, p14), (1, 5, p15)])
        .expect("builtin S5 data is well-formed")
}

/// Integer partition, parts sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            let n = parts.iter().sum();
            return Err(KzError::InvalidPartition { parts, n });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn hook_dimension(&self) -> u128 {
        let n = self.size();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = self.parts[r + 1..].iter().filter(|&&l| l > c).count();
                hooks *= (arm + leg + 1) as u128;
            }
        }
        (1..=n as u128).product::<u128>() / hooks
    }
}

impl FromStr for Partition {
    type Err = KzError;
    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        let parts = parts.map_err(|_| KzError::InvalidPartition { parts: vec![], n: 0 })?;
        Partition::new(parts)
    }
}

/// A standard tableau as the (row, column) cell of each letter `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    cells: Vec<(usize, usize)>,
}

impl Tableau {
    fn content(&self, letter: usize) -> i64 {
        let (r, c) = self.cells[letter - 1];
        c as i64 - r as i64
    }

    /// The rows of the tableau as letter lists.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); height];
        for (k, &(r, _)) in self.cells.iter().enumerate() {
            rows[r].push(k + 1);
        }
        rows
    }

    fn swapped(&self, i: usize) -> Tableau {
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Tableau { cells }
    }
}

/// Standard tableaux of the given shape in last-letter order: scanning letters
/// from `n` down, the first letter whose row differs decides, and the tableau
/// holding it in the lower row comes first.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn grow(shape: &[usize], filled: &mut Vec<usize>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<Tableau>) {
        let n: usize = shape.iter().sum();
        if cells.len() == n {
            out.push(Tableau { cells: cells.clone() });
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            let fits = c < shape[r] && (r == 0 || filled[r - 1] > c);
            if fits {
                filled[r] += 1;
                cells.push((r, c));
                grow(shape, filled, cells, out);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    grow(&shape.parts, &mut vec![0; shape.parts.len()], &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        for k in (0..a.cells.len()).rev() {
            let (ra, rb) = (a.cells[k].0, b.cells[k].0);
            if ra != rb {
                return rb.cmp(&ra);
            }
        }
        std::cmp::Ordering::Equal
    });
    out
}

/// `√r` for positive rational `r` when it lies in Q(√2,√3).
pub fn sqrt_in_field(r: &Rational) -> Result<FieldScalar> {
    if r.is_negative() {
        return Err(KzError::FieldExtension(r.to_string()));
    }
    if Zero::is_zero(r) {
        return Ok(FieldScalar::zero());
    }
    // √(p/q) = √(pq)/q
    let pq: BigInt = r.numer() * r.denom();
    let (square, free) = split_square(&pq).ok_or_else(|| KzError::FieldExtension(r.to_string()))?;
    let coef = Rational::new(square, r.denom().clone());
    let basis = match free.to_u64() {
        Some(1) => FieldScalar::one(),
        Some(2) => FieldScalar::sqrt2(),
        Some(3) => FieldScalar::sqrt3(),
        Some(6) => FieldScalar::sqrt6(),
        _ => return Err(KzError::FieldExtension(r.to_string())),
    };
    Ok(basis.scale(&coef))
}

// m = s²·k with k squarefree; trial division, fine for the small axial data here
pub(crate) fn split_square(m: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut rest = m.to_u128()?;
    let mut square: u128 = 1;
    let mut free: u128 = 1;
    let mut p: u128 = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    free *= rest;
    Some((BigInt::from(square), BigInt::from(free)))
}

/// The irrep labelled by `partition` in Young's orthogonal form.
///
/// The adjacent transposition `(i, i+1)` acts on the tableau basis with
/// diagonal entry `1/d` and off-diagonal `√(1 − 1/d²)` pairing `T` with the
/// tableau obtained by swapping `i` and `i+1`, where `d` is the content of
/// `i+1` minus the content of `i`. Other transpositions follow by conjugation.
pub fn young_orthogonal(partition: &Partition, n: usize) -> Result<Representation> {
    if partition.size() != n {
        return Err(KzError::InvalidPartition {
            parts: partition.parts.clone(),
            n,
        });
    }
    let basis = standard_tableaux(partition);
    let dim = basis.len();
    let index_of = |t: &Tableau| basis.iter().position(|b| b == t);
    let mut adjacent: Vec<FieldMatrix> = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zeros(dim, dim);
        for (row, t) in basis.iter().enumerate() {
            let d = t.content(i + 1) - t.content(i);
            let diag = Rational::new(BigInt::one(), BigInt::from(d));
            m.set(row, row, FieldScalar::from_rational(diag.clone()));
            if let Some(col) = index_of(&t.swapped(i)) {
                let off = sqrt_in_field(&(<Rational as One>::one() - &diag * &diag))?;
                m.set(row, col, off);
            }
        }
        adjacent.push(m);
    }
    let mut entries: BTreeMap<Transposition, FieldMatrix> = BTreeMap::new();
    for i in 1..n {
        entries.insert(Transposition { i, j: i + 1 }, adjacent[i - 1].clone());
    }
    for gap in 2..n {
        for i in 1..=n - gap {
            let j = i + gap;
            let s = &adjacent[j - 2];
            let prev = &entries[&Transposition { i, j: j - 1 }];
            entries.insert(Transposition { i, j }, &(s * prev) * s);
        }
    }
    Representation::new(n, dim, false, entries.into_iter().map(|(t, m)| (t.i, t.j, m)).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub identity: String,
    pub pairs: Vec<(usize, usize)>,
}

/// Outcome of an identity suite; violations are data, not errors.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, ok: bool, identity: &str, pairs: Vec<(usize, usize)>) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                identity: identity.to_string(),
                pairs,
            });
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

/// Checks symmetry and `P² = I` for every stored matrix and, for complete
/// data, the braid identities `P_ij P_jk P_ij = P_ik` and commutation of
/// disjoint transpositions.
pub fn validate_representation(rep: &Representation) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (t, m) in rep.matrices() {
        report.record(m.is_symmetric(), "symmetric", vec![(t.i, t.j)]);
        report.record((m * m).is_identity(), "involution", vec![(t.i, t.j)]);
    }
    if rep.is_partial() {
        report.notes.push("partial: braid checks skipped".to_string());
        return report;
    }
    let n = rep.n();
    let p = |a: usize, b: usize| rep.get(a, b).expect("complete representation");
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let lhs = &(p(i, j) * p(j, k)) * p(i, j);
                report.record(lhs == *p(i, k), "braid", vec![(i, j), (j, k), (i, k)]);
            }
        }
    }
    for (s, t) in disjoint_pairs(n) {
        let ok = p(s.i, s.j).commutator(p(t.i, t.j)).expect("square").is_zero();
        report.record(ok, "disjoint-commutation", vec![(s.i, s.j), (t.i, t.j)]);
    }
    report
}

pub(crate) fn disjoint_pairs(n: usize) -> Vec<(Transposition, Transposition)> {
    let all: Vec<_> = Transposition::all(n).collect();
    let mut out = Vec::new();
    for (a, s) in all.iter().enumerate() {
        for t in &all[a + 1..] {
            if s.i != t.i && s.i != t.j && s.j != t.i && s.j != t.j {
                out.push((*s, *t));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(s: &str) -> FieldScalar {
        FieldScalar::parse(s).unwrap()
    }

    #[test]
    fn s4_lookup() {
        let rep = builtin_s4_22();
        assert_eq!(rep.get(1, 2).unwrap(), &parse_matrix(&[&["1", "0"], &["0", "-1"]]));
        assert_eq!(rep.get(3, 2).unwrap(), &parse_matrix(&[&["-1/2", "√3/2"], &["√3/2", "1/2"]]));
        for (_, m) in rep.matrices() {
            assert_eq!(m.trace().unwrap(), FieldScalar::zero());
        }
    }

    #[test]
    fn s5_lookup() {
        let rep = builtin_s5_gen1();
        assert!(rep.is_partial());
        assert_eq!(rep.get(1, 2).unwrap(), &parse_matrix(&[
            &["1", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0"],
            &["0", "0", "-1", "0", "0"],
            &["0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "-1"],
        ]));
        assert_eq!(rep.get(1, 5).unwrap().get(0, 4), &fs("-4√3/9"));
        for k in 2..=5 {
            assert_eq!(rep.get(1, k).unwrap().trace().unwrap(), FieldScalar::one());
        }
        assert!(rep.get(2, 3).is_none());
        assert_eq!(rep.missing_pairs().len(), 6);
    }

    #[test]
    fn tableaux_order_and_count() {
        let shape: Partition = "2,1".parse().unwrap();
        let t = standard_tableaux(&shape);
        assert_eq!(t[0].rows(), vec![vec![1, 2], vec![3]]);
        assert_eq!(t[1].rows(), vec![vec![1, 3], vec![2]]);
        for parts in [vec![3, 1], vec![2, 2], vec![3, 2], vec![2, 2, 1], vec![4, 2, 1]] {
            let p = Partition::new(parts).unwrap();
            assert_eq!(standard_tableaux(&p).len() as u128, p.hook_dimension());
        }
    }

    #[test]
    fn young_21() {
        let rep = young_orthogonal(&"2,1".parse().unwrap(), 3).unwrap();
        assert_eq!(rep.get(1, 2).unwrap(), &parse_matrix(&[&["1", "0"], &["0", "-1"]]));
        assert_eq!(rep.get(2, 3).unwrap(), &parse_matrix(&[&["-1/2", "√3/2"], &["√3/2", "1/2"]]));
        assert!(validate_representation(&rep).passed());
    }

    #[test]
    fn young_standard_rep_dimension() {
        for n in 2..=4 {
            let p = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(young_orthogonal(&p, n).unwrap().dim(), n - 1);
        }
    }

    #[test]
    fn young_22_is_builtin_s4() {
        let rep = young_orthogonal(&"2,2".parse().unwrap(), 4).unwrap();
        assert_eq!(rep, builtin_s4_22());
    }

    #[test]
    fn young_22_generators() {
        let rep = young_orthogonal(&"2,2".parse().unwrap(), 4).unwrap();
        assert_eq!(rep.dim(), 2);
        for (_, m) in rep.matrices() {
            assert_eq!(m.trace().unwrap(), FieldScalar::zero());
            assert_eq!(m.determinant().unwrap(), FieldScalar::int(-1));
        }
    }

    #[test]
    fn field_extension_is_reported() {
        // the hook [4,1] reaches axial distance 4, needing √15
        let err = young_orthogonal(&"4,1".parse().unwrap(), 5).unwrap_err();
        assert!(matches!(err, KzError::FieldExtension(_)));
        assert!(young_orthogonal(&"2,1".parse().unwrap(), 4).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn field_square_roots() {
        assert_eq!(sqrt_in_field(&kzr_exact::rational::ratio(3, 4)).unwrap(), fs("√3/2"));
        assert_eq!(sqrt_in_field(&kzr_exact::rational::ratio(8, 9)).unwrap(), fs("2√2/3"));
        assert_eq!(sqrt_in_field(&kzr_exact::rational::ratio(24, 25)).unwrap(), fs("2√6/5"));
        assert!(sqrt_in_field(&kzr_exact::rational::ratio(15, 16)).is_err());
    }

    #[test]
    fn corrupted_involution_is_caught() {
        let rep = builtin_s4_22();
        let mut bad = rep.get(1, 2).unwrap().clone();
        bad.set(0, 0, FieldScalar::int(2));
        let broken = rep.with_matrix(1, 2, bad).unwrap();
        let report = validate_representation(&broken);
        assert!(report
            .violations
            .iter()
            .any(|v| v.identity == "involution" && v.pairs == vec![(1, 2)]));
    }

    #[test]
    fn partial_data_skips_braids() {
        let report = validate_representation(&builtin_s5_gen1());
        assert!(report.passed());
        assert_eq!(report.notes, vec!["partial: braid checks skipped".to_string()]);
        assert_eq!(report.checks, 8);
    }

    #[test]
    fn json_round_trip_keeps_order() {
        let rep = builtin_s4_22();
        let j = rep.to_json();
        assert!(j.find("\"1,2\"").unwrap() < j.find("\"1,3\"").unwrap());
        let back = Representation::from_json(&j).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), j);
        assert!(Representation::from_json(r#"{"n":3,"dim":1,"matrices":{"1,2":[["1"]]}}"#).is_err());
    }
}
