//! Linear algebra over the two-element field.
//!
//! Vectors are packed into a `u32` with coordinate `i` in bit `i`. Text and
//! JSON use bit-strings whose first character is coordinate 0, and the
//! canonical ordering of vectors is the lexicographic order of those strings.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest dimension accepted by exhaustive orbit enumeration.
pub const MAX_ORBIT_DIMENSION: usize = 20;
/// Default bound on the size of a generated matrix group.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;
/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CAP_ENV: &str = "STABLE4_CAP";

const MAX_DIMENSION: usize = 32;

/// The closure cap, honouring `STABLE4_CAP` when it holds a positive integer.
pub fn closure_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_CLOSURE_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct F2Vector {
    dim: usize,
    bits: u32,
}

impl F2Vector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIMENSION, "dimension {dim} too large");
        F2Vector { dim, bits: 0 }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        F2Vector { dim, bits: 1 << i }
    }

    pub fn from_bits(dim: usize, bits: u32) -> Self {
        assert!(dim <= MAX_DIMENSION, "dimension {dim} too large");
        F2Vector { dim, bits: bits & mask(dim) }
    }

    pub fn from_slice(bits: &[bool]) -> Self {
        let mut v = F2Vector::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn to_vec(&self) -> Vec<bool> {
        (0..self.dim).map(|i| self.get(i)).collect()
    }

    /// Standard dot product.
    pub fn dot(&self, other: &F2Vector) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        F2Vector::from_bits(self.dim + other.dim, self.bits | other.bits << self.dim)
    }

    /// The first `k` coordinates.
    pub fn truncate(&self, k: usize) -> F2Vector {
        F2Vector::from_bits(k, self.bits)
    }

    /// All `2^dim` vectors in canonical order.
    pub fn all(dim: usize) -> impl Iterator<Item = F2Vector> {
        assert!(dim <= MAX_DIMENSION, "dimension {dim} too large");
        (0u32..1 << dim).map(move |k| F2Vector::from_bits(dim, reverse_low(k, dim)))
    }

    fn lex_key(&self) -> u32 {
        reverse_low(self.bits, self.dim)
    }
}

fn mask(dim: usize) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

fn reverse_low(bits: u32, dim: usize) -> u32 {
    if dim == 0 {
        0
    } else {
        bits.reverse_bits() >> (32 - dim)
    }
}

impl std::ops::Add for F2Vector {
    type Output = F2Vector;
    fn add(self, rhs: F2Vector) -> F2Vector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        F2Vector { dim: self.dim, bits: self.bits ^ rhs.bits }
    }
}

impl Ord for F2Vector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.dim.cmp(&other.dim).then(self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for F2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for F2Vector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_DIMENSION {
            return Err(Error::Parse(format!("bit-string `{s}` longer than {MAX_DIMENSION}")));
        }
        let mut v = F2Vector::zero(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("`{s}` is not a bit-string"))),
            }
        }
        Ok(v)
    }
}

impl Serialize for F2Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for F2Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A square matrix over GF(2) acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    dim: usize,
    rows: Vec<u32>,
}

impl F2Matrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim <= MAX_DIMENSION);
        F2Matrix { dim, rows: (0..dim).map(|i| 1 << i).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        F2Matrix { dim, rows: vec![0; dim] }
    }

    pub fn from_rows(rows: Vec<F2Vector>) -> Result<Self> {
        let dim = rows.len();
        for r in &rows {
            if r.dim() != dim {
                return Err(Error::NonSquare { rows: dim, cols: r.dim() });
            }
        }
        Ok(F2Matrix { dim, rows: rows.iter().map(F2Vector::bits).collect() })
    }

    pub fn from_bitstrings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        F2Matrix::from_rows(rows.iter().map(|r| r.as_ref().parse()).collect::<Result<_>>()?)
    }

    pub fn to_bitstrings(&self) -> Vec<String> {
        (0..self.dim).map(|i| self.row(i).to_string()).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> F2Vector {
        F2Vector::from_bits(self.dim, self.rows[i])
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.dim(), self.dim, "dimension mismatch");
        let mut out = 0u32;
        for (i, &r) in self.rows.iter().enumerate() {
            out |= ((r & v.bits()).count_ones() & 1) << i;
        }
        F2Vector::from_bits(self.dim, out)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                (0..self.dim)
                    .filter(|&k| r >> k & 1 == 1)
                    .fold(0u32, |acc, k| acc ^ other.rows[k])
            })
            .collect();
        F2Matrix { dim: self.dim, rows }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.dim {
            if let Some(p) = (rank..self.dim).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..self.dim {
                    if r != rank && rows[r] >> col & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Option<F2Matrix> {
        let mut m = self.rows.clone();
        let mut inv = F2Matrix::identity(self.dim).rows;
        for col in 0..self.dim {
            let p = (col..self.dim).find(|&r| m[r] >> col & 1 == 1)?;
            m.swap(col, p);
            inv.swap(col, p);
            for r in 0..self.dim {
                if r != col && m[r] >> col & 1 == 1 {
                    m[r] ^= m[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(F2Matrix { dim: self.dim, rows: inv })
    }

    /// Block matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &F2Matrix) -> F2Matrix {
        let dim = self.dim + other.dim;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.dim));
        F2Matrix { dim, rows }
    }

    /// Bilinear evaluation `x^T M y`.
    pub fn bilinear(&self, x: &F2Vector, y: &F2Vector) -> bool {
        x.dot(&self.apply(y))
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.dim).all(|i| !self.get(i, i) && (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_bitstrings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<String>::deserialize(d)?;
        F2Matrix::from_bitstrings(&rows).map_err(serde::de::Error::custom)
    }
}

/// A quadratic refinement `q` of an alternating form over GF(2), stored by
/// its values on the standard basis. Elsewhere
/// `q(x + y) = q(x) + q(y) + b(x, y)` determines it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticFormF2 {
    pub bilinear: F2Matrix,
    pub values: F2Vector,
}

impl QuadraticFormF2 {
    pub fn new(bilinear: F2Matrix, values: F2Vector) -> Result<Self> {
        if values.dim() != bilinear.dim() {
            return Err(Error::DimensionMismatch { expected: bilinear.dim(), found: values.dim() });
        }
        if !bilinear.is_alternating() {
            return Err(Error::NotAlternating);
        }
        Ok(QuadraticFormF2 { bilinear, values })
    }

    /// The standard hyperbolic form of rank `2g` with pairs `(e_{2i}, e_{2i+1})`.
    pub fn standard_symplectic(genus: usize) -> F2Matrix {
        let mut b = F2Matrix::zero(2 * genus);
        for i in 0..genus {
            b.set(2 * i, 2 * i + 1, true);
            b.set(2 * i + 1, 2 * i, true);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.bilinear.dim()
    }

    pub fn eval(&self, x: &F2Vector) -> bool {
        let mut acc = x.dot(&self.values);
        for i in 0..self.dim() {
            if !x.get(i) {
                continue;
            }
            for j in i + 1..self.dim() {
                if x.get(j) && self.bilinear.get(i, j) {
                    acc = !acc;
                }
            }
        }
        acc
    }

    /// Orthogonal sum.
    pub fn direct_sum(&self, other: &QuadraticFormF2) -> QuadraticFormF2 {
        QuadraticFormF2 {
            bilinear: self.bilinear.direct_sum(&other.bilinear),
            values: self.values.concat(&other.values),
        }
    }
}

/// A symplectic basis `a_1, b_1, a_2, b_2, ...` of a nondegenerate
/// alternating form, found by greedy pairing and elimination.
pub fn symplectic_basis(bilinear: &F2Matrix) -> Result<Vec<F2Vector>> {
    if !bilinear.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let n = bilinear.dim();
    let mut rest: Vec<F2Vector> = (0..n).map(|i| F2Vector::basis(n, i)).collect();
    let mut basis = Vec::with_capacity(n);
    while let Some(a) = rest.first().copied() {
        let partner = rest[1..]
            .iter()
            .position(|c| bilinear.bilinear(&a, c))
            .ok_or(Error::Degenerate)?
            + 1;
        let b = rest[partner];
        rest = rest
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != partner)
            .map(|(_, &c)| {
                let mut c2 = c;
                if bilinear.bilinear(&c, &b) {
                    c2 = c2 + a;
                }
                if bilinear.bilinear(&c, &a) {
                    c2 = c2 + b;
                }
                c2
            })
            .collect();
        basis.push(a);
        basis.push(b);
    }
    Ok(basis)
}

/// Arf invariant `sum_i q(a_i) q(b_i)` over a symplectic basis.
pub fn arf(q: &QuadraticFormF2) -> Result<bool> {
    let basis = symplectic_basis(&q.bilinear)?;
    Ok(basis
        .chunks(2)
        .fold(false, |acc, pair| acc ^ (q.eval(&pair[0]) & q.eval(&pair[1]))))
}

fn check_generators(d: usize, generators: &[F2Matrix]) -> Result<()> {
    for (i, g) in generators.iter().enumerate() {
        if g.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: g.dim() });
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible(i));
        }
    }
    Ok(())
}

/// The orbit of `v` under the group generated by `generators`, sorted.
pub fn orbit_of(v: F2Vector, generators: &[F2Matrix]) -> Vec<F2Vector> {
    let mut seen = BTreeSet::from([v]);
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for g in generators {
            let w = g.apply(&u);
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Partition of `F_2^d` (or of the subset selected by `subset`) into orbits
/// of the group generated by `generators`.
///
/// Each orbit is sorted and the orbits are ordered by their minimal element,
/// which serves as the canonical representative.
pub fn orbits(
    d: usize,
    generators: &[F2Matrix],
    subset: Option<&dyn Fn(&F2Vector) -> bool>,
) -> Result<Vec<Vec<F2Vector>>> {
    if d > MAX_ORBIT_DIMENSION {
        return Err(Error::DimensionTooLarge { d, cap: MAX_ORBIT_DIMENSION });
    }
    check_generators(d, generators)?;
    let member = |v: &F2Vector| subset.is_none_or(|p| p(v));
    let mut visited = vec![false; 1 << d];
    let mut result = Vec::new();
    for v in F2Vector::all(d) {
        if visited[v.bits() as usize] || !member(&v) {
            continue;
        }
        visited[v.bits() as usize] = true;
        let mut orbit = vec![v];
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for g in generators {
                let w = g.apply(&u);
                if !member(&w) {
                    return Err(Error::SubsetNotClosed);
                }
                if !visited[w.bits() as usize] {
                    visited[w.bits() as usize] = true;
                    orbit.push(w);
                    queue.push_back(w);
                }
            }
        }
        orbit.sort();
        result.push(orbit);
    }
    // vectors are visited in canonical order, so orbits already are sorted by minimum
    Ok(result)
}

/// The matrix group generated by `generators`, by breadth-first closure.
pub fn group_closure(generators: &[F2Matrix], cap: usize) -> Result<BTreeSet<F2Matrix>> {
    let d = match generators.first() {
        Some(g) => g.dim(),
        None => return Err(Error::InvalidParameter("empty generator list".into())),
    };
    check_generators(d, generators)?;
    let id = F2Matrix::identity(d);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let p = g.mul(&m);
            if !seen.contains(&p) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(p.clone());
                queue.push_back(p);
            }
        }
    }
    Ok(seen)
}

/// Generators of `GL_d(F_2)`: the cyclic coordinate shift and the
/// transvection `e_0 -> e_0 + e_1`.
pub fn gl_generators(d: usize) -> Vec<F2Matrix> {
    match d {
        0 => vec![],
        1 => vec![F2Matrix::identity(1)],
        _ => {
            let mut shift = F2Matrix::zero(d);
            for i in 0..d {
                shift.set((i + 1) % d, i, true);
            }
            let mut transvection = F2Matrix::identity(d);
            transvection.set(1, 0, true);
            vec![shift, transvection]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> F2Vector {
        s.parse().unwrap()
    }

    fn m(rows: &[&str]) -> F2Matrix {
        F2Matrix::from_bitstrings(rows).unwrap()
    }

    #[test]
    fn vector_text() {
        assert_eq!(v("110").to_string(), "110");
        assert!(v("110").get(0) && !v("110").get(2));
        assert!("12".parse::<F2Vector>().is_err());
        assert!(v("011") < v("100"));
        let all: Vec<String> = F2Vector::all(2).map(|x| x.to_string()).collect();
        assert_eq!(all, ["00", "01", "10", "11"]);
    }

    #[test]
    fn matrix_apply_and_inverse() {
        let a = m(&["110", "011", "001"]);
        assert_eq!(a.apply(&v("001")), v("011"));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), F2Matrix::identity(3));
        assert!(m(&["11", "11"]).inverse().is_none());
        assert_eq!(m(&["11", "11"]).rank(), 1);
        assert!(F2Matrix::from_bitstrings(&["11", "1"]).is_err());
    }

    #[test]
    fn matrix_json() {
        let a = m(&["110", "011", "001"]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"["110","011","001"]"#);
        assert_eq!(serde_json::from_str::<F2Matrix>(&text).unwrap(), a);
    }

    fn form(b: &F2Matrix, values: &str) -> QuadraticFormF2 {
        QuadraticFormF2::new(b.clone(), v(values)).unwrap()
    }

    #[test]
    fn arf_genus_one() {
        let b = QuadraticFormF2::standard_symplectic(1);
        assert!(!arf(&form(&b, "00")).unwrap());
        assert!(!arf(&form(&b, "10")).unwrap());
        assert!(arf(&form(&b, "11")).unwrap());
    }

    #[test]
    fn arf_genus_two_all_ones() {
        let b = QuadraticFormF2::standard_symplectic(2);
        assert!(!arf(&form(&b, "1111")).unwrap());
    }

    #[test]
    fn symplectic_basis_standard() {
        let b = QuadraticFormF2::standard_symplectic(1);
        assert_eq!(symplectic_basis(&b).unwrap(), vec![v("10"), v("01")]);
    }

    #[test]
    fn symplectic_basis_permuted() {
        // pairs (e0, e2) and (e1, e3), plus a cross term b(e0, e3)
        let b = m(&["0011", "0001", "1000", "1100"]);
        let basis = symplectic_basis(&b).unwrap();
        assert_eq!(basis.len(), 4);
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let expected = i / 2 == j / 2 && i != j;
                assert_eq!(b.bilinear(x, y), expected, "pair ({i},{j})");
            }
        }
        let as_matrix = F2Matrix::from_rows(basis).unwrap();
        assert!(as_matrix.is_invertible());
    }

    #[test]
    fn degenerate_and_non_alternating() {
        assert_eq!(symplectic_basis(&F2Matrix::zero(2)), Err(Error::Degenerate));
        assert_eq!(symplectic_basis(&m(&["010", "100", "000"])), Err(Error::Degenerate));
        assert_eq!(symplectic_basis(&m(&["11", "10"])), Err(Error::NotAlternating));
        assert_eq!(
            QuadraticFormF2::new(F2Matrix::identity(2), v("00")),
            Err(Error::NotAlternating)
        );
    }

    #[test]
    fn gl3_orbits() {
        let orbits = orbits(3, &gl_generators(3), None).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0], vec![v("000")]);
        assert_eq!(orbits[1].len(), 7);
    }

    #[test]
    fn identity_orbits() {
        let orbits = orbits(2, &[F2Matrix::identity(2)], None).unwrap();
        assert_eq!(orbits.len(), 4);
        let orbits = super::orbits(2, &[], None).unwrap();
        assert_eq!(orbits.len(), 4);
    }

    #[test]
    fn orbit_errors() {
        assert_eq!(orbits(2, &[m(&["11", "11"])], None), Err(Error::NotInvertible(0)));
        assert!(matches!(orbits(21, &[], None), Err(Error::DimensionTooLarge { .. })));
        let swap = m(&["01", "10"]);
        let first_only = |x: &F2Vector| x.get(0) && !x.get(1);
        assert_eq!(orbits(2, std::slice::from_ref(&swap), Some(&first_only)), Err(Error::SubsetNotClosed));
        let nonzero = |x: &F2Vector| !x.is_zero();
        assert_eq!(orbits(2, &[swap], Some(&nonzero)).unwrap().len(), 2);
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(group_closure(&[F2Matrix::identity(3)], 10).unwrap().len(), 1);
        assert_eq!(group_closure(&gl_generators(2), 100).unwrap().len(), 6);
        assert_eq!(group_closure(&gl_generators(3), 1000).unwrap().len(), 168);
        assert_eq!(
            group_closure(&gl_generators(3), 100),
            Err(Error::CapExceeded { cap: 100 })
        );
    }

    #[test]
    fn closure_matches_brute_force_d3() {
        // swap of the first two coordinates and e_2 -> e_2 + e_0
        let swap = m(&["010", "100", "001"]);
        let mut t = F2Matrix::identity(3);
        t.set(0, 2, true);
        let gens = [swap, t];
        let closure = group_closure(&gens, 1000).unwrap();
        // brute force: every invertible matrix that is a product of at most
        // 12 generators (the group is small, so words of this length suffice)
        let mut words = BTreeSet::from([F2Matrix::identity(3)]);
        for _ in 0..12 {
            let next: Vec<_> = words.iter().flat_map(|w| gens.iter().map(move |g| g.mul(w))).collect();
            words.extend(next);
        }
        assert_eq!(closure, words);
        // and it is a subgroup of the 168 invertible 3x3 matrices
        let all_invertible = (0u32..1 << 9)
            .map(|k| F2Matrix { dim: 3, rows: vec![k & 7, k >> 3 & 7, k >> 6 & 7] })
            .filter(F2Matrix::is_invertible)
            .count();
        assert_eq!(all_invertible, 168);
        assert!(closure.iter().all(F2Matrix::is_invertible));
    }

    #[test]
    fn cap_env_default() {
        assert!(closure_cap() > 0);
    }
}
