//! Hermitian forms over group rings.
//!
//! A form on `I[pi]^eps (+) Z[pi]^n` is stored through its unique extension to
//! `Z[pi]^(eps + n)`: for an infinite group with `H^1(pi; Z[pi]) = 0` every
//! pairing on the augmentation ideal extends uniquely, and is recovered from
//! the corner entry `alpha` via `lambda(b, b') = b alpha conj(b')`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::groupring::RingElem;
use crate::words::{FamilyTag, Group};

/// A square matrix over `Z[pi]`, not necessarily hermitian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    group: Arc<Group>,
    size: usize,
    entries: Vec<RingElem>,
}

impl RingMatrix {
    pub fn new(group: Arc<Group>, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::NonSquare { rows: size, cols: row.len() });
            }
            for e in row {
                if **e.group() != *group {
                    return Err(Error::FamilyMismatch);
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix { group, size, entries })
    }

    pub fn zero(group: Arc<Group>, size: usize) -> Self {
        let entries = vec![RingElem::zero(group.clone()); size * size];
        RingMatrix { group, size, entries }
    }

    pub fn from_integers(group: Arc<Group>, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&n| RingElem::integer(group.clone(), n)).collect())
            .collect();
        RingMatrix::new(group, rows)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RingElem) {
        self.entries[i * self.size + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<RingElem>> {
        self.entries.chunks(self.size.max(1)).take(self.size).map(<[_]>::to_vec).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> RingMatrix {
        let mut out = RingMatrix::zero(self.group.clone(), self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(i, j, self.get(j, i).involution());
            }
        }
        out
    }

    fn hermitian_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.size {
            for j in i..self.size {
                if *self.get(i, j) != self.get(j, i).involution() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_violation().is_none()
    }

    pub fn block_diagonal(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.group != other.group {
            return Err(Error::FamilyMismatch);
        }
        let n = self.size + other.size;
        let mut out = RingMatrix::zero(self.group.clone(), n);
        for i in 0..self.size {
            for j in 0..self.size {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                out.set(self.size + i, self.size + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }
}

/// A matrix with `A = adjoint(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix(RingMatrix);

impl TryFrom<RingMatrix> for HermitianMatrix {
    type Error = Error;
    fn try_from(m: RingMatrix) -> Result<Self> {
        match m.hermitian_violation() {
            Some((i, j)) => Err(Error::NotHermitian(i, j)),
            None => Ok(HermitianMatrix(m)),
        }
    }
}

impl std::ops::Deref for HermitianMatrix {
    type Target = RingMatrix;
    fn deref(&self) -> &RingMatrix {
        &self.0
    }
}

impl HermitianMatrix {
    pub fn into_inner(self) -> RingMatrix {
        self.0
    }

    /// `[[0, 1], [1, 0]]`.
    pub fn hyperbolic(group: Arc<Group>) -> Self {
        HermitianMatrix(RingMatrix::from_integers(group, &[vec![0, 1], vec![1, 0]]).unwrap())
    }

    /// `sign * Id_n`.
    pub fn scalar_identity(group: Arc<Group>, n: usize, sign: i64) -> Self {
        let mut m = RingMatrix::zero(group.clone(), n);
        for i in 0..n {
            m.set(i, i, RingElem::integer(group.clone(), sign));
        }
        HermitianMatrix(m)
    }
}

/// The E8 Cartan matrix: diagonal 2, `-1` along the Dynkin diagram (a chain
/// `0 - 1 - 2 - 3 - 4 - 5 - 6` with node 7 attached to node 4).
pub fn e8_integer() -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
    edges.push((4, 7));
    for (i, j) in edges {
        m[i][j] = -1;
        m[j][i] = -1;
    }
    m
}

/// The E8 form as a matrix over `Z[pi]`.
pub fn e8_block(group: Arc<Group>) -> HermitianMatrix {
    HermitianMatrix(RingMatrix::from_integers(group, &e8_integer()).unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "Even",
            Parity::Odd => "Odd",
        })
    }
}

/// A hermitian form on `I[pi]^epsilon (+) Z[pi]^n`, stored as its extension
/// to `Z[pi]^(epsilon + n)`; when `epsilon` holds, index 0 is the
/// augmentation-ideal summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedForm {
    epsilon: bool,
    matrix: HermitianMatrix,
}

impl AugmentedForm {
    pub fn new(epsilon: bool, matrix: HermitianMatrix) -> Result<Self> {
        if epsilon && matrix.size() == 0 {
            return Err(Error::InvalidParameter("an augmentation summand needs a matrix of size >= 1".into()));
        }
        Ok(AugmentedForm { epsilon, matrix })
    }

    pub fn free(matrix: HermitianMatrix) -> Self {
        AugmentedForm { epsilon: false, matrix }
    }

    /// The form on the zero module.
    pub fn empty(group: Arc<Group>) -> Self {
        AugmentedForm::free(HermitianMatrix(RingMatrix::zero(group, 0)))
    }

    /// The form on `I[pi]` determined by `alpha`, which must be self-conjugate.
    pub fn on_augmentation_ideal(alpha: RingElem) -> Result<Self> {
        let group = alpha.group().clone();
        let m = RingMatrix::new(group, vec![vec![alpha]])?;
        AugmentedForm::new(true, m.try_into()?)
    }

    pub fn epsilon(&self) -> bool {
        self.epsilon
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn group(&self) -> &Arc<Group> {
        self.matrix.group()
    }

    pub fn free_rank(&self) -> usize {
        self.matrix.size() - usize::from(self.epsilon)
    }

    /// Orthogonal sum; the augmentation summand, if any, stays at index 0.
    pub fn direct_sum(&self, other: &AugmentedForm) -> Result<AugmentedForm> {
        if self.epsilon && other.epsilon {
            return Err(Error::DuplicateAugmentationSummand);
        }
        let (first, second) = if other.epsilon { (other, self) } else { (self, other) };
        let m = first.matrix.block_diagonal(&second.matrix)?;
        Ok(AugmentedForm { epsilon: self.epsilon || other.epsilon, matrix: HermitianMatrix(m) })
    }

    /// Appends `k` hyperbolic blocks.
    pub fn stabilize_hyperbolic(&self, k: usize) -> AugmentedForm {
        let h = AugmentedForm::free(HermitianMatrix::hyperbolic(self.group().clone()));
        (0..k).fold(self.clone(), |acc, _| acc.direct_sum(&h).expect("hyperbolic block is free"))
    }

    /// The element `alpha` with `lambda(b, b') = b alpha conj(b')` on `I[pi]`.
    pub fn restrict_to_ipi(&self) -> Result<RingElem> {
        if !self.epsilon {
            return Err(Error::NoAugmentationSummand);
        }
        Ok(self.matrix.get(0, 0).clone())
    }

    /// Parity of the form.
    ///
    /// Off-diagonal couplings between summands never obstruct evenness, so
    /// the form is even iff its restriction to `I[pi]` is even and every
    /// diagonal entry of the free part is in the image of `1 + T`. When the
    /// form has a quadratic refinement the free diagonal condition holds
    /// automatically and only the `I[pi]` corner matters.
    pub fn parity(&self) -> Parity {
        let even = (0..self.matrix.size()).all(|i| self.matrix.get(i, i).in_image_one_plus_t());
        if even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The entries as integers, when every entry is an integer multiple of 1.
    pub fn integer_matrix(&self) -> Result<Vec<Vec<BigInt>>> {
        let n = self.matrix.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.matrix.get(i, j).as_integer().ok_or(Error::NonIntegerEntry(i, j)))
                    .collect()
            })
            .collect()
    }

    /// Entrywise augmentation of the extended matrix.
    pub fn augmented_integer_matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.matrix.size();
        (0..n).map(|i| (0..n).map(|j| self.matrix.get(i, j).augmentation()).collect()).collect()
    }

    /// Signature of an integer-valued form.
    pub fn signature_int(&self) -> Result<i64> {
        signature_of_symmetric(&self.integer_matrix()?)
    }

    pub fn to_json(&self) -> Value {
        let group = self.group();
        serde_json::to_value(FormFile {
            epsilon: u8::from(self.epsilon),
            family: group.tag(),
            generators: Some(group.generators().to_vec()),
            entries: self.matrix.entries.iter().map(RingElem::to_json).collect(),
        })
        .expect("form serializes")
    }

    /// Loads a form file, rejecting non-hermitian input.
    pub fn from_json(value: &Value) -> Result<Self> {
        let file: FormFile = serde_json::from_value(value.clone())?;
        let generators = match (file.generators, file.family) {
            (Some(g), _) => g,
            (None, FamilyTag::Nil(z)) => Group::nil(z)?.generators().to_vec(),
            (None, _) => return Err(Error::Parse("form file needs `generators` for this family".into())),
        };
        let group = Arc::new(Group::new(file.family, generators)?);
        let len = file.entries.len();
        let n = (len as f64).sqrt().round() as usize;
        if n * n != len {
            return Err(Error::Parse(format!("{len} entries do not form a square matrix")));
        }
        let entries = file
            .entries
            .iter()
            .map(|e| RingElem::from_json(group.clone(), e))
            .collect::<Result<Vec<_>>>()?;
        let rows = entries.chunks(n.max(1)).take(n).map(<[_]>::to_vec).collect();
        let epsilon = match file.epsilon {
            0 => false,
            1 => true,
            e => return Err(Error::Parse(format!("epsilon must be 0 or 1, got {e}"))),
        };
        AugmentedForm::new(epsilon, RingMatrix::new(group, rows)?.try_into()?)
    }
}

#[derive(Serialize, Deserialize)]
struct FormFile {
    epsilon: u8,
    family: FamilyTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<String>>,
    entries: Vec<Value>,
}

impl fmt::Display for AugmentedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.matrix.size();
        let cells: Vec<Vec<String>> =
            (0..n).map(|i| (0..n).map(|j| self.matrix.get(i, j).to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            let label = if self.epsilon && i == 0 { "I" } else { " " };
            write!(f, "{label} [")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Signature of a symmetric integer matrix by exact rational LDL^T.
///
/// Nonzero diagonal pivots are taken first; when every remaining diagonal
/// entry vanishes a 2x2 block `[[0, a], [a, 0]]` is eliminated instead, which
/// contributes one positive and one negative square.
pub fn signature_of_symmetric(m: &[Vec<BigInt>]) -> Result<i64> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquare { rows: n, cols: row.len() });
        }
        for (j, above) in m.iter().enumerate().take(i) {
            if row[j] != above[i] {
                return Err(Error::NotHermitian(j, i));
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut signature = 0i64;
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.swap_remove(pos);
            let pivot = a[p][p].clone();
            signature += if pivot.is_positive() { 1 } else { -1 };
            let col: Vec<BigRational> = active.iter().map(|&i| a[i][p].clone()).collect();
            for (x, &i) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                let factor = &col[x] / &pivot;
                for (y, &j) in active.iter().enumerate() {
                    let delta = &factor * &col[y];
                    a[i][j] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..].iter().position(|&j| !a[i][j].is_zero()).map(|y| (x, x + 1 + y))
        });
        let Some((x, y)) = pair else {
            // the remaining block is zero
            break;
        };
        let (p, q) = (active[x], active[y]);
        active.retain(|&i| i != p && i != q);
        // inverse of [[0, c], [c, 0]] is [[0, 1/c], [1/c, 0]]
        let c = a[p][q].clone();
        let up: Vec<BigRational> = active.iter().map(|&i| a[i][p].clone()).collect();
        let uq: Vec<BigRational> = active.iter().map(|&i| a[i][q].clone()).collect();
        for (s, &i) in active.iter().enumerate() {
            for (t, &j) in active.iter().enumerate() {
                let delta = (&up[s] * &uq[t] + &uq[s] * &up[t]) / &c;
                a[i][j] -= delta;
            }
        }
    }
    Ok(signature)
}

/// Converts a small integer matrix for [`signature_of_symmetric`].
pub fn to_bigint_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn z3() -> Arc<Group> {
        Arc::new(Group::zn(3))
    }

    fn el(g: &Arc<Group>, s: &str) -> RingElem {
        RingElem::from_word(g.clone(), &g.parse_word(s).unwrap()).unwrap()
    }

    fn int(g: &Arc<Group>, n: i64) -> RingElem {
        RingElem::integer(g.clone(), n)
    }

    #[test]
    fn hermitian_examples() {
        let g = z3();
        let m = RingMatrix::from_integers(g.clone(), &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(m.is_hermitian());
        let m = RingMatrix::new(g.clone(), vec![vec![int(&g, 0), el(&g, "g1")], vec![el(&g, "g1^-1"), int(&g, 0)]])
            .unwrap();
        assert!(m.is_hermitian());
        let m = RingMatrix::new(g.clone(), vec![vec![int(&g, 0), el(&g, "g1")], vec![el(&g, "g1"), int(&g, 0)]])
            .unwrap();
        assert!(!m.is_hermitian());
        assert_eq!(HermitianMatrix::try_from(m), Err(Error::NotHermitian(0, 1)));
    }

    #[test]
    fn non_square() {
        let g = z3();
        assert!(matches!(
            RingMatrix::new(g.clone(), vec![vec![int(&g, 1), int(&g, 2)]]),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn adjoint_is_involutive() {
        let g = z3();
        let m = RingMatrix::new(
            g.clone(),
            vec![vec![el(&g, "g1 g2"), int(&g, 3)], vec![&el(&g, "g3") - &int(&g, 1), el(&g, "g2^-2")]],
        )
        .unwrap();
        assert_eq!(m.adjoint().adjoint(), m);
        assert_ne!(m.adjoint(), m);
    }

    #[test]
    fn stabilize() {
        let g = z3();
        let empty = AugmentedForm::empty(g.clone());
        assert_eq!(empty.stabilize_hyperbolic(0), empty);
        let h = empty.stabilize_hyperbolic(1);
        assert_eq!(&**h.matrix(), &RingMatrix::from_integers(g, &[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(h.signature_int().unwrap(), 0);
        assert_eq!(h.parity(), Parity::Even);
    }

    #[test]
    fn duplicate_ipi() {
        let g = z3();
        let a = AugmentedForm::on_augmentation_ideal(int(&g, 1)).unwrap();
        assert_eq!(a.direct_sum(&a), Err(Error::DuplicateAugmentationSummand));
        let h = AugmentedForm::free(HermitianMatrix::hyperbolic(g));
        let s = h.direct_sum(&a).unwrap();
        assert!(s.epsilon());
        assert_eq!(s.restrict_to_ipi().unwrap(), a.restrict_to_ipi().unwrap());
    }

    #[test]
    fn restrict_round_trip() {
        let g = z3();
        let alpha = &(&int(&g, 2) - &el(&g, "g1")) - &el(&g, "g1^-1");
        let form = AugmentedForm::on_augmentation_ideal(alpha.clone()).unwrap();
        assert_eq!(form.restrict_to_ipi().unwrap(), alpha);
        let free = AugmentedForm::free(HermitianMatrix::hyperbolic(g));
        assert_eq!(free.restrict_to_ipi(), Err(Error::NoAugmentationSummand));
    }

    #[test]
    fn parity_examples() {
        let g = z3();
        let m1 = AugmentedForm::new(true, RingMatrix::from_integers(g.clone(), &[vec![1, 1], vec![1, 0]]).unwrap().try_into().unwrap()).unwrap();
        assert_eq!(m1.parity(), Parity::Odd);
        let corner2 = AugmentedForm::on_augmentation_ideal(int(&g, 2)).unwrap();
        assert_eq!(corner2.parity(), Parity::Even);
        // no quadratic refinement on the free part: odd
        let id = AugmentedForm::free(HermitianMatrix::scalar_identity(g, 1, 1));
        assert_eq!(id.parity(), Parity::Odd);
    }

    #[test]
    fn signatures() {
        let h = to_bigint_matrix(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(signature_of_symmetric(&h).unwrap(), 0);
        let d = to_bigint_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, -1]]);
        assert_eq!(signature_of_symmetric(&d).unwrap(), 1);
        assert_eq!(signature_of_symmetric(&to_bigint_matrix(&e8_integer())).unwrap(), 8);
        let zero = to_bigint_matrix(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(signature_of_symmetric(&zero).unwrap(), 0);
        assert_eq!(signature_of_symmetric(&[]).unwrap(), 0);
        let asym = to_bigint_matrix(&[vec![0, 1], vec![2, 0]]);
        assert!(signature_of_symmetric(&asym).is_err());
    }

    /// Leading principal minors by fraction-free elimination; all positive
    /// means positive definite, so E8 has signature 8 independently of LDL^T.
    #[test]
    fn e8_is_positive_definite_unimodular() {
        let m = e8_integer();
        let mut minors = Vec::new();
        for k in 1..=8 {
            let mut a: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| m[i][j] as i128).collect()).collect();
            let mut prev = 1i128;
            for p in 0..k - 1 {
                for i in p + 1..k {
                    for j in p + 1..k {
                        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
                    }
                }
                prev = a[p][p];
            }
            minors.push(a[k - 1][k - 1]);
        }
        assert!(minors.iter().all(|&d| d > 0), "{minors:?}");
        assert_eq!(minors[7], 1);
    }

    #[test]
    fn e8_sums() {
        let g = z3();
        let e8 = AugmentedForm::free(e8_block(g.clone()));
        assert_eq!(e8.parity(), Parity::Even);
        assert_eq!(e8.signature_int().unwrap(), 8);
        assert_eq!(e8.direct_sum(&e8).unwrap().signature_int().unwrap(), 16);
    }

    #[test]
    fn signature_rejects_group_entries() {
        let g = z3();
        let form = AugmentedForm::on_augmentation_ideal(&el(&g, "g1") + &el(&g, "g1^-1")).unwrap();
        assert_eq!(form.signature_int(), Err(Error::NonIntegerEntry(0, 0)));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = Arc::new(Group::nil(2).unwrap());
        let x = RingElem::from_word(g.clone(), &Word::generator(1, 1)).unwrap();
        let m = RingMatrix::new(
            g.clone(),
            vec![vec![int(&g, 2), &int(&g, 1) - &x.involution()], vec![&int(&g, 1) - &x, int(&g, 0)]],
        )
        .unwrap();
        let form = AugmentedForm::new(true, m.try_into().unwrap()).unwrap();
        let back = AugmentedForm::from_json(&form.to_json()).unwrap();
        assert_eq!(back, form);

        let bad = serde_json::json!({
            "epsilon": 0, "family": {"nil": 2},
            "entries": [[], [{"coeff": 1, "word": "x"}], [{"coeff": 1, "word": "x"}], []]
        });
        assert!(matches!(AugmentedForm::from_json(&bad), Err(Error::NotHermitian(0, 1))));
    }
}
