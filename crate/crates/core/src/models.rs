//! Equivariant intersection forms of the model 4-manifolds.
//!
//! * `M_sigma`: surgery on `X x S^1` along a circle fibre; `pi_2 = I[pi] (+) Z[pi]`.
//! * `P(gamma)`: built from a square presentation of `pi`; the remaining even
//!   classes of signature zero.
//! * `N(w)`: the null-bordant almost spin model.
//!
//! Nonzero signatures are realized by adding copies of `+-E8`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::classify::{BordismClassSpin, Category, Invariants, Tau};
use crate::error::{Error, Result};
use crate::f2::F2Vector;
use crate::forms::{e8_block, AugmentedForm, HermitianMatrix, Parity, RingMatrix};
use crate::groupring::RingElem;
use crate::words::{Group, Presentation};

/// Normal 1-type datum: `w = infinity`, `w = 0`, or a nonzero
/// `w in H^2(B pi; Z/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WType {
    TotallyNonSpin,
    Spin,
    AlmostSpin(F2Vector),
}

impl WType {
    /// Maps the zero vector to [`WType::Spin`].
    pub fn from_vector(w: F2Vector) -> WType {
        if w.is_zero() {
            WType::Spin
        } else {
            WType::AlmostSpin(w)
        }
    }
}

impl fmt::Display for WType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WType::TotallyNonSpin => f.write_str("infinity"),
            WType::Spin => f.write_str("0"),
            WType::AlmostSpin(w) => write!(f, "{w}"),
        }
    }
}

impl FromStr for WType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "infinity" | "inf" | "∞" => Ok(WType::TotallyNonSpin),
            bits => Ok(WType::from_vector(bits.parse()?)),
        }
    }
}

impl Serialize for WType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for WType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Hermitian augmented normal 1-type: the data of a 4-manifold that the
/// stable classification sees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Han1 {
    pub w: WType,
    pub signature: i64,
    pub form: AugmentedForm,
    /// `H_2(B pi; Z/2)` class of tau, known from the construction. Never
    /// present for odd forms.
    pub tau: Option<F2Vector>,
    /// Kirby-Siebenmann bit, recorded only where it is an independent datum.
    pub ks: Option<bool>,
    /// Bordism class `(signature, phi, eps)` realized by the construction.
    pub bordism: Option<BordismClassSpin>,
    /// Description of each basis vector of the extended form.
    pub basis: Vec<String>,
    pub note: Option<String>,
}

impl Han1 {
    fn new(w: WType, signature: i64, form: AugmentedForm, tau: Option<F2Vector>) -> Result<Self> {
        if tau.is_some() && form.parity() == Parity::Odd {
            return Err(Error::UnexpectedTau);
        }
        let basis = default_basis(&form);
        Ok(Han1 { w, signature, form, tau, ks: None, bordism: None, basis, note: None })
    }

    pub fn parity(&self) -> Parity {
        self.form.parity()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "w": self.w.to_string(),
            "signature": self.signature,
            "tau": self.tau.map(|t| t.to_string()),
            "form": self.form.to_json(),
            "basis": self.basis,
        });
        if let Some(ks) = self.ks {
            v["ks"] = json!(u8::from(ks));
        }
        if let Some(b) = &self.bordism {
            v["bordism"] = serde_json::to_value(b).expect("bordism class serializes");
        }
        if let Some(note) = &self.note {
            v["note"] = json!(note);
        }
        v
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct File {
            w: WType,
            signature: i64,
            tau: Option<F2Vector>,
            form: Value,
            #[serde(default)]
            ks: Option<u8>,
            #[serde(default)]
            bordism: Option<BordismClassSpin>,
            #[serde(default)]
            basis: Option<Vec<String>>,
            #[serde(default)]
            note: Option<String>,
        }
        let file: File = serde_json::from_value(value.clone())?;
        let form = AugmentedForm::from_json(&file.form)?;
        let mut h = Han1::new(file.w, file.signature, form, file.tau)?;
        h.ks = match file.ks {
            None => None,
            Some(0) => Some(false),
            Some(1) => Some(true),
            Some(k) => return Err(Error::Parse(format!("ks must be 0 or 1, got {k}"))),
        };
        h.bordism = file.bordism;
        if let Some(basis) = file.basis {
            h.basis = basis;
        }
        h.note = file.note;
        Ok(h)
    }

    /// Adds `n` copies of `E8` (or `-n` copies of `-E8` when `n < 0`).
    fn plus_e8(mut self, n: i64) -> Result<Self> {
        let group = self.form.group().clone();
        let sign = n.signum();
        for _ in 0..n.unsigned_abs() {
            let block = e8_multiple(group.clone(), sign)?;
            self.form = self.form.direct_sum(&block)?;
            for k in 0..8 {
                self.basis.push(format!("{}E8[{k}]", if sign < 0 { "-" } else { "" }));
            }
        }
        self.signature += 8 * n;
        Ok(self)
    }
}

fn default_basis(form: &AugmentedForm) -> Vec<String> {
    let mut basis = Vec::new();
    if form.epsilon() {
        basis.push("I".to_string());
    }
    for i in 0..form.free_rank() {
        basis.push(format!("f{}", i + 1));
    }
    basis
}

fn e8_multiple(group: Arc<Group>, sign: i64) -> Result<AugmentedForm> {
    let e8 = e8_block(group);
    if sign >= 0 {
        return Ok(AugmentedForm::free(e8));
    }
    let mut m = e8.into_inner();
    for i in 0..8 {
        for j in 0..8 {
            let v = -m.get(i, j);
            m.set(i, j, v);
        }
    }
    Ok(AugmentedForm::free(m.try_into()?))
}

fn int(group: &Arc<Group>, n: i64) -> RingElem {
    RingElem::integer(group.clone(), n)
}

fn require_normal_forms(group: &Group) -> Result<()> {
    if group.has_normal_forms() {
        Ok(())
    } else {
        Err(Error::NoNormalForm)
    }
}

/// `M_sigma`: extended form `[[sigma, 1], [1, 0]]` on `I[pi] (+) Z[pi]`.
///
/// For `sigma = 1` the spin structure can be chosen to realize any bordism
/// class `(0, gamma, 1)`; for `sigma = 0` the manifold is null bordant, so
/// `gamma` must vanish.
pub fn model_m_sigma(group: Arc<Group>, sigma: bool, gamma: F2Vector) -> Result<Han1> {
    require_normal_forms(&group)?;
    let d = group.h2_dimension();
    if gamma.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: gamma.dim() });
    }
    if !sigma && !gamma.is_zero() {
        return Err(Error::SigmaGammaConflict);
    }
    let m = RingMatrix::from_integers(group, &[vec![i64::from(sigma), 1], vec![1, 0]])?;
    let form = AugmentedForm::new(true, m.try_into()?)?;
    let tau = (!sigma).then(|| F2Vector::zero(d));
    let mut h = Han1::new(WType::Spin, 0, form, tau)?;
    h.bordism = Some(BordismClassSpin { sigma: 0, phi: gamma, eps: sigma });
    h.basis = vec!["I".into(), "Z".into()];
    Ok(h)
}

/// Checks that `gamma` (values on generators) kills every relator mod 2.
pub fn check_gamma(presentation: &Presentation, gamma: &[bool]) -> Result<()> {
    let n = presentation.group().rank();
    if gamma.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: gamma.len() });
    }
    for (i, r) in presentation.relators().iter().enumerate() {
        let value: i64 = (0..n).filter(|&k| gamma[k]).map(|k| r.exponent_sum(k)).sum();
        if value.rem_euclid(2) != 0 {
            return Err(Error::GammaNotHomomorphism(i));
        }
    }
    Ok(())
}

/// Coordinates in `H_2(B pi; Z/2) = Hom(pi, Z/2)` of the homomorphism with
/// generator values `gamma`.
pub fn tau_from_gamma(group: &Group, gamma: &[bool]) -> F2Vector {
    let bits: Vec<bool> = group.h1_coordinate_generators().iter().map(|&g| gamma[g]).collect();
    F2Vector::from_slice(&bits)
}

/// Generator values of the homomorphism with coordinates `tau`.
pub fn gamma_from_tau(group: &Group, tau: &F2Vector) -> Result<Vec<bool>> {
    let coords = group.h1_coordinate_generators();
    if tau.dim() != coords.len() {
        return Err(Error::DimensionMismatch { expected: coords.len(), found: tau.dim() });
    }
    let mut gamma = vec![false; group.rank()];
    for (i, &g) in coords.iter().enumerate() {
        gamma[g] = tau.get(i);
    }
    Ok(gamma)
}

/// The model `P(gamma)` built from a square presentation with generators
/// `g_1..g_n` and relators `R_1..R_n`.
///
/// In the order `(Z[pi], I[pi], Z[pi]^n, Z[pi]^n)` the extended form is
///
/// ```text
/// [ 0   1          0                    0     ]
/// [ 1   2          1 - g_j^-1           0     ]
/// [ 0   1 - g_i    (1-g_i)(1-g_j^-1)    d_ij  ]
/// [ 0   0          d_ij                 F_ij  ]
/// ```
///
/// with `F_ij = sum_k gamma(g_k) (D_k R_i) conj(D_k R_j)`. The stored matrix
/// swaps the first two summands so that `I[pi]` sits at index 0.
pub fn model_p(presentation: &Presentation, gamma: &[bool]) -> Result<Han1> {
    let group = presentation.group().clone();
    require_normal_forms(&group)?;
    if !presentation.is_square() {
        return Err(Error::NonSquarePresentation {
            generators: group.rank(),
            relators: presentation.relators().len(),
        });
    }
    check_gamma(presentation, gamma)?;
    let n = group.rank();
    let size = 2 * n + 2;
    let (ipi, zpi) = (0, 1);
    let e = |i: usize| 2 + i;
    let b = |i: usize| 2 + n + i;

    let one_minus_g: Vec<RingElem> = (0..n)
        .map(|i| &int(&group, 1) - &RingElem::group_element(group.clone(), group.generator_power(i, 1)))
        .collect();
    let jacobian = presentation.fox_jacobian()?;

    let mut m = RingMatrix::zero(group.clone(), size);
    m.set(ipi, ipi, int(&group, 2));
    m.set(ipi, zpi, int(&group, 1));
    m.set(zpi, ipi, int(&group, 1));
    for i in 0..n {
        m.set(ipi, e(i), one_minus_g[i].involution());
        m.set(e(i), ipi, one_minus_g[i].clone());
        m.set(e(i), b(i), int(&group, 1));
        m.set(b(i), e(i), int(&group, 1));
        for j in 0..n {
            m.set(e(i), e(j), &one_minus_g[i] * &one_minus_g[j].involution());
            let mut fox = RingElem::zero(group.clone());
            for k in (0..n).filter(|&k| gamma[k]) {
                fox = &fox + &(&jacobian[i][k] * &jacobian[j][k].involution());
            }
            m.set(b(i), b(j), fox);
        }
    }
    let form = AugmentedForm::new(true, m.try_into()?)?;
    let tau = tau_from_gamma(&group, gamma);
    let mut h = Han1::new(WType::Spin, 0, form, Some(tau))?;
    h.bordism = Some(BordismClassSpin { sigma: 0, phi: tau, eps: false });
    let names = group.generators();
    h.basis = ["I".to_string(), "Z".to_string()]
        .into_iter()
        .chain(names.iter().map(|g| format!("e[{g}]")))
        .chain((1..=n).map(|i| format!("B[R{i}]")))
        .collect();
    Ok(h)
}

/// The null-bordant almost spin model with `w != 0`; its extended form is
/// hyperbolic.
pub fn model_n_almost_spin(group: Arc<Group>, w: F2Vector) -> Result<Han1> {
    require_normal_forms(&group)?;
    let d = group.h2_dimension();
    if w.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: w.dim() });
    }
    if w.is_zero() {
        return Err(Error::ZeroW);
    }
    let form = AugmentedForm::new(true, HermitianMatrix::hyperbolic(group))?;
    let mut h = Han1::new(WType::AlmostSpin(w), 0, form, Some(F2Vector::zero(d)))?;
    h.basis = vec!["I".into(), "Z".into()];
    Ok(h)
}

const ALMOST_SPIN_NOTE: &str =
    "only the signature part is constructed; explicit forms for the H_2(pi;Z/2) part of L_4 are not available";

/// A model whose invariants are `target`.
///
/// * `w = infinity`: `lambda_{M_0} (+) Id_m (+) -Id_n` with `m, n >= 1`.
/// * `w = 0`, even: `lambda_{P(gamma)} (+) n E8` with `gamma` read off tau.
/// * `w = 0`, odd: `lambda_{M_1} (+) n E8`.
/// * almost spin: `lambda_N (+) n E8`, for tau = 0 only.
pub fn realize_form(presentation: &Presentation, target: &Invariants, category: Category) -> Result<Han1> {
    let group = presentation.group().clone();
    require_normal_forms(&group)?;
    let d = group.h2_dimension();
    let sigma = target.signature;
    let inconsistent = |msg: &str| Err(Error::InconsistentTarget(msg.to_string()));
    match &target.w {
        WType::TotallyNonSpin => {
            if target.parity != Parity::Odd {
                return inconsistent("totally non-spin forms are odd");
            }
            if target.tau != Tau::Absent {
                return Err(Error::UnexpectedTau);
            }
            if category == Category::Smooth && target.ks == Some(true) {
                return inconsistent("smooth manifolds have vanishing Kirby-Siebenmann invariant");
            }
            let m = (1 + sigma).max(1);
            let n = m - sigma;
            let mut h = model_m_sigma(group.clone(), false, F2Vector::zero(d))?;
            let plus = AugmentedForm::free(HermitianMatrix::scalar_identity(group.clone(), m as usize, 1));
            let minus = AugmentedForm::free(HermitianMatrix::scalar_identity(group, n as usize, -1));
            h.form = h.form.direct_sum(&plus)?.direct_sum(&minus)?;
            h.basis.extend((1..=m).map(|i| format!("+{i}")));
            h.basis.extend((1..=n).map(|i| format!("-{i}")));
            h.w = WType::TotallyNonSpin;
            h.signature = sigma;
            h.tau = None;
            h.bordism = None;
            h.ks = if category == Category::Topological { target.ks } else { None };
            Ok(h)
        }
        WType::Spin => {
            let modulus = category.spin_signature_modulus();
            if sigma.rem_euclid(modulus) != 0 {
                return Err(Error::SignatureDivisibility { signature: sigma, modulus });
            }
            check_ks(target, category, None)?;
            let base = match (target.parity, &target.tau) {
                (Parity::Even, Tau::Class(tau)) => model_p(presentation, &gamma_from_tau(&group, tau)?)?,
                (Parity::Even, Tau::Absent) => return Err(Error::MissingTau),
                (Parity::Even, Tau::Unknown) => return Err(Error::TauUnknown),
                (Parity::Odd, Tau::Absent) => model_m_sigma(group, true, F2Vector::zero(d))?,
                (Parity::Odd, _) => return Err(Error::UnexpectedTau),
            };
            let mut h = base.plus_e8(sigma / 8)?;
            if let Some(b) = h.bordism.as_mut() {
                b.sigma = sigma;
            }
            Ok(h)
        }
        WType::AlmostSpin(w) => {
            if sigma.rem_euclid(8) != 0 {
                return Err(Error::SignatureDivisibility { signature: sigma, modulus: 8 });
            }
            if target.parity != Parity::Even {
                return inconsistent("the almost spin models are even");
            }
            match &target.tau {
                Tau::Class(t) if t.dim() == d && t.is_zero() => {}
                Tau::Class(_) => return inconsistent(ALMOST_SPIN_NOTE),
                Tau::Absent => return Err(Error::MissingTau),
                Tau::Unknown => return Err(Error::TauUnknown),
            }
            check_ks(target, category, Some(w))?;
            let mut h = model_n_almost_spin(group, *w)?.plus_e8(sigma / 8)?;
            h.note = Some(ALMOST_SPIN_NOTE.to_string());
            Ok(h)
        }
    }
}

fn check_ks(target: &Invariants, category: Category, w: Option<&F2Vector>) -> Result<()> {
    let Some(supplied) = target.ks else { return Ok(()) };
    let determined = match category {
        Category::Smooth => false,
        Category::Topological => {
            let x = match &target.tau {
                Tau::Class(t) => Some(t),
                _ => None,
            };
            let w = match w {
                Some(w) => WType::AlmostSpin(*w),
                None => WType::Spin,
            };
            crate::classify::ks(&w, target.signature, x, None)?
        }
    };
    if supplied != determined {
        return Err(Error::KsConflict { supplied: supplied.into(), determined: determined.into() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn nil(z: i64) -> Arc<Group> {
        Arc::new(Group::nil(z).unwrap())
    }

    #[test]
    fn m_sigma_zero_is_hyperbolic() {
        let g = nil(2);
        let h = model_m_sigma(g.clone(), false, F2Vector::zero(3)).unwrap();
        assert_eq!(**h.form.matrix(), *HermitianMatrix::hyperbolic(g));
        assert_eq!(h.parity(), Parity::Even);
        assert!(h.form.restrict_to_ipi().unwrap().is_zero());
    }

    #[test]
    fn m_sigma_one_is_odd() {
        let g = nil(3);
        let gamma: F2Vector = "10".parse().unwrap();
        let h = model_m_sigma(g.clone(), true, gamma).unwrap();
        assert_eq!(h.parity(), Parity::Odd);
        assert_eq!(h.form.restrict_to_ipi().unwrap(), RingElem::one(g));
        assert_eq!(h.tau, None);
        let b = h.bordism.unwrap();
        assert!(b.eps);
        assert_eq!(b.phi, gamma);
    }

    #[test]
    fn m_sigma_errors() {
        let g = nil(3);
        assert_eq!(
            model_m_sigma(g.clone(), false, "10".parse().unwrap()),
            Err(Error::SigmaGammaConflict)
        );
        assert!(matches!(
            model_m_sigma(g, true, "100".parse().unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
        let free = Arc::new(Group::free(["x"]).unwrap());
        assert_eq!(model_m_sigma(free, true, F2Vector::zero(1)), Err(Error::NoNormalForm));
    }

    #[test]
    fn p_with_zero_gamma_has_zero_fox_block() {
        let p = Presentation::nil(2).unwrap();
        let h = model_p(&p, &[false; 3]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(h.form.matrix().get(5 + i, 5 + j).is_zero());
            }
        }
        assert_eq!(h.tau, Some(F2Vector::zero(3)));
    }

    #[test]
    fn p_fox_block_entry() {
        // gamma(x) = 1, R_1 = x a x^-1 a^-1: D_x R_1 = 1 - a
        let p = Presentation::nil(2).unwrap();
        let g = p.group().clone();
        let h = model_p(&p, &[false, true, false]).unwrap();
        let a = RingElem::group_element(g.clone(), g.generator_power(0, 1));
        let expected = &(&RingElem::integer(g.clone(), 2) - &a) - &a.involution();
        assert_eq!(*h.form.matrix().get(5, 5), expected);
        assert_eq!(h.tau, Some("100".parse().unwrap()));
    }

    #[test]
    fn p_is_even_hermitian_with_corner_two() {
        let p = Presentation::z3();
        for bits in 0..8u32 {
            let gamma: Vec<bool> = (0..3).map(|k| bits >> k & 1 == 1).collect();
            let h = model_p(&p, &gamma).unwrap();
            assert!(h.form.matrix().is_hermitian());
            assert_eq!(h.parity(), Parity::Even);
            assert_eq!(h.form.restrict_to_ipi().unwrap().as_integer(), Some(BigInt::from(2)));
            assert_eq!(h.form.matrix().size(), 8);
        }
    }

    #[test]
    fn p_errors() {
        let p = Presentation::nil(3).unwrap();
        // gamma(a) = 1 does not kill x y x^-1 y^-1 a^-3
        assert_eq!(model_p(&p, &[true, false, false]), Err(Error::GammaNotHomomorphism(2)));
        assert!(matches!(model_p(&p, &[true]), Err(Error::ArityMismatch { .. })));
        assert!(matches!(
            model_p(&Presentation::zn(2), &[false, false]),
            Err(Error::NonSquarePresentation { generators: 2, relators: 1 })
        ));
    }

    #[test]
    fn n_model() {
        let g = nil(4);
        let w: F2Vector = "001".parse().unwrap();
        let h = model_n_almost_spin(g.clone(), w).unwrap();
        assert_eq!(h.parity(), Parity::Even);
        assert_eq!(h.signature, 0);
        let m0 = model_m_sigma(g.clone(), false, F2Vector::zero(3)).unwrap();
        assert_eq!(h.form, m0.form);
        assert_eq!(model_n_almost_spin(g, F2Vector::zero(3)), Err(Error::ZeroW));
    }

    #[test]
    fn gamma_tau_coordinates() {
        let g = Group::nil(2).unwrap();
        // generators a, x, y; coordinates (x, y, a)
        assert_eq!(tau_from_gamma(&g, &[true, false, true]).to_string(), "011");
        assert_eq!(gamma_from_tau(&g, &"011".parse().unwrap()).unwrap(), vec![true, false, true]);
        let odd = Group::nil(3).unwrap();
        assert_eq!(gamma_from_tau(&odd, &"11".parse().unwrap()).unwrap(), vec![false, true, true]);
    }

    #[test]
    fn realize_examples() {
        let p = Presentation::z3();
        let t = Invariants {
            w: WType::TotallyNonSpin,
            signature: 0,
            parity: Parity::Odd,
            tau: Tau::Absent,
            ks: None,
        };
        let h = realize_form(&p, &t, Category::Smooth).unwrap();
        assert_eq!(h.form.matrix().size(), 4);
        assert_eq!(h.form.restrict_to_ipi().unwrap().as_integer(), Some(BigInt::from(0)));
        assert_eq!(h.form.signature_int().unwrap(), 0);

        let t = Invariants { w: WType::Spin, signature: 8, parity: Parity::Odd, tau: Tau::Absent, ks: None };
        let h = realize_form(&p, &t, Category::Topological).unwrap();
        assert_eq!(h.form.matrix().size(), 10);
        assert_eq!(h.form.signature_int().unwrap(), 8);
        assert_eq!(
            realize_form(&p, &t, Category::Smooth),
            Err(Error::SignatureDivisibility { signature: 8, modulus: 16 })
        );

        let tau: F2Vector = "110".parse().unwrap();
        let t = Invariants { w: WType::Spin, signature: 0, parity: Parity::Even, tau: Tau::Class(tau), ks: None };
        let h = realize_form(&p, &t, Category::Smooth).unwrap();
        assert_eq!(h, model_p(&p, &[true, true, false]).unwrap());
    }

    #[test]
    fn han1_json_round_trip() {
        let p = Presentation::nil(2).unwrap();
        let h = model_p(&p, &[false, true, true]).unwrap();
        assert_eq!(Han1::from_json(&h.to_json()).unwrap(), h);
        let m = model_m_sigma(p.group().clone(), true, "101".parse().unwrap()).unwrap();
        assert_eq!(Han1::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn wtype_text() {
        assert_eq!("infinity".parse::<WType>().unwrap(), WType::TotallyNonSpin);
        assert_eq!("000".parse::<WType>().unwrap(), WType::Spin);
        assert_eq!("0".parse::<WType>().unwrap(), WType::Spin);
        assert_eq!("010".parse::<WType>().unwrap().to_string(), "010");
        assert!("2".parse::<WType>().is_err());
    }
}
