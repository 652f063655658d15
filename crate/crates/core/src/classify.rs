//! Stable classification tables and the stable equivalence decision.
//!
//! The finite part of every table is computed from the action on bordism
//! data: `H^1(B pi; Z/2)` acts by `m . (phi, eps) = (eps m + phi, eps)` and
//! `Out(pi)` acts on `phi` through its image in `GL(H_2(B pi; Z/2))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::f2::{closure_cap, gl_generators, group_closure, orbit_of, orbits, F2Matrix, F2Vector};
use crate::forms::Parity;
use crate::models::{Han1, WType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Smooth,
    Topological,
}

impl Category {
    /// Divisibility of the signature of a spin manifold.
    pub fn spin_signature_modulus(self) -> i64 {
        match self {
            Category::Smooth => 16,
            Category::Topological => 8,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Smooth => "smooth",
            Category::Topological => "topological",
        })
    }
}

impl FromStr for Category {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smooth" | "diff" => Ok(Category::Smooth),
            "top" | "topological" => Ok(Category::Topological),
            other => Err(Error::Parse(format!("unknown category `{other}`"))),
        }
    }
}

/// `F_2` data of a fundamental group: `H_2(B pi; Z/2) = F_2^d` and
/// generators of the image of `Out(pi)` acting on it. `H^1(B pi; Z/2)` is
/// identified with the same `F_2^d` and acts by all translations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyData {
    pub name: String,
    pub d: usize,
    pub out_generators: Vec<F2Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<WType>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

pub fn family_z3() -> FamilyData {
    FamilyData {
        name: "z3".into(),
        d: 3,
        out_generators: gl_generators(3),
        w: None,
        notes: "Out(Z^3) = GL_3(Z) surjects onto GL_3(F_2)".into(),
    }
}

/// The central extension of `Z^2` by `Z` with Euler class `z`.
///
/// Coordinates are `(x, y)` for odd `z` and `(x, y, a)` for even `z`.
pub fn family_nil(z: i64) -> Result<FamilyData> {
    if z <= 0 {
        return Err(Error::InvalidParameter(format!("nil family needs z >= 1, got {z}")));
    }
    if z % 2 == 1 {
        return Ok(FamilyData {
            name: format!("nil:{z}"),
            d: 2,
            out_generators: gl_generators(2),
            w: None,
            notes: "H_2 = (Z/2)^2 with the GL_2 action".into(),
        });
    }
    let mut out_generators: Vec<F2Matrix> =
        gl_generators(2).iter().map(|g| g.direct_sum(&F2Matrix::identity(1))).collect();
    for i in 0..2 {
        let mut t = F2Matrix::identity(3);
        t.set(i, 2, true);
        out_generators.push(t);
    }
    Ok(FamilyData {
        name: format!("nil:{z}"),
        d: 3,
        out_generators,
        w: None,
        notes: "GL_2 on (x, y) and the automorphisms u -> wu, v -> wv".into(),
    })
}

pub fn family_custom(
    name: impl Into<String>,
    d: usize,
    out_generators: Vec<F2Matrix>,
    notes: impl Into<String>,
) -> Result<FamilyData> {
    let family = FamilyData { name: name.into(), d, out_generators, w: None, notes: notes.into() };
    family.validate()?;
    Ok(family)
}

impl FamilyData {
    fn validate(&self) -> Result<()> {
        for (i, g) in self.out_generators.iter().enumerate() {
            if g.dim() != self.d {
                return Err(Error::DimensionMismatch { expected: self.d, found: g.dim() });
            }
            if !g.is_invertible() {
                return Err(Error::NotInvertible(i));
            }
        }
        match &self.w {
            Some(WType::AlmostSpin(w)) if w.dim() != self.d => {
                Err(Error::DimensionMismatch { expected: self.d, found: w.dim() })
            }
            _ => Ok(()),
        }
    }

    /// `z3`, `nil:<z>`, or the path of a family file.
    pub fn from_spec(spec: &str) -> Result<Self> {
        match spec {
            "z3" => Ok(family_z3()),
            s if s.starts_with("nil:") => {
                let z = s[4..].parse().map_err(|_| Error::Parse(format!("bad nil parameter in `{s}`")))?;
                family_nil(z)
            }
            path => Self::from_json(&std::fs::read_to_string(path)?),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let family: FamilyData = serde_json::from_str(text)?;
        family.validate()?;
        Ok(family)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family serializes")
    }

    /// Generators of `Out(pi)_w`, the stabilizer of `w` under the dual action.
    pub fn stabilizer(&self, w: &F2Vector) -> Result<Vec<F2Matrix>> {
        if w.dim() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: w.dim() });
        }
        if self.out_generators.is_empty() {
            return Ok(vec![F2Matrix::identity(self.d)]);
        }
        Ok(group_closure(&self.out_generators, closure_cap())?
            .into_iter()
            .filter(|a| a.transpose().apply(w) == *w)
            .collect())
    }
}

/// An element `(sigma, phi, eps)` of the spin bordism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BordismClassSpin {
    pub sigma: i64,
    pub phi: F2Vector,
    pub eps: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinAction {
    /// Change of spin structure by `m in H^1`.
    H1(F2Vector),
    /// Automorphism of `pi`, through its matrix on `H_2`.
    Out(F2Matrix),
}

pub fn act_spin(action: &SpinAction, c: &BordismClassSpin) -> Result<BordismClassSpin> {
    let d = c.phi.dim();
    match action {
        SpinAction::H1(m) => {
            if m.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: m.dim() });
            }
            let shift = if c.eps { *m } else { F2Vector::zero(d) };
            Ok(BordismClassSpin { phi: shift + c.phi, ..*c })
        }
        SpinAction::Out(rho) => {
            if rho.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: rho.dim() });
            }
            Ok(BordismClassSpin { phi: rho.apply(&c.phi), ..*c })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FiniteClass {
    Orbit { representative: F2Vector, size: usize },
    Odd,
    /// The finite part is a point.
    Single,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KsRule {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "independent-bit")]
    IndependentBit,
    #[serde(rename = "sigma/8")]
    SignatureOver8,
    #[serde(rename = "sigma/8+w")]
    SignatureOver8PlusW,
}

impl KsRule {
    fn label(self) -> &'static str {
        match self {
            KsRule::None => "none",
            KsRule::IndependentBit => "independent-bit",
            KsRule::SignatureOver8 => "sigma/8",
            KsRule::SignatureOver8PlusW => "sigma/8+w",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub family: String,
    pub w: WType,
    pub category: Category,
    pub signature_stride: i64,
    pub finite_classes: Vec<FiniteClass>,
    pub ks_rule: KsRule,
}

impl ClassificationTable {
    /// Stable classes with a given admissible signature.
    pub fn classes_per_signature(&self) -> usize {
        let factor = if self.ks_rule == KsRule::IndependentBit { 2 } else { 1 };
        self.finite_classes.len() * factor
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("table serializes");
        v["classes_per_signature"] = json!(self.classes_per_signature());
        v
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        Ok(serde_json::from_value(value.clone())?)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let header = [
            ("family", self.family.clone()),
            ("w", self.w.to_string()),
            ("category", self.category.to_string()),
            ("stride", self.signature_stride.to_string()),
            ("ks", self.ks_rule.label().to_string()),
            ("classes", self.classes_per_signature().to_string()),
        ];
        for (k, v) in header {
            out.push_str(&format!("{k:<9} {v}\n"));
        }
        out.push('\n');
        let rows: Vec<[String; 4]> = self
            .finite_classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let (kind, rep, size) = match c {
                    FiniteClass::Orbit { representative, size } => {
                        ("orbit", representative.to_string(), size.to_string())
                    }
                    FiniteClass::Odd => ("odd", "-".into(), "-".into()),
                    FiniteClass::Single => ("single", "-".into(), "-".into()),
                };
                [(i + 1).to_string(), kind.into(), rep, size]
            })
            .collect();
        let titles = ["class", "kind", "representative", "size"];
        let widths: Vec<usize> = (0..4)
            .map(|k| rows.iter().map(|r| r[k].len()).chain([titles[k].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: [&str; 4]| {
            let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            format!("{}\n", s.join("  ").trim_end())
        };
        out.push_str(&line(titles));
        for r in &rows {
            out.push_str(&line([&r[0], &r[1], &r[2], &r[3]]));
        }
        out
    }
}

/// Generators of the action on `(phi, eps) in F_2^{d+1}`: `rho (+) 1` for
/// each out-generator and the translations by basis vectors of `H^1`.
pub fn spin_action_generators(family: &FamilyData) -> Vec<F2Matrix> {
    let d = family.d;
    let mut gens: Vec<F2Matrix> =
        family.out_generators.iter().map(|g| g.direct_sum(&F2Matrix::identity(1))).collect();
    for i in 0..d {
        let mut t = F2Matrix::identity(d + 1);
        t.set(i, d, true);
        gens.push(t);
    }
    gens
}

pub fn classify(w: &WType, category: Category, family: &FamilyData) -> Result<ClassificationTable> {
    let d = family.d;
    let (signature_stride, finite_classes, ks_rule) = match w {
        WType::TotallyNonSpin => {
            let ks = match category {
                Category::Smooth => KsRule::None,
                Category::Topological => KsRule::IndependentBit,
            };
            (1, vec![FiniteClass::Single], ks)
        }
        WType::Spin => {
            let gens = spin_action_generators(family);
            let mut even = Vec::new();
            let mut odd = Vec::new();
            for orbit in orbits(d + 1, &gens, None)? {
                let rep = orbit[0];
                if rep.get(d) {
                    odd.push(FiniteClass::Odd);
                } else {
                    even.push(FiniteClass::Orbit { representative: rep.truncate(d), size: orbit.len() });
                }
            }
            even.extend(odd);
            let ks = match category {
                Category::Smooth => KsRule::None,
                Category::Topological => KsRule::SignatureOver8,
            };
            (category.spin_signature_modulus(), even, ks)
        }
        WType::AlmostSpin(w) => {
            if w.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: w.dim() });
            }
            let stabilizer = family.stabilizer(w)?;
            let kernel = |x: &F2Vector| !w.dot(x);
            let subset: Option<&dyn Fn(&F2Vector) -> bool> = match category {
                Category::Smooth => Some(&kernel),
                Category::Topological => None,
            };
            let classes = orbits(d, &stabilizer, subset)?
                .into_iter()
                .map(|o| FiniteClass::Orbit { representative: o[0], size: o.len() })
                .collect();
            let ks = match category {
                Category::Smooth => KsRule::None,
                Category::Topological => KsRule::SignatureOver8PlusW,
            };
            (8, classes, ks)
        }
    };
    Ok(ClassificationTable {
        family: family.name.clone(),
        w: w.clone(),
        category,
        signature_stride,
        finite_classes,
        ks_rule,
    })
}

/// Kirby-Siebenmann invariant of a topological stable class.
///
/// `x` is the `H_2` class (needed for almost spin); `free_bit` is the
/// independent coordinate of the totally non-spin case.
pub fn ks(w: &WType, signature: i64, x: Option<&F2Vector>, free_bit: Option<bool>) -> Result<bool> {
    let over8 = |s: i64| -> Result<bool> {
        if s.rem_euclid(8) != 0 {
            return Err(Error::SignatureDivisibility { signature: s, modulus: 8 });
        }
        Ok((s / 8).rem_euclid(2) == 1)
    };
    match w {
        WType::Spin => over8(signature),
        WType::AlmostSpin(w) => {
            let x = x.ok_or_else(|| Error::InvalidParameter("almost spin KS needs an H_2 class".into()))?;
            if x.dim() != w.dim() {
                return Err(Error::DimensionMismatch { expected: w.dim(), found: x.dim() });
            }
            Ok(over8(signature)? ^ w.dot(x))
        }
        WType::TotallyNonSpin => free_bit.ok_or(Error::MissingKs),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tau {
    Absent,
    Class(F2Vector),
    /// Even form whose tau class has no recorded provenance.
    Unknown,
}

/// The invariants compared by the stable classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub w: WType,
    pub signature: i64,
    pub parity: Parity,
    pub tau: Tau,
    pub ks: Option<bool>,
}

impl Invariants {
    pub fn to_json(&self) -> Value {
        let tau = match &self.tau {
            Tau::Absent => Value::Null,
            Tau::Class(t) => json!(t.to_string()),
            Tau::Unknown => json!("unknown"),
        };
        let mut v = json!({
            "w": self.w.to_string(),
            "signature": self.signature,
            "parity": self.parity,
            "tau": tau,
        });
        if let Some(ks) = self.ks {
            v["ks"] = json!(u8::from(ks));
        }
        v
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct File {
            w: WType,
            signature: i64,
            parity: Parity,
            #[serde(default)]
            tau: Option<String>,
            #[serde(default)]
            ks: Option<u8>,
        }
        let file: File = serde_json::from_value(value.clone())?;
        let tau = match file.tau.as_deref() {
            None => Tau::Absent,
            Some("unknown") => Tau::Unknown,
            Some(bits) => Tau::Class(bits.parse()?),
        };
        let ks = match file.ks {
            None => None,
            Some(0) => Some(false),
            Some(1) => Some(true),
            Some(k) => return Err(Error::Parse(format!("ks must be 0 or 1, got {k}"))),
        };
        Ok(Invariants { w: file.w, signature: file.signature, parity: file.parity, tau, ks })
    }

    /// Checks the tuple against the constraints of its w-type and category.
    pub fn validate(&self, category: Category, family: &FamilyData) -> Result<()> {
        let d = family.d;
        match (self.parity, &self.tau) {
            (Parity::Odd, Tau::Absent) | (Parity::Even, Tau::Class(_)) => {}
            (Parity::Odd, _) => return Err(Error::UnexpectedTau),
            (Parity::Even, Tau::Absent) => return Err(Error::MissingTau),
            (Parity::Even, Tau::Unknown) => return Err(Error::TauUnknown),
        }
        if let Tau::Class(t) = &self.tau {
            if t.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: t.dim() });
            }
        }
        let determined = match &self.w {
            WType::TotallyNonSpin => {
                if self.parity == Parity::Even {
                    return Err(Error::InconsistentTarget("totally non-spin forms are odd".into()));
                }
                match category {
                    Category::Topological if self.ks.is_none() => return Err(Error::MissingKs),
                    Category::Topological => self.ks.unwrap_or(false),
                    Category::Smooth => false,
                }
            }
            WType::Spin => {
                let modulus = category.spin_signature_modulus();
                if self.signature.rem_euclid(modulus) != 0 {
                    return Err(Error::SignatureDivisibility { signature: self.signature, modulus });
                }
                category == Category::Topological && ks(&self.w, self.signature, None, None)?
            }
            WType::AlmostSpin(w) => {
                if w.dim() != d {
                    return Err(Error::DimensionMismatch { expected: d, found: w.dim() });
                }
                if self.signature.rem_euclid(8) != 0 {
                    return Err(Error::SignatureDivisibility { signature: self.signature, modulus: 8 });
                }
                if self.parity == Parity::Odd {
                    return Err(Error::InconsistentTarget("almost spin forms are even".into()));
                }
                let Tau::Class(x) = &self.tau else { unreachable!("even tuples carry a class") };
                if category == Category::Smooth && w.dot(x) {
                    return Err(Error::InconsistentTarget(format!(
                        "smooth almost spin class {x} must lie in the kernel of <{w}, ->"
                    )));
                }
                category == Category::Topological && ks(&self.w, self.signature, Some(x), None)?
            }
        };
        match self.ks {
            Some(supplied) if supplied != determined => {
                Err(Error::KsConflict { supplied: supplied.into(), determined: determined.into() })
            }
            _ => Ok(()),
        }
    }
}

/// Invariants of a HAN1 datum. Even forms without a recorded tau class give
/// [`Tau::Unknown`].
pub fn invariants_of(h: &Han1, category: Category) -> Invariants {
    let parity = h.parity();
    let tau = match (parity, h.tau) {
        (Parity::Odd, _) => Tau::Absent,
        (Parity::Even, Some(t)) => Tau::Class(t),
        (Parity::Even, None) => Tau::Unknown,
    };
    let ks = match (category, &h.w) {
        (Category::Smooth, _) => None,
        (Category::Topological, WType::TotallyNonSpin) => h.ks,
        (Category::Topological, w) => {
            let x = match &tau {
                Tau::Class(t) => Some(t),
                _ => None,
            };
            ks(w, h.signature, x, None).ok()
        }
    };
    Invariants { w: h.w.clone(), signature: h.signature, parity, tau, ks }
}

/// Whether two valid invariant tuples describe stably equivalent manifolds.
pub fn decide_stable_equiv(a: &Invariants, b: &Invariants, category: Category, family: &FamilyData) -> Result<bool> {
    a.validate(category, family)?;
    b.validate(category, family)?;
    if a.w != b.w || a.signature != b.signature || a.parity != b.parity {
        return Ok(false);
    }
    if a.w == WType::TotallyNonSpin && category == Category::Topological && a.ks != b.ks {
        return Ok(false);
    }
    let (Tau::Class(ta), Tau::Class(tb)) = (&a.tau, &b.tau) else {
        return Ok(true);
    };
    let gens = match &a.w {
        WType::AlmostSpin(w) => family.stabilizer(w)?,
        _ => family.out_generators.clone(),
    };
    Ok(orbit_of(*ta, &gens).contains(tb))
}
