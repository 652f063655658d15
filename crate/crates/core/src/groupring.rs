//! Exact sparse arithmetic in the integral group ring with the involution
//! `g -> g^-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::words::{Group, GroupElement, Word};

/// An element of `Z[pi]`: a finite map from canonical group elements to
/// nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    group: Arc<Group>,
    terms: BTreeMap<GroupElement, BigInt>,
}

impl RingElem {
    pub fn zero(group: Arc<Group>) -> Self {
        RingElem { group, terms: BTreeMap::new() }
    }

    pub fn one(group: Arc<Group>) -> Self {
        RingElem::integer(group, 1)
    }

    pub fn integer(group: Arc<Group>, n: impl Into<BigInt>) -> Self {
        let id = group.identity();
        let mut r = RingElem::zero(group);
        r.add_term(id, n.into());
        r
    }

    pub fn group_element(group: Arc<Group>, g: GroupElement) -> Self {
        let mut r = RingElem::zero(group);
        r.add_term(g, BigInt::one());
        r
    }

    pub fn from_word(group: Arc<Group>, w: &Word) -> Result<Self> {
        let g = group.element(w)?;
        Ok(RingElem::group_element(group, g))
    }

    pub fn from_terms<I>(group: Arc<Group>, terms: I) -> Self
    where
        I: IntoIterator<Item = (GroupElement, BigInt)>,
    {
        let mut r = RingElem::zero(group);
        for (g, c) in terms {
            r.add_term(g, c);
        }
        r
    }

    /// Adds `c * g`, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, g: GroupElement, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The integer `n` if this element is `n * 1`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (g, c) = self.terms.iter().next()?;
                self.group.is_identity(g).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn same_family(&self, other: &RingElem) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::FamilyMismatch)
        }
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem> {
        self.same_family(other)?;
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(g.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.same_family(other)?;
        let mut r = RingElem::zero(self.group.clone());
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                r.add_term(self.group.multiply(g, h), c * d);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, k: &BigInt) -> RingElem {
        let mut r = RingElem::zero(self.group.clone());
        for (g, c) in &self.terms {
            r.add_term(g.clone(), c * k);
        }
        r
    }

    /// `sum c_g g  ->  sum c_g g^-1`.
    pub fn involution(&self) -> RingElem {
        RingElem::from_terms(
            self.group.clone(),
            self.terms.iter().map(|(g, c)| (self.group.inverse(g), c.clone())),
        )
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Augmentation reduced mod 2.
    pub fn phi(&self) -> u8 {
        u8::from(is_odd(&self.augmentation()))
    }

    pub fn in_augmentation_ideal(&self) -> bool {
        self.augmentation().is_zero()
    }

    /// Whether `self = p + involution(p)` for some `p`.
    ///
    /// Equivalent to: `x_g = x_{g^-1}` for every `g`, and `x_g` even whenever
    /// `g = g^-1`. A pair `{g, g^-1}` with `g != g^-1` is realized by
    /// `p_g = x_g, p_{g^-1} = 0`, and an involutive `g` receives `2 p_g`.
    pub fn in_image_one_plus_t(&self) -> bool {
        self.terms.iter().all(|(g, c)| {
            let inv = self.group.inverse(g);
            if &inv == g {
                !is_odd(c)
            } else {
                self.terms.get(&inv) == Some(c)
            }
        })
    }

    /// A witness `p` with `self = p + involution(p)`, when one exists.
    pub fn one_plus_t_preimage(&self) -> Option<RingElem> {
        if !self.in_image_one_plus_t() {
            return None;
        }
        let mut p = RingElem::zero(self.group.clone());
        for (g, c) in &self.terms {
            let inv = self.group.inverse(g);
            if &inv == g {
                p.add_term(g.clone(), c / 2);
            } else if g < &inv {
                p.add_term(g.clone(), c.clone());
            }
        }
        Some(p)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(g, c)| TermJson {
                coeff: match c.to_i64() {
                    Some(n) => Value::from(n),
                    None => Value::from(c.to_string()),
                },
                word: self.group.format_element(g),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(group: Arc<Group>, value: &Value) -> Result<RingElem> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone())?;
        let mut r = RingElem::zero(group.clone());
        for t in terms {
            let coeff = match &t.coeff {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer")))?,
                Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("coefficient `{s}` is not an integer")))?,
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            r.add_term(group.parse_element(&t.word)?, coeff);
        }
        Ok(r)
    }
}

pub(crate) fn is_odd(n: &BigInt) -> bool {
    (n % 2u8).abs().is_one()
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Value,
    word: String,
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let word = self.group.format_element(g);
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if word.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if word.contains(' ') {
                    write!(f, "({word})")?;
                } else {
                    f.write_str(&word)?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElem> for &RingElem {
            type Output = RingElem;
            /// Panics if the operands belong to different families.
            fn $method(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).expect("ring elements from different families")
            }
        }
        impl $trait<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}
