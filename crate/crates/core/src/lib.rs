//! Stable classification invariants of closed oriented 4-manifolds whose
//! fundamental group is the fundamental group of a closed oriented
//! aspherical 3-manifold.
//!
//! The crate builds equivariant intersection forms of model manifolds from
//! group presentations (Fox calculus over the integral group ring), decides
//! their parity, and computes the `F_2` orbit data that make up the stable
//! classification tables.
//!
//! ```
//! use stable4::{classify, family_nil, Category, WType};
//!
//! let table = classify(&WType::Spin, Category::Smooth, &family_nil(4).unwrap()).unwrap();
//! assert_eq!(table.classes_per_signature(), 4);
//! assert_eq!(table.signature_stride, 16);
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod f2;
pub mod forms;
pub mod groupring;
pub mod models;
pub mod words;

pub use classify::{
    act_spin, classify, decide_stable_equiv, family_custom, family_nil, family_z3, invariants_of, ks,
    BordismClassSpin, Category, ClassificationTable, FamilyData, FiniteClass, Invariants, KsRule, SpinAction, Tau,
};
pub use error::{Error, ErrorClass, Result};
pub use f2::{arf, group_closure, orbits, symplectic_basis, F2Matrix, F2Vector, QuadraticFormF2};
pub use forms::{AugmentedForm, HermitianMatrix, Parity, RingMatrix};
pub use groupring::RingElem;
pub use models::{model_m_sigma, model_n_almost_spin, model_p, realize_form, Han1, WType};
pub use words::{fox_derivative, normalize, parse_word, FamilyTag, Group, GroupElement, Presentation, Word};
