//! Exact-arithmetic computation of Chow, Chow-Lam and Hurwitz-Lam forms of
//! subvarieties of Grassmannians.
//!
//! The library is organised bottom-up:
//!
//! * [`rational`] / [`poly`] — arbitrary-precision rationals and sparse
//!   multivariate polynomials with pluggable monomial orders,
//! * [`matrix`] — exact linear algebra (determinants, kernels, rank),
//! * [`groebner`] — Buchberger-based Gröbner engine with elimination,
//!   saturation and dimension counting,
//! * [`grassmann`] — Plücker coordinates, primal/dual conversion, wedge
//!   products, incidence systems, twistor substitution and straightening,
//! * [`schubert`] — combinatorial degree computations for positroid
//!   varieties and Grassmannians,
//! * [`chowlam`] — the elimination pipeline and the determinantal formulas
//!   for the forms themselves,
//! * [`oracle`] — independent rational constructions that certify every
//!   computed form on incidence instances,
//! * [`catalog`] — a registry of named worked examples wired into the CLI.

pub mod catalog;
pub mod chowlam;
pub mod grassmann;
pub mod groebner;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod schubert;

pub use poly::{Monomial, MonomialOrder, Polynomial, VarTable};
pub use rational::Rational;
