//! Sparse multivariate polynomials over [`Rational`] with named variables
//! and pluggable monomial orders.
//!
//! A [`Polynomial`] owns a shared [`VarTable`], a [`MonomialOrder`] and a
//! list of `(Monomial, Rational)` terms kept sorted strictly descending
//! under that order, with no zero coefficients and no duplicate monomials.
//! All operations return canonical values.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("variable table mismatch")]
    TableMismatch,
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("point length {got} does not match table size {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("variable `{0}` occurs but has no substitution image")]
    UnmappedVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error(transparent)]
    Coefficient(#[from] crate::rational::RationalError),
}

/// An ordered table of distinct variable names. Shared immutably between all
/// polynomials of one ring; the index of a name is stable for the table's
/// lifetime.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarTable { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// New table with `extra` names appended.
    pub fn extend<I, S>(&self, extra: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarTable::new(
            self.names
                .iter()
                .cloned()
                .chain(extra.into_iter().map(Into::into)),
        )
    }
}

/// Two tables are compatible when they are the same allocation or list the
/// same names in the same order.
fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Exponent vector of one monomial, dense over its table, with the total
/// degree cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0u16; nvars].into_boxed_slice(),
            deg: 0,
        }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            deg,
        }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut exps = vec![0u16; nvars];
        exps[i] = e;
        Monomial::from_exps(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps: exps.into_boxed_slice(),
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps)
    }

    pub fn gcd_is_one(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

/// Inner order used inside the blocks of a [`MonomialOrder::Block`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InnerOrder {
    Lex,
    DegRevLex,
}

/// A total order on monomials compatible with multiplication.
///
/// `Block` is an elimination order: any monomial containing a variable of
/// the elimination block ranks above any monomial free of them, and ties
/// are broken by the inner order on the block part, then on the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block {
        elim: Arc<Vec<bool>>,
        inner: InnerOrder,
    },
}

impl MonomialOrder {
    pub fn block(nvars: usize, elim_vars: &[usize], inner: InnerOrder) -> Self {
        let mut mask = vec![false; nvars];
        for &v in elim_vars {
            mask[v] = true;
        }
        MonomialOrder::Block {
            elim: Arc::new(mask),
            inner,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a.exps(), b.exps()),
            MonomialOrder::DegRevLex => cmp_degrevlex(a.exps(), b.exps(), a.deg, b.deg),
            MonomialOrder::Block { elim, inner } => {
                let part = |m: &Monomial, want: bool| -> (Vec<u16>, u32) {
                    let mut deg = 0u32;
                    let exps: Vec<u16> = m
                        .exps()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| elim[*i] == want)
                        .map(|(_, e)| {
                            deg += *e as u32;
                            *e
                        })
                        .collect();
                    (exps, deg)
                };
                let (ae, ad) = part(a, true);
                let (be, bd) = part(b, true);
                let first = match inner {
                    InnerOrder::Lex => cmp_lex(&ae, &be),
                    InnerOrder::DegRevLex => cmp_degrevlex(&ae, &be, ad, bd),
                };
                if first != Ordering::Equal {
                    return first;
                }
                let (ar, ad) = part(a, false);
                let (br, bd) = part(b, false);
                match inner {
                    InnerOrder::Lex => cmp_lex(&ar, &br),
                    InnerOrder::DegRevLex => cmp_degrevlex(&ar, &br, ad, bd),
                }
            }
        }
    }
}

fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the last differing exponent decides, reversed.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct Polynomial {
    table: Arc<VarTable>,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(table: Arc<VarTable>, order: MonomialOrder) -> Self {
        Polynomial {
            table,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(table: Arc<VarTable>, order: MonomialOrder, c: Rational) -> Self {
        let mut p = Polynomial::zero(table, order);
        if !c.is_zero() {
            let one = Monomial::one(p.table.len());
            p.terms.push((one, c));
        }
        p
    }

    pub fn one(table: Arc<VarTable>, order: MonomialOrder) -> Self {
        Polynomial::constant(table, order, Rational::one())
    }

    pub fn var(table: Arc<VarTable>, order: MonomialOrder, i: usize) -> Self {
        let m = Monomial::var(table.len(), i, 1);
        Polynomial {
            table,
            order,
            terms: vec![(m, Rational::one())],
        }
    }

    pub fn var_named(
        table: Arc<VarTable>,
        order: MonomialOrder,
        name: &str,
    ) -> Result<Self, PolyError> {
        let i = table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(table, order, i))
    }

    /// Builds a canonical polynomial from arbitrary terms: merges duplicate
    /// monomials, drops zero coefficients and sorts descending.
    pub fn from_terms(
        table: Arc<VarTable>,
        order: MonomialOrder,
        terms: Vec<(Monomial, Rational)>,
    ) -> Self {
        let mut p = Polynomial {
            table,
            order,
            terms,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let order = self.order.clone();
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += &c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Re-sorts the term list under a different order. The set of terms is
    /// unchanged.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let mut p = self.clone();
        p.order = order;
        let ord = p.order.clone();
        p.terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        p
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if !same_table(&self.table, &other.table) {
            return Err(PolyError::TableMismatch);
        }
        if self.order != other.order {
            return Err(PolyError::OrderMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            table: self.table.clone(),
            order: self.order.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for (_, c) in p.terms.iter_mut() {
            *c = -c.clone();
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.table.clone(), self.order.clone());
        }
        let mut p = self.clone();
        for (_, coeff) in p.terms.iter_mut() {
            *coeff *= c;
        }
        p
    }

    /// Multiplies by a single term `c * m` in place of a full product.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.table.clone(), self.order.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), cc * c))
            .collect();
        // Multiplying every monomial by a fixed monomial preserves order.
        Polynomial {
            table: self.table.clone(),
            order: self.order.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.table.clone(), self.order.clone()));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(big.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().collect();
        let order = self.order.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            table: self.table.clone(),
            order,
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Result<Self, PolyError> {
        let mut acc = Polynomial::one(self.table.clone(), self.order.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.table.len() {
            return Err(PolyError::PointLength {
                got: point.len(),
                expected: self.table.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in m.support() {
                v *= &point[i].pow(m.exp(i) as u32);
            }
            total += &v;
        }
        Ok(total)
    }

    /// Simultaneous substitution into a (possibly different) target ring.
    /// Every variable occurring in `self` must be mapped.
    pub fn substitute_into(
        &self,
        target: Arc<VarTable>,
        order: MonomialOrder,
        images: &dyn Fn(usize) -> Option<Polynomial>,
    ) -> Result<Self, PolyError> {
        let mut image_cache: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, _) in &self.terms {
            for i in m.support() {
                if !image_cache.contains_key(&i) {
                    let img = images(i).ok_or_else(|| {
                        PolyError::UnmappedVariable(self.table.name(i).to_string())
                    })?;
                    image_cache.insert(i, img);
                }
            }
        }
        let mut power_cache: BTreeMap<(usize, u16), Polynomial> = BTreeMap::new();
        let mut total = Polynomial::zero(target.clone(), order.clone());
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), order.clone(), c.clone());
            for i in m.support() {
                let e = m.exp(i);
                let p = match power_cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = image_cache[&i].pow(e as u32)?;
                        power_cache.insert((i, e), p.clone());
                        p
                    }
                };
                term = term.mul(&p)?;
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }

    /// Substitution within the same ring; variables without an image map to
    /// themselves only if they do not occur, otherwise it is an error.
    pub fn substitute(&self, map: &BTreeMap<usize, Polynomial>) -> Result<Self, PolyError> {
        self.substitute_into(self.table.clone(), self.order.clone(), &|i| {
            map.get(&i).cloned()
        })
    }

    /// Like [`substitute`](Self::substitute) but leaves unmapped variables
    /// in place.
    pub fn substitute_partial(&self, map: &BTreeMap<usize, Polynomial>) -> Result<Self, PolyError> {
        self.substitute_into(self.table.clone(), self.order.clone(), &|i| {
            map.get(&i).cloned().or_else(|| {
                Some(Polynomial::var(
                    self.table.clone(),
                    self.order.clone(),
                    i,
                ))
            })
        })
    }

    /// Returns `lambda` with `self = lambda * other`, if one exists.
    pub fn equal_up_to_scalar(&self, other: &Self) -> Option<Rational> {
        if self.is_zero() && other.is_zero() {
            return Some(Rational::one());
        }
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        // Compare in a fixed order so different active orders cannot hide a
        // match.
        let a = self.with_order(MonomialOrder::DegRevLex);
        let b = other.with_order(MonomialOrder::DegRevLex);
        let lambda = &a.terms[0].1 / &b.terms[0].1;
        for ((ma, ca), (mb, cb)) in a.terms.iter().zip(b.terms.iter()) {
            if ma != mb || *ca != cb * &lambda {
                return None;
            }
        }
        Some(lambda)
    }

    /// True when every term has the same total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(mm, _)| mm.degree() == d)
            }
        }
    }

    /// Rational content of a nonzero polynomial, signed so that dividing by
    /// it leaves a positive leading coefficient. Zero for the zero
    /// polynomial.
    pub fn signed_content(&self) -> Rational {
        let mut content = Rational::zero();
        for (_, c) in &self.terms {
            content = content.gcd(c);
        }
        if self
            .terms
            .first()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            content = -content;
        }
        content
    }

    /// Divides by the rational content and fixes the sign of the leading
    /// coefficient, yielding an integer-primitive representative with
    /// positive lead. The zero polynomial is unchanged.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .signed_content()
            .recip()
            .expect("content of nonzero polynomial");
        self.scale(&inv)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Canonical scalar normalization for forms: clear denominators, divide
    /// by the integer content, and make the coefficient of the DegRevLex
    /// leading monomial (under the table's variable order) positive.
    pub fn canonical_form(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let sorted = self.with_order(MonomialOrder::DegRevLex);
        let prim = sorted.primitive_part();
        prim.with_order(self.order.clone())
    }

    /// Largest power of the variable `i` dividing every term; 0 for the zero
    /// polynomial.
    pub fn min_exponent(&self, i: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(i))
            .min()
            .unwrap_or(0)
    }

    /// Divides out `x_i^e` from every term. Panics if some term is not
    /// divisible.
    pub fn div_var_power(&self, i: usize, e: u16) -> Self {
        if e == 0 {
            return self.clone();
        }
        let div = Monomial::var(self.table.len(), i, e);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.try_div(&div).expect("term not divisible"), c.clone()))
            .collect();
        Polynomial {
            table: self.table.clone(),
            order: self.order.clone(),
            terms,
        }
    }

    /// True if any term involves one of the flagged variables.
    pub fn uses_any_var(&self, mask: &[bool]) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| m.support().any(|i| mask[i]))
    }

    /// Maps this polynomial into another ring by variable name. Fails if a
    /// used variable is missing from the target table.
    pub fn rename_into(
        &self,
        target: Arc<VarTable>,
        order: MonomialOrder,
    ) -> Result<Self, PolyError> {
        let mut index_map: Vec<Option<usize>> = vec![None; self.table.len()];
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.len()];
            for i in m.support() {
                let j = match index_map[i] {
                    Some(j) => j,
                    None => {
                        let j = target.index_of(self.table.name(i)).ok_or_else(|| {
                            PolyError::UnknownVariable(self.table.name(i).to_string())
                        })?;
                        index_map[i] = Some(j);
                        j
                    }
                };
                exps[j] = m.exp(i);
            }
            terms.push((Monomial::from_exps(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, order, terms))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !same_table(&self.table, &other.table) {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        let a = self.with_order(MonomialOrder::DegRevLex);
        let b = other.with_order(MonomialOrder::DegRevLex);
        a.terms == b.terms
    }
}

impl Eq for Polynomial {}

// ---------------------------------------------------------------------------
// Text format: terms joined by " + " / " - ", coefficients as num/den,
// variables as name^exp joined by "*". Round-trips exactly.
// ---------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for v in m.support() {
                let e = m.exp(v);
                if e == 1 {
                    factors.push(self.table.name(v).to_string());
                } else {
                    factors.push(format!("{}^{}", self.table.name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Polynomial {
    /// Parses the text format produced by `Display`.
    pub fn parse(
        table: Arc<VarTable>,
        order: MonomialOrder,
        input: &str,
    ) -> Result<Self, PolyError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        if s == "0" {
            return Ok(Polynomial::zero(table, order));
        }
        // Split into signed term strings on top-level + and - (the format
        // has no parentheses).
        let mut pieces: Vec<(i32, String)> = Vec::new();
        let mut current = String::new();
        let mut sign = 1i32;
        for ch in s.chars() {
            match ch {
                '+' | '-' if current.trim().is_empty() => {
                    if ch == '-' {
                        sign = -sign;
                    }
                }
                '+' | '-' => {
                    pieces.push((sign, std::mem::take(&mut current)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => current.push(ch),
            }
        }
        if current.trim().is_empty() {
            return Err(PolyError::Parse(format!("dangling sign in `{input}`")));
        }
        pieces.push((sign, current));
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(pieces.len());
        for (sgn, piece) in pieces {
            let (m, c) = parse_term(&table, piece.trim())?;
            terms.push((m, if sgn < 0 { -c } else { c }));
        }
        Ok(Polynomial::from_terms(table.clone(), order, terms))
    }
}

fn parse_term(table: &Arc<VarTable>, term: &str) -> Result<(Monomial, Rational), PolyError> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u16; table.len()];
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(PolyError::Parse(format!("empty factor in `{term}`")));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let exp: u16 = e
                    .trim()
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad exponent in `{factor}`")))?;
                (b.trim(), exp)
            }
            None => (factor, 1),
        };
        if let Some(i) = table.index_of(base) {
            exps[i] = exps[i]
                .checked_add(exp)
                .ok_or_else(|| PolyError::Parse("exponent overflow".into()))?;
        } else if base.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-') {
            let c: Rational = base
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient `{base}`")))?;
            coeff = coeff * c.pow(exp as u32);
        } else {
            return Err(PolyError::UnknownVariable(base.to_string()));
        }
    }
    Ok((Monomial::from_exps(exps), coeff))
}

// ---------------------------------------------------------------------------
// JSON format: {"vars": [names], "terms": [{"coeff": "num/den", "exps": [..]}]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u16>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            vars: self.table.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.exps().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson, order: MonomialOrder) -> Result<Self, PolyError> {
        let table = VarTable::new(json.vars.clone())?;
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exps.len() != table.len() {
                return Err(PolyError::Parse(format!(
                    "exponent vector length {} does not match vars length {}",
                    t.exps.len(),
                    table.len()
                )));
            }
            let c: Rational = t
                .coeff
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            terms.push((Monomial::from_exps(t.exps.clone()), c));
        }
        Ok(Polynomial::from_terms(table, order, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> (Arc<VarTable>, MonomialOrder) {
        (
            VarTable::new(["x", "y", "z"]).unwrap(),
            MonomialOrder::DegRevLex,
        )
    }

    fn p(s: &str) -> Polynomial {
        let (t, o) = ring();
        Polynomial::parse(t, o, s).unwrap()
    }

    #[test]
    fn add_cancels() {
        assert_eq!(p("x + 1").add(&p("-x")).unwrap(), p("1"));
        let q = p("x^2 + y");
        assert_eq!(q.add(&p("0")).unwrap(), q);
        assert_eq!(p("2/3*x").add(&p("1/3*x")).unwrap(), p("x"));
    }

    #[test]
    fn mul_difference_of_squares() {
        let lhs = p("x + y").mul(&p("x - y")).unwrap();
        assert_eq!(lhs, p("x^2 - y^2"));
        let q = p("x^2*y - 3*z");
        assert_eq!(q.mul(&p("1")).unwrap(), q);
        assert!(q.mul(&p("0")).unwrap().is_zero());
    }

    #[test]
    fn degree_additivity() {
        let a = p("x^2*y + z");
        let b = p("y^3 - x");
        assert_eq!(a.mul(&b).unwrap().degree(), a.degree() + b.degree());
    }

    #[test]
    fn evaluate_simple() {
        let q = p("x^2 + y");
        let v = q
            .evaluate(&[Rational::from_int(2), Rational::from_int(3), Rational::zero()])
            .unwrap();
        assert_eq!(v, Rational::from_int(7));
        // all-zero point picks out the constant term
        let r = p("x*y + 5");
        assert_eq!(
            r.evaluate(&[Rational::zero(), Rational::zero(), Rational::zero()])
                .unwrap(),
            Rational::from_int(5)
        );
        assert!(q.evaluate(&[Rational::zero()]).is_err());
    }

    #[test]
    fn substitute_simple() {
        let (t, o) = ring();
        let q = p("x^2 + y");
        let mut map = BTreeMap::new();
        map.insert(0, p("x + z")); // x -> x + z
        map.insert(1, Polynomial::zero(t.clone(), o.clone())); // y -> 0
        let got = q.substitute(&map).unwrap();
        assert_eq!(got, p("x^2 + 2*x*z + z^2"));
        // identity map
        let mut id = BTreeMap::new();
        id.insert(0, p("x"));
        id.insert(1, p("y"));
        assert_eq!(q.substitute(&id).unwrap(), q);
        // unmapped variable occurring in q is an error
        let mut partial = BTreeMap::new();
        partial.insert(0, p("x"));
        assert!(q.substitute(&partial).is_err());
    }

    #[test]
    fn equal_up_to_scalar_works() {
        let a = p("2*x + 2*y");
        let b = p("x + y");
        assert_eq!(a.equal_up_to_scalar(&b), Some(Rational::from_int(2)));
        assert_eq!(p("x").equal_up_to_scalar(&p("y")), None);
        assert_eq!(p("0").equal_up_to_scalar(&p("0")), Some(Rational::one()));
        assert_eq!(p("x").equal_up_to_scalar(&p("0")), None);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in [
            "x^2 - y^2",
            "-x + 1",
            "2/3*x*y^2 - z + 5",
            "0",
            "-7/2",
            "x*y*z",
        ] {
            let q = p(s);
            let back = p(&q.to_string());
            assert_eq!(q, back, "round-trip failed for {s}");
        }
    }

    #[test]
    fn json_round_trip() {
        let q = p("2/3*x*y^2 - z + 5");
        let json = serde_json::to_string(&q.to_json()).unwrap();
        let parsed: PolynomialJson = serde_json::from_str(&json).unwrap();
        let back = Polynomial::from_json(&parsed, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(q, back);
    }

    #[test]
    fn canonical_form_clears_denominators() {
        let q = p("-1/2*x^2 + 1/3*y");
        let c = q.canonical_form();
        assert_eq!(c, p("3*x^2 - 2*y"));
        // idempotent
        assert_eq!(c.canonical_form(), c);
    }

    #[test]
    fn degrevlex_order_examples() {
        // x^2 > x*y > y^2 > x*z > y*z > z^2 at degree 2 in degrevlex(x,y,z)
        let q = p("x^2 + x*y + y^2 + x*z + y*z + z^2");
        let seq: Vec<String> = q
            .terms()
            .iter()
            .map(|(m, _)| {
                Polynomial {
                    table: q.table.clone(),
                    order: q.order.clone(),
                    terms: vec![(m.clone(), Rational::one())],
                }
                .to_string()
            })
            .collect();
        assert_eq!(seq, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn block_order_separates_blocks() {
        let (t, _) = ring();
        let order = MonomialOrder::block(3, &[0], InnerOrder::DegRevLex); // eliminate x
        let x = Monomial::var(3, 0, 1);
        let y3 = Monomial::var(3, 1, 3);
        assert_eq!(order.cmp(&x, &y3), Ordering::Greater);
        let _ = t;
    }
}
