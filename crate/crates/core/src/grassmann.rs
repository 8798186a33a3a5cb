//! Coordinate machinery of Grassmannians: index combinatorics, primal/dual
//! conversion, Plücker relations, wedge products, containment equations,
//! twistor substitution and straightening to standard monomials.
//!
//! Conventions. A subspace presented as a row space (spanning data) has
//! *dual* Plücker coordinates `q`, indexed by k-subsets; presented as a
//! kernel it has *primal* coordinates `p`, indexed by (n-k)-subsets. The two
//! agree after complementing indices up to the sign of the concatenation
//! permutation. Plücker coordinates are alternating: lookups with permuted
//! indices resolve the sign at the accessor and repeated indices read zero.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::matrix::{self, Scalar};
use crate::poly::{MonomialOrder, PolyError, Polynomial, VarTable};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum GrassmannError {
    #[error("index {idx} out of range 1..={n}")]
    IndexOutOfRange { idx: usize, n: usize },
    #[error("expected strictly increasing indices, got {0:?}")]
    NotSorted(Vec<u16>),
    #[error("expected a subset of size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("matrix shape {rows}x{cols} invalid here")]
    Shape { rows: usize, cols: usize },
    #[error("matrix is rank-deficient")]
    RankDeficient,
    #[error("wedge overflow: {0} + {1} factors exceed the ambient dimension")]
    WedgeOverflow(usize, usize),
    #[error("coordinate kind mismatch")]
    KindMismatch,
    #[error("variable `{0}` is not a Plücker variable of the expected shape")]
    BadVariable(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A strictly increasing tuple of integers in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    entries: Vec<u16>,
    n: u16,
}

impl IndexSet {
    pub fn new(entries: Vec<u16>, n: usize) -> Result<Self, GrassmannError> {
        for &e in &entries {
            if e == 0 || e as usize > n {
                return Err(GrassmannError::IndexOutOfRange {
                    idx: e as usize,
                    n,
                });
            }
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GrassmannError::NotSorted(entries));
        }
        Ok(IndexSet {
            entries,
            n: n as u16,
        })
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn contains(&self, i: u16) -> bool {
        self.entries.binary_search(&i).is_ok()
    }

    /// The complementary subset of `1..=n`.
    pub fn complement(&self) -> IndexSet {
        let entries: Vec<u16> = (1..=self.n).filter(|i| !self.contains(*i)).collect();
        IndexSet {
            entries,
            n: self.n,
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.entries
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All k-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(k);
    fn go(start: u16, n: u16, k: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=(n + 1 - remaining as u16) {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        go(1, n as u16, k, &mut cur, &mut out);
    }
    out
}

/// Sorts indices, returning the permutation sign; `None` when an index
/// repeats (the alternating coordinate is zero).
pub fn sort_with_sign(indices: &[u16]) -> Option<(Vec<u16>, i32)> {
    let mut v = indices.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Sign of the permutation obtained by concatenating two sorted disjoint
/// tuples (number of inversions across the boundary).
pub fn concat_sign(a: &[u16], b: &[u16]) -> i32 {
    let mut inv = 0usize;
    for &x in a {
        inv += b.iter().filter(|&&y| y < x).count();
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of inserting `j` into the sorted tuple `s`, counted from the front:
/// `(-1)^(position - 1)`.
pub fn insert_sign_front(s: &[u16], j: u16) -> i32 {
    let pos = s.iter().filter(|&&x| x < j).count();
    if pos % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Complements a dual index set: returns `(I^c, sign)` with
/// `q_I = sign * p_{I^c}`. Calibrated to the primal/dual table of Gr(3,5).
pub fn primal_dual_convert(
    set: &IndexSet,
    k: usize,
    n: usize,
) -> Result<(IndexSet, i32), GrassmannError> {
    if set.len() != k || set.ambient() != n {
        return Err(GrassmannError::WrongSize {
            expected: k,
            got: set.len(),
        });
    }
    let comp = set.complement();
    let sign = concat_sign(set.entries(), comp.entries());
    Ok((comp, sign))
}

/// Inverse complementation: returns `(K^c, sign)` with `p_K = sign * q_{K^c}`.
pub fn dual_of_primal(
    set: &IndexSet,
    nk: usize,
    n: usize,
) -> Result<(IndexSet, i32), GrassmannError> {
    if set.len() != nk || set.ambient() != n {
        return Err(GrassmannError::WrongSize {
            expected: nk,
            got: set.len(),
        });
    }
    let comp = set.complement();
    let sign = concat_sign(comp.entries(), set.entries());
    Ok((comp, sign))
}

/// Whether coordinates come from spanning data (`Dual`) or a kernel
/// presentation (`Primal`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordKind {
    Primal,
    Dual,
}

/// An alternating coordinate table keyed by sorted index sets. `T` is either
/// [`Rational`] or [`Polynomial`].
#[derive(Debug, Clone)]
pub struct PluckerVector<T> {
    pub k: usize,
    pub n: usize,
    pub kind: CoordKind,
    coords: BTreeMap<Vec<u16>, T>,
    proto: T,
}

impl<T: Scalar> PluckerVector<T> {
    pub fn new(k: usize, n: usize, kind: CoordKind, proto: T) -> Self {
        PluckerVector {
            k,
            n,
            kind,
            coords: BTreeMap::new(),
            proto,
        }
    }

    pub fn set(&mut self, sorted: &[u16], value: T) {
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(sorted.len(), self.k);
        if value.is_zero() {
            self.coords.remove(sorted);
        } else {
            self.coords.insert(sorted.to_vec(), value);
        }
    }

    /// Alternating lookup: permuted indices pick up the permutation sign,
    /// repeated indices read zero.
    pub fn get(&self, indices: &[u16]) -> T {
        let Some((sorted, sign)) = sort_with_sign(indices) else {
            return T::zero_like(&self.proto);
        };
        match self.coords.get(&sorted) {
            None => T::zero_like(&self.proto),
            Some(v) => {
                if sign > 0 {
                    v.clone()
                } else {
                    v.neg()
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u16>, &T)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn proto(&self) -> &T {
        &self.proto
    }

    pub fn scale_free_eq(&self, other: &Self) -> bool
    where
        T: PartialEq,
    {
        self.k == other.k && self.n == other.n && self.coords == other.coords
    }

    /// Exterior product of two coordinate tables of the same kind. On dual
    /// (spanning) data this presents the sum of the subspaces; on primal
    /// (kernel) data it presents the intersection.
    pub fn wedge(&self, other: &Self) -> Result<Self, GrassmannError> {
        if self.n != other.n {
            return Err(GrassmannError::Shape {
                rows: self.n,
                cols: other.n,
            });
        }
        if self.kind != other.kind {
            return Err(GrassmannError::KindMismatch);
        }
        let k = self.k + other.k;
        if k > self.n {
            return Err(GrassmannError::WedgeOverflow(self.k, other.k));
        }
        let mut out = PluckerVector::new(k, self.n, self.kind, self.proto.clone());
        for target in subsets(self.n, k) {
            let mut acc = T::zero_like(&self.proto);
            // Shuffle expansion over splits of `target`.
            for split in subsets_of(&target, self.k) {
                let rest: Vec<u16> = target
                    .iter()
                    .copied()
                    .filter(|i| !split.contains(i))
                    .collect();
                let a = self.get(&split);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(&rest);
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(&b);
                acc = if concat_sign(&split, &rest) > 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            if !acc.is_zero() {
                out.set(&target, acc);
            }
        }
        Ok(out)
    }
}

fn subsets_of(items: &[u16], k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[u16], start: usize, k: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, k, cur, out);
            cur.pop();
        }
    }
    go(items, 0, k, &mut cur, &mut out);
    out
}

/// All maximal minors of a k x n matrix, tagged with the caller's
/// presentation. Rational input is checked for full row rank.
pub fn maximal_minors_rational(
    m: &[Vec<Rational>],
    kind: CoordKind,
) -> Result<PluckerVector<Rational>, GrassmannError> {
    let k = m.len();
    let n = if k == 0 { 0 } else { m[0].len() };
    if k == 0 || k > n || m.iter().any(|r| r.len() != n) {
        return Err(GrassmannError::Shape { rows: k, cols: n });
    }
    if matrix::rank(m) < k {
        return Err(GrassmannError::RankDeficient);
    }
    let mut out = PluckerVector::new(k, n, kind, Rational::zero());
    for cols in subsets(n, k) {
        let sub: Vec<Vec<Rational>> = m
            .iter()
            .map(|row| cols.iter().map(|&c| row[c as usize - 1].clone()).collect())
            .collect();
        let d = matrix::det_rational(&sub).expect("square submatrix");
        out.set(&cols, d);
    }
    Ok(out)
}

/// Maximal minors with polynomial entries (no rank check).
pub fn maximal_minors_poly(
    m: &[Vec<Polynomial>],
    kind: CoordKind,
) -> Result<PluckerVector<Polynomial>, GrassmannError> {
    let k = m.len();
    let n = if k == 0 { 0 } else { m[0].len() };
    if k == 0 || k > n || m.iter().any(|r| r.len() != n) {
        return Err(GrassmannError::Shape { rows: k, cols: n });
    }
    let proto = m[0][0].clone();
    let mut out = PluckerVector::new(k, n, kind, Scalar::zero_like(&proto));
    for cols in subsets(n, k) {
        let sub: Vec<Vec<Polynomial>> = m
            .iter()
            .map(|row| cols.iter().map(|&c| row[c as usize - 1].clone()).collect())
            .collect();
        let d = matrix::det_poly(&sub).expect("square submatrix");
        if !Polynomial::is_zero(&d) {
            out.set(&cols, d);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Plücker variables and relations
// ---------------------------------------------------------------------------

/// Variable name for a Plücker coordinate, e.g. `q[1,2,3]`.
pub fn plucker_var_name(letter: &str, set: &[u16]) -> String {
    format!(
        "{letter}[{}]",
        set.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// Parses `q[1,2,3]` into its letter and sorted index set.
pub fn parse_plucker_var(name: &str) -> Option<(String, Vec<u16>)> {
    let open = name.find('[')?;
    if !name.ends_with(']') {
        return None;
    }
    let letter = &name[..open];
    let body = &name[open + 1..name.len() - 1];
    let mut set = Vec::new();
    for part in body.split(',') {
        set.push(part.trim().parse().ok()?);
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    Some((letter.to_string(), set))
}

/// The table of all `letter[...]` Plücker variables of Gr(k,n).
pub fn plucker_table(letter: &str, k: usize, n: usize) -> Arc<VarTable> {
    VarTable::new(
        subsets(n, k)
            .iter()
            .map(|s| plucker_var_name(letter, s)),
    )
    .expect("distinct names")
}

/// A symbolic Plücker vector: coordinate `I` is the variable `letter[I]`.
pub fn symbolic_plucker_vector(
    letter: &str,
    k: usize,
    n: usize,
    kind: CoordKind,
    table: &Arc<VarTable>,
    order: &MonomialOrder,
) -> Result<PluckerVector<Polynomial>, GrassmannError> {
    let proto = Polynomial::zero(table.clone(), order.clone());
    let mut out = PluckerVector::new(k, n, kind, proto);
    for s in subsets(n, k) {
        let v = Polynomial::var_named(
            table.clone(),
            order.clone(),
            &plucker_var_name(letter, &s),
        )?;
        out.set(&s, v);
    }
    Ok(out)
}

/// Generating set of the Plücker ideal of Gr(k,n) in the `letter[...]`
/// variables of `table`: the quadratic shuffle relations, deduplicated and
/// scalar-normalized. Empty for k = 1 and k = n-1 (projective space).
pub fn plucker_relations(
    k: usize,
    n: usize,
    letter: &str,
    table: &Arc<VarTable>,
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>, GrassmannError> {
    let sym = symbolic_plucker_vector(letter, k, n, CoordKind::Dual, table, order)?;
    let mut seen: Vec<Polynomial> = Vec::new();
    if k == 0 || k >= n {
        return Ok(seen);
    }
    for a in subsets(n, k + 1) {
        for b in subsets(n, k - 1) {
            let mut rel = Polynomial::zero(table.clone(), order.clone());
            for (t, &at) in a.iter().enumerate() {
                let rest: Vec<u16> = a
                    .iter()
                    .enumerate()
                    .filter(|(s, _)| *s != t)
                    .map(|(_, &x)| x)
                    .collect();
                let mut with_b = b.clone();
                with_b.push(at);
                let qa = sym.get(&rest);
                let qb = sym.get(&with_b);
                if qa.is_zero() || qb.is_zero() {
                    continue;
                }
                let term = qa.mul(&qb)?;
                rel = if t % 2 == 0 {
                    rel.add(&term)?
                } else {
                    rel.sub(&term)?
                };
            }
            if rel.is_zero() {
                continue;
            }
            let canon = rel.canonical_form();
            if !seen.contains(&canon) {
                seen.push(canon);
            }
        }
    }
    Ok(seen)
}

/// Bilinear containment equations for `Q ⊆ P` with `Q ∈ Gr(k,n)` in dual
/// coordinates `q` and `P ∈ Gr(m,n)` in primal coordinates `p` (indexed by
/// (n-m)-subsets): for each (k-1)-subset `S` and (n-m-1)-subset `T`,
/// `sum_j ±q_{S∪j} p_{T∪j} = 0`.
pub fn incidence_equations(
    k: usize,
    n: usize,
    m: usize,
    q_letter: &str,
    p_letter: &str,
    table: &Arc<VarTable>,
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>, GrassmannError> {
    if !(k < m && m < n) {
        return Err(GrassmannError::Shape { rows: k, cols: m });
    }
    let q = symbolic_plucker_vector(q_letter, k, n, CoordKind::Dual, table, order)?;
    let p = symbolic_plucker_vector(p_letter, n - m, n, CoordKind::Primal, table, order)?;
    let mut eqs = Vec::new();
    let psize = n - m;
    for s in subsets(n, k - 1) {
        for t in subsets(n, n - m - 1) {
            let mut eq = Polynomial::zero(table.clone(), order.clone());
            for j in 1..=(n as u16) {
                if s.contains(&j) || t.contains(&j) {
                    continue;
                }
                let (qs, qsign) = {
                    let mut v = s.clone();
                    v.push(j);
                    let (sorted, _) = sort_with_sign(&v).expect("distinct");
                    (sorted, insert_sign_front(&s, j))
                };
                let (ps, psign) = {
                    let mut v = t.clone();
                    v.push(j);
                    let (sorted, _) = sort_with_sign(&v).expect("distinct");
                    // Sign counted from the back on the primal side.
                    let pos = t.iter().filter(|&&x| x < j).count() + 1;
                    let sign = if (psize - pos) % 2 == 0 { 1 } else { -1 };
                    (sorted, sign)
                };
                let term = q.get(&qs).mul(&p.get(&ps))?;
                eq = if qsign * psign > 0 {
                    eq.add(&term)?
                } else {
                    eq.sub(&term)?
                };
            }
            if !eq.is_zero() {
                eqs.push(eq);
            }
        }
    }
    Ok(eqs)
}

// ---------------------------------------------------------------------------
// Twistor substitution
// ---------------------------------------------------------------------------

/// How a twistor map writes its images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistorEmission {
    /// Polynomials in the entries `y[row,col]` of the unknown matrix `Y`.
    Entries,
    /// Linear forms in the maximal minors `y[rows...]` of `Y`.
    Minors,
}

/// A substitution sending each Plücker variable of the source ring to a
/// polynomial over the target ring.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    pub target_table: Arc<VarTable>,
    pub order: MonomialOrder,
    images: HashMap<String, Polynomial>,
}

impl SubstitutionMap {
    pub fn new(target_table: Arc<VarTable>, order: MonomialOrder) -> Self {
        SubstitutionMap {
            target_table,
            order,
            images: HashMap::new(),
        }
    }

    pub fn insert(&mut self, source_var: String, image: Polynomial) {
        self.images.insert(source_var, image);
    }

    pub fn image(&self, source_var: &str) -> Option<&Polynomial> {
        self.images.get(source_var)
    }

    /// Applies the substitution to a polynomial. Every variable occurring in
    /// `f` must have an image.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        let table = f.table().clone();
        f.substitute_into(self.target_table.clone(), self.order.clone(), &|i| {
            self.images.get(table.name(i)).cloned()
        })
    }
}

/// Builds the twistor substitution for a projection given by the `r x n`
/// matrix `Z`: each primal Plücker variable `p_letter[S]` with
/// `|S| = subset_size` maps to the `r x r` minor of `[Z | Y]` using the
/// `Z`-columns `S` followed by the `r - subset_size` columns of `Y`.
pub fn twistor_map(
    z: &[Vec<Rational>],
    subset_size: usize,
    p_letter: &str,
    y_letter: &str,
    emission: TwistorEmission,
) -> Result<SubstitutionMap, GrassmannError> {
    let r = z.len();
    let n = if r == 0 { 0 } else { z[0].len() };
    if r == 0 || subset_size >= r || z.iter().any(|row| row.len() != n) {
        return Err(GrassmannError::Shape { rows: r, cols: n });
    }
    let y_cols = r - subset_size;
    let order = MonomialOrder::DegRevLex;
    match emission {
        TwistorEmission::Entries => {
            let names: Vec<String> = (1..=r)
                .flat_map(|i| (1..=y_cols).map(move |j| format!("{y_letter}[{i},{j}]")))
                .collect();
            let table = VarTable::new(names)?;
            let mut map = SubstitutionMap::new(table.clone(), order.clone());
            for s in subsets(n, subset_size) {
                // [Z-columns S | Y] as an r x r polynomial matrix.
                let mut mat: Vec<Vec<Polynomial>> = Vec::with_capacity(r);
                for i in 0..r {
                    let mut row: Vec<Polynomial> = Vec::with_capacity(r);
                    for &c in &s {
                        row.push(Polynomial::constant(
                            table.clone(),
                            order.clone(),
                            z[i][c as usize - 1].clone(),
                        ));
                    }
                    for j in 1..=y_cols {
                        row.push(Polynomial::var_named(
                            table.clone(),
                            order.clone(),
                            &format!("{y_letter}[{},{}]", i + 1, j),
                        )?);
                    }
                    mat.push(row);
                }
                let det = matrix::det_poly(&mat).expect("square");
                map.insert(plucker_var_name(p_letter, &s), det);
            }
            Ok(map)
        }
        TwistorEmission::Minors => {
            let table = plucker_table(y_letter, y_cols, r);
            let mut map = SubstitutionMap::new(table.clone(), order.clone());
            // Laplace expansion along the trailing Y-columns: the sign of the
            // row set J at fixed column positions |S|+1..=r is
            // (-1)^(sum J + sum positions).
            let col_pos_sum: usize = (subset_size + 1..=r).sum();
            for s in subsets(n, subset_size) {
                let mut img = Polynomial::zero(table.clone(), order.clone());
                for j_rows in subsets(r, y_cols) {
                    let comp: Vec<u16> = (1..=r as u16)
                        .filter(|i| !j_rows.contains(i))
                        .collect();
                    // Minor of Z on rows comp and columns S.
                    let sub: Vec<Vec<Rational>> = comp
                        .iter()
                        .map(|&i| {
                            s.iter()
                                .map(|&c| z[i as usize - 1][c as usize - 1].clone())
                                .collect()
                        })
                        .collect();
                    let d = if sub.is_empty() {
                        Rational::one()
                    } else {
                        matrix::det_rational(&sub).expect("square")
                    };
                    if d.is_zero() {
                        continue;
                    }
                    let row_sum: usize = j_rows.iter().map(|&x| x as usize).sum();
                    let sign = if (row_sum + col_pos_sum) % 2 == 0 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    let var = Polynomial::var_named(
                        table.clone(),
                        order.clone(),
                        &plucker_var_name(y_letter, &j_rows),
                    )?;
                    img = img.add(&var.scale(&(sign * d)))?;
                }
                map.insert(plucker_var_name(p_letter, &s), img);
            }
            Ok(map)
        }
    }
}

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

/// Rewrites a polynomial in the dual Plücker variables of one Grassmannian
/// into its unique expansion in standard monomials: after sorting the
/// factors of each monomial lexicographically, all index sets compare
/// componentwise. Works for any k via the quadratic shuffle relations; the
/// result is reduced modulo the Plücker ideal and straightening is
/// idempotent.
pub fn straighten(f: &Polynomial) -> Result<Polynomial, GrassmannError> {
    let table = f.table().clone();
    let order = f.order().clone();
    // Collect the index sets of the variables actually used.
    let mut letter: Option<String> = None;
    let mut k: Option<usize> = None;
    let mut sets: Vec<Option<Vec<u16>>> = vec![None; table.len()];
    for (m, _) in f.terms() {
        for i in m.support() {
            if sets[i].is_some() {
                continue;
            }
            let name = table.name(i);
            let (l, set) = parse_plucker_var(name)
                .ok_or_else(|| GrassmannError::BadVariable(name.to_string()))?;
            match (&letter, &k) {
                (None, None) => {
                    letter = Some(l);
                    k = Some(set.len());
                }
                (Some(l0), Some(k0)) => {
                    if *l0 != l || *k0 != set.len() {
                        return Err(GrassmannError::BadVariable(name.to_string()));
                    }
                }
                _ => unreachable!(),
            }
            sets[i] = Some(set);
        }
    }
    let Some(letter) = letter else {
        return Ok(f.clone()); // constant polynomial
    };
    let lookup = |set: &[u16]| -> usize {
        table
            .index_of(&plucker_var_name(&letter, set))
            .expect("straightening stays inside the variable table")
    };
    let mut memo: HashMap<Vec<Vec<u16>>, BTreeMap<Vec<Vec<u16>>, Rational>> = HashMap::new();
    let mut total: BTreeMap<Vec<Vec<u16>>, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut factors: Vec<Vec<u16>> = Vec::new();
        for i in m.support() {
            let set = sets[i].as_ref().expect("seen above");
            for _ in 0..m.exp(i) {
                factors.push(set.clone());
            }
        }
        factors.sort();
        let expansion = straighten_monomial(&factors, &mut memo);
        for (mono, coeff) in expansion {
            let v = c * &coeff;
            *total.entry(mono).or_insert_with(Rational::zero) += &v;
        }
    }
    let mut terms = Vec::new();
    for (mono, coeff) in total {
        if coeff.is_zero() {
            continue;
        }
        let mut exps = vec![0u16; table.len()];
        for set in &mono {
            exps[lookup(set)] += 1;
        }
        terms.push((crate::poly::Monomial::from_exps(exps), coeff));
    }
    Ok(Polynomial::from_terms(table, order, terms))
}

/// Finds the first adjacent violation in a lex-sorted factor list: a pair
/// `(I, J)` with `I <=lex J` but `I_a > J_a` at some position.
fn first_violation(factors: &[Vec<u16>]) -> Option<(usize, usize)> {
    for w in 0..factors.len().saturating_sub(1) {
        let (i, j) = (&factors[w], &factors[w + 1]);
        for a in 0..i.len() {
            if i[a] > j[a] {
                return Some((w, a));
            }
        }
    }
    None
}

fn straighten_monomial(
    factors: &[Vec<u16>],
    memo: &mut HashMap<Vec<Vec<u16>>, BTreeMap<Vec<Vec<u16>>, Rational>>,
) -> BTreeMap<Vec<Vec<u16>>, Rational> {
    if let Some(hit) = memo.get(factors) {
        return hit.clone();
    }
    let result = match first_violation(factors) {
        None => {
            let mut std = BTreeMap::new();
            std.insert(factors.to_vec(), Rational::one());
            std
        }
        Some((w, a)) => {
            // Shuffle relation on the violating pair (I, J) at position a:
            // with W = {J_1..J_{a+1}} ∪ {I_{a+1}..I_k} (k+1 distinct values),
            // sum over splits W = W1 ∪ W2 (|W1| = a+1) of
            //   sign(W1,W2) * q_{prefix(I) ∪ W2} * q_{W1 ∪ suffix(J)} = 0,
            // where the original monomial is the identity split.
            let i_fac = &factors[w];
            let j_fac = &factors[w + 1];
            let kk = i_fac.len();
            let prefix: Vec<u16> = i_fac[..a].to_vec();
            let suffix: Vec<u16> = j_fac[a + 1..].to_vec();
            let mut pool: Vec<u16> = Vec::with_capacity(kk + 1);
            pool.extend_from_slice(&j_fac[..=a]);
            pool.extend_from_slice(&i_fac[a..]);
            pool.sort_unstable();
            debug_assert!(pool.windows(2).all(|p| p[0] < p[1]));
            let orig_w1: Vec<u16> = j_fac[..=a].to_vec();
            let orig_sign = split_sign(&pool, &orig_w1);
            let mut acc: BTreeMap<Vec<Vec<u16>>, Rational> = BTreeMap::new();
            for w1 in subsets_of(&pool, a + 1) {
                if w1 == orig_w1 {
                    continue;
                }
                let w2: Vec<u16> = pool.iter().copied().filter(|x| !w1.contains(x)).collect();
                // Rebuild the two factors, resolving alternating signs.
                let mut left: Vec<u16> = prefix.clone();
                left.extend_from_slice(&w2);
                let mut right: Vec<u16> = w1.clone();
                right.extend_from_slice(&suffix);
                let Some((left_sorted, ls)) = sort_with_sign(&left) else {
                    continue;
                };
                let Some((right_sorted, rs)) = sort_with_sign(&right) else {
                    continue;
                };
                let split = split_sign(&pool, &w1);
                // Move the term across the relation and divide by the sign
                // of the original split.
                let sign = -split * orig_sign * ls * rs;
                let mut rest: Vec<Vec<u16>> = Vec::with_capacity(factors.len());
                rest.extend_from_slice(&factors[..w]);
                rest.push(left_sorted);
                rest.push(right_sorted);
                rest.extend_from_slice(&factors[w + 2..]);
                rest.sort();
                let sub = straighten_monomial(&rest, memo);
                for (mono, coeff) in sub {
                    let v = if sign > 0 { coeff } else { -coeff };
                    let entry = acc.entry(mono).or_insert_with(Rational::zero);
                    *entry += &v;
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        }
    };
    memo.insert(factors.to_vec(), result.clone());
    result
}

/// Sign of the split (W1 ascending, W2 ascending) of the sorted pool.
fn split_sign(pool: &[u16], w1: &[u16]) -> i32 {
    let w2: Vec<u16> = pool.iter().copied().filter(|x| !w1.contains(x)).collect();
    concat_sign(w1, &w2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_from_i64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn iset(e: &[u16], n: usize) -> IndexSet {
        IndexSet::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn gr35_conversion_table() {
        // Full primal/dual sign table of Gr(3,5): all ten signs.
        let expect: [(&[u16], &[u16], i32); 10] = [
            (&[3, 4, 5], &[1, 2], 1),
            (&[2, 4, 5], &[1, 3], -1),
            (&[2, 3, 5], &[1, 4], 1),
            (&[2, 3, 4], &[1, 5], -1),
            (&[1, 4, 5], &[2, 3], 1),
            (&[1, 3, 5], &[2, 4], -1),
            (&[1, 3, 4], &[2, 5], 1),
            (&[1, 2, 5], &[3, 4], 1),
            (&[1, 2, 4], &[3, 5], -1),
            (&[1, 2, 3], &[4, 5], 1),
        ];
        for (dual, primal, sign) in expect {
            let (comp, s) = primal_dual_convert(&iset(dual, 5), 3, 5).unwrap();
            assert_eq!(comp.entries(), primal);
            assert_eq!(s, sign, "sign of q{:?}", dual);
        }
    }

    #[test]
    fn conversion_is_involutive() {
        for k in 1..4usize {
            for set in subsets(5, k) {
                let is = iset(&set, 5);
                let (comp, s1) = primal_dual_convert(&is, k, 5).unwrap();
                let (back, s2) = dual_of_primal(&comp, 5 - k, 5).unwrap();
                assert_eq!(back, is);
                assert_eq!(s1 * s2, 1);
            }
        }
    }

    #[test]
    fn alternating_lookup() {
        let m = mat_from_i64(&[&[1, 0, 2, -1], &[0, 1, 3, 5]]);
        let pv = maximal_minors_rational(&m, CoordKind::Dual).unwrap();
        assert_eq!(pv.get(&[1, 2]), Rational::from_int(1));
        assert_eq!(pv.get(&[2, 1]), Rational::from_int(-1));
        assert!(pv.get(&[1, 1]).is_zero());
    }

    #[test]
    fn row_swap_negates_all_minors() {
        let m = mat_from_i64(&[&[1, 2, 3, 4], &[5, 6, 7, 8]]);
        let swapped = mat_from_i64(&[&[5, 6, 7, 8], &[1, 2, 3, 4]]);
        let a = maximal_minors_rational(&m, CoordKind::Dual).unwrap();
        let b = maximal_minors_rational(&swapped, CoordKind::Dual).unwrap();
        for s in subsets(4, 2) {
            assert_eq!(a.get(&s), -b.get(&s));
        }
    }

    #[test]
    fn minors_satisfy_plucker_relations() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let table = plucker_table("q", 2, 5);
        let order = MonomialOrder::DegRevLex;
        let rels = plucker_relations(2, 5, "q", &table, &order).unwrap();
        assert_eq!(rels.len(), 5);
        for _ in 0..50 {
            let m: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..5)
                        .map(|_| Rational::from_int(rng.gen_range(-50..=50)))
                        .collect()
                })
                .collect();
            if matrix::rank(&m) < 2 {
                continue;
            }
            let pv = maximal_minors_rational(&m, CoordKind::Dual).unwrap();
            let point: Vec<Rational> = subsets(5, 2).iter().map(|s| pv.get(s)).collect();
            for rel in &rels {
                assert!(rel.evaluate(&point).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn plucker_relations_small_cases() {
        let t24 = plucker_table("q", 2, 4);
        let o = MonomialOrder::DegRevLex;
        let rels = plucker_relations(2, 4, "q", &t24, &o).unwrap();
        assert_eq!(rels.len(), 1);
        let expect =
            Polynomial::parse(t24.clone(), o.clone(), "q[1,2]*q[3,4] - q[1,3]*q[2,4] + q[1,4]*q[2,3]")
                .unwrap();
        assert!(rels[0].equal_up_to_scalar(&expect).is_some());
        // projective space has no relations
        let t1 = plucker_table("q", 1, 4);
        assert!(plucker_relations(1, 4, "q", &t1, &o).unwrap().is_empty());
    }

    #[test]
    fn wedge_point_pair() {
        // e1 ∧ e2 in C^3 -> p[1,2] = 1 only.
        let e1 = maximal_minors_rational(&mat_from_i64(&[&[1, 0, 0]]), CoordKind::Dual).unwrap();
        let e2 = maximal_minors_rational(&mat_from_i64(&[&[0, 1, 0]]), CoordKind::Dual).unwrap();
        let w = e1.wedge(&e2).unwrap();
        assert_eq!(w.get(&[1, 2]), Rational::one());
        assert!(w.get(&[1, 3]).is_zero());
        assert!(w.get(&[2, 3]).is_zero());
    }

    #[test]
    fn wedge_shuffle_formula_n6() {
        // p_{ijk} = l_i m_{jk} - l_j m_{ik} + l_k m_{ij}, symbolically.
        let l_table = plucker_table("l", 1, 6);
        let m_table = plucker_table("m", 2, 6);
        let table = l_table.extend(m_table.names().iter().cloned()).unwrap();
        let order = MonomialOrder::DegRevLex;
        let l = symbolic_plucker_vector("l", 1, 6, CoordKind::Dual, &table, &order).unwrap();
        let m = symbolic_plucker_vector("m", 2, 6, CoordKind::Dual, &table, &order).unwrap();
        let w = l.wedge(&m).unwrap();
        for ijk in subsets(6, 3) {
            let (i, j, k) = (ijk[0], ijk[1], ijk[2]);
            let expect = l
                .get(&[i])
                .mul(&m.get(&[j, k]))
                .unwrap()
                .sub(&l.get(&[j]).mul(&m.get(&[i, k])).unwrap())
                .unwrap()
                .add(&l.get(&[k]).mul(&m.get(&[i, j])).unwrap())
                .unwrap();
            assert_eq!(w.get(&ijk), expect);
        }
    }

    #[test]
    fn wedge_of_stacked_minors() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a: Vec<Vec<Rational>> = (0..1)
                .map(|_| {
                    (0..5)
                        .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                        .collect()
                })
                .collect();
            let b: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..5)
                        .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                        .collect()
                })
                .collect();
            let stack: Vec<Vec<Rational>> = a.iter().chain(b.iter()).cloned().collect();
            if matrix::rank(&stack) < 3 {
                continue;
            }
            let wa = maximal_minors_rational(&a, CoordKind::Dual).unwrap();
            let wb = maximal_minors_rational(&b, CoordKind::Dual).unwrap();
            let wedge = wa.wedge(&wb).unwrap();
            let minors = maximal_minors_rational(&stack, CoordKind::Dual).unwrap();
            for s in subsets(5, 3) {
                assert_eq!(wedge.get(&s), minors.get(&s));
            }
        }
    }

    #[test]
    fn straighten_fixed_point_and_rewrite() {
        let table = plucker_table("q", 2, 4);
        let o = MonomialOrder::DegRevLex;
        let parse = |s: &str| Polynomial::parse(table.clone(), o.clone(), s).unwrap();
        // already standard
        let std = parse("q[1,2]*q[3,4]");
        assert_eq!(straighten(&std).unwrap(), std);
        // the nonstandard crossing rewrites through the three-term relation
        let f = parse("q[1,4]*q[2,3]");
        let got = straighten(&f).unwrap();
        let expect = parse("q[1,3]*q[2,4] - q[1,2]*q[3,4]");
        assert_eq!(got, expect);
        // idempotent
        assert_eq!(straighten(&got).unwrap(), got);
    }

    #[test]
    fn straighten_difference_lies_in_plucker_ideal() {
        use crate::groebner::{buchberger, normal_form, Budget};
        let table = plucker_table("q", 2, 5);
        let o = MonomialOrder::DegRevLex;
        let rels = plucker_relations(2, 5, "q", &table, &o).unwrap();
        let gb = buchberger(&rels, &o, &Budget::default()).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        let vars: Vec<Polynomial> = (0..table.len())
            .map(|i| Polynomial::var(table.clone(), o.clone(), i))
            .collect();
        for _ in 0..10 {
            // random quadratic in the q's
            let mut f = Polynomial::zero(table.clone(), o.clone());
            for _ in 0..4 {
                let a = &vars[rng.gen_range(0..vars.len())];
                let b = &vars[rng.gen_range(0..vars.len())];
                let c = Rational::from_int(rng.gen_range(-5..=5));
                f = f.add(&a.mul(b).unwrap().scale(&c)).unwrap();
            }
            let s = straighten(&f).unwrap();
            let diff = s.sub(&f).unwrap();
            assert!(normal_form(&diff, &gb).is_zero());
            assert_eq!(straighten(&s).unwrap(), s);
        }
    }

    #[test]
    fn incidence_matches_skew_matrix_product() {
        // The 25 bilinear equations of (k,n,m) = (2,5,3) are exactly the
        // entries of the product of the two alternating coordinate matrices.
        let table = plucker_table("q", 2, 5)
            .extend(plucker_table("p", 2, 5).names().iter().cloned())
            .unwrap();
        let o = MonomialOrder::DegRevLex;
        let q = symbolic_plucker_vector("q", 2, 5, CoordKind::Dual, &table, &o).unwrap();
        let p = symbolic_plucker_vector("p", 2, 5, CoordKind::Primal, &table, &o).unwrap();
        let mut product = Vec::new();
        for a in 1..=5u16 {
            for c in 1..=5u16 {
                let mut e = Polynomial::zero(table.clone(), o.clone());
                for b in 1..=5u16 {
                    e = e.add(&p.get(&[a, b]).mul(&q.get(&[b, c])).unwrap()).unwrap();
                }
                if !e.is_zero() {
                    product.push(e);
                }
            }
        }
        let eqs = incidence_equations(2, 5, 3, "q", "p", &table, &o).unwrap();
        assert_eq!(eqs.len(), 25);
        assert_eq!(product.len(), 25);
        for e in &eqs {
            assert!(product.contains(e), "missing product entry {e}");
        }
    }

    #[test]
    fn incidence_vanishes_exactly_on_contained_pairs() {
        let o = MonomialOrder::DegRevLex;
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let table = plucker_table("q", 2, 8)
            .extend(plucker_table("p", 4, 8).names().iter().cloned())
            .unwrap();
        let eqs = incidence_equations(2, 8, 4, "q", "p", &table, &o).unwrap();
        let mut contained = 0;
        let mut random_sep = 0;
        while contained < 5 {
            let x: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..8)
                        .map(|_| Rational::from_int(rng.gen_range(-20..=20)))
                        .collect()
                })
                .collect();
            let t: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..4)
                        .map(|_| Rational::from_int(rng.gen_range(-20..=20)))
                        .collect()
                })
                .collect();
            let qmat = matrix::mat_mul(&t, &x);
            if matrix::rank(&qmat) < 2 || matrix::rank(&x) < 4 {
                continue;
            }
            contained += 1;
            let qv = maximal_minors_rational(&qmat, CoordKind::Dual).unwrap();
            let a = matrix::right_kernel(&x);
            let pv = maximal_minors_rational(&a, CoordKind::Primal).unwrap();
            let point: Vec<Rational> = table
                .names()
                .iter()
                .map(|name| {
                    let (letter, set) = parse_plucker_var(name).unwrap();
                    if letter == "q" {
                        qv.get(&set)
                    } else {
                        pv.get(&set)
                    }
                })
                .collect();
            assert!(eqs.iter().all(|e| e.evaluate(&point).unwrap().is_zero()));
            // a random non-contained Q violates some equation
            let qm2: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..8)
                        .map(|_| Rational::from_int(rng.gen_range(-20..=20)))
                        .collect()
                })
                .collect();
            if matrix::rank(&qm2) < 2 {
                continue;
            }
            let qv2 = maximal_minors_rational(&qm2, CoordKind::Dual).unwrap();
            let point2: Vec<Rational> = table
                .names()
                .iter()
                .map(|name| {
                    let (letter, set) = parse_plucker_var(name).unwrap();
                    if letter == "q" {
                        qv2.get(&set)
                    } else {
                        pv.get(&set)
                    }
                })
                .collect();
            if eqs.iter().any(|e| !e.evaluate(&point2).unwrap().is_zero()) {
                random_sep += 1;
            }
        }
        assert_eq!(random_sep, 5);
    }

    #[test]
    fn incidence_count_point_in_subspace() {
        // (1,n,m): point containment gives linear equations.
        let table = plucker_table("q", 1, 4)
            .extend(plucker_table("p", 1, 4).names().iter().cloned())
            .unwrap();
        let o = MonomialOrder::DegRevLex;
        let eqs = incidence_equations(1, 4, 3, "q", "p", &table, &o).unwrap();
        assert_eq!(eqs.len(), 1);
        for eq in &eqs {
            assert_eq!(eq.degree(), 2);
        }
    }

    #[test]
    fn twistor_minor_emission_is_signed_laplace() {
        // r = 3, n = 4, subset size 1: the image of p[i] is the linear form
        // z_{1i} y[2,3] - z_{2i} y[1,3] + z_{3i} y[1,2], i.e. the displayed
        // vector-matrix product in primal coordinates of the column span.
        let z = mat_from_i64(&[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 12, 13]]);
        let map = twistor_map(&z, 1, "p", "y", TwistorEmission::Minors).unwrap();
        let table = map.target_table.clone();
        let o = map.order.clone();
        for i in 1..=4u16 {
            let img = map.image(&plucker_var_name("p", &[i])).unwrap();
            let expect = Polynomial::parse(
                table.clone(),
                o.clone(),
                &format!(
                    "{}*y[2,3] - {}*y[1,3] + {}*y[1,2]",
                    z[0][i as usize - 1],
                    z[1][i as usize - 1],
                    z[2][i as usize - 1]
                ),
            )
            .unwrap();
            assert_eq!(img, &expect);
        }
    }

    #[test]
    fn twistor_identity_block_restricts_coordinates() {
        // Z = [I_r | 0]: the twistor image of an index set inside 1..=r is a
        // single signed minor of Y.
        let z = mat_from_i64(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0],
        ]);
        let map = twistor_map(&z, 2, "p", "y", TwistorEmission::Minors).unwrap();
        let img = map.image("p[1,2]").unwrap();
        assert_eq!(img.num_terms(), 1);
        assert_eq!(img.to_string(), "y[3,4]");
        // an index set using the zero column maps to zero
        let img5 = map.image("p[1,5]").unwrap();
        assert!(img5.is_zero());
    }

    #[test]
    fn twistor_images_for_branch_locus_projection() {
        // The 6x8 totally positive projection used for the branch-locus
        // quartic: spot values of the twistor substitution.
        let z = mat_from_i64(&[
            &[1, 0, 0, 0, 0, 0, -1, -6],
            &[0, 1, 0, 0, 0, 0, 1, 5],
            &[0, 0, 1, 0, 0, 0, -1, -4],
            &[0, 0, 0, 1, 0, 0, 1, 3],
            &[0, 0, 0, 0, 1, 0, -1, -2],
            &[0, 0, 0, 0, 0, 1, 1, 1],
        ]);
        let map = twistor_map(&z, 4, "p", "y", TwistorEmission::Minors).unwrap();
        let table = map.target_table.clone();
        let o = map.order.clone();
        let check = |var: &str, expect: &str| {
            let img = map.image(var).unwrap();
            let e = Polynomial::parse(table.clone(), o.clone(), expect).unwrap();
            assert_eq!(img, &e, "image of {var}");
        };
        check("p[1,2,3,4]", "y[5,6]");
        check("p[1,2,3,5]", "-y[4,6]");
        check("p[1,2,3,6]", "y[4,5]");
        check("p[1,2,3,7]", "y[4,5] + y[4,6] + y[5,6]");
        check("p[1,2,3,8]", "y[4,5] + 2*y[4,6] + 3*y[5,6]");
        check(
            "p[4,6,7,8]",
            "2*y[1,2] + 3*y[1,3] - y[1,5] + 4*y[2,3] - 2*y[2,5] - y[3,5]",
        );
        check(
            "p[5,6,7,8]",
            "y[1,2] + 2*y[1,3] + y[1,4] + 3*y[2,3] + 2*y[2,4] + y[3,4]",
        );
    }

    #[test]
    fn twistor_entry_emission_agrees_with_minor_emission() {
        // Substituting numeric Y into both emissions gives the same values.
        let mut rng = ChaCha20Rng::seed_from_u64(21);
        let z: Vec<Vec<Rational>> = (0..4)
            .map(|_| {
                (0..6)
                    .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                    .collect()
            })
            .collect();
        let by_entries = twistor_map(&z, 2, "p", "y", TwistorEmission::Entries).unwrap();
        let by_minors = twistor_map(&z, 2, "p", "y", TwistorEmission::Minors).unwrap();
        let y: Vec<Vec<Rational>> = (0..4)
            .map(|_| {
                (0..2)
                    .map(|_| Rational::from_int(rng.gen_range(-9..=9)))
                    .collect()
            })
            .collect();
        // entry order in the Entries table is y[i,j] row-major
        let entry_point: Vec<Rational> = (0..4)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| y[i][j].clone())
            .collect();
        let ym = maximal_minors_rational(&y2t(&y), CoordKind::Dual).unwrap();
        let minor_point: Vec<Rational> = by_minors
            .target_table
            .names()
            .iter()
            .map(|name| {
                let (_, set) = parse_plucker_var(name).unwrap();
                ym.get(&set)
            })
            .collect();
        for s in subsets(6, 2) {
            let var = plucker_var_name("p", &s);
            let a = by_entries
                .image(&var)
                .unwrap()
                .evaluate(&entry_point)
                .unwrap();
            let b = by_minors
                .image(&var)
                .unwrap()
                .evaluate(&minor_point)
                .unwrap();
            assert_eq!(a, b, "emissions disagree at {var}");
        }
    }

    /// transpose helper: columns of Y as spanning rows
    fn y2t(y: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        matrix::transpose(y)
    }
}
