//! Combinatorial degree computations: Chow-Lam degrees of rank-2 positroid
//! varieties, degrees of Grassmannians, the maximizer table, and numeric
//! cohomology classes via Gröbner point counting.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::chowlam::{Presentation, VarietySpec};
use crate::grassmann::{self, subsets, IndexSet};
use crate::groebner::{self, Budget, GbError};
use crate::matrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum SchubertError {
    #[error("partition must have weakly decreasing positive parts")]
    BadPartition,
    #[error("n - t = {0} must be odd here")]
    ParityViolation(i64),
    #[error("no integer s > k with t = (s-k)k + 1 exists for k={k}, t={t}")]
    NoValidS { k: usize, t: usize },
    #[error("translate was non-generic twice in a row")]
    NonGenericTranslate,
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error(transparent)]
    Grassmann(#[from] grassmann::GrassmannError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}

/// A partition of n with weakly decreasing positive parts, encoding a rank-2
/// positroid: the blocks of consecutive columns are the nonbases.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SchubertError> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(SchubertError::BadPartition);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchubertError::BadPartition);
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The consecutive blocks of `1..=n` cut out by the parts.
    pub fn blocks(&self) -> Vec<Vec<u16>> {
        let mut blocks = Vec::with_capacity(self.parts.len());
        let mut next = 1u16;
        for &p in &self.parts {
            let block: Vec<u16> = (next..next + p as u16).collect();
            next += p as u16;
            blocks.push(block);
        }
        blocks
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A cohomology class of a subvariety of Gr(k,n): coefficients over the
/// index sets of one dimension stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub k: usize,
    pub n: usize,
    pub coeffs: BTreeMap<IndexSet, u64>,
}

impl CohomologyClass {
    /// Coefficient of the distinguished index set `{r-k, r-k+2, ..., r}`,
    /// i.e. the Chow-Lam degree.
    pub fn chow_lam_degree(&self, r: usize) -> u64 {
        let mut entries: Vec<u16> = vec![(r - self.k) as u16];
        entries.extend(((r - self.k + 2)..=r).map(|i| i as u16));
        match IndexSet::new(entries, self.n) {
            Ok(set) => self.coeffs.get(&set).copied().unwrap_or(0),
            Err(_) => 0,
        }
    }
}

/// Coefficients of `prod_i (1 + x + ... + x^(b_i - 1))`.
fn h_product_coeffs(parts: &[u32]) -> Vec<i128> {
    let mut acc: Vec<i128> = vec![1];
    for &b in parts {
        let mut next = vec![0i128; acc.len() + b as usize - 1];
        for (i, &c) in acc.iter().enumerate() {
            for j in 0..b as usize {
                next[i + j] += c;
            }
        }
        acc = next;
    }
    acc
}

/// Chow-Lam degree of the rank-2 positroid variety of `beta`: the difference
/// of two adjacent coefficients of the dehomogenized product of complete
/// homogeneous symmetric polynomials.
pub fn chow_lam_degree_rank2(beta: &Partition) -> Result<u64, SchubertError> {
    let n = beta.n() as i64;
    let t = beta.num_parts() as i64;
    let c = n - t;
    if c < 0 || c % 2 == 0 {
        return Err(SchubertError::ParityViolation(c));
    }
    let coeffs = h_product_coeffs(beta.parts());
    let at = |i: i64| -> i128 {
        if i < 0 || i as usize >= coeffs.len() {
            0
        } else {
            coeffs[i as usize]
        }
    };
    let lam = at((c - 1) / 2) - at((c - 3) / 2);
    Ok(lam.max(0) as u64)
}

/// Full Schubert-class expansion of the rank-2 positroid class: the product
/// of the `h_{b_i - 1}` decomposed into interval sums `x^i y^(c-i) + ... +
/// x^(c-i) y^i`, whose coefficients are read off by differencing.
pub fn positroid_class_rank2(beta: &Partition) -> Result<CohomologyClass, SchubertError> {
    let n = beta.n();
    let t = beta.num_parts();
    let c = n as i64 - t as i64;
    if c < 0 {
        return Err(SchubertError::BadPartition);
    }
    let coeffs = h_product_coeffs(beta.parts());
    let at = |i: i64| -> i128 {
        if i < 0 || i as usize >= coeffs.len() {
            0
        } else {
            coeffs[i as usize]
        }
    };
    let mut class = CohomologyClass {
        k: 2,
        n,
        coeffs: BTreeMap::new(),
    };
    let mut i = 0i64;
    while 2 * i <= c {
        if 2 * i == c && c > 0 {
            break; // intervals pair x^i with y^(c-i); the middle self-pairs only for even length
        }
        let delta = at(i) - at(i - 1);
        if delta > 0 {
            // interval i corresponds to I = (n + i - 1 - c, n - i)
            let i1 = n as i64 + i - 1 - c;
            let i2 = n as i64 - i;
            if i1 >= 1 && i1 < i2 {
                let set = IndexSet::new(vec![i1 as u16, i2 as u16], n)
                    .map_err(SchubertError::Grassmann)?;
                class.coeffs.insert(set, delta as u64);
            }
        }
        i += 1;
    }
    Ok(class)
}

/// Degree of Gr(k,s) in its Plücker embedding, by the staircase product
/// formula `(k(s-k))! * prod_{i=0}^{k-1} i! / (s-k+i)!`.
pub fn grassmannian_degree(k: usize, s: usize) -> u128 {
    assert!(k >= 1 && k <= s);
    let dim = k * (s - k);
    let factorial = |m: usize| -> num::BigUint {
        (1..=m).map(num::BigUint::from).product::<num::BigUint>().max(num::BigUint::from(1u32))
    };
    let mut num = factorial(dim);
    let mut den = num::BigUint::from(1u32);
    for i in 0..k {
        num *= factorial(i);
        den *= factorial(s - k + i);
    }
    let q = num / den;
    let digits = q.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as u128,
        2 => digits[0] as u128 | ((digits[1] as u128) << 64),
        _ => panic!("degree overflows u128"),
    }
}

/// Catalan number C_m.
pub fn catalan(m: usize) -> u128 {
    grassmannian_degree(2, m + 2)
}

/// One row of the maximizer table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRow {
    pub n: usize,
    pub lambda: u64,
    pub maximizers: Vec<Partition>,
}

/// Exhaustive search over the partitions of each n (matching parity) for the
/// maximal Chow-Lam degree; reports all maximizers.
pub fn max_table(n_lo: usize, n_hi: usize) -> Vec<MaxRow> {
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let mut best: u64 = 0;
        let mut arg: Vec<Partition> = Vec::new();
        for parts in partitions_of(n) {
            let t = parts.len();
            if t < 2 || (n - t) % 2 == 0 {
                continue;
            }
            let beta = Partition::new(parts.iter().map(|&p| p as u32).collect())
                .expect("generated partitions are valid");
            let lam = chow_lam_degree_rank2(&beta).expect("parity checked");
            if lam > best {
                best = lam;
                arg = vec![beta];
            } else if lam == best && lam > 0 {
                arg.push(beta);
            }
        }
        rows.push(MaxRow {
            n,
            lambda: best,
            maximizers: arg,
        });
    }
    rows
}

/// All partitions of n (weakly decreasing), smallest number of parts first.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

/// Degree of the rank-k positroid with t pairwise disjoint nonbases:
/// `lambda = (n/s) * deg Gr(k,s)` with `n = k t` and `t = (s-k)k + 1`.
pub fn disjoint_nonbases_degree(k: usize, t: usize) -> Result<u128, SchubertError> {
    if t < 1 || (t - 1) % k != 0 {
        return Err(SchubertError::NoValidS { k, t });
    }
    let s = k + (t - 1) / k;
    if s <= k {
        return Err(SchubertError::NoValidS { k, t });
    }
    let n = k * t;
    // n/s need not be an integer on its own; the product always is.
    let num = n as u128 * grassmannian_degree(k, s);
    debug_assert_eq!(num % s as u128, 0);
    Ok(num / s as u128)
}

/// TSV rendering of the maximizer table, one row per n.
pub fn max_table_tsv(rows: &[MaxRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{}\t{}\t{}",
                r.n,
                r.lambda,
                r.maximizers
                    .iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Numerically computes the Schubert-class coefficients of a variety in
/// Gr(k,n) by intersecting a random GL(n)-translate with the opposite
/// Schubert varieties of complementary dimension and counting points through
/// a zero-dimensional Gröbner basis. The translate is drawn with large
/// random integer entries; genericity is verified by a dimension check with
/// one retry.
pub fn cohomology_class_numeric(
    spec: &VarietySpec,
    budget: &Budget,
    rng: &mut ChaCha20Rng,
) -> Result<CohomologyClass, SchubertError> {
    let (k, n) = (spec.k, spec.n);
    let table = grassmann::plucker_table("q", k, n);
    let order = MonomialOrder::DegRevLex;
    let gens = spec.generators(&table, &order)?;
    let plucker = grassmann::plucker_relations(k, n, "q", &table, &order)?;
    // dimension of the affine cone over the variety
    let mut cone: Vec<Polynomial> = gens.clone();
    cone.extend(plucker.iter().cloned());
    let gb = groebner::buchberger(&cone, &order, budget)?;
    let dim_cone = groebner::dimension(&gb);
    let dim_proj = dim_cone - 1;
    let mut class = CohomologyClass {
        k,
        n,
        coeffs: BTreeMap::new(),
    };
    for set in subsets(n, k) {
        let dim_s: i64 = set
            .iter()
            .enumerate()
            .map(|(s, &i)| i as i64 - (s as i64 + 1))
            .sum();
        if dim_s != dim_proj {
            continue;
        }
        let idx = IndexSet::new(set.clone(), n)?;
        let mut attempts = 0;
        let count = loop {
            attempts += 1;
            match count_translate_intersection(
                &gens, &plucker, k, n, &idx, &table, &order, budget, rng,
            ) {
                Ok(c) => break c,
                Err(SchubertError::NonGenericTranslate) if attempts < 2 => continue,
                Err(e) => return Err(e),
            }
        };
        if count > 0 {
            class.coeffs.insert(idx, count);
        }
    }
    Ok(class)
}

/// Points of `g·V ∩ S_{I^c}` for a random translate g, counted with
/// multiplicity on a random affine chart.
fn count_translate_intersection(
    gens: &[Polynomial],
    plucker: &[Polynomial],
    k: usize,
    n: usize,
    idx: &IndexSet,
    table: &std::sync::Arc<crate::poly::VarTable>,
    order: &MonomialOrder,
    budget: &Budget,
    rng: &mut ChaCha20Rng,
) -> Result<u64, SchubertError> {
    // random translate: substitute q_J -> sum_K minor_g(J, K) q_K
    let g: Vec<Vec<Rational>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Rational::from_int(rng.gen_range(-1_000_000i64..=1_000_000)))
                .collect()
        })
        .collect();
    let mut sub = BTreeMap::new();
    for j_set in subsets(n, k) {
        let mut img = Polynomial::zero(table.clone(), order.clone());
        for k_set in subsets(n, k) {
            let minor: Vec<Vec<Rational>> = j_set
                .iter()
                .map(|&a| {
                    k_set
                        .iter()
                        .map(|&b| g[a as usize - 1][b as usize - 1].clone())
                        .collect()
                })
                .collect();
            let d = matrix::det_rational(&minor).expect("square");
            if d.is_zero() {
                continue;
            }
            let var = Polynomial::var_named(
                table.clone(),
                order.clone(),
                &grassmann::plucker_var_name("q", &k_set),
            )?;
            img = img.add(&var.scale(&d))?;
        }
        let j_idx = table
            .index_of(&grassmann::plucker_var_name("q", &j_set))
            .expect("q variable");
        sub.insert(j_idx, img);
    }
    let mut system: Vec<Polynomial> = Vec::new();
    for gpoly in gens {
        system.push(gpoly.substitute(&sub)?);
    }
    system.extend(plucker.iter().cloned());
    // opposite Schubert variety S_{I^c}: q_J = 0 unless J >= I^c
    let comp: Vec<u16> = {
        let mut v: Vec<u16> = idx
            .entries()
            .iter()
            .map(|&i| (n as u16) + 1 - i)
            .collect();
        v.sort_unstable();
        v
    };
    for j_set in subsets(n, k) {
        let dominates = j_set.iter().zip(comp.iter()).all(|(a, b)| a >= b);
        if !dominates {
            system.push(Polynomial::var_named(
                table.clone(),
                order.clone(),
                &grassmann::plucker_var_name("q", &j_set),
            )?);
        }
    }
    // random affine chart: a random linear form set to 1
    let mut chart = Polynomial::constant(table.clone(), order.clone(), -Rational::one());
    for i in 0..table.len() {
        let c = Rational::from_int(rng.gen_range(-50i64..=50));
        chart = chart.add(&Polynomial::var(table.clone(), order.clone(), i).scale(&c))?;
    }
    system.push(chart);
    let gb = groebner::buchberger(&system, order, budget)?;
    if gb.is_unit_ideal() {
        return Ok(0);
    }
    match groebner::dimension(&gb) {
        0 => Ok(groebner::zero_dim_degree(&gb)?),
        _ => Err(SchubertError::NonGenericTranslate),
    }
}

impl VarietySpec {
    /// Generators of the variety's ideal in the dual Plücker variables of
    /// the given table (used by both the elimination pipeline and the
    /// numeric class computation).
    pub fn generators(
        &self,
        table: &std::sync::Arc<crate::poly::VarTable>,
        order: &MonomialOrder,
    ) -> Result<Vec<Polynomial>, crate::poly::PolyError> {
        match &self.presentation {
            Presentation::Positroid(beta) => {
                let mut gens = Vec::new();
                for block in beta.blocks() {
                    for pair in subsets_of_block(&block, self.k) {
                        gens.push(Polynomial::var_named(
                            table.clone(),
                            order.clone(),
                            &grassmann::plucker_var_name("q", &pair),
                        )?);
                    }
                }
                Ok(gens)
            }
            Presentation::Schubert(idx) => {
                let mut gens = Vec::new();
                for j_set in subsets(self.n, self.k) {
                    let dominates = j_set
                        .iter()
                        .zip(idx.entries().iter())
                        .all(|(a, b)| a >= b);
                    if !dominates {
                        gens.push(Polynomial::var_named(
                            table.clone(),
                            order.clone(),
                            &grassmann::plucker_var_name("q", &j_set),
                        )?);
                    }
                }
                Ok(gens)
            }
            Presentation::Generators(polys) => polys
                .iter()
                .map(|p| p.rename_into(table.clone(), order.clone()))
                .collect(),
            Presentation::Parametrized(_) => Ok(Vec::new()),
        }
    }
}

fn subsets_of_block(block: &[u16], k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    if block.len() < k {
        return out;
    }
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
    go(block, 0, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beta(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn degree_of_three_two_two_two() {
        assert_eq!(chow_lam_degree_rank2(&beta(&[3, 2, 2, 2])).unwrap(), 3);
        assert_eq!(chow_lam_degree_rank2(&beta(&[2, 2, 2, 2, 2])).unwrap(), 5);
        assert!(chow_lam_degree_rank2(&beta(&[2, 2])).is_err()); // parity
    }

    #[test]
    fn class_of_divisor_and_middle_coefficients() {
        // (2,1,...): a single Schubert divisor with coefficient 1
        let c = positroid_class_rank2(&beta(&[2, 1, 1, 1])).unwrap();
        assert_eq!(c.coeffs.len(), 1);
        let (set, coeff) = c.coeffs.iter().next().unwrap();
        assert_eq!(set.entries(), &[3, 5]);
        assert_eq!(*coeff, 1);
        // (2,2,2) in Gr(2,6): middle coefficient 2, r = (n+t+1)/2 = 5
        let c = positroid_class_rank2(&beta(&[2, 2, 2])).unwrap();
        assert_eq!(c.chow_lam_degree(5), 2);
        // (3,2,2,2): middle coefficient 3 matches the direct formula
        let c = positroid_class_rank2(&beta(&[3, 2, 2, 2])).unwrap();
        assert_eq!(c.chow_lam_degree(7), 3);
    }

    #[test]
    fn class_middle_matches_direct_formula_exhaustively() {
        for n in 3..=16usize {
            for parts in partitions_of(n) {
                let t = parts.len();
                if t < 2 || (n - t) % 2 == 0 {
                    continue;
                }
                let b = beta(&parts.iter().map(|&p| p as u32).collect::<Vec<_>>());
                let r = (n + t + 1) / 2;
                let lam = chow_lam_degree_rank2(&b).unwrap();
                let class = positroid_class_rank2(&b).unwrap();
                assert_eq!(class.chow_lam_degree(r), lam, "mismatch at {b}");
            }
        }
    }

    #[test]
    fn grassmannian_degrees() {
        assert_eq!(grassmannian_degree(2, 4), 2);
        assert_eq!(grassmannian_degree(2, 5), 5);
        assert_eq!(grassmannian_degree(2, 6), 14);
        assert_eq!(grassmannian_degree(1, 9), 1);
        assert_eq!(grassmannian_degree(3, 6), 42);
        // Catalan closed form for s <= 12
        for s in 2..=12usize {
            let c = catalan(s - 2);
            assert_eq!(grassmannian_degree(2, s), c);
        }
    }

    #[test]
    fn disjoint_nonbases_degrees() {
        assert_eq!(disjoint_nonbases_degree(2, 5).unwrap(), 5);
        assert_eq!(disjoint_nonbases_degree(2, 7).unwrap(), 14);
        assert_eq!(disjoint_nonbases_degree(3, 10).unwrap(), 210);
        assert!(disjoint_nonbases_degree(3, 9).is_err());
    }

    #[test]
    fn max_table_spot_rows() {
        let rows = max_table(9, 10);
        assert_eq!(rows[0].lambda, 3);
        assert_eq!(rows[0].maximizers, vec![beta(&[3, 2, 2, 2])]);
        assert_eq!(rows[1].lambda, 5);
        assert_eq!(rows[1].maximizers, vec![beta(&[2, 2, 2, 2, 2])]);
    }

    #[test]
    fn catalan_identity_for_all_two_blocks() {
        // lambda(V_(2^(2s-3))) = C_{s-1} for 3 <= s <= 9
        for s in 3..=9usize {
            let t = 2 * s - 3;
            let b = beta(&vec![2u32; t]);
            let lam = chow_lam_degree_rank2(&b).unwrap();
            assert_eq!(lam as u128, catalan(s - 1), "s = {s}");
        }
    }
}
