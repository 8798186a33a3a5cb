//! Buchberger-based Gröbner engine: reduced bases, normal forms,
//! elimination ideals, saturation and combinatorial dimension counting.
//!
//! The S-pair queue uses the normal selection strategy (smallest lcm under
//! the active order, ties broken by exponent vector then pair index) with
//! the Gebauer-Möller criteria, so identical inputs always produce the
//! identical reduced basis. Budgets cap the number of division steps and
//! the basis size; exceeding them is an explicit error, never a silent
//! wrong answer.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::{InnerOrder, Monomial, MonomialOrder, PolyError, Polynomial, VarTable};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum GbError {
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("basis is not zero-dimensional")]
    NotZeroDimensional,
    #[error("saturation by zero polynomial")]
    SaturateByZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Resource caps for a single Gröbner computation.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Maximum number of single division steps across the whole run.
    pub max_steps: u64,
    /// Maximum number of basis elements.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 20_000_000,
            max_basis: 20_000,
        }
    }
}

impl Budget {
    pub fn with_steps(max_steps: u64) -> Self {
        Budget {
            max_steps,
            ..Budget::default()
        }
    }
}

/// A finite generating set of an ideal over one variable table.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>) -> Self {
        Ideal { gens }
    }

    pub fn table(&self) -> Option<&Arc<VarTable>> {
        self.gens.first().map(|g| g.table())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }
}

/// A Gröbner basis. When `reduced` is set the basis is the unique reduced
/// basis for its order: monic generators, no term of any generator divisible
/// by another generator's leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    table: Arc<VarTable>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// True if the basis contains a nonzero constant, i.e. the ideal is the
    /// whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| !g.is_zero() && g.is_constant())
    }
}

struct Engine {
    budget: Budget,
    steps: u64,
}

impl Engine {
    fn tick(&mut self) -> Result<(), GbError> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(GbError::Budget(format!(
                "more than {} division steps",
                self.budget.max_steps
            )));
        }
        Ok(())
    }

    /// Full normal form of `f` against `basis`. When `scale_free` is set the
    /// result may be rescaled (used inside Buchberger where generators are
    /// only defined up to scalars); otherwise the reduction is exact.
    fn reduce(
        &mut self,
        f: &Polynomial,
        basis: &[Polynomial],
        scale_free: bool,
    ) -> Result<Polynomial, GbError> {
        let order = f.order().clone();
        let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
        let mut work = f.clone();
        'outer: while let Some((lm, lc)) = work.leading_term().map(|(m, c)| (m.clone(), c.clone()))
        {
            for g in basis {
                let Some((gm, gc)) = g.leading_term() else {
                    continue;
                };
                if gm.divides(&lm) {
                    self.tick()?;
                    if std::env::var_os("CHOW_LAM_GB_TRACE").is_some() && self.steps % 200 == 0 {
                        let bits: u64 = work
                            .terms()
                            .iter()
                            .map(|(_, c)| c.numer().bits() + c.denom().bits())
                            .max()
                            .unwrap_or(0);
                        eprintln!(
                            "reduce trace: step={} work_terms={} max_coeff_bits={}",
                            self.steps,
                            work.num_terms(),
                            bits
                        );
                    }
                    let q = lm.try_div(gm).expect("divisibility checked");
                    let c = &lc / gc;
                    work = work.sub(&g.mul_term(&q, &c))?;
                    if scale_free && work.num_terms() > 0 {
                        // Any rescaling must hit the collected remainder too,
                        // or the output mixes incompatible scales.
                        let content = work.signed_content();
                        if !content.is_one() {
                            let inv = content.recip().expect("nonzero content");
                            work = work.scale(&inv);
                            for (_, rc) in remainder.iter_mut() {
                                *rc *= &inv;
                            }
                        }
                    }
                    continue 'outer;
                }
            }
            // Leading term irreducible: move it to the remainder.
            if std::env::var_os("CHOW_LAM_GB_TRACE").is_some() && remainder.len() % 5000 == 4999 {
                eprintln!("tail trace: remainder={} work={}", remainder.len(), work.num_terms());
            }
            remainder.push((lm.clone(), lc.clone()));
            let lt = Polynomial::from_terms(
                work.table().clone(),
                order.clone(),
                vec![(lm, lc)],
            );
            work = work.sub(&lt)?;
        }
        Ok(Polynomial::from_terms(
            f.table().clone(),
            order,
            remainder,
        ))
    }
}

/// The S-polynomial of `f` and `g` (both nonzero).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GbError> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.try_div(fm).unwrap(), &(&Rational::one() / fc));
    let b = g.mul_term(&l.try_div(gm).unwrap(), &(&Rational::one() / gc));
    Ok(a.sub(&b)?)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Möller pair update: appends the pairs of `t` (index of the new
/// basis element) against `0..t`, pruning with the product and chain
/// criteria.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[Polynomial], t: usize) {
    let lt = |i: usize| basis[i].leading_monomial().expect("nonzero");
    let new_lm = lt(t);
    // Candidate pairs (i, t).
    let mut cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: lt(i).lcm(new_lm),
        })
        .collect();
    // Drop (i,t) when some (j,t) has a strictly smaller lcm dividing it, or
    // an equal lcm with smaller index (keeps one representative).
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].lcm.divides(&cand[a].lcm)
                && (cand[b].lcm != cand[a].lcm || b < a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    // Product criterion: coprime leading monomials reduce to zero.
    let mut cand: Vec<Pair> = cand
        .drain(..)
        .zip(keep)
        .filter(|(p, k)| *k && !lt(p.i).gcd_is_one(new_lm))
        .map(|(p, _)| p)
        .collect();
    // Chain criterion on the old pairs: (i,j) is redundant once lt(t)
    // divides lcm(i,j) strictly inside both new lcms.
    pairs.retain(|p| {
        !(new_lm.divides(&p.lcm)
            && lt(p.i).lcm(new_lm) != p.lcm
            && lt(p.j).lcm(new_lm) != p.lcm)
    });
    pairs.append(&mut cand);
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, GbError> {
    let table = gens
        .first()
        .map(|g| g.table().clone())
        .unwrap_or_else(|| VarTable::new(Vec::<String>::new()).expect("empty table"));
    let mut engine = Engine {
        budget: *budget,
        steps: 0,
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    // Seed with the primitive parts of the nonzero generators, interreduced.
    let mut seed: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order.clone()).primitive_part())
        .collect();
    seed.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    let mut pairs: Vec<Pair> = Vec::new();
    for g in seed {
        let r = engine.reduce(&g, &basis, true)?;
        if r.is_zero() {
            continue;
        }
        basis.push(r);
        update_pairs(&mut pairs, &basis, basis.len() - 1);
    }
    while !pairs.is_empty() {
        engine.tick()?;
        if std::env::var_os("CHOW_LAM_GB_TRACE").is_some() && engine.steps % 1000 == 0 {
            eprintln!(
                "gb trace: steps={} basis={} pairs={}",
                engine.steps,
                basis.len(),
                pairs.len()
            );
        }
        // Normal selection: smallest lcm under the order, deterministic ties.
        let mut best = 0;
        for k in 1..pairs.len() {
            let ord = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
            let better = match ord {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    (pairs[k].lcm.exps(), pairs[k].i, pairs[k].j)
                        < (pairs[best].lcm.exps(), pairs[best].i, pairs[best].j)
                }
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j])?;
        let r = engine.reduce(&s, &basis, true)?;
        if r.is_zero() {
            continue;
        }
        if basis.len() + 1 > engine.budget.max_basis {
            return Err(GbError::Budget(format!(
                "basis larger than {} elements",
                engine.budget.max_basis
            )));
        }
        basis.push(r);
        update_pairs(&mut pairs, &basis, basis.len() - 1);
    }
    // Minimalize: drop generators whose lead is divisible by another lead.
    let mut alive: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !alive[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !alive[j] {
                continue;
            }
            let li = basis[i].leading_monomial().unwrap();
            let lj = basis[j].leading_monomial().unwrap();
            if lj.divides(li) && (li != lj || j < i) {
                alive[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    // Tail-reduce each generator against the others and make monic. The
    // reduction may rescale freely: a basis element is only defined up to a
    // scalar, and the leading term is irreducible so it survives.
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = engine.reduce(&minimal[i], &others, true)?;
        debug_assert!(!r.is_zero());
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    Ok(GroebnerBasis {
        gens: reduced,
        order: order.clone(),
        table,
        reduced: true,
    })
}

/// Unique remainder of `f` modulo a reduced basis: no term of the result is
/// divisible by any leading monomial of the basis. Linear over the field.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let mut engine = Engine {
        budget: Budget {
            max_steps: u64::MAX,
            max_basis: usize::MAX,
        },
        steps: 0,
    };
    let f = f.with_order(gb.order.clone());
    engine
        .reduce(&f, &gb.gens, false)
        .expect("unbounded budget cannot be exceeded")
}

/// Generators of the elimination ideal `I ∩ k[vars not in elim]`, obtained
/// from a block-order basis by discarding generators that use eliminated
/// variables. The result lives on the same table.
pub fn eliminate(
    gens: &[Polynomial],
    elim_vars: &[usize],
    budget: &Budget,
) -> Result<Ideal, GbError> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Ideal::new(Vec::new()));
    };
    let nvars = first.table().len();
    let order = MonomialOrder::block(nvars, elim_vars, InnerOrder::DegRevLex);
    let gb = buchberger(gens, &order, budget)?;
    let mut mask = vec![false; nvars];
    for &v in elim_vars {
        mask[v] = true;
    }
    let kept: Vec<Polynomial> = gb
        .gens
        .iter()
        .filter(|g| !g.uses_any_var(&mask))
        .cloned()
        .collect();
    Ok(Ideal::new(kept))
}

/// Saturation `(I : f^∞)` by eliminating a fresh variable `t` from
/// `I + (1 - t f)`. For a homogeneous ideal and a single-variable `f` the
/// cheaper degree-reverse-lex route is used instead; both paths return the
/// same ideal.
pub fn saturate(
    gens: &[Polynomial],
    f: &Polynomial,
    budget: &Budget,
) -> Result<Ideal, GbError> {
    if f.is_zero() {
        return Err(GbError::SaturateByZero);
    }
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(Ideal::new(Vec::new()));
    }
    if f.is_constant() {
        return Ok(Ideal::new(nonzero.into_iter().cloned().collect()));
    }
    if let Some(v) = single_variable(f) {
        if nonzero.iter().all(|g| g.is_homogeneous()) {
            return saturate_by_variable(gens, v, budget);
        }
    }
    saturate_rabinowitsch(gens, f, budget)
}

fn single_variable(f: &Polynomial) -> Option<usize> {
    if f.num_terms() != 1 {
        return None;
    }
    let (m, _) = &f.terms()[0];
    let mut vars = m.support();
    let v = vars.next()?;
    if vars.next().is_some() || m.exp(v) != 1 {
        return None;
    }
    Some(v)
}

/// Degree-reverse-lex saturation by one variable of a homogeneous ideal:
/// compute a basis with the variable cheapest and divide it out of every
/// generator.
fn saturate_by_variable(
    gens: &[Polynomial],
    var: usize,
    budget: &Budget,
) -> Result<Ideal, GbError> {
    let table = gens
        .iter()
        .find(|g| !g.is_zero())
        .expect("nonzero generator")
        .table()
        .clone();
    let nvars = table.len();
    // Permute variables so `var` sits last, where degrevlex makes it cheapest.
    let mut perm: Vec<usize> = (0..nvars).filter(|&i| i != var).collect();
    perm.push(var);
    let inv = invert_permutation(&perm);
    let permuted_table = VarTable::new(perm.iter().map(|&i| table.name(i).to_string()))?;
    let to_permuted = |g: &Polynomial| -> Polynomial {
        permute_vars(g, &permuted_table, &inv)
    };
    let from_permuted = |g: &Polynomial| -> Polynomial { permute_vars(g, &table, &perm) };
    let permuted: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_permuted(g))
        .collect();
    let gb = buchberger(&permuted, &MonomialOrder::DegRevLex, budget)?;
    let last = nvars - 1;
    let divided: Vec<Polynomial> = gb
        .gens
        .iter()
        .map(|g| {
            let e = g.min_exponent(last);
            from_permuted(&g.div_var_power(last, e))
        })
        .collect();
    Ok(Ideal::new(divided))
}

fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}

/// Rewrites `g` over `target`, sending variable `i` to position `map[i]`.
fn permute_vars(g: &Polynomial, target: &Arc<VarTable>, map: &[usize]) -> Polynomial {
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for i in m.support() {
                exps[map[i]] = m.exp(i);
            }
            (Monomial::from_exps(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(target.clone(), g.order().clone(), terms)
}

fn saturate_rabinowitsch(
    gens: &[Polynomial],
    f: &Polynomial,
    budget: &Budget,
) -> Result<Ideal, GbError> {
    let table = f.table().clone();
    let mut aux = "t!sat".to_string();
    while table.index_of(&aux).is_some() {
        aux.push('!');
    }
    let ext = table.extend([aux.clone()])?;
    let t_idx = ext.len() - 1;
    let order = ext_order(f.order(), t_idx);
    let lift = |g: &Polynomial| g.rename_into(ext.clone(), order.clone()).expect("lift");
    let mut ext_gens: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| lift(g))
        .collect();
    let one = Polynomial::one(ext.clone(), order.clone());
    let t = Polynomial::var(ext.clone(), order.clone(), t_idx);
    ext_gens.push(one.sub(&t.mul(&lift(f))?)?);
    let elim = eliminate(&ext_gens, &[t_idx], budget)?;
    let back: Vec<Polynomial> = elim
        .gens
        .iter()
        .map(|g| g.rename_into(table.clone(), f.order().clone()).expect("t-free"))
        .collect();
    Ok(Ideal::new(back))
}

fn ext_order(base: &MonomialOrder, _new_var: usize) -> MonomialOrder {
    match base {
        MonomialOrder::Lex => MonomialOrder::Lex,
        MonomialOrder::DegRevLex => MonomialOrder::DegRevLex,
        MonomialOrder::Block { .. } => MonomialOrder::DegRevLex,
    }
}

/// Krull dimension of the quotient ring, computed combinatorially from the
/// leading-term ideal as the size of a maximal independent variable set.
/// The unit ideal reports -1.
pub fn dimension(gb: &GroebnerBasis) -> i64 {
    let nvars = gb.table().len();
    if gb.gens.iter().all(|g| g.is_zero()) {
        return nvars as i64;
    }
    if gb.is_unit_ideal() {
        return -1;
    }
    // Squarefree supports of the leading monomials.
    let mut supports: Vec<Vec<usize>> = gb
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial().unwrap().support().collect())
        .collect();
    supports.sort();
    supports.dedup();
    // Maximal independent set: largest S hitting no support entirely.
    // Equivalently nvars minus a minimum hitting set of the supports.
    let mut best_cover = nvars;
    let mut chosen: Vec<bool> = vec![false; nvars];
    fn search(
        supports: &[Vec<usize>],
        idx: usize,
        chosen: &mut Vec<bool>,
        used: usize,
        best: &mut usize,
    ) {
        if used >= *best {
            return;
        }
        let Some(sup) = supports
            .iter()
            .skip(idx)
            .position(|s| !s.iter().any(|&v| chosen[v]))
            .map(|p| p + idx)
        else {
            *best = used;
            return;
        };
        for &v in &supports[sup] {
            if !chosen[v] {
                chosen[v] = true;
                search(supports, sup + 1, chosen, used + 1, best);
                chosen[v] = false;
            }
        }
    }
    search(&supports, 0, &mut chosen, 0, &mut best_cover);
    (nvars - best_cover) as i64
}

/// Vector-space dimension of the quotient for a zero-dimensional basis: the
/// number of standard monomials, i.e. points counted with multiplicity.
pub fn zero_dim_degree(gb: &GroebnerBasis) -> Result<u64, GbError> {
    if dimension(gb) != 0 {
        return Err(GbError::NotZeroDimensional);
    }
    let table = gb.table();
    let nvars = table.len();
    let leads: Vec<&Monomial> = gb
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.leading_monomial().unwrap())
        .collect();
    // Zero-dimensionality gives a pure power bound for every variable.
    let mut bound = vec![0u16; nvars];
    for v in 0..nvars {
        let b = leads
            .iter()
            .filter(|m| m.support().all(|i| i == v))
            .map(|m| m.exp(v))
            .min();
        match b {
            Some(b) => bound[v] = b,
            None => return Err(GbError::NotZeroDimensional),
        }
    }
    let mut count = 0u64;
    let mut exps = vec![0u16; nvars];
    fn enumerate(
        v: usize,
        exps: &mut Vec<u16>,
        bound: &[u16],
        leads: &[&Monomial],
        count: &mut u64,
    ) {
        if v == exps.len() {
            let divisible = leads.iter().any(|m| {
                m.support().all(|i| m.exp(i) <= exps[i])
            });
            if !divisible {
                *count += 1;
            }
            return;
        }
        for e in 0..bound[v] {
            exps[v] = e;
            enumerate(v + 1, exps, bound, leads, count);
        }
        exps[v] = 0;
    }
    enumerate(0, &mut exps, &bound, &leads, &mut count);
    Ok(count)
}

/// Serializes an ideal plus its order descriptor.
pub fn ideal_to_json(ideal: &Ideal, order: &MonomialOrder) -> serde_json::Value {
    let polys: Vec<_> = ideal.gens.iter().map(|g| g.to_json()).collect();
    let order_json = match order {
        MonomialOrder::Lex => serde_json::json!({"kind": "lex"}),
        MonomialOrder::DegRevLex => serde_json::json!({"kind": "degrevlex"}),
        MonomialOrder::Block { elim, inner } => {
            let table = ideal.table();
            let names: Vec<String> = elim
                .iter()
                .enumerate()
                .filter(|(_, e)| **e)
                .map(|(i, _)| {
                    table
                        .map(|t| t.name(i).to_string())
                        .unwrap_or_else(|| format!("#{i}"))
                })
                .collect();
            serde_json::json!({
                "kind": "block",
                "elim": names,
                "inner": match inner { InnerOrder::Lex => "lex", InnerOrder::DegRevLex => "degrevlex" },
            })
        }
    };
    serde_json::json!({
        "order": order_json,
        "generators": serde_json::to_value(polys).expect("serializable"),
    })
}

/// Convenience: substitutes linear generators away. Repeatedly picks a
/// generator that is linear in the allowed variables, solves it for its
/// leading allowed variable and substitutes everywhere. Returns the reduced
/// generator list and the substitution that was applied.
pub fn presolve_linear(
    gens: &[Polynomial],
    allowed: &[bool],
) -> Result<(Vec<Polynomial>, BTreeMap<usize, Polynomial>), GbError> {
    let mut work: Vec<Polynomial> = gens.to_vec();
    let mut solved: BTreeMap<usize, Polynomial> = BTreeMap::new();
    loop {
        let mut found: Option<(usize, usize)> = None;
        'scan: for (gi, g) in work.iter().enumerate() {
            if g.is_zero() || g.degree() != 1 || !g.is_homogeneous() {
                continue;
            }
            for (m, _) in g.terms() {
                let v = m.support().next().expect("degree-one term");
                if allowed[v] && !solved.contains_key(&v) {
                    found = Some((gi, v));
                    break 'scan;
                }
            }
        }
        let Some((gi, v)) = found else {
            break;
        };
        let g = work.remove(gi);
        let coeff = g.coefficient(&Monomial::var(g.table().len(), v, 1));
        debug_assert!(!coeff.is_zero());
        let var_poly = Polynomial::var(g.table().clone(), g.order().clone(), v);
        // v = v - g / coeff
        let image = var_poly.sub(&g.scale(&coeff.recip().expect("nonzero")))?;
        let mut step = BTreeMap::new();
        step.insert(v, image.clone());
        for (_, img) in solved.iter_mut() {
            *img = img.substitute_partial(&step)?;
        }
        solved.insert(v, image);
        for h in work.iter_mut() {
            *h = h.substitute_partial(&step)?;
        }
        work.retain(|h| !h.is_zero());
    }
    Ok((work, solved))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn ring2() -> (Arc<VarTable>, MonomialOrder) {
        (VarTable::new(["x", "y"]).unwrap(), MonomialOrder::Lex)
    }

    fn parse(t: &Arc<VarTable>, o: &MonomialOrder, s: &str) -> Polynomial {
        Polynomial::parse(t.clone(), o.clone(), s).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let (t, o) = ring2();
        let x = parse(&t, &o, "x");
        let gb = buchberger(&[x.clone()], &o, &Budget::default()).unwrap();
        assert_eq!(gb.gens().len(), 1);
        assert_eq!(gb.gens()[0], x);
    }

    #[test]
    fn lex_basis_of_xy_minus_one_and_y2_minus_one() {
        // {xy - 1, y^2 - 1} under lex(x > y) has reduced basis {x - y, y^2 - 1}.
        let (t, o) = ring2();
        let gens = [parse(&t, &o, "x*y - 1"), parse(&t, &o, "y^2 - 1")];
        let gb = buchberger(&gens, &o, &Budget::default()).unwrap();
        let strings: Vec<String> = gb.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(strings, vec!["y^2 - 1".to_string(), "x - y".to_string()]);
    }

    #[test]
    fn buchberger_criterion_holds() {
        let (t, o) = ring2();
        let gens = [parse(&t, &o, "x^2*y - 1"), parse(&t, &o, "x*y^2 - x")];
        let gb = buchberger(&gens, &o, &Budget::default()).unwrap();
        for i in 0..gb.gens().len() {
            for j in i + 1..gb.gens().len() {
                let s = s_polynomial(&gb.gens()[i], &gb.gens()[j]).unwrap();
                assert!(normal_form(&s, &gb).is_zero());
            }
        }
    }

    #[test]
    fn normal_form_basics() {
        let (t, o) = ring2();
        let gens = [parse(&t, &o, "x - y")];
        let gb = buchberger(&gens, &o, &Budget::default()).unwrap();
        // member of the ideal
        assert!(normal_form(&parse(&t, &o, "3*x - 3*y"), &gb).is_zero());
        // coprime constant is untouched
        let c = parse(&t, &o, "5");
        assert_eq!(normal_form(&c, &gb), c);
        // linearity: nf(f - nf(f)) = 0
        let f = parse(&t, &o, "x^2 + x*y + 2");
        let nf = normal_form(&f, &gb);
        assert!(normal_form(&f.sub(&nf).unwrap(), &gb).is_zero());
    }

    #[test]
    fn eliminate_examples() {
        let (t, o) = ring2();
        // eliminate y from {y - x^2} -> zero ideal
        let gens = [parse(&t, &o, "y - x^2")];
        let elim = eliminate(&gens, &[1], &Budget::default()).unwrap();
        assert!(elim.gens.is_empty());
        // eliminate t from {t x - 1, y - t} -> {x y - 1}
        let t3 = VarTable::new(["t", "x", "y"]).unwrap();
        let o3 = MonomialOrder::DegRevLex;
        let gens = [
            parse(&t3, &o3, "t*x - 1"),
            parse(&t3, &o3, "y - t"),
        ];
        let elim = eliminate(&gens, &[0], &Budget::default()).unwrap();
        assert_eq!(elim.gens.len(), 1);
        let expect = parse(&t3, &o3, "x*y - 1");
        assert!(elim.gens[0].equal_up_to_scalar(&expect).is_some());
    }

    #[test]
    fn saturation_examples() {
        let (t, _) = ring2();
        let o = MonomialOrder::DegRevLex;
        // (x y) : x^inf = (y)
        let gens = [parse(&t, &o, "x*y")];
        let x = parse(&t, &o, "x");
        let sat = saturate(&gens, &x, &Budget::default()).unwrap();
        let gb = buchberger(&sat.gens, &o, &Budget::default()).unwrap();
        assert_eq!(gb.gens().len(), 1);
        assert_eq!(gb.gens()[0], parse(&t, &o, "y"));
        // (x^2) : x^inf = (1)
        let gens = [parse(&t, &o, "x^2")];
        let sat = saturate(&gens, &x, &Budget::default()).unwrap();
        let gb = buchberger(&sat.gens, &o, &Budget::default()).unwrap();
        assert!(gb.is_unit_ideal());
        // homogeneous fast path and Rabinowitsch agree
        let gens = [parse(&t, &o, "x^2*y - x*y^2")];
        let fast = saturate(&gens, &x, &Budget::default()).unwrap();
        let slow = saturate_rabinowitsch(&gens, &x, &Budget::default()).unwrap();
        let gb_fast = buchberger(&fast.gens, &o, &Budget::default()).unwrap();
        let gb_slow = buchberger(&slow.gens, &o, &Budget::default()).unwrap();
        let f: Vec<String> = gb_fast.gens().iter().map(|g| g.to_string()).collect();
        let s: Vec<String> = gb_slow.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(f, s);
    }

    #[test]
    fn saturation_is_idempotent_and_contains_ideal() {
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::DegRevLex;
        let gens = [
            parse(&t, &o, "x*y - z^2"),
            parse(&t, &o, "x^2*z"),
        ];
        let f = parse(&t, &o, "z");
        let s1 = saturate(&gens, &f, &Budget::default()).unwrap();
        let s2 = saturate(&s1.gens, &f, &Budget::default()).unwrap();
        let gb1 = buchberger(&s1.gens, &o, &Budget::default()).unwrap();
        let gb2 = buchberger(&s2.gens, &o, &Budget::default()).unwrap();
        let a: Vec<String> = gb1.gens().iter().map(|g| g.to_string()).collect();
        let b: Vec<String> = gb2.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(a, b);
        // I ⊆ (I : f^inf): every original generator reduces to zero.
        for g in &gens {
            assert!(normal_form(g, &gb1).is_zero());
        }
    }

    #[test]
    fn dimension_examples() {
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::DegRevLex;
        // zero ideal in 3 vars -> 3
        let gb = buchberger(&[Polynomial::zero(t.clone(), o.clone())], &o, &Budget::default())
            .unwrap();
        assert_eq!(dimension(&gb), 3);
        // {x, y, z} -> 0
        let gens = [
            parse(&t, &o, "x"),
            parse(&t, &o, "y"),
            parse(&t, &o, "z"),
        ];
        let gb = buchberger(&gens, &o, &Budget::default()).unwrap();
        assert_eq!(dimension(&gb), 0);
        // {x} -> 2
        let gb = buchberger(&[parse(&t, &o, "x")], &o, &Budget::default()).unwrap();
        assert_eq!(dimension(&gb), 2);
    }

    #[test]
    fn zero_dim_degree_examples() {
        let (t, _) = ring2();
        let o = MonomialOrder::DegRevLex;
        // {x^2, y}: multiplicity 2
        let gb = buchberger(
            &[parse(&t, &o, "x^2"), parse(&t, &o, "y")],
            &o,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(zero_dim_degree(&gb).unwrap(), 2);
        // {x^2 - 1, y - x}: two reduced points
        let gb = buchberger(
            &[parse(&t, &o, "x^2 - 1"), parse(&t, &o, "y - x")],
            &o,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(zero_dim_degree(&gb).unwrap(), 2);
        // one-dimensional input is rejected
        let gb = buchberger(&[parse(&t, &o, "x")], &o, &Budget::default()).unwrap();
        assert!(matches!(
            zero_dim_degree(&gb),
            Err(GbError::NotZeroDimensional)
        ));
    }

    #[test]
    fn budget_is_reported() {
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::Lex;
        let gens = [
            parse(&t, &o, "x^2*y - z^3"),
            parse(&t, &o, "y^2*z - x"),
            parse(&t, &o, "z^2*x - y"),
        ];
        let tiny = Budget {
            max_steps: 3,
            max_basis: 10_000,
        };
        assert!(matches!(
            buchberger(&gens, &o, &tiny),
            Err(GbError::Budget(_))
        ));
    }

    #[test]
    fn determinism_across_runs() {
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::DegRevLex;
        let gens = [
            parse(&t, &o, "x^2 + y*z - 1"),
            parse(&t, &o, "x*z - y^2"),
            parse(&t, &o, "y^3 - x*z^2 + z"),
        ];
        let a = buchberger(&gens, &o, &Budget::default()).unwrap();
        let b = buchberger(&gens, &o, &Budget::default()).unwrap();
        let fmt = |gb: &GroebnerBasis| {
            gb.gens()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(fmt(&a), fmt(&b));
    }

    #[test]
    fn presolve_substitutes_linear_generators() {
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let o = MonomialOrder::DegRevLex;
        let gens = [parse(&t, &o, "x + 2*y"), parse(&t, &o, "x*z - y^2")];
        let allowed = vec![true, true, true];
        let (reduced, solved) = presolve_linear(&gens, &allowed).unwrap();
        assert_eq!(solved.len(), 1);
        assert_eq!(reduced.len(), 1);
        // substituting x -> -2y turns x z - y^2 into -2 y z - y^2
        let mut map = BTreeMap::new();
        map.insert(0usize, parse(&t, &o, "-2*y"));
        let expect = gens[1].substitute_partial(&map).unwrap();
        assert_eq!(reduced[0], expect);
    }
}
