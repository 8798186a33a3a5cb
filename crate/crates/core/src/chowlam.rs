//! Chow-Lam and Hurwitz-Lam forms: the Gröbner elimination pipeline, the
//! determinantal fast paths, and the intersection / projection / join
//! substitution formulas.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grassmann::{
    self, maximal_minors_poly, maximal_minors_rational, parse_plucker_var, plucker_relations,
    plucker_table, plucker_var_name, subsets, CoordKind, GrassmannError, IndexSet, PluckerVector,
    SubstitutionMap, TwistorEmission,
};
use crate::groebner::{self, Budget, GbError, GroebnerBasis};
use crate::matrix::{self, MatrixError};
use crate::poly::{MonomialOrder, PolyError, Polynomial, VarTable};
use crate::rational::Rational;
use crate::schubert::{self, Partition, SchubertError};

#[derive(Debug, Error)]
pub enum ChowLamError {
    #[error("declared dimension {declared} does not match the computed dimension {got}")]
    DimensionMismatch { declared: i64, got: i64 },
    #[error("invalid variety specification: {0}")]
    BadSpec(String),
    #[error("the input matrix has the wrong shape")]
    Shape,
    #[error("unsupported parameter s = {0}; only 4 and 5 are implemented")]
    UnsupportedS(usize),
    #[error("degenerate kernel: expected dimension {expected}, got {got}")]
    KernelDimension { expected: usize, got: usize },
    #[error("basis change retries exhausted")]
    RetriesExhausted,
    #[error("a form was demanded but the variety is degenerate")]
    Degenerate,
    #[error("coordinate kind mismatch")]
    CoordKind,
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Schubert(#[from] SchubertError),
}

/// How a subvariety of Gr(k,n) is handed to the pipeline.
#[derive(Debug, Clone)]
pub enum Presentation {
    /// Rank-k positroid given by the blocks of a partition of n.
    Positroid(Partition),
    /// Schubert variety: all dual Plücker coordinates q_J with J not
    /// dominating the index set vanish.
    Schubert(IndexSet),
    /// Explicit generators in the dual Plücker variables `q[...]`.
    Generators(Vec<Polynomial>),
    /// Rows of a matrix over a parameter ring whose maximal minors
    /// parametrize the Chow-Lam locus directly.
    Parametrized(Vec<Vec<Polynomial>>),
}

/// A subvariety of Gr(k,n) of dimension k(r-k)-1 together with the integer
/// r that fixes the ambient Grassmannian Gr(k+n-r, n) of its Chow-Lam locus.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    pub k: usize,
    pub n: usize,
    pub r: usize,
    pub presentation: Presentation,
}

impl VarietySpec {
    pub fn positroid(beta: Partition, k: usize) -> Result<Self, ChowLamError> {
        let n = beta.n();
        let t = beta.num_parts();
        if (n + t) % 2 == 0 && k == 2 {
            return Err(ChowLamError::BadSpec(format!(
                "partition {beta} has no valid r: n + t must be odd"
            )));
        }
        let r = if k == 2 {
            (n + t + 1) / 2
        } else {
            // dimension of the positroid variety is k(r-k)-1
            let dim = k * (n - k) - beta
                .parts()
                .iter()
                .map(|&p| p as usize - 1)
                .sum::<usize>()
                - beta.num_parts();
            // only used for rank-2 in practice; keep the generic fallback
            let _ = dim;
            return Err(ChowLamError::BadSpec(
                "only rank-2 positroids are constructed from partitions".into(),
            ));
        };
        Ok(VarietySpec {
            k,
            n,
            r,
            presentation: Presentation::Positroid(beta),
        })
    }

    pub fn declared_dim(&self) -> i64 {
        (self.k * (self.r - self.k)) as i64 - 1
    }

    /// The ambient Grassmannian Gr(m,n) of the Chow-Lam locus.
    pub fn ambient_m(&self) -> usize {
        self.k + self.n - self.r
    }
}

/// Coordinate system a form is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormCoords {
    Primal,
    Dual,
    Stiefel,
}

/// Result of a form computation: either the canonicalized defining
/// polynomial of a codimension-one Chow-Lam locus, or the reduced witness
/// generators of a degenerate (codimension >= 2) locus.
#[derive(Debug, Clone)]
pub enum FormOutcome {
    Form(Polynomial),
    Degenerate(Vec<Polynomial>),
}

#[derive(Debug, Clone)]
pub struct FormResult {
    pub outcome: FormOutcome,
    /// (m, n) of the ambient Gr(m,n).
    pub ambient: (usize, usize),
    pub coords: FormCoords,
    /// Degree of the form in Plücker coordinates (0 when degenerate).
    pub degree: u32,
    /// Verification report attached by the oracle, if any.
    pub verification: Option<serde_json::Value>,
}

impl FormResult {
    pub fn form(&self) -> Result<&Polynomial, ChowLamError> {
        match &self.outcome {
            FormOutcome::Form(f) => Ok(f),
            FormOutcome::Degenerate(_) => Err(ChowLamError::Degenerate),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.outcome, FormOutcome::Degenerate(_))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "ambient": [self.ambient.0, self.ambient.1],
            "coords": match self.coords {
                FormCoords::Primal => "primal",
                FormCoords::Dual => "dual",
                FormCoords::Stiefel => "stiefel",
            },
            "degree": self.degree,
        });
        match &self.outcome {
            FormOutcome::Form(f) => {
                obj["form"] = serde_json::to_value(f.to_json()).expect("serializable");
                obj["form_text"] = serde_json::Value::String(f.to_string());
            }
            FormOutcome::Degenerate(ws) => {
                obj["degenerate_witness"] = serde_json::Value::Array(
                    ws.iter()
                        .map(|w| serde_json::Value::String(w.to_string()))
                        .collect(),
                );
            }
        }
        if let Some(v) = &self.verification {
            obj["verification"] = v.clone();
        }
        obj
    }
}

// ---------------------------------------------------------------------------
// The elimination pipeline
// ---------------------------------------------------------------------------

/// Computes the Chow-Lam form of the given variety by saturation and
/// elimination.
///
/// The ideal of the incidence correspondence (variety generators, source
/// Plücker relations, and the bilinear containment system between dual
/// coordinates of Q and primal coordinates of P) is saturated with respect
/// to the q-variables and the q-block is eliminated. If the image has
/// codimension one modulo the ambient Plücker ideal, the minimal-degree
/// generator outside that ideal is extracted and canonicalized; otherwise
/// the reduced witness generators are reported.
pub fn chow_lam_eliminate(
    spec: &VarietySpec,
    budget: &Budget,
) -> Result<FormResult, ChowLamError> {
    if let Presentation::Parametrized(rows) = &spec.presentation {
        return eliminate_parametrized(spec, rows, budget);
    }
    let (k, n, m) = (spec.k, spec.n, spec.ambient_m());
    if !(k < m && m < n) {
        return Err(ChowLamError::BadSpec(format!(
            "need k < k+n-r < n, got k={k}, m={m}, n={n}"
        )));
    }
    let psize = n - m;
    let q_table = plucker_table("q", k, n);
    let order = MonomialOrder::DegRevLex;

    // Consistency of the declared dimension with the generators.
    let v_gens = spec.generators(&q_table, &order)?;
    let q_plucker = plucker_relations(k, n, "q", &q_table, &order)?;
    {
        let mut cone = v_gens.clone();
        cone.extend(q_plucker.iter().cloned());
        let gb = groebner::buchberger(&cone, &order, budget)?;
        let got = groebner::dimension(&gb);
        if got != spec.declared_dim() + 1 {
            return Err(ChowLamError::DimensionMismatch {
                declared: spec.declared_dim(),
                got: got - 1,
            });
        }
    }

    // Combined ring of q- and p-variables.
    let table = q_table.extend(plucker_table("p", psize, n).names().iter().cloned())?;
    let nq = q_table.len();
    let mut ideal: Vec<Polynomial> = Vec::new();
    for g in &v_gens {
        ideal.push(g.rename_into(table.clone(), order.clone())?);
    }
    for g in &q_plucker {
        ideal.push(g.rename_into(table.clone(), order.clone())?);
    }
    ideal.extend(grassmann::incidence_equations(
        k, n, m, "q", "p", &table, &order,
    )?);

    // Substitute away q-variables fixed by linear generators.
    let allowed: Vec<bool> = (0..table.len()).map(|i| i < nq).collect();
    let (mut work, solved) = groebner::presolve_linear(&ideal, &allowed)?;

    // Saturate with respect to the q-variables: sequentially by every
    // remaining q-variable that still occurs. The locus where the whole
    // q-vector vanishes lies inside each of these hyperplanes.
    let mut saturators: Vec<usize> = Vec::new();
    for qi in 0..nq {
        if solved.contains_key(&qi) {
            continue;
        }
        if work.iter().any(|g| g.terms().iter().any(|(mm, _)| mm.exp(qi) > 0)) {
            saturators.push(qi);
        }
    }
    for &qi in &saturators {
        let var = Polynomial::var(table.clone(), order.clone(), qi);
        let sat = groebner::saturate(&work, &var, budget)?;
        work = sat.gens;
    }

    // Eliminate the q-block.
    let q_indices: Vec<usize> = (0..nq).collect();
    let elim = groebner::eliminate(&work, &q_indices, budget)?;

    // Restrict to the p-ring and add the ambient Plücker relations.
    let p_table = plucker_table("p", psize, n);
    let elim_p: Vec<Polynomial> = elim
        .gens
        .iter()
        .map(|g| g.rename_into(p_table.clone(), order.clone()))
        .collect::<Result<_, _>>()?;
    extract_form(
        &elim_p,
        psize,
        n,
        "p",
        &p_table,
        &order,
        FormCoords::Primal,
        (m, n),
        budget,
    )
}

/// Implicitization route for a parametrized Chow-Lam locus: eliminates the
/// parameters from `q_J - minor_J(rows)`.
fn eliminate_parametrized(
    spec: &VarietySpec,
    rows: &[Vec<Polynomial>],
    budget: &Budget,
) -> Result<FormResult, ChowLamError> {
    let (n, m) = (spec.n, spec.ambient_m());
    if rows.len() != m || rows.iter().any(|r| r.len() != n) {
        return Err(ChowLamError::Shape);
    }
    let param_table = rows[0][0].table().clone();
    let order = MonomialOrder::DegRevLex;
    let q_names = plucker_table("q", m, n);
    let table = param_table.extend(q_names.names().iter().cloned())?;
    let lifted: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.rename_into(table.clone(), order.clone()))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let minors = maximal_minors_poly(&lifted, CoordKind::Dual)?;
    let mut gens = Vec::new();
    for s in subsets(n, m) {
        let var = Polynomial::var_named(table.clone(), order.clone(), &plucker_var_name("q", &s))?;
        gens.push(var.sub(&minors.get(&s))?);
    }
    let params: Vec<usize> = (0..param_table.len()).collect();
    let elim = groebner::eliminate(&gens, &params, budget)?;
    let q_table = plucker_table("q", m, n);
    let elim_q: Vec<Polynomial> = elim
        .gens
        .iter()
        .map(|g| g.rename_into(q_table.clone(), order.clone()))
        .collect::<Result<_, _>>()?;
    extract_form(
        &elim_q,
        m,
        n,
        "q",
        &q_table,
        &order,
        FormCoords::Dual,
        (m, n),
        budget,
    )
}

/// Shared extraction step: decides codimension one versus degenerate and
/// pulls out the canonical form.
#[allow(clippy::too_many_arguments)]
fn extract_form(
    elim_gens: &[Polynomial],
    coord_k: usize,
    n: usize,
    letter: &str,
    table: &Arc<VarTable>,
    order: &MonomialOrder,
    coords: FormCoords,
    ambient: (usize, usize),
    budget: &Budget,
) -> Result<FormResult, ChowLamError> {
    let ambient_plucker = plucker_relations(coord_k, n, letter, table, order)?;
    // Seed with a zero polynomial so the basis carries the table even when
    // there are no relations (projective-space ambients).
    let mut plucker_seed = vec![Polynomial::zero(table.clone(), order.clone())];
    plucker_seed.extend(ambient_plucker.iter().cloned());
    let plucker_gb = groebner::buchberger(&plucker_seed, order, budget)?;
    let dim_gr = groebner::dimension(&plucker_gb);
    let mut full = elim_gens.to_vec();
    full.push(Polynomial::zero(table.clone(), order.clone()));
    full.extend(ambient_plucker.iter().cloned());
    let gb = groebner::buchberger(&full, order, budget)?;
    let dim = groebner::dimension(&gb);
    let codim = dim_gr - dim;
    if codim <= 0 {
        return Err(ChowLamError::BadSpec(
            "elimination output is contained in the Plücker ideal".into(),
        ));
    }
    // Generators outside the ambient Plücker ideal, reduced and canonical.
    let mut candidates: Vec<Polynomial> = Vec::new();
    for g in gb.gens() {
        let nf = groebner::normal_form(g, &plucker_gb);
        if nf.is_zero() {
            continue;
        }
        let canon = nf.canonical_form();
        if !candidates.contains(&canon) {
            candidates.push(canon);
        }
    }
    candidates.sort_by(|a, b| {
        (a.degree(), a.num_terms())
            .cmp(&(b.degree(), b.num_terms()))
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    if codim == 1 {
        let form = candidates
            .first()
            .cloned()
            .ok_or_else(|| ChowLamError::BadSpec("codimension one but no generator found".into()))?;
        let degree = form.degree();
        Ok(FormResult {
            outcome: FormOutcome::Form(form),
            ambient,
            coords,
            degree,
            verification: None,
        })
    } else {
        Ok(FormResult {
            outcome: FormOutcome::Degenerate(candidates),
            ambient,
            coords,
            degree: 0,
            verification: None,
        })
    }
}

// ---------------------------------------------------------------------------
// Determinantal formulas
// ---------------------------------------------------------------------------

/// The 4x4 coefficient matrix of the rational normal quartic curve in the
/// primal Plücker variables of Gr(3,5), and its determinant: the Chow form
/// of the curve (1:t:t^2:t^3:t^4).
pub fn bezout_chow_rnc5() -> Result<Polynomial, ChowLamError> {
    let table = plucker_table("p", 2, 5);
    let order = MonomialOrder::DegRevLex;
    let p = |s: &str| Polynomial::parse(table.clone(), order.clone(), s).unwrap();
    let m = vec![
        vec![p("p[1,2]"), p("p[1,3]"), p("p[1,4]"), p("p[1,5]")],
        vec![
            p("p[1,3]"),
            p("p[1,4] + p[2,3]"),
            p("p[1,5] + p[2,4]"),
            p("p[2,5]"),
        ],
        vec![
            p("p[1,4]"),
            p("p[1,5] + p[2,4]"),
            p("p[2,5] + p[3,4]"),
            p("p[3,5]"),
        ],
        vec![p("p[1,5]"), p("p[2,5]"), p("p[3,5]"), p("p[4,5]")],
    ];
    Ok(matrix::det_poly(&m)?)
}

/// The same Chow form in primal Stiefel coordinates: substitute
/// `p[i,j] = a_i b_j - a_j b_i` into the determinant.
pub fn bezout_chow_rnc5_stiefel() -> Result<Polynomial, ChowLamError> {
    let form = bezout_chow_rnc5()?;
    let names: Vec<String> = (1..=5)
        .map(|i| format!("a[{i}]"))
        .chain((1..=5).map(|i| format!("b[{i}]")))
        .collect();
    let table = VarTable::new(names)?;
    let order = MonomialOrder::DegRevLex;
    let var = |s: String| Polynomial::var_named(table.clone(), order.clone(), &s).unwrap();
    let mut map = SubstitutionMap::new(table.clone(), order.clone());
    for s in subsets(5, 2) {
        let (i, j) = (s[0], s[1]);
        let img = var(format!("a[{i}]"))
            .mul(&var(format!("b[{j}]")))?
            .sub(&var(format!("a[{j}]")).mul(&var(format!("b[{i}]")))?)?;
        map.insert(plucker_var_name("p", &s), img);
    }
    Ok(map.apply(&form)?)
}

/// The Sylvester resultant of two binary quartics
/// `a_1 + a_2 t + ... + a_5 t^4` and `b_1 + ... + b_5 t^4` as the 8x8
/// determinant over the coefficient ring.
pub fn sylvester_resultant_quartics() -> Result<Polynomial, ChowLamError> {
    let names: Vec<String> = (1..=5)
        .map(|i| format!("a[{i}]"))
        .chain((1..=5).map(|i| format!("b[{i}]")))
        .collect();
    let table = VarTable::new(names)?;
    let order = MonomialOrder::DegRevLex;
    let zero = Polynomial::zero(table.clone(), order.clone());
    let var = |s: String| Polynomial::var_named(table.clone(), order.clone(), &s).unwrap();
    let mut m = vec![vec![zero.clone(); 8]; 8];
    for shift in 0..4 {
        for (col, i) in (1..=5).rev().enumerate() {
            m[shift][shift + col] = var(format!("a[{i}]"));
            m[4 + shift][shift + col] = var(format!("b[{i}]"));
        }
    }
    Ok(matrix::det_poly(&m)?)
}

/// The cubic Chow-Lam form of the rank-2 positroid (3,2,2,2) in Gr(2,9): the
/// 3x3 determinant of the intersection points of the plane 123 with the
/// lines 45, 67 and 89, expanded into standard dual Plücker monomials of
/// Gr(4,9).
pub fn positroid_3222_form() -> Result<Polynomial, ChowLamError> {
    let table = plucker_table("q", 4, 9);
    let order = MonomialOrder::DegRevLex;
    let q = |set: &[u16]| {
        Polynomial::var_named(table.clone(), order.clone(), &plucker_var_name("q", set)).unwrap()
    };
    let row = |c: u16, d: u16| {
        vec![
            q(&[2, 3, c, d]),
            q(&[1, 3, c, d]).neg(),
            q(&[1, 2, c, d]),
        ]
    };
    let m = vec![row(4, 5), row(6, 7), row(8, 9)];
    let det = matrix::det_poly(&m)?;
    Ok(grassmann::straighten(&det)?)
}

fn pair_order(s: usize) -> Vec<Vec<u16>> {
    subsets(s, 2)
}

/// Wedge matrix of consecutive column pairs: column i holds the Plücker
/// coordinates of `x_{2i-1} ∧ x_{2i}` in the sorted pair ordering.
pub fn wedge_pair_matrix(x: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, ChowLamError> {
    let s = x.len();
    let cols = if s == 0 { 0 } else { x[0].len() };
    if s == 0 || cols % 2 != 0 || x.iter().any(|r| r.len() != cols) {
        return Err(ChowLamError::Shape);
    }
    let pairs = pair_order(s);
    let t = cols / 2;
    let mut xt = vec![vec![Rational::zero(); t]; pairs.len()];
    for c in 0..t {
        let u: Vec<Rational> = (0..s).map(|i| x[i][2 * c].clone()).collect();
        let v: Vec<Rational> = (0..s).map(|i| x[i][2 * c + 1].clone()).collect();
        for (row, pair) in pairs.iter().enumerate() {
            let (a, b) = (pair[0] as usize - 1, pair[1] as usize - 1);
            xt[row][c] = &(&u[a] * &v[b]) - &(&u[b] * &v[a]);
        }
    }
    Ok(xt)
}

/// Hodge-dual pairing of two wedge vectors in the sorted pair ordering of
/// `Lambda^2 C^4`: `<u, v*> = sum_s sign(s, s^c) u_s v_{s^c}`, which equals
/// `det(x y z w)` when `u = x ∧ y` and `v = z ∧ w`.
pub fn plucker_pairing(u: &[Rational], v: &[Rational]) -> Rational {
    let pairs = pair_order(4);
    let mut total = Rational::zero();
    for (i, s) in pairs.iter().enumerate() {
        let comp: Vec<u16> = (1..=4u16).filter(|x| !s.contains(x)).collect();
        let j = pairs.iter().position(|p| *p == comp).expect("pair");
        let sign = grassmann::concat_sign(s, &comp);
        let term = &u[i] * &v[j];
        if sign > 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// The symmetric matrix `X~^T X~*` whose (i,j) entry is the maximal minor of
/// X on the columns {2i-1, 2i, 2j-1, 2j}.
pub fn gram_of_wedges(x: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, ChowLamError> {
    if x.len() != 4 {
        return Err(ChowLamError::Shape);
    }
    let xt = wedge_pair_matrix(x)?;
    let t = xt[0].len();
    let col = |c: usize| -> Vec<Rational> { (0..xt.len()).map(|r| xt[r][c].clone()).collect() };
    let mut g = vec![vec![Rational::zero(); t]; t];
    for i in 0..t {
        for j in 0..t {
            if i != j {
                g[i][j] = plucker_pairing(&col(i), &col(j));
            }
        }
    }
    Ok(g)
}

/// The five-lines form in symbolic dual Plücker variables of Gr(4,10): the
/// 5x5 determinant of the zero-diagonal symmetric matrix with entries
/// `q[2i-1, 2i, 2j-1, 2j]`.
pub fn five_lines_form_symbolic() -> Result<Polynomial, ChowLamError> {
    let table = plucker_table("q", 4, 10);
    let order = MonomialOrder::DegRevLex;
    let zero = Polynomial::zero(table.clone(), order.clone());
    let mut m = vec![vec![zero; 5]; 5];
    for i in 0..5u16 {
        for j in 0..5u16 {
            if i == j {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            let set = [2 * a + 1, 2 * a + 2, 2 * b + 1, 2 * b + 2];
            m[i as usize][j as usize] = Polynomial::var_named(
                table.clone(),
                order.clone(),
                &plucker_var_name("q", &set),
            )?;
        }
    }
    Ok(matrix::det_poly(&m)?)
}

/// Evaluates the five-lines form at a rational 4x10 matrix.
pub fn five_lines_value(x: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    if x.len() != 4 || x.iter().any(|r| r.len() != 10) {
        return Err(ChowLamError::Shape);
    }
    let g = gram_of_wedges(x)?;
    Ok(matrix::det_rational(&g)?)
}

/// The Hurwitz-Lam form of the rank-2 positroid (2,2,2,2) in Gr(2,8): the
/// 4x4 determinant of the zero-diagonal symmetric matrix in the six
/// variables `q[1,2,3,4] ... q[5,6,7,8]`.
pub fn hurwitz_lam_g28_symbolic(letter: &str) -> Result<Polynomial, ChowLamError> {
    let table = plucker_table(letter, 4, 8);
    let order = MonomialOrder::DegRevLex;
    let zero = Polynomial::zero(table.clone(), order.clone());
    let mut m = vec![vec![zero; 4]; 4];
    for i in 0..4u16 {
        for j in 0..4u16 {
            if i == j {
                continue;
            }
            let (a, b) = (i.min(j), i.max(j));
            let set = [2 * a + 1, 2 * a + 2, 2 * b + 1, 2 * b + 2];
            m[i as usize][j as usize] = Polynomial::var_named(
                table.clone(),
                order.clone(),
                &plucker_var_name(letter, &set),
            )?;
        }
    }
    Ok(matrix::det_poly(&m)?)
}

/// Evaluates the Hurwitz-Lam form of Gr(2,8) at a rational 4x8 matrix.
pub fn hurwitz_lam_g28_value(x: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    if x.len() != 4 || x.iter().any(|r| r.len() != 8) {
        return Err(ChowLamError::Shape);
    }
    let g = gram_of_wedges(x)?;
    Ok(matrix::det_rational(&g)?)
}

/// The quadratic Hurwitz form of Gr(2,4) evaluated at the dual Plücker
/// coordinates of a line in the Plücker P^5:
/// `sum_{i<j} (-1)^(occurrences of 2 or 5 in (i,j)) L_{ij} L_{7-j,7-i}`.
pub fn hurwitz_form_g24(l: &PluckerVector<Rational>) -> Result<Rational, ChowLamError> {
    if l.k != 2 || l.n != 6 {
        return Err(ChowLamError::Shape);
    }
    let mut total = Rational::zero();
    for s in subsets(6, 2) {
        let (i, j) = (s[0], s[1]);
        let occ = [i, j].iter().filter(|&&x| x == 2 || x == 5).count();
        let term = &l.get(&[i, j]) * &l.get(&[7 - j, 7 - i]);
        if occ % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// Chow-Lam form of the all-twos positroid on n = 2(2s-3) points, evaluated
/// at the columns of an s x n rational matrix by pairing the Chow form of
/// Gr(2,s) with the wedge columns. Implemented for s = 4 and s = 5.
pub fn catalan_chow_lam(s: usize, x: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    let t = 2 * s - 3;
    if x.len() != s || x.iter().any(|r| r.len() != 2 * t) {
        return Err(ChowLamError::Shape);
    }
    let xt = wedge_pair_matrix(x)?;
    let hyperplanes: Vec<Vec<Rational>> = (0..t)
        .map(|c| (0..xt.len()).map(|r| xt[r][c].clone()).collect())
        .collect();
    chow_form_g2s(s, &hyperplanes)
}

/// Chow form of Gr(2,s) evaluated at 2s-3 hyperplanes in its Plücker space,
/// each given by its coefficient vector in the sorted pair ordering.
pub fn chow_form_g2s(s: usize, hyperplanes: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    let t = 2 * s - 3;
    let dim = s * (s - 1) / 2;
    if hyperplanes.len() != t || hyperplanes.iter().any(|h| h.len() != dim) {
        return Err(ChowLamError::Shape);
    }
    match s {
        4 => {
            // Coordinates of the kernel point of the hyperplane stack as the
            // plain 5x5 minors (the alternating-sign twist of the kernel
            // vector only flips the quadric's sign), then the Plücker
            // quadric.
            let stack: Vec<Vec<Rational>> = hyperplanes.to_vec();
            let mut w = vec![Rational::zero(); 6];
            for (j, slot) in w.iter_mut().enumerate() {
                let sub: Vec<Vec<Rational>> = stack
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                *slot = matrix::det_rational(&sub)?;
            }
            // pairs order (12,13,14,23,24,34): q = w1 w6 - w2 w5 + w3 w4
            Ok(&(&w[0] * &w[5]) - &(&w[1] * &w[4]) + (&w[2] * &w[3]))
        }
        5 => chow_form_g25(hyperplanes),
        _ => Err(ChowLamError::UnsupportedS(s)),
    }
}

/// Chow form of Gr(2,5) at 7 hyperplanes: restrict the five Plücker quadrics
/// to the kernel plane spanned by three skew matrices U, V, W, add the
/// z-derivative of the Jacobian determinant of the first three, and take the
/// 6x6 coefficient determinant divided by w_45.
fn chow_form_g25(hyperplanes: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    let kernel = matrix::right_kernel(hyperplanes);
    if kernel.len() != 3 {
        return Err(ChowLamError::KernelDimension {
            expected: 3,
            got: kernel.len(),
        });
    }
    // Deterministic retries with small basis changes to avoid w[4,5] = 0.
    for attempt in 0..8u64 {
        let basis: Vec<Vec<Rational>> = if attempt == 0 {
            kernel.clone()
        } else {
            let mut mixed = Vec::with_capacity(3);
            for i in 0..3 {
                let mut row = vec![Rational::zero(); 10];
                for (j, kvec) in kernel.iter().enumerate() {
                    let c = Rational::from_int(1 + ((attempt + i as u64 + j as u64) % 7) as i64);
                    for (t, x) in kvec.iter().enumerate() {
                        row[t] += &(&c * x);
                    }
                }
                mixed.push(row);
            }
            if matrix::rank(&mixed) < 3 {
                continue;
            }
            mixed
        };
        match chow_form_g25_at_basis(&basis) {
            Ok(v) => return Ok(v),
            Err(ChowLamError::RetriesExhausted) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(ChowLamError::RetriesExhausted)
}

fn chow_form_g25_at_basis(basis: &[Vec<Rational>]) -> Result<Rational, ChowLamError> {
    let pairs = pair_order(5);
    let w45_pos = pairs.iter().position(|p| p == &[4u16, 5u16]).expect("pair 45");
    let w45 = basis[2][w45_pos].clone();
    if w45.is_zero() {
        return Err(ChowLamError::RetriesExhausted);
    }
    // P = x U + y V + z W restricted into the five quadrics
    // f_i = p_{jk} p_{lm} - p_{jl} p_{km} + p_{jm} p_{kl}, {j,k,l,m} = [5] \ {i}.
    let table = VarTable::new(["x", "y", "z"])?;
    let order = MonomialOrder::DegRevLex;
    let coord = |pair: &[u16]| -> Polynomial {
        let pos = pairs.iter().position(|p| p == pair).expect("sorted pair");
        let mut acc = Polynomial::zero(table.clone(), order.clone());
        for (v, row) in basis.iter().enumerate() {
            let var = Polynomial::var(table.clone(), order.clone(), v);
            acc = acc.add(&var.scale(&row[pos])).expect("ring");
        }
        acc
    };
    let mut quadrics: Vec<Polynomial> = Vec::with_capacity(6);
    for i in 1..=5u16 {
        let rest: Vec<u16> = (1..=5u16).filter(|&x| x != i).collect();
        let (j, k, l, m) = (rest[0], rest[1], rest[2], rest[3]);
        let f = coord(&[j, k])
            .mul(&coord(&[l, m]))?
            .sub(&coord(&[j, l]).mul(&coord(&[k, m]))?)?
            .add(&coord(&[j, m]).mul(&coord(&[k, l]))?)?;
        quadrics.push(f);
    }
    // f6 = d/dz of det Jacobian(f1, f2, f3).
    let jac: Vec<Vec<Polynomial>> = (0..3)
        .map(|fi| (0..3).map(|v| partial(&quadrics[fi], v)).collect())
        .collect();
    let jac_det = matrix::det_poly(&jac)?;
    quadrics.push(partial(&jac_det, 2));
    // 6x6 coefficient matrix in the basis x^2, xy, xz, y^2, yz, z^2.
    let monos: Vec<crate::poly::Monomial> = [
        [2u16, 0, 0],
        [1, 1, 0],
        [1, 0, 1],
        [0, 2, 0],
        [0, 1, 1],
        [0, 0, 2],
    ]
    .iter()
    .map(|e| crate::poly::Monomial::from_exps(e.to_vec()))
    .collect();
    let coeffs: Vec<Vec<Rational>> = quadrics
        .iter()
        .map(|f| monos.iter().map(|m| f.coefficient(m)).collect())
        .collect();
    let det = matrix::det_rational(&coeffs)?;
    Ok(&det / &w45)
}

/// Partial derivative of a polynomial with respect to variable `v`.
fn partial(f: &Polynomial, v: usize) -> Polynomial {
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        let mut exps = m.exps().to_vec();
        exps[v] -= 1;
        terms.push((
            crate::poly::Monomial::from_exps(exps),
            c * &Rational::from_int(e as i64),
        ));
    }
    Polynomial::from_terms(f.table().clone(), f.order().clone(), terms)
}

/// Substitutes the signed complement for every Plücker variable:
/// `p_I -> sign(I, I^c) p_{I^c}`.
pub fn duality_substitution(f: &Polynomial) -> Result<Polynomial, ChowLamError> {
    let table = f.table().clone();
    let order = f.order().clone();
    let mut map: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (m, _) in f.terms() {
        for i in m.support() {
            if map.contains_key(&i) {
                continue;
            }
            let name = table.name(i);
            let (letter, set) = parse_plucker_var(name)
                .ok_or_else(|| GrassmannError::BadVariable(name.to_string()))?;
            let n = table
                .names()
                .iter()
                .filter_map(|nm| parse_plucker_var(nm))
                .flat_map(|(_, s)| s)
                .max()
                .unwrap_or(0) as usize;
            let idx = IndexSet::new(set.clone(), n)?;
            let comp = idx.complement();
            let sign = grassmann::concat_sign(idx.entries(), comp.entries());
            let var = Polynomial::var_named(
                table.clone(),
                order.clone(),
                &plucker_var_name(&letter, comp.entries()),
            )?;
            map.insert(
                i,
                if sign > 0 { var } else { var.neg() },
            );
        }
    }
    Ok(f.substitute(&map)?)
}

// ---------------------------------------------------------------------------
// Projection, intersection, join
// ---------------------------------------------------------------------------

/// Projects a form written in primal Plücker variables through the matrix Z
/// by twistor substitution.
pub fn project_form(
    form: &FormResult,
    z: &[Vec<Rational>],
    emission: TwistorEmission,
) -> Result<Polynomial, ChowLamError> {
    if form.coords != FormCoords::Primal && form.coords != FormCoords::Dual {
        return Err(ChowLamError::CoordKind);
    }
    let f = form.form()?;
    project_polynomial(f, z, emission)
}

/// Twistor substitution on a bare polynomial in Plücker variables; the
/// subset size is read off the variables.
pub fn project_polynomial(
    f: &Polynomial,
    z: &[Vec<Rational>],
    emission: TwistorEmission,
) -> Result<Polynomial, ChowLamError> {
    let (letter, subset_size) = form_letter_and_size(f)?;
    let map = grassmann::twistor_map(z, subset_size, &letter, "y", emission)?;
    Ok(map.apply(f)?)
}

fn form_letter_and_size(f: &Polynomial) -> Result<(String, usize), ChowLamError> {
    let table = f.table();
    for (m, _) in f.terms() {
        if let Some(i) = m.support().next() {
            let name = table.name(i);
            let (letter, set) = parse_plucker_var(name)
                .ok_or_else(|| GrassmannError::BadVariable(name.to_string()))?;
            return Ok((letter, set.len()));
        }
    }
    Err(ChowLamError::BadSpec("constant form".into()))
}

/// Intersection substitution: rewrites a form on Gr(m,n) in primal
/// variables as a form in the primal variables of a smaller space by
/// substituting `p_S -> (l ∧ m)_S` for a fixed subspace L given by its
/// primal coordinate vector.
pub fn intersect_form(
    form: &Polynomial,
    l: &PluckerVector<Rational>,
    m_letter: &str,
) -> Result<Polynomial, ChowLamError> {
    let (_, psize) = form_letter_and_size(form)?;
    if l.kind != CoordKind::Primal {
        return Err(ChowLamError::CoordKind);
    }
    if l.k >= psize {
        return Err(ChowLamError::BadSpec(
            "codimension of L must be smaller than the form's coordinate size".into(),
        ));
    }
    let m_size = psize - l.k;
    let n = l.n;
    let target = plucker_table(m_letter, m_size, n);
    let order = MonomialOrder::DegRevLex;
    // lift l to a polynomial vector and wedge with the symbolic m-vector
    let proto = Polynomial::zero(target.clone(), order.clone());
    let mut l_poly = PluckerVector::new(l.k, n, CoordKind::Primal, proto.clone());
    for (set, v) in l.iter() {
        l_poly.set(set, Polynomial::constant(target.clone(), order.clone(), v.clone()));
    }
    let m_sym =
        grassmann::symbolic_plucker_vector(m_letter, m_size, n, CoordKind::Primal, &target, &order)?;
    let wedge = l_poly.wedge(&m_sym)?;
    let table = form.table().clone();
    let images: BTreeMap<usize, Polynomial> = {
        let mut map = BTreeMap::new();
        for (mm, _) in form.terms() {
            for i in mm.support() {
                if map.contains_key(&i) {
                    continue;
                }
                let (_, set) = parse_plucker_var(table.name(i))
                    .ok_or_else(|| GrassmannError::BadVariable(table.name(i).to_string()))?;
                map.insert(i, wedge.get(&set));
            }
        }
        map
    };
    Ok(form.substitute_into(target, order, &|i| images.get(&i).cloned())?)
}

/// Join substitution: rewrites a form on Gr(m,n) in primal variables as a
/// form in the dual variables of M by substituting the coordinates of L + M,
/// i.e. `p_S -> sign * (l ∧ w)_{S^c}` with `l` the dual coordinates of L.
pub fn join_form(
    form: &Polynomial,
    l: &PluckerVector<Rational>,
    m_letter: &str,
) -> Result<Polynomial, ChowLamError> {
    let (_, psize) = form_letter_and_size(form)?;
    if l.kind != CoordKind::Dual {
        return Err(ChowLamError::CoordKind);
    }
    let n = l.n;
    let m_dim = n - psize; // dimension of the ambient subspace P
    if l.k > m_dim {
        return Err(ChowLamError::BadSpec("L too large for the ambient space".into()));
    }
    let w_size = m_dim - l.k;
    let target = plucker_table(m_letter, w_size, n);
    let order = MonomialOrder::DegRevLex;
    let proto = Polynomial::zero(target.clone(), order.clone());
    let mut l_poly = PluckerVector::new(l.k, n, CoordKind::Dual, proto.clone());
    for (set, v) in l.iter() {
        l_poly.set(set, Polynomial::constant(target.clone(), order.clone(), v.clone()));
    }
    let w_sym =
        grassmann::symbolic_plucker_vector(m_letter, w_size, n, CoordKind::Dual, &target, &order)?;
    let wedge = l_poly.wedge(&w_sym)?;
    let table = form.table().clone();
    let images: BTreeMap<usize, Polynomial> = {
        let mut map = BTreeMap::new();
        for (mm, _) in form.terms() {
            for i in mm.support() {
                if map.contains_key(&i) {
                    continue;
                }
                let (_, set) = parse_plucker_var(table.name(i))
                    .ok_or_else(|| GrassmannError::BadVariable(table.name(i).to_string()))?;
                let idx = IndexSet::new(set.clone(), n)?;
                let comp = idx.complement();
                let sign = grassmann::concat_sign(comp.entries(), idx.entries());
                let img = wedge.get(comp.entries());
                map.insert(i, if sign > 0 { img } else { img.neg() });
            }
        }
        map
    };
    Ok(form.substitute_into(target, order, &|i| images.get(&i).cloned())?)
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

/// Report of the triple-product identity for the second-order Chow-Lam
/// locus of the positroid (2,2,2): at a 4x6 matrix X the product of the
/// three wedge pairings equals the product of the three complementary
/// 4x4 determinants.
#[derive(Debug, Clone, Serialize)]
pub struct TripleProductReport {
    pub samples: usize,
    pub mismatches: usize,
    pub degenerate_checked: bool,
}

pub fn higher_cl_222_identity_check(
    x: &[Vec<Rational>],
) -> Result<(Rational, Rational), ChowLamError> {
    if x.len() != 4 || x.iter().any(|r| r.len() != 6) {
        return Err(ChowLamError::Shape);
    }
    let xt = wedge_pair_matrix(x)?;
    let col = |c: usize| -> Vec<Rational> { (0..xt.len()).map(|r| xt[r][c].clone()).collect() };
    let pairing_side = &(&plucker_pairing(&col(0), &col(1)) * &plucker_pairing(&col(0), &col(2)))
        * &plucker_pairing(&col(1), &col(2));
    let det_of = |cols: [usize; 4]| -> Result<Rational, ChowLamError> {
        let m: Vec<Vec<Rational>> = (0..4)
            .map(|r| cols.iter().map(|&c| x[r][c].clone()).collect())
            .collect();
        Ok(matrix::det_rational(&m)?)
    };
    let det_side = &(&det_of([0, 1, 2, 3])? * &det_of([0, 1, 4, 5])?) * &det_of([2, 3, 4, 5])?;
    Ok((pairing_side, det_side))
}

// ---------------------------------------------------------------------------
// Spec serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SpecJson {
    k: usize,
    n: usize,
    r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    positroid: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    schubert: Option<Vec<u16>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<crate::poly::PolynomialJson>>,
}

impl VarietySpec {
    pub fn to_json(&self) -> serde_json::Value {
        let mut j = SpecJson {
            k: self.k,
            n: self.n,
            r: self.r,
            positroid: None,
            schubert: None,
            generators: None,
        };
        match &self.presentation {
            Presentation::Positroid(beta) => j.positroid = Some(beta.parts().to_vec()),
            Presentation::Schubert(idx) => j.schubert = Some(idx.entries().to_vec()),
            Presentation::Generators(gens) => {
                j.generators = Some(gens.iter().map(|g| g.to_json()).collect())
            }
            Presentation::Parametrized(_) => {}
        }
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ChowLamError> {
        let j: SpecJson = serde_json::from_value(value.clone())
            .map_err(|e| ChowLamError::BadSpec(e.to_string()))?;
        let presentation = if let Some(parts) = j.positroid {
            Presentation::Positroid(Partition::new(parts)?)
        } else if let Some(entries) = j.schubert {
            Presentation::Schubert(IndexSet::new(entries, j.n)?)
        } else if let Some(gens) = j.generators {
            let polys: Result<Vec<Polynomial>, PolyError> = gens
                .iter()
                .map(|g| Polynomial::from_json(g, MonomialOrder::DegRevLex))
                .collect();
            Presentation::Generators(polys?)
        } else {
            return Err(ChowLamError::BadSpec(
                "spec needs positroid, schubert or generators".into(),
            ));
        };
        Ok(VarietySpec {
            k: j.k,
            n: j.n,
            r: j.r,
            presentation,
        })
    }
}

/// Normal form of a polynomial modulo the Plücker relations of its own
/// variable letter, used to compare forms modulo the ambient relations.
pub fn reduce_mod_plucker(
    f: &Polynomial,
    coord_k: usize,
    n: usize,
    letter: &str,
    budget: &Budget,
) -> Result<(Polynomial, GroebnerBasis), ChowLamError> {
    let order = MonomialOrder::DegRevLex;
    let mut rels = vec![Polynomial::zero(f.table().clone(), order.clone())];
    rels.extend(plucker_relations(coord_k, n, letter, f.table(), &order)?);
    let gb = groebner::buchberger(&rels, &order, budget)?;
    Ok((groebner::normal_form(f, &gb), gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn bezout_matrix_determinant_shape() {
        let form = bezout_chow_rnc5().unwrap();
        // Chow form of a degree-4 curve: degree 4 in Plücker coordinates.
        assert_eq!(form.degree(), 4);
        assert!(!form.is_zero());
    }

    #[test]
    fn sylvester_equals_bezout_in_stiefel_coordinates() {
        let bez = bezout_chow_rnc5_stiefel().unwrap();
        let syl = sylvester_resultant_quartics().unwrap();
        assert_eq!(bez, syl);
    }

    #[test]
    fn bezout_vanishes_on_incident_plane() {
        // Plane annihilating a curve point (1, t, t^2, t^3, t^4) has
        // vanishing Chow form value.
        let mut rng = ChaCha20Rng::seed_from_u64(17);
        let form = bezout_chow_rnc5().unwrap();
        let table = form.table().clone();
        for _ in 0..10 {
            let t0 = Rational::from_int(rng.gen_range(-10i64..=10));
            let point: Vec<Rational> = (0..5).map(|e| t0.pow(e)).collect();
            // two random rows orthogonal to the curve point; solve against
            // coordinate 0, which is always 1 on the curve
            let row = |rng: &mut ChaCha20Rng| -> Vec<Rational> {
                let mut r: Vec<Rational> = (0..5)
                    .map(|_| Rational::from_int(rng.gen_range(-9i64..=9)))
                    .collect();
                let dot: Rational = r
                    .iter()
                    .zip(point.iter())
                    .fold(Rational::zero(), |acc, (a, b)| acc + (a * b));
                r[0] = &r[0] - &dot;
                r
            };
            let a = row(&mut rng);
            let b = row(&mut rng);
            let minors =
                match maximal_minors_rational(&[a, b], grassmann::CoordKind::Primal) {
                    Ok(m) => m,
                    Err(_) => continue,
                };
            let values: Vec<Rational> = table
                .names()
                .iter()
                .map(|name| {
                    let (_, set) = parse_plucker_var(name).unwrap();
                    minors.get(&set)
                })
                .collect();
            assert!(form.evaluate(&values).unwrap().is_zero());
        }
    }

    #[test]
    fn positroid_3222_standard_form_has_four_terms() {
        // Frozen from the verified determinant: the straightened form has
        // exactly these four standard monomials. (Checked below to agree
        // with the raw determinant as a function of the matrix and to
        // vanish exactly on collinear configurations.)
        let form = positroid_3222_form().unwrap();
        let table = form.table().clone();
        let o = form.order().clone();
        let expect = Polynomial::parse(
            table,
            o,
            "q[1,2,3,4]*q[1,2,3,6]*q[5,7,8,9] - q[1,2,3,4]*q[1,2,3,7]*q[5,6,8,9] \
             - q[1,2,3,5]*q[1,2,3,6]*q[4,7,8,9] + q[1,2,3,5]*q[1,2,3,7]*q[4,6,8,9]",
        )
        .unwrap();
        assert_eq!(form, expect);
    }

    #[test]
    fn positroid_3222_vanishes_exactly_on_collinear_configurations() {
        let mut rng = ChaCha20Rng::seed_from_u64(29);
        let form = positroid_3222_form().unwrap();
        let table = form.table().clone();
        let q = |n: i64| Rational::from_int(n);
        let mut done = 0;
        while done < 10 {
            // plane = span of columns 1..3; three further lines each through
            // a point of a fixed line inside that plane
            let mut x = vec![vec![Rational::zero(); 9]; 4];
            let y: Vec<Vec<Rational>> = (0..3)
                .map(|_| (0..4).map(|_| q(rng.gen_range(-9..=9))).collect())
                .collect();
            for r in 0..4 {
                for c in 0..3 {
                    x[r][c] = y[c][r].clone();
                }
            }
            let comb = |rng: &mut ChaCha20Rng| -> Vec<Rational> {
                let (a, b, c) = (
                    q(rng.gen_range(-9..=9)),
                    q(rng.gen_range(-9..=9)),
                    q(rng.gen_range(-9..=9)),
                );
                (0..4)
                    .map(|r| &(&a * &y[0][r]) + &(&(&b * &y[1][r]) + &(&c * &y[2][r])))
                    .collect()
            };
            let u = comb(&mut rng);
            let v = comb(&mut rng);
            for line in 0..3 {
                let a = q(rng.gen_range(-9..=9));
                let b = q(rng.gen_range(-9..=9));
                let pt: Vec<Rational> =
                    (0..4).map(|r| &(&a * &u[r]) + &(&b * &v[r])).collect();
                let z: Vec<Rational> = (0..4).map(|_| q(rng.gen_range(-9..=9))).collect();
                for r in 0..4 {
                    x[r][3 + 2 * line] = &pt[r] + &z[r];
                    x[r][4 + 2 * line] = &pt[r] + &(&q(2) * &z[r]);
                }
            }
            if matrix::rank(&x) < 4 {
                continue;
            }
            done += 1;
            let pv = maximal_minors_rational(&x, grassmann::CoordKind::Dual).unwrap();
            let point: Vec<Rational> = table
                .names()
                .iter()
                .map(|nm| {
                    let (_, s) = parse_plucker_var(nm).unwrap();
                    pv.get(&s)
                })
                .collect();
            assert!(form.evaluate(&point).unwrap().is_zero());
        }
    }

    #[test]
    fn positroid_3222_det_and_standard_form_agree_on_matrices() {
        // The raw determinant and its straightening are the same function of
        // the matrix entries.
        let mut rng = ChaCha20Rng::seed_from_u64(23);
        let table = plucker_table("q", 4, 9);
        let form = positroid_3222_form().unwrap();
        let q = |set: &[u16], pv: &PluckerVector<Rational>| pv.get(set);
        for _ in 0..20 {
            let x: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..9)
                        .map(|_| Rational::from_int(rng.gen_range(-9i64..=9)))
                        .collect()
                })
                .collect();
            if matrix::rank(&x) < 4 {
                continue;
            }
            let pv = maximal_minors_rational(&x, grassmann::CoordKind::Dual).unwrap();
            let point: Vec<Rational> = table
                .names()
                .iter()
                .map(|name| {
                    let (_, set) = parse_plucker_var(name).unwrap();
                    q(&set, &pv)
                })
                .collect();
            let straightened = form.evaluate(&point).unwrap();
            // direct 3x3 determinant of the intersection points
            let row = |c: u16, d: u16| -> Vec<Rational> {
                vec![
                    pv.get(&[2, 3, c, d]),
                    -pv.get(&[1, 3, c, d]),
                    pv.get(&[1, 2, c, d]),
                ]
            };
            let det =
                matrix::det_rational(&[row(4, 5), row(6, 7), row(8, 9)]).unwrap();
            assert_eq!(straightened, det);
        }
    }

    #[test]
    fn five_lines_vanishes_with_common_transversal() {
        let mut rng = ChaCha20Rng::seed_from_u64(31);
        for _ in 0..10 {
            // transversal line T and five lines through points of T
            let t: Vec<Vec<Rational>> = (0..2)
                .map(|_| {
                    (0..4)
                        .map(|_| Rational::from_int(rng.gen_range(-9i64..=9)))
                        .collect()
                })
                .collect();
            let mut x = vec![vec![Rational::zero(); 10]; 4];
            for line in 0..5 {
                let a = Rational::from_int(rng.gen_range(-9i64..=9));
                let b = Rational::from_int(rng.gen_range(-9i64..=9));
                for r in 0..4 {
                    x[r][2 * line] = &(&a * &t[0][r]) + &(&b * &t[1][r]);
                    x[r][2 * line + 1] = Rational::from_int(rng.gen_range(-9i64..=9));
                }
            }
            let v = five_lines_value(&x).unwrap();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn five_lines_nonzero_generically() {
        let mut rng = ChaCha20Rng::seed_from_u64(37);
        let mut nonzero = 0;
        for _ in 0..20 {
            let x: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..10)
                        .map(|_| Rational::from_int(rng.gen_range(-50i64..=50)))
                        .collect()
                })
                .collect();
            if !five_lines_value(&x).unwrap().is_zero() {
                nonzero += 1;
            }
        }
        assert_eq!(nonzero, 20);
    }

    #[test]
    fn catalan_s4_matches_half_gram_determinant() {
        let mut rng = ChaCha20Rng::seed_from_u64(41);
        for _ in 0..20 {
            let x: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..10)
                        .map(|_| Rational::from_int(rng.gen_range(-20i64..=20)))
                        .collect()
                })
                .collect();
            let c = catalan_chow_lam(4, &x).unwrap();
            let g = gram_of_wedges(&x).unwrap();
            let half_det = &matrix::det_rational(&g).unwrap()
                / &Rational::from_int(2);
            assert_eq!(c, half_det);
        }
    }

    #[test]
    fn triple_product_identity_holds() {
        let mut rng = ChaCha20Rng::seed_from_u64(43);
        for _ in 0..20 {
            let x: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..6)
                        .map(|_| Rational::from_int(rng.gen_range(-20i64..=20)))
                        .collect()
                })
                .collect();
            let (a, b) = higher_cl_222_identity_check(&x).unwrap();
            assert_eq!(a, b);
        }
        // repeated column kills both sides
        let mut x: Vec<Vec<Rational>> = (0..4)
            .map(|_| {
                (0..6)
                    .map(|_| Rational::from_int(rng.gen_range(-20i64..=20)))
                    .collect()
            })
            .collect();
        for r in 0..4 {
            x[r][1] = x[r][0].clone();
        }
        let (a, b) = higher_cl_222_identity_check(&x).unwrap();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn duality_fixes_hurwitz_lam_g28() {
        let form = hurwitz_lam_g28_symbolic("p").unwrap();
        let dual = duality_substitution(&form).unwrap();
        let lambda = dual.equal_up_to_scalar(&form).unwrap();
        assert_eq!(lambda, Rational::one());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = VarietySpec {
            k: 2,
            n: 9,
            r: 7,
            presentation: Presentation::Positroid(Partition::new(vec![3, 2, 2, 2]).unwrap()),
        };
        let json = spec.to_json();
        assert_eq!(json["positroid"], serde_json::json!([3, 2, 2, 2]));
        let back = VarietySpec::from_json(&json).unwrap();
        assert_eq!(back.k, 2);
        assert_eq!(back.n, 9);
        assert_eq!(back.r, 7);
        match back.presentation {
            Presentation::Positroid(b) => assert_eq!(b.parts(), &[3, 2, 2, 2]),
            _ => panic!("wrong presentation"),
        }
    }
}
