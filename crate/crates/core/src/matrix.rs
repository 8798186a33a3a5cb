//! Exact linear algebra over [`Rational`] and [`Polynomial`] entries:
//! determinants, reduced row echelon form, rank and kernels.

use std::collections::HashMap;
use std::sync::Arc;

use num::BigInt;
use num::Integer;
use num::One;

use num::Zero;
use thiserror::Error;

use crate::poly::{MonomialOrder, PolyError, Polynomial, VarTable};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is empty or ragged")]
    BadShape,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Minimal ring interface shared by [`Rational`] and [`Polynomial`] entries.
/// `zero` takes a prototype so that polynomial rings can carry their table.
pub trait Scalar: Clone {
    fn zero_like(proto: &Self) -> Self;
    fn one_like(proto: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for Rational {
    fn zero_like(_: &Self) -> Self {
        Rational::zero()
    }
    fn one_like(_: &Self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for Polynomial {
    fn zero_like(proto: &Self) -> Self {
        Polynomial::zero(proto.table().clone(), proto.order().clone())
    }
    fn one_like(proto: &Self) -> Self {
        Polynomial::one(proto.table().clone(), proto.order().clone())
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Polynomial::add(self, other).expect("matrix entries share a ring")
    }
    fn sub(&self, other: &Self) -> Self {
        Polynomial::sub(self, other).expect("matrix entries share a ring")
    }
    fn mul(&self, other: &Self) -> Self {
        Polynomial::mul(self, other).expect("matrix entries share a ring")
    }
    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, MatrixError> {
    let n = m.len();
    if n == 0 {
        return Err(MatrixError::BadShape);
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(MatrixError::NotSquare);
    }
    Ok(n)
}

/// Exact determinant of a rational matrix by fraction-free Bareiss
/// elimination on the cleared integer matrix.
pub fn det_rational(m: &[Vec<Rational>]) -> Result<Rational, MatrixError> {
    let n = check_square(m)?;
    // Clear denominators row by row, tracking the product of the scalings.
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut lcm = BigInt::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        scale = scale * Rational::from_bigint(lcm.clone());
        a.push(
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = Rational::from_bigint(a[n - 1][n - 1].clone());
    if sign < 0 {
        det = -det;
    }
    Ok(det / scale)
}

/// Exact determinant with polynomial entries by Laplace expansion. Rows are
/// visited sparsest-first and minors are shared through a column-mask memo.
pub fn det_poly(m: &[Vec<Polynomial>]) -> Result<Polynomial, MatrixError> {
    let n = check_square(m)?;
    let proto = &m[0][0];
    if n > 64 {
        return Err(MatrixError::BadShape);
    }
    // All-constant matrices take the numeric path.
    if m.iter().flatten().all(|e| e.is_constant()) {
        let num: Vec<Vec<Rational>> = m
            .iter()
            .map(|row| row.iter().map(|e| e.constant_term()).collect())
            .collect();
        let d = det_rational(&num)?;
        return Ok(Polynomial::constant(
            proto.table().clone(),
            proto.order().clone(),
            d,
        ));
    }
    let mut row_order: Vec<usize> = (0..n).collect();
    row_order.sort_by_key(|&i| (m[i].iter().filter(|e| !e.is_zero()).count(), i));
    // The DP computes the determinant of the row-permuted matrix.
    let mut perm_sign = 1i32;
    for i in 0..n {
        for j in i + 1..n {
            if row_order[i] > row_order[j] {
                perm_sign = -perm_sign;
            }
        }
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    let det = det_minor(m, &row_order, 0, full, &mut memo, proto);
    Ok(if perm_sign < 0 { det.neg() } else { det })
}

fn det_minor(
    m: &[Vec<Polynomial>],
    row_order: &[usize],
    depth: usize,
    cols: u64,
    memo: &mut HashMap<u64, Polynomial>,
    proto: &Polynomial,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::one(proto.table().clone(), proto.order().clone());
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let row = row_order[depth];
    let mut acc = Polynomial::zero(proto.table().clone(), proto.order().clone());
    let mut sign = 1i32;
    let mut rest = cols;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = det_minor(m, row_order, depth + 1, cols & !(1u64 << j), memo, proto);
            let term = entry.mul(&sub).expect("shared ring");
            acc = if sign > 0 {
                acc.add(&term).expect("shared ring")
            } else {
                acc.sub(&term).expect("shared ring")
            };
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Determinant for any `Scalar` entry type by plain cofactor expansion along
/// the first row. Exponential; used as the independent cross-check oracle
/// and for very small matrices.
pub fn det_cofactor<T: Scalar>(m: &[Vec<T>]) -> Result<T, MatrixError> {
    let n = check_square(m)?;
    let proto = m[0][0].clone();
    fn go<T: Scalar>(m: &[Vec<T>], rows: &[usize], cols: &[usize], proto: &T) -> T {
        if rows.is_empty() {
            return T::one_like(proto);
        }
        let r = rows[0];
        let mut acc = T::zero_like(proto);
        for (pos, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let sub = go(m, &rows[1..], &sub_cols, proto);
            let term = m[r][c].mul(&sub);
            acc = if pos % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(go(m, &rows, &cols, &proto))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel `{v : M v = 0}`, one row per basis vector.
/// Deterministic: computed from the reduced row echelon form.
pub fn right_kernel(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -work[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Basis of the left kernel `{w : w M = 0}`.
pub fn left_kernel(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    right_kernel(&transpose(m))
}

pub fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Rational::zero();
                    for k in 0..inner {
                        s += &(&row[k] * &b[k][j]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Parses a CSV matrix of exact rationals ("num/den" entries).
pub fn parse_csv(text: &str) -> Result<Vec<Vec<Rational>>, String> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<Rational>, _> = line.split(',').map(|t| t.trim().parse()).collect();
        rows.push(row.map_err(|e| format!("{e}"))?);
    }
    if rows.is_empty() {
        return Err("empty matrix".to_string());
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err("ragged matrix".to_string());
    }
    Ok(rows)
}

pub fn to_csv(m: &[Vec<Rational>]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Convenience: matrix of integer literals.
pub fn mat_from_i64(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
        .collect()
}

/// Lifts a rational matrix into a polynomial ring as constants.
pub fn lift_matrix(
    m: &[Vec<Rational>],
    table: &Arc<VarTable>,
    order: &MonomialOrder,
) -> Vec<Vec<Polynomial>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|c| Polynomial::constant(table.clone(), order.clone(), c.clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn det_one_by_one_and_two_by_two() {
        assert_eq!(det_rational(&[vec![q(7)]]).unwrap(), q(7));
        let m = mat_from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(det_rational(&m).unwrap(), q(-2));
    }

    #[test]
    fn det_poly_matches_cofactor_on_random_sparse() {
        let table = VarTable::new(["a", "b", "c", "d"]).unwrap();
        let order = MonomialOrder::DegRevLex;
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        for n in 1..=5usize {
            for _ in 0..6 {
                let m: Vec<Vec<Polynomial>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                if rng.gen_bool(0.4) {
                                    Polynomial::zero(table.clone(), order.clone())
                                } else {
                                    let v = rng.gen_range(0..4usize);
                                    let c = q(rng.gen_range(-3..=3));
                                    Polynomial::var(table.clone(), order.clone(), v)
                                        .scale(&c)
                                        .add(&Polynomial::constant(
                                            table.clone(),
                                            order.clone(),
                                            q(rng.gen_range(-2..=2)),
                                        ))
                                        .unwrap()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let fast = det_poly(&m).unwrap();
                let slow = det_cofactor(&m).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn det_rational_matches_cofactor_on_random() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for n in 1..=5usize {
            for _ in 0..10 {
                let m: Vec<Vec<Rational>> = (0..n)
                    .map(|_| (0..n).map(|_| q(rng.gen_range(-9..=9))).collect())
                    .collect();
                assert_eq!(det_rational(&m).unwrap(), det_cofactor(&m).unwrap());
            }
        }
    }

    #[test]
    fn kernel_and_rank() {
        // rank-1 matrix, kernel dimension 2
        let m = mat_from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m), 1);
        let ker = right_kernel(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &m {
                let mut s = Rational::zero();
                for (a, b) in row.iter().zip(v.iter()) {
                    s += &(a * b);
                }
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn csv_round_trip() {
        let m = vec![vec![q(1), "2/3".parse().unwrap()], vec![q(-5), q(0)]];
        let text = to_csv(&m);
        let back = parse_csv(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn non_square_rejected() {
        let m = mat_from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(det_rational(&m).is_err());
    }
}
