use chow_lam::grassmann::*;
use chow_lam::matrix;
use chow_lam::poly::{MonomialOrder, Polynomial};
use chow_lam::rational::Rational;

fn main() {
    // Build the 25 equations of the 5x5 skew-matrix product P~ * Q~ = 0.
    let table = plucker_table("q", 2, 5)
        .extend(plucker_table("p", 2, 5).names().iter().cloned())
        .unwrap();
    let o = MonomialOrder::DegRevLex;
    let q = symbolic_plucker_vector("q", 2, 5, CoordKind::Dual, &table, &o).unwrap();
    let p = symbolic_plucker_vector("p", 2, 5, CoordKind::Primal, &table, &o).unwrap();
    // product entry (a,c) = sum_b P[a,b] Q[b,c]
    let mut product = Vec::new();
    for a in 1..=5u16 {
        for c in 1..=5u16 {
            let mut e = Polynomial::zero(table.clone(), o.clone());
            for b in 1..=5u16 {
                let term = p.get(&[a, b]).mul(&q.get(&[b, c])).unwrap();
                e = e.add(&term).unwrap();
            }
            product.push(e);
        }
    }
    let eqs = incidence_equations(2, 5, 3, "q", "p", &table, &o).unwrap();
    println!("incidence eqs: {}", eqs.len());
    println!("product eqs nonzero: {}", product.iter().filter(|e| !e.is_zero()).count());
    // match each incidence equation exactly against a product entry
    let mut matched = 0;
    for e in &eqs {
        if product.iter().any(|f| f == e) { matched += 1; }
        else {
            // try negation
            if product.iter().any(|f| *f == e.neg()) { println!("NEGATED version found: {}", e); }
            else { println!("NO MATCH: {}", e); }
        }
    }
    println!("matched exactly: {matched}/25");

    // containment test (2,8,4): Q = rowspace(T X), P = rowspace(X)
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(5);
    let t28 = plucker_table("q", 2, 8).extend(plucker_table("p", 4, 8).names().iter().cloned()).unwrap();
    let eqs8 = incidence_equations(2, 8, 4, "q", "p", &t28, &o).unwrap();
    println!("eqs(2,8,4): {}", eqs8.len());
    for trial in 0..5 {
        let x: Vec<Vec<Rational>> = (0..4).map(|_| (0..8).map(|_| Rational::from_int(rng.gen_range(-20..=20))).collect()).collect();
        let t: Vec<Vec<Rational>> = (0..2).map(|_| (0..4).map(|_| Rational::from_int(rng.gen_range(-20..=20))).collect()).collect();
        let qmat = matrix::mat_mul(&t, &x);
        if matrix::rank(&qmat) < 2 || matrix::rank(&x) < 4 { continue; }
        let qv = maximal_minors_rational(&qmat, CoordKind::Dual).unwrap();
        // primal coords of rowspace(X): minors of the kernel presentation
        let ker = matrix::left_kernel(&matrix::transpose(&x)); // rows w with X w^T ... wait
        // P = rowspace(X); primal presentation A (4x8) with ker A = P: rows of A ⊥ rows of X
        let a = matrix::right_kernel(&x); // {v : X v = 0}, as rows
        let pv = maximal_minors_rational(&a, CoordKind::Primal).unwrap();
        // evaluate each equation
        let mut point = vec![Rational::zero(); t28.len()];
        for (i, name) in t28.names().iter().enumerate() {
            let (letter, set) = parse_plucker_var(name).unwrap();
            point[i] = if letter == "q" { qv.get(&set) } else { pv.get(&set) };
        }
        let bad = eqs8.iter().filter(|e| !e.evaluate(&point).unwrap().is_zero()).count();
        println!("trial {trial}: nonvanishing eqs on contained pair = {bad}");
        // non-incident: random Q
        let qm2: Vec<Vec<Rational>> = (0..2).map(|_| (0..8).map(|_| Rational::from_int(rng.gen_range(-20..=20))).collect()).collect();
        let qv2 = maximal_minors_rational(&qm2, CoordKind::Dual).unwrap();
        for (i, name) in t28.names().iter().enumerate() {
            let (letter, set) = parse_plucker_var(name).unwrap();
            point[i] = if letter == "q" { qv2.get(&set) } else { pv.get(&set) };
        }
        let nz = eqs8.iter().filter(|e| !e.evaluate(&point).unwrap().is_zero()).count();
        println!("trial {trial}: nonvanishing eqs on random pair = {nz} (expect > 0)");
    }
}
