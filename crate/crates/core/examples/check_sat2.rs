use chow_lam::grassmann::*;
use chow_lam::groebner::*;
use chow_lam::matrix;
use chow_lam::poly::{MonomialOrder, Polynomial};
use chow_lam::rational::Rational;

fn q(n: i64) -> Rational { Rational::from_int(n) }

fn main() {
    let budget = Budget::default();
    let o = MonomialOrder::DegRevLex;
    let table = plucker_table("q", 2, 4).extend(plucker_table("p", 1, 4).names().iter().cloned()).unwrap();
    let p = |s: &str| Polynomial::parse(table.clone(), o.clone(), s).unwrap();
    let mut ideal = vec![
        p("q[1,2] + q[1,4] - 2*q[2,3] + 2*q[3,4]"),
        p("q[1,3] + 2*q[1,4] + q[2,3] + 2*q[2,4]"),
        p("5*q[1,2] + 2*q[1,4] - 25*q[2,3] + 10*q[3,4]"),
        p("q[1,2]*q[3,4] - q[1,3]*q[2,4] + q[1,4]*q[2,3]"),
    ];
    ideal.extend(incidence_equations(2, 4, 3, "q", "p", &table, &o).unwrap());

    // construct an honest incidence point: lines l1,l2,l3 from the dual
    // vectors read off the linear forms
    // l1 = (2,0,-2,1,0,1) in pairs (12,13,14,23,24,34); factor into rows
    let lines: Vec<[ [i64;4]; 2]> = vec![
        // l1: plucker (2,0,-2,1,0,1): find two spanning rows by contraction:
        // rows u_i = l_{1i} (with l_{11}=0): u = (0, 2, 0, -2): hmm do numerically below
        [[0,0,0,0],[0,0,0,0]],
    ];
    let _ = lines;
    // factor decomposable 2-vector l (pairs order 12,13,14,23,24,34) into 2 rows
    let factor = |l: [i64; 6]| -> Vec<Vec<Rational>> {
        let get = |i: usize, j: usize| -> i64 {
            // l_{ij} alternating, 1-based
            let pairs = [(1,2),(1,3),(1,4),(2,3),(2,4),(3,4)];
            for (idx, &(a,b)) in pairs.iter().enumerate() {
                if (a,b) == (i,j) { return l[idx]; }
                if (b,a) == (i,j) { return -l[idx]; }
            }
            0
        };
        // pick pivot pair (a,b) with l_ab != 0; rows: u_k = l_{a k}, v_k = l_{b k}
        let pairs = [(1,2),(1,3),(1,4),(2,3),(2,4),(3,4)];
        let (a, b) = *pairs.iter().find(|&&(a,b)| get(a,b) != 0).unwrap();
        let u: Vec<Rational> = (1..=4).map(|k| q(get(a, k))).collect();
        let v: Vec<Rational> = (1..=4).map(|k| q(get(b, k))).collect();
        vec![u, v]
    };
    let l1 = factor([2,0,-2,1,0,1]);
    let l2 = factor([0,-2,1,2,-1,0]);
    let l3 = factor([10,0,-25,2,0,5]);
    // point y on l1, transversal through y meeting l2 and l3:
    let y: Vec<Rational> = (0..4).map(|i| &l1[0][i] + &(&q(3) * &l1[1][i])).collect();
    let h2: Vec<Vec<Rational>> = vec![y.clone(), l2[0].clone(), l2[1].clone()];
    let h3: Vec<Vec<Rational>> = vec![y.clone(), l3[0].clone(), l3[1].clone()];
    let a2 = matrix::right_kernel(&h2); // 1 covector
    let a3 = matrix::right_kernel(&h3);
    assert_eq!(a2.len(), 1); assert_eq!(a3.len(), 1);
    let qmat = matrix::right_kernel(&vec![a2[0].clone(), a3[0].clone()]); // 2x4 spanning Q
    assert_eq!(qmat.len(), 2);
    let qv = maximal_minors_rational(&qmat, CoordKind::Dual).unwrap();
    // verify Q in V: evaluate the three linear forms
    let mut point = vec![Rational::zero(); table.len()];
    for (i, name) in table.names().iter().enumerate() {
        if let Some((letter, set)) = parse_plucker_var(name) {
            if letter == "q" { point[i] = qv.get(&set); }
        }
    }
    // p: a plane containing Q: p ⊥ both rows of qmat: kernel of qmat gives 2 covectors; pick combo
    let pk = matrix::right_kernel(&qmat);
    let pvec: Vec<Rational> = (0..4).map(|i| &pk[0][i] + &(&q(5) * &pk[1][i])).collect();
    for (i, name) in table.names().iter().enumerate() {
        if let Some((letter, set)) = parse_plucker_var(name) {
            if letter == "p" { point[i] = pvec[set[0] as usize - 1].clone(); }
        }
    }
    println!("incidence gens vanish at witness: {}", ideal.iter().all(|g| g.evaluate(&point).unwrap().is_zero()));

    let mut work = ideal.clone();
    for qi in 0..6 {
        let f = Polynomial::var(table.clone(), o.clone(), qi);
        work = saturate(&work, &f, &budget).unwrap().gens;
        let alive = work.iter().all(|g| g.evaluate(&point).unwrap().is_zero());
        println!("after sat {}: {} gens, witness alive: {alive}", table.name(qi), work.len());
        if !alive {
            for g in &work { if !g.evaluate(&point).unwrap().is_zero() { println!("  killer: {}", g); break; } }
            break;
        }
    }
}
