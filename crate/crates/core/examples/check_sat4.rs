use chow_lam::grassmann::*;
use chow_lam::groebner::*;
use chow_lam::poly::{MonomialOrder, Polynomial};
use std::time::Instant;

fn main() {
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
    for cap in [1000u64, 10_000, 100_000, 1_000_000] {
        let b = Budget { max_steps: cap, max_basis: 100_000 };
        let t0 = Instant::now();
        match buchberger(&ideal, &o, &b) {
            Ok(gb) => { println!("cap {cap}: OK {} gens in {:?}", gb.gens().len(), t0.elapsed()); break; }
            Err(e) => println!("cap {cap}: {e} in {:?}", t0.elapsed()),
        }
    }
}
