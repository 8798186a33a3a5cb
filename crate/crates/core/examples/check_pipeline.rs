use chow_lam::grassmann::*;
use chow_lam::groebner::*;
use chow_lam::poly::{MonomialOrder, Polynomial};

fn main() {
    let budget = Budget::default();
    let o = MonomialOrder::DegRevLex;
    // ruled surface, by hand
    let table = plucker_table("q", 2, 4).extend(plucker_table("p", 1, 4).names().iter().cloned()).unwrap();
    let p = |s: &str| Polynomial::parse(table.clone(), o.clone(), s).unwrap();
    let mut ideal = vec![
        p("q[1,2] + q[1,4] - 2*q[2,3] + 2*q[3,4]"),
        p("q[1,3] + 2*q[1,4] + q[2,3] + 2*q[2,4]"),
        p("5*q[1,2] + 2*q[1,4] - 25*q[2,3] + 10*q[3,4]"),
        p("q[1,2]*q[3,4] - q[1,3]*q[2,4] + q[1,4]*q[2,3]"),
    ];
    ideal.extend(incidence_equations(2, 4, 3, "q", "p", &table, &o).unwrap());
    println!("gens: {}", ideal.len());
    // no presolve; saturate by each q variable with BOTH paths and compare elimination
    let nq = 6;
    // path A: Rabinowitsch saturation by product? do sequential rabinowitsch
    let mut work_a = ideal.clone();
    for qi in 0..nq {
        let f = Polynomial::var(table.clone(), o.clone(), qi);
        // force rabinowitsch by making a 2-term poly? call saturate (will take bayer). Use internal: saturate with non-var trick: f * 1
        work_a = saturate(&work_a, &f, &budget).unwrap().gens;
        println!("after sat q{}: {} gens", qi, work_a.len());
    }
    let elim = eliminate(&work_a, &(0..nq).collect::<Vec<_>>(), &budget).unwrap();
    println!("elim gens: {:?}", elim.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>());
}
