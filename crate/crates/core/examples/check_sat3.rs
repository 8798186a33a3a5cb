use chow_lam::grassmann::*;
use chow_lam::groebner::*;
use chow_lam::poly::{MonomialOrder, Polynomial};

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
    let gb = buchberger(&ideal, &o, &budget).unwrap();
    let killer = p("-9*q[1,2] + q[1,3] + 14*q[2,4] - 18*q[3,4]");
    let q12 = p("q[1,2]");
    let mut g = killer.clone();
    for n in 0..8 {
        println!("NF(killer * q12^{n}) == 0: {}", normal_form(&g, &gb).is_zero());
        g = g.mul(&q12).unwrap();
    }
}
