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
    let allowed: Vec<bool> = (0..table.len()).map(|i| i < 6).collect();
    let (work, solved) = presolve_linear(&ideal, &allowed).unwrap();
    println!("solved: {:?}", solved.iter().map(|(v, img)| format!("{} -> {}", table.name(*v), img)).collect::<Vec<_>>());
    println!("work ({}):", work.len());
    for g in &work { println!("  {}", g); }
    let mut saturators = vec![];
    for qi in 0..6 {
        if solved.contains_key(&qi) { continue; }
        if work.iter().any(|g| g.terms().iter().any(|(mm, _)| mm.exp(qi) > 0)) { saturators.push(qi); }
    }
    println!("saturators: {:?}", saturators.iter().map(|&v| table.name(v)).collect::<Vec<_>>());
    let mut w = work.clone();
    for &qi in &saturators {
        let f = Polynomial::var(table.clone(), o.clone(), qi);
        w = saturate(&w, &f, &budget).unwrap().gens;
        println!("after sat {}: {} gens", table.name(qi), w.len());
    }
    let elim = eliminate(&w, &(0..6).collect::<Vec<_>>(), &budget).unwrap();
    println!("elim: {:?}", elim.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>());
}
