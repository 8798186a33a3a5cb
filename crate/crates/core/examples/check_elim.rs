use chow_lam::chowlam::*;
use chow_lam::grassmann::{plucker_table, IndexSet};
use chow_lam::groebner::Budget;
use chow_lam::poly::{MonomialOrder, Polynomial};
use std::time::Instant;

fn main() {
    let budget = Budget::default();
    // ruled surface: three lines in P^3
    let t = plucker_table("q", 2, 4);
    let o = MonomialOrder::DegRevLex;
    let p = |s: &str| Polynomial::parse(t.clone(), o.clone(), s).unwrap();
    let spec = VarietySpec {
        k: 2, n: 4, r: 3,
        presentation: Presentation::Generators(vec![
            p("q[1,2] + q[1,4] - 2*q[2,3] + 2*q[3,4]"),
            p("q[1,3] + 2*q[1,4] + q[2,3] + 2*q[2,4]"),
            p("5*q[1,2] + 2*q[1,4] - 25*q[2,3] + 10*q[3,4]"),
        ]),
    };
    let t0 = Instant::now();
    match chow_lam_eliminate(&spec, &budget) {
        Ok(res) => {
            println!("ruled surface ({:?}): {}", t0.elapsed(), res.form().map(|f| f.to_string()).unwrap_or("DEGENERATE".into()));
            let pt = plucker_table("p", 1, 4);
            let expect = Polynomial::parse(pt, o.clone(),
              "20*p[1]^2 - 18*p[1]*p[2] - 2*p[2]^2 - 14*p[1]*p[3] + 2*p[3]^2 + 7*p[2]*p[4] + 9*p[3]*p[4] - 5*p[4]^2").unwrap();
            if let Ok(f) = res.form() {
                println!("matches published quadric up to scalar: {:?}", f.equal_up_to_scalar(&expect));
            }
        }
        Err(e) => println!("ruled surface FAILED: {e}"),
    }

    // Example triple on Gr(2,5), r = 4
    let t5 = plucker_table("q", 2, 5);
    let p5 = |s: &str| Polynomial::parse(t5.clone(), o.clone(), s).unwrap();
    let spec_v = VarietySpec {
        k: 2, n: 5, r: 4,
        presentation: Presentation::Generators(vec![
            p5("q[1,2] + q[1,3]"), p5("q[2,4] + q[2,5]"), p5("q[2,3] + q[3,5]"),
        ]),
    };
    let t0 = Instant::now();
    match chow_lam_eliminate(&spec_v, &budget) {
        Ok(res) => {
            println!("generic 3-fold ({:?}): deg {} : {}", t0.elapsed(), res.degree, res.form().map(|f| f.to_string()).unwrap_or("DEGEN".into()));
            let pt = plucker_table("p", 2, 5);
            let expect = Polynomial::parse(pt, o.clone(),
              "p[1,4]*p[2,4] - p[1,4]*p[2,5] - p[1,4]*p[3,4] + p[1,4]*p[3,5] + p[1,2]*p[4,5] - p[1,4]*p[4,5] + p[1,5]*p[4,5]").unwrap();
            if let Ok(f) = res.form() {
                // compare modulo ambient Plücker relations
                let (nf_f, gb) = reduce_mod_plucker(f, 2, 5, "p", &budget).unwrap();
                let nf_e = chow_lam::groebner::normal_form(&expect, &gb);
                println!("matches displayed form up to scalar mod Plucker: {:?}", nf_f.equal_up_to_scalar(&nf_e));
            }
        }
        Err(e) => println!("generic 3-fold FAILED: {e}"),
    }

    // S_24 -> p45 ; S_15 -> degenerate
    for (name, idx, n) in [("S24", vec![2u16,4], 5usize), ("S15", vec![1,5], 5)] {
        let spec_s = VarietySpec { k: 2, n, r: 4, presentation: Presentation::Schubert(IndexSet::new(idx, n).unwrap()) };
        let t0 = Instant::now();
        match chow_lam_eliminate(&spec_s, &budget) {
            Ok(res) => match &res.outcome {
                FormOutcome::Form(f) => println!("{name} ({:?}): form {}", t0.elapsed(), f),
                FormOutcome::Degenerate(ws) => println!("{name} ({:?}): DEGENERATE witness {:?}", t0.elapsed(), ws.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
            },
            Err(e) => println!("{name} FAILED: {e}"),
        }
    }
}
