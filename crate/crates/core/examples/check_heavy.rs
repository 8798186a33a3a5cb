use chow_lam::chowlam::*;
use chow_lam::grassmann::plucker_table;
use chow_lam::groebner::{normal_form, Budget};
use chow_lam::poly::{MonomialOrder, Polynomial, VarTable};
use chow_lam::schubert::Partition;
use std::time::Instant;

fn main() {
    let budget = Budget::default();
    let o = MonomialOrder::DegRevLex;

    // positroid (2,2,2) in Gr(2,6), r = 5 -> p123 p456 - p124 p356 mod Plücker
    let spec = VarietySpec {
        k: 2, n: 6, r: 5,
        presentation: Presentation::Positroid(Partition::new(vec![2, 2, 2]).unwrap()),
    };
    let t0 = Instant::now();
    match chow_lam_eliminate(&spec, &budget) {
        Ok(res) => {
            println!("positroid 222 ({:?}): deg {}", t0.elapsed(), res.degree);
            let f = res.form().unwrap();
            let pt = plucker_table("p", 3, 6);
            let expect = Polynomial::parse(pt, o.clone(), "p[1,2,3]*p[4,5,6] - p[1,2,4]*p[3,5,6]").unwrap();
            let (nf_f, gb) = reduce_mod_plucker(f, 3, 6, "p", &budget).unwrap();
            let nf_e = normal_form(&expect, &gb);
            println!("  matches concurrent-lines form up to scalar mod Plucker: {:?}", nf_f.equal_up_to_scalar(&nf_e));
        }
        Err(e) => println!("positroid 222 FAILED after {:?}: {e}", t0.elapsed()),
    }

    // rank-3 matroid: parametrized implicitization in Gr(4,6)
    let params = VarTable::new((1..=6).map(|i| format!("x[{i}]")).chain((1..=6).map(|i| format!("y[{i}]")))).unwrap();
    let pp = |s: &str| Polynomial::parse(params.clone(), o.clone(), s).unwrap();
    let rows = vec![
        vec![pp("x[1]"), pp("0"), pp("0"), pp("0"), pp("-x[5]"), pp("x[6]")],
        vec![pp("0"), pp("x[2]"), pp("0"), pp("x[4]"), pp("0"), pp("-x[6]")],
        vec![pp("0"), pp("0"), pp("x[3]"), pp("-x[4]"), pp("x[5]"), pp("0")],
        vec![pp("y[1]"), pp("y[2]"), pp("y[3]"), pp("y[4]"), pp("y[5]"), pp("y[6]")],
    ];
    let spec2 = VarietySpec { k: 3, n: 6, r: 5, presentation: Presentation::Parametrized(rows) };
    let t0 = Instant::now();
    match chow_lam_eliminate(&spec2, &budget) {
        Ok(res) => {
            println!("rank-3 matroid ({:?}): deg {} coords {:?}", t0.elapsed(), res.degree, res.coords);
            let f = res.form().unwrap();
            println!("  form: {}", f);
            let qt = plucker_table("q", 4, 6);
            let expect = Polynomial::parse(qt, o.clone(),
                "q[1,2,3,4]*q[1,3,5,6]*q[2,4,5,6] + q[1,2,3,5]*q[1,2,4,6]*q[3,4,5,6] - q[1,2,3,5]*q[1,3,4,6]*q[2,4,5,6]").unwrap();
            let (nf_f, gb) = reduce_mod_plucker(f, 4, 6, "q", &budget).unwrap();
            let nf_e = normal_form(&expect, &gb);
            println!("  matches 3-term cubic up to scalar mod Plucker: {:?}", nf_f.equal_up_to_scalar(&nf_e));
        }
        Err(e) => println!("rank-3 matroid FAILED after {:?}: {e}", t0.elapsed()),
    }
}
