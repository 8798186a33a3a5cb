use chow_lam::grassmann::*;
use chow_lam::matrix;
use chow_lam::poly::{MonomialOrder, Polynomial};
use chow_lam::rational::Rational;
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(2);
    let table = plucker_table("q", 4, 9);
    let o = MonomialOrder::DegRevLex;
    let display = Polynomial::parse(table.clone(), o.clone(),
        "q[1,2,3,4]*q[1,2,3,7]*q[5,6,8,9] + q[1,2,3,4]*q[1,2,3,6]*q[5,7,8,9] \
         - q[1,2,3,5]*q[1,2,3,6]*q[4,7,8,9] - q[1,2,3,5]*q[1,2,3,7]*q[4,6,8,9]").unwrap();
    for trial in 0..5 {
        let x: Vec<Vec<Rational>> = (0..4).map(|_| (0..9).map(|_| Rational::from_int(rng.gen_range(-9i64..=9))).collect()).collect();
        if matrix::rank(&x) < 4 { continue; }
        let pv = maximal_minors_rational(&x, CoordKind::Dual).unwrap();
        let point: Vec<Rational> = table.names().iter().map(|nm| { let (_, s) = parse_plucker_var(nm).unwrap(); pv.get(&s) }).collect();
        let disp_val = display.evaluate(&point).unwrap();
        let row = |c: u16, d: u16| vec![pv.get(&[2,3,c,d]), -pv.get(&[1,3,c,d]), pv.get(&[1,2,c,d])];
        let det = matrix::det_rational(&[row(4,5), row(6,7), row(8,9)]).unwrap();
        println!("trial {trial}: det = {det}");
        println!("        disp = {disp_val}");
        // also check the intersection-point claim: p = q2345 x1 - q1345 x2 + q1245 x3 lies on span(x4,x5)
        let p: Vec<Rational> = (0..4).map(|r| {
            &(&pv.get(&[2,3,4,5]) * &x[r][0]) - &(&pv.get(&[1,3,4,5]) * &x[r][1]) + (&pv.get(&[1,2,4,5]) * &x[r][2])
        }).collect();
        let mut m45 = vec![p.clone()];
        m45.push((0..4).map(|r| x[r][3].clone()).collect());
        m45.push((0..4).map(|r| x[r][4].clone()).collect());
        println!("        p in span(x4,x5)? rank = {}", matrix::rank(&m45));
    }
}
