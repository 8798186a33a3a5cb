use chow_lam::grassmann::*;
use chow_lam::matrix;
use chow_lam::poly::{MonomialOrder, Polynomial};
use chow_lam::rational::Rational;
use rand::{Rng, SeedableRng};

fn q(n: i64) -> Rational { Rational::from_int(n) }

fn main() {
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
    let table = plucker_table("q", 4, 9);
    let o = MonomialOrder::DegRevLex;
    let display = Polynomial::parse(table.clone(), o.clone(),
        "q[1,2,3,4]*q[1,2,3,7]*q[5,6,8,9] + q[1,2,3,4]*q[1,2,3,6]*q[5,7,8,9] \
         - q[1,2,3,5]*q[1,2,3,6]*q[4,7,8,9] - q[1,2,3,5]*q[1,2,3,7]*q[4,6,8,9]").unwrap();
    for trial in 0..8 {
        let mut x = vec![vec![Rational::zero(); 9]; 4];
        let y: Vec<Vec<Rational>> = (0..3).map(|_| (0..4).map(|_| q(rng.gen_range(-9..=9))).collect()).collect();
        for r in 0..4 { for c in 0..3 { x[r][c] = y[c][r].clone(); } }
        let comb = |a: i64, b: i64, c: i64, y: &Vec<Vec<Rational>>| -> Vec<Rational> {
            (0..4).map(|r| &(&q(a) * &y[0][r]) + &(&(&q(b) * &y[1][r]) + &(&q(c) * &y[2][r]))).collect()
        };
        let u = comb(rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9), &y);
        let v = comb(rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9), &y);
        for line in 0..3 {
            let a = q(rng.gen_range(-9..=9)); let b = q(rng.gen_range(-9..=9));
            // intersection point on the common transversal line in the plane
            let pt: Vec<Rational> = (0..4).map(|r| &(&a * &u[r]) + &(&b * &v[r])).collect();
            // generic direction off the plane
            let z: Vec<Rational> = (0..4).map(|_| q(rng.gen_range(-9..=9))).collect();
            // two generic points of the line span(pt, z): pt + z and pt + 2z
            for r in 0..4 {
                x[r][3 + 2*line] = &pt[r] + &z[r];
                x[r][4 + 2*line] = &pt[r] + &(&q(2) * &z[r]);
            }
        }
        if matrix::rank(&x) < 4 { continue; }
        let pv = maximal_minors_rational(&x, CoordKind::Dual).unwrap();
        let point: Vec<Rational> = table.names().iter().map(|nm| { let (_, s) = parse_plucker_var(nm).unwrap(); pv.get(&s) }).collect();
        let disp_val = display.evaluate(&point).unwrap();
        let row = |c: u16, d: u16| vec![pv.get(&[2,3,c,d]), -pv.get(&[1,3,c,d]), pv.get(&[1,2,c,d])];
        let det = matrix::det_rational(&[row(4,5), row(6,7), row(8,9)]).unwrap();
        println!("collinear trial {trial}: det = {det}   display = {disp_val}");
    }
}
