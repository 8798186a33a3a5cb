use chow_lam::chowlam::*;
use chow_lam::matrix;
use chow_lam::rational::Rational;
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(41);
    for trial in 0..3 {
        let x: Vec<Vec<Rational>> = (0..4).map(|_| (0..10).map(|_| Rational::from_int(rng.gen_range(-20i64..=20))).collect()).collect();
        let c = catalan_chow_lam(4, &x).unwrap();
        let g = gram_of_wedges(&x).unwrap();
        let d = matrix::det_rational(&g).unwrap();
        println!("trial {trial}: C = {c}");
        println!("         det/2 = {}", &d / &Rational::from_int(2));
        println!("         ratio C/(det/2) = {}", &c / &(&d / &Rational::from_int(2)));
    }
}
