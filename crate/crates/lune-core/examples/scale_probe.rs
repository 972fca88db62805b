use lune_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn max_intermediate(roots: &[Complex64]) -> f64 {
    let mut p = MonicPolynomial::one();
    let mut worst = 1.0f64;
    for &r in roots {
        p = p.mul_linear(r);
        worst = worst.max(p.max_coeff_norm());
    }
    worst
}

fn bit_reverse_order(n: usize) -> Vec<usize> {
    let bits = usize::BITS - (n.max(2) - 1).leading_zeros();
    let mut order: Vec<usize> = (0..(1usize << bits))
        .map(|i| i.reverse_bits() >> (usize::BITS - bits))
        .filter(|&r| r < n)
        .collect();
    order.dedup();
    order
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut worst_sorted = 0.0f64;
    let mut worst_interleaved = 0.0f64;
    for _ in 0..50 {
        let mut angles: Vec<f64> = (0..30).map(|_| rng.random_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let roots: Vec<Complex64> = angles.iter().map(|&a| Complex64::from_polar(1.0, a)).collect();
        let final_scale = MonicPolynomial::from_roots(&roots).max_coeff_norm();
        let s = max_intermediate(&roots);
        let order = bit_reverse_order(roots.len());
        let shuffled: Vec<Complex64> = order.iter().map(|&i| roots[i]).collect();
        let t = max_intermediate(&shuffled);
        worst_sorted = worst_sorted.max(s / final_scale);
        worst_interleaved = worst_interleaved.max(t / final_scale);
    }
    println!("worst intermediate/final ratio: sorted={worst_sorted:.3e} interleaved={worst_interleaved:.3e}");
}
