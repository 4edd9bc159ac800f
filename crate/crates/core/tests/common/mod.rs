#![allow(dead_code)]

use hypersurface_link::cli::build_polynomial;
use hypersurface_link::poly::{WeightSystem, WeightedPolynomial};
use num_integer::Integer;
use num_rational::Rational64;
use rand::Rng;

pub const F60: &str = "z0^5*z1 + z0*z2^3 + z1^4 + z3^3";
pub const F256_1: &str = "z0^17*z2 + z0*z1^5 + z1*z2^3 + z3^2";
pub const F256_2: &str = "z0^17*z1 + z0*z2^3 + z1^5*z2 + z3^2";

pub fn poly(weights: &[i64], expr: &str) -> WeightedPolynomial {
    build_polynomial(weights, expr, None).unwrap().0
}

pub fn f60() -> WeightedPolynomial {
    poly(&[9, 15, 17, 20], F60)
}

pub fn f256_1() -> WeightedPolynomial {
    poly(&[11, 49, 69, 128], F256_1)
}

pub fn f256_2() -> WeightedPolynomial {
    poly(&[13, 35, 81, 128], F256_2)
}

pub fn quadric() -> WeightedPolynomial {
    poly(&[1, 1, 1, 1], "z0^2 + z1^2 + z2^2 + z3^2")
}

/// Exponent matrix row for each variable of an invertible polynomial built
/// from Fermat, chain and loop blocks.
fn random_invertible(rng: &mut impl Rng, vars: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; vars]; vars];
    let mut start = 0;
    while start < vars {
        let len = rng.gen_range(1..=vars - start);
        let kind = if len == 1 { 0 } else { rng.gen_range(1..=2) };
        for k in 0..len {
            let i = start + k;
            rows[i][i] = rng.gen_range(2..=7);
            match kind {
                1 if k + 1 < len => rows[i][i + 1] = 1,
                2 => rows[i][start + (k + 1) % len] = 1,
                _ => {}
            }
        }
        start += len;
    }
    rows
}

/// Solves `A q = 1` by Gauss-Jordan elimination.
fn solve(a: &[Vec<i64>]) -> Option<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational64::from_integer(x))
                .chain(std::iter::once(Rational64::from_integer(1)))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Rational64::from_integer(0))?;
        m.swap(c, p);
        let pivot = m[c][c];
        for x in m[c].iter_mut() {
            *x /= pivot;
        }
        for r in 0..n {
            if r != c {
                let factor = m[r][c];
                for k in 0..=n {
                    let v = m[c][k];
                    m[r][k] -= factor * v;
                }
            }
        }
    }
    Some(m.iter().map(|r| r[n]).collect())
}

/// Normalized weight system of a random invertible polynomial in `vars`
/// variables, together with its monomial support.
pub fn random_system(rng: &mut impl Rng, vars: usize) -> (WeightSystem, Vec<Vec<u32>>) {
    loop {
        let a = random_invertible(rng, vars);
        let Some(q) = solve(&a) else { continue };
        let d = q.iter().fold(1i64, |l, x| l.lcm(x.denom()));
        let w: Vec<u64> = q.iter().map(|x| (x * d).to_integer() as u64).collect();
        if w.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 || w.iter().any(|&x| x == 0 || x >= d as u64) {
            continue;
        }
        let support = a.iter().map(|r| r.iter().map(|&x| x as u32).collect()).collect();
        return (WeightSystem::from_raw(&w, d as u64).unwrap(), support);
    }
}
