//! Independent characteristic polynomial for Brieskorn–Pham polynomials
//! `z_0^{a_0} + ... + z_n^{a_n}`.
//!
//! The monodromy eigenvalues are `∏ ζ_{a_i}^{k_i}` over `0 < k_i < a_i`. Each
//! eigenvalue is tracked as an exact rotation number `Σ k_i / a_i mod 1`, the
//! multiset is grouped by order, and `Δ(t)` is emitted as a product of
//! cyclotomic polynomials. Nothing here touches the divisor ring or the
//! binomial expansion used by [`crate::monodromy`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monodromy::ExpandedPoly;

/// Default cap on `∏ (a_i - 1)`.
pub const DEFAULT_BOUND: u64 = 5000;

pub fn bp_oracle(exponents: &[u32]) -> Result<ExpandedPoly> {
    bp_oracle_bounded(exponents, DEFAULT_BOUND)
}

pub fn bp_oracle_bounded(exponents: &[u32], bound: u64) -> Result<ExpandedPoly> {
    for (index, &value) in exponents.iter().enumerate() {
        if value < 2 {
            return Err(Error::InvalidExponent { index, value });
        }
    }
    let mut count: u64 = 1;
    for &a in exponents {
        count = count.saturating_mul(a as u64 - 1);
    }
    if count > bound {
        return Err(Error::BoundExceeded {
            value: count,
            bound,
        });
    }

    let common = exponents.iter().fold(1u64, |l, &a| l.lcm(&(a as u64)));
    // multiplicity of each rotation number p / common
    let mut rotations: BTreeMap<u64, u64> = BTreeMap::new();
    let mut ks = vec![1u32; exponents.len()];
    loop {
        let num = ks
            .iter()
            .zip(exponents)
            .map(|(&k, &a)| k as u64 * (common / a as u64))
            .sum::<u64>()
            % common;
        *rotations.entry(num).or_insert(0) += 1;
        // odometer over 0 < k_i < a_i
        let mut i = 0;
        loop {
            if i == ks.len() {
                return assemble(common, &rotations);
            }
            ks[i] += 1;
            if ks[i] < exponents[i] {
                break;
            }
            ks[i] = 1;
            i += 1;
        }
    }
}

fn assemble(common: u64, rotations: &BTreeMap<u64, u64>) -> Result<ExpandedPoly> {
    // order q -> (numerator -> multiplicity)
    let mut by_order: BTreeMap<u64, BTreeMap<u64, u64>> = BTreeMap::new();
    for (&num, &mult) in rotations {
        let g = num.gcd(&common);
        let q = common / g;
        by_order.entry(q).or_default().insert(num / g, mult);
    }
    let mut result = vec![BigInt::one()];
    let mut cyclotomics: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for (&q, nums) in &by_order {
        let mult = *nums.values().next().unwrap_or(&0);
        let primitive = (0..q).filter(|p| p.gcd(&q) == 1).count();
        if nums.len() != primitive || nums.values().any(|&m| m != mult) {
            return Err(Error::ConsistencyFailure {
                check: "Galois stability of the eigenvalue multiset".into(),
                left: format!("order {q}: {nums:?}"),
                right: format!("{primitive} equal multiplicities"),
            });
        }
        let phi = cyclotomic(q, &mut cyclotomics);
        for _ in 0..mult {
            result = poly_mul(&result, &phi);
        }
    }
    Ok(ExpandedPoly::new(result))
}

fn cyclotomic(q: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&q) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); q as usize + 1];
    num[0] = -BigInt::one();
    num[q as usize] = BigInt::one();
    for d in (1..q).filter(|d| q.is_multiple_of(*d)) {
        let phi_d = cyclotomic(d, memo);
        num = poly_div_monic(&num, &phi_d);
    }
    memo.insert(q, num.clone());
    num
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Long division by a monic divisor; the remainder is discarded (always zero
/// for cyclotomic factors of `t^q - 1`).
fn poly_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}
