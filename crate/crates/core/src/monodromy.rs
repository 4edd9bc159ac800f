//! Milnor number and characteristic polynomial of the monodromy of a
//! weighted-homogeneous isolated singularity.
//!
//! The characteristic divisor is `∏ (Λ_{u_i} / v_i - 1)` where `d / w_i = u_i / v_i`
//! in lowest terms. Since `div(t^j - 1) = Λ_j`, an integral divisor `Σ a_j Λ_j`
//! is the polynomial `∏ (t^j - 1)^{a_j}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::divisor::{lambda_of, Divisor};
use crate::error::{Error, Result};
use crate::poly::WeightSystem;

/// `Δ(t) = ∏ (t^j - 1)^{e_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredCharPoly {
    factors: BTreeMap<u64, i64>,
}

impl FactoredCharPoly {
    pub fn new<I: IntoIterator<Item = (u64, i64)>>(factors: I) -> Self {
        let mut out = BTreeMap::new();
        for (j, e) in factors {
            *out.entry(j).or_insert(0) += e;
        }
        out.retain(|_, e| *e != 0);
        FactoredCharPoly { factors: out }
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn exponent(&self, j: u64) -> i64 {
        self.factors.get(&j).copied().unwrap_or(0)
    }

    /// `Σ e_j j`.
    pub fn degree(&self) -> i128 {
        self.factors
            .iter()
            .map(|(&j, &e)| j as i128 * e as i128)
            .sum()
    }
}

impl fmt::Display for FactoredCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_side = |positive: bool| -> String {
            let parts: Vec<String> = self
                .factors
                .iter()
                .rev()
                .filter(|(_, &e)| (e > 0) == positive)
                .map(|(&j, &e)| {
                    let base = if j == 1 {
                        "(t-1)".to_string()
                    } else {
                        format!("(t^{j}-1)")
                    };
                    match e.abs() {
                        1 => base,
                        k => format!("{base}^{k}"),
                    }
                })
                .collect();
            parts.join("")
        };
        let num = fmt_side(true);
        let den = fmt_side(false);
        let num = if num.is_empty() { "1".to_string() } else { num };
        if den.is_empty() {
            f.write_str(&num)
        } else {
            write!(f, "{num} / {den}")
        }
    }
}

/// Dense integer polynomial, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedPoly {
    coefficients: Vec<BigInt>,
}

impl ExpandedPoly {
    /// Trailing zeros are dropped; the zero polynomial has no coefficients.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        ExpandedPoly { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        ExpandedPoly::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        ExpandedPoly::from_i64(&[1])
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficients.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// Multiplies in place by `t^j - 1`.
    pub fn mul_binomial(&mut self, j: usize) {
        let n = self.coefficients.len();
        if n == 0 {
            return;
        }
        let mut out = vec![BigInt::zero(); n + j];
        for (k, c) in self.coefficients.iter().enumerate() {
            out[k] -= c;
            out[k + j] += c;
        }
        self.coefficients = out;
    }

    /// Exact division by `t^j - 1`.
    pub fn div_binomial(&mut self, j: usize) -> Result<()> {
        let n = self.coefficients.len();
        if j == 0 || n <= j {
            return if n == 0 { Ok(()) } else { Err(Error::InexactDivision) };
        }
        // p_k = q_{k-j} - q_k, solved from the top.
        let mut q = vec![BigInt::zero(); n - j];
        for k in (j..n).rev() {
            let above = if k < n - j { q[k].clone() } else { BigInt::zero() };
            q[k - j] = &self.coefficients[k] + above;
        }
        for (k, p) in self.coefficients.iter().take(j).enumerate() {
            let qk = q.get(k).cloned().unwrap_or_else(BigInt::zero);
            if *p != -qk {
                return Err(Error::InexactDivision);
            }
        }
        self.coefficients = q;
        Ok(())
    }

    pub fn mul(&self, other: &ExpandedPoly) -> ExpandedPoly {
        if self.is_zero() || other.is_zero() {
            return ExpandedPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExpandedPoly::new(out)
    }

    /// Multiplicity of `t = 1` as a root, by repeated exact division by `t - 1`.
    pub fn root_one_multiplicity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut m = 0;
        while p.eval_at_one().is_zero() {
            if p.div_binomial(1).is_err() {
                break;
            }
            m += 1;
        }
        m
    }

    /// Whether every coefficient fits in an IEEE double without loss.
    pub fn fits_in_f64(&self) -> bool {
        let limit = BigInt::from(1u64 << 53);
        self.coefficients.iter().all(|c| c.abs() <= limit)
    }
}

impl fmt::Display for ExpandedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `μ = ∏ (d / w_i - 1)`, required to be a positive integer.
pub fn milnor_number(system: &WeightSystem) -> Result<u64> {
    system.check_nondegenerate()?;
    let d = BigInt::from(system.degree());
    let mu = system
        .weights()
        .iter()
        .map(|&w| BigRational::new(d.clone(), BigInt::from(w)) - BigRational::one())
        .fold(BigRational::one(), |acc, x| acc * x);
    if !mu.is_integer() || !mu.is_positive() {
        return Err(Error::NonIntegralMilnorNumber { value: mu });
    }
    mu.to_integer()
        .to_u64()
        .ok_or(Error::BoundExceeded {
            value: u64::MAX,
            bound: u64::MAX,
        })
}

/// `∏ (Λ_{u_i} / v_i - 1)`, checked to be integral with degree `μ`.
pub fn characteristic_divisor(system: &WeightSystem) -> Result<Divisor> {
    let mu = milnor_number(system)?;
    let d = system.degree();
    let one = Divisor::one();
    let mut product = Divisor::one();
    for &w in system.weights() {
        let g = d.gcd(&w);
        let (u, v) = (d / g, w / g);
        let scaled = lambda_of(u)?.scale(&BigRational::new(BigInt::one(), BigInt::from(v)));
        product = &product * &(&scaled - &one);
    }
    if let Some((n, c)) = product.first_non_integral() {
        return Err(Error::IntegralityViolation {
            index: n.to_string(),
            coefficient: c.clone(),
        });
    }
    let degree = product.degree();
    if degree != BigRational::from_integer(BigInt::from(mu)) {
        return Err(Error::ConsistencyFailure {
            check: "divisor degree vs Milnor number".into(),
            left: degree.to_string(),
            right: mu.to_string(),
        });
    }
    Ok(product)
}

/// `Σ a_j Λ_j` ↦ `∏ (t^j - 1)^{a_j}`.
pub fn to_factored(divisor: &Divisor) -> Result<FactoredCharPoly> {
    let mut factors = Vec::new();
    for (n, c) in divisor.integer_terms()? {
        let j = n.to_u64().ok_or_else(|| Error::IndexTooLarge {
            index: n.to_string(),
        })?;
        let e = c.to_i64().ok_or_else(|| Error::NonIntegralCoefficient {
            index: n.to_string(),
        })?;
        factors.push((j, e));
    }
    Ok(FactoredCharPoly::new(factors))
}

/// Multiplies out the numerator, then divides exactly by each denominator factor.
pub fn expand(p: &FactoredCharPoly) -> Result<ExpandedPoly> {
    if p.degree() < 0 {
        return Err(Error::InexactDivision);
    }
    let mut out = ExpandedPoly::one();
    for (&j, &e) in p.factors().iter().filter(|(_, &e)| e > 0) {
        let j = to_usize(j)?;
        for _ in 0..e {
            out.mul_binomial(j);
        }
    }
    for (&j, &e) in p.factors().iter().filter(|(_, &e)| e < 0) {
        let j = to_usize(j)?;
        for _ in 0..(-e) {
            out.div_binomial(j)?;
        }
    }
    Ok(out)
}

fn to_usize(j: u64) -> Result<usize> {
    usize::try_from(j).map_err(|_| Error::IndexTooLarge {
        index: j.to_string(),
    })
}

/// Middle Betti number of the link: multiplicity of the eigenvalue 1.
pub fn middle_betti(divisor: &Divisor) -> Result<u64> {
    let m = divisor.unit_coefficient();
    if !m.is_integer() {
        return Err(Error::NonIntegralCoefficient { index: "1".into() });
    }
    m.to_integer()
        .to_u64()
        .ok_or_else(|| Error::ConsistencyFailure {
            check: "eigenvalue-1 multiplicity".into(),
            left: m.to_string(),
            right: "a nonnegative integer".into(),
        })
}

/// `Δ(t)` of the weight system, expanded.
pub fn characteristic_polynomial(system: &WeightSystem) -> Result<ExpandedPoly> {
    expand(&to_factored(&characteristic_divisor(system)?)?)
}

/// Weight system of `z_0^{a_0} + ... + z_n^{a_n}`: `d = lcm(a)`, `w_i = d / a_i`.
pub fn brieskorn_pham_system(exponents: &[u32]) -> Result<WeightSystem> {
    let d = exponents.iter().fold(1u64, |l, &a| l.lcm(&(a as u64)));
    let weights: Vec<u64> = exponents.iter().map(|&a| d / a as u64).collect();
    WeightSystem::from_raw(&weights, d)
}
