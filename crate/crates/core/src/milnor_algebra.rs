//! Graded dimensions of the Milnor algebra `C[z] / (∂f)` and the quantities
//! read off from them: primitive Hodge numbers, signature, branch-curve genus.
//!
//! For a quasi-homogeneous isolated singularity the partials form a regular
//! sequence of degrees `d - w_i`, so the Poincaré series is the polynomial
//! `∏ (1 - t^{d - w_i}) / (1 - t^{w_i})` regardless of coefficients.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{count_monomials, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    coefficients: Vec<u64>,
}

impl PoincareSeries {
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Socle degree `T = Σ (d - 2 w_i)`.
    pub fn top_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `dim M(f)_k`, zero outside `[0, T]`.
    pub fn coefficient(&self, k: i64) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coefficients.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `P(1)`, the total dimension.
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }
}

pub fn poincare_series(system: &WeightSystem) -> Result<PoincareSeries> {
    series_for(system.weights(), system.degree())
}

/// Same as [`poincare_series`] on raw weights, which need not be normalized.
pub(crate) fn series_for(weights: &[u64], degree: u64) -> Result<PoincareSeries> {
    if let Some(&weight) = weights.iter().find(|&&w| w >= degree) {
        return Err(Error::DegenerateDegree { degree, weight });
    }
    let mut series: Vec<i128> = vec![1];
    for &w in weights {
        let a = (degree - w) as usize;
        let mut next = vec![0i128; series.len() + a];
        for (k, &c) in series.iter().enumerate() {
            next[k] += c;
            next[k + a] -= c;
        }
        series = next;
    }
    for &w in weights {
        series = divide_one_minus_power(&series, w as usize)?;
    }
    let coefficients = series
        .into_iter()
        .map(|c| {
            c.to_u64().ok_or_else(|| Error::ConsistencyFailure {
                check: "Poincaré series coefficient".into(),
                left: c.to_string(),
                right: "a nonnegative integer".into(),
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(PoincareSeries { coefficients })
}

/// Exact quotient `p / (1 - t^w)`.
fn divide_one_minus_power(p: &[i128], w: usize) -> Result<Vec<i128>> {
    if p.len() <= w {
        return Err(Error::InexactDivision);
    }
    let len = p.len() - w;
    let mut q = vec![0i128; len];
    for k in 0..len {
        let prev = if k >= w { q[k - w] } else { 0 };
        q[k] = p[k].checked_add(prev).ok_or(Error::BoundExceeded {
            value: u64::MAX,
            bound: u64::MAX,
        })?;
    }
    for (k, &pk) in p.iter().enumerate().skip(len) {
        let qk = q.get(k).copied().unwrap_or(0);
        let lower = if k >= w { q[k - w] } else { 0 };
        if pk != qk - lower {
            return Err(Error::InexactDivision);
        }
    }
    Ok(q)
}

pub fn graded_dim(system: &WeightSystem, k: i64) -> Result<u64> {
    Ok(poincare_series(system)?.coefficient(k))
}

/// `h^{i, n-i-1}_0 = dim M(f)_{(i+1) d - |w|}` for `i = 0, ..., n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeNumber {
    pub p: usize,
    pub q: usize,
    pub value: u64,
}

pub fn hodge_numbers(system: &WeightSystem) -> Result<Vec<HodgeNumber>> {
    let series = poincare_series(system)?;
    Ok(hodge_from_series(system, &series))
}

pub(crate) fn hodge_from_series(system: &WeightSystem, series: &PoincareSeries) -> Vec<HodgeNumber> {
    let n = system.dimension();
    let d = system.degree() as i64;
    let total = system.total_weight() as i64;
    (0..n)
        .map(|i| HodgeNumber {
            p: i,
            q: n - i - 1,
            value: series.coefficient((i as i64 + 1) * d - total),
        })
        .collect()
}

/// Eigenvalue-1 multiplicity of the monodromy from the Hodge side: the sum of
/// the primitive Hodge numbers. Under the Fano condition this is `h^{1,1}_0`
/// for surfaces.
pub fn betti_from_hodge(hodge: &[HodgeNumber]) -> u64 {
    hodge.iter().map(|h| h.value).sum()
}

/// `τ = 1 + 2 dim M(f)_{d-|w|} - dim M(f)_{2d-|w|}` for a surface.
pub fn signature(system: &WeightSystem) -> Result<i64> {
    if system.len() != 4 {
        return Err(Error::WrongDimension {
            expected: 4,
            found: system.len(),
        });
    }
    let series = poincare_series(system)?;
    Ok(signature_from_series(system, &series))
}

pub(crate) fn signature_from_series(system: &WeightSystem, series: &PoincareSeries) -> i64 {
    let d = system.degree() as i64;
    let total = system.total_weight() as i64;
    1 + 2 * series.coefficient(d - total) as i64 - series.coefficient(2 * d - total) as i64
}

/// Genus of the curve `f_0 = 0` in a weighted projective plane:
/// `dim M(f_0)_{d - |w|}`.
pub fn genus_branch_curve(weights: &[u64], degree: u64) -> Result<u64> {
    if weights.len() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: weights.len(),
        });
    }
    let series = series_for(weights, degree)?;
    let k = degree as i64 - weights.iter().sum::<u64>() as i64;
    let genus = series.coefficient(k);
    let least_partial = weights.iter().map(|&w| degree - w).min().unwrap_or(0) as i64;
    if k < least_partial {
        let raw = count_monomials(weights, k);
        if raw != genus.into() {
            return Err(Error::ConsistencyFailure {
                check: "genus vs monomial count".into(),
                left: genus.to_string(),
                right: raw.to_string(),
            });
        }
    }
    Ok(genus)
}
