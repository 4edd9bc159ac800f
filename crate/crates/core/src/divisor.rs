//! Divisors of monic polynomials whose roots are roots of unity, written in the
//! basis `Λ_n = div(t^n - 1)` of the character ring.
//!
//! Multiplication follows `Λ_a Λ_b = gcd(a, b) Λ_lcm(a, b)`. The ring unit
//! `<1> = div(t - 1)` is `Λ_1`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    terms: BTreeMap<BigUint, BigRational>,
}

/// `Λ_n`.
pub fn lambda_of(n: u64) -> Result<Divisor> {
    if n == 0 {
        return Err(Error::NonPositiveIndex);
    }
    Ok(Divisor::lambda(BigUint::from(n)))
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    /// The ring unit `Λ_1`.
    pub fn one() -> Self {
        Divisor::lambda(BigUint::one())
    }

    fn lambda(n: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(n, BigRational::one());
        Divisor { terms }
    }

    /// Builds `Σ c_n Λ_n` from `(n, c_n)` pairs; repeated indices add up.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut out = Divisor::zero();
        for (n, c) in terms {
            if n == 0 {
                return Err(Error::NonPositiveIndex);
            }
            out.add_term(BigUint::from(n), c);
        }
        Ok(out)
    }

    /// Integer-coefficient shorthand for [`Divisor::from_terms`].
    pub fn from_int_terms(terms: &[(u64, i64)]) -> Result<Self> {
        Divisor::from_terms(
            terms
                .iter()
                .map(|&(n, c)| (n, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, n: BigUint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(n) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing index order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, n: u64) -> BigRational {
        self.terms
            .get(&BigUint::from(n))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, q: &BigRational) -> Divisor {
        if q.is_zero() {
            return Divisor::zero();
        }
        Divisor {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.clone(), c * q))
                .collect(),
        }
    }

    /// Total number of roots counted with multiplicity: `Σ c_n n`.
    pub fn degree(&self) -> BigRational {
        self.terms
            .iter()
            .map(|(n, c)| c * BigRational::from_integer(BigInt::from(n.clone())))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Multiplicity of the root 1: every `Λ_n` contains `<1>` once, so this is
    /// `Σ c_n`, the image under evaluation at the trivial character.
    pub fn unit_coefficient(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// First index whose coefficient is not an integer.
    pub(crate) fn first_non_integral(&self) -> Option<(&BigUint, &BigRational)> {
        self.terms.iter().find(|(_, c)| !c.is_integer())
    }

    /// Integer coefficients `(n, c_n)`, failing on the first fraction.
    pub fn integer_terms(&self) -> Result<Vec<(BigUint, BigInt)>> {
        self.terms
            .iter()
            .map(|(n, c)| {
                if c.is_integer() {
                    Ok((n.clone(), c.to_integer()))
                } else {
                    Err(Error::NonIntegralCoefficient {
                        index: n.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Rendering with the unit split out, e.g. `Λ60 + Λ20 + Λ12 - Λ4 - Λ3 + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (n, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = n.is_one();
            let coeff = if abs.is_one() {
                String::new()
            } else if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            if unit {
                if coeff.is_empty() {
                    out.push('1');
                } else {
                    out.push_str(coeff.trim_start_matches('(').trim_end_matches(')'));
                }
            } else {
                out.push_str(&coeff);
                out.push_str(&format!("Λ{n}"));
            }
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (n, c) in &rhs.terms {
            out.add_term(n.clone(), c.clone());
        }
        out
    }
}

impl Add for Divisor {
    type Output = Divisor;

    fn add(self, rhs: Divisor) -> Divisor {
        &self + &rhs
    }
}

impl Neg for &Divisor {
    type Output = Divisor;

    fn neg(self) -> Divisor {
        Divisor {
            terms: self.terms.iter().map(|(n, c)| (n.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

impl Sub for Divisor {
    type Output = Divisor;

    fn sub(self, rhs: Divisor) -> Divisor {
        &self - &rhs
    }
}

impl Mul for &Divisor {
    type Output = Divisor;

    fn mul(self, rhs: &Divisor) -> Divisor {
        let mut out = Divisor::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let g = a.gcd(b);
                let l = a.lcm(b);
                let c = ca * cb * BigRational::from_integer(BigInt::from(g));
                out.add_term(l, c);
            }
        }
        out
    }
}

impl Mul for Divisor {
    type Output = Divisor;

    fn mul(self, rhs: Divisor) -> Divisor {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn l(n: u64) -> Divisor {
        lambda_of(n).unwrap()
    }

    #[test]
    fn lambda_constructor() {
        assert_eq!(l(1), Divisor::one());
        assert_eq!(l(60).coefficient(60), q(1, 1));
        assert_eq!(lambda_of(0), Err(Error::NonPositiveIndex));
    }

    #[test]
    fn additive_structure() {
        assert!((&l(4) + &l(4).scale(&q(-1, 1))).is_zero());
        let third = l(20).scale(&q(1, 3));
        assert_eq!(third.coefficient(20), q(1, 3));
        let sum = &(&l(3) + &l(4)) + &l(3);
        assert_eq!(sum, Divisor::from_int_terms(&[(3, 2), (4, 1)]).unwrap());
    }

    #[test]
    fn gcd_lcm_products() {
        assert_eq!(&l(2) * &l(2), l(2).scale(&q(2, 1)));
        assert_eq!(&l(4) * &l(6), l(12).scale(&q(2, 1)));
        assert_eq!(&l(1) * &l(7), l(7));
    }

    #[test]
    fn degree_sixty_product() {
        let one = Divisor::one();
        let product = [
            &l(20).scale(&q(1, 3)) - &one,
            &l(4) - &one,
            &l(60).scale(&q(1, 17)) - &one,
            &l(3) - &one,
        ]
        .iter()
        .fold(Divisor::one(), |acc, f| &acc * f);
        let expected =
            Divisor::from_int_terms(&[(60, 1), (20, 1), (12, 1), (4, -1), (3, -1), (1, 1)])
                .unwrap();
        assert_eq!(product, expected);
        assert_eq!(product.render(), "Λ60 + Λ20 + Λ12 - Λ4 - Λ3 + 1");
    }

    #[test]
    fn degrees_and_unit_coefficients() {
        let d60 =
            Divisor::from_int_terms(&[(60, 1), (20, 1), (12, 1), (4, -1), (3, -1), (1, 1)])
                .unwrap();
        let d256 = Divisor::from_int_terms(&[(256, 1), (2, -1), (1, 1)]).unwrap();
        assert_eq!(d60.degree(), q(86, 1));
        assert_eq!(d256.degree(), q(255, 1));
        assert_eq!(Divisor::zero().degree(), q(0, 1));
        assert_eq!(d60.unit_coefficient(), q(2, 1));
        assert_eq!(d256.unit_coefficient(), q(1, 1));
        assert_eq!(l(5).unit_coefficient(), q(1, 1));
    }

    #[test]
    fn integrality() {
        assert!(l(3).is_integral());
        let half = l(3).scale(&q(1, 2));
        assert!(!half.is_integral());
        assert!(matches!(
            half.integer_terms(),
            Err(Error::NonIntegralCoefficient { .. })
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(Divisor::zero().render(), "0");
        assert_eq!(
            Divisor::from_int_terms(&[(256, 1), (2, -1), (1, 1)]).unwrap().render(),
            "Λ256 - Λ2 + 1"
        );
        assert_eq!((-&l(1)).render(), "-1");
        assert_eq!(l(20).scale(&q(1, 3)).render(), "(1/3)Λ20");
    }
}
