//! Arithmetic with the divisors `Λ_n` of roots of unity.
use hypersurface_link::divisor::{lambda_of, Divisor};

fn main() -> hypersurface_link::Result<()> {
    let a = lambda_of(4)?;
    let b = lambda_of(6)?;
    // Λ_a Λ_b = gcd(a,b) Λ_lcm(a,b)
    println!("Λ4 * Λ6 = {}", &a * &b);

    let one = Divisor::one();
    let x = &(&lambda_of(60)? * &one) - &lambda_of(3)?;
    println!("x = {x}, degree {}, unit coefficient {}", x.degree(), x.unit_coefficient());

    let sixty = Divisor::from_int_terms(&[(60, 1), (20, 1), (12, 1), (4, -1), (3, -1), (1, 1)])?;
    println!("{sixty}  integral: {}", sixty.is_integral());
    Ok(())
}
