//! Weight systems, the polynomial parser and the gcd conditions on `P(w)`.
use hypersurface_link::cli::parse_polynomial;
use hypersurface_link::poly::{
    count_monomials, divisibility_condition, is_well_formed_space, quasi_degree, restrict, WeightSystem, Weights,
};

fn main() -> hypersurface_link::Result<()> {
    let w = Weights::new(&[9, 15, 17, 20])?;
    let parsed = parse_polynomial("z0^5*z1 + z0*z2^3 + z1^4 + z3^3", None)?;
    let f = quasi_degree(parsed.support, &w)?;
    println!("f = {f}, degree {}", f.degree());

    println!("well-formed P(w): {}", is_well_formed_space(&w));
    println!("divisibility: {}", divisibility_condition(f.ambient()));
    // P(1,2,2,2) is not well-formed
    println!("P(1,2,2,2) well-formed: {}", is_well_formed_space(&Weights::new(&[1, 2, 2, 2])?));

    println!("f on {{z1, z3}}: {}", restrict(&f, &[1, 3])?);
    println!("monomials of degree 60: {}", count_monomials(w.as_slice(), 60));

    // gcd 2, rejected
    if let Err(e) = WeightSystem::from_raw(&[2, 4, 6, 8], 24) {
        println!("{e}");
    }
    Ok(())
}
