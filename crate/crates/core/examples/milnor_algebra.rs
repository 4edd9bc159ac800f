use hypersurface_link::milnor_algebra::{genus_branch_curve, hodge_numbers, poincare_series, signature};
use hypersurface_link::poly::WeightSystem;

fn main() -> hypersurface_link::Result<()> {
    let ws = WeightSystem::from_raw(&[9, 15, 17, 20], 60)?;
    let p = poincare_series(&ws)?;
    println!("P(t) has {} terms up to t^{}, P(1) = {}", p.coefficients().iter().filter(|&&c| c > 0).count(), p.top_degree(), p.total());
    println!("symmetric: {}", p.is_symmetric());
    for h in hodge_numbers(&ws)? {
        println!("h^{{{},{}}}_0 = {}", h.p, h.q, h.value);
    }
    println!("signature {}", signature(&ws)?);
    // z3^3 splits off; the branch curve lives in P(9,15,17)
    println!("genus {}", genus_branch_curve(&[9, 15, 17], 60)?);
    Ok(())
}
