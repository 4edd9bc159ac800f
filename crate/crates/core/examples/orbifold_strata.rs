use hypersurface_link::cli::build_polynomial;
use hypersurface_link::orbifold::{fano, orbifold_order, pair_well_formed, singular_strata, torsion_status};

fn main() -> hypersurface_link::Result<()> {
    let (f, _) = build_polynomial(&[11, 49, 69, 128], "z0^17*z2 + z0*z1^5 + z1*z2^3 + z3^2", None)?;
    println!("Fano index {}", fano(f.ambient()).index);
    for s in singular_strata(&f)? {
        println!("  {:?}: Z/{} {}", s.indices, s.isotropy_order, s.incidence);
    }
    println!("orbifold order {}", orbifold_order(&f)?); // 37191 = 11 * 49 * 69
    println!("well-formed pair: {}", pair_well_formed(&f)?);
    println!("H2 torsion: {}", torsion_status(&f)?);

    // the edge {z0, z1} has isotropy 2 and lies in Z_f
    let (g, _) = build_polynomial(&[2, 2, 1, 1], "z0*z3 + z1*z3", None)?;
    println!("synthetic: well-formed pair {}", pair_well_formed(&g)?);
    Ok(())
}
