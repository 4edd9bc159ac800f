//! The Brieskorn-Pham oracle against the general pipeline.
//!
//!     cargo run --example brieskorn_pham -- 2 3 5 7
use hypersurface_link::monodromy::{brieskorn_pham_system, characteristic_polynomial};
use hypersurface_link::oracle::bp_oracle;

fn main() -> hypersurface_link::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let exps = if args.is_empty() { vec![2, 3, 5] } else { args };
    let ws = brieskorn_pham_system(&exps)?;
    let general = characteristic_polynomial(&ws)?;
    let oracle = bp_oracle(&exps)?;
    println!("exponents {exps:?} -> weights {:?}, d = {}", ws.weights(), ws.degree());
    println!("pipeline: {general}");
    println!("oracle:   {oracle}");
    assert_eq!(general, oracle);
    // Δ(1) = ±1 exactly when the link is a homology sphere
    println!("homology sphere: {}", general.eval_at_one().magnitude() == &1u32.into());
    Ok(())
}
