//! Milnor number, characteristic divisor and characteristic polynomial of the
//! monodromy for the three degree-60/256 surfaces.
use hypersurface_link::monodromy::{characteristic_divisor, expand, middle_betti, milnor_number, to_factored};
use hypersurface_link::poly::WeightSystem;

fn main() -> hypersurface_link::Result<()> {
    for (w, d) in [([9, 15, 17, 20], 60), ([11, 49, 69, 128], 256), ([13, 35, 81, 128], 256)] {
        let ws = WeightSystem::from_raw(&w, d)?;
        let div = characteristic_divisor(&ws)?;
        let delta = to_factored(&div)?;
        println!("{w:?} d={d}");
        println!("  mu   = {}", milnor_number(&ws)?);
        println!("  div  = {div}");
        println!("  Δ(t) = {delta}");
        println!("  b2   = {}", middle_betti(&div)?);
        let e = expand(&delta)?;
        println!("  Δ(1) = {}, root-1 multiplicity {}", e.eval_at_one(), e.root_one_multiplicity());
    }
    Ok(())
}
