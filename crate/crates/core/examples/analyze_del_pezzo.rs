//! Full report, text and JSON.
//!
//!     cargo run --example analyze_del_pezzo
//!     cargo run --example analyze_del_pezzo -- json
use hypersurface_link::cli::{build_polynomial, render_json, render_text};
use hypersurface_link::registry::Registry;
use hypersurface_link::report::analyze;

fn main() -> hypersurface_link::Result<()> {
    let json = std::env::args().nth(1).as_deref() == Some("json");
    let registry = Registry::builtin();
    for (w, poly) in [
        (&[9, 15, 17, 20][..], "z0^5*z1 + z0*z2^3 + z1^4 + z3^3"),
        (&[1, 1, 1, 1][..], "z0^2 + z1^2 + z2^2 + z3^2"),
        (&[1, 1, 1, 1][..], "z0^3 + z1^3 + z2^3 + z3^3"),
    ] {
        let (f, _) = build_polynomial(w, poly, None)?;
        let report = analyze(&f, &registry)?;
        if json {
            println!("{}", render_json(&report)?);
        } else {
            println!("{}", render_text(&report));
        }
    }
    Ok(())
}
