//! Fano index 1 weight systems up to a bound, keeping rows with integral
//! Milnor number.
use hypersurface_link::cli::run_scan;

fn main() -> hypersurface_link::Result<()> {
    let max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    let mut total = 0;
    run_scan(max, 1, 4, |row| {
        total += 1;
        if let Some(mu) = row.milnor_number {
            println!("{:?} d={} mu={} b2={:?}", row.weights, row.degree, mu, row.b2);
        }
        Ok(())
    })?;
    println!("{total} weight systems");
    Ok(())
}
