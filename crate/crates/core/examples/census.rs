//! Exhaustive run over small algebras, with CSV output.
//!
//!     cargo run --release --example census -- 5 12 census.csv

use std::path::PathBuf;

use nakphi::{run_census, CensusParams};

fn main() -> nakphi::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(4);
    let max: usize = args
        .get(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2 * n + 2);

    let mut params = CensusParams::new(3..=n, max);
    params.output = args.get(2).map(PathBuf::from);
    let out = run_census(&params)?;

    let s = &out.summary;
    println!(
        "{} algebras: {} finite gldim, {} infinite",
        s.algebras, s.finite_gldim, s.infinite_gldim
    );
    println!("phi_dim histogram {:?}", s.phi_histogram);
    println!("max phi_dim/2r {:.3}", s.max_phi_ratio);
    for (k, f) in &out.failures {
        println!("FAIL {k}: {f}");
    }
    Ok(())
}
