//! Follow the minimal projective resolution of every indecomposable.

use nakphi::modcat::{self, TrailOutcome};
use nakphi::Algebra;

fn main() -> nakphi::Result<()> {
    let a = Algebra::from_kupisch(&[3, 5, 4, 5, 4])?;
    for m in modcat::all_indecomposables(&a) {
        let trail = modcat::resolution_trail(&a, m);
        let path: Vec<String> = trail.steps.iter().map(|s| s.module.to_string()).collect();
        let end = match trail.outcome {
            TrailOutcome::FiniteAt(k) => format!("pdim {k}"),
            TrailOutcome::PeriodicEntryAt(t) => format!("rho {t}"),
        };
        println!("{:<6} {:<20} {end}", m.to_string(), path.join(" -> "));
    }
    println!("gldim {}, findim {}", modcat::gldim(&a), modcat::findim(&a));
    Ok(())
}
