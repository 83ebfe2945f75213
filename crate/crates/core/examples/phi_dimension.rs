//! φ of single modules and of the sum of all indecomposables.

use nakphi::modcat;
use nakphi::{Algebra, PhiEngine, Rho};

fn main() -> nakphi::Result<()> {
    let a = Algebra::from_relations(8, &[(1, 11), (4, 11), (5, 12), (7, 12)])?;
    let engine = PhiEngine::new(&a);

    let all = modcat::all_indecomposables(&a);
    let trace = engine.trace(&all);
    println!(
        "{a}: phi_dim {}, alpha trace {:?}",
        trace.phi, trace.alpha_trace
    );

    let per = engine.omega_periodic();
    println!("{} periodic modules", per.set.len());
    for (m, next) in &per.perm {
        println!("  Ω({m}) = {next}");
    }

    let mut by_rho = std::collections::BTreeMap::<usize, usize>::new();
    for &m in &all {
        if let Rho::Defined(t) = engine.rho(m) {
            *by_rho.entry(t).or_default() += 1;
        }
    }
    println!("modules by rho: {by_rho:?}");
    Ok(())
}
