//! The family attaining φ-dimension 2r, and the module that witnesses it.

use nakphi::modcat;
use nakphi::{sharpness_family, Analysis};

fn main() -> nakphi::Result<()> {
    for n in 3..=8 {
        let a = sharpness_family(n)?;
        let an = Analysis::new(&a);
        let witness = modcat::module(&a, n, n + 1)?;
        let terminal = modcat::syzygy_power(&a, witness, 2 * n - 2).expect("finite pdim");
        println!(
            "{a}: r {}, phi_dim {}, findim {}, pdim({witness}) {}, terminal {}",
            an.r(),
            an.phi_dim,
            an.findim,
            modcat::pdim(&a, witness),
            an.classify_terminal_projective(terminal)?
        );
    }
    Ok(())
}
