//! Run every check on one algebra and print the table.
//!
//!     cargo run --example verify -- 11,13,12,11,12,13,12,12

use nakphi::algebra::parse_kupisch;
use nakphi::{Algebra, Analysis};

fn main() -> nakphi::Result<()> {
    let series = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,5,4,5,4".into());
    let a = Algebra::from_kupisch(&parse_kupisch(&series)?)?;
    let an = Analysis::new(&a);
    println!(
        "{a}: gldim {}, findim {}, phi_dim {}, gustafson d {}",
        an.gldim, an.findim, an.phi_dim, an.gustafson.d
    );
    for check in an.verify_all() {
        println!("{:<32} {:<4} {}", check.name, check.status, check.evidence);
    }
    Ok(())
}
