//! Build an algebra from either presentation and inspect its structure.
//!
//!     cargo run --example presentations -- 1:11;4:11;5:12;7:12 8

use nakphi::algebra::{parse_relations, Algebra};
use nakphi::DeltaSystem;

fn main() -> nakphi::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = match args.as_slice() {
        [rels, n] => Algebra::from_relations(
            n.parse()
                .map_err(|_| nakphi::Error::Parse(format!("bad vertex count {n:?}")))?,
            &parse_relations(rels)?,
        )?,
        _ => Algebra::from_kupisch(&[3, 5, 4, 5, 4])?,
    };

    println!("kupisch    {a}");
    println!("relations  {}", a.relations_string());
    for class in a.projective_classes() {
        println!(
            "class {}    members {:?}, socle S{}",
            class.class_index, class.members, class.socle_vertex
        );
    }
    let (s, s_prime) = a.socle_marks();
    println!("S = {s:?}, S' = {s_prime:?}");

    let ds = DeltaSystem::new(&a);
    for (j, d) in ds.deltas().iter().enumerate() {
        println!("Δ{} = {}", j + 1, d.display(&a));
    }
    println!("Δ-level kupisch {:?}", ds.delta_kupisch());
    Ok(())
}
