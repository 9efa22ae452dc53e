//! Enumerate every subgroup of a small group and render the inclusion
//! diagram as DOT, shading the exponential subgroups.
//!
//! `cargo run --example subgroup_lattice -- dih:12 > d12.dot`

use grouplab::paperlab::is_exponential;
use grouplab::{all_subgroups, construct, GroupSpec, LatticeCaps, Perm};

fn main() -> grouplab::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "sym:4".to_string());
    let g = construct(&GroupSpec::parse(&spec)?)?;
    let lattice = all_subgroups(&g, LatticeCaps::default())?;

    eprintln!(
        "{spec}: {} subgroups in {} conjugacy classes",
        lattice.len(),
        lattice.conjugacy_classes().len()
    );
    for (i, s) in lattice.iter() {
        let gens: Vec<String> = s.generators().iter().map(Perm::to_string).collect();
        eprintln!(
            "  #{i:<3} order {:>3}  normal {:<5}  defect {:<4} <{}>",
            s.order(),
            lattice.is_normal(i),
            s.subnormal_defect().map_or("-".into(), |d| d.to_string()),
            gens.join(", ")
        );
    }
    let shaded: Vec<bool> = lattice.subgroups().iter().map(is_exponential).collect();
    print!("{}", lattice.to_dot(&shaded));
    Ok(())
}
