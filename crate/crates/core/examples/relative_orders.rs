//! Relative orders `|<x> : <x> ∩ H|` and the least power of `x` landing in
//! `H`, on a table and through stabilizer-chain membership.

use grouplab::group::M10_GENERATORS;
use grouplab::paperlab::{
    min_power_by_membership, min_power_into, relative_order, relative_order_by_membership,
};
use grouplab::{all_subgroups, construct, GroupSpec, LatticeCaps, Perm, PermGroup, Subgroup};

fn main() -> grouplab::Result<()> {
    let g = construct(&GroupSpec::parse("sym:3")?)?;
    let lattice = all_subgroups(&g, LatticeCaps::default())?;
    let h = Subgroup::from_perms(lattice.table(), &[Perm::parse("(1 2)", 3)?])?;
    println!("H = <(1 2)> in Sym(3)");
    for x in lattice.table().elements() {
        println!(
            "  x = {x:<9} order {}  relative order {}  least power into H {}",
            x.order(),
            relative_order(&h, x)?,
            min_power_into(&h, x)?
        );
    }

    // No table needed: Alt(10) has 1814400 elements.
    let m = PermGroup::from_generators(
        10,
        M10_GENERATORS.iter().map(|t| Perm::parse(t, 10)).collect::<grouplab::Result<_>>()?,
    )?;
    for text in ["(1 2 3 4 5 6 7)", "(1 2 3)(4 5 6)(7 8 9)", "(1 2)(3 4)"] {
        let x = Perm::parse(text, 10)?;
        println!(
            "  in Alt(10), x = {x}: relative order to M {} (least power {})",
            relative_order_by_membership(&m, &x)?,
            min_power_by_membership(&m, &x)?
        );
    }
    Ok(())
}
