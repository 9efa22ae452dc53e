//! Exponential subgroups: `x^|G:H|` lies in `H` for every `x`.

use grouplab::paperlab::{exponential_subgroups, exponential_violation, is_exponential_via_power_subgroup};
use grouplab::{all_subgroups, construct, GroupSpec, LatticeCaps, Perm};

fn main() -> grouplab::Result<()> {
    for spec in ["sym:3", "dih:12", "cyc:4 x sym:3", "sym:4"] {
        let g = construct(&GroupSpec::parse(spec)?)?;
        let lattice = all_subgroups(&g, LatticeCaps::default())?;
        let exp = exponential_subgroups(&lattice);
        println!("{spec}: exponent {}, {} of {} subgroups exponential", lattice.table().exponent(), exp.len(), lattice.len());
        for h in &exp {
            assert!(is_exponential_via_power_subgroup(h));
            let normal = h.is_normal();
            let subnormal = h.subnormal_defect().is_some();
            let gens: Vec<String> = h.generators().iter().map(Perm::to_string).collect();
            println!("  order {:>2} index {:>2} normal {normal:<5} subnormal {subnormal:<5} <{}>", h.order(), h.index(), gens.join(", "));
        }
        if let Some(h) = lattice.subgroups().iter().find(|h| exponential_violation(h, lattice.whole()).is_some()) {
            let x = exponential_violation(h, lattice.whole()).unwrap();
            println!(
                "  first non-exponential subgroup has order {}: {}^{} is outside it",
                h.order(),
                lattice.table().element(x),
                h.index()
            );
        }
    }
    Ok(())
}
