//! Sylow subgroups, the Fitting subgroup, derived and lower central series.

use grouplab::structure::{analyze, fitting, is_solvable, o_p};
use grouplab::{all_subgroups, construct, GroupSpec, LatticeCaps, Perm};

fn main() -> grouplab::Result<()> {
    for spec in ["sym:4", "dih:12", "alt:5", "sl23", "cyc:2 x alt:4"] {
        let g = construct(&GroupSpec::parse(spec)?)?;
        let lattice = all_subgroups(&g, LatticeCaps::default())?;
        let report = analyze(&lattice)?;
        println!("{spec}");
        println!("  order {} = {:?}, exponent {}", report.order, report.factorization, report.exponent);
        for (p, (_, s)) in &report.sylow {
            let op = o_p(&lattice, *p)?;
            println!("  p = {p}: Sylow order {}, {} of them, O_p order {}", s.order, s.count, op.order());
        }
        let f = fitting(&lattice)?;
        let gens: Vec<String> = f.generators().iter().map(Perm::to_string).collect();
        println!("  Fitting subgroup: order {} generated by {:?}", f.order(), gens);
        println!("  derived series {:?}, solvable {}", report.derived_series, is_solvable(lattice.whole()));
        println!("  lower central series {:?}, nilpotent {}", report.lower_central_series, report.is_nilpotent);
        println!("  center order {}", report.center.order());
    }
    Ok(())
}
