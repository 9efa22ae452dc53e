//! `S(G) = {x : x^|G:H| ∈ H for every H}` computed by brute force, next to
//! the Fitting subgroup computed from Sylow intersections.

use grouplab::corpus::corpus;
use grouplab::paperlab::{Caps, GroupContext};

fn main() -> grouplab::Result<()> {
    println!("{:<16} {:>5} {:>5} {:>5}", "group", "|G|", "|S|", "|F|");
    for entry in corpus().into_iter().filter(|e| !e.probe_only) {
        let ctx = GroupContext::from_spec(&entry.spec, Caps::default())?;
        let s = ctx.s_set()?;
        let f = ctx.fitting()?;
        assert_eq!(s, f);
        println!("{:<16} {:>5} {:>5} {:>5}", entry.spec, ctx.order()?, s.order(), f.order());
    }
    Ok(())
}
