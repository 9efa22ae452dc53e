//! The small groups where exponential subgroups behave unlike subnormal ones.

use grouplab::paperlab::{find_counterexample, Caps, GroupContext, ProbeKind};

fn main() -> grouplab::Result<()> {
    for kind in ProbeKind::ALL {
        let ctx = GroupContext::from_spec(kind.default_group(), Caps::default())?;
        let witness = find_counterexample(kind, ctx.lattice()?).expect("witness exists");
        assert!(witness.recheck());
        println!("{kind} in {}:", kind.default_group());
        println!("  {}", witness.to_json());
    }
    // None of them occur in nilpotent groups.
    let q8 = GroupContext::from_spec("q8", Caps::default())?;
    for kind in ProbeKind::ALL {
        assert!(find_counterexample(kind, q8.lattice()?).is_none());
    }
    println!("no witnesses in q8");
    Ok(())
}
