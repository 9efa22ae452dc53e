//! Alt(10) has a non-normal subgroup of order 720 whose index equals the
//! group exponent, so it is exponential. Everything here uses stabilizer
//! chains; the group is never enumerated.

use grouplab::paperlab::run_alt10_probe;

fn main() -> grouplab::Result<()> {
    let r = run_alt10_probe()?;
    println!("|Alt(10)| = {}", r.order);
    println!("exp(Alt(10)) = {} (from cycle types)", r.exponent);
    println!("|M| = {}, |G:M| = {}", r.m_order, r.index);
    println!(
        "x^{} in M for {} sampled x ({} of them outside M); a spot check, the proof is exp | index",
        r.index, r.sampled, r.sampled_outside
    );
    println!("not normal: {} conjugates {} out of M", r.non_normal.0, r.non_normal.1);
    Ok(())
}
