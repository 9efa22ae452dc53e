//! Every registered check on every corpus group, in parallel, with a
//! summary per check.

use std::collections::BTreeMap;

use grouplab::corpus::corpus;
use grouplab::paperlab::{registry, tally, verify_all, RunOptions};

fn main() -> grouplab::Result<()> {
    let verdicts = verify_all(&corpus(), &RunOptions::default())?;
    let mut per_check: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for v in &verdicts {
        let entry = per_check.entry(v.check.as_str()).or_default();
        let (p, f, s) = tally(std::slice::from_ref(v));
        *entry = (entry.0 + p, entry.1 + f, entry.2 + s);
    }
    for check in registry() {
        let (p, f, s) = per_check[check.id];
        println!("{:<14} pass {p:>3} fail {f} skip {s:>2}  {}", check.id, check.statement);
    }
    for v in verdicts.iter().filter(|v| registry().iter().all(|c| c.id != v.check)) {
        println!("{:<20} {:<8} {}", v.check, v.status.as_str(), v.group);
    }
    let (p, f, s) = tally(&verdicts);
    println!("{p}/{f}/{s}");
    if f > 0 {
        std::process::exit(1);
    }
    Ok(())
}
