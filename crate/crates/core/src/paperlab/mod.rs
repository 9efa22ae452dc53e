//! Relative orders, exponential subgroups and `S(G)` as executable
//! predicates; a registry of theorem checks; counterexample searches; and
//! the Alt(10) probe.

mod alt10;
mod checks;
mod context;
mod predicates;
mod probes;
mod verdict;

use rayon::prelude::*;

pub use alt10::{alt10_probe, run_alt10_probe, Alt10Report, ALT10_PROBE_ID, SAMPLE_SEED, SAMPLE_SIZE};
pub use checks::{lookup, registry, verify, CheckInfo};
pub use context::{Caps, GroupContext};
pub use predicates::{
    exponential_subgroups, exponential_violation, is_exponential, is_exponential_in,
    is_exponential_via_power_subgroup, is_p_subnormal, min_power_by_membership, min_power_into,
    min_power_into_at, power_preimage, relative_order, relative_order_at,
    relative_order_by_membership, s_set,
};
pub use probes::{find_counterexample, probe_verdict, Counterexample, ProbeKind};
pub use verdict::{tally, Status, Verdict};

use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub caps: Caps,
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
    /// Skip the counterexample probes and the Alt(10) probe.
    pub corpus_only: bool,
}

/// Every registry check on every corpus entry, in (entry, registry) order,
/// followed unless `corpus_only` by the probes. The order and contents of
/// the result do not depend on the thread count.
pub fn verify_all(entries: &[CorpusEntry], opts: &RunOptions) -> Result<Vec<Verdict>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = opts.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::bad_param("threads", e.to_string()))?;
    pool.install(|| run_all(entries, opts))
}

fn run_all(entries: &[CorpusEntry], opts: &RunOptions) -> Result<Vec<Verdict>> {
    let contexts = entries
        .iter()
        .map(|e| GroupContext::from_spec(&e.spec, opts.caps).map(|c| (e, c)))
        .collect::<Result<Vec<_>>>()?;
    let tasks: Vec<(usize, &CheckInfo)> = (0..contexts.len())
        .flat_map(|i| registry().iter().map(move |c| (i, c)))
        .collect();
    let mut verdicts: Vec<Verdict> = tasks
        .par_iter()
        .map(|&(i, check)| {
            let (entry, ctx) = &contexts[i];
            if entry.probe_only {
                Verdict::skipped(check.id, ctx.label(), "probe-only group; lattice checks are not run")
            } else {
                check.run(ctx)
            }
        })
        .collect();
    if opts.corpus_only {
        return Ok(verdicts);
    }
    let mut probe_verdicts: Vec<Verdict> = ProbeKind::ALL
        .par_iter()
        .map(|&kind| {
            let reuse = contexts.iter().find(|(e, _)| e.spec == kind.default_group());
            match reuse {
                Some((_, ctx)) => probe_verdict(kind, ctx),
                None => match GroupContext::from_spec(kind.default_group(), opts.caps) {
                    Ok(ctx) => probe_verdict(kind, &ctx),
                    Err(e) => Verdict::from_outcome(kind.name(), kind.default_group(), Err(e), Default::default()),
                },
            }
        })
        .collect();
    verdicts.append(&mut probe_verdicts);
    verdicts.push(alt10_probe());
    Ok(verdicts)
}
