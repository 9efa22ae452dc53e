//! The exponential, non-normal maximal subgroup of order 720 in Alt(10),
//! checked with stabilizer-chain membership only.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec, PermGroup};
use crate::perm::exponent_from_cycle_types;

use super::verdict::Verdict;

pub const ALT10_PROBE_ID: &str = "ALT10";
pub const SAMPLE_SIZE: usize = 1000;
pub const SAMPLE_SEED: u64 = 2520;

/// Everything the probe established.
#[derive(Debug, Clone)]
pub struct Alt10Report {
    pub exponent: u128,
    pub order: u128,
    pub m_order: u128,
    pub index: u128,
    pub sampled: usize,
    /// Sampled elements lying outside `M` themselves.
    pub sampled_outside: usize,
    /// `(g, m)` with `g⁻¹ m g ∉ M`, in cycle notation.
    pub non_normal: (String, String),
}

impl Alt10Report {
    pub fn to_json(&self) -> Value {
        json!({
            "exponent": self.exponent.to_string(),
            "order": self.order.to_string(),
            "M_order": self.m_order.to_string(),
            "index": self.index.to_string(),
            "exponential_by": "exp(G) divides |G:M|",
            "spot_check": {
                "note": "sampled elements only; not a proof",
                "seed": SAMPLE_SEED,
                "samples": self.sampled,
                "samples_outside_M": self.sampled_outside,
                "all_powers_in_M": true,
            },
            "non_normal": { "g": self.non_normal.0, "m": self.non_normal.1 },
        })
    }
}

fn fail(what: impl Into<String>) -> Error {
    Error::ValidationFailed(what.into())
}

fn build(spec: &str) -> Result<PermGroup> {
    crate::group::construct(&GroupSpec::parse(spec)?)
}

pub fn run_alt10_probe() -> Result<Alt10Report> {
    let g = build("alt:10")?;
    let m = build("m10")?;

    if g.natural_family() != Some((Family::Alternating, 10)) {
        return Err(fail("alt:10 is not recognized as the alternating group"));
    }
    let exponent = exponent_from_cycle_types(10, true)?;
    let order = g.try_order()?;
    let m_order = m.try_order()?;
    if exponent != 2520 || order != 1_814_400 || m_order != 720 {
        return Err(fail(format!(
            "exponent {exponent}, |G| = {order}, |M| = {m_order}"
        )));
    }
    if !m.is_subgroup_of(&g)? {
        return Err(fail("M is not contained in Alt(10)"));
    }
    let index = order / m_order;
    if index % exponent != 0 {
        return Err(fail(format!("exponent {exponent} does not divide index {index}")));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut sampled_outside = 0;
    for _ in 0..SAMPLE_SIZE {
        let x = g.random_element(&mut rng);
        if !g.contains(&x)? {
            return Err(fail(format!("sampled {x} is not in Alt(10)")));
        }
        if !m.contains(&x)? {
            sampled_outside += 1;
        }
        if !m.contains(&x.pow(index))? {
            return Err(fail(format!("{x} raised to {index} is outside M")));
        }
    }

    let mut non_normal = None;
    'search: for a in g.generators() {
        for b in m.generators() {
            if !m.contains(&b.conjugate_by(a))? {
                non_normal = Some((a.to_string(), b.to_string()));
                break 'search;
            }
        }
    }
    let non_normal = non_normal.ok_or_else(|| fail("M is normalized by every generator of Alt(10)"))?;

    Ok(Alt10Report {
        exponent,
        order,
        m_order,
        index,
        sampled: SAMPLE_SIZE,
        sampled_outside,
        non_normal,
    })
}

/// The probe as a verdict on group `alt:10`; the report is attached as the
/// witness on success.
pub fn alt10_probe() -> Verdict {
    let start = Instant::now();
    match run_alt10_probe() {
        Ok(report) => {
            let mut v = Verdict::from_outcome(ALT10_PROBE_ID, "alt:10", Ok(None), start.elapsed());
            v.witness = Some(report.to_json());
            v
        }
        Err(e) => Verdict::from_outcome(ALT10_PROBE_ID, "alt:10", Err(e), start.elapsed()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_passes() {
        let r = run_alt10_probe().unwrap();
        assert_eq!(r.exponent, 2520);
        assert_eq!(r.order, 1_814_400);
        assert_eq!(r.index, 2520);
        assert!(r.sampled_outside > 900);
        let v = alt10_probe();
        assert!(v.passed());
        assert_eq!(v.witness.unwrap()["spot_check"]["samples"], json!(1000));
    }
}
