//! Searches for the configurations that show where the statements about
//! subnormal subgroups stop carrying over to exponential ones.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::subgroups::{Subgroup, SubgroupLattice};

use super::context::GroupContext;
use super::predicates::{exponential_violation, is_exponential, power_preimage};
use super::verdict::{Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProbeKind {
    /// `{x : x^|G:H| ∈ H}` is not closed under multiplication.
    PowersetNotClosed,
    /// Exponential, not subnormal, and the index is not a multiple of the
    /// exponent.
    ExpNotSubnormal,
    /// Same search as [`ProbeKind::ExpNotSubnormal`], under its other name.
    ExpIndexNotMult,
    /// Two exponential subgroups whose join is not exponential.
    ExpJoinFail,
    /// `H` exponential in `G` but not in some `M` with `H ≤ M`.
    ExpNotInherited,
}

impl ProbeKind {
    pub const ALL: [ProbeKind; 5] = [
        ProbeKind::PowersetNotClosed,
        ProbeKind::ExpNotSubnormal,
        ProbeKind::ExpIndexNotMult,
        ProbeKind::ExpJoinFail,
        ProbeKind::ExpNotInherited,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProbeKind::PowersetNotClosed => "POWERSET_NOT_CLOSED",
            ProbeKind::ExpNotSubnormal => "EXP_NOT_SUBNORMAL",
            ProbeKind::ExpIndexNotMult => "EXP_INDEX_NOT_MULT",
            ProbeKind::ExpJoinFail => "EXP_JOIN_FAIL",
            ProbeKind::ExpNotInherited => "EXP_NOT_INHERITED",
        }
    }

    /// The group on which a witness is known to exist.
    pub fn default_group(self) -> &'static str {
        match self {
            ProbeKind::PowersetNotClosed => "sym:3",
            ProbeKind::ExpNotSubnormal | ProbeKind::ExpIndexNotMult => "cyc:4 x sym:3",
            ProbeKind::ExpJoinFail | ProbeKind::ExpNotInherited => "dih:12",
        }
    }
}

impl fmt::Display for ProbeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProbeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProbeKind> {
        ProbeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub enum Counterexample {
    /// `a^n, b^n ∈ H` but `(ab)^n ∉ H`, with `n = |G:H|`.
    PowersetNotClosed {
        h: Subgroup,
        n: usize,
        set: Vec<Perm>,
        a: Perm,
        b: Perm,
    },
    ExpNotSubnormal {
        h: Subgroup,
        index: usize,
        exponent: usize,
    },
    /// `x^|G:J| ∉ J` for the join `J` of exponential `H` and `K`.
    ExpJoinFail {
        h: Subgroup,
        k: Subgroup,
        join: Subgroup,
        x: Perm,
    },
    /// `x ∈ M` with `x^|M:H| ∉ H`, although `H` is exponential in the parent.
    ExpNotInherited { h: Subgroup, m: Subgroup, x: Perm },
}

fn in_sub(h: &Subgroup, p: &Perm) -> bool {
    h.contains(p)
}

impl Counterexample {
    /// Re-verifies the witness from its own fields, using permutation
    /// arithmetic rather than the multiplication table that found it.
    pub fn recheck(&self) -> bool {
        match self {
            Counterexample::PowersetNotClosed { h, n, set, a, b } => {
                let n = *n as u128;
                let listed_ok = set.iter().all(|x| in_sub(h, &x.pow(n)));
                let complete = h
                    .table()
                    .elements()
                    .iter()
                    .filter(|x| in_sub(h, &x.pow(n)))
                    .count()
                    == set.len();
                listed_ok
                    && complete
                    && in_sub(h, &a.pow(n))
                    && in_sub(h, &b.pow(n))
                    && !in_sub(h, &a.then(b).pow(n))
            }
            Counterexample::ExpNotSubnormal { h, index, exponent } => {
                let table = h.table();
                let n = *index as u128;
                table.elements().iter().all(|x| in_sub(h, &x.pow(n)))
                    && h.subnormal_defect().is_none()
                    && index % exponent != 0
                    && table.order() / h.order() == *index
            }
            Counterexample::ExpJoinFail { h, k, join, x } => {
                let gi = h.table().order();
                let exp_in_g = |s: &Subgroup| {
                    let n = (gi / s.order()) as u128;
                    s.table().elements().iter().all(|y| in_sub(s, &y.pow(n)))
                };
                exp_in_g(h)
                    && exp_in_g(k)
                    && h.join(k).map(|j| &j == join).unwrap_or(false)
                    && !in_sub(join, &x.pow((gi / join.order()) as u128))
            }
            Counterexample::ExpNotInherited { h, m, x } => {
                let n = (h.table().order() / h.order()) as u128;
                let exp_in_g = h.table().elements().iter().all(|y| in_sub(h, &y.pow(n)));
                exp_in_g
                    && h.is_subgroup_of(m)
                    && in_sub(m, x)
                    && !in_sub(h, &x.pow((m.order() / h.order()) as u128))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let s = |h: &Subgroup| h.describe_full();
        match self {
            Counterexample::PowersetNotClosed { h, n, set, a, b } => json!({
                "H": s(h),
                "n": n,
                "set": set.iter().map(Perm::to_string).collect::<Vec<_>>(),
                "set_size": set.len(),
                "a": a.to_string(),
                "b": b.to_string(),
                "product": a.then(b).to_string(),
            }),
            Counterexample::ExpNotSubnormal { h, index, exponent } => json!({
                "H": s(h),
                "index": index,
                "exponent": exponent,
                "subnormal_defect": Value::Null,
            }),
            Counterexample::ExpJoinFail { h, k, join, x } => json!({
                "H": s(h),
                "K": s(k),
                "join": s(join),
                "x": x.to_string(),
                "join_index": join.index(),
            }),
            Counterexample::ExpNotInherited { h, m, x } => json!({
                "H": s(h),
                "M": s(m),
                "x": x.to_string(),
                "M_H_index": m.order() / h.order(),
            }),
        }
    }
}

/// Searches the lattice in canonical order and returns the first witness.
pub fn find_counterexample(kind: ProbeKind, lattice: &SubgroupLattice) -> Option<Counterexample> {
    let table = lattice.table();
    let subs = lattice.subgroups();
    match kind {
        ProbeKind::PowersetNotClosed => subs.iter().find_map(|h| {
            let n = h.index();
            let set = power_preimage(h, n as u64);
            let members: Vec<usize> = set.iter().collect();
            members.iter().find_map(|&a| {
                members
                    .iter()
                    .find(|&&b| !set.contains(table.mul(a, b)))
                    .map(|&b| Counterexample::PowersetNotClosed {
                        h: h.clone(),
                        n,
                        set: members.iter().map(|&x| table.element(x).clone()).collect(),
                        a: table.element(a).clone(),
                        b: table.element(b).clone(),
                    })
            })
        }),
        ProbeKind::ExpNotSubnormal | ProbeKind::ExpIndexNotMult => {
            let exponent = table.exponent() as usize;
            subs.iter()
                .find(|h| {
                    h.index() % exponent != 0
                        && is_exponential(h)
                        && h.subnormal_defect().is_none()
                })
                .map(|h| Counterexample::ExpNotSubnormal {
                    h: h.clone(),
                    index: h.index(),
                    exponent,
                })
        }
        ProbeKind::ExpJoinFail => {
            let exponential: Vec<bool> = subs.iter().map(is_exponential).collect();
            for (i, h) in subs.iter().enumerate() {
                for (j, k) in subs.iter().enumerate().skip(i + 1) {
                    if !exponential[i] || !exponential[j] {
                        continue;
                    }
                    let join = h.join(k).expect("same parent");
                    if let Some(x) = exponential_violation(&join, lattice.whole()) {
                        return Some(Counterexample::ExpJoinFail {
                            h: h.clone(),
                            k: k.clone(),
                            join,
                            x: table.element(x).clone(),
                        });
                    }
                }
            }
            None
        }
        ProbeKind::ExpNotInherited => {
            for (i, h) in subs.iter().enumerate() {
                if !is_exponential(h) {
                    continue;
                }
                for j in lattice.proper_overgroups_of(i) {
                    let m = lattice.get(j);
                    if let Some(x) = exponential_violation(h, m) {
                        return Some(Counterexample::ExpNotInherited {
                            h: h.clone(),
                            m: m.clone(),
                            x: table.element(x).clone(),
                        });
                    }
                }
            }
            None
        }
    }
}

/// Runs a probe as a verdict: pass when a witness is found and survives
/// its re-check, fail otherwise.
pub fn probe_verdict(kind: ProbeKind, ctx: &GroupContext) -> Verdict {
    let start = Instant::now();
    let outcome = ctx.lattice().map(|l| find_counterexample(kind, l));
    let mut verdict = Verdict::from_outcome(kind.name(), ctx.label(), Ok(None), start.elapsed());
    match outcome {
        Ok(Some(w)) if w.recheck() => verdict.witness = Some(w.to_json()),
        Ok(Some(w)) => {
            verdict.status = Status::Fail;
            verdict.witness = Some(json!({ "error": "witness failed re-check", "witness": w.to_json() }));
        }
        Ok(None) => verdict.status = Status::Fail,
        Err(Error::ResourceCap(reason)) => verdict.status = Status::Skipped(reason),
        Err(e) => {
            verdict.status = Status::Fail;
            verdict.witness = Some(json!({ "error": e.to_string() }));
        }
    }
    verdict.elapsed = start.elapsed();
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paperlab::Caps;

    fn lattice(spec: &str) -> GroupContext {
        GroupContext::from_spec(spec, Caps::default()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for k in ProbeKind::ALL {
            assert_eq!(k.name().parse::<ProbeKind>().unwrap(), k);
        }
        assert!(matches!("X".parse::<ProbeKind>(), Err(Error::UnknownKind(_))));
    }

    #[test]
    fn powerset_in_sym3() {
        let c = lattice("sym:3");
        let w = find_counterexample(ProbeKind::PowersetNotClosed, c.lattice().unwrap()).unwrap();
        assert!(w.recheck());
        match &w {
            Counterexample::PowersetNotClosed { h, n, set, .. } => {
                assert_eq!(h.generators()[0].to_string(), "(1 2)");
                assert_eq!(*n, 3);
                assert_eq!(set.len(), 4);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn exp_not_subnormal_in_c4_x_sym3() {
        let c = lattice("cyc:4 x sym:3");
        let w = find_counterexample(ProbeKind::ExpNotSubnormal, c.lattice().unwrap()).unwrap();
        assert!(w.recheck());
        match &w {
            Counterexample::ExpNotSubnormal { h, index, exponent } => {
                assert_eq!(h.order(), 4);
                assert!(h.elements().iter().all(|x| x.order() <= 2));
                assert_eq!((*index, *exponent), (6, 12));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn dihedral_probes() {
        let c = lattice("dih:12");
        let l = c.lattice().unwrap();
        let w = find_counterexample(ProbeKind::ExpJoinFail, l).unwrap();
        assert!(w.recheck());
        if let Counterexample::ExpJoinFail { h, k, join, .. } = &w {
            assert!(h.order() <= 4 && k.order() <= 4);
            assert_eq!(join.order(), 4);
        }
        let w = find_counterexample(ProbeKind::ExpNotInherited, l).unwrap();
        assert!(w.recheck());
        if let Counterexample::ExpNotInherited { h, m, .. } = &w {
            assert_eq!(h.order(), 2);
            assert_eq!(m.order(), 6);
            assert!(!crate::structure::is_nilpotent(m));
        }
        let s3 = lattice("sym:3");
        assert!(find_counterexample(ProbeKind::ExpJoinFail, s3.lattice().unwrap()).is_none());
    }

    #[test]
    fn nilpotent_groups_have_none() {
        for spec in ["cyc:12", "q8", "dih:8"] {
            let c = lattice(spec);
            for k in ProbeKind::ALL {
                assert!(find_counterexample(k, c.lattice().unwrap()).is_none(), "{k} on {spec}");
            }
        }
    }

    #[test]
    fn tampered_witnesses_fail_recheck() {
        let c = lattice("dih:12");
        let l = c.lattice().unwrap();
        let identity = Perm::identity(6);
        match find_counterexample(ProbeKind::ExpJoinFail, l).unwrap() {
            Counterexample::ExpJoinFail { h, k, join, .. } => {
                let bad = Counterexample::ExpJoinFail { h, k, join, x: identity.clone() };
                assert!(!bad.recheck());
            }
            _ => unreachable!(),
        }
        match find_counterexample(ProbeKind::ExpNotInherited, l).unwrap() {
            Counterexample::ExpNotInherited { h, .. } => {
                let bad = Counterexample::ExpNotInherited { m: l.whole().clone(), h, x: identity };
                assert!(!bad.recheck());
            }
            _ => unreachable!(),
        }
        let bad = Counterexample::ExpNotSubnormal { h: l.trivial().clone(), index: 12, exponent: 6 };
        assert!(!bad.recheck());
    }

    #[test]
    fn probe_verdicts() {
        assert!(probe_verdict(ProbeKind::PowersetNotClosed, &lattice("sym:3")).passed());
        assert!(probe_verdict(ProbeKind::PowersetNotClosed, &lattice("cyc:6")).failed());
    }
}
