//! The built-in list of groups that `verify-all` runs over.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: String,
    /// Too large for a lattice; only the dedicated probes use it.
    pub probe_only: bool,
}

impl CorpusEntry {
    fn lattice(spec: impl Into<String>) -> CorpusEntry {
        CorpusEntry {
            spec: spec.into(),
            probe_only: false,
        }
    }
}

/// Cyclic, dihedral, symmetric, alternating, dicyclic and product groups of
/// order at most 200, followed by the probe-only `alt:10` and `m10`.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in (1..=16).chain([24, 30]) {
        out.push(CorpusEntry::lattice(format!("cyc:{n}")));
    }
    for m in [6, 8, 10, 12, 16, 20, 24] {
        out.push(CorpusEntry::lattice(format!("dih:{m}")));
    }
    for n in 1..=5 {
        out.push(CorpusEntry::lattice(format!("sym:{n}")));
    }
    for n in [4, 5] {
        out.push(CorpusEntry::lattice(format!("alt:{n}")));
    }
    for spec in ["q8", "dic:12", "sl23", "cyc:4 x sym:3", "cyc:2 x alt:4", "sym:3 x sym:3"] {
        out.push(CorpusEntry::lattice(spec));
    }
    for spec in ["alt:10", "m10"] {
        out.push(CorpusEntry {
            spec: spec.into(),
            probe_only: true,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, GroupSpec};

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert_eq!(c.len(), 18 + 7 + 5 + 2 + 6 + 2);
        assert!(c.iter().any(|e| e.spec == "cyc:4 x sym:3"));
        assert!(c.iter().any(|e| e.spec == "dih:12"));
        for e in &c {
            let g = construct(&GroupSpec::parse(&e.spec).unwrap()).unwrap();
            assert_eq!(g.order() > 200, e.probe_only, "{}", e.spec);
        }
    }
}
