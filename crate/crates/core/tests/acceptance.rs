//! Acceptance criteria, one line each. Runs as a plain binary (no test
//! harness) so the lines are always shown; exits non-zero if any fails.

use std::time::{Duration, Instant};

use grouplab::cli::run_with;
use grouplab::corpus::corpus;
use grouplab::paperlab::{
    find_counterexample, is_exponential, min_power_into_at, power_preimage, relative_order_at,
    run_alt10_probe, verify, Caps, Counterexample, GroupContext, ProbeKind,
};
use grouplab::structure::{is_nilpotent, power_subgroup};
use grouplab::{Perm, Subgroup};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn contexts() -> Vec<GroupContext> {
    corpus()
        .into_iter()
        .filter(|e| !e.probe_only)
        .map(|e| GroupContext::from_spec(&e.spec, Caps::default()).expect("corpus entry builds"))
        .collect()
}

fn ctx(spec: &str) -> GroupContext {
    GroupContext::from_spec(spec, Caps::default()).expect("group builds")
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn checks_pass(ids: &[&str], groups: &[GroupContext]) -> Result<usize, String> {
    let mut runs = 0;
    for c in groups {
        for id in ids {
            let v = verify(id, c).map_err(|e| e.to_string())?;
            ensure(v.passed(), || format!("{id} on {}: {:?} {:?}", c.label(), v.status, v.witness))?;
            runs += 1;
        }
    }
    Ok(runs)
}

fn relative_orders(groups: &[GroupContext]) -> Outcome {
    let start = Instant::now();
    let mut triples = 0u64;
    for c in groups {
        let l = c.lattice().map_err(|e| e.to_string())?;
        let t = l.table();
        let exp = t.exponent();
        for h in l.subgroups() {
            for x in 0..t.order() {
                let o = relative_order_at(h, x) as u64;
                let m = min_power_into_at(h, x) as u64;
                ensure(o == m, || format!("{}: o_H(x) = {o}, least power {m}", c.label()))?;
                let mut y = x;
                for n in 1..=exp {
                    ensure(h.contains_index(y) == (n % o == 0), || {
                        format!("{}: x = {}, n = {n}", c.label(), t.element(x))
                    })?;
                    y = t.mul(y, x);
                }
                triples += exp;
            }
        }
    }
    within(start, Duration::from_secs(60), "relative-order suite")?;
    Ok(format!("{triples} (H, x, n) triples in {:?}", start.elapsed()))
}

fn subnormality(groups: &[GroupContext]) -> Outcome {
    let start = Instant::now();
    let runs = checks_pass(&["THM_SUBN2", "PROP_SUBN"], groups)?;
    within(start, Duration::from_secs(300), "subnormality suite")?;
    Ok(format!("{runs} verdicts in {:?}", start.elapsed()))
}

fn kegel_wielandt(groups: &[GroupContext]) -> Outcome {
    let runs = checks_pass(&["KW", "PSUBN_PROD"], groups)?;
    for c in groups {
        c.all_p_subnormal().map_err(|e| format!("{}: {e}", c.label()))?;
    }
    Ok(format!("{runs} verdicts, characterizations agree everywhere"))
}

fn exponential_suite(groups: &[GroupContext]) -> Outcome {
    let ids = [
        "EXP_QUOT", "EXP_CYCLIC", "EXP_EXISTS", "PERMUTABLE", "GN_CORR", "EXP_MULT", "LEM_NEW",
        "HALL_EXP", "MAX_EXP_SOLV", "EXP_TRANS",
    ];
    let runs = checks_pass(&ids, groups)?;
    Ok(format!("{runs} verdicts"))
}

fn s_equals_fitting(groups: &[GroupContext]) -> Outcome {
    checks_pass(&["S_FITTING"], groups)?;
    for c in groups {
        let s = c.s_set().map_err(|e| e.to_string())?;
        let f = c.fitting().map_err(|e| e.to_string())?;
        ensure(s == f, || format!("{}: |S| = {}, |F| = {}", c.label(), s.order(), f.order()))?;
    }
    for (spec, order) in [("sym:3", 3), ("sym:4", 4), ("dih:12", 6)] {
        let got = ctx(spec).s_set().map_err(|e| e.to_string())?.order();
        ensure(got == order, || format!("S({spec}) has order {got}, expected {order}"))?;
    }
    let v4 = ctx("sym:4");
    let s = v4.s_set().unwrap();
    ensure(
        s.elements().iter().all(|x| x.is_identity() || x.cycle_type().parts() == [2, 2]),
        || "S(Sym(4)) is not the Klein four-group".into(),
    )?;
    Ok(format!("{} groups", groups.len()))
}

fn counterexamples(groups: &[GroupContext]) -> Outcome {
    let start = Instant::now();
    let sym3 = ctx("sym:3");
    let l = sym3.lattice().unwrap();
    let h = Subgroup::from_perms(l.table(), &[Perm::parse("(1 2)", 3).unwrap()]).unwrap();
    let set = power_preimage(&h, 3);
    ensure(set.count() == 4, || format!("|{{x : x^3 in <(1 2)>}}| = {}", set.count()))?;
    ensure(Subgroup::from_set(l.table(), set).is_err(), || "power set is a subgroup".into())?;
    match find_counterexample(ProbeKind::PowersetNotClosed, l) {
        Some(w @ Counterexample::PowersetNotClosed { .. }) if w.recheck() => {}
        other => return Err(format!("no powerset witness on Sym(3): {other:?}")),
    }

    let c4s3 = ctx("cyc:4 x sym:3");
    match find_counterexample(ProbeKind::ExpNotSubnormal, c4s3.lattice().unwrap()) {
        Some(ref w @ Counterexample::ExpNotSubnormal { ref h, index, exponent }) => {
            ensure(w.recheck(), || "C4 x Sym(3) witness fails re-check".into())?;
            ensure(h.order() == 4 && h.elements().iter().all(|x| x.order() <= 2), || {
                "witness is not a Klein four-group".into()
            })?;
            ensure(is_exponential(h) && h.subnormal_defect().is_none(), || "wrong witness".into())?;
            ensure(index == 6 && exponent == 12, || format!("index {index}, exponent {exponent}"))?;
        }
        other => return Err(format!("no exponential non-subnormal witness: {other:?}")),
    }

    let d12 = ctx("dih:12");
    let dl = d12.lattice().unwrap();
    match find_counterexample(ProbeKind::ExpJoinFail, dl) {
        Some(ref w @ Counterexample::ExpJoinFail { ref h, ref k, ref join, .. }) => {
            ensure(w.recheck(), || "join witness fails re-check".into())?;
            ensure(h.order() <= 4 && k.order() <= 4, || "join witness subgroups too large".into())?;
            ensure(!is_exponential(join), || "join is exponential".into())?;
        }
        other => return Err(format!("no join witness in D12: {other:?}")),
    }
    match find_counterexample(ProbeKind::ExpNotInherited, dl) {
        Some(ref w @ Counterexample::ExpNotInherited { ref h, ref m, .. }) => {
            ensure(w.recheck(), || "inheritance witness fails re-check".into())?;
            ensure(is_exponential(h), || "H not exponential in G".into())?;
            ensure(m.order() == 6 && !is_nilpotent(m), || "M is not Sym(3)-like".into())?;
        }
        other => return Err(format!("no inheritance witness in D12: {other:?}")),
    }

    let mut nilpotent = 0;
    for c in groups {
        let l = c.lattice().unwrap();
        if !is_nilpotent(l.whole()) {
            continue;
        }
        nilpotent += 1;
        for kind in ProbeKind::ALL {
            ensure(find_counterexample(kind, l).is_none(), || {
                format!("{kind} found a witness in nilpotent {}", c.label())
            })?;
        }
    }
    within(start, Duration::from_secs(10), "counterexample suite")?;
    Ok(format!("all witnesses found; none in {nilpotent} nilpotent groups; {:?}", start.elapsed()))
}

fn alt10() -> Outcome {
    let start = Instant::now();
    let r = run_alt10_probe().map_err(|e| e.to_string())?;
    ensure(r.exponent == 2520, || format!("exponent {}", r.exponent))?;
    ensure(r.order == 1_814_400, || format!("order {}", r.order))?;
    ensure(r.m_order == 720 && r.index == 2520, || format!("|M| = {}, index {}", r.m_order, r.index))?;
    ensure(r.sampled == 1000, || format!("{} samples", r.sampled))?;
    within(start, Duration::from_secs(30), "Alt(10) probe")?;
    Ok(format!("non-normal via g = {}, m = {}; {:?}", r.non_normal.0, r.non_normal.1, start.elapsed()))
}

fn cross_validation(groups: &[GroupContext]) -> Outcome {
    let mut pairs = 0;
    for c in groups {
        let l = c.lattice().unwrap();
        for (i, h) in l.iter() {
            for (j, k) in l.iter() {
                let formula = h.product_cardinality(k).unwrap();
                let materialized = h.product_set(k).unwrap().count();
                ensure(formula == materialized && c.product_size(i, j).unwrap() == formula, || {
                    format!("{}: |HK| {formula} vs {materialized}", c.label())
                })?;
                pairs += 1;
            }
        }
        let cap = Caps::default().max_elements;
        let count = c.group().elements(cap).unwrap().len() as u128;
        ensure(count == c.group().order(), || format!("{}: BSGS vs enumeration", c.label()))?;
        let least = (1..)
            .find(|&n| power_subgroup(l.whole(), n).is_trivial())
            .unwrap();
        let exp = c.group().exponent(cap).unwrap();
        ensure(exp == least as u128 && l.table().exponent() == least, || {
            format!("{}: exponent {exp} vs least n {least}", c.label())
        })?;
    }
    let alt10 = ctx("alt:10");
    let n = alt10.group().elements(Caps::default().max_elements).unwrap().len();
    ensure(n as u128 == alt10.group().order(), || "Alt(10) BSGS vs enumeration".into())?;
    Ok(format!("{pairs} subgroup pairs; orders and exponents agree"))
}

fn determinism() -> Outcome {
    let run = |threads: &str| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            ["grouplab", "--json", "verify-all", "--threads", threads],
            &mut out,
            &mut err,
        );
        (code, out)
    };
    let (c1, a) = run("1");
    let (c2, b) = run("1");
    let (c3, c) = run("8");
    ensure(c1 == 0 && c2 == 0 && c3 == 0, || format!("exit codes {c1} {c2} {c3}"))?;
    ensure(a == b && b == c, || "verify-all output differs between runs".into())?;
    Ok(format!("{} identical bytes across 3 runs", a.len()))
}

fn main() {
    let groups = contexts();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("relative orders", Box::new(|| relative_orders(&groups))),
        ("subnormality by divisibility", Box::new(|| subnormality(&groups))),
        ("Kegel-Wielandt", Box::new(|| kegel_wielandt(&groups))),
        ("exponential subgroups", Box::new(|| exponential_suite(&groups))),
        ("S(G) = F(G)", Box::new(|| s_equals_fitting(&groups))),
        ("counterexamples", Box::new(|| counterexamples(&groups))),
        ("Alt(10) probe", Box::new(alt10)),
        ("engine cross-validation", Box::new(|| cross_validation(&groups))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
