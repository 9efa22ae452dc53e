//! Named theorem checks. Each one quantifies its statement over the whole
//! lattice (and over all elements where the statement does) and returns the
//! first violation in canonical order, or `None`.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{quotient, GroupTable};
use crate::structure::{fitting, is_hall, is_nilpotent, is_solvable, power_subgroup};
use crate::subgroups::{Subgroup, SubgroupLattice};

use super::context::GroupContext;
use super::predicates::{
    exponential_violation, is_exponential, is_exponential_in, min_power_into_at,
    relative_order_at,
};
use super::verdict::Verdict;

type CheckFn = fn(&GroupContext) -> Result<Option<Value>>;

/// One registry entry.
#[derive(Clone, Copy)]
pub struct CheckInfo {
    pub id: &'static str,
    pub statement: &'static str,
    /// Every entry is a theorem, so the expected corpus outcome is a pass.
    pub expect_pass: bool,
    run: CheckFn,
}

impl std::fmt::Debug for CheckInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckInfo").field("id", &self.id).finish()
    }
}

impl CheckInfo {
    pub fn run(&self, ctx: &GroupContext) -> Verdict {
        let start = Instant::now();
        let outcome = (self.run)(ctx);
        Verdict::from_outcome(self.id, ctx.label(), outcome, start.elapsed())
    }
}

macro_rules! entry {
    ($id:literal, $run:ident, $statement:literal) => {
        CheckInfo {
            id: $id,
            statement: $statement,
            expect_pass: true,
            run: $run,
        }
    };
}

static REGISTRY: &[CheckInfo] = &[
    entry!("REL_ORDER_EQ", rel_order_eq,
        "|<x> : <x> ∩ H| equals the least n >= 1 with x^n in H"),
    entry!("REL_ORDER_DIV", rel_order_div,
        "x^n in H iff o_H(x) divides n, for 1 <= n <= exp(G)"),
    entry!("CRIT_COR", crit_cor,
        "x^|G:H| in H iff |H<x>:H| divides |G:H|"),
    entry!("INDEX_SYM", index_sym,
        "|HK:H| divides |G:H| iff |HK:K| divides |G:K| iff |HK| divides |G|"),
    entry!("PROP_SUBN", prop_subn,
        "H subnormal implies |HK:K| divides |G:K| for every K"),
    entry!("THM_SUBN2", thm_subn2,
        "H subnormal iff |HK:H| divides |G:H| for every K"),
    entry!("LEM_TOOL", lem_tool,
        "H normal in M <= G implies |HK:K| divides |MK:K| for every K"),
    entry!("LEM_TOOL2", lem_tool2,
        "H <= M <= G implies |HK:H| / |MK:M| = |M∩K : H∩K| for every K"),
    entry!("KW", kw,
        "H is p-subnormal for every prime p iff H is subnormal"),
    entry!("PSUBN_PROD", psubn_prod,
        "H p-subnormal for every p implies |HK| divides |G| for every K"),
    entry!("EXP_QUOT", exp_quot,
        "for N normal, N <= H: H exponential in G iff H/N exponential in G/N"),
    entry!("EXP_CYCLIC", exp_cyclic,
        "H exponential iff |HC| divides |G| for every cyclic C"),
    entry!("EXP_EXISTS", exp_exists,
        "a group whose order is not a prime has a nontrivial proper exponential subgroup"),
    entry!("PERMUTABLE", permutable,
        "HC a subgroup for every cyclic C implies HK a subgroup for every K"),
    entry!("GN_CORR", gn_corr,
        "H of index n is exponential iff G^n <= H"),
    entry!("EXP_MULT", exp_mult,
        "exp(G) divides |G:H| implies H exponential"),
    entry!("LEM_NEW", lem_new,
        "H with trivial normal core is exponential iff exp(G) divides |G:H|"),
    entry!("HALL_EXP", hall_exp,
        "an exponential Hall subgroup is normal"),
    entry!("MAX_EXP_SOLV", max_exp_solv,
        "in a solvable group an exponential maximal subgroup is normal"),
    entry!("EXP_TRANS", exp_trans,
        "H exponential in M exponential in G implies H exponential in G; intersections of exponential subgroups are exponential"),
    entry!("S_FITTING", s_fitting,
        "S(G) equals the Fitting subgroup; so does the intersection over normal N of the preimages of F(G/N)"),
    entry!("EQUIV_NILP", equiv_nilp,
        "G = S(G) iff G nilpotent iff every subgroup exponential iff every subgroup subnormal"),
];

pub fn registry() -> &'static [CheckInfo] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static CheckInfo> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs a registered check on a prepared context.
pub fn verify(check_id: &str, ctx: &GroupContext) -> Result<Verdict> {
    Ok(lookup(check_id)?.run(ctx))
}

fn sub(h: &Subgroup) -> Value {
    h.describe_full()
}

fn el(table: &GroupTable, x: usize) -> String {
    table.element(x).to_string()
}

fn divides(a: usize, b: usize) -> bool {
    b % a == 0
}

fn rel_order_eq(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let t = l.table();
    for h in l.subgroups() {
        for x in 0..t.order() {
            let o = relative_order_at(h, x);
            let m = min_power_into_at(h, x);
            if o != m {
                return Ok(Some(json!({
                    "H": sub(h), "x": el(t, x), "relative_order": o, "min_power": m,
                })));
            }
        }
    }
    Ok(None)
}

fn rel_order_div(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let t = l.table();
    let exp = t.exponent();
    for h in l.subgroups() {
        for x in 0..t.order() {
            let o = relative_order_at(h, x) as u64;
            let mut y = x;
            for n in 1..=exp {
                let inside = h.contains_index(y);
                if inside != (n % o == 0) {
                    return Ok(Some(json!({
                        "H": sub(h), "x": el(t, x), "n": n,
                        "power_in_H": inside, "relative_order": o,
                    })));
                }
                y = t.mul(y, x);
            }
        }
    }
    Ok(None)
}

fn crit_cor(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let t = l.table();
    for (i, h) in l.iter() {
        let index = h.index();
        for x in 0..t.order() {
            let lhs = h.contains_index(t.pow(x, index as u64));
            let hx = ctx.product_size(i, l.cyclic_of(x))? / h.order();
            let rhs = divides(hx, index);
            if lhs != rhs {
                return Ok(Some(json!({
                    "H": sub(h), "x": el(t, x), "index": index,
                    "power_in_H": lhs, "product_index": hx,
                })));
            }
        }
    }
    Ok(None)
}

fn index_sym(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let g = ctx.order()?;
    for (i, h) in l.iter() {
        for (j, k) in l.iter() {
            let hk = ctx.product_size(i, j)?;
            let a = divides(hk / h.order(), h.index());
            let b = divides(hk / k.order(), k.index());
            let c = divides(hk, g);
            if a != b || b != c {
                return Ok(Some(json!({
                    "H": sub(h), "K": sub(k), "HK": hk,
                    "HK_H_divides_G_H": a, "HK_K_divides_G_K": b, "HK_divides_G": c,
                })));
            }
        }
    }
    Ok(None)
}

fn prop_subn(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    for (i, h) in l.iter() {
        if !ctx.is_subnormal(i)? {
            continue;
        }
        for (j, k) in l.iter() {
            let lhs = ctx.product_size(i, j)? / k.order();
            if !divides(lhs, k.index()) {
                return Ok(Some(json!({
                    "H": sub(h), "K": sub(k), "HK_K": lhs, "G_K": k.index(),
                })));
            }
        }
    }
    Ok(None)
}

fn thm_subn2(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    for (i, h) in l.iter() {
        let subnormal = ctx.is_subnormal(i)?;
        let mut failing = None;
        for (j, k) in l.iter() {
            let lhs = ctx.product_size(i, j)? / h.order();
            if !divides(lhs, h.index()) {
                failing = Some((k, lhs));
                break;
            }
        }
        match (subnormal, failing) {
            (true, Some((k, lhs))) => {
                return Ok(Some(json!({
                    "H": sub(h), "subnormal": true, "K": sub(k),
                    "HK_H": lhs, "G_H": h.index(),
                })))
            }
            (false, None) => {
                return Ok(Some(json!({
                    "H": sub(h), "subnormal": false, "divisibility_holds_for_all_K": true,
                })))
            }
            _ => {}
        }
    }
    Ok(None)
}

fn lem_tool(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    for (mi, m) in l.iter() {
        for (hi, h) in l.iter().take(mi + 1) {
            if !h.is_subgroup_of(m) || !h.is_normal_in(m)? {
                continue;
            }
            for (ki, k) in l.iter() {
                let hk_k = ctx.product_size(hi, ki)? / k.order();
                let mk_k = ctx.product_size(mi, ki)? / k.order();
                if !divides(hk_k, mk_k) {
                    return Ok(Some(json!({
                        "H": sub(h), "M": sub(m), "K": sub(k), "HK_K": hk_k, "MK_K": mk_k,
                    })));
                }
            }
        }
    }
    Ok(None)
}

fn lem_tool2(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    for (mi, m) in l.iter() {
        for (hi, h) in l.iter().take(mi + 1) {
            if !h.is_subgroup_of(m) {
                continue;
            }
            for (ki, k) in l.iter() {
                let hk_h = ctx.product_size(hi, ki)? / h.order();
                let mk_m = ctx.product_size(mi, ki)? / m.order();
                let mk = m.intersection_order(k)?;
                let hk = h.intersection_order(k)?;
                if hk_h != mk_m * (mk / hk) || mk % hk != 0 {
                    return Ok(Some(json!({
                        "H": sub(h), "M": sub(m), "K": sub(k),
                        "HK_H": hk_h, "MK_M": mk_m, "MnK": mk, "HnK": hk,
                    })));
                }
            }
        }
    }
    Ok(None)
}

fn kw(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let all_p = ctx.all_p_subnormal()?;
    for (i, h) in l.iter() {
        let subnormal = ctx.is_subnormal(i)?;
        if all_p[i] != subnormal {
            return Ok(Some(json!({
                "H": sub(h), "p_subnormal_for_all_p": all_p[i], "subnormal": subnormal,
            })));
        }
    }
    Ok(None)
}

fn psubn_prod(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let g = ctx.order()?;
    let all_p = ctx.all_p_subnormal()?;
    for (i, h) in l.iter() {
        if !all_p[i] {
            continue;
        }
        for (j, k) in l.iter() {
            let hk = ctx.product_size(i, j)?;
            if !divides(hk, g) {
                return Ok(Some(json!({ "H": sub(h), "K": sub(k), "HK": hk, "G": g })));
            }
        }
    }
    Ok(None)
}

fn exp_quot(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exponential = ctx.exponential()?;
    for ni in l.normal_indices() {
        let n = l.get(ni);
        let q = quotient(n)?;
        let qt = Arc::new(GroupTable::new(q.group(), ctx.caps().max_order)?);
        for (hi, h) in l.iter() {
            if !n.is_subgroup_of(h) {
                continue;
            }
            let image = q.push_forward(h, &qt)?;
            let in_quotient = is_exponential(&image);
            if in_quotient != exponential[hi] {
                return Ok(Some(json!({
                    "N": sub(n), "H": sub(h),
                    "H_exponential": exponential[hi], "H_mod_N_exponential": in_quotient,
                })));
            }
        }
    }
    Ok(None)
}

fn exp_cyclic(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let g = ctx.order()?;
    let exponential = ctx.exponential()?;
    let cyclic = l.cyclic_indices();
    for (i, h) in l.iter() {
        let mut failing = None;
        for &c in &cyclic {
            let hc = ctx.product_size(i, c)?;
            if !divides(hc, g) {
                failing = Some((c, hc));
                break;
            }
        }
        if exponential[i] != failing.is_none() {
            let mut w = json!({ "H": sub(h), "exponential": exponential[i] });
            if let Some((c, hc)) = failing {
                w["C"] = sub(l.get(c));
                w["HC"] = json!(hc);
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn exp_exists(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let g = ctx.order()?;
    if g == 1 || is_prime(g as u128) {
        return Ok(None);
    }
    let exponential = ctx.exponential()?;
    let found = (1..l.len() - 1).any(|i| exponential[i]);
    Ok((!found).then(|| json!({ "order": g, "nontrivial_proper_exponential": 0 })))
}

fn permutable(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let cyclic = l.cyclic_indices();
    let is_subgroup = |i: usize, j: usize| -> Result<bool> {
        Ok(ctx.product_size(i, j)? == l.get(i).join(l.get(j))?.order())
    };
    for (i, h) in l.iter() {
        let mut with_cyclic = true;
        for &c in &cyclic {
            if !is_subgroup(i, c)? {
                with_cyclic = false;
                break;
            }
        }
        if !with_cyclic {
            continue;
        }
        for (j, k) in l.iter() {
            if !is_subgroup(i, j)? {
                return Ok(Some(json!({
                    "H": sub(h), "K": sub(k), "HK": ctx.product_size(i, j)?,
                    "join": h.join(k)?.order(),
                })));
            }
        }
    }
    Ok(None)
}

fn gn_corr(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exponential = ctx.exponential()?;
    let mut powers: HashMap<usize, Subgroup> = HashMap::new();
    for (i, h) in l.iter() {
        let n = h.index();
        let gn = powers
            .entry(n)
            .or_insert_with(|| power_subgroup(l.whole(), n as u64));
        let contained = gn.is_subgroup_of(h);
        if contained != exponential[i] {
            return Ok(Some(json!({
                "H": sub(h), "n": n, "G_n": sub(gn),
                "exponential": exponential[i], "G_n_in_H": contained,
            })));
        }
    }
    Ok(None)
}

fn exp_mult(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exp = l.table().exponent() as usize;
    let exponential = ctx.exponential()?;
    for (i, h) in l.iter() {
        if divides(exp, h.index()) && !exponential[i] {
            return Ok(Some(json!({ "H": sub(h), "index": h.index(), "exponent": exp })));
        }
    }
    Ok(None)
}

fn lem_new(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exp = l.table().exponent() as usize;
    let exponential = ctx.exponential()?;
    for (i, h) in l.iter() {
        if !h.normal_core().is_trivial() {
            continue;
        }
        let mult = divides(exp, h.index());
        if mult != exponential[i] {
            return Ok(Some(json!({
                "H": sub(h), "index": h.index(), "exponent": exp, "exponential": exponential[i],
            })));
        }
    }
    Ok(None)
}

fn hall_exp(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exponential = ctx.exponential()?;
    for (i, h) in l.iter() {
        if is_hall(h) && exponential[i] && !l.is_normal(i) {
            return Ok(Some(json!({ "H": sub(h), "index": h.index() })));
        }
    }
    Ok(None)
}

fn max_exp_solv(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    if !is_solvable(l.whole()) {
        return Ok(None);
    }
    let exponential = ctx.exponential()?;
    for i in l.maximal_subgroups_of(l.len() - 1) {
        if exponential[i] && !l.is_normal(i) {
            return Ok(Some(json!({ "M": sub(l.get(i)), "index": l.get(i).index() })));
        }
    }
    Ok(None)
}

fn exp_trans(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let exponential = ctx.exponential()?;
    for (mi, m) in l.iter() {
        if !exponential[mi] {
            continue;
        }
        for (hi, h) in l.iter().take(mi + 1) {
            if !exponential[hi] && h.is_subgroup_of(m) && is_exponential_in(h, m)? {
                let x = exponential_violation(h, l.whole()).expect("H is not exponential");
                return Ok(Some(json!({
                    "H": sub(h), "M": sub(m), "x": el(l.table(), x), "index": h.index(),
                })));
            }
        }
    }
    for (hi, h) in l.iter() {
        for (ki, k) in l.iter().skip(hi + 1) {
            if !exponential[hi] || !exponential[ki] {
                continue;
            }
            let meet = h.intersection(k)?;
            let mi = l.position(&meet).ok_or(Error::ParentMismatch)?;
            if !exponential[mi] {
                return Ok(Some(json!({ "H": sub(h), "K": sub(k), "intersection": sub(&meet) })));
            }
        }
    }
    Ok(None)
}

/// `∩ over normal N of the preimage of F(G/N)`.
fn fitting_of_quotients(l: &SubgroupLattice, max_order: usize) -> Result<Subgroup> {
    let mut acc = l.whole().clone();
    for ni in l.normal_indices() {
        let q = quotient(l.get(ni))?;
        let qt = Arc::new(GroupTable::new(q.group(), max_order)?);
        let ql = SubgroupLattice::enumerate(&qt, Default::default())?;
        let pre = q.preimage(&fitting(&ql)?)?;
        acc = acc.intersection(&pre)?;
    }
    Ok(acc)
}

fn s_fitting(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let s = ctx.s_set()?;
    let f = ctx.fitting()?;
    if s != f {
        return Ok(Some(json!({ "S": sub(s), "F": sub(f) })));
    }
    let via_quotients = fitting_of_quotients(l, ctx.caps().max_order)?;
    if &via_quotients != f {
        return Ok(Some(json!({ "F": sub(f), "intersection_over_quotients": sub(&via_quotients) })));
    }
    Ok(None)
}

fn equiv_nilp(ctx: &GroupContext) -> Result<Option<Value>> {
    let l = ctx.lattice()?;
    let s_whole = ctx.s_set()?.is_whole();
    let nilpotent = is_nilpotent(l.whole());
    let all_exp = ctx.exponential()?.iter().all(|&e| e);
    let all_subn = ctx.defects()?.iter().all(Option::is_some);
    if s_whole == nilpotent && nilpotent == all_exp && all_exp == all_subn {
        return Ok(None);
    }
    Ok(Some(json!({
        "S_is_G": s_whole, "nilpotent": nilpotent,
        "all_exponential": all_exp, "all_subnormal": all_subn,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paperlab::Caps;

    fn ctx(spec: &str) -> GroupContext {
        GroupContext::from_spec(spec, Caps::default()).unwrap()
    }

    #[test]
    fn ids_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), 22);
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 22);
        assert!(matches!(lookup("NOPE"), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn all_pass_on_small_groups() {
        for spec in ["sym:3", "dih:12", "q8", "cyc:1", "cyc:6"] {
            let c = ctx(spec);
            for check in registry() {
                let v = check.run(&c);
                assert!(v.passed(), "{} on {spec}: {:?}", check.id, v.witness);
            }
        }
    }

    #[test]
    fn named_examples() {
        assert!(verify("THM_SUBN2", &ctx("sym:4")).unwrap().passed());
        let d12 = ctx("dih:12");
        assert!(verify("S_FITTING", &d12).unwrap().passed());
        assert_eq!(d12.s_set().unwrap().order(), 6);
        assert!(verify("REL_ORDER_DIV", &ctx("cyc:1")).unwrap().passed());
    }

    #[test]
    fn cap_gives_skip() {
        let v = verify("THM_SUBN2", &ctx("alt:10")).unwrap();
        assert!(v.is_skipped());
    }

    #[test]
    fn quotient_fittings() {
        let c = ctx("sym:4");
        let l = c.lattice().unwrap();
        assert_eq!(fitting_of_quotients(l, 200).unwrap().order(), 4);
    }
}
