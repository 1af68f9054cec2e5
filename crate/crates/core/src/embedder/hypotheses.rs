//! Combinatorial check of the Edge Embedding Lemma's hypotheses against a
//! plan: incidence of vertices with fixed circles, circular order of sites
//! and the recorded arcs.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::model::{CircleId, Locus, SymmetryModel};
use super::plan::{Arc, EmbeddingPlan};
use super::EmbedError;
use crate::perm::Permutation;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypothesisResult {
    pub pass: bool,
    pub witnesses: Vec<String>,
}

impl HypothesisResult {
    fn from_witnesses(witnesses: Vec<String>) -> Self {
        HypothesisResult {
            pass: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisVerdict {
    pub pass: bool,
    /// Faithful action; an even-order element has a fixed circle iff it is
    /// an involution.
    pub preamble: HypothesisResult,
    /// No vertex pair equals `fix(h) ∩ fix(g)`.
    pub no_intersection_pair: HypothesisResult,
    /// At most one pair fixed by an involution; no pair swapped by an
    /// element of order other than 2.
    pub pairs_fixed_or_swapped: HypothesisResult,
    /// Every pair fixed by a non-trivial element bounds an invariant arc.
    pub invariant_arcs: HypothesisResult,
}

struct Context<'a> {
    plan: &'a EmbeddingPlan,
    model: SymmetryModel,
    perms: Vec<Permutation>,
    occupied: HashMap<Locus, usize>,
}

impl Context<'_> {
    fn name(&self, x: usize) -> String {
        self.model.element_name(x)
    }

    fn fixes(&self, x: usize, v: usize) -> bool {
        self.perms[x].apply(v) == v
    }

    fn vertex(&self, v: usize) -> String {
        format!("{}@{}", v + 1, self.plan.vertex_locus[v])
    }
}

pub fn check_edge_hypotheses(plan: &EmbeddingPlan) -> Result<HypothesisVerdict, EmbedError> {
    plan.validate()?;
    let model = plan.model;
    let perms = (0..model.order())
        .map(|x| plan.element_permutation(x))
        .collect::<Result<Vec<_>, _>>()?;
    let ctx = Context {
        plan,
        model,
        perms,
        occupied: plan.locus_index(),
    };
    let preamble = check_preamble(&ctx);
    let no_intersection_pair = check_intersections(&ctx);
    let pairs_fixed_or_swapped = check_fixed_and_swapped(&ctx);
    let invariant_arcs = check_arcs(&ctx);
    Ok(HypothesisVerdict {
        pass: preamble.pass && no_intersection_pair.pass && pairs_fixed_or_swapped.pass && invariant_arcs.pass,
        preamble,
        no_intersection_pair,
        pairs_fixed_or_swapped,
        invariant_arcs,
    })
}

fn check_preamble(ctx: &Context) -> HypothesisResult {
    let mut witnesses = Vec::new();
    let mut seen: HashMap<&Permutation, usize> = HashMap::new();
    for (x, p) in ctx.perms.iter().enumerate() {
        if let Some(&y) = seen.get(p) {
            witnesses.push(format!(
                "not faithful: {} and {} act identically",
                ctx.name(y),
                ctx.name(x)
            ));
        } else {
            seen.insert(p, x);
        }
    }
    for x in 1..ctx.model.order() {
        let order = ctx.model.element_order(x);
        if order.is_multiple_of(2) && ctx.model.fixed_circle(x).is_some() != (order == 2) {
            witnesses.push(format!(
                "{} has even order {order} but its fixed set is {}",
                ctx.name(x),
                if order == 2 { "empty" } else { "a circle" }
            ));
        }
    }
    HypothesisResult::from_witnesses(witnesses)
}

/// Points where two distinct fixed circles meet; all such points are sites.
fn circle_meet(model: SymmetryModel, a: CircleId, b: CircleId) -> BTreeSet<Locus> {
    let on_b: BTreeSet<Locus> = model.circle_sites(b).into_iter().collect();
    model.circle_sites(a).into_iter().filter(|s| on_b.contains(s)).collect()
}

fn check_intersections(ctx: &Context) -> HypothesisResult {
    let model = ctx.model;
    // one representative element per fixed circle
    let mut owner: Vec<(CircleId, usize)> = Vec::new();
    for x in 1..model.order() {
        if let Some(c) = model.fixed_circle(x) {
            if !owner.iter().any(|(d, _)| *d == c) {
                owner.push((c, x));
            }
        }
    }
    let mut witnesses = Vec::new();
    let mut reported = BTreeSet::new();
    for (i, &(a, h)) in owner.iter().enumerate() {
        for &(b, g) in &owner[i + 1..] {
            let meet = circle_meet(model, a, b);
            if meet.len() != 2 {
                continue;
            }
            let vertices: Vec<usize> = meet.iter().filter_map(|s| ctx.occupied.get(s).copied()).collect();
            if vertices.len() == 2 && reported.insert((vertices[0], vertices[1])) {
                witnesses.push(format!(
                    "vertices {} and {} form fix({}) ∩ fix({}) = {a} ∩ {b}",
                    ctx.vertex(vertices[0]),
                    ctx.vertex(vertices[1]),
                    ctx.name(h),
                    ctx.name(g)
                ));
            }
        }
    }
    HypothesisResult::from_witnesses(witnesses)
}

fn check_fixed_and_swapped(ctx: &Context) -> HypothesisResult {
    let n = ctx.plan.n;
    let mut witnesses = Vec::new();
    let mut fixed_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for x in 1..ctx.model.order() {
        let order = ctx.model.element_order(x);
        let p = &ctx.perms[x];
        if order == 2 {
            let fixed = p.fixed_points();
            for (i, &u) in fixed.iter().enumerate() {
                for &v in &fixed[i + 1..] {
                    fixed_pairs.insert((u, v));
                }
            }
        } else {
            for u in 0..n {
                let v = p.apply(u);
                if u < v && p.apply(v) == u {
                    witnesses.push(format!(
                        "{} of order {order} interchanges {} and {}",
                        ctx.name(x),
                        ctx.vertex(u),
                        ctx.vertex(v)
                    ));
                }
            }
        }
    }
    if fixed_pairs.len() > 1 {
        let shown: Vec<String> = fixed_pairs
            .iter()
            .take(4)
            .map(|&(u, v)| format!("{{{}, {}}}", u + 1, v + 1))
            .collect();
        witnesses.push(format!(
            "{} vertex pairs are fixed by involutions, e.g. {}",
            fixed_pairs.len(),
            shown.join(" ")
        ));
    }
    HypothesisResult::from_witnesses(witnesses)
}

/// Site indices (on the arc's circle) of the closed arc, endpoints included.
fn arc_sites(ctx: &Context, arc: &Arc) -> Result<Vec<usize>, String> {
    let sites = ctx.model.circle_sites(arc.circle);
    let locate = |v: usize| {
        sites
            .iter()
            .position(|s| *s == ctx.plan.vertex_locus[v])
            .ok_or_else(|| format!("vertex {} is not on {}", ctx.vertex(v), arc.circle))
    };
    let (i, j) = (locate(arc.u)?, locate(arc.v)?);
    let len = sites.len();
    let mut out = vec![i];
    let mut s = i;
    while s != j {
        s = if arc.forward { (s + 1) % len } else { (s + len - 1) % len };
        out.push(s);
    }
    Ok(out)
}

fn check_one_arc(ctx: &Context, arc: &Arc) -> Vec<String> {
    let model = ctx.model;
    let sites = model.circle_sites(arc.circle);
    let closed = match arc_sites(ctx, arc) {
        Ok(s) => s,
        Err(e) => return vec![e],
    };
    let label = format!("arc {}-{} on {}", arc.u + 1, arc.v + 1, arc.circle);
    let mut out = Vec::new();
    let interior = &closed[1..closed.len() - 1];
    for &s in interior {
        if let Some(&w) = ctx.occupied.get(&sites[s]) {
            out.push(format!("{label}: interior meets vertex {}", ctx.vertex(w)));
        }
    }
    let closed_set: BTreeSet<Locus> = closed.iter().map(|&s| sites[s]).collect();
    for y in 1..model.order() {
        let keeps_pair = {
            let (a, b) = (ctx.perms[y].apply(arc.u), ctx.perms[y].apply(arc.v));
            (a == arc.u && b == arc.v) || (a == arc.v && b == arc.u)
        };
        let fixes_interior_point = model.fixed_circle(y) == Some(arc.circle)
            || interior.iter().any(|&s| model.act(y, &sites[s]) == sites[s]);
        if !(keeps_pair || fixes_interior_point) {
            continue;
        }
        let image: BTreeSet<Locus> = closed_set.iter().map(|l| model.act(y, l)).collect();
        if model.act_circle(y, arc.circle) != arc.circle || image != closed_set {
            out.push(format!("{label}: {} does not map the arc to itself", ctx.name(y)));
        }
    }
    out
}

fn check_arcs(ctx: &Context) -> HypothesisResult {
    let model = ctx.model;
    let n = ctx.plan.n;
    let mut witnesses = Vec::new();
    for arc in &ctx.plan.arcs {
        witnesses.extend(check_one_arc(ctx, arc));
    }
    for u in 0..n {
        for v in u + 1..n {
            let circles: BTreeSet<CircleId> = (1..model.order())
                .filter(|&x| ctx.fixes(x, u) && ctx.fixes(x, v))
                .filter_map(|x| model.fixed_circle(x))
                .collect();
            for c in circles {
                let recorded = ctx.plan.arcs.iter().any(|a| {
                    a.circle == c && ((a.u == u && a.v == v) || (a.u == v && a.v == u))
                });
                if !recorded {
                    witnesses.push(format!(
                        "pair {}, {} is fixed by rotations about {c} but has no arc",
                        ctx.vertex(u),
                        ctx.vertex(v)
                    ));
                }
            }
        }
    }
    HypothesisResult::from_witnesses(witnesses)
}
