//! Vertex placements for the converse construction, one subcase per
//! divisibility clause.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::model::{CircleId, Locus, SymmetryModel};
use super::EmbedError;
use crate::classifier::{admits, GroupId};
use crate::perm::{closure, Permutation};
use crate::realizability;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubcaseKind {
    Kp,
    KpPlus1,
    KpPlus2,
    KpPlus3,
    Kpq,
    KpqPlus3,
    KpqPlus6,
}

impl SubcaseKind {
    pub fn tag(self) -> &'static str {
        match self {
            SubcaseKind::Kp => "n=kp",
            SubcaseKind::KpPlus1 => "n=kp+1",
            SubcaseKind::KpPlus2 => "n=kp+2",
            SubcaseKind::KpPlus3 => "n=kp+3",
            SubcaseKind::Kpq => "n=kpq",
            SubcaseKind::KpqPlus3 => "n=kpq+3",
            SubcaseKind::KpqPlus6 => "n=kpq+6",
        }
    }

    pub fn offset(self) -> usize {
        match self {
            SubcaseKind::Kp | SubcaseKind::Kpq => 0,
            SubcaseKind::KpPlus1 => 1,
            SubcaseKind::KpPlus2 => 2,
            SubcaseKind::KpPlus3 | SubcaseKind::KpqPlus3 => 3,
            SubcaseKind::KpqPlus6 => 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subcase {
    pub kind: SubcaseKind,
    pub k: usize,
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k={})", self.kind.tag(), self.k)
    }
}

/// An arc of `circle` between the vertices `u` and `v`, running from `u`'s
/// site in increasing site order (`forward`) or decreasing order to `v`'s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    pub u: usize,
    pub v: usize,
    pub circle: CircleId,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingPlan {
    pub n: usize,
    pub group: GroupId,
    pub model: SymmetryModel,
    pub subcase: Subcase,
    pub vertex_locus: Vec<Locus>,
    pub generators: Vec<(String, Permutation)>,
    pub arcs: Vec<Arc>,
    pub notes: Vec<String>,
}

impl EmbeddingPlan {
    /// Permutation of the vertices induced by model element `x`.
    pub fn element_permutation(&self, x: usize) -> Result<Permutation, EmbedError> {
        let index = self.locus_index();
        let images = self
            .vertex_locus
            .iter()
            .map(|l| {
                let image = self.model.act(x, l);
                index.get(&image).copied().ok_or_else(|| {
                    EmbedError::Malformed(format!(
                        "{} sends {l} to {image}, which is not a vertex",
                        self.model.element_name(x)
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Permutation::from_images(images)?)
    }

    pub fn locus_index(&self) -> HashMap<Locus, usize> {
        self.vertex_locus.iter().enumerate().map(|(v, &l)| (l, v)).collect()
    }

    /// Structural checks: loci valid and distinct, vertex set invariant,
    /// stored generators equal to the induced ones.
    pub fn validate(&self) -> Result<(), EmbedError> {
        if self.vertex_locus.len() != self.n {
            return Err(EmbedError::Malformed(format!(
                "{} loci for {} vertices",
                self.vertex_locus.len(),
                self.n
            )));
        }
        if let Some(l) = self.vertex_locus.iter().find(|l| !self.model.is_valid_locus(l)) {
            return Err(EmbedError::Malformed(format!("locus {l} does not exist in {:?}", self.model)));
        }
        if self.locus_index().len() != self.n {
            return Err(EmbedError::Malformed("two vertices share a locus".into()));
        }
        for x in 0..self.model.order() {
            self.element_permutation(x)?;
        }
        let induced = induced_generators(self)?;
        if induced != self.generators {
            return Err(EmbedError::Malformed("stored generators differ from the induced action".into()));
        }
        for arc in &self.arcs {
            if arc.u >= self.n || arc.v >= self.n || arc.u == arc.v || !self.model.is_valid_circle(arc.circle) {
                return Err(EmbedError::Malformed(format!("arc {arc:?} is not well formed")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertex_locus
            .iter()
            .enumerate()
            .map(|(v, l)| json!({ "id": v + 1, "locus": l }))
            .collect();
        let generators: serde_json::Map<String, Value> = self
            .generators
            .iter()
            .map(|(name, p)| (name.clone(), Value::String(p.to_string())))
            .collect();
        let arcs: Vec<Value> = self
            .arcs
            .iter()
            .map(|a| {
                json!({
                    "u": a.u + 1,
                    "v": a.v + 1,
                    "circle": a.circle,
                    "direction": if a.forward { "forward" } else { "backward" },
                })
            })
            .collect();
        json!({
            "n": self.n,
            "group": self.group,
            "model": self.model,
            "subcase": self.subcase.kind.tag(),
            "k": self.subcase.k,
            "vertices": vertices,
            "generators": generators,
            "arcs": arcs,
            "notes": self.notes,
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!("K_{} with {}: subcase {}\n", self.n, self.group, self.subcase);
        let model = match self.model {
            SymmetryModel::Dihedral { p } => format!("D{p} generated by rotations g (order {p}) and f (order 2)"),
            SymmetryModel::Product { p, q } => format!("Z{p}xZ{q} generated by rotations g (order {p}) and f (order {q})"),
        };
        out.push_str(&format!("model: {model}\n"));
        out.push_str("vertices:\n");
        for (v, l) in self.vertex_locus.iter().enumerate() {
            out.push_str(&format!("  {:>3}  {l}\n", v + 1));
        }
        out.push_str("generators:\n");
        for (name, p) in &self.generators {
            out.push_str(&format!("  {name} = {p}   [{}]\n", p.cycle_type()));
        }
        if !self.arcs.is_empty() {
            out.push_str("arcs:\n");
            for a in &self.arcs {
                let dir = if a.forward { "forward" } else { "backward" };
                out.push_str(&format!("  {}-{} on {} ({dir})\n", a.u + 1, a.v + 1, a.circle));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Model elements whose vertex permutations are the plan's generators.
fn generator_elements(group: GroupId, model: SymmetryModel) -> Vec<(&'static str, usize)> {
    match (group, model) {
        (GroupId::Cyclic(2), SymmetryModel::Dihedral { p }) => vec![("f", p)],
        (GroupId::Cyclic(_), SymmetryModel::Dihedral { .. }) => vec![("g", 1)],
        (_, SymmetryModel::Dihedral { p }) => vec![("g", 1), ("f", p)],
        (_, SymmetryModel::Product { q, .. }) => vec![("g", q), ("f", 1)],
    }
}

/// The named generator permutations of the target group, read off the plan.
pub fn induced_generators(plan: &EmbeddingPlan) -> Result<Vec<(String, Permutation)>, EmbedError> {
    generator_elements(plan.group, plan.model)
        .into_iter()
        .map(|(name, x)| Ok((name.to_string(), plan.element_permutation(x)?)))
        .collect()
}

/// Defining relations of the target group on the vertices: `f g f = g^-1`
/// for dihedral plans, `g f = f g` for product plans. Trivially true for
/// single-generator plans.
pub fn relations_hold(plan: &EmbeddingPlan) -> Result<bool, EmbedError> {
    let gens = induced_generators(plan)?;
    if gens.len() < 2 {
        return Ok(true);
    }
    let (g, f) = (&gens[0].1, &gens[1].1);
    Ok(match plan.model {
        SymmetryModel::Dihedral { .. } => f.compose(&g.compose(f)?)? == g.inverse(),
        SymmetryModel::Product { .. } => g.commutes_with(f)?,
    })
}

fn generic_balls(model: SymmetryModel, balls: usize, out: &mut Vec<Locus>) {
    for ball in 0..balls {
        for element in 0..model.order() {
            out.push(Locus::GenericOrbitPoint { ball, element });
        }
    }
}

fn dihedral_loci(p: usize, subcase: Subcase) -> Vec<Locus> {
    let model = SymmetryModel::Dihedral { p };
    let k = subcase.k;
    let mut loci = Vec::new();
    let axis_vertices = |loci: &mut Vec<Locus>| {
        loci.extend((0..p).map(|index| Locus::InvolutionAxis { index, position: 0 }));
    };
    match subcase.kind {
        SubcaseKind::Kp | SubcaseKind::KpPlus2 => {
            axis_vertices(&mut loci);
            generic_balls(model, (k - 1) / 2, &mut loci);
        }
        SubcaseKind::KpPlus1 | SubcaseKind::KpPlus3 => {
            generic_balls(model, k / 2, &mut loci);
            loci.push(Locus::IntersectionPoint { index: 0 });
        }
        _ => unreachable!("product subcase in a dihedral plan"),
    }
    if matches!(subcase.kind, SubcaseKind::KpPlus2 | SubcaseKind::KpPlus3) {
        loci.push(Locus::AxisCircleG { position: 0 });
        loci.push(Locus::AxisCircleG { position: 1 });
    }
    loci
}

fn product_loci(p: usize, q: usize, subcase: Subcase) -> Vec<Locus> {
    let model = SymmetryModel::Product { p, q };
    let mut loci = Vec::new();
    generic_balls(model, subcase.k, &mut loci);
    if matches!(subcase.kind, SubcaseKind::KpqPlus3 | SubcaseKind::KpqPlus6) {
        loci.extend((0..p).map(|position| Locus::AxisCircleF { position }));
    }
    if subcase.kind == SubcaseKind::KpqPlus6 {
        loci.extend((0..q).map(|position| Locus::AxisCircleG { position }));
    }
    loci
}

/// Arcs for every vertex pair fixed pointwise by a non-trivial element, on
/// that element's fixed circle. From the pair's earlier site the forward
/// gap is preferred when its interior avoids all vertices, then the
/// backward one; if neither works no arc is recorded (and the hypothesis
/// check will say so).
pub fn choose_arcs(model: SymmetryModel, loci: &[Locus]) -> Vec<Arc> {
    let index: HashMap<Locus, usize> = loci.iter().enumerate().map(|(v, &l)| (l, v)).collect();
    let mut arcs = Vec::new();
    for c in model.circles() {
        let fixes_circle = (1..model.order()).any(|x| model.fixed_circle(x) == Some(c));
        if !fixes_circle {
            continue;
        }
        let sites = model.circle_sites(c);
        let occupied: Vec<Option<usize>> = sites.iter().map(|s| index.get(s).copied()).collect();
        let len = sites.len();
        for i in 0..len {
            for j in i + 1..len {
                let (Some(u), Some(v)) = (occupied[i], occupied[j]) else { continue };
                let forward_free = (i + 1..j).all(|s| occupied[s].is_none());
                let backward_free = (j + 1..len).chain(0..i).all(|s| occupied[s].is_none());
                if forward_free {
                    arcs.push(Arc { u, v, circle: c, forward: true });
                } else if backward_free {
                    arcs.push(Arc { u, v, circle: c, forward: false });
                }
            }
        }
    }
    arcs
}

fn subcase_for(n: usize, group: GroupId, clause: &str) -> Result<(SymmetryModel, Subcase), EmbedError> {
    let internal = || EmbedError::Internal(format!("no construction matches {group} on K_{n} (clause {clause})"));
    let dihedral = |p: usize, kind: SubcaseKind| {
        let k = (n - kind.offset()) / p;
        (SymmetryModel::Dihedral { p }, Subcase { kind, k })
    };
    let product = |p: usize, q: usize, kind: SubcaseKind| {
        let k = (n - kind.offset()) / (p * q);
        (SymmetryModel::Product { p, q }, Subcase { kind, k })
    };
    let chosen = match (group, clause) {
        (GroupId::Cyclic(2), _) => match n % 3 {
            0 => dihedral(3, SubcaseKind::Kp),
            1 => dihedral(3, SubcaseKind::KpPlus1),
            _ => dihedral(3, SubcaseKind::KpPlus2),
        },
        (GroupId::Cyclic(p) | GroupId::Dihedral(p), "p|n") => dihedral(p, SubcaseKind::Kp),
        (GroupId::Cyclic(p) | GroupId::Dihedral(p), "p|n-1") => dihedral(p, SubcaseKind::KpPlus1),
        (GroupId::Cyclic(p) | GroupId::Dihedral(p), "p|n-2") => dihedral(p, SubcaseKind::KpPlus2),
        (GroupId::Cyclic(p) | GroupId::Dihedral(p), "p|n-3") => dihedral(p, SubcaseKind::KpPlus3),
        (GroupId::ProductCyclic(p, q), "pq|n") => product(p, q, SubcaseKind::Kpq),
        (GroupId::ProductCyclic(p, q), "p=3,pq|n-3") => product(p, q, SubcaseKind::KpqPlus3),
        (GroupId::ProductCyclic(p, q), "p=q=3,pq|n-6") => product(p, q, SubcaseKind::KpqPlus6),
        _ => return Err(internal()),
    };
    // parity demanded by the construction
    let (model, subcase) = chosen;
    let parity_ok = match subcase.kind {
        SubcaseKind::Kp | SubcaseKind::KpPlus2 => subcase.k % 2 == 1,
        SubcaseKind::KpPlus1 | SubcaseKind::KpPlus3 => subcase.k % 2 == 0,
        _ => true,
    };
    let unit = match model {
        SymmetryModel::Dihedral { p } => p,
        SymmetryModel::Product { p, q } => p * q,
    };
    if !parity_ok || subcase.k * unit + subcase.kind.offset() != n {
        return Err(internal());
    }
    Ok((model, subcase))
}

/// Symbolic vertex placement realizing `group` on `K_n`, with the induced
/// generators and the invariant arcs the edge construction needs.
pub fn plan_embedding(n: usize, group: GroupId) -> Result<EmbeddingPlan, EmbedError> {
    let witness = admits(n, group)?;
    if !witness.admitted {
        return Err(EmbedError::NotAdmitted { group, reason: witness.reason });
    }
    let clause = witness.clause.unwrap_or_default();
    let (model, subcase) = subcase_for(n, group, &clause)?;
    let vertex_locus = match model {
        SymmetryModel::Dihedral { p } => dihedral_loci(p, subcase),
        SymmetryModel::Product { p, q } => product_loci(p, q, subcase),
    };
    let arcs = choose_arcs(model, &vertex_locus);

    let mut notes = vec!["edges: embedded by the Edge Embedding Lemma (assumed, not constructed)".to_string()];
    match group {
        GroupId::Cyclic(2) => notes.push(
            "restrict to <f> in D3; the Subgroup Theorem gives an embedding with exactly this group".into(),
        ),
        GroupId::Cyclic(p) => notes.push(format!(
            "restrict to the rotation subgroup <g> of D{p}; the Subgroup Theorem gives an embedding with exactly this group"
        )),
        _ => notes.push("the Subgroup Theorem cuts the symmetry group down to exactly this group".into()),
    }

    let mut plan = EmbeddingPlan {
        n,
        group,
        model,
        subcase,
        vertex_locus,
        generators: Vec::new(),
        arcs,
        notes,
    };
    plan.generators = induced_generators(&plan)?;
    plan.validate()?;
    check_plan_invariants(&plan)?;
    Ok(plan)
}

/// Faithfulness and realizability of the induced action.
fn check_plan_invariants(plan: &EmbeddingPlan) -> Result<(), EmbedError> {
    let gens: Vec<Permutation> = plan.generators.iter().map(|(_, p)| p.clone()).collect();
    let order = closure(&gens, plan.n)?.len();
    let expected = plan.group.order().unwrap_or(0);
    if order != expected {
        return Err(EmbedError::Internal(format!(
            "generators of the {} plan on K_{} generate a group of order {order}, expected {expected}",
            plan.group, plan.n
        )));
    }
    for (name, p) in &plan.generators {
        let ct = p.cycle_type();
        let verdict = realizability::check(&ct, p.order()).map_err(|e| EmbedError::Internal(e.to_string()))?;
        if !verdict.realizable {
            return Err(EmbedError::Internal(format!("generator {name} = {p} is not realizable: {}", verdict.reason)));
        }
    }
    if !relations_hold(plan)? {
        return Err(EmbedError::Internal("generator relations fail".into()));
    }
    Ok(())
}
