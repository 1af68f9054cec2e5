//! Symbolic geometry of the two finite rotation groups used by the
//! construction: `D_p` generated by rotations about two circles meeting in
//! two points, and `Z_p x Z_q` generated by rotations about two disjoint,
//! linked circles.

use std::fmt;

use serde::Serialize;

/// Where a vertex sits. Positions index the sites of a circle in its
/// circular order; generic points are labelled by a ball and the group
/// element carrying the ball's base point there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind")]
pub enum Locus {
    AxisCircleG { position: usize },
    AxisCircleF { position: usize },
    IntersectionPoint { index: usize },
    InvolutionAxis { index: usize, position: usize },
    GenericOrbitPoint { ball: usize, element: usize },
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Locus::AxisCircleG { position } => write!(f, "C_g[{position}]"),
            Locus::AxisCircleF { position } => write!(f, "C_f[{position}]"),
            Locus::IntersectionPoint { index } => write!(f, "P{index}"),
            Locus::InvolutionAxis { index, position } => write!(f, "A{index}[{position}]"),
            Locus::GenericOrbitPoint { ball, element } => write!(f, "B{ball}.{element}"),
        }
    }
}

/// A fixed-point circle of some element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleId {
    G,
    F,
    /// Dihedral only: the axis of the involution `g^(2j) f`; `Axis(0)` is `C_f`.
    Axis(usize),
}

impl fmt::Display for CircleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleId::G => f.write_str("C_g"),
            CircleId::F => f.write_str("C_f"),
            CircleId::Axis(j) => write!(f, "A{j}"),
        }
    }
}

impl Serialize for CircleId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The acting group. Elements are indexed `0..order()`, with 0 the identity.
///
/// Dihedral: `i < p` is `g^i`, `p + i` is `g^i f`.
/// Product: `a*q + b` is `g^a f^b` with `g` of order `p`, `f` of order `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum SymmetryModel {
    Dihedral { p: usize },
    Product { p: usize, q: usize },
}

impl SymmetryModel {
    pub fn order(&self) -> usize {
        match *self {
            SymmetryModel::Dihedral { p } => 2 * p,
            SymmetryModel::Product { p, q } => p * q,
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element_name(&self, x: usize) -> String {
        match *self {
            SymmetryModel::Dihedral { p } => match (x % p, x >= p) {
                (0, false) => "e".into(),
                (0, true) => "f".into(),
                (i, false) => format!("g^{i}"),
                (i, true) => format!("g^{i} f"),
            },
            SymmetryModel::Product { q, .. } => {
                let (a, b) = (x / q, x % q);
                match (a, b) {
                    (0, 0) => "e".into(),
                    (a, 0) => format!("g^{a}"),
                    (0, b) => format!("f^{b}"),
                    (a, b) => format!("g^{a} f^{b}"),
                }
            }
        }
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        match *self {
            SymmetryModel::Dihedral { p } => {
                let (i, xr) = (x % p, x >= p);
                let (j, yr) = (y % p, y >= p);
                match (xr, yr) {
                    (false, false) => (i + j) % p,
                    (false, true) => p + (i + j) % p,
                    (true, false) => p + (i + p - j) % p,
                    (true, true) => (i + p - j) % p,
                }
            }
            SymmetryModel::Product { p, q } => {
                let a = (x / q + y / q) % p;
                let b = (x % q + y % q) % q;
                a * q + b
            }
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut power = x;
        while power != self.identity() {
            power = self.multiply(power, x);
            k += 1;
        }
        k
    }

    /// The circle fixed pointwise by `x`, if any. The identity has none
    /// (it fixes everything and is handled separately).
    pub fn fixed_circle(&self, x: usize) -> Option<CircleId> {
        match *self {
            SymmetryModel::Dihedral { p } => {
                if x == 0 {
                    None
                } else if x < p {
                    Some(CircleId::G)
                } else {
                    // g^i f fixes the axis A_j with 2j = i (mod p)
                    let inv2 = p.div_ceil(2);
                    Some(CircleId::Axis((x - p) * inv2 % p))
                }
            }
            SymmetryModel::Product { q, .. } => match (x / q, x % q) {
                (0, 0) => None,
                (_, 0) => Some(CircleId::G),
                (0, _) => Some(CircleId::F),
                _ => None,
            },
        }
    }

    pub fn circles(&self) -> Vec<CircleId> {
        match *self {
            SymmetryModel::Dihedral { p } => {
                let mut out = vec![CircleId::G];
                out.extend((0..p).map(CircleId::Axis));
                out
            }
            SymmetryModel::Product { .. } => vec![CircleId::G, CircleId::F],
        }
    }

    /// The distinguished points of a circle in circular order. Every point
    /// where two fixed circles meet is among them, and every circle has at
    /// least three sites.
    pub fn circle_sites(&self, c: CircleId) -> Vec<Locus> {
        match (*self, c) {
            (SymmetryModel::Dihedral { .. }, CircleId::G) => vec![
                Locus::IntersectionPoint { index: 0 },
                Locus::AxisCircleG { position: 0 },
                Locus::IntersectionPoint { index: 1 },
                Locus::AxisCircleG { position: 1 },
            ],
            (SymmetryModel::Dihedral { .. }, CircleId::Axis(j)) => vec![
                Locus::IntersectionPoint { index: 0 },
                Locus::InvolutionAxis { index: j, position: 0 },
                Locus::IntersectionPoint { index: 1 },
                Locus::InvolutionAxis { index: j, position: 1 },
            ],
            (SymmetryModel::Product { q, .. }, CircleId::G) => {
                (0..q).map(|position| Locus::AxisCircleG { position }).collect()
            }
            (SymmetryModel::Product { p, .. }, CircleId::F) => {
                (0..p).map(|position| Locus::AxisCircleF { position }).collect()
            }
            _ => Vec::new(),
        }
    }

    pub fn is_valid_circle(&self, c: CircleId) -> bool {
        match (*self, c) {
            (SymmetryModel::Dihedral { p }, CircleId::Axis(j)) => j < p,
            (SymmetryModel::Dihedral { .. }, CircleId::G) => true,
            (SymmetryModel::Product { .. }, CircleId::G | CircleId::F) => true,
            _ => false,
        }
    }

    pub fn is_valid_locus(&self, l: &Locus) -> bool {
        match (*self, *l) {
            (SymmetryModel::Dihedral { p }, Locus::InvolutionAxis { index, position }) => index < p && position < 2,
            (SymmetryModel::Dihedral { .. }, Locus::AxisCircleG { position }) => position < 2,
            (SymmetryModel::Dihedral { .. }, Locus::IntersectionPoint { index }) => index < 2,
            (SymmetryModel::Product { q, .. }, Locus::AxisCircleG { position }) => position < q,
            (SymmetryModel::Product { p, .. }, Locus::AxisCircleF { position }) => position < p,
            (model, Locus::GenericOrbitPoint { element, .. }) => element < model.order(),
            _ => false,
        }
    }

    pub fn act(&self, x: usize, l: &Locus) -> Locus {
        match (*self, *l) {
            (_, Locus::GenericOrbitPoint { ball, element }) => Locus::GenericOrbitPoint {
                ball,
                element: self.multiply(x, element),
            },
            (SymmetryModel::Dihedral { .. }, Locus::IntersectionPoint { .. }) => *l,
            (SymmetryModel::Dihedral { p }, Locus::AxisCircleG { position }) => Locus::AxisCircleG {
                position: if x < p { position } else { 1 - position },
            },
            (SymmetryModel::Dihedral { p }, Locus::InvolutionAxis { index, position }) => Locus::InvolutionAxis {
                index: dihedral_axis_image(p, x, index),
                position,
            },
            (SymmetryModel::Product { p, q }, Locus::AxisCircleF { position }) => Locus::AxisCircleF {
                position: (position + x / q) % p,
            },
            (SymmetryModel::Product { q, .. }, Locus::AxisCircleG { position }) => Locus::AxisCircleG {
                position: (position + x % q) % q,
            },
            // loci foreign to the model are rejected by validation
            _ => *l,
        }
    }

    pub fn act_circle(&self, x: usize, c: CircleId) -> CircleId {
        match (*self, c) {
            (SymmetryModel::Dihedral { p }, CircleId::Axis(j)) => CircleId::Axis(dihedral_axis_image(p, x, j)),
            _ => c,
        }
    }
}

fn dihedral_axis_image(p: usize, x: usize, j: usize) -> usize {
    if x < p {
        (j + x) % p
    } else {
        (x - p + p - j) % p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let m = SymmetryModel::Dihedral { p: 5 };
        let (g, f) = (1, 5);
        // f g f = g^-1
        assert_eq!(m.multiply(f, m.multiply(g, f)), 4);
        assert_eq!(m.element_order(g), 5);
        for x in 5..10 {
            assert_eq!(m.element_order(x), 2);
        }
        // associativity on the whole group
        for x in 0..10 {
            for y in 0..10 {
                for z in 0..10 {
                    assert_eq!(m.multiply(m.multiply(x, y), z), m.multiply(x, m.multiply(y, z)));
                }
            }
        }
    }

    #[test]
    fn action_is_a_group_action() {
        for m in [SymmetryModel::Dihedral { p: 7 }, SymmetryModel::Product { p: 3, q: 9 }] {
            let mut loci = vec![Locus::GenericOrbitPoint { ball: 0, element: 3 }];
            for c in m.circles() {
                loci.extend(m.circle_sites(c));
            }
            for l in &loci {
                assert!(m.is_valid_locus(l), "{l}");
                assert_eq!(m.act(0, l), *l);
                for x in 0..m.order() {
                    for y in 0..m.order() {
                        assert_eq!(m.act(x, &m.act(y, l)), m.act(m.multiply(x, y), l));
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_circles_match_the_action() {
        for m in [SymmetryModel::Dihedral { p: 5 }, SymmetryModel::Product { p: 3, q: 3 }] {
            for x in 1..m.order() {
                let Some(c) = m.fixed_circle(x) else { continue };
                for site in m.circle_sites(c) {
                    assert_eq!(m.act(x, &site), site, "{} on {c}", m.element_name(x));
                }
                assert_eq!(m.act_circle(x, c), c);
            }
        }
    }
}
