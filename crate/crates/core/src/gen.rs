//! Constructors and a seeded generator for alternating diagrams.
//!
//! Shadows are assembled from 2-strand tangles (twist regions composed
//! horizontally) and closed; the alternating over/under assignment is
//! then re-derived by phase propagation along each component. Every
//! built diagram passes the planarity validation in `PlanarDiagram::new`.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Crossing, CrossingId, EdgeId, PlanarDiagram, Port};
use crate::error::{Error, Result};

/// The (2,2k) torus link diagram: closure of the 2-braid with 2k
/// crossings. Alternating, two components.
pub fn torus_2k(k: usize) -> PlanarDiagram {
    assert!(k >= 1);
    let n = 2 * k as u32;
    let mut code: Vec<[u32; 4]> = Vec::new();
    for i in 1..=n {
        if i < n {
            code.push([2 * i - 1, 2 * i, 2 * i + 2, 2 * i + 1]);
        } else {
            code.push([2 * i - 1, 2 * i, 2, 1]);
        }
    }
    PlanarDiagram::from_pd_code(&code).expect("torus closure is planar")
}

/// A 2-strand tangle under construction, with four open ends in compass
/// positions. Slots 0..3 of each crossing sit at SW, SE, NE, NW.
#[derive(Clone)]
pub struct TangleBuilder {
    crossings: BTreeMap<CrossingId, Crossing>,
    next_edge: EdgeId,
    next_crossing: CrossingId,
    nw: Port,
    ne: Port,
    se: Port,
    sw: Port,
}

const UNSET: EdgeId = u32::MAX;

impl TangleBuilder {
    /// The one-crossing tangle.
    pub fn crossing() -> Self {
        let mut crossings = BTreeMap::new();
        crossings.insert(0, Crossing { slots: [UNSET; 4] });
        TangleBuilder {
            crossings,
            next_edge: 1,
            next_crossing: 1,
            sw: Port::new(0, 0),
            se: Port::new(0, 1),
            ne: Port::new(0, 2),
            nw: Port::new(0, 3),
        }
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    fn connect(&mut self, p: Port, q: Port) {
        let e = self.next_edge;
        self.next_edge += 1;
        self.crossings.get_mut(&p.crossing).unwrap().slots[p.slot as usize] = e;
        self.crossings.get_mut(&q.crossing).unwrap().slots[q.slot as usize] = e;
    }

    fn fresh_crossing(&mut self) -> CrossingId {
        let c = self.next_crossing;
        self.next_crossing += 1;
        self.crossings.insert(c, Crossing { slots: [UNSET; 4] });
        c
    }

    /// Twists the NE and SE ends around a new crossing on the right.
    pub fn twist_right(&mut self) {
        let x = self.fresh_crossing();
        self.connect(self.ne, Port::new(x, 3));
        self.connect(self.se, Port::new(x, 0));
        self.ne = Port::new(x, 2);
        self.se = Port::new(x, 1);
    }

    /// Twists the SW and SE ends around a new crossing below.
    pub fn twist_bottom(&mut self) {
        let x = self.fresh_crossing();
        self.connect(self.sw, Port::new(x, 3));
        self.connect(self.se, Port::new(x, 2));
        self.sw = Port::new(x, 0);
        self.se = Port::new(x, 1);
    }

    /// Rotates the tangle a quarter turn counterclockwise: only the
    /// boundary labels move, the rotation system is unchanged.
    pub fn rotate(&mut self) {
        let (nw, ne, se, sw) = (self.nw, self.ne, self.se, self.sw);
        self.nw = ne;
        self.ne = se;
        self.se = sw;
        self.sw = nw;
    }

    /// Places `other` to the right of `self` and joins the facing ends.
    pub fn sum(mut self, other: TangleBuilder) -> TangleBuilder {
        let offset_c = self.next_crossing;
        let offset_e = self.next_edge;
        let shift = |p: Port| Port::new(p.crossing + offset_c, p.slot);
        for (c, x) in other.crossings {
            let slots =
                x.slots.map(|e| if e == UNSET { UNSET } else { e + offset_e });
            self.crossings.insert(c + offset_c, Crossing { slots });
        }
        self.next_crossing += other.next_crossing;
        self.next_edge += other.next_edge;
        let (o_nw, o_sw, o_ne, o_se) =
            (shift(other.nw), shift(other.sw), shift(other.ne), shift(other.se));
        self.connect(self.ne, o_nw);
        self.connect(self.se, o_sw);
        self.ne = o_ne;
        self.se = o_se;
        self
    }

    /// Joins NW–NE over the top and SW–SE under the bottom.
    pub fn close_numerator(mut self) -> Result<PlanarDiagram> {
        self.connect(self.nw, self.ne);
        self.connect(self.sw, self.se);
        PlanarDiagram::new(self.crossings, 0, true)
    }

    /// Joins NW–SW along the left and NE–SE along the right.
    pub fn close_denominator(mut self) -> Result<PlanarDiagram> {
        self.connect(self.nw, self.sw);
        self.connect(self.ne, self.se);
        PlanarDiagram::new(self.crossings, 0, true)
    }
}

/// Re-derives an alternating over/under assignment for the shadow of a
/// connected diagram by rotating crossings. Every connected shadow
/// admits exactly two such assignments; this returns one of them.
pub fn make_alternating(d: &PlanarDiagram) -> Result<PlanarDiagram> {
    let walks = d.component_walks();
    // rotate[c]: shift the slots of c by one, swapping the under strand.
    let mut rotate: BTreeMap<CrossingId, bool> = BTreeMap::new();
    let mut done = vec![false; walks.len()];
    for _ in 0..walks.len() {
        // Prefer a walk constrained by an already fixed crossing.
        let pick = (0..walks.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                walks[i].passages.iter().filter(|p| rotate.contains_key(&p.crossing)).count()
            })
            .expect("unprocessed walk remains");
        done[pick] = true;
        let passages = &walks[pick].passages;
        if passages.len() % 2 != 0 {
            return Err(Error::NotAlternating);
        }
        let mut chosen = None;
        'phase: for phase in 0..2usize {
            let mut trial: BTreeMap<CrossingId, bool> = BTreeMap::new();
            for (i, p) in passages.iter().enumerate() {
                let want_under = (i + phase) % 2 == 0;
                let natural_under = p.slot % 2 == 0;
                let rot = want_under != natural_under;
                let prior = rotate.get(&p.crossing).or_else(|| trial.get(&p.crossing));
                if let Some(&r) = prior {
                    if r != rot {
                        continue 'phase;
                    }
                } else {
                    trial.insert(p.crossing, rot);
                }
            }
            chosen = Some(trial);
            break;
        }
        match chosen {
            Some(trial) => rotate.extend(trial),
            None => return Err(Error::NotAlternating),
        }
    }
    let crossings = d
        .crossings()
        .iter()
        .map(|(&c, x)| {
            let s = x.slots;
            let slots = if rotate.get(&c).copied().unwrap_or(false) {
                [s[1], s[2], s[3], s[0]]
            } else {
                s
            };
            (c, Crossing { slots })
        })
        .collect();
    let out = PlanarDiagram::new(crossings, d.free_circles(), true)?;
    debug_assert!(out.is_alternating().unwrap());
    Ok(out)
}

/// The alternating 2-bridge diagram of the continued-fraction twist
/// vector: groups of horizontal and vertical twists, numerator-closed.
pub fn rational_closure(cf: &[usize]) -> PlanarDiagram {
    assert!(!cf.is_empty() && cf.iter().all(|&a| a >= 1));
    let mut t = TangleBuilder::crossing();
    for _ in 1..cf[0] {
        t.twist_right();
    }
    for (i, &a) in cf.iter().enumerate().skip(1) {
        for _ in 0..a {
            if i % 2 == 1 {
                t.twist_bottom();
            } else {
                t.twist_right();
            }
        }
    }
    let shadow = t.close_numerator().expect("tangle closure is planar");
    make_alternating(&shadow).expect("shadows of connected diagrams alternate")
}

/// The alternating pretzel diagram: vertical twist stacks composed
/// horizontally, numerator-closed.
pub fn pretzel(parts: &[usize]) -> PlanarDiagram {
    assert!(parts.len() >= 2 && parts.iter().all(|&p| p >= 1));
    let stack = |p: usize| {
        let mut t = TangleBuilder::crossing();
        for _ in 1..p {
            t.twist_bottom();
        }
        t
    };
    let mut t = stack(parts[0]);
    for &p in &parts[1..] {
        t = t.sum(stack(p));
    }
    let shadow = t.close_numerator().expect("tangle closure is planar");
    make_alternating(&shadow).expect("shadows of connected diagrams alternate")
}

/// The three-circle overlap diagram: six crossings, all eight faces
/// triangles (the plane octahedron). The smallest shadow with no 2-gon.
pub fn borromean() -> PlanarDiagram {
    let shadow = PlanarDiagram::from_pd_code(&[
        [7, 4, 8, 1],
        [3, 6, 2, 5],
        [11, 8, 12, 5],
        [7, 10, 6, 9],
        [3, 12, 4, 9],
        [11, 2, 10, 1],
    ])
    .expect("octahedral rotation system is planar");
    make_alternating(&shadow).expect("connected shadow alternates")
}

/// Replaces crossing `c` by a 2-crossing twist region with the opposite
/// through-pairing, so the strands that crossed once now pass each other
/// twice. Adds one 2-gon and may merge two components.
pub fn double_crossing(d: &PlanarDiagram, c: CrossingId) -> Result<PlanarDiagram> {
    let x = *d.crossing(c)?;
    let [a, b, c_, d_] = x.slots;
    let e = d.max_edge_label();
    let (p, q) = (e + 1, e + 2);
    let id = d.max_crossing_id();
    let mut crossings = d.crossings().clone();
    crossings.remove(&c);
    crossings.insert(id + 1, Crossing { slots: [a, b, q, p] });
    crossings.insert(id + 2, Crossing { slots: [p, q, c_, d_] });
    let out = PlanarDiagram::new(crossings, d.free_circles(), d.has_over_under())?;
    debug_assert!(!out.has_over_under() || out.is_alternating().unwrap());
    Ok(out)
}

/// Seeded generator of random reduced alternating diagrams.
pub struct DiagramGen {
    rng: ChaCha8Rng,
}

impl DiagramGen {
    pub fn new(seed: u64) -> Self {
        DiagramGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A random connected reduced alternating diagram with the requested
    /// component count and a crossing count in `min_n..=max_n`.
    pub fn reduced_alternating(
        &mut self,
        components: u32,
        min_n: usize,
        max_n: usize,
    ) -> PlanarDiagram {
        for _ in 0..100_000 {
            let Ok(d) = self.random_closed_shadow(max_n) else { continue };
            if d.n_crossings() < min_n || d.n_crossings() > max_n {
                continue;
            }
            if !d.is_connected() || d.components().count != components {
                continue;
            }
            if !d.monogons().is_empty() {
                continue;
            }
            if let Ok(alt) = make_alternating(&d) {
                return alt;
            }
        }
        panic!("generator failed to produce a diagram within 100000 attempts");
    }

    fn random_closed_shadow(&mut self, budget: usize) -> Result<PlanarDiagram> {
        let budget = budget.max(2);
        let summands = self.rng.gen_range(1..=3usize).min(budget);
        let mut sizes = Vec::new();
        let mut left = budget;
        for i in 0..summands {
            let remaining_summands = summands - i - 1;
            let hi = left - remaining_summands;
            let size = if remaining_summands == 0 { hi } else { self.rng.gen_range(1..=hi) };
            sizes.push(size);
            left -= size;
        }
        let mut tangles = Vec::new();
        for size in sizes {
            let mut t = TangleBuilder::crossing();
            for _ in 1..size {
                if self.rng.gen_bool(0.5) {
                    t.twist_right();
                } else {
                    t.twist_bottom();
                }
            }
            tangles.push(t);
        }
        let mut t = tangles.remove(0);
        for other in tangles {
            t = t.sum(other);
        }
        if self.rng.gen_bool(0.5) {
            t.close_numerator()
        } else {
            t.close_denominator()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_links_are_valid() {
        for k in 1..=3 {
            let d = torus_2k(k);
            assert_eq!(d.n_crossings(), 2 * k);
            assert_eq!(d.components().count, 2);
            assert!(d.is_alternating().unwrap());
            assert!(d.faces().unwrap().iter().any(|f| f.degree() == 2));
        }
    }

    #[test]
    fn two_twist_closure_is_the_hopf_diagram() {
        let d = rational_closure(&[2]);
        let hopf = PlanarDiagram::parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap();
        assert_eq!(d.canonical_code(), hopf.canonical_code());
    }

    #[test]
    fn rational_closures_are_alternating() {
        for cf in [&[3][..], &[4], &[2, 1, 2], &[3, 3], &[2, 2, 2], &[4, 1, 2], &[2, 3, 2]] {
            let d = rational_closure(cf);
            let n: usize = cf.iter().sum();
            assert_eq!(d.n_crossings(), n);
            assert!(d.is_alternating().unwrap());
            assert!(d.is_connected());
        }
    }

    #[test]
    fn whitehead_shape() {
        let d = rational_closure(&[2, 1, 2]);
        assert_eq!(d.n_crossings(), 5);
        assert_eq!(d.components().count, 2);
        assert!(d.monogons().is_empty());
    }

    #[test]
    fn trefoil_from_twists() {
        let d = rational_closure(&[3]);
        let trefoil =
            PlanarDiagram::from_pd_code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_eq!(d.canonical_code(), trefoil.canonical_code());
    }

    #[test]
    fn pretzel_diagrams() {
        let d = pretzel(&[2, 2, 3]);
        assert_eq!(d.n_crossings(), 7);
        assert!(d.is_alternating().unwrap());
        assert!(d.is_connected());
        assert!(d.monogons().is_empty());
    }

    #[test]
    fn borromean_is_triangular() {
        let d = borromean();
        assert_eq!(d.n_crossings(), 6);
        assert_eq!(d.components().count, 3);
        assert!(d.is_alternating().unwrap());
        assert!(d.faces().unwrap().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn doubling_a_borromean_crossing_makes_a_two_component_link() {
        let b = borromean();
        let c = b.crossing_ids().next().unwrap();
        let d = double_crossing(&b, c).unwrap();
        assert_eq!(d.n_crossings(), 7);
        assert_eq!(d.components().count, 2);
        assert!(d.is_alternating().unwrap());
        assert!(d.monogons().is_empty());
        assert!(d.inter_component_bigons().is_empty());
    }

    #[test]
    fn generator_is_deterministic() {
        let mut g1 = DiagramGen::new(7);
        let mut g2 = DiagramGen::new(7);
        for _ in 0..5 {
            let a = g1.reduced_alternating(2, 3, 8);
            let b = g2.reduced_alternating(2, 3, 8);
            assert_eq!(a.canonical_code(), b.canonical_code());
        }
    }

    #[test]
    fn generator_respects_constraints() {
        let mut g = DiagramGen::new(0);
        for _ in 0..20 {
            let d = g.reduced_alternating(2, 2, 9);
            assert!(d.n_crossings() >= 2 && d.n_crossings() <= 9);
            assert_eq!(d.components().count, 2);
            assert!(d.is_connected());
            assert!(d.monogons().is_empty());
            assert!(d.is_alternating().unwrap());
        }
        for _ in 0..20 {
            let d = g.reduced_alternating(1, 3, 8);
            assert_eq!(d.components().count, 1);
            assert!(d.is_alternating().unwrap());
        }
    }
}
