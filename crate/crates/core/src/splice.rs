//! Smoothings of crossings, the splice taxonomy, and state circles.
//!
//! A splice never consults over/under data; the taxonomy is decided
//! purely by its effect on the component count, with the 1-gon context
//! separating `RiMinus` from `SMinus`.

use std::collections::BTreeMap;

use crate::diagram::{CrossingId, EdgeId, PlanarDiagram, Port, UnionFind};
use crate::error::{Error, Result};

/// The two smoothings of a crossing: way A joins slot pairs (0,1)(2,3),
/// way B joins (0,3)(1,2).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Way {
    A,
    B,
}

impl Way {
    pub fn pairs(self) -> [(u8, u8); 2] {
        match self {
            Way::A => [(0, 1), (2, 3)],
            Way::B => [(0, 3), (1, 2)],
        }
    }

    pub fn other(self) -> Way {
        match self {
            Way::A => Way::B,
            Way::B => Way::A,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SpliceKind {
    /// Self-crossing smoothing that keeps the component count, away from
    /// any 1-gon.
    SMinus,
    /// Smoothing of a crossing between two distinct components; merges
    /// them (either way).
    SJoin,
    /// Self-crossing smoothing that splits one component into two.
    TSplit,
    /// The component-preserving smoothing at a crossing carrying a 1-gon;
    /// absorbs the kink.
    RiMinus,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpliceMove {
    pub crossing: CrossingId,
    pub way: Way,
    pub kind: SpliceKind,
}

/// Which moves `available_moves` reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveSet {
    All,
    /// Search mode: only `SMinus`, `SJoin` and `RiMinus`.
    Reducing,
}

/// A smoothing choice at every crossing of a fixed diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct State(pub BTreeMap<CrossingId, Way>);

impl State {
    pub fn all(d: &PlanarDiagram, way: Way) -> State {
        State(d.crossing_ids().map(|c| (c, way)).collect())
    }

    pub fn way(&self, c: CrossingId) -> Option<Way> {
        self.0.get(&c).copied()
    }
}

/// Replaces crossing `c` by the reconnection chosen by `way`. Loops that
/// close up are moved into the free-circle counter.
pub fn smooth(d: &PlanarDiagram, c: CrossingId, way: Way) -> Result<PlanarDiagram> {
    let crossing = *d.crossing(c)?;
    let mut uf = UnionFind::new(crossing.slots.iter().copied());
    for (s1, s2) in way.pairs() {
        uf.union(crossing.slots[s1 as usize], crossing.slots[s2 as usize]);
    }
    let (_, class_of) = uf.labels();
    // Ports of each merged chain that survive the removal of `c`.
    let mut real_ports: BTreeMap<u32, Vec<Port>> = BTreeMap::new();
    let mut seen: Vec<EdgeId> = Vec::new();
    for &e in &crossing.slots {
        if seen.contains(&e) {
            continue;
        }
        seen.push(e);
        let entry = real_ports.entry(class_of[&e]).or_default();
        for p in d.edge_ports(e) {
            if p.crossing != c {
                entry.push(p);
            }
        }
    }
    let mut crossings = d.crossings().clone();
    crossings.remove(&c);
    let mut free = d.free_circles();
    let mut fresh = d.max_edge_label();
    for (_, ports) in real_ports {
        match ports.len() {
            0 => free += 1,
            2 => {
                fresh += 1;
                for p in ports {
                    let x = crossings.get_mut(&p.crossing).expect("port crossing exists");
                    x.slots[p.slot as usize] = fresh;
                }
            }
            n => unreachable!("merged chain with {n} loose ends"),
        }
    }
    PlanarDiagram::new(crossings, free, d.has_over_under())
}

/// The splice taxonomy of `(c, way)`, decided by component-count effect
/// and the 1-gon context.
pub fn classify(d: &PlanarDiagram, c: CrossingId, way: Way) -> Result<SpliceKind> {
    let before = d.components().count;
    let after = smooth(d, c, way)?.components().count;
    Ok(classify_by_counts(d, c, before, after))
}

fn classify_by_counts(d: &PlanarDiagram, c: CrossingId, before: u32, after: u32) -> SpliceKind {
    if after + 1 == before {
        SpliceKind::SJoin
    } else if after == before + 1 {
        SpliceKind::TSplit
    } else if d.monogons().contains(&c) {
        SpliceKind::RiMinus
    } else {
        SpliceKind::SMinus
    }
}

/// Enumerates every `(crossing, way)` with its classification, in
/// `(crossing, way)` order.
pub fn available_moves(d: &PlanarDiagram, mode: MoveSet) -> Vec<SpliceMove> {
    let before = d.components().count;
    let monogons = d.monogons();
    let mut out = Vec::new();
    for c in d.crossing_ids() {
        for way in [Way::A, Way::B] {
            let after = smooth(d, c, way).expect("crossing exists").components().count;
            let kind = if after + 1 == before {
                SpliceKind::SJoin
            } else if after == before + 1 {
                SpliceKind::TSplit
            } else if monogons.contains(&c) {
                SpliceKind::RiMinus
            } else {
                SpliceKind::SMinus
            };
            if mode == MoveSet::Reducing && kind == SpliceKind::TSplit {
                continue;
            }
            out.push(SpliceMove { crossing: c, way, kind });
        }
    }
    out
}

/// Number of state circles: union-find over arc reconnections plus the
/// free circles. Independent of `smooth`, which makes the two routes
/// cross-checkable.
pub fn count_state_circles(d: &PlanarDiagram, s: &State) -> Result<u32> {
    if d.crossing_ids().any(|c| s.way(c).is_none()) {
        return Err(Error::PartialState);
    }
    let mut uf = UnionFind::new(d.edge_ids());
    for c in d.crossing_ids() {
        let x = d.crossing(c)?;
        for (s1, s2) in s.way(c).unwrap().pairs() {
            uf.union(x.slots[s1 as usize], x.slots[s2 as usize]);
        }
    }
    let (classes, _) = uf.labels();
    Ok(classes + d.free_circles())
}

/// A direction choice for every closed component, indexed by the order of
/// `component_walks`. Entry `true` reverses that component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation(pub Vec<bool>);

/// All orientations with the first component fixed, quotienting out
/// global reversal.
pub fn orientations(d: &PlanarDiagram) -> Vec<Orientation> {
    let k = d.component_walks().len();
    if k == 0 {
        return vec![Orientation(Vec::new())];
    }
    (0..(1u32 << (k - 1)))
        .map(|mask| {
            let mut v = vec![false; k];
            for (i, flag) in v.iter_mut().enumerate().skip(1) {
                *flag = mask & (1 << (i - 1)) != 0;
            }
            Orientation(v)
        })
        .collect()
}

/// The state that smooths every crossing consistently with the given
/// orientation.
pub fn seifert_state(d: &PlanarDiagram, orientation: &Orientation) -> State {
    // Head port of each edge under the orientation.
    let mut head: BTreeMap<EdgeId, Port> = BTreeMap::new();
    for (walk, &rev) in d.component_walks().iter().zip(&orientation.0) {
        for (i, &e) in walk.edges.iter().enumerate() {
            let to = walk.passages[i];
            head.insert(e, if rev { d.partner(to) } else { to });
        }
    }
    let mut ways = BTreeMap::new();
    for c in d.crossing_ids() {
        let x = d.crossings()[&c];
        let arriving = |s: u8| head[&x.slots[s as usize]] == Port::new(c, s);
        let under_in = if arriving(0) { 0 } else { 2 };
        let over_in = if arriving(1) { 1 } else { 3 };
        // The consistent smoothing pairs each incoming end with an
        // outgoing one.
        let way = match (under_in, over_in) {
            (0, 3) | (2, 1) => Way::A,
            (0, 1) | (2, 3) => Way::B,
            _ => unreachable!(),
        };
        ways.insert(c, way);
    }
    State(ways)
}

/// True iff the state is the Seifert state of some orientation, which is
/// exactly when its state surface is orientable.
pub fn is_orientable_state(d: &PlanarDiagram, s: &State) -> bool {
    orientations(d).iter().any(|o| seifert_state(d, o) == *s)
}
