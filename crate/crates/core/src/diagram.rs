//! Plane link diagrams as 4-valent rotation systems.
//!
//! A crossing stores the four incident edge labels in counterclockwise
//! cyclic order. Slots 0 and 2 carry the under-strand, slots 1 and 3 the
//! over-strand; a strand passes through slot `i` to slot `i + 2 (mod 4)`.
//! Crossingless circle components are tracked by a counter rather than
//! as graph vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type EdgeId = u32;
pub type CrossingId = u32;

/// One end of an edge: a slot of a crossing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Port {
    pub crossing: CrossingId,
    pub slot: u8,
}

impl Port {
    pub fn new(crossing: CrossingId, slot: u8) -> Self {
        Port { crossing, slot }
    }

    /// The slot the strand continues to when passing through the crossing.
    pub fn through(self) -> Self {
        Port::new(self.crossing, (self.slot + 2) % 4)
    }

    pub fn is_under(self) -> bool {
        self.slot % 2 == 0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub slots: [EdgeId; 4],
}

/// A face of the underlying plane graph, as found by rotation-system
/// traversal. `corners[k]` is `(c, s)` for the corner of the face lying
/// between slots `s` and `s + 1` of crossing `c`; `edges[k]` is the edge
/// walked to reach that corner. The degree of the face is `corners.len()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub corners: Vec<(CrossingId, u8)>,
    pub edges: Vec<EdgeId>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }
}

/// Component count and the component id of every edge. Ids are assigned
/// in order of the smallest edge label on each component; `count`
/// includes crossingless free circles.
#[derive(Clone, Debug)]
pub struct Components {
    pub count: u32,
    pub of_edge: BTreeMap<EdgeId, u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanarDiagram {
    crossings: BTreeMap<CrossingId, Crossing>,
    edges: BTreeMap<EdgeId, [Port; 2]>,
    free_circles: u32,
    over_under: bool,
}

impl PlanarDiagram {
    /// Builds and validates a diagram from explicit crossing data.
    pub fn new(
        crossings: BTreeMap<CrossingId, Crossing>,
        free_circles: u32,
        over_under: bool,
    ) -> Result<Self> {
        let mut occurrences: BTreeMap<EdgeId, Vec<Port>> = BTreeMap::new();
        for (&c, x) in &crossings {
            for (s, &e) in x.slots.iter().enumerate() {
                occurrences.entry(e).or_default().push(Port::new(c, s as u8));
            }
        }
        let mut edges = BTreeMap::new();
        for (e, ports) in occurrences {
            if ports.len() != 2 {
                return Err(Error::EdgeOccurrence(e, ports.len()));
            }
            edges.insert(e, [ports[0], ports[1]]);
        }
        let d = PlanarDiagram { crossings, edges, free_circles, over_under };
        d.check_euler()?;
        Ok(d)
    }

    /// The crossingless circle, the terminal object of every splice sequence.
    pub fn circle() -> Self {
        PlanarDiagram {
            crossings: BTreeMap::new(),
            edges: BTreeMap::new(),
            free_circles: 1,
            over_under: true,
        }
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> u32 {
        self.free_circles
    }

    pub fn has_over_under(&self) -> bool {
        self.over_under
    }

    pub fn crossing_ids(&self) -> impl Iterator<Item = CrossingId> + '_ {
        self.crossings.keys().copied()
    }

    pub fn crossing(&self, c: CrossingId) -> Result<&Crossing> {
        self.crossings.get(&c).ok_or(Error::UnknownCrossing(c))
    }

    pub fn crossings(&self) -> &BTreeMap<CrossingId, Crossing> {
        &self.crossings
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn edge_at(&self, p: Port) -> EdgeId {
        self.crossings[&p.crossing].slots[p.slot as usize]
    }

    pub fn edge_ports(&self, e: EdgeId) -> [Port; 2] {
        self.edges[&e]
    }

    /// The other end of the edge at `p`.
    pub fn partner(&self, p: Port) -> Port {
        let [a, b] = self.edges[&self.edge_at(p)];
        if a == p { b } else { a }
    }

    pub fn max_edge_label(&self) -> EdgeId {
        self.edges.keys().next_back().copied().unwrap_or(0)
    }

    pub fn max_crossing_id(&self) -> CrossingId {
        self.crossings.keys().next_back().copied().unwrap_or(0)
    }

    /// Parses the PD text format: whitespace-separated `X[a,b,c,d]` tokens
    /// with optional `circles=k` and `unoriented-projection` headers.
    pub fn parse_pd(text: &str) -> Result<Self> {
        let mut crossings = BTreeMap::new();
        let mut free_circles = 0u32;
        let mut over_under = true;
        let mut next_id: CrossingId = 0;
        for tok in text.split_whitespace() {
            if let Some(k) = tok.strip_prefix("circles=") {
                free_circles = k
                    .parse()
                    .map_err(|_| Error::MalformedTuple(tok.to_string()))?;
                continue;
            }
            if tok == "unoriented-projection" {
                over_under = false;
                continue;
            }
            let inner = tok
                .strip_prefix("X[")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::MalformedTuple(tok.to_string()))?;
            let labels: Vec<EdgeId> = inner
                .split(',')
                .map(|s| s.trim().parse::<EdgeId>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::MalformedTuple(tok.to_string()))?;
            if labels.len() != 4 || labels.contains(&0) {
                return Err(Error::MalformedTuple(tok.to_string()));
            }
            crossings.insert(next_id, Crossing { slots: [labels[0], labels[1], labels[2], labels[3]] });
            next_id += 1;
        }
        PlanarDiagram::new(crossings, free_circles, over_under)
    }

    /// Convenience constructor from numeric PD tuples.
    pub fn from_pd_code(code: &[[EdgeId; 4]]) -> Result<Self> {
        let crossings = code
            .iter()
            .enumerate()
            .map(|(i, &slots)| (i as CrossingId, Crossing { slots }))
            .collect();
        PlanarDiagram::new(crossings, 0, true)
    }

    /// Renders the diagram back to PD text.
    pub fn to_pd_string(&self) -> String {
        let mut parts = Vec::new();
        if !self.over_under {
            parts.push("unoriented-projection".to_string());
        }
        if self.free_circles > 0 {
            parts.push(format!("circles={}", self.free_circles));
        }
        for x in self.crossings.values() {
            parts.push(format!("X[{},{},{},{}]", x.slots[0], x.slots[1], x.slots[2], x.slots[3]));
        }
        if parts.is_empty() {
            parts.push("circles=0".to_string());
        }
        parts.join(" ")
    }

    fn check_euler(&self) -> Result<()> {
        // V - E + F = 2 must hold on every connected piece, with faces
        // counted by rotation-system traversal (per-piece sphere embedding).
        if self.crossings.is_empty() {
            return Ok(());
        }
        let piece_of = self.piece_labels();
        let mut verts: BTreeMap<u32, usize> = BTreeMap::new();
        for c in self.crossings.keys() {
            *verts.entry(piece_of[c]).or_insert(0) += 1;
        }
        let mut face_count: BTreeMap<u32, usize> = BTreeMap::new();
        for f in self.all_faces() {
            let piece = piece_of[&f.corners[0].0];
            *face_count.entry(piece).or_insert(0) += 1;
        }
        for (piece, &v) in &verts {
            let f = face_count.get(piece).copied().unwrap_or(0);
            // E = 2V for a 4-valent graph, so F must equal V + 2.
            if f != v + 2 {
                return Err(Error::NonPlanar);
            }
        }
        Ok(())
    }

    /// Labels crossings by connected piece of the underlying graph.
    fn piece_labels(&self) -> BTreeMap<CrossingId, u32> {
        let mut label: BTreeMap<CrossingId, u32> = BTreeMap::new();
        let mut next = 0;
        for &start in self.crossings.keys() {
            if label.contains_key(&start) {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label.insert(start, next);
            while let Some(c) = queue.pop_front() {
                for s in 0..4 {
                    let q = self.partner(Port::new(c, s));
                    if !label.contains_key(&q.crossing) {
                        label.insert(q.crossing, next);
                        queue.push_back(q.crossing);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_circles <= 1;
        }
        self.free_circles == 0 && self.piece_labels().values().max() == Some(&0)
    }

    /// Component count and labeling via the strand-through pairing.
    pub fn components(&self) -> Components {
        let mut uf = UnionFind::new(self.edges.keys().copied());
        for (&c, _) in &self.crossings {
            let a = self.edge_at(Port::new(c, 0));
            let b = self.edge_at(Port::new(c, 2));
            uf.union(a, b);
            let a = self.edge_at(Port::new(c, 1));
            let b = self.edge_at(Port::new(c, 3));
            uf.union(a, b);
        }
        let (count, of_edge) = uf.labels();
        Components { count: count + self.free_circles, of_edge }
    }

    /// Face traversal over every dart, independent of connectivity.
    /// For each connected piece this yields that piece's sphere faces.
    pub(crate) fn all_faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<Port> = BTreeSet::new();
        let mut faces = Vec::new();
        for &c in self.crossings.keys() {
            for s in 0..4 {
                let start = Port::new(c, s);
                if seen.contains(&start) {
                    continue;
                }
                let mut corners = Vec::new();
                let mut edges = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d);
                    let p = self.partner(d);
                    corners.push((p.crossing, p.slot));
                    edges.push(self.edge_at(d));
                    d = Port::new(p.crossing, (p.slot + 1) % 4);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { corners, edges });
            }
        }
        faces
    }

    /// Faces of a connected diagram.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.all_faces())
    }

    /// Crossings incident to a 1-gon.
    pub fn monogons(&self) -> Vec<CrossingId> {
        let mut out: Vec<CrossingId> = self
            .all_faces()
            .iter()
            .filter(|f| f.degree() == 1)
            .map(|f| f.corners[0].0)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree-2 faces whose two edges lie on distinct components.
    pub fn inter_component_bigons(&self) -> Vec<Face> {
        let comps = self.components();
        self.all_faces()
            .into_iter()
            .filter(|f| {
                f.degree() == 2 && comps.of_edge[&f.edges[0]] != comps.of_edge[&f.edges[1]]
            })
            .collect()
    }

    /// True iff strand passages alternate over/under along every component.
    pub fn is_alternating(&self) -> Result<bool> {
        if !self.over_under {
            return Err(Error::NoOverUnder);
        }
        for walk in self.component_walks() {
            let unders: Vec<bool> = walk.passages.iter().map(|p| p.is_under()).collect();
            let n = unders.len();
            if n == 0 {
                continue;
            }
            for i in 0..n {
                if unders[i] == unders[(i + 1) % n] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Walks every closed component once. The walk records, in order, the
    /// entry port of each crossing passage and the edge leaving it.
    pub fn component_walks(&self) -> Vec<ComponentWalk> {
        let mut visited: BTreeSet<EdgeId> = BTreeSet::new();
        let mut walks = Vec::new();
        for &e in self.edges.keys() {
            if visited.contains(&e) {
                continue;
            }
            // Head toward the larger port for determinism.
            let [_, to] = self.edges[&e];
            let mut passages = Vec::new();
            let mut edge_seq = Vec::new();
            let mut cur_edge = e;
            let mut cur_to = to;
            loop {
                visited.insert(cur_edge);
                edge_seq.push(cur_edge);
                passages.push(cur_to);
                let out = cur_to.through();
                let next_edge = self.edge_at(out);
                let next_to = self.partner(out);
                cur_edge = next_edge;
                cur_to = next_to;
                if cur_edge == e && cur_to == to {
                    break;
                }
            }
            walks.push(ComponentWalk { edges: edge_seq, passages });
        }
        walks
    }

    /// A canonical string: identical for diagrams equal up to relabeling
    /// of edges and crossings, traversal start/direction, and mirror
    /// reflection of the plane. Lexicographic minimum over all rooted
    /// breadth-first relabelings.
    pub fn canonical_code(&self) -> String {
        let piece_of = self.piece_labels();
        let n_pieces = piece_of.values().max().map_or(0, |m| m + 1);
        let mut piece_codes: Vec<Vec<u32>> = Vec::new();
        for piece in 0..n_pieces {
            let members: Vec<CrossingId> =
                piece_of.iter().filter(|(_, &p)| p == piece).map(|(&c, _)| c).collect();
            let mut best: Option<Vec<u32>> = None;
            for &root in &members {
                for slot in 0..4 {
                    for dir in [1i8, -1] {
                        let code = self.rooted_code(root, slot, dir, members.len());
                        if best.as_ref().map_or(true, |b| code < *b) {
                            best = Some(code);
                        }
                    }
                }
            }
            piece_codes.push(best.unwrap());
        }
        piece_codes.sort();
        let mut s = format!("n{}c{}", self.n_crossings(), self.free_circles);
        for code in piece_codes {
            s.push('|');
            for (i, v) in code.iter().enumerate() {
                if i > 0 {
                    s.push('.');
                }
                s.push_str(&v.to_string());
            }
        }
        s
    }

    fn rooted_code(&self, root: CrossingId, root_slot: u8, dir: i8, size: usize) -> Vec<u32> {
        let rot = |base: u8, i: u8| -> u8 {
            (((base as i16) + (dir as i16) * (i as i16)).rem_euclid(4)) as u8
        };
        let mut new_id: BTreeMap<CrossingId, u32> = BTreeMap::new();
        let mut base: BTreeMap<CrossingId, u8> = BTreeMap::new();
        let mut order: Vec<CrossingId> = Vec::with_capacity(size);
        new_id.insert(root, 0);
        base.insert(root, root_slot);
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            let b = base[&c];
            for i in 0..4 {
                let p = self.partner(Port::new(c, rot(b, i)));
                if !new_id.contains_key(&p.crossing) {
                    new_id.insert(p.crossing, order.len() as u32);
                    base.insert(p.crossing, p.slot);
                    order.push(p.crossing);
                }
            }
        }
        let mut code = Vec::with_capacity(order.len() * 9);
        for &c in &order {
            let b = base[&c];
            if self.over_under {
                code.push((b % 2) as u32);
            }
            for i in 0..4 {
                let p = self.partner(Port::new(c, rot(b, i)));
                let nb = base[&p.crossing];
                let pos = (((p.slot as i16) - (nb as i16)) * (dir as i16)).rem_euclid(4) as u32;
                code.push(new_id[&p.crossing] * 4 + pos);
            }
        }
        code
    }

    /// Returns a copy with edges relabeled through `map` (must be injective
    /// on the edge set).
    pub fn relabel_edges(&self, map: &BTreeMap<EdgeId, EdgeId>) -> Result<Self> {
        let crossings = self
            .crossings
            .iter()
            .map(|(&c, x)| {
                let mut slots = x.slots;
                for s in &mut slots {
                    *s = map[s];
                }
                (c, Crossing { slots })
            })
            .collect();
        PlanarDiagram::new(crossings, self.free_circles, self.over_under)
    }

    /// Mirror reflection of the plane: reverses every rotation, keeps
    /// over/under.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|(&c, x)| {
                // Reversing the cyclic order while keeping slot 0 under:
                // (0,1,2,3) -> (0,3,2,1).
                let s = x.slots;
                (c, Crossing { slots: [s[0], s[3], s[2], s[1]] })
            })
            .collect();
        PlanarDiagram {
            crossings,
            edges: BTreeMap::new(),
            free_circles: self.free_circles,
            over_under: self.over_under,
        }
        .rebuild()
    }

    /// Flips every crossing (over/under swap), giving the other alternating
    /// assignment of the same shadow.
    pub fn flip_all_crossings(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|(&c, x)| {
                let s = x.slots;
                (c, Crossing { slots: [s[1], s[2], s[3], s[0]] })
            })
            .collect();
        PlanarDiagram {
            crossings,
            edges: BTreeMap::new(),
            free_circles: self.free_circles,
            over_under: self.over_under,
        }
        .rebuild()
    }

    /// Relabels edges 1..2n in component-walk order, for stable and
    /// readable PD output.
    pub fn normalize_edge_labels(&self) -> Self {
        let mut map: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        let mut next = 1;
        for walk in self.component_walks() {
            for &e in &walk.edges {
                map.entry(e).or_insert_with(|| {
                    let label = next;
                    next += 1;
                    label
                });
            }
        }
        self.relabel_edges(&map).expect("relabeling preserves validity")
    }

    /// Drops over/under data, leaving a projection.
    pub fn as_projection(&self) -> Self {
        let mut d = self.clone();
        d.over_under = false;
        d
    }

    fn rebuild(self) -> Self {
        PlanarDiagram::new(self.crossings, self.free_circles, self.over_under)
            .expect("relabeling preserves validity")
    }

}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

/// One closed strand: `edges[i]` leads into the crossing passage
/// `passages[i]` (the entry port).
#[derive(Clone, Debug)]
pub struct ComponentWalk {
    pub edges: Vec<EdgeId>,
    pub passages: Vec<Port>,
}

pub(crate) struct UnionFind {
    parent: BTreeMap<EdgeId, EdgeId>,
}

impl UnionFind {
    pub fn new(keys: impl Iterator<Item = EdgeId>) -> Self {
        UnionFind { parent: keys.map(|k| (k, k)).collect() }
    }

    pub fn find(&mut self, x: EdgeId) -> EdgeId {
        let p = self.parent[&x];
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent.insert(x, root);
        root
    }

    pub fn union(&mut self, a: EdgeId, b: EdgeId) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller label wins so components come out ordered.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }

    /// Class count plus a label per key, numbered by smallest member.
    pub fn labels(&mut self) -> (u32, BTreeMap<EdgeId, u32>) {
        let keys: Vec<EdgeId> = self.parent.keys().copied().collect();
        let mut label_of_root: BTreeMap<EdgeId, u32> = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for k in keys {
            let r = self.find(k);
            let next = label_of_root.len() as u32;
            let l = *label_of_root.entry(r).or_insert(next);
            labels.insert(k, l);
        }
        (label_of_root.len() as u32, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hopf() -> PlanarDiagram {
        PlanarDiagram::parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap()
    }

    pub(crate) fn trefoil() -> PlanarDiagram {
        PlanarDiagram::from_pd_code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    fn kink() -> PlanarDiagram {
        PlanarDiagram::from_pd_code(&[[1, 1, 2, 2]]).unwrap()
    }

    #[test]
    fn parse_hopf() {
        let d = hopf();
        assert_eq!(d.n_crossings(), 2);
        assert_eq!(d.components().count, 2);
    }

    #[test]
    fn parse_circle_header() {
        let d = PlanarDiagram::parse_pd("circles=1").unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.components().count, 1);
        assert!(d.is_connected());
    }

    #[test]
    fn parse_rejects_malformed_tuple() {
        let err = PlanarDiagram::parse_pd("X[1,2,3,4,5] X[1,2,3,4]").unwrap_err();
        assert!(matches!(err, Error::MalformedTuple(_)));
        let err = PlanarDiagram::parse_pd("X[1,2,3]").unwrap_err();
        assert!(matches!(err, Error::MalformedTuple(_)));
    }

    #[test]
    fn parse_rejects_bad_edge_multiplicity() {
        let err = PlanarDiagram::parse_pd("X[1,2,3,4] X[1,2,3,5]").unwrap_err();
        assert!(matches!(err, Error::EdgeOccurrence(_, _)));
    }

    #[test]
    fn rejects_nonplanar_rotation() {
        // A loop entering opposite slots of one crossing lives on the torus.
        let err = PlanarDiagram::from_pd_code(&[[1, 2, 1, 2]]).unwrap_err();
        assert!(matches!(err, Error::NonPlanar));
    }

    #[test]
    fn components_of_standard_diagrams() {
        assert_eq!(hopf().components().count, 2);
        assert_eq!(trefoil().components().count, 1);
        assert_eq!(PlanarDiagram::circle().components().count, 1);
    }

    #[test]
    fn faces_of_hopf() {
        let d = hopf();
        let faces = d.faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.degree() == 2));
        let total: usize = faces.iter().map(|f| f.degree()).sum();
        assert_eq!(total, 4 * d.n_crossings());
    }

    #[test]
    fn faces_of_trefoil() {
        let faces = trefoil().faces().unwrap();
        let mut degrees: Vec<usize> = faces.iter().map(|f| f.degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn kink_has_a_monogon() {
        let d = kink();
        assert_eq!(d.monogons(), vec![0]);
        let faces = d.faces().unwrap();
        let mut degrees: Vec<usize> = faces.iter().map(|f| f.degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2]);
    }

    #[test]
    fn reduced_trefoil_has_no_monogons() {
        assert!(trefoil().monogons().is_empty());
    }

    #[test]
    fn euler_face_count() {
        for d in [hopf(), trefoil()] {
            assert_eq!(d.faces().unwrap().len(), d.n_crossings() + 2);
        }
    }

    #[test]
    fn hopf_inter_component_bigons() {
        // Every face of the standard Hopf diagram is a bigon with one edge
        // on each component.
        assert_eq!(hopf().inter_component_bigons().len(), 4);
    }

    #[test]
    fn knot_has_no_inter_component_bigons() {
        assert!(trefoil().inter_component_bigons().is_empty());
    }

    #[test]
    fn alternation() {
        assert!(hopf().is_alternating().unwrap());
        assert!(trefoil().is_alternating().unwrap());
        assert!(PlanarDiagram::circle().is_alternating().unwrap());
        // Flipping one crossing of the trefoil breaks alternation.
        let bad = PlanarDiagram::from_pd_code(&[[4, 2, 5, 1], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert!(!bad.is_alternating().unwrap());
    }

    #[test]
    fn alternation_needs_over_under() {
        let d = trefoil().as_projection();
        assert!(matches!(d.is_alternating(), Err(Error::NoOverUnder)));
    }

    #[test]
    fn canonical_code_relabeling_invariance() {
        let d = trefoil();
        let map: BTreeMap<EdgeId, EdgeId> = (1..=6).map(|e| (e, (e % 6) + 20)).collect();
        let r = d.relabel_edges(&map).unwrap();
        assert_eq!(d.canonical_code(), r.canonical_code());
    }

    #[test]
    fn canonical_code_mirror_invariance() {
        let d = trefoil();
        assert_eq!(d.canonical_code(), d.mirror().canonical_code());
        let h = hopf();
        assert_eq!(h.canonical_code(), h.mirror().canonical_code());
    }

    #[test]
    fn canonical_code_separates_knots() {
        let t = trefoil();
        let fig8 =
            PlanarDiagram::from_pd_code(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])
                .unwrap();
        assert_ne!(t.canonical_code(), fig8.canonical_code());
        // The flipped trefoil is the plane mirror image here, so the code is
        // allowed to agree; a single flipped crossing must not be.
        let bad = PlanarDiagram::from_pd_code(&[[4, 2, 5, 1], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_ne!(t.canonical_code(), bad.canonical_code());
    }

    #[test]
    fn mirror_preserves_alternation() {
        assert!(hopf().mirror().is_alternating().unwrap());
        assert!(trefoil().mirror().is_alternating().unwrap());
    }

    #[test]
    fn pd_round_trip() {
        let d = hopf();
        let d2 = PlanarDiagram::parse_pd(&d.to_pd_string()).unwrap();
        assert_eq!(d.canonical_code(), d2.canonical_code());
    }
}
