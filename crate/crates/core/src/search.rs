//! Minimum-cost splice sequences: the splice-unknotting numbers u⁻ and
//! u⁻₂, with witness extraction and a definition-faithful exhaustive
//! oracle.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::splice::{available_moves, classify, count_state_circles, smooth, MoveSet, SpliceKind, SpliceMove, State};

/// Which splices cost 1: only S⁻ for u⁻, additionally S⁻_join for u⁻₂.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CostModel {
    UMinus,
    UMinus2,
}

impl CostModel {
    fn cost(self, kind: SpliceKind) -> u32 {
        match kind {
            SpliceKind::SMinus => 1,
            SpliceKind::SJoin => match self {
                CostModel::UMinus => 0,
                CostModel::UMinus2 => 1,
            },
            SpliceKind::RiMinus => 0,
            SpliceKind::TSplit => unreachable!("T_split is never searched"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchOptions {
    /// Hard error above this crossing count; the state space grows
    /// exponentially.
    pub max_crossings: usize,
    /// Cap for the exhaustive oracle.
    pub oracle_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_crossings: 12, oracle_cap: 7 }
    }
}

/// An ordered splice sequence from a diagram to the crossingless circle.
/// Move crossing ids refer to the diagram the move was applied to; ids
/// are stable across smoothings.
#[derive(Clone, Debug)]
pub struct WitnessSequence {
    pub moves: Vec<SpliceMove>,
}

impl WitnessSequence {
    pub fn count(&self, kind: SpliceKind) -> usize {
        self.moves.iter().filter(|m| m.kind == kind).count()
    }

    pub fn s_minus(&self) -> usize {
        self.count(SpliceKind::SMinus)
    }

    pub fn s_join(&self) -> usize {
        self.count(SpliceKind::SJoin)
    }

    pub fn ri_minus(&self) -> usize {
        self.count(SpliceKind::RiMinus)
    }
}

fn check_input(d: &PlanarDiagram, opts: &SearchOptions) -> Result<()> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let comps = d.components().count;
    if comps == 0 || comps > 2 {
        return Err(Error::ComponentCount { expected: 2, found: comps });
    }
    if d.n_crossings() > opts.max_crossings {
        return Err(Error::CapExceeded { n: d.n_crossings(), cap: opts.max_crossings });
    }
    Ok(())
}

fn is_circle(d: &PlanarDiagram) -> bool {
    d.n_crossings() == 0 && d.free_circles() == 1
}

/// Uniform-cost search over canonically keyed diagrams. Deterministic:
/// the heap breaks cost ties by insertion order and parents are never
/// replaced at equal cost, so the witness follows the first
/// lexicographically generated optimal path.
fn dijkstra(d: &PlanarDiagram, model: CostModel) -> (u32, WitnessSequence) {
    let start_code = d.canonical_code();
    let mut dist: HashMap<String, u32> = HashMap::new();
    let mut parent: HashMap<String, (String, SpliceMove)> = HashMap::new();
    let mut diagram_of: HashMap<String, PlanarDiagram> = HashMap::new();
    let mut heap: BinaryHeap<Reverse<(u32, u64, String)>> = BinaryHeap::new();
    let mut seq = 0u64;

    dist.insert(start_code.clone(), 0);
    diagram_of.insert(start_code.clone(), d.clone());
    heap.push(Reverse((0, seq, start_code)));

    while let Some(Reverse((cost, _, code))) = heap.pop() {
        if cost > dist[&code] {
            continue;
        }
        let cur = diagram_of[&code].clone();
        if is_circle(&cur) {
            let mut moves = Vec::new();
            let mut at = code;
            while let Some((prev, mv)) = parent.get(&at) {
                moves.push(*mv);
                at = prev.clone();
            }
            moves.reverse();
            return (cost, WitnessSequence { moves });
        }
        for mv in available_moves(&cur, MoveSet::Reducing) {
            let next = smooth(&cur, mv.crossing, mv.way).expect("move is valid");
            let next_code = next.canonical_code();
            let next_cost = cost + model.cost(mv.kind);
            if dist.get(&next_code).map_or(true, |&c| next_cost < c) {
                dist.insert(next_code.clone(), next_cost);
                parent.insert(next_code.clone(), (code.clone(), mv));
                diagram_of.entry(next_code.clone()).or_insert(next);
                seq += 1;
                heap.push(Reverse((next_cost, seq, next_code)));
            }
        }
    }
    unreachable!("every connected diagram with at most two components reduces to the circle")
}

/// u⁻: the minimal number of S⁻ splices over all sequences of
/// {S⁻, S⁻_join, RI⁻} reducing the diagram to the crossingless circle.
pub fn u_minus(d: &PlanarDiagram) -> Result<(u32, WitnessSequence)> {
    u_minus_with(d, &SearchOptions::default())
}

pub fn u_minus_with(d: &PlanarDiagram, opts: &SearchOptions) -> Result<(u32, WitnessSequence)> {
    check_input(d, opts)?;
    Ok(dijkstra(d, CostModel::UMinus))
}

/// u⁻₂: as u⁻ but counting the S⁻_join as well. Requires two components.
pub fn u_minus_2(d: &PlanarDiagram) -> Result<(u32, WitnessSequence)> {
    u_minus_2_with(d, &SearchOptions::default())
}

pub fn u_minus_2_with(d: &PlanarDiagram, opts: &SearchOptions) -> Result<(u32, WitnessSequence)> {
    check_input(d, opts)?;
    let comps = d.components().count;
    if comps != 2 {
        return Err(Error::ComponentCount { expected: 2, found: comps });
    }
    Ok(dijkstra(d, CostModel::UMinus2))
}

/// Depth-first enumeration of every admissible splice sequence, with no
/// memoization and no pruning. The definition-faithful oracle.
pub fn exhaustive_min(d: &PlanarDiagram, model: CostModel) -> Result<u32> {
    exhaustive_min_with(d, model, &SearchOptions::default())
}

pub fn exhaustive_min_with(
    d: &PlanarDiagram,
    model: CostModel,
    opts: &SearchOptions,
) -> Result<u32> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    if d.n_crossings() > opts.oracle_cap {
        return Err(Error::CapExceeded { n: d.n_crossings(), cap: opts.oracle_cap });
    }
    fn rec(d: &PlanarDiagram, model: CostModel) -> u32 {
        if d.n_crossings() == 0 {
            assert_eq!(d.free_circles(), 1, "admissible sequences end at one circle");
            return 0;
        }
        available_moves(d, MoveSet::Reducing)
            .into_iter()
            .map(|mv| {
                let next = smooth(d, mv.crossing, mv.way).expect("move is valid");
                model.cost(mv.kind) + rec(&next, model)
            })
            .min()
            .expect("a reducing move always exists")
    }
    Ok(rec(d, model))
}

/// Applies the moves in order, verifying that each move's recorded kind
/// matches its classification in the diagram it is applied to. Returns
/// the terminal diagram.
pub fn replay_strict(d: &PlanarDiagram, moves: &[SpliceMove]) -> Result<PlanarDiagram> {
    let mut cur = d.clone();
    for mv in moves {
        let kind = classify(&cur, mv.crossing, mv.way)?;
        if kind != mv.kind {
            return Err(Error::CheckFailed(format!(
                "move at crossing {} replays as {:?}, recorded {:?}",
                mv.crossing, kind, mv.kind
            )));
        }
        cur = smooth(&cur, mv.crossing, mv.way)?;
    }
    Ok(cur)
}

/// The state associated with a witness: each splice keeps its way, except
/// RI⁻ which contributes the detaching smoothing (the T_split that splits
/// off the 1-gon circle) in the state reading.
pub fn associated_state(witness: &WitnessSequence) -> State {
    let mut ways = std::collections::BTreeMap::new();
    for mv in &witness.moves {
        let way = match mv.kind {
            SpliceKind::RiMinus => mv.way.other(),
            _ => mv.way,
        };
        ways.insert(mv.crossing, way);
    }
    State(ways)
}

/// Circle count of the witness state on the original diagram.
pub fn witness_state_circles(d: &PlanarDiagram, witness: &WitnessSequence) -> Result<u32> {
    count_state_circles(d, &associated_state(witness))
}

/// Pushes all RI⁻ moves to the end of the sequence, keeping the relative
/// order within each block.
pub fn defer_ri_moves(witness: &WitnessSequence) -> Vec<SpliceMove> {
    let (ri, rest): (Vec<SpliceMove>, Vec<SpliceMove>) =
        witness.moves.iter().partition(|m| m.kind == SpliceKind::RiMinus);
    rest.into_iter().chain(ri).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::torus_2k;

    fn hopf() -> PlanarDiagram {
        PlanarDiagram::parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap()
    }

    fn trefoil() -> PlanarDiagram {
        PlanarDiagram::from_pd_code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn u_minus_of_circle() {
        let (u, w) = u_minus(&PlanarDiagram::circle()).unwrap();
        assert_eq!(u, 0);
        assert!(w.moves.is_empty());
    }

    #[test]
    fn u_minus_of_hopf() {
        let d = hopf();
        let (u, w) = u_minus(&d).unwrap();
        assert_eq!(u, 0);
        assert_eq!(w.moves.len(), 2);
        assert_eq!(w.moves[0].kind, SpliceKind::SJoin);
        assert_eq!(w.moves[1].kind, SpliceKind::RiMinus);
        let terminal = replay_strict(&d, &w.moves).unwrap();
        assert_eq!(terminal.n_crossings(), 0);
        assert_eq!(terminal.free_circles(), 1);
    }

    #[test]
    fn u_minus_2_of_hopf() {
        assert_eq!(u_minus_2(&hopf()).unwrap().0, 1);
    }

    #[test]
    fn u_minus_of_trefoil() {
        let d = trefoil();
        let (u, w) = u_minus(&d).unwrap();
        assert_eq!(u, 1);
        assert_eq!(w.s_minus(), 1);
        assert_eq!(w.ri_minus(), 2);
    }

    #[test]
    fn torus_links_unknot_for_free() {
        for k in 1..=3 {
            let d = torus_2k(k);
            assert_eq!(d.components().count, 2, "T(2,{}) has two components", 2 * k);
            assert!(d.is_alternating().unwrap());
            let (u, w) = u_minus(&d).unwrap();
            assert_eq!(u, 0);
            assert_eq!(w.s_join(), 1);
        }
    }

    #[test]
    fn u2_is_u_plus_one() {
        for d in [hopf(), torus_2k(2), torus_2k(3)] {
            assert_eq!(u_minus_2(&d).unwrap().0, u_minus(&d).unwrap().0 + 1);
        }
    }

    #[test]
    fn oracle_agrees_on_small_diagrams() {
        for d in [hopf(), trefoil(), torus_2k(2), torus_2k(3)] {
            assert_eq!(exhaustive_min(&d, CostModel::UMinus).unwrap(), u_minus(&d).unwrap().0);
        }
    }

    #[test]
    fn witness_join_count_for_links() {
        for d in [hopf(), torus_2k(2), torus_2k(3)] {
            let (_, w) = u_minus(&d).unwrap();
            assert_eq!(w.s_join(), 1, "exactly one S_join in an optimal witness");
            let (_, w2) = u_minus_2(&d).unwrap();
            assert_eq!(w2.s_join(), 1);
        }
    }

    #[test]
    fn witness_state_circle_identity() {
        // |S_u| = #RI⁻ + 1 for the state associated with any witness.
        for d in [hopf(), trefoil(), torus_2k(2)] {
            let (_, w) = u_minus(&d).unwrap();
            let circles = witness_state_circles(&d, &w).unwrap();
            assert_eq!(circles as usize, w.ri_minus() + 1);
        }
    }

    #[test]
    fn deferral_normal_form() {
        for d in [hopf(), trefoil(), torus_2k(2)] {
            let (_, w) = u_minus(&d).unwrap();
            let reordered = defer_ri_moves(&w);
            let terminal = replay_strict(&d, &reordered).unwrap();
            assert_eq!(terminal.n_crossings(), 0);
            assert_eq!(terminal.free_circles(), 1);
        }
    }

    #[test]
    fn rejects_disconnected_input() {
        let d = PlanarDiagram::parse_pd("circles=2").unwrap();
        assert!(matches!(u_minus(&d), Err(Error::Disconnected)));
    }

    #[test]
    fn cap_is_enforced() {
        let opts = SearchOptions { max_crossings: 2, oracle_cap: 2 };
        assert!(matches!(
            u_minus_with(&trefoil(), &opts),
            Err(Error::CapExceeded { n: 3, cap: 2 })
        ));
        assert!(matches!(
            exhaustive_min_with(&trefoil(), CostModel::UMinus, &opts),
            Err(Error::CapExceeded { n: 3, cap: 2 })
        ));
    }
}
