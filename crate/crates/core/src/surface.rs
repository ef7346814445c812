//! Maximal Euler characteristic of spanning state surfaces, decided by
//! the smallest-polygon branching procedure, plus a full 2ⁿ oracle and
//! the derivation of crosscap number and orientable genus.
//!
//! For an alternating diagram the best state surface realizes the
//! maximal Euler characteristic among all spanning surfaces, so
//! χ = |S| − n over states is the quantity everything else reads off.

use std::collections::BTreeMap;

use crate::diagram::{CrossingId, Face, PlanarDiagram};
use crate::error::{Error, Result};
use crate::splice::{count_state_circles, is_orientable_state, smooth, State, Way};

#[derive(Clone, Debug)]
pub struct ChiReport {
    pub chi_max: i32,
    /// States attaining the maximal circle count. For `adams_kindred`
    /// these are the branch-terminal maximizers; for `brute_chi_max`,
    /// every maximizing state.
    pub achieving: Vec<State>,
    pub exists_nonorientable_max: bool,
    pub exists_orientable_max: bool,
    pub n_components: u32,
    pub n_crossings: usize,
    pub max_circles: u32,
}

impl ChiReport {
    fn from_states(d: &PlanarDiagram, achieving: Vec<State>, max_circles: u32) -> ChiReport {
        let mut nonor = false;
        let mut or = false;
        for s in &achieving {
            if is_orientable_state(d, s) {
                or = true;
            } else {
                nonor = true;
            }
        }
        ChiReport {
            chi_max: max_circles as i32 - d.n_crossings() as i32,
            achieving,
            exists_nonorientable_max: nonor,
            exists_orientable_max: or,
            n_components: d.components().count,
            n_crossings: d.n_crossings(),
            max_circles,
        }
    }
}

/// The way that joins the boundary edges of a face around its corner
/// between slots `s` and `s+1`.
fn toward_way(s: u8) -> Way {
    if s % 2 == 0 {
        Way::A
    } else {
        Way::B
    }
}

/// Exact maximum of |S| − n over all 2ⁿ states, with every maximizing
/// state retained.
pub fn brute_chi_max(d: &PlanarDiagram) -> Result<ChiReport> {
    brute_chi_max_capped(d, 14)
}

pub fn brute_chi_max_capped(d: &PlanarDiagram, cap: usize) -> Result<ChiReport> {
    let n = d.n_crossings();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let ids: Vec<CrossingId> = d.crossing_ids().collect();
    let mut best = 0u32;
    let mut achieving: Vec<State> = Vec::new();
    for bits in 0..(1u64 << n) {
        let state = State(
            ids.iter()
                .enumerate()
                .map(|(i, &c)| (c, if bits & (1 << i) != 0 { Way::A } else { Way::B }))
                .collect(),
        );
        let circles = count_state_circles(d, &state)?;
        if circles > best {
            best = circles;
            achieving.clear();
        }
        if circles == best {
            achieving.push(state);
        }
    }
    Ok(ChiReport::from_states(d, achieving, best))
}

/// The smallest-polygon branching procedure. Requires a connected
/// alternating diagram; the maximality guarantee only holds there.
pub fn adams_kindred(d: &PlanarDiagram) -> Result<ChiReport> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    if !d.is_alternating()? {
        return Err(Error::NotAlternating);
    }
    let mut terminals: Vec<(u32, State)> = Vec::new();
    let mut partial = BTreeMap::new();
    ak_rec(d, &mut partial, &mut terminals);
    let best = terminals.iter().map(|(c, _)| *c).max().expect("at least one branch terminates");
    let achieving =
        terminals.into_iter().filter(|(c, _)| *c == best).map(|(_, s)| s).collect::<Vec<_>>();
    Ok(ChiReport::from_states(d, dedup_states(achieving), best))
}

fn dedup_states(mut states: Vec<State>) -> Vec<State> {
    states.sort();
    states.dedup();
    states
}

fn ak_rec(
    d: &PlanarDiagram,
    partial: &mut BTreeMap<CrossingId, Way>,
    out: &mut Vec<(u32, State)>,
) {
    if d.n_crossings() == 0 {
        out.push((d.free_circles(), State(partial.clone())));
        return;
    }
    let faces = d.all_faces();
    let m = faces.iter().map(Face::degree).min().expect("crossings imply faces");
    let face = faces
        .iter()
        .filter(|f| f.degree() == m)
        .min_by_key(|f| {
            let mut ids: Vec<(CrossingId, u8)> = f.corners.clone();
            ids.sort_unstable();
            ids
        })
        .unwrap();
    let distinct = {
        let mut ids: Vec<CrossingId> = face.corners.iter().map(|&(c, _)| c).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.len() == face.corners.len()
    };
    match (m, distinct) {
        (1, _) => {
            // Splice so the 1-gon region becomes its own circle.
            let (c, s) = face.corners[0];
            apply(d, c, toward_way(s), partial, out, &|d, p, o| ak_rec(d, p, o));
        }
        (2, true) => {
            // Splice one crossing of the 2-gon so the region closes up.
            let &(c, s) = face.corners.iter().min_by_key(|&&(c, _)| c).unwrap();
            apply(d, c, toward_way(s), partial, out, &|d, p, o| ak_rec(d, p, o));
        }
        (3, true) => {
            // Two branches: collapse the 3-gon into a circle, or splice
            // its three crossings the opposite way.
            for flip in [false, true] {
                let mut cur = d.clone();
                let mut undo = Vec::new();
                for &(c, s) in &face.corners {
                    let way = if flip { toward_way(s).other() } else { toward_way(s) };
                    cur = smooth(&cur, c, way).expect("triangle crossing exists");
                    partial.insert(c, way);
                    undo.push(c);
                }
                ak_rec(&cur, partial, out);
                for c in undo {
                    partial.remove(&c);
                }
            }
        }
        _ => {
            // Smallest face of degree 4 or more cannot occur in a
            // 4-valent plane diagram, and a repeated-crossing polygon has
            // no well-defined branch; enumerate the remaining states.
            enumerate_rest(d, partial, out);
        }
    }
}

fn apply(
    d: &PlanarDiagram,
    c: CrossingId,
    way: Way,
    partial: &mut BTreeMap<CrossingId, Way>,
    out: &mut Vec<(u32, State)>,
    cont: &dyn Fn(&PlanarDiagram, &mut BTreeMap<CrossingId, Way>, &mut Vec<(u32, State)>),
) {
    let next = smooth(d, c, way).expect("face crossing exists");
    partial.insert(c, way);
    cont(&next, partial, out);
    partial.remove(&c);
}

fn enumerate_rest(
    d: &PlanarDiagram,
    partial: &mut BTreeMap<CrossingId, Way>,
    out: &mut Vec<(u32, State)>,
) {
    let ids: Vec<CrossingId> = d.crossing_ids().collect();
    for bits in 0..(1u64 << ids.len()) {
        let rest: BTreeMap<CrossingId, Way> = ids
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, if bits & (1 << i) != 0 { Way::A } else { Way::B }))
            .collect();
        let circles =
            count_state_circles(d, &State(rest.clone())).expect("assignment is total");
        let mut full = partial.clone();
        full.extend(rest);
        out.push((circles, State(full)));
    }
}

/// Exact orientable genus, or a flagged lower bound when no orientable
/// state attains the maximal Euler characteristic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenusBound {
    Exact(u32),
    LowerBound(u32),
}

impl GenusBound {
    pub fn value(self) -> u32 {
        match self {
            GenusBound::Exact(g) | GenusBound::LowerBound(g) => g,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, GenusBound::Exact(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenusValues {
    pub crosscap: u32,
    pub genus: GenusBound,
    /// min{C, 2g} = 2 − #components − χ_max.
    pub min_genus: u32,
}

/// Derives C, g and min{C, 2g} from a maximal-χ report.
///
/// When some maximizing state is non-orientable the crosscap number
/// equals min{C, 2g}; otherwise every maximal surface is orientable,
/// 2g = min{C, 2g}, and one splice-type change realizes C = 2g + 1.
pub fn genus_from_chi(report: &ChiReport) -> GenusValues {
    let min_genus_i = 2 - report.n_components as i32 - report.chi_max;
    assert!(min_genus_i >= 0, "chi_max exceeds the component bound");
    let min_genus = min_genus_i as u32;
    if report.exists_nonorientable_max {
        let genus = if report.exists_orientable_max {
            debug_assert_eq!(min_genus % 2, 0);
            GenusBound::Exact(min_genus / 2)
        } else {
            GenusBound::LowerBound(min_genus.div_ceil(2))
        };
        GenusValues { crosscap: min_genus, genus, min_genus }
    } else {
        assert_eq!(min_genus % 2, 0, "orientable maximum forces even min-genus");
        GenusValues { crosscap: min_genus + 1, genus: GenusBound::Exact(min_genus / 2), min_genus }
    }
}

/// The Clark-type inequality C ≤ 2g + 1; a postcondition on every report.
pub fn clark_check(crosscap: u32, genus: u32) -> bool {
    crosscap <= 2 * genus + 1
}

/// Converts to the first-Betti-number convention: β₁ = C + #components − 1.
pub fn beta1(crosscap: u32, n_components: u32) -> u32 {
    crosscap + n_components - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{rational_closure, torus_2k, DiagramGen};

    fn hopf() -> PlanarDiagram {
        PlanarDiagram::parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap()
    }

    fn trefoil() -> PlanarDiagram {
        rational_closure(&[3])
    }

    fn figure_eight() -> PlanarDiagram {
        PlanarDiagram::from_pd_code(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])
            .unwrap()
    }

    #[test]
    fn chi_of_trefoil() {
        let d = trefoil();
        let brute = brute_chi_max(&d).unwrap();
        assert_eq!(brute.chi_max, 0);
        assert_eq!(brute.max_circles, 3);
        let ak = adams_kindred(&d).unwrap();
        assert_eq!(ak.chi_max, 0);
    }

    #[test]
    fn chi_of_hopf() {
        let d = hopf();
        let brute = brute_chi_max(&d).unwrap();
        assert_eq!(brute.chi_max, 0);
        assert_eq!(adams_kindred(&d).unwrap().chi_max, 0);
        // Both maximizers are Seifert states.
        assert!(brute.exists_orientable_max);
        assert!(!brute.exists_nonorientable_max);
    }

    #[test]
    fn chi_of_single_kink() {
        let d = PlanarDiagram::from_pd_code(&[[1, 1, 2, 2]]).unwrap();
        let brute = brute_chi_max(&d).unwrap();
        assert_eq!(brute.chi_max, 1);
        assert_eq!(adams_kindred(&d).unwrap().chi_max, 1);
    }

    #[test]
    fn ak_agrees_with_brute_on_samples() {
        let mut g = DiagramGen::new(11);
        let mut diagrams = vec![hopf(), trefoil(), figure_eight(), torus_2k(2), torus_2k(3)];
        for _ in 0..15 {
            diagrams.push(g.reduced_alternating(1, 3, 8));
            diagrams.push(g.reduced_alternating(2, 2, 8));
        }
        for d in diagrams {
            let ak = adams_kindred(&d).unwrap();
            let brute = brute_chi_max(&d).unwrap();
            assert_eq!(ak.chi_max, brute.chi_max, "chi mismatch on {}", d);
        }
    }

    #[test]
    fn ak_rejects_non_alternating() {
        let bad =
            PlanarDiagram::from_pd_code(&[[4, 2, 5, 1], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert!(matches!(adams_kindred(&bad), Err(Error::NotAlternating)));
    }

    #[test]
    fn genus_of_trefoil() {
        // The unique maximizer is the non-orientable 3-circle state.
        let report = brute_chi_max(&trefoil()).unwrap();
        assert!(report.exists_nonorientable_max);
        assert!(!report.exists_orientable_max);
        let g = genus_from_chi(&report);
        assert_eq!(g.min_genus, 1);
        assert_eq!(g.crosscap, 1);
        assert_eq!(g.genus, GenusBound::LowerBound(1));
        assert!(clark_check(g.crosscap, g.genus.value()));
    }

    #[test]
    fn genus_of_hopf() {
        let g = genus_from_chi(&brute_chi_max(&hopf()).unwrap());
        assert_eq!(g.min_genus, 0);
        assert_eq!(g.crosscap, 1);
        assert_eq!(g.genus, GenusBound::Exact(0));
    }

    #[test]
    fn genus_of_figure_eight() {
        // C = 2 and g = 1, attained simultaneously: both orientable and
        // non-orientable states reach χ = −1.
        let report = brute_chi_max(&figure_eight()).unwrap();
        assert_eq!(report.chi_max, -1);
        assert!(report.exists_nonorientable_max);
        assert!(report.exists_orientable_max);
        let g = genus_from_chi(&report);
        assert_eq!(g.crosscap, 2);
        assert_eq!(g.genus, GenusBound::Exact(1));
    }

    #[test]
    fn genus_of_torus_links() {
        // T(2,2k) bounds an annulus: χ_max = 0 via orientable states only,
        // so C = 1 and g = 0.
        for k in 1..=3 {
            let report = brute_chi_max(&torus_2k(k)).unwrap();
            assert_eq!(report.chi_max, 0);
            assert!(!report.exists_nonorientable_max);
            let g = genus_from_chi(&report);
            assert_eq!((g.crosscap, g.genus), (1, GenusBound::Exact(0)));
        }
    }

    #[test]
    fn beta1_convention() {
        assert_eq!(beta1(1, 2), 2);
        assert_eq!(beta1(2, 2), 3);
        assert_eq!(beta1(3, 1), 3);
    }

    #[test]
    fn clark_boundary() {
        assert!(clark_check(3, 1));
        assert!(!clark_check(4, 1));
        for g in 0..5 {
            assert!(clark_check(2 * g + 1, g));
        }
    }

    #[test]
    fn brute_cap() {
        let d = trefoil();
        assert!(matches!(brute_chi_max_capped(&d, 2), Err(Error::CapExceeded { .. })));
    }
}
