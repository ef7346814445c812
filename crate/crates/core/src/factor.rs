//! RI⁻ reduction, prime decomposition of knot diagrams along 2-edge
//! cuts, and negative-factor classification.
//!
//! A connected sum is visible in a reduced knot diagram as a proper
//! interval of the Gauss sequence containing both passages of each of
//! its crossings; cutting the two boundary edges and closing both sides
//! yields the factors.

use crate::diagram::{CrossingId, EdgeId, PlanarDiagram, Port};
use crate::error::{Error, Result};
use crate::search::SearchOptions;
use crate::splice::{smooth, Way};
use crate::surface::brute_chi_max;

/// Repeatedly absorbs 1-gons with RI⁻ until none remain. Returns the
/// reduced diagram and the number of reductions.
pub fn reduce_monogons(d: &PlanarDiagram) -> (PlanarDiagram, u32) {
    let mut cur = d.clone();
    let mut count = 0;
    loop {
        let faces = cur.all_faces();
        let Some(face) = faces.iter().find(|f| f.degree() == 1) else {
            return (cur, count);
        };
        let (c, s) = face.corners[0];
        // The way pairing (s, s+1) detaches the 1-gon; the other absorbs it.
        let detach = if s % 2 == 0 { Way::A } else { Way::B };
        cur = smooth(&cur, c, detach.other()).expect("monogon crossing exists");
        count += 1;
    }
}

/// Decomposes a connected reduced knot diagram into its prime factors,
/// ordered by smallest original crossing id. The crossingless circle has
/// no factors.
pub fn prime_factors(d: &PlanarDiagram) -> Result<Vec<PlanarDiagram>> {
    if d.n_crossings() == 0 {
        return Ok(Vec::new());
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    if d.components().count != 1 {
        return Err(Error::NotAKnot);
    }
    if !d.monogons().is_empty() {
        return Err(Error::CheckFailed("prime decomposition requires a reduced diagram".into()));
    }
    let mut factors = Vec::new();
    let mut rest = d.clone();
    loop {
        match split_once(&rest)? {
            Some((factor, remainder)) => {
                factors.push(factor);
                rest = remainder;
            }
            None => {
                if rest.n_crossings() > 0 {
                    factors.push(rest);
                }
                break;
            }
        }
    }
    factors.sort_by_key(|f| f.crossing_ids().min().unwrap_or(0));
    Ok(factors)
}

/// Finds a minimal proper Gauss interval and splits along it. Returns
/// `None` when the diagram is prime (or crossingless).
fn split_once(d: &PlanarDiagram) -> Result<Option<(PlanarDiagram, PlanarDiagram)>> {
    let n = d.n_crossings();
    if n < 2 {
        return Ok(None);
    }
    let walk = &d.component_walks()[0];
    let len = walk.passages.len();
    debug_assert_eq!(len, 2 * n);
    let crossing_at: Vec<CrossingId> = walk.passages.iter().map(|p| p.crossing).collect();
    // Smallest even interval length first, then smallest start.
    for size in (2..len).step_by(2) {
        for start in 0..len {
            let mut inside: Vec<CrossingId> = (0..size)
                .map(|t| crossing_at[(start + t) % len])
                .collect();
            inside.sort_unstable();
            if inside.chunks(2).any(|c| c[0] != c[1]) {
                continue;
            }
            if size / 2 == n {
                continue;
            }
            return Ok(Some(split_at(d, walk, start, size)));
        }
    }
    Ok(None)
}

fn split_at(
    d: &PlanarDiagram,
    walk: &crate::diagram::ComponentWalk,
    start: usize,
    size: usize,
) -> (PlanarDiagram, PlanarDiagram) {
    let len = walk.passages.len();
    let end = (start + size - 1) % len; // last passage inside
    let entry: Port = walk.passages[start];
    let exit: Port = walk.passages[end].through();
    let after: Port = walk.passages[(start + size) % len];
    let before: Port = walk.passages[(start + len - 1) % len].through();
    let inside: std::collections::BTreeSet<CrossingId> =
        (0..size).map(|t| walk.passages[(start + t) % len].crossing).collect();
    let fresh = d.max_edge_label() + 1;
    let carve = |keep_inside: bool, close_a: Port, close_b: Port| {
        let crossings = d
            .crossings()
            .iter()
            .filter(|(c, _)| inside.contains(c) == keep_inside)
            .map(|(&c, x)| {
                let mut slots = x.slots;
                for (s, slot) in slots.iter_mut().enumerate() {
                    let here = Port::new(c, s as u8);
                    if here == close_a || here == close_b {
                        *slot = fresh;
                    }
                }
                (c, crate::diagram::Crossing { slots })
            })
            .collect();
        PlanarDiagram::new(crossings, 0, d.has_over_under())
            .expect("interval closure stays planar")
    };
    let factor = carve(true, entry, exit);
    let remainder = carve(false, after, before);
    (factor, remainder)
}

/// True iff no proper Gauss interval of any component closes up, i.e.
/// the diagram is not a visible connected sum. A factor tied into a
/// component appears as an interval containing both passages of each of
/// its crossings.
pub fn is_prime_diagram(d: &PlanarDiagram) -> bool {
    for walk in d.component_walks() {
        let len = walk.passages.len();
        let crossing_at: Vec<CrossingId> = walk.passages.iter().map(|p| p.crossing).collect();
        for size in (2..len.min(2 * d.n_crossings())).step_by(2) {
            for start in 0..len {
                let mut inside: Vec<CrossingId> =
                    (0..size).map(|t| crossing_at[(start + t) % len]).collect();
                inside.sort_unstable();
                if inside.chunks(2).all(|c| c[0] == c[1]) && size / 2 < d.n_crossings() {
                    return false;
                }
            }
        }
    }
    true
}

/// m ↦ [m]: identity for m ≤ 1, m − 1 otherwise.
pub fn bracket_m(m: u32) -> u32 {
    if m <= 1 {
        m
    } else {
        m - 1
    }
}

/// True iff no non-orientable state of this prime alternating knot
/// diagram attains the maximal Euler characteristic, i.e. C = 2g + 1.
/// Cross-checked against the splice-unknotting arithmetic
/// u⁻ = 2 − χ_max (negative) versus u⁻ = 1 − χ_max (otherwise).
pub fn is_negative_factor(f: &PlanarDiagram) -> Result<bool> {
    is_negative_factor_with(f, &SearchOptions::default())
}

pub fn is_negative_factor_with(f: &PlanarDiagram, opts: &SearchOptions) -> Result<bool> {
    if f.components().count != 1 {
        return Err(Error::NotAKnot);
    }
    if !f.is_alternating()? {
        return Err(Error::NotAlternating);
    }
    let report = brute_chi_max(f)?;
    let negative = !report.exists_nonorientable_max;
    let (u, _) = crate::search::u_minus_with(f, opts)?;
    let expected = if negative { 2 - report.chi_max } else { 1 - report.chi_max };
    if u as i32 != expected {
        return Err(Error::CriterionMismatch(format!(
            "u⁻ = {u} but χ_max = {} with {} maximizer",
            report.chi_max,
            if negative { "no non-orientable" } else { "a non-orientable" },
        )));
    }
    Ok(negative)
}

#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub diagram: PlanarDiagram,
    pub u_minus: u32,
    pub chi_max: i32,
    pub max_circles: u32,
    pub negative: bool,
    /// The minimal count of B-deformations: u⁻ − 1 on negative factors.
    pub b_value: u32,
}

#[derive(Clone, Debug)]
pub struct FactorReport {
    pub factors: Vec<FactorInfo>,
    pub m: u32,
    pub bracket_m: u32,
    pub ri_reduction_count: u32,
}

impl FactorReport {
    pub fn u_minus_total(&self) -> u32 {
        self.factors.iter().map(|f| f.u_minus).sum()
    }
}

/// Reduces a knot diagram, decomposes it, and classifies every factor.
pub fn analyze_knot(d: &PlanarDiagram, opts: &SearchOptions) -> Result<FactorReport> {
    let (reduced, ri_count) = reduce_monogons(d);
    let factors = prime_factors(&reduced)?;
    let mut infos = Vec::new();
    for f in factors {
        let negative = is_negative_factor_with(&f, opts)?;
        let report = brute_chi_max(&f)?;
        let (u, _) = crate::search::u_minus_with(&f, opts)?;
        infos.push(FactorInfo {
            u_minus: u,
            chi_max: report.chi_max,
            max_circles: report.max_circles,
            negative,
            b_value: if negative { u - 1 } else { u },
            diagram: f,
        });
    }
    let m = infos.iter().filter(|f| f.negative).count() as u32;
    Ok(FactorReport { factors: infos, m, bracket_m: bracket_m(m), ri_reduction_count: ri_count })
}

/// Connected sum of two diagrams along the chosen edges: cuts both and
/// joins the curves. When both inputs are alternating the phases are
/// matched by flipping the second diagram if needed.
pub fn connected_sum(
    a: &PlanarDiagram,
    ea: EdgeId,
    b: &PlanarDiagram,
    eb: EdgeId,
) -> Result<PlanarDiagram> {
    let out = splice_diagrams(a, ea, b, eb)?;
    let alternating = a.has_over_under()
        && b.has_over_under()
        && a.is_alternating().unwrap_or(false)
        && b.is_alternating().unwrap_or(false);
    if !alternating || out.is_alternating()? {
        return Ok(out);
    }
    let out = splice_diagrams(a, ea, &b.flip_all_crossings(), eb)?;
    debug_assert!(out.is_alternating()?);
    Ok(out)
}

fn splice_diagrams(
    a: &PlanarDiagram,
    ea: EdgeId,
    b: &PlanarDiagram,
    eb: EdgeId,
) -> Result<PlanarDiagram> {
    if !a.edge_ids().any(|e| e == ea) || !b.edge_ids().any(|e| e == eb) {
        return Err(Error::BadRecord("connected sum edge not present".into()));
    }
    let c_off = a.max_crossing_id() + 1;
    let e_off = a.max_edge_label() + 1;
    let [p1, p2] = a.edge_ports(ea);
    let [q1, q2] = b.edge_ports(eb);
    let shift = |p: Port| Port::new(p.crossing + c_off, p.slot);
    let (q1, q2) = (shift(q1), shift(q2));
    let x = e_off + b.max_edge_label() + 1;
    let y = x + 1;
    let mut crossings = a.crossings().clone();
    for (&c, cr) in b.crossings() {
        crossings.insert(c + c_off, crate::diagram::Crossing { slots: cr.slots.map(|e| e + e_off) });
    }
    let mut set = |p: Port, e: EdgeId| {
        crossings.get_mut(&p.crossing).unwrap().slots[p.slot as usize] = e;
    };
    set(p1, x);
    set(q1, x);
    set(p2, y);
    set(q2, y);
    PlanarDiagram::new(
        crossings,
        a.free_circles() + b.free_circles(),
        a.has_over_under() && b.has_over_under(),
    )
}
