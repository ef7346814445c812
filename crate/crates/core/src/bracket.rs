//! State-sum cross-check invariants: writhe, linking number, and the
//! writhe-normalized Kauffman bracket. These are used to validate
//! bundled fixtures (distinguishing candidate diagrams as links) and by
//! the verification suites; the genus pipeline itself never needs them.

use std::collections::BTreeMap;

use crate::diagram::{CrossingId, EdgeId, PlanarDiagram, Port};
use crate::error::{Error, Result};
use crate::splice::{count_state_circles, orientations, Orientation, State, Way};

/// Laurent polynomial in one variable, exponent → coefficient.
pub type Laurent = BTreeMap<i32, i64>;

fn add_term(p: &mut Laurent, exp: i32, coeff: i64) {
    let c = p.entry(exp).or_insert(0);
    *c += coeff;
    if *c == 0 {
        p.remove(&exp);
    }
}

/// Head port of every edge under the orientation.
fn heads(d: &PlanarDiagram, o: &Orientation) -> BTreeMap<EdgeId, Port> {
    let mut head = BTreeMap::new();
    for (walk, &rev) in d.component_walks().iter().zip(&o.0) {
        for (i, &e) in walk.edges.iter().enumerate() {
            let to = walk.passages[i];
            head.insert(e, if rev { d.partner(to) } else { to });
        }
    }
    head
}

fn crossing_sign(d: &PlanarDiagram, head: &BTreeMap<EdgeId, Port>, c: CrossingId) -> i32 {
    let x = d.crossings()[&c];
    let arriving = |s: u8| head[&x.slots[s as usize]] == Port::new(c, s);
    let under_in = if arriving(0) { 0u8 } else { 2 };
    let over_in = if arriving(1) { 1u8 } else { 3 };
    // Paired with reading way A as the A-smoothing, so that a positive
    // kink normalizes away.
    if (over_in + 4 - under_in) % 4 == 3 {
        1
    } else {
        -1
    }
}

/// Sum of crossing signs under the given orientation.
pub fn writhe(d: &PlanarDiagram, o: &Orientation) -> Result<i32> {
    if !d.has_over_under() {
        return Err(Error::NoOverUnder);
    }
    let head = heads(d, o);
    Ok(d.crossing_ids().map(|c| crossing_sign(d, &head, c)).sum())
}

/// Half the signed count of crossings between the two components of a
/// two-component diagram, under the first orientation. Its absolute
/// value is a link invariant.
pub fn linking_number(d: &PlanarDiagram) -> Result<i32> {
    if !d.has_over_under() {
        return Err(Error::NoOverUnder);
    }
    let comps = d.components();
    if comps.count != 2 {
        return Err(Error::ComponentCount { expected: 2, found: comps.count });
    }
    let o = Orientation(vec![false; d.component_walks().len()]);
    let head = heads(d, &o);
    let mut total = 0;
    for c in d.crossing_ids() {
        let x = d.crossings()[&c];
        if comps.of_edge[&x.slots[0]] != comps.of_edge[&x.slots[1]] {
            total += crossing_sign(d, &head, c);
        }
    }
    Ok(total / 2)
}

/// The Kauffman bracket state sum Σ A^(a−b) δ^(|S|−1) with δ = −A²−A⁻²,
/// reading way A as the A-smoothing. The global A ↔ A⁻¹ convention is
/// only fixed up to mirror image.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<Laurent> {
    let ids: Vec<CrossingId> = d.crossing_ids().collect();
    let n = ids.len();
    let mut poly = Laurent::new();
    for bits in 0..(1u64 << n) {
        let a_count = bits.count_ones() as i32;
        let state = State(
            ids.iter()
                .enumerate()
                .map(|(i, &c)| (c, if bits & (1 << i) != 0 { Way::A } else { Way::B }))
                .collect(),
        );
        let circles = count_state_circles(d, &state)? as i32;
        let base_exp = a_count - (n as i32 - a_count);
        // δ^(circles-1) expanded binomially: (−1)^k Σ C(k,j) A^(2(2j−k)).
        let k = circles - 1;
        let sign = if k % 2 == 0 { 1i64 } else { -1 };
        let mut binom = 1i64;
        for j in 0..=k {
            add_term(&mut poly, base_exp + 2 * (2 * j - k), sign * binom);
            binom = binom * (k - j) as i64 / (j + 1) as i64;
        }
    }
    Ok(poly)
}

fn negate_a_cubed_power(p: &Laurent, w: i32) -> Laurent {
    // Multiply by (−A³)^(−w).
    let sign = if w % 2 == 0 { 1 } else { -1 };
    p.iter().map(|(&e, &c)| (e - 3 * w, sign * c)).collect()
}

fn invert_variable(p: &Laurent) -> Laurent {
    p.iter().map(|(&e, &c)| (-e, c)).collect()
}

/// The writhe-normalized bracket (−A³)^(−w)⟨D⟩ for every orientation,
/// sorted. Two diagrams of the same link share this set up to a global
/// A ↔ A⁻¹ substitution; disjoint sets certify distinct links.
pub fn kauffman_set(d: &PlanarDiagram) -> Result<Vec<Laurent>> {
    let bracket = kauffman_bracket(d)?;
    let mut out = Vec::new();
    for o in orientations(d) {
        let w = writhe(d, &o)?;
        out.push(negate_a_cubed_power(&bracket, w));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// True when the normalized bracket sets rule the two diagrams out as
/// diagrams of the same link (in either mirror convention).
pub fn brackets_distinguish(a: &PlanarDiagram, b: &PlanarDiagram) -> Result<bool> {
    let sa = kauffman_set(a)?;
    let sb = kauffman_set(b)?;
    let sb_inv: Vec<Laurent> = {
        let mut v: Vec<Laurent> = sb.iter().map(invert_variable).collect();
        v.sort();
        v
    };
    Ok(sa != sb && sa != sb_inv)
}
