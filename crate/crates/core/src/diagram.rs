//! Unoriented link diagrams as 4-valent planar maps.
//!
//! Every crossing owns four slots numbered counterclockwise. Slots 0 and 2
//! carry the under-strand, slots 1 and 3 the over-strand. A diagram is a
//! perfect matching on all slots (the arcs) plus a count of crossing-free
//! circles. Slot `s` belongs to crossing `s / 4`; its local index is `s % 4`.
//!
//! Rotating a crossing's slot labels by two positions describes the same
//! diagram, so structural equality is only meaningful through
//! [`LinkDiagram::canonical_key`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::notation::{ConwayCode, SiteOrientation, UTriple};

pub type CrossingId = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("diagram has no crossing {0}")]
    UnknownCrossing(CrossingId),
    #[error("crossing {0} carries no twist-site tag")]
    UntaggedCrossing(CrossingId),
    #[error("connected sum needs a non-empty diagram")]
    EmptyDiagram,
    #[error("crossing {index} has {len} labels, expected 4")]
    BadArity { index: usize, len: usize },
    #[error("label {label} appears {count} times, expected exactly 2")]
    LabelCountMismatch { label: i64, count: usize },
    #[error("label {0} appears only once")]
    DanglingLabel(i64),
    #[error("label {0} is not a positive integer")]
    NonPositiveLabel(i64),
    #[error("malformed PD input: {0}")]
    Malformed(String),
    #[error("slot matching is not a fixed-point-free involution")]
    InvalidMatching,
}

/// Which pair of neighbouring slots a smoothing reconnects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmoothingMode {
    /// Joins slots 0-1 and 2-3.
    Zero,
    /// Joins slots 0-3 and 1-2.
    Infinity,
}

impl SmoothingMode {
    fn pairing(self) -> [(usize, usize); 2] {
        match self {
            SmoothingMode::Zero => [(0, 1), (2, 3)],
            SmoothingMode::Infinity => [(0, 3), (1, 2)],
        }
    }
}

/// How a smoothing acts on the twist site containing the crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmoothingKind {
    /// Shortens the site by one crossing.
    Axial,
    /// Cuts across the site, leaving a curl behind.
    CrossSectional,
}

/// Position of a crossing in a standard-format build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SiteTag {
    /// Twist site index, 0-based from the NW end.
    pub site: usize,
    pub orientation: SiteOrientation,
    /// Index of the crossing within its site.
    pub position: usize,
}

#[derive(Debug, Clone, Default)]
pub struct LinkDiagram {
    partner: Vec<usize>,
    free_loops: usize,
    site_tags: Vec<Option<SiteTag>>,
}

#[inline]
fn crossing_of(slot: usize) -> CrossingId {
    slot / 4
}

#[inline]
fn local(slot: usize) -> usize {
    slot % 4
}

#[inline]
fn opposite(slot: usize) -> usize {
    slot ^ 2
}

/// Sign of a crossing given the local slots at which the two strands enter.
#[inline]
fn crossing_sign(under_entry: usize, over_entry: usize) -> i32 {
    if (under_entry == 0) == (over_entry == 3) {
        1
    } else {
        -1
    }
}

impl LinkDiagram {
    /// `n` crossing-free circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            free_loops: n,
            ..Default::default()
        }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Builds a diagram from a raw slot matching.
    pub fn from_matching(partner: Vec<usize>, free_loops: usize) -> Result<Self, DiagramError> {
        if !partner.len().is_multiple_of(4) {
            return Err(DiagramError::InvalidMatching);
        }
        for (s, &p) in partner.iter().enumerate() {
            if p >= partner.len() || p == s || partner[p] != s {
                return Err(DiagramError::InvalidMatching);
            }
        }
        let c = partner.len() / 4;
        Ok(LinkDiagram {
            partner,
            free_loops,
            site_tags: vec![None; c],
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Slot matched with `slot`.
    pub fn partner(&self, slot: usize) -> usize {
        self.partner[slot]
    }

    pub fn slot_count(&self) -> usize {
        self.partner.len()
    }

    pub fn site_tag(&self, x: CrossingId) -> Option<SiteTag> {
        self.site_tags.get(x).copied().flatten()
    }

    pub fn site_tags(&self) -> &[Option<SiteTag>] {
        &self.site_tags
    }

    /// Drops all site tags.
    pub fn untagged(mut self) -> Self {
        self.site_tags.iter_mut().for_each(|t| *t = None);
        self
    }

    fn check(&self, x: CrossingId) -> Result<(), DiagramError> {
        if x < self.crossing_count() {
            Ok(())
        } else {
            Err(DiagramError::UnknownCrossing(x))
        }
    }

    /// Removes crossing `x`, joining its slots in pairs. Circles closed by
    /// the new connections become free loops. Crossings above `x` shift
    /// down by one.
    fn resolve(&self, x: CrossingId, pairing: [(usize, usize); 2]) -> LinkDiagram {
        let base = 4 * x;
        let mut inner = [0usize; 4];
        for (i, j) in pairing {
            inner[i] = j;
            inner[j] = i;
        }
        let remap = |s: usize| if s >= base + 4 { s - 4 } else { s };
        let in_x = |s: usize| crossing_of(s) == x;

        let mut partner = vec![NONE; self.partner.len() - 4];
        let mut used = [false; 4];
        for s in (0..self.partner.len()).filter(|&s| !in_x(s)) {
            let mut cur = self.partner[s];
            while in_x(cur) {
                let i = local(cur);
                used[i] = true;
                used[inner[i]] = true;
                cur = self.partner[base + inner[i]];
            }
            partner[remap(s)] = remap(cur);
        }

        let mut loops = 0;
        for start in 0..4 {
            if used[start] {
                continue;
            }
            loops += 1;
            let mut i = start;
            loop {
                used[i] = true;
                used[inner[i]] = true;
                i = local(self.partner[base + inner[i]]);
                if i == start {
                    break;
                }
            }
        }

        let mut site_tags = self.site_tags.clone();
        site_tags.remove(x);
        LinkDiagram {
            partner,
            free_loops: self.free_loops + loops,
            site_tags,
        }
    }

    /// Smooths crossing `x`.
    pub fn smooth(&self, x: CrossingId, mode: SmoothingMode) -> Result<LinkDiagram, DiagramError> {
        self.check(x)?;
        Ok(self.resolve(x, mode.pairing()))
    }

    pub fn classify_smoothing(
        &self,
        x: CrossingId,
        mode: SmoothingMode,
    ) -> Result<SmoothingKind, DiagramError> {
        self.check(x)?;
        let tag = self.site_tag(x).ok_or(DiagramError::UntaggedCrossing(x))?;
        Ok(match (tag.orientation, mode) {
            (SiteOrientation::Horizontal, SmoothingMode::Zero)
            | (SiteOrientation::Vertical, SmoothingMode::Infinity) => SmoothingKind::CrossSectional,
            _ => SmoothingKind::Axial,
        })
    }

    /// Relabels slots through `map` (a bijection on slot ids).
    fn permuted(&self, map: impl Fn(usize) -> usize) -> Vec<usize> {
        let mut partner = vec![NONE; self.partner.len()];
        for (s, &p) in self.partner.iter().enumerate() {
            partner[map(s)] = map(p);
        }
        partner
    }

    /// Exchanges the over- and under-strand at crossing `x`.
    pub fn switch(&self, x: CrossingId) -> Result<LinkDiagram, DiagramError> {
        self.check(x)?;
        let partner = self.permuted(|s| {
            if crossing_of(s) == x {
                4 * x + (local(s) + 3) % 4
            } else {
                s
            }
        });
        Ok(LinkDiagram {
            partner,
            ..self.clone()
        })
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        let partner = self.permuted(|s| 4 * crossing_of(s) + (local(s) + 3) % 4);
        LinkDiagram {
            partner,
            ..self.clone()
        }
    }

    /// Crossing `order[i]` of `self` becomes crossing `i`; crossings with
    /// `half_turn[i]` set have their slot labels rotated by two, which does
    /// not change the diagram.
    pub fn relabeled(&self, order: &[CrossingId], half_turn: &[bool]) -> LinkDiagram {
        let c = self.crossing_count();
        assert_eq!(order.len(), c, "order must list every crossing");
        let mut new_id = vec![NONE; c];
        for (i, &x) in order.iter().enumerate() {
            new_id[x] = i;
        }
        let partner = self.permuted(|s| {
            let i = new_id[crossing_of(s)];
            let turn = if half_turn.get(i).copied().unwrap_or(false) {
                2
            } else {
                0
            };
            4 * i + (local(s) + turn) % 4
        });
        let site_tags = order.iter().map(|&x| self.site_tags[x]).collect();
        LinkDiagram {
            partner,
            free_loops: self.free_loops,
            site_tags,
        }
    }

    /// Joins `d1` and `d2` by cutting the arc at slot 0 of each and splicing
    /// the ends. A crossing-free operand is treated as a unit: one of its
    /// circles is absorbed.
    pub fn connected_sum(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
        if d1.crossing_count() == 0 || d2.crossing_count() == 0 {
            let (unit, other) = if d1.crossing_count() == 0 {
                (d1, d2)
            } else {
                (d2, d1)
            };
            if unit.free_loops == 0 || (other.crossing_count() == 0 && other.free_loops == 0) {
                return Err(DiagramError::EmptyDiagram);
            }
            let mut out = other.clone();
            out.free_loops += unit.free_loops - 1;
            return Ok(out);
        }
        let offset = d1.partner.len();
        let mut partner = d1.partner.clone();
        partner.extend(d2.partner.iter().map(|&p| p + offset));
        let (s1, t1) = (0, d1.partner[0]);
        let (s2, t2) = (offset, offset + d2.partner[0]);
        // Under-end to over-end, so alternating operands stay alternating.
        partner[s1] = t2;
        partner[t2] = s1;
        partner[t1] = s2;
        partner[s2] = t1;
        let mut site_tags = d1.site_tags.clone();
        site_tags.extend_from_slice(&d2.site_tags);
        Ok(LinkDiagram {
            partner,
            free_loops: d1.free_loops + d2.free_loops,
            site_tags,
        })
    }

    /// Finds a crossing with two neighbouring slots joined by one arc.
    /// Returns the crossing and the sign of the curl.
    fn find_curl(&self) -> Option<(CrossingId, i32)> {
        (0..self.crossing_count()).find_map(|x| {
            (0..4).find_map(|i| {
                let s = 4 * x + i;
                let next = 4 * x + (i + 1) % 4;
                (self.partner[s] == next).then_some((x, if i % 2 == 0 { 1 } else { -1 }))
            })
        })
    }

    /// Removes all Reidemeister I curls. Returns the reduced diagram and the
    /// power of `a` picked up, so `lambda(self) = a^shift * lambda(reduced)`.
    pub fn remove_curls(&self) -> (LinkDiagram, i32) {
        let mut d = self.clone();
        let mut shift = 0;
        while let Some((x, sign)) = d.find_curl() {
            shift += sign;
            // Follow both strands straight through the crossing.
            d = d.resolve(x, [(0, 2), (1, 3)]);
        }
        (d, shift)
    }

    /// Inserts a curl of the given sign into the arc leaving `slot`.
    pub fn add_curl(&self, slot: usize, positive: bool) -> LinkDiagram {
        let mut d = self.clone();
        let x = d.crossing_count();
        let base = 4 * x;
        let t = d.partner[slot];
        d.partner.extend([NONE; 4]);
        let (lo, hi, a, b) = if positive { (0, 1, 2, 3) } else { (1, 2, 0, 3) };
        let link = |p: &mut Vec<usize>, u: usize, v: usize| {
            p[u] = v;
            p[v] = u;
        };
        link(&mut d.partner, base + lo, base + hi);
        link(&mut d.partner, slot, base + a);
        link(&mut d.partner, t, base + b);
        d.site_tags.push(None);
        d
    }

    /// Walks every closed strand. For each component yields the sequence of
    /// entry slots, starting at the lowest-numbered slot of the component.
    pub(crate) fn strands(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            // Leave the crossing through `start`.
            let mut entries = Vec::new();
            let mut exit = start;
            loop {
                let entry = self.partner[exit];
                seen[exit] = true;
                seen[entry] = true;
                entries.push(entry);
                exit = opposite(entry);
                if exit == start {
                    break;
                }
            }
            out.push(entries);
        }
        out
    }

    /// Number of closed strands, free loops included.
    pub fn components(&self) -> usize {
        self.strands().len() + self.free_loops
    }

    /// Sum of crossing signs over crossings whose two strands belong to the
    /// same component.
    pub fn self_writhe(&self) -> i32 {
        let c = self.crossing_count();
        let mut under = vec![(NONE, 0usize); c];
        let mut over = vec![(NONE, 0usize); c];
        for (comp, entries) in self.strands().iter().enumerate() {
            for &e in entries {
                let slot = if local(e).is_multiple_of(2) {
                    &mut under
                } else {
                    &mut over
                };
                slot[crossing_of(e)] = (comp, local(e));
            }
        }
        (0..c)
            .filter(|&x| under[x].0 == over[x].0)
            .map(|x| crossing_sign(under[x].1, over[x].1))
            .sum()
    }

    /// Sign of crossing `x` under an arbitrary orientation of each
    /// component. Only meaningful for self-crossings and curls.
    pub fn crossing_sign(&self, x: CrossingId) -> Result<i32, DiagramError> {
        self.check(x)?;
        let mut under = 0;
        let mut over = 0;
        for entries in self.strands() {
            for e in entries.into_iter().filter(|&e| crossing_of(e) == x) {
                if local(e).is_multiple_of(2) {
                    under = local(e);
                } else {
                    over = local(e);
                }
            }
        }
        Ok(crossing_sign(under, over))
    }

    /// Every strand alternates between over- and under-passes.
    pub fn is_alternating(&self) -> bool {
        self.strands().iter().all(|entries| {
            let n = entries.len();
            (0..n).all(|i| local(entries[i]) % 2 != local(entries[(i + 1) % n]) % 2)
        })
    }

    /// Connected pieces of the crossing graph, each sorted ascending.
    pub fn parts(&self) -> Vec<Vec<CrossingId>> {
        let c = self.crossing_count();
        let mut label = vec![NONE; c];
        let mut out = Vec::new();
        for root in 0..c {
            if label[root] != NONE {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            label[root] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for k in 0..4 {
                    let y = crossing_of(self.partner[4 * x + k]);
                    if label[y] == NONE {
                        label[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The sub-diagram on a union of parts, without free loops.
    pub(crate) fn extract(&self, crossings: &[CrossingId]) -> LinkDiagram {
        let mut new_id = vec![NONE; self.crossing_count()];
        for (i, &x) in crossings.iter().enumerate() {
            new_id[x] = i;
        }
        let map = |s: usize| 4 * new_id[crossing_of(s)] + local(s);
        let mut partner = vec![NONE; 4 * crossings.len()];
        for &x in crossings {
            for k in 0..4 {
                let s = 4 * x + k;
                partner[map(s)] = map(self.partner[s]);
            }
        }
        LinkDiagram {
            partner,
            free_loops: 0,
            site_tags: crossings.iter().map(|&x| self.site_tags[x]).collect(),
        }
    }

    /// Canonical code of one connected part: the lexicographically least
    /// breadth-first relabeling over all starting slots.
    fn part_code(&self, crossings: &[CrossingId]) -> Vec<u32> {
        let c = self.crossing_count();
        let mut best: Option<Vec<u32>> = None;
        let mut new_id = vec![NONE; c];
        let mut turn = vec![0usize; c];
        let mut order = Vec::with_capacity(crossings.len());
        let mut code = Vec::with_capacity(4 * crossings.len());
        for &x0 in crossings {
            for k0 in 0..4 {
                for &x in &order {
                    new_id[x] = NONE;
                }
                order.clear();
                code.clear();
                new_id[x0] = 0;
                turn[x0] = k0 & !1;
                order.push(x0);
                let mut head = 0;
                let mut worse = false;
                // Still equal to the best prefix found so far.
                let mut tied = best.is_some();
                while head < order.len() && !worse {
                    let x = order[head];
                    head += 1;
                    for k in 0..4 {
                        let p = self.partner[4 * x + (k + turn[x]) % 4];
                        let y = crossing_of(p);
                        if new_id[y] == NONE {
                            new_id[y] = order.len();
                            turn[y] = local(p) & !1;
                            order.push(y);
                        }
                        let value = (4 * new_id[y] + (local(p) + 4 - turn[y]) % 4) as u32;
                        if tied {
                            let b = best.as_ref().expect("tied implies a best code")[code.len()];
                            if value > b {
                                worse = true;
                                break;
                            }
                            tied = value == b;
                        }
                        code.push(value);
                    }
                }
                if !worse && !tied {
                    best = Some(code.clone());
                }
            }
        }
        for &x in &order {
            new_id[x] = NONE;
        }
        best.unwrap_or_default()
    }

    /// Byte string that agrees exactly for diagrams differing by a
    /// relabeling of crossings, slots or arcs.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut codes: Vec<Vec<u32>> = self.parts().iter().map(|p| self.part_code(p)).collect();
        codes.sort();
        let mut key = Vec::new();
        key.extend_from_slice(&(self.free_loops as u32).to_le_bytes());
        for code in codes {
            key.extend_from_slice(&(code.len() as u32).to_le_bytes());
            for v in code {
                key.extend_from_slice(&v.to_le_bytes());
            }
        }
        key
    }

    /// Same diagram up to relabeling.
    pub fn is_isomorphic(&self, other: &LinkDiagram) -> bool {
        self.crossing_count() == other.crossing_count()
            && self.canonical_key() == other.canonical_key()
    }

    /// PD code with arc labels `1..`. Free loops are not representable and
    /// are omitted.
    pub fn to_pd(&self) -> Vec<[u32; 4]> {
        let mut label = vec![0u32; self.partner.len()];
        let mut next = 1;
        for s in 0..self.partner.len() {
            if label[s] == 0 {
                label[s] = next;
                label[self.partner[s]] = next;
                next += 1;
            }
        }
        label.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect()
    }

    /// Builds a diagram from PD tuples: arc labels counterclockwise from an
    /// under-strand slot, each label used exactly twice. An empty code is the
    /// unknot.
    pub fn from_pd(tuples: &[Vec<i64>]) -> Result<LinkDiagram, DiagramError> {
        if tuples.is_empty() {
            return Ok(LinkDiagram::unknot());
        }
        let mut slots: HashMap<i64, Vec<usize>> = HashMap::new();
        let mut labels_in_order = Vec::new();
        for (index, t) in tuples.iter().enumerate() {
            if t.len() != 4 {
                return Err(DiagramError::BadArity {
                    index,
                    len: t.len(),
                });
            }
            for (k, &label) in t.iter().enumerate() {
                if label <= 0 {
                    return Err(DiagramError::NonPositiveLabel(label));
                }
                let entry = slots.entry(label).or_default();
                if entry.is_empty() {
                    labels_in_order.push(label);
                }
                entry.push(4 * index + k);
            }
        }
        let mut partner = vec![NONE; 4 * tuples.len()];
        for label in labels_in_order {
            match slots[&label].as_slice() {
                [a, b] => {
                    partner[*a] = *b;
                    partner[*b] = *a;
                }
                [_] => return Err(DiagramError::DanglingLabel(label)),
                many => {
                    return Err(DiagramError::LabelCountMismatch {
                        label,
                        count: many.len(),
                    })
                }
            }
        }
        LinkDiagram::from_matching(partner, 0)
    }

    /// Standard-format diagram of the numerator closure of `code`.
    pub fn build_standard(code: &ConwayCode) -> LinkDiagram {
        build_standard(code)
    }
}

pub fn smooth(
    d: &LinkDiagram,
    x: CrossingId,
    mode: SmoothingMode,
) -> Result<LinkDiagram, DiagramError> {
    d.smooth(x, mode)
}

pub fn switch(d: &LinkDiagram, x: CrossingId) -> Result<LinkDiagram, DiagramError> {
    d.switch(x)
}

pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    d.mirror()
}

pub fn connected_sum(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    LinkDiagram::connected_sum(d1, d2)
}

pub fn remove_curls(d: &LinkDiagram) -> (LinkDiagram, i32) {
    d.remove_curls()
}

pub fn components(d: &LinkDiagram) -> usize {
    d.components()
}

pub fn self_writhe(d: &LinkDiagram) -> i32 {
    d.self_writhe()
}

pub fn canonical_key(d: &LinkDiagram) -> Vec<u8> {
    d.canonical_key()
}

pub fn is_alternating(d: &LinkDiagram) -> bool {
    d.is_alternating()
}

// Legs of a standard-format crossing. The overcrossing strand runs SW-NE.
const NW: usize = 0;
const SW: usize = 1;
const SE: usize = 2;
const NE: usize = 3;

struct Builder {
    partner: Vec<usize>,
    tags: Vec<Option<SiteTag>>,
}

impl Builder {
    fn crossing(&mut self, tag: SiteTag) -> usize {
        let x = self.tags.len();
        self.partner.extend([NONE; 4]);
        self.tags.push(Some(tag));
        4 * x
    }

    fn join(&mut self, a: usize, b: usize) {
        debug_assert!(self.partner[a] == NONE && self.partner[b] == NONE);
        self.partner[a] = b;
        self.partner[b] = a;
    }
}

/// Herringbone construction: sites are laid out from the NW corner towards
/// SE, horizontal sites growing the tangle eastwards and vertical sites
/// southwards, then the NW/NE and SW/SE ends are joined.
pub fn build_standard(code: &ConwayCode) -> LinkDiagram {
    let mut b = Builder {
        partner: Vec::with_capacity(4 * code.crossings()),
        tags: Vec::with_capacity(code.crossings()),
    };
    // Open ends of the tangle built so far: (nw, ne, sw, se).
    let mut ends: Option<[usize; 4]> = None;

    for (site, &count) in code.entries().iter().enumerate() {
        let orientation = code.orientation(site);
        let tag = |position| SiteTag {
            site,
            orientation,
            position,
        };
        let first = b.crossing(tag(0));
        let mut last = first;
        for position in 1..count as usize {
            let next = b.crossing(tag(position));
            match orientation {
                SiteOrientation::Horizontal => {
                    b.join(last + NE, next + NW);
                    b.join(last + SE, next + SW);
                }
                SiteOrientation::Vertical => {
                    b.join(last + SW, next + NW);
                    b.join(last + SE, next + NE);
                }
            }
            last = next;
        }
        ends = Some(match (ends, orientation) {
            (None, SiteOrientation::Horizontal) => [first + NW, last + NE, first + SW, last + SE],
            (None, SiteOrientation::Vertical) => [first + NW, first + NE, last + SW, last + SE],
            (Some([nw, ne, sw, se]), SiteOrientation::Horizontal) => {
                b.join(ne, first + NW);
                b.join(se, first + SW);
                [nw, last + NE, sw, last + SE]
            }
            (Some([nw, ne, sw, se]), SiteOrientation::Vertical) => {
                b.join(sw, first + NW);
                b.join(se, first + NE);
                [nw, ne, last + SW, last + SE]
            }
        });
    }

    let [nw, ne, sw, se] = ends.expect("codes are non-empty");
    b.join(nw, ne);
    b.join(sw, se);
    LinkDiagram {
        partner: b.partner,
        free_loops: 0,
        site_tags: b.tags,
    }
}

/// One line of a PD input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdRecord {
    pub name: String,
    pub pd: Vec<Vec<i64>>,
    /// Expected `[u-, u0, u+]`, when the fixture supplies one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_u: Option<UTriple>,
    /// Twist-site count of the diagram, for inputs where it is known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist_sites: Option<usize>,
}

impl PdRecord {
    pub fn diagram(&self) -> Result<LinkDiagram, DiagramError> {
        LinkDiagram::from_pd(&self.pd)
    }
}

/// Parses PD text, either a JSON array of 4-tuples or KnotTheory-style
/// `PD[X[1,4,2,5], ...]`.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let trimmed = text.trim();
    let tuples: Vec<Vec<i64>> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| DiagramError::Malformed(e.to_string()))?
    } else {
        let mut out = Vec::new();
        let mut rest = trimmed;
        while let Some(start) = rest.find("X[") {
            let body = &rest[start + 2..];
            let end = body
                .find(']')
                .ok_or_else(|| DiagramError::Malformed("unterminated X[".into()))?;
            let tuple = body[..end]
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| DiagramError::Malformed(format!("bad label {:?}", t.trim())))
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(tuple);
            rest = &body[end + 1..];
        }
        if out.is_empty() && !trimmed.is_empty() && trimmed != "PD[]" {
            return Err(DiagramError::Malformed("no X[...] tuples found".into()));
        }
        out
    };
    LinkDiagram::from_pd(&tuples)
}

/// Reads newline-delimited JSON records. Blank lines and `#` comments are
/// skipped.
pub fn parse_pd_records(text: &str) -> Result<Vec<PdRecord>, DiagramError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| serde_json::from_str(l).map_err(|e| DiagramError::Malformed(e.to_string())))
        .collect()
}
