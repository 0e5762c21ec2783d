#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistlab_core::notation::enumerate_standard;
use twistlab_core::{ConwayCode, LinkDiagram, PdRecord};

pub fn code(text: &str) -> ConwayCode {
    text.parse().unwrap()
}

pub fn build(text: &str) -> LinkDiagram {
    LinkDiagram::build_standard(&code(text))
}

pub fn fixtures() -> Vec<PdRecord> {
    let text = include_str!("../fixtures/links.jsonl");
    twistlab_core::diagram::parse_pd_records(text).unwrap()
}

pub fn fixture(name: &str) -> PdRecord {
    fixtures().into_iter().find(|r| r.name == name).unwrap()
}

/// Pretzel link `P(t1, .., tn)`: vertical twists side by side, numerator
/// closure, every overstrand of positive slope. Built straight from slot
/// matchings, independently of the rational builder.
pub fn pretzel(twists: &[usize]) -> LinkDiagram {
    const NW: usize = 0;
    const SW: usize = 1;
    const SE: usize = 2;
    const NE: usize = 3;
    let c: usize = twists.iter().sum();
    let mut p = vec![usize::MAX; 4 * c];
    let join = |p: &mut Vec<usize>, a: usize, b: usize| {
        p[a] = b;
        p[b] = a;
    };
    let mut ends = vec![];
    let mut x = 0;
    for &t in twists {
        for i in x..x + t - 1 {
            join(&mut p, 4 * i + SW, 4 * (i + 1) + NW);
            join(&mut p, 4 * i + SE, 4 * (i + 1) + NE);
        }
        let last = x + t - 1;
        ends.push([4 * x + NW, 4 * x + NE, 4 * last + SW, 4 * last + SE]);
        x += t;
    }
    for k in 0..ends.len() - 1 {
        join(&mut p, ends[k][1], ends[k + 1][0]);
        join(&mut p, ends[k][3], ends[k + 1][2]);
    }
    let n = ends.len() - 1;
    join(&mut p, ends[0][0], ends[n][1]);
    join(&mut p, ends[0][2], ends[n][3]);
    LinkDiagram::from_matching(p, 0).unwrap()
}

/// Random planar diagram with at most `max_crossings` crossings: a standard
/// build, optionally summed with a second one, with random switches, curls
/// and a random relabeling.
pub fn random_diagram(rng: &mut ChaCha8Rng, max_crossings: usize) -> LinkDiagram {
    let pick = |rng: &mut ChaCha8Rng, budget: usize| {
        let c = rng.gen_range(2..=budget.max(2));
        enumerate_standard(c).choose(rng).unwrap().clone()
    };
    let first = pick(rng, max_crossings.min(5));
    let mut d = LinkDiagram::build_standard(&first);
    let room = max_crossings - d.crossing_count();
    if room >= 2 && rng.gen_bool(0.3) {
        let second = LinkDiagram::build_standard(&pick(rng, room));
        d = LinkDiagram::connected_sum(&d, &second).unwrap();
    }
    for x in 0..d.crossing_count() {
        if rng.gen_bool(0.3) {
            d = d.switch(x).unwrap();
        }
    }
    while d.crossing_count() < max_crossings && rng.gen_bool(0.3) {
        let slot = rng.gen_range(0..d.slot_count());
        d = d.add_curl(slot, rng.gen_bool(0.5));
    }
    relabel(rng, &d)
}

pub fn relabel(rng: &mut ChaCha8Rng, d: &LinkDiagram) -> LinkDiagram {
    let mut order: Vec<usize> = (0..d.crossing_count()).collect();
    order.shuffle(rng);
    let turns: Vec<bool> = (0..order.len()).map(|_| rng.gen_bool(0.5)).collect();
    d.relabeled(&order, &turns)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
