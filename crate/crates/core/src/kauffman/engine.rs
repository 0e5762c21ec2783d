use std::collections::HashMap;

use crate::diagram::{LinkDiagram, SmoothingMode};

use super::poly::LaurentPoly2;

/// Environment variable that disables memoization when set to `off`.
pub const CACHE_ENV: &str = "TWISTLAB_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheMode {
    On,
    Off,
}

impl CacheMode {
    /// `off`, `0`, `false` and `no` (any case) disable the cache.
    pub fn from_value(value: Option<&str>) -> CacheMode {
        match value.map(|v| v.trim().to_ascii_lowercase()) {
            Some(v) if matches!(v.as_str(), "off" | "0" | "false" | "no") => CacheMode::Off,
            _ => CacheMode::On,
        }
    }

    pub fn from_env() -> CacheMode {
        CacheMode::from_value(std::env::var(CACHE_ENV).ok().as_deref())
    }
}

/// `δ = (a + a^-1) z^-1 - 1`, the value of the two-component unlink.
pub fn delta_unlink() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(1, -1, 1), (-1, -1, 1), (0, 0, -1)])
}

/// `Λ` of a diagram, using a fresh memoizing engine.
pub fn lambda(d: &LinkDiagram) -> LaurentPoly2 {
    LambdaEngine::default().lambda(d)
}

/// Skein-tree evaluator with an optional memo table keyed on canonical
/// diagram keys.
///
/// Evaluation removes curls, splits the diagram into connected pieces, and
/// for each piece switches the crossings first met on an under-strand until
/// the diagram is descending. Each switch spawns the two smoothings, which
/// have one crossing fewer. A descending diagram is a stacked unlink, worth
/// `a^w δ^(n-1)` with `w` its self-writhe.
#[derive(Debug)]
pub struct LambdaEngine {
    cache: Option<HashMap<Vec<u8>, LaurentPoly2>>,
    delta_powers: Vec<LaurentPoly2>,
    evaluations: usize,
}

impl Default for LambdaEngine {
    fn default() -> Self {
        Self::new(CacheMode::On)
    }
}

impl LambdaEngine {
    pub fn new(mode: CacheMode) -> Self {
        LambdaEngine {
            cache: (mode == CacheMode::On).then(HashMap::new),
            delta_powers: vec![LaurentPoly2::one()],
            evaluations: 0,
        }
    }

    pub fn from_env() -> Self {
        Self::new(CacheMode::from_env())
    }

    pub fn cache_mode(&self) -> CacheMode {
        if self.cache.is_some() {
            CacheMode::On
        } else {
            CacheMode::Off
        }
    }

    /// Connected pieces evaluated from scratch so far.
    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    fn delta_pow(&mut self, n: usize) -> LaurentPoly2 {
        while self.delta_powers.len() <= n {
            let next = self.delta_powers.last().expect("non-empty") * &delta_unlink();
            self.delta_powers.push(next);
        }
        self.delta_powers[n].clone()
    }

    pub fn lambda(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        let (reduced, shift) = d.remove_curls();
        let parts = reduced.parts();
        let pieces = parts.len() + reduced.free_loops();
        let mut value = self.delta_pow(pieces.saturating_sub(1));
        for part in &parts {
            let piece = reduced.extract(part);
            value = &value * &self.connected(&piece);
        }
        value.shift(shift, 0)
    }

    /// Value of a connected, curl-free diagram with at least one crossing.
    fn connected(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        let key = self.cache.as_ref().map(|_| d.canonical_key());
        if let (Some(cache), Some(key)) = (&self.cache, &key) {
            if let Some(hit) = cache.get(key) {
                return hit.clone();
            }
        }
        self.evaluations += 1;
        let value = self.expand(d);
        if let (Some(cache), Some(key)) = (&mut self.cache, key) {
            cache.insert(key, value.clone());
        }
        value
    }

    fn expand(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        let bad = bad_crossings(d);
        let z = LaurentPoly2::z();
        let mut total = LaurentPoly2::zero();
        let mut sign = 1;
        let mut current = d.clone();
        for x in bad {
            let zero = current
                .smooth(x, SmoothingMode::Zero)
                .expect("crossing exists");
            let inf = current
                .smooth(x, SmoothingMode::Infinity)
                .expect("crossing exists");
            let smoothed = &self.lambda(&zero) + &self.lambda(&inf);
            let term = &z * &smoothed;
            if sign > 0 {
                total += &term;
            } else {
                total -= &term;
            }
            current = current.switch(x).expect("crossing exists");
            sign = -sign;
        }
        let base = self
            .delta_pow(current.components() - 1)
            .shift(current.self_writhe(), 0);
        if sign > 0 {
            total += &base;
        } else {
            total -= &base;
        }
        total
    }
}

/// Crossings first met on their under-strand when each component is walked
/// from its lowest slot, components taken in order of their lowest slot.
fn bad_crossings(d: &LinkDiagram) -> Vec<usize> {
    let mut seen = vec![false; d.crossing_count()];
    let mut bad = Vec::new();
    for entries in d.strands() {
        for entry in entries {
            let x = entry / 4;
            if !seen[x] {
                seen[x] = true;
                if entry % 2 == 0 {
                    bad.push(x);
                }
            }
        }
    }
    bad
}
