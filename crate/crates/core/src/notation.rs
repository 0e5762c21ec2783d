//! Conway codes of rational tangles in standard format.
//!
//! A code `p q1 .. qk r` lists the twist counts of the sites of the standard
//! herringbone diagram, first (NW) to last (SE). Sites alternate between
//! horizontal and vertical and the last site is always horizontal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("empty Conway code")]
    EmptyInput,
    #[error("token {0:?} is not an integer")]
    NonNumericToken(String),
    #[error("entry {value} at position {position} is not positive")]
    NonPositiveEntry { position: usize, value: i64 },
    #[error("end entry {value} at position {position} must be at least 2")]
    EndEntryTooSmall { position: usize, value: u32 },
    #[error("the Hopf link has no smaller standard representative")]
    HopfBase,
}

/// Orientation of a twist site in the standard diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteOrientation {
    /// Left-turning double helix running west to east.
    Horizontal,
    /// Right-turning double helix running north to south.
    Vertical,
}

/// A validated Conway code in standard format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConwayCode(Vec<u32>);

impl ConwayCode {
    /// Validates raw entries against the standard-format rules.
    pub fn new(entries: Vec<u32>) -> Result<Self, NotationError> {
        if entries.is_empty() {
            return Err(NotationError::EmptyInput);
        }
        if let Some(position) = entries.iter().position(|&e| e == 0) {
            return Err(NotationError::NonPositiveEntry { position, value: 0 });
        }
        let last = entries.len() - 1;
        for position in [0, last] {
            if entries[position] < 2 {
                return Err(NotationError::EndEntryTooSmall {
                    position,
                    value: entries[position],
                });
            }
        }
        Ok(ConwayCode(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn sites(&self) -> usize {
        self.0.len()
    }

    pub fn crossings(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Orientation of site `index` (0-based from the NW end).
    pub fn orientation(&self, index: usize) -> SiteOrientation {
        orientation_of(index, self.sites())
    }

    /// The Hopf link code `2`.
    pub fn is_hopf(&self) -> bool {
        self.0 == [2]
    }
}

pub(crate) fn orientation_of(index: usize, sites: usize) -> SiteOrientation {
    if (sites - 1 - index).is_multiple_of(2) {
        SiteOrientation::Horizontal
    } else {
        SiteOrientation::Vertical
    }
}

impl fmt::Display for ConwayCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for ConwayCode {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_conway(s)
    }
}

/// Parses whitespace-separated decimal twist counts, e.g. `"2 1 1 1 2"`.
pub fn parse_conway(text: &str) -> Result<ConwayCode, NotationError> {
    let mut entries = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let value: i64 = token
            .parse()
            .map_err(|_| NotationError::NonNumericToken(token.to_string()))?;
        if value <= 0 {
            return Err(NotationError::NonPositiveEntry { position, value });
        }
        let value =
            u32::try_from(value).map_err(|_| NotationError::NonNumericToken(token.to_string()))?;
        entries.push(value);
    }
    ConwayCode::new(entries)
}

/// Twist-site census of a standard code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCensus {
    pub sites: usize,
    pub left_turning: usize,
    pub right_turning: usize,
    pub crossings: usize,
    /// Crossings beyond the minimal tangle with the same number of sites.
    pub extra: usize,
    pub is_minimal: bool,
}

impl TwistCensus {
    pub fn is_hopf(&self) -> bool {
        self.sites == 1 && self.crossings == 2
    }
}

/// Crossing count of the minimal code with `sites` twist sites
/// (`3`, `2 2`, `2 1 .. 1 2`). The Hopf link is handled separately.
pub fn minimal_crossings(sites: usize) -> usize {
    sites + 2
}

pub fn census(code: &ConwayCode) -> TwistCensus {
    let sites = code.sites();
    let crossings = code.crossings();
    // The Hopf link is its own base case: no extra crossings.
    let extra = crossings.saturating_sub(minimal_crossings(sites));
    TwistCensus {
        sites,
        left_turning: sites.div_ceil(2),
        right_turning: sites / 2,
        crossings,
        extra,
        is_minimal: extra == 0,
    }
}

/// Coefficients of `a^-2 z^(c-2)`, `z^(c-2)` and `a^2 z^(c-2)` in the
/// Kauffman polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UTriple {
    pub minus: i64,
    pub zero: i64,
    pub plus: i64,
}

impl UTriple {
    pub const fn new(minus: i64, zero: i64, plus: i64) -> Self {
        UTriple { minus, zero, plus }
    }

    pub fn mirrored(self) -> Self {
        UTriple::new(self.plus, self.zero, self.minus)
    }
}

impl fmt::Display for UTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.minus, self.zero, self.plus)
    }
}

impl FromStr for UTriple {
    type Err = String;

    /// Comma-separated `u-,u0,u+`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!(
                "expected three comma-separated integers, got {s:?}"
            ));
        }
        let mut values = [0i64; 3];
        for (slot, part) in values.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| format!("{part:?} is not an integer"))?;
        }
        Ok(UTriple::new(values[0], values[1], values[2]))
    }
}

impl Serialize for UTriple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.minus, self.zero, self.plus].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UTriple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [minus, zero, plus] = <[i64; 3]>::deserialize(deserializer)?;
        Ok(UTriple::new(minus, zero, plus))
    }
}

/// Predicted `(u-, u0, u+)` for the standard diagram with this census.
pub fn predicted_u(census: &TwistCensus) -> UTriple {
    if census.is_hopf() {
        return UTriple::new(0, 1, 0);
    }
    UTriple::new(
        census.right_turning as i64,
        census.sites as i64,
        census.left_turning as i64,
    )
}

/// The minimal code with the same number of twist sites.
pub fn minimal_code(census: &TwistCensus) -> Result<ConwayCode, NotationError> {
    if census.is_hopf() {
        return Err(NotationError::HopfBase);
    }
    let entries = match census.sites {
        1 => vec![3],
        n => {
            let mut v = vec![1; n];
            v[0] = 2;
            v[n - 1] = 2;
            v
        }
    };
    ConwayCode::new(entries)
}

/// Value of a rational tangle, in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleFraction {
    pub numerator: i64,
    pub denominator: i64,
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// `a_n + 1/(a_(n-1) + 1/(.. + 1/a_1))`, entries read first to last.
///
/// Panics if the value does not fit in 64-bit integers.
pub fn continued_fraction(code: &ConwayCode) -> TangleFraction {
    let mut entries = code.entries().iter().map(|&e| i64::from(e));
    let mut numerator = entries.next().expect("codes are non-empty");
    let mut denominator = 1i64;
    for a in entries {
        // a + d/n = (a n + d) / n, and gcd(a n + d, n) = gcd(d, n) = 1.
        let next = a
            .checked_mul(numerator)
            .and_then(|v| v.checked_add(denominator))
            .expect("continued fraction overflows i64");
        denominator = numerator;
        numerator = next;
    }
    TangleFraction {
        numerator,
        denominator,
    }
}

/// All standard codes whose entries sum to `crossings`, in lexicographic order.
pub fn enumerate_standard(crossings: usize) -> Vec<ConwayCode> {
    fn extend(remaining: usize, prefix: &mut Vec<u32>, out: &mut Vec<ConwayCode>) {
        if remaining == 0 {
            if let Ok(code) = ConwayCode::new(prefix.clone()) {
                out.push(code);
            }
            return;
        }
        let lowest = if prefix.is_empty() { 2 } else { 1 };
        for e in lowest..=remaining {
            // Leaving exactly 1 behind would force a last entry of 1.
            if remaining - e == 1 {
                continue;
            }
            prefix.push(e as u32);
            extend(remaining - e, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if crossings >= 2 {
        extend(crossings, &mut Vec::new(), &mut out);
    }
    out
}
