use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::notation::UTriple;

use super::poly::LaurentPoly2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruncationError {
    #[error("expected top z-degree {expected} with row a + a^-1, found {found}")]
    TopDegreeMismatch { expected: i32, found: String },
}

/// The two highest z-rows of `Λ` for a reduced alternating diagram with
/// `crossings` crossings: `u- a^-2 z^(c-2) + u0 z^(c-2) + u+ a^2 z^(c-2)`
/// and `a^-1 z^(c-1) + a z^(c-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedLambda {
    pub crossings: usize,
    pub u: UTriple,
    /// Coefficients of `a^-1 z^(c-1)` and `a z^(c-1)`.
    pub top: (i64, i64),
    pub top_pair_present: bool,
}

impl TruncatedLambda {
    pub fn u_minus(&self) -> i64 {
        self.u.minus
    }

    pub fn u_zero(&self) -> i64 {
        self.u.zero
    }

    pub fn u_plus(&self) -> i64 {
        self.u.plus
    }

    /// The five tracked terms as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly2 {
        let c = self.crossings as i32;
        LaurentPoly2::from_terms([
            (-2, c - 2, self.u.minus),
            (0, c - 2, self.u.zero),
            (2, c - 2, self.u.plus),
            (-1, c - 1, self.top.0),
            (1, c - 1, self.top.1),
        ])
    }
}

/// Terms of z-degree `c-1` and `c-2`.
pub fn top_rows(p: &LaurentPoly2, crossings: usize) -> LaurentPoly2 {
    let c = crossings as i32;
    &p.z_row(c - 1) + &p.z_row(c - 2)
}

/// Every term satisfies `z_exp + |a_exp| <= c`.
pub fn degree_bound_holds(p: &LaurentPoly2, crossings: usize) -> bool {
    p.terms()
        .all(|(a, z, _)| i64::from(z) + i64::from(a.abs()) <= crossings as i64)
}

pub fn truncate(p: &LaurentPoly2, crossings: usize) -> Result<TruncatedLambda, TruncationError> {
    let c = crossings as i32;
    let expected_top = LaurentPoly2::from_terms([(-1, c - 1, 1), (1, c - 1, 1)]);
    let top_row = p.z_row(c - 1);
    if p.max_z_degree() != Some(c - 1) || top_row != expected_top {
        let found = match p.max_z_degree() {
            Some(d) if d > c - 1 => format!("z-degree {d}"),
            _ => format!("top row {top_row}"),
        };
        return Err(TruncationError::TopDegreeMismatch {
            expected: c - 1,
            found,
        });
    }
    let top = (p.coeff(-1, c - 1), p.coeff(1, c - 1));
    Ok(TruncatedLambda {
        crossings,
        u: UTriple::new(p.coeff(-2, c - 2), p.coeff(0, c - 2), p.coeff(2, c - 2)),
        top,
        top_pair_present: top == (1, 1),
    })
}
