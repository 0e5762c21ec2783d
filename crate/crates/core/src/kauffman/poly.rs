use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Exact two-variable Laurent polynomial in `a` and `z` with integer
/// coefficients.
///
/// Terms are keyed by `(z_exp, a_exp)` so iteration follows the canonical
/// ordering. Zero coefficients are never stored. Coefficient arithmetic is
/// checked and panics on `i64` overflow.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("Laurent polynomial coefficient overflow")
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff * a^a_exp * z^z_exp`.
    pub fn monomial(coeff: i64, a_exp: i32, z_exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, a_exp, z_exp);
        p
    }

    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(a_exp, z_exp, coeff)` triples, combining
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (a, z, c) in terms {
            p.add_term(c, a, z);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, a_exp: i32, z_exp: i32) {
        if coeff == 0 {
            return;
        }
        let key = (z_exp, a_exp);
        let entry = self.terms.entry(key).or_insert(0);
        *entry = checked(entry.checked_add(coeff));
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a_exp: i32, z_exp: i32) -> i64 {
        self.terms.get(&(z_exp, a_exp)).copied().unwrap_or(0)
    }

    /// Terms as `(a_exp, z_exp, coeff)`, ascending by `(z_exp, a_exp)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(z, a), &c)| (a, z, c))
    }

    pub fn max_z_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().map(|&(z, _)| z)
    }

    pub fn min_z_degree(&self) -> Option<i32> {
        self.terms.keys().next().map(|&(z, _)| z)
    }

    /// The terms with z-exponent `z_exp`, as a polynomial.
    pub fn z_row(&self, z_exp: i32) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .range((z_exp, i32::MIN)..=(z_exp, i32::MAX))
                .map(|(&k, &c)| (k, c))
                .collect(),
        }
    }

    /// Terms with z-exponent at least `z_exp`.
    pub fn z_rows_from(&self, z_exp: i32) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .range((z_exp, i32::MIN)..)
                .map(|(&k, &c)| (k, c))
                .collect(),
        }
    }

    /// Multiplies by `a^a_delta z^z_delta`.
    pub fn shift(&self, a_delta: i32, z_delta: i32) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(z, a), &c)| ((z + z_delta, a + a_delta), c))
                .collect(),
        }
    }

    /// Substitutes `a -> a^-1`.
    pub fn mirror(&self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(z, a), &c)| ((z, -a), c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly2 {
        let mut result = LaurentPoly2::one();
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    fn accumulate(&mut self, other: &LaurentPoly2, sign: i64) {
        for (&(z, a), &c) in &other.terms {
            self.add_term(checked(c.checked_mul(sign)), a, z);
        }
    }
}

pub fn poly_add(p: &LaurentPoly2, q: &LaurentPoly2) -> LaurentPoly2 {
    p + q
}

pub fn poly_mul(p: &LaurentPoly2, q: &LaurentPoly2) -> LaurentPoly2 {
    p * q
}

pub fn poly_shift(p: &LaurentPoly2, a_delta: i32, z_delta: i32) -> LaurentPoly2 {
    p.shift(a_delta, z_delta)
}

pub fn mirror_poly(p: &LaurentPoly2) -> LaurentPoly2 {
    p.mirror()
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        self.accumulate(rhs, 1);
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        self.accumulate(rhs, -1);
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2::zero() - self.clone()
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(z1, a1), &c1) in &self.terms {
            for (&(z2, a2), &c2) in &rhs.terms {
                out.add_term(checked(c1.checked_mul(c2)), a1 + a2, z1 + z2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn write_monomial(
    f: &mut impl fmt::Write,
    coeff: i64,
    a: i32,
    z: i32,
    leading: bool,
) -> fmt::Result {
    let sign = if coeff < 0 {
        "-"
    } else if leading {
        ""
    } else {
        "+"
    };
    let magnitude = coeff.unsigned_abs();
    let mut body = String::new();
    if magnitude != 1 || (a == 0 && z == 0) {
        body.push_str(&magnitude.to_string());
    }
    for (name, e) in [("a", a), ("z", z)] {
        match e {
            0 => {}
            1 => body.push_str(name),
            e => body.push_str(&format!("{name}^{e}")),
        }
    }
    if leading {
        write!(f, "{sign}{body}")
    } else {
        write!(f, " {sign} {body}")
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Flat term list, ascending by `(z_exp, a_exp)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, z, c)) in self.terms().enumerate() {
            write_monomial(f, c, a, z, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl LaurentPoly2 {
    /// Table layout: one row per a-exponent (highest first), one column per
    /// z-exponent (lowest first). For alternating diagrams the occupied cells
    /// form the familiar staggered pattern.
    pub fn render_staggered(&self) -> String {
        if self.is_zero() {
            return "0\n".to_string();
        }
        let mut zs: Vec<i32> = self.terms.keys().map(|&(z, _)| z).collect();
        zs.dedup();
        let mut rows: Vec<i32> = self.terms.keys().map(|&(_, a)| a).collect();
        rows.sort_unstable_by(|x, y| y.cmp(x));
        rows.dedup();

        let mut cells = vec![vec![String::new(); zs.len()]; rows.len()];
        for (ri, &a) in rows.iter().enumerate() {
            for (ci, &z) in zs.iter().enumerate() {
                let c = self.coeff(a, z);
                if c != 0 {
                    let mut s = String::new();
                    write_monomial(&mut s, c, a, z, true).expect("writing to a String");
                    cells[ri][ci] = s;
                }
            }
        }
        let widths: Vec<usize> = (0..zs.len())
            .map(|ci| cells.iter().map(|r| r[ci].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl Serialize for LaurentPoly2 {
    /// Sorted `[a_exp, z_exp, coeff]` triples.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(i32, i32, i64)> = self.terms().collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let triples = Vec::<(i32, i32, i64)>::deserialize(deserializer)?;
        Ok(LaurentPoly2::from_terms(triples))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hopf() -> LaurentPoly2 {
        LaurentPoly2::from_terms([(1, -1, -1), (-1, -1, -1), (0, 0, 1), (1, 1, 1), (-1, 1, 1)])
    }

    #[test]
    fn unit_and_zero() {
        let p = LaurentPoly2::from_terms([(1, 1, 1), (-1, 1, 1)]);
        assert_eq!(&p * &LaurentPoly2::one(), p);
        assert_eq!(&p + &LaurentPoly2::zero(), p);
        assert!((&p - &p).is_zero());
        assert_eq!((&p * &LaurentPoly2::zero()).len(), 0);
    }

    #[test]
    fn shift_by_z_power() {
        let p = hopf();
        let z3 = LaurentPoly2::z().pow(3);
        assert_eq!(poly_shift(&p, 0, 3), &p * &z3);
        assert_eq!(p.shift(2, 0), &p * &LaurentPoly2::a().pow(2));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = LaurentPoly2::monomial(3, 1, 2);
        p.add_term(-3, 1, 2);
        assert!(p.is_zero());
        assert_eq!(LaurentPoly2::monomial(0, 4, 4), LaurentPoly2::zero());
    }

    #[test]
    fn truncated_product_middle_term() {
        // Two generic truncations with c1 = 3, c2 = 4.
        let t = |u: [i64; 3], c: i32| {
            LaurentPoly2::from_terms([
                (-2, c - 2, u[0]),
                (0, c - 2, u[1]),
                (2, c - 2, u[2]),
                (-1, c - 1, 1),
                (1, c - 1, 1),
            ])
        };
        let prod = poly_mul(&t([0, 1, 1], 3), &t([1, 2, 1], 4));
        assert_eq!(prod.max_z_degree(), Some(5));
        assert_eq!(prod.coeff(0, 5), 2);
        assert_eq!(prod.coeff(2, 5), 1);
        assert_eq!(prod.coeff(-2, 5), 1);
        // (u'+ + u'0 + u''+ + u''0) a z^(c1+c2-3)
        assert_eq!(prod.coeff(1, 4), 1 + 1 + 1 + 2);
        assert_eq!(prod.coeff(3, 4), 1 + 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
        assert_eq!(hopf().to_string(), "-a^-1z^-1 - az^-1 + 1 + a^-1z + az");
        assert_eq!(LaurentPoly2::monomial(-2, 2, 0).to_string(), "-2a^2");
        assert_eq!(
            hopf().render_staggered(),
            "-az^-1        az\n           1\n-a^-1z^-1     a^-1z\n"
        );
    }

    #[test]
    fn json_layout() {
        let json = serde_json::to_string(&hopf()).unwrap();
        assert_eq!(json, "[[-1,-1,-1],[1,-1,-1],[0,0,1],[-1,1,1],[1,1,1]]");
        let back: LaurentPoly2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, hopf());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let big = LaurentPoly2::monomial(i64::MAX, 0, 0);
        let _ = &big + &LaurentPoly2::one();
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec((-4i32..5, -4i32..5, -20i64..20), 0..8)
            .prop_map(LaurentPoly2::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!(p.terms().all(|(_, _, c)| c != 0));
        }

        #[test]
        fn mirror_is_a_ring_involution(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(mirror_poly(&mirror_poly(&p)), p.clone());
            prop_assert_eq!(mirror_poly(&(&p * &q)), &mirror_poly(&p) * &mirror_poly(&q));
        }

        #[test]
        fn serde_roundtrip(p in arb_poly()) {
            let json = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<LaurentPoly2>(&json).unwrap(), p);
        }
    }
}
