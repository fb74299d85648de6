//! Sparse exact-integer polynomials in one variable (`z`, or `w` for the
//! skew characteristic polynomial) and in two variables `(w, z)`.
//!
//! Coefficients are `i128` and every operation is checked: arithmetic that
//! would wrap reports [`Error::Overflow`] instead. Zero coefficients are
//! never stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::{Error, Result};

/// Univariate polynomial, exponent -> nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    terms: BTreeMap<u32, i128>,
}

/// Bivariate polynomial in `(w, z)`, (w-exponent, z-exponent) -> nonzero
/// coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), i128>,
}

fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `c * var^exp`; the zero polynomial if `c == 0`.
    pub fn monomial(exp: u32, c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and for plain integers.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn coeff(&self, exp: u32) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// In-place `self += c * var^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: u32, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = checked_add(*entry, c)?;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.negate()?)
    }

    pub fn negate(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> Result<Self> {
        let mut out = Self::zero();
        for (e, k) in self.terms() {
            out.add_term(e, checked_mul(k, c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                out.add_term(e, checked_mul(c1, c2)?)?;
            }
        }
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the value at `var = 1`.
    pub fn coefficient_sum(&self) -> Result<i128> {
        let mut sum = 0i128;
        for (_, c) in self.terms() {
            sum = checked_add(sum, c)?;
        }
        Ok(sum)
    }

    /// Canonical text form, ascending exponents: `2 + 10*z^2 + 4*z^4`.
    pub fn to_text(&self, var: &str) -> String {
        render_terms(self.terms().map(|(e, c)| (uni_monomial(var, e), c)))
    }

    /// JSON form: `{"var":"z","terms":[[exp,"coeff"],...]}`, ascending.
    pub fn to_json(&self, var: &str) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            var: &'a str,
            terms: Vec<(u32, String)>,
        }
        let repr = Repr {
            var,
            terms: self.terms().map(|(e, c)| (e, c.to_string())).collect(),
        };
        serde_json::to_string(&repr).expect("polynomial serialization cannot fail")
    }
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w_exp: u32, z_exp: u32, c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((w_exp, z_exp), c);
        }
        Self { terms }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w_exp: u32, z_exp: u32) -> i128 {
        self.terms.get(&(w_exp, z_exp)).copied().unwrap_or(0)
    }

    /// Terms in ascending (w-exponent, z-exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i128)> + '_ {
        self.terms.iter().map(|(&(w, z), &c)| (w, z, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w_exp: u32, z_exp: u32, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry((w_exp, z_exp)).or_insert(0);
        *entry = checked_add(*entry, c)?;
        if *entry == 0 {
            self.terms.remove(&(w_exp, z_exp));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (w, z, c) in rhs.terms() {
            out.add_term(w, z, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.negate()?)
    }

    pub fn negate(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (w, z, c) in self.terms() {
            out.add_term(w, z, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> Result<Self> {
        let mut out = Self::zero();
        for (w, z, k) in self.terms() {
            out.add_term(w, z, checked_mul(k, c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (w1, z1, c1) in self.terms() {
            for (w2, z2, c2) in rhs.terms() {
                let w = w1.checked_add(w2).ok_or(Error::Overflow)?;
                let z = z1.checked_add(z2).ok_or(Error::Overflow)?;
                out.add_term(w, z, checked_mul(c1, c2)?)?;
            }
        }
        Ok(out)
    }

    /// Substitute `w = 1`: collapse w-exponents, summing per z-exponent.
    pub fn eval_w_at_one(&self) -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        for (_, z, c) in self.terms() {
            out.add_term(z, c)?;
        }
        Ok(out)
    }

    /// The coefficient of `z^z_exp` as a polynomial in `w`.
    pub fn z_slice(&self, z_exp: u32) -> UniPoly {
        let mut out = UniPoly::zero();
        for (w, z, c) in self.terms() {
            if z == z_exp {
                // coefficients come from distinct (w, z) keys, cannot overflow
                out.add_term(w, c).expect("distinct keys");
            }
        }
        out
    }

    pub fn coefficient_sum(&self) -> Result<i128> {
        let mut sum = 0i128;
        for (_, _, c) in self.terms() {
            sum = checked_add(sum, c)?;
        }
        Ok(sum)
    }

    /// Canonical text form sorted by (w-exp, z-exp): `z^2 + 2*w + w^2*z^2`.
    pub fn to_text(&self, w_var: &str, z_var: &str) -> String {
        render_terms(
            self.terms()
                .map(|(w, z, c)| (bi_monomial(w_var, w, z_var, z), c)),
        )
    }

    /// JSON form: `{"vars":["w","z"],"terms":[[wexp,zexp,"coeff"],...]}`.
    pub fn to_json(&self, w_var: &str, z_var: &str) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            vars: [&'a str; 2],
            terms: Vec<(u32, u32, String)>,
        }
        let repr = Repr {
            vars: [w_var, z_var],
            terms: self
                .terms()
                .map(|(w, z, c)| (w, z, c.to_string()))
                .collect(),
        };
        serde_json::to_string(&repr).expect("polynomial serialization cannot fail")
    }
}

/// Monomial part without the coefficient: "" for exponent 0, `z`, `z^2`, ...
fn uni_monomial(var: &str, exp: u32) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

fn bi_monomial(w_var: &str, w_exp: u32, z_var: &str, z_exp: u32) -> String {
    let w = uni_monomial(w_var, w_exp);
    let z = uni_monomial(z_var, z_exp);
    match (w.is_empty(), z.is_empty()) {
        (true, true) => String::new(),
        (false, true) => w,
        (true, false) => z,
        (false, false) => format!("{w}*{z}"),
    }
}

/// Render `(monomial, coefficient)` pairs as `a + b*z^2 - z^4` style text.
fn render_terms(terms: impl Iterator<Item = (String, i128)>) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let first = out.is_empty();
        if first {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.unsigned_abs();
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(terms: &[(u32, i128)]) -> UniPoly {
        let mut p = UniPoly::zero();
        for &(e, c) in terms {
            p.add_term(e, c).unwrap();
        }
        p
    }

    #[test]
    fn add_merges_and_normalizes() {
        let p = uni(&[(2, 2)]);
        let q = uni(&[(0, 3), (2, 1)]);
        assert_eq!(p.add(&q).unwrap(), uni(&[(0, 3), (2, 3)]));
    }

    #[test]
    fn mul_by_constant_poly() {
        let p = uni(&[(0, 2), (2, 2)]);
        let two = UniPoly::constant(2);
        assert_eq!(p.mul(&two).unwrap(), uni(&[(0, 4), (2, 4)]));
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let p = uni(&[(2, 1)]);
        let sum = p.add(&p.negate().unwrap()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn eval_w_at_one_collapses() {
        // z^2 + 2w + w^2 z^2 -> 2 + 2 z^2
        let mut p = BiPoly::zero();
        p.add_term(0, 2, 1).unwrap();
        p.add_term(1, 0, 2).unwrap();
        p.add_term(2, 2, 1).unwrap();
        assert_eq!(p.eval_w_at_one().unwrap(), uni(&[(0, 2), (2, 2)]));

        let no_w = BiPoly::monomial(0, 4, 5);
        assert_eq!(no_w.eval_w_at_one().unwrap(), uni(&[(4, 5)]));
        assert!(BiPoly::zero().eval_w_at_one().unwrap().is_zero());
    }

    #[test]
    fn coefficient_sum_examples() {
        assert_eq!(uni(&[(0, 2), (2, 10), (4, 4)]).coefficient_sum().unwrap(), 16);
        assert_eq!(UniPoly::zero().coefficient_sum().unwrap(), 0);
    }

    #[test]
    fn ring_axioms_on_small_random_polys() {
        // deterministic pseudo-random triples
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        let rand_poly = |next: &mut dyn FnMut() -> u64| {
            let mut p = UniPoly::zero();
            for _ in 0..(next() % 5) {
                let e = (next() % 6) as u32;
                let c = (next() % 21) as i128 - 10;
                p.add_term(e, c).unwrap();
            }
            p
        };
        for _ in 0..200 {
            let a = rand_poly(&mut next);
            let b = rand_poly(&mut next);
            let c = rand_poly(&mut next);
            let ab_c = a.add(&b).unwrap().add(&c).unwrap();
            let a_bc = a.add(&b.add(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let ab_then_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_then_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(ab_then_c, a_then_bc);
            let distributed = a.mul(&b.add(&c).unwrap()).unwrap();
            let expanded = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            assert_eq!(distributed, expanded);
        }
    }

    #[test]
    fn overflow_is_detected() {
        let big = UniPoly::constant(i128::MAX);
        assert_eq!(big.add(&UniPoly::constant(1)), Err(Error::Overflow));
        assert_eq!(big.mul(&UniPoly::constant(2)), Err(Error::Overflow));
        assert_eq!(big.scale(2), Err(Error::Overflow));
        assert_eq!(UniPoly::constant(i128::MIN).negate(), Err(Error::Overflow));
        let mut sum_probe = uni(&[(0, i128::MAX), (1, 1)]);
        sum_probe.add_term(1, i128::MAX).unwrap_err();
        let big_bi = BiPoly::monomial(0, 0, i128::MAX);
        assert_eq!(big_bi.scale(3), Err(Error::Overflow));
    }

    #[test]
    fn text_rendering() {
        assert_eq!(uni(&[(0, 2), (2, 10), (4, 4)]).to_text("z"), "2 + 10*z^2 + 4*z^4");
        assert_eq!(uni(&[(0, -2), (2, 2)]).to_text("z"), "-2 + 2*z^2");
        assert_eq!(uni(&[(1, -2), (2, -1)]).to_text("w"), "-2*w - w^2");
        assert_eq!(uni(&[(1, 1)]).to_text("z"), "z");
        assert_eq!(UniPoly::zero().to_text("z"), "0");

        let mut p = BiPoly::zero();
        p.add_term(0, 2, 1).unwrap();
        p.add_term(1, 0, 2).unwrap();
        p.add_term(2, 2, 1).unwrap();
        assert_eq!(p.to_text("w", "z"), "z^2 + 2*w + w^2*z^2");
        assert_eq!(BiPoly::zero().to_text("w", "z"), "0");
    }

    #[test]
    fn json_rendering() {
        assert_eq!(
            uni(&[(0, 2), (2, 10), (4, 4)]).to_json("z"),
            r#"{"var":"z","terms":[[0,"2"],[2,"10"],[4,"4"]]}"#
        );
        let mut p = BiPoly::zero();
        p.add_term(1, 0, 2).unwrap();
        p.add_term(0, 2, 1).unwrap();
        assert_eq!(
            p.to_json("w", "z"),
            r#"{"vars":["w","z"],"terms":[[0,2,"1"],[1,0,"2"]]}"#
        );
    }

    #[test]
    fn z_slice_extracts_w_poly() {
        let mut p = BiPoly::zero();
        p.add_term(2, 0, 1).unwrap();
        p.add_term(1, 0, 2).unwrap();
        p.add_term(0, 2, 1).unwrap();
        assert_eq!(p.z_slice(0), uni(&[(1, 2), (2, 1)]));
        assert_eq!(p.z_slice(2), uni(&[(0, 1)]));
        assert!(p.z_slice(4).is_zero());
    }
}
