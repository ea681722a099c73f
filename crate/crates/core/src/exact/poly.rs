//! Sparse multivariate polynomials over exact big rationals.

use super::vars::{Monomial, VarId};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial: canonical term order, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Poly {
    pub(crate) terms: BTreeMap<Monomial, BigRational>,
}

pub fn qint(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qrat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(qint(n))
    }

    pub fn var(v: VarId) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigRational::one());
        Poly { terms }
    }

    /// `v + c`
    pub fn var_plus(v: VarId, c: BigRational) -> Self {
        Poly::var(v) + Poly::constant(c)
    }

    /// `v - u + c`
    pub fn var_diff_plus(v: VarId, u: VarId, c: BigRational) -> Self {
        Poly::var(v) - Poly::var(u) + Poly::constant(c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = Poly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading term in the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: VarId) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.terms.keys().map(|m| m.degree_of(v) as i64).max().unwrap())
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.degree_of(v) > 0)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: VarId, k: u32) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.degree_of(v) == k)
                .map(|(m, c)| (m.without(v), c.clone())),
        )
    }

    /// View as univariate in `v`: dense coefficient vector `[c_0, ..., c_d]`.
    pub fn coeff_vec(&self, v: VarId) -> Vec<Poly> {
        let d = match self.degree_in(v) {
            None => return vec![],
            Some(d) => d as usize,
        };
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let k = m.degree_of(v) as usize;
            out[k].add_term(m.without(v), c.clone());
        }
        out
    }

    pub fn from_coeff_vec(v: VarId, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.mul(&Monomial::var_pow(v, k as u32)), a.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Simultaneous substitution `v -> v + delta` for several variables.
    pub fn shift_vars(&self, shifts: &[(VarId, BigRational)]) -> Poly {
        let shifts: Vec<&(VarId, BigRational)> =
            shifts.iter().filter(|(_, d)| !d.is_zero()).collect();
        if shifts.is_empty() {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            // Split the monomial into shifted and unshifted parts.
            let mut fixed = m.clone();
            let mut expanded = Poly::constant(c.clone());
            for (v, d) in &shifts {
                let e = m.degree_of(*v);
                if e > 0 {
                    fixed = fixed.without(*v);
                    expanded = &expanded * &Poly::var_plus(*v, d.clone()).pow(e);
                }
            }
            for (m2, c2) in &expanded.terms {
                out.add_term(m2.mul(&fixed), c2.clone());
            }
        }
        out
    }

    /// Substitute a polynomial for a variable.
    pub fn substitute(&self, v: VarId, value: &Poly) -> Poly {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.coeff_vec(v);
        // Horner evaluation.
        let mut out = Poly::zero();
        for c in coeffs.into_iter().rev() {
            out = &(&out * value) + &c;
        }
        out
    }

    /// Exact division; `None` when `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            quo.add_term(qm.clone(), qc.clone());
            let sub = d.mul_monomial(&qm, &qc);
            rem = &rem - &sub;
        }
        Some(quo)
    }

    /// Integer content (gcd of numerators over lcm of denominators), with the
    /// sign of the leading coefficient. Zero polynomial has content 0.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        content
    }

    /// `self / content(self)`: integer coefficients, positive leading coeff.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        self.scale(&(BigRational::one() / c))
    }

    /// Evaluate at rational points for the given variables.
    pub fn eval_vars(&self, values: &[(VarId, BigRational)]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for (v, val) in values {
                let e = m.degree_of(*v);
                if e > 0 {
                    rest = rest.without(*v);
                    for _ in 0..e {
                        coeff *= val;
                    }
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Map each `p`-variable through `f`, leaving other kinds alone.
    pub fn map_vars(&self, f: &dyn Fn(VarId) -> VarId) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let pairs: Vec<(VarId, u32)> = m.0.iter().map(|(v, e)| (f(*v), *e)).collect();
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending canonical term order.
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Poly {
        Poly::var(VarId::Z)
    }
    fn p11() -> Poly {
        Poly::var(VarId::p(1, 1))
    }

    #[test]
    fn arithmetic_basics() {
        let f = &z() * &z() - Poly::one(); // z^2 - 1
        let g = z() - Poly::one();
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, z() + Poly::one());
        assert_eq!(f.exact_div(&(z() + Poly::int(2))), None);
    }

    #[test]
    fn substitution_expands() {
        // z^2 at z -> p + w gives p^2 + 2pw + w^2
        let f = z().pow(2);
        let val = p11() + Poly::var(VarId::W);
        let sub = f.substitute(VarId::Z, &val);
        let expect = &val * &val;
        assert_eq!(sub, expect);
    }

    #[test]
    fn shift_vars_is_substitution() {
        let f = &z().pow(3) * &p11() + p11().pow(2);
        let shifted = f.shift_vars(&[(VarId::p(1, 1), qint(-2))]);
        let by_sub = f.substitute(VarId::p(1, 1), &Poly::var_plus(VarId::p(1, 1), qint(-2)));
        assert_eq!(shifted, by_sub);
    }

    #[test]
    fn content_and_primitive() {
        let f = (z() + p11()).scale(&qrat(4, 6)); // 2/3 * (z + p)
        assert_eq!(f.content(), qrat(2, 3));
        assert_eq!(f.primitive_part(), z() + p11());
        let g = (z() + p11()).scale(&qint(-2));
        assert_eq!(g.content(), qint(-2));
        assert_eq!(g.primitive_part(), z() + p11());
    }

    #[test]
    fn display_is_descending() {
        let f = &(z().pow(2)) + &(p11() - Poly::int(3));
        assert_eq!(format!("{f}"), "z^2 + p[1,1] - 3");
    }
}
