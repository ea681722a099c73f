//! Reduced rational functions with canonical form.
//!
//! A [`RatFunc`] is stored as a reduced fraction of integer polynomials: the
//! numerator and denominator share no factor, the denominator has positive
//! leading coefficient, and the integer contents of numerator and denominator
//! are coprime. Two values are equal iff their canonical forms are identical.
//!
//! Internally the denominator also carries its factor list (denominators in
//! this crate arise as products of linear factors), which keeps reduction
//! cheap: each factor is cancelled by an exact-division test, falling back to
//! a real gcd only for composite factors.

use super::gcd::poly_gcd;
use super::poly::Poly;
use super::vars::VarId;
use crate::error::{AlgebraError, Result};
use num::{BigInt, BigRational, One, Zero};
use std::fmt;
use std::hash::{Hash, Hasher};

/// Degree of a rational function in one variable, with `0` mapped to `-oo`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
    /// Primitive, positive-leading-coefficient factors of `den` (hint for
    /// reduction; their product equals `den / content(den)`).
    den_factors: Vec<(Poly, u32)>,
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}
impl Eq for RatFunc {}

impl Hash for RatFunc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Cheap structural hash: term counts and leading data.
        self.num.num_terms().hash(state);
        self.den.num_terms().hash(state);
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one(), den_factors: vec![] }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::build(p, vec![], BigRational::one(), false)
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(Poly::int(n))
    }

    pub fn from_rat(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var(v: VarId) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Build `num / (scalar * prod factors^mult)`, reducing to canonical form.
    pub fn new(num: Poly, den_factors: Vec<(Poly, u32)>, den_scalar: BigRational) -> Result<Self> {
        if den_scalar.is_zero() || den_factors.iter().any(|(f, _)| f.is_zero()) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::build(num, den_factors, den_scalar, true))
    }

    /// `num / den` for a general polynomial denominator.
    pub fn from_num_den(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::build(num, vec![(den, 1)], BigRational::one(), true))
    }

    /// Core constructor. When `reduce` is false the fraction is trusted to be
    /// reduced already (used by substitutions that are ring automorphisms).
    fn build(num: Poly, factors: Vec<(Poly, u32)>, den_scalar: BigRational, reduce: bool) -> Self {
        debug_assert!(!den_scalar.is_zero());
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut scalar = den_scalar;
        let mut num = num;
        // Normalize factors to primitive, positive leading coefficient.
        let mut work: Vec<Poly> = Vec::new();
        for (f, m) in factors {
            if let Some(c) = f.as_constant() {
                debug_assert!(!c.is_zero());
                for _ in 0..m {
                    scalar *= &c;
                }
                continue;
            }
            let c = f.content();
            let fp = f.primitive_part();
            for _ in 0..m {
                scalar *= &c;
                work.push(fp.clone());
            }
        }
        if reduce {
            let mut kept: Vec<Poly> = Vec::new();
            // Cancel cheap (linear) factors first.
            work.sort_by_key(|f| (f.total_degree().unwrap_or(0), f.num_terms()));
            for mut f in work {
                loop {
                    if f.is_constant() {
                        let c = f.as_constant().unwrap();
                        scalar *= &c;
                        break;
                    }
                    if f.total_degree() == Some(1) {
                        // Linear factors are irreducible: a division test decides.
                        match num.exact_div(&f) {
                            Some(q) => {
                                num = q;
                                f = Poly::one();
                            }
                            None => {
                                kept.push(f);
                                break;
                            }
                        }
                    } else {
                        let g = poly_gcd(&num, &f);
                        if g.is_constant() {
                            kept.push(f);
                            break;
                        }
                        num = num.exact_div(&g).expect("gcd divides num");
                        f = f.exact_div(&g).expect("gcd divides factor");
                        let c = f.content();
                        if !c.is_one() {
                            scalar *= &c;
                            f = f.primitive_part();
                        }
                    }
                }
            }
            work = kept;
        }
        // Canonical scaling: value = num / (scalar * prod work).
        // num' = num / scalar; write content(num') = sign * a/b reduced; then
        // num_final = sign*a*prim(num'), den_final = b*prod(work).
        let num_over_scalar = num.scale(&(BigRational::one() / &scalar));
        let cn = num_over_scalar.content();
        let prim = num_over_scalar.primitive_part();
        let a = cn.numer().clone();
        let b = cn.denom().clone(); // positive
        let num_final = prim.scale(&BigRational::from_integer(a));
        work.sort();
        let mut den_final = Poly::constant(BigRational::from_integer(b));
        let mut den_factors: Vec<(Poly, u32)> = Vec::new();
        for f in work {
            den_final = &den_final * &f;
            match den_factors.last_mut() {
                Some((g, m)) if *g == f => *m += 1,
                _ => den_factors.push((f, 1)),
            }
        }
        RatFunc { num: num_final, den: den_final, den_factors }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn den_factors(&self) -> &[(Poly, u32)] {
        &self.den_factors
    }

    fn den_scalar(&self) -> BigRational {
        self.den.content()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // lcm of factor multisets keeps numerators small.
        let (common, only_a, only_b) = split_factors(&self.den_factors, &other.den_factors);
        let mut na = self.num.clone();
        for (f, m) in &only_b {
            for _ in 0..*m {
                na = &na * f;
            }
        }
        let mut nb = other.num.clone();
        for (f, m) in &only_a {
            for _ in 0..*m {
                nb = &nb * f;
            }
        }
        let sa = self.den_scalar();
        let sb = other.den_scalar();
        let num = &na.scale(&sb) + &nb.scale(&sa);
        let mut factors = common;
        factors.extend(only_a);
        factors.extend(only_b);
        Self::build(num, factors, sa * sb, true)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            den_factors: self.den_factors.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let num = &self.num * &other.num;
        let mut factors = self.den_factors.clone();
        factors.extend(other.den_factors.iter().cloned());
        Self::build(num, factors, self.den_scalar() * other.den_scalar(), true)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        Self::build(
            self.num.scale(c),
            self.den_factors.clone(),
            self.den_scalar(),
            false,
        )
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let c = self.num.content();
        Ok(Self::build(
            self.den.clone(),
            vec![(self.num.primitive_part(), 1)],
            c,
            true,
        ))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let num = &self.num * &other.den;
        let mut factors = self.den_factors.clone();
        factors.push((other.num.primitive_part(), 1));
        Ok(Self::build(
            num,
            factors,
            self.den_scalar() * other.num.content(),
            true,
        ))
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let mut out = RatFunc::one();
        let base = if e < 0 { self.inv()? } else { self.clone() };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Simultaneous shift `v -> v + delta`; a ring automorphism, so the
    /// reduced shape is preserved and no gcd work is needed.
    pub fn shift_vars(&self, shifts: &[(VarId, BigRational)]) -> RatFunc {
        if self.is_zero() || shifts.iter().all(|(_, d)| d.is_zero()) {
            return self.clone();
        }
        let num = self.num.shift_vars(shifts);
        let factors = self
            .den_factors
            .iter()
            .map(|(f, m)| (f.shift_vars(shifts), *m))
            .collect();
        Self::build(num, factors, self.den_scalar(), false)
    }

    /// Rename variables through an injective map; preserves reducedness.
    pub fn map_vars(&self, f: &dyn Fn(VarId) -> VarId) -> RatFunc {
        let num = self.num.map_vars(f);
        let factors = self
            .den_factors
            .iter()
            .map(|(p, m)| (p.map_vars(f), *m))
            .collect();
        Self::build(num, factors, self.den_scalar(), false)
    }

    /// Substitute a rational function for a variable.
    pub fn substitute(&self, v: VarId, value: &RatFunc) -> Result<RatFunc> {
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        if !self.num.contains_var(v) && !self.den.contains_var(v) {
            return Ok(self.clone());
        }
        let num = subst_poly(&self.num, v, value);
        let mut den = RatFunc::from_rat(self.den_scalar());
        for (f, m) in &self.den_factors {
            let fs = subst_poly(f, v, value);
            if fs.is_zero() {
                return Err(AlgebraError::DenominatorVanishes);
            }
            for _ in 0..*m {
                den = den.mul(&fs);
            }
        }
        if den.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        num.div(&den)
    }

    /// Degree in `v`: `deg num - deg den`, or `-oo` for the zero function.
    pub fn degree_in(&self, v: VarId) -> Degree {
        match self.num.degree_in(v) {
            None => Degree::NegInf,
            Some(dn) => Degree::Finite(dn - self.den.degree_in(v).unwrap_or(0)),
        }
    }

    /// Limit as `v -> oo`; requires degree <= 0.
    pub fn limit_at_infinity(&self, v: VarId) -> Result<RatFunc> {
        match self.degree_in(v) {
            Degree::NegInf => Ok(RatFunc::zero()),
            Degree::Finite(d) if d > 0 => Err(AlgebraError::LimitDiverges),
            Degree::Finite(d) if d < 0 => Ok(RatFunc::zero()),
            Degree::Finite(_) => {
                let dn = self.num.degree_in(v).unwrap() as u32;
                let dd = self.den.degree_in(v).unwrap_or(0) as u32;
                let ln = self.num.coeff_of(v, dn);
                let ld = self.den.coeff_of(v, dd);
                RatFunc::from_num_den(ln, ld)
            }
        }
    }

    /// Laurent coefficients at `v = oo`: returns `(k, c_k)` with
    /// `self = sum_k c_k v^(-k)`, for all `k <= k_max`.
    pub fn laurent_at_infinity(&self, v: VarId, k_max: i64) -> Vec<(i64, RatFunc)> {
        if self.is_zero() {
            return vec![];
        }
        let dn = self.num.degree_in(v).unwrap();
        let dd = self.den.degree_in(v).unwrap_or(0);
        let d = dn - dd; // top power of v
        if -d > k_max {
            return vec![];
        }
        let nc = self.num.coeff_vec(v);
        let dc = self.den.coeff_vec(v);
        // A_i = coeff of v^(dn-i), B_i = coeff of v^(dd-i), as RatFuncs.
        let a = |i: i64| -> RatFunc {
            let k = dn - i;
            if k < 0 || k > dn {
                RatFunc::zero()
            } else {
                RatFunc::from_poly(nc[k as usize].clone())
            }
        };
        let b = |i: i64| -> RatFunc {
            let k = dd - i;
            if k < 0 || k > dd {
                RatFunc::zero()
            } else {
                RatFunc::from_poly(dc[k as usize].clone())
            }
        };
        let b0 = b(0);
        let n_coeffs = (k_max + d) as usize + 1;
        let mut c: Vec<RatFunc> = Vec::with_capacity(n_coeffs);
        for k in 0..n_coeffs as i64 {
            let mut acc = a(k);
            for i in 1..=k {
                acc = acc.sub(&b(i).mul(&c[(k - i) as usize]));
            }
            c.push(acc.div(&b0).expect("leading denominator coefficient is nonzero"));
        }
        c.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, val)| (k as i64 - d, val))
            .collect()
    }

    /// Evaluate the given variables at rational points.
    pub fn eval_vars(&self, values: &[(VarId, BigRational)]) -> Result<RatFunc> {
        let num = self.num.eval_vars(values);
        let mut factors = Vec::new();
        for (f, m) in &self.den_factors {
            let fv = f.eval_vars(values);
            if fv.is_zero() {
                return Err(AlgebraError::DenominatorVanishes);
            }
            factors.push((fv, *m));
        }
        Ok(Self::build(num, factors, self.den_scalar(), true))
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs.sort();
        vs.dedup();
        vs
    }
}

/// Substitute a RatFunc value into a polynomial.
fn subst_poly(p: &Poly, v: VarId, value: &RatFunc) -> RatFunc {
    if !p.contains_var(v) {
        return RatFunc::from_poly(p.clone());
    }
    let coeffs = p.coeff_vec(v);
    let mut out = RatFunc::zero();
    for c in coeffs.into_iter().rev() {
        out = out.mul(value).add(&RatFunc::from_poly(c));
    }
    out
}

/// Split factor multisets into (common, only-left, only-right).
#[allow(clippy::type_complexity)]
fn split_factors(
    a: &[(Poly, u32)],
    b: &[(Poly, u32)],
) -> (Vec<(Poly, u32)>, Vec<(Poly, u32)>, Vec<(Poly, u32)>) {
    let mut common = Vec::new();
    let mut only_a = Vec::new();
    let mut only_b: Vec<(Poly, u32)> = b.to_vec();
    for (f, ma) in a {
        if let Some(pos) = only_b.iter().position(|(g, _)| g == f) {
            let mb = only_b[pos].1;
            let c = (*ma).min(mb);
            common.push((f.clone(), c));
            if *ma > c {
                only_a.push((f.clone(), ma - c));
            }
            if mb > c {
                only_b[pos].1 = mb - c;
            } else {
                only_b.remove(pos);
            }
        } else {
            only_a.push((f.clone(), *ma));
        }
    }
    only_b.retain(|(_, m)| *m > 0);
    (common, only_a, only_b)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Product of factors with signed integer exponents; exact bookkeeping for
/// diagonal Gauss entries and `Z`-products, no gcd work at all.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRat {
    pub scalar: BigRational,
    pub factors: Vec<(Poly, i32)>,
}

impl FactoredRat {
    pub fn one() -> Self {
        FactoredRat { scalar: BigRational::one(), factors: vec![] }
    }

    pub fn scalar(c: BigRational) -> Self {
        FactoredRat { scalar: c, factors: vec![] }
    }

    pub fn linear(p: Poly) -> Self {
        FactoredRat { scalar: BigRational::one(), factors: vec![(p, 1)] }
    }

    pub fn push(&mut self, p: Poly, e: i32) {
        if e == 0 {
            return;
        }
        if let Some(c) = p.as_constant() {
            assert!(!c.is_zero(), "zero factor");
            for _ in 0..e.abs() {
                if e > 0 {
                    self.scalar *= &c;
                } else {
                    self.scalar /= &c;
                }
            }
            return;
        }
        if let Some(pos) = self.factors.iter().position(|(q, _)| *q == p) {
            self.factors[pos].1 += e;
            if self.factors[pos].1 == 0 {
                self.factors.remove(pos);
            }
        } else {
            self.factors.push((p, e));
        }
    }

    pub fn mul(&self, other: &FactoredRat) -> FactoredRat {
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (p, e) in &other.factors {
            out.push(p.clone(), *e);
        }
        out
    }

    pub fn inv(&self) -> FactoredRat {
        FactoredRat {
            scalar: BigRational::one() / &self.scalar,
            factors: self.factors.iter().map(|(p, e)| (p.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &FactoredRat) -> FactoredRat {
        self.mul(&other.inv())
    }

    pub fn shift_vars(&self, shifts: &[(VarId, BigRational)]) -> FactoredRat {
        FactoredRat {
            scalar: self.scalar.clone(),
            factors: self
                .factors
                .iter()
                .map(|(p, e)| (p.shift_vars(shifts), *e))
                .collect(),
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut num = Poly::constant(self.scalar.clone());
        let mut den: Vec<(Poly, u32)> = Vec::new();
        for (p, e) in &self.factors {
            if *e > 0 {
                for _ in 0..*e {
                    num = &num * p;
                }
            } else {
                den.push((p.clone(), (-e) as u32));
            }
        }
        RatFunc::new(num, den, BigRational::one()).expect("nonzero factors")
    }

    /// Signed degree in `v` summed over factors.
    pub fn degree_in(&self, v: VarId) -> i64 {
        self.factors
            .iter()
            .map(|(p, e)| p.degree_in(v).unwrap_or(0) * (*e as i64))
            .sum()
    }
}

pub fn big_rational_to_string(c: &BigRational) -> String {
    if c.denom() == &BigInt::one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{qint, qrat};

    fn z() -> RatFunc {
        RatFunc::var(VarId::Z)
    }
    fn p() -> RatFunc {
        RatFunc::var(VarId::p(1, 1))
    }

    #[test]
    fn telescoping_sum() {
        // (z-p)/z + p/z = 1
        let zp = z().sub(&p());
        let f = zp.div(&z()).unwrap().add(&p().div(&z()).unwrap());
        assert_eq!(f, RatFunc::one());
    }

    #[test]
    fn gcd_cancellation() {
        // (z^2-1)/(z-1) = z+1
        let num = z().mul(&z()).sub(&RatFunc::one());
        let den = z().sub(&RatFunc::one());
        let f = num.div(&den).unwrap();
        assert_eq!(f, z().add(&RatFunc::one()));
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(z().div(&RatFunc::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn substitute_shift() {
        // 1/(z-p) at z -> z+1 gives 1/(z+1-p)
        let f = RatFunc::one().div(&z().sub(&p())).unwrap();
        let zp1 = z().add(&RatFunc::one());
        let g = f.substitute(VarId::Z, &zp1).unwrap();
        let expect = RatFunc::one()
            .div(&z().add(&RatFunc::one()).sub(&p()))
            .unwrap();
        assert_eq!(g, expect);
        // the automorphism fast path agrees
        assert_eq!(f.shift_vars(&[(VarId::Z, qint(1))]), expect);
    }

    #[test]
    fn substitute_vanishing_denominator() {
        // 1/(z-p) with z -> p
        let f = RatFunc::one().div(&z().sub(&p())).unwrap();
        assert_eq!(
            f.substitute(VarId::Z, &p()),
            Err(AlgebraError::DenominatorVanishes)
        );
    }

    #[test]
    fn degrees() {
        // z^2/(z-1) -> 1
        let f = z().mul(&z()).div(&z().sub(&RatFunc::one())).unwrap();
        assert_eq!(f.degree_in(VarId::Z), Degree::Finite(1));
        let g = RatFunc::one().div(&z().sub(&p())).unwrap();
        assert_eq!(g.degree_in(VarId::Z), Degree::Finite(-1));
        assert_eq!(p().degree_in(VarId::Z), Degree::Finite(0));
        assert_eq!(RatFunc::zero().degree_in(VarId::Z), Degree::NegInf);
    }

    #[test]
    fn limits_at_infinity() {
        let x = VarId::param("x1");
        // (x*z + 1)/x -> z
        let f = RatFunc::var(x)
            .mul(&z())
            .add(&RatFunc::one())
            .div(&RatFunc::var(x))
            .unwrap();
        assert_eq!(f.limit_at_infinity(x).unwrap(), z());
        // 1/(x-p) -> 0
        let g = RatFunc::one().div(&RatFunc::var(x).sub(&p())).unwrap();
        assert_eq!(g.limit_at_infinity(x).unwrap(), RatFunc::zero());
        // x^2/(x+1) diverges
        let h = RatFunc::var(x)
            .mul(&RatFunc::var(x))
            .div(&RatFunc::var(x).add(&RatFunc::one()))
            .unwrap();
        assert_eq!(h.limit_at_infinity(x), Err(AlgebraError::LimitDiverges));
    }

    #[test]
    fn laurent_expansion_of_simple_pole() {
        // 1/(z-p) = sum_k p^(k-1) z^(-k); mode 2 is p.
        let f = RatFunc::one().div(&z().sub(&p())).unwrap();
        let coeffs = f.laurent_at_infinity(VarId::Z, 3);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], (1, RatFunc::one()));
        assert_eq!(coeffs[1], (2, p()));
        assert_eq!(coeffs[2], (3, p().mul(&p())));
    }

    #[test]
    fn canonical_scaling() {
        // (2/3) / (4 z) reduces to 1 / (6 z)
        let f = RatFunc::from_rat(qrat(2, 3))
            .div(&z().scale(&qint(4)))
            .unwrap();
        assert_eq!(f.num(), &Poly::one());
        assert_eq!(f.den(), &Poly::var(VarId::Z).scale(&qint(6)));
    }

    #[test]
    fn factored_rat_roundtrip() {
        let mut f = FactoredRat::one();
        f.push(Poly::var(VarId::Z) - Poly::var(VarId::p(1, 1)), 2);
        f.push(Poly::var(VarId::Z) + Poly::int(1), -1);
        f.scalar = qrat(3, 2);
        let rf = f.to_ratfunc();
        let inv = f.inv().to_ratfunc();
        assert_eq!(rf.mul(&inv), RatFunc::one());
        assert_eq!(f.degree_in(VarId::Z), 1);
    }
}
