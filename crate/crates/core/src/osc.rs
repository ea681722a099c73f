//! The localized oscillator algebra in normal-ordered form.
//!
//! Elements are finite sums `sum_m c_m(z, p, points) * E^m` where `m` is an
//! integer monomial in the shift generators `e^{q_{i,k}}` and the rational
//! coefficient sits on the left. Multiplication pushes shift monomials right
//! past coefficients with the substitution `p_{i,k} -> p_{i,k} - n_{i,k}*sd_i`
//! (so `e^{-q_{i,k}}` acts on functions of `p` as the shift
//! `p_{i,k} -> p_{i,k} + sd_i`).

use crate::error::{AlgebraError, Result};
use crate::exact::{qint, Poly, RatFunc, VarId};
use num::{BigRational, One, Zero};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;

/// Index of one oscillator pair: tensor slot, Dynkin node, copy.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OscIndex {
    pub slot: u8,
    pub node: u8,
    pub copy: u16,
}

impl OscIndex {
    pub fn new(node: u8, copy: u16) -> Self {
        OscIndex { slot: 0, node, copy }
    }

    pub fn p_var(&self) -> VarId {
        VarId::P { slot: self.slot, node: self.node, copy: self.copy }
    }
}

/// Squared root lengths `sd_i = (alpha_i, alpha_i)/2` per Dynkin node.
#[derive(Clone, Debug, PartialEq)]
pub struct RootLengths {
    sd: Vec<BigRational>,
}

impl RootLengths {
    pub fn new(sd: Vec<BigRational>) -> Self {
        RootLengths { sd }
    }

    /// All nodes of length one (simply-laced).
    pub fn uniform(rank: usize) -> Self {
        RootLengths { sd: vec![BigRational::one(); rank] }
    }

    pub fn sd(&self, node: u8) -> &BigRational {
        &self.sd[(node - 1) as usize]
    }

    pub fn rank(&self) -> usize {
        self.sd.len()
    }
}

/// Integer monomial in the `e^{q_{i,k}}`: the empty monomial is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ShiftMonomial(SmallVec<[(OscIndex, i32); 4]>);

impl ShiftMonomial {
    pub fn one() -> Self {
        ShiftMonomial(SmallVec::new())
    }

    pub fn single(idx: OscIndex, n: i32) -> Self {
        if n == 0 {
            ShiftMonomial::one()
        } else {
            ShiftMonomial(smallvec::smallvec![(idx, n)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(OscIndex, i32)>) -> Self {
        pairs.retain(|(_, n)| *n != 0);
        pairs.sort_by_key(|(i, _)| *i);
        ShiftMonomial(pairs.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(OscIndex, i32)] {
        &self.0
    }

    pub fn mul(&self, other: &ShiftMonomial) -> ShiftMonomial {
        let mut map: BTreeMap<OscIndex, i32> = self.0.iter().copied().collect();
        for (i, n) in &other.0 {
            let e = map.entry(*i).or_insert(0);
            *e += n;
            if *e == 0 {
                map.remove(i);
            }
        }
        ShiftMonomial(map.into_iter().collect())
    }

    pub fn inv(&self) -> ShiftMonomial {
        ShiftMonomial(self.0.iter().map(|(i, n)| (*i, -n)).collect())
    }

    /// Substitution applied when this monomial passes a coefficient from the
    /// left: `p_{i,k} -> p_{i,k} - n_{i,k} * sd_i`.
    fn passing_shifts(&self, lens: &RootLengths) -> Vec<(VarId, BigRational)> {
        self.0
            .iter()
            .map(|(idx, n)| (idx.p_var(), -lens.sd(idx.node) * qint(*n as i64)))
            .collect()
    }

    fn relabel_slot(&self, slot: u8) -> ShiftMonomial {
        ShiftMonomial(
            self.0
                .iter()
                .map(|(i, n)| (OscIndex { slot, node: i.node, copy: i.copy }, *n))
                .collect(),
        )
    }
}

impl fmt::Display for ShiftMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[")?;
        let mut first = true;
        for (i, n) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if i.slot == 0 {
                write!(f, "({},{})", i.node, i.copy)?;
            } else {
                write!(f, "({},{}|{})", i.node, i.copy, i.slot)?;
            }
            if *n != 1 {
                write!(f, "^{n}")?;
            }
        }
        write!(f, "]")
    }
}

/// Normal-ordered element of the localized oscillator algebra.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OscElem {
    terms: BTreeMap<ShiftMonomial, RatFunc>,
}

impl OscElem {
    pub fn zero() -> Self {
        OscElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        OscElem::from_coeff(RatFunc::one())
    }

    pub fn from_coeff(c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ShiftMonomial::one(), c);
        }
        OscElem { terms }
    }

    pub fn term(c: RatFunc, m: ShiftMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        OscElem { terms }
    }

    pub fn momentum(idx: OscIndex) -> Self {
        OscElem::from_coeff(RatFunc::var(idx.p_var()))
    }

    pub fn shift(idx: OscIndex, n: i32) -> Self {
        OscElem::term(RatFunc::one(), ShiftMonomial::single(idx, n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ShiftMonomial, &RatFunc)> {
        self.terms.iter()
    }

    /// Coefficient of a given shift monomial (zero if absent).
    pub fn coeff(&self, m: &ShiftMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The element is a pure function of `p` (and spectral/point variables).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return Some(RatFunc::zero());
        }
        if self.is_scalar() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    fn add_term(&mut self, m: ShiftMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &OscElem) -> OscElem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &OscElem) -> OscElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OscElem {
        OscElem {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> OscElem {
        if c.is_zero() {
            return OscElem::zero();
        }
        OscElem {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.scale(c))).collect(),
        }
    }

    /// Left multiplication by a coefficient (no shifts cross it).
    pub fn lmul_coeff(&self, f: &RatFunc) -> OscElem {
        if f.is_zero() {
            return OscElem::zero();
        }
        let mut out = OscElem::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f.mul(c));
        }
        out
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &OscElem, lens: &RootLengths) -> OscElem {
        let mut out = OscElem::zero();
        for (m1, c1) in &self.terms {
            let shifts = m1.passing_shifts(lens);
            for (m2, c2) in &other.terms {
                let c2s = if shifts.is_empty() { c2.clone() } else { c2.shift_vars(&shifts) };
                out.add_term(m1.mul(m2), c1.mul(&c2s));
            }
        }
        out
    }

    pub fn commutator(&self, other: &OscElem, lens: &RootLengths) -> OscElem {
        self.mul(other, lens).sub(&other.mul(self, lens))
    }

    pub fn pow(&self, e: u32, lens: &RootLengths) -> OscElem {
        let mut out = OscElem::one();
        for _ in 0..e {
            out = out.mul(self, lens);
        }
        out
    }

    /// Tensor slots used by this element (in monomials or coefficients).
    pub fn slots(&self) -> Vec<u8> {
        let mut out: Vec<u8> = Vec::new();
        for (m, c) in &self.terms {
            for (i, _) in m.exponents() {
                out.push(i.slot);
            }
            for v in c.vars() {
                if let VarId::P { slot, .. } = v {
                    out.push(slot);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Move every oscillator index and `p`-variable to the given slot.
    pub fn relabel_slot(&self, slot: u8) -> OscElem {
        let map = |v: VarId| -> VarId {
            match v {
                VarId::P { node, copy, .. } => VarId::P { slot, node, copy },
                other => other,
            }
        };
        OscElem {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.relabel_slot(slot), c.map_vars(&map)))
                .collect(),
        }
    }

    /// Commuting embedding of two elements over disjoint registries.
    pub fn tensor(&self, other: &OscElem, lens: &RootLengths) -> Result<OscElem> {
        let sa = self.slots();
        let sb = other.slots();
        if let Some(s) = sa.iter().find(|s| sb.contains(s)) {
            return Err(AlgebraError::RegistryOverlap(format!("slot {s} used by both factors")));
        }
        Ok(self.mul(other, lens))
    }

    /// Action on a rational function of the momenta via the difference
    /// representation: a term `c(p) E^m` sends `f` to `c * f(p - m*sd)`.
    pub fn apply_difference(&self, f: &RatFunc, lens: &RootLengths) -> RatFunc {
        let mut out = RatFunc::zero();
        for (m, c) in &self.terms {
            let shifts = m.passing_shifts(lens);
            let shifted = if shifts.is_empty() { f.clone() } else { f.shift_vars(&shifts) };
            out = out.add(&c.mul(&shifted));
        }
        out
    }

    /// Map all coefficients (e.g. substitute a spectral variable).
    pub fn map_coeffs(&self, f: &dyn Fn(&RatFunc) -> RatFunc) -> OscElem {
        let mut out = OscElem::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: &dyn Fn(&RatFunc) -> Result<RatFunc>) -> Result<OscElem> {
        let mut out = OscElem::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Substitute a value for a variable in all coefficients.
    pub fn substitute(&self, v: VarId, value: &RatFunc) -> Result<OscElem> {
        self.try_map_coeffs(&|c| c.substitute(v, value))
    }

    /// Shift a variable: `v -> v + delta` in all coefficients.
    pub fn shift_var(&self, v: VarId, delta: &BigRational) -> OscElem {
        self.map_coeffs(&|c| c.shift_vars(&[(v, delta.clone())]))
    }

    /// Laurent coefficients at `v = oo`, per shift monomial, up to `k_max`.
    pub fn laurent_at_infinity(&self, v: VarId, k_max: i64) -> BTreeMap<i64, OscElem> {
        let mut out: BTreeMap<i64, OscElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (k, coeff) in c.laurent_at_infinity(v, k_max) {
                out.entry(k)
                    .or_insert_with(OscElem::zero)
                    .add_term(m.clone(), coeff);
            }
        }
        out.retain(|_, e| !e.is_zero());
        out
    }

    /// Degree in a variable: max over terms (`None` when zero).
    pub fn degree_in(&self, v: VarId) -> Option<i64> {
        self.terms
            .values()
            .filter_map(|c| c.degree_in(v).finite())
            .max()
    }

    /// Every coefficient is polynomial in the given variable.
    pub fn is_polynomial_in(&self, v: VarId) -> bool {
        self.terms.values().all(|c| !c.den().contains_var(v))
    }

    /// Check that every denominator factor of every coefficient has one of
    /// the admitted localization shapes: spectral-linear, same-node momentum
    /// difference `p_{i,k} - p_{i,l} + c`, or point-linear.
    pub fn check_localization(&self) -> Result<()> {
        for c in self.terms.values() {
            for (f, _) in c.den_factors() {
                if !admissible_den_factor(f) {
                    return Err(AlgebraError::LocalizationViolated(f.to_string()));
                }
            }
        }
        Ok(())
    }
}

fn admissible_den_factor(f: &Poly) -> bool {
    if f.total_degree() != Some(1) {
        return false;
    }
    let vars = f.vars();
    let has_spectral = vars.iter().any(|v| v.is_spectral());
    if has_spectral {
        // linear with a spectral variable: (z - <linear in p, points>)
        return true;
    }
    let pvars: Vec<&VarId> = vars
        .iter()
        .filter(|v| matches!(v, VarId::P { .. }))
        .collect();
    match pvars.len() {
        0 => true, // points only
        2 => {
            // p_{i,k} - p_{i,l} + c on a common node, unit coefficients
            if let (VarId::P { slot: s1, node: n1, .. }, VarId::P { slot: s2, node: n2, .. }) =
                (pvars[0], pvars[1])
            {
                if s1 != s2 || n1 != n2 {
                    return false;
                }
                let c1 = f.coeff_of(*pvars[0], 1);
                let c2 = f.coeff_of(*pvars[1], 1);
                if !vars.iter().all(|v| matches!(v, VarId::P { .. }) || !f.contains_var(*v)) {
                    return false;
                }
                match (c1.as_constant(), c2.as_constant()) {
                    (Some(a), Some(b)) => (a + b).is_zero(),
                    _ => false,
                }
            } else {
                unreachable!()
            }
        }
        _ => false,
    }
}

impl fmt::Display for OscElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) * {m}")?;
        }
        Ok(())
    }
}

/// Parse the output of [`OscElem`]'s `Display`.
pub fn parse_osc_elem(input: &str) -> Result<OscElem> {
    let input = input.trim();
    if input == "0" {
        return Ok(OscElem::zero());
    }
    let mut out = OscElem::zero();
    for chunk in split_top_level(input) {
        let chunk = chunk.trim();
        let star = chunk
            .rfind("* E[")
            .ok_or_else(|| AlgebraError::Parse(format!("missing `* E[` in `{chunk}`")))?;
        let coeff = crate::exact::parse_ratfunc(chunk[..star].trim())?;
        let mono = parse_shift_monomial(chunk[star + 2..].trim())?;
        out.add_term(mono, coeff);
    }
    Ok(out)
}

/// Split on ` + ` at parenthesis depth zero.
fn split_top_level(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' if depth == 0 && i > 0 && bytes[i - 1] == b' ' => {
                parts.push(&s[start..i - 1]);
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

fn parse_shift_monomial(s: &str) -> Result<ShiftMonomial> {
    let inner = s
        .strip_prefix("E[")
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| AlgebraError::Parse(format!("bad shift monomial `{s}`")))?;
    let mut pairs = Vec::new();
    for tok in inner.split_whitespace() {
        // (node,copy[|slot])[^exp]
        let (head, exp) = match tok.split_once('^') {
            Some((h, e)) => (
                h,
                e.parse::<i32>()
                    .map_err(|e| AlgebraError::Parse(e.to_string()))?,
            ),
            None => (tok, 1),
        };
        let head = head
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| AlgebraError::Parse(format!("bad index `{tok}`")))?;
        let (nc, slot) = match head.split_once('|') {
            Some((nc, s)) => (
                nc,
                s.parse::<u8>().map_err(|e| AlgebraError::Parse(e.to_string()))?,
            ),
            None => (head, 0),
        };
        let (n, c) = nc
            .split_once(',')
            .ok_or_else(|| AlgebraError::Parse(format!("bad index `{tok}`")))?;
        pairs.push((
            OscIndex {
                slot,
                node: n.parse().map_err(|_| AlgebraError::Parse(format!("bad node in `{tok}`")))?,
                copy: c.parse().map_err(|_| AlgebraError::Parse(format!("bad copy in `{tok}`")))?,
            },
            exp,
        ));
    }
    Ok(ShiftMonomial::from_pairs(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qrat;

    fn type_d_lengths(r: usize) -> RootLengths {
        RootLengths::uniform(r)
    }

    fn type_c_lengths(r: usize) -> RootLengths {
        let mut sd = vec![BigRational::one(); r];
        sd[r - 1] = qint(2);
        RootLengths::new(sd)
    }

    #[test]
    fn shift_past_momentum_type_d() {
        // e^{q_{1,1}} p_{1,1} = (p_{1,1} - 1) e^{q_{1,1}}
        let lens = type_d_lengths(2);
        let idx = OscIndex::new(1, 1);
        let prod = OscElem::shift(idx, 1).mul(&OscElem::momentum(idx), &lens);
        let expect = OscElem::term(
            RatFunc::var(idx.p_var()).sub(&RatFunc::one()),
            ShiftMonomial::single(idx, 1),
        );
        assert_eq!(prod, expect);
    }

    #[test]
    fn shift_past_momentum_type_c_long_root() {
        // [e^{q_{r,1}}, p_{r,1}] = -2 e^{q_{r,1}} at the long node of C_2
        let lens = type_c_lengths(2);
        let idx = OscIndex::new(2, 1);
        let comm = OscElem::shift(idx, 1).commutator(&OscElem::momentum(idx), &lens);
        let expect = OscElem::term(RatFunc::from_int(-2), ShiftMonomial::single(idx, 1));
        assert_eq!(comm, expect);
    }

    #[test]
    fn shifts_invert() {
        // e^{q} e^{-q} = 1
        let lens = type_d_lengths(1);
        let idx = OscIndex::new(1, 1);
        let prod = OscElem::shift(idx, 1).mul(&OscElem::shift(idx, -1), &lens);
        assert_eq!(prod, OscElem::one());
    }

    #[test]
    fn momenta_commute_and_shifts_commute() {
        let lens = type_d_lengths(2);
        let p1 = OscElem::momentum(OscIndex::new(1, 1));
        let p2 = OscElem::momentum(OscIndex::new(2, 1));
        assert!(p1.commutator(&p2, &lens).is_zero());
        let e1 = OscElem::shift(OscIndex::new(1, 1), 1);
        let e2 = OscElem::shift(OscIndex::new(2, 1), 1);
        assert!(e1.commutator(&e2, &lens).is_zero());
        // [e^{q_{1,1}}, p_{1,1}] = -e^{q_{1,1}}
        let comm = e1.commutator(&p1, &lens);
        assert_eq!(comm, OscElem::shift(OscIndex::new(1, 1), 1).neg());
    }

    #[test]
    fn difference_representation() {
        // e^{-q_{1,1}} acts as p_{1,1} -> p_{1,1} + 1 in type D
        let lens = type_d_lengths(1);
        let idx = OscIndex::new(1, 1);
        let f = RatFunc::var(idx.p_var());
        let a = OscElem::shift(idx, -1);
        assert_eq!(
            a.apply_difference(&f, &lens),
            f.add(&RatFunc::one())
        );
        // p_{1,1} applied to 1 multiplies
        let p = OscElem::momentum(idx);
        assert_eq!(p.apply_difference(&RatFunc::one(), &lens), f);
    }

    #[test]
    fn faithfulness_on_products() {
        let lens = type_c_lengths(2);
        let i1 = OscIndex::new(1, 1);
        let i2 = OscIndex::new(2, 1);
        let a = OscElem::shift(i1, 1).lmul_coeff(&RatFunc::var(i2.p_var()));
        let b = OscElem::shift(i2, -2).lmul_coeff(&RatFunc::var(i1.p_var()));
        let f = RatFunc::var(i1.p_var()).mul(&RatFunc::var(i2.p_var()));
        let lhs = a.mul(&b, &lens).apply_difference(&f, &lens);
        let rhs = a.apply_difference(&b.apply_difference(&f, &lens), &lens);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_requires_disjoint_slots() {
        let lens = type_d_lengths(2);
        let a = OscElem::shift(OscIndex::new(1, 1), 1);
        let b = OscElem::momentum(OscIndex::new(2, 1)).relabel_slot(1);
        let t = a.tensor(&b, &lens).unwrap();
        assert_eq!(t.num_terms(), 1);
        // overlapping slots rejected
        assert!(matches!(
            a.tensor(&OscElem::momentum(OscIndex::new(1, 1)), &lens),
            Err(AlgebraError::RegistryOverlap(_))
        ));
        // tensor factors commute
        assert!(a
            .tensor(&b, &lens)
            .unwrap()
            .sub(&b.tensor(&a, &lens).unwrap())
            .is_zero());
    }

    #[test]
    fn display_roundtrip() {
        let lens = type_c_lengths(2);
        let i1 = OscIndex::new(1, 1);
        let i2 = OscIndex::new(2, 1);
        let a = OscElem::shift(i1, 2)
            .lmul_coeff(&RatFunc::var(i2.p_var()).scale(&qrat(3, 2)))
            .add(&OscElem::shift(i2, -1))
            .mul(&OscElem::momentum(i1), &lens);
        let text = a.to_string();
        assert_eq!(parse_osc_elem(&text).unwrap(), a);
    }

    #[test]
    fn localization_shapes() {
        let i1 = OscIndex::new(1, 1);
        let i2 = OscIndex::new(1, 2);
        let ok = OscElem::from_coeff(
            RatFunc::one()
                .div(&RatFunc::var(i1.p_var()).sub(&RatFunc::var(i2.p_var())).add(&RatFunc::from_int(3)))
                .unwrap(),
        );
        assert!(ok.check_localization().is_ok());
        let bad = OscElem::from_coeff(
            RatFunc::one()
                .div(&RatFunc::var(i1.p_var()).sub(&RatFunc::var(OscIndex::new(2, 1).p_var())))
                .unwrap(),
        );
        assert!(bad.check_localization().is_err());
    }
}
