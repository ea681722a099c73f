//! Variable identifiers and monomials for the sparse polynomial layer.
//!
//! Variables come in four kinds, with a fixed total order that is stable
//! across runs: the spectral parameters `z` and `w`, oscillator momenta
//! `p[i,k]` (optionally tagged with a tensor slot), free symbolic parameters
//! (points on the line, twist entries), and shuffle-algebra variables
//! `s[i,k]`.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

pub const PARAM_NAME_MAX: usize = 14;

/// Interned parameter name, at most [`PARAM_NAME_MAX`] ASCII bytes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamName([u8; PARAM_NAME_MAX]);

impl ParamName {
    pub fn new(name: &str) -> Result<Self, String> {
        let b = name.as_bytes();
        if b.is_empty() || b.len() > PARAM_NAME_MAX {
            return Err(format!("parameter name `{name}` must have 1..={PARAM_NAME_MAX} bytes"));
        }
        if !b[0].is_ascii_alphabetic() {
            return Err(format!("parameter name `{name}` must start with a letter"));
        }
        if !b.iter().all(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            return Err(format!("parameter name `{name}` must be alphanumeric"));
        }
        if matches!(name, "z" | "w" | "E" | "p" | "s") {
            return Err(format!("parameter name `{name}` is reserved"));
        }
        let mut buf = [0u8; PARAM_NAME_MAX];
        buf[..b.len()].copy_from_slice(b);
        Ok(ParamName(buf))
    }

    pub fn as_str(&self) -> &str {
        let end = self.0.iter().position(|&c| c == 0).unwrap_or(PARAM_NAME_MAX);
        std::str::from_utf8(&self.0[..end]).expect("ParamName is always ASCII")
    }
}

impl fmt::Debug for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// A variable of the exact-arithmetic layer.
///
/// The derived `Ord` gives the session-wide variable order:
/// `z < w < p[..] < params < s[..]`, with `p`-variables ordered by
/// (tensor slot, node, copy) and parameters by name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum VarId {
    /// Spectral parameter `z`.
    Z,
    /// Second spectral parameter `w` (RTT checks).
    W,
    /// Oscillator momentum `p[node,copy]`, tagged with a tensor slot.
    P { slot: u8, node: u8, copy: u16 },
    /// Free symbolic parameter (point of a divisor, twist entry, ...).
    Param(ParamName),
    /// Shuffle-algebra variable `s[node,copy]`.
    Sh { node: u8, copy: u16 },
}

impl VarId {
    pub fn p(node: u8, copy: u16) -> Self {
        VarId::P { slot: 0, node, copy }
    }

    pub fn p_slot(slot: u8, node: u8, copy: u16) -> Self {
        VarId::P { slot, node, copy }
    }

    pub fn param(name: &str) -> Self {
        VarId::Param(ParamName::new(name).expect("invalid parameter name"))
    }

    pub fn sh(node: u8, copy: u16) -> Self {
        VarId::Sh { node, copy }
    }

    pub fn is_spectral(&self) -> bool {
        matches!(self, VarId::Z | VarId::W)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Z => write!(f, "z"),
            VarId::W => write!(f, "w"),
            VarId::P { slot: 0, node, copy } => write!(f, "p[{node},{copy}]"),
            VarId::P { slot, node, copy } => write!(f, "p[{node},{copy}|{slot}]"),
            VarId::Param(name) => write!(f, "{name}"),
            VarId::Sh { node, copy } => write!(f, "s[{node},{copy}]"),
        }
    }
}

/// A monomial: sorted list of `(variable, exponent)` with positive exponents.
///
/// The term order is graded lexicographic: first by total degree, ties broken
/// lexicographically with earlier variables weighing more.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub(crate) SmallVec<[(VarId, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(smallvec::smallvec![(v, 1)])
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(smallvec::smallvec![(v, e)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u32)>) -> Self {
        pairs.retain(|(_, e)| *e > 0);
        pairs.sort_by_key(|(v, _)| *v);
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial(pairs.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn degree_of(&self, v: VarId) -> u32 {
        self.0
            .iter()
            .find(|(u, _)| *u == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// Exact monomial division; `None` when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        let mut i = 0;
        for &(vb, eb) in &other.0 {
            loop {
                let &(va, ea) = self.0.get(i)?;
                match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Equal => {
                        if ea < eb {
                            return None;
                        }
                        if ea > eb {
                            out.push((va, ea - eb));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        out.extend(self.0[i..].iter().copied());
        Some(Monomial(out))
    }

    /// Remove a variable entirely (used when extracting coefficients).
    pub fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().filter(|(u, _)| *u != v).copied().collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // Same total degree: lexicographic, earlier variables weigh more.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                // A missing variable means exponent 0 there; the side that
                // still has variables has its weight on a LATER variable,
                // hence is lexicographically smaller on the earlier one.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // `self` has positive exponent on an earlier variable.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_order_is_kind_then_indices() {
        let z = VarId::Z;
        let w = VarId::W;
        let p11 = VarId::p(1, 1);
        let p12 = VarId::p(1, 2);
        let p21 = VarId::p(2, 1);
        let x = VarId::param("x1");
        let y = VarId::param("y");
        assert!(z < w && w < p11 && p11 < p12 && p12 < p21 && p21 < x && x < y);
        assert!(y < VarId::sh(1, 1));
    }

    #[test]
    fn monomial_mul_div_roundtrip() {
        let m = Monomial::from_pairs(vec![(VarId::Z, 2), (VarId::p(1, 1), 1)]);
        let n = Monomial::from_pairs(vec![(VarId::p(1, 1), 3), (VarId::param("x1"), 1)]);
        let prod = m.mul(&n);
        assert_eq!(prod.div(&n).unwrap(), m);
        assert_eq!(prod.div(&m).unwrap(), n);
        assert_eq!(n.div(&m), None);
    }

    #[test]
    fn grlex_order() {
        let z2 = Monomial::var_pow(VarId::Z, 2);
        let zw = Monomial::from_pairs(vec![(VarId::Z, 1), (VarId::W, 1)]);
        let w2 = Monomial::var_pow(VarId::W, 2);
        let z = Monomial::var(VarId::Z);
        assert!(z2 > zw && zw > w2 && w2 > z);
        assert!(z > Monomial::one());
    }
}
