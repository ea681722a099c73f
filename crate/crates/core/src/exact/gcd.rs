//! Multivariate polynomial gcd via content recursion and subresultant PRS.

use super::poly::Poly;
use super::vars::VarId;
use num::{BigRational, One, Zero};

/// Gcd over the rationals, normalized to a primitive integer polynomial with
/// positive leading coefficient. `gcd(0, 0) = 0`; constants give `1`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return normalize(g);
    }
    if g.is_zero() {
        return normalize(f);
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    let v = match pick_main_var(f, g) {
        Some(v) => v,
        // No shared variable: over Q the only common divisors are units.
        None => return Poly::one(),
    };
    let fc = f.coeff_vec(v);
    let gc = g.coeff_vec(v);
    let cont_f = coeff_gcd(&fc);
    let cont_g = coeff_gcd(&gc);
    let pf = f.exact_div(&cont_f).expect("content divides");
    let pg = g.exact_div(&cont_g).expect("content divides");
    let cont = poly_gcd(&cont_f, &cont_g);
    let pp = subresultant_prs(&pf, &pg, v);
    normalize(&(&cont * &pp))
}

fn normalize(f: &Poly) -> Poly {
    if f.is_zero() {
        Poly::zero()
    } else {
        f.primitive_part()
    }
}

/// Main variable choice: the shared variable minimizing the degree sum.
fn pick_main_var(f: &Poly, g: &Poly) -> Option<VarId> {
    let fv = f.vars();
    let gv = g.vars();
    let mut best: Option<(i64, VarId)> = None;
    for v in fv {
        if gv.contains(&v) {
            let d = f.degree_in(v).unwrap_or(0) + g.degree_in(v).unwrap_or(0);
            if best.map(|(bd, _)| d < bd).unwrap_or(true) {
                best = Some((d, v));
            }
        }
    }
    best.map(|(_, v)| v)
}

fn coeff_gcd(coeffs: &[Poly]) -> Poly {
    let mut acc = Poly::zero();
    for c in coeffs {
        if !c.is_zero() {
            acc = poly_gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` in the variable `v`:
/// `lc(b)^(da-db+1) * a = q*b + r` with `deg_v r < deg_v b`.
fn pseudo_rem(a: &Poly, b: &Poly, v: VarId) -> Poly {
    let db = b.degree_in(v).expect("b nonzero") as i64;
    let bc = b.coeff_vec(v);
    let lcb = bc.last().unwrap().clone();
    let mut r = a.clone();
    let da = a.degree_in(v).unwrap_or(0);
    let mut steps = da - db + 1;
    while let Some(dr) = r.degree_in(v) {
        if dr < db {
            break;
        }
        let rl = r.coeff_of(v, dr as u32);
        // r <- lc(b)*r - lc(r)*v^(dr-db)*b
        let shift = Poly::from_coeff_vec(
            v,
            &std::iter::repeat(Poly::zero())
                .take((dr - db) as usize)
                .chain(std::iter::once(rl))
                .collect::<Vec<_>>(),
        );
        r = &(&r * &lcb) - &(&shift * b);
        steps -= 1;
    }
    // Pad remaining multiplications so the subresultant divisions stay exact.
    for _ in 0..steps.max(0) {
        r = &r * &lcb;
    }
    r
}

/// Subresultant polynomial remainder sequence; returns the primitive part of
/// the last nonzero remainder (the gcd of the primitive inputs) in `v`.
fn subresultant_prs(f: &Poly, g: &Poly, v: VarId) -> Poly {
    let (mut a, mut b) = if f.degree_in(v).unwrap_or(0) >= g.degree_in(v).unwrap_or(0) {
        (f.clone(), g.clone())
    } else {
        (g.clone(), f.clone())
    };
    if b.is_zero() {
        return primitive_in(&a, v);
    }
    let mut delta = (a.degree_in(v).unwrap_or(0) - b.degree_in(v).unwrap_or(0)) as u32;
    let mut beta = if delta % 2 == 0 {
        Poly::constant(-BigRational::one())
    } else {
        Poly::one()
    };
    let mut psi = Poly::constant(-BigRational::one());
    loop {
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        let r = r.exact_div(&beta).expect("subresultant division is exact");
        let lc_b = b.coeff_of(v, b.degree_in(v).unwrap() as u32);
        let db = b.degree_in(v).unwrap();
        let dr = r.degree_in(v).unwrap_or(0);
        a = b;
        b = r;
        if b.degree_in(v).unwrap_or(0) == 0 {
            // Nonzero remainder of degree 0: the primitive gcd is trivial.
            return Poly::one();
        }
        // psi <- (-lc(a))^delta / psi^(delta-1)
        let neg_lc = -&lc_b;
        psi = if delta == 0 {
            psi
        } else {
            neg_lc
                .pow(delta)
                .exact_div(&psi.pow(delta - 1))
                .expect("psi division is exact")
        };
        delta = (db - dr) as u32;
        beta = &(-&lc_b) * &psi.pow(delta);
    }
    primitive_in(&b, v)
}

/// Primitive part with respect to `v`: divide by the gcd of `v`-coefficients.
fn primitive_in(f: &Poly, v: VarId) -> Poly {
    let c = coeff_gcd(&f.coeff_vec(v));
    if c.is_zero() {
        return Poly::zero();
    }
    f.exact_div(&c).expect("content divides").primitive_part()
}

/// Rational-coefficient gcd helper for `BigRational` pairs (integer gcd of
/// numerators over lcm of denominators).
pub fn rat_gcd(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    BigRational::new(
        num::Integer::gcd(a.numer(), b.numer()),
        num::Integer::lcm(a.denom(), b.denom()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::qint;

    fn z() -> Poly {
        Poly::var(VarId::Z)
    }
    fn p(i: u8, k: u16) -> Poly {
        Poly::var(VarId::p(i, k))
    }

    #[test]
    fn univariate_gcd() {
        // (z-1)(z+2) and (z-1)(z-3)
        let f = &(z() - Poly::one()) * &(z() + Poly::int(2));
        let g = &(z() - Poly::one()) * &(z() - Poly::int(3));
        assert_eq!(poly_gcd(&f, &g), z() - Poly::one());
    }

    #[test]
    fn multivariate_gcd_linear_factor() {
        // common factor (z - p[1,1] + 2)
        let c = Poly::var_diff_plus(VarId::Z, VarId::p(1, 1), qint(2));
        let f = &c * &(z() + p(2, 1));
        let g = &c * &(&p(1, 1) * &p(2, 1) - Poly::int(5));
        let gcd = poly_gcd(&f, &g);
        assert_eq!(gcd, c);
    }

    #[test]
    fn coprime_gcd_is_one() {
        let f = &z() * &p(1, 1) + Poly::one();
        let g = z() + p(1, 1);
        assert_eq!(poly_gcd(&f, &g), Poly::one());
    }

    #[test]
    fn gcd_with_multiplicity() {
        let c = z() - p(1, 1);
        let f = &c.pow(2) * &(z() + Poly::one());
        let g = &c.pow(3) * &p(2, 1);
        assert_eq!(poly_gcd(&f, &g), c.pow(2));
    }

    #[test]
    fn gcd_of_zero() {
        let f = (z() + Poly::one()).scale(&qint(-3));
        assert_eq!(poly_gcd(&f, &Poly::zero()), z() + Poly::one());
        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }
}
