//! Multivariate polynomial gcd over ℚ.
//!
//! Recursive scheme: strip the monomial content, eliminate variables that
//! occur in only one operand through contents, then run a primitive
//! pseudo-remainder sequence in one main variable with coefficients in the
//! remaining ones. The univariate base case runs the same sequence over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, NVARS};

/// Monic gcd (leading coefficient one); `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.min_monomial();
    let mb = b.min_monomial();
    let mono = ma.gcd(&mb);
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    let core = if a1.is_constant() || b1.is_constant() {
        Poly::one()
    } else if a1 == b1 {
        a1.monic()
    } else {
        gcd_stripped(&a1, &b1)
    };
    core.mul_term(&mono, &BigRational::one()).monic()
}

/// gcd of a list of polynomials.
pub fn gcd_many<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut acc = Poly::zero();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn lowest_var(mask: u16) -> Option<usize> {
    (0..NVARS).find(|v| mask & (1 << v) != 0)
}

// Operands are nonconstant with trivial monomial content.
fn gcd_stripped(a: &Poly, b: &Poly) -> Poly {
    let sa = a.support();
    let sb = b.support();
    if sa & sb == 0 {
        return Poly::one();
    }
    if let Some(v) = lowest_var(sa & !sb) {
        let c = gcd_many(a.to_univariate(v).iter());
        return gcd(&c, b);
    }
    if let Some(v) = lowest_var(sb & !sa) {
        let c = gcd_many(b.to_univariate(v).iter());
        return gcd(a, &c);
    }
    let v = lowest_var(sa).expect("nonconstant polynomial");
    if sa.count_ones() == 1 {
        return univariate_gcd(a, b, v);
    }

    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = gcd_many(ua.iter());
    let cb = gcd_many(ub.iter());
    let content = gcd(&ca, &cb);
    let mut pa = divide_coeffs(&ua, &ca);
    let mut pb = divide_coeffs(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = prem(&pa, &pb);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            pb = vec![Poly::one()];
            break;
        }
        pa = pb;
        pb = primitive(&r);
    }
    let g = Poly::from_univariate(v, &primitive(&pb));
    g.mul(&content).monic()
}

fn divide_coeffs(coeffs: &[Poly], c: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|p| p.div_exact(c).expect("content divides every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|p| p.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in the main variable.
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let idx = j + dr - db;
            r[idx] = r[idx].sub(&bj.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

fn primitive(r: &[Poly]) -> Vec<Poly> {
    let c = gcd_many(r.iter());
    let divided = divide_coeffs(r, &c);
    // clear the numeric content across the whole vector as well
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for p in &divided {
        for (_, x) in p.terms() {
            den_lcm = den_lcm.lcm(x.denom());
            num_gcd = num_gcd.gcd(x.numer());
        }
    }
    if num_gcd.is_zero() {
        return divided;
    }
    let factor = BigRational::new(den_lcm, num_gcd);
    divided.iter().map(|p| p.scale(&factor)).collect()
}

fn univariate_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let mut pa = to_dense_int(a, v);
    let mut pb = to_dense_int(b, v);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = int_prem(&pa, &pb);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return Poly::one();
        }
        pa = pb;
        pb = int_primitive(r);
    }
    let coeffs: Vec<Poly> = pb
        .into_iter()
        .map(|c| Poly::constant(BigRational::from_integer(c)))
        .collect();
    Poly::from_univariate(v, &coeffs).monic()
}

fn to_dense_int(p: &Poly, v: usize) -> Vec<BigInt> {
    let prim = p.integer_primitive();
    let deg = prim.degree_in(v) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in prim.terms() {
        debug_assert!(c.is_integer());
        out[m.exp(v) as usize] = c.to_integer();
    }
    out
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    int_trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[j + dr - db] -= bj * &lr;
        }
        int_trim(&mut r);
        if r.len() > 8 {
            r = int_primitive(r);
        }
    }
    r
}

fn int_primitive(mut r: Vec<BigInt>) -> Vec<BigInt> {
    let g = r.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in r.iter_mut() {
            *c /= &g;
        }
    }
    if r.last().is_some_and(|c| c.is_negative()) {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn var(v: usize) -> Poly {
        Poly::var(v)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(q(n))
    }

    #[test]
    fn univariate_common_factor() {
        let d = var(0);
        let a = d.mul(&d).sub(&c(1)); // (d-1)(d+1)
        let b = d.mul(&d).sub(&d.scale(&q(2))).add(&c(1)); // (d-1)^2
        assert_eq!(gcd(&a, &b), d.sub(&c(1)));
    }

    #[test]
    fn monomial_content_is_kept() {
        let d = var(0);
        let a = d.mul(&d).mul(&var(1));
        let b = d.mul(&var(1)).add(&d.mul(&d));
        assert_eq!(gcd(&a, &b), d);
    }

    #[test]
    fn multivariate_common_factor() {
        let (d, b, a1) = (var(0), var(1), var(2));
        let f = d.add(&b).sub(&a1); // shared factor
        let g1 = d.mul(&a1).add(&c(3));
        let g2 = b.mul(&b).sub(&d);
        let x = f.mul(&g1);
        let y = f.mul(&g2).scale(&q(-7));
        assert_eq!(gcd(&x, &y), f.monic());
    }

    #[test]
    fn coprime_is_one() {
        let (d, a1) = (var(0), var(2));
        let x = d.mul(&a1).add(&c(1));
        let y = d.sub(&a1);
        assert!(gcd(&x, &y).is_one());
    }

    #[test]
    fn variable_in_one_operand_only() {
        let (d, b) = (var(0), var(1));
        let f = d.add(&c(2));
        let x = f.mul(&b.add(&c(1)));
        let y = f.mul(&d);
        assert_eq!(gcd(&x, &y), f);
    }
}
