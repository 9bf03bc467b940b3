//! Modular gcd of polynomials over Q(i).
//!
//! Euclid over the rationals lets intermediate coefficients explode on long
//! inputs. Here the inputs are cleared to Gaussian integers and the gcd is
//! taken modulo primes `p = 1 mod 4`, where `i` maps to a square root of -1.
//! Mapping `i` to both roots recovers real and imaginary parts, the Chinese
//! remainder theorem lifts the coefficients, and a candidate is accepted
//! once it divides both inputs exactly.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::gauss::GaussRat;
use super::zpoly::{content, gint_gcd, integral, GInt, ZPoly};

const MAX_PRIMES: usize = 64;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for b in BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'bases: for b in BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes `p = 1 mod 4` just below `2^62`, each with a square root of -1.
fn primes() -> &'static [(u64, u64)] {
    static PRIMES: OnceLock<Vec<(u64, u64)>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut p = (1u64 << 62) - 3;
        while out.len() < MAX_PRIMES {
            if is_prime(p) {
                let g = (2..).find(|&g| pow_mod(g, (p - 1) / 2, p) == p - 1).expect("non-residue");
                out.push((p, pow_mod(g, (p - 1) / 4, p)));
            }
            p -= 4;
        }
        out
    })
}

fn residue(v: &BigInt, p: &BigInt) -> u64 {
    v.mod_floor(p).to_u64().expect("reduced")
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `F_p`; inputs must be nonzero.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = inv_mod(*b.last().expect("nonzero"), p);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().expect("nonzero"), inv, p);
            let shift = a.len() - b.len();
            for (k, &bk) in b.iter().enumerate() {
                a[shift + k] = (a[shift + k] + p - mul_mod(f, bk, p)) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = inv_mod(*a.last().expect("nonzero"), p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn symmetric(v: &BigInt, m: &BigInt, half: &BigInt) -> BigInt {
    if v > half {
        v - m
    } else {
        v.clone()
    }
}

/// Monic gcd of two nonzero polynomials given by ascending coefficients,
/// or `None` if no candidate was confirmed within the prime budget.
pub(super) fn gcd(a: &[GaussRat], b: &[GaussRat]) -> Option<Vec<GaussRat>> {
    let (a, b) = (ZPoly::from_dense(0, integral(a).0), ZPoly::from_dense(0, integral(b).0));
    let gamma = gint_gcd(a.coeffs.last()?.clone(), b.coeffs.last()?.clone());
    let mut best = usize::MAX;
    let mut modulus = BigInt::one();
    let mut acc: Vec<(BigInt, BigInt)> = Vec::new();
    let mut last: Option<Vec<GInt>> = None;
    for &(p, r) in primes() {
        let pb = BigInt::from(p);
        let res = |c: &GInt| (residue(&c.re, &pb), residue(&c.im, &pb));
        let image = |v: &[(u64, u64)], root: u64| -> Vec<u64> {
            v.iter().map(|&(x, y)| (x + mul_mod(y, root, p)) % p).collect()
        };
        let ra: Vec<(u64, u64)> = a.coeffs.iter().map(res).collect();
        let rb: Vec<(u64, u64)> = b.coeffs.iter().map(res).collect();
        let roots = [r, p - r];
        let lucky = roots.iter().all(|&root| {
            image(&ra[ra.len() - 1..], root)[0] != 0 && image(&rb[rb.len() - 1..], root)[0] != 0
        });
        if !lucky {
            continue;
        }
        let g: Vec<Vec<u64>> = roots.iter().map(|&root| gcd_mod(image(&ra, root), image(&rb, root), p)).collect();
        if g[0].len() != g[1].len() {
            continue;
        }
        let deg = g[0].len() - 1;
        if deg == 0 {
            return Some(vec![GaussRat::one()]);
        }
        if deg > best {
            continue;
        }
        if deg < best {
            best = deg;
            modulus = BigInt::one();
            acc = vec![(BigInt::zero(), BigInt::zero()); deg + 1];
            last = None;
        }
        let gm = image(&[res(&gamma)], r)[0];
        let gm_bar = image(&[res(&gamma)], p - r)[0];
        let (half_inv, two_r_inv) = (inv_mod(2, p), inv_mod(mul_mod(2, r, p), p));
        let m_inv = inv_mod(residue(&modulus, &pb), p);
        for (k, slot) in acc.iter_mut().enumerate() {
            let h1 = mul_mod(g[0][k], gm, p);
            let h2 = mul_mod(g[1][k], gm_bar, p);
            let re = mul_mod((h1 + h2) % p, half_inv, p);
            let im = mul_mod((h1 + p - h2) % p, two_r_inv, p);
            for (x, y) in [(&mut slot.0, re), (&mut slot.1, im)] {
                let t = mul_mod((y + p - residue(x, &pb)) % p, m_inv, p);
                *x += &modulus * t;
            }
        }
        modulus *= &pb;
        let half = &modulus / 2;
        let cand: Vec<GInt> = acc
            .iter()
            .map(|(x, y)| GInt {
                re: symmetric(x, &modulus, &half),
                im: symmetric(y, &modulus, &half),
            })
            .collect();
        if last.as_ref() != Some(&cand) {
            last = Some(cand);
            continue;
        }
        let content = content(&cand);
        let prim: Vec<GInt> = cand.iter().map(|c| c.exact_div(&content).expect("content divides")).collect();
        let g = ZPoly::from_dense(0, prim);
        if a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
            let lc = g.coeffs.last().expect("nonzero");
            let inv = GaussRat::new(lc.re.clone().into(), lc.im.clone().into()).inv().expect("nonzero");
            let zeros = std::iter::repeat_n(GaussRat::zero(), g.low as usize);
            let coeffs = g.coeffs.iter().map(|c| &GaussRat::new(c.re.clone().into(), c.im.clone().into()) * &inv);
            return Some(zeros.chain(coeffs).collect());
        }
    }
    None
}
