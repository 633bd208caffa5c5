use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;
/// Bases for Miller–Rabin: the first twelve make the test exact below
/// 2^64; all forty are used above.
const MR_BASES: [u32; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

/// Shape of a count's factorization that the tables single out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    Square,
    /// `2^k` times an odd square, `k ≥ 1`.
    Pow2TimesOddSquare(u32),
    /// Odd part is a square times a square-free `s` with `1 < s ≤ 1000`.
    SquareTimesSmall(u64),
    None,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Square => write!(f, "square"),
            Structure::Pow2TimesOddSquare(k) => write!(f, "2^{k}*odd-square"),
            Structure::SquareTimesSmall(s) => write!(f, "square*{s}"),
            Structure::None => write!(f, "-"),
        }
    }
}

/// A positive integer with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCount {
    pub value: BigInt,
    /// `(prime, exponent)` sorted by prime.
    pub factors: Vec<(BigInt, u32)>,
    pub structure: Structure,
}

impl FactoredCount {
    pub fn largest_prime(&self) -> Option<&BigInt> {
        self.factors.last().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        let p = BigInt::from(p);
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of the primes occurring to an odd power.
    pub fn square_free_part(&self) -> BigInt {
        self.factors
            .iter()
            .filter(|(_, e)| e % 2 == 1)
            .map(|(p, _)| p.clone())
            .product()
    }
}

impl fmt::Display for FactoredCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                for j in (i * i..=n).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        out
    })
}

/// Complete factorization: trial division below 10^6, then Miller–Rabin,
/// perfect-power detection and Brent's variant of Pollard's rho.
pub fn factorize(v: &BigInt) -> Result<FactoredCount> {
    if v < &BigInt::one() {
        return Err(Error::InvalidParameter(format!(
            "can only factor positive integers, got {v}"
        )));
    }
    let mut rest = v.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }
    if rest > BigInt::one() {
        let mut big = Vec::new();
        split(&rest, 1, &mut big);
        factors.extend(big);
    }
    factors.sort();
    let mut merged: Vec<(BigInt, u32)> = Vec::new();
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    let structure = classify(&merged);
    Ok(FactoredCount {
        value: v.clone(),
        factors: merged,
        structure,
    })
}

fn split(n: &BigInt, mult: u32, out: &mut Vec<(BigInt, u32)>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(n) {
        out.push((n.clone(), mult));
        return;
    }
    if let Some((root, k)) = perfect_power(n) {
        split(&root, mult * k, out);
        return;
    }
    let d = brent_rho(n);
    split(&d, mult, out);
    split(&(n / &d), mult, out);
}

/// Largest `k ≥ 2` with `n = r^k`, if any.
fn perfect_power(n: &BigInt) -> Option<(BigInt, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let r = n.nth_root(k);
        if r > BigInt::one() && num_traits::pow(r.clone(), k as usize) == *n {
            return Some((r, k));
        }
    }
    None
}

pub fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_1 = n - &one;
    let s = n_1.trailing_zeros().unwrap_or(0);
    let d = &n_1 >> s;
    let rounds = if n.bits() <= 64 { 12 } else { MR_BASES.len() };
    'bases: for &a in &MR_BASES[..rounds] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`; the polynomial constant
/// steps through 1, 2, 3, … so the result is reproducible.
fn brent_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = q * (&x - &y).mod_floor(n) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).mod_floor(n).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!("some constant splits every composite")
}

fn classify(factors: &[(BigInt, u32)]) -> Structure {
    if factors.iter().all(|(_, e)| e % 2 == 0) {
        return Structure::Square;
    }
    let two = BigInt::from(2);
    let k = factors
        .iter()
        .find(|(p, _)| *p == two)
        .map_or(0, |&(_, e)| e);
    let odd_square = factors
        .iter()
        .filter(|(p, _)| *p != two)
        .all(|(_, e)| e % 2 == 0);
    if k >= 1 && odd_square {
        return Structure::Pow2TimesOddSquare(k);
    }
    let s: BigInt = factors
        .iter()
        .filter(|(p, e)| *p != two && e % 2 == 1)
        .map(|(p, _)| p.clone())
        .product();
    match s.to_u64() {
        Some(s) if s > 1 && s <= 1000 => Structure::SquareTimesSmall(s),
        _ => Structure::None,
    }
}

/// Summary of how "round" a count is relative to its family parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundnessReport {
    pub largest_prime: BigInt,
    /// `largest_prime / n`.
    pub ratio: BigRational,
    pub structure: Structure,
    /// Set when the largest prime exceeds `6 (n + 1)`.
    pub outlier: bool,
}

pub fn roundness(fc: &FactoredCount, n: u64) -> Result<RoundnessReport> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "roundness needs a positive parameter".into(),
        ));
    }
    let largest = fc.largest_prime().cloned().unwrap_or_else(BigInt::one);
    let ratio = BigRational::new(largest.clone(), BigInt::from(n));
    let outlier = largest > BigInt::from(6 * (n + 1));
    Ok(RoundnessReport {
        largest_prime: largest,
        ratio,
        structure: fc.structure,
        outlier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: u64) -> FactoredCount {
        factorize(&BigInt::from(v)).unwrap()
    }

    #[test]
    fn window_anchor() {
        assert_eq!(f(314703872).to_string(), "2^17 * 7^4");
    }

    #[test]
    fn structures() {
        assert_eq!(f(9).structure, Structure::Square);
        assert_eq!(f(18).structure, Structure::Pow2TimesOddSquare(1));
        assert_eq!(f(37004).structure, Structure::SquareTimesSmall(11));
        assert_eq!(f(1).structure, Structure::Square);
        assert_eq!(f(1).to_string(), "1");
        assert_eq!(f(2 * 3 * 5 * 7 * 11 * 13 * 17).structure, Structure::None);
    }

    #[test]
    fn large_square_cofactor() {
        let p: BigInt = "2534588575976069659".parse().unwrap();
        let v = BigInt::from(32) * &p * &p;
        let fc = factorize(&v).unwrap();
        assert_eq!(fc.factors, vec![(BigInt::from(2), 5), (p, 2)]);
        assert_eq!(fc.structure, Structure::Pow2TimesOddSquare(5));
    }

    #[test]
    fn semiprime_beyond_trial_division() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(998_244_353u64);
        let r: BigInt = "170141183460469231731687303715884105727".parse().unwrap();
        let fc = factorize(&(&p * &q * &r)).unwrap();
        assert_eq!(fc.factors, vec![(p, 1), (q, 1), (r, 1)]);
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigInt::from(13093)));
        assert!(!is_probable_prime(&BigInt::from(3215031751u64)));
        assert!(!is_probable_prime(&BigInt::from(1)));
    }

    #[test]
    fn roundness_examples() {
        let r = roundness(&f(20), 2).unwrap();
        assert_eq!(r.largest_prime, BigInt::from(5));
        assert_eq!(r.ratio, BigRational::new(5.into(), 2.into()));
        assert!(!r.outlier);
        let synthetic = (1u64 << 24) * 9 * 73;
        assert!(roundness(&f(synthetic), 8).unwrap().outlier);
    }
}
