//! Exact rational scalars plus the integer helpers the rest of the kernel
//! leans on (perfect squares, square-free decomposition).

use num::bigint::BigInt;
use num::integer::Roots;
use num::{BigRational, One, Signed, Zero};

/// Arbitrary-precision rational. Backed by `num`'s `Ratio<BigInt>`, which
/// keeps the denominator positive and the fraction reduced after every
/// operation.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p` or `p/q` decimal strings. Rejects zero denominators instead of
/// panicking.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("bad integer {num_str:?}"))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| format!("bad integer {d:?}"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical `p/q` form, denominator always present.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Floor square root helper; `None` when `n` is negative or not a square.
pub fn sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Exact square root of a non-negative rational if one exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = sqrt_exact(r.numer())?;
    let den = sqrt_exact(r.denom())?;
    Some(Rational::new(num, den))
}

const TRIAL_BOUND: u64 = 1 << 16;
const RHO_BUDGET: usize = 1 << 18;

/// Write `n = d·s²` with `d` square-free (sign carried by `d`). Returns
/// `(d, s)`. Zero decomposes as `(0, 1)`.
///
/// Factoring is trial division up to 2^16 followed by Pollard rho with a
/// bounded budget; a cofactor that survives both is treated as square-free
/// after a perfect-square check, which is exact for any cofactor with at
/// most two prime factors.
pub fn square_free_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let negative = n.is_negative();
    let mut rest = n.abs();
    let mut free = BigInt::one();
    let mut square = BigInt::one();

    let mut absorb = |p: &BigInt, rest: &mut BigInt, free: &mut BigInt, square: &mut BigInt| {
        let mut count = 0u32;
        while (&*rest % p).is_zero() {
            *rest /= p;
            count += 1;
        }
        if count % 2 == 1 {
            *free *= p;
        }
        for _ in 0..count / 2 {
            *square *= p;
        }
    };

    absorb(&BigInt::from(2), &mut rest, &mut free, &mut square);
    absorb(&BigInt::from(3), &mut rest, &mut free, &mut square);
    let mut p = 5u64;
    while p <= TRIAL_BOUND && !rest.is_one() {
        absorb(&BigInt::from(p), &mut rest, &mut free, &mut square);
        absorb(&BigInt::from(p + 2), &mut rest, &mut free, &mut square);
        p += 6;
    }

    // Remaining cofactor has no prime factor below the trial bound. Factor it
    // fully (with multiplicities) so p²·q style inputs aggregate correctly.
    let mut large_factors: Vec<BigInt> = Vec::new();
    let mut stack = vec![rest];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_probable_prime(&c) {
            large_factors.push(c);
            continue;
        }
        if let Some(s) = sqrt_exact(&c) {
            stack.push(s.clone());
            stack.push(s);
            continue;
        }
        match pollard_rho(&c) {
            Some(f) => {
                let q = &c / &f;
                stack.push(f);
                stack.push(q);
            }
            None => {
                // Budget exhausted: accept the cofactor as square-free.
                large_factors.push(c);
            }
        }
    }
    large_factors.sort();
    let mut i = 0;
    while i < large_factors.len() {
        let p = large_factors[i].clone();
        let count = large_factors[i..].iter().take_while(|f| **f == p).count();
        for _ in 0..count / 2 {
            square *= &p;
        }
        if count % 2 == 1 {
            free *= &p;
        }
        i += count;
    }

    if negative {
        free = -free;
    }
    (free, square)
}

fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with the fixed witness set; deterministic below 3.3·10^24.
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let trailing = n_minus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_1 >> trailing;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&odd, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..trailing {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> Option<BigInt> {
    use num::Integer;
    for c in 1u64..20 {
        let c = BigInt::from(c);
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        let mut steps = 0usize;
        while d.is_one() {
            if steps > RHO_BUDGET {
                break;
            }
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            steps += 1;
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
        if d.is_one() {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0/9"] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn cross_multiplication_oracle() {
        // (a/b + c/d) recomputed via integer cross multiplication.
        let a = Rational::new(BigInt::from(3), BigInt::from(8));
        let c = Rational::new(BigInt::from(-5), BigInt::from(12));
        let sum = &a + &c;
        let cross = Rational::new(
            a.numer() * c.denom() + c.numer() * a.denom(),
            a.denom() * c.denom(),
        );
        assert_eq!(sum, cross);
    }

    #[test]
    fn square_free_small_values() {
        let cases: [(i64, i64, i64); 6] = [
            (-7, -7, 1),
            (12, 3, 2),
            (1, 1, 1),
            (0, 0, 1),
            (-48, -3, 4),
            (360, 10, 6),
        ];
        for (n, d, s) in cases {
            let (df, sf) = square_free_decompose(&BigInt::from(n));
            assert_eq!((df, sf), (BigInt::from(d), BigInt::from(s)), "n = {n}");
        }
    }

    #[test]
    fn square_free_large_semiprime() {
        // 1000003 and 1000033 are primes above the trial bound.
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let n = &p * &p * &q;
        let (d, s) = square_free_decompose(&n);
        assert_eq!(d, q);
        assert_eq!(s, p);
    }

    #[test]
    fn rational_sqrt_cases() {
        assert_eq!(rational_sqrt(&Rational::new(BigInt::from(9), BigInt::from(4))), Some(Rational::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }
}
