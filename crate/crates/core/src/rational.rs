use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A non-negative fraction kept in lowest terms. Ratios of vertex-set
/// cardinalities are the only values this crate needs, so the sign is never
/// stored.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// `None` when `den == 0`.
    pub fn new(num: u64, den: u64) -> Option<Rational> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den);
        Some(Rational { num: num / g, den: den / g })
    }

    pub fn from_int(n: u64) -> Rational {
        Rational { num: n, den: 1 }
    }

    /// `max(a,b) / min(a,b)`; always at least 1. Panics if the smaller is 0.
    pub fn ratio_max_min(a: usize, b: usize) -> Rational {
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        Rational::new(hi as u64, lo as u64).expect("cardinalities are positive")
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn recip(&self) -> Option<Rational> {
        Rational::new(self.den, self.num)
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{s:?}: {e}"));
        Rational::new(parse(n)?, parse(d)?).ok_or_else(|| format!("{s:?}: zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduced_on_construction() {
        let r = Rational::new(14, 8).unwrap();
        assert_eq!((r.numer(), r.denom()), (7, 4));
        assert_eq!(Rational::new(3, 0), None);
        assert_eq!(Rational::ratio_max_min(7, 8), Rational::new(8, 7).unwrap());
        assert_eq!("8/7".parse::<Rational>().unwrap().to_string(), "8/7");
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::from_int(3));
    }

    #[test]
    fn close_ratios_do_not_collide() {
        let a = Rational::new(8, 7).unwrap();
        let b = Rational::new(7, 6).unwrap();
        assert!(a < b);
        assert_ne!(a, b);
    }

    proptest! {
        #[test]
        fn lowest_terms(n in 0u64..10_000, d in 1u64..10_000) {
            let r = Rational::new(n, d).unwrap();
            prop_assert!(r.numer() == 0 || gcd(r.numer(), r.denom()) == 1);
            prop_assert_eq!(r.numer() as u128 * d as u128, n as u128 * r.denom() as u128);
        }

        #[test]
        fn order_matches_cross_multiplication(a in 1u64..500, b in 1u64..500, c in 1u64..500, d in 1u64..500) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
            prop_assert_eq!(x == y, a * d == c * b);
        }
    }
}
