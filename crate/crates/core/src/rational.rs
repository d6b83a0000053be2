use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::{self, Write};

/// Non-negative exact fraction kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
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
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `self - other`, or `None` if the result would be negative.
    pub fn checked_sub(self, other: Rational) -> Option<Rational> {
        let l = self.num as u128 * other.den as u128;
        let r = other.num as u128 * self.den as u128;
        let d = self.den as u128 * other.den as u128;
        let n = l.checked_sub(r)?;
        let g = {
            let (mut a, mut b) = (n, d);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        Some(Rational {
            num: (n / g) as u64,
            den: (d / g) as u64,
        })
    }

    /// Decimal rendering with at most `places` fractional digits, trailing
    /// zeros trimmed. Truncates non-terminating expansions.
    pub fn to_decimal(&self, places: usize) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}", self.num / self.den);
        let mut rem = self.num % self.den;
        if rem != 0 && places > 0 {
            out.push('.');
            for _ in 0..places {
                if rem == 0 {
                    break;
                }
                let scaled = rem as u128 * 10;
                let _ = write!(out, "{}", scaled / self.den as u128);
                rem = (scaled % self.den as u128) as u64;
            }
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        out
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
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
