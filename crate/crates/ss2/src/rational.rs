//! Exact nonnegative rationals for Newton-polygon slopes and slope bounds.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A reduced fraction with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn zero() -> Self {
        Frac { num: 0, den: 1 }
    }

    pub fn one_half() -> Self {
        Frac { num: 1, den: 2 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// Ceiling of `n * self`, for nonnegative fractions.
    pub fn ceil_mul(&self, n: u32) -> u32 {
        debug_assert!(self.num >= 0);
        let p = self.num as i128 * n as i128;
        ((p + self.den as i128 - 1) / self.den as i128) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        let l = self.num as i128 * other.den as i128;
        let r = other.num as i128 * self.den as i128;
        l.cmp(&r)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidInstance(format!("cannot parse rational {s:?}"));
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Frac::new(n, 1))
            }
            Some((a, b)) => {
                let n: i64 = a.trim().parse().map_err(|_| bad())?;
                let d: i64 = b.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Frac::new(n, d))
            }
        }
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_mul_matches_hand_values() {
        let half = Frac::new(1, 2);
        assert_eq!(half.ceil_mul(13), 7);
        assert_eq!(half.ceil_mul(12), 6);
        let f = Frac::new(4, 9);
        assert_eq!(f.ceil_mul(14), 7);
        assert_eq!(f.ceil_mul(13), 6);
    }

    #[test]
    fn ordering_and_reduction() {
        assert_eq!(Frac::new(2, 4), Frac::new(1, 2));
        assert!(Frac::new(4, 9) < Frac::new(1, 2));
        assert!(Frac::new(1, 3) < Frac::new(1, 2));
        assert_eq!("4/9".parse::<Frac>().unwrap(), Frac::new(4, 9));
        assert_eq!("1".parse::<Frac>().unwrap(), Frac::new(1, 1));
    }
}
