//! Exact rational values and their fixed-point renderings.
//!
//! Every inequality in this crate is evaluated over `Rational64` (integer
//! pairs in lowest terms; comparisons cross-multiply). Floats appear only
//! in rendered output, and even there we render by integer arithmetic.

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Exact rational with a lossless `"p/q"` (or `"p"`) serde representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Rational64);

impl Exact {
    pub fn int(n: i64) -> Self {
        Exact(Rational64::from_integer(n))
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Exact(Rational64::new(numer, denom))
    }

    pub fn value(self) -> Rational64 {
        self.0
    }
}

impl From<Rational64> for Exact {
    fn from(r: Rational64) -> Self {
        Exact(r)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Exact {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((n, d)) => Ok(Exact(Rational64::new(n.parse()?, d.parse()?))),
            None => Ok(Exact(Rational64::from_integer(s.parse()?))),
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renders a nonnegative rational truncated (not rounded) to 4 decimals.
///
/// 9.08536… renders as "9.0853". Truncation is what the published table of
/// average-degree bounds uses for the new column, so string equality against
/// it is exact.
pub fn decimal4_trunc(r: Rational64) -> String {
    let (n, d) = (*r.numer(), *r.denom());
    debug_assert!(n >= 0 && d > 0);
    let whole = n / d;
    let frac = n % d;
    let digits = frac * 10_000 / d;
    format!("{whole}.{digits:04}")
}

/// Renders a nonnegative rational rounded half-up to 4 decimals.
///
/// The historical reference columns (Gallai, KY) are conventionally rounded,
/// e.g. 6 + 2/23 = 6.08695… renders as "6.0870".
pub fn decimal4_round(r: Rational64) -> String {
    let (n, d) = (*r.numer(), *r.denom());
    debug_assert!(n >= 0 && d > 0);
    let mut whole = n / d;
    let frac = n % d;
    let mut digits = (2 * frac * 10_000 + d) / (2 * d);
    if digits == 10_000 {
        whole += 1;
        digits = 0;
    }
    format!("{whole}.{digits:04}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_does_not_round() {
        assert_eq!(decimal4_trunc(Rational64::new(745, 82)), "9.0853"); // 9.08536…
        assert_eq!(decimal4_trunc(Rational64::new(31, 10)), "3.1000");
        assert_eq!(decimal4_trunc(Rational64::new(6895, 362)), "19.0469"); // 19.04696…
    }

    #[test]
    fn rounding_is_half_up() {
        assert_eq!(decimal4_round(Rational64::new(140, 23)), "6.0870"); // 6.08695…
        assert_eq!(decimal4_round(Rational64::new(20, 3)), "6.6667");
        assert_eq!(decimal4_round(Rational64::new(9, 2)), "4.5000");
        assert_eq!(decimal4_round(Rational64::new(999996, 100000)), "10.0000");
    }

    #[test]
    fn exact_display_round_trips() {
        for e in [Exact::int(7), Exact::new(31, 10), Exact::new(-3, 4)] {
            let shown = e.to_string();
            assert_eq!(shown.parse::<Exact>().unwrap(), e);
        }
    }
}
