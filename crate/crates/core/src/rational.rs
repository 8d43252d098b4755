//! Exact rational values for densities and ratio comparisons. Verdict paths
//! never touch floating point.

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::Mul;

/// A reduced exact fraction. Serializes as the string `"p/q"` (or `"p"` when
/// integral) so report JSON stays exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn one() -> Self {
        Rational::integer(1)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_equality() {
        assert_eq!(Rational::new(12, 6), Rational::integer(2));
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(-2, -4), Rational::new(1, 2));
    }

    #[test]
    fn multiplication() {
        assert_eq!(Rational::new(3, 2) * Rational::new(4, 3), Rational::integer(2));
    }

    #[test]
    fn ordering() {
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::integer(2) > Rational::new(3, 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Rational::new(7, 3).to_string(), "7/3");
        assert_eq!(Rational::new(4, 2).to_string(), "2");
        assert_eq!(serde_json::to_string(&Rational::new(1, 5)).unwrap(), "\"1/5\"");
    }
}
