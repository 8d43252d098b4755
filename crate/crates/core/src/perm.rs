//! Permutations of `{0, 1, .., n-1}` stored as image arrays.
//!
//! Composition convention, fixed for the whole crate: `(p * q)(x) = p(q(x))`,
//! i.e. `q` acts first. Text I/O uses 1-based cycle notation; everything
//! internal is 0-based.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation in image-array form: `images[x]` is the image of point `x`.
///
/// `Ord` is lexicographic on the image array; the identity is the minimum of
/// its degree, so sorted element lists always put the identity first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds from an image array, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {y} out of range for degree {n}"
                )));
            }
            if seen[y] {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Single cycle on the given points, identity elsewhere. Points are 0-based.
    pub fn from_cycle(degree: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for (k, &x) in cycle.iter().enumerate() {
            if x >= degree {
                return Err(Error::InvalidPermutation(format!(
                    "cycle point {x} out of range for degree {degree}"
                )));
            }
            let y = cycle[(k + 1) % cycle.len()];
            images[x] = y;
        }
        // A repeated point would have made `images` non-bijective.
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `(self * other)(x) = self(other(x))`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.images[x] == x).collect()
    }

    #[inline]
    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(x, &y)| x == y)
    }

    /// A derangement moves every point.
    #[inline]
    pub fn is_derangement(&self) -> bool {
        !self.has_fixed_point()
    }

    /// Parity via cycle structure: even iff `degree - #cycles` is even.
    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycle decomposition, fixed points omitted. Each cycle starts
    /// at its least point; cycles are sorted by their least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// 1-based disjoint cycle notation; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (k, &x) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses 1-based cycle notation, e.g. `"(1 3 2)(4 5)"`. Cycles need not
    /// be disjoint; they multiply with the rightmost cycle acting first.
    /// `"()"` and `"id"` denote the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "()" || trimmed == "id" {
            return Ok(Self::identity(degree));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number: Option<usize> = None;
        for c in trimmed.chars() {
            match c {
                '(' => {
                    if current.is_some() {
                        return Err(Error::CycleParse("nested '('".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    let mut cycle = current
                        .take()
                        .ok_or_else(|| Error::CycleParse("unmatched ')'".into()))?;
                    if let Some(v) = number.take() {
                        cycle.push(v);
                    }
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                '0'..='9' => {
                    if current.is_none() {
                        return Err(Error::CycleParse(format!("digit '{c}' outside cycle")));
                    }
                    number = Some(number.unwrap_or(0) * 10 + (c as usize - '0' as usize));
                }
                ' ' | ',' | '\t' => {
                    if let Some(v) = number.take() {
                        current
                            .as_mut()
                            .ok_or_else(|| Error::CycleParse("point outside cycle".into()))?
                            .push(v);
                    }
                }
                other => {
                    return Err(Error::CycleParse(format!("unexpected character '{other}'")));
                }
            }
        }
        if current.is_some() {
            return Err(Error::CycleParse("unterminated cycle".into()));
        }
        let mut result = Self::identity(degree);
        // Rightmost cycle acts first, so left-fold with compose.
        for cycle in &cycles {
            let mut zero_based = Vec::with_capacity(cycle.len());
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::CycleParse(format!(
                        "point {p} out of range 1..={degree}"
                    )));
                }
                zero_based.push(p - 1);
            }
            let mut sorted = zero_based.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != zero_based.len() {
                return Err(Error::CycleParse(format!(
                    "repeated point within a cycle in {text:?}"
                )));
            }
            let c = Self::from_cycle(degree, &zero_based)
                .map_err(|e| Error::CycleParse(e.to_string()))?;
            result = result.compose(&c);
        }
        Ok(result)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (p*q)(x) = p(q(x))
        let a = p(&[1, 0, 2]);
        let b = p(&[1, 2, 0]);
        assert_eq!(a.compose(&b).images(), &[0, 2, 1]);
        assert_eq!(b.compose(&a).images(), &[2, 1, 0]);
    }

    #[test]
    fn inverse_of_three_cycle() {
        let c = p(&[1, 2, 0]);
        assert_eq!(c.inverse().images(), &[2, 0, 1]);
        assert!(c.compose(&c.inverse()).is_identity());
        assert!(c.inverse().compose(&c).is_identity());
    }

    #[test]
    fn fixed_points_and_derangements() {
        assert_eq!(p(&[0, 2, 1]).fixed_points(), vec![0]);
        assert!(p(&[1, 0, 3, 2]).is_derangement());
        assert!(!p(&[0, 1, 2]).is_derangement());
        assert!(Permutation::identity(0).is_derangement());
    }

    #[test]
    fn parity() {
        assert!(Permutation::identity(4).is_even());
        assert!(!p(&[1, 0, 2, 3]).is_even());
        assert!(p(&[1, 2, 0]).is_even());
        assert!(p(&[1, 0, 3, 2]).is_even());
    }

    #[test]
    fn cycle_string_round_trip() {
        let g = Permutation::parse_cycles("(1 3 2)(4 5)", 6).unwrap();
        assert_eq!(g.images(), &[2, 0, 1, 4, 3, 5]);
        assert_eq!(g.cycle_string(), "(1 3 2)(4 5)");
        let back = Permutation::parse_cycles(&g.cycle_string(), 6).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn identity_forms() {
        assert!(Permutation::parse_cycles("()", 5).unwrap().is_identity());
        assert!(Permutation::parse_cycles("id", 3).unwrap().is_identity());
        assert_eq!(Permutation::identity(4).cycle_string(), "()");
    }

    #[test]
    fn non_disjoint_cycles_multiply_rightmost_first() {
        // (1 2)(2 3) applied right-to-left sends 3 -> 2 -> 1, so equals (1 2 3).
        let g = Permutation::parse_cycles("(1 2)(2 3)", 3).unwrap();
        assert_eq!(g.cycle_string(), "(1 2 3)");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 1)", 3).is_err());
        assert!(Permutation::parse_cycles("1 2)", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
    }

    #[test]
    fn identity_is_lexicographically_least() {
        let id = Permutation::identity(4);
        let others = [p(&[0, 1, 3, 2]), p(&[1, 0, 2, 3]), p(&[3, 2, 1, 0])];
        for g in &others {
            assert!(id < *g);
        }
    }
}
