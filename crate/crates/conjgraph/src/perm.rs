//! Permutations on the points `0..degree`, written as image arrays.
//!
//! Composition is left-to-right: `compose(p, q)` applies `p` first and `q`
//! second, so conjugation `x^g = g^-1 x g` matches the usual orbit formulas.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from an image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &x) in images.iter().enumerate() {
            if x as usize >= n || seen[x as usize] {
                return Err(GroupError::NotBijective { len: n, pos });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint-or-not cycles; points absent from every cycle are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let mut c = Permutation::identity(degree);
            for w in cycle.windows(2) {
                if w[0] as usize >= degree {
                    return Err(GroupError::InvalidParams(format!(
                        "cycle point {} out of range for degree {degree}",
                        w[0]
                    )));
                }
                c.images[w[0] as usize] = w[1];
            }
            if let (Some(&last), Some(&first)) = (cycle.last(), cycle.first()) {
                if last as usize >= degree {
                    return Err(GroupError::InvalidParams(format!(
                        "cycle point {last} out of range for degree {degree}"
                    )));
                }
                c.images[last as usize] = first;
            }
            let c = Permutation::from_images(c.images)?;
            p = p.then(&c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`. Degrees must already agree.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// Checked composition: apply `p` first, then `q`.
    pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
        if p.degree() != q.degree() {
            return Err(GroupError::DegreeMismatch(p.degree(), q.degree()));
        }
        Ok(p.then(q))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 * self * g` in applied order: apply `g^-1`, then `self`, then `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), g.degree());
        let mut out = vec![0u32; self.images.len()];
        // out[g(i)] = g(self(i)), i.e. out = g^-1 . self . g without forming g^-1
        for (i, &gi) in g.images.iter().enumerate() {
            out[gi as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images: out }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.then(other) == other.then(self)
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base.clone());
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for cycle_len in self.cycle_lengths() {
            ord = lcm(ord, cycle_len as u64);
        }
        ord
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.images[p] as usize;
            }
            out.push(len);
        }
        out
    }

    /// Non-trivial cycles, each starting at its least point, sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Smallest point moved by this permutation, if any.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
