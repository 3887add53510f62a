//! Permutations of `{0, .., degree - 1}`.
//!
//! Products are written left to right: `p.compose(&q)` applies `p` first and
//! then `q`, so it maps `i` to `q[p[i]]`. Every group operation in the crate
//! uses this convention.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if images.len() > u32::MAX as usize {
            return Err(Error::InvalidPermutation("degree too large".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::InvalidPermutation(alloc::format!("image {x} out of range")))?;
            if *slot {
                return Err(Error::InvalidPermutation(alloc::format!("image {x} repeated")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1, 2], [3, 4]]`.
    /// Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let a_idx = a as usize;
                if a_idx >= degree {
                    return Err(Error::InvalidPermutation(alloc::format!(
                        "cycle entry {a} outside degree {degree}"
                    )));
                }
                if touched[a_idx] {
                    return Err(Error::InvalidPermutation(alloc::format!(
                        "point {a} appears in more than one cycle position"
                    )));
                }
                touched[a_idx] = true;
                images[a_idx] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        let mut out = vec![0; self.degree()];
        compose_into(&self.images, &other.images, &mut out);
        Ok(Permutation { images: out })
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.degree()];
        invert_into(&self.images, &mut out);
        Permutation { images: out }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            exp >>= 1;
        }
        acc
    }

    /// Least `t >= 1` with `self^t = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        order_of_images(&self.images)
    }

    pub fn commutes_with(&self, other: &Permutation) -> Result<bool> {
        check_degrees(self, other)?;
        Ok(commute_slices(&self.images, &other.images))
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        cycles_of(&self.images)
    }
}

fn check_degrees(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

/// Free-function form of [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

/// `[g, g^2, .., g^o(g)]`; the identity comes last.
pub fn cyclic_subgroup(g: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = g.clone();
    loop {
        let done = cur.is_identity();
        out.push(cur.clone());
        if done {
            break;
        }
        cur = cur.compose(g).expect("same degree");
    }
    out
}

pub fn commutes(x: &Permutation, y: &Permutation) -> Result<bool> {
    x.commutes_with(y)
}

#[inline]
pub(crate) fn compose_into(p: &[u32], q: &[u32], out: &mut [u32]) {
    for (o, &pi) in out.iter_mut().zip(p) {
        *o = q[pi as usize];
    }
}

#[inline]
pub(crate) fn invert_into(p: &[u32], out: &mut [u32]) {
    for (i, &pi) in p.iter().enumerate() {
        out[pi as usize] = i as u32;
    }
}

/// `x y == y x`, scanning points until the first disagreement.
#[inline]
pub(crate) fn commute_slices(x: &[u32], y: &[u32]) -> bool {
    x.iter()
        .zip(y)
        .all(|(&xi, &yi)| y[xi as usize] == x[yi as usize])
}

pub(crate) fn order_of_images(images: &[u32]) -> u64 {
    let mut seen = vec![false; images.len()];
    let mut order = 1u64;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

pub(crate) fn cycles_of(images: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] || images[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i as u32);
            i = images[i] as usize;
        }
        out.push(cycle);
    }
    out
}

/// Cycle notation, `()` for the identity.
pub fn cycle_notation(images: &[u32]) -> String {
    use core::fmt::Write;
    let cycles = cycles_of(images);
    if cycles.is_empty() {
        return String::from("()");
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (k, x) in c.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{x}");
        }
        s.push(')');
    }
    s
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cycle_notation(&self.images))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
