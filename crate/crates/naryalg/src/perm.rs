//! Permutations of `{1, ..., m}` in one-line (image array) notation.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images {0:?} are not a permutation of 1..={1}")]
    NotBijective(Vec<usize>, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A permutation of `{1, ..., m}`, stored by its images:
/// `sigma(i) = images[i - 1]`.
///
/// Composition is right-to-left: `(a.compose(&b))(x) = a(b(x))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(PermError::NotBijective(images.clone(), m));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self o other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: (1..=self.degree())
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Parity: 0 for even, 1 for odd.
    pub fn parity(&self) -> u8 {
        let mut inversions = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        (inversions % 2) as u8
    }

    /// The signum `(-1)^{parity}`.
    pub fn sign(&self) -> i8 {
        if self.parity() == 0 {
            1
        } else {
            -1
        }
    }

    /// Rearranges a tuple so that slot `k` of the result holds `xs[sigma(k)]`
    /// (1-based slots). This is the tensor-slot action used to encode
    /// multilinear identities: precomposing an n-linear map with it evaluates
    /// the map at `(x_{sigma(1)}, ..., x_{sigma(n)})`.
    pub fn pull<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(xs.len(), self.degree(), "tuple length mismatch");
        (1..=self.degree())
            .map(|k| xs[self.apply(k) - 1].clone())
            .collect()
    }

    /// Positions `i` with `sigma(i) > sigma(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

/// All permutations of `{1, ..., m}` in lexicographic order of their images.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=m).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_right_to_left() {
        let a = Permutation::new(vec![2, 1, 3]).unwrap();
        let b = Permutation::new(vec![1, 3, 2]).unwrap();
        // (a o b)(2) = a(b(2)) = a(3) = 3
        assert_eq!(a.compose(&b).images(), &[2, 3, 1]);
    }

    #[test]
    fn sign_is_multiplicative() {
        for a in all_permutations(4) {
            for b in all_permutations(4) {
                assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        for a in all_permutations(4) {
            assert!(a.compose(&a.inverse()).is_identity());
            assert_eq!(a.sign(), a.inverse().sign());
        }
    }

    #[test]
    fn pull_places_images_in_slots() {
        let s = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(s.pull(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    #[test]
    fn rejects_non_bijective() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
    }

    #[test]
    fn enumeration_is_complete_and_sorted() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
