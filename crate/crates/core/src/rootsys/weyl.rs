use std::fmt;
use std::hash::{Hash, Hasher};

use crate::scalar::ExactField;
use crate::vector::Vector;

/// Element of a Weyl group of a classical family, stored as a signed
/// permutation of the ambient coordinates together with a reduced word in
/// the simple reflections (1-based indices, Bourbaki order).
///
/// The action is `(w x)[i] = sign[i] * x[perm[i]]`, and the word
/// `[i1, .., ik]` means the matrix product `s_i1 * .. * s_ik`, so `s_ik`
/// acts first on a vector.
#[derive(Clone, Debug)]
pub struct WeylElement {
    perm: Vec<usize>,
    sign: Vec<i8>,
    word: Vec<usize>,
}

impl WeylElement {
    pub(crate) fn from_parts(perm: Vec<usize>, sign: Vec<i8>, word: Vec<usize>) -> Self {
        Self { perm, sign, word }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            perm: (0..dim).collect(),
            sign: vec![1; dim],
            word: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Reduced word; empty for the identity.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.sign.iter().all(|&s| s == 1)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    pub fn apply<F: ExactField>(&self, x: &Vector<F>) -> Vector<F> {
        debug_assert_eq!(x.dim(), self.dim());
        self.perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| if s < 0 { -x[p].clone() } else { x[p].clone() })
            .collect()
    }

    /// Signed permutation of `self * other`. The word is left empty and must
    /// be recomputed by the owning root system.
    pub(crate) fn compose_raw(&self, other: &Self) -> (Vec<usize>, Vec<i8>) {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let sign = self
            .perm
            .iter()
            .zip(&self.sign)
            .map(|(&p, &s)| s * other.sign[p])
            .collect();
        (perm, sign)
    }

    pub(crate) fn inverse_raw(&self) -> (Vec<usize>, Vec<i8>) {
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut sign = vec![1; n];
        for (i, (&p, &s)) in self.perm.iter().zip(&self.sign).enumerate() {
            perm[p] = i;
            sign[p] = s;
        }
        (perm, sign)
    }

    /// Dense matrix with entries in {-1, 0, 1}.
    pub fn matrix(&self) -> Vec<Vec<i8>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut row = vec![0; n];
                row[self.perm[i]] = self.sign[i];
                row
            })
            .collect()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm && self.sign == other.sign
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
        self.sign.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length, then by reduced word.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.perm.cmp(&other.perm))
            .then_with(|| self.sign.cmp(&other.sign))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for i in &self.word {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Parses `"s2s1"`, `"2,1"`, `"21"` or `"e"`/`"id"` (identity) into simple
/// reflection indices.
pub fn parse_word(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "id" {
        return Some(Vec::new());
    }
    if s.contains('s') {
        return s
            .split('s')
            .skip(1)
            .map(|t| t.trim().parse::<usize>().ok().filter(|&i| i > 0))
            .collect();
    }
    if s.contains(',') {
        return s
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&i| i > 0))
            .collect();
    }
    s.chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&i| i > 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_parse() {
        assert_eq!(parse_word("s2s1"), Some(vec![2, 1]));
        assert_eq!(parse_word("2,1"), Some(vec![2, 1]));
        assert_eq!(parse_word("212"), Some(vec![2, 1, 2]));
        assert_eq!(parse_word("e"), Some(vec![]));
        assert_eq!(parse_word("s0"), None);
        assert_eq!(parse_word("sx"), None);
    }
}
