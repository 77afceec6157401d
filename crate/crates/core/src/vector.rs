//! Exact coordinate vectors in weight space.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{check_dim, Result};
use crate::scalar::{format_fraction, parse_fraction, ExactField};

/// Coordinate vector over an exact field. Weights, roots and chamber points
/// are all represented this way.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<F> {
    coords: Vec<F>,
}

impl<F: ExactField> Vector<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![F::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = F::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self::new(xs.iter().map(|&x| F::from_int(x)).collect())
    }

    /// Parses a comma separated list of exact fractions, e.g. `"3/2,1"`.
    pub fn parse(s: &str) -> Option<Self> {
        if s.trim().is_empty() {
            return Some(Self::new(Vec::new()));
        }
        s.split(',')
            .map(parse_fraction)
            .collect::<Option<Vec<F>>>()
            .map(Self::new)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &Self) -> F {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm_sq(&self) -> F {
        self.dot(self)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coords.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + c.clone() * b.clone())
                .collect(),
        )
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    pub fn checked_dot(&self, other: &Self) -> Result<F> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.dot(other))
    }

    pub fn sum(&self) -> F {
        self.coords.iter().fold(F::zero(), |a, b| a + b.clone())
    }

    pub fn concat(parts: &[&Self]) -> Self {
        Self::new(parts.iter().flat_map(|p| p.coords.iter().cloned()).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(ExactField::to_f64).collect()
    }

    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_fraction).collect()
    }
}

impl<F> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.coords[i]
    }
}

impl<F> IndexMut<usize> for Vector<F> {
    fn index_mut(&mut self, i: usize) -> &mut F {
        &mut self.coords[i]
    }
}

impl<F: ExactField> Add for &Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: Self) -> Vector<F> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<F: ExactField> Sub for &Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: Self) -> Vector<F> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<F: ExactField> Neg for &Vector<F> {
    type Output = Vector<F>;
    fn neg(self) -> Vector<F> {
        Vector::new(self.coords.iter().map(|x| -x.clone()).collect())
    }
}

impl<F: ExactField> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_fraction_strings().join(", "))
    }
}

impl<F: ExactField> FromIterator<F> for Vector<F> {
    fn from_iter<I: IntoIterator<Item = F>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn arithmetic_is_exact() {
        let a = Vector::<Rational>::parse("1/3,2").unwrap();
        let b = Vector::<Rational>::parse("2/3,-1").unwrap();
        assert_eq!(&a + &b, Vector::parse("1,1").unwrap());
        assert_eq!(a.dot(&b), Rational::new(2.into(), 9.into()) - Rational::from_integer(2.into()));
        assert_eq!(a.to_string(), "(1/3, 2)");
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Vector::<Rational>::zeros(2);
        let b = Vector::<Rational>::zeros(3);
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_dot(&b).is_err());
    }
}
