use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Vector of exact rationals, always kept in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RatVector(vec![BigRational::zero(); len])
    }

    pub fn from_integers(v: &[BigInt]) -> Self {
        RatVector(v.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        assert_eq!(self.len(), other.len(), "dot product of unequal lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: &BigRational) -> RatVector {
        RatVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Sum of absolute values of the entries.
    pub fn l1_norm(&self) -> BigRational {
        self.0.iter().map(Signed::abs).sum()
    }

    /// The integer entries, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl Add for &RatVector {
    type Output = RatVector;

    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;

    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len());
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl FromIterator<BigRational> for RatVector {
    fn from_iter<I: IntoIterator<Item = BigRational>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}
