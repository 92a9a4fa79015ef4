//! Check outcomes. A [`Certified`] value can only be produced by one of the
//! checkers in this crate, so downstream constructors that take one never
//! re-run the axioms.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// The laws that were verified and how many basis tuples each covered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub laws: Vec<(String, usize)>,
}

impl Certificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, law: impl Into<String>, tuples: usize) {
        self.laws.push((law.into(), tuples));
    }

    pub fn merge(mut self, other: Certificate) -> Self {
        self.laws.extend(other.laws);
        self
    }
}

/// A failed law with the lexicographically first basis tuple that breaks it.
/// Indices are zero-based positions in the relevant bases.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{law} fails at {witness:?}")]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<usize>) -> Self {
        Violation {
            law: law.into(),
            witness,
        }
    }
}

pub type CheckResult = Result<Certificate, Violation>;

#[derive(Clone, PartialEq, Eq)]
pub struct Certified<T> {
    value: T,
    certificate: Certificate,
}

impl<T> Certified<T> {
    pub(crate) fn assume(value: T, certificate: Certificate) -> Self {
        Certified { value, certificate }
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn into_inner(self) -> T {
        self.value
    }
}

impl<T> Deref for Certified<T> {
    type Target = T;

    fn deref(&self) -> &T {
        &self.value
    }
}

impl<T: fmt::Debug> fmt::Debug for Certified<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Certified").field("value", &self.value).finish()
    }
}
