//! Field-erased algebras, as loaded from files.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor, PrimeField, Rationals};

#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Prime(LeibnizAlgebra<PrimeField>),
    Rational(LeibnizAlgebra<Rationals>),
}

impl AnyAlgebra {
    pub fn name(&self) -> &str {
        match self {
            AnyAlgebra::Prime(l) => l.name(),
            AnyAlgebra::Rational(l) => l.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Prime(l) => l.dim(),
            AnyAlgebra::Rational(l) => l.dim(),
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyAlgebra::Prime(l) => l.field().descriptor(),
            AnyAlgebra::Rational(l) => l.field().descriptor(),
        }
    }

    pub fn is_lie(&self) -> bool {
        match self {
            AnyAlgebra::Prime(l) => l.is_lie(),
            AnyAlgebra::Rational(l) => l.is_lie(),
        }
    }

    /// First basis triple violating the left Leibniz identity.
    pub fn left_leibniz_violation(&self) -> Option<(usize, usize, usize)> {
        match self {
            AnyAlgebra::Prime(l) => l.tensor().left_leibniz_violation(),
            AnyAlgebra::Rational(l) => l.tensor().left_leibniz_violation(),
        }
    }

    /// The algebra over a finite field, or `UnsupportedField` for Q.
    pub fn finite(&self, operation: &'static str) -> Result<&LeibnizAlgebra<PrimeField>> {
        match self {
            AnyAlgebra::Prime(l) => Ok(l),
            AnyAlgebra::Rational(_) => Err(Error::UnsupportedField {
                operation,
                field: "Q".into(),
            }),
        }
    }
}

impl From<LeibnizAlgebra<PrimeField>> for AnyAlgebra {
    fn from(l: LeibnizAlgebra<PrimeField>) -> Self {
        AnyAlgebra::Prime(l)
    }
}

impl From<LeibnizAlgebra<Rationals>> for AnyAlgebra {
    fn from(l: LeibnizAlgebra<Rationals>) -> Self {
        AnyAlgebra::Rational(l)
    }
}
