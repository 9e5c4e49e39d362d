use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::MAX_VARS;
use crate::ordering::{BaseOrdering, OrderingKind};

/// `F_p[x_1, ..., x_n]` with a fixed global monomial ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    ordering: BaseOrdering,
    names: Vec<String>,
}

impl Ring {
    pub fn new(p: u64, names: &[&str], kind: OrderingKind) -> Result<Self> {
        Self::with_names(p, names.iter().map(|s| s.to_string()).collect(), kind)
    }

    pub fn with_names(p: u64, names: Vec<String>, kind: OrderingKind) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        Ok(Ring {
            field,
            ordering: BaseOrdering::new(kind, names.len()),
            names,
        })
    }

    /// Ring with variables `x0, x1, ...`.
    pub fn numbered(p: u64, nvars: usize, kind: OrderingKind) -> Result<Self> {
        Self::with_names(p, (0..nvars).map(|i| format!("x{i}")).collect(), kind)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn ordering(&self) -> BaseOrdering {
        self.ordering
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }
}
