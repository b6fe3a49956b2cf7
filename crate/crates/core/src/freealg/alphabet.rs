use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Names of the registered operations, in the order used by the text format.
pub const OPERATION_NAMES: [&str; 12] = [
    "mul", "br", "prec", "succ", "nw", "ne", "sw", "se", "vee", "wedge", "tl", "tr",
];

/// An ordered list of binary operation names.
///
/// The order is fixed at construction and drives every canonical index
/// (association types, monomial columns), so two alphabets are equal only if
/// they list the same names in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpAlphabet(Arc<[String]>);

impl OpAlphabet {
    pub fn new<S: AsRef<str>>(ops: &[S]) -> Result<Self> {
        let mut names: Vec<String> = Vec::with_capacity(ops.len());
        for op in ops {
            let op = op.as_ref();
            if op.is_empty()
                || !op.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || op.chars().next().is_some_and(|c| c.is_ascii_digit())
            {
                return Err(Error::UnknownOperation(op.to_string()));
            }
            if names.iter().any(|n| n == op) {
                return Err(Error::DuplicateOperation(op.to_string()));
            }
            names.push(op.to_string());
        }
        if names.len() > u8::MAX as usize {
            return Err(Error::UnknownOperation("alphabet too large".into()));
        }
        Ok(OpAlphabet(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, op: u8) -> &str {
        &self.0[op as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.0.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn require(&self, name: &str) -> Result<u8> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownOperation(name.to_string()))
    }
}

impl fmt::Display for OpAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

impl fmt::Debug for OpAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            OpAlphabet::new(&["prec", "prec"]),
            Err(Error::DuplicateOperation("prec".into()))
        );
    }

    #[test]
    fn lookup() {
        let a = OpAlphabet::new(&["prec", "succ"]).unwrap();
        assert_eq!(a.index_of("succ"), Some(1));
        assert!(a.require("mul").is_err());
        assert_eq!(a.to_string(), "{prec,succ}");
    }
}
