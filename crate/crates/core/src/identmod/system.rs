use crate::error::{Error, Result};
use crate::freealg::{OpAlphabet, Polynomial};

/// A named family of multilinear identities over one alphabet.
#[derive(Clone, Debug)]
pub struct IdentitySystem {
    name: String,
    alphabet: OpAlphabet,
    identities: Vec<Polynomial>,
}

impl IdentitySystem {
    pub fn new(name: &str, alphabet: &OpAlphabet, identities: Vec<Polynomial>) -> Result<Self> {
        let mut s = IdentitySystem {
            name: name.to_string(),
            alphabet: alphabet.clone(),
            identities: Vec::new(),
        };
        for f in identities {
            s.push(f)?;
        }
        Ok(s)
    }

    pub fn empty(name: &str, alphabet: &OpAlphabet) -> Self {
        IdentitySystem {
            name: name.to_string(),
            alphabet: alphabet.clone(),
            identities: Vec::new(),
        }
    }

    /// Appends an identity; zero identities are dropped.
    pub fn push(&mut self, f: Polynomial) -> Result<()> {
        if f.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.to_string(),
                found: f.alphabet().to_string(),
            });
        }
        if !f.is_zero() {
            self.identities.push(f);
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn alphabet(&self) -> &OpAlphabet {
        &self.alphabet
    }
    pub fn identities(&self) -> &[Polynomial] {
        &self.identities
    }
    pub fn len(&self) -> usize {
        self.identities.len()
    }
    pub fn is_empty(&self) -> bool {
        self.identities.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.identities
            .iter()
            .map(|f| f.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn of_degree(&self, d: usize) -> Vec<Polynomial> {
        self.identities
            .iter()
            .filter(|f| f.degree() == d)
            .cloned()
            .collect()
    }

    pub fn renamed(&self, name: &str) -> Self {
        IdentitySystem {
            name: name.to_string(),
            ..self.clone()
        }
    }
}
