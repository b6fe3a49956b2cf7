use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::alphabet::OpAlphabet;
use super::monomial::{factorial, Monomial};
use super::tree::{fmt_coeff, Tree, TreePoly};
use crate::error::{Error, Result};

/// A multilinear polynomial of fixed degree over an operation alphabet.
///
/// Terms are kept sorted by `(type_index, perm)`, which is also the column
/// order of the degree-`d` monomial basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    degree: usize,
    alphabet: OpAlphabet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(degree: usize, alphabet: &OpAlphabet) -> Self {
        Polynomial {
            degree,
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Converts a multilinear tree polynomial (leaves `0..d`, each once).
    pub fn from_tree_poly(tp: &TreePoly) -> Result<Self> {
        let d = tp.multilinear_degree()?;
        Self::from_tree_poly_with_degree(tp, d)
    }

    /// Like [`from_tree_poly`](Self::from_tree_poly) but accepts the zero
    /// polynomial, whose degree cannot be inferred.
    pub fn from_tree_poly_with_degree(tp: &TreePoly, degree: usize) -> Result<Self> {
        if !tp.is_zero() {
            let d = tp.multilinear_degree()?;
            if d != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
        }
        let q = tp.alphabet().len();
        let mut p = Self::zero(degree, tp.alphabet());
        for (t, c) in tp.terms() {
            p.add_term(Monomial::from_tree(t, q), c.clone());
        }
        Ok(p)
    }

    pub fn to_tree_poly(&self) -> TreePoly {
        let q = self.alphabet.len();
        let mut tp = TreePoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            tp.add_term(m.to_tree(q), c.clone());
        }
        tp
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alphabet(&self) -> &OpAlphabet {
        &self.alphabet
    }

    // `is_zero` plays the role of `is_empty`
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.to_string(),
                found: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree, &self.alphabet);
        if !c.is_zero() {
            for (m, a) in &self.terms {
                out.terms.insert(m.clone(), a * c);
            }
        }
        out
    }

    /// Permutes variable subscripts: `x_i -> x_{perm[i]}` (0-based).
    pub fn act(&self, perm: &[u8]) -> Result<Self> {
        if perm.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: perm.len(),
            });
        }
        let mut out = Self::zero(self.degree, &self.alphabet);
        for (m, c) in &self.terms {
            let moved = Monomial {
                type_index: m.type_index,
                perm: m.perm.iter().map(|&v| perm[v as usize]).collect(),
            };
            out.terms.insert(moved, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `q` for the variable `var` (0-based).
    ///
    /// The variables of `q` take the positions `var, var+1, ...` and the
    /// variables of `self` above `var` shift up by `deg q - 1`, so the result
    /// is multilinear in `0..deg self + deg q - 1`.
    pub fn substitute(&self, var: usize, q: &Polynomial) -> Result<Self> {
        if var >= self.degree {
            return Err(Error::MissingVariable(var + 1));
        }
        if self.alphabet != q.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.to_string(),
                found: q.alphabet.to_string(),
            });
        }
        let shift = q.degree as u8 - 1;
        let v = var as u8;
        let inner = q.to_tree_poly().map_leaves(&|w| w + v);
        let placeholder = u8::MAX;
        // the host leaf is tagged first so shifted labels cannot collide with it
        let tagged = self.to_tree_poly().map_leaves(&|w| {
            if w == v {
                placeholder
            } else if w > v {
                w + shift
            } else {
                w
            }
        });
        let alphabet = self.alphabet.clone();
        let result = tagged.substitute_leaves(&|w| {
            if w == placeholder {
                inner.clone()
            } else {
                TreePoly::var(&alphabet, w)
            }
        });
        Self::from_tree_poly_with_degree(&result, self.degree + q.degree - 1)
    }

    /// `op(self, x_{d+1})` when `self_on_left`, otherwise `op(x_{d+1}, self)`.
    pub fn outer_product(&self, op: u8, self_on_left: bool) -> Self {
        let fresh = TreePoly::var(&self.alphabet, self.degree as u8);
        let tp = self.to_tree_poly();
        let prod = if self_on_left {
            TreePoly::product(op, &tp, &fresh)
        } else {
            TreePoly::product(op, &fresh, &tp)
        };
        Self::from_tree_poly_with_degree(&prod, self.degree + 1)
            .expect("outer product is multilinear")
    }

    /// Projective normal form: integer coefficients with gcd 1 and a positive
    /// first coefficient. Two polynomials define the same identity up to a
    /// nonzero scalar iff their normal forms agree.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm_den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let sign = if ints[0].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut out = Self::zero(self.degree, &self.alphabet);
        for ((m, _), n) in self.terms.iter().zip(ints) {
            out.terms
                .insert(m.clone(), BigRational::from_integer(&n / &g * &sign));
        }
        out
    }

    /// Nonzero entries of the coefficient vector in the monomial basis.
    pub fn sparse_vector(&self) -> Vec<(usize, BigRational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.column(), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn from_sparse(
        degree: usize,
        alphabet: &OpAlphabet,
        entries: &[(usize, BigRational)],
    ) -> Self {
        let mut p = Self::zero(degree, alphabet);
        for (col, c) in entries {
            p.add_term(Monomial::from_column(degree, *col), c.clone());
        }
        p
    }

    pub fn dense_vector(&self) -> Vec<BigRational> {
        let n = super::monomial::type_count(self.degree, self.alphabet.len()) as usize
            * factorial(self.degree);
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.sparse_vector() {
            v[i] = c;
        }
        v
    }

    /// Moves the polynomial to `target`, mapping operations by name through
    /// `rename` (identity when a name is absent from the map).
    pub fn rename_ops(&self, target: &OpAlphabet, rename: &[(&str, &str)]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.alphabet.len());
        for name in self.alphabet.names() {
            let new = rename
                .iter()
                .find(|(from, _)| from == name)
                .map(|(_, to)| *to)
                .unwrap_or(name.as_str());
            map.push(target.require(new)?);
        }
        let tp = self.to_tree_poly().map_ops(target, &|op| map[op as usize]);
        Self::from_tree_poly_with_degree(&tp, self.degree)
    }

    /// One term per line: `<coeff> ; <tree>`.
    pub fn to_text(&self) -> String {
        let q = self.alphabet.len();
        let mut s = String::new();
        for (m, c) in &self.terms {
            s.push_str(&fmt_coeff(c));
            s.push_str(" ; ");
            s.push_str(&m.to_tree(q).render(&self.alphabet));
            s.push('\n');
        }
        s
    }

    pub fn trees(&self) -> Vec<(Tree, BigRational)> {
        let q = self.alphabet.len();
        self.terms
            .iter()
            .map(|(m, c)| (m.to_tree(q), c.clone()))
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let q = self.alphabet.len();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let tree = m.to_tree(q).render(&self.alphabet);
            let mag = fmt_coeff(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != "1" {
                write!(f, "{mag} ")?;
            }
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Polynomial[d={}, {}]({})",
            self.degree, self.alphabet, self
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::expr::parse;

    fn mul() -> OpAlphabet {
        OpAlphabet::new(&["mul"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::from_tree_poly(&parse(&mul(), s).unwrap()).unwrap()
    }

    #[test]
    fn transposition_swaps_factors() {
        let x12 = p("mul(x1,x2)");
        assert_eq!(x12.act(&[1, 0]).unwrap(), p("mul(x2,x1)"));
        assert_eq!(x12.act(&[0, 1]).unwrap(), x12);
        assert!(x12.act(&[0, 1, 2]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let x12 = p("mul(x1,x2)");
        assert_eq!(x12.substitute(1, &x12).unwrap(), p("mul(x1,mul(x2,x3))"));
        assert_eq!(x12.substitute(0, &x12).unwrap(), p("mul(mul(x1,x2),x3)"));
        assert_eq!(x12.substitute(2, &x12), Err(Error::MissingVariable(3)));
        // host variables after the slot shift past the inserted block
        let assoc = p("mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3))");
        let got = assoc.substitute(1, &x12).unwrap();
        assert_eq!(
            got,
            p("mul(mul(x1,mul(x2,x3)),x4) - mul(x1,mul(mul(x2,x3),x4))")
        );
    }

    #[test]
    fn normal_form() {
        let f = p("-2 mul(x1,x2) + 4 mul(x2,x1)");
        let n = f.normalized();
        assert_eq!(n, p("mul(x1,x2) - 2 mul(x2,x1)"));
        assert_eq!(n.normalized(), n);
        assert_eq!(
            f.scale(&BigRational::new(3.into(), 7.into())).normalized(),
            n
        );
    }

    #[test]
    fn outer_products_introduce_last_variable() {
        let x12 = p("mul(x1,x2)");
        assert_eq!(x12.outer_product(0, true), p("mul(mul(x1,x2),x3)"));
        assert_eq!(x12.outer_product(0, false), p("mul(x3,mul(x1,x2))"));
    }

    #[test]
    fn text_and_display() {
        let f = p("mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3))");
        assert_eq!(
            f.to_text(),
            "-1 ; mul(x1,mul(x2,x3))\n1 ; mul(mul(x1,x2),x3)\n"
        );
        assert_eq!(f.to_string(), "-mul(x1,mul(x2,x3)) + mul(mul(x1,x2),x3)");
    }

    #[test]
    fn sparse_vector_roundtrip() {
        let f = p("mul(mul(x1,x2),x3) - 3 mul(x2,mul(x3,x1))");
        let v = f.sparse_vector();
        assert_eq!(Polynomial::from_sparse(3, &mul(), &v), f);
        assert_eq!(f.dense_vector().len(), 12);
    }
}
