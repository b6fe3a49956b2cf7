use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::alphabet::OpAlphabet;
use crate::error::{Error, Result};

/// A binary tree whose leaves carry 0-based variable labels and whose internal
/// vertices carry operation indices into an [`OpAlphabet`].
///
/// Derived ordering compares leaves before nodes and then lexicographically;
/// it is only used to key maps, never to define canonical column order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(u8),
    Node(u8, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(op: u8, left: Tree, right: Tree) -> Tree {
        Tree::Node(op, Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8);
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(v) => out.push(*v),
            Tree::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn contains(&self, var: u8) -> bool {
        match self {
            Tree::Leaf(v) => *v == var,
            Tree::Node(_, l, r) => l.contains(var) || r.contains(var),
        }
    }

    pub fn map_leaves(&self, f: &mut impl FnMut(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(f(*v)),
            Tree::Node(op, l, r) => Tree::node(*op, l.map_leaves(f), r.map_leaves(f)),
        }
    }

    pub fn map_ops(&self, f: &impl Fn(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(*v),
            Tree::Node(op, l, r) => Tree::node(f(*op), l.map_ops(f), r.map_ops(f)),
        }
    }

    /// Renders the tree in the text format, e.g. `prec(x1,succ(x2,x3))`.
    pub fn render(&self, alphabet: &OpAlphabet) -> String {
        self.render_with(alphabet, 'x')
    }

    /// Like [`render`](Self::render) with a different variable prefix.
    pub fn render_with(&self, alphabet: &OpAlphabet, prefix: char) -> String {
        let mut s = String::new();
        self.render_into(alphabet, prefix, &mut s);
        s
    }

    fn render_into(&self, alphabet: &OpAlphabet, prefix: char, s: &mut String) {
        match self {
            Tree::Leaf(v) => {
                let _ = write!(s, "{prefix}{}", *v as usize + 1);
            }
            Tree::Node(op, l, r) => {
                s.push_str(alphabet.name(*op));
                s.push('(');
                l.render_into(alphabet, prefix, s);
                s.push(',');
                r.render_into(alphabet, prefix, s);
                s.push(')');
            }
        }
    }
}

/// A linear combination of labelled trees with exact rational coefficients.
///
/// Unlike [`Polynomial`](super::Polynomial) the leaves may repeat variables, so
/// this is the working type for raw identities, operator words and every
/// construction that substitutes trees into trees.
#[derive(Clone, PartialEq, Eq)]
pub struct TreePoly {
    alphabet: OpAlphabet,
    terms: BTreeMap<Tree, BigRational>,
}

impl TreePoly {
    pub fn zero(alphabet: &OpAlphabet) -> Self {
        TreePoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn var(alphabet: &OpAlphabet, v: u8) -> Self {
        Self::from_tree(alphabet, Tree::Leaf(v), BigRational::one())
    }

    pub fn from_tree(alphabet: &OpAlphabet, tree: Tree, coeff: BigRational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(tree, coeff);
        p
    }

    pub fn alphabet(&self) -> &OpAlphabet {
        &self.alphabet
    }

    pub fn add_term(&mut self, tree: Tree, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(tree) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &BigRational)> {
        self.terms.iter()
    }

    // `is_zero` plays the role of `is_empty`
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(&self.alphabet);
        if c.is_zero() {
            return out;
        }
        for (t, a) in &self.terms {
            out.terms.insert(t.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &TreePoly) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TreePoly) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }

    /// The bilinear product `op(a, b)`.
    pub fn product(op: u8, a: &TreePoly, b: &TreePoly) -> Self {
        let mut out = Self::zero(&a.alphabet);
        for (ta, ca) in &a.terms {
            for (tb, cb) in &b.terms {
                out.add_term(Tree::node(op, ta.clone(), tb.clone()), ca * cb);
            }
        }
        out
    }

    /// Replaces every leaf `v` by `image(v)` and expands bilinearly.
    pub fn substitute_leaves(&self, image: &impl Fn(u8) -> TreePoly) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (t, c) in &self.terms {
            let expanded = expand_tree(t, image);
            for (tt, cc) in expanded.terms {
                out.add_term(tt, cc * c);
            }
        }
        out
    }

    /// Reinterprets the operation indices in a different alphabet.
    pub fn map_ops(&self, target: &OpAlphabet, f: &impl Fn(u8) -> u8) -> Self {
        let mut out = Self::zero(target);
        for (t, c) in &self.terms {
            out.add_term(t.map_ops(f), c.clone());
        }
        out
    }

    pub fn map_leaves(&self, f: &impl Fn(u8) -> u8) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (t, c) in &self.terms {
            out.add_term(t.map_leaves(&mut |v| f(v)), c.clone());
        }
        out
    }

    /// If every term has the leaves `0..d` each exactly once, returns `d`.
    pub fn multilinear_degree(&self) -> Result<usize> {
        let mut degree = None;
        for t in self.terms.keys() {
            let mut leaves = t.leaves();
            let d = leaves.len();
            leaves.sort_unstable();
            if leaves.iter().enumerate().any(|(i, &v)| v as usize != i) {
                return Err(Error::NotMultilinear(t.render(&self.alphabet)));
            }
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::DegreeMismatch {
                        expected: e,
                        found: d,
                    })
                }
                _ => {}
            }
        }
        degree.ok_or_else(|| Error::NotMultilinear("zero polynomial".into()))
    }
}

/// Expands a single tree with leaves replaced by polynomials.
pub(crate) fn expand_tree(tree: &Tree, image: &impl Fn(u8) -> TreePoly) -> TreePoly {
    match tree {
        Tree::Leaf(v) => image(*v),
        Tree::Node(op, l, r) => {
            TreePoly::product(*op, &expand_tree(l, image), &expand_tree(r, image))
        }
    }
}

pub fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Debug for TreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", fmt_coeff(c), t.render(&self.alphabet))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn bilinear_product_collects_terms() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let x = TreePoly::var(&a, 0);
        let y = TreePoly::var(&a, 1);
        let s = x.add(&y);
        let p = TreePoly::product(0, &s, &s);
        assert_eq!(p.len(), 4);
        let d = TreePoly::product(0, &x.scale(&q(2)), &x)
            .sub(&TreePoly::product(0, &x, &x).scale(&q(2)));
        assert!(d.is_zero());
    }

    #[test]
    fn render_uses_one_based_variables() {
        let a = OpAlphabet::new(&["prec", "succ"]).unwrap();
        let t = Tree::node(
            1,
            Tree::Leaf(0),
            Tree::node(0, Tree::Leaf(1), Tree::Leaf(2)),
        );
        assert_eq!(t.render(&a), "succ(x1,prec(x2,x3))");
        assert_eq!(t.leaves(), vec![0, 1, 2]);
    }

    #[test]
    fn multilinear_degree_detects_repeats() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let x = TreePoly::var(&a, 0);
        assert!(TreePoly::product(0, &x, &x).multilinear_degree().is_err());
        let y = TreePoly::var(&a, 1);
        assert_eq!(TreePoly::product(0, &y, &x).multilinear_degree(), Ok(2));
    }
}
