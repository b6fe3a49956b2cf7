use super::alphabet::OpAlphabet;
use super::tree::Tree;
use crate::error::{Error, Result};

/// `counts[n]` is the number of association types with `n` leaves over `q`
/// operations, i.e. `Catalan(n-1) * q^(n-1)`; `counts[0] = 0`.
fn counts(d: usize, q: usize) -> Vec<u64> {
    let mut c = vec![0u64; d + 1];
    if d >= 1 {
        c[1] = 1;
    }
    for n in 2..=d {
        c[n] = (1..n).map(|k| c[k] * c[n - k] * q as u64).sum();
    }
    c
}

pub fn type_count(d: usize, q: usize) -> u64 {
    counts(d, q)[d]
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn monomial_count(d: usize, q: usize) -> usize {
    type_count(d, q) as usize * factorial(d)
}

/// Canonical index of the shape of `tree` among the association types of its
/// degree: left leaf count ascending, then left subtree index, then right
/// subtree index, then root operation.
pub fn type_index(tree: &Tree, q: usize) -> u64 {
    let d = tree.degree();
    let c = counts(d, q);
    index_with(tree, q, &c).1
}

fn index_with(tree: &Tree, q: usize, c: &[u64]) -> (usize, u64) {
    match tree {
        Tree::Leaf(_) => (1, 0),
        Tree::Node(op, l, r) => {
            let (dl, il) = index_with(l, q, c);
            let (dr, ir) = index_with(r, q, c);
            let d = dl + dr;
            let offset: u64 = (1..dl).map(|k| c[k] * c[d - k] * q as u64).sum();
            (d, offset + (il * c[dr] + ir) * q as u64 + *op as u64)
        }
    }
}

/// The association type with the given canonical index, leaves labelled
/// `0..d` from left to right.
pub fn type_tree(d: usize, index: u64, q: usize) -> Tree {
    let c = counts(d, q);
    let mut next = 0u8;
    build(d, index, q, &c, &mut next)
}

fn build(d: usize, mut index: u64, q: usize, c: &[u64], next: &mut u8) -> Tree {
    if d == 1 {
        let t = Tree::Leaf(*next);
        *next += 1;
        return t;
    }
    let mut k = 1;
    loop {
        let block = c[k] * c[d - k] * q as u64;
        if index < block {
            break;
        }
        index -= block;
        k += 1;
    }
    let op = (index % q as u64) as u8;
    let rest = index / q as u64;
    let il = rest / c[d - k];
    let ir = rest % c[d - k];
    let l = build(k, il, q, c, next);
    let r = build(d - k, ir, q, c, next);
    Tree::node(op, l, r)
}

/// Lexicographic rank of a permutation of `0..d` given as a sequence.
pub fn perm_rank(perm: &[u8]) -> usize {
    let d = perm.len();
    let mut rank = 0;
    for i in 0..d {
        let smaller = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count();
        rank += smaller * factorial(d - 1 - i);
    }
    rank
}

pub fn perm_unrank(d: usize, mut rank: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..d as u8).collect();
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let f = factorial(d - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// All permutations of `0..d` in lexicographic order.
pub fn all_perms(d: usize) -> Vec<Vec<u8>> {
    (0..factorial(d)).map(|r| perm_unrank(d, r)).collect()
}

/// An association type: a full binary tree with labelled internal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocType {
    pub index: u64,
    pub tree: Tree,
}

impl AssocType {
    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    /// Renders the bracketing with `-` in place of the leaves.
    pub fn render(&self, alphabet: &OpAlphabet) -> String {
        fn go(t: &Tree, a: &OpAlphabet, s: &mut String) {
            match t {
                Tree::Leaf(_) => s.push('-'),
                Tree::Node(op, l, r) => {
                    s.push_str(a.name(*op));
                    s.push('(');
                    go(l, a, s);
                    s.push(',');
                    go(r, a, s);
                    s.push(')');
                }
            }
        }
        let mut s = String::new();
        go(&self.tree, alphabet, &mut s);
        s
    }
}

pub fn enumerate_assoc_types(d: usize, alphabet: &OpAlphabet) -> Result<Vec<AssocType>> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = alphabet.len();
    let n = type_count(d, q);
    Ok((0..n)
        .map(|index| AssocType {
            index,
            tree: type_tree(d, index, q),
        })
        .collect())
}

/// A multilinear monomial: an association type together with the variables
/// written on its leaves from left to right (`perm[i]` is the 0-based variable
/// at leaf `i`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub type_index: u64,
    pub perm: Vec<u8>,
}

impl Monomial {
    pub fn from_tree(tree: &Tree, q: usize) -> Monomial {
        Monomial {
            type_index: type_index(tree, q),
            perm: tree.leaves(),
        }
    }

    pub fn to_tree(&self, q: usize) -> Tree {
        let shape = type_tree(self.perm.len(), self.type_index, q);
        shape.map_leaves(&mut |v| self.perm[v as usize])
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// Column of this monomial in the degree-`d` basis: type-major,
    /// permutation-lexicographic minor.
    pub fn column(&self) -> usize {
        self.type_index as usize * factorial(self.perm.len()) + perm_rank(&self.perm)
    }

    pub fn from_column(d: usize, column: usize) -> Monomial {
        let f = factorial(d);
        Monomial {
            type_index: (column / f) as u64,
            perm: perm_unrank(d, column % f),
        }
    }
}

pub fn enumerate_monomials(d: usize, alphabet: &OpAlphabet) -> Result<Vec<Monomial>> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = monomial_count(d, alphabet.len());
    Ok((0..n).map(|c| Monomial::from_column(d, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(q: usize) -> OpAlphabet {
        let names = ["nw", "ne", "sw", "se"];
        OpAlphabet::new(&names[..q]).unwrap()
    }

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn degree_three_single_op_order() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let types = enumerate_assoc_types(3, &a).unwrap();
        let rendered: Vec<_> = types.iter().map(|t| t.render(&a)).collect();
        assert_eq!(rendered, ["mul(-,mul(-,-))", "mul(mul(-,-),-)"]);
    }

    #[test]
    fn counts_match_catalan_times_powers() {
        for q in [1usize, 2, 4] {
            for d in 1..=6usize {
                let n = enumerate_assoc_types(d, &alpha(q)).unwrap().len() as u64;
                assert_eq!(n, catalan(d as u64 - 1) * (q as u64).pow(d as u32 - 1));
            }
        }
        assert_eq!(type_count(4, 1), 5);
        assert_eq!(type_count(4, 2), 40);
        assert_eq!(type_count(4, 4), 320);
        assert_eq!(monomial_count(4, 1), 120);
        assert_eq!(monomial_count(4, 2), 960);
        assert_eq!(monomial_count(4, 4), 7680);
    }

    #[test]
    fn zero_degree_rejected() {
        assert_eq!(enumerate_assoc_types(0, &alpha(1)), Err(Error::ZeroDegree));
        assert!(enumerate_monomials(0, &alpha(1)).is_err());
    }

    #[test]
    fn index_roundtrip_and_order() {
        for q in [1usize, 2, 3] {
            for d in 1..=5usize {
                let types = enumerate_assoc_types(d, &alpha(q.min(4))).unwrap();
                for (i, t) in types.iter().enumerate() {
                    assert_eq!(type_index(&t.tree, q), i as u64);
                }
                // left leaf count is non-decreasing along the order
                let left: Vec<usize> = types
                    .iter()
                    .map(|t| match &t.tree {
                        Tree::Leaf(_) => 0,
                        Tree::Node(_, l, _) => l.degree(),
                    })
                    .collect();
                assert!(left.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn perm_rank_is_lexicographic() {
        let perms = all_perms(4);
        assert_eq!(perms.len(), 24);
        for (i, p) in perms.iter().enumerate() {
            assert_eq!(perm_rank(p), i);
        }
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn monomial_columns() {
        let a = alpha(2);
        let ms = enumerate_monomials(3, &a).unwrap();
        assert_eq!(ms.len(), 48);
        for (i, m) in ms.iter().enumerate() {
            assert_eq!(m.column(), i);
            assert_eq!(Monomial::from_tree(&m.to_tree(2), 2), *m);
        }
        let d2 = enumerate_monomials(2, &alpha(1)).unwrap();
        assert_eq!(d2[0].perm, vec![0, 1]);
        assert_eq!(d2[1].perm, vec![1, 0]);
    }
}
