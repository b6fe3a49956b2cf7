use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::freealg::text::parse_coeff;
use crate::freealg::{fmt_coeff, OpAlphabet, Polynomial, Tree, TreePoly};
use crate::identmod::{ExpansionRule, IdentitySystem};

pub type Vector = Vec<BigRational>;

/// A finite-dimensional algebra given by structure constants:
/// `e_i op e_j = sum_k c[op][i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructConstAlgebra {
    dim: usize,
    alphabet: OpAlphabet,
    // per op, flattened n*n*n
    tensors: Vec<Vec<BigRational>>,
}

impl StructConstAlgebra {
    /// The algebra with every product zero.
    pub fn zero(alphabet: &OpAlphabet, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let cube = dim * dim * dim;
        Ok(StructConstAlgebra {
            dim,
            alphabet: alphabet.clone(),
            tensors: vec![vec![BigRational::zero(); cube]; alphabet.len()],
        })
    }

    /// Builds an algebra from `(op, i, j, k, coeff)` entries with 0-based indices.
    pub fn from_entries(
        alphabet: &OpAlphabet,
        dim: usize,
        entries: &[(&str, usize, usize, usize, i64)],
    ) -> Result<Self> {
        let mut a = Self::zero(alphabet, dim)?;
        for &(op, i, j, k, c) in entries {
            let op = alphabet.require(op)?;
            a.set(op, i, j, k, BigRational::from_integer(c.into()))?;
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphabet(&self) -> &OpAlphabet {
        &self.alphabet
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: i + 1,
            });
        }
        Ok(())
    }

    pub fn get(&self, op: u8, i: usize, j: usize, k: usize) -> &BigRational {
        &self.tensors[op as usize][self.at(i, j, k)]
    }

    pub fn set(&mut self, op: u8, i: usize, j: usize, k: usize, c: BigRational) -> Result<()> {
        for x in [i, j, k] {
            self.check_index(x)?;
        }
        let at = self.at(i, j, k);
        self.tensors[op as usize][at] = c;
        Ok(())
    }

    /// True when every structure constant vanishes.
    pub fn is_zero(&self) -> bool {
        self.tensors.iter().all(|t| t.iter().all(Zero::is_zero))
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = vec![BigRational::zero(); self.dim];
        v[i] = BigRational::one();
        v
    }

    /// `x op y` for arbitrary vectors.
    pub fn product(&self, op: u8, x: &[BigRational], y: &[BigRational]) -> Vector {
        let n = self.dim;
        let t = &self.tensors[op as usize];
        let mut out = vec![BigRational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let base = self.at(i, j, 0);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &t[base + k];
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Evaluates a tree whose leaf `v` is `args[v]`.
    pub fn eval_tree(&self, tree: &Tree, args: &[Vector]) -> Vector {
        match tree {
            Tree::Leaf(v) => args[*v as usize].clone(),
            Tree::Node(op, l, r) => {
                self.product(*op, &self.eval_tree(l, args), &self.eval_tree(r, args))
            }
        }
    }

    /// Evaluates a polynomial over an alphabet whose names all occur in this algebra.
    pub fn eval(&self, p: &Polynomial, args: &[Vector]) -> Result<Vector> {
        if args.len() != p.degree() {
            return Err(Error::DegreeMismatch {
                expected: p.degree(),
                found: args.len(),
            });
        }
        let map = self.op_map(p.alphabet())?;
        let trees: Vec<(Tree, BigRational)> = p
            .trees()
            .into_iter()
            .map(|(t, c)| (t.map_ops(&|o| map[o as usize]), c))
            .collect();
        Ok(self.eval_terms(&trees, args))
    }

    fn eval_terms(&self, terms: &[(Tree, BigRational)], args: &[Vector]) -> Vector {
        let mut out = vec![BigRational::zero(); self.dim];
        for (t, c) in terms {
            for (o, v) in out.iter_mut().zip(self.eval_tree(t, args)) {
                *o += c * v;
            }
        }
        out
    }

    /// Positions in this algebra of the operations of `other`, matched by name.
    fn op_map(&self, other: &OpAlphabet) -> Result<Vec<u8>> {
        other
            .names()
            .iter()
            .map(|n| self.alphabet.require(n))
            .collect()
    }

    /// Checks every identity of `system` on all basis tuples, which suffices
    /// by multilinearity. Reports the first failure in identity order, then
    /// lexicographic tuple order.
    pub fn satisfies(&self, system: &IdentitySystem) -> Result<Verdict> {
        let map = self.op_map(system.alphabet())?;
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis(i)).collect();
        for (idx, f) in system.identities().iter().enumerate() {
            let terms: Vec<(Tree, BigRational)> = f
                .trees()
                .into_iter()
                .map(|(t, c)| (t.map_ops(&|o| map[o as usize]), c))
                .collect();
            let d = f.degree();
            let mut tuple = vec![0usize; d];
            loop {
                let args: Vec<Vector> = tuple.iter().map(|&i| basis[i].clone()).collect();
                let value = self.eval_terms(&terms, &args);
                if value.iter().any(|x| !x.is_zero()) {
                    return Ok(Verdict::Fail {
                        identity: idx,
                        tuple,
                        value,
                    });
                }
                if !next_tuple(&mut tuple, self.dim) {
                    break;
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// The algebra over `rule.source()` whose products are the rule's images
    /// evaluated here, e.g. the horizontal structure of a quadrialgebra.
    pub fn pull_back(&self, rule: &ExpansionRule) -> Result<Self> {
        let map = self.op_map(rule.target())?;
        let mut out = Self::zero(rule.source(), self.dim)?;
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.basis(i)).collect();
        for op in 0..rule.source().len() as u8 {
            let image: &TreePoly = rule.image(op);
            let terms: Vec<(Tree, BigRational)> = image
                .terms()
                .map(|(t, c)| (t.map_ops(&|o| map[o as usize]), c.clone()))
                .collect();
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = self.eval_terms(&terms, &[basis[i].clone(), basis[j].clone()]);
                    for (k, c) in v.into_iter().enumerate() {
                        let at = out.at(i, j, k);
                        out.tensors[op as usize][at] = c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Keeps only the named operations, in the given order.
    pub fn restrict(&self, ops: &[&str]) -> Result<Self> {
        let alphabet = OpAlphabet::new(ops)?;
        let tensors = ops
            .iter()
            .map(|o| Ok(self.tensors[self.alphabet.require(o)? as usize].clone()))
            .collect::<Result<_>>()?;
        Ok(StructConstAlgebra {
            dim: self.dim,
            alphabet,
            tensors,
        })
    }

    /// Parses the structure-constant format:
    ///
    /// ```text
    /// dim 2
    /// ops br
    /// br 1 2 -> 2:1
    /// br 2 1 -> 2:-1
    /// ```
    ///
    /// Indices are 1-based. The `ops` line is optional; without it the
    /// operations are those named in product lines, in order of appearance.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut dim = None;
        let mut names: Vec<String> = Vec::new();
        let mut products = Vec::new();
        for (n, raw) in src.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| Error::Parse { line, msg };
            let s = raw.split('#').next().unwrap_or("").trim();
            if s.is_empty() {
                continue;
            }
            if let Some(rest) = s.strip_prefix("dim ") {
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad dimension `{rest}`")))?;
                dim = Some(d);
                continue;
            }
            if let Some(rest) = s.strip_prefix("ops ") {
                for o in rest.split(',').map(str::trim).filter(|o| !o.is_empty()) {
                    if !names.iter().any(|x| x == o) {
                        names.push(o.to_string());
                    }
                }
                continue;
            }
            let (lhs, rhs) = s
                .split_once("->")
                .ok_or_else(|| err(format!("expected `op i j -> k:c,...`, got `{s}`")))?;
            let parts: Vec<&str> = lhs.split_whitespace().collect();
            let [op, i, j] = parts[..] else {
                return Err(err(format!("expected `op i j` before `->`, got `{lhs}`")));
            };
            let idx = |t: &str| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| err(format!("bad index `{t}`")))
            };
            let (i, j) = (idx(i)? - 1, idx(j)? - 1);
            let mut terms = Vec::new();
            for t in rhs.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let (k, c) = t
                    .split_once(':')
                    .ok_or_else(|| err(format!("expected `k:coeff`, got `{t}`")))?;
                let c = parse_coeff(c).ok_or_else(|| err(format!("bad coefficient `{c}`")))?;
                terms.push((idx(k.trim())? - 1, c));
            }
            if !names.iter().any(|x| x == op) {
                names.push(op.to_string());
            }
            products.push((line, op.to_string(), i, j, terms));
        }
        let dim = dim.ok_or(Error::Parse {
            line: 0,
            msg: "missing `dim` header".into(),
        })?;
        if names.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "no operations".into(),
            });
        }
        let alphabet = OpAlphabet::new(&names)?;
        let mut a = Self::zero(&alphabet, dim)?;
        for (line, op, i, j, terms) in products {
            let op = alphabet.require(&op)?;
            for (k, c) in terms {
                a.set(op, i, j, k, c).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            }
        }
        Ok(a)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "dim {}\nops {}\n",
            self.dim,
            self.alphabet.names().join(",")
        );
        for (op, name) in self.alphabet.names().iter().enumerate() {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let terms: Vec<String> = (0..self.dim)
                        .filter_map(|k| {
                            let c = self.get(op as u8, i, j, k);
                            (!c.is_zero()).then(|| format!("{}:{}", k + 1, fmt_coeff(c)))
                        })
                        .collect();
                    if !terms.is_empty() {
                        let _ = writeln!(s, "{name} {} {} -> {}", i + 1, j + 1, terms.join(","));
                    }
                }
            }
        }
        s
    }
}

fn next_tuple(t: &mut [usize], n: usize) -> bool {
    for x in t.iter_mut().rev() {
        *x += 1;
        if *x < n {
            return true;
        }
        *x = 0;
    }
    false
}

/// Outcome of [`StructConstAlgebra::satisfies`]. Tuples are 0-based basis indices.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail {
        identity: usize,
        tuple: Vec<usize>,
        value: Vector,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// A linear map on `F^n`; column `j` holds the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinOp {
    m: Vec<Vec<BigRational>>,
}

impl LinOp {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
        Ok(LinOp { m: rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        LinOp {
            m: vec![vec![BigRational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::zero(n);
        for i in 0..n {
            r.m[i][i] = BigRational::one();
        }
        r
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.m
    }

    pub fn apply(&self, v: &[BigRational]) -> Vector {
        self.m
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        let n = self.dim();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..n).map(|k| &self.m[i][k] * &other.m[k][j]).sum();
            }
        }
        LinOp { m }
    }

    pub fn commutes_with(&self, other: &LinOp) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Parses `n` followed by `n` rows of scalars.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty operator file".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad size `{first}`"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (line, l) in lines {
            let row = l
                .split_whitespace()
                .map(|t| {
                    parse_coeff(t).ok_or_else(|| Error::Parse {
                        line,
                        msg: format!("bad scalar `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {n} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.dim());
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(fmt_coeff).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::samples;
    use crate::varieties::get_system;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn lie_bracket_products() {
        let a = samples::lie_2d();
        assert_eq!(a.product(0, &a.basis(0), &a.basis(1)), vec![q(0), q(1)]);
        assert_eq!(a.product(0, &a.basis(1), &a.basis(0)), vec![q(0), q(-1)]);
        assert_eq!(a.product(0, &a.basis(0), &a.basis(0)), vec![q(0), q(0)]);
    }

    #[test]
    fn zero_algebra_satisfies_anything() {
        for name in ["sagle", "pre-malcev", "alt-quadri"] {
            let s = get_system(name).unwrap();
            let a = StructConstAlgebra::zero(s.alphabet(), 2).unwrap();
            assert!(a.satisfies(&s).unwrap().is_pass(), "{name}");
        }
    }

    #[test]
    fn lie_algebras_are_malcev() {
        for a in [samples::lie_2d(), samples::sl2()] {
            assert!(a
                .satisfies(&get_system("sagle").unwrap())
                .unwrap()
                .is_pass());
            assert!(a
                .satisfies(&get_system("malcev").unwrap())
                .unwrap()
                .is_pass());
        }
    }

    #[test]
    fn failure_reports_first_tuple() {
        // a nonzero product is not associative-and-anticommutative at once
        let s = get_system("sagle").unwrap();
        let a = StructConstAlgebra::from_entries(s.alphabet(), 1, &[("br", 0, 0, 0, 1)]).unwrap();
        let v = a.satisfies(&s).unwrap();
        assert_eq!(
            v,
            Verdict::Fail {
                identity: 0,
                tuple: vec![0, 0],
                value: vec![q(2)]
            }
        );
    }

    #[test]
    fn text_roundtrip() {
        for a in [
            samples::sl2(),
            samples::octonions(),
            samples::sagle_malcev(),
        ] {
            assert_eq!(StructConstAlgebra::from_text(&a.to_text()).unwrap(), a);
        }
        let a =
            StructConstAlgebra::from_text("# comment\ndim 2\nbr 1 2 -> 2:1\nbr 2 1 -> 2:-1/1\n")
                .unwrap();
        assert_eq!(a, samples::lie_2d());
        assert!(matches!(
            StructConstAlgebra::from_text("dim 2\nbr 1 3 -> 1:1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(StructConstAlgebra::from_text("br 1 1 -> 1:1\n").is_err());
    }

    #[test]
    fn operator_text_and_composition() {
        let r = LinOp::from_i64(&[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(LinOp::from_text(&r.to_text()).unwrap(), r);
        assert_eq!(r.compose(&r), LinOp::zero(2));
        assert_eq!(r.apply(&[q(3), q(5)]), vec![q(5), q(0)]);
        assert!(r.commutes_with(&LinOp::identity(2)));
        assert!(!r.commutes_with(&LinOp::from_i64(&[&[1, 0], &[0, 0]]).unwrap()));
        assert!(LinOp::from_text("2\n1 0\n").is_err());
    }

    #[test]
    fn pull_back_along_the_commutator() {
        let assoc = samples::upper_triangular();
        let lie = assoc
            .pull_back(&crate::varieties::get_rule("commutator").unwrap())
            .unwrap();
        assert!(lie
            .satisfies(&get_system("malcev").unwrap())
            .unwrap()
            .is_pass());
        let x = assoc.basis(0);
        let y = assoc.basis(1);
        let want: Vector = assoc
            .product(0, &x, &y)
            .iter()
            .zip(assoc.product(0, &y, &x))
            .map(|(a, b)| a - b)
            .collect();
        assert_eq!(lie.product(0, &x, &y), want);
    }
}
