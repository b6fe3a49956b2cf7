//! The disuccessor: splitting every operation `op` into `op_prec`/`op_succ`
//! along the path from the root to a chosen variable.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::freealg::{OpAlphabet, Polynomial, Tree, TreePoly};
use crate::identmod::{ExpansionRule, IdentitySystem};

/// The doubled alphabet: `op_prec, op_succ` for each source operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitAlphabetMap {
    source: OpAlphabet,
    target: OpAlphabet,
}

impl SplitAlphabetMap {
    pub fn new(source: &OpAlphabet) -> Self {
        let names: Vec<String> = source
            .names()
            .iter()
            .flat_map(|n| [format!("{n}_prec"), format!("{n}_succ")])
            .collect();
        let target = OpAlphabet::new(&names).expect("split names are distinct");
        SplitAlphabetMap {
            source: source.clone(),
            target,
        }
    }

    pub fn source(&self) -> &OpAlphabet {
        &self.source
    }
    pub fn target(&self) -> &OpAlphabet {
        &self.target
    }
    pub fn prec(&self, op: u8) -> u8 {
        2 * op
    }
    pub fn succ(&self, op: u8) -> u8 {
        2 * op + 1
    }

    /// Every vertex `op` becomes `op_prec + op_succ`.
    pub fn sum_rule(&self) -> ExpansionRule {
        let images = (0..self.source.len() as u8)
            .map(|op| {
                let (a, b) = (
                    TreePoly::var(&self.target, 0),
                    TreePoly::var(&self.target, 1),
                );
                TreePoly::product(self.prec(op), &a, &b).add(&TreePoly::product(
                    self.succ(op),
                    &a,
                    &b,
                ))
            })
            .collect();
        ExpansionRule::new("split-sum", &self.source, &self.target, images)
            .expect("sum rule is well formed")
    }

    fn summed(&self, t: &Tree) -> TreePoly {
        match t {
            Tree::Leaf(v) => TreePoly::var(&self.target, *v),
            Tree::Node(op, l, r) => {
                let (l, r) = (self.summed(l), self.summed(r));
                TreePoly::product(self.prec(*op), &l, &r).add(&TreePoly::product(
                    self.succ(*op),
                    &l,
                    &r,
                ))
            }
        }
    }

    fn split_tree(&self, t: &Tree, k: u8) -> TreePoly {
        match t {
            Tree::Node(op, l, r) if l.contains(k) => {
                TreePoly::product(self.prec(*op), &self.split_tree(l, k), &self.summed(r))
            }
            Tree::Node(op, l, r) if r.contains(k) => {
                TreePoly::product(self.succ(*op), &self.summed(l), &self.split_tree(r, k))
            }
            _ => self.summed(t),
        }
    }

    /// The split of `f` along the variable `k` (0-based).
    pub fn split_along(&self, f: &Polynomial, k: usize) -> Result<Polynomial> {
        if f.alphabet() != &self.source {
            return Err(Error::AlphabetMismatch {
                expected: self.source.to_string(),
                found: f.alphabet().to_string(),
            });
        }
        if k >= f.degree() {
            return Err(Error::MissingVariable(k + 1));
        }
        let mut out = TreePoly::zero(&self.target);
        for (t, c) in f.trees() {
            out = out.add(&self.split_tree(&t, k as u8).scale(&c));
        }
        Polynomial::from_tree_poly_with_degree(&out, f.degree())
    }
}

/// The `d` identities obtained from a degree-`d` identity, one per variable.
pub fn disuccessor(f: &Polynomial) -> Result<Vec<Polynomial>> {
    let map = SplitAlphabetMap::new(f.alphabet());
    (0..f.degree()).map(|k| map.split_along(f, k)).collect()
}

/// Splits every identity of a system; zero and repeated (up to a scalar)
/// results are dropped.
pub fn disuccessor_system(system: &IdentitySystem) -> Result<IdentitySystem> {
    let map = SplitAlphabetMap::new(system.alphabet());
    let mut out = IdentitySystem::empty(&format!("di-{}", system.name()), map.target());
    let mut seen = HashSet::new();
    for f in system.identities() {
        for k in 0..f.degree() {
            let g = map.split_along(f, k)?;
            if !g.is_zero() && seen.insert(g.normalized().sparse_vector()) {
                out.push(g)?;
            }
        }
    }
    Ok(out)
}

/// Renames the split operations of every identity, e.g. `mul_prec -> tl`.
pub fn rename_system(
    system: &IdentitySystem,
    target: &OpAlphabet,
    rename: &[(&str, &str)],
    name: &str,
) -> Result<IdentitySystem> {
    let ids = system
        .identities()
        .iter()
        .map(|f| f.rename_ops(target, rename))
        .collect::<Result<Vec<_>>>()?;
    IdentitySystem::new(name, target, ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::all_perms;
    use crate::varieties::{dendriform_context, get_system, product_context};
    use proptest::prelude::*;

    fn assoc() -> Polynomial {
        Polynomial::from_tree_poly(&product_context().parse("assoc(x,y,z)").unwrap()).unwrap()
    }

    #[test]
    fn associativity_splits_into_dendriform_axioms() {
        let parts = disuccessor(&assoc()).unwrap();
        let dend = dendriform_context();
        let renamed: Vec<Polynomial> = parts
            .iter()
            .map(|p| {
                p.rename_ops(
                    dend.alphabet(),
                    &[("mul_prec", "prec"), ("mul_succ", "succ")],
                )
                .unwrap()
            })
            .collect();
        assert_eq!(renamed, get_system("dendriform").unwrap().identities());
    }

    #[test]
    fn degree_one_is_unchanged() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let x = Polynomial::from_tree_poly(&TreePoly::var(&a, 0)).unwrap();
        let s = disuccessor(&x).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].len(), 1);
        assert_eq!(s[0].degree(), 1);
    }

    #[test]
    fn split_names() {
        let m = SplitAlphabetMap::new(&OpAlphabet::new(&["prec", "succ"]).unwrap());
        assert_eq!(
            m.target().names(),
            ["prec_prec", "prec_succ", "succ_prec", "succ_succ"]
        );
    }

    #[test]
    fn collapse_on_catalog() {
        for name in crate::varieties::system_names() {
            let sys = get_system(name).unwrap();
            let map = SplitAlphabetMap::new(sys.alphabet());
            let rule = map.sum_rule();
            for f in sys.identities() {
                let parts = disuccessor(f).unwrap();
                assert_eq!(parts.len(), f.degree());
                let mut sum = Polynomial::zero(f.degree(), map.target());
                for p in &parts {
                    sum = sum.add(p).unwrap();
                }
                assert_eq!(sum, rule.expand(f).unwrap(), "{name}");
            }
        }
    }

    fn random_poly() -> impl Strategy<Value = Polynomial> {
        let a = OpAlphabet::new(&["mul", "br"]).unwrap();
        let n = crate::freealg::monomial_count(4, 2);
        prop::collection::vec((0..n, -3i64..=3), 1..6).prop_map(move |entries| {
            let e: Vec<_> = entries
                .into_iter()
                .map(|(c, v)| (c, num_rational::BigRational::from_integer(v.into())))
                .collect();
            Polynomial::from_sparse(4, &a, &e)
        })
    }

    proptest! {
        #[test]
        fn split_is_equivariant(f in random_poly(), s in 0usize..24, k in 0usize..4) {
            let map = SplitAlphabetMap::new(f.alphabet());
            let sigma = &all_perms(4)[s];
            let lhs = map.split_along(&f, k).unwrap().act(sigma).unwrap();
            let rhs = map.split_along(&f.act(sigma).unwrap(), sigma[k] as usize).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
