use crate::error::{Error, Result};
use crate::freealg::expr::Context;
use crate::freealg::{fmt_coeff, Monomial, OpAlphabet, Polynomial, Tree, TreePoly};

/// Replaces each source operation by a two-slot polynomial over the target
/// alphabet.
#[derive(Clone, Debug)]
pub struct ExpansionRule {
    name: String,
    source: OpAlphabet,
    target: OpAlphabet,
    images: Vec<TreePoly>,
}

impl ExpansionRule {
    /// `images[i]` is the image of source operation `i`, written in the
    /// slots `x1, x2` (equivalently `s1, s2`).
    pub fn new(
        name: &str,
        source: &OpAlphabet,
        target: &OpAlphabet,
        images: Vec<TreePoly>,
    ) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: source.len(),
                found: images.len(),
            });
        }
        for img in &images {
            if img.alphabet() != target {
                return Err(Error::AlphabetMismatch {
                    expected: target.to_string(),
                    found: img.alphabet().to_string(),
                });
            }
            if !img.is_zero() {
                let d = img.multilinear_degree()?;
                if d != 2 {
                    return Err(Error::DegreeMismatch {
                        expected: 2,
                        found: d,
                    });
                }
            }
        }
        Ok(ExpansionRule {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Builds a rule from `(source op, expression)` pairs parsed in `ctx`.
    /// Every source operation must be listed once.
    pub fn from_exprs(
        name: &str,
        source: &OpAlphabet,
        ctx: &Context,
        exprs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut images: Vec<Option<TreePoly>> = vec![None; source.len()];
        for (op, src) in exprs {
            let i = source.require(op)? as usize;
            if images[i].is_some() {
                return Err(Error::DuplicateOperation(op.to_string()));
            }
            images[i] = Some(ctx.parse(src)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                img.ok_or_else(|| {
                    Error::UnknownOperation(format!("no rule for `{}`", source.name(i as u8)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, source, ctx.alphabet(), images)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn source(&self) -> &OpAlphabet {
        &self.source
    }
    pub fn target(&self) -> &OpAlphabet {
        &self.target
    }
    pub fn image(&self, op: u8) -> &TreePoly {
        &self.images[op as usize]
    }

    pub fn expand_tree(&self, tree: &Tree) -> TreePoly {
        match tree {
            Tree::Leaf(v) => TreePoly::var(&self.target, *v),
            Tree::Node(op, l, r) => {
                let (l, r) = (self.expand_tree(l), self.expand_tree(r));
                self.images[*op as usize].substitute_leaves(&|s| {
                    if s == 0 {
                        l.clone()
                    } else {
                        r.clone()
                    }
                })
            }
        }
    }

    pub fn expand_monomial(&self, m: &Monomial) -> Polynomial {
        let tp = self.expand_tree(&m.to_tree(self.source.len()));
        Polynomial::from_tree_poly_with_degree(&tp, m.degree())
            .expect("expansion preserves multilinearity")
    }

    pub fn expand(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.alphabet() != &self.source {
            return Err(Error::AlphabetMismatch {
                expected: self.source.to_string(),
                found: p.alphabet().to_string(),
            });
        }
        let mut out = Polynomial::zero(p.degree(), &self.target);
        for (m, c) in p.terms() {
            let e = self.expand_monomial(m);
            for (mm, cc) in e.terms() {
                out.add_term(mm.clone(), cc * c);
            }
        }
        Ok(out)
    }

    /// The rule file text.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "ruleset {}\nsource {}\nops {}\n",
            self.name,
            self.source.names().join(","),
            self.target.names().join(",")
        );
        for (i, img) in self.images.iter().enumerate() {
            s.push_str(&format!("rule {} ->\n", self.source.name(i as u8)));
            for (t, c) in img.terms() {
                s.push_str(&format!(
                    "{} ; {}\n",
                    fmt_coeff(c),
                    t.render_with(&self.target, 's')
                ));
            }
        }
        s
    }
}

/// Applies `rule` to `p`.
pub fn expand(rule: &ExpansionRule, p: &Polynomial) -> Result<Polynomial> {
    rule.expand(p)
}
