use super::lifting::{insert_orbits, lifting_echelon, poly_row, row_poly, PermTable};
use super::rule::ExpansionRule;
use super::system::IdentitySystem;
use crate::error::{Error, Result};
use crate::exactla::{Echelon, ExactMatrix, Field, RowSpace};
use crate::freealg::{enumerate_monomials, monomial_count, Polynomial};

/// Identities of degree `d` satisfied by the expansion of a system.
#[derive(Clone, Debug)]
pub struct NewIdentityReport<F: Field> {
    pub degree: usize,
    /// Rows and columns of the block matrix `[A 0; E I]`.
    pub block_rows: usize,
    pub block_cols: usize,
    pub generator_count: usize,
    pub lifting_dim: usize,
    /// Rank of the expansion map modulo the lifting module.
    pub expansion_rank: usize,
    /// Reduced basis of the identity module, one polynomial per row.
    pub rows: Vec<Polynomial>,
    pub module: RowSpace<F>,
    pub minimal: Vec<Polynomial>,
}

impl<F: Field> NewIdentityReport<F> {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The identity module computed directly as the kernel of `f -> E(f) mod L`:
/// solves `sum a_m E(m) = sum b_k l_k` over a basis `l_k` of the lifting
/// module and keeps the `a` parts. Slower than [`find_new_identities`]; used
/// to cross-check it.
pub fn identities_by_kernel<F: Field>(
    field: &F,
    system: &IdentitySystem,
    rule: &ExpansionRule,
    d: usize,
) -> Result<RowSpace<F>> {
    let lmod = super::lifting::lifting_module(field, system, d)?;
    let ms = enumerate_monomials(d, rule.source())?;
    let n_target = monomial_count(d, rule.target().len());
    let cols = ms.len() + lmod.dim();
    let mut sys = ExactMatrix::zeros(field.clone(), n_target, cols);
    for (j, m) in ms.iter().enumerate() {
        for (i, x) in poly_row(field, &rule.expand_monomial(m))?
            .into_iter()
            .enumerate()
        {
            sys.set(i, j, x);
        }
    }
    for (k, b) in lmod.basis().rows().iter().enumerate() {
        for (i, x) in b.iter().enumerate() {
            sys.set(i, ms.len() + k, field.neg(x));
        }
    }
    let r = sys.rref();
    let mut kernel = Vec::new();
    for fc in (0..cols).filter(|c| !r.pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[fc] = field.one();
        for (row, &p) in r.matrix.rows().iter().zip(&r.pivots) {
            v[p] = field.neg(&row[fc]);
        }
        kernel.push(v[..ms.len()].to_vec());
    }
    RowSpace::span(field.clone(), ms.len(), &kernel)
}

/// Finds every `f` of degree `d` over the rule's source alphabet whose
/// expansion is a consequence of `system`.
///
/// The block matrix has the permuted lifting generators `A` over the target
/// monomials on top and `[E I]` below, one row per source monomial. Rows of
/// its echelon form that start in the right block are the new identities.
/// The upper block is reduced first and the lower rows are then reduced
/// against it; the pivot set is that of the full matrix.
pub fn find_new_identities<F: Field>(
    field: &F,
    system: &IdentitySystem,
    rule: &ExpansionRule,
    d: usize,
) -> Result<NewIdentityReport<F>> {
    if rule.target() != system.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: system.alphabet().to_string(),
            found: rule.target().to_string(),
        });
    }
    let n_target = monomial_count(d, rule.target().len());
    let n_source = monomial_count(d, rule.source().len());
    let (upper, generator_count) = lifting_echelon(field, system, d)?;
    let lifting_dim = upper.rank();

    let mut lower = Echelon::new(field.clone(), n_target + n_source);
    for (i, m) in enumerate_monomials(d, rule.source())?.iter().enumerate() {
        let mut left = poly_row(field, &rule.expand_monomial(m))?;
        upper.reduce_all(&mut left);
        left.resize(n_target + n_source, field.zero());
        left[n_target + i] = field.one();
        lower.insert(left);
    }
    let expansion_rank = lower.pivots().iter().filter(|&&p| p < n_target).count();
    let right: Vec<Vec<F::Elem>> = lower
        .rows()
        .iter()
        .zip(lower.pivots())
        .filter(|(_, &p)| p >= n_target)
        .map(|(r, _)| r[n_target..].to_vec())
        .collect();
    let module = RowSpace::span(field.clone(), n_source, &right)?;
    let rows: Vec<Polynomial> = module
        .basis()
        .rows()
        .iter()
        .map(|r| row_poly(field, rule.source(), d, r))
        .collect();
    let minimal = minimize_generators(field, &rows, &RowSpace::zero(field.clone(), n_source))?;
    Ok(NewIdentityReport {
        degree: d,
        block_rows: generator_count * crate::freealg::factorial(d) + n_source,
        block_cols: n_target + n_source,
        generator_count,
        lifting_dim,
        expansion_rank,
        rows,
        module,
        minimal,
    })
}

fn canonical_key(p: &Polynomial) -> (usize, Vec<(usize, num_rational::BigRational)>) {
    (p.len(), p.normalized().sparse_vector())
}

/// A subset of `identities` generating the same `S_d`-module modulo `context`.
///
/// Candidates are visited fewest terms first, then in canonical order, and
/// kept when they are not in the module of the kept ones plus `context`.
/// Each survivor is then re-tested against the others and dropped if
/// redundant.
pub fn minimize_generators<F: Field>(
    field: &F,
    identities: &[Polynomial],
    context: &RowSpace<F>,
) -> Result<Vec<Polynomial>> {
    let Some(first) = identities.first() else {
        return Ok(Vec::new());
    };
    let d = first.degree();
    let n = context.ambient();
    let table = PermTable::new(d);
    let mut order: Vec<&Polynomial> = identities.iter().filter(|p| !p.is_zero()).collect();
    order.sort_by_cached_key(|p| canonical_key(p));

    let seeded = |skip: Option<usize>, kept: &[Polynomial]| -> Result<Echelon<F>> {
        let mut ech = Echelon::new(field.clone(), n);
        for r in context.basis().rows() {
            ech.insert(r.clone());
        }
        for (i, k) in kept.iter().enumerate() {
            if Some(i) != skip {
                insert_orbits(&mut ech, std::slice::from_ref(k), &table)?;
            }
        }
        Ok(ech)
    };

    let mut kept: Vec<Polynomial> = Vec::new();
    let mut ech = seeded(None, &kept)?;
    for p in order {
        if p.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: p.degree(),
            });
        }
        if !ech.contains(&poly_row(field, p)?) {
            insert_orbits(&mut ech, std::slice::from_ref(p), &table)?;
            kept.push(p.clone());
        }
    }
    let mut i = 0;
    while i < kept.len() && kept.len() > 1 {
        let others = seeded(Some(i), &kept)?;
        if others.contains(&poly_row(field, &kept[i])?) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

/// Whether `target` (expanded by `rule` when given) lies in the lifting
/// module of `system` in its degree.
pub fn is_consequence<F: Field>(
    field: &F,
    target: &Polynomial,
    system: &IdentitySystem,
    rule: Option<&ExpansionRule>,
) -> Result<bool> {
    let target = match rule {
        Some(r) => r.expand(target)?,
        None => target.clone(),
    };
    if target.alphabet() != system.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: system.alphabet().to_string(),
            found: target.alphabet().to_string(),
        });
    }
    let (ech, _) = lifting_echelon(field, system, target.degree())?;
    Ok(ech.contains(&poly_row(field, &target)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Fp101, Rationals};
    use crate::freealg::expr::{self, Context};
    use crate::freealg::OpAlphabet;
    use crate::identmod::lifting::symmetric_span;

    fn poly(a: &OpAlphabet, src: &str) -> Polynomial {
        Polynomial::from_tree_poly(&expr::parse(a, src).unwrap()).unwrap()
    }

    #[test]
    fn scalar_multiples_collapse() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = poly(&a, "mul(mul(x,y),z) - mul(x,mul(y,z))");
        let g = f.scale(&num_rational::BigRational::from_integer(2.into()));
        let ctx = RowSpace::zero(Rationals, 12);
        let m = minimize_generators(&Rationals, &[g, f.clone()], &ctx).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].normalized(), f.normalized());
    }

    #[test]
    fn commutator_of_associative_gives_jacobi_and_anticommutativity() {
        let br = OpAlphabet::new(&["br"]).unwrap();
        let mul = OpAlphabet::new(&["mul"]).unwrap();
        let rule = ExpansionRule::from_exprs(
            "comm",
            &br,
            &Context::new(&mul),
            &[("br", "mul(x,y) - mul(y,x)")],
        )
        .unwrap();
        let assoc = IdentitySystem::new(
            "assoc",
            &mul,
            vec![poly(&mul, "mul(mul(x,y),z) - mul(x,mul(y,z))")],
        )
        .unwrap();
        let r2 = find_new_identities(&Rationals, &assoc, &rule, 2).unwrap();
        assert_eq!(r2.dim(), 1);
        let r3 = find_new_identities(&Rationals, &assoc, &rule, 3).unwrap();
        // anticommutativity lifted (9 dims: 12 monomials minus 3 anticommutative ones) plus Jacobi
        let jacobi = poly(&br, "br(br(x,y),z) + br(br(y,z),x) + br(br(z,x),y)");
        let anti = IdentitySystem::new("anti", &br, vec![poly(&br, "br(x,y) + br(y,x)")]).unwrap();
        let lifted = crate::identmod::lifting_module(&Rationals, &anti, 3).unwrap();
        assert_eq!(lifted.dim(), 9);
        let want = lifted
            .sum(&symmetric_span(&Rationals, &br, 3, &[jacobi]).unwrap())
            .unwrap();
        assert!(r3.module.equal(&want).unwrap());
        assert_eq!(r3.dim(), 10);
        assert_eq!(r3.dim() + r3.expansion_rank, 12);
    }

    #[test]
    fn block_matrix_agrees_with_kernel_solve() {
        let br = OpAlphabet::new(&["br"]).unwrap();
        let mul = OpAlphabet::new(&["mul"]).unwrap();
        let rule = ExpansionRule::from_exprs(
            "anti",
            &br,
            &Context::new(&mul),
            &[("br", "mul(x,y) + mul(y,x)")],
        )
        .unwrap();
        let assoc = IdentitySystem::new(
            "assoc",
            &mul,
            vec![poly(&mul, "mul(mul(x,y),z) - mul(x,mul(y,z))")],
        )
        .unwrap();
        let report = find_new_identities(&Fp101::new(), &assoc, &rule, 3).unwrap();
        let f = Rationals;
        let brute = identities_by_kernel(&f, &assoc, &rule, 3).unwrap();
        let fast = RowSpace::span(
            f,
            12,
            &report
                .rows
                .iter()
                .map(|p| poly_row(&f, p).unwrap())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(brute.equal(&fast).unwrap());
        assert!(brute.dim() > 0);
    }

    #[test]
    fn consequence_check() {
        let mul = OpAlphabet::new(&["mul"]).unwrap();
        let assoc = IdentitySystem::new(
            "assoc",
            &mul,
            vec![poly(&mul, "mul(mul(x,y),z) - mul(x,mul(y,z))")],
        )
        .unwrap();
        let yes = poly(&mul, "mul(mul(mul(x,y),z),t) - mul(x,mul(y,mul(z,t)))");
        let no = poly(&mul, "mul(mul(mul(x,y),z),t) - mul(y,mul(x,mul(z,t)))");
        assert!(is_consequence(&Rationals, &yes, &assoc, None).unwrap());
        assert!(!is_consequence(&Rationals, &no, &assoc, None).unwrap());
    }
}
