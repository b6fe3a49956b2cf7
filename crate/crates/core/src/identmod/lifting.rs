use std::collections::HashSet;

use num_rational::BigRational;

use super::system::IdentitySystem;
use crate::error::{Error, Result};
use crate::exactla::{Echelon, Field, RowSpace};
use crate::freealg::{
    all_perms, factorial, monomial_count, perm_rank, perm_unrank, OpAlphabet, Polynomial, TreePoly,
};

/// Largest ambient dimension accepted by the module routines.
pub const MAX_AMBIENT: usize = 60_000;

/// Liftings of a degree-`d` identity to degree `d+1`.
///
/// For every operation: `x_i <- op(x_i, x_{d+1})` for each `i`, then
/// `op(f, x_{d+1})` and `op(x_{d+1}, f)`. Zero results and scalar multiples
/// of earlier results are dropped.
pub fn liftings(f: &Polynomial) -> Vec<Polynomial> {
    let d = f.degree();
    let alphabet = f.alphabet();
    let tp = f.to_tree_poly();
    let fresh = TreePoly::var(alphabet, d as u8);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut keep = |p: Polynomial, out: &mut Vec<Polynomial>| {
        if !p.is_zero() && seen.insert(p.normalized().sparse_vector()) {
            out.push(p);
        }
    };
    for op in 0..alphabet.len() as u8 {
        for i in 0..d as u8 {
            let lifted = tp.substitute_leaves(&|v| {
                let x = TreePoly::var(alphabet, v);
                if v == i {
                    TreePoly::product(op, &x, &fresh)
                } else {
                    x
                }
            });
            keep(
                Polynomial::from_tree_poly_with_degree(&lifted, d + 1)
                    .expect("lifting is multilinear"),
                &mut out,
            );
        }
        keep(f.outer_product(op, true), &mut out);
        keep(f.outer_product(op, false), &mut out);
    }
    out
}

/// Generators of the degree-`target` lifting module: identities of that
/// degree as they are, lower ones lifted repeatedly (deduplicated each round).
/// Identities of higher degree have no consequences in degree `target`.
pub fn lifting_generators(system: &IdentitySystem, target: usize) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    for f in system.identities() {
        if f.degree() > target {
            continue;
        }
        let mut round = vec![f.clone()];
        for _ in f.degree()..target {
            let mut seen = HashSet::new();
            round = round
                .iter()
                .flat_map(liftings)
                .filter(|g| seen.insert(g.normalized().sparse_vector()))
                .collect();
        }
        gens.extend(round);
    }
    Ok(gens)
}

/// Column permutation tables for the `S_d` action on the monomial basis.
pub struct PermTable {
    d: usize,
    dfact: usize,
    // table[s][r] = rank of perms[s] composed with the permutation of rank r
    table: Vec<Vec<u32>>,
}

impl PermTable {
    pub fn new(d: usize) -> Self {
        let perms = all_perms(d);
        let dfact = factorial(d);
        let table = perms
            .iter()
            .map(|s| {
                (0..dfact)
                    .map(|r| {
                        let p: Vec<u8> = perm_unrank(d, r).iter().map(|&v| s[v as usize]).collect();
                        perm_rank(&p) as u32
                    })
                    .collect()
            })
            .collect();
        PermTable { d, dfact, table }
    }

    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn len(&self) -> usize {
        self.dfact
    }
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The column of `perm_s . m` where `m` sits at column `col`.
    #[inline]
    pub fn apply(&self, s: usize, col: usize) -> usize {
        let (t, r) = (col / self.dfact, col % self.dfact);
        t * self.dfact + self.table[s][r] as usize
    }
}

fn check_ambient(d: usize, q: usize) -> Result<usize> {
    let n = monomial_count(d, q);
    if n > MAX_AMBIENT {
        return Err(Error::DegreeTooLarge(d));
    }
    Ok(n)
}

/// Every permutation of every polynomial as dense rows, permutation-major:
/// for each permutation in lexicographic order, the polynomials in order.
fn orbit_rows<'a, F: Field>(
    field: &'a F,
    n: usize,
    polys: &[Polynomial],
    table: &'a PermTable,
) -> Result<impl Iterator<Item = Vec<F::Elem>> + 'a> {
    let mut sparse = Vec::with_capacity(polys.len());
    for p in polys {
        if p.degree() != table.degree() {
            return Err(Error::DegreeMismatch {
                expected: table.degree(),
                found: p.degree(),
            });
        }
        let entries: Vec<(usize, F::Elem)> = p
            .sparse_vector()
            .iter()
            .map(|(c, v)| Ok((*c, field.from_rational(v)?)))
            .collect::<Result<_>>()?;
        sparse.push(entries);
    }
    Ok((0..table.len()).flat_map(move |s| {
        let sparse = sparse.clone();
        sparse.into_iter().map(move |entries| {
            let mut row = vec![field.zero(); n];
            for (c, v) in entries {
                row[table.apply(s, c)] = v;
            }
            row
        })
    }))
}

/// Inserts every permutation of every polynomial into `ech`, in the order
/// of [`lifting_basis`].
pub fn insert_orbits<F: Field>(
    ech: &mut Echelon<F>,
    polys: &[Polynomial],
    table: &PermTable,
) -> Result<()> {
    let field = ech.field().clone();
    for row in orbit_rows(&field, ech.ncols(), polys, table)? {
        ech.insert(row);
    }
    Ok(())
}

/// A basis of the degree-`d` lifting module made of actual permuted liftings:
/// the rows that raise the rank when the lifting generators are fed in with
/// the permutation as the outer loop.
pub fn lifting_basis<F: Field>(
    field: &F,
    system: &IdentitySystem,
    d: usize,
) -> Result<Vec<Vec<F::Elem>>> {
    let n = check_ambient(d, system.alphabet().len())?;
    let gens = lifting_generators(system, d)?;
    let table = PermTable::new(d);
    let mut ech = Echelon::new(field.clone(), n);
    let mut kept = Vec::new();
    for row in orbit_rows(field, n, &gens, &table)? {
        if ech.insert(row.clone()).is_some() {
            kept.push(row);
        }
    }
    Ok(kept)
}

/// The `S_d`-module generated by `polys` (all of degree `d` over `alphabet`).
pub fn symmetric_span<F: Field>(
    field: &F,
    alphabet: &OpAlphabet,
    d: usize,
    polys: &[Polynomial],
) -> Result<RowSpace<F>> {
    let n = check_ambient(d, alphabet.len())?;
    for p in polys {
        if p.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch {
                expected: alphabet.to_string(),
                found: p.alphabet().to_string(),
            });
        }
    }
    let mut ech = Echelon::new(field.clone(), n);
    insert_orbits(&mut ech, polys, &PermTable::new(d))?;
    Ok(RowSpace::from_echelon(ech))
}

/// Row echelon basis of the degree-`d` lifting module of `system`.
pub fn lifting_echelon<F: Field>(
    field: &F,
    system: &IdentitySystem,
    d: usize,
) -> Result<(Echelon<F>, usize)> {
    let n = check_ambient(d, system.alphabet().len())?;
    let gens = lifting_generators(system, d)?;
    let mut ech = Echelon::new(field.clone(), n);
    insert_orbits(&mut ech, &gens, &PermTable::new(d))?;
    Ok((ech, gens.len()))
}

/// Consequences in degree `d` of the identities of `system`.
pub fn lifting_module<F: Field>(
    field: &F,
    system: &IdentitySystem,
    d: usize,
) -> Result<RowSpace<F>> {
    Ok(RowSpace::from_echelon(lifting_echelon(field, system, d)?.0))
}

/// Converts a polynomial to a dense row over `field`.
pub fn poly_row<F: Field>(field: &F, p: &Polynomial) -> Result<Vec<F::Elem>> {
    let n = monomial_count(p.degree(), p.alphabet().len());
    let mut row = vec![field.zero(); n];
    for (c, v) in p.sparse_vector() {
        row[c] = field.from_rational(&v)?;
    }
    Ok(row)
}

/// Reads a dense row back as a polynomial with rational representatives.
pub fn row_poly<F: Field>(
    field: &F,
    alphabet: &OpAlphabet,
    d: usize,
    row: &[F::Elem],
) -> Polynomial {
    let entries: Vec<(usize, BigRational)> = row
        .iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, field.to_rational(x)))
        .collect();
    Polynomial::from_sparse(d, alphabet, &entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Fp101, Rationals};
    use crate::freealg::expr;

    fn poly(alphabet: &OpAlphabet, src: &str) -> Polynomial {
        Polynomial::from_tree_poly(&expr::parse(alphabet, src).unwrap()).unwrap()
    }

    #[test]
    fn pre_lie_has_five_liftings() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let pl = poly(
            &a,
            "mul(mul(x,y),z) - mul(x,mul(y,z)) - mul(mul(y,x),z) + mul(y,mul(x,z))",
        );
        let l = liftings(&pl);
        assert_eq!(l.len(), 5);
        assert!(l.iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn liftings_substitute_the_fresh_variable() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = poly(&a, "mul(x1,x2)");
        let l = liftings(&f);
        let want = [
            "mul(mul(x1,x3),x2)",
            "mul(x1,mul(x2,x3))",
            "mul(mul(x1,x2),x3)",
            "mul(x3,mul(x1,x2))",
        ];
        assert_eq!(l.len(), want.len());
        for (g, w) in l.iter().zip(want) {
            assert_eq!(g, &poly(&a, w));
        }
    }

    #[test]
    fn empty_system_gives_zero_space() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let m = lifting_module(&Rationals, &IdentitySystem::empty("none", &a), 4).unwrap();
        assert_eq!((m.dim(), m.ambient()), (0, 120));
    }

    #[test]
    fn associativity_module_dimensions() {
        // the free associative algebra has d! multilinear monomials in degree d
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let assoc = IdentitySystem::new(
            "assoc",
            &a,
            vec![poly(&a, "mul(mul(x,y),z) - mul(x,mul(y,z))")],
        )
        .unwrap();
        for d in 3..=5 {
            let m = lifting_module(&Fp101::new(), &assoc, d).unwrap();
            assert_eq!(m.ambient() - m.dim(), factorial(d));
        }
    }

    #[test]
    fn lifting_basis_spans_the_module() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let assoc = IdentitySystem::new(
            "assoc",
            &a,
            vec![poly(&a, "mul(mul(x,y),z) - mul(x,mul(y,z))")],
        )
        .unwrap();
        let f = Rationals;
        let basis = lifting_basis(&f, &assoc, 4).unwrap();
        let m = lifting_module(&f, &assoc, 4).unwrap();
        assert_eq!(basis.len(), m.dim());
        assert!(RowSpace::span(f, m.ambient(), &basis)
            .unwrap()
            .equal(&m)
            .unwrap());
        // the first kept row is the identity permutation of the first lifting
        let first = poly_row(&f, &lifting_generators(&assoc, 4).unwrap()[0]).unwrap();
        assert_eq!(basis[0], first);
    }

    #[test]
    fn commutativity_module() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let comm = poly(&a, "mul(x,y) - mul(y,x)");
        let s = symmetric_span(&Rationals, &a, 2, &[comm]).unwrap();
        assert_eq!(s.dim(), 1);
        // free commutative nonassociative algebra in degree 3 has dimension 3
        let sys = IdentitySystem::new("comm", &a, vec![poly(&a, "mul(x,y) - mul(y,x)")]).unwrap();
        let m = lifting_module(&Rationals, &sys, 3).unwrap();
        assert_eq!(m.ambient() - m.dim(), 3);
    }

    #[test]
    fn perm_table_matches_action() {
        let a = OpAlphabet::new(&["mul", "br"]).unwrap();
        let p = poly(&a, "mul(br(x1,x3),mul(x2,x4)) - 2 br(x4,mul(x1,br(x2,x3)))");
        let table = PermTable::new(4);
        for (s, perm) in all_perms(4).iter().enumerate() {
            let moved = p.act(perm).unwrap();
            let mut via_table: Vec<_> = p
                .sparse_vector()
                .into_iter()
                .map(|(c, v)| (table.apply(s, c), v))
                .collect();
            via_table.sort_by_key(|(c, _)| *c);
            assert_eq!(moved.sparse_vector(), via_table);
        }
    }
}
