use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::algebra::{LinOp, StructConstAlgebra, Vector};
use crate::error::{Error, Result};
use crate::freealg::OpAlphabet;

/// Largest candidate count [`search_rb`] will scan.
pub const SEARCH_LIMIT: u128 = 20_000_000;

fn op_indices(a: &StructConstAlgebra, ops: &[&str]) -> Result<Vec<u8>> {
    if ops.is_empty() {
        return Ok((0..a.alphabet().len() as u8).collect());
    }
    ops.iter().map(|o| a.alphabet().require(o)).collect()
}

fn add(x: &[BigRational], y: &[BigRational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn rb_holds(a: &StructConstAlgebra, ops: &[u8], r: &LinOp) -> bool {
    let n = a.dim();
    let images: Vec<Vector> = (0..n).map(|i| r.apply(&a.basis(i))).collect();
    for &op in ops {
        for i in 0..n {
            for j in 0..n {
                let lhs = a.product(op, &images[i], &images[j]);
                let inner = add(
                    &a.product(op, &images[i], &a.basis(j)),
                    &a.product(op, &a.basis(i), &images[j]),
                );
                if lhs != r.apply(&inner) {
                    return false;
                }
            }
        }
    }
    true
}

/// Weight-zero Rota-Baxter condition `R(x) R(y) = R(R(x) y + x R(y))` for
/// each listed operation, on all basis pairs. An empty list means every
/// operation, which is the condition for dendriform-type algebras.
pub fn is_rota_baxter(a: &StructConstAlgebra, ops: &[&str], r: &LinOp) -> Result<bool> {
    if r.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    Ok(rb_holds(a, &op_indices(a, ops)?, r))
}

fn sorted_entries(entries: &[BigRational]) -> Vec<BigRational> {
    let mut e = entries.to_vec();
    e.sort();
    e.dedup();
    e
}

fn candidate(entries: &[BigRational], n: usize, mut index: u128) -> LinOp {
    let base = entries.len() as u128;
    let mut flat = vec![entries[0].clone(); n * n];
    for x in flat.iter_mut().rev() {
        *x = entries[(index % base) as usize].clone();
        index /= base;
    }
    LinOp::new(flat.chunks(n).map(<[BigRational]>::to_vec).collect()).expect("square")
}

/// Every matrix with entries from `entries` that is a Rota-Baxter operator
/// for `ops` (empty = all operations), in lexicographic order of the
/// row-major entry sequence.
pub fn search_rb(
    a: &StructConstAlgebra,
    ops: &[&str],
    entries: &[BigRational],
) -> Result<Vec<LinOp>> {
    let ops = op_indices(a, ops)?;
    let entries = sorted_entries(entries);
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    let n = a.dim();
    let count = (entries.len() as u128)
        .checked_pow((n * n) as u32)
        .unwrap_or(u128::MAX);
    if count > SEARCH_LIMIT {
        return Err(Error::SearchTooLarge(count));
    }
    Ok((0..count as u64)
        .into_par_iter()
        .filter_map(|i| {
            let r = candidate(&entries, n, i as u128);
            rb_holds(a, &ops, &r).then_some(r)
        })
        .collect())
}

/// Random sampling for spaces too large to scan: tries `samples` matrices
/// drawn uniformly from `entries` and returns the distinct hits, sorted.
pub fn sample_rb(
    a: &StructConstAlgebra,
    ops: &[&str],
    entries: &[BigRational],
    samples: usize,
    seed: u64,
) -> Result<Vec<LinOp>> {
    let ops = op_indices(a, ops)?;
    let entries = sorted_entries(entries);
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    let n = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = Vec::new();
    for _ in 0..samples {
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| entries[rng.gen_range(0..entries.len())].clone())
                    .collect()
            })
            .collect();
        let r = LinOp::new(rows)?;
        if rb_holds(a, &ops, &r) {
            hits.push(r);
        }
    }
    hits.sort();
    hits.dedup();
    Ok(hits)
}

/// Structures obtained from Rota-Baxter operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `x · y = [R(x), y]`
    MalcevToPreMalcev,
    /// `x ≺ y = x * R(y)`, `x ≻ y = R(x) * y`
    AltToAltDendriform,
    /// `nw = x ≺ R(y)`, `ne = x ≻ R(y)`, `sw = R(x) ≺ y`, `se = R(x) ≻ y`
    DendriToQuadri,
    /// `nw = x * R1R2(y)`, `ne = R1(x) * R2(y)`, `sw = R2(x) * R1(y)`, `se = R1R2(x) * y`
    DoubleRbQuadri,
    /// `tl = x · R(y)`, `tr = R(x) · y`
    PreMalcevToMDendriform,
}

impl Construction {
    pub const ALL: [Construction; 5] = [
        Construction::MalcevToPreMalcev,
        Construction::AltToAltDendriform,
        Construction::DendriToQuadri,
        Construction::DoubleRbQuadri,
        Construction::PreMalcevToMDendriform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::MalcevToPreMalcev => "malcev-to-premalcev",
            Construction::AltToAltDendriform => "alt-to-altdendriform",
            Construction::DendriToQuadri => "dendri-to-quadri",
            Construction::DoubleRbQuadri => "double-rb-quadri",
            Construction::PreMalcevToMDendriform => "premalcev-to-mdendriform",
        }
    }

    pub fn operator_count(self) -> usize {
        match self {
            Construction::DoubleRbQuadri => 2,
            _ => 1,
        }
    }

    /// Catalog system the derived algebra is expected to satisfy.
    pub fn target_system(self) -> &'static str {
        match self {
            Construction::MalcevToPreMalcev => "pre-malcev",
            Construction::AltToAltDendriform => "alt-dendriform",
            Construction::DendriToQuadri | Construction::DoubleRbQuadri => "alt-quadri",
            Construction::PreMalcevToMDendriform => "m-dendriform",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownConstruction(s.to_string()))
    }
}

fn build(
    a: &StructConstAlgebra,
    names: &[&str],
    product: impl Fn(usize, &Vector, &Vector) -> Vector,
) -> Result<StructConstAlgebra> {
    let alphabet = OpAlphabet::new(names)?;
    let mut out = StructConstAlgebra::zero(&alphabet, a.dim())?;
    for op in 0..names.len() {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for (k, c) in product(op, &a.basis(i), &a.basis(j))
                    .into_iter()
                    .enumerate()
                {
                    out.set(op as u8, i, j, k, c)?;
                }
            }
        }
    }
    Ok(out)
}

fn single_op(a: &StructConstAlgebra, c: Construction) -> Result<u8> {
    if a.alphabet().len() != 1 {
        return Err(Error::ConstructionSignature {
            name: c.name().into(),
            expected: "one operation".into(),
        });
    }
    Ok(0)
}

fn require_rb(a: &StructConstAlgebra, ops: &[u8], r: &LinOp) -> Result<()> {
    if r.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    if !rb_holds(a, ops, r) {
        let names: Vec<&str> = ops.iter().map(|&o| a.alphabet().name(o)).collect();
        return Err(Error::NotRotaBaxter(names.join(",")));
    }
    Ok(())
}

/// Applies `c` to `a` with the given Rota-Baxter operators, after checking
/// the operators (and, for two of them, that they commute).
pub fn derive(
    a: &StructConstAlgebra,
    c: Construction,
    ops: &[LinOp],
) -> Result<StructConstAlgebra> {
    if ops.len() != c.operator_count() {
        return Err(Error::OperatorCount {
            name: c.name().into(),
            expected: c.operator_count(),
            found: ops.len(),
        });
    }
    let r = &ops[0];
    match c {
        Construction::MalcevToPreMalcev
        | Construction::PreMalcevToMDendriform
        | Construction::AltToAltDendriform => {
            let m = single_op(a, c)?;
            require_rb(a, &[m], r)?;
            let names: &[&str] = match c {
                Construction::MalcevToPreMalcev => &["mul"],
                Construction::AltToAltDendriform => &["prec", "succ"],
                _ => &["tl", "tr"],
            };
            build(a, names, |op, x, y| match (c, op) {
                (Construction::MalcevToPreMalcev, _) => a.product(m, &r.apply(x), y),
                // prec / tl: x * R(y); succ / tr: R(x) * y
                (_, 0) => a.product(m, x, &r.apply(y)),
                _ => a.product(m, &r.apply(x), y),
            })
        }
        Construction::DendriToQuadri => {
            let (Some(prec), Some(succ)) =
                (a.alphabet().index_of("prec"), a.alphabet().index_of("succ"))
            else {
                return Err(Error::ConstructionSignature {
                    name: c.name().into(),
                    expected: "prec, succ".into(),
                });
            };
            require_rb(a, &[prec, succ], r)?;
            build(a, &["nw", "ne", "sw", "se"], |op, x, y| match op {
                0 => a.product(prec, x, &r.apply(y)),
                1 => a.product(succ, x, &r.apply(y)),
                2 => a.product(prec, &r.apply(x), y),
                _ => a.product(succ, &r.apply(x), y),
            })
        }
        Construction::DoubleRbQuadri => {
            let m = single_op(a, c)?;
            let (r1, r2) = (&ops[0], &ops[1]);
            require_rb(a, &[m], r1)?;
            require_rb(a, &[m], r2)?;
            if !r1.commutes_with(r2) {
                return Err(Error::NotCommuting);
            }
            let r12 = r1.compose(r2);
            build(a, &["nw", "ne", "sw", "se"], |op, x, y| match op {
                0 => a.product(m, x, &r12.apply(y)),
                1 => a.product(m, &r1.apply(x), &r2.apply(y)),
                2 => a.product(m, &r2.apply(x), &r1.apply(y)),
                _ => a.product(m, &r12.apply(x), y),
            })
        }
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

    fn units() -> Vec<BigRational> {
        vec![q(-1), q(0), q(1)]
    }

    #[test]
    fn zero_is_rota_baxter_and_identity_is_not() {
        let a = samples::lie_2d();
        assert!(is_rota_baxter(&a, &["br"], &LinOp::zero(2)).unwrap());
        assert!(!is_rota_baxter(&a, &["br"], &LinOp::identity(2)).unwrap());
        assert!(is_rota_baxter(&a, &["br"], &LinOp::zero(3)).is_err());
    }

    #[test]
    fn abelian_line_accepts_everything() {
        let a = StructConstAlgebra::zero(&OpAlphabet::new(&["mul"]).unwrap(), 1).unwrap();
        let found = search_rb(&a, &[], &[q(0), q(1)]).unwrap();
        assert_eq!(found, vec![LinOp::zero(1), LinOp::identity(1)]);
    }

    #[test]
    fn search_on_lie_2d() {
        let a = samples::lie_2d();
        let found = search_rb(&a, &["br"], &units()).unwrap();
        assert!(found.contains(&LinOp::zero(2)));
        assert!(found.len() > 1);
        for r in &found {
            assert!(is_rota_baxter(&a, &["br"], r).unwrap());
        }
        // brute-force recount in plain integer arithmetic
        let mut count = 0;
        for code in 0..81 {
            let m: Vec<i64> = (0..4).map(|k| (code / 3i64.pow(3 - k)) % 3 - 1).collect();
            let r = |v: [i64; 2]| [m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]];
            let br = |x: [i64; 2], y: [i64; 2]| [0, x[0] * y[1] - x[1] * y[0]];
            let ok = [[1, 0], [0, 1]].iter().all(|&x| {
                [[1, 0], [0, 1]].iter().all(|&y| {
                    let inner = br(r(x), y);
                    let inner2 = br(x, r(y));
                    br(r(x), r(y)) == r([inner[0] + inner2[0], inner[1] + inner2[1]])
                })
            });
            count += ok as usize;
        }
        assert_eq!(found.len(), count);
    }

    #[test]
    fn search_on_sl2_finds_nonzero_operators() {
        let a = samples::sl2();
        let found = search_rb(&a, &["br"], &units()).unwrap();
        assert!(found.iter().any(|r| *r != LinOp::zero(3)));
        let mut sorted = found.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, found);
    }

    #[test]
    fn search_refuses_huge_spaces() {
        let a = samples::octonions();
        assert!(matches!(
            search_rb(&a, &[], &units()),
            Err(Error::SearchTooLarge(_))
        ));
        let hits = sample_rb(&a, &[], &[q(0)], 3, 7).unwrap();
        assert_eq!(hits, vec![LinOp::zero(8)]);
    }

    #[test]
    fn construction_names_roundtrip() {
        for c in Construction::ALL {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert!("nope".parse::<Construction>().is_err());
    }

    #[test]
    fn derive_rejects_bad_input() {
        let a = samples::lie_2d();
        let id = LinOp::identity(2);
        assert!(matches!(
            derive(
                &a,
                Construction::MalcevToPreMalcev,
                std::slice::from_ref(&id)
            ),
            Err(Error::NotRotaBaxter(_))
        ));
        assert!(matches!(
            derive(&a, Construction::DoubleRbQuadri, &[id]),
            Err(Error::OperatorCount { .. })
        ));
        assert!(matches!(
            derive(&a, Construction::DendriToQuadri, &[LinOp::zero(2)]),
            Err(Error::ConstructionSignature { .. })
        ));
        let u = samples::upper_triangular();
        let found = search_rb(&u, &[], &units()).unwrap();
        let (r1, r2) = found
            .iter()
            .flat_map(|x| found.iter().map(move |y| (x, y)))
            .find(|(x, y)| !x.commutes_with(y))
            .expect("a non-commuting pair");
        assert!(matches!(
            derive(&u, Construction::DoubleRbQuadri, &[r1.clone(), r2.clone()]),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn zero_operator_gives_zero_algebra() {
        let a = samples::sl2();
        let p = derive(&a, Construction::MalcevToPreMalcev, &[LinOp::zero(3)]).unwrap();
        assert!(p.is_zero());
        assert!(p
            .satisfies(&get_system("pre-malcev").unwrap())
            .unwrap()
            .is_pass());
    }

    #[test]
    fn non_rb_map_breaks_pre_malcev() {
        // bypass the operator check to build x·y = [R(x), y] for a generic R
        let a = samples::sl2();
        let r = LinOp::from_i64(&[&[1, 0, 1], &[0, 2, 0], &[1, 0, -1]]).unwrap();
        assert!(!is_rota_baxter(&a, &["br"], &r).unwrap());
        let p = build(&a, &["mul"], |_, x, y| a.product(0, &r.apply(x), y)).unwrap();
        assert!(!p
            .satisfies(&get_system("pre-malcev").unwrap())
            .unwrap()
            .is_pass());
    }
}
