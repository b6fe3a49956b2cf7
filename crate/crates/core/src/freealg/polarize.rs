use std::collections::BTreeMap;

use super::monomial::all_perms;
use super::poly::Polynomial;
use super::tree::{Tree, TreePoly};
use crate::error::Result;

/// Full linearization of a polynomial whose variables may repeat.
///
/// Terms are grouped by multidegree; in each group a variable occurring `k`
/// times is replaced by `k` fresh variables, summed over every way of
/// distributing them among its occurrences. Distinct variables keep their
/// relative order and take the labels `x1..xm`; extra copies are numbered
/// after them (all copies of the smallest repeated variable first). A
/// multilinear input comes back unchanged.
pub fn polarize(p: &TreePoly) -> Result<Vec<Polynomial>> {
    let mut groups: BTreeMap<Vec<(u8, usize)>, Vec<(&Tree, _)>> = BTreeMap::new();
    for (t, c) in p.terms() {
        let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
        for v in t.leaves() {
            *counts.entry(v).or_default() += 1;
        }
        groups
            .entry(counts.into_iter().collect())
            .or_default()
            .push((t, c));
    }
    let mut out = Vec::new();
    for (multidegree, terms) in groups {
        let m = multidegree.len();
        let degree: usize = multidegree.iter().map(|(_, k)| k).sum();
        // labels[v] = fresh labels for variable v, first copy keeps rank(v)
        let mut next = m as u8;
        let mut labels: BTreeMap<u8, Vec<u8>> = BTreeMap::new();
        for (rank, (v, k)) in multidegree.iter().enumerate() {
            let mut ls = vec![rank as u8];
            for _ in 1..*k {
                ls.push(next);
                next += 1;
            }
            labels.insert(*v, ls);
        }
        let mut acc = TreePoly::zero(p.alphabet());
        for (t, c) in terms {
            let leaves = t.leaves();
            // every combination of one permutation of labels per variable
            let choices: Vec<(u8, Vec<Vec<u8>>)> = labels
                .iter()
                .map(|(v, ls)| (*v, all_perms(ls.len())))
                .collect();
            let mut idx = vec![0usize; choices.len()];
            loop {
                let mut seen: BTreeMap<u8, usize> = BTreeMap::new();
                let assigned: Vec<u8> = leaves
                    .iter()
                    .map(|v| {
                        let slot = choices.iter().position(|(w, _)| w == v).unwrap();
                        let occ = seen.entry(*v).or_default();
                        let label = labels[v][choices[slot].1[idx[slot]][*occ] as usize];
                        *occ += 1;
                        label
                    })
                    .collect();
                let mut i = 0;
                let relabelled = t.map_leaves(&mut |_| {
                    i += 1;
                    assigned[i - 1]
                });
                acc.add_term(relabelled, c.clone());
                // odometer over the permutation choices
                let mut k = 0;
                loop {
                    if k == idx.len() {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] < choices[k].1.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
        if !acc.is_zero() {
            out.push(Polynomial::from_tree_poly_with_degree(&acc, degree)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::alphabet::OpAlphabet;
    use crate::freealg::expr::{parse, Context};

    #[test]
    fn multilinear_input_is_unchanged() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = parse(&a, "mul(mul(x,y),z) - mul(x,mul(y,z))").unwrap();
        let out = polarize(&f).unwrap();
        assert_eq!(out, vec![Polynomial::from_tree_poly(&f).unwrap()]);
    }

    #[test]
    fn square_linearizes_to_symmetric_sum() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = parse(&a, "mul(mul(x,x),y)").unwrap();
        let out = polarize(&f).unwrap();
        // x -> x1, x3; y -> x2
        let expected = parse(&a, "mul(mul(x1,x3),x2) + mul(mul(x3,x1),x2)").unwrap();
        assert_eq!(out, vec![Polynomial::from_tree_poly(&expected).unwrap()]);
    }

    #[test]
    fn jordan_identity_has_degree_four() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = parse(&a, "mul(mul(x,y),mul(x,x)) - mul(x,mul(y,mul(x,x)))").unwrap();
        let out = polarize(&f).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].degree(), 4);
        let mut ctx = Context::new(&a);
        ctx.define("j", 2, "mul(mul(x,y),mul(x,x)) - mul(x,mul(y,mul(x,x)))")
            .unwrap();
        // each of the 6 label assignments contributes one copy of each term
        let total: usize = out[0].terms().count();
        assert!(total <= 12);
    }

    #[test]
    fn inhomogeneous_input_splits() {
        let a = OpAlphabet::new(&["mul"]).unwrap();
        let f = parse(&a, "mul(x,x) + mul(x,y)").unwrap();
        assert_eq!(polarize(&f).unwrap().len(), 2);
    }
}
