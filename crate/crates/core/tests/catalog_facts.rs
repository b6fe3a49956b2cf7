//! Facts about the catalog systems that the reproduction table only reports
//! in passing.

use opsplit::exactla::{Fp101, Rationals};
use opsplit::freealg::Polynomial;
use opsplit::identmod::{poly_row, symmetric_span, IdentitySystem};
use opsplit::splitkit::{disuccessor_system, rename_system};
use opsplit::varieties::{get_system, triangle_context, MD1, MD2, MD3, MD4};

fn same_module(a: &IdentitySystem, b: &IdentitySystem, d: usize) -> bool {
    let f = Fp101::new();
    let x = symmetric_span(&f, a.alphabet(), d, &a.of_degree(d)).unwrap();
    let y = symmetric_span(&f, b.alphabet(), d, &b.of_degree(d)).unwrap();
    x.equal(&y).unwrap()
}

#[test]
fn m_dendriform_as_written_needs_the_triangles_swapped() {
    let c = triangle_context();
    let literal: Vec<Polynomial> = [MD1, MD2, MD3, MD4]
        .iter()
        .map(|s| Polynomial::from_tree_poly(&c.parse(s).unwrap()).unwrap())
        .collect();
    let literal = IdentitySystem::new("md-literal", c.alphabet(), literal).unwrap();
    let split = disuccessor_system(&get_system("pre-malcev").unwrap()).unwrap();
    let prec_is_tl = rename_system(
        &split,
        c.alphabet(),
        &[("mul_prec", "tl"), ("mul_succ", "tr")],
        "s",
    )
    .unwrap();
    let prec_is_tr = rename_system(
        &split,
        c.alphabet(),
        &[("mul_prec", "tr"), ("mul_succ", "tl")],
        "s",
    )
    .unwrap();

    assert!(same_module(
        &prec_is_tl,
        &get_system("m-dendriform").unwrap(),
        4
    ));
    assert!(!same_module(&prec_is_tl, &literal, 4));
    assert!(same_module(&prec_is_tr, &literal, 4));
}

#[test]
fn two_alt_quadri_identities_follow_from_the_other_eight() {
    let sys = get_system("alt-quadri").unwrap();
    let ids = sys.identities();
    let f = Rationals;
    let mut redundant = Vec::new();
    for i in 0..ids.len() {
        let others: Vec<Polynomial> = ids
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let m = symmetric_span(&f, sys.alphabet(), 3, &others).unwrap();
        if m.contains(&poly_row(&f, &ids[i]).unwrap()).unwrap() {
            redundant.push(i);
        }
    }
    assert_eq!(redundant, [1, 8]);
    // but no single identity generates another
    for (i, g) in ids.iter().enumerate() {
        let m = symmetric_span(&f, sys.alphabet(), 3, std::slice::from_ref(g)).unwrap();
        for (j, h) in ids.iter().enumerate() {
            assert!(
                i == j || !m.contains(&poly_row(&f, h).unwrap()).unwrap(),
                "{i} generates {j}"
            );
        }
    }
}

#[test]
fn alt_quadri_module_has_the_split_dimension() {
    let sys = get_system("alt-quadri").unwrap();
    let m = symmetric_span(&Rationals, sys.alphabet(), 3, sys.identities()).unwrap();
    assert_eq!(m.dim(), 45);
}
