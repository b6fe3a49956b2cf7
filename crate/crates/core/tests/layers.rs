//! The symbolic layer (rules, identity modules) agrees with the concrete one
//! (structure constants, Rota-Baxter constructions).

use num_rational::BigRational;
use opsplit::concrete::{
    derive, samples, search_rb, Construction, LinOp, StructConstAlgebra, Vector,
};
use opsplit::freealg::Polynomial;
use opsplit::varieties::{get_rule, get_system, rule_names};
use proptest::prelude::*;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn units() -> Vec<BigRational> {
    vec![q(-1), q(0), q(1)]
}

fn rb_ops(a: &StructConstAlgebra) -> Vec<LinOp> {
    search_rb(a, &[], &units()).unwrap()
}

#[test]
fn commutators_of_pre_malcev_instances_are_malcev() {
    let a = samples::lie_2d();
    let comm = get_rule("commutator").unwrap();
    let malcev = get_system("malcev").unwrap();
    for r in rb_ops(&a) {
        let p = derive(&a, Construction::MalcevToPreMalcev, &[r]).unwrap();
        assert!(p
            .pull_back(&comm)
            .unwrap()
            .satisfies(&malcev)
            .unwrap()
            .is_pass());
    }
}

#[test]
fn extracted_structures_satisfy_the_found_identities() {
    let a = samples::dual_numbers();
    let mut dendri = Vec::new();
    for r in rb_ops(&a) {
        dendri.push(derive(&a, Construction::AltToAltDendriform, &[r]).unwrap());
    }
    let pm = get_system("pre-malcev").unwrap();
    let pj = get_system("pre-jordan").unwrap();
    for d in &dendri {
        assert!(d
            .pull_back(&get_rule("dendriform-commutator").unwrap())
            .unwrap()
            .satisfies(&pm)
            .unwrap()
            .is_pass());
        assert!(d
            .pull_back(&get_rule("dendriform-anticommutator").unwrap())
            .unwrap()
            .satisfies(&pj)
            .unwrap()
            .is_pass());
        for r in rb_ops(d) {
            let quadri = derive(d, Construction::DendriToQuadri, &[r]).unwrap();
            let md = quadri
                .pull_back(&get_rule("m-extraction").unwrap())
                .unwrap();
            assert!(md
                .satisfies(&get_system("m-dendriform").unwrap())
                .unwrap()
                .is_pass());
            let jd = quadri
                .pull_back(&get_rule("j-extraction").unwrap())
                .unwrap();
            assert!(jd
                .satisfies(&get_system("j-dendriform").unwrap())
                .unwrap()
                .is_pass());
        }
    }
}

#[test]
fn octonion_products_sagle_and_not_pre_malcev() {
    let m = samples::octonions()
        .pull_back(&get_rule("commutator").unwrap())
        .unwrap();
    assert!(m
        .satisfies(&get_system("sagle").unwrap())
        .unwrap()
        .is_pass());
    let j = samples::octonions()
        .pull_back(&get_rule("anticommutator").unwrap())
        .unwrap();
    assert!(!j
        .satisfies(&get_system("pre-malcev").unwrap())
        .unwrap()
        .is_pass());
}

fn algebra_strategy(
    ops: Vec<&'static str>,
    dim: usize,
) -> impl Strategy<Value = StructConstAlgebra> {
    let n = ops.len() * dim * dim * dim;
    prop::collection::vec(-2i64..=2, n).prop_map(move |cs| {
        let mut entries = Vec::new();
        let mut it = cs.into_iter();
        for op in &ops {
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        entries.push((*op, i, j, k, it.next().unwrap()));
                    }
                }
            }
        }
        let alphabet = opsplit::freealg::OpAlphabet::new(&ops).unwrap();
        StructConstAlgebra::from_entries(&alphabet, dim, &entries).unwrap()
    })
}

fn vectors(k: usize, dim: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3).prop_map(q), dim), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // eval(pull_back(A), f) = eval(A, expand(f)) for every quadri-sourced rule
    #[test]
    fn pull_back_commutes_with_expansion(
        a in algebra_strategy(vec!["nw", "ne", "sw", "se"], 2),
        args in vectors(4, 2),
    ) {
        for name in ["m-extraction", "j-extraction", "quadri-horizontal", "quadri-vertical", "quadri-total"] {
            let rule = get_rule(name).unwrap();
            let b = a.pull_back(&rule).unwrap();
            let sys = get_system(match name {
                "m-extraction" => "m-dendriform",
                "j-extraction" => "j-dendriform",
                "quadri-total" => "alternative",
                _ => "alt-dendriform",
            }).unwrap();
            for f in sys.identities() {
                let x = &args[..f.degree()];
                prop_assert_eq!(b.eval(f, x).unwrap(), a.eval(&rule.expand(f).unwrap(), x).unwrap());
            }
        }
    }

    #[test]
    fn eval_is_multilinear(a in algebra_strategy(vec!["mul"], 3), args in vectors(4, 3), extra in vectors(1, 3)) {
        let f: &Polynomial = &get_system("pre-malcev").unwrap().identities()[0].clone();
        let mut summed = args.clone();
        summed[2] = args[2].iter().zip(&extra[0]).map(|(u, v)| u + v).collect();
        let mut other = args.clone();
        other[2] = extra[0].clone();
        let lhs = a.eval(f, &summed).unwrap();
        let rhs: Vector = a.eval(f, &args).unwrap().iter().zip(a.eval(f, &other).unwrap()).map(|(u, v)| u + v).collect();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn every_rule_pulls_back_a_zero_algebra_to_zero() {
    for name in rule_names() {
        let rule = get_rule(name).unwrap();
        let z = StructConstAlgebra::zero(rule.target(), 2).unwrap();
        assert!(z.pull_back(&rule).unwrap().is_zero(), "{name}");
    }
}
