//! Small algebras used as test beds for the Rota-Baxter constructions.

use super::algebra::StructConstAlgebra;
use crate::freealg::OpAlphabet;

fn ops(names: &[&str]) -> OpAlphabet {
    OpAlphabet::new(names).expect("valid names")
}

/// Antisymmetric closure of bracket entries `[e_i, e_j] = c e_k`.
fn bracket(dim: usize, entries: &[(usize, usize, usize, i64)]) -> StructConstAlgebra {
    let mut all = Vec::new();
    for &(i, j, k, c) in entries {
        all.push(("br", i, j, k, c));
        all.push(("br", j, i, k, -c));
    }
    StructConstAlgebra::from_entries(&ops(&["br"]), dim, &all).expect("valid table")
}

/// The non-abelian 2-dimensional Lie algebra `[e1, e2] = e2`.
pub fn lie_2d() -> StructConstAlgebra {
    bracket(2, &[(0, 1, 1, 1)])
}

/// `sl(2)` in the basis `h, e, f`.
pub fn sl2() -> StructConstAlgebra {
    bracket(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// The 4-dimensional non-Lie Malcev algebra
/// `[e1,e2] = -e2, [e1,e3] = -e3, [e1,e4] = e4, [e2,e3] = 2e4`.
pub fn sagle_malcev() -> StructConstAlgebra {
    bracket(
        4,
        &[(0, 1, 1, -1), (0, 2, 2, -1), (0, 3, 3, 1), (1, 2, 3, 2)],
    )
}

/// Dual numbers `k[e]/(e^2)` with basis `1, e`.
pub fn dual_numbers() -> StructConstAlgebra {
    StructConstAlgebra::from_entries(
        &ops(&["mul"]),
        2,
        &[
            ("mul", 0, 0, 0, 1),
            ("mul", 0, 1, 1, 1),
            ("mul", 1, 0, 1, 1),
        ],
    )
    .expect("valid table")
}

/// Upper triangular 2x2 matrices in the basis `E11, E12, E22`.
pub fn upper_triangular() -> StructConstAlgebra {
    StructConstAlgebra::from_entries(
        &ops(&["mul"]),
        3,
        &[
            ("mul", 0, 0, 0, 1),
            ("mul", 0, 1, 1, 1),
            ("mul", 1, 2, 1, 1),
            ("mul", 2, 2, 2, 1),
        ],
    )
    .expect("valid table")
}

/// Real octonions in the basis `1, e1, ..., e7`.
pub fn octonions() -> StructConstAlgebra {
    const LINES: [(usize, usize, usize); 7] = [
        (1, 2, 3),
        (1, 4, 5),
        (1, 7, 6),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 6, 5),
    ];
    let mut e = Vec::new();
    for i in 0..8 {
        e.push(("mul", 0, i, i, 1));
        if i > 0 {
            e.push(("mul", i, 0, i, 1));
            e.push(("mul", i, i, 0, -1));
        }
    }
    for (a, b, c) in LINES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            e.push(("mul", x, y, z, 1));
            e.push(("mul", y, x, z, -1));
        }
    }
    StructConstAlgebra::from_entries(&ops(&["mul"]), 8, &e).expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identmod::IdentitySystem;
    use crate::varieties::{bracket_context, get_system};

    fn lie() -> IdentitySystem {
        let c = bracket_context();
        let ids = ["br(x,y) + br(y,x)", "jac(x,y,z)"]
            .iter()
            .map(|s| crate::freealg::Polynomial::from_tree_poly(&c.parse(s).unwrap()).unwrap())
            .collect();
        IdentitySystem::new("lie", c.alphabet(), ids).unwrap()
    }

    #[test]
    fn lie_samples_are_lie() {
        for a in [lie_2d(), sl2()] {
            assert!(a.satisfies(&lie()).unwrap().is_pass());
        }
    }

    #[test]
    fn sagle_algebra_is_malcev_but_not_lie() {
        let a = sagle_malcev();
        assert!(a
            .satisfies(&get_system("malcev").unwrap())
            .unwrap()
            .is_pass());
        assert!(a
            .satisfies(&get_system("sagle").unwrap())
            .unwrap()
            .is_pass());
        assert!(!a.satisfies(&lie()).unwrap().is_pass());
    }

    #[test]
    fn associative_samples() {
        for a in [dual_numbers(), upper_triangular()] {
            assert!(a
                .satisfies(&get_system("associative").unwrap())
                .unwrap()
                .is_pass());
        }
    }

    #[test]
    fn octonions_are_alternative_not_associative() {
        let o = octonions();
        assert!(o
            .satisfies(&get_system("alternative").unwrap())
            .unwrap()
            .is_pass());
        assert!(!o
            .satisfies(&get_system("associative").unwrap())
            .unwrap()
            .is_pass());
        let m = o
            .pull_back(&crate::varieties::get_rule("commutator").unwrap())
            .unwrap();
        assert!(m
            .satisfies(&get_system("malcev").unwrap())
            .unwrap()
            .is_pass());
        assert!(!m.satisfies(&lie()).unwrap().is_pass());
    }
}
