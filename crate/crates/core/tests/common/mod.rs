#![allow(dead_code)]

use leibniz_core::constructions::{
    adjoint_module, counterexample, direct_sum_module, lie_semidirect_sum, simple_algebra,
    sl2_irreducible_module, split_extension_zero_right, CATALOG,
};
use leibniz_core::exactlin::{int, Matrix, Vector};
use leibniz_core::levi::ModuleAction;
use leibniz_core::{LeibnizAlgebra, StructureTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vector with small integer entries in `[-3, 3]`.
pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| int(rng.random_range(-3..=3))).collect()
}

/// Random unimodular-ish invertible integer matrix: a product of elementary shears
/// and a permutation.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut p = Matrix::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i == j {
            continue;
        }
        let c = int(rng.random_range(-2..=2));
        let mut shear = Matrix::identity(n);
        shear[(i, j)] = c;
        p = &p * &shear;
    }
    assert!(p.inverse().is_some());
    p
}

/// Irreducible sl2-modules of total dimension at most `max_dim`.
pub fn random_sl2_module(rng: &mut ChaCha8Rng, max_dim: usize) -> ModuleAction {
    let mut remaining = max_dim;
    let first = rng.random_range(0..remaining);
    let mut act = sl2_irreducible_module(first);
    remaining -= first + 1;
    while remaining > 0 && rng.random_bool(0.5) {
        let hw = rng.random_range(0..remaining);
        act = direct_sum_module(&act, &sl2_irreducible_module(hw)).unwrap();
        remaining -= hw + 1;
    }
    act
}

pub fn sl2() -> LeibnizAlgebra {
    simple_algebra("sl2").unwrap()
}

/// sl2 plus a one-dimensional centre.
pub fn gl2() -> LeibnizAlgebra {
    lie_semidirect_sum(&sl2(), &ModuleAction::trivial(3, 1)).unwrap()
}

/// sl2 ⋉ Heisenberg: the natural module `v0, v1` with `[v0, v1] = z` central.
/// The radical is non-abelian, which exercises the recursive Levi step.
pub fn sl2_heisenberg() -> LeibnizAlgebra {
    let base = lie_semidirect_sum(&sl2(), &sl2_irreducible_module(1)).unwrap();
    let mut t = StructureTable::zeros(6);
    for (i, j, k, c) in base.table().nonzero_entries() {
        t.set(i, j, k, c.clone());
    }
    t.set(3, 4, 5, int(1));
    t.set(4, 3, 5, int(-1));
    let mut labels = base.labels().to_vec();
    labels.push("z".into());
    LeibnizAlgebra::new(labels, t).unwrap()
}

/// `a a = b`, everything else zero.
pub fn square_to_b() -> LeibnizAlgebra {
    let mut t = StructureTable::zeros(2);
    t.set(0, 0, 1, int(1));
    LeibnizAlgebra::new(vec!["a".into(), "b".into()], t).unwrap()
}

/// gl2 with the centre acting by 1 on a line, zero right action.
pub fn gl2_scaling_line() -> LeibnizAlgebra {
    let mut rho = vec![Matrix::zeros(1, 1); 4];
    rho[3] = Matrix::identity(1);
    split_extension_zero_right(&gl2(), &ModuleAction::new(1, rho).unwrap()).unwrap()
}

/// A fixed zoo of valid Leibniz algebras plus seeded random split extensions,
/// each also presented in a random basis.
pub fn algebra_zoo(seed: u64) -> Vec<LeibnizAlgebra> {
    let mut rng = rng(seed);
    let mut zoo = vec![
        LeibnizAlgebra::abelian(0),
        LeibnizAlgebra::abelian(3),
        square_to_b(),
        gl2(),
        sl2_heisenberg(),
        gl2_scaling_line(),
    ];
    for name in CATALOG {
        if name != "sl3" {
            zoo.push(simple_algebra(name).unwrap());
            zoo.push(counterexample(name).unwrap().algebra);
        }
    }
    for _ in 0..3 {
        let act = random_sl2_module(&mut rng, 4);
        zoo.push(split_extension_zero_right(&sl2(), &act).unwrap());
        zoo.push(lie_semidirect_sum(&sl2(), &act).unwrap());
    }
    zoo.push(split_extension_zero_right(&gl2(), &adjoint_module(&gl2()).unwrap()).unwrap());
    let rebased: Vec<LeibnizAlgebra> = zoo
        .iter()
        .filter(|a| a.dim() > 1)
        .map(|a| a.change_basis(&random_invertible(&mut rng, a.dim())).unwrap())
        .collect();
    zoo.extend(rebased);
    zoo
}

/// Direct left Leibniz check on basis triples, written independently of the library:
/// products are expanded by hand from the structure constants.
#[allow(clippy::needless_range_loop)]
pub fn brute_force_is_leibniz(t: &StructureTable) -> bool {
    let n = t.dim();
    let mul = |x: &[leibniz_core::Scalar], y: &[leibniz_core::Scalar]| -> Vector {
        let mut out = vec![int(0); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] += &x[i] * &y[j] * t.get(i, j, k);
                }
            }
        }
        out
    };
    let unit = |i: usize| -> Vector { (0..n).map(|k| int((k == i) as i64)).collect() };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ea, eb, ec) = (unit(a), unit(b), unit(c));
                let lhs = mul(&ea, &mul(&eb, &ec));
                let r1 = mul(&mul(&ea, &eb), &ec);
                let r2 = mul(&eb, &mul(&ea, &ec));
                let rhs: Vector = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
