//! Builders: simple Lie algebras, adjoint modules, split extensions and the
//! non-conjugate complements bundle.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{LeibnizAlgebra, StructureTable};
use crate::error::{Error, Result};
use crate::exactlin::{self, int, kernel_basis, solve_affine, LinearMap, Matrix, Scalar, Subspace, Vector};
use crate::levi::{verify_levi, ModuleAction};
use crate::structure::leibniz_kernel;

/// Names accepted by [`simple_algebra`] and [`counterexample`].
pub const CATALOG: [&str; 3] = ["sl2", "sl3", "so3"];

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Catalog of small simple Lie algebras.
///
/// * `sl2` on `(e, h, f)` with `he = 2e`, `hf = -2f`, `ef = h`;
/// * `so3` on `(x, y, z)` with `xy = z`, `yz = x`, `zx = y`;
/// * `sl3` on `(e1, e2, e3, h1, h2, f1, f2, f3)` realized by the matrix units
///   `E12, E23, E13, E11-E22, E22-E33, E21, E32, E31`.
pub fn simple_algebra(name: &str) -> Result<LeibnizAlgebra> {
    match name {
        "sl2" => {
            let mut t = StructureTable::zeros(3);
            let (e, h, f) = (0, 1, 2);
            t.set(h, e, e, int(2));
            t.set(e, h, e, int(-2));
            t.set(h, f, f, int(-2));
            t.set(f, h, f, int(2));
            t.set(e, f, h, int(1));
            t.set(f, e, h, int(-1));
            LeibnizAlgebra::new(labels(&["e", "h", "f"]), t)
        }
        "so3" => {
            let mut t = StructureTable::zeros(3);
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                t.set(i, j, k, int(1));
                t.set(j, i, k, int(-1));
            }
            LeibnizAlgebra::new(labels(&["x", "y", "z"]), t)
        }
        "sl3" => {
            let unit = |r: usize, c: usize| {
                let mut m = Matrix::zeros(3, 3);
                m[(r, c)] = int(1);
                m
            };
            let mats = [
                unit(0, 1),
                unit(1, 2),
                unit(0, 2),
                &unit(0, 0) - &unit(1, 1),
                &unit(1, 1) - &unit(2, 2),
                unit(1, 0),
                unit(2, 1),
                unit(2, 0),
            ];
            lie_algebra_from_matrices(labels(&["e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"]), &mats)
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Lie algebra spanned by linearly independent matrices closed under the commutator.
pub fn lie_algebra_from_matrices(labels: Vec<String>, mats: &[Matrix]) -> Result<LeibnizAlgebra> {
    let n = mats.len();
    let flat: Vec<Vector> = mats.iter().map(|m| m.entries().to_vec()).collect();
    let len = flat.first().map_or(0, Vec::len);
    let basis = Matrix::from_columns(len, &flat);
    let mut t = StructureTable::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let comm = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
            let sol = solve_affine(&basis, comm.entries())
                .ok_or(Error::NoSolution("matrices are not closed under the commutator"))?;
            if !sol.homogeneous.is_zero() {
                return Err(Error::NoSolution("matrices are linearly dependent"));
            }
            t.set_basis_product(i, j, &sol.particular);
        }
    }
    LeibnizAlgebra::new(labels, t)
}

/// `rho(b_i) = d_{b_i}` on the algebra's own space.
pub fn adjoint_module(a: &LeibnizAlgebra) -> Result<ModuleAction> {
    if !a.is_lie() {
        return Err(Error::NotLie);
    }
    let rho = (0..a.dim())
        .map(|i| a.basis_left_multiplication(i).into_matrix())
        .collect();
    ModuleAction::new(a.dim(), rho)
}

/// Irreducible `sl2`-module of highest weight `n` (dimension `n + 1`) on
/// weight vectors `v_0, ..., v_n`:
/// `h v_i = (n - 2i) v_i`, `f v_i = (i + 1) v_{i+1}`, `e v_i = (n - i + 1) v_{i-1}`.
pub fn sl2_irreducible_module(n: usize) -> ModuleAction {
    let d = n + 1;
    let mut e = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = int(n as i64 - 2 * i as i64);
        if i + 1 < d {
            f[(i + 1, i)] = int(i as i64 + 1);
        }
        if i > 0 {
            e[(i - 1, i)] = int((n - i + 1) as i64);
        }
    }
    ModuleAction::new(d, alloc::vec![e, h, f]).expect("square matrices")
}

/// Block-diagonal direct sum of two modules over the same algebra.
pub fn direct_sum_module(a: &ModuleAction, b: &ModuleAction) -> Result<ModuleAction> {
    if a.acting_dim() != b.acting_dim() {
        return Err(Error::ActingDimMismatch(a.acting_dim(), b.acting_dim()));
    }
    let (p, q) = (a.space_dim(), b.space_dim());
    let rho = a
        .maps()
        .iter()
        .zip(b.maps())
        .map(|(x, y)| {
            let mut m = Matrix::zeros(p + q, p + q);
            for r in 0..p {
                for c in 0..p {
                    m[(r, c)] = x[(r, c)].clone();
                }
            }
            for r in 0..q {
                for c in 0..q {
                    m[(p + r, p + c)] = y[(r, c)].clone();
                }
            }
            m
        })
        .collect();
    ModuleAction::new(p + q, rho)
}

fn module_labels(s: &LeibnizAlgebra, act: &ModuleAction, prefix: &str) -> Vec<String> {
    if act.space_dim() == s.dim() {
        s.labels().iter().map(|l| format!("{l}'")).collect()
    } else {
        (0..act.space_dim()).map(|p| format!("{prefix}{p}")).collect()
    }
}

fn extension_table(s: &LeibnizAlgebra, act: &ModuleAction, antisymmetric: bool) -> Result<StructureTable> {
    if act.acting_dim() != s.dim() {
        return Err(Error::ActingDimMismatch(s.dim(), act.acting_dim()));
    }
    if !s.is_lie() {
        return Err(Error::NotLie);
    }
    act.check_module_law(s)?;
    let n = s.dim();
    let m = act.space_dim();
    let mut t = StructureTable::zeros(n + m);
    for (i, j, k, c) in s.table().nonzero_entries() {
        t.set(i, j, k, c.clone());
    }
    for i in 0..n {
        let rho = act.rho(i);
        for p in 0..m {
            for q in 0..m {
                let c = &rho[(q, p)];
                if c.is_zero() {
                    continue;
                }
                t.set(i, n + p, n + q, c.clone());
                if antisymmetric {
                    t.set(n + p, i, n + q, -c);
                }
            }
        }
    }
    Ok(t)
}

/// `S ⊕ V` with `(s,0)(t,0) = (st,0)`, `(s,0)(0,v) = (0, rho(s)v)` and `V` acting
/// as zero from the left. Basis: the `S` block then the `V` block.
pub fn split_extension_zero_right(s: &LeibnizAlgebra, act: &ModuleAction) -> Result<LeibnizAlgebra> {
    let t = extension_table(s, act, false)?;
    let mut names = s.labels().to_vec();
    names.extend(module_labels(s, act, "m"));
    LeibnizAlgebra::new(names, t)
}

/// Lie semidirect sum `S ⋉ V` with abelian `V` and `[v, s] = -rho(s)v`.
pub fn lie_semidirect_sum(s: &LeibnizAlgebra, act: &ModuleAction) -> Result<LeibnizAlgebra> {
    let t = extension_table(s, act, true)?;
    let mut names = s.labels().to_vec();
    names.extend(module_labels(s, act, "v"));
    LeibnizAlgebra::new(names, t)
}

/// Basis of `{phi : phi rho1(x) = rho2(x) phi for every generator x}`; each map is
/// `space_dim(act2) x space_dim(act1)`.
pub fn equivariant_hom_basis(act1: &ModuleAction, act2: &ModuleAction) -> Result<Vec<Matrix>> {
    if act1.acting_dim() != act2.acting_dim() {
        return Err(Error::ActingDimMismatch(act1.acting_dim(), act2.acting_dim()));
    }
    let (m1, m2) = (act1.space_dim(), act2.space_dim());
    let var = |r: usize, c: usize| r * m1 + c;
    let mut rows = Vec::new();
    for (r1, r2) in act1.maps().iter().zip(act2.maps()) {
        for r in 0..m2 {
            for c in 0..m1 {
                let mut row = exactlin::zero_vector(m1 * m2);
                for p in 0..m1 {
                    row[var(r, p)] += &r1[(p, c)];
                }
                for q in 0..m2 {
                    row[var(q, c)] -= &r2[(r, q)];
                }
                rows.push(row);
            }
        }
    }
    let kernel = kernel_basis(&Matrix::from_rows(m1 * m2, &rows));
    Ok(kernel
        .basis_vectors()
        .map(|v| {
            let rows: Vec<Vector> = v.chunks(m1.max(1)).map(<[Scalar]>::to_vec).collect();
            Matrix::from_rows(m1, &rows[..m2])
        })
        .collect())
}

/// The split extension of a simple algebra by its adjoint module with zero
/// right action, together with two distinct Levi complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleBundle {
    pub name: String,
    /// Dimension `2n`, basis `S` block then `K` block.
    pub algebra: LeibnizAlgebra,
    /// Second block; equals the Leibniz kernel.
    pub kernel: Subspace,
    /// First block.
    pub s: Subspace,
    /// Diagonal `{(s, s')}`.
    pub s1: Subspace,
    /// `x -> x'`: sends the `i`-th basis vector of the first block to the `i`-th of the second.
    pub prime_map: LinearMap,
}

impl CounterexampleBundle {
    /// Dimension of the simple algebra.
    pub fn block_dim(&self) -> usize {
        self.algebra.dim() / 2
    }

    /// `{(s, lambda s')}`.
    pub fn diagonal_complement(&self, lambda: &Scalar) -> Subspace {
        let n = self.block_dim();
        let vectors: Vec<Vector> = (0..n)
            .map(|i| {
                let mut v = exactlin::unit_vector(2 * n, i);
                v[n + i] = lambda.clone();
                v
            })
            .collect();
        Subspace::span(2 * n, &vectors)
    }

    /// Recovers `lambda` when `u` is a diagonal complement.
    pub fn diagonal_parameter(&self, u: &Subspace) -> Option<Scalar> {
        let n = self.block_dim();
        if u.dim() != n || u.pivots() != (0..n).collect::<Vec<_>>().as_slice() {
            return None;
        }
        let lambda = u.basis()[(0, n)].clone();
        (self.diagonal_complement(&lambda) == *u).then_some(lambda)
    }
}

pub fn diagonal_complement(bundle: &CounterexampleBundle, lambda: &Scalar) -> Subspace {
    bundle.diagonal_complement(lambda)
}

/// Builds and checks the bundle for a catalog algebra.
pub fn counterexample(name: &str) -> Result<CounterexampleBundle> {
    let simple = simple_algebra(name)?;
    let act = adjoint_module(&simple)?;
    let algebra = split_extension_zero_right(&simple, &act)?;
    let n = simple.dim();
    let mut prime = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        prime[(n + i, i)] = int(1);
    }
    let mut bundle = CounterexampleBundle {
        name: name.to_string(),
        algebra,
        kernel: Subspace::coordinate(2 * n, n..2 * n),
        s: Subspace::coordinate(2 * n, 0..n),
        s1: Subspace::zero(2 * n),
        prime_map: LinearMap::new(prime)?,
    };
    bundle.s1 = bundle.diagonal_complement(&int(1));

    if leibniz_kernel(&bundle.algebra) != bundle.kernel {
        return Err(Error::Internal("Leibniz kernel is not the second block"));
    }
    if bundle.s == bundle.s1 {
        return Err(Error::Internal("complements coincide"));
    }
    for u in [&bundle.s, &bundle.s1] {
        if !verify_levi(&bundle.algebra, u)?.all_pass() {
            return Err(Error::Internal("bundle complement fails the Levi checks"));
        }
    }
    // (s, s')(t, t') = (st, (st)')
    for i in 0..n {
        for j in 0..n {
            let x = bundle.s1.basis().row(i);
            let y = bundle.s1.basis().row(j);
            let st = bundle.algebra.table().basis_product(i, j);
            let mut expected = exactlin::zero_vector(2 * n);
            expected[..n].clone_from_slice(&st[..n]);
            let primed = bundle.prime_map.apply(&expected);
            let expected = exactlin::add_vectors(&expected, &primed);
            if bundle.algebra.product(x, y)? != expected {
                return Err(Error::Internal("diagonal product law fails"));
            }
        }
    }
    Ok(bundle)
}
