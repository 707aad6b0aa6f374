//! Small bialgebras used throughout the tests and the command line tool.

use crate::bialgebra::{Bialgebra, Braiding};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

type Terms = Vec<(i64, usize)>;
type Terms2 = Vec<(i64, usize, usize)>;

/// Assemble structure matrices from products, coproducts and counit values of basis elements.
fn assemble(
    n: usize,
    grading: Vec<u8>,
    braiding: Braiding,
    mul: impl Fn(usize, usize) -> Terms,
    unit: usize,
    comul: impl Fn(usize) -> Terms2,
    counit: impl Fn(usize) -> i64,
) -> Bialgebra {
    let mut m = Matrix::zeros(n, n * n);
    let mut delta = Matrix::zeros(n * n, n);
    let mut u = Matrix::zeros(n, 1);
    let mut eps = Matrix::zeros(1, n);
    for i in 0..n {
        for j in 0..n {
            for (c, k) in mul(i, j) {
                let v = m.get(k, i * n + j) + &Scalar::from_int(c);
                m.set(k, i * n + j, v);
            }
        }
        for (c, a, b) in comul(i) {
            let v = delta.get(a * n + b, i) + &Scalar::from_int(c);
            delta.set(a * n + b, i, v);
        }
        eps.set(0, i, Scalar::from_int(counit(i)));
    }
    u.set(unit, 0, Scalar::one());
    Bialgebra { n, grading, braiding, m, u, delta, eps, field: None }
}

/// Group algebra of a finite group given by its multiplication table, identity at index 0.
pub fn group_algebra(table: &[Vec<usize>]) -> Bialgebra {
    let n = table.len();
    assemble(n, vec![0; n], Braiding::Flip, |i, j| vec![(1, table[i][j])], 0, |i| vec![(1, i, i)], |_| 1)
}

pub fn cyclic(k: usize) -> Bialgebra {
    let t: Vec<Vec<usize>> = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
    group_algebra(&t)
}

/// Q[Z/2] on (1, g).
pub fn z2() -> Bialgebra {
    cyclic(2)
}

/// The six permutations of {0,1,2}, identity first; `σ·τ = σ∘τ`.
pub fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

pub fn s3() -> Bialgebra {
    let el = s3_elements();
    let idx = |p: [usize; 3]| el.iter().position(|&q| q == p).unwrap();
    let t: Vec<Vec<usize>> = el
        .iter()
        .map(|s| el.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    group_algebra(&t)
}

/// Functions on a cyclic group, on the basis of point masses δ_i.
pub fn function_algebra(k: usize) -> Bialgebra {
    let mut b = assemble(
        k,
        vec![0; k],
        Braiding::Flip,
        |i, j| if i == j { vec![(1, i)] } else { vec![] },
        0,
        |c| (0..k).map(|i| (1, i, (c + k - i) % k)).collect(),
        |c| i64::from(c == 0),
    );
    b.u = Matrix::column(vec![Scalar::one(); k]);
    b
}

/// Q^{Z/3}.
pub fn z3_functions() -> Bialgebra {
    function_algebra(3)
}

/// Monoid algebra of {1, e} with e² = e: a bialgebra with no antipode.
pub fn idempotent() -> Bialgebra {
    group_algebra(&[vec![0, 1], vec![1, 1]])
}

/// Sweedler's four-dimensional algebra on (1, g, x, gx):
/// g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x.
pub fn sweedler() -> Bialgebra {
    let mul = |i: usize, j: usize| -> Terms {
        match (i, j) {
            (0, j) => vec![(1, j)],
            (i, 0) => vec![(1, i)],
            (1, 1) => vec![(1, 0)],
            (1, 2) => vec![(1, 3)],
            (1, 3) => vec![(1, 2)],
            (2, 1) => vec![(-1, 3)],
            (3, 1) => vec![(-1, 2)],
            _ => vec![],
        }
    };
    let comul = |i: usize| -> Terms2 {
        match i {
            0 => vec![(1, 0, 0)],
            1 => vec![(1, 1, 1)],
            2 => vec![(1, 2, 0), (1, 1, 2)],
            _ => vec![(1, 3, 1), (1, 0, 3)],
        }
    };
    assemble(4, vec![0; 4], Braiding::Flip, mul, 0, comul, |i| i64::from(i < 2))
}

/// Exterior algebra on one odd primitive θ, in super vector spaces.
pub fn super_line() -> Bialgebra {
    let mul = |i: usize, j: usize| -> Terms {
        match (i, j) {
            (0, j) => vec![(1, j)],
            (i, 0) => vec![(1, i)],
            _ => vec![],
        }
    };
    let comul = |i: usize| -> Terms2 {
        if i == 0 {
            vec![(1, 0, 0)]
        } else {
            vec![(1, 1, 0), (1, 0, 1)]
        }
    };
    assemble(2, vec![0, 1], Braiding::Super, mul, 0, comul, |i| i64::from(i == 0))
}

/// Q[Z/2] with Δg replaced by g⊗1.
pub fn corrupted_z2() -> Bialgebra {
    let mut b = z2();
    b.delta = Matrix::from_ints(4, 2, &[1, 0, 0, 0, 0, 1, 0, 0]);
    b
}

/// The trivial one-dimensional bialgebra.
pub fn trivial() -> Bialgebra {
    group_algebra(&[vec![0]])
}

/// Built-ins addressable by name.
pub fn by_name(name: &str) -> Option<Bialgebra> {
    Some(match name {
        "z2" | "Q[Z/2]" => z2(),
        "s3" | "Q[S3]" => s3(),
        "z3-functions" | "Q^Z3" => z3_functions(),
        "idempotent" | "Q[M]" => idempotent(),
        "sweedler" => sweedler(),
        "super-line" => super_line(),
        "corrupted-z2" => corrupted_z2(),
        "trivial" => trivial(),
        _ => return None,
    })
}

pub const NAMES: [&str; 8] = ["z2", "s3", "z3-functions", "idempotent", "sweedler", "super-line", "corrupted-z2", "trivial"];
