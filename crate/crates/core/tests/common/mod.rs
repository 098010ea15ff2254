//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use kakutani::{FiniteSpace, Relation, RelationSystem, Scalar, Subspace};
use proptest::prelude::*;
use rand::Rng;

pub fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

pub fn row(xs: &[&str]) -> Vec<Scalar> {
    xs.iter().map(|s| q(s)).collect()
}

pub fn sub(n: usize, rows: &[&[&str]]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| row(r)).collect();
    Subspace::span(&FiniteSpace::numbered(n).unwrap(), &rows).unwrap()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let k = m.len();
    if k == 0 {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for (j, head) in m[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = head * &det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank as the size of the largest nonvanishing minor. Exponential; small inputs only.
pub fn minor_rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let max = rows.len().min(cols);
    for k in (1..=max).rev() {
        for rs in subsets(rows.len(), k) {
            for cs in subsets(cols, k) {
                let m: Vec<Vec<Scalar>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                if !det(&m).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::zero()),
        5 => (-4i64..=4, 1i64..=3).prop_map(|(p, d)| Scalar::ratio(p, d).unwrap()),
    ]
}

/// Matrix rows with `cols` columns.
pub fn rows_strategy(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(small_scalar(), cols), 0..=max_rows)
}

/// A random subspace over `numbered(n)` for `n` in `1..=max_n`.
pub fn subspace_strategy(max_n: usize, max_rows: usize) -> impl Strategy<Value = Subspace> {
    (1..=max_n).prop_flat_map(move |n| {
        rows_strategy(max_rows, n)
            .prop_map(move |rows| Subspace::span(&FiniteSpace::numbered(n).unwrap(), &rows).unwrap())
    })
}

pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    if rng.gen_bool(0.35) {
        Scalar::zero()
    } else {
        Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)).unwrap()
    }
}

/// `λ` drawn from `{0, 1}` or rational in `(0, 1)`.
pub fn random_lambda(rng: &mut impl Rng, algebraic: bool) -> Scalar {
    match rng.gen_range(0..4) {
        0 => Scalar::zero(),
        1 => Scalar::one(),
        _ if algebraic => Scalar::from_int(rng.gen_range(0..=1)),
        _ => {
            let d = rng.gen_range(2..=7);
            Scalar::ratio(rng.gen_range(1..d), d).unwrap()
        }
    }
}

/// Canonical random relation system on `n` points.
pub fn random_relations(rng: &mut impl Rng, n: usize, algebraic: bool) -> RelationSystem {
    let space = FiniteSpace::numbered(n).unwrap();
    let count = rng.gen_range(0..=n);
    let rels: Vec<Relation> = (0..count)
        .map(|_| {
            let t = rng.gen_range(0..n);
            let s = rng.gen_range(0..n);
            Relation::new(t, s, random_lambda(rng, algebraic))
        })
        .collect();
    kakutani::canonicalize(&RelationSystem::new(&space, rels).unwrap())
}

pub fn random_rows(rng: &mut impl Rng, n: usize, count: usize) -> Vec<Vec<Scalar>> {
    (0..count).map(|_| (0..n).map(|_| random_scalar(rng)).collect()).collect()
}

/// Random combination of the basis of `a`.
pub fn random_member(rng: &mut impl Rng, a: &Subspace) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = (0..a.dim())
        .map(|_| Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4)).unwrap())
        .collect();
    a.basis().combine(&coeffs)
}

/// Mixes relation-defined spaces, subspaces of them, and unstructured spans
/// so both outcomes of every decision show up.
pub fn random_generator_set(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Subspace {
    let n = rng.gen_range(min_n..=max_n);
    let space = FiniteSpace::numbered(n).unwrap();
    match rng.gen_range(0..3) {
        0 => {
            let algebraic = rng.gen_bool(0.5);
            kakutani::relation_space(&random_relations(rng, n, algebraic))
        }
        1 => {
            let host = kakutani::relation_space(&random_relations(rng, n, false));
            let k = rng.gen_range(0..=host.dim());
            let rows: Vec<Vec<Scalar>> = (0..k).map(|_| random_member(rng, &host)).collect();
            Subspace::span(&space, &rows).unwrap()
        }
        _ => {
            let k = rng.gen_range(0..=n.min(4));
            Subspace::span(&space, &random_rows(rng, n, k)).unwrap()
        }
    }
}
