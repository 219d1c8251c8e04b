//! Shared test support: a structure-constant oracle that never touches the
//! matrix pipeline, degenerate iteration setups and a random idempotent generator.
#![allow(dead_code)]

pub mod criteria;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wcp_core::examples::algebras::ground;
use wcp_core::examples::laws::trivial_quadruple;
use wcp_core::iterate::IterSetup;
use wcp_core::wcp::Quadruple;
use wcp_core::{Field, Mat, MonoidData, Scalar};

/// Field elements lifted to ℚ; for GF(p) equality is taken mod p.
#[derive(Clone, Debug)]
pub struct Table {
    pub n: usize,
    /// `c[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i e_j`.
    pub c: Vec<BigRational>,
    pub p: Option<u64>,
}

fn lift(s: &Scalar) -> BigRational {
    match s {
        Scalar::Q(r) => r.clone(),
        Scalar::Fp { value, .. } => BigRational::from_integer(BigInt::from(*value)),
    }
}

fn modulus(f: Field) -> Option<u64> {
    match f {
        Field::Rationals => None,
        Field::Prime(p) => Some(p),
    }
}

impl Table {
    /// Reads `mul` entry by entry: column `i*n + j` is the product `e_i e_j`.
    pub fn from_mul(mul: &Mat) -> Table {
        let n = mul.rows();
        assert_eq!(mul.cols(), n * n);
        let mut c = vec![BigRational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = lift(&mul.get(k, i * n + j));
                }
            }
        }
        Table {
            n,
            c,
            p: modulus(mul.field()),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn same(&self, x: &BigRational, y: &BigRational) -> bool {
        let d = x - y;
        match self.p {
            None => d.is_zero(),
            Some(p) => {
                assert!(d.denom().is_one());
                (d.numer() % BigInt::from(p)).is_zero()
            }
        }
    }

    /// Basis triples `(i, j, k)` where `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn assoc_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ok = (0..n).all(|m| {
                        let mut lhs = BigRational::zero();
                        let mut rhs = BigRational::zero();
                        for l in 0..n {
                            lhs += self.get(i, j, l) * self.get(l, k, m);
                            rhs += self.get(j, k, l) * self.get(i, l, m);
                        }
                        self.same(&lhs, &rhs)
                    });
                    if !ok {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Basis vectors `e_j` where `u e_j ≠ e_j` or `e_j u ≠ e_j`.
    pub fn unit_failures(&self, unit: &Mat) -> Vec<usize> {
        let n = self.n;
        let u: Vec<BigRational> = (0..n).map(|i| lift(&unit.get(i, 0))).collect();
        (0..n)
            .filter(|&j| {
                !(0..n).all(|k| {
                    let mut left = BigRational::zero();
                    let mut right = BigRational::zero();
                    for (i, ui) in u.iter().enumerate() {
                        left += ui * self.get(i, j, k);
                        right += ui * self.get(j, i, k);
                    }
                    let want = if j == k { BigRational::one() } else { BigRational::zero() };
                    self.same(&left, &want) && self.same(&right, &want)
                })
            })
            .collect()
    }

    /// Structure constants of the componentwise product on `X⊗Y⊗Z`.
    pub fn tensor3(x: &Table, y: &Table, z: &Table) -> Table {
        let (a, b, c) = (x.n, y.n, z.n);
        let n = a * b * c;
        let idx = |i: usize, j: usize, k: usize| (i * b + j) * c + k;
        let mut out = vec![BigRational::zero(); n * n * n];
        for (i1, i2, i3) in triples(a, b, c) {
            for (j1, j2, j3) in triples(a, b, c) {
                for (k1, k2, k3) in triples(a, b, c) {
                    let v = x.get(i1, j1, k1) * y.get(i2, j2, k2) * z.get(i3, j3, k3);
                    out[(idx(i1, i2, i3) * n + idx(j1, j2, j3)) * n + idx(k1, k2, k3)] = v;
                }
            }
        }
        Table { n, c: out, p: x.p }
    }

    pub fn agrees(&self, other: &Table) -> bool {
        self.n == other.n && self.c.iter().zip(&other.c).all(|(x, y)| self.same(x, y))
    }
}

fn triples(a: usize, b: usize, c: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                v.push((i, j, k));
            }
        }
    }
    v
}

/// `W = K` with `Δ = id`, `τ = id` next to a given quadruple.
pub fn trivial_w(qv: &Quadruple) -> IterSetup {
    let f = qv.field();
    let n = qv.v.dim();
    let qw = trivial_quadruple(&qv.algebra);
    IterSetup::new(qv.clone(), qw, Mat::identity(f, n), Mat::identity(f, n)).expect("trivial W")
}

/// `V = W = K` over a monoid.
pub fn trivial_vw(a: &MonoidData) -> IterSetup {
    let f = a.field();
    let q = trivial_quadruple(a);
    IterSetup::new(q.clone(), q, Mat::identity(f, 1), Mat::identity(f, 1)).expect("trivial V and W")
}

/// The unit of `K` as a monoid, for building preunits by hand.
pub fn ground_unit(f: Field) -> Mat {
    ground(f, "K").unit.mat
}

fn random_mat(rng: &mut ChaCha8Rng, f: Field, rows: usize, cols: usize) -> Mat {
    let hi = match f {
        Field::Rationals => 4,
        Field::Prime(p) => p as i64,
    };
    let lo = if f == Field::Rationals { -3 } else { 0 };
    let vals: Vec<i64> = (0..rows * cols).map(|_| rng.random_range(lo..hi)).collect();
    Mat::from_i64(f, rows, cols, &vals).expect("sized")
}

/// `i` of full column rank, `p = (p₀∘i)⁻¹∘p₀` for a random `p₀` with `p₀∘i`
/// invertible, `E = i∘p`.
pub fn random_idempotent(rng: &mut ChaCha8Rng, f: Field, n: usize, r: usize) -> Mat {
    let i = loop {
        let m = random_mat(rng, f, n, r);
        if m.rank() == r {
            break m;
        }
    };
    let p = loop {
        let p0 = random_mat(rng, f, r, n);
        if let Some(inv) = p0.compose(&i).unwrap().inverse() {
            break inv.compose(&p0).unwrap();
        }
    };
    i.compose(&p).unwrap()
}

pub const FIELDS: [Field; 5] = [
    Field::Rationals,
    Field::Prime(2),
    Field::Prime(3),
    Field::Prime(5),
    Field::Prime(7),
];

/// The 200 idempotents of the kernel suite, with their field and rank.
pub fn idempotent_suite(seed: u64) -> Vec<(Field, usize, Mat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..200)
        .map(|k| {
            let f = FIELDS[k % FIELDS.len()];
            let n = rng.random_range(1..=6);
            let r = rng.random_range(1..=n);
            (f, r, random_idempotent(&mut rng, f, n, r))
        })
        .collect()
}
