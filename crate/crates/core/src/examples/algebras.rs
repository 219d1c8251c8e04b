//! Small unital algebras given by structure constants.

use crate::fdvect::MonoidData;
use crate::kernel::{Field, Mat};

/// Monoid from a unit vector and a product `e_i e_j = Σ_k c[k] e_k`.
pub fn from_table(field: Field, name: &str, n: usize, unit: &[i64], prod: impl Fn(usize, usize) -> Vec<i64>) -> MonoidData {
    let unit = Mat::from_i64(field, n, 1, unit).expect("unit length");
    let mut mul = Mat::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in prod(i, j).into_iter().enumerate() {
                if c != 0 {
                    mul.set_i64(k, i * n + j, c);
                }
            }
        }
    }
    MonoidData::new(name, unit, mul).expect("consistent shapes")
}

fn basis(n: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// The ground field as a one-dimensional algebra.
pub fn ground(field: Field, name: &str) -> MonoidData {
    from_table(field, name, 1, &[1], |_, _| vec![1])
}

/// `k^n` with orthogonal idempotents `e_0, ..., e_{n-1}`.
pub fn diagonal(field: Field, name: &str, n: usize) -> MonoidData {
    from_table(field, name, n, &vec![1; n], |i, j| if i == j { basis(n, i) } else { vec![0; n] })
}

/// `k[x]/(f)` for monic `f = x^d + c[d-1] x^{d-1} + ... + c[0]`, basis `1, x, ..., x^{d-1}`.
pub fn poly_quotient(field: Field, name: &str, c: &[i64]) -> MonoidData {
    let d = c.len();
    // x^m reduced mod f, for m < 2d - 1
    let mut powers: Vec<Vec<i64>> = (0..d).map(|k| basis(d, k)).collect();
    for m in d..(2 * d).max(1) {
        let prev = powers[m - 1].clone();
        // x * prev, then replace x^d by -(c[0] + ... + c[d-1] x^{d-1})
        let top = prev[d - 1];
        let mut next = vec![0; d];
        next[1..d].copy_from_slice(&prev[..d - 1]);
        for k in 0..d {
            next[k] -= top * c[k];
        }
        if let Field::Prime(p) = field {
            for x in next.iter_mut() {
                *x = x.rem_euclid(p as i64);
            }
        }
        powers.push(next);
    }
    from_table(field, name, d, &basis(d, 0), |i, j| powers[i + j].clone())
}

/// `k[x]/(x^d)`.
pub fn truncated(field: Field, name: &str, d: usize) -> MonoidData {
    poly_quotient(field, name, &vec![0; d])
}

/// Group algebra from a multiplication table on `0..n` with identity `0`.
pub fn group_algebra(field: Field, name: &str, n: usize, op: impl Fn(usize, usize) -> usize) -> MonoidData {
    from_table(field, name, n, &basis(n, 0), |i, j| basis(n, op(i, j)))
}

pub fn cyclic_group_algebra(field: Field, name: &str, n: usize) -> MonoidData {
    group_algebra(field, name, n, |i, j| (i + j) % n)
}

/// Every `k[x]/(f)` with `f` monic of degree `dim` over GF(p), in lexicographic
/// order of the coefficients of `f`. For `dim = 1` this is just the ground field.
pub fn catalog(p: u64, dim: usize, name: &str) -> Vec<MonoidData> {
    let field = Field::Prime(p);
    if dim <= 1 {
        return vec![ground(field, name)];
    }
    let total = (p as usize).pow(dim as u32);
    (0..total)
        .map(|mut code| {
            let mut c = vec![0i64; dim];
            for slot in c.iter_mut().rev() {
                *slot = (code % p as usize) as i64;
                code /= p as usize;
            }
            poly_quotient(field, name, &c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdvect::check_monoid;

    #[test]
    fn catalogue_algebras_are_monoids() {
        for a in catalog(2, 2, "A").iter().chain(catalog(3, 2, "A").iter()) {
            assert!(check_monoid(a).unwrap().all_pass());
        }
        assert_eq!(catalog(2, 2, "A").len(), 4);
    }

    #[test]
    fn named_families_are_monoids() {
        let q = Field::Rationals;
        for a in [
            diagonal(q, "A", 3),
            truncated(q, "A", 3),
            cyclic_group_algebra(Field::Prime(3), "A", 3),
            poly_quotient(Field::Prime(3), "A", &[2, 0]),
            ground(q, "A"),
        ] {
            let r = check_monoid(&a).unwrap();
            assert!(r.all_pass(), "{}\n{}", a.name, r.render_text());
        }
    }

    #[test]
    fn quotient_reduces_top_power() {
        // x² = -1 in ℚ[x]/(x²+1)
        let a = poly_quotient(Field::Rationals, "A", &[1, 0]);
        let xx = a.mul.mat.get(0, 3).to_string();
        assert_eq!(xx, "-1");
    }
}
