use super::mat::{Entries, Mat};
use super::scalar::{Arith, ModArith, QArith};
use super::KernelError;

/// Image factorisation of an idempotent `E = inj ∘ proj` with `proj ∘ inj = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub rank: usize,
    pub inj: Mat,
    pub proj: Mat,
}

/// In-place reduced row echelon form on a `rows x cols` buffer, pivoting only
/// within the first `pivot_cols` columns. Returns the pivot columns.
fn rref<A: Arith>(ar: &A, m: &mut [A::E], rows: usize, cols: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !ar.is_zero(&m[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                m.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&m[r * cols + c]);
        for j in c..cols {
            m[r * cols + j] = ar.mul(&m[r * cols + j], &inv);
        }
        for i in 0..rows {
            if i == r || ar.is_zero(&m[i * cols + c]) {
                continue;
            }
            let factor = m[i * cols + c].clone();
            for j in c..cols {
                let t = ar.mul(&factor, &m[r * cols + j]);
                m[i * cols + j] = ar.sub(&m[i * cols + j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn augment<T: Clone>(a: &[T], ac: usize, b: &[T], bc: usize, rows: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(rows * (ac + bc));
    for i in 0..rows {
        out.extend_from_slice(&a[i * ac..(i + 1) * ac]);
        out.extend_from_slice(&b[i * bc..(i + 1) * bc]);
    }
    out
}

fn solve_generic<A: Arith>(
    ar: &A,
    a: &[A::E],
    b: &[A::E],
    n: usize,
    r: usize,
    m: usize,
) -> Result<Vec<A::E>, KernelError> {
    let cols = r + m;
    let mut aug = augment(a, r, b, m, n);
    let pivots = rref(ar, &mut aug, n, cols, r);
    let rank = pivots.len();
    for j in 0..m {
        if (rank..n).any(|i| !ar.is_zero(&aug[i * cols + r + j])) {
            return Err(KernelError::Inconsistent { column: j });
        }
    }
    let mut x = vec![ar.zero(); r * m];
    for (i, &pc) in pivots.iter().enumerate() {
        for j in 0..m {
            x[pc * m + j] = aug[i * cols + r + j].clone();
        }
    }
    Ok(x)
}

impl Mat {
    pub fn rank(&self) -> usize {
        let (r, c) = self.shape();
        match &self.data {
            Entries::Q(v) => rref(&QArith, &mut v.clone(), r, c, c).len(),
            Entries::Fp { p, v } => rref(&ModArith { p: *p }, &mut v.clone(), r, c, c).len(),
        }
    }

    /// Indices of the columns that are not in the span of the columns before them.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let (r, c) = self.shape();
        match &self.data {
            Entries::Q(v) => rref(&QArith, &mut v.clone(), r, c, c),
            Entries::Fp { p, v } => rref(&ModArith { p: *p }, &mut v.clone(), r, c, c),
        }
    }

    pub fn inverse(&self) -> Option<Mat> {
        let (n, c) = self.shape();
        if n != c {
            return None;
        }
        let id = Mat::identity(self.field(), n);
        let x = solve_right(self, &id).ok()?;
        (self.rank() == n).then_some(x)
    }
}

/// Finds `X` with `A ∘ X = B`. Free variables are set to zero.
pub fn solve_right(a: &Mat, b: &Mat) -> Result<Mat, KernelError> {
    if a.rows() != b.rows() {
        return Err(KernelError::Shape {
            op: "solve_right",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let (n, r) = a.shape();
    let m = b.cols();
    let data = match (&a.data, &b.data) {
        (Entries::Q(x), Entries::Q(y)) => Entries::Q(solve_generic(&QArith, x, y, n, r, m)?),
        (Entries::Fp { p, v: x }, Entries::Fp { p: q, v: y }) if p == q => Entries::Fp {
            p: *p,
            v: solve_generic(&ModArith { p: *p }, x, y, n, r, m)?,
        },
        _ => {
            return Err(KernelError::FieldMismatch {
                left: a.field(),
                right: b.field(),
            })
        }
    };
    Ok(Mat::from_entries(r, m, data))
}

/// Splits an idempotent through its image. The injection is made of the pivot
/// columns of `E`; the projection solves `inj ∘ proj = E`.
pub fn split_idempotent(e: &Mat) -> Result<Splitting, KernelError> {
    let (n, c) = e.shape();
    if n != c {
        return Err(KernelError::NotSquare { shape: e.shape() });
    }
    let ee = e.compose(e)?;
    if let Some((row, col)) = ee.first_diff(e) {
        return Err(KernelError::NotIdempotent { row, col });
    }
    let pivots = e.pivot_columns();
    let inj = e.select_cols(&pivots);
    let proj = solve_right(&inj, e)?;
    Ok(Splitting {
        rank: pivots.len(),
        inj,
        proj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Field;

    fn q(r: usize, c: usize, v: &[i64]) -> Mat {
        Mat::from_i64(Field::Rationals, r, c, v).unwrap()
    }

    #[test]
    fn split_diagonal_projection() {
        let s = split_idempotent(&q(2, 2, &[1, 0, 0, 0])).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.inj, q(2, 1, &[1, 0]));
        assert_eq!(s.proj, q(1, 2, &[1, 0]));
    }

    #[test]
    fn split_oblique_projection() {
        let s = split_idempotent(&q(2, 2, &[1, 1, 0, 0])).unwrap();
        assert_eq!(s.inj, q(2, 1, &[1, 0]));
        assert_eq!(s.proj, q(1, 2, &[1, 1]));
    }

    #[test]
    fn split_identity_is_trivial() {
        let id = Mat::identity(Field::Prime(3), 3);
        let s = split_idempotent(&id).unwrap();
        assert_eq!(s.rank, 3);
        assert_eq!(s.inj, id);
        assert_eq!(s.proj, id);
    }

    #[test]
    fn non_idempotent_rejected() {
        assert!(matches!(
            split_idempotent(&q(2, 2, &[2, 0, 0, 0])),
            Err(KernelError::NotIdempotent { row: 0, col: 0 })
        ));
        assert!(matches!(
            split_idempotent(&q(1, 2, &[1, 0])),
            Err(KernelError::NotSquare { .. })
        ));
    }

    #[test]
    fn solve_right_examples() {
        let x = solve_right(&q(2, 1, &[1, 0]), &q(2, 2, &[1, 1, 0, 0])).unwrap();
        assert_eq!(x, q(1, 2, &[1, 1]));
        assert!(matches!(
            solve_right(&q(2, 1, &[1, 1]), &q(2, 1, &[1, 0])),
            Err(KernelError::Inconsistent { column: 0 })
        ));
    }

    #[test]
    fn inverse_over_gf5() {
        let f = Field::Prime(5);
        let m = Mat::from_i64(f, 2, 2, &[1, 2, 3, 4]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), Mat::identity(f, 2));
        let sing = Mat::from_i64(f, 2, 2, &[1, 2, 2, 4]).unwrap();
        assert!(sing.inverse().is_none());
    }
}
