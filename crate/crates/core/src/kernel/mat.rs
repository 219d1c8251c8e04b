use num_rational::BigRational;

use super::scalar::{reduce_i64, Arith, ModArith, QArith};
use super::{Field, KernelError, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Entries {
    Q(Vec<BigRational>),
    Fp { p: u64, v: Vec<u64> },
}

/// Dense row-major matrix over ℚ or GF(p).
///
/// A map `f: X -> Y` is stored as a `dim Y x dim X` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    pub(crate) data: Entries,
}

macro_rules! dispatch {
    ($m:expr, |$ar:ident, $v:ident| $body:expr) => {
        match &$m.data {
            Entries::Q($v) => {
                let $ar = QArith;
                $body
            }
            Entries::Fp { p, v: $v } => {
                let $ar = ModArith { p: *p };
                $body
            }
        }
    };
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, |$ar:ident, $x:ident, $y:ident, $wrap:ident| $body:expr) => {
        match (&$a.data, &$b.data) {
            (Entries::Q($x), Entries::Q($y)) => {
                let $ar = QArith;
                let $wrap = |v: Vec<BigRational>| Entries::Q(v);
                Ok($body)
            }
            (Entries::Fp { p, v: $x }, Entries::Fp { p: q, v: $y }) if p == q => {
                let $ar = ModArith { p: *p };
                let pp = *p;
                let $wrap = move |v: Vec<u64>| Entries::Fp { p: pp, v };
                Ok($body)
            }
            _ => Err(KernelError::FieldMismatch {
                left: $a.field(),
                right: $b.field(),
            }),
        }
    };
}

impl Mat {
    pub(crate) fn from_entries(rows: usize, cols: usize, data: Entries) -> Mat {
        Mat { rows, cols, data }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        let n = rows * cols;
        let data = match field {
            Field::Rationals => Entries::Q(vec![QArith.zero(); n]),
            Field::Prime(p) => Entries::Fp { p, v: vec![0; n] },
        };
        Mat { rows, cols, data }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set_i64(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integers, reducing mod p when needed.
    pub fn from_i64(field: Field, rows: usize, cols: usize, vals: &[i64]) -> Result<Mat, KernelError> {
        if vals.len() != rows * cols {
            return Err(KernelError::EntryCount {
                expected: rows * cols,
                found: vals.len(),
            });
        }
        let mut m = Mat::zeros(field, rows, cols);
        for (k, &x) in vals.iter().enumerate() {
            m.set_i64(k / cols.max(1), k % cols.max(1), x);
        }
        Ok(m)
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Mat {
        let mut m = Mat::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let x = f(r, c);
                if x != 0 {
                    m.set_i64(r, c, x);
                }
            }
        }
        m
    }

    pub fn from_scalars(field: Field, rows: usize, cols: usize, vals: Vec<Scalar>) -> Result<Mat, KernelError> {
        if vals.len() != rows * cols {
            return Err(KernelError::EntryCount {
                expected: rows * cols,
                found: vals.len(),
            });
        }
        let data = match field {
            Field::Rationals => {
                let mut out = Vec::with_capacity(vals.len());
                for s in vals {
                    match s {
                        Scalar::Q(q) => out.push(q),
                        other => {
                            return Err(KernelError::FieldMismatch {
                                left: field,
                                right: other.field(),
                            })
                        }
                    }
                }
                Entries::Q(out)
            }
            Field::Prime(p) => {
                let mut out = Vec::with_capacity(vals.len());
                for s in vals {
                    match s {
                        Scalar::Fp { value, p: q } if q == p => out.push(value),
                        other => {
                            return Err(KernelError::FieldMismatch {
                                left: field,
                                right: other.field(),
                            })
                        }
                    }
                }
                Entries::Fp { p, v: out }
            }
        };
        Ok(Mat { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> Field {
        match &self.data {
            Entries::Q(_) => Field::Rationals,
            Entries::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        let k = r * self.cols + c;
        match &self.data {
            Entries::Q(v) => Scalar::Q(v[k].clone()),
            Entries::Fp { p, v } => Scalar::Fp { value: v[k], p: *p },
        }
    }

    pub fn is_zero_at(&self, r: usize, c: usize) -> bool {
        let k = r * self.cols + c;
        match &self.data {
            Entries::Q(v) => QArith.is_zero(&v[k]),
            Entries::Fp { v, .. } => v[k] == 0,
        }
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) -> Result<(), KernelError> {
        let k = r * self.cols + c;
        let field = self.field();
        match (&mut self.data, s) {
            (Entries::Q(v), Scalar::Q(q)) => v[k] = q,
            (Entries::Fp { p, v }, Scalar::Fp { value, p: q }) if *p == q => v[k] = value,
            (_, s) => {
                return Err(KernelError::FieldMismatch {
                    left: field,
                    right: s.field(),
                })
            }
        }
        Ok(())
    }

    pub fn set_i64(&mut self, r: usize, c: usize, x: i64) {
        let k = r * self.cols + c;
        match &mut self.data {
            Entries::Q(v) => v[k] = BigRational::from_integer(x.into()),
            Entries::Fp { p, v } => v[k] = reduce_i64(x, *p),
        }
    }

    /// Row-major entries as field elements.
    pub fn scalars(&self) -> Vec<Scalar> {
        (0..self.rows * self.cols)
            .map(|k| self.get(k / self.cols, k % self.cols))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        dispatch!(self, |ar, v| v.iter().all(|x| ar.is_zero(x)))
    }

    /// `self ∘ f`, i.e. the matrix product `self · f`.
    pub fn compose(&self, f: &Mat) -> Result<Mat, KernelError> {
        if self.cols != f.rows {
            return Err(KernelError::Shape {
                op: "compose",
                left: self.shape(),
                right: f.shape(),
            });
        }
        let (n, k, m) = (self.rows, self.cols, f.cols);
        dispatch2!(self, f, |ar, a, b, wrap| {
            let mut out = vec![ar.zero(); n * m];
            for i in 0..n {
                let row = &mut out[i * m..(i + 1) * m];
                for t in 0..k {
                    let x = &a[i * k + t];
                    if ar.is_zero(x) {
                        continue;
                    }
                    let brow = &b[t * m..(t + 1) * m];
                    for (j, y) in brow.iter().enumerate() {
                        if !ar.is_zero(y) {
                            ar.mul_add(&mut row[j], x, y);
                        }
                    }
                }
            }
            Mat::from_entries(n, m, wrap(out))
        })
    }

    /// Kronecker product: `(e_i ⊗ e_j)` has flat index `i * dim(Y) + j`.
    pub fn tensor(&self, g: &Mat) -> Result<Mat, KernelError> {
        let (r1, c1) = self.shape();
        let (r2, c2) = g.shape();
        let rows = r1 * r2;
        let cols = c1 * c2;
        dispatch2!(self, g, |ar, a, b, wrap| {
            let mut out = vec![ar.zero(); rows * cols];
            for i1 in 0..r1 {
                for j1 in 0..c1 {
                    let x = &a[i1 * c1 + j1];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for i2 in 0..r2 {
                        let base = (i1 * r2 + i2) * cols + j1 * c2;
                        for j2 in 0..c2 {
                            let y = &b[i2 * c2 + j2];
                            if !ar.is_zero(y) {
                                out[base + j2] = ar.mul(x, y);
                            }
                        }
                    }
                }
            }
            Mat::from_entries(rows, cols, wrap(out))
        })
    }

    pub fn add(&self, g: &Mat) -> Result<Mat, KernelError> {
        self.same_shape(g, "add")?;
        dispatch2!(self, g, |ar, a, b, wrap| {
            let out = a.iter().zip(b.iter()).map(|(x, y)| ar.add(x, y)).collect();
            Mat::from_entries(self.rows, self.cols, wrap(out))
        })
    }

    pub fn sub(&self, g: &Mat) -> Result<Mat, KernelError> {
        self.same_shape(g, "sub")?;
        dispatch2!(self, g, |ar, a, b, wrap| {
            let out = a.iter().zip(b.iter()).map(|(x, y)| ar.sub(x, y)).collect();
            Mat::from_entries(self.rows, self.cols, wrap(out))
        })
    }

    pub fn scale(&self, s: &Scalar) -> Result<Mat, KernelError> {
        let mut out = self.clone();
        match (&mut out.data, s) {
            (Entries::Q(v), Scalar::Q(q)) => v.iter_mut().for_each(|x| *x = &*x * q),
            (Entries::Fp { p, v }, Scalar::Fp { value, p: q }) if p == q => {
                let ar = ModArith { p: *p };
                v.iter_mut().for_each(|x| *x = ar.mul(x, value));
            }
            _ => {
                return Err(KernelError::FieldMismatch {
                    left: self.field(),
                    right: s.field(),
                })
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Mat {
        let (r, c) = self.shape();
        let data = match &self.data {
            Entries::Q(v) => Entries::Q(transpose_vec(v, r, c)),
            Entries::Fp { p, v } => Entries::Fp {
                p: *p,
                v: transpose_vec(v, r, c),
            },
        };
        Mat { rows: c, cols: r, data }
    }

    /// Selects the given columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let r = self.rows;
        let n = cols.len();
        let mut out = Mat::zeros(self.field(), r, n);
        for i in 0..r {
            for (k, &c) in cols.iter().enumerate() {
                let k_src = i * self.cols + c;
                let k_dst = i * n + k;
                match (&mut out.data, &self.data) {
                    (Entries::Q(d), Entries::Q(s)) => d[k_dst] = s[k_src].clone(),
                    (Entries::Fp { v: d, .. }, Entries::Fp { v: s, .. }) => d[k_dst] = s[k_src],
                    _ => unreachable!(),
                }
            }
        }
        out
    }

    /// First `(row, col)` where the two matrices differ, scanning column by column.
    pub fn first_diff(&self, g: &Mat) -> Option<(usize, usize)> {
        if self.shape() != g.shape() {
            return Some((0, 0));
        }
        for c in 0..self.cols {
            for r in 0..self.rows {
                if self.get(r, c) != g.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    fn same_shape(&self, g: &Mat, op: &'static str) -> Result<(), KernelError> {
        if self.shape() != g.shape() {
            return Err(KernelError::Shape {
                op,
                left: self.shape(),
                right: g.shape(),
            });
        }
        Ok(())
    }
}

fn transpose_vec<T: Clone>(v: &[T], r: usize, c: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len());
    for j in 0..c {
        for i in 0..r {
            out.push(v[i * c + j].clone());
        }
    }
    out
}
