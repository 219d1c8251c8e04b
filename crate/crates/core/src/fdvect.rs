//! Named tensor objects, morphisms between them, and monoids in finite-dimensional
//! vector spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Field, Mat};
use crate::report::{Check, Report, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub name: String,
    pub dim: usize,
}

/// Ordered list of named factors. The empty list is the unit object `K`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FObj {
    factors: Vec<Factor>,
}

impl FObj {
    pub fn unit() -> FObj {
        FObj::default()
    }

    pub fn named(name: &str, dim: usize) -> FObj {
        FObj {
            factors: vec![Factor {
                name: name.to_string(),
                dim,
            }],
        }
    }

    pub fn from_factors(factors: Vec<Factor>) -> FObj {
        FObj { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn tensor(&self, other: &FObj) -> FObj {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        FObj { factors }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.factors.iter().map(|f| f.name.clone()).collect()
    }

    /// Shape compatibility ignores names and one-dimensional factors.
    pub fn same_shape(&self, other: &FObj) -> bool {
        let a: Vec<_> = self.dims().into_iter().filter(|&d| d != 1).collect();
        let b: Vec<_> = other.dims().into_iter().filter(|&d| d != 1).collect();
        a == b
    }

    /// Decomposes a flat basis index into per-factor indices.
    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (k, f) in self.factors.iter().enumerate().rev() {
            out[k] = flat % f.dim.max(1);
            flat /= f.dim.max(1);
        }
        out
    }
}

impl fmt::Display for FObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "K");
        }
        let names: Vec<_> = self.factors.iter().map(|x| x.name.as_str()).collect();
        write!(f, "{}", names.join("⊗"))
    }
}

/// A linear map `dom -> cod` with its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMor {
    pub dom: FObj,
    pub cod: FObj,
    pub mat: Mat,
}

impl FMor {
    pub fn new(dom: FObj, cod: FObj, mat: Mat) -> Result<FMor> {
        if mat.shape() != (cod.dim(), dom.dim()) {
            return Err(Error::Shape {
                context: format!("matrix for {dom} -> {cod}"),
                expected: vec![cod.dim(), dom.dim()],
                found: vec![mat.rows(), mat.cols()],
            });
        }
        Ok(FMor { dom, cod, mat })
    }

    pub fn identity(field: Field, obj: &FObj) -> FMor {
        FMor {
            dom: obj.clone(),
            cod: obj.clone(),
            mat: Mat::identity(field, obj.dim()),
        }
    }

    pub fn zero(field: Field, dom: &FObj, cod: &FObj) -> FMor {
        FMor {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: Mat::zeros(field, cod.dim(), dom.dim()),
        }
    }

    /// The symmetry `X⊗Y -> Y⊗X`.
    pub fn swap(field: Field, x: &FObj, y: &FObj) -> FMor {
        let (dx, dy) = (x.dim(), y.dim());
        let mat = Mat::from_fn(field, dx * dy, dx * dy, |r, c| {
            let (i, j) = (c / dy, c % dy);
            (r == j * dx + i) as i64
        });
        FMor {
            dom: x.tensor(y),
            cod: y.tensor(x),
            mat,
        }
    }

    pub fn field(&self) -> Field {
        self.mat.field()
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &FMor) -> Result<FMor> {
        if !self.dom.same_shape(&f.cod) {
            return Err(Error::Shape {
                context: format!("composing ({} -> {}) after ({} -> {})", self.dom, self.cod, f.dom, f.cod),
                expected: self.dom.dims(),
                found: f.cod.dims(),
            });
        }
        Ok(FMor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.compose(&f.mat)?,
        })
    }

    /// Tensor product. All data in one computation share a field, so a mismatch
    /// here is a programming error.
    pub fn tensor(&self, g: &FMor) -> FMor {
        FMor {
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            mat: self.mat.tensor(&g.mat).expect("tensor of morphisms over different fields"),
        }
    }

    /// Same underlying map with relabelled endpoints of identical shape.
    pub fn relabel(&self, dom: &FObj, cod: &FObj) -> Result<FMor> {
        if !dom.same_shape(&self.dom) || !cod.same_shape(&self.cod) {
            return Err(Error::Shape {
                context: format!("relabelling {} -> {} as {dom} -> {cod}", self.dom, self.cod),
                expected: self.dom.dims(),
                found: dom.dims(),
            });
        }
        FMor::new(dom.clone(), cod.clone(), self.mat.clone())
    }

    /// `None` when equal, otherwise the first disagreement.
    pub fn diff(&self, other: &FMor) -> Result<Option<Witness>> {
        if self.mat.shape() != other.mat.shape() {
            return Err(Error::Shape {
                context: format!("comparing {} -> {} with {} -> {}", self.dom, self.cod, other.dom, other.cod),
                expected: vec![self.mat.rows(), self.mat.cols()],
                found: vec![other.mat.rows(), other.mat.cols()],
            });
        }
        Ok(self.mat.first_diff(&other.mat).map(|(r, c)| Witness {
            input: self.dom.multi_index(c),
            input_factors: self.dom.names(),
            output: self.cod.multi_index(r),
            output_factors: self.cod.names(),
            lhs: self.mat.get(r, c).to_string(),
            rhs: other.mat.get(r, c).to_string(),
        }))
    }
}

/// Operand of [`tensor!`]: a morphism, or an object standing for its identity.
pub enum Term<'a> {
    Mor(&'a FMor),
    Obj(&'a FObj),
}

pub trait IntoTerm {
    fn term(&self) -> Term<'_>;
}

impl IntoTerm for FMor {
    fn term(&self) -> Term<'_> {
        Term::Mor(self)
    }
}

impl IntoTerm for FObj {
    fn term(&self) -> Term<'_> {
        Term::Obj(self)
    }
}

impl<T: IntoTerm + ?Sized> IntoTerm for &T {
    fn term(&self) -> Term<'_> {
        (**self).term()
    }
}

pub fn tensor_terms(terms: &[Term<'_>]) -> FMor {
    let field = terms
        .iter()
        .find_map(|t| match t {
            Term::Mor(m) => Some(m.field()),
            Term::Obj(_) => None,
        })
        .expect("tensor! needs at least one morphism");
    let mut acc: Option<FMor> = None;
    for t in terms {
        let m = match t {
            Term::Mor(m) => (*m).clone(),
            Term::Obj(o) => FMor::identity(field, o),
        };
        acc = Some(match acc {
            None => m,
            Some(a) => a.tensor(&m),
        });
    }
    acc.expect("non-empty")
}

/// `f1 ∘ f2 ∘ ... ∘ fn`.
pub fn compose_chain(maps: &[&FMor]) -> Result<FMor> {
    let (last, rest) = maps.split_last().expect("compose! needs at least one morphism");
    let mut acc = (*last).clone();
    for g in rest.iter().rev() {
        acc = g.after(&acc)?;
    }
    Ok(acc)
}

/// `tensor!(a, psi, v)` is `A ⊗ ψ ⊗ V`, objects standing for identities.
#[macro_export]
macro_rules! tensor {
    ($($t:expr),+ $(,)?) => {
        $crate::fdvect::tensor_terms(&[$($crate::fdvect::IntoTerm::term(&$t)),+])
    };
}

/// `compose!(f, g, h)` is `f ∘ g ∘ h`; fails on a shape mismatch.
#[macro_export]
macro_rules! compose {
    ($($t:expr),+ $(,)?) => {
        $crate::fdvect::compose_chain(&[$(&$t),+])
    };
}

/// Compares two morphisms and records the outcome under `label`.
pub fn check_eq(label: &str, context: &str, lhs: &FMor, rhs: &FMor) -> Result<Check> {
    Ok(Check::new(label, context, lhs.diff(rhs)?))
}

/// A monoid `(A, μ, η)` on a single named factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidData {
    pub name: String,
    pub obj: FObj,
    pub unit: FMor,
    pub mul: FMor,
}

impl MonoidData {
    pub fn new(name: &str, unit: Mat, mul: Mat) -> Result<MonoidData> {
        let n = unit.rows();
        let obj = FObj::named(name, n);
        if unit.field() != mul.field() {
            return Err(Error::Invalid(format!("monoid {name}: unit and product over different fields")));
        }
        let unit = FMor::new(FObj::unit(), obj.clone(), unit)?;
        let mul = FMor::new(obj.tensor(&obj), obj.clone(), mul)?;
        Ok(MonoidData {
            name: name.to_string(),
            obj,
            unit,
            mul,
        })
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    /// Same structure under a new name.
    pub fn renamed(&self, name: &str) -> MonoidData {
        MonoidData::new(name, self.unit.mat.clone(), self.mul.mat.clone()).expect("shapes unchanged")
    }

    /// The trivial monoid on `K`.
    pub fn trivial(field: Field) -> MonoidData {
        let k = FObj::unit();
        MonoidData {
            name: "K".to_string(),
            obj: k.clone(),
            unit: FMor::identity(field, &k),
            mul: FMor::identity(field, &k),
        }
    }
}

pub fn check_monoid(m: &MonoidData) -> Result<Report> {
    let a = &m.obj;
    let ctx = m.name.as_str();
    let id = FMor::identity(m.field(), a);
    let mut r = Report::new();
    r.push(check_eq(
        "monoid-assoc",
        ctx,
        &compose!(m.mul, tensor!(m.mul, a))?,
        &compose!(m.mul, tensor!(a, m.mul))?,
    )?);
    r.push(check_eq("monoid-unit-left", ctx, &compose!(m.mul, tensor!(m.unit, a))?, &id)?);
    r.push(check_eq("monoid-unit-right", ctx, &compose!(m.mul, tensor!(a, m.unit))?, &id)?);
    Ok(r)
}

/// A left module `φ: A⊗M -> M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub algebra: MonoidData,
    pub obj: FObj,
    pub action: FMor,
}

pub fn check_left_module(md: &ModuleData) -> Result<Report> {
    let a = &md.algebra.obj;
    let m = &md.obj;
    let ctx = format!("{} acting on {}", md.algebra.name, m);
    let mut r = Report::new();
    r.push(check_eq(
        "module-assoc",
        &ctx,
        &compose!(md.action, tensor!(md.algebra.mul, m))?,
        &compose!(md.action, tensor!(a, md.action))?,
    )?);
    r.push(check_eq(
        "module-unit",
        &ctx,
        &compose!(md.action, tensor!(md.algebra.unit, m))?,
        &FMor::identity(md.algebra.field(), m),
    )?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_algebra_z2(field: Field) -> MonoidData {
        // basis e, g with g² = e
        let unit = Mat::from_i64(field, 2, 1, &[1, 0]).unwrap();
        let mul = Mat::from_i64(field, 2, 4, &[1, 0, 0, 1, 0, 1, 1, 0]).unwrap();
        MonoidData::new("A", unit, mul).unwrap()
    }

    #[test]
    fn group_algebra_is_a_monoid() {
        let r = check_monoid(&group_algebra_z2(Field::Prime(3))).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
    }

    #[test]
    fn broken_unit_is_reported() {
        let mut a = group_algebra_z2(Field::Rationals);
        a.unit.mat = Mat::from_i64(Field::Rationals, 2, 1, &[0, 1]).unwrap();
        let r = check_monoid(&a).unwrap();
        assert!(r.passed("monoid-assoc"));
        assert!(!r.passed("monoid-unit-left"));
    }

    #[test]
    fn swap_with_one_dimensional_factor_is_identity() {
        let f = Field::Rationals;
        let s = FMor::swap(f, &FObj::named("X", 1), &FObj::named("Y", 3));
        assert_eq!(s.mat, Mat::identity(f, 3));
    }

    #[test]
    fn swap_twice_is_identity() {
        let f = Field::Prime(5);
        let x = FObj::named("X", 2);
        let y = FObj::named("Y", 3);
        let s = compose!(FMor::swap(f, &y, &x), FMor::swap(f, &x, &y)).unwrap();
        assert_eq!(s.mat, Mat::identity(f, 6));
    }

    #[test]
    fn composition_checks_shapes() {
        let f = Field::Rationals;
        let x = FObj::named("X", 2);
        let y = FObj::named("Y", 3);
        let a = FMor::identity(f, &x);
        let b = FMor::identity(f, &y);
        assert!(matches!(a.after(&b), Err(Error::Shape { .. })));
    }

    #[test]
    fn witness_uses_multi_indices() {
        let f = Field::Rationals;
        let x = FObj::named("X", 2);
        let y = FObj::named("Y", 2);
        let w = FMor::identity(f, &x.tensor(&y))
            .diff(&FMor::swap(f, &x, &y).relabel(&x.tensor(&y), &x.tensor(&y)).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(w.input, vec![0, 1]);
        assert_eq!(w.output, vec![0, 1]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "0"));
    }

    #[test]
    fn left_regular_module() {
        let a = group_algebra_z2(Field::Rationals);
        let md = ModuleData {
            obj: a.obj.clone(),
            action: a.mul.clone(),
            algebra: a,
        };
        assert!(check_left_module(&md).unwrap().all_pass());
    }
}
