//! Wreaths, distributive laws and weak distributive laws between two monoids
//! `A` and `B`, read through `S = A⊗-`, `T = B⊗-`. A law `λ: T S -> S T` is a map
//! `B⊗A -> A⊗B`.

use crate::error::{Error, Result};
use crate::fdvect::{check_eq, FMor, FObj, MonoidData};
use crate::kernel::{Field, Mat};
use crate::report::{Check, Report};
use crate::wcp::{require, require_all, Quadruple};
use crate::{compose, tensor};

fn ctx(a: &MonoidData, b: &MonoidData) -> String {
    format!("{}⊗{}", a.name, b.name)
}

/// Relabels a raw matrix as `B⊗A -> A⊗B`.
pub fn law(a: &MonoidData, b: &MonoidData, m: Mat) -> Result<FMor> {
    FMor::new(b.obj.tensor(&a.obj), a.obj.tensor(&b.obj), m)
}

/// The flip `b⊗a ↦ a⊗b`.
pub fn flip(a: &MonoidData, b: &MonoidData) -> FMor {
    FMor::swap(a.field(), &b.obj, &a.obj)
}

/// For truncated polynomial algebras: `y^i⊗x^j ↦ q^{ij} x^j⊗y^i`.
pub fn graded_twist(a: &MonoidData, b: &MonoidData, q: i64) -> FMor {
    let (da, db) = (a.dim(), b.dim());
    let mat = Mat::from_fn(a.field(), da * db, da * db, |r, c| {
        let (i, j) = (c / da, c % da);
        if r == j * db + i {
            q.pow((i * j) as u32)
        } else {
            0
        }
    });
    FMor {
        dom: b.obj.tensor(&a.obj),
        cod: a.obj.tensor(&b.obj),
        mat,
    }
}

/// Wreath axioms (W1)–(W6) for `λ: B⊗A -> A⊗B`, `τ: K -> A⊗B`, `v: B⊗B -> A⊗B`.
pub fn check_wreath(a: &MonoidData, b: &MonoidData, lambda: &FMor, tau: &FMor, v: &FMor) -> Result<Report> {
    let c = ctx(a, b);
    let (ao, bo) = (&a.obj, &b.obj);
    let mu_b = tensor!(a.mul, bo);
    let mut r = Report::new();
    r.push(check_eq(
        "W1",
        &c,
        &compose!(mu_b, tensor!(ao, lambda), tensor!(lambda, ao))?,
        &compose!(lambda, tensor!(bo, a.mul))?,
    )?);
    r.push(check_eq("W2", &c, &compose!(lambda, tensor!(bo, a.unit))?, &tensor!(a.unit, bo))?);
    r.push(check_eq(
        "W3",
        &c,
        &compose!(mu_b, tensor!(ao, tau))?,
        &compose!(mu_b, tensor!(ao, lambda), tensor!(tau, ao))?,
    )?);
    r.push(check_eq(
        "W4",
        &c,
        &compose!(mu_b, tensor!(ao, v), tensor!(lambda, bo), tensor!(bo, lambda))?,
        &compose!(mu_b, tensor!(ao, lambda), tensor!(v, ao))?,
    )?);
    r.push(check_eq(
        "W5",
        &c,
        &compose!(mu_b, tensor!(ao, v), tensor!(v, bo))?,
        &compose!(mu_b, tensor!(ao, v), tensor!(lambda, bo), tensor!(bo, v))?,
    )?);
    let unit_b = tensor!(a.unit, bo);
    let first = compose!(mu_b, tensor!(ao, v), tensor!(tau, bo))?;
    let second = compose!(mu_b, tensor!(ao, v), tensor!(lambda, bo), tensor!(bo, tau))?;
    let w = first.diff(&unit_b)?.or(second.diff(&unit_b)?);
    r.push(Check::new("W6", &c, w));
    Ok(r)
}

/// (DL1)–(DL4).
pub fn check_distributive_law(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<Report> {
    let c = ctx(a, b);
    let (ao, bo) = (&a.obj, &b.obj);
    let mut r = Report::new();
    r.push(dl1(a, b, lambda)?);
    r.push(check_eq("DL2", &c, &compose!(lambda, tensor!(b.unit, ao))?, &tensor!(ao, b.unit))?);
    r.push(dl3(a, b, lambda)?);
    r.push(check_eq("DL4", &c, &compose!(lambda, tensor!(bo, a.unit))?, &tensor!(a.unit, bo))?);
    Ok(r)
}

/// `λ∘(μ_B⊗A) = (A⊗μ_B)∘(λ⊗B)∘(B⊗λ)`.
fn dl1(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<Check> {
    let (ao, bo) = (&a.obj, &b.obj);
    check_eq(
        "DL1",
        &ctx(a, b),
        &compose!(lambda, tensor!(b.mul, ao))?,
        &compose!(tensor!(ao, b.mul), tensor!(lambda, bo), tensor!(bo, lambda))?,
    )
}

/// `λ∘(B⊗μ_A) = (μ_A⊗B)∘(A⊗λ)∘(λ⊗A)`.
fn dl3(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<Check> {
    let (ao, bo) = (&a.obj, &b.obj);
    check_eq(
        "DL3",
        &ctx(a, b),
        &compose!(lambda, tensor!(bo, a.mul))?,
        &compose!(tensor!(a.mul, bo), tensor!(ao, lambda), tensor!(lambda, ao))?,
    )
}

/// `∇ = (μ_A⊗B)∘(A⊗(λ∘(B⊗η_A)))`.
pub fn wdl_nabla(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<FMor> {
    let l1 = compose!(lambda, tensor!(b.obj, a.unit))?;
    compose!(tensor!(a.mul, b.obj), tensor!(a.obj, l1))
}

/// `σ = (A⊗μ_B)∘((λ∘(B⊗η_A))⊗B)`.
pub fn wdl_sigma(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<FMor> {
    let l1 = compose!(lambda, tensor!(b.obj, a.unit))?;
    compose!(tensor!(a.obj, b.mul), tensor!(l1, b.obj))
}

/// (DL1), (DL3), (idem=idem), then the corollaries (WDL1), (WDL2), (equ-idem),
/// (new-nabla), (tech2), (tech3) in the form they take for a single law.
pub fn check_wdl(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<Report> {
    let c = ctx(a, b);
    let (ao, bo) = (&a.obj, &b.obj);
    let mut r = Report::new();
    r.push(dl1(a, b, lambda)?);
    r.push(dl3(a, b, lambda)?);
    let l_eta_b = compose!(lambda, tensor!(b.unit, ao))?; // λ∘(η_B⊗A): A -> A⊗B
    let l_eta_a = compose!(lambda, tensor!(bo, a.unit))?; // λ∘(B⊗η_A): B -> A⊗B
    r.push(check_eq(
        "idem=idem",
        &c,
        &compose!(tensor!(ao, b.mul), tensor!(l_eta_b, bo))?,
        &compose!(tensor!(a.mul, bo), tensor!(ao, l_eta_a))?,
    )?);
    r.extend(check_wdl_corollaries(a, b, lambda)?);
    Ok(r)
}

fn check_wdl_corollaries(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<Report> {
    let c = ctx(a, b);
    let (ao, bo) = (&a.obj, &b.obj);
    let mut r = Report::new();
    let l_units = compose!(lambda, tensor!(b.unit, a.unit))?; // K -> A⊗B
    r.push(check_eq(
        "WDL1",
        &c,
        &compose!(lambda, tensor!(b.unit, ao))?,
        &compose!(tensor!(a.mul, bo), tensor!(ao, l_units))?,
    )?);
    r.push(check_eq(
        "WDL2",
        &c,
        &compose!(lambda, tensor!(bo, a.unit))?,
        &compose!(tensor!(ao, b.mul), tensor!(l_units, bo))?,
    )?);

    let nab = wdl_nabla(a, b, lambda)?;
    let sigma = wdl_sigma(a, b, lambda)?;
    let e1 = compose!(tensor!(ao, b.mul), tensor!(compose!(nab, tensor!(a.unit, bo))?, bo))?;
    let e2 = compose!(nab, tensor!(a.unit, b.mul))?;
    let e3 = compose!(lambda, tensor!(b.mul, a.unit))?;
    let w = sigma.diff(&e1)?.or(sigma.diff(&e2)?).or(sigma.diff(&e3)?);
    r.push(Check::new("equ-idem", &c, w));

    let lb = compose!(tensor!(ao, b.mul), tensor!(lambda, bo))?;
    r.push(check_eq("new-nabla", &c, &compose!(lb, tensor!(bo, nab))?, &lb)?);
    let al = compose!(tensor!(a.mul, bo), tensor!(ao, lambda))?;
    r.push(check_eq("tech2", &c, &compose!(al, tensor!(nab, ao))?, &al)?);
    let l_eta_a = compose!(lambda, tensor!(bo, a.unit))?;
    r.push(check_eq(
        "tech3",
        &c,
        &compose!(tensor!(ao, b.mul), tensor!(l_eta_a, bo))?,
        &compose!(lambda, tensor!(b.mul, a.unit))?,
    )?);
    Ok(r)
}


/// `(A, B, ψ = R, σ = η_A⊗μ_B)` for a distributive law `R`.
pub fn quadruple_from_twisting_map(a: &MonoidData, b: &MonoidData, r: &FMor) -> Result<Quadruple> {
    require_all(&check_distributive_law(a, b, r)?)?;
    let sigma = tensor!(a.unit, b.mul);
    Quadruple::from_morphisms(a.clone(), b.obj.clone(), r.clone(), sigma)
}

/// The weak wreath quadruple of a weak distributive law with its preunit
/// `ν = ∇∘(η_A⊗η_B)`.
pub fn quadruple_from_wdl(a: &MonoidData, b: &MonoidData, lambda: &FMor) -> Result<(Quadruple, FMor)> {
    let rep = check_wdl(a, b, lambda)?;
    for c in rep.checks.iter().take(3) {
        require(c.clone())?;
    }
    let q = Quadruple::from_morphisms(a.clone(), b.obj.clone(), lambda.clone(), wdl_sigma(a, b, lambda)?)?;
    let nu = compose!(wdl_nabla(a, b, lambda)?, tensor!(a.unit, b.unit))?;
    Ok((q, nu))
}

/// A wreath gives the quadruple `(A, B, λ, v)` with preunit `τ`.
pub fn quadruple_from_wreath(a: &MonoidData, b: &MonoidData, lambda: &FMor, tau: &FMor, v: &FMor) -> Result<(Quadruple, FMor)> {
    require_all(&check_wreath(a, b, lambda, tau, v)?)?;
    let q = Quadruple::from_morphisms(a.clone(), b.obj.clone(), lambda.clone(), v.clone())?;
    Ok((q, tau.clone()))
}

/// The quadruple over `A` with `V = K`: `ψ = id_A`, `σ = η_A`.
pub fn trivial_quadruple(a: &MonoidData) -> Quadruple {
    let field = a.field();
    Quadruple::from_morphisms(a.clone(), FObj::unit(), FMor::identity(field, &a.obj), a.unit.clone())
        .expect("trivial quadruple shapes")
}

/// Checks that two algebras live over one field.
pub(crate) fn same_field(ms: &[&MonoidData]) -> Result<Field> {
    let f = ms[0].field();
    if ms.iter().any(|m| m.field() != f) {
        return Err(Error::Invalid("algebras over different fields".into()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::algebras::{diagonal, truncated};

    #[test]
    fn flip_is_a_distributive_law() {
        let f = Field::Rationals;
        let a = truncated(f, "A", 2);
        let b = diagonal(f, "B", 2);
        let r = check_distributive_law(&a, &b, &flip(&a, &b)).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
    }

    #[test]
    fn distributive_law_gives_a_wreath() {
        let f = Field::Prime(5);
        let a = truncated(f, "A", 2);
        let b = truncated(f, "B", 2);
        let l = graded_twist(&a, &b, 2);
        let tau = tensor!(a.unit, b.unit);
        let v = tensor!(a.unit, b.mul);
        let r = check_wreath(&a, &b, &l, &tau, &v).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
    }

    #[test]
    fn trivial_b_gives_a_wreath() {
        let f = Field::Rationals;
        let a = truncated(f, "A", 2);
        let k = crate::examples::algebras::ground(f, "B");
        let l = flip(&a, &k);
        let tau = tensor!(a.unit, k.unit);
        let v = tensor!(a.unit, k.mul);
        assert!(check_wreath(&a, &k, &l, &tau, &v).unwrap().all_pass());
    }

    #[test]
    fn diagonal_weak_law() {
        // λ(f_j⊗e_i) = δ_ij e_i⊗f_j is weak but not a distributive law
        let f = Field::Prime(2);
        let a = diagonal(f, "A", 2);
        let b = diagonal(f, "B", 2);
        let m = Mat::from_fn(f, 4, 4, |r, c| {
            let (j, i) = (c / 2, c % 2);
            (i == j && r == i * 2 + j) as i64
        });
        let l = law(&a, &b, m).unwrap();
        let r = check_wdl(&a, &b, &l).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
        assert!(!check_distributive_law(&a, &b, &l).unwrap().all_pass());
        assert_eq!(wdl_nabla(&a, &b, &l).unwrap().mat.rank(), 2);
    }
}
