//! Preunits, unital crossed products, and recovering `(ψ, σ)` from a product.

use crate::error::Result;
use crate::fdvect::{check_eq, check_monoid, FMor, FObj, MonoidData};
use crate::report::{Check, Report};
use crate::wcp::{build_crossed_product, nabla, product_mu, require_all, CrossedProduct, Quadruple};
use crate::{compose, tensor};


/// `∇^ν = m∘(X⊗ν)`.
pub fn nabla_nu(m: &FMor, nu: &FMor) -> Result<FMor> {
    compose!(m, tensor!(m.cod, nu))
}

/// `m∘(X⊗ν) = m∘(ν⊗X) = m∘(X⊗(m∘(ν⊗ν)))`, plus idempotency of `∇^ν`.
pub fn check_preunit(m: &FMor, nu: &FMor) -> Result<Report> {
    let x = &m.cod;
    let ctx = x.to_string();
    let right = nabla_nu(m, nu)?;
    let left = compose!(m, tensor!(nu, x))?;
    let nn = compose!(m, tensor!(nu, nu))?;
    let mut r = Report::new();
    r.push(check_eq("preunit-1", &ctx, &right, &left)?);
    r.push(check_eq("preunit-2", &ctx, &right, &compose!(m, tensor!(x, nn))?)?);
    r.push(check_eq("nabla-nu-idem", &ctx, &compose!(right, right)?, &right)?);
    Ok(r)
}

/// `β_ν = (μ_A⊗V)∘(A⊗ν): A -> A⊗V`.
pub fn beta_nu(q: &Quadruple, nu: &FMor) -> Result<FMor> {
    compose!(q.mu_v(), tensor!(q.a(), nu))
}

/// The three preunit equations and `∇∘ν = ν` for a quadruple.
pub fn check_pre_system(q: &Quadruple, nu: &FMor) -> Result<Report> {
    let ctx = q.context();
    let (a, v) = (q.a(), &q.v);
    let nab = nabla(q)?;
    let mu_v = q.mu_v();
    let target = compose!(nab, tensor!(q.algebra.unit, v))?;
    let mut r = Report::new();
    r.push(check_eq(
        "pre1-wcp",
        &ctx,
        &compose!(mu_v, tensor!(a, q.sigma), tensor!(q.psi, v), tensor!(v, nu))?,
        &target,
    )?);
    r.push(check_eq(
        "pre2-wcp",
        &ctx,
        &compose!(mu_v, tensor!(a, q.sigma), tensor!(nu, v))?,
        &target,
    )?);
    r.push(check_eq(
        "pre3-wcp",
        &ctx,
        &compose!(mu_v, tensor!(a, q.psi), tensor!(nu, a))?,
        &beta_nu(q, nu)?,
    )?);
    r.push(check_eq("preunit-idemp", &ctx, &compose!(nab, nu)?, nu)?);
    Ok(r)
}

/// A crossed product whose image is a unital monoid.
#[derive(Clone, Debug)]
pub struct UnitalCrossedProduct {
    pub cp: CrossedProduct,
    pub nu: FMor,
    /// `η_{A×V} = p∘ν`.
    pub unit_small: FMor,
    pub beta: FMor,
    pub report: Report,
}

impl UnitalCrossedProduct {
    pub fn monoid(&self) -> MonoidData {
        MonoidData {
            name: self.cp.image.to_string(),
            obj: self.cp.image.clone(),
            unit: self.unit_small.clone(),
            mul: self.cp.mu_small.clone(),
        }
    }

    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// Checks `ν` against the quadruple, then builds the unital monoid `A×V`.
pub fn build_unital(q: &Quadruple, nu: &FMor) -> Result<UnitalCrossedProduct> {
    let cp = build_crossed_product(q)?;
    require_all(&check_pre_system(q, nu)?)?;
    assemble_unital(cp, nu)
}

pub(crate) fn assemble_unital(cp: CrossedProduct, nu: &FMor) -> Result<UnitalCrossedProduct> {
    let q = &cp.quad;
    let ctx = q.context();
    let mut report = cp.report.clone();
    report.extend(check_preunit(&cp.mu, nu)?);
    report.push(check_eq("nabla-nu-eq", &ctx, &nabla_nu(&cp.mu, nu)?, &cp.nabla)?);

    let unit_small = compose!(cp.proj, nu)?;
    let small = MonoidData {
        name: cp.image.to_string(),
        obj: cp.image.clone(),
        unit: unit_small.clone(),
        mul: cp.mu_small.clone(),
    };
    report.extend(check_monoid(&small)?);

    let beta = beta_nu(q, nu)?;
    report.push(check_eq("beta-unit", &ctx, &compose!(beta, q.algebra.unit)?, nu)?);
    report.push(check_eq(
        "beta-mult",
        &ctx,
        &compose!(cp.mu, tensor!(beta, beta))?,
        &compose!(beta, q.algebra.mul)?,
    )?);
    let bar = compose!(cp.proj, beta)?;
    let img = cp.image.to_string();
    report.push(check_eq(
        "beta-bar-mult",
        &img,
        &compose!(bar, q.algebra.mul)?,
        &compose!(cp.mu_small, tensor!(bar, bar))?,
    )?);
    report.push(check_eq("beta-bar-unit", &img, &compose!(bar, q.algebra.unit)?, &unit_small)?);
    Ok(UnitalCrossedProduct {
        cp,
        nu: nu.clone(),
        unit_small,
        beta,
        report,
    })
}

/// Recovers `ψ = m∘(η_A⊗V⊗β_ν)` and `σ = m∘(η_A⊗V⊗η_A⊗V)` from an associative,
/// left `A`-linear product `m` on `A⊗V` with preunit `ν`, normalised with respect
/// to `∇^ν`. The returned report ends with the round-trip check `μ_{A⊗V} = m`.
pub fn derive_psi_sigma(algebra: &MonoidData, v: &FObj, m: &FMor, nu: &FMor) -> Result<(Quadruple, Report)> {
    let a = &algebra.obj;
    let av = a.tensor(v);
    let m = m.relabel(&av.tensor(&av), &av)?;
    let nu = nu.relabel(&FObj::unit(), &av)?;
    let ctx = av.to_string();
    let mu_v = tensor!(algebra.mul, v);

    let mut pre = Report::new();
    pre.push(check_eq(
        "m-assoc",
        &ctx,
        &compose!(m, tensor!(m, av))?,
        &compose!(m, tensor!(av, m))?,
    )?);
    pre.push(check_eq(
        "m-linear",
        &ctx,
        &compose!(m, tensor!(algebra.mul, v, av))?,
        &compose!(mu_v, tensor!(a, m))?,
    )?);
    pre.extend(check_preunit(&m, &nu)?);
    let nn = nabla_nu(&m, &nu)?;
    let w = compose!(nn, m)?
        .diff(&m)?
        .or(compose!(m, tensor!(nn, nn))?.diff(&m)?);
    pre.push(Check::new("m-normalized", &ctx, w));
    require_all(&pre)?;

    let beta = compose!(mu_v, tensor!(a, nu))?;
    let eta = &algebra.unit;
    let psi = compose!(m, tensor!(eta, v, beta))?;
    let sigma = compose!(m, tensor!(eta, v, eta, v))?;
    let q = Quadruple::from_morphisms(algebra.clone(), v.clone(), psi, sigma)?;
    let mut report = pre;
    report.push(check_eq("round-trip", &ctx, &product_mu(&q)?, &m)?);
    Ok((q, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::algebras::truncated;
    use crate::examples::fixtures::{mined_weak, ordinary_tensor, quadruples, skew_group};
    use crate::examples::laws::trivial_quadruple;
    use crate::kernel::{Field, Mat};

    #[test]
    fn unit_is_a_preunit() {
        let fx = ordinary_tensor(Field::Rationals);
        let mu = product_mu(&fx.quad).unwrap();
        assert!(check_preunit(&mu, &fx.nu).unwrap().all_pass());
        assert_eq!(nabla_nu(&mu, &fx.nu).unwrap(), FMor::identity(Field::Rationals, &fx.quad.av()));
        assert!(check_pre_system(&fx.quad, &fx.nu).unwrap().all_pass());
    }

    #[test]
    fn zero_is_rejected_by_the_pre_system() {
        // every side of the preunit equalities vanishes at ν = 0, so only the
        // compatibility with ψ and σ rules it out
        for fx in quadruples() {
            let mu = product_mu(&fx.quad).unwrap();
            let zero = FMor::zero(fx.quad.field(), &FObj::unit(), &fx.quad.av());
            assert!(check_preunit(&mu, &zero).unwrap().all_pass(), "{}", fx.name);
            let r = check_pre_system(&fx.quad, &zero).unwrap();
            assert!(!r.passed("pre1-wcp") && !r.passed("pre2-wcp"), "{}", fx.name);
            assert!(build_unital(&fx.quad, &zero).is_err(), "{}", fx.name);
        }
    }

    #[test]
    fn doubled_unit_breaks_pre2() {
        let fx = ordinary_tensor(Field::Rationals);
        let f = Field::Rationals;
        let nu = FMor::new(fx.nu.dom.clone(), fx.nu.cod.clone(), fx.nu.mat.scale(&f.from_i64(2)).unwrap()).unwrap();
        let r = check_pre_system(&fx.quad, &nu).unwrap();
        assert!(!r.passed("pre2-wcp"));
        assert!(build_unital(&fx.quad, &nu).is_err());
    }

    #[test]
    fn skew_group_is_a_four_dimensional_unital_algebra() {
        let fx = skew_group();
        let u = build_unital(&fx.quad, &fx.nu).unwrap();
        assert!(u.verified(), "{}", u.report.render_text());
        assert_eq!(u.monoid().dim(), 4);
        assert_eq!(nabla_nu(&u.cp.mu, &fx.nu).unwrap(), FMor::identity(Field::Prime(3), &fx.quad.av()));
    }

    #[test]
    fn mined_weak_has_monoid_of_rank_dimension() {
        let fx = mined_weak();
        let u = build_unital(&fx.quad, &fx.nu).unwrap();
        assert!(u.verified(), "{}", u.report.render_text());
        assert_eq!(u.monoid().dim(), u.cp.nabla.mat.rank());
        assert!(u.monoid().dim() < fx.quad.av().dim());
        assert_eq!(nabla_nu(&u.cp.mu, &fx.nu).unwrap(), u.cp.nabla);
    }

    #[test]
    fn trivial_v_collapses_to_a() {
        let a = truncated(Field::Prime(7), "A", 3);
        let q = trivial_quadruple(&a);
        let u = build_unital(&q, &a.unit).unwrap();
        assert!(u.verified());
        assert_eq!(u.monoid().dim(), 3);
        assert_eq!(u.cp.mu_small.mat, a.mul.mat);
        assert_eq!(u.unit_small.mat, a.unit.mat);
    }

    #[test]
    fn derive_round_trips_on_fixtures() {
        for fx in quadruples() {
            let q = &fx.quad;
            let mu = product_mu(q).unwrap();
            let (back, r) = derive_psi_sigma(&q.algebra, &q.v, &mu, &fx.nu).unwrap();
            assert!(r.all_pass(), "{}\n{}", fx.name, r.render_text());
            assert_eq!(product_mu(&back).unwrap(), mu, "{}", fx.name);
        }
    }

    #[test]
    fn derive_from_mu_a() {
        let a = truncated(Field::Rationals, "A", 2);
        let q = trivial_quadruple(&a);
        let (back, _) = derive_psi_sigma(&a, &FObj::unit(), &product_mu(&q).unwrap(), &a.unit).unwrap();
        assert_eq!(back.psi.mat, Mat::identity(Field::Rationals, 2));
        assert_eq!(back.sigma.mat, a.unit.mat);
    }
}
