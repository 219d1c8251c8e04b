//! Iterating two quadruples `(A, V, ψ_V, σ_V)` and `(A, W, ψ_W, σ_W)` over the same
//! monoid through a link `Δ: V⊗W -> V⊗W` and a twisting `τ: W⊗V -> V⊗W`.

use crate::error::{Error, Result};
use crate::fdvect::{check_eq, FMor, FObj};
use crate::kernel::{Field, Mat};
use crate::preunit::{assemble_unital, check_pre_system, check_preunit, nabla_nu, UnitalCrossedProduct};
use crate::report::Report;
use crate::wcp::{
    assemble_crossed_product, check_cocycle, check_sigma_normalized, check_twisted, check_wmeas, require_all,
    CrossedProduct, Quadruple,
};
use crate::{compose, tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterSetup {
    pub qv: Quadruple,
    pub qw: Quadruple,
    /// `Δ: V⊗W -> V⊗W`
    pub delta: FMor,
    /// `τ: W⊗V -> V⊗W`
    pub tau: FMor,
}

impl IterSetup {
    pub fn new(qv: Quadruple, qw: Quadruple, delta: Mat, tau: Mat) -> Result<IterSetup> {
        if qv.algebra.unit.mat != qw.algebra.unit.mat || qv.algebra.mul.mat != qw.algebra.mul.mat {
            return Err(Error::Invalid("the two quadruples must share their monoid".into()));
        }
        let field = qv.field();
        if delta.field() != field || tau.field() != field {
            return Err(Error::Invalid(format!("link and twisting must be over {field}")));
        }
        let mut qw = qw;
        if qw.algebra.name != qv.algebra.name {
            qw = Quadruple::from_morphisms(qv.algebra.clone(), qw.v.clone(), qw.psi, qw.sigma)?;
        }
        let vw = qv.v.tensor(&qw.v);
        let delta = FMor::new(vw.clone(), vw.clone(), delta)?;
        let tau = FMor::new(qw.v.tensor(&qv.v), vw, tau)?;
        Ok(IterSetup { qv, qw, delta, tau })
    }

    pub fn field(&self) -> Field {
        self.qv.field()
    }

    pub fn a(&self) -> &FObj {
        self.qv.a()
    }

    pub fn v(&self) -> &FObj {
        &self.qv.v
    }

    pub fn w(&self) -> &FObj {
        &self.qw.v
    }

    pub fn vw(&self) -> FObj {
        self.v().tensor(self.w())
    }

    pub fn avw(&self) -> FObj {
        self.a().tensor(&self.vw())
    }

    pub fn context(&self) -> String {
        self.avw().to_string()
    }

    /// `μ_A⊗V⊗W`.
    fn mu_vw(&self) -> FMor {
        tensor!(self.qv.algebra.mul, self.v(), self.w())
    }
}

/// `(ψ_V⊗W)∘(V⊗ψ_W)`, the unlinked composite.
fn psi_raw(s: &IterSetup) -> Result<FMor> {
    compose!(tensor!(s.qv.psi, s.w()), tensor!(s.v(), s.qw.psi))
}

/// `ψ_{V⊗W} = (ψ_V⊗W)∘(V⊗ψ_W)∘(Δ⊗A)`.
pub fn psi_iter(s: &IterSetup) -> Result<FMor> {
    compose!(psi_raw(s)?, tensor!(s.delta, s.a()))
}

/// `(A, V⊗W, ψ_{V⊗W}, σ_{V⊗W})` with no conditions checked.
pub fn iterated_quadruple(s: &IterSetup) -> Result<Quadruple> {
    Quadruple::from_morphisms(s.qv.algebra.clone(), s.vw(), psi_iter(s)?, sigma_iter(s)?)
}

/// `∇_{A⊗V⊗W}`.
pub fn iterated_nabla(s: &IterSetup) -> Result<FMor> {
    let psi = psi_iter(s)?;
    compose!(s.mu_vw(), tensor!(s.a(), psi), tensor!(s.avw(), s.qv.algebra.unit))
}

/// The link conditions (falso-idemp) and (falso-idemp2), followed by the
/// consequences (wmeas-wcp) for `ψ_{V⊗W}`, idempotency of `∇_{A⊗V⊗W}` and
/// (falso-idemp-link).
pub fn check_link(s: &IterSetup) -> Result<Report> {
    let ctx = s.context();
    let psi = psi_iter(s)?;
    let nab = iterated_nabla(s)?;
    let mut r = Report::new();
    r.push(check_eq("falso-idemp", &ctx, &psi, &compose!(tensor!(s.a(), s.delta), psi)?)?);
    r.push(check_eq("falso-idemp2", &ctx, &psi, &compose!(nab, psi_raw(s)?)?)?);
    let q = Quadruple::from_morphisms(s.qv.algebra.clone(), s.vw(), psi.clone(), sigma_iter(s)?)?;
    r.push(check_wmeas(&q)?);
    r.push(check_eq("idem-wcp", &ctx, &compose!(nab, nab)?, &nab)?);
    r.push(check_eq("falso-idemp-link", &ctx, &psi, &compose!(nab, psi)?)?);
    Ok(r)
}

/// Conditions (i) and (ii) for `τ` to be a twisting morphism.
pub fn check_twisting(s: &IterSetup) -> Result<Report> {
    let ctx = s.context();
    let (a, v, w) = (s.a(), s.v(), s.w());
    let (psi_v, psi_w) = (&s.qv.psi, &s.qw.psi);
    let (sig_v, sig_w) = (&s.qv.sigma, &s.qw.sigma);
    let tau = &s.tau;
    let mu = s.mu_vw();
    let mut r = Report::new();

    let lhs = compose!(tensor!(psi_v, w), tensor!(v, psi_w), tensor!(tau, a))?;
    let rhs = compose!(tensor!(a, tau), tensor!(psi_w, v), tensor!(w, psi_v))?;
    r.push(check_eq("twisting-i", &ctx, &lhs, &rhs)?);

    let lhs = compose!(
        mu,
        tensor!(a, sig_v, w),
        tensor!(psi_v, tau),
        tensor!(v, sig_w, v),
        tensor!(tau, w, v)
    )?;
    let rhs = compose!(
        mu,
        tensor!(a, psi_v, w),
        tensor!(a, v, sig_w),
        tensor!(a, tau, w),
        tensor!(psi_w, v, w),
        tensor!(w, sig_v, w),
        tensor!(w, v, tau)
    )?;
    r.push(check_eq("twisting-ii", &ctx, &lhs, &rhs)?);
    Ok(r)
}

/// `σ_{V⊗W} = (μ_A⊗V⊗W)∘(A⊗ψ_V⊗W)∘(σ_V⊗σ_W)∘(V⊗τ⊗W)`.
pub fn sigma_iter(s: &IterSetup) -> Result<FMor> {
    let (a, v, w) = (s.a(), s.v(), s.w());
    compose!(
        s.mu_vw(),
        tensor!(a, s.qv.psi, w),
        tensor!(s.qv.sigma, s.qw.sigma),
        tensor!(v, s.tau, w)
    )
}

/// (sigma1), (sigma2), (sigma3).
pub fn check_sigma_conditions(s: &IterSetup) -> Result<Report> {
    let ctx = s.context();
    let vw = s.vw();
    let sig = sigma_iter(s)?;
    let mut r = Report::new();
    r.push(check_eq("sigma1", &ctx, &sig, &compose!(sig, tensor!(s.delta, vw))?)?);
    r.push(check_eq("sigma2", &ctx, &sig, &compose!(sig, tensor!(vw, s.delta))?)?);
    r.push(check_eq("sigma3", &ctx, &sig, &compose!(tensor!(s.a(), s.delta), sig)?)?);
    Ok(r)
}

/// Hypotheses on the two input quadruples.
fn check_inputs(s: &IterSetup) -> Result<Report> {
    let mut r = Report::new();
    for q in [&s.qv, &s.qw] {
        r.push(check_wmeas(q)?);
        r.push(check_twisted(q)?);
        r.push(check_cocycle(q)?);
        r.push(check_sigma_normalized(q)?);
    }
    Ok(r)
}

/// All hypotheses of the iteration, in order: input quadruples, link, twisting,
/// sigma conditions.
pub fn check_iteration_hypotheses(s: &IterSetup) -> Result<Report> {
    let mut r = check_inputs(s)?;
    r.extend(check_link(s)?);
    r.extend(check_twisting(s)?);
    r.extend(check_sigma_conditions(s)?);
    Ok(r)
}


#[derive(Clone, Debug)]
pub struct Iterated {
    pub setup: IterSetup,
    /// `(A, V⊗W, ψ_{V⊗W}, σ_{V⊗W})`.
    pub quad: Quadruple,
    pub cp: CrossedProduct,
    pub report: Report,
}

impl Iterated {
    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// The iterated weak crossed product on `A⊗V⊗W`. Every hypothesis is checked
/// first; the report then records the quadruple axioms for the iterated data
/// and the post-conditions of the crossed-product construction.
pub fn build_iterated(s: &IterSetup) -> Result<Iterated> {
    let hyp = check_iteration_hypotheses(s)?;
    require_all(&hyp)?;
    assemble_iterated(s, hyp)
}

pub(crate) fn assemble_iterated(s: &IterSetup, mut report: Report) -> Result<Iterated> {
    let quad = iterated_quadruple(s)?;
    report.push(check_twisted(&quad)?);
    report.push(check_cocycle(&quad)?);
    report.push(check_sigma_normalized(&quad)?);
    let cp = assemble_crossed_product(&quad)?;
    report.extend(cp.report.clone());
    Ok(Iterated {
        setup: s.clone(),
        quad,
        cp,
        report,
    })
}

/// Iteration without the hypothesis gate; every check is still reported.
pub fn iterate_unchecked(s: &IterSetup) -> Result<Iterated> {
    let hyp = check_iteration_hypotheses(s)?;
    assemble_iterated(s, hyp)
}

/// (pre-1) and (pre-2) for preunits `ν_V`, `ν_W`.
pub fn check_iterated_pre(s: &IterSetup, nu_v: &FMor, nu_w: &FMor) -> Result<Report> {
    let ctx = s.context();
    let (a, v, w) = (s.a(), s.v(), s.w());
    let (psi_v, psi_w) = (&s.qv.psi, &s.qw.psi);
    let (sig_v, sig_w) = (&s.qv.sigma, &s.qw.sigma);
    let tau = &s.tau;
    let mu = s.mu_vw();
    let target = compose!(iterated_nabla(s)?, tensor!(s.qv.algebra.unit, v, w))?;
    let mut r = Report::new();
    let lhs = compose!(
        mu,
        tensor!(a, sig_v, w),
        tensor!(psi_v, tau),
        tensor!(v, psi_w, v),
        tensor!(s.delta, nu_v)
    )?;
    r.push(check_eq("pre-1", &ctx, &lhs, &target)?);
    let lhs = compose!(
        mu,
        tensor!(a, psi_v, w),
        tensor!(a, v, sig_w),
        tensor!(a, tau, w),
        tensor!(nu_w, v, w)
    )?;
    r.push(check_eq("pre-2", &ctx, &lhs, &target)?);
    Ok(r)
}

/// `ν_{V⊗W} = ∇_{A⊗V⊗W}∘(μ_A⊗V⊗W)∘(A⊗ψ_V⊗W)∘(ν_V⊗ν_W)`.
pub fn iterated_preunit_morphism(s: &IterSetup, nu_v: &FMor, nu_w: &FMor) -> Result<FMor> {
    compose!(
        iterated_nabla(s)?,
        s.mu_vw(),
        tensor!(s.a(), s.qv.psi, s.w()),
        tensor!(nu_v, nu_w)
    )
}

#[derive(Clone, Debug)]
pub struct IteratedUnital {
    pub iterated: Iterated,
    pub nu: FMor,
    pub unital: UnitalCrossedProduct,
    pub report: Report,
}

impl IteratedUnital {
    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// Builds the iterated product together with its preunit `ν_{V⊗W}`. Requires the
/// iteration hypotheses, that `ν_V`, `ν_W` are preunits of the two inputs, and
/// (pre-1), (pre-2). The report ends with the preunit checks on `A⊗V⊗W`.
pub fn iterated_preunit(s: &IterSetup, nu_v: &FMor, nu_w: &FMor) -> Result<IteratedUnital> {
    let a = s.a().clone();
    let nu_v = nu_v.relabel(&FObj::unit(), &a.tensor(s.v()))?;
    let nu_w = nu_w.relabel(&FObj::unit(), &a.tensor(s.w()))?;
    let mut hyp = check_iteration_hypotheses(s)?;
    hyp.extend(check_pre_system(&s.qv, &nu_v)?);
    hyp.extend(check_pre_system(&s.qw, &nu_w)?);
    hyp.extend(check_iterated_pre(s, &nu_v, &nu_w)?);
    require_all(&hyp)?;
    let iterated = assemble_iterated(s, hyp)?;
    let nu = iterated_preunit_morphism(s, &nu_v, &nu_w)?;
    let mut report = iterated.report.clone();
    report.extend(check_preunit(&iterated.cp.mu, &nu)?);
    report.extend(check_pre_system(&iterated.quad, &nu)?);
    report.push(check_eq(
        "nabla-nu-eq",
        &s.context(),
        &nabla_nu(&iterated.cp.mu, &nu)?,
        &iterated.cp.nabla,
    )?);
    let unital = assemble_unital(iterated.cp.clone(), &nu)?;
    for c in unital.report.checks.iter() {
        if c.label.starts_with("monoid-") || c.label.starts_with("beta") {
            report.push(c.clone());
        }
    }
    Ok(IteratedUnital {
        iterated,
        nu,
        unital,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::fixtures::{flip_triple, mined_wdl_triple, ordinary_tensor, skew_group_dp};
    use crate::examples::laws::trivial_quadruple;
    use crate::examples::triples::triple_setup;

    fn with_trivial_w(qv: Quadruple) -> IterSetup {
        let f = qv.field();
        let n = qv.v.dim();
        let qw = trivial_quadruple(&qv.algebra);
        IterSetup::new(qv, qw, Mat::identity(f, n), Mat::identity(f, n)).unwrap()
    }

    #[test]
    fn flips_compose_to_a_flip() {
        let (s, _, _) = triple_setup(&flip_triple(Field::Rationals)).unwrap();
        let swap = FMor::swap(s.field(), &s.vw(), s.a());
        assert_eq!(psi_iter(&s).unwrap(), swap);
        assert_eq!(iterated_nabla(&s).unwrap(), FMor::identity(s.field(), &s.avw()));
    }

    #[test]
    fn trivial_w_keeps_v() {
        let fx = ordinary_tensor(Field::Prime(3));
        let s = with_trivial_w(fx.quad.clone());
        assert_eq!(psi_iter(&s).unwrap().mat, fx.quad.psi.mat);
        assert_eq!(sigma_iter(&s).unwrap().mat, fx.quad.sigma.mat);
        let it = build_iterated(&s).unwrap();
        assert!(it.verified(), "{}", it.report.render_text());
        assert_eq!(it.cp.mu.mat, crate::wcp::product_mu(&fx.quad).unwrap().mat);
    }

    #[test]
    fn weak_link_passes() {
        let (s, _, _) = triple_setup(&mined_wdl_triple()).unwrap();
        assert!(check_link(&s).unwrap().all_pass());
        assert!(check_sigma_conditions(&s).unwrap().all_pass());
        assert!(iterated_nabla(&s).unwrap().mat.rank() < s.avw().dim());
    }

    #[test]
    fn zero_link_fails() {
        let (mut s, _, _) = triple_setup(&flip_triple(Field::Prime(3))).unwrap();
        s.delta = FMor::zero(s.field(), &s.vw(), &s.vw());
        // ψ_{V⊗W} vanishes, so the link equations hold vacuously
        assert!(check_link(&s).unwrap().all_pass());
        assert!(!check_sigma_conditions(&s).unwrap().passed("sigma1"));
        assert!(build_iterated(&s).is_err());
    }

    #[test]
    fn corrupted_link_breaks_sigma_conditions() {
        let (mut s, _, _) = triple_setup(&mined_wdl_triple()).unwrap();
        s.delta.mat.set_i64(0, 0, 0);
        let r = check_sigma_conditions(&s).unwrap();
        assert!(!r.all_pass(), "{}", r.render_text());
    }

    #[test]
    fn flip_twists_commuting_skew_groups() {
        let (s, _, _) = skew_group_dp();
        assert!(check_twisting(&s).unwrap().all_pass());
    }

    #[test]
    fn corrupted_tau_breaks_twisting_i() {
        let (mut s, _, _) = skew_group_dp();
        s.tau.mat.set_i64(1, 0, 1);
        let c = check_twisting(&s).unwrap();
        let t = c.get("twisting-i").unwrap();
        assert!(!t.pass);
        assert!(t.witness.is_some());
    }

    #[test]
    fn flip_triple_preunit_is_the_unit() {
        let t = flip_triple(Field::Rationals);
        let (s, nv, nw) = triple_setup(&t).unwrap();
        let u = iterated_preunit(&s, &nv, &nw).unwrap();
        assert!(u.verified(), "{}", u.report.render_text());
        assert_eq!(u.nu.mat, tensor!(t.a.unit, t.b.unit, t.c.unit).mat);
    }
}
