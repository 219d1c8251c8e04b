//! Brzeziński crossed products (`V` with a distinguished `η_V: K -> V`) and their
//! iteration through a twisting `τ: W⊗V -> V⊗W` with trivial link.

use crate::error::Result;
use crate::fdvect::{check_eq, FMor, FObj};
use crate::iterate::{build_iterated, check_twisting, IterSetup, Iterated};
use crate::report::{Check, Report};
use crate::wcp::{nabla, Quadruple};
use crate::{compose, tensor};

/// (brz1)–(brz3) and `∇ = id`.
pub fn check_brzezinski(q: &Quadruple, eta_v: &FMor) -> Result<Report> {
    let ctx = q.context();
    let (a, v) = (q.a(), &q.v);
    let eta_v = eta_v.relabel(&FObj::unit(), v)?;
    let eta_a = &q.algebra.unit;
    let mut r = Report::new();
    r.push(check_eq("brz1", &ctx, &compose!(q.psi, tensor!(eta_v, a))?, &tensor!(a, eta_v))?);
    r.push(check_eq("brz2", &ctx, &compose!(q.psi, tensor!(v, eta_a))?, &tensor!(eta_a, v))?);
    let unit_v = tensor!(eta_a, v);
    let w = compose!(q.sigma, tensor!(eta_v, v))?
        .diff(&unit_v)?
        .or(compose!(q.sigma, tensor!(v, eta_v))?.diff(&unit_v)?);
    r.push(Check::new("brz3", &ctx, w));
    r.push(check_eq("brz-nabla", &ctx, &nabla(q)?, &FMor::identity(q.field(), &q.av()))?);
    Ok(r)
}

/// The unit `η_A⊗η_V` of a Brzeziński crossed product.
pub fn brz_unit(q: &Quadruple, eta_v: &FMor) -> Result<FMor> {
    let eta_v = eta_v.relabel(&FObj::unit(), &q.v)?;
    Ok(tensor!(q.algebra.unit, eta_v))
}

/// (DP1)–(DP4), then twisting (i) and (ii) and the two necessity checks obtained by
/// restricting (ii) along units.
pub fn check_dp(s: &IterSetup, eta_v: &FMor, eta_w: &FMor) -> Result<Report> {
    let ctx = s.context();
    let (a, v, w) = (s.a(), s.v(), s.w());
    let eta_v = eta_v.relabel(&FObj::unit(), v)?;
    let eta_w = eta_w.relabel(&FObj::unit(), w)?;
    let (psi_v, psi_w) = (&s.qv.psi, &s.qw.psi);
    let (sig_v, sig_w) = (&s.qv.sigma, &s.qw.sigma);
    let tau = &s.tau;
    let mut r = Report::new();

    let dp1_l = compose!(tensor!(a, tau), tensor!(psi_w, v), tensor!(w, sig_v))?;
    let dp1_r = compose!(tensor!(sig_v, w), tensor!(v, tau), tensor!(tau, v))?;
    r.push(check_eq("DP1", &ctx, &dp1_l, &dp1_r)?);
    let dp2_l = compose!(tensor!(psi_v, w), tensor!(v, sig_w), tensor!(tau, w), tensor!(w, tau))?;
    let dp2_r = compose!(tensor!(a, tau), tensor!(sig_w, v))?;
    r.push(check_eq("DP2", &ctx, &dp2_l, &dp2_r)?);
    r.push(check_eq("DP3", &ctx, &compose!(tau, tensor!(eta_w, v))?, &tensor!(v, eta_w))?);
    r.push(check_eq("DP4", &ctx, &compose!(tau, tensor!(w, eta_v))?, &tensor!(eta_v, w))?);

    let tw = check_twisting(s)?;
    r.extend(tw);

    // The two sides of twisting (ii), restricted along units.
    let mu = tensor!(s.qv.algebra.mul, v, w);
    let ii_l = compose!(
        mu,
        tensor!(a, sig_v, w),
        tensor!(psi_v, tau),
        tensor!(v, sig_w, v),
        tensor!(tau, w, v)
    )?;
    let ii_r = compose!(
        mu,
        tensor!(a, psi_v, w),
        tensor!(a, v, sig_w),
        tensor!(a, tau, w),
        tensor!(psi_w, v, w),
        tensor!(w, sig_v, w),
        tensor!(w, v, tau)
    )?;
    let x = tensor!(w, v, eta_w, v);
    let wx = compose!(ii_l, x)?
        .diff(&dp1_r)?
        .or(compose!(ii_r, x)?.diff(&dp1_l)?);
    r.push(Check::new("DP1-necessity", &ctx, wx));
    let y = tensor!(w, eta_v, w, v);
    let wy = compose!(ii_l, y)?
        .diff(&dp2_r)?
        .or(compose!(ii_r, y)?.diff(&dp2_l)?);
    r.push(Check::new("DP2-necessity", &ctx, wy));
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct DpResult {
    pub iterated: Iterated,
    pub eta_vw: FMor,
    pub report: Report,
}

impl DpResult {
    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// Iterates two Brzeziński quadruples and checks that the result is Brzeziński
/// again with `η_{V⊗W} = η_V⊗η_W`, with unit `η_A⊗η_V⊗η_W`.
pub fn iterate_dp(s: &IterSetup, eta_v: &FMor, eta_w: &FMor) -> Result<DpResult> {
    let mut report = check_brzezinski(&s.qv, eta_v)?;
    report.extend(check_brzezinski(&s.qw, eta_w)?);
    report.extend(check_dp(s, eta_v, eta_w)?);
    let iterated = build_iterated(s)?;
    report.extend(iterated.report.clone());
    let eta_vw = tensor!(eta_v.relabel(&FObj::unit(), s.v())?, eta_w.relabel(&FObj::unit(), s.w())?);
    report.extend(check_brzezinski(&iterated.quad, &eta_vw)?);
    let unit = tensor!(s.qv.algebra.unit, eta_vw);
    let mu = &iterated.cp.mu;
    let avw = s.avw();
    let id = FMor::identity(s.field(), &avw);
    report.push(check_eq("monoid-unit-left", &s.context(), &compose!(mu, tensor!(unit, avw))?, &id)?);
    report.push(check_eq("monoid-unit-right", &s.context(), &compose!(mu, tensor!(avw, unit))?, &id)?);
    Ok(DpResult {
        iterated,
        eta_vw,
        report,
    })
}
