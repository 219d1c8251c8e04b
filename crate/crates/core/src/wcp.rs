//! Weak crossed products from quadruples `(A, V, ψ, σ)`.
//!
//! `ψ: V⊗A -> A⊗V` and `σ: V⊗V -> A⊗V`; `V` may itself be a tensor of factors.

use crate::error::{Error, Result};
use crate::fdvect::{check_eq, FMor, FObj, MonoidData};
use crate::kernel::{split_idempotent, Field, Mat};
use crate::report::{Check, Report};
use crate::{compose, tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub algebra: MonoidData,
    pub v: FObj,
    pub psi: FMor,
    pub sigma: FMor,
}

impl Quadruple {
    /// Validates shapes and fields; relabels `ψ` and `σ` onto `V⊗A -> A⊗V` and
    /// `V⊗V -> A⊗V`. No axioms are checked here.
    pub fn new(algebra: MonoidData, v: FObj, psi: Mat, sigma: Mat) -> Result<Quadruple> {
        let a = algebra.obj.clone();
        let field = algebra.field();
        for (what, m) in [("psi", &psi), ("sigma", &sigma)] {
            if m.field() != field {
                return Err(Error::Invalid(format!("{what} is over {} but {} is over {field}", m.field(), algebra.name)));
            }
        }
        let psi = FMor::new(v.tensor(&a), a.tensor(&v), psi)?;
        let sigma = FMor::new(v.tensor(&v), a.tensor(&v), sigma)?;
        Ok(Quadruple { algebra, v, psi, sigma })
    }

    pub fn from_morphisms(algebra: MonoidData, v: FObj, psi: FMor, sigma: FMor) -> Result<Quadruple> {
        Quadruple::new(algebra, v, psi.mat, sigma.mat)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn a(&self) -> &FObj {
        &self.algebra.obj
    }

    /// The object `A⊗V`.
    pub fn av(&self) -> FObj {
        self.a().tensor(&self.v)
    }

    /// Label used in report contexts.
    pub fn context(&self) -> String {
        self.av().to_string()
    }

    /// Name of the image object `A×V`.
    pub fn image_name(&self) -> String {
        if self.v.factors().len() > 1 {
            format!("{}×({})", self.algebra.name, self.v)
        } else {
            format!("{}×{}", self.algebra.name, self.v)
        }
    }

    /// `μ_A⊗V`.
    pub fn mu_v(&self) -> FMor {
        tensor!(self.algebra.mul, self.v)
    }
}

/// `(μ_A⊗V)∘(A⊗ψ)∘(ψ⊗A) = ψ∘(V⊗μ_A)`.
pub fn check_wmeas(q: &Quadruple) -> Result<Check> {
    let (a, v) = (q.a(), &q.v);
    let lhs = compose!(q.mu_v(), tensor!(a, q.psi), tensor!(q.psi, a))?;
    let rhs = compose!(q.psi, tensor!(v, q.algebra.mul))?;
    check_eq("wmeas-wcp", &q.context(), &lhs, &rhs)
}

/// `∇ = (μ_A⊗V)∘(A⊗ψ)∘(A⊗V⊗η_A)`.
pub fn nabla(q: &Quadruple) -> Result<FMor> {
    let (a, v) = (q.a(), &q.v);
    compose!(q.mu_v(), tensor!(a, q.psi), tensor!(a, v, q.algebra.unit))
}

/// Idempotency and left `A`-linearity of `∇`.
pub fn check_nabla(q: &Quadruple, nab: &FMor) -> Result<Report> {
    let ctx = q.context();
    let a = q.a();
    let mut r = Report::new();
    r.push(check_eq("idem-wcp", &ctx, &compose!(nab, nab)?, nab)?);
    r.push(check_eq(
        "nabla-linear",
        &ctx,
        &compose!(nab, q.mu_v())?,
        &compose!(q.mu_v(), tensor!(a, nab))?,
    )?);
    Ok(r)
}

/// `(μ_A⊗V)∘(A⊗ψ)∘(σ⊗A) = (μ_A⊗V)∘(A⊗σ)∘(ψ⊗V)∘(V⊗ψ)`.
pub fn check_twisted(q: &Quadruple) -> Result<Check> {
    let (a, v) = (q.a(), &q.v);
    let lhs = compose!(q.mu_v(), tensor!(a, q.psi), tensor!(q.sigma, a))?;
    let rhs = compose!(q.mu_v(), tensor!(a, q.sigma), tensor!(q.psi, v), tensor!(v, q.psi))?;
    check_eq("twis-wcp", &q.context(), &lhs, &rhs)
}

/// `(μ_A⊗V)∘(A⊗σ)∘(σ⊗V) = (μ_A⊗V)∘(A⊗σ)∘(ψ⊗V)∘(V⊗σ)`.
pub fn check_cocycle(q: &Quadruple) -> Result<Check> {
    let (a, v) = (q.a(), &q.v);
    let lhs = compose!(q.mu_v(), tensor!(a, q.sigma), tensor!(q.sigma, v))?;
    let rhs = compose!(q.mu_v(), tensor!(a, q.sigma), tensor!(q.psi, v), tensor!(v, q.sigma))?;
    check_eq("cocy2-wcp", &q.context(), &lhs, &rhs)
}

/// `∇∘σ = σ`.
pub fn check_sigma_normalized(q: &Quadruple) -> Result<Check> {
    let nab = nabla(q)?;
    check_eq("idemp-sigma-inv", &q.context(), &compose!(nab, q.sigma)?, &q.sigma)
}

/// `μ_{A⊗V} = (μ_A⊗V)∘(μ_A⊗σ)∘(A⊗ψ⊗V)`.
pub fn product_mu(q: &Quadruple) -> Result<FMor> {
    let (a, v) = (q.a(), &q.v);
    compose!(q.mu_v(), tensor!(q.algebra.mul, q.sigma), tensor!(a, q.psi, v))
}

/// Replaces `σ` by `∇∘σ`.
pub fn normalize_sigma(q: &Quadruple) -> Result<Quadruple> {
    let nab = nabla(q)?;
    let mut out = q.clone();
    out.sigma = compose!(nab, q.sigma)?;
    Ok(out)
}

/// Identities that follow from the axioms. Each is reported only when its
/// hypotheses hold on the input; otherwise it is marked skipped.
pub fn check_derived_identities(q: &Quadruple) -> Result<Report> {
    let ctx = q.context();
    let (a, v) = (q.a(), &q.v);
    let wmeas = check_wmeas(q)?.pass;
    let twisted = wmeas && check_twisted(q)?.pass;
    let normal = twisted && check_sigma_normalized(q)?.pass;
    let nab = nabla(q)?;
    let mu_v = q.mu_v();
    let mut r = Report::new();

    if wmeas {
        let base = compose!(mu_v, tensor!(a, q.psi))?;
        let first = compose!(base, tensor!(nab, a))?;
        let second = compose!(nab, base)?;
        let w = first.diff(&base)?.or(base.diff(&second)?);
        r.push(Check::new("fi-nab", &ctx, w));
    } else {
        r.push(Check::skipped("fi-nab", &ctx));
    }

    // (μ_A⊗V)∘(A⊗σ)∘(ψ⊗V) and (μ_A⊗V)∘(A⊗σ)
    let s_psi = compose!(mu_v, tensor!(a, q.sigma), tensor!(q.psi, v))?;
    let s = compose!(mu_v, tensor!(a, q.sigma))?;
    if twisted {
        r.push(check_eq("c1", &ctx, &compose!(s_psi, tensor!(v, nab))?, &compose!(nab, s_psi)?)?);
        r.push(check_eq("aw", &ctx, &compose!(nab, s, tensor!(nab, v))?, &compose!(nab, s)?)?);
    } else {
        r.push(Check::skipped("c1", &ctx));
        r.push(Check::skipped("aw", &ctx));
    }
    if normal {
        r.push(check_eq("c11", &ctx, &compose!(s_psi, tensor!(v, nab))?, &s_psi)?);
        r.push(check_eq("aw1", &ctx, &compose!(s, tensor!(nab, v))?, &s)?);
    } else {
        r.push(Check::skipped("c11", &ctx));
        r.push(Check::skipped("aw1", &ctx));
    }

    let mu = product_mu(q)?;
    let av = q.av();
    if wmeas {
        r.push(check_eq("otra-prop", &ctx, &compose!(mu, tensor!(nab, av))?, &mu)?);
    } else {
        r.push(Check::skipped("otra-prop", &ctx));
    }
    if normal {
        r.push(check_eq("vieja-proof", &ctx, &compose!(mu, tensor!(av, nab))?, &mu)?);
    } else {
        r.push(Check::skipped("vieja-proof", &ctx));
    }
    Ok(r)
}

/// Axioms, `∇` properties and derived identities in one report.
pub fn check_quadruple(q: &Quadruple) -> Result<Report> {
    let mut r = Report::new();
    r.push(check_wmeas(q)?);
    r.extend(check_nabla(q, &nabla(q)?)?);
    r.push(check_twisted(q)?);
    r.push(check_cocycle(q)?);
    r.push(check_sigma_normalized(q)?);
    r.extend(check_derived_identities(q)?);
    Ok(r)
}

/// Turns a failed check into the corresponding hypothesis error.
pub(crate) fn require(c: Check) -> Result<()> {
    if c.pass {
        return Ok(());
    }
    let label = crate::report::LABELS
        .iter()
        .copied()
        .find(|l| *l == c.label)
        .unwrap_or("unknown");
    Err(Error::Hypothesis {
        label,
        context: c.context,
        witness: c.witness.map(Box::new),
    })
}

/// Fails on the first failed check of a report.
pub(crate) fn require_all(r: &Report) -> Result<()> {
    for c in r.failures() {
        require(c.clone())?;
    }
    Ok(())
}

/// The split monoid `A×V` together with everything used to build it.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub quad: Quadruple,
    pub nabla: FMor,
    /// `μ_{A⊗V}` on `A⊗V`.
    pub mu: FMor,
    /// The image object `A×V`.
    pub image: FObj,
    /// `i: A×V -> A⊗V`.
    pub inj: FMor,
    /// `p: A⊗V -> A×V`.
    pub proj: FMor,
    /// `μ_{A×V} = p∘μ_{A⊗V}∘(i⊗i)`.
    pub mu_small: FMor,
    pub report: Report,
}

impl CrossedProduct {
    pub fn rank(&self) -> usize {
        self.image.dim()
    }

    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// Splits an idempotent endomorphism through a single named image factor.
pub fn split_morphism(e: &FMor, name: &str) -> Result<(FObj, FMor, FMor)> {
    let s = split_idempotent(&e.mat)?;
    let image = FObj::named(name, s.rank);
    let inj = FMor::new(image.clone(), e.cod.clone(), s.inj)?;
    let proj = FMor::new(e.dom.clone(), image.clone(), s.proj)?;
    Ok((image, inj, proj))
}

/// Builds `A⊗V` with `μ_{A⊗V}` and its image `A×V`. Fails unless the quadruple
/// satisfies (wmeas-wcp), (twis-wcp), (cocy2-wcp) and `∇∘σ = σ`.
pub fn build_crossed_product(q: &Quadruple) -> Result<CrossedProduct> {
    require(check_wmeas(q)?)?;
    require(check_twisted(q)?)?;
    require(check_cocycle(q)?)?;
    require(check_sigma_normalized(q)?)?;
    assemble_crossed_product(q)
}

/// Same as [`build_crossed_product`] without the hypothesis gate. The report
/// still records every post-condition.
pub fn assemble_crossed_product(q: &Quadruple) -> Result<CrossedProduct> {
    let ctx = q.context();
    let av = q.av();
    let nab = nabla(q)?;
    let mut report = check_nabla(q, &nab)?;
    let mu = product_mu(q)?;
    report.push(check_eq(
        "assoc-wcp",
        &ctx,
        &compose!(mu, tensor!(mu, av))?,
        &compose!(mu, tensor!(av, mu))?,
    )?);
    let w = compose!(nab, mu)?
        .diff(&mu)?
        .or(compose!(mu, tensor!(nab, nab))?.diff(&mu)?);
    report.push(Check::new("normalized-wcp", &ctx, w));
    report.push(check_eq("otra-prop", &ctx, &compose!(mu, tensor!(nab, av))?, &mu)?);
    report.push(check_eq("vieja-proof", &ctx, &compose!(mu, tensor!(av, nab))?, &mu)?);

    let (image, inj, proj) = split_morphism(&nab, &q.image_name())?;
    let mu_small = compose!(proj, mu, tensor!(inj, inj))?;
    let img_ctx = image.to_string();
    report.push(check_eq(
        "prod-wcp",
        &img_ctx,
        &compose!(mu_small, tensor!(mu_small, image))?,
        &compose!(mu_small, tensor!(image, mu_small))?,
    )?);
    Ok(CrossedProduct {
        quad: q.clone(),
        nabla: nab,
        mu,
        image,
        inj,
        proj,
        mu_small,
        report,
    })
}
