//! Three monoids `A, B, C` with laws `λ1: B⊗A -> A⊗B`, `λ2: C⊗B -> B⊗C`,
//! `λ3: C⊗A -> A⊗C` and their iterated product on `A⊗B⊗C`.

use crate::error::Result;
use crate::examples::laws::{
    check_distributive_law, check_wdl, quadruple_from_twisting_map, quadruple_from_wdl, same_field, wdl_nabla,
};
use crate::fdvect::{check_eq, FMor, MonoidData};
use crate::iterate::{iterated_preunit, IterSetup, IteratedUnital};
use crate::report::Report;
use crate::{compose, tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    Distributive,
    Weak,
}

#[derive(Clone, Debug)]
pub struct LawTriple {
    pub kind: LawKind,
    pub a: MonoidData,
    pub b: MonoidData,
    pub c: MonoidData,
    pub l1: FMor,
    pub l2: FMor,
    pub l3: FMor,
}

impl LawTriple {
    pub fn context(&self) -> String {
        format!("{}⊗{}⊗{}", self.a.name, self.b.name, self.c.name)
    }
}

/// `(A⊗λ2)∘(λ3⊗B)∘(C⊗λ1) = (λ1⊗C)∘(B⊗λ3)∘(λ2⊗A)` on `C⊗B⊗A`.
pub fn check_yang_baxter(t: &LawTriple) -> Result<crate::report::Check> {
    let (a, b, c) = (&t.a.obj, &t.b.obj, &t.c.obj);
    let lhs = compose!(tensor!(a, t.l2), tensor!(t.l3, b), tensor!(c, t.l1))?;
    let rhs = compose!(tensor!(t.l1, c), tensor!(b, t.l3), tensor!(t.l2, a))?;
    check_eq("YB-Comp", &t.context(), &lhs, &rhs)
}

/// The law checks for the three pairs and the hexagon.
pub fn check_triple(t: &LawTriple) -> Result<Report> {
    let mut r = Report::new();
    let pairs = [(&t.a, &t.b, &t.l1), (&t.b, &t.c, &t.l2), (&t.a, &t.c, &t.l3)];
    for (x, y, l) in pairs {
        r.extend(match t.kind {
            LawKind::Distributive => check_distributive_law(x, y, l)?,
            LawKind::Weak => check_wdl(x, y, l)?,
        });
    }
    r.push(check_yang_baxter(t)?);
    Ok(r)
}

/// Iteration data: `V = B`, `W = C`, `τ = λ2`, `Δ = id` for distributive laws and
/// `Δ = ∇_{B⊗C}` for weak ones, plus the preunits of the two quadruples.
pub fn triple_setup(t: &LawTriple) -> Result<(IterSetup, FMor, FMor)> {
    same_field(&[&t.a, &t.b, &t.c])?;
    let field = t.a.field();
    let (qv, nu_v, qw, nu_w, delta) = match t.kind {
        LawKind::Distributive => {
            let qv = quadruple_from_twisting_map(&t.a, &t.b, &t.l1)?;
            let qw = quadruple_from_twisting_map(&t.a, &t.c, &t.l3)?;
            let nu_v = tensor!(t.a.unit, t.b.unit);
            let nu_w = tensor!(t.a.unit, t.c.unit);
            let delta = FMor::identity(field, &t.b.obj.tensor(&t.c.obj));
            (qv, nu_v, qw, nu_w, delta)
        }
        LawKind::Weak => {
            let (qv, nu_v) = quadruple_from_wdl(&t.a, &t.b, &t.l1)?;
            let (qw, nu_w) = quadruple_from_wdl(&t.a, &t.c, &t.l3)?;
            let delta = wdl_nabla(&t.b, &t.c, &t.l2)?;
            (qv, nu_v, qw, nu_w, delta)
        }
    };
    let setup = IterSetup::new(qv, qw, delta.mat, t.l2.mat.clone())?;
    Ok((setup, nu_v, nu_w))
}

#[derive(Clone, Debug)]
pub struct TripleResult {
    pub setup: IterSetup,
    pub iterated: IteratedUnital,
    pub report: Report,
}

impl TripleResult {
    pub fn verified(&self) -> bool {
        self.report.all_pass()
    }
}

/// Iterates the triple and compares the result with the closed forms for the
/// product, `σ_{B⊗C}` and the preunit.
pub fn iterate_triple(t: &LawTriple) -> Result<TripleResult> {
    let mut report = check_triple(t)?;
    let (setup, nu_v, nu_w) = triple_setup(t)?;
    let iterated = iterated_preunit(&setup, &nu_v, &nu_w)?;
    report.extend(iterated.report.clone());

    let ctx = t.context();
    let (a, b, c) = (&t.a.obj, &t.b.obj, &t.c.obj);
    let (l1, l2, l3) = (&t.l1, &t.l2, &t.l3);
    let mu3 = tensor!(t.a.mul, t.b.mul, t.c.mul);
    // A⊗A⊗B⊗B⊗C⊗C from A⊗B⊗C⊗A⊗B⊗C
    let middle = match t.kind {
        LawKind::Distributive => compose!(tensor!(l1, l2), tensor!(b, l3, b))?,
        LawKind::Weak => {
            let n_bc = wdl_nabla(&t.b, &t.c, l2)?;
            let n_ab = wdl_nabla(&t.a, &t.b, l1)?;
            compose!(tensor!(l1, l2), tensor!(b, l3, b), tensor!(n_bc, n_ab))?
        }
    };
    let closed = compose!(mu3, tensor!(a, middle, c))?;
    report.push(check_eq("closed-product", &ctx, &iterated.iterated.cp.mu.relabel(&closed.dom, &closed.cod)?, &closed)?);

    let closed_sigma = match t.kind {
        LawKind::Distributive => tensor!(t.a.unit, compose!(tensor!(t.b.mul, t.c.mul), tensor!(b, l2, c))?),
        LawKind::Weak => compose!(
            tensor!(l1, t.c.mul),
            tensor!(t.b.mul, l3, c),
            tensor!(b, l2, t.a.unit, c)
        )?,
    };
    let sigma = iterated.iterated.quad.sigma.relabel(&closed_sigma.dom, &closed_sigma.cod)?;
    report.push(check_eq("closed-sigma", &ctx, &sigma, &closed_sigma)?);

    let closed_nu = match t.kind {
        LawKind::Distributive => tensor!(t.a.unit, t.b.unit, t.c.unit),
        LawKind::Weak => compose!(
            tensor!(l1, c),
            tensor!(b, l3),
            tensor!(l2, a),
            tensor!(t.c.unit, t.b.unit, t.a.unit)
        )?,
    };
    let nu = iterated.nu.relabel(&closed_nu.dom, &closed_nu.cod)?;
    report.push(check_eq("closed-preunit", &ctx, &nu, &closed_nu)?);
    Ok(TripleResult {
        setup,
        iterated,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::fixtures::{flip_triple, quantum_plane_triple};
    use crate::kernel::Field;

    #[test]
    fn flips_satisfy_the_hexagon() {
        assert!(check_yang_baxter(&flip_triple(Field::Prime(3))).unwrap().pass);
        let r = check_triple(&quantum_plane_triple()).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
    }

    #[test]
    fn corrupted_law_breaks_the_hexagon() {
        // one corrupted flip would still commute with two flips
        let mut t = quantum_plane_triple();
        t.l2.mat.set_i64(0, 3, 1);
        let c = check_yang_baxter(&t).unwrap();
        assert!(!c.pass && c.witness.is_some());
    }

    #[test]
    fn weak_setup_links_through_nabla() {
        let t = crate::examples::fixtures::mined_wdl_triple();
        let (s, _, _) = triple_setup(&t).unwrap();
        assert_eq!(s.delta.mat, wdl_nabla(&t.b, &t.c, &t.l2).unwrap().mat);
        assert_eq!(s.tau.mat, t.l2.mat);
    }
}
