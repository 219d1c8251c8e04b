//! One function per acceptance criterion. Each returns a short summary on
//! success and the first problem found otherwise.

use std::time::{Duration, Instant};

use wcp_core::examples::fixtures::{self, diagonal_weak_law};
use wcp_core::examples::laws::check_wdl;
use wcp_core::examples::triples::triple_setup;
use wcp_core::examples::{mine_wdl, LawKind, LawTriple, MinerConfig};
use wcp_core::iso::{build_iso, check_newit};
use wcp_core::iterate::{build_iterated, check_link, iterated_preunit, IterSetup};
use wcp_core::preunit::{check_pre_system, derive_psi_sigma, nabla_nu};
use wcp_core::wcp::{
    build_crossed_product, check_cocycle, check_derived_identities, check_sigma_normalized, check_twisted,
    product_mu, Quadruple,
};
use wcp_core::{compose, split_idempotent, tensor, FMor, Mat, Report};

use super::{idempotent_suite, trivial_vw, trivial_w, Table};

pub type Outcome = Result<String, String>;

fn fail_on(r: &Report, what: &str) -> Result<(), String> {
    match r.failures().next() {
        Some(c) => Err(format!("{what}: {} failed on {}", c.label, c.context)),
        None => Ok(()),
    }
}

fn setup(name: &str, t: &LawTriple) -> Result<(IterSetup, FMor, FMor), String> {
    triple_setup(t).map_err(|e| format!("{name}: {e}"))
}

pub fn prince() -> Outcome {
    let start = Instant::now();
    let all = fixtures::triples();
    for (name, t) in &all {
        let (s, _, _) = setup(name, t)?;
        let it = build_iterated(&s).map_err(|e| format!("{name}: {e}"))?;
        fail_on(&it.report, name)?;
        for c in [check_twisted(&it.quad), check_cocycle(&it.quad), check_sigma_normalized(&it.quad)] {
            let c = c.map_err(|e| e.to_string())?;
            if !c.pass {
                return Err(format!("{name}: {} fails on the iterated quadruple", c.label));
            }
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(10) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{} triples in {took:.2?}", all.len()))
}

pub fn preunit() -> Outcome {
    let all = fixtures::triples();
    for (name, t) in &all {
        let (s, nv, nw) = setup(name, t)?;
        let u = iterated_preunit(&s, &nv, &nw).map_err(|e| format!("{name}: {e}"))?;
        fail_on(&u.report, name)?;
        let pre = check_pre_system(&u.iterated.quad, &u.nu).map_err(|e| e.to_string())?;
        for l in ["pre1-wcp", "pre2-wcp", "pre3-wcp"] {
            if !pre.passed(l) {
                return Err(format!("{name}: {l}"));
            }
        }
        let nn = nabla_nu(&u.iterated.cp.mu, &u.nu).map_err(|e| e.to_string())?;
        if nn != u.iterated.cp.nabla {
            return Err(format!("{name}: ∇^ν differs from ∇"));
        }
    }
    Ok(format!("{} triples", all.len()))
}

pub fn isomorphism() -> Outcome {
    let all = fixtures::triples();
    let mut ranks = Vec::new();
    for (name, t) in &all {
        let (s, nv, nw) = setup(name, t)?;
        fail_on(&check_newit(&s, &nw).map_err(|e| e.to_string())?, name)?;
        let b = build_iso(&s, &nv, &nw).map_err(|e| format!("{name}: {e}"))?;
        fail_on(&b.report, name)?;
        let n = b.omega.mat.rows();
        let id = Mat::identity(s.field(), n);
        let left = b.omega_inv.mat.compose(&b.omega.mat).map_err(|e| e.to_string())?;
        let right = b.omega.mat.compose(&b.omega_inv.mat).map_err(|e| e.to_string())?;
        if left != id || right != id {
            return Err(format!("{name}: ω and ω⁻¹ are not inverse"));
        }
        if !(b.report.passed("iso-mult") && b.report.passed("iso-unit")) {
            return Err(format!("{name}: not a monoid isomorphism"));
        }
        ranks.push(n.to_string());
    }
    Ok(format!("ranks {}", ranks.join(",")))
}

/// Compares the pipeline's verdicts with the oracle's on one monoid.
fn oracle_agrees(name: &str, mul: &Mat, unit: Option<&Mat>, pipe_assoc: bool, pipe_unit: bool) -> Result<(), String> {
    let t = Table::from_mul(mul);
    let assoc = t.assoc_failures().is_empty();
    if assoc != pipe_assoc {
        return Err(format!("{name}: associativity oracle {assoc}, pipeline {pipe_assoc}"));
    }
    if let Some(u) = unit {
        let unital = t.unit_failures(u).is_empty();
        if unital != pipe_unit {
            return Err(format!("{name}: unit oracle {unital}, pipeline {pipe_unit}"));
        }
    }
    if !assoc {
        return Err(format!("{name}: not associative"));
    }
    if unit.is_some() && !pipe_unit {
        return Err(format!("{name}: not unital"));
    }
    Ok(())
}

pub fn oracle() -> Outcome {
    let mut n = 0;
    for (name, t) in fixtures::triples() {
        let (s, nv, nw) = setup(name, &t)?;
        if s.avw().dim() > 9 {
            continue;
        }
        let u = iterated_preunit(&s, &nv, &nw).map_err(|e| format!("{name}: {e}"))?;
        let r = &u.report;
        let big_unit = (t.kind == LawKind::Distributive).then_some(&u.nu.mat);
        let mu = &u.iterated.cp.mu;
        let id = FMor::identity(s.field(), &s.avw());
        let left = compose!(mu, tensor!(u.nu, s.avw())).map_err(|e| e.to_string())?;
        let right = compose!(mu, tensor!(s.avw(), u.nu)).map_err(|e| e.to_string())?;
        let big_unital = left == id && right == id;
        oracle_agrees(name, &u.iterated.cp.mu.mat, big_unit, r.passed("assoc-wcp"), big_unital)?;
        let small = u.unital.monoid();
        let unit_ok = r.passed("monoid-unit-left") && r.passed("monoid-unit-right");
        oracle_agrees(name, &small.mul.mat, Some(&small.unit.mat), r.passed("monoid-assoc"), unit_ok)?;
        n += 2;
        if name.starts_with("flip-") {
            let want = Table::tensor3(
                &Table::from_mul(&t.a.mul.mat),
                &Table::from_mul(&t.b.mul.mat),
                &Table::from_mul(&t.c.mul.mat),
            );
            if !Table::from_mul(&u.iterated.cp.mu.mat).agrees(&want) {
                return Err(format!("{name}: not the componentwise product"));
            }
        }
    }
    for fx in fixtures::quadruples() {
        let cp = build_crossed_product(&fx.quad).map_err(|e| format!("{}: {e}", fx.name))?;
        oracle_agrees(fx.name, &cp.mu.mat, None, cp.report.passed("assoc-wcp"), true)?;
        n += 1;
    }
    Ok(format!("{n} products agree"))
}

pub fn degenerate() -> Outcome {
    for fx in fixtures::quadruples() {
        let it = build_iterated(&trivial_w(&fx.quad)).map_err(|e| format!("{}: {e}", fx.name))?;
        let mu = product_mu(&fx.quad).map_err(|e| e.to_string())?;
        if it.cp.mu.mat != mu.mat {
            return Err(format!("{}: W = K does not give μ_(A⊗V)", fx.name));
        }
    }
    for (name, t) in fixtures::triples() {
        for a in [&t.a, &t.b, &t.c] {
            let it = build_iterated(&trivial_vw(a)).map_err(|e| format!("{name}: {e}"))?;
            if it.cp.mu.mat != a.mul.mat {
                return Err(format!("{name}: V = W = K does not give μ_{}", a.name));
            }
        }
    }
    Ok("W = K and V = W = K collapse".into())
}

pub fn weakness() -> Outcome {
    let t = fixtures::mined_wdl_triple();
    let (s, nv, nw) = setup("mined-wdl-GF2", &t)?;
    let u = iterated_preunit(&s, &nv, &nw).map_err(|e| e.to_string())?;
    fail_on(&u.report, "mined-wdl-GF2")?;
    let rank = u.iterated.cp.rank();
    let dim = s.avw().dim();
    if rank >= dim {
        return Err(format!("rank {rank} of {dim}"));
    }
    let start = Instant::now();
    let out = mine_wdl(&MinerConfig::exhaustive(2, (2, 2))).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    if took > Duration::from_secs(60) || out.truncated {
        return Err(format!("miner took {took:?}"));
    }
    let want = diagonal_weak_law(&t.a, &t.b).mat;
    if !out.laws.iter().any(|l| l.lambda.mat == want) {
        return Err("the diagonal law was not mined".into());
    }
    Ok(format!("rank {rank} of {dim}; {} laws mined in {took:.2?}", out.laws.len()))
}

/// Every quadruple the suites touch, with a preunit.
pub fn all_quadruples() -> Result<Vec<(String, Quadruple, FMor)>, String> {
    let mut out: Vec<(String, Quadruple, FMor)> = fixtures::quadruples()
        .into_iter()
        .map(|fx| (fx.name.to_string(), fx.quad, fx.nu))
        .collect();
    for (name, t) in fixtures::triples() {
        let (s, nv, nw) = setup(name, &t)?;
        let u = iterated_preunit(&s, &nv, &nw).map_err(|e| format!("{name}: {e}"))?;
        out.push((format!("{name}/V"), s.qv.clone(), nv));
        out.push((format!("{name}/W"), s.qw.clone(), nw));
        out.push((format!("{name}/V⊗W"), u.iterated.quad, u.nu));
    }
    Ok(out)
}

const WEAK_COROLLARIES: [&str; 5] = ["equ-idem", "idem=idem", "new-nabla", "tech2", "tech3"];

pub fn derived() -> Outcome {
    let quads = all_quadruples()?;
    for (name, q, nu) in &quads {
        let r = check_derived_identities(q).map_err(|e| e.to_string())?;
        if let Some(c) = r.checks.iter().find(|c| c.skipped) {
            return Err(format!("{name}: {} not applicable", c.label));
        }
        fail_on(&r, name)?;
        if !check_pre_system(q, nu).map_err(|e| e.to_string())?.passed("preunit-idemp") {
            return Err(format!("{name}: preunit-idemp"));
        }
    }
    let mut weak = 0;
    for (name, t) in fixtures::triples() {
        let (s, _, _) = setup(name, &t)?;
        if !check_link(&s).map_err(|e| e.to_string())?.passed("falso-idemp-link") {
            return Err(format!("{name}: falso-idemp-link"));
        }
        if t.kind == LawKind::Weak {
            for (x, y, l) in [(&t.a, &t.b, &t.l1), (&t.b, &t.c, &t.l2), (&t.a, &t.c, &t.l3)] {
                let r = check_wdl(x, y, l).map_err(|e| e.to_string())?;
                for label in WEAK_COROLLARIES {
                    if !r.passed(label) {
                        return Err(format!("{name}: {label}"));
                    }
                }
                weak += 1;
            }
        }
    }
    Ok(format!("{} quadruples, {weak} weak laws", quads.len()))
}

pub fn round_trip() -> Outcome {
    let quads = all_quadruples()?;
    for (name, q, nu) in &quads {
        let mu = product_mu(q).map_err(|e| e.to_string())?;
        let (back, r) = derive_psi_sigma(&q.algebra, &q.v, &mu, nu).map_err(|e| format!("{name}: {e}"))?;
        fail_on(&r, name)?;
        if product_mu(&back).map_err(|e| e.to_string())?.mat != mu.mat {
            return Err(format!("{name}: products differ"));
        }
    }
    Ok(format!("{} quadruples", quads.len()))
}

pub const IDEMPOTENT_SEED: u64 = 0x1de;

pub fn kernel() -> Outcome {
    let suite = idempotent_suite(IDEMPOTENT_SEED);
    let mut splits = Vec::new();
    for (k, (f, r, e)) in suite.iter().enumerate() {
        let s = split_idempotent(e).map_err(|err| format!("#{k}: {err}"))?;
        if s.rank != *r {
            return Err(format!("#{k}: rank {} instead of {r}", s.rank));
        }
        if s.inj.compose(&s.proj).map_err(|e| e.to_string())? != *e {
            return Err(format!("#{k}: i∘p ≠ E"));
        }
        if s.proj.compose(&s.inj).map_err(|e| e.to_string())? != Mat::identity(*f, *r) {
            return Err(format!("#{k}: p∘i ≠ id"));
        }
        splits.push(s);
    }
    let again: Vec<_> = idempotent_suite(IDEMPOTENT_SEED)
        .iter()
        .map(|(_, _, e)| split_idempotent(e).expect("split"))
        .collect();
    if again != splits {
        return Err("second run differs".into());
    }
    Ok(format!("{} idempotents", suite.len()))
}

pub type Criterion = (&'static str, fn() -> Outcome);

pub const ALL: [Criterion; 9] = [
    ("iterated products satisfy the axioms", prince),
    ("iterated preunits", preunit),
    ("(A×V)×W ≅ A×(V⊗W)", isomorphism),
    ("structure-constant oracle", oracle),
    ("degenerate collapses", degenerate),
    ("weakness is exercised", weakness),
    ("derived identities", derived),
    ("round trip through derive_psi_sigma", round_trip),
    ("idempotent splitting", kernel),
];
