use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wcp_core::examples::brz::{check_brzezinski, iterate_dp};
use wcp_core::examples::fixtures;
use wcp_core::examples::laws::{check_distributive_law, check_wdl, check_wreath, quadruple_from_wdl};
use wcp_core::examples::miner::{mine_wdl, AlgebraFamily, MinerConfig};
use wcp_core::examples::triples::{iterate_triple, triple_setup};
use wcp_core::iso::build_iso;
use wcp_core::iterate::{build_iterated, check_link, check_twisting, iterated_preunit, IterSetup};
use wcp_core::examples::algebras::diagonal;
use wcp_core::examples::laws::flip;
use wcp_core::json::{
    parse_workspace, LawJson, MatrixJson, MorphismJson, QuadrupleJson, SetupJson, TripleJson, Workspace, WorkspaceJson,
};
use wcp_core::preunit::{build_unital, check_pre_system, check_preunit};
use wcp_core::wcp::{build_crossed_product, check_quadruple, product_mu};
use wcp_core::{split_idempotent, Check, Error, FMor, Field, Mat, MonoidData, Report};

#[derive(Parser)]
#[command(name = "wcp", version, about = "Exact checks and constructions for weak crossed products")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Workspace JSON file.
    input: PathBuf,
    /// Field of the workspace: Q or a prime p. Must agree with the file if both are given.
    #[arg(long)]
    field: Option<String>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Only process the item with this name.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// All quadruple axioms and derived identities.
    CheckQuadruple(Common),
    /// Build the weak crossed product of each quadruple (unital when `nu` is given).
    BuildWcp(Common),
    /// Preunit conditions for quadruples carrying `nu`.
    CheckPreunit(Common),
    /// Link conditions of each setup.
    CheckLink(Common),
    /// Twisting conditions of each setup.
    CheckTwisting(Common),
    /// Build the iterated product of each setup and triple.
    Iterate(Common),
    /// Build the iterated product with its preunit.
    IteratedPreunit(Common),
    /// Compare (A×V)×W with A×(V⊗W).
    Iso(Common),
    /// Wreath axioms for laws carrying `tau` and `v`.
    CheckWreath(Common),
    /// Distributive-law axioms.
    CheckDl(Common),
    /// Weak distributive-law axioms and corollaries.
    CheckWdl(Common),
    /// Brzeziński conditions for quadruples carrying `eta_V`.
    CheckBrz(Common),
    /// Iterate two Brzeziński quadruples through a setup.
    CheckDp(Common),
    /// Search for weak distributive laws with a non-trivial idempotent.
    MineWdl(MineArgs),
    /// Split every named square matrix as an idempotent.
    SplitIdempotent(Common),
    /// Write the bundled fixtures as workspace files into a directory.
    Fixtures(FixtureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Diagonal,
    Catalog,
}

#[derive(Args)]
struct MineArgs {
    /// Prime p of GF(p).
    #[arg(long)]
    field: String,
    /// Dimensions s,t of the two algebras.
    #[arg(long, default_value = "2,2")]
    dims: String,
    /// Number of candidate laws to examine.
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumerate every candidate instead of sampling.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, value_enum, default_value = "diagonal")]
    family: Family,
    /// Emit a JSON summary of the search alongside the workspace.
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FixtureArgs {
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

/// Malformed input or arguments: exit code 2.
struct Malformed(String);

impl From<wcp_core::json::JsonError> for Malformed {
    fn from(e: wcp_core::json::JsonError) -> Malformed {
        Malformed(format!("malformed input at {e}"))
    }
}

/// One processed item.
struct Item {
    name: String,
    report: Report,
    info: Option<Value>,
}

fn parse_field(text: &str) -> Result<Field, Malformed> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    let digits = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| Malformed(format!("--field: expected Q or a prime, found {text:?}")))?;
    Field::prime(p).map_err(|e| Malformed(format!("--field: {e}")))
}

fn load(c: &Common) -> Result<Workspace, Malformed> {
    let text = std::fs::read_to_string(&c.input)
        .map_err(|e| Malformed(format!("cannot read {}: {e}", c.input.display())))?;
    let field = c.field.as_deref().map(parse_field).transpose()?;
    Ok(parse_workspace(&text, field)?)
}

/// Hypothesis failures become failed checks; anything else is malformed data.
fn absorb<T>(r: Result<T, Error>, report: &mut Report) -> Result<Option<T>, Malformed> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::Hypothesis {
            label,
            context,
            witness,
        }) => {
            let mut c = Check::failed(label, &context);
            c.witness = witness.map(|w| *w);
            report.push(c);
            Ok(None)
        }
        Err(e) => Err(Malformed(e.to_string())),
    }
}

fn selected<'a, T>(items: &'a [T], name: &Option<String>, key: impl Fn(&T) -> &str) -> Vec<&'a T> {
    items
        .iter()
        .filter(|x| name.as_deref().is_none_or(|n| key(x) == n))
        .collect()
}

fn mat_json(m: &Mat) -> Value {
    serde_json::to_value(MatrixJson::from(m)).expect("plain data")
}

/// A setup with the preunits of its two quadruples, when known.
type NamedSetup = (String, IterSetup, Option<FMor>, Option<FMor>);

/// Setups from the `setups` section followed by those derived from triples. A
/// triple whose laws fail their axioms is reported in `items` instead.
fn all_setups(
    ws: &Workspace,
    name: &Option<String>,
    items: &mut Vec<Item>,
) -> Result<Vec<NamedSetup>, Malformed> {
    let mut out = Vec::new();
    for s in selected(&ws.setups, name, |s| &s.name) {
        out.push((s.name.clone(), s.setup.clone(), s.nu_v.clone(), s.nu_w.clone()));
    }
    for (n, t) in selected(&ws.triples, name, |t| &t.0) {
        let mut report = Report::new();
        match absorb(triple_setup(t), &mut report)? {
            Some((s, nv, nw)) => out.push((n.clone(), s, Some(nv), Some(nw))),
            None => items.push(Item {
                name: n.clone(),
                report,
                info: None,
            }),
        }
    }
    Ok(out)
}

fn need<'a>(x: &'a Option<FMor>, what: &str, name: &str) -> Result<&'a FMor, Malformed> {
    x.as_ref().ok_or_else(|| Malformed(format!("{name}: missing {what}")))
}

fn run_workspace(cmd: &Cmd, c: &Common) -> Result<Vec<Item>, Malformed> {
    let ws = load(c)?;
    let mut items = Vec::new();
    let wrap = |e: Error| Malformed(e.to_string());
    match cmd {
        Cmd::CheckQuadruple(_) => {
            for q in selected(&ws.quadruples, &c.name, |q| &q.name) {
                items.push(Item {
                    name: q.name.clone(),
                    report: check_quadruple(&q.quad).map_err(wrap)?,
                    info: None,
                });
            }
        }
        Cmd::BuildWcp(_) => {
            for q in selected(&ws.quadruples, &c.name, |q| &q.name) {
                let mut report = Report::new();
                let mut info = None;
                if let Some(nu) = &q.nu {
                    if let Some(u) = absorb(build_unital(&q.quad, nu), &mut report)? {
                        report.extend(u.report.clone());
                        info = Some(json!({
                            "rank": u.cp.rank(),
                            "dim": q.quad.av().dim(),
                            "product": mat_json(&u.cp.mu_small.mat),
                            "unit": mat_json(&u.unit_small.mat),
                        }));
                    }
                } else if let Some(cp) = absorb(build_crossed_product(&q.quad), &mut report)? {
                    report.extend(cp.report.clone());
                    info = Some(json!({
                        "rank": cp.rank(),
                        "dim": q.quad.av().dim(),
                        "product": mat_json(&cp.mu_small.mat),
                    }));
                }
                items.push(Item {
                    name: q.name.clone(),
                    report,
                    info,
                });
            }
        }
        Cmd::CheckPreunit(_) => {
            for q in selected(&ws.quadruples, &c.name, |q| &q.name) {
                let nu = need(&q.nu, "nu", &q.name)?;
                let mu = product_mu(&q.quad).map_err(wrap)?;
                let mut report = check_preunit(&mu, nu).map_err(wrap)?;
                report.extend(check_pre_system(&q.quad, nu).map_err(wrap)?);
                items.push(Item {
                    name: q.name.clone(),
                    report,
                    info: None,
                });
            }
        }
        Cmd::CheckLink(_) | Cmd::CheckTwisting(_) => {
            for (name, s, _, _) in all_setups(&ws, &c.name, &mut items)? {
                let report = match cmd {
                    Cmd::CheckLink(_) => check_link(&s),
                    _ => check_twisting(&s),
                }
                .map_err(wrap)?;
                items.push(Item { name, report, info: None });
            }
        }
        Cmd::Iterate(_) => {
            for s in selected(&ws.setups, &c.name, |s| &s.name) {
                let mut report = Report::new();
                let mut info = None;
                if let Some(it) = absorb(build_iterated(&s.setup), &mut report)? {
                    report.extend(it.report.clone());
                    info = Some(json!({
                        "rank": it.cp.rank(),
                        "dim": s.setup.avw().dim(),
                        "product": mat_json(&it.cp.mu_small.mat),
                    }));
                }
                items.push(Item {
                    name: s.name.clone(),
                    report,
                    info,
                });
            }
            for (n, t) in selected(&ws.triples, &c.name, |t| &t.0) {
                let mut report = Report::new();
                let mut info = None;
                if let Some(res) = absorb(iterate_triple(t), &mut report)? {
                    report.extend(res.report.clone());
                    let cp = &res.iterated.iterated.cp;
                    info = Some(json!({
                        "rank": cp.rank(),
                        "dim": res.setup.avw().dim(),
                        "product": mat_json(&cp.mu_small.mat),
                        "unit": mat_json(&res.iterated.unital.unit_small.mat),
                    }));
                }
                items.push(Item {
                    name: n.clone(),
                    report,
                    info,
                });
            }
        }
        Cmd::IteratedPreunit(_) | Cmd::Iso(_) => {
            for (name, s, nv, nw) in all_setups(&ws, &c.name, &mut items)? {
                let nv = need(&nv, "nu on qV", &name)?;
                let nw = need(&nw, "nu on qW", &name)?;
                let mut report = Report::new();
                let info = if matches!(cmd, Cmd::Iso(_)) {
                    absorb(build_iso(&s, nv, nw), &mut report)?.map(|b| {
                        report.extend(b.report.clone());
                        json!({
                            "rank": b.image.dim(),
                            "omega": mat_json(&b.omega.mat),
                            "omega_inv": mat_json(&b.omega_inv.mat),
                        })
                    })
                } else {
                    absorb(iterated_preunit(&s, nv, nw), &mut report)?.map(|u| {
                        report.extend(u.report.clone());
                        json!({
                            "rank": u.iterated.cp.rank(),
                            "nu": mat_json(&u.nu.mat),
                        })
                    })
                };
                items.push(Item { name, report, info });
            }
        }
        Cmd::CheckWreath(_) | Cmd::CheckDl(_) | Cmd::CheckWdl(_) => {
            for l in selected(&ws.laws, &c.name, |l| &l.name) {
                let report = match cmd {
                    Cmd::CheckWreath(_) => {
                        let tau = need(&l.tau, "tau", &l.name)?;
                        let v = l.v.as_ref().ok_or_else(|| Malformed(format!("{}: missing v", l.name)))?;
                        check_wreath(&l.a, &l.b, &l.lambda, tau, v)
                    }
                    Cmd::CheckDl(_) => check_distributive_law(&l.a, &l.b, &l.lambda),
                    _ => check_wdl(&l.a, &l.b, &l.lambda),
                }
                .map_err(wrap)?;
                items.push(Item {
                    name: l.name.clone(),
                    report,
                    info: None,
                });
            }
        }
        Cmd::CheckBrz(_) => {
            for q in selected(&ws.quadruples, &c.name, |q| &q.name) {
                let eta = need(&q.eta_v, "eta_V", &q.name)?;
                items.push(Item {
                    name: q.name.clone(),
                    report: check_brzezinski(&q.quad, eta).map_err(wrap)?,
                    info: None,
                });
            }
        }
        Cmd::CheckDp(_) => {
            for s in selected(&ws.setups, &c.name, |s| &s.name) {
                let ev = need(&s.eta_v, "eta_V on qV", &s.name)?;
                let ew = need(&s.eta_w, "eta_V on qW", &s.name)?;
                let mut report = Report::new();
                if let Some(res) = absorb(iterate_dp(&s.setup, ev, ew), &mut report)? {
                    report.extend(res.report);
                }
                items.push(Item {
                    name: s.name.clone(),
                    report,
                    info: None,
                });
            }
        }
        Cmd::SplitIdempotent(_) => {
            for (name, m) in selected(&ws.morphisms, &c.name, |m| &m.0) {
                let sp = split_idempotent(m).map_err(|e| Malformed(format!("{name}: {e}")))?;
                let mut report = Report::new();
                let ip = sp.inj.compose(&sp.proj).expect("split shapes");
                let pi = sp.proj.compose(&sp.inj).expect("split shapes");
                report.push(Check::new("split-ip", name, first_diff(&ip, m)));
                report.push(Check::new("split-pi", name, first_diff(&pi, &Mat::identity(m.field(), sp.rank))));
                items.push(Item {
                    name: name.clone(),
                    report,
                    info: Some(json!({
                        "rank": sp.rank,
                        "inj": mat_json(&sp.inj),
                        "proj": mat_json(&sp.proj),
                    })),
                });
            }
        }
        Cmd::MineWdl(_) | Cmd::Fixtures(_) => unreachable!("handled separately"),
    }
    if let Some(n) = &c.name {
        if items.is_empty() {
            return Err(Malformed(format!("no item named {n:?} for this command")));
        }
    }
    Ok(items)
}

fn first_diff(a: &Mat, b: &Mat) -> Option<wcp_core::Witness> {
    a.first_diff(b).map(|(r, c)| wcp_core::Witness {
        input: vec![c],
        input_factors: vec!["X".into()],
        output: vec![r],
        output_factors: vec!["X".into()],
        lhs: a.get(r, c).to_string(),
        rhs: b.get(r, c).to_string(),
    })
}

fn render(command: &str, items: &[Item], as_json: bool) -> String {
    if as_json {
        let results: Vec<Value> = items
            .iter()
            .map(|it| {
                let mut v = json!({
                    "name": it.name,
                    "pass": it.report.all_pass(),
                    "report": it.report,
                });
                if let Some(info) = &it.info {
                    v["info"] = info.clone();
                }
                v
            })
            .collect();
        let doc = json!({
            "command": command,
            "pass": items.iter().all(|i| i.report.all_pass()),
            "results": results,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    for it in items {
        out.push_str(&format!("== {} ==\n", it.name));
        out.push_str(&it.report.render_text());
        if let Some(r) = it.info.as_ref().and_then(|i| i.get("rank")) {
            out.push_str(&format!("rank {r}\n"));
        }
        let failed = it.report.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", it.report.checks.len(), failed));
    }
    out
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Malformed> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Malformed(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn mine(a: &MineArgs) -> Result<bool, Malformed> {
    let field = parse_field(&a.field)?;
    let Field::Prime(p) = field else {
        return Err(Malformed("--field: the miner needs a prime field".into()));
    };
    let (s, t) = a
        .dims
        .split_once(',')
        .and_then(|(s, t)| Some((s.trim().parse().ok()?, t.trim().parse().ok()?)))
        .ok_or_else(|| Malformed(format!("--dims: expected s,t, found {:?}", a.dims)))?;
    let cfg = MinerConfig {
        p,
        dims: (s, t),
        budget: a.budget,
        seed: a.seed,
        exhaustive: a.exhaustive,
        family: match a.family {
            Family::Diagonal => AlgebraFamily::Diagonal,
            Family::Catalog => AlgebraFamily::Catalog,
        },
    };
    let outcome = mine_wdl(&cfg).map_err(|e| Malformed(e.to_string()))?;
    let mut ws = WorkspaceJson::new(field);
    let mut ranks = Vec::new();
    for (k, law) in outcome.laws.iter().enumerate() {
        let suffix = if cfg.family == AlgebraFamily::Catalog { format!("{k}") } else { String::new() };
        let a_m = law.a.renamed(&format!("A{suffix}"));
        let b_m = law.b.renamed(&format!("B{suffix}"));
        ws.add_monoid(&a_m);
        ws.add_monoid(&b_m);
        ws.laws.push(LawJson::from_law(&format!("wdl{k}"), &a_m, &b_m, &law.lambda));
        let (q, nu) = quadruple_from_wdl(&law.a, &law.b, &law.lambda).map_err(|e| Malformed(e.to_string()))?;
        let mut qj = QuadrupleJson::from_quadruple(&format!("q{k}"), &q, Some(&nu), None);
        qj.algebra = a_m.name.clone();
        ws.quadruples.push(qj);
        ranks.push(law.nabla_rank);
    }
    let text = if a.json {
        let doc = json!({
            "command": "mine-wdl",
            "examined": outcome.examined,
            "truncated": outcome.truncated,
            "found": outcome.laws.len(),
            "nabla_ranks": ranks,
            "workspace": ws,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
    } else {
        format!("{}\n", ws.to_pretty())
    };
    emit(&text, &a.out)?;
    Ok(true)
}

fn write_fixtures(a: &FixtureArgs) -> Result<bool, Malformed> {
    let io = |e: std::io::Error| Malformed(format!("cannot write into {}: {e}", a.out.display()));
    std::fs::create_dir_all(&a.out).map_err(io)?;
    for (name, t) in fixtures::triples() {
        let mut ws = WorkspaceJson::new(t.a.field());
        for m in [&t.a, &t.b, &t.c] {
            ws.add_monoid(m);
        }
        ws.triples.push(TripleJson::from_triple(name, &t));
        let file = a.out.join(format!("{}.json", name.to_lowercase().replace('-', "_")));
        std::fs::write(file, ws.to_pretty() + "\n").map_err(io)?;
    }
    for f in fixtures::quadruples() {
        let mut ws = WorkspaceJson::new(f.quad.field());
        ws.add_monoid(&f.quad.algebra);
        ws.quadruples.push(QuadrupleJson::from_quadruple(f.name, &f.quad, Some(&f.nu), None));
        let file = a.out.join(format!("{}.json", f.name.to_lowercase().replace('-', "_")));
        std::fs::write(file, ws.to_pretty() + "\n").map_err(io)?;
    }
    let save = |name: &str, ws: &WorkspaceJson| std::fs::write(a.out.join(name), ws.to_pretty() + "\n").map_err(io);

    let f = fixtures::corrupted_skew_group();
    let mut ws = WorkspaceJson::new(f.quad.field());
    ws.add_monoid(&f.quad.algebra);
    ws.quadruples.push(QuadrupleJson::from_quadruple(f.name, &f.quad, Some(&f.nu), None));
    save("corrupted.json", &ws)?;

    let (s, eta_v, eta_w) = fixtures::skew_group_dp();
    let mut ws = WorkspaceJson::new(s.field());
    ws.add_monoid(&s.qv.algebra);
    for (name, q, eta) in [("qV", &s.qv, &eta_v), ("qW", &s.qw, &eta_w)] {
        let nu = q.algebra.unit.tensor(eta);
        ws.quadruples.push(QuadrupleJson::from_quadruple(name, q, Some(&nu), Some(eta)));
    }
    ws.setups.push(SetupJson {
        name: "dp".into(),
        qv: "qV".into(),
        qw: "qW".into(),
        delta: None,
        tau: (&s.tau.mat).into(),
    });
    save("skew_group_dp.json", &ws)?;

    let field = Field::Prime(2);
    let (am, bm) = (diagonal(field, "A", 2), diagonal(field, "B", 2));
    let mut ws = WorkspaceJson::new(field);
    ws.add_monoid(&am);
    ws.add_monoid(&bm);
    let mut flip_law = LawJson::from_law("flip", &am, &bm, &flip(&am, &bm));
    flip_law.tau = Some(MatrixJson::from(&am.unit.tensor(&bm.unit).mat).entries);
    flip_law.v = Some(MatrixJson::from(&tensor_unit_mul(&am, &bm)));
    ws.laws.push(flip_law);
    ws.laws.push(LawJson::from_law("weak", &am, &bm, &fixtures::diagonal_weak_law(&am, &bm)));
    save("laws_gf2.json", &ws)?;

    let mut ws = WorkspaceJson::new(Field::Rationals);
    let e = Mat::from_i64(Field::Rationals, 3, 3, &[1, 1, 0, 0, 0, 0, 0, 0, 1]).expect("3x3");
    let half = Mat::from_scalars(
        Field::Rationals,
        2,
        2,
        ["1/2", "1/2", "1/2", "1/2"].iter().map(|t| Field::Rationals.parse(t).expect("rational")).collect(),
    )
    .expect("2x2");
    ws.morphisms.push(MorphismJson {
        name: "projection".into(),
        matrix: (&e).into(),
    });
    ws.morphisms.push(MorphismJson {
        name: "average".into(),
        matrix: (&half).into(),
    });
    save("idempotents.json", &ws)?;
    Ok(true)
}

/// `η_A⊗μ_B`, the wreath multiplication of a distributive law.
fn tensor_unit_mul(a: &MonoidData, b: &MonoidData) -> Mat {
    a.unit.tensor(&b.mul).mat
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::CheckQuadruple(_) => "check-quadruple",
        Cmd::BuildWcp(_) => "build-wcp",
        Cmd::CheckPreunit(_) => "check-preunit",
        Cmd::CheckLink(_) => "check-link",
        Cmd::CheckTwisting(_) => "check-twisting",
        Cmd::Iterate(_) => "iterate",
        Cmd::IteratedPreunit(_) => "iterated-preunit",
        Cmd::Iso(_) => "iso",
        Cmd::CheckWreath(_) => "check-wreath",
        Cmd::CheckDl(_) => "check-dl",
        Cmd::CheckWdl(_) => "check-wdl",
        Cmd::CheckBrz(_) => "check-brz",
        Cmd::CheckDp(_) => "check-dp",
        Cmd::MineWdl(_) => "mine-wdl",
        Cmd::SplitIdempotent(_) => "split-idempotent",
        Cmd::Fixtures(_) => "fixtures",
    }
}

fn run(cli: Cli) -> Result<bool, Malformed> {
    let common = match &cli.cmd {
        Cmd::MineWdl(a) => return mine(a),
        Cmd::Fixtures(a) => return write_fixtures(a),
        Cmd::CheckQuadruple(c)
        | Cmd::BuildWcp(c)
        | Cmd::CheckPreunit(c)
        | Cmd::CheckLink(c)
        | Cmd::CheckTwisting(c)
        | Cmd::Iterate(c)
        | Cmd::IteratedPreunit(c)
        | Cmd::Iso(c)
        | Cmd::CheckWreath(c)
        | Cmd::CheckDl(c)
        | Cmd::CheckWdl(c)
        | Cmd::CheckBrz(c)
        | Cmd::CheckDp(c)
        | Cmd::SplitIdempotent(c) => c,
    };
    let items = run_workspace(&cli.cmd, common)?;
    emit(&render(command_name(&cli.cmd), &items, common.json), &common.out)?;
    Ok(items.iter().all(|i| i.report.all_pass()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
