//! JSON encoding of matrices, monoids, quadruples, iteration setups and whole
//! workspaces. Malformed input is reported with a JSON pointer to the
//! offending value.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::examples::laws::law;
use crate::examples::triples::{LawKind, LawTriple};
use crate::fdvect::{FMor, FObj, MonoidData};
use crate::iterate::IterSetup;
use crate::kernel::{Field, Mat, Scalar};
use crate::wcp::Quadruple;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonError {
    /// RFC 6901 pointer; empty for the document root.
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{p}: {}", self.message)
    }
}

impl std::error::Error for JsonError {}

fn err(pointer: impl Into<String>, message: impl fmt::Display) -> JsonError {
    JsonError {
        pointer: pointer.into(),
        message: message.to_string(),
    }
}

type JResult<T> = std::result::Result<T, JsonError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldJson {
    Q,
    Fp { p: u64 },
}

impl FieldJson {
    pub fn resolve(&self, ptr: &str) -> JResult<Field> {
        match self {
            FieldJson::Q => Ok(Field::Rationals),
            FieldJson::Fp { p } => Field::prime(*p).map_err(|e| err(format!("{ptr}/p"), e)),
        }
    }
}

impl From<Field> for FieldJson {
    fn from(f: Field) -> FieldJson {
        match f {
            Field::Rationals => FieldJson::Q,
            Field::Prime(p) => FieldJson::Fp { p },
        }
    }
}

/// An integer, or a string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Int(i64),
    Text(String),
}

impl EntryJson {
    fn resolve(&self, field: Field, ptr: &str) -> JResult<Scalar> {
        match (self, field) {
            (EntryJson::Int(v), Field::Rationals) => Ok(field.from_i64(*v)),
            (EntryJson::Int(v), Field::Prime(p)) => u64::try_from(*v)
                .ok()
                .and_then(|v| field.residue(v))
                .ok_or_else(|| err(ptr, format!("{v} is not a residue in 0..{p}"))),
            (EntryJson::Text(t), _) => field.parse(t).map_err(|e| err(ptr, e)),
        }
    }

    fn from_scalar(s: &Scalar) -> EntryJson {
        match s {
            Scalar::Fp { value, .. } => EntryJson::Int(*value as i64),
            Scalar::Q(_) => EntryJson::Text(s.to_string()),
        }
    }
}

fn resolve_entries(es: &[EntryJson], field: Field, ptr: &str) -> JResult<Vec<Scalar>> {
    es.iter()
        .enumerate()
        .map(|(k, e)| e.resolve(field, &format!("{ptr}/{k}")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<EntryJson>,
}

impl MatrixJson {
    pub fn resolve(&self, field: Field, ptr: &str) -> JResult<Mat> {
        if self.entries.len() != self.rows * self.cols {
            return Err(err(
                format!("{ptr}/entries"),
                format!("expected {} entries, found {}", self.rows * self.cols, self.entries.len()),
            ));
        }
        let vals = resolve_entries(&self.entries, field, &format!("{ptr}/entries"))?;
        Mat::from_scalars(field, self.rows, self.cols, vals).map_err(|e| err(ptr, e))
    }

    /// Resolves and checks the shape.
    pub fn resolve_shaped(&self, field: Field, ptr: &str, rows: usize, cols: usize) -> JResult<Mat> {
        if (self.rows, self.cols) != (rows, cols) {
            return Err(err(
                ptr,
                format!("expected a {rows}×{cols} matrix, found {}×{}", self.rows, self.cols),
            ));
        }
        self.resolve(field, ptr)
    }
}

impl From<&Mat> for MatrixJson {
    fn from(m: &Mat) -> MatrixJson {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.scalars().iter().map(EntryJson::from_scalar).collect(),
        }
    }
}

fn vector(es: &[EntryJson], field: Field, ptr: &str, len: usize) -> JResult<Mat> {
    if es.len() != len {
        return Err(err(ptr, format!("expected {len} entries, found {}", es.len())));
    }
    let vals = resolve_entries(es, field, ptr)?;
    Mat::from_scalars(field, len, 1, vals).map_err(|e| err(ptr, e))
}

fn vector_json(m: &Mat) -> Vec<EntryJson> {
    m.scalars().iter().map(EntryJson::from_scalar).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidJson {
    pub name: String,
    pub dim: usize,
    pub unit: Vec<EntryJson>,
    pub mul: MatrixJson,
}

impl MonoidJson {
    pub fn resolve(&self, field: Field, ptr: &str) -> JResult<MonoidData> {
        let n = self.dim;
        let unit = vector(&self.unit, field, &format!("{ptr}/unit"), n)?;
        let mul = self.mul.resolve_shaped(field, &format!("{ptr}/mul"), n, n * n)?;
        MonoidData::new(&self.name, unit, mul).map_err(|e| err(ptr, e))
    }
}

impl From<&MonoidData> for MonoidJson {
    fn from(m: &MonoidData) -> MonoidJson {
        MonoidJson {
            name: m.name.clone(),
            dim: m.dim(),
            unit: vector_json(&m.unit.mat),
            mul: (&m.mul.mat).into(),
        }
    }
}

/// A quadruple over a named monoid. `nu` is an optional preunit `K -> A⊗V` and
/// `eta_V` an optional distinguished vector `K -> V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleJson {
    pub name: String,
    #[serde(rename = "A")]
    pub algebra: String,
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "V_name", default, skip_serializing_if = "Option::is_none")]
    pub v_name: Option<String>,
    pub psi: MatrixJson,
    pub sigma: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<EntryJson>>,
    #[serde(rename = "eta_V", default, skip_serializing_if = "Option::is_none")]
    pub eta_v: Option<Vec<EntryJson>>,
}

/// Two named quadruples with a link `Δ` (identity when omitted) and a twisting `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetupJson {
    pub name: String,
    #[serde(rename = "qV")]
    pub qv: String,
    #[serde(rename = "qW")]
    pub qw: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<MatrixJson>,
    pub tau: MatrixJson,
}

/// A law `λ: B⊗A -> A⊗B`, optionally with wreath data `tau: K -> A⊗B`, `v: B⊗B -> A⊗B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawJson {
    pub name: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub lambda: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<EntryJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<MatrixJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    Distributive,
    Weak,
}

/// Three named monoids with laws `l1: B⊗A -> A⊗B`, `l2: C⊗B -> B⊗C`, `l3: C⊗A -> A⊗C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    pub name: String,
    pub kind: KindJson,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    pub l1: MatrixJson,
    pub l2: MatrixJson,
    pub l3: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub name: String,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub monoids: Vec<MonoidJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quadruples: Vec<QuadrupleJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub setups: Vec<SetupJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub laws: Vec<LawJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub triples: Vec<TripleJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismJson>,
}

#[derive(Clone, Debug)]
pub struct NamedQuadruple {
    pub name: String,
    pub quad: Quadruple,
    pub nu: Option<FMor>,
    pub eta_v: Option<FMor>,
}

#[derive(Clone, Debug)]
pub struct NamedSetup {
    pub name: String,
    pub setup: IterSetup,
    pub nu_v: Option<FMor>,
    pub nu_w: Option<FMor>,
    pub eta_v: Option<FMor>,
    pub eta_w: Option<FMor>,
}

#[derive(Clone, Debug)]
pub struct NamedLaw {
    pub name: String,
    pub a: MonoidData,
    pub b: MonoidData,
    pub lambda: FMor,
    pub tau: Option<FMor>,
    pub v: Option<FMor>,
}

/// A resolved workspace: every name resolves and every matrix has the right shape.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub monoids: Vec<MonoidData>,
    pub quadruples: Vec<NamedQuadruple>,
    pub setups: Vec<NamedSetup>,
    pub laws: Vec<NamedLaw>,
    pub triples: Vec<(String, LawTriple)>,
    pub morphisms: Vec<(String, Mat)>,
}

fn lookup<'a, T>(items: &'a [T], name: &str, key: impl Fn(&T) -> &str, ptr: &str, what: &str) -> JResult<&'a T> {
    items
        .iter()
        .find(|x| key(x) == name)
        .ok_or_else(|| err(ptr, format!("unknown {what} {name:?}")))
}

impl WorkspaceJson {
    /// Resolves the workspace. `field` is used when the document has no field
    /// descriptor; if both are present they must agree.
    pub fn resolve(&self, field: Option<Field>) -> JResult<Workspace> {
        let own = self.field.map(|f| f.resolve("/field")).transpose()?;
        let field = match (own, field) {
            (Some(a), Some(b)) if a != b => {
                return Err(err("/field", format!("workspace is over {a} but {b} was requested")))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(err("/field", "no field given")),
        };

        let mut seen = BTreeSet::new();
        let sections: [(&str, Vec<&str>); 6] = [
            ("monoids", self.monoids.iter().map(|x| x.name.as_str()).collect()),
            ("quadruples", self.quadruples.iter().map(|x| x.name.as_str()).collect()),
            ("setups", self.setups.iter().map(|x| x.name.as_str()).collect()),
            ("laws", self.laws.iter().map(|x| x.name.as_str()).collect()),
            ("triples", self.triples.iter().map(|x| x.name.as_str()).collect()),
            ("morphisms", self.morphisms.iter().map(|x| x.name.as_str()).collect()),
        ];
        for (sec, names) in &sections {
            for (k, n) in names.iter().enumerate() {
                if !seen.insert(*n) {
                    return Err(err(format!("/{sec}/{k}/name"), format!("duplicate name {n:?}")));
                }
            }
        }

        let monoids = self
            .monoids
            .iter()
            .enumerate()
            .map(|(k, m)| m.resolve(field, &format!("/monoids/{k}")))
            .collect::<JResult<Vec<_>>>()?;
        let monoid = |name: &str, ptr: &str| lookup(&monoids, name, |m| &m.name, ptr, "monoid").cloned();

        let mut quadruples = Vec::new();
        for (k, q) in self.quadruples.iter().enumerate() {
            let ptr = format!("/quadruples/{k}");
            let alg = monoid(&q.algebra, &format!("{ptr}/A"))?;
            let (da, dv) = (alg.dim(), q.v);
            let v = FObj::named(q.v_name.as_deref().unwrap_or("V"), dv);
            let psi = q.psi.resolve_shaped(field, &format!("{ptr}/psi"), da * dv, dv * da)?;
            let sigma = q.sigma.resolve_shaped(field, &format!("{ptr}/sigma"), da * dv, dv * dv)?;
            let av = alg.obj.tensor(&v);
            let nu = q
                .nu
                .as_ref()
                .map(|e| vector(e, field, &format!("{ptr}/nu"), da * dv))
                .transpose()?
                .map(|m| FMor::new(FObj::unit(), av.clone(), m).expect("shape checked"));
            let eta_v = q
                .eta_v
                .as_ref()
                .map(|e| vector(e, field, &format!("{ptr}/eta_V"), dv))
                .transpose()?
                .map(|m| FMor::new(FObj::unit(), v.clone(), m).expect("shape checked"));
            let quad = Quadruple::new(alg, v, psi, sigma).map_err(|e| err(&ptr, e))?;
            quadruples.push(NamedQuadruple {
                name: q.name.clone(),
                quad,
                nu,
                eta_v,
            });
        }

        let mut setups = Vec::new();
        for (k, s) in self.setups.iter().enumerate() {
            let ptr = format!("/setups/{k}");
            let qv = lookup(&quadruples, &s.qv, |q| &q.name, &format!("{ptr}/qV"), "quadruple")?;
            let qw = lookup(&quadruples, &s.qw, |q| &q.name, &format!("{ptr}/qW"), "quadruple")?;
            let (dv, dw) = (qv.quad.v.dim(), qw.quad.v.dim());
            let delta = match &s.delta {
                Some(d) => d.resolve_shaped(field, &format!("{ptr}/delta"), dv * dw, dv * dw)?,
                None => Mat::identity(field, dv * dw),
            };
            let tau = s.tau.resolve_shaped(field, &format!("{ptr}/tau"), dv * dw, dw * dv)?;
            let setup = IterSetup::new(qv.quad.clone(), qw.quad.clone(), delta, tau).map_err(|e| err(&ptr, e))?;
            setups.push(NamedSetup {
                name: s.name.clone(),
                setup,
                nu_v: qv.nu.clone(),
                nu_w: qw.nu.clone(),
                eta_v: qv.eta_v.clone(),
                eta_w: qw.eta_v.clone(),
            });
        }

        let mut laws = Vec::new();
        for (k, l) in self.laws.iter().enumerate() {
            let ptr = format!("/laws/{k}");
            let a = monoid(&l.a, &format!("{ptr}/A"))?;
            let b = monoid(&l.b, &format!("{ptr}/B"))?;
            let n = a.dim() * b.dim();
            let m = l.lambda.resolve_shaped(field, &format!("{ptr}/lambda"), n, n)?;
            let lambda = law(&a, &b, m).map_err(|e| err(&ptr, e))?;
            let ab = a.obj.tensor(&b.obj);
            let tau = l
                .tau
                .as_ref()
                .map(|e| vector(e, field, &format!("{ptr}/tau"), n))
                .transpose()?
                .map(|m| FMor::new(FObj::unit(), ab.clone(), m).expect("shape checked"));
            let v = l
                .v
                .as_ref()
                .map(|m| m.resolve_shaped(field, &format!("{ptr}/v"), n, b.dim() * b.dim()))
                .transpose()?
                .map(|m| FMor::new(b.obj.tensor(&b.obj), ab.clone(), m).expect("shape checked"));
            laws.push(NamedLaw {
                name: l.name.clone(),
                a,
                b,
                lambda,
                tau,
                v,
            });
        }

        let mut triples = Vec::new();
        for (k, t) in self.triples.iter().enumerate() {
            let ptr = format!("/triples/{k}");
            let a = monoid(&t.a, &format!("{ptr}/A"))?;
            let b = monoid(&t.b, &format!("{ptr}/B"))?;
            let c = monoid(&t.c, &format!("{ptr}/C"))?;
            let mk = |x: &MonoidData, y: &MonoidData, m: &MatrixJson, key: &str| -> JResult<FMor> {
                let n = x.dim() * y.dim();
                let mat = m.resolve_shaped(field, &format!("{ptr}/{key}"), n, n)?;
                law(x, y, mat).map_err(|e| err(&ptr, e))
            };
            let triple = LawTriple {
                kind: match t.kind {
                    KindJson::Distributive => LawKind::Distributive,
                    KindJson::Weak => LawKind::Weak,
                },
                l1: mk(&a, &b, &t.l1, "l1")?,
                l2: mk(&b, &c, &t.l2, "l2")?,
                l3: mk(&a, &c, &t.l3, "l3")?,
                a,
                b,
                c,
            };
            triples.push((t.name.clone(), triple));
        }

        let morphisms = self
            .morphisms
            .iter()
            .enumerate()
            .map(|(k, m)| Ok((m.name.clone(), m.matrix.resolve(field, &format!("/morphisms/{k}/matrix"))?)))
            .collect::<JResult<Vec<_>>>()?;

        Ok(Workspace {
            field,
            monoids,
            quadruples,
            setups,
            laws,
            triples,
            morphisms,
        })
    }
}

/// Parses and resolves a workspace document.
pub fn parse_workspace(text: &str, field: Option<Field>) -> JResult<Workspace> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: WorkspaceJson = serde_path_to_error::deserialize(de).map_err(|e| {
        use serde_path_to_error::Segment;
        let mut pointer = String::new();
        for seg in e.path().iter() {
            match seg {
                Segment::Seq { index } => pointer.push_str(&format!("/{index}")),
                Segment::Map { key } => pointer.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
                Segment::Enum { .. } | Segment::Unknown => {}
            }
        }
        err(pointer, e.inner())
    })?;
    raw.resolve(field)
}

impl QuadrupleJson {
    pub fn from_quadruple(name: &str, q: &Quadruple, nu: Option<&FMor>, eta_v: Option<&FMor>) -> QuadrupleJson {
        let v_name = q.v.names().join("⊗");
        QuadrupleJson {
            name: name.to_string(),
            algebra: q.algebra.name.clone(),
            v: q.v.dim(),
            v_name: (v_name != "V").then_some(v_name),
            psi: (&q.psi.mat).into(),
            sigma: (&q.sigma.mat).into(),
            nu: nu.map(|n| vector_json(&n.mat)),
            eta_v: eta_v.map(|e| vector_json(&e.mat)),
        }
    }
}

impl LawJson {
    pub fn from_law(name: &str, a: &MonoidData, b: &MonoidData, lambda: &FMor) -> LawJson {
        LawJson {
            name: name.to_string(),
            a: a.name.clone(),
            b: b.name.clone(),
            lambda: (&lambda.mat).into(),
            tau: None,
            v: None,
        }
    }
}

impl TripleJson {
    pub fn from_triple(name: &str, t: &LawTriple) -> TripleJson {
        TripleJson {
            name: name.to_string(),
            kind: match t.kind {
                LawKind::Distributive => KindJson::Distributive,
                LawKind::Weak => KindJson::Weak,
            },
            a: t.a.name.clone(),
            b: t.b.name.clone(),
            c: t.c.name.clone(),
            l1: (&t.l1.mat).into(),
            l2: (&t.l2.mat).into(),
            l3: (&t.l3.mat).into(),
        }
    }
}

impl WorkspaceJson {
    pub fn new(field: Field) -> WorkspaceJson {
        WorkspaceJson {
            field: Some(field.into()),
            monoids: Vec::new(),
            quadruples: Vec::new(),
            setups: Vec::new(),
            laws: Vec::new(),
            triples: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    /// Adds a monoid unless one with the same name is already present.
    pub fn add_monoid(&mut self, m: &MonoidData) {
        if !self.monoids.iter().any(|x| x.name == m.name) {
            self.monoids.push(m.into());
        }
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
