//! JSON and CSV encodings. Exact values travel as strings (`"p/q"`); Gaussian
//! values as `{"re": .., "im": ..}`. Every top-level JSON document carries a
//! versioned `schema` field.

use anyhow::{anyhow, bail, Context, Result};
use powtrip_core::curve::{Curve, CurveId, Point};
use powtrip_core::family::FamilyPoint;
use powtrip_core::octic::EulerQuad;
use powtrip_core::pell::PellSolution;
use powtrip_core::report::ProofReport;
use powtrip_core::triple::{FailureKind, RegularTriple, SexticForm, TaxicabHit, Verdict};
use powtrip_core::{Field, GaussianRational, KthRoot, Rational};
use serde_json::{json, Map, Value};

use crate::search::PairHit;

pub const TRIPLE_SCHEMA: &str = "powtrip.triple/1";
pub const FAMILY_SCHEMA: &str = "powtrip.family/1";
pub const VERIFY_SCHEMA: &str = "powtrip.verify/1";
pub const CONSTRUCT_SCHEMA: &str = "powtrip.construct/1";
pub const PROOF_SCHEMA: &str = "powtrip.proof/1";
pub const CURVE_SCHEMA: &str = "powtrip.curve/1";
pub const SEARCH_RS_SCHEMA: &str = "powtrip.search-rs/1";
pub const PELL_SCHEMA: &str = "powtrip.pell/1";
pub const TAXICAB_SCHEMA: &str = "powtrip.taxicab/1";
pub const GAUSSIAN_SCHEMA: &str = "powtrip.gaussian/1";
pub const EULER_SCHEMA: &str = "powtrip.euler-octic/1";

/// A field element with a JSON and CSV spelling.
pub trait Scalar: Field + KthRoot {
    const FIELD: &'static str;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    /// `"+"`, `"-"` or `"0"` where the field is ordered.
    fn sign(&self) -> Option<&'static str>;
    fn to_cell(&self) -> String {
        self.to_string()
    }
}

impl Scalar for Rational {
    const FIELD: &'static str = "Q";

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.trim().parse().map_err(|e| anyhow!("{e}")),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse().map_err(|e| anyhow!("{e}")),
            other => bail!("expected an exact rational (string or integer), got {other}"),
        }
    }

    fn sign(&self) -> Option<&'static str> {
        Some(if self.is_positive() {
            "+"
        } else if self.is_negative() {
            "-"
        } else {
            "0"
        })
    }
}

impl Scalar for GaussianRational {
    const FIELD: &'static str = "Q(i)";

    fn to_json(&self) -> Value {
        json!({ "re": self.re.to_string(), "im": self.im.to_string() })
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(m) => {
                let part = |key: &str| m.get(key).map(Rational::from_json).transpose();
                Ok(GaussianRational::new(part("re")?.unwrap_or_else(Rational::zero), part("im")?.unwrap_or_else(Rational::zero)))
            }
            Value::String(s) => s.trim().parse().map_err(|e| anyhow!("{e}")),
            other => Ok(GaussianRational::from_rational(Rational::from_json(other)?)),
        }
    }

    fn sign(&self) -> Option<&'static str> {
        None
    }
}

/// Whether a value can only be read as a Gaussian rational.
pub fn looks_gaussian(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.contains_key("re") || m.contains_key("im"),
        Value::String(s) => s.trim().ends_with('i'),
        _ => false,
    }
}

pub fn triple_json<F: Scalar>(t: &RegularTriple<F>) -> Value {
    let elements = t.elements();
    let signs = elements.iter().map(|e| e.sign()).collect::<Option<Vec<_>>>();
    let witnesses: Vec<Value> = [[0, 1], [0, 2], [1, 2]]
        .iter()
        .zip(t.witnesses())
        .map(|(pair, root)| json!({ "pair": pair, "root": root.to_json() }))
        .collect();
    json!({
        "schema": TRIPLE_SCHEMA,
        "field": F::FIELD,
        "k": t.power(),
        "half_power": t.half_power,
        "r": t.r.to_json(),
        "s": t.s.to_json(),
        "t": t.t.to_json(),
        "a": t.a.to_json(),
        "b": t.b.to_json(),
        "c": t.c.to_json(),
        "witnesses": witnesses,
        "regular": t.is_valid(),
        "signs": signs,
    })
}

pub fn family_json(p: &FamilyPoint) -> Value {
    let params: Map<String, Value> = p
        .family
        .param_names()
        .iter()
        .zip(&p.params)
        .map(|(name, v)| (name.to_string(), v.to_json()))
        .collect();
    json!({
        "schema": FAMILY_SCHEMA,
        "family": p.family.name(),
        "params": params,
        "triple": triple_json(&p.triple),
    })
}

/// A tuple to verify, read from JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum TupleInput {
    Rational { k: u32, elements: Vec<Rational> },
    Gaussian { k: u32, elements: Vec<GaussianRational> },
}

/// Accepts a triple record, a family record, or `{"k": .., "elements": [..]}`.
pub fn parse_tuple_input(doc: &Value) -> Result<TupleInput> {
    if let Some(inner) = doc.get("triple") {
        return parse_tuple_input(inner);
    }
    let k = doc
        .get("k")
        .and_then(Value::as_u64)
        .context("record lacks an integer \"k\" (the power)")?;
    let k = u32::try_from(k).context("power out of range")?;
    let raw: Vec<Value> = match doc.get("elements") {
        Some(Value::Array(items)) => items.clone(),
        Some(_) => bail!("\"elements\" must be an array"),
        None => ["a", "b", "c"]
            .iter()
            .map(|key| doc.get(*key).cloned().with_context(|| format!("record lacks \"{key}\"")))
            .collect::<Result<_>>()?,
    };
    let gaussian = doc.get("field").and_then(Value::as_str) == Some(GaussianRational::FIELD) || raw.iter().any(looks_gaussian);
    Ok(if gaussian {
        TupleInput::Gaussian { k, elements: raw.iter().map(GaussianRational::from_json).collect::<Result<_>>()? }
    } else {
        TupleInput::Rational { k, elements: raw.iter().map(Rational::from_json).collect::<Result<_>>()? }
    })
}

fn failure_kind(kind: FailureKind) -> &'static str {
    match kind {
        FailureKind::NotAPower => "not-a-power",
        FailureKind::ZeroWitness => "zero-witness",
    }
}

pub fn verdict_json<F: Scalar>(elements: &[F], k: u32, verdict: &Verdict<F>) -> Value {
    let (witnesses, failures): (Vec<Value>, Vec<Value>) = match verdict {
        Verdict::Verified(t) => (
            t.witnesses
                .iter()
                .map(|((i, j), root)| json!({ "pair": [i, j], "root": root.to_json() }))
                .collect(),
            Vec::new(),
        ),
        Verdict::Failed(f) => (
            Vec::new(),
            f.iter()
                .map(|p| json!({ "pair": [p.i, p.j], "value": p.value.to_json(), "kind": failure_kind(p.kind) }))
                .collect(),
        ),
    };
    json!({
        "schema": VERIFY_SCHEMA,
        "field": F::FIELD,
        "k": k,
        "elements": elements.iter().map(Scalar::to_json).collect::<Vec<_>>(),
        "verified": verdict.is_verified(),
        "witnesses": witnesses,
        "failures": failures,
    })
}

/// Rows `i, j, value, root, status` with `value = a_i a_j + 1`.
pub fn verdict_rows<F: Scalar>(elements: &[F], verdict: &Verdict<F>) -> Vec<Vec<String>> {
    let value = |i: usize, j: usize| (elements[i].clone() * &elements[j] + F::one()).to_cell();
    match verdict {
        Verdict::Verified(t) => t
            .witnesses
            .iter()
            .map(|((i, j), root)| vec![i.to_string(), j.to_string(), value(*i, *j), root.to_cell(), "ok".into()])
            .collect(),
        Verdict::Failed(f) => f
            .iter()
            .map(|p| vec![p.i.to_string(), p.j.to_string(), p.value.to_cell(), String::new(), failure_kind(p.kind).into()])
            .collect(),
    }
}

pub fn report_json(report: &ProofReport) -> Value {
    json!({
        "subject": report.subject,
        "checks": report.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
    })
}

pub fn point_json<F: Scalar>(p: &Point<F>) -> Value {
    match p {
        Point::Infinity => json!("infinity"),
        Point::Affine { x, y } => json!({ "x": x.to_json(), "y": y.to_json() }),
    }
}

pub fn curve_json<F: Scalar>(id: CurveId, params: &[F], curve: &Curve<F>) -> Value {
    let params: Map<String, Value> =
        id.param_names().iter().zip(params).map(|(name, v)| (name.to_string(), v.to_json())).collect();
    json!({
        "schema": CURVE_SCHEMA,
        "id": id.name(),
        "field": F::FIELD,
        "params": params,
        "coefficients": {
            "a1": curve.a1.to_json(),
            "a2": curve.a2.to_json(),
            "a3": curve.a3.to_json(),
            "a4": curve.a4.to_json(),
            "a6": curve.a6.to_json(),
        },
        "discriminant": curve.discriminant().to_json(),
        "y_scaling": id.scaling().y_factor,
    })
}

pub fn pair_hit_json(h: &PairHit) -> Value {
    json!({
        "r": h.r,
        "s": h.s,
        "t": h.t.to_json(),
        "integral_t": h.integral_t(),
        "triple": triple_json(&h.triple),
    })
}

pub const PAIR_HIT_HEADER: &[&str] = &["r", "s", "t", "integral_t", "a", "b", "c"];

pub fn pair_hit_row(h: &PairHit) -> Vec<String> {
    let t = &h.triple;
    vec![h.r.to_string(), h.s.to_string(), h.t.to_cell(), h.integral_t().to_string(), t.a.to_cell(), t.b.to_cell(), t.c.to_cell()]
}

pub fn sextic_form_json(f: &SexticForm) -> Value {
    json!({
        "p": f.p,
        "m": f.m.to_string(),
        "q": f.q,
        "n": f.n.to_string(),
        "h": f.h.to_json(),
        "text": f.to_string(),
        "holds": f.holds(),
    })
}

pub fn taxicab_json(h: &TaxicabHit, sextic: Option<&SexticForm>, triples: &[RegularTriple<Rational>]) -> Value {
    json!({
        "x": h.x,
        "y": h.y,
        "z": h.z,
        "w": h.w,
        "k": h.k,
        "sum": h.sum().to_string(),
        "square_product": h.square_product,
        "sqrt_witness": h.sqrt_witness.map(|w| w.to_string()),
        "sextic_form": sextic.map(sextic_form_json),
        "triples": triples.iter().map(triple_json).collect::<Vec<_>>(),
    })
}

pub const TAXICAB_HEADER: &[&str] = &["x", "y", "z", "w", "k", "sum", "square_product", "sqrt_witness"];

pub fn taxicab_row(h: &TaxicabHit) -> Vec<String> {
    vec![
        h.x.to_string(),
        h.y.to_string(),
        h.z.to_string(),
        h.w.to_string(),
        h.k.to_string(),
        h.sum().to_string(),
        h.square_product.to_string(),
        h.sqrt_witness.map(|w| w.to_string()).unwrap_or_default(),
    ]
}

pub fn pell_json(p: &PellSolution, digits: usize) -> Value {
    json!({ "index": p.index, "p": p.p.to_string(), "r": p.r.to_string(), "ratio": p.ratio().to_decimal(digits) })
}

pub const PELL_HEADER: &[&str] = &["index", "p", "r", "ratio"];

pub fn pell_row(p: &PellSolution, digits: usize) -> Vec<String> {
    vec![p.index.to_string(), p.p.to_string(), p.r.to_string(), p.ratio().to_decimal(digits)]
}

pub fn euler_json(a: &Rational, b: &Rational, q: &EulerQuad) -> Value {
    json!({
        "a": a.to_json(),
        "b": b.to_json(),
        "X": q.x.to_json(),
        "Y": q.y.to_json(),
        "Z": q.z.to_json(),
        "W": q.w.to_json(),
        "holds": q.holds(),
        "degenerate": q.degenerate,
        "square_product": q.square_product(),
    })
}

pub fn triple_header(family_params: &[&str]) -> Vec<String> {
    let mut header: Vec<String> = family_params.iter().map(|s| s.to_string()).collect();
    header.extend(["r", "s", "t", "a", "b", "c"].map(String::from));
    header
}

pub fn triple_row<F: Scalar>(prefix: Vec<String>, t: &RegularTriple<F>) -> Vec<String> {
    let mut row = prefix;
    row.extend([&t.r, &t.s, &t.t, &t.a, &t.b, &t.c].map(Scalar::to_cell));
    row
}

/// Comma-separated lines with a header. Cells never contain commas.
pub fn csv<S: AsRef<str>>(header: &[S], rows: &[Vec<String>]) -> String {
    let mut out = header.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
