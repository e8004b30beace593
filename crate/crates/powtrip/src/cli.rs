//! The `powtrip` command line. Exit codes: 0 success or verified, 1 a check
//! came out false, 2 usage or input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use powtrip_core::curve::{Curve, CurveId, Point};
use powtrip_core::family::{family_point, symbolic_verify, FamilyId, FamilyPoint};
use powtrip_core::gaussian_scan::{known_triples, match_known, scan, verify_with_symmetries};
use powtrip_core::octic::{euler_quartic_homogeneous, euler_reduction_check};
use powtrip_core::pell::pell_sequence;
use powtrip_core::triple::{construct_regular, sextic_form_check, taxicab_triples, verify_tuple, Verdict};
use powtrip_core::{Error as CoreError, GaussianRational, KthRoot, Rational};
use serde_json::{json, Value};

use crate::format::{self, Scalar};
use crate::search::{search_integer_pairs_with, taxicab_search_with, SearchOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "powtrip",
    version,
    about = "Construct, verify and search for higher-power rational Diophantine triples",
    long_about = "Construct, verify and search for higher-power rational Diophantine triples.\n\n\
        Values are exact: integers, p/q, and Gaussian rationals such as 28+4i or 3/2-5/4i.\n\
        Exit codes: 0 success or verified, 1 a check came out false, 2 usage or input error."
)]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// JSON output (the default)
    #[arg(long, global = true)]
    pub json: bool,
    /// CSV output with a header row, where the subcommand has tabular output
    #[arg(long, global = true)]
    pub csv: bool,
    /// Human-readable text output
    #[arg(long, global = true)]
    pub text: bool,
    /// Run metadata (timings, skipped parameters) on standard error
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Worker threads (defaults to all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    /// Progress file; an existing file for the same run is resumed
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions { threads: self.threads, checkpoint: self.checkpoint.clone() }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every a_i a_j + 1 is a k-th power
    #[command(after_help = "CSV columns: i,j,value,root,status (value = a_i a_j + 1)")]
    Verify {
        /// The power k
        #[arg(long, default_value_t = 4)]
        k: u32,
        /// Read triple, family or {"k", "elements"} records (JSON or JSON lines); "-" for stdin
        #[arg(long, conflicts_with = "values")]
        input: Option<PathBuf>,
        /// The elements
        #[arg(allow_negative_numbers = true)]
        values: Vec<String>,
    },
    /// Build the regular triple from (r, s)
    #[command(after_help = "CSV columns: r,s,t,a,b,c")]
    Construct {
        #[arg(long, allow_negative_numbers = true)]
        r: String,
        #[arg(long, allow_negative_numbers = true)]
        s: String,
        /// m for 2m-th powers
        #[arg(long, default_value_t = 2)]
        half_power: u32,
    },
    /// Evaluate a parametric family
    #[command(after_help = "Families: fam1 (u), fam2 (alpha), fam2k (k, u), fam3a (u), fam3b (u), fam4 (u).\n\
        CSV columns: the family parameters, then r,s,t,a,b,c")]
    Family {
        family: FamilyId,
        /// Parameter values in order, or NAME=VALUE
        #[arg(long = "param", allow_negative_numbers = true)]
        params: Vec<String>,
        /// NAME=FROM:TO[:STEP]; emits one JSON line per admissible value
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Prove a family's identities symbolically over Q(u)
    ProveFamily {
        /// All families when omitted
        family: Option<FamilyId>,
    },
    /// Curve arithmetic on a catalog curve
    Curve {
        /// One of E_r, fam1, fam2k, fam2, rsq, sec7, cubicZ, cubicK, alpha2
        id: CurveId,
        #[arg(long = "param", allow_negative_numbers = true)]
        params: Vec<String>,
        /// X,Y on the model, or X alone when the model has a1 = a3 = 0
        #[arg(long, allow_negative_numbers = true)]
        point: Option<String>,
        /// Read --point and print results in unscaled coordinates
        #[arg(long)]
        unscaled: bool,
        /// Multiply the point by N
        #[arg(long, allow_negative_numbers = true)]
        mul: Option<i64>,
        /// Add this point
        #[arg(long, allow_negative_numbers = true)]
        add: Option<String>,
        /// Torsion order up to 12
        #[arg(long)]
        torsion: bool,
        /// (alpha, s) of a point on E_r
        #[arg(long)]
        alpha_s: bool,
    },
    /// Integer seeds 1 < r < s < bound with rational t
    #[command(name = "search-rs", after_help = "CSV columns: r,s,t,integral_t,a,b,c")]
    SearchRs {
        #[arg(long)]
        bound: u64,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Solutions of p^2 - 3r^2 = 1
    #[command(after_help = "CSV columns: index,p,r,ratio")]
    Pell {
        #[arg(long)]
        count: usize,
        /// Decimal places of p/r
        #[arg(long, default_value_t = 11)]
        digits: usize,
    },
    /// Equal sums of two k-th powers
    #[command(after_help = "CSV columns: x,y,z,w,k,sum,square_product,sqrt_witness")]
    Taxicab {
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 3)]
        k: u32,
        /// Keep only identities with XYZW a perfect square
        #[arg(long)]
        require_square_product: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Known quartic triples over Q(i) and a scan of Gaussian seeds
    #[command(after_help = "CSV columns: r,s,t,a,b,c,known_match")]
    Gaussian {
        /// Bound on |re r| and |im r|; 0 verifies the known triples only
        #[arg(long = "box", default_value_t = 0)]
        bound: i64,
    },
    /// Euler's quartic parametrization and its reduction
    EulerOctic {
        #[arg(long, allow_negative_numbers = true)]
        a: Option<String>,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        b: String,
    },
}

/// Parses `argv`, runs the command and writes to the given streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let format = match (cli.output.json, cli.output.csv, cli.output.text) {
        (_, false, false) => Format::Json,
        (false, true, false) => Format::Csv,
        (false, false, true) => Format::Text,
        _ => {
            let _ = writeln!(err, "error: choose at most one of --json, --csv, --text");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx { format, verbose: cli.output.verbose, out, err };
    match dispatch(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

struct Ctx<'a> {
    format: Format,
    verbose: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&mut self, v: &Value) -> Result<()> {
        writeln!(self.out, "{}", serde_json::to_string_pretty(v)?)?;
        Ok(())
    }

    fn json_line(&mut self, v: &Value) -> Result<()> {
        writeln!(self.out, "{}", serde_json::to_string(v)?)?;
        Ok(())
    }

    fn csv<S: AsRef<str>>(&mut self, header: &[S], rows: &[Vec<String>]) -> Result<()> {
        write!(self.out, "{}", format::csv(header, rows))?;
        Ok(())
    }

    fn text(&mut self, s: impl std::fmt::Display) -> Result<()> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn note(&mut self, s: impl std::fmt::Display) {
        if self.verbose {
            let _ = writeln!(self.err, "{s}");
        }
    }

    fn no_csv(&self, command: &str) -> Result<()> {
        if self.format == Format::Csv {
            bail!("{command} has no CSV form; use --json or --text");
        }
        Ok(())
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse().with_context(|| format!("not an exact rational: {s:?}"))
}

fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    s.trim().parse().with_context(|| format!("not a Gaussian rational: {s:?}"))
}

fn is_gaussian_text(s: &str) -> bool {
    s.trim().ends_with('i')
}

fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        Command::Verify { k, input, values } => cmd_verify(ctx, *k, input.as_ref(), values),
        Command::Construct { r, s, half_power } => {
            if is_gaussian_text(r) || is_gaussian_text(s) {
                cmd_construct(ctx, parse_gaussian(r)?, parse_gaussian(s)?, *half_power)
            } else {
                cmd_construct(ctx, parse_rational(r)?, parse_rational(s)?, *half_power)
            }
        }
        Command::Family { family, params, sweep } => cmd_family(ctx, *family, params, sweep.as_deref()),
        Command::ProveFamily { family } => cmd_prove_family(ctx, *family),
        Command::Curve { id, params, point, unscaled, mul, add, torsion, alpha_s } => cmd_curve(
            ctx,
            CurveRequest {
                id: *id,
                params,
                point: point.as_deref(),
                unscaled: *unscaled,
                mul: *mul,
                add: add.as_deref(),
                torsion: *torsion,
                alpha_s: *alpha_s,
            },
        ),
        Command::SearchRs { bound, search } => cmd_search_rs(ctx, *bound, &search.options()),
        Command::Pell { count, digits } => cmd_pell(ctx, *count, *digits),
        Command::Taxicab { bound, k, require_square_product, search } => {
            cmd_taxicab(ctx, *bound, *k, *require_square_product, &search.options())
        }
        Command::Gaussian { bound } => cmd_gaussian(ctx, *bound),
        Command::EulerOctic { a, b } => cmd_euler(ctx, a.as_deref(), b),
    }
}

fn verify_one<F: Scalar>(ctx: &mut Ctx, elements: &[F], k: u32, stream: bool) -> Result<bool> {
    let verdict = verify_tuple(elements, k)?;
    match ctx.format {
        Format::Json if stream => ctx.json_line(&format::verdict_json(elements, k, &verdict))?,
        Format::Json => ctx.json(&format::verdict_json(elements, k, &verdict))?,
        Format::Csv => ctx.csv(&["i", "j", "value", "root", "status"], &format::verdict_rows(elements, &verdict))?,
        Format::Text => {
            let set = elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ");
            match &verdict {
                Verdict::Verified(t) => {
                    ctx.text(format_args!("verified: {{{set}}} at power {k}"))?;
                    for ((i, j), root) in &t.witnesses {
                        ctx.text(format_args!("  a{i} a{j} + 1 = ({root})^{k}"))?;
                    }
                }
                Verdict::Failed(f) => {
                    ctx.text(format_args!("not verified: {{{set}}} at power {k}"))?;
                    for p in f {
                        ctx.text(format_args!("  a{} a{} + 1 = {} fails ({:?})", p.i, p.j, p.value, p.kind))?;
                    }
                }
            }
        }
    }
    Ok(verdict.is_verified())
}

fn cmd_verify(ctx: &mut Ctx, k: u32, input: Option<&PathBuf>, values: &[String]) -> Result<i32> {
    let Some(path) = input else {
        if values.len() < 2 {
            bail!("give at least two elements, or --input");
        }
        let ok = if values.iter().any(|v| is_gaussian_text(v)) {
            let elements = values.iter().map(|v| parse_gaussian(v)).collect::<Result<Vec<_>>>()?;
            verify_one(ctx, &elements, k, false)?
        } else {
            let elements = values.iter().map(|v| parse_rational(v)).collect::<Result<Vec<_>>>()?;
            verify_one(ctx, &elements, k, false)?
        };
        return Ok(code(ok));
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let docs = serde_json::Deserializer::from_str(&text)
        .into_iter::<Value>()
        .collect::<Result<Vec<_>, _>>()
        .context("input is not JSON")?;
    if docs.is_empty() {
        bail!("no records in input");
    }
    let stream = docs.len() > 1;
    let mut all = true;
    for doc in &docs {
        all &= match format::parse_tuple_input(doc)? {
            format::TupleInput::Rational { k, elements } => verify_one(ctx, &elements, k, stream)?,
            format::TupleInput::Gaussian { k, elements } => verify_one(ctx, &elements, k, stream)?,
        };
    }
    Ok(code(all))
}

fn cmd_construct<F: Scalar>(ctx: &mut Ctx, r: F, s: F, half_power: u32) -> Result<i32> {
    let Some(triple) = construct_regular(&r, &s, half_power)? else {
        match ctx.format {
            Format::Json => ctx.json(&json!({
                "schema": format::CONSTRUCT_SCHEMA,
                "field": F::FIELD,
                "r": r.to_json(),
                "s": s.to_json(),
                "half_power": half_power,
                "found": false,
            }))?,
            Format::Csv => ctx.csv(&["r", "s", "t", "a", "b", "c"], &[])?,
            Format::Text => ctx.text(format_args!("no triple: (r^{half_power} s^{half_power} - 1)/(s^{half_power} - r^{half_power}) is not a {half_power}-th power"))?,
        }
        return Ok(EXIT_FALSE);
    };
    match ctx.format {
        Format::Json => ctx.json(&format::triple_json(&triple))?,
        Format::Csv => ctx.csv(&format::triple_header(&[]), &[format::triple_row(Vec::new(), &triple)])?,
        Format::Text => ctx.text(format_args!(
            "{{{}, {}, {}}} at power {} with (r, s, t) = ({}, {}, {})",
            triple.a,
            triple.b,
            triple.c,
            triple.power(),
            triple.r,
            triple.s,
            triple.t
        ))?,
    }
    Ok(code(triple.is_valid()))
}

fn family_params(id: FamilyId, raw: &[String]) -> Result<Vec<Option<Rational>>> {
    let names = id.param_names();
    let mut values: Vec<Option<Rational>> = vec![None; names.len()];
    for (pos, item) in raw.iter().enumerate() {
        let (slot, value) = match item.split_once('=') {
            Some((name, value)) => {
                let slot = names
                    .iter()
                    .position(|n| *n == name.trim())
                    .with_context(|| format!("{id} has no parameter {name:?}; expected {names:?}"))?;
                (slot, value)
            }
            None if pos < names.len() => (pos, item.as_str()),
            None => bail!("{id} takes {} parameter(s): {names:?}", names.len()),
        };
        values[slot] = Some(parse_rational(value)?);
    }
    Ok(values)
}

fn parse_sweep(id: FamilyId, spec: &str) -> Result<(usize, Vec<Rational>)> {
    let (name, range) = match spec.split_once('=') {
        Some((n, r)) => (n.trim(), r),
        None if id.param_names().len() == 1 => (id.param_names()[0], spec),
        None => bail!("--sweep needs NAME=FROM:TO[:STEP] for {id}"),
    };
    let slot = id
        .param_names()
        .iter()
        .position(|n| *n == name)
        .with_context(|| format!("{id} has no parameter {name:?}"))?;
    let parts: Vec<&str> = range.split(':').collect();
    let (from, to, step) = match parts.as_slice() {
        [a, b] => (parse_rational(a)?, parse_rational(b)?, Rational::one()),
        [a, b, c] => (parse_rational(a)?, parse_rational(b)?, parse_rational(c)?),
        _ => bail!("--sweep range must be FROM:TO[:STEP], got {range:?}"),
    };
    if !step.is_positive() {
        bail!("--sweep step must be positive");
    }
    let mut values = Vec::new();
    let mut v = from;
    while v <= to {
        values.push(v.clone());
        v = v + &step;
        if values.len() > 1_000_000 {
            bail!("--sweep range has more than a million values");
        }
    }
    Ok((slot, values))
}

fn emit_family_point(ctx: &mut Ctx, p: &FamilyPoint, stream: bool) -> Result<()> {
    match ctx.format {
        Format::Json if stream => ctx.json_line(&format::family_json(p)),
        Format::Json => ctx.json(&format::family_json(p)),
        Format::Csv => {
            let row = format::triple_row(p.params.iter().map(|v| v.to_cell()).collect(), &p.triple);
            write!(ctx.out, "{}", row.join(",") + "\n")?;
            Ok(())
        }
        Format::Text => ctx.text(p),
    }
}

fn cmd_family(ctx: &mut Ctx, id: FamilyId, raw: &[String], sweep: Option<&str>) -> Result<i32> {
    let mut params = family_params(id, raw)?;
    let names = id.param_names();
    if ctx.format == Format::Csv {
        let header = format::triple_header(names);
        write!(ctx.out, "{}", header.join(",") + "\n")?;
    }
    let Some(spec) = sweep else {
        let params = params
            .into_iter()
            .zip(names)
            .map(|(v, n)| v.with_context(|| format!("missing parameter {n}")))
            .collect::<Result<Vec<_>>>()?;
        let point = family_point(id, &params)?;
        emit_family_point(ctx, &point, false)?;
        return Ok(code(point.triple.is_valid()));
    };
    let (slot, values) = parse_sweep(id, spec)?;
    let mut all_valid = true;
    for v in values {
        params[slot] = Some(v);
        let full = params
            .iter()
            .zip(names)
            .map(|(v, n)| v.clone().with_context(|| format!("missing parameter {n}")))
            .collect::<Result<Vec<_>>>()?;
        match family_point(id, &full) {
            Ok(point) => {
                all_valid &= point.triple.is_valid();
                emit_family_point(ctx, &point, true)?;
            }
            Err(e @ (CoreError::ExcludedParameter(_) | CoreError::Degenerate(_) | CoreError::Pole)) => {
                let shown: Vec<String> = full.iter().map(|v| v.to_string()).collect();
                ctx.note(format_args!("skipped {id}({}): {e}", shown.join(", ")));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(code(all_valid))
}

fn cmd_prove_family(ctx: &mut Ctx, family: Option<FamilyId>) -> Result<i32> {
    ctx.no_csv("prove-family")?;
    let ids: Vec<FamilyId> = family.map(|f| vec![f]).unwrap_or_else(|| FamilyId::ALL.to_vec());
    let reports = ids.iter().map(|&id| symbolic_verify(id)).collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.all_passed());
    match ctx.format {
        Format::Text => {
            for r in &reports {
                ctx.text(r)?;
            }
        }
        _ => ctx.json(&json!({
            "schema": format::PROOF_SCHEMA,
            "reports": reports.iter().map(format::report_json).collect::<Vec<_>>(),
            "all_passed": ok,
        }))?,
    }
    Ok(code(ok))
}

struct CurveRequest<'a> {
    id: CurveId,
    params: &'a [String],
    point: Option<&'a str>,
    unscaled: bool,
    mul: Option<i64>,
    add: Option<&'a str>,
    torsion: bool,
    alpha_s: bool,
}

/// `y` with `y^2 = x^3 + a2 x^2 + a4 x + a6`, the nonnegative root over `Q`.
fn lift_x(curve: &Curve<Rational>, x: Rational) -> Result<Point<Rational>> {
    if !(curve.a1.is_zero() && curve.a3.is_zero()) {
        bail!("a bare x-coordinate needs a model with a1 = a3 = 0; give X,Y");
    }
    let rhs = x.pow(3) + curve.a2.clone() * &x.pow(2) + curve.a4.clone() * &x + &curve.a6;
    let y = rhs.kth_root(2).with_context(|| format!("no rational point with x = {x}"))?;
    Ok(Point::new(x, y))
}

fn parse_point(curve: &Curve<Rational>, id: CurveId, text: &str, unscaled: bool) -> Result<Point<Rational>> {
    let parts: Vec<&str> = text.split(',').collect();
    let point = match parts.as_slice() {
        [x] => lift_x(curve, parse_rational(x)?)?,
        [x, y] if unscaled => id.scaling().to_model(parse_rational(x)?, parse_rational(y)?),
        [x, y] => Point::new(parse_rational(x)?, parse_rational(y)?),
        _ => bail!("point must be X,Y or X, got {text:?}"),
    };
    if !curve.on_curve(&point) {
        bail!("point {text} is not on {id}");
    }
    Ok(point)
}

fn shown_point(id: CurveId, p: &Point<Rational>, unscaled: bool) -> Value {
    match (unscaled, id.scaling().from_model(p)) {
        (true, Some((x, y))) => format::point_json(&Point::new(x, y)),
        _ => format::point_json(p),
    }
}

fn cmd_curve(ctx: &mut Ctx, req: CurveRequest) -> Result<i32> {
    ctx.no_csv("curve")?;
    let params = req.params.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>()?;
    let curve = req.id.build(&params)?;
    let mut doc = format::curve_json(req.id, &params, &curve);
    let mut lines = vec![format!(
        "{}: y^2 + ({})xy + ({})y = x^3 + ({})x^2 + ({})x + ({})",
        req.id, curve.a1, curve.a3, curve.a2, curve.a4, curve.a6
    )];
    let needs_point = req.mul.is_some() || req.add.is_some() || req.torsion || req.alpha_s;
    let point = match req.point {
        Some(text) => Some(parse_point(&curve, req.id, text, req.unscaled)?),
        None if needs_point => bail!("this operation needs --point"),
        None => None,
    };
    if let Some(p) = &point {
        doc["point"] = shown_point(req.id, p, req.unscaled);
        lines.push(format!("P = {}", doc["point"]));
        if let Some(n) = req.mul {
            let q = curve.scalar_mul(n, p)?;
            doc["multiple"] = json!({ "n": n, "point": shown_point(req.id, &q, req.unscaled) });
            lines.push(format!("{n}P = {}", doc["multiple"]["point"]));
        }
        if let Some(text) = req.add {
            let q = parse_point(&curve, req.id, text, req.unscaled)?;
            let sum = curve.add(p, &q)?;
            doc["sum"] = json!({ "with": shown_point(req.id, &q, req.unscaled), "point": shown_point(req.id, &sum, req.unscaled) });
            lines.push(format!("P + Q = {}", doc["sum"]["point"]));
        }
        if req.torsion {
            let order = curve.torsion_order(p, 12)?;
            doc["torsion_order"] = json!(order);
            lines.push(match order {
                Some(n) => format!("P has order {n}"),
                None => "P has no torsion order up to 12".into(),
            });
        }
        if req.alpha_s {
            if req.id != CurveId::Er {
                bail!("--alpha-s applies to E_r only");
            }
            let (alpha, s) = powtrip_core::curve::er_to_alpha_s(&params[0], p)?;
            doc["alpha_s"] = json!({ "alpha": alpha.to_json(), "s": s.to_json() });
            lines.push(format!("(alpha, s) = ({alpha}, {s})"));
        }
    }
    match ctx.format {
        Format::Text => ctx.text(lines.join("\n"))?,
        _ => ctx.json(&doc)?,
    }
    Ok(EXIT_OK)
}

fn cmd_search_rs(ctx: &mut Ctx, bound: u64, opts: &SearchOptions) -> Result<i32> {
    let start = Instant::now();
    let hits = search_integer_pairs_with(bound, opts)?;
    ctx.note(format_args!("search-rs --bound {bound}: {} hits in {:?}", hits.len(), start.elapsed()));
    match ctx.format {
        Format::Json => ctx.json(&json!({
            "schema": format::SEARCH_RS_SCHEMA,
            "bound": bound,
            "hits": hits.iter().map(format::pair_hit_json).collect::<Vec<_>>(),
        }))?,
        Format::Csv => ctx.csv(format::PAIR_HIT_HEADER, &hits.iter().map(format::pair_hit_row).collect::<Vec<_>>())?,
        Format::Text => {
            for h in &hits {
                let note = if h.integral_t() { "" } else { " (t not an integer)" };
                ctx.text(format_args!("(r, s) = ({}, {}), t = {}{note}", h.r, h.s, h.t))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_pell(ctx: &mut Ctx, count: usize, digits: usize) -> Result<i32> {
    if count == 0 {
        bail!("--count must be at least 1");
    }
    let sols = pell_sequence(count);
    match ctx.format {
        Format::Json => ctx.json(&json!({
            "schema": format::PELL_SCHEMA,
            "count": count,
            "solutions": sols.iter().map(|p| format::pell_json(p, digits)).collect::<Vec<_>>(),
        }))?,
        Format::Csv => ctx.csv(format::PELL_HEADER, &sols.iter().map(|p| format::pell_row(p, digits)).collect::<Vec<_>>())?,
        Format::Text => {
            for p in &sols {
                ctx.text(format_args!("{}: p = {}, r = {}, p/r = {}", p.index, p.p, p.r, p.ratio().to_decimal(digits)))?;
            }
        }
    }
    Ok(code(sols.iter().all(|p| p.holds())))
}

fn cmd_taxicab(ctx: &mut Ctx, bound: u64, k: u32, require_square: bool, opts: &SearchOptions) -> Result<i32> {
    let start = Instant::now();
    let mut hits = taxicab_search_with(bound, k, opts)?;
    ctx.note(format_args!("taxicab --bound {bound} --k {k}: {} hits in {:?}", hits.len(), start.elapsed()));
    if require_square {
        hits.retain(|h| h.square_product);
    }
    match ctx.format {
        Format::Json => {
            let mut records = Vec::with_capacity(hits.len());
            for h in &hits {
                let sextic = if h.square_product { sextic_form_check(h) } else { None };
                let triples = if h.square_product { taxicab_triples(h)? } else { Vec::new() };
                records.push(format::taxicab_json(h, sextic.as_ref(), &triples));
            }
            ctx.json(&json!({
                "schema": format::TAXICAB_SCHEMA,
                "bound": bound,
                "k": k,
                "require_square_product": require_square,
                "hits": records,
            }))?
        }
        Format::Csv => ctx.csv(format::TAXICAB_HEADER, &hits.iter().map(format::taxicab_row).collect::<Vec<_>>())?,
        Format::Text => {
            for h in &hits {
                let tag = if h.square_product { " (square product)" } else { "" };
                ctx.text(format_args!("{h}{tag}"))?;
                if let Some(f) = sextic_form_check(h).filter(|_| h.square_product) {
                    ctx.text(format_args!("  {f}"))?;
                }
            }
        }
    }
    Ok(code(hits.iter().all(|h| h.recheck())))
}

fn cmd_gaussian(ctx: &mut Ctx, bound: i64) -> Result<i32> {
    let known = known_triples();
    let checks = known.iter().map(verify_with_symmetries).collect::<Result<Vec<_>, _>>()?;
    let hits = scan(bound)?;
    let ok = checks.iter().all(|c| c.iter().all(|&b| b));
    match ctx.format {
        Format::Json => {
            let known_json: Vec<Value> = known
                .iter()
                .zip(&checks)
                .map(|(t, c)| {
                    json!({
                        "elements": t.iter().map(Scalar::to_json).collect::<Vec<_>>(),
                        "identity": c[0],
                        "conjugate": c[1],
                        "negation": c[2],
                        "conjugate_negation": c[3],
                    })
                })
                .collect();
            let hits_json: Vec<Value> = hits
                .iter()
                .map(|h| json!({ "r": h.r.to_json(), "known_match": match_known(&h.elements()), "triple": format::triple_json(&h.triple) }))
                .collect();
            ctx.json(&json!({ "schema": format::GAUSSIAN_SCHEMA, "box": bound, "known": known_json, "hits": hits_json }))?
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = hits
                .iter()
                .map(|h| {
                    let mut row = format::triple_row(Vec::new(), &h.triple);
                    row.push(match_known(&h.elements()).map(|i| i.to_string()).unwrap_or_default());
                    row
                })
                .collect();
            ctx.csv(&["r", "s", "t", "a", "b", "c", "known_match"], &rows)?
        }
        Format::Text => {
            for (t, c) in known.iter().zip(&checks) {
                let set = t.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
                ctx.text(format_args!("({set}): identity {} conjugate {} negation {} conjugate-negation {}", c[0], c[1], c[2], c[3]))?;
            }
            for h in &hits {
                let set = h.elements().iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
                ctx.text(format_args!("r = {}: ({set})", h.r))?;
            }
        }
    }
    Ok(code(ok))
}

fn cmd_euler(ctx: &mut Ctx, a: Option<&str>, b: &str) -> Result<i32> {
    ctx.no_csv("euler-octic")?;
    let report = euler_reduction_check();
    let point = match a {
        Some(a) => {
            let (a, b) = (parse_rational(a)?, parse_rational(b)?);
            let q = euler_quartic_homogeneous(&a, &b);
            Some((a, b, q))
        }
        None => None,
    };
    match ctx.format {
        Format::Text => {
            ctx.text(&report)?;
            if let Some((a, b, q)) = &point {
                let tag = if q.degenerate { " (degenerate)" } else { "" };
                ctx.text(format_args!("(a, b) = ({a}, {b}): ({})^4 + ({})^4 = ({})^4 + ({})^4{tag}", q.x, q.y, q.z, q.w))?;
            }
        }
        _ => ctx.json(&json!({
            "schema": format::EULER_SCHEMA,
            "report": format::report_json(&report),
            "point": point.as_ref().map(|(a, b, q)| format::euler_json(a, b, q)),
        }))?,
    }
    Ok(code(report.all_passed() && point.is_none_or(|(_, _, q)| q.holds())))
}
