//! Command-line front end.

use crate::catdata::{self, VerdictKind};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::export::{self, cyc, Format, Report, Table};
use crate::modularize::{self, Elem, MChoices};
use crate::partitions::Partition;
use crate::refine;
use crate::series::{make_spec, Series, SeriesSpec};
use crate::smatrix;
use crate::verlinde::{self, Method};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;

pub const OUT_DIR_ENV: &str = "BCDMOD_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "bcdmod", version, about = "Exact data for B/C/D-series pre-modular categories at roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// C, CB, CB-, B-, BD, BD-, D
    #[arg(long)]
    pub series: Series,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
    pub format: FormatArg,
    /// output file; defaults to stdout, or a file under $BCDMOD_OUT_DIR when that is set
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(short, long)]
    pub verbose: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum MethodArg {
    Closed,
    Generic,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Γ and Γ̄
    Labels(Common),
    /// quantum dimensions on Γ
    Dims(Common),
    /// twist coefficients on Γ
    Twists(Common),
    /// transparent objects
    Transparent(Common),
    /// modular / modularizable / not_modularizable
    Verdict(Common),
    /// orbits and simple objects of the modularization
    Modularize {
        #[command(flatten)]
        common: Common,
        /// m for stabilizer-4 orbits: "all=4" or "(2,1)=1"; repeatable
        #[arg(long = "m-choice")]
        m_choice: Vec<String>,
    },
    /// S-matrix (C series)
    Smatrix(Common),
    /// fusion rules from the S-matrix (C series)
    Fusion(Common),
    /// genus-g Verlinde dimensions
    Verlinde {
        #[command(flatten)]
        common: Common,
        /// a genus or a range such as 0..6
        #[arg(long, default_value = "0..4")]
        genus: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long = "m-choice")]
        m_choice: Vec<String>,
        /// D̃ only: print d_g = A + Σ m^g B instead of fixing m
        #[arg(long)]
        symbolic: bool,
    },
    /// spin / cohomological refinements (C series)
    Refine(Common),
    /// run every identity that applies to the category
    Check(Common),
    /// level-rank dual category and label map
    Dual(Common),
}

pub fn parse_m_choices(items: &[String]) -> Result<MChoices> {
    let mut m = MChoices::default();
    for it in items {
        let (lhs, rhs) =
            it.rsplit_once('=').ok_or_else(|| Error::InvalidMChoice(format!("expected λ=m or all=m, got {it}")))?;
        let v: u8 = rhs.trim().parse().map_err(|_| Error::InvalidMChoice(format!("bad m in {it}")))?;
        if v != 1 && v != 4 {
            return Err(Error::InvalidMChoice(format!("m must be 1 or 4, got {v}")));
        }
        if lhs.trim() == "all" {
            m.default = Some(v);
        } else {
            m.per.insert(lhs.trim().parse::<Partition>()?, v);
        }
    }
    Ok(m)
}

pub fn parse_genus(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::InvalidParameters(format!("bad genus range {s}"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        if a > b {
            return Err(bad());
        }
        Ok((a..=b).collect())
    } else {
        Ok(vec![s.trim().parse().map_err(|_| bad())?])
    }
}

/// Exit codes: 0 ok, 1 usage, 2 computation error, 3 failed identity.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParameters(_) | Error::InvalidMChoice(_) | Error::InvalidGenerator(_) => 1,
        Error::Consistency(_) | Error::NonIntegral(_) => 3,
        _ => 2,
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Labels(x)
        | Command::Dims(x)
        | Command::Twists(x)
        | Command::Transparent(x)
        | Command::Verdict(x)
        | Command::Smatrix(x)
        | Command::Fusion(x)
        | Command::Refine(x)
        | Command::Check(x)
        | Command::Dual(x) => x,
        Command::Modularize { common, .. } | Command::Verlinde { common, .. } => common,
    }
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Labels(_) => "labels",
        Command::Dims(_) => "dims",
        Command::Twists(_) => "twists",
        Command::Transparent(_) => "transparent",
        Command::Verdict(_) => "verdict",
        Command::Modularize { .. } => "modularize",
        Command::Smatrix(_) => "smatrix",
        Command::Fusion(_) => "fusion",
        Command::Verlinde { .. } => "verlinde",
        Command::Refine(_) => "refine",
        Command::Check(_) => "check",
        Command::Dual(_) => "dual",
    }
}

/// Runs a parsed command and writes its output; returns the exit code.
pub fn execute(cmd: &Command) -> Result<i32> {
    let c = common(cmd);
    let spec = make_spec(c.series, c.n, c.k)?;
    let (report, code) = match cmd {
        Command::Labels(_) => (labels(&spec), 0),
        Command::Dims(_) => (dims(&spec)?, 0),
        Command::Twists(_) => (twists(&spec)?, 0),
        Command::Transparent(_) => (transparent(&spec)?, 0),
        Command::Verdict(_) => (verdict(&spec)?, 0),
        Command::Modularize { m_choice, .. } => (modularize(&spec, &parse_m_choices(m_choice)?)?, 0),
        Command::Smatrix(_) => (smatrix_report(&spec)?, 0),
        Command::Fusion(_) => (fusion(&spec)?, 0),
        Command::Verlinde { genus, method, m_choice, symbolic, .. } => {
            (verlinde_report(&spec, &parse_genus(genus)?, *method, &parse_m_choices(m_choice)?, *symbolic)?, 0)
        }
        Command::Refine(_) => (refine_report(&spec)?, 0),
        Command::Check(_) => {
            let checks = check(&spec);
            let ok = checks.iter().all(|x| x.pass);
            for x in checks.iter().filter(|x| !x.pass) {
                eprintln!("FAILED {}: {}", x.name, x.detail);
            }
            (check_report(&spec, &checks), if ok { 0 } else { 3 })
        }
        Command::Dual(_) => (dual(&spec)?, 0),
    };
    let format: Format = c.format.into();
    let path = c.output.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV).map(|d| {
            let ext = match format {
                Format::Json => "json",
                Format::Csv => "csv",
                Format::Pretty => "txt",
            };
            let tag = spec.display_series().replace('-', "neg");
            PathBuf::from(d).join(format!("{}_{}_{}_{}.{ext}", name(cmd), tag, c.n, c.k))
        })
    });
    export::export(&report, format, path.as_deref())?;
    if c.verbose {
        if let Some(p) = &path {
            eprintln!("wrote {}", p.display());
        }
    }
    Ok(code)
}

fn s(v: &CycNum) -> String {
    v.to_string()
}

fn row_json(l: &str, k: &str, v: &CycNum) -> Value {
    json!({ "label": l, k: cyc(v) })
}

pub fn labels(spec: &SeriesSpec) -> Report {
    let ls = spec.label_sets();
    let mut t = Table::new(&["label", "set"]);
    for p in &ls.gamma_bar {
        t.push(vec![p.to_string(), if spec.in_gamma(p) { "gamma" } else { "boundary" }.into()]);
    }
    let json = json!({
        "spec": export::spec(spec),
        "labels": ls.gamma.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "boundary": ls.gamma_bar.iter().filter(|p| !spec.in_gamma(p)).map(|p| p.to_string()).collect::<Vec<_>>(),
        "composite": ls.extra.map(|c| c.to_string()),
    });
    Report { json, table: t }
}

pub fn dims(spec: &SeriesSpec) -> Result<Report> {
    let mut t = Table::new(&["label", "qdim", "approx"]);
    let mut rows = vec![];
    for p in spec.label_sets().gamma {
        let d = catdata::qdim(spec, &p)?;
        t.push(vec![p.to_string(), s(&d), format!("{:.6}", d.approx().re)]);
        rows.push(row_json(&p.to_string(), "qdim", &d));
    }
    Ok(Report { json: json!({ "spec": export::spec(spec), "rows": rows }), table: t })
}

pub fn twists(spec: &SeriesSpec) -> Result<Report> {
    let mut t = Table::new(&["label", "twist"]);
    let mut rows = vec![];
    for p in spec.label_sets().gamma {
        let v = catdata::twist(spec, &p);
        t.push(vec![p.to_string(), s(&v)]);
        rows.push(row_json(&p.to_string(), "twist", &v));
    }
    Ok(Report { json: json!({ "spec": export::spec(spec), "rows": rows }), table: t })
}

fn tobj(o: &catdata::TransparentObject) -> Value {
    json!({ "label": o.label.to_string(), "qdim": cyc(&o.qdim), "twist": cyc(&o.twist) })
}

pub fn transparent(spec: &SeriesSpec) -> Result<Report> {
    let ts = catdata::transparent_objects(spec)?;
    let mut t = Table::new(&["label", "qdim", "twist"]);
    for o in &ts {
        t.push(vec![o.label.to_string(), s(&o.qdim), s(&o.twist)]);
    }
    let json = json!({
        "spec": export::spec(spec),
        "group": catdata::group_type(&ts),
        "objects": ts.iter().map(tobj).collect::<Vec<_>>(),
    });
    Ok(Report { json, table: t })
}

pub fn verdict(spec: &SeriesSpec) -> Result<Report> {
    let v = catdata::modularizability(spec)?;
    let mut t = Table::new(&["verdict", "witness", "qdim", "twist"]);
    t.push(vec![v.kind.name().into(), String::new(), String::new(), String::new()]);
    for w in &v.witnesses {
        t.push(vec![String::new(), w.label.to_string(), s(&w.qdim), s(&w.twist)]);
    }
    let json = json!({
        "spec": export::spec(spec),
        "verdict": v.kind.name(),
        "witnesses": v.witnesses.iter().map(tobj).collect::<Vec<_>>(),
    });
    Ok(Report { json, table: t })
}

pub fn modularize(spec: &SeriesSpec, m: &MChoices) -> Result<Report> {
    let table = modularize::modular_table(spec, m)?;
    let mut t = Table::new(&["label", "kind", "qdim", "twist"]);
    let mut labels = vec![];
    for l in &table.labels {
        let q = l.qdim.as_ref().map_or("?".to_string(), s);
        t.push(vec![l.label.to_string(), l.label.kind(), q, s(&l.twist)]);
        labels.push(json!({
            "label": l.label.to_string(),
            "kind": l.label.kind(),
            "partition": l.label.partition().to_string(),
            "qdim": l.qdim.as_ref().map(cyc),
            "twist": cyc(&l.twist),
        }));
    }
    let orbits: Vec<Value> = table
        .orbits
        .iter()
        .map(|o| {
            json!({
                "representative": o.representative().to_string(),
                "elements": o.elems.iter().map(|e| match e {
                    Elem::P(p) => p.to_string(),
                    Elem::X => spec.label_sets().extra.map_or("X".into(), |c| c.to_string()),
                }).collect::<Vec<_>>(),
                "stabilizer": o.stabilizer,
            })
        })
        .collect();
    let json = json!({
        "spec": export::spec(spec),
        "orbits": orbits,
        "labels": labels,
        "omega": cyc(&table.omega()?),
        "determined": table.is_determined(),
    });
    Ok(Report { json, table: t })
}

pub fn smatrix_report(spec: &SeriesSpec) -> Result<Report> {
    let sm = smatrix::build_smatrix(spec)?;
    let mut t = Table::new(&["lambda", "mu", "S"]);
    for (i, a) in sm.labels.iter().enumerate() {
        for (j, b) in sm.labels.iter().enumerate() {
            t.push(vec![a.to_string(), b.to_string(), s(&sm.s[i][j])]);
        }
    }
    let json = json!({
        "spec": export::spec(spec),
        "labels": sm.labels.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "S": sm.s.iter().map(|r| r.iter().map(cyc).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "omega": cyc(&sm.omega),
    });
    Ok(Report { json, table: t })
}

pub fn fusion(spec: &SeriesSpec) -> Result<Report> {
    let sm = smatrix::build_smatrix(spec)?;
    let ft = smatrix::fusion_from_s(&sm)?;
    let mut t = Table::new(&["lambda", "mu", "nu", "N"]);
    let mut recs = vec![];
    for (a, b, c, v) in ft.records() {
        let (x, y, z) = (ft.labels[a].to_string(), ft.labels[b].to_string(), ft.labels[c].to_string());
        t.push(vec![x.clone(), y.clone(), z.clone(), v.to_string()]);
        recs.push(json!({ "lambda": x, "mu": y, "nu": z, "N": v }));
    }
    let json = json!({
        "spec": export::spec(spec),
        "labels": ft.labels.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "records": recs,
    });
    Ok(Report { json, table: t })
}

pub fn verlinde_report(
    spec: &SeriesSpec,
    genus: &[u32],
    method: MethodArg,
    m: &MChoices,
    symbolic: bool,
) -> Result<Report> {
    if symbolic {
        if spec.series != Series::D {
            return Err(Error::InvalidParameters("--symbolic applies to the D series only".into()));
        }
        let mut t = Table::new(&["g", "term", "coefficient"]);
        let mut rows = vec![];
        for &g in genus {
            let d = match method {
                MethodArg::Generic => verlinde::generic_d_symbolic(spec, g)?,
                _ => verlinde::closed_form_d_symbolic(spec, g)?,
            };
            t.push(vec![g.to_string(), "A".into(), s(&d.a)]);
            for (p, v) in &d.b {
                t.push(vec![g.to_string(), format!("B{p}"), s(v)]);
            }
            rows.push(json!({
                "g": g,
                "A": cyc(&d.a),
                "B": d.b.iter().map(|(p, v)| json!({"partition": p.to_string(), "coeff": cyc(v)})).collect::<Vec<_>>(),
            }));
        }
        return Ok(Report { json: json!({ "spec": export::spec(spec), "symbolic": rows }), table: t });
    }
    let methods: &[Method] = match method {
        MethodArg::Closed => &[Method::ClosedForm],
        MethodArg::Generic => &[Method::Generic],
        MethodArg::Both => &[Method::ClosedForm, Method::Generic],
    };
    let mut t = Table::new(&["series", "n", "k", "g", "d_g", "method"]);
    let mut rows = vec![];
    for &g in genus {
        let mut vals = vec![];
        for &me in methods {
            let r = verlinde::verlinde(spec, g, m, me)?;
            t.push(vec![r.series.clone(), r.n.to_string(), r.k.to_string(), g.to_string(), r.value.to_string(), me.name().into()]);
            rows.push(json!({ "series": r.series, "n": r.n, "k": r.k, "g": g, "d_g": r.value.to_string(), "method": me.name() }));
            vals.push(r.value);
        }
        if vals.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Consistency(format!("closed form ≠ generic Verlinde at {}, g={g}", spec.title())));
        }
    }
    Ok(Report { json: json!({ "spec": export::spec(spec), "rows": rows }), table: t })
}

pub fn refine_report(spec: &SeriesSpec) -> Result<Report> {
    let (v, vanish) = refine::refinement_verdict(spec)?;
    let sm = smatrix::build_smatrix(spec)?;
    let mut t = Table::new(&["name", "lhs", "rhs", "pass"]);
    let mut checks = vec![];
    let mut push = |name: String, lhs: &CycNum, rhs: &CycNum, pass: bool| {
        t.push(vec![name.clone(), s(lhs), s(rhs), pass.to_string()]);
        checks.push(json!({ "name": name, "lhs": cyc(lhs), "rhs": cyc(rhs), "pass": pass }));
    };
    let zero = CycNum::zero(spec.order);
    for c in &vanish {
        push(format!("U_{}(omega_{}) = 0", c.eps, c.nu), &c.value, &zero, c.value.is_zero());
    }
    let mut ok = true;
    for nu in [0u8, 1] {
        let h = refine::graded_hopf_with(&sm, nu)?;
        push(format!("graded Hopf, nu={nu}"), &h.lhs, &h.rhs, h.lhs == h.rhs);
        push(format!("graded Hopf = U_1 U_-1, nu={nu}"), &h.lhs, &h.unknots, h.lhs == h.unknots);
        push(format!("graded Hopf literal factor, nu={nu}"), &h.lhs, &h.rhs_literal, h.lhs == h.rhs_literal);
        ok &= h.holds();
    }
    let json = json!({ "spec": export::spec(spec), "verdict": v.name(), "checks": checks });
    if !ok {
        return Err(Error::Consistency(format!("graded Hopf identity fails at {}", spec.title())));
    }
    Ok(Report { json, table: t })
}

pub fn dual(spec: &SeriesSpec) -> Result<Report> {
    let (d, map) = crate::series::level_rank_dual(spec)?;
    let order = spec.order.max(d.order);
    let mut t = Table::new(&["label", "dual", "qdim", "dual qdim", "equal"]);
    let mut rows = vec![];
    for (p, q) in &map {
        let a = catdata::qdim(spec, p)?.embed(order);
        let b = catdata::qdim(&d, q)?.embed(order);
        t.push(vec![p.to_string(), q.to_string(), s(&a), s(&b), (a == b).to_string()]);
        rows.push(json!({ "label": p.to_string(), "dual": q.to_string(), "qdim": cyc(&a), "dual_qdim": cyc(&b), "equal": a == b }));
    }
    let json = json!({ "spec": export::spec(spec), "dual": export::spec(&d), "map": rows });
    Ok(Report { json, table: t })
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn record(out: &mut Vec<CheckResult>, name: &str, r: Result<String>) {
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    out.push(CheckResult { name: name.into(), pass, detail });
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond { Ok(()) } else { Err(Error::Consistency(msg())) }
}

fn expected_verdict(spec: &SeriesSpec) -> VerdictKind {
    match spec.series {
        Series::C => VerdictKind::Modular,
        Series::CB | Series::BD | Series::D => VerdictKind::Modularizable,
        _ => VerdictKind::NotModularizable,
    }
}

/// Every identity that applies to the spec; failures are recorded, never skipped.
pub fn check(spec: &SeriesSpec) -> Vec<CheckResult> {
    let mut out = vec![];
    let t = spec.title();
    record(&mut out, "qdims: nonzero on Γ, zero on the boundary", (|| {
        let ls = spec.label_sets();
        for p in &ls.gamma_bar {
            let z = catdata::qdim(spec, p)?.is_zero();
            expect(z != spec.in_gamma(p), || format!("⟨{p}⟩ vanishing is wrong at {t}"))?;
        }
        Ok(format!("{} labels, {} boundary", ls.gamma.len(), ls.gamma_bar.len() - ls.gamma.len()))
    })());
    record(&mut out, "qdims: specialized product formula", (|| {
        let mut c = 0;
        for p in spec.label_sets().gamma.iter().filter(|p| p.len() <= spec.n) {
            let (a, b) = (catdata::qdim(spec, p)?, catdata::qdim_specialized(spec, p)?);
            expect(a == b, || format!("specialized ⟨{p}⟩ = {b} ≠ {a} at {t}"))?;
            c += 1;
        }
        Ok(format!("{c} labels"))
    })());
    record(&mut out, "transparent objects", (|| {
        let ts = catdata::transparent_objects(spec)?;
        let g = catdata::group_type(&ts);
        expect(g != "other", || format!("transparent group of order {} at {t}", ts.len()))?;
        for o in &ts {
            expect(o.qdim.is_one() || (-&o.qdim).is_one(), || format!("transparent {} has ⟨t⟩ = {}", o.label, o.qdim))?;
        }
        Ok(format!("{g}: {}", ts.iter().map(|o| o.label.to_string()).collect::<Vec<_>>().join(", ")))
    })());
    record(&mut out, "modularizability verdict", (|| {
        let v = catdata::modularizability(spec)?.kind;
        let want = expected_verdict(spec);
        expect(v == want, || format!("verdict {} ≠ {} at {t}", v.name(), want.name()))?;
        Ok(v.name().into())
    })());
    if spec.series == Series::C {
        c_checks(spec, &mut out);
    }
    if matches!(spec.series, Series::CB | Series::BD | Series::D) {
        record(&mut out, "modularization orbits", (|| {
            let tab = modularize::modular_table(spec, &MChoices::default())?;
            let omega = tab.omega()?;
            Ok(format!("{} orbits, ⟨ω̃⟩ = {omega}", tab.orbits.len()))
        })());
        let ms: Vec<MChoices> = if spec.series == Series::D {
            vec![MChoices::uniform(4), MChoices::uniform(1)]
        } else {
            vec![MChoices::default()]
        };
        for m in ms {
            let tag = m.default.map_or(String::new(), |v| format!(", m={v}"));
            record(&mut out, &format!("Verlinde closed form = generic{tag}"), (|| {
                let tab = modularize::modular_table(spec, &m)?;
                let mut vals = vec![];
                for g in 0..=4 {
                    let a = verlinde::to_count(&verlinde::verlinde_closed_spec(spec, g, &m)?)?;
                    let b = verlinde::to_count(&verlinde::verlinde_table(&tab, g)?)?;
                    expect(a == b, || format!("d_{g}: closed {a} ≠ generic {b} at {t}"))?;
                    vals.push(a);
                }
                expect(vals[0] == 1u32.into(), || "d_0 ≠ 1".into())?;
                expect(vals[1] == tab.labels.len().into(), || "d_1 ≠ number of labels".into())?;
                Ok(vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))
            })());
        }
        if spec.series == Series::D {
            record(&mut out, "D̃ symbolic decomposition: closed = generic", (|| {
                for g in 0..=4 {
                    let (a, b) = (verlinde::closed_form_d_symbolic(spec, g)?, verlinde::generic_d_symbolic(spec, g)?);
                    expect(a == b, || format!("symbolic terms differ at g={g}, {t}"))?;
                }
                Ok("g ≤ 4".into())
            })());
            record(&mut out, "level-rank duality", level_rank(spec));
        }
    }
    out
}

fn level_rank(spec: &SeriesSpec) -> Result<String> {
    let rows = verlinde::level_rank_check(spec.series, spec.n, spec.k, 4)?;
    for r in &rows {
        expect(r.equal, || format!("{} at g={}: {} ≠ {} at {}", r.what, r.g, r.left, r.right, spec.title()))?;
    }
    Ok(format!("{} comparisons", rows.len()))
}

fn c_checks(spec: &SeriesSpec, out: &mut Vec<CheckResult>) {
    let t = spec.title();
    let sm = smatrix::build_smatrix(spec);
    record(out, "S symmetric, S_λ∅ = ⟨λ⟩, S·S̄ = ⟨ω⟩I", sm.as_ref().map(|m| format!("{}×{}", m.size(), m.size())).map_err(Clone::clone));
    let Ok(sm) = sm else { return };
    record(out, "⟨ω⟩ closed product form", (|| {
        let w = smatrix::omega_closed_form(spec)?;
        expect(w == sm.omega, || format!("⟨ω⟩ = {} but closed form gives {w} at {t}", sm.omega))?;
        Ok(sm.omega.to_string())
    })());
    record(out, "fusion: integral, commutative, associative, unit, branching", (|| {
        let ft = smatrix::fusion_from_s(&sm)?;
        smatrix::fusion_axioms(&ft)?;
        smatrix::fusion_box_slice(&sm, &ft)?;
        for (a, b, c, _) in ft.records() {
            let par = ft.labels[a].size() + ft.labels[b].size() + ft.labels[c].size();
            expect(par % 2 == 0, || "parity grading of fusion fails".into())?;
        }
        Ok(format!("{} nonzero coefficients", ft.records().len()))
    })());
    record(out, "killing property", (|| {
        for (j, mu) in sm.labels.iter().enumerate() {
            let v = smatrix::killing_check(&sm, mu)?;
            let want = if j == 0 { sm.omega.clone() } else { CycNum::zero(spec.order) };
            expect(v == want, || format!("Σ⟨λ⟩S_λ{mu} = {v} at {t}"))?;
        }
        Ok(format!("{} columns", sm.size()))
    })());
    record(out, "refinement verdict and unknot vanishing", (|| {
        let (v, c) = refine::refinement_verdict(spec)?;
        Ok(format!("{} ({} vanishing checks)", v.name(), c.len()))
    })());
    record(out, "graded Hopf identity", (|| {
        for nu in [0, 1] {
            let h = refine::graded_hopf_with(&sm, nu)?;
            expect(h.holds(), || format!("graded Hopf ν={nu}: lhs {} rhs {} U₁U₋₁ {} at {t}", h.lhs, h.rhs, h.unknots))?;
        }
        Ok("ν = 0, 1".into())
    })());
    record(out, "Verlinde closed form = generic", (|| {
        let mut vals = vec![];
        for g in 0..=4 {
            let a = verlinde::to_count(&verlinde::closed_form_c(spec, g)?)?;
            let b = verlinde::to_count(&verlinde::verlinde_generic_spec(spec, g, &MChoices::default())?)?;
            expect(a == b, || format!("d_{g}: closed {a} ≠ generic {b} at {t}"))?;
            vals.push(a.to_string());
        }
        Ok(vals.join(", "))
    })());
    record(out, "level-rank duality", level_rank(spec));
}

pub fn check_report(spec: &SeriesSpec, checks: &[CheckResult]) -> Report {
    let mut t = Table::new(&["check", "result", "detail"]);
    for c in checks {
        t.push(vec![c.name.clone(), if c.pass { "PASS" } else { "FAIL" }.into(), c.detail.clone()]);
    }
    let json = json!({
        "spec": export::spec(spec),
        "pass": checks.iter().all(|c| c.pass),
        "checks": checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
    });
    Report { json, table: t }
}
