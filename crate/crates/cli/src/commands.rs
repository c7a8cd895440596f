use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use slkkm_core::bounds::{lower_bound_main, sperner_lower, table_one, BoundReport};
use slkkm_core::coloring::{
    kkm_to_coloring, lebesgue_to_coloring, validate_kkm_cover, validate_lebesgue_cover, validate_slkkm_points,
    validate_slkkm_regions, PointColoring, RegionColoring, ValidationReport,
};
use slkkm_core::constructions::{brick_coloring, hamming_coloring, orthant_coloring, sperner_gamma};
use slkkm_core::geometry::Openness;
use slkkm_core::scalar::format_scalar;
use slkkm_core::search::{
    brute_force_oracle, empirical_k_curve, extremal_search, max_colors_ball, proof_pipeline_witness, verify_sperner,
    verify_theorem, CurveRow, ExtremalParams,
};
use slkkm_core::{Error as CoreError, Scalar};

use crate::args::{
    BoundsArgs, ConstructArgs, Construction, CurveArgs, ExtremalArgs, PipelineArgs, SearchArgs, SourceArgs,
    SpernerArgs, VerifyArgs,
};
use crate::document::{document_value, parse_document, serialize_document, Document, ParseError};

/// Why a command did not succeed, which decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flag values; exit 64 like a usage error.
    Usage(String),
    /// The input document did not parse.
    Input(ParseError),
    /// The input is well formed but fails a precondition. Exit 1.
    Rejected(String),
    /// An internal consistency check failed. Exit 2.
    Defect(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Assertion(m) => Failure::Defect(m),
            CoreError::InvalidDomain(_)
            | CoreError::DimensionOutOfRange(..)
            | CoreError::ZeroDimension
            | CoreError::BadRational(_)
            | CoreError::InvalidInterval(_)
            | CoreError::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            other => Failure::Rejected(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// What a successful command hands back to the driver.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    /// 0, or 1 when the command found the input invalid.
    pub exit: i32,
    /// Table form for `--out *.csv`.
    pub csv: Option<String>,
    /// Written verbatim by `--out` in place of the report.
    pub artifact: Option<String>,
}

impl Outcome {
    fn new(result: Value, text: String) -> Self {
        Self {
            result,
            text,
            exit: 0,
            csv: None,
            artifact: None,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn openness_name(o: Openness) -> &'static str {
    if o.is_closed() {
        "closed"
    } else {
        "open"
    }
}

pub fn read_document(text: &str) -> Result<Document, Failure> {
    parse_document(text).map_err(Failure::Input)
}

/// A coloring the search commands can work on.
enum Subject {
    Points(PointColoring),
    Regions(RegionColoring),
}

fn build(construct: Construction, d: Option<usize>, sigma: &Scalar) -> Result<RegionColoring, Failure> {
    let need_d = || d.ok_or_else(|| Failure::Usage("--d is required for this construction".into()));
    Ok(match construct {
        Construction::Orthant => orthant_coloring(need_d()?)?,
        Construction::Hamming => hamming_coloring(need_d()?)?,
        Construction::Brick => {
            if d.is_some_and(|d| d != 2) {
                return Err(Failure::Usage("the brick coloring lives in d = 2".into()));
            }
            brick_coloring(sigma)?
        }
    })
}

fn subject(src: &SourceArgs, input: Option<&str>) -> Result<Subject, Failure> {
    if let Some(c) = src.construct {
        return Ok(Subject::Regions(build(c, src.d, &src.sigma)?));
    }
    let text = input.expect("driver reads --in");
    let doc = read_document(text)?;
    if let Some(d) = src.d {
        let dim = match &doc {
            Document::Points(c) => c.dim(),
            Document::Regions(c) => c.dim(),
            Document::LebesgueCover(c) => c.dim(),
            Document::KkmCover(c) => c.dim(),
        };
        if d != dim {
            return Err(Failure::Usage(format!(
                "--d {d} disagrees with the document dimension {dim}"
            )));
        }
    }
    Ok(match doc {
        Document::Points(c) => Subject::Points(c),
        Document::Regions(c) => Subject::Regions(c),
        Document::LebesgueCover(c) => Subject::Regions(lebesgue_to_coloring(&c)?),
        Document::KkmCover(c) => Subject::Regions(kkm_to_coloring(&c)?),
    })
}

macro_rules! with_subject {
    ($s:expr, $c:ident => $body:expr) => {
        match $s {
            Subject::Points($c) => $body,
            Subject::Regions($c) => $body,
        }
    };
}

fn report_text(report: &ValidationReport) -> String {
    if report.passed() {
        return "passed\n".into();
    }
    let mut s = format!("FAILED: {} violation(s)\n", report.total);
    for v in &report.violations {
        let _ = writeln!(s, "  {}", serde_json::to_string(v).expect("violations serialize"));
    }
    if report.truncated() {
        let _ = writeln!(s, "  ... {} more", report.total - report.violations.len());
    }
    s
}

pub fn validate(input: &str) -> CmdResult {
    let doc = read_document(input)?;
    let flavor = doc.flavor();
    let (dimension, report, coloring) = match &doc {
        Document::Points(c) => (c.dim(), validate_slkkm_points(c), None),
        Document::Regions(c) => (c.dim(), validate_slkkm_regions(c), None),
        Document::LebesgueCover(c) => {
            let r = validate_lebesgue_cover(c);
            let coloring = if r.passed() {
                Some(lebesgue_to_coloring(c)?)
            } else {
                None
            };
            (c.dim(), r, coloring)
        }
        Document::KkmCover(c) => {
            let r = validate_kkm_cover(c);
            let coloring = if r.passed() { Some(kkm_to_coloring(c)?) } else { None };
            (c.dim(), r, coloring)
        }
    };
    let mut text = format!("{flavor} in d = {dimension}: {}", report_text(&report));
    let mut result = json!({
        "flavor": flavor,
        "dimension": dimension,
        "passed": report.passed(),
        "report": to_value(&report),
    });
    let mut passed = report.passed();
    if let Some(c) = coloring {
        let cr = validate_slkkm_regions(&c);
        passed &= cr.passed();
        let _ = write!(
            text,
            "converted coloring ({} colors): {}",
            c.num_colors(),
            report_text(&cr)
        );
        result["passed"] = json!(passed);
        result["coloring_report"] = to_value(&cr);
        result["coloring"] = document_value(&Document::Regions(c));
    }
    let mut out = Outcome::new(result, text);
    out.exit = if passed { 0 } else { 1 };
    Ok(out)
}

pub fn construct(a: &ConstructArgs) -> CmdResult {
    let c = build(a.construct, a.d, &a.sigma)?;
    let doc = Document::Regions(c);
    let text = serialize_document(&doc);
    let mut out = Outcome::new(document_value(&doc), text.clone());
    out.artifact = Some(text);
    Ok(out)
}

fn bounds_csv(r: &BoundReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "name", "formula", "value", "applies", "regime"])
        .expect("in-memory write");
    for row in &r.rows {
        let kind = to_value(&row.kind);
        w.write_record([
            kind.as_str().unwrap_or_default(),
            row.name,
            &row.formula,
            &row.value.map(|v| v.to_string()).unwrap_or_default(),
            if row.applies { "true" } else { "false" },
            &row.regime,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn bounds(a: &BoundsArgs) -> CmdResult {
    let report = table_one(a.d, &a.eps)?;
    let mut result = to_value(&report);
    let mut text = format!("{report}\n");
    if let Some(rho) = &a.rho {
        let v = sperner_lower(a.d, &a.eps, rho)?;
        result["rho"] = json!(format_scalar(rho));
        result["sperner_lower"] = json!(v);
        let _ = writeln!(text, "point-set lower bound at rho = {rho}: {v}");
    }
    let mut out = Outcome::new(result, text);
    out.csv = Some(bounds_csv(&report));
    Ok(out)
}

pub fn search(a: &SearchArgs, input: Option<&str>) -> CmdResult {
    let subject = subject(&a.source, input)?;
    let openness = a.ball.openness();
    with_subject!(&subject, c => {
        let found = max_colors_ball(c, &a.eps, openness)?;
        let bound = lower_bound_main(c.dim(), &a.eps)?;
        let mut text = format!(
            "max colors ({} ball, eps = {}): {}\nwitness center: {}\ncolors: {}\n",
            openness_name(openness),
            a.eps,
            found.max_colors,
            found.witness_center,
            found.colors_hit.join(", ")
        );
        let mut result = json!({
            "dimension": c.dim(),
            "eps": format_scalar(&a.eps),
            "openness": openness,
            "lower_bound": bound,
            "search": to_value(&found),
        });
        if let Some(step) = &a.grid_step {
            let grid = brute_force_oracle(c, &a.eps, openness, step)?;
            if grid > found.max_colors {
                return Err(Failure::Defect(format!(
                    "grid scan found {grid} colors, more than the exact maximum {}",
                    found.max_colors
                )));
            }
            let _ = writeln!(text, "grid scan (step {step}): {grid}");
            result["oracle"] = json!({
                "grid_step": format_scalar(step),
                "max_colors": grid,
                "agrees": grid == found.max_colors,
            });
        }
        Ok(Outcome::new(result, text))
    })
}

pub fn verify(a: &VerifyArgs, input: Option<&str>) -> CmdResult {
    let subject = subject(&a.source, input)?;
    let openness = a.ball.openness();
    let report = with_subject!(&subject, c => verify_theorem(c, &a.eps, openness)?);
    let text = format!(
        "{} ball, eps = {}: {} colors forced, {} found at {}: {}\n",
        openness_name(openness),
        a.eps,
        report.lower_bound,
        report.search.max_colors,
        report.search.witness_center,
        if report.holds { "holds" } else { "FAILS" }
    );
    Ok(Outcome::new(to_value(&report), text))
}

pub fn pipeline(a: &PipelineArgs, input: Option<&str>) -> CmdResult {
    let Subject::Regions(c) = subject(&a.source, input)? else {
        return Err(Failure::Usage("the pipeline needs a region coloring or a cover".into()));
    };
    let report = proof_pipeline_witness(&c, &a.eps)?;
    let exact = max_colors_ball(&c, &a.eps, Openness::Open)?;
    if report.result.max_colors > exact.max_colors {
        return Err(Failure::Defect(format!(
            "pipeline count {} exceeds the exact maximum {}",
            report.result.max_colors, exact.max_colors
        )));
    }
    let text = format!(
        "growth factor {}, pigeonhole ratio {}, depth {} at {}\nclamped center {} meets {} colors (bound {}, exact maximum {})\n",
        report.growth_factor,
        report.pigeonhole_ratio,
        report.depth,
        report.deep_point,
        report.result.witness_center,
        report.result.max_colors,
        report.lower_bound,
        exact.max_colors
    );
    let mut result = to_value(&report);
    result["exact_max_colors"] = json!(exact.max_colors);
    Ok(Outcome::new(result, text))
}

pub fn sperner(a: &SpernerArgs, input: &str) -> CmdResult {
    let Document::Points(pc) = read_document(input)? else {
        return Err(Failure::Usage("sperner needs a points document".into()));
    };
    let openness = a.ball.openness();
    let gamma = sperner_gamma(&pc, &a.rho)?;
    let gamma_report = validate_slkkm_regions(&gamma);
    if !gamma_report.passed() {
        return Err(Failure::Defect(
            "extended coloring breaks the boundary condition".into(),
        ));
    }
    let theorem = verify_sperner(&pc, &a.eps, &a.rho, openness)?;
    let text = format!(
        "extended to {} region colors\n{} ball, eps = {}, rho = {}: {} colors forced, {} found at {}\n",
        gamma.num_colors(),
        openness_name(openness),
        a.eps,
        a.rho,
        theorem.lower_bound,
        theorem.search.max_colors,
        theorem.search.witness_center
    );
    let result = json!({
        "rho": format_scalar(&a.rho),
        "gamma": document_value(&Document::Regions(gamma)),
        "gamma_report": to_value(&gamma_report),
        "theorem": to_value(&theorem),
    });
    Ok(Outcome::new(result, text))
}

pub fn extremal(a: &ExtremalArgs) -> CmdResult {
    let mut params = ExtremalParams::new(a.d, a.eps.clone(), a.budget, a.seed);
    if a.open {
        params.openness = Openness::Open;
    }
    if let Some(r) = a.restarts {
        params.restarts = r;
    }
    let r = extremal_search(&params)?;
    let text = format!(
        "best coloring: {} colors, every {} ball of radius {} meets at most {} (lower bound {})\n",
        r.coloring.num_colors(),
        openness_name(params.openness),
        a.eps,
        r.max_colors,
        r.lower_bound
    );
    let result = json!({
        "dimension": a.d,
        "eps": format_scalar(&a.eps),
        "openness": params.openness,
        "seed": a.seed,
        "budget": a.budget,
        "restarts": params.restarts,
        "max_colors": r.max_colors,
        "lower_bound": r.lower_bound,
        "evidence": r.evidence,
        "restart": r.restart,
        "score_float": r.score_float,
        "coloring": document_value(&Document::Regions(r.coloring)),
    });
    Ok(Outcome::new(result, text))
}

fn curve_csv(rows: &[CurveRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["eps", "open", "closed"]).expect("in-memory write");
    for r in rows {
        w.write_record([format_scalar(&r.eps), r.open.to_string(), r.closed.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn curve(a: &CurveArgs, input: Option<&str>) -> CmdResult {
    let subject = subject(&a.source, input)?;
    let rows = with_subject!(&subject, c => empirical_k_curve(c, &a.eps_list)?);
    let csv = curve_csv(&rows);
    let mut out = Outcome::new(json!({ "rows": to_value(&rows) }), csv.clone());
    out.csv = Some(csv);
    Ok(out)
}
