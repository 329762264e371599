//! The `hombax` command line.
//!
//! JSON goes to stdout, a one-line summary to stderr. Exit codes: 0 success
//! or the predicate holds, 1 a mathematical failure (with a witness where
//! there is one), 2 a usage, parse, or cap error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use crate::constructions::{
    LinearSpec, example_4order, example_matrix, linear_structure, permutation_solution, right_zero_hom_cycle_set,
    theta_solution, trivial_solution,
};
use crate::document::{Kind, Meta, Structure, StructureDocument, documents_to_json};
use crate::enumerate::{AlphaClass, EnumerationFilter, Property, enumerate_hom_quasigroups, iso_classes};
use crate::error::Error;
use crate::finite::{FiniteMap, SquareTable};
use crate::functors::{
    dual_solution, round_trip_quasigroup, round_trip_solution, to_hom_quadratic_set, to_hom_quasigroup, twist,
    twist_solution,
};
use crate::quadset::{
    HomQuadraticSet, alpha_square_identities, is_hom_compatible, is_hybe_solution, is_involutive,
    is_left_nondegenerate, is_nondegenerate, is_right_nondegenerate, is_ybe_solution, lndi_hybe_five_conditions,
    lndi_hybe_six_conditions,
};
use crate::quasigroup::{
    HomQuasigroup, alpha_square_law, dual_op, is_cycle_set, is_delta_bijective, is_endomorphism, is_hom_cycle_set,
    is_im_cycle_set, is_square_free,
};
use crate::report::CheckReport;
use crate::suite::verify_theorem_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hombax",
    version,
    about = "Finite solutions of the (Hom-)Yang-Baxter equation and (Hom-)cycle sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a predicate on a structure document
    Check { file: PathBuf, predicate: String },
    /// Convert between solutions (--G) and quasigroups (--S)
    #[command(group(ArgGroup::new("direction").required(true).args(["g", "s"])))]
    Convert {
        file: PathBuf,
        /// solution -> quasigroup, x·y = λ_x⁻¹(y)
        #[arg(long = "G")]
        g: bool,
        /// quasigroup -> solution, λ_x = σ_x⁻¹
        #[arg(long = "S")]
        s: bool,
    },
    /// Twist a quasigroup (x·'y = α(x)y) or a left non-degenerate involutive solution
    Twist { file: PathBuf },
    /// Dual operation of a non-degenerate quasigroup, or τrτ of a solution
    Dual { file: PathBuf },
    /// Enumerate left Hom-quasigroups of order n
    Enumerate {
        n: usize,
        /// Required property; repeat to combine
        #[arg(long = "filter", value_parser = parse_property)]
        filters: Vec<Property>,
        /// Restriction on alpha: any, id, constant, bijective
        #[arg(long, default_value = "any", value_parser = parse_alpha)]
        alpha: AlphaClass,
        #[arg(long)]
        up_to_iso: bool,
        /// Also list the structures (class representatives with --up-to-iso)
        #[arg(long)]
        list: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the theorem suite on every structure of order at most n
    Verify {
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Emit a built-in structure
    Example {
        name: ExampleName,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated map, e.g. 1,0
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        g: Option<String>,
        /// Rows separated by ';', entries by ','
        #[arg(long)]
        rows: Option<String>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        psi: Option<String>,
        /// Linear alpha as a matrix
        #[arg(long)]
        alpha_matrix: Option<String>,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long)]
        part: Option<Part>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExampleName {
    Trivial,
    Permutation,
    Theta,
    RightZero,
    Linear,
    FourOrder,
    Matrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Part {
    Original,
    Twist,
}

fn parse_property(s: &str) -> Result<Property, String> {
    Property::parse(s).ok_or_else(|| {
        let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("unknown property; expected one of {}", names.join(", "))
    })
}

fn parse_alpha(s: &str) -> Result<AlphaClass, String> {
    AlphaClass::parse(s).ok_or_else(|| "expected one of any, id, constant, bijective".to_string())
}

/// Result of one command: stdout payload, stderr summary, exit code.
struct Outcome {
    stdout: String,
    summary: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String, summary: impl Into<String>) -> Self {
        Outcome {
            stdout,
            summary: summary.into(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            summary: msg.into(),
            code: EXIT_USAGE,
        }
    }

    fn from_error(e: &Error) -> Self {
        if !e.is_mathematical() {
            return Outcome::usage(format!("error: {e}"));
        }
        let body = json!({
            "status": "error",
            "message": e.to_string(),
            "witness": e.witness(),
        });
        Outcome {
            stdout: pretty(&body),
            summary: format!("error: {e}"),
            code: EXIT_FAILS,
        }
    }
}

/// Indented JSON with arrays of scalars kept on one line.
fn pretty<T: serde::Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("report serializes");
    let mut s = String::new();
    write_value(&value, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let inner = " ".repeat(indent + 2);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&inner);
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", " ".repeat(indent)));
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&format!("{inner}{}: ", Value::String(k.clone())));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", " ".repeat(indent)));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Runs the CLI on `args` (including the program name). Never panics on
/// malformed input.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let out = dispatch(cli.command);
    let _ = stdout.write_all(out.stdout.as_bytes());
    if !out.summary.is_empty() {
        let _ = writeln!(stderr, "{}", out.summary);
    }
    out.code
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Check { file, predicate } => with_doc(&file, |doc| cmd_check(doc, &predicate)),
        Command::Convert { file, g, .. } => with_doc(&file, |doc| cmd_convert(doc, g)),
        Command::Twist { file } => with_doc(&file, cmd_twist),
        Command::Dual { file } => with_doc(&file, cmd_dual),
        Command::Enumerate {
            n,
            filters,
            alpha,
            up_to_iso,
            list,
            jobs,
        } => {
            let mut filter = EnumerationFilter::all().alpha(alpha);
            for p in filters {
                filter = filter.with(p);
            }
            cmd_enumerate(n, &filter, up_to_iso, list, jobs)
        }
        Command::Verify { n, jobs } => cmd_verify(n, jobs),
        Command::Example {
            name,
            n,
            alpha,
            f,
            g,
            rows,
            m,
            phi,
            psi,
            alpha_matrix,
            p,
            part,
        } => {
            let params = ExampleParams {
                n,
                alpha,
                f,
                g,
                rows,
                m,
                phi,
                psi,
                alpha_matrix,
                p,
                part,
            };
            match cmd_example(name, &params) {
                Ok(o) => o,
                Err(e) => Outcome::usage(format!("error: {e}")),
            }
        }
    }
}

fn with_doc(path: &PathBuf, f: impl FnOnce(StructureDocument) -> Outcome) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("error: cannot read {}: {e}", path.display())),
    };
    match StructureDocument::parse(&text) {
        Ok(doc) => f(doc),
        Err(e) => Outcome::usage(format!("error: {}: {e}", path.display())),
    }
}

type QuadraticPredicate = fn(&HomQuadraticSet) -> CheckReport;
type QuasigroupPredicate = fn(&HomQuasigroup) -> CheckReport;

const QUADRATIC_PREDICATES: [(&str, QuadraticPredicate); 11] = [
    ("involutive", |h| is_involutive(h.base())),
    ("left-non-degenerate", |h| is_left_nondegenerate(h.base())),
    ("right-non-degenerate", |h| is_right_nondegenerate(h.base())),
    ("non-degenerate", |h| is_nondegenerate(h.base())),
    ("ybe", |h| is_ybe_solution(h.base())),
    ("hom-compatible", is_hom_compatible),
    ("hybe", is_hybe_solution),
    ("lndi-hybe-six", lndi_hybe_six_conditions),
    ("lndi-hybe-five", lndi_hybe_five_conditions),
    ("alpha-square-identities", alpha_square_identities),
    ("round-trip", round_trip_solution),
];

const QUASIGROUP_PREDICATES: [(&str, QuasigroupPredicate); 8] = [
    ("endomorphism", |h| {
        is_endomorphism(h.alpha(), h.base()).expect("sizes agree")
    }),
    ("cycle-set", |h| is_cycle_set(h.base())),
    ("hom-cycle-set", is_hom_cycle_set),
    ("im-cycle-set", is_im_cycle_set),
    ("non-degenerate", |h| is_delta_bijective(h.base())),
    ("square-free", |h| is_square_free(h.base())),
    ("alpha-square-law", alpha_square_law),
    ("round-trip", round_trip_quasigroup),
];

/// Predicate names accepted by `check` for a document kind.
pub fn predicates_for(kind: Kind) -> Vec<&'static str> {
    match kind {
        Kind::Quadratic | Kind::HomQuadratic => QUADRATIC_PREDICATES.iter().map(|p| p.0).collect(),
        Kind::Quasigroup | Kind::HomQuasigroup => QUASIGROUP_PREDICATES.iter().map(|p| p.0).collect(),
        Kind::LinearSpec => {
            let mut v: Vec<_> = QUASIGROUP_PREDICATES.iter().map(|p| p.0).collect();
            v.push("linear-conditions");
            v
        }
    }
}

fn report_outcome(rep: &CheckReport) -> Outcome {
    let code = if rep.holds() {
        EXIT_OK
    } else if rep.is_applicable() {
        EXIT_FAILS
    } else {
        EXIT_USAGE
    };
    let summary = match rep.witness() {
        Some(w) => format!("{}: fails ({} at {:?})", rep.name, w.clause, w.elements),
        None if rep.holds() => format!("{}: holds", rep.name),
        None => format!("{}: not applicable", rep.name),
    };
    Outcome {
        stdout: pretty(rep),
        summary,
        code,
    }
}

fn cmd_check(doc: StructureDocument, predicate: &str) -> Outcome {
    let kind = doc.structure.kind();
    let unknown = || {
        Outcome::usage(format!(
            "error: unknown predicate \"{predicate}\" for kind \"{}\"; available: {}",
            kind.name(),
            predicates_for(kind).join(", ")
        ))
    };
    if let Some(h) = doc.structure.as_hom_quadratic() {
        return match QUADRATIC_PREDICATES.iter().find(|p| p.0 == predicate) {
            Some((_, f)) => report_outcome(&f(&h)),
            None => unknown(),
        };
    }
    if let Structure::Linear(spec) = &doc.structure
        && predicate == "linear-conditions"
    {
        return match linear_structure(spec) {
            Ok((_, rep)) => report_outcome(&rep),
            Err(e) => Outcome::from_error(&e),
        };
    }
    let h = match doc.structure.as_hom_quasigroup() {
        Ok(Some(h)) => h,
        Ok(None) => return unknown(),
        Err(e) => return Outcome::from_error(&e),
    };
    match QUASIGROUP_PREDICATES.iter().find(|p| p.0 == predicate) {
        Some((_, f)) => report_outcome(&f(&h)),
        None => unknown(),
    }
}

fn emit(structure: Structure, meta: Meta, summary: String) -> Outcome {
    Outcome::ok(StructureDocument { structure, meta }.to_json(), summary)
}

fn quasigroup_structure(h: HomQuasigroup, hom: bool) -> Structure {
    if hom {
        Structure::HomQuasigroup(h)
    } else {
        Structure::Quasigroup(h.into_parts().0)
    }
}

fn quadratic_structure(h: HomQuadraticSet, hom: bool) -> Structure {
    if hom {
        Structure::HomQuadratic(h)
    } else {
        Structure::Quadratic(h.into_parts().0)
    }
}

fn cmd_convert(doc: StructureDocument, to_quasigroup: bool) -> Outcome {
    let kind = doc.structure.kind();
    let hom = kind != Kind::Quadratic && kind != Kind::Quasigroup;
    if to_quasigroup {
        let Some(h) = doc.structure.as_hom_quadratic() else {
            return Outcome::usage(format!(
                "error: --G expects a quadratic or hom-quadratic document, got {}",
                kind.name()
            ));
        };
        match to_hom_quasigroup(&h) {
            Ok(g) => emit(quasigroup_structure(g, hom), doc.meta, "converted with G".into()),
            Err(e) => Outcome::from_error(&e),
        }
    } else {
        let h = match doc.structure.as_hom_quasigroup() {
            Ok(Some(h)) => h,
            Ok(None) => {
                return Outcome::usage(format!(
                    "error: --S expects a quasigroup, hom-quasigroup or linear-spec document, got {}",
                    kind.name()
                ));
            }
            Err(e) => return Outcome::from_error(&e),
        };
        emit(
            quadratic_structure(to_hom_quadratic_set(&h), hom),
            doc.meta,
            "converted with S".into(),
        )
    }
}

fn cmd_twist(doc: StructureDocument) -> Outcome {
    let kind = doc.structure.kind();
    if let Some(h) = doc.structure.as_hom_quadratic() {
        return match twist_solution(&h) {
            Ok(t) => emit(
                quadratic_structure(t, kind == Kind::HomQuadratic),
                doc.meta,
                "twisted solution".into(),
            ),
            Err(e) => Outcome::from_error(&e),
        };
    }
    match doc.structure.as_hom_quasigroup() {
        Ok(Some(h)) => emit(
            quasigroup_structure(twist(&h), kind != Kind::Quasigroup),
            doc.meta,
            "twisted".into(),
        ),
        Ok(None) => Outcome::usage("error: nothing to twist"),
        Err(e) => Outcome::from_error(&e),
    }
}

fn cmd_dual(doc: StructureDocument) -> Outcome {
    let kind = doc.structure.kind();
    if let Some(h) = doc.structure.as_hom_quadratic() {
        return match dual_solution(&h) {
            Ok(d) => emit(
                quadratic_structure(d, kind == Kind::HomQuadratic),
                doc.meta,
                "dual solution".into(),
            ),
            Err(e) => Outcome::from_error(&e),
        };
    }
    let h = match doc.structure.as_hom_quasigroup() {
        Ok(Some(h)) => h,
        Ok(None) => return Outcome::usage("error: no dual for this kind"),
        Err(e) => return Outcome::from_error(&e),
    };
    match dual_op(h.base()) {
        Ok(d) => {
            let dual = HomQuasigroup::new_unchecked(d, h.alpha().clone());
            emit(
                quasigroup_structure(dual, kind != Kind::Quasigroup),
                doc.meta,
                "dual operation".into(),
            )
        }
        Err(e) => Outcome::from_error(&e),
    }
}

fn cmd_enumerate(n: usize, filter: &EnumerationFilter, up_to_iso: bool, list: bool, jobs: Option<usize>) -> Outcome {
    let result = if up_to_iso {
        iso_classes(n, filter, jobs).map(|classes| {
            let raw: usize = classes.iter().map(|c| c.raw).sum();
            let iso = classes.len();
            let mut body = json!({ "n": n, "filter": filter, "raw": raw, "iso_classes": iso });
            if list {
                body["classes"] = classes
                    .iter()
                    .map(|c| {
                        let h = c.key.to_hom_quasigroup();
                        json!({
                            "op": h.base().table().to_rows(),
                            "alpha": h.alpha().as_slice(),
                            "raw": c.raw,
                            "automorphisms": c.automorphisms,
                        })
                    })
                    .collect();
            }
            (body, format!("{iso} classes, {raw} labeled structures of order {n}"))
        })
    } else {
        enumerate_hom_quasigroups(n, filter, jobs).map(|all| {
            let mut body = json!({ "n": n, "filter": filter, "raw": all.len() });
            if list {
                body["structures"] = all
                    .iter()
                    .map(|h| json!({ "op": h.base().table().to_rows(), "alpha": h.alpha().as_slice() }))
                    .collect();
            }
            (body, format!("{} labeled structures of order {n}", all.len()))
        })
    };
    match result {
        Ok((body, summary)) => Outcome::ok(pretty(&body), summary),
        Err(e) => Outcome::from_error(&e),
    }
}

fn cmd_verify(n: usize, jobs: Option<usize>) -> Outcome {
    match verify_theorem_suite(n, jobs) {
        Ok(rep) => {
            let failing: Vec<_> = rep
                .theorems
                .iter()
                .filter(|t| !t.holds())
                .map(|t| t.name.as_str())
                .collect();
            let summary = if failing.is_empty() {
                format!("all {} theorems hold up to order {n}", rep.theorems.len())
            } else {
                format!("counterexamples for: {}", failing.join(", "))
            };
            Outcome {
                stdout: pretty(&rep),
                summary,
                code: if rep.all_pass { EXIT_OK } else { EXIT_FAILS },
            }
        }
        Err(e) => Outcome::from_error(&e),
    }
}

struct ExampleParams {
    n: Option<usize>,
    alpha: Option<String>,
    f: Option<String>,
    g: Option<String>,
    rows: Option<String>,
    m: Option<u64>,
    phi: Option<String>,
    psi: Option<String>,
    alpha_matrix: Option<String>,
    p: u64,
    part: Option<Part>,
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("{what}: cannot parse \"{t}\"")))
        })
        .collect()
}

fn parse_rows<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<Vec<T>>, Error> {
    s.split(';').map(|r| parse_list(r, what)).collect()
}

fn parse_map(s: &str, what: &str) -> Result<FiniteMap, Error> {
    FiniteMap::new(parse_list(s, what)?)
}

fn cmd_example(name: ExampleName, p: &ExampleParams) -> Result<Outcome, Error> {
    let map_or = |s: &Option<String>, what: &str, default: FiniteMap| match s {
        Some(s) => parse_map(s, what),
        None => Ok(default),
    };
    let (structure, meta) = match name {
        ExampleName::Trivial => {
            let n = p.n.unwrap_or(2);
            let alpha = map_or(&p.alpha, "alpha", FiniteMap::identity(n))?;
            let h = trivial_solution(n, &alpha)?;
            (Structure::HomQuadratic(h), Meta::named("trivial", "r(x, y) = (y, x)"))
        }
        ExampleName::Permutation => {
            let swap = FiniteMap::new(vec![1, 0])?;
            let f = map_or(&p.f, "f", swap.clone())?;
            let g = map_or(&p.g, "g", swap)?;
            let alpha = map_or(&p.alpha, "alpha", FiniteMap::identity(f.len()))?;
            let h = permutation_solution(&f, &g, &alpha)?;
            (
                Structure::HomQuadratic(h),
                Meta::named("permutation", "r(x, y) = (f(y), g(x))"),
            )
        }
        ExampleName::Theta => {
            let lam = match &p.rows {
                Some(r) => SquareTable::new(parse_rows(r, "rows")?)?,
                None => to_hom_quadratic_set(&example_4order()).base().lam_table().clone(),
            };
            let h = theta_solution(lam.n(), &lam)?;
            (
                Structure::HomQuadratic(h),
                Meta::named("theta", "alpha constant 0, each lambda_x fixes 0"),
            )
        }
        ExampleName::RightZero => {
            let n = p.n.unwrap_or(3);
            let alpha = map_or(&p.alpha, "alpha", FiniteMap::constant(n, 0)?)?;
            let h = right_zero_hom_cycle_set(n, &alpha)?;
            (Structure::HomQuasigroup(h), Meta::named("right-zero", "x·y = y"))
        }
        ExampleName::Linear => {
            let mat = |s: &Option<String>, what: &str, default: Vec<Vec<i64>>| match s {
                Some(s) => parse_rows(s, what),
                None => Ok(default),
            };
            let spec = LinearSpec::new(
                p.m.unwrap_or(3),
                mat(&p.phi, "phi", vec![vec![0]])?,
                mat(&p.psi, "psi", vec![vec![1]])?,
                mat(&p.alpha_matrix, "alpha-matrix", vec![vec![1]])?,
            )?;
            linear_structure(&spec)?;
            (
                Structure::Linear(spec),
                Meta::named("linear", "x·y = phi(x) + psi(y) on (Z_m)^d"),
            )
        }
        ExampleName::FourOrder => (
            Structure::HomQuasigroup(example_4order()),
            Meta::named(
                "four-order",
                "square-free Hom-cycle set of order 4 with constant alpha and non-injective Delta",
            ),
        ),
        ExampleName::Matrix => {
            let (orig, tw) = example_matrix(p.p)?;
            let prov = format!("x·y = Ax + By over GF({})^3, alpha = C", p.p);
            let original = StructureDocument {
                structure: Structure::HomQuasigroup(orig),
                meta: Meta::named(&format!("matrix-p{}", p.p), &prov),
            };
            let twisted = StructureDocument {
                structure: Structure::HomQuasigroup(tw),
                meta: Meta::named(&format!("matrix-p{}-twist", p.p), &format!("twist of: {prov}")),
            };
            return Ok(match p.part {
                None => Outcome::ok(documents_to_json(&[original, twisted]), "original and twist"),
                Some(Part::Original) => Outcome::ok(original.to_json(), "original"),
                Some(Part::Twist) => Outcome::ok(twisted.to_json(), "twist"),
            });
        }
    };
    Ok(emit(
        structure,
        meta,
        format!("example {}", name.to_possible_value().expect("named").get_name()),
    ))
}
