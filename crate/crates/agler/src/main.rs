use std::path::PathBuf;
use std::process::ExitCode;

use agler::demos;
use agler::json::{read_json, write_json, CertificateDto, JsonError, PolyDto, RealizationDto};
use agler::report::{all_pass, format_complex, parse_point, print_table, Row};
use agler_core::poly::Poly;
use agler_core::scalar::{Coeff, Exact};
use agler_core::{
    check_degree_bounds, lurking_isometry, radial_check, size_lower_bound_report,
    stability_min_abs, verify_decomposition, vn_norm, ContractionTuple, Realization,
    SosCertificate, C64,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Constructs, verifies, and bounds transfer-function realizations of
/// rational inner functions on the polydisk.
#[derive(Parser)]
#[command(name = "agler", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a sums-of-squares certificate: decomposition residual, degree
    /// bounds, and the radial coefficient identity.
    Verify(VerifyArgs),
    /// Build a unitary realization from a certificate (lurking isometry).
    Realize(RealizeArgs),
    /// Evaluate a stored realization at a point of the polydisk.
    Eval(EvalArgs),
    /// Recover q and p from a realization by Cramer's rule.
    ToRational(ToRationalArgs),
    /// Realization-size lower bound from single-square infeasibility of the
    /// torus faces.
    LowerBound(LowerBoundArgs),
    /// Probe the von Neumann inequality on random commuting contractions.
    VnTest(VnTestArgs),
    /// Run the full pipeline for a bundled example.
    Demo(DemoArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Denominator polynomial JSON, numerator JSON, certificate JSON.
    #[arg(value_names = ["P_JSON", "Q_JSON", "CERT_JSON"], num_args = 0..=3)]
    paths: Vec<PathBuf>,
    /// Use a bundled example instead of files.
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    /// Residual tolerance (relative to the squared coefficient scale).
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Verify in exact rational-surd arithmetic.
    #[arg(long)]
    exact: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RealizeArgs {
    #[arg(value_names = ["P_JSON", "Q_JSON", "CERT_JSON"], num_args = 0..=3)]
    paths: Vec<PathBuf>,
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    /// Write the realization JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Realization JSON (or use --demo).
    #[arg(value_name = "REALIZATION_JSON")]
    path: Option<PathBuf>,
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    /// Point of the polydisk, e.g. "0.1+0.2i,-0.3,0.5i".
    #[arg(long)]
    point: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ToRationalArgs {
    #[arg(value_name = "REALIZATION_JSON")]
    path: Option<PathBuf>,
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    /// Write the recovered denominator here.
    #[arg(long)]
    out_p: Option<PathBuf>,
    /// Write the recovered numerator here.
    #[arg(long)]
    out_q: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LowerBoundArgs {
    #[arg(value_names = ["P_JSON", "Q_JSON"], num_args = 0..=2)]
    paths: Vec<PathBuf>,
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VnTestArgs {
    #[arg(value_names = ["P_JSON", "Q_JSON"], num_args = 0..=2)]
    paths: Vec<PathBuf>,
    #[arg(long, value_parser = demo_names())]
    demo: Option<String>,
    /// Number of random tuples.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Matrix dimension of each tuple entry.
    #[arg(long, default_value_t = 4)]
    dim: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DemoArgs {
    /// One of: blaschke, twovar, trivar, coordinate.
    #[arg(value_parser = demo_names())]
    name: String,
    #[arg(long)]
    json: bool,
}

fn demo_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(demos::NAMES)
}

enum Failure {
    /// Exit 1: the mathematics rejected the input.
    Domain(String),
    /// Exit 2: unusable invocation or unreadable files.
    Usage(String),
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Schema(_) => Failure::Usage(e.to_string()),
            JsonError::Semantic(_) => Failure::Domain(e.to_string()),
        }
    }
}

impl From<agler_core::Error> for Failure {
    fn from(e: agler_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CmdOutcome = Result<bool, Failure>;
type InputTriple<C> = (Poly<C>, Poly<C>, SosCertificate<C>);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Realize(a) => cmd_realize(a),
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::ToRational(a) => cmd_to_rational(a),
        Cmd::LowerBound(a) => cmd_lower_bound(a),
        Cmd::VnTest(a) => cmd_vn_test(a),
        Cmd::Demo(a) => cmd_demo(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Loads (p, q, certificate) from a bundled demo or from three files.
fn load_triple(paths: &[PathBuf], demo: &Option<String>) -> Result<InputTriple<C64>, Failure> {
    if let Some(name) = demo {
        if !paths.is_empty() {
            return Err(Failure::Usage("--demo conflicts with file paths".into()));
        }
        let b = demos::demo(name).expect("validated by clap");
        let cert = b
            .certificate
            .ok_or_else(|| Failure::Usage(format!("demo {name} has no certificate")))?;
        return Ok((b.p, b.q, cert));
    }
    if paths.len() != 3 {
        return Err(Failure::Usage(
            "expected P_JSON Q_JSON CERT_JSON (or --demo NAME)".into(),
        ));
    }
    let p = read_json::<PolyDto>(&paths[0])?.to_poly()?;
    let q = read_json::<PolyDto>(&paths[1])?.to_poly()?;
    let cert = read_json::<CertificateDto>(&paths[2])?.to_certificate()?;
    if q.nvars() != p.nvars() || cert.nvars() != p.nvars() {
        return Err(Failure::Usage(format!(
            "variable counts disagree: p has {}, q has {}, certificate has {}",
            p.nvars(),
            q.nvars(),
            cert.nvars()
        )));
    }
    Ok((p, q, cert))
}

fn load_pair(paths: &[PathBuf], demo: &Option<String>) -> Result<(Poly<C64>, Poly<C64>), Failure> {
    if let Some(name) = demo {
        if !paths.is_empty() {
            return Err(Failure::Usage("--demo conflicts with file paths".into()));
        }
        let b = demos::demo(name).expect("validated by clap");
        return Ok((b.p, b.q));
    }
    if paths.len() != 2 {
        return Err(Failure::Usage("expected P_JSON Q_JSON (or --demo NAME)".into()));
    }
    let p = read_json::<PolyDto>(&paths[0])?.to_poly()?;
    let q = read_json::<PolyDto>(&paths[1])?.to_poly()?;
    if q.nvars() != p.nvars() {
        return Err(Failure::Usage("variable counts of p and q disagree".into()));
    }
    Ok((p, q))
}

/// Loads a realization from a file, or builds the bundled demo's one.
fn load_realization(path: &Option<PathBuf>, demo: &Option<String>) -> Result<Realization, Failure> {
    if let Some(name) = demo {
        if path.is_some() {
            return Err(Failure::Usage("--demo conflicts with a file path".into()));
        }
        let b = demos::demo(name).expect("validated by clap");
        if let Some(r) = b.realization {
            return Ok(r);
        }
        let cert = b.certificate.expect("bundles without realizations carry certificates");
        return Ok(lurking_isometry(&b.p, &b.q, &cert)?);
    }
    match path {
        Some(p) => Ok(read_json::<RealizationDto>(p)?.to_realization()?),
        None => Err(Failure::Usage("expected REALIZATION_JSON (or --demo NAME)".into())),
    }
}

fn degree_vector<C: Coeff>(p: &Poly<C>, q: &Poly<C>) -> agler_core::MultiIndex {
    let zero = agler_core::MultiIndex::zeros(p.nvars());
    let dp = p.multidegree().unwrap_or_else(|| zero.clone());
    let dq = q.multidegree().unwrap_or(zero);
    dp.join(&dq)
}

fn scale_of(p: &Poly<C64>, q: &Poly<C64>) -> f64 {
    let m = p.max_abs().max(q.max_abs());
    (m * m).max(1.0)
}

fn cmd_verify(a: VerifyArgs) -> CmdOutcome {
    let (p, q, cert) = load_triple(&a.paths, &a.demo)?;
    let scale = scale_of(&p, &q);
    let (residual, radial, mode) = if a.exact {
        let (pe, qe, ce) = exact_triple(&a.paths, &a.demo)?;
        (verify_decomposition(&pe, &qe, &ce), radial_check(&pe, &qe, &ce), "exact")
    } else {
        (verify_decomposition(&p, &q, &cert), radial_check(&p, &q, &cert), "float")
    };
    let bounds = check_degree_bounds(&cert, &degree_vector(&p, &q));
    let rows = vec![
        Row::new(
            "decomposition residual",
            format!("{residual:.3e} ({mode})"),
            Some(residual <= a.tol * scale),
        ),
        Row::new(
            "radial identity residual",
            format!("{radial:.3e}"),
            Some(radial <= a.tol * scale),
        ),
        Row::new(
            "degree bounds",
            format!(
                "counts {:?} vs bounds {:?}",
                bounds.faces.iter().map(|f| f.count).collect::<Vec<_>>(),
                bounds.faces.iter().map(|f| f.count_bound).collect::<Vec<_>>()
            ),
            Some(bounds.pass()),
        ),
    ];
    let pass = all_pass(&rows);
    if a.json {
        println!(
            "{}",
            json!({
                "command": "verify",
                "mode": mode,
                "residual": residual,
                "radial_residual": radial,
                "degree_bounds_pass": bounds.pass(),
                "counts": bounds.faces.iter().map(|f| f.count).collect::<Vec<_>>(),
                "count_bounds": bounds.faces.iter().map(|f| f.count_bound).collect::<Vec<_>>(),
                "tol": a.tol,
                "pass": pass,
            })
        );
    } else {
        print_table("certificate verification", &rows);
    }
    Ok(pass)
}

fn exact_triple(paths: &[PathBuf], demo: &Option<String>) -> Result<InputTriple<Exact>, Failure> {
    if let Some(name) = demo {
        let d = demos::demo_exact(name).expect("validated by clap");
        let cert = d
            .certificate
            .ok_or_else(|| Failure::Usage(format!("demo {name} has no certificate")))?;
        return Ok((d.p, d.q, cert));
    }
    if paths.len() != 3 {
        return Err(Failure::Usage("expected P_JSON Q_JSON CERT_JSON".into()));
    }
    let p = read_json::<PolyDto>(&paths[0])?.to_poly_exact()?;
    let q = read_json::<PolyDto>(&paths[1])?.to_poly_exact()?;
    let cert = read_json::<CertificateDto>(&paths[2])?.to_certificate_exact()?;
    Ok((p, q, cert))
}

fn cmd_realize(a: RealizeArgs) -> CmdOutcome {
    let (p, q, cert) = load_triple(&a.paths, &a.demo)?;
    let stability = stability_min_abs(&p);
    if stability <= 1e-8 {
        eprintln!(
            "warning: min |p| over the polydisk grid is {stability:.3e}; p may vanish on the closed polydisk"
        );
    }
    let r = lurking_isometry(&p, &q, &cert)?;
    let unit_err = r.unitarity_error();
    let mut rng = agler_core::Rng::new(0xA11CE);
    let mut match_err = 0.0_f64;
    for _ in 0..50 {
        let z = rng.polydisk(p.nvars(), 0.85);
        let want = q.eval(&z) / p.eval(&z);
        match_err = match_err.max((r.transfer_eval(&z)? - want).norm());
    }
    if let Some(out) = &a.out {
        write_json(out, &RealizationDto::of(&r))?;
    }
    let rows = vec![
        Row::new("size", r.size().to_string(), None),
        Row::new("dims", format!("{:?}", r.dims()), None),
        Row::new("unitarity residual", format!("{unit_err:.3e}"), Some(unit_err <= a.tol)),
        Row::new("transfer match residual", format!("{match_err:.3e}"), Some(match_err <= 1e-8)),
    ];
    let pass = all_pass(&rows);
    if a.json {
        println!(
            "{}",
            json!({
                "command": "realize",
                "size": r.size(),
                "dims": r.dims(),
                "unitarity_residual": unit_err,
                "match_residual": match_err,
                "stability_min_abs": stability,
                "out": a.out.as_ref().map(|p| p.display().to_string()),
                "pass": pass,
            })
        );
    } else {
        print_table("realization", &rows);
    }
    Ok(pass)
}

fn cmd_eval(a: EvalArgs) -> CmdOutcome {
    let r = load_realization(&a.path, &a.demo)?;
    let point = parse_point(&a.point).map_err(Failure::Usage)?;
    if point.len() != r.nvars() {
        return Err(Failure::Usage(format!(
            "point has {} coordinates, realization expects {}",
            point.len(),
            r.nvars()
        )));
    }
    let value = r.transfer_eval(&point)?;
    if a.json {
        println!(
            "{}",
            json!({
                "command": "eval",
                "point": point.iter().map(|z| format_complex(*z)).collect::<Vec<_>>(),
                "value": { "re": value.re, "im": value.im },
                "text": format_complex(value),
            })
        );
    } else {
        println!("{}", format_complex(value));
    }
    Ok(true)
}

fn poly_text(p: &Poly<C64>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (idx, c) in p.terms() {
        let mut term = format!("({})", format_complex(*c));
        for (v, &e) in idx.exps().iter().enumerate() {
            if e == 1 {
                term.push_str(&format!("·z{}", v + 1));
            } else if e > 1 {
                term.push_str(&format!("·z{}^{}", v + 1, e));
            }
        }
        parts.push(term);
    }
    parts.join(" + ")
}

fn cmd_to_rational(a: ToRationalArgs) -> CmdOutcome {
    let r = load_realization(&a.path, &a.demo)?;
    let (q, p) = r.to_rational();
    let mut rng = agler_core::Rng::new(0xCA11);
    let mut match_err = 0.0_f64;
    for _ in 0..50 {
        let z = rng.polydisk(r.nvars(), 0.85);
        let want = r.transfer_eval(&z)?;
        match_err = match_err.max((q.eval(&z) / p.eval(&z) - want).norm());
    }
    if let Some(out) = &a.out_p {
        write_json(out, &PolyDto::of(&p))?;
    }
    if let Some(out) = &a.out_q {
        write_json(out, &PolyDto::of(&q))?;
    }
    let rows = vec![
        Row::new("p", poly_text(&p), None),
        Row::new("q", poly_text(&q), None),
        Row::new("q/p matches transfer", format!("{match_err:.3e}"), Some(match_err <= 1e-9)),
    ];
    let pass = all_pass(&rows);
    if a.json {
        println!(
            "{}",
            json!({
                "command": "to-rational",
                "p": PolyDto::of(&p),
                "q": PolyDto::of(&q),
                "match_residual": match_err,
                "pass": pass,
            })
        );
    } else {
        print_table("rational recovery (Cramer)", &rows);
    }
    Ok(pass)
}

fn cmd_lower_bound(a: LowerBoundArgs) -> CmdOutcome {
    let (p, q) = load_pair(&a.paths, &a.demo)?;
    let report = size_lower_bound_report(&p, &q)?;
    let mut rows: Vec<Row> = report
        .faces
        .iter()
        .map(|f| {
            Row::new(
                format!("face {} single square", f.variable + 1),
                if f.report.feasible {
                    format!("feasible (needs {})", f.needed)
                } else {
                    format!(
                        "infeasible, needs >= {} (best rank-1 residual {:.3e})",
                        f.needed, f.report.numeric_best_residual
                    )
                },
                None,
            )
        })
        .collect();
    rows.push(Row::new("size lower bound", report.bound.to_string(), None));
    if a.json {
        println!(
            "{}",
            json!({
                "command": "lower-bound",
                "bound": report.bound,
                "faces": report.faces.iter().map(|f| json!({
                    "variable": f.variable + 1,
                    "single_square_feasible": f.report.feasible,
                    "needed": f.needed,
                    "numeric_best_residual": f.report.numeric_best_residual,
                    "data": agler::json::LaurentDto::of(&f.data.to_laurent()),
                })).collect::<Vec<_>>(),
            })
        );
    } else {
        print_table("realization-size lower bound", &rows);
    }
    Ok(true)
}

fn cmd_vn_test(a: VnTestArgs) -> CmdOutcome {
    let (p, q) = load_pair(&a.paths, &a.demo)?;
    if a.trials == 0 || a.dim == 0 {
        return Err(Failure::Usage("--trials and --dim must be positive".into()));
    }
    let mut max_norm = 0.0_f64;
    let mut worst_seed = a.seed;
    for trial in 0..a.trials {
        let seed = a.seed.wrapping_add(trial as u64);
        let tuple = ContractionTuple::random(p.nvars(), a.dim, 0.95, seed);
        let n = vn_norm(&q, &p, &tuple)?;
        if n > max_norm {
            max_norm = n;
            worst_seed = seed;
        }
    }
    let pass = max_norm <= 1.0 + 1e-8;
    if a.json {
        println!(
            "{}",
            json!({
                "command": "vn-test",
                "trials": a.trials,
                "dim": a.dim,
                "seed": a.seed,
                "max_norm": max_norm,
                "worst_seed": worst_seed,
                "pass": pass,
            })
        );
    } else {
        print_table(
            "von Neumann probe",
            &[
                Row::new("trials", a.trials.to_string(), None),
                Row::new("dimension", a.dim.to_string(), None),
                Row::new(
                    "max ||f(T)||",
                    format!("{max_norm:.12} (seed {worst_seed})"),
                    Some(pass),
                ),
            ],
        );
    }
    Ok(pass)
}

/// Residual of `a·d − b·c`: zero iff `a/b = c/d` as rational functions.
fn proportionality_residual(a: &Poly<C64>, b: &Poly<C64>, c: &Poly<C64>, d: &Poly<C64>) -> f64 {
    a.mul(d).sub(&b.mul(c)).max_abs()
}

fn cmd_demo(a: DemoArgs) -> CmdOutcome {
    let b = demos::demo(&a.name).expect("validated by clap");
    let cert = b.certificate.clone().expect("all bundles carry certificates");
    let mut rows = Vec::new();

    // certificate checks, float and exact
    let residual = verify_decomposition(&b.p, &b.q, &cert);
    rows.push(Row::new(
        "decomposition residual (float)",
        format!("{residual:.3e}"),
        Some(residual < 1e-12),
    ));
    let exact = demos::demo_exact(&a.name).expect("bundled");
    let exact_res = verify_decomposition(&exact.p, &exact.q, exact.certificate.as_ref().unwrap());
    rows.push(Row::new(
        "decomposition residual (exact)",
        format!("{exact_res}"),
        Some(exact_res == 0.0),
    ));
    let radial = radial_check(&b.p, &b.q, &cert);
    rows.push(Row::new("radial identity residual", format!("{radial:.3e}"), Some(radial < 1e-12)));
    let bounds = check_degree_bounds(&cert, &degree_vector(&b.p, &b.q));
    rows.push(Row::new("degree bounds", format!("{:?}", cert.counts()), Some(bounds.pass())));

    // bundled colligation, when present
    if let Some(r) = &b.realization {
        let unit_err = r.unitarity_error();
        rows.push(Row::new(
            "bundled colligation unitary",
            format!("{unit_err:.3e}"),
            Some(unit_err < 1e-12),
        ));
        let mut rng = agler_core::Rng::new(0xD0E0);
        let mut err = 0.0_f64;
        for _ in 0..200 {
            let z = rng.polydisk(b.nvars, 0.9);
            let want = b.q.eval(&z) / b.p.eval(&z);
            err = err.max((r.transfer_eval(&z)? - want).norm());
        }
        rows.push(Row::new(
            "bundled colligation matches f (200 pts)",
            format!("{err:.3e}"),
            Some(err < 1e-10),
        ));
        let (qq, pp) = r.to_rational();
        let prop = proportionality_residual(&qq, &pp, &b.q, &b.p);
        rows.push(Row::new("to-rational matches f", format!("{prop:.3e}"), Some(prop < 1e-10)));
    }

    // constructed realization
    let r = lurking_isometry(&b.p, &b.q, &cert)?;
    let size_ok = b.expected_size.map(|s| s == r.size());
    rows.push(Row::new(
        "constructed realization size",
        format!("{} (dims {:?})", r.size(), r.dims()),
        size_ok,
    ));
    rows.push(Row::new(
        "constructed unitarity residual",
        format!("{:.3e}", r.unitarity_error()),
        Some(r.unitarity_error() < 1e-10),
    ));
    let mut rng = agler_core::Rng::new(0xD0E1);
    let mut err = 0.0_f64;
    for _ in 0..200 {
        let z = rng.polydisk(b.nvars, 0.9);
        let want = b.q.eval(&z) / b.p.eval(&z);
        err = err.max((r.transfer_eval(&z)? - want).norm());
    }
    rows.push(Row::new(
        "constructed matches f (200 pts)",
        format!("{err:.3e}"),
        Some(err < 1e-8),
    ));

    // lower bound, when the degree hypothesis applies
    if let Some(expected) = b.expected_lower_bound {
        let report = size_lower_bound_report(&b.p, &b.q)?;
        rows.push(Row::new(
            "size lower bound",
            report.bound.to_string(),
            Some(report.bound == expected),
        ));
    }

    // von Neumann probe
    let mut max_norm = 0.0_f64;
    for trial in 0..300u64 {
        let tuple = ContractionTuple::random(b.nvars, 4, 0.95, 0xBEEF + trial);
        max_norm = max_norm.max(vn_norm(&b.q, &b.p, &tuple)?);
    }
    rows.push(Row::new(
        "von Neumann probe (300 tuples, dim 4)",
        format!("max {max_norm:.12}"),
        Some(max_norm <= 1.0 + 1e-8),
    ));

    let pass = all_pass(&rows);
    if a.json {
        println!(
            "{}",
            json!({
                "command": "demo",
                "name": a.name,
                "description": b.description,
                "size": r.size(),
                "pass": pass,
                "checks": rows.iter().map(|r| json!({
                    "check": r.check,
                    "value": r.value,
                    "pass": r.pass,
                })).collect::<Vec<_>>(),
            })
        );
    } else {
        print_table(&format!("demo {} — {}", b.name, b.description), &rows);
        println!("verdict: {}", if pass { "all checks pass" } else { "FAILURES present" });
    }
    Ok(pass)
}
