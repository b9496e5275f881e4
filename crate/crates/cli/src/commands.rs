use kzr_core::hypergeom::{frobenius_rational_solutions, kz_hg_params, HGParams, SolutionPair};
use kzr_core::kzcore::{build_qk, check_flatness, integer_eigenvalue_test, EigenReport, KZParams};
use kzr_core::kzsolve::{compose_w, fundamental_w1, fundamental_w2, FrameKind, SolutionFrame};
use kzr_core::symrep::{validate_representation, ValidationReport};
use kzr_core::verify::{pole_distance, run_suite, Precision, ResidualReport, SuiteConfig, POLE_MARGIN};
use kzr_core::KzError;
use kzr_exact::rational::{is_integer, to_f64, to_i64};
use kzr_exact::{FieldScalar, Matrix, Rational};
use serde::Serialize;
use serde_json::Value;

use crate::args::{Output, RepArgs, SolveArgs, VerifyArgs};
use crate::{CliError, Verdict};

fn emit<T: Serialize>(output: &Output, report: &T, summary: impl FnOnce() -> String) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report)?;
    if let Some(path) = &output.out {
        std::fs::write(path, format!("{text}\n"))?;
    }
    if output.json {
        println!("{text}");
    } else {
        print!("{}", summary());
    }
    Ok(())
}

#[derive(Serialize)]
struct ValidateOutput {
    representation: String,
    n: usize,
    dim: usize,
    identities: ValidationReport,
    flatness: ValidationReport,
    passed: bool,
}

pub fn validate_rep(args: &RepArgs) -> Result<Verdict, CliError> {
    let rep = args.load()?;
    let identities = validate_representation(&rep);
    let flatness = check_flatness(&rep);
    let passed = identities.passed() && flatness.passed();
    let out = ValidateOutput {
        representation: args.label(),
        n: rep.n(),
        dim: rep.dim(),
        identities,
        flatness,
        passed,
    };
    emit(&args.output, &out, || {
        let mut s = format!("{} (n = {}, dim = {})\n", out.representation, out.n, out.dim);
        for (name, r) in [("identities", &out.identities), ("flatness", &out.flatness)] {
            let status = if r.passed() { "ok" } else { "FAILED" };
            s += &format!("  {name}: {status}, {} checks, {} violations\n", r.checks, r.violations.len());
            for v in &r.violations {
                s += &format!("    {} {:?}\n", v.identity, v.pairs);
            }
            for note in &r.notes {
                s += &format!("    note: {note}\n");
            }
        }
        s
    })?;
    Ok(if passed { Verdict::Pass } else { Verdict::Fail })
}

#[derive(Serialize)]
struct SpectrumEntry {
    k: usize,
    report: EigenReport,
}

#[derive(Serialize)]
struct RationalityOutput {
    representation: String,
    spectra: Vec<SpectrumEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    integer_spectrum: bool,
}

pub fn rationality(args: &RepArgs, k: Option<usize>) -> Result<Verdict, CliError> {
    let rep = args.load()?;
    let n = rep.n();
    let partial = rep.is_partial();
    let params = KZParams::new(rep, Rational::from_integer((-1).into()));
    let ks: Vec<usize> = match k {
        Some(k) if (1..=n).contains(&k) => vec![k],
        Some(k) => return Err(CliError::Usage(format!("--k must lie in 1..={n}, got {k}"))),
        None => (1..=n).collect(),
    };
    let mut spectra = Vec::new();
    let mut notes = Vec::new();
    for k in ks {
        match build_qk(&params, k) {
            Ok(q) => spectra.push(SpectrumEntry { k, report: integer_eigenvalue_test(&q)? }),
            Err(KzError::MissingMatrix(pairs)) if partial => {
                notes.push(format!("Q{k} skipped: partial data lacks {pairs:?}"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if spectra.is_empty() {
        return Err(CliError::Usage("no Q_k is computable from this representation".into()));
    }
    let integer = spectra.iter().all(|s| s.report.integer_spectrum);
    let out = RationalityOutput { representation: args.label(), spectra, notes, integer_spectrum: integer };
    emit(&args.output, &out, || {
        let mut s = format!("{}\n", out.representation);
        for e in &out.spectra {
            let verdict = if e.report.integer_spectrum { "integer" } else { "non-integer" };
            s += &format!("  Q{}: {verdict}, eigenvalues {}\n", e.k, e.report.roots.join(", "));
            if let Some(r) = &e.report.residual_roots {
                s += &format!("       irrational pair {r}\n");
            }
        }
        for note in &out.notes {
            s += &format!("  note: {note}\n");
        }
        s
    })?;
    Ok(if integer { Verdict::Pass } else { Verdict::Fail })
}

#[derive(Serialize)]
struct PointValues {
    y: String,
    z: String,
    w1: Value,
    w2: Value,
    w: Value,
}

#[derive(Serialize)]
struct SolveOutput {
    #[serde(with = "kzr_exact::rational::serde_str")]
    rho: Rational,
    kind: FrameKind,
    params: HGParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<SolutionPair>,
    points: Vec<PointValues>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    skipped: Vec<String>,
}

fn frame_value(frame: &SolutionFrame, y: &Rational, z: &Rational) -> Result<Value, KzError> {
    Ok(match frame.as_exact() {
        Some(f) => {
            let m: Matrix<FieldScalar> =
                f.eval(&FieldScalar::from_rational(y.clone()), &FieldScalar::from_rational(z.clone()))?;
            serde_json::to_value(m.map(|x| x.to_string())).expect("string matrix")
        }
        None => serde_json::to_value(frame.eval_f64(to_f64(y), to_f64(z))?).expect("float matrix"),
    })
}

pub fn solve(args: &SolveArgs) -> Result<Verdict, CliError> {
    let rho = &args.rho;
    if rho.numer() == &0.into() {
        return Err(KzError::ZeroRho.into());
    }
    let grid = args.grid.load()?;
    let pair = match is_integer(rho) {
        true => Some(frobenius_rational_solutions(to_i64(rho).ok_or_else(|| CliError::Usage("ρ out of range".into()))?)?),
        false => None,
    };
    let frames = [fundamental_w1(rho)?, fundamental_w2(rho)?, compose_w(rho)?];
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    let mut poles = false;
    for p in &grid {
        if pole_distance(to_f64(&p.y), to_f64(&p.z)) <= POLE_MARGIN {
            poles = true;
            skipped.push(format!("({}, {}): pole", p.y, p.z));
            continue;
        }
        let values: Result<Vec<Value>, KzError> = frames.iter().map(|f| frame_value(f, &p.y, &p.z)).collect();
        match values {
            Ok(v) => {
                let [w1, w2, w]: [Value; 3] = v.try_into().expect("three frames");
                points.push(PointValues { y: p.y.to_string(), z: p.z.to_string(), w1, w2, w });
            }
            Err(e) => skipped.push(format!("({}, {}): {e}", p.y, p.z)),
        }
    }
    let out = SolveOutput {
        rho: rho.clone(),
        kind: frames[2].kind(),
        params: kz_hg_params(rho),
        pair,
        points,
        skipped,
    };
    emit(&args.output, &out, || {
        let mut s = format!("ρ = {} ({:?} frame)\n", out.rho, out.kind);
        if let Some(pair) = &out.pair {
            s += &format!("  ψ1 = {}\n  ψ2 = {}\n", pair.psi1, pair.psi2);
        }
        s += &format!("  {} grid points evaluated, {} skipped\n", out.points.len(), out.skipped.len());
        for note in &out.skipped {
            s += &format!("  skipped {note}\n");
        }
        s
    })?;
    if poles || out.points.is_empty() {
        return Ok(Verdict::Poles);
    }
    Ok(Verdict::Pass)
}

#[derive(Serialize)]
struct VerifyOutput {
    #[serde(with = "kzr_exact::rational::serde_str")]
    rho: Rational,
    precision: Precision,
    reports: Vec<ResidualReport>,
    passed: bool,
}

pub fn verify(args: &VerifyArgs) -> Result<Verdict, CliError> {
    let config = SuiteConfig {
        lines: args.lines as usize,
        grid: args.grid.load()?,
        tol: args.tol,
        precision: Precision::from_env()?,
        ..SuiteConfig::new(args.rho.clone())
    };
    let reports = run_suite(&config)?;
    let passed = reports.iter().all(|r| r.passed);
    let poles = reports.iter().any(|r| r.skipped > 0);
    let out = VerifyOutput { rho: config.rho.clone(), precision: config.precision, reports, passed };
    emit(&args.output, &out, || {
        let mut s = format!("ρ = {}\n", out.rho);
        for r in &out.reports {
            let status = if r.passed { "ok" } else { "FAILED" };
            let detail = match (r.exact_zero, r.max_abs_residual) {
                (Some(true), _) => "exact zero".to_string(),
                (Some(false), _) => "nonzero".to_string(),
                (None, Some(x)) => format!("max residual {x:.3e}"),
                (None, None) => String::new(),
            };
            s += &format!("  {:<24} {:<18} {status:<6} {detail}  [{}]\n", r.equation.name(), format!("{:?}", r.mode), r.subject);
        }
        let failed = out.reports.iter().filter(|r| !r.passed).count();
        s += &format!("{} checks, {failed} failed\n", out.reports.len());
        s
    })?;
    Ok(if poles {
        Verdict::Poles
    } else if passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    })
}

pub fn export_rep(args: &RepArgs) -> Result<Verdict, CliError> {
    let rep = args.load()?;
    let text = rep.to_json();
    match &args.output.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(Verdict::Pass)
}
