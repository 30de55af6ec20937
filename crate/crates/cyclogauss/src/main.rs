//! Command-line surface over the library: exact period spectra, condition
//! reports, weighing-matrix and scheme certificates, lifts, closed-form
//! families, and the long-running searches.
//!
//! JSON output is canonical: objects serialize with sorted keys and exact
//! integers only, so parsing an emitted document and re-serializing it is
//! byte-identical. Exit codes: 0 on success, 1 on a domain error (the named
//! precondition goes to stderr), 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use cyclogauss::conditions::{check_necessary, check_sufficient};
use cyclogauss::cyclotomy::{
    decompose, gauss_periods, gauss_periods_for, m_value, SpreadParams, ValueDecomposition,
};
use cyclogauss::families::{self, FamilyPrediction};
use cyclogauss::field::FieldSpec;
use cyclogauss::groupring::{equivalent_up_to_unit, lift_periods, period_vector};
use cyclogauss::search::{corollary_search, table1_search, SearchLimits, Status, SweepOptions};
use cyclogauss::structures::{build_cw, verify_cw, verify_scheme, VerifyMethod};
use cyclogauss::{Error, Result};

/// Largest q = p^f any subcommand will expand directly.
const DIRECT_CAP: u64 = 1 << 25;

#[derive(Parser)]
#[command(
    name = "cyclogauss",
    version,
    about = "Exact Gauss-period spectra over finite fields and the structures they carry"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    /// Worker threads for searches. The CYCLOGAUSS_JOBS environment
    /// variable, when set, overrides this flag.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact Gauss-period spectrum of order N in GF(p^f)
    Periods(Triple),
    /// Necessary and sufficient conditions for a three-valued spectrum
    Check(Triple),
    /// Build and verify the circulant weighing matrix of an AP spectrum
    Cw(Triple),
    /// Certify the 3-class association scheme of a three-valued spectrum
    Scheme(Triple),
    /// Lift the period vector to an extension field
    Lift(Lift),
    /// Closed-form family predictions
    #[command(subcommand)]
    Family(Family),
    /// Parameter searches
    #[command(subcommand)]
    Search(Search),
}

#[derive(Args)]
struct Triple {
    /// Field characteristic (prime).
    #[arg(short)]
    p: u64,
    /// Extension degree, q = p^f.
    #[arg(short)]
    f: u32,
    /// Order of the cyclotomic classes; N divides q - 1.
    #[arg(short = 'N')]
    n: u64,
}

#[derive(Args)]
struct Lift {
    #[arg(short)]
    p: u64,
    #[arg(short)]
    f: u32,
    #[arg(short = 'N')]
    n: u64,
    /// Lift GF(p^f) to GF(p^(f e)).
    #[arg(short)]
    e: u32,
}

#[derive(Subcommand)]
enum Family {
    /// N = q0^2 + q0 + 1 over GF(q0^6), q0 = p^w
    Conic {
        #[arg(short)]
        p: u64,
        #[arg(short, default_value_t = 1)]
        w: u32,
    },
    /// N = (q0^2 + q0 + 1)/3 over GF(q0^6), q0 = 1 mod 3
    Order3 {
        #[arg(long)]
        q0: u64,
    },
    /// Subfield-derived N = (q0^3 - 1)/((q0^(3/e') - 1) gcd stack), e = 3 l
    Subfield {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        e: u32,
        #[arg(long)]
        fs: u32,
    },
    /// Lift of a two-valued subspectrum to an extension field
    Lifted2v {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        f: u32,
        #[arg(short)]
        e: u32,
        #[arg(long)]
        sub_n: u64,
    },
    /// Index-2 closed forms: prime N = p1, or biprime N = p1 p2 with --p2
    Index2 {
        #[arg(long)]
        p1: u64,
        #[arg(long)]
        p2: Option<u64>,
        #[arg(short)]
        p: u64,
    },
    /// Which family, if any, covers a given (p, f, N)
    Summary(Triple),
}

#[derive(Subcommand)]
enum Search {
    /// Sweep all admissible (p, f, N), resumable via JSONL + cursor.
    ///
    /// Prints the three-valued rows not covered by a known family (the
    /// published-table view); the results file keeps every record.
    Table1 {
        /// JSON Lines results file, appended to and deduplicated on resume.
        #[arg(long, default_value = "table1.jsonl")]
        results: PathBuf,
        /// Cursor sidecar marking the last fully persisted (p, f) unit.
        #[arg(long, default_value = "table1.cursor.json")]
        cursor: PathBuf,
        #[arg(long, default_value_t = 300)]
        p_max: u64,
        #[arg(long, default_value_t = 1 << 25)]
        q_max: u64,
        #[arg(long, default_value_t = 3)]
        n_min: u64,
        #[arg(long, default_value_t = 1001)]
        n_max: u64,
        /// Keep every divisor N of q - 1, not only those with (p - 1) | k.
        #[arg(long)]
        all_n: bool,
        /// Assert the sufficiency engine against every computed spectrum.
        #[arg(long)]
        validate: bool,
        /// Show rows covered by the closed-form families too.
        #[arg(long)]
        include_families: bool,
    },
    /// Scan N < n-max for singleton-extreme AP spectra outside the families
    Corollary {
        #[arg(long, default_value_t = 5000)]
        n_max: u64,
    },
    /// Index-2 prime and biprime parameters with bounded class-number data
    Index2 {
        #[arg(long, default_value_t = 20000)]
        bound: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_jobs(cli.jobs);
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// CYCLOGAUSS_JOBS, when parsable, overrides --jobs; 0 means default.
fn init_jobs(flag: Option<usize>) {
    let jobs = match std::env::var("CYCLOGAUSS_JOBS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(j) => Some(j),
            Err(_) => {
                eprintln!("warning: ignoring unparsable CYCLOGAUSS_JOBS = {s:?}");
                flag
            }
        },
        Err(_) => flag,
    };
    #[cfg(feature = "parallel")]
    if let Some(j) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("warning: thread pool already initialized: {e}");
        }
    }
    #[cfg(not(feature = "parallel"))]
    if jobs.is_some() {
        eprintln!("warning: built without the parallel feature, jobs setting ignored");
    }
}

fn run(cli: &Cli) -> Result<()> {
    let fmt = cli.format;
    match &cli.cmd {
        Cmd::Periods(a) => run_periods(a, fmt),
        Cmd::Check(a) => run_check(a, fmt),
        Cmd::Cw(a) => run_cw(a, fmt),
        Cmd::Scheme(a) => run_scheme(a, fmt),
        Cmd::Lift(a) => run_lift(a, fmt),
        Cmd::Family(f) => run_family(f, fmt),
        Cmd::Search(s) => run_search(s, fmt),
    }
}

fn run_periods(a: &Triple, fmt: Format) -> Result<()> {
    let sp = gauss_periods(a.p, a.f, a.n)?;
    let dec = rational_decomposition(&sp)?;
    let m = m_value(a.p, a.n);
    let (status, values) = status_and_values(dec.as_ref());
    match fmt {
        Format::Json => {
            let d = dec.as_ref();
            emit(&json!({
                "p": a.p, "f": a.f, "q": sp.field.q, "N": sp.n, "k": sp.k, "m": m,
                "status": status,
                "values": values,
                "ap": d.and_then(|d| d.three_valued.then_some(d.ap)),
                "t": d.and_then(|d| d.params.as_ref()).map(|pr| pr.t),
                "params": d.and_then(|d| d.params.as_ref()).map_or(Value::Null, params_value),
            }));
        }
        Format::Table => {
            println!(
                "p = {}, f = {}, q = {}, N = {}, k = {}, m = {}",
                a.p, a.f, sp.field.q, sp.n, sp.k, m
            );
            println!("status: {status}");
            if let Some(d) = &dec {
                println!("values: {}", spectrum_str(&values));
                if let Some(pr) = &d.params {
                    println!(
                        "t = {}, u = {}, v = {}, r = {}, s = {}",
                        pr.t, pr.u, pr.v, pr.r, pr.s
                    );
                    println!("arithmetic progression: {}", yesno(d.ap));
                }
            }
        }
    }
    Ok(())
}

fn run_check(a: &Triple, fmt: Format) -> Result<()> {
    let rep = check_sufficient(a.p, a.f, a.n)?;
    // None: q too large to expand; Some(None): irrational spectrum.
    let observed: Option<Option<ValueDecomposition>> = if rep.q <= DIRECT_CAP {
        Some(rational_decomposition(&gauss_periods(a.p, a.f, a.n)?)?)
    } else {
        None
    };
    match fmt {
        Format::Json => {
            let obs = observed.as_ref().map_or(Value::Null, |dec| {
                let (status, values) = status_and_values(dec.as_ref());
                let nec = dec
                    .as_ref()
                    .and_then(|d| d.params.as_ref())
                    .map(|pr| check_necessary(rep.q, rep.n, pr));
                json!({
                    "status": status,
                    "values": values,
                    "params": dec.as_ref().and_then(|d| d.params.as_ref())
                        .map_or(Value::Null, params_value),
                    "nec_i": nec.map(|n| n.0),
                    "nec_ii": nec.map(|n| n.1),
                })
            });
            emit(&json!({
                "p": rep.p, "f": rep.f, "q": rep.q, "N": rep.n, "k": rep.k,
                "theta": rep.theta, "t": rep.t, "m": rep.m,
                "case": rep.sufficiency_case.map(|c| c.name()),
                "params": rep.params.as_ref().map_or(Value::Null, params_value),
                "nec_i": rep.nec_i,
                "nec_ii": rep.nec_ii,
                "y": rep.y,
                "tx_solutions": rep.tx_solutions,
                "candidates": rep.candidate_values,
                "predicts_three_valued": rep.predicts_three_valued,
                "observed": obs,
            }));
        }
        Format::Table => {
            println!(
                "p = {}, f = {}, q = {}, N = {}, k = {}",
                rep.p, rep.f, rep.q, rep.n, rep.k
            );
            println!("theta = {}, t = {}, m = {}", rep.theta, rep.t, rep.m);
            match (&rep.sufficiency_case, &rep.params) {
                (Some(case), Some(pr)) => {
                    println!(
                        "sufficiency case {}: t = {}, u = {}, v = {}, r = {}, s = {}",
                        case.name(),
                        pr.t,
                        pr.u,
                        pr.v,
                        pr.r,
                        pr.s
                    );
                    println!(
                        "necessary (i): {}, (ii): {}",
                        passfail(rep.nec_i),
                        passfail(rep.nec_ii)
                    );
                    if let Some(y) = rep.y {
                        println!("middle value y = {y}");
                    }
                    for cv in &rep.candidate_values {
                        println!("candidate values: {cv:?}");
                    }
                }
                _ => println!("sufficiency: no case fires"),
            }
            println!("predicts three-valued: {}", yesno(rep.predicts_three_valued));
            match &observed {
                None => println!("observed: skipped (q > {DIRECT_CAP})"),
                Some(None) => println!("observed: nonrational spectrum"),
                Some(Some(d)) => {
                    let (status, values) = status_and_values(Some(d));
                    println!("observed: {status}, values: {}", spectrum_str(&values));
                    if let Some(pr) = &d.params {
                        let (n1, n2) = check_necessary(rep.q, rep.n, pr);
                        println!(
                            "observed params: t = {}, u = {}, v = {}, r = {}, s = {}; necessary (i): {}, (ii): {}",
                            pr.t, pr.u, pr.v, pr.r, pr.s, passfail(n1), passfail(n2)
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_cw(a: &Triple, fmt: Format) -> Result<()> {
    let sp = gauss_periods(a.p, a.f, a.n)?;
    let dec = decompose(&sp)?;
    let support = build_cw(&dec)?;
    let weight = verify_cw(&support).map_err(|d| {
        Error::PreconditionFailed(format!("autocorrelation defect {} at lag {}", d.value, d.lag))
    })?;
    match fmt {
        Format::Json => emit(&json!({
            "p": a.p, "f": a.f, "q": dec.q, "N": dec.n,
            "weight": weight,
            "entries": support.entries,
            "verified": true,
        })),
        Format::Table => {
            println!("p = {}, f = {}, q = {}, N = {}", a.p, a.f, dec.q, dec.n);
            println!("CW({}, {}) verified", dec.n, weight);
            println!("row: {}", row_str(&support.entries));
        }
    }
    Ok(())
}

fn run_scheme(a: &Triple, fmt: Format) -> Result<()> {
    let spec = FieldSpec::new(a.p, a.f)?;
    let sp = gauss_periods_for(&spec, a.n)?;
    let dec = decompose(&sp)?;
    if !dec.three_valued {
        return Err(Error::NotThreeValued(dec.values.len()));
    }
    let cert = verify_scheme(&spec, a.n, &dec.index_sets)?;
    match fmt {
        Format::Json => {
            let witness = cert.witness.as_ref().map_or(Value::Null, |w| {
                json!({
                    "class_pair": [w.class_pair.0, w.class_pair.1],
                    "c1": w.c1, "c2": w.c2,
                    "count1": w.count1, "count2": w.count2,
                })
            });
            emit(&json!({
                "p": a.p, "f": a.f, "q": cert.q, "N": cert.n,
                "is_scheme": cert.is_scheme,
                "method": method_str(cert.method),
                "eigenmatrix": cert.eigenmatrix,
                "multiplicities": cert.multiplicities,
                "intersection_numbers": cert.intersection_numbers,
                "formally_self_dual": cert.formally_self_dual,
                "self_dual": cert.self_dual,
                "witness": witness,
            }));
        }
        Format::Table => {
            println!("p = {}, f = {}, q = {}, N = {}", a.p, a.f, cert.q, cert.n);
            println!(
                "scheme: {} (method: {})",
                yesno(cert.is_scheme),
                method_str(cert.method)
            );
            if let Some(pm) = &cert.eigenmatrix {
                println!("eigenmatrix P:");
                for row in pm {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>12}")).collect();
                    println!("  {}", cells.join(" "));
                }
            }
            if let Some(ms) = &cert.multiplicities {
                let cells: Vec<String> = ms.iter().map(u64::to_string).collect();
                println!("multiplicities: {}", cells.join(", "));
            }
            if let Some(b) = cert.formally_self_dual {
                println!("formally self-dual: {}", yesno(b));
            }
            if let Some(b) = cert.self_dual {
                println!("self-dual: {}", yesno(b));
            }
            if let Some(w) = &cert.witness {
                println!(
                    "witness: relation pair ({}, {}) counts {} from base {} but {} from base {}",
                    w.class_pair.0, w.class_pair.1, w.count1, w.c1, w.count2, w.c2
                );
            }
        }
    }
    Ok(())
}

fn run_lift(a: &Lift, fmt: Format) -> Result<()> {
    let base = gauss_periods(a.p, a.f, a.n)?;
    let g = period_vector(&base)?;
    let lifted = lift_periods(&g, a.e)?;
    let fe = a
        .f
        .checked_mul(a.e)
        .ok_or(Error::Overflow("extension degree f e"))?;
    // Compare with the directly computed spectrum when it fits.
    let direct = match a.p.checked_pow(fe) {
        Some(q) if q <= DIRECT_CAP => {
            let d = period_vector(&gauss_periods(a.p, fe, a.n)?)?;
            Some(equivalent_up_to_unit(&lifted, &d)?)
        }
        _ => None,
    };
    let values = lifted.value_multiset();
    match fmt {
        Format::Json => {
            let vals: Vec<Value> = values
                .iter()
                .map(|(v, m)| json!([big_value(v), m]))
                .collect();
            let eta: Vec<Value> = lifted.coeffs.iter().map(big_value).collect();
            let direct_v = direct.map_or(Value::Null, |u| {
                json!({"matches": u.is_some(), "unit": u})
            });
            emit(&json!({
                "p": a.p, "f": a.f, "N": a.n, "e": a.e,
                "values": vals,
                "eta": eta,
                "direct": direct_v,
            }));
        }
        Format::Table => {
            println!(
                "p = {}, f = {}, N = {}, e = {}: lift to GF({}^{})",
                a.p, a.f, a.n, a.e, a.p, fe
            );
            let cells: Vec<String> = values
                .iter()
                .map(|(v, m)| format!("{v} x{m}"))
                .collect();
            println!("values: {}", cells.join(", "));
            match direct {
                None => println!("direct ({}, {}, {}): skipped (q > {})", a.p, fe, a.n, DIRECT_CAP),
                Some(Some(c)) => println!(
                    "direct ({}, {}, {}): matches up to unit c = {}",
                    a.p, fe, a.n, c
                ),
                Some(None) => println!("direct ({}, {}, {}): MISMATCH", a.p, fe, a.n),
            }
        }
    }
    Ok(())
}

fn run_family(cmd: &Family, fmt: Format) -> Result<()> {
    let pred = match cmd {
        Family::Conic { p, w } => families::conic(*p, *w)?,
        Family::Order3 { q0 } => families::order3(*q0)?,
        Family::Subfield { p, e, fs } => families::subfield(*p, *e, *fs)?,
        Family::Lifted2v { p, f, e, sub_n } => families::lifted_two_valued(*p, *f, *e, *sub_n)?,
        Family::Index2 { p1, p2: Some(p2), p } => families::index2_biprime(*p1, *p2, *p)?,
        Family::Index2 { p1, p2: None, p } => families::index2_prime(*p1, *p)?,
        Family::Summary(a) => {
            let fam = families::is_known_family(a.p, a.f, a.n);
            match fmt {
                Format::Json => emit(&json!({
                    "p": a.p, "f": a.f, "N": a.n,
                    "family": fam.map(|x| x.name()),
                })),
                Format::Table => println!(
                    "(p, f, N) = ({}, {}, {}): {}",
                    a.p,
                    a.f,
                    a.n,
                    fam.map_or("no known family", |x| x.name())
                ),
            }
            return Ok(());
        }
    };
    emit_prediction(&pred, fmt);
    Ok(())
}

fn emit_prediction(pred: &FamilyPrediction, fmt: Format) {
    match fmt {
        Format::Json => {
            let vals: Vec<Value> = pred
                .values
                .iter()
                .map(|(v, m)| json!([big_value(v), m.as_ref().map_or(Value::Null, big_value)]))
                .collect();
            emit(&json!({
                "family": pred.family.name(),
                "p": pred.p, "f": pred.f, "N": pred.n,
                "q": big_value(&pred.q),
                "values": vals,
                "three_valued": pred.three_valued,
                "ap": pred.ap, "cw": pred.cw, "scheme": pred.scheme,
                "t": pred.t.as_ref().map_or(Value::Null, big_value),
                "notes": pred.notes,
            }));
        }
        Format::Table => {
            println!("family: {}", pred.family.name());
            println!(
                "p = {}, f = {}, N = {}, q = {}",
                pred.p, pred.f, pred.n, pred.q
            );
            let cells: Vec<String> = pred
                .values
                .iter()
                .map(|(v, m)| match m {
                    Some(m) => format!("{v} x{m}"),
                    None => format!("{v} x?"),
                })
                .collect();
            println!("values: {}", cells.join(", "));
            println!(
                "three-valued: {}, AP: {}, CW: {}, scheme: {}",
                yesno(pred.three_valued),
                opt_yesno(pred.ap),
                opt_yesno(pred.cw),
                opt_yesno(pred.scheme)
            );
            if let Some(t) = &pred.t {
                println!("t = {t}");
            }
            for note in &pred.notes {
                println!("note: {note}");
            }
        }
    }
}

fn run_search(cmd: &Search, fmt: Format) -> Result<()> {
    match cmd {
        Search::Table1 {
            results,
            cursor,
            p_max,
            q_max,
            n_min,
            n_max,
            all_n,
            validate,
            include_families,
        } => {
            let opts = SweepOptions {
                limits: SearchLimits {
                    p_max: *p_max,
                    q_max: *q_max,
                    n_min: *n_min,
                    n_max: *n_max,
                    require_divisibility: !all_n,
                },
                results_path: results.clone(),
                cursor_path: cursor.clone(),
                validate_sufficiency: *validate,
            };
            let records = table1_search(&opts)?;
            let total = records.len();
            let shown: Vec<_> = records
                .iter()
                .filter(|rec| rec.status == Status::ThreeValued)
                .map(|rec| (rec, families::is_known_family(rec.p, rec.f, rec.n)))
                .filter(|(_, fam)| *include_families || fam.is_none())
                .collect();
            match fmt {
                Format::Json => {
                    let rows = shown
                        .iter()
                        .map(|(rec, fam)| {
                            let mut v = serde_json::to_value(rec)?;
                            let obj = v.as_object_mut().expect("record serializes to an object");
                            obj.insert(
                                "family".into(),
                                fam.map_or(Value::Null, |x| x.name().into()),
                            );
                            Ok(v)
                        })
                        .collect::<Result<Vec<Value>>>()?;
                    emit(&json!({ "records": rows }));
                }
                Format::Table => {
                    println!(
                        "{:>4} {:>3} {:>5}  {:<42} {:>3} {:>3} {:>3} {:>8}  family",
                        "p", "f", "N", "spectrum", "AP", "AS", "CW", "t"
                    );
                    for (rec, fam) in &shown {
                        println!(
                            "{:>4} {:>3} {:>5}  {:<42} {:>3} {:>3} {:>3} {:>8}  {}",
                            rec.p,
                            rec.f,
                            rec.n,
                            spectrum_str(&rec.values),
                            opt_yesno(rec.ap),
                            opt_yesno(rec.as_scheme),
                            yesno(rec.cw),
                            rec.t.map_or("-".into(), |t| t.to_string()),
                            fam.map_or("-", |x| x.name())
                        );
                    }
                    println!(
                        "{} three-valued rows shown, {} records total, results in {}",
                        shown.len(),
                        total,
                        results.display()
                    );
                }
            }
        }
        Search::Corollary { n_max } => {
            let hits = corollary_search(*n_max);
            match fmt {
                Format::Json => emit(&json!({ "quadruples": hits })),
                Format::Table => {
                    println!("{:>4} {:>4} {:>6} {:>6}", "p", "f", "N", "theta");
                    for (p, f, n, theta) in &hits {
                        println!("{p:>4} {f:>4} {n:>6} {theta:>6}");
                    }
                    println!("{} quadruples", hits.len());
                }
            }
        }
        Search::Index2 { bound } => {
            let hits = families::index2_search(*bound);
            match fmt {
                Format::Json => emit(&json!({
                    "prime": hits.prime,
                    "biprime": hits.biprime,
                })),
                Format::Table => {
                    println!("prime N = p1, as (p1, p, h):");
                    for (p1, p, h) in &hits.prime {
                        println!("{p1:>8} {p:>6} {h:>4}");
                    }
                    println!("biprime N = p1 p2, as (p1, p2, p, h):");
                    for (p1, p2, p, h) in &hits.biprime {
                        println!("{p1:>8} {p2:>6} {p:>6} {h:>4}");
                    }
                }
            }
        }
    }
    Ok(())
}

/// Decompose a spectrum, mapping the irrational case to None.
fn rational_decomposition(sp: &cyclogauss::cyclotomy::PeriodSpectrum) -> Result<Option<ValueDecomposition>> {
    match decompose(sp) {
        Ok(d) => Ok(Some(d)),
        Err(Error::NotRational) => Ok(None),
        Err(e) => Err(e),
    }
}

fn status_and_values(dec: Option<&ValueDecomposition>) -> (&'static str, Vec<(i64, u64)>) {
    match dec {
        None => ("nonrational", Vec::new()),
        Some(d) => {
            let values = d
                .values
                .iter()
                .copied()
                .zip(d.multiplicities.iter().copied())
                .collect();
            let status = if d.three_valued {
                "three_valued"
            } else if d.values.len() == 2 {
                "two_valued"
            } else {
                "other"
            };
            (status, values)
        }
    }
}

/// Print a canonical one-line JSON document: sorted keys, integers only.
fn emit(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("canonical value serializes"));
}

/// Exact integer Value: machine number when it fits, decimal string beyond.
fn big_value(x: &BigInt) -> Value {
    if let Some(v) = x.to_i64() {
        v.into()
    } else if let Some(v) = x.to_u64() {
        v.into()
    } else {
        x.to_string().into()
    }
}

fn params_value(pr: &SpreadParams) -> Value {
    json!({"t": pr.t, "u": pr.u, "v": pr.v, "r": pr.r, "s": pr.s})
}

fn spectrum_str(values: &[(i64, u64)]) -> String {
    let cells: Vec<String> = values.iter().map(|(v, m)| format!("{v} x{m}")).collect();
    cells.join(", ")
}

fn row_str(entries: &[i8]) -> String {
    entries
        .iter()
        .map(|&e| match e {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

fn method_str(m: VerifyMethod) -> &'static str {
    match m {
        VerifyMethod::Singleton => "singleton",
        VerifyMethod::DualCount => "dual_count",
        VerifyMethod::BruteForce => "brute_force",
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yesno(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn passfail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}
