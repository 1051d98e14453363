mod args;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Map, Value};

use quotcoh::index::{check_lemmas, verify_dual_grid, verify_sym_grid, verify_wedge_grid};
use quotcoh::quot::{check_conjecture, verify_resolution_propositions, verify_theorem};
use quotcoh::schur::{cauchy_wedge, load_lr_cache, lr_expand_tensor, save_lr_cache};
use quotcoh::series::{compare, SeriesKind};
use quotcoh::{
    bwb, euler_char, kn_index, lr_coefficient, n_index, quot_cohomology, DominantWeight, EmbeddingData, Error,
    GrassmannianContext, HomogeneousBundle, Partition, Side, TautologicalSheafSpec,
};

use args::{
    Cli, Command, ConjectureCommand, EmbedArgs, Format, Functor, SeriesArgs, SeriesCommand, TwistArgs, VerifyCommand,
};

const CACHE_FILE: &str = "lr-memo-v1";

/// A result to print and whether the claim it checks held.
struct Report {
    value: Value,
    verified: bool,
}

impl Report {
    fn plain(value: Value) -> Self {
        Report { value, verified: true }
    }
}

type Result<T> = std::result::Result<T, Error>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

fn int_list(s: &str, what: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Input(format!("bad {what} entry {t:?}: {e}"))))
        .collect()
}

fn side_of(s: &Option<String>) -> Result<Side> {
    s.as_deref().unwrap_or("g2").parse()
}

fn splitting(big_n: usize, s: &Option<String>) -> Result<Vec<i64>> {
    match s {
        None => Ok(vec![0; big_n]),
        Some(s) => {
            let v = int_list(s, "splitting")?;
            if v.len() != big_n {
                return usage(format!("splitting has {} entries but N = {big_n}", v.len()));
            }
            Ok(v)
        }
    }
}

fn embedding(e: &EmbedArgs) -> Result<(EmbeddingData, Side)> {
    let split = splitting(e.big_n, &e.splitting)?;
    match (e.deg_l, e.m) {
        (Some(deg_l), _) => EmbeddingData::realize(e.big_n, split, e.n, e.r, deg_l),
        (None, Some(m)) => Ok((EmbeddingData::new(e.big_n, split, e.n, e.r, m)?, side_of(&e.side)?)),
        (None, None) => usage("one of --m or --degL is required"),
    }
}

fn sheaf(functor: Functor, t: &TwistArgs, side: Side) -> Result<TautologicalSheafSpec> {
    let need_k = || t.k.ok_or_else(|| Error::Input("--k is required".into()));
    match functor {
        Functor::Wedge => Ok(TautologicalSheafSpec::Wedge { k: need_k()?, side }),
        Functor::Sym => Ok(TautologicalSheafSpec::Sym { k: need_k()?, side }),
        Functor::Dual => {
            let ks: Vec<usize> = match (&t.ks, t.k) {
                (Some(list), _) => int_list(list, "ks")?
                    .into_iter()
                    .map(|k| usize::try_from(k).map_err(|_| Error::Input(format!("negative exterior degree {k}"))))
                    .collect::<Result<_>>()?,
                (None, Some(k)) => vec![k],
                (None, None) => return usage("--ks (or --k) is required for dual products"),
            };
            if ks.is_empty() {
                return usage("--ks must list at least one degree");
            }
            if t.gap > 1 {
                return usage(format!("--gap must be 0 or 1, got {}", t.gap));
            }
            let mut factors: Vec<(usize, Side)> = ks.into_iter().map(|k| (k, side)).collect();
            if t.gap == 1 {
                factors[0].1 = Side::G1;
            }
            Ok(TautologicalSheafSpec::DualWedgeProduct { factors })
        }
    }
}

fn with_context(data: &EmbeddingData, spec: &TautologicalSheafSpec, rest: Value) -> Value {
    let mut out = Map::new();
    if let Value::Object(m) = rest {
        out.extend(m);
    }
    out.insert("data".into(), to_value(data));
    out.insert("sheaf".into(), to_value(spec));
    Value::Object(out)
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Lr(a) => {
            let alpha: Partition = a.alpha.parse()?;
            let beta: Partition = a.beta.parse()?;
            Ok(Report::plain(match a.gamma {
                Some(g) => {
                    let gamma: Partition = g.parse()?;
                    let c = lr_coefficient(&alpha, &beta, &gamma);
                    json!({ "alpha": alpha, "beta": beta, "gamma": gamma, "coefficient": c.to_string() })
                }
                None => json!({ "alpha": alpha, "beta": beta, "expansion": to_value(&lr_expand_tensor(&alpha, &beta)) }),
            }))
        }
        Command::Cauchy(a) => {
            let terms = cauchy_wedge(a.ell, a.rank_left, a.rank_right);
            Ok(Report::plain(json!({
                "ell": a.ell.to_string(),
                "rank_left": a.rank_left.to_string(),
                "rank_right": a.rank_right.to_string(),
                "count": terms.len().to_string(),
                "terms": to_value(&terms),
            })))
        }
        Command::Bwb(a) => {
            let ctx = GrassmannianContext::new(a.d, a.n)?;
            let weight = |s: &Option<String>, len: usize| -> Result<DominantWeight> {
                match s {
                    Some(s) => s.parse(),
                    None => Ok(DominantWeight::zeros(len)),
                }
            };
            let bundle = HomogeneousBundle::new(ctx, weight(&a.quot, a.n)?, weight(&a.sub, ctx.sub_rank())?)?;
            let result = bwb(&bundle);
            let mut out = Map::new();
            out.insert("bundle".into(), to_value(&bundle));
            if let Value::Object(m) = to_value(&result) {
                out.extend(m);
            }
            out.insert("euler_characteristic".into(), euler_char(&bundle).to_string().into());
            Ok(Report::plain(Value::Object(out)))
        }
        Command::Index(a) => {
            let lambda: Partition = a.lambda.parse()?;
            let report = match a.k {
                Some(k) => kn_index(&lambda, k, a.n)?,
                None => n_index(&lambda, a.n)?,
            };
            Ok(Report::plain(json!({
                "lambda": lambda,
                "n": a.n.to_string(),
                "k": a.k.map(|k| k.to_string()),
                "index": report.index.map(|i| i.to_string()),
                "shape": to_value(&report.shape),
            })))
        }
        Command::Chi(a) => {
            let (data, side) = embedding(&a.embed)?;
            let spec = sheaf(a.functor, &a.twist, side)?;
            let c = quot_cohomology(&data, &spec)?;
            let rest = json!({ "chi": c.chi.to_string(), "degenerate": c.degenerate });
            Ok(Report::plain(with_context(&data, &spec, rest)))
        }
        Command::Cohomology(a) => {
            let (data, side) = embedding(&a.embed)?;
            let spec = sheaf(a.functor, &a.twist, side)?;
            let c = quot_cohomology(&data, &spec)?;
            Ok(Report::plain(with_context(&data, &spec, to_value(&c))))
        }
        Command::Verify { which } => verify(which),
        Command::Conjecture { which } => {
            let (functor, a) = match which {
                ConjectureCommand::Wedge(a) => (Functor::Wedge, a),
                ConjectureCommand::Sym(a) => (Functor::Sym, a),
                ConjectureCommand::Dual(a) => (Functor::Dual, a),
            };
            let (data, side) = embedding(&a.embed)?;
            let spec = sheaf(functor, &a.twist, side)?;
            let report = check_conjecture(&data, &spec)?;
            Ok(Report { verified: report.verified, value: to_value(&report) })
        }
        Command::Series { which } => {
            let (kind, a): (SeriesKind, SeriesArgs) = match which {
                SeriesCommand::Wedge(a) => (SeriesKind::Wedge, a),
                SeriesCommand::Sym(a) => (SeriesKind::Sym, a),
                SeriesCommand::Dual(a) => (SeriesKind::Dual, a),
            };
            let split = match (a.big_n, &a.splitting) {
                (Some(n), s) => splitting(n, s)?,
                (None, Some(s)) => int_list(s, "splitting")?,
                (None, None) => return usage("one of --N or --splitting is required"),
            };
            if split.is_empty() {
                return usage("N must be positive");
            }
            let report = compare(kind, &split, a.deg_l, a.nmax)?;
            Ok(Report { verified: report.verdict, value: to_value(&report) })
        }
    }
}

fn verify(which: VerifyCommand) -> Result<Report> {
    let theorem = |functor: Functor, a: args::FixedSheafArgs| -> Result<Report> {
        let (data, side) = embedding(&a.embed)?;
        let spec = sheaf(functor, &a.twist, side)?;
        let report = verify_theorem(&data, &spec)?;
        Ok(Report { verified: report.verified, value: to_value(&report) })
    };
    match which {
        VerifyCommand::TheoremA(a) => theorem(Functor::Wedge, a),
        VerifyCommand::TheoremB(a) => theorem(Functor::Sym, a),
        VerifyCommand::TheoremC(a) => theorem(Functor::Dual, a),
        VerifyCommand::Props(a) => {
            let (data, side) = embedding(&a.embed)?;
            let spec = sheaf(a.functor, &a.twist, side)?;
            let report = verify_resolution_propositions(&data, &spec)?;
            Ok(Report { verified: report.verified, value: to_value(&report) })
        }
        VerifyCommand::Prop31(g) => {
            let report = verify_wedge_grid(g.d, g.n, g.max_size)?;
            Ok(Report { verified: report.passed, value: to_value(&report) })
        }
        VerifyCommand::Prop32(g) => {
            let report = verify_sym_grid(g.d, g.n, g.max_size)?;
            Ok(Report { verified: report.passed, value: to_value(&report) })
        }
        VerifyCommand::Prop33(g) => {
            let report = verify_dual_grid(g.grid.d, g.grid.n, g.r, g.grid.max_size)?;
            Ok(Report { verified: report.passed, value: to_value(&report) })
        }
        VerifyCommand::Lemmas(a) => {
            let report = check_lemmas(a.d, a.n, a.max_size)?;
            Ok(Report { verified: report.passed, value: to_value(&report) })
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Precondition(_) => "precondition",
        Error::EmbeddingBound { .. } => "embedding-bound",
        Error::Unsupported(_) => "unsupported",
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os("QUOTCOH_CACHE_DIR").filter(|d| !d.is_empty()).map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e.render());
            let message = e.kind().to_string();
            print!("{}", output::render(Format::Json, &output::error_object("usage", &message)));
            return ExitCode::from(2);
        }
    };
    if let Some(jobs) = cli.jobs.filter(|&j| j > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("quotcoh: could not size the thread pool: {e}");
        }
    }
    let cache = cache_path();
    if let Some(path) = &cache {
        match load_lr_cache(path) {
            Ok(n) => eprintln!("quotcoh: {n} cached LR coefficients from {}", path.display()),
            Err(e) => eprintln!("quotcoh: ignoring cache {}: {e}", path.display()),
        }
    }
    let outcome = run(cli.command);
    if let Some(path) = &cache {
        let saved = path.parent().map_or(Ok(()), std::fs::create_dir_all).and_then(|_| save_lr_cache(path));
        if let Err(e) = saved {
            eprintln!("quotcoh: could not write cache {}: {e}", path.display());
        }
    }
    match outcome {
        Ok(report) => {
            print!("{}", output::render(cli.format, &report.value));
            if report.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("quotcoh: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("quotcoh: {e}");
            print!("{}", output::render(Format::Json, &output::error_object(error_kind(&e), &e.to_string())));
            ExitCode::from(2)
        }
    }
}
