//! The `ffgrowth` command line. Exit codes: 0 on success, 2 on validation
//! problems (with a diagnostic naming the offending flag), 1 when a
//! theorem-grade invariant fails — which can only mean a bug, never a
//! property of the input.

use std::panic::AssertUnwindSafe;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::Ratio;
use serde_json::{json, Value};

use crate::energy::{additive_energy, energy_sum_over_ratios, mixed_energy};
use crate::field::{self, subfield_lattice, Elem, Field};
use crate::harness::{
    extremal_search, measure, sweep, GenModel, GrowthRecord, HypothesisFilter, Objective,
};
use crate::lemmas::{
    greedy_cover, katz_shen_search, katz_shen_search_exact, lemma32_cover_profile, plunnecke_check,
};
use crate::set::{
    check_hypothesis_thm1, check_hypothesis_thm2, classify_case, classify_case_xy, ratio_set,
    verify_case, CaseLabel, FSet, HypothesisReport,
};
use crate::setfile;

#[derive(Parser)]
#[command(
    name = "ffgrowth",
    version,
    about = "Exact sum-product growth experiments over finite fields F_{p^k}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format (csv only where a row schema exists)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a field and print q, the modulus, and the subfield lattice
    Field {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Modulus coefficients, low-degree first, e.g. 1,1,0,0,1
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Apply a set operation and emit the resulting set file
    Setop {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, value_enum)]
        op: SetOp,
        /// Right-hand set file for binary operations
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Element index for dilate / translate
        #[arg(long)]
        by: Option<u64>,
    },
    /// Classify a set by the first violated ratio-set closure (cases 1-4)
    Classify {
        #[command(flatten)]
        input: FileArg,
        /// Classify with ratios R(X, Y): the file is X, this is Y
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Map the set affinely so it contains 0 and 1 first
        #[arg(long)]
        normalize: bool,
    },
    /// Check the subfield-intersection hypothesis of theorem 1 or 2
    Hypothesis {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[command(flatten)]
        input: FileArg,
        /// Map the set affinely so it contains 0 and 1 first
        #[arg(long)]
        normalize: bool,
    },
    /// Exact additive or mixed energy with its representation histogram
    Energy {
        #[command(flatten)]
        input: FileArg,
        /// Mixed energy E(A², (A-B)²) with B = A+A (or --rhs)
        #[arg(long)]
        mixed: bool,
        /// Second operand (additive: Y; mixed: B) instead of the default
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Also print the nonzero histogram entries
        #[arg(long)]
        histogram: bool,
    },
    /// Sum of E+(A, rA) over the ratio set, its bound, and the witness r
    RatioSum {
        #[command(flatten)]
        input: FileArg,
    },
    /// Run a structural-lemma checker (2.1, 2.2, 2.4 or 3.2)
    Lemma {
        #[arg(long)]
        which: String,
        #[command(flatten)]
        input: FileArg,
        /// X set for 2.1 / 2.2 (default: the input set)
        #[arg(long)]
        x: Option<PathBuf>,
        /// Summand sets for 2.1 / 2.2 (default: input set twice)
        #[arg(long, value_delimiter = ',')]
        bs: Vec<PathBuf>,
        /// Covering set Y for 2.4 (default: the input set)
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Fraction (2.2: removal budget; 2.4: allowed uncovered fraction;
        /// 3.2: threshold exponent). Decimal or a/b
        #[arg(long, default_value = "0.1")]
        eps: String,
        /// Exhaustive subset search for 2.2 (|X| <= 12)
        #[arg(long)]
        exact: bool,
        /// Write per-element cover counts here (3.2 only)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Measure every growth quantity of a set
    Measure {
        #[command(flatten)]
        input: FileArg,
    },
    /// Generate sets for a range of sizes and measure each one
    Sweep {
        /// uniform | interval | subfield_coset | geometric
        #[arg(long)]
        model: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        modulus: Option<String>,
        /// Size range, inclusive: "6..10" or a single "10"
        #[arg(long)]
        n: String,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Subfield degree for subfield_coset
        #[arg(long)]
        coset_degree: Option<u32>,
        /// Dilate element index for subfield_coset
        #[arg(long)]
        coset_dilate: Option<u32>,
    },
    /// Hill-climb for a low-growth set under a hypothesis filter
    Search {
        /// delta | maxpair | shifted
        #[arg(long)]
        objective: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        iters: usize,
        #[arg(long)]
        seed: u64,
        /// Which hypothesis gates the moves
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        hypothesis: u8,
    },
}

/// Input set file plus optional descriptor cross-checks.
#[derive(Args)]
struct FileArg {
    #[arg(long)]
    file: PathBuf,
    /// Expected p; the file wins, a mismatch is an error
    #[arg(long)]
    p: Option<u64>,
    /// Expected k; the file wins, a mismatch is an error
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetOp {
    Sumset,
    Difference,
    Product,
    Ratio,
    Square,
    Distance,
    Negate,
    Inverse,
    Normalize,
    Dilate,
    Translate,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invariant(String),
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

impl FileArg {
    fn load(&self) -> CliResult<FSet> {
        let set = setfile::read_set(&self.file)
            .map_err(|e| Failure::Usage(format!("--file {}: {e}", self.file.display())))?;
        setfile::check_descriptor(&set, self.p, self.k)
            .map_err(|e| Failure::Usage(format!("--p/--k: {e}")))?;
        Ok(set)
    }
}

fn load_rhs(path: &Path) -> CliResult<FSet> {
    setfile::read_set(path).map_err(|e| Failure::Usage(format!("--rhs {}: {e}", path.display())))
}

/// A rendered report in every format the subcommand supports.
struct Rendered {
    text: String,
    json: Value,
    csv: Option<String>,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match std::panic::catch_unwind(AssertUnwindSafe(|| execute(&cli))) {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("ffgrowth: {msg}");
            2
        }
        Ok(Err(Failure::Invariant(msg))) => {
            eprintln!("ffgrowth: invariant violation (this is a bug): {msg}");
            1
        }
        Err(_) => {
            eprintln!("ffgrowth: internal invariant violated");
            1
        }
    }
}

fn execute(cli: &Cli) -> CliResult<()> {
    let rendered = dispatch(&cli.command)?;
    let content = match cli.format {
        Format::Text => rendered.text,
        Format::Json => format!("{:#}", rendered.json),
        Format::Csv => rendered.csv.ok_or_else(|| {
            Failure::Usage("--format csv: no row schema for this subcommand".into())
        })?,
    };
    let content = if content.ends_with('\n') {
        content
    } else {
        content + "\n"
    };
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::Usage(format!("--out {}: {e}", path.display())))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn dispatch(command: &Command) -> CliResult<Rendered> {
    match command {
        Command::Field { p, k, modulus } => cmd_field(*p, *k, modulus),
        Command::Setop { input, op, rhs, by } => cmd_setop(input, *op, rhs, *by),
        Command::Classify {
            input,
            rhs,
            normalize,
        } => cmd_classify(input, rhs, *normalize),
        Command::Hypothesis {
            theorem,
            input,
            normalize,
        } => cmd_hypothesis(*theorem, input, *normalize),
        Command::Energy {
            input,
            mixed,
            rhs,
            histogram,
        } => cmd_energy(input, *mixed, rhs, *histogram),
        Command::RatioSum { input } => cmd_ratio_sum(input),
        Command::Lemma {
            which,
            input,
            x,
            bs,
            rhs,
            eps,
            exact,
            csv,
        } => cmd_lemma(which, input, x, bs, rhs, eps, *exact, csv),
        Command::Measure { input } => cmd_measure(input),
        Command::Sweep {
            model,
            p,
            k,
            modulus,
            n,
            trials,
            seed,
            coset_degree,
            coset_dilate,
        } => cmd_sweep(
            model,
            *p,
            *k,
            modulus,
            n,
            *trials,
            *seed,
            *coset_degree,
            *coset_dilate,
        ),
        Command::Search {
            objective,
            p,
            k,
            modulus,
            n,
            iters,
            seed,
            hypothesis,
        } => cmd_search(objective, *p, *k, modulus, *n, *iters, *seed, *hypothesis),
    }
}

fn parse_coeffs(s: &str) -> CliResult<Vec<u64>> {
    s.split(',')
        .map(|c| c.trim().parse::<u64>())
        .collect::<Result<Vec<u64>, _>>()
        .map_err(|e| Failure::Usage(format!("--modulus: {e}")))
}

fn field_from_flags(p: u64, k: u32, modulus: &Option<String>) -> CliResult<Field> {
    let coeffs = match modulus {
        Some(s) => Some(parse_coeffs(s)?),
        None => None,
    };
    field::build(p, k, coeffs.as_deref()).map_err(|e| {
        let flag = match &e {
            crate::Error::NotPrime(_) => "--p",
            crate::Error::UniverseTooLarge { .. } => "--p/--k",
            _ => "--modulus",
        };
        Failure::Usage(format!("{flag}: {e}"))
    })
}

/// Accepts "a/b", decimals like "0.1", and plain integers.
fn parse_fraction(s: &str) -> CliResult<Ratio<u64>> {
    let bad = || Failure::Usage(format!("--eps: cannot parse '{s}' as a fraction"));
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: u64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10u64.pow(frac.len() as u32);
        let frac: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        return Ok(Ratio::new(int * den + frac, den));
    }
    let int: u64 = s.trim().parse().map_err(|_| bad())?;
    Ok(Ratio::from_integer(int))
}

/// "a..b" (inclusive) or a single "n".
fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || Failure::Usage(format!("--n: cannot parse '{s}' (use e.g. 6..10 or 10)"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let n = s.trim().parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

fn ratio_str(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_field(p: u64, k: u32, modulus: &Option<String>) -> CliResult<Rendered> {
    let f = field_from_flags(p, k, modulus)?;
    let spec = f.spec();
    let lattice = subfield_lattice(&f);
    let mut text = format!(
        "q = {}\np = {}, k = {}\nmodulus = {} {:?}\ngenerator = {}\nsubfields:\n",
        f.q(),
        spec.p,
        spec.k,
        spec.modulus_display(),
        spec.modulus,
        f.generator()
    );
    for sub in &lattice {
        let elems = if sub.size() <= 32 {
            format!(" {}", sub.elements)
        } else {
            String::new()
        };
        text.push_str(&format!(
            "  d = {}: F_{} with {} elements{}\n",
            sub.degree,
            sub.label().0.pow(sub.degree),
            sub.size(),
            elems
        ));
    }
    let json = json!({
        "q": f.q(),
        "p": spec.p,
        "k": spec.k,
        "modulus": spec.modulus,
        "generator": f.generator().0,
        "subfields": lattice.iter().map(|s| json!({
            "degree": s.degree,
            "size": s.size(),
            "elements": s.elements.iter().map(|e| e.0).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Rendered {
        text,
        json,
        csv: None,
    })
}

fn set_rendered(result: FSet) -> Rendered {
    let spec = result.field().spec().clone();
    let text = setfile::render_set(&result);
    let json = json!({
        "p": spec.p,
        "k": spec.k,
        "modulus": spec.modulus,
        "elements": result.iter().map(|e| e.0).collect::<Vec<_>>(),
    });
    Rendered {
        text,
        json,
        csv: None,
    }
}

fn cmd_setop(
    input: &FileArg,
    op: SetOp,
    rhs: &Option<PathBuf>,
    by: Option<u64>,
) -> CliResult<Rendered> {
    let a = input.load()?;
    let binary = |rhs: &Option<PathBuf>| -> CliResult<FSet> {
        match rhs {
            Some(path) => load_rhs(path),
            None => usage("--rhs: this operation needs a right-hand set"),
        }
    };
    let by_elem = |by: Option<u64>| -> CliResult<Elem> {
        match by {
            Some(idx) => a
                .field()
                .elem(idx)
                .map_err(|e| Failure::Usage(format!("--by: {e}"))),
            None => usage("--by: this operation needs an element index"),
        }
    };
    let map_err = |e: crate::Error| Failure::Usage(format!("setop: {e}"));
    let result = match op {
        SetOp::Sumset => a.sumset(&binary(rhs)?).map_err(map_err)?,
        SetOp::Difference => a.difference_set(&binary(rhs)?).map_err(map_err)?,
        SetOp::Product => a.product_set(&binary(rhs)?).map_err(map_err)?,
        SetOp::Ratio => ratio_set(&a, &binary(rhs)?).map_err(map_err)?,
        SetOp::Square => a.square_set(),
        SetOp::Distance => a.distance_composite(),
        SetOp::Negate => a.negate(),
        SetOp::Inverse => a.inverse_set(),
        SetOp::Normalize => a.normalize().map_err(map_err)?,
        SetOp::Dilate => a.dilate(by_elem(by)?),
        SetOp::Translate => a.translate(by_elem(by)?),
    };
    Ok(set_rendered(result))
}

fn witness_json(label: &CaseLabel) -> Value {
    match label.witness() {
        None => Value::Null,
        Some(w) => json!({
            "n1": w.n1.0, "n2": w.n2.0,
            "d1": w.d1.0, "d2": w.d2.0,
            "multiplier": w.multiplier.map(|m| m.0),
            "r": w.r.0,
        }),
    }
}

fn cmd_classify(input: &FileArg, rhs: &Option<PathBuf>, normalize: bool) -> CliResult<Rendered> {
    let mut a = input.load()?;
    if normalize && rhs.is_some() {
        return usage("--normalize cannot be combined with --rhs");
    }
    if normalize {
        a = a
            .normalize()
            .map_err(|e| Failure::Usage(format!("--normalize: {e}")))?;
    }
    let (label, numer, denom, mult) = match rhs {
        None => {
            let label = classify_case(&a).map_err(|e| Failure::Usage(format!("classify: {e}")))?;
            (label, a.clone(), a.clone(), a.clone())
        }
        Some(path) => {
            let y = load_rhs(path)?;
            let label =
                classify_case_xy(&a, &y).map_err(|e| Failure::Usage(format!("classify: {e}")))?;
            (label, y.clone(), a.clone(), y)
        }
    };
    let verified = verify_case(&label, &numer, &denom, &mult)
        .map_err(|e| Failure::Usage(format!("classify: {e}")))?;
    if !verified {
        return Err(Failure::Invariant(format!(
            "classification witness failed to verify: {label}"
        )));
    }
    let r_size = ratio_set(&numer, &denom)
        .map_err(|e| Failure::Usage(format!("classify: {e}")))?
        .len();
    let text = format!("{label}\nratio set size = {r_size}\nwitness verified = true");
    let json = json!({
        "case": label.name(),
        "witness": witness_json(&label),
        "ratio_set_size": r_size,
        "witness_verified": true,
    });
    Ok(Rendered {
        text,
        json,
        csv: None,
    })
}

fn hypothesis_json(rep: &HypothesisReport) -> Value {
    json!({
        "theorem": rep.theorem,
        "pass": rep.pass,
        "checked": rep.checked,
        "violation": rep.violation.as_ref().map(|v| json!({
            "subfield_degree": v.subfield_degree,
            "subfield_size": v.subfield_size,
            "a": v.a.0,
            "b": v.b.0,
            "intersection": v.intersection,
        })),
    })
}

fn cmd_hypothesis(theorem: u8, input: &FileArg, normalize: bool) -> CliResult<Rendered> {
    let mut a = input.load()?;
    if normalize {
        a = a
            .normalize()
            .map_err(|e| Failure::Usage(format!("--normalize: {e}")))?;
    }
    let rep = match theorem {
        1 => check_hypothesis_thm1(&a),
        _ => check_hypothesis_thm2(&a),
    };
    Ok(Rendered {
        text: rep.to_string(),
        json: hypothesis_json(&rep),
        csv: None,
    })
}

fn cmd_energy(
    input: &FileArg,
    mixed: bool,
    rhs: &Option<PathBuf>,
    histogram: bool,
) -> CliResult<Rendered> {
    let a = input.load()?;
    let rep = if mixed {
        let b = match rhs {
            Some(path) => load_rhs(path)?,
            None => a
                .sumset(&a)
                .map_err(|e| Failure::Usage(format!("energy: {e}")))?,
        };
        mixed_energy(&a, &b).map_err(|e| Failure::Usage(format!("energy: {e}")))?
    } else {
        let y = match rhs {
            Some(path) => load_rhs(path)?,
            None => a.clone(),
        };
        additive_energy(&a, &y).map_err(|e| Failure::Usage(format!("energy: {e}")))?
    };
    let mut text = rep.to_string();
    if histogram {
        for (t, c) in rep.histogram.support() {
            text.push_str(&format!("\n  r({t}) = {c}"));
        }
    }
    let json = serde_json::to_value(&rep)
        .map_err(|e| Failure::Usage(format!("serialization failed: {e}")))?;
    Ok(Rendered {
        text,
        json,
        csv: None,
    })
}

fn cmd_ratio_sum(input: &FileArg) -> CliResult<Rendered> {
    let a = input.load()?;
    let rep = energy_sum_over_ratios(&a).map_err(|e| Failure::Usage(format!("ratio-sum: {e}")))?;
    let json = json!({
        "sum": rep.sum.to_string(),
        "bound": rep.bound.to_string(),
        "ratio_set_size": rep.ratio_set_size,
        "witness_r": rep.witness_r.0,
        "witness_energy": rep.witness_energy.to_string(),
    });
    Ok(Rendered {
        text: rep.to_string(),
        json,
        csv: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_lemma(
    which: &str,
    input: &FileArg,
    x: &Option<PathBuf>,
    bs: &[PathBuf],
    rhs: &Option<PathBuf>,
    eps: &str,
    exact: bool,
    csv_path: &Option<PathBuf>,
) -> CliResult<Rendered> {
    let a = input.load()?;
    let eps = parse_fraction(eps)?;
    if csv_path.is_some() && which != "3.2" {
        return usage("--csv: per-element cover counts exist only for --which 3.2");
    }
    let load_x = || -> CliResult<FSet> {
        match x {
            Some(path) => setfile::read_set(path)
                .map_err(|e| Failure::Usage(format!("--x {}: {e}", path.display()))),
            None => Ok(a.clone()),
        }
    };
    let load_bs = || -> CliResult<Vec<FSet>> {
        if bs.is_empty() {
            return Ok(vec![a.clone(), a.clone()]);
        }
        bs.iter()
            .map(|path| {
                setfile::read_set(path)
                    .map_err(|e| Failure::Usage(format!("--bs {}: {e}", path.display())))
            })
            .collect()
    };
    match which {
        "2.1" => {
            let rep = plunnecke_check(&load_x()?, &load_bs()?)
                .map_err(|e| Failure::Usage(format!("lemma 2.1: {e}")))?;
            if !rep.holds {
                return Err(Failure::Invariant(format!("Plünnecke violated: {rep}")));
            }
            let json = json!({
                "lemma": "2.1",
                "lhs": rep.lhs,
                "rhs_num": rep.rhs_num.to_string(),
                "rhs_den": rep.rhs_den.to_string(),
                "holds": rep.holds,
                "difference": rep.difference.as_ref().map(|d| json!({
                    "lhs": d.lhs,
                    "rhs_num": d.rhs_num.to_string(),
                    "rhs_den": d.rhs_den.to_string(),
                    "holds": d.holds,
                })),
            });
            Ok(Rendered {
                text: rep.to_string(),
                json,
                csv: None,
            })
        }
        "2.2" => {
            let x = load_x()?;
            let bs = load_bs()?;
            let rep = if exact {
                katz_shen_search_exact(&x, &bs, eps)
            } else {
                katz_shen_search(&x, &bs, eps)
            }
            .map_err(|e| Failure::Usage(format!("lemma 2.2: {e}")))?;
            let json = json!({
                "lemma": "2.2",
                "witness": rep.witness.iter().map(|e| e.0).collect::<Vec<_>>(),
                "witness_sumset_size": rep.witness_sumset_size,
                "c_measured": rep.c_measured.to_string(),
                "exact": rep.exact,
            });
            let text = format!("{rep}\nwitness X' = {}", rep.witness);
            Ok(Rendered {
                text,
                json,
                csv: None,
            })
        }
        "2.4" => {
            let y = match rhs {
                Some(path) => load_rhs(path)?,
                None => a.clone(),
            };
            let rep =
                greedy_cover(&a, &y, eps).map_err(|e| Failure::Usage(format!("lemma 2.4: {e}")))?;
            let json = json!({
                "lemma": "2.4",
                "count": rep.count,
                "translates": rep.translates.iter().map(|t| t.0).collect::<Vec<_>>(),
                "covered_fraction": ratio_str(rep.covered_fraction),
                "bound": ratio_str(rep.bound),
                "measured_constant": ratio_str(rep.ratio_to_bound()),
            });
            let text = format!(
                "{rep}\ntranslates = [{}]",
                rep.translates
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            Ok(Rendered {
                text,
                json,
                csv: None,
            })
        }
        "3.2" => {
            let profile = lemma32_cover_profile(&a, eps)
                .map_err(|e| Failure::Usage(format!("lemma 3.2: {e}")))?;
            let mut rows_csv = String::from("kind,base_point,target_size,count,covered_fraction\n");
            for (kind, rows) in [("b", &profile.b_rows), ("a", &profile.a_rows)] {
                for row in rows {
                    rows_csv.push_str(&format!(
                        "{kind},{},{},{},{}\n",
                        row.base_point,
                        row.target_size,
                        row.count,
                        ratio_str(row.covered_fraction)
                    ));
                }
            }
            if let Some(path) = csv_path {
                std::fs::write(path, &rows_csv)
                    .map_err(|e| Failure::Usage(format!("--csv {}: {e}", path.display())))?;
            }
            let rows_json = |rows: &[crate::lemmas::CoverProfileRow]| -> Vec<Value> {
                rows.iter()
                    .map(|r| {
                        json!({
                            "base_point": r.base_point.0,
                            "target_size": r.target_size,
                            "count": r.count,
                            "covered_fraction": ratio_str(r.covered_fraction),
                        })
                    })
                    .collect()
            };
            let json = json!({
                "lemma": "3.2",
                "set_size": profile.set_size,
                "sumset_size": profile.sumset_size,
                "threshold": profile.threshold,
                "y_star": profile.y_star,
                "y_star_sized": profile.y_star_sized,
                "x_star": profile.x_star,
                "x_star_sized": profile.x_star_sized,
                "x_star_ratio": profile.x_star_ratio,
                "y_star_ratio": profile.y_star_ratio,
                "b_rows": rows_json(&profile.b_rows),
                "a_rows": rows_json(&profile.a_rows),
            });
            Ok(Rendered {
                text: profile.to_string(),
                json,
                csv: Some(rows_csv),
            })
        }
        other => usage(format!(
            "--which: unknown lemma '{other}' (expected 2.1, 2.2, 2.4 or 3.2)"
        )),
    }
}

fn record_json(rec: &GrowthRecord) -> Value {
    json!({
        "p": rec.p, "k": rec.k, "q": rec.q,
        "model": rec.model,
        "seed": rec.seed,
        "n": rec.n,
        "size_sum": rec.size_sum,
        "size_sq_sum": rec.size_sq_sum,
        "size_shift": rec.size_shift,
        "delta": rec.delta,
        "hyp1": rec.hyp1,
        "hyp2": rec.hyp2,
        "case": rec.case.as_ref().map(|c| c.name()),
        "exp_sum": rec.exp_sum,
        "exp_sq_sum": rec.exp_sq_sum,
        "exp_shift": rec.exp_shift,
        "exp_delta": rec.exp_delta,
        "cs": {
            "lhs": rec.cs.lhs.to_string(),
            "rhs": rec.cs.rhs.to_string(),
            "energy": rec.cs.energy.to_string(),
            "holds": rec.cs.holds,
            "epsilon": rec.cs.epsilon,
        },
    })
}

fn cmd_measure(input: &FileArg) -> CliResult<Rendered> {
    let a = input.load()?;
    if a.is_empty() {
        return usage("--file: cannot measure the empty set");
    }
    let rec = measure(&a);
    if !rec.cs.holds {
        return Err(Failure::Invariant(format!(
            "Cauchy-Schwarz growth inequality violated: {}",
            rec.cs
        )));
    }
    let csv = format!("{}\n{}\n", GrowthRecord::CSV_HEADER, rec.csv_row());
    Ok(Rendered {
        text: rec.to_string(),
        json: record_json(&rec),
        csv: Some(csv),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    model: &str,
    p: u64,
    k: u32,
    modulus: &Option<String>,
    n: &str,
    trials: usize,
    seed: u64,
    coset_degree: Option<u32>,
    coset_dilate: Option<u32>,
) -> CliResult<Rendered> {
    let field = field_from_flags(p, k, modulus)?;
    let mut model = GenModel::parse(model).map_err(|e| Failure::Usage(format!("--model: {e}")))?;
    if let GenModel::SubfieldCoset { degree, dilate } = &mut model {
        *degree = coset_degree;
        *dilate = coset_dilate;
    } else if coset_degree.is_some() || coset_dilate.is_some() {
        return usage("--coset-degree/--coset-dilate apply only to --model subfield_coset");
    }
    let (n_lo, n_hi) = parse_range(n)?;
    let report = sweep(&field, &model, n_lo, n_hi, trials, seed)
        .map_err(|e| Failure::Usage(format!("sweep: {e}")))?;

    let mut csv = String::from(GrowthRecord::CSV_HEADER);
    csv.push('\n');
    for rec in &report.records {
        csv.push_str(&rec.csv_row());
        csv.push('\n');
    }
    let text = format!("{csv}# {}", report.summary);
    let json = json!({
        "records": report.records.iter().map(record_json).collect::<Vec<_>>(),
        "summary": {
            "total": report.summary.total,
            "hyp1_passing": report.summary.hyp1_passing,
            "delta_fraction": report.summary.delta_fraction(),
            "maxpair_fraction": report.summary.maxpair_fraction(),
            "shift_fraction": report.summary.shift_fraction(),
        },
    });
    Ok(Rendered {
        text,
        json,
        csv: Some(csv),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    objective: &str,
    p: u64,
    k: u32,
    modulus: &Option<String>,
    n: usize,
    iters: usize,
    seed: u64,
    hypothesis: u8,
) -> CliResult<Rendered> {
    let field = field_from_flags(p, k, modulus)?;
    let objective =
        Objective::parse(objective).map_err(|e| Failure::Usage(format!("--objective: {e}")))?;
    let filter = if hypothesis == 1 {
        HypothesisFilter::Thm1
    } else {
        HypothesisFilter::Thm2
    };
    let state = extremal_search(&field, n, iters, seed, objective, filter)
        .map_err(|e| Failure::Usage(format!("search: {e}")))?;
    let json = json!({
        "objective": state.objective.name(),
        "seed": state.seed,
        "iterations": state.iterations,
        "accepted": state.accepted,
        "rejected_by_hypothesis": state.rejected_by_hypothesis,
        "best_objective": state.best_objective,
        "best_set": state.best_set.iter().map(|e| e.0).collect::<Vec<_>>(),
        "best_record": record_json(&state.best),
    });
    Ok(Rendered {
        text: state.to_string(),
        json,
        csv: None,
    })
}
