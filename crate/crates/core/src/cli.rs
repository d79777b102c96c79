//! Command-line front end. Every run is a pure function of its flags and
//! input files.
//!
//! Exit codes: 0 success, 1 input error, 2 field too small, 3 guarantee
//! violated, 4 Gröbner budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::constructions::{
    affine_main_family, basic_family, chow_family, epsilon_hitting_set, main_family, maps_to_text, noether_maps,
    parse_eps, parse_family, projective_noether_maps, rank_extractor_family, ConstructionError, Eps, FamilyParams,
    Kind, SubspaceFamily,
};
use crate::field::FieldConfig;
use crate::groebner::{
    finiteness_check_with_budget, parse_variety, projection_is_finite, GroebnerError, VarietySpec, DEFAULT_PAIR_BUDGET,
};
use crate::verify::{
    family_failure_fraction_with_budget, gen_affine_arrangement, gen_linear_arrangement, gen_rational_normal_curve,
    Oracle, VerifyError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FIELD_TOO_SMALL: i32 = 2;
pub const EXIT_GUARANTEE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "evasive", version, about = "Explicit variety-evasive subspace families over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an evasive subspace family
    Construct(ConstructArgs),
    /// Build an epsilon-hitting set for bounded individual degree
    HittingSet(HittingSetArgs),
    /// Build a rank-extractor family
    RankExtractor(RankExtractorArgs),
    /// Build candidate Noether normalization maps
    Noether(NoetherArgs),
    /// Count the members of a family that fail to evade a variety
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Field characteristic (default 2^61 - 1)
    #[arg(long)]
    pub prime: Option<u64>,
    /// Output file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact family of size (nd+1)^(n-k)
    Basic,
    /// eps-family from sample sets indexed by a hitting set
    Chow,
    /// eps-family with ambient reduction when it pays off
    Main,
    /// Strongly evasive affine family (exact without --eps)
    Affine,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
    /// Failure bound as an exact rational "a/b"
    #[arg(long, value_parser = eps_arg)]
    pub eps: Option<Eps>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct HittingSetArgs {
    /// Number of variables
    #[arg(long)]
    pub m: usize,
    /// Individual degree bound
    #[arg(long)]
    pub ideg: usize,
    #[arg(long, value_parser = eps_arg)]
    pub eps: Eps,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct RankExtractorArgs {
    #[arg(long)]
    pub n: usize,
    /// Dimension of the subspaces to be missed
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_parser = eps_arg)]
    pub eps: Option<Eps>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct NoetherArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Target dimension
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_parser = eps_arg)]
    pub eps: Option<Eps>,
    /// Emit projections P^n --> P^r instead of maps A^n -> A^r
    #[arg(long)]
    pub projective: bool,
    /// Variety file to run the finiteness check on
    #[arg(long)]
    pub check: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["variety", "arrangement", "curve"])))]
pub struct VerifyArgs {
    /// Family file written by `construct` or `rank-extractor`
    #[arg(long)]
    pub family: PathBuf,
    /// Variety file
    #[arg(long)]
    pub variety: Option<PathBuf>,
    /// Generate a seeded arrangement of subspaces of this dimension instead
    #[arg(long)]
    pub arrangement: Option<usize>,
    /// Number of components of the generated arrangement
    #[arg(long, default_value_t = 1, requires = "arrangement")]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the rational normal curve of the family's ambient space
    #[arg(long)]
    pub curve: bool,
    #[arg(long, value_enum, default_value_t = OracleArg::Groebner)]
    pub oracle: OracleArg,
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: usize,
    /// Report file (default: stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleArg {
    Linalg,
    Curve,
    Groebner,
}

impl From<OracleArg> for Oracle {
    fn from(o: OracleArg) -> Self {
        match o {
            OracleArg::Linalg => Oracle::Linalg,
            OracleArg::Curve => Oracle::Curve,
            OracleArg::Groebner => Oracle::Groebner,
        }
    }
}

fn eps_arg(s: &str) -> Result<Eps, String> {
    parse_eps(s).map_err(|e| e.to_string())
}

/// A failed run: exit code and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::FieldTooSmall { .. } => EXIT_FIELD_TOO_SMALL,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        let code = match e {
            GroebnerError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Groebner(g) => g.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

/// What a successful run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub summary: String,
    pub guarantee_met: bool,
}

fn field(prime: Option<u64>) -> Result<FieldConfig, Failure> {
    match prime {
        None => Ok(FieldConfig::default()),
        Some(p) => FieldConfig::new(p).map_err(|e| Failure::input(e.to_string())),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn family_summary(f: &SubspaceFamily) -> String {
    format!(
        "{}: branch {}, {} members ({} degenerate), n={} k={} eps={}",
        f.construction(),
        f.branch(),
        f.len(),
        f.degenerate_count(),
        f.params().n,
        f.params().k,
        f.eps().map_or_else(|| "none".into(), |e| e.to_string())
    )
}

fn family_outcome(f: SubspaceFamily) -> Outcome {
    Outcome { summary: family_summary(&f), document: f.to_text(), guarantee_met: true }
}

pub fn run_construct(a: &ConstructArgs) -> Result<Outcome, Failure> {
    let f = field(a.common.prime)?;
    let mut params = FamilyParams::new(a.n, a.d, a.k)?;
    if let Some(e) = a.eps {
        params = params.with_eps(e)?;
    }
    let fam = match (a.mode, a.eps) {
        (Mode::Basic, None) => basic_family(&params, &f)?,
        (Mode::Basic, Some(_)) => return Err(Failure::input("the basic family is exact; drop --eps")),
        (Mode::Chow | Mode::Main, None) => return Err(Failure::input("this mode needs --eps")),
        (Mode::Chow, Some(_)) => chow_family(&params, &f)?,
        (Mode::Main, Some(_)) => main_family(&params, &f)?,
        (Mode::Affine, None) => basic_family(&params.affine(), &f)?,
        (Mode::Affine, Some(_)) => affine_main_family(&params.affine(), &f)?,
    };
    Ok(family_outcome(fam))
}

pub fn run_hitting_set(a: &HittingSetArgs) -> Result<Outcome, Failure> {
    let f = field(a.common.prime)?;
    let h = epsilon_hitting_set(a.m, a.ideg, a.eps, &f)?;
    Ok(Outcome {
        summary: format!("epsilon-hitting-set: {} points, m={} ideg={} eps={}", h.len(), a.m, a.ideg, a.eps),
        document: h.to_text(),
        guarantee_met: true,
    })
}

pub fn run_rank_extractor(a: &RankExtractorArgs) -> Result<Outcome, Failure> {
    let f = field(a.common.prime)?;
    Ok(family_outcome(rank_extractor_family(a.n, a.m, a.eps, &f)?))
}

pub fn run_noether(a: &NoetherArgs) -> Result<Outcome, Failure> {
    let f = field(a.common.prime)?;
    let variety = a.check.as_deref().map(|p| parse_variety(&read(p)?, f.prime()).map_err(Failure::from)).transpose()?;
    let (kind, maps) = if a.projective {
        (Kind::Projective, projective_noether_maps(a.n, a.d, a.r, a.eps, &f)?)
    } else {
        (Kind::Affine, noether_maps(a.n, a.d, a.r, a.eps, &f)?)
    };
    let document = maps_to_text(&maps, kind, a.n, a.d, a.r, a.eps, f.prime());
    let sp = if a.projective { "P" } else { "A" };
    let mut summary = format!("noether: {} maps {sp}^{} -> {sp}^{}", maps.len(), a.n, a.r);
    let mut guarantee_met = true;
    if let Some(v) = variety {
        if v.ambient().is_projective() != a.projective || v.ambient().n() != a.n {
            return Err(Failure::input(format!("--check needs a variety in {sp}^{}", a.n)));
        }
        let verdicts: Result<Vec<bool>, GroebnerError> = maps
            .par_iter()
            .map(|m| {
                if a.projective {
                    projection_is_finite(&v, &m.rows, a.budget)
                } else {
                    finiteness_check_with_budget(&v, &m.rows, a.budget)
                }
            })
            .collect();
        let passing = verdicts?.into_iter().filter(|&b| b).count();
        summary.push_str(&format!("; finite on the variety: {passing}/{}", maps.len()));
        // the guarantee covers varieties of dimension r and degree at most d
        let in_scope =
            v.components().iter().map(|c| c.claimed_dim).max() == Some(a.r as i64) && v.total_degree() <= a.d as u64;
        if in_scope && !maps.is_empty() {
            guarantee_met = match a.eps {
                Some(e) => Eps::new(passing as u64, maps.len() as u64) >= Eps::from_integer(1) - e,
                None => passing >= 1,
            };
        }
    }
    Ok(Outcome { document, summary, guarantee_met })
}

fn verify_variety(a: &VerifyArgs, fam: &SubspaceFamily) -> Result<VarietySpec, Failure> {
    let p = fam.params();
    let f = FieldConfig::new(fam.prime()).map_err(|e| Failure::input(e.to_string()))?;
    if let Some(path) = &a.variety {
        let v = parse_variety(&read(path)?, fam.prime())?;
        if v.components().is_empty() {
            return Err(Failure::input("the variety has no components"));
        }
        return Ok(v);
    }
    if let Some(dim) = a.arrangement {
        if dim >= p.n || a.count == 0 {
            return Err(Failure::input(format!(
                "an arrangement needs 1 or more components of dimension below {}",
                p.n
            )));
        }
        return Ok(match p.kind {
            Kind::Projective => gen_linear_arrangement(p.n, dim, a.count, a.seed, &f),
            Kind::Affine => gen_affine_arrangement(p.n, dim, a.count, a.seed, &f),
        });
    }
    if p.n < 1 || p.kind != Kind::Projective {
        return Err(Failure::input("the rational normal curve needs a projective family"));
    }
    Ok(gen_rational_normal_curve(p.n, &f))
}

pub fn run_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let fam = parse_family(&read(&a.family)?)?;
    let v = verify_variety(a, &fam)?;
    let report = family_failure_fraction_with_budget(&fam, &v, a.oracle.into(), a.budget)?;
    Ok(Outcome {
        summary: format!(
            "verify: {} of {} members fail against {} ({} oracle), guarantee {}",
            report.failing(),
            report.total(),
            report.variety_id,
            report.oracle,
            if report.meets_guarantee() { "met" } else { "violated" }
        ),
        guarantee_met: report.meets_guarantee(),
        document: report.to_text(),
    })
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Construct(a) => run_construct(a),
        Command::HittingSet(a) => run_hitting_set(a),
        Command::RankExtractor(a) => run_rank_extractor(a),
        Command::Noether(a) => run_noether(a),
        Command::Verify(a) => run_verify(a),
    }
}

fn out_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Construct(a) => a.common.out.as_deref(),
        Command::HittingSet(a) => a.common.out.as_deref(),
        Command::RankExtractor(a) => a.common.out.as_deref(),
        Command::Noether(a) => a.common.out.as_deref(),
        Command::Verify(a) => a.out.as_deref(),
    }
}

/// Parses arguments, runs, writes outputs and returns the exit code. The
/// document goes to `--out` (summary on stdout) or to stdout (summary on
/// stderr).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(o) => {
            match out_path(&cli) {
                Some(path) => {
                    if let Err(e) = fs::write(path, &o.document) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_INPUT;
                    }
                    println!("{}", o.summary);
                }
                None => {
                    print!("{}", o.document);
                    eprintln!("{}", o.summary);
                }
            }
            if o.guarantee_met {
                EXIT_OK
            } else {
                eprintln!("error: guarantee violated");
                EXIT_GUARANTEE
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("evasive").chain(args.iter().copied())).unwrap()
    }

    fn run_args(args: &[&str]) -> Result<Outcome, Failure> {
        run(&parse(args))
    }

    #[test]
    fn construct_examples() {
        let o = run_args(&["construct", "--mode", "basic", "--n", "3", "--d", "2", "--k", "1"]).unwrap();
        assert!(o.summary.contains("49 members"), "{}", o.summary);
        let o = run_args(&["construct", "--mode", "main", "--n", "3", "--d", "2", "--k", "1", "--eps", "1/2"]).unwrap();
        assert!(o.document.contains("branch direct\n"));
        let e = run_args(&["construct", "--mode", "basic", "--n", "2", "--d", "1", "--k", "1", "--prime", "3"])
            .unwrap_err();
        assert_eq!(e.code, EXIT_FIELD_TOO_SMALL);
        assert!(e.message.contains('3'));
        let e = run_args(&["construct", "--mode", "chow", "--n", "2", "--d", "1", "--k", "1"]).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);
        let e = run_args(&["construct", "--mode", "basic", "--n", "2", "--d", "1", "--k", "2"]).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);
    }

    #[test]
    fn eps_must_be_rational() {
        let args = ["evasive", "construct", "--mode", "chow", "--n", "2", "--d", "1", "--k", "0", "--eps", "0.5"];
        assert!(Cli::try_parse_from(args).is_err());
        assert_eq!(main_with_args(args), EXIT_INPUT);
        assert_eq!(main_with_args(["evasive", "frobnicate"]), EXIT_INPUT);
    }

    #[test]
    fn noether_identity() {
        let o = run_args(&["noether", "--n", "2", "--d", "2", "--r", "2"]).unwrap();
        assert!(o.document.contains("maps 1\nmap 0\nindex \nrow 1 0\nrow 0 1\n"), "{}", o.document);
        let o = run_args(&["noether", "--n", "1", "--d", "2", "--r", "0", "--projective", "--prime", "101"]).unwrap();
        assert!(o.document.contains("kind projective\n"));
        assert!(o.summary.starts_with("noether: 3 maps P^1 -> P^0"), "{}", o.summary);
    }
}
