mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfmatroid::acceptance::{self, DEFAULT_SEED};
use pfmatroid::blockseq::{bridge_uncrossed_2seps, find_blocking_sequence, two_separations, uncrossed_2seps, BlockingOutcome};
use pfmatroid::decomp::branch_width;
use pfmatroid::fragility::classify;
use pfmatroid::incrim::certify_pipeline;
use pfmatroid::matroid::{catalog_entry, catalog_names, has_minor, is_isomorphic, Matroid};
use pfmatroid::pfield::PartialField;
use pfmatroid::pmatrix::LabeledMatrix;
use pfmatroid::reptheory::{enumerate_representations, stabilizes_all_embeddings, Level};
use pfmatroid::{Error, Result};

#[derive(Parser)]
#[command(name = "mwb", version, about = "Matroid workbench: representations over partial fields, connectivity and excluded-minor certificates")]
struct Cli {
    /// Worker threads for parallel searches; reports do not depend on it
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Source {
    /// Catalog member, e.g. F7, U24, whirl3, F7-*
    #[arg(long)]
    catalog: Option<String>,
    /// Matroid or matrix text file
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn matroid(&self) -> Result<(String, Matroid)> {
        input::matroid(self.catalog.as_deref(), self.file.as_deref())
    }

    fn matrix(&self) -> Result<(String, LabeledMatrix)> {
        input::matrix(self.catalog.as_deref(), self.file.as_deref())
    }
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Partial field: gf2, gf3, gf4, gf5, gf7, gf8, regular, dyadic, sixthroots, nearregular
    #[arg(long)]
    field: Option<String>,
    /// Exponent bound for partial fields with infinitely many units
    #[arg(long)]
    bound: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a partial field and canonicalize element literals
    Pf {
        #[command(flatten)]
        field: FieldArgs,
        values: Vec<String>,
    },
    /// Matrix operations
    Matrix {
        #[command(subcommand)]
        action: MatrixAction,
    },
    /// Matroid operations
    Matroid {
        #[command(subcommand)]
        action: MatroidAction,
    },
    /// Exact branch width
    Bw {
        #[command(flatten)]
        source: Source,
        /// Also print the decomposition
        #[arg(long)]
        dump: bool,
    },
    /// List k-separations
    Seps {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Only 2-separations crossed by no other
        #[arg(long)]
        uncrossed: bool,
    },
    /// Blocking sequence for a separation of M_B[Z1+Z2], or bridging of M_B[E']
    Blockseq {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        basis: String,
        #[arg(long)]
        z1: Option<String>,
        #[arg(long)]
        z2: Option<String>,
        /// Bridge every uncrossed 2-separation of M_B[E'] instead
        #[arg(long)]
        eprime: Option<String>,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Contractible, deletable and essential elements
    Fragility {
        #[command(flatten)]
        source: Source,
        /// Catalog names of the minors, comma separated
        #[arg(long, default_value = "U24", value_delimiter = ',')]
        minor: Vec<String>,
    },
    /// Enumerate representations up to equivalence
    Reps {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "scaling")]
        level: String,
    },
    /// Decide whether a minor stabilizes the matroid, over every embedding
    Stab {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "U24")]
        minor: String,
    },
    /// Run the incriminating-set certificate pipeline
    Pipeline {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value = "U24")]
        minor: String,
    },
    /// List catalog members, or print one
    Catalog { name: Option<String> },
    /// Run the acceptance suite
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand)]
enum MatrixAction {
    /// Print the matrix in text form
    Show(Source),
    /// P-matrix test and entries outside the partial field
    Check(Source),
    /// Pivot on the entry in row x and column y
    Pivot {
        #[command(flatten)]
        source: Source,
        x: String,
        y: String,
    },
    /// Scale to 1 on the canonical spanning forest
    Normalize(Source),
    /// The matrix of the dual
    Dual(Source),
    /// The matroid the matrix represents
    Matroid(Source),
}

#[derive(Subcommand)]
enum MatroidAction {
    /// Size, rank, basis count and connectivity
    Info(Source),
    /// Print the matroid in text form
    Show(Source),
    Dual(Source),
    /// The minor M / contract \ delete
    Minor {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Whether a catalog matroid is a minor
    HasMinor {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        minor: String,
    },
    /// Isomorphism test against a catalog matroid
    Iso {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        other: String,
    },
}

/// Text to print and whether the answer was affirmative.
struct Report {
    text: String,
    affirmative: bool,
}

impl Report {
    fn yes(text: String) -> Self {
        Report { text, affirmative: true }
    }

    fn answer(text: String, affirmative: bool) -> Self {
        Report { text, affirmative }
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A set as concatenated labels, or `none`.
fn word(m: &Matroid, s: pfmatroid::bits::Set) -> String {
    if s == 0 {
        "none".into()
    } else {
        m.word(s)
    }
}

fn pf(args: &FieldArgs, values: &[String]) -> Result<Report> {
    let id = input::field(args.field.as_deref())?;
    let f = PartialField::new(id)?;
    let mut out = String::new();
    writeln!(out, "field: {id}").ok();
    writeln!(out, "finite: {}", yn(id.is_finite())).ok();
    writeln!(out, "finite-units: {}", yn(id.has_finite_units())).ok();
    let bound = args.bound.unwrap_or(1);
    let units = f.units(bound)?;
    let label = if id.has_finite_units() { "units".to_string() } else { format!("units (exponents within {bound})") };
    writeln!(out, "{label}: {}", units.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).ok();
    writeln!(out, "automorphisms: {}", f.automorphisms().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).ok();
    writeln!(out, "homomorphisms: {}", f.homomorphisms().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).ok();
    let mut all_members = true;
    for v in values {
        let x = f.parse(v)?;
        let inv = x.inv().map(|i| i.to_string()).unwrap_or_else(|_| "none".into());
        all_members &= x.is_member();
        writeln!(out, "value {v}: {x} member={} unit={} inverse={inv}", yn(x.is_member()), yn(x.is_unit())).ok();
    }
    Ok(Report::answer(out, all_members))
}

fn matrix(action: &MatrixAction) -> Result<Report> {
    match action {
        MatrixAction::Show(s) => {
            let (name, a) = s.matrix()?;
            Ok(Report::yes(a.to_text(&name)))
        }
        MatrixAction::Check(s) => {
            let (name, a) = s.matrix()?;
            let cert = a.is_pmatrix();
            let mut out = format!("matrix: {name}\npmatrix: {}\n", yn(cert.verdict));
            if let (Some((r, c)), Some(d)) = (&cert.witness, &cert.witness_det) {
                writeln!(out, "witness: {} x {} det {d}", r.concat(), c.concat()).ok();
            }
            let mut flagged = Vec::new();
            for (i, x) in a.rows().iter().enumerate() {
                for (j, y) in a.cols().iter().enumerate() {
                    let v = a.get(i, j);
                    if !v.is_member() {
                        flagged.push(format!("{x},{y}={v}"));
                    }
                }
            }
            let ok = cert.verdict && flagged.is_empty();
            writeln!(out, "non-unit-entries: {}", if flagged.is_empty() { "none".into() } else { flagged.join(" ") }).ok();
            Ok(Report::answer(out, ok))
        }
        MatrixAction::Pivot { source, x, y } => {
            let (name, a) = source.matrix()?;
            Ok(Report::yes(a.pivot(x, y)?.to_text(&format!("{name}^{x}{y}"))))
        }
        MatrixAction::Normalize(s) => {
            let (name, a) = s.matrix()?;
            Ok(Report::yes(a.normal_form()?.to_text(&name)))
        }
        MatrixAction::Dual(s) => {
            let (name, a) = s.matrix()?;
            Ok(Report::yes(a.dual().to_text(&format!("{name}*"))))
        }
        MatrixAction::Matroid(s) => {
            let (name, a) = s.matrix()?;
            Ok(Report::yes(Matroid::from_pmatrix(&a)?.to_text(&name)))
        }
    }
}

fn info(name: &str, m: &Matroid) -> String {
    let conn = match m.connectivity_degree() {
        3 => "3-connected".to_string(),
        k => format!("{k}-connected, not 3-connected"),
    };
    format!(
        "matroid: {name}\nelements: {}\nrank: {}\nbases: {}\nconnectivity: {conn}\n",
        m.len(),
        m.rank(),
        m.bases().len()
    )
}

fn matroid(action: &MatroidAction) -> Result<Report> {
    match action {
        MatroidAction::Info(s) => {
            let (name, m) = s.matroid()?;
            Ok(Report::yes(info(&name, &m)))
        }
        MatroidAction::Show(s) => {
            let (name, m) = s.matroid()?;
            Ok(Report::yes(m.to_text(&name)))
        }
        MatroidAction::Dual(s) => {
            let (name, m) = s.matroid()?;
            Ok(Report::yes(m.dual().to_text(&format!("{name}*"))))
        }
        MatroidAction::Minor { source, contract, delete } => {
            let (name, m) = source.matroid()?;
            let (c, d) = (input::set(&m, contract)?, input::set(&m, delete)?);
            let n = m.minor(c, d)?;
            Ok(Report::yes(n.to_text(&format!("{name}/{}\\{}", m.word(c), m.word(d)))))
        }
        MatroidAction::HasMinor { source, minor } => {
            let (name, m) = source.matroid()?;
            let n = input::minor(minor)?;
            let found = has_minor(&m, &n);
            Ok(Report::answer(format!("{name} has a {minor} minor: {}\n", yn(found)), found))
        }
        MatroidAction::Iso { source, other } => {
            let (name, m) = source.matroid()?;
            let n = input::minor(other)?;
            let map = is_isomorphic(&m, &n);
            let mut out = format!("{name} isomorphic to {other}: {}\n", yn(map.is_some()));
            if let Some(p) = &map {
                let pairs: Vec<String> = p.iter().enumerate().map(|(i, &j)| format!("{}->{}", m.label(i), n.label(j))).collect();
                writeln!(out, "map: {}", pairs.join(" ")).ok();
            }
            Ok(Report::answer(out, map.is_some()))
        }
    }
}

fn seps(source: &Source, k: usize, uncrossed: bool) -> Result<Report> {
    let (name, m) = source.matroid()?;
    let list = if uncrossed {
        if k != 2 {
            return Err(Error::Precondition("--uncrossed applies to 2-separations only".into()));
        }
        uncrossed_2seps(&m)
    } else if k == 2 {
        two_separations(&m)
    } else {
        m.separations(k)
    };
    let mut out = format!("matroid: {name}\nk: {k}\ncount: {}\n", list.len());
    for s in &list {
        writeln!(out, "{} | {} (lambda {})", m.word(s.part1), m.word(s.part2), s.order).ok();
    }
    Ok(Report::yes(out))
}

fn blockseq(source: &Source, basis: &str, z: (Option<&str>, Option<&str>), eprime: Option<&str>, k: usize) -> Result<Report> {
    let (name, m) = source.matroid()?;
    let b = input::set(&m, basis)?;
    let mut out = format!("matroid: {name}\nB: {}\n", m.word(b));
    if let Some(e) = eprime {
        let e = input::set(&m, e)?;
        let r = bridge_uncrossed_2seps(&m, b, e)?;
        writeln!(out, "start: {}\nrounds: {}", m.word(r.start), r.rounds.len()).ok();
        for (i, round) in r.rounds.iter().enumerate() {
            let seq: Vec<&str> = round.sequence.iter().map(|&x| m.label(x)).collect();
            writeln!(
                out,
                "round {}: separation {} | {} sequence {} 2-separations {} -> {} branch-width {} -> {}",
                i + 1,
                m.word(round.z1),
                m.word(round.z2),
                seq.join(" "),
                round.seps_before,
                round.seps_after,
                round.bw_before,
                round.bw_after
            )
            .ok();
        }
        writeln!(out, "result: {}", m.word(r.result)).ok();
        return Ok(Report::yes(out));
    }
    let (Some(z1), Some(z2)) = z else {
        return Err(Error::Precondition("give --z1 and --z2, or --eprime".into()));
    };
    let (z1, z2) = (input::set(&m, z1)?, input::set(&m, z2)?);
    match find_blocking_sequence(&m, b, z1, z2, k)? {
        BlockingOutcome::Sequence(s) => {
            let seq: Vec<&str> = s.elements.iter().map(|&x| m.label(x)).collect();
            let checks: Vec<String> = s.checks.iter().map(ToString::to_string).collect();
            writeln!(out, "outcome: blocking-sequence\nsequence: {}\nchecks: {}", seq.join(" "), checks.join(" ")).ok();
        }
        BlockingOutcome::Induced(sep) => {
            writeln!(out, "outcome: induced\nseparation: {} | {} (lambda {})", m.word(sep.part1), m.word(sep.part2), sep.order).ok();
        }
    }
    Ok(Report::yes(out))
}

fn fragility(source: &Source, minors: &[String]) -> Result<Report> {
    let (name, m) = source.matroid()?;
    let ns = minors.iter().map(|n| input::minor(n)).collect::<Result<Vec<_>>>()?;
    let r = classify(&m, &ns);
    let out = format!(
        "matroid: {name}\nminors: {}\nC: {}\nD: {}\nE: {}\nfragile: {}\nstrictly-fragile: {}\n",
        minors.join(","),
        word(&m, r.contractible),
        word(&m, r.deletable),
        word(&m, r.essential),
        yn(r.fragile),
        yn(r.strict)
    );
    Ok(Report::answer(out, r.fragile))
}

fn reps(source: &Source, field: &FieldArgs, level: &str) -> Result<Report> {
    let (name, m) = source.matroid()?;
    let id = input::field(field.field.as_deref())?;
    let space = input::space(id, field.bound);
    let level = Level::parse(level)?;
    let classes = enumerate_representations(&m, space, level)?;
    let mut out = format!("matroid: {name}\nfield: {id}\nlevel: {level}\n");
    if let Some(b) = space.bound {
        writeln!(out, "exponent-bound: {b}").ok();
    }
    writeln!(out, "classes: {}", classes.len()).ok();
    for (i, c) in classes.iter().enumerate() {
        writeln!(out).ok();
        out.push_str(&c.representative.to_text(&format!("{name}-{}", i + 1)));
    }
    Ok(Report::answer(out, !classes.is_empty()))
}

fn stab(source: &Source, field: &FieldArgs, minor: &str) -> Result<Report> {
    let (name, m) = source.matroid()?;
    let n = input::minor(minor)?;
    let id = input::field(field.field.as_deref())?;
    let space = input::space(id, field.bound);
    let mut out = format!("matroid: {name}\nminor: {minor}\nfield: {id}\n");
    if !has_minor(&m, &n) {
        return Err(Error::Precondition(format!("{name} has no {minor} minor")));
    }
    match stabilizes_all_embeddings(&m, &n, space)? {
        None => {
            writeln!(out, "stabilizes: yes").ok();
            Ok(Report::yes(out))
        }
        Some((c, d, v)) => {
            writeln!(out, "stabilizes: no\ncontract: {}\ndelete: {}", word(&m, c), word(&m, d)).ok();
            if let Some((a1, a2)) = v.witness {
                writeln!(out).ok();
                out.push_str(&a1.to_text("witness-1"));
                writeln!(out).ok();
                out.push_str(&a2.to_text("witness-2"));
            }
            Ok(Report::answer(out, false))
        }
    }
}

fn pipeline(source: &Source, field: &FieldArgs, minor: &str) -> Result<Report> {
    let (_, m) = source.matroid()?;
    let n = input::minor(minor)?;
    let id = input::field(field.field.as_deref())?;
    let report = certify_pipeline(&m, &n, input::space(id, field.bound))?;
    Ok(Report::answer(report.to_string(), report.is_certified()))
}

fn catalog(name: Option<&str>) -> Result<Report> {
    let Some(name) = name else {
        let mut out = String::new();
        for n in catalog_names() {
            let e = catalog_entry(n)?;
            let field = e.matrix.map_or("-".to_string(), |a| a.field().to_string());
            writeln!(out, "{n} elements={} rank={} field={field}", e.matroid.len(), e.matroid.rank()).ok();
        }
        return Ok(Report::yes(out));
    };
    let e = catalog_entry(name)?;
    let mut out = e.matroid.to_text(&e.name);
    if let Some(a) = e.matrix {
        writeln!(out).ok();
        out.push_str(&a.to_text(&e.name));
    }
    Ok(Report::yes(out))
}

fn selftest(seed: u64, criterion: Option<usize>) -> Result<Report> {
    let ids: Vec<usize> = match criterion {
        Some(id) if (1..=acceptance::COUNT).contains(&id) => vec![id],
        Some(id) => return Err(Error::Precondition(format!("criteria are numbered 1 to {}, not {id}", acceptance::COUNT))),
        None => (1..=acceptance::COUNT).collect(),
    };
    let mut out = String::new();
    let mut all = true;
    for id in ids {
        let r = acceptance::run_criterion(id, seed).expect("criterion in range");
        all &= r.passed;
        writeln!(out, "{r}").ok();
    }
    Ok(Report::answer(out, all))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Pf { field, values } => pf(field, values),
        Command::Matrix { action } => matrix(action),
        Command::Matroid { action } => matroid(action),
        Command::Bw { source, dump } => {
            let (name, m) = source.matroid()?;
            let (w, d) = branch_width(&m)?;
            let mut out = format!("matroid: {name}\nbranch-width: {w}\n");
            if *dump {
                writeln!(out, "decomposition: {}", d.dump()).ok();
            }
            Ok(Report::yes(out))
        }
        Command::Seps { source, k, uncrossed } => seps(source, *k, *uncrossed),
        Command::Blockseq { source, basis, z1, z2, eprime, k } => {
            blockseq(source, basis, (z1.as_deref(), z2.as_deref()), eprime.as_deref(), *k)
        }
        Command::Fragility { source, minor } => fragility(source, minor),
        Command::Reps { source, field, level } => reps(source, field, level),
        Command::Stab { source, field, minor } => stab(source, field, minor),
        Command::Pipeline { source, field, minor } => pipeline(source, field, minor),
        Command::Catalog { name } => catalog(name.as_deref()),
        Command::Selftest { seed, criterion } => selftest(*seed, *criterion),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => 3,
        Error::Infeasible(_) | Error::Stage { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("mwb: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(if r.affirmative { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("mwb: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
