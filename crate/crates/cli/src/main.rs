use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use agtop_core::axioms::{
    check_anti_rectangular, check_left_invertive, check_medial, check_paramedial3, find_zero, left_identities,
};
use agtop_core::groupoid::{DEFAULT_SUBSET_CAP, HARD_SUBSET_CAP};
use agtop_core::ideals::{enumerate_subsets_of_kind, is_idempotent_subset};
use agtop_core::primality::{prime_counterexample, semiprime_counterexample, strongly_irreducible_counterexample};
use agtop_core::search::{census_counts, for_each_ag_groupoid};
use agtop_core::table::{parse_stream, STREAM_SEPARATOR};
use agtop_core::topology::{build_space, verify_phi_preservation, verify_topology};
use agtop_core::{run_corpus_capped, AgGroupoid, AgTable, ClaimId, Error, IdealKind, SearchSpec, Space, Status};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const OK: u8 = 0;
const USAGE: u8 = 1;
const PARSE: u8 = 2;
const AXIOM: u8 = 3;
const VIOLATED: u8 = 4;
const CAP: u8 = 5;

/// Ideals, bi-ideals and spectral topologies of finite AG-groupoids.
#[derive(Parser)]
#[command(name = "agtop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the left invertive law and related identities.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the ideals of one kind.
    Ideals {
        file: PathBuf,
        #[arg(long, default_value = "two-sided")]
        kind: IdealKind,
        /// Annotate each member with primality-type predicates.
        #[arg(long)]
        predicates: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the topology on strongly irreducible bi-ideals or on prime ideals.
    Topology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SpaceArg::Spectrum)]
        space: SpaceArg,
        #[arg(long)]
        json: bool,
        /// Emit the specialization preorder as DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Enumerate AG-groupoids of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        left_identity: bool,
        #[arg(long)]
        zero: bool,
        #[arg(long)]
        anti_rectangular: bool,
        /// One table per isomorphism class.
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Print counts instead of tables.
        #[arg(long)]
        census: bool,
    },
    /// Run the claim harness over files or a whole order.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long)]
        order: Option<usize>,
        /// Comma-separated claim ids, e.g. C1,C13.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical representative of the isomorphism class.
    Canon { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Omega,
    Spectrum,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Omega => Space::BiIdeal,
            SpaceArg::Spectrum => Space::PrimeSpectrum,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::OrderTooLarge { .. } => PARSE,
            Error::NotLeftInvertive { .. } => AXIOM,
            Error::CapExceeded { .. } => CAP,
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let cap = subset_cap()?;
    let mut out = String::new();
    let code = match cli.command {
        Command::Check { file, json } => check(&read_table(&file)?, json, &mut out),
        Command::Ideals { file, kind, predicates, json } => {
            ideals(&validated(&file, cap)?, kind, predicates, json, &mut out)?
        }
        Command::Topology { file, space, json, dot } => {
            topology(&validated(&file, cap)?, space.into(), json, dot, &mut out)?
        }
        Command::Enumerate { order, left_identity, zero, anti_rectangular, iso, limit, census } => {
            let mut spec = SearchSpec::new(order);
            spec.require_left_identity = left_identity;
            spec.require_zero = zero;
            spec.require_anti_rectangular = anti_rectangular;
            spec.up_to_isomorphism = iso;
            spec.limit = limit;
            return enumerate(&spec, census);
        }
        Command::Verify { files, order, claims, json } => verify(&files, order, &claims, json, cap, &mut out)?,
        Command::Canon { file } => {
            out.push_str(&read_table(&file)?.canonical_form()?.to_agt());
            OK
        }
    };
    print!("{out}");
    Ok(code)
}

fn subset_cap() -> Result<usize, Failure> {
    match std::env::var("AGTOP_MAX_N") {
        Err(_) => Ok(DEFAULT_SUBSET_CAP),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| n.min(HARD_SUBSET_CAP))
            .map_err(|_| Failure::new(USAGE, format!("AGTOP_MAX_N must be a non-negative integer, got {v:?}"))),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))
}

fn read_table(path: &Path) -> Result<AgTable, Failure> {
    AgTable::parse(&read_text(path)?).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))
}

fn validated(path: &Path, cap: usize) -> Result<AgGroupoid, Failure> {
    Ok(AgGroupoid::new(read_table(path)?)?.with_subset_cap(cap))
}

fn print_json(out: &mut String, value: Value) {
    // serde_json's map is ordered by key, so output is stable
    out.push_str(&serde_json::to_string_pretty(&value).expect("json"));
    out.push('\n');
}

fn verdict(holds: bool, witness: &Option<Vec<usize>>) -> String {
    match witness {
        _ if holds => "OK".into(),
        Some(w) => format!("FAIL at ({})", join(w)),
        None => "FAIL".into(),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn check(t: &AgTable, json: bool, out: &mut String) -> u8 {
    let li = check_left_invertive(t);
    let medial = check_medial(t);
    let para = check_paramedial3(t);
    let ids = left_identities(t);
    let zero = find_zero(t);
    let anti = check_anti_rectangular(t);
    if json {
        let report = |r: &agtop_core::AxiomReport| json!({"holds": r.holds, "witness": r.witness});
        print_json(
            out,
            json!({
                "order": t.order(),
                "leftInvertive": report(&li),
                "medial": report(&medial),
                "paramedial3": report(&para),
                "leftIdentities": ids,
                "zero": zero,
                "antiRectangular": report(&anti),
            }),
        );
    } else {
        let _ = writeln!(out, "order: {}", t.order());
        let _ = writeln!(out, "left-invertive: {}", verdict(li.holds, &li.witness));
        let _ = writeln!(out, "medial: {}", verdict(medial.holds, &medial.witness));
        let _ = writeln!(out, "paramedial3: {}", verdict(para.holds, &para.witness));
        let _ = writeln!(out, "left identities: {ids}");
        let _ = writeln!(out, "zero: {}", zero.map_or("none".into(), |z| z.to_string()));
        let _ = writeln!(out, "anti-rectangular: {}", verdict(anti.holds, &anti.witness));
    }
    if li.holds {
        OK
    } else {
        AXIOM
    }
}

fn ideals(g: &AgGroupoid, kind: IdealKind, predicates: bool, json: bool, out: &mut String) -> Outcome {
    let family = enumerate_subsets_of_kind(g, kind)?;
    let members = family.members();
    let left = if predicates && kind == IdealKind::LeftIdeal { Some(members) } else { None };
    let rows: Vec<Value> = members
        .iter()
        .map(|x| {
            let mut row = json!({ "set": x });
            if predicates {
                row["idempotent"] = json!(is_idempotent_subset(g, x).expect("same universe"));
                row["prime"] = json!(prime_counterexample(g, members, x).is_none());
                row["semiprime"] = json!(semiprime_counterexample(g, members, x).is_none());
                row["stronglyIrreducible"] = json!(strongly_irreducible_counterexample(members, x).is_none());
                if let Some(left) = left {
                    row["quasiPrime"] = json!(prime_counterexample(g, left, x).is_none());
                }
            }
            row
        })
        .collect();
    if json {
        print_json(out, json!({ "kind": kind.to_string(), "count": members.len(), "members": rows }));
        return Ok(OK);
    }
    let _ = writeln!(out, "{kind}: {}", members.len());
    for (x, row) in members.iter().zip(&rows) {
        let _ = write!(out, "{x}");
        for (key, label) in [
            ("idempotent", "idempotent"),
            ("prime", "prime"),
            ("semiprime", "semiprime"),
            ("stronglyIrreducible", "strongly-irreducible"),
            ("quasiPrime", "quasi-prime"),
        ] {
            if let Some(b) = row.get(key).and_then(Value::as_bool) {
                let _ = write!(out, " {label}={}", if b { "yes" } else { "no" });
            }
        }
        out.push('\n');
    }
    Ok(OK)
}

fn space_name(space: Space) -> &'static str {
    match space {
        Space::BiIdeal => "omega",
        Space::PrimeSpectrum => "spectrum",
    }
}

fn topology(g: &AgGroupoid, space: Space, json: bool, dot: bool, out: &mut String) -> Outcome {
    if g.zero().is_none() {
        if json {
            print_json(out, json!({ "space": space_name(space), "status": Status::NotApplicable, "note": "no zero" }));
        } else {
            out.push_str("not-applicable: no zero\n");
        }
        return Ok(OK);
    }
    let top = build_space(g, space)?;
    if dot {
        out.push_str(&top.to_dot());
        return Ok(OK);
    }
    let axioms = verify_topology(&top);
    let preservation = verify_phi_preservation(g, space)?;
    if json {
        let mut value = serde_json::to_value(&top).expect("json");
        value["space"] = json!(space_name(space));
        value["verifier"] = serde_json::to_value(&axioms).expect("json");
        value["preservation"] = serde_json::to_value(&preservation).expect("json");
        print_json(out, value);
        return Ok(OK);
    }
    let _ = writeln!(out, "space: {}", space_name(space));
    let _ = writeln!(out, "points: {}", top.points.len());
    for (i, p) in top.points.iter().enumerate() {
        let _ = writeln!(out, "  p{i} {p}");
    }
    let _ = writeln!(out, "opens: {}", top.opens.len());
    for o in &top.opens {
        let members: Vec<String> = o.members.iter().map(|m| format!("p{m}")).collect();
        let labels: Vec<String> = o.labels.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  [{}] labels {}", members.join(" "), labels.join(" "));
    }
    let _ = writeln!(out, "verifier: {axioms}");
    let _ = writeln!(out, "preservation: {preservation}");
    Ok(OK)
}

fn enumerate(spec: &SearchSpec, census: bool) -> Outcome {
    // out-of-range orders are a usage error for this command
    spec.validate().map_err(|e| Failure::new(USAGE, e.to_string()))?;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if census {
        let c = census_counts(spec)?;
        let text = serde_json::to_string_pretty(&serde_json::to_value(c).expect("json")).expect("json");
        let _ = writeln!(lock, "{text}");
        return Ok(OK);
    }
    let mut first = true;
    let mut io_error = None;
    for_each_ag_groupoid(spec, |t| {
        let sep = if first { String::new() } else { format!("{STREAM_SEPARATOR}\n") };
        first = false;
        match write!(lock, "{sep}{}", t.to_agt()) {
            Ok(()) => ControlFlow::Continue(()),
            Err(e) => {
                io_error = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    match io_error {
        Some(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::new(USAGE, e.to_string())),
        _ => Ok(OK),
    }
}

fn verify(
    files: &[PathBuf],
    order: Option<usize>,
    claims: &[String],
    json: bool,
    cap: usize,
    out: &mut String,
) -> Outcome {
    let filter: Vec<ClaimId> = claims
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| c.trim().parse::<ClaimId>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::new(USAGE, e.to_string()))?;
    if files.is_empty() && order.is_none() {
        return Err(Failure::new(USAGE, "give AGT files or --order"));
    }
    let mut corpus = Vec::new();
    for f in files {
        let tables = parse_stream(&read_text(f)?).map_err(|e| Failure::new(PARSE, format!("{}: {e}", f.display())))?;
        corpus.extend(tables);
    }
    if let Some(n) = order {
        let spec = SearchSpec::new(n);
        spec.validate().map_err(|e| Failure::new(USAGE, e.to_string()))?;
        corpus.extend(agtop_core::enumerate_ag_groupoids(&spec)?);
    }
    let report = run_corpus_capped(&corpus, (!filter.is_empty()).then_some(filter.as_slice()), cap);
    if json {
        out.push_str(&report.to_json());
        out.push('\n');
    } else {
        let _ = writeln!(out, "corpus: {} tables", report.corpus_size);
        for (id, t) in &report.claims {
            let _ = writeln!(
                out,
                "{id}: holds {} violated {} not-applicable {} vacuous {}",
                t.holds, t.violated, t.not_applicable, t.vacuous
            );
            for ce in &t.witnesses {
                let note = if ce.note.is_empty() { String::new() } else { format!(" ({})", ce.note) };
                let _ = writeln!(out, "  table #{}: {}{note}", ce.instance, ce.witness);
            }
        }
    }
    Ok(if report.any_violated() { VIOLATED } else { OK })
}
