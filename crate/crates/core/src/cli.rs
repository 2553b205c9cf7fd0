//! The `ncs` command-line front end.
//!
//! Exit codes: `0` success, `1` a check failed, `2` usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bbc::{bbc_from_cyclic, build_direct, build_inductive, type_counts, BbcSequence};
use crate::cubical::CubicalComplex;
use crate::error::{Error, Result};
use crate::fixtures::{self, FixtureData, FIXTURES};
use crate::io::{self, Encoding, IndexBase, ParsedComplex};
use crate::ncp::{cge_facets, ncp_facet_count, phi_complex, NcpParams};
use crate::simplicial::SimplicialComplex;
use crate::surfaces::{equivelar_m4q, genus_from_euler};
use crate::verify::{self, IsoLimits, VerifyOptions, DEFAULT_HOMOLOGY_CAP};

#[derive(Parser, Debug)]
#[command(name = "ncs", version, about = "Neighborly cubical spheres and polytopes")]
struct Cli {
    /// Index base of vertex labels in input and output files.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
    index_base: u8,

    /// Face encoding of input files.
    #[arg(long, global = true, value_enum, default_value_t = EncodingArg::Auto)]
    encoding: EncodingArg,

    /// Largest number of faces for which homology is computed.
    #[arg(long, global = true, default_value_t = DEFAULT_HOMOLOGY_CAP)]
    homology_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EncodingArg {
    Auto,
    Vertices,
    Complement,
    Sign,
}

impl From<EncodingArg> for Encoding {
    fn from(e: EncodingArg) -> Self {
        match e {
            EncodingArg::Auto => Encoding::Auto,
            EncodingArg::Vertices => Encoding::Vertices,
            EncodingArg::Complement => Encoding::Complement,
            EncodingArg::Sign => Encoding::Sign,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Export {
    Text,
    Json,
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Inductive,
    Direct,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cubical spheres from BBC sequences.
    #[command(subcommand)]
    Bbc(BbcCommand),
    /// Neighborly cubical polytopes.
    #[command(subcommand)]
    Ncp(NcpCommand),
    /// Apply the reversal map to every facet of a cubical complex.
    Phi(PhiArgs),
    /// Combinatorial and topological checks on a complex.
    Verify(VerifyArgs),
    /// The equivelar quad surface M(4,q).
    Surface(SurfaceArgs),
    /// Isomorphism test for two simplicial complexes.
    Iso(IsoArgs),
    /// Embedded reference data.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Args, Debug)]
struct SeqArg {
    /// `cyclic:d,n`, a fixture name (`pentagon`, `altshuler`) or a sequence file.
    #[arg(long)]
    seq: String,
}

#[derive(Args, Debug)]
struct Output {
    /// Facet export format.
    #[arg(long, value_enum)]
    export: Option<Export>,
    /// Write exported facets to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Summary format.
    #[arg(long, value_enum, default_value_t = Report::Text)]
    report: Report,
}

#[derive(Subcommand, Debug)]
enum BbcCommand {
    /// Build the cubical sphere of a BBC sequence.
    Build {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long, value_enum, default_value_t = Mode::Direct)]
        mode: Mode,
        /// Print the full f-vector.
        #[arg(long)]
        fvector: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check the BBC conditions of a sequence.
    Validate {
        #[command(flatten)]
        seq: SeqArg,
    },
}

#[derive(Subcommand, Debug)]
enum NcpCommand {
    /// Facets of the neighborly cubical polytope by the cubical Gale evenness condition.
    Facets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Only print counts.
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form facet count (odd d).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Args, Debug)]
struct PhiArgs {
    /// File of sign vectors.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Facet file (sign vectors, complement vectors or vertex lists).
    #[arg(long = "in")]
    input: PathBuf,
    /// Compute Betti numbers over GF(2).
    #[arg(long)]
    homology: bool,
    /// Check that all vertex links of a cubical complex look like spheres.
    #[arg(long)]
    links: bool,
    #[arg(long, value_enum, default_value_t = Report::Text)]
    report: Report,
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[arg(long)]
    q: usize,
    /// Print the genus (closed form, checked against the Euler characteristic).
    #[arg(long)]
    genus: bool,
    /// Also check orientability and equivelarity.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct IsoArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
    #[arg(long, default_value_t = verify::iso::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    #[arg(long, default_value_t = verify::iso::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Subcommand, Debug)]
enum FixturesCommand {
    /// List embedded fixtures.
    List,
    /// Print a fixture payload.
    Show { name: String },
    /// Re-validate every fixture.
    Check,
}

struct Ctx<'a> {
    encoding: Encoding,
    base: IndexBase,
    homology_cap: usize,
    out: &'a mut dyn Write,
}

enum Outcome {
    Ok,
    CheckFailed,
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        encoding: cli.encoding.into(),
        base: IndexBase::from_int(cli.index_base).expect("range checked by clap"),
        homology_cap: cli.homology_cap,
        out,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::CheckFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidParameters(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

macro_rules! say {
    ($ctx:expr, $($arg:tt)*) => {
        writeln!($ctx.out, $($arg)*).map_err(|e| Error::Internal(e.to_string()))?
    };
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Result<Outcome> {
    match command {
        Command::Bbc(BbcCommand::Build {
            seq,
            mode,
            fvector,
            output,
        }) => bbc_build(ctx, &seq.seq, mode, fvector, &output),
        Command::Bbc(BbcCommand::Validate { seq }) => {
            let s = load_sequence(ctx, &seq.seq)?;
            say!(ctx, "valid: true");
            say!(ctx, "d: {}", s.d());
            say!(ctx, "n: {}", s.n());
            say!(ctx, "neighborly: {}", s.is_neighborly()?);
            Ok(Outcome::Ok)
        }
        Command::Ncp(NcpCommand::Facets {
            n,
            d,
            count_only,
            output,
        }) => ncp_facets(ctx, n, d, count_only, &output),
        Command::Ncp(NcpCommand::Count { n, d }) => {
            say!(ctx, "facets: {}", ncp_facet_count(n, d)?);
            Ok(Outcome::Ok)
        }
        Command::Phi(args) => {
            let c = io::parse_cubical(&read(&args.input)?)?;
            let image = phi_complex(&c)?;
            write_facets(ctx, &io::serialize_cubical(&image), args.out.as_deref())?;
            Ok(Outcome::Ok)
        }
        Command::Verify(args) => verify_cmd(ctx, &args),
        Command::Surface(args) => surface(ctx, &args),
        Command::Iso(args) => iso(ctx, &args),
        Command::Fixtures(cmd) => fixtures_cmd(ctx, cmd),
    }
}

fn load_sequence(ctx: &Ctx, source: &str) -> Result<BbcSequence> {
    if let Some(params) = source.strip_prefix("cyclic:") {
        let parts: Vec<&str> = params.split(',').map(str::trim).collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidParameters(format!("bad cyclic parameters {params:?}, expected d,n")))
        };
        if parts.len() != 2 {
            return Err(Error::InvalidParameters(format!(
                "bad cyclic parameters {params:?}, expected d,n"
            )));
        }
        return bbc_from_cyclic(parse(parts[0])?, parse(parts[1])?);
    }
    if let Some(f) = fixtures::fixture(source) {
        return match f.load()? {
            FixtureData::Sequence(s) => Ok(s),
            FixtureData::Cubical(_) => Err(Error::InvalidParameters(format!(
                "fixture {source} is not a BBC sequence"
            ))),
        };
    }
    io::parse_bbc_sequence(&read(Path::new(source))?, ctx.encoding, ctx.base)
}

fn write_facets(ctx: &mut Ctx, text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => ctx
            .out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Internal(e.to_string())),
    }
}

fn export_cubical(ctx: &mut Ctx, c: &CubicalComplex, output: &Output) -> Result<()> {
    let text = match output.export {
        None if output.out.is_none() => return Ok(()),
        None | Some(Export::Text) => io::serialize_cubical(c),
        Some(Export::Json) => format!("{}\n", serde_json::to_string_pretty(&c.to_json()).expect("json")),
        Some(Export::Off) => {
            return Err(Error::InvalidParameters(
                "OFF export is only available for surfaces".into(),
            ))
        }
    };
    write_facets(ctx, &text, output.out.as_deref())
}

fn json_report(
    ctx: &mut Ctx,
    command: &str,
    params: Value,
    c: &CubicalComplex,
    checks: Value,
    output: &Output,
) -> Result<()> {
    let fv = c.f_vector();
    let report = json!({
        "command": command,
        "params": params,
        "f_vector": fv,
        "euler": fv.euler_characteristic(),
        "checks": checks,
        "facets_path": output.out.as_ref().map(|p| p.display().to_string()),
    });
    say!(ctx, "{}", serde_json::to_string_pretty(&report).expect("json"));
    Ok(())
}

fn bbc_build(ctx: &mut Ctx, source: &str, mode: Mode, fvector: bool, output: &Output) -> Result<Outcome> {
    let seq = load_sequence(ctx, source)?;
    let (sphere, agree) = match mode {
        Mode::Direct => (build_direct(&seq)?, None),
        Mode::Inductive => (build_inductive(&seq)?, None),
        Mode::Both => {
            let direct = build_direct(&seq)?;
            let inductive = build_inductive(&seq)?;
            let agree = direct == inductive;
            (direct, Some(agree))
        }
    };
    let types = type_counts(&sphere, seq.d())?;
    if output.report == Report::Json {
        let checks = json!({
            "paths_agree": agree,
            "type_counts": types.iter().map(|(t, c)| (t.to_string(), *c)).collect::<BTreeMap<_, _>>(),
            "cubical_neighborliness": sphere.neighborliness(),
        });
        json_report(
            ctx,
            "bbc build",
            json!({"seq": source, "d": seq.d(), "n": seq.n()}),
            &sphere,
            checks,
            output,
        )?;
        if output.out.is_some() {
            export_cubical(ctx, &sphere, output)?;
        }
    } else {
        say!(ctx, "d: {}", seq.d());
        say!(ctx, "n: {}", seq.n());
        say!(ctx, "facets: {}", sphere.num_facets());
        if let Some(a) = agree {
            say!(ctx, "paths agree: {a}");
        }
        for (t, c) in types.iter().rev() {
            say!(ctx, "type {t}: {c}");
        }
        if fvector {
            say!(ctx, "f-vector: {}", sphere.f_vector());
            say!(ctx, "cubical neighborliness: {}", sphere.neighborliness());
        }
        export_cubical(ctx, &sphere, output)?;
    }
    Ok(if agree == Some(false) {
        Outcome::CheckFailed
    } else {
        Outcome::Ok
    })
}

fn ncp_facets(ctx: &mut Ctx, n: usize, d: usize, count_only: bool, output: &Output) -> Result<Outcome> {
    let c = cge_facets(NcpParams::new(n, d)?)?;
    let closed = (d % 2 == 1).then(|| ncp_facet_count(n, d)).transpose()?;
    let matches = closed.is_none_or(|k| k == c.num_facets() as u128);
    if output.report == Report::Json {
        let checks = json!({"closed_form": closed.map(|k| k.to_string()), "closed_form_matches": matches});
        json_report(ctx, "ncp facets", json!({"n": n, "d": d}), &c, checks, output)?;
        if output.out.is_some() {
            export_cubical(ctx, &c, output)?;
        }
    } else {
        say!(ctx, "facets: {}", c.num_facets());
        if let Some(k) = closed {
            say!(ctx, "closed form: {k}");
        }
        if !count_only {
            match output.export {
                None if output.out.is_none() => write_facets(ctx, &io::serialize_cubical(&c), None)?,
                _ => export_cubical(ctx, &c, output)?,
            }
        }
    }
    Ok(if matches { Outcome::Ok } else { Outcome::CheckFailed })
}

fn verify_cmd(ctx: &mut Ctx, args: &VerifyArgs) -> Result<Outcome> {
    let text = read(&args.input)?;
    let opts = VerifyOptions {
        homology: args.homology,
        links: args.links,
        homology_cap: ctx.homology_cap,
    };
    let (report, kind) = match io::parse_complex(&text, ctx.encoding, ctx.base)? {
        ParsedComplex::Cubical(c) => (verify::verify_cubical(&c, opts), "cubical"),
        ParsedComplex::Simplicial(s) => (verify::verify_simplicial(&s, opts), "simplicial"),
    };
    if args.report == Report::Json {
        let out = json!({
            "command": "verify",
            "params": {"in": args.input.display().to_string(), "kind": kind, "homology": args.homology, "links": args.links},
            "f_vector": report.f_vector,
            "euler": report.euler,
            "checks": {
                "pure": report.is_pure,
                "closed_pseudomanifold": report.is_closed_pseudomanifold,
                "strongly_connected": report.is_strongly_connected,
                "betti_z2": report.betti_z2,
                "neighborliness": report.neighborliness,
                "links_ok": report.links_ok,
                "passed": report.passed(),
                "notes": report.notes,
            },
            "facets_path": args.input.display().to_string(),
        });
        say!(ctx, "{}", serde_json::to_string_pretty(&out).expect("json"));
    } else {
        say!(ctx, "kind: {kind}");
        say!(ctx, "f-vector: {}", report.f_vector);
        say!(ctx, "euler: {}", report.euler);
        say!(ctx, "pure: {}", report.is_pure);
        say!(ctx, "closed pseudomanifold: {}", report.is_closed_pseudomanifold);
        say!(ctx, "strongly connected: {}", report.is_strongly_connected);
        say!(ctx, "neighborliness: {}", report.neighborliness);
        if let Some(b) = &report.betti_z2 {
            let s: Vec<String> = b.iter().map(ToString::to_string).collect();
            say!(ctx, "betti (Z/2): ({})", s.join(", "));
        }
        if let Some(l) = report.links_ok {
            say!(ctx, "links ok: {l}");
        }
        for note in &report.notes {
            say!(ctx, "note: {note}");
        }
        say!(ctx, "passed: {}", report.passed());
    }
    Ok(if report.passed() {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    })
}

fn surface(ctx: &mut Ctx, args: &SurfaceArgs) -> Result<Outcome> {
    let s = equivelar_m4q(args.q)?;
    let fv = s.complex().f_vector();
    let mut ok = true;
    let genus = if args.genus {
        match s.genus() {
            Ok(g) => Some(g),
            Err(Error::GenusMismatch {
                closed_form,
                from_euler,
            }) => {
                ok = false;
                say!(
                    ctx,
                    "genus mismatch: closed form {closed_form}, from Euler characteristic {from_euler}"
                );
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let (orientable, equivelar) = if args.check {
        let o = s.is_orientable()?;
        let e = s.is_equivelar();
        ok &= o && e;
        (Some(o), Some(e))
    } else {
        (None, None)
    };
    if args.output.report == Report::Json {
        let checks = json!({
            "genus": genus.map(|g| g.to_string()),
            "genus_from_euler": genus_from_euler(fv.euler_characteristic()).to_string(),
            "orientable": orientable,
            "equivelar": equivelar,
        });
        json_report(ctx, "surface", json!({"q": args.q}), s.complex(), checks, &args.output)?;
    } else {
        say!(ctx, "f-vector: {fv}");
        say!(ctx, "euler: {}", fv.euler_characteristic());
        if let Some(g) = genus {
            say!(ctx, "genus: {g}");
        }
        if let Some(o) = orientable {
            say!(ctx, "orientable: {o}");
        }
        if let Some(e) = equivelar {
            say!(ctx, "equivelar: {e}");
        }
    }
    match args.output.export {
        Some(Export::Off) => write_facets(ctx, &s.to_mesh().to_off(), args.output.out.as_deref())?,
        _ if args.output.report == Report::Json && args.output.out.is_none() => {}
        _ => export_cubical(ctx, s.complex(), &args.output)?,
    }
    Ok(if ok { Outcome::Ok } else { Outcome::CheckFailed })
}

fn load_simplicial(ctx: &Ctx, path: &Path) -> Result<SimplicialComplex> {
    io::parse_simplicial(&read(path)?, ctx.encoding, ctx.base)
}

fn iso(ctx: &mut Ctx, args: &IsoArgs) -> Result<Outcome> {
    let a = load_simplicial(ctx, &args.a)?;
    let b = load_simplicial(ctx, &args.b)?;
    let limits = IsoLimits {
        max_vertices: args.max_vertices,
        node_budget: args.node_budget,
    };
    match verify::find_isomorphism(&a, &b, limits)? {
        Some(map) => {
            say!(ctx, "isomorphic: true");
            let off = match ctx.base {
                IndexBase::Zero => 0,
                IndexBase::One => 1,
            };
            for (v, w) in map.iter().enumerate() {
                if let Some(w) = w {
                    say!(ctx, "{} -> {}", v + off, w + off);
                }
            }
            Ok(Outcome::Ok)
        }
        None => {
            say!(ctx, "isomorphic: false");
            Ok(Outcome::CheckFailed)
        }
    }
}

fn fixtures_cmd(ctx: &mut Ctx, cmd: FixturesCommand) -> Result<Outcome> {
    match cmd {
        FixturesCommand::List => {
            for f in &FIXTURES {
                say!(ctx, "{}\t{}\tindex base {}", f.name, f.kind.as_str(), f.index_base);
            }
            Ok(Outcome::Ok)
        }
        FixturesCommand::Show { name } => {
            let f = fixtures::fixture(&name)
                .ok_or_else(|| Error::InvalidParameters(format!("unknown fixture {name:?}")))?;
            write_facets(ctx, f.payload, None)?;
            Ok(Outcome::Ok)
        }
        FixturesCommand::Check => {
            let mut ok = true;
            for f in &FIXTURES {
                let status = match f.load() {
                    Ok(_) => "ok".to_string(),
                    Err(e) => {
                        ok = false;
                        format!("FAILED: {e}")
                    }
                };
                say!(ctx, "{}: {status}", f.name);
            }
            let seq = fixtures::altshuler_sequence();
            let mut rows_ok = true;
            for (j, row) in fixtures::altshuler_boundaries().iter().enumerate() {
                let i = seq.d() + j;
                let mut listed = row.listed.clone();
                listed.sort_unstable();
                rows_ok &= seq.ball(i).boundary()?.facet_masks() == &listed[..];
                if i + 1 < seq.n() {
                    rows_ok &= seq.base(i + 1)? == row.marked;
                }
            }
            say!(
                ctx,
                "altshuler boundary rows: {}",
                if rows_ok { "ok" } else { "FAILED" }
            );
            ok &= rows_ok;
            let sphere_ok = fixtures::pentagon_sphere() == build_direct(&fixtures::pentagon_sequence())?;
            say!(
                ctx,
                "pentagon sphere patterns: {}",
                if sphere_ok { "ok" } else { "FAILED" }
            );
            ok &= sphere_ok;
            Ok(if ok { Outcome::Ok } else { Outcome::CheckFailed })
        }
    }
}
