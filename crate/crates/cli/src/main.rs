use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use schroder::bijection::{phi, phi_inv};
use schroder::counting::{self, SeqName};
use schroder::doubling::{double, project, ChoiceBit};
use schroder::enumerate::Family;
use schroder::structures::{
    parse_path, render_partition_ascii, render_path_ascii, validate_large, validate_motzkin,
    NclPartition,
};
use schroder::verify::{self, Maps};

/// Default ceiling on the number of objects `enumerate` will stream.
const DEFAULT_MAX_OBJECTS: u64 = 100_000_000;
const MAX_OBJECTS_ENV: &str = "SCHRODER_MAX_OBJECTS";

#[derive(Parser)]
#[command(
    name = "schroder",
    version,
    about = "Large (3,2)-Motzkin paths and noncrossing linked partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a counting sequence, one decimal value per line.
    Count {
        #[arg(long, value_parser = parse_seq)]
        seq: SeqName,
        #[arg(long)]
        upto: usize,
    },
    /// Stream every object of one family at size n, in canonical text order.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Stop after this many objects. Also lifts the size guard.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a map to one object, or to each line of standard input.
    #[command(group(ArgGroup::new("map").required(true).args(["phi", "phi_inv", "double", "project"])))]
    Map {
        /// Large path to partition.
        #[arg(long)]
        phi: bool,
        /// Partition to large path.
        #[arg(long)]
        phi_inv: bool,
        /// Motzkin path of length n-1 to large path of length n.
        #[arg(long, value_name = "BIT", value_parser = parse_bit)]
        double: Option<ChoiceBit>,
        /// Large path to "path<TAB>bit".
        #[arg(long)]
        project: bool,
        object: Option<String>,
    },
    /// Draw a path or a partition.
    #[command(group(ArgGroup::new("what").required(true).args(["path", "partition"])))]
    Render {
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Run the exhaustive checks up to size max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        identities: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

fn parse_seq(s: &str) -> Result<SeqName, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_bit(s: &str) -> Result<ChoiceBit, String> {
    match s {
        "0" => Ok(ChoiceBit::Zero),
        "1" => Ok(ChoiceBit::One),
        _ => Err(format!("expected 0 or 1, got {s:?}")),
    }
}

enum Failure {
    /// Bad input object or failed check. Exit 1.
    Domain(String),
    /// Arguments that parse but make no sense. Exit 2.
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Out) -> Result<(), Failure> {
    match command {
        Command::Count { seq, upto } => count(seq, upto, out),
        Command::Enumerate {
            family,
            n,
            limit,
            format,
        } => enumerate(family, n, limit, format, out),
        Command::Map {
            phi,
            phi_inv,
            double,
            project,
            object,
        } => {
            let op = match (phi, phi_inv, double, project) {
                (true, ..) => MapOp::Phi,
                (_, true, ..) => MapOp::PhiInv,
                (_, _, Some(bit), _) => MapOp::Double(bit),
                _ => MapOp::Project,
            };
            map(op, object, out)
        }
        Command::Render { path, partition } => render(path, partition, out),
        Command::Verify { max_n, identities } => run_verify(max_n, identities, out),
    }
}

fn count(seq: SeqName, upto: usize, out: &mut Out) -> Result<(), Failure> {
    if upto < seq.first_index() {
        return Err(Failure::Usage(format!(
            "{seq} starts at index {}",
            seq.first_index()
        )));
    }
    for (_, v) in counting::table(seq, upto).iter() {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn max_objects() -> Result<u64, Failure> {
    match std::env::var(MAX_OBJECTS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_OBJECTS_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_OBJECTS),
    }
}

fn enumerate(
    family: Family,
    n: usize,
    limit: Option<u64>,
    format: Format,
    out: &mut Out,
) -> Result<(), Failure> {
    if limit.is_none() {
        let predicted = family.count(n);
        let ceiling = max_objects()?;
        if predicted > ceiling.into() {
            return Err(Failure::Domain(format!(
                "{family} at n = {n} has {predicted} objects, above the limit of {ceiling}; \
                 pass --limit or raise {MAX_OBJECTS_ENV}"
            )));
        }
    }
    let records = family
        .records(n)
        .take(limit.map_or(usize::MAX, |l| l.try_into().unwrap_or(usize::MAX)));
    for r in records {
        match format {
            Format::Text => writeln!(out, "{}", r.text)?,
            Format::Jsonl => {
                serde_json::to_writer(&mut *out, &r).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum MapOp {
    Phi,
    PhiInv,
    Double(ChoiceBit),
    Project,
}

fn apply(op: MapOp, text: &str) -> Result<String, String> {
    let large = |t: &str| {
        let w = parse_path(t).map_err(|e| e.to_string())?;
        validate_large(&w).map_err(|e| e.to_string())
    };
    match op {
        MapOp::Phi => Ok(phi(&large(text)?).to_string()),
        MapOp::PhiInv => {
            let p: NclPartition = text
                .parse()
                .map_err(|e: schroder::structures::PartitionParseError| e.to_string())?;
            phi_inv(&p)
                .map(|q| q.to_string())
                .map_err(|e| e.to_string())
        }
        MapOp::Double(bit) => {
            let w = parse_path(text).map_err(|e| e.to_string())?;
            let q = validate_motzkin(&w).map_err(|e| e.to_string())?;
            Ok(double(&q, bit).to_string())
        }
        MapOp::Project => {
            let (q, bit) = project(&large(text)?).map_err(|e| e.to_string())?;
            Ok(format!("{q}\t{}", bit.as_u8()))
        }
    }
}

fn map(op: MapOp, object: Option<String>, out: &mut Out) -> Result<(), Failure> {
    if let Some(text) = object {
        let image = apply(op, &text).map_err(|e| Failure::Domain(format!("{text:?}: {e}")))?;
        writeln!(out, "{image}")?;
        return Ok(());
    }
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let text = line.strip_suffix('\r').unwrap_or(&line);
        let image = apply(op, text)
            .map_err(|e| Failure::Domain(format!("line {}: {text:?}: {e}", i + 1)))?;
        writeln!(out, "{image}")?;
    }
    Ok(())
}

fn render(path: Option<String>, partition: Option<String>, out: &mut Out) -> Result<(), Failure> {
    let drawing = if let Some(text) = path {
        let w = parse_path(&text).map_err(|e| Failure::Domain(e.to_string()))?;
        let q = validate_motzkin(&w).map_err(|e| Failure::Domain(e.to_string()))?;
        render_path_ascii(q.word())
    } else {
        let text = partition.expect("clap requires one of the two");
        let p: NclPartition =
            text.parse()
                .map_err(|e: schroder::structures::PartitionParseError| {
                    Failure::Domain(e.to_string())
                })?;
        render_partition_ascii(p.partition())
    };
    write!(out, "{drawing}")?;
    if !drawing.is_empty() && !drawing.ends_with('\n') {
        writeln!(out)?;
    }
    Ok(())
}

fn run_verify(max_n: usize, identities: usize, out: &mut Out) -> Result<(), Failure> {
    let start = Instant::now();
    let report = verify::run(max_n, identities, &Maps::default());
    // timing goes to stderr so stdout stays reproducible
    for r in &report.results {
        writeln!(out, "{r}")?;
        out.flush()?;
        eprintln!(
            "  {} n={} took {:.3}s",
            r.suite,
            r.n,
            r.elapsed.as_secs_f64()
        );
    }
    eprintln!("total {:.3}s", start.elapsed().as_secs_f64());
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(Failure::Domain(format!(
            "{} failed at n = {}: {}",
            f.suite,
            f.n,
            f.counterexample.as_deref().unwrap_or("")
        ))),
    }
}
