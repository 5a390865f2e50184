//! Acceptance criteria, one line per criterion. Runs without the test
//! harness so every line is printed whether or not earlier ones fail.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use schroder::counting::{self, verify_identities, SequenceTable};
use schroder::enumerate::{gen_large, gen_motzkin32, gen_ncl, gen_schroder};
use schroder::structures::SchroderVariant;
use schroder::verify::{self, Maps};

fn table_matches(t: &SequenceTable, n: usize, counted: usize) -> Result<(), String> {
    if t[n] == counted.into() {
        Ok(())
    } else {
        Err(format!("{}_{n}: table {}, counted {counted}", t.name, t[n]))
    }
}

fn cli(args: &[&str], input: Option<&[u8]>) -> Result<Vec<u8>, String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_schroder"))
        .args(args)
        .env_remove("SCHRODER_MAX_OBJECTS")
        .stdin(if input.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    if let Some(bytes) = input {
        let mut stdin = child.stdin.take().unwrap();
        let bytes = bytes.to_vec();
        // feed on a thread so a large input cannot deadlock against stdout
        std::thread::spawn(move || stdin.write_all(&bytes));
    }
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    Ok(out.stdout)
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!(
            "took {:.2}s, limit {}s",
            elapsed.as_secs_f64(),
            limit.as_secs()
        ))
    }
}

fn sequence_reproduction() -> Result<String, String> {
    let start = Instant::now();
    let out = cli(&["count", "--seq", "L", "--upto", "6"], None)?;
    within(Duration::from_secs(1), start.elapsed())?;
    let text = String::from_utf8(out).unwrap();
    let expected = "1\n2\n6\n22\n90\n394\n1806\n";
    if text != expected {
        return Err(format!("got {text:?}"));
    }
    Ok("1 2 6 22 90 394 1806".into())
}

fn worked_example_round_trip() -> Result<String, String> {
    let path = "UbxUbUxcUycy";
    let partition = "{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}";
    let start = Instant::now();
    let image = cli(&["map", "--phi", path], None)?;
    let back = cli(&["map", "--phi-inv", partition], None)?;
    within(Duration::from_secs(1), start.elapsed())?;
    if image != format!("{partition}\n").as_bytes() {
        return Err(format!("phi gave {:?}", String::from_utf8_lossy(&image)));
    }
    if back != format!("{path}\n").as_bytes() {
        return Err(format!("phi-inv gave {:?}", String::from_utf8_lossy(&back)));
    }
    Ok(format!("{path} <-> {partition}"))
}

fn suite(results: impl IntoIterator<Item = verify::SuiteResult>) -> Result<Vec<usize>, String> {
    let mut counts = Vec::new();
    for r in results {
        if !r.passed() {
            return Err(r.to_string());
        }
        counts.push(r.count);
    }
    Ok(counts)
}

fn bijectivity() -> Result<String, String> {
    let start = Instant::now();
    let maps = Maps::default();
    let counts = suite((1..=8).map(|n| verify::check_bijectivity(n, &maps)))?;
    within(Duration::from_secs(60), start.elapsed())?;
    let expected = [2, 6, 22, 90, 394, 1806, 8558, 41586];
    if counts != expected {
        return Err(format!("counts {counts:?}"));
    }
    Ok(format!("counts {counts:?}"))
}

fn round_trips() -> Result<String, String> {
    let maps = Maps::default();
    let counts = suite((0..=8).map(|n| verify::check_round_trips(n, &maps)))?;
    Ok(format!("{} objects", counts.iter().sum::<usize>()))
}

fn doubling() -> Result<String, String> {
    let maps = Maps::default();
    let counts = suite((1..=10).map(|n| verify::check_doubling(n, &maps)))?;
    let report = verify_identities(1000);
    let check = &report.checks[0];
    if check.identity != "L_n = 2 m_{n-1}" || !check.passed() || check.checked != 1000 {
        return Err(format!("{report}"));
    }
    Ok(format!(
        "{} pairs, L_n = 2 m_(n-1) for n <= 1000",
        counts.iter().sum::<usize>()
    ))
}

fn identities_and_tables() -> Result<String, String> {
    let start = Instant::now();
    let report = verify_identities(1000);
    if !report.all_passed() {
        return Err(format!("{report}"));
    }
    let m = counting::motzkin32_numbers(10);
    let l = counting::large_motzkin_numbers(10);
    for n in 0..=10 {
        table_matches(&m, n, gen_motzkin32(n).count())?;
        table_matches(&l, n, gen_large(n).count())?;
    }
    let (big, little) = counting::schroder_numbers(7);
    for n in 0..=7 {
        table_matches(&big, n, gen_schroder(n, SchroderVariant::Large).count())?;
        table_matches(&little, n, gen_schroder(n, SchroderVariant::Little).count())?;
    }
    let f = counting::ncl_counts(8);
    for n in 1..=8 {
        table_matches(&f, n, gen_ncl(n).count())?;
    }
    within(Duration::from_secs(30), start.elapsed())?;
    Ok(format!(
        "{} identities to n = 1000, tables match",
        report.checks.len()
    ))
}

fn validator_equivalence() -> Result<String, String> {
    let counts = suite((1..=6).map(verify::check_validators))?;
    Ok(format!("accepted {counts:?}"))
}

fn pipeline(family: &str, n: usize, there: &[&str], back: &[&str]) -> Result<usize, String> {
    let n = n.to_string();
    let input = cli(&["enumerate", "--family", family, "--n", &n], None)?;
    let mid = cli(there, Some(&input))?;
    let out = cli(back, Some(&mid))?;
    if out != input {
        return Err(format!(
            "{family} n={n}: {there:?} then {back:?} changed the stream"
        ));
    }
    Ok(input.iter().filter(|&&b| b == b'\n').count())
}

fn format_determinism() -> Result<String, String> {
    let mut lines = 0;
    for n in 0..=5 {
        lines += pipeline("large", n, &["map", "--phi"], &["map", "--phi-inv"])?;
        if n >= 1 {
            lines += pipeline("ncl", n, &["map", "--phi-inv"], &["map", "--phi"])?;
        }
    }
    // double then project recovers each path with the bit appended
    for n in 0..=4 {
        let input = cli(
            &["enumerate", "--family", "m32", "--n", &n.to_string()],
            None,
        )?;
        for bit in ["0", "1"] {
            let doubled = cli(&["map", "--double", bit], Some(&input))?;
            let projected = cli(&["map", "--project"], Some(&doubled))?;
            let expected: String = String::from_utf8(input.clone())
                .unwrap()
                .lines()
                .map(|q| format!("{q}\t{bit}\n"))
                .collect();
            if projected != expected.as_bytes() {
                return Err(format!(
                    "m32 n={n} bit {bit}: double then project changed the stream"
                ));
            }
            lines += expected.lines().count();
        }
    }
    let args = [
        "enumerate",
        "--family",
        "ncl",
        "--n",
        "5",
        "--format",
        "jsonl",
    ];
    if cli(&args, None)? != cli(&args, None)? {
        return Err("repeated enumerate differs".into());
    }
    let distinct: BTreeSet<_> = String::from_utf8(cli(&args, None)?)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    if distinct.len() != 90 {
        return Err(format!(
            "{} distinct jsonl records for ncl n=5",
            distinct.len()
        ));
    }
    Ok(format!("{lines} lines byte-identical"))
}

type Criterion = (&'static str, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("sequence reproduction", sequence_reproduction),
        ("worked example round trip", worked_example_round_trip),
        ("exhaustive bijectivity n <= 8", bijectivity),
        ("round trips n <= 8", round_trips),
        ("doubling n <= 10", doubling),
        ("identities and tables", identities_and_tables),
        ("validator equivalence n <= 6", validator_equivalence),
        ("pipeline determinism n <= 5", format_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name:<30} {secs:>7.2}s  {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name:<30} {secs:>7.2}s  {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
