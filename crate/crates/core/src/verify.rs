//! Exhaustive checks of the bijection, the doubling map, the validators and
//! the counting identities at small sizes.
//!
//! The maps under test are passed in through [`Maps`], so a deliberately
//! broken variant can be run through the same suites.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::bijection::{self, BijectionError};
use crate::counting;
use crate::doubling::{self, ChoiceBit, DoublingError};
use crate::enumerate::{gen_large, gen_motzkin32, gen_ncl, gen_schroder};
use crate::structures::{
    validate_large, validate_ncl, validate_ncl_blockwise, Arc, LargeMotzkinPath, LinkedPartition,
    MotzkinPath, NclPartition, SchroderVariant,
};

/// Largest vertex count for the all-arc-subsets validator sweep.
pub const VALIDATOR_SWEEP_MAX: usize = 6;

#[derive(Clone, Copy)]
pub struct Maps {
    pub phi: fn(&LargeMotzkinPath) -> NclPartition,
    pub phi_inv: fn(&NclPartition) -> Result<LargeMotzkinPath, BijectionError>,
    pub double: fn(&MotzkinPath, ChoiceBit) -> LargeMotzkinPath,
    pub project: fn(&LargeMotzkinPath) -> Result<(MotzkinPath, ChoiceBit), DoublingError>,
}

impl Default for Maps {
    fn default() -> Self {
        Maps {
            phi: bijection::phi,
            phi_inv: bijection::phi_inv,
            double: doubling::double,
            project: doubling::project,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub n: usize,
    /// Objects checked.
    pub count: usize,
    /// First failing object and what went wrong.
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for SuiteResult {
    /// Timing is left out so that reports are reproducible byte for byte.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{status}  {:<12} n={:<4} count={}",
            self.suite, self.n, self.count
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn timed(
    suite: &'static str,
    n: usize,
    body: impl FnOnce() -> Result<usize, String>,
) -> SuiteResult {
    let start = Instant::now();
    let (count, counterexample) = match body() {
        Ok(count) => (count, None),
        Err(e) => (0, Some(e)),
    };
    SuiteResult {
        suite,
        n,
        count,
        counterexample,
        elapsed: start.elapsed(),
    }
}

/// `phi` maps the large paths of length `n` one-to-one onto the partitions of
/// `[n+1]` produced by the arc-set generator. Every image must pass both
/// validators.
pub fn check_bijectivity(n: usize, maps: &Maps) -> SuiteResult {
    timed("bijectivity", n, || {
        let mut image = BTreeSet::new();
        let mut paths = 0;
        for p in gen_large(n) {
            paths += 1;
            let pi = (maps.phi)(&p);
            let text = pi.to_string();
            if pi.n() != n + 1 {
                return Err(format!("{p} -> {text} has {} vertices", pi.n()));
            }
            if let Err(e) = validate_ncl(&pi)
                .map(|_| ())
                .and(validate_ncl_blockwise(&pi))
            {
                return Err(format!("{p} -> {text}: {e}"));
            }
            if !image.insert(text.clone()) {
                return Err(format!("{p} -> {text} is hit twice"));
            }
        }
        let oracle: BTreeSet<String> = gen_ncl(n + 1).map(|p| p.to_string()).collect();
        if let Some(missed) = oracle.difference(&image).next() {
            return Err(format!("{missed} is not hit"));
        }
        if let Some(extra) = image.difference(&oracle).next() {
            return Err(format!("{extra} is not a generated partition"));
        }
        Ok(paths)
    })
}

/// `phi_inv . phi = id` on paths of length `n` and `phi . phi_inv = id` on the
/// generated partitions of `[n+1]`.
pub fn check_round_trips(n: usize, maps: &Maps) -> SuiteResult {
    timed("round-trip", n, || {
        let mut count = 0;
        for p in gen_large(n) {
            let pi = (maps.phi)(&p);
            match (maps.phi_inv)(&pi) {
                Ok(back) if back == p => {}
                Ok(back) => return Err(format!("{p} -> {pi} -> {back}")),
                Err(e) => return Err(format!("{p} -> {pi}: {e}")),
            }
            count += 1;
        }
        for pi in gen_ncl(n + 1) {
            let p = (maps.phi_inv)(&pi).map_err(|e| format!("{pi}: {e}"))?;
            let back = (maps.phi)(&p);
            if back != pi {
                return Err(format!("{pi} -> {p} -> {back}"));
            }
            count += 1;
        }
        Ok(count)
    })
}

/// `(Q, b) -> double(Q, b)` is a bijection from paths of length `n-1` times
/// two bits onto large paths of length `n`, and `project` inverts it.
pub fn check_doubling(n: usize, maps: &Maps) -> SuiteResult {
    timed("doubling", n, || {
        if n == 0 {
            return Ok(0);
        }
        let mut image = BTreeSet::new();
        for q in gen_motzkin32(n - 1) {
            for bit in ChoiceBit::BOTH {
                let p = (maps.double)(&q, bit);
                let shown = format!("({q}, {})", bit.as_u8());
                validate_large(&p).map_err(|e| format!("{shown} -> {p}: {e}"))?;
                match (maps.project)(&p) {
                    Ok((q2, b2)) if q2 == q && b2 == bit => {}
                    Ok((q2, b2)) => {
                        return Err(format!("{shown} -> {p} -> ({q2}, {})", b2.as_u8()))
                    }
                    Err(e) => return Err(format!("{shown} -> {p}: {e}")),
                }
                if !image.insert(p.to_string()) {
                    return Err(format!("{shown} -> {p} is hit twice"));
                }
            }
        }
        let large: BTreeSet<String> = gen_large(n).map(|p| p.to_string()).collect();
        if let Some(missed) = large.difference(&image).next() {
            return Err(format!("{missed} is not hit"));
        }
        Ok(image.len())
    })
}

/// Every arc set over `[n]`.
pub fn all_arc_subsets(n: usize) -> impl Iterator<Item = LinkedPartition> {
    let pairs: Vec<Arc> = (1..=n)
        .flat_map(|l| (l + 1..=n).map(move |r| Arc { left: l, right: r }))
        .collect();
    assert!(pairs.len() < 32, "arc sweep too large");
    (0u32..1 << pairs.len()).map(move |mask| {
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| *a);
        LinkedPartition::new(n, arcs).expect("pairs are in range")
    })
}

/// The arc validator and the block validator accept the same arc sets over
/// `[n]`. The count is the number of accepted sets.
pub fn check_validators(n: usize) -> SuiteResult {
    timed("validators", n, || {
        let mut accepted = 0;
        for p in all_arc_subsets(n) {
            let by_arcs = validate_ncl(&p).is_ok();
            let by_blocks = validate_ncl_blockwise(&p).is_ok();
            if by_arcs != by_blocks {
                return Err(format!("{p} (arcs {by_arcs}, blocks {by_blocks})"));
            }
            accepted += by_arcs as usize;
        }
        Ok(accepted)
    })
}

/// Recurrence tables agree with exhaustive counts at size `n`: `m` and `L`
/// at length `n`, `S` and `s` at half-length `n`, `f` on `n + 1` vertices.
pub fn check_tables(n: usize) -> SuiteResult {
    timed("tables", n, || {
        let checks: [(&str, BigUint, usize); 5] = [
            (
                "m",
                counting::motzkin32_numbers(n)[n].clone(),
                gen_motzkin32(n).count(),
            ),
            (
                "L",
                counting::large_motzkin_numbers(n)[n].clone(),
                gen_large(n).count(),
            ),
            (
                "S",
                counting::schroder_numbers(n).0[n].clone(),
                gen_schroder(n, SchroderVariant::Large).count(),
            ),
            (
                "s",
                counting::schroder_numbers(n).1[n].clone(),
                gen_schroder(n, SchroderVariant::Little).count(),
            ),
            (
                "f",
                counting::ncl_counts(n + 1)[n + 1].clone(),
                gen_ncl(n + 1).count(),
            ),
        ];
        let total = checks.len();
        for (name, table, counted) in checks {
            if table != BigUint::from(counted) {
                return Err(format!("{name}: table {table}, counted {counted}"));
            }
        }
        Ok(total)
    })
}

pub fn check_identities(max: usize) -> SuiteResult {
    timed("identities", max, || {
        let report = counting::verify_identities(max);
        match report.checks.iter().find(|c| !c.passed()) {
            Some(c) => Err(format!(
                "{} fails at n = {}",
                c.identity,
                c.first_failure.unwrap()
            )),
            None => Ok(report.checks.len() * max),
        }
    })
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub results: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(SuiteResult::passed)
    }

    pub fn first_failure(&self) -> Option<&SuiteResult> {
        self.results.iter().find(|r| !r.passed())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All suites for sizes up to `max_n`, then the identities up to
/// `identities`. Stops at the first failing suite.
pub fn run(max_n: usize, identities: usize, maps: &Maps) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut push = |r: SuiteResult| {
        let ok = r.passed();
        report.results.push(r);
        ok
    };
    for n in 0..=max_n {
        let ok = push(check_bijectivity(n, maps))
            && push(check_round_trips(n, maps))
            && push(check_doubling(n, maps))
            && (n == 0 || n > VALIDATOR_SWEEP_MAX || push(check_validators(n)))
            && push(check_tables(n));
        if !ok {
            return report;
        }
    }
    if identities >= 1 {
        push(check_identities(identities));
    }
    report
}
