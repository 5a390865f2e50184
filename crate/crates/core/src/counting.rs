//! Exact counting sequences.
//!
//! All tables come from convolution recurrences read off the generating
//! functions:
//!
//! * `M = 1 + 3xM + 2x^2 M^2` for (3,2)-Motzkin paths,
//! * `L = 1 + 2xL + 2x^2 M L` for large (3,2)-Motzkin paths,
//! * `F = 1 + xF + xF^2` for large Schröder numbers, `S_n = f_{n+1}`.
//!
//! Little Schröder numbers are half the large ones for `n >= 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqName {
    /// (3,2)-Motzkin numbers `m_n`.
    Motzkin32,
    /// Large (3,2)-Motzkin numbers `L_n`.
    LargeMotzkin,
    /// Large Schröder numbers `S_n`.
    LargeSchroder,
    /// Little Schröder numbers `s_n`.
    LittleSchroder,
    /// Noncrossing linked partitions of `[n]`, `f_n`, from `n = 1`.
    Ncl,
}

impl SeqName {
    pub fn symbol(self) -> &'static str {
        match self {
            SeqName::Motzkin32 => "m",
            SeqName::LargeMotzkin => "L",
            SeqName::LargeSchroder => "S",
            SeqName::LittleSchroder => "s",
            SeqName::Ncl => "f",
        }
    }

    /// Smallest defined index.
    pub fn first_index(self) -> usize {
        match self {
            SeqName::Ncl => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for SeqName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "m" => SeqName::Motzkin32,
            "L" => SeqName::LargeMotzkin,
            "S" => SeqName::LargeSchroder,
            "s" => SeqName::LittleSchroder,
            "f" => SeqName::Ncl,
            other => {
                return Err(format!(
                    "unknown sequence {other:?}; expected one of m, L, S, s, f"
                ))
            }
        })
    }
}

/// Values `a_first ..= a_max` of one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: SeqName,
    pub first: usize,
    pub values: Vec<BigUint>,
    /// How the values were obtained.
    pub recurrence: &'static str,
}

impl SequenceTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(self.first).and_then(|i| self.values.get(i))
    }

    pub fn max_index(&self) -> usize {
        self.first + self.values.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (i + self.first, v))
    }
}

impl std::ops::Index<usize> for SequenceTable {
    type Output = BigUint;
    fn index(&self, n: usize) -> &BigUint {
        self.get(n)
            .unwrap_or_else(|| panic!("{}_{n} is outside the table", self.name))
    }
}

/// `sum_{j=0}^{k} a_j b_{k-j}`
fn convolve_at(a: &[BigUint], b: &[BigUint], k: usize) -> BigUint {
    (0..=k).map(|j| &a[j] * &b[k - j]).sum()
}

pub fn motzkin32_numbers(max: usize) -> SequenceTable {
    let mut m: Vec<BigUint> = Vec::with_capacity(max + 1);
    m.push(BigUint::one());
    for n in 1..=max {
        let mut v = &m[n - 1] * 3u32;
        if n >= 2 {
            v += convolve_at(&m, &m, n - 2) * 2u32;
        }
        m.push(v);
    }
    SequenceTable {
        name: SeqName::Motzkin32,
        first: 0,
        values: m,
        recurrence: "m_n = 3 m_{n-1} + 2 sum_{j=0}^{n-2} m_j m_{n-2-j}",
    }
}

pub fn large_motzkin_numbers(max: usize) -> SequenceTable {
    let m = motzkin32_numbers(max.saturating_sub(2)).values;
    let mut l: Vec<BigUint> = Vec::with_capacity(max + 1);
    l.push(BigUint::one());
    for n in 1..=max {
        let mut v = &l[n - 1] * 2u32;
        if n >= 2 {
            v += convolve_at(&m, &l, n - 2) * 2u32;
        }
        l.push(v);
    }
    SequenceTable {
        name: SeqName::LargeMotzkin,
        first: 0,
        values: l,
        recurrence: "L_n = 2 L_{n-1} + 2 sum_{j=0}^{n-2} m_j L_{n-2-j}",
    }
}

/// Large and little Schröder numbers up to half-length `max`.
pub fn schroder_numbers(max: usize) -> (SequenceTable, SequenceTable) {
    let mut big: Vec<BigUint> = Vec::with_capacity(max + 1);
    big.push(BigUint::one());
    for n in 1..=max {
        let v = &big[n - 1] + convolve_at(&big, &big, n - 1);
        big.push(v);
    }
    let little = big
        .iter()
        .enumerate()
        .map(|(n, v)| {
            if n == 0 {
                return BigUint::one();
            }
            let two = BigUint::from(2u32);
            assert!((v % &two).is_zero(), "S_{n} is odd");
            v / two
        })
        .collect();
    (
        SequenceTable {
            name: SeqName::LargeSchroder,
            first: 0,
            values: big,
            recurrence: "S_n = S_{n-1} + sum_{k=0}^{n-1} S_k S_{n-1-k}",
        },
        SequenceTable {
            name: SeqName::LittleSchroder,
            first: 0,
            values: little,
            recurrence: "s_0 = 1, s_n = S_n / 2",
        },
    )
}

/// `f_1 ..= f_max`, with `f_{n+1} = L_n`.
pub fn ncl_counts(max: usize) -> SequenceTable {
    assert!(max >= 1, "f starts at index 1");
    SequenceTable {
        name: SeqName::Ncl,
        first: 1,
        values: large_motzkin_numbers(max - 1).values,
        recurrence: "f_{n+1} = L_n",
    }
}

/// Table for `name` covering indices `first_index ..= max`.
pub fn table(name: SeqName, max: usize) -> SequenceTable {
    match name {
        SeqName::Motzkin32 => motzkin32_numbers(max),
        SeqName::LargeMotzkin => large_motzkin_numbers(max),
        SeqName::LargeSchroder => schroder_numbers(max).0,
        SeqName::LittleSchroder => schroder_numbers(max).1,
        SeqName::Ncl => ncl_counts(max),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    /// Indices `1..=checked` were compared.
    pub checked: usize,
    pub first_failure: Option<usize>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub max: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match c.first_failure {
                None => writeln!(f, "pass  {:<16} n = 1..={}", c.identity, c.checked)?,
                Some(n) => writeln!(f, "FAIL  {:<16} first failure at n = {n}", c.identity)?,
            }
        }
        Ok(())
    }
}

pub fn verify_identities(max: usize) -> IdentityReport {
    let m = motzkin32_numbers(max);
    let l = large_motzkin_numbers(max);
    let (big, little) = schroder_numbers(max);
    let f = ncl_counts(max + 1);
    let check = |identity, holds: &dyn Fn(usize) -> bool| IdentityCheck {
        identity,
        checked: max,
        first_failure: (1..=max).find(|&n| !holds(n)),
    };
    let checks = vec![
        check("L_n = 2 m_{n-1}", &|n| l[n] == &m[n - 1] * 2u32),
        check("L_n = S_n", &|n| l[n] == big[n]),
        check("S_n = 2 s_n", &|n| big[n] == &little[n] * 2u32),
        check("s_n = m_{n-1}", &|n| little[n] == m[n - 1]),
        check("f_{n+1} = L_n", &|n| f[n + 1] == l[n]),
    ];
    IdentityReport { max, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(t: &SequenceTable) -> Vec<u64> {
        t.values.iter().map(|v| u64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn motzkin_values() {
        assert_eq!(small(&motzkin32_numbers(0)), vec![1]);
        assert_eq!(small(&motzkin32_numbers(1)), vec![1, 3]);
        assert_eq!(small(&motzkin32_numbers(5)), vec![1, 3, 11, 45, 197, 903]);
    }

    #[test]
    fn large_values() {
        assert_eq!(small(&large_motzkin_numbers(1)), vec![1, 2]);
        assert_eq!(
            small(&large_motzkin_numbers(6)),
            vec![1, 2, 6, 22, 90, 394, 1806]
        );
        assert_eq!(small(&large_motzkin_numbers(0)), vec![1]);
    }

    #[test]
    fn schroder_values() {
        let (big, little) = schroder_numbers(6);
        assert_eq!(small(&big), vec![1, 2, 6, 22, 90, 394, 1806]);
        assert_eq!(small(&little), vec![1, 1, 3, 11, 45, 197, 903]);
        let (big, little) = schroder_numbers(0);
        assert_eq!((small(&big), small(&little)), (vec![1], vec![1]));
    }

    #[test]
    fn ncl_values() {
        let f = ncl_counts(7);
        assert_eq!(f.first, 1);
        assert_eq!(f[1], BigUint::one());
        assert_eq!(f[3], BigUint::from(6u32));
        assert_eq!(f[7], BigUint::from(1806u32));
        assert_eq!(f.max_index(), 7);
        assert!(f.get(0).is_none());
    }

    #[test]
    fn identities_small() {
        let r = verify_identities(6);
        assert!(r.all_passed(), "{r}");
        let r = verify_identities(1);
        assert!(r.all_passed());
        assert_eq!(r.checks[0].checked, 1);
    }

    #[test]
    fn hundredth_term_is_wide() {
        let l = large_motzkin_numbers(100);
        assert!(l[100].to_string().len() > 70);
    }

    #[test]
    fn names_round_trip() {
        for s in ["m", "L", "S", "s", "f"] {
            assert_eq!(s.parse::<SeqName>().unwrap().symbol(), s);
        }
        assert!("q".parse::<SeqName>().is_err());
    }
}
