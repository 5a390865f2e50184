//! Linked partitions stored as arc diagrams.
//!
//! A partition of `[n]` is kept as its linear representation: an arc from the
//! minimum of every non-singleton block to each other element of that block.
//! Blocks are a derived view ([`LinkedPartition::blocks`]). Vertices are
//! 1-based.
//!
//! Two independent validity checks exist. [`validate_ncl`] uses the arc
//! characterization (every vertex is the right end of at most one arc, no two
//! arcs cross). [`validate_ncl_blockwise`] evaluates the block definition
//! directly: pairwise near-disjointness plus block-level noncrossing.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

pub type Block = Vec<usize>;

/// An arc `(left, right)` with `left < right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Self {
        assert!(left < right, "arc ({left},{right}) is not left < right");
        Arc { left, right }
    }

    /// `self` and `other` cross when exactly one endpoint of one lies strictly
    /// inside the other.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = (self.left, self.right);
        let (c, d) = (other.left, other.right);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a partition needs at least one vertex")]
    Empty,
    #[error("arc {arc} leaves the vertex range 1..={n}")]
    ArcOutOfRange { arc: Arc, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NclError {
    #[error("vertex {0} is the right end of more than one arc")]
    InDegree(usize),
    #[error("arcs {0} and {1} cross")]
    CrossingArcs(Arc, Arc),
    #[error("blocks {} and {} are not nearly disjoint", fmt_block(.0), fmt_block(.1))]
    NearlyDisjointViolation(Block, Block),
    #[error("blocks {} and {} cross", fmt_block(.0), fmt_block(.1))]
    BlockCrossing(Block, Block),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionParseError {
    #[error("expected {expected} at byte offset {offset}")]
    Syntax {
        offset: usize,
        expected: &'static str,
    },
    #[error("label at byte offset {offset} is not a positive integer")]
    BadLabel { offset: usize },
    #[error("vertex {0} appears twice in one block")]
    RepeatedInBlock(usize),
    #[error("vertex {vertex} is missing; labels must cover 1..={n}")]
    Uncovered { vertex: usize, n: usize },
    #[error("vertex {0} is a non-minimal element of two blocks")]
    DuplicateRightEndpoint(usize),
    #[error(transparent)]
    Ncl(#[from] NclError),
}

fn fmt_block(b: &[usize]) -> String {
    let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// An arc set over the vertices `1..=n`. Not necessarily noncrossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkedPartition {
    n: usize,
    arcs: BTreeSet<Arc>,
}

impl LinkedPartition {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self, PartitionError> {
        if n == 0 {
            return Err(PartitionError::Empty);
        }
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        if let Some(arc) = arcs.iter().find(|a| a.left == 0 || a.right > n) {
            return Err(PartitionError::ArcOutOfRange { arc: *arc, n });
        }
        Ok(LinkedPartition { n, arcs })
    }

    /// All vertices as singletons.
    pub fn discrete(n: usize) -> Self {
        assert!(n >= 1);
        LinkedPartition {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub(crate) fn from_parts(n: usize, arcs: BTreeSet<Arc>) -> Self {
        debug_assert!(n >= 1 && arcs.iter().all(|a| a.left >= 1 && a.right <= n));
        LinkedPartition { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted by `(left, right)`.
    pub fn arcs(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, left: usize, right: usize) -> bool {
        self.arcs.contains(&Arc { left, right })
    }

    /// Left endpoint of the arc entering `v`, when there is exactly one.
    pub fn parent(&self, v: usize) -> Option<usize> {
        let mut it = self.arcs.iter().filter(|a| a.right == v);
        match (it.next(), it.next()) {
            (Some(a), None) => Some(a.left),
            _ => None,
        }
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.right == v).count()
    }

    /// Blocks derived from the arcs: one star block per vertex with outgoing
    /// arcs, plus a singleton for every vertex no arc touches. Sorted by
    /// minimum, each block ascending.
    pub fn blocks(&self) -> Vec<Block> {
        let mut touched = vec![false; self.n + 1];
        for a in &self.arcs {
            touched[a.left] = true;
            touched[a.right] = true;
        }
        let mut out: Vec<Block> = Vec::new();
        let mut arcs = self.arcs.iter().peekable();
        for (v, &hit) in touched.iter().enumerate().skip(1) {
            let mut block = vec![v];
            while let Some(a) = arcs.next_if(|a| a.left == v) {
                block.push(a.right);
            }
            if block.len() > 1 || !hit {
                out.push(block);
            }
        }
        out
    }

    /// The sub-diagram on `lo..=hi`, relabeled to `1..=hi-lo+1`. Arcs with an
    /// endpoint outside the range are dropped.
    pub fn restrict(&self, lo: usize, hi: usize) -> LinkedPartition {
        assert!(1 <= lo && lo <= hi && hi <= self.n);
        let arcs = self
            .arcs
            .range(Arc { left: lo, right: 0 }..)
            .take_while(|a| a.left <= hi)
            .filter(|a| a.right <= hi)
            .map(|a| Arc {
                left: a.left - lo + 1,
                right: a.right - lo + 1,
            })
            .collect();
        LinkedPartition {
            n: hi - lo + 1,
            arcs,
        }
    }

    /// Token sequence whose lexicographic order is the order of the canonical
    /// block text, with labels compared numerically.
    pub fn text_order_key(&self) -> Vec<TextToken> {
        let mut key = Vec::new();
        for b in self.blocks() {
            key.push(TextToken::Open);
            for (i, v) in b.iter().enumerate() {
                if i > 0 {
                    key.push(TextToken::Comma);
                }
                key.push(TextToken::Label(*v));
            }
            key.push(TextToken::Close);
        }
        key
    }
}

/// Canonical-text tokens, declared in the byte order of `,` `0-9` `{` `}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TextToken {
    Comma,
    Label(usize),
    Open,
    Close,
}

impl fmt::Display for LinkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            f.write_str(&fmt_block(&b))?;
        }
        Ok(())
    }
}

/// A linked partition that passed [`validate_ncl`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NclPartition(LinkedPartition);

impl NclPartition {
    pub fn partition(&self) -> &LinkedPartition {
        &self.0
    }

    pub fn into_partition(self) -> LinkedPartition {
        self.0
    }

    pub(crate) fn from_partition_unchecked(p: LinkedPartition) -> Self {
        debug_assert!(validate_ncl(&p).is_ok(), "{p}");
        NclPartition(p)
    }

    /// Sub-diagrams of a noncrossing linked partition stay valid.
    pub fn restrict(&self, lo: usize, hi: usize) -> NclPartition {
        NclPartition(self.0.restrict(lo, hi))
    }
}

impl Deref for NclPartition {
    type Target = LinkedPartition;
    fn deref(&self) -> &LinkedPartition {
        &self.0
    }
}

impl fmt::Display for NclPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialOrd for NclPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NclPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.text_order_key().cmp(&other.text_order_key())
    }
}

impl FromStr for NclPartition {
    type Err = PartitionParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(validate_ncl(&parse_partition(s)?)?)
    }
}

/// Arc characterization: in-degree at most one, no crossing pair.
pub fn validate_ncl(p: &LinkedPartition) -> Result<NclPartition, NclError> {
    let mut seen = vec![false; p.n + 1];
    for a in &p.arcs {
        if std::mem::replace(&mut seen[a.right], true) {
            return Err(NclError::InDegree(a.right));
        }
    }
    let arcs: Vec<&Arc> = p.arcs.iter().collect();
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if a.crosses(b) {
                return Err(NclError::CrossingArcs(**a, **b));
            }
        }
    }
    Ok(NclPartition(p.clone()))
}

/// Block definition, evaluated literally on the blocks derived from the arcs.
pub fn validate_ncl_blockwise(p: &LinkedPartition) -> Result<(), NclError> {
    check_blocks(&p.blocks())
}

fn check_blocks(blocks: &[Block]) -> Result<(), NclError> {
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[i + 1..] {
            if !nearly_disjoint(bi, bj) {
                return Err(NclError::NearlyDisjointViolation(bi.clone(), bj.clone()));
            }
            if blocks_cross(bi, bj) || blocks_cross(bj, bi) {
                return Err(NclError::BlockCrossing(bi.clone(), bj.clone()));
            }
        }
    }
    Ok(())
}

fn nearly_disjoint(bi: &[usize], bj: &[usize]) -> bool {
    let min_i = *bi.iter().min().unwrap();
    let min_j = *bj.iter().min().unwrap();
    bi.iter().filter(|k| bj.contains(k)).all(|&k| {
        (k == min_i && bi.len() > 1 && k != min_j) || (k == min_j && bj.len() > 1 && k != min_i)
    })
}

/// Some `i1 < i2 < j1 < j2` with `i1, j1` in `bi` and `i2, j2` in `bj`.
fn blocks_cross(bi: &[usize], bj: &[usize]) -> bool {
    bi.iter().any(|&i1| {
        bj.iter()
            .any(|&i2| i1 < i2 && bi.iter().any(|&j1| i2 < j1 && bj.iter().any(|&j2| j1 < j2)))
    })
}

/// Parse `{..}{..}..` block text. Labels must cover `1..=n` where `n` is the
/// largest label. The literal blocks must be nearly disjoint, so a redundant
/// singleton or two blocks sharing a minimum are rejected here. Crossing is
/// left to [`validate_ncl`].
pub fn parse_partition(text: &str) -> Result<LinkedPartition, PartitionParseError> {
    let blocks = parse_blocks(text)?;
    let n = blocks.iter().flatten().copied().max().unwrap_or(0);
    let mut covered = vec![false; n + 1];
    let mut is_right = vec![false; n + 1];
    let mut arcs = BTreeSet::new();
    for b in &blocks {
        for &v in b {
            covered[v] = true;
        }
        for &v in &b[1..] {
            if std::mem::replace(&mut is_right[v], true) {
                return Err(PartitionParseError::DuplicateRightEndpoint(v));
            }
            arcs.insert(Arc {
                left: b[0],
                right: v,
            });
        }
    }
    if let Some(vertex) = (1..=n).find(|&v| !covered[v]) {
        return Err(PartitionParseError::Uncovered { vertex, n });
    }
    for (i, bi) in blocks.iter().enumerate() {
        for bj in &blocks[i + 1..] {
            if !nearly_disjoint(bi, bj) {
                return Err(NclError::NearlyDisjointViolation(bi.clone(), bj.clone()).into());
            }
        }
    }
    Ok(LinkedPartition { n, arcs })
}

pub fn render_partition(p: &LinkedPartition) -> String {
    p.to_string()
}

fn parse_blocks(text: &str) -> Result<Vec<Block>, PartitionParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut blocks = Vec::new();
    let syntax = |offset, expected| PartitionParseError::Syntax { offset, expected };
    if bytes.is_empty() {
        return Err(syntax(0, "'{'"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'{' {
            return Err(syntax(pos, "'{'"));
        }
        pos += 1;
        let mut block = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(pos, "a vertex label"));
            }
            let v: usize = text[start..pos]
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or(PartitionParseError::BadLabel { offset: start })?;
            if block.contains(&v) {
                return Err(PartitionParseError::RepeatedInBlock(v));
            }
            block.push(v);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b'}') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(pos, "',' or '}'")),
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(list: &[(usize, usize)]) -> Vec<Arc> {
        list.iter().map(|&(l, r)| Arc::new(l, r)).collect()
    }

    const SAMPLE: &str = "{1,4,8}{2,3}{5,6}{6,7}{8,9}";

    #[test]
    fn parse_single_vertex() {
        let p = parse_partition("{1}").unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.arc_count(), 0);
    }

    #[test]
    fn parse_sample() {
        let p = parse_partition(SAMPLE).unwrap();
        assert_eq!(p.n(), 9);
        let got: Vec<Arc> = p.arcs().copied().collect();
        assert_eq!(got, arcs(&[(1, 4), (1, 8), (2, 3), (5, 6), (6, 7), (8, 9)]));
        assert_eq!(render_partition(&p), SAMPLE);
        assert!(validate_ncl(&p).is_ok());
        assert!(validate_ncl_blockwise(&p).is_ok());
    }

    #[test]
    fn shared_minimum_is_rejected_at_parse() {
        assert_eq!(
            parse_partition("{1,2}{1,3}"),
            Err(NclError::NearlyDisjointViolation(vec![1, 2], vec![1, 3]).into())
        );
        // but the same arcs as one block are fine
        assert!(validate_ncl(&LinkedPartition::new(3, arcs(&[(1, 2), (1, 3)])).unwrap()).is_ok());
    }

    #[test]
    fn redundant_singleton_is_rejected() {
        assert!(matches!(
            parse_partition("{1}{1,2}"),
            Err(PartitionParseError::Ncl(NclError::NearlyDisjointViolation(
                ..
            )))
        ));
    }

    #[test]
    fn parse_errors() {
        use PartitionParseError::*;
        assert_eq!(
            parse_partition(""),
            Err(Syntax {
                offset: 0,
                expected: "'{'"
            })
        );
        assert_eq!(
            parse_partition("{1"),
            Err(Syntax {
                offset: 2,
                expected: "',' or '}'"
            })
        );
        assert_eq!(
            parse_partition("{1,}"),
            Err(Syntax {
                offset: 3,
                expected: "a vertex label"
            })
        );
        assert_eq!(parse_partition("{0}"), Err(BadLabel { offset: 1 }));
        assert_eq!(
            parse_partition("{1}{3}"),
            Err(Uncovered { vertex: 2, n: 3 })
        );
        assert_eq!(
            parse_partition("{1,3}{2,3}"),
            Err(DuplicateRightEndpoint(3))
        );
        assert_eq!(parse_partition("{1,1}"), Err(RepeatedInBlock(1)));
        assert_eq!(
            parse_partition("{1} {2}"),
            Err(Syntax {
                offset: 3,
                expected: "'{'"
            })
        );
    }

    #[test]
    fn noncanonical_order_is_accepted() {
        let p = parse_partition("{2,3}{1}").unwrap();
        assert_eq!(p.to_string(), "{1}{2,3}");
    }

    #[test]
    fn chain_is_valid() {
        let p = LinkedPartition::new(3, arcs(&[(1, 2), (2, 3)])).unwrap();
        assert!(validate_ncl(&p).is_ok());
        assert_eq!(p.blocks(), vec![vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn crossing_pair() {
        let p = LinkedPartition::new(4, arcs(&[(1, 3), (2, 4)])).unwrap();
        assert_eq!(
            validate_ncl(&p),
            Err(NclError::CrossingArcs(Arc::new(1, 3), Arc::new(2, 4)))
        );
        assert_eq!(
            validate_ncl_blockwise(&p),
            Err(NclError::BlockCrossing(vec![1, 3], vec![2, 4]))
        );
    }

    #[test]
    fn in_degree_violation() {
        let p = LinkedPartition::new(3, arcs(&[(1, 3), (2, 3)])).unwrap();
        assert_eq!(validate_ncl(&p), Err(NclError::InDegree(3)));
        assert!(matches!(
            validate_ncl_blockwise(&p),
            Err(NclError::NearlyDisjointViolation(..))
        ));
    }

    #[test]
    fn blocks_view() {
        assert_eq!(LinkedPartition::discrete(1).blocks(), vec![vec![1]]);
        let star = LinkedPartition::new(4, arcs(&[(1, 3), (1, 4)])).unwrap();
        assert_eq!(star.blocks(), vec![vec![1, 3, 4], vec![2]]);
        let sample = parse_partition(SAMPLE).unwrap();
        assert_eq!(
            sample.blocks(),
            vec![
                vec![1, 4, 8],
                vec![2, 3],
                vec![5, 6],
                vec![6, 7],
                vec![8, 9]
            ]
        );
    }

    #[test]
    fn restrict_relabels() {
        let sample = parse_partition(SAMPLE).unwrap();
        let sub = sample.restrict(5, 7);
        assert_eq!(sub.to_string(), "{1,2}{2,3}");
        assert_eq!(sample.restrict(2, 4).to_string(), "{1,2}{3}");
    }

    #[test]
    fn out_of_range_arc() {
        assert!(matches!(
            LinkedPartition::new(2, arcs(&[(1, 3)])),
            Err(PartitionError::ArcOutOfRange { .. })
        ));
        assert_eq!(LinkedPartition::new(0, []), Err(PartitionError::Empty));
    }

    #[test]
    fn text_order_matches_bytes_for_small_labels() {
        let texts = [
            "{1,2,3}",
            "{1,2}{2,3}",
            "{1,2}{3}",
            "{1,3}{2}",
            "{1}{2,3}",
            "{1}{2}{3}",
        ];
        let parts: Vec<NclPartition> = texts.iter().map(|t| t.parse().unwrap()).collect();
        for w in parts.windows(2) {
            assert!(w[0] < w[1]);
            assert!(w[0].to_string() < w[1].to_string());
        }
    }
}
