//! Structural surgery used by the bijection: factoring a large path into
//! axis components, elevation, splitting at axis level-3 steps, and the
//! outer-arc decomposition of a partition.

use thiserror::Error;

use crate::structures::{
    LargeMotzkinPath, LinkedPartition, MotzkinPath, NclPartition, PathWord, Step,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisColor {
    L1,
    L2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DownColor {
    D1,
    D2,
}

impl AxisColor {
    pub fn step(self) -> Step {
        match self {
            AxisColor::L1 => Step::L1,
            AxisColor::L2 => Step::L2,
        }
    }
}

impl DownColor {
    pub fn step(self) -> Step {
        match self {
            DownColor::D1 => Step::D1,
            DownColor::D2 => Step::D2,
        }
    }

    pub fn from_step(s: Step) -> Option<Self> {
        match s {
            Step::D1 => Some(DownColor::D1),
            Step::D2 => Some(DownColor::D2),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("an axis level step has no elevation to strip")]
    NotElevated,
}

/// A piece of a large path between two consecutive visits to the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    AxisLevel(AxisColor),
    /// `U · inner · down`, touching the axis only at its ends.
    Elevated {
        down: DownColor,
        inner: MotzkinPath,
    },
}

impl Component {
    pub fn len(&self) -> usize {
        match self {
            Component::AxisLevel(_) => 1,
            Component::Elevated { inner, .. } => inner.len() + 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> PathWord {
        match self {
            Component::AxisLevel(c) => PathWord::new(vec![c.step()]),
            Component::Elevated { down, inner } => std::iter::once(Step::U)
                .chain(inner.steps().iter().copied())
                .chain(std::iter::once(down.step()))
                .collect(),
        }
    }
}

pub fn factor_components(path: &LargeMotzkinPath) -> Vec<Component> {
    let steps = path.steps();
    let mut out = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        match steps[i] {
            Step::L1 => out.push(Component::AxisLevel(AxisColor::L1)),
            Step::L2 => out.push(Component::AxisLevel(AxisColor::L2)),
            Step::U => {
                let mut h = 1;
                let mut j = i + 1;
                while h > 0 {
                    h += steps[j].height_delta();
                    j += 1;
                }
                let inner =
                    MotzkinPath::from_word_unchecked(PathWord::new(steps[i + 1..j - 1].to_vec()));
                let down = DownColor::from_step(steps[j - 1])
                    .expect("elevated piece ends with a down step");
                out.push(Component::Elevated { down, inner });
                i = j;
                continue;
            }
            s => unreachable!("step {s:?} cannot start an axis component of a large path"),
        }
        i += 1;
    }
    out
}

/// Concatenation of component words.
pub fn concat_components(components: &[Component]) -> PathWord {
    components
        .iter()
        .flat_map(|c| c.word().into_steps())
        .collect()
}

pub fn elevate(inner: MotzkinPath, down: DownColor) -> Component {
    Component::Elevated { down, inner }
}

pub fn strip_elevation(c: &Component) -> Result<(MotzkinPath, DownColor), DecomposeError> {
    match c {
        Component::Elevated { down, inner } => Ok((inner.clone(), *down)),
        Component::AxisLevel(_) => Err(DecomposeError::NotElevated),
    }
}

/// A Motzkin path cut at its axis level-3 steps. `k = segments.len() >= 1`;
/// the `k - 1` separators are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisSplit {
    pub segments: Vec<LargeMotzkinPath>,
}

impl AxisSplit {
    pub fn k(&self) -> usize {
        self.segments.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.len()).collect()
    }

    /// Segments joined with level-3 separators.
    pub fn reassemble(&self) -> MotzkinPath {
        let mut steps = Vec::new();
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                steps.push(Step::L3);
            }
            steps.extend_from_slice(s.steps());
        }
        MotzkinPath::from_word_unchecked(PathWord::new(steps))
    }
}

pub fn split_axis_l3(path: &MotzkinPath) -> AxisSplit {
    let steps = path.steps();
    let mut segments = Vec::new();
    let mut start = 0;
    for cut in path
        .axis_l3_positions()
        .into_iter()
        .chain(std::iter::once(steps.len()))
    {
        segments.push(LargeMotzkinPath::from_word_unchecked(PathWord::new(
            steps[start..cut].to_vec(),
        )));
        start = cut + 1;
    }
    AxisSplit { segments }
}

/// Split points `s_1 = 1 < ... < s_{m+1} = n` and the components between
/// them, relabeled to start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterDecomposition {
    pub split_points: Vec<usize>,
    pub components: Vec<LinkedPartition>,
}

impl OuterDecomposition {
    pub fn m(&self) -> usize {
        self.components.len()
    }

    /// Every component either is the arc-free pair or joins its two ends in
    /// one block.
    pub fn is_well_formed(&self) -> bool {
        self.components.iter().all(|c| {
            let q = c.n();
            (q == 2 && c.arc_count() == 0) || c.has_arc(1, q)
        }) && self.split_points.windows(2).all(|w| w[0] < w[1])
    }
}

/// Cut at every vertex that lies strictly inside no arc.
pub fn outer_decompose(p: &NclPartition) -> OuterDecomposition {
    let n = p.n();
    let mut depth = vec![0i64; n + 2];
    for a in p.arcs() {
        depth[a.left + 1] += 1;
        depth[a.right] -= 1;
    }
    let mut split_points = Vec::new();
    let mut cover = 0;
    for (v, d) in depth.iter().enumerate().take(n + 1).skip(1) {
        cover += d;
        if cover == 0 {
            split_points.push(v);
        }
    }
    let components = split_points
        .windows(2)
        .map(|w| p.restrict(w[0], w[1]).into_partition())
        .collect();
    OuterDecomposition {
        split_points,
        components,
    }
}

/// Whether `a` and `b` are joined by a chain of arcs, ignoring direction.
/// Every vertex reaches itself.
pub fn arc_reachable(p: &LinkedPartition, a: usize, b: usize) -> bool {
    let n = p.n();
    let mut adj = vec![Vec::new(); n + 1];
    for arc in p.arcs() {
        adj[arc.left].push(arc.right);
        adj[arc.right].push(arc.left);
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        if v == b {
            return true;
        }
        for &w in &adj[v] {
            if !std::mem::replace(&mut seen[w], true) {
                stack.push(w);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{parse_path, validate_large, validate_motzkin};

    fn large(s: &str) -> LargeMotzkinPath {
        validate_large(&parse_path(s).unwrap()).unwrap()
    }

    fn motzkin(s: &str) -> MotzkinPath {
        validate_motzkin(&parse_path(s).unwrap()).unwrap()
    }

    fn ncl(s: &str) -> NclPartition {
        s.parse().unwrap()
    }

    #[test]
    fn factor_examples() {
        assert!(factor_components(&large("")).is_empty());
        assert_eq!(
            factor_components(&large("UbxUbUxcUycy")),
            vec![
                elevate(motzkin("b"), DownColor::D1),
                elevate(motzkin("bUxcUyc"), DownColor::D2)
            ]
        );
        assert_eq!(
            factor_components(&large("abUx")),
            vec![
                Component::AxisLevel(AxisColor::L1),
                Component::AxisLevel(AxisColor::L2),
                elevate(motzkin(""), DownColor::D1)
            ]
        );
    }

    #[test]
    fn elevation() {
        assert_eq!(elevate(motzkin(""), DownColor::D2).word().to_string(), "Uy");
        let c = factor_components(&large("Ucx")).remove(0);
        assert_eq!(strip_elevation(&c), Ok((motzkin("c"), DownColor::D1)));
        assert_eq!(
            elevate(motzkin("bUxcUyc"), DownColor::D2)
                .word()
                .to_string(),
            "UbUxcUycy"
        );
        assert_eq!(
            strip_elevation(&Component::AxisLevel(AxisColor::L1)),
            Err(DecomposeError::NotElevated)
        );
    }

    #[test]
    fn split_examples() {
        let s = split_axis_l3(&motzkin(""));
        assert_eq!(s.k(), 1);
        assert_eq!(s.segments[0].len(), 0);

        let s = split_axis_l3(&motzkin("c"));
        assert_eq!(s.lengths(), vec![0, 0]);
        assert_eq!(s.reassemble(), motzkin("c"));

        let s = split_axis_l3(&motzkin("bUxcUyc"));
        assert_eq!(s.lengths(), vec![3, 2, 0]);
        let texts: Vec<String> = s.segments.iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["bUx", "Uy", ""]);
    }

    #[test]
    fn outer_examples() {
        let d = outer_decompose(&ncl("{1}{2}"));
        assert_eq!(d.split_points, vec![1, 2]);
        assert_eq!(d.m(), 1);
        assert_eq!(d.components[0].arc_count(), 0);

        let d = outer_decompose(&ncl("{1,3,4}{2}{4,13}{5,6,7}{8,10,11}{9}{11,12}"));
        assert_eq!(d.split_points, vec![1, 4, 13]);
        assert_eq!(d.components[0].to_string(), "{1,3,4}{2}");
        assert_eq!(d.components[1].n(), 10);
        assert!(d.is_well_formed());

        let d = outer_decompose(&ncl("{1,2}{2,3}"));
        assert_eq!(d.split_points, vec![1, 2, 3]);
        assert!(d.components.iter().all(|c| c.to_string() == "{1,2}"));

        let d = outer_decompose(&ncl("{1}"));
        assert_eq!(d.split_points, vec![1]);
        assert_eq!(d.m(), 0);
    }

    #[test]
    fn reachability() {
        assert!(arc_reachable(&ncl("{1,2}{2,3}"), 1, 3));
        assert!(!arc_reachable(&ncl("{1,4}{2,3}"), 1, 3));
        assert!(arc_reachable(&ncl("{1}"), 1, 1));
        assert!(arc_reachable(&ncl("{1,3}{2}"), 3, 1));
    }
}
