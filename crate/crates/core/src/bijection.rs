//! The bijection `phi` between large (3,2)-Motzkin paths of length `n` and
//! noncrossing linked partitions of `[n+1]`, with its inverse.
//!
//! Everything is computed on arc diagrams. A union of a block with a placed
//! sub-diagram is an arc-set union, so blocks sharing a minimum coalesce.
//!
//! Forward, each axis component of the path is mapped on its own and the
//! images are glued end to start with [`concat_merge`]. For an elevated
//! component `U P_c d` of length `p`:
//!
//! | case        | `P_c`            | `d`  | image on `1..=p+1`                                     |
//! |-------------|------------------|------|--------------------------------------------------------|
//! | `Ud1Plain`  | no axis `c`      | `x`  | `phi(P_c)` on `1..p`, arcs `(1,p)`, `(1,p+1)`          |
//! | `Ud1Chain`  | has axis `c`     | `x`  | chain of all segments on `1..=p`, arc `(1,p+1)`        |
//! | `Ud2Plain`  | no axis `c`      | `y`  | `phi(P_c)` on `1..p`, `p` bare, arc `(1,p+1)`          |
//! | `Ud2Chain`  | has axis `c`     | `y`  | `phi(seg 1)`, then chain of the rest, arc `(1,p+1)`    |
//!
//! A chain link for a segment `S` of length `t` is `phi(S)` on `1..=t+1`
//! plus the spine arc `(1, t+2)`; links are glued end to start.
//!
//! Backward, the spine of a chain is recovered by walking incoming arcs from
//! vertex `p`. In-degree is at most one, so the walk is forced; it stops at
//! vertex 1 exactly in the `Ud1Chain` case.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::decompose::{
    arc_reachable, factor_components, outer_decompose, split_axis_l3, Component, DownColor,
};
use crate::structures::{Arc, LargeMotzkinPath, LinkedPartition, NclPartition, PathWord, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Level1,
    Level2,
    Ud1Plain,
    Ud1Chain,
    Ud2Plain,
    Ud2Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("nothing to merge")]
    EmptyMerge,
    #[error("component {component} matches no case: {reason}")]
    MalformedComponent {
        component: String,
        reason: &'static str,
    },
}

/// A diagram whose local vertex `v` sits at `offset + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedDiagram {
    pub offset: usize,
    pub diagram: LinkedPartition,
}

impl PlacedDiagram {
    pub fn new(offset: usize, diagram: LinkedPartition) -> Self {
        PlacedDiagram { offset, diagram }
    }

    pub fn width(&self) -> usize {
        self.diagram.n()
    }

    pub fn support(&self) -> std::ops::RangeInclusive<usize> {
        self.offset + 1..=self.offset + self.width()
    }

    pub fn absolute_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.diagram.arcs().map(move |a| Arc {
            left: a.left + self.offset,
            right: a.right + self.offset,
        })
    }
}

/// Scratch arc set used while assembling an image.
struct Canvas {
    n: usize,
    arcs: BTreeSet<Arc>,
}

impl Canvas {
    fn new(n: usize) -> Self {
        Canvas {
            n,
            arcs: BTreeSet::new(),
        }
    }

    fn place(&mut self, placed: &PlacedDiagram) {
        debug_assert!(*placed.support().end() <= self.n);
        self.arcs.extend(placed.absolute_arcs());
    }

    fn arc(&mut self, left: usize, right: usize) {
        self.arcs.insert(Arc::new(left, right));
    }

    fn finish(self) -> LinkedPartition {
        LinkedPartition::from_parts(self.n, self.arcs)
    }
}

/// Glue parts end to start: the last vertex of each part is identified with
/// the first vertex of the next. Parts of sizes `q_i + 1` give `1 + sum q_i`
/// vertices.
pub fn concat_merge(parts: &[LinkedPartition]) -> Result<LinkedPartition, BijectionError> {
    if parts.is_empty() {
        return Err(BijectionError::EmptyMerge);
    }
    let total = 1 + parts.iter().map(|p| p.n() - 1).sum::<usize>();
    let mut canvas = Canvas::new(total);
    let mut offset = 0;
    for p in parts {
        canvas.place(&PlacedDiagram::new(offset, p.clone()));
        offset += p.n() - 1;
    }
    Ok(canvas.finish())
}

pub fn phi(path: &LargeMotzkinPath) -> NclPartition {
    NclPartition::from_partition_unchecked(phi_diagram(path))
}

/// The case each axis component of `path` falls into, in order.
pub fn case_tags(path: &LargeMotzkinPath) -> Vec<CaseTag> {
    factor_components(path).iter().map(case_of).collect()
}

pub fn case_of(component: &Component) -> CaseTag {
    match component {
        Component::AxisLevel(crate::decompose::AxisColor::L1) => CaseTag::Level1,
        Component::AxisLevel(crate::decompose::AxisColor::L2) => CaseTag::Level2,
        Component::Elevated { down, inner } => {
            let plain = inner.axis_l3_positions().is_empty();
            match (down, plain) {
                (DownColor::D1, true) => CaseTag::Ud1Plain,
                (DownColor::D1, false) => CaseTag::Ud1Chain,
                (DownColor::D2, true) => CaseTag::Ud2Plain,
                (DownColor::D2, false) => CaseTag::Ud2Chain,
            }
        }
    }
}

fn phi_diagram(path: &LargeMotzkinPath) -> LinkedPartition {
    let parts: Vec<LinkedPartition> = factor_components(path).iter().map(phi_component).collect();
    if parts.is_empty() {
        return LinkedPartition::discrete(1);
    }
    concat_merge(&parts).expect("nonempty")
}

/// Image of one axis component, on `1..=len+1`.
pub fn phi_component(component: &Component) -> LinkedPartition {
    let p = component.len();
    let mut canvas = Canvas::new(p + 1);
    match component {
        Component::AxisLevel(_) => {
            if case_of(component) == CaseTag::Level1 {
                canvas.arc(1, 2);
            }
        }
        Component::Elevated { inner, .. } => {
            let split = split_axis_l3(inner);
            match case_of(component) {
                CaseTag::Ud1Plain => {
                    canvas.place(&PlacedDiagram::new(0, phi_diagram(&split.segments[0])));
                    canvas.arc(1, p);
                }
                CaseTag::Ud1Chain => {
                    canvas.place(&PlacedDiagram::new(0, chain(&split.segments)));
                }
                CaseTag::Ud2Plain => {
                    canvas.place(&PlacedDiagram::new(0, phi_diagram(&split.segments[0])));
                }
                CaseTag::Ud2Chain => {
                    let first = phi_diagram(&split.segments[0]);
                    let rest = PlacedDiagram::new(first.n(), chain(&split.segments[1..]));
                    canvas.place(&PlacedDiagram::new(0, first));
                    canvas.place(&rest);
                }
                CaseTag::Level1 | CaseTag::Level2 => unreachable!(),
            }
            canvas.arc(1, p + 1);
        }
    }
    canvas.finish()
}

/// Links `phi(S) + (1, t+2)` glued end to start.
fn chain(segments: &[LargeMotzkinPath]) -> LinkedPartition {
    let links: Vec<LinkedPartition> = segments
        .iter()
        .map(|s| {
            let t = s.len();
            let mut canvas = Canvas::new(t + 2);
            canvas.place(&PlacedDiagram::new(0, phi_diagram(s)));
            canvas.arc(1, t + 2);
            canvas.finish()
        })
        .collect();
    concat_merge(&links).expect("a chain has at least one link")
}

/// Case of an outer component relabeled to `1..=q+1`.
pub fn classify_component(c: &LinkedPartition) -> Result<CaseTag, BijectionError> {
    let malformed = |reason| BijectionError::MalformedComponent {
        component: c.to_string(),
        reason,
    };
    let q = c.n() - 1;
    if q == 0 {
        return Err(malformed("a component spans at least two vertices"));
    }
    if q == 1 {
        return Ok(if c.has_arc(1, 2) {
            CaseTag::Level1
        } else {
            CaseTag::Level2
        });
    }
    if !c.has_arc(1, q + 1) {
        return Err(malformed("the end vertices are not joined by an arc"));
    }
    Ok(if c.has_arc(1, q) {
        CaseTag::Ud1Plain
    } else if arc_reachable(c, 1, q) {
        CaseTag::Ud1Chain
    } else if !c.arcs().any(|a| a.left == q || a.right == q) {
        CaseTag::Ud2Plain
    } else {
        CaseTag::Ud2Chain
    })
}

pub fn phi_inv(p: &NclPartition) -> Result<LargeMotzkinPath, BijectionError> {
    let mut steps = Vec::with_capacity(p.n() - 1);
    invert_into(p, &mut steps)?;
    Ok(LargeMotzkinPath::from_word_unchecked(PathWord::new(steps)))
}

fn invert_into(p: &NclPartition, out: &mut Vec<Step>) -> Result<(), BijectionError> {
    let outer = outer_decompose(p);
    if !outer.is_well_formed() {
        return Err(BijectionError::MalformedComponent {
            component: p.to_string(),
            reason: "outer decomposition is not well formed",
        });
    }
    for c in outer.components {
        let tag = classify_component(&c)?;
        let c = NclPartition::from_partition_unchecked(c);
        invert_component(&c, tag, out)?;
    }
    Ok(())
}

fn invert_component(
    c: &NclPartition,
    tag: CaseTag,
    out: &mut Vec<Step>,
) -> Result<(), BijectionError> {
    let q = c.n() - 1;
    match tag {
        CaseTag::Level1 => out.push(Step::L1),
        CaseTag::Level2 => out.push(Step::L2),
        CaseTag::Ud1Plain | CaseTag::Ud2Plain => {
            out.push(Step::U);
            invert_into(&c.restrict(1, q - 1), out)?;
            out.push(if tag == CaseTag::Ud1Plain {
                Step::D1
            } else {
                Step::D2
            });
        }
        CaseTag::Ud1Chain | CaseTag::Ud2Chain => {
            let malformed = |reason| BijectionError::MalformedComponent {
                component: c.to_string(),
                reason,
            };
            let mut spine = vec![q];
            while let Some(u) = c.parent(*spine.last().unwrap()) {
                spine.push(u);
            }
            spine.reverse();
            let start = spine[0];
            match tag {
                CaseTag::Ud1Chain if start != 1 => {
                    return Err(malformed("spine does not start at vertex 1"))
                }
                CaseTag::Ud2Chain if start == 1 => return Err(malformed("spine reaches vertex 1")),
                _ => {}
            }
            if spine.len() < 2 || (start == 1 && spine.len() < 3) {
                return Err(malformed("a chain needs at least two segments"));
            }
            out.push(Step::U);
            if start > 1 {
                invert_into(&c.restrict(1, start - 1), out)?;
                out.push(Step::L3);
            }
            for (i, w) in spine.windows(2).enumerate() {
                if i > 0 {
                    out.push(Step::L3);
                }
                invert_into(&c.restrict(w[0], w[1] - 1), out)?;
            }
            out.push(if tag == CaseTag::Ud1Chain {
                Step::D1
            } else {
                Step::D2
            });
        }
    }
    Ok(())
}
