//! Faces of the maximal chain polytope, decided combinatorially.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::chain::{Chain, ChainFamily};
use crate::crown::{self, diamond_poset, find_crowns, find_stars, Verdict};
use crate::error::{Error, Result};
use crate::geometry::family_rank;
use crate::poset::{Element, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FaceTag {
    SimplexFace,
    NonSimplexFace,
    NotFace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceClass {
    pub tag: FaceTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

/// Simplex face, non-simplex face or not a face, read off the structure
/// verdict. Non-simplex dimensions are exact affine ranks.
pub fn face_class(poset: &Poset, family: &ChainFamily) -> Result<FaceClass> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(match crown::verdict(poset, family) {
        Verdict::NoStructure => FaceClass {
            tag: FaceTag::SimplexFace,
            dim: Some(family.len() - 1),
        },
        Verdict::CompleteStructure => FaceClass {
            tag: FaceTag::NonSimplexFace,
            dim: Some(family_rank(poset.size(), family)?),
        },
        Verdict::IncompleteStructure => FaceClass {
            tag: FaceTag::NotFace,
            dim: None,
        },
    })
}

/// The family together with every swap of every crown and star in it.
pub fn star_step(poset: &Poset, family: &ChainFamily) -> ChainFamily {
    let mut out = family.clone();
    for c in find_crowns(poset, family, None) {
        for d in crown::crown_swaps(family, &c) {
            out.insert(d);
        }
    }
    for s in find_stars(poset, family) {
        for d in crown::star_swaps(family, s.alpha1, s.beta1, s.alpha2, s.beta2) {
            out.insert(d);
        }
    }
    out
}

/// Every family produced on the way to the closure, starting with `family`
/// itself; each entry strictly contains the previous one.
pub fn closure_trace(poset: &Poset, family: &ChainFamily) -> Vec<ChainFamily> {
    let mut steps = vec![family.clone()];
    loop {
        let last = steps.last().expect("trace is never empty");
        let next = star_step(poset, last);
        assert!(last.is_subset(&next), "star step must be extensive");
        if next.len() == last.len() {
            return steps;
        }
        steps.push(next);
    }
}

/// The smallest closed family containing `family`. The empty family is closed.
pub fn closure(poset: &Poset, family: &ChainFamily) -> ChainFamily {
    closure_trace(poset, family).pop().expect("trace is never empty")
}

pub fn is_closed(poset: &Poset, family: &ChainFamily) -> bool {
    star_step(poset, family).len() == family.len()
}

/// Whether the segment between `e_{C₁}` and `e_{C₂}` is an edge.
pub fn is_edge(poset: &Poset, c1: &Chain, c2: &Chain) -> Result<bool> {
    Ok(!diamond_poset(poset, c1, c2)?.has_two_crown)
}

/// The two chains completing `C₁, C₂` to a rectangle, obtained from a
/// 2-crown or a star of `{C₁, C₂}`. The first returned chain starts like `C₁`.
pub fn rectangle_completion(poset: &Poset, c1: &Chain, c2: &Chain) -> Result<(Chain, Chain)> {
    if c1 == c2 {
        return Err(Error::EqualChains);
    }
    let pair = ChainFamily::new(poset, [c1.clone(), c2.clone()])?;
    if let Some(crown) = find_crowns(poset, &pair, Some(2)).into_iter().next() {
        let (a, b) = (crown.alphas(), crown.betas());
        let (i, j) = if crown.witnesses()[0] == *c1 { (0, 1) } else { (1, 0) };
        let first = c1.splice(a[i], c2, b[j]);
        let second = c2.splice(a[j], c1, b[i]);
        return Ok((first, second));
    }
    if let Some(star) = find_stars(poset, &pair).into_iter().next() {
        let gamma = star.witnesses()[0].gamma;
        return Ok((c1.splice_at(gamma, c2), c2.splice_at(gamma, c1)));
    }
    Err(Error::NotApplicable(format!("{c1} and {c2} span an edge")))
}

/// Dimension of the polytope spanned by all maximal chains.
pub fn polytope_dim(poset: &Poset) -> usize {
    family_rank(poset.size(), &poset.maximal_chains()).expect("every poset has a maximal chain")
}

/// Face counts by dimension, from vertices up to the polytope itself.
pub fn f_vector(poset: &Poset, cap: usize) -> Result<Vec<usize>> {
    Ok(face_lattice(poset, cap)?.f_vector())
}

pub const DEFAULT_CAP: usize = 20;

/// Closed families ordered by inclusion, with ∅ at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    /// Maximal chains in canonical order; faces index into this list.
    pub chains: Vec<Chain>,
    pub faces: Vec<ChainFamily>,
    /// `-1` for ∅.
    pub dims: Vec<i64>,
    /// `(i, j)` when `faces[j]` covers `faces[i]`.
    pub covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().unwrap_or(-1);
        let mut counts = vec![0; (top + 1).max(0) as usize];
        for &d in self.dims.iter().filter(|&&d| d >= 0) {
            counts[d as usize] += 1;
        }
        counts
    }

    pub fn index_of(&self, family: &ChainFamily) -> Option<usize> {
        self.faces.iter().position(|f| f == family)
    }

    /// Hasse diagram in Graphviz format, bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph faces {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, (f, d)) in self.faces.iter().zip(&self.dims).enumerate() {
            let label = if f.is_empty() { "∅".to_string() } else { f.labels().join(" ") };
            let _ = writeln!(out, "  f{i} [label=\"{label}\\ndim {d}\"];");
        }
        for (i, j) in &self.covers {
            let _ = writeln!(out, "  f{i} -> f{j};");
        }
        out.push_str("}\n");
        out
    }
}

type Mask = u128;

struct Indexed<'a> {
    poset: &'a Poset,
    chains: Vec<Chain>,
}

impl Indexed<'_> {
    fn family(&self, mask: Mask) -> ChainFamily {
        ChainFamily::from_chains_unchecked(
            (0..self.chains.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.chains[i].clone()),
        )
    }

    fn mask(&self, family: &ChainFamily) -> Mask {
        family.iter().fold(0, |m, c| {
            let i = self.chains.binary_search(c).expect("chain of this poset");
            m | 1 << i
        })
    }

    fn close(&self, mask: Mask) -> Mask {
        self.mask(&closure(self.poset, &self.family(mask)))
    }
}

fn indexed(poset: &Poset, cap: usize) -> Result<Indexed<'_>> {
    let chains = poset.maximal_chains().to_vec();
    let limit = cap.min(Mask::BITS as usize);
    if chains.len() > limit {
        return Err(Error::CapExceeded {
            count: chains.len(),
            cap: limit,
        });
    }
    Ok(Indexed { poset, chains })
}

/// All closed families, generated in lectic order by next-closure.
pub fn face_lattice(poset: &Poset, cap: usize) -> Result<FaceLattice> {
    let ix = indexed(poset, cap)?;
    let n = ix.chains.len();
    let full: Mask = if n == Mask::BITS as usize { Mask::MAX } else { (1 << n) - 1 };
    let mut masks = vec![0];
    let mut current: Mask = 0;
    while current != full {
        let mut advanced = false;
        for i in (0..n).rev() {
            let bit = 1 << i;
            if current & bit != 0 {
                continue;
            }
            let below = bit - 1;
            let next = ix.close((current & below) | bit);
            if next & below == current & below {
                current = next;
                masks.push(next);
                advanced = true;
                break;
            }
        }
        assert!(advanced, "next-closure always reaches the full family");
    }
    assemble(&ix, masks)
}

/// The same lattice by testing every subset for an incomplete structure.
pub fn face_lattice_brute_force(poset: &Poset, cap: usize) -> Result<FaceLattice> {
    let ix = indexed(poset, cap.min(24))?;
    let n = ix.chains.len();
    let mut masks = vec![0];
    for mask in 1..(1 as Mask) << n {
        if crown::verdict(poset, &ix.family(mask)) != Verdict::IncompleteStructure {
            masks.push(mask);
        }
    }
    assemble(&ix, masks)
}

fn assemble(ix: &Indexed<'_>, mut masks: Vec<Mask>) -> Result<FaceLattice> {
    let size = ix.poset.size();
    masks.sort_by_cached_key(|&m| (m.count_ones(), ix.family(m)));
    let faces: Vec<ChainFamily> = masks.iter().map(|&m| ix.family(m)).collect();
    let dims = faces
        .iter()
        .map(|f| {
            if f.is_empty() {
                Ok(-1)
            } else {
                family_rank(size, f).map(|r| r as i64)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut covers = Vec::new();
    for j in 0..masks.len() {
        let below: Vec<usize> = (0..masks.len())
            .filter(|&i| i != j && masks[i] & masks[j] == masks[i])
            .collect();
        for &i in &below {
            let maximal = !below
                .iter()
                .any(|&k| k != i && masks[i] & masks[k] == masks[i] && masks[k] != masks[i]);
            if maximal {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(FaceLattice {
        chains: ix.chains.clone(),
        faces,
        dims,
        covers,
    })
}

/// Whether closed `F₂` covers closed `F₁`: adding any single chain of
/// `F₂ ∖ F₁` to `F₁` must already close up to `F₂`. Any intermediate closed
/// family would contain such a chain, so the test is exact.
pub fn is_covering_in_k(poset: &Poset, f1: &ChainFamily, f2: &ChainFamily) -> Result<bool> {
    for f in [f1, f2] {
        if !is_closed(poset, f) {
            return Err(Error::NotClosed(f.to_string()));
        }
    }
    if !f1.is_subset(f2) || f1.len() == f2.len() {
        return Err(Error::NotNested(f1.to_string(), f2.to_string()));
    }
    Ok(f2
        .difference(f1)
        .iter()
        .all(|d| closure(poset, &f1.with(d.clone())) == *f2))
}

/// One stage `𝒞^(x,y)` of the grid flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridStage {
    pub x: usize,
    pub y: usize,
    /// `S^(x,y)` as grid coordinates `(s, t)`.
    pub support: BTreeSet<(usize, usize)>,
    /// Maximal chains inside the support.
    pub family: ChainFamily,
}

/// A maximal chain of closed families in the `m × n` grid, from one vertex
/// up to the whole polytope.
#[derive(Clone, Debug)]
pub struct GridFlag {
    pub m: usize,
    pub n: usize,
    pub poset: Poset,
    pub stages: Vec<GridStage>,
}

impl GridFlag {
    /// Label of grid point `(s, t)`.
    pub fn label(&self, s: usize, t: usize) -> Element {
        (s - 1) * self.n + t
    }

    /// `∅` followed by every stage family.
    pub fn families(&self) -> Vec<ChainFamily> {
        std::iter::once(ChainFamily::empty())
            .chain(self.stages.iter().map(|s| s.family.clone()))
            .collect()
    }

    pub fn dims(&self) -> Vec<i64> {
        self.families()
            .iter()
            .map(|f| {
                if f.is_empty() {
                    -1
                } else {
                    family_rank(self.poset.size(), f).expect("nonempty") as i64
                }
            })
            .collect()
    }

    /// Checks each consecutive inclusion, `∅ ⊂ 𝒞^(m,1)` included, and
    /// returns how many coverings were confirmed.
    pub fn verify(&self) -> Result<usize> {
        let families = self.families();
        let mut confirmed = 0;
        for w in families.windows(2) {
            if w[0].is_empty() {
                if w[1].len() == 1 {
                    confirmed += 1;
                }
                continue;
            }
            if is_covering_in_k(&self.poset, &w[0], &w[1])? {
                confirmed += 1;
            }
        }
        Ok(confirmed)
    }

    pub fn is_valid(&self) -> bool {
        let last_is_all = self
            .stages
            .last()
            .is_some_and(|s| s.family == self.poset.maximal_chains());
        last_is_all && self.verify().ok() == Some(self.stages.len())
    }
}

fn successor(m: usize, n: usize, x: usize, y: usize) -> (usize, usize) {
    if x == m - 1 || y == n {
        if x > y {
            (x - y + 1, 2)
        } else {
            (1, y - x + 2)
        }
    } else {
        (x + 1, y + 1)
    }
}

fn support(m: usize, n: usize, x: usize, y: usize) -> BTreeSet<(usize, usize)> {
    let base = |s: usize, t: usize| t == 1 || s == m;
    let diag = |s: usize, t: usize| {
        let (d, e) = (t as i64 - s as i64, y as i64 - x as i64);
        d < e || (d == e && t <= y)
    };
    let mut out = BTreeSet::new();
    for s in 1..=m {
        for t in 1..=n {
            if base(s, t) || ((x, y) != (m, 1) && diag(s, t)) {
                out.insert((s, t));
            }
        }
    }
    out
}

/// The flag `𝒞^(m,1) ⊂ 𝒞^(m−1,2) ⊂ … ⊂ 𝒞^(1,n)` of the `m × n` grid.
pub fn grid_flag(m: usize, n: usize) -> Result<GridFlag> {
    let poset = Poset::grid(m, n)?;
    let all = poset.maximal_chains();
    let mut indices = vec![(m, 1)];
    if m > 1 && n > 1 {
        let mut cur = (m - 1, 2);
        indices.push(cur);
        while cur != (1, n) {
            cur = successor(m, n, cur.0, cur.1);
            indices.push(cur);
        }
    }
    let stages = indices
        .into_iter()
        .map(|(x, y)| {
            let support = support(m, n, x, y);
            let labels: BTreeSet<Element> =
                support.iter().map(|&(s, t)| (s - 1) * n + t).collect();
            let family = all
                .iter()
                .filter(|c| c.elements().iter().all(|e| labels.contains(e)))
                .cloned()
                .collect();
            GridStage {
                x,
                y,
                support,
                family,
            }
        })
        .collect();
    Ok(GridFlag {
        m,
        n,
        poset,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fam(p: &Poset, s: &str) -> ChainFamily {
        ChainFamily::parse(p, s).unwrap()
    }

    fn chain(p: &Poset, s: &str) -> Chain {
        Chain::parse(p, s).unwrap()
    }

    #[test]
    fn classes() {
        let p2 = corpus::p2();
        let c = face_class(&p2, &fam(&p2, "1278;135;1368;478")).unwrap();
        assert_eq!((c.tag, c.dim), (FaceTag::SimplexFace, Some(3)));
        assert_eq!(face_class(&p2, &fam(&p2, "125;1368;478")).unwrap().tag, FaceTag::NotFace);
        let p4 = corpus::p4();
        let c = face_class(&p4, &fam(&p4, "12579;12589;13579;13589")).unwrap();
        assert_eq!((c.tag, c.dim), (FaceTag::NonSimplexFace, Some(2)));
        assert!(face_class(&p4, &ChainFamily::empty()).is_err());
    }

    #[test]
    fn steps_and_closures() {
        // (1,4,2,5) and (2,6,3,4) are both 2-crowns, so one step suffices
        let p5 = corpus::p5();
        let trace = closure_trace(&p5, &fam(&p5, "14;25;26;34"));
        assert_eq!(trace.len(), 2);
        assert_eq!(trace[1], p5.maximal_chains());

        let p1 = corpus::p1();
        let step = star_step(&p1, &fam(&p1, "1356;2456"));
        assert_eq!(step.labels(), ["1356", "1456", "2356", "2456"]);

        let p3 = corpus::p3();
        let start = fam(&p3, "146;257;38");
        let once = star_step(&p3, &start);
        assert_eq!(once, fam(&p3, "146;257;38;246;357;148;256;17"));
        assert_eq!(star_step(&p3, &once), p3.maximal_chains());
        let closed = fam(&p3, "146;148;17");
        assert_eq!(closure(&p3, &closed), closed);
        assert!(closure(&p3, &ChainFamily::empty()).is_empty());
    }

    #[test]
    fn edges_and_rectangles() {
        let p1 = corpus::p1();
        assert!(is_edge(&p1, &chain(&p1, "1356"), &chain(&p1, "1357")).unwrap());
        assert!(!is_edge(&p1, &chain(&p1, "1356"), &chain(&p1, "2456")).unwrap());
        let (a, b) = rectangle_completion(&p1, &chain(&p1, "1356"), &chain(&p1, "2456")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("1456".into(), "2356".into()));
        assert!(matches!(
            rectangle_completion(&p1, &chain(&p1, "1356"), &chain(&p1, "1357")),
            Err(Error::NotApplicable(_))
        ));

        let p4 = corpus::p4();
        assert!(!is_edge(&p4, &chain(&p4, "12579"), &chain(&p4, "13589")).unwrap());
        let (a, b) = rectangle_completion(&p4, &chain(&p4, "12579"), &chain(&p4, "13589")).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("12589".into(), "13579".into()));
    }

    #[test]
    fn dimensions() {
        assert_eq!(polytope_dim(&corpus::p1()), 3);
        assert_eq!(polytope_dim(&corpus::p3()), 6);
        assert_eq!(polytope_dim(&Poset::grid(3, 3).unwrap()), 4);
        assert_eq!(f_vector(&corpus::p1(), DEFAULT_CAP).unwrap(), [8, 12, 6, 1]);
    }

    #[test]
    fn small_lattices() {
        let a = Poset::antichain(4).unwrap();
        let lat = face_lattice(&a, DEFAULT_CAP).unwrap();
        assert_eq!(lat.len(), 16);
        assert_eq!(lat.f_vector(), [4, 6, 4, 1]);

        let n = Poset::chain(3).unwrap();
        let lat = face_lattice(&n, DEFAULT_CAP).unwrap();
        assert_eq!(lat.dims, [-1, 0]);
        assert_eq!(lat.covers, [(0, 1)]);

        let p4 = corpus::p4();
        let fast = face_lattice(&p4, DEFAULT_CAP).unwrap();
        let slow = face_lattice_brute_force(&p4, DEFAULT_CAP).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast.f_vector()[0], 6);
        assert!(fast.to_dot().starts_with("digraph faces"));

        // alternating face counts of a 9-polytope sum to 2
        let f = f_vector(&Poset::grid(4, 4).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!((f.len(), f[0], f[9]), (10, 20, 1));
        let euler: i64 = f[..9]
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum();
        assert_eq!(euler, 2);

        assert!(matches!(
            face_lattice(&Poset::grid(4, 4).unwrap(), 10),
            Err(Error::CapExceeded { count: 20, cap: 10 })
        ));
    }

    #[test]
    fn coverings() {
        let p3 = corpus::p3();
        assert!(is_covering_in_k(&p3, &fam(&p3, "146;148;17"), &fam(&p3, "146;148;17;246;248")).unwrap());
        assert!(!is_covering_in_k(&p3, &fam(&p3, "146"), &fam(&p3, "146;148;17")).unwrap());
        assert!(matches!(
            is_covering_in_k(&p3, &fam(&p3, "146;257;38"), &p3.maximal_chains()),
            Err(Error::NotClosed(_))
        ));
        assert!(matches!(
            is_covering_in_k(&p3, &fam(&p3, "146;148"), &fam(&p3, "146;148")),
            Err(Error::NotNested(..))
        ));
    }

    #[test]
    fn grid_flags() {
        let flag = grid_flag(3, 3).unwrap();
        let idx: Vec<_> = flag.stages.iter().map(|s| (s.x, s.y)).collect();
        assert_eq!(idx, [(3, 1), (2, 2), (1, 2), (2, 3), (1, 3)]);
        assert_eq!(flag.dims(), [-1, 0, 1, 2, 3, 4]);
        assert!(flag.is_valid());

        let flag = grid_flag(2, 2).unwrap();
        assert_eq!(flag.stages.last().unwrap().family.len(), 2);
        assert!(flag.is_valid());

        let flag = grid_flag(4, 1).unwrap();
        assert_eq!(flag.stages.len(), 1);
        assert_eq!(flag.dims(), [-1, 0]);
    }
}
