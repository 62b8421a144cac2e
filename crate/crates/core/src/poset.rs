//! Finite posets on the labels `1..=p`, given by their cover relation.
//!
//! A [`Poset`] is immutable once built. Construction takes any acyclic
//! relation, computes its reachability and keeps only the transitive
//! reduction as the cover relation (the Hasse diagram).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::chain::{Chain, ChainFamily};
use crate::error::{Error, Result};

/// An element label, always in `1..=p`.
pub type Element = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(Element, Element)>,
    // Indexed by label; slot 0 is unused.
    upper: Vec<Vec<Element>>,
    lower: Vec<Vec<Element>>,
    less: Vec<Vec<bool>>,
    topo: Vec<Element>,
}

impl Poset {
    /// Builds a poset on `1..=size` from an arbitrary acyclic relation.
    ///
    /// Redundant pairs (implied by transitivity) are dropped, so the stored
    /// covers form the Hasse diagram.
    pub fn new(size: usize, relation: &[(Element, Element)]) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyPoset);
        }
        for &(x, y) in relation {
            for label in [x, y] {
                if label == 0 || label > size {
                    return Err(Error::Label { label, size });
                }
            }
            if x == y {
                return Err(Error::Cycle(x));
            }
        }

        let mut succ = vec![Vec::new(); size + 1];
        let mut indegree = vec![0usize; size + 1];
        for &(x, y) in relation {
            if !succ[x].contains(&y) {
                succ[x].push(y);
                indegree[y] += 1;
            }
        }
        for s in &mut succ {
            s.sort_unstable();
        }

        // Kahn's algorithm, smallest label first for a reproducible order.
        let mut ready: BTreeSet<Element> = (1..=size).filter(|&x| indegree[x] == 0).collect();
        let mut topo = Vec::with_capacity(size);
        while let Some(x) = ready.pop_first() {
            topo.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if topo.len() < size {
            let stuck = (1..=size).find(|&x| indegree[x] > 0).unwrap_or(1);
            return Err(Error::Cycle(stuck));
        }

        let mut less = vec![vec![false; size + 1]; size + 1];
        for &x in topo.iter().rev() {
            for &y in &succ[x] {
                less[x][y] = true;
                let (row_x, row_y) = if x < y {
                    let (lo, hi) = less.split_at_mut(y);
                    (&mut lo[x], &hi[0])
                } else {
                    let (lo, hi) = less.split_at_mut(x);
                    (&mut hi[0], &lo[y])
                };
                for (a, &b) in row_x.iter_mut().zip(row_y.iter()) {
                    *a |= b;
                }
            }
        }

        let mut covers = Vec::new();
        for x in 1..=size {
            for y in 1..=size {
                if less[x][y] && !(1..=size).any(|z| less[x][z] && less[z][y]) {
                    covers.push((x, y));
                }
            }
        }

        let mut upper = vec![Vec::new(); size + 1];
        let mut lower = vec![Vec::new(); size + 1];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        for v in upper.iter_mut().chain(lower.iter_mut()) {
            v.sort_unstable();
        }

        Ok(Poset {
            size,
            covers,
            upper,
            lower,
            less,
            topo,
        })
    }

    /// The chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|x| (x, x + 1)).collect();
        Poset::new(n, &covers)
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Result<Self> {
        Poset::new(n, &[])
    }

    /// The product of chains `m × n`, with `(s, t)` labelled `(s - 1)·n + t`.
    pub fn grid(m: usize, n: usize) -> Result<Self> {
        let left = Poset::chain(m)?;
        let right = Poset::chain(n)?;
        Ok(compose(Composition::DirectProduct, &left, &right).poset)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<Element> {
        1..=self.size
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn covers(&self) -> &[(Element, Element)] {
        &self.covers
    }

    /// Elements covering `x`, ascending.
    pub fn upper_covers(&self, x: Element) -> &[Element] {
        &self.upper[x]
    }

    /// Elements covered by `x`, ascending.
    pub fn lower_covers(&self, x: Element) -> &[Element] {
        &self.lower[x]
    }

    /// A linear extension of the order.
    pub fn topological_order(&self) -> &[Element] {
        &self.topo
    }

    pub fn contains(&self, x: Element) -> bool {
        (1..=self.size).contains(&x)
    }

    pub fn lt(&self, x: Element, y: Element) -> bool {
        self.less[x][y]
    }

    pub fn le(&self, x: Element, y: Element) -> bool {
        x == y || self.less[x][y]
    }

    pub fn is_cover(&self, x: Element, y: Element) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    pub fn comparable(&self, x: Element, y: Element) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn minimal_elements(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// Whether `seq` runs from a minimal to a maximal element through covers.
    pub fn is_maximal_chain(&self, seq: &[Element]) -> bool {
        let (Some(&first), Some(&last)) = (seq.first(), seq.last()) else {
            return false;
        };
        seq.iter().all(|&x| self.contains(x))
            && self.lower[first].is_empty()
            && self.upper[last].is_empty()
            && seq.windows(2).all(|w| self.is_cover(w[0], w[1]))
    }

    /// All maximal chains, by depth-first search from the minimal elements
    /// with children visited in ascending label order. The result is in
    /// lexicographic order of the element sequences.
    pub fn maximal_chains(&self) -> ChainFamily {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for x in self.minimal_elements() {
            self.extend_chains(x, &mut path, &mut out);
        }
        ChainFamily::from_chains_unchecked(out)
    }

    fn extend_chains(&self, x: Element, path: &mut Vec<Element>, out: &mut Vec<Chain>) {
        path.push(x);
        if self.upper[x].is_empty() {
            out.push(Chain::new_unchecked(path.clone()));
        } else {
            for &y in &self.upper[x] {
                self.extend_chains(y, path, out);
            }
        }
        path.pop();
    }

    /// The interval of the given kind between two endpoints.
    pub fn interval(&self, kind: IntervalKind, from: Endpoint, to: Endpoint) -> BTreeSet<Element> {
        let (lower_open, upper_open) = match kind {
            IntervalKind::Open => (true, true),
            IntervalKind::Closed => (false, false),
            IntervalKind::DownClosed => (true, false),
            IntervalKind::UpClosed => (false, true),
        };
        self.elements()
            .filter(|&z| match from {
                Endpoint::NegInfinity => true,
                Endpoint::PosInfinity => false,
                Endpoint::Element(x) if lower_open => self.lt(x, z),
                Endpoint::Element(x) => self.le(x, z),
            })
            .filter(|&z| match to {
                Endpoint::NegInfinity => false,
                Endpoint::PosInfinity => true,
                Endpoint::Element(y) if upper_open => self.lt(z, y),
                Endpoint::Element(y) => self.le(z, y),
            })
            .collect()
    }

    /// The interval restricted to `subset`, e.g. `(x, y)_Q`.
    pub fn interval_in(
        &self,
        kind: IntervalKind,
        from: Endpoint,
        to: Endpoint,
        subset: &BTreeSet<Element>,
    ) -> BTreeSet<Element> {
        self.interval(kind, from, to)
            .intersection(subset)
            .copied()
            .collect()
    }

    /// Line-oriented text form: `p <size>` followed by `c <x> <y>` lines.
    pub fn to_text(&self) -> String {
        let mut s = format!("p {}\n", self.size);
        for (x, y) in &self.covers {
            s.push_str(&format!("c {x} {y}\n"));
        }
        s
    }

    /// Parses the text form. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut size = None;
        let mut relation = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let tag = fields.next().unwrap_or_default();
            let nums = fields
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("bad integer `{f}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            match (tag, nums.as_slice()) {
                ("p", [n]) => {
                    if size.replace(*n).is_some() {
                        return Err(Error::parse(line_no, "duplicate `p` header"));
                    }
                }
                ("c", [x, y]) => {
                    if size.is_none() {
                        return Err(Error::parse(line_no, "`c` line before `p` header"));
                    }
                    relation.push((*x, *y));
                }
                _ => return Err(Error::parse(line_no, format!("unrecognised line `{line}`"))),
            }
        }
        let size = size.ok_or_else(|| Error::parse(0, "missing `p` header"))?;
        Poset::new(size, &relation)
    }

    /// Structural fingerprint that is invariant under relabelling. Equal
    /// fingerprints are necessary (not sufficient) for isomorphism, which is
    /// enough for the small fixtures this crate ships.
    pub fn shape_signature(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut sig: Vec<_> = self
            .elements()
            .map(|x| {
                let below = self.elements().filter(|&z| self.lt(z, x)).count();
                let above = self.elements().filter(|&z| self.lt(x, z)).count();
                (below, above, self.lower[x].len(), self.upper[x].len())
            })
            .collect();
        sig.sort_unstable();
        sig
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Poset::parse(s)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// `(x, y)`
    Open,
    /// `[x, y]`
    Closed,
    /// `(x, y]`, typically `(−∞, y]`
    DownClosed,
    /// `[x, y)`, typically `[x, ∞)`
    UpClosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Element(Element),
    PosInfinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    DisjointUnion,
    OrdinalSum,
    DirectProduct,
}

/// Where an element of a composite poset came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    Left(Element),
    Right(Element),
    Pair(Element, Element),
}

#[derive(Clone, Debug)]
pub struct Composite {
    pub poset: Poset,
    /// `origin[label - 1]` is the source of `label`.
    pub origin: Vec<Origin>,
}

impl Composite {
    pub fn label_of(&self, origin: Origin) -> Option<Element> {
        self.origin.iter().position(|&o| o == origin).map(|i| i + 1)
    }
}

/// Disjoint union, ordinal sum or direct product of two posets.
///
/// Sums place `left` on `1..=p₁` and `right` on `p₁+1..=p₁+p₂`; products
/// label `(x, y)` as `(x − 1)·p₂ + y`.
pub fn compose(kind: Composition, left: &Poset, right: &Poset) -> Composite {
    let (p1, p2) = (left.size, right.size);
    let (size, covers, origin) = match kind {
        Composition::DisjointUnion | Composition::OrdinalSum => {
            let mut covers: Vec<_> = left.covers.clone();
            covers.extend(right.covers.iter().map(|&(x, y)| (x + p1, y + p1)));
            if kind == Composition::OrdinalSum {
                for x in left.maximal_elements() {
                    for y in right.minimal_elements() {
                        covers.push((x, y + p1));
                    }
                }
            }
            let origin = left
                .elements()
                .map(Origin::Left)
                .chain(right.elements().map(Origin::Right))
                .collect();
            (p1 + p2, covers, origin)
        }
        Composition::DirectProduct => {
            let label = |x: Element, y: Element| (x - 1) * p2 + y;
            let mut covers = Vec::new();
            for &(x, x2) in &left.covers {
                for y in right.elements() {
                    covers.push((label(x, y), label(x2, y)));
                }
            }
            for x in left.elements() {
                for &(y, y2) in &right.covers {
                    covers.push((label(x, y), label(x, y2)));
                }
            }
            let origin = left
                .elements()
                .flat_map(|x| right.elements().map(move |y| Origin::Pair(x, y)))
                .collect();
            (p1 * p2, covers, origin)
        }
    };
    let poset = Poset::new(size, &covers).expect("composite of valid posets is valid");
    Composite { poset, origin }
}
