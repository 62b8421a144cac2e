//! Maximal chains and families of them.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{Element, Poset};

/// A chain stored as its ascending element sequence.
///
/// Ordering is lexicographic on the sequence, which is also the order in
/// which [`Poset::maximal_chains`] produces chains.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain(Vec<Element>);

impl Chain {
    /// Validates that `seq` is a maximal chain of `poset`.
    pub fn maximal(poset: &Poset, seq: Vec<Element>) -> Result<Self> {
        if poset.is_maximal_chain(&seq) {
            Ok(Chain(seq))
        } else {
            Err(Error::NotMaximalChain(render(&seq)))
        }
    }

    pub(crate) fn new_unchecked(seq: Vec<Element>) -> Self {
        Chain(seq)
    }

    /// Parses `1356` (single-digit labels) or `1,3,5,6` and validates it.
    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        Chain::maximal(poset, parse_sequence(text)?)
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.0.contains(&x)
    }

    pub fn position(&self, x: Element) -> Option<usize> {
        self.0.iter().position(|&z| z == x)
    }

    /// Elements strictly between `lo` and `hi` along the chain; empty when
    /// either is absent or they are out of order.
    pub fn open_segment(&self, lo: Element, hi: Element) -> &[Element] {
        match (self.position(lo), self.position(hi)) {
            (Some(i), Some(j)) if i < j => &self.0[i + 1..j],
            _ => &[],
        }
    }

    /// `(−∞, upto]` of this chain followed by `[from, ∞)` of `other`.
    ///
    /// Callers guarantee `upto ⋖ from` (or `upto == from` with `from`
    /// skipped, see [`Chain::splice_at`]) so the result is again maximal.
    pub(crate) fn splice(&self, upto: Element, other: &Chain, from: Element) -> Chain {
        let i = self.position(upto).expect("splice point on first chain");
        let j = other.position(from).expect("splice point on second chain");
        let mut seq = self.0[..=i].to_vec();
        seq.extend_from_slice(&other.0[j..]);
        Chain(seq)
    }

    /// `(−∞, γ]` of this chain followed by `(γ, ∞)` of `other`.
    pub(crate) fn splice_at(&self, gamma: Element, other: &Chain) -> Chain {
        let i = self.position(gamma).expect("γ on first chain");
        let j = other.position(gamma).expect("γ on second chain");
        let mut seq = self.0[..=i].to_vec();
        seq.extend_from_slice(&other.0[j + 1..]);
        Chain(seq)
    }

    /// 0/1 incidence vector over `1..=size`.
    pub fn incidence(&self, size: usize) -> Vec<u8> {
        let mut v = vec![0; size];
        for &x in &self.0 {
            v[x - 1] = 1;
        }
        v
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

/// Digit-string form when every label is at most 9, commas otherwise.
pub fn render(seq: &[Element]) -> String {
    if seq.iter().all(|&x| x <= 9) {
        seq.iter().map(|x| x.to_string()).collect()
    } else {
        seq.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_sequence(text: &str) -> Result<Vec<Element>> {
    let text = text.trim();
    let bad = |tok: &str| Error::parse(0, format!("bad chain element `{tok}` in `{text}`"));
    if text.is_empty() {
        return Err(Error::parse(0, "empty chain"));
    }
    if text.contains(',') {
        text.split(',')
            .map(|t| t.trim().parse::<Element>().map_err(|_| bad(t)))
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Element)
                    .ok_or_else(|| bad(&c.to_string()))
            })
            .collect()
    }
}

/// A duplicate-free set of maximal chains of one poset, kept in canonical
/// (lexicographic) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainFamily(BTreeSet<Chain>);

impl ChainFamily {
    pub fn new(poset: &Poset, chains: impl IntoIterator<Item = Chain>) -> Result<Self> {
        let set: BTreeSet<Chain> = chains.into_iter().collect();
        for c in &set {
            if !poset.is_maximal_chain(c.elements()) {
                return Err(Error::NotMaximalChain(c.to_string()));
            }
        }
        Ok(ChainFamily(set))
    }

    pub fn empty() -> Self {
        ChainFamily(BTreeSet::new())
    }

    pub(crate) fn from_chains_unchecked(chains: impl IntoIterator<Item = Chain>) -> Self {
        ChainFamily(chains.into_iter().collect())
    }

    /// Parses `;`-separated chains, e.g. `125;1368;478`.
    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        let chains = text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Chain::parse(poset, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainFamily(chains.into_iter().collect()))
    }

    /// Parses the file form: one comma-separated chain per line, `#` comments.
    pub fn parse_lines(poset: &Poset, text: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let seq = line
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Element>()
                        .map_err(|_| Error::parse(idx + 1, format!("bad element `{}`", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            set.insert(Chain::maximal(poset, seq)?);
        }
        Ok(ChainFamily(set))
    }

    /// File form: one comma-separated chain per line.
    pub fn to_lines(&self) -> String {
        self.0
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.elements().iter().map(|x| x.to_string()).collect();
                parts.join(",") + "\n"
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Chain> + Clone {
        self.0.iter()
    }

    pub fn contains(&self, chain: &Chain) -> bool {
        self.0.contains(chain)
    }

    pub fn first(&self) -> Option<&Chain> {
        self.0.first()
    }

    /// The subfamily of chains passing through every given element.
    pub fn through<'a>(&'a self, elems: &'a [Element]) -> impl Iterator<Item = &'a Chain> + 'a {
        self.0
            .iter()
            .filter(move |c| elems.iter().all(|&x| c.contains(x)))
    }

    pub fn has_chain_through(&self, elems: &[Element]) -> bool {
        self.through(elems).next().is_some()
    }

    pub fn insert(&mut self, chain: Chain) -> bool {
        self.0.insert(chain)
    }

    pub fn with(&self, chain: Chain) -> Self {
        let mut out = self.clone();
        out.0.insert(chain);
        out
    }

    pub fn union(&self, other: &ChainFamily) -> Self {
        ChainFamily(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &ChainFamily) -> Self {
        ChainFamily(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &ChainFamily) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Chain> {
        self.0.iter().cloned().collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }

    /// Coordinate-wise sum of the incidence vectors.
    pub fn incidence_sum(&self, size: usize) -> Vec<u64> {
        let mut sum = vec![0u64; size];
        for c in &self.0 {
            for &x in c.elements() {
                sum[x - 1] += 1;
            }
        }
        sum
    }
}

/// `{125,1368,478}`, or `{(1,2,10),(1,3,10)}` once labels exceed 9.
impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|c| c.0.iter().any(|&x| x > 9));
        let parts: Vec<String> = if wide {
            self.labels().into_iter().map(|l| format!("({l})")).collect()
        } else {
            self.labels()
        };
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromIterator<Chain> for ChainFamily {
    fn from_iter<I: IntoIterator<Item = Chain>>(iter: I) -> Self {
        ChainFamily(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ChainFamily {
    type Item = &'a Chain;
    type IntoIter = std::collections::btree_set::Iter<'a, Chain>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parse_and_render() {
        let p1 = corpus::p1();
        let c = Chain::parse(&p1, "1356").unwrap();
        assert_eq!(c.elements(), &[1, 3, 5, 6]);
        assert_eq!(c.to_string(), "1356");
        assert_eq!(Chain::parse(&p1, "1,3,5,6").unwrap(), c);
        assert!(matches!(Chain::parse(&p1, "136"), Err(Error::NotMaximalChain(_))));
        assert!(matches!(Chain::parse(&p1, "13x"), Err(Error::Parse { .. })));
        assert_eq!(render(&[1, 10, 12]), "1,10,12");
        let grid = Poset::grid(2, 5).unwrap();
        let f = ChainFamily::parse(&grid, "1,2,3,4,5,10;1,6,7,8,9,10").unwrap();
        assert_eq!(f.to_string(), "{(1,2,3,4,5,10),(1,6,7,8,9,10)}");
    }

    #[test]
    fn family_is_canonical_and_deduplicated() {
        let p2 = corpus::p2();
        let f = ChainFamily::parse(&p2, "478;125;1368;125").unwrap();
        assert_eq!(f.labels(), ["125", "1368", "478"]);
        assert_eq!(f.to_string(), "{125,1368,478}");
        let again = ChainFamily::parse_lines(&p2, &f.to_lines()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn splices() {
        let p1 = corpus::p1();
        let a = Chain::parse(&p1, "1356").unwrap();
        let b = Chain::parse(&p1, "2457").unwrap();
        assert_eq!(a.splice(1, &b, 4).to_string(), "1457");
        assert_eq!(a.splice_at(5, &b).to_string(), "1357");
        assert_eq!(a.open_segment(1, 6), &[3, 5]);
        assert!(a.open_segment(6, 1).is_empty());
    }
}
