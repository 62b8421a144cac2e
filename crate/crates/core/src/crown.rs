//! Guided crowns and guided stars of a chain family.
//!
//! A guided ρ-crown is a cyclic sequence `α₁ ⋖ β₁ ⋗ α₂ ⋖ β₂ ⋗ … ⋖ β_ρ ⋗ α₁`
//! of covers with pairwise distinct α's and pairwise distinct β's, where
//! every `α_i ⋖ β_i` is realised inside some chain of the family (a guided
//! edge) and the closing covers `α_i ⋖ β_{i−1}` are arbitrary covers of the
//! poset (free edges).
//!
//! A guided star `(α₁, β₁, α₂, β₂)` has `α₁ ∥ α₂`, `β₁ ∥ β₂` and two chains
//! `C₁ ∋ α₁, β₁` and `C₂ ∋ α₂, β₂` that share an element `γ` strictly
//! inside both intervals.
//!
//! Both are reported up to cyclic permutation only. Reflections are kept:
//! `(2,7,3,8)` and `(2,8,3,7)` are different stars.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chain::{Chain, ChainFamily};
use crate::error::{Error, Result};
use crate::poset::{Element, Poset};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GuidedCrown {
    alphas: Vec<Element>,
    betas: Vec<Element>,
    witnesses: Vec<Chain>,
}

impl GuidedCrown {
    /// Validates the crown conditions against `family` and stores it in
    /// canonical rotation (smallest α first).
    pub fn new(
        poset: &Poset,
        family: &ChainFamily,
        alphas: Vec<Element>,
        betas: Vec<Element>,
    ) -> Result<Self> {
        let rho = alphas.len();
        let invalid = |why: &str| Err(Error::Witness(format!("not a crown: {why}")));
        if rho < 2 || betas.len() != rho {
            return invalid("needs ρ ≥ 2 matching α and β sequences");
        }
        if distinct(&alphas) < rho || distinct(&betas) < rho {
            return invalid("α's and β's must be pairwise distinct");
        }
        if alphas.iter().chain(&betas).any(|&x| !poset.contains(x)) {
            return invalid("label out of range");
        }
        for i in 0..rho {
            let prev = (i + rho - 1) % rho;
            if !poset.is_cover(alphas[i], betas[i]) || !poset.is_cover(alphas[i], betas[prev]) {
                return invalid("missing cover relation");
            }
        }
        let mut witnesses = Vec::with_capacity(rho);
        for i in 0..rho {
            match family.through(&[alphas[i], betas[i]]).next() {
                Some(c) => witnesses.push(c.clone()),
                None => return invalid("a guided cover is not realised in the family"),
            }
        }
        let start = (0..rho).min_by_key(|&i| alphas[i]).unwrap_or(0);
        let (mut alphas, mut betas) = (alphas, betas);
        alphas.rotate_left(start);
        betas.rotate_left(start);
        witnesses.rotate_left(start);
        Ok(GuidedCrown {
            alphas,
            betas,
            witnesses,
        })
    }

    pub fn rho(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Element] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Element] {
        &self.betas
    }

    /// One chain of the family through `α_i` and `β_i`, for each `i`.
    pub fn witnesses(&self) -> &[Chain] {
        &self.witnesses
    }

    /// `(α₁, β₁, α₂, β₂, …)`.
    pub fn sequence(&self) -> Vec<Element> {
        self.alphas
            .iter()
            .zip(&self.betas)
            .flat_map(|(&a, &b)| [a, b])
            .collect()
    }

    fn prev(&self, i: usize) -> usize {
        (i + self.rho() - 1) % self.rho()
    }
}

fn distinct(v: &[Element]) -> usize {
    v.iter().collect::<BTreeSet<_>>().len()
}

/// A choice of chains `C₁ ∈ 𝒞_{α₁β₁}`, `C₂ ∈ 𝒞_{α₂β₂}` and a shared `γ`
/// strictly inside both intervals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarWitness {
    pub first: Chain,
    pub second: Chain,
    pub gamma: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GuidedStar {
    pub alpha1: Element,
    pub beta1: Element,
    pub alpha2: Element,
    pub beta2: Element,
    witnesses: Vec<StarWitness>,
}

impl GuidedStar {
    pub fn tuple(&self) -> (Element, Element, Element, Element) {
        (self.alpha1, self.beta1, self.alpha2, self.beta2)
    }

    /// Every admissible `(C₁, C₂, γ)` in the family, sorted.
    pub fn witnesses(&self) -> &[StarWitness] {
        &self.witnesses
    }

    pub fn gammas(&self) -> Vec<Element> {
        let set: BTreeSet<_> = self.witnesses.iter().map(|w| w.gamma).collect();
        set.into_iter().collect()
    }
}

/// Borrowed view of either kind of structure.
#[derive(Clone, Copy, Debug)]
pub enum StructureRef<'a> {
    Crown(&'a GuidedCrown),
    Star(&'a GuidedStar),
}

impl<'a> From<&'a GuidedCrown> for StructureRef<'a> {
    fn from(c: &'a GuidedCrown) -> Self {
        StructureRef::Crown(c)
    }
}

impl<'a> From<&'a GuidedStar> for StructureRef<'a> {
    fn from(s: &'a GuidedStar) -> Self {
        StructureRef::Star(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NoStructure,
    CompleteStructure,
    IncompleteStructure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flagged<T> {
    pub item: T,
    pub complete: bool,
    pub missing: Vec<Chain>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub verdict: Verdict,
    pub crowns: Vec<Flagged<GuidedCrown>>,
    pub stars: Vec<Flagged<GuidedStar>>,
}

/// All guided stars of `family`, each with its full witness list.
pub fn find_stars(poset: &Poset, family: &ChainFamily) -> Vec<GuidedStar> {
    let mut found: BTreeMap<(Element, Element, Element, Element), BTreeSet<StarWitness>> =
        BTreeMap::new();
    let chains: Vec<&Chain> = family.iter().collect();
    for (i, c1) in chains.iter().enumerate() {
        for c2 in &chains[i + 1..] {
            collect_stars(poset, c1, c2, &mut found);
        }
    }
    found
        .into_iter()
        .map(|((alpha1, beta1, alpha2, beta2), w)| GuidedStar {
            alpha1,
            beta1,
            alpha2,
            beta2,
            witnesses: w.into_iter().collect(),
        })
        .collect()
}

fn collect_stars(
    poset: &Poset,
    c1: &Chain,
    c2: &Chain,
    found: &mut BTreeMap<(Element, Element, Element, Element), BTreeSet<StarWitness>>,
) {
    let (s1, s2) = (c1.elements(), c2.elements());
    for (i, &gamma) in s1.iter().enumerate() {
        let Some(j) = c2.position(gamma) else {
            continue;
        };
        for &a1 in &s1[..i] {
            for &a2 in &s2[..j] {
                if poset.comparable(a1, a2) {
                    continue;
                }
                for &b1 in &s1[i + 1..] {
                    for &b2 in &s2[j + 1..] {
                        if poset.comparable(b1, b2) {
                            continue;
                        }
                        let (key, witness) = if (a1, b1) <= (a2, b2) {
                            let w = StarWitness {
                                first: c1.clone(),
                                second: c2.clone(),
                                gamma,
                            };
                            ((a1, b1, a2, b2), w)
                        } else {
                            let w = StarWitness {
                                first: c2.clone(),
                                second: c1.clone(),
                                gamma,
                            };
                            ((a2, b2, a1, b1), w)
                        };
                        found.entry(key).or_default().insert(witness);
                    }
                }
            }
        }
    }
}

/// All guided crowns with `ρ ≤ max_rho` (default: the poset size).
///
/// Crowns are alternating cycles over guided edges `α → β` and free edges
/// `β → α′`. The search only starts from the smallest α of each cycle, so
/// every crown is found once, already in canonical rotation.
pub fn find_crowns(poset: &Poset, family: &ChainFamily, max_rho: Option<usize>) -> Vec<GuidedCrown> {
    let max_rho = max_rho.unwrap_or(poset.size());
    let guided: Vec<Vec<Element>> = (0..=poset.size())
        .map(|a| {
            if a == 0 {
                return Vec::new();
            }
            poset
                .upper_covers(a)
                .iter()
                .copied()
                .filter(|&b| family.has_chain_through(&[a, b]))
                .collect()
        })
        .collect();

    let mut out: Vec<(Vec<Element>, Vec<Element>)> = Vec::new();
    if max_rho < 2 {
        return Vec::new();
    }
    for start in poset.elements() {
        if guided[start].is_empty() {
            continue;
        }
        let mut search = CrownSearch {
            poset,
            guided: &guided,
            start,
            max_rho,
            alphas: vec![start],
            betas: Vec::new(),
            found: &mut out,
        };
        search.extend(start);
    }

    let mut crowns: Vec<GuidedCrown> = out
        .into_iter()
        .map(|(alphas, betas)| {
            let witnesses = alphas
                .iter()
                .zip(&betas)
                .map(|(&a, &b)| family.through(&[a, b]).next().cloned().expect("guided edge"))
                .collect();
            GuidedCrown {
                alphas,
                betas,
                witnesses,
            }
        })
        .collect();
    crowns.sort_by_key(|c| (c.rho(), c.sequence()));
    crowns
}

struct CrownSearch<'a> {
    poset: &'a Poset,
    guided: &'a [Vec<Element>],
    start: Element,
    max_rho: usize,
    alphas: Vec<Element>,
    betas: Vec<Element>,
    found: &'a mut Vec<(Vec<Element>, Vec<Element>)>,
}

impl CrownSearch<'_> {
    fn extend(&mut self, alpha: Element) {
        for &beta in &self.guided[alpha] {
            if self.betas.contains(&beta) {
                continue;
            }
            self.betas.push(beta);
            if self.betas.len() >= 2 && self.poset.is_cover(self.start, beta) {
                self.found.push((self.alphas.clone(), self.betas.clone()));
            }
            if self.alphas.len() < self.max_rho {
                for &next in self.poset.lower_covers(beta) {
                    if next > self.start && !self.alphas.contains(&next) {
                        self.alphas.push(next);
                        self.extend(next);
                        self.alphas.pop();
                    }
                }
            }
            self.betas.pop();
        }
    }
}

/// Whether every swap demanded by the structure stays in the family. All
/// witness choices in the family are examined, not only stored ones.
pub fn check_complete<'a>(
    poset: &Poset,
    family: &ChainFamily,
    structure: impl Into<StructureRef<'a>>,
) -> Result<(bool, Vec<Chain>)> {
    let _ = poset;
    let swaps = match structure.into() {
        StructureRef::Crown(crown) => {
            if let Some(w) = crown.witnesses.iter().find(|w| !family.contains(w)) {
                return Err(Error::Witness(format!("{w} is not in the family")));
            }
            crown_swaps(family, crown)
        }
        StructureRef::Star(star) => {
            if let Some(w) = star
                .witnesses
                .iter()
                .find(|w| !family.contains(&w.first) || !family.contains(&w.second))
            {
                return Err(Error::Witness(format!(
                    "({}, {}, {}) uses chains outside the family",
                    w.first, w.second, w.gamma
                )));
            }
            star_swaps(family, star.alpha1, star.beta1, star.alpha2, star.beta2)
        }
    };
    let missing: Vec<Chain> = swaps.into_iter().filter(|d| !family.contains(d)).collect();
    Ok((missing.is_empty(), missing))
}

/// `(−∞, α_i]_{C_i} ∪ [β_{i−1}, ∞)_{C_{i−1}}` over every `i` and every pair
/// of chains realising the two guided covers involved.
pub(crate) fn crown_swaps(family: &ChainFamily, crown: &GuidedCrown) -> BTreeSet<Chain> {
    let mut out = BTreeSet::new();
    for i in 0..crown.rho() {
        let p = crown.prev(i);
        let (a, bp) = (crown.alphas[i], crown.betas[p]);
        let pair_i = [crown.alphas[i], crown.betas[i]];
        let pair_p = [crown.alphas[p], crown.betas[p]];
        for ci in family.through(&pair_i) {
            for cp in family.through(&pair_p) {
                out.insert(ci.splice(a, cp, bp));
            }
        }
    }
    out
}

/// Both `γ`-swaps for every admissible star witness in the family.
pub(crate) fn star_swaps(
    family: &ChainFamily,
    a1: Element,
    b1: Element,
    a2: Element,
    b2: Element,
) -> BTreeSet<Chain> {
    let mut out = BTreeSet::new();
    for c1 in family.through(&[a1, b1]) {
        for c2 in family.through(&[a2, b2]) {
            let inner: BTreeSet<_> = c1.open_segment(a1, b1).iter().collect();
            for gamma in c2.open_segment(a2, b2).iter().filter(|g| inner.contains(g)) {
                out.insert(c1.splice_at(*gamma, c2));
                out.insert(c2.splice_at(*gamma, c1));
            }
        }
    }
    out
}

/// Finds every crown and star and decides none / complete / incomplete.
pub fn classify_structure(poset: &Poset, family: &ChainFamily) -> StructureReport {
    let crowns: Vec<_> = find_crowns(poset, family, None)
        .into_iter()
        .map(|item| {
            let missing: Vec<Chain> = crown_swaps(family, &item)
                .into_iter()
                .filter(|d| !family.contains(d))
                .collect();
            Flagged {
                complete: missing.is_empty(),
                missing,
                item,
            }
        })
        .collect();
    let stars: Vec<_> = find_stars(poset, family)
        .into_iter()
        .map(|item| {
            let missing: Vec<Chain> =
                star_swaps(family, item.alpha1, item.beta1, item.alpha2, item.beta2)
                    .into_iter()
                    .filter(|d| !family.contains(d))
                    .collect();
            Flagged {
                complete: missing.is_empty(),
                missing,
                item,
            }
        })
        .collect();
    let verdict = if crowns.is_empty() && stars.is_empty() {
        Verdict::NoStructure
    } else if crowns.iter().all(|c| c.complete) && stars.iter().all(|s| s.complete) {
        Verdict::CompleteStructure
    } else {
        Verdict::IncompleteStructure
    };
    StructureReport {
        verdict,
        crowns,
        stars,
    }
}

/// Just the verdict, stopping at the first incomplete structure.
pub fn verdict(poset: &Poset, family: &ChainFamily) -> Verdict {
    let stars = find_stars(poset, family);
    let crowns = find_crowns(poset, family, None);
    if stars.is_empty() && crowns.is_empty() {
        return Verdict::NoStructure;
    }
    let incomplete_star = stars.iter().any(|s| {
        star_swaps(family, s.alpha1, s.beta1, s.alpha2, s.beta2)
            .iter()
            .any(|d| !family.contains(d))
    });
    let incomplete = incomplete_star
        || crowns
            .iter()
            .any(|c| crown_swaps(family, c).iter().any(|d| !family.contains(d)));
    if incomplete {
        Verdict::IncompleteStructure
    } else {
        Verdict::CompleteStructure
    }
}

/// The symmetric difference of two maximal chains as a poset ordered by
/// covering sequences inside their union.
#[derive(Clone, Debug)]
pub struct DiamondPoset {
    pub poset: Poset,
    /// `labels[i]` is the original element behind new label `i + 1`.
    pub labels: Vec<Element>,
    /// `C₁ ∖ C₂` and `C₂ ∖ C₁`, relabelled.
    pub first: Chain,
    pub second: Chain,
    pub has_two_crown: bool,
}

pub fn diamond_poset(poset: &Poset, c1: &Chain, c2: &Chain) -> Result<DiamondPoset> {
    if c1 == c2 {
        return Err(Error::EqualChains);
    }
    let union: BTreeSet<Element> = c1.elements().iter().chain(c2.elements()).copied().collect();
    let labels: Vec<Element> = union
        .iter()
        .copied()
        .filter(|x| !(c1.contains(*x) && c2.contains(*x)))
        .collect();
    let relabel = |x: Element| labels.iter().position(|&y| y == x).map(|i| i + 1);

    // Reachability through covers that stay inside the union.
    let mut relation = Vec::new();
    for &x in &labels {
        let mut seen = BTreeSet::new();
        let mut stack = vec![x];
        while let Some(z) = stack.pop() {
            for &w in poset.upper_covers(z) {
                if union.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        for w in seen {
            if let (Some(a), Some(b)) = (relabel(x), relabel(w)) {
                relation.push((a, b));
            }
        }
    }
    let sub = Poset::new(labels.len(), &relation)?;
    let project = |c: &Chain, other: &Chain| {
        let seq: Vec<Element> = c
            .elements()
            .iter()
            .filter(|&&x| !other.contains(x))
            .filter_map(|&x| relabel(x))
            .collect();
        Chain::maximal(&sub, seq)
    };
    let first = project(c1, c2)?;
    let second = project(c2, c1)?;
    let pair = ChainFamily::new(&sub, [first.clone(), second.clone()])?;
    let has_two_crown = !find_crowns(&sub, &pair, Some(2)).is_empty();
    Ok(DiamondPoset {
        poset: sub,
        labels,
        first,
        second,
        has_two_crown,
    })
}

/// Witness selection for [`swap_chains`].
#[derive(Clone, Debug)]
pub enum SwapChoice {
    /// `C_i ∈ 𝒞_{α_i β_i}` for each position of the crown.
    Crown(Vec<Chain>),
    Star(StarWitness),
}

/// The chains produced by swapping along a structure for one witness choice.
///
/// For a crown these are the ρ chains `(−∞, α_i]_{C_i} ∪ [β_{i−1}, ∞)_{C_{i−1}}`,
/// at least one of which differs from every chosen `C_i`. For a star they are
/// the two `γ`-swaps.
pub fn swap_chains<'a>(
    family: &ChainFamily,
    structure: impl Into<StructureRef<'a>>,
    choice: &SwapChoice,
) -> Result<Vec<Chain>> {
    match (structure.into(), choice) {
        (StructureRef::Crown(crown), SwapChoice::Crown(chosen)) => {
            if chosen.len() != crown.rho() {
                return Err(Error::Witness(format!(
                    "crown has ρ = {} but {} chains were chosen",
                    crown.rho(),
                    chosen.len()
                )));
            }
            for (i, c) in chosen.iter().enumerate() {
                if !family.contains(c) || !c.contains(crown.alphas[i]) || !c.contains(crown.betas[i])
                {
                    return Err(Error::Witness(format!(
                        "{c} does not realise {} ⋖ {} in the family",
                        crown.alphas[i], crown.betas[i]
                    )));
                }
            }
            let swapped: Vec<Chain> = (0..crown.rho())
                .map(|i| {
                    let p = crown.prev(i);
                    chosen[i].splice(crown.alphas[i], &chosen[p], crown.betas[p])
                })
                .collect();
            assert!(
                swapped.iter().any(|d| !chosen.contains(d)),
                "crown swap produced only chosen chains"
            );
            Ok(swapped)
        }
        (StructureRef::Star(star), SwapChoice::Star(w)) => {
            let ok = family.contains(&w.first)
                && family.contains(&w.second)
                && w.first.open_segment(star.alpha1, star.beta1).contains(&w.gamma)
                && w.second.open_segment(star.alpha2, star.beta2).contains(&w.gamma);
            if !ok {
                return Err(Error::Witness(format!(
                    "({}, {}, {}) is not a witness of star {:?}",
                    w.first,
                    w.second,
                    w.gamma,
                    star.tuple()
                )));
            }
            Ok(vec![
                w.first.splice_at(w.gamma, &w.second),
                w.second.splice_at(w.gamma, &w.first),
            ])
        }
        _ => Err(Error::Witness(
            "choice kind does not match the structure".into(),
        )),
    }
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
    fn p1_stars_and_crown() {
        let p1 = corpus::p1();
        let c1 = fam(&p1, "1356;1357;2456;2457");
        let stars: Vec<_> = find_stars(&p1, &c1).iter().map(GuidedStar::tuple).collect();
        assert_eq!(stars, [(1, 6, 2, 7), (1, 7, 2, 6), (3, 6, 4, 7), (3, 7, 4, 6)]);
        let crowns = find_crowns(&p1, &c1, None);
        assert_eq!(crowns.len(), 1);
        assert_eq!(crowns[0].sequence(), [1, 3, 2, 4]);
    }

    #[test]
    fn p4_has_two_stars_and_no_crown() {
        let p4 = corpus::p4();
        let all = p4.maximal_chains();
        let stars: Vec<_> = find_stars(&p4, &all).iter().map(GuidedStar::tuple).collect();
        assert_eq!(stars, [(2, 7, 3, 8), (2, 8, 3, 7)]);
        assert!(find_crowns(&p4, &all, None).is_empty());
    }

    #[test]
    fn trivial_families_have_nothing() {
        let n = Poset::chain(4).unwrap();
        assert!(find_stars(&n, &n.maximal_chains()).is_empty());
        let a = Poset::antichain(4).unwrap();
        assert!(find_crowns(&a, &a.maximal_chains(), None).is_empty());
        assert_eq!(classify_structure(&a, &a.maximal_chains()).verdict, Verdict::NoStructure);
    }

    #[test]
    fn p3_unique_five_crown() {
        let p3 = corpus::p3();
        let c3 = fam(&p3, "146;257;38");
        let crowns = find_crowns(&p3, &c3, None);
        assert_eq!(crowns.len(), 1);
        assert_eq!(crowns[0].sequence(), [1, 4, 2, 5, 3, 8, 4, 6, 5, 7]);
        assert!(find_stars(&p3, &c3).is_empty());
        assert!(find_crowns(&p3, &c3, Some(4)).is_empty());
    }

    #[test]
    fn completeness() {
        let p1 = corpus::p1();
        let c1 = fam(&p1, "1356;1357;2456;2457");
        let star = find_stars(&p1, &c1).remove(0);
        assert_eq!(check_complete(&p1, &c1, &star).unwrap(), (true, vec![]));
        let crown = find_crowns(&p1, &c1, None).remove(0);
        let (complete, missing) = check_complete(&p1, &c1, &crown).unwrap();
        assert!(!complete);
        let missing: Vec<_> = missing.iter().map(|c| c.to_string()).collect();
        assert_eq!(missing, ["1456", "1457", "2356", "2357"]);

        let p2 = corpus::p2();
        let c2 = fam(&p2, "125;1368;468;478");
        let crown = GuidedCrown::new(&p2, &c2, vec![2, 3, 4], vec![5, 6, 7]).unwrap();
        assert!(!check_complete(&p2, &c2, &crown).unwrap().0);
        // witnesses must belong to the family being checked
        assert!(matches!(
            check_complete(&p2, &fam(&p2, "125"), &crown),
            Err(Error::Witness(_))
        ));
    }

    #[test]
    fn crown_validation_and_rotation() {
        let p2 = corpus::p2();
        let all = p2.maximal_chains();
        let crown = GuidedCrown::new(&p2, &all, vec![3, 4, 2], vec![6, 7, 5]).unwrap();
        assert_eq!(crown.sequence(), [2, 5, 3, 6, 4, 7]);
        assert!(GuidedCrown::new(&p2, &all, vec![2, 3], vec![5, 7]).is_err());
        assert!(GuidedCrown::new(&p2, &all, vec![2, 2], vec![5, 5]).is_err());
    }

    #[test]
    fn classification_examples() {
        let p2 = corpus::p2();
        assert_eq!(
            classify_structure(&p2, &fam(&p2, "1278;135;1368;478")).verdict,
            Verdict::NoStructure
        );
        let p4 = corpus::p4();
        assert_eq!(
            classify_structure(&p4, &fam(&p4, "12579;12589;13579;13589")).verdict,
            Verdict::CompleteStructure
        );
        let p3 = corpus::p3();
        let report = classify_structure(&p3, &fam(&p3, "146;257;38"));
        assert_eq!(report.verdict, Verdict::IncompleteStructure);
        assert_eq!(verdict(&p3, &fam(&p3, "146;257;38")), Verdict::IncompleteStructure);
    }

    #[test]
    fn diamonds() {
        let p1 = corpus::p1();
        let d = diamond_poset(&p1, &chain(&p1, "1356"), &chain(&p1, "2456")).unwrap();
        assert!(d.has_two_crown);
        assert_eq!(d.labels, [1, 2, 3, 4]);

        let p4 = corpus::p4();
        let d = diamond_poset(&p4, &chain(&p4, "12579"), &chain(&p4, "12589")).unwrap();
        assert!(!d.has_two_crown);
        let d = diamond_poset(&p4, &chain(&p4, "12579"), &chain(&p4, "13589")).unwrap();
        assert!(d.has_two_crown);
        assert_eq!(d.labels, [2, 3, 7, 8]);

        let c = chain(&p4, "12579");
        assert!(matches!(diamond_poset(&p4, &c, &c), Err(Error::EqualChains)));
    }

    #[test]
    fn swaps() {
        let p3 = corpus::p3();
        let f = fam(&p3, "146;256;257;38");
        let crown = find_crowns(&p3, &f, None)
            .into_iter()
            .find(|c| c.sequence() == [1, 4, 2, 5, 3, 8, 4, 6, 5, 7])
            .unwrap();
        let choice = SwapChoice::Crown(
            ["146", "257", "38", "146", "257"].iter().map(|s| chain(&p3, s)).collect(),
        );
        let out = swap_chains(&f, &crown, &choice).unwrap();
        // position 5 pairs C₅ = 257 with C₄ = 146 at (α, β) = (5, 6)
        assert_eq!(out[4].to_string(), "256");

        let p1 = corpus::p1();
        let c1 = fam(&p1, "1356;1357;2456;2457");
        let crown = find_crowns(&p1, &c1, None).remove(0);
        let out = swap_chains(
            &c1,
            &crown,
            &SwapChoice::Crown(vec![chain(&p1, "1356"), chain(&p1, "2456")]),
        )
        .unwrap();
        let out: Vec<_> = out.iter().map(|c| c.to_string()).collect();
        assert_eq!(out, ["1456", "2356"]);

        let star = find_stars(&p1, &c1).remove(0);
        let bogus = StarWitness {
            first: chain(&p1, "1356"),
            second: chain(&p1, "1356"),
            gamma: 5,
        };
        assert!(matches!(
            swap_chains(&c1, &star, &SwapChoice::Star(bogus)),
            Err(Error::Witness(_))
        ));
        let good = star.witnesses()[0].clone();
        let out = swap_chains(&c1, &star, &SwapChoice::Star(good)).unwrap();
        assert!(out.iter().all(|c| c1.contains(c)));
    }
}
