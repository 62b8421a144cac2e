//! Project scheduling on a poset of activities: earliest finishing time,
//! critical chains and multicritical weights.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::Zero;

use crate::chain::{Chain, ChainFamily};
use crate::error::{Error, Result};
use crate::geometry::{face_oracle, RationalVector};
use crate::lp::Rational;
use crate::poset::{Element, Poset};

/// Time cost of each activity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActivityWeights(BTreeMap<Element, Rational>);

impl ActivityWeights {
    pub fn new(weights: impl IntoIterator<Item = (Element, Rational)>) -> Self {
        ActivityWeights(weights.into_iter().collect())
    }

    pub fn zero(poset: &Poset) -> Self {
        Self::new(poset.elements().map(|x| (x, Rational::zero())))
    }

    pub fn from_vector(v: &RationalVector) -> Self {
        Self::new(v.coords().iter().enumerate().map(|(i, q)| (i + 1, q.clone())))
    }

    /// Parses lines `<element> <num>/<den>` (or an integer); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::parse(idx + 1, msg);
            let mut parts = line.split_whitespace();
            let (Some(elem), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(format!("expected `<element> <weight>`, got `{line}`")));
            };
            let elem: Element = elem
                .parse()
                .map_err(|_| err(format!("bad element `{elem}`")))?;
            let value =
                Rational::from_str(value).map_err(|_| err(format!("bad weight `{value}`")))?;
            if map.insert(elem, value).is_some() {
                return Err(err(format!("element {elem} weighted twice")));
            }
        }
        Ok(ActivityWeights(map))
    }

    pub fn get(&self, x: Element) -> Option<&Rational> {
        self.0.get(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, &Rational)> {
        self.0.iter().map(|(&x, q)| (x, q))
    }

    /// Weights as a dense vector over `1..=size`, failing on the first gap.
    pub fn to_vector(&self, poset: &Poset) -> Result<RationalVector> {
        poset
            .elements()
            .map(|x| self.get(x).cloned().ok_or(Error::MissingWeight(x)))
            .collect::<Result<Vec<_>>>()
            .map(RationalVector::new)
    }

    pub fn scaled(&self, q: &Rational) -> Self {
        Self::new(self.iter().map(|(x, w)| (x, w * q)))
    }

    /// `f(C)`, the total time along a chain.
    pub fn total(&self, chain: &Chain) -> Result<Rational> {
        chain.elements().iter().try_fold(Rational::zero(), |acc, &x| {
            Ok(acc + self.get(x).ok_or(Error::MissingWeight(x))?)
        })
    }
}

impl FromStr for ActivityWeights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScheduleReport {
    pub eft: Rational,
    pub critical: ChainFamily,
    pub totals: Vec<(Chain, Rational)>,
}

/// Earliest finishing time by a longest-path pass in topological order.
pub fn eft(poset: &Poset, weights: &ActivityWeights) -> Result<Rational> {
    let w = weights.to_vector(poset)?;
    let mut finish: Vec<Rational> = vec![Rational::zero(); poset.size() + 1];
    for &x in poset.topological_order() {
        let start = poset
            .lower_covers(x)
            .iter()
            .map(|&y| &finish[y])
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero);
        finish[x] = start + w.at(x);
    }
    Ok(poset
        .maximal_elements()
        .into_iter()
        .map(|x| finish[x].clone())
        .max()
        .expect("nonempty poset"))
}

/// Every maximal chain with its total, and those attaining the maximum.
pub fn critical_chains(poset: &Poset, weights: &ActivityWeights) -> Result<ScheduleReport> {
    let totals = poset
        .maximal_chains()
        .iter()
        .map(|c| Ok((c.clone(), weights.total(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let eft = totals
        .iter()
        .map(|(_, t)| t)
        .max()
        .cloned()
        .expect("nonempty poset");
    let critical = totals
        .iter()
        .filter(|(_, t)| *t == eft)
        .map(|(c, _)| c.clone())
        .collect();
    Ok(ScheduleReport {
        eft,
        critical,
        totals,
    })
}

/// Weights under which exactly the chains of `family` are critical, if any.
pub fn multicritical(poset: &Poset, family: &ChainFamily) -> Result<Option<ActivityWeights>> {
    let Some(f) = face_oracle(poset, family)? else {
        return Ok(None);
    };
    let weights = ActivityWeights::from_vector(&f);
    let report = critical_chains(poset, &weights)?;
    assert_eq!(&report.critical, family, "oracle witness must cut out the family");
    Ok(Some(weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lp::{rat, ratio};

    fn indicator(p: &Poset, e: Element) -> ActivityWeights {
        ActivityWeights::new(p.elements().map(|x| (x, rat((x == e) as i64))))
    }

    #[test]
    fn parse_weights() {
        let w = ActivityWeights::parse("# costs\n1 1/2\n2 3\n\n3 -2/4\n").unwrap();
        assert_eq!(w.get(1), Some(&ratio(1, 2)));
        assert_eq!(w.get(3), Some(&ratio(-1, 2)));
        assert!(matches!(ActivityWeights::parse("1 x"), Err(Error::Parse { line: 1, .. })));
        assert!(ActivityWeights::parse("1 1\n1 2").is_err());
        assert!(ActivityWeights::parse("1").is_err());
    }

    #[test]
    fn earliest_finish() {
        let p4 = corpus::p4();
        assert_eq!(eft(&p4, &ActivityWeights::zero(&p4)).unwrap(), rat(0));
        assert_eq!(eft(&p4, &indicator(&p4, 5)).unwrap(), rat(1));
        let n = Poset::chain(5).unwrap();
        let ones = ActivityWeights::new(n.elements().map(|x| (x, rat(1))));
        assert_eq!(eft(&n, &ones).unwrap(), rat(5));
        let partial = ActivityWeights::new([(1, rat(1))]);
        assert!(matches!(eft(&p4, &partial), Err(Error::MissingWeight(2))));
    }

    #[test]
    fn critical_sets() {
        let p4 = corpus::p4();
        let r = critical_chains(&p4, &ActivityWeights::zero(&p4)).unwrap();
        assert_eq!(r.critical, p4.maximal_chains());
        let r = critical_chains(&p4, &indicator(&p4, 5)).unwrap();
        assert_eq!(r.critical.labels(), ["12579", "12589", "13579", "13589"]);
        let p2 = corpus::p2();
        let r = critical_chains(&p2, &indicator(&p2, 1)).unwrap();
        assert_eq!(r.critical.labels(), ["125", "1278", "135", "1368"]);
        assert_eq!(r.totals.len(), 6);
    }

    #[test]
    fn multicritical_points() {
        let p2 = corpus::p2();
        let tri = ChainFamily::parse(&p2, "125;1368;478").unwrap();
        assert_eq!(multicritical(&p2, &tri).unwrap(), None);
        let p4 = corpus::p4();
        let square = ChainFamily::parse(&p4, "12579;12589;13579;13589").unwrap();
        let w = multicritical(&p4, &square).unwrap().unwrap();
        assert_eq!(critical_chains(&p4, &w).unwrap().critical, square);
        let w = multicritical(&p4, &p4.maximal_chains()).unwrap().unwrap();
        assert!(w.iter().all(|(_, q)| q.is_zero()));
    }
}
