//! Bundled example posets.

use crate::error::{Error, Result};
use crate::poset::Poset;

const SOURCES: [(&str, &str); 5] = [
    ("p1", include_str!("../corpus/p1.poset")),
    ("p2", include_str!("../corpus/p2.poset")),
    ("p3", include_str!("../corpus/p3.poset")),
    ("p4", include_str!("../corpus/p4.poset")),
    ("p5", include_str!("../corpus/p5.poset")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Looks up a bundled poset by name (`p1` … `p5`) or a grid spec `MxN`.
pub fn builtin(name: &str) -> Result<Poset> {
    if let Some(src) = source(name) {
        return Poset::parse(src);
    }
    if let Some((m, n)) = parse_grid(name) {
        return Poset::grid(m, n);
    }
    Err(Error::parse(0, format!("unknown built-in poset `{name}`")))
}

/// Parses `4x4` into `(4, 4)`.
pub fn parse_grid(spec: &str) -> Option<(usize, usize)> {
    let (m, n) = spec.split_once(['x', 'X'])?;
    let m = m.trim().parse().ok()?;
    let n = n.trim().parse().ok()?;
    (m > 0 && n > 0).then_some((m, n))
}

fn load(name: &str) -> Poset {
    builtin(name).expect("bundled poset parses")
}

pub fn p1() -> Poset {
    load("p1")
}

pub fn p2() -> Poset {
    load("p2")
}

pub fn p3() -> Poset {
    load("p3")
}

pub fn p4() -> Poset {
    load("p4")
}

pub fn p5() -> Poset {
    load("p5")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts() {
        let counts: Vec<usize> = names()
            .map(|n| builtin(n).unwrap().maximal_chains().len())
            .collect();
        assert_eq!(counts, [8, 6, 10, 6, 7]);
    }

    #[test]
    fn grids_and_unknown_names() {
        assert_eq!(parse_grid("4x4"), Some((4, 4)));
        assert_eq!(parse_grid("0x4"), None);
        assert_eq!(builtin("3x3").unwrap().size(), 9);
        assert!(builtin("p9").is_err());
    }
}
