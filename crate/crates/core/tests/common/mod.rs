#![allow(dead_code)]

use maxchain::{corpus, Chain, ChainFamily, Poset};
use rand::rngs::StdRng;
use rand::Rng;

/// Random poset on `size` elements: each pair `i < j` is related with
/// probability `density`, then reduced to covers.
pub fn random_poset(rng: &mut StdRng, size: usize, density: f64) -> Poset {
    let mut relation = Vec::new();
    for i in 1..=size {
        for j in i + 1..=size {
            if rng.gen_bool(density) {
                relation.push((i, j));
            }
        }
    }
    Poset::new(size, &relation).expect("forward edges are acyclic")
}

/// Random poset with between 2 and `max_chains` maximal chains.
pub fn random_poset_bounded(rng: &mut StdRng, max_size: usize, max_chains: usize) -> Poset {
    loop {
        let size = rng.gen_range(2..=max_size);
        let density = rng.gen_range(0.2..0.7);
        let p = random_poset(rng, size, density);
        let n = p.maximal_chains().len();
        if (2..=max_chains).contains(&n) {
            return p;
        }
    }
}

/// Random nonempty subfamily of the maximal chains.
pub fn random_family(rng: &mut StdRng, poset: &Poset) -> ChainFamily {
    let all = poset.maximal_chains().to_vec();
    loop {
        let f: ChainFamily = all.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        if !f.is_empty() {
            return f;
        }
    }
}

/// Every nonempty subfamily, by bitmask over the canonical chain order.
pub fn all_families(poset: &Poset) -> Vec<ChainFamily> {
    let all = poset.maximal_chains().to_vec();
    (1u32..1 << all.len())
        .map(|mask| {
            all.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect()
        })
        .collect()
}

pub fn bundled() -> Vec<(&'static str, Poset)> {
    corpus::names()
        .map(|n| (n, corpus::builtin(n).unwrap()))
        .collect()
}

pub fn fam(p: &Poset, s: &str) -> ChainFamily {
    ChainFamily::parse(p, s).unwrap()
}

pub fn chain(p: &Poset, s: &str) -> Chain {
    Chain::parse(p, s).unwrap()
}
