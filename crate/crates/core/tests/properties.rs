mod common;

use maxchain::crown::{self, Verdict};
use maxchain::face::{self, FaceTag};
use maxchain::geometry::{face_oracle, family_rank, RationalVector};
use maxchain::lp::{rat, ratio};
use maxchain::schedule::{critical_chains, eft, multicritical, ActivityWeights};
use maxchain::{ChainFamily, Poset};
use proptest::prelude::*;

/// A poset on up to 7 elements from an upper-triangular edge mask, plus a
/// mask selecting a subfamily of its maximal chains.
fn poset_and_family() -> impl Strategy<Value = (Poset, ChainFamily)> {
    (2usize..=7, prop::collection::vec(any::<bool>(), 21), any::<u64>()).prop_map(
        |(size, edges, pick)| {
            let mut relation = Vec::new();
            let mut k = 0;
            for i in 1..=size {
                for j in i + 1..=size {
                    if edges[k] {
                        relation.push((i, j));
                    }
                    k += 1;
                }
            }
            let poset = Poset::new(size, &relation).unwrap();
            let all = poset.maximal_chains().to_vec();
            let mut family: ChainFamily = all
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect();
            if family.is_empty() {
                family.insert(all[0].clone());
            }
            (poset, family)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trichotomy_matches_lp((p, f) in poset_and_family()) {
        let class = face::face_class(&p, &f).unwrap();
        let witness = face_oracle(&p, &f).unwrap();
        let rank = family_rank(p.size(), &f).unwrap();
        match class.tag {
            FaceTag::NotFace => prop_assert!(witness.is_none()),
            FaceTag::SimplexFace => {
                prop_assert!(witness.is_some());
                prop_assert_eq!(rank + 1, f.len());
            }
            FaceTag::NonSimplexFace => {
                prop_assert!(witness.is_some());
                prop_assert!(rank + 1 < f.len());
                prop_assert_eq!(class.dim, Some(rank));
            }
        }
    }

    #[test]
    fn closure_laws((p, f) in poset_and_family(), extra in any::<u64>()) {
        let cf = face::closure(&p, &f);
        prop_assert!(f.is_subset(&cf));
        prop_assert_eq!(face::closure(&p, &cf), cf.clone());
        prop_assert_ne!(crown::verdict(&p, &cf), Verdict::IncompleteStructure);
        let all = p.maximal_chains().to_vec();
        let bigger = f.union(
            &all.iter()
                .enumerate()
                .filter(|(i, _)| extra >> (i % 64) & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect(),
        );
        prop_assert!(cf.is_subset(&face::closure(&p, &bigger)));
    }

    #[test]
    fn adding_a_chain_to_a_face_raises_rank((p, f) in poset_and_family()) {
        let closed = face::closure(&p, &f);
        let r = family_rank(p.size(), &closed).unwrap();
        for d in p.maximal_chains().iter().filter(|d| !closed.contains(d)) {
            prop_assert_eq!(family_rank(p.size(), &closed.with(d.clone())).unwrap(), r + 1);
        }
    }

    #[test]
    fn rectangles_from_non_edges((p, _f) in poset_and_family()) {
        let all = p.maximal_chains().to_vec();
        let n = p.size();
        for (i, c1) in all.iter().enumerate() {
            for c2 in &all[i + 1..] {
                let edge = face::is_edge(&p, c1, c2).unwrap();
                let pair = ChainFamily::from_iter([c1.clone(), c2.clone()]);
                prop_assert_eq!(edge, face_oracle(&p, &pair).unwrap().is_some());
                match face::rectangle_completion(&p, c1, c2) {
                    Ok((d1, d2)) => {
                        prop_assert!(!edge);
                        let e = |c| RationalVector::of_chain(n, c);
                        prop_assert_eq!(e(c1).add(&e(c2)), e(&d1).add(&e(&d2)));
                        prop_assert_eq!(e(&d1).sub(&e(c1)).dot(&e(&d2).sub(&e(c1))), rat(0));
                        prop_assert!(p.is_maximal_chain(d1.elements()));
                        prop_assert!(p.is_maximal_chain(d2.elements()));
                    }
                    Err(_) => prop_assert!(edge),
                }
            }
        }
    }

    #[test]
    fn critical_sets_are_faces(
        (p, _f) in poset_and_family(),
        raw in prop::collection::vec((-9i64..=9, 1i64..=4), 7),
        scale in 1i64..=5,
    ) {
        let w = ActivityWeights::new(p.elements().map(|x| (x, ratio(raw[x - 1].0, raw[x - 1].1))));
        let report = critical_chains(&p, &w).unwrap();
        prop_assert_eq!(&report.eft, &eft(&p, &w).unwrap());
        prop_assert_ne!(crown::verdict(&p, &report.critical), Verdict::IncompleteStructure);
        for (c, t) in &report.totals {
            prop_assert_eq!(report.critical.contains(c), *t == report.eft);
        }
        let q = ratio(scale, 3);
        let scaled = critical_chains(&p, &w.scaled(&q)).unwrap();
        prop_assert_eq!(scaled.eft, &report.eft * &q);
        prop_assert_eq!(scaled.critical, report.critical);
    }

    #[test]
    fn multicritical_iff_face((p, f) in poset_and_family()) {
        let witness = multicritical(&p, &f).unwrap();
        prop_assert_eq!(witness.is_some(), face_oracle(&p, &f).unwrap().is_some());
        if let Some(w) = witness {
            prop_assert_eq!(critical_chains(&p, &w).unwrap().critical, f);
        }
    }

    #[test]
    fn text_round_trip((p, f) in poset_and_family()) {
        let again = Poset::parse(&p.to_text()).unwrap();
        prop_assert_eq!(again.covers(), p.covers());
        prop_assert_eq!(ChainFamily::parse_lines(&p, &f.to_lines()).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lattice_generation_matches_brute_force((p, _f) in poset_and_family()) {
        prop_assume!(p.maximal_chains().len() <= 10);
        let fast = face::face_lattice(&p, 10).unwrap();
        let slow = face::face_lattice_brute_force(&p, 10).unwrap();
        prop_assert_eq!(&fast, &slow);
        for &(i, j) in &fast.covers {
            prop_assert_eq!(fast.dims[i] + 1, fast.dims[j]);
        }
        for (i, a) in fast.faces.iter().enumerate() {
            for (j, b) in fast.faces.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    prop_assert!(fast.dims[i] < fast.dims[j]);
                }
            }
        }
    }
}

#[test]
fn bundled_lattices_have_graded_covers() {
    for (_, p) in common::bundled() {
        let lattice = face::face_lattice(&p, face::DEFAULT_CAP).unwrap();
        assert_eq!(lattice.faces[0], ChainFamily::empty());
        assert_eq!(*lattice.faces.last().unwrap(), p.maximal_chains());
        assert_eq!(
            lattice.dims.last().copied(),
            Some(face::polytope_dim(&p) as i64)
        );
        for &(i, j) in &lattice.covers {
            assert_eq!(lattice.dims[i] + 1, lattice.dims[j]);
        }
    }
}
