//! JSON shapes shared by the command-line tool and the browser demo.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chain::{Chain, ChainFamily};
use crate::crown::{StructureReport, Verdict};
use crate::face::{FaceLattice, GridFlag};
use crate::lp::Rational;
use crate::schedule::ScheduleReport;

fn labels(chains: &[Chain]) -> Vec<String> {
    chains.iter().map(Chain::to_string).collect()
}

fn fraction(q: &Rational) -> String {
    q.to_string()
}

#[derive(Serialize)]
pub struct CrownJson {
    pub rho: usize,
    pub alphas: Vec<usize>,
    pub betas: Vec<usize>,
    pub complete: bool,
    pub missing: Vec<String>,
}

#[derive(Serialize)]
pub struct StarJson {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
    pub gammas: Vec<usize>,
    pub complete: bool,
    pub missing: Vec<String>,
}

#[derive(Serialize)]
pub struct StructureJson {
    pub verdict: Verdict,
    pub crowns: Vec<CrownJson>,
    pub stars: Vec<StarJson>,
}

impl From<&StructureReport> for StructureJson {
    fn from(r: &StructureReport) -> Self {
        StructureJson {
            verdict: r.verdict,
            crowns: r
                .crowns
                .iter()
                .map(|c| CrownJson {
                    rho: c.item.rho(),
                    alphas: c.item.alphas().to_vec(),
                    betas: c.item.betas().to_vec(),
                    complete: c.complete,
                    missing: labels(&c.missing),
                })
                .collect(),
            stars: r
                .stars
                .iter()
                .map(|s| StarJson {
                    a1: s.item.alpha1,
                    b1: s.item.beta1,
                    a2: s.item.alpha2,
                    b2: s.item.beta2,
                    gammas: s.item.gammas(),
                    complete: s.complete,
                    missing: labels(&s.missing),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ClosureJson {
    pub steps: Vec<Vec<String>>,
}

impl ClosureJson {
    pub fn new(steps: &[ChainFamily]) -> Self {
        ClosureJson {
            steps: steps.iter().map(ChainFamily::labels).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct FaceJson {
    pub chains: Vec<String>,
    pub dim: i64,
}

#[derive(Serialize)]
pub struct LatticeJson {
    pub faces: Vec<FaceJson>,
    pub covers: Vec<[usize; 2]>,
}

impl From<&FaceLattice> for LatticeJson {
    fn from(l: &FaceLattice) -> Self {
        LatticeJson {
            faces: l
                .faces
                .iter()
                .zip(&l.dims)
                .map(|(f, &dim)| FaceJson {
                    chains: f.labels(),
                    dim,
                })
                .collect(),
            covers: l.covers.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ScheduleJson {
    pub eft: String,
    pub critical: Vec<String>,
    pub totals: BTreeMap<String, String>,
}

impl From<&ScheduleReport> for ScheduleJson {
    fn from(r: &ScheduleReport) -> Self {
        ScheduleJson {
            eft: fraction(&r.eft),
            critical: r.critical.labels(),
            totals: r
                .totals
                .iter()
                .map(|(c, t)| (c.to_string(), fraction(t)))
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GridStageJson {
    pub x: usize,
    pub y: usize,
    pub support: Vec<[usize; 2]>,
    pub chains: Vec<String>,
    pub dim: i64,
}

#[derive(Serialize)]
pub struct GridJson {
    pub m: usize,
    pub n: usize,
    pub dim: usize,
    pub stages: Vec<GridStageJson>,
    pub coverings: usize,
}

impl GridJson {
    pub fn new(flag: &GridFlag, coverings: usize) -> Self {
        let dims = flag.dims();
        GridJson {
            m: flag.m,
            n: flag.n,
            dim: (flag.m - 1) * (flag.n - 1),
            stages: flag
                .stages
                .iter()
                .zip(&dims[1..])
                .map(|(s, &dim)| GridStageJson {
                    x: s.x,
                    y: s.y,
                    support: s.support.iter().map(|&(a, b)| [a, b]).collect(),
                    chains: s.family.labels(),
                    dim,
                })
                .collect(),
            coverings,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{corpus, crown, face};

    #[test]
    fn structure_json_shape() {
        let p1 = corpus::p1();
        let f = ChainFamily::parse(&p1, "1356;1357;2456;2457").unwrap();
        let json = to_json(&StructureJson::from(&crown::classify_structure(&p1, &f)));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["verdict"], "IncompleteStructure");
        assert_eq!(v["crowns"][0]["alphas"], serde_json::json!([1, 2]));
        assert_eq!(v["stars"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn face_class_omits_dim_for_non_faces() {
        let p2 = corpus::p2();
        let f = ChainFamily::parse(&p2, "125;1368;478").unwrap();
        let json = serde_json::to_string(&face::face_class(&p2, &f).unwrap()).unwrap();
        assert_eq!(json, r#"{"tag":"NotFace"}"#);
    }
}
