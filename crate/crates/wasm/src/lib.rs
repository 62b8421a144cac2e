//! Browser bindings. Each export takes plain strings and returns pretty JSON.
//!
//! A poset argument is either the name of a bundled poset (`p1` … `p5`),
//! a grid spec such as `3x4`, or the text of a `.poset` file.

use maxchain::report::{self, ClosureJson, GridJson, LatticeJson, StructureJson};
use maxchain::{corpus, crown, face, ChainFamily, FaceClass, Poset};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Lattices are only drawn for posets with at most this many maximal chains.
pub const LATTICE_CAP: usize = 16;

#[derive(Serialize)]
struct Analysis {
    chains: Vec<String>,
    family: Vec<String>,
    face: FaceClass,
    structure: StructureJson,
    closure: ClosureJson,
}

#[derive(Serialize)]
struct Lattice {
    chains: Vec<String>,
    f_vector: Vec<usize>,
    lattice: LatticeJson,
}

pub fn load_poset(source: &str) -> Result<Poset, String> {
    let trimmed = source.trim();
    if !trimmed.contains('\n') {
        if let Ok(p) = corpus::builtin(trimmed) {
            return Ok(p);
        }
    }
    Poset::parse(source).map_err(|e| e.to_string())
}

/// Face class, crown/star report and closure trace of a family.
pub fn analyze_json(poset: &str, family: &str) -> Result<String, String> {
    let p = load_poset(poset)?;
    let f = ChainFamily::parse(&p, family).map_err(|e| e.to_string())?;
    let class = face::face_class(&p, &f).map_err(|e| e.to_string())?;
    let structure = crown::classify_structure(&p, &f);
    let trace = face::closure_trace(&p, &f);
    Ok(report::to_json(&Analysis {
        chains: p.maximal_chains().labels(),
        family: f.labels(),
        face: class,
        structure: StructureJson::from(&structure),
        closure: ClosureJson::new(&trace),
    }))
}

/// Face lattice of the polytope spanned by the maximal chains.
pub fn lattice_json(poset: &str) -> Result<String, String> {
    let p = load_poset(poset)?;
    let l = face::face_lattice(&p, LATTICE_CAP).map_err(|e| e.to_string())?;
    Ok(report::to_json(&Lattice {
        chains: p.maximal_chains().labels(),
        f_vector: l.f_vector(),
        lattice: LatticeJson::from(&l),
    }))
}

/// Maximal flag of faces on the `m × n` grid.
pub fn grid_json(m: usize, n: usize) -> Result<String, String> {
    let flag = face::grid_flag(m, n).map_err(|e| e.to_string())?;
    let coverings = flag.verify().map_err(|e| e.to_string())?;
    Ok(report::to_json(&GridJson::new(&flag, coverings)))
}

#[wasm_bindgen]
pub fn analyze(poset: &str, family: &str) -> Result<String, JsError> {
    analyze_json(poset, family).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lattice(poset: &str) -> Result<String, JsError> {
    lattice_json(poset).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn grid(m: usize, n: usize) -> Result<String, JsError> {
    grid_json(m, n).map_err(|e| JsError::new(&e))
}
