//! Maximal chain polytopes of finite posets.
//!
//! Every maximal chain `C` of a poset `P` has a 0/1 incidence vector `e_C`;
//! their convex hull is the maximal chain polytope. This crate decides which
//! sets of maximal chains span faces using guided crowns and guided stars,
//! computes closures and the face lattice, and cross-checks all of it against
//! exact rational linear programming.
//!
//! ```
//! use maxchain::{corpus, face, ChainFamily, FaceTag};
//!
//! let p2 = corpus::p2();
//! let triangle = ChainFamily::parse(&p2, "125;1368;478").unwrap();
//! assert_eq!(face::face_class(&p2, &triangle).unwrap().tag, FaceTag::NotFace);
//! assert_eq!(face::polytope_dim(&maxchain::Poset::grid(4, 4).unwrap()), 9);
//! ```

pub mod chain;
pub mod corpus;
pub mod crown;
pub mod error;
pub mod face;
pub mod geometry;
pub mod lp;
pub mod poset;
pub mod report;
pub mod schedule;

pub use chain::{Chain, ChainFamily};
pub use crown::{GuidedCrown, GuidedStar, StructureReport, Verdict};
pub use error::{Error, Result};
pub use face::{FaceClass, FaceLattice, FaceTag, GridFlag};
pub use geometry::RationalVector;
pub use lp::Rational;
pub use poset::{Element, Poset};
pub use schedule::{ActivityWeights, ScheduleReport};
