//! Alternating-cycle decomposition of 2-digraphs, factor and route
//! enumeration, and non-Hamiltonicity certificates for 2-regular digraphs.
//!
//! A *2-digraph* is a directed multigraph in which every vertex has
//! (in, out) degree (0, 2), (2, 0) or (2, 2). The arc set splits uniquely
//! into alternating cycles (ACs); a factor is a choice of the forward or
//! backward half of every AC. Everything else in the crate is built on
//! that correspondence.
//!
//! ```
//! use twodd::{fixtures, certify, CertifyOptions, Verdict};
//!
//! let g = fixtures::split_example();
//! assert_eq!(g.ac_count(), 4);
//! let cert = certify(&g, &CertifyOptions::default());
//! assert_eq!(cert.verdict, Verdict::NonHamiltonian);
//! ```

pub mod ac6;
pub mod canon;
pub mod certificate;
pub mod error;
pub mod factor;
pub mod fixtures;
pub mod generation;
pub mod graph;
pub mod io;
pub mod perm;
pub mod quotient;
pub mod split;

pub use ac6::{classify_ac6, Ac6Class, Ac6Name};
pub use certificate::{certify, verify, Certificate, CertifyOptions, Evidence, Method, MethodChoice, Verdict};
pub use error::{Error, Result};
pub use factor::{
    enumerate_factors, index_of, is_closed, is_hamiltonian_bruteforce, is_minimally_closed,
    is_open, open_routes, parity_class, route_of, route_parity_partition, Factor, Half, ParityClass,
    Route, Selection, DEFAULT_CAP,
};
pub use graph::{AlternatingCycle, Arc, ArcId, TwoDigraph, VertexId, VertexKind};
pub use perm::Parity;
