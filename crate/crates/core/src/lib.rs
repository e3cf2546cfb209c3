//! Exact symbolic toolkit for equivariant multiplicities of nilpotent-cone
//! components in moduli of Higgs bundles.
//!
//! * [`polyalg`]: integer polynomials, factored characters, series.
//! * [`chain`]: type (1,…,1) fixed points, stability and very stability.
//! * [`hecke`]: Hecke moves on chains and generic-fibre intersection counts.
//! * [`multgl`]: `GL_n` multiplicities and pairing identities.
//! * [`rootsys`]: root systems from Cartan matrices (Bourbaki numbering).
//! * [`multsimple`]: multiplicities for simple groups and polynomiality scans.

pub mod chain;
pub mod error;
pub mod hecke;
pub mod multgl;
pub mod multsimple;
pub mod polyalg;
pub mod rootsys;

pub use error::{Error, Result};
