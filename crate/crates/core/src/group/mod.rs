//! Finitely presented groups: Zariski–van Kampen presentations of curve
//! complements, Tietze simplification, homomorphisms to symmetric groups
//! and coset enumeration.

mod coset;
mod free;
mod homs;
mod presentation;

pub use coset::{coset_table, group_order, CosetTable};
pub use free::{artin_action, artin_images, FreeWord};
pub use homs::{enumerate_homs, HomQuery, SymmetricImage};
pub use presentation::{simplify, zvk_presentation, FinitePresentation};
