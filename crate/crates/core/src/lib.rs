//! Finite McKinsey–Tarski algebras (powerset interior algebras of finite
//! spaces), their frames of opens, Boolean envelopes and MacNeille
//! completions, the functors relating spaces, algebras and frames, and the
//! separation-axiom checkers built on them.
//!
//! Everything here is finite: a finite space is an MT-algebra through its
//! powerset, every finite distributive lattice is a frame, and every finite
//! frame is spatial.

pub mod bits;
pub mod completions;
pub mod element;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod frames;
pub mod functors;
pub mod interpolation;
pub mod morphism;
pub mod separation;
pub mod space;

pub use element::{ElementSet, MAX_POINTS};
pub use error::{LatticeDefect, MtError, Result, TopologyDefect};
pub use family::{family, ElementFamily, FamilyKind};
pub use morphism::{check_mt_morphism, MtMorphism};
pub use space::FinSpace;
pub use frames::{frame_axiom, FiniteFrame, FiniteLattice, FrameAxiom};
pub use separation::{classify, mt_axiom, Axiom, SeparationProfile};
