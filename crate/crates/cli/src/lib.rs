//! Command-line harness for finite MT-algebras: JSON documents, the census
//! and the theorem suite.

pub mod census;
pub mod io;
pub mod theorems;
