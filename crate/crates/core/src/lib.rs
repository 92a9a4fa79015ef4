//! Exact computations with Jordan structures, their Tits–Kantor–Koecher Lie
//! algebras and the universal central 0-extension, plus the graded homology
//! that recognizes it.

pub mod cert;
pub mod exactla;
pub mod freemod;
pub mod homextend;
pub mod jordan;
pub mod liegrad;
pub mod tkkcore;
