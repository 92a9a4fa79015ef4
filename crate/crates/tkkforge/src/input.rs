//! Resolving a command argument to a certified structure.

use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;
use tkk_core::cert::{Certified, Violation};
use tkk_core::exactla::Field;
use tkk_core::jordan::{
    algebra_to_pair, certify_algebra, certify_pair, certify_triple, double_jts, JordanAlgebra, JordanPair,
    JordanTriple,
};
use tkk_core::liegrad::{
    certify_lie, check_anti_involution, check_sl2, forget_to_pair, AntiGradedInvolution, GradedLieAlgebra, LieError,
    Sl2Triple,
};

use crate::catalog::{catalog, CatalogError};
use crate::format::{emit, parse, AlgebraFile, Loaded, ParseError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Unsupported(String),
}

/// A resolved argument: the file, the bytes its digest was taken over and the
/// field it is read in.
pub struct Source {
    pub file: AlgebraFile,
    pub digest: String,
    pub field: Field,
}

/// A path that exists is read as a file; anything else is a catalog name.
pub fn resolve(arg: &str, field: Option<Field>) -> Result<Source, InputError> {
    let (file, bytes) = if Path::new(arg).is_file() {
        let bytes = std::fs::read(arg).map_err(|source| InputError::Io {
            path: arg.to_string(),
            source,
        })?;
        (parse(&bytes)?, bytes)
    } else {
        let file = catalog(arg)?;
        let bytes = emit(&file).into_bytes();
        (file, bytes)
    };
    let declared = file
        .field
        .field()
        .map_err(|e| InputError::Unsupported(format!("field: {e}")))?;
    Ok(Source {
        digest: hex::encode(Sha256::digest(&bytes)),
        field: field.unwrap_or(declared),
        file,
    })
}

#[derive(Clone, Debug)]
pub enum Structure {
    Algebra(Certified<JordanAlgebra>),
    Triple(Certified<JordanTriple>),
    Pair(Certified<JordanPair>),
    Lie {
        algebra: Certified<GradedLieAlgebra>,
        sl2: Option<Sl2Triple>,
        involution: Option<AntiGradedInvolution>,
    },
}

/// Checks the axioms of the kind and of any decorations.
pub fn certify(loaded: Loaded, seed: u64) -> Result<Structure, Violation> {
    Ok(match loaded {
        Loaded::Algebra(j) => Structure::Algebra(certify_algebra(j, seed)?),
        Loaded::Triple(t) => Structure::Triple(certify_triple(t)?),
        Loaded::Pair(p) => Structure::Pair(certify_pair(p)?),
        Loaded::Lie {
            algebra,
            sl2,
            involution,
        } => {
            let algebra = certify_lie(algebra)?;
            if let Some(s) = &sl2 {
                check_sl2(&algebra, s)?;
            }
            if let Some(e) = &involution {
                check_anti_involution(&algebra, e)?;
            }
            Structure::Lie {
                algebra,
                sl2,
                involution,
            }
        }
    })
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "jordan_algebra",
            Structure::Triple(_) => "jordan_triple",
            Structure::Pair(_) => "jordan_pair",
            Structure::Lie { .. } => "lie_graded",
        }
    }

    /// The Jordan pair a `TKK`-type construction starts from.
    pub fn pair(&self) -> Result<Certified<JordanPair>, LieError> {
        Ok(match self {
            Structure::Algebra(j) => algebra_to_pair(j).0,
            Structure::Triple(t) => double_jts(t).0,
            Structure::Pair(p) => p.clone(),
            Structure::Lie { algebra, .. } => forget_to_pair(algebra)?,
        })
    }

    /// The triple system of an algebra or triple input.
    pub fn triple(&self) -> Option<Certified<JordanTriple>> {
        match self {
            Structure::Algebra(j) => Some(tkk_core::jordan::algebra_to_triple(j)),
            Structure::Triple(t) => Some(t.clone()),
            _ => None,
        }
    }
}
