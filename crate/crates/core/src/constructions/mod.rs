//! Explicit constructions: sample sets, hitting sets, the basic and Chow
//! families, rank extractors, ambient reduction, affine restriction and
//! Noether maps.

mod families;
mod hitting;
mod noether;
mod serial;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::linalg::{AffineSubspace, LinalgError, ProjSubspace};

pub use families::{
    affine_main_family, affine_restriction, ambient_reduction, basic_family, chow_family, main_family,
    rank_extractor_family,
};
pub use hitting::{epsilon_hitting_set, sample_sets, slicer_witness, vandermonde_form, HittingSet};
pub use noether::{noether_maps, projective_noether_maps, LinearMapSpec};
pub use serial::{maps_to_text, parse_family};

/// Exact failure probability bound.
pub type Eps = Ratio<u64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("field too small: the prime must exceed {required}")]
    FieldTooSmall { required: u128 },
    #[error("construction produced no members")]
    EmptyFamily,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("every candidate vanishes at some point")]
    NoWitness,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Projective,
    Affine,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Projective => "projective",
            Kind::Affine => "affine",
        }
    }
}

/// Parameters of a k-subspace family in `P^n` or `A^n` that evades
/// varieties of degree at most `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub eps: Option<Eps>,
    pub kind: Kind,
}

impl FamilyParams {
    /// Projective parameters without `eps`; requires `k < n` and `d >= 1`.
    pub fn new(n: usize, d: usize, k: usize) -> Result<Self, ConstructionError> {
        if d == 0 {
            return Err(ConstructionError::InvalidParams("d must be at least 1".into()));
        }
        if k >= n {
            return Err(ConstructionError::InvalidParams(format!("need k < n, got k = {k}, n = {n}")));
        }
        Ok(FamilyParams { n, d, k, eps: None, kind: Kind::Projective })
    }

    /// Sets `eps`, which must lie strictly between 0 and 1.
    pub fn with_eps(mut self, eps: Eps) -> Result<Self, ConstructionError> {
        check_eps(eps)?;
        self.eps = Some(eps);
        Ok(self)
    }

    pub fn affine(mut self) -> Self {
        self.kind = Kind::Affine;
        self
    }

    /// `n - k`, the number of defining forms of a member.
    pub fn codim(&self) -> usize {
        self.n - self.k
    }
}

pub(crate) fn check_eps(eps: Eps) -> Result<(), ConstructionError> {
    if *eps.numer() == 0 || eps >= Eps::from_integer(1) {
        return Err(ConstructionError::InvalidParams(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(())
}

/// Parses an exact rational such as `1/10`.
pub fn parse_eps(s: &str) -> Result<Eps, ConstructionError> {
    let eps: Eps = s
        .trim()
        .parse()
        .map_err(|_| ConstructionError::InvalidParams(format!("eps must be a rational a/b, got {s:?}")))?;
    check_eps(eps)?;
    Ok(eps)
}

/// Which proof branch produced a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    None,
    Direct,
    Reduction,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::None => "none",
            Branch::Direct => "direct",
            Branch::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subspace {
    Projective(ProjSubspace),
    Affine(AffineSubspace),
}

impl Subspace {
    pub fn dim(&self) -> usize {
        match self {
            Subspace::Projective(s) => s.dim(),
            Subspace::Affine(s) => s.dim(),
        }
    }

    pub fn as_projective(&self) -> Option<&ProjSubspace> {
        match self {
            Subspace::Projective(s) => Some(s),
            Subspace::Affine(_) => None,
        }
    }

    pub fn as_affine(&self) -> Option<&AffineSubspace> {
        match self {
            Subspace::Affine(s) => Some(s),
            Subspace::Projective(_) => None,
        }
    }
}

/// One member with its index coordinates in the construction. Members of
/// the wrong dimension are kept but flagged `degenerate`; they count as
/// failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub index: Vec<u64>,
    pub subspace: Subspace,
    pub degenerate: bool,
}

/// An ordered family of subspaces with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceFamily {
    params: FamilyParams,
    construction: String,
    prime: u64,
    sample_base: u64,
    branch: Branch,
    members: Vec<Member>,
}

impl SubspaceFamily {
    pub(crate) fn new(
        params: FamilyParams,
        construction: impl Into<String>,
        prime: u64,
        branch: Branch,
        members: Vec<Member>,
    ) -> Self {
        SubspaceFamily { params, construction: construction.into(), prime, sample_base: 1, branch, members }
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn eps(&self) -> Option<Eps> {
        self.params.eps
    }

    pub fn construction(&self) -> &str {
        &self.construction
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Smallest field element used by the sample sets.
    pub fn sample_base(&self) -> u64 {
        self.sample_base
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn degenerate_count(&self) -> usize {
        self.members.iter().filter(|m| m.degenerate).count()
    }

    /// Byte-stable text form, starting with `format=1`.
    pub fn to_text(&self) -> String {
        serial::family_to_text(self)
    }
}
