use thiserror::Error;

/// Errors produced across the crate.
///
/// Variants that are documented as "bug signals" should be unreachable for
/// inputs that passed validation; they are reported instead of panicking so
/// that exhaustive sweeps can print the offending instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sigma and alpha must be permutations of the same dart set 1..{0}")]
    InvalidPermutation(usize),
    #[error("alpha is not an involution (dart {0})")]
    AlphaNotInvolution(usize),
    #[error("alpha has a fixed point (dart {0})")]
    AlphaHasFixedPoint(usize),
    #[error("map is disconnected")]
    Disconnected,
    #[error("map does not have genus 0 (V - E + F = {0})")]
    NonZeroGenus(i64),
    #[error("map is not 4-valent")]
    NotFourValent,
    #[error("face coloring is not a proper checkerboard coloring")]
    BadColoring,
    #[error("invalid pinch: {0}")]
    InvalidPinch(String),
    #[error("{0} exceeds the configured limit {1}")]
    TooLarge(usize, usize),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("labeling cocycle is inconsistent at vertex {0}")]
    InconsistentCocycle(usize),
    #[error("map is not balanced")]
    NotBalanced,
    #[error("no matching yields pairwise distinct critical labels")]
    NoGenericRealization,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid transposition tuple: {0}")]
    InvalidTuple(String),
    #[error("map carries no realization labeling")]
    NotRealized,
    #[error("degree {0} is too small for the closed formula")]
    DegreeTooSmall(usize),
    #[error("census mismatch: {0}")]
    Mismatch(String),
    #[error("orientation lacks the unique-in/unique-out property: {0}")]
    DegreePropertyFailed(String),
    #[error("cycle reversal did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("search tree is not spanning")]
    NotSpanning,
    #[error("hair matching got stuck: {0}")]
    MatchingStuck(String),
    #[error("trivial cut")]
    TrivialCut,
    #[error("cut not applicable: {0}")]
    NotApplicable(String),
    #[error("faces must have opposite colors")]
    ColorMismatch,
    #[error("invalid rectangle: {0}")]
    InvalidRectangle(String),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
