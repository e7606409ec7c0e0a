use thiserror::Error;

/// Errors produced by the fallible operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u8, right: u8 },

    #[error("modulus {0} is outside the supported range 3..=64")]
    ModulusOutOfRange(i64),

    #[error("{multiplier} is not a unit modulo {modulus}")]
    NotAUnit { multiplier: u8, modulus: u8 },

    #[error("scale must contain at least one tone")]
    EmptyScale,

    #[error("interpretation width must be at least 1")]
    ZeroWidth,

    #[error("degree index {index} is out of range for {count} degrees")]
    DegreeOutOfRange { index: usize, count: usize },

    /// Raised when an exhaustive subset search would have to visit more
    /// degrees than the fixed capacity allows.
    #[error("{count} degrees exceed the exhaustive search capacity of {max}")]
    CapacityExceeded { count: usize, max: usize },

    #[error("{modulator} does not map the source scale onto the target scale")]
    NotAModulator { modulator: String },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    /// Distinguishes capacity blowups from malformed input; callers that
    /// map errors to process exit codes rely on this split.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::CapacityExceeded { .. })
    }
}
