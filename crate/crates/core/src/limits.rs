use crate::error::{Error, Result};

/// Size caps for the brute-force parts of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `N` for which all of `𝒫_N` may be enumerated.
    pub enumeration: u32,
    /// Largest `m + n` for which the injection search builds a relation graph.
    pub matching: u32,
    /// Largest hypercube dimension `d` for eigenvector certification.
    pub cube_dimension: u32,
}

impl Limits {
    /// Paths are packed into a `u64`, two bits per unit of `N`, with headroom
    /// for the successor computation.
    pub const MAX_PATH_HALF_LENGTH: u32 = 31;
    /// Vertices of the cube are `u32` bit masks.
    pub const MAX_CUBE_DIMENSION: u32 = 30;

    /// Caps raised to the structural maxima of the data representation.
    pub fn unbounded() -> Self {
        Limits {
            enumeration: Self::MAX_PATH_HALF_LENGTH,
            matching: Self::MAX_PATH_HALF_LENGTH,
            cube_dimension: Self::MAX_CUBE_DIMENSION,
        }
    }

    pub(crate) fn check_enumeration(&self, n: u32) -> Result<()> {
        check("path half-length N", n, self.enumeration.min(Self::MAX_PATH_HALF_LENGTH))
    }

    pub(crate) fn check_matching(&self, n: u32) -> Result<()> {
        check("m+n", n, self.matching.min(Self::MAX_PATH_HALF_LENGTH))
    }

    pub(crate) fn check_cube(&self, d: u32) -> Result<()> {
        check("cube dimension d", d, self.cube_dimension.min(Self::MAX_CUBE_DIMENSION))
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 14,
            matching: 9,
            cube_dimension: 10,
        }
    }
}

fn check(what: &'static str, requested: u32, cap: u32) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded {
            what,
            requested: requested.into(),
            cap: cap.into(),
        })
    } else {
        Ok(())
    }
}
