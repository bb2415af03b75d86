//! Distance-`j` graphs of the `d`-cube and exact certification of their
//! eigenvalues through character vectors `χ_S(x) = (-1)^{|S ∧ x|}`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bits::{low_mask, FixedWeight};
use crate::error::{Error, Result};
use crate::exact::{add, binomial, from_u64, mul, Scalar, SignedScalar};
use crate::krawtchouk::krawtchouk_at;
use crate::limits::Limits;
use crate::super_catalan::{signed_scn, ScnIndex};

/// Vertices are `d`-bit masks; `x ~ y` iff they differ in exactly `j` bits.
#[derive(Debug, Clone)]
pub struct DistanceGraph {
    d: u32,
    j: u32,
    // all masks of weight j; the neighbourhood of x is { x ^ o : o in offsets }
    offsets: Vec<u32>,
}

impl DistanceGraph {
    pub fn new(d: u32, j: u32, limits: &Limits) -> Result<Self> {
        limits.check_cube(d)?;
        if d == 0 || j == 0 || j > d {
            return Err(Error::Domain(format!("distance graph needs 1 <= j <= d, got d={d}, j={j}")));
        }
        let offsets = FixedWeight::new(d, j).map(|m| m as u32).collect();
        Ok(DistanceGraph { d, j, offsets })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.d
    }

    /// Every vertex has `C(d, j)` neighbours.
    pub fn degree(&self) -> usize {
        self.offsets.len()
    }

    fn check_vertex(&self, x: u32) -> Result<()> {
        if u64::from(x) >= self.vertex_count() {
            return Err(Error::Domain(format!("vertex {x} outside the {}-cube", self.d)));
        }
        Ok(())
    }

    /// Neighbours of `x` in increasing order.
    pub fn adjacency_row(&self, x: u32) -> Result<Vec<u32>> {
        self.check_vertex(x)?;
        let mut row: Vec<u32> = self.offsets.iter().map(|o| x ^ o).collect();
        row.sort_unstable();
        Ok(row)
    }

    /// `(A v)(x)` for a vector given as a function of the vertex.
    fn apply_at(&self, x: u32, v: impl Fn(u32) -> i64) -> i64 {
        self.offsets.iter().map(|o| v(x ^ o)).sum()
    }
}

/// The character `χ_S` of the group `(Z/2)^d`, indexed by a subset mask `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterVector {
    d: u32,
    subset: u32,
}

impl CharacterVector {
    pub fn new(d: u32, subset: u32) -> Result<Self> {
        if u64::from(subset) > low_mask(d) {
            return Err(Error::Domain(format!("subset {subset:#b} is not contained in 1..={d}")));
        }
        Ok(CharacterVector { d, subset })
    }

    /// The lexicographically least subset of the given size, `{1, …, size}`.
    pub fn representative(d: u32, size: u32) -> Result<Self> {
        if size > d {
            return Err(Error::Domain(format!("no subset of size {size} in 1..={d}")));
        }
        Self::new(d, low_mask(size) as u32)
    }

    pub fn subset(&self) -> u32 {
        self.subset
    }

    pub fn size(&self) -> u32 {
        self.subset.count_ones()
    }

    #[inline]
    pub fn entry(&self, x: u32) -> i64 {
        if (self.subset & x).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Checks `A χ_S = K_j^d(|S|) χ_S` at every vertex and returns the eigenvalue.
pub fn verify_eigenvector<T: SignedScalar>(g: &DistanceGraph, chi: &CharacterVector) -> Result<T> {
    if chi.d != g.d {
        return Err(Error::Domain(format!("character of the {}-cube used on the {}-cube", chi.d, g.d)));
    }
    let eigenvalue = krawtchouk_at::<T>(g.d, g.j, chi.size())?;
    let lambda = eigenvalue
        .to_i64()
        .ok_or_else(|| Error::Internal(format!("eigenvalue {eigenvalue} exceeds the degree bound")))?;
    let failure = (0..g.vertex_count() as u32).into_par_iter().find_first(|&x| {
        g.apply_at(x, |y| chi.entry(y)) != lambda * chi.entry(x)
    });
    match failure {
        None => Ok(eigenvalue),
        Some(x) => Err(Error::EigenMismatch {
            d: g.d,
            j: g.j,
            subset: chi.subset,
            vertex: x,
            got: g.apply_at(x, |y| chi.entry(y)).to_string(),
            expected: (lambda * chi.entry(x)).to_string(),
        }),
    }
}

/// Eigenvalue and multiplicity attached to one subset size `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSpace<T> {
    pub size: u32,
    pub eigenvalue: T,
    pub multiplicity: T,
}

/// Comparison of the nonzero spectrum of the distance-`N` graph of the
/// `2N`-cube with `{(-1)^m S(m,n) : m + n = N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport<T> {
    pub half_dim: u32,
    pub eigen_set: BTreeSet<T>,
    pub scn_set: BTreeSet<T>,
    /// One entry per subset size `x = 0..=2N`, multiplicity `C(2N, x)`.
    pub spaces: Vec<EigenSpace<T>>,
}

impl<T: Scalar> SpectrumReport<T> {
    pub fn dimension(&self) -> u32 {
        2 * self.half_dim
    }

    pub fn sets_agree(&self) -> bool {
        self.eigen_set == self.scn_set
    }
}

/// Certifies one eigenvector per subset size and compares the nonzero
/// eigenvalue set with the signed super Catalan numbers of total `N`.
///
/// Set equality is the pass criterion; the multiplicities are reported but
/// not compared.
pub fn orthogonality_report<T: SignedScalar>(half_dim: u32, limits: &Limits) -> Result<SpectrumReport<T>> {
    if half_dim == 0 {
        return Err(Error::Domain("orthogonality graph needs N >= 1".into()));
    }
    let d = 2 * half_dim;
    let graph = DistanceGraph::new(d, half_dim, limits)?;
    let spaces = (0..=d)
        .into_par_iter()
        .map(|x| {
            let eigenvalue = verify_eigenvector::<T>(&graph, &CharacterVector::representative(d, x)?)?;
            Ok(EigenSpace {
                size: x,
                eigenvalue,
                multiplicity: binomial(d.into(), x.into())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let vertices = spaces
        .iter()
        .try_fold(T::zero(), |acc, s| add(&acc, &s.multiplicity, "multiplicity sum"))?;
    if vertices != from_u64(graph.vertex_count(), "vertex count")? {
        return Err(Error::Internal(format!("multiplicities sum to {vertices}, not 2^{d}")));
    }
    let trace = spaces.iter().try_fold(T::zero(), |acc, s| {
        add(&acc, &mul(&s.eigenvalue, &s.multiplicity, "trace")?, "trace")
    })?;
    if !trace.is_zero() {
        return Err(Error::Internal(format!("adjacency trace {trace} is not zero")));
    }

    let eigen_set: BTreeSet<T> = spaces
        .iter()
        .filter(|s| !s.eigenvalue.is_zero())
        .map(|s| s.eigenvalue.clone())
        .collect();
    let scn_set = ScnIndex::with_total(half_dim)
        .map(signed_scn::<T>)
        .collect::<Result<BTreeSet<T>>>()?;
    if eigen_set != scn_set {
        return Err(Error::ClaimFailed(format!(
            "N={half_dim}: nonzero eigenvalues {eigen_set:?} differ from signed super Catalan numbers {scn_set:?}"
        )));
    }
    Ok(SpectrumReport {
        half_dim,
        eigen_set,
        scn_set,
        spaces,
    })
}

/// Trace identity `Σ_x C(d,x) K_j^d(x)`, zero for `j >= 1`.
pub fn weighted_eigenvalue_sum<T: SignedScalar>(d: u32, j: u32) -> Result<T> {
    (0..=d).try_fold(T::zero(), |acc, x| {
        let term = mul(&binomial::<T>(d.into(), x.into())?, &krawtchouk_at::<T>(d, j, x)?, "trace")?;
        add(&acc, &term, "trace")
    })
}
