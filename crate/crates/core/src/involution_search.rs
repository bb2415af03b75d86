//! Search for an injection from the paths with `h_{2m} ≢ m (mod 2)` into
//! those with `h_{2m} ≡ m (mod 2)`, under a chosen local-move relation.
//!
//! The search is empirical: for each relation it finds a maximum matching
//! and reports the unmatched positive paths, without claiming anything
//! beyond what the matching shows.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice_paths::{enumerate_paths, LatticePath};
use crate::limits::Limits;
use crate::matching::{find_augmenting_path, hopcroft_karp, Adjacency};
use crate::super_catalan::{scn_closed_form, ScnIndex};
use crate::Nat;

/// `𝒫_{m+n}` split by the parity of `h_{2m}` relative to `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedClasses {
    pub m: u32,
    pub n: u32,
    /// `h_{2m}(P) ≢ m (mod 2)`, in lexicographic order.
    pub minus_class: Vec<LatticePath>,
    /// `h_{2m}(P) ≡ m (mod 2)`, in lexicographic order.
    pub plus_class: Vec<LatticePath>,
}

impl SignedClasses {
    pub fn index(&self) -> ScnIndex {
        ScnIndex::new(self.m, self.n)
    }
}

pub fn partition_by_parity(idx: ScnIndex, limits: &Limits) -> Result<SignedClasses> {
    let (mut minus_class, mut plus_class) = (Vec::new(), Vec::new());
    for p in enumerate_paths(idx.total(), limits)? {
        if p.height_unchecked(2 * idx.m) % 2 == idx.m % 2 {
            plus_class.push(p);
        } else {
            minus_class.push(p);
        }
    }
    let scn: Nat = scn_closed_form(idx)?;
    let difference = plus_class.len() as i128 - minus_class.len() as i128;
    if scn.to_i128() != Some(difference) {
        return Err(Error::ClaimFailed(format!(
            "|plus| - |minus| = {difference} but S{idx} = {scn}"
        )));
    }
    Ok(SignedClasses {
        m: idx.m,
        n: idx.n,
        minus_class,
        plus_class,
    })
}

/// Which minus/plus pairs may be matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveRelation {
    /// The two paths differ by exchanging steps `2m` and `2m+1` (1-based),
    /// which moves `h_{2m}` by one.
    BoundarySwap,
    /// The step sequences differ in at most `k` positions.
    Hamming(u32),
    /// Every pair.
    Complete,
}

impl MoveRelation {
    /// Whether `minus` and `plus` are related for the given `m`. Pairs from
    /// the same class are never related since their parities agree.
    pub fn relates(&self, m: u32, minus: &LatticePath, plus: &LatticePath) -> bool {
        if minus.half_len() != plus.half_len()
            || minus.height_unchecked(2 * m) % 2 == plus.height_unchecked(2 * m) % 2
        {
            return false;
        }
        match *self {
            MoveRelation::BoundarySwap => {
                2 * m >= 1 && minus.swap_steps(2 * m - 1, 2 * m).as_ref() == Some(plus)
            }
            MoveRelation::Hamming(k) => minus.hamming_distance(plus) <= k,
            MoveRelation::Complete => true,
        }
    }
}

impl fmt::Display for MoveRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveRelation::BoundarySwap => f.write_str("boundary-swap"),
            MoveRelation::Hamming(k) => write!(f, "hamming-{k}"),
            MoveRelation::Complete => f.write_str("complete"),
        }
    }
}

/// Outcome of the injection search for one `(m, n)` and relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub m: u32,
    pub n: u32,
    pub relation: MoveRelation,
    pub minus_count: usize,
    pub plus_count: usize,
    /// `(minus, plus)` pairs in increasing order of the minus path.
    pub matched: Vec<(LatticePath, LatticePath)>,
    /// Plus paths left unmatched, in lexicographic order.
    pub uncovered: Vec<LatticePath>,
    /// Number of minus paths left unmatched.
    pub deficiency: usize,
    pub scn: Nat,
}

impl MatchingResult {
    pub fn index(&self) -> ScnIndex {
        ScnIndex::new(self.m, self.n)
    }

    /// True when every minus path is matched, i.e. the relation admits an injection.
    pub fn is_injection(&self) -> bool {
        self.deficiency == 0
    }
}

fn relation_graph(classes: &SignedClasses, relation: MoveRelation) -> Adjacency {
    let (minus, plus) = (&classes.minus_class, &classes.plus_class);
    let m = classes.m;
    match relation {
        MoveRelation::Complete => Adjacency::Complete {
            left: minus.len(),
            right: plus.len(),
        },
        MoveRelation::BoundarySwap => {
            let lists = minus
                .par_iter()
                .map(|p| {
                    (2 * m >= 1)
                        .then(|| p.swap_steps(2 * m - 1, 2 * m))
                        .flatten()
                        .and_then(|q| plus.binary_search(&q).ok())
                        .map(|i| i as u32)
                        .into_iter()
                        .collect()
                })
                .collect();
            Adjacency::from_lists(plus.len(), lists)
        }
        MoveRelation::Hamming(_) => {
            let lists = minus
                .par_iter()
                .map(|p| {
                    plus.iter()
                        .enumerate()
                        .filter(|(_, q)| relation.relates(m, p, q))
                        .map(|(i, _)| i as u32)
                        .collect()
                })
                .collect();
            Adjacency::from_lists(plus.len(), lists)
        }
    }
}

/// Maximum matching between the parity classes restricted to `relation`.
///
/// The result is checked afterwards: every pair must be related and no
/// augmenting path may remain.
pub fn search_injection(idx: ScnIndex, relation: MoveRelation, limits: &Limits) -> Result<MatchingResult> {
    limits.check_matching(idx.total())?;
    let classes = partition_by_parity(idx, limits)?;
    search_classes(&classes, relation)
}

/// [`search_injection`] on classes that were already partitioned.
pub fn search_classes(classes: &SignedClasses, relation: MoveRelation) -> Result<MatchingResult> {
    let idx = classes.index();
    let adj = relation_graph(classes, relation);
    let matching = hopcroft_karp(&adj);
    if !matching.is_valid_for(&adj) {
        return Err(Error::Internal(format!("inconsistent matching for {idx} under {relation}")));
    }
    if let Some(path) = find_augmenting_path(&adj, &matching) {
        return Err(Error::Internal(format!(
            "matching for {idx} under {relation} is not maximum: augmenting path {path:?}"
        )));
    }

    let (minus, plus) = (&classes.minus_class, &classes.plus_class);
    let matched: Vec<(LatticePath, LatticePath)> = matching.pairs().map(|(u, v)| (minus[u], plus[v])).collect();
    if let Some((a, b)) = matched.iter().find(|(a, b)| !relation.relates(idx.m, a, b)) {
        return Err(Error::Internal(format!("matched pair {a} -> {b} is not related under {relation}")));
    }
    let uncovered = (0..plus.len())
        .filter(|&v| matching.partner_of_right(v).is_none())
        .map(|v| plus[v])
        .collect();
    Ok(MatchingResult {
        m: idx.m,
        n: idx.n,
        relation,
        minus_count: minus.len(),
        plus_count: plus.len(),
        deficiency: minus.len() - matched.len(),
        matched,
        uncovered,
        scn: scn_closed_form(idx)?,
    })
}

/// Serializable summary of an injection search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub m: u32,
    pub n: u32,
    pub relation: String,
    pub minus_count: usize,
    pub plus_count: usize,
    pub matched: Vec<(String, String)>,
    pub uncovered: Vec<String>,
    pub uncovered_count: usize,
    pub deficiency: usize,
    pub scn: String,
    /// `|uncovered| = S(m,n)`, which holds exactly when the deficiency is zero.
    pub uncovered_equals_scn: bool,
    pub verdict: String,
}

pub const INJECTION_FOUND: &str = "injection found";
pub const NO_INJECTION: &str = "no injection under this relation";

pub fn export_witnesses(r: &MatchingResult) -> WitnessReport {
    WitnessReport {
        m: r.m,
        n: r.n,
        relation: r.relation.to_string(),
        minus_count: r.minus_count,
        plus_count: r.plus_count,
        matched: r.matched.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        uncovered: r.uncovered.iter().map(ToString::to_string).collect(),
        uncovered_count: r.uncovered.len(),
        deficiency: r.deficiency,
        scn: r.scn.to_string(),
        uncovered_equals_scn: Nat::from(r.uncovered.len()) == r.scn,
        verdict: if r.is_injection() { INJECTION_FOUND } else { NO_INJECTION }.to_string(),
    }
}
