//! Brute-force reference implementations used to cross-check the encoder and
//! decoder. Everything here recomputes from first principles (direct double
//! sums, full enumeration) rather than calling the transform-based fast
//! paths, so agreement between the two is meaningful evidence.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::code::{encode, Code2D, Message};
use crate::error::{Error, Result};
use crate::error_model::ErrorPattern;
use crate::galois::{Field, FieldElement};
use crate::transform::{BitGrid, RootPair};

/// Evaluates the grid polynomial at (gamma^theta, beta^phi) by the direct
/// double sum, with no precomputation shared with the transform module.
pub fn naive_eval(
    grid: &BitGrid,
    theta: usize,
    phi: usize,
    field: &Field,
    roots: &RootPair,
) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for i in 0..grid.n() {
        for j in 0..grid.m() {
            if grid.get(i, j) {
                let term = field.mul(
                    field.pow(roots.gamma, (i * theta) as i64),
                    field.pow(roots.beta, (j * phi) as i64),
                );
                acc = field.add(acc, term);
            }
        }
    }
    acc
}

/// Codeword membership by direct evaluation at every closure index.
pub fn is_codeword_naive(code: &Code2D, grid: &BitGrid) -> Result<bool> {
    code.check_dims(grid)?;
    Ok(code
        .zeros()
        .closure
        .iter()
        .all(|&(t, p)| naive_eval(grid, t, p, code.field(), code.roots()).is_zero()))
}

/// A fully enumerated codebook.
#[derive(Debug, Clone)]
pub struct CodebookTable {
    codewords: Vec<BitGrid>,
}

impl CodebookTable {
    pub fn codewords(&self) -> &[BitGrid] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, grid: &BitGrid) -> bool {
        self.codewords.contains(grid)
    }

    /// Minimum Hamming weight over the nonzero codewords, if any exist.
    pub fn min_distance(&self) -> Option<usize> {
        self.codewords
            .iter()
            .map(|c| c.weight())
            .filter(|&w| w > 0)
            .min()
    }
}

/// Builds the codebook two independent ways and cross-checks them: filtering
/// all 2^(n*m) grids by direct root evaluation, and encoding all 2^k
/// messages. `limit` caps the larger enumeration.
pub fn enumerate_codewords(code: &Code2D, limit: u64) -> Result<CodebookTable> {
    let (n, m) = (code.n(), code.m());
    let total_bits = (n * m) as u32;
    if total_bits >= 63 || (1u64 << total_bits) > limit {
        return Err(Error::TooLarge(
            1u64.checked_shl(total_bits).unwrap_or(u64::MAX),
            limit,
        ));
    }

    let mut by_filter: BTreeSet<BitGrid> = BTreeSet::new();
    for word in 0..(1u64 << total_bits) {
        let mut g = BitGrid::zero(n, m);
        for b in 0..total_bits as usize {
            if word >> b & 1 == 1 {
                g.set(b / m, b % m, true);
            }
        }
        if is_codeword_naive(code, &g)? {
            by_filter.insert(g);
        }
    }

    let mut by_encode: BTreeSet<BitGrid> = BTreeSet::new();
    for idx in 0..(1u64 << code.k_bits()) {
        let msg = Message::from_index(idx, code.k_bits());
        by_encode.insert(encode(code, &msg)?);
    }

    if by_filter != by_encode {
        return Err(Error::EnumerationMismatch);
    }
    Ok(CodebookTable {
        codewords: by_filter.into_iter().collect(),
    })
}

/// All cyclic placements of one pattern, as error masks.
pub fn single_placements(pattern: &ErrorPattern, n: usize, m: usize) -> Vec<BTreeSet<(usize, usize)>> {
    (0..n)
        .cartesian_product(0..m)
        .map(|at| pattern.cells_at(at, n, m))
        .collect()
}

/// All placements of two patterns with disjoint cell sets.
pub fn disjoint_pair_placements(
    p1: &ErrorPattern,
    p2: &ErrorPattern,
    n: usize,
    m: usize,
) -> Vec<BTreeSet<(usize, usize)>> {
    let mut out = Vec::new();
    for a in (0..n).cartesian_product(0..m) {
        let ca = p1.cells_at(a, n, m);
        for b in (0..n).cartesian_product(0..m) {
            let cb = p2.cells_at(b, n, m);
            if ca.is_disjoint(&cb) {
                out.push(ca.union(&cb).copied().collect());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All sets of `mu` pairwise non-overlapping placements of one pattern.
pub fn same_type_placements(
    pattern: &ErrorPattern,
    mu: usize,
    n: usize,
    m: usize,
) -> Vec<BTreeSet<(usize, usize)>> {
    let cells: Vec<BTreeSet<(usize, usize)>> = (0..n)
        .cartesian_product(0..m)
        .map(|at| pattern.cells_at(at, n, m))
        .collect();
    let mut out = Vec::new();
    'combo: for combo in (0..cells.len()).combinations(mu) {
        let mut mask: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &c in &combo {
            if !mask.is_disjoint(&cells[c]) {
                continue 'combo;
            }
            mask.extend(cells[c].iter().copied());
        }
        out.push(mask);
    }
    out.sort();
    out.dedup();
    out
}

/// What the exhaustive reference decoder concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Clean,
    Corrected { mask: BTreeSet<(usize, usize)>, grid: BitGrid },
    Ambiguous { masks: Vec<BTreeSet<(usize, usize)>> },
    Uncorrectable,
}

/// Tries every candidate error mask and keeps those whose removal restores a
/// codeword. Membership uses direct root evaluation, independent of the
/// production decoder.
pub fn exhaustive_decode(
    r: &BitGrid,
    code: &Code2D,
    candidates: &[BTreeSet<(usize, usize)>],
) -> Result<OracleOutcome> {
    if is_codeword_naive(code, r)? {
        return Ok(OracleOutcome::Clean);
    }
    let mut masks: Vec<BTreeSet<(usize, usize)>> = Vec::new();
    for cand in candidates {
        let mut g = r.clone();
        for &(i, j) in cand {
            g.flip(i, j);
        }
        if is_codeword_naive(code, &g)? && !masks.contains(cand) {
            masks.push(cand.clone());
        }
    }
    match masks.len() {
        0 => Ok(OracleOutcome::Uncorrectable),
        1 => {
            let mask = masks.remove(0);
            let mut grid = r.clone();
            for &(i, j) in &mask {
                grid.flip(i, j);
            }
            Ok(OracleOutcome::Corrected { mask, grid })
        }
        _ => {
            masks.sort();
            Ok(OracleOutcome::Ambiguous { masks })
        }
    }
}
