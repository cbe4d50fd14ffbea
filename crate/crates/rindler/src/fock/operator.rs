//! Block operators over labeled bases, and the density-matrix /
//! state-vector containers built on them.
//!
//! An operator is stored as a list of independent symmetric blocks, each with
//! its ordered basis labels. Partial traces and partial transposes produce
//! entry maps keyed by label pairs; [`BlockOperator::from_entries`] re-blocks
//! such a map into connected components with a deterministic basis order.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::fock::dense::SymMatrix;
use crate::fock::labels::{AliceLabel, BasisVector, BobLabel, StateFamily, TripartiteIndex};
use crate::series::KahanSum;

/// One diagonal block together with its ordered basis labels.
#[derive(Debug, Clone)]
pub struct Block<L> {
    pub basis: Vec<L>,
    pub matrix: SymMatrix,
}

impl<L: Copy + Ord> Block<L> {
    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.basis.iter().position(|l| l == label)
    }
}

/// A Hermitian operator that is block-diagonal over a labeled basis.
#[derive(Debug, Clone)]
pub struct BlockOperator<L> {
    pub blocks: Vec<Block<L>>,
}

impl<L: Copy + Ord + std::fmt::Debug> BlockOperator<L> {
    pub fn new(blocks: Vec<Block<L>>) -> Self {
        Self { blocks }
    }

    /// Assemble blocks from a map of matrix entries keyed by canonical label
    /// pairs (row <= col). Labels connected by nonzero entries are grouped
    /// into one block; blocks and bases come out sorted, so the layout is
    /// deterministic.
    pub fn from_entries(entries: &BTreeMap<(L, L), f64>) -> Self {
        let mut labels: Vec<L> = Vec::new();
        for (r, c) in entries.keys() {
            labels.push(*r);
            labels.push(*c);
        }
        labels.sort_unstable();
        labels.dedup();
        let index: BTreeMap<L, usize> = labels.iter().copied().zip(0..).collect();

        // Union-find over label indices.
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (r, c) in entries.keys() {
            let ri = index[r];
            let ci = index[c];
            let (a, b) = (find(&mut parent, ri), find(&mut parent, ci));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }

        let mut components: BTreeMap<usize, Vec<L>> = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            let root = find(&mut parent, i);
            components.entry(root).or_default().push(*label);
        }

        let mut blocks = Vec::with_capacity(components.len());
        for (_, basis) in components {
            // Labels were inserted in sorted order, so each basis is sorted.
            let local: BTreeMap<L, usize> = basis.iter().copied().zip(0..).collect();
            let mut matrix = SymMatrix::zeros(basis.len());
            for ((r, c), &value) in entries.range((basis[0], basis[0])..=(*basis.last().unwrap(), *basis.last().unwrap())) {
                if let (Some(&i), Some(&j)) = (local.get(r), local.get(c)) {
                    matrix.set(i, j, value);
                }
            }
            blocks.push(Block { basis, matrix });
        }
        Self { blocks }
    }

    pub fn trace(&self) -> f64 {
        let mut acc = KahanSum::new();
        for block in &self.blocks {
            for i in 0..block.matrix.dim() {
                acc.add(block.matrix.get(i, i));
            }
        }
        acc.value()
    }

    /// All eigenvalues across blocks, sorted descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let mut all = Vec::new();
        for block in &self.blocks {
            all.extend(block.matrix.eigenvalues()?);
        }
        all.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Ok(all)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self
            .eigenvalues()?
            .last()
            .copied()
            .unwrap_or(0.0))
    }

    /// Flatten to a canonical entry map (row <= col), dropping exact zeros.
    pub fn to_entries(&self) -> BTreeMap<(L, L), f64> {
        let mut entries = BTreeMap::new();
        for block in &self.blocks {
            for i in 0..block.basis.len() {
                for j in i..block.basis.len() {
                    let value = block.matrix.get(i, j);
                    if value != 0.0 {
                        let (r, c) = canonical_pair(block.basis[i], block.basis[j]);
                        *entries.entry((r, c)).or_insert(0.0) += value;
                    }
                }
            }
        }
        entries
    }

    /// Largest entrywise |self - other| over the union of both label sets.
    pub fn max_entrywise_diff(&self, other: &Self) -> f64 {
        let a = self.to_entries();
        let b = other.to_entries();
        let mut worst = 0.0_f64;
        for (key, value) in &a {
            worst = worst.max((value - b.get(key).copied().unwrap_or(0.0)).abs());
        }
        for (key, value) in &b {
            if !a.contains_key(key) {
                worst = worst.max(value.abs());
            }
        }
        worst
    }

    /// True when no label appears in more than one block.
    pub fn labels_are_disjoint(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for block in &self.blocks {
            for label in &block.basis {
                if !seen.insert(*label) {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_asymmetry(&self) -> f64 {
        self.blocks
            .iter()
            .fold(0.0_f64, |acc, b| acc.max(b.matrix.max_asymmetry()))
    }
}

pub(crate) fn canonical_pair<L: Ord>(a: L, b: L) -> (L, L) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A truncated joint density matrix, block-diagonal over [`BasisVector`]
/// labels, with the analytic trace tail carried alongside.
#[derive(Debug, Clone)]
pub struct BlockDensityMatrix {
    pub family: StateFamily,
    pub q: f64,
    pub n_max: usize,
    pub operator: BlockOperator<BasisVector>,
    pub trace_deficit: f64,
}

impl BlockDensityMatrix {
    pub fn trace(&self) -> f64 {
        self.operator.trace()
    }
}

/// Sum of diagonal entries over all blocks.
pub fn block_trace(m: &BlockDensityMatrix) -> f64 {
    m.operator.trace()
}

/// Trace out Bob: entry (a, a') = sum_b <a b|rho|a' b>.
pub fn partial_trace_bob(m: &BlockDensityMatrix) -> BlockOperator<AliceLabel> {
    let mut entries: BTreeMap<(AliceLabel, AliceLabel), f64> = BTreeMap::new();
    for block in &m.operator.blocks {
        for i in 0..block.basis.len() {
            for j in i..block.basis.len() {
                let (vi, vj) = (block.basis[i], block.basis[j]);
                if vi.bob == vj.bob {
                    let key = canonical_pair(vi.alice, vj.alice);
                    *entries.entry(key).or_insert(0.0) += block.matrix.get(i, j);
                }
            }
        }
    }
    BlockOperator::from_entries(&entries)
}

/// Trace out Alice: entry (b, b') = sum_a <a b|rho|a b'>.
pub fn partial_trace_alice(m: &BlockDensityMatrix) -> BlockOperator<BobLabel> {
    let mut entries: BTreeMap<(BobLabel, BobLabel), f64> = BTreeMap::new();
    for block in &m.operator.blocks {
        for i in 0..block.basis.len() {
            for j in i..block.basis.len() {
                let (vi, vj) = (block.basis[i], block.basis[j]);
                if vi.alice == vj.alice {
                    let key = canonical_pair(vi.bob, vj.bob);
                    *entries.entry(key).or_insert(0.0) += block.matrix.get(i, j);
                }
            }
        }
    }
    BlockOperator::from_entries(&entries)
}

/// Eigenvalues of one symmetric block, descending; validates symmetry first.
pub fn hermitian_eigenvalues(block: &SymMatrix) -> Result<Vec<f64>> {
    let asym = block.max_asymmetry();
    if asym > 1e-12 {
        return Err(crate::error::Error::NotHermitian {
            max_asymmetry: asym,
        });
    }
    block.eigenvalues()
}

/// A truncated pure state over the A ⊗ R ⊗ L tensor basis; the oracle-side
/// representation from which density matrices are rebuilt by brute force.
#[derive(Debug, Clone)]
pub struct StateVector {
    pub family: StateFamily,
    pub q: f64,
    pub n_max: usize,
    pub amplitudes: BTreeMap<TripartiteIndex, f64>,
}

impl StateVector {
    pub fn norm_squared(&self) -> f64 {
        let mut acc = KahanSum::new();
        for amp in self.amplitudes.values() {
            acc.add(amp * amp);
        }
        acc.value()
    }
}
