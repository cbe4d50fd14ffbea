//! Construction of the two entangled states as Bob-side Rindler density
//! matrices, plus the brute-force tripartite oracle for the number family.
//!
//! Both joint matrices are block-diagonal in Bob's photon number n with block
//! weight lambda_n = (1-q^2)^2 q^(2n) (n+1), which sums to exactly 1:
//!
//! * helicity family: block n is (lambda_n/2) [[1,1],[1,1]] over
//!   {|up>_A |n+1, down>_B, |down>_A |n+1, up>_B};
//! * number family: block n spans {|0>_A |n>_B, |1>_A |n+1>_B} with entries
//!   derived by expanding |0>_B and |1>_B through the squeezed-mode series
//!   and tracing the causally hidden L sector.

use std::collections::BTreeMap;

use crate::bogoliubov::{one_particle_tail, vacuum_tail, SqueezeParams};
use crate::error::{Error, Result};
use crate::fock::{
    canonical_pair, AliceLabel, BasisVector, Block, BlockDensityMatrix, BlockOperator, BobHelicity,
    BobLabel, StateVector, SymMatrix, TripartiteIndex,
};
pub use crate::fock::StateFamily;

/// Weight of the nth diagonal block: lambda_n = (1-q^2)^2 q^(2n) (n+1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockWeight {
    pub n: usize,
    pub lambda: f64,
}

impl BlockWeight {
    pub fn at(q: f64, n: usize) -> Self {
        Self {
            n,
            lambda: block_weight(q, n),
        }
    }
}

/// lambda_n as a bare number.
pub fn block_weight(q: f64, n: usize) -> f64 {
    let one_minus_q2 = (1.0 - q) * (1.0 + q);
    one_minus_q2 * one_minus_q2 * q.powi(2 * n as i32) * (n + 1) as f64
}

/// Exact mass of the lambda series beyond `n_max`; identical to the
/// one-particle expansion tail.
pub fn block_weight_tail(q: f64, n_max: usize) -> f64 {
    one_particle_tail(q, n_max)
}

/// Joint Rindler density matrix of the helicity-entangled state, truncated at
/// Bob occupation n_max + 1.
pub fn helicity_bell_rho(p: &SqueezeParams, n_max: usize) -> BlockDensityMatrix {
    let q = p.q();
    let mut blocks = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let lambda = block_weight(q, n);
        if lambda == 0.0 {
            continue;
        }
        let basis = vec![
            BasisVector::new(AliceLabel::Up, BobLabel::helicity(BobHelicity::Down, n + 1)),
            BasisVector::new(AliceLabel::Down, BobLabel::helicity(BobHelicity::Up, n + 1)),
        ];
        let mut matrix = SymMatrix::zeros(2);
        let half = lambda / 2.0;
        matrix.set(0, 0, half);
        matrix.set(0, 1, half);
        matrix.set(1, 1, half);
        blocks.push(Block { basis, matrix });
    }
    BlockDensityMatrix {
        family: StateFamily::HelicityBell,
        q,
        n_max,
        operator: BlockOperator::new(blocks),
        trace_deficit: block_weight_tail(q, n_max),
    }
}

/// Joint Rindler density matrix of the number-entangled state
/// (|0 0> + |1 1>)/sqrt(2), truncated at series index n_max.
///
/// Block n carries
///
/// ```text
/// rho_00 = (1-q^2) q^(2n) / 2
/// rho_11 = (1-q^2)^2 q^(2n) (n+1) / 2
/// rho_01 = (1-q^2)^(3/2) q^(2n) sqrt(n+1) / 2
/// ```
///
/// over {|0>_A |n>_B, |1>_A |n+1>_B}; the L-sector trace is diagonal in the
/// L occupation, which pairs these two vectors and nothing else.
pub fn number_bell_rho(p: &SqueezeParams, n_max: usize) -> BlockDensityMatrix {
    let q = p.q();
    let one_minus_q2 = p.one_minus_q_squared();
    let mut blocks = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let q2n = q.powi(2 * n as i32);
        if q2n == 0.0 && n > 0 {
            continue;
        }
        let rho_00 = one_minus_q2 * q2n / 2.0;
        let rho_11 = one_minus_q2 * one_minus_q2 * q2n * (n + 1) as f64 / 2.0;
        let rho_01 = one_minus_q2.powf(1.5) * q2n * ((n + 1) as f64).sqrt() / 2.0;
        let basis = vec![
            BasisVector::new(AliceLabel::Zero, BobLabel::number(n)),
            BasisVector::new(AliceLabel::One, BobLabel::number(n + 1)),
        ];
        let mut matrix = SymMatrix::zeros(2);
        matrix.set(0, 0, rho_00);
        matrix.set(0, 1, rho_01);
        matrix.set(1, 1, rho_11);
        blocks.push(Block { basis, matrix });
    }
    BlockDensityMatrix {
        family: StateFamily::NumberBell,
        q,
        n_max,
        operator: BlockOperator::new(blocks),
        trace_deficit: number_trace_deficit(q, n_max),
    }
}

/// Missing trace of the truncated number-family matrix: half the vacuum tail
/// plus half the one-particle tail.
pub fn number_trace_deficit(q: f64, n_max: usize) -> f64 {
    0.5 * (vacuum_tail(q, n_max) + one_particle_tail(q, n_max))
}

/// The joint pure state over A ⊗ R ⊗ L before any trace, for the number
/// family:
///
/// ```text
/// a(0, n, n)   = sqrt(1-q^2) q^n / sqrt(2)
/// a(1, n+1, n) = (1-q^2) q^n sqrt(n+1) / sqrt(2)
/// ```
///
/// The helicity state involves two Bob modes with distinct L partners, so a
/// single-mode tripartite table does not represent it; requesting it is an
/// error.
pub fn tripartite_pure_state(
    family: StateFamily,
    p: &SqueezeParams,
    n_max: usize,
) -> Result<StateVector> {
    if family != StateFamily::NumberBell {
        return Err(Error::UnsupportedFamily {
            family: family.name(),
        });
    }
    let q = p.q();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let vac_norm = p.one_minus_q_squared().sqrt();
    let one_norm = p.one_minus_q_squared();
    let mut amplitudes = BTreeMap::new();
    for n in 0..=n_max {
        let qn = q.powi(n as i32);
        let a0 = vac_norm * qn * inv_sqrt2;
        let a1 = one_norm * qn * ((n + 1) as f64).sqrt() * inv_sqrt2;
        if a0 != 0.0 {
            amplitudes.insert(TripartiteIndex::new(AliceLabel::Zero, n, n), a0);
        }
        if a1 != 0.0 {
            amplitudes.insert(TripartiteIndex::new(AliceLabel::One, n + 1, n), a1);
        }
    }
    Ok(StateVector {
        family,
        q,
        n_max,
        amplitudes,
    })
}

/// Numerically trace the L sector out of a tripartite pure state: amplitudes
/// with matching L occupation combine into density-matrix entries over
/// (Alice, Bob-R) labels. This is the brute-force oracle against
/// [`number_bell_rho`]; it never consults the closed-form block entries.
pub fn reduce_over_l(sv: &StateVector) -> BlockDensityMatrix {
    let mut by_l: BTreeMap<usize, Vec<(BasisVector, f64)>> = BTreeMap::new();
    for (index, &amp) in &sv.amplitudes {
        let vector = BasisVector::new(index.alice, BobLabel::number(index.r_occ));
        by_l.entry(index.l_occ).or_default().push((vector, amp));
    }

    let mut entries: BTreeMap<(BasisVector, BasisVector), f64> = BTreeMap::new();
    for group in by_l.values() {
        for (i, (vi, ai)) in group.iter().enumerate() {
            for (vj, aj) in group.iter().skip(i) {
                let key = canonical_pair(*vi, *vj);
                *entries.entry(key).or_insert(0.0) += ai * aj;
            }
        }
    }

    BlockDensityMatrix {
        family: sv.family,
        q: sv.q,
        n_max: sv.n_max,
        operator: BlockOperator::from_entries(&entries),
        trace_deficit: number_trace_deficit(sv.q, sv.n_max),
    }
}
