use std::collections::BTreeMap;

use lozenge_par::Mode;
use num_bigint::BigInt;

use crate::enumerate::Enumerator;
use crate::region::{build_dented_region, build_hexagon_region};
use crate::OracleError;

/// Tilings of one hexagon tallied by which axis slots they occupy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisProfile {
    pub n: usize,
    pub m: usize,
    pub total: u64,
    /// `per_slot[l]`: tilings containing the axis lozenge at slot `l`.
    pub per_slot: Vec<u64>,
    /// Occupied-slot bitmask → number of tilings with exactly that set.
    pub by_set: BTreeMap<u64, u64>,
}

impl AxisProfile {
    pub fn slots(&self) -> usize {
        self.n + self.m
    }

    /// Tilings whose occupied slots all lie in `allowed`.
    pub fn subset_count(&self, allowed: &[usize]) -> u64 {
        let mask = allowed.iter().filter(|&&l| l < 64).fold(0u64, |acc, &l| acc | (1 << l));
        self.by_set.iter().filter(|(s, _)| *s & !mask == 0).map(|(_, c)| c).sum()
    }
}

pub fn axis_profile(n: usize, m: usize, budget: u64) -> Result<AxisProfile, OracleError> {
    let region = build_hexagon_region(n, m);
    let slots = region.axis_slots().to_vec();
    assert!(slots.len() <= 64, "too many axis slots for a bitmask");
    let mut e = Enumerator::new(&region, budget);
    let mut per_slot = vec![0u64; slots.len()];
    let mut by_set = BTreeMap::new();
    let mut total = 0;
    while e.advance()? {
        total += 1;
        let mut set = 0u64;
        for (l, &(d, u)) in slots.iter().enumerate() {
            if e.partner(d) == u {
                per_slot[l] += 1;
                set |= 1 << l;
            }
        }
        *by_set.entry(set).or_insert(0) += 1;
    }
    Ok(AxisProfile { n, m, total, per_slot, by_set })
}

/// Profiles for several hexagons; each region is searched sequentially,
/// distinct regions run concurrently in `Mode::Parallel`.
pub fn axis_profiles(shapes: &[(usize, usize)], budget: u64, mode: Mode) -> Result<Vec<AxisProfile>, OracleError> {
    lozenge_par::try_map(mode, shapes, |&(n, m)| axis_profile(n, m, budget))
}

pub fn count_with_axis_rhombus(n: usize, m: usize, l: usize, budget: u64) -> Result<BigInt, OracleError> {
    if l >= n + m {
        return Err(OracleError::SlotOutOfRange { n, m, l });
    }
    Ok(BigInt::from(axis_profile(n, m, budget)?.per_slot[l]))
}

pub fn count_with_axis_subset(n: usize, m: usize, allowed: &[usize], budget: u64) -> Result<BigInt, OracleError> {
    Ok(BigInt::from(axis_profile(n, m, budget)?.subset_count(allowed)))
}

pub fn count_dented_bruteforce(n: usize, m: usize, dents: &[usize], budget: u64) -> Result<BigInt, OracleError> {
    let region = build_dented_region(n, m, dents)?;
    Ok(BigInt::from(crate::enumerate::count_tilings(&region, budget)?))
}
