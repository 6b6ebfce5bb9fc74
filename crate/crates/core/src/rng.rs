//! Minimal deterministic PRNG for reproducible fixtures.
//!
//! The space generators and the test suites need pseudo-random draws whose
//! byte-exact reproducibility does not depend on an external crate's stream
//! guarantees, so we carry a tiny splitmix64 here.

/// splitmix64; passes through the full 2^64 state space, never gets stuck.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound`. `bound` must be nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // modulo bias is irrelevant at the bounds used here (<< 2^32)
        self.next_u64() % bound
    }

    /// Uniform draw from `lo..=hi`.
    pub fn next_range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.next_below(span) as i64
    }
}
