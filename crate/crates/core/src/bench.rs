//! Reproducible random words and the benchmark rows printed by the CLI.
//!
//! The generator is fixed so that rows can be reproduced by other
//! implementations:
//!
//! * seeding: `state = splitmix64(seed)`, where splitmix64 adds
//!   `0x9E3779B97F4A7C15` and applies the usual two xor-shift-multiply rounds
//!   (`0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`) and a final `x ^ (x >> 31)`;
//! * step: `state = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//!   output the high 32 bits of the new state;
//! * a letter is drawn as `r = (out * 2(n-1)) >> 32`; generator `r / 2 + 1`,
//!   positive when `r` is even.
//!
//! Row `k` of a run with seed `S` uses seed `S + k` (wrapping).

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::solver::process_word;
use crate::word::{BraidWord, Letter};

pub const CSV_HEADER: &str = "n,word_length,seed,final_list_length,max_list_length,links_visited,time_ns";

pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// 64-bit linear congruential generator with splitmix seeding.
#[derive(Debug, Clone)]
pub struct WordRng {
    state: u64,
}

impl WordRng {
    pub fn new(seed: u64) -> WordRng {
        WordRng {
            state: splitmix64(seed),
        }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (self.state >> 32) as u32
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u32) -> u32 {
        ((u64::from(self.next_u32()) * u64::from(bound)) >> 32) as u32
    }

    pub fn letter(&mut self, strand_count: usize) -> Letter {
        let r = self.below(2 * (strand_count as u32 - 1)) as usize;
        if r.is_multiple_of(2) {
            Letter::positive(r / 2 + 1)
        } else {
            Letter::negative(r / 2 + 1)
        }
    }

    pub fn word(&mut self, strand_count: usize, length: usize) -> Result<BraidWord> {
        if strand_count < 2 && length > 0 {
            return Err(Error::StrandCount(strand_count));
        }
        let letters = (0..length).map(|_| self.letter(strand_count)).collect();
        BraidWord::new(strand_count, letters)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub strand_count: usize,
    pub word_length: usize,
    pub seed: u64,
    pub final_list_length: usize,
    pub max_list_length: usize,
    pub links_visited: usize,
    pub time_ns: u128,
}

impl BenchRow {
    /// One CSV line, without newline. `with_time = false` writes 0 for the timing.
    pub fn to_csv(&self, with_time: bool) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.strand_count,
            self.word_length,
            self.seed,
            self.final_list_length,
            self.max_list_length,
            self.links_visited,
            if with_time { self.time_ns } else { 0 }
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub strand_count: usize,
    pub length: usize,
    pub count: usize,
    pub seed: u64,
    pub workers: usize,
}

pub fn bench_row(strand_count: usize, length: usize, seed: u64) -> Result<BenchRow> {
    let w = WordRng::new(seed).word(strand_count, length)?;
    let started = Instant::now();
    let processed = process_word(&w)?;
    let time_ns = started.elapsed().as_nanos();
    Ok(BenchRow {
        strand_count,
        word_length: length,
        seed,
        final_list_length: processed.gbase.len(),
        max_list_length: processed.max_list_length(),
        links_visited: processed.links_visited(),
        time_ns,
    })
}

/// Rows in seed order, whatever the worker count.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let seeds: Vec<u64> = (0..config.count as u64)
        .map(|k| config.seed.wrapping_add(k))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
    pool.install(|| {
        seeds
            .par_iter()
            .map(|&seed| bench_row(config.strand_count, config.length, seed))
            .collect()
    })
}
