//! Brute-force searches: integer `(r, s)` seeds and equal sums of two
//! `k`-th powers.

use std::collections::HashMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use powtrip_core::triple::{construct_regular, RegularTriple, TaxicabHit};
use powtrip_core::{KthRoot, Rational};
use rayon::prelude::*;
use serde_json::json;

use crate::checkpoint::Checkpoint;

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub checkpoint: Option<PathBuf>,
}

impl SearchOptions {
    /// Runs `job` on a dedicated pool when a thread count is given.
    fn install<T: Send>(&self, job: impl FnOnce() -> Result<T> + Send) -> Result<T> {
        match self.threads {
            None => job(),
            Some(0) => bail!("thread count must be positive"),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().context("building thread pool")?;
                pool.install(job)
            }
        }
    }
}

/// An integer seed `1 < r < s` with `(s^2 r^2 - 1)/(s^2 - r^2) = t^2` for a
/// rational `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairHit {
    pub r: u64,
    pub s: u64,
    pub t: Rational,
    /// The triple rebuilt through [`construct_regular`].
    pub triple: RegularTriple<Rational>,
}

impl PairHit {
    /// `t` is an integer, hence so are `a, b, c`.
    pub fn integral_t(&self) -> bool {
        self.t.is_integer()
    }

    fn rebuild(r: u64, s: u64) -> Result<Option<PairHit>> {
        let (rq, sq) = (Rational::from(r), Rational::from(s));
        let Some(triple) = construct_regular(&rq, &sq, 2)? else { return Ok(None) };
        Ok(Some(PairHit { r, s, t: triple.t.clone(), triple }))
    }
}

const fn square_residues<const M: usize>() -> [bool; M] {
    let mut table = [false; M];
    let mut i = 0;
    while i < M {
        table[(i * i) % M] = true;
        i += 1;
    }
    table
}

static QR64: [bool; 64] = square_residues::<64>();
static QR63: [bool; 63] = square_residues::<63>();
static QR65: [bool; 65] = square_residues::<65>();
static QR11: [bool; 11] = square_residues::<11>();

fn is_square_u128(n: u128) -> bool {
    QR64[(n % 64) as usize]
        && QR63[(n % 63) as usize]
        && QR65[(n % 65) as usize]
        && QR11[(n % 11) as usize]
        && {
            let root = n.isqrt();
            root * root == n
        }
}

/// Largest bound for which `(s^2 r^2 - 1)(s^2 - r^2) < bound^6` fits in
/// `u128`.
const FAST_PATH_BOUND: u64 = 2_000_000;

/// `t^2 = N/D` is a rational square iff `N D` is an integer square.
fn row_hits(r: u64, bound: u64) -> Vec<u64> {
    if bound <= FAST_PATH_BOUND {
        let r2 = (r as u128) * (r as u128);
        (r + 1..bound)
            .filter(|&s| {
                let s2 = (s as u128) * (s as u128);
                is_square_u128((s2 * r2 - 1) * (s2 - r2))
            })
            .collect()
    } else {
        let r2 = Rational::from(r).pow(2);
        (r + 1..bound)
            .filter(|&s| {
                let s2 = Rational::from(s).pow(2);
                ((s2.clone() * &r2 - Rational::one()) * (s2 - r2.clone())).kth_root(2).is_some()
            })
            .collect()
    }
}

/// Rows handled between checkpoint writes.
const PAIR_ROWS_PER_BLOCK: u64 = 64;

pub fn search_integer_pairs(bound: u64) -> Result<Vec<PairHit>> {
    search_integer_pairs_with(bound, &SearchOptions::default())
}

/// Every `1 < r < s < bound` with a rational `t`, ordered by `(r, s)`.
/// Rows of `r` are split across threads; the checkpoint records the next
/// unfinished block of rows and the seeds found so far.
pub fn search_integer_pairs_with(bound: u64, opts: &SearchOptions) -> Result<Vec<PairHit>> {
    if bound < 2 {
        bail!("bound must be at least 2, got {bound}");
    }
    let checkpoint =
        opts.checkpoint.as_ref().map(|p| Checkpoint::new(p, json!({ "search": "search-rs", "bound": bound })));
    let (mut next_r, mut seeds) = (2u64, Vec::<(u64, u64)>::new());
    if let Some(state) = checkpoint.as_ref().map(Checkpoint::load).transpose()?.flatten() {
        next_r = state["next_r"].as_u64().context("checkpoint lacks next_r")?;
        seeds = serde_json::from_value(state["seeds"].clone()).context("checkpoint seeds")?;
    }
    opts.install(|| {
        while next_r < bound {
            let end = (next_r + PAIR_ROWS_PER_BLOCK).min(bound);
            let block: Vec<Vec<(u64, u64)>> = (next_r..end)
                .into_par_iter()
                .map(|r| row_hits(r, bound).into_iter().map(|s| (r, s)).collect())
                .collect();
            seeds.extend(block.into_iter().flatten());
            next_r = end;
            if let Some(cp) = &checkpoint {
                cp.save(json!({ "next_r": next_r, "seeds": seeds }))?;
            }
        }
        Ok(())
    })?;
    seeds.sort_unstable();
    seeds.dedup();
    let mut hits = Vec::with_capacity(seeds.len());
    for (r, s) in seeds {
        match PairHit::rebuild(r, s)? {
            Some(hit) => hits.push(hit),
            None => bail!("seed ({r}, {s}) passed the integer test but has no rational t"),
        }
    }
    Ok(hits)
}

/// Sum shards of the pair space; each shard is an independent hash join.
const TAXICAB_SHARDS: u64 = 64;

pub fn taxicab_search(bound: u64, k: u32) -> Result<Vec<TaxicabHit>> {
    taxicab_search_with(bound, k, &SearchOptions::default())
}

/// All `X^k + Y^k = Z^k + W^k` with `1 <= X, Y, Z, W <= bound` and
/// `{X, Y} != {Z, W}`, canonicalized and ordered by sum, then entries.
pub fn taxicab_search_with(bound: u64, k: u32, opts: &SearchOptions) -> Result<Vec<TaxicabHit>> {
    if bound < 2 {
        bail!("bound must be at least 2, got {bound}");
    }
    if !(3..=4).contains(&k) {
        bail!("k must be 3 or 4, got {k}");
    }
    if u32::try_from(bound).is_err() {
        bail!("bound {bound} is too large for the in-memory join");
    }
    let checkpoint = opts
        .checkpoint
        .as_ref()
        .map(|p| Checkpoint::new(p, json!({ "search": "taxicab", "bound": bound, "k": k, "shards": TAXICAB_SHARDS })));
    let mut done = vec![false; TAXICAB_SHARDS as usize];
    let mut found: Vec<[u64; 4]> = Vec::new();
    if let Some(state) = checkpoint.as_ref().map(Checkpoint::load).transpose()?.flatten() {
        let finished: Vec<u64> = serde_json::from_value(state["done"].clone()).context("checkpoint shards")?;
        for shard in finished {
            *done.get_mut(shard as usize).context("checkpoint shard out of range")? = true;
        }
        found = serde_json::from_value(state["hits"].clone()).context("checkpoint hits")?;
    }
    let powers: Vec<u128> = (0..=bound).map(|x| (x as u128).pow(k)).collect();
    let pending: Vec<u64> = (0..TAXICAB_SHARDS).filter(|&i| !done[i as usize]).collect();
    opts.install(|| {
        // Shards run in parallel in waves so progress can be saved between waves.
        for chunk in pending.chunks(rayon::current_num_threads().max(1)) {
            let results: Vec<(u64, Vec<[u64; 4]>)> =
                chunk.par_iter().map(|&shard| (shard, join_shard(&powers, shard))).collect();
            for (shard, hits) in results {
                found.extend(hits);
                done[shard as usize] = true;
            }
            if let Some(cp) = &checkpoint {
                let finished: Vec<u64> = (0..TAXICAB_SHARDS).filter(|&i| done[i as usize]).collect();
                cp.save(json!({ "done": finished, "hits": found }))?;
            }
        }
        Ok(())
    })?;
    let mut hits = found
        .into_iter()
        .map(|[x, y, z, w]| TaxicabHit::new((x, y), (z, w), k))
        .collect::<Result<Vec<_>, _>>()?;
    hits.sort_by(|a, b| a.sum().cmp(&b.sum()).then_with(|| a.entries().cmp(&b.entries())));
    hits.dedup();
    Ok(hits)
}

fn join_shard(powers: &[u128], shard: u64) -> Vec<[u64; 4]> {
    let bound = powers.len() as u64 - 1;
    let mut by_sum: HashMap<u128, Vec<(u64, u64)>> = HashMap::new();
    for x in 1..=bound {
        for y in x..=bound {
            let sum = powers[x as usize] + powers[y as usize];
            if (sum % TAXICAB_SHARDS as u128) as u64 == shard {
                by_sum.entry(sum).or_default().push((x, y));
            }
        }
    }
    let mut out = Vec::new();
    for reps in by_sum.values().filter(|v| v.len() > 1) {
        for (i, &(x, y)) in reps.iter().enumerate() {
            for &(z, w) in &reps[i + 1..] {
                out.push([x, y, z, w]);
            }
        }
    }
    out
}
