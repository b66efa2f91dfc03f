//! Generating small commutative semigroups with zero, and checking the
//! structural laws of their zero-divisor graphs.
//!
//! Exhaustive mode walks every commutative multiplication on `order`
//! elements with element 0 absorbing, keeps the associative ones, and
//! deduplicates up to relabeling of the nonzero elements by a canonical
//! minimum-serialization form.  Sampling mode fills the free entries in a
//! seeded random order with backtracking on associativity violations; it
//! emits every table found (duplicates possible — records carry a
//! canonical hash so consumers can deduplicate).
//!
//! [`structure_suite`] evaluates, on the zero-divisor graph of a
//! semigroup, the four structural laws such graphs always satisfy:
//! connectivity, diameter at most 3, the core decomposition (every core
//! edge on a triangle or quadrilateral and every non-core vertex an end —
//! vacuous when the graph has no cycle), and the absorption property for
//! non-adjacent pairs.

use crate::semigroup::CayleySemigroup;
use crate::zdgraph::{zero_divisor_graph, Diameter};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

/// Largest order accepted in exhaustive mode.
pub const MAX_EXHAUSTIVE_ORDER: usize = 4;

/// Largest order for which the canonical hash minimizes over all
/// relabelings of the nonzero elements; above this the raw table is
/// hashed and the hash is label-sensitive.
pub const MAX_CANONICAL_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    RandomSample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Total element count, the absorbing zero included.
    pub order: usize,
    pub mode: EnumerationMode,
    /// Keep only tables where every element is idempotent.
    pub require_idempotent: bool,
    /// Keep only tables where some element acts as identity.
    pub require_unity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("a semigroup with zero needs at least one element")]
    ZeroOrder,
    #[error("exhaustive enumeration is capped at order {max}, got {order}")]
    ExhaustiveOrderCap { order: usize, max: usize },
}

/// Runs the configured enumeration.  Exhaustive mode yields one
/// representative per isomorphism class, in a deterministic order;
/// sampling mode yields up to `count` tables, deterministically for a
/// fixed seed (fewer only if the attempt budget runs out).
pub fn enumerate_semigroups(
    config: &EnumerationConfig,
) -> Result<Vec<CayleySemigroup>, EnumerationError> {
    if config.order == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    match config.mode {
        EnumerationMode::Exhaustive => {
            if config.order > MAX_EXHAUSTIVE_ORDER {
                return Err(EnumerationError::ExhaustiveOrderCap {
                    order: config.order,
                    max: MAX_EXHAUSTIVE_ORDER,
                });
            }
            Ok(enumerate_exhaustive(config))
        }
        EnumerationMode::RandomSample { count, seed } => Ok(sample(config, count, seed)),
    }
}

fn keeps(config: &EnumerationConfig, s: &CayleySemigroup) -> bool {
    (!config.require_idempotent || s.all_idempotent())
        && (!config.require_unity || s.identity_index().is_some())
}

fn enumerate_exhaustive(config: &EnumerationConfig) -> Vec<CayleySemigroup> {
    let order = config.order;
    let cells: Vec<(usize, usize)> = (1..order)
        .flat_map(|i| (i..order).map(move |j| (i, j)))
        .collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let mut values = vec![0usize; cells.len()];
    loop {
        let mut table = vec![vec![0usize; order]; order];
        for (&(i, j), &v) in cells.iter().zip(&values) {
            table[i][j] = v;
            table[j][i] = v;
        }
        if is_associative(&table) {
            let s = CayleySemigroup::validate(&table, 0, None)
                .expect("commutative, absorbing and associative by construction");
            if keeps(config, &s) && seen.insert(canonical_form(&table)) {
                out.push(s);
            }
        }
        // Advance the odometer over all value assignments.
        let mut pos = 0;
        loop {
            if pos == values.len() {
                return out;
            }
            values[pos] += 1;
            if values[pos] < order {
                break;
            }
            values[pos] = 0;
            pos += 1;
        }
    }
}

fn is_associative(table: &[Vec<usize>]) -> bool {
    let order = table.len();
    // Triples with a zero hold trivially: zero is absorbing by layout.
    for x in 1..order {
        for y in x..order {
            for z in y..order {
                // Commutativity leaves three distinct bracketings to compare.
                let xy_z = table[table[x][y]][z];
                if xy_z != table[x][table[y][z]] || xy_z != table[table[x][z]][y] {
                    return false;
                }
            }
        }
    }
    true
}

/// The table serialization minimized over relabelings of the nonzero
/// elements (identity only, above [`MAX_CANONICAL_ORDER`]).  Entries are
/// emitted as little-endian `u16`.
fn canonical_form(table: &[Vec<usize>]) -> Vec<u8> {
    let order = table.len();
    let serialize = |perm: &[usize]| -> Vec<u8> {
        let mut inverse = vec![0usize; order];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let mut bytes = Vec::with_capacity(order * order * 2);
        for i in 0..order {
            for j in 0..order {
                let entry = perm[table[inverse[i]][inverse[j]]] as u16;
                bytes.extend_from_slice(&entry.to_le_bytes());
            }
        }
        bytes
    };
    let identity: Vec<usize> = (0..order).collect();
    if order > MAX_CANONICAL_ORDER {
        return serialize(&identity);
    }
    let mut best = serialize(&identity);
    let mut perm = identity;
    // Heap's algorithm over positions 1..order (the zero stays fixed).
    let m = order - 1;
    let mut counters = vec![0usize; m];
    let mut i = 0;
    while i < m {
        if counters[i] < i {
            let swap_with = if i % 2 == 0 { 1 } else { counters[i] + 1 };
            perm.swap(swap_with, i + 1);
            let candidate = serialize(&perm);
            if candidate < best {
                best = candidate;
            }
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

/// Hex digest of the canonical form (FNV-1a, 64-bit).  Equal for
/// isomorphic tables up to [`MAX_CANONICAL_ORDER`]; above that it digests
/// the table as given.
pub fn canonical_hash(s: &CayleySemigroup) -> String {
    let bytes = canonical_form(&s.dense_table());
    let mut h: u64 = 0xcbf29ce484222325;
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

fn sample(config: &EnumerationConfig, count: usize, seed: u64) -> Vec<CayleySemigroup> {
    let order = config.order;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let budget = count.saturating_mul(50).max(1000);
    for _ in 0..budget {
        if out.len() == count {
            break;
        }
        if let Some(table) = random_fill(order, config, &mut rng) {
            let s = CayleySemigroup::validate(&table, 0, None)
                .expect("the backtracking fill maintains the axioms");
            debug_assert!(keeps(config, &s));
            out.push(s);
        }
    }
    out
}

fn random_fill(
    order: usize,
    config: &EnumerationConfig,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<usize>>> {
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; order]; order];
    for x in 0..order {
        table[0][x] = Some(0);
        table[x][0] = Some(0);
    }
    if config.require_idempotent {
        for x in 0..order {
            table[x][x] = Some(x);
        }
    }
    if config.require_unity {
        // Pin the unity at the highest index; sampling emits labeled
        // tables, not isomorphism classes, so the position is free to fix.
        let e = order - 1;
        for x in 0..order {
            table[e][x] = Some(if e == 0 { 0 } else { x });
            table[x][e] = table[e][x];
        }
    }
    let mut cells: Vec<(usize, usize)> = (1..order)
        .flat_map(|i| (i..order).map(move |j| (i, j)))
        .filter(|&(i, j)| table[i][j].is_none())
        .collect();
    cells.shuffle(rng);
    if fill_from(&mut table, &cells, 0, order, rng) {
        Some(
            table
                .into_iter()
                .map(|row| row.into_iter().map(Option::unwrap).collect())
                .collect(),
        )
    } else {
        None
    }
}

fn fill_from(
    table: &mut Vec<Vec<Option<usize>>>,
    cells: &[(usize, usize)],
    pos: usize,
    order: usize,
    rng: &mut ChaCha8Rng,
) -> bool {
    if pos == cells.len() {
        return true;
    }
    let (i, j) = cells[pos];
    let mut values: Vec<usize> = (0..order).collect();
    values.shuffle(rng);
    for v in values {
        table[i][j] = Some(v);
        table[j][i] = Some(v);
        if no_associativity_conflict(table, order) && fill_from(table, cells, pos + 1, order, rng) {
            return true;
        }
    }
    table[i][j] = None;
    table[j][i] = None;
    false
}

/// True while no fully determined triple violates associativity.
fn no_associativity_conflict(table: &[Vec<Option<usize>>], order: usize) -> bool {
    let get = |x: usize, y: usize| table[x][y];
    for x in 1..order {
        for y in x..order {
            for z in y..order {
                for (p, q, r) in [(x, y, z), (x, z, y), (y, x, z)] {
                    // (pq)r versus p(qr), when every factor is known.
                    let (Some(pq), Some(qr)) = (get(p, q), get(q, r)) else {
                        continue;
                    };
                    let (Some(left), Some(right)) = (get(pq, r), get(p, qr)) else {
                        continue;
                    };
                    if left != right {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The four structural laws of a zero-divisor graph, evaluated on one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureSuite {
    pub connected: bool,
    pub diameter_at_most_3: bool,
    /// When the graph has a cycle: every vertex outside the core has
    /// degree 1 and every core edge lies on a 3- or 4-cycle within the
    /// core.  Vacuously true for acyclic graphs (whose core is empty).
    pub core_ok: bool,
    /// Every non-adjacent pair `x, y` admits a `z` with
    /// `N(x) ∪ N(y) ⊆ N̄(z)`.
    pub absorption: bool,
}

impl StructureSuite {
    pub fn all_hold(&self) -> bool {
        self.connected && self.diameter_at_most_3 && self.core_ok && self.absorption
    }
}

/// Evaluates the four laws on the zero-divisor graph of `s`.
pub fn structure_suite(s: &CayleySemigroup) -> StructureSuite {
    let zd = zero_divisor_graph(s);
    let g = &zd.graph;
    let connected = g.is_connected();
    let diameter_at_most_3 = match g.diameter() {
        Diameter::Finite(d) => d <= 3,
        Diameter::Disconnected => false,
    };
    let core = g.core();
    let core_ok = if core.is_empty() {
        true
    } else {
        let pendants_ok = (0..g.n_vertices()).all(|v| core.contains(v) || g.degree(v) == 1);
        pendants_ok && g.edges_on_short_cycles(&core).is_ok()
    };
    let absorption = g.check_absorption_property().is_ok();
    StructureSuite {
        connected,
        diameter_at_most_3,
        core_ok,
        absorption,
    }
}

/// One JSON-lines record summarizing a semigroup and its graph checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupRecord {
    pub order: usize,
    pub canonical_hash: String,
    pub zero_divisors: usize,
    pub vertices: usize,
    pub edges: usize,
    pub suite: StructureSuite,
    pub table: Vec<Vec<usize>>,
}

pub fn semigroup_record(s: &CayleySemigroup) -> SemigroupRecord {
    let zd = zero_divisor_graph(s);
    SemigroupRecord {
        order: s.order(),
        canonical_hash: canonical_hash(s),
        zero_divisors: s.zero_divisor_set().count(),
        vertices: zd.graph.n_vertices(),
        edges: zd.graph.edge_count(),
        suite: structure_suite(s),
        table: s.dense_table(),
    }
}
