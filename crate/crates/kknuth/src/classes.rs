//! Exhaustive enumeration of increasing tableaux on a bounded alphabet and
//! their partition into insertion-equivalence classes.
//!
//! Two straight tableaux are in the same class exactly when their row words
//! are connected by the local moves of [`crate::equivalence`]. The partition
//! is computed by a closure process: seed by inserting both halves of every
//! primitive word pair into every tableau, then repeatedly insert every
//! letter into both members of each newly merged pair until no merge occurs.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::core::{addable_corners, partition_contains, row_word, Cell, Filling, Tableau};
use crate::equivalence::{equivalent_through, primitive_pairs};
use crate::error::{Error, Result};
use crate::insertion::insert_word_into_rows;

type Rows = Vec<Vec<u32>>;

/// Every increasing tableau whose labels lie in `1..=n`, indexed.
#[derive(Clone, Debug)]
pub struct TableauUniverse {
    n: u32,
    members: Vec<Rows>,
    index: HashMap<Rows, usize>,
}

impl TableauUniverse {
    /// The alphabet bound.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The number of tableaux, including the empty one.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: the empty tableau is a member for every `n`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The tableau with the given id.
    ///
    /// # Panics
    ///
    /// Panics when `id` is out of range.
    pub fn get(&self, id: usize) -> Tableau {
        Tableau::from_rows(&self.members[id]).expect("members are increasing tableaux")
    }

    pub(crate) fn rows(&self, id: usize) -> &Rows {
        &self.members[id]
    }

    /// The id of `t`, or `None` when `t` is not straight or uses labels
    /// above the bound.
    pub fn id_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&t.straight_rows()?).copied()
    }

    /// All members in id order.
    pub fn tableaux(&self) -> impl Iterator<Item = Tableau> + '_ {
        (0..self.len()).map(|id| self.get(id))
    }
}

/// Builds the universe of all increasing tableaux with labels in `1..=n`.
///
/// Tableaux are grown label by label: each label is placed on an arbitrary
/// subset of the addable corners of the shape built so far. Addable corners
/// occupy distinct rows and columns, so every subset keeps the filling
/// increasing, and distinct subset sequences give distinct tableaux.
pub fn enumerate_universe(n: u32) -> TableauUniverse {
    let mut members: Vec<Rows> = vec![Vec::new()];
    for v in 1..=n {
        let mut next = Vec::new();
        for rows in &members {
            let lengths: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
            let corners = addable_corners(&lengths);
            for bits in 0..(1usize << corners.len()) {
                let mut grown = rows.clone();
                for (i, corner) in corners.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        let r = corner.row as usize - 1;
                        if r == grown.len() {
                            grown.push(vec![v]);
                        } else {
                            grown[r].push(v);
                        }
                    }
                }
                next.push(grown);
            }
        }
        members = next;
    }
    members.sort();
    let index: HashMap<Rows, usize> = members
        .iter()
        .enumerate()
        .map(|(id, rows)| (rows.clone(), id))
        .collect();
    assert_eq!(index.len(), members.len(), "universe members are distinct");
    TableauUniverse { n, members, index }
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// The set of equivalence classes of a [`TableauUniverse`].
#[derive(Clone, Debug)]
pub struct ClassPartition {
    universe: TableauUniverse,
    /// `roots[id]` is the smallest member id of `id`'s class.
    roots: Vec<usize>,
    /// `class_sizes[root]` is the class cardinality; zero off-root.
    class_sizes: Vec<usize>,
    class_count: usize,
    queue_log: u64,
}

/// The counts a partition contributes to the census table: tableaux whose
/// support is exactly `1..=n`, their classes, and the singleton classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub initial_tableaux: u64,
    pub initial_classes: u64,
    pub urts: u64,
}

/// A class whose member shapes skip over a shape between two of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCounterexample {
    /// The smallest member of the offending class.
    pub member: Tableau,
    /// A shape between two member shapes that no member has.
    pub missing_shape: Vec<u32>,
}

fn inserted_id(universe: &TableauUniverse, base: usize, letters: &[u32]) -> usize {
    let mut rows = universe.rows(base).clone();
    insert_word_into_rows(&mut rows, letters);
    *universe
        .index
        .get(&rows)
        .expect("insertion of bounded letters stays inside the universe")
}

/// Computes the full class partition of the universe on `1..=n`.
///
/// Seeding inserts both words of every primitive pair into every tableau;
/// the closure loop then inserts every letter into both members of each
/// freshly merged pair, in first-in-first-out order, until the queue runs
/// dry. Memory and time grow steeply: `n = 6` takes seconds and `n = 7`
/// minutes.
pub fn compute_partition(n: u32) -> ClassPartition {
    let universe = enumerate_universe(n);
    let mut dsu = Dsu::new(universe.len());
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let pairs = primitive_pairs(n);
    for id in 0..universe.len() {
        for pair in &pairs {
            let first = inserted_id(&universe, id, &pair.a);
            let second = inserted_id(&universe, id, &pair.b);
            if dsu.union(first, second) {
                queue.push_back((first, second));
            }
        }
    }
    let mut queue_log = 0;
    while let Some((left, right)) = queue.pop_front() {
        queue_log += 1;
        for y in 1..=n {
            let first = inserted_id(&universe, left, &[y]);
            let second = inserted_id(&universe, right, &[y]);
            if dsu.union(first, second) {
                queue.push_back((first, second));
            }
        }
    }
    finish_partition(universe, &mut dsu, queue_log)
}

fn finish_partition(universe: TableauUniverse, dsu: &mut Dsu, queue_log: u64) -> ClassPartition {
    let len = universe.len();
    let mut canonical: HashMap<usize, usize> = HashMap::new();
    let mut roots = Vec::with_capacity(len);
    for id in 0..len {
        let root = dsu.find(id);
        // Ids ascend, so the first id seen for each root is the smallest.
        roots.push(*canonical.entry(root).or_insert(id));
    }
    let mut class_sizes = vec![0; len];
    for &root in &roots {
        class_sizes[root] += 1;
    }
    let class_count = canonical.len();
    ClassPartition {
        universe,
        roots,
        class_sizes,
        class_count,
        queue_log,
    }
}

impl ClassPartition {
    /// The alphabet bound.
    pub fn n(&self) -> u32 {
        self.universe.n()
    }

    /// The underlying universe.
    pub fn universe(&self) -> &TableauUniverse {
        &self.universe
    }

    /// The number of classes, over all supports.
    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// How many merged pairs the closure loop processed.
    pub fn queue_log(&self) -> u64 {
        self.queue_log
    }

    /// The smallest member id of the class containing member `id`.
    ///
    /// # Panics
    ///
    /// Panics when `id` is out of range.
    pub fn root_of_id(&self, id: usize) -> usize {
        self.roots[id]
    }

    fn id_of(&self, t: &Tableau) -> Result<usize> {
        self.universe
            .id_of(t)
            .ok_or(Error::NotInUniverse { n: self.n() })
    }

    /// Whether two tableaux are in the same class.
    pub fn joined(&self, first: &Tableau, second: &Tableau) -> Result<bool> {
        Ok(self.roots[self.id_of(first)?] == self.roots[self.id_of(second)?])
    }

    /// All classes, each a sorted list of member ids, ordered by root.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for (id, &root) in self.roots.iter().enumerate() {
            by_root.entry(root).or_default().push(id);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        classes.sort();
        classes
    }

    /// Every tableau in the class of `t`.
    pub fn class_of(&self, t: &Tableau) -> Result<BTreeSet<Tableau>> {
        let root = self.roots[self.id_of(t)?];
        Ok(self
            .roots
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r == root)
            .map(|(id, _)| self.universe.get(id))
            .collect())
    }

    /// The cardinality of the class of `t`.
    pub fn class_size_of(&self, t: &Tableau) -> Result<usize> {
        Ok(self.class_sizes[self.roots[self.id_of(t)?]])
    }

    fn initial_ids(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.n();
        (0..self.universe.len()).filter(move |&id| {
            let mut mask = 0u64;
            for row in self.universe.rows(id) {
                for &v in row {
                    mask |= 1 << v;
                }
            }
            mask == ((1u64 << n) - 1) << 1
        })
    }

    /// Counts of tableaux with support exactly `1..=n`, their classes, and
    /// the singleton classes among those.
    pub fn census(&self) -> Census {
        let mut initial_tableaux = 0;
        let mut initial_roots: BTreeSet<usize> = BTreeSet::new();
        for id in self.initial_ids() {
            initial_tableaux += 1;
            initial_roots.insert(self.roots[id]);
        }
        let urts = initial_roots
            .iter()
            .filter(|&&root| self.class_sizes[root] == 1)
            .count() as u64;
        Census {
            initial_tableaux,
            initial_classes: initial_roots.len() as u64,
            urts,
        }
    }

    /// Checks that within every class, whenever one member shape contains
    /// another, every shape between them is also a member shape. Returns the
    /// first gap found, if any.
    pub fn verify_interval_conjecture(&self) -> (bool, Option<IntervalCounterexample>) {
        for class in self.classes() {
            let shapes: BTreeSet<Vec<u32>> = class
                .iter()
                .map(|&id| {
                    self.universe
                        .rows(id)
                        .iter()
                        .map(|r| r.len() as u32)
                        .collect()
                })
                .collect();
            for lower in &shapes {
                for upper in &shapes {
                    if lower == upper || !partition_contains(upper, lower) {
                        continue;
                    }
                    if let Some(missing) = missing_shape_between(lower, upper, &shapes) {
                        return (
                            false,
                            Some(IntervalCounterexample {
                                member: self.universe.get(class[0]),
                                missing_shape: missing,
                            }),
                        );
                    }
                }
            }
        }
        (true, None)
    }

    /// Checks that within every class, every pair of members is connected
    /// through words no longer than the largest member of the class.
    pub fn verify_length_conjecture(&self) -> bool {
        for class in self.classes() {
            if class.len() < 2 {
                continue;
            }
            let words: Vec<_> = class
                .iter()
                .map(|&id| row_word(&self.universe.get(id)))
                .collect();
            let bound = words.iter().map(|w| w.len()).max().expect("nonempty class");
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    let connected = equivalent_through(&words[i], &words[j], bound)
                        .expect("the class bound covers every member word");
                    if !connected {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn missing_shape_between(
    lower: &[u32],
    upper: &[u32],
    shapes: &BTreeSet<Vec<u32>>,
) -> Option<Vec<u32>> {
    fn rec(
        lower: &[u32],
        upper: &[u32],
        prev: u32,
        acc: &mut Vec<u32>,
        shapes: &BTreeSet<Vec<u32>>,
    ) -> Option<Vec<u32>> {
        let i = acc.len();
        if i == upper.len() {
            let mut shape = acc.clone();
            while shape.last() == Some(&0) {
                shape.pop();
            }
            return (!shapes.contains(&shape)).then_some(shape);
        }
        let lo = lower.get(i).copied().unwrap_or(0);
        let hi = upper[i].min(prev);
        for len in lo..=hi {
            acc.push(len);
            if let Some(missing) = rec(lower, upper, len, acc, shapes) {
                return Some(missing);
            }
            acc.pop();
        }
        None
    }
    rec(lower, upper, u32::MAX, &mut Vec::new(), shapes)
}

/// A process-wide cache of computed partitions, keyed by alphabet bound.
///
/// Repeated class queries on the same small alphabet dominate the cost of
/// structural checks that fall back to the class engine, so the partitions
/// are shared once built.
pub(crate) fn cached_partition(n: u32) -> Arc<ClassPartition> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ClassPartition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("partition cache lock");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(compute_partition(n)))
        .clone()
}

/// Whether the class of `t` over the alphabet `1..=max_label(t)` is `{t}`,
/// by running the full class computation.
pub fn is_urt_exhaustive(t: &Tableau) -> Result<bool> {
    let partition = cached_partition(t.max_label());
    is_urt_exhaustive_with(&partition, t)
}

/// Like [`is_urt_exhaustive`], reusing an already computed partition.
pub fn is_urt_exhaustive_with(partition: &ClassPartition, t: &Tableau) -> Result<bool> {
    Ok(partition.class_size_of(t)? == 1)
}

/// A staircase of `len(patterns)` block rows built from 3x3 blocks, each
/// block row closed by a seven-box block carrying one of two label
/// patterns chosen by `patterns`.
///
/// Labels are assigned consecutively block by block, row-major inside full
/// blocks, so every label in a block exceeds all labels in earlier blocks.
/// The two closing patterns are insertion equivalent tableaux of shapes
/// `(3, 3, 1)` and `(3, 2, 2)`, so all `2^n` pattern choices are expected
/// to produce tableaux in a single class; exhaustive verification is
/// feasible only for a single block row.
pub fn triangle_block_tableau(patterns: &[bool]) -> Tableau {
    let n = patterns.len() as u32;
    let mut labels = BTreeMap::new();
    let mut used = 0u32;
    for i in 1..=n {
        let row0 = 3 * (i - 1);
        for j in 1..=(n + 1 - i) {
            let col0 = 3 * (j - 1);
            if j < n + 1 - i {
                for r in 0..3 {
                    for c in 0..3 {
                        labels.insert(Cell::new(row0 + r + 1, col0 + c + 1), used + 3 * r + c + 1);
                    }
                }
                used += 9;
            } else {
                let pattern: [(u32, u32, u32); 7] = if patterns[(i - 1) as usize] {
                    [(1, 1, 1), (1, 2, 2), (1, 3, 5), (2, 1, 3), (2, 2, 4), (3, 1, 6), (3, 2, 7)]
                } else {
                    [(1, 1, 1), (1, 2, 2), (1, 3, 5), (2, 1, 3), (2, 2, 4), (2, 3, 7), (3, 1, 6)]
                };
                for (r, c, v) in pattern {
                    labels.insert(Cell::new(row0 + r, col0 + c), used + v);
                }
                used += 7;
            }
        }
    }
    let filling = Filling::new(labels).expect("blocks occupy disjoint cells");
    Tableau::new(filling).expect("stacked blocks are increasing")
}

const SNAPSHOT_FORMAT: &str = "kknuth-partition";
const SNAPSHOT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Snapshot {
    format: String,
    version: u32,
    n: u32,
    members: Vec<Rows>,
    roots: Vec<usize>,
    queue_log: u64,
}

impl ClassPartition {
    /// Writes the partition to `path` as versioned JSON.
    pub fn save_snapshot(&self, path: &Path) -> Result<()> {
        let snapshot = Snapshot {
            format: SNAPSHOT_FORMAT.to_string(),
            version: SNAPSHOT_VERSION,
            n: self.n(),
            members: self.universe.members.clone(),
            roots: self.roots.clone(),
            queue_log: self.queue_log,
        };
        let file = BufWriter::new(File::create(path)?);
        serde_json::to_writer(file, &snapshot)?;
        Ok(())
    }

    /// Reads a partition saved by [`ClassPartition::save_snapshot`],
    /// validating it against a fresh enumeration of the universe.
    pub fn load_snapshot(path: &Path) -> Result<ClassPartition> {
        let file = BufReader::new(File::open(path)?);
        let snapshot: Snapshot = serde_json::from_reader(file)?;
        if snapshot.format != SNAPSHOT_FORMAT {
            return Err(Error::Snapshot(format!(
                "unknown format {:?}",
                snapshot.format
            )));
        }
        if snapshot.version != SNAPSHOT_VERSION {
            return Err(Error::Snapshot(format!(
                "unsupported version {}",
                snapshot.version
            )));
        }
        let universe = enumerate_universe(snapshot.n);
        if snapshot.members != universe.members {
            return Err(Error::Snapshot(format!(
                "members do not match the universe for n={}",
                snapshot.n
            )));
        }
        if snapshot.roots.len() != universe.len() {
            return Err(Error::Snapshot("root table has the wrong length".into()));
        }
        for (id, &root) in snapshot.roots.iter().enumerate() {
            if root > id || snapshot.roots[root] != root {
                return Err(Error::Snapshot("root table is not canonical".into()));
            }
        }
        let mut class_sizes = vec![0; universe.len()];
        for &root in &snapshot.roots {
            class_sizes[root] += 1;
        }
        let class_count = class_sizes.iter().filter(|&&s| s > 0).count();
        Ok(ClassPartition {
            universe,
            roots: snapshot.roots,
            class_sizes,
            class_count,
            queue_log: snapshot.queue_log,
        })
    }
}
