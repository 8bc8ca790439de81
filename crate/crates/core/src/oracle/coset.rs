//! Todd–Coxeter coset enumeration.
//!
//! Columns are laid out as `2g` for generator `g` and `2g + 1` for its
//! inverse. Felsch mode always defines the first undefined table entry and
//! processes every deduction immediately; HLT mode scans relators from each
//! coset in turn and fills rows. Coincidences are resolved with a union-find
//! forest. When the table nears `max_cosets` dead rows are dropped between
//! definitions, and HLT mode first runs a lookahead pass of deduction-only
//! scans.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::words::{FinitePresentation, Word};

const UNDEF: u32 = u32::MAX;

pub const DEFAULT_MAX_COSETS: usize = 200_000;

/// Relators longer than this send `Strategy::Auto` to HLT first; otherwise
/// it starts with Felsch. On overflow it retries with the other strategy.
pub const AUTO_HLT_THRESHOLD: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    Felsch,
    Hlt,
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOptions {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_cosets: DEFAULT_MAX_COSETS,
            strategy: Strategy::Auto,
        }
    }
}

impl EnumOptions {
    pub fn with_max(max_cosets: usize) -> Self {
        EnumOptions {
            max_cosets,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    pub strategy: Strategy,
    /// Cosets ever defined, live or dead.
    pub total_defined: usize,
    /// In-place compactions during enumeration.
    pub compactions: usize,
}

/// A closed coset table: every entry defined, every column a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    ncols: usize,
    data: Vec<u32>,
    stats: EnumStats,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.data.len().checked_div(self.ncols).unwrap_or(1)
    }

    pub fn num_generators(&self) -> usize {
        self.ncols / 2
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn stats(&self) -> EnumStats {
        self.stats
    }

    /// Image of `coset` under column `col`.
    pub fn entry(&self, coset: usize, col: usize) -> usize {
        self.data[coset * self.ncols + col] as usize
    }

    /// Image of `coset` under generator `g` raised to `e`.
    pub fn act_power(&self, mut coset: usize, g: u32, e: i64) -> usize {
        let col = 2 * g as usize + usize::from(e < 0);
        for _ in 0..e.unsigned_abs() {
            coset = self.entry(coset, col);
        }
        coset
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(coset, |c, l| self.act_power(c, l.gen, l.exp))
    }

    /// The permutation `i ↦ i·g` of cosets.
    pub fn generator_perm(&self, g: u32) -> Vec<u32> {
        let col = 2 * g as usize;
        (0..self.num_cosets()).map(|c| self.data[c * self.ncols + col]).collect()
    }

    /// Text dump: a header naming generators and the coset count, then one
    /// row per coset listing `g_0, g_0^-1, g_1, g_1^-1, ...` images.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "generators {}", self.generators.join(" "));
        let _ = writeln!(out, "cosets {}", self.num_cosets());
        for row in self.data.chunks(self.ncols.max(1)) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

/// A relator as a column sequence, stored twice over so that any cyclic
/// conjugate is a contiguous slice.
struct Relator {
    doubled: Vec<u32>,
    len: usize,
    /// `Some((col, exp))` for a pure power `g^exp`.
    power: Option<(u32, usize)>,
}

impl Relator {
    fn new(cols: Vec<u32>) -> Self {
        let len = cols.len();
        let power = match cols.first() {
            Some(&c) if cols.iter().all(|&x| x == c) => Some((c, len)),
            _ => None,
        };
        let mut doubled = cols.clone();
        doubled.extend_from_slice(&cols);
        Relator { doubled, len, power }
    }

    fn word(&self, offset: usize) -> &[u32] {
        &self.doubled[offset..offset + self.len]
    }

    /// Least period of the cyclic word.
    fn period(&self) -> usize {
        let w = &self.doubled[..self.len];
        let n = w.len();
        if n == 0 {
            return 0;
        }
        let mut fail = vec![0usize; n + 1];
        let mut k = 0;
        for i in 1..n {
            while k > 0 && w[i] != w[k] {
                k = fail[k];
            }
            if w[i] == w[k] {
                k += 1;
            }
            fail[i + 1] = k;
        }
        let p = n - fail[n];
        if n.is_multiple_of(p) {
            p
        } else {
            n
        }
    }
}

fn word_cols(w: &Word) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.length() as usize);
    for l in w.letters() {
        let col = 2 * l.gen + u32::from(l.exp < 0);
        out.extend(std::iter::repeat_n(col, l.exp.unsigned_abs() as usize));
    }
    out
}

/// Reduce exponents of every generator `g` with a pure-power relator `g^M`
/// to the symmetric residue mod `M` in all other words. The presented group
/// and subgroup are unchanged.
pub fn reduce_power_exponents(pres: &FinitePresentation, subgroup: &[Word]) -> (Vec<Word>, Vec<Word>) {
    let mut modulus = vec![0i64; pres.num_generators()];
    for r in pres.relators() {
        if let [l] = r.letters() {
            let m = &mut modulus[l.gen as usize];
            *m = crate::arith::gcd(*m, l.exp);
        }
    }
    let reduce = |w: &Word| -> Word {
        Word::from_pairs(w.letters().iter().map(|l| {
            let m = modulus[l.gen as usize];
            if m == 0 {
                return (l.gen, l.exp);
            }
            let mut e = l.exp.rem_euclid(m);
            if 2 * e > m {
                e -= m;
            }
            (l.gen, e)
        }))
    };
    let rels = pres
        .relators()
        .iter()
        .map(|r| if r.syllables() == 1 { r.clone() } else { reduce(r) })
        .filter(|r| !r.is_identity())
        .collect();
    let subs = subgroup.iter().map(reduce).collect();
    (rels, subs)
}

struct Enumerator<'a> {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
    rels: &'a [Relator],
    coincidences: VecDeque<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    total_defined: usize,
    compactions: usize,
    dead: usize,
    lookahead_mark: usize,
    /// Rows that a single HLT step may define.
    margin: usize,
}

#[derive(PartialEq, Eq)]
enum Scan {
    Done,
    Incomplete,
}

impl<'a> Enumerator<'a> {
    fn new(ncols: usize, rels: &'a [Relator], max_cosets: usize, track_deductions: bool) -> Self {
        let mut e = Enumerator {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            max_cosets,
            rels,
            coincidences: VecDeque::new(),
            deductions: Vec::new(),
            track_deductions,
            total_defined: 0,
            compactions: 0,
            dead: 0,
            lookahead_mark: 0,
            margin: rels.iter().map(|r| r.len).sum::<usize>() + ncols,
        };
        e.new_coset();
        e
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.total_defined += 1;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        c
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, col: u32, v: u32) {
        self.table[c as usize * self.ncols + col as usize] = v;
    }

    #[inline]
    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn link(&mut self, a: u32, col: u32, b: u32) {
        self.set(a, col, b);
        self.set(b, col ^ 1, a);
        if self.track_deductions {
            self.deductions.push((a, col));
        }
    }

    fn define(&mut self, c: u32, col: u32) -> Result<u32, OracleError> {
        if self.count() >= self.max_cosets {
            return Err(OracleError::Overflow {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.new_coset();
        self.link(c, col, d);
        Ok(d)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.dead += 1;
            self.coincidences.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(g) = self.coincidences.pop_front() {
            for col in 0..self.ncols as u32 {
                let d = self.get(g, col);
                if d == UNDEF {
                    continue;
                }
                let inv = col ^ 1;
                if self.get(d, inv) == g {
                    self.set(d, inv, UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, inv);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv);
                    } else {
                        self.link(mu, col, nu);
                    }
                }
            }
        }
    }

    /// Scan `w` from `c`, filling a single gap as a deduction and resolving
    /// any coincidence it exposes. Never defines new cosets.
    fn scan(&mut self, c: u32, w: &[u32]) -> Scan {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        while i < n {
            let next = self.get(f, w[i]);
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return Scan::Done;
        }
        let mut b = c;
        let mut j = n;
        while j > i {
            let prev = self.get(b, w[j - 1] ^ 1);
            if prev == UNDEF {
                break;
            }
            b = prev;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
            Scan::Done
        } else if j == i + 1 {
            self.link(f, w[i], b);
            Scan::Done
        } else {
            Scan::Incomplete
        }
    }

    /// Scan `w` from `c`, defining cosets until the relator closes.
    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> Result<(), OracleError> {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = n;
        loop {
            while i < n {
                let next = self.get(f, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == n {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b, w[j - 1] ^ 1);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.link(f, w[i], b);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn process_deductions(&mut self, conj: &[Vec<(usize, usize)>]) {
        while let Some((a, col)) = self.deductions.pop() {
            if !self.live(a) {
                continue;
            }
            for &(ri, off) in &conj[col as usize] {
                let rels = self.rels;
                self.scan(a, rels[ri].word(off));
                if !self.live(a) {
                    break;
                }
            }
            if !self.live(a) {
                continue;
            }
            let b = self.get(a, col);
            if b == UNDEF {
                continue;
            }
            for &(ri, off) in &conj[(col ^ 1) as usize] {
                let rels = self.rels;
                self.scan(b, rels[ri].word(off));
                if !self.live(b) {
                    break;
                }
            }
        }
    }

    fn first_undefined(&self, from: usize) -> Option<(u32, u32)> {
        let start = from.min(self.count());
        (start..self.count()).find_map(|c| {
            let c = c as u32;
            if !self.live(c) {
                return None;
            }
            (0..self.ncols as u32)
                .find(|&col| self.get(c, col) == UNDEF)
                .map(|col| (c, col))
        })
    }

    /// Renumber live cosets in order, dropping dead rows. Only valid with no
    /// pending deductions or coincidences. Returns the old-to-new map.
    fn compact_in_place(&mut self) -> Vec<u32> {
        debug_assert!(self.coincidences.is_empty() && self.deductions.is_empty());
        let count = self.count();
        let mut index = vec![UNDEF; count];
        let mut next = 0u32;
        for c in 0..count {
            if self.live(c as u32) {
                index[c] = next;
                next += 1;
            }
        }
        let mut w = 0usize;
        for c in 0..count {
            if index[c] == UNDEF {
                continue;
            }
            for col in 0..self.ncols {
                let x = self.table[c * self.ncols + col];
                self.table[w] = if x == UNDEF { UNDEF } else { index[self.rep(x) as usize] };
                w += 1;
            }
        }
        self.table.truncate(w);
        self.parent.clear();
        self.parent.extend(0..next);
        self.dead = 0;
        self.compactions += 1;
        index
    }

    /// Position `pos` after compaction: the first live coset at or after it.
    fn remap_position(index: &[u32], pos: usize) -> usize {
        index[pos.min(index.len())..]
            .iter()
            .find(|&&i| i != UNDEF)
            .map_or(index.iter().filter(|&&i| i != UNDEF).count(), |&i| i as usize)
    }

    fn near_full(&self) -> bool {
        self.count() + self.margin >= self.max_cosets
    }

    /// Compact when enough rows are dead, or when any are and the table is full.
    fn worth_compacting(&self) -> bool {
        self.dead > 0 && (self.dead >= (self.count() / 64).max(1) || self.count() >= self.max_cosets)
    }

    /// Scan every relator at every live coset without defining cosets.
    fn lookahead(&mut self) {
        for c in 0..self.count() as u32 {
            for ri in 0..self.rels.len() {
                if !self.live(c) {
                    break;
                }
                let rels = self.rels;
                self.scan(c, rels[ri].word(0));
            }
        }
    }

    fn felsch(&mut self, subgroup: &[Vec<u32>]) -> Result<(), OracleError> {
        let conj = self.conjugates();
        for w in subgroup {
            self.scan_and_fill(0, w)?;
            self.process_deductions(&conj);
        }
        let mut from = 0;
        loop {
            let Some((c, col)) = self.first_undefined(from) else {
                if from == 0 {
                    break;
                }
                from = 0;
                continue;
            };
            from = c as usize;
            if self.near_full() && self.worth_compacting() {
                let index = self.compact_in_place();
                from = Self::remap_position(&index, from);
                continue;
            }
            self.define(c, col)?;
            self.process_deductions(&conj);
        }
        Ok(())
    }

    /// Cyclic conjugates of relators and their inverses, grouped by first
    /// column, as `(relator index, offset)`; proper powers contribute one
    /// conjugate per period.
    fn conjugates(&self) -> Vec<Vec<(usize, usize)>> {
        let mut by_col = vec![Vec::new(); self.ncols];
        for (ri, rel) in self.rels.iter().enumerate() {
            for off in 0..rel.period() {
                by_col[rel.doubled[off] as usize].push((ri, off));
            }
        }
        by_col
    }

    fn hlt(&mut self, subgroup: &[Vec<u32>]) -> Result<(), OracleError> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let powers: Vec<usize> = (0..self.rels.len())
            .filter(|&i| self.rels[i].power.is_some())
            .collect();
        let mut done: Vec<Vec<bool>> = vec![Vec::new(); self.rels.len()];
        let mut c = 0usize;
        while c < self.count() {
            if self.near_full() && (self.worth_compacting() || self.count() > self.lookahead_mark) {
                let mut index = self.compact_in_place();
                if self.near_full() && self.count() > self.lookahead_mark {
                    self.lookahead();
                    let second = self.compact_in_place();
                    for i in index.iter_mut().filter(|i| **i != UNDEF) {
                        *i = second[*i as usize];
                    }
                    self.lookahead_mark = self.count() + self.max_cosets / 32;
                }
                for flags in done.iter_mut() {
                    let mut kept = vec![false; self.count()];
                    for (old, &new) in index.iter().enumerate() {
                        if new != UNDEF && flags.get(old).copied().unwrap_or(false) {
                            kept[new as usize] = true;
                        }
                    }
                    *flags = kept;
                }
                c = Self::remap_position(&index, c);
                if c >= self.count() {
                    break;
                }
            }
            let cu = c as u32;
            for ri in 0..self.rels.len() {
                if !self.live(cu) {
                    break;
                }
                let is_power = powers.contains(&ri);
                if is_power && done[ri].get(c).copied().unwrap_or(false) {
                    continue;
                }
                let rels = self.rels;
                self.scan_and_fill(cu, rels[ri].word(0))?;
                if is_power && self.live(cu) {
                    let (col, _) = rels[ri].power.unwrap();
                    let flags = &mut done[ri];
                    let mut x = cu;
                    loop {
                        if flags.len() <= x as usize {
                            flags.resize(self.parent.len(), false);
                        }
                        flags[x as usize] = true;
                        x = self.table[x as usize * self.ncols + col as usize];
                        if x == cu || x == UNDEF {
                            break;
                        }
                    }
                }
            }
            if self.live(cu) {
                for col in 0..self.ncols as u32 {
                    if self.get(cu, col) == UNDEF {
                        self.define(cu, col)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Every relator holds at every live coset and subgroup generators fix
    /// coset 0. Pure powers are checked through cycle lengths.
    fn verify(&mut self, subgroup: &[Vec<u32>]) -> bool {
        if self.first_undefined(0).is_some() {
            return false;
        }
        for rel in self.rels {
            if let Some((col, exp)) = rel.power {
                let mut seen = vec![false; self.count()];
                for start in 0..self.count() as u32 {
                    if !self.live(start) || seen[start as usize] {
                        continue;
                    }
                    let mut x = start;
                    let mut len = 0usize;
                    loop {
                        seen[x as usize] = true;
                        x = self.get(x, col);
                        len += 1;
                        if x == start {
                            break;
                        }
                    }
                    if exp % len != 0 {
                        return false;
                    }
                }
                continue;
            }
            for c in 0..self.count() as u32 {
                if !self.live(c) {
                    continue;
                }
                let end = rel.word(0).iter().fold(c, |x, &col| self.get(x, col));
                if end != c {
                    return false;
                }
            }
        }
        subgroup
            .iter()
            .all(|w| w.iter().fold(0u32, |x, &col| self.get(x, col)) == 0)
    }

    fn compact(self, generators: Vec<String>, strategy: Strategy) -> CosetTable {
        let mut index = vec![UNDEF; self.count()];
        let mut next = 0u32;
        for c in 0..self.count() {
            if self.live(c as u32) {
                index[c] = next;
                next += 1;
            }
        }
        let mut data = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..self.count() {
            if index[c] == UNDEF {
                continue;
            }
            for col in 0..self.ncols {
                data.push(index[self.table[c * self.ncols + col] as usize]);
            }
        }
        CosetTable {
            generators,
            ncols: self.ncols,
            data,
            stats: EnumStats {
                strategy,
                total_defined: self.total_defined,
                compactions: self.compactions,
            },
        }
    }
}

fn assert_permutations(t: &CosetTable) {
    let n = t.num_cosets();
    for c in 0..n {
        for col in 0..t.ncols {
            let d = t.entry(c, col);
            assert!(d < n, "entry out of range in closed table");
            assert_eq!(t.entry(d, col ^ 1), c, "column {col} is not a bijection");
        }
    }
}

/// Enumerate the cosets of `<subgroup>` in the group presented by `pres`.
pub fn todd_coxeter(
    pres: &FinitePresentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, OracleError> {
    todd_coxeter_with(pres, subgroup, &EnumOptions::with_max(max_cosets))
}

pub fn todd_coxeter_with(
    pres: &FinitePresentation,
    subgroup: &[Word],
    opts: &EnumOptions,
) -> Result<CosetTable, OracleError> {
    if opts.max_cosets == 0 {
        return Err(OracleError::Precondition("max_cosets must be at least 1".into()));
    }
    let ngens = pres.num_generators();
    for w in subgroup {
        if w.max_generator().is_some_and(|g| g as usize >= ngens) {
            return Err(OracleError::Precondition(format!(
                "subgroup generator uses an unknown generator: {w}"
            )));
        }
    }
    let (rel_words, sub_words) = reduce_power_exponents(pres, subgroup);
    let rels: Vec<Relator> = rel_words.iter().map(|w| Relator::new(word_cols(w))).collect();
    let subs: Vec<Vec<u32>> = sub_words.iter().map(word_cols).collect();
    let first = match opts.strategy {
        Strategy::Auto => {
            let longest = rels.iter().map(|r| r.len).max().unwrap_or(0);
            if longest > AUTO_HLT_THRESHOLD {
                Strategy::Hlt
            } else {
                Strategy::Felsch
            }
        }
        s => s,
    };
    let table = match enumerate(pres, &rels, &subs, first, opts.max_cosets) {
        Err(OracleError::Overflow { .. }) if opts.strategy == Strategy::Auto => {
            let second = if first == Strategy::Felsch {
                Strategy::Hlt
            } else {
                Strategy::Felsch
            };
            enumerate(pres, &rels, &subs, second, opts.max_cosets)?
        }
        other => other?,
    };
    assert_permutations(&table);
    Ok(table)
}

fn enumerate(
    pres: &FinitePresentation,
    rels: &[Relator],
    subs: &[Vec<u32>],
    strategy: Strategy,
    max_cosets: usize,
) -> Result<CosetTable, OracleError> {
    let ncols = 2 * pres.num_generators();
    let mut e = Enumerator::new(ncols, rels, max_cosets, strategy == Strategy::Felsch);
    match strategy {
        Strategy::Felsch => e.felsch(subs)?,
        _ => e.hlt(subs)?,
    }
    while !e.verify(subs) {
        e.track_deductions = false;
        e.deductions.clear();
        e.hlt(subs)?;
    }
    Ok(e.compact(pres.generators().to_vec(), strategy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> FinitePresentation {
        s.parse().unwrap()
    }

    fn index(p: &FinitePresentation, sub: &[Word], strategy: Strategy) -> usize {
        let opts = EnumOptions {
            max_cosets: 100_000,
            strategy,
        };
        todd_coxeter_with(p, sub, &opts).unwrap().num_cosets()
    }

    #[test]
    fn small_groups() {
        for s in [Strategy::Felsch, Strategy::Hlt] {
            assert_eq!(index(&pres("<a | a>"), &[], s), 1);
            assert_eq!(index(&pres("<a | a^7>"), &[], s), 7);
            assert_eq!(index(&pres("<a, b | a^2, b^3, (a*b)^3>"), &[], s), 12);
            assert_eq!(index(&pres("<a, b | a^2, b^3, (a*b)^5>"), &[], s), 60);
            assert_eq!(index(&pres("<a, b | a^2, b^3, (a*b)^5>"), &[Word::gen(1)], s), 20);
            assert_eq!(index(&pres("<a, b | a^4, b^2*a^-2, b*a*b^-1*a>"), &[], s), 8);
        }
    }

    #[test]
    fn trivial_and_generatorless() {
        assert_eq!(index(&pres("<a, b | a*b^-1, b^3, a^2>"), &[], Strategy::Felsch), 1);
        let empty = FinitePresentation::new(vec![], vec![]).unwrap();
        assert_eq!(index(&empty, &[], Strategy::Felsch), 1);
    }

    #[test]
    fn overflow_on_infinite_group() {
        let p = pres("<a, b | a^2>");
        let err = todd_coxeter(&p, &[], 500).unwrap_err();
        assert_eq!(err, OracleError::Overflow { max_cosets: 500 });
    }

    #[test]
    fn compaction_reclaims_dead_rows() {
        let p = pres("<t, y | t^4, y^-3*t*y^-2*t^-1>");
        let opts = EnumOptions {
            max_cosets: 500,
            strategy: Strategy::Hlt,
        };
        let t = todd_coxeter_with(&p, &[], &opts).unwrap();
        assert_eq!(t.num_cosets(), 260);
        assert!(t.stats().total_defined > 500);
        assert!(t.stats().compactions > 0);
    }

    #[test]
    fn auto_retries_after_overflow() {
        let p = pres("<x0, x1, x2, x3, x4, x5 | x0^3*x1^4, x1^3*x2^4, x2^3*x3^4, x3^3*x4^4, x4^3*x5^4, x5^3*x0^4>");
        let t = todd_coxeter_with(&p, &[], &EnumOptions::with_max(2_000_000)).unwrap();
        assert_eq!(t.num_cosets(), 3367);
        assert_eq!(t.stats().strategy, Strategy::Hlt);
    }

    #[test]
    fn long_power_relators() {
        let p = pres("<a, b | a^3000, b*a*b^-1*a^-2999, b^2>");
        assert_eq!(index(&p, &[], Strategy::Auto), 6000);
    }

    #[test]
    fn symmetric_residues() {
        let p = pres("<a, b | a^10, b*a^17*b^-1*a^-3>");
        let (rels, _) = reduce_power_exponents(&p, &[]);
        assert_eq!(rels[1], Word::from_pairs([(1, 1), (0, -3), (1, -1), (0, -3)]));
    }

    #[test]
    fn deterministic_dump() {
        let p = pres("<a, b | a^2, b^3, (a*b)^5>");
        let t1 = todd_coxeter(&p, &[], 1000).unwrap();
        let t2 = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t1.dump(), t2.dump());
        assert!(t1.dump().starts_with("generators a b\ncosets 60\n"));
    }
}
