//! Regular permutation representations and derived series.
//!
//! In a regular representation points and group elements coincide: point
//! `i` is the element carrying point 0 to `i`. Elements are multiplied by
//! replaying a shortest generator word from a breadth-first tree.

use std::collections::VecDeque;

use super::coset::{todd_coxeter_with, CosetTable, EnumOptions};
use super::{shift_extension_variants, OracleError};
use crate::words::{CyclicPresentation, FinitePresentation, Word, T, Y};

pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// A permutation group on `[0, degree)` given by generators. Images are
/// written on the right: point `i` goes to `gen[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Vec<u32>>) -> Result<Self, OracleError> {
        for (k, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(OracleError::Precondition(format!("generator {k} has wrong degree")));
            }
            for &x in g {
                let x = x as usize;
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(OracleError::Precondition(format!("generator {k} is not a bijection")));
                }
            }
        }
        Ok(PermGroup { degree, generators })
    }

    /// Action of the generators on the cosets of a closed table.
    pub fn from_table(t: &CosetTable) -> Self {
        let generators = (0..t.num_generators() as u32).map(|g| t.generator_perm(g)).collect();
        PermGroup {
            degree: t.num_cosets(),
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }
}

/// Regular representation from the trivial-subgroup coset table.
pub fn regular_rep(
    pres: &FinitePresentation,
    opts: &EnumOptions,
    element_cap: usize,
) -> Result<PermGroup, OracleError> {
    let table = todd_coxeter_with(pres, &[], opts)?;
    if table.num_cosets() > element_cap {
        return Err(OracleError::CapExceeded {
            order: table.num_cosets(),
            cap: element_cap,
        });
    }
    Ok(PermGroup::from_table(&table))
}

/// Regular representation of `G_n(w)` on the cosets of `<t>` in its shift
/// extension, trying each twist `x ↦ x t^{-c}` so that `x_i` acts as
/// `t^i x t^{-c-i}`; falls back to enumerating `G_n(w)` directly.
pub fn regular_rep_cyclic(
    cp: &CyclicPresentation,
    opts: &EnumOptions,
    element_cap: usize,
) -> Result<PermGroup, OracleError> {
    let mut found = None;
    for (c, ext) in shift_extension_variants(cp) {
        match todd_coxeter_with(&ext, &[Word::gen(T)], opts) {
            Ok(t) => {
                found = Some((c, t));
                break;
            }
            Err(OracleError::Overflow { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let Some((c, table)) = found else {
        return regular_rep(&cp.to_presentation(), opts, element_cap);
    };
    if table.num_cosets() > element_cap {
        return Err(OracleError::CapExceeded {
            order: table.num_cosets(),
            cap: element_cap,
        });
    }
    let generators = (0..i64::from(cp.n()))
        .map(|i| {
            let x_i = Word::from_pairs([(T, i), (Y, 1), (T, -c - i)]);
            (0..table.num_cosets()).map(|k| table.act_word(k, &x_i) as u32).collect()
        })
        .collect();
    PermGroup::new(table.num_cosets(), generators)
}

/// Element arithmetic in a regular permutation group.
pub struct RegularGroup<'a> {
    pg: &'a PermGroup,
    inverses: Vec<Vec<u32>>,
    /// Shortest word (generator indices) reaching each point from 0.
    words: Vec<Vec<u16>>,
}

impl<'a> RegularGroup<'a> {
    pub fn new(pg: &'a PermGroup) -> Result<Self, OracleError> {
        let n = pg.degree;
        let mut words: Vec<Option<Vec<u16>>> = vec![None; n];
        if n > 0 {
            words[0] = Some(Vec::new());
        }
        let mut queue = VecDeque::from([0u32]);
        while let Some(p) = queue.pop_front() {
            for (k, g) in pg.generators.iter().enumerate() {
                let q = g[p as usize] as usize;
                if words[q].is_none() {
                    let mut w = words[p as usize].clone().unwrap();
                    w.push(k as u16);
                    words[q] = Some(w);
                    queue.push_back(q as u32);
                }
            }
        }
        let words: Vec<Vec<u16>> = words
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| OracleError::Precondition("group action is not transitive".into()))?;
        let inverses = pg
            .generators
            .iter()
            .map(|g| {
                let mut inv = vec![0u32; n];
                for (i, &x) in g.iter().enumerate() {
                    inv[x as usize] = i as u32;
                }
                inv
            })
            .collect();
        Ok(RegularGroup { pg, inverses, words })
    }

    pub fn order(&self) -> usize {
        self.pg.degree
    }

    /// `a * b`
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.words[b as usize]
            .iter()
            .fold(a, |p, &k| self.pg.generators[k as usize][p as usize])
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.words[a as usize]
            .iter()
            .rev()
            .fold(0, |p, &k| self.inverses[k as usize][p as usize])
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let x = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(x, a), b)
    }

    /// `s^-1 x s`
    pub fn conjugate(&self, x: u32, s: u32) -> u32 {
        self.mul(self.mul(self.inv(s), x), s)
    }

    /// Right multiplication by `x` as a permutation of elements.
    fn right_perm(&self, x: u32) -> Vec<u32> {
        (0..self.order() as u32).map(|a| self.mul(a, x)).collect()
    }

    /// Generating elements of the whole group.
    pub fn generator_elements(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.pg.generators.iter().map(|g| g[0]).filter(|&x| x != 0).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Order of every element.
    pub fn element_orders(&self) -> Vec<u64> {
        let n = self.order();
        let mut orders = vec![0u64; n];
        if n == 0 {
            return orders;
        }
        orders[0] = 1;
        for x in 1..n as u32 {
            if orders[x as usize] != 0 {
                continue;
            }
            let mut cycle = vec![0u32, x];
            let mut p = x;
            loop {
                p = self.mul(p, x);
                if p == 0 {
                    break;
                }
                cycle.push(p);
            }
            let k = cycle.len() as u64;
            for (i, &y) in cycle.iter().enumerate() {
                if i > 0 {
                    orders[y as usize] = k / crate::arith::gcd(i as i64, k as i64) as u64;
                }
            }
        }
        orders
    }

    /// Normal closure of the commutators of `gens` inside `<gens>`.
    pub fn derived_subgroup(&self, gens: &[u32]) -> Subgroup {
        let mut sub = Subgroup::trivial(self.order());
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if !sub.contains(c) {
                    sub.add_generator(self, c);
                }
            }
        }
        let mut idx = 0;
        while idx < sub.generators.len() {
            let x = sub.generators[idx];
            for &s in gens {
                let c = self.conjugate(x, s);
                if !sub.contains(c) {
                    sub.add_generator(self, c);
                }
            }
            idx += 1;
        }
        sub
    }
}

/// A subgroup materialized as a membership set.
pub struct Subgroup {
    generators: Vec<u32>,
    perms: Vec<Vec<u32>>,
    member: Vec<bool>,
    elements: Vec<u32>,
}

impl Subgroup {
    fn trivial(order: usize) -> Self {
        let mut member = vec![false; order];
        if order > 0 {
            member[0] = true;
        }
        Subgroup {
            generators: Vec::new(),
            perms: Vec::new(),
            member,
            elements: vec![0],
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member[x as usize]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    fn add_generator(&mut self, g: &RegularGroup<'_>, x: u32) {
        self.generators.push(x);
        self.perms.push(g.right_perm(x));
        // Re-close from scratch: every element times every generator.
        let mut i = 0;
        while i < self.elements.len() {
            let a = self.elements[i] as usize;
            for p in &self.perms {
                let b = p[a];
                if !self.member[b as usize] {
                    self.member[b as usize] = true;
                    self.elements.push(b);
                }
            }
            i += 1;
        }
    }
}

/// Length of the derived series of a regular permutation group, `0` for the
/// trivial group and `None` when the series stalls at a nontrivial perfect
/// subgroup.
pub fn derived_length(pg: &PermGroup) -> Result<Option<usize>, OracleError> {
    let g = RegularGroup::new(pg)?;
    let mut gens = g.generator_elements();
    let mut size = g.order();
    let mut length = 0;
    while size > 1 {
        let d = g.derived_subgroup(&gens);
        if d.order() == size {
            return Ok(None);
        }
        size = d.order();
        gens = d.generators().to_vec();
        length += 1;
    }
    Ok(Some(length))
}

/// Orders of all elements of a regular permutation group.
pub fn element_orders(pg: &PermGroup) -> Result<Vec<u64>, OracleError> {
    Ok(RegularGroup::new(pg)?.element_orders())
}
