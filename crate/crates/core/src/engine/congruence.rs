//! Enumeration of the monoid defined by a presentation, via right-congruence
//! enumeration on the free monoid.
//!
//! The two-sided congruence `R#` is the right congruence generated by all
//! left translates of the relations, so tracing every relation from every
//! node of the (partial) right Cayley graph and merging the endpoints is
//! sound and complete. Strategy: HLT-style tracing with a union-find for
//! coincidences, a worklist seeded by definitions and merges, periodic
//! lookahead with compaction when the live node count passes the limit, and
//! a final trace-only sweep that must come back clean before a `Finite`
//! answer is reported.

use std::collections::VecDeque;

use crate::word::Presentation;

use super::{Progress, ProgressEvent};

const UNDEF: u32 = u32::MAX;
const PROGRESS_STRIDE: usize = 200_000;

/// Outcome of enumerating a presented monoid. `Finite(size)` is exact and
/// equals the number of shortlex normal forms; `Overflow` makes no
/// finiteness claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Finite(usize),
    Overflow(usize),
}

impl Outcome {
    pub fn finite(self) -> Option<usize> {
        match self {
            Outcome::Finite(s) => Some(s),
            Outcome::Overflow(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumStats {
    pub nodes_defined: usize,
    pub coincidences: usize,
    pub lookaheads: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct PresentedMonoidResult {
    pub outcome: Outcome,
    pub stats: EnumStats,
}

type Rel = (Vec<u16>, Vec<u16>);

/// Exact size of the presented monoid when it is at most `limit`, else
/// `Overflow(limit)`.
pub fn enumerate_presentation(p: &Presentation, limit: usize) -> PresentedMonoidResult {
    enumerate_presentation_with(p, limit, None)
}

pub fn enumerate_presentation_with(
    p: &Presentation,
    limit: usize,
    progress: Progress<'_>,
) -> PresentedMonoidResult {
    let nletters = p.alphabet.len();
    let relations: Vec<Rel> = p
        .relations
        .iter()
        .map(|r| {
            let side = |w: &crate::word::Word| w.letters().iter().map(|l| l.0).collect();
            (side(&r.lhs), side(&r.rhs))
        })
        .collect();
    let mut e = Enumerator {
        nletters,
        table: vec![UNDEF; nletters],
        parent: vec![0],
        alive: 1,
        pending: VecDeque::new(),
        worklist: VecDeque::new(),
        stats: EnumStats::default(),
        progress,
    };
    e.run(&relations, limit)
}

struct Enumerator<'a> {
    nletters: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    alive: usize,
    pending: VecDeque<(u32, u32)>,
    worklist: VecDeque<u32>,
    stats: EnumStats,
    progress: Progress<'a>,
}

impl Enumerator<'_> {
    fn run(&mut self, rels: &[Rel], limit: usize) -> PresentedMonoidResult {
        if limit == 0 {
            return self.overflow(0);
        }
        // HLT overshoots; let the live count run past the answer threshold
        // up to a hard budget, collapsing with lookaheads along the way.
        let hard = limit.saturating_mul(4).max(limit.saturating_add(1024));
        let mut next_lookahead = limit;
        self.worklist.push_back(0);
        loop {
            while let Some(n) = self.worklist.pop_front() {
                let n = self.find(n);
                self.process(n, rels);
                if self.alive > next_lookahead {
                    self.lookahead(rels);
                    if self.alive > hard {
                        return self.overflow(limit);
                    }
                    // Hysteresis: re-collapse only after real growth.
                    next_lookahead = (self.alive + self.alive / 4).max(limit);
                } else if self.parent.len() > 3 * self.alive + 2_000_000 {
                    // Dead rows dominate; reclaim memory.
                    self.compact();
                }
            }
            // Final sweep: trace-only check of completeness and closure.
            if self.final_sweep_clean(rels) {
                break;
            }
        }
        let outcome = if self.alive <= limit {
            Outcome::Finite(self.alive)
        } else {
            Outcome::Overflow(limit)
        };
        PresentedMonoidResult { outcome, stats: self.stats }
    }

    fn overflow(&self, limit: usize) -> PresentedMonoidResult {
        PresentedMonoidResult { outcome: Outcome::Overflow(limit), stats: self.stats }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        loop {
            let p = self.parent[x as usize];
            if p == x {
                return x;
            }
            let gp = self.parent[p as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
    }

    fn new_node(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.table.extend(std::iter::repeat(UNDEF).take(self.nletters));
        self.alive += 1;
        self.stats.nodes_defined += 1;
        if let Some(cb) = self.progress.as_deref_mut() {
            if self.stats.nodes_defined % PROGRESS_STRIDE == 0 {
                cb(ProgressEvent { phase: "congruence", count: self.alive });
            }
        }
        self.worklist.push_back(id);
        id
    }

    #[inline]
    fn edge(&self, n: u32, c: u16) -> u32 {
        self.table[n as usize * self.nletters + c as usize]
    }

    #[inline]
    fn set_edge(&mut self, n: u32, c: u16, to: u32) {
        self.table[n as usize * self.nletters + c as usize] = to;
    }

    /// Follows `word` from `start`, defining missing edges.
    fn trace_define(&mut self, start: u32, word: &[u16]) -> u32 {
        let mut cur = self.find(start);
        for &c in word {
            let e = self.edge(cur, c);
            cur = if e == UNDEF {
                let nn = self.new_node();
                self.set_edge(cur, c, nn);
                nn
            } else {
                self.find(e)
            };
        }
        cur
    }

    fn process(&mut self, n: u32, rels: &[Rel]) {
        // Complete the row first so every class eventually has all edges.
        for c in 0..self.nletters as u16 {
            if self.edge(n, c) == UNDEF {
                let nn = self.new_node();
                self.set_edge(n, c, nn);
            }
        }
        for (u, v) in rels {
            let n = self.find(n);
            let a = self.trace_define(n, u);
            let b = self.trace_define(n, v);
            if self.find(a) != self.find(b) {
                self.pending.push_back((a, b));
                self.drain_coincidences();
            }
        }
    }

    fn drain_coincidences(&mut self) {
        while let Some((a, b)) = self.pending.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (s, d) = if a < b { (a, b) } else { (b, a) };
            self.parent[d as usize] = s;
            self.alive -= 1;
            self.stats.coincidences += 1;
            for c in 0..self.nletters as u16 {
                let t = self.edge(d, c);
                if t != UNDEF {
                    let scur = self.edge(s, c);
                    if scur == UNDEF {
                        self.set_edge(s, c, t);
                    } else if self.find(scur) != self.find(t) {
                        self.pending.push_back((scur, t));
                    }
                }
            }
            self.worklist.push_back(s);
        }
    }

    /// Trace-only passes over all live nodes, merging any coincidences found,
    /// then compaction. Used when the live count passes the limit: HLT can
    /// overshoot, and a lookahead collapses what is already implied.
    fn lookahead(&mut self, rels: &[Rel]) {
        self.stats.lookaheads += 1;
        loop {
            let before = self.alive;
            for n in 0..self.parent.len() as u32 {
                if self.find(n) != n {
                    continue;
                }
                for (u, v) in rels {
                    if let (Some(a), Some(b)) = (self.trace_only(n, u), self.trace_only(n, v)) {
                        if a != b {
                            self.pending.push_back((a, b));
                            self.drain_coincidences();
                        }
                    }
                }
            }
            if self.alive == before {
                break;
            }
        }
        self.compact();
    }

    /// Follows `word` from `start` without defining; `None` on a gap.
    fn trace_only(&mut self, start: u32, word: &[u16]) -> Option<u32> {
        let mut cur = self.find(start);
        for &c in word {
            let e = self.edge(cur, c);
            if e == UNDEF {
                return None;
            }
            cur = self.find(e);
        }
        Some(cur)
    }

    /// Renumbers live nodes densely, dropping dead rows. Requires the
    /// pending queue to be empty; re-enqueues every live node.
    fn compact(&mut self) {
        debug_assert!(self.pending.is_empty());
        let old_len = self.parent.len();
        let mut remap = vec![UNDEF; old_len];
        let mut next = 0u32;
        for n in 0..old_len as u32 {
            if self.find(n) == n {
                remap[n as usize] = next;
                next += 1;
            }
        }
        let mut table = vec![UNDEF; next as usize * self.nletters];
        for n in 0..old_len as u32 {
            if remap[n as usize] == UNDEF {
                continue;
            }
            let new_n = remap[n as usize] as usize;
            for c in 0..self.nletters {
                let t = self.table[n as usize * self.nletters + c];
                if t != UNDEF {
                    let root = self.find(t);
                    table[new_n * self.nletters + c] = remap[root as usize];
                }
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        debug_assert_eq!(self.alive, next as usize);
        // Work queued against old ids is invalidated; reprocess everything.
        self.worklist.clear();
        for n in 0..next {
            self.worklist.push_back(n);
        }
    }

    /// True when every live node has a complete row and every relation
    /// closes at every live node. Requeues offending nodes otherwise.
    fn final_sweep_clean(&mut self, rels: &[Rel]) -> bool {
        let mut clean = true;
        for n in 0..self.parent.len() as u32 {
            if self.find(n) != n {
                continue;
            }
            let mut ok = true;
            for c in 0..self.nletters as u16 {
                if self.edge(n, c) == UNDEF {
                    ok = false;
                    break;
                }
            }
            if ok {
                for (u, v) in rels {
                    match (self.trace_only(n, u), self.trace_only(n, v)) {
                        (Some(a), Some(b)) if a == b => {}
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if !ok {
                clean = false;
                self.worklist.push_back(n);
            }
        }
        clean
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{Alphabet, Family, Presentation, Relation, Word};

    fn pres(names: &[&str], rels: &[(&[usize], &[usize])]) -> Presentation {
        let alphabet = Alphabet::from_names(names).unwrap();
        let mut p = Presentation::new(alphabet, Family::Custom, 1);
        for (lhs, rhs) in rels {
            let w = |ids: &[usize]| {
                Word::from_letters(ids.iter().map(|&i| crate::word::Letter(i as u16)))
            };
            p.relations.push(Relation::new(w(lhs), w(rhs), None));
        }
        p
    }

    #[test]
    fn free_idempotent_has_two_elements() {
        // ⟨a | a² = a⟩ = {ε, a}
        let p = pres(&["a"], &[(&[0, 0], &[0])]);
        assert_eq!(enumerate_presentation(&p, 100).outcome, Outcome::Finite(2));
    }

    #[test]
    fn cyclic_group_of_order_six() {
        let p = pres(&["a"], &[(&[0; 6], &[])]);
        assert_eq!(enumerate_presentation(&p, 100).outcome, Outcome::Finite(6));
    }

    #[test]
    fn empty_alphabet_is_trivial() {
        let p = pres(&[], &[]);
        assert_eq!(enumerate_presentation(&p, 10).outcome, Outcome::Finite(1));
    }

    #[test]
    fn free_monoid_overflows() {
        let p = pres(&["a"], &[]);
        assert_eq!(enumerate_presentation(&p, 50).outcome, Outcome::Overflow(50));
    }

    #[test]
    fn infinite_quotient_overflows_finite_one_does_not() {
        // ⟨a,b | ab = ε⟩ is infinite; must overflow.
        let p = pres(&["a", "b"], &[(&[0, 1], &[])]);
        assert_eq!(enumerate_presentation(&p, 1000).outcome, Outcome::Overflow(1000));
        // adding a² = ε and b² = ε collapses it to C2
        let p = pres(&["a", "b"], &[(&[0, 1], &[]), (&[0, 0], &[]), (&[1, 1], &[])]);
        assert_eq!(enumerate_presentation(&p, 1000).outcome, Outcome::Finite(2));
    }

    #[test]
    fn symmetric_group_by_coxeter_relations() {
        // ⟨s,t | s²=ε, t²=ε, (st)³=ε⟩ ≅ S3
        let p = pres(
            &["s", "t"],
            &[(&[0, 0], &[]), (&[1, 1], &[]), (&[0, 1, 0, 1, 0, 1], &[])],
        );
        assert_eq!(enumerate_presentation(&p, 100).outcome, Outcome::Finite(6));
    }

    #[test]
    fn result_is_limit_insensitive_above_size() {
        let p = pres(
            &["s", "t"],
            &[(&[0, 0], &[]), (&[1, 1], &[]), (&[0, 1, 0, 1, 0, 1], &[])],
        );
        for limit in [6, 7, 100, 100_000] {
            assert_eq!(enumerate_presentation(&p, limit).outcome, Outcome::Finite(6));
        }
        assert_eq!(enumerate_presentation(&p, 5).outcome, Outcome::Overflow(5));
    }
}
