//! Enumeration machinery: evaluation of words, Froidure-Pin enumeration of
//! concrete transformation monoids, permutation group closure, congruence
//! enumeration and Knuth-Bendix completion for presented monoids, and
//! elementary-sequence search.

pub mod congruence;
pub mod derive;
pub mod rewrite;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::transform::PartialTransformation;
use crate::word::{Assignment, Word};

/// Evaluates a word under an assignment; the empty word is the identity.
pub fn evaluate(w: &Word, asg: &Assignment) -> Result<PartialTransformation> {
    let mut acc = PartialTransformation::identity(asg.degree())?;
    for &l in w.letters() {
        acc = acc.compose(asg.get(l)?)?;
    }
    Ok(acc)
}

/// A progress event emitted by long-running enumerations.
#[derive(Debug, Clone, Copy)]
pub struct ProgressEvent {
    pub phase: &'static str,
    pub count: usize,
}

pub type Progress<'a> = Option<&'a mut dyn FnMut(ProgressEvent)>;

const PROGRESS_STRIDE: usize = 100_000;

/// A concrete monoid enumerated from generators: deduplicated element store
/// with stable indices, a shortlex-minimal word per element, and the right
/// Cayley graph by generator. Index 0 is the identity.
#[derive(Debug)]
pub struct EnumeratedMonoid {
    degree: usize,
    gens: Vec<PartialTransformation>,
    elements: Vec<PartialTransformation>,
    index: HashMap<PartialTransformation, u32>,
    links: Vec<(u32, u16)>,
    right: Vec<u32>,
    left: OnceLock<Vec<u32>>,
}

impl EnumeratedMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[PartialTransformation] {
        &self.gens
    }

    pub fn element(&self, i: usize) -> &PartialTransformation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[PartialTransformation] {
        &self.elements
    }

    pub fn index_of(&self, t: &PartialTransformation) -> Option<usize> {
        self.index.get(t).map(|&i| i as usize)
    }

    pub fn contains(&self, t: &PartialTransformation) -> bool {
        self.index.contains_key(t)
    }

    /// Shortlex-minimal word for element `i`, as generator indices.
    pub fn word_of(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = i as u32;
        while cur != 0 {
            let (parent, gen) = self.links[cur as usize];
            out.push(gen as usize);
            cur = parent;
        }
        out.reverse();
        out
    }

    /// Index of `element(i) * gens[g]`.
    pub fn right_step(&self, i: usize, g: usize) -> usize {
        self.right[i * self.gens.len() + g] as usize
    }

    /// Index of `gens[g] * element(i)`; built on first use.
    pub fn left_step(&self, i: usize, g: usize) -> usize {
        let left = self.left.get_or_init(|| {
            let ngens = self.gens.len();
            let mut table = vec![0u32; self.elements.len() * ngens];
            for (ei, e) in self.elements.iter().enumerate() {
                for (gi, g) in self.gens.iter().enumerate() {
                    let prod = g.compose(e).expect("equal degrees");
                    table[ei * ngens + gi] = self.index[&prod];
                }
            }
            table
        });
        left[i * self.gens.len() + g] as usize
    }
}

/// Froidure-Pin style breadth-first closure of the monoid generated by the
/// assignment's images. Deterministic: elements appear in shortlex order of
/// their minimal words over the generators (alphabet order).
pub fn froidure_pin(gens: &Assignment, limit: usize) -> Result<EnumeratedMonoid> {
    enumerate_monoid(gens.degree(), gens.images().to_vec(), limit, None)
}

pub fn froidure_pin_with(
    gens: &Assignment,
    limit: usize,
    progress: Progress<'_>,
) -> Result<EnumeratedMonoid> {
    enumerate_monoid(gens.degree(), gens.images().to_vec(), limit, progress)
}

/// Closure of a permutation group from generators, by the same BFS.
pub fn generate_group(
    gens: &[PartialTransformation],
    limit: usize,
) -> Result<EnumeratedMonoid> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => return Err(Error::Invalid("generate_group needs at least one generator".into())),
    };
    for g in gens {
        if !g.is_permutation() {
            return Err(Error::NotAPermutation { rank: g.rank(), dom: g.domain().len() });
        }
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
    }
    enumerate_monoid(degree, gens.to_vec(), limit, None)
}

fn enumerate_monoid(
    degree: usize,
    gens: Vec<PartialTransformation>,
    limit: usize,
    mut progress: Progress<'_>,
) -> Result<EnumeratedMonoid> {
    if limit == 0 {
        return Err(Error::Overflow(0));
    }
    let ngens = gens.len();
    let identity = PartialTransformation::identity(degree)?;
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<PartialTransformation, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut links: Vec<(u32, u16)> = vec![(0, 0)];
    let mut right: Vec<u32> = Vec::new();

    let mut cur = 0usize;
    while cur < elements.len() {
        for g in 0..ngens {
            let prod = elements[cur].compose(&gens[g])?;
            let next = match index.get(&prod) {
                Some(&i) => i,
                None => {
                    let i = elements.len() as u32;
                    if elements.len() >= limit {
                        return Err(Error::Overflow(limit));
                    }
                    index.insert(prod.clone(), i);
                    elements.push(prod);
                    links.push((cur as u32, g as u16));
                    if let Some(cb) = progress.as_deref_mut() {
                        if elements.len() % PROGRESS_STRIDE == 0 {
                            cb(ProgressEvent { phase: "froidure-pin", count: elements.len() });
                        }
                    }
                    i
                }
            };
            right.push(next);
        }
        cur += 1;
    }

    Ok(EnumeratedMonoid {
        degree,
        gens,
        elements,
        index,
        links,
        right,
        left: OnceLock::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::parse_cycles;
    use crate::word::{Alphabet, Assignment};

    fn asg(degree: usize, images: Vec<PartialTransformation>) -> Assignment {
        Assignment::new(degree, images).unwrap()
    }

    #[test]
    fn t3_has_27_elements() {
        let gens = asg(
            3,
            vec![
                parse_cycles(3, "(1,2)").unwrap(),
                parse_cycles(3, "(1,2,3)").unwrap(),
                PartialTransformation::zeta(3).unwrap(),
            ],
        );
        assert_eq!(froidure_pin(&gens, 100).unwrap().size(), 27);
    }

    #[test]
    fn i4_has_209_elements() {
        let gens = asg(
            4,
            vec![
                parse_cycles(4, "(1,2)").unwrap(),
                parse_cycles(4, "(1,2,3,4)").unwrap(),
                PartialTransformation::eta(4).unwrap(),
            ],
        );
        assert_eq!(froidure_pin(&gens, 1000).unwrap().size(), 209);
    }

    #[test]
    fn identity_generates_the_trivial_monoid() {
        let gens = asg(5, vec![PartialTransformation::identity(5).unwrap()]);
        assert_eq!(froidure_pin(&gens, 10).unwrap().size(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let gens = asg(
            4,
            vec![
                parse_cycles(4, "(1,2)").unwrap(),
                parse_cycles(4, "(1,2,3,4)").unwrap(),
            ],
        );
        assert!(matches!(froidure_pin(&gens, 10), Err(Error::Overflow(10))));
    }

    #[test]
    fn stored_words_evaluate_back() {
        let zeta = PartialTransformation::zeta(3).unwrap();
        let gens = asg(
            3,
            vec![
                parse_cycles(3, "(1,2)").unwrap(),
                parse_cycles(3, "(1,2,3)").unwrap(),
                zeta,
            ],
        );
        let m = froidure_pin(&gens, 100).unwrap();
        for i in 0..m.size() {
            let mut acc = PartialTransformation::identity(3).unwrap();
            for g in m.word_of(i) {
                acc = acc.compose(&m.generators()[g]).unwrap();
            }
            assert_eq!(&acc, m.element(i));
        }
    }

    #[test]
    fn alternating_group_closures() {
        // Lemma-style generating sets: (1,2,i) generate A_n
        let gens: Vec<_> = ["(1,2,3)", "(1,2,4)", "(1,2,5)"]
            .iter()
            .map(|s| parse_cycles(5, s).unwrap())
            .collect();
        assert_eq!(generate_group(&gens, 1000).unwrap().size(), 60);
        let gens: Vec<_> = ["(1,2,3)", "(1,2,4)"]
            .iter()
            .map(|s| parse_cycles(4, s).unwrap())
            .collect();
        assert_eq!(generate_group(&gens, 100).unwrap().size(), 12);
        let one = vec![parse_cycles(3, "(1,2)").unwrap()];
        assert_eq!(generate_group(&one, 10).unwrap().size(), 2);
    }

    #[test]
    fn generate_group_rejects_non_permutations() {
        let gens = vec![PartialTransformation::zeta(3).unwrap()];
        assert!(generate_group(&gens, 10).is_err());
    }

    #[test]
    fn cayley_steps_are_consistent() {
        let gens = asg(
            3,
            vec![parse_cycles(3, "(1,2)").unwrap(), parse_cycles(3, "(1,2,3)").unwrap()],
        );
        let m = froidure_pin(&gens, 100).unwrap();
        assert_eq!(m.size(), 6);
        for i in 0..m.size() {
            for g in 0..2 {
                let r = m.right_step(i, g);
                assert_eq!(
                    m.element(r),
                    &m.element(i).compose(&m.generators()[g]).unwrap()
                );
                let l = m.left_step(i, g);
                assert_eq!(
                    m.element(l),
                    &m.generators()[g].compose(m.element(i)).unwrap()
                );
            }
        }
    }

    // evaluate: homomorphism property and unassigned-letter error
    #[test]
    fn evaluate_is_a_homomorphism() {
        let mut a = Alphabet::new();
        let x = a.add("x").unwrap();
        let y = a.add("y").unwrap();
        let asg = Assignment::new(
            4,
            vec![parse_cycles(4, "(1,2)").unwrap(), parse_cycles(4, "(2,3,4)").unwrap()],
        )
        .unwrap();
        let u = Word::from_letters([x, y]);
        let v = Word::from_letters([y, x, x]);
        let uv = Word::concat(&[&u, &v]);
        assert_eq!(
            evaluate(&uv, &asg).unwrap(),
            evaluate(&u, &asg).unwrap().compose(&evaluate(&v, &asg).unwrap()).unwrap()
        );
        assert_eq!(
            evaluate(&Word::empty(), &asg).unwrap(),
            PartialTransformation::identity(4).unwrap()
        );
        let bad = Word::from_letters([Letter(7)]);
        assert!(evaluate(&bad, &asg).is_err());
    }

    use crate::word::Letter;
}
