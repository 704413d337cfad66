//! Monoid presentations for the symmetric groups, together with the word
//! machinery the composite builders need: a cached breadth-first word table
//! over the generators and shortlex-minimal factorizations of permutations.

use std::sync::OnceLock;

use crate::cycles::parse_cycles;
use crate::engine::{self, EnumeratedMonoid};
use crate::error::{Error, Result};
use crate::transform::PartialTransformation;
use crate::word::{Alphabet, Assignment, Family, Letter, Presentation, Relation, Word};

/// Degrees above this would need word tables over more than 10! elements.
const MAX_WORD_TABLE_DEGREE: usize = 10;

/// A presentation for `S_n` together with its assignment into `S_n`.
/// Soundness of the relations is checked at construction; that the
/// presentation has exactly `n!` elements is verified lazily and cached.
#[derive(Debug)]
pub struct SnPresentation {
    pres: Presentation,
    asg: Assignment,
    table: OnceLock<EnumeratedMonoid>,
    size_checked: OnceLock<std::result::Result<(), Error>>,
}

impl SnPresentation {
    pub fn new(pres: Presentation, asg: Assignment) -> Result<Self> {
        if asg.degree() != pres.degree {
            return Err(Error::DegreeMismatch(asg.degree(), pres.degree));
        }
        if asg.len() != pres.alphabet.len() {
            return Err(Error::Invalid("assignment not total on the alphabet".into()));
        }
        for l in pres.alphabet.letters() {
            let t = asg.get(l)?;
            if !t.is_permutation() {
                return Err(Error::NotAPermutation { rank: t.rank(), dom: t.domain().len() });
            }
        }
        for r in &pres.relations {
            let lhs = engine::evaluate(&r.lhs, &asg)?;
            let rhs = engine::evaluate(&r.rhs, &asg)?;
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "relation {:?} does not hold in S_{}",
                    r.label.as_deref().unwrap_or("?"),
                    pres.degree
                )));
            }
        }
        Ok(SnPresentation {
            pres,
            asg,
            table: OnceLock::new(),
            size_checked: OnceLock::new(),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn assignment(&self) -> &Assignment {
        &self.asg
    }

    pub fn degree(&self) -> usize {
        self.pres.degree
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.pres.alphabet
    }

    /// Verifies (once) that the presentation defines a monoid of size `n!`.
    pub fn ensure_defines_sn(&self) -> Result<()> {
        self.size_checked
            .get_or_init(|| {
                let target = factorial(self.degree())?;
                let result =
                    engine::congruence::enumerate_presentation(&self.pres, 4 * target.max(1));
                match result.outcome {
                    engine::congruence::Outcome::Finite(s) if s == target => Ok(()),
                    engine::congruence::Outcome::Finite(s) => Err(Error::Invalid(format!(
                        "presentation has {} elements, S_{} has {}",
                        s,
                        self.degree(),
                        target
                    ))),
                    engine::congruence::Outcome::Overflow(l) => Err(Error::Overflow(l)),
                }
            })
            .clone()
    }

    fn word_table(&self) -> Result<&EnumeratedMonoid> {
        let n = self.degree();
        if n > MAX_WORD_TABLE_DEGREE {
            return Err(Error::UnsupportedDegree(n, "word table (degree at most 10)"));
        }
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let limit = factorial(n)?;
        let table = engine::froidure_pin(&self.asg, limit.max(1))?;
        Ok(self.table.get_or_init(|| table))
    }

    /// Shortlex-minimal word over the alphabet evaluating to `p`.
    pub fn word_for_permutation(&self, p: &PartialTransformation) -> Result<Word> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch(p.degree(), self.degree()));
        }
        if !p.is_permutation() {
            return Err(Error::NotAPermutation { rank: p.rank(), dom: p.domain().len() });
        }
        let table = self.word_table()?;
        let idx = table.index_of(p).ok_or(Error::NotGenerated)?;
        Ok(Word::from_letters(table.word_of(idx).into_iter().map(|g| Letter(g as u16))))
    }

    /// Word for the permutation written in disjoint cycle notation.
    pub fn word_for_cycles(&self, cycles: &str) -> Result<Word> {
        self.word_for_permutation(&parse_cycles(self.degree(), cycles)?)
    }

    /// Word for the inverse of `p`, factorized directly.
    pub fn word_for_inverse(&self, p: &PartialTransformation) -> Result<Word> {
        self.word_for_permutation(&p.inverse()?)
    }
}

pub(crate) fn factorial(n: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for k in 2..=n {
        acc = acc.checked_mul(k).ok_or(Error::ArithmeticOverflow("n!"))?;
    }
    Ok(acc)
}

/// Moore's two-generator presentation for `S_n`, `n ≥ 4`:
/// `a = (1,2)`, `b = (1,2,...,n)`, with `n + 1` relations.
pub fn moore(n: usize) -> Result<SnPresentation> {
    if n < 4 {
        return Err(Error::UnsupportedDegree(n, "moore (n ≥ 4)"));
    }
    let mut alphabet = Alphabet::new();
    let a = alphabet.add("a")?;
    let b = alphabet.add("b")?;
    let mut pres = Presentation::new(alphabet, Family::SnMoore, n);
    let wa = Word::single(a);
    let wb = Word::single(b);
    let mut label = RelLabeler::new();
    let mut rel = |lhs: Word| Relation::labeled(&label.next_r(), lhs, Word::empty());
    pres.relations.push(rel(wa.pow(2)));
    pres.relations.push(rel(wb.pow(n)));
    pres.relations.push(rel(Word::concat(&[&wb, &wa]).pow(n - 1)));
    pres.relations.push(rel(Word::concat(&[&wa, &wb.pow(n - 1), &wa, &wb]).pow(3)));
    for j in 2..=n.saturating_sub(2) {
        pres.relations
            .push(rel(Word::concat(&[&wa, &wb.pow(n - j), &wa, &wb.pow(j)]).pow(2)));
    }
    let asg = Assignment::new(
        n,
        vec![parse_cycles(n, "(1,2)")?, full_cycle(n)?],
    )?;
    SnPresentation::new(pres, asg)
}

/// Carmichael's presentation for `S_n`, `n ≥ 4`: generators `a_i = (1, i)`.
pub fn carmichael(n: usize) -> Result<SnPresentation> {
    if n < 4 {
        return Err(Error::UnsupportedDegree(n, "carmichael (n ≥ 4)"));
    }
    let mut alphabet = Alphabet::new();
    let mut letters = Vec::new();
    for i in 2..=n {
        letters.push(alphabet.add(&format!("a_{}", i))?);
    }
    let gen = |i: usize| letters[i - 2];
    let mut pres = Presentation::new(alphabet, Family::SnCarmichael, n);
    let mut label = RelLabeler::new();
    let mut rel = |lhs: Word| Relation::labeled(&label.next_r(), lhs, Word::empty());
    for i in 2..=n {
        pres.relations.push(rel(Word::single(gen(i)).pow(2)));
    }
    for i in 2..=n {
        let succ = if i == n { 2 } else { i + 1 };
        pres.relations
            .push(rel(Word::from_letters([gen(i), gen(succ)]).pow(3)));
    }
    for i in 2..=n {
        let succ = if i == n { 2 } else { i + 1 };
        for j in 2..=n {
            if j == i || j == succ {
                continue;
            }
            pres.relations
                .push(rel(Word::from_letters([gen(i), gen(succ), gen(i), gen(j)]).pow(2)));
        }
    }
    let mut images = Vec::new();
    for i in 2..=n {
        images.push(parse_cycles(n, &format!("(1,{})", i))?);
    }
    SnPresentation::new(pres, Assignment::new(n, images)?)
}

/// The O(n)-relation modification of Moore's presentation, `n ≥ 5`, made a
/// monoid presentation: the relator `c_2 b⁻²` becomes `c_2 = b²` and
/// `c_{j+1}⁻¹ c_j b` becomes `c_{j+1} = c_j b`. Generators `a = (1,2)`,
/// `b = (1,...,n)`, `c_j = b^j`.
pub fn moore_reduced(n: usize) -> Result<SnPresentation> {
    if n < 5 {
        return Err(Error::UnsupportedDegree(n, "moore_reduced (n ≥ 5)"));
    }
    let mut alphabet = Alphabet::new();
    let a = alphabet.add("a")?;
    let b = alphabet.add("b")?;
    let mut cs = Vec::new();
    for j in 2..=n - 2 {
        cs.push(alphabet.add(&format!("c_{}", j))?);
    }
    let c = |j: usize| cs[j - 2];
    let mut pres = Presentation::new(alphabet, Family::SnMooreReduced, n);
    let wa = Word::single(a);
    let wb = Word::single(b);
    let mut label = RelLabeler::new();
    pres.relations
        .push(Relation::labeled(&label.next_r(), wa.pow(2), Word::empty()));
    pres.relations
        .push(Relation::labeled(&label.next_r(), wb.pow(n), Word::empty()));
    pres.relations.push(Relation::labeled(
        &label.next_r(),
        Word::concat(&[&wb, &wa]).pow(n - 1),
        Word::empty(),
    ));
    pres.relations.push(Relation::labeled(
        &label.next_r(),
        Word::concat(&[&wa, &wb.pow(n - 1), &wa, &wb]).pow(3),
        Word::empty(),
    ));
    pres.relations.push(Relation::labeled(
        &label.next_r(),
        Word::single(c(2)),
        wb.pow(2),
    ));
    for j in 2..=n - 3 {
        pres.relations.push(Relation::labeled(
            &label.next_r(),
            Word::single(c(j + 1)),
            Word::from_letters([c(j), b]),
        ));
    }
    for j in 2..=n - 2 {
        pres.relations.push(Relation::labeled(
            &label.next_r(),
            Word::concat(&[
                &wa,
                &Word::single(c(n - j)),
                &wa,
                &Word::single(c(j)),
            ])
            .pow(2),
            Word::empty(),
        ));
    }
    let bperm = full_cycle(n)?;
    let mut images = vec![parse_cycles(n, "(1,2)")?, bperm.clone()];
    let mut power = bperm.compose(&bperm)?;
    for _ in 2..=n - 2 {
        images.push(power.clone());
        power = power.compose(&bperm)?;
    }
    SnPresentation::new(pres, Assignment::new(n, images)?)
}

/// Presentations for `S_1`, `S_2`, `S_3`, used where Moore's and Carmichael's
/// are unavailable: the empty presentation, `⟨a_2 | a_2² = ε⟩`, and
/// `⟨a_2, a_3 | a_2² = ε, a_3² = ε, a_2 a_3 a_2 = a_3 a_2 a_3⟩`.
pub fn sn_tiny(n: usize) -> Result<SnPresentation> {
    match n {
        1 => {
            let pres = Presentation::new(Alphabet::new(), Family::SmallSn, 1);
            SnPresentation::new(pres, Assignment::new(1, vec![])?)
        }
        2 => {
            let mut alphabet = Alphabet::new();
            let a2 = alphabet.add("a_2")?;
            let mut pres = Presentation::new(alphabet, Family::SmallSn, 2);
            pres.relations.push(Relation::labeled(
                "R1",
                Word::single(a2).pow(2),
                Word::empty(),
            ));
            SnPresentation::new(pres, Assignment::new(2, vec![parse_cycles(2, "(1,2)")?])?)
        }
        3 => {
            let mut alphabet = Alphabet::new();
            let a2 = alphabet.add("a_2")?;
            let a3 = alphabet.add("a_3")?;
            let mut pres = Presentation::new(alphabet, Family::SmallSn, 3);
            pres.relations.push(Relation::labeled(
                "R1",
                Word::single(a2).pow(2),
                Word::empty(),
            ));
            pres.relations.push(Relation::labeled(
                "R2",
                Word::single(a3).pow(2),
                Word::empty(),
            ));
            pres.relations.push(Relation::labeled(
                "R3",
                Word::from_letters([a2, a3, a2]),
                Word::from_letters([a3, a2, a3]),
            ));
            SnPresentation::new(
                pres,
                Assignment::new(3, vec![parse_cycles(3, "(1,2)")?, parse_cycles(3, "(1,3)")?])?,
            )
        }
        _ => Err(Error::UnsupportedDegree(n, "sn_tiny (n ≤ 3)")),
    }
}

/// Builds the `S_n` presentation named by `kind` ("moore", "carmichael",
/// "moore-reduced"), falling back to the tiny presentations for `n ≤ 3`.
pub fn sn_presentation(kind: &str, n: usize) -> Result<SnPresentation> {
    if n <= 3 {
        return sn_tiny(n);
    }
    match kind {
        "moore" => moore(n),
        "carmichael" => carmichael(n),
        "moore-reduced" | "moore_reduced" => moore_reduced(n),
        other => Err(Error::Invalid(format!("unknown S_n presentation {:?}", other))),
    }
}

fn full_cycle(n: usize) -> Result<PartialTransformation> {
    let images: Vec<usize> = (1..=n).map(|x| if x == n { 1 } else { x + 1 }).collect();
    PartialTransformation::transformation(n, &images)
}

struct RelLabeler {
    next: usize,
}

impl RelLabeler {
    fn new() -> Self {
        RelLabeler { next: 0 }
    }
    fn next_r(&mut self) -> String {
        self.next += 1;
        format!("R{}", self.next)
    }
}

/// Tokenizes a word that may mix letter names with permutations in disjoint
/// cycle notation, e.g. `"z (1,7) z (1,7)"`. Cycles are expanded through
/// `word_for_permutation`. `z` and `h` are accepted as shorthand for `zeta`
/// and `eta` when those letters exist and the shorthand is not itself a
/// letter.
pub fn parse_word_with_cycles(
    sp: &SnPresentation,
    alphabet: &Alphabet,
    text: &str,
) -> Result<Word> {
    let mut out = Word::empty();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if rest.starts_with('(') {
            // Maximal run of cycle groups forms one permutation.
            let mut end = 0;
            let bytes = rest.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                if bytes[i] == b'(' {
                    match rest[i..].find(')') {
                        Some(close) => {
                            end = i + close + 1;
                            i = end;
                            while i < bytes.len() && bytes[i] == b' ' {
                                i += 1;
                            }
                            if i < bytes.len() && bytes[i] == b'(' {
                                continue;
                            }
                            break;
                        }
                        None => return Err(Error::CycleParse("unclosed cycle".into())),
                    }
                } else {
                    break;
                }
            }
            let cycle_text = &rest[..end];
            let w = sp.word_for_cycles(cycle_text)?;
            out = Word::concat(&[&out, &w]);
            rest = rest[end..].trim_start();
        } else {
            let end = rest.find([' ', '(']).unwrap_or(rest.len());
            let token = rest[..end].trim();
            let name = resolve_alias(alphabet, token)?;
            out.push(alphabet.letter(&name)?);
            rest = rest[end..].trim_start();
        }
    }
    Ok(out)
}

fn resolve_alias(alphabet: &Alphabet, token: &str) -> Result<String> {
    if alphabet.contains(token) {
        return Ok(token.to_string());
    }
    let expanded = match token {
        "z" => "zeta",
        "h" => "eta",
        _ => token,
    };
    if alphabet.contains(expanded) {
        Ok(expanded.to_string())
    } else {
        Err(Error::UnknownLetter(token.to_string()))
    }
}
