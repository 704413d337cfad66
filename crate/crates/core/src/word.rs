//! Alphabets, words, relations, presentations, and assignments.
//!
//! A `Letter` is an index into the alphabet of its presentation, so words are
//! cheap to hash and compare. Alphabet extension appends letters and never
//! renumbers, which lets builders reuse words for an `S_n` presentation after
//! adding the extra generators.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::transform::PartialTransformation;

/// A letter of some alphabet, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub(crate) u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered list of distinct letter names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u16>,
}

impl Alphabet {
    pub fn new() -> Self {
        Alphabet::default()
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut a = Alphabet::new();
        for n in names {
            a.add(n.as_ref())?;
        }
        Ok(a)
    }

    pub fn add(&mut self, name: &str) -> Result<Letter> {
        if name.is_empty()
            || name == "1"
            || name == "="
            || name.chars().any(|c| c.is_whitespace() || c == '(' || c == ')' || c == ',')
        {
            return Err(Error::Invalid(format!("invalid letter name {:?}", name)));
        }
        if self.index.contains_key(name) {
            return Err(Error::DuplicateLetter(name.to_string()));
        }
        let id = self.names.len() as u16;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Ok(Letter(id))
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index
            .get(name)
            .map(|&i| Letter(i))
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u16).map(Letter)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A word over an alphabet; the empty word is the monoid identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub(crate) Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn from_letters(ls: impl IntoIterator<Item = Letter>) -> Self {
        Word(ls.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(words: &[&Word]) -> Word {
        let mut out = Vec::with_capacity(words.iter().map(|w| w.len()).sum());
        for w in words {
            out.extend_from_slice(&w.0);
        }
        Word(out)
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut out = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            out.extend_from_slice(&self.0);
        }
        Word(out)
    }

    /// Space-separated letter names; `1` for the empty word.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(alphabet.name(*l));
        }
        s
    }
}

/// A defining relation `lhs = rhs`, optionally labeled (e.g. "I2", "T7").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    pub label: Option<String>,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word, label: impl Into<Option<String>>) -> Self {
        Relation { lhs, rhs, label: label.into() }
    }

    pub fn labeled(label: &str, lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs, label: Some(label.to_string()) }
    }

    pub fn length(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    /// `S_n` relations are labeled `R1`, `R2`, ... by every builder.
    pub fn is_sn(&self) -> Option<bool> {
        self.label.as_deref().map(|l| l.starts_with('R'))
    }
}

/// The family tag a builder stamps on its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "SN_MOORE")]
    SnMoore,
    #[serde(rename = "SN_CARMICHAEL")]
    SnCarmichael,
    #[serde(rename = "SN_MOORE_REDUCED")]
    SnMooreReduced,
    #[serde(rename = "SMALL_SN")]
    SmallSn,
    #[serde(rename = "IN_5REL")]
    In5Rel,
    #[serde(rename = "IN_3REL")]
    In3Rel,
    #[serde(rename = "TN_AIZENSTAT")]
    TnAizenstat,
    #[serde(rename = "TN_4REL")]
    Tn4Rel,
    #[serde(rename = "TN_5REL")]
    Tn5Rel,
    #[serde(rename = "PTN_EAST")]
    PtnEast,
    #[serde(rename = "PTN_8REL")]
    Ptn8Rel,
    #[serde(rename = "PTN_9REL")]
    Ptn9Rel,
    #[serde(rename = "SMALL_IN")]
    SmallIn,
    #[serde(rename = "SMALL_TN")]
    SmallTn,
    #[serde(rename = "SMALL_PTN")]
    SmallPtn,
    #[serde(rename = "CUSTOM")]
    Custom,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::SnMoore => "SN_MOORE",
            Family::SnCarmichael => "SN_CARMICHAEL",
            Family::SnMooreReduced => "SN_MOORE_REDUCED",
            Family::SmallSn => "SMALL_SN",
            Family::In5Rel => "IN_5REL",
            Family::In3Rel => "IN_3REL",
            Family::TnAizenstat => "TN_AIZENSTAT",
            Family::Tn4Rel => "TN_4REL",
            Family::Tn5Rel => "TN_5REL",
            Family::PtnEast => "PTN_EAST",
            Family::Ptn8Rel => "PTN_8REL",
            Family::Ptn9Rel => "PTN_9REL",
            Family::SmallIn => "SMALL_IN",
            Family::SmallTn => "SMALL_TN",
            Family::SmallPtn => "SMALL_PTN",
            Family::Custom => "CUSTOM",
        }
    }
}

/// A finite monoid presentation with deterministically ordered alphabet,
/// relations and labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
    pub family: Family,
    pub degree: usize,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, family: Family, degree: usize) -> Self {
        Presentation { alphabet, relations: Vec::new(), family, degree }
    }

    pub fn relation_by_label(&self, label: &str) -> Result<&Relation> {
        self.relations
            .iter()
            .find(|r| r.label.as_deref() == Some(label))
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// A copy with the labeled relation removed.
    pub fn without_relation(&self, label: &str) -> Result<Presentation> {
        self.relation_by_label(label)?;
        let mut p = self.clone();
        p.relations.retain(|r| r.label.as_deref() != Some(label));
        Ok(p)
    }

    /// Number of generators plus the total length of all relation words.
    pub fn length(&self) -> usize {
        self.alphabet.len() + self.relations.iter().map(Relation::length).sum::<usize>()
    }

    /// Total length of the non-`S_n` relation words only.
    pub fn non_sn_length(&self) -> Result<usize> {
        Ok(self.non_sn_relations()?.iter().map(|r| r.length()).sum())
    }

    pub fn sn_relations(&self) -> Result<Vec<&Relation>> {
        self.split_relations().map(|(sn, _)| sn)
    }

    pub fn non_sn_relations(&self) -> Result<Vec<&Relation>> {
        self.split_relations().map(|(_, non)| non)
    }

    fn split_relations(&self) -> Result<(Vec<&Relation>, Vec<&Relation>)> {
        let mut sn = Vec::new();
        let mut non = Vec::new();
        for r in &self.relations {
            match r.is_sn() {
                Some(true) => sn.push(r),
                Some(false) => non.push(r),
                None => return Err(Error::UnlabeledRelations),
            }
        }
        Ok((sn, non))
    }

    /// Canonical text form: header lines, then one relation per line
    /// `lhs = rhs` with letters space-separated and `1` for the empty word.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet.names().join(" "));
        let _ = writeln!(out, "family: {}", self.family.tag());
        let _ = writeln!(out, "degree: {}", self.degree);
        for r in &self.relations {
            let _ = writeln!(
                out,
                "{} = {}",
                r.lhs.display(&self.alphabet),
                r.rhs.display(&self.alphabet)
            );
        }
        out
    }

    /// Parses the text form. Relations come back unlabeled and the family
    /// defaults to `CUSTOM`; labels round-trip through JSON, not text.
    pub fn from_text(text: &str) -> Result<Presentation> {
        let mut alphabet = None;
        let mut family = Family::Custom;
        let mut degree = None;
        let mut relations = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("alphabet:") {
                let names: Vec<&str> = rest.split_whitespace().collect();
                alphabet = Some(Alphabet::from_names(&names)?);
            } else if let Some(rest) = line.strip_prefix("family:") {
                let tag = rest.trim();
                family = serde_json::from_value(serde_json::Value::String(tag.to_string()))
                    .map_err(|_| Error::Invalid(format!("unknown family {:?}", tag)))?;
            } else if let Some(rest) = line.strip_prefix("degree:") {
                degree = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Invalid("bad degree".into()))?,
                );
            } else {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("relations before alphabet header".into()))?;
                let (lhs, rhs) = line
                    .split_once('=')
                    .ok_or_else(|| Error::Invalid(format!("missing '=' in {:?}", line)))?;
                relations.push(Relation::new(
                    parse_word(a, lhs)?,
                    parse_word(a, rhs)?,
                    None,
                ));
            }
        }
        let alphabet = alphabet.ok_or_else(|| Error::Invalid("missing alphabet header".into()))?;
        let degree = degree.ok_or_else(|| Error::Invalid("missing degree header".into()))?;
        Ok(Presentation { alphabet, relations, family, degree })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationJson::from(self)).expect("serialize")
    }

    pub fn from_json(text: &str) -> Result<Presentation> {
        let pj: PresentationJson =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
        pj.into_presentation()
    }
}

/// Parses a space-separated word over `alphabet`; `1` denotes the empty word.
pub fn parse_word(alphabet: &Alphabet, text: &str) -> Result<Word> {
    let mut w = Word::empty();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        w.push(alphabet.letter(tok)?);
    }
    Ok(w)
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    label: Option<String>,
    lhs: Vec<String>,
    rhs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    alphabet: Vec<String>,
    relations: Vec<RelationJson>,
    family: Family,
    degree: usize,
}

impl From<&Presentation> for PresentationJson {
    fn from(p: &Presentation) -> Self {
        let word = |w: &Word| -> Vec<String> {
            w.letters().iter().map(|&l| p.alphabet.name(l).to_string()).collect()
        };
        PresentationJson {
            alphabet: p.alphabet.names().to_vec(),
            relations: p
                .relations
                .iter()
                .map(|r| RelationJson {
                    label: r.label.clone(),
                    lhs: word(&r.lhs),
                    rhs: word(&r.rhs),
                })
                .collect(),
            family: p.family,
            degree: p.degree,
        }
    }
}

impl PresentationJson {
    fn into_presentation(self) -> Result<Presentation> {
        let alphabet = Alphabet::from_names(&self.alphabet)?;
        let mut relations = Vec::new();
        for r in self.relations {
            let to_word = |names: &[String]| -> Result<Word> {
                let mut w = Word::empty();
                for n in names {
                    w.push(alphabet.letter(n)?);
                }
                Ok(w)
            };
            relations.push(Relation::new(to_word(&r.lhs)?, to_word(&r.rhs)?, r.label));
        }
        Ok(Presentation { alphabet, relations, family: self.family, degree: self.degree })
    }
}

/// A total map from an alphabet's letters to transformations of one degree.
/// Realizes the evaluation homomorphism `A* → PT_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    degree: usize,
    images: Vec<PartialTransformation>,
}

impl Assignment {
    pub fn new(degree: usize, images: Vec<PartialTransformation>) -> Result<Self> {
        for t in &images {
            if t.degree() != degree {
                return Err(Error::DegreeMismatch(t.degree(), degree));
            }
        }
        Ok(Assignment { degree, images })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn get(&self, l: Letter) -> Result<&PartialTransformation> {
        self.images.get(l.index()).ok_or(Error::UnassignedLetter(l.index()))
    }

    pub fn images(&self) -> &[PartialTransformation] {
        &self.images
    }

    pub fn push(&mut self, t: PartialTransformation) -> Result<()> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch(t.degree(), self.degree));
        }
        self.images.push(t);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Presentation {
        let mut a = Alphabet::new();
        let x = a.add("a").unwrap();
        let b = a.add("b").unwrap();
        let mut p = Presentation::new(a, Family::Custom, 3);
        p.relations.push(Relation::labeled(
            "R1",
            Word::from_letters([x, x]),
            Word::empty(),
        ));
        p.relations.push(Relation::labeled(
            "N1",
            Word::from_letters([b, x, b]),
            Word::single(b),
        ));
        p
    }

    #[test]
    fn length_counts_generators_and_words() {
        // ⟨a | a² = a⟩ has length 1 + 3 = 4
        let mut a = Alphabet::new();
        let x = a.add("a").unwrap();
        let mut p = Presentation::new(a, Family::Custom, 1);
        p.relations.push(Relation::new(Word::from_letters([x, x]), Word::single(x), None));
        assert_eq!(p.length(), 4);
    }

    #[test]
    fn sn_split_by_label() {
        let p = tiny();
        assert_eq!(p.sn_relations().unwrap().len(), 1);
        assert_eq!(p.non_sn_relations().unwrap().len(), 1);
        assert_eq!(p.non_sn_length().unwrap(), 4);
    }

    #[test]
    fn unlabeled_split_errors() {
        let mut p = tiny();
        p.relations[0].label = None;
        assert!(matches!(p.non_sn_relations(), Err(Error::UnlabeledRelations)));
    }

    #[test]
    fn text_round_trip() {
        let p = tiny();
        let text = p.to_text();
        assert!(text.contains("a a = 1"));
        assert!(text.contains("b a b = b"));
        let q = Presentation::from_text(&text).unwrap();
        assert_eq!(q.alphabet, p.alphabet);
        assert_eq!(q.degree, p.degree);
        assert_eq!(q.relations.len(), p.relations.len());
        for (r, s) in q.relations.iter().zip(&p.relations) {
            assert_eq!(r.lhs, s.lhs);
            assert_eq!(r.rhs, s.rhs);
        }
    }

    #[test]
    fn json_round_trip_preserves_labels() {
        let p = tiny();
        let q = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn without_relation_drops_exactly_one() {
        let p = tiny();
        let q = p.without_relation("N1").unwrap();
        assert_eq!(q.relations.len(), 1);
        assert!(p.without_relation("Zz").is_err());
    }

    #[test]
    fn reserved_letter_names_rejected() {
        let mut a = Alphabet::new();
        assert!(a.add("1").is_err());
        assert!(a.add("bad name").is_err());
        assert!(a.add("(x)").is_err());
        a.add("a_2").unwrap();
        assert!(a.add("a_2").is_err());
    }
}
