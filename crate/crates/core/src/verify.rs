//! The theorem/lemma harness: certifies "presentation defines monoid" by
//! soundness plus cardinality, checks the alternating-group generation
//! lemmas and their quoted intermediate identities, runs the lower-bound
//! witness suite, and probes relation irredundancy by bounded enumeration.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cycles::{parse_cycles, CycleNotation};
use crate::engine::congruence::{enumerate_presentation, Outcome};
use crate::engine::{evaluate, froidure_pin, generate_group};
use crate::error::{Error, Result};
use crate::sn::factorial;
use crate::transform::{KernelType, Parity, PartialTransformation, Stabiliser};
use crate::word::{Alphabet, Assignment, Family, Letter, Presentation, Word};

/// One of the four monoid families, with its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonoidSpec {
    pub family: MonoidFamily,
    pub degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MonoidFamily {
    Sn,
    In,
    Tn,
    Ptn,
}

impl MonoidSpec {
    pub fn new(family: MonoidFamily, degree: usize) -> MonoidSpec {
        MonoidSpec { family, degree }
    }
}

/// Exact order of the monoid; errors on arithmetic overflow rather than
/// wrapping.
pub fn order_of(spec: MonoidSpec) -> Result<usize> {
    let n = spec.degree;
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    let pow = |base: usize, exp: usize| -> Result<usize> {
        let mut acc: usize = 1;
        for _ in 0..exp {
            acc = acc.checked_mul(base).ok_or(Error::ArithmeticOverflow("power"))?;
        }
        Ok(acc)
    };
    match spec.family {
        MonoidFamily::Sn => factorial(n),
        MonoidFamily::Tn => pow(n, n),
        MonoidFamily::Ptn => pow(n + 1, n),
        MonoidFamily::In => {
            // Σ_k C(n,k)² k!
            let mut total: usize = 0;
            let mut binom: usize = 1; // C(n,0)
            for k in 0..=n {
                if k > 0 {
                    binom = binom
                        .checked_mul(n + 1 - k)
                        .ok_or(Error::ArithmeticOverflow("C(n,k)"))?
                        / k;
                }
                let term = binom
                    .checked_mul(binom)
                    .and_then(|b2| b2.checked_mul(factorial(k).ok()?))
                    .ok_or(Error::ArithmeticOverflow("C(n,k)^2 k!"))?;
                total = total.checked_add(term).ok_or(Error::ArithmeticOverflow("sum"))?;
            }
            Ok(total)
        }
    }
}

/// The standard generating assignment for a family at degree `n`, with
/// letters `a`, `b` for `S_n` plus `zeta`/`eta` as the family requires.
pub fn standard_generators(spec: MonoidSpec) -> Result<(Alphabet, Assignment)> {
    let n = spec.degree;
    let mut alphabet = Alphabet::new();
    let mut images: Vec<PartialTransformation> = Vec::new();
    if n >= 2 {
        alphabet.add("a")?;
        images.push(parse_cycles(n, "(1,2)")?);
        if n >= 3 {
            alphabet.add("b")?;
            let cycle: Vec<String> = (1..=n).map(|x| x.to_string()).collect();
            images.push(parse_cycles(n, &format!("({})", cycle.join(",")))?);
        }
    }
    match spec.family {
        MonoidFamily::Sn => {}
        MonoidFamily::Tn => {
            if n >= 2 {
                alphabet.add("zeta")?;
                images.push(PartialTransformation::zeta(n)?);
            }
        }
        MonoidFamily::In => {
            alphabet.add("eta")?;
            images.push(PartialTransformation::eta(n)?);
        }
        MonoidFamily::Ptn => {
            if n >= 2 {
                alphabet.add("zeta")?;
                images.push(PartialTransformation::zeta(n)?);
            }
            alphabet.add("eta")?;
            images.push(PartialTransformation::eta(n)?);
        }
    }
    Ok((alphabet, Assignment::new(n, images)?))
}

/// Labels of relations whose sides evaluate to different elements.
pub fn check_relations(p: &Presentation, asg: &Assignment) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for (i, r) in p.relations.iter().enumerate() {
        let lhs = evaluate(&r.lhs, asg)?;
        let rhs = evaluate(&r.rhs, asg)?;
        if lhs != rhs {
            failures.push(r.label.clone().unwrap_or_else(|| format!("#{}", i + 1)));
        }
    }
    Ok(failures)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "SOUNDNESS_FAIL")]
    SoundnessFail,
    #[serde(rename = "SIZE_MISMATCH")]
    SizeMismatch,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PresentedSize {
    Finite(usize),
    Overflow(usize),
}

/// Structured outcome of a `verify_defines` run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub spec: MonoidSpec,
    pub family: Family,
    pub degree: usize,
    pub target_size: usize,
    pub soundness_failures: Vec<String>,
    /// Size of the monoid generated by the assignment (surjectivity check).
    pub generated_size: Option<usize>,
    pub presented: Option<PresentedSize>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

/// Certifies that the presentation defines the monoid: every relation holds
/// under the assignment, the assignment generates a monoid of the target
/// order, and the presented monoid has exactly the target order.
pub fn verify_defines(
    p: &Presentation,
    asg: &Assignment,
    spec: MonoidSpec,
    limit: usize,
) -> Result<VerificationReport> {
    let target = order_of(spec)?;
    let mut report = VerificationReport {
        spec,
        family: p.family,
        degree: p.degree,
        target_size: target,
        soundness_failures: Vec::new(),
        generated_size: None,
        presented: None,
        verdict: Verdict::Inconclusive,
    };
    report.soundness_failures = check_relations(p, asg)?;
    if !report.soundness_failures.is_empty() {
        report.verdict = Verdict::SoundnessFail;
        return Ok(report);
    }
    let fp_limit = limit.max(target);
    match froidure_pin(asg, fp_limit) {
        Ok(m) => {
            report.generated_size = Some(m.size());
            if m.size() != target {
                report.verdict = Verdict::SizeMismatch;
                return Ok(report);
            }
        }
        Err(Error::Overflow(_)) => {
            report.verdict = Verdict::Inconclusive;
            return Ok(report);
        }
        Err(e) => return Err(e),
    }
    match enumerate_presentation(p, limit).outcome {
        Outcome::Finite(s) => {
            report.presented = Some(PresentedSize::Finite(s));
            report.verdict = if s == target { Verdict::Verified } else { Verdict::SizeMismatch };
        }
        Outcome::Overflow(l) => {
            report.presented = Some(PresentedSize::Overflow(l));
            report.verdict = Verdict::Inconclusive;
        }
    }
    Ok(report)
}

/// The default enumeration limit: four times the target size.
pub fn default_limit(target: usize) -> usize {
    target.saturating_mul(4).max(16)
}

/// The longest prefix of `w` evaluating to a permutation, as an element.
pub fn leading_permutation(w: &Word, asg: &Assignment) -> Result<PartialTransformation> {
    Ok(leading_parts(w, asg)?.0)
}

/// The letter immediately after the leading permutation, or `None` when the
/// whole word evaluates to a permutation.
pub fn leading_nonpermutation(w: &Word, asg: &Assignment) -> Result<Option<Letter>> {
    Ok(leading_parts(w, asg)?.1)
}

fn leading_parts(
    w: &Word,
    asg: &Assignment,
) -> Result<(PartialTransformation, Option<Letter>)> {
    let mut acc = PartialTransformation::identity(asg.degree())?;
    for (i, &l) in w.letters().iter().enumerate() {
        let next = acc.compose(asg.get(l)?)?;
        if !next.is_permutation() {
            // Rank is monotone under composition, so no later prefix can be
            // a permutation again.
            return Ok((acc, Some(w.letters()[i])));
        }
        acc = next;
    }
    Ok((acc, None))
}

// ---------------------------------------------------------------------------
// Lower-bound witnesses.
// ---------------------------------------------------------------------------

/// A piece of a witness word: a permutation segment or a distinguished
/// non-permutation generator.
#[derive(Debug, Clone)]
pub enum WPiece {
    Perm(PartialTransformation),
    Zeta,
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GenKind {
    Zeta,
    Eta,
}

#[derive(Debug, Clone)]
pub struct WitnessWord {
    pub pieces: Vec<WPiece>,
}

impl WitnessWord {
    fn eval(&self, n: usize) -> Result<PartialTransformation> {
        let zeta = PartialTransformation::zeta(n)?;
        let eta = PartialTransformation::eta(n)?;
        let mut acc = PartialTransformation::identity(n)?;
        for p in &self.pieces {
            let t = match p {
                WPiece::Perm(t) => t,
                WPiece::Zeta => &zeta,
                WPiece::Eta => &eta,
            };
            acc = acc.compose(t)?;
        }
        Ok(acc)
    }

    fn leading_permutation(&self, n: usize) -> Result<PartialTransformation> {
        let mut acc = PartialTransformation::identity(n)?;
        for p in &self.pieces {
            match p {
                WPiece::Perm(t) => acc = acc.compose(t)?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn leading_nonpermutation(&self) -> Option<GenKind> {
        for p in &self.pieces {
            match p {
                WPiece::Perm(_) => continue,
                WPiece::Zeta => return Some(GenKind::Zeta),
                WPiece::Eta => return Some(GenKind::Eta),
            }
        }
        None
    }
}

/// Outcome of checking one witness case from the lower-bound lemmas.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessCheck {
    pub lemma: String,
    pub case: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// The concrete witness factorizations used by the rank-(n-2) lower-bound
/// arguments, checked semantically: equal evaluations, the stated element,
/// rank `n - 2`, the stated kernel type, and either coset separation of the
/// leading permutations or distinct leading non-permutations.
pub fn lower_bound_witnesses(family: MonoidFamily, n: usize) -> Result<Vec<WitnessCheck>> {
    if n < 4 {
        return Err(Error::UnsupportedDegree(n, "lower_bound_witnesses (n ≥ 4)"));
    }
    let t12 = parse_cycles(n, "(1,2)")?;
    let t23 = parse_cycles(n, "(2,3)")?;
    let t13 = parse_cycles(n, "(1,3)")?;
    let s1324 = parse_cycles(n, "(1,3)(2,4)")?;
    let id = PartialTransformation::identity(n)?;

    // Expected elements.
    let dom_without = |missing: &[usize]| -> Result<PartialTransformation> {
        let imgs: Vec<Option<usize>> = (1..=n)
            .map(|x| if missing.contains(&x) { None } else { Some(x) })
            .collect();
        PartialTransformation::new(n, &imgs)
    };
    let f_in = dom_without(&[1, 2])?; // [-,-,3,...,n]
    let mut imgs = vec![1usize, 1, 1];
    imgs.extend(4..=n);
    let f_3111 = PartialTransformation::transformation(n, &imgs)?; // [1,1,1,4..n]
    let mut imgs = vec![1usize, 1, 3, 3];
    imgs.extend(5..=n);
    let f_2211 = PartialTransformation::transformation(n, &imgs)?; // [1,1,3,3,5..n]
    let opts: Vec<Option<usize>> = (1..=n)
        .map(|x| match x {
            1 | 2 => Some(1),
            3 => None,
            x => Some(x),
        })
        .collect();
    let f_21 = PartialTransformation::new(n, &opts)?; // [1,1,-,4..n]

    let w = |pieces: Vec<WPiece>| WitnessWord { pieces };
    use WPiece::{Eta, Perm, Zeta};

    struct Case {
        lemma: &'static str,
        case: usize,
        w1: WitnessWord,
        w2: WitnessWord,
        expected: PartialTransformation,
        kernel: Option<KernelType>,
        coset: Option<Stabiliser>,
        distinct_nonperm: bool,
    }

    let kt = |pairs: Vec<(usize, usize)>| Some(KernelType::from_pairs(pairs));
    let cases: Vec<Case> = match family {
        MonoidFamily::In => vec![Case {
            lemma: "Lemma 4.5",
            case: 1,
            w1: w(vec![Eta, Perm(t12.clone()), Eta]),
            w2: w(vec![Perm(t12.clone()), Eta, Perm(t12.clone()), Eta]),
            expected: f_in.clone(),
            kernel: kt(vec![(1, n - 2)]),
            coset: Some(Stabiliser::Stab1),
            distinct_nonperm: false,
        }],
        MonoidFamily::Tn => vec![
            Case {
                lemma: "Lemma 5.6",
                case: 1,
                w1: w(vec![Zeta, Perm(t23.clone()), Zeta]),
                w2: w(vec![Perm(t23.clone()), Zeta, Perm(t23.clone()), Zeta]),
                expected: f_3111.clone(),
                kernel: kt(vec![(3, 1), (1, n - 3)]),
                coset: Some(Stabiliser::Stab12),
                distinct_nonperm: false,
            },
            Case {
                lemma: "Lemma 5.6",
                case: 2,
                w1: w(vec![Perm(s1324.clone()), Zeta, Perm(s1324.clone()), Zeta]),
                w2: w(vec![Zeta, Perm(s1324.clone()), Zeta, Perm(s1324.clone())]),
                expected: f_2211.clone(),
                kernel: kt(vec![(2, 2), (1, n - 4)]),
                coset: Some(Stabiliser::Stab12),
                distinct_nonperm: false,
            },
        ],
        MonoidFamily::Ptn => vec![
            Case {
                lemma: "Lemma 6.8",
                case: 1,
                w1: w(vec![Eta, Perm(t12.clone()), Eta, Perm(t12.clone())]),
                w2: w(vec![Perm(t12.clone()), Eta, Perm(t12.clone()), Eta]),
                expected: f_in,
                kernel: kt(vec![(1, n - 2)]),
                coset: Some(Stabiliser::Stab1),
                distinct_nonperm: false,
            },
            Case {
                lemma: "Lemma 6.8",
                case: 2,
                w1: w(vec![Zeta, Perm(t23.clone()), Zeta, Perm(t23.clone())]),
                w2: w(vec![Perm(t23.clone()), Zeta, Perm(t23.clone()), Zeta]),
                expected: f_3111,
                kernel: kt(vec![(3, 1), (1, n - 3)]),
                coset: Some(Stabiliser::Stab12),
                distinct_nonperm: false,
            },
            Case {
                lemma: "Lemma 6.8",
                case: 3,
                w1: w(vec![Perm(s1324.clone()), Zeta, Perm(s1324.clone()), Zeta]),
                w2: w(vec![Zeta, Perm(s1324.clone()), Zeta, Perm(s1324.clone())]),
                expected: f_2211,
                kernel: kt(vec![(2, 2), (1, n - 4)]),
                coset: Some(Stabiliser::Stab12),
                distinct_nonperm: false,
            },
            Case {
                lemma: "Lemma 6.8",
                case: 4,
                w1: w(vec![Zeta, Perm(t13.clone()), Eta, Perm(t13.clone())]),
                w2: w(vec![Perm(t13.clone()), Eta, Perm(t13.clone()), Zeta]),
                expected: f_21,
                kernel: kt(vec![(2, 1), (1, n - 3)]),
                coset: None,
                distinct_nonperm: true,
            },
        ],
        MonoidFamily::Sn => {
            return Err(Error::Invalid("no lower-bound witnesses for S_n".into()))
        }
    };

    let mut out = Vec::new();
    for c in cases {
        let mut failures = Vec::new();
        let e1 = c.w1.eval(n)?;
        let e2 = c.w2.eval(n)?;
        if e1 != e2 {
            failures.push(format!("evaluations differ: {} vs {}", e1, e2));
        }
        if e1 != c.expected {
            failures.push(format!("evaluation {} is not the stated element {}", e1, c.expected));
        }
        if e1.rank() != n - 2 {
            failures.push(format!("rank {} ≠ n - 2", e1.rank()));
        }
        if let Some(kt) = &c.kernel {
            if &e1.kernel_type() != kt {
                failures.push(format!("kernel type {} ≠ {}", e1.kernel_type(), kt));
            }
        }
        let p1 = c.w1.leading_permutation(n)?;
        let p2 = c.w2.leading_permutation(n)?;
        if let Some(stab) = c.coset {
            let same = PartialTransformation::same_left_coset(stab, &p1, &p2)?;
            if same {
                failures.push(format!(
                    "leading permutations {} and {} lie in the same {:?} coset",
                    p1, p2, stab
                ));
            }
            if c.w1.leading_nonpermutation() != c.w2.leading_nonpermutation() {
                failures.push("leading non-permutations should agree".into());
            }
        }
        if c.distinct_nonperm {
            let k1 = c.w1.leading_nonpermutation();
            let k2 = c.w2.leading_nonpermutation();
            if k1 == k2 {
                failures.push(format!("leading non-permutations {:?} and {:?} agree", k1, k2));
            }
        }
        let _ = &id;
        out.push(WitnessCheck {
            lemma: c.lemma.to_string(),
            case: c.case,
            pass: failures.is_empty(),
            failures,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Alternating-group lemmas.
// ---------------------------------------------------------------------------

/// The seven generating-set lemmas for alternating groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AltLemma {
    L31,
    L32,
    L33,
    L34,
    L35,
    L36,
    L37,
}

impl AltLemma {
    pub fn parse(s: &str) -> Result<AltLemma> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "L31" | "L3.1" => AltLemma::L31,
            "L32" | "L3.2" => AltLemma::L32,
            "L33" | "L3.3" => AltLemma::L33,
            "L34" | "L3.4" => AltLemma::L34,
            "L35" | "L3.5" => AltLemma::L35,
            "L36" | "L3.6" => AltLemma::L36,
            "L37" | "L3.7" => AltLemma::L37,
            other => return Err(Error::Invalid(format!("unknown lemma {:?}", other))),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: AltLemma,
    pub degree: usize,
    pub point_set: Vec<usize>,
    pub expected_size: usize,
    pub actual_size: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

fn cycle_range(from: usize, to: usize) -> String {
    let pts: Vec<String> = (from..=to).map(|x| x.to_string()).collect();
    format!("({})", pts.join(","))
}

/// The conjugating word `τ = βαβ⁻¹αβ⁻¹α⁻¹βα⁻¹` (same shape for ρ).
fn tau_word(
    alpha: &PartialTransformation,
    beta: &PartialTransformation,
) -> Result<PartialTransformation> {
    let ai = alpha.inverse()?;
    let bi = beta.inverse()?;
    beta.compose(alpha)?
        .compose(&bi)?
        .compose(alpha)?
        .compose(&bi)?
        .compose(&ai)?
        .compose(beta)?
        .compose(&ai)
}

/// The generating triple `{(βα⁻¹)², τ, τ^{αβ⁻¹}}`.
fn conj_generators(
    alpha: &PartialTransformation,
    beta: &PartialTransformation,
) -> Result<Vec<PartialTransformation>> {
    let tau = tau_word(alpha, beta)?;
    let ba = beta.compose(&alpha.inverse()?)?;
    let ab = alpha.compose(&beta.inverse()?)?;
    Ok(vec![ba.compose(&ba)?, tau.clone(), tau.conjugate(&ab)?])
}

fn lemma_generators(lemma: AltLemma, n: usize) -> Result<(Vec<PartialTransformation>, Vec<usize>)> {
    let parity_err = |need: &'static str| Err(Error::Invalid(format!("{:?} needs {}", lemma, need)));
    match lemma {
        AltLemma::L31 => {
            if n < 3 {
                return Err(Error::UnsupportedDegree(n, "L31 (n ≥ 3)"));
            }
            let gens = (3..=n)
                .map(|i| parse_cycles(n, &format!("(1,2,{})", i)))
                .collect::<Result<Vec<_>>>()?;
            Ok((gens, (1..=n).collect()))
        }
        AltLemma::L32 => {
            if n < 5 {
                return Err(Error::UnsupportedDegree(n, "L32 (n ≥ 5)"));
            }
            let gens = (2..=n - 2)
                .map(|i| parse_cycles(n, &format!("(1,{},{})", i, i + 2)))
                .collect::<Result<Vec<_>>>()?;
            Ok((gens, (1..=n).collect()))
        }
        AltLemma::L33 => {
            if n < 8 || n % 2 != 0 {
                return parity_err("even n ≥ 8");
            }
            let alpha = parse_cycles(n, &cycle_range(3, n))?;
            let beta = parse_cycles(n, "(3,7,6,4,5)")?;
            Ok((conj_generators(&alpha, &beta)?, (3..=n).collect()))
        }
        AltLemma::L34 => {
            if n < 7 || n % 2 != 1 {
                return parity_err("odd n ≥ 7");
            }
            let alpha = parse_cycles(n, &cycle_range(3, n))?;
            let beta = parse_cycles(n, "(4,6)")?;
            Ok((conj_generators(&alpha, &beta)?, (3..=n).collect()))
        }
        AltLemma::L35 => {
            if n < 8 || n % 2 != 0 {
                return parity_err("even n > 7");
            }
            let alpha = parse_cycles(n, "(3,5,4)")?;
            let beta = parse_cycles(n, &cycle_range(3, n))?;
            Ok((conj_generators(&alpha, &beta)?, (3..=n).collect()))
        }
        AltLemma::L36 => {
            if n < 7 || n % 2 != 1 {
                return parity_err("odd n ≥ 7");
            }
            let gamma = parse_cycles(n, &cycle_range(2, n))?;
            let delta = parse_cycles(n, "(2,3)(4,6)")?;
            Ok((conj_generators(&gamma, &delta).map(swap_rho)?, (2..=n).collect()))
        }
        AltLemma::L37 => {
            if n < 8 || n % 2 != 0 {
                return parity_err("even n > 7");
            }
            let gamma = parse_cycles(n, "(2,3,5,4)")?;
            let delta = parse_cycles(n, &cycle_range(2, n))?;
            Ok((conj_generators(&gamma, &delta).map(swap_rho)?, (2..=n).collect()))
        }
    }
}

/// For the η-lemmas the roles are `ρ = δγδ⁻¹γδ⁻¹γ⁻¹δγ⁻¹` with generators
/// `{(δγ⁻¹)², ρ, ρ^{γδ⁻¹}}`, i.e. `conj_generators(γ, δ)` verbatim.
fn swap_rho(gens: Vec<PartialTransformation>) -> Vec<PartialTransformation> {
    gens
}

/// Checks that the lemma's generating set generates the alternating group on
/// the stated point set: correct size, all elements even, transitive on the
/// point set, complement fixed pointwise.
pub fn alt_group_lemma_check(lemma: AltLemma, n: usize) -> Result<LemmaReport> {
    let (gens, points) = lemma_generators(lemma, n)?;
    let m = points.len();
    let expected = factorial(m)? / 2;
    let group = generate_group(&gens, default_limit(expected))?;
    let mut failures = Vec::new();
    if group.size() != expected {
        failures.push(format!("closure size {} ≠ |A_m| = {}", group.size(), expected));
    }
    for g in group.elements() {
        if g.parity()? == Parity::Odd {
            failures.push(format!("odd element {}", g));
            break;
        }
    }
    // complement fixed pointwise by every generator
    for g in &gens {
        for x in 1..=n {
            if !points.contains(&x) && g.image_of(x) != Some(x) {
                failures.push(format!("generator {} moves point {} outside {:?}", g, x, points));
            }
        }
    }
    // transitivity on the point set: orbit of the least point
    let start = points[0];
    let mut orbit = vec![false; n + 1];
    orbit[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = g.image_of(x).expect("permutation");
            if !orbit[y] {
                orbit[y] = true;
                stack.push(y);
            }
        }
    }
    if !points.iter().all(|&x| orbit[x]) {
        failures.push("not transitive on the stated point set".into());
    }
    Ok(LemmaReport {
        lemma,
        degree: n,
        point_set: points,
        expected_size: expected,
        actual_size: group.size(),
        pass: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub lemma: AltLemma,
    pub degree: usize,
    pub identities: Vec<(String, bool)>,
    pub pass: bool,
}

/// Checks the cycle decompositions quoted inside the lemma proofs against
/// direct computation.
pub fn intermediate_identity_check(lemma: AltLemma, n: usize) -> Result<IdentityReport> {
    let mut identities: Vec<(String, bool)> = Vec::new();
    let mut check = |name: String, lhs: &PartialTransformation, rhs: &PartialTransformation| {
        identities.push((name, lhs == rhs));
    };
    let cyc = |cycles: Vec<Vec<usize>>| -> Result<PartialTransformation> {
        CycleNotation::new(n, cycles)?.to_permutation()
    };
    let desc1 = |from: usize, to: usize| -> Vec<usize> { (to..=from).rev().collect() };
    let desc2 = |from: usize, to: usize| -> Vec<usize> {
        (to..=from).rev().step_by(2).collect()
    };
    let asc2 = |from: usize, to: usize| -> Vec<usize> {
        if from > to {
            Vec::new()
        } else {
            (from..=to).step_by(2).collect()
        }
    };
    let chain = |parts: Vec<Vec<usize>>| -> Vec<usize> { parts.concat() };

    match lemma {
        AltLemma::L32 => {
            if n < 7 {
                return Err(Error::UnsupportedDegree(n, "L32 identities (n ≥ 7)"));
            }
            // (1,2,2i) = Π_{k<i} (1,2k,2k+2) for 2i ≤ n
            for i in 2..=n / 2 {
                let mut prod = PartialTransformation::identity(n)?;
                for k in 1..i {
                    prod = prod.compose(&parse_cycles(
                        n,
                        &format!("(1,{},{})", 2 * k, 2 * k + 2),
                    )?)?;
                }
                let target = parse_cycles(n, &format!("(1,2,{})", 2 * i))?;
                check(format!("(1,2,{}) as a product of (1,2k,2k+2)", 2 * i), &prod, &target);
            }
            // commutator forms for odd targets
            let base = parse_cycles(n, "(1,2,4)")?;
            let mut i = 1;
            while 2 * i + 3 <= n {
                let g1 = parse_cycles(n, &format!("(1,{},{})", 2 * i + 1, 2 * i + 3))?;
                let c1 = base.commutator(&g1)?;
                let t1 = parse_cycles(n, &format!("(1,2,{})", 2 * i + 1))?;
                check(format!("(1,2,{}) = [(1,2,4),(1,{},{})]", 2 * i + 1, 2 * i + 1, 2 * i + 3), &c1, &t1);
                let g2 = parse_cycles(n, &format!("(1,{},{})", 2 * i + 3, 2 * i + 1))?;
                let c2 = base.commutator(&g2)?;
                let t2 = parse_cycles(n, &format!("(1,2,{})", 2 * i + 3))?;
                check(format!("(1,2,{}) = [(1,2,4),(1,{},{})]", 2 * i + 3, 2 * i + 3, 2 * i + 1), &c2, &t2);
                i += 1;
            }
        }
        AltLemma::L33 => {
            if n < 10 || n % 2 != 0 {
                return Err(Error::UnsupportedDegree(n, "L33 identities (even n ≥ 10)"));
            }
            let alpha = parse_cycles(n, &cycle_range(3, n))?;
            let beta = parse_cycles(n, "(3,7,6,4,5)")?;
            let ba = beta.compose(&alpha.inverse()?)?;
            check(
                "βα⁻¹ = (3,6)(5,n,n-1,...,8,7)".into(),
                &ba,
                &cyc(vec![vec![3, 6], chain(vec![vec![5], desc1(n, 7)])])?,
            );
            check(
                "(βα⁻¹)² = (5,n-1,n-3,...,7,n,n-2,...,8)".into(),
                &ba.compose(&ba)?,
                &cyc(vec![chain(vec![vec![5], desc2(n - 1, 7), desc2(n, 8)])])?,
            );
            let tau = tau_word(&alpha, &beta)?;
            check(
                "τ = (3,7,n)(4,5,n-1)".into(),
                &tau,
                &cyc(vec![vec![3, 7, n], vec![4, 5, n - 1]])?,
            );
            // (βα⁻¹)^{n-5} = (3,6) and τ·(τ⁻¹)^{(βα⁻¹)^{n-5}} = (3,6,n)
            let mut pow = PartialTransformation::identity(n)?;
            for _ in 0..n - 5 {
                pow = pow.compose(&ba)?;
            }
            check("(βα⁻¹)^{n-5} = (3,6)".into(), &pow, &cyc(vec![vec![3, 6]])?);
            let lhs = tau.compose(&tau.inverse()?.conjugate(&pow)?)?;
            check("τ·(τ⁻¹)^{(βα⁻¹)^{n-5}} = (3,6,n)".into(), &lhs, &cyc(vec![vec![3, 6, n]])?);
        }
        AltLemma::L34 => {
            if n < 7 || n % 2 != 1 {
                return Err(Error::UnsupportedDegree(n, "L34 identities (odd n ≥ 7)"));
            }
            let alpha = parse_cycles(n, &cycle_range(3, n))?;
            let beta = parse_cycles(n, "(4,6)")?;
            let ba = beta.compose(&alpha.inverse()?)?;
            check(
                "βα⁻¹ = (3,n,n-1,...,7,6)(4,5)".into(),
                &ba,
                &cyc(vec![chain(vec![vec![3], desc1(n, 6)]), vec![4, 5]])?,
            );
            check(
                "(βα⁻¹)² = (3,n-1,n-3,...,6,n,n-2,...,7)".into(),
                &ba.compose(&ba)?,
                &cyc(vec![chain(vec![vec![3], desc2(n - 1, 6), desc2(n, 7)])])?,
            );
            let tau = tau_word(&alpha, &beta)?;
            check("τ = (4,6,n)".into(), &tau, &cyc(vec![vec![4, 6, n]])?);
        }
        AltLemma::L35 => {
            if n < 8 || n % 2 != 0 {
                return Err(Error::UnsupportedDegree(n, "L35 identities (even n ≥ 8)"));
            }
            let alpha = parse_cycles(n, "(3,5,4)")?;
            let beta = parse_cycles(n, &cycle_range(3, n))?;
            let ba = beta.compose(&alpha.inverse()?)?;
            check(
                "βα⁻¹ = (3,5,6,...,n,4)".into(),
                &ba,
                &cyc(vec![chain(vec![vec![3, 5], (6..=n).collect(), vec![4]])])?,
            );
            check(
                "(βα⁻¹)² = (3,6,8,...,n)(4,5,7,...,n-1)".into(),
                &ba.compose(&ba)?,
                &cyc(vec![
                    chain(vec![vec![3], asc2(6, n)]),
                    chain(vec![vec![4, 5], asc2(7, n - 1)]),
                ])?,
            );
            let tau = tau_word(&alpha, &beta)?;
            check("τ = (3,n,4,6,5)".into(), &tau, &cyc(vec![vec![3, n, 4, 6, 5]])?);
            let ab = alpha.compose(&beta.inverse()?)?;
            let tau_c = tau.conjugate(&ab)?;
            check(
                "τ^{αβ⁻¹} = (3,4,n-1,n,5)".into(),
                &tau_c,
                &cyc(vec![vec![3, 4, n - 1, n, 5]])?,
            );
            let mut prod = tau_c.compose(&tau_c)?.compose(&tau_c)?;
            prod = prod.compose(&tau)?.compose(&tau)?;
            prod = prod.compose(&tau_c)?.compose(&tau)?;
            check("(τ^{αβ⁻¹})³τ²τ^{αβ⁻¹}τ = (3,5,4)".into(), &prod, &cyc(vec![vec![3, 5, 4]])?);
            let tb2 = tau.compose(&ba.compose(&ba)?)?;
            check(
                "τ(βα⁻¹)² = (4,8,10,...,n,5,6,7,9,...,n-1)".into(),
                &tb2,
                &cyc(vec![chain(vec![vec![4], asc2(8, n), vec![5, 6, 7], asc2(9, n - 1)])])?,
            );
        }
        AltLemma::L36 => {
            if n < 9 || n % 2 != 1 {
                return Err(Error::UnsupportedDegree(n, "L36 identities (odd n ≥ 9)"));
            }
            let gamma = parse_cycles(n, &cycle_range(2, n))?;
            let delta = parse_cycles(n, "(2,3)(4,6)")?;
            let dg = delta.compose(&gamma.inverse()?)?;
            check(
                "δγ⁻¹ = (3,n,n-1,...,6)(4,5)".into(),
                &dg,
                &cyc(vec![chain(vec![vec![3], desc1(n, 6)]), vec![4, 5]])?,
            );
            check(
                "(δγ⁻¹)² = (3,n-1,n-3,...,6,n,n-2,...,7)".into(),
                &dg.compose(&dg)?,
                &cyc(vec![chain(vec![vec![3], desc2(n - 1, 6), desc2(n, 7)])])?,
            );
            let rho = tau_word(&gamma, &delta)?;
            check(
                "ρ = (2,3,n-1)(4,6,n)".into(),
                &rho,
                &cyc(vec![vec![2, 3, n - 1], vec![4, 6, n]])?,
            );
            let gd = gamma.compose(&delta.inverse()?)?;
            check(
                "ρ^{γδ⁻¹} = (2,6,n)(3,5,7)".into(),
                &rho.conjugate(&gd)?,
                &cyc(vec![vec![2, 6, n], vec![3, 5, 7]])?,
            );
            // (ρ^{(δγ⁻¹)^{n-5}})⁻¹ = (2,n,6)(3,7,4) and its product with
            // ρ^{γδ⁻¹} is (4,5,7)
            let mut pow = PartialTransformation::identity(n)?;
            for _ in 0..n - 5 {
                pow = pow.compose(&dg)?;
            }
            let lhs = rho.conjugate(&pow)?.inverse()?;
            check(
                "(ρ^{(δγ⁻¹)^{n-5}})⁻¹ = (2,n,6)(3,7,4)".into(),
                &lhs,
                &cyc(vec![vec![2, n, 6], vec![3, 7, 4]])?,
            );
            check(
                "(ρ^{(δγ⁻¹)^{n-5}})⁻¹·ρ^{γδ⁻¹} = (4,5,7)".into(),
                &lhs.compose(&rho.conjugate(&gd)?)?,
                &cyc(vec![vec![4, 5, 7]])?,
            );
        }
        AltLemma::L37 => {
            if n < 8 || n % 2 != 0 {
                return Err(Error::UnsupportedDegree(n, "L37 identities (even n ≥ 8)"));
            }
            let gamma = parse_cycles(n, "(2,3,5,4)")?;
            let delta = parse_cycles(n, &cycle_range(2, n))?;
            let dg = delta.compose(&gamma.inverse()?)?;
            check(
                "δγ⁻¹ = (3,5,6,...,n,4)".into(),
                &dg,
                &cyc(vec![chain(vec![vec![3, 5], (6..=n).collect(), vec![4]])])?,
            );
            check(
                "(δγ⁻¹)² = (3,6,8,...,n)(4,5,7,...,n-1)".into(),
                &dg.compose(&dg)?,
                &cyc(vec![
                    chain(vec![vec![3], asc2(6, n)]),
                    chain(vec![vec![4, 5], asc2(7, n - 1)]),
                ])?,
            );
            let rho = tau_word(&gamma, &delta)?;
            check("ρ = (2,4,6,5)(3,n)".into(), &rho, &cyc(vec![vec![2, 4, 6, 5], vec![3, n]])?);
            let gd = gamma.compose(&delta.inverse()?)?;
            check(
                "ρ^{γδ⁻¹} = (2,n,5,3)(4,n-1)".into(),
                &rho.conjugate(&gd)?,
                &cyc(vec![vec![2, n, 5, 3], vec![4, n - 1]])?,
            );
            let rho2c = rho.compose(&rho)?.conjugate(&gd)?;
            check("(ρ²)^{γδ⁻¹} = (2,5)(3,n)".into(), &rho2c, &cyc(vec![vec![2, 5], vec![3, n]])?);
            check(
                "(ρ²)^{γδ⁻¹}·ρ = (4,6,5)".into(),
                &rho2c.compose(&rho)?,
                &cyc(vec![vec![4, 6, 5]])?,
            );
            let big = dg
                .compose(&dg)?
                .compose(&rho.conjugate(&gd)?.compose(&rho.conjugate(&gd)?)?)?
                .compose(&rho)?;
            check(
                "(δγ⁻¹)²(ρ^{γδ⁻¹})²ρ = (3,5,7,...,n-1,6,8,...,n)".into(),
                &big,
                &cyc(vec![chain(vec![vec![3], asc2(5, n - 1), asc2(6, n)])])?,
            );
        }
        AltLemma::L31 => {
            return Err(Error::Invalid(
                "L31 quotes no intermediate identities".into(),
            ))
        }
    }
    let pass = identities.iter().all(|(_, ok)| *ok);
    Ok(IdentityReport { lemma, degree: n, identities, pass })
}

// ---------------------------------------------------------------------------
// Irredundancy.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IrredundancyOutcome {
    /// Removing the relation changes the presented monoid.
    Irredundant,
    /// Removal leaves the size unchanged; since the smaller presentation
    /// surjects onto the target, size equality certifies redundancy.
    Redundant,
    /// The limit policy (at least 4x the target) was not met.
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrredundancyReport {
    pub label: String,
    pub outcome: IrredundancyOutcome,
    pub dropped_size: Option<usize>,
    pub limit: usize,
    pub target: usize,
}

/// Drops the labeled relation and re-enumerates. `Finite(size ≠ target)` or
/// a certified `Overflow` (limit at least 4x target) means the relation is
/// irredundant; `Finite(size = target)` means redundant.
pub fn irredundancy_check(
    p: &Presentation,
    spec: MonoidSpec,
    label: &str,
    limit: usize,
) -> Result<IrredundancyReport> {
    let target = order_of(spec)?;
    let dropped = p.without_relation(label)?;
    let result = enumerate_presentation(&dropped, limit);
    let (outcome, dropped_size) = match result.outcome {
        Outcome::Finite(s) if s == target => (IrredundancyOutcome::Redundant, Some(s)),
        Outcome::Finite(s) => (IrredundancyOutcome::Irredundant, Some(s)),
        Outcome::Overflow(_) => {
            if limit >= target.saturating_mul(4) {
                (IrredundancyOutcome::Irredundant, None)
            } else {
                (IrredundancyOutcome::Unknown, None)
            }
        }
    };
    Ok(IrredundancyReport { label: label.to_string(), outcome, dropped_size, limit, target })
}

// ---------------------------------------------------------------------------
// Relation counting.
// ---------------------------------------------------------------------------

/// Number of non-`S_n` relations (labels required).
pub fn non_sn_relation_count(p: &Presentation) -> Result<usize> {
    Ok(p.non_sn_relations()?.len())
}

/// Map rank → number of non-`S_n` relations of that rank, attributing each
/// relation the rank of its left-hand side's evaluation.
pub fn rank_profile(p: &Presentation, asg: &Assignment) -> Result<BTreeMap<usize, usize>> {
    let mut profile = BTreeMap::new();
    for r in p.non_sn_relations()? {
        let rank = evaluate(&r.lhs, asg)?.rank();
        *profile.entry(rank).or_insert(0) += 1;
    }
    Ok(profile)
}

// ---------------------------------------------------------------------------
// Leading-permutation coset invariance (exhaustive, short words).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CosetInvarianceReport {
    pub family: MonoidFamily,
    pub degree: usize,
    pub max_len: usize,
    pub words_checked: usize,
    pub classes_checked: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Exhaustively checks, over all words up to `max_len` in the standard
/// generators, that words of rank `n - 1` with equal evaluations have
/// leading permutations in the same coset of the relevant stabiliser — and,
/// for `PT_n`, the same leading non-permutation.
pub fn leading_coset_invariance(
    family: MonoidFamily,
    n: usize,
    max_len: usize,
) -> Result<CosetInvarianceReport> {
    let (alphabet, asg) = standard_generators(MonoidSpec::new(family, n))?;
    let nletters = alphabet.len();
    let id = PartialTransformation::identity(n)?;
    // representative per rank-(n-1) element: (leading perm, leading letter)
    let mut reps: std::collections::HashMap<
        PartialTransformation,
        (PartialTransformation, Option<Letter>),
    > = std::collections::HashMap::new();
    let mut words_checked = 0usize;
    let mut counterexample = None;

    // Iterative DFS over all words of length ≤ max_len; carry the evaluation
    // and the leading parts incrementally.
    struct Frame {
        eval: PartialTransformation,
        leading: PartialTransformation,
        lead_letter: Option<Letter>,
        depth: usize,
        next_letter: usize,
    }
    let mut stack = vec![Frame {
        eval: id.clone(),
        leading: id.clone(),
        lead_letter: None,
        depth: 0,
        next_letter: 0,
    }];
    'outer: while let Some(top) = stack.last_mut() {
        if top.depth >= max_len || top.next_letter >= nletters {
            stack.pop();
            continue;
        }
        let l = Letter(top.next_letter as u16);
        top.next_letter += 1;
        let eval = top.eval.compose(asg.get(l)?)?;
        let (leading, lead_letter) = if top.lead_letter.is_none() {
            if eval.is_permutation() {
                (eval.clone(), None)
            } else {
                (top.leading.clone(), Some(l))
            }
        } else {
            (top.leading.clone(), top.lead_letter)
        };
        let depth = top.depth + 1;
        words_checked += 1;
        if eval.rank() == n - 1 {
            match reps.get(&eval) {
                None => {
                    reps.insert(eval.clone(), (leading.clone(), lead_letter));
                }
                Some((rep_leading, rep_letter)) => {
                    let ok = match family {
                        MonoidFamily::In => PartialTransformation::same_left_coset(
                            Stabiliser::Stab1,
                            rep_leading,
                            &leading,
                        )?,
                        MonoidFamily::Tn => PartialTransformation::same_left_coset(
                            Stabiliser::Stab12,
                            rep_leading,
                            &leading,
                        )?,
                        MonoidFamily::Ptn => {
                            let same_kind = rep_letter == &lead_letter;
                            let stab = match lead_letter.map(|l| alphabet.name(l).to_string()) {
                                Some(name) if name == "eta" => Stabiliser::Stab1,
                                _ => Stabiliser::Stab12,
                            };
                            same_kind
                                && PartialTransformation::same_left_coset(
                                    stab,
                                    rep_leading,
                                    &leading,
                                )?
                        }
                        MonoidFamily::Sn => true,
                    };
                    if !ok && counterexample.is_none() {
                        counterexample = Some(format!(
                            "element {} reached with leading permutations {} and {}",
                            eval, rep_leading, leading
                        ));
                        break 'outer;
                    }
                }
            }
        }
        stack.push(Frame { eval, leading, lead_letter, depth, next_letter: 0 });
    }

    Ok(CosetInvarianceReport {
        family,
        degree: n,
        max_len,
        words_checked,
        classes_checked: reps.len(),
        pass: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::sn::{moore, sn_tiny};

    #[test]
    fn orders() {
        assert_eq!(order_of(MonoidSpec::new(MonoidFamily::Tn, 4)).unwrap(), 256);
        assert_eq!(order_of(MonoidSpec::new(MonoidFamily::In, 4)).unwrap(), 209);
        assert_eq!(order_of(MonoidSpec::new(MonoidFamily::Ptn, 5)).unwrap(), 7776);
        assert_eq!(order_of(MonoidSpec::new(MonoidFamily::Sn, 5)).unwrap(), 120);
        assert_eq!(order_of(MonoidSpec::new(MonoidFamily::In, 1)).unwrap(), 2);
        assert!(order_of(MonoidSpec::new(MonoidFamily::Tn, 30)).is_err());
    }

    #[test]
    fn in_order_matches_brute_force() {
        // Oracle: enumerate every image tuple and count partial injections.
        for n in 1..=6usize {
            let mut count = 0usize;
            let mut tuple = vec![0usize; n]; // 0 = undefined, 1..=n images
            loop {
                let mut seen = vec![false; n + 1];
                let mut ok = true;
                for &t in &tuple {
                    if t > 0 {
                        if seen[t] {
                            ok = false;
                            break;
                        }
                        seen[t] = true;
                    }
                }
                if ok {
                    count += 1;
                }
                // odometer
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    tuple[i] += 1;
                    if tuple[i] <= n {
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            assert_eq!(
                order_of(MonoidSpec::new(MonoidFamily::In, n)).unwrap(),
                count,
                "n = {}",
                n
            );
        }
    }

    #[test]
    fn check_relations_flags_corruption() {
        let sp = moore(5).unwrap();
        let (mut p, asg) = builders::in_3rel(&sp).unwrap();
        assert!(check_relations(&p, &asg).unwrap().is_empty());
        // corrupt I2's right-hand side: η(2,3) → η(1,2)
        let w12 = sp.word_for_cycles("(1,2)").unwrap();
        let eta = p.alphabet.letter("eta").unwrap();
        let idx = p.relations.iter().position(|r| r.label.as_deref() == Some("I2")).unwrap();
        p.relations[idx].rhs = Word::concat(&[&Word::single(eta), &w12]);
        assert_eq!(check_relations(&p, &asg).unwrap(), vec!["I2".to_string()]);
    }

    #[test]
    fn verify_in_3rel_small() {
        let sp = sn_tiny(3).unwrap();
        let (p, asg) = builders::in_3rel(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::In, 3);
        let report = verify_defines(&p, &asg, spec, default_limit(34)).unwrap();
        assert!(report.verified(), "{:?}", report);
        assert_eq!(report.presented, Some(PresentedSize::Finite(34)));
    }

    #[test]
    fn leading_parts_examples() {
        let sp = moore(5).unwrap();
        let (p, asg) = builders::tn_aizenstat(&sp).unwrap();
        let z = p.alphabet.letter("zeta").unwrap();
        // w = ζ...: leading permutation is the identity
        let w = Word::from_letters([z, z]);
        assert_eq!(
            leading_permutation(&w, &asg).unwrap(),
            PartialTransformation::identity(5).unwrap()
        );
        assert_eq!(leading_nonpermutation(&w, &asg).unwrap(), Some(z));
        // w = (2,3)ζ(2,3)ζ: leading permutation is (2,3)
        let w23 = sp.word_for_cycles("(2,3)").unwrap();
        let zw = Word::single(z);
        let w = Word::concat(&[&w23, &zw, &w23, &zw]);
        assert_eq!(
            leading_permutation(&w, &asg).unwrap(),
            parse_cycles(5, "(2,3)").unwrap()
        );
        // pure S_n word: no leading non-permutation
        assert_eq!(leading_nonpermutation(&w23, &asg).unwrap(), None);
    }

    #[test]
    fn witnesses_pass_at_4_and_5() {
        for n in [4, 5] {
            for family in [MonoidFamily::In, MonoidFamily::Tn, MonoidFamily::Ptn] {
                for c in lower_bound_witnesses(family, n).unwrap() {
                    assert!(c.pass, "{:?} n={} case {}: {:?}", family, n, c.case, c.failures);
                }
            }
        }
    }

    #[test]
    fn alt_lemmas_small() {
        let r = alt_group_lemma_check(AltLemma::L31, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.actual_size, 12);
        let r = alt_group_lemma_check(AltLemma::L32, 6).unwrap();
        assert!(r.pass);
        assert_eq!(r.actual_size, 360);
        assert!(alt_group_lemma_check(AltLemma::L34, 8).is_err());
    }

    #[test]
    fn identities_l34() {
        let r = intermediate_identity_check(AltLemma::L34, 9).unwrap();
        assert!(r.pass, "{:?}", r.identities);
    }

    #[test]
    fn rank_profiles_in3() {
        let sp = moore(5).unwrap();
        let (p, asg) = builders::in_3rel(&sp).unwrap();
        assert_eq!(non_sn_relation_count(&p).unwrap(), 3);
        let profile = rank_profile(&p, &asg).unwrap();
        assert_eq!(profile.get(&4), Some(&2));
        assert_eq!(profile.get(&3), Some(&1));
    }

    #[test]
    fn irredundancy_duplicate_is_redundant() {
        let sp = sn_tiny(3).unwrap();
        let (mut p, _asg) = builders::in_3rel(&sp).unwrap();
        let mut dup = p.relation_by_label("I2").unwrap().clone();
        dup.label = Some("I2copy".into());
        p.relations.push(dup);
        let spec = MonoidSpec::new(MonoidFamily::In, 3);
        let r = irredundancy_check(&p, spec, "I2copy", default_limit(34)).unwrap();
        assert_eq!(r.outcome, IrredundancyOutcome::Redundant);
    }
}
