//! Partial transformations of `{1, ..., n}` with right-action composition.
//!
//! Everything here is exact and immutable. Points are 1-based at the API
//! boundary; the image table is stored 1-based with `0` as the undefined
//! marker. Composition is left-to-right: `(x)(fg) = ((x)f)g`, defined iff
//! `x ∈ dom(f)` and `(x)f ∈ dom(g)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree. Larger degrees are rejected, never truncated.
pub const MAX_DEGREE: usize = 64;

const UNDEF: u8 = 0;

/// A partial transformation of `{1, ..., n}`: the universal element type for
/// `PT_n`, `T_n`, `I_n` and `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialTransformation {
    images: Box<[u8]>,
}

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which stabiliser subgroup of `S_n` a coset test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabiliser {
    /// The point stabiliser of 1.
    Stab1,
    /// The setwise stabiliser of {1, 2}.
    Stab12,
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(n));
    }
    Ok(())
}

impl PartialTransformation {
    /// Builds from a 1-based image table; `None` marks an undefined point.
    pub fn new(degree: usize, images: &[Option<usize>]) -> Result<Self> {
        check_degree(degree)?;
        if images.len() != degree {
            return Err(Error::DegreeMismatch(images.len(), degree));
        }
        let mut table = vec![UNDEF; degree];
        for (i, img) in images.iter().enumerate() {
            if let Some(y) = img {
                if *y == 0 || *y > degree {
                    return Err(Error::PointOutOfRange { point: *y, degree });
                }
                table[i] = *y as u8;
            }
        }
        Ok(PartialTransformation { images: table.into() })
    }

    /// Builds a (total) transformation from a 1-based image list.
    pub fn transformation(degree: usize, images: &[usize]) -> Result<Self> {
        let opts: Vec<Option<usize>> = images.iter().map(|&y| Some(y)).collect();
        Self::new(degree, &opts)
    }

    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        let table: Vec<u8> = (1..=degree as u8).collect();
        Ok(PartialTransformation { images: table.into() })
    }

    /// The empty map: undefined everywhere.
    pub fn empty_map(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(PartialTransformation { images: vec![UNDEF; degree].into() })
    }

    /// The rank `n - 1` idempotent with `1 ∉ dom`: identity on `{2, ..., n}`.
    pub fn eta(degree: usize) -> Result<Self> {
        let mut e = Self::identity(degree)?;
        let images = e.images.as_mut();
        images[0] = UNDEF;
        Ok(e)
    }

    /// The rank `n - 1` idempotent full transformation mapping 2 to 1.
    pub fn zeta(degree: usize) -> Result<Self> {
        if degree < 2 {
            return Err(Error::DegreeOutOfRange(degree));
        }
        let mut e = Self::identity(degree)?;
        let images = e.images.as_mut();
        images[1] = 1;
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`, or `None` if undefined.
    pub fn image_of(&self, x: usize) -> Option<usize> {
        assert!(x >= 1 && x <= self.degree(), "point out of range");
        match self.images[x - 1] {
            UNDEF => None,
            y => Some(y as usize),
        }
    }

    pub fn is_transformation(&self) -> bool {
        self.images.iter().all(|&y| y != UNDEF)
    }

    pub fn is_partial_perm(&self) -> bool {
        let mut seen = 0u64;
        for &y in self.images.iter() {
            if y != UNDEF {
                let bit = 1u64 << (y - 1);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
        true
    }

    pub fn is_permutation(&self) -> bool {
        self.is_transformation() && self.is_partial_perm()
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.images[x - 1] != UNDEF).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        for &y in self.images.iter() {
            if y != UNDEF {
                seen[y as usize - 1] = true;
            }
        }
        (1..=self.degree()).filter(|&y| seen[y - 1]).collect()
    }

    pub fn rank(&self) -> usize {
        let mut seen = 0u64;
        for &y in self.images.iter() {
            if y != UNDEF {
                seen |= 1u64 << (y - 1);
            }
        }
        seen.count_ones() as usize
    }

    /// Fixed points: `x` with `(x)f = x`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.images[x - 1] as usize == x).collect()
    }

    /// Right-action composition: `(x)(fg) = ((x)f)g`.
    pub fn compose(&self, other: &PartialTransformation) -> Result<PartialTransformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let table: Vec<u8> = self
            .images
            .iter()
            .map(|&y| if y == UNDEF { UNDEF } else { other.images[y as usize - 1] })
            .collect();
        Ok(PartialTransformation { images: table.into() })
    }

    fn require_permutation(&self) -> Result<()> {
        if !self.is_permutation() {
            return Err(Error::NotAPermutation {
                rank: self.rank(),
                dom: self.domain().len(),
            });
        }
        Ok(())
    }

    pub fn inverse(&self) -> Result<PartialTransformation> {
        self.require_permutation()?;
        let mut table = vec![UNDEF; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            table[y as usize - 1] = (i + 1) as u8;
        }
        Ok(PartialTransformation { images: table.into() })
    }

    /// The conjugate `g⁻¹ f g`; `g` must be a permutation.
    pub fn conjugate(&self, g: &PartialTransformation) -> Result<PartialTransformation> {
        g.require_permutation()?;
        g.inverse()?.compose(self)?.compose(g)
    }

    /// The commutator `[f, g] = g⁻¹ f⁻¹ g f` of two permutations.
    pub fn commutator(&self, g: &PartialTransformation) -> Result<PartialTransformation> {
        self.require_permutation()?;
        g.require_permutation()?;
        g.inverse()?.compose(&self.inverse()?)?.compose(g)?.compose(self)
    }

    pub fn parity(&self) -> Result<Parity> {
        self.require_permutation()?;
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize - 1;
            }
            transpositions += len - 1;
        }
        Ok(if transpositions % 2 == 0 { Parity::Even } else { Parity::Odd })
    }

    /// Points moved by a permutation.
    pub fn support(&self) -> Result<Vec<usize>> {
        self.require_permutation()?;
        Ok((1..=self.degree()).filter(|&x| self.images[x - 1] as usize != x).collect())
    }

    /// Membership in `Stab(1) = {f ∈ S_n : (1)f = 1}`.
    pub fn in_stab1(&self) -> Result<bool> {
        self.require_permutation()?;
        Ok(self.images[0] == 1)
    }

    /// Membership in the setwise stabiliser `Stab({1, 2})`.
    pub fn in_stab12(&self) -> Result<bool> {
        self.require_permutation()?;
        if self.degree() < 2 {
            return Ok(true);
        }
        let a = self.images[0];
        let b = self.images[1];
        Ok((a == 1 || a == 2) && (b == 1 || b == 2))
    }

    /// Whether `p` and `q` lie in the same left coset of the stabiliser,
    /// i.e. `p⁻¹ q` belongs to it.
    pub fn same_left_coset(
        stab: Stabiliser,
        p: &PartialTransformation,
        q: &PartialTransformation,
    ) -> Result<bool> {
        if p.degree() != q.degree() {
            return Err(Error::DegreeMismatch(p.degree(), q.degree()));
        }
        let rep = p.inverse()?.compose(q)?;
        match stab {
            Stabiliser::Stab1 => rep.in_stab1(),
            Stabiliser::Stab12 => rep.in_stab12(),
        }
    }

    pub fn kernel_type(&self) -> KernelType {
        KernelType::of(self)
    }
}

/// Renders as a bracketed image list, `-` for undefined points.
impl fmt::Display for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, &y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match y {
                UNDEF => write!(f, "-")?,
                y => write!(f, "{}", y)?,
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The multiset of kernel-class sizes of a partial transformation, written
/// `a_1^{b_1} ... a_k^{b_k}` with class sizes decreasing. Singleton classes
/// inside the domain are included, so the sizes sum to `|dom(f)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelType {
    /// `(class_size, multiplicity)` pairs, distinct sizes, decreasing.
    pairs: Vec<(usize, usize)>,
}

impl KernelType {
    pub fn of(f: &PartialTransformation) -> KernelType {
        let n = f.degree();
        let mut class_size = vec![0usize; n];
        for &y in f.images.iter() {
            if y != UNDEF {
                class_size[y as usize - 1] += 1;
            }
        }
        let mut sizes: Vec<usize> = class_size.into_iter().filter(|&c| c > 0).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match pairs.last_mut() {
                Some((sz, mult)) if *sz == s => *mult += 1,
                _ => pairs.push((s, 1)),
            }
        }
        KernelType { pairs }
    }

    /// Builds directly from `(class_size, multiplicity)` pairs.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> KernelType {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(usize, usize)> = Vec::new();
        for (s, m) in pairs {
            match merged.last_mut() {
                Some((sz, mult)) if *sz == s => *mult += m,
                _ => merged.push((s, m)),
            }
        }
        KernelType { pairs: merged }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Sum of `a_i * b_i`, which equals `|dom(f)|`.
    pub fn total(&self) -> usize {
        self.pairs.iter().map(|&(a, b)| a * b).sum()
    }
}

impl fmt::Display for KernelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "∅");
        }
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", a, b)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::parse_cycles;

    fn pt(n: usize, images: &[i32]) -> PartialTransformation {
        let opts: Vec<Option<usize>> =
            images.iter().map(|&y| if y < 0 { None } else { Some(y as usize) }).collect();
        PartialTransformation::new(n, &opts).unwrap()
    }

    #[test]
    fn identity_composes_neutrally() {
        let f = pt(4, &[-1, 2, 3, 4]);
        let id = PartialTransformation::identity(4).unwrap();
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn eta_then_transposition() {
        // n=4, η=[-,2,3,4], σ=(1,2): ησ = [-,1,3,4]
        let eta = PartialTransformation::eta(4).unwrap();
        let sigma = parse_cycles(4, "(1,2)").unwrap();
        assert_eq!(eta.compose(&sigma).unwrap(), pt(4, &[-1, 1, 3, 4]));
    }

    #[test]
    fn zeta_is_idempotent() {
        let zeta = PartialTransformation::zeta(4).unwrap();
        assert_eq!(zeta, pt(4, &[1, 1, 3, 4]));
        assert_eq!(zeta.compose(&zeta).unwrap(), zeta);
        assert_eq!(zeta.rank(), 3);
    }

    #[test]
    fn rank_domain_image() {
        assert_eq!(PartialTransformation::identity(5).unwrap().rank(), 5);
        let f = pt(4, &[-1, 2, 3, 4]);
        assert_eq!(f.rank(), 3);
        assert_eq!(f.domain(), vec![2, 3, 4]);
        assert_eq!(f.image(), vec![2, 3, 4]);
        assert_eq!(pt(4, &[1, 1, 1, 4]).rank(), 2);
    }

    #[test]
    fn kernel_types() {
        assert_eq!(pt(4, &[1, 1, 1, 4]).kernel_type().pairs(), &[(3, 1), (1, 1)]);
        assert_eq!(pt(5, &[1, 1, 3, 3, 5]).kernel_type().pairs(), &[(2, 2), (1, 1)]);
        assert_eq!(
            PartialTransformation::identity(3).unwrap().kernel_type().pairs(),
            &[(1, 3)]
        );
        // kernel type sums to |dom|, including singletons restricted to dom
        let f = pt(4, &[1, 1, -1, 4]);
        assert_eq!(f.kernel_type().pairs(), &[(2, 1), (1, 1)]);
        assert_eq!(f.kernel_type().total(), f.domain().len());
    }

    #[test]
    fn parity_and_support() {
        let c3 = parse_cycles(5, "(1,2,3)").unwrap();
        assert_eq!(c3.parity().unwrap(), Parity::Even);
        let t = parse_cycles(5, "(1,2)").unwrap();
        assert_eq!(t.parity().unwrap(), Parity::Odd);
        assert_eq!(c3.support().unwrap(), vec![1, 2, 3]);
        assert!(pt(3, &[1, 1, 3]).parity().is_err());
    }

    #[test]
    fn conjugation_moves_points() {
        // (3,4)^(3,4,5) = (4,5) at n=5
        let f = parse_cycles(5, "(3,4)").unwrap();
        let g = parse_cycles(5, "(3,4,5)").unwrap();
        assert_eq!(f.conjugate(&g).unwrap(), parse_cycles(5, "(4,5)").unwrap());
    }

    #[test]
    fn commutator_identity_from_three_cycles() {
        // (1,2,5) = [(1,2,4),(1,5,7)] with n=7
        let f = parse_cycles(7, "(1,2,4)").unwrap();
        let g = parse_cycles(7, "(1,5,7)").unwrap();
        assert_eq!(f.commutator(&g).unwrap(), parse_cycles(7, "(1,2,5)").unwrap());
    }

    #[test]
    fn stabiliser_predicates() {
        let t23 = parse_cycles(4, "(2,3)").unwrap();
        let t12 = parse_cycles(4, "(1,2)").unwrap();
        assert!(t23.in_stab1().unwrap());
        assert!(t12.in_stab12().unwrap());
        assert!(!t12.in_stab1().unwrap());
        let id = PartialTransformation::identity(4).unwrap();
        assert!(!PartialTransformation::same_left_coset(Stabiliser::Stab12, &id, &t23).unwrap());
        assert!(PartialTransformation::same_left_coset(Stabiliser::Stab1, &id, &t23).unwrap());
    }

    #[test]
    fn composition_shrinks_rank_domain_image() {
        let f = pt(4, &[2, 2, -1, 1]);
        let g = pt(4, &[4, -1, 3, 4]);
        let fg = f.compose(&g).unwrap();
        assert!(fg.rank() <= f.rank().min(g.rank()));
        let dom_f = f.domain();
        for x in fg.domain() {
            assert!(dom_f.contains(&x));
        }
        let im_g = g.image();
        for y in fg.image() {
            assert!(im_g.contains(&y));
        }
    }

    #[test]
    fn idempotent_image_is_fixed() {
        for e in [
            PartialTransformation::eta(4).unwrap(),
            PartialTransformation::zeta(4).unwrap(),
            pt(4, &[1, 1, 1, 4]),
        ] {
            assert_eq!(e.compose(&e).unwrap(), e);
            let fixed = e.fixed_points();
            for y in e.image() {
                assert!(fixed.contains(&y));
            }
        }
    }

    #[test]
    fn degree_cap_enforced() {
        assert!(PartialTransformation::identity(64).is_ok());
        assert!(matches!(
            PartialTransformation::identity(65),
            Err(Error::DegreeOutOfRange(65))
        ));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let f = pt(3, &[1, 2, 3]);
        let g = pt(4, &[1, 2, 3, 4]);
        assert!(matches!(f.compose(&g), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn display_uses_dash_for_undef() {
        assert_eq!(pt(4, &[-1, 1, 3, 4]).to_string(), "[-, 1, 3, 4]");
        assert_eq!(pt(5, &[1, 1, 3, 3, 5]).kernel_type().to_string(), "2^2 1^1");
    }
}
