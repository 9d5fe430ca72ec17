//! Explicit permutation groups on `{0..n−1}`.
//!
//! Groups are fully materialized element lists — no stabilizer chains. At
//! desk scale (symmetric degree ≤ 8, affine/dihedral degree ≤ 32) this keeps
//! every oracle an auditable exhaustive scan.

use std::collections::HashSet;

use itertools::Itertools;

use crate::affine::{enumerate_group, AffineMap};
use crate::dichotomy::PointAction;
use crate::residue::{euler_phi, Modulus};
use crate::{Error, Result};

/// Default cap on the order of a materialized group.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

const SYMMETRIC_DEGREE_CAP: u64 = 8;

/// A permutation in one-line notation: `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(images.clone(), n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`. Matches the affine
    /// composition convention, so the affine embedding is a homomorphism.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| self.images[im] == i)
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i != im)
    }

    /// Involution with no fixed points.
    pub fn is_quasipolarity(&self) -> bool {
        self.is_involution() && self.is_derangement()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl PointAction for Permutation {
    fn degree(&self) -> usize {
        self.images.len()
    }

    fn image_of(&self, x: usize) -> usize {
        self.images[x]
    }
}

impl std::fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The built-in group constructors.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    Affine,
    Dihedral,
    Symmetric,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Affine => "affine",
            GroupKind::Dihedral => "dihedral",
            GroupKind::Symmetric => "symmetric",
        }
    }
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "affine" => Ok(GroupKind::Affine),
            "dihedral" => Ok(GroupKind::Dihedral),
            "symmetric" => Ok(GroupKind::Symmetric),
            other => Err(format!("unknown group kind `{other}`")),
        }
    }
}

/// A finite permutation group, materialized as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.binary_search(&Permutation::identity(degree)).is_ok());
        PermGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }
}

/// The subgroup generated by `generators`, materialized by closure under
/// composition. Fails if the order would exceed `cap`.
pub fn closure(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
    let degree = match generators.first() {
        Some(g) => g.degree(),
        None => return Err(Error::NotABijection(vec![], 0)),
    };
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }

    let mut known: HashSet<Permutation> = HashSet::new();
    known.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let next = g.compose(&p);
            if !known.contains(&next) {
                if known.len() >= cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                known.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    // Finite closure under left multiplication by generators contains all
    // inverses, so this is the generated group.
    Ok(PermGroup::from_elements(degree, known.into_iter().collect()))
}

/// Construct a built-in group on `Z_n` points.
///
/// * symmetric — all `n!` permutations (degree capped at 8);
/// * dihedral — all `x ↦ ±x + a`, order `2n`;
/// * affine — all `x ↦ vx + u` with `v` a unit, order `n·φ(n)`.
pub fn builtin_group(kind: GroupKind, modulus: Modulus) -> Result<PermGroup> {
    let n = modulus.get();
    match kind {
        GroupKind::Symmetric => {
            if n > SYMMETRIC_DEGREE_CAP {
                return Err(Error::SymmetricDegreeTooLarge { got: n, max: SYMMETRIC_DEGREE_CAP });
            }
            let elements = (0..n as usize)
                .permutations(n as usize)
                .map(|images| Permutation { images })
                .collect();
            Ok(PermGroup::from_elements(n as usize, elements))
        }
        GroupKind::Dihedral => {
            if n < 4 {
                // On Z_2, x ↦ −x+a collapses onto the translations.
                return Err(Error::DihedralDegenerate(n));
            }
            let mut elements = Vec::with_capacity(2 * n as usize);
            for a in 0..n {
                elements.push(translation_reflection(n, a, false));
                elements.push(translation_reflection(n, a, true));
            }
            Ok(PermGroup::from_elements(n as usize, elements))
        }
        GroupKind::Affine => {
            let elements = enumerate_group(modulus).iter().map(AffineMap::to_permutation).collect();
            Ok(PermGroup::from_elements(n as usize, elements))
        }
    }
}

fn translation_reflection(n: u64, a: u64, reflect: bool) -> Permutation {
    let images = (0..n)
        .map(|x| {
            let y = if reflect { (n - x) % n } else { x };
            ((y + a) % n) as usize
        })
        .collect();
    Permutation { images }
}

/// All involutive derangements of the group.
pub fn quasipolarities_of(group: &PermGroup) -> Vec<Permutation> {
    group.elements().iter().filter(|p| p.is_quasipolarity()).cloned().collect()
}

/// `|{h ∈ G : hg = gh}|` by exhaustive scan.
pub fn centralizer_size(group: &PermGroup, g: &Permutation) -> Result<u64> {
    if !group.contains(g) {
        return Err(Error::NotInGroup);
    }
    Ok(group.elements().iter().filter(|h| h.compose(g) == g.compose(h)).count() as u64)
}

/// A conjugacy class of quasipolarities of an explicit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    pub stabilizer_size: u64,
}

/// Partition the quasipolarities of `group` into conjugacy classes by brute
/// force: the orbit of `q` is `{h q h⁻¹ : h ∈ G}` and the stabilizer is
/// counted directly.
pub fn quasipolarity_classes(group: &PermGroup) -> Result<Vec<PermClass>> {
    let quasipolarities = quasipolarities_of(group);
    let mut classes: Vec<PermClass> = Vec::new();
    let mut assigned: HashSet<Permutation> = HashSet::new();

    for q in &quasipolarities {
        if assigned.contains(q) {
            continue;
        }
        let mut orbit: Vec<Permutation> = Vec::new();
        let mut stabilizer = 0u64;
        for h in group.elements() {
            let conj = h.compose(q).compose(&h.inverse());
            if &conj == q {
                stabilizer += 1;
            }
            orbit.push(conj);
        }
        orbit.sort();
        orbit.dedup();

        if stabilizer * orbit.len() as u64 != group.order() {
            return Err(Error::verification(
                "orbit-stabilizer product equals |G|",
                format!("{q} in group of order {}", group.order()),
            ));
        }
        assigned.extend(orbit.iter().cloned());
        classes.push(PermClass {
            representative: orbit[0].clone(),
            members: orbit,
            stabilizer_size: stabilizer,
        });
    }

    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// Map every affine map of `Z_n` into the corresponding permutation group
/// element, preserving enumeration order.
pub fn affine_embedding(modulus: Modulus) -> Vec<Permutation> {
    enumerate_group(modulus).iter().map(AffineMap::to_permutation).collect()
}

/// Expected order of a built-in group, used for sanity checks.
pub fn expected_order(kind: GroupKind, modulus: Modulus) -> u64 {
    let n = modulus.get();
    match kind {
        GroupKind::Symmetric => (1..=n).product(),
        GroupKind::Dihedral => 2 * n,
        GroupKind::Affine => n * euler_phi(modulus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn closure_examples() {
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(closure(&[swap], DEFAULT_CLOSURE_CAP).unwrap().order(), 2);

        // Dihedral of order 24 from a rotation and a reflection of Z_12.
        let rot = Permutation::new((0..12).map(|x| (x + 1) % 12).collect()).unwrap();
        let refl = Permutation::new((0..12).map(|x| (12 - x) % 12).collect()).unwrap();
        let d = closure(&[rot.clone(), refl], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(d.order(), 24);
        assert_eq!(d, builtin_group(GroupKind::Dihedral, m(12)).unwrap());

        // All transpositions of 4 points generate Sym(4).
        let mut transpositions = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let mut images: Vec<usize> = (0..4).collect();
                images.swap(i, j);
                transpositions.push(Permutation::new(images).unwrap());
            }
        }
        assert_eq!(closure(&transpositions, DEFAULT_CLOSURE_CAP).unwrap().order(), 24);

        assert_eq!(
            closure(&[rot], 5),
            Err(Error::ClosureCapExceeded { cap: 5 })
        );
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(builtin_group(GroupKind::Dihedral, m(12)).unwrap().order(), 24);
        assert_eq!(builtin_group(GroupKind::Affine, m(12)).unwrap().order(), 48);
        assert_eq!(builtin_group(GroupKind::Symmetric, m(4)).unwrap().order(), 24);
        assert!(matches!(
            builtin_group(GroupKind::Symmetric, m(10)),
            Err(Error::SymmetricDegreeTooLarge { .. })
        ));
        assert_eq!(builtin_group(GroupKind::Dihedral, m(2)), Err(Error::DihedralDegenerate(2)));
    }

    #[test]
    fn small_builtins_are_closed() {
        for (kind, n) in [
            (GroupKind::Affine, 8),
            (GroupKind::Dihedral, 8),
            (GroupKind::Symmetric, 4),
        ] {
            let g = builtin_group(kind, m(n)).unwrap();
            for a in g.elements() {
                assert!(g.contains(&a.inverse()));
                for b in g.elements() {
                    assert!(g.contains(&a.compose(b)));
                }
            }
        }
    }

    #[test]
    fn quasipolarity_filters() {
        let sym4 = builtin_group(GroupKind::Symmetric, m(4)).unwrap();
        let qs = quasipolarities_of(&sym4);
        let images: Vec<_> = qs.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(images, [vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]);

        let d12 = builtin_group(GroupKind::Dihedral, m(12)).unwrap();
        assert_eq!(quasipolarities_of(&d12).len(), 7);

        let a12 = builtin_group(GroupKind::Affine, m(12)).unwrap();
        assert_eq!(quasipolarities_of(&a12).len(), 12);
    }

    #[test]
    fn centralizer_examples() {
        let sym4 = builtin_group(GroupKind::Symmetric, m(4)).unwrap();
        let q = Permutation::new(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(centralizer_size(&sym4, &q).unwrap(), 8);

        let d12 = builtin_group(GroupKind::Dihedral, m(12)).unwrap();
        let rotation = Permutation::new((0..12).map(|x| (x + 6) % 12).collect()).unwrap();
        assert_eq!(centralizer_size(&d12, &rotation).unwrap(), 24);

        // The paper's dihedral example claims reflections have centralizer 2,
        // but x ↦ x+6 commutes with every reflection, so the exhaustive scan
        // (and orbit-stabilizer: 6 conjugate reflections in a group of order
        // 24) gives 4.
        let reflection = Permutation::new((0..12).map(|x| (12 - x + 1) % 12).collect()).unwrap();
        assert_eq!(centralizer_size(&d12, &reflection).unwrap(), 4);

        let not_member = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(centralizer_size(&sym4, &not_member), Err(Error::NotInGroup));
    }

    #[test]
    fn sym_quasipolarities_single_class() {
        for n in [4u64, 6, 8] {
            let g = builtin_group(GroupKind::Symmetric, m(n)).unwrap();
            let classes = quasipolarity_classes(&g).unwrap();
            assert_eq!(classes.len(), 1, "Sym({n})");
            let k = n / 2;
            let expected = 2u64.pow(k as u32) * (1..=k).product::<u64>();
            assert_eq!(classes[0].stabilizer_size, expected);
        }
    }

    #[test]
    fn lagrange_for_builtins() {
        for (kind, n) in [
            (GroupKind::Affine, 12),
            (GroupKind::Dihedral, 12),
            (GroupKind::Symmetric, 6),
        ] {
            let g = builtin_group(kind, m(n)).unwrap();
            let factorial: u64 = (1..=n).product();
            assert_eq!(factorial % g.order(), 0);
            for q in quasipolarities_of(&g) {
                assert_eq!(g.order() % centralizer_size(&g, &q).unwrap(), 0);
            }
        }
    }
}
