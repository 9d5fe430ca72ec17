//! Half-size subsets of `Z_n` as fixed-width bit masks, the group action on
//! them, rigidity/autocomplementarity/strength classification, and the base
//! sets `U_q` and families `M_q` attached to a quasipolarity `q`.

use crate::perm::{PermGroup, Permutation};
use crate::residue::Modulus;
use crate::{Error, Result};

/// Anything that acts on the points `0..n` — permutations and affine maps.
pub trait PointAction {
    fn degree(&self) -> usize;
    fn image_of(&self, x: usize) -> usize;
}

/// A subset of `Z_n` containing exactly `n/2` elements, stored as a bit mask
/// (bit `i` set ⇔ `i` in the set). Construction rejects `n > 64`, wrong
/// popcount, and stray high bits.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dichotomy {
    mask: u64,
    modulus: Modulus,
}

/// All-ones mask over `n` bits.
pub(crate) fn full_mask(n: u64) -> u64 {
    debug_assert!(n >= 1 && n <= 64);
    u64::MAX >> (64 - n)
}

impl Dichotomy {
    pub fn new(mask: u64, modulus: Modulus) -> Result<Self> {
        let n = modulus.get();
        if n > 64 {
            return Err(Error::DegreeTooLarge(n as usize));
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::MaskOutOfRange { mask, modulus: n });
        }
        let expected = (n / 2) as u32;
        if mask.count_ones() != expected {
            return Err(Error::WrongPopcount { mask, got: mask.count_ones(), expected, modulus: n });
        }
        Ok(Dichotomy { mask, modulus })
    }

    pub fn from_points(points: &[u64], modulus: Modulus) -> Result<Self> {
        let mut mask = 0u64;
        for &p in points {
            if p >= modulus.get() {
                return Err(Error::MaskOutOfRange { mask: 1 << p, modulus: modulus.get() });
            }
            mask |= 1 << p;
        }
        Dichotomy::new(mask, modulus)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn contains(&self, point: u64) -> bool {
        point < self.modulus.get() && self.mask & (1 << point) != 0
    }

    pub fn points(&self) -> Vec<u64> {
        (0..self.modulus.get()).filter(|&p| self.mask & (1 << p) != 0).collect()
    }

    /// The complementary dichotomy `S \ D`.
    pub fn complement(&self) -> Dichotomy {
        Dichotomy { mask: !self.mask & full_mask(self.modulus.get()), modulus: self.modulus }
    }
}

impl std::fmt::Display for Dichotomy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// The elementwise image `gD`. Popcount is preserved because `g` is a
/// bijection.
pub fn act<A: PointAction + ?Sized>(g: &A, d: &Dichotomy) -> Dichotomy {
    assert_eq!(g.degree() as u64, d.modulus().get(), "degree mismatch");
    let mut out = 0u64;
    let mut rest = d.mask();
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << g.image_of(i);
        rest &= rest - 1;
    }
    Dichotomy { mask: out, modulus: d.modulus() }
}

/// Classification of one dichotomy under one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthReport {
    /// Setwise stabilizer is trivial.
    pub rigid: bool,
    /// Every `p ∈ G` with `pD = ∁D`.
    pub autocomplementarity_witnesses: Vec<Permutation>,
    /// The unique witness when the dichotomy is strong.
    pub polarity: Option<Permutation>,
    /// Rigid and autocomplementary.
    pub strong: bool,
}

/// Classify `d` by a full scan of `group`: rigidity from the setwise
/// stabilizer, autocomplementarity from the witness list. This scan is the
/// oracle that every faster path is validated against.
///
/// When the dichotomy is strong, its witness is unique and is an involutive
/// derangement; both facts are asserted rather than trusted.
pub fn strength(d: &Dichotomy, group: &PermGroup) -> StrengthReport {
    assert_eq!(group.degree() as u64, d.modulus().get(), "degree mismatch");
    let complement = d.complement();
    let mut rigid = true;
    let mut witnesses = Vec::new();
    for g in group.elements() {
        let image = act(g, d);
        if image == *d && !g.is_identity() {
            rigid = false;
        }
        if image == complement {
            witnesses.push(g.clone());
        }
    }
    let strong = rigid && !witnesses.is_empty();
    let polarity = if strong {
        assert_eq!(witnesses.len(), 1, "strong dichotomy {d} has a non-unique witness");
        let p = witnesses[0].clone();
        assert!(p.is_quasipolarity(), "polarity of {d} is not an involutive derangement");
        Some(p)
    } else {
        None
    };
    StrengthReport { rigid, autocomplementarity_witnesses: witnesses, polarity, strong }
}

fn quasipolarity_cycles<A: PointAction + ?Sized>(q: &A) -> Result<Vec<(usize, usize)>> {
    let n = q.degree();
    let mut cycles = Vec::with_capacity(n / 2);
    for x in 0..n {
        let y = q.image_of(x);
        if y == x || q.image_of(y) != x {
            return Err(Error::NotAQuasipolarity(describe(q)));
        }
        if x < y {
            cycles.push((x, y));
        }
    }
    Ok(cycles)
}

fn describe<A: PointAction + ?Sized>(q: &A) -> String {
    let images: Vec<usize> = (0..q.degree()).map(|x| q.image_of(x)).collect();
    format!("{images:?}")
}

/// The base set `U_q`: one point from each 2-cycle of `q`, tie-broken to the
/// smaller point. Satisfies `q·U_q = ∁U_q`.
pub fn base_set<A: PointAction + ?Sized>(q: &A) -> Result<Dichotomy> {
    let modulus = Modulus::new(q.degree() as u64)?;
    let mut mask = 0u64;
    for (lo, _) in quasipolarity_cycles(q)? {
        mask |= 1 << lo;
    }
    Dichotomy::new(mask, modulus)
}

/// All `2^(n/2)` dichotomies `D` with `qD = ∁D`, generated as `A ∪ B` with
/// `A ⊆ U_q` and `B = (S \ U_q) \ qA`. Subsets `A` are enumerated by an
/// ascending binary counter over the elements of `U_q` in ascending order,
/// so the output order is stable.
pub fn members_of_mq<A: PointAction + ?Sized>(q: &A) -> Result<Vec<Dichotomy>> {
    let modulus = Modulus::new(q.degree() as u64)?;
    let cycles = quasipolarity_cycles(q)?;
    let k = cycles.len();
    if k >= 26 {
        return Err(Error::BudgetExceeded {
            n: modulus.get(),
            max_n: 50,
            strategy: "M_q enumeration",
        });
    }
    let base: u64 = cycles.iter().map(|&(lo, _)| 1u64 << lo).sum();
    let outside = full_mask(modulus.get()) & !base;

    let mut out = Vec::with_capacity(1 << k);
    for counter in 0u64..(1 << k) {
        let mut a_mask = 0u64;
        let mut qa_mask = 0u64;
        for (bit, &(lo, hi)) in cycles.iter().enumerate() {
            if counter & (1 << bit) != 0 {
                a_mask |= 1 << lo;
                qa_mask |= 1 << hi;
            }
        }
        let d = a_mask | (outside & !qa_mask);
        out.push(Dichotomy { mask: d, modulus });
    }
    Ok(out)
}

/// Iterate all `C(n, n/2)` dichotomy masks of `Z_n` in ascending numeric
/// order (Gosper's hack).
pub fn all_dichotomies(modulus: Modulus) -> impl Iterator<Item = Dichotomy> {
    let n = modulus.get();
    assert!(n <= 63, "full dichotomy enumeration is limited to n <= 63");
    let k = modulus.half();
    let limit = 1u64 << n;
    let mut next = Some(full_mask(k));
    std::iter::from_fn(move || {
        let mask = next?;
        let lowest = mask & mask.wrapping_neg();
        let carry = mask + lowest;
        let candidate = carry | (((mask ^ carry) / lowest) >> 2);
        next = (candidate < limit).then_some(candidate);
        Some(Dichotomy { mask, modulus })
    })
}
