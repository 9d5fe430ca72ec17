//! The group of affine maps `e^u v : x ↦ vx + u` on `Z_n` with `v` a unit,
//! its conjugation action, and the quasipolarity machinery.
//!
//! A quasipolarity is an involution without fixed points. Two independent
//! tests coexist on purpose:
//!
//! * [`AffineMap::is_quasipolarity_bruteforce`] squares the map and evaluates
//!   it at all `n` points — the oracle;
//! * [`AffineMap::is_quasipolarity_characterized`] checks the closed
//!   conditions on `(σ, τ, u₀)` of the linear part.
//!
//! The two must agree everywhere; `verify` and the acceptance suite hold them
//! to that.

use std::collections::BTreeSet;

use crate::dichotomy::PointAction;
use crate::perm::Permutation;
use crate::residue::{euler_phi, units, units_and_involutions, Modulus, Residue, UnitResidue};
use crate::{Error, Result};

/// An affine map `e^u v : x ↦ vx + u` on `Z_n`. `u` is the affine part,
/// `v` the (unit) linear part.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineMap {
    // Field order gives (v, u) lexicographic derive(Ord), which is the
    // canonical ordering for class representatives and golden files.
    v: UnitResidue,
    u: Residue,
}

impl AffineMap {
    pub fn new(modulus: Modulus, u: u64, v: u64) -> Result<Self> {
        Ok(AffineMap { v: UnitResidue::new(v, modulus)?, u: Residue::new(u, modulus) })
    }

    pub fn identity(modulus: Modulus) -> Self {
        AffineMap::new(modulus, 0, 1).expect("1 is a unit")
    }

    pub fn u(&self) -> u64 {
        self.u.value()
    }

    pub fn v(&self) -> u64 {
        self.v.value()
    }

    pub fn modulus(&self) -> Modulus {
        self.u.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.u() == 0 && self.v() == 1
    }

    /// Evaluate at a residue: `vx + u`.
    pub fn apply(&self, x: Residue) -> Residue {
        assert_eq!(self.modulus(), x.modulus(), "modulus mismatch");
        self.v.residue().mul(x).add(self.u)
    }

    /// Evaluate at a point in `0..n`.
    pub fn apply_point(&self, x: u64) -> u64 {
        let n = self.modulus().get();
        debug_assert!(x < n);
        ((self.v() as u128 * x as u128 + self.u() as u128) % n as u128) as u64
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        AffineMap {
            v: UnitResidue::new(
                self.v.residue().mul(other.v.residue()).value(),
                self.modulus(),
            )
            .expect("product of units is a unit"),
            u: self.apply(other.u.residue()),
        }
    }

    pub fn invert(&self) -> AffineMap {
        let v_inv = self.v.inverse();
        // x ↦ v⁻¹x − v⁻¹u
        let u = v_inv.residue().mul(self.u).neg();
        AffineMap { v: v_inv, u }
    }

    /// Affine involution test: `v² = 1` and `u(v+1) = 0` in `Z_n`.
    pub fn is_involution(&self) -> bool {
        self.v.is_involution()
            && self.u.mul(Residue::new(self.v() + 1, self.modulus())).value() == 0
    }

    /// Oracle quasipolarity test: `g∘g = id` and `g(x) ≠ x` for all `n`
    /// points, checked by full evaluation.
    pub fn is_quasipolarity_bruteforce(&self) -> bool {
        if self.compose(self) != AffineMap::identity(self.modulus()) {
            return false;
        }
        (0..self.modulus().get()).all(|x| self.apply_point(x) != x)
    }

    /// Characterized quasipolarity test:
    /// (1) `v² = 1`, (2) `2·u₀ = σ(v)`, (3) `u ≡ u₀ (mod σ(v))`.
    ///
    /// Condition (2) is always evaluated; the shortcut that it is automatic
    /// for odd `n/2` is itself a verified property, not an assumption here.
    pub fn is_quasipolarity_characterized(&self) -> bool {
        if !self.v.is_involution() {
            return false;
        }
        let st = self.v.sigma_tau_u0();
        2 * st.u0 == st.sigma && self.u() % st.sigma == st.u0 % st.sigma
    }

    /// Realize the map as an explicit permutation of `0..n`.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.modulus().get() as usize;
        Permutation::new((0..n).map(|x| self.apply_point(x as u64) as usize).collect())
            .expect("affine maps with unit linear part are bijections")
    }

    /// Recover an affine map from a permutation of `0..n`, if the permutation
    /// is affine. `p = e^u v` forces `u = p(0)` and `v = p(1) − p(0)`; the
    /// remaining points are checked.
    pub fn from_permutation(p: &Permutation, modulus: Modulus) -> Option<AffineMap> {
        if p.degree() as u64 != modulus.get() {
            return None;
        }
        let n = modulus.get();
        let u = p.image_of(0) as u64;
        let v = (p.image_of(1) as u64 + n - u) % n;
        let g = AffineMap::new(modulus, u, v).ok()?;
        (0..n).all(|x| g.apply_point(x) == p.image_of(x as usize) as u64).then_some(g)
    }
}

impl PointAction for AffineMap {
    fn degree(&self) -> usize {
        self.modulus().get() as usize
    }

    fn image_of(&self, x: usize) -> usize {
        self.apply_point(x as u64) as usize
    }
}

impl std::fmt::Display for AffineMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e^{}·{} mod {}", self.u(), self.v(), self.modulus())
    }
}

/// `h ∘ g ∘ h⁻¹` by the closed form: for `h = e^t s`, `g = e^u v` the result
/// is `e^{t(1−v)+su} v`.
pub fn conjugate(h: &AffineMap, g: &AffineMap) -> AffineMap {
    assert_eq!(h.modulus(), g.modulus(), "modulus mismatch");
    let m = g.modulus();
    let t = h.u() as i128;
    let s = h.v() as i128;
    let u = g.u() as i128;
    let v = g.v() as i128;
    AffineMap {
        v: g.v,
        u: Residue::from_i128(t * (1 - v) + s * u, m),
    }
}

/// `h ∘ g ∘ h⁻¹` by explicit composition. Oracle for [`conjugate`].
pub fn conjugate_by_composition(h: &AffineMap, g: &AffineMap) -> AffineMap {
    h.compose(g).compose(&h.invert())
}

/// All `n·φ(n)` affine maps, ordered lexicographically by `(v, u)`.
pub fn enumerate_group(modulus: Modulus) -> Vec<AffineMap> {
    let n = modulus.get();
    units(modulus)
        .into_iter()
        .flat_map(|v| (0..n).map(move |u| AffineMap { v, u: Residue::new(u, v.modulus()) }))
        .collect()
}

/// All quasipolarities, generated directly from the characterization: for
/// each involution `v` with `2u₀ = σ`, the affine parts are
/// `u₀, u₀+σ, u₀+2σ, …` below `n`.
pub fn enumerate_quasipolarities(modulus: Modulus) -> Vec<AffineMap> {
    let n = modulus.get();
    let (_, involutions) = units_and_involutions(modulus);
    let mut out = Vec::new();
    for v in involutions {
        let st = v.sigma_tau_u0();
        if 2 * st.u0 != st.sigma {
            continue;
        }
        let mut u = st.u0;
        while u < n {
            out.push(AffineMap { v, u: Residue::new(u, modulus) });
            u += st.sigma;
        }
    }
    out
}

/// A conjugacy class of quasipolarities under the full affine group.
///
/// All members share the linear part of the representative, the
/// representative is the lexicographically minimal `(v, u)` of the class,
/// and `|members| · stabilizer_size = n·φ(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasipolarityClass {
    pub representative: AffineMap,
    pub members: Vec<AffineMap>,
    pub stabilizer_size: u64,
}

/// Partition the quasipolarities of `Z_n` into conjugacy classes.
///
/// Orbits and stabilizers are computed by brute force over all `n·φ(n)`
/// group elements and then cross-checked against the closed forms
/// `stabilizer = σ(v)·φ(n)` and `orbit = n/σ(v)`. Any disagreement is a
/// verification failure, not a warning.
pub fn quasipolarity_conjugacy(modulus: Modulus) -> Result<Vec<QuasipolarityClass>> {
    let group = enumerate_group(modulus);
    let quasipolarities = enumerate_quasipolarities(modulus);
    let phi = euler_phi(modulus);
    let n = modulus.get();

    let mut classes: Vec<QuasipolarityClass> = Vec::new();
    let mut assigned: BTreeSet<AffineMap> = BTreeSet::new();

    for q in &quasipolarities {
        if assigned.contains(q) {
            continue;
        }
        let mut orbit: BTreeSet<AffineMap> = BTreeSet::new();
        let mut stabilizer = 0u64;
        for h in &group {
            let conj = conjugate(h, q);
            if conj == *q {
                stabilizer += 1;
            }
            orbit.insert(conj);
        }

        let members: Vec<AffineMap> = orbit.into_iter().collect();
        let representative = members[0];
        let witness = q.to_string();

        if members.iter().any(|g| g.v() != q.v()) {
            return Err(Error::verification(
                "conjugacy classes share a single linear part",
                witness,
            ));
        }
        if stabilizer * members.len() as u64 != n * phi {
            return Err(Error::verification("orbit-stabilizer product equals |G|", witness));
        }
        let sigma = q.v.sigma_tau_u0().sigma;
        if stabilizer != sigma * phi {
            return Err(Error::verification(
                format!("stabilizer size equals sigma(v)*phi(n) = {}", sigma * phi),
                format!("{witness} has brute-force stabilizer {stabilizer}"),
            ));
        }
        if members.len() as u64 != n / sigma {
            return Err(Error::verification(
                format!("orbit size equals n/sigma(v) = {}", n / sigma),
                format!("{witness} has brute-force orbit {}", members.len()),
            ));
        }

        assigned.extend(members.iter().copied());
        classes.push(QuasipolarityClass { representative, members, stabilizer_size: stabilizer });
    }

    // Conjugates of quasipolarities are quasipolarities, so the classes must
    // exhaust the enumeration exactly.
    if assigned.len() != quasipolarities.len() {
        return Err(Error::verification(
            "conjugacy classes partition the quasipolarities",
            format!("n={n}: {} classified vs {} enumerated", assigned.len(), quasipolarities.len()),
        ));
    }

    classes.sort_by_key(|c| c.representative);
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u64) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn map(n: u64, u: u64, v: u64) -> AffineMap {
        AffineMap::new(m(n), u, v).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(map(12, 2, 5).apply_point(3), 5);
        assert_eq!(map(12, 6, 1).apply_point(0), 6);
        let id = AffineMap::identity(m(12));
        for x in 0..12 {
            assert_eq!(id.apply_point(x), x);
        }
    }

    #[test]
    fn conjugate_examples() {
        // Translations commute.
        assert_eq!(conjugate(&map(12, 1, 1), &map(12, 6, 1)), map(12, 6, 1));
        // Derived via composition: 5·(11·(5⁻¹x)+1) = 11x+5.
        assert_eq!(conjugate(&map(12, 0, 5), &map(12, 1, 11)), map(12, 5, 11));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(map(12, 2, 5).invert(), map(12, 2, 5));
        for g in enumerate_group(m(12)) {
            assert_eq!(g.invert().compose(&g), AffineMap::identity(m(12)));
            assert_eq!(g.compose(&g.invert()), AffineMap::identity(m(12)));
        }
    }

    #[test]
    fn involution_examples() {
        assert!(map(12, 6, 1).is_involution());
        assert!(!map(12, 1, 1).is_involution());
        assert!(map(12, 2, 5).is_involution());
    }

    #[test]
    fn involution_formula_matches_composition_oracle() {
        for n in (2..=20).step_by(2) {
            for g in enumerate_group(m(n)) {
                let squared = g.compose(&g) == AffineMap::identity(m(n));
                assert_eq!(g.is_involution(), squared, "mismatch at {g}");
            }
        }
    }

    #[test]
    fn quasipolarity_bruteforce_examples() {
        assert!(!map(12, 0, 11).is_quasipolarity_bruteforce()); // fixes x=0
        assert!(map(12, 6, 1).is_quasipolarity_bruteforce());
        assert!(!map(12, 4, 5).is_quasipolarity_bruteforce()); // fixes x=2
    }

    #[test]
    fn quasipolarity_characterized_examples() {
        assert!(map(12, 2, 5).is_quasipolarity_characterized());
        assert!(map(12, 6, 1).is_quasipolarity_characterized());
        assert!(!map(12, 4, 5).is_quasipolarity_characterized());
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(m(12)).len(), 48);
        assert_eq!(enumerate_group(m(2)).len(), 2);
        assert_eq!(enumerate_group(m(4)).len(), 8);
    }

    #[test]
    fn quasipolarity_enumeration_examples() {
        let qs = |n: u64| {
            enumerate_quasipolarities(m(n)).iter().map(|g| (g.v(), g.u())).collect::<Vec<_>>()
        };
        assert_eq!(
            qs(12),
            [
                (1, 6),
                (5, 2),
                (5, 6),
                (5, 10),
                (7, 3),
                (7, 9),
                (11, 1),
                (11, 3),
                (11, 5),
                (11, 7),
                (11, 9),
                (11, 11),
            ]
        );
        assert_eq!(qs(2), [(1, 1)]);
        assert_eq!(qs(4), [(1, 2), (3, 1), (3, 3)]);
    }

    #[test]
    fn quasipolarity_enumeration_matches_bruteforce_filter() {
        for n in (2..=30).step_by(2) {
            let generated: Vec<_> = enumerate_quasipolarities(m(n));
            let mut filtered: Vec<_> = enumerate_group(m(n))
                .into_iter()
                .filter(|g| g.is_quasipolarity_bruteforce())
                .collect();
            filtered.sort();
            assert_eq!(generated, filtered, "mismatch at n={n}");
        }
    }

    #[test]
    fn conjugacy_examples() {
        let classes = quasipolarity_conjugacy(m(12)).unwrap();
        let summary: Vec<_> =
            classes.iter().map(|c| (c.representative.v(), c.members.len(), c.stabilizer_size)).collect();
        assert_eq!(summary, [(1, 1, 48), (5, 3, 16), (7, 2, 24), (11, 6, 8)]);

        let classes = quasipolarity_conjugacy(m(2)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].stabilizer_size, 2);

        let classes = quasipolarity_conjugacy(m(4)).unwrap();
        let summary: Vec<_> =
            classes.iter().map(|c| (c.representative.u(), c.representative.v(), c.members.len(), c.stabilizer_size)).collect();
        assert_eq!(summary, [(2, 1, 1, 8), (1, 3, 2, 4)]);
    }

    #[test]
    fn closed_form_conjugation_matches_composition() {
        for n in [2u64, 6, 12] {
            let group = enumerate_group(m(n));
            for h in &group {
                for g in &group {
                    assert_eq!(
                        conjugate(h, g),
                        conjugate_by_composition(h, g),
                        "n={n} h={h} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn permutation_roundtrip() {
        for n in (2..=12).step_by(2) {
            for g in enumerate_group(m(n)) {
                let p = g.to_permutation();
                assert_eq!(AffineMap::from_permutation(&p, m(n)), Some(g));
            }
        }
    }
}
