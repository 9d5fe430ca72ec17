//! Exact arithmetic over `Z_n` for even `n`, plus the gcd invariants
//! `σ(v) = gcd(ν−1, n)`, `τ(v) = gcd(ν+1, n)`, `u₀ = n/τ(v)` of a unit `v`.
//!
//! `ν` is always the least non-negative representative; `σ` and `τ` are
//! computed from it and never from a negative lift. `gcd(0, m) = m`, which
//! makes `σ(1) = n`.

use num_integer::Integer;

use crate::{Error, Result};

/// An even modulus `n ≥ 2`. The half `k = n/2` is the dichotomy size.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus {
    n: u64,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus { n })
    }

    pub fn get(self) -> u64 {
        self.n
    }

    /// `k = n/2`, the cardinality of a dichotomy.
    pub fn half(self) -> u64 {
        self.n / 2
    }

    /// Reduce an arbitrary signed integer to its least non-negative residue.
    pub fn reduce(self, value: i128) -> u64 {
        let n = self.n as i128;
        (value.rem_euclid(n)) as u64
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.n)
    }
}

/// A residue class stored as its least non-negative representative.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Residue { value: value % modulus.get(), modulus }
    }

    pub fn from_i128(value: i128, modulus: Modulus) -> Self {
        Residue { value: modulus.reduce(value), modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn add(self, other: Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        Residue::new((self.value + other.value) % self.modulus.get(), self.modulus)
    }

    pub fn mul(self, other: Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        let prod = (self.value as u128 * other.value as u128) % self.modulus.get() as u128;
        Residue::new(prod as u64, self.modulus)
    }

    pub fn neg(self) -> Residue {
        let n = self.modulus.get();
        Residue::new((n - self.value) % n, self.modulus)
    }
}

/// A unit of `Z_n`: a residue with `gcd(value, n) = 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitResidue(Residue);

impl UnitResidue {
    pub fn new(value: u64, modulus: Modulus) -> Result<Self> {
        let r = Residue::new(value, modulus);
        if r.value.gcd(&modulus.get()) != 1 {
            return Err(Error::NotAUnit { value: r.value, modulus: modulus.get() });
        }
        Ok(UnitResidue(r))
    }

    pub fn residue(self) -> Residue {
        self.0
    }

    pub fn value(self) -> u64 {
        self.0.value
    }

    pub fn modulus(self) -> Modulus {
        self.0.modulus
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(self) -> UnitResidue {
        let n = self.modulus().get() as i128;
        let (mut old_r, mut r) = (self.value() as i128, n);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1, "gcd of a unit must be 1");
        UnitResidue(Residue::from_i128(old_s, self.modulus()))
    }

    /// Whether `v² ≡ 1 (mod n)`.
    pub fn is_involution(self) -> bool {
        self.residue().mul(self.residue()).value() == 1
    }

    /// The gcd invariants of this unit. Defined for any unit, not just
    /// involutions.
    pub fn sigma_tau_u0(self) -> SigmaTau {
        let n = self.modulus().get();
        let nu = self.value();
        // gcd(0, n) = n covers ν = 1.
        let sigma = (nu - 1).gcd(&n);
        let tau = (nu + 1).gcd(&n);
        SigmaTau { sigma, tau, u0: n / tau }
    }
}

impl std::fmt::Display for UnitResidue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The triple `(σ, τ, u₀)` attached to a unit.
///
/// For an involution, `u₀` divides `σ`, and translation parts of involutive
/// affine maps with that linear part are exactly the multiples of `u₀`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SigmaTau {
    pub sigma: u64,
    pub tau: u64,
    pub u0: u64,
}

/// Euler's totient by trial gcd. Desk scale; no factorization.
pub fn euler_phi(modulus: Modulus) -> u64 {
    let n = modulus.get();
    (1..=n).filter(|m| m.gcd(&n) == 1).count() as u64
}

/// All units of `Z_n` in ascending order.
pub fn units(modulus: Modulus) -> Vec<UnitResidue> {
    let n = modulus.get();
    (0..n)
        .filter(|v| v.gcd(&n) == 1)
        .map(|v| UnitResidue::new(v, modulus).expect("gcd checked"))
        .collect()
}

/// All units, and the sublist of those with `v² ≡ 1 (mod n)`, both ascending.
pub fn units_and_involutions(modulus: Modulus) -> (Vec<UnitResidue>, Vec<UnitResidue>) {
    let all = units(modulus);
    let involutions = all.iter().copied().filter(|v| v.is_involution()).collect();
    (all, involutions)
}
