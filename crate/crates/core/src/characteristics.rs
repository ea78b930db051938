//! Height sequences (characteristics) over all primes, their equivalence
//! classes (h-types), and the distributive lattice structure on both.
//!
//! A characteristic assigns to every prime an extended height in
//! ℕ ∪ {∞}. Only finitely described sequences are representable: a default
//! of 0 or ∞ holding at all but finitely many primes, plus a finite
//! exception map. Two characteristics are equivalent when they differ at
//! finitely many primes and only at finite values; the h-type is the
//! canonical representative of that class.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::numutil::is_prime;

/// A height value: a natural number or ∞. Totally ordered with ∞ on top;
/// addition absorbs into ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtHeight {
    Fin(u32),
    Inf,
}

impl ExtHeight {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtHeight::Fin(_))
    }

    /// Adds a (possibly negative) offset; ∞ absorbs. Returns `None` when a
    /// finite height would drop below zero.
    pub fn offset(self, delta: i64) -> Option<ExtHeight> {
        match self {
            ExtHeight::Inf => Some(ExtHeight::Inf),
            ExtHeight::Fin(k) => {
                let v = k as i64 + delta;
                if v < 0 {
                    None
                } else {
                    Some(ExtHeight::Fin(v as u32))
                }
            }
        }
    }
}

impl PartialOrd for ExtHeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtHeight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtHeight::Inf, ExtHeight::Inf) => Ordering::Equal,
            (ExtHeight::Inf, _) => Ordering::Greater,
            (_, ExtHeight::Inf) => Ordering::Less,
            (ExtHeight::Fin(a), ExtHeight::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtHeight::Fin(k) => write!(f, "{k}"),
            ExtHeight::Inf => write!(f, "inf"),
        }
    }
}

/// The value a characteristic takes at all but finitely many primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    Zero,
    Inf,
}

impl Base {
    pub fn height(self) -> ExtHeight {
        match self {
            Base::Zero => ExtHeight::Fin(0),
            Base::Inf => ExtHeight::Inf,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Zero => write!(f, "0"),
            Base::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("exception key {0} is not prime")]
    NotPrime(u64),
    #[error("exception at {0} equals the default value and must be omitted")]
    RedundantException(u64),
    #[error("shift at {prime} by {delta} drops the height below zero")]
    ShiftBelowZero { prime: u64, delta: i64 },
    #[error("shift at {prime} on an infinite height")]
    ShiftAtInfinity { prime: u64 },
}

/// A finitely described height sequence: `default` at all primes except
/// the finitely many listed in `exceptions`.
///
/// Kept minimal: no stored exception equals the default value, so
/// structural equality coincides with pointwise equality of sequences.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characteristic {
    default: Base,
    exceptions: BTreeMap<u64, ExtHeight>,
}

impl Characteristic {
    pub fn new(
        default: Base,
        exceptions: impl IntoIterator<Item = (u64, ExtHeight)>,
    ) -> Result<Self, CharError> {
        let mut map = BTreeMap::new();
        for (p, h) in exceptions {
            if !is_prime(p) {
                return Err(CharError::NotPrime(p));
            }
            if h == default.height() {
                return Err(CharError::RedundantException(p));
            }
            map.insert(p, h);
        }
        Ok(Characteristic {
            default,
            exceptions: map,
        })
    }

    /// The all-zero characteristic (lattice bottom); the characteristic of
    /// 1 in ℤ.
    pub fn zero() -> Self {
        Characteristic {
            default: Base::Zero,
            exceptions: BTreeMap::new(),
        }
    }

    /// The all-∞ characteristic (lattice top); the characteristic of any
    /// nonzero rational in ℚ.
    pub fn all_inf() -> Self {
        Characteristic {
            default: Base::Inf,
            exceptions: BTreeMap::new(),
        }
    }

    pub fn default_base(&self) -> Base {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, ExtHeight> {
        &self.exceptions
    }

    /// The height at prime `p`.
    pub fn at(&self, p: u64) -> ExtHeight {
        self.exceptions
            .get(&p)
            .copied()
            .unwrap_or_else(|| self.default.height())
    }

    /// Primes named by either characteristic; the sequences agree with the
    /// defaults everywhere else.
    fn joint_primes(&self, other: &Self) -> BTreeSet<u64> {
        self.exceptions
            .keys()
            .chain(other.exceptions.keys())
            .copied()
            .collect()
    }

    fn from_parts(default: Base, pairs: impl IntoIterator<Item = (u64, ExtHeight)>) -> Self {
        let def = default.height();
        let exceptions = pairs.into_iter().filter(|&(_, h)| h != def).collect();
        Characteristic {
            default,
            exceptions,
        }
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        let default = if self.default == Base::Zero || other.default == Base::Zero {
            Base::Zero
        } else {
            Base::Inf
        };
        let pairs: Vec<_> = self
            .joint_primes(other)
            .into_iter()
            .map(|p| (p, self.at(p).min(other.at(p))))
            .collect();
        Characteristic::from_parts(default, pairs)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        let default = if self.default == Base::Inf || other.default == Base::Inf {
            Base::Inf
        } else {
            Base::Zero
        };
        let pairs: Vec<_> = self
            .joint_primes(other)
            .into_iter()
            .map(|p| (p, self.at(p).max(other.at(p))))
            .collect();
        Characteristic::from_parts(default, pairs)
    }

    /// Pointwise order: true iff `self(p) <= other(p)` for every prime p.
    pub fn leq(&self, other: &Self) -> bool {
        if self.default == Base::Inf && other.default == Base::Zero {
            // ∞ <= 0 would have to hold at the cofinitely many unnamed primes.
            return false;
        }
        self.joint_primes(other)
            .into_iter()
            .all(|p| self.at(p) <= other.at(p))
    }

    /// Equivalence of height sequences: finitely many differences, all at
    /// finite values on both sides.
    pub fn equiv(&self, other: &Self) -> bool {
        if self.default != other.default {
            // The sequences differ at cofinitely many primes.
            return false;
        }
        self.joint_primes(other).into_iter().all(|p| {
            let (a, b) = (self.at(p), other.at(p));
            a == b || (a.is_finite() && b.is_finite())
        })
    }

    /// The h-type: base class plus the primes whose finite/infinite class
    /// differs from the default's.
    pub fn htype(&self) -> HType {
        let base_finite = self.default == Base::Zero;
        let flips = self
            .exceptions
            .iter()
            .filter(|(_, h)| h.is_finite() != base_finite)
            .map(|(&p, _)| p)
            .collect();
        HType {
            base: self.default,
            flips,
        }
    }

    /// Replaces the value at `p` by `self(p) + delta` (multiplying or
    /// dividing an element by p^|delta| realizes this inside its h-type).
    pub fn shift(&self, p: u64, delta: i64) -> Result<Self, CharError> {
        if !is_prime(p) {
            return Err(CharError::NotPrime(p));
        }
        if delta == 0 {
            return Ok(self.clone());
        }
        match self.at(p) {
            ExtHeight::Inf => Err(CharError::ShiftAtInfinity { prime: p }),
            h @ ExtHeight::Fin(_) => {
                let shifted = h
                    .offset(delta)
                    .ok_or(CharError::ShiftBelowZero { prime: p, delta })?;
                let mut exceptions = self.exceptions.clone();
                if shifted == self.default.height() {
                    exceptions.remove(&p);
                } else {
                    exceptions.insert(p, shifted);
                }
                Ok(Characteristic {
                    default: self.default,
                    exceptions,
                })
            }
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.default)?;
        let mut first = true;
        for (p, h) in &self.exceptions {
            if first {
                write!(f, " {p}:{h}")?;
                first = false;
            } else {
                write!(f, ", {p}:{h}")?;
            }
        }
        write!(f, ")")
    }
}

/// Canonical representative of an equivalence class of characteristics.
///
/// `base` is the class holding at cofinitely many primes; at each flipped
/// prime the class is opposite (∞ over base 0, finite over base ∞).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HType {
    base: Base,
    flips: BTreeSet<u64>,
}

impl HType {
    pub fn new(base: Base, flips: impl IntoIterator<Item = u64>) -> Result<Self, CharError> {
        let mut set = BTreeSet::new();
        for p in flips {
            if !is_prime(p) {
                return Err(CharError::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(HType { base, flips: set })
    }

    /// Bottom of the h-type lattice: finite heights everywhere.
    pub fn bottom() -> Self {
        HType {
            base: Base::Zero,
            flips: BTreeSet::new(),
        }
    }

    /// Top of the h-type lattice: the type of divisible groups.
    pub fn top() -> Self {
        HType {
            base: Base::Inf,
            flips: BTreeSet::new(),
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn flips(&self) -> &BTreeSet<u64> {
        &self.flips
    }

    /// True iff the class at `p` is infinite.
    pub fn infinite_at(&self, p: u64) -> bool {
        match self.base {
            Base::Zero => self.flips.contains(&p),
            Base::Inf => !self.flips.contains(&p),
        }
    }

    /// Canonical representative characteristic: flips over base 0 carry ∞,
    /// flips over base ∞ carry 0.
    pub fn representative(&self) -> Characteristic {
        let value = match self.base {
            Base::Zero => ExtHeight::Inf,
            Base::Inf => ExtHeight::Fin(0),
        };
        Characteristic {
            default: self.base,
            exceptions: self.flips.iter().map(|&p| (p, value)).collect(),
        }
    }

    fn from_classes(
        base_infinite: bool,
        named: impl IntoIterator<Item = (u64, bool)>,
    ) -> Self {
        let base = if base_infinite { Base::Inf } else { Base::Zero };
        let flips = named
            .into_iter()
            .filter(|&(_, inf)| inf != base_infinite)
            .map(|(p, _)| p)
            .collect();
        HType { base, flips }
    }

    fn joint_primes(&self, other: &Self) -> BTreeSet<u64> {
        self.flips.union(&other.flips).copied().collect()
    }

    /// Meet: infinite exactly where both are infinite.
    pub fn meet(&self, other: &Self) -> Self {
        let base_inf = self.base == Base::Inf && other.base == Base::Inf;
        let named: Vec<_> = self
            .joint_primes(other)
            .into_iter()
            .map(|p| (p, self.infinite_at(p) && other.infinite_at(p)))
            .collect();
        HType::from_classes(base_inf, named)
    }

    /// Join: infinite where either is infinite.
    pub fn join(&self, other: &Self) -> Self {
        let base_inf = self.base == Base::Inf || other.base == Base::Inf;
        let named: Vec<_> = self
            .joint_primes(other)
            .into_iter()
            .map(|p| (p, self.infinite_at(p) || other.infinite_at(p)))
            .collect();
        HType::from_classes(base_inf, named)
    }

    /// Order via representatives: `s <= t` iff some representatives
    /// compare pointwise, which holds exactly when every prime infinite in
    /// `s` is infinite in `t`.
    pub fn leq(&self, other: &Self) -> bool {
        if self.base == Base::Inf && other.base == Base::Zero {
            return false;
        }
        self.joint_primes(other)
            .into_iter()
            .all(|p| !self.infinite_at(p) || other.infinite_at(p))
    }

    pub fn lt(&self, other: &Self) -> bool {
        self.leq(other) && self != other
    }
}

impl fmt::Display for HType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.base)?;
        let mut first = true;
        for p in &self.flips {
            if first {
                write!(f, " {p}")?;
                first = false;
            } else {
                write!(f, ", {p}")?;
            }
        }
        write!(f, "]")
    }
}
