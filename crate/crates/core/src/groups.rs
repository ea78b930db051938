//! Fully decomposable torsion-free groups: multisets of rank-1 summands,
//! sparse exact-rational elements, heights and characteristics of elements,
//! the torsion-free Szmielew profile, elementary equivalence, and the
//! 1-isotypicity decision.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::characteristics::{Base, Characteristic, ExtHeight, HType};
use crate::numutil::{int_valuation, pow_i, rat_valuation, support_primes};

/// Exact rational scalar. Coordinates of elements live in subgroups of ℚ;
/// nothing in this crate ever rounds.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A finite count or the single symbolic infinite cardinal. The invariants
/// in this crate only ever distinguish finite values from "infinite".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Omega,
}

impl Count {
    pub fn add(self, other: Count) -> Count {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Omega,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Count::Finite(0)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Omega => write!(f, "omega"),
        }
    }
}

/// Multiplicity of a summand: a positive integer or ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mult {
    Finite(u64),
    Omega,
}

impl Mult {
    pub fn count(self) -> Count {
        match self {
            Mult::Finite(n) => Count::Finite(n),
            Mult::Omega => Count::Omega,
        }
    }

    fn admits_copy(self, copy: u64) -> bool {
        match self {
            Mult::Finite(n) => copy < n,
            Mult::Omega => true,
        }
    }
}

impl fmt::Display for Mult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mult::Finite(n) => write!(f, "{n}"),
            Mult::Omega => write!(f, "omega"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("summand multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("coordinate references summand {0}, but the group has {1} summands")]
    NoSuchSummand(usize, usize),
    #[error("coordinate copy index {copy} exceeds multiplicity of summand {summand}")]
    CopyOutOfRange { summand: usize, copy: u64 },
    #[error("coordinate at summand {summand} copy {copy} lies outside its rational group")]
    Membership { summand: usize, copy: u64 },
    #[error("the zero element has no height or characteristic")]
    ZeroElement,
}

/// A rank-1 torsion-free group: the subgroup of ℚ generated by
/// `{p^-k : k <= chi(p)}`, so 1 belongs to it and h_p(1) = chi(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGroup {
    chi: Characteristic,
}

impl RationalGroup {
    pub fn new(chi: Characteristic) -> Self {
        RationalGroup { chi }
    }

    pub fn chi(&self) -> &Characteristic {
        &self.chi
    }

    /// Membership test: every prime power in the denominator must be
    /// within the divisibility allowed by the characteristic.
    pub fn member(&self, x: &Rational) -> bool {
        if x.is_zero() {
            return true;
        }
        // Strip the named primes first; whatever remains in the denominator
        // is only admissible when the default is ∞.
        let mut den = x.denom().abs();
        for (&p, &h) in self.chi.exceptions() {
            let v = int_valuation(&den, p).expect("nonzero denominator");
            if ExtHeight::Fin(0).offset(v as i64).unwrap() > h {
                return false;
            }
            den /= pow_i(p, v);
        }
        den.is_one() || self.chi.default_base() == Base::Inf
    }

    /// p-height of a nonzero member: chi(p) + v_p(x), absorbing into ∞.
    pub fn height(&self, x: &Rational, p: u64) -> Result<ExtHeight, GroupError> {
        if x.is_zero() {
            return Err(GroupError::ZeroElement);
        }
        match self.chi.at(p) {
            ExtHeight::Inf => Ok(ExtHeight::Inf),
            h @ ExtHeight::Fin(_) => {
                let v = rat_valuation(x, p).expect("nonzero");
                Ok(h.offset(v).expect("membership keeps heights non-negative"))
            }
        }
    }

    /// Characteristic of a nonzero member: chi shifted by the valuation of
    /// x at each of x's finitely many support primes.
    pub fn elem_chi(&self, x: &Rational) -> Result<Characteristic, GroupError> {
        if x.is_zero() {
            return Err(GroupError::ZeroElement);
        }
        let mut chi = self.chi.clone();
        for p in support_primes(x) {
            if chi.at(p).is_finite() {
                let v = rat_valuation(x, p).expect("nonzero");
                chi = chi.shift(p, v).expect("membership keeps heights non-negative");
            }
        }
        Ok(chi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub chi: Characteristic,
    pub mult: Mult,
}

/// A fully decomposable group: a finite list of rank-1 summand descriptions
/// with positive (possibly ω) multiplicities. The empty list is the trivial
/// group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FDGroup {
    summands: Vec<Summand>,
}

/// Key of a coordinate inside an `FDGroup`: (summand index, copy index).
pub type CoordKey = (usize, u64);

impl FDGroup {
    pub fn new(summands: Vec<Summand>) -> Result<Self, GroupError> {
        if summands.iter().any(|s| s.mult == Mult::Finite(0)) {
            return Err(GroupError::ZeroMultiplicity);
        }
        Ok(FDGroup { summands })
    }

    pub fn trivial() -> Self {
        FDGroup::default()
    }

    /// ℤ^n.
    pub fn free(n: u64) -> Self {
        if n == 0 {
            return FDGroup::trivial();
        }
        FDGroup {
            summands: vec![Summand {
                chi: Characteristic::zero(),
                mult: Mult::Finite(n),
            }],
        }
    }

    /// A single rank-1 summand.
    pub fn rank_one(chi: Characteristic) -> Self {
        FDGroup {
            summands: vec![Summand {
                chi,
                mult: Mult::Finite(1),
            }],
        }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn rank(&self) -> Count {
        self.summands
            .iter()
            .fold(Count::Finite(0), |acc, s| acc.add(s.mult.count()))
    }

    pub fn rational_group(&self, idx: usize) -> Option<RationalGroup> {
        self.summands
            .get(idx)
            .map(|s| RationalGroup::new(s.chi.clone()))
    }

    /// Primes named in any summand characteristic.
    pub fn named_primes(&self) -> BTreeSet<u64> {
        self.summands
            .iter()
            .flat_map(|s| s.chi.exceptions().keys().copied())
            .collect()
    }

    /// Validates a coordinate map and builds an element. The zero element
    /// (empty map) is allowed as an additive identity; height and type
    /// queries reject it separately.
    pub fn element(
        &self,
        coords: impl IntoIterator<Item = (CoordKey, Rational)>,
    ) -> Result<Element, GroupError> {
        let mut map = BTreeMap::new();
        for ((summand, copy), value) in coords {
            if value.is_zero() {
                continue;
            }
            let s = self
                .summands
                .get(summand)
                .ok_or(GroupError::NoSuchSummand(summand, self.summands.len()))?;
            if !s.mult.admits_copy(copy) {
                return Err(GroupError::CopyOutOfRange { summand, copy });
            }
            if !RationalGroup::new(s.chi.clone()).member(&value) {
                return Err(GroupError::Membership { summand, copy });
            }
            map.insert((summand, copy), value);
        }
        Ok(Element { coords: map })
    }

    /// Convenience: element with a single coordinate.
    pub fn unit_element(&self, summand: usize, copy: u64) -> Result<Element, GroupError> {
        self.element([((summand, copy), Rational::one())])
    }

    /// Minimum over the support of per-coordinate rank-1 heights.
    pub fn elem_height(&self, a: &Element, p: u64) -> Result<ExtHeight, GroupError> {
        if a.is_zero() {
            return Err(GroupError::ZeroElement);
        }
        let mut h = ExtHeight::Inf;
        for (&(summand, _), value) in &a.coords {
            let group = self.rational_group(summand).expect("validated");
            h = h.min(group.height(value, p)?);
        }
        Ok(h)
    }

    /// Characteristic of a nonzero element: the meet of the shifted
    /// characteristics of its coordinates.
    pub fn elem_char(&self, a: &Element) -> Result<Characteristic, GroupError> {
        if a.is_zero() {
            return Err(GroupError::ZeroElement);
        }
        let mut acc: Option<Characteristic> = None;
        for (&(summand, _), value) in &a.coords {
            let group = self.rational_group(summand).expect("validated");
            let chi = group.elem_chi(value)?;
            acc = Some(match acc {
                None => chi,
                Some(prev) => prev.meet(&chi),
            });
        }
        Ok(acc.expect("nonzero element has support"))
    }

    pub fn elem_htype(&self, a: &Element) -> Result<HType, GroupError> {
        Ok(self.elem_char(a)?.htype())
    }

    /// Tf(p): total multiplicity of summands with finite height at p.
    pub fn tf_invariant(&self, p: u64) -> Count {
        self.summands
            .iter()
            .filter(|s| s.chi.at(p).is_finite())
            .fold(Count::Finite(0), |acc, s| acc.add(s.mult.count()))
    }

    /// The full torsion-free Szmielew profile.
    pub fn szmielew_profile(&self) -> SzmielewProfile {
        let default = self
            .summands
            .iter()
            .filter(|s| s.chi.default_base() == Base::Zero)
            .fold(Count::Finite(0), |acc, s| acc.add(s.mult.count()));
        let exceptions = self
            .named_primes()
            .into_iter()
            .map(|p| (p, self.tf_invariant(p)))
            .filter(|&(_, c)| c != default)
            .collect();
        SzmielewProfile {
            tf: TfProfile {
                default,
                exceptions,
            },
        }
    }

    /// h-types of nonzero elements: the meet-closure of the summand types.
    pub fn realizable_htypes(&self) -> BTreeSet<HType> {
        let mut set: BTreeSet<HType> = self.summands.iter().map(|s| s.chi.htype()).collect();
        loop {
            let mut added = Vec::new();
            for a in &set {
                for b in &set {
                    let m = a.meet(b);
                    if !set.contains(&m) {
                        added.push(m);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        set
    }
}

impl fmt::Display for FDGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.summands {
            writeln!(f, "summand {} rank={}", s.chi, s.mult)?;
        }
        Ok(())
    }
}

/// A sparse element of an `FDGroup`: finitely many nonzero exact-rational
/// coordinates, each inside its rank-1 summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Element {
    coords: BTreeMap<CoordKey, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &BTreeMap<CoordKey, Rational> {
        &self.coords
    }

    pub fn coord(&self, key: &CoordKey) -> Rational {
        self.coords.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &CoordKey> {
        self.coords.keys()
    }

    fn normalized(coords: BTreeMap<CoordKey, Rational>) -> Element {
        Element {
            coords: coords.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut coords = self.coords.clone();
        for (k, v) in &other.coords {
            let entry = coords.entry(*k).or_insert_with(Rational::zero);
            *entry += v;
        }
        Element::normalized(coords)
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            coords: self.coords.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn scale_int(&self, n: &BigInt) -> Element {
        if n.is_zero() {
            return Element::zero();
        }
        let n = Rational::from_integer(n.clone());
        Element {
            coords: self
                .coords
                .iter()
                .map(|(k, v)| (*k, v * &n))
                .collect(),
        }
    }

    pub fn scale_rat(&self, q: &Rational) -> Element {
        if q.is_zero() {
            return Element::zero();
        }
        Element {
            coords: self.coords.iter().map(|(k, v)| (*k, v * q)).collect(),
        }
    }

    /// Exact division by p^k, validated coordinatewise against the group.
    pub fn div_pow(
        &self,
        group: &FDGroup,
        p: u64,
        k: u32,
    ) -> Result<Element, GroupError> {
        let factor = Rational::new(BigInt::one(), pow_i(p, k));
        let divided = self.scale_rat(&factor);
        // Re-validate membership; division can leave the group.
        group.element(divided.coords.clone())
    }
}

/// The Szmielew invariant tuple specialized to torsion-free groups:
/// D ≡ 0, U ≡ 0, Exp = ∞ are constants; only the Tf profile varies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SzmielewProfile {
    tf: TfProfile,
}

impl SzmielewProfile {
    /// D(p) = 0 for every prime in a torsion-free group.
    pub fn d(&self, _p: u64) -> Count {
        Count::Finite(0)
    }

    /// U(p, n-1) = 0 for every prime and n in a torsion-free group.
    pub fn u(&self, _p: u64, _n: u64) -> Count {
        Count::Finite(0)
    }

    /// Exp = ∞ for every nontrivial torsion-free group.
    pub fn exp(&self) -> Count {
        Count::Omega
    }

    pub fn tf(&self) -> &TfProfile {
        &self.tf
    }

    /// Elementary equivalence: the Tf values agree at every prime, where
    /// all infinite values count as equal.
    pub fn equivalent(&self, other: &SzmielewProfile) -> bool {
        self.tf.pointwise_eq(&other.tf)
    }
}

/// Finitely described map prime -> Tf value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfProfile {
    default: Count,
    exceptions: BTreeMap<u64, Count>,
}

impl TfProfile {
    pub fn default_value(&self) -> Count {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, Count> {
        &self.exceptions
    }

    pub fn at(&self, p: u64) -> Count {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    fn pointwise_eq(&self, other: &TfProfile) -> bool {
        if self.default != other.default {
            return false;
        }
        self.exceptions
            .keys()
            .chain(other.exceptions.keys())
            .all(|&p| self.at(p) == other.at(p))
    }
}

/// Corollary-level decision: torsion-free groups are elementarily
/// equivalent iff their Tf profiles coincide at every prime.
pub fn elementarily_equivalent(a: &FDGroup, b: &FDGroup) -> bool {
    a.szmielew_profile().equivalent(&b.szmielew_profile())
}

/// 1-isotypicity: elementary equivalence plus equal sets of realizable
/// h-types.
pub fn iso1_equivalent(a: &FDGroup, b: &FDGroup) -> bool {
    elementarily_equivalent(a, b) && a.realizable_htypes() == b.realizable_htypes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristics::Base;

    fn chi(default: Base, exc: &[(u64, ExtHeight)]) -> Characteristic {
        Characteristic::new(default, exc.iter().copied()).unwrap()
    }

    fn z_group() -> FDGroup {
        FDGroup::free(1)
    }

    fn q_group() -> FDGroup {
        FDGroup::rank_one(Characteristic::all_inf())
    }

    fn z_half() -> FDGroup {
        // ℤ[1/2]
        FDGroup::rank_one(chi(Base::Zero, &[(2, ExtHeight::Inf)]))
    }

    fn direct_sum(groups: &[&FDGroup]) -> FDGroup {
        let mut summands = Vec::new();
        for g in groups {
            summands.extend(g.summands().iter().cloned());
        }
        FDGroup::new(summands).unwrap()
    }

    #[test]
    fn membership_examples() {
        let b = RationalGroup::new(chi(Base::Zero, &[(2, ExtHeight::Fin(3))]));
        assert!(b.member(&rat(3, 2)));
        assert!(b.member(&rat(1, 8)));
        assert!(!b.member(&rat(1, 16)));

        let z2inf = RationalGroup::new(chi(Base::Zero, &[(2, ExtHeight::Inf)]));
        assert!(!z2inf.member(&rat(1, 3)));
        assert!(z2inf.member(&rat(1, 1024)));

        let anything = RationalGroup::new(Characteristic::all_inf());
        assert!(anything.member(&rat(7, 1)));
        assert!(anything.member(&rat(22, 7)));
    }

    #[test]
    fn height_rank1_examples() {
        let z = RationalGroup::new(Characteristic::zero());
        assert_eq!(z.height(&rat_int(6), 2), Ok(ExtHeight::Fin(1)));

        let q = RationalGroup::new(Characteristic::all_inf());
        assert_eq!(q.height(&rat_int(5), 7), Ok(ExtHeight::Inf));

        // Brute-force oracle: largest k with x / 2^k still a member.
        let b = RationalGroup::new(chi(Base::Zero, &[(2, ExtHeight::Fin(3))]));
        let x = rat(3, 2);
        let mut oracle = 0u32;
        while b.member(&(&x / Rational::from_integer(pow_i(2, oracle + 1)))) {
            oracle += 1;
        }
        assert_eq!(oracle, 2);
        assert_eq!(b.height(&x, 2), Ok(ExtHeight::Fin(2)));

        assert_eq!(z.height(&Rational::zero(), 2), Err(GroupError::ZeroElement));
    }

    #[test]
    fn elem_char_meet_of_summands() {
        // a = (1 in ℤ, 1 in ℚ) has characteristic (0;)
        let a_group = direct_sum(&[&z_group(), &q_group()]);
        let a = a_group
            .element([((0, 0), rat_int(1)), ((1, 0), rat_int(1))])
            .unwrap();
        assert_eq!(a_group.elem_char(&a).unwrap(), Characteristic::zero());

        // 4 in ℤ at p = 2 has height 2
        let z = z_group();
        let four = z.element([((0, 0), rat_int(4))]).unwrap();
        assert_eq!(z.elem_height(&four, 2), Ok(ExtHeight::Fin(2)));

        // min(5 - 1, 0 + 1) = 1
        let g = FDGroup::new(vec![
            Summand {
                chi: chi(Base::Zero, &[(2, ExtHeight::Fin(5))]),
                mult: Mult::Finite(1),
            },
            Summand {
                chi: Characteristic::zero(),
                mult: Mult::Finite(1),
            },
        ])
        .unwrap();
        let a = g
            .element([((0, 0), rat(1, 2)), ((1, 0), rat_int(2))])
            .unwrap();
        assert_eq!(g.elem_height(&a, 2), Ok(ExtHeight::Fin(1)));
    }

    #[test]
    fn tf_examples() {
        let z3 = FDGroup::free(3);
        assert_eq!(z3.tf_invariant(2), Count::Finite(3));
        assert_eq!(z3.tf_invariant(97), Count::Finite(3));

        assert_eq!(q_group().tf_invariant(5), Count::Finite(0));

        let zh = z_half();
        assert_eq!(zh.tf_invariant(2), Count::Finite(0));
        assert_eq!(zh.tf_invariant(3), Count::Finite(1));
    }

    #[test]
    fn szmielew_profiles() {
        let z = z_group();
        let profile = z.szmielew_profile();
        assert_eq!(profile.tf().at(2), Count::Finite(1));
        assert_eq!(profile.d(2), Count::Finite(0));
        assert_eq!(profile.u(2, 1), Count::Finite(0));
        assert_eq!(profile.exp(), Count::Omega);

        let qq = direct_sum(&[&q_group(), &q_group()]);
        assert_eq!(qq.szmielew_profile().tf().at(3), Count::Finite(0));

        let mixed = direct_sum(&[&z_group(), &z_half()]);
        let tf = mixed.szmielew_profile();
        assert_eq!(tf.tf().at(2), Count::Finite(1));
        assert_eq!(tf.tf().at(3), Count::Finite(2));
        assert_eq!(tf.tf().at(101), Count::Finite(2));
    }

    #[test]
    fn elementary_equivalence_examples() {
        let z = z_group();
        let z_plus_q = direct_sum(&[&z_group(), &q_group()]);
        assert!(elementarily_equivalent(&z, &z_plus_q));
        let z2 = FDGroup::free(2);
        assert!(!elementarily_equivalent(&z, &z2));
        assert!(elementarily_equivalent(&z2, &z2));
    }

    #[test]
    fn realizable_htypes_examples() {
        let z = z_group();
        assert_eq!(
            z.realizable_htypes().into_iter().collect::<Vec<_>>(),
            vec![HType::bottom()]
        );

        let z_plus_q = direct_sum(&[&z_group(), &q_group()]);
        let types = z_plus_q.realizable_htypes();
        assert_eq!(types.len(), 2);
        assert!(types.contains(&HType::bottom()));
        assert!(types.contains(&HType::top()));

        let g = direct_sum(&[
            &FDGroup::rank_one(chi(Base::Zero, &[(2, ExtHeight::Inf)])),
            &FDGroup::rank_one(chi(Base::Zero, &[(3, ExtHeight::Inf)])),
        ]);
        let types = g.realizable_htypes();
        assert!(types.contains(&HType::bottom()));
        assert_eq!(types.len(), 3);
    }

    #[test]
    fn iso1_examples() {
        let z = z_group();
        let z_plus_q = direct_sum(&[&z_group(), &q_group()]);
        assert!(!iso1_equivalent(&z, &z_plus_q));

        let a = direct_sum(&[&z_group(), &z_half()]);
        let b = direct_sum(&[&z_half(), &z_group()]);
        assert!(iso1_equivalent(&a, &b));

        assert!(!iso1_equivalent(&z, &FDGroup::free(2)));
    }

    #[test]
    fn element_validation() {
        let z = z_group();
        assert_eq!(
            z.element([((1, 0), rat_int(1))]),
            Err(GroupError::NoSuchSummand(1, 1))
        );
        assert_eq!(
            z.element([((0, 1), rat_int(1))]),
            Err(GroupError::CopyOutOfRange { summand: 0, copy: 1 })
        );
        assert_eq!(
            z.element([((0, 0), rat(1, 2))]),
            Err(GroupError::Membership { summand: 0, copy: 0 })
        );
        // omega multiplicity admits any copy index
        let g = FDGroup::new(vec![Summand {
            chi: Characteristic::zero(),
            mult: Mult::Omega,
        }])
        .unwrap();
        assert!(g.element([((0, 12345), rat_int(3))]).is_ok());
    }

    #[test]
    fn element_arithmetic() {
        let z2 = FDGroup::free(2);
        let e1 = z2.unit_element(0, 0).unwrap();
        let e2 = z2.unit_element(0, 1).unwrap();
        let sum = e1.add(&e2);
        assert_eq!(sum.coord(&(0, 0)), rat_int(1));
        assert_eq!(sum.coord(&(0, 1)), rat_int(1));
        assert!(e1.sub(&e1).is_zero());
        let scaled = e1.scale_int(&BigInt::from(6));
        assert_eq!(z2.elem_height(&scaled, 2).unwrap(), ExtHeight::Fin(1));
        assert_eq!(z2.elem_height(&scaled, 3).unwrap(), ExtHeight::Fin(1));

        // dividing 6·e1 by 2 stays in ℤ², dividing again does not
        let halved = scaled.div_pow(&z2, 2, 1).unwrap();
        assert_eq!(halved.coord(&(0, 0)), rat_int(3));
        assert!(halved.div_pow(&z2, 2, 1).is_err());
    }
}
