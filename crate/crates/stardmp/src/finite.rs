//! Finite *-ring carriers and exhaustive machinery: Z_n with the identity
//! involution, enumeration of the matrix carriers over F_p, the brute-force
//! inverse oracle, and set-level annihilator/ideal computations.
//!
//! The oracle scans every element (and every index up to the periodicity
//! bound) against the defining-equation verifiers, so it is independent of
//! all constructive routes and certifies existence and uniqueness.

use crate::matrix::FpMatrixRing;
use crate::ring::{
    verify_drazin, verify_dual_pseudo_core_eqs, verify_penrose, verify_pseudo_core_eqs,
    ExistenceResult, InverseKind, Inverses, InverseWitness, NotExistsReason, PenroseEqs, StarRing,
    StarRingDescriptor,
};
use crate::Error;

/// The ring Z_n with the identity involution. Commutative, so the
/// involution axioms hold trivially and every element is symmetric; this
/// carrier stresses the index machinery rather than the star conditions.
#[derive(Clone, Debug)]
pub struct ZnRing {
    n: u64,
}

impl ZnRing {
    pub fn new(n: u64) -> Result<Self, Error> {
        let desc = StarRingDescriptor::Zn { n };
        desc.validate()?;
        Ok(ZnRing { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn element(&self, v: i64) -> u64 {
        v.rem_euclid(self.n as i64) as u64
    }

    /// Tail and cycle of the power sequence a, a^2, ...: returns
    /// (s, r) where a^s is the first power lying on the cycle and r is the
    /// cycle length, so a^(s+r) = a^s and s is minimal with that property.
    pub fn power_period(&self, a: &u64) -> (u32, u32) {
        let mut seen: Vec<u64> = Vec::new();
        let mut cur = *a;
        loop {
            if let Some(i) = seen.iter().position(|v| *v == cur) {
                return ((i + 1) as u32, (seen.len() - i) as u32);
            }
            seen.push(cur);
            cur = self.mul(&cur, a);
        }
    }

    fn scan_first(&self, pred: impl Fn(&u64) -> bool) -> Option<u64> {
        (0..self.n).find(|x| pred(x))
    }

    fn witness(
        &self,
        kind: InverseKind,
        a: &u64,
        value: u64,
        index: Option<u32>,
    ) -> InverseWitness<u64> {
        let verified = match kind {
            InverseKind::MoorePenrose => {
                verify_penrose(self, a, &value, PenroseEqs::ALL).expect("same carrier")
            }
            InverseKind::OneThree => {
                verify_penrose(self, a, &value, PenroseEqs::ONE_THREE).expect("same carrier")
            }
            InverseKind::Group => verify_drazin(self, a, &value, 1).expect("same carrier"),
            InverseKind::Drazin => {
                verify_drazin(self, a, &value, index.unwrap()).expect("same carrier")
            }
            InverseKind::Core => verify_pseudo_core_eqs(self, a, &value, 1).expect("same carrier"),
            InverseKind::PseudoCore => {
                verify_pseudo_core_eqs(self, a, &value, index.unwrap()).expect("same carrier")
            }
            InverseKind::DualPseudoCore => {
                verify_dual_pseudo_core_eqs(self, a, &value, index.unwrap()).expect("same carrier")
            }
        };
        assert!(
            verified,
            "constructed {kind} witness failed its defining equations in Z_{}",
            self.n
        );
        InverseWitness {
            kind,
            value,
            index,
            verified,
        }
    }
}

impl StarRing for ZnRing {
    type Elem = u64;

    fn descriptor(&self) -> StarRingDescriptor {
        StarRingDescriptor::Zn { n: self.n }
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.n
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.n
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a % self.n) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
    fn star(&self, a: &u64) -> u64 {
        *a
    }
}

impl Inverses for ZnRing {
    /// Constructive route: with (s, r) the tail and cycle of the power
    /// sequence and t the smallest multiple of r with t >= s, the power
    /// a^t is idempotent and a^(2t-1) satisfies the Drazin equations at
    /// index s.
    fn drazin(&self, a: &u64) -> InverseWitness<u64> {
        let (s, r) = self.power_period(a);
        let t = r * s.div_ceil(r);
        let value = self.power(a, 2 * t - 1);
        self.witness(InverseKind::Drazin, a, value, Some(s))
    }

    fn moore_penrose(&self, a: &u64) -> ExistenceResult<u64> {
        match self.scan_first(|x| verify_penrose(self, a, x, PenroseEqs::ALL).expect("carrier")) {
            Some(x) => ExistenceResult::Exists(self.witness(InverseKind::MoorePenrose, a, x, None)),
            None => ExistenceResult::NotExists(NotExistsReason::NoSolutionInCarrier),
        }
    }

    fn one_three(&self, a: &u64) -> ExistenceResult<u64> {
        match self
            .scan_first(|x| verify_penrose(self, a, x, PenroseEqs::ONE_THREE).expect("carrier"))
        {
            Some(x) => ExistenceResult::Exists(self.witness(InverseKind::OneThree, a, x, None)),
            None => ExistenceResult::NotExists(NotExistsReason::NoSolutionInCarrier),
        }
    }

    fn one_three_family(&self, a: &u64, _probes: usize) -> Vec<u64> {
        (0..self.n)
            .filter(|x| verify_penrose(self, a, x, PenroseEqs::ONE_THREE).expect("carrier"))
            .collect()
    }

    fn group(&self, a: &u64) -> ExistenceResult<u64> {
        let d = self.drazin(a);
        match d.index() {
            1 => ExistenceResult::Exists(self.witness(InverseKind::Group, a, d.value, None)),
            m => ExistenceResult::NotExists(NotExistsReason::IndexAboveOne(m)),
        }
    }

    fn core(&self, a: &u64) -> ExistenceResult<u64> {
        match self.pseudo_core(a) {
            ExistenceResult::Exists(w) if w.index() == 1 => {
                ExistenceResult::Exists(self.witness(InverseKind::Core, a, w.value, None))
            }
            ExistenceResult::Exists(w) => {
                ExistenceResult::NotExists(NotExistsReason::IndexAboveOne(w.index()))
            }
            ExistenceResult::NotExists(r) => ExistenceResult::NotExists(r),
        }
    }

    /// Composition route: a^D · a^m · (a^m)^(1,3) at the Drazin index m.
    fn pseudo_core(&self, a: &u64) -> ExistenceResult<u64> {
        let d = self.drazin(a);
        let m = d.index();
        let am = self.power(a, m);
        match self.one_three(&am) {
            ExistenceResult::Exists(ot) => {
                let x = self.mul(&self.mul(&d.value, &am), &ot.value);
                ExistenceResult::Exists(self.witness(InverseKind::PseudoCore, a, x, Some(m)))
            }
            ExistenceResult::NotExists(_) => {
                ExistenceResult::NotExists(NotExistsReason::NoOneThreeInverseOfPower(m))
            }
        }
    }

    fn dual_pseudo_core(&self, a: &u64) -> ExistenceResult<u64> {
        // star is the identity, so the dual inverse is the pseudo core
        // inverse re-verified against the mirrored equations.
        match self.pseudo_core(a) {
            ExistenceResult::Exists(w) => {
                let m = w.index();
                ExistenceResult::Exists(self.witness(
                    InverseKind::DualPseudoCore,
                    a,
                    w.value,
                    Some(m),
                ))
            }
            ExistenceResult::NotExists(r) => ExistenceResult::NotExists(r),
        }
    }

    fn equation_candidates(&self, a: &u64) -> Vec<u64> {
        if self.n <= 1 << 16 {
            (0..self.n).collect()
        } else {
            let mut out = vec![0, self.one(), self.drazin(a).value];
            if let Some(pc) = self.pseudo_core(a).into_witness() {
                if !out.contains(&pc.value) {
                    out.push(pc.value);
                }
            }
            out
        }
    }

    fn is_unit(&self, a: &u64) -> bool {
        (0..self.n).any(|x| self.mul(a, &x) == self.one() && self.mul(&x, a) == self.one())
    }

    fn left_ideal_contained(&self, x: &u64, y: &u64) -> bool {
        let members: Vec<bool> = {
            let mut m = vec![false; self.n as usize];
            for r in 0..self.n {
                m[self.mul(&r, y) as usize] = true;
            }
            m
        };
        (0..self.n).all(|r| members[self.mul(&r, x) as usize])
    }

    fn index_bound(&self, a: &u64) -> u32 {
        let (s, r) = self.power_period(a);
        s + r
    }
}

/// A carrier whose elements can be exhaustively enumerated in a fixed,
/// documented order (lexicographic on the value, resp. on the row-major
/// entry tuple).
pub trait FiniteCarrier: Inverses {
    fn size(&self) -> u64;
    fn element_at(&self, i: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    /// Every element exactly once, in enumeration order; fails loudly when
    /// the carrier exceeds the budget.
    fn enumerate(&self, budget: u64) -> Result<Vec<Self::Elem>, Error> {
        let size = self.size();
        if size > budget {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget,
            });
        }
        Ok((0..size).map(|i| self.element_at(i)).collect())
    }
}

impl FiniteCarrier for ZnRing {
    fn size(&self) -> u64 {
        self.n
    }
    fn element_at(&self, i: u64) -> u64 {
        i
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

impl FiniteCarrier for FpMatrixRing {
    fn size(&self) -> u64 {
        self.carrier_size()
    }
    fn element_at(&self, i: u64) -> Self::Elem {
        FpMatrixRing::element_at(self, i)
    }
    fn index_of(&self, a: &Self::Elem) -> u64 {
        self.element_index(a)
    }
}

/// A subset of a finite carrier as a bitmap over the canonical enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSubset {
    descriptor: StarRingDescriptor,
    universe: u64,
    bits: Vec<u64>,
}

impl RingSubset {
    pub fn empty<C: FiniteCarrier>(carrier: &C) -> Self {
        let universe = carrier.size();
        RingSubset {
            descriptor: carrier.descriptor(),
            universe,
            bits: vec![0; universe.div_ceil(64) as usize],
        }
    }

    pub fn insert(&mut self, idx: u64) {
        assert!(idx < self.universe);
        self.bits[(idx / 64) as usize] |= 1 << (idx % 64);
    }

    pub fn contains(&self, idx: u64) -> bool {
        idx < self.universe && self.bits[(idx / 64) as usize] & (1 << (idx % 64)) != 0
    }

    pub fn is_subset_of(&self, other: &RingSubset) -> bool {
        assert_eq!(self.descriptor, other.descriptor, "subsets of different carriers");
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &RingSubset) -> RingSubset {
        assert_eq!(self.descriptor, other.descriptor, "subsets of different carriers");
        RingSubset {
            descriptor: self.descriptor.clone(),
            universe: self.universe,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn len(&self) -> u64 {
        self.bits.iter().map(|b| b.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.universe).filter(|i| self.contains(*i))
    }
}

/// The left annihilator {x : x·a = 0}.
pub fn left_annihilator<C: FiniteCarrier>(
    carrier: &C,
    a: &C::Elem,
    budget: u64,
) -> Result<RingSubset, Error> {
    let mut set = RingSubset::empty(carrier);
    for x in carrier.enumerate(budget)? {
        if carrier.is_zero(&carrier.mul(&x, a)) {
            set.insert(carrier.index_of(&x));
        }
    }
    Ok(set)
}

/// The principal right ideal {a·x : x in R}.
pub fn principal_right_ideal<C: FiniteCarrier>(
    carrier: &C,
    a: &C::Elem,
    budget: u64,
) -> Result<RingSubset, Error> {
    let mut set = RingSubset::empty(carrier);
    for x in carrier.enumerate(budget)? {
        set.insert(carrier.index_of(&carrier.mul(a, &x)));
    }
    Ok(set)
}

/// The principal left ideal {x·a : x in R}.
pub fn principal_left_ideal<C: FiniteCarrier>(
    carrier: &C,
    a: &C::Elem,
    budget: u64,
) -> Result<RingSubset, Error> {
    let mut set = RingSubset::empty(carrier);
    for x in carrier.enumerate(budget)? {
        set.insert(carrier.index_of(&carrier.mul(&x, a)));
    }
    Ok(set)
}

/// The two equivalent set-level conditions characterizing `x` as the pseudo
/// core inverse of `a` at index m:
/// variant 1: xax = x and xR = x*R = a^m R;
/// variant 2: xax = x, ann_l(x) = ann_l(a^m) and ann_l(x*) ⊆ ann_l(a^m).
pub fn check_lemma_2_12<C: FiniteCarrier>(
    carrier: &C,
    a: &C::Elem,
    x: &C::Elem,
    m: u32,
    variant: u8,
    budget: u64,
) -> Result<bool, Error> {
    assert!(m >= 1);
    let xax = carrier.mul(&carrier.mul(x, a), x);
    if !carrier.eq(&xax, x) {
        return Ok(false);
    }
    let am = carrier.power(a, m);
    let xs = carrier.star(x);
    match variant {
        1 => {
            let rx = principal_right_ideal(carrier, x, budget)?;
            let rxs = principal_right_ideal(carrier, &xs, budget)?;
            let ram = principal_right_ideal(carrier, &am, budget)?;
            Ok(rx == rxs && rxs == ram)
        }
        2 => {
            let ax = left_annihilator(carrier, x, budget)?;
            let axs = left_annihilator(carrier, &xs, budget)?;
            let aam = left_annihilator(carrier, &am, budget)?;
            Ok(ax == aam && axs.is_subset_of(&aam))
        }
        _ => Err(Error::UnknownId(format!("lemma 2.12 variant {variant}"))),
    }
}

/// The two equivalent set-level conditions characterizing *-DMP at index m
/// through some x: the conditions of [`check_lemma_2_12`] strengthened by
/// variant 1: x^m R = (a^m)* R; variant 2: ann_l((a^m)*) ⊆ ann_l(x^m).
pub fn check_theorem_2_13<C: FiniteCarrier>(
    carrier: &C,
    a: &C::Elem,
    x: &C::Elem,
    m: u32,
    variant: u8,
    budget: u64,
) -> Result<bool, Error> {
    if !check_lemma_2_12(carrier, a, x, m, variant, budget)? {
        return Ok(false);
    }
    let xm = carrier.power(x, m);
    let ams = carrier.star(&carrier.power(a, m));
    match variant {
        1 => {
            let rxm = principal_right_ideal(carrier, &xm, budget)?;
            let rams = principal_right_ideal(carrier, &ams, budget)?;
            Ok(rxm == rams)
        }
        2 => {
            let aams = left_annihilator(carrier, &ams, budget)?;
            let axm = left_annihilator(carrier, &xm, budget)?;
            Ok(aams.is_subset_of(&axm))
        }
        _ => Err(Error::UnknownId(format!("theorem 2.13 variant {variant}"))),
    }
}

/// Oracle solutions: each witness paired with its index (for the indexed
/// kinds).
pub type OracleSolutions<E> = Vec<(E, Option<u32>)>;

/// Scans every element (and, for the indexed kinds, every index up to the
/// periodicity bound) and returns all exact solutions of the defining
/// equations at the smallest index where any exist.
pub fn brute_force_inverse<C: FiniteCarrier>(
    carrier: &C,
    kind: InverseKind,
    a: &C::Elem,
    budget: u64,
) -> Result<OracleSolutions<C::Elem>, Error> {
    let elems = carrier.enumerate(budget)?;
    let plain = |pred: &dyn Fn(&C::Elem) -> bool| -> OracleSolutions<C::Elem> {
        elems
            .iter()
            .filter(|x| pred(x))
            .map(|x| (x.clone(), None))
            .collect()
    };
    Ok(match kind {
        InverseKind::MoorePenrose => plain(&|x| {
            verify_penrose(carrier, a, x, PenroseEqs::ALL).expect("same carrier")
        }),
        InverseKind::OneThree => plain(&|x| {
            verify_penrose(carrier, a, x, PenroseEqs::ONE_THREE).expect("same carrier")
        }),
        InverseKind::Group => plain(&|x| verify_drazin(carrier, a, x, 1).expect("same carrier")),
        InverseKind::Core => {
            plain(&|x| verify_pseudo_core_eqs(carrier, a, x, 1).expect("same carrier"))
        }
        InverseKind::Drazin | InverseKind::PseudoCore | InverseKind::DualPseudoCore => {
            let bound = carrier.index_bound(a);
            let mut out = Vec::new();
            for m in 1..=bound {
                for x in &elems {
                    let hit = match kind {
                        InverseKind::Drazin => {
                            verify_drazin(carrier, a, x, m).expect("same carrier")
                        }
                        InverseKind::PseudoCore => {
                            verify_pseudo_core_eqs(carrier, a, x, m).expect("same carrier")
                        }
                        _ => verify_dual_pseudo_core_eqs(carrier, a, x, m).expect("same carrier"),
                    };
                    if hit {
                        out.push((x.clone(), Some(m)));
                    }
                }
                if !out.is_empty() {
                    break;
                }
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn zn_descriptor_validation() {
        assert!(ZnRing::new(1).is_err());
        assert!(ZnRing::new(2).is_ok());
    }

    #[test]
    fn enumeration_order_and_budget() {
        let z4 = ZnRing::new(4).unwrap();
        assert_eq!(z4.enumerate(DEFAULT_BUDGET).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(
            z4.enumerate(3),
            Err(Error::BudgetExceeded { needed: 4, budget: 3 })
        );
        let f2 = FpMatrixRing::new(2, 2).unwrap();
        assert_eq!(f2.enumerate(DEFAULT_BUDGET).unwrap().len(), 16);
        let f3 = FpMatrixRing::new(3, 2).unwrap();
        assert_eq!(f3.enumerate(DEFAULT_BUDGET).unwrap().len(), 81);
    }

    #[test]
    fn oracle_drazin_of_two_mod_four() {
        let z4 = ZnRing::new(4).unwrap();
        let sols = brute_force_inverse(&z4, InverseKind::Drazin, &2, DEFAULT_BUDGET).unwrap();
        assert_eq!(sols, vec![(0, Some(2))]);
        // The constructive route agrees.
        let d = z4.drazin(&2);
        assert_eq!((d.value, d.index), (0, Some(2)));
    }

    #[test]
    fn oracle_moore_penrose_of_units() {
        let z9 = ZnRing::new(9).unwrap();
        for u in (0..9).filter(|u| z9.is_unit(u)) {
            let sols =
                brute_force_inverse(&z9, InverseKind::MoorePenrose, &u, DEFAULT_BUDGET).unwrap();
            assert_eq!(sols.len(), 1);
            assert_eq!(z9.mul(&sols[0].0, &u), 1);
        }
    }

    #[test]
    fn oracle_pseudo_core_of_zero() {
        let z6 = ZnRing::new(6).unwrap();
        let sols = brute_force_inverse(&z6, InverseKind::PseudoCore, &0, DEFAULT_BUDGET).unwrap();
        assert_eq!(sols, vec![(0, Some(1))]);
    }

    #[test]
    fn annihilators_and_ideals() {
        let z4 = ZnRing::new(4).unwrap();
        let whole = left_annihilator(&z4, &0, DEFAULT_BUDGET).unwrap();
        assert_eq!(whole.len(), 4);
        let only_zero = left_annihilator(&z4, &1, DEFAULT_BUDGET).unwrap();
        assert_eq!(only_zero.indices().collect::<Vec<_>>(), vec![0]);
        let ann2 = left_annihilator(&z4, &2, DEFAULT_BUDGET).unwrap();
        assert_eq!(ann2.indices().collect::<Vec<_>>(), vec![0, 2]);
        let ideal2 = principal_right_ideal(&z4, &2, DEFAULT_BUDGET).unwrap();
        assert_eq!(ideal2.indices().collect::<Vec<_>>(), vec![0, 2]);
        assert!(ideal2.is_subset_of(&whole));
        assert_eq!(ideal2.intersect(&only_zero).len(), 1);
    }

    #[test]
    fn unit_scan_matches_gcd() {
        let z12 = ZnRing::new(12).unwrap();
        for a in 0..12u64 {
            let gcd = {
                let (mut x, mut y) = (a, 12u64);
                while y != 0 {
                    (x, y) = (y, x % y);
                }
                x
            };
            assert_eq!(z12.is_unit(&a), gcd == 1, "unit status of {a} mod 12");
        }
        assert!(ZnRing::new(4).unwrap().is_unit(&3));
        assert!(!ZnRing::new(4).unwrap().is_unit(&2));
    }

    #[test]
    fn lemma_2_12_set_conditions_on_units_and_nilpotents() {
        let z4 = ZnRing::new(4).unwrap();
        // A unit with its inverse at m = 1 satisfies both variants.
        assert!(check_lemma_2_12(&z4, &3, &3, 1, 1, DEFAULT_BUDGET).unwrap());
        assert!(check_lemma_2_12(&z4, &3, &3, 1, 2, DEFAULT_BUDGET).unwrap());
        // 2 is nilpotent mod 4: x = 0 works at m = 2 (its pseudo core index).
        assert!(check_lemma_2_12(&z4, &2, &0, 2, 1, DEFAULT_BUDGET).unwrap());
        assert!(check_lemma_2_12(&z4, &2, &0, 2, 2, DEFAULT_BUDGET).unwrap());
        assert!(!check_lemma_2_12(&z4, &2, &0, 1, 1, DEFAULT_BUDGET).unwrap());
        // Theorem-level strengthening agrees on these instances.
        assert!(check_theorem_2_13(&z4, &3, &3, 1, 1, DEFAULT_BUDGET).unwrap());
        assert!(check_theorem_2_13(&z4, &2, &0, 2, 2, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn power_period_examples() {
        let z4 = ZnRing::new(4).unwrap();
        assert_eq!(z4.power_period(&2), (2, 1));
        assert_eq!(z4.power_period(&3), (1, 2));
        assert_eq!(z4.power_period(&0), (1, 1));
        let z6 = ZnRing::new(6).unwrap();
        assert_eq!(z6.power_period(&2), (1, 2));
        let d = z6.drazin(&2);
        assert_eq!((d.value, d.index), (2, Some(1)));
    }

    #[test]
    fn strong_pi_regularity_every_element_drazin_invertible() {
        for n in [2u64, 6, 8, 12] {
            let zn = ZnRing::new(n).unwrap();
            for a in 0..n {
                let sols =
                    brute_force_inverse(&zn, InverseKind::Drazin, &a, DEFAULT_BUDGET).unwrap();
                assert_eq!(sols.len(), 1, "unique Drazin inverse of {a} mod {n}");
                let d = zn.drazin(&a);
                assert_eq!((sols[0].0, sols[0].1), (d.value, d.index));
            }
        }
    }
}
