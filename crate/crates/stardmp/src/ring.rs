//! The abstract *-ring interface, the defining-equation verifiers for the
//! generalized inverse family, and the provider trait implemented by every
//! concrete carrier.
//!
//! The verifiers evaluate the defining equations literally, with exact
//! equality and no normalization, so they serve as the independent check
//! for every constructive formula elsewhere in the crate.

use std::fmt;

use crate::Error;

/// How the involution acts on a matrix carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Involution {
    ConjugateTranspose,
    Transpose,
    /// Only legal on commutative carriers.
    Identity,
}

impl Involution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Involution::ConjugateTranspose => "conjugate-transpose",
            Involution::Transpose => "transpose",
            Involution::Identity => "identity",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "conjugate-transpose" => Some(Involution::ConjugateTranspose),
            "transpose" => Some(Involution::Transpose),
            "identity" => Some(Involution::Identity),
            _ => None,
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifies a concrete carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarRingDescriptor {
    /// n×n matrices over Q(i).
    GaussianRationalMatrix { n: usize, involution: Involution },
    /// The ring Z_n with the identity involution, n >= 2.
    Zn { n: u64 },
    /// k×k matrices over F_p (p prime) with the transpose involution.
    ZpMatrix { p: u64, k: usize, involution: Involution },
}

impl StarRingDescriptor {
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            StarRingDescriptor::GaussianRationalMatrix { n, involution } => {
                if *n < 1 {
                    return Err(Error::BadDescriptor("matrix dimension must be >= 1".into()));
                }
                if *involution == Involution::Identity && *n > 1 {
                    return Err(Error::BadDescriptor(
                        "identity involution requires a commutative carrier (n = 1)".into(),
                    ));
                }
                Ok(())
            }
            StarRingDescriptor::Zn { n } => {
                if *n < 2 {
                    return Err(Error::BadDescriptor("zn modulus must be >= 2".into()));
                }
                Ok(())
            }
            StarRingDescriptor::ZpMatrix { p, k, involution } => {
                if !crate::scalar::is_prime(*p) {
                    return Err(Error::BadDescriptor(format!("{p} is not prime")));
                }
                if *k < 1 {
                    return Err(Error::BadDescriptor("matrix dimension must be >= 1".into()));
                }
                if *involution == Involution::Identity && *k > 1 {
                    return Err(Error::BadDescriptor(
                        "identity involution requires a commutative carrier (k = 1)".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for StarRingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarRingDescriptor::GaussianRationalMatrix { n, involution } => {
                write!(f, "{n}x{n} over Q(i), {involution}")
            }
            StarRingDescriptor::Zn { n } => write!(f, "Z_{n}"),
            StarRingDescriptor::ZpMatrix { p, k, involution } => {
                write!(f, "{k}x{k} over F_{p}, {involution}")
            }
        }
    }
}

/// A ring with involution, presented as a context object over plain values.
pub trait StarRing {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn descriptor(&self) -> StarRingDescriptor;
    /// Whether `a` is a well-formed element of this carrier.
    fn contains(&self, a: &Self::Elem) -> bool;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq(a, &self.zero())
    }

    /// `a^k` by repeated squaring, with `a^0 = 1`.
    fn power(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a* = a`.
    fn is_symmetric(&self, a: &Self::Elem) -> bool {
        self.eq(&self.star(a), a)
    }

    /// `a a* = a* a`.
    fn is_normal(&self, a: &Self::Elem) -> bool {
        let s = self.star(a);
        self.eq(&self.mul(a, &s), &self.mul(&s, a))
    }
}

/// A subset of the four Penrose equations, encoded as a bitmask over
/// equations 1..=4: (1) axa = a, (2) xax = x, (3) (ax)* = ax, (4) (xa)* = xa.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PenroseEqs(u8);

impl PenroseEqs {
    pub const ALL: PenroseEqs = PenroseEqs(0b1111);
    pub const ONE_THREE: PenroseEqs = PenroseEqs(0b0101);

    /// Builds from explicit equation numbers; numbers outside 1..=4 are
    /// rejected.
    pub fn from_eqs(eqs: &[u8]) -> Option<PenroseEqs> {
        let mut mask = 0u8;
        for &e in eqs {
            if !(1..=4).contains(&e) {
                return None;
            }
            mask |= 1 << (e - 1);
        }
        Some(PenroseEqs(mask))
    }

    pub fn has(&self, eq: u8) -> bool {
        debug_assert!((1..=4).contains(&eq));
        self.0 & (1 << (eq - 1)) != 0
    }
}

fn check_carrier<R: StarRing + ?Sized>(ring: &R, elems: &[&R::Elem]) -> Result<(), Error> {
    if elems.iter().all(|e| ring.contains(e)) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

/// Whether every selected Penrose equation holds exactly for the pair (a, x).
pub fn verify_penrose<R: StarRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    which: PenroseEqs,
) -> Result<bool, Error> {
    check_carrier(ring, &[a, x])?;
    let ax = ring.mul(a, x);
    let xa = ring.mul(x, a);
    if which.has(1) && !ring.eq(&ring.mul(&ax, a), a) {
        return Ok(false);
    }
    if which.has(2) && !ring.eq(&ring.mul(&xa, x), x) {
        return Ok(false);
    }
    if which.has(3) && !ring.is_symmetric(&ax) {
        return Ok(false);
    }
    if which.has(4) && !ring.is_symmetric(&xa) {
        return Ok(false);
    }
    Ok(true)
}

/// `a^m x a = a^m`, `x a x = x`, `a x = x a` at the given index m >= 1.
pub fn verify_drazin<R: StarRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    m: u32,
) -> Result<bool, Error> {
    assert!(m >= 1, "drazin index must be positive");
    check_carrier(ring, &[a, x])?;
    let am = ring.power(a, m);
    let ax = ring.mul(a, x);
    let xa = ring.mul(x, a);
    Ok(ring.eq(&ring.mul(&ring.mul(&am, x), a), &am)
        && ring.eq(&ring.mul(&xa, x), x)
        && ring.eq(&ax, &xa))
}

/// `x a^2 = a`, `a x^2 = x`, `(ax)* = ax`.
pub fn verify_core_eqs<R: StarRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
) -> Result<bool, Error> {
    verify_pseudo_core_eqs(ring, a, x, 1)
}

/// `x a^(m+1) = a^m`, `a x^2 = x`, `(ax)* = ax` at index m >= 1.
pub fn verify_pseudo_core_eqs<R: StarRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    m: u32,
) -> Result<bool, Error> {
    assert!(m >= 1, "pseudo core index must be positive");
    check_carrier(ring, &[a, x])?;
    let am = ring.power(a, m);
    let am1 = ring.mul(&am, a);
    let ax = ring.mul(a, x);
    Ok(ring.eq(&ring.mul(x, &am1), &am)
        && ring.eq(&ring.mul(&ax, x), x)
        && ring.is_symmetric(&ax))
}

/// `a^(m+1) x = a^m`, `x^2 a = x`, `(xa)* = xa` at index m >= 1 — the star
/// mirror of [`verify_pseudo_core_eqs`].
pub fn verify_dual_pseudo_core_eqs<R: StarRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    m: u32,
) -> Result<bool, Error> {
    assert!(m >= 1, "dual pseudo core index must be positive");
    check_carrier(ring, &[a, x])?;
    let am = ring.power(a, m);
    let am1 = ring.mul(a, &am);
    let xa = ring.mul(x, a);
    Ok(ring.eq(&ring.mul(&am1, x), &am)
        && ring.eq(&ring.mul(x, &xa), x)
        && ring.is_symmetric(&xa))
}

/// The kinds of generalized inverses handled by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum InverseKind {
    MoorePenrose,
    OneThree,
    Group,
    Drazin,
    Core,
    PseudoCore,
    DualPseudoCore,
}

impl InverseKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InverseKind::MoorePenrose => "moore-penrose",
            InverseKind::OneThree => "one-three",
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
            InverseKind::Core => "core",
            InverseKind::PseudoCore => "pseudo-core",
            InverseKind::DualPseudoCore => "dual-pseudo-core",
        }
    }

    /// Parses the command-line spellings.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "mp" | "moore-penrose" => Some(InverseKind::MoorePenrose),
            "13" | "one-three" => Some(InverseKind::OneThree),
            "group" => Some(InverseKind::Group),
            "drazin" => Some(InverseKind::Drazin),
            "core" => Some(InverseKind::Core),
            "pseudo-core" => Some(InverseKind::PseudoCore),
            "dual-pseudo-core" => Some(InverseKind::DualPseudoCore),
            _ => None,
        }
    }

    /// Whether witnesses of this kind carry an index.
    pub fn indexed(&self) -> bool {
        matches!(
            self,
            InverseKind::Drazin | InverseKind::PseudoCore | InverseKind::DualPseudoCore
        )
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed generalized inverse together with its index (for the indexed
/// kinds) and the outcome of re-checking the defining equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseWitness<E> {
    pub kind: InverseKind,
    pub value: E,
    pub index: Option<u32>,
    pub verified: bool,
}

impl<E> InverseWitness<E> {
    pub fn index(&self) -> u32 {
        self.index.expect("witness kind carries no index")
    }
}

/// Structured reason for the absence of an inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotExistsReason {
    /// The Hermitian-style form on the range is degenerate, so no
    /// star-symmetric projector onto the range exists.
    FormDegenerate,
    /// No {1,3}-inverse of the relevant power exists (the power is recorded).
    NoOneThreeInverseOfPower(u32),
    /// The Drazin index exceeds one, ruling out group/core inverses.
    IndexAboveOne(u32),
    /// An exhaustive scan of the carrier found no solution.
    NoSolutionInCarrier,
}

impl NotExistsReason {
    pub fn code(&self) -> &'static str {
        match self {
            NotExistsReason::FormDegenerate => "form-degenerate",
            NotExistsReason::NoOneThreeInverseOfPower(_) => "no-13-inverse-of-power",
            NotExistsReason::IndexAboveOne(_) => "index-above-one",
            NotExistsReason::NoSolutionInCarrier => "no-solution-in-carrier",
        }
    }
}

impl fmt::Display for NotExistsReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotExistsReason::NoOneThreeInverseOfPower(m) => {
                write!(f, "{} (power {m})", self.code())
            }
            NotExistsReason::IndexAboveOne(m) => write!(f, "{} (index {m})", self.code()),
            _ => f.write_str(self.code()),
        }
    }
}

/// Outcome of an existence question: a verified witness or a structured
/// reason for absence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExistenceResult<E> {
    Exists(InverseWitness<E>),
    NotExists(NotExistsReason),
}

impl<E> ExistenceResult<E> {
    pub fn exists(&self) -> bool {
        matches!(self, ExistenceResult::Exists(_))
    }

    pub fn witness(&self) -> Option<&InverseWitness<E>> {
        match self {
            ExistenceResult::Exists(w) => Some(w),
            ExistenceResult::NotExists(_) => None,
        }
    }

    pub fn value(&self) -> Option<&E> {
        self.witness().map(|w| &w.value)
    }

    pub fn into_witness(self) -> Option<InverseWitness<E>> {
        match self {
            ExistenceResult::Exists(w) => Some(w),
            ExistenceResult::NotExists(_) => None,
        }
    }
}

/// A carrier that can produce the whole inverse family. Every witness
/// returned has been re-verified against its defining equations.
pub trait Inverses: StarRing {
    /// The Drazin inverse with its (minimal) index. Always exists on the
    /// carriers of this crate: square matrices over a field and finite
    /// rings are strongly pi-regular.
    fn drazin(&self, a: &Self::Elem) -> InverseWitness<Self::Elem>;

    fn moore_penrose(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;

    /// The canonical, deterministic {1,3}-inverse.
    fn one_three(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;

    /// Verified {1,3}-inverses of `a` for "for some {1,3}-inverse"
    /// quantifiers: exhaustive on finite carriers; on matrix carriers the
    /// canonical witness plus deterministic perturbations and any special
    /// candidates (Moore-Penrose, group) that qualify.
    fn one_three_family(&self, a: &Self::Elem, probes: usize) -> Vec<Self::Elem>;

    fn group(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;
    fn core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;
    fn pseudo_core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;
    fn dual_pseudo_core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem>;

    /// Candidate solutions for purely existential equation
    /// characterizations: every element on small finite carriers,
    /// constructed specials (Drazin, pseudo core, dual pseudo core, zero,
    /// one) elsewhere.
    fn equation_candidates(&self, a: &Self::Elem) -> Vec<Self::Elem>;

    /// Two-sided invertibility in the carrier.
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Containment of principal left ideals: `R·x ⊆ R·y`.
    fn left_ideal_contained(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    /// Horizon for index searches: the matrix dimension on matrix carriers,
    /// the point where the power sequence of `a` has become periodic on
    /// finite carriers.
    fn index_bound(&self, a: &Self::Elem) -> u32;

    fn drazin_index(&self, a: &Self::Elem) -> u32 {
        self.drazin(a).index()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::ZnRing;

    #[test]
    fn penrose_eqs_subsets() {
        assert!(PenroseEqs::from_eqs(&[1, 3]).unwrap() == PenroseEqs::ONE_THREE);
        assert!(PenroseEqs::from_eqs(&[5]).is_none());
        assert!(PenroseEqs::ALL.has(4));
        assert!(!PenroseEqs::ONE_THREE.has(2));
    }

    #[test]
    fn identity_is_its_own_inverse_everywhere() {
        let ring = ZnRing::new(7).unwrap();
        let one = ring.one();
        assert!(verify_penrose(&ring, &one, &one, PenroseEqs::ALL).unwrap());
        assert!(verify_drazin(&ring, &one, &one, 1).unwrap());
        assert!(verify_core_eqs(&ring, &one, &one).unwrap());
        assert!(verify_pseudo_core_eqs(&ring, &one, &one, 1).unwrap());
        assert!(verify_dual_pseudo_core_eqs(&ring, &one, &one, 1).unwrap());
    }

    #[test]
    fn drazin_of_two_mod_four_is_zero_at_index_two() {
        // Exhaustive scan over Z_4 confirms 0 is the only Drazin inverse of 2.
        let ring = ZnRing::new(4).unwrap();
        let sols: Vec<u64> = (0..4)
            .filter(|x| verify_drazin(&ring, &2, x, 2).unwrap())
            .collect();
        assert_eq!(sols, vec![0]);
        assert!(!verify_drazin(&ring, &2, &0, 1).unwrap());
    }

    #[test]
    fn carrier_mismatch_is_reported() {
        let ring = ZnRing::new(4).unwrap();
        assert_eq!(
            verify_penrose(&ring, &9, &1, PenroseEqs::ALL),
            Err(Error::CarrierMismatch)
        );
    }

    #[test]
    fn power_by_repeated_squaring() {
        let ring = ZnRing::new(4).unwrap();
        assert_eq!(ring.power(&2, 0), 1);
        assert_eq!(ring.power(&2, 1), 2);
        assert_eq!(ring.power(&2, 2), 0);
        assert_eq!(ring.power(&3, 5), 3);
    }
}
