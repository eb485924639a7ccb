//! *-DMP classification, the pseudo core and core-nilpotent
//! decompositions, the pseudo core pre-order, and the projector-equality
//! batteries. Everything here is generic over any carrier implementing the
//! inverse family.

use crate::catalog::{self, CharVerdict};
use crate::ring::{verify_drazin, ExistenceResult, Inverses, InverseWitness, NotExistsReason};
use crate::Error;

/// How many perturbed {1,3}-inverses to probe on infinite carriers when a
/// statement quantifies over "some {1,3}-inverse".
pub const DEFAULT_PROBES: usize = 8;

/// EP: the group and Moore-Penrose inverses both exist and coincide.
pub fn is_ep<C: Inverses>(carrier: &C, a: &C::Elem) -> bool {
    match (
        carrier.group(a).into_witness(),
        carrier.moore_penrose(a).into_witness(),
    ) {
        (Some(g), Some(mp)) => carrier.eq(&g.value, &mp.value),
        _ => false,
    }
}

/// The *-DMP verdict with index: `Some(m)` iff a·a^D is symmetric, in which
/// case m is the Drazin index.
pub fn star_dmp_index<C: Inverses>(carrier: &C, a: &C::Elem) -> Option<u32> {
    let d = carrier.drazin(a);
    let proj = carrier.mul(a, &d.value);
    carrier.is_symmetric(&proj).then(|| d.index())
}

/// Independent route used for cross-checks: the smallest m within the index
/// bound such that a^m is EP.
pub fn ep_power_scan<C: Inverses>(carrier: &C, a: &C::Elem) -> Option<u32> {
    (1..=carrier.index_bound(a)).find(|&m| is_ep(carrier, &carrier.power(a, m)))
}

/// Full classification of one element: the verdict, the minimal index, all
/// obtainable witnesses, and the vote of every applicable catalog
/// characterization.
#[derive(Clone, Debug)]
pub struct DmpReport<E> {
    pub subject: E,
    pub is_star_dmp: bool,
    pub index: Option<u32>,
    pub drazin: InverseWitness<E>,
    pub power_mp: Option<InverseWitness<E>>,
    pub pseudo_core: Option<InverseWitness<E>>,
    pub dual_pseudo_core: Option<InverseWitness<E>>,
    pub votes: Vec<(&'static str, CharVerdict)>,
}

pub fn star_dmp<C: Inverses>(carrier: &C, a: &C::Elem) -> DmpReport<C::Elem> {
    let drazin = carrier.drazin(a);
    let m = drazin.index();
    let is_star_dmp = carrier.is_symmetric(&carrier.mul(a, &drazin.value));
    if is_star_dmp {
        // The index is minimal by definition: no smaller power is EP.
        for k in 1..m {
            assert!(
                !is_ep(carrier, &carrier.power(a, k)),
                "index minimality violated at power {k}"
            );
        }
    }
    let power_mp = carrier
        .moore_penrose(&carrier.power(a, m))
        .into_witness();
    let pseudo_core = carrier.pseudo_core(a).into_witness();
    let dual_pseudo_core = carrier.dual_pseudo_core(a).into_witness();
    if is_star_dmp {
        // Report invariant: (a^D)^m = (a^m)^+ exactly on *-DMP subjects.
        let mp = power_mp.as_ref().expect("a^m is Moore-Penrose invertible");
        assert!(
            carrier.eq(&carrier.power(&drazin.value, m), &mp.value),
            "(a^D)^m differs from (a^m)^+ on a *-DMP subject"
        );
    }
    DmpReport {
        subject: a.clone(),
        is_star_dmp,
        index: is_star_dmp.then_some(m),
        drazin,
        power_mp,
        pseudo_core,
        dual_pseudo_core,
        votes: catalog::evaluate_all(carrier, a),
    }
}

/// Evaluates one registered characterization.
pub fn star_dmp_via<C: Inverses>(carrier: &C, id: &str, a: &C::Elem) -> Result<CharVerdict, Error> {
    catalog::evaluate(carrier, id, a)
}

/// The commuting factor u with u·a = a·u = (a^m)* and its own group
/// inverse, constructed when a is *-DMP of index m and a·(a*)^m = (a*)^m·a.
#[derive(Clone, Debug)]
pub struct CommutingStarFactor<E> {
    pub value: E,
    pub group_inverse: E,
    /// Whether u·a = a·u = (a^m)* and the group equations of the companion
    /// all re-verified.
    pub verified: bool,
}

pub fn theorem_2_7_witness<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
) -> Option<CommutingStarFactor<C::Elem>> {
    let m = star_dmp_index(carrier, a)?;
    let sam = carrier.power(&carrier.star(a), m);
    if !carrier.eq(&carrier.mul(a, &sam), &carrier.mul(&sam, a)) {
        return None;
    }
    let d = carrier.drazin(a);
    let u = carrier.mul(&d.value, &carrier.star(&carrier.power(a, m)));
    let companion = carrier.mul(a, &carrier.star(&carrier.power(&d.value, m)));
    let ua = carrier.mul(&u, a);
    let au = carrier.mul(a, &u);
    let ams = carrier.star(&carrier.power(a, m));
    let verified = carrier.eq(&ua, &ams)
        && carrier.eq(&au, &ams)
        && verify_drazin(carrier, &u, &companion, 1).expect("same carrier");
    Some(CommutingStarFactor {
        value: u,
        group_inverse: companion,
        verified,
    })
}

/// Certified axioms of a pseudo core decomposition a = a1 + a2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionAxioms {
    pub sum: bool,
    pub nilpotent: bool,
    pub star_orthogonal: bool,
    pub absorbed: bool,
    pub group_invertible: bool,
}

impl DecompositionAxioms {
    pub fn all(&self) -> bool {
        self.sum && self.nilpotent && self.star_orthogonal && self.absorbed && self.group_invertible
    }
}

/// a = a1 + a2 with a1 = a·a^⊛·a group invertible, a2^m = 0,
/// a1*·a2 = a2·a1 = 0.
#[derive(Clone, Debug)]
pub struct PseudoCoreDecomposition<E> {
    pub group_part: E,
    pub nilpotent_part: E,
    pub index: u32,
    pub axioms: DecompositionAxioms,
}

/// a = c_a + n_a with c_a = a·a^D·a, n_a nilpotent, c_a·n_a = n_a·c_a = 0
/// and c_a^# = a^D.
#[derive(Clone, Debug)]
pub struct CoreNilpotentDecomposition<E> {
    pub core_part: E,
    pub nilpotent_part: E,
    pub index: u32,
    pub axioms: DecompositionAxioms,
}

pub fn pseudo_core_decompose<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
) -> Result<PseudoCoreDecomposition<C::Elem>, NotExistsReason> {
    let pc = match carrier.pseudo_core(a) {
        ExistenceResult::Exists(w) => w,
        ExistenceResult::NotExists(r) => return Err(r),
    };
    let m = pc.index();
    let group_part = carrier.mul(&carrier.mul(a, &pc.value), a);
    let nilpotent_part = carrier.sub(a, &group_part);
    // The stated group inverse of a1 is (a^⊛)^2 · a.
    let a1_sharp = carrier.mul(&carrier.power(&pc.value, 2), a);
    let axioms = DecompositionAxioms {
        sum: carrier.eq(&carrier.add(&group_part, &nilpotent_part), a),
        nilpotent: carrier.is_zero(&carrier.power(&nilpotent_part, m)),
        star_orthogonal: carrier
            .is_zero(&carrier.mul(&carrier.star(&group_part), &nilpotent_part)),
        absorbed: carrier.is_zero(&carrier.mul(&nilpotent_part, &group_part)),
        group_invertible: verify_drazin(carrier, &group_part, &a1_sharp, 1).expect("same carrier"),
    };
    Ok(PseudoCoreDecomposition {
        group_part,
        nilpotent_part,
        index: m,
        axioms,
    })
}

pub fn core_nilpotent_decompose<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
) -> CoreNilpotentDecomposition<C::Elem> {
    let d = carrier.drazin(a);
    let m = d.index();
    let core_part = carrier.mul(&carrier.mul(a, &d.value), a);
    let nilpotent_part = carrier.sub(a, &core_part);
    let axioms = DecompositionAxioms {
        sum: carrier.eq(&carrier.add(&core_part, &nilpotent_part), a),
        nilpotent: carrier.is_zero(&carrier.power(&nilpotent_part, m)),
        star_orthogonal: carrier
            .is_zero(&carrier.mul(&core_part, &nilpotent_part)),
        absorbed: carrier.is_zero(&carrier.mul(&nilpotent_part, &core_part)),
        group_invertible: verify_drazin(carrier, &core_part, &d.value, 1).expect("same carrier"),
    };
    CoreNilpotentDecomposition {
        core_part,
        nilpotent_part,
        index: m,
        axioms,
    }
}

/// Whether the core inverse of the decomposition part a1 equals the pseudo
/// core inverse of a — computed through the carrier's own core-inverse
/// route, so the two sides are independent. `None` when a^⊛ is absent.
pub fn theorem_3_3_check<C: Inverses>(carrier: &C, a: &C::Elem) -> Option<bool> {
    let pc = carrier.pseudo_core(a).into_witness()?;
    let a1 = carrier.mul(&carrier.mul(a, &pc.value), a);
    Some(
        carrier
            .core(&a1)
            .into_witness()
            .is_some_and(|core| carrier.eq(&core.value, &pc.value)),
    )
}

/// Whether the *-DMP verdict (at the pseudo core index) coincides with a1
/// being EP. `None` when a^⊛ is absent.
pub fn theorem_3_4_check<C: Inverses>(carrier: &C, a: &C::Elem) -> Option<bool> {
    let pc = carrier.pseudo_core(a).into_witness()?;
    let a1 = carrier.mul(&carrier.mul(a, &pc.value), a);
    let dmp = star_dmp_index(carrier, a);
    if let Some(m) = dmp {
        if m != pc.index() {
            return Some(false);
        }
    }
    Some(dmp.is_some() == is_ep(carrier, &a1))
}

/// Whether the pseudo core and core-nilpotent decompositions agree
/// componentwise; `None` when the pseudo core inverse is absent.
pub fn decompositions_coincide<C: Inverses>(carrier: &C, a: &C::Elem) -> Option<bool> {
    let p = pseudo_core_decompose(carrier, a).ok()?;
    let c = core_nilpotent_decompose(carrier, a);
    Some(
        carrier.eq(&p.group_part, &c.core_part)
            && carrier.eq(&p.nilpotent_part, &c.nilpotent_part),
    )
}

/// Whether a candidate triple (b1, b2, m) satisfies the decomposition
/// axioms for `a`.
pub fn decomposition_candidate_valid<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b1: &C::Elem,
    b2: &C::Elem,
    m: u32,
) -> bool {
    m >= 1
        && carrier.eq(&carrier.add(b1, b2), a)
        && carrier.is_zero(&carrier.power(b2, m))
        && carrier.is_zero(&carrier.mul(&carrier.star(b1), b2))
        && carrier.is_zero(&carrier.mul(b2, b1))
        && carrier.group(b1).exists()
}

/// Compares a valid candidate decomposition against the canonical one.
/// Malformed candidates and subjects without a pseudo core inverse are
/// rejected as errors rather than reported as `false`.
pub fn decomposition_unique<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    candidate: (&C::Elem, &C::Elem, u32),
) -> Result<bool, Error> {
    let (b1, b2, m) = candidate;
    if !decomposition_candidate_valid(carrier, a, b1, b2, m) {
        return Err(Error::BadDescriptor(
            "candidate violates the decomposition axioms".into(),
        ));
    }
    let canonical = pseudo_core_decompose(carrier, a)
        .map_err(|r| Error::BadDescriptor(format!("no pseudo core inverse: {r}")))?;
    Ok(carrier.eq(b1, &canonical.group_part) && carrier.eq(b2, &canonical.nilpotent_part))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRelation {
    PseudoCore,
    Core,
}

impl OrderRelation {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderRelation::PseudoCore => "pseudo-core",
            OrderRelation::Core => "core",
        }
    }
}

/// One defining equality of an order relation, with both evaluated sides.
#[derive(Clone, Debug)]
pub struct EqualityCheck<E> {
    pub label: &'static str,
    pub lhs: E,
    pub rhs: E,
    pub equal: bool,
}

/// Verdict of an order comparison: holds iff both recorded equalities are
/// exact.
#[derive(Clone, Debug)]
pub struct OrderVerdict<E> {
    pub relation: OrderRelation,
    pub holds: bool,
    pub equalities: Vec<EqualityCheck<E>>,
}

fn order_verdict<C: Inverses>(
    carrier: &C,
    relation: OrderRelation,
    inv_a: &C::Elem,
    a: &C::Elem,
    b: &C::Elem,
) -> OrderVerdict<C::Elem> {
    let eq1 = EqualityCheck {
        label: "x·a = x·b",
        lhs: carrier.mul(inv_a, a),
        rhs: carrier.mul(inv_a, b),
        equal: false,
    };
    let eq2 = EqualityCheck {
        label: "a·x = b·x",
        lhs: carrier.mul(a, inv_a),
        rhs: carrier.mul(b, inv_a),
        equal: false,
    };
    let mut equalities = vec![eq1, eq2];
    for e in &mut equalities {
        e.equal = carrier.eq(&e.lhs, &e.rhs);
    }
    OrderVerdict {
        relation,
        holds: equalities.iter().all(|e| e.equal),
        equalities,
    }
}

/// a ≤ b in the pseudo core pre-order: a^⊛·a = a^⊛·b and a·a^⊛ = b·a^⊛.
/// `None` when a has no pseudo core inverse.
pub fn pseudo_core_order<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<OrderVerdict<C::Elem>> {
    let pc = carrier.pseudo_core(a).into_witness()?;
    Some(order_verdict(
        carrier,
        OrderRelation::PseudoCore,
        &pc.value,
        a,
        b,
    ))
}

/// a ≤ b in the core order: a^⊕·a = a^⊕·b and a·a^⊕ = b·a^⊕. `None` when
/// a has no core inverse.
pub fn core_order<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<OrderVerdict<C::Elem>> {
    let core = carrier.core(a).into_witness()?;
    Some(order_verdict(carrier, OrderRelation::Core, &core.value, a, b))
}

/// The three equivalent formulations of the pseudo core order for a pair
/// with both pseudo core inverses: (1) the order itself, (2) the power and
/// star conditions a^(k+1) = b·a^k and a*·a^k = b*·a^k at
/// k = max(I(a), I(b)), (3) the core order of the decomposition parts.
pub fn theorem_4_3_check<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<(bool, bool, bool)> {
    let pa = carrier.pseudo_core(a).into_witness()?;
    let pb = carrier.pseudo_core(b).into_witness()?;
    let k = pa.index().max(pb.index());
    let c1 = pseudo_core_order(carrier, a, b)?.holds;
    let ak = carrier.power(a, k);
    let c2 = carrier.eq(&carrier.mul(a, &ak), &carrier.mul(b, &ak))
        && carrier.eq(
            &carrier.mul(&carrier.star(a), &ak),
            &carrier.mul(&carrier.star(b), &ak),
        );
    let a1 = carrier.mul(&carrier.mul(a, &pa.value), a);
    let b1 = carrier.mul(&carrier.mul(b, &pb.value), b);
    let c3 = core_order(carrier, &a1, &b1)?.holds;
    Some((c1, c2, c3))
}

/// The four equivalent conditions for a ≤ b when a is *-DMP: the order, the
/// core order of the core-nilpotent parts, commutation plus absorption of
/// the pseudo core inverses, and the core order of the pseudo core
/// inverses themselves. `None` when a hypothesis fails.
pub fn theorem_4_4_check<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<[bool; 4]> {
    let pa = carrier.pseudo_core(a).into_witness()?;
    let pb = carrier.pseudo_core(b).into_witness()?;
    star_dmp_index(carrier, a)?;
    let c1 = pseudo_core_order(carrier, a, b)?.holds;
    let ca = core_nilpotent_decompose(carrier, a).core_part;
    let cb = core_nilpotent_decompose(carrier, b).core_part;
    let c2 = core_order(carrier, &ca, &cb)?.holds;
    let absorb = carrier.eq(&carrier.mul(&pa.value, b), &carrier.mul(&pa.value, a));
    let c3 = carrier.eq(
        &carrier.mul(&pa.value, &pb.value),
        &carrier.mul(&pb.value, &pa.value),
    ) && absorb;
    let c4 = core_order(carrier, &pa.value, &pb.value)?.holds && absorb;
    Some([c1, c2, c3, c4])
}

/// Under a ≤ b with a *-DMP (and b pseudo core invertible): b is *-DMP iff
/// b·(1 - a·a^⊛) is *-DMP. Returns the evaluated pair.
pub fn theorem_4_5_check<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<(bool, bool)> {
    let pa = carrier.pseudo_core(a).into_witness()?;
    carrier.pseudo_core(b).into_witness()?;
    star_dmp_index(carrier, a)?;
    if !pseudo_core_order(carrier, a, b)?.holds {
        return None;
    }
    let proj = carrier.sub(&carrier.one(), &carrier.mul(a, &pa.value));
    let tail = carrier.mul(b, &proj);
    Some((
        star_dmp_index(carrier, b).is_some(),
        star_dmp_index(carrier, &tail).is_some(),
    ))
}

/// An element whose invertibility certifies one side of a projector
/// equality.
#[derive(Clone, Debug)]
pub struct UnitCertificate<E> {
    pub label: &'static str,
    pub value: E,
    pub is_unit: bool,
}

/// One evaluated condition of the projector battery.
#[derive(Clone, Debug)]
pub struct BatteryLine<E> {
    pub id: &'static str,
    pub holds: bool,
    pub certificates: Vec<UnitCertificate<E>>,
}

/// Evaluates the four equivalent forms of a·a^⊛ = a·a^⊛·b·b^⊛ and the six
/// equivalent forms of a·a^⊛ = b·b^⊛, materializing the unit certificates
/// u, v, s, w. `None` when either pseudo core inverse is absent.
pub fn projector_equality_battery<C: Inverses>(
    carrier: &C,
    a: &C::Elem,
    b: &C::Elem,
) -> Option<Vec<BatteryLine<C::Elem>>> {
    let pa = carrier.pseudo_core(a).into_witness()?;
    let pb = carrier.pseudo_core(b).into_witness()?;
    let m = pa.index();
    let one = carrier.one();
    let p = carrier.mul(a, &pa.value);
    let q = carrier.mul(b, &pb.value);
    let pq = carrier.mul(&p, &q);
    let qp = carrier.mul(&q, &p);
    let commute = carrier.eq(&pq, &qp);
    let am = carrier.power(a, m);

    let cert = |label, value: C::Elem| {
        let is_unit = carrier.is_unit(&value);
        UnitCertificate {
            label,
            value,
            is_unit,
        }
    };
    let u = cert("u = a·a^⊛ + 1 - b·b^⊛", carrier.add(&carrier.sub(&p, &q), &one));
    let v = cert("v = a^m + 1 - b·b^⊛", carrier.add(&carrier.sub(&am, &q), &one));
    let s = cert("s = b·b^⊛ + 1 - a·a^⊛", carrier.add(&carrier.sub(&q, &p), &one));
    let diff = carrier.sub(&p, &q);
    let w = cert(
        "w = 1 - (a·a^⊛ - b·b^⊛)^2",
        carrier.sub(&one, &carrier.mul(&diff, &diff)),
    );

    let absorb_right = carrier.eq(&p, &pq);
    let mut lines = vec![
        BatteryLine {
            id: "P5.1-1",
            holds: carrier.eq(&p, &qp),
            certificates: vec![],
        },
        BatteryLine {
            id: "P5.1-2",
            holds: absorb_right,
            certificates: vec![],
        },
        BatteryLine {
            id: "P5.1-3",
            holds: carrier.eq(&pa.value, &carrier.mul(&pa.value, &q)),
            certificates: vec![],
        },
        BatteryLine {
            id: "P5.1-4",
            holds: carrier.left_ideal_contained(&pa.value, &carrier.mul(&pa.value, &q)),
            certificates: vec![],
        },
    ];
    lines.push(BatteryLine {
        id: "T5.2-1",
        holds: carrier.eq(&p, &q),
        certificates: vec![],
    });
    lines.push(BatteryLine {
        id: "T5.2-2",
        holds: absorb_right && u.is_unit,
        certificates: vec![u.clone()],
    });
    lines.push(BatteryLine {
        id: "T5.2-3",
        holds: absorb_right && v.is_unit,
        certificates: vec![v],
    });
    lines.push(BatteryLine {
        id: "T5.2-4",
        holds: commute && u.is_unit && s.is_unit,
        certificates: vec![u, s],
    });
    lines.push(BatteryLine {
        id: "T5.2-5",
        holds: commute && w.is_unit,
        certificates: vec![w],
    });
    let lhs = carrier.sub(&carrier.mul(&pb.value, &p), &carrier.mul(&pa.value, &q));
    let rhs = carrier.sub(&pb.value, &pa.value);
    lines.push(BatteryLine {
        id: "T5.2-6",
        holds: commute && carrier.eq(&lhs, &rhs),
        certificates: vec![],
    });
    Some(lines)
}

/// (a is *-DMP, a^k is *-DMP): the two verdicts are asserted equal by the
/// statement replay suite.
pub fn power_dmp_check<C: Inverses>(carrier: &C, a: &C::Elem, k: u32) -> (bool, bool) {
    assert!(k >= 1);
    (
        star_dmp_index(carrier, a).is_some(),
        star_dmp_index(carrier, &carrier.power(a, k)).is_some(),
    )
}

/// Under ab = ba, ab* = b*a with both factors *-DMP: whether ab is *-DMP.
/// `None` when a hypothesis fails.
pub fn product_dmp_check<C: Inverses>(carrier: &C, a: &C::Elem, b: &C::Elem) -> Option<bool> {
    let ab = carrier.mul(a, b);
    let hyp = carrier.eq(&ab, &carrier.mul(b, a))
        && carrier.eq(
            &carrier.mul(a, &carrier.star(b)),
            &carrier.mul(&carrier.star(b), a),
        )
        && star_dmp_index(carrier, a).is_some()
        && star_dmp_index(carrier, b).is_some();
    hyp.then(|| star_dmp_index(carrier, &ab).is_some())
}

/// Under ab = ba = 0, a*b = 0 with both summands *-DMP: whether a + b is
/// *-DMP. `None` when a hypothesis fails.
pub fn sum_dmp_check<C: Inverses>(carrier: &C, a: &C::Elem, b: &C::Elem) -> Option<bool> {
    let hyp = carrier.is_zero(&carrier.mul(a, b))
        && carrier.is_zero(&carrier.mul(b, a))
        && carrier.is_zero(&carrier.mul(&carrier.star(a), b))
        && star_dmp_index(carrier, a).is_some()
        && star_dmp_index(carrier, b).is_some();
    hyp.then(|| star_dmp_index(carrier, &carrier.add(a, b)).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::ZnRing;
    use crate::matrix::{GaussianMatrixRing, Matrix};
    use crate::ring::{Involution, StarRing};
    use crate::scalar::GaussianRational;

    fn gm(rows: &[&[&str]]) -> Matrix<GaussianRational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|e| e.parse().unwrap()).collect())
                .collect(),
        )
    }

    fn transpose_ring() -> GaussianMatrixRing {
        GaussianMatrixRing::new(2, Involution::Transpose).unwrap()
    }

    #[test]
    fn ep_examples() {
        let rt = transpose_ring();
        assert!(is_ep(&rt, &gm(&[&["1", "1"], &["0", "1"]])));
        assert!(!is_ep(&rt, &gm(&[&["i", "1"], &["-1", "i"]])));
        assert!(is_ep(&rt, &rt.zero()));
    }

    #[test]
    fn star_dmp_worked_example() {
        let rt = transpose_ring();
        let a = gm(&[&["i", "0"], &["0", "0"]]);
        let report = star_dmp(&rt, &a);
        assert!(report.is_star_dmp);
        assert_eq!(report.index, Some(1));
        let pc = report.pseudo_core.as_ref().unwrap();
        assert_eq!(pc.value, gm(&[&["-i", "0"], &["0", "0"]]));

        let not = gm(&[&["i", "0"], &["-1", "0"]]);
        let report = star_dmp(&rt, &not);
        assert!(!report.is_star_dmp);
        assert!(report.pseudo_core.is_none());
    }

    #[test]
    fn star_dmp_of_nilpotent_has_nilpotency_index() {
        let rt = transpose_ring();
        let a = gm(&[&["0", "1"], &["0", "0"]]);
        let report = star_dmp(&rt, &a);
        assert!(report.is_star_dmp);
        assert_eq!(report.index, Some(2));
        assert_eq!(ep_power_scan(&rt, &a), Some(2));
    }

    #[test]
    fn theorem_2_7_constructs_commuting_factor() {
        let rc = GaussianMatrixRing::new(2, Involution::ConjugateTranspose).unwrap();
        let a = gm(&[&["2", "0"], &["0", "0"]]);
        let f = theorem_2_7_witness(&rc, &a).unwrap();
        assert!(f.verified);
        assert_eq!(f.value, gm(&[&["1", "0"], &["0", "0"]]));
        // Zero subject: the factor is zero.
        let z = theorem_2_7_witness(&rc, &rc.zero()).unwrap();
        assert!(z.verified);
        assert!(rc.is_zero(&z.value));
    }

    #[test]
    fn decomposition_of_worked_matrix() {
        let rc = GaussianMatrixRing::new(3, Involution::ConjugateTranspose).unwrap();
        let a = gm(&[
            &["0", "1", "0"],
            &["0", "0", "0"],
            &["0", "0", "1"],
        ]);
        let d = pseudo_core_decompose(&rc, &a).unwrap();
        assert!(d.axioms.all());
        assert_eq!(d.index, 2);
        let e33 = gm(&[
            &["0", "0", "0"],
            &["0", "0", "0"],
            &["0", "0", "1"],
        ]);
        assert_eq!(d.group_part, e33);
        assert_eq!(
            d.nilpotent_part,
            gm(&[
                &["0", "1", "0"],
                &["0", "0", "0"],
                &["0", "0", "0"],
            ])
        );
        // Coincides with the core-nilpotent decomposition (the subject is
        // *-DMP).
        assert_eq!(decompositions_coincide(&rc, &a), Some(true));
        assert!(decomposition_unique(&rc, &a, (&d.group_part, &d.nilpotent_part, d.index)).unwrap());
    }

    #[test]
    fn decomposition_trivial_cases() {
        let rt = transpose_ring();
        // Group invertible: (a, 0).
        let u = gm(&[&["1", "1"], &["0", "1"]]);
        let d = pseudo_core_decompose(&rt, &u).unwrap();
        assert_eq!(d.group_part, u);
        assert!(rt.is_zero(&d.nilpotent_part));
        // Nilpotent: (0, a).
        let nil = gm(&[&["0", "1"], &["0", "0"]]);
        let d = pseudo_core_decompose(&rt, &nil).unwrap();
        assert!(rt.is_zero(&d.group_part));
        assert_eq!(d.nilpotent_part, nil);
        assert!(d.axioms.all());
    }

    #[test]
    fn core_nilpotent_on_zn() {
        let z4 = ZnRing::new(4).unwrap();
        let d = core_nilpotent_decompose(&z4, &2);
        assert_eq!((d.core_part, d.nilpotent_part), (0, 2));
        assert!(d.axioms.all());
    }

    #[test]
    fn malformed_candidates_are_rejected() {
        let rt = transpose_ring();
        let a = gm(&[&["0", "1"], &["0", "0"]]);
        // Candidate whose parts do not sum to a.
        assert!(decomposition_unique(&rt, &a, (&a, &a, 2)).is_err());
    }

    #[test]
    fn pseudo_core_order_is_reflexive_and_zero_is_least() {
        let rt = transpose_ring();
        let a = gm(&[&["i", "0"], &["0", "0"]]);
        assert!(pseudo_core_order(&rt, &a, &a).unwrap().holds);
        let any = gm(&[&["1", "2"], &["3", "4"]]);
        assert!(pseudo_core_order(&rt, &rt.zero(), &any).unwrap().holds);
        // A subject without a pseudo core inverse is inapplicable.
        let bad = gm(&[&["i", "0"], &["-1", "0"]]);
        assert!(pseudo_core_order(&rt, &bad, &any).is_none());
    }

    #[test]
    fn theorem_4_3_trivial_pairs_agree() {
        let z12 = ZnRing::new(12).unwrap();
        for a in 0..12u64 {
            let t = theorem_4_3_check(&z12, &a, &a).unwrap();
            assert_eq!(t, (true, true, true), "pair ({a}, {a})");
        }
    }

    #[test]
    fn theorem_4_4_and_4_5_trivial_pairs() {
        let z12 = ZnRing::new(12).unwrap();
        for a in 0..12u64 {
            let q = theorem_4_4_check(&z12, &a, &a).unwrap();
            assert_eq!(q, [true; 4]);
        }
        for b in 0..12u64 {
            let p = theorem_4_5_check(&z12, &0, &b).unwrap();
            assert_eq!(p.0, p.1, "tail verdict for b = {b}");
        }
    }

    #[test]
    fn battery_on_equal_pair_is_all_true_with_unit_certificates() {
        let rt = transpose_ring();
        let a = gm(&[&["i", "0"], &["0", "0"]]);
        let lines = projector_equality_battery(&rt, &a, &a).unwrap();
        for line in &lines {
            assert!(line.holds, "condition {}", line.id);
            for c in &line.certificates {
                assert!(c.is_unit, "certificate {} of {}", c.label, line.id);
            }
        }
    }

    #[test]
    fn battery_on_extreme_projectors() {
        let z6 = ZnRing::new(6).unwrap();
        let lines = projector_equality_battery(&z6, &1, &0).unwrap();
        // a·a^⊛ = 1, b·b^⊛ = 0: the six equivalent equality conditions all
        // fail together.
        for line in lines.iter().filter(|l| l.id.starts_with("T5.2")) {
            assert!(!line.holds, "condition {}", line.id);
        }
    }

    #[test]
    fn sum_and_product_checks_on_zn() {
        let z6 = ZnRing::new(6).unwrap();
        // 2 · 3 = 0 = 3 · 2 mod 6: sum hypotheses hold.
        assert_eq!(sum_dmp_check(&z6, &2, &3), Some(true));
        // Commutative carrier: product hypotheses always hold.
        assert_eq!(product_dmp_check(&z6, &2, &4), Some(true));
        for a in 0..6u64 {
            let (whole, power) = power_dmp_check(&z6, &a, 3);
            assert_eq!(whole, power);
        }
    }
}
