//! The registered catalog of equational *-DMP characterizations.
//!
//! Every entry evaluates one equivalent condition exactly and, when the
//! condition holds, claims the corresponding index. The replay suite
//! asserts that each verdict agrees with the definitional classification
//! on every tested element.

use crate::ring::Inverses;
use crate::Error;

/// One registered characterization.
#[derive(Clone, Copy, Debug)]
pub struct Characterization {
    pub id: &'static str,
    /// The condition checked, in formula form (g ranges over {1,3}-inverses).
    pub condition: &'static str,
    /// Conditions using subtraction apply to ring carriers only; every
    /// carrier in this crate is a ring, so the flag is informational.
    pub ring_only: bool,
}

pub const CATALOG: &[Characterization] = &[
    Characterization { id: "T2.4-1", condition: "m minimal with a^m {1,3}-invertible and a·g = g·a for some g in (a^m){1,3}", ring_only: false },
    Characterization { id: "T2.4-2", condition: "m minimal with a^m {1,3}-invertible and a^m·g = g·a^m for some g in (a^m){1,3}", ring_only: false },
    Characterization { id: "T2.6-1", condition: "a^D = a^D·(a·a^D)*", ring_only: false },
    Characterization { id: "T2.6-2", condition: "a^D = (a^D·a)*·a^D", ring_only: false },
    Characterization { id: "T2.6-3", condition: "a^D·(1 - a·a^D)* = (1 - a·a^D)·(a^D)*", ring_only: true },
    Characterization { id: "T2.9-2", condition: "a^(s) = a_(s) (pseudo core equals dual pseudo core)", ring_only: false },
    Characterization { id: "T2.9-3", condition: "a·a^(s) = a_(s)·a", ring_only: false },
    Characterization { id: "T2.10-1", condition: "a·a^(s) = a^(s)·a", ring_only: false },
    Characterization { id: "T2.10-2", condition: "a^D·a^(s) = a^(s)·a^D", ring_only: false },
    Characterization { id: "T2.10-3", condition: "a^(s) = g·a^m·a^D for some g in (a^m){1,3}", ring_only: false },
    Characterization { id: "T2.10-4", condition: "a^(m+1)·a^(s) = a^m", ring_only: false },
    Characterization { id: "T2.10-5", condition: "(a^(s))^2·a = a^(s)", ring_only: false },
    Characterization { id: "T2.10-6", condition: "(a^(s)·a)* = a^(s)·a", ring_only: false },
    Characterization { id: "T2.10-7", condition: "a·a^(s) commutes with a^(s)·a", ring_only: false },
    Characterization { id: "T2.11-2", condition: "m minimal with x·a^(m+1) = a^m, a·x^2 = x, (x^m·a^m)* = x^m·a^m for some x", ring_only: false },
    Characterization { id: "T2.11-3", condition: "m minimal with x·a^(m+1) = a^m, a·x = x·a, (x^m·a^m)* = x^m·a^m for some x", ring_only: false },
    Characterization { id: "C5.3-2", condition: "a·a^(s) = a_(s)·a", ring_only: false },
    Characterization { id: "C5.3-3", condition: "a·a^(s) = a·a^(s)·a_(s)·a and u = a·a^(s) + 1 - a_(s)·a a unit", ring_only: true },
    Characterization { id: "C5.3-4", condition: "a·a^(s) = a·a^(s)·a_(s)·a and v = a^m + 1 - a_(s)·a a unit", ring_only: true },
    Characterization { id: "C5.3-5", condition: "a·a^(s) commutes with a_(s)·a and u, s units", ring_only: true },
    Characterization { id: "C5.3-6", condition: "a·a^(s) commutes with a_(s)·a and w = 1 - (a·a^(s) - a_(s)·a)^2 a unit", ring_only: true },
    Characterization { id: "C5.3-7", condition: "a·a^(s) commutes with a_(s)·a and (a_(s))*·a·a^(s) - a^(s)·a_(s)·a = (a_(s))* - a^(s)", ring_only: true },
];

/// Verdict of one characterization on one element. `Inapplicable` is a
/// third value distinct from `Fails`, reserved for elements lacking an
/// inverse the condition mentions; it never coincides with a positive
/// definitional verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharVerdict {
    Holds { index: u32 },
    Fails,
    Inapplicable(&'static str),
}

impl CharVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CharVerdict::Holds { .. })
    }
}

/// Whether a catalog verdict agrees with the definitional classification
/// (`Some(m)` iff *-DMP with index m): a positive vote must carry the same
/// index, and a negative element may vote `Fails` or `Inapplicable`.
pub fn concordant(verdict: &CharVerdict, definitional: Option<u32>) -> bool {
    match (verdict, definitional) {
        (CharVerdict::Holds { index }, Some(m)) => *index == m,
        (CharVerdict::Fails, None) => true,
        (CharVerdict::Inapplicable(_), None) => true,
        _ => false,
    }
}

pub fn evaluate<C: Inverses>(carrier: &C, id: &str, a: &C::Elem) -> Result<CharVerdict, Error> {
    Ok(match id {
        "T2.4-1" => one_three_power(carrier, a, 1),
        "T2.4-2" => one_three_power(carrier, a, 2),
        "T2.6-1" => drazin_star(carrier, a, 1),
        "T2.6-2" => drazin_star(carrier, a, 2),
        "T2.6-3" => drazin_star(carrier, a, 3),
        "T2.9-2" => dual_pair(carrier, a, 2),
        "T2.9-3" => dual_pair(carrier, a, 3),
        "T2.10-1" => pseudo_core_only(carrier, a, 1),
        "T2.10-2" => pseudo_core_only(carrier, a, 2),
        "T2.10-3" => pseudo_core_only(carrier, a, 3),
        "T2.10-4" => pseudo_core_only(carrier, a, 4),
        "T2.10-5" => pseudo_core_only(carrier, a, 5),
        "T2.10-6" => pseudo_core_only(carrier, a, 6),
        "T2.10-7" => pseudo_core_only(carrier, a, 7),
        "T2.11-2" => equational(carrier, a, 2),
        "T2.11-3" => equational(carrier, a, 3),
        "C5.3-2" => unit_certified(carrier, a, 2),
        "C5.3-3" => unit_certified(carrier, a, 3),
        "C5.3-4" => unit_certified(carrier, a, 4),
        "C5.3-5" => unit_certified(carrier, a, 5),
        "C5.3-6" => unit_certified(carrier, a, 6),
        "C5.3-7" => unit_certified(carrier, a, 7),
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

/// Evaluates every registered characterization on one element.
pub fn evaluate_all<C: Inverses>(carrier: &C, a: &C::Elem) -> Vec<(&'static str, CharVerdict)> {
    CATALOG
        .iter()
        .map(|ch| (ch.id, evaluate(carrier, ch.id, a).expect("registered id")))
        .collect()
}

/// Conditions quantified over {1,3}-inverses of powers, with combined
/// minimality: the smallest m at which a^m is {1,3}-invertible and some
/// {1,3}-inverse satisfies the commutation.
fn one_three_power<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let bound = carrier.index_bound(a);
    let mut any_invertible = false;
    for m in 1..=bound {
        let am = carrier.power(a, m);
        let family = carrier.one_three_family(&am, crate::analysis::DEFAULT_PROBES);
        if family.is_empty() {
            continue;
        }
        any_invertible = true;
        let found = family.iter().any(|g| match variant {
            1 => carrier.eq(&carrier.mul(a, g), &carrier.mul(g, a)),
            _ => carrier.eq(&carrier.mul(&am, g), &carrier.mul(g, &am)),
        });
        if found {
            return CharVerdict::Holds { index: m };
        }
    }
    if any_invertible {
        CharVerdict::Fails
    } else {
        CharVerdict::Inapplicable("no power of the element has a {1,3}-inverse")
    }
}

fn drazin_star<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let d = carrier.drazin(a);
    let m = d.index();
    let proj = carrier.mul(a, &d.value);
    let holds = match variant {
        1 => carrier.eq(&d.value, &carrier.mul(&d.value, &carrier.star(&proj))),
        2 => carrier.eq(
            &d.value,
            &carrier.mul(&carrier.star(&carrier.mul(&d.value, a)), &d.value),
        ),
        _ => {
            let q = carrier.sub(&carrier.one(), &proj);
            carrier.eq(
                &carrier.mul(&d.value, &carrier.star(&q)),
                &carrier.mul(&q, &carrier.star(&d.value)),
            )
        }
    };
    if holds {
        CharVerdict::Holds { index: m }
    } else {
        CharVerdict::Fails
    }
}

fn dual_pair<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let (Some(pc), Some(dpc)) = (
        carrier.pseudo_core(a).into_witness(),
        carrier.dual_pseudo_core(a).into_witness(),
    ) else {
        return CharVerdict::Inapplicable("pseudo core or dual pseudo core inverse absent");
    };
    let holds = match variant {
        2 => carrier.eq(&pc.value, &dpc.value),
        _ => carrier.eq(&carrier.mul(a, &pc.value), &carrier.mul(&dpc.value, a)),
    };
    if holds {
        CharVerdict::Holds { index: pc.index() }
    } else {
        CharVerdict::Fails
    }
}

fn pseudo_core_only<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let Some(pc) = carrier.pseudo_core(a).into_witness() else {
        return CharVerdict::Inapplicable("pseudo core inverse absent");
    };
    let m = pc.index();
    let x = &pc.value;
    let holds = match variant {
        1 => carrier.eq(&carrier.mul(a, x), &carrier.mul(x, a)),
        2 => {
            let d = carrier.drazin(a);
            carrier.eq(&carrier.mul(&d.value, x), &carrier.mul(x, &d.value))
        }
        3 => {
            let d = carrier.drazin(a);
            let am = carrier.power(a, m);
            carrier
                .one_three_family(&am, crate::analysis::DEFAULT_PROBES)
                .iter()
                .any(|g| carrier.eq(x, &carrier.mul(&carrier.mul(g, &am), &d.value)))
        }
        4 => carrier.eq(&carrier.mul(&carrier.power(a, m + 1), x), &carrier.power(a, m)),
        5 => carrier.eq(&carrier.mul(&carrier.mul(x, x), a), x),
        6 => carrier.is_symmetric(&carrier.mul(x, a)),
        _ => {
            let ax = carrier.mul(a, x);
            let xa = carrier.mul(x, a);
            carrier.eq(&carrier.mul(&ax, &xa), &carrier.mul(&xa, &ax))
        }
    };
    if holds {
        CharVerdict::Holds { index: m }
    } else {
        CharVerdict::Fails
    }
}

/// Pure equation systems with an existential solution, minimized over the
/// index: exhaustive over finite carriers, constructed candidates
/// elsewhere.
fn equational<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let bound = carrier.index_bound(a);
    let candidates = carrier.equation_candidates(a);
    for m in 1..=bound {
        let am = carrier.power(a, m);
        let am1 = carrier.mul(&am, a);
        let found = candidates.iter().any(|x| {
            if !carrier.eq(&carrier.mul(x, &am1), &am) {
                return false;
            }
            let middle = match variant {
                2 => carrier.eq(&carrier.mul(a, &carrier.mul(x, x)), x),
                _ => carrier.eq(&carrier.mul(a, x), &carrier.mul(x, a)),
            };
            middle && carrier.is_symmetric(&carrier.mul(&carrier.power(x, m), &am))
        });
        if found {
            return CharVerdict::Holds { index: m };
        }
    }
    CharVerdict::Fails
}

fn unit_certified<C: Inverses>(carrier: &C, a: &C::Elem, variant: u8) -> CharVerdict {
    let (Some(pc), Some(dpc)) = (
        carrier.pseudo_core(a).into_witness(),
        carrier.dual_pseudo_core(a).into_witness(),
    ) else {
        return CharVerdict::Inapplicable("pseudo core or dual pseudo core inverse absent");
    };
    let m = pc.index();
    let one = carrier.one();
    let p = carrier.mul(a, &pc.value);
    let t = carrier.mul(&dpc.value, a);
    let commute = carrier.eq(&carrier.mul(&p, &t), &carrier.mul(&t, &p));
    let absorb = carrier.eq(&p, &carrier.mul(&p, &t));
    let holds = match variant {
        2 => carrier.eq(&p, &t),
        3 => absorb && carrier.is_unit(&carrier.add(&carrier.sub(&p, &t), &one)),
        4 => {
            absorb
                && carrier.is_unit(&carrier.add(&carrier.sub(&carrier.power(a, m), &t), &one))
        }
        5 => {
            commute
                && carrier.is_unit(&carrier.add(&carrier.sub(&p, &t), &one))
                && carrier.is_unit(&carrier.add(&carrier.sub(&t, &p), &one))
        }
        6 => {
            let diff = carrier.sub(&p, &t);
            commute && carrier.is_unit(&carrier.sub(&one, &carrier.mul(&diff, &diff)))
        }
        _ => {
            let lhs = carrier.sub(
                &carrier.mul(&carrier.star(&dpc.value), &p),
                &carrier.mul(&pc.value, &t),
            );
            let rhs = carrier.sub(&carrier.star(&dpc.value), &pc.value);
            commute && carrier.eq(&lhs, &rhs)
        }
    };
    if holds {
        CharVerdict::Holds { index: m }
    } else {
        CharVerdict::Fails
    }
}
