//! Concrete instances the audit runs on: documented specializations of the
//! generic complete intersection, with deterministic fallbacks, plus the
//! classical hypersurface example with a single section.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal};
use crate::parse::parse_polynomial;
use crate::poly::{coeff_int, Polynomial};
use crate::ring::RingDescriptor;
use crate::unprojection::{
    base_ring, generic_ring, minor_degrees, specialization_from_pairs, w_name, Parameters,
    UnprojectionData,
};

/// Fixed seed of the deterministic fallback generator, documented so every
/// run reproduces the same instances.
pub const SPECIALIZATION_SEED: u64 = 0x7155_3203;

const MAX_ATTEMPTS: u32 = 6;

/// A specialization that survived its genericity preconditions.
#[derive(Debug, Clone)]
pub struct StandardInstance {
    pub label: String,
    pub params: Parameters,
    pub assignments: Vec<(String, String)>,
    pub data: UnprojectionData,
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// The documented primary choice for (1, 2): monomial coefficients on the
/// minors at positions 1, 2, 5 and zero elsewhere, making the specialized
/// generator homogeneous of degree 6 (one more than the largest minor
/// degree, the same uniform degree the generic weights produce). That
/// degree leaves the first section at degree 5, so the adjoined generator
/// carries a positive degree and the quotient stays positively graded.
fn primary_1_2(ring: &Arc<RingDescriptor>) -> Vec<(String, Polynomial)> {
    let p = |s: &str| parse_polynomial(ring, s).unwrap();
    vec![
        (w_name(1, 1), p("a_1_1*a_2_1")),
        (w_name(1, 2), p("a_2_1")),
        (w_name(1, 3), p("0")),
        (w_name(1, 4), p("0")),
        (w_name(1, 5), p("a_2_2")),
        (w_name(1, 6), p("0")),
    ]
}

/// A monomial in the `a` variables of the requested weighted degree, chosen
/// by the seeded generator; weight-1 variables make the greedy fill total.
fn random_monomial(
    ring: &Arc<RingDescriptor>,
    params: Parameters,
    degree: u64,
    rng: &mut XorShift,
) -> Polynomial {
    let mut names: Vec<(String, u64)> = Vec::new();
    for i in 1..=(params.k() + 1) {
        for j in 1..=params.n() {
            names.push((crate::unprojection::a_name(i, j), i as u64));
        }
    }
    let mut acc = Polynomial::one(ring);
    let mut remaining = degree;
    while remaining > 0 {
        let usable: Vec<&(String, u64)> = names.iter().filter(|(_, w)| *w <= remaining).collect();
        let pick = usable[rng.below(usable.len() as u64) as usize];
        acc = acc
            .checked_mul(&Polynomial::var_by_name(ring, &pick.0).unwrap())
            .unwrap();
        remaining -= pick.1;
    }
    acc
}

/// Seeded fallback: a few minors per generator, coefficient monomials of the
/// complementary degree, signs alternating by draw.
fn seeded_assignments(
    params: Parameters,
    ring: &Arc<RingDescriptor>,
    attempt: u32,
) -> Vec<(String, Polynomial)> {
    let degs = minor_degrees(params);
    let target = degs.iter().max().unwrap() + 1;
    let mut rng = XorShift(
        SPECIALIZATION_SEED
            .wrapping_add(attempt as u64)
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            | 1,
    );
    let l = degs.len();
    let mut out = Vec::new();
    for p in 1..=(params.num_ci_generators() as u32) {
        let supports = 3 + (rng.below(2) as usize);
        let mut chosen = std::collections::BTreeSet::new();
        while chosen.len() < supports.min(l) {
            chosen.insert(rng.below(l as u64) as usize);
        }
        for jx in 0..l {
            let name = w_name(p, jx as u32 + 1);
            if chosen.contains(&jx) {
                let mut m = random_monomial(ring, params, target - degs[jx], &mut rng);
                if rng.below(2) == 1 {
                    m = m.scale(&coeff_int(-1));
                }
                out.push((name, m));
            } else {
                out.push((name, Polynomial::zero(ring)));
            }
        }
    }
    out
}

/// Probe hook: the fallback assignments, exposed for timing experiments.
pub fn seeded_assignments_for_probe(
    params: Parameters,
    ring: &Arc<RingDescriptor>,
    attempt: u32,
) -> Vec<(String, Polynomial)> {
    attempt_assignments(params, ring, attempt)
}

fn attempt_assignments(
    params: Parameters,
    target: &Arc<RingDescriptor>,
    attempt: u32,
) -> Vec<(String, Polynomial)> {
    if params.k() == 1 && params.n() == 2 && attempt == 0 {
        return primary_1_2(target);
    }
    seeded_assignments(params, target, attempt)
}

/// Build the documented specialization for the given parameters, walking the
/// fallback list until one passes its genericity preconditions.
pub fn standard_instance(params: Parameters, cfg: &EngineConfig) -> Result<StandardInstance> {
    let generic = generic_ring(params)?;
    let base = base_ring(params)?;
    let mut last_reason = String::new();
    for attempt in 0..MAX_ATTEMPTS {
        let assigns = attempt_assignments(params, &base, attempt);
        let hat = specialization_from_pairs(
            &generic,
            &base,
            assigns
                .iter()
                .map(|(n, p)| (n.clone(), p.clone()))
                .collect(),
        )?;
        match UnprojectionData::specialized(params, &hat, cfg) {
            Ok(data) => {
                // the specialized inner ideal must keep full codimension nk - 1
                let codim = data.ideal_x.codimension(cfg)?;
                if codim != params.divisor_codimension() - 1 {
                    last_reason = format!(
                        "attempt {attempt}: specialized ideal has codimension {codim}, wanted {}",
                        params.divisor_codimension() - 1
                    );
                    continue;
                }
                return Ok(StandardInstance {
                    label: format!("std[k={},n={},attempt={attempt}]", params.k(), params.n()),
                    params,
                    assignments: assigns
                        .iter()
                        .map(|(n, p)| (n.clone(), p.to_string()))
                        .collect(),
                    data,
                });
            }
            Err(Error::Genericity(reason)) => {
                last_reason = format!("attempt {attempt}: {reason}");
                continue;
            }
            Err(other) => return Err(other),
        }
    }
    Err(Error::Genericity(format!(
        "no specialization attempt survived for (k,n)=({},{}); last: {last_reason}",
        params.k(),
        params.n()
    )))
}

/// The hypersurface example: the cuspidal plane cubic with the reduced ideal
/// of its singular point as the divisor.
#[derive(Debug, Clone)]
pub struct HypersurfaceExample {
    pub ring: Arc<RingDescriptor>,
    pub ideal_x: Ideal,
    pub divisor_gens: Vec<Polynomial>,
    pub denominator: Polynomial,
}

pub fn cuspidal_cubic_example() -> Result<HypersurfaceExample> {
    let ring = RingDescriptor::new(vec![("x0", 1), ("x1", 1), ("x2", 1)])?;
    let p = |s: &str| parse_polynomial(&ring, s);
    let ideal_x = Ideal::new(ring.clone(), vec![p("x2^2*x0 - x1^3")?])?;
    let divisor_gens = vec![p("x1")?, p("x2")?];
    let denominator = p("x2")?;
    Ok(HypersurfaceExample {
        ring,
        ideal_x,
        divisor_gens,
        denominator,
    })
}
