//! Numerators of the unprojection sections.
//!
//! Working with a regular denominator `f` in the divisor ideal, the inverse
//! divisor ideal is `(1/f) * ((f) + I_X : I_D)`. The colon ideal is computed
//! once; its nontrivial classes modulo `A = (f) + I_X` generate the module
//! the sections span, one class per degree in the graded case. The lowest
//! class is the first numerator. Each later numerator is the unique solution
//! of a small exact linear system demanding that the pairing relations
//!
//! `a_(i+1)j * g_p + a_ij * g_(p+1)  in  A`
//! `z * a_1j * g_p + a_(k+1)j * g_(p+1)  in  A`
//!
//! hold for every column index; the unknowns are the candidate class at the
//! right degree plus low-degree multiples of the earlier numerators, which
//! also pins every scale. Degrees step by exactly one.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, GroebnerBasis, Ideal};
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingDescriptor;

use super::build::{a_name, Parameters};

/// All monomials of the ring with the given weighted degree.
fn monomials_of_degree(ring: &Arc<RingDescriptor>, degree: u64) -> Vec<Monomial> {
    fn rec(
        weights: &[u32],
        var: usize,
        remaining: u64,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if var + 1 == weights.len() {
            let w = weights[var] as u64;
            if remaining % w == 0 {
                if let Ok(e) = u32::try_from(remaining / w) {
                    exps.push(e);
                    out.push(Monomial::from_exponents(exps.clone()));
                    exps.pop();
                }
            }
            return;
        }
        let w = weights[var] as u64;
        let max = remaining / w;
        for e in 0..=max {
            exps.push(e as u32);
            rec(weights, var + 1, remaining - e * w, exps, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    if ring.num_vars() == 0 {
        return out;
    }
    rec(ring.weights(), 0, degree, &mut Vec::new(), &mut out);
    out
}

/// Is `p` a scalar multiple of `q`? Returns the scalar.
fn scalar_ratio(p: &Polynomial, q: &Polynomial) -> Option<Coeff> {
    if p.is_zero() || q.is_zero() || p.num_terms() != q.num_terms() {
        return None;
    }
    let ratio = &p.terms()[0].1 / &q.terms()[0].1;
    for ((mp, cp), (mq, cq)) in p.terms().iter().zip(q.terms()) {
        if mp != mq || cp != &(&ratio * cq) {
            return None;
        }
    }
    Some(ratio)
}

fn degree_of(p: &Polynomial) -> Option<u64> {
    p.weighted_degree()
}

pub(crate) struct SectionContext {
    pub ring: Arc<RingDescriptor>,
    pub gb_xf: Arc<GroebnerBasis>,
    /// Nontrivial colon classes modulo `A`, normal forms sorted by degree.
    pub classes: Vec<Polynomial>,
    graded: bool,
}

impl SectionContext {
    /// `ideal_xf` is `A = (f) + I_X`; `divisor_gens` generate the divisor
    /// ideal (a minimal set keeps the intersection count down).
    pub fn new(
        ring: &Arc<RingDescriptor>,
        ideal_xf: &Ideal,
        divisor_gens: &[Polynomial],
        cfg: &EngineConfig,
    ) -> Result<Self> {
        let divisor = Ideal::new(ring.clone(), divisor_gens.to_vec())?;
        let colon = ideal_xf.colon_ideal(&divisor, cfg)?;
        let gb_xf = ideal_xf.default_basis(cfg)?;
        let graded = ideal_xf.is_homogeneous() && divisor.is_homogeneous();
        let gens: Vec<Polynomial> = if graded {
            colon.minimal_generators(cfg)?
        } else {
            colon.default_basis(cfg)?.polys().to_vec()
        };
        let mut classes: Vec<Polynomial> = gens
            .iter()
            .map(|g| gb_xf.normal_form(g))
            .filter(|nf| !nf.is_zero())
            .collect();
        classes.sort_by(|a, b| {
            degree_of(a)
                .cmp(&degree_of(b))
                .then_with(|| a.cmp_canonical(b))
        });
        Ok(SectionContext {
            ring: ring.clone(),
            gb_xf,
            classes,
            graded,
        })
    }
}

/// The lowest nontrivial colon class, made monic. This is the first section
/// numerator, and the whole answer for single-section data.
pub(crate) fn first_class(ctx: &SectionContext, _cfg: &EngineConfig) -> Result<Polynomial> {
    let first = ctx.classes.first().ok_or_else(|| {
        Error::Genericity("the colon ideal has no class outside (f) + I_X".into())
    })?;
    let d0 = degree_of(first).expect("nontrivial class is nonzero");
    if ctx.graded {
        // the lowest class must be unique up to scalar
        for other in ctx.classes.iter().skip(1) {
            if degree_of(other) == Some(d0) && scalar_ratio(first, other).is_none() {
                return Err(Error::Genericity(
                    "two independent section classes share the lowest degree".into(),
                ));
            }
        }
    }
    let lc = first.leading().expect("nonzero").1.clone();
    Ok(first.scale(&(Coeff::one() / lc)))
}

/// Compute the `k + 1` section numerators `g_0, ..., g_k`.
pub(crate) fn compute_sections(
    params: Parameters,
    ctx: &SectionContext,
    cfg: &EngineConfig,
) -> Result<Vec<Polynomial>> {
    let count = params.num_sections();
    let g0 = first_class(ctx, cfg)?;
    let d0 = degree_of(&g0).expect("nonzero");
    let mut sections = vec![g0];

    for p in 1..count as u64 {
        let target = d0 + p;
        // in the graded case the degree is forced; allow slack otherwise
        let slack = if ctx.graded { 0 } else { 2 };
        let mut found = None;
        for extra in 0..=slack {
            if let Some(g) = solve_step(params, ctx, &sections, target + extra, cfg)? {
                found = Some(g);
                break;
            }
        }
        let g = found.ok_or_else(|| {
            Error::Genericity(format!(
                "sections not found within degree budget (step {p})"
            ))
        })?;
        sections.push(g);
    }
    Ok(sections)
}

/// Solve for the next numerator at the given degree: unknowns are the
/// nontrivial classes near that degree plus low-degree multiples of the
/// earlier numerators. Returns `None` when the system has no nontrivial
/// solution there.
fn solve_step(
    params: Parameters,
    ctx: &SectionContext,
    earlier: &[Polynomial],
    target: u64,
    cfg: &EngineConfig,
) -> Result<Option<Polynomial>> {
    let _ = cfg;
    let ring = &ctx.ring;
    let prev = earlier.last().expect("at least g_0");

    // Unknown basis: candidate classes at (or, ungraded, near) the target
    // degree, plus monomial multiples of every earlier numerator.
    let mut basis: Vec<Polynomial> = Vec::new();
    for c in &ctx.classes {
        let d = degree_of(c).expect("nonzero class");
        let fits = if ctx.graded {
            d == target
        } else {
            d <= target
        };
        if fits {
            basis.push(c.clone());
        }
    }
    for g in earlier {
        let dg = degree_of(g).expect("sections are nonzero");
        if dg > target {
            continue;
        }
        let gaps: Vec<u64> = if ctx.graded {
            vec![target - dg]
        } else {
            (0..=(target - dg)).collect()
        };
        for gap in gaps {
            if gap == 0 {
                continue;
            }
            for m in monomials_of_degree(ring, gap) {
                let nf = ctx.gb_xf.normal_form(&g.mul_term(&m, &Coeff::one()));
                if !nf.is_zero() {
                    basis.push(nf);
                }
            }
        }
    }
    if basis.is_empty() {
        return Ok(None);
    }

    let var = |name: &str| Polynomial::var_by_name(ring, name);
    let z = var("z")?;

    // Pairing rows: NF(lead * prev) + sum_s x_s * NF(mate * basis_s) = 0.
    let mut rows: Vec<(Polynomial, Vec<Polynomial>)> = Vec::new();
    let mut push_row = |lead: Polynomial, mate: Polynomial| -> Result<()> {
        rows.push((
            ctx.gb_xf.normal_form(&lead.checked_mul(prev)?),
            basis
                .iter()
                .map(|v| ctx.gb_xf.normal_form(&mate.checked_mul(v).unwrap()))
                .collect(),
        ));
        Ok(())
    };
    for i in 1..=params.k() {
        for j in 1..=params.n() {
            push_row(var(&a_name(i + 1, j))?, var(&a_name(i, j))?)?;
        }
    }
    for j in 1..=params.n() {
        push_row(
            z.checked_mul(&var(&a_name(1, j))?)?,
            var(&a_name(params.k() + 1, j))?,
        )?;
    }

    // Assemble the exact system over the monomial support of each row.
    let ncols = basis.len();
    let mut mat: Vec<Vec<Coeff>> = Vec::new();
    let mut rhs: Vec<Coeff> = Vec::new();
    for (target_nf, mates) in &rows {
        let mut monomials: Vec<Monomial> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (m, _) in target_nf.terms() {
            if seen.insert(m.clone()) {
                monomials.push(m.clone());
            }
        }
        for mate in mates {
            for (m, _) in mate.terms() {
                if seen.insert(m.clone()) {
                    monomials.push(m.clone());
                }
            }
        }
        for mono in &monomials {
            let mut row = Vec::with_capacity(ncols);
            for mate in mates {
                let c = mate
                    .terms()
                    .iter()
                    .find(|(m, _)| m == mono)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Coeff::zero);
                row.push(c);
            }
            let b = target_nf
                .terms()
                .iter()
                .find(|(m, _)| m == mono)
                .map(|(_, c)| -c)
                .unwrap_or_else(Coeff::zero);
            mat.push(row);
            rhs.push(b);
        }
    }

    let Some(x) = linalg::solve(mat, rhs, ncols) else {
        return Ok(None);
    };
    let mut v = Polynomial::zero(ring);
    for (coef, cand) in x.iter().zip(&basis) {
        if !coef.is_zero() {
            v = v.checked_add(&cand.scale(coef))?;
        }
    }
    let nf = ctx.gb_xf.normal_form(&v);
    if nf.is_zero() {
        return Ok(None);
    }
    Ok(Some(nf))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_weighted() {
        let r = RingDescriptor::new(vec![("x", 1), ("y", 2)]).unwrap();
        // degree 4: x^4, x^2 y, y^2
        let ms = monomials_of_degree(&r, 4);
        assert_eq!(ms.len(), 3);
        let r1 = RingDescriptor::new(vec![("x", 1)]).unwrap();
        assert_eq!(monomials_of_degree(&r1, 0).len(), 1);
        assert_eq!(monomials_of_degree(&r1, 7).len(), 1);
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let r = RingDescriptor::new(vec![("x", 1), ("y", 1)]).unwrap();
        let x = Polynomial::var_by_name(&r, "x").unwrap();
        let y = Polynomial::var_by_name(&r, "y").unwrap();
        let p = &x + &y.scale(&crate::poly::coeff_int(2));
        let q = p.scale(&crate::poly::coeff_ratio(-3, 2));
        assert_eq!(scalar_ratio(&q, &p), Some(crate::poly::coeff_ratio(-3, 2)));
        assert!(scalar_ratio(&p, &x).is_none());
        assert!(scalar_ratio(&p, &(&x + &y)).is_none());
    }
}
