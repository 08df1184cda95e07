//! Buchberger engine.
//!
//! Pairs are selected by the normal strategy: smallest weighted lcm degree
//! first, ties broken by lexicographic comparison of the lcm monomial and
//! then by index. New pairs pass the Gebauer-Moeller criteria before they are
//! queued. A configurable cap on processed S-pairs turns runaway inputs into
//! a resource error instead of a hang.
//!
//! Every routine can optionally track cofactors, so a basis element always
//! knows an exact representation in terms of the input generators. That is
//! what lets callers pull division quotients back to the original ideal
//! generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Coeff;

/// Term list sorted ascending under the active order; the head is `last()`.
pub(crate) type Terms = Vec<(Monomial, Coeff)>;

#[derive(Clone, Copy)]
pub(crate) struct OrdCtx<'a> {
    pub weights: &'a [u32],
    pub order: &'a MonomialOrder,
}

impl<'a> OrdCtx<'a> {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(self.weights, a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum number of S-pairs processed before aborting.
    pub max_pairs: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_pairs: 1_000_000,
        }
    }
}

impl EngineConfig {
    pub fn with_budget(max_pairs: u64) -> Self {
        EngineConfig { max_pairs }
    }
}

pub(crate) fn leading(terms: &Terms) -> Option<&(Monomial, Coeff)> {
    terms.last()
}

/// a + c * x^m * b, both inputs sorted ascending.
pub(crate) fn add_scaled(ctx: &OrdCtx, a: &Terms, c: &Coeff, m: &Monomial, b: &Terms) -> Terms {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match ctx.cmp(&a[i].0, &bm) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((bm, c * &b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 + &(c * &b[j].1);
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (bm, bc) in &b[j..] {
        out.push((bm.mul(m), c * bc));
    }
    out
}

/// `ca * a + cb * x^m * b` in one merge pass.
fn fused_scaled(
    ctx: &OrdCtx,
    a: &Terms,
    ca: &Coeff,
    b: &Terms,
    cb: &Coeff,
    m: &Monomial,
) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match ctx.cmp(&a[i].0, &bm) {
            Ordering::Less => {
                out.push((a[i].0.clone(), ca * &a[i].1));
                i += 1;
            }
            Ordering::Greater => {
                out.push((bm, cb * &b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let s = &(ca * &a[i].1) + &(cb * &b[j].1);
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (am, ac) in &a[i..] {
        out.push((am.clone(), ca * ac));
    }
    for (bm, bc) in &b[j..] {
        out.push((bm.mul(m), cb * bc));
    }
    out
}

pub(crate) fn scale_terms(terms: &mut Terms, c: &Coeff) {
    debug_assert!(!c.is_zero());
    for (_, k) in terms.iter_mut() {
        *k *= c;
    }
}

/// Factor that makes the coefficients primitive integers with a positive
/// leading coefficient.
fn primitive_factor(terms: &Terms) -> Coeff {
    let mut den_lcm = BigInt::one();
    for (_, c) in terms {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for (_, c) in terms {
        let scaled = c.numer() * (&den_lcm / c.denom());
        content = content.gcd(&scaled);
    }
    let mut f = BigRational::new(den_lcm, content);
    if terms.last().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        f = -f;
    }
    f
}

pub(crate) fn make_primitive(terms: &mut Terms) -> Coeff {
    if terms.is_empty() {
        return Coeff::one();
    }
    let f = primitive_factor(terms);
    scale_terms(terms, &f);
    f
}

/// Full multivariate division: reduces head and tail terms alike. For each
/// reduction step `work -= q * divisors[i]`, the callback receives
/// `(i, monomial, coefficient)` of `q`. The first divisor whose leading term
/// divides is always chosen.
pub(crate) fn reduce_terms(
    ctx: &OrdCtx,
    mut work: Terms,
    divisors: &[&Terms],
    mut on_step: impl FnMut(usize, &Monomial, &Coeff),
) -> Terms {
    let mut remainder_rev: Terms = Vec::new();
    'outer: while let Some((m, c)) = work.last().cloned() {
        for (i, d) in divisors.iter().enumerate() {
            let Some((dm, dc)) = leading(d) else { continue };
            if let Some(qm) = m.checked_div(dm) {
                let qc = &c / dc;
                on_step(i, &qm, &qc);
                let neg = -qc;
                work = add_scaled(ctx, &work, &neg, &qm, d);
                continue 'outer;
            }
        }
        work.pop();
        remainder_rev.push((m, c));
    }
    remainder_rev.reverse();
    remainder_rev
}

/// Intermediate coefficients worth stripping: any numerator or denominator
/// beyond 384 bits.
fn coefficients_large(terms: &Terms) -> bool {
    terms
        .iter()
        .any(|(_, c)| c.numer().bits() > 192 || c.denom().bits() > 192)
}

/// Reduction tuned for basis construction: the remainder is only needed up
/// to a scalar, so the work polynomial is stripped to primitive form every
/// few steps to keep rational coefficients small. The tracked cofactors are
/// scaled by the same factors, so their exactness survives.
fn reduce_scaled(
    ctx: &OrdCtx,
    mut work: Terms,
    divisors: &[&Terms],
    mut rep: Option<&mut Vec<Terms>>,
    reps_of: impl Fn(usize) -> *const Vec<Terms>,
) -> Terms {
    let mut remainder_rev: Terms = Vec::new();
    let mut steps = 0usize;
    while let Some((m, c)) = work.last().cloned() {
        // cheapest reducer: fewest terms, ties by index
        let mut best: Option<(usize, &Terms)> = None;
        for (i, d) in divisors.iter().enumerate() {
            let Some((dm, _)) = leading(d) else { continue };
            if dm.divides(&m) && best.map(|(_, b)| d.len() < b.len()).unwrap_or(true) {
                best = Some((i, d));
            }
        }
        let Some((i, d)) = best else {
            // top reduction only: once the head is irreducible the element
            // is usable as a basis member; tails are cleaned up by the final
            // interreduction
            let _ = (m, c);
            return work;
        };
        let (dm, dc) = leading(d).expect("nonzero divisor");
        let qm = m.checked_div(dm).expect("divisibility checked");
        // fraction-free step: alpha * work + beta * x^qm * d with
        // alpha * c + beta * dc = 0 and both factors integral when the
        // inputs are.
        let num_a = dc.numer() * c.denom();
        let num_b = c.numer() * dc.denom();
        let g = num_a.gcd(&num_b);
        let scale_work = Coeff::from_integer(&num_a / &g);
        let scale_div = -Coeff::from_integer(num_b / g);
        work = fused_scaled(ctx, &work, &scale_work, d, &scale_div, &qm);
        debug_assert!(work.last().map(|(wm, _)| *wm != m).unwrap_or(true));
        if let Some(r) = rep.as_mut() {
            // SAFETY: the pointer is only read while the basis is not
            // mutated; callers pass stable storage.
            let other = unsafe { &*reps_of(i) };
            let scaled: Vec<Terms> = r
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    scale_terms_allow_empty(&mut t, &scale_work);
                    t
                })
                .collect();
            **r = rep_add_scaled(ctx, &scaled, &scale_div, &qm, other);
        }
        steps += 1;
        if steps % 8 == 0 && !work.is_empty() && coefficients_large(&work) {
            let f = primitive_factor(&work);
            scale_terms(&mut work, &f);
            if let Some(r) = rep.as_mut() {
                rep_scale(r, &f);
            }
        }
    }
    debug_assert!(remainder_rev.is_empty());
    remainder_rev
}

fn scale_terms_allow_empty(terms: &mut Terms, c: &Coeff) {
    for (_, k) in terms.iter_mut() {
        *k *= c;
    }
}

struct BasisElem {
    terms: Terms,
    /// Cofactors over the input generators, kept exact.
    rep: Option<Vec<Terms>>,
}

impl BasisElem {
    fn lt(&self) -> &Monomial {
        &self.terms.last().expect("basis elements are nonzero").0
    }
}

fn rep_unit(n: usize, idx: usize) -> Vec<Terms> {
    let mut rep = vec![Vec::new(); n];
    rep[idx] = vec![(Monomial::one(0), Coeff::one())];
    rep
}

// Cofactor monomials share the ambient arity; rep_unit above needs it fixed.
fn rep_unit_arity(n: usize, idx: usize, nvars: usize) -> Vec<Terms> {
    let mut rep = vec![Vec::new(); n];
    rep[idx] = vec![(Monomial::one(nvars), Coeff::one())];
    rep
}

fn rep_scale(rep: &mut [Terms], c: &Coeff) {
    for t in rep.iter_mut() {
        scale_terms(t, c);
    }
}

fn rep_add_scaled(ctx: &OrdCtx, a: &[Terms], c: &Coeff, m: &Monomial, b: &[Terms]) -> Vec<Terms> {
    a.iter()
        .zip(b)
        .map(|(x, y)| add_scaled(ctx, x, c, m, y))
        .collect()
}

/// Priority key for the pair queue.
type PairKey = (u64, Vec<u32>, usize, usize);

fn pair_key(ctx: &OrdCtx, lcm: &Monomial, i: usize, j: usize) -> PairKey {
    (
        lcm.weighted_degree(ctx.weights),
        lcm.exponents().to_vec(),
        i,
        j,
    )
}

/// Gebauer-Moeller installation of the element with index `t`.
fn gm_update(
    ctx: &OrdCtx,
    pairs: &mut BTreeSet<PairKey>,
    basis: &[BasisElem],
    redundant: &mut [bool],
    t: usize,
) {
    let lt_t = basis[t].lt().clone();

    // Prune old pairs whose lcm is a proper common multiple through lt_t.
    let stale: Vec<PairKey> = pairs
        .iter()
        .filter(|(_, lcm_exps, i, j)| {
            let lcm = Monomial::from_exponents(lcm_exps.clone());
            if !lt_t.divides(&lcm) {
                return false;
            }
            let lcm_it = basis[*i].lt().lcm(&lt_t);
            let lcm_jt = basis[*j].lt().lcm(&lt_t);
            lcm_it != lcm && lcm_jt != lcm
        })
        .cloned()
        .collect();
    for k in stale {
        pairs.remove(&k);
    }

    // Candidate pairs (i, t).
    struct Cand {
        i: usize,
        lcm: Monomial,
        coprime: bool,
    }
    let mut cands: Vec<Cand> = (0..t)
        .filter(|&i| !redundant[i])
        .map(|i| {
            let lt_i = basis[i].lt();
            Cand {
                i,
                lcm: lt_i.lcm(&lt_t),
                coprime: lt_i.coprime(&lt_t),
            }
        })
        .collect();

    // Chain criterion between new pairs: drop a candidate whose lcm is a
    // proper multiple of another candidate's lcm.
    let keep: Vec<bool> = cands
        .iter()
        .map(|c| {
            !cands
                .iter()
                .any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm))
        })
        .collect();
    let mut kept: Vec<Cand> = cands
        .drain(..)
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();

    // Equal-lcm classes: if any member is coprime the whole class goes
    // (product criterion); otherwise a single representative survives.
    kept.sort_by(|a, b| a.lcm.exponents().cmp(b.lcm.exponents()).then(a.i.cmp(&b.i)));
    let mut idx = 0;
    while idx < kept.len() {
        let mut end = idx + 1;
        while end < kept.len() && kept[end].lcm == kept[idx].lcm {
            end += 1;
        }
        let class_coprime = kept[idx..end].iter().any(|c| c.coprime);
        if !class_coprime {
            let c = &kept[idx];
            pairs.insert(pair_key(ctx, &c.lcm, c.i, t));
        }
        idx = end;
    }

    // The new element may supersede old ones for future pair formation.
    for (i, r) in redundant.iter_mut().enumerate().take(t) {
        if !*r && lt_t.divides(basis[i].lt()) {
            *r = true;
        }
    }
}

pub(crate) struct GbOutput {
    pub basis: Vec<Terms>,
    /// `basis[i] = sum_j reps[i][j] * inputs[j]` when tracking was requested.
    pub reps: Option<Vec<Vec<Terms>>>,
}

/// Compute the unique reduced Groebner basis of the input generators.
pub(crate) fn buchberger(
    ctx: &OrdCtx,
    inputs: &[Terms],
    track: bool,
    cfg: &EngineConfig,
) -> Result<GbOutput> {
    debug_assert!(inputs.iter().all(|t| {
        t.windows(2)
            .all(|w| ctx.cmp(&w[0].0, &w[1].0) == std::cmp::Ordering::Less)
    }));
    let nvars = ctx.weights.len();
    let n_inputs = inputs.len();
    let mut basis: Vec<BasisElem> = Vec::new();
    let mut redundant: Vec<bool> = Vec::new();
    let mut pairs: BTreeSet<PairKey> = BTreeSet::new();

    let install = |basis: &mut Vec<BasisElem>,
                       redundant: &mut Vec<bool>,
                       pairs: &mut BTreeSet<PairKey>,
                       mut elem: BasisElem| {
        let f = make_primitive(&mut elem.terms);
        if let Some(rep) = elem.rep.as_mut() {
            rep_scale(rep, &f);
        }
        basis.push(elem);
        redundant.push(false);
        let t = basis.len() - 1;
        gm_update(ctx, pairs, basis, redundant, t);
    };

    for (idx, terms) in inputs.iter().enumerate() {
        if terms.is_empty() {
            continue;
        }
        let rep = track.then(|| rep_unit_arity(n_inputs, idx, nvars));
        install(
            &mut basis,
            &mut redundant,
            &mut pairs,
            BasisElem {
                terms: terms.clone(),
                rep,
            },
        );
    }

    let trace = std::env::var_os("UNPROJ_TRACE_GB").is_some();
    let mut processed: u64 = 0;
    while let Some(key) = pairs.pop_first() {
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::Budget {
                limit: cfg.max_pairs,
            });
        }
        if trace && processed % 200 == 0 {
            let max_terms = basis.iter().map(|b| b.terms.len()).max().unwrap_or(0);
            let max_bits = basis
                .iter()
                .flat_map(|b| b.terms.iter())
                .map(|(_, c)| c.numer().bits().max(c.denom().bits()))
                .max()
                .unwrap_or(0);
            eprintln!(
                "[gb] pairs={processed} queued={} basis={} maxterms={max_terms} maxbits={max_bits} deg={}",
                pairs.len(),
                basis.len(),
                key.0
            );
        }
        let (_, _, i, j) = key;

        // S-polynomial of basis[i], basis[j].
        let (lm_i, lc_i) = basis[i].terms.last().cloned().unwrap();
        let (lm_j, lc_j) = basis[j].terms.last().cloned().unwrap();
        let lcm = lm_i.lcm(&lm_j);
        let mi = lcm.checked_div(&lm_i).unwrap();
        let mj = lcm.checked_div(&lm_j).unwrap();
        let ci = Coeff::one() / lc_i;
        let cj = -(Coeff::one() / lc_j);
        let zero: Terms = Vec::new();
        let mut s = add_scaled(ctx, &zero, &ci, &mi, &basis[i].terms);
        s = add_scaled(ctx, &s, &cj, &mj, &basis[j].terms);
        let mut s_rep = track.then(|| {
            let a = rep_add_scaled(
                ctx,
                &vec![Vec::new(); n_inputs],
                &ci,
                &mi,
                basis[i].rep.as_ref().unwrap(),
            );
            rep_add_scaled(ctx, &a, &cj, &mj, basis[j].rep.as_ref().unwrap())
        });

        let div_refs: Vec<&Terms> = basis.iter().map(|b| &b.terms).collect();
        let rep_ptrs: Vec<*const Vec<Terms>> = basis
            .iter()
            .map(|b| b.rep.as_ref().map(|r| r as *const _).unwrap_or(std::ptr::null()))
            .collect();
        let reduced = reduce_scaled(ctx, s, &div_refs, s_rep.as_mut(), |i| rep_ptrs[i]);
        if reduced.is_empty() {
            continue;
        }
        install(
            &mut basis,
            &mut redundant,
            &mut pairs,
            BasisElem {
                terms: reduced,
                rep: s_rep,
            },
        );
    }

    // Minimal basis: keep elements whose leading term no kept element divides.
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| ctx.cmp(basis[a].lt(), basis[b].lt()).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for idx in order_idx {
        if !kept.iter().any(|&k| basis[k].lt().divides(basis[idx].lt())) {
            kept.push(idx);
        }
    }

    // Interreduce: fully reduce each kept element against the others.
    let mut final_basis: Vec<BasisElem> = kept
        .into_iter()
        .map(|i| std::mem::replace(&mut basis[i], BasisElem { terms: Vec::new(), rep: None }))
        .collect();
    for i in 0..final_basis.len() {
        let work = std::mem::take(&mut final_basis[i].terms);
        let mut rep = final_basis[i].rep.take();
        let others: Vec<&Terms> = final_basis
            .iter()
            .enumerate()
            .map(|(j, b)| if j == i { &EMPTY_TERMS } else { &b.terms })
            .collect();
        let rep_ptrs: Vec<*const Vec<Terms>> = final_basis
            .iter()
            .map(|b| b.rep.as_ref().map(|r| r as *const _).unwrap_or(std::ptr::null()))
            .collect();
        let reduced = reduce_scaled(ctx, work, &others, rep.as_mut(), |d| rep_ptrs[d]);
        debug_assert!(!reduced.is_empty());
        final_basis[i].terms = reduced;
        final_basis[i].rep = rep;
        // monic
        let lc = final_basis[i].terms.last().unwrap().1.clone();
        let inv = Coeff::one() / lc;
        scale_terms(&mut final_basis[i].terms, &inv);
        if let Some(rep) = final_basis[i].rep.as_mut() {
            rep_scale(rep, &inv);
        }
    }
    final_basis.sort_by(|a, b| ctx.cmp(a.lt(), b.lt()));

    let reps = track.then(|| {
        final_basis
            .iter()
            .map(|b| b.rep.clone().unwrap())
            .collect()
    });
    Ok(GbOutput {
        basis: final_basis.into_iter().map(|b| b.terms).collect(),
        reps,
    })
}

static EMPTY_TERMS: Terms = Vec::new();

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn ctx<'a>(weights: &'a [u32], order: &'a MonomialOrder) -> OrdCtx<'a> {
        OrdCtx { weights, order }
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn primitive_normalization() {
        let mut t: Terms = vec![
            (m(&[0, 1]), coeff_int(4) / coeff_int(6)),
            (m(&[1, 0]), coeff_int(-2)),
        ];
        make_primitive(&mut t);
        // leading term is the last entry; its coefficient must be positive
        assert_eq!(t.last().unwrap().1, coeff_int(3));
        assert_eq!(t[0].1, coeff_int(-1));
    }

    #[test]
    fn reduce_against_single_divisor() {
        // x^2 reduced by (x - y) under lex x > y leaves y^2
        let weights = [1, 1];
        let ord = MonomialOrder::Lex;
        let c = ctx(&weights, &ord);
        let x2: Terms = vec![(m(&[2, 0]), coeff_int(1))];
        let d: Terms = vec![(m(&[0, 1]), coeff_int(-1)), (m(&[1, 0]), coeff_int(1))];
        let r = reduce_terms(&c, x2, &[&d], |_, _, _| {});
        assert_eq!(r, vec![(m(&[0, 2]), coeff_int(1))]);
    }

    #[test]
    fn buchberger_lex_example() {
        // (x^2 - 1, x*y - 1) under lex x > y gives {y^2 - 1, x - y}
        let weights = [1, 1];
        let ord = MonomialOrder::Lex;
        let c = ctx(&weights, &ord);
        let g1: Terms = vec![(m(&[0, 0]), coeff_int(-1)), (m(&[2, 0]), coeff_int(1))];
        let g2: Terms = vec![(m(&[0, 0]), coeff_int(-1)), (m(&[1, 1]), coeff_int(1))];
        let out = buchberger(&c, &[g1, g2], false, &EngineConfig::default()).unwrap();
        assert_eq!(out.basis.len(), 2);
        // ascending by leading term: y^2 - 1 first, then x - y
        assert_eq!(
            out.basis[0],
            vec![(m(&[0, 0]), coeff_int(-1)), (m(&[0, 2]), coeff_int(1))]
        );
        assert_eq!(
            out.basis[1],
            vec![(m(&[0, 1]), coeff_int(-1)), (m(&[1, 0]), coeff_int(1))]
        );
    }

    #[test]
    fn budget_error() {
        let weights = [1, 1, 1];
        let ord = MonomialOrder::WDegRevLex;
        let c = ctx(&weights, &ord);
        let sort = |mut t: Terms| -> Terms {
            t.sort_by(|a, b| c.cmp(&a.0, &b.0));
            t
        };
        // cyclic-3-ish generators need a few pairs
        let g1: Terms = sort(vec![
            (m(&[0, 0, 1]), coeff_int(1)),
            (m(&[0, 1, 0]), coeff_int(1)),
            (m(&[1, 0, 0]), coeff_int(1)),
        ]);
        let g2: Terms = sort(vec![
            (m(&[0, 1, 1]), coeff_int(1)),
            (m(&[1, 1, 0]), coeff_int(1)),
            (m(&[1, 0, 1]), coeff_int(1)),
        ]);
        let g3: Terms = sort(vec![
            (m(&[0, 0, 0]), coeff_int(-1)),
            (m(&[1, 1, 1]), coeff_int(1)),
        ]);
        let err = buchberger(&c, &[g1, g2, g3], false, &EngineConfig::with_budget(1));
        assert!(matches!(err, Err(Error::Budget { .. })));
    }
}
