//! Ideals, Groebner bases and the ideal-theoretic toolbox built on them:
//! normal forms, division with quotients, elimination, intersections, colon
//! ideals, saturation, codimension, minimal generators and Hilbert series.

mod dimension;
mod engine;
mod hilbert;

pub use engine::EngineConfig;
pub use hilbert::HilbertSeries;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{same_ring, RingDescriptor};

use engine::{OrdCtx, Terms};

fn to_engine_terms(ctx: &OrdCtx, p: &Polynomial) -> Terms {
    let mut terms: Terms = p.terms().to_vec();
    terms.sort_by(|a, b| ctx.cmp(&a.0, &b.0));
    terms
}

fn from_engine_terms(ring: &Arc<RingDescriptor>, terms: Terms) -> Polynomial {
    Polynomial::from_terms(ring, terms)
}

/// A reduced Groebner basis: auto-reduced, monic, deterministically sorted,
/// hence unique for the pair (ideal, order).
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<RingDescriptor>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    /// Leading monomials of the basis under its order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let ctx = OrdCtx {
            weights: self.ring.weights(),
            order: &self.order,
        };
        self.polys
            .iter()
            .map(|p| {
                p.terms()
                    .iter()
                    .max_by(|a, b| ctx.cmp(&a.0, &b.0))
                    .expect("nonzero")
                    .0
                    .clone()
            })
            .collect()
    }

    /// Canonical remainder of `p` modulo the basis; zero iff `p` is in the
    /// ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let ctx = OrdCtx {
            weights: self.ring.weights(),
            order: &self.order,
        };
        let work = to_engine_terms(&ctx, p);
        let divs: Vec<&Terms> = Vec::new();
        // Re-sort basis terms once per call; basis polynomials are small
        // compared to the work done reducing.
        let sorted: Vec<Terms> = self
            .polys
            .iter()
            .map(|b| to_engine_terms(&ctx, b))
            .collect();
        drop(divs);
        let refs: Vec<&Terms> = sorted.iter().collect();
        let rem = engine::reduce_terms(&ctx, work, &refs, |_, _, _| {});
        from_engine_terms(&self.ring, rem)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Remainder and per-divisor quotients of multivariate division.
#[derive(Debug, Clone)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Divide `p` by the ordered divisor list under `order`. The exact identity
/// `p = sum quotients[i] * divisors[i] + remainder` holds, and no remainder
/// term is divisible by any divisor's leading term.
pub fn divide_with_quotients(
    p: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<DivisionResult> {
    let ring = p.ring().clone();
    for d in divisors {
        if !same_ring(d.ring(), &ring) {
            return Err(Error::RingMismatch("division".into()));
        }
    }
    let ctx = OrdCtx {
        weights: ring.weights(),
        order,
    };
    let work = to_engine_terms(&ctx, p);
    let sorted: Vec<Terms> = divisors.iter().map(|d| to_engine_terms(&ctx, d)).collect();
    let refs: Vec<&Terms> = sorted.iter().collect();
    let mut q_pairs: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); divisors.len()];
    let rem = engine::reduce_terms(&ctx, work, &refs, |i, m, c| {
        q_pairs[i].push((m.clone(), c.clone()));
    });
    Ok(DivisionResult {
        quotients: q_pairs
            .into_iter()
            .map(|pairs| Polynomial::from_terms(&ring, pairs))
            .collect(),
        remainder: from_engine_terms(&ring, rem),
    })
}

/// An ideal given by generators, with cached reduced Groebner bases keyed by
/// monomial order. Cached values are immutable once stored.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<RingDescriptor>,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped; every generator must share the ring.
    pub fn new(ring: Arc<RingDescriptor>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch("ideal generator".into()));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring,
            generators: gens,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero(ring: Arc<RingDescriptor>) -> Self {
        Ideal {
            ring,
            generators: Vec::new(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The default order used whenever a caller does not care: weighted
    /// degrevlex with the ring's weights.
    pub fn default_order() -> MonomialOrder {
        MonomialOrder::WDegRevLex
    }

    /// The reduced Groebner basis for the given order, computed once and
    /// cached.
    pub fn groebner_basis(
        &self,
        order: &MonomialOrder,
        cfg: &EngineConfig,
    ) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let ctx = OrdCtx {
            weights: self.ring.weights(),
            order,
        };
        let inputs: Vec<Terms> = self
            .generators
            .iter()
            .map(|g| to_engine_terms(&ctx, g))
            .collect();
        let out = engine::buchberger(&ctx, &inputs, false, cfg)?;
        let gb = Arc::new(GroebnerBasis {
            ring: self.ring.clone(),
            order: order.clone(),
            polys: out
                .basis
                .into_iter()
                .map(|t| from_engine_terms(&self.ring, t))
                .collect(),
        });
        self.cache
            .write()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn default_basis(&self, cfg: &EngineConfig) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&Self::default_order(), cfg)
    }

    pub fn contains_poly(&self, p: &Polynomial, cfg: &EngineConfig) -> Result<bool> {
        Ok(self.default_basis(cfg)?.contains(p))
    }

    pub fn contains_ideal(&self, other: &Ideal, cfg: &EngineConfig) -> Result<bool> {
        let gb = self.default_basis(cfg)?;
        Ok(other.generators.iter().all(|g| gb.contains(g)))
    }

    /// True iff both ideals contain each other's generators.
    pub fn equals(&self, other: &Ideal, cfg: &EngineConfig) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal comparison".into()));
        }
        Ok(self.contains_ideal(other, cfg)? && other.contains_ideal(self, cfg)?)
    }

    /// Ideal sum: concatenated generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal sum".into()));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn plus_polys(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Replace generators by their weighted-homogeneous components. Only
    /// valid when the ideal itself is homogeneous; callers invoke it after
    /// operations that preserve homogeneity but may return mixed generators.
    fn split_components(self) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.extend(g.homogeneous_components());
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Intersection of variables to drop, realized by a block elimination
    /// order. The result lives in the ring without those variables.
    pub fn eliminate(&self, drop: &[usize], cfg: &EngineConfig) -> Result<Ideal> {
        let (small, map) = self.ring.without(drop)?;
        let kept = self.eliminate_in_place(drop, cfg)?;
        let gens = kept
            .iter()
            .map(|p| p.project(&small, &map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(small, gens)
    }

    /// Elimination that keeps the ambient ring: generators of
    /// `I ∩ Q[vars outside drop]`, still expressed in the original ring.
    fn eliminate_in_place(&self, drop: &[usize], cfg: &EngineConfig) -> Result<Vec<Polynomial>> {
        let order = MonomialOrder::elimination(drop.iter().copied(), self.ring.num_vars());
        let gb = self.groebner_basis(&order, cfg)?;
        let dropped: Vec<bool> = {
            let mut v = vec![false; self.ring.num_vars()];
            for &i in drop {
                v[i] = true;
            }
            v
        };
        Ok(gb
            .polys()
            .iter()
            .filter(|p| {
                p.terms()
                    .iter()
                    .all(|(m, _)| m.support().all(|i| !dropped[i]))
            })
            .cloned()
            .collect())
    }

    /// Ideal intersection via the tag-variable trick:
    /// `I ∩ J = (t·I + (1-t)·J) ∩ Q[x]`.
    pub fn intersect(&self, other: &Ideal, cfg: &EngineConfig) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal intersection".into()));
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.ring.num_vars();
        let tag = self.ring.fresh_name("tg");
        let ext = self.ring.extended(vec![(tag, 1)])?;
        let embed_map: Vec<usize> = (0..n).collect();
        let t = Polynomial::variable(&ext, n);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.embed(&ext, &embed_map));
        }
        for h in &other.generators {
            gens.push(&one_minus_t * &h.embed(&ext, &embed_map));
        }
        let big = Ideal::new(ext, gens)?;
        let kept = big.eliminate_in_place(&[n], cfg)?;
        let mut proj_map: Vec<Option<usize>> = (0..n).map(Some).collect();
        proj_map.push(None);
        let out_gens = kept
            .iter()
            .map(|p| p.project(&self.ring, &proj_map))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(self.ring.clone(), out_gens)?;
        if self.is_homogeneous() && other.is_homogeneous() {
            out.split_components()
        } else {
            Ok(out)
        }
    }

    /// Colon ideal by a single element: `(I : g) = (I ∩ (g)) / g`.
    pub fn colon_element(&self, g: &Polynomial, cfg: &EngineConfig) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor("colon by zero".into()));
        }
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("colon".into()));
        }
        let principal = Ideal::new(self.ring.clone(), vec![g.clone()])?;
        let meet = self.intersect(&principal, cfg)?;
        let gens = meet
            .generators
            .iter()
            .map(|p| {
                p.checked_div_exact(g)
                    .expect("members of (g) divide exactly")
            })
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    /// Colon by an ideal: intersection of the element colons over the
    /// generators of `other`.
    pub fn colon_ideal(&self, other: &Ideal, cfg: &EngineConfig) -> Result<Ideal> {
        if other.generators.is_empty() {
            return Err(Error::ZeroDivisor("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let c = self.colon_element(g, cfg)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c, cfg)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation `(I : g^∞)` via the Rabinowitsch tag `y*g - 1`.
    pub fn saturate(&self, g: &Polynomial, cfg: &EngineConfig) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroDivisor("saturation by zero".into()));
        }
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("saturation".into()));
        }
        let n = self.ring.num_vars();
        let tag = self.ring.fresh_name("yrab");
        let ext = self.ring.extended(vec![(tag, 1)])?;
        let embed_map: Vec<usize> = (0..n).collect();
        let y = Polynomial::variable(&ext, n);
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|p| p.embed(&ext, &embed_map))
            .collect();
        gens.push(&(&y * &g.embed(&ext, &embed_map)) - &Polynomial::one(&ext));
        let big = Ideal::new(ext, gens)?;
        let kept = big.eliminate_in_place(&[n], cfg)?;
        let mut proj_map: Vec<Option<usize>> = (0..n).map(Some).collect();
        proj_map.push(None);
        let out_gens = kept
            .iter()
            .map(|p| p.project(&self.ring, &proj_map))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(self.ring.clone(), out_gens)?;
        if self.is_homogeneous() && g.is_homogeneous() {
            out.split_components()
        } else {
            Ok(out)
        }
    }

    /// Codimension (height): number of variables minus the Krull dimension
    /// of the leading-term ideal.
    pub fn codimension(&self, cfg: &EngineConfig) -> Result<u32> {
        let gb = self.default_basis(cfg)?;
        if gb.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        dimension::codimension_of_monomials(&gb.leading_monomials(), self.ring.num_vars())
    }

    /// A minimal homogeneous generating set, built degree by degree: a
    /// generator is redundant iff it reduces to zero against the ideal of the
    /// generators already kept. Count and degree multiset are canonical.
    pub fn minimal_generators(&self, cfg: &EngineConfig) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous(
                "minimal generators need a homogeneous ideal".into(),
            ));
        }
        let mut sorted = self.generators.clone();
        sorted.sort_by(|a, b| {
            a.weighted_degree()
                .cmp(&b.weighted_degree())
                .then_with(|| a.cmp_canonical(b))
        });
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in sorted {
            let current = Ideal::new(self.ring.clone(), kept.clone())?;
            if !current.default_basis(cfg)?.contains(&g) {
                kept.push(g);
            }
        }
        Ok(kept)
    }

    /// Hilbert series of the quotient by this (homogeneous) ideal, as the
    /// raw pair: numerator over the product of `(1 - t^w)` for every
    /// variable weight `w`.
    pub fn hilbert_series(&self, cfg: &EngineConfig) -> Result<HilbertSeries> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous(
                "Hilbert series needs a homogeneous ideal".into(),
            ));
        }
        let gb = self.default_basis(cfg)?;
        if gb.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        let lts = dimension::minimalize(gb.leading_monomials());
        Ok(hilbert::series_of_monomial_ideal(
            &lts,
            self.ring.weights(),
        ))
    }
}

/// A Groebner basis that carries exact cofactors over its input generators,
/// so members of the ideal can be rewritten as explicit combinations.
#[derive(Debug, Clone)]
pub struct LiftingBasis {
    ring: Arc<RingDescriptor>,
    order: MonomialOrder,
    inputs: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    /// `basis[i] = sum_j reps[i][j] * inputs[j]`.
    reps: Vec<Vec<Polynomial>>,
}

impl LiftingBasis {
    pub fn new(
        ring: Arc<RingDescriptor>,
        inputs: Vec<Polynomial>,
        order: MonomialOrder,
        cfg: &EngineConfig,
    ) -> Result<Self> {
        for g in &inputs {
            if !same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch("lifting basis input".into()));
            }
        }
        let ctx = OrdCtx {
            weights: ring.weights(),
            order: &order,
        };
        let engine_inputs: Vec<Terms> = inputs.iter().map(|g| to_engine_terms(&ctx, g)).collect();
        let out = engine::buchberger(&ctx, &engine_inputs, true, cfg)?;
        let reps = out
            .reps
            .expect("tracking requested")
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| from_engine_terms(&ring, t))
                    .collect()
            })
            .collect();
        Ok(LiftingBasis {
            ring: ring.clone(),
            order,
            inputs,
            basis: out
                .basis
                .into_iter()
                .map(|t| from_engine_terms(&ring, t))
                .collect(),
            reps,
        })
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Remainder of `p` plus cofactors over the *input* generators:
    /// `p = sum cofactors[j] * inputs[j] + remainder`, exactly.
    pub fn reduce(&self, p: &Polynomial) -> Result<(Polynomial, Vec<Polynomial>)> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch("lift".into()));
        }
        let div = divide_with_quotients(p, &self.basis, &self.order)?;
        let mut cof = vec![Polynomial::zero(&self.ring); self.inputs.len()];
        for (q, rep_row) in div.quotients.iter().zip(&self.reps) {
            if q.is_zero() {
                continue;
            }
            for (j, r) in rep_row.iter().enumerate() {
                if !r.is_zero() {
                    cof[j] = cof[j].checked_add(&q.checked_mul(r)?)?;
                }
            }
        }
        Ok((div.remainder, cof))
    }

    /// Cofactors of a full member, or `None` if `p` is not in the ideal.
    pub fn lift(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let (rem, cof) = self.reduce(p)?;
        Ok(if rem.is_zero() { Some(cof) } else { None })
    }
}

#[cfg(test)]
mod tests;
