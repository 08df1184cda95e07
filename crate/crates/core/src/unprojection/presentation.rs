//! Assembly of the presentation ideal, base-change specialization, the
//! elimination kernel oracle and the image ideal of the first section.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal, LiftingBasis};
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingDescriptor;
use crate::subst::SubstitutionMap;

use super::build::{a_name, t_name, Parameters};
use super::relations::RelationFamilies;
use super::UnprojectionData;

/// Which family a presentation generator belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenFamily {
    IX { index: usize },
    LinearA { i: u32, j: u32, p: u32 },
    LinearB { j: u32, p: u32 },
    QuadA { i: u32, j: u32 },
    QuadB { i: u32, j: u32 },
}

impl GenFamily {
    pub fn label(&self) -> String {
        match self {
            GenFamily::IX { index } => format!("i_x[{index}]"),
            GenFamily::LinearA { i, j, p } => format!("f^a[{i},{j},{p}]"),
            GenFamily::LinearB { j, p } => format!("f^b[{j},{p}]"),
            GenFamily::QuadA { i, j } => format!("g^a[{i},{j}]"),
            GenFamily::QuadB { i, j } => format!("g^b[{i},{j}]"),
        }
    }

    pub fn is_ix(&self) -> bool {
        matches!(self, GenFamily::IX { .. })
    }
}

#[derive(Debug, Clone)]
pub struct LabeledGen {
    pub family: GenFamily,
    pub poly: Polynomial,
}

/// The presentation ideal `I_X + (f^a, f^b, g^a, g^b)` in the ring extended
/// by `T_0, ..., T_k`, with the inferred `T` degrees.
#[derive(Debug, Clone)]
pub struct PresentationIdeal {
    pub params: Parameters,
    pub base_ring: Arc<RingDescriptor>,
    pub ring_t: Arc<RingDescriptor>,
    pub generators: Vec<LabeledGen>,
    /// `d_p = deg g_p - deg f`; consecutive by construction.
    pub t_degrees: Vec<i64>,
    /// True when the base data is graded and all generators are homogeneous
    /// under the `T` degrees.
    pub graded: bool,
}

impl PresentationIdeal {
    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(
            self.ring_t.clone(),
            self.generators.iter().map(|g| g.poly.clone()).collect(),
        )
    }

    pub fn non_ix_generators(&self) -> impl Iterator<Item = &LabeledGen> {
        self.generators.iter().filter(|g| !g.family.is_ix())
    }

    pub fn count_of(&self, pred: impl Fn(&GenFamily) -> bool) -> usize {
        self.generators.iter().filter(|g| pred(&g.family)).count()
    }

    /// Image of every generator under a base-ring substitution; `T_i` maps to
    /// itself. The specialized unprojection is by definition the quotient by
    /// this image ideal.
    pub fn specialize(&self, hat: &SubstitutionMap) -> Result<PresentationIdeal> {
        if hat.source() != &self.base_ring {
            return Err(Error::RingMismatch(
                "specialization source must be the presentation's base ring".into(),
            ));
        }
        let k = self.params.k();
        let t_weights: Vec<(String, u32)> = (0..=k)
            .map(|p| {
                let d = self.t_degrees[p as usize];
                (t_name(p), if d >= 1 { d as u32 } else { 1 })
            })
            .collect();
        let target_t = hat.target().extended(t_weights)?;
        // extend the substitution to the T variables
        let mut images = Vec::with_capacity(self.ring_t.num_vars());
        let embed_map: Vec<usize> = (0..hat.target().num_vars()).collect();
        for (idx, v) in self.ring_t.vars().iter().enumerate() {
            if idx < self.base_ring.num_vars() {
                images.push(hat.image_of(idx).embed(&target_t, &embed_map));
            } else {
                images.push(Polynomial::var_by_name(&target_t, &v.name)?);
            }
        }
        let hat_t = SubstitutionMap::new(self.ring_t.clone(), target_t.clone(), images)?;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                Ok(LabeledGen {
                    family: g.family.clone(),
                    poly: hat_t.apply(&g.poly)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let graded = generators.iter().all(|g| g.poly.is_homogeneous());
        Ok(PresentationIdeal {
            params: self.params,
            base_ring: hat.target().clone(),
            ring_t: target_t,
            generators,
            t_degrees: self.t_degrees.clone(),
            graded,
        })
    }
}

/// The ring extended by `T_0, ..., T_k` with the given degrees as weights
/// (degrees below 1 force an ungraded extension with weight 1).
pub(crate) fn t_extended_ring(
    base: &Arc<RingDescriptor>,
    t_degrees: &[i64],
) -> Result<(Arc<RingDescriptor>, bool)> {
    let usable = t_degrees.iter().all(|&d| d >= 1);
    let vars: Vec<(String, u32)> = t_degrees
        .iter()
        .enumerate()
        .map(|(p, &d)| (t_name(p as u32), if usable { d as u32 } else { 1 }))
        .collect();
    Ok((base.extended(vars)?, usable))
}

/// Assemble `I_X + (f^a, f^b, g^a, g^b)` from computed relation families.
pub(crate) fn assemble(
    data: &UnprojectionData,
    relations: &RelationFamilies,
    cfg: &EngineConfig,
) -> Result<PresentationIdeal> {
    let params = data.params;
    let k = params.k();
    let f_deg = data
        .denominator
        .weighted_degree()
        .expect("denominator is nonzero") as i64;
    let t_degrees: Vec<i64> = data
        .sections
        .iter()
        .map(|g| g.weighted_degree().expect("sections are nonzero") as i64 - f_deg)
        .collect();
    for p in 0..k as usize {
        if t_degrees[p + 1] != t_degrees[p] + 1 {
            return Err(Error::Genericity(format!(
                "section degrees do not step by one: {:?}",
                t_degrees
            )));
        }
    }
    let (ring_t, t_weights_usable) = t_extended_ring(&data.ring, &t_degrees)?;
    let base_graded = data.ideal_x.is_homogeneous()
        && data.denominator.is_homogeneous()
        && data.sections.iter().all(|g| g.is_homogeneous());

    let nbase = data.ring.num_vars();
    let embed_map: Vec<usize> = (0..nbase).collect();
    let up = |p: &Polynomial| p.embed(&ring_t, &embed_map);
    let t_var = |p: u32| Polynomial::var_by_name(&ring_t, &t_name(p));
    let a_var = |i: u32, j: u32| -> Result<Polynomial> {
        Ok(up(&Polynomial::var_by_name(&data.ring, &a_name(i, j))?))
    };
    let z_up = up(&Polynomial::var_by_name(&data.ring, "z")?);

    let mut generators: Vec<LabeledGen> = Vec::new();
    for (index, g) in data.ideal_x.generators().iter().enumerate() {
        generators.push(LabeledGen {
            family: GenFamily::IX { index },
            poly: up(g),
        });
    }
    for rel in &relations.linear_a {
        let poly = a_var(rel.i + 1, rel.j)?
            .checked_mul(&t_var(rel.p)?)?
            .checked_add(&a_var(rel.i, rel.j)?.checked_mul(&t_var(rel.p + 1)?)?)?
            .checked_sub(&up(&rel.constant))?;
        generators.push(LabeledGen {
            family: GenFamily::LinearA {
                i: rel.i,
                j: rel.j,
                p: rel.p,
            },
            poly,
        });
    }
    for rel in &relations.linear_b {
        let poly = z_up
            .checked_mul(&a_var(1, rel.j)?)?
            .checked_mul(&t_var(rel.p)?)?
            .checked_add(&a_var(k + 1, rel.j)?.checked_mul(&t_var(rel.p + 1)?)?)?
            .checked_sub(&up(&rel.constant))?;
        generators.push(LabeledGen {
            family: GenFamily::LinearB { j: rel.j, p: rel.p },
            poly,
        });
    }
    let sign: Coeff = if (k + 1) % 2 == 0 {
        crate::poly::coeff_int(1)
    } else {
        crate::poly::coeff_int(-1)
    };
    for rel in &relations.quad_a {
        let mut poly = t_var(rel.i)?
            .checked_mul(&t_var(rel.j)?)?
            .checked_sub(&t_var(0)?.checked_mul(&t_var(rel.i + rel.j)?)?)?;
        for (q, lam) in rel.t_linear.iter().enumerate() {
            poly = poly.checked_sub(&up(lam).checked_mul(&t_var(q as u32)?)?)?;
        }
        poly = poly.checked_sub(&up(&rel.t_constant))?;
        generators.push(LabeledGen {
            family: GenFamily::QuadA { i: rel.i, j: rel.j },
            poly,
        });
    }
    for rel in &relations.quad_b {
        let wrap = rel.i + rel.j - k - 1;
        let head2 = z_up
            .checked_mul(&t_var(0)?)?
            .checked_mul(&t_var(wrap)?)?
            .scale(&sign);
        let mut poly = t_var(rel.i)?
            .checked_mul(&t_var(rel.j)?)?
            .checked_sub(&head2)?;
        for (q, lam) in rel.t_linear.iter().enumerate() {
            poly = poly.checked_sub(&up(lam).checked_mul(&t_var(q as u32)?)?)?;
        }
        poly = poly.checked_sub(&up(&rel.t_constant))?;
        generators.push(LabeledGen {
            family: GenFamily::QuadB { i: rel.i, j: rel.j },
            poly,
        });
    }

    let graded = base_graded && t_weights_usable;
    if graded {
        for g in &generators {
            if !g.poly.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!(
                    "presentation generator {} is not homogeneous under the inferred T degrees",
                    g.family.label()
                )));
            }
        }
    }
    let _ = cfg;
    Ok(PresentationIdeal {
        params,
        base_ring: data.ring.clone(),
        ring_t,
        generators,
        t_degrees,
        graded,
    })
}

/// Kernel of `T_p -> g_p / f` on the `T`-extended ring, computed as the
/// saturation of `I_X + (f T_p - g_p : p)` by `f`. This is the independent
/// oracle the assembled presentation is checked against.
pub fn kernel_oracle(
    ring_t: &Arc<RingDescriptor>,
    base_ring: &Arc<RingDescriptor>,
    ideal_x: &Ideal,
    denominator: &Polynomial,
    sections: &[Polynomial],
    cfg: &EngineConfig,
) -> Result<Ideal> {
    let nbase = base_ring.num_vars();
    let embed_map: Vec<usize> = (0..nbase).collect();
    let up = |p: &Polynomial| p.embed(ring_t, &embed_map);
    let mut gens: Vec<Polynomial> = ideal_x.generators().iter().map(&up).collect();
    let f_up = up(denominator);
    for (p, g) in sections.iter().enumerate() {
        let t = Polynomial::var_by_name(ring_t, &t_name(p as u32))?;
        gens.push(f_up.checked_mul(&t)?.checked_sub(&up(g))?);
    }
    let graph = Ideal::new(ring_t.clone(), gens)?;
    graph.saturate(&f_up, cfg)
}

/// The image ideal of the first section together with `I_X`: quotients `q_j`
/// with `g_0 * u_j = q_j * f  (mod I_X)`, one per minor.
#[derive(Debug, Clone)]
pub struct SectionImage {
    /// `I_N + I_X` in the ambient ring.
    pub ideal: Ideal,
    /// The tracked quotients `q_j`, reduced modulo `I_X`.
    pub quotients: Vec<Polynomial>,
}

pub(crate) fn image_ideal(data: &UnprojectionData, cfg: &EngineConfig) -> Result<SectionImage> {
    let ring = &data.ring;
    let gb_x = data.ideal_x.default_basis(cfg)?;
    let g0 = &data.sections[0];
    if gb_x.contains(g0) {
        return Err(Error::Genericity(
            "first section lies in I_X, its image ideal is zero".into(),
        ));
    }
    let mut inputs = vec![data.denominator.clone()];
    inputs.extend(data.ideal_x.generators().iter().cloned());
    let lift = LiftingBasis::new(ring.clone(), inputs, Ideal::default_order(), cfg)?;

    let mut quotients = Vec::with_capacity(data.minors.len());
    for (jx, u) in data.minors.iter().enumerate() {
        let num = g0.checked_mul(u)?;
        let cof = lift.lift(&num)?.ok_or_else(|| {
            Error::LiftFailed(format!("g_0 * u_{} is not in (f) + I_X", jx + 1))
        })?;
        let q = gb_x.normal_form(&cof[0]);
        // injectivity of multiplication by g_0/f on the divisor ideal
        if !gb_x.contains(u) && q.is_zero() {
            return Err(Error::Genericity(format!(
                "section image of minor {} vanishes although the minor does not",
                jx + 1
            )));
        }
        quotients.push(q);
    }
    // the image of the denominator generates a proper ideal
    let f_image = gb_x.normal_form(g0);
    if f_image.is_constant() && !f_image.is_zero() {
        return Err(Error::Genericity(
            "section image of the denominator is a unit".into(),
        ));
    }
    let ideal = data.ideal_x.plus_polys(&quotients)?;
    Ok(SectionImage { ideal, quotients })
}

/// A named substitution on the generic ring, defaulting unassigned variables
/// to themselves in the target.
pub fn specialization_from_pairs(
    source: &Arc<RingDescriptor>,
    target: &Arc<RingDescriptor>,
    pairs: Vec<(String, Polynomial)>,
) -> Result<SubstitutionMap> {
    let mut map = HashMap::new();
    for (name, poly) in pairs {
        if source.var_index(&name).is_none() {
            return Err(Error::MissingVariable(name));
        }
        map.insert(name, poly);
    }
    SubstitutionMap::from_assignments(source, target, &map)
}
