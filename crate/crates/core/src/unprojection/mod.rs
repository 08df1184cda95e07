//! The determinantal divisor format and its unprojection.
//!
//! One storyline runs through this module: a 2 x n(k+1) matrix of weighted
//! variables, the divisor ideal of its 2x2 minors, a complete intersection
//! ideal inside it, the numerators of the fractions generating the inverse
//! divisor ideal, the linear and quadratic relations those fractions satisfy,
//! and the presentation ideal of the ring they generate, cross-checked
//! against an elimination kernel.

mod build;
mod identities;
mod presentation;
mod relations;
mod sections;

pub use build::{
    a_name, base_ring, build_matrix, build_minors, choose_denominator, divisor_ideal,
    generic_ring, minor_degrees, normalization_map, t_name, w_name, GenericBuild, Parameters,
};
pub use identities::{
    normalization_with_symbols, product_identity_instances, s_name, symbol_ring,
    telescoping_instances, wraparound_instances, IdentityInstance,
};
pub use presentation::{
    kernel_oracle, specialization_from_pairs, GenFamily, LabeledGen, PresentationIdeal,
    SectionImage,
};
pub use relations::{
    quad_a_indices, quad_b_indices, LinearRelationA, LinearRelationB, QuadRelation,
    RelationFamilies,
};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingDescriptor};
use crate::subst::SubstitutionMap;

use sections::SectionContext;

/// Complete unprojection data: the matrix, its minors, the inner complete
/// intersection ideal, a chosen regular denominator `f` and the section
/// numerators `g_0, ..., g_k` with `s_p = g_p / f`.
#[derive(Debug, Clone)]
pub struct UnprojectionData {
    pub params: Parameters,
    pub ring: Arc<RingDescriptor>,
    pub matrix: PolyMatrix,
    pub minors: Vec<Polynomial>,
    pub ideal_x: Ideal,
    /// The denominator `f`, one of the minors.
    pub denominator: Polynomial,
    /// Position of `f` in the minor list.
    pub denominator_index: usize,
    /// Section numerators, degrees stepping by one.
    pub sections: Vec<Polynomial>,
    /// `(f) + I_X`, cached for reuse.
    ideal_xf: Ideal,
    /// Minimal generators of the divisor ideal, used for colon computations.
    divisor_min_gens: Vec<Polynomial>,
}

impl UnprojectionData {
    /// Build from an explicit inner ideal. The ring must contain the `a_i_j`
    /// variables and `z`; `ideal_x` must sit inside the divisor ideal.
    pub fn from_ideal_x(
        params: Parameters,
        ring: Arc<RingDescriptor>,
        ideal_x: Ideal,
        cfg: &EngineConfig,
    ) -> Result<Self> {
        if !same_ring(ideal_x.ring(), &ring) {
            return Err(Error::RingMismatch("inner ideal ring".into()));
        }
        let trace = std::env::var_os("UNPROJ_TRACE").is_some();
        let mut t0 = std::time::Instant::now();
        let mut stamp = |label: &str| {
            if trace {
                eprintln!("[trace] {label}: {:?}", t0.elapsed());
            }
            t0 = std::time::Instant::now();
        };
        let matrix = build_matrix(params, &ring)?;
        let minors = matrix.two_by_two_minors()?;
        let ideal_d = Ideal::new(ring.clone(), minors.clone())?;
        let gb_d = ideal_d.default_basis(cfg)?;
        for g in ideal_x.generators() {
            if !gb_d.contains(g) {
                return Err(Error::Genericity(
                    "the inner ideal is not contained in the divisor ideal".into(),
                ));
            }
        }
        stamp("divisor ideal + containment");
        let divisor_min_gens = ideal_d.minimal_generators(cfg)?;
        stamp("divisor minimal generators");
        let (denominator_index, denominator) =
            choose_denominator(params, &minors, &ideal_x, cfg)?;
        stamp("denominator");
        let ideal_xf = ideal_x.plus_polys(&[denominator.clone()])?;
        let ctx = SectionContext::new(&ring, &ideal_xf, &divisor_min_gens, cfg)?;
        stamp("section context (colon)");
        let sections = sections::compute_sections(params, &ctx, cfg)?;
        stamp("sections");
        let data = UnprojectionData {
            params,
            ring,
            matrix,
            minors,
            ideal_x,
            denominator,
            denominator_index,
            sections,
            ideal_xf,
            divisor_min_gens,
        };
        data.check_section_membership(cfg)?;
        Ok(data)
    }

    /// The generic complete intersection data over `Q[a, z, w]`.
    pub fn generic(params: Parameters, cfg: &EngineConfig) -> Result<Self> {
        let b = GenericBuild::new(params)?;
        let ideal_x = b.ideal_x()?;
        Self::from_ideal_x(params, b.ring, ideal_x, cfg)
    }

    /// Specialized data: the generic complete intersection generators are
    /// pushed through `hat` and the sections are recomputed in the target.
    pub fn specialized(
        params: Parameters,
        hat: &SubstitutionMap,
        cfg: &EngineConfig,
    ) -> Result<Self> {
        let b = GenericBuild::new(params)?;
        if hat.source() != &b.ring {
            return Err(Error::RingMismatch(
                "specialization must start from the generic ring".into(),
            ));
        }
        let ix_gens = b
            .ci_generators
            .iter()
            .map(|f| hat.apply(f))
            .collect::<Result<Vec<_>>>()?;
        for g in &ix_gens {
            if g.is_zero() {
                return Err(Error::Genericity(
                    "a specialized complete intersection generator vanished".into(),
                ));
            }
        }
        let ideal_x = Ideal::new(hat.target().clone(), ix_gens)?;
        Self::from_ideal_x(params, hat.target().clone(), ideal_x, cfg)
    }

    pub fn divisor_ideal(&self) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.minors.clone())
    }

    pub fn divisor_min_gens(&self) -> &[Polynomial] {
        &self.divisor_min_gens
    }

    pub fn ideal_xf(&self) -> &Ideal {
        &self.ideal_xf
    }

    /// Defining membership of the sections, replayed exactly.
    fn check_section_membership(&self, cfg: &EngineConfig) -> Result<()> {
        let gb = self.ideal_xf.default_basis(cfg)?;
        for (p, g) in self.sections.iter().enumerate() {
            for (jx, u) in self.minors.iter().enumerate() {
                if !gb.contains(&g.checked_mul(u)?) {
                    return Err(Error::Genericity(format!(
                        "section {p} times minor {} escapes (f) + I_X",
                        jx + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn relations(&self, cfg: &EngineConfig) -> Result<RelationFamilies> {
        let (linear_a, linear_b) = relations::compute_linear_relations(self, cfg)?;
        let (quad_a, quad_b) = relations::compute_quadratic_relations(self, cfg)?;
        Ok(RelationFamilies {
            linear_a,
            linear_b,
            quad_a,
            quad_b,
        })
    }

    /// Relations plus assembly.
    pub fn presentation(&self, cfg: &EngineConfig) -> Result<PresentationIdeal> {
        let rels = self.relations(cfg)?;
        presentation::assemble(self, &rels, cfg)
    }

    pub fn presentation_from(
        &self,
        relations: &RelationFamilies,
        cfg: &EngineConfig,
    ) -> Result<PresentationIdeal> {
        presentation::assemble(self, relations, cfg)
    }

    /// The elimination kernel in the given `T`-extended ring.
    pub fn kernel(&self, ring_t: &Arc<RingDescriptor>, cfg: &EngineConfig) -> Result<Ideal> {
        kernel_oracle(
            ring_t,
            &self.ring,
            &self.ideal_x,
            &self.denominator,
            &self.sections,
            cfg,
        )
    }

    /// Image ideal of the first section, with its tracked quotients.
    pub fn section_image(&self, cfg: &EngineConfig) -> Result<SectionImage> {
        presentation::image_ideal(self, cfg)
    }
}

/// A single section numerator for divisor data outside the matrix format:
/// the lowest nontrivial class of `((f) + I_X : divisor)` modulo `(f) + I_X`.
/// This is what the hypersurface example of the verification suite uses.
pub fn single_section(
    ring: &Arc<RingDescriptor>,
    ideal_x: &Ideal,
    divisor_gens: &[Polynomial],
    f: &Polynomial,
    cfg: &EngineConfig,
) -> Result<Polynomial> {
    let ideal_xf = ideal_x.plus_polys(&[f.clone()])?;
    let ctx = SectionContext::new(ring, &ideal_xf, divisor_gens, cfg)?;
    sections::first_class(&ctx, cfg)
}
