//! Linear and quadratic relation families between the section numerators.
//!
//! Every constant is extracted by quotient-tracked reduction: the numerator
//! of a relation is lifted over `[f] ++ I_X` (linear case) or over
//! `[f*g_0, ..., f*g_k, f^2] ++ I_X` (quadratic case), and the tracked
//! denominator cofactor, reduced modulo `I_X`, is the relation constant.

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal, LiftingBasis};
use crate::poly::{coeff_int, Coeff, Polynomial};

use super::build::a_name;
use super::UnprojectionData;

/// `a_(i+1)j * T_p + a_ij * T_(p+1) - c` with `c` in the base ring.
#[derive(Debug, Clone)]
pub struct LinearRelationA {
    pub i: u32,
    pub j: u32,
    pub p: u32,
    pub constant: Polynomial,
}

/// `z * a_1j * T_p + a_(k+1)j * T_(p+1) - d` with `d` in the base ring.
#[derive(Debug, Clone)]
pub struct LinearRelationB {
    pub j: u32,
    pub p: u32,
    pub constant: Polynomial,
}

/// Quadratic relation data: the tail `sum_q lambda_q T_q + mu` below the
/// quadratic head.
#[derive(Debug, Clone)]
pub struct QuadRelation {
    pub i: u32,
    pub j: u32,
    /// One coefficient per section index `0..=k`.
    pub t_linear: Vec<Polynomial>,
    pub t_constant: Polynomial,
}

#[derive(Debug, Clone)]
pub struct RelationFamilies {
    pub linear_a: Vec<LinearRelationA>,
    pub linear_b: Vec<LinearRelationB>,
    pub quad_a: Vec<QuadRelation>,
    pub quad_b: Vec<QuadRelation>,
}

impl RelationFamilies {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (
            self.linear_a.len(),
            self.linear_b.len(),
            self.quad_a.len(),
            self.quad_b.len(),
        )
    }
}

/// Index ranges of the quadratic families: `1 <= i <= j <= k`, split by
/// whether `i + j` stays within `0..=k` or wraps past it.
pub fn quad_a_indices(k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            if i + j <= k {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn quad_b_indices(k: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            if i + j >= k + 1 {
                out.push((i, j));
            }
        }
    }
    out
}

pub(crate) fn compute_linear_relations(
    data: &UnprojectionData,
    cfg: &EngineConfig,
) -> Result<(Vec<LinearRelationA>, Vec<LinearRelationB>)> {
    let ring = &data.ring;
    let params = data.params;
    let var = |name: &str| Polynomial::var_by_name(ring, name);
    let z = var("z")?;
    let gb_x = data.ideal_x.default_basis(cfg)?;

    let mut inputs = vec![data.denominator.clone()];
    inputs.extend(data.ideal_x.generators().iter().cloned());
    let lift = LiftingBasis::new(ring.clone(), inputs, Ideal::default_order(), cfg)?;

    let constant_of = |numerator: &Polynomial, label: String| -> Result<Polynomial> {
        let cof = lift.lift(numerator)?.ok_or_else(|| {
            Error::LiftFailed(format!("relation numerator {label} is not in (f) + I_X"))
        })?;
        Ok(gb_x.normal_form(&cof[0]))
    };

    let mut linear_a = Vec::new();
    for i in 1..=params.k() {
        for j in 1..=params.n() {
            for p in 0..params.k() {
                let h = var(&a_name(i + 1, j))?
                    .checked_mul(&data.sections[p as usize])?
                    .checked_add(
                        &var(&a_name(i, j))?.checked_mul(&data.sections[p as usize + 1])?,
                    )?;
                let c = constant_of(&h, format!("f^a[{i},{j},{p}]"))?;
                linear_a.push(LinearRelationA { i, j, p, constant: c });
            }
        }
    }

    let mut linear_b = Vec::new();
    for j in 1..=params.n() {
        for p in 0..params.k() {
            let h = z
                .checked_mul(&var(&a_name(1, j))?)?
                .checked_mul(&data.sections[p as usize])?
                .checked_add(
                    &var(&a_name(params.k() + 1, j))?
                        .checked_mul(&data.sections[p as usize + 1])?,
                )?;
            let d = constant_of(&h, format!("f^b[{j},{p}]"))?;
            linear_b.push(LinearRelationB { j, p, constant: d });
        }
    }
    Ok((linear_a, linear_b))
}

pub(crate) fn compute_quadratic_relations(
    data: &UnprojectionData,
    cfg: &EngineConfig,
) -> Result<(Vec<QuadRelation>, Vec<QuadRelation>)> {
    let ring = &data.ring;
    let params = data.params;
    let k = params.k() as usize;
    let f = &data.denominator;
    let gb_x = data.ideal_x.default_basis(cfg)?;
    let z = Polynomial::var_by_name(ring, "z")?;

    // reduction list: f*g_0, ..., f*g_k, f^2, then the I_X generators
    let mut inputs: Vec<Polynomial> = Vec::with_capacity(k + 2 + data.ideal_x.generators().len());
    for g in &data.sections {
        inputs.push(f.checked_mul(g)?);
    }
    inputs.push(f.checked_mul(f)?);
    inputs.extend(data.ideal_x.generators().iter().cloned());
    let lift = LiftingBasis::new(ring.clone(), inputs, Ideal::default_order(), cfg)?;

    let tail_of = |lhs: &Polynomial, label: String| -> Result<QuadRelationTail> {
        let cof = lift.lift(lhs)?.ok_or_else(|| {
            Error::LiftFailed(format!(
                "quadratic combination {label} is not in f*(sections) + f^2 + I_X"
            ))
        })?;
        let lambdas: Vec<Polynomial> = (0..=k).map(|q| gb_x.normal_form(&cof[q])).collect();
        let mu = gb_x.normal_form(&cof[k + 1]);
        Ok(QuadRelationTail { lambdas, mu })
    };

    let mut quad_a = Vec::new();
    for (i, j) in quad_a_indices(params.k()) {
        let lhs = data.sections[i as usize]
            .checked_mul(&data.sections[j as usize])?
            .checked_sub(
                &data.sections[0].checked_mul(&data.sections[(i + j) as usize])?,
            )?;
        let tail = tail_of(&lhs, format!("g^a[{i},{j}]"))?;
        quad_a.push(QuadRelation {
            i,
            j,
            t_linear: tail.lambdas,
            t_constant: tail.mu,
        });
    }

    let sign: Coeff = if (params.k() + 1) % 2 == 0 {
        coeff_int(1)
    } else {
        coeff_int(-1)
    };
    let mut quad_b = Vec::new();
    for (i, j) in quad_b_indices(params.k()) {
        let wrap = (i + j - params.k() - 1) as usize;
        let head2 = z
            .checked_mul(&data.sections[0])?
            .checked_mul(&data.sections[wrap])?
            .scale(&sign);
        let lhs = data.sections[i as usize]
            .checked_mul(&data.sections[j as usize])?
            .checked_sub(&head2)?;
        let tail = tail_of(&lhs, format!("g^b[{i},{j}]"))?;
        quad_b.push(QuadRelation {
            i,
            j,
            t_linear: tail.lambdas,
            t_constant: tail.mu,
        });
    }
    Ok((quad_a, quad_b))
}

struct QuadRelationTail {
    lambdas: Vec<Polynomial>,
    mu: Polynomial,
}
