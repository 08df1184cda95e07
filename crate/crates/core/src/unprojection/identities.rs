//! Formal polynomial identities behind the quadratic relation bounds.
//!
//! The section symbols are adjoined as free variables `S_0, ..., S_k`, so
//! each identity is an exact equality of polynomials that can be expanded
//! and compared term by term; no ideal theory is involved.

use std::sync::Arc;

use crate::error::Result;
use crate::poly::{coeff_int, Polynomial};
use crate::ring::RingDescriptor;
use crate::subst::SubstitutionMap;

use super::build::{a_name, Parameters};

pub fn s_name(p: u32) -> String {
    format!("S_{p}")
}

/// `Q[a_i_j, z, S_0..S_k]` with the format weights; `S_p` carries weight
/// `p + 1` (any positive assignment works, the identities are exact).
pub fn symbol_ring(params: Parameters) -> Result<Arc<RingDescriptor>> {
    let mut vars = Vec::new();
    for i in 1..=(params.k() + 1) {
        for j in 1..=params.n() {
            vars.push((a_name(i, j), i));
        }
    }
    vars.push(("z".to_string(), params.k() + 1));
    for p in 0..=params.k() {
        vars.push((s_name(p), p + 1));
    }
    RingDescriptor::new(vars)
}

/// One instance of an identity: both sides, with an index label.
#[derive(Debug, Clone)]
pub struct IdentityInstance {
    pub label: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl IdentityInstance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn witness(&self) -> Polynomial {
        &self.lhs - &self.rhs
    }
}

fn sign(exp: u32) -> crate::poly::Coeff {
    if exp % 2 == 0 {
        coeff_int(1)
    } else {
        coeff_int(-1)
    }
}

/// Telescoping identity: for `l + m = i + j`, `i < l`,
/// `a_it S_j - (-1)^(j-m) a_lt S_m = sum_(q=i)^(l-1) (-1)^(q-i) v_q`
/// where `v_q = a_qt S_(j+i-q) + a_(q+1)t S_(j+i-q-1)`.
pub fn telescoping_instances(params: Parameters) -> Result<Vec<IdentityInstance>> {
    let ring = symbol_ring(params)?;
    let var = |name: &str| Polynomial::var_by_name(&ring, name);
    let k = params.k();
    let mut out = Vec::new();
    for i in 1..=(k + 1) {
        for l in (i + 1)..=(k + 1) {
            for j in 0..=k {
                // m = i + j - l must land in 0..=k
                let m_signed = i as i64 + j as i64 - l as i64;
                if m_signed < 0 || m_signed > k as i64 {
                    continue;
                }
                let m = m_signed as u32;
                for t in 1..=params.n() {
                    let lhs = var(&a_name(i, t))?
                        .checked_mul(&var(&s_name(j))?)?
                        .checked_sub(
                            &var(&a_name(l, t))?
                                .checked_mul(&var(&s_name(m))?)?
                                .scale(&sign(j - m)),
                        )?;
                    let mut rhs = Polynomial::zero(&ring);
                    for q in i..l {
                        let v_q = var(&a_name(q, t))?
                            .checked_mul(&var(&s_name(j + i - q))?)?
                            .checked_add(
                                &var(&a_name(q + 1, t))?
                                    .checked_mul(&var(&s_name(j + i - q - 1))?)?,
                            )?;
                        rhs = rhs.checked_add(&v_q.scale(&sign(q - i)))?;
                    }
                    out.push(IdentityInstance {
                        label: format!("telescoping[i={i},l={l},j={j},m={m},t={t}]"),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Adjacent-product identity:
/// `a_11 (S_i S_j - S_(i-1) S_(j+1))
///    = S_j (a_11 S_i + a_21 S_(i-1)) - S_(i-1) (a_11 S_(j+1) + a_21 S_j)`.
pub fn product_identity_instances(params: Parameters) -> Result<Vec<IdentityInstance>> {
    let ring = symbol_ring(params)?;
    let var = |name: &str| Polynomial::var_by_name(&ring, name);
    let k = params.k();
    let a11 = var(&a_name(1, 1))?;
    let a21 = var(&a_name(2, 1))?;
    let mut out = Vec::new();
    for i in 1..=k {
        for j in 0..k {
            let s = |p: u32| var(&s_name(p));
            let lhs = a11.checked_mul(
                &s(i)?
                    .checked_mul(&s(j)?)?
                    .checked_sub(&s(i - 1)?.checked_mul(&s(j + 1)?)?)?,
            )?;
            let first = s(j)?.checked_mul(
                &a11.checked_mul(&s(i)?)?
                    .checked_add(&a21.checked_mul(&s(i - 1)?)?)?,
            )?;
            let second = s(i - 1)?.checked_mul(
                &a11.checked_mul(&s(j + 1)?)?
                    .checked_add(&a21.checked_mul(&s(j)?)?)?,
            )?;
            out.push(IdentityInstance {
                label: format!("product[i={i},j={j}]"),
                lhs,
                rhs: first.checked_sub(&second)?,
            });
        }
    }
    Ok(out)
}

/// Wraparound identity:
/// `a_11 (S_k S_i - (-1)^(k+1) z S_(i-1) S_0)
///    = S_i (a_11 S_k - (-1)^k a_(k+1)1 S_0)
///      - (-1)^(k+1) S_0 (a_11 z S_(i-1) + a_(k+1)1 S_i)`.
pub fn wraparound_instances(params: Parameters) -> Result<Vec<IdentityInstance>> {
    let ring = symbol_ring(params)?;
    let var = |name: &str| Polynomial::var_by_name(&ring, name);
    let k = params.k();
    let a11 = var(&a_name(1, 1))?;
    let atop = var(&a_name(k + 1, 1))?;
    let z = var("z")?;
    let mut out = Vec::new();
    for i in 1..=k {
        let s = |p: u32| var(&s_name(p));
        let lhs = a11.checked_mul(
            &s(k)?.checked_mul(&s(i)?)?.checked_sub(
                &z.checked_mul(&s(i - 1)?)?
                    .checked_mul(&s(0)?)?
                    .scale(&sign(k + 1)),
            )?,
        )?;
        let first = s(i)?.checked_mul(
            &a11.checked_mul(&s(k)?)?
                .checked_sub(&atop.checked_mul(&s(0)?)?.scale(&sign(k)))?,
        )?;
        let second = s(0)?
            .checked_mul(
                &a11.checked_mul(&z)?
                    .checked_mul(&s(i - 1)?)?
                    .checked_add(&atop.checked_mul(&s(i)?)?)?,
            )?
            .scale(&sign(k + 1));
        out.push(IdentityInstance {
            label: format!("wraparound[i={i}]"),
            lhs,
            rhs: first.checked_sub(&second)?,
        });
    }
    Ok(out)
}

/// The normalization substitution extended to the symbol ring by
/// `S_p -> (-1)^p t^p`: the sign pattern that annihilates the plus-sign
/// pairing relations.
pub fn normalization_with_symbols(params: Parameters) -> Result<SubstitutionMap> {
    let source = symbol_ring(params)?;
    let mut target_vars: Vec<(String, u32)> = Vec::new();
    for j in 1..=params.n() {
        target_vars.push((format!("x_{j}"), 1));
    }
    target_vars.push(("t".to_string(), 1));
    let target = RingDescriptor::new(target_vars)?;
    let t = Polynomial::var_by_name(&target, "t")?;
    let mut images = Vec::with_capacity(source.num_vars());
    for v in source.vars() {
        if let Some((i, j)) = super::build::parse_a_name(&v.name) {
            let x = Polynomial::var_by_name(&target, &format!("x_{j}"))?;
            images.push(x.checked_mul(&t.pow(i - 1))?);
        } else if v.name == "z" {
            images.push(t.pow(params.k() + 1));
        } else {
            let p: u32 = v
                .name
                .strip_prefix("S_")
                .and_then(|s| s.parse().ok())
                .expect("symbol ring variable");
            images.push(t.pow(p).scale(&sign(p)));
        }
    }
    SubstitutionMap::new(source, target, images)
}
