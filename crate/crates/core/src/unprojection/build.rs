//! Construction of the format: parameters, ambient rings, the matrix, its
//! minors, the divisor ideal and the generic complete intersection inside it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;
use crate::subst::SubstitutionMap;

/// Format parameters: `k >= 1` and `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    k: u32,
    n: u32,
}

impl Parameters {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameters(format!("k must be >= 1, got {k}")));
        }
        if n < 2 {
            return Err(Error::InvalidParameters(format!("n must be >= 2, got {n}")));
        }
        Ok(Parameters { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Columns of the matrix: n(k+1).
    pub fn matrix_cols(&self) -> usize {
        (self.n * (self.k + 1)) as usize
    }

    /// Number of listed minors: C(n(k+1), 2).
    pub fn num_minors(&self) -> usize {
        let c = self.matrix_cols();
        c * (c - 1) / 2
    }

    /// Generators of the generic complete intersection: nk - 1.
    pub fn num_ci_generators(&self) -> usize {
        (self.n * self.k - 1) as usize
    }

    /// Expected codimension of the divisor ideal: nk.
    pub fn divisor_codimension(&self) -> u32 {
        self.n * self.k
    }

    /// Number of sections: k + 1.
    pub fn num_sections(&self) -> usize {
        (self.k + 1) as usize
    }
}

pub fn a_name(i: u32, j: u32) -> String {
    format!("a_{i}_{j}")
}

pub fn w_name(p: u32, j: u32) -> String {
    format!("w_{p}_{j}")
}

pub fn t_name(p: u32) -> String {
    format!("T_{p}")
}

/// Parse `a_i_j` back into indices.
pub(crate) fn parse_a_name(name: &str) -> Option<(u32, u32)> {
    let rest = name.strip_prefix("a_")?;
    let (i, j) = rest.split_once('_')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

/// The base ambient ring `Q[a_i_j, z]` with the format weights: `a_i_j` has
/// weight `i` and `z` has weight `k + 1`, the value forced by homogeneity of
/// the minors and by the normalization `z = t^(k+1)`.
pub fn base_ring(params: Parameters) -> Result<Arc<RingDescriptor>> {
    let mut vars = Vec::new();
    for i in 1..=(params.k + 1) {
        for j in 1..=params.n {
            vars.push((a_name(i, j), i));
        }
    }
    vars.push(("z".to_string(), params.k + 1));
    RingDescriptor::new(vars)
}

/// Weighted degrees of the listed minors, in listing order. The minor of
/// column pair `(p, q)` is homogeneous of degree `block(p) + block(q) + 1`
/// where `block(c)` numbers the k+1 column blocks from 1.
pub fn minor_degrees(params: Parameters) -> Vec<u64> {
    let n = params.n as usize;
    let cols = params.matrix_cols();
    let block = |c: usize| (c / n) as u64 + 1;
    let mut out = Vec::with_capacity(params.num_minors());
    for p in 0..cols {
        for q in (p + 1)..cols {
            out.push(block(p) + block(q) + 1);
        }
    }
    out
}

/// The generic ambient ring `Q[a_i_j, z, w_p_j]`. Coefficient variables get
/// the unique minimal positive weights making every generic combination
/// `sum_j w_p_j u_j` homogeneous of one degree, namely
/// `w(w_p_j) = (max_q deg u_q + 1) - deg u_j`.
pub fn generic_ring(params: Parameters) -> Result<Arc<RingDescriptor>> {
    let degs = minor_degrees(params);
    let target = degs.iter().max().expect("at least one minor") + 1;
    let mut vars: Vec<(String, u32)> = Vec::new();
    for i in 1..=(params.k + 1) {
        for j in 1..=params.n {
            vars.push((a_name(i, j), i));
        }
    }
    vars.push(("z".to_string(), params.k + 1));
    for p in 1..=(params.num_ci_generators() as u32) {
        for (jx, d) in degs.iter().enumerate() {
            vars.push((w_name(p, jx as u32 + 1), (target - d) as u32));
        }
    }
    RingDescriptor::new(vars)
}

/// The 2 x n(k+1) matrix of the format: row 1 runs through the blocks
/// `a_2*, ..., a_(k+1)*` and then `z*a_1*`; row 2 through
/// `a_1*, ..., a_k*` and then `a_(k+1)*`.
pub fn build_matrix(params: Parameters, ring: &Arc<RingDescriptor>) -> Result<PolyMatrix> {
    let var = |name: &str| -> Result<Polynomial> { Polynomial::var_by_name(ring, name) };
    let z = var("z")?;
    let mut row1 = Vec::with_capacity(params.matrix_cols());
    let mut row2 = Vec::with_capacity(params.matrix_cols());
    for i in 2..=(params.k + 1) {
        for j in 1..=params.n {
            row1.push(var(&a_name(i, j))?);
        }
    }
    for j in 1..=params.n {
        row1.push(z.checked_mul(&var(&a_name(1, j))?)?);
    }
    for i in 1..=params.k {
        for j in 1..=params.n {
            row2.push(var(&a_name(i, j))?);
        }
    }
    for j in 1..=params.n {
        row2.push(var(&a_name(params.k + 1, j))?);
    }
    let mut entries = row1;
    entries.extend(row2);
    PolyMatrix::new(2, params.matrix_cols(), entries)
}

pub fn build_minors(params: Parameters, ring: &Arc<RingDescriptor>) -> Result<Vec<Polynomial>> {
    build_matrix(params, ring)?.two_by_two_minors()
}

/// The divisor ideal generated by all listed minors.
pub fn divisor_ideal(params: Parameters, ring: &Arc<RingDescriptor>) -> Result<Ideal> {
    Ideal::new(ring.clone(), build_minors(params, ring)?)
}

/// Generic complete intersection data before any sections are computed.
#[derive(Debug, Clone)]
pub struct GenericBuild {
    pub params: Parameters,
    pub ring: Arc<RingDescriptor>,
    pub matrix: PolyMatrix,
    pub minors: Vec<Polynomial>,
    /// `f^p = sum_j w_p_j u_j`, `p = 1 .. nk-1`.
    pub ci_generators: Vec<Polynomial>,
}

impl GenericBuild {
    pub fn new(params: Parameters) -> Result<Self> {
        let ring = generic_ring(params)?;
        let matrix = build_matrix(params, &ring)?;
        let minors = matrix.two_by_two_minors()?;
        let mut ci = Vec::with_capacity(params.num_ci_generators());
        for p in 1..=(params.num_ci_generators() as u32) {
            let mut acc = Polynomial::zero(&ring);
            for (jx, u) in minors.iter().enumerate() {
                let w = Polynomial::var_by_name(&ring, &w_name(p, jx as u32 + 1))?;
                acc = acc.checked_add(&w.checked_mul(u)?)?;
            }
            ci.push(acc);
        }
        Ok(GenericBuild {
            params,
            ring,
            matrix,
            minors,
            ci_generators: ci,
        })
    }

    pub fn ideal_x(&self) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.ci_generators.clone())
    }

    pub fn ideal_d(&self) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.minors.clone())
    }
}

/// The normalization substitution: `a_i_j -> x_j t^(i-1)`, `z -> t^(k+1)`.
/// Any other variable of the source ring passes through by name.
pub fn normalization_map(
    params: Parameters,
    source: &Arc<RingDescriptor>,
) -> Result<SubstitutionMap> {
    let mut target_vars: Vec<(String, u32)> = Vec::new();
    for j in 1..=params.n {
        target_vars.push((format!("x_{j}"), 1));
    }
    target_vars.push(("t".to_string(), 1));
    for v in source.vars() {
        if parse_a_name(&v.name).is_some() || v.name == "z" {
            continue;
        }
        target_vars.push((v.name.clone(), v.weight));
    }
    let target = RingDescriptor::new(target_vars)?;
    let t = Polynomial::var_by_name(&target, "t")?;
    let mut images = Vec::with_capacity(source.num_vars());
    for v in source.vars() {
        if let Some((i, j)) = parse_a_name(&v.name) {
            let x = Polynomial::var_by_name(&target, &format!("x_{j}"))?;
            images.push(x.checked_mul(&t.pow(i - 1))?);
        } else if v.name == "z" {
            images.push(t.pow(params.k + 1));
        } else {
            images.push(Polynomial::var_by_name(&target, &v.name)?);
        }
    }
    SubstitutionMap::new(source.clone(), target, images)
}

/// Pick the denominator: the minor of column pair `(1, n+1)` when it is
/// nonzero and regular modulo `I_X`, otherwise the first minor that is; the
/// colon test `(I_X : f) = I_X` decides regularity.
pub fn choose_denominator(
    params: Parameters,
    minors: &[Polynomial],
    ideal_x: &Ideal,
    cfg: &EngineConfig,
) -> Result<(usize, Polynomial)> {
    let preferred = params.n as usize - 1; // index of pair (1, n+1) in lex listing
    let is_regular = |f: &Polynomial| -> Result<bool> {
        if f.is_zero() {
            return Ok(false);
        }
        if ideal_x.is_zero_ideal() {
            return Ok(true);
        }
        let colon = ideal_x.colon_element(f, cfg)?;
        colon.equals(ideal_x, cfg)
    };
    if is_regular(&minors[preferred])? {
        return Ok((preferred, minors[preferred].clone()));
    }
    for (i, u) in minors.iter().enumerate() {
        if i == preferred {
            continue;
        }
        if is_regular(u)? {
            return Ok((i, u.clone()));
        }
    }
    Err(Error::Genericity(
        "no minor is regular modulo the given ideal".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn parameter_validation() {
        assert!(Parameters::new(0, 2).is_err());
        assert!(Parameters::new(1, 1).is_err());
        let p = Parameters::new(1, 2).unwrap();
        assert_eq!(p.matrix_cols(), 4);
        assert_eq!(p.num_minors(), 6);
        assert_eq!(p.num_ci_generators(), 1);
    }

    #[test]
    fn matrix_for_k1_n2() {
        let params = Parameters::new(1, 2).unwrap();
        let ring = base_ring(params).unwrap();
        let m = build_matrix(params, &ring).unwrap();
        let p = |s: &str| parse_polynomial(&ring, s).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 4);
        let expect_row1 = ["a_2_1", "a_2_2", "z*a_1_1", "z*a_1_2"];
        let expect_row2 = ["a_1_1", "a_1_2", "a_2_1", "a_2_2"];
        for (c, s) in expect_row1.iter().enumerate() {
            assert_eq!(m.entry(0, c), &p(s));
        }
        for (c, s) in expect_row2.iter().enumerate() {
            assert_eq!(m.entry(1, c), &p(s));
        }
    }

    #[test]
    fn matrix_for_k2_n2_last_block() {
        let params = Parameters::new(2, 2).unwrap();
        let ring = base_ring(params).unwrap();
        let m = build_matrix(params, &ring).unwrap();
        let p = |s: &str| parse_polynomial(&ring, s).unwrap();
        assert_eq!(m.cols(), 6);
        assert_eq!(m.entry(0, 4), &p("z*a_1_1"));
        assert_eq!(m.entry(0, 5), &p("z*a_1_2"));
        assert_eq!(m.entry(1, 4), &p("a_3_1"));
        assert_eq!(m.entry(1, 5), &p("a_3_2"));
    }

    #[test]
    fn column_degree_difference_is_one() {
        for (k, n) in [(1, 2), (2, 2), (1, 3), (3, 2)] {
            let params = Parameters::new(k, n).unwrap();
            let ring = base_ring(params).unwrap();
            let m = build_matrix(params, &ring).unwrap();
            for c in 0..m.cols() {
                let d1 = m.entry(0, c).weighted_degree().unwrap();
                let d2 = m.entry(1, c).weighted_degree().unwrap();
                assert_eq!(d1, d2 + 1, "column {c} of (k,n)=({k},{n})");
            }
        }
    }

    #[test]
    fn minors_for_k1_n2() {
        let params = Parameters::new(1, 2).unwrap();
        let ring = base_ring(params).unwrap();
        let minors = build_minors(params, &ring).unwrap();
        let p = |s: &str| parse_polynomial(&ring, s).unwrap();
        assert_eq!(minors.len(), 6);
        // pair (1,2)
        assert_eq!(minors[0], p("a_2_1*a_1_2 - a_1_1*a_2_2"));
        // pairs (1,4) and (2,3) coincide
        assert_eq!(minors[2], minors[3]);
        assert_eq!(minors[2], p("a_2_1*a_2_2 - z*a_1_1*a_1_2"));
        // pair (3,4) is -z times pair (1,2)
        let z = p("z");
        assert_eq!(minors[5], -&(&z * &minors[0]));
    }

    #[test]
    fn minors_are_homogeneous_with_forced_z_weight() {
        for k in 1..=4u32 {
            for n in 2..=4u32 {
                let params = Parameters::new(k, n).unwrap();
                let ring = base_ring(params).unwrap();
                let minors = build_minors(params, &ring).unwrap();
                let degs = minor_degrees(params);
                assert_eq!(minors.len(), degs.len());
                for (u, d) in minors.iter().zip(degs) {
                    assert!(u.is_homogeneous(), "(k,n)=({k},{n})");
                    assert_eq!(u.weighted_degree(), Some(d));
                }
            }
        }
    }

    #[test]
    fn generic_ci_counts_and_homogeneity() {
        let params = Parameters::new(1, 2).unwrap();
        let b = GenericBuild::new(params).unwrap();
        assert_eq!(b.minors.len(), 6);
        assert_eq!(b.ci_generators.len(), 1);
        // every f^p is homogeneous of the uniform degree max deg + 1 = 6
        for f in &b.ci_generators {
            assert_eq!(f.weighted_degree(), Some(6));
            assert!(f.is_homogeneous());
        }
        // I_X is contained in I_D by construction
        let gb_d = b
            .ideal_d()
            .unwrap()
            .default_basis(&EngineConfig::default())
            .unwrap();
        for f in &b.ci_generators {
            assert!(gb_d.contains(f));
        }
    }

    #[test]
    fn generic_ci_counts_k2_n2() {
        let params = Parameters::new(2, 2).unwrap();
        let b = GenericBuild::new(params).unwrap();
        assert_eq!(b.minors.len(), 15);
        assert_eq!(b.ci_generators.len(), 3);
        for f in &b.ci_generators {
            assert!(f.is_homogeneous());
        }
    }

    #[test]
    fn normalization_kills_minors() {
        // the defining property of the parametrization, swept over the desk range
        for k in 1..=4u32 {
            for n in 2..=4u32 {
                let params = Parameters::new(k, n).unwrap();
                let ring = base_ring(params).unwrap();
                let sigma = normalization_map(params, &ring).unwrap();
                for u in build_minors(params, &ring).unwrap() {
                    assert!(sigma.apply(&u).unwrap().is_zero(), "(k,n)=({k},{n})");
                }
            }
        }
    }

    #[test]
    fn normalization_of_single_entries() {
        let params = Parameters::new(1, 2).unwrap();
        let ring = base_ring(params).unwrap();
        let sigma = normalization_map(params, &ring).unwrap();
        let target = sigma.target().clone();
        let tp = |s: &str| parse_polynomial(&target, s).unwrap();
        let z = Polynomial::var_by_name(&ring, "z").unwrap();
        assert_eq!(sigma.apply(&z).unwrap(), tp("t^2"));
        let a21 = Polynomial::var_by_name(&ring, "a_2_1").unwrap();
        assert_eq!(sigma.apply(&a21).unwrap(), tp("x_1*t"));
    }
}
