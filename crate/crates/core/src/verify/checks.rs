//! The individual checks.

use crate::error::{Error, Result};
use crate::groebner::{EngineConfig, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::unprojection::{
    a_name, kernel_oracle, product_identity_instances, telescoping_instances,
    wraparound_instances, Parameters, PresentationIdeal, UnprojectionData,
};

use super::instances::{cuspidal_cubic_example, standard_instance};
use super::{run_check, CheckReport, CheckStatus};

fn error_report(name: &str, params: &str, err: Error) -> CheckReport {
    let status = match err {
        Error::Budget { limit } => CheckStatus::Skipped {
            reason: format!("resource budget of {limit} S-pairs exhausted"),
        },
        Error::Genericity(reason) => CheckStatus::Skipped {
            reason: format!("genericity precondition failed: {reason}"),
        },
        Error::Inhomogeneous(reason) => CheckStatus::Skipped {
            reason: format!("graded check skipped: {reason}"),
        },
        other => CheckStatus::Fail {
            witness: format!("error: {other}"),
        },
    };
    CheckReport {
        name: name.to_string(),
        params: params.to_string(),
        status,
        millis: 0,
    }
}

/// Sweep the three formal identities over all index tuples for every
/// `1 <= k <= kmax`, `2 <= n <= nmax`, and run a mutated negative control.
pub fn check_lemma_identities(kmax: u32, nmax: u32) -> Vec<CheckReport> {
    let range = format!("k<={kmax},n<={nmax}");
    let families: [(&str, fn(Parameters) -> Result<Vec<crate::unprojection::IdentityInstance>>);
        3] = [
        ("lemma_telescoping", telescoping_instances),
        ("lemma_product", product_identity_instances),
        ("lemma_wraparound", wraparound_instances),
    ];
    let mut out = Vec::new();
    for (name, build) in families {
        out.push(run_check(name, &range, || {
            let mut count = 0usize;
            for k in 1..=kmax {
                for n in 2..=nmax {
                    let params = Parameters::new(k, n)?;
                    for inst in build(params)? {
                        if !inst.holds() {
                            return Ok(Err(format!(
                                "identity {} has nonzero witness {}",
                                inst.label,
                                inst.witness()
                            )));
                        }
                        count += 1;
                    }
                }
            }
            Ok(Ok(format!("{count} instances hold exactly")))
        }));
    }
    out.push(run_check("lemma_negative_control", &range, || {
        let params = Parameters::new(kmax.max(1), 2)?;
        let inst = wraparound_instances(params)?
            .into_iter()
            .next()
            .expect("k >= 1 has a wraparound instance");
        let mutated_rhs = -&inst.rhs;
        if inst.lhs == mutated_rhs {
            return Ok(Err(
                "sign-flipped identity still holds; the sweep is insensitive".into(),
            ));
        }
        let witness = &inst.lhs - &mutated_rhs;
        Ok(Ok(format!(
            "sign flip detected, witness has {} terms",
            witness.num_terms()
        )))
    }));
    out
}

/// Oracle equality for one data set: the elimination kernel equals the
/// assembled presentation ideal.
pub fn check_presentation(data: &UnprojectionData, cfg: &EngineConfig) -> CheckReport {
    let params_str = format!("k={},n={}", data.params.k(), data.params.n());
    run_check("presentation_oracle", &params_str, || {
        let pres = data.presentation(cfg)?;
        let kernel = data.kernel(&pres.ring_t, cfg)?;
        let assembled = pres.ideal()?;
        if assembled.equals(&kernel, cfg)? {
            Ok(Ok(format!(
                "kernel with {} generators equals the assembled ideal ({} listed, {} beyond I_X)",
                kernel.generators().len(),
                pres.generators.len(),
                pres.non_ix_generators().count()
            )))
        } else {
            let missing = kernel
                .generators()
                .iter()
                .find(|g| {
                    !assembled
                        .contains_poly(g, cfg)
                        .unwrap_or(false)
                })
                .map(|g| g.to_string())
                .unwrap_or_else(|| "assembled generator outside kernel".into());
            Ok(Err(format!("ideals differ; witness: {missing}")))
        }
    })
}

/// Negative control: deleting one quadratic generator must break equality,
/// with the kernel strictly larger.
pub fn check_presentation_negative_control(
    data: &UnprojectionData,
    cfg: &EngineConfig,
) -> CheckReport {
    let params_str = format!("k={},n={}", data.params.k(), data.params.n());
    run_check("presentation_negative_control", &params_str, || {
        let pres = data.presentation(cfg)?;
        let kernel = data.kernel(&pres.ring_t, cfg)?;
        let victim = pres
            .generators
            .iter()
            .rposition(|g| {
                matches!(
                    g.family,
                    crate::unprojection::GenFamily::QuadA { .. }
                        | crate::unprojection::GenFamily::QuadB { .. }
                )
            })
            .expect("every k >= 1 format has a quadratic generator");
        let label = pres.generators[victim].family.label();
        let gens: Vec<Polynomial> = pres
            .generators
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != victim)
            .map(|(_, g)| g.poly.clone())
            .collect();
        let reduced = Ideal::new(pres.ring_t.clone(), gens)?;
        if reduced.equals(&kernel, cfg)? {
            return Ok(Err(format!(
                "deleting {label} left the ideal unchanged; the oracle is insensitive"
            )));
        }
        // the kernel must still contain the reduced set
        if !kernel.contains_ideal(&reduced, cfg)? {
            return Ok(Err(
                "reduced presentation escapes the kernel; construction broken".into(),
            ));
        }
        Ok(Ok(format!(
            "deleting {label} makes the kernel strictly larger, as it must"
        )))
    })
}

pub(crate) fn presentation_suite(params: Parameters, cfg: &EngineConfig) -> Vec<CheckReport> {
    let params_str = format!("k={},n={}", params.k(), params.n());
    let inst = match standard_instance(params, cfg) {
        Ok(i) => i,
        Err(e) => return vec![error_report("presentation_oracle", &params_str, e)],
    };
    vec![
        check_presentation(&inst.data, cfg),
        check_presentation_negative_control(&inst.data, cfg),
    ]
}

/// The four codimension assertions.
pub fn check_codimensions(data: &UnprojectionData, cfg: &EngineConfig) -> Vec<CheckReport> {
    let params = data.params;
    let (k, n) = (params.k(), params.n());
    let params_str = format!("k={k},n={n}");
    let mut out = Vec::new();

    out.push(run_check("codim_divisor", &params_str, || {
        let got = data.divisor_ideal()?.codimension(cfg)?;
        let want = n * k;
        if got == want {
            Ok(Ok(format!("codim I_D = {got} = nk")))
        } else {
            Ok(Err(format!("codim I_D = {got}, expected nk = {want}")))
        }
    }));

    out.push(run_check("codim_presentation", &params_str, || {
        let pres = data.presentation(cfg)?;
        let got = pres.ideal()?.codimension(cfg)?;
        let want = n * k + k;
        let beyond = pres.non_ix_generators().count();
        if got == want {
            Ok(Ok(format!(
                "codim presentation = {got} = nk + k, {beyond} generators beyond I_X"
            )))
        } else {
            Ok(Err(format!(
                "codim presentation = {got}, expected nk + k = {want}"
            )))
        }
    }));

    out.push(run_check("codim_image_jump", &params_str, || {
        let image = data.section_image(cfg)?;
        let upstairs = image.ideal.codimension(cfg)?;
        let base = data.ideal_x.codimension(cfg)?;
        if upstairs == base + 1 {
            Ok(Ok(format!(
                "codim (I_N + I_X) - codim I_X = {upstairs} - {base} = 1"
            )))
        } else {
            Ok(Err(format!(
                "codim jump is {upstairs} - {base}, expected 1"
            )))
        }
    }));

    out.push(run_check("codim_coordinate_arith", &params_str, || {
        let mut vars = Vec::new();
        for i in 1..=(k + 1) {
            for j in 1..=n {
                vars.push(Polynomial::var_by_name(&data.ring, &a_name(i, j))?);
            }
        }
        let coord = data.ideal_x.plus_polys(&vars)?;
        let got = coord.codimension(cfg)?;
        let want = (k + 1) * n;
        let identity = want as i64 - (n as i64 * k as i64 - 1);
        if got != want {
            return Ok(Err(format!(
                "codim of the coordinate ideal is {got}, expected (k+1)n = {want}"
            )));
        }
        if identity != n as i64 + 1 {
            return Ok(Err(format!(
                "(k+1)n - (nk-1) = {identity}, expected n + 1 = {}",
                n + 1
            )));
        }
        Ok(Ok(format!(
            "codim = {want} and (k+1)n - (nk-1) = {identity} = n + 1"
        )))
    }));

    out
}

pub(crate) fn codim_suite(params: Parameters, cfg: &EngineConfig) -> Vec<CheckReport> {
    let params_str = format!("k={},n={}", params.k(), params.n());
    let inst = match standard_instance(params, cfg) {
        Ok(i) => i,
        Err(e) => return vec![error_report("codim_suite", &params_str, e)],
    };
    check_codimensions(&inst.data, cfg)
}

/// Necessary Gorenstein condition: palindromic Hilbert numerator of the
/// graded presentation quotient.
pub fn check_gorenstein_symmetry(pres: &PresentationIdeal, cfg: &EngineConfig) -> CheckReport {
    let params_str = format!("k={},n={}", pres.params.k(), pres.params.n());
    run_check("gorenstein_symmetry", &params_str, || {
        if !pres.graded {
            return Err(Error::Inhomogeneous(
                "specialization is not graded; symmetry check needs a grading".into(),
            ));
        }
        let series = pres.ideal()?.hilbert_series(cfg)?;
        let reduced = series.reduced();
        if series.numerator_palindromic() {
            Ok(Ok(format!(
                "Hilbert numerator {} is palindromic up to sign",
                reduced
            )))
        } else {
            Ok(Err(format!(
                "Hilbert numerator {} is not palindromic",
                reduced
            )))
        }
    })
}

pub fn check_gorenstein_suite(params: Parameters, cfg: &EngineConfig) -> Vec<CheckReport> {
    let params_str = format!("k={},n={}", params.k(), params.n());
    let mut out = Vec::new();
    match standard_instance(params, cfg) {
        Ok(inst) => match inst.data.presentation(cfg) {
            Ok(pres) => out.push(check_gorenstein_symmetry(&pres, cfg)),
            Err(e) => out.push(error_report("gorenstein_symmetry", &params_str, e)),
        },
        Err(e) => out.push(error_report("gorenstein_symmetry", &params_str, e)),
    }

    out.push(run_check("gorenstein_zero_ideal", "3 variables", || {
        let ring = crate::ring::RingDescriptor::new(vec![("x", 1), ("y", 1), ("z", 1)])?;
        let series = Ideal::zero(ring).hilbert_series(cfg)?;
        if series.numerator_palindromic() && series.reduced().numerator == vec![1] {
            Ok(Ok("numerator 1, trivially palindromic".into()))
        } else {
            Ok(Err(format!("unexpected series {series}")))
        }
    }));

    out.push(run_check(
        "gorenstein_twisted_cubic_negative",
        "4 variables",
        || {
            let ring = crate::ring::RingDescriptor::new(vec![
                ("y0", 1),
                ("y1", 1),
                ("y2", 1),
                ("y3", 1),
            ])?;
            let p = |s: &str| crate::parse::parse_polynomial(&ring, s);
            let i = Ideal::new(
                ring.clone(),
                vec![
                    p("y0*y2 - y1^2")?,
                    p("y0*y3 - y1*y2")?,
                    p("y1*y3 - y2^2")?,
                ],
            )?;
            let series = i.hilbert_series(cfg)?;
            let reduced = series.reduced();
            if reduced.numerator == vec![1, 2] && !series.numerator_palindromic() {
                Ok(Ok(
                    "numerator 1 + 2t is not palindromic, as expected of a non-Gorenstein ring"
                        .into(),
                ))
            } else {
                Ok(Err(format!("unexpected series {series}")))
            }
        },
    ))
    ;
    out
}

/// The classical counterexample: unprojecting the reduced cusp ideal on the
/// cuspidal plane cubic gives the twisted cubic's coordinate ring, whose
/// Hilbert numerator is not palindromic.
pub fn check_counterexample(cfg: &EngineConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(run_check(
        "counterexample_kernel",
        "cuspidal cubic",
        || {
            let ex = cuspidal_cubic_example()?;
            let section = crate::unprojection::single_section(
                &ex.ring,
                &ex.ideal_x,
                &ex.divisor_gens,
                &ex.denominator,
                cfg,
            )?;
            // the section is x1^2 / x2
            let expected_section = crate::parse::parse_polynomial(&ex.ring, "x1^2")?;
            if section != expected_section {
                return Ok(Err(format!(
                    "section numerator is {section}, expected x1^2"
                )));
            }
            let ring_t = ex.ring.extended(vec![("T_0".to_string(), 1)])?;
            let kernel = kernel_oracle(
                &ring_t,
                &ex.ring,
                &ex.ideal_x,
                &ex.denominator,
                &[section],
                cfg,
            )?;
            // 2x2 minors of [[x2, x1, T_0], [x1, T_0, x0]]
            let v = |n: &str| Polynomial::var_by_name(&ring_t, n);
            let m = PolyMatrix::new(
                2,
                3,
                vec![v("x2")?, v("x1")?, v("T_0")?, v("x1")?, v("T_0")?, v("x0")?],
            )?;
            let twisted = Ideal::new(ring_t.clone(), m.two_by_two_minors()?)?;
            if !kernel.equals(&twisted, cfg)? {
                return Ok(Err("kernel differs from the twisted cubic minors".into()));
            }
            // spot witnesses: the named generators and the original hypersurface
            let gb = kernel.default_basis(cfg)?;
            for w in [
                "x2*T_0 - x1^2",
                "x1*T_0 - x0*x2",
                "T_0^2 - x0*x1",
                "x2^2*x0 - x1^3",
            ] {
                let poly = crate::parse::parse_polynomial(&ring_t, w)?;
                if !gb.contains(&poly) {
                    return Ok(Err(format!("kernel misses {w}")));
                }
            }
            Ok(Ok(
                "kernel equals the twisted cubic minor ideal; hypersurface maps to zero".into(),
            ))
        },
    ));

    out.push(run_check(
        "counterexample_hilbert",
        "cuspidal cubic",
        || {
            let ex = cuspidal_cubic_example()?;
            let section = crate::unprojection::single_section(
                &ex.ring,
                &ex.ideal_x,
                &ex.divisor_gens,
                &ex.denominator,
                cfg,
            )?;
            let ring_t = ex.ring.extended(vec![("T_0".to_string(), 1)])?;
            let kernel = kernel_oracle(
                &ring_t,
                &ex.ring,
                &ex.ideal_x,
                &ex.denominator,
                &[section],
                cfg,
            )?;
            let series = kernel.hilbert_series(cfg)?;
            let reduced = series.reduced();
            if reduced.numerator == vec![1, 2] && !series.numerator_palindromic() {
                Ok(Ok(format!(
                    "Hilbert series {} with non-palindromic numerator",
                    reduced
                )))
            } else {
                Ok(Err(format!("unexpected Hilbert series {series}")))
            }
        },
    ));
    out
}
