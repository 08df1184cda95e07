use std::sync::Arc;

use num_traits::One;

use super::*;
use crate::parse::parse_polynomial;
use crate::poly::coeff_int;

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn ring2() -> Arc<RingDescriptor> {
    RingDescriptor::new(vec![("x", 1), ("y", 1)]).unwrap()
}

fn p(r: &Arc<RingDescriptor>, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

fn ideal(r: &Arc<RingDescriptor>, gens: &[&str]) -> Ideal {
    Ideal::new(r.clone(), gens.iter().map(|s| p(r, s)).collect()).unwrap()
}

/// Independent certificate that `gb` is a Groebner basis of the ideal of
/// `inputs`: Buchberger's criterion replayed with exact division identities,
/// plus cofactor certificates both ways.
fn certify_groebner(r: &Arc<RingDescriptor>, inputs: &[Polynomial], order: &MonomialOrder) {
    let ideal = Ideal::new(r.clone(), inputs.to_vec()).unwrap();
    let gb = ideal.groebner_basis(order, &cfg()).unwrap();
    let basis = gb.polys();

    // division identity helper
    let check_divides_to_zero = |target: &Polynomial| {
        let d = divide_with_quotients(target, basis, order).unwrap();
        assert!(d.remainder.is_zero(), "expected zero remainder");
        let mut acc = Polynomial::zero(r);
        for (q, b) in d.quotients.iter().zip(basis) {
            acc = acc.checked_add(&q.checked_mul(b).unwrap()).unwrap();
        }
        assert_eq!(&acc, target, "division identity failed");
    };

    // 1. Buchberger criterion: every S-polynomial reduces to zero.
    let ctx = OrdCtx {
        weights: r.weights(),
        order,
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (mi, ci) = basis[i]
                .terms()
                .iter()
                .max_by(|a, b| ctx.cmp(&a.0, &b.0))
                .unwrap()
                .clone();
            let (mj, cj) = basis[j]
                .terms()
                .iter()
                .max_by(|a, b| ctx.cmp(&a.0, &b.0))
                .unwrap()
                .clone();
            let lcm = mi.lcm(&mj);
            let s = basis[i]
                .mul_term(&lcm.checked_div(&mi).unwrap(), &(Coeff::one() / ci))
                .checked_sub(&basis[j].mul_term(&lcm.checked_div(&mj).unwrap(), &(Coeff::one() / cj)))
                .unwrap();
            check_divides_to_zero(&s);
        }
    }

    // 2. inputs lie in the basis ideal, certified by division identities
    for g in inputs {
        check_divides_to_zero(g);
    }

    // 3. basis elements lie in the input ideal, certified by lifted cofactors
    let lift = LiftingBasis::new(r.clone(), inputs.to_vec(), order.clone(), &cfg()).unwrap();
    for b in basis {
        let cof = lift.lift(b).unwrap().expect("basis element must lift");
        let mut acc = Polynomial::zero(r);
        for (c, g) in cof.iter().zip(inputs) {
            acc = acc.checked_add(&c.checked_mul(g).unwrap()).unwrap();
        }
        assert_eq!(&acc, b, "cofactor certificate failed");
    }
}

#[test]
fn buchberger_lex_textbook() {
    let r = ring2();
    let i = ideal(&r, &["x^2 - 1", "x*y - 1"]);
    let gb = i.groebner_basis(&MonomialOrder::Lex, &cfg()).unwrap();
    let expect: Vec<Polynomial> = vec![p(&r, "y^2 - 1"), p(&r, "x - y")];
    assert_eq!(gb.polys(), expect.as_slice());
}

#[test]
fn buchberger_principal_and_zero() {
    let r = ring2();
    let i = ideal(&r, &["x"]);
    let gb = i.default_basis(&cfg()).unwrap();
    assert_eq!(gb.polys(), &[p(&r, "x")]);
    let z = Ideal::zero(r.clone());
    assert!(z.default_basis(&cfg()).unwrap().polys().is_empty());
}

#[test]
fn certified_bases() {
    let r = ring2();
    for order in [MonomialOrder::Lex, MonomialOrder::WDegRevLex] {
        certify_groebner(&r, &[p(&r, "x^2 - 1"), p(&r, "x*y - 1")], &order);
    }
    let r3 = RingDescriptor::new(vec![("x", 1), ("y", 1), ("z", 1)]).unwrap();
    certify_groebner(
        &r3,
        &[
            p(&r3, "x + y + z"),
            p(&r3, "x*y + y*z + x*z"),
            p(&r3, "x*y*z - 1"),
        ],
        &MonomialOrder::WDegRevLex,
    );
    // twisted cubic minors
    let r4 = RingDescriptor::new(vec![("y0", 1), ("y1", 1), ("y2", 1), ("y3", 1)]).unwrap();
    certify_groebner(
        &r4,
        &[
            p(&r4, "y0*y2 - y1^2"),
            p(&r4, "y0*y3 - y1*y2"),
            p(&r4, "y1*y3 - y2^2"),
        ],
        &MonomialOrder::WDegRevLex,
    );
}

#[test]
fn reduced_basis_unique_under_shuffle() {
    let r3 = RingDescriptor::new(vec![("x", 1), ("y", 1), ("z", 1)]).unwrap();
    let gens = vec![
        p(&r3, "x^2*y - z"),
        p(&r3, "x*z - y^2"),
        p(&r3, "y^3 - x"),
        p(&r3, "z^2 - x*y"),
    ];
    let reference = Ideal::new(r3.clone(), gens.clone())
        .unwrap()
        .default_basis(&cfg())
        .unwrap()
        .polys()
        .to_vec();
    // a few fixed permutations
    let perms: Vec<Vec<usize>> = vec![
        vec![3, 1, 0, 2],
        vec![1, 0, 3, 2],
        vec![2, 3, 1, 0],
    ];
    for perm in perms {
        let shuffled: Vec<Polynomial> = perm.iter().map(|&i| gens[i].clone()).collect();
        let gb = Ideal::new(r3.clone(), shuffled)
            .unwrap()
            .default_basis(&cfg())
            .unwrap();
        assert_eq!(gb.polys(), reference.as_slice());
    }
}

#[test]
fn normal_form_examples() {
    let r = ring2();
    let gb_ideal = ideal(&r, &["x - y"]);
    let gb = gb_ideal.groebner_basis(&MonomialOrder::Lex, &cfg()).unwrap();
    assert_eq!(gb.normal_form(&p(&r, "x^2")), p(&r, "y^2"));

    let i = ideal(&r, &["x^2 - 1", "x*y - 1"]);
    let gb = i.default_basis(&cfg()).unwrap();
    for g in i.generators() {
        assert!(gb.normal_form(g).is_zero());
    }

    let mi = ideal(&r, &["x", "y"]);
    let gb = mi.default_basis(&cfg()).unwrap();
    assert_eq!(gb.normal_form(&Polynomial::one(&r)), Polynomial::one(&r));
}

#[test]
fn division_examples() {
    let r = ring2();
    let d = divide_with_quotients(&p(&r, "x*y + y^2"), &[p(&r, "y")], &MonomialOrder::Lex).unwrap();
    assert_eq!(d.quotients, vec![p(&r, "x + y")]);
    assert!(d.remainder.is_zero());

    let d = divide_with_quotients(&p(&r, "x^2 + 1"), &[p(&r, "y")], &MonomialOrder::Lex).unwrap();
    assert!(d.quotients[0].is_zero());
    assert_eq!(d.remainder, p(&r, "x^2 + 1"));
    // no remainder term divisible by a divisor's leading term
    let d = divide_with_quotients(
        &p(&r, "x^2*y + x*y^2 + y^2"),
        &[p(&r, "x*y - 1"), p(&r, "y^2 - 1")],
        &MonomialOrder::Lex,
    )
    .unwrap();
    let mut acc = d.remainder.clone();
    for (q, g) in d
        .quotients
        .iter()
        .zip([p(&r, "x*y - 1"), p(&r, "y^2 - 1")])
    {
        acc = acc.checked_add(&q.checked_mul(&g).unwrap()).unwrap();
    }
    assert_eq!(acc, p(&r, "x^2*y + x*y^2 + y^2"));
}

#[test]
fn eliminate_cuspidal_parametrization() {
    // kernel of t -> (t^2, t^3): eliminate t from (x - t^2, y - t^3)
    let r = RingDescriptor::new(vec![("t", 1), ("x", 1), ("y", 1)]).unwrap();
    let i = ideal(&r, &["x - t^2", "y - t^3"]);
    let t = r.var_index("t").unwrap();
    let out = i.eliminate(&[t], &cfg()).unwrap();
    let small = out.ring().clone();
    let expect = Ideal::new(small.clone(), vec![p(&small, "y^2 - x^3")]).unwrap();
    assert!(out.equals(&expect, &cfg()).unwrap());
    // generators of the eliminated ideal are free of t and members of i
    let gb_i = i.default_basis(&cfg()).unwrap();
    for g in out.generators() {
        let back = g.embed(&r, &[1, 2]);
        assert!(gb_i.contains(&back));
    }
}

#[test]
fn eliminate_trivial_cases() {
    let r = ring2();
    let i = ideal(&r, &["x"]);
    let out = i.eliminate(&[r.var_index("y").unwrap()], &cfg()).unwrap();
    assert_eq!(out.generators().len(), 1);
    assert_eq!(out.generators()[0].to_string(), "x");

    let j = ideal(&r, &["x"]);
    let out = j.eliminate(&[r.var_index("x").unwrap()], &cfg()).unwrap();
    assert!(out.is_zero_ideal());
}

#[test]
fn colon_examples() {
    let r = ring2();
    let i = ideal(&r, &["x*y", "y^2"]);
    let c = i.colon_element(&p(&r, "y"), &cfg()).unwrap();
    assert!(c.equals(&ideal(&r, &["x", "y"]), &cfg()).unwrap());

    let c1 = i.colon_element(&Polynomial::one(&r), &cfg()).unwrap();
    assert!(c1.equals(&i, &cfg()).unwrap());

    assert!(matches!(
        i.colon_element(&Polynomial::zero(&r), &cfg()),
        Err(Error::ZeroDivisor(_))
    ));
}

#[test]
fn colon_on_cuspidal_quotient() {
    // ((x2) + I_X) : (x1, x2) contains (x2, x1^2), since x1^2*x1 = x0*x2^2 mod I_X
    let r = RingDescriptor::new(vec![("x0", 1), ("x1", 1), ("x2", 1)]).unwrap();
    let a = ideal(&r, &["x2", "x2^2*x0 - x1^3"]);
    let d = ideal(&r, &["x1", "x2"]);
    let c = a.colon_ideal(&d, &cfg()).unwrap();
    let gb = c.default_basis(&cfg()).unwrap();
    assert!(gb.contains(&p(&r, "x2")));
    assert!(gb.contains(&p(&r, "x1^2")));
    // and it equals (x2, x1^2) exactly
    assert!(c.equals(&ideal(&r, &["x2", "x1^2"]), &cfg()).unwrap());
}

#[test]
fn saturation_examples() {
    let r = ring2();
    let i = ideal(&r, &["x^2*y"]);
    let s = i.saturate(&p(&r, "x"), &cfg()).unwrap();
    assert!(s.equals(&ideal(&r, &["y"]), &cfg()).unwrap());

    let j = ideal(&r, &["x"]);
    let s = j.saturate(&p(&r, "y"), &cfg()).unwrap();
    assert!(s.equals(&j, &cfg()).unwrap());
}

#[test]
fn colon_saturate_containment_chain() {
    let r = ring2();
    let i = ideal(&r, &["x^3*y - x*y", "x^2*y^2"]);
    let g = p(&r, "x*y + x");
    let c = i.colon_element(&g, &cfg()).unwrap();
    let s = i.saturate(&g, &cfg()).unwrap();
    assert!(c.contains_ideal(&i, &cfg()).unwrap());
    assert!(s.contains_ideal(&c, &cfg()).unwrap());
    // g * colon(I, g) ⊆ I
    let gb_i = i.default_basis(&cfg()).unwrap();
    for h in c.generators() {
        assert!(gb_i.contains(&h.checked_mul(&g).unwrap()));
    }
}

#[test]
fn codimension_examples() {
    let r = ring2();
    assert_eq!(ideal(&r, &["x", "y"]).codimension(&cfg()).unwrap(), 2);
    assert_eq!(ideal(&r, &["x*y"]).codimension(&cfg()).unwrap(), 1);
    assert!(matches!(
        ideal(&r, &["x", "x - 1"]).codimension(&cfg()),
        Err(Error::UnitIdeal)
    ));
    assert_eq!(Ideal::zero(r.clone()).codimension(&cfg()).unwrap(), 0);
}

#[test]
fn minimal_generator_examples() {
    let r = ring2();
    let i = ideal(&r, &["x", "x^2", "y"]);
    let m = i.minimal_generators(&cfg()).unwrap();
    assert_eq!(m.len(), 2);
    let degs: Vec<u64> = m.iter().map(|g| g.weighted_degree().unwrap()).collect();
    assert_eq!(degs, vec![1, 1]);

    let principal = ideal(&r, &["x^2 - y^2"]);
    assert_eq!(principal.minimal_generators(&cfg()).unwrap().len(), 1);

    let mixed = ideal(&r, &["x + x^2"]);
    assert!(matches!(
        mixed.minimal_generators(&cfg()),
        Err(Error::Inhomogeneous(_))
    ));
}

#[test]
fn hilbert_series_from_ideals() {
    // Q[x]/(x^2)
    let r1 = RingDescriptor::new(vec![("x", 1)]).unwrap();
    let s = ideal(&r1, &["x^2"]).hilbert_series(&cfg()).unwrap();
    assert_eq!(s.numerator, vec![1, 0, -1]);
    assert_eq!(s.denominator_weights, vec![1]);

    // zero ideal in 3 variables
    let r3 = RingDescriptor::new(vec![("x", 1), ("y", 1), ("z", 1)]).unwrap();
    let s = Ideal::zero(r3.clone()).hilbert_series(&cfg()).unwrap();
    assert_eq!(s.numerator, vec![1]);
    assert_eq!(s.denominator_weights, vec![1, 1, 1]);

    let mixed = ideal(&r3, &["x + x^2"]);
    assert!(matches!(
        mixed.hilbert_series(&cfg()),
        Err(Error::Inhomogeneous(_))
    ));
}

/// Brute-force count of standard monomials per degree, used as the
/// independent oracle for Hilbert values.
fn count_standard_monomials(lts: &[Polynomial], nvars: usize, upto: usize) -> Vec<i128> {
    fn rec(
        exps: &mut Vec<u32>,
        var: usize,
        nvars: usize,
        upto: usize,
        counts: &mut Vec<i128>,
        lts: &[Monomial],
    ) {
        if var == nvars {
            let m = Monomial::from_exponents(exps.clone());
            let deg = m.total_degree() as usize;
            if !lts.iter().any(|l| l.divides(&m)) {
                counts[deg] += 1;
            }
            return;
        }
        let used: u32 = exps.iter().sum();
        for e in 0..=(upto as u32 - used) {
            exps.push(e);
            rec(exps, var + 1, nvars, upto, counts, lts);
            exps.pop();
        }
    }
    let mons: Vec<Monomial> = lts
        .iter()
        .map(|p| p.leading().unwrap().0.clone())
        .collect();
    let mut counts = vec![0i128; upto + 1];
    rec(&mut Vec::new(), 0, nvars, upto, &mut counts, &mons);
    counts
}

#[test]
fn hilbert_twisted_cubic_against_counting_oracle() {
    let r = RingDescriptor::new(vec![("y0", 1), ("y1", 1), ("y2", 1), ("y3", 1)]).unwrap();
    let i = ideal(&r, &["y0*y2 - y1^2", "y0*y3 - y1*y2", "y1*y3 - y2^2"]);
    let s = i.hilbert_series(&cfg()).unwrap();
    let gb = i.default_basis(&cfg()).unwrap();
    let oracle = count_standard_monomials(gb.polys(), 4, 6);
    assert_eq!(s.values(6), oracle);
    assert_eq!(oracle, vec![1, 4, 7, 10, 13, 16, 19]);
    let red = s.reduced();
    assert_eq!(red.numerator, vec![1, 2]);
    assert_eq!(red.denominator_weights, vec![1, 1]);
    assert!(!s.numerator_palindromic());
}

#[test]
fn hilbert_series_is_generating_set_independent() {
    let r = RingDescriptor::new(vec![("x", 1), ("y", 1), ("z", 1)]).unwrap();
    let i = ideal(&r, &["x^2 - y*z", "x*y"]);
    let j = ideal(
        &r,
        &[
            "x^2 - y*z",
            "x*y",
            "x^3 - x*y*z",
            "x^2*y - y^2*z",
        ],
    );
    assert!(i.equals(&j, &cfg()).unwrap());
    assert_eq!(
        i.hilbert_series(&cfg()).unwrap(),
        j.hilbert_series(&cfg()).unwrap()
    );
}

#[test]
fn ideal_equality_examples() {
    let r = ring2();
    assert!(ideal(&r, &["x", "y"])
        .equals(&ideal(&r, &["y", "x + y"]), &cfg())
        .unwrap());
    assert!(!ideal(&r, &["x"])
        .equals(&ideal(&r, &["x^2"]), &cfg())
        .unwrap());
    assert!(ideal(&r, &["x - y", "y^2 - 1"])
        .equals(&ideal(&r, &["x^2 - 1", "x*y - 1"]), &cfg())
        .unwrap());
}

#[test]
fn lifting_basis_cofactors_replay() {
    let r = ring2();
    let inputs = vec![p(&r, "x^2 - 1"), p(&r, "x*y - 1")];
    let lift = LiftingBasis::new(
        r.clone(),
        inputs.clone(),
        MonomialOrder::WDegRevLex,
        &cfg(),
    )
    .unwrap();
    // x - y is in the ideal
    let target = p(&r, "x - y");
    let cof = lift.lift(&target).unwrap().expect("member");
    let mut acc = Polynomial::zero(&r);
    for (c, g) in cof.iter().zip(&inputs) {
        acc = acc.checked_add(&c.checked_mul(g).unwrap()).unwrap();
    }
    assert_eq!(acc, target);
    // 1 is not
    assert!(lift.lift(&Polynomial::one(&r)).unwrap().is_none());
}

#[test]
fn gb_cache_reuse() {
    let r = ring2();
    let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
    let a = i.default_basis(&cfg()).unwrap();
    let b = i.default_basis(&cfg()).unwrap();
    assert!(Arc::ptr_eq(&a, &b));
}
