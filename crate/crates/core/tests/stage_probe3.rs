use std::time::Instant;

use unproj_core::unprojection::{
    base_ring, build_minors, choose_denominator, generic_ring, specialization_from_pairs,
    Parameters,
};
use unproj_core::{EngineConfig, Ideal};

#[test]
fn probe_13_colon_chain() {
    let cfg = EngineConfig::default();
    let params = Parameters::new(1, 3).unwrap();
    let base = base_ring(params).unwrap();
    let generic = generic_ring(params).unwrap();
    let assigns = unproj_core::verify::seeded_assignments_for_probe(params, &base, 0);
    let hat = specialization_from_pairs(&generic, &base, assigns).unwrap();
    let minors = build_minors(params, &base).unwrap();
    let gb = unproj_core::unprojection::GenericBuild::new(params).unwrap();
    let ix_gens: Vec<_> = gb
        .ci_generators
        .iter()
        .map(|f| hat.apply(f).unwrap())
        .collect();
    let ideal_x = Ideal::new(base.clone(), ix_gens).unwrap();
    let (_, f) = choose_denominator(params, &minors, &ideal_x, &cfg).unwrap();
    let ideal_d = Ideal::new(base.clone(), minors.clone()).unwrap();
    let dmin = ideal_d.minimal_generators(&cfg).unwrap();
    let xf = ideal_x.plus_polys(&[f.clone()]).unwrap();

    let mut acc: Option<Ideal> = None;
    for (i, u) in dmin.iter().enumerate() {
        let t0 = Instant::now();
        let c = xf.colon_element(u, &cfg).unwrap();
        let tc = t0.elapsed();
        let t0 = Instant::now();
        acc = Some(match acc {
            None => c,
            Some(prev) => prev.intersect(&c, &cfg).unwrap(),
        });
        println!(
            "colon {i}: {tc:?}, meet: {:?}, acc gens = {}",
            t0.elapsed(),
            acc.as_ref().unwrap().generators().len()
        );
    }
    let j = acc.unwrap();
    let t0 = Instant::now();
    let gbj = j.default_basis(&cfg).unwrap();
    println!("GB(J): {} elements ({:?})", gbj.polys().len(), t0.elapsed());
    let t0 = Instant::now();
    let mins = j.minimal_generators(&cfg).unwrap();
    println!(
        "minimal gens of J: {} ({:?}), degrees {:?}",
        mins.len(),
        t0.elapsed(),
        mins.iter()
            .map(|g| g.weighted_degree().unwrap())
            .collect::<Vec<_>>()
    );
    let gbxf = xf.default_basis(&cfg).unwrap();
    for m in &mins {
        let nf = gbxf.normal_form(m);
        if !nf.is_zero() {
            println!(
                "nontrivial class deg {:?} with {} terms",
                m.weighted_degree(),
                nf.num_terms()
            );
        }
    }
}
