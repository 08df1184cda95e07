use std::time::Instant;

use unproj_core::unprojection::{
    base_ring, generic_ring, specialization_from_pairs, Parameters, UnprojectionData,
};
use unproj_core::EngineConfig;

#[test]
fn probe_13_presentation_gb() {
    let cfg = EngineConfig::default();
    let params = Parameters::new(1, 3).unwrap();
    let base = base_ring(params).unwrap();
    let generic = generic_ring(params).unwrap();
    let assigns = unproj_core::verify::seeded_assignments_for_probe(params, &base, 0);
    let hat = specialization_from_pairs(&generic, &base, assigns).unwrap();
    let data = UnprojectionData::specialized(params, &hat, &cfg).unwrap();
    println!("data done");
    let rels = data.relations(&cfg).unwrap();
    println!("relations done");
    let pres = data.presentation_from(&rels, &cfg).unwrap();
    for g in &pres.generators {
        println!(
            "  {}: deg {:?}, {} terms",
            g.family.label(),
            g.poly.weighted_degree(),
            g.poly.num_terms()
        );
    }
    let t0 = Instant::now();
    let ideal = pres.ideal().unwrap();
    let gb = ideal.default_basis(&cfg).unwrap();
    println!("presentation GB: {} elements ({:?})", gb.polys().len(), t0.elapsed());
    let t0 = Instant::now();
    let codim = ideal.codimension(&cfg).unwrap();
    println!("codim {codim} ({:?})", t0.elapsed());
}
