use unproj_core::verify::{run_suite, Suite, SuiteOptions};
use unproj_core::EngineConfig;

fn show(suite: Suite, opts: &SuiteOptions) {
    let cfg = EngineConfig::default();
    let t0 = std::time::Instant::now();
    let reports = run_suite(suite, opts, &cfg).expect("suite runs");
    for r in &reports {
        println!(
            "{:>9} {} [{}] {:?} ({} ms)",
            match r.status {
                unproj_core::verify::CheckStatus::Pass { .. } => "PASS",
                unproj_core::verify::CheckStatus::Fail { .. } => "FAIL",
                unproj_core::verify::CheckStatus::Skipped { .. } => "SKIP",
            },
            r.name,
            r.params,
            r.status,
            r.millis
        );
    }
    println!("total: {:?}", t0.elapsed());
}

#[test]
fn probe_presentation_suite() {
    show(Suite::Presentation, &SuiteOptions::default());
}

#[test]
fn probe_codim_12() {
    show(
        Suite::Codim,
        &SuiteOptions {
            params: Some((1, 2)),
            ..Default::default()
        },
    );
}

#[test]
fn probe_codim_13() {
    show(
        Suite::Codim,
        &SuiteOptions {
            params: Some((1, 3)),
            ..Default::default()
        },
    );
}

#[test]
fn probe_gorenstein() {
    show(Suite::Gorenstein, &SuiteOptions::default());
}

#[test]
fn probe_lemma() {
    show(Suite::Lemma, &SuiteOptions::default());
}
