use kronecker_diameter::harness::{campaign_report, claim_ids, describe_claim, EnsembleSpec, RandomSpec};

#[test]
fn every_claim_holds_on_small_graphs_with_loops() {
    let spec = EnsembleSpec::exhaustive(3, true);
    let report = campaign_report(&["all"], &spec, 1).unwrap();
    let failed: Vec<_> = report
        .claims
        .iter()
        .filter(|c| !c.pass)
        .map(|c| (&c.claim_id, &c.minimized))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    for c in &report.claims {
        assert!(c.instances_checked > 0, "{} checked nothing", c.claim_id);
    }
    assert!(report.pass);
}

#[test]
fn every_claim_holds_on_random_graphs() {
    let spec = EnsembleSpec::exhaustive(3, false).with_random(RandomSpec {
        count: 150,
        min_order: 2,
        max_order: 8,
        loops: true,
    });
    let report = campaign_report(&["all"], &spec, 77).unwrap();
    let failed: Vec<_> = report
        .claims
        .iter()
        .filter(|c| !c.pass)
        .map(|c| (&c.claim_id, &c.minimized))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn every_claim_is_described() {
    for id in claim_ids() {
        assert!(describe_claim(id).is_some_and(|d| !d.is_empty()));
    }
    assert!(describe_claim("missing").is_none());
}
