use super::*;

fn only(g: CheckGroup) -> RunConfig {
    RunConfig {
        checks: vec![g],
        syzygy_sweep: 4,
        max_n: 2,
        max_k: 0,
        table_n: 1,
        ..Default::default()
    }
}

#[test]
fn config_validation() {
    assert!(RunConfig::default().validate().is_ok());
    let bad = RunConfig { max_n: 0, ..Default::default() };
    assert!(matches!(run(&bad), Err(Error::InvalidArgument(_))));
    let none = RunConfig { checks: vec![], ..Default::default() };
    assert!(none.validate().is_err());
    assert_eq!("lemma4".parse::<CheckGroup>().unwrap(), CheckGroup::Lemma4);
    assert!("lemma3".parse::<CheckGroup>().is_err());
}

#[test]
fn lemma1_shape() {
    let r = run(&only(CheckGroup::Lemma1)).unwrap();
    assert_eq!(r.results.len(), 15);
    assert_eq!(r.results.iter().filter(|x| x.check_id.starts_with("lemma1.inequivalent.")).count(), 10);
    assert_eq!(r.summary.pass, 15, "{}", r.to_text());
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn theorem_and_lemma4() {
    let mut cfg = only(CheckGroup::Theorem);
    cfg.checks.push(CheckGroup::Lemma4);
    let r = run(&cfg).unwrap();
    assert_eq!(r.summary.fail + r.summary.indeterminate, 0, "{}", r.to_text());
    assert_eq!(r.result("lemma4.product_zero.n=4").unwrap().status, CheckStatus::Pass);
    // groups come out in canonical order
    assert!(r.results[0].check_id.starts_with("lemma4."));
}

#[test]
fn output_is_deterministic() {
    let cfg = only(CheckGroup::Lemma2);
    let a = run(&cfg).unwrap().to_json();
    let b = run(&cfg).unwrap().to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["summary"]["pass"], 3);
    assert!(v["results"][0].get("elapsed_ms").is_none());
}
