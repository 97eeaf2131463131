use tymod_core::battery::{battery, battery_groups, battery_metrics};
use tymod_core::checks::*;

fn assert_pass(o: CheckOutcome) {
    assert!(o.passed, "{o}");
}

#[test]
fn suites_pass_on_the_battery() {
    let m = battery_metrics();
    let g = battery_groups();
    assert_pass(sigma_involution(&m));
    assert_pass(alt_form_bijection(&g));
    assert_pass(coboundary_random(&g, 50, 1));
    assert_pass(nu_vs_bruteforce(&m, 4));
    assert_pass(nu_representative_independence(&m, 2, 1));
    assert_pass(gauss_soundness(&m));
    assert_pass(e_group_checks(&m));
    assert_pass(tambara_agreement(&battery()));
    assert_pass(group_theoreticity(&m, 5, 16, 1));
}
