//! Every program under `examples/` must run to completion.

macro_rules! example_test {
    ($name:ident, $file:literal) => {
        mod $name {
            #![allow(dead_code)]
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example_test!(algebra_basics, "algebra_basics.rs");
example_test!(sequence_terms, "sequence_terms.rs");
example_test!(closed_form_sums, "closed_form_sums.rs");
example_test!(verify_identities, "verify_identities.rs");
example_test!(cassini_example, "cassini_example.rs");
example_test!(export_report, "export_report.rs");
example_test!(printed_deviations, "printed_deviations.rs");

#[test]
fn algebra_basics_runs() {
    algebra_basics::run_example().expect("algebra_basics");
}

#[test]
fn sequence_terms_runs() {
    sequence_terms::run_example().expect("sequence_terms");
}

#[test]
fn closed_form_sums_runs() {
    closed_form_sums::run_example().expect("closed_form_sums");
}

#[test]
fn verify_identities_runs() {
    verify_identities::run_example().expect("verify_identities");
}

#[test]
fn cassini_example_runs() {
    cassini_example::run_example().expect("cassini_example");
}

#[test]
fn export_report_runs() {
    export_report::run_example().expect("export_report");
}

#[test]
fn printed_deviations_runs() {
    printed_deviations::run_example().expect("printed_deviations");
}
