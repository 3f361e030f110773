//! Every example in `examples/` runs to completion.

#[path = "../examples/casimir_operators.rs"]
mod casimir_operators;
#[path = "../examples/deformation_chain.rs"]
mod deformation_chain;
#[path = "../examples/exact_closed_forms.rs"]
mod exact_closed_forms;
#[path = "../examples/fock_equivalence.rs"]
mod fock_equivalence;
#[path = "../examples/inverse_problem.rs"]
mod inverse_problem;
#[path = "../examples/normal_ordering.rs"]
mod normal_ordering;
#[path = "../examples/oscillator_catalog.rs"]
mod oscillator_catalog;
#[path = "../examples/q_derivatives.rs"]
mod q_derivatives;
#[path = "../examples/qcv_quadratic_start.rs"]
mod qcv_quadratic_start;
#[path = "../examples/serialization.rs"]
mod serialization;

#[test]
fn casimir_operators_example_runs() {
    casimir_operators::run_example().expect("casimir operators example should run");
}

#[test]
fn deformation_chain_example_runs() {
    deformation_chain::run_example().expect("deformation chain example should run");
}

#[test]
fn exact_closed_forms_example_runs() {
    exact_closed_forms::run_example().expect("exact closed forms example should run");
}

#[test]
fn fock_equivalence_example_runs() {
    fock_equivalence::run_example().expect("fock equivalence example should run");
}

#[test]
fn inverse_problem_example_runs() {
    inverse_problem::run_example().expect("inverse problem example should run");
}

#[test]
fn normal_ordering_example_runs() {
    normal_ordering::run_example().expect("normal ordering example should run");
}

#[test]
fn oscillator_catalog_example_runs() {
    oscillator_catalog::run_example().expect("oscillator catalog example should run");
}

#[test]
fn q_derivatives_example_runs() {
    q_derivatives::run_example().expect("q derivatives example should run");
}

#[test]
fn qcv_quadratic_start_example_runs() {
    qcv_quadratic_start::run_example().expect("qcv quadratic start example should run");
}

#[test]
fn serialization_example_runs() {
    serialization::run_example().expect("serialization example should run");
}
