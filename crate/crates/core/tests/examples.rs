macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(numpoly_example, "numpoly.rs");
example!(hopf_example, "hopf.rs");
example!(modl_example, "modl.rs");
example!(cobar_example, "cobar.rs");
example!(fgl_example, "fgl.rs");
example!(telescope_example, "telescope.rs");
example!(verify_example, "verify.rs");

#[test]
fn numpoly_example_runs() {
    numpoly_example::run_example().expect("numpoly example should run");
}

#[test]
fn hopf_example_runs() {
    hopf_example::run_example().expect("hopf example should run");
}

#[test]
fn modl_example_runs() {
    modl_example::run_example().expect("modl example should run");
}

#[test]
fn cobar_example_runs() {
    cobar_example::run_example().expect("cobar example should run");
}

#[test]
fn fgl_example_runs() {
    fgl_example::run_example().expect("fgl example should run");
}

#[test]
fn telescope_example_runs() {
    telescope_example::run_example().expect("telescope example should run");
}

#[test]
fn verify_example_runs() {
    verify_example::run_example().expect("verify example should run");
}
