//! Every example runs and prints what it claims.

#[path = "../examples/attractor.rs"]
mod attractor;
#[path = "../examples/certificates.rs"]
mod certificates;
#[path = "../examples/counterexample.rs"]
mod counterexample;
#[path = "../examples/emptiness.rs"]
mod emptiness;
#[path = "../examples/oracles.rs"]
mod oracles;
#[path = "../examples/paritize.rs"]
mod paritize;
#[path = "../examples/random_games.rs"]
mod random_games;
#[path = "../examples/solve_fixture.rs"]
mod solve_fixture;
#[path = "../examples/strategy.rs"]
mod strategy;

#[test]
fn examples_run() {
    let out = solve_fixture::run();
    assert!(out.contains("ex1: exists wins at v1 v2 v3 v4 v5"));
    assert!(out.contains("ex1-dashed: exists wins at v1 v2 v3 v4 v5"));

    let out = certificates::run();
    assert!(out.contains("valid: false") && out.contains("extracted x y y z z ~ y z z y z  valid: true"));

    let out = strategy::run();
    assert!(out.contains("strong: true, gracious: true") && out.contains("round trip exact: true"));

    let out = counterexample::run();
    assert!(out.contains("ex1: strong true gracious true"));
    assert!(out.contains("ex1-dashed: strong false"));

    assert!(!oracles::run().contains("DISAGREE"));
    assert!(emptiness::run().contains("Inf a & Fin a  as Streett   empty true (generic true)"));
    assert!(paritize::run().contains("same winners for every permutation"));
    assert!(random_games::run().contains("parses back to the same game: true"));
    assert!(attractor::run().contains("target everything: 120 of 120"));
    assert!(cli::run().contains("(exit 2)"));
}
