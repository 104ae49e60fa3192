//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::io::Write as _;

use oblige::emptiness::{ElAutomaton, RabinPair, StreettPair};
use oblige::game::{Color, ColorSet, ElFormula, ObligingGame};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ids(game: &ObligingGame, names: &str) -> Vec<usize> {
    names.split_whitespace().map(|s| game.arena().node_index(s).unwrap()).collect()
}

pub fn colors(game: &ObligingGame, names: &str) -> ColorSet {
    names.chars().map(|c| game.color_index(&c.to_string()).unwrap()).collect()
}

/// Runs the command line in-process; returns exit code, stdout and stderr.
pub fn oblige(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("oblige").chain(args.iter().copied());
    let code = oblige::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

/// Transition structure of a random automaton: up to 8 states, `colors` colors,
/// deadlocks allowed.
pub fn random_transitions(rng: &mut ChaCha8Rng, colors: usize) -> (usize, Vec<(usize, usize, ColorSet)>) {
    let states = rng.gen_range(1..=8);
    let density = [0.15, 0.3, 0.5][rng.gen_range(0..3)];
    let mut trans = Vec::new();
    for s in 0..states {
        for t in 0..states {
            if rng.gen_bool(density) {
                let cs: ColorSet = (0..colors).map(Color).filter(|_| rng.gen_bool(0.4)).collect();
                trans.push((s, t, cs));
            }
        }
    }
    (states, trans)
}

fn random_set(rng: &mut ChaCha8Rng, colors: usize, min: usize, max: usize) -> ColorSet {
    let mut all: Vec<Color> = (0..colors).map(Color).collect();
    all.shuffle(rng);
    all.truncate(rng.gen_range(min..=max.min(colors)));
    all.into_iter().collect()
}

/// Pairs with at least one `Inf` color when `proper`; otherwise any shape.
pub fn random_rabin_pairs(rng: &mut ChaCha8Rng, colors: usize, count: usize, proper: bool) -> Vec<RabinPair> {
    let min = proper as usize;
    (0..count).map(|_| RabinPair { fin: random_set(rng, colors, 0, 2), inf: random_set(rng, colors, min, 2) }).collect()
}

/// Pairs with a nonempty response (and request, if any) when `proper`.
pub fn random_streett_pairs(rng: &mut ChaCha8Rng, colors: usize, count: usize, proper: bool) -> Vec<StreettPair> {
    let min = proper as usize;
    (0..count)
        .map(|_| {
            let req = if rng.gen_bool(0.2) { None } else { Some(random_set(rng, colors, min, 2)) };
            StreettPair { req, resp: random_set(rng, colors, min, 2) }
        })
        .collect()
}

pub fn rabin_formula(pairs: &[RabinPair]) -> ElFormula {
    ElFormula::any(pairs.iter().map(|p| {
        ElFormula::all(p.fin.iter().map(ElFormula::Fin).chain(p.inf.iter().map(ElFormula::Inf)))
    }))
}

pub fn streett_formula(pairs: &[StreettPair]) -> ElFormula {
    ElFormula::all(pairs.iter().map(|p| {
        let resp = ElFormula::any(p.resp.iter().map(ElFormula::Inf));
        match p.req {
            None => resp,
            Some(r) => ElFormula::or(ElFormula::all(r.iter().map(ElFormula::Fin)), resp),
        }
    }))
}

/// Specialized checker against the generic one on one random automaton per call.
/// `class` is one of `genbuchi`, `rabin`, `streett`, `rabin-streett`.
pub fn emptiness_agrees(class: &str, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = rng.gen_range(1..=4);
    let (states, trans) = random_transitions(&mut rng, colors);
    let initial = rng.gen_bool(0.5).then(|| rng.gen_range(0..states));
    let (specialized, phi) = match class {
        "genbuchi" => {
            let req = random_set(&mut rng, colors, 1, 4);
            let phi = ElFormula::gen_buchi(&req.iter().collect::<Vec<_>>()).unwrap();
            let aut = ElAutomaton::new(states, trans.clone(), phi.clone(), initial);
            (aut.is_empty_gen_buchi().map_err(|e| e.to_string())?, phi)
        }
        "rabin" => {
            let count = rng.gen_range(1..=3);
            let pairs = random_rabin_pairs(&mut rng, colors, count, true);
            let phi = rabin_formula(&pairs);
            let aut = ElAutomaton::new(states, trans.clone(), phi.clone(), initial);
            (aut.is_empty_rabin().map_err(|e| format!("{e}: {phi:?}"))?, phi)
        }
        "streett" => {
            let count = rng.gen_range(1..=3);
            let pairs = random_streett_pairs(&mut rng, colors, count, true);
            let phi = streett_formula(&pairs);
            let aut = ElAutomaton::new(states, trans.clone(), phi.clone(), initial);
            (aut.is_empty_streett().map_err(|e| format!("{e}: {phi:?}"))?, phi)
        }
        "rabin-streett" => {
            let (r, s) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let rabin = random_rabin_pairs(&mut rng, colors, r, false);
            let streett = random_streett_pairs(&mut rng, colors, s, false);
            let phi = ElFormula::and(rabin_formula(&rabin), streett_formula(&streett));
            let aut = ElAutomaton::new(states, trans.clone(), ElFormula::True, initial);
            (aut.is_empty_rabin_and_streett(&rabin, &streett), phi)
        }
        other => panic!("unknown class {other}"),
    };
    let aut = ElAutomaton::new(states, trans, phi, initial);
    let generic = aut.is_empty_generic().map_err(|e| e.to_string())?;
    if specialized != generic {
        return Err(format!("{class} seed {seed}: specialized empty={specialized}, generic empty={generic}"));
    }
    let region = aut.nonempty_states().map_err(|e| e.to_string())?;
    if region != aut.nonempty_states_generic().map_err(|e| e.to_string())? {
        return Err(format!("{class} seed {seed}: nonempty regions differ"));
    }
    Ok(())
}
