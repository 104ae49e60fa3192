//! The nested fixpoint over per-priority target sets.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use log::{debug, trace};

use super::attractor::Attractor;
use super::{SolveError, SolveOptions};
use crate::certificate::{extract_certificate, Certificate};
use crate::emptiness::ElAutomaton;
use crate::game::{ElFormula, ObligingGame};
use crate::lar::Permutation;

type Env = Rc<Vec<FixedBitSet>>;

/// Outcome of [`solve`].
#[derive(Clone, Debug)]
pub struct SolveResult {
    /// `region[v]` holds iff ∃ wins `v` graciously.
    pub region: Vec<bool>,
    pub permutations: Vec<Permutation>,
    /// Won real nodes `(v, permutation index)` with the certificate ∃ plays there.
    pub certificates: BTreeMap<(usize, usize), Certificate>,
    /// Keys of the certificates that went through the certificate extractor.
    pub extracted: BTreeSet<(usize, usize)>,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub real_nodes: usize,
    pub won_real_nodes: usize,
    pub attractor_calls: u64,
    /// Iterations per fixpoint variable, indexed by priority.
    pub iterations: Vec<u64>,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn wins(&self, v: usize) -> bool {
        self.region[v]
    }

    pub fn winning_nodes(&self) -> Vec<usize> {
        (0..self.region.len()).filter(|&v| self.region[v]).collect()
    }

    pub fn wins_real(&self, v: usize, perm: usize) -> bool {
        self.certificates.contains_key(&(v, perm))
    }

    pub fn certificate(&self, v: usize, perm: usize) -> Option<&Certificate> {
        self.certificates.get(&(v, perm))
    }
}

struct Fixpoint<'a, 'g> {
    attr: &'a Attractor<'g>,
    vals: Vec<FixedBitSet>,
    used: Vec<bool>,
    iterations: Vec<u64>,
}

impl Fixpoint<'_, '_> {
    /// Solves variables `0..count` for the current values of the outer ones. Returns
    /// the value and, per real node, the environment of its earliest committed win.
    fn level(&mut self, count: usize) -> Result<(FixedBitSet, Vec<Option<Env>>), SolveError> {
        if count == 0 {
            let res = self.attr.attract(&self.vals)?;
            let env: Env = Rc::new(self.vals.clone());
            let mut buf = vec![None; self.attr.real_nodes()];
            for r in res.ones() {
                buf[r] = Some(env.clone());
            }
            return Ok((res, buf));
        }
        let var = count - 1;
        if !self.used[var] {
            return self.level(var);
        }
        let greatest = var.is_multiple_of(2);
        let mut cur = FixedBitSet::with_capacity(self.attr.real_nodes());
        if greatest {
            cur.insert_range(..);
        }
        let mut committed: Vec<Option<Env>> = vec![None; self.attr.real_nodes()];
        loop {
            self.vals[var] = cur.clone();
            self.iterations[var] += 1;
            let (res, buf) = self.level(var)?;
            trace!("X{var}: {} -> {}", cur.count_ones(..), res.count_ones(..));
            if greatest {
                // only the stable iteration counts for a greatest fixpoint
                committed = buf;
            } else {
                for (slot, rec) in committed.iter_mut().zip(buf) {
                    if slot.is_none() {
                        *slot = rec;
                    }
                }
            }
            if res == cur {
                return Ok((res, committed));
            }
            cur = res;
        }
    }
}

/// Computes the gracious winning region of `game` with a certificate for every won
/// real node.
pub fn solve(game: &ObligingGame, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let perms = (1..=game.d()).product::<usize>();
    if perms > opts.max_perms {
        return Err(SolveError::TooManyPermutations { d: game.d(), perms, limit: opts.max_perms });
    }
    let attr = Attractor::new(game);
    let table = attr.table();
    let prios = attr.priorities();
    let mut used = vec![false; prios];
    for i in 0..table.len() {
        for p in 0..=game.d() {
            used[table.priority(i, p) as usize] = true;
        }
    }
    let empty = FixedBitSet::with_capacity(attr.real_nodes());
    let mut fp = Fixpoint { attr: &attr, vals: vec![empty; prios], used, iterations: vec![0; prios] };
    let (won, records) = fp.level(prios)?;
    debug!("fixpoint: {} of {} real nodes won", won.count_ones(..), attr.real_nodes());

    let mut certificates = BTreeMap::new();
    let mut extracted = BTreeSet::new();
    for r in won.ones() {
        let (v, perm) = attr.unreal(r);
        let env = records[r].as_ref().ok_or_else(|| SolveError::Internal(format!("no record for real node {r}")))?;
        let raw = attr
            .certificate(v, perm, env)?
            .ok_or_else(|| SolveError::Internal(format!("recorded win of ({v}, {perm}) has no certificate")))?;
        let (cert, via_extractor) = normalize(&attr, raw, perm);
        if via_extractor {
            extracted.insert((v, perm));
        }
        certificates.insert((v, perm), cert);
    }
    check(&attr, &won, &certificates)?;

    let region = (0..game.n()).map(|v| won.contains(attr.real(v, table.initial()))).collect();
    let stats = SolveStats {
        real_nodes: attr.real_nodes(),
        won_real_nodes: won.count_ones(..),
        attractor_calls: attr.calls(),
        iterations: fp.iterations,
        elapsed: start.elapsed(),
    };
    Ok(SolveResult {
        region,
        permutations: (0..table.len()).map(|i| table.get(i).clone()).collect(),
        certificates,
        extracted,
        stats,
    })
}

/// Re-extracts `raw` through the certificate extractor, keeping `raw` if the shorter
/// certificate would open an exit the original does not have or if its loop levels
/// change after the first pass. The flag tells which one was kept.
fn normalize(attr: &Attractor, raw: Certificate, perm: usize) -> (Certificate, bool) {
    let Ok(mut cert) = extract_certificate(&raw.as_lasso(), attr.game()) else {
        return (raw, false);
    };
    // fold only as far as the loop levels stay settled
    while cert.stem.len() > 1 && cert.stem.last() == cert.cycle.last() {
        let mut folded = cert.clone();
        folded.stem.pop();
        folded.cycle.rotate_right(1);
        if !attr.loop_is_settled(&folded, perm) {
            break;
        }
        cert = folded;
    }
    if !attr.loop_is_settled(&cert, perm) {
        return (raw, false);
    }
    let key = |e: &super::Exit| (e.target, e.perm, e.priority);
    let allowed: Vec<_> = attr.certificate_exits(&raw, perm).iter().map(key).collect();
    if attr.certificate_exits(&cert, perm).iter().all(|e| allowed.contains(&key(e))) {
        (cert, true)
    } else {
        (raw, false)
    }
}

/// Every certificate is valid, every exit stays in the winning set, and every winning
/// node has some accepting play.
fn check(attr: &Attractor, won: &FixedBitSet, certs: &BTreeMap<(usize, usize), Certificate>) -> Result<(), SolveError> {
    let game = attr.game();
    for (&(v, perm), cert) in certs {
        if cert.node() != v || !matches!(cert.is_valid(game), Ok(true)) || !attr.loop_is_settled(cert, perm) {
            return Err(SolveError::Internal(format!("invalid certificate for ({v}, {perm})")));
        }
        for e in attr.certificate_exits(cert, perm) {
            if !won.contains(attr.real(e.target, e.perm)) {
                return Err(SolveError::Internal(format!(
                    "certificate for ({v}, {perm}) exits to ({}, {}) outside the winning set",
                    e.target, e.perm
                )));
            }
        }
    }
    let phi = ElFormula::and(game.strong().clone(), game.weak().clone());
    let aut = ElAutomaton::new(game.n(), game.arena().edges().collect(), phi, None);
    let live = aut.nonempty_states()?;
    for r in won.ones() {
        let (v, _) = attr.unreal(r);
        if !live[v] {
            return Err(SolveError::Internal(format!("node {v} is won but has no accepting play")));
        }
    }
    Ok(())
}
