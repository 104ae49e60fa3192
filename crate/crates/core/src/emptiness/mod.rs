//! Emptiness checking for single-letter ω-automata with Emerson-Lei acceptance.
//!
//! Every checker reduces to finding *good components*: nonempty, strongly connected
//! transition sets whose color union satisfies the acceptance formula. A state is
//! nonempty iff it reaches a good component.

mod classify;
pub mod scc;

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

pub use classify::{as_rabin, as_streett, classify, AcceptanceClass, RabinPair, StreettPair};

use crate::game::{ColorSet, ElFormula};

/// Subset enumeration in the generic checker is exponential in this many colors.
pub const GENERIC_COLOR_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmptinessError {
    #[error("acceptance formula is not of the {0} class")]
    ClassMismatch(&'static str),
    #[error("generic emptiness supports at most {GENERIC_COLOR_LIMIT} colors, formula uses {0}")]
    ColorBudget(usize),
    #[error("state {0} has no accepting run")]
    EmptyState(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElAutomaton {
    states: usize,
    transitions: Vec<(usize, usize, ColorSet)>,
    acceptance: ElFormula,
    initial: Option<usize>,
}

/// Accepting run as transition indices: `stem` then `cycle` repeated forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptingLasso {
    pub stem: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl AcceptingLasso {
    /// Source states of the stem and loop transitions.
    pub fn states(&self, aut: &ElAutomaton) -> (Vec<usize>, Vec<usize>) {
        let src = |ts: &[usize]| ts.iter().map(|&t| aut.transitions[t].0).collect();
        (src(&self.stem), src(&self.cycle))
    }

    pub fn infinity_set(&self, aut: &ElAutomaton) -> ColorSet {
        self.cycle.iter().fold(ColorSet::EMPTY, |acc, &t| acc.union(aut.transitions[t].2))
    }

    /// Transitions chain up and the loop closes.
    pub fn is_well_formed(&self, aut: &ElAutomaton) -> bool {
        let all: Vec<usize> = self.stem.iter().chain(&self.cycle).copied().collect();
        !self.cycle.is_empty()
            && all.windows(2).all(|w| aut.transitions[w[0]].1 == aut.transitions[w[1]].0)
            && aut.transitions[*self.cycle.last().unwrap()].1 == aut.transitions[self.cycle[0]].0
    }
}

impl ElAutomaton {
    pub fn new(
        states: usize,
        transitions: Vec<(usize, usize, ColorSet)>,
        acceptance: ElFormula,
        initial: Option<usize>,
    ) -> ElAutomaton {
        assert!(transitions.iter().all(|&(s, t, _)| s < states && t < states));
        assert!(initial.is_none_or(|q| q < states));
        ElAutomaton { states, transitions, acceptance, initial }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn transitions(&self) -> &[(usize, usize, ColorSet)] {
        &self.transitions
    }

    pub fn acceptance(&self) -> &ElFormula {
        &self.acceptance
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn with_acceptance(&self, acceptance: ElFormula) -> ElAutomaton {
        ElAutomaton { acceptance, ..self.clone() }
    }

    fn endpoints(&self) -> Vec<(usize, usize)> {
        self.transitions.iter().map(|&(s, t, _)| (s, t)).collect()
    }

    fn union(&self, ids: &[usize]) -> ColorSet {
        ids.iter().fold(ColorSet::EMPTY, |acc, &t| acc.union(self.transitions[t].2))
    }

    fn all_ids(&self) -> Vec<usize> {
        (0..self.transitions.len()).collect()
    }

    /// Debug text form: `states`, optional `initial`, `trans` lines and `acceptance`.
    pub fn to_text(&self, color_names: &[String]) -> String {
        let mut out = String::new();
        writeln!(out, "states: {}", self.states).unwrap();
        if let Some(q) = self.initial {
            writeln!(out, "initial: {q}").unwrap();
        }
        for &(s, t, cs) in &self.transitions {
            let names: Vec<&str> = cs.iter().map(|c| color_names[c.0].as_str()).collect();
            writeln!(out, "trans {s} {t} {{{}}}", names.join(",")).unwrap();
        }
        writeln!(out, "acceptance: {}", self.acceptance.display(color_names)).unwrap();
        out
    }

    // --- good components per class ---

    fn good_generic(&self) -> Result<Vec<Vec<usize>>, EmptinessError> {
        let relevant = self.acceptance.colors();
        if relevant.len() > GENERIC_COLOR_LIMIT {
            return Err(EmptinessError::ColorBudget(relevant.len()));
        }
        let edges = self.endpoints();
        let mut good = Vec::new();
        for comp in scc::components(self.states, &edges, &self.all_ids()) {
            let u = self.union(&comp.transitions).intersection(relevant);
            for target in u.subsets() {
                if !self.acceptance.eval(target) {
                    continue;
                }
                let inside: Vec<usize> = comp
                    .transitions
                    .iter()
                    .copied()
                    .filter(|&t| self.transitions[t].2.intersection(relevant).is_subset(target))
                    .collect();
                for sub in scc::components(self.states, &edges, &inside) {
                    if self.union(&sub.transitions).intersection(relevant) == target {
                        good.push(sub.transitions);
                    }
                }
            }
        }
        Ok(good)
    }

    fn good_rabin(&self, pairs: &[RabinPair]) -> Vec<Vec<usize>> {
        let edges = self.endpoints();
        let mut good = Vec::new();
        for pair in pairs {
            let ids: Vec<usize> = (0..self.transitions.len())
                .filter(|&t| !self.transitions[t].2.intersects(pair.fin))
                .collect();
            for comp in scc::components(self.states, &edges, &ids) {
                if pair.inf.is_subset(self.union(&comp.transitions)) {
                    good.push(comp.transitions);
                }
            }
        }
        good
    }

    fn good_streett(&self, pairs: &[StreettPair]) -> Vec<Vec<usize>> {
        let edges = self.endpoints();
        let mut good = Vec::new();
        let mut work = vec![self.all_ids()];
        while let Some(ids) = work.pop() {
            for comp in scc::components(self.states, &edges, &ids) {
                let u = self.union(&comp.transitions);
                let mut remove = ColorSet::EMPTY;
                let mut hopeless = false;
                for p in pairs.iter().filter(|p| !p.holds(u)) {
                    match p.req {
                        Some(r) => remove = remove.union(r),
                        None => hopeless = true,
                    }
                }
                if hopeless {
                    continue;
                }
                if remove.is_empty() {
                    good.push(comp.transitions);
                } else {
                    let rest: Vec<usize> = comp
                        .transitions
                        .into_iter()
                        .filter(|&t| !self.transitions[t].2.intersects(remove))
                        .collect();
                    work.push(rest);
                }
            }
        }
        good
    }

    fn good_rabin_streett(&self, rabin: &[RabinPair], streett: &[StreettPair]) -> Vec<Vec<usize>> {
        let mut good = Vec::new();
        for pair in rabin {
            let mut pairs = streett.to_vec();
            pairs.push(StreettPair { req: Some(pair.fin), resp: ColorSet::EMPTY });
            for c in pair.inf.iter() {
                pairs.push(StreettPair { req: None, resp: ColorSet::singleton(c) });
            }
            good.extend(self.good_streett(&pairs));
        }
        good
    }

    fn good_components(&self) -> Result<Vec<Vec<usize>>, EmptinessError> {
        Ok(match classify(&self.acceptance) {
            AcceptanceClass::Constant(false) => Vec::new(),
            AcceptanceClass::Constant(true) => self.good_rabin(&[RabinPair {
                fin: ColorSet::EMPTY,
                inf: ColorSet::EMPTY,
            }]),
            AcceptanceClass::GenBuchi(req) => {
                self.good_rabin(&[RabinPair { fin: ColorSet::EMPTY, inf: req }])
            }
            AcceptanceClass::Streett(pairs) => self.good_streett(&pairs),
            AcceptanceClass::Rabin(pairs) => self.good_rabin(&pairs),
            AcceptanceClass::RabinStreett(r, s) => self.good_rabin_streett(&r, &s),
            AcceptanceClass::Generic => self.good_generic()?,
        })
    }

    fn region(&self, good: &[Vec<usize>]) -> Vec<bool> {
        let mut mark = vec![false; self.states];
        let mut queue = VecDeque::new();
        for &t in good.iter().flatten() {
            let s = self.transitions[t].0;
            if !mark[s] {
                mark[s] = true;
                queue.push_back(s);
            }
        }
        let mut pred = vec![Vec::new(); self.states];
        for &(s, t, _) in &self.transitions {
            pred[t].push(s);
        }
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !mark[p] {
                    mark[p] = true;
                    queue.push_back(p);
                }
            }
        }
        mark
    }

    /// States with an accepting run, using the checker for the formula's class.
    pub fn nonempty_states(&self) -> Result<Vec<bool>, EmptinessError> {
        Ok(self.region(&self.good_components()?))
    }

    /// Region computed by the class-independent subset enumeration.
    pub fn nonempty_states_generic(&self) -> Result<Vec<bool>, EmptinessError> {
        Ok(self.region(&self.good_generic()?))
    }

    /// Whether the initial state (or, without one, any state) has an accepting run.
    pub fn is_empty(&self) -> Result<bool, EmptinessError> {
        let region = self.nonempty_states()?;
        Ok(self.query_empty(&region))
    }

    fn query_empty(&self, region: &[bool]) -> bool {
        match self.initial {
            Some(q) => !region[q],
            None => !region.iter().any(|&b| b),
        }
    }

    pub fn is_empty_generic(&self) -> Result<bool, EmptinessError> {
        Ok(self.query_empty(&self.nonempty_states_generic()?))
    }

    pub fn is_empty_gen_buchi(&self) -> Result<bool, EmptinessError> {
        match classify(&self.acceptance) {
            AcceptanceClass::GenBuchi(req) => {
                let good = self.good_rabin(&[RabinPair { fin: ColorSet::EMPTY, inf: req }]);
                Ok(self.query_empty(&self.region(&good)))
            }
            _ => Err(EmptinessError::ClassMismatch("generalized Büchi")),
        }
    }

    pub fn is_empty_rabin(&self) -> Result<bool, EmptinessError> {
        let pairs = as_rabin(&self.acceptance).ok_or(EmptinessError::ClassMismatch("Rabin"))?;
        Ok(self.query_empty(&self.region(&self.good_rabin(&pairs))))
    }

    pub fn is_empty_streett(&self) -> Result<bool, EmptinessError> {
        let pairs = as_streett(&self.acceptance).ok_or(EmptinessError::ClassMismatch("Streett"))?;
        Ok(self.query_empty(&self.region(&self.good_streett(&pairs))))
    }

    /// Emptiness of `Rabin(rabin) ∧ Streett(streett)`, ignoring the stored acceptance.
    /// Each Rabin pair contributes one Streett check with the pair's conditions added.
    pub fn is_empty_rabin_and_streett(&self, rabin: &[RabinPair], streett: &[StreettPair]) -> bool {
        self.query_empty(&self.region(&self.good_rabin_streett(rabin, streett)))
    }

    /// An accepting lasso from `state`: shortest stem into a good component, then a loop
    /// inside it that collects every color of the component.
    pub fn witness_lasso(&self, state: usize) -> Result<AcceptingLasso, EmptinessError> {
        let good = self.good_components()?;
        self.witness_in(state, &good)
    }

    fn witness_in(&self, state: usize, good: &[Vec<usize>]) -> Result<AcceptingLasso, EmptinessError> {
        let mut target = vec![None; self.states];
        for (i, comp) in good.iter().enumerate() {
            for &t in comp {
                let s = self.transitions[t].0;
                target[s].get_or_insert(i);
            }
        }
        let all = self.all_ids();
        let (stem, end) = self
            .shortest_path(state, &all, |q| target[q].is_some())
            .ok_or(EmptinessError::EmptyState(state))?;
        let comp = &good[target[end].unwrap()];
        let cycle = self.covering_cycle(end, comp);
        let lasso = AcceptingLasso { stem, cycle };
        debug_assert!(lasso.is_well_formed(self));
        debug_assert!(self.acceptance.eval(lasso.infinity_set(self)));
        Ok(lasso)
    }

    /// Cycle from `start` through `comp` (strongly connected) seeing all its colors.
    pub(crate) fn covering_cycle(&self, start: usize, comp: &[usize]) -> Vec<usize> {
        let colors = self.union(comp);
        let mut cycle = Vec::new();
        let mut cur = start;
        for c in colors.iter() {
            let (path, end) = self
                .shortest_path_via(cur, comp, |t| self.transitions[t].2.contains(c))
                .expect("component is strongly connected");
            cycle.extend(path);
            cur = end;
        }
        if cur != start || cycle.is_empty() {
            let (path, _) = self
                .shortest_path_via(cur, comp, |t| self.transitions[t].1 == start)
                .expect("component is strongly connected");
            cycle.extend(path);
        }
        cycle
    }

    /// BFS over `ids` from `from` to the nearest state satisfying `goal` (possibly `from`).
    fn shortest_path(
        &self,
        from: usize,
        ids: &[usize],
        goal: impl Fn(usize) -> bool,
    ) -> Option<(Vec<usize>, usize)> {
        let (parent, order) = self.bfs(from, ids);
        let end = order.into_iter().find(|&q| goal(q))?;
        Some((Self::unwind(&parent, &self.transitions, from, end), end))
    }

    /// Shortest nonempty path over `ids` from `from` whose last transition satisfies `last`.
    fn shortest_path_via(
        &self,
        from: usize,
        ids: &[usize],
        last: impl Fn(usize) -> bool,
    ) -> Option<(Vec<usize>, usize)> {
        let (parent, order) = self.bfs(from, ids);
        let mut dist = vec![usize::MAX; self.states];
        dist[from] = 0;
        for &q in &order[1..] {
            dist[q] = dist[self.transitions[parent[q].unwrap()].0] + 1;
        }
        let best = ids
            .iter()
            .copied()
            .filter(|&t| last(t) && dist[self.transitions[t].0] != usize::MAX)
            .min_by_key(|&t| {
                let (s, d, _) = self.transitions[t];
                (dist[s], d, s, t)
            })?;
        let mut path = Self::unwind(&parent, &self.transitions, from, self.transitions[best].0);
        path.push(best);
        Some((path, self.transitions[best].1))
    }

    fn bfs(&self, from: usize, ids: &[usize]) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.states];
        for &t in ids {
            adj[self.transitions[t].0].push(t);
        }
        let mut parent = vec![None; self.states];
        let mut seen = vec![false; self.states];
        seen[from] = true;
        let mut order = vec![from];
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            for &t in &adj[q] {
                let w = self.transitions[t].1;
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(t);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        (parent, order)
    }

    fn unwind(
        parent: &[Option<usize>],
        transitions: &[(usize, usize, ColorSet)],
        from: usize,
        to: usize,
    ) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let t = parent[cur].unwrap();
            path.push(t);
            cur = transitions[t].0;
        }
        path.reverse();
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color;

    const A: Color = Color(0);
    const B: Color = Color(1);
    const C: Color = Color(2);

    fn set(cs: &[Color]) -> ColorSet {
        cs.iter().copied().collect()
    }

    #[test]
    fn single_state() {
        let inf = ElAutomaton::new(1, vec![(0, 0, set(&[A]))], ElFormula::Inf(A), None);
        assert_eq!(inf.nonempty_states().unwrap(), vec![true]);
        let lasso = inf.witness_lasso(0).unwrap();
        assert_eq!((lasso.stem.len(), lasso.cycle.len()), (0, 1));
        let fin = inf.with_acceptance(ElFormula::Fin(A));
        assert_eq!(fin.nonempty_states().unwrap(), vec![false]);
        assert_eq!(fin.witness_lasso(0), Err(EmptinessError::EmptyState(0)));
    }

    #[test]
    fn streett_and_rabin_basics() {
        // two states, cycle seeing only a
        let trans = vec![(0, 1, set(&[A])), (1, 0, ColorSet::EMPTY)];
        let streett = ElAutomaton::new(2, trans.clone(), ElFormula::streett(&[(A, B)]).unwrap(), None);
        assert!(streett.is_empty_streett().unwrap());
        let trans = vec![(0, 1, set(&[B])), (1, 0, ColorSet::EMPTY)];
        let rabin = ElAutomaton::new(2, trans, ElFormula::rabin(&[(A, B)]).unwrap(), None);
        assert!(!rabin.is_empty_rabin().unwrap());
        let two = rabin.with_acceptance(ElFormula::rabin(&[(A, B), (B, C)]).unwrap());
        assert_eq!(two.is_empty_streett(), Err(EmptinessError::ClassMismatch("Streett")));
    }

    #[test]
    fn rabin_and_streett() {
        let aut = ElAutomaton::new(1, vec![(0, 0, set(&[B]))], ElFormula::True, None);
        assert!(aut.is_empty_rabin_and_streett(&[], &[]));
        let rabin = [RabinPair { fin: ColorSet::EMPTY, inf: set(&[B]) }];
        let streett = [StreettPair { req: Some(set(&[A])), resp: set(&[C]) }];
        assert!(!aut.is_empty_rabin_and_streett(&rabin, &streett));
    }

    #[test]
    fn generic_basics() {
        let aut = ElAutomaton::new(
            2,
            vec![(0, 1, set(&[A])), (1, 0, ColorSet::EMPTY), (1, 1, ColorSet::EMPTY)],
            ElFormula::and(ElFormula::Inf(A), ElFormula::Fin(A)),
            None,
        );
        assert!(aut.is_empty_generic().unwrap());
        assert!(!aut.with_acceptance(ElFormula::True).is_empty_generic().unwrap());
        // Fin a is realizable on the self-loop at 1
        assert_eq!(
            aut.with_acceptance(ElFormula::Fin(A)).nonempty_states_generic().unwrap(),
            vec![true, true]
        );
    }

    #[test]
    fn deadlocks_are_empty() {
        let aut = ElAutomaton::new(2, vec![(0, 1, ColorSet::EMPTY)], ElFormula::True, Some(0));
        assert!(aut.is_empty().unwrap());
    }
}
