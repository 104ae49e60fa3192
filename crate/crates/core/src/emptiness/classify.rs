//! Structural recognition of acceptance classes.

use crate::game::{ColorSet, ElFormula};

/// `Fin` of every color in `fin` and `Inf` of every color in `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RabinPair {
    pub fin: ColorSet,
    pub inf: ColorSet,
}

/// If `req` is seen infinitely often then some color of `resp` is. `req = None` is the
/// always-triggered request, an empty `resp` is the unsatisfiable response.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StreettPair {
    pub req: Option<ColorSet>,
    pub resp: ColorSet,
}

impl RabinPair {
    pub fn holds(&self, inf: ColorSet) -> bool {
        !inf.intersects(self.fin) && self.inf.is_subset(inf)
    }
}

impl StreettPair {
    pub fn holds(&self, inf: ColorSet) -> bool {
        let triggered = self.req.is_none_or(|r| inf.intersects(r));
        !triggered || inf.intersects(self.resp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AcceptanceClass {
    Constant(bool),
    /// Conjunction of `Inf` atoms.
    GenBuchi(ColorSet),
    Streett(Vec<StreettPair>),
    Rabin(Vec<RabinPair>),
    RabinStreett(Vec<RabinPair>, Vec<StreettPair>),
    Generic,
}

fn flatten<'a>(f: &'a ElFormula, conj: bool, out: &mut Vec<&'a ElFormula>) {
    match (f, conj) {
        (ElFormula::And(a, b), true) | (ElFormula::Or(a, b), false) => {
            flatten(a, conj, out);
            flatten(b, conj, out);
        }
        _ => out.push(f),
    }
}

/// A conjunction of `Fin` atoms: the colors that must all be finite.
fn fin_conjunction(f: &ElFormula) -> Option<ColorSet> {
    let mut parts = Vec::new();
    flatten(f, true, &mut parts);
    parts
        .into_iter()
        .map(|p| match p {
            ElFormula::Fin(c) => Some(ColorSet::singleton(*c)),
            _ => None,
        })
        .try_fold(ColorSet::EMPTY, |acc, c| Some(acc.union(c?)))
}

/// A disjunction of `Inf` atoms and at most one conjunction of `Fin` atoms.
fn streett_clause(f: &ElFormula) -> Option<StreettPair> {
    let mut parts = Vec::new();
    flatten(f, false, &mut parts);
    let mut req = None;
    let mut resp = ColorSet::EMPTY;
    for p in parts {
        match p {
            ElFormula::Inf(c) => resp.insert(*c),
            _ if req.is_none() => req = Some(fin_conjunction(p)?),
            _ => return None,
        }
    }
    Some(StreettPair { req, resp })
}

/// A conjunction of atoms.
fn rabin_term(f: &ElFormula) -> Option<RabinPair> {
    let mut parts = Vec::new();
    flatten(f, true, &mut parts);
    let mut pair = RabinPair { fin: ColorSet::EMPTY, inf: ColorSet::EMPTY };
    for p in parts {
        match p {
            ElFormula::Inf(c) => pair.inf.insert(*c),
            ElFormula::Fin(c) => pair.fin.insert(*c),
            _ => return None,
        }
    }
    Some(pair)
}

fn rabin(f: &ElFormula) -> Option<Vec<RabinPair>> {
    let mut parts = Vec::new();
    flatten(f, false, &mut parts);
    parts.into_iter().map(rabin_term).collect()
}

/// The formula as a disjunction of Rabin terms, if it has that shape.
pub fn as_rabin(formula: &ElFormula) -> Option<Vec<RabinPair>> {
    rabin(&formula.simplify())
}

/// The formula as a conjunction of Streett clauses, if it has that shape.
pub fn as_streett(formula: &ElFormula) -> Option<Vec<StreettPair>> {
    let f = formula.simplify();
    let mut conjuncts = Vec::new();
    flatten(&f, true, &mut conjuncts);
    conjuncts.into_iter().map(streett_clause).collect()
}

pub fn classify(formula: &ElFormula) -> AcceptanceClass {
    let f = formula.simplify();
    match f {
        ElFormula::True => return AcceptanceClass::Constant(true),
        ElFormula::False => return AcceptanceClass::Constant(false),
        _ => {}
    }
    let mut conjuncts = Vec::new();
    flatten(&f, true, &mut conjuncts);
    if conjuncts.iter().all(|c| matches!(c, ElFormula::Inf(_))) {
        return AcceptanceClass::GenBuchi(f.colors());
    }
    let clauses: Vec<Option<StreettPair>> = conjuncts.iter().map(|c| streett_clause(c)).collect();
    if clauses.iter().all(Option::is_some) {
        return AcceptanceClass::Streett(clauses.into_iter().flatten().collect());
    }
    if let Some(pairs) = rabin(&f) {
        return AcceptanceClass::Rabin(pairs);
    }
    let odd: Vec<usize> = (0..conjuncts.len()).filter(|&i| clauses[i].is_none()).collect();
    if let [i] = odd[..] {
        if let Some(pairs) = rabin(conjuncts[i]) {
            let streett = clauses.into_iter().flatten().collect();
            return AcceptanceClass::RabinStreett(pairs, streett);
        }
    }
    AcceptanceClass::Generic
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color;

    const A: Color = Color(0);
    const B: Color = Color(1);
    const C: Color = Color(2);
    const D: Color = Color(3);

    fn inf(c: Color) -> ElFormula {
        ElFormula::Inf(c)
    }
    fn fin(c: Color) -> ElFormula {
        ElFormula::Fin(c)
    }

    #[test]
    fn recognizes_classes() {
        assert_eq!(classify(&ElFormula::and(ElFormula::True, ElFormula::True)), AcceptanceClass::Constant(true));
        assert!(matches!(classify(&ElFormula::and(inf(A), inf(C))), AcceptanceClass::GenBuchi(_)));
        assert!(matches!(
            classify(&ElFormula::streett(&[(A, B), (C, D)]).unwrap()),
            AcceptanceClass::Streett(p) if p.len() == 2
        ));
        assert!(matches!(
            classify(&ElFormula::rabin(&[(A, B), (C, D)]).unwrap()),
            AcceptanceClass::Rabin(p) if p.len() == 2
        ));
        let mixed = ElFormula::and(
            ElFormula::rabin(&[(A, B), (C, D)]).unwrap(),
            ElFormula::or(fin(A), inf(C)),
        );
        assert!(matches!(classify(&mixed), AcceptanceClass::RabinStreett(r, s) if r.len() == 2 && s.len() == 1));
        let generic = ElFormula::or(ElFormula::and(fin(A), ElFormula::or(inf(B), fin(C))), inf(D));
        assert_eq!(classify(&generic), AcceptanceClass::Generic);
    }

    #[test]
    fn pairs_agree_with_formula() {
        let f = ElFormula::and(ElFormula::or(fin(A), inf(B)), fin(C));
        let AcceptanceClass::Streett(pairs) = classify(&f) else { panic!() };
        for s in ColorSet::full(4).subsets() {
            assert_eq!(pairs.iter().all(|p| p.holds(s)), f.eval(s));
        }
    }

    #[test]
    fn fin_conjunction_is_one_request() {
        let f = ElFormula::or(ElFormula::and(fin(A), fin(B)), inf(C));
        let AcceptanceClass::Streett(pairs) = classify(&f) else { panic!() };
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].req, Some([A, B].into_iter().collect()));
        for s in ColorSet::full(3).subsets() {
            assert_eq!(pairs[0].holds(s), f.eval(s));
        }
    }
}
