//! Positive Boolean formulas over `Inf c` / `Fin c` atoms.

use std::fmt;

use thiserror::Error;

use super::color::{Color, ColorSet};

/// Emerson-Lei acceptance formula. There is no negation node; use [`ElFormula::negate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElFormula {
    True,
    False,
    Inf(Color),
    Fin(Color),
    And(Box<ElFormula>, Box<ElFormula>),
    Or(Box<ElFormula>, Box<ElFormula>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{0}: empty input")]
    EmptyInput(&'static str),
}

impl ElFormula {
    pub fn and(a: ElFormula, b: ElFormula) -> ElFormula {
        ElFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: ElFormula, b: ElFormula) -> ElFormula {
        ElFormula::Or(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction; `True` for an empty iterator.
    pub fn all(parts: impl IntoIterator<Item = ElFormula>) -> ElFormula {
        parts.into_iter().reduce(ElFormula::and).unwrap_or(ElFormula::True)
    }

    /// Left-nested disjunction; `False` for an empty iterator.
    pub fn any(parts: impl IntoIterator<Item = ElFormula>) -> ElFormula {
        parts.into_iter().reduce(ElFormula::or).unwrap_or(ElFormula::False)
    }

    /// Evaluates the formula on the set of colors seen infinitely often.
    pub fn eval(&self, inf: ColorSet) -> bool {
        match self {
            ElFormula::True => true,
            ElFormula::False => false,
            ElFormula::Inf(c) => inf.contains(*c),
            ElFormula::Fin(c) => !inf.contains(*c),
            ElFormula::And(a, b) => a.eval(inf) && b.eval(inf),
            ElFormula::Or(a, b) => a.eval(inf) || b.eval(inf),
        }
    }

    /// Colors mentioned by some atom.
    pub fn colors(&self) -> ColorSet {
        match self {
            ElFormula::True | ElFormula::False => ColorSet::EMPTY,
            ElFormula::Inf(c) | ElFormula::Fin(c) => ColorSet::singleton(*c),
            ElFormula::And(a, b) | ElFormula::Or(a, b) => a.colors().union(b.colors()),
        }
    }

    /// Dual formula: swaps Inf/Fin, And/Or and True/False.
    pub fn negate(&self) -> ElFormula {
        match self {
            ElFormula::True => ElFormula::False,
            ElFormula::False => ElFormula::True,
            ElFormula::Inf(c) => ElFormula::Fin(*c),
            ElFormula::Fin(c) => ElFormula::Inf(*c),
            ElFormula::And(a, b) => ElFormula::or(a.negate(), b.negate()),
            ElFormula::Or(a, b) => ElFormula::and(a.negate(), b.negate()),
        }
    }

    /// Removes `True`/`False` constants where they can be absorbed.
    pub fn simplify(&self) -> ElFormula {
        match self {
            ElFormula::And(a, b) => match (a.simplify(), b.simplify()) {
                (ElFormula::False, _) | (_, ElFormula::False) => ElFormula::False,
                (ElFormula::True, x) | (x, ElFormula::True) => x,
                (x, y) => ElFormula::and(x, y),
            },
            ElFormula::Or(a, b) => match (a.simplify(), b.simplify()) {
                (ElFormula::True, _) | (_, ElFormula::True) => ElFormula::True,
                (ElFormula::False, x) | (x, ElFormula::False) => x,
                (x, y) => ElFormula::or(x, y),
            },
            other => other.clone(),
        }
    }

    /// Maps every color through `f`.
    pub fn map_colors(&self, f: &impl Fn(Color) -> Color) -> ElFormula {
        match self {
            ElFormula::True => ElFormula::True,
            ElFormula::False => ElFormula::False,
            ElFormula::Inf(c) => ElFormula::Inf(f(*c)),
            ElFormula::Fin(c) => ElFormula::Fin(f(*c)),
            ElFormula::And(a, b) => ElFormula::and(a.map_colors(f), b.map_colors(f)),
            ElFormula::Or(a, b) => ElFormula::or(a.map_colors(f), b.map_colors(f)),
        }
    }

    /// Renders the formula in the `.oblige` syntax using the given color names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> FormulaDisplay<'a> {
        FormulaDisplay { formula: self, names }
    }

    // --- standard acceptance classes ---

    pub fn buchi(c: Color) -> ElFormula {
        ElFormula::Inf(c)
    }

    pub fn gen_buchi(colors: &[Color]) -> Result<ElFormula, FormulaError> {
        if colors.is_empty() {
            return Err(FormulaError::EmptyInput("generalized Büchi"));
        }
        Ok(ElFormula::all(colors.iter().map(|&c| ElFormula::Inf(c))))
    }

    /// Conjunction of `Fin request | Inf response` over the pairs.
    pub fn streett(pairs: &[(Color, Color)]) -> Result<ElFormula, FormulaError> {
        if pairs.is_empty() {
            return Err(FormulaError::EmptyInput("Streett"));
        }
        Ok(ElFormula::all(
            pairs.iter().map(|&(r, g)| ElFormula::or(ElFormula::Fin(r), ElFormula::Inf(g))),
        ))
    }

    /// Disjunction of `Fin e & Inf f` over the pairs.
    pub fn rabin(pairs: &[(Color, Color)]) -> Result<ElFormula, FormulaError> {
        if pairs.is_empty() {
            return Err(FormulaError::EmptyInput("Rabin"));
        }
        Ok(ElFormula::any(
            pairs.iter().map(|&(e, f)| ElFormula::and(ElFormula::Fin(e), ElFormula::Inf(f))),
        ))
    }

    /// Max-parity over `priorities[0..]`: the highest index seen infinitely often is even.
    pub fn parity(priorities: &[Color]) -> Result<ElFormula, FormulaError> {
        if priorities.is_empty() {
            return Err(FormulaError::EmptyInput("parity"));
        }
        Ok(ElFormula::any(priorities.iter().enumerate().step_by(2).map(|(i, &p)| {
            ElFormula::all(
                std::iter::once(ElFormula::Inf(p))
                    .chain(priorities[i + 1..].iter().map(|&q| ElFormula::Fin(q))),
            )
        })))
    }

    /// `(Fin r_1 | .. | Fin r_n) | (Inf g_1 & .. & Inf g_m)`.
    pub fn gr1(requests: &[Color], grants: &[Color]) -> Result<ElFormula, FormulaError> {
        if requests.is_empty() || grants.is_empty() {
            return Err(FormulaError::EmptyInput("GR[1]"));
        }
        Ok(ElFormula::or(
            ElFormula::any(requests.iter().map(|&r| ElFormula::Fin(r))),
            ElFormula::all(grants.iter().map(|&g| ElFormula::Inf(g))),
        ))
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a ElFormula,
    names: &'a [String],
}

impl FormulaDisplay<'_> {
    fn name(&self, c: Color) -> String {
        self.names.get(c.0).cloned().unwrap_or_else(|| format!("#{}", c.0))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, phi: &ElFormula) -> fmt::Result {
        match phi {
            ElFormula::True => write!(f, "true"),
            ElFormula::False => write!(f, "false"),
            ElFormula::Inf(c) => write!(f, "Inf({})", self.name(*c)),
            ElFormula::Fin(c) => write!(f, "Fin({})", self.name(*c)),
            ElFormula::And(a, b) => {
                self.write_operand(f, a, |x| matches!(x, ElFormula::Or(..)))?;
                write!(f, " & ")?;
                self.write_operand(f, b, |x| matches!(x, ElFormula::Or(..) | ElFormula::And(..)))
            }
            ElFormula::Or(a, b) => {
                self.write(f, a)?;
                write!(f, " | ")?;
                self.write_operand(f, b, |x| matches!(x, ElFormula::Or(..)))
            }
        }
    }

    fn write_operand(
        &self,
        f: &mut fmt::Formatter<'_>,
        phi: &ElFormula,
        needs_parens: impl Fn(&ElFormula) -> bool,
    ) -> fmt::Result {
        if needs_parens(phi) {
            write!(f, "(")?;
            self.write(f, phi)?;
            write!(f, ")")
        } else {
            self.write(f, phi)
        }
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.formula)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Color = Color(0);
    const B: Color = Color(1);
    const C: Color = Color(2);
    const D: Color = Color(3);

    fn set(cs: &[Color]) -> ColorSet {
        cs.iter().copied().collect()
    }

    fn ex1_strong() -> ElFormula {
        ElFormula::streett(&[(A, B), (C, D)]).unwrap()
    }

    #[test]
    fn atoms() {
        assert!(ElFormula::Inf(A).eval(set(&[A])));
        assert!(!ElFormula::Fin(A).eval(set(&[A])));
        assert!(ElFormula::Fin(A).eval(ColorSet::EMPTY));
    }

    #[test]
    fn ex1_objectives() {
        let weak = ElFormula::gen_buchi(&[A, C]).unwrap();
        assert!(ex1_strong().eval(set(&[A, B, D])));
        assert!(!weak.eval(set(&[A, B, D])));
        assert!(weak.eval(set(&[A, B, C, D])));
    }

    #[test]
    fn negate_examples() {
        assert_eq!(ElFormula::Inf(A).negate(), ElFormula::Fin(A));
        let f = ElFormula::or(ElFormula::Fin(A), ElFormula::Inf(B));
        assert_eq!(f.negate(), ElFormula::and(ElFormula::Inf(A), ElFormula::Fin(B)));
        assert_eq!(ex1_strong().negate().negate(), ex1_strong());
    }

    #[test]
    fn negate_complements_on_all_subsets() {
        let f = ElFormula::or(ex1_strong(), ElFormula::and(ElFormula::Inf(C), ElFormula::True));
        for s in ColorSet::full(4).subsets() {
            assert_eq!(f.negate().eval(s), !f.eval(s));
        }
    }

    #[test]
    fn parity_shape() {
        let phi = ElFormula::parity(&[A, B, C]).unwrap();
        let expected = ElFormula::or(
            ElFormula::and(ElFormula::and(ElFormula::Inf(A), ElFormula::Fin(B)), ElFormula::Fin(C)),
            ElFormula::Inf(C),
        );
        assert_eq!(phi, expected);
        // maximal priority seen decides
        assert!(phi.eval(set(&[A, C])));
        assert!(!phi.eval(set(&[A, B])));
        assert!(!phi.eval(ColorSet::EMPTY));
    }

    #[test]
    fn class_constructors_reject_empty() {
        assert!(ElFormula::streett(&[]).is_err());
        assert!(ElFormula::rabin(&[]).is_err());
        assert!(ElFormula::gen_buchi(&[]).is_err());
        assert!(ElFormula::parity(&[]).is_err());
        assert!(ElFormula::gr1(&[A], &[]).is_err());
    }

    #[test]
    fn gr1_shape() {
        let phi = ElFormula::gr1(&[A, B], &[C]).unwrap();
        assert!(phi.eval(set(&[A])));
        assert!(!phi.eval(set(&[A, B])));
        assert!(phi.eval(set(&[A, B, C])));
    }

    #[test]
    fn inf_only_monotone_fin_only_antitone() {
        let inf_only = ElFormula::or(ElFormula::and(ElFormula::Inf(A), ElFormula::Inf(B)), ElFormula::Inf(C));
        let fin_only = inf_only.negate();
        let all = ColorSet::full(6);
        for s in all.subsets() {
            for t in s.subsets() {
                if inf_only.eval(t) {
                    assert!(inf_only.eval(s));
                }
                if fin_only.eval(s) {
                    assert!(fin_only.eval(t));
                }
            }
        }
    }

    #[test]
    fn display_round_trip_shape() {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            ex1_strong().display(&names).to_string(),
            "(Fin(a) | Inf(b)) & (Fin(c) | Inf(d))"
        );
        let right = ElFormula::or(ElFormula::Inf(A), ElFormula::or(ElFormula::Inf(B), ElFormula::True));
        assert_eq!(right.display(&names).to_string(), "Inf(a) | (Inf(b) | true)");
    }
}
