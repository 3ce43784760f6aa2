//! Inference rules over elementary statements, closure, and axiom checking.
//!
//! Every rule is quantified over instances `(i, j, k, L)` with `i, j, k`
//! distinct and `L` a subset of the remaining ground set. Instances are
//! enumerated lexicographically in `(i, j, k, L)` with `L` in bitmask order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{CIStatement, CIStructure};
use crate::error::{Error, Result};
use crate::varset::VarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// `<i:j|L> & <i:k|jL>  <=>  <i:k|L> & <i:j|kL>`
    Semigraphoid,
    /// `<i:j|kL> & <i:k|jL>  =>  <i:j|L> & <i:k|L>`
    Intersection,
    /// `<i:j|L> & <i:k|L>  =>  <i:j|kL> & <i:k|jL>`
    Composition,
    /// `<i:j|L> & <i:j|kL>  =>  <i:k|L> | <j:k|L>`; disjunctive, so never a closure rule.
    WeakTransitivity,
}

impl Rule {
    pub const ALL: [Rule; 4] = [
        Rule::Semigraphoid,
        Rule::Intersection,
        Rule::Composition,
        Rule::WeakTransitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Semigraphoid => "semigraphoid",
            Rule::Intersection => "intersection",
            Rule::Composition => "composition",
            Rule::WeakTransitivity => "weak_transitivity",
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "semigraphoid" => Ok(Rule::Semigraphoid),
            "intersection" => Ok(Rule::Intersection),
            "composition" => Ok(Rule::Composition),
            "weak_transitivity" => Ok(Rule::WeakTransitivity),
            _ => Err(Error::UnknownRule(s.to_string())),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checkable axioms: the basic rules and their conjunctions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Semigraphoid,
    Intersection,
    Composition,
    WeakTransitivity,
    Graphoid,
    CompositionalGraphoid,
    Gaussoid,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Semigraphoid,
        Axiom::Intersection,
        Axiom::Composition,
        Axiom::WeakTransitivity,
        Axiom::Graphoid,
        Axiom::CompositionalGraphoid,
        Axiom::Gaussoid,
    ];

    /// Basic rules making up this axiom, in checking order.
    pub fn rules(self) -> &'static [Rule] {
        match self {
            Axiom::Semigraphoid => &[Rule::Semigraphoid],
            Axiom::Intersection => &[Rule::Intersection],
            Axiom::Composition => &[Rule::Composition],
            Axiom::WeakTransitivity => &[Rule::WeakTransitivity],
            Axiom::Graphoid => &[Rule::Semigraphoid, Rule::Intersection],
            Axiom::CompositionalGraphoid => {
                &[Rule::Semigraphoid, Rule::Intersection, Rule::Composition]
            }
            Axiom::Gaussoid => &[
                Rule::Semigraphoid,
                Rule::Intersection,
                Rule::Composition,
                Rule::WeakTransitivity,
            ],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Semigraphoid => "semigraphoid",
            Axiom::Intersection => "intersection",
            Axiom::Composition => "composition",
            Axiom::WeakTransitivity => "weak_transitivity",
            Axiom::Graphoid => "graphoid",
            Axiom::CompositionalGraphoid => "compositional_graphoid",
            Axiom::Gaussoid => "gaussoid",
        }
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == key)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule instance `(i, j, k, L)`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub cond: VarSet,
}

impl Instance {
    /// Renders as `(i;j,k|L)` using the supplied element labels.
    pub fn render<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let l = |e: usize| labels[e].as_ref().to_string();
        let cond: Vec<String> = self.cond.iter().map(l).collect();
        let cond = if cond.is_empty() {
            "\u{2205}".to_string()
        } else {
            cond.join(",")
        };
        format!("({};{},{}|{})", l(self.i), l(self.j), l(self.k), cond)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub instance: Instance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    /// First violated instance in enumeration order.
    pub witness: Option<Violation>,
}

fn instances(n: usize) -> impl Iterator<Item = Instance> {
    (0..n).flat_map(move |i| {
        (0..n).filter(move |&j| j != i).flat_map(move |j| {
            (0..n).filter(move |&k| k != i && k != j).flat_map(move |k| {
                VarSet::full(n)
                    .without(i)
                    .without(j)
                    .without(k)
                    .subsets()
                    .map(move |cond| Instance { i, j, k, cond })
            })
        })
    })
}

/// Whether the instance violates the rule in `s`.
fn violates(s: &CIStructure, rule: Rule, x: &Instance) -> bool {
    let Instance { i, j, k, cond: l } = *x;
    let h = |a: usize, b: usize, c: VarSet| s.holds(a, b, c);
    match rule {
        Rule::Semigraphoid => {
            h(i, j, l) && h(i, k, l.with(j)) && !(h(i, k, l) && h(i, j, l.with(k)))
        }
        Rule::Intersection => {
            h(i, j, l.with(k)) && h(i, k, l.with(j)) && !(h(i, j, l) && h(i, k, l))
        }
        Rule::Composition => {
            h(i, j, l) && h(i, k, l) && !(h(i, j, l.with(k)) && h(i, k, l.with(j)))
        }
        Rule::WeakTransitivity => h(i, j, l) && h(i, j, l.with(k)) && !(h(i, k, l) || h(j, k, l)),
    }
}

/// Consequences the rule adds for one instance, if its premises hold.
fn consequences(s: &CIStructure, rule: Rule, x: &Instance) -> [Option<CIStatement>; 2] {
    let Instance { i, j, k, cond: l } = *x;
    let h = |a: usize, b: usize, c: VarSet| s.holds(a, b, c);
    let fire = match rule {
        Rule::Semigraphoid => h(i, j, l) && h(i, k, l.with(j)),
        Rule::Intersection => h(i, j, l.with(k)) && h(i, k, l.with(j)),
        Rule::Composition => h(i, j, l) && h(i, k, l),
        Rule::WeakTransitivity => false,
    };
    if !fire {
        return [None, None];
    }
    match rule {
        Rule::Semigraphoid => [
            Some(CIStatement::mk(i, k, l)),
            Some(CIStatement::mk(i, j, l.with(k))),
        ],
        Rule::Intersection => [Some(CIStatement::mk(i, j, l)), Some(CIStatement::mk(i, k, l))],
        Rule::Composition => [
            Some(CIStatement::mk(i, j, l.with(k))),
            Some(CIStatement::mk(i, k, l.with(j))),
        ],
        Rule::WeakTransitivity => [None, None],
    }
}

/// Checks one axiom, reporting the first violated instance.
pub fn satisfies_axiom(s: &CIStructure, axiom: Axiom) -> AxiomVerdict {
    for &rule in axiom.rules() {
        if let Some(instance) = instances(s.ground_size()).find(|x| violates(s, rule, x)) {
            return AxiomVerdict {
                axiom,
                holds: false,
                witness: Some(Violation { rule, instance }),
            };
        }
    }
    AxiomVerdict {
        axiom,
        holds: true,
        witness: None,
    }
}

/// Least superset of `s` closed under the semigraphoid rule and the
/// additional rules given. Weak transitivity is rejected.
pub fn closure(s: &CIStructure, rules: &[Rule]) -> Result<CIStructure> {
    if rules.contains(&Rule::WeakTransitivity) {
        return Err(Error::UnknownRule(
            "weak_transitivity is disjunctive and cannot be used for closure; \
             check it with satisfies_axiom instead"
                .into(),
        ));
    }
    let mut active = vec![Rule::Semigraphoid];
    for r in rules {
        if !active.contains(r) {
            active.push(*r);
        }
    }
    let mut out = s.clone();
    let all: Vec<Instance> = instances(s.ground_size()).collect();
    loop {
        let mut added = Vec::new();
        for x in &all {
            for rule in &active {
                for st in consequences(&out, *rule, x).into_iter().flatten() {
                    if !out.contains(&st) {
                        added.push(st);
                    }
                }
            }
        }
        if added.is_empty() {
            return Ok(out);
        }
        for st in added {
            out.insert(st);
        }
    }
}
