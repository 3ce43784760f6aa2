//! Sufficient conditions for Intersection and Composition on a triple
//! `(A, X, Y)`, optionally with an auxiliary variable `G`.
//!
//! Every CI decision here is exact. The interaction sign and the KRV entropy
//! bound are floating-point and compared against [`TOLERANCE`].

mod support;

pub use support::{gk_extend, support_graph, BipartiteSupportGraph};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::dist::JointDistribution;
use crate::error::{Error, Result};
use crate::info::{entropy_profile, EntropyProfile, TOLERANCE};
use crate::scalar::Exact;
use crate::varset::VarSet;

fn check_distinct<Q: Exact>(d: &JointDistribution<Q>, names: &[&str]) -> Result<()> {
    for (k, n) in names.iter().enumerate() {
        d.schema().index_of(n)?;
        if names[..k].contains(n) {
            return Err(Error::DuplicateVariable(n.to_string()));
        }
    }
    Ok(())
}

fn ci<Q: Exact>(d: &JointDistribution<Q>, i: &[&str], j: &[&str], k: &[&str]) -> bool {
    d.is_ci(i, j, k).expect("roles validated")
}

fn fresh_name<Q: Exact>(d: &JointDistribution<Q>, base: &str) -> String {
    (0..)
        .map(|k| if k == 0 { base.to_string() } else { format!("{base}{k}") })
        .find(|n| d.schema().index_of(n).is_err())
        .expect("some name is free")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GkResult {
    /// the support graph of `(X, Y)` is connected
    pub applicable: bool,
    /// applicable and the Intersection premises hold
    pub certifies: bool,
    pub components: usize,
}

/// Connected support graph of `(X, Y)` certifies Intersection.
pub fn gk_criterion<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> Result<GkResult> {
    check_distinct(d, &[a, x, y])?;
    let components = support_graph(d, x, y)?.component_count();
    let applicable = components == 1;
    Ok(GkResult {
        applicable,
        certifies: applicable && intersection_premises(d, a, x, y),
        components,
    })
}

fn intersection_premises<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> bool {
    ci(d, &[a], &[x], &[y]) && ci(d, &[a], &[y], &[x])
}

fn composition_premises<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> bool {
    ci(d, &[a], &[x], &[]) && ci(d, &[a], &[y], &[])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleMarkov {
    pub premises_hold: bool,
    /// `<A : XY | G>` with `G` the common-information variable of `(X, Y)`
    pub conclusion_holds: bool,
}

pub fn double_markov_check<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> Result<DoubleMarkov> {
    check_distinct(d, &[a, x, y])?;
    let g = fresh_name(d, "G");
    let ext = gk_extend(d, x, y, &g)?;
    Ok(DoubleMarkov {
        premises_hold: intersection_premises(d, a, x, y),
        conclusion_holds: ci(&ext, &[a], &[x, y], &[&g]),
    })
}

/// Conditions (i) `<A:G> & <X:Y|G>`, (ii) `<X:G> & <A:Y|G>`,
/// (iii) `<Y:G> & <A:X|G>`; any of them certifies Intersection.
pub fn conditional_ingleton_check<Q: Exact>(
    d: &JointDistribution<Q>,
    a: &str,
    x: &str,
    y: &str,
    g: &str,
) -> Result<[bool; 3]> {
    check_distinct(d, &[a, x, y, g])?;
    Ok([
        ci(d, &[a], &[g], &[]) && ci(d, &[x], &[y], &[g]),
        ci(d, &[x], &[g], &[]) && ci(d, &[a], &[y], &[g]),
        ci(d, &[y], &[g], &[]) && ci(d, &[a], &[x], &[g]),
    ])
}

/// Conditions (i) `<A:G|XY> & <X:Y|A>`, (ii) `<X:G|AY> & <A:Y|X>`,
/// (iii) `<Y:G|AX> & <A:X|Y>`; any of them certifies Composition
/// conditional on `G`: `<A:X|G> & <A:Y|G> => <A:XY|G>`.
pub fn dual_conditional_ingleton_check<Q: Exact>(
    d: &JointDistribution<Q>,
    a: &str,
    x: &str,
    y: &str,
    g: &str,
) -> Result<[bool; 3]> {
    check_distinct(d, &[a, x, y, g])?;
    Ok([
        ci(d, &[a], &[g], &[x, y]) && ci(d, &[x], &[y], &[a]),
        ci(d, &[x], &[g], &[a, y]) && ci(d, &[a], &[y], &[x]),
        ci(d, &[y], &[g], &[a, x]) && ci(d, &[a], &[x], &[y]),
    ])
}

/// `<A:Y|G> & <Y:G|X>` certifies `<A:X> & <A:X|Y> => <A:XY>`.
pub fn third_implication_check<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str, g: &str) -> Result<bool> {
    check_distinct(d, &[a, x, y, g])?;
    Ok(ci(d, &[a], &[y], &[g]) && ci(d, &[y], &[g], &[x]))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InteractionResult {
    /// `I(A:X:Y)` in nats
    pub sign: f64,
    /// `sign >= -tol`
    pub certifies_composition: bool,
    /// `sign <= tol`
    pub certifies_intersection: bool,
}

fn triple_profile<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> EntropyProfile {
    entropy_profile(&d.marginalize(&[a, x, y]).expect("roles validated"))
}

/// Under `<A:X>`, `I(A:X:Y) = -I(A:X|Y)`, so a nonnegative sign forces
/// Composition. Under `<A:X|Y>`, `I(A:X:Y) = I(A:X)`, so a nonpositive sign
/// forces Intersection.
pub fn interaction_criterion<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> Result<InteractionResult> {
    check_distinct(d, &[a, x, y])?;
    let p = triple_profile(d, a, x, y);
    let sign = p.interaction(p.index_of(a)?, p.index_of(x)?, p.index_of(y)?)?;
    Ok(InteractionResult {
        sign,
        certifies_composition: sign >= -TOLERANCE,
        certifies_intersection: sign <= TOLERANCE,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KrvResult {
    pub holds: bool,
    /// `(x, y, a1, a2)` with both `a1` and `a2` compatible with `x` and `y`
    pub witness: Option<[u32; 4]>,
    /// `H(A|X) + H(A|Y) <= H(A) + tol`, evaluated only when `holds`
    pub entropy_bound_holds: Option<bool>,
}

pub fn krv_support_details<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> Result<KrvResult> {
    check_distinct(d, &[a, x, y])?;
    let compatible = |other: &str| -> BTreeMap<u32, BTreeSet<u32>> {
        let m = d.marginalize(&[a, other]).expect("roles validated");
        let a_first = d.schema().index_of(a).unwrap() < d.schema().index_of(other).unwrap();
        let mut map: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
        for (o, _) in m.support() {
            let (av, ov) = if a_first { (o[0], o[1]) } else { (o[1], o[0]) };
            map.entry(ov).or_default().insert(av);
        }
        map
    };
    let (ax, ay) = (compatible(x), compatible(y));
    let mut witness = None;
    'outer: for (xv, sx) in &ax {
        for (yv, sy) in &ay {
            let mut both = sx.intersection(sy);
            if let (Some(&a1), Some(&a2)) = (both.next(), both.next()) {
                witness = Some([*xv, *yv, a1, a2]);
                break 'outer;
            }
        }
    }
    let holds = witness.is_none();
    let entropy_bound_holds = holds.then(|| {
        let p = triple_profile(d, a, x, y);
        let s = |n: &str| VarSet::singleton(p.index_of(n).unwrap());
        let cond = |v: &str| p.h(s(a).union(s(v))) - p.h(s(v));
        cond(x) + cond(y) <= p.h(s(a)) + TOLERANCE
    });
    Ok(KrvResult {
        holds,
        witness,
        entropy_bound_holds,
    })
}

/// Every `(x, y)` admits at most one `a` with `p(a, x) > 0` and `p(a, y) > 0`.
pub fn krv_support_check<Q: Exact>(d: &JointDistribution<Q>, a: &str, x: &str, y: &str) -> Result<bool> {
    Ok(krv_support_details(d, a, x, y)?.holds)
}

/// First pair of support outcomes with `p(u | v) p(u & v) < p(u) p(v)`.
pub fn mtp2_witness<Q: Exact>(d: &JointDistribution<Q>) -> Option<(Vec<u32>, Vec<u32>)> {
    let support: Vec<(&Vec<u32>, &Q)> = d.support().collect();
    for (k, (u, pu)) in support.iter().enumerate() {
        for (v, pv) in &support[k + 1..] {
            let join: Vec<u32> = u.iter().zip(v.iter()).map(|(a, b)| *a.max(b)).collect();
            let meet: Vec<u32> = u.iter().zip(v.iter()).map(|(a, b)| *a.min(b)).collect();
            if join == **u || join == **v {
                continue;
            }
            if d.prob(&join) * d.prob(&meet) < (*pu).clone() * (*pv).clone() {
                return Some(((*u).clone(), (*v).clone()));
            }
        }
    }
    None
}

/// Multivariate total positivity of order 2 in the schema's state order.
pub fn mtp2_check<Q: Exact>(d: &JointDistribution<Q>) -> bool {
    mtp2_witness(d).is_none()
}

/// One criterion's verdict on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionEntry {
    /// false when the criterion needs `G` and none was given
    pub evaluated: bool,
    pub applicable: bool,
    /// applicable and the premises in `scope` hold, so the conclusion is certified
    pub implies_property: bool,
    /// `"unconditional"` or `"conditional_on_g"`
    pub scope: &'static str,
    pub witness: Option<String>,
}

impl CriterionEntry {
    fn new(applicable: bool, premises: bool, witness: Option<String>) -> Self {
        CriterionEntry {
            evaluated: true,
            applicable,
            implies_property: applicable && premises,
            scope: "unconditional",
            witness,
        }
    }

    fn not_evaluated() -> Self {
        CriterionEntry {
            evaluated: false,
            applicable: false,
            implies_property: false,
            scope: "unconditional",
            witness: None,
        }
    }
}

fn condition_witness(conds: &[bool; 3]) -> Option<String> {
    let labels = ["(i)", "(ii)", "(iii)"];
    let held: Vec<&str> = labels.iter().zip(conds).filter(|(_, &c)| c).map(|(l, _)| *l).collect();
    (!held.is_empty()).then(|| held.join(" "))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Roles {
    pub a: String,
    pub x: String,
    pub y: String,
    pub g: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntersectionCriteria {
    pub gk: CriterionEntry,
    pub cond_ingleton: CriterionEntry,
    pub interaction: CriterionEntry,
}

/// `<A:X|Y> & <A:Y|X> => <A:XY>`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntersectionReport {
    pub premises_hold: bool,
    pub conclusion_holds: bool,
    pub gk_applicable: bool,
    pub gk_components: usize,
    pub cond_ingleton: Option<[bool; 3]>,
    pub interaction_sign: f64,
    pub double_markov: DoubleMarkov,
    pub criteria: IntersectionCriteria,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompositionCriteria {
    pub interaction: CriterionEntry,
    pub krv: CriterionEntry,
    pub mtp2: CriterionEntry,
    pub dual_cond_ingleton: CriterionEntry,
}

/// `<A:X|G> & <A:Y|G> => <A:XY|G>`, the only conclusion the dual
/// conditional Ingleton criterion certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GConditionalComposition {
    pub premises_hold: bool,
    pub conclusion_holds: bool,
}

/// `<A:X> & <A:Y> => <A:XY>`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompositionReport {
    pub premises_hold: bool,
    pub conclusion_holds: bool,
    pub interaction_sign: f64,
    pub interaction_nonneg: bool,
    pub krv_holds: bool,
    pub krv_entropy_bound: Option<bool>,
    /// on the `(A, X, Y)` marginal in schema state order
    pub mtp2_holds: bool,
    pub dual_cond_ingleton: Option<[bool; 3]>,
    pub g_conditional: Option<GConditionalComposition>,
    pub criteria: CompositionCriteria,
}

/// `<A:X> & <A:X|Y> => <A:XY>`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThirdImplicationReport {
    pub premises_hold: bool,
    pub conclusion_holds: bool,
    pub criterion: CriterionEntry,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub roles: Roles,
    pub intersection: IntersectionReport,
    pub composition: CompositionReport,
    pub third_implication: ThirdImplicationReport,
}

impl CriterionReport {
    /// Criteria that claim a conclusion which does not hold. Empty for a sound report.
    pub fn unsound_entries(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let i = &self.intersection;
        for (name, e) in [
            ("intersection.gk", &i.criteria.gk),
            ("intersection.cond_ingleton", &i.criteria.cond_ingleton),
            ("intersection.interaction", &i.criteria.interaction),
        ] {
            if e.implies_property && !i.conclusion_holds {
                out.push(name);
            }
        }
        if i.double_markov.premises_hold && !i.double_markov.conclusion_holds {
            out.push("intersection.double_markov");
        }
        let c = &self.composition;
        for (name, e) in [
            ("composition.interaction", &c.criteria.interaction),
            ("composition.krv", &c.criteria.krv),
            ("composition.mtp2", &c.criteria.mtp2),
        ] {
            if e.implies_property && !c.conclusion_holds {
                out.push(name);
            }
        }
        if c.criteria.dual_cond_ingleton.implies_property
            && !c.g_conditional.is_some_and(|g| g.conclusion_holds)
        {
            out.push("composition.dual_cond_ingleton");
        }
        let t = &self.third_implication;
        if t.criterion.implies_property && !t.conclusion_holds {
            out.push("third_implication");
        }
        out
    }
}

/// Runs every criterion on `(a, x, y)` and, when given, the auxiliary `g`.
pub fn evaluate_all<Q: Exact>(
    d: &JointDistribution<Q>,
    a: &str,
    x: &str,
    y: &str,
    g: Option<&str>,
) -> Result<CriterionReport> {
    match g {
        Some(g) => check_distinct(d, &[a, x, y, g])?,
        None => check_distinct(d, &[a, x, y])?,
    }
    let conclusion = ci(d, &[a], &[x, y], &[]);
    let inter = interaction_criterion(d, a, x, y)?;
    let sign_witness = Some(format!("I(A:X:Y) = {:.6e}", inter.sign));

    // Intersection
    let i_premises = intersection_premises(d, a, x, y);
    let gk = gk_criterion(d, a, x, y)?;
    let cond_ingleton = g.map(|g| conditional_ingleton_check(d, a, x, y, g)).transpose()?;
    let intersection = IntersectionReport {
        premises_hold: i_premises,
        conclusion_holds: conclusion,
        gk_applicable: gk.applicable,
        gk_components: gk.components,
        cond_ingleton,
        interaction_sign: inter.sign,
        double_markov: double_markov_check(d, a, x, y)?,
        criteria: IntersectionCriteria {
            gk: CriterionEntry::new(gk.applicable, i_premises, Some(format!("{} components", gk.components))),
            cond_ingleton: cond_ingleton.map_or_else(CriterionEntry::not_evaluated, |c| {
                CriterionEntry::new(c.iter().any(|&b| b), i_premises, condition_witness(&c))
            }),
            interaction: CriterionEntry::new(inter.certifies_intersection, i_premises, sign_witness.clone()),
        },
    };

    // Composition
    let c_premises = composition_premises(d, a, x, y);
    let krv = krv_support_details(d, a, x, y)?;
    let triple = d.marginalize(&[a, x, y])?;
    let mtp2 = mtp2_witness(&triple);
    let dual = g.map(|g| dual_conditional_ingleton_check(d, a, x, y, g)).transpose()?;
    let g_conditional = g.map(|g| GConditionalComposition {
        premises_hold: ci(d, &[a], &[x], &[g]) && ci(d, &[a], &[y], &[g]),
        conclusion_holds: ci(d, &[a], &[x, y], &[g]),
    });
    let dual_entry = match (dual, g_conditional) {
        (Some(c), Some(gc)) => CriterionEntry {
            scope: "conditional_on_g",
            ..CriterionEntry::new(c.iter().any(|&b| b), gc.premises_hold, condition_witness(&c))
        },
        _ => CriterionEntry {
            scope: "conditional_on_g",
            ..CriterionEntry::not_evaluated()
        },
    };
    let composition = CompositionReport {
        premises_hold: c_premises,
        conclusion_holds: conclusion,
        interaction_sign: inter.sign,
        interaction_nonneg: inter.certifies_composition,
        krv_holds: krv.holds,
        krv_entropy_bound: krv.entropy_bound_holds,
        mtp2_holds: mtp2.is_none(),
        dual_cond_ingleton: dual,
        g_conditional,
        criteria: CompositionCriteria {
            interaction: CriterionEntry::new(inter.certifies_composition, c_premises, sign_witness),
            krv: CriterionEntry::new(
                krv.holds,
                c_premises,
                krv.witness.map(|[xv, yv, a1, a2]| format!("x={xv} y={yv} admit a={a1} and a={a2}")),
            ),
            mtp2: CriterionEntry::new(
                mtp2.is_none(),
                c_premises,
                mtp2.map(|(u, v)| format!("u={u:?} v={v:?}")),
            ),
            dual_cond_ingleton: dual_entry,
        },
    };

    // third implication
    let t_premises = ci(d, &[a], &[x], &[]) && ci(d, &[a], &[x], &[y]);
    let third = g.map(|g| third_implication_check(d, a, x, y, g)).transpose()?;
    let third_implication = ThirdImplicationReport {
        premises_hold: t_premises,
        conclusion_holds: conclusion,
        criterion: third.map_or_else(CriterionEntry::not_evaluated, |t| CriterionEntry::new(t, t_premises, None)),
    };

    Ok(CriterionReport {
        roles: Roles {
            a: a.into(),
            x: x.into(),
            y: y.into(),
            g: g.map(str::to_string),
        },
        intersection,
        composition,
        third_implication,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{mixture, VariableSchema};
    use crate::families;
    use crate::{Distribution, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn independent(names: &[&str]) -> Distribution {
        Distribution::uniform(VariableSchema::binary(names).unwrap()).unwrap()
    }

    fn copies() -> Distribution {
        Distribution::new(
            VariableSchema::binary(&["A", "X", "Y"]).unwrap(),
            [(vec![0, 0, 0], q(1, 2)), (vec![1, 1, 1], q(1, 2))],
        )
        .unwrap()
    }

    fn kirkup16() -> Distribution {
        families::kirkup_family(&families::KirkupParams::new(q(1, 2), q(1, 2), q(1, 2), q(0, 1), q(1, 16))).unwrap()
    }

    #[test]
    fn gk_examples() {
        let full = independent(&["A", "X", "Y"]);
        assert!(gk_criterion(&full, "A", "X", "Y").unwrap().applicable);
        let ngk = families::non_gk_example();
        let r = gk_criterion(&ngk, "A", "X", "Y").unwrap();
        assert!(!r.applicable);
        assert!(ngk.is_ci(&["A"], &["X", "Y"], &[]).unwrap());
        let v = families::intersection_violator(1, [q(1, 2), q(1, 4), q(1, 8), q(1, 8)]).unwrap();
        let r = gk_criterion(&v, "A", "X", "Y").unwrap();
        assert_eq!((r.applicable, r.components), (false, 2));
    }

    #[test]
    fn double_markov_examples() {
        let ngk = families::non_gk_example();
        let r = double_markov_check(&ngk, "A", "X", "Y").unwrap();
        assert!(r.premises_hold && r.conclusion_holds);
        let grp = families::group_sum_family(3).unwrap();
        assert!(!double_markov_check(&grp, "A", "X", "Y").unwrap().premises_hold);
        let v = families::intersection_violator(1, [q(1, 2), q(1, 4), q(1, 8), q(1, 8)]).unwrap();
        let r = double_markov_check(&v, "A", "X", "Y").unwrap();
        assert!(r.premises_hold && r.conclusion_holds);
    }

    #[test]
    fn conditional_ingleton_examples() {
        let ngk = families::non_gk_example();
        assert!(conditional_ingleton_check(&ngk, "A", "X", "Y", "G").unwrap()[0]);
        let ind = independent(&["A", "X", "Y", "G"]);
        assert_eq!(conditional_ingleton_check(&ind, "A", "X", "Y", "G").unwrap(), [true; 3]);
        assert!(matches!(
            conditional_ingleton_check(&ind, "A", "X", "Y", "A"),
            Err(Error::DuplicateVariable(_))
        ));
    }

    #[test]
    fn self_independence_needs_constancy() {
        // G an exact copy of a non-constant A
        let d = independent(&["A", "X", "Y"]).function_extend("G", 2, |o| o[0]).unwrap();
        assert!(!conditional_ingleton_check(&d, "A", "X", "Y", "G").unwrap()[0]);
    }

    #[test]
    fn dual_conditional_ingleton_examples() {
        let ind = independent(&["A", "X", "Y", "G"]);
        assert_eq!(dual_conditional_ingleton_check(&ind, "A", "X", "Y", "G").unwrap(), [true; 3]);

        let xy = Distribution::new(
            VariableSchema::binary(&["X", "Y"]).unwrap(),
            [(vec![0, 0], q(1, 2)), (vec![0, 1], q(1, 6)), (vec![1, 1], q(1, 3))],
        )
        .unwrap();
        let cc = families::common_cause_extension(&xy, "A", &families::CommonCause::PerCell).unwrap();
        let d = cc.function_extend("G", 2, |o| o[1] ^ o[2]).unwrap();
        assert!(dual_conditional_ingleton_check(&d, "A", "X", "Y", "G").unwrap()[0]);

        // G = X: (ii) reduces to <A:Y|X>
        let d = families::non_gk_example().function_extend("H", 2, |o| o[1]).unwrap();
        let c = dual_conditional_ingleton_check(&d, "A", "X", "Y", "H").unwrap();
        assert_eq!(c[1], d.is_ci(&["A"], &["Y"], &["X"]).unwrap());
    }

    #[test]
    fn third_implication_examples() {
        let ind = independent(&["A", "X", "Y", "G"]);
        assert!(third_implication_check(&ind, "A", "X", "Y", "G").unwrap());

        let base = families::group_sum_family(2).unwrap();
        let d = base.function_extend("G", 1, |_| 0).unwrap();
        assert_eq!(
            third_implication_check(&d, "A", "X", "Y", "G").unwrap(),
            d.is_ci(&["A"], &["Y"], &[]).unwrap()
        );
    }

    #[test]
    fn third_implication_markov_chain() {
        // G = X mod 2 for X on 4 states; A depends on G only; Y depends on G only
        let schema = |n: &str| VariableSchema::new(vec![crate::dist::Variable::new(n, 4)]).unwrap();
        let parts: Vec<Distribution> = (0..2)
            .map(|g: u32| {
                let x = Distribution::new(schema("X"), [(vec![g], q(1, 2)), (vec![g + 2], q(1, 2))]).unwrap();
                let a = Distribution::new(
                    VariableSchema::binary(&["A"]).unwrap(),
                    [(vec![g], q(2, 3)), (vec![1 - g], q(1, 3))],
                )
                .unwrap();
                let y = Distribution::new(
                    VariableSchema::binary(&["Y"]).unwrap(),
                    [(vec![g], q(3, 4)), (vec![1 - g], q(1, 4))],
                )
                .unwrap();
                a.independent_join(&x).unwrap().independent_join(&y).unwrap()
            })
            .collect();
        let m = mixture(&[q(1, 2), q(1, 2)], &parts, "L").unwrap();
        let d = m.function_extend("G", 2, |o| o[2] % 2).unwrap();
        assert!(third_implication_check(&d, "A", "X", "Y", "G").unwrap());
    }

    #[test]
    fn interaction_examples() {
        let r = interaction_criterion(&copies(), "A", "X", "Y").unwrap();
        assert!((r.sign - std::f64::consts::LN_2).abs() < 1e-12);
        assert!(r.certifies_composition && !r.certifies_intersection);
        let r = interaction_criterion(&families::group_sum_family(3).unwrap(), "A", "X", "Y").unwrap();
        assert!(r.sign < 0.0 && !r.certifies_composition && r.certifies_intersection);
        let r = interaction_criterion(&independent(&["A", "X", "Y"]), "A", "X", "Y").unwrap();
        assert!(r.sign.abs() < 1e-12 && r.certifies_composition);
    }

    #[test]
    fn krv_examples() {
        let constant = Distribution::point(VariableSchema::binary(&["A"]).unwrap(), vec![0])
            .unwrap()
            .independent_join(&independent(&["X", "Y"]))
            .unwrap();
        assert!(krv_support_check(&constant, "A", "X", "Y").unwrap());
        let f = independent(&["X", "Y"]).function_extend("A", 2, |o| o[0]).unwrap();
        let r = krv_support_details(&f, "A", "X", "Y").unwrap();
        assert!(r.holds);
        assert_eq!(r.entropy_bound_holds, Some(true));
        let r = krv_support_details(&families::non_gk_example(), "A", "X", "Y").unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some([0, 0, 0, 1]));
        assert!(!krv_support_check(&kirkup16(), "A", "X", "Y").unwrap());
    }

    #[test]
    fn mtp2_examples() {
        assert!(mtp2_check(&independent(&["A", "B", "C"])));
        let grp = families::group_sum_family(2).unwrap();
        assert!(!mtp2_check(&grp));
        let t = Distribution::new(
            VariableSchema::binary(&["X", "Y"]).unwrap(),
            [
                (vec![0, 0], q(3, 8)),
                (vec![0, 1], q(1, 8)),
                (vec![1, 0], q(1, 8)),
                (vec![1, 1], q(3, 8)),
            ],
        )
        .unwrap();
        assert!(mtp2_check(&t));
        let r = Distribution::new(
            VariableSchema::binary(&["X", "Y"]).unwrap(),
            [
                (vec![0, 0], q(1, 8)),
                (vec![0, 1], q(3, 8)),
                (vec![1, 0], q(3, 8)),
                (vec![1, 1], q(1, 8)),
            ],
        )
        .unwrap();
        assert_eq!(mtp2_witness(&r), Some((vec![0, 1], vec![1, 0])));
    }

    #[test]
    fn report_on_non_gk() {
        let r = evaluate_all(&families::non_gk_example(), "A", "X", "Y", Some("G")).unwrap();
        let i = &r.intersection;
        assert!(i.premises_hold && i.conclusion_holds);
        assert!(!i.gk_applicable);
        assert_eq!(i.gk_components, 2);
        assert!(i.cond_ingleton.unwrap()[0]);
        assert!(i.criteria.cond_ingleton.implies_property);
        assert!(r.unsound_entries().is_empty());
    }

    #[test]
    fn report_on_kirkup() {
        let r = evaluate_all(&kirkup16(), "A", "X", "Y", None).unwrap();
        let c = &r.composition;
        assert!(c.premises_hold && !c.conclusion_holds);
        assert!(!c.interaction_nonneg && !c.krv_holds && !c.mtp2_holds);
        assert!(!c.criteria.interaction.applicable);
        assert!(!c.criteria.krv.applicable);
        assert!(!c.criteria.mtp2.applicable);
        assert!(!c.criteria.dual_cond_ingleton.evaluated);
        assert!(r.intersection.cond_ingleton.is_none());
        assert!(r.unsound_entries().is_empty());
    }

    #[test]
    fn report_on_independent_triple() {
        let r = evaluate_all(&independent(&["A", "X", "Y", "G"]), "A", "X", "Y", Some("G")).unwrap();
        let i = &r.intersection.criteria;
        let c = &r.composition.criteria;
        for e in [&i.gk, &i.cond_ingleton, &i.interaction, &c.interaction, &c.mtp2, &c.dual_cond_ingleton] {
            assert!(e.applicable && e.implies_property, "{e:?}");
        }
        // a non-constant A is compatible with every (x, y) pair
        assert!(!c.krv.applicable);
        assert_eq!(c.dual_cond_ingleton.scope, "conditional_on_g");
        assert!(r.intersection.conclusion_holds && r.composition.conclusion_holds);
        assert!(r.third_implication.criterion.implies_property);
    }

    #[test]
    fn report_rejects_repeated_roles() {
        assert!(matches!(
            evaluate_all(&families::non_gk_example(), "A", "X", "X", None),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            evaluate_all(&families::non_gk_example(), "A", "X", "Y", Some("Q")),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn report_json_field_names() {
        let r = evaluate_all(&families::non_gk_example(), "A", "X", "Y", Some("G")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for path in [
            "/roles/g",
            "/intersection/premises_hold",
            "/intersection/gk_applicable",
            "/intersection/gk_components",
            "/intersection/cond_ingleton/0",
            "/intersection/interaction_sign",
            "/composition/interaction_nonneg",
            "/composition/krv_holds",
            "/composition/mtp2_holds",
            "/composition/dual_cond_ingleton/2",
            "/composition/criteria/dual_cond_ingleton/scope",
            "/third_implication/criterion/applicable",
        ] {
            assert!(v.pointer(path).is_some(), "{path}");
        }
    }
}
