//! Shared corpus and oracles for the integration and acceptance tests.
#![allow(dead_code)]

use cindep::dist::{mixture, Variable, VariableSchema};
use cindep::families::{self, CommonCause, KirkupParams};
use cindep::{CIStatement, CIStructure, Distribution, Rational, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A corpus member with the roles criteria are evaluated on.
pub struct Case {
    pub label: String,
    pub dist: Distribution,
    pub a: String,
    pub x: String,
    pub y: String,
    pub g: Option<String>,
}

impl Case {
    pub fn new(label: impl Into<String>, dist: Distribution, roles: [&str; 3], g: Option<&str>) -> Self {
        Case {
            label: label.into(),
            dist,
            a: roles[0].into(),
            x: roles[1].into(),
            y: roles[2].into(),
            g: g.map(str::to_string),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `[lo/den, hi/den]`.
pub fn rational_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    q(rng.gen_range(lo..=hi), den)
}

/// Four nonnegative masses with sum one and common denominator `den`.
pub fn free_masses(rng: &mut ChaCha8Rng, den: i64) -> [Rational; 4] {
    let mut cuts = [rng.gen_range(0..=den), rng.gen_range(0..=den), rng.gen_range(0..=den)];
    cuts.sort_unstable();
    [
        q(cuts[0], den),
        q(cuts[1] - cuts[0], den),
        q(cuts[2] - cuts[1], den),
        q(den - cuts[2], den),
    ]
}

/// Random valid point on the submodel `epsilon = delta (1 - alpha) / alpha`.
pub fn kirkup_submodel(rng: &mut ChaCha8Rng) -> KirkupParams {
    loop {
        let alpha = rational_in(rng, 1, 19, 20);
        let beta = rational_in(rng, 1, 19, 20);
        let gamma = rational_in(rng, 1, 19, 20);
        let delta = rational_in(rng, -20, 20, 1000);
        let p = KirkupParams::on_submodel(alpha, beta, gamma, delta);
        if families::kirkup_family(&p).is_ok() {
            return p;
        }
    }
}

/// Random valid Kirkup point with independent `delta` and `epsilon`.
pub fn kirkup_generic(rng: &mut ChaCha8Rng) -> KirkupParams {
    loop {
        let p = KirkupParams::new(
            rational_in(rng, 1, 9, 10),
            rational_in(rng, 1, 9, 10),
            rational_in(rng, 1, 9, 10),
            rational_in(rng, -30, 30, 1000),
            rational_in(rng, -30, 30, 1000),
        );
        if families::kirkup_family(&p).is_ok() {
            return p;
        }
    }
}

pub fn random_schema(rng: &mut ChaCha8Rng, vars: usize, max_card: u32) -> VariableSchema {
    let names = ["A", "X", "Y", "G", "H"];
    VariableSchema::new(
        (0..vars)
            .map(|k| Variable::new(names[k], rng.gen_range(2..=max_card)))
            .collect(),
    )
    .unwrap()
}

/// 3 or 4 variables, cardinalities at most 3; even seeds full support, odd seeds sparse.
pub fn random_distribution(seed: u64) -> Distribution {
    let mut r = rng(seed.wrapping_mul(7919));
    let vars = r.gen_range(3..=4);
    let schema = random_schema(&mut r, vars, 3);
    let bound = schema.outcome_count() * 4;
    if seed % 2 == 0 {
        families::random_rational_distribution(seed, &schema, bound).unwrap()
    } else {
        families::random_sparse_distribution(seed, &schema, bound).unwrap()
    }
}

/// Premise-satisfying table for the double Markov property: `(X, Y)`
/// supported on 2 or 3 diagonal blocks, `A` drawn independently per block.
pub fn block_mixture(seed: u64) -> Distribution {
    let mut r = rng(seed ^ 0xb10c);
    let blocks = r.gen_range(2..=3);
    let sizes: Vec<(u32, u32)> = (0..blocks).map(|_| (r.gen_range(1..=2), r.gen_range(1..=2))).collect();
    let (cx, cy): (u32, u32) = sizes.iter().fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
    let a_card = r.gen_range(2..=3);
    let schema = VariableSchema::new(vec![
        Variable::new("A", a_card),
        Variable::new("X", cx),
        Variable::new("Y", cy),
    ])
    .unwrap();
    let a_schema = VariableSchema::new(vec![Variable::new("A", a_card)]).unwrap();
    let xy_schema = VariableSchema::new(vec![Variable::new("X", cx), Variable::new("Y", cy)]).unwrap();
    let (mut ox, mut oy) = (0, 0);
    let mut parts = Vec::new();
    for (b, &(sx, sy)) in sizes.iter().enumerate() {
        let cells: Vec<Vec<u32>> = (ox..ox + sx).flat_map(|x| (oy..oy + sy).map(move |y| vec![x, y])).collect();
        let w: Vec<i64> = cells.iter().map(|_| r.gen_range(1..=5)).collect();
        let tot: i64 = w.iter().sum();
        let xy = Distribution::new(
            xy_schema.clone(),
            cells.into_iter().zip(w).map(|(c, w)| (c, q(w, tot))),
        )
        .unwrap();
        let aw: Vec<i64> = (0..a_card).map(|_| r.gen_range(0..=4)).collect();
        let aw = if aw.iter().all(|&v| v == 0) { vec![1; a_card as usize] } else { aw };
        let atot: i64 = aw.iter().sum();
        let a = Distribution::new(
            a_schema.clone(),
            aw.iter().enumerate().map(|(k, &v)| (vec![k as u32], q(v, atot))),
        )
        .unwrap();
        parts.push(a.independent_join(&xy).unwrap());
        ox += sx;
        oy += sy;
        let _ = b;
    }
    let weights: Vec<Rational> = {
        let w: Vec<i64> = parts.iter().map(|_| r.gen_range(1..=4)).collect();
        let tot: i64 = w.iter().sum();
        w.into_iter().map(|v| q(v, tot)).collect()
    };
    let m = mixture(&weights, &parts, "L").unwrap();
    let d = m.marginalize(&["A", "X", "Y"]).unwrap();
    assert_eq!(d.schema(), &schema);
    d
}

/// Every ordered role assignment `(a, x, y)` with `x < y` over the first three
/// variables, the fourth (if any) as `g`.
fn role_cases(label: &str, d: &Distribution) -> Vec<Case> {
    let names: Vec<String> = d.schema().names().map(str::to_string).collect();
    let first: Vec<&str> = names.iter().take(3).map(String::as_str).collect();
    let g = names.get(3).map(String::as_str);
    let orders = [[0, 1, 2], [1, 0, 2], [2, 0, 1]];
    orders
        .iter()
        .map(|o| {
            Case::new(
                format!("{label} roles {}{}{}", first[o[0]], first[o[1]], first[o[2]]),
                d.clone(),
                [first[o[0]], first[o[1]], first[o[2]]],
                g,
            )
        })
        .collect()
}

/// Families at parameter grids, the non-GK table, violators, double Markov
/// mixtures, 500 random tables and their GK and common-cause extensions.
pub fn corpus() -> Vec<Case> {
    let mut out = Vec::new();
    let half = q(1, 2);
    for eps in [q(1, 100), q(1, 1000), q(1, 16), q(1, 32), q(1, 8)] {
        let d = families::kirkup_family(&KirkupParams::new(half.clone(), half.clone(), half.clone(), q(0, 1), eps.clone()))
            .unwrap();
        out.extend(role_cases(&format!("kirkup eps={eps}"), &d));
    }
    let mut r = rng(11);
    for k in 0..20 {
        let d = families::kirkup_family(&kirkup_submodel(&mut r)).unwrap();
        out.extend(role_cases(&format!("kirkup submodel {k}"), &d));
        let d = families::kirkup_family(&kirkup_generic(&mut r)).unwrap();
        out.extend(role_cases(&format!("kirkup generic {k}"), &d));
    }
    for k in 2..=6 {
        out.extend(role_cases(&format!("group k={k}"), &families::group_sum_family(k).unwrap()));
    }
    let ngk = families::non_gk_example();
    out.extend(role_cases("non-gk", &ngk));
    out.push(Case::new("non-gk no g", ngk.clone(), ["A", "X", "Y"], None));
    for variant in [1, 2] {
        for k in 0..100 {
            let d = families::intersection_violator(variant, free_masses(&mut r, 24)).unwrap();
            out.extend(role_cases(&format!("violator {variant}/{k}"), &d));
        }
    }
    for k in 0..100 {
        out.extend(role_cases(&format!("block mixture {k}"), &block_mixture(k)));
    }
    for (xb, ab) in [(q(9, 10), q(99, 100)), (q(1, 2), q(1, 2)), (q(1, 3), q(1, 10))] {
        let d = families::tight_violation_family(xb, ab).unwrap().reorder(&["A", "X", "Y"]).unwrap();
        out.extend(role_cases("tight", &d));
    }
    for seed in 0..500 {
        let d = random_distribution(seed);
        out.extend(role_cases(&format!("random {seed}"), &d));
        let names: Vec<String> = d.schema().names().map(str::to_string).collect();
        let gk = cindep::criteria::gk_extend(&d, &names[1], &names[2], "K").unwrap();
        out.push(Case::new(format!("random {seed} + gk"), gk, [&names[0], &names[1], &names[2]], Some("K")));
        let xy = d.marginalize(&[&names[1], &names[2]]).unwrap();
        let cc = families::common_cause_extension(&xy, "C", &CommonCause::PerCell).unwrap();
        let with_g = cc.function_extend("F", 2, |o| (o[1] + o[2]) % 2).unwrap();
        out.push(Case::new(
            format!("random {seed} common cause"),
            with_g,
            ["C", &names[1], &names[2]],
            Some("F"),
        ));
    }
    out
}

/// Semigraphoid test written independently of the axiom module: the global
/// relation induced by `s` must satisfy contraction,
/// `<A:B|C> & <A:D|BC> => <A:BD|C>`, for pairwise disjoint `A, B, D`
/// nonempty and `C` arbitrary. Decomposition and weak union hold for an
/// induced relation by construction; symmetry is built into the encoding.
pub fn oracle_is_semigraphoid(s: &CIStructure) -> bool {
    let n = s.ground_size();
    let full = (1u32 << n) - 1;
    let holds = |i: u32, j: u32, k: u32| -> bool {
        // every i in I, j in J, K <= L <= IJK \ ij
        for a in 0..n {
            if i >> a & 1 == 0 {
                continue;
            }
            for b in 0..n {
                if j >> b & 1 == 0 {
                    continue;
                }
                let free = (i | j) & !(1 << a) & !(1 << b);
                let mut sub = free;
                loop {
                    let cond = VarSet(k | sub);
                    let st = CIStatement::new(a.min(b), a.max(b), cond).unwrap();
                    if !s.contains(&st) {
                        return false;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & free;
                }
            }
        }
        true
    };
    for a in 1..=full {
        for b in 1..=full {
            if a & b != 0 {
                continue;
            }
            for d in 1..=full {
                if d & (a | b) != 0 {
                    continue;
                }
                let rest = full & !(a | b | d);
                let mut c = rest;
                loop {
                    if holds(a, b, c) && holds(a, d, b | c) && !holds(a, b | d, c) {
                        return false;
                    }
                    if c == 0 {
                        break;
                    }
                    c = (c - 1) & rest;
                }
            }
        }
    }
    true
}

/// All `2^6` elementary structures on three elements.
pub fn all_structures_n3() -> Vec<CIStructure> {
    let stmts: Vec<CIStatement> = CIStatement::all(3).collect();
    (0u32..1 << stmts.len())
        .map(|m| {
            CIStructure::from_statements(
                3,
                stmts.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, s)| *s),
            )
            .unwrap()
        })
        .collect()
}

/// `<i:j|K> in S` implies `<i:j|Kk> in S` for every further `k`.
pub fn is_upward_stable(s: &CIStructure) -> bool {
    let n = s.ground_size();
    s.statements().all(|st| {
        (0..n)
            .filter(|&k| k != st.i && k != st.j && !st.cond.contains(k))
            .all(|k| s.holds(st.i, st.j, st.cond.with(k)))
    })
}
