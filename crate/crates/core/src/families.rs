//! Constructors for the concrete distribution families: Intersection
//! violators, the binary Kirkup parametrization, common-cause extensions,
//! abelian-group sums, almost-tight triples, the non-GK table and random
//! rational tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::{mixture, JointDistribution, Outcome, Variable, VariableSchema};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Exact};
use crate::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn coordinate(o: &[u32]) -> String {
    o.iter().map(|v| v.to_string()).collect()
}

/// Builds a binary `(A, X, Y)` table from masses indexed `p[4a + 2x + y]`,
/// reporting the first negative coordinate.
fn binary_triple(masses: [Rational; 8]) -> Result<JointDistribution> {
    let schema = VariableSchema::binary(&["A", "X", "Y"])?;
    let outcomes: Vec<Outcome> = schema.outcomes().collect();
    for (o, p) in outcomes.iter().zip(&masses) {
        if p.is_negative() {
            return Err(Error::InvalidMasses {
                coordinate: coordinate(o),
                value: format_rational(p),
            });
        }
    }
    JointDistribution::new(schema, outcomes.into_iter().zip(masses))
}

/// Binary Intersection violator on one of the two boundary components.
///
/// Variant 1 zeroes `p000, p011, p100, p111`; variant 2 zeroes the other four.
/// `free` fills the remaining coordinates in lexicographic order.
pub fn intersection_violator(variant: u8, free: [Rational; 4]) -> Result<JointDistribution> {
    let support: [usize; 4] = match variant {
        1 => [0b001, 0b010, 0b101, 0b110],
        2 => [0b000, 0b011, 0b100, 0b111],
        v => return Err(Error::BadParameter(format!("variant must be 1 or 2, got {v}"))),
    };
    let total = free.iter().cloned().fold(Rational::zero(), |a, b| a + b);
    if let Some((k, p)) = free.iter().enumerate().find(|(_, p)| p.is_negative()) {
        return Err(Error::InvalidMasses {
            coordinate: format!("{:03b}", support[k]),
            value: format_rational(p),
        });
    }
    if !total.is_one() {
        return Err(Error::InvalidMasses {
            coordinate: "sum".into(),
            value: format_rational(&total),
        });
    }
    let mut masses: [Rational; 8] = Default::default();
    for (slot, p) in support.iter().zip(free) {
        masses[*slot] = p;
    }
    binary_triple(masses)
}

/// Parameters of the binary family with `<A:X>` and `<A:Y>` built in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KirkupParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub epsilon: Rational,
}

impl KirkupParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational, epsilon: Rational) -> Self {
        KirkupParams {
            alpha,
            beta,
            gamma,
            delta,
            epsilon,
        }
    }

    /// Masses `p[4a + 2x + y]`, not yet checked for sign.
    pub fn masses(&self) -> [Rational; 8] {
        let one = Rational::one();
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        let (na, nb, nc) = (&one - a, &one - b, &one - c);
        let (d, e) = (&self.delta, &self.epsilon);
        [
            a * b * c - d,
            a * b * &nc + d,
            a * &nb * c + d,
            a * &nb * &nc - d,
            &na * b * c - e,
            &na * b * &nc + e,
            &na * &nb * c + e,
            &na * &nb * &nc - e,
        ]
    }

    /// `epsilon = delta (1 - alpha) / alpha`, on which `<A:XY>` holds.
    pub fn on_submodel(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        let epsilon = &delta * (Rational::one() - &alpha) / &alpha;
        KirkupParams::new(alpha, beta, gamma, delta, epsilon)
    }

    fn check(&self) -> Result<()> {
        for (name, v) in [("alpha", &self.alpha), ("beta", &self.beta), ("gamma", &self.gamma)] {
            if !v.is_positive() || *v >= Rational::one() {
                return Err(Error::BadParameter(format!(
                    "{name} = {} is not in (0, 1)",
                    format_rational(v)
                )));
            }
        }
        Ok(())
    }
}

pub fn kirkup_family(p: &KirkupParams) -> Result<JointDistribution> {
    p.check()?;
    binary_triple(p.masses())
}

/// How to split a joint table of `(X, Y)` into rank-one parts.
#[derive(Clone, Debug)]
pub enum CommonCause<Q: Exact = Rational> {
    /// one part per support cell
    PerCell,
    /// weighted rank-one tables with unit mass; `table[x][y]`
    Supplied(Vec<(Q, Vec<Vec<Q>>)>),
}

/// Prepends a variable `name` with `<X:Y|name>`, keeping the `(X, Y)` marginal.
/// `d` must have exactly two variables.
pub fn common_cause_extension<Q: Exact>(
    d: &JointDistribution<Q>,
    name: &str,
    strategy: &CommonCause<Q>,
) -> Result<JointDistribution<Q>> {
    let schema = d.schema().clone();
    if schema.len() != 2 {
        return Err(Error::SchemaMismatch(format!(
            "common cause needs a pair of variables, got {}",
            schema.len()
        )));
    }
    let (rows, cols) = (schema.cardinality(0) as usize, schema.cardinality(1) as usize);
    let (weights, parts) = match strategy {
        CommonCause::PerCell => {
            let mut weights = Vec::new();
            let mut parts = Vec::new();
            for (o, p) in d.support() {
                weights.push(p.clone());
                parts.push(JointDistribution::point(schema.clone(), o.clone())?);
            }
            (weights, parts)
        }
        CommonCause::Supplied(terms) => {
            let mut sum = vec![vec![Q::zero(); cols]; rows];
            let mut weights = Vec::new();
            let mut parts = Vec::new();
            for (k, (w, table)) in terms.iter().enumerate() {
                if table.len() != rows || table.iter().any(|r| r.len() != cols) {
                    return Err(Error::DimensionMismatch(format!(
                        "term {k} is not a {rows}x{cols} table"
                    )));
                }
                let entries = table.iter().enumerate().flat_map(|(x, row)| {
                    row.iter()
                        .enumerate()
                        .map(move |(y, p)| (vec![x as u32, y as u32], p.clone()))
                });
                let part = JointDistribution::new(schema.clone(), entries)
                    .map_err(|_| Error::BadParameter(format!("term {k} is not a probability table")))?;
                if !is_rank_one(table) {
                    return Err(Error::NotRankOne(k));
                }
                for (x, row) in table.iter().enumerate() {
                    for (y, p) in row.iter().enumerate() {
                        sum[x][y] = sum[x][y].clone() + w.clone() * p.clone();
                    }
                }
                weights.push(w.clone());
                parts.push(part);
            }
            for (x, row) in sum.iter().enumerate() {
                for (y, p) in row.iter().enumerate() {
                    if *p != d.prob(&[x as u32, y as u32]) {
                        return Err(Error::DecompositionMismatch {
                            cell: (x as u32, y as u32),
                        });
                    }
                }
            }
            (weights, parts)
        }
    };
    mixture(&weights, &parts, name)
}

fn is_rank_one<Q: Exact>(t: &[Vec<Q>]) -> bool {
    let (rows, cols) = (t.len(), t.first().map_or(0, Vec::len));
    (0..rows).all(|a| {
        (a + 1..rows).all(|b| {
            (0..cols).all(|c| {
                (c + 1..cols).all(|e| t[a][c].clone() * t[b][e].clone() == t[a][e].clone() * t[b][c].clone())
            })
        })
    })
}

/// `X, Y` uniform and independent on `Z/k`, `A = X + Y mod k`; schema `(A, X, Y)`.
pub fn group_sum_family(k: u32) -> Result<JointDistribution> {
    if !(2..=1 << 12).contains(&k) {
        return Err(Error::BadParameter(format!("group order {k} must be at least 2")));
    }
    let schema = VariableSchema::new(vec![
        Variable::new("A", k),
        Variable::new("X", k),
        Variable::new("Y", k),
    ])?;
    let p = q(1, k as i64 * k as i64);
    let entries = (0..k).flat_map(|x| (0..k).map(move |y| vec![(x + y) % k, x, y]));
    JointDistribution::new(schema, entries.map(|o| (o, p.clone())))
}

/// `Y` an exact copy of a biased bit `X`, `A` an independent biased bit.
/// Schema `(X, Y, A)`.
pub fn tight_violation_family(x_bias: Rational, a_bias: Rational) -> Result<JointDistribution> {
    for (name, b) in [("x_bias", &x_bias), ("a_bias", &a_bias)] {
        if !b.is_positive() || *b >= Rational::one() {
            return Err(Error::BadParameter(format!(
                "{name} = {} is not in (0, 1)",
                format_rational(b)
            )));
        }
    }
    let one = Rational::one();
    let pair = JointDistribution::new(
        VariableSchema::binary(&["X", "Y"])?,
        [(vec![0, 0], &one - &x_bias), (vec![1, 1], x_bias)],
    )?;
    let a = JointDistribution::new(
        VariableSchema::binary(&["A"])?,
        [(vec![0], &one - &a_bias), (vec![1], a_bias)],
    )?;
    pair.independent_join(&a)
}

/// Four binary variables `(A, X, Y, G)` with rows `0011, 0100, 1011, 1100`,
/// each of mass 1/4.
pub fn non_gk_example() -> JointDistribution {
    let schema = VariableSchema::binary(&["A", "X", "Y", "G"]).expect("valid schema");
    let rows = [[0, 0, 1, 1], [0, 1, 0, 0], [1, 0, 1, 1], [1, 1, 0, 0]];
    JointDistribution::new(schema, rows.iter().map(|r| (r.to_vec(), q(1, 4))))
        .expect("valid table")
}

/// Full-support table with masses `c_o / D`, where `D <= bound` and every
/// `c_o >= 1`. Deterministic in `seed`.
pub fn random_rational_distribution(seed: u64, schema: &VariableSchema, bound: u64) -> Result<JointDistribution> {
    let cells = schema.outcome_count();
    if bound < cells {
        return Err(Error::BadParameter(format!(
            "denominator bound {bound} is below the {cells} outcomes"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom = rng.gen_range(cells..=bound);
    // stars and bars: `cells - 1` distinct cut points in `1..denom`
    let mut cuts = rand::seq::index::sample(&mut rng, (denom - 1) as usize, (cells - 1) as usize)
        .into_iter()
        .map(|c| c as u64 + 1)
        .collect::<Vec<_>>();
    cuts.sort_unstable();
    cuts.push(denom);
    let mut prev = 0;
    let counts: Vec<u64> = cuts
        .into_iter()
        .map(|c| {
            let w = c - prev;
            prev = c;
            w
        })
        .collect();
    let d = BigInt::from(denom);
    let entries = schema
        .outcomes()
        .zip(counts)
        .map(|(o, c)| (o, Rational::new(BigInt::from(c), d.clone())));
    JointDistribution::new(schema.clone(), entries)
}

/// Like [`random_rational_distribution`] but each cell is dropped with
/// probability `1/2`, keeping at least one.
pub fn random_sparse_distribution(seed: u64, schema: &VariableSchema, bound: u64) -> Result<JointDistribution> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    let full = random_rational_distribution(seed, schema, bound)?;
    let mut kept: BTreeMap<Outcome, Rational> = full
        .support()
        .filter(|_| rng.gen_bool(0.5))
        .map(|(o, p)| (o.clone(), p.clone()))
        .collect();
    if kept.is_empty() {
        let (o, p) = full.support().next().expect("full support");
        kept.insert(o.clone(), p.clone());
    }
    let total = kept.values().cloned().fold(Rational::zero(), |a, b| a + b);
    JointDistribution::new(schema.clone(), kept.into_iter().map(|(o, p)| (o, p / &total)))
}

/// Names and parameters of every generator, for listings.
pub const CATALOG: &[(&str, &str)] = &[
    ("group-sum", "--k <int >= 2>"),
    ("kirkup", "--alpha --beta --gamma <(0,1)> --delta --epsilon <rational>"),
    ("intersection-violator", "--variant <1|2> --masses <p1,p2,p3,p4 summing to 1>"),
    ("tight", "--x-bias --a-bias <(0,1)>"),
    ("non-gk", ""),
    ("random", "--seed <u64> --cards <c1,c2,..> --bound <int> [--sparse]"),
    ("common-cause", "--input <pair file> [--supplied <terms file>] --name <label>"),
];
