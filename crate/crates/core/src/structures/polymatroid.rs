use num_rational::BigRational;

use super::{CIStatement, CIStructure};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Exact};
use crate::varset::{VarSet, MAX_GROUND};

/// Normalized, monotone, submodular rank function on subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polymatroid<Q: Exact = BigRational> {
    n: usize,
    /// indexed by subset bitmask
    rank: Vec<Q>,
}

impl<Q: Exact> Polymatroid<Q> {
    /// Values are given in bitmask order: `values[m]` is the rank of the set with mask `m`.
    pub fn from_rank_table(n: usize, values: Vec<Q>) -> Result<Self> {
        if n > 20 {
            return Err(Error::BadParameter(format!("ground set of size {n} is too large")));
        }
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch(format!(
                "{} rank values for 2^{n} subsets",
                values.len()
            )));
        }
        let p = Polymatroid { n, rank: values };
        p.check()?;
        Ok(p)
    }

    fn from_fn(n: usize, f: impl Fn(VarSet) -> Q) -> Result<Self> {
        let values = VarSet::full(n).subsets().map(f).collect();
        Self::from_rank_table(n, values)
    }

    /// `r(S) = min(|S|, rank)`.
    pub fn uniform_matroid(rank: usize, n: usize) -> Result<Self> {
        Self::from_fn(n, |s| Q::from_i64(s.len().min(rank) as i64))
    }

    /// `r(S) = |S|`.
    pub fn free_matroid(n: usize) -> Result<Self> {
        Self::from_fn(n, |s| Q::from_i64(s.len() as i64))
    }

    /// Rank of each union of subspaces, where subspace `e` is spanned by the
    /// rows of `generators[e]`.
    pub fn from_subspace_generators(generators: &[Vec<Vec<Q>>]) -> Result<Self> {
        let n = generators.len();
        if n > MAX_GROUND {
            return Err(Error::BadParameter("too many subspaces".into()));
        }
        let dim = generators
            .iter()
            .flat_map(|g| g.iter().map(Vec::len))
            .next()
            .unwrap_or(0);
        for (e, g) in generators.iter().enumerate() {
            if let Some(row) = g.iter().find(|r| r.len() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "subspace {e} has a generator of length {}, expected {dim}",
                    row.len()
                )));
            }
        }
        Self::from_fn(n, |s| {
            let rows: Vec<Vec<Q>> = s.iter().flat_map(|e| generators[e].iter().cloned()).collect();
            Q::from_i64(row_rank(rows) as i64)
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self, set: VarSet) -> &Q {
        &self.rank[set.0 as usize]
    }

    /// Integer-valued with unit increments.
    pub fn is_matroid(&self) -> bool {
        let one = Q::one();
        self.rank.iter().all(|r| r.is_integer_valued())
            && VarSet::full(self.n).subsets().all(|s| {
                (0..self.n)
                    .filter(|&e| !s.contains(e))
                    .all(|e| self.rank(s.with(e)).clone() - self.rank(s).clone() <= one)
            })
    }

    fn check(&self) -> Result<()> {
        let full = VarSet::full(self.n);
        if !self.rank(VarSet::EMPTY).is_zero() {
            return Err(Error::NotNormalized(format_rational(self.rank(VarSet::EMPTY))));
        }
        for s in full.subsets() {
            if self.rank(s).is_negative() {
                return Err(Error::NegativeRank(s.iter().collect()));
            }
            for e in full.difference(s).iter() {
                if self.rank(s) > self.rank(s.with(e)) {
                    return Err(Error::NotMonotone {
                        subset: s.iter().collect(),
                        superset: s.with(e).iter().collect(),
                    });
                }
            }
            // local submodularity r(Si) + r(Sj) >= r(Sij) + r(S) implies the global form
            let rest: Vec<usize> = full.difference(s).iter().collect();
            for (a, &i) in rest.iter().enumerate() {
                for &j in &rest[a + 1..] {
                    let lhs = self.rank(s.with(i)).clone() + self.rank(s.with(j)).clone();
                    let rhs = self.rank(s.with(i).with(j)).clone() + self.rank(s).clone();
                    if lhs < rhs {
                        return Err(Error::NotSubmodular {
                            left: s.with(i).iter().collect(),
                            right: s.with(j).iter().collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rank of a list of rows via exact Gaussian elimination.
fn row_rank<Q: Exact>(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let head = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let factor = rows[r][c].clone() / head.clone();
            for cc in c..cols {
                let delta = factor.clone() * rows[rank][cc].clone();
                rows[r][cc] = rows[r][cc].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Statements `<i:j|K>` with `r(iK) + r(jK) = r(ijK) + r(K)`.
pub fn polymatroid_ci<Q: Exact>(p: &Polymatroid<Q>) -> CIStructure {
    let mut s = CIStructure::empty(p.n);
    for st in CIStatement::all(p.n) {
        let k = st.cond;
        let lhs = p.rank(k.with(st.i)).clone() + p.rank(k.with(st.j)).clone();
        let rhs = p.rank(k.with(st.i).with(st.j)).clone() + p.rank(k).clone();
        if lhs == rhs {
            s.insert(st);
        }
    }
    s
}
