//! Elementary CI statements and CI structures over a ground set `{0, .., n-1}`.
//!
//! Global statements `<I:J|K>` are never stored; they are expanded into
//! elementary triples `<i:j|L>` for every `i in I`, `j in J` and
//! `K <= L <= IJK \ ij`.

mod axioms;
mod io;
mod orbits;
mod polymatroid;

use std::collections::BTreeSet;
use std::fmt;

use crate::dist::check_ci_sets;
use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_GROUND};

pub use axioms::{closure, satisfies_axiom, Axiom, AxiomVerdict, Instance, Rule, Violation};
pub use io::{read_catalog, read_structure, write_structure};
pub use orbits::{
    canonical_orbit_form, join_irreducibles, meet_irreducibles, orbit_count, permute,
};
pub use polymatroid::{polymatroid_ci, Polymatroid};

/// Elementary statement `<i:j|K>`, stored with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CIStatement {
    pub i: usize,
    pub j: usize,
    pub cond: VarSet,
}

impl CIStatement {
    pub fn new(i: usize, j: usize, cond: VarSet) -> Result<Self> {
        if i == j {
            return Err(Error::MalformedStatement(format!("i = j = {i}")));
        }
        if cond.contains(i) || cond.contains(j) {
            return Err(Error::MalformedStatement(format!(
                "conditioning set {cond:?} contains {i} or {j}"
            )));
        }
        if i.max(j) >= MAX_GROUND {
            return Err(Error::ElementOutOfRange {
                element: i.max(j),
                n: MAX_GROUND,
            });
        }
        Ok(CIStatement {
            i: i.min(j),
            j: i.max(j),
            cond,
        })
    }

    /// Internal constructor for arguments already known to be well-formed.
    pub(crate) fn mk(i: usize, j: usize, cond: VarSet) -> Self {
        debug_assert!(i != j && !cond.contains(i) && !cond.contains(j));
        CIStatement {
            i: i.min(j),
            j: i.max(j),
            cond,
        }
    }

    /// Every elementary statement over `[n]`, in sorted order.
    pub fn all(n: usize) -> impl Iterator<Item = CIStatement> {
        (0..n).flat_map(move |i| {
            (i + 1..n).flat_map(move |j| {
                VarSet::full(n)
                    .without(i)
                    .without(j)
                    .subsets()
                    .map(move |cond| CIStatement { i, j, cond })
            })
        })
    }

    /// Largest element mentioned by the statement.
    pub fn max_element(&self) -> usize {
        self.cond.iter().last().map_or(self.j, |k| k.max(self.j))
    }

    /// `<i:j|L>` mapped to `<i:j|N \ ijL>`.
    pub fn dual(&self, n: usize) -> CIStatement {
        let rest = VarSet::full(n)
            .difference(self.cond)
            .without(self.i)
            .without(self.j);
        CIStatement::mk(self.i, self.j, rest)
    }

    pub fn permute(&self, perm: &[usize]) -> CIStatement {
        CIStatement::mk(perm[self.i], perm[self.j], self.cond.map(perm))
    }
}

impl fmt::Debug for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}:{}|", self.i + 1, self.j + 1)?;
        for k in self.cond.iter() {
            write!(f, "{}", k + 1)?;
        }
        write!(f, ">")
    }
}

/// A set of elementary CI statements over `[n]`, iterated in sorted order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CIStructure {
    n: usize,
    statements: BTreeSet<CIStatement>,
}

impl CIStructure {
    pub fn empty(n: usize) -> Self {
        CIStructure {
            n,
            statements: BTreeSet::new(),
        }
    }

    /// All elementary statements over `[n]`.
    pub fn full(n: usize) -> Self {
        CIStructure {
            n,
            statements: CIStatement::all(n).collect(),
        }
    }

    pub fn from_statements<I: IntoIterator<Item = CIStatement>>(n: usize, stmts: I) -> Result<Self> {
        let mut s = CIStructure::empty(n);
        for st in stmts {
            if st.max_element() >= n {
                return Err(Error::ElementOutOfRange {
                    element: st.max_element(),
                    n,
                });
            }
            s.statements.insert(st);
        }
        Ok(s)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    pub fn statements(&self) -> impl Iterator<Item = &CIStatement> {
        self.statements.iter()
    }

    pub fn contains(&self, st: &CIStatement) -> bool {
        self.statements.contains(st)
    }

    /// Membership test for `<i:j|cond>`; malformed triples are never contained.
    pub fn holds(&self, i: usize, j: usize, cond: VarSet) -> bool {
        i != j
            && !cond.contains(i)
            && !cond.contains(j)
            && self.statements.contains(&CIStatement::mk(i, j, cond))
    }

    /// Inserts a statement; returns whether it was new.
    pub fn insert(&mut self, st: CIStatement) -> bool {
        debug_assert!(st.max_element() < self.n);
        self.statements.insert(st)
    }

    pub fn is_subset(&self, other: &CIStructure) -> bool {
        self.statements.is_subset(&other.statements)
    }

    pub fn intersection(&self, other: &CIStructure) -> CIStructure {
        CIStructure {
            n: self.n,
            statements: self
                .statements
                .intersection(&other.statements)
                .copied()
                .collect(),
        }
    }

    pub fn union(&self, other: &CIStructure) -> CIStructure {
        CIStructure {
            n: self.n,
            statements: self.statements.union(&other.statements).copied().collect(),
        }
    }

    /// Statement-wise dual; an involution.
    pub fn dual(&self) -> CIStructure {
        CIStructure {
            n: self.n,
            statements: self.statements.iter().map(|s| s.dual(self.n)).collect(),
        }
    }

    /// True iff every elementary consequence of `<I:J|K>` is present.
    pub fn holds_global(&self, i: VarSet, j: VarSet, k: VarSet) -> Result<bool> {
        Ok(expand_global(i, j, k, self.n)?
            .iter()
            .all(|st| self.statements.contains(st)))
    }
}

impl fmt::Debug for CIStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ", self.n)?;
        f.debug_set().entries(self.statements.iter()).finish()
    }
}

impl FromIterator<CIStatement> for CIStructure {
    /// Ground set size is inferred from the largest element mentioned.
    fn from_iter<T: IntoIterator<Item = CIStatement>>(iter: T) -> Self {
        let statements: BTreeSet<CIStatement> = iter.into_iter().collect();
        let n = statements
            .iter()
            .map(|s| s.max_element() + 1)
            .max()
            .unwrap_or(0);
        CIStructure { n, statements }
    }
}

/// Elementary expansion of the global statement `<I:J|K>` over `[n]`.
pub fn expand_global(i: VarSet, j: VarSet, k: VarSet, n: usize) -> Result<BTreeSet<CIStatement>> {
    check_ci_sets(i, j, k, n)?;
    let mut out = BTreeSet::new();
    for a in i.iter() {
        for b in j.iter() {
            let free = i.union(j).without(a).without(b);
            for extra in free.subsets() {
                out.insert(CIStatement::mk(a, b, k.union(extra)));
            }
        }
    }
    Ok(out)
}
