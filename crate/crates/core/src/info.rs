//! Entropy profiles and Shannon information measures.
//!
//! Entropies are evaluated in floating point from exact marginal masses.
//! They are used for reporting and for the entropy inequalities only; CI
//! decisions feeding axiom logic go through the exact test in [`crate::dist`].

use std::fmt;

use serde::Serialize;

use crate::dist::JointDistribution;
use crate::error::{Error, Result};
use crate::scalar::{Exact, Real};
use crate::varset::VarSet;

/// Global tolerance for comparisons of information quantities.
pub const TOLERANCE: f64 = 1e-9;

/// Relative distance below which `exp H` is taken to be an exact integer.
pub const CEILING_NOISE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    Nats,
    Bits,
}

impl Units {
    pub fn name(self) -> &'static str {
        match self {
            Units::Nats => "nats",
            Units::Bits => "bits",
        }
    }
}

impl std::str::FromStr for Units {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nats" => Ok(Units::Nats),
            "bits" => Ok(Units::Bits),
            _ => Err(Error::BadParameter(format!("unknown units '{s}'"))),
        }
    }
}

fn tol<F: Real>(t: f64) -> F {
    F::from_f64(t).expect("tolerance is representable")
}

/// Entropies of all subsets of a named ground set.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropyProfile<F: Real = f64> {
    names: Vec<String>,
    /// indexed by subset bitmask; `h[0] = 0`
    h: Vec<F>,
    units: Units,
}

/// Shannon entropy, in nats, of every marginal of `d`.
pub fn entropy_profile<Q: Exact, F: Real>(d: &JointDistribution<Q>) -> EntropyProfile<F> {
    let n = d.num_vars();
    let h = VarSet::full(n)
        .subsets()
        .map(|s| {
            if s.is_empty() {
                return F::zero();
            }
            // BTreeMap iteration fixes the summation order
            d.marginal_masses(s)
                .values()
                .map(|p| {
                    let p: F = p.to_real();
                    -p * p.ln()
                })
                .fold(F::zero(), |acc, t| acc + t)
        })
        .collect();
    EntropyProfile {
        names: d.schema().names().map(str::to_string).collect(),
        h,
        units: Units::Nats,
    }
}

impl<F: Real> EntropyProfile<F> {
    /// Wraps raw values given in bitmask order.
    pub fn from_values(names: Vec<String>, h: Vec<F>, units: Units) -> Result<Self> {
        if h.len() != 1usize.checked_shl(names.len() as u32).unwrap_or(0) {
            return Err(Error::DimensionMismatch(format!(
                "{} entropy values for {} variables",
                h.len(),
                names.len()
            )));
        }
        if !h[0].is_zero() {
            return Err(Error::BadParameter("entropy of the empty set must be 0".into()));
        }
        Ok(EntropyProfile { names, h, units })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn units(&self) -> Units {
        self.units
    }

    pub fn h(&self, set: VarSet) -> F {
        self.h[set.0 as usize]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VarSet> {
        let mut set = VarSet::EMPTY;
        for n in names {
            let i = self.index_of(n.as_ref())?;
            if set.contains(i) {
                return Err(Error::DuplicateVariable(n.as_ref().to_string()));
            }
            set = set.with(i);
        }
        Ok(set)
    }

    /// Joint entropy of the named variables.
    pub fn entropy<S: AsRef<str>>(&self, names: &[S]) -> Result<F> {
        Ok(self.h(self.set_of(names)?))
    }

    /// Same profile expressed in other units.
    pub fn in_units(&self, units: Units) -> Self {
        let factor: F = match (self.units, units) {
            (a, b) if a == b => F::one(),
            (Units::Nats, Units::Bits) => F::one() / tol::<F>(std::f64::consts::LN_2),
            (Units::Bits, Units::Nats) => tol(std::f64::consts::LN_2),
            _ => unreachable!(),
        };
        EntropyProfile {
            names: self.names.clone(),
            h: self.h.iter().map(|&v| v * factor).collect(),
            units,
        }
    }

    /// `I(I:J|K) = h(IK) + h(JK) - h(IJK) - h(K)`.
    pub fn cmi(&self, i: VarSet, j: VarSet, k: VarSet) -> Result<F> {
        crate::dist::check_ci_sets(i, j, k, self.n())?;
        let ik = i.union(k);
        let jk = j.union(k);
        Ok(self.h(ik) + self.h(jk) - self.h(ik.union(jk)) - self.h(k))
    }

    fn distinct3(&self, a: usize, x: usize, y: usize) -> Result<()> {
        if a == x || a == y {
            return Err(Error::DuplicateVariable(self.names[a].clone()));
        }
        if x == y {
            return Err(Error::DuplicateVariable(self.names[x].clone()));
        }
        Ok(())
    }

    /// `I(a:x:y) = I(a:x) - I(a:x|y)`, by index.
    pub fn interaction(&self, a: usize, x: usize, y: usize) -> Result<F> {
        self.distinct3(a, x, y)?;
        let s = VarSet::singleton;
        Ok(self.cmi(s(a), s(x), VarSet::EMPTY)? - self.cmi(s(a), s(x), s(y))?)
    }

    /// The seven atoms of the three-variable information diagram, by index.
    pub fn diagram(&self, a: usize, x: usize, y: usize) -> Result<InfoDiagram3<F>> {
        self.distinct3(a, x, y)?;
        let s = VarSet::singleton;
        let (sa, sx, sy) = (s(a), s(x), s(y));
        let all = sa.union(sx).union(sy);
        let h = |v: VarSet| self.h(v);
        Ok(InfoDiagram3 {
            h_a_given_xy: h(all) - h(sx.union(sy)),
            h_x_given_ay: h(all) - h(sa.union(sy)),
            h_y_given_ax: h(all) - h(sa.union(sx)),
            i_ax_given_y: self.cmi(sa, sx, sy)?,
            i_ay_given_x: self.cmi(sa, sy, sx)?,
            i_xy_given_a: self.cmi(sx, sy, sa)?,
            i_axy: self.interaction(a, x, y)?,
            units: self.units,
        })
    }

    /// Monotonicity `h(S) <= h(S + e)` up to `tolerance`; returns the first violation.
    pub fn monotonicity_violation(&self, tolerance: f64) -> Option<(VarSet, VarSet)> {
        let t: F = tol(tolerance);
        let full = VarSet::full(self.n());
        full.subsets().find_map(|s| {
            full.difference(s)
                .iter()
                .map(|e| s.with(e))
                .find(|&big| self.h(s) > self.h(big) + t)
                .map(|big| (s, big))
        })
    }

    /// Local submodularity `h(Si) + h(Sj) >= h(Sij) + h(S)` up to `tolerance`.
    pub fn submodularity_violation(&self, tolerance: f64) -> Option<(VarSet, VarSet)> {
        let t: F = tol(tolerance);
        let full = VarSet::full(self.n());
        for s in full.subsets() {
            let rest: Vec<usize> = full.difference(s).iter().collect();
            for (k, &i) in rest.iter().enumerate() {
                for &j in &rest[k + 1..] {
                    let (si, sj) = (s.with(i), s.with(j));
                    if self.h(si) + self.h(sj) + t < self.h(si.union(sj)) + self.h(s) {
                        return Some((si, sj));
                    }
                }
            }
        }
        None
    }

    /// Entries for export: nonempty subsets in bitmask order, names sorted.
    pub fn entries(&self) -> Vec<(Vec<String>, F)> {
        VarSet::full(self.n())
            .subsets()
            .skip(1)
            .map(|s| {
                let mut names: Vec<String> = s.iter().map(|i| self.names[i].clone()).collect();
                names.sort();
                (names, self.h(s))
            })
            .collect()
    }
}

impl<F: Real + Serialize> EntropyProfile<F> {
    /// `{"units": "nats", "entropies": [{"subset": ["A", "X"], "value": 0.69}, ..]}`
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries()
            .into_iter()
            .map(|(subset, value)| serde_json::json!({ "subset": subset, "value": value }))
            .collect();
        serde_json::json!({ "units": self.units.name(), "entropies": entries })
    }
}

/// `I(I:J|K)` with variables given by name.
pub fn cond_mutual_info<F: Real, S: AsRef<str>>(
    p: &EntropyProfile<F>,
    i: &[S],
    j: &[S],
    k: &[S],
) -> Result<F> {
    p.cmi(p.set_of(i)?, p.set_of(j)?, p.set_of(k)?)
}

pub fn interaction_information<F: Real>(p: &EntropyProfile<F>, a: &str, x: &str, y: &str) -> Result<F> {
    p.interaction(p.index_of(a)?, p.index_of(x)?, p.index_of(y)?)
}

pub fn info_diagram3<F: Real>(p: &EntropyProfile<F>, a: &str, x: &str, y: &str) -> Result<InfoDiagram3<F>> {
    p.diagram(p.index_of(a)?, p.index_of(x)?, p.index_of(y)?)
}

/// Atoms of the information diagram of `(A, X, Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InfoDiagram3<F: Real = f64> {
    pub h_a_given_xy: F,
    pub h_x_given_ay: F,
    pub h_y_given_ax: F,
    pub i_ax_given_y: F,
    pub i_ay_given_x: F,
    pub i_xy_given_a: F,
    /// central atom; the only one that may be negative
    pub i_axy: F,
    pub units: Units,
}

impl<F: Real> InfoDiagram3<F> {
    /// Atoms in the order `H(A|XY), H(X|AY), H(Y|AX), I(A:X|Y), I(A:Y|X), I(X:Y|A), I(A:X:Y)`.
    pub fn atoms(&self) -> [F; 7] {
        [
            self.h_a_given_xy,
            self.h_x_given_ay,
            self.h_y_given_ax,
            self.i_ax_given_y,
            self.i_ay_given_x,
            self.i_xy_given_a,
            self.i_axy,
        ]
    }

    /// Sum of all atoms; equals `H(A, X, Y)`.
    pub fn total(&self) -> F {
        self.atoms().iter().fold(F::zero(), |acc, &v| acc + v)
    }
}

impl<F: Real> fmt::Display for InfoDiagram3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = [
            "H(A|X,Y)", "H(X|A,Y)", "H(Y|A,X)", "I(A:X|Y)", "I(A:Y|X)", "I(X:Y|A)", "I(A:X:Y)",
        ];
        for (label, v) in labels.iter().zip(self.atoms()) {
            writeln!(f, "  {label:<9} = {v:.12} {}", self.units.name())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatusVerdict {
    PremisesFail,
    Holds,
    Violated,
    /// `exp H(A)` sits just above an integer and the ceiling decides the outcome.
    BoundaryAmbiguous,
}

/// Outcome of the piecewise-linear inequality check on `(A, X, Y)`:
/// tightness plus `I(A:X) = I(A:Y) = 0` imply `H(X) = H(Y) >= log ceil(exp H(A))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MatusReport {
    pub verdict: MatusVerdict,
    pub premises_hold: bool,
    /// Conclusion evaluated regardless of the premises; `None` when the ceiling is ambiguous.
    pub conclusion_holds: Option<bool>,
    /// `H(X)` equals the bound within tolerance.
    pub equality: bool,
    pub h_a: f64,
    pub h_x: f64,
    pub h_y: f64,
    pub ceiling: u64,
    pub bound: f64,
}

enum Ceiling {
    Exact(u64),
    Ambiguous(u64),
}

fn guarded_ceiling(v: f64, tolerance: f64) -> Ceiling {
    let r = v.round();
    if (v - r).abs() <= CEILING_NOISE * r.max(1.0) {
        Ceiling::Exact(r as u64)
    } else if v > r && v - r <= tolerance {
        Ceiling::Ambiguous(r as u64)
    } else {
        Ceiling::Exact(v.ceil() as u64)
    }
}

pub fn matus_inequality_check<F: Real>(
    p: &EntropyProfile<F>,
    a: &str,
    x: &str,
    y: &str,
    tolerance: f64,
) -> Result<MatusReport> {
    let (ia, ix, iy) = (p.index_of(a)?, p.index_of(x)?, p.index_of(y)?);
    let d = p.diagram(ia, ix, iy)?;
    let f = |v: F| v.to_f64().unwrap_or(f64::NAN);
    let s = VarSet::singleton;
    let premises = [
        f(d.h_a_given_xy),
        f(d.h_x_given_ay),
        f(d.h_y_given_ax),
        f(p.cmi(s(ia), s(ix), VarSet::EMPTY)?),
        f(p.cmi(s(ia), s(iy), VarSet::EMPTY)?),
    ];
    let premises_hold = premises.iter().all(|&v| v <= tolerance);
    let (h_a, h_x, h_y) = (f(p.h(s(ia))), f(p.h(s(ix))), f(p.h(s(iy))));

    let (exp, log): (fn(f64) -> f64, fn(f64) -> f64) = match p.units() {
        Units::Nats => (f64::exp, f64::ln),
        Units::Bits => (f64::exp2, f64::log2),
    };
    let conclusion = |ceil: u64| {
        let bound = log(ceil as f64);
        (h_x - h_y).abs() <= tolerance && h_x >= bound - tolerance
    };
    let (ceiling, conclusion_holds) = match guarded_ceiling(exp(h_a), tolerance) {
        Ceiling::Exact(c) => (c, Some(conclusion(c))),
        Ceiling::Ambiguous(c) => {
            let (lo, hi) = (conclusion(c), conclusion(c + 1));
            (c, (lo == hi).then_some(lo))
        }
    };
    let bound = log(ceiling as f64);
    let verdict = match (premises_hold, conclusion_holds) {
        (false, _) => MatusVerdict::PremisesFail,
        (true, Some(true)) => MatusVerdict::Holds,
        (true, Some(false)) => MatusVerdict::Violated,
        (true, None) => MatusVerdict::BoundaryAmbiguous,
    };
    Ok(MatusReport {
        verdict,
        premises_hold,
        conclusion_holds,
        equality: (h_x - bound).abs() <= tolerance,
        h_a,
        h_x,
        h_y,
        ceiling,
        bound,
    })
}
