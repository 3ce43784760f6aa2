//! Symmetric-group orbits and lattice irreducibles of CI structure families.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;

use super::{CIStatement, CIStructure};
use crate::error::{Error, Result};

/// Image of `s` under the relabeling `e -> perm[e]`.
pub fn permute(s: &CIStructure, perm: &[usize]) -> CIStructure {
    debug_assert_eq!(perm.len(), s.ground_size());
    CIStructure {
        n: s.n,
        statements: s.statements.iter().map(|st| st.permute(perm)).collect(),
    }
}

/// Lexicographically least relabeling of `s`, comparing sorted statement lists.
pub fn canonical_orbit_form(s: &CIStructure) -> CIStructure {
    let n = s.ground_size();
    let mut best: Option<Vec<CIStatement>> = None;
    for perm in (0..n).permutations(n) {
        let mut image: Vec<CIStatement> = s.statements.iter().map(|st| st.permute(&perm)).collect();
        image.sort_unstable();
        if best.as_ref().map_or(true, |b| image < *b) {
            best = Some(image);
        }
    }
    CIStructure {
        n,
        statements: best.unwrap_or_default().into_iter().collect(),
    }
}

fn common_ground(family: &[CIStructure]) -> Result<Option<usize>> {
    let Some(first) = family.first() else {
        return Ok(None);
    };
    for s in family {
        if s.ground_size() != first.ground_size() {
            return Err(Error::MixedGroundSets(first.ground_size(), s.ground_size()));
        }
    }
    Ok(Some(first.ground_size()))
}

/// Number of distinct permutational types in the family.
pub fn orbit_count(family: &[CIStructure]) -> Result<usize> {
    common_ground(family)?;
    let forms: HashSet<CIStructure> = family.iter().map(canonical_orbit_form).collect();
    Ok(forms.len())
}

/// Dense bitset encoding, for pairwise lattice work on large families.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn meet(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn join(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Encoded {
    members: Vec<CIStructure>,
    bits: Vec<Bits>,
    words: usize,
}

fn encode(family: &[CIStructure]) -> Result<Encoded> {
    let n = common_ground(family)?.unwrap_or(0);
    let index: HashMap<CIStatement, usize> =
        CIStatement::all(n).enumerate().map(|(k, s)| (s, k)).collect();
    let words = index.len().div_ceil(64).max(1);
    let members: Vec<CIStructure> = family
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let bits = members
        .iter()
        .map(|s| {
            let mut b = vec![0u64; words];
            for st in s.statements() {
                let k = index[st];
                b[k / 64] |= 1 << (k % 64);
            }
            Bits(b)
        })
        .collect();
    Ok(Encoded {
        members,
        bits,
        words,
    })
}

fn check_meet_closed(enc: &Encoded) -> Result<HashMap<Bits, usize>> {
    let lookup: HashMap<Bits, usize> = enc
        .bits
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, b)| (b, k))
        .collect();
    for a in 0..enc.bits.len() {
        for b in a + 1..enc.bits.len() {
            if !lookup.contains_key(&enc.bits[a].meet(&enc.bits[b])) {
                return Err(Error::NotMeetClosed(a, b));
            }
        }
    }
    Ok(lookup)
}

/// Members that are not the intersection of all strictly larger members.
///
/// The family must be closed under pairwise intersection; duplicate members
/// are merged first and `NotMeetClosed` indices refer to the sorted,
/// deduplicated family. The maximum element, when it exists, is excluded.
/// A maximal member of a family without maximum is irreducible.
pub fn meet_irreducibles(family: &[CIStructure]) -> Result<Vec<CIStructure>> {
    let enc = encode(family)?;
    check_meet_closed(&enc)?;
    let count = enc.bits.len();
    let mut out = Vec::new();
    for s in 0..count {
        let mut above = (0..count).filter(|&t| t != s && enc.bits[s].is_subset(&enc.bits[t]));
        let Some(first) = above.next() else {
            let is_top = (0..count).all(|t| enc.bits[t].is_subset(&enc.bits[s]));
            if !is_top {
                out.push(enc.members[s].clone());
            }
            continue;
        };
        let meet = above.fold(enc.bits[first].clone(), |acc, t| acc.meet(&enc.bits[t]));
        if meet != enc.bits[s] {
            out.push(enc.members[s].clone());
        }
    }
    Ok(out)
}

/// Members that are not the lattice join of all strictly smaller members.
///
/// The join of a set is the least member containing its union; the family
/// must be meet-closed, and the minimum element is excluded.
pub fn join_irreducibles(family: &[CIStructure]) -> Result<Vec<CIStructure>> {
    let enc = encode(family)?;
    check_meet_closed(&enc)?;
    let count = enc.bits.len();
    let mut out = Vec::new();
    for s in 0..count {
        let below: Vec<usize> = (0..count)
            .filter(|&t| t != s && enc.bits[t].is_subset(&enc.bits[s]))
            .collect();
        if below.is_empty() {
            let is_bottom = (0..count).all(|t| enc.bits[s].is_subset(&enc.bits[t]));
            if !is_bottom {
                out.push(enc.members[s].clone());
            }
            continue;
        }
        let union = below
            .iter()
            .fold(Bits(vec![0; enc.words]), |acc, &t| acc.join(&enc.bits[t]));
        // least member above the union; `s` itself is a candidate
        let join = (0..count)
            .filter(|&t| union.is_subset(&enc.bits[t]))
            .fold(enc.bits[s].clone(), |acc, t| acc.meet(&enc.bits[t]));
        if join != enc.bits[s] {
            out.push(enc.members[s].clone());
        }
    }
    Ok(out)
}
