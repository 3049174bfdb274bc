//! Certified crossing numbers and the assumption object that supplies
//! crossing numbers to the bound formulas.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{hc_value, zarankiewicz, Family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourcedValue {
    pub value: i64,
    pub provenance: String,
}

fn sourced(value: i64, provenance: &str) -> SourcedValue {
    SourcedValue { value, provenance: provenance.to_string() }
}

/// Removes the listed fixed sizes from `sizes` (as a multiset); returns the
/// remainder when all were present.
fn strip(sizes: &[usize], fixed: &[usize]) -> Option<Vec<usize>> {
    let mut rest = sizes.to_vec();
    for f in fixed {
        let at = rest.iter().position(|s| s == f)?;
        rest.remove(at);
    }
    Some(rest)
}

fn single_rest(sizes: &[usize], fixed: &[usize]) -> Option<usize> {
    match strip(sizes, fixed)?.as_slice() {
        [n] => Some(*n),
        _ => None,
    }
}

/// Every registry entry matching `sizes`; overlapping patterns must agree.
pub fn registry_matches(sizes: &[usize]) -> Vec<SourcedValue> {
    let mut out = Vec::new();
    if sizes.contains(&0) {
        return out;
    }
    if let [a, b] = *sizes {
        if a.min(b) <= 6 {
            out.push(sourced(zarankiewicz(a, b), "Kleitman: cr(K_{m,n}) = Z(m,n) when min(m,n) <= 6"));
        }
    }
    if let Some(n) = single_rest(sizes, &[1, 3]) {
        out.push(sourced(hc_value(Family::K1mn, 3, n), "Asano: cr(K_{1,3,n}) = Z(4,n+1) - floor(n/2)"));
    }
    if let Some(n) = single_rest(sizes, &[2, 3]) {
        out.push(sourced(zarankiewicz(5, n + 2) - 3 * n as i64, "Asano: cr(K_{2,3,n}) = Z(5,n+2) - 3n"));
    }
    if let Some(n) = single_rest(sizes, &[1, 4]) {
        out.push(sourced(
            zarankiewicz(5, n + 1) - 2 * (n as i64 / 2),
            "Huang and Zhao: cr(K_{1,4,n}) = Z(5,n+1) - 2 floor(n/2)",
        ));
    }
    if let Some(n) = single_rest(sizes, &[2, 4]) {
        out.push(sourced(hc_value(Family::K2mn, 4, n), "Ho: cr(K_{2,4,n}) = Z(6,n+2) - 4n"));
    }
    if let Some(n) = single_rest(sizes, &[1, 1, 3]) {
        out.push(sourced(
            zarankiewicz(5, n) + (3 * n as i64) / 2,
            "Ho: cr(K_{1,1,3,n}) = Z(5,n) + floor(3n/2); also the odd/even lower bounds \
             with K_{1,4,n}, K_{2,3,n} and K_{5,n} values meet the upper bound",
        ));
    }
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    if sorted == [1, 1, 4, 4] {
        out.push(sourced(24, "even/even lower bound with cr(K_{5,7}) = 36 (Kleitman) meets the upper bound 24"));
    }
    out
}

/// Certified crossing number of `K_{sizes}` when a registry pattern applies.
pub fn known_value(sizes: &[usize]) -> Option<SourcedValue> {
    registry_matches(sizes).into_iter().next()
}

/// Which unproven conjectures a computation may use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    /// `cr(K_{m,n}) = Z(m,n)` for all `m, n`.
    pub zc: bool,
    /// Harborth's bound is exact on `K_{2,m,n}`.
    pub hc2mn: bool,
}

impl Assumptions {
    pub fn none() -> Assumptions {
        Assumptions::default()
    }

    pub fn labels(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.zc {
            v.push("ZC".to_string());
        }
        if self.hc2mn {
            v.push("HC2mn".to_string());
        }
        v
    }
}

/// Supplies crossing numbers: a user table, the registry, and values that
/// follow from the enabled assumptions, consulted in that order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrSource {
    pub assumptions: Assumptions,
    pub use_registry: bool,
    pub table: BTreeMap<Vec<usize>, i64>,
}

impl CrSource {
    /// Registry values only.
    pub fn registry() -> CrSource {
        CrSource { use_registry: true, ..CrSource::default() }
    }

    /// Registry values plus whatever the assumptions imply.
    pub fn assuming(assumptions: Assumptions) -> CrSource {
        CrSource { assumptions, use_registry: true, table: BTreeMap::new() }
    }

    /// Only values implied by the assumptions (no registry).
    pub fn formulas_only(assumptions: Assumptions) -> CrSource {
        CrSource { assumptions, use_registry: false, table: BTreeMap::new() }
    }

    /// A user-provided table keyed by part sizes (any order).
    pub fn from_table(entries: impl IntoIterator<Item = (Vec<usize>, i64)>) -> CrSource {
        let table = entries
            .into_iter()
            .map(|(mut k, v)| {
                k.sort_unstable();
                (k, v)
            })
            .collect();
        CrSource { table, ..CrSource::default() }
    }

    pub fn lookup(&self, sizes: &[usize]) -> Option<SourcedValue> {
        let mut key = sizes.to_vec();
        key.sort_unstable();
        if let Some(&v) = self.table.get(&key) {
            return Some(sourced(v, "user table"));
        }
        if self.use_registry {
            if let Some(v) = known_value(&key) {
                return Some(v);
            }
        }
        if self.assumptions.zc {
            if let [a, b] = *key.as_slice() {
                return Some(sourced(zarankiewicz(a, b), "assumed ZC"));
            }
            if let Some(rest) = strip(&key, &[1]) {
                if let [a, b] = *rest.as_slice() {
                    return Some(sourced(
                        hc_value(Family::K1mn, a, b),
                        "assumed ZC; the K_{1,m,n} lower bounds then meet the upper bound",
                    ));
                }
            }
        }
        if self.assumptions.hc2mn {
            if let Some(rest) = strip(&key, &[2]) {
                if let [a, b] = *rest.as_slice() {
                    return Some(sourced(hc_value(Family::K2mn, a, b), "assumed HC on K_{2,m,n}"));
                }
            }
        }
        None
    }
}
