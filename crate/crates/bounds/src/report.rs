use serde::{Deserialize, Serialize};

use crate::{format_sizes, hc_value, known_value, theorem_lower_bound, Assumptions, CrSource, Family, Theorem};

pub const CSV_HEADER: [&str; 7] = ["m", "n", "lower", "lower_source", "assumptions", "upper", "status"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerEntry {
    pub source: String,
    pub assumptions: Vec<String>,
    pub value: i64,
    pub floored: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperEntry {
    pub source: String,
    pub value: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    Gap,
}

/// Bounds on `cr(K_{1,1,m,n})` for one cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub m: usize,
    pub n: usize,
    pub lower_bounds: Vec<LowerEntry>,
    pub best_lower: LowerEntry,
    pub upper: UpperEntry,
    pub status: Status,
    pub gap: i64,
}

impl BoundReport {
    pub fn csv_record(&self) -> [String; 7] {
        let assumptions = if self.best_lower.assumptions.is_empty() {
            "none".to_string()
        } else {
            self.best_lower.assumptions.join("+")
        };
        [
            self.m.to_string(),
            self.n.to_string(),
            self.best_lower.value.to_string(),
            self.best_lower.source.clone(),
            assumptions,
            self.upper.value.to_string(),
            match self.status {
                Status::Exact => "exact".into(),
                Status::Gap => "gap".into(),
            },
        ]
    }
}

fn assumptions_used(provenances: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    if provenances.iter().any(|p| p.starts_with("assumed ZC")) {
        out.push("ZC".to_string());
    }
    if provenances.iter().any(|p| p.starts_with("assumed HC")) {
        out.push("HC2mn".to_string());
    }
    out
}

/// Bound report for one `K_{1,1,m,n}`.
pub fn cell_report(m: usize, n: usize, assumptions: Assumptions) -> BoundReport {
    let src = CrSource::assuming(assumptions);
    let mut lower = Vec::new();

    let (thm, swap) = Theorem::for_parity(m, n);
    let (a, b) = if swap { (n, m) } else { (m, n) };
    if let Ok(v) = theorem_lower_bound(thm, a, b, &src) {
        let provs: Vec<&str> = v.inputs.iter().map(|(_, s)| s.provenance.as_str()).collect();
        let inputs: Vec<String> = v.inputs.iter().map(|(spec, s)| format!("{spec}={}", s.value)).collect();
        lower.push(LowerEntry {
            source: format!("parity-case-{} bound ({})", thm.number(), inputs.join(" ")),
            assumptions: assumptions_used(&provs),
            value: v.value,
            floored: v.floored,
        });
    }
    if let Some(v) = known_value(&[1, 1, m, n]) {
        lower.push(LowerEntry {
            source: format!("registry: {}", v.provenance),
            assumptions: Vec::new(),
            value: v.value,
            floored: false,
        });
    }
    if let Some(v) = src.lookup(&[m + 1, n + 1]) {
        lower.push(LowerEntry {
            source: format!("subgraph {}", format_sizes(&[m + 1, n + 1])),
            assumptions: assumptions_used(&[v.provenance.as_str()]),
            value: v.value,
            floored: false,
        });
    }
    lower.push(LowerEntry { source: "trivial".into(), assumptions: Vec::new(), value: 0, floored: false });

    let best = lower
        .iter()
        .fold(None::<&LowerEntry>, |acc, e| match acc {
            Some(b) if b.value >= e.value => Some(b),
            _ => Some(e),
        })
        .cloned()
        .expect("at least the trivial bound");
    let upper =
        UpperEntry { source: "Harborth upper bound (cylinder drawing)".into(), value: hc_value(Family::K11mn, m, n) };
    let gap = upper.value - best.value;
    BoundReport {
        m,
        n,
        lower_bounds: lower,
        best_lower: best,
        upper,
        status: if gap == 0 { Status::Exact } else { Status::Gap },
        gap,
    }
}

/// Reports for every cell of the grid, rows ordered by `m` then `n`.
pub fn status_report(
    m_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    assumptions: Assumptions,
) -> Vec<BoundReport> {
    m_range
        .flat_map(|m| n_range.clone().map(move |n| (m, n)))
        .filter(|&(m, n)| m >= 1 && n >= 1)
        .map(|(m, n)| cell_report(m, n, assumptions))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1144_is_exact_without_assumptions() {
        let r = cell_report(4, 4, Assumptions::none());
        assert_eq!(r.status, Status::Exact);
        assert_eq!(r.best_lower.value, 24);
        assert!(r.best_lower.source.starts_with("parity-case-1"));
        assert!(r.best_lower.assumptions.is_empty());
    }

    #[test]
    fn csv_record_shape() {
        let r = cell_report(3, 2, Assumptions::none());
        let rec = r.csv_record();
        assert_eq!(rec[0], "3");
        assert_eq!(rec[6], "exact");
    }
}
