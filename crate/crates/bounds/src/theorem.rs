use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::{floor_div, format_sizes, BoundsError, CrSource, SourcedValue};

/// A lower bound evaluated exactly, with the integer it certifies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub numer: i64,
    pub denom: i64,
    /// The certified integer: the exact value, floored when non-integral.
    pub value: i64,
    /// Set when the exact value was not an integer and had to be floored.
    pub floored: bool,
    /// Crossing numbers consumed, keyed by graph spec.
    pub inputs: Vec<(String, SourcedValue)>,
}

impl BoundValue {
    fn from_ratio(r: Ratio<i64>, inputs: Vec<(String, SourcedValue)>) -> BoundValue {
        BoundValue {
            numer: *r.numer(),
            denom: *r.denom(),
            value: r.floor().to_integer(),
            floored: !r.is_integer(),
            inputs,
        }
    }

    pub fn exact(&self) -> Ratio<i64> {
        Ratio::new(self.numer, self.denom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PriorKind {
    /// `cr(K_{1,m,n}) >= cr(K_{m+1,n+1}) - ⌊(n/m)⌊m/2⌋⌊(m+1)/2⌋⌋`
    A10,
    /// `m` even: `cr(K_{1,m,n}) >= ½(cr(K_{m+1,n+2}) + cr(K_{m+1,n}) - (m/2)(m/2+n-1))`
    A4,
    /// `m, n` odd: `cr(K_{1,m,n}) >= ½(cr(K_{m+2,n}) + cr(K_{m,n+2}) - ⌊m/2⌋² - ⌊n/2⌋²)`
    A6,
}

/// The three parity cases of the `K_{1,1,m,n}` lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    /// `m, n` even.
    One,
    /// `m, n` odd.
    Two,
    /// `m` even, `n` odd.
    Three,
}

impl Theorem {
    pub fn from_number(k: u8) -> Option<Theorem> {
        match k {
            1 => Some(Theorem::One),
            2 => Some(Theorem::Two),
            3 => Some(Theorem::Three),
            _ => None,
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
            Theorem::Three => 3,
        }
    }

    /// The case covering `K_{1,1,m,n}` and whether `m` and `n` must be
    /// swapped to reach it.
    pub fn for_parity(m: usize, n: usize) -> (Theorem, bool) {
        match (m % 2, n % 2) {
            (0, 0) => (Theorem::One, false),
            (1, 1) => (Theorem::Two, false),
            (0, 1) => (Theorem::Three, false),
            _ => (Theorem::Three, true),
        }
    }

    fn check(&self, m: usize, n: usize) -> Result<(), BoundsError> {
        let ok = match self {
            Theorem::One => m.is_multiple_of(2) && n.is_multiple_of(2),
            Theorem::Two => m % 2 == 1 && n % 2 == 1,
            Theorem::Three => m.is_multiple_of(2) && n % 2 == 1,
        };
        if ok && m >= 1 && n >= 1 {
            Ok(())
        } else {
            Err(BoundsError::WrongParity(format!("case {} does not cover m={m}, n={n}", self.number())))
        }
    }
}

struct Fetch<'a> {
    src: &'a CrSource,
    inputs: Vec<(String, SourcedValue)>,
}

impl Fetch<'_> {
    fn cr(&mut self, sizes: &[usize]) -> Result<i64, BoundsError> {
        let spec = format_sizes(sizes);
        let v = self.src.lookup(sizes).ok_or_else(|| BoundsError::MissingValue(spec.clone()))?;
        let value = v.value;
        if !self.inputs.iter().any(|(s, _)| *s == spec) {
            self.inputs.push((spec, v));
        }
        Ok(value)
    }
}

/// Evaluates one of the earlier `K_{1,m,n}` lower bounds.
pub fn prior_lower_bound(kind: PriorKind, m: usize, n: usize, src: &CrSource) -> Result<BoundValue, BoundsError> {
    if m == 0 || n == 0 {
        return Err(BoundsError::Invalid("m and n must be positive".into()));
    }
    let mut f = Fetch { src, inputs: Vec::new() };
    let (mi, ni) = (m as i64, n as i64);
    let r = match kind {
        PriorKind::A10 => {
            let base = f.cr(&[m + 1, n + 1])?;
            let t = floor_div(ni * (mi / 2) * ((mi + 1) / 2), mi);
            Ratio::from_integer(base - t)
        }
        PriorKind::A4 => {
            if !m.is_multiple_of(2) {
                return Err(BoundsError::WrongParity(format!("needs m even, got m={m}")));
            }
            let a = f.cr(&[m + 1, n + 2])?;
            let b = f.cr(&[m + 1, n])?;
            Ratio::new(a + b - (mi / 2) * (mi / 2 + ni - 1), 2)
        }
        PriorKind::A6 => {
            if m % 2 != 1 || n % 2 != 1 {
                return Err(BoundsError::WrongParity(format!("needs m, n odd, got m={m}, n={n}")));
            }
            let a = f.cr(&[m + 2, n])?;
            let b = f.cr(&[m, n + 2])?;
            Ratio::new(a + b - (mi / 2).pow(2) - (ni / 2).pow(2), 2)
        }
    };
    Ok(BoundValue::from_ratio(r, f.inputs))
}

/// Evaluates the `K_{1,1,m,n}` lower bound of the given parity case.
pub fn theorem_lower_bound(thm: Theorem, m: usize, n: usize, src: &CrSource) -> Result<BoundValue, BoundsError> {
    thm.check(m, n)?;
    let mut f = Fetch { src, inputs: Vec::new() };
    let (mi, ni) = (m as i64, n as i64);
    let r = match thm {
        Theorem::One => {
            let a = f.cr(&[m + 1, n + 3])?;
            let b = f.cr(&[m + 3, n + 1])?;
            Ratio::from_integer(a + b - mi * ni) / 2 - Ratio::new(mi * mi + ni * ni, 8)
        }
        Theorem::Two => {
            let a = f.cr(&[1, m + 1, n + 1])?;
            let b = f.cr(&[2, m, n])?;
            (Ratio::from_integer(a + b + 1) - Ratio::new((mi + 1) * (ni + 1), 4)) / 2
        }
        Theorem::Three => {
            let a = f.cr(&[m + 1, n + 2])?;
            let b = f.cr(&[m + 3, n + 2])?;
            let c = f.cr(&[2, m, n])?;
            (Ratio::from_integer(a + b + 2 * c - mi * (ni + 1)) - Ratio::new((ni + 1).pow(2), 4)) / 4
        }
    };
    Ok(BoundValue::from_ratio(r, f.inputs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Assumptions;

    fn zc() -> CrSource {
        CrSource::formulas_only(Assumptions { zc: true, hc2mn: false })
    }

    #[test]
    fn prior_examples_under_zc() {
        assert_eq!(prior_lower_bound(PriorKind::A10, 4, 4, &zc()).unwrap().value, 12);
        assert_eq!(prior_lower_bound(PriorKind::A4, 4, 5, &zc()).unwrap().value, 20);
        assert_eq!(prior_lower_bound(PriorKind::A6, 3, 3, &zc()).unwrap().value, 3);
        assert_eq!(prior_lower_bound(PriorKind::A4, 3, 5, &zc()).unwrap_err().code(), "WRONG_PARITY");
    }

    #[test]
    fn theorem_examples() {
        let one = theorem_lower_bound(Theorem::One, 4, 4, &CrSource::registry()).unwrap();
        assert_eq!((one.value, one.floored), (24, false));
        let two = CrSource::from_table([(vec![1, 4, 4], 12), (vec![2, 3, 3], 7)]);
        assert_eq!(theorem_lower_bound(Theorem::Two, 3, 3, &two).unwrap().value, 8);
        let three = CrSource::from_table([(vec![5, 5], 16), (vec![7, 5], 36), (vec![2, 4, 3], 12)]);
        assert_eq!(theorem_lower_bound(Theorem::Three, 4, 3, &three).unwrap().value, 14);
    }

    #[test]
    fn errors() {
        let e = theorem_lower_bound(Theorem::One, 3, 4, &CrSource::registry()).unwrap_err();
        assert_eq!(e.code(), "WRONG_PARITY");
        let e = theorem_lower_bound(Theorem::One, 8, 8, &CrSource::registry()).unwrap_err();
        assert_eq!(e, BoundsError::MissingValue("K=9,11".into()));
    }

    #[test]
    fn non_integral_values_are_flagged() {
        let src = CrSource::from_table([(vec![3, 7], 10), (vec![5, 5], 16)]);
        let b = theorem_lower_bound(Theorem::One, 2, 4, &src).unwrap();
        assert_eq!(b.exact(), Ratio::new(13, 2));
        assert!(b.floored);
        assert_eq!(b.value, 6);
    }
}
