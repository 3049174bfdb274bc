use serde::{Deserialize, Serialize};

/// Floor division for possibly negative numerators.
pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// `Z(m,n) = ⌊m/2⌋⌊(m-1)/2⌋⌊n/2⌋⌊(n-1)/2⌋`, zero whenever `m` or `n` is 0.
pub fn zarankiewicz(m: usize, n: usize) -> i64 {
    let f = |k: usize| -> i64 {
        if k == 0 {
            return 0;
        }
        let k = k as i64;
        (k / 2) * ((k - 1) / 2)
    };
    f(m) * f(n)
}

/// `K=a,b,...` for part sizes, in the given order.
pub fn format_sizes(sizes: &[usize]) -> String {
    let body: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("K={}", body.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `K_{1,m,n}`
    K1mn,
    /// `K_{2,m,n}`
    K2mn,
    /// `K_{1,1,m,n}`
    K11mn,
}

impl Family {
    pub fn sizes(&self, m: usize, n: usize) -> Vec<usize> {
        match self {
            Family::K1mn => vec![1, m, n],
            Family::K2mn => vec![2, m, n],
            Family::K11mn => vec![1, 1, m, n],
        }
    }
}

/// Closed forms of Harborth's bound on the three families.
pub fn hc_value(family: Family, m: usize, n: usize) -> i64 {
    let (mi, ni) = (m as i64, n as i64);
    let half = (mi / 2) * (ni / 2);
    match family {
        Family::K1mn => zarankiewicz(m + 1, n + 1) - half,
        Family::K2mn => zarankiewicz(m + 2, n + 2) - mi * ni,
        Family::K11mn => zarankiewicz(m + 2, n + 2) - mi * ni + half,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zarankiewicz_examples() {
        assert_eq!(zarankiewicz(3, 3), 1);
        assert_eq!(zarankiewicz(5, 7), 36);
        assert_eq!(zarankiewicz(5, 6), 24);
        for n in 0..10 {
            assert_eq!(zarankiewicz(2, n), 0);
            assert_eq!(zarankiewicz(1, n), 0);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(hc_value(Family::K11mn, 4, 4), 24);
        assert_eq!(hc_value(Family::K11mn, 3, 4), 14);
        assert_eq!(hc_value(Family::K2mn, 3, 3), 7);
        assert_eq!(hc_value(Family::K11mn, 3, 3), 8);
        assert_eq!(hc_value(Family::K11mn, 4, 5), 38);
        assert_eq!(hc_value(Family::K11mn, 5, 5), 60);
    }

    #[test]
    fn floor_div_negative() {
        assert_eq!(floor_div(-1, 2), -1);
        assert_eq!(floor_div(7, 2), 3);
    }
}
