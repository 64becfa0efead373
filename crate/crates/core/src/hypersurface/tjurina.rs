//! Total Tjurina number bounds for plane curves.

use serde::Serialize;

/// `τ(d, r)_max = (d−1)² − r(d−r−1)`.
pub fn tjurina_bound(d: i64, r: i64) -> i64 {
    (d - 1) * (d - 1) - r * (d - r - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TjurinaClass {
    Free,
    NearlyFree,
    Neither,
}

/// Free iff `τ = τ_max` and `r < d/2`; nearly free iff `τ = τ_max − 1` and
/// `r ≤ d/2`.
pub fn classify_by_tjurina(tau: i64, d: i64, r: i64) -> TjurinaClass {
    let bound = tjurina_bound(d, r);
    if tau == bound && 2 * r < d {
        TjurinaClass::Free
    } else if tau == bound - 1 && 2 * r <= d {
        TjurinaClass::NearlyFree
    } else {
        TjurinaClass::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(tjurina_bound(3, 1), 3);
        assert_eq!(tjurina_bound(4, 2), 7);
        assert_eq!(classify_by_tjurina(3, 3, 1), TjurinaClass::Free);
        assert_eq!(classify_by_tjurina(6, 4, 2), TjurinaClass::NearlyFree);
        assert_eq!(classify_by_tjurina(0, 3, 2), TjurinaClass::Neither);
    }
}
