use std::collections::BTreeMap;

use num_traits::Zero;

use super::LinComb;

/// Exact rank of a family of vectors given as sparse linear combinations.
pub fn rank<B: Ord + Clone>(vectors: &[LinComb<B>]) -> usize {
    // Rows keyed by pivot; a row's pivot is its smallest basis element.
    let mut rows: BTreeMap<B, LinComb<B>> = BTreeMap::new();
    for v in vectors {
        let mut v = v.clone();
        while let Some((pivot, c)) = v.iter().next().map(|(b, c)| (b.clone(), c.clone())) {
            match rows.get(&pivot) {
                Some(row) => {
                    let factor = -(c / row.coeff(&pivot));
                    v.add_scaled(row, &factor);
                }
                None => {
                    debug_assert!(!c.is_zero());
                    rows.insert(pivot, v);
                    break;
                }
            }
        }
    }
    rows.len()
}
