//! The hand-picked basis of `Q_4(8)`: seven families `A`–`G` of monomials,
//! 55 in total, each listed in decreasing lexicographic order.

use crate::poly::{Monomial, Polynomial};

pub const FAMILY_NAMES: [char; 7] = ['A', 'B', 'C', 'D', 'E', 'F', 'G'];

const A: [[u32; 4]; 12] = [
    [7, 1, 0, 0], [7, 0, 1, 0], [7, 0, 0, 1], [1, 7, 0, 0], [1, 0, 7, 0], [1, 0, 0, 7],
    [0, 7, 1, 0], [0, 7, 0, 1], [0, 1, 7, 0], [0, 1, 0, 7], [0, 0, 7, 1], [0, 0, 1, 7],
];
const B: [[u32; 4]; 6] = [[3, 3, 1, 1], [3, 1, 3, 1], [3, 1, 1, 3], [1, 3, 3, 1], [1, 3, 1, 3], [1, 1, 3, 3]];
const C: [[u32; 4]; 12] = [
    [6, 1, 1, 0], [6, 1, 0, 1], [6, 0, 1, 1], [1, 6, 1, 0], [1, 6, 0, 1], [1, 1, 6, 0],
    [1, 1, 0, 6], [1, 0, 6, 1], [1, 0, 1, 6], [0, 6, 1, 1], [0, 1, 6, 1], [0, 1, 1, 6],
];
const D: [[u32; 4]; 6] = [[5, 3, 0, 0], [5, 0, 3, 0], [5, 0, 0, 3], [0, 5, 3, 0], [0, 5, 0, 3], [0, 0, 5, 3]];
const E: [[u32; 4]; 12] = [
    [5, 2, 1, 0], [5, 2, 0, 1], [5, 0, 2, 1], [2, 5, 1, 0], [2, 5, 0, 1], [2, 1, 5, 0],
    [2, 1, 0, 5], [2, 0, 5, 1], [2, 0, 1, 5], [0, 5, 2, 1], [0, 2, 5, 1], [0, 2, 1, 5],
];
const F: [[u32; 4]; 4] = [[5, 1, 1, 1], [1, 5, 1, 1], [1, 1, 5, 1], [1, 1, 1, 5]];
const G: [[u32; 4]; 3] = [[4, 2, 1, 1], [4, 1, 2, 1], [1, 4, 2, 1]];

/// Members of family `name` (`'A'`..=`'G'`), or `None` for other letters.
pub fn family(name: char) -> Option<Vec<Monomial>> {
    let rows: &[[u32; 4]] = match name.to_ascii_uppercase() {
        'A' => &A,
        'B' => &B,
        'C' => &C,
        'D' => &D,
        'E' => &E,
        'F' => &F,
        'G' => &G,
        _ => return None,
    };
    Some(rows.iter().map(|e| Monomial::new(e).expect("four variables")).collect())
}

/// All 55 monomials, family by family.
pub fn basis55() -> Vec<Monomial> {
    FAMILY_NAMES.iter().flat_map(|&c| family(c).expect("known family")).collect()
}

/// `s_X`, the sum of the members of family `X`.
pub fn family_sum(name: char) -> Option<Polynomial> {
    family(name).map(|ms| Polynomial::from_terms(4, ms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl::family_orbit;

    #[test]
    fn sizes_and_order() {
        let sizes: Vec<usize> = FAMILY_NAMES.iter().map(|&c| family(c).unwrap().len()).collect();
        assert_eq!(sizes, vec![12, 6, 12, 6, 12, 4, 3]);
        assert_eq!(basis55().len(), 55);
        for c in FAMILY_NAMES {
            let f = family(c).unwrap();
            assert!(f.windows(2).all(|w| w[0] > w[1]), "family {c} not decreasing");
            assert!(f.iter().all(|m| m.degree() == 8));
        }
        assert!(family('H').is_none());
    }

    #[test]
    fn full_families_are_orbits() {
        for (c, seed) in [('A', [7, 1, 0, 0]), ('B', [3, 3, 1, 1]), ('C', [6, 1, 1, 0]), ('F', [5, 1, 1, 1])] {
            assert_eq!(family(c).unwrap(), family_orbit(&Monomial::new(&seed).unwrap()));
        }
    }
}
