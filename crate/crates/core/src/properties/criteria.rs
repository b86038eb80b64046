//! Properties of coset bitrades read off the group elements.

use std::collections::HashMap;

use crate::group::{pow_mod, Group};
use crate::latin::GroupTripleInput;

/// Solutions of `a^i b^j c^k = 1` with `i < ord a`, `j < ord b`,
/// `k < ord c`, in lexicographic order.
pub fn thin_solutions(input: &GroupTripleInput) -> Vec<[u64; 3]> {
    let g = &input.group;
    let powers = |x| {
        let n = g.order_of(x);
        let mut out = Vec::with_capacity(n as usize);
        let mut y = g.identity();
        for _ in 0..n {
            out.push(y.clone());
            y = g.mul_unchecked(&y, x);
        }
        out
    };
    let (pa, pb, pc) = (powers(&input.a), powers(&input.b), powers(&input.c));
    let c_exp: HashMap<_, u64> = pc.iter().enumerate().map(|(k, x)| (x.clone(), k as u64)).collect();
    let mut out = Vec::new();
    for (i, x) in pa.iter().enumerate() {
        for (j, y) in pb.iter().enumerate() {
            let need = g.inverse(&g.mul_unchecked(x, y));
            if let Some(&k) = c_exp.get(&need) {
                out.push([i as u64, j as u64, k]);
            }
        }
    }
    out
}

/// Thin iff the only solutions are `(0,0,0)` and `(1,1,1)`. Returns the
/// verdict and the smallest other solution.
pub fn group_thin_criterion(input: &GroupTripleInput) -> (bool, Option<[u64; 3]>) {
    let witness = thin_solutions(input).into_iter().find(|s| *s != [0, 0, 0] && *s != [1, 1, 1]);
    (witness.is_none(), witness)
}

/// `|C ∩ a⁻¹Ca|`; the bitrade is orthogonal iff this is 1.
pub fn conjugate_intersection(input: &GroupTripleInput) -> usize {
    let g = &input.group;
    let c = g.generated_subgroup(&input.c);
    c.intersection_size(&g.conjugate_subgroup(&c, &input.a))
}

pub fn group_orthogonal_criterion(input: &GroupTripleInput) -> bool {
    conjugate_intersection(input) == 1
}

/// Common order of `a`, `b`, `c`, if they agree.
pub fn group_homogeneity(input: &GroupTripleInput) -> Option<u64> {
    let g: &Group = &input.group;
    let k = g.order_of(&input.a);
    (g.order_of(&input.b) == k && g.order_of(&input.c) == k).then_some(k)
}

/// Solutions `(i, j)`, `0 ≤ i, j < q`, of
/// `r^j + r^(j-1) ≡ r^(i+j-1) + 1 (mod p)`, exponents taken mod `q`.
pub fn pq_thin_solutions(p: u64, q: u64, r: u64) -> Vec<(u64, u64)> {
    let pw = |e: u64| pow_mod(r, e % q, p);
    let mut out = Vec::new();
    for i in 0..q {
        for j in 0..q {
            let lhs = (pw(j) + pw(j + q - 1)) % p;
            let rhs = (pw(i + j + q - 1) + 1) % p;
            if lhs == rhs {
                out.push((i, j));
            }
        }
    }
    out
}

/// The pq coset bitrade is thin iff the congruence has only the solutions
/// `(0,0)` and `(1,1)`.
pub fn pq_thin_predicate(p: u64, q: u64, r: u64) -> bool {
    pq_thin_solutions(p, q, r) == [(0, 0), (1, 1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_predicate_examples() {
        assert!(pq_thin_predicate(7, 3, 2));
        assert!(pq_thin_predicate(67, 11, 14));
        let sols = pq_thin_solutions(23, 11, 4);
        assert!(!pq_thin_predicate(23, 11, 4));
        assert!(sols.contains(&(4, 6)));
        // 4^6 + 4^5 ≡ 4^9 + 1 (mod 23)
        assert_eq!((pow_mod(4, 6, 23) + pow_mod(4, 5, 23)) % 23, (pow_mod(4, 9, 23) + 1) % 23);
        assert_eq!(sols, [(0, 0), (1, 1), (2, 7), (4, 6), (5, 10), (6, 8)]);
    }
}
