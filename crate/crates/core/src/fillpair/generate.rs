//! Enumeration of filling pairs with a given number of crossings.
//!
//! Crossings are numbered in the order `α` meets them. A map is fixed by the
//! order in which `β` meets them (starting at crossing 0) and by the side
//! from which `β` crosses `α` at each crossing. Two simple closed curves in
//! minimal position bound no disk bigon, so at most one bigon is kept and it
//! must hold the puncture.

use super::map::{compute_faces, genus_of, CombinatorialMap, Curve};
use crate::error::Result;

const ALPHA_OUT: usize = 0;
const BETA_OUT: usize = 1;
const ALPHA_IN: usize = 2;
const BETA_IN: usize = 3;

/// Map with crossings met by `β` in `order` (a permutation of `0..i` with
/// `order[0] = 0`); `flips[v]` reverses the direction `β` crosses at `v`.
pub fn pair_from_orders(
    order: &[usize],
    flips: &[bool],
    punctured_face: usize,
) -> Result<CombinatorialMap> {
    let i = order.len();
    let dart = |v: usize, k: usize| 4 * v + k;
    let vertices = (0..i)
        .map(|v| {
            let (first, second) = if flips[v] {
                (BETA_IN, BETA_OUT)
            } else {
                (BETA_OUT, BETA_IN)
            };
            vec![
                dart(v, ALPHA_OUT),
                dart(v, first),
                dart(v, ALPHA_IN),
                dart(v, second),
            ]
        })
        .collect();
    let mut involution = vec![0; 4 * i];
    let mut join = |a: usize, b: usize| {
        involution[a] = b;
        involution[b] = a;
    };
    for v in 0..i {
        join(dart(v, ALPHA_OUT), dart((v + 1) % i, ALPHA_IN));
        join(dart(order[v], BETA_OUT), dart(order[(v + 1) % i], BETA_IN));
    }
    let labels = (0..4 * i)
        .map(|d| {
            if d % 2 == 0 {
                Curve::Alpha
            } else {
                Curve::Beta
            }
        })
        .collect();
    CombinatorialMap::new(vertices, involution, labels, punctured_face)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(k) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&k| v[k] < v[k + 1])
    else {
        return false;
    };
    let j = (k + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[k])
        .expect("a larger element exists");
    v.swap(k, j);
    v[k + 1..].reverse();
    true
}

/// All labelled filling pairs of a once-punctured surface of genus ≥ 1 with
/// `i` crossings, in a fixed order. The puncture goes in the bigon if there
/// is one, otherwise in face 0.
pub fn enumerate_filling_pairs(i: usize) -> Vec<CombinatorialMap> {
    let mut out = Vec::new();
    if i == 0 {
        return out;
    }
    let mut rest: Vec<usize> = (1..i).collect();
    loop {
        let order: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
        for bits in 0..(1u32 << i) {
            let flips: Vec<bool> = (0..i).map(|v| bits >> v & 1 == 1).collect();
            let Ok(map) = pair_from_orders(&order, &flips, 0) else {
                continue;
            };
            let Ok(faces) = compute_faces(&map) else {
                continue;
            };
            if genus_of(&map, &faces).is_err() {
                continue;
            }
            let bigons: Vec<usize> = (0..faces.count())
                .filter(|&f| faces.sides[f] <= 2)
                .collect();
            match bigons.as_slice() {
                [] => out.push(map),
                [b] => {
                    if let Ok(m) = pair_from_orders(&order, &flips, *b) {
                        out.push(m);
                    }
                }
                _ => {}
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_complete() {
        let mut v = vec![1, 2, 3];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert_eq!(v, vec![3, 2, 1]);
    }

    #[test]
    fn single_crossing() {
        let maps = enumerate_filling_pairs(1);
        assert_eq!(maps.len(), 2);
        for m in &maps {
            let f = compute_faces(m).unwrap();
            assert_eq!(f.sides, vec![4]);
        }
    }

    #[test]
    fn no_genus_two_pair_with_three_crossings() {
        for m in enumerate_filling_pairs(3) {
            let f = compute_faces(&m).unwrap();
            assert_eq!(genus_of(&m, &f).unwrap().g, 1);
        }
    }
}
