#![allow(dead_code)]

use braidmon_core::factorization::{search_factorization, SearchLimits, SearchOutcome};
use braidmon_core::{BraidWord, CuspidalFactor, Direction, Factorization};
use rand::Rng;
use std::sync::OnceLock;

pub fn w(d: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(d, letters.to_vec()).unwrap()
}

pub fn cf(d: usize, rho: &[i32], s: i64) -> CuspidalFactor {
    CuspidalFactor::new(w(d, rho), s).unwrap()
}

/// Conjugator taking X_1 to X_i: `[2 1 3 2 … i i-1]`.
pub fn rho_for(i: i32) -> Vec<i32> {
    (2..=i).flat_map(|k| [k, k - 1]).collect()
}

/// `(X_1 ⋯ X_{d-1})^d` with every letter its own branch-point factor.
pub fn standard(d: usize) -> Factorization {
    let mut fs = Vec::new();
    for _ in 0..d {
        for i in 1..d as i32 {
            fs.push(cf(d, &rho_for(i), 1));
        }
    }
    Factorization::cuspidal(d, fs).unwrap()
}

pub fn conic() -> Factorization {
    standard(2)
}

pub fn node() -> Factorization {
    Factorization::cuspidal(2, vec![cf(2, &[], 2)]).unwrap()
}

pub fn conic_and_line() -> Factorization {
    let x2 = rho_for(2);
    Factorization::cuspidal(3, vec![cf(3, &[], 2), cf(3, &x2, 1), cf(3, &[], 2), cf(3, &x2, 1)]).unwrap()
}

pub fn cuspidal_cubic() -> Factorization {
    Factorization::cuspidal(3, vec![cf(3, &[], 1), cf(3, &[2], 1), cf(3, &[2, 1], 1), cf(3, &[2], 3)]).unwrap()
}

pub fn searched(d: usize, profile: &[i64]) -> Factorization {
    match search_factorization(d, profile, SearchLimits::default()).unwrap() {
        SearchOutcome::Found(f) => f,
        other => panic!("{other:?}"),
    }
}

/// Valid factorizations of small full twists, one per profile.
pub fn catalog() -> Vec<Factorization> {
    static CATALOG: OnceLock<Vec<Factorization>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog).clone()
}

fn build_catalog() -> Vec<Factorization> {
    vec![conic(), node(), standard(3), conic_and_line(), searched(3, &[2, 1, 1, 1, 1]), cuspidal_cubic(), standard(4)]
}

pub fn random_word<R: Rng>(rng: &mut R, d: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..d as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(d, letters).unwrap()
}

pub fn random_direction<R: Rng>(rng: &mut R) -> Direction {
    if rng.gen_bool(0.5) {
        Direction::Left
    } else {
        Direction::Right
    }
}

/// `moves` random Hurwitz moves on `f`; single-factor inputs are returned as is.
pub fn random_moves<R: Rng>(rng: &mut R, f: &Factorization, moves: usize) -> Factorization {
    let mut g = f.clone();
    if g.len() < 2 {
        return g;
    }
    for _ in 0..moves {
        let i = rng.gen_range(1..g.len());
        g = g.hurwitz_move(i, random_direction(rng)).unwrap();
    }
    g
}

/// A catalog entry scrambled by a few moves and a short conjugation.
pub fn random_factorization<R: Rng>(rng: &mut R) -> Factorization {
    let cat = catalog();
    let f = &cat[rng.gen_range(0..cat.len())];
    let k = rng.gen_range(0..3);
    let moved = random_moves(rng, f, k);
    let len = rng.gen_range(0..3);
    let z = random_word(rng, f.strands(), len);
    moved.conjugate_all(&z).unwrap()
}

fn adjacent(a: i32, b: i32) -> bool {
    (a.abs() - b.abs()).abs() == 1
}

/// Applies `steps` random rewrites that preserve the braid: free insertions
/// and cancellations, far commutations and the two forms of the braid
/// relation. The word never grows beyond `max_len`.
pub fn scramble<R: Rng>(rng: &mut R, w: &BraidWord, steps: usize, max_len: usize) -> BraidWord {
    let d = w.strands();
    let mut l = w.letters().to_vec();
    for _ in 0..steps {
        let windows = |n: usize| l.len().saturating_sub(n - 1);
        match rng.gen_range(0..5) {
            0 if d > 1 && l.len() + 2 <= max_len => {
                let k = rng.gen_range(0..=l.len());
                let g = random_word(rng, d, 1).letters()[0];
                l.splice(k..k, [g, -g]);
            }
            1 => {
                let spots: Vec<usize> = (0..windows(2)).filter(|&k| (l[k].abs() - l[k + 1].abs()).abs() >= 2).collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    l.swap(k, k + 1);
                }
            }
            2 => {
                let spots: Vec<usize> = (0..windows(3))
                    .filter(|&k| l[k] == l[k + 2] && adjacent(l[k], l[k + 1]) && l[k].signum() == l[k + 1].signum())
                    .collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    let (a, b) = (l[k], l[k + 1]);
                    l[k..k + 3].copy_from_slice(&[b, a, b]);
                }
            }
            3 => {
                let spots: Vec<usize> = (0..windows(2)).filter(|&k| l[k] == -l[k + 1]).collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    l.drain(k..k + 2);
                }
            }
            _ => {
                // X_i X_j X_i⁻¹ = X_j⁻¹ X_i X_j for adjacent i, j, in either direction.
                let spots: Vec<usize> = (0..windows(3))
                    .filter(|&k| {
                        let (a, b, c) = (l[k], l[k + 1], l[k + 2]);
                        a > 0 && b > 0 && c == -a && adjacent(a, b) || a < 0 && b > 0 && c == -a && adjacent(a, b)
                    })
                    .collect();
                if !spots.is_empty() {
                    let k = spots[rng.gen_range(0..spots.len())];
                    let (a, b) = (l[k], l[k + 1]);
                    let new = if a > 0 { [-b, a, b] } else { [b, -a, -b] };
                    l[k..k + 3].copy_from_slice(&new);
                }
            }
        }
    }
    BraidWord::new(d, l).unwrap()
}
