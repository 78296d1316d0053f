#![allow(dead_code)]

use braidknot::braid::{BraidWord, Move};
use rand::Rng;

/// Random word on 1..=`max_strands` strands with at most `max_len` letters.
pub fn random_word<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(1..=max_strands);
    if n == 1 {
        return BraidWord::trivial(1);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// A uniformly chosen kind of non-mirror move that applies to `w`. Growth
/// is capped at `max_strands` strands and `max_len` letters.
pub fn random_move<R: Rng>(rng: &mut R, w: &BraidWord, max_strands: usize, max_len: usize) -> Move {
    let l = w.letters();
    let n = w.strands();
    loop {
        let candidate = match rng.gen_range(0..9) {
            0 => {
                let spots: Vec<usize> = (0..l.len().saturating_sub(1))
                    .filter(|&i| l[i] == -l[i + 1])
                    .collect();
                pick(rng, &spots).map(|pos| Move::FreeCancel { pos })
            }
            1 if n >= 2 && l.len() + 2 <= max_len => {
                let g = rng.gen_range(1..n as i32);
                Some(Move::FreeInsert {
                    pos: rng.gen_range(0..=l.len()),
                    letter: if rng.gen_bool(0.5) { g } else { -g },
                })
            }
            2 => {
                let spots: Vec<usize> = (0..l.len().saturating_sub(1))
                    .filter(|&i| (l[i].abs() - l[i + 1].abs()).abs() >= 2)
                    .collect();
                pick(rng, &spots).map(|pos| Move::BraidRelationFar { pos })
            }
            3 => {
                let spots: Vec<usize> = (0..l.len().saturating_sub(2))
                    .filter(|&i| {
                        let (a, b, c) = (l[i], l[i + 1], l[i + 2]);
                        a == c && (a.abs() - b.abs()).abs() == 1 && a.signum() == b.signum()
                    })
                    .collect();
                pick(rng, &spots).map(|pos| Move::BraidRelationNear { pos })
            }
            4 if !l.is_empty() => Some(Move::ConjugateCyclic {
                shift: rng.gen_range(1..=l.len()),
            }),
            5 if n < max_strands && l.len() < max_len => Some(Move::Stabilize {
                positive: rng.gen_bool(0.5),
            }),
            6 => {
                let top = n as i32 - 1;
                (top >= 1
                    && l.last().map(|e| e.abs()) == Some(top)
                    && l.iter().filter(|e| e.abs() == top).count() == 1)
                    .then_some(Move::Destabilize)
            }
            7 => Some(Move::Flip),
            8 => Some(Move::Reverse),
            _ => None,
        };
        if let Some(m) = candidate {
            return m;
        }
    }
}

fn pick<R: Rng>(rng: &mut R, v: &[usize]) -> Option<usize> {
    (!v.is_empty()).then(|| v[rng.gen_range(0..v.len())])
}
