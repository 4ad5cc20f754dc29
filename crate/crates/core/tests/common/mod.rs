//! Helpers shared by the integration suites.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use whitebind::automorphism::{Move, NielsenMove, TypeIIMove, TypeIMove};
use whitebind::separability::{decide, verify_verdict, Limits, Verdict};
use whitebind::word::{CyclicWord, Letter, Rank, Word};

pub fn rank(g: u32) -> Rank {
    Rank::new(g).unwrap()
}

pub fn parse(text: &str, g: u32) -> Word {
    Word::parse(text, rank(g)).unwrap()
}

pub fn cyclic(text: &str, g: u32) -> CyclicWord {
    CyclicWord::parse(text, rank(g)).unwrap()
}

/// Decide and verify the certificate in one step; every acceptance corpus
/// goes through here so certificate soundness is enforced everywhere.
pub fn decide_checked(word: &Word, g: u32, limits: &Limits) -> Verdict {
    let verdict = decide(word, rank(g), limits).unwrap_or_else(|e| panic!("decide({word}): {e}"));
    verify_verdict(&verdict, limits)
        .unwrap_or_else(|e| panic!("unsound certificate for {word}: {e}"));
    verdict
}

/// A random freely reduced word of exactly `len` letters.
pub fn random_word(rng: &mut StdRng, g: u32, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::new();
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(1..=g), rng.gen_bool(0.5));
        if letters.last() == Some(&l.inverse()) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// A random Whitehead automorphism (type I, or type II when the rank has
/// any).
pub fn random_whitehead_move(rng: &mut StdRng, g: u32) -> Move {
    let type_ii: Vec<TypeIIMove> = TypeIIMove::enumerate(rank(g)).collect();
    if type_ii.is_empty() || rng.gen_bool(0.5) {
        let type_i: Vec<TypeIMove> = TypeIMove::enumerate(rank(g)).collect();
        Move::TypeI(type_i[rng.gen_range(0..type_i.len())].clone())
    } else {
        Move::TypeII(type_ii[rng.gen_range(0..type_ii.len())].clone())
    }
}

/// All cyclically reduced letter sequences of length `1..=max_len` over the
/// rank-`g` alphabet, as linear sequences.
pub fn cyclically_reduced_sequences(g: u32, max_len: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = rank(g).letters().collect();
    let mut out = Vec::new();
    let mut prefix: Vec<Letter> = Vec::new();
    fn extend(
        prefix: &mut Vec<Letter>,
        target: usize,
        alphabet: &[Letter],
        out: &mut Vec<Vec<Letter>>,
    ) {
        if prefix.len() == target {
            if prefix.len() <= 1 || prefix.first().copied() != prefix.last().map(|l| l.inverse()) {
                out.push(prefix.clone());
            }
            return;
        }
        for &l in alphabet {
            if prefix.last() == Some(&l.inverse()) {
                continue;
            }
            prefix.push(l);
            extend(prefix, target, alphabet, out);
            prefix.pop();
        }
    }
    for len in 1..=max_len {
        extend(&mut prefix, len, &alphabet, &mut out);
    }
    out
}

/// A random basis tuple: the standard basis hit by random elementary
/// Nielsen automorphisms.
pub fn random_basis(rng: &mut StdRng, g: u32, moves: usize) -> Vec<Word> {
    let mut tuple: Vec<Word> = (1..=g)
        .map(|k| Word::from_letters([Letter::new(k, false)]))
        .collect();
    let autos = NielsenMove::enumerate_automorphisms(rank(g));
    for _ in 0..moves {
        let m = &autos[rng.gen_range(0..autos.len())];
        m.apply_to_tuple(&mut tuple).unwrap();
    }
    tuple
}

/// Determinant of the abelianization matrix of a `g`-tuple.
pub fn abelianized_determinant(tuple: &[Word], g: u32) -> i64 {
    let mut matrix = vec![vec![0i64; g as usize]; tuple.len()];
    for (row, word) in tuple.iter().enumerate() {
        for l in word.letters() {
            matrix[row][(l.generator() - 1) as usize] += if l.is_inverse() { -1 } else { 1 };
        }
    }
    determinant(&matrix)
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0;
    for col in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det += sign * m[0][col] * determinant(&minor);
    }
    det
}
