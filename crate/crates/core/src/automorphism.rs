//! Elementary Nielsen transformations and Whitehead automorphisms of a free
//! group: representation, application to words and cyclic words, inversion,
//! deterministic enumeration, Nielsen reduction of generating tuples, and
//! the basis test.
//!
//! Move witnesses serialize to JSON as an array of move records tagged by
//! `kind`, with generators as integers and signed letters as `+-k`; the
//! round-trip is bit-exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fold;
use crate::word::{CyclicWord, Letter, Rank, Word};

/// Length-preserving Whitehead automorphism: a signed permutation of the
/// generators. `permutation[i-1]` is the image index of generator `i`;
/// `flips` lists the source generators sent to their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeIMove {
    pub permutation: Vec<u32>,
    pub flips: Vec<u32>,
}

impl TypeIMove {
    pub fn new(permutation: Vec<u32>, mut flips: Vec<u32>) -> Result<TypeIMove> {
        let g = permutation.len() as u32;
        let mut seen = vec![false; g as usize];
        for &img in &permutation {
            if img == 0 || img > g || seen[(img - 1) as usize] {
                return Err(Error::InvalidMove("permutation is not a bijection".into()));
            }
            seen[(img - 1) as usize] = true;
        }
        flips.sort_unstable();
        flips.dedup();
        if flips.iter().any(|&i| i == 0 || i > g) {
            return Err(Error::InvalidMove("flip index out of range".into()));
        }
        Ok(TypeIMove { permutation, flips })
    }

    pub fn identity(rank: Rank) -> TypeIMove {
        TypeIMove {
            permutation: (1..=rank.get()).collect(),
            flips: Vec::new(),
        }
    }

    fn validate(&self, rank: Rank) -> Result<()> {
        if self.permutation.len() as u32 != rank.get() {
            return Err(Error::RankMismatch(format!(
                "type I move on {} generators applied at rank {}",
                self.permutation.len(),
                rank.get()
            )));
        }
        TypeIMove::new(self.permutation.clone(), self.flips.clone())?;
        Ok(())
    }

    fn image_of(&self, l: Letter) -> Letter {
        let k = l.generator();
        let img = self.permutation[(k - 1) as usize];
        let flip = self.flips.binary_search(&k).is_ok();
        Letter::new(img, l.is_inverse() ^ flip)
    }

    pub fn apply_to_word(&self, w: &Word, rank: Rank) -> Result<Word> {
        self.validate(rank)?;
        check_word_rank(w, rank)?;
        Ok(Word::from_letters(
            w.letters().iter().map(|&l| self.image_of(l)),
        ))
    }

    /// Letter-wise relabeling; cyclic length is preserved exactly.
    pub fn apply_to_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        self.validate(c.rank())?;
        Ok(CyclicWord::from_cyclically_reduced(
            c.letters().iter().map(|&l| self.image_of(l)),
            c.rank(),
        ))
    }

    pub fn inverse(&self) -> TypeIMove {
        let g = self.permutation.len();
        let mut inv = vec![0u32; g];
        for (i, &img) in self.permutation.iter().enumerate() {
            inv[(img - 1) as usize] = (i + 1) as u32;
        }
        let mut flips: Vec<u32> = self
            .flips
            .iter()
            .map(|&i| self.permutation[(i - 1) as usize])
            .collect();
        flips.sort_unstable();
        TypeIMove {
            permutation: inv,
            flips,
        }
    }

    /// All signed permutations except the identity, in deterministic order:
    /// permutations lexicographically, flip sets by ascending bitmask.
    pub fn enumerate(rank: Rank) -> impl Iterator<Item = TypeIMove> {
        use itertools::Itertools;
        let g = rank.get();
        assert!(
            g <= 16,
            "type I enumeration is only supported up to rank 16"
        );
        (1..=g)
            .permutations(g as usize)
            .flat_map(move |perm| {
                (0u32..(1 << g)).map(move |mask| {
                    let flips: Vec<u32> = (1..=g).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    TypeIMove {
                        permutation: perm.clone(),
                        flips,
                    }
                })
            })
            .filter(move |m| {
                !(m.flips.is_empty()
                    && m.permutation
                        .iter()
                        .enumerate()
                        .all(|(i, &p)| p == i as u32 + 1))
            })
    }
}

/// Whitehead automorphism of the second kind, parameterized by a multiplier
/// letter `a` and a set `S` of signed letters with `a` in `S` and `a^-1` not
/// in `S`.
///
/// With `x` ranging over the generators other than the multiplier's:
/// `x -> x.a` if only `x` is in `S`; `x -> a^-1.x` if only `x^-1` is;
/// `x -> a^-1.x.a` if both are; `x` is fixed if neither is. The multiplier's
/// own generator is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeIIMove {
    pub multiplier: Letter,
    pub set: Vec<Letter>,
}

impl TypeIIMove {
    pub fn new<I: IntoIterator<Item = Letter>>(multiplier: Letter, set: I) -> Result<TypeIIMove> {
        let mut set: Vec<Letter> = set.into_iter().collect();
        if !set.contains(&multiplier) {
            set.push(multiplier);
        }
        set.sort_unstable();
        set.dedup();
        let m = TypeIIMove { multiplier, set };
        m.check_well_formed()?;
        Ok(m)
    }

    fn check_well_formed(&self) -> Result<()> {
        if self.set.binary_search(&self.multiplier).is_err() {
            return Err(Error::InvalidMove("multiplier not in set".into()));
        }
        if self.set.binary_search(&self.multiplier.inverse()).is_ok() {
            return Err(Error::InvalidMove(
                "multiplier inverse must not be in set".into(),
            ));
        }
        Ok(())
    }

    fn validate(&self, rank: Rank) -> Result<()> {
        self.check_well_formed()?;
        let max = self
            .set
            .iter()
            .map(|l| l.generator())
            .max()
            .unwrap_or(0)
            .max(self.multiplier.generator());
        if max > rank.get() {
            return Err(Error::RankMismatch(format!(
                "type II move mentions generator x{} at rank {}",
                max,
                rank.get()
            )));
        }
        Ok(())
    }

    fn contains(&self, l: Letter) -> bool {
        self.set.binary_search(&l).is_ok()
    }

    /// Image of the positive generator `x_k`, as up to three letters.
    fn image_of_generator(&self, k: u32, out: &mut Vec<Letter>) {
        let a = self.multiplier;
        let x = Letter::new(k, false);
        if k == a.generator() {
            out.push(x);
            return;
        }
        match (self.contains(x), self.contains(x.inverse())) {
            (true, false) => {
                out.push(x);
                out.push(a);
            }
            (false, true) => {
                out.push(a.inverse());
                out.push(x);
            }
            (true, true) => {
                out.push(a.inverse());
                out.push(x);
                out.push(a);
            }
            (false, false) => out.push(x),
        }
    }

    fn image_of(&self, l: Letter, out: &mut Vec<Letter>) {
        if l.is_inverse() {
            let start = out.len();
            self.image_of_generator(l.generator(), out);
            out[start..].reverse();
            for x in &mut out[start..] {
                *x = x.inverse();
            }
        } else {
            self.image_of_generator(l.generator(), out);
        }
    }

    pub fn apply_to_word(&self, w: &Word, rank: Rank) -> Result<Word> {
        self.validate(rank)?;
        check_word_rank(w, rank)?;
        let mut letters = Vec::with_capacity(3 * w.len());
        for &l in w.letters() {
            self.image_of(l, &mut letters);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn apply_to_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        self.validate(c.rank())?;
        let mut letters = Vec::with_capacity(3 * c.len());
        for &l in c.letters() {
            self.image_of(l, &mut letters);
        }
        let word = Word::from_letters(letters);
        Ok(CyclicWord::reduce(&word, c.rank())?.0)
    }

    pub fn inverse(&self) -> TypeIIMove {
        let a = self.multiplier;
        let mut set: Vec<Letter> = self.set.iter().copied().filter(|&l| l != a).collect();
        set.push(a.inverse());
        set.sort_unstable();
        TypeIIMove {
            multiplier: a.inverse(),
            set,
        }
    }

    /// All well-formed moves with `S != {a}` in deterministic order:
    /// multipliers in letter order, then the non-trivial subsets of the
    /// remaining `2g - 2` letters by ascending bitmask. The count is
    /// `2g * (2^(2g-2) - 1)`.
    pub fn enumerate(rank: Rank) -> impl Iterator<Item = TypeIIMove> {
        let g = rank.get();
        assert!(
            g <= 16,
            "type II enumeration is only supported up to rank 16"
        );
        rank.letters().flat_map(move |a| {
            let others: Vec<Letter> = Rank::new(g)
                .unwrap()
                .letters()
                .filter(|l| l.generator() != a.generator())
                .collect();
            let n = others.len();
            (1u64..(1 << n)).map(move |mask| {
                let mut set: Vec<Letter> = others
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &l)| l)
                    .collect();
                set.push(a);
                set.sort_unstable();
                TypeIIMove { multiplier: a, set }
            })
        })
    }
}

/// Elementary Nielsen transformation. On a tuple `(y_1, ..., y_m)` the four
/// kinds act as: swap two entries, invert an entry, and replace `y_i` by
/// `y_j^s . y_i` or `y_i . y_j^s` for `j != i` (the Lyndon-Schupp
/// convention, with the sign `s` carried by the `by` letter).
///
/// Read as an automorphism of the free group, the same move acts on the
/// standard basis: e.g. `left_mul{i, by: -j}` is `x_i -> x_j^-1 x_i` with
/// every other generator fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum NielsenMove {
    Swap { i: u32, j: u32 },
    Invert { i: u32 },
    LeftMul { i: u32, by: Letter },
    RightMul { i: u32, by: Letter },
}

impl NielsenMove {
    fn check_well_formed(&self) -> Result<()> {
        let ok = match *self {
            NielsenMove::Swap { i, j } => i != j && i > 0 && j > 0,
            NielsenMove::Invert { i } => i > 0,
            NielsenMove::LeftMul { i, by } | NielsenMove::RightMul { i, by } => {
                i > 0 && by.generator() != i
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMove(format!(
                "ill-formed Nielsen move {self:?}"
            )))
        }
    }

    fn max_index(&self) -> u32 {
        match *self {
            NielsenMove::Swap { i, j } => i.max(j),
            NielsenMove::Invert { i } => i,
            NielsenMove::LeftMul { i, by } | NielsenMove::RightMul { i, by } => {
                i.max(by.generator())
            }
        }
    }

    fn validate(&self, rank: Rank) -> Result<()> {
        self.check_well_formed()?;
        if self.max_index() > rank.get() {
            return Err(Error::RankMismatch(format!(
                "Nielsen move mentions index {} at rank {}",
                self.max_index(),
                rank.get()
            )));
        }
        Ok(())
    }

    /// Applies the move to a tuple of words in place.
    pub fn apply_to_tuple(&self, tuple: &mut [Word]) -> Result<()> {
        self.check_well_formed()?;
        if self.max_index() as usize > tuple.len() {
            return Err(Error::RankMismatch(format!(
                "Nielsen move mentions index {} on a tuple of {} words",
                self.max_index(),
                tuple.len()
            )));
        }
        match *self {
            NielsenMove::Swap { i, j } => {
                tuple.swap((i - 1) as usize, (j - 1) as usize);
            }
            NielsenMove::Invert { i } => {
                let i = (i - 1) as usize;
                tuple[i] = tuple[i].inverse();
            }
            NielsenMove::LeftMul { i, by } => {
                let factor = tuple_entry(tuple, by);
                let i = (i - 1) as usize;
                tuple[i] = factor.concat(&tuple[i]);
            }
            NielsenMove::RightMul { i, by } => {
                let factor = tuple_entry(tuple, by);
                let i = (i - 1) as usize;
                tuple[i] = tuple[i].concat(&factor);
            }
        }
        Ok(())
    }

    /// Image of the positive generator `x_k` under the move read as an
    /// automorphism.
    fn image_of_generator(&self, k: u32, out: &mut Vec<Letter>) {
        let x = Letter::new(k, false);
        match *self {
            NielsenMove::Swap { i, j } => {
                if k == i {
                    out.push(Letter::new(j, false));
                } else if k == j {
                    out.push(Letter::new(i, false));
                } else {
                    out.push(x);
                }
            }
            NielsenMove::Invert { i } => {
                out.push(if k == i { x.inverse() } else { x });
            }
            NielsenMove::LeftMul { i, by } => {
                if k == i {
                    out.push(by);
                }
                out.push(x);
            }
            NielsenMove::RightMul { i, by } => {
                out.push(x);
                if k == i {
                    out.push(by);
                }
            }
        }
    }

    fn image_of(&self, l: Letter, out: &mut Vec<Letter>) {
        if l.is_inverse() {
            let start = out.len();
            self.image_of_generator(l.generator(), out);
            out[start..].reverse();
            for x in &mut out[start..] {
                *x = x.inverse();
            }
        } else {
            self.image_of_generator(l.generator(), out);
        }
    }

    pub fn apply_to_word(&self, w: &Word, rank: Rank) -> Result<Word> {
        self.validate(rank)?;
        check_word_rank(w, rank)?;
        let mut letters = Vec::with_capacity(2 * w.len());
        for &l in w.letters() {
            self.image_of(l, &mut letters);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn apply_to_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        self.validate(c.rank())?;
        let mut letters = Vec::with_capacity(2 * c.len());
        for &l in c.letters() {
            self.image_of(l, &mut letters);
        }
        let word = Word::from_letters(letters);
        Ok(CyclicWord::reduce(&word, c.rank())?.0)
    }

    pub fn inverse(&self) -> NielsenMove {
        match *self {
            NielsenMove::Swap { .. } | NielsenMove::Invert { .. } => self.clone(),
            NielsenMove::LeftMul { i, by } => NielsenMove::LeftMul {
                i,
                by: by.inverse(),
            },
            NielsenMove::RightMul { i, by } => NielsenMove::RightMul {
                i,
                by: by.inverse(),
            },
        }
    }

    /// All elementary Nielsen automorphisms at the given rank, in
    /// deterministic order: swaps, inversions, then multiplications by
    /// target, factor, sign, side.
    pub fn enumerate_automorphisms(rank: Rank) -> Vec<NielsenMove> {
        let g = rank.get();
        let mut moves = Vec::new();
        for i in 1..=g {
            for j in (i + 1)..=g {
                moves.push(NielsenMove::Swap { i, j });
            }
        }
        for i in 1..=g {
            moves.push(NielsenMove::Invert { i });
        }
        moves.extend(multiplication_moves(g));
        moves
    }
}

/// Multiplication moves on an arity-`m` tuple, in the fixed scan order used
/// by the greedy Nielsen reduction.
fn multiplication_moves(m: u32) -> Vec<NielsenMove> {
    let mut moves = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i == j {
                continue;
            }
            for sign in [false, true] {
                let by = Letter::new(j, sign);
                moves.push(NielsenMove::LeftMul { i, by });
                moves.push(NielsenMove::RightMul { i, by });
            }
        }
    }
    moves
}

fn tuple_entry(tuple: &[Word], by: Letter) -> Word {
    let w = &tuple[(by.generator() - 1) as usize];
    if by.is_inverse() {
        w.inverse()
    } else {
        w.clone()
    }
}

fn check_word_rank(w: &Word, rank: Rank) -> Result<()> {
    match w.max_generator() {
        Some(max) if max > rank.get() => Err(Error::RankMismatch(format!(
            "word mentions generator x{} at rank {}",
            max,
            rank.get()
        ))),
        _ => Ok(()),
    }
}

/// One elementary automorphism of any of the three kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Move {
    #[serde(rename = "typeI")]
    TypeI(TypeIMove),
    #[serde(rename = "typeII")]
    TypeII(TypeIIMove),
    #[serde(rename = "nielsen")]
    Nielsen(NielsenMove),
}

impl Move {
    pub fn apply_to_word(&self, w: &Word, rank: Rank) -> Result<Word> {
        match self {
            Move::TypeI(m) => m.apply_to_word(w, rank),
            Move::TypeII(m) => m.apply_to_word(w, rank),
            Move::Nielsen(m) => m.apply_to_word(w, rank),
        }
    }

    pub fn apply_to_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        match self {
            Move::TypeI(m) => m.apply_to_cyclic(c),
            Move::TypeII(m) => m.apply_to_cyclic(c),
            Move::Nielsen(m) => m.apply_to_cyclic(c),
        }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::TypeI(m) => Move::TypeI(m.inverse()),
            Move::TypeII(m) => Move::TypeII(m.inverse()),
            Move::Nielsen(m) => Move::Nielsen(m.inverse()),
        }
    }
}

/// A replayable sequence of elementary moves, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AutomorphismWitness {
    moves: Vec<Move>,
}

impl AutomorphismWitness {
    pub fn empty() -> AutomorphismWitness {
        AutomorphismWitness::default()
    }

    pub fn new(moves: Vec<Move>) -> AutomorphismWitness {
        AutomorphismWitness { moves }
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn push(&mut self, m: Move) {
        self.moves.push(m);
    }

    pub fn extend(&mut self, other: &AutomorphismWitness) {
        self.moves.extend(other.moves.iter().cloned());
    }

    /// The inverse automorphism: inverted moves in reverse order.
    pub fn inverted(&self) -> AutomorphismWitness {
        AutomorphismWitness {
            moves: self.moves.iter().rev().map(|m| m.inverse()).collect(),
        }
    }

    pub fn apply_to_word(&self, w: &Word, rank: Rank) -> Result<Word> {
        let mut out = w.clone();
        for m in &self.moves {
            out = m.apply_to_word(&out, rank)?;
        }
        Ok(out)
    }

    pub fn apply_to_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        let mut out = c.clone();
        for m in &self.moves {
            out = m.apply_to_cyclic(&out)?;
        }
        Ok(out)
    }

    /// Replays a witness of tuple moves; only Nielsen moves act on tuples.
    pub fn apply_to_tuple(&self, tuple: &[Word]) -> Result<Vec<Word>> {
        let mut out = tuple.to_vec();
        for m in &self.moves {
            match m {
                Move::Nielsen(n) => n.apply_to_tuple(&mut out)?,
                _ => {
                    return Err(Error::InvalidMove(
                        "only Nielsen moves act on tuples".into(),
                    ))
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<AutomorphismWitness> {
        serde_json::from_str(text).map_err(|e| Error::Syntax(format!("bad witness JSON: {e}")))
    }
}

fn total_length(tuple: &[Word]) -> usize {
    tuple.iter().map(Word::len).sum()
}

/// Greedy Nielsen reduction: repeatedly applies the first multiplication
/// move in scan order that strictly decreases the total letter count, until
/// none does. Swaps and inversions never change lengths and are not applied.
pub fn nielsen_reduce(tuple: &[Word]) -> Result<(Vec<Word>, AutomorphismWitness)> {
    if tuple.is_empty() {
        return Err(Error::RankMismatch("empty tuple".into()));
    }
    let moves = multiplication_moves(tuple.len() as u32);
    let mut current = tuple.to_vec();
    let mut witness = AutomorphismWitness::empty();
    'descent: loop {
        let total = total_length(&current);
        for m in &moves {
            let mut candidate = current.clone();
            m.apply_to_tuple(&mut candidate)?;
            if total_length(&candidate) < total {
                current = candidate;
                witness.push(Move::Nielsen(m.clone()));
                continue 'descent;
            }
        }
        return Ok((current, witness));
    }
}

/// True when every entry is a single letter and the generators form a
/// permutation of `1..=g`.
fn is_signed_standard_basis(tuple: &[Word], rank: Rank) -> bool {
    let g = rank.get() as usize;
    if tuple.len() != g {
        return false;
    }
    let mut seen = vec![false; g];
    for w in tuple {
        match w.letters() {
            [l] => {
                let k = (l.generator() - 1) as usize;
                if k >= g || seen[k] {
                    return false;
                }
                seen[k] = true;
            }
            _ => return false,
        }
    }
    true
}

/// Decides whether a `g`-tuple is a basis of the rank-`g` free group.
///
/// The greedy Nielsen reduction is the primary route and yields the
/// replayable witness. When it stalls away from a signed standard basis the
/// verdict is settled by Stallings folding (a surjection of a free group of
/// equal rank is an automorphism); a stall on a true basis would then be
/// escaped by a bounded search for a further descent path.
pub fn is_basis(tuple: &[Word], rank: Rank) -> Result<(bool, Option<AutomorphismWitness>)> {
    let g = rank.get() as usize;
    if tuple.len() != g {
        return Err(Error::RankMismatch(format!(
            "basis test needs exactly {} words, got {}",
            g,
            tuple.len()
        )));
    }
    for w in tuple {
        check_word_rank(w, rank)?;
    }
    let (mut current, mut witness) = nielsen_reduce(tuple)?;
    if is_signed_standard_basis(&current, rank) {
        return Ok((true, Some(witness)));
    }
    if !fold::generates_whole_group(tuple, rank) {
        return Ok((false, None));
    }
    // The tuple generates everything but greedy descent stalled. Search for
    // an escape: a move sequence through bounded-length tuples that reaches
    // a strictly smaller total length, then resume the descent.
    loop {
        let total = total_length(&current);
        let path = find_descent_path(&current, total)?;
        for m in &path {
            m.apply_to_tuple(&mut current)?;
            witness.push(Move::Nielsen(m.clone()));
        }
        let (reduced, more) = nielsen_reduce(&current)?;
        current = reduced;
        witness.extend(&more);
        if is_signed_standard_basis(&current, rank) {
            return Ok((true, Some(witness)));
        }
    }
}

/// Breadth-first search over elementary tuple moves for any tuple of total
/// length below `total`, allowing intermediate growth up to a slack that is
/// raised on failure.
fn find_descent_path(tuple: &[Word], total: usize) -> Result<Vec<NielsenMove>> {
    use std::collections::{HashMap, VecDeque};
    let m = tuple.len() as u32;
    let mut all_moves = multiplication_moves(m);
    for i in 1..=m {
        all_moves.push(NielsenMove::Invert { i });
        for j in (i + 1)..=m {
            moves_push_swap(&mut all_moves, i, j);
        }
    }
    for slack in [0usize, 2, 4, 8, 16] {
        let cap = total + slack;
        let mut seen: HashMap<Vec<Word>, (Vec<Word>, NielsenMove)> = HashMap::new();
        let mut queue: VecDeque<Vec<Word>> = VecDeque::new();
        queue.push_back(tuple.to_vec());
        let mut expansions = 0usize;
        while let Some(state) = queue.pop_front() {
            expansions += 1;
            if expansions > 200_000 {
                break;
            }
            for mv in &all_moves {
                let mut next = state.clone();
                mv.apply_to_tuple(&mut next)?;
                if total_length(&next) > cap {
                    continue;
                }
                if next.as_slice() == tuple || seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), (state.clone(), mv.clone()));
                if total_length(&next) < total {
                    let mut path = Vec::new();
                    let mut cursor = next;
                    while cursor.as_slice() != tuple {
                        let (prev, mv) = seen[&cursor].clone();
                        path.push(mv);
                        cursor = prev;
                    }
                    path.reverse();
                    return Ok(path);
                }
                queue.push_back(next);
            }
        }
    }
    Err(Error::ResourceLimit {
        phase: "basis descent search",
        moves_applied: 0,
        members_seen: 0,
    })
}

fn moves_push_swap(moves: &mut Vec<NielsenMove>, i: u32, j: u32) {
    moves.push(NielsenMove::Swap { i, j });
}
