//! The complete decision procedure: Whitehead minimization, level-set orbit
//! enumeration, Binds/Separable verdicts with replayable certificates,
//! primitivity tests, and an independent brute-force oracle.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::automorphism::{AutomorphismWitness, Move, NielsenMove, TypeIIMove, TypeIMove};
use crate::error::{Error, Result};
use crate::graph::{stallings_criterion, StallingsCriterion};
use crate::word::{CyclicWord, Letter, Rank, Word};

/// Resource caps for the search. `ResourceLimit` is an error, never a third
/// verdict: no claim is made from a truncated search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_level_set_members: usize,
    pub max_move_applications: u64,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_level_set_members: 200_000,
            max_move_applications: 10_000_000,
        }
    }
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    fn charge(&mut self, phase: &'static str, members_seen: usize) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::ResourceLimit {
                phase,
                moves_applied: self.used,
                members_seen,
            });
        }
        Ok(())
    }
}

/// Outcome of greedy Whitehead minimization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationResult {
    pub minimal: CyclicWord,
    pub witness: AutomorphismWitness,
    pub original_length: usize,
    pub minimal_length: usize,
}

/// Repeatedly applies the first strictly length-decreasing type II move in
/// enumeration order until none exists. By peak reduction the terminal
/// length is the global minimum over the automorphism orbit.
pub fn minimize(c: &CyclicWord, limits: &Limits) -> Result<MinimizationResult> {
    let mut budget = Budget::new(limits.max_move_applications);
    minimize_with_budget(c, &mut budget)
}

/// Whitehead move enumeration is exponential in the rank (`2g * 2^(2g-2)`
/// type II moves, `g! * 2^g` type I moves); searches that need it are cut
/// off above this rank. The support and graph fast paths still answer at
/// any rank.
const MAX_SEARCH_RANK: u32 = 6;

fn check_search_rank(rank: Rank, phase: &'static str) -> Result<()> {
    if rank.get() > MAX_SEARCH_RANK {
        return Err(Error::ResourceLimit {
            phase,
            moves_applied: 0,
            members_seen: 0,
        });
    }
    Ok(())
}

fn minimize_with_budget(c: &CyclicWord, budget: &mut Budget) -> Result<MinimizationResult> {
    check_search_rank(c.rank(), "minimization (rank above enumeration bound)")?;
    let moves: Vec<TypeIIMove> = TypeIIMove::enumerate(c.rank()).collect();
    let original_length = c.len();
    let mut current = c.clone();
    let mut witness = AutomorphismWitness::empty();
    'descent: loop {
        for m in &moves {
            budget.charge("minimization", 0)?;
            let image = m.apply_to_cyclic(&current)?;
            if image.len() < current.len() {
                witness.push(Move::TypeII(m.clone()));
                current = image;
                continue 'descent;
            }
        }
        break;
    }
    Ok(MinimizationResult {
        minimal_length: current.len(),
        minimal: current,
        witness,
        original_length,
    })
}

/// The set of cyclic words of one length reachable from a minimal seed by
/// length-preserving moves, with a replayable witness per member.
#[derive(Debug, Clone)]
pub struct LevelSet {
    seed: CyclicWord,
    members: Vec<CyclicWord>,
    parents: HashMap<CyclicWord, (CyclicWord, Move)>,
    truncated: bool,
}

impl LevelSet {
    /// Members in breadth-first discovery order; the seed comes first.
    pub fn members(&self) -> &[CyclicWord] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &CyclicWord) -> bool {
        self.parents.contains_key(c) || *c == self.seed
    }

    /// True when the member cap stopped the closure early.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// The move sequence carrying the seed to `member`.
    pub fn witness_for(&self, member: &CyclicWord) -> Option<AutomorphismWitness> {
        if !self.contains(member) {
            return None;
        }
        Some(path_from_seed(&self.seed, member, &self.parents))
    }
}

fn path_from_seed(
    seed: &CyclicWord,
    member: &CyclicWord,
    parents: &HashMap<CyclicWord, (CyclicWord, Move)>,
) -> AutomorphismWitness {
    let mut moves = Vec::new();
    let mut cursor = member.clone();
    while cursor != *seed {
        let (prev, m) = parents
            .get(&cursor)
            .expect("every non-seed member has a parent")
            .clone();
        moves.push(m);
        cursor = prev;
    }
    moves.reverse();
    AutomorphismWitness::new(moves)
}

/// Breadth-first closure of `seed` under all length-preserving type I and
/// type II moves, members stored canonically, in deterministic order
/// (type I moves before type II, each in its enumeration order).
///
/// The seed is expected to be minimal; for a non-minimal seed the closure is
/// still the level stratum of its own length. Exceeding the member cap
/// returns a result flagged truncated; exceeding the move budget is an
/// error.
pub fn level_set(seed: &CyclicWord, limits: &Limits) -> Result<LevelSet> {
    let mut budget = Budget::new(limits.max_move_applications);
    Ok(closure(seed, limits, &mut budget, |_| Ok(None))?.0)
}

/// What a level-set member can immediately settle.
enum LevelHit {
    Omits(u32),
    Certified,
}

fn scan_member(c: &CyclicWord) -> Result<Option<LevelHit>> {
    if let Some(k) = c.omitted_generator() {
        return Ok(Some(LevelHit::Omits(k)));
    }
    if stallings_criterion(c)? == StallingsCriterion::BindsCertified {
        return Ok(Some(LevelHit::Certified));
    }
    Ok(None)
}

fn closure<F>(
    seed: &CyclicWord,
    limits: &Limits,
    budget: &mut Budget,
    mut inspect: F,
) -> Result<(LevelSet, Option<(CyclicWord, LevelHit)>)>
where
    F: FnMut(&CyclicWord) -> Result<Option<LevelHit>>,
{
    let rank = seed.rank();
    check_search_rank(rank, "level-set closure (rank above enumeration bound)")?;
    let moves: Vec<Move> = TypeIMove::enumerate(rank)
        .map(Move::TypeI)
        .chain(TypeIIMove::enumerate(rank).map(Move::TypeII))
        .collect();

    let mut set = LevelSet {
        seed: seed.clone(),
        members: vec![seed.clone()],
        parents: HashMap::new(),
        truncated: false,
    };
    if let Some(hit) = inspect(seed)? {
        return Ok((set, Some((seed.clone(), hit))));
    }

    let mut cursor = 0usize;
    while cursor < set.members.len() {
        let state = set.members[cursor].clone();
        cursor += 1;
        for m in &moves {
            budget.charge("level-set closure", set.members.len())?;
            let image = m.apply_to_cyclic(&state)?;
            if image.len() != seed.len() || set.contains(&image) {
                continue;
            }
            if set.members.len() >= limits.max_level_set_members {
                set.truncated = true;
                return Ok((set, None));
            }
            set.parents
                .insert(image.clone(), (state.clone(), m.clone()));
            set.members.push(image.clone());
            if let Some(hit) = inspect(&image)? {
                return Ok((set, Some((image, hit))));
            }
        }
    }
    Ok((set, None))
}

/// The verdict kind: the element binds the group or lies in a proper free
/// factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Binds,
    Separable,
}

/// Machine-checkable evidence for a verdict; see [`verify_verdict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Replaying the witness on the input yields a cyclic core omitting the
    /// named generator.
    Separable {
        witness: AutomorphismWitness,
        omitted_generator: u32,
    },
    /// Replaying the witness yields `certified`, whose Whitehead graph is
    /// connected with no cut vertex.
    Stallings {
        witness: AutomorphismWitness,
        certified: CyclicWord,
    },
    /// Replaying the witness yields `minimal`, whose entire level set was
    /// enumerated and consists of full-support words.
    ExhaustedLevelSet {
        witness: AutomorphismWitness,
        minimal: CyclicWord,
        level_set_size: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionStats {
    pub minimal_length: usize,
    pub level_set_size: usize,
    pub fast_path: bool,
}

/// A decision together with its certificate and search statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub word: Word,
    pub rank: Rank,
    pub kind: VerdictKind,
    pub certificate: Certificate,
    pub stats: DecisionStats,
}

impl Verdict {
    pub fn binds(&self) -> bool {
        self.kind == VerdictKind::Binds
    }
}

/// Decides whether `word` binds the rank-`g` free group.
///
/// Pipeline: identity and rank-1 special cases, support check on the cyclic
/// core, the Stallings fast path, greedy minimization, then level-set
/// enumeration. A member omitting a generator settles Separable; a member
/// passing the Stallings criterion settles Binds; an exhausted full-support
/// level set settles Binds. The two member events cannot both occur in one
/// level set, and the first qualifying member in breadth-first order is the
/// certificate.
pub fn decide(word: &Word, rank: Rank, limits: &Limits) -> Result<Verdict> {
    let (core, _) = CyclicWord::reduce(word, rank)?;
    decide_core(word.clone(), core, rank, limits)
}

/// [`decide`] for an already cyclically reduced word.
pub fn decide_cyclic(c: &CyclicWord, limits: &Limits) -> Result<Verdict> {
    decide_core(c.to_word(), c.clone(), c.rank(), limits)
}

fn decide_core(word: Word, core: CyclicWord, rank: Rank, limits: &Limits) -> Result<Verdict> {
    let mut budget = Budget::new(limits.max_move_applications);
    let verdict = |kind, certificate, stats| Verdict {
        word: word.clone(),
        rank,
        kind,
        certificate,
        stats,
    };

    // The identity lies in every proper free factor.
    if core.is_empty() {
        return Ok(verdict(
            VerdictKind::Separable,
            Certificate::Separable {
                witness: AutomorphismWitness::empty(),
                omitted_generator: 1,
            },
            DecisionStats {
                minimal_length: 0,
                level_set_size: 0,
                fast_path: false,
            },
        ));
    }

    // Rank 1: a non-trivial element binds. Its Whitehead graph is the
    // doubled segment, which certifies directly.
    if rank.get() == 1 {
        return Ok(verdict(
            VerdictKind::Binds,
            Certificate::Stallings {
                witness: AutomorphismWitness::empty(),
                certified: core.clone(),
            },
            DecisionStats {
                minimal_length: core.len(),
                level_set_size: 0,
                fast_path: true,
            },
        ));
    }

    // A missing generator is a visible proper free factor.
    if let Some(k) = core.omitted_generator() {
        return Ok(verdict(
            VerdictKind::Separable,
            Certificate::Separable {
                witness: AutomorphismWitness::empty(),
                omitted_generator: k,
            },
            DecisionStats {
                minimal_length: core.len(),
                level_set_size: 0,
                fast_path: false,
            },
        ));
    }

    // Fast path: connected Whitehead graph without cut vertices.
    if stallings_criterion(&core)? == StallingsCriterion::BindsCertified {
        return Ok(verdict(
            VerdictKind::Binds,
            Certificate::Stallings {
                witness: AutomorphismWitness::empty(),
                certified: core.clone(),
            },
            DecisionStats {
                minimal_length: core.len(),
                level_set_size: 0,
                fast_path: true,
            },
        ));
    }

    let min = minimize_with_budget(&core, &mut budget)?;
    if let Some(k) = min.minimal.omitted_generator() {
        return Ok(verdict(
            VerdictKind::Separable,
            Certificate::Separable {
                witness: min.witness,
                omitted_generator: k,
            },
            DecisionStats {
                minimal_length: min.minimal_length,
                level_set_size: 0,
                fast_path: false,
            },
        ));
    }

    let (set, hit) = closure(&min.minimal, limits, &mut budget, scan_member)?;
    if set.truncated {
        return Err(Error::ResourceLimit {
            phase: "level-set closure",
            moves_applied: budget.used,
            members_seen: set.len(),
        });
    }
    let stats = DecisionStats {
        minimal_length: min.minimal_length,
        level_set_size: set.len(),
        fast_path: false,
    };
    match hit {
        Some((member, LevelHit::Omits(k))) => {
            let mut witness = min.witness;
            witness.extend(&path_from_seed(&min.minimal, &member, &set.parents));
            Ok(verdict(
                VerdictKind::Separable,
                Certificate::Separable {
                    witness,
                    omitted_generator: k,
                },
                stats,
            ))
        }
        Some((member, LevelHit::Certified)) => {
            let mut witness = min.witness;
            witness.extend(&path_from_seed(&min.minimal, &member, &set.parents));
            Ok(verdict(
                VerdictKind::Binds,
                Certificate::Stallings {
                    witness,
                    certified: member,
                },
                stats,
            ))
        }
        None => Ok(verdict(
            VerdictKind::Binds,
            Certificate::ExhaustedLevelSet {
                witness: min.witness,
                minimal: min.minimal,
                level_set_size: set.len(),
            },
            stats,
        )),
    }
}

/// True iff the element is primitive: non-trivial with orbit-minimal cyclic
/// length 1. Primitivity is conjugacy-invariant, so it is decided on the
/// cyclic core.
pub fn is_primitive(word: &Word, rank: Rank, limits: &Limits) -> Result<bool> {
    let (core, _) = CyclicWord::reduce(word, rank)?;
    if core.is_empty() {
        return Ok(false);
    }
    Ok(minimize(&core, limits)?.minimal_length == 1)
}

/// Extracts the cyclic root and tests it for primitivity. Returns the flag
/// and the root exponent.
pub fn is_power_of_primitive(word: &Word, rank: Rank, limits: &Limits) -> Result<(bool, u32)> {
    let (core, _) = CyclicWord::reduce(word, rank)?;
    if core.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (root, exponent) = core.root()?;
    let primitive = is_primitive(&root.to_word(), rank, limits)?;
    Ok((primitive, exponent))
}

/// Outcome of the bounded brute-force search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    SeparableWitnessFound {
        witness: AutomorphismWitness,
        omitted_generator: u32,
    },
    NoWitnessToDepth {
        depth: u32,
    },
}

/// Independent test oracle: breadth-first search over all sequences of
/// elementary Nielsen automorphisms up to the given length, states deduped
/// by cyclic core and capped at length `|word| + depth`, reporting a witness
/// if any image's cyclic core omits a generator.
///
/// Deliberately ignorant of Whitehead theory: no length monotonicity, no
/// peak reduction, no graph criterion.
pub fn brute_force_oracle(word: &Word, rank: Rank, depth: u32) -> Result<OracleOutcome> {
    let cap = word.len() + depth as usize;
    let (seed, _) = CyclicWord::reduce(word, rank)?;
    if let Some(k) = seed.omitted_generator() {
        return Ok(OracleOutcome::SeparableWitnessFound {
            witness: AutomorphismWitness::empty(),
            omitted_generator: k,
        });
    }
    let moves = NielsenMove::enumerate_automorphisms(rank);
    let mut parents: HashMap<CyclicWord, (CyclicWord, NielsenMove)> = HashMap::new();
    let mut frontier = vec![seed.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for state in &frontier {
            for m in &moves {
                let image = m.apply_to_cyclic(state)?;
                if image.len() > cap || image == seed || parents.contains_key(&image) {
                    continue;
                }
                parents.insert(image.clone(), (state.clone(), m.clone()));
                if let Some(k) = image.omitted_generator() {
                    let mut path = Vec::new();
                    let mut cursor = image;
                    while cursor != seed {
                        let (prev, m) = parents[&cursor].clone();
                        path.push(Move::Nielsen(m));
                        cursor = prev;
                    }
                    path.reverse();
                    return Ok(OracleOutcome::SeparableWitnessFound {
                        witness: AutomorphismWitness::new(path),
                        omitted_generator: k,
                    });
                }
                next.push(image);
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(OracleOutcome::NoWitnessToDepth { depth })
}

/// A canonical binding word: `x1^2 x2^2 ... xg^2` for `g >= 2`, `x1` for
/// `g = 1`. Panics if the decision procedure fails to confirm it binds.
pub fn sample_binding_word(rank: Rank) -> CyclicWord {
    let letters: Vec<Letter> = if rank.get() == 1 {
        vec![Letter::new(1, false)]
    } else {
        (1..=rank.get())
            .flat_map(|k| [Letter::new(k, false), Letter::new(k, false)])
            .collect()
    };
    let c = CyclicWord::from_cyclically_reduced(letters, rank);
    let verdict =
        decide_cyclic(&c, &Limits::default()).expect("sample binding word must be decidable");
    assert!(
        verdict.binds(),
        "sample word {c} unexpectedly failed to bind"
    );
    c
}

/// Replays a verdict's certificate and confirms it proves what it claims.
pub fn verify_verdict(verdict: &Verdict, limits: &Limits) -> Result<()> {
    let fail = |msg: String| Err(Error::CertificateUnsound(msg));
    match &verdict.certificate {
        Certificate::Separable {
            witness,
            omitted_generator,
        } => {
            if verdict.kind != VerdictKind::Separable {
                return fail("separable certificate on a binds verdict".into());
            }
            if *omitted_generator == 0 || *omitted_generator > verdict.rank.get() {
                return fail(format!(
                    "omitted generator {omitted_generator} out of range"
                ));
            }
            let image = witness.apply_to_word(&verdict.word, verdict.rank)?;
            let (core, _) = CyclicWord::reduce(&image, verdict.rank)?;
            if core.support().contains(omitted_generator) {
                return fail(format!(
                    "replayed core {core} still uses x{omitted_generator}"
                ));
            }
            Ok(())
        }
        Certificate::Stallings { witness, certified } => {
            if verdict.kind != VerdictKind::Binds {
                return fail("binding certificate on a separable verdict".into());
            }
            let image = witness.apply_to_word(&verdict.word, verdict.rank)?;
            let (core, _) = CyclicWord::reduce(&image, verdict.rank)?;
            if core != *certified {
                return fail(format!(
                    "witness replays to {core}, certificate names {certified}"
                ));
            }
            if stallings_criterion(certified)? != StallingsCriterion::BindsCertified {
                return fail(format!("{certified} fails the connectivity criterion"));
            }
            Ok(())
        }
        Certificate::ExhaustedLevelSet {
            witness,
            minimal,
            level_set_size,
        } => {
            if verdict.kind != VerdictKind::Binds {
                return fail("binding certificate on a separable verdict".into());
            }
            let image = witness.apply_to_word(&verdict.word, verdict.rank)?;
            let (core, _) = CyclicWord::reduce(&image, verdict.rank)?;
            if core != *minimal {
                return fail(format!(
                    "witness replays to {core}, certificate names {minimal}"
                ));
            }
            let set = level_set(minimal, limits)?;
            if set.truncated() {
                return Err(Error::ResourceLimit {
                    phase: "certificate re-verification",
                    moves_applied: 0,
                    members_seen: set.len(),
                });
            }
            if set.len() != *level_set_size {
                return fail(format!(
                    "level set re-enumerates to {} members, certificate says {}",
                    set.len(),
                    level_set_size
                ));
            }
            if let Some(bad) = set.members().iter().find(|m| !m.has_full_support()) {
                return fail(format!("level-set member {bad} omits a generator"));
            }
            Ok(())
        }
    }
}

// --- JSON wire format -----------------------------------------------------

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    word: String,
    rank: u32,
    verdict: String,
    certificate: CertificateJson,
    stats: DecisionStats,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum CertificateJson {
    Separable {
        witness: AutomorphismWitness,
        omitted_generator: u32,
    },
    Stallings {
        witness: AutomorphismWitness,
        certified_word: String,
    },
    ExhaustedLevelSet {
        witness: AutomorphismWitness,
        minimal_word: String,
        level_set_size: usize,
    },
}

impl Verdict {
    pub fn to_json(&self) -> String {
        let certificate = match &self.certificate {
            Certificate::Separable {
                witness,
                omitted_generator,
            } => CertificateJson::Separable {
                witness: witness.clone(),
                omitted_generator: *omitted_generator,
            },
            Certificate::Stallings { witness, certified } => CertificateJson::Stallings {
                witness: witness.clone(),
                certified_word: certified.to_string(),
            },
            Certificate::ExhaustedLevelSet {
                witness,
                minimal,
                level_set_size,
            } => CertificateJson::ExhaustedLevelSet {
                witness: witness.clone(),
                minimal_word: minimal.to_string(),
                level_set_size: *level_set_size,
            },
        };
        let json = VerdictJson {
            word: self.word.to_string(),
            rank: self.rank.get(),
            verdict: match self.kind {
                VerdictKind::Binds => "binds".into(),
                VerdictKind::Separable => "separable".into(),
            },
            certificate,
            stats: self.stats,
        };
        serde_json::to_string(&json).expect("verdict serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Verdict> {
        let json: VerdictJson = serde_json::from_str(text)
            .map_err(|e| Error::Syntax(format!("bad verdict JSON: {e}")))?;
        let rank = Rank::new(json.rank)?;
        let word = Word::parse(&json.word, rank)?;
        let kind = match json.verdict.as_str() {
            "binds" => VerdictKind::Binds,
            "separable" => VerdictKind::Separable,
            other => return Err(Error::Syntax(format!("unknown verdict {other:?}"))),
        };
        let certificate = match json.certificate {
            CertificateJson::Separable {
                witness,
                omitted_generator,
            } => Certificate::Separable {
                witness,
                omitted_generator,
            },
            CertificateJson::Stallings {
                witness,
                certified_word,
            } => Certificate::Stallings {
                witness,
                certified: CyclicWord::parse(&certified_word, rank)?,
            },
            CertificateJson::ExhaustedLevelSet {
                witness,
                minimal_word,
                level_set_size,
            } => Certificate::ExhaustedLevelSet {
                witness,
                minimal: CyclicWord::parse(&minimal_word, rank)?,
                level_set_size,
            },
        };
        Ok(Verdict {
            word,
            rank,
            kind,
            certificate,
            stats: json.stats,
        })
    }
}
