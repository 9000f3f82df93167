//! Tarski-style deductive relations over a finite universe of judgement
//! atoms, hypothetical systems, and the two translations between them.
//!
//! Atoms are `0..n` with `n ≤ 8`; a set of atoms is a bitmask.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub type Atom = usize;
pub type AtomSet = u8;

pub const MAX_UNIVERSE: usize = 8;

fn range(list: &[Atom]) -> AtomSet {
    list.iter().fold(0, |acc, &a| acc | (1 << a))
}

fn subsets_of(set: AtomSet) -> impl Iterator<Item = AtomSet> {
    // all submasks, including 0 and `set`
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 { None } else { Some((current - 1) & set) };
        Some(current)
    })
}

fn members(set: AtomSet) -> Vec<Atom> {
    (0..MAX_UNIVERSE).filter(|i| set & (1 << i) != 0).collect()
}

/// `Δ ≻ J` for every subset `Δ` of the universe and every atom `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeductiveRelation {
    universe: usize,
    /// Indexed by `Δ`: the atoms `J` with `Δ ≻ J`.
    table: Vec<AtomSet>,
}

impl DeductiveRelation {
    pub fn new(universe: usize, holds: impl Fn(AtomSet, Atom) -> bool) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe too large");
        let table = (0..1usize << universe)
            .map(|delta| {
                (0..universe)
                    .filter(|&j| holds(delta as AtomSet, j))
                    .fold(0, |acc, j| acc | (1 << j))
            })
            .collect();
        DeductiveRelation { universe, table }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn holds(&self, delta: AtomSet, j: Atom) -> bool {
        self.table[delta as usize] & (1 << j) != 0
    }

    fn pairs(&self) -> impl Iterator<Item = (AtomSet, Atom)> + '_ {
        (0..self.table.len()).flat_map(move |d| (0..self.universe).map(move |j| (d as AtomSet, j)))
    }

    /// Every consequence follows from a finite part of its hypotheses.
    /// Always true here; checked literally anyway.
    pub fn is_finitary(&self) -> bool {
        self.pairs()
            .filter(|&(d, j)| self.holds(d, j))
            .all(|(d, j)| subsets_of(d).any(|sub| self.holds(sub, j)))
    }

    pub fn is_monotonic(&self) -> bool {
        self.pairs()
            .filter(|&(d, j)| self.holds(d, j))
            .all(|(d, j)| (0..self.table.len()).all(|e| e as AtomSet & d != d || self.holds(e as AtomSet, j)))
    }

    /// The least monotonic relation containing this one.
    pub fn monotone_closure(&self) -> Self {
        DeductiveRelation::new(self.universe, |d, j| subsets_of(d).any(|sub| self.holds(sub, j)))
    }
}

/// `premises ⊢ conclusion`, usable under any hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypotheticalRule {
    pub premises: Vec<Atom>,
    pub conclusion: Atom,
}

/// Judgements `J0, …, J(n-1) ⊢ J` over a finite universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypotheticalSystem {
    /// Derivability by a finite ruleset, with the hypotheses as axioms.
    Rules { universe: usize, rules: Vec<HypotheticalRule> },
    /// `Γ ⊢ J` iff `img Γ ≻ J`.
    Relation(DeductiveRelation),
}

impl HypotheticalSystem {
    pub fn universe(&self) -> usize {
        match self {
            HypotheticalSystem::Rules { universe, .. } => *universe,
            HypotheticalSystem::Relation(r) => r.universe(),
        }
    }

    pub fn derivable(&self, hypotheses: &[Atom], j: Atom) -> bool {
        match self {
            HypotheticalSystem::Rules { rules, .. } => {
                let mut known = range(hypotheses);
                loop {
                    let before = known;
                    for rule in rules {
                        if rule.premises.iter().all(|&p| known & (1 << p) != 0) {
                            known |= 1 << rule.conclusion;
                        }
                    }
                    if known == before {
                        return known & (1 << j) != 0;
                    }
                }
            }
            HypotheticalSystem::Relation(r) => r.holds(range(hypotheses), j),
        }
    }
}

/// `Δ ≻ J` iff some Δ-sequence (finite list with range ⊆ Δ) derives `J`.
///
/// Both kinds of system answer by the range of the hypothesis list alone, so
/// one list per subset of `Δ` covers every Δ-sequence.
pub fn rel_from_system(s: &HypotheticalSystem) -> DeductiveRelation {
    DeductiveRelation::new(s.universe(), |delta, j| {
        subsets_of(delta).any(|sub| s.derivable(&members(sub), j))
    })
}

/// `Γ ⊢ J` iff `img Γ ≻ J`.
pub fn system_from_rel(r: &DeductiveRelation) -> HypotheticalSystem {
    HypotheticalSystem::Relation(r.clone())
}

/// All lists over `0..universe` of length at most `max_len`.
pub fn hypothesis_lists(universe: usize, max_len: usize) -> Vec<Vec<Atom>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<Atom>> = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|l| {
                (0..universe).map(move |a| {
                    let mut v = l.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

pub fn random_system(rng: &mut impl Rng, universe: usize) -> HypotheticalSystem {
    let rules = (0..rng.gen_range(0..=6))
        .map(|_| HypotheticalRule {
            premises: (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..universe)).collect(),
            conclusion: rng.gen_range(0..universe),
        })
        .collect();
    HypotheticalSystem::Rules { universe, rules }
}

pub fn random_relation(rng: &mut impl Rng, universe: usize) -> DeductiveRelation {
    let bits: Vec<AtomSet> = (0..1usize << universe).map(|_| rng.gen::<AtomSet>()).collect();
    DeductiveRelation::new(universe, |d, j| bits[d as usize] & (1 << j) != 0)
}

/// `⊢_{≻_⊢}` agrees with `⊢` on every list up to `max_len`.
pub fn check_iff(s: &HypotheticalSystem, max_len: usize) -> Result<(), String> {
    let round = system_from_rel(&rel_from_system(s));
    for list in hypothesis_lists(s.universe(), max_len) {
        for j in 0..s.universe() {
            if round.derivable(&list, j) != s.derivable(&list, j) {
                return Err(format!("{list:?} ⊢ {j}: system says {}, round trip says {}", s.derivable(&list, j), !s.derivable(&list, j)));
            }
        }
    }
    Ok(())
}

/// For finitary `r`: `Δ ≻ J` implies `Δ ≻_{⊢_≻} J`.
pub fn check_finitary(r: &DeductiveRelation) -> Result<(), String> {
    let round = rel_from_system(&system_from_rel(r));
    match r.pairs().find(|&(d, j)| r.holds(d, j) && !round.holds(d, j)) {
        None => Ok(()),
        Some((d, j)) => Err(format!("{:?} ≻ {j} but not after the round trip", members(d))),
    }
}

/// For monotonic `r`: `Δ ≻_{⊢_≻} J` implies `Δ ≻ J`.
pub fn check_monotonic(r: &DeductiveRelation) -> Result<(), String> {
    let round = rel_from_system(&system_from_rel(r));
    match r.pairs().find(|&(d, j)| round.holds(d, j) && !r.holds(d, j)) {
        None => Ok(()),
        Some((d, j)) => Err(format!("{:?} ≻ {j} after the round trip only", members(d))),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TarskiReport {
    pub trials: usize,
    pub iff_pass: usize,
    pub finitary_applicable: usize,
    pub finitary_pass: usize,
    /// Monotonic relations tested: every monotone closure, plus the random
    /// relations that happen to be monotonic.
    pub monotonic_applicable: usize,
    pub monotonic_pass: usize,
    pub counterexamples: Vec<String>,
}

impl TarskiReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn summary(&self) -> String {
        let monotonic = if self.monotonic_pass == self.monotonic_applicable {
            "pass-on-applicable".to_string()
        } else {
            format!("{}/{}", self.monotonic_pass, self.monotonic_applicable)
        };
        format!(
            "iff: {}/{}, finitary⇒: {}/{}, monotonic⇒: {monotonic}",
            self.iff_pass, self.trials, self.finitary_pass, self.finitary_applicable
        )
    }
}

#[derive(Default)]
struct Trial {
    iff: bool,
    finitary: Option<bool>,
    monotonic: Vec<bool>,
    counterexamples: Vec<String>,
}

fn trial(seed: u64) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = rng.gen_range(1..=5);
    let system = random_system(&mut rng, universe);
    let relation = random_relation(&mut rng, universe);
    let mut out = Trial::default();
    match check_iff(&system, 4) {
        Ok(()) => out.iff = true,
        Err(e) => out.counterexamples.push(format!("seed {seed}: iff: {e}")),
    }
    if relation.is_finitary() {
        let ok = check_finitary(&relation);
        if let Err(e) = &ok {
            out.counterexamples.push(format!("seed {seed}: finitary: {e}"));
        }
        out.finitary = Some(ok.is_ok());
    }
    for r in [relation.clone(), relation.monotone_closure()] {
        if r.is_monotonic() {
            let ok = check_monotonic(&r);
            if let Err(e) = &ok {
                out.counterexamples.push(format!("seed {seed}: monotonic: {e}"));
            }
            out.monotonic.push(ok.is_ok());
        }
    }
    out
}

/// Runs `trials` independent trials; trial `i` is seeded with `seed + i`,
/// so the report does not depend on scheduling.
pub fn adjunction_check(seed: u64, trials: usize) -> TarskiReport {
    let results: Vec<Trial> = (0..trials as u64)
        .into_par_iter()
        .map(|i| trial(seed.wrapping_add(i)))
        .collect();
    let mut report = TarskiReport {
        trials,
        ..TarskiReport::default()
    };
    for t in results {
        report.iff_pass += t.iff as usize;
        if let Some(ok) = t.finitary {
            report.finitary_applicable += 1;
            report.finitary_pass += ok as usize;
        }
        report.monotonic_applicable += t.monotonic.len();
        report.monotonic_pass += t.monotonic.iter().filter(|ok| **ok).count();
        report.counterexamples.extend(t.counterexamples);
    }
    report
}
