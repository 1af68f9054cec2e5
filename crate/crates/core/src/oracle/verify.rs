//! Lemma verification runs. Each returns a [`VerificationReport`]; an empty
//! counterexample list means the lemma held on every case examined.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::group::{subgroups_of_product, GroupElement, ProductGroup, Subgroup};
use super::profile::{enumerate_with_subgroups, rejection_tally, ActionProfile, AxiomSet};
use super::OracleError;
use crate::perm::{orbits, realize_action, CycleType, PermError, Permutation};
use crate::realizability;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub lemma: String,
    pub params: Value,
    pub cases: u64,
    pub counterexamples: Vec<String>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn is_consistent(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_consistent() {
            "consistent"
        } else {
            "counterexample found"
        }
    }
}

// Counterexample lists are capped so a broken build does not flood output.
const MAX_REPORTED: usize = 50;

fn push_capped(list: &mut Vec<String>, item: String) {
    if list.len() < MAX_REPORTED {
        list.push(item);
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

// ---------------------------------------------------------------------------
// Orbits

/// Checks that `beta` maps each `alpha`-orbit onto an `alpha`-orbit of the
/// same size. Returns a description of the first failure, if any.
pub fn check_orbits_lemma(
    alpha: &Permutation,
    beta: &Permutation,
) -> Result<Option<String>, PermError> {
    let n = alpha.len();
    if !alpha.commutes_with(beta)? {
        return Err(PermError::Parse {
            input: format!("{alpha} / {beta}"),
            reason: "the pair does not commute".into(),
        });
    }
    let blocks = orbits(std::slice::from_ref(alpha), n)?;
    let mut block_of = vec![0; n];
    for (id, block) in blocks.iter().enumerate() {
        for &x in block {
            block_of[x] = id;
        }
    }
    for block in &blocks {
        let target = block_of[beta.apply(block[0])];
        let same_orbit = block.iter().all(|&x| block_of[beta.apply(x)] == target);
        if !same_orbit || blocks[target].len() != block.len() {
            let shown: Vec<usize> = block.iter().map(|x| x + 1).collect();
            return Ok(Some(format!(
                "alpha={alpha} beta={beta} (n={n}): image of orbit {shown:?} is not an alpha-orbit of size {}",
                block.len()
            )));
        }
    }
    Ok(None)
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// A random element of the centralizer of `alpha`: permute cycles of equal
/// length among themselves and rotate each one.
fn random_centralizer_element(rng: &mut ChaCha8Rng, alpha: &Permutation) -> Permutation {
    let n = alpha.len();
    let mut all_cycles = alpha.cycles();
    all_cycles.extend(alpha.fixed_points().into_iter().map(|x| vec![x]));
    let mut by_length: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in all_cycles {
        by_length.entry(c.len()).or_default().push(c);
    }
    let mut images = vec![0; n];
    for (len, cycles) in by_length {
        let mut targets: Vec<usize> = (0..cycles.len()).collect();
        targets.shuffle(rng);
        for (source, &target) in cycles.iter().zip(&targets) {
            let shift = rng.gen_range(0..len);
            for (t, &x) in source.iter().enumerate() {
                images[x] = cycles[target][(t + shift) % len];
            }
        }
    }
    Permutation::from_images(images).expect("centralizer element is a bijection")
}

const PROFILE_GROUPS: [(usize, usize); 5] = [(3, 3), (3, 9), (5, 5), (3, 15), (7, 7)];

/// Generators of a random faithful product action on at most `n_max` points,
/// relabelled by a random conjugation.
fn random_profile_pair(rng: &mut ChaCha8Rng, n_max: usize) -> Option<(Permutation, Permutation)> {
    let (p, q) = *PROFILE_GROUPS.choose(rng)?;
    let subs = subgroups_of_product(p, q);
    let budget = rng.gen_range(1..=n_max);
    let mut stabilizers = Vec::new();
    let mut used = 0;
    for _ in 0..8 {
        let h = subs.choose(rng)?;
        if used + h.index() <= budget {
            used += h.index();
            stabilizers.push(h.clone());
        }
    }
    let profile = ActionProfile::new(p, q, stabilizers).ok()?;
    if profile.n() == 0 || !profile.is_faithful() {
        return None;
    }
    let (alpha, beta) = realize_action(&profile).ok()?;
    let sigma = random_permutation(rng, profile.n());
    let alpha = alpha.conjugate_by(&sigma).ok()?;
    let beta = beta.conjugate_by(&sigma).ok()?;
    // random words in the two generators still commute
    let (i, j, k, l) = (
        rng.gen_range(0..p as u64),
        rng.gen_range(0..q as u64),
        rng.gen_range(0..p as u64),
        rng.gen_range(0..q as u64),
    );
    let x = alpha.pow(i).compose(&beta.pow(j)).ok()?;
    let y = alpha.pow(k).compose(&beta.pow(l)).ok()?;
    Some((x, y))
}

/// Randomized check of the Orbits Lemma on `trials` commuting pairs on at
/// most `n_max` points. Pairs come from three sources in rotation: realized
/// product actions, centralizer elements of a random permutation, and two
/// powers of one random permutation.
pub fn verify_orbits_lemma(n_max: usize, trials: u64, seed: u64) -> Result<VerificationReport, OracleError> {
    if n_max < 2 || trials < 1 {
        return Err(OracleError::InvalidParameters(format!(
            "need n_max >= 2 and trials >= 1 (got n_max={n_max}, trials={trials})"
        )));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    let mut by_source: BTreeMap<&str, u64> = BTreeMap::new();

    for trial in 0..trials {
        let (source, alpha, beta) = match trial % 3 {
            0 => match random_profile_pair(&mut rng, n_max) {
                Some((a, b)) => ("product_action", a, b),
                None => {
                    let n = rng.gen_range(2..=n_max);
                    let a = random_permutation(&mut rng, n);
                    let b = random_centralizer_element(&mut rng, &a);
                    ("centralizer", a, b)
                }
            },
            1 => {
                let n = rng.gen_range(2..=n_max);
                let a = random_permutation(&mut rng, n);
                let b = random_centralizer_element(&mut rng, &a);
                ("centralizer", a, b)
            }
            _ => {
                let n = rng.gen_range(2..=n_max);
                let sigma = random_permutation(&mut rng, n);
                let i = rng.gen_range(1..=n as u64);
                let j = rng.gen_range(1..=n as u64);
                ("powers", sigma.pow(i), sigma.pow(j))
            }
        };
        *by_source.entry(source).or_insert(0) += 1;
        if let Some(failure) = check_orbits_lemma(&alpha, &beta)? {
            push_capped(&mut counterexamples, failure);
        }
    }

    Ok(VerificationReport {
        lemma: "orbits".into(),
        params: json!({ "n_max": n_max, "trials": trials, "sources": by_source }),
        cases: trials,
        counterexamples,
        elapsed_ms: elapsed_ms(start),
        seed: Some(seed),
    })
}

// ---------------------------------------------------------------------------
// D2

/// Every permutation of the given cycle type, as rows of a flat byte buffer
/// (row `k` is `buf[k*n..(k+1)*n]`).
fn permutations_of_type(ct: &CycleType) -> Vec<u8> {
    let n = ct.n();
    assert!(n <= u8::MAX as usize);
    let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in ct.cycles() {
        *lengths.entry(c).or_insert(0) += 1;
    }
    if ct.fixed() > 0 {
        lengths.insert(1, ct.fixed());
    }
    let mut out = Vec::new();
    let mut images = vec![u8::MAX; n];
    fill_cycles(&mut images, &mut lengths, &mut out);
    out
}

// The least unassigned point opens the next cycle, so each permutation is
// produced exactly once.
fn fill_cycles(images: &mut [u8], lengths: &mut BTreeMap<usize, usize>, out: &mut Vec<u8>) {
    let Some(start) = images.iter().position(|&x| x == u8::MAX) else {
        out.extend_from_slice(images);
        return;
    };
    let choices: Vec<usize> = lengths.iter().filter(|(_, &c)| c > 0).map(|(&l, _)| l).collect();
    for len in choices {
        *lengths.get_mut(&len).unwrap() -= 1;
        let mut cycle = vec![start];
        extend_cycle(images, &mut cycle, len, lengths, out);
        *lengths.get_mut(&len).unwrap() += 1;
    }
}

fn extend_cycle(
    images: &mut [u8],
    cycle: &mut Vec<usize>,
    len: usize,
    lengths: &mut BTreeMap<usize, usize>,
    out: &mut Vec<u8>,
) {
    if cycle.len() == len {
        for (i, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(i + 1) % len] as u8;
        }
        fill_cycles(images, lengths, out);
        for &x in cycle.iter() {
            images[x] = u8::MAX;
        }
        return;
    }
    let start = cycle[0];
    for next in start + 1..images.len() {
        if images[next] == u8::MAX && !cycle.contains(&next) {
            cycle.push(next);
            extend_cycle(images, cycle, len, lengths, out);
            cycle.pop();
        }
    }
}

/// All involutions on `n` points whose cycle type is realizable with order
/// 2, as a flat buffer of image rows.
pub fn involutions(n: usize) -> Result<Vec<u8>, OracleError> {
    let types = realizability::realizable_cycle_types(n, 2)
        .map_err(|e| OracleError::InvalidParameters(e.to_string()))?;
    Ok(types.iter().flat_map(permutations_of_type).collect())
}

/// `None` if `a`, `b` do not commute or are equal; otherwise whether their
/// product is again a realizable involution.
fn product_is_realizable_involution(a: &[u8], b: &[u8], product: &mut [u8]) -> Option<bool> {
    if a == b || (0..a.len()).any(|i| a[b[i] as usize] != b[a[i] as usize]) {
        return None;
    }
    for (i, slot) in product.iter_mut().enumerate() {
        *slot = a[b[i] as usize];
    }
    let images: Vec<usize> = product.iter().map(|&x| x as usize).collect();
    let ct = Permutation::from_images(images).expect("product is a bijection").cycle_type();
    let m = ct.order();
    Some(m == 2 && realizability::check(&ct, m).map(|v| v.realizable).unwrap_or(false))
}

fn render_row(row: &[u8]) -> String {
    Permutation::from_images(row.iter().map(|&x| x as usize).collect())
        .expect("row is a bijection")
        .to_string()
}

/// Exhaustive check that no two distinct commuting realizable involutions
/// of `K_n` have a realizable involution as product.
///
/// For `n <= 11` every unordered pair is examined. For `n = 15` the first
/// factor is fixed to one representative (all realizable involutions are
/// conjugate, and conjugation preserves commuting and cycle types).
pub fn verify_d2_lemma(n: usize) -> Result<VerificationReport, OracleError> {
    if !(7..=15).contains(&n) || n % 4 != 3 {
        return Err(OracleError::OutOfRange {
            n,
            reason: "exhaustive search covers n = 7, 11, 15; use the symbolic parity record (d2_obstruction) for larger n".into(),
        });
    }
    let start = Instant::now();
    let rows = involutions(n)?;
    let count = rows.len() / n;
    let row = |k: usize| &rows[k * n..(k + 1) * n];

    let exhaustive = n <= 11;
    let first_factors: Vec<usize> = if exhaustive { (0..count).collect() } else { vec![0] };

    let per_first: Vec<(u64, u64, Vec<String>)> = first_factors
        .par_iter()
        .map(|&i| {
            let mut product = vec![0u8; n];
            let mut examined = 0u64;
            let mut commuting = 0u64;
            let mut bad = Vec::new();
            let from = if exhaustive { i + 1 } else { 0 };
            for j in from..count {
                examined += 1;
                match product_is_realizable_involution(row(i), row(j), &mut product) {
                    None => {}
                    Some(realizable) => {
                        commuting += 1;
                        if realizable {
                            push_capped(
                                &mut bad,
                                format!(
                                    "{} and {} commute with realizable product {}",
                                    render_row(row(i)),
                                    render_row(row(j)),
                                    render_row(&product)
                                ),
                            );
                        }
                    }
                }
            }
            (examined, commuting, bad)
        })
        .collect();

    let mut cases = 0;
    let mut commuting_pairs = 0;
    let mut counterexamples = Vec::new();
    for (examined, commuting, bad) in per_first {
        cases += examined;
        commuting_pairs += commuting;
        for b in bad {
            push_capped(&mut counterexamples, b);
        }
    }
    let shape = realizability::realizable_cycle_types(n, 2)
        .map_err(|e| OracleError::InvalidParameters(e.to_string()))?
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>();
    let params = if exhaustive {
        json!({
            "n": n,
            "mode": "exhaustive",
            "involution_types": shape,
            "involutions": count,
            "commuting_pairs": commuting_pairs,
        })
    } else {
        json!({
            "n": n,
            "mode": "one representative first factor",
            "involution_types": shape,
            "involutions": count,
            "commuting_partners_of_representative": commuting_pairs,
            "representative": render_row(row(0)),
        })
    };
    Ok(VerificationReport {
        lemma: "d2".into(),
        params,
        cases,
        counterexamples,
        elapsed_ms: elapsed_ms(start),
        seed: None,
    })
}

// ---------------------------------------------------------------------------
// Profile-based lemmas

/// What a lemma needs to know about one generating pair of a profile.
struct PairFacts {
    alpha: CycleType,
    beta: CycleType,
    alpha_type4: bool,
    beta_type4: bool,
}

impl PairFacts {
    fn new(profile: &ActionProfile, x: GroupElement, y: GroupElement) -> Self {
        let alpha = profile.cycle_type_of(x);
        let beta = profile.cycle_type_of(y);
        let type4 = |ct: &CycleType| {
            let m = ct.order();
            m >= 2 && realizability::is_type4(ct, m).unwrap_or(false)
        };
        PairFacts {
            alpha_type4: type4(&alpha),
            beta_type4: type4(&beta),
            alpha,
            beta,
        }
    }
}

fn describe(profile: &ActionProfile, x: GroupElement, y: GroupElement) -> String {
    let orbits: Vec<String> = profile
        .orbits()
        .iter()
        .map(|o| format!("{}:{}", o.size, o.stabilizer))
        .collect();
    format!(
        "Z{}xZ{} on n={} orbits [{}], alpha={x} beta={y}",
        profile.p(),
        profile.q(),
        profile.n(),
        orbits.join(" ")
    )
}

fn check_product_params(p: usize, q: usize, n_max: usize) -> Result<(), OracleError> {
    if p < 3 || q < 3 || p.is_multiple_of(2) || q.is_multiple_of(2) || !q.is_multiple_of(p) {
        return Err(OracleError::InvalidParameters(format!(
            "Z{p} x Z{q}: need p, q odd, at least 3, with p | q"
        )));
    }
    if n_max < 7 {
        return Err(OracleError::InvalidParameters(format!("n_max must be at least 7 (got {n_max})")));
    }
    Ok(())
}

/// Runs `judge` on every (profile, generating pair) for the given cells,
/// in parallel over cells; results are merged in cell order.
fn scan_cells<F>(
    cells: &[(usize, usize, usize)],
    judge: F,
) -> Result<(u64, u64, Vec<String>, BTreeMap<String, u64>), OracleError>
where
    F: Fn(&ActionProfile, &PairFacts, &mut BTreeMap<String, u64>) -> Option<String> + Sync,
{
    let mut subgroups: HashMap<(usize, usize), Vec<Subgroup>> = HashMap::new();
    for &(p, q, _) in cells {
        subgroups.entry((p, q)).or_insert_with(|| subgroups_of_product(p, q));
    }
    let results: Vec<Result<_, OracleError>> = cells
        .par_iter()
        .map(|&(p, q, n)| {
            let profiles = enumerate_with_subgroups(p, q, n, AxiomSet::ALL, &subgroups[&(p, q)])?;
            let bases = if profiles.is_empty() {
                Vec::new()
            } else {
                ProductGroup::new(p, q).bases()
            };
            let mut cases = 0u64;
            let mut bad = Vec::new();
            let mut tally = BTreeMap::new();
            for profile in &profiles {
                for &(x, y) in &bases {
                    cases += 1;
                    let facts = PairFacts::new(profile, x, y);
                    if let Some(why) = judge(profile, &facts, &mut tally) {
                        push_capped(&mut bad, format!("{}: {why}", describe(profile, x, y)));
                    }
                }
            }
            Ok((profiles.len() as u64, cases, bad, tally))
        })
        .collect();

    let mut profiles = 0;
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    let mut tally: BTreeMap<String, u64> = BTreeMap::new();
    for r in results {
        let (pr, c, bad, t) = r?;
        profiles += pr;
        cases += c;
        for b in bad {
            push_capped(&mut counterexamples, b);
        }
        for (k, v) in t {
            *tally.entry(k).or_insert(0) += v;
        }
    }
    Ok((profiles, cases, counterexamples, tally))
}

fn bump(tally: &mut BTreeMap<String, u64>, key: &str) {
    *tally.entry(key.to_string()).or_insert(0) += 1;
}

/// Fixed Vertex Lemma over all profiles of `Z_p x Z_q` on `7..=n_max`
/// points and all generating pairs `(alpha, beta)` with
/// `<alpha> ∩ <beta>` trivial.
pub fn verify_fixed_vertex_lemma(p: usize, q: usize, n_max: usize) -> Result<VerificationReport, OracleError> {
    check_product_params(p, q, n_max)?;
    let start = Instant::now();
    let cells: Vec<(usize, usize, usize)> = (7..=n_max).map(|n| (p, q, n)).collect();
    let (profiles, cases, counterexamples, tally) = scan_cells(&cells, |_, f, tally| {
        let fa = f.alpha.fixed();
        let fb = f.beta.fixed();
        if fa != 0 && fa != 3 {
            return Some(format!("alpha fixes {fa} vertices"));
        }
        if fb != 0 && fb != 3 {
            return Some(format!("beta fixes {fb} vertices"));
        }
        if fb > 0 {
            bump(tally, "beta fixes 3");
            if p != 3 {
                return Some("beta fixes vertices but p != 3".into());
            }
        }
        if fa > 0 {
            bump(tally, "alpha fixes 3");
            if p != 3 || q != 3 {
                return Some("alpha fixes vertices but (p, q) != (3, 3)".into());
            }
        }
        if fa == 0 && fb == 0 {
            bump(tally, "no fixed vertices");
        }
        None
    })?;
    Ok(VerificationReport {
        lemma: "fixed-vertex".into(),
        params: json!({
            "p": p, "q": q, "n_range": [7, n_max],
            "axioms": AxiomSet::ALL.names(),
            "profiles": profiles,
            "tally": tally,
        }),
        cases,
        counterexamples,
        elapsed_ms: elapsed_ms(start),
        seed: None,
    })
}

/// Conclusions (1) and (2) of the 3-Cycle Lemma over the same profile space
/// as [`verify_fixed_vertex_lemma`]. Conclusion (3) is an axiom; the number
/// of profiles it rejects is reported.
pub fn verify_3cycle_consequences(p: usize, q: usize, n_max: usize) -> Result<VerificationReport, OracleError> {
    check_product_params(p, q, n_max)?;
    let start = Instant::now();
    let cells: Vec<(usize, usize, usize)> = (7..=n_max).map(|n| (p, q, n)).collect();
    let (profiles, cases, counterexamples, tally) = scan_cells(&cells, |profile, f, tally| {
        if f.alpha_type4 {
            return Some("alpha is of type 4".into());
        }
        if f.beta_type4 {
            bump(tally, "beta type 4");
            if p != 3 {
                return Some("beta is of type 4 but p != 3".into());
            }
        }
        let no_fixed = f.alpha.fixed() == 0 && f.beta.fixed() == 0;
        let some_without_3cycles = f.alpha.count_of(3) == 0 || f.beta.count_of(3) == 0;
        if no_fixed && some_without_3cycles {
            bump(tally, "fixed-point free, a generator without 3-cycles");
            if profile.n() % (p * q) != 0 {
                return Some(format!("pq = {} does not divide n", p * q));
            }
        }
        None
    })?;

    let without_triples = AxiomSet {
        at_most_two_invariant_triples: false,
        ..AxiomSet::ALL
    };
    let mut rejected_by_triples = 0;
    for n in 7..=n_max {
        rejected_by_triples += rejection_tally(p, q, n, without_triples, AxiomSet::ALL)?
            .get("at_most_two_invariant_triples")
            .copied()
            .unwrap_or(0);
    }

    Ok(VerificationReport {
        lemma: "3cycle".into(),
        params: json!({
            "p": p, "q": q, "n_range": [7, n_max],
            "axioms": AxiomSet::ALL.names(),
            "profiles": profiles,
            "tally": tally,
            "rejected_by_triples_axiom": rejected_by_triples,
            "conclusion_3": "assumed (axiom at_most_two_invariant_triples), not verified",
        }),
        cases,
        counterexamples,
        elapsed_ms: elapsed_ms(start),
        seed: None,
    })
}

/// `(p, q)` with `p | q`, both odd, `3 <= p <= q <= q_max`.
fn product_pairs(q_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for q in (3..=q_max).step_by(2) {
        for p in (3..=q).step_by(2) {
            if q % p == 0 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Point counts scanned by [`verify_pq_lemma`]: all `n` in `7..=45` (capped
/// at `n_max`) plus every `n ≡ 3 (mod 4)` up to `n_max`.
fn pq_point_counts(n_max: usize) -> Vec<usize> {
    (7..=n_max).filter(|&n| n <= 45 || n % 4 == 3).collect()
}

/// pq Lemma case analysis: every profile (all axioms) and generating pair
/// must satisfy the divisibility conclusion of its case.
pub fn verify_pq_lemma(q_max: usize, n_max: usize) -> Result<VerificationReport, OracleError> {
    verify_pq_lemma_with(q_max, n_max, &|_| {})
}

/// As [`verify_pq_lemma`], reporting each finished `(p, q)` to `progress`.
pub fn verify_pq_lemma_with(
    q_max: usize,
    n_max: usize,
    progress: &(dyn Fn(String) + Sync),
) -> Result<VerificationReport, OracleError> {
    if q_max < 3 || n_max < 7 {
        return Err(OracleError::InvalidParameters(format!(
            "need q_max >= 3 and n_max >= 7 (got q_max={q_max}, n_max={n_max})"
        )));
    }
    let start = Instant::now();
    let ns = pq_point_counts(n_max);
    let mut total_profiles = 0;
    let mut total_cases = 0;
    let mut counterexamples = Vec::new();
    let mut per_group = serde_json::Map::new();

    for (p, q) in product_pairs(q_max) {
        let cells: Vec<(usize, usize, usize)> = ns.iter().map(|&n| (p, q, n)).collect();
        let (profiles, cases, bad, tally) = scan_cells(&cells, |profile, f, tally| {
            let n = profile.n();
            let pq = p * q;
            let divides = |m: usize| m.is_multiple_of(pq);
            let (case, branches): (&str, Vec<(&str, usize)>) = if p > 3 {
                ("(1) p>3", vec![("pq|n", n)])
            } else if f.beta_type4 {
                ("(2) p=3, beta type 4", vec![("pq|n-3", n - 3)])
            } else if q != 3 {
                ("(3) p=3, q!=3", vec![("pq|n", n), ("pq|n-3", n - 3)])
            } else {
                ("(4) p=q=3", vec![("pq|n", n), ("pq|n-3", n - 3), ("pq|n-6", n - 6)])
            };
            match branches.iter().find(|(_, m)| divides(*m)) {
                Some((label, _)) => {
                    bump(tally, &format!("{case}: {label}"));
                    None
                }
                None => Some(format!("case {case}: no branch of {:?} holds", branches.iter().map(|b| b.0).collect::<Vec<_>>())),
            }
        })?;
        total_profiles += profiles;
        total_cases += cases;
        for b in bad {
            push_capped(&mut counterexamples, b);
        }
        per_group.insert(
            format!("Z{p}xZ{q}"),
            json!({ "profiles": profiles, "cases": cases, "branches": tally }),
        );
        progress(format!("pq lemma: Z{p}xZ{q} done ({profiles} profiles, {cases} cases)"));
    }

    Ok(VerificationReport {
        lemma: "pq".into(),
        params: json!({
            "q_max": q_max,
            "n_max": n_max,
            "n_values": ns,
            "axioms": AxiomSet::ALL.names(),
            "profiles": total_profiles,
            "groups": per_group,
        }),
        cases: total_cases,
        counterexamples,
        elapsed_ms: elapsed_ms(start),
        seed: None,
    })
}
