//! The acceptance suite, shared by the `acceptance` test target and
//! `mwb selftest`. Every criterion draws its random instances from a seeded
//! generator and checks library answers against brute-force oracles written
//! here, independently of the code under test.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Set};
use crate::blockseq::{
    alternates, bridge_uncrossed_2seps, find_blocking_sequence, is_blocking_sequence, satisfies_conditions,
    two_separations, uncrossed_2seps, BlockingOutcome,
};
use crate::decomp::{branch_width, width_of};
use crate::fragility::classify;
use crate::incrim::{bw_slack, certify_pipeline, sep_bound, IncrimCase, PipelineOutcome, SEP_BUDGET_K};
use crate::matroid::{catalog, catalog_entry, catalog_names, has_minor, is_isomorphic, letters, minor_embeddings, Matroid};
use crate::pfield::{Homomorphism, PartialField, PartialFieldId, PfValue};
use crate::pmatrix::LabeledMatrix;
use crate::reptheory::{enumerate_representations, is_representable, stabilizes, Level, Representability, SearchSpace};

pub const DEFAULT_SEED: u64 = 20_240_611;

/// Number of criteria.
pub const COUNT: usize = 11;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let time = match self.limit {
            Some(l) => format!("{:.2}s, limit {}s", self.elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2}s", self.elapsed.as_secs_f64()),
        };
        write!(
            f,
            "{} criterion {:>2} {} ({}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            time,
            self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Option<u64>,
    run: fn(&mut ChaCha8Rng) -> Outcome,
}

const CRITERIA: [Criterion; COUNT] = [
    Criterion { name: "whirl branch width", limit: Some(10), run: whirl_branch_width },
    Criterion { name: "connectivity from bases and from ranks", limit: Some(60), run: lambda_cross_check },
    Criterion { name: "pivot soundness", limit: None, run: pivot_soundness },
    Criterion { name: "2-separation bound", limit: None, run: separation_bound },
    Criterion { name: "blocking-sequence dichotomy", limit: None, run: blocking_dichotomy },
    Criterion { name: "uncrossed 2-separations", limit: None, run: uncrossed_existence },
    Criterion { name: "fragility census", limit: Some(600), run: fragility_census },
    Criterion { name: "representation counts", limit: Some(240), run: representation_counts },
    Criterion { name: "stabilizer verdicts", limit: Some(300), run: stabilizer_verdicts },
    Criterion { name: "pipeline certificate", limit: Some(600), run: pipeline_certificate },
    Criterion { name: "normalization and pivot round trips", limit: None, run: equivalence_infrastructure },
];

/// Runs criterion `id` (1-based) with its own generator derived from `seed`.
pub fn run_criterion(id: usize, seed: u64) -> Option<CriterionResult> {
    let c = CRITERIA.get(id.checked_sub(1)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(id as u64));
    let start = Instant::now();
    let out = (c.run)(&mut rng);
    let elapsed = start.elapsed();
    let limit = c.limit.map(Duration::from_secs);
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let (passed, detail) = match out {
        Ok(d) if in_time => (true, d),
        Ok(d) => (false, format!("{d}; over the time limit")),
        Err(e) => (false, e),
    };
    Some(CriterionResult {
        id,
        name: c.name,
        passed,
        detail,
        elapsed,
        limit,
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=COUNT).filter_map(|id| run_criterion(id, seed)).collect()
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn elements(field: PartialFieldId) -> Vec<PfValue> {
    PartialField::new(field).ok().and_then(|f| f.elements()).expect("a finite field")
}

fn units(field: PartialFieldId) -> Vec<PfValue> {
    elements(field).into_iter().filter(|v| !v.is_zero()).collect()
}

fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, letters(n)).expect("valid uniform matroid")
}

fn labeled(field: PartialFieldId, rows: Vec<String>, cols: Vec<String>, data: Vec<Vec<PfValue>>) -> LabeledMatrix {
    LabeledMatrix::from_rows(field, rows, cols, data).expect("well-formed random matrix")
}

fn random_matrix(rng: &mut ChaCha8Rng, field: PartialFieldId, r: usize, c: usize) -> LabeledMatrix {
    let elems = elements(field);
    let names = letters(r + c);
    let data = (0..r)
        .map(|_| (0..c).map(|_| elems.choose(rng).expect("nonempty").clone()).collect())
        .collect();
    labeled(field, names[..r].to_vec(), names[r..].to_vec(), data)
}

fn rows_of(a: &LabeledMatrix) -> Vec<Vec<PfValue>> {
    (0..a.nrows())
        .map(|i| (0..a.ncols()).map(|j| a.get(i, j).clone()).collect())
        .collect()
}

/// Least column-major entry vector over all row and column scalings. Columns
/// are contiguous in this order, so each column is minimized on its own once
/// the row scaling is fixed; the first row scalar is 1 without loss.
fn brute_canonical(a: &LabeledMatrix) -> Vec<PfValue> {
    let us = units(a.field());
    let (r, c) = (a.nrows(), a.ncols());
    let mut best: Option<Vec<PfValue>> = None;
    let mut idx = vec![0usize; r];
    loop {
        let mut cand = Vec::with_capacity(r * c);
        for j in 0..c {
            let col = us
                .iter()
                .map(|g| (0..r).map(|i| a.get(i, j).mul(&us[idx[i]]).mul(g)).collect::<Vec<_>>())
                .min()
                .expect("units are nonempty");
            cand.extend(col);
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        // Advance the row scaling counter, keeping row 0 fixed.
        let mut k = 1;
        while k < r {
            idx[k] += 1;
            if idx[k] < us.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k >= r {
            break;
        }
    }
    best.unwrap_or_default()
}

fn brute_scaling_equivalent(a: &LabeledMatrix, b: &LabeledMatrix) -> bool {
    match b.permuted(a.rows(), a.cols()) {
        Ok(b) => brute_canonical(a) == brute_canonical(&b),
        Err(_) => false,
    }
}

/// A stored catalog matrix over a finite field, mapped through the first
/// homomorphism that preserves the matroid when the stored field is infinite.
fn finite_matrix(name: &str) -> Option<(Matroid, LabeledMatrix)> {
    let e = catalog_entry(name).ok()?;
    let a = e.matrix?;
    if a.field().is_finite() {
        return Some((e.matroid, a));
    }
    Homomorphism::all_from(a.field())
        .into_iter()
        .filter(|phi| phi.target().is_finite())
        .filter_map(|phi| a.apply_hom(&phi).ok())
        .find(|b| Matroid::from_matrix_unchecked(b).is_ok_and(|n| n.equal_up_to_order(&e.matroid)))
        .map(|b| (e.matroid, b))
}

/// Adds `k` random elements one at a time, each as a new column (an
/// extension) or a new row (a coextension).
fn random_extension(rng: &mut ChaCha8Rng, a: &LabeledMatrix, k: usize) -> (LabeledMatrix, Vec<String>, Vec<String>) {
    let elems = elements(a.field());
    let mut rows = a.rows().to_vec();
    let mut cols = a.cols().to_vec();
    let mut data = rows_of(a);
    let (mut added_cols, mut added_rows) = (Vec::new(), Vec::new());
    for s in 0..k {
        let label = format!("x{s}");
        if rng.gen_bool(0.5) {
            for row in data.iter_mut() {
                row.push(elems.choose(rng).expect("nonempty").clone());
            }
            cols.push(label.clone());
            added_cols.push(label);
        } else {
            data.push((0..cols.len()).map(|_| elems.choose(rng).expect("nonempty").clone()).collect());
            rows.push(label.clone());
            added_rows.push(label);
        }
    }
    (labeled(a.field(), rows, cols, data), added_rows, added_cols)
}

fn three_connected_bases() -> Vec<(String, Matroid, LabeledMatrix)> {
    catalog_names()
        .into_iter()
        .filter_map(|name| {
            let (m, a) = finite_matrix(name)?;
            (m.len() >= 4 && m.len() <= 8 && m.is_3connected()).then(|| (name.to_string(), m, a))
        })
        .collect()
}

/// Connected random extensions with exactly `k` new elements, retrying
/// until connected. Also checks that the base is recovered as a minor.
fn connected_extension(
    rng: &mut ChaCha8Rng,
    base: &(String, Matroid, LabeledMatrix),
    k: usize,
) -> std::result::Result<Option<Matroid>, String> {
    for _ in 0..200 {
        let (ext, new_rows, new_cols) = random_extension(rng, &base.2, k);
        let m = lib(Matroid::from_matrix_unchecked(&ext))?;
        if !m.is_connected() {
            continue;
        }
        let minor = lib(m.minor(lib(m.set(&new_rows))?, lib(m.set(&new_cols))?))?;
        ensure(minor.equal_up_to_order(&base.1), || {
            format!("{} is not a minor of its extension {}", base.0, ext.to_text("ext"))
        })?;
        return Ok(Some(m));
    }
    Ok(None)
}

fn whirl_branch_width(_: &mut ChaCha8Rng) -> Outcome {
    let mut widths = Vec::new();
    for n in 2..=5 {
        let m = lib(catalog(&format!("whirl{n}")))?;
        let (w, d) = lib(branch_width(&m))?;
        ensure(lib(width_of(&m, &d))? == w, || format!("whirl{n}: decomposition width disagrees with {w}"))?;
        ensure(w == 3, || format!("bw(whirl{n}) = {w}"))?;
        widths.push(w);
    }
    Ok(format!("widths {widths:?} for n = 2..5"))
}

fn lambda_cross_check(_: &mut ChaCha8Rng) -> Outcome {
    let mut partitions = 0usize;
    let mut used = Vec::new();
    for name in catalog_names() {
        let e = lib(catalog_entry(name))?;
        let Some(a) = e.matrix else { continue };
        let m = e.matroid;
        if m.len() > 8 {
            continue;
        }
        let rows: Vec<usize> = a.rows().iter().map(|l| m.index(l)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
        let cols: Vec<usize> = a.cols().iter().map(|l| m.index(l)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
        for z in 0..=m.ground() {
            let pick = |idx: &[usize], inside: bool| -> Vec<usize> {
                (0..idx.len()).filter(|&i| bits::has(z, idx[i]) == inside).collect()
            };
            let via_matrix = a.rank_idx(&pick(&rows, true), &pick(&cols, false))
                + a.rank_idx(&pick(&rows, false), &pick(&cols, true));
            let via_bases = m.lambda(z);
            ensure(via_matrix == via_bases, || {
                format!("{name}: lambda({}) is {via_bases} from bases, {via_matrix} from ranks", m.word(z))
            })?;
            partitions += 1;
        }
        used.push(name);
    }
    Ok(format!("{partitions} partitions of {} matroids, no mismatch", used.len()))
}

fn pivot_soundness(rng: &mut ChaCha8Rng) -> Outcome {
    let fields = [PartialFieldId::Gf4, PartialFieldId::Prime(5)];
    let mut pivots = 0usize;
    for _ in 0..1000 {
        let field = *fields.choose(rng).expect("nonempty");
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random_matrix(rng, field, r, c);
        ensure(a.is_pmatrix().verdict, || "a matrix over a field is always a P-matrix".into())?;
        let m = lib(Matroid::from_matrix_unchecked(&a))?;
        for i in 0..r {
            for j in 0..c {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let p = lib(a.pivot_idx(i, j))?;
                let mut expect_rows = a.rows().to_vec();
                expect_rows[i] = a.cols()[j].clone();
                ensure(p.rows() == expect_rows.as_slice(), || "pivot did not exchange the labels".into())?;
                ensure(p.is_pmatrix().verdict, || format!("pivot of\n{}is not a P-matrix", a.to_text("A")))?;
                let n = lib(Matroid::from_matrix_unchecked(&p))?;
                ensure(n.equal_up_to_order(&m), || format!("pivot at ({i},{j}) changes the matroid of\n{}", a.to_text("A")))?;
                pivots += 1;
            }
        }
    }
    Ok(format!("1000 matrices, {pivots} pivots, no failure"))
}

fn separation_bound(rng: &mut ChaCha8Rng) -> Outcome {
    let bases = three_connected_bases();
    let mut worst = [0usize; 4];
    for k in 1..=3 {
        let mut done = 0;
        while done < 200 {
            let base = bases.choose(rng).expect("nonempty");
            let Some(m) = connected_extension(rng, base, k)? else { continue };
            let seps = two_separations(&m).len();
            ensure(seps <= 1 << (k + 1), || {
                format!("a {k}-element extension of {} has {seps} 2-separations", base.0)
            })?;
            worst[k] = worst[k].max(seps);
            done += 1;
        }
    }
    Ok(format!(
        "600 extensions of {} bases; most 2-separations for k = 1, 2, 3: {}, {}, {} (bounds 4, 8, 16)",
        bases.len(),
        worst[1],
        worst[2],
        worst[3]
    ))
}

/// Catalog members with at most 9 elements, plus connected extensions of
/// small ones that are not 3-connected, so that induced separations occur.
fn population(rng: &mut ChaCha8Rng) -> std::result::Result<Vec<(String, Matroid)>, String> {
    let mut out: Vec<(String, Matroid)> = catalog_names()
        .into_iter()
        .filter_map(|name| {
            let m = catalog(name).ok()?;
            (m.len() <= 9).then(|| (name.to_string(), m))
        })
        .collect();
    let small: Vec<_> = three_connected_bases().into_iter().filter(|b| b.1.len() <= 7).collect();
    let mut derived = 0;
    for i in 0..400 {
        if derived == 12 {
            break;
        }
        let base = small.choose(rng).expect("nonempty");
        if let Some(m) = connected_extension(rng, base, 1 + i % 2)? {
            if m.len() <= 9 && !m.is_3connected() {
                out.push((format!("extension of {}", base.0), m));
                derived += 1;
            }
        }
    }
    Ok(out)
}

fn map_up(elems: &[usize], s: Set) -> Set {
    bits::elems(s).into_iter().fold(0, |acc, i| acc | bits::bit(elems[i]))
}

/// Lexicographically least shortest sequence satisfying the three
/// connectivity conditions, by exhaustive search.
fn brute_sequence(m: &Matroid, b: Set, z1: Set, z2: Set, k: usize) -> Option<Vec<usize>> {
    let rest = bits::elems(m.ground() & !z1 & !z2);
    fn extend(m: &Matroid, b: Set, z: (Set, Set), k: usize, rest: &[usize], len: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == len {
            return satisfies_conditions(m, b, z.0, z.1, k, cur);
        }
        for &e in rest {
            if cur.contains(&e) {
                continue;
            }
            cur.push(e);
            if extend(m, b, z, k, rest, len, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    (1..=rest.len()).find_map(|len| {
        let mut cur = Vec::new();
        extend(m, b, (z1, z2), k, &rest, len, &mut cur).then_some(cur)
    })
}

fn brute_induced(m: &Matroid, z1: Set, z2: Set, k: usize) -> bool {
    let rest = m.ground() & !z1 & !z2;
    bits::submasks(rest).any(|r1| m.lambda(z1 | r1) < k)
}

fn random_minor(rng: &mut ChaCha8Rng, m: &Matroid, min: usize) -> (Set, Set) {
    let b = *m.bases().choose(rng).expect("a matroid has a basis");
    let mut order = bits::elems(m.ground());
    order.shuffle(rng);
    let size = rng.gen_range(min.min(m.len())..=m.len());
    (b, bits::from_elems(order[..size].iter().copied()))
}

fn blocking_dichotomy(rng: &mut ChaCha8Rng) -> Outcome {
    let pop = population(rng)?;
    let (mut instances, mut sequences, mut induced) = (0, 0, 0);
    let mut attempts = 0;
    while instances < 150 && attempts < 20_000 {
        attempts += 1;
        let (name, m) = pop.choose(rng).expect("nonempty");
        let (b, e) = random_minor(rng, m, 4);
        let elems = bits::elems(e);
        let minor = lib(m.minor_by_basis(b, e))?;
        for sep in two_separations(&minor).into_iter().filter(|s| s.order == 1).take(2) {
            let (z1, z2) = (map_up(&elems, sep.part1), map_up(&elems, sep.part2));
            let ctx = || format!("{name}, B = {}, Z1 = {}, Z2 = {}", m.word(b), m.word(z1), m.word(z2));
            let has_induced = brute_induced(m, z1, z2, 2);
            let seq = brute_sequence(m, b, z1, z2, 2);
            ensure(has_induced != seq.is_some(), || format!("{}: oracle sees both or neither outcome", ctx()))?;
            match lib(find_blocking_sequence(m, b, z1, z2, 2))? {
                BlockingOutcome::Sequence(s) => {
                    ensure(!has_induced, || format!("{}: sequence returned for an induced separation", ctx()))?;
                    ensure(is_blocking_sequence(m, b, z1, z2, 2, &s.elements), || format!("{}: not minimal", ctx()))?;
                    ensure(alternates(b, &s.elements), || format!("{}: sequence does not alternate", ctx()))?;
                    ensure(Some(&s.elements) == seq.as_ref(), || format!("{}: not the least shortest sequence", ctx()))?;
                    sequences += 1;
                }
                BlockingOutcome::Induced(s) => {
                    ensure(has_induced, || format!("{}: induced separation claimed wrongly", ctx()))?;
                    ensure(
                        s.part1 & z1 == z1 && s.part2 & z2 == z2 && s.part1 | s.part2 == m.ground(),
                        || format!("{}: returned partition does not extend the separation", ctx()),
                    )?;
                    ensure(m.lambda(s.part1) == s.order && s.order < 2, || format!("{}: wrong order", ctx()))?;
                    induced += 1;
                }
            }
            instances += 1;
        }
    }
    ensure(instances >= 100, || format!("only {instances} instances constructed"))?;

    // Bridging on connected nonbinary minors that have a 2-separation.
    let u24 = uniform(2, 4);
    let (mut runs, mut rounds) = (0, 0);
    let mut attempts = 0;
    while runs < 40 && attempts < 5_000 {
        attempts += 1;
        let (name, m) = pop.choose(rng).expect("nonempty");
        let (b, e) = random_minor(rng, m, 4);
        let start = lib(m.minor_by_basis(b, e))?;
        if !start.is_connected() || two_separations(&start).is_empty() || !has_minor(&start, &u24) {
            continue;
        }
        let report = lib(bridge_uncrossed_2seps(m, b, e))?;
        let mut cur = e;
        for r in &report.rounds {
            let next = cur | bits::from_elems(r.sequence.iter().copied());
            let before = lib(m.minor_by_basis(b, cur))?;
            let after = lib(m.minor_by_basis(b, next))?;
            let (sb, sa) = (two_separations(&before).len(), two_separations(&after).len());
            let (wb, _) = lib(branch_width(&before))?;
            let (wa, _) = lib(branch_width(&after))?;
            let ctx = || format!("{name}, B = {}, from {} to {}", m.word(b), m.word(cur), m.word(next));
            ensure((sb, sa, wb, wa) == (r.seps_before, r.seps_after, r.bw_before, r.bw_after), || {
                format!("{}: reported counts disagree with recomputation", ctx())
            })?;
            ensure(sa < sb, || format!("{}: 2-separations went from {sb} to {sa}", ctx()))?;
            ensure(wa <= wb + 2, || format!("{}: branch width went from {wb} to {wa}", ctx()))?;
            cur = next;
            rounds += 1;
        }
        ensure(cur == report.result, || format!("{name}: rounds do not reach the reported result"))?;
        runs += 1;
    }
    ensure(rounds > 0, || "no bridging round was exercised".into())?;
    Ok(format!(
        "{instances} instances ({sequences} sequences, {induced} induced); {runs} bridging runs, {rounds} rounds"
    ))
}

fn uncrossed_existence(rng: &mut ChaCha8Rng) -> Outcome {
    let u24 = uniform(2, 4);
    let mut checked = 0usize;
    let mut test = |m: &Matroid, what: &dyn Fn() -> String| -> std::result::Result<(), String> {
        if m.is_connected() && !two_separations(m).is_empty() && has_minor(m, &u24) {
            ensure(!uncrossed_2seps(m).is_empty(), || format!("{}: every 2-separation is crossed", what()))?;
            checked += 1;
        }
        Ok(())
    };
    for (name, m) in population(rng)? {
        for _ in 0..40 {
            let (b, e) = random_minor(rng, &m, 4);
            let minor = lib(m.minor_by_basis(b, e))?;
            test(&minor, &|| format!("{name}[{}] with B = {}", m.word(e), m.word(b)))?;
        }
    }
    let bases = three_connected_bases();
    for i in 0..300 {
        let base = bases.choose(rng).expect("nonempty");
        if let Some(m) = connected_extension(rng, base, 1 + i % 3)? {
            test(&m, &|| format!("an extension of {}", base.0))?;
        }
    }
    ensure(checked > 0, || "the population has no qualifying matroid".into())?;
    Ok(format!("{checked} connected nonbinary matroids with 2-separations, each with an uncrossed one"))
}

fn fragility_census(_: &mut ChaCha8Rng) -> Outcome {
    let u24 = uniform(2, 4);
    let (u26, u46) = (uniform(2, 6), uniform(4, 6));
    let excluded = [lib(catalog("F7-"))?, lib(catalog("F7-*"))?];
    let mut seen: HashSet<(Vec<String>, Vec<Set>)> = HashSet::new();
    let mut reps: Vec<Matroid> = Vec::new();
    let mut sources = 0;
    for name in catalog_names() {
        let m = lib(catalog(name))?;
        if m.len() > 8 {
            continue;
        }
        sources += 1;
        let full = m.ground();
        for c in bits::submasks(full).filter(|&c| m.is_independent(c)) {
            for d in bits::submasks(full & !c) {
                if m.dual().rank_of(d) != bits::size(d) {
                    continue;
                }
                let n = lib(m.minor(c, d))?;
                if n.len() < 4 || !seen.insert((n.labels().to_vec(), n.bases().to_vec())) {
                    continue;
                }
                if !n.is_3connected() {
                    continue;
                }
                if !reps.iter().any(|r| r.len() == n.len() && r.rank() == n.rank() && is_isomorphic(r, &n).is_some()) {
                    reps.push(n);
                }
            }
        }
    }
    let mut members = 0;
    for n in &reps {
        if !classify(n, std::slice::from_ref(&u24)).strict || has_minor(n, &u26) || has_minor(n, &u46) {
            continue;
        }
        members += 1;
        let r = n.rank();
        let whirl = n.len() == 2 * r && r >= 2 && is_isomorphic(n, &lib(catalog(&format!("whirl{r}")))?).is_some();
        let ok = r == 2 || n.corank() == 2 || whirl || excluded.iter().any(|f| has_minor(n, f));
        ensure(ok, || format!("exception: {}", n.to_text("N")))?;
    }
    Ok(format!(
        "{} 3-connected minors up to isomorphism from {sources} matroids; {members} strictly fragile without U26 or U46, no exception",
        reps.len()
    ))
}

fn representation_counts(_: &mut ChaCha8Rng) -> Outcome {
    let gf4 = PartialFieldId::Gf4;
    let gf3 = PartialFieldId::Prime(3);
    let gf5 = PartialFieldId::Prime(5);
    let u24 = uniform(2, 4);
    let mut limits = Vec::new();
    let mut timed = |label: &str, f: &mut dyn FnMut() -> std::result::Result<(), String>| {
        let t = Instant::now();
        let r = f();
        let s = t.elapsed();
        limits.push(format!("{label} {:.2}s", s.as_secs_f64()));
        r.and_then(|_| ensure(s <= Duration::from_secs(60), || format!("{label} took {s:?}")))
    };

    timed("U24/GF4", &mut || {
        let classes = lib(enumerate_representations(&u24, SearchSpace::finite(gf4), Level::Algebraic))?;
        ensure(classes.len() == 1, || format!("{} algebraic classes of U24 over GF4", classes.len()))?;
        // Oracle: scaling orbits of all 2x2 matrices, then merged by Frobenius.
        let orbits = raw_orbits(&u24, u24.first_basis(), gf4)?;
        let frob: HashSet<Vec<PfValue>> = orbits
            .values()
            .map(|a| {
                let sq = labeled(gf4, a.rows().to_vec(), a.cols().to_vec(), rows_of(a).iter().map(|r| r.iter().map(|v| v.mul(v)).collect()).collect());
                brute_canonical(&sq).min(brute_canonical(a))
            })
            .collect();
        ensure(frob.len() == 1, || format!("oracle finds {} Frobenius classes", frob.len()))
    })?;
    timed("U24/GF5", &mut || {
        let classes = lib(enumerate_representations(&u24, SearchSpace::finite(gf5), Level::Scaling))?;
        let oracle = raw_orbits(&u24, u24.first_basis(), gf5)?.len();
        ensure(classes.len() == oracle, || format!("{} classes, oracle {oracle}", classes.len()))
    })?;
    for (name, field) in [("F7", gf3), ("F7", gf5), ("U25", gf3), ("U35", gf3)] {
        timed(&format!("{name}/{field}"), &mut || {
            let m = lib(catalog(name))?;
            let verdict = lib(is_representable(&m, SearchSpace::finite(field)))?;
            ensure(matches!(verdict, Representability::No(_)), || format!("{name} over {field}: {verdict:?}"))?;
            let raw = raw_orbits(&m, m.first_basis(), field)?.len();
            ensure(raw == 0, || format!("{name} over {field}: raw search finds {raw} representations"))
        })?;
    }
    Ok(limits.join(", "))
}

/// Every matrix with row set `b` whose support matches the fundamental graph
/// and whose matroid is `m`, keyed by its brute-force scaling orbit. Entries
/// on a spanning forest of the support are fixed to 1, which every scaling
/// orbit meets.
fn raw_orbits(m: &Matroid, b: Set, field: PartialFieldId) -> std::result::Result<HashMap<Vec<PfValue>, LabeledMatrix>, String> {
    let rows = m.names(b);
    let cols = m.names(m.ground() & !b);
    let us = units(field);
    let zero = PfValue::zero(field);
    let mut support = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            let swapped = (b & !bits::bit(lib(m.index(r))?)) | bits::bit(lib(m.index(c))?);
            if m.is_basis(swapped) {
                support.push((i, j));
            }
        }
    }
    let mut comp: Vec<usize> = (0..rows.len() + cols.len()).collect();
    let mut free = Vec::new();
    let mut base = vec![vec![zero; cols.len()]; rows.len()];
    for &(i, j) in &support {
        let (ci, cj) = (comp[i], comp[rows.len() + j]);
        if ci == cj {
            free.push((i, j));
            continue;
        }
        for c in comp.iter_mut().filter(|c| **c == cj) {
            *c = ci;
        }
        base[i][j] = PfValue::one(field);
    }
    let mut out = HashMap::new();
    let mut idx = vec![0usize; free.len()];
    loop {
        let mut data = base.clone();
        for (t, &(i, j)) in free.iter().enumerate() {
            data[i][j] = us[idx[t]].clone();
        }
        let a = labeled(field, rows.clone(), cols.clone(), data);
        if lib(Matroid::from_matrix_unchecked(&a))?.equal_up_to_order(m) {
            out.entry(brute_canonical(&a)).or_insert(a);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < us.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    Ok(out)
}

/// Stabilizer verdict for the embedding `(s, t)` from raw enumeration: no
/// two distinct orbits of `M` may restrict to the same orbit of the minor.
fn raw_stabilizes(m: &Matroid, b: Set, s: Set, t: Set, field: PartialFieldId) -> std::result::Result<bool, String> {
    let drop = m.names(s | t);
    let drop: Vec<&str> = drop.iter().map(String::as_str).collect();
    let mut seen: HashSet<Vec<PfValue>> = HashSet::new();
    for a in raw_orbits(m, b, field)?.values() {
        if !seen.insert(brute_canonical(&a.remove(&drop))) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn stabilizer_verdicts(_: &mut ChaCha8Rng) -> Outcome {
    let u24 = uniform(2, 4);
    let gf4 = PartialFieldId::Gf4;
    let gf5 = PartialFieldId::Prime(5);

    let w3 = lib(catalog("whirl3"))?;
    let embeddings = minor_embeddings(&w3, &u24);
    ensure(!embeddings.is_empty(), || "whirl3 has no U24 minor".into())?;
    for e in &embeddings {
        let b = lib(w3.basis_between(e.contract, e.delete))?;
        let v = lib(stabilizes(&w3, b, e.contract, e.delete, SearchSpace::finite(gf4)))?;
        let raw = raw_stabilizes(&w3, b, e.contract, e.delete, gf4)?;
        ensure(v.stabilizes && raw, || {
            format!("whirl3 / {} \\ {}: library {}, raw {raw}", w3.word(e.contract), w3.word(e.delete), v.stabilizes)
        })?;
    }

    let u25 = uniform(2, 5);
    let mut failing = 0;
    for e in minor_embeddings(&u25, &u24) {
        let b = lib(u25.basis_between(e.contract, e.delete))?;
        let v = lib(stabilizes(&u25, b, e.contract, e.delete, SearchSpace::finite(gf5)))?;
        let raw = raw_stabilizes(&u25, b, e.contract, e.delete, gf5)?;
        ensure(v.stabilizes == raw, || format!("U25 \\ {}: library and raw disagree", u25.word(e.delete)))?;
        if v.stabilizes {
            continue;
        }
        let (a1, a2) = v.witness.ok_or("a failing verdict without a witness")?;
        for a in [&a1, &a2] {
            ensure(lib(Matroid::from_matrix_unchecked(a))?.equal_up_to_order(&u25), || "witness does not represent U25".into())?;
        }
        let drop = u25.names(e.contract | e.delete);
        let drop: Vec<&str> = drop.iter().map(String::as_str).collect();
        ensure(brute_scaling_equivalent(&a1.remove(&drop), &a2.remove(&drop)), || "witness blocks differ".into())?;
        ensure(!brute_scaling_equivalent(&a1, &a2), || "witness matrices are scaling-equivalent".into())?;
        failing += 1;
    }
    ensure(failing > 0, || "U24 stabilizes U25 over GF5".into())?;
    Ok(format!(
        "whirl3/GF4 stabilized for {} embeddings; U25/GF5 fails for {failing} embeddings with verified witnesses",
        embeddings.len()
    ))
}

fn pipeline_certificate(_: &mut ChaCha8Rng) -> Outcome {
    let m = lib(catalog("F7-"))?;
    let space = SearchSpace::bounded(PartialFieldId::NearRegular, 2);
    let report = lib(certify_pipeline(&m, &uniform(2, 4), space))?;
    let PipelineOutcome::Certified { labels, matrix, quad, .. } = &report.outcome else {
        return Err(format!("pipeline did not certify:\n{report}"));
    };
    let get = |stage: &str, key: &str| -> std::result::Result<String, String> {
        report
            .stage(stage)
            .and_then(|s| s.get(key))
            .map(str::to_string)
            .ok_or_else(|| format!("report lacks {stage}/{key}"))
    };

    ensure(get("candidate", "unique-up-to-scaling")? == "yes", || "candidate is not unique".into())?;
    let host = if get("deletion-pair", "dual")? == "yes" { m.dual() } else { m.clone() };
    let (u, v) = (get("deletion-pair", "u")?, get("deletion-pair", "v")?);
    ensure(quad.cols() == [u.as_str(), v.as_str()], || "quad columns are not the deletion pair".into())?;

    // The quad, re-derived from the final matrix and the bases of M.
    let e = |x: &str, y: &str| lib(matrix.entry(x, y).cloned());
    let det = e(&quad.a, &u)?.mul(&e(&quad.b, &v)?).sub(&e(&quad.a, &v)?.mul(&e(&quad.b, &u)?));
    let x = lib(host.set(matrix.rows()))?;
    let swap = lib(host.set(&[&quad.a, &quad.b, &u, &v]))?;
    ensure(x & swap == lib(host.set(&[&quad.a, &quad.b]))?, || "quad rows are not in the row set".into())?;
    let basis = host.is_basis(x ^ swap);
    let case = if !det.is_member() {
        Some(IncrimCase::NotInField)
    } else if det.is_zero() && basis {
        Some(IncrimCase::ZeroButBasis)
    } else if !det.is_zero() && !basis {
        Some(IncrimCase::NonzeroButDependent)
    } else {
        None
    };
    ensure(case == Some(quad.case), || format!("quad recheck gives {case:?}, report says {}", quad.case))?;

    let gap: usize = get("refine", "|Z|-|C|")?.parse().map_err(|_| "bad |Z|-|C|".to_string())?;
    ensure(gap <= 8, || format!("|Z| - |C| = {gap}"))?;
    let hyp = report.stage("hypotheses").ok_or("no hypotheses stage")?;
    ensure(hyp.entries.len() == 6 && hyp.entries.iter().all(|(_, v)| v != "no"), || "a hypothesis failed".into())?;
    ensure(sep_bound(SEP_BUDGET_K) == 1 << 10, || "the 2-separation budget is not 2^10".into())?;
    ensure(bw_slack() == 4 * sep_bound(SEP_BUDGET_K) + 13 && bw_slack() == 4109, || "4 * 2^10 + 13 != 4109".into())?;
    ensure(get("input", "bw-slack")? == "4109", || "report does not carry 4109".into())?;
    Ok(format!(
        "F7- certified on {}; pair {u}{v}, quad {}{}{u}{v} ({}), |Z|-|C| = {gap}",
        labels.join(""),
        quad.a,
        quad.b,
        quad.case
    ))
}

/// A maximal spanning forest of the support graph in random edge order.
fn random_forest(rng: &mut ChaCha8Rng, a: &LabeledMatrix) -> Vec<(String, String)> {
    let (r, c) = (a.nrows(), a.ncols());
    let mut edges: Vec<(usize, usize)> =
        (0..r).flat_map(|i| (0..c).map(move |j| (i, j))).filter(|&(i, j)| !a.get(i, j).is_zero()).collect();
    edges.shuffle(rng);
    let mut parent: Vec<usize> = (0..r + c).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut out = Vec::new();
    for (i, j) in edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, r + j));
        if ri != rj {
            parent[ri] = rj;
            out.push((a.rows()[i].clone(), a.cols()[j].clone()));
        }
    }
    out
}

fn random_units(rng: &mut ChaCha8Rng, field: PartialFieldId, n: usize) -> Vec<PfValue> {
    let us = units(field);
    (0..n).map(|_| us.choose(rng).expect("nonempty").clone()).collect()
}

fn equivalence_infrastructure(rng: &mut ChaCha8Rng) -> Outcome {
    let fields = [PartialFieldId::Gf4, PartialFieldId::Prime(5)];
    for _ in 0..1000 {
        let field = *fields.choose(rng).expect("nonempty");
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random_matrix(rng, field, r, c);
        let b = a.scaled(&random_units(rng, field, a.nrows()), &random_units(rng, field, a.ncols()));
        let forest = random_forest(rng, &a);
        let (na, nb) = (lib(a.normalize(&forest))?, lib(b.normalize(&forest))?);
        ensure(na == nb, || format!("normalizations differ for\n{}", a.to_text("A")))?;
        ensure(forest.iter().all(|(x, y)| na.entry(x, y).is_ok_and(|v| v.is_one())), || "forest entries are not 1".into())?;
    }

    let mut trips = 0;
    let mut attempts = 0;
    while trips < 1000 {
        attempts += 1;
        ensure(attempts < 100_000, || "too few valid pivot round trips".into())?;
        let field = *fields.choose(rng).expect("nonempty");
        let (r, c) = (rng.gen_range(2..=5), rng.gen_range(2..=5));
        let a = random_matrix(rng, field, r, c);
        let (r, c) = (a.nrows(), a.ncols());
        let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..c));
        let (x, y) = (a.rows()[i].clone(), a.cols()[j].clone());
        let (x2, y2) = (a.rows()[(i + rng.gen_range(1..r)) % r].clone(), a.cols()[(j + rng.gen_range(1..c)) % c].clone());
        let step = |m: &LabeledMatrix, p: &str, q: &str| -> Option<LabeledMatrix> {
            m.entry(p, q).ok().filter(|v| !v.is_zero())?;
            m.pivot(p, q).ok()
        };
        let Some(back) = step(&a, &x, &y)
            .and_then(|m| step(&m, &x2, &y2))
            .and_then(|m| step(&m, &y, &x))
            .and_then(|m| step(&m, &y2, &x2))
        else {
            continue;
        };
        let back = lib(back.permuted(a.rows(), a.cols()))?;
        let cert = a.scaling_equivalent(&back).ok_or_else(|| format!("round trip {x}{y} {x2}{y2} leaves the scaling class"))?;
        for i in 0..r {
            for j in 0..c {
                let want = cert.row[i].mul(a.get(i, j)).mul(&cert.col[j]);
                ensure(want == *back.get(i, j), || "scaling certificate does not check out".into())?;
            }
        }
        trips += 1;
    }
    Ok("1000 normalization pairs and 1000 pivot round trips, no failure".into())
}
