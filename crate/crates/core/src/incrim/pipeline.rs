//! The staged certificate run: from a deletion pair to a minor that is not
//! strongly stabilized, with every intermediate claim checked on the instance.

use std::fmt;

use super::{
    assemble_with_tree, candidate_tree, check_candidate_input, find_deletion_pair, find_incriminating, incrimination,
    represents, shrink_to_quad, allowable_pivot_check, DeletionPair, IncriminatingQuad, PivotRule,
};
use crate::bits::{self, Set};
use crate::blockseq::{bridge_avoiding, two_separations};
use crate::decomp::branch_width;
use crate::error::{Error, Result};
use crate::fragility::{classify, is_3connected_up_to_series_parallel};
use crate::matroid::{has_minor, is_isomorphic, minor_embeddings, Matroid};
use crate::pmatrix::LabeledMatrix;
use crate::reptheory::{is_representable, normalized_representations, Representability, SearchSpace};

/// Exponent in the 2-separation budget: minors at most this many elements
/// larger than the core.
pub const SEP_BUDGET_K: u32 = 9;

/// `2^(k+1)`, the most 2-separations a connected matroid can have when it is
/// `k` elements larger than a 3-connected nonbinary minor.
pub fn sep_bound(k: u32) -> u64 {
    1u64 << (k + 1)
}

/// The additive constant in the final branch-width bound.
pub fn bw_slack() -> u64 {
    4 * sep_bound(SEP_BUDGET_K) + 13
}

/// One stage of the report: a name and ordered `key: value` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageBlock {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl StageBlock {
    fn new(name: &str) -> Self {
        StageBlock {
            name: name.to_string(),
            entries: Vec::new(),
        }
    }

    fn put(&mut self, key: &str, value: impl fmt::Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineOutcome {
    /// `M_X[W]` is not strongly stabilized by the core minor; `whole` when `W = E`.
    /// `matrix` is the final `A_X` with incriminating `quad`, both taken in
    /// the dual when the deletion-pair stage switched to it.
    Certified {
        labels: Vec<String>,
        whole: bool,
        matrix: LabeledMatrix,
        quad: IncriminatingQuad,
    },
    /// The assembled matrix represents `M`; nothing to certify.
    Representable(LabeledMatrix),
    /// A hypothesis failed at the named stage.
    Failed { stage: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub stages: Vec<StageBlock>,
    pub outcome: PipelineOutcome,
}

impl PipelineReport {
    pub fn stage(&self, name: &str) -> Option<&StageBlock> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.outcome, PipelineOutcome::Certified { .. })
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "[{}]", s.name)?;
            for (k, v) in &s.entries {
                writeln!(f, "{k}: {v}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "[verdict]")?;
        match &self.outcome {
            PipelineOutcome::Certified { labels, whole, .. } => {
                writeln!(f, "outcome: certified")?;
                writeln!(f, "minor: {}", labels.join(""))?;
                writeln!(f, "whole-matroid: {whole}")
            }
            PipelineOutcome::Representable(_) => writeln!(f, "outcome: representable"),
            PipelineOutcome::Failed { stage, reason } => {
                writeln!(f, "outcome: failed")?;
                writeln!(f, "stage: {stage}")?;
                writeln!(f, "reason: {reason}")
            }
        }
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn bw(m: &Matroid, x: Set, z: Set) -> Result<usize> {
    let minor = m.minor_by_basis(x, z)?;
    if minor.is_empty() {
        return Ok(0);
    }
    Ok(branch_width(&minor)?.0)
}

/// State threaded through the stages.
struct Run<'a> {
    stages: Vec<StageBlock>,
    n: &'a Matroid,
    space: SearchSpace,
}

enum Stop {
    Failed(String, String),
    Representable(LabeledMatrix),
    Fatal(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Fatal(e)
    }
}

fn fail<T>(stage: &str, reason: impl Into<String>) -> std::result::Result<T, Stop> {
    Err(Stop::Failed(stage.to_string(), reason.into()))
}

/// Maps hypothesis-level errors to a failed stage and keeps the rest fatal.
fn at_stage<T>(stage: &str, r: Result<T>) -> std::result::Result<T, Stop> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::Stage { stage, msg }) => Err(Stop::Failed(stage, msg)),
        Err(e @ Error::Invariant(_)) => Err(Stop::Fatal(e)),
        Err(e) => Err(Stop::Failed(stage.to_string(), e.to_string())),
    }
}

/// Runs every stage on `(M, N)`, falling back to `(M*, N*)` when `M` has no
/// deletion pair. Invariant violations are returned as errors; failed
/// hypotheses end the report with the stage that failed.
pub fn certify_pipeline(m: &Matroid, n: &Matroid, space: SearchSpace) -> Result<PipelineReport> {
    let mut run = Run {
        stages: Vec::new(),
        n,
        space,
    };
    let outcome = match run.go(m) {
        Ok(o) => o,
        Err(Stop::Failed(stage, reason)) => PipelineOutcome::Failed { stage, reason },
        Err(Stop::Representable(a)) => PipelineOutcome::Representable(a),
        Err(Stop::Fatal(e)) => return Err(e),
    };
    Ok(PipelineReport {
        stages: run.stages,
        outcome,
    })
}

impl Run<'_> {
    fn push(&mut self, s: StageBlock) {
        self.stages.push(s);
    }

    fn go(&mut self, m0: &Matroid) -> std::result::Result<PipelineOutcome, Stop> {
        let n0 = self.n;
        let mut s = StageBlock::new("input");
        s.put("elements", m0.len());
        s.put("rank", m0.rank());
        s.put("field", self.space.field);
        if let Some(b) = self.space.bound {
            s.put("exponent-bound", b);
        }
        s.put("N-elements", n0.len());
        s.put("N-rank", n0.rank());
        let ok_m = m0.is_3connected();
        let ok_n = n0.is_3connected() && n0.len() >= 4;
        let has_n = has_minor(m0, n0);
        let nonbinary = has_minor(n0, &Matroid::uniform(2, crate::matroid::letters(4))?);
        s.put("M-3-connected", yn(ok_m));
        s.put("N-3-connected", yn(ok_n));
        s.put("N-nonbinary", yn(nonbinary));
        s.put("N-minor", yn(has_n));
        s.put("sep-bound-k", SEP_BUDGET_K);
        s.put("sep-bound", sep_bound(SEP_BUDGET_K));
        s.put("bw-slack", bw_slack());
        self.push(s);
        if !(ok_m && ok_n && has_n && nonbinary) {
            return fail("input", "M and N must be 3-connected, N nonbinary, and N a minor of M");
        }
        if bw_slack() != 4109 {
            return Err(Stop::Fatal(Error::Invariant("4 * 2^10 + 13 != 4109".into())));
        }

        // Deletion pair, oriented so that M \ u is 3-connected when possible.
        let mut s = StageBlock::new("deletion-pair");
        let (m, n, pair, dual) = match find_deletion_pair(m0, n0)? {
            Some(p) => (m0.clone(), n0.clone(), p, false),
            None => {
                let (md, nd) = (m0.dual(), n0.dual());
                match find_deletion_pair(&md, &nd)? {
                    Some(p) => (md, nd, p, true),
                    None => {
                        self.push(s);
                        return fail("deletion-pair", "neither M nor M* has a deletion pair");
                    }
                }
            }
        };
        let DeletionPair { mut u, mut v, certificate } = pair;
        let three = |e: usize| m.delete(bits::bit(e)).is_ok_and(|d| d.is_3connected());
        if !three(u) && three(v) {
            std::mem::swap(&mut u, &mut v);
        }
        s.put("dual", yn(dual));
        s.put("u", m.label(u));
        s.put("v", m.label(v));
        s.put("M\\{u,v}-connected", yn(certificate.minus_uv_connected));
        s.put("co(M\\u)-3-connected", yn(certificate.co_u.0));
        s.put("co(M\\v)-3-connected", yn(certificate.co_v.0));
        s.put("co(M\\{u,v})-3-connected", yn(certificate.co_uv.0));
        s.put("M\\u-3-connected", yn(three(u)));
        self.push(s);
        let uv = bits::bit(u) | bits::bit(v);

        // A basis of M \ {u, v} displaying N.
        let mut s = StageBlock::new("minor");
        let muv = m.delete(uv)?;
        let Some(emb) = minor_embeddings(&muv, &n).into_iter().next() else {
            self.push(s);
            return fail("minor", "M\\{u,v} has no N-minor");
        };
        let lift = |t: Set| m.set(&muv.names(t)).expect("labels of a minor");
        let (c0, d0) = (lift(emb.contract), lift(emb.delete));
        let b = at_stage("minor", m.basis_between(c0, d0 | uv))?;
        let en = m.ground() & !(c0 | d0 | uv);
        let mn = m.minor_by_basis(b, en)?;
        if is_isomorphic(&mn, &n).is_none() {
            return Err(Stop::Fatal(Error::Invariant("M_B[E_N] is not isomorphic to N".into())));
        }
        s.put("B", m.word(b));
        s.put("E_N", m.word(en));
        let nb = mn.set(&m.names(b & en))?;
        let reps = at_stage("minor", normalized_representations(&mn, nb, self.space))?;
        let Some(d) = reps.into_iter().next() else {
            self.push(s);
            return fail("minor", "N has no representation in the search space");
        };
        s.put("D", d.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        self.push(s);

        // The candidate matrix, built twice on different trees.
        let mut s = StageBlock::new("candidate");
        at_stage("candidate", check_candidate_input(&m, u, v, &d, b))?;
        let t1 = at_stage("candidate", candidate_tree(&m, b, u, v, en, false))?;
        let t2 = at_stage("candidate", candidate_tree(&m, b, u, v, en, true))?;
        let show_tree = |t: &[(String, String)]| t.iter().map(|(x, y)| format!("{x}{y}")).collect::<Vec<_>>().join(" ");
        s.put("tree", show_tree(&t1));
        s.put("second-tree", show_tree(&t2));
        let built = assemble_with_tree(&m, u, v, &d, b, &t1, self.space);
        let a = match built {
            Ok(a) => a,
            Err(e) => {
                self.push(s);
                return at_stage("candidate", Err(e));
            }
        };
        let a2 = at_stage("candidate", assemble_with_tree(&m, u, v, &d, b, &t2, self.space))?;
        let unique = a.scaling_equivalent(&a2).is_some();
        s.put("unique-up-to-scaling", yn(unique));
        s.put("A", a.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        self.push(s);
        if !unique {
            return Err(Stop::Fatal(Error::Invariant("assemblies on two trees are not scaling-equivalent".into())));
        }

        // An incriminating set, shrunk to {a, b, u, v}.
        let mut s = StageBlock::new("incriminate");
        let Some(z) = find_incriminating(&m, &a)? else {
            s.put("incriminating", "none");
            s.put("represents-M", yn(represents(&m, &a)));
            self.push(s);
            return Err(Stop::Representable(a));
        };
        s.put("Z", format!("{}{}", z.rows.join(""), z.cols.join("")));
        s.put("case", z.case);
        let shrunk = at_stage("incriminate", shrink_to_quad(&m, &a, u, v))?;
        s.put(
            "pivots",
            if shrunk.pivots.is_empty() {
                "none".to_string()
            } else {
                shrunk.pivots.iter().map(|(x, y)| format!("{x}{y}")).collect::<Vec<_>>().join(" ")
            },
        );
        self.push(s);
        let mut a = shrunk.matrix;
        let mut quad = shrunk.quad;

        // The smallest core C with an N-minor.
        let mut s = StageBlock::new("core");
        let mut x = m.set(a.rows())?;
        let rest = m.ground() & !uv;
        let mut core = None;
        'size: for k in n.len()..=bits::size(rest) {
            for idx in bits::combinations(bits::size(rest), k) {
                let c = crate::blockseq::lift(&bits::elems(rest), bits::from_elems(idx));
                if has_minor(&m.minor_by_basis(x, c)?, &n) {
                    core = Some(c);
                    break 'size;
                }
            }
        }
        let Some(c) = core else {
            self.push(s);
            return fail("core", "no subset of E - {u, v} has an N-minor in M_X");
        };
        let mc = m.minor_by_basis(x, c)?;
        let frag = classify(&mc, std::slice::from_ref(&n));
        s.put("C", m.word(c));
        s.put("3-connected", yn(mc.is_3connected()));
        s.put("strictly-fragile", yn(frag.strict));
        self.push(s);
        if !mc.is_3connected() || !frag.strict {
            return Err(Stop::Fatal(Error::Invariant("the minimal core is not 3-connected and strictly fragile".into())));
        }

        // Pull a and b towards C with allowable pivots that fix A[C].
        let mut s = StageBlock::new("refine");
        let c_labels = m.names(c);
        let c_refs: Vec<&str> = c_labels.iter().map(String::as_str).collect();
        let mut pivots = Vec::new();
        let mut pa: Set;
        let mut pb: Set;
        loop {
            let (path_a, path_b) = paths(&m, x, uv, &quad, c)?;
            pa = path_a.iter().fold(0, |s, &e| s | bits::bit(e));
            pb = path_b.iter().fold(0, |s, &e| s | bits::bit(e));
            let long = if path_a.len() > 4 {
                Some(path_a)
            } else if path_b.len() > 4 {
                Some(path_b)
            } else {
                None
            };
            let Some(p) = long else { break };
            let (px, py) = (m.label(p[2]).to_string(), m.label(p[3]).to_string());
            let check = allowable_pivot_check(&m, &a, &quad, &px, &py)?;
            let after = a.pivot(&px, &py)?;
            let same_core = after.restrict(&c_refs).permuted(a.restrict(&c_refs).rows(), a.restrict(&c_refs).cols()).ok()
                == Some(a.restrict(&c_refs));
            if !check.allowed || check.rule != Some(PivotRule::ZeroCross) || !same_core {
                return Err(Stop::Fatal(Error::Invariant(format!("pivot {px}{py} shortening a path is not allowable"))));
            }
            a = after;
            quad = check.quad_after.expect("allowed pivots carry the quad");
            x = m.set(a.rows())?;
            pivots.push(format!("{px}{py}"));
        }
        let (qa, qb) = (m.index(&quad.a)?, m.index(&quad.b)?);
        let z = c | pa | pb | bits::bit(qa) | bits::bit(qb);
        s.put("pivots", if pivots.is_empty() { "none".to_string() } else { pivots.join(" ") });
        s.put("X", m.word(x));
        s.put("a", &quad.a);
        s.put("b", &quad.b);
        s.put("case", quad.case);
        s.put("Z", m.word(z));
        s.put("|Z|-|C|", bits::size(z) - bits::size(c));
        let z_conn = m.minor_by_basis(x, z)?.is_connected();
        s.put("M_X[Z]-connected", yn(z_conn));
        self.push(s);
        if bits::size(z) > bits::size(c) + 8 || z & uv != 0 || !z_conn {
            return Err(Stop::Fatal(Error::Invariant("Z is too large, meets {u, v}, or is not connected".into())));
        }
        let ab = bits::bit(qa) | bits::bit(qb);

        // S: contract series classes of M \ v using basis elements outside Z - {a, b}.
        let mut s = StageBlock::new("contract-set");
        let mv = m.delete(bits::bit(v))?;
        let mut sset: Set = 0;
        for class in mv.series_classes() {
            let cl = m.set(&mv.names(class))?;
            if bits::size(cl) < 2 {
                continue;
            }
            let outside_x = cl & !x;
            let keep = if outside_x != 0 {
                outside_x & outside_x.wrapping_neg()
            } else if cl & z & !ab != 0 {
                let t = cl & z & !ab;
                t & t.wrapping_neg()
            } else {
                cl & cl.wrapping_neg()
            };
            sset |= cl & !keep;
        }
        let msv = m.minor_by_basis(x, m.ground() & !(sset | bits::bit(v)))?;
        let iso = is_isomorphic(&msv, &mv.cosimplify()).is_some();
        let placed = sset & !((x & !z) | ab) == 0 && sset & !x == 0;
        s.put("S", if sset == 0 { "none".to_string() } else { m.word(sset) });
        s.put("M/S\\v-3-connected", yn(msv.is_3connected()));
        s.put("isomorphic-to-co(M\\v)", yn(iso));
        s.put("S-inside-(X-Z)+ab", yn(placed));
        self.push(s);
        if !msv.is_3connected() || !iso || !placed {
            return fail("contract-set", "no valid contraction set S");
        }

        // Z0' -> Z0 by bridging inside M / S \ v, then Z1.
        let mut s = StageBlock::new("bridge-delete-v");
        let z0p = (z & !sset) | bits::bit(u);
        let seps0 = two_separations(&m.minor_by_basis(x, z0p)?).len();
        let k0 = (bits::size(z0p) - bits::size(c)) as u32;
        s.put("Z0'", m.word(z0p));
        s.put("|Z0'|-|C|", k0);
        s.put("2-separations", seps0);
        s.put("2-separation-budget", sep_bound(k0));
        if k0 > SEP_BUDGET_K || seps0 as u64 > sep_bound(k0) {
            self.push(s);
            return Err(Stop::Fatal(Error::Invariant("Z0' exceeds the 2-separation budget".into())));
        }
        let rep0 = match bridge_avoiding(&m, x, z0p, sset | bits::bit(v)) {
            Ok(r) => r,
            Err(e) => {
                self.push(s);
                return at_stage("bridge-delete-v", Err(e));
            }
        };
        let z0 = rep0.result;
        s.put("rounds", rep0.rounds.len());
        for (i, r) in rep0.rounds.iter().enumerate() {
            s.put(
                &format!("round-{i}"),
                format!(
                    "sequence {} seps {}->{} bw {}->{}",
                    r.sequence.iter().map(|&e| m.label(e)).collect::<String>(),
                    r.seps_before,
                    r.seps_after,
                    r.bw_before,
                    r.bw_after
                ),
            );
        }
        let z0_three = m.minor_by_basis(x, z0)?.is_3connected();
        s.put("Z0", m.word(z0));
        s.put("M_X[Z0]-3-connected", yn(z0_three));
        let z1 = z0 | ab;
        s.put("Z1", m.word(z1));
        self.push(s);
        if !z0_three {
            return fail("bridge-delete-v", "bridging left a 2-separation in M_X[Z0]");
        }

        // Z2' -> Z2 by bridging inside M \ u.
        let mut s = StageBlock::new("bridge-delete-u");
        let z2p = z | bits::bit(v);
        let seps2 = two_separations(&m.minor_by_basis(x, z2p)?).len();
        let k2 = (bits::size(z2p) - bits::size(c)) as u32;
        s.put("Z2'", m.word(z2p));
        s.put("|Z2'|-|C|", k2);
        s.put("2-separations", seps2);
        s.put("2-separation-budget", sep_bound(k2));
        if k2 > SEP_BUDGET_K || seps2 as u64 > sep_bound(k2) {
            self.push(s);
            return Err(Stop::Fatal(Error::Invariant("Z2' exceeds the 2-separation budget".into())));
        }
        let rep2 = match bridge_avoiding(&m, x, z2p, bits::bit(u)) {
            Ok(r) => r,
            Err(e) => {
                self.push(s);
                return at_stage("bridge-delete-u", Err(e));
            }
        };
        let z2 = rep2.result;
        s.put("rounds", rep2.rounds.len());
        let z2_three = m.minor_by_basis(x, z2)?.is_3connected();
        s.put("Z2", m.word(z2));
        s.put("M_X[Z2]-3-connected", yn(z2_three));
        self.push(s);
        if !z2_three {
            return fail("bridge-delete-u", "bridging left a 2-separation in M_X[Z2]");
        }

        // The hypotheses of the minor theorem.
        let mut s = StageBlock::new("hypotheses");
        let w = z1 | z2;
        let h1 = bits::has(z1, u) && !bits::has(z2, u) && bits::has(z2, v) && !bits::has(z1, v);
        let h2 = (c | ab) & !z == 0 && z & !(z1 & z2) == 0;
        let h3 = z_conn;
        let h4 = is_3connected_up_to_series_parallel(&m.minor_by_basis(x, z1)?);
        let h5 = is_3connected_up_to_series_parallel(&m.minor_by_basis(x, z2)?);
        let w_labels = m.names(w);
        let w_refs: Vec<&str> = w_labels.iter().map(String::as_str).collect();
        let mw = m.minor_by_basis(x, w)?;
        let h6 = incrimination(&mw, &a.restrict(&w_refs), &quad.rows(), &quad.cols())?;
        s.put("i-u-in-Z1-only-v-in-Z2-only", yn(h1));
        s.put("ii-core-in-Z-in-Z1&Z2", yn(h2));
        s.put("iii-M_X[Z]-connected", yn(h3));
        s.put("iv-M_X[Z1]-3-connected-up-to-sp", yn(h4));
        s.put("v-M_X[Z2]-3-connected-up-to-sp", yn(h5));
        s.put(
            "vi-quad-incriminates",
            match h6 {
                Some(case) => case.to_string(),
                None => "no".to_string(),
            },
        );
        self.push(s);
        if !(h1 && h2 && h3 && h4 && h5 && h6.is_some()) {
            return Err(Stop::Fatal(Error::Invariant("a hypothesis of the minor theorem failed on the instance".into())));
        }

        // Branch-width chain, each step checked with its stated constant.
        let mut s = StageBlock::new("branch-width");
        let sb = sep_bound(SEP_BUDGET_K) as usize;
        let bu = bits::bit(u);
        let t = bw(&m, x, c)?;
        let chain: [(usize, usize, &str); 11] = [
            (bw(&m, x, w)?, 0, "bw(M_X[Z1+Z2])"),
            (bw(&m, x, (z1 & !bu) | z2)?, 1, "bw(M_X[(Z1-u)+Z2]) + 1"),
            (bw(&m, x, (z1 & !bu) | z2p)?, 2 * sb + 1, "bw(M_X[(Z1-u)+Z2']) + 2s + 1"),
            (bw(&m, x, z1 & !bu)?, 2 * sb + 2, "bw(M_X[Z1-u]) + 2s + 2"),
            (bw(&m, x, z1)?, 2 * sb + 2, "bw(M_X[Z1]) + 2s + 2"),
            (bw(&m, x, z0)?, 2 * sb + 4, "bw(M_X[Z0]) + 2s + 4"),
            (bw(&m, x, z0p)?, 4 * sb + 4, "bw(M_X[Z0']) + 4s + 4"),
            (bw(&m, x, z0p & !bu)?, 4 * sb + 5, "bw(M_X[Z0'-u]) + 4s + 5"),
            (bw(&m, x, z)?, 4 * sb + 5, "bw(M_X[Z]) + 4s + 5"),
            (t, 4 * sb + 13, "bw(M_X[C]) + 4s + 13"),
            (t, 4 * sb + 13, "t + 4s + 13"),
        ];
        s.put("s", sb);
        let mut all = true;
        for (i, pair) in chain.windows(2).enumerate() {
            let (lhs, rhs) = (pair[0].0 + pair[0].1, pair[1].0 + pair[1].1);
            let ok = lhs <= rhs;
            all &= ok;
            s.put(&format!("step-{}", i + 2), format!("{lhs} <= {rhs} ({}) {}", pair[1].2, if ok { "ok" } else { "FAILED" }));
        }
        let tight = [
            ("bw(Z0) <= bw(Z0') + 2k", chain[5].0 <= chain[6].0 + 2 * seps0),
            ("bw(Z1) <= bw(Z0) + 2", chain[4].0 <= chain[5].0 + 2),
            ("bw(Z) <= bw(C) + 8", chain[8].0 <= t + 8),
        ];
        for (name, ok) in tight {
            all &= ok;
            s.put(name, if ok { "ok" } else { "FAILED" });
        }
        s.put("t", t);
        s.put("l", t as u64 + bw_slack());
        self.push(s);
        if !all {
            return Err(Stop::Fatal(Error::Invariant("branch-width accounting failed".into())));
        }

        let mut s = StageBlock::new("cross-check");
        let rep = at_stage("cross-check", is_representable(&mw, self.space))?;
        s.put(
            "M_X[W]-representable",
            match &rep {
                Representability::Yes(_) => "yes".to_string(),
                Representability::No(why) => format!("no ({why})"),
                Representability::BoundedNo(k) => format!("none within exponent bound {k}; unverifiable"),
            },
        );
        self.push(s);
        Ok(PipelineOutcome::Certified {
            labels: w_labels,
            whole: w == m.ground(),
            matrix: a,
            quad,
        })
    }
}

/// Shortest `a - C` and `b - (C + P_a)` paths in `G(M \ {u, v}, X)`, as
/// element lists starting at `a` and `b`.
fn paths(m: &Matroid, x: Set, uv: Set, quad: &IncriminatingQuad, c: Set) -> Result<(Vec<usize>, Vec<usize>)> {
    let keep = m.ground() & !uv;
    let host = m.delete(uv)?;
    let hx = host.set(&m.names(x & keep))?;
    let g = host.fundamental_graph(hx)?;
    let to_vertex = |e: usize| g.vertex(m.label(e)).expect("element of the host");
    let to_elem = |vtx: usize| m.index(g.label(vtx)).expect("label of M");
    let path = |from: &str, target: Set| -> Result<Vec<usize>> {
        let targets: Vec<usize> = bits::elems(target).into_iter().map(to_vertex).collect();
        let start = to_vertex(m.index(from)?);
        g.shortest_path(start, &targets)
            .map(|p| p.into_iter().map(to_elem).collect())
            .ok_or_else(|| Error::Invariant("G(M\\{u,v}, X) is disconnected".into()))
    };
    let pa = path(&quad.a, c)?;
    let pa_set = pa.iter().fold(c, |s, &e| s | bits::bit(e));
    let pb = path(&quad.b, pa_set)?;
    Ok((pa, pb))
}
