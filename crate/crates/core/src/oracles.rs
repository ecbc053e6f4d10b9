//! Named verification campaigns with reproducible reports.
//!
//! Each check replays identities or compares presentations through the
//! algebraic oracles (Smith normal form, coset enumeration, homomorphism
//! counts into the fixed finite-group catalog). Randomized parts draw from a
//! ChaCha stream seeded by the `seed` parameter, so reports are identical
//! for identical `(name, params, seed)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braids::{
    artin_presentation_with, inclusion_hom, mobius_pipeline_with, mobius_presentation,
    mobius_stage1_with, mobius_two_cell_relators, r1_relators, Yb6Variant,
};
use crate::cube::{compose, CubeMorphism, IndexSet};
use crate::error::OracleError;
use crate::group::{abelianization, catalog, format, hom_count, todd_coxeter, Abelianization, CosetOutcome, Presentation, Word};

pub const CHECKS: [&str; 8] = [
    "cube_identities",
    "category_laws",
    "artin_counts",
    "mobius_counts",
    "abelianizations",
    "pipeline_equivalence",
    "inclusion_consistency",
    "quaternion_selftest",
];

pub const QUATERNION: &str = "generators: x, y\nrelator: x^4\nrelator: x^2 y^-2\nrelator: y^-1 x y x\n";

const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseDetail {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "name")]
    pub check_name: String,
    pub status: Status,
    pub details: Vec<CaseDetail>,
    pub seed: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub type ArtinSource = Arc<dyn Fn(usize) -> Presentation + Send + Sync>;

/// What the checks are run against. The Artin presentation is pluggable so
/// that a corrupted generator can be shown to be caught.
#[derive(Clone)]
pub struct Subjects {
    pub artin: ArtinSource,
    pub variant: Yb6Variant,
}

impl Subjects {
    pub fn new(variant: Yb6Variant) -> Self {
        let artin: ArtinSource =
            Arc::new(move |k| artin_presentation_with(k, variant).expect("k >= 1"));
        Subjects { artin, variant }
    }
}

impl Default for Subjects {
    fn default() -> Self {
        Subjects::new(Yb6Variant::Theorem)
    }
}

pub type Params = BTreeMap<String, String>;

pub fn run_check(name: &str, params: &Params) -> Result<CheckReport, OracleError> {
    let variant = match params.get("variant") {
        Some(v) => v.parse().map_err(|reason| OracleError::BadParam { key: "variant".into(), reason })?,
        None => Yb6Variant::Theorem,
    };
    run_check_with(name, params, &Subjects::new(variant))
}

pub fn run_check_with(name: &str, params: &Params, subjects: &Subjects) -> Result<CheckReport, OracleError> {
    let seed = param(params, "seed", 0u64)?;
    let tally = match name {
        "cube_identities" => cube_identities(params, seed)?,
        "category_laws" => category_laws(params)?,
        "artin_counts" => artin_counts(params, subjects)?,
        "mobius_counts" => mobius_counts(params)?,
        "abelianizations" => abelianizations(params, subjects)?,
        "pipeline_equivalence" => pipeline_equivalence(params, subjects)?,
        "inclusion_consistency" => inclusion_consistency(params, subjects)?,
        "quaternion_selftest" => quaternion_selftest(params)?,
        other => return Err(OracleError::UnknownCheck(other.to_string())),
    };
    Ok(tally.into_report(name, seed))
}

pub fn run_all(seed: u64) -> Vec<CheckReport> {
    run_all_with(seed, &Subjects::default())
}

pub fn run_all_with(seed: u64, subjects: &Subjects) -> Vec<CheckReport> {
    let params = Params::from([("seed".to_string(), seed.to_string())]);
    CHECKS
        .iter()
        .map(|name| run_check_with(name, &params, subjects).expect("registered check with default params"))
        .collect()
}

pub fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let _ = writeln!(out, "[{status}] {} (seed {})", r.check_name, r.seed);
        for d in &r.details {
            let _ = writeln!(out, "    {}: expected {}, got {}", d.case, d.expected, d.got);
        }
    }
    out
}

pub fn render_json(reports: &[CheckReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

fn param<T: std::str::FromStr>(params: &Params, key: &str, default: T) -> Result<T, OracleError> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|_| OracleError::BadParam {
            key: key.to_string(),
            reason: format!("cannot parse `{v}`"),
        }),
    }
}

/// Counts cases, keeps a bounded list of counterexamples plus summary lines.
#[derive(Default)]
struct Tally {
    summary: Vec<CaseDetail>,
    failures: Vec<CaseDetail>,
    failed: usize,
}

impl Tally {
    fn check<F: FnOnce() -> CaseDetail>(&mut self, ok: bool, detail: F) -> bool {
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(detail());
            }
        }
        ok
    }

    fn compare<T: PartialEq + std::fmt::Display>(&mut self, case: impl FnOnce() -> String, expected: T, got: T) -> bool {
        let ok = expected == got;
        self.check(ok, || CaseDetail { case: case(), expected: expected.to_string(), got: got.to_string() })
    }

    fn note(&mut self, case: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        self.summary.push(CaseDetail { case: case.into(), expected: expected.into(), got: got.into() });
    }

    fn into_report(self, name: &str, seed: u64) -> CheckReport {
        let status = if self.failed == 0 { Status::Pass } else { Status::Fail };
        let mut details = self.failures;
        if self.failed > details.len() {
            details.push(CaseDetail {
                case: "further failures not listed".into(),
                expected: "0".into(),
                got: (self.failed - details.len()).to_string(),
            });
        }
        details.extend(self.summary);
        CheckReport { check_name: name.to_string(), status, details, seed }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---- cube identities ----

struct CubeCounter<'a> {
    tally: &'a mut Tally,
    cases: usize,
}

impl CubeCounter<'_> {
    fn eq(&mut self, label: &str, args: &[&IndexSet], lhs: &IndexSet, rhs: &IndexSet) {
        self.cases += 1;
        self.tally.check(lhs == rhs, || CaseDetail {
            case: format!("{label} at {}", args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")),
            expected: rhs.to_string(),
            got: lhs.to_string(),
        });
    }
}

/// Every identity that involves the pair `(j, i)` with `j ∈ C^{n-p}_q`.
fn vee_identities(c: &mut CubeCounter<'_>, j: &IndexSet, i: &IndexSet, uniqueness: bool) {
    let joined = j.vee(i).expect("compatible");
    let l = j.bracket(i).expect("compatible");
    c.eq("complement(j vee i) = comp j wedge comp i", &[j, i], &joined.complement(), &j.complement().wedge(&i.complement()).expect("compatible"));
    // defining property of the bracket
    c.eq("[j,i] wedge (j vee i) = i", &[j, i], &l.wedge(&joined).expect("compatible"), i);
    // characterization of the bracket
    let rhs = j.wedge(&i.complement()).expect("compatible");
    c.eq("comp[j,i] wedge (j vee i) = j wedge comp i", &[j, i], &l.complement().wedge(&joined).expect("compatible"), &rhs);
    if uniqueness {
        for other in IndexSet::all(joined.len(), i.len()) {
            if other != l {
                let lhs = other.complement().wedge(&joined).expect("compatible");
                c.cases += 1;
                c.tally.check(lhs != rhs, || CaseDetail {
                    case: format!("uniqueness of [j,i] at {j}, {i}"),
                    expected: format!("only {l}"),
                    got: format!("also {other}"),
                });
            }
        }
    }
}

fn prop1(c: &mut CubeCounter<'_>, j: &IndexSet, i: &IndexSet) {
    let lhs = j.wedge(i).expect("compatible").complement();
    let rhs = j.complement().vee(&i.complement()).expect("compatible");
    c.eq("complement(j wedge i) = comp j vee comp i", &[j, i], &lhs, &rhs);
}

fn prop4(c: &mut CubeCounter<'_>, k: &IndexSet, j: &IndexSet, i: &IndexSet) {
    let kj = k.vee(j).expect("compatible");
    let ji = j.vee(i).expect("compatible");
    let k_ji = k.bracket(&ji).expect("compatible");
    let lhs = kj.bracket(i).expect("compatible");
    let rhs = j.bracket(i).expect("compatible").wedge(&k_ji).expect("compatible");
    c.eq("[k vee j, i] = [j,i] wedge [k, j vee i]", &[k, j, i], &lhs, &rhs);
    let rhs2 = k.bracket(j).expect("compatible").vee(&kj.bracket(i).expect("compatible")).expect("compatible");
    c.eq("[k, j vee i] = [k,j] vee [k vee j, i]", &[k, j, i], &k_ji, &rhs2);
}

fn wedge_assoc(c: &mut CubeCounter<'_>, k: &IndexSet, j: &IndexSet, i: &IndexSet) {
    let lhs = k.wedge(&j.wedge(i).expect("compatible")).expect("compatible");
    let rhs = k.wedge(j).expect("compatible").wedge(i).expect("compatible");
    c.eq("k wedge (j wedge i) = (k wedge j) wedge i", &[k, j, i], &lhs, &rhs);
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> IndexSet {
    let indices = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
    IndexSet::new(n, indices).expect("increasing by construction")
}

fn cube_identities(params: &Params, seed: u64) -> Result<Tally, OracleError> {
    let n_max: usize = param(params, "n_max", 8)?;
    let random_cases: usize = param(params, "random_cases", 100_000)?;
    let random_n_max: usize = param(params, "random_n_max", 20)?;
    let mode: String = param(params, "mode", "both".to_string())?;
    if !["both", "exhaustive", "random"].contains(&mode.as_str()) {
        return Err(OracleError::BadParam { key: "mode".into(), reason: format!("unknown mode `{mode}`") });
    }
    let mut tally = Tally::default();

    if mode != "random" {
        let mut c = CubeCounter { tally: &mut tally, cases: 0 };
        for n in 0..=n_max {
            for i in IndexSet::all_subsets(n) {
                let p = i.len();
                for j in IndexSet::all_subsets(p) {
                    prop1(&mut c, &j, &i);
                    for k in IndexSet::all_subsets(j.len()) {
                        wedge_assoc(&mut c, &k, &j, &i);
                    }
                }
                for j in IndexSet::all_subsets(n - p) {
                    vee_identities(&mut c, &j, &i, true);
                    for k in IndexSet::all_subsets(n - p - j.len()) {
                        prop4(&mut c, &k, &j, &i);
                    }
                }
            }
        }
        let cases = c.cases;
        tally.note(format!("exhaustive, ambient n <= {n_max}"), "all identities hold", format!("{cases} cases checked"));
    }

    if mode != "exhaustive" && random_cases > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = CubeCounter { tally: &mut tally, cases: 0 };
        for _ in 0..random_cases {
            let n = rng.gen_range(1..=random_n_max.max(1));
            let i = random_subset(&mut rng, n);
            let sel = random_subset(&mut rng, i.len());
            prop1(&mut c, &sel, &i);
            wedge_assoc(&mut c, &random_subset(&mut rng, sel.len()), &sel, &i);
            let j = random_subset(&mut rng, n - i.len());
            vee_identities(&mut c, &j, &i, false);
            let k = random_subset(&mut rng, n - i.len() - j.len());
            prop4(&mut c, &k, &j, &i);
        }
        let cases = c.cases;
        tally.note(
            format!("{random_cases} random instances, ambient n <= {random_n_max}"),
            "all identities hold",
            format!("{cases} cases checked"),
        );
    }
    Ok(tally)
}

fn category_laws(params: &Params) -> Result<Tally, OracleError> {
    let source_max: usize = param(params, "source_max", 5)?;
    let mut tally = Tally::default();
    let mut triples = 0usize;
    for p in 0..=source_max {
        for f in CubeMorphism::all_from(p) {
            let left = compose(&CubeMorphism::identity(f.target()), &f).expect("composable");
            tally.check(left == f, || CaseDetail {
                case: format!("id . f with f = {} from {p}", f.data()),
                expected: f.data().to_string(),
                got: left.data().to_string(),
            });
            let right = compose(&f, &CubeMorphism::identity(p)).expect("composable");
            tally.check(right == f, || CaseDetail {
                case: format!("f . id with f = {} from {p}", f.data()),
                expected: f.data().to_string(),
                got: right.data().to_string(),
            });
            for g in CubeMorphism::all_from(f.target()) {
                let gf = compose(&g, &f).expect("composable");
                for h in CubeMorphism::all_from(g.target()) {
                    triples += 1;
                    let lhs = compose(&compose(&h, &g).expect("composable"), &f).expect("composable");
                    let rhs = compose(&h, &gf).expect("composable");
                    tally.check(lhs == rhs, || CaseDetail {
                        case: format!("(h.g).f = h.(g.f) with f = {}, g = {}, h = {}", f.data(), g.data(), h.data()),
                        expected: rhs.data().to_string(),
                        got: lhs.data().to_string(),
                    });
                }
            }
        }
    }
    tally.note(format!("sources <= {source_max}"), "identity and associativity", format!("{triples} composable triples"));
    Ok(tally)
}

// ---- presentation counts ----

fn increasing_tuples(k: usize, len: usize) -> usize {
    // brute force over [1..k]^len
    let total = k.pow(len as u32);
    (0..total)
        .filter(|&code| {
            let digits: Vec<usize> = (0..len).map(|d| code / k.pow(d as u32) % k).collect();
            digits.windows(2).all(|w| w[0] < w[1])
        })
        .count()
}

fn artin_counts(params: &Params, subjects: &Subjects) -> Result<Tally, OracleError> {
    let k_max: usize = param(params, "k_max", 8)?;
    let mut tally = Tally::default();
    for k in 1..=k_max {
        let p = (subjects.artin)(k);
        let enumerated = 2 * increasing_tuples(k, 3) + 4 * increasing_tuples(k, 4);
        tally.compare(|| format!("relators of P_{k} by tuple enumeration"), enumerated, p.relators().len());
        tally.compare(|| format!("relators of P_{k} by formula"), 2 * binomial(k, 3) + 4 * binomial(k, 4), p.relators().len());
        tally.compare(|| format!("generators of P_{k}"), increasing_tuples(k, 2), p.rank());
    }
    tally.note(format!("1 <= k <= {k_max}"), "2 C(k,3) + 4 C(k,4) relators", "matched");
    Ok(tally)
}

fn mobius_counts(params: &Params) -> Result<Tally, OracleError> {
    let k_max: usize = param(params, "k_max", 8)?;
    let mut tally = Tally::default();
    for k in 1..=k_max {
        let m = mobius_presentation(k).expect("k >= 1");
        let enumerated = increasing_tuples(k, 2) + 4 * increasing_tuples(k, 3) + 2 * increasing_tuples(k, 4);
        tally.compare(|| format!("relators of P_{k}(M) by tuple enumeration"), enumerated, m.relators().len());
        tally.compare(
            || format!("relators of P_{k}(M) by formula"),
            binomial(k, 2) + 4 * binomial(k, 3) + 2 * binomial(k, 4),
            m.relators().len(),
        );
        tally.compare(|| format!("generators of P_{k}(M)"), k, m.rank());
        if k >= 2 {
            let cells = mobius_two_cell_relators(k).expect("k >= 2").len();
            tally.compare(|| format!("2-cells for k = {k}"), 2 * increasing_tuples(k, 2), cells);
        }
    }
    tally.note(format!("1 <= k <= {k_max}"), "C(k,2) + 4 C(k,3) + 2 C(k,4) relators", "matched");
    Ok(tally)
}

fn abelianizations(params: &Params, subjects: &Subjects) -> Result<Tally, OracleError> {
    let k_max: usize = param(params, "k_max", 6)?;
    let mut tally = Tally::default();
    for k in 1..=k_max {
        let free = |rank| Abelianization { rank, torsion: vec![] };
        let artin = abelianization(&(subjects.artin)(k));
        tally.compare(|| format!("abelianization of P_{k}"), free(binomial(k, 2)), artin);
        let mobius = abelianization(&mobius_presentation(k).expect("k >= 1"));
        tally.compare(|| format!("abelianization of P_{k}(M)"), free(k), mobius);
    }
    tally.note(format!("1 <= k <= {k_max}"), "Z^C(k,2) and Z^k", "matched");
    Ok(tally)
}

fn class_set(words: &[Word]) -> BTreeSet<Word> {
    words.iter().map(Word::canonical_relator).filter(|w| !w.is_identity()).collect()
}

fn describe_difference(expected: &BTreeSet<Word>, got: &BTreeSet<Word>) -> (String, String) {
    let missing: Vec<String> = expected.difference(got).take(3).map(|w| w.to_string()).collect();
    let extra: Vec<String> = got.difference(expected).take(3).map(|w| w.to_string()).collect();
    (format!("missing {{{}}}", missing.join("; ")), format!("extra {{{}}}", extra.join("; ")))
}

fn invariants(p: &Presentation) -> (Abelianization, Vec<(&'static str, u64)>) {
    let counts = catalog()
        .into_iter()
        .map(|(name, g)| (name, hom_count(p, &g).expect("within enumeration limit")))
        .collect();
    (abelianization(p), counts)
}

fn compare_invariants(tally: &mut Tally, label: &str, expected: &Presentation, got: &Presentation) {
    let (ea, ec) = invariants(expected);
    let (ga, gc) = invariants(got);
    tally.compare(|| format!("{label}: abelianization"), &ea, &ga);
    for ((name, e), (_, g)) in ec.iter().zip(&gc) {
        tally.compare(|| format!("{label}: homomorphisms into {name}"), e, g);
    }
}

fn pipeline_equivalence(params: &Params, subjects: &Subjects) -> Result<Tally, OracleError> {
    let only: Option<usize> = match params.get("k") {
        Some(_) => Some(param(params, "k", 0usize)?),
        None => None,
    };
    if only == Some(0) {
        return Err(OracleError::BadParam { key: "k".into(), reason: "strand count must be >= 1".into() });
    }
    let stage1_max: usize = param(params, "stage1_k_max", 5)?;
    let hom_max: usize = param(params, "hom_k_max", 3)?;
    let range = |max: usize| -> Vec<usize> {
        match only {
            Some(k) => vec![k],
            None => (1..=max).collect(),
        }
    };
    let mut tally = Tally::default();

    for k in range(stage1_max) {
        let stage1 = mobius_stage1_with(k, subjects.variant).expect("k >= 1");
        let mut direct: Vec<Word> = (subjects.artin)(k).relators().to_vec();
        direct.extend(r1_relators(k));
        let expected = class_set(&direct);
        let got = stage1.relator_classes();
        let (e, g) = describe_difference(&expected, &got);
        tally.check(expected == got, || CaseDetail {
            case: format!("stage-1 relators vs Artin + R1 enumeration, k = {k}"),
            expected: e,
            got: g,
        });
    }

    if only.is_none() || only == Some(2) {
        let pipeline = mobius_pipeline_with(2, subjects.variant).expect("k = 2");
        let closed = mobius_presentation(2).expect("k = 2");
        let (e, g) = (closed.relator_classes(), pipeline.relator_classes());
        let ok = tally.check(e == g, || {
            let (e, g) = describe_difference(&e, &g);
            CaseDetail { case: "eliminated pipeline relators, k = 2".into(), expected: e, got: g }
        });
        if ok {
            let matched: Vec<String> = g.iter().map(|w| w.to_string()).collect();
            tally.note("canonical relators, k = 2", "closed-form relator", matched.join("; "));
        }
    }

    for k in range(hom_max) {
        let pipeline = mobius_pipeline_with(k, subjects.variant).expect("k >= 1");
        let closed = mobius_presentation(k).expect("k >= 1");
        compare_invariants(&mut tally, &format!("pipeline vs closed form, k = {k}"), &closed, &pipeline);
    }
    Ok(tally)
}

fn inclusion_consistency(params: &Params, subjects: &Subjects) -> Result<Tally, OracleError> {
    let k_max: usize = param(params, "k_max", 4)?;
    let mut tally = Tally::default();
    let mut adjoined = 0;
    for k in 1..=k_max {
        let hom = inclusion_hom(k).expect("k >= 1");
        let base = mobius_presentation(k).expect("k >= 1");
        let baseline = invariants(&base);
        for (n, r) in (subjects.artin)(k).relators().iter().enumerate() {
            let image = match hom.apply(r) {
                Ok(w) => w,
                Err(e) => {
                    tally.check(false, || CaseDetail {
                        case: format!("image of Artin relator {n}, k = {k}"),
                        expected: "a word over rho".into(),
                        got: e.to_string(),
                    });
                    continue;
                }
            };
            let extended = base.with_relator(image).expect("image is over the target generators");
            let after = invariants(&extended);
            adjoined += 1;
            tally.compare(|| format!("abelianization after adjoining image of relator {n} ({r}), k = {k}"), &baseline.0, &after.0);
            for ((name, e), (_, g)) in baseline.1.iter().zip(&after.1) {
                tally.compare(|| format!("homomorphisms into {name} after adjoining image of relator {n} ({r}), k = {k}"), e, g);
            }
        }
    }
    tally.note(format!("k <= {k_max}"), "no invariant changes", format!("{adjoined} relator images adjoined"));
    Ok(tally)
}

fn quaternion_selftest(params: &Params) -> Result<Tally, OracleError> {
    let max_cosets: usize = param(params, "max_cosets", 1000)?;
    let mut tally = Tally::default();
    let q = format::from_plain(QUATERNION).expect("built-in presentation");
    let case = "coset enumeration of <x,y | x^4, x^2 y^-2, y^-1 x y x>";
    let got = match todd_coxeter(&q, &[], max_cosets).expect("words over the presentation") {
        CosetOutcome::Index(n) => format!("order={n}"),
        CosetOutcome::Overflow { max_cosets } => format!("overflow at {max_cosets} cosets"),
    };
    if tally.compare(|| case.to_string(), "order=8".to_string(), got.clone()) {
        tally.note(case, "order=8", got);
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, &str)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn unknown_check_and_bad_params() {
        assert_eq!(run_check("no_such_check", &Params::new()), Err(OracleError::UnknownCheck("no_such_check".into())));
        assert!(matches!(run_check("cube_identities", &params(&[("n_max", "x")])), Err(OracleError::BadParam { .. })));
        assert!(matches!(run_check("cube_identities", &params(&[("mode", "fast")])), Err(OracleError::BadParam { .. })));
        assert!(matches!(run_check("artin_counts", &params(&[("variant", "other")])), Err(OracleError::BadParam { .. })));
    }

    #[test]
    fn quaternion_detail() {
        let r = run_check("quaternion_selftest", &Params::new()).unwrap();
        assert!(r.passed());
        assert_eq!(r.details[0].got, "order=8");
    }

    #[test]
    fn small_cube_run_is_reproducible() {
        let p = params(&[("n_max", "4"), ("random_cases", "200"), ("seed", "7")]);
        let a = run_check("cube_identities", &p).unwrap();
        let b = run_check("cube_identities", &p).unwrap();
        assert!(a.passed());
        assert_eq!(render_json(&[a]), render_json(&[b]));
    }

    #[test]
    fn failures_carry_counterexamples() {
        let mut t = Tally::default();
        for n in 0..25 {
            t.compare(|| format!("case {n}"), 1, 2);
        }
        let r = t.into_report("demo", 3);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.details.len(), MAX_RECORDED_FAILURES + 1);
        assert_eq!(r.details[0].expected, "1");
        assert_eq!(r.details[MAX_RECORDED_FAILURES].got, "15");
    }

    #[test]
    fn brute_force_tuple_counts() {
        assert_eq!(increasing_tuples(5, 2), 10);
        assert_eq!(increasing_tuples(5, 3), 10);
        assert_eq!(increasing_tuples(1, 3), 0);
        assert_eq!(binomial(8, 4), 70);
    }
}
