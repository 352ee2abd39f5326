//! Verification suites.
//!
//! Every suite checks its golden cases, an optional `--input` document, and
//! `trials` random instances. Instance `t` of a run with seed `s` is drawn
//! from `trial_rng(s, t)` alone, so `--seed s --trial t` reproduces it.
//! Trials run in parallel; the report is assembled in trial order.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use clap::ValueEnum;
use jumpcoef::bernstein::{self, RootList};
use jumpcoef::graded::{self, DiagonalFamily, Direction, Membership, NonperiodicityVerdict};
use jumpcoef::hypersurface::{self, NondegeneracyStatus};
use jumpcoef::io::{self, FamilySpec};
use jumpcoef::jacobian::{self, Thm42Case};
use jumpcoef::jumping::artin_rees::{self, ArtinReesReport};
use jumpcoef::jumping::checks;
use jumpcoef::jumping::product;
use jumpcoef::jumping::{self, Howald};
use jumpcoef::random::{random_ideal, random_positive_rational, trial_rng, IdealShape};
use jumpcoef::rational::{self, format_rational, int, rat, Rational};
use jumpcoef::{Exponent, MonomialIdeal, SparsePolynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cases;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Periodicity,
    Subadditivity,
    Skoda,
    ThomSebastiani,
    ArtinRees,
    Semicontinuity,
    #[value(name = "thm4-2")]
    #[serde(rename = "thm4-2")]
    Thm42,
    #[value(name = "prop3-8")]
    #[serde(rename = "prop3-8")]
    Prop38,
    Graded,
    Bs,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One named check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

impl Probe {
    fn new(label: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Probe {
            label: label.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skip(label: impl Into<String>, why: impl Into<String>) -> Self {
        Probe {
            label: label.into(),
            status: Status::Skip,
            detail: why.into(),
        }
    }

    /// Runs `check`, turning an error into a failure that carries it.
    fn run(label: impl Into<String>, check: impl FnOnce() -> anyhow::Result<(bool, String)>) -> Self {
        let label = label.into();
        match check() {
            Ok((ok, detail)) => Probe::new(label, ok, detail),
            Err(e) => Probe::new(label, false, format!("error: {e:#}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Golden,
    Input,
    Trial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub origin: Origin,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    #[serde(flatten)]
    pub probe: Probe,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub trials: u64,
    pub seed: u64,
    pub only_trial: Option<u64>,
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: u64,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| c.probe.status == Status::Fail)
    }
}

impl Report for SuiteReport {
    const COMMAND: &'static str = "verify";

    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = match c.probe.status {
                Status::Pass => "ok  ",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let origin = match (&c.origin, c.trial) {
                (Origin::Trial, Some(t)) => format!("trial {t}"),
                (Origin::Input, _) => "input".to_string(),
                _ => "golden".to_string(),
            };
            let _ = writeln!(out, "{tag} [{origin}] {}: {}", c.probe.label, c.probe.detail);
            if let Some(r) = &c.reproduce {
                let _ = writeln!(out, "     reproduce: {r}");
            }
        }
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed, {} skipped (seed {}, {} trials)",
            self.suite.name(),
            self.passed,
            self.failed,
            self.skipped,
            self.seed,
            self.trials
        );
        out
    }

    fn success(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> anyhow::Result<SuiteReport> {
    let name = suite.name();
    let mut cases = Vec::new();
    let mut push = |origin: Origin, trial: Option<u64>, probes: Vec<Probe>, repro: &str| {
        for probe in probes {
            let reproduce = (probe.status == Status::Fail).then(|| repro.to_string());
            cases.push(CaseOutcome {
                origin: origin.clone(),
                trial,
                probe,
                reproduce,
            });
        }
    };

    if opts.only_trial.is_none() {
        push(
            Origin::Golden,
            None,
            golden(suite),
            &format!("jumpcoef verify {name} --trials 0"),
        );
        if let Some(path) = &opts.input {
            let probes = input(suite, path)?;
            let repro = format!("jumpcoef verify {name} --trials 0 --input {}", path.display());
            push(Origin::Input, None, probes, &repro);
        }
    }
    let indices: Vec<u64> = match opts.only_trial {
        Some(t) => vec![t],
        None => (0..opts.trials).collect(),
    };
    let results: Vec<(u64, Vec<Probe>)> = indices
        .into_par_iter()
        .map(|t| (t, trial(suite, &mut trial_rng(opts.seed, t))))
        .collect();
    for (t, probes) in results {
        let repro = format!("jumpcoef verify {name} --seed {} --trial {t}", opts.seed);
        push(Origin::Trial, Some(t), probes, &repro);
    }

    let count = |s: Status| cases.iter().filter(|c| c.probe.status == s).count();
    Ok(SuiteReport {
        suite,
        seed: opts.seed,
        trials: opts.only_trial.map_or(opts.trials, |_| 1),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        cases,
    })
}

fn golden(suite: Suite) -> Vec<Probe> {
    match suite {
        Suite::Periodicity => golden_periodicity(),
        Suite::Subadditivity => golden_subadditivity(),
        Suite::Skoda => golden_skoda(),
        Suite::ThomSebastiani => golden_thom_sebastiani(),
        Suite::ArtinRees => golden_artin_rees(),
        Suite::Semicontinuity => golden_semicontinuity(),
        Suite::Thm42 => golden_thm_4_2(),
        Suite::Prop38 => golden_prop_3_8(),
        Suite::Graded => golden_graded(),
        Suite::Bs => golden_bs(),
    }
}

fn trial(suite: Suite, rng: &mut ChaCha8Rng) -> Vec<Probe> {
    match suite {
        Suite::Periodicity => {
            let a = structural_ideal(rng);
            let window = int(a.dimension() as i64 + 2);
            vec![periodicity_probe(&a, &window)]
        }
        Suite::Subadditivity => subadditivity_probes(&structural_ideal(rng)),
        Suite::Skoda => skoda_probes(&structural_ideal(rng)),
        Suite::ThomSebastiani => trial_thom_sebastiani(rng),
        Suite::ArtinRees => trial_artin_rees(rng),
        Suite::Semicontinuity => trial_semicontinuity(rng),
        Suite::Thm42 => {
            let d = rng.gen_range(1..=3);
            let a = random_ideal(
                rng,
                IdealShape {
                    dimension: d,
                    max_generators: 3,
                    max_exponent: 5,
                    finite_colength: false,
                },
            );
            let m = rng.gen_range(1..=d);
            vec![thm_4_2_probe(&a, m, None)]
        }
        Suite::Prop38 => trial_prop_3_8(rng),
        Suite::Graded => trial_graded(rng),
        Suite::Bs => {
            let (a, b) = (rng.gen_range(2..=7), rng.gen_range(2..=7));
            let f = binomial(a, b);
            vec![bs_probe(&format!("{f}"), &f, quasi_homogeneous_roots(a, b))]
        }
    }
}

fn input(suite: Suite, path: &Path) -> anyhow::Result<Vec<Probe>> {
    let text = crate::commands::read(path)?;
    let within = || format!("in {}", path.display());
    Ok(match suite {
        Suite::Periodicity | Suite::Subadditivity | Suite::Skoda | Suite::Thm42 | Suite::ArtinRees => {
            let a = io::parse_ideal(&text).with_context(within)?;
            match suite {
                Suite::Periodicity => vec![periodicity_probe(&a, &int(a.dimension() as i64 + 2))],
                Suite::Subadditivity => subadditivity_probes(&a),
                Suite::Skoda => skoda_probes(&a),
                Suite::Thm42 => (1..=a.dimension()).map(|m| thm_4_2_probe(&a, m, None)).collect(),
                _ => {
                    let b = MonomialIdeal::maximal(a.dimension());
                    let d = a.dimension() as u32;
                    let mut probes = vec![theorem_3_1_probe(&a, &b, d.max(4))];
                    probes.extend(corollary_3_2_probe(&a, &b, 1, 8));
                    probes
                }
            }
        }
        Suite::Prop38 => vec![prop_3_8_probe(
            &io::parse_polynomial(&text).with_context(within)?,
            true,
        )],
        Suite::Graded => match io::parse_family(&text).with_context(within)? {
            FamilySpec::Diagonal(f) => diagonal_probes(&f),
            FamilySpec::Hyperbola => golden_graded(),
        },
        Suite::Bs => {
            let roots = io::parse_roots(&text).with_context(within)?;
            let doc: serde_json::Value = serde_json::from_str(&text)?;
            let poly = doc
                .get("polynomial")
                .with_context(|| format!("{}: missing field `polynomial`", path.display()))?;
            let f = io::parse_polynomial(&poly.to_string()).context("in `polynomial`")?;
            vec![bs_probe(&path.display().to_string(), &f, roots)]
        }
        Suite::ThomSebastiani | Suite::Semicontinuity => {
            bail!("suite {} takes no --input", suite.name())
        }
    })
}

fn golden_ideal(path: &str) -> MonomialIdeal {
    io::parse_ideal(cases::get(path)).expect("golden ideal parses")
}

fn golden_poly(path: &str) -> SparsePolynomial {
    io::parse_polynomial(cases::get(path)).expect("golden polynomial parses")
}

fn ideal_of(gens: &[&[u32]]) -> MonomialIdeal {
    let d = gens[0].len();
    MonomialIdeal::minimalize(gens.iter().map(|g| g.to_vec()).collect(), d).expect("well-formed generators")
}

fn list(values: &[Rational]) -> String {
    format!(
        "[{}]",
        values.iter().map(format_rational).collect::<Vec<_>>().join(", ")
    )
}

/// d in 1..=3, up to four generators, exponents at most 6.
fn structural_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let dimension = rng.gen_range(1..=3);
    random_ideal(
        rng,
        IdealShape {
            dimension,
            max_generators: 4,
            max_exponent: 6,
            finite_colength: false,
        },
    )
}

fn periodicity_probe(a: &MonomialIdeal, window: &Rational) -> Probe {
    Probe::run(
        format!("periodicity {a} up to {}", format_rational(window)),
        || {
            let r = checks::periodicity_check(a, window)?;
            Ok((
                r.passed(),
                format!(
                "{} jumps; forward violations {}, backward {}, backward above p - 1 {}; boundary cases {}",
                r.jumps.len(),
                list(&r.forward_violations),
                list(&r.backward_violations),
                list(&r.backward_violations_generators),
                list(&r.boundary_examples)
            ),
            ))
        },
    )
}

fn golden_periodicity() -> Vec<Probe> {
    let m2 = golden_ideal("monomial/maxideal2.json");
    let mut probes = vec![periodicity_probe(&m2, &int(6))];
    probes.push(Probe::run("(s, t): 1 is not a jump although 2 is", || {
        let r = checks::periodicity_check(&m2, &int(6))?;
        let ok = r.boundary_examples == vec![int(1)] && r.jumps.first() == Some(&int(2));
        Ok((ok, format!("boundary cases {}", list(&r.boundary_examples))))
    }));
    for (path, window) in [
        ("monomial/maxideal1.json", 6),
        ("monomial/maxideal3.json", 6),
        ("monomial/s3t4.json", 3),
        ("monomial/st.json", 4),
    ] {
        probes.push(periodicity_probe(&golden_ideal(path), &int(window)));
    }
    probes.push(Probe::run("(st) is periodic from 0 on (one generator)", || {
        let r = checks::periodicity_check(&golden_ideal("monomial/st.json"), &int(4))?;
        Ok((
            r.backward_violations_generators.is_empty() && r.jumps == (1..=4).map(int).collect::<Vec<_>>(),
            format!("jumps {}", list(&r.jumps)),
        ))
    }));
    probes
}

fn subadditivity_probes(a: &MonomialIdeal) -> Vec<Probe> {
    let lct = match jumping::lct(a) {
        Ok(l) => l,
        Err(e) => {
            return vec![Probe::new(
                format!("subadditivity {a}"),
                false,
                format!("error: {e}"),
            )]
        }
    };
    let window = &lct + int(2);
    vec![
        Probe::run(
            format!("subadditivity {a} up to {}", format_rational(&window)),
            || {
                let r = checks::subadditivity_check(a, &window)?;
                Ok((
                    r.passed(),
                    format!(
                        "lct {}, {} jumps, violations at {:?}",
                        format_rational(&r.lct),
                        r.jumps.len(),
                        r.violations
                    ),
                ))
            },
        ),
        Probe::run(
            format!("denominators {a} up to {}", format_rational(&window)),
            || {
                let h = Howald::new(a)?;
                let spec = h.jumps_upto(&window)?;
                let r = checks::denominator_bound(&spec, h.polyhedron());
                Ok((
                    r.passed(),
                    format!(
                        "facet level lcm {}, min gap {}, offending {}",
                        r.level_lcm,
                        r.min_gap.as_deref().unwrap_or("-"),
                        list(&r.offending)
                    ),
                ))
            },
        ),
    ]
}

fn golden_subadditivity() -> Vec<Probe> {
    let mut probes = Vec::new();
    for (path, window) in [
        ("monomial/s3t4.json", 2),
        ("monomial/maxideal2.json", 6),
        ("monomial/s9t10.json", 2),
    ] {
        let a = golden_ideal(path);
        probes.push(Probe::run(format!("subadditivity {a} up to {window}"), || {
            let r = checks::subadditivity_check(&a, &int(window))?;
            Ok((
                r.passed(),
                format!(
                    "lct {}, violations at {:?}",
                    format_rational(&r.lct),
                    r.violations
                ),
            ))
        }));
    }
    for (path, lcm) in [
        ("monomial/s3t4.json", 12),
        ("monomial/maxideal2.json", 1),
        ("monomial/s9t10.json", 90),
    ] {
        let a = golden_ideal(path);
        probes.push(Probe::run(format!("denominators of {a} divide {lcm}"), || {
            let h = Howald::new(&a)?;
            let r = checks::denominator_bound(&h.jumps_upto(&int(2))?, h.polyhedron());
            Ok((
                r.passed() && r.level_lcm == lcm,
                format!("facet level lcm {}", r.level_lcm),
            ))
        }));
    }
    probes
}

/// Coefficients to probe: the first jumps and a point inside each of the
/// first intervals between them.
fn sample_coefficients(a: &MonomialIdeal) -> anyhow::Result<Vec<Rational>> {
    let h = Howald::new(a)?;
    let spec = h.jumps_upto(&(h.lct() + int(1)))?;
    let mut cs: Vec<Rational> = spec.jumps.iter().take(4).cloned().collect();
    cs.extend(spec.interval_representatives().into_iter().take(4));
    cs.sort();
    cs.dedup();
    Ok(cs)
}

fn skoda_probes(a: &MonomialIdeal) -> Vec<Probe> {
    let d = a.dimension() as u32;
    let p = a.generators().len() as u32;
    let mut probes = vec![Probe::run(format!("skoda {a}, m = d - 1 = {}", d - 1), || {
        let cs = sample_coefficients(a)?;
        let bad = cs
            .iter()
            .map(|c| Ok((c, checks::skoda_check(a, c, d - 1)?)))
            .collect::<anyhow::Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(c, _)| c.clone())
            .collect::<Vec<_>>();
        Ok((
            bad.is_empty(),
            format!("{} coefficients, failures {}", cs.len(), list(&bad)),
        ))
    })];
    probes.push(Probe::run(
        format!("skoda {a}, {p} generators, m = {}", p - 1),
        || {
            let cs = sample_coefficients(a)?;
            let mut bad = Vec::new();
            for c in &cs {
                if !checks::skoda_check_generators(a, c, p - 1)? {
                    bad.push(c.clone());
                }
            }
            Ok((
                bad.is_empty(),
                format!("{} coefficients, failures {}", cs.len(), list(&bad)),
            ))
        },
    ));
    probes
}

fn golden_skoda() -> Vec<Probe> {
    let m = golden_ideal("monomial/maxideal2.json");
    let cusp = golden_ideal("monomial/s3t4.json");
    let mut probes = vec![
        Probe::run("(s, t), m = 1, c = 1/2", || {
            Ok((checks::skoda_check(&m, &rat(1, 2), 1)?, String::new()))
        }),
        Probe::run("(s^3, t^4), m = 1, c = 7/12", || {
            Ok((checks::skoda_check(&cusp, &rat(7, 12), 1)?, String::new()))
        }),
    ];
    probes.push(Probe::run("(s^3, t^4), m = 1, every interval below 1", || {
        let reps = Howald::new(&cusp)?
            .jumps_upto(&int(1))?
            .interval_representatives();
        let mut bad = Vec::new();
        for c in &reps {
            if !checks::skoda_check(&cusp, c, 1)? {
                bad.push(c.clone());
            }
        }
        Ok((
            bad.is_empty(),
            format!("points {}, failures {}", list(&reps), list(&bad)),
        ))
    }));
    probes.push(Probe::run("m below d - 1 is refused", || {
        let refused = checks::skoda_check(&golden_ideal("monomial/maxideal3.json"), &rat(1, 2), 1).is_err();
        Ok((refused, String::new()))
    }));
    probes
}

fn thom_sebastiani_probe(a: &MonomialIdeal, b: &MonomialIdeal, c_max: &Rational) -> Probe {
    Probe::run(
        format!("jumps of {a} ⊕ {b} up to {}", format_rational(c_max)),
        || {
            let ts = product::thom_sebastiani_jumps(a, b, c_max)?;
            let direct = jumping::jumps_upto(&a.direct_sum(b), c_max)?;
            Ok((
                ts.jumps == direct.jumps && ts.multiplicities == direct.multiplicities,
                format!("{} sums, {} direct jumps", ts.len(), direct.len()),
            ))
        },
    )
}

fn mustata_probe(a: &MonomialIdeal, b: &MonomialIdeal, cs: &[Rational]) -> Probe {
    Probe::run(
        format!("summation formula for {a} ⊕ {b} at {} points", cs.len()),
        || {
            let combined = a.direct_sum(b);
            let h = Howald::new(&combined)?;
            let mut bad = Vec::new();
            for c in cs {
                if product::mustata_sum(a, b, c)? != h.multiplier_ideal(c)? {
                    bad.push(c.clone());
                }
            }
            Ok((bad.is_empty(), format!("failures {}", list(&bad))))
        },
    )
}

fn golden_thom_sebastiani() -> Vec<Probe> {
    let s2 = ideal_of(&[&[2]]);
    let t3 = ideal_of(&[&[3]]);
    let s = ideal_of(&[&[1]]);
    let u2 = ideal_of(&[&[2]]);
    let cusp = golden_ideal("monomial/s3t4.json");
    vec![
        thom_sebastiani_probe(&s2, &t3, &int(2)),
        thom_sebastiani_probe(&s, &s, &int(5)),
        thom_sebastiani_probe(&cusp, &u2, &int(2)),
        Probe::run(
            "summation formula: (s^2) ⊕ (t^3) at 5/6 is the maximal ideal",
            || {
                let j = product::mustata_sum(&s2, &t3, &rat(5, 6))?;
                Ok((j == MonomialIdeal::maximal(2), format!("{j}")))
            },
        ),
        Probe::run("summation formula: (s) ⊕ (s) at 3/2 is the unit ideal", || {
            let j = product::mustata_sum(&s, &s, &rat(3, 2))?;
            Ok((j.is_unit(), format!("{j}")))
        }),
    ]
}

fn small_ideal(rng: &mut ChaCha8Rng, max_dimension: usize, max_exponent: u32) -> MonomialIdeal {
    let dimension = rng.gen_range(1..=max_dimension);
    random_ideal(
        rng,
        IdealShape {
            dimension,
            max_generators: 3,
            max_exponent,
            finite_colength: false,
        },
    )
}

fn trial_thom_sebastiani(rng: &mut ChaCha8Rng) -> Vec<Probe> {
    let a = small_ideal(rng, 2, 6);
    let b = small_ideal(rng, 2, 6);
    let c_max = match (jumping::lct(&a), jumping::lct(&b)) {
        (Ok(x), Ok(y)) => x + y + int(1),
        (Err(e), _) | (_, Err(e)) => {
            return vec![Probe::new(format!("{a} ⊕ {b}"), false, format!("error: {e}"))]
        }
    };
    let top = rational::ceil_int(&c_max).try_into().unwrap_or(i64::MAX);
    let cs: Vec<Rational> = (0..20)
        .map(|_| random_positive_rational(rng, top, 12))
        .map(|c| if c > c_max { c_max.clone() } else { c })
        .collect();
    vec![thom_sebastiani_probe(&a, &b, &c_max), mustata_probe(&a, &b, &cs)]
}

fn artin_rees_summary(reports: &[ArtinReesReport]) -> (bool, String) {
    match reports.iter().find(|r| !r.holds()) {
        Some(r) => (false, r.to_string()),
        None => (true, format!("{} containments hold", reports.len())),
    }
}

fn theorem_3_1_probe(a: &MonomialIdeal, b: &MonomialIdeal, m: u32) -> Probe {
    Probe::run(format!("k = d for {a}, b = {b}, m = {m}"), || {
        let c_max = jumping::lct(a)? + int(1);
        Ok(artin_rees_summary(&artin_rees::theorem_3_1_check(
            a, b, m, &c_max,
        )?))
    })
}

/// The corollary at the `l`-th jump, `k = d l`, with `m` from `k` to `max_m`.
fn corollary_3_2_probe(a: &MonomialIdeal, b: &MonomialIdeal, l: usize, max_m: u32) -> Vec<Probe> {
    let run = || -> anyhow::Result<Vec<Probe>> {
        let h = Howald::new(a)?;
        let spec = h.jumps_upto(&(h.lct() + int(2)))?;
        let Some(c) = spec.jumps.get(l.min(spec.len()).max(1) - 1).cloned() else {
            return Ok(vec![Probe::skip(format!("k = d l for {a}"), "no jumps")]);
        };
        let k = artin_rees::corollary_k(a, &c)?;
        Ok((k.max(1)..=max_m.max(k))
            .map(|m| {
                Probe::run(
                    format!(
                        "k = d l = {k} for J({a}^{}), b = {b}, m = {m}",
                        format_rational(&c)
                    ),
                    || {
                        let r = artin_rees::corollary_3_2_check(a, &c, b, m)?;
                        Ok((r.holds(), r.to_string()))
                    },
                )
            })
            .collect())
    };
    run().unwrap_or_else(|e| {
        vec![Probe::new(
            format!("k = d l for {a}"),
            false,
            format!("error: {e:#}"),
        )]
    })
}

fn golden_artin_rees() -> Vec<Probe> {
    let st = golden_ideal("monomial/st.json");
    let m = MonomialIdeal::maximal(2);
    let mut probes = vec![Probe::run("(st), l = 1, k = 2, b = (s, t), m = 4", || {
        let r = artin_rees::corollary_3_2_check(&st, &int(1), &m, 4)?;
        Ok((r.holds() && r.k == 2, r.to_string()))
    })];
    probes.push(theorem_3_1_probe(
        &golden_ideal("monomial/s3t4.json"),
        &MonomialIdeal::diagonal(&[2, 3]).expect("valid"),
        5,
    ));
    probes.push(theorem_3_1_probe(&m, &golden_ideal("monomial/s3t4.json"), 4));
    probes.extend(corollary_3_2_probe(&golden_ideal("monomial/s3t4.json"), &m, 2, 6));
    probes
}

fn trial_artin_rees(rng: &mut ChaCha8Rng) -> Vec<Probe> {
    let d = rng.gen_range(1..=3);
    let shape = IdealShape {
        dimension: d,
        max_generators: 3,
        max_exponent: 4,
        finite_colength: false,
    };
    let a = random_ideal(rng, shape);
    let b = random_ideal(rng, shape);
    let du = d as u32;
    let mut probes = vec![theorem_3_1_probe(&a, &b, rng.gen_range(du..=8))];

    let l = rng.gen_range(1..=(8 / du) as usize);
    let m_cap = 8;
    let mut cor = corollary_3_2_probe(&a, &b, l, m_cap);
    // keep one m per instance: the exponent is drawn, not swept
    if cor.len() > 1 {
        let pick = rng.gen_range(0..cor.len());
        cor = vec![cor.swap_remove(pick)];
    }
    probes.extend(cor);

    // a monomial principal ideal (f), where J(f) = (f) and l(f) counts jumps <= 1
    let e: Exponent = (0..2).map(|_| rng.gen_range(0..=3)).collect();
    let e = if e.iter().all(|&x| x == 0) { vec![1, 0] } else { e };
    let f = MonomialIdeal::minimalize(vec![e], 2).expect("one generator");
    let b2 = random_ideal(
        rng,
        IdealShape {
            dimension: 2,
            ..shape
        },
    );
    probes.push(Probe::run(format!("principal {f}, b = {b2}"), || {
        let k = artin_rees::corollary_k(&f, &int(1))?;
        let m = k + rng.gen_range(0..=3);
        let r = artin_rees::corollary_3_2_check(&f, &int(1), &b2, m)?;
        Ok((r.holds(), r.to_string()))
    }));
    probes
}

fn semicontinuity_probe(
    label: &str,
    general: &MonomialIdeal,
    special: &MonomialIdeal,
    cutoff: &Rational,
) -> Probe {
    Probe::run(label, || {
        let kg = jumping::jumps_upto(general, cutoff)?
            .kappa_sequence()
            .context("general fiber needs finite colength")?;
        let ks = jumping::jumps_upto(special, cutoff)?
            .kappa_sequence()
            .context("special fiber needs finite colength")?;
        let ok = checks::semicontinuity_compare(&kg, &ks)?;
        Ok((
            ok,
            format!(
                "kappa_1: {} vs {}",
                ks.first().map_or("-".into(), format_rational),
                kg.first().map_or("-".into(), format_rational)
            ),
        ))
    })
}

fn golden_semicontinuity() -> Vec<Probe> {
    let general = golden_ideal("monomial/x3y3xy.json");
    let special = golden_ideal("monomial/x3y3.json");
    vec![
        semicontinuity_probe(
            "(x^3, y^3, t xy): special fiber below general",
            &general,
            &special,
            &int(2),
        ),
        semicontinuity_probe("identical sequences", &special, &special, &int(2)),
        Probe::run("negative control: a larger special kappa_1 is rejected", || {
            let kg = jumping::jumps_upto(&special, &int(2))?
                .kappa_sequence()
                .context("finite colength")?;
            let ks = jumping::jumps_upto(&general, &int(2))?
                .kappa_sequence()
                .context("finite colength")?;
            Ok((
                !checks::semicontinuity_compare(&kg, &ks)?,
                "verdict false as expected".into(),
            ))
        }),
    ]
}

fn trial_semicontinuity(rng: &mut ChaCha8Rng) -> Vec<Probe> {
    let d = rng.gen_range(1..=2);
    let special = random_ideal(
        rng,
        IdealShape {
            dimension: d,
            max_generators: 3,
            max_exponent: 5,
            finite_colength: true,
        },
    );
    let mut extra: Exponent = (0..d).map(|_| rng.gen_range(0..=4)).collect();
    if extra.iter().all(|&x| x == 0) {
        extra[rng.gen_range(0..d)] = 1;
    }
    let general = special
        .sum(&MonomialIdeal::minimalize(vec![extra], d).expect("one generator"))
        .expect("same dimension");
    vec![semicontinuity_probe(
        &format!("special {special}, general {general}"),
        &general,
        &special,
        &int(2),
    )]
}

fn thm_4_2_probe(a: &MonomialIdeal, m: usize, expected: Option<Thm42Case>) -> Probe {
    Probe::run(format!("Jac_{m}({a}) ⊆ J"), || {
        let r = jacobian::thm_4_2_check(a, m)?;
        let case_ok = expected.as_ref().is_none_or(|c| *c == r.case);
        Ok((
            r.passed() && case_ok,
            format!(
                "J = {}, height {}, case {:?}, {} minors, offending {:?}",
                r.multiplier_ideal,
                r.height.map_or("-".into(), |h| h.to_string()),
                r.case,
                r.minors.len(),
                r.offending_terms
            ),
        ))
    })
}

fn golden_thm_4_2() -> Vec<Probe> {
    vec![
        thm_4_2_probe(
            &golden_ideal("monomial/maxideal2.json"),
            2,
            Some(Thm42Case::Limit),
        ),
        thm_4_2_probe(&golden_ideal("monomial/s3t4.json"), 1, Some(Thm42Case::Strict)),
        thm_4_2_probe(&golden_ideal("monomial/st.json"), 1, Some(Thm42Case::Limit)),
        Probe::run("J((s^3, t^4)^1) = (s^2, st, t^2)", || {
            let j = jumping::multiplier_ideal(&golden_ideal("monomial/s3t4.json"), &int(1))?;
            Ok((j == MonomialIdeal::maximal(2).power(2)?, j.to_string()))
        }),
    ]
}

fn prop_3_8_probe(f: &SparsePolynomial, allow_assumed: bool) -> Probe {
    let label = format!("f = {f}");
    match hypersurface::nondegeneracy_check(f) {
        Ok(r) if r.status == NondegeneracyStatus::Refuted => {
            let face = r.first_failure().map(|x| x.face.clone()).unwrap_or_default();
            return Probe::skip(label, format!("degenerate on {face}"));
        }
        Ok(r) if r.status == NondegeneracyStatus::Assumed && !allow_assumed => {
            return Probe::skip(label, "nondegeneracy only sampled");
        }
        Err(e) => return Probe::new(label, false, format!("error: {e}")),
        Ok(_) => {}
    }
    Probe::run(label, || {
        let r = jacobian::prop_3_8_check(f, allow_assumed)?;
        Ok((
            r.passed(),
            format!(
                "l = {} <= tau + 1 = {}: {}; offending terms {:?}",
                r.jumping_length,
                r.tyurina + 1,
                r.length_bound_holds,
                r.offending_terms
            ),
        ))
    })
}

fn golden_prop_3_8() -> Vec<Probe> {
    let cusp = golden_poly("poly/s3t4.json");
    let mut probes = vec![prop_3_8_probe(&cusp, false)];
    probes.push(Probe::run("s^3 + t^4: tau = mu = 6, l = 4", || {
        let r = jacobian::prop_3_8_check(&cusp, false)?;
        let mu = jacobian::milnor(&cusp)?;
        Ok((
            r.tyurina == 6 && mu == 6 && r.jumping_length == 4,
            format!("tau {}, mu {mu}", r.tyurina),
        ))
    }));
    probes.push(Probe::run("s^3 + t^4: bounds (8, 8, 5)", || {
        let b = jacobian::ar_bounds(&cusp, false)?;
        Ok((
            (b.dl, b.tau_plus_d, b.half_mu_plus_d) == (8, 8, Some(5)),
            format!("({}, {}, {:?})", b.dl, b.tau_plus_d, b.half_mu_plus_d),
        ))
    }));
    probes.push(prop_3_8_probe(&golden_poly("poly/x2y3.json"), false));
    probes.push(prop_3_8_probe(&golden_poly("poly/saito.json"), false));
    probes
}

fn binomial(a: u32, b: u32) -> SparsePolynomial {
    SparsePolynomial::from_terms(2, [(vec![a, 0], int(1)), (vec![0, b], int(1))]).expect("two variables")
}

fn trial_prop_3_8(rng: &mut ChaCha8Rng) -> Vec<Probe> {
    let (p, q) = (rng.gen_range(2..=6u32), rng.gen_range(2..=6u32));
    let coeff = |rng: &mut ChaCha8Rng| {
        let c = rng.gen_range(1..=5);
        int(if rng.gen_bool(0.5) { c } else { -c })
    };
    let mut terms = vec![(vec![p, 0], coeff(rng)), (vec![0, q], coeff(rng))];
    for _ in 0..rng.gen_range(0..=1) {
        let (i, j) = (rng.gen_range(1..=p), rng.gen_range(1..=q));
        // on or above the segment from (p, 0) to (0, q)
        if i * q + j * p >= p * q {
            terms.push((vec![i, j], coeff(rng)));
        }
    }
    match SparsePolynomial::from_terms(2, terms) {
        Ok(f) => vec![prop_3_8_probe(&f, false)],
        Err(e) => vec![Probe::new("random polynomial", false, format!("error: {e}"))],
    }
}

fn diagonal_probes(family: &DiagonalFamily) -> Vec<Probe> {
    let label = format!("weights {}", family_label(family));
    let mut probes = vec![Probe::run(format!("gaps of {label}"), || {
        let lct = family.lct()?;
        let stream = graded::diagonal_jumps(family, &(&lct * int(2) + int(1)))?;
        let r = graded::prop_5_8_check(&stream, &lct, &Rational::from_integer(0.into()));
        Ok((
            r.passed() && r.eligible > 0,
            format!("{} eligible, violations {}", r.eligible, list(&r.violations)),
        ))
    })];
    probes.push(Probe::run(
        format!("membership flips at each jump of {label}"),
        || {
            let lct = family.lct()?;
            let stream = graded::diagonal_jumps(family, &(&lct + int(1)))?;
            let shrink = rat(999_999, 1_000_000);
            let mut bad = Vec::new();
            for j in stream.jumps.iter().take(12) {
                for v in &j.params {
                    let before = graded::diagonal_member(family, v, &(&j.value * &shrink))?;
                    let at = graded::diagonal_member(family, v, &j.value)?;
                    if before != Membership::Member || at != Membership::NotMember {
                        bad.push(j.value.clone());
                    }
                }
            }
            Ok((bad.is_empty(), format!("failures {}", list(&bad))))
        },
    ));
    probes
}

fn family_label(family: &DiagonalFamily) -> String {
    let parts: Vec<String> = family.mu().iter().map(|m| format_rational(&m.value)).collect();
    format!("({})", parts.join(", "))
}

fn golden_graded() -> Vec<Probe> {
    let mut probes = vec![
        Probe::new(
            "hyperbola lct",
            graded::hyperbola_lct() == rat(1, 2),
            format_rational(&graded::hyperbola_lct()),
        ),
        Probe::new(
            "hyperbola value 2 at (e, f) = (5, 2)",
            graded::hyperbola_value(5, 2) == int(2),
            format_rational(&graded::hyperbola_value(5, 2)),
        ),
    ];
    for n in 1..=5u32 {
        let found = graded::integer_occurrence(n, n * n + n);
        let ok = found.is_some_and(|(e, f)| graded::hyperbola_value(e, f) == int(n as i64));
        probes.push(Probe::new(
            format!("integer {n} occurs"),
            ok,
            format!("{found:?}"),
        ));
    }
    for n in 1..=2 {
        probes.push(Probe::run(
            format!("left cluster at {n} grows from E = 20 to 40"),
            || {
                let r = graded::cluster_diagnostics(20, n, &rat(1, 10))?;
                Ok((r.passed(), format!("left {:?}, right {:?}", r.left, r.right)))
            },
        ));
    }
    probes.push(Probe::run(
        "hyperbola gaps bounded by the lct (E = 50, c <= 4)",
        || {
            let s = graded::hyperbola_jumps(50, &int(4))?;
            let r = graded::prop_5_8_check(&s, &graded::hyperbola_lct(), &rat(1, 2));
            Ok((r.passed() && r.eligible > 0, format!("{} eligible", r.eligible)))
        },
    ));
    let demo = |path: &str, xi: Rational, direction: Direction| {
        let family = match io::parse_family(cases::get(path)).expect("golden family parses") {
            FamilySpec::Diagonal(f) => f,
            FamilySpec::Hyperbola => unreachable!("diagonal case"),
        };
        Probe::run(
            format!("nonperiodicity of {}", family_label(&family)),
            move || {
                let v = graded::nonperiodicity_demo(&family)?;
                let ok = matches!(&v, NonperiodicityVerdict::Witness { xi: w, direction: d, .. } if *w == xi && *d == direction);
                Ok((ok, format!("{v:?}")))
            },
        )
    };
    probes.push(demo("families/mu_3_2.json", rat(2, 3), Direction::Forward));
    probes.push(demo("families/mu_5_2_1.json", rat(6, 5), Direction::Backward));
    probes
}

fn trial_graded(rng: &mut ChaCha8Rng) -> Vec<Probe> {
    let d = rng.gen_range(1..=2);
    let mu: Vec<Rational> = (0..d).map(|_| random_positive_rational(rng, 3, 4)).collect();
    let family = match DiagonalFamily::exact(&mu) {
        Ok(f) => f,
        Err(e) => return vec![Probe::new("random family", false, format!("error: {e}"))],
    };
    let bumped: Vec<Rational> = mu.iter().map(|m| m + rat(rng.gen_range(0..=4), 4)).collect();
    let mut probes = diagonal_probes(&family);
    probes.push(Probe::run(
        format!("semicontinuity {} below {}", list(&bumped), list(&mu)),
        || {
            let special = DiagonalFamily::exact(&bumped)?;
            let cutoff = family.lct()? + int(1);
            let kg = graded::diagonal_jumps(&family, &cutoff)?.kappa_sequence();
            let ks = graded::diagonal_jumps(&special, &cutoff)?.kappa_sequence();
            Ok((
                checks::semicontinuity_compare(&kg, &ks)?,
                format!("{} vs {} values", ks.len(), kg.len()),
            ))
        },
    ));
    probes
}

/// Roots in `[-1, 0)` of the Bernstein-Sato polynomial of `x^a + y^b`:
/// `-(i/a + j/b)` for `0 < i < a`, `0 < j < b` in that range, and `-1`.
fn quasi_homogeneous_roots(a: u32, b: u32) -> Vec<Rational> {
    let mut roots = vec![int(-1)];
    for i in 1..a {
        for j in 1..b {
            roots.push(-(rat(i as i64, a as i64) + rat(j as i64, b as i64)));
        }
    }
    roots
}

fn bs_probe(label: &str, f: &SparsePolynomial, raw: Vec<Rational>) -> Probe {
    Probe::run(format!("roots for {label}"), || {
        let (roots, dropped) = RootList::from_input(raw)?;
        let spectrum = hypersurface::divisor_jumps(f, &int(1), true)?;
        let jumps = spectrum.jumps.clone();
        ensure!(!jumps.is_empty(), "no jumps in (0, 1]");
        let contained = bernstein::thm_2_1_check(&jumps, &roots)?;
        let spacing = bernstein::cor_2_4_check(&roots);
        let largest = bernstein::largest_root_check(&jumps[0], &roots)?;
        let mut detail = format!(
            "{} jumps, {} roots; missing {}; spacing violations {:?}/{:?}; largest root is -lct: {largest}",
            jumps.len(),
            roots.roots().len(),
            list(&contained.missing),
            spacing.step_violations,
            spacing.chain_violations
        );
        if !dropped.is_empty() {
            let _ = write!(detail, "; ignored roots outside [-1, 0): {}", list(&dropped));
        }
        Ok((contained.passed() && spacing.passed() && largest, detail))
    })
}

fn golden_bs() -> Vec<Probe> {
    let mut probes = Vec::new();
    for path in ["roots/s3t4_roots.json", "roots/s3t4_extra_roots.json"] {
        let text = cases::get(path);
        let doc: serde_json::Value = serde_json::from_str(text).expect("golden roots parse");
        let f = io::parse_polynomial(&doc["polynomial"].to_string()).expect("golden polynomial parses");
        probes.push(bs_probe(
            path,
            &f,
            io::parse_roots(text).expect("golden roots parse"),
        ));
    }
    probes.push(Probe::run("a missing root is reported", || {
        let f = golden_poly("poly/s3t4.json");
        let roots = RootList::new(vec![rat(-7, 12), rat(-11, 12), int(-1)])?;
        let jumps = hypersurface::divisor_jumps(&f, &int(1), false)?.jumps;
        let r = bernstein::thm_2_1_check(&jumps, &roots)?;
        Ok((
            r.missing == vec![rat(-5, 6)],
            format!("missing {}", list(&r.missing)),
        ))
    }));
    probes
}
