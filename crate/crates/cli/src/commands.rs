use std::fmt::Write;
use std::path::Path;

use anyhow::{bail, Context};
use jumpcoef::graded::{
    self, ClusterReport, DiagonalFamily, GradedJumpStream, NonperiodicityVerdict, Prop58Report,
};
use jumpcoef::hypersurface::{self, NondegeneracyStatus};
use jumpcoef::io::{self, FamilySpec, SpectrumReport};
use jumpcoef::jacobian::{self, ArBounds, Thm42Report};
use jumpcoef::jumping::Howald;
use jumpcoef::rational::{self, format_rational, Rational};
use jumpcoef::{MonomialIdeal, SparsePolynomial};
use serde::Serialize;

use crate::report::{render, Format, Outcome, Report};
use crate::suites;
use crate::svg::{self, Ruler};
use crate::{JacobianArgs, JumpsArgs, Plot, PolyArgs, VerifyArgs};

pub(crate) fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub(crate) fn read_ideal(path: &Path) -> anyhow::Result<MonomialIdeal> {
    io::parse_ideal(&read(path)?).with_context(|| format!("in {}", path.display()))
}

pub(crate) fn read_polynomial(path: &Path) -> anyhow::Result<SparsePolynomial> {
    io::parse_polynomial(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn parse_value(flag: &str, s: &str) -> anyhow::Result<Rational> {
    rational::parse_rational(s).with_context(|| format!("--{flag} {s:?} is not a rational"))
}

fn join(values: &[Rational], sep: &str) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(sep)
}

fn format_for(plot: Option<Plot>, format: Format) -> Format {
    match plot {
        Some(Plot::Svg) => Format::Svg,
        Some(Plot::Csv) => Format::Csv,
        None => format,
    }
}

#[derive(Debug, Serialize)]
pub struct PolySpectrum {
    pub polynomial: String,
    pub nondegeneracy: NondegeneracyStatus,
    pub term_ideal_hash: String,
    #[serde(with = "rational::serde_str")]
    pub cutoff: Rational,
    #[serde(with = "rational::serde_vec")]
    pub fractional_jumps: Vec<Rational>,
    pub jumps: Vec<(String, Option<u64>)>,
    pub jumping_length: usize,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Spectrum {
    Monomial {
        #[serde(with = "rational::serde_str")]
        lct: Rational,
        #[serde(flatten)]
        report: SpectrumReport,
    },
    Poly(PolySpectrum),
}

#[derive(Debug, Serialize)]
pub struct SpectrumEntry {
    pub input: String,
    #[serde(flatten)]
    pub spectrum: Spectrum,
}

impl SpectrumEntry {
    fn label(&self) -> String {
        match &self.spectrum {
            Spectrum::Monomial { report, .. } => report.ideal.clone(),
            Spectrum::Poly(p) => format!("f = {}", p.polynomial),
        }
    }

    fn cutoff(&self) -> &Rational {
        match &self.spectrum {
            Spectrum::Monomial { report, .. } => &report.cutoff,
            Spectrum::Poly(p) => &p.cutoff,
        }
    }

    fn jumps(&self) -> &[(String, Option<u64>)] {
        match &self.spectrum {
            Spectrum::Monomial { report, .. } => &report.jumps,
            Spectrum::Poly(p) => &p.jumps,
        }
    }

    fn values(&self) -> Vec<Rational> {
        self.jumps()
            .iter()
            .map(|(s, _)| rational::parse_rational(s).expect("formatted by this crate"))
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct JumpsReport {
    pub spectra: Vec<SpectrumEntry>,
}

impl Report for JumpsReport {
    const COMMAND: &'static str = "jumps";

    fn text(&self) -> String {
        let mut out = String::new();
        for (k, e) in self.spectra.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            let values = e.values();
            match &e.spectrum {
                Spectrum::Monomial { lct, report } => {
                    let _ = writeln!(out, "{}  [{}]", report.ideal, report.ideal_hash);
                    let _ = writeln!(out, "lct = {}", format_rational(lct));
                    let _ = writeln!(
                        out,
                        "witness box {:?}, uniform bound {}",
                        report.witness_box, report.uniform_box_bound
                    );
                    let _ = writeln!(
                        out,
                        "jumps <= {}: {}",
                        format_rational(&report.cutoff),
                        join(&values, " ")
                    );
                }
                Spectrum::Poly(p) => {
                    let _ = writeln!(out, "f = {}  (nondegeneracy {:?})", p.polynomial, p.nondegeneracy);
                    let _ = writeln!(out, "{}, length {}", join(&values, " "), p.jumping_length);
                }
            }
            if e.jumps().iter().any(|(_, m)| m.is_some()) {
                out.push_str("jump  multiplicity  colength\n");
                let mut total = 0;
                let mut kappa = Vec::new();
                for (v, m) in e.jumps() {
                    match m {
                        Some(m) => {
                            total += m;
                            kappa.extend(std::iter::repeat_n(v.clone(), *m as usize));
                            let _ = writeln!(out, "{v}  {m}  {total}");
                        }
                        None => {
                            let _ = writeln!(out, "{v}  -  -");
                        }
                    }
                }
                let _ = writeln!(out, "kappa: {}", kappa.join(", "));
            }
        }
        out
    }

    fn csv(&self) -> Option<String> {
        let many = self.spectra.len() > 1;
        let mut out = String::from(if many {
            "input,value,multiplicity\n"
        } else {
            "value,multiplicity\n"
        });
        for e in &self.spectra {
            for (v, m) in e.jumps() {
                let m = m.map(|m| m.to_string()).unwrap_or_default();
                if many {
                    let _ = writeln!(out, "{},{v},{m}", e.input);
                } else {
                    let _ = writeln!(out, "{v},{m}");
                }
            }
        }
        Some(out)
    }

    fn svg(&self) -> Option<String> {
        let rulers: Vec<Ruler> = self
            .spectra
            .iter()
            .map(|e| Ruler {
                label: e.label(),
                cutoff: e.cutoff().clone(),
                ticks: e.values(),
            })
            .collect();
        Some(svg::render(&rulers))
    }
}

pub fn monomial_spectrum(
    input: &str,
    ideal: &MonomialIdeal,
    c_max: &Rational,
    multiplicities: bool,
) -> anyhow::Result<SpectrumEntry> {
    let h = Howald::new(ideal)?;
    let mut spectrum = h.jumps_upto(c_max)?;
    if !multiplicities {
        spectrum.multiplicities = None;
    }
    let report = SpectrumReport::new(ideal, &spectrum, h.uniform_box_bound(c_max)?);
    Ok(SpectrumEntry {
        input: input.to_string(),
        spectrum: Spectrum::Monomial { lct: h.lct(), report },
    })
}

pub fn poly_spectrum(
    input: &str,
    f: &SparsePolynomial,
    c_max: &Rational,
    multiplicities: bool,
    allow_assumed: bool,
) -> anyhow::Result<SpectrumEntry> {
    let status = hypersurface::require_nondegenerate(f, allow_assumed)?.status;
    let divisor = hypersurface::divisor_jumps(f, c_max, allow_assumed)?;
    let counted = if multiplicities && *c_max <= Rational::from_integer(1.into()) {
        Some(hypersurface::divisor_multiplicities(f, c_max, allow_assumed)?)
    } else {
        None
    };
    let jumps = divisor
        .jumps
        .iter()
        .map(|x| {
            let m = counted.as_ref().and_then(|s| {
                let k = s.jumps.iter().position(|y| y == x)?;
                s.multiplicities.as_ref().map(|m| m[k])
            });
            (format_rational(x), m)
        })
        .collect();
    Ok(SpectrumEntry {
        input: input.to_string(),
        spectrum: Spectrum::Poly(PolySpectrum {
            polynomial: f.to_string(),
            nondegeneracy: status,
            term_ideal_hash: io::ideal_hash(&hypersurface::term_ideal(f)?),
            cutoff: divisor.cutoff,
            fractional_jumps: divisor.fractional_jumps,
            jumps,
            jumping_length: divisor.jumping_length,
        }),
    })
}

pub fn jumps_monomial(args: &JumpsArgs, format: Format) -> anyhow::Result<Outcome> {
    let c_max = parse_value("max", &args.max)?;
    let spectra = args
        .inputs
        .iter()
        .map(|p| {
            monomial_spectrum(
                &p.display().to_string(),
                &read_ideal(p)?,
                &c_max,
                args.multiplicities,
            )
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    render(&JumpsReport { spectra }, format_for(args.plot, format))
}

pub fn jumps_poly(args: &JumpsArgs, allow_assumed: bool, format: Format) -> anyhow::Result<Outcome> {
    let c_max = parse_value("max", &args.max)?;
    let spectra = args
        .inputs
        .iter()
        .map(|p| {
            poly_spectrum(
                &p.display().to_string(),
                &read_polynomial(p)?,
                &c_max,
                args.multiplicities,
                allow_assumed,
            )
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    render(&JumpsReport { spectra }, format_for(args.plot, format))
}

pub fn verify(args: &VerifyArgs, format: Format) -> anyhow::Result<Outcome> {
    let report = suites::run_suite(
        args.suite,
        &suites::SuiteOptions {
            trials: args.trials,
            seed: args.seed,
            only_trial: args.trial,
            input: args.input.clone(),
        },
    )?;
    render(&report, format)
}

#[derive(Debug, Serialize)]
pub struct HyperbolaReport {
    #[serde(with = "rational::serde_str")]
    pub lct: Rational,
    pub stream: GradedJumpStream,
    /// `(n, (e, f))` for each integer `n <= max` realized in the window.
    pub integer_occurrences: Vec<(u32, Option<(u32, u32)>)>,
    pub clusters: Vec<ClusterReport>,
}

impl Report for HyperbolaReport {
    const COMMAND: &'static str = "graded";

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "hyperbola family, window e, f <= {}", self.stream.window[0]);
        let _ = writeln!(out, "lct = {}", format_rational(&self.lct));
        let _ = writeln!(
            out,
            "{} distinct jumps <= {}",
            self.stream.jumps.len(),
            format_rational(&self.stream.cutoff)
        );
        for (n, at) in &self.integer_occurrences {
            match at {
                Some((e, f)) => {
                    let _ = writeln!(out, "value {n} at (e, f) = ({e}, {f})");
                }
                None => {
                    let _ = writeln!(out, "value {n} not reached in the window");
                }
            }
        }
        for c in &self.clusters {
            let stable = match c.right_stable() {
                Some(true) => "stable".to_string(),
                Some(false) => "NOT stable".to_string(),
                None => format!("not yet checked (threshold {})", c.right_threshold),
            };
            let _ = writeln!(
                out,
                "cluster at n = {}: left ({}, {}) {}, right ({}, {}) {}",
                c.n,
                c.left.0,
                c.left.1,
                if c.left_grows() { "grows" } else { "does NOT grow" },
                c.right.0,
                c.right.1,
                stable
            );
        }
        out
    }

    fn csv(&self) -> Option<String> {
        Some(stream_csv(&self.stream))
    }

    fn success(&self) -> bool {
        self.clusters.iter().all(ClusterReport::passed)
    }
}

fn stream_csv(stream: &GradedJumpStream) -> String {
    let mut out = String::from("value,multiplicity,radius\n");
    for j in &stream.jumps {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_rational(&j.value),
            j.multiplicity(),
            format_rational(&j.radius)
        );
    }
    out
}

pub fn graded_hyperbola(
    window: u32,
    max: &str,
    clusters: u32,
    epsilon: &str,
    format: Format,
) -> anyhow::Result<Outcome> {
    let c_max = parse_value("max", max)?;
    let epsilon = parse_value("epsilon", epsilon)?;
    let stream = graded::hyperbola_jumps(window, &c_max)?;
    let top = rational::floor_int(&c_max);
    let top = u32::try_from(top).unwrap_or(0);
    let integer_occurrences = (1..=top)
        .map(|n| (n, graded::integer_occurrence(n, window)))
        .collect();
    let clusters = (1..=clusters)
        .map(|n| graded::cluster_diagnostics(window, n, &epsilon))
        .collect::<Result<Vec<_>, _>>()?;
    render(
        &HyperbolaReport {
            lct: graded::hyperbola_lct(),
            stream,
            integer_occurrences,
            clusters,
        },
        format,
    )
}

#[derive(Debug, Serialize)]
pub struct DiagonalReport {
    pub family: DiagonalFamily,
    #[serde(with = "rational::serde_str")]
    pub lct: Rational,
    pub stream: GradedJumpStream,
    pub nonperiodicity: Option<NonperiodicityVerdict>,
    pub gaps: Prop58Report,
}

impl Report for DiagonalReport {
    const COMMAND: &'static str = "graded";

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.stream.family);
        let _ = writeln!(out, "lct = {}", format_rational(&self.lct));
        let values: Vec<String> = self
            .stream
            .jumps
            .iter()
            .map(|j| {
                if j.radius == Rational::from_integer(0.into()) {
                    format_rational(&j.value)
                } else {
                    format!("{}±{}", format_rational(&j.value), format_rational(&j.radius))
                }
            })
            .collect();
        let _ = writeln!(
            out,
            "jumps <= {}: {}",
            format_rational(&self.stream.cutoff),
            values.join(" ")
        );
        match &self.nonperiodicity {
            Some(NonperiodicityVerdict::Witness { xi, direction, .. }) => {
                let _ = writeln!(
                    out,
                    "nonperiodicity witness {} ({direction:?})",
                    format_rational(xi)
                );
            }
            Some(NonperiodicityVerdict::NoWitnessInWindow { window }) => {
                let _ = writeln!(out, "no nonperiodicity witness up to {}", format_rational(window));
            }
            Some(NonperiodicityVerdict::NotApplicable) => {
                out.push_str("integral weights: periodic from d - 1 on\n");
            }
            None => out.push_str("nonperiodicity needs exact weights\n"),
        }
        let _ = writeln!(
            out,
            "gap check: {} eligible, {} violations",
            self.gaps.eligible,
            self.gaps.violations.len()
        );
        out
    }

    fn csv(&self) -> Option<String> {
        Some(stream_csv(&self.stream))
    }

    fn success(&self) -> bool {
        self.gaps.passed()
    }
}

pub fn graded_diagonal(input: &Path, max: &str, format: Format) -> anyhow::Result<Outcome> {
    let c_max = parse_value("max", max)?;
    let family = match io::parse_family(&read(input)?).with_context(|| format!("in {}", input.display()))? {
        FamilySpec::Diagonal(f) => f,
        FamilySpec::Hyperbola => bail!(
            "{} describes the hyperbola family; use `graded hyperbola`",
            input.display()
        ),
    };
    let stream = graded::diagonal_jumps(&family, &c_max)?;
    let (lct, nonperiodicity) = if family.is_exact() {
        (family.lct()?, Some(graded::nonperiodicity_demo(&family)?))
    } else {
        (
            stream.jumps.first().map(|j| j.value.clone()).unwrap_or_default(),
            None,
        )
    };
    let gaps = graded::prop_5_8_check(&stream, &lct, &Rational::from_integer(0.into()));
    render(
        &DiagonalReport {
            family,
            lct,
            stream,
            nonperiodicity,
            gaps,
        },
        format,
    )
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum JacobianReport {
    Poly {
        polynomial: String,
        jacobian_ideal: Vec<String>,
        tyurina: u64,
        milnor: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        minors: Option<Vec<String>>,
    },
    Ideal {
        ideal: String,
        #[serde(flatten)]
        check: Thm42Report,
        #[serde(skip_serializing_if = "Option::is_none")]
        minors: Option<Vec<String>>,
    },
}

impl Report for JacobianReport {
    const COMMAND: &'static str = "jacobian";

    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            JacobianReport::Poly {
                polynomial,
                jacobian_ideal,
                tyurina,
                milnor,
                minors,
            } => {
                let _ = writeln!(out, "f = {polynomial}");
                let _ = writeln!(out, "Jac(f) = ({})", jacobian_ideal.join(", "));
                let _ = writeln!(out, "tau = {tyurina}, mu = {milnor}");
                if let Some(minors) = minors {
                    for p in minors {
                        let _ = writeln!(out, "minor: {p}");
                    }
                }
            }
            JacobianReport::Ideal { ideal, check, minors } => {
                let _ = writeln!(out, "a = {ideal}, m = {}", check.m);
                let _ = writeln!(out, "J(a^{}) = {}", check.m, check.multiplier_ideal);
                let _ = writeln!(
                    out,
                    "case {:?}, height {}",
                    check.case,
                    check.height.map_or("-".to_string(), |h| h.to_string())
                );
                if let Some(minors) = minors {
                    for p in minors {
                        let _ = writeln!(out, "minor: {p}");
                    }
                }
                if check.passed() {
                    out.push_str("inclusion holds\n");
                } else {
                    let _ = writeln!(out, "inclusion FAILS at terms {:?}", check.offending_terms);
                }
            }
        }
        out
    }

    fn success(&self) -> bool {
        match self {
            JacobianReport::Poly { .. } => true,
            JacobianReport::Ideal { check, .. } => check.passed(),
        }
    }
}

pub fn jacobian(args: &JacobianArgs, format: Format) -> anyhow::Result<Outcome> {
    let text = read(&args.input)?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("in {}", args.input.display()))?;
    let report = if doc.get("terms").is_some() {
        let f = io::parse_polynomial(&text).with_context(|| format!("in {}", args.input.display()))?;
        let minors = args
            .emit_minors
            .then(|| jacobian::jac_m(std::slice::from_ref(&f), 1))
            .transpose()?
            .map(|ps| ps.iter().map(ToString::to_string).collect());
        JacobianReport::Poly {
            polynomial: f.to_string(),
            jacobian_ideal: jacobian::jacobian_ideal(&f)
                .iter()
                .map(ToString::to_string)
                .collect(),
            tyurina: jacobian::tyurina(&f)?,
            milnor: jacobian::milnor(&f)?,
            minors,
        }
    } else {
        let ideal = io::parse_ideal(&text).with_context(|| format!("in {}", args.input.display()))?;
        let check = jacobian::thm_4_2_check(&ideal, args.m)?;
        let minors = args
            .emit_minors
            .then(|| check.minors.iter().map(ToString::to_string).collect());
        JacobianReport::Ideal {
            ideal: ideal.to_string(),
            check,
            minors,
        }
    };
    render(&report, format)
}

#[derive(Debug, Serialize)]
pub struct BoundsReport {
    pub polynomial: String,
    #[serde(flatten)]
    pub bounds: ArBounds,
}

impl Report for BoundsReport {
    const COMMAND: &'static str = "bounds";

    fn text(&self) -> String {
        let b = &self.bounds;
        let half = match b.half_mu_plus_d {
            Some(v) if b.rounded => format!("{v} (mu odd, rounded up)"),
            Some(v) => v.to_string(),
            None => "n/a".to_string(),
        };
        format!(
            "f = {}\nl = {}, tau = {}, mu = {}\nd·ℓ = {}, τ+d = {}, ⌈μ/2⌉+d = {}\n",
            self.polynomial, b.jumping_length, b.tyurina, b.milnor, b.dl, b.tau_plus_d, half
        )
    }
}

pub fn bounds(args: &PolyArgs, format: Format) -> anyhow::Result<Outcome> {
    let f = read_polynomial(&args.input)?;
    let bounds = jacobian::ar_bounds(&f, args.allow_assumed)?;
    render(
        &BoundsReport {
            polynomial: f.to_string(),
            bounds,
        },
        format,
    )
}
