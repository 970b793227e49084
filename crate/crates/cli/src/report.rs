//! End-to-end analysis pipeline and report rendering.

use std::collections::BTreeMap;

use mixedtori::criteria::{
    assemble_verdict, count_criterion, fast_criterion, general_criterion, CriterionOutcome,
    Essentiality, Verdict,
};
use mixedtori::newton::{is_convenient, newton_boundary, support, LatticePoint, NewtonBoundary};
use mixedtori::torus_check::full_hypothesis_report;
use mixedtori::winding::{multiplicity_table, winding_profile, MultiplicityTable, WindingProfile};
use mixedtori::{AnalysisConfig, Error, MixedPolynomial};

use crate::docvalue::Doc;

/// How a run should terminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    /// Analysis completed (whatever the verdict).
    Success,
    /// Malformed input.
    InputError,
    /// The polynomial violates the hypotheses the analysis needs.
    HypothesisViolation,
}

impl ExitClass {
    pub fn code(&self) -> i32 {
        match self {
            ExitClass::Success => 0,
            ExitClass::InputError => 1,
            ExitClass::HypothesisViolation => 2,
        }
    }
}

/// A machine-readable error record attached to the report.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

impl ErrorRecord {
    fn from_error(e: &Error) -> Self {
        let kind = match e {
            Error::Syntax { .. } => "syntax-error",
            Error::NonzeroConstantTerm => "nonzero-constant-term",
            Error::NegativeExponent { .. } => "negative-exponent",
            Error::EmptySupport => "empty-support",
            Error::NotConvenient => "not-convenient",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NotHomogeneous { .. } => "not-homogeneous",
            Error::RootOnUnitCircle { .. } => "root-on-unit-circle",
            Error::RootFindingFailed(_) => "root-finding-failed",
            Error::VanishesOnCircle { .. } => "vanishes-on-circle",
            Error::AliasingSuspected { .. } => "aliasing-suspected",
            Error::InconsistentAcrossAngles { .. } => "inconsistent-across-angles",
            Error::DegenerateAngles { .. } => "degenerate-angles",
            Error::AtVertex { .. } => "vertex-analysis-failed",
            Error::NotARoot(_) => "not-a-root",
            Error::IndeterminateSign => "indeterminate-sign",
            Error::InvalidSpec(_) => "invalid-spec",
        };
        ErrorRecord {
            kind: kind.to_string(),
            message: e.to_string(),
        }
    }
}

/// Everything one `analyze` run produced. Fields fill in pipeline order;
/// a failed stage leaves the later ones empty and records the error.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub input: String,
    pub version: String,
    pub cfg: AnalysisConfig,
    pub parsed: Option<String>,
    pub support: Vec<LatticePoint>,
    pub boundary: Option<NewtonBoundary>,
    pub convenient: Option<bool>,
    pub table: Option<MultiplicityTable>,
    pub profile: Option<WindingProfile>,
    pub verdict: Option<Verdict>,
    pub errors: Vec<ErrorRecord>,
}

/// Result of one analysis run: the (possibly partial) report plus the
/// exit classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub report: Report,
    pub exit: ExitClass,
}

/// Runs the full pipeline on one polynomial text. Hypothesis checks never
/// block the criterion arithmetic; they decide only the exit class and
/// the caveats.
pub fn analyze(input: &str, cfg: &AnalysisConfig) -> Analysis {
    let mut report = Report {
        input: input.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        cfg: cfg.clone(),
        parsed: None,
        support: Vec::new(),
        boundary: None,
        convenient: None,
        table: None,
        profile: None,
        verdict: None,
        errors: Vec::new(),
    };

    let p = match MixedPolynomial::parse(input) {
        Ok(p) => p,
        Err(e) => {
            report.errors.push(ErrorRecord::from_error(&e));
            return Analysis {
                report,
                exit: ExitClass::InputError,
            };
        }
    };
    report.parsed = Some(p.to_string());

    let supp = support(&p);
    report.support = supp.iter().copied().collect();
    let b = match newton_boundary(&supp) {
        Ok(b) => b,
        Err(e) => {
            report.errors.push(ErrorRecord::from_error(&e));
            return Analysis {
                report,
                exit: ExitClass::InputError,
            };
        }
    };
    report.convenient = Some(is_convenient(&b));
    report.boundary = Some(b.clone());

    let hyp = full_hypothesis_report(&p, &b, cfg);
    let violated = hyp.any_violation();

    let mut exit = ExitClass::Success;
    match multiplicity_table(&p, &b, cfg) {
        Ok(tab) => {
            let prof = winding_profile(&tab);
            let mut outcomes: Vec<CriterionOutcome> = vec![fast_criterion(&tab)];
            outcomes.extend(general_criterion(&tab, &prof));
            outcomes.push(count_criterion(&prof));
            let verdict = assemble_verdict(&tab, &prof, outcomes, hyp);
            report.table = Some(tab);
            report.profile = Some(prof);
            report.verdict = Some(verdict);
        }
        Err(e) => {
            report.errors.push(ErrorRecord::from_error(&e));
            exit = if e.is_hypothesis_violation() {
                ExitClass::HypothesisViolation
            } else {
                ExitClass::InputError
            };
            // Keep the hypothesis data visible even without a table.
            report.verdict = Some(assemble_verdict_stub(hyp));
        }
    }

    if violated && exit == ExitClass::Success {
        report.errors.push(ErrorRecord {
            kind: "hypothesis-violation".to_string(),
            message:
                "a nonvanishing or non-degeneracy check found a witness; see the hypothesis report"
                    .to_string(),
        });
        exit = ExitClass::HypothesisViolation;
    }
    Analysis { report, exit }
}

fn assemble_verdict_stub(hyp: mixedtori::HypothesisReport) -> Verdict {
    let caveats = hyp.caveats();
    Verdict {
        per_torus: BTreeMap::new(),
        non_hyperbolic: mixedtori::criteria::YesUnknown::Unknown,
        reducible_or_toroidal: mixedtori::criteria::YesUnknown::Unknown,
        outcomes: Vec::new(),
        hypothesis: hyp,
        caveats,
    }
}

fn point_doc(p: &LatticePoint) -> Doc {
    Doc::list([Doc::Int(p.x), Doc::Int(p.y)])
}

fn ints(values: impl IntoIterator<Item = i64>) -> Doc {
    Doc::list(values.into_iter().map(Doc::Int))
}

impl Report {
    /// Structured form, schema `mixedtori/1`.
    pub fn to_doc(&self) -> Doc {
        let mut root: BTreeMap<String, Doc> = BTreeMap::new();
        root.insert("schema".into(), Doc::str("mixedtori/1"));
        root.insert("version".into(), Doc::str(&self.version));
        root.insert("input".into(), Doc::str(&self.input));
        root.insert(
            "config".into(),
            Doc::map([
                ("grid", Doc::Int(self.cfg.grid as i64)),
                ("t_samples", Doc::Int(self.cfg.t_samples as i64)),
                ("oracle_samples", Doc::Int(self.cfg.oracle_samples as i64)),
                ("spot_angles", Doc::Int(self.cfg.spot_angles as i64)),
                ("root_grid_radii", Doc::Int(self.cfg.root_grid_radii as i64)),
                (
                    "root_grid_angles",
                    Doc::Int(self.cfg.root_grid_angles as i64),
                ),
                ("tol_zero", Doc::Real(self.cfg.tol_zero)),
                ("tol_unit", Doc::Real(self.cfg.tol_unit)),
                ("tol_vanish", Doc::Real(self.cfg.tol_vanish)),
                ("tol_residual", Doc::Real(self.cfg.tol_residual)),
                ("tol_root", Doc::Real(self.cfg.tol_root)),
                ("tol_sign", Doc::Real(self.cfg.tol_sign)),
                ("tol_rank", Doc::Real(self.cfg.tol_rank)),
            ]),
        );
        if let Some(parsed) = &self.parsed {
            root.insert("parsed".into(), Doc::str(parsed));
        }
        if !self.support.is_empty() {
            root.insert(
                "support".into(),
                Doc::list(self.support.iter().map(point_doc)),
            );
        }
        if let Some(b) = &self.boundary {
            let faces = b.faces.iter().enumerate().map(|(i, f)| {
                Doc::map([
                    ("index", Doc::Int(i as i64 + 1)),
                    ("start", point_doc(&f.start)),
                    ("end", point_doc(&f.end)),
                    ("points", Doc::list(f.points.iter().map(point_doc))),
                ])
            });
            root.insert(
                "boundary".into(),
                Doc::map([
                    ("vertices", Doc::list(b.vertices.iter().map(point_doc))),
                    ("faces", Doc::list(faces)),
                ]),
            );
        }
        if let Some(c) = self.convenient {
            root.insert("convenient".into(), Doc::Bool(c));
        }
        if let Some(v) = &self.verdict {
            root.insert("hypotheses".into(), hypothesis_doc(v));
            root.insert("criteria".into(), criteria_doc(&v.outcomes));
            root.insert("verdict".into(), verdict_doc(v));
        }
        if let Some(tab) = &self.table {
            root.insert(
                "table".into(),
                Doc::map([
                    ("ms_t", ints(tab.ms_t.iter().copied())),
                    ("ms_phi", ints(tab.ms_phi.iter().copied())),
                    (
                        "method_t",
                        Doc::list(tab.method_t.iter().map(|m| Doc::str(m.as_str()))),
                    ),
                    (
                        "method_phi",
                        Doc::list(tab.method_phi.iter().map(|m| Doc::str(m.as_str()))),
                    ),
                    (
                        "t_angles",
                        Doc::list(
                            tab.t_angles
                                .iter()
                                .map(|v| Doc::list(v.iter().map(|&a| Doc::Real(a)))),
                        ),
                    ),
                    (
                        "phi_angles",
                        Doc::list(
                            tab.phi_angles
                                .iter()
                                .map(|v| Doc::list(v.iter().map(|&a| Doc::Real(a)))),
                        ),
                    ),
                ]),
            );
        }
        if let Some(prof) = &self.profile {
            root.insert(
                "profile".into(),
                Doc::map([
                    ("w", ints(prof.w.iter().copied())),
                    ("wprime", ints(prof.wprime.iter().copied())),
                    ("w_in", ints(prof.w_in.iter().copied())),
                    ("w_out", ints(prof.w_out.iter().copied())),
                    (
                        "certified_nonempty",
                        ints(prof.certified_nonempty.iter().map(|&i| i as i64)),
                    ),
                ]),
            );
        }
        if !self.errors.is_empty() {
            root.insert(
                "errors".into(),
                Doc::list(self.errors.iter().map(|e| {
                    Doc::map([
                        ("kind", Doc::str(&e.kind)),
                        ("message", Doc::str(&e.message)),
                    ])
                })),
            );
        }
        Doc::Map(root)
    }

    /// Human-readable form.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };
        push(&mut out, &format!("input: {}", self.input));
        if let Some(parsed) = &self.parsed {
            push(&mut out, &format!("parsed: {parsed}"));
        }
        if !self.support.is_empty() {
            let pts: Vec<String> = self.support.iter().map(|p| p.to_string()).collect();
            push(&mut out, &format!("support: {}", pts.join(" ")));
        }
        if let Some(b) = &self.boundary {
            let verts: Vec<String> = b.vertices.iter().map(|p| p.to_string()).collect();
            push(&mut out, &format!("vertices: {}", verts.join(" ")));
            for (i, f) in b.faces.iter().enumerate() {
                let pts: Vec<String> = f.points.iter().map(|p| p.to_string()).collect();
                push(
                    &mut out,
                    &format!(
                        "face {}: {} -- {}  [{}]",
                        i + 1,
                        f.start,
                        f.end,
                        pts.join(" ")
                    ),
                );
            }
        }
        if let Some(c) = self.convenient {
            push(
                &mut out,
                &format!("convenient: {}", if c { "yes" } else { "no" }),
            );
        }
        if let Some(v) = &self.verdict {
            push(&mut out, "hypothesis checks:");
            for vc in &v.hypothesis.vertices {
                let witness = match vc.witness {
                    Some((phi, t)) => format!("  witness phi={phi:.6} t={t:.6}"),
                    None => String::new(),
                };
                push(
                    &mut out,
                    &format!(
                        "  vertex {} {}: {} (min modulus {:.3e}){}",
                        vc.index,
                        vc.vertex,
                        vc.status.as_str(),
                        vc.min_modulus,
                        witness
                    ),
                );
            }
            for fc in &v.hypothesis.faces {
                push(
                    &mut out,
                    &format!(
                        "  face {}: non-degeneracy {} ({} zero(s) sampled)",
                        fc.face_index,
                        fc.status.as_str(),
                        fc.zeros_sampled
                    ),
                );
            }
        }
        if let Some(tab) = &self.table {
            push(&mut out, "multiplicity table:");
            push(&mut out, "  i   ms_t   ms_phi");
            for i in 0..tab.ms_t.len() {
                push(
                    &mut out,
                    &format!("  {:<3} {:<6} {:<6}", i, tab.ms_t[i], tab.ms_phi[i]),
                );
            }
        }
        if let Some(prof) = &self.profile {
            push(&mut out, "winding profile:");
            push(&mut out, "  face   w   w'   nonempty-certified");
            for i in 1..=prof.face_count() {
                push(
                    &mut out,
                    &format!(
                        "  {:<6} {:<3} {:<4} {}",
                        i,
                        prof.w(i),
                        prof.wprime(i),
                        if prof.certified_nonempty.contains(&i) {
                            "yes"
                        } else {
                            ""
                        }
                    ),
                );
            }
        }
        if let Some(v) = &self.verdict {
            push(&mut out, "criteria:");
            for o in &v.outcomes {
                let state = if o.fired {
                    let tori: Vec<String> =
                        o.essential_tori.iter().map(|i| format!("dV{i}")).collect();
                    if tori.is_empty() {
                        "fired".to_string()
                    } else {
                        format!("fired -> essential {}", tori.join(" "))
                    }
                } else {
                    "not fired".to_string()
                };
                push(&mut out, &format!("  {}: {}", o.id.as_str(), state));
                for e in &o.evidence {
                    push(
                        &mut out,
                        &format!("      |{}| = |{}| > {}", e.quantity, e.value, e.bound),
                    );
                }
            }
            push(&mut out, "verdict:");
            for (i, ess) in &v.per_torus {
                let s = match ess {
                    Essentiality::Essential => "essential",
                    Essentiality::Unknown => "unknown",
                };
                push(&mut out, &format!("  torus dV{i}: {s}"));
            }
            push(
                &mut out,
                &format!(
                    "  reducible-or-toroidal: {}",
                    v.reducible_or_toroidal.as_str()
                ),
            );
            push(
                &mut out,
                &format!("  non-hyperbolic: {}", v.non_hyperbolic.as_str()),
            );
            for c in &v.caveats {
                push(&mut out, &format!("  caveat: {c}"));
            }
        }
        for e in &self.errors {
            push(&mut out, &format!("error [{}]: {}", e.kind, e.message));
        }
        out
    }
}

fn hypothesis_doc(v: &Verdict) -> Doc {
    let hyp = &v.hypothesis;
    Doc::map([
        ("convenient", Doc::Bool(hyp.convenient)),
        ("gamma_nice", Doc::Bool(hyp.gamma_nice)),
        (
            "nondegeneracy_asserted",
            Doc::Bool(hyp.nondegeneracy_asserted),
        ),
        (
            "vertices",
            Doc::list(hyp.vertices.iter().map(|vc| {
                Doc::map([
                    ("index", Doc::Int(vc.index as i64)),
                    ("vertex", point_doc(&vc.vertex)),
                    ("status", Doc::str(vc.status.as_str())),
                    ("min_modulus", Doc::Real(vc.min_modulus)),
                    (
                        "witness",
                        match vc.witness {
                            Some((phi, t)) => Doc::list([Doc::Real(phi), Doc::Real(t)]),
                            None => Doc::Null,
                        },
                    ),
                ])
            })),
        ),
        (
            "faces",
            Doc::list(hyp.faces.iter().map(|fc| {
                Doc::map([
                    ("index", Doc::Int(fc.face_index as i64)),
                    ("status", Doc::str(fc.status.as_str())),
                    ("zeros_sampled", Doc::Int(fc.zeros_sampled as i64)),
                ])
            })),
        ),
    ])
}

fn criteria_doc(outcomes: &[CriterionOutcome]) -> Doc {
    Doc::list(outcomes.iter().map(|o| {
        Doc::map([
            ("id", Doc::str(o.id.as_str())),
            ("fired", Doc::Bool(o.fired)),
            (
                "essential_tori",
                ints(o.essential_tori.iter().map(|&i| i as i64)),
            ),
            (
                "evidence",
                Doc::list(o.evidence.iter().map(|e| {
                    Doc::map([
                        ("quantity", Doc::str(&e.quantity)),
                        ("value", Doc::Int(e.value)),
                        ("bound", Doc::Int(e.bound)),
                    ])
                })),
            ),
            ("caveats", Doc::list(o.caveats.iter().map(Doc::str))),
        ])
    }))
}

fn verdict_doc(v: &Verdict) -> Doc {
    let per_torus: BTreeMap<String, Doc> = v
        .per_torus
        .iter()
        .map(|(i, e)| {
            let s = match e {
                Essentiality::Essential => "essential",
                Essentiality::Unknown => "unknown",
            };
            (i.to_string(), Doc::str(s))
        })
        .collect();
    Doc::map([
        ("per_torus", Doc::Map(per_torus)),
        ("non_hyperbolic", Doc::str(v.non_hyperbolic.as_str())),
        (
            "reducible_or_toroidal",
            Doc::str(v.reducible_or_toroidal.as_str()),
        ),
        ("caveats", Doc::list(v.caveats.iter().map(Doc::str))),
    ])
}
