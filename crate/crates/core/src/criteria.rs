//! Essential-torus criteria over the multiplicity/winding data, the
//! abstract nested-tori characterization over user-supplied wrap data,
//! and assembly of the final verdict.
//!
//! Three criteria are evaluated from the table alone:
//!
//! * the fast single-vertex criterion: `min(|ms_t[i]|, |ms_phi[i]|) > 1`
//!   marks `∂Vᵢ` essential;
//! * the general criterion over the certified-nonempty face set (three
//!   branches: first torus, middle tori, last torus);
//! * the count criterion: four faces with nonzero winding force an
//!   essential sphere or torus, hence non-hyperbolicity.
//!
//! Since the true nonempty set is not computable from the table, the
//! general criterion runs on the certified subset; every fired conclusion
//! is monotone under enlarging the set, so firing on the subset is sound.
//! Fired criteria never get downgraded by inconclusive hypothesis checks;
//! the verdict carries the hypothesis report separately.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::torus_check::HypothesisReport;
use crate::winding::{MultiplicityTable, WindingProfile};
use crate::Result;

/// Identifies which criterion an outcome belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionId {
    Fast,
    GeneralFirst,
    GeneralMiddle,
    GeneralLast,
    Count,
}

impl CriterionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionId::Fast => "thm1.1",
            CriterionId::GeneralFirst => "thm1.2(i)",
            CriterionId::GeneralMiddle => "thm1.2(ii)",
            CriterionId::GeneralLast => "thm1.2(iii)",
            CriterionId::Count => "thm1.3",
        }
    }
}

/// One instantiated inequality `|value| > bound`, with `quantity` naming
/// the table/profile integer it was read from (`ms_t[2]`, `w[1]`, …) so
/// the record can be re-audited against the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub quantity: String,
    pub value: i64,
    pub bound: i64,
}

impl Evidence {
    fn new(quantity: String, value: i64, bound: i64) -> Self {
        debug_assert!(value.abs() > bound, "evidence must hold when recorded");
        Evidence {
            quantity,
            value,
            bound,
        }
    }

    pub fn holds(&self) -> bool {
        self.value.abs() > self.bound
    }
}

/// Result of evaluating one criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub id: CriterionId,
    pub fired: bool,
    /// Indices `i` of tori `∂Vᵢ` the criterion marks essential.
    pub essential_tori: BTreeSet<usize>,
    pub evidence: Vec<Evidence>,
    pub caveats: Vec<String>,
}

impl CriterionOutcome {
    fn not_fired(id: CriterionId) -> Self {
        CriterionOutcome {
            id,
            fired: false,
            essential_tori: BTreeSet::new(),
            evidence: Vec::new(),
            caveats: Vec::new(),
        }
    }
}

/// Resolves an evidence quantity name back to the integer it was read
/// from, for self-audit of fired records.
pub fn resolve_quantity(tab: &MultiplicityTable, prof: &WindingProfile, name: &str) -> Option<i64> {
    let (kind, idx) = name.split_once('[')?;
    let idx: usize = idx.strip_suffix(']')?.parse().ok()?;
    match kind {
        "ms_t" => tab.ms_t.get(idx).copied(),
        "ms_phi" => tab.ms_phi.get(idx).copied(),
        "w" => prof.w.get(idx.checked_sub(1)?).copied(),
        "wprime" => prof.wprime.get(idx.checked_sub(1)?).copied(),
        _ => None,
    }
}

/// Fast criterion: `∂Vᵢ` is essential whenever both vertex
/// multiplicities at `Δᵢ` exceed 1 in absolute value, for
/// `i = 1..N-1`.
pub fn fast_criterion(tab: &MultiplicityTable) -> CriterionOutcome {
    let n = tab.face_count();
    let mut out = CriterionOutcome::not_fired(CriterionId::Fast);
    for i in 1..n {
        let a = tab.ms_t[i];
        let b = tab.ms_phi[i];
        if a.abs().min(b.abs()) > 1 {
            out.fired = true;
            out.essential_tori.insert(i);
            out.evidence.push(Evidence::new(format!("ms_t[{i}]"), a, 1));
            out.evidence
                .push(Evidence::new(format!("ms_phi[{i}]"), b, 1));
        }
    }
    out
}

const CERTIFIED_SUBSET_CAVEAT: &str =
    "the nonempty face set used is the certified subset from the winding bound; \
     fired conclusions are monotone under enlarging it";

/// General criterion, evaluated on the certified-nonempty subset of the
/// profile. Returns the three branch outcomes.
pub fn general_criterion(tab: &MultiplicityTable, prof: &WindingProfile) -> Vec<CriterionOutcome> {
    general_criterion_with_set(tab, prof, &prof.certified_nonempty)
}

/// General criterion over an explicit nonempty-face index set (ascending
/// members of `1..=N`). Exposed so callers with outside knowledge of
/// nonemptiness can enlarge the certified set.
pub fn general_criterion_with_set(
    tab: &MultiplicityTable,
    prof: &WindingProfile,
    index_set: &BTreeSet<usize>,
) -> Vec<CriterionOutcome> {
    let mut first = CriterionOutcome::not_fired(CriterionId::GeneralFirst);
    let mut middle = CriterionOutcome::not_fired(CriterionId::GeneralMiddle);
    let mut last = CriterionOutcome::not_fired(CriterionId::GeneralLast);

    let nfaces = tab.face_count();
    let indices: Vec<usize> = index_set
        .iter()
        .copied()
        .filter(|&i| 1 <= i && i <= nfaces)
        .collect();
    let n = indices.len();
    if n < 3 {
        let reason = format!("requires n >= 3 nonempty faces, certified set has {n}");
        for out in [&mut first, &mut middle, &mut last] {
            out.caveats.push(reason.clone());
        }
        return vec![first, middle, last];
    }
    for out in [&mut first, &mut middle, &mut last] {
        out.caveats.push(CERTIFIED_SUBSET_CAVEAT.to_string());
    }

    let i1 = indices[0];
    let i_last = indices[n - 1];

    // Branch (i): |ms_t| > 1 at the first nonempty face's right vertex,
    // plus a later face with nonzero outward winding.
    if tab.ms_t[i1].abs() > 1 {
        if let Some(&ij) = indices.iter().find(|&&j| j > i1 && prof.wprime(j) != 0) {
            first.fired = true;
            first.essential_tori.insert(i1);
            first
                .evidence
                .push(Evidence::new(format!("ms_t[{i1}]"), tab.ms_t[i1], 1));
            first
                .evidence
                .push(Evidence::new(format!("wprime[{ij}]"), prof.wprime(ij), 0));
        }
    }

    // Branch (ii): middle positions k with nonzero inward winding at or
    // before them and nonzero outward winding strictly after them.
    for k in 2..=(n.saturating_sub(2)) {
        let ik = indices[k - 1];
        let left = indices.iter().find(|&&j| j <= ik && prof.w(j) != 0);
        let right = indices.iter().find(|&&j| j > ik && prof.wprime(j) != 0);
        if let (Some(&ij), Some(&il)) = (left, right) {
            middle.fired = true;
            middle.essential_tori.insert(ik);
            middle
                .evidence
                .push(Evidence::new(format!("w[{ij}]"), prof.w(ij), 0));
            middle
                .evidence
                .push(Evidence::new(format!("wprime[{il}]"), prof.wprime(il), 0));
        }
    }

    // Branch (iii): |ms_phi| > 1 at the left vertex of the last nonempty
    // face, plus an earlier face with nonzero inward winding. The vertex
    // index i_n − 1 is exactly the cumulative outward winding beyond
    // ∂V_{i_{n−1}}.
    if tab.ms_phi[i_last - 1].abs() > 1 {
        if let Some(&ij) = indices.iter().find(|&&j| j < i_last && prof.w(j) != 0) {
            let target = indices[n - 2];
            last.fired = true;
            last.essential_tori.insert(target);
            last.evidence.push(Evidence::new(
                format!("ms_phi[{}]", i_last - 1),
                tab.ms_phi[i_last - 1],
                1,
            ));
            last.evidence
                .push(Evidence::new(format!("w[{ij}]"), prof.w(ij), 0));
        }
    }

    vec![first, middle, last]
}

/// Count criterion: four faces with nonzero winding imply an essential
/// sphere or torus in the exterior, hence non-hyperbolicity, without
/// naming a specific torus.
pub fn count_criterion(prof: &WindingProfile) -> CriterionOutcome {
    let mut out = CriterionOutcome::not_fired(CriterionId::Count);
    let witnesses: Vec<usize> = prof.certified_nonempty.iter().copied().collect();
    if witnesses.len() >= 4 {
        out.fired = true;
        for &i in &witnesses {
            let (name, value) = if prof.w(i) != 0 {
                (format!("w[{i}]"), prof.w(i))
            } else {
                (format!("wprime[{i}]"), prof.wprime(i))
            };
            out.evidence.push(Evidence::new(name, value, 0));
        }
    }
    out
}

/// Per-torus essentiality claim derived from polynomial data. The
/// criteria are one-sided: a torus they do not reach stays `Unknown`,
/// never "not essential".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Essentiality {
    Essential,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YesUnknown {
    Yes,
    Unknown,
}

impl YesUnknown {
    pub fn as_str(&self) -> &'static str {
        match self {
            YesUnknown::Yes => "yes",
            YesUnknown::Unknown => "unknown",
        }
    }
}

/// Final aggregated verdict for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    /// `i ↦ essentiality of ∂Vᵢ` for `i = 1..=N−1`.
    pub per_torus: BTreeMap<usize, Essentiality>,
    pub non_hyperbolic: YesUnknown,
    pub reducible_or_toroidal: YesUnknown,
    pub outcomes: Vec<CriterionOutcome>,
    pub hypothesis: HypothesisReport,
    /// Hypothesis-derived caveats (non-certified checks, heuristics).
    pub caveats: Vec<String>,
}

/// Union of the criterion outcomes plus hypothesis caveats. The verdict
/// is `non_hyperbolic = yes` iff some criterion fired; criteria are never
/// downgraded by inconclusive hypothesis checks.
pub fn assemble_verdict(
    tab: &MultiplicityTable,
    _prof: &WindingProfile,
    outcomes: Vec<CriterionOutcome>,
    hyp: HypothesisReport,
) -> Verdict {
    let n = tab.face_count();
    let mut per_torus: BTreeMap<usize, Essentiality> =
        (1..n).map(|i| (i, Essentiality::Unknown)).collect();
    let mut any_fired = false;
    for out in &outcomes {
        if out.fired {
            any_fired = true;
        }
        for &i in &out.essential_tori {
            per_torus.insert(i, Essentiality::Essential);
        }
    }
    let verdict_flag = if any_fired {
        YesUnknown::Yes
    } else {
        YesUnknown::Unknown
    };
    let caveats = hyp.caveats();
    Verdict {
        per_torus,
        non_hyperbolic: verdict_flag,
        reducible_or_toroidal: verdict_flag,
        outcomes,
        hypothesis: hyp,
        caveats,
    }
}

/// One component of an abstract nested link, indexed from the inside out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkComponent {
    /// Wrapping number of `Lᵢ` in its solid torus.
    pub wrap: u32,
    /// Winding number; only the invariant `wrap ≥ |winding|` is used.
    pub winding: i64,
    pub is_knot: bool,
    /// Whether the component is the trivial knot; `None` when unknown.
    /// Irrelevant (and ignored) when `is_knot` is false.
    pub is_trivial_knot: Option<bool>,
}

/// User-supplied data for the abstract nested-tori characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedLinkSpec {
    pub components: Vec<LinkComponent>,
}

impl NestedLinkSpec {
    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n() < 2 {
            return Err(Error::InvalidSpec(format!(
                "need at least 2 components, got {}",
                self.n()
            )));
        }
        for (idx, c) in self.components.iter().enumerate() {
            if i64::from(c.wrap) < c.winding.abs() {
                return Err(Error::InvalidSpec(format!(
                    "component {}: wrap {} < |winding| {}",
                    idx + 1,
                    c.wrap,
                    c.winding.abs()
                )));
            }
        }
        Ok(())
    }
}

/// Essentiality call for one abstract torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusCall {
    Essential,
    NotEssential,
    /// A needed triviality flag was absent.
    Unknown,
}

impl TorusCall {
    pub fn as_str(&self) -> &'static str {
        match self {
            TorusCall::Essential => "essential",
            TorusCall::NotEssential => "not-essential",
            TorusCall::Unknown => "unknown",
        }
    }
}

/// Result for torus `∂Vᵢ` of the abstract characterization, tagged with
/// the case that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NestedTorusVerdict {
    pub torus: usize,
    pub call: TorusCall,
    pub branch: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tern {
    True,
    False,
    Unknown,
}

impl Tern {
    fn and(self, other: Tern) -> Tern {
        match (self, other) {
            (Tern::False, _) | (_, Tern::False) => Tern::False,
            (Tern::True, Tern::True) => Tern::True,
            _ => Tern::Unknown,
        }
    }

    fn from_bool(b: bool) -> Tern {
        if b {
            Tern::True
        } else {
            Tern::False
        }
    }

    fn to_call(self) -> TorusCall {
        match self {
            Tern::True => TorusCall::Essential,
            Tern::False => TorusCall::NotEssential,
            Tern::Unknown => TorusCall::Unknown,
        }
    }
}

/// Strong boundary condition: wrap > 1, or wrap = 1 and the component is
/// not the trivial knot. Unknown iff wrap = 1 and the component is a
/// knot with unknown triviality.
fn strong_condition(c: &LinkComponent) -> Tern {
    match c.wrap {
        0 => Tern::False,
        1 => {
            if !c.is_knot {
                // A link with several components is never the trivial knot.
                Tern::True
            } else {
                match c.is_trivial_knot {
                    Some(true) => Tern::False,
                    Some(false) => Tern::True,
                    None => Tern::Unknown,
                }
            }
        }
        _ => Tern::True,
    }
}

/// Per-torus essentiality for an abstract nested link: `∂Vᵢ` separates
/// components `1..=i` from `i+1..=n`. Applies the three cases of the
/// characterization verbatim; wrap additivity over a side reduces the
/// side conditions to per-component wraps.
pub fn nested_characterization(spec: &NestedLinkSpec) -> Result<Vec<NestedTorusVerdict>> {
    spec.validate()?;
    let n = spec.n();
    let comps = &spec.components;
    let any_wrap = |range: std::ops::RangeInclusive<usize>| -> Tern {
        Tern::from_bool(range.into_iter().any(|j| comps[j - 1].wrap > 0))
    };

    let mut verdicts = Vec::with_capacity(n - 1);
    for i in 1..n {
        let (call, branch) = if i == 1 && n == 2 {
            (
                strong_condition(&comps[0]).and(strong_condition(&comps[1])),
                "i=1, n=2",
            )
        } else if i == 1 {
            (
                strong_condition(&comps[0]).and(any_wrap(2..=n)),
                "i=1, n>=3",
            )
        } else if i == n - 1 {
            (
                any_wrap(1..=n - 1).and(strong_condition(&comps[n - 1])),
                "i=n-1, n>2",
            )
        } else {
            (any_wrap(1..=i).and(any_wrap(i + 1..=n)), "1<i<n-1")
        };
        verdicts.push(NestedTorusVerdict {
            torus: i,
            call: call.to_call(),
            branch,
        });
    }
    Ok(verdicts)
}
