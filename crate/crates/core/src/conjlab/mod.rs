//! Implication predicates over modules, suites that run them over
//! enumerated modules, and the approximation constructions they rely on.

mod approx;
mod suite;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use approx::{
    check_right_approximation, right_minimal_reduction, universal_extension, ExtensionRealization, RightMinimal,
};
pub use suite::{
    run_suite, search_counterexample, suite_modules, SearchConfig, SearchStream, SuiteConfig, SuiteReport, Witness,
};

use crate::algdef::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::homtools::{
    d_dual, eval_sigma, ext_profile, ext_profile_from, orthogonality_profile, regular_right, transpose, Certification,
    ExtProfile, OrthogonalityProfile, SigmaReport,
};
use crate::modrep::{hom_basis, is_indecomposable, minimal_resolution, Module, Resolution};

/// The implications checked by the lab.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Predicate {
    /// Local, `J² = 0`: torsionless with `Ext¹(M,M) = 0` is projective.
    #[serde(rename = "thm3.4")]
    LocalRadSqZeroRigid,
    /// Commutative, `J² = 0`: same statement.
    #[serde(rename = "thm4.1")]
    CommRadSqZeroRigid,
    /// Commutative: torsionless, `Ext^{1,2,3}(M,Λ) = 0`, `Ext^{1,2}(M,M) = 0` gives projective.
    #[serde(rename = "thm4.6")]
    CommExtVanishing,
    /// Commutative: Gorenstein projective and selforthogonal is projective, and conversely.
    #[serde(rename = "thm4.7")]
    CommGorensteinSelforth,
    /// `J² = 0`: indecomposable, torsionless and not simple is projective.
    #[serde(rename = "lem3.2")]
    RadSqZeroNonsimple,
    /// Local, `J² = 0`: indecomposable, torsionless, `Ext¹(M,M) = 0` is projective.
    #[serde(rename = "lem3.3")]
    LocalRadSqZeroIndec,
    /// Faithful, indecomposable and torsionless is projective.
    #[serde(rename = "prop3.5")]
    FaithfulTorsionless,
    /// Faithful, indecomposable, `Ext¹(M,Λ) = 0`, `Ext¹(Tr M, Tr M) = 0` is projective.
    #[serde(rename = "prop3.6")]
    FaithfulTransposeRigid,
    /// Faithful simple `S` with `Ext¹(S⊕Λ, S⊕Λ) = 0` is projective.
    #[serde(rename = "prop3.7")]
    FaithfulSimpleRigid,
    /// `Ext^i(M⊕Λ, M⊕Λ) = 0` for `1 ≤ i ≤ B` suggests projective (exploratory).
    #[serde(rename = "gnc_bounded")]
    NakayamaBounded,
    /// Faithful ⇔ cogenerates `Λ` ⇔ generates `DΛ`.
    #[serde(rename = "lem2.2_agreement")]
    FaithfulnessAgreement,
}

impl Predicate {
    pub const ALL: [Predicate; 11] = [
        Predicate::LocalRadSqZeroRigid,
        Predicate::CommRadSqZeroRigid,
        Predicate::CommExtVanishing,
        Predicate::CommGorensteinSelforth,
        Predicate::RadSqZeroNonsimple,
        Predicate::LocalRadSqZeroIndec,
        Predicate::FaithfulTorsionless,
        Predicate::FaithfulTransposeRigid,
        Predicate::FaithfulSimpleRigid,
        Predicate::NakayamaBounded,
        Predicate::FaithfulnessAgreement,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Predicate::LocalRadSqZeroRigid => "thm3.4",
            Predicate::CommRadSqZeroRigid => "thm4.1",
            Predicate::CommExtVanishing => "thm4.6",
            Predicate::CommGorensteinSelforth => "thm4.7",
            Predicate::RadSqZeroNonsimple => "lem3.2",
            Predicate::LocalRadSqZeroIndec => "lem3.3",
            Predicate::FaithfulTorsionless => "prop3.5",
            Predicate::FaithfulTransposeRigid => "prop3.6",
            Predicate::FaithfulSimpleRigid => "prop3.7",
            Predicate::NakayamaBounded => "gnc_bounded",
            Predicate::FaithfulnessAgreement => "lem2.2_agreement",
        }
    }

    /// Whether a failure is a violation of a proved statement (as opposed to a candidate).
    pub fn is_proved(self) -> bool {
        self != Predicate::NakayamaBounded
    }

    /// Flags the algebra must have.
    pub fn preconditions(self) -> &'static [&'static str] {
        match self {
            Predicate::LocalRadSqZeroRigid | Predicate::LocalRadSqZeroIndec => &["local", "radical_square_zero"],
            Predicate::CommRadSqZeroRigid => &["commutative", "radical_square_zero"],
            Predicate::CommExtVanishing | Predicate::CommGorensteinSelforth => &["commutative"],
            Predicate::RadSqZeroNonsimple => &["radical_square_zero"],
            _ => &[],
        }
    }

    pub fn applies_to(self, alg: &Algebra) -> bool {
        self.preconditions().iter().all(|&c| match c {
            "local" => alg.is_local(),
            "radical_square_zero" => alg.is_radical_square_zero(),
            "commutative" => alg.is_commutative(),
            _ => false,
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Predicate::ALL.iter().map(|p| p.id()).collect();
            Error::InvalidInput(format!("unknown predicate `{s}` (expected one of {})", ids.join(", ")))
        })
    }
}

/// One named premise or side condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub name: &'static str,
    pub holds: bool,
    pub certification: Certification,
}

impl Premise {
    fn exact(name: &'static str, holds: bool) -> Premise {
        Premise { name, holds, certification: Certification::Exact }
    }
}

/// Result of evaluating a predicate on one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub predicate: Predicate,
    pub applicable: bool,
    pub premises: Vec<Premise>,
    pub conclusion: bool,
    /// `¬(all premises) ∨ conclusion`, or the agreement check.
    pub consistent: bool,
    /// Some premise is only known up to the Ext bound.
    pub bounded: bool,
}

impl Evaluation {
    pub fn premises_hold(&self) -> bool {
        self.applicable && self.premises.iter().all(|p| p.holds)
    }

    fn not_applicable(predicate: Predicate) -> Evaluation {
        Evaluation {
            predicate,
            applicable: false,
            premises: vec![],
            conclusion: false,
            consistent: true,
            bounded: false,
        }
    }

    fn implication(predicate: Predicate, premises: Vec<Premise>, conclusion: bool) -> Evaluation {
        let all = premises.iter().all(|p| p.holds);
        let bounded = premises.iter().any(|p| p.certification == Certification::Bounded);
        Evaluation { predicate, applicable: true, premises, conclusion, consistent: !all || conclusion, bounded }
    }
}

/// Lazily computed facts about one module, shared across predicates.
pub(crate) struct Facts<'a> {
    m: &'a Module,
    bound: usize,
    res: OnceCell<Resolution>,
    sigma: OnceCell<SigmaReport>,
    ext_self: OnceCell<ExtProfile>,
    ext_alg: OnceCell<ExtProfile>,
    orth: OnceCell<OrthogonalityProfile>,
    indecomposable: OnceCell<bool>,
}

macro_rules! cached {
    ($cell:expr, $init:expr) => {{
        if $cell.get().is_none() {
            let v = $init;
            let _ = $cell.set(v);
        }
        Ok::<_, Error>($cell.get().expect("just set"))
    }};
}

impl<'a> Facts<'a> {
    pub fn new(m: &'a Module, bound: usize) -> Facts<'a> {
        Facts {
            m,
            bound: bound.max(3),
            res: OnceCell::new(),
            sigma: OnceCell::new(),
            ext_self: OnceCell::new(),
            ext_alg: OnceCell::new(),
            orth: OnceCell::new(),
            indecomposable: OnceCell::new(),
        }
    }

    fn res(&self) -> &Resolution {
        if self.res.get().is_none() {
            let _ = self.res.set(minimal_resolution(self.m, self.bound + 1));
        }
        self.res.get().expect("just set")
    }

    fn sigma(&self) -> Result<&SigmaReport> {
        cached!(self.sigma, eval_sigma(self.m)?)
    }

    fn torsionless(&self) -> Result<bool> {
        Ok(self.sigma()?.torsionless)
    }

    fn ext_self(&self) -> Result<&ExtProfile> {
        cached!(self.ext_self, ext_profile_from(self.res(), self.m, self.bound)?)
    }

    fn ext_alg(&self) -> Result<&ExtProfile> {
        cached!(self.ext_alg, ext_profile_from(self.res(), &Module::regular(self.m.algebra()), self.bound)?)
    }

    fn orth(&self, bound: usize) -> Result<&OrthogonalityProfile> {
        cached!(self.orth, orthogonality_profile(self.m, bound)?)
    }

    fn indecomposable(&self) -> Result<bool> {
        Ok(*cached!(self.indecomposable, is_indecomposable(self.m)?)?)
    }

    fn projective(&self) -> bool {
        self.m.is_projective()
    }

    fn faithful(&self) -> bool {
        self.m.is_faithful()
    }
}

fn zero_through(p: &ExtProfile, to: usize) -> bool {
    p.dims[1..=to].iter().all(|&d| d == 0)
}

/// `Λ` embeds in a power of `M`: the maps `Λ → M` have no common kernel.
pub fn cogenerates_algebra(m: &Module) -> Result<bool> {
    let alg = m.algebra();
    if m.is_zero() {
        return Ok(alg.dim() == 0);
    }
    let maps = hom_basis(&Module::regular(alg), m)?;
    let mut common = Subspace::full(m.p(), alg.dim());
    for f in &maps {
        common = common.intersect(&f.kernel());
    }
    Ok(common.is_zero())
}

/// `DΛ` is a quotient of a power of `M`: the images of maps `M → DΛ` span it.
pub fn generates_injective_cogenerator(m: &Module) -> Result<bool> {
    let alg = m.algebra();
    let inj = d_dual(&regular_right(alg)).rebind(alg)?;
    let maps = hom_basis(m, &inj)?;
    let mut trace = Subspace::zero(m.p(), inj.dim());
    for f in &maps {
        trace = trace.sum(&f.image());
    }
    Ok(trace.dim() == inj.dim())
}

/// Evaluate `pred` on `m` with Ext bound `bound`.
pub fn evaluate_predicate(pred: Predicate, m: &Module, bound: usize) -> Result<Evaluation> {
    evaluate_with(pred, &Facts::new(m, bound), bound, false)
}

/// As [`evaluate_predicate`], optionally ignoring the algebra preconditions
/// (used when searching outside the proved regime).
pub(crate) fn evaluate_with(pred: Predicate, f: &Facts<'_>, bound: usize, force: bool) -> Result<Evaluation> {
    let m = f.m;
    if !force && !pred.applies_to(m.algebra()) {
        return Ok(Evaluation::not_applicable(pred));
    }
    use Predicate::*;
    let e = match pred {
        LocalRadSqZeroRigid | CommRadSqZeroRigid => Evaluation::implication(
            pred,
            vec![
                Premise::exact("torsionless", f.torsionless()?),
                Premise::exact("ext1_self_zero", f.ext_self()?.dims[1] == 0),
            ],
            f.projective(),
        ),
        CommExtVanishing => Evaluation::implication(
            pred,
            vec![
                Premise::exact("torsionless", f.torsionless()?),
                Premise::exact("ext123_algebra_zero", zero_through(f.ext_alg()?, 3)),
                Premise::exact("ext12_self_zero", zero_through(f.ext_self()?, 2)),
            ],
            f.projective(),
        ),
        CommGorensteinSelforth => {
            let o = f.orth(bound)?;
            let gp = o.gorenstein_projective;
            let so = o.selforthogonal;
            let mut e = Evaluation::implication(
                pred,
                vec![
                    Premise { name: "gorenstein_projective", holds: gp.holds, certification: gp.certification },
                    Premise { name: "selforthogonal", holds: so.holds, certification: so.certification },
                ],
                f.projective(),
            );
            // Converse: projective modules are Gorenstein projective and selforthogonal.
            if f.projective() && !(gp.holds && so.holds) {
                e.consistent = false;
            }
            e
        }
        RadSqZeroNonsimple => Evaluation::implication(
            pred,
            vec![
                Premise::exact("indecomposable", f.indecomposable()?),
                Premise::exact("torsionless", f.torsionless()?),
                Premise::exact("not_simple", !m.is_simple()),
            ],
            f.projective(),
        ),
        LocalRadSqZeroIndec => Evaluation::implication(
            pred,
            vec![
                Premise::exact("indecomposable", f.indecomposable()?),
                Premise::exact("torsionless", f.torsionless()?),
                Premise::exact("ext1_self_zero", f.ext_self()?.dims[1] == 0),
            ],
            f.projective(),
        ),
        FaithfulTorsionless => Evaluation::implication(
            pred,
            vec![
                Premise::exact("faithful", f.faithful()),
                Premise::exact("indecomposable", f.indecomposable()?),
                Premise::exact("torsionless", f.torsionless()?),
            ],
            f.projective(),
        ),
        FaithfulTransposeRigid => {
            let faithful = f.faithful();
            let indec = f.indecomposable()?;
            let ext1_alg = f.ext_alg()?.dims[1] == 0;
            // Only pay for Tr M when the cheaper premises hold.
            let tr_rigid = if faithful && indec && ext1_alg {
                let tr = transpose(m)?.module;
                ext_profile(&tr, &tr, 1)?.dims[1] == 0
            } else {
                false
            };
            Evaluation::implication(
                pred,
                vec![
                    Premise::exact("faithful", faithful),
                    Premise::exact("indecomposable", indec),
                    Premise::exact("ext1_algebra_zero", ext1_alg),
                    Premise::exact("ext1_transpose_self_zero", tr_rigid),
                ],
                f.projective(),
            )
        }
        FaithfulSimpleRigid => {
            let simple = m.is_simple();
            let faithful = f.faithful();
            let rigid = if simple && faithful {
                let s = m.direct_sum(&Module::regular(m.algebra()))?;
                ext_profile(&s, &s, 1)?.dims[1] == 0
            } else {
                false
            };
            Evaluation::implication(
                pred,
                vec![
                    Premise::exact("simple", simple),
                    Premise::exact("faithful", faithful),
                    Premise::exact("ext1_sum_with_algebra_zero", rigid),
                ],
                f.projective(),
            )
        }
        NakayamaBounded => {
            let s = m.direct_sum(&Module::regular(m.algebra()))?;
            let p = ext_profile(&s, &s, bound)?;
            let (holds, certification) = match p.positive_vanishing() {
                Some(h) => (h, Certification::Exact),
                None => (true, Certification::Bounded),
            };
            Evaluation::implication(
                pred,
                vec![Premise { name: "ext_sum_with_algebra_zero", holds, certification }],
                f.projective(),
            )
        }
        FaithfulnessAgreement => {
            let faithful = f.faithful();
            let cogen = cogenerates_algebra(m)?;
            let gen = generates_injective_cogenerator(m)?;
            Evaluation {
                predicate: pred,
                applicable: true,
                premises: vec![
                    Premise::exact("faithful", faithful),
                    Premise::exact("cogenerates_projectives", cogen),
                    Premise::exact("generates_injectives", gen),
                ],
                conclusion: faithful == cogen && cogen == gen,
                consistent: faithful == cogen && cogen == gen,
                bounded: false,
            }
        }
    };
    Ok(e)
}
