//! Ext dimensions from minimal resolutions, and bounded orthogonality tests
//! upgraded to exact answers when the syzygies repeat.

use serde::Serialize;

use super::{dual_star, eval_sigma, SigmaReport};
use crate::algdef::same_algebra;
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::modrep::{corner_bases, is_isomorphic, minimal_resolution, Module, Resolution};

/// Syzygies above this dimension are not compared for periodicity.
const PERIODICITY_DIM_LIMIT: usize = 48;

#[derive(Clone, Debug, Serialize)]
pub struct ExtProfile {
    pub bound: usize,
    /// `dims[i] = dim Ext^i(M, N)` for `0 ≤ i ≤ bound`.
    pub dims: Vec<usize>,
    /// `(i0, period)` with `Ω^{i0+period} M ≅ Ω^{i0} M` and `i0 + period ≤ bound`.
    pub periodicity: Option<(usize, usize)>,
    /// Some `j ≤ bound + 1` with `P_j = 0`, so `Ext^i = 0` for `i ≥ j`.
    pub vanishes_from: Option<usize>,
}

impl ExtProfile {
    /// Whether the computed dims determine `Ext^i` for every `i`.
    pub fn is_determined(&self) -> bool {
        self.vanishes_from.is_some() || self.periodicity.is_some_and(|(i0, per)| i0 + per <= self.bound)
    }

    /// `dim Ext^i` for any `i`, when determined.
    pub fn dim(&self, i: usize) -> Option<usize> {
        if i <= self.bound {
            return Some(self.dims[i]);
        }
        if self.vanishes_from.is_some() {
            return Some(0);
        }
        match self.periodicity {
            Some((i0, per)) if i0 + per <= self.bound => {
                let k = (i - i0 - 1) % per;
                Some(self.dims[i0 + 1 + k])
            }
            _ => None,
        }
    }

    /// `Some(true)` when `Ext^i = 0` for every `i ≥ 1` is certified,
    /// `Some(false)` when some `Ext^i ≠ 0`, `None` when only the bound is known.
    pub fn positive_vanishing(&self) -> Option<bool> {
        if self.dims[1..].iter().any(|&d| d != 0) {
            Some(false)
        } else if self.is_determined() {
            Some(true)
        } else {
            None
        }
    }
}

fn rank(m: &Mat) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

/// `dim Ext^i(M, N)` for `0 ≤ i ≤ bound`, with periodicity certificates.
pub fn ext_profile(m: &Module, n: &Module, bound: usize) -> Result<ExtProfile> {
    let res = minimal_resolution(m, bound + 1);
    ext_profile_from(&res, n, bound)
}

/// As [`ext_profile`], reusing a resolution computed to length at least `bound + 1`.
pub fn ext_profile_from(res: &Resolution, n: &Module, bound: usize) -> Result<ExtProfile> {
    let m = res.base();
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if res.length() < bound + 1 {
        return Err(Error::InvalidInput(format!(
            "resolution of length {} is shorter than {}",
            res.length(),
            bound + 1
        )));
    }
    let bases = corner_bases(n);
    // δ_i : Hom(P_{i-1}, N) → Hom(P_i, N); the rank of δ_0 is zero.
    let deltas: Vec<Mat> = (1..=bound + 1).map(|i| res.differential(i).hom_matrix(n, &bases)).collect();
    let hom_dim = |i: usize| -> usize { res.term(i).tops().iter().map(|&t| bases[t].len()).sum() };
    let mut dims = Vec::with_capacity(bound + 1);
    for i in 0..=bound {
        let rank_in = if i == 0 { 0 } else { rank(&deltas[i - 1]) };
        let ker_out = hom_dim(i) - rank(&deltas[i]);
        dims.push(ker_out - rank_in);
    }
    let vanishes_from = res.terms().iter().take(bound + 2).position(|t| t.rank() == 0);
    let periodicity = if vanishes_from.is_some() { None } else { find_periodicity(res, bound)? };
    Ok(ExtProfile { bound, dims, periodicity, vanishes_from })
}

/// Smallest `(i0, period)` with `Ω^{i0+period} ≅ Ω^{i0}` and `i0 + period ≤ bound`.
fn find_periodicity(res: &Resolution, bound: usize) -> Result<Option<(usize, usize)>> {
    let syz: Vec<Module> = (0..=bound).map(|i| res.syzygy(i)).collect();
    for j in 1..=bound {
        for i in 0..j {
            let (a, b) = (&syz[i], &syz[j]);
            if a.dim() != b.dim() || a.dim() > PERIODICITY_DIM_LIMIT {
                continue;
            }
            // An undetermined verdict only loses the certificate.
            if let Ok(v) = is_isomorphic(a, b) {
                if v.is_isomorphic() {
                    return Ok(Some((i, j - i)));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certification {
    /// Holds for every `i ≥ 1`.
    Exact,
    /// Checked for `1 ≤ i ≤ bound` only.
    Bounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    pub certification: Certification,
}

impl Flag {
    fn from_vanishing(v: Option<bool>) -> Flag {
        match v {
            Some(h) => Flag { holds: h, certification: Certification::Exact },
            None => Flag { holds: true, certification: Certification::Bounded },
        }
    }

    fn and(self, other: Flag) -> Flag {
        match (self.holds, other.holds) {
            (false, _) if self.certification == Certification::Exact => self,
            (_, false) if other.certification == Certification::Exact => other,
            _ => Flag {
                holds: self.holds && other.holds,
                certification: if self.certification == Certification::Exact
                    && other.certification == Certification::Exact
                {
                    Certification::Exact
                } else {
                    Certification::Bounded
                },
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityProfile {
    pub bound: usize,
    /// `Ext^i(M, M) = 0` for `i ≥ 1`.
    pub selforthogonal: Flag,
    /// `Ext^i(M, Λ) = 0` for `i ≥ 1`.
    pub ext_to_algebra_zero: Flag,
    /// Reflexive, `Ext^i(M, Λ) = 0` and `Ext^i(M*, Λ) = 0` for `i ≥ 1`.
    pub gorenstein_projective: Flag,
    pub sigma: SigmaReport,
    pub ext_self: ExtProfile,
    pub ext_algebra: ExtProfile,
    pub ext_dual_algebra: ExtProfile,
}

impl OrthogonalityProfile {
    pub fn certification(&self) -> Certification {
        let all = [self.selforthogonal, self.ext_to_algebra_zero, self.gorenstein_projective];
        if all.iter().all(|f| f.certification == Certification::Exact) {
            Certification::Exact
        } else {
            Certification::Bounded
        }
    }
}

pub fn orthogonality_profile(m: &Module, bound: usize) -> Result<OrthogonalityProfile> {
    if bound == 0 {
        return Err(Error::InvalidInput("the Ext bound must be at least 1".into()));
    }
    let alg = m.algebra();
    let res = minimal_resolution(m, bound + 1);
    let ext_self = ext_profile_from(&res, m, bound)?;
    let ext_algebra = ext_profile_from(&res, &Module::regular(alg), bound)?;
    let ms = dual_star(m)?;
    let ext_dual_algebra = ext_profile(&ms, &Module::regular(ms.algebra()), bound)?;
    let sigma = eval_sigma(m)?;
    let selforthogonal = Flag::from_vanishing(ext_self.positive_vanishing());
    let ext_to_algebra_zero = Flag::from_vanishing(ext_algebra.positive_vanishing());
    let reflexive = Flag { holds: sigma.reflexive, certification: Certification::Exact };
    let gorenstein_projective =
        reflexive.and(ext_to_algebra_zero).and(Flag::from_vanishing(ext_dual_algebra.positive_vanishing()));
    Ok(OrthogonalityProfile {
        bound,
        selforthogonal,
        ext_to_algebra_zero,
        gorenstein_projective,
        sigma,
        ext_self,
        ext_algebra,
        ext_dual_algebra,
    })
}
