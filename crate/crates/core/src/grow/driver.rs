use serde::{Deserialize, Serialize};

use crate::code::{dressed_distance, CssSubsystemCode, WeightProfile};
use crate::gf2::PauliType;

use super::phases::{concatenate_support, nonisometric_reduce, shift_checks};
use super::GrowError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthConfig {
    pub w_x: usize,
    pub w_z: usize,
    pub q_x: usize,
    pub q_z: usize,
    pub m_x: usize,
    pub m_z: usize,
    /// Number of cycles; each cycle runs `m_x` X-rounds and `m_z` Z-rounds.
    pub iterations: usize,
    /// Checks moved per overweight qubit when shifting.
    pub shift_count: usize,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        Self {
            w_x: 4,
            w_z: 4,
            q_x: 4,
            q_z: 4,
            m_x: 1,
            m_z: 1,
            iterations: 1,
            shift_count: 1,
        }
    }
}

impl GrowthConfig {
    pub fn with_caps(w_x: usize, w_z: usize, q_x: usize, q_z: usize) -> Self {
        Self {
            w_x,
            w_z,
            q_x,
            q_z,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), GrowError> {
        for (name, v) in [("w_x", self.w_x), ("w_z", self.w_z), ("q_x", self.q_x), ("q_z", self.q_z)] {
            if v < 2 {
                return Err(GrowError::InvalidConfig(format!("{name} = {v} is below 2")));
            }
        }
        if self.m_x == 0 && self.m_z == 0 {
            return Err(GrowError::InvalidConfig("m_x and m_z are both 0".into()));
        }
        if self.shift_count == 0 {
            return Err(GrowError::InvalidConfig("shift_count must be at least 1".into()));
        }
        Ok(())
    }

    pub fn w(&self, kind: PauliType) -> usize {
        match kind {
            PauliType::X => self.w_x,
            PauliType::Z => self.w_z,
        }
    }

    pub fn q(&self, kind: PauliType) -> usize {
        match kind {
            PauliType::X => self.q_x,
            PauliType::Z => self.q_z,
        }
    }

    pub fn admits(&self, p: &WeightProfile) -> bool {
        p.w_x <= self.w_x && p.w_z <= self.w_z && p.q_x <= self.q_x && p.q_z <= self.q_z
    }
}

/// Round types of one cycle, interleaved: `(2, 1)` gives X, Z, X.
pub fn round_schedule(m_x: usize, m_z: usize) -> Vec<PauliType> {
    let mut out = Vec::with_capacity(m_x + m_z);
    let (mut x, mut z) = (0, 0);
    while x < m_x || z < m_z {
        if x < m_x {
            out.push(PauliType::X);
            x += 1;
        }
        if z < m_z {
            out.push(PauliType::Z);
            z += 1;
        }
    }
    out
}

/// Running distance guarantees. Lower bounds start at the seed's exact
/// distances and gain one per completed round of their type; upper bounds are
/// the weights of the tracked bare logicals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBounds {
    pub lower: usize,
    pub lower_x: usize,
    pub lower_z: usize,
    pub upper_x: Vec<usize>,
    pub upper_z: Vec<usize>,
}

impl DistanceBounds {
    fn new(lower_x: usize, lower_z: usize, code: &CssSubsystemCode) -> Self {
        let mut b = Self {
            lower: 0,
            lower_x,
            lower_z,
            upper_x: Vec::new(),
            upper_z: Vec::new(),
        };
        b.refresh(code);
        b
    }

    fn refresh(&mut self, code: &CssSubsystemCode) {
        self.lower = self.lower_x.min(self.lower_z);
        self.upper_x = code.bare_x().iter().map(|v| v.weight()).collect();
        self.upper_z = code.bare_z().iter().map(|v| v.weight()).collect();
    }

    pub fn upper(&self, kind: PauliType) -> usize {
        let v = match kind {
            PauliType::X => &self.upper_x,
            PauliType::Z => &self.upper_z,
        };
        v.iter().copied().min().unwrap_or(0)
    }

    fn bump(&mut self, kind: PauliType) {
        match kind {
            PauliType::X => self.lower_x += 1,
            PauliType::Z => self.lower_z += 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Concatenate,
    Reduce,
    Shift,
}

/// One phase of one logical within one round.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseRecord {
    /// 1-based round counter over the whole run.
    pub round: usize,
    pub kind: PauliType,
    pub logical: usize,
    pub phase: Phase,
    /// Qubit count after the phase.
    pub n: usize,
    pub added_qubits: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub support: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even_overlap: Option<bool>,
    /// Per logical, qubits gained by its bare representative of type `kind`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bare_growth: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shifted: Vec<(usize, usize)>,
    pub profile: WeightProfile,
    pub bounds: DistanceBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthLog {
    pub seed_n: usize,
    pub seed_bounds: DistanceBounds,
    pub records: Vec<PhaseRecord>,
}

impl GrowthLog {
    pub fn final_bounds(&self) -> &DistanceBounds {
        self.records.last().map_or(&self.seed_bounds, |r| &r.bounds)
    }

    pub fn rounds(&self) -> usize {
        self.records.last().map_or(0, |r| r.round)
    }

    pub fn rounds_of(&self, kind: PauliType) -> usize {
        let mut seen: Vec<usize> = self
            .records
            .iter()
            .filter(|r| r.kind == kind)
            .map(|r| r.round)
            .collect();
        seen.dedup();
        seen.len()
    }

    pub fn qubits_added(&self) -> usize {
        self.records.iter().map(|r| r.added_qubits).sum()
    }

    /// Largest per-round growth of any single bare representative.
    pub fn max_bare_growth(&self) -> usize {
        let mut best = 0;
        for round in 1..=self.rounds() {
            let recs: Vec<&PhaseRecord> = self
                .records
                .iter()
                .filter(|r| r.round == round && r.phase == Phase::Concatenate)
                .collect();
            let k = recs.first().map_or(0, |r| r.bare_growth.len());
            for l in 0..k {
                best = best.max(recs.iter().map(|r| r.bare_growth[l]).sum());
            }
        }
        best
    }
}

/// Worst-case number of qubits added over `d` distance-growth rounds for
/// `k` logicals with intersection constant `c`.
pub fn scaling_envelope(k: u64, d: u64, c: u64) -> u64 {
    k * d * d + k * d * (c + 1) + c * k * k * d
}

/// Grow the `kind` distance once: concatenate, reduce and shift for every
/// logical in ascending order.
pub fn grow_round(
    mut code: CssSubsystemCode,
    kind: PauliType,
    cfg: &GrowthConfig,
    round: usize,
    bounds: &mut DistanceBounds,
    log: &mut Vec<PhaseRecord>,
) -> Result<CssSubsystemCode, GrowError> {
    for j in 0..code.k() {
        let n0 = code.n();
        let (c, rec) = concatenate_support(code, j, kind)?;
        bounds.refresh(&c);
        let base = PhaseRecord {
            round,
            kind,
            logical: j,
            phase: Phase::Concatenate,
            n: c.n(),
            added_qubits: c.n() - n0,
            support: rec.support.clone(),
            even_overlap: Some(rec.even_overlap),
            bare_growth: rec.bare_growth.clone(),
            pairs: Vec::new(),
            shifted: Vec::new(),
            profile: c.weight_profile(),
            bounds: bounds.clone(),
        };
        log.push(base.clone());
        let (c, pairs) = nonisometric_reduce(c, &rec, cfg.w(kind))?;
        log.push(PhaseRecord {
            phase: Phase::Reduce,
            added_qubits: 0,
            support: Vec::new(),
            even_overlap: None,
            bare_growth: Vec::new(),
            pairs,
            profile: c.weight_profile(),
            ..base.clone()
        });
        let (c, shifted) = shift_checks(c, &rec, cfg.q(kind.dual()), cfg.shift_count)?;
        log.push(PhaseRecord {
            phase: Phase::Shift,
            added_qubits: 0,
            support: Vec::new(),
            even_overlap: None,
            bare_growth: Vec::new(),
            shifted,
            profile: c.weight_profile(),
            ..base
        });
        code = c;
    }
    bounds.bump(kind);
    bounds.refresh(&code);
    if let Some(last) = log.last_mut() {
        last.bounds = bounds.clone();
    }
    let profile = code.weight_profile();
    if !cfg.admits(&profile) {
        return Err(GrowError::CapViolation { round, profile });
    }
    Ok(code)
}

fn check_seed(code: &CssSubsystemCode, cfg: &GrowthConfig) -> Result<DistanceBounds, GrowError> {
    cfg.validate()?;
    let report = code.validate();
    if !report.is_valid() {
        return Err(GrowError::InvalidSeed(report.to_string()));
    }
    if code.k() == 0 {
        return Err(GrowError::NoLogicals);
    }
    let profile = code.weight_profile();
    if !cfg.admits(&profile) {
        return Err(GrowError::SeedExceedsCaps { profile });
    }
    let exact = |kind: PauliType| {
        let cap = code.bare(kind).iter().map(|v| v.weight()).min().unwrap_or(code.n());
        dressed_distance(code, kind, cap).unwrap_or(cap)
    };
    Ok(DistanceBounds::new(exact(PauliType::X), exact(PauliType::Z), code))
}

fn run(
    seed: &CssSubsystemCode,
    cfg: &GrowthConfig,
    cycles: usize,
) -> Result<(CssSubsystemCode, GrowthLog), GrowError> {
    let mut bounds = check_seed(seed, cfg)?;
    let mut log = GrowthLog {
        seed_n: seed.n(),
        seed_bounds: bounds.clone(),
        records: Vec::new(),
    };
    let mut code = seed.clone();
    let mut round = 0;
    for _ in 0..cycles {
        for kind in round_schedule(cfg.m_x, cfg.m_z) {
            round += 1;
            code = grow_round(code, kind, cfg, round, &mut bounds, &mut log.records)?;
        }
    }
    Ok((code, log))
}

/// One cycle of growth rounds.
pub fn grow_iteration(
    code: &CssSubsystemCode,
    cfg: &GrowthConfig,
) -> Result<(CssSubsystemCode, GrowthLog), GrowError> {
    run(code, cfg, 1)
}

/// `cfg.iterations` cycles of growth rounds.
pub fn grow(
    code: &CssSubsystemCode,
    cfg: &GrowthConfig,
) -> Result<(CssSubsystemCode, GrowthLog), GrowError> {
    run(code, cfg, cfg.iterations)
}
