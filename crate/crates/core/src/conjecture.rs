//! Scanner for the hook generalisation
//! `Wedge^{M-1} Sym^{M+N-3}E (x) Wedge^{M+N-1} Sym^{M+d-1}E ≅ Δ^{(M,1^{N-1})} Sym^d E`:
//! character equality plus Jordan types of `U_1` over small prime fields.
//! Equal fingerprints are a necessary condition only.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Field, PrimeField, Ring};
use crate::characters::{qchar_of_desc, schur_hook_principal, QPoly};
use crate::error::{Error, Result};
use crate::linalg::{kernel, span_rank, Echelon, LinearMap, SparseVec};
use crate::spaces::{sort_with_sign, unipotent, Label, Space, SpaceDesc};

pub const CONVENTION: &str = "Delta^(M,1^(N-1))V = ker(Wedge^N V (x) Sym^(M-1) V -> Wedge^(N+1) V (x) Sym^(M-2) V), \
v1^..^vN (x) w1..w(M-1) -> sum_t v1^..^vN^wt (x) prod_(s!=t) ws; Wedge^N V for M=1; V = Sym^d E";

pub const NOTE: &str = "necessary-condition check";

pub const DEFAULT_DIM_CAP: usize = 5000;

/// Block sizes of a unipotent operator, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JordanType(pub Vec<usize>);

impl JordanType {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Left-hand side of the conjectured isomorphism. For `M = 1` the first
/// factor is `Wedge^0`, represented by the trivial `Wedge^0 Sym^0 E`.
pub fn lhs_desc(m: usize, n: usize, d: u32) -> SpaceDesc {
    let first = if m == 1 {
        SpaceDesc::wedge(0, SpaceDesc::Sym(0))
    } else {
        SpaceDesc::wedge(m - 1, SpaceDesc::Sym((m + n - 3) as u32))
    };
    SpaceDesc::tensor(
        first,
        SpaceDesc::wedge(m + n - 1, SpaceDesc::Sym(m as u32 + d - 1)),
    )
}

/// Source of the map whose kernel is the hook Schur functor (the whole
/// space for `M = 1`).
pub fn hook_source_desc(m: usize, n: usize, d: u32) -> SpaceDesc {
    let v = SpaceDesc::Sym(d);
    if m == 1 {
        SpaceDesc::wedge(n, v)
    } else {
        SpaceDesc::tensor(SpaceDesc::wedge(n, v.clone()), SpaceDesc::sym_pow(m - 1, v))
    }
}

fn hook_target_desc(m: usize, n: usize, d: u32) -> SpaceDesc {
    let v = SpaceDesc::Sym(d);
    SpaceDesc::tensor(SpaceDesc::wedge(n + 1, v.clone()), SpaceDesc::sym_pow(m - 2, v))
}

/// Characters of both sides, the right side shifted by `q^t` so lowest
/// degrees agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QcharComparison {
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub shift: i64,
    pub equal: bool,
}

pub fn conjecture_qchar(m: usize, n: usize, d: u32) -> QcharComparison {
    let lhs = qchar_of_desc(&lhs_desc(m, n, d));
    let rhs = schur_hook_principal(m, n, d);
    let (lo_l, lo_r) = (lhs.low_degree(), rhs.low_degree());
    let shift = match (lo_l, lo_r) {
        (Some(a), Some(b)) => a as i64 - b as i64,
        _ => 0,
    };
    let equal = if shift >= 0 {
        lhs == rhs.shift(shift as usize)
    } else {
        lhs.shift((-shift) as usize) == rhs
    };
    QcharComparison { lhs, rhs, shift, equal }
}

/// The map `v_1∧...∧v_N (x) w_1...w_{M-1} -> Σ_t v_1∧...∧v_N∧w_t (x) Π_{s≠t} w_s`.
pub fn hook_map<R: Ring>(ring: &R, source: &Space, target: &Space) -> LinearMap<R> {
    let cols = source
        .labels()
        .iter()
        .map(|label| {
            let Label::Tensor(w, s) = label else { unreachable!("hook source labels are tensors") };
            let (Label::Wedge(wedge), Label::SymPow(word)) = (&**w, &**s) else { unreachable!() };
            let mut col = Vec::new();
            for t in 0..word.len() {
                let mut all = wedge.clone();
                all.push(word[t]);
                let Some(sign) = sort_with_sign(&mut all) else { continue };
                let mut rest = word.clone();
                rest.remove(t);
                let row = target
                    .index_of(&Label::tensor(Label::Wedge(all), Label::SymPow(rest)))
                    .expect("target label");
                col.push((row, ring.from_i64(sign)));
            }
            col
        })
        .collect();
    LinearMap::from_columns(ring.clone(), target.dim(), cols).expect("shape")
}

/// The hook Schur space over `field`: ambient space and a kernel basis.
#[derive(Debug, Clone)]
pub struct HookSpace<F: Field> {
    pub source: Arc<Space>,
    pub basis: Vec<SparseVec<F::Elem>>,
}

pub fn hook_schur_space<F: Field>(field: &F, m: usize, n: usize, d: u32) -> Result<HookSpace<F>> {
    if m == 0 || n == 0 {
        return Err(Error::ParameterMismatch("M and N must be at least 1".into()));
    }
    let source = Space::build(&hook_source_desc(m, n, d));
    let basis = if m == 1 {
        (0..source.dim()).map(|i| vec![(i, field.one())]).collect()
    } else {
        let target = Space::build(&hook_target_desc(m, n, d));
        kernel(&hook_map(field, &source, &target))?
    };
    Ok(HookSpace { source, basis })
}

/// Jordan type of a unipotent `u` on the `u`-stable span of `basis`, from
/// the ranks of `(u - 1)^m` applied to the basis.
pub fn jordan_type<F: Field>(field: &F, u: &LinearMap<F>, basis: &[SparseVec<F::Elem>]) -> Result<JordanType> {
    let mut ech = Echelon::new(field.clone());
    for b in basis {
        if ech.insert(b, &[]).is_some() {
            return Err(Error::Consistency("basis vectors are dependent".into()));
        }
    }
    for b in basis {
        if !ech.contains(&u.apply(b)) {
            return Err(Error::Consistency("span is not stable under the operator".into()));
        }
    }
    let nil = u.sub(&LinearMap::identity(field.clone(), u.rows()))?;
    let mut ranks = vec![basis.len()];
    let mut cur: Vec<SparseVec<F::Elem>> = basis.to_vec();
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > basis.len() + 1 {
            return Err(Error::Consistency("operator is not unipotent".into()));
        }
        cur = cur.iter().map(|v| nil.apply(v)).collect();
        ranks.push(span_rank(field, &cur));
    }
    // at_least[m] = number of blocks of size >= m
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for size in (1..=at_least.len()).rev() {
        let exactly = at_least[size - 1] - at_least.get(size).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(size, exactly));
    }
    Ok(JordanType(parts))
}

/// Jordan type of `U_1 = (1 1; 0 1)` on a whole space.
pub fn jordan_fingerprint(space: &Space, field: &PrimeField) -> Result<JordanType> {
    let u = space.group_matrix(field, &unipotent(field, field.one()));
    let basis: Vec<_> = (0..space.dim()).map(|i| vec![(i, field.one())]).collect();
    jordan_type(field, &u, &basis)
}

pub fn hook_fingerprint(hook: &HookSpace<PrimeField>, field: &PrimeField) -> Result<JordanType> {
    let u = hook.source.group_matrix(field, &unipotent(field, field.one()));
    jordan_type(field, &u, &hook.basis)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub p: u32,
    pub dim_rhs: usize,
    pub lhs: JordanType,
    pub rhs: JordanType,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub d: u32,
    pub dim_lhs: usize,
    /// `s_{(M,1^{N-1})}(1, ..., 1)`, the expected dimension of the right side.
    pub dim_expected: usize,
    pub qchar_equal: bool,
    pub fingerprints: Vec<Fingerprint>,
    pub convention: String,
    pub note: String,
    /// Set when the tuple was skipped or the construction disagrees with the
    /// expected dimension.
    pub notice: Option<String>,
}

impl ConjectureReport {
    /// Every comparison came out equal and nothing was skipped.
    pub fn all_equal(&self) -> bool {
        self.notice.is_none() && self.qchar_equal && self.fingerprints.iter().all(|f| f.equal && f.dim_rhs == self.dim_lhs)
    }

    pub fn rows(&self) -> Vec<ScanRow> {
        if self.fingerprints.is_empty() {
            return vec![ScanRow {
                m: self.m,
                n: self.n,
                d: self.d,
                p: None,
                dim_lhs: self.dim_lhs,
                dim_rhs: None,
                qchar_equal: self.qchar_equal,
                jordan_lhs: String::new(),
                jordan_rhs: String::new(),
                jordan_equal: None,
                convention: self.convention.clone(),
                notice: self.notice.clone().unwrap_or_default(),
            }];
        }
        self.fingerprints
            .iter()
            .map(|f| ScanRow {
                m: self.m,
                n: self.n,
                d: self.d,
                p: Some(f.p),
                dim_lhs: self.dim_lhs,
                dim_rhs: Some(f.dim_rhs),
                qchar_equal: self.qchar_equal,
                jordan_lhs: f.lhs.to_string(),
                jordan_rhs: f.rhs.to_string(),
                jordan_equal: Some(f.equal),
                convention: self.convention.clone(),
                notice: self.notice.clone().unwrap_or_default(),
            })
            .collect()
    }
}

/// One CSV line: a tuple at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub d: u32,
    pub p: Option<u32>,
    pub dim_lhs: usize,
    pub dim_rhs: Option<usize>,
    pub qchar_equal: bool,
    pub jordan_lhs: String,
    pub jordan_rhs: String,
    pub jordan_equal: Option<bool>,
    pub convention: String,
    pub notice: String,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub d: Vec<u32>,
    pub primes: Vec<u32>,
    pub workers: usize,
    pub dim_cap: usize,
}

pub fn evaluate(m: usize, n: usize, d: u32, primes: &[u32], dim_cap: usize) -> Result<ConjectureReport> {
    if m == 0 || n == 0 {
        return Err(Error::ParameterMismatch("M and N must be at least 1".into()));
    }
    let fields = primes
        .iter()
        .map(|&p| PrimeField::new(p as u64))
        .collect::<Result<Vec<_>>>()?;
    let lhs = lhs_desc(m, n, d);
    let chars = conjecture_qchar(m, n, d);
    let dim_expected = usize::try_from(chars.rhs.eval_int(&1.into())).expect("dimension fits");
    let mut report = ConjectureReport {
        m,
        n,
        d,
        dim_lhs: lhs.dimension(),
        dim_expected,
        qchar_equal: chars.equal,
        fingerprints: Vec::new(),
        convention: CONVENTION.to_string(),
        note: NOTE.to_string(),
        notice: None,
    };
    let biggest = lhs.dimension().max(hook_source_desc(m, n, d).dimension());
    if biggest > dim_cap {
        report.notice = Some(Error::DimensionCap { dim: biggest, cap: dim_cap }.to_string());
        return Ok(report);
    }
    let lhs_space = Space::build(&lhs);
    for field in &fields {
        let hook = hook_schur_space(field, m, n, d)?;
        let lhs_type = jordan_fingerprint(&lhs_space, field)?;
        let rhs_type = hook_fingerprint(&hook, field)?;
        if hook.basis.len() != dim_expected && report.notice.is_none() {
            report.notice = Some(format!(
                "convention failure: kernel has dimension {} over F_{}, tableau count is {dim_expected}",
                hook.basis.len(),
                field.modulus()
            ));
        }
        report.fingerprints.push(Fingerprint {
            p: field.modulus(),
            dim_rhs: hook.basis.len(),
            equal: lhs_type == rhs_type,
            lhs: lhs_type,
            rhs: rhs_type,
        });
    }
    Ok(report)
}

/// Runs every `(M, N, d)` of the grid on `workers` threads; reports come
/// back in grid order.
pub fn scan(config: &ScanConfig) -> Result<Vec<ConjectureReport>> {
    for &p in &config.primes {
        PrimeField::new(p as u64)?;
    }
    let mut tuples = Vec::new();
    for &m in &config.m {
        for &n in &config.n {
            for &d in &config.d {
                tuples.push((m, n, d));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::ParameterMismatch(e.to_string()))?;
    pool.install(|| {
        tuples
            .par_iter()
            .map(|&(m, n, d)| evaluate(m, n, d, &config.primes, config.dim_cap))
            .collect()
    })
}
