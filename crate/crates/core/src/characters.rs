//! q-characters: the trace of `diag(1, q)`, computed by basis enumeration
//! and by closed formulas, and the polynomial identities relating them.

use serde::Serialize;

use crate::arith::IntPoly;
use crate::combinatorics::{enumerate_increasing, enumerate_semistandard, enumerate_weakly_increasing};
use crate::phi::domain_desc;
use crate::spaces::{Space, SpaceDesc};

/// Polynomial in `q` with integer coefficients.
pub type QPoly = IntPoly;

/// `Σ q^{Y-degree}` over the enumerated canonical basis.
pub fn qchar(space: &Space) -> QPoly {
    let top = space.degrees().iter().copied().max().unwrap_or(0) as usize;
    let mut coeffs = vec![0i64; top + 1];
    for &deg in space.degrees() {
        coeffs[deg as usize] += 1;
    }
    IntPoly::from_i64s(&coeffs)
}

/// q-character from the descriptor alone: elementary and complete
/// symmetric functions of the inner degrees, no basis enumeration.
pub fn qchar_of_desc(desc: &SpaceDesc) -> QPoly {
    match desc {
        SpaceDesc::Sym(c) => q_integer(*c as usize + 1),
        SpaceDesc::Wedge(r, inner) => power_series(&qchar_of_desc(inner), *r, true),
        SpaceDesc::SymPow(r, inner) => power_series(&qchar_of_desc(inner), *r, false),
        SpaceDesc::Tensor(a, b) => qchar_of_desc(a).mul(&qchar_of_desc(b)),
        SpaceDesc::Det(k) => IntPoly::monomial(1, *k as usize),
    }
}

/// Degree-`r` part of `Π (1 + t q^a)` (elementary) or `Π 1/(1 - t q^a)`
/// (complete), the product running over the multiset encoded by `inner`.
fn power_series(inner: &QPoly, r: usize, elementary: bool) -> QPoly {
    let mut acc = vec![IntPoly::zero(); r + 1];
    acc[0] = IntPoly::constant(1);
    for (a, mult) in inner.coeffs().iter().enumerate() {
        let mult: u64 = mult.try_into().expect("characters have small nonnegative coefficients");
        for _ in 0..mult {
            if elementary {
                for t in (1..=r).rev() {
                    acc[t] = acc[t].add(&acc[t - 1].shift(a));
                }
            } else {
                for t in 1..=r {
                    acc[t] = acc[t].add(&acc[t - 1].shift(a));
                }
            }
        }
    }
    acc.swap_remove(r)
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> QPoly {
    IntPoly::from_i64s(&vec![1; n])
}

/// Gaussian binomial by the q-Pascal rule
/// `[a, b] = [a-1, b-1] + q^b [a-1, b]`.
pub fn qbinom(a: usize, b: usize) -> QPoly {
    if b > a {
        return IntPoly::zero();
    }
    let mut row = vec![IntPoly::constant(1)];
    for n in 1..=a {
        let mut next = vec![IntPoly::zero(); n + 1];
        for k in 0..=n {
            let left = if k > 0 { row[k - 1].clone() } else { IntPoly::zero() };
            let right = if k < n { row[k].shift(k) } else { IntPoly::zero() };
            next[k] = left.add(&right);
        }
        row = next;
    }
    row.swap_remove(b)
}

/// `s_{(M,1^{N-1})}(1, q, ..., q^d)` by enumerating semistandard tableaux:
/// a strictly increasing first column and a weakly increasing first row
/// sharing the corner entry.
pub fn schur_hook_principal(m: usize, n: usize, d: u32) -> QPoly {
    assert!(m >= 1 && n >= 1, "hook shapes need M, N >= 1");
    let mut coeffs: Vec<i64> = Vec::new();
    for column in enumerate_increasing(d, n) {
        let corner = column.entries()[0];
        let col_sum = column.sum();
        for row in enumerate_weakly_increasing(d - corner, m - 1) {
            let weight = col_sum as usize + row.iter().map(|&x| (x + corner) as usize).sum::<usize>();
            if coeffs.len() <= weight {
                coeffs.resize(weight + 1, 0);
            }
            coeffs[weight] += 1;
        }
    }
    IntPoly::from_i64s(&coeffs)
}

/// `q^{N(N-1)/2} [N]_q [d+2, N+1]_q`.
pub fn hook_closed_form(n: usize, d: u32) -> QPoly {
    q_integer(n)
        .mul(&qbinom(d as usize + 2, n + 1))
        .shift(n * (n - 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QcharReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// Domain character equals `q^N` times the character of the
    /// semistandard-pair basis.
    pub twist_equal: bool,
    /// `qchar(Wedge^{N+1} Sym^{d+1} E) = q^{N(N+1)/2} [d+2, N+1]_q`.
    pub qbinomial_equal: bool,
}

impl QcharReport {
    pub fn all_equal(&self) -> bool {
        self.equal && self.twist_equal && self.qbinomial_equal
    }
}

/// Character of the semistandard-pair basis: `Σ q^{|i| + j}`.
pub fn pair_character(n: usize, d: u32) -> QPoly {
    let mut coeffs: Vec<i64> = Vec::new();
    for p in enumerate_semistandard(n, d) {
        let w = p.weight() as usize;
        if coeffs.len() <= w {
            coeffs.resize(w + 1, 0);
        }
        coeffs[w] += 1;
    }
    IntPoly::from_i64s(&coeffs)
}

pub fn verify_qchar_identity(n: usize, d: u32) -> QcharReport {
    let lhs = hook_closed_form(n, d);
    let rhs = schur_hook_principal(2, n, d);
    let domain = qchar_of_desc(&domain_desc(n, d));
    let twist_equal = domain == pair_character(n, d).shift(n);
    let wedge = qchar_of_desc(&SpaceDesc::wedge(n + 1, SpaceDesc::Sym(d + 1)));
    let qbinomial_equal = wedge == qbinom(d as usize + 2, n + 1).shift(n * (n + 1) / 2);
    QcharReport {
        n,
        d,
        equal: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        twist_equal,
        qbinomial_equal,
    }
}
