//! `Δ^{(2,1^{N-1})} Sym^d E` realised as the kernel of
//! `μ_N : Wedge^N Sym^d E (x) Sym^d E -> Wedge^{N+1} Sym^d E`, with its
//! basis of `F_Δ` vectors indexed by semistandard pairs.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{Field, Rationals, Ring};
use crate::combinatorics::{enumerate_semistandard, MultiIndex, SemistandardPair};
use crate::error::{Error, Result};
use crate::linalg::{normalize, rank, span_rank, Echelon, LinearMap, SparseVec};
use crate::spaces::{mu_n_matrix, mu_n_spaces, Label, ModuleElement, Space};

/// Ambient label of `F(i, j) = F_∧(i) (x) X^{d-j} Y^j`.
pub fn f_label(i: &[u32], j: u32) -> Label {
    Label::tensor(Label::Wedge(i.to_vec()), Label::Mono(j))
}

fn split_label(label: &Label) -> (&[u32], u32) {
    match label {
        Label::Tensor(w, m) => match (&**w, &**m) {
            (Label::Wedge(i), Label::Mono(j)) => (i, *j),
            _ => unreachable!("ambient labels are wedge (x) monomial"),
        },
        _ => unreachable!("ambient labels are wedge (x) monomial"),
    }
}

/// `Δ^{(2,1^{N-1})} Sym^d E` inside its ambient space.
#[derive(Debug, Clone)]
pub struct DeltaSpace {
    n: usize,
    d: u32,
    ambient: Arc<Space>,
    codomain: Arc<Space>,
    pairs: Vec<SemistandardPair>,
    pair_index: HashMap<SemistandardPair, usize>,
    /// Ambient support of each `F_Δ` vector; all coefficients are 1.
    supports: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisEntry {
    pub pair: String,
    pub support: Vec<(String, String)>,
}

impl DeltaSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn ambient(&self) -> &Arc<Space> {
        &self.ambient
    }

    /// `Wedge^{N+1} Sym^d E`, the target of `μ_N`.
    pub fn mu_codomain(&self) -> &Arc<Space> {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[SemistandardPair] {
        &self.pairs
    }

    pub fn index_of_pair(&self, p: &SemistandardPair) -> Option<usize> {
        self.pair_index.get(p).copied()
    }

    pub fn support(&self, t: usize) -> &[usize] {
        &self.supports[t]
    }

    pub fn mu_matrix<R: Ring>(&self, ring: &R) -> LinearMap<R> {
        mu_n_matrix(ring, &self.ambient, &self.codomain).expect("ambient and codomain match")
    }

    /// The `F_Δ` vectors as columns of an `ambient x dim` matrix.
    pub fn inclusion<R: Ring>(&self, ring: &R) -> LinearMap<R> {
        let cols = self
            .supports
            .iter()
            .map(|s| s.iter().map(|&i| (i, ring.one())).collect())
            .collect();
        LinearMap::from_columns(ring.clone(), self.ambient.dim(), cols).expect("shape")
    }

    pub fn f_delta_element<R: Ring>(&self, ring: &R, t: usize) -> ModuleElement<R> {
        let coeffs = self.supports[t].iter().map(|&i| (i, ring.one())).collect();
        ModuleElement::from_sparse(self.ambient.clone(), coeffs)
    }

    /// Checks over `field` that every `F_Δ` vector lies in `ker μ_N`, that
    /// they are independent, and that they span the kernel computed by
    /// elimination.
    pub fn verify_basis<F: Field>(&self, field: &F) -> Result<()> {
        let mu = self.mu_matrix(field);
        let inc = self.inclusion(field);
        let image = mu.compose(&inc)?;
        if let Some((_, c, _)) = image.first_nonzero() {
            return Err(Error::Consistency(format!(
                "F_Delta{} is not in the kernel over {}",
                self.pairs[c],
                field.kind()
            )));
        }
        let independent = span_rank(field, inc.columns());
        if independent != self.dim() {
            return Err(Error::Consistency(format!(
                "F_Delta vectors have rank {independent}, expected {} over {}",
                self.dim(),
                field.kind()
            )));
        }
        let kernel_dim = self.ambient.dim() - rank(&mu);
        if kernel_dim != self.dim() {
            return Err(Error::Consistency(format!(
                "ker mu_N has dimension {kernel_dim}, F_Delta spans {} over {}",
                self.dim(),
                field.kind()
            )));
        }
        Ok(())
    }

    /// Coordinates of `v ∈ ker μ_N` in the `F_Δ` basis, as
    /// `(pair index, coefficient)` sorted by pair index.
    ///
    /// Within a content class with distinct entries `a_0 < ... < a_N`, the
    /// ambient vectors are `F_t = F(a \ a_t, a_t)` and the semistandard ones
    /// satisfy `F_Δ(t) = F_t + F_{t-1}` for `t >= 1`, so the coordinates come
    /// out of a two-term recurrence.
    pub fn express<R: Ring>(&self, ring: &R, v: &ModuleElement<R>) -> Result<SparseVec<R::Elem>> {
        if v.space().desc() != self.ambient.desc() {
            return Err(Error::WrongSpace(format!(
                "expected an element of {}, got {}",
                self.ambient.desc(),
                v.space().desc()
            )));
        }
        let mut classes: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
        for (idx, _) in v.coeffs() {
            let (i, j) = split_label(self.ambient.label(*idx));
            let mut content = i.to_vec();
            content.push(j);
            content.sort_unstable();
            classes.insert(content, ());
        }
        let mut out = Vec::new();
        for content in classes.keys() {
            if let Some(r) = content.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]) {
                let mut i = content.clone();
                let pos = i.iter().position(|&x| x == r).expect("repeated value present");
                i.remove(pos);
                let label = f_label(&i, r);
                let pair = SemistandardPair::new(i, r, self.d).map_err(|_| Error::NotInKernel)?;
                out.push((self.pair_index[&pair], v.coeff(ring, &label)));
                continue;
            }
            let member = |t: usize| {
                let mut i = content.clone();
                let j = i.remove(t);
                (i, j)
            };
            let value = |t: usize| {
                let (i, j) = member(t);
                v.coeff(ring, &f_label(&i, j))
            };
            let n = self.n;
            let mut c = ring.zero();
            for t in 1..=n {
                c = ring.sub(&value(t - 1), &c);
                let (i, j) = member(t);
                let pair = SemistandardPair::from_parts_unchecked(i, j);
                out.push((self.pair_index[&pair], c.clone()));
            }
            if value(n) != c {
                return Err(Error::NotInKernel);
            }
        }
        let coords = normalize(ring, out);
        let rebuilt = self.reconstruct(ring, &coords);
        if rebuilt.coeffs() != v.coeffs() {
            return Err(Error::NotInKernel);
        }
        Ok(coords)
    }

    /// `Σ coeff · F_Δ(p)`.
    pub fn reconstruct<R: Ring>(&self, ring: &R, coords: &[(usize, R::Elem)]) -> ModuleElement<R> {
        let terms = coords
            .iter()
            .flat_map(|(t, c)| self.supports[*t].iter().map(move |&i| (i, c.clone())));
        ModuleElement::from_sparse(self.ambient.clone(), normalize(ring, terms))
    }

    /// Coordinates by global elimination over a field; `None` off the span.
    pub fn express_by_elimination<F: Field>(&self, field: &F, v: &ModuleElement<F>) -> Option<SparseVec<F::Elem>> {
        let inc = self.inclusion(field);
        let mut ech = Echelon::new(field.clone());
        for (t, col) in inc.columns().iter().enumerate() {
            ech.insert(col, &[(t, field.one())]);
        }
        ech.solve(v.coeffs())
    }

    pub fn basis_dump(&self) -> Vec<BasisEntry> {
        self.pairs
            .iter()
            .zip(&self.supports)
            .map(|(p, s)| BasisEntry {
                pair: p.to_string(),
                support: s
                    .iter()
                    .map(|&i| (self.ambient.label(i).to_string(), "1".to_string()))
                    .collect(),
            })
            .collect()
    }
}

/// `F(i, j)` as an element of the ambient space of `(N, d)`.
pub fn f_vec<R: Ring>(ring: &R, ambient: &Arc<Space>, i: &[u32], j: u32) -> Result<ModuleElement<R>> {
    ModuleElement::basis(ring, ambient.clone(), &f_label(i, j))
}

/// `F(i,j)` if `j` occurs in `i`, else `F(i,j) + F(P(i,j))`.
pub fn f_delta_vec<R: Ring>(ring: &R, ambient: &Arc<Space>, p: &SemistandardPair) -> Result<ModuleElement<R>> {
    let mut terms = vec![(f_label(p.i().entries(), p.j()), ring.one())];
    if !p.is_fixed() {
        let (i, j) = p.neighbour();
        terms.push((f_label(i.entries(), j), ring.one()));
    }
    ModuleElement::from_terms(ring, ambient.clone(), terms)
}

/// Builds the space and verifies its basis over Q.
pub fn delta_basis(n: usize, d: u32) -> Result<DeltaSpace> {
    let space = delta_space_unchecked(n, d)?;
    space.verify_basis(&Rationals)?;
    Ok(space)
}

/// Builds the space without the rank checks.
pub fn delta_space_unchecked(n: usize, d: u32) -> Result<DeltaSpace> {
    if n == 0 {
        return Err(Error::ParameterMismatch("N must be at least 1".into()));
    }
    let (ambient, codomain) = mu_n_spaces(n, d);
    let pairs = enumerate_semistandard(n, d);
    let pair_index = pairs.iter().cloned().enumerate().map(|(t, p)| (p, t)).collect();
    let supports = pairs
        .iter()
        .map(|p| {
            let mut s = vec![ambient.index_of(&f_label(p.i().entries(), p.j())).expect("valid pair")];
            if !p.is_fixed() {
                let (i, j) = p.neighbour();
                s.push(ambient.index_of(&f_label(i.entries(), j)).expect("valid neighbour"));
            }
            s.sort_unstable();
            s
        })
        .collect();
    Ok(DeltaSpace {
        n,
        d,
        ambient,
        codomain,
        pairs,
        pair_index,
        supports,
    })
}

/// Validated `F(i, j)` label for `(N, d)`.
pub fn checked_f_label(n: usize, d: u32, i: Vec<u32>, j: u32) -> Result<Label> {
    let i = MultiIndex::strictly_increasing(i, d)?;
    if i.len() != n {
        return Err(Error::ParameterMismatch(format!("index {i} does not have length {n}")));
    }
    if j > d {
        return Err(Error::ExponentOutOfRange { exponent: j, cap: d });
    }
    Ok(f_label(i.entries(), j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Integers, PrimeField};
    use crate::spaces::mu_n;
    use num_bigint::BigInt;

    fn pair(i: &[u32], j: u32, d: u32) -> SemistandardPair {
        SemistandardPair::new(i.to_vec(), j, d).unwrap()
    }

    #[test]
    fn f_delta_examples() {
        let ds = delta_space_unchecked(3, 5).unwrap();
        let v = f_delta_vec(&Integers, ds.ambient(), &pair(&[0, 2, 5], 3, 5)).unwrap();
        let labels: Vec<String> = v.terms().map(|(l, _)| l.to_string()).collect();
        assert_eq!(labels, ["(0,2,5)|3", "(0,3,5)|2"]);
        assert_eq!(v.y_degree(), Some(10));

        let ds2 = delta_space_unchecked(2, 4).unwrap();
        let w = f_delta_vec(&Integers, ds2.ambient(), &pair(&[0, 2], 2, 4)).unwrap();
        assert_eq!(w.coeffs().len(), 1);
    }

    #[test]
    fn all_f_delta_in_kernel() {
        let ds = delta_space_unchecked(2, 4).unwrap();
        assert_eq!(ds.dim(), 40);
        for t in 0..ds.dim() {
            let v = ds.f_delta_element(&Integers, t);
            assert!(mu_n(&Integers, &v, ds.mu_codomain()).unwrap().is_zero());
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(delta_basis(3, 5).unwrap().dim(), 105);
        assert_eq!(delta_basis(1, 2).unwrap().dim(), 6);
        for d in 0..5 {
            assert_eq!(delta_basis(d as usize + 1, d).unwrap().dim(), d as usize + 1);
        }
        assert_eq!(delta_basis(4, 1).unwrap().dim(), 0);
    }

    #[test]
    fn basis_over_small_primes() {
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for (n, d) in [(1, 3), (2, 4), (3, 4)] {
                delta_space_unchecked(n, d).unwrap().verify_basis(&f).unwrap();
            }
        }
    }

    #[test]
    fn express_round_trip() {
        let ds = delta_space_unchecked(3, 4).unwrap();
        for t in 0..ds.dim() {
            let v = ds.f_delta_element(&Integers, t);
            assert_eq!(ds.express(&Integers, &v).unwrap(), vec![(t, BigInt::from(1))]);
        }
        let zero = ModuleElement::zero(ds.ambient().clone());
        assert!(ds.express(&Integers, &zero).unwrap().is_empty());
    }

    #[test]
    fn express_rejects_non_kernel() {
        let ds = delta_space_unchecked(2, 3).unwrap();
        let v = f_vec(&Integers, ds.ambient(), &[0, 2], 3).unwrap();
        assert_eq!(ds.express(&Integers, &v), Err(Error::NotInKernel));
        let w = f_vec(&Integers, ds.ambient(), &[1, 2], 0).unwrap();
        assert_eq!(ds.express(&Integers, &w), Err(Error::NotInKernel));
    }

    #[test]
    fn invalid_f_labels() {
        assert!(checked_f_label(2, 4, vec![2, 1], 0).is_err());
        assert!(checked_f_label(2, 4, vec![1, 2], 5).is_err());
        assert!(checked_f_label(3, 4, vec![1, 2], 0).is_err());
        assert_eq!(checked_f_label(3, 5, vec![0, 2, 5], 3).unwrap().to_string(), "(0,2,5)|3");
    }
}
