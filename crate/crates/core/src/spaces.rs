//! Polynomial representations of GL2 built from `E = <X, Y>` with explicit
//! canonical bases, and the matrices of the group and Lie algebra actions on
//! them.
//!
//! Convention for a 2x2 matrix `g = (g11 g12; g21 g22)`:
//! `g.X = g11 X + g21 Y` and `g.Y = g12 X + g22 Y`, so the columns of `g`
//! are the images of `X` and `Y`. With this convention `e = (0 1; 0 0)`
//! acts as `X d/dY` and `f = (0 0; 1 0)` as `Y d/dX`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{binomial_usize, Ring};
use crate::combinatorics::{enumerate_increasing, enumerate_weakly_increasing, MultiIndex};
use crate::error::{Error, Result};
use crate::linalg::{normalize, LinearMap, SparseVec};

/// Formal description of a space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceDesc {
    /// `Sym^c E`, basis `X^{c-a} Y^a`.
    Sym(u32),
    /// `Wedge^r V`.
    Wedge(usize, Box<SpaceDesc>),
    /// `Sym^r V` for an arbitrary space `V`.
    SymPow(usize, Box<SpaceDesc>),
    Tensor(Box<SpaceDesc>, Box<SpaceDesc>),
    /// `det^k`.
    Det(u32),
}

impl SpaceDesc {
    pub fn wedge(r: usize, inner: SpaceDesc) -> Self {
        SpaceDesc::Wedge(r, Box::new(inner))
    }

    pub fn sym_pow(r: usize, inner: SpaceDesc) -> Self {
        SpaceDesc::SymPow(r, Box::new(inner))
    }

    pub fn tensor(a: SpaceDesc, b: SpaceDesc) -> Self {
        SpaceDesc::Tensor(Box::new(a), Box::new(b))
    }

    /// Dimension by formula, independent of basis enumeration.
    pub fn dimension(&self) -> usize {
        match self {
            SpaceDesc::Sym(c) => *c as usize + 1,
            SpaceDesc::Wedge(r, v) => binomial_usize(v.dimension(), *r),
            SpaceDesc::SymPow(r, v) => {
                let n = v.dimension();
                if n == 0 {
                    usize::from(*r == 0)
                } else {
                    binomial_usize(n + r - 1, *r)
                }
            }
            SpaceDesc::Tensor(a, b) => a.dimension() * b.dimension(),
            SpaceDesc::Det(_) => 1,
        }
    }

    /// Degree as a polynomial functor: the scalar matrix `aI` acts by
    /// `a^degree`.
    pub fn functor_degree(&self) -> u32 {
        match self {
            SpaceDesc::Sym(c) => *c,
            SpaceDesc::Wedge(r, v) | SpaceDesc::SymPow(r, v) => *r as u32 * v.functor_degree(),
            SpaceDesc::Tensor(a, b) => a.functor_degree() + b.functor_degree(),
            SpaceDesc::Det(k) => 2 * k,
        }
    }
}

impl fmt::Display for SpaceDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDesc::Sym(c) => write!(f, "Sym^{c}E"),
            SpaceDesc::Wedge(r, v) => write!(f, "Wedge^{r}({v})"),
            SpaceDesc::SymPow(r, v) => write!(f, "Sym^{r}({v})"),
            SpaceDesc::Tensor(a, b) => write!(f, "{a} (x) {b}"),
            SpaceDesc::Det(k) => write!(f, "det^{k}"),
        }
    }
}

/// Canonical basis label. Wedge and symmetric-power labels hold indices
/// into the basis of the inner space; for an inner `Sym^c E` these are the
/// Y-exponents themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Mono(u32),
    Wedge(Vec<u32>),
    SymPow(Vec<u32>),
    Tensor(Box<Label>, Box<Label>),
    Det,
}

impl Label {
    pub fn tensor(a: Label, b: Label) -> Self {
        Label::Tensor(Box::new(a), Box::new(b))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, open: char, v: &[u32], close: char) -> fmt::Result {
    write!(f, "{open}")?;
    for (t, x) in v.iter().enumerate() {
        if t > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "{close}")
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Mono(a) => write!(f, "{a}"),
            Label::Wedge(v) => write_list(f, '(', v, ')'),
            Label::SymPow(v) => write_list(f, '[', v, ']'),
            Label::Tensor(a, b) => write!(f, "{a}|{b}"),
            Label::Det => write!(f, "det"),
        }
    }
}

#[derive(Debug)]
enum Node {
    Sym(u32),
    Wedge(Arc<Space>),
    SymPow(Arc<Space>),
    Tensor(Arc<Space>, Arc<Space>),
    Det(u32),
}

/// A space with its enumerated canonical basis.
#[derive(Debug)]
pub struct Space {
    desc: SpaceDesc,
    node: Node,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    degrees: Vec<u32>,
}

/// Sorts `v` in place; returns the sign of the sorting permutation, or
/// `None` if two entries coincide.
pub fn sort_with_sign(v: &mut [u32]) -> Option<i64> {
    let mut sign = 1;
    // insertion sort, counting transpositions
    for a in 1..v.len() {
        let mut b = a;
        while b > 0 && v[b - 1] > v[b] {
            v.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Normal form of `X^{c-a_1}Y^{a_1} ∧ ... ∧ X^{c-a_r}Y^{a_r}`: `None` when a
/// factor repeats (the wedge vanishes), else the sorted label and the sign.
pub fn wedge_normalize(factors: &[u32], c: u32) -> Result<Option<(MultiIndex, i64)>> {
    if let Some(&bad) = factors.iter().find(|&&a| a > c) {
        return Err(Error::ExponentOutOfRange { exponent: bad, cap: c });
    }
    let mut v = factors.to_vec();
    Ok(sort_with_sign(&mut v).map(|s| (MultiIndex::from_vec_unchecked(v), s)))
}

/// Which generator of sl2 to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieOp {
    E,
    F,
}

type Partial<E> = BTreeMap<Vec<u32>, E>;

/// `partial ∧ v`, appending `v` as the last factor.
fn wedge_extend<R: Ring>(ring: &R, partial: &Partial<R::Elem>, v: &[(usize, R::Elem)]) -> Partial<R::Elem> {
    let mut out: Partial<R::Elem> = BTreeMap::new();
    for (set, a) in partial {
        for (r, b) in v {
            let r = *r as u32;
            let Err(pos) = set.binary_search(&r) else { continue };
            let mut term = ring.mul(a, b);
            if (set.len() - pos) % 2 == 1 {
                term = ring.neg(&term);
            }
            let mut key = set.clone();
            key.insert(pos, r);
            match out.get_mut(&key) {
                Some(slot) => ring.add_assign(slot, &term),
                None => {
                    out.insert(key, term);
                }
            }
        }
    }
    out
}

/// `partial · v` in the symmetric algebra.
fn sym_extend<R: Ring>(ring: &R, partial: &Partial<R::Elem>, v: &[(usize, R::Elem)]) -> Partial<R::Elem> {
    let mut out: Partial<R::Elem> = BTreeMap::new();
    for (multiset, a) in partial {
        for (r, b) in v {
            let r = *r as u32;
            let pos = multiset.partition_point(|&x| x <= r);
            let mut key = multiset.clone();
            key.insert(pos, r);
            let term = ring.mul(a, b);
            match out.get_mut(&key) {
                Some(slot) => ring.add_assign(slot, &term),
                None => {
                    out.insert(key, term);
                }
            }
        }
    }
    out
}

impl Space {
    pub fn build(desc: &SpaceDesc) -> Arc<Space> {
        let (node, labels, degrees) = match desc {
            SpaceDesc::Sym(c) => (
                Node::Sym(*c),
                (0..=*c).map(Label::Mono).collect::<Vec<_>>(),
                (0..=*c).collect::<Vec<_>>(),
            ),
            SpaceDesc::Wedge(r, inner) => {
                let inner = Space::build(inner);
                let n = inner.dim();
                let (labels, degrees) = if n == 0 {
                    if *r == 0 {
                        (vec![Label::Wedge(vec![])], vec![0])
                    } else {
                        (vec![], vec![])
                    }
                } else {
                    enumerate_increasing(n as u32 - 1, *r)
                        .into_iter()
                        .map(|m| {
                            let deg: u32 = m.entries().iter().map(|&t| inner.degrees[t as usize]).sum();
                            (Label::Wedge(m.into_vec()), deg)
                        })
                        .unzip::<_, _, Vec<_>, Vec<_>>()
                };
                (Node::Wedge(inner), labels, degrees)
            }
            SpaceDesc::SymPow(r, inner) => {
                let inner = Space::build(inner);
                let n = inner.dim();
                let (labels, degrees) = if n == 0 {
                    if *r == 0 {
                        (vec![Label::SymPow(vec![])], vec![0])
                    } else {
                        (vec![], vec![])
                    }
                } else {
                    enumerate_weakly_increasing(n as u32 - 1, *r)
                        .into_iter()
                        .map(|m| {
                            let deg: u32 = m.iter().map(|&t| inner.degrees[t as usize]).sum();
                            (Label::SymPow(m), deg)
                        })
                        .unzip::<_, _, Vec<_>, Vec<_>>()
                };
                (Node::SymPow(inner), labels, degrees)
            }
            SpaceDesc::Tensor(a, b) => {
                let a = Space::build(a);
                let b = Space::build(b);
                let mut labels = Vec::with_capacity(a.dim() * b.dim());
                let mut degrees = Vec::with_capacity(a.dim() * b.dim());
                for (la, da) in a.labels.iter().zip(&a.degrees) {
                    for (lb, db) in b.labels.iter().zip(&b.degrees) {
                        labels.push(Label::tensor(la.clone(), lb.clone()));
                        degrees.push(da + db);
                    }
                }
                (Node::Tensor(a, b), labels, degrees)
            }
            SpaceDesc::Det(k) => (Node::Det(*k), vec![Label::Det], vec![*k]),
        };
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Arc::new(Space {
            desc: desc.clone(),
            node,
            labels,
            index,
            degrees,
        })
    }

    pub fn desc(&self) -> &SpaceDesc {
        &self.desc
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Y-degree of each basis vector: the power of `q` it contributes to the
    /// character at `diag(1, q)`.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    fn require(&self, label: &Label) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::WrongSpace(format!("label {label} is not a basis label of {}", self.desc)))
    }

    /// Matrix of `g` acting on this space.
    pub fn group_matrix<R: Ring>(&self, ring: &R, g: &[[R::Elem; 2]; 2]) -> LinearMap<R> {
        match &self.node {
            Node::Sym(c) => {
                let image_x = [g[0][0].clone(), g[1][0].clone()];
                let image_y = [g[0][1].clone(), g[1][1].clone()];
                let cols = (0..=*c)
                    .map(|a| {
                        // coefficients indexed by Y-degree
                        let mut form = vec![ring.one()];
                        for t in 0..*c {
                            let lin = if t < c - a { &image_x } else { &image_y };
                            let mut next = vec![ring.zero(); form.len() + 1];
                            for (k, v) in form.iter().enumerate() {
                                ring.add_assign(&mut next[k], &ring.mul(v, &lin[0]));
                                ring.add_assign(&mut next[k + 1], &ring.mul(v, &lin[1]));
                            }
                            form = next;
                        }
                        form.into_iter().enumerate().filter(|(_, v)| !ring.is_zero(v)).collect()
                    })
                    .collect();
                LinearMap::from_columns(ring.clone(), *c as usize + 1, cols).expect("shape")
            }
            Node::Wedge(inner) | Node::SymPow(inner) => {
                let wedge = matches!(self.node, Node::Wedge(..));
                let a = inner.group_matrix(ring, g);
                self.multilinear(ring, |partial, t| {
                    let col = a.column(t as usize);
                    if wedge {
                        wedge_extend(ring, partial, col)
                    } else {
                        sym_extend(ring, partial, col)
                    }
                })
            }
            Node::Tensor(a, b) => a.group_matrix(ring, g).kron(&b.group_matrix(ring, g)),
            Node::Det(k) => {
                let det = ring.sub(&ring.mul(&g[0][0], &g[1][1]), &ring.mul(&g[0][1], &g[1][0]));
                LinearMap::from_columns(ring.clone(), 1, vec![vec![(0, ring.pow(&det, *k))]]).expect("shape")
            }
        }
    }

    /// Columns obtained by multiplying out the factors of each wedge or
    /// symmetric-power label one at a time.
    fn multilinear<R: Ring>(
        &self,
        ring: &R,
        extend: impl Fn(&Partial<R::Elem>, u32) -> Partial<R::Elem>,
    ) -> LinearMap<R> {
        let cols = self
            .labels
            .iter()
            .map(|label| {
                let (Label::Wedge(factors) | Label::SymPow(factors)) = label else {
                    unreachable!("multilinear on a non-power space")
                };
                let mut partial: Partial<R::Elem> = BTreeMap::new();
                partial.insert(Vec::new(), ring.one());
                for &t in factors {
                    partial = extend(&partial, t);
                }
                let wedge = matches!(label, Label::Wedge(_));
                partial
                    .into_iter()
                    .filter(|(_, v)| !ring.is_zero(v))
                    .map(|(key, v)| {
                        let l = if wedge { Label::Wedge(key) } else { Label::SymPow(key) };
                        (self.index[&l], v)
                    })
                    .collect::<SparseVec<R::Elem>>()
            })
            .map(|c| normalize(ring, c))
            .collect();
        LinearMap::from_columns(ring.clone(), self.dim(), cols).expect("shape")
    }

    /// Matrix of `e` or `f`. Only over Z and Q.
    pub fn lie_matrix<R: Ring>(&self, ring: &R, op: LieOp) -> Result<LinearMap<R>> {
        if !ring.kind().supports_lie_action() {
            return Err(Error::LieUnsupported(ring.kind().to_string()));
        }
        Ok(self.lie_matrix_unchecked(ring, op))
    }

    fn lie_matrix_unchecked<R: Ring>(&self, ring: &R, op: LieOp) -> LinearMap<R> {
        match &self.node {
            Node::Sym(c) => {
                let c = *c;
                let cols = (0..=c)
                    .map(|a| match op {
                        LieOp::E if a > 0 => vec![(a as usize - 1, ring.from_i64(a as i64))],
                        LieOp::F if a < c => vec![(a as usize + 1, ring.from_i64((c - a) as i64))],
                        _ => vec![],
                    })
                    .collect();
                LinearMap::from_columns(ring.clone(), c as usize + 1, cols).expect("shape")
            }
            Node::Wedge(inner) | Node::SymPow(inner) => {
                let a = inner.lie_matrix_unchecked(ring, op);
                let cols = self
                    .labels
                    .iter()
                    .map(|label| {
                        let mut col = Vec::new();
                        match label {
                            Label::Wedge(factors) => {
                                for t in 0..factors.len() {
                                    for (row, coef) in a.column(factors[t] as usize) {
                                        let mut next = factors.clone();
                                        next[t] = *row as u32;
                                        if let Some(sign) = sort_with_sign(&mut next) {
                                            let v = if sign < 0 { ring.neg(coef) } else { coef.clone() };
                                            col.push((self.index[&Label::Wedge(next)], v));
                                        }
                                    }
                                }
                            }
                            Label::SymPow(factors) => {
                                for t in 0..factors.len() {
                                    for (row, coef) in a.column(factors[t] as usize) {
                                        let mut next = factors.clone();
                                        next[t] = *row as u32;
                                        next.sort_unstable();
                                        col.push((self.index[&Label::SymPow(next)], coef.clone()));
                                    }
                                }
                            }
                            _ => unreachable!(),
                        }
                        normalize(ring, col)
                    })
                    .collect();
                LinearMap::from_columns(ring.clone(), self.dim(), cols).expect("shape")
            }
            Node::Tensor(a, b) => {
                let ea = a.lie_matrix_unchecked(ring, op);
                let eb = b.lie_matrix_unchecked(ring, op);
                let ia = LinearMap::identity(ring.clone(), a.dim());
                let ib = LinearMap::identity(ring.clone(), b.dim());
                ea.kron(&ib).add(&ia.kron(&eb)).expect("shape")
            }
            Node::Det(_) => LinearMap::zero(ring.clone(), 1, 1),
        }
    }

    /// Multilinear extension of `X^{c-a}Y^a -> X^a Y^{c-a}`, i.e. the action
    /// of the coordinate swap `(0 1; 1 0)`.
    pub fn theta_matrix<R: Ring>(&self, ring: &R) -> LinearMap<R> {
        let swap = [[ring.zero(), ring.one()], [ring.one(), ring.zero()]];
        self.group_matrix(ring, &swap)
    }
}

pub fn unipotent<R: Ring>(ring: &R, gamma: R::Elem) -> [[R::Elem; 2]; 2] {
    [[ring.one(), gamma], [ring.zero(), ring.one()]]
}

pub fn unipotent_transpose<R: Ring>(ring: &R, gamma: R::Elem) -> [[R::Elem; 2]; 2] {
    [[ring.one(), ring.zero()], [gamma, ring.one()]]
}

/// Element of a space: finitely supported coefficients on the canonical basis.
#[derive(Debug, Clone)]
pub struct ModuleElement<R: Ring> {
    space: Arc<Space>,
    coeffs: SparseVec<R::Elem>,
}

impl<R: Ring> ModuleElement<R> {
    pub fn zero(space: Arc<Space>) -> Self {
        Self {
            space,
            coeffs: Vec::new(),
        }
    }

    pub fn from_terms(ring: &R, space: Arc<Space>, terms: impl IntoIterator<Item = (Label, R::Elem)>) -> Result<Self> {
        let mut entries = Vec::new();
        for (label, v) in terms {
            entries.push((space.require(&label)?, v));
        }
        Ok(Self {
            coeffs: normalize(ring, entries),
            space,
        })
    }

    pub fn basis(ring: &R, space: Arc<Space>, label: &Label) -> Result<Self> {
        Self::from_terms(ring, space, [(label.clone(), ring.one())])
    }

    pub fn from_sparse(space: Arc<Space>, coeffs: SparseVec<R::Elem>) -> Self {
        Self { space, coeffs }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn coeffs(&self) -> &[(usize, R::Elem)] {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &R::Elem)> {
        self.coeffs.iter().map(|(i, v)| (self.space.label(*i), v))
    }

    pub fn coeff(&self, ring: &R, label: &Label) -> R::Elem {
        self.space
            .index_of(label)
            .and_then(|i| self.coeffs.binary_search_by_key(&i, |(j, _)| *j).ok())
            .map_or_else(|| ring.zero(), |pos| self.coeffs[pos].1.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Y-degree if the element is homogeneous and nonzero.
    pub fn y_degree(&self) -> Option<u32> {
        let mut degs = self.coeffs.iter().map(|(i, _)| self.space.degrees[*i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn same_space(&self, other: &Arc<Space>) -> Result<()> {
        if self.space.desc != other.desc {
            return Err(Error::WrongSpace(format!(
                "element of {} used where {} was expected",
                self.space.desc, other.desc
            )));
        }
        Ok(())
    }
}

pub fn act_group<R: Ring>(ring: &R, g: &[[R::Elem; 2]; 2], v: &ModuleElement<R>) -> ModuleElement<R> {
    let m = v.space.group_matrix(ring, g);
    ModuleElement::from_sparse(v.space.clone(), m.apply(&v.coeffs))
}

pub fn act_lie<R: Ring>(ring: &R, op: LieOp, v: &ModuleElement<R>) -> Result<ModuleElement<R>> {
    let m = v.space.lie_matrix(ring, op)?;
    Ok(ModuleElement::from_sparse(v.space.clone(), m.apply(&v.coeffs)))
}

pub fn act_e<R: Ring>(ring: &R, v: &ModuleElement<R>) -> Result<ModuleElement<R>> {
    act_lie(ring, LieOp::E, v)
}

pub fn act_f<R: Ring>(ring: &R, v: &ModuleElement<R>) -> Result<ModuleElement<R>> {
    act_lie(ring, LieOp::F, v)
}

/// Domain `Wedge^N Sym^d E (x) Sym^d E` and codomain `Wedge^{N+1} Sym^d E`
/// of the multiplication map.
pub fn mu_n_spaces(n: usize, d: u32) -> (Arc<Space>, Arc<Space>) {
    let dom = SpaceDesc::tensor(SpaceDesc::wedge(n, SpaceDesc::Sym(d)), SpaceDesc::Sym(d));
    let cod = SpaceDesc::wedge(n + 1, SpaceDesc::Sym(d));
    (Space::build(&dom), Space::build(&cod))
}

/// Matrix of `v_1 ∧ ... ∧ v_N (x) w -> v_1 ∧ ... ∧ v_N ∧ w`.
pub fn mu_n_matrix<R: Ring>(ring: &R, domain: &Space, codomain: &Space) -> Result<LinearMap<R>> {
    let (SpaceDesc::Tensor(left, right), SpaceDesc::Wedge(r, inner)) = (&domain.desc, &codomain.desc) else {
        return Err(Error::WrongSpace(format!("no multiplication map {} -> {}", domain.desc, codomain.desc)));
    };
    let (SpaceDesc::Wedge(n, v1), SpaceDesc::Sym(d)) = (&**left, &**right) else {
        return Err(Error::WrongSpace(format!("domain {} is not Wedge^N V (x) V", domain.desc)));
    };
    if **v1 != SpaceDesc::Sym(*d) || **inner != SpaceDesc::Sym(*d) || *r != n + 1 {
        return Err(Error::WrongSpace(format!("no multiplication map {} -> {}", domain.desc, codomain.desc)));
    }
    let cols = domain
        .labels
        .iter()
        .map(|label| {
            let Label::Tensor(w, m) = label else { unreachable!() };
            let (Label::Wedge(factors), Label::Mono(j)) = (&**w, &**m) else { unreachable!() };
            let mut all = factors.clone();
            all.push(*j);
            match sort_with_sign(&mut all) {
                Some(sign) => vec![(codomain.index[&Label::Wedge(all)], ring.from_i64(sign))],
                None => vec![],
            }
        })
        .collect();
    LinearMap::from_columns(ring.clone(), codomain.dim(), cols)
}

pub fn mu_n<R: Ring>(ring: &R, v: &ModuleElement<R>, codomain: &Arc<Space>) -> Result<ModuleElement<R>> {
    let n = match v.space.desc() {
        SpaceDesc::Tensor(left, _) => match &**left {
            SpaceDesc::Wedge(n, _) => *n,
            _ => 0,
        },
        _ => 0,
    };
    let d = match codomain.desc() {
        SpaceDesc::Wedge(_, inner) => match **inner {
            SpaceDesc::Sym(d) => d,
            _ => 0,
        },
        _ => 0,
    };
    let (dom, _) = mu_n_spaces(n, d);
    v.same_space(&dom)?;
    let m = mu_n_matrix(ring, &v.space, codomain)?;
    Ok(ModuleElement::from_sparse(codomain.clone(), m.apply(&v.coeffs)))
}
