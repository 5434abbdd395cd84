//! The isomorphism `φ : Sym^{N-1}E (x) Wedge^{N+1} Sym^{d+1}E -> Δ^{(2,1^{N-1})} Sym^d E`
//! and its certificate checks.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{sign_pow, IntPoly, IntPolys, Integers, PrimeField, Rationals, Ring, Variable};
use crate::combinatorics::{box_of, triangular_witness, MultiIndex, SemistandardPair};
use crate::dump::MatrixDump;
use crate::delta::{delta_space_unchecked, f_label, DeltaSpace};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::spaces::{unipotent, unipotent_transpose, Label, LieOp, ModuleElement, Space, SpaceDesc};

/// Outcome of one certificate check. Mathematical failures are reported
/// here rather than as errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// `ε_R = -1` if `R ≡ 2, 3 (mod 4)`, else `1`.
pub fn epsilon(r: u32) -> i64 {
    if matches!(r % 4, 2 | 3) {
        -1
    } else {
        1
    }
}

pub fn domain_label(s: u32, k: &[u32]) -> Label {
    Label::tensor(Label::Mono(s), Label::Wedge(k.to_vec()))
}

pub fn domain_desc(n: usize, d: u32) -> SpaceDesc {
    SpaceDesc::tensor(
        SpaceDesc::Sym(n as u32 - 1),
        SpaceDesc::wedge(n + 1, SpaceDesc::Sym(d + 1)),
    )
}

fn split_domain_label(label: &Label) -> (u32, &[u32]) {
    match label {
        Label::Tensor(m, w) => match (&**m, &**w) {
            (Label::Mono(s), Label::Wedge(k)) => (*s, k),
            _ => unreachable!("domain labels are monomial (x) wedge"),
        },
        _ => unreachable!("domain labels are monomial (x) wedge"),
    }
}

/// `v_{(s,k)} = Σ_{i ∈ B(k)} F(i, s + |k| - N - |i|)` as ambient terms.
fn v_terms(n: usize, d: u32, s: u32, k: &[u32]) -> Result<Vec<Label>> {
    let bad = |reason: String| Error::InvalidMultiIndex {
        entries: k.to_vec(),
        reason,
    };
    if n == 0 || s as usize >= n {
        return Err(Error::ParameterMismatch(format!("s = {s} outside 0..{n}")));
    }
    let k_index = MultiIndex::strictly_increasing(k.to_vec(), d + 1).map_err(|e| match e {
        Error::InvalidMultiIndex { reason, .. } => bad(reason),
        other => other,
    })?;
    if k_index.len() != n + 1 {
        return Err(bad(format!("length must be {}", n + 1)));
    }
    let w = s + k_index.sum();
    let mut out = Vec::new();
    for i in box_of(&k_index)? {
        let j = w as i64 - n as i64 - i.sum() as i64;
        if j < 0 || j > d as i64 {
            return Err(Error::Consistency(format!("F({i}, {j}) out of range in v({s},{k_index})")));
        }
        out.push(f_label(i.entries(), j as u32));
    }
    Ok(out)
}

/// Everything about `φ` for one `(N, d)`.
#[derive(Debug, Clone)]
pub struct PhiContext {
    n: usize,
    d: u32,
    domain: Arc<Space>,
    delta: DeltaSpace,
    /// `order[t]` is the domain index paired with the `t`-th semistandard pair.
    order: Vec<usize>,
    /// Ambient coordinates, columns in canonical domain order.
    phi: LinearMap<Integers>,
    /// `F_Δ` coordinates, columns in `order`.
    triangular: LinearMap<Integers>,
}

impl PhiContext {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn domain(&self) -> &Arc<Space> {
        &self.domain
    }

    pub fn delta(&self) -> &DeltaSpace {
        &self.delta
    }

    pub fn ambient(&self) -> &Arc<Space> {
        self.delta.ambient()
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    /// Domain indices in the order paired with the semistandard pairs.
    pub fn domain_order(&self) -> &[usize] {
        &self.order
    }

    /// Matrix of `φ` from canonical domain coordinates to ambient coordinates.
    pub fn phi_matrix(&self) -> &LinearMap<Integers> {
        &self.phi
    }

    /// Matrix of `φ` in `F_Δ` coordinates, domain reordered by the
    /// triangular pairing. Lower unitriangular.
    pub fn triangular_matrix(&self) -> &LinearMap<Integers> {
        &self.triangular
    }

    pub fn phi_over<R: Ring>(&self, ring: &R) -> LinearMap<R> {
        self.phi.map_ring(ring, |x| ring.from_int(x))
    }

    pub fn row_labels(&self) -> Vec<String> {
        self.ambient().labels().iter().map(Label::to_string).collect()
    }

    pub fn domain_labels(&self) -> Vec<String> {
        self.domain.labels().iter().map(format_domain_label).collect()
    }

    pub fn pair_labels(&self) -> Vec<String> {
        self.delta.pairs().iter().map(SemistandardPair::to_string).collect()
    }

    pub fn ordered_domain_labels(&self) -> Vec<String> {
        self.order.iter().map(|&c| format_domain_label(self.domain.label(c))).collect()
    }

    pub fn v_vector<R: Ring>(&self, ring: &R, s: u32, k: &[u32]) -> Result<ModuleElement<R>> {
        let terms = v_terms(self.n, self.d, s, k)?;
        ModuleElement::from_terms(ring, self.ambient().clone(), terms.into_iter().map(|l| (l, ring.one())))
    }

    /// Applies `φ` to a domain element.
    pub fn apply<R: Ring>(&self, ring: &R, v: &ModuleElement<R>) -> Result<ModuleElement<R>> {
        if v.space().desc() != self.domain.desc() {
            return Err(Error::WrongSpace(format!("expected an element of {}", self.domain.desc())));
        }
        let m = self.phi_over(ring);
        Ok(ModuleElement::from_sparse(self.ambient().clone(), m.apply(v.coeffs())))
    }

    /// `φ^{-1}` from `F_Δ` coordinates to canonical domain coordinates.
    pub fn invert_phi(&self) -> Result<LinearMap<Integers>> {
        let inv = self.triangular.unitriangular_inverse()?;
        let cols = inv
            .columns()
            .iter()
            .map(|c| {
                let mut col: Vec<_> = c.iter().map(|(r, v)| (self.order[*r], v.clone())).collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        LinearMap::from_columns(Integers, self.dim(), cols)
    }

    /// `F_Δ` coordinates with columns in canonical domain order.
    pub fn coordinate_matrix(&self) -> LinearMap<Integers> {
        let mut cols = vec![Vec::new(); self.dim()];
        for (t, &c) in self.order.iter().enumerate() {
            cols[c] = self.triangular.column(t).to_vec();
        }
        LinearMap::from_columns(Integers, self.dim(), cols).expect("shape")
    }

    /// Preimage of a kernel element.
    pub fn preimage(&self, v: &ModuleElement<Integers>) -> Result<ModuleElement<Integers>> {
        let coords = self.delta.express(&Integers, v)?;
        let inv = self.invert_phi()?;
        Ok(ModuleElement::from_sparse(self.domain.clone(), inv.apply(&coords)))
    }

    /// `μ_N ∘ φ = 0`, checked over Z.
    pub fn check_kernel(&self) -> Check {
        let name = "image in ker mu_N";
        let mu = self.delta.mu_matrix(&Integers);
        let image = mu.compose(&self.phi).expect("shapes agree");
        match image.first_nonzero() {
            None => Check::pass(name, format!("{} columns", self.dim())),
            Some((r, c, _)) => Check::fail(
                name,
                format!(
                    "mu_N(v{}) has a nonzero {} coefficient",
                    format_domain_label(self.domain.label(c)),
                    self.delta.mu_codomain().label(r)
                ),
            ),
        }
    }

    pub fn check_dimensions(&self) -> Check {
        let name = "dimensions";
        let expected = crate::combinatorics::count_ssyt_hook(self.n as u32, self.d);
        let formula = self.domain.desc().dimension();
        let ok = self.domain.dim() == self.delta.dim() && expected == self.delta.dim().into() && formula == self.domain.dim();
        let detail = format!("domain {} codomain {} N*C(d+2,N+1) = {expected}", self.domain.dim(), self.delta.dim());
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail)
        }
    }

    pub fn check_unitriangular(&self) -> Check {
        let name = "F_Delta matrix lower unitriangular";
        if self.triangular.is_lower_unitriangular() {
            Check::pass(name, format!("{0}x{0}", self.dim()))
        } else {
            Check::fail(name, "diagonal or upper entry violates unitriangularity")
        }
    }

    pub fn check_inverse(&self) -> Check {
        let name = "exact inverse";
        let inv = match self.invert_phi() {
            Ok(inv) => inv,
            Err(e) => return Check::fail(name, e.to_string()),
        };
        let coords = self.coordinate_matrix();
        let right = coords.compose(&inv).expect("shapes agree");
        let left = inv.compose(&coords).expect("shapes agree");
        let id = LinearMap::identity(Integers, self.dim());
        if right == id && left == id {
            Check::pass(name, "phi o phi^-1 = id and phi^-1 o phi = id over Z")
        } else {
            Check::fail(name, "round trip differs from the identity")
        }
    }

    /// Each column is homogeneous of Y-degree `s + |k| - N`.
    pub fn check_degrees(&self) -> Check {
        let name = "Y-degree of columns";
        let degrees = self.ambient().degrees();
        for (c, label) in self.domain.labels().iter().enumerate() {
            let (s, k) = split_domain_label(label);
            let want = s + k.iter().sum::<u32>() - self.n as u32;
            let col = self.phi.column(c);
            if col.is_empty() || col.iter().any(|(r, _)| degrees[*r] != want) {
                return Check::fail(name, format!("column {} is not of degree {want}", format_domain_label(label)));
            }
        }
        Check::pass(name, format!("{} columns", self.dim()))
    }

    /// In `F_Δ` coordinates each column meets each content class at most once.
    pub fn check_one_per_content(&self) -> Check {
        let name = "at most one F_Delta per content";
        let pairs = self.delta.pairs();
        for (t, col) in self.triangular.columns().iter().enumerate() {
            let mut seen = HashSet::new();
            for (r, _) in col {
                if !seen.insert(pairs[*r].content()) {
                    let label = format_domain_label(self.domain.label(self.order[t]));
                    return Check::fail(name, format!("column {label} meets the content of {} twice", pairs[*r]));
                }
            }
        }
        Check::pass(name, format!("{} columns", self.dim()))
    }

    /// If `F(i,j)` with `j ∉ i` and `F(P^m(i,j))` both occur in one
    /// `v`-vector then `m = 1`.
    pub fn check_chain_gap(&self) -> Check {
        let name = "neighbour chain gap";
        let ambient = self.ambient();
        for (c, col) in self.phi.columns().iter().enumerate() {
            let support: HashSet<usize> = col.iter().map(|(r, _)| *r).collect();
            for (r, _) in col {
                let Label::Tensor(w, m) = ambient.label(*r) else { unreachable!() };
                let (Label::Wedge(i), Label::Mono(j)) = (&**w, &**m) else { unreachable!() };
                if i.contains(j) {
                    continue;
                }
                let mut cur = (i.clone(), *j);
                for step in 1.. {
                    if cur.0[0] > cur.1 {
                        break;
                    }
                    let p = SemistandardPair::new(cur.0.clone(), cur.1, self.d).expect("in range");
                    let (ni, nj) = p.neighbour();
                    cur = (ni.into_vec(), nj);
                    if step >= 2 && support.contains(&ambient.index_of(&f_label(&cur.0, cur.1)).expect("label")) {
                        return Check::fail(
                            name,
                            format!(
                                "column {} holds F({:?},{}) and its {step}-th neighbour",
                                format_domain_label(self.domain.label(c)),
                                i,
                                j
                            ),
                        );
                    }
                }
            }
        }
        Check::pass(name, format!("{} columns", self.dim()))
    }

    /// `φ e = e φ` and `φ f = f φ` over Q.
    pub fn verify_lie_equivariance(&self) -> Check {
        let name = "Lie equivariance over Q";
        let phi = self.phi_over(&Rationals);
        for (op, tag) in [(LieOp::E, "e"), (LieOp::F, "f")] {
            let dom = self.domain.lie_matrix(&Rationals, op).expect("Q supports the Lie action");
            let amb = self.ambient().lie_matrix(&Rationals, op).expect("Q supports the Lie action");
            if let Some(fail) = self.commutator_failure(&phi, &dom, &amb, tag) {
                return Check::fail(name, fail);
            }
        }
        Check::pass(name, "[phi, e] = [phi, f] = 0")
    }

    fn commutator_failure<R: Ring>(&self, phi: &LinearMap<R>, dom: &LinearMap<R>, amb: &LinearMap<R>, tag: &str) -> Option<String> {
        let lhs = phi.compose(dom).expect("shapes agree");
        let rhs = amb.compose(phi).expect("shapes agree");
        let diff = lhs.sub(&rhs).expect("shapes agree");
        diff.first_nonzero().map(|(r, c, v)| {
            format!(
                "{tag}: column {} row {} entry {v}",
                format_domain_label(self.domain.label(c)),
                self.ambient().label(r)
            )
        })
    }

    /// Commutation with `U_γ` and its transpose for symbolic `γ`.
    pub fn verify_group_equivariance_poly(&self) -> Check {
        let name = "U_gamma equivariance over Z[g]";
        let ring = IntPolys::new(Variable::Gamma);
        let phi = self.phi_over(&ring);
        for (g, tag) in [
            (unipotent(&ring, IntPoly::x()), "U_g"),
            (unipotent_transpose(&ring, IntPoly::x()), "U_g^T"),
        ] {
            let dom = self.domain.group_matrix(&ring, &g);
            let amb = self.ambient().group_matrix(&ring, &g);
            if let Some(fail) = self.commutator_failure(&phi, &dom, &amb, tag) {
                return Check::fail(name, fail);
            }
        }
        Check::pass(name, "commutators are the zero polynomial matrix")
    }

    /// Commutation with every `U_γ` and `U_γ^T`, `γ ∈ F_p`.
    pub fn verify_group_equivariance_fp(&self, field: &PrimeField) -> Check {
        let name = format!("U_gamma equivariance over F_{}", field.modulus());
        let phi = self.phi_over(field);
        for gamma in field.elements() {
            for (g, tag) in [
                (unipotent(field, gamma), format!("U_{gamma}")),
                (unipotent_transpose(field, gamma), format!("U_{gamma}^T")),
            ] {
                let dom = self.domain.group_matrix(field, &g);
                let amb = self.ambient().group_matrix(field, &g);
                if let Some(fail) = self.commutator_failure(&phi, &dom, &amb, &tag) {
                    return Check::fail(name, fail);
                }
            }
        }
        let tri = self.triangular.map_ring(field, |x| field.from_int(x));
        if !tri.is_lower_unitriangular() {
            return Check::fail(name, "reduction mod p is not unitriangular");
        }
        Check::pass(name, format!("all gamma in F_{0}; det = 1 mod {0}", field.modulus()))
    }

    pub fn tau(&self) -> LinearMap<Rationals> {
        self.domain.theta_matrix(&Rationals)
    }

    pub fn tau_prime(&self) -> LinearMap<Rationals> {
        self.ambient().theta_matrix(&Rationals)
    }

    /// The sign `σ` with `τ' φ = σ φ τ`, if there is one.
    pub fn duality_sign(&self) -> Option<i64> {
        let phi = self.phi_over(&Rationals);
        let lhs = self.tau_prime().compose(&phi).expect("shapes agree");
        let rhs = phi.compose(&self.tau()).expect("shapes agree");
        if lhs == rhs {
            Some(1)
        } else if lhs == rhs.scale(&Rationals.from_i64(-1)) {
            Some(-1)
        } else {
            None
        }
    }

    /// `τ² = 1`, `τ'² = 1`, `e τ = τ f`, `τ' e = f τ'`, `τ' φ = ε_N ε_{N+1} φ τ`.
    pub fn verify_duality(&self) -> Check {
        let name = "duality tau, tau'";
        let q = Rationals;
        let tau = self.tau();
        let tau_p = self.tau_prime();
        let id_dom = LinearMap::identity(q, self.dim());
        let id_amb = LinearMap::identity(q, self.ambient().dim());
        if tau.compose(&tau).ok() != Some(id_dom) {
            return Check::fail(name, "tau^2 != id");
        }
        if tau_p.compose(&tau_p).ok() != Some(id_amb) {
            return Check::fail(name, "tau'^2 != id");
        }
        let e_dom = self.domain.lie_matrix(&q, LieOp::E).expect("Q");
        let f_dom = self.domain.lie_matrix(&q, LieOp::F).expect("Q");
        if e_dom.compose(&tau).ok() != tau.compose(&f_dom).ok() {
            return Check::fail(name, "e tau != tau f");
        }
        let e_amb = self.ambient().lie_matrix(&q, LieOp::E).expect("Q");
        let f_amb = self.ambient().lie_matrix(&q, LieOp::F).expect("Q");
        if tau_p.compose(&e_amb).ok() != f_amb.compose(&tau_p).ok() {
            return Check::fail(name, "tau' e != f tau'");
        }
        let want = epsilon(self.n as u32) * epsilon(self.n as u32 + 1);
        match self.duality_sign() {
            Some(s) if s == want || self.dim() == 0 => {
                Check::pass(name, format!("tau' phi = {s:+} phi tau, eps_N eps_(N+1) = {want:+}"))
            }
            Some(s) => Check::fail(name, format!("tau' phi = {s:+} phi tau but eps_N eps_(N+1) = {want:+}")),
            None => Check::fail(name, "tau' phi is not +-phi tau"),
        }
    }

    /// The scalar `αI` acts on the domain by `α^{(N+1)d+2N}` and on the
    /// ambient by `α^{(N+1)d}`; and `φ D = α^N D φ` for `D = diag(1, α)`.
    pub fn verify_gl2_scalar(&self) -> Check {
        let name = "GL2 scalar exponent";
        let ring = IntPolys::new(Variable::Alpha);
        let a = IntPoly::x();
        let zero = IntPoly::zero();
        let scalar = [[a.clone(), zero.clone()], [zero.clone(), a.clone()]];
        let n = self.n as u32;
        let dom_exp = (n + 1) * self.d + 2 * n;
        let amb_exp = (n + 1) * self.d;
        let dom = self.domain.group_matrix(&ring, &scalar);
        let amb = self.ambient().group_matrix(&ring, &scalar);
        let dom_want = LinearMap::identity(ring, self.dim()).scale(&IntPoly::monomial(1, dom_exp as usize));
        let amb_want = LinearMap::identity(ring, self.ambient().dim()).scale(&IntPoly::monomial(1, amb_exp as usize));
        if dom != dom_want || self.domain.desc().functor_degree() != dom_exp {
            return Check::fail(name, format!("domain is not scaled by a^{dom_exp}"));
        }
        if amb != amb_want || amb_exp + 2 * n != dom_exp {
            return Check::fail(name, format!("ambient is not scaled by a^{amb_exp}"));
        }
        let diag = [[ring.one(), zero.clone()], [zero, a]];
        let phi = self.phi_over(&ring);
        let lhs = phi.compose(&self.domain.group_matrix(&ring, &diag)).expect("shapes agree");
        let rhs = self
            .ambient()
            .group_matrix(&ring, &diag)
            .compose(&phi)
            .expect("shapes agree")
            .scale(&IntPoly::monomial(1, n as usize));
        if lhs != rhs {
            return Check::fail(name, "phi diag(1,a) != a^N diag(1,a) phi");
        }
        Check::pass(name, format!("a^{dom_exp} = a^{amb_exp} * a^{}", 2 * n))
    }

    /// Full `φ` in ambient coordinates.
    pub fn phi_dump(&self) -> MatrixDump {
        MatrixDump::new(&self.phi, self.row_labels(), self.domain_labels())
    }

    /// The unitriangular `F_Δ` coordinate matrix.
    pub fn triangular_dump(&self) -> MatrixDump {
        MatrixDump::new(&self.triangular, self.pair_labels(), self.ordered_domain_labels())
    }

    /// Square block of the unitriangular matrix on domain vectors of
    /// Y-degree `w` (and pairs of weight `w - N`).
    pub fn weight_block(&self, w: u32) -> MatrixDump {
        let degrees = self.domain.degrees();
        let cols: Vec<usize> = (0..self.dim()).filter(|&t| degrees[self.order[t]] == w).collect();
        let rows: Vec<usize> = (0..self.dim())
            .filter(|&t| self.delta.pairs()[t].weight() + self.n as u32 == w)
            .collect();
        let block = self.triangular.submatrix(&rows, &cols);
        let pairs = self.pair_labels();
        let labels = self.ordered_domain_labels();
        MatrixDump::new(
            &block,
            rows.iter().map(|&r| pairs[r].clone()).collect(),
            cols.iter().map(|&c| labels[c].clone()).collect(),
        )
    }

    /// Every check except the prime field route.
    pub fn certificate(&self) -> Vec<Check> {
        vec![
            self.check_kernel(),
            self.check_dimensions(),
            self.check_unitriangular(),
            self.check_inverse(),
            self.check_degrees(),
            self.check_one_per_content(),
            self.check_chain_gap(),
        ]
    }
}

pub fn format_domain_label(label: &Label) -> String {
    let (s, k) = split_domain_label(label);
    let k: Vec<String> = k.iter().map(u32::to_string).collect();
    format!("({s},({}))", k.join(","))
}

/// Builds `φ` and its `F_Δ` coordinate matrix. Fails if a column leaves
/// `ker μ_N` or the coordinate matrix is not lower unitriangular.
pub fn phi_matrix(n: usize, d: u32) -> Result<PhiContext> {
    if n == 0 {
        return Err(Error::ParameterMismatch("N must be at least 1".into()));
    }
    let delta = delta_space_unchecked(n, d)?;
    let domain = Space::build(&domain_desc(n, d));
    if domain.dim() != delta.dim() {
        return Err(Error::Consistency(format!(
            "domain has dimension {}, codomain {}",
            domain.dim(),
            delta.dim()
        )));
    }
    let ambient = delta.ambient().clone();
    let mut cols = Vec::with_capacity(domain.dim());
    for label in domain.labels() {
        let (s, k) = split_domain_label(label);
        let terms = v_terms(n, d, s, k)?;
        let col = terms
            .iter()
            .map(|l| (ambient.index_of(l).expect("ambient label"), Integers.one()))
            .collect();
        cols.push(col);
    }
    let phi = LinearMap::from_columns(Integers, ambient.dim(), cols)?;

    let mut order = Vec::with_capacity(domain.dim());
    let mut used = vec![false; domain.dim()];
    for p in delta.pairs() {
        let (s, k) = triangular_witness(p);
        let c = domain
            .index_of(&domain_label(s, k.entries()))
            .ok_or_else(|| Error::Consistency(format!("witness of {p} is not a domain label")))?;
        if std::mem::replace(&mut used[c], true) {
            return Err(Error::Consistency(format!("witness of {p} is used twice")));
        }
        order.push(c);
    }

    let mut tri_cols = Vec::with_capacity(domain.dim());
    for &c in &order {
        let v = ModuleElement::from_sparse(ambient.clone(), phi.column(c).to_vec());
        let coords = delta.express(&Integers, &v).map_err(|e| match e {
            Error::NotInKernel => Error::Consistency(format!(
                "v{} is not in ker mu_N",
                format_domain_label(domain.label(c))
            )),
            other => other,
        })?;
        tri_cols.push(coords);
    }
    let triangular = LinearMap::from_columns(Integers, delta.dim(), tri_cols)?;
    if !triangular.is_lower_unitriangular() {
        return Err(Error::Consistency(format!(
            "F_Delta coordinate matrix is not lower unitriangular at N={n}, d={d}"
        )));
    }
    Ok(PhiContext {
        n,
        d,
        domain,
        delta,
        order,
        phi,
        triangular,
    })
}

/// `(-1)^N`, the closed form observed for `ε_N ε_{N+1}`.
pub fn twist_sign(n: u32) -> i64 {
    sign_pow(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn epsilon_table() {
        assert_eq!([1, 2, 3, 4].map(epsilon), [1, -1, -1, 1]);
        for n in 1..12 {
            assert_eq!(epsilon(n) * epsilon(n + 1), twist_sign(n));
        }
    }

    #[test]
    fn example_expansion() {
        let ctx = phi_matrix(3, 5).unwrap();
        let v = ctx.v_vector(&Integers, 1, &[0, 2, 3, 6]).unwrap();
        let got: Vec<String> = v.terms().map(|(l, _)| l.to_string()).collect();
        assert_eq!(
            got,
            ["(0,2,3)|4", "(0,2,4)|3", "(0,2,5)|2", "(1,2,3)|3", "(1,2,4)|2", "(1,2,5)|1"]
        );
        assert_eq!(v.y_degree(), Some(9));
    }

    #[test]
    fn extreme_columns() {
        for (n, d) in [(1, 0), (2, 3), (3, 4)] {
            let ctx = phi_matrix(n, d).unwrap();
            let k: Vec<u32> = (0..=n as u32).collect();
            let v = ctx.v_vector(&Integers, 0, &k).unwrap();
            let i: Vec<u32> = (0..n as u32).collect();
            assert_eq!(v.terms().map(|(l, _)| l.clone()).collect::<Vec<_>>(), [f_label(&i, 0)]);
            // k = (i, i+1, ..., i+N)
            let shift = d + 1 - n as u32;
            let k: Vec<u32> = (shift..=shift + n as u32).collect();
            let i: Vec<u32> = (shift..shift + n as u32).collect();
            let s = n as u32 - 1;
            let v = ctx.v_vector(&Integers, s, &k).unwrap();
            assert_eq!(v.terms().map(|(l, _)| l.clone()).collect::<Vec<_>>(), [f_label(&i, s + shift)]);
        }
    }

    #[test]
    fn v_vector_rejects_bad_labels() {
        let ctx = phi_matrix(2, 3).unwrap();
        assert!(ctx.v_vector(&Integers, 2, &[0, 1, 2]).is_err());
        assert!(ctx.v_vector(&Integers, 0, &[0, 1]).is_err());
        assert!(ctx.v_vector(&Integers, 0, &[0, 1, 5]).is_err());
        assert!(ctx.v_vector(&Integers, 0, &[1, 0, 2]).is_err());
    }

    #[test]
    fn n_equals_one() {
        // φ(X^{d+1-k}Y^k ∧ X^{d+1-l}Y^l) = Σ_{k<=i<l} X^{d-i}Y^i (x) X^{d-(k+l-1-i)}Y^{k+l-1-i}
        let d = 4;
        let ctx = phi_matrix(1, d).unwrap();
        for k in 0..=d + 1 {
            for l in k + 1..=d + 1 {
                let v = ctx.v_vector(&Integers, 0, &[k, l]).unwrap();
                let want: Vec<Label> = (k..l).map(|i| f_label(&[i], k + l - 1 - i)).collect();
                let got: Vec<Label> = v.terms().map(|(l, _)| l.clone()).collect();
                let mut want_sorted = want.clone();
                want_sorted.sort();
                assert_eq!(got, want_sorted);
            }
        }
    }

    #[test]
    fn certificate_small_grid() {
        for n in 1..=3 {
            for d in 0..=4 {
                let ctx = phi_matrix(n, d).unwrap();
                for check in ctx.certificate() {
                    assert!(check.passed, "N={n} d={d}: {check:?}");
                }
            }
        }
    }

    #[test]
    fn equivariance_routes_small() {
        let ctx = phi_matrix(2, 3).unwrap();
        assert!(ctx.verify_lie_equivariance().passed);
        assert!(ctx.verify_group_equivariance_poly().passed);
        assert!(ctx.verify_group_equivariance_fp(&PrimeField::new(2).unwrap()).passed);
        assert!(ctx.verify_duality().passed);
        assert!(ctx.verify_gl2_scalar().passed);
        let ctx = phi_matrix(1, 3).unwrap();
        assert!(ctx.verify_lie_equivariance().passed);
    }

    #[test]
    fn duality_sign_is_parity_of_n() {
        for n in 1..=3usize {
            let ctx = phi_matrix(n, 3).unwrap();
            assert_eq!(ctx.duality_sign(), Some(twist_sign(n as u32)));
        }
    }

    #[test]
    fn tau_on_extreme_vector() {
        // τ(X^{N-1} (x) F(0..N)) = Y^{N-1} (x) ε_{N+1} F(d+1-N..d+1)
        let (n, d) = (3usize, 4u32);
        let ctx = phi_matrix(n, d).unwrap();
        let src = ctx.domain().index_of(&domain_label(0, &[0, 1, 2, 3])).unwrap();
        let k: Vec<u32> = (d + 1 - n as u32..=d + 1).collect();
        let dst = ctx.domain().index_of(&domain_label(n as u32 - 1, &k)).unwrap();
        let want = num_rational::BigRational::from_integer(epsilon(n as u32 + 1).into());
        assert_eq!(ctx.tau().column(src), &[(dst, want)]);
    }

    #[test]
    fn inverse_of_minimal_pair() {
        let ctx = phi_matrix(3, 4).unwrap();
        let p = SemistandardPair::new(vec![0, 1, 2], 0, 4).unwrap();
        let t = ctx.delta().index_of_pair(&p).unwrap();
        let pre = ctx.preimage(&ctx.delta().f_delta_element(&Integers, t)).unwrap();
        let want = ctx.domain().index_of(&domain_label(0, &[0, 1, 2, 3])).unwrap();
        assert_eq!(pre.coeffs(), &[(want, BigInt::from(1))]);
    }

    #[test]
    fn weight_nine_block() {
        let ctx = phi_matrix(2, 4).unwrap();
        let block = ctx.weight_block(9);
        assert_eq!(
            block.rows,
            ["((0,3),4)", "((0,4),3)", "((1,2),4)", "((1,4),2)", "((1,3),3)", "((2,3),2)"]
        );
        assert_eq!(
            block.columns,
            ["(1,(0,3,5))", "(0,(0,4,5))", "(1,(1,2,5))", "(0,(1,3,5))", "(1,(1,3,4))", "(0,(2,3,4))"]
        );
    }

    #[test]
    fn empty_spaces() {
        let ctx = phi_matrix(4, 1).unwrap();
        assert_eq!(ctx.dim(), 0);
        assert!(ctx.certificate().iter().all(|c| c.passed));
        assert_eq!(ctx.invert_phi().unwrap().cols(), 0);
        assert!(ctx.verify_lie_equivariance().passed);
    }
}
