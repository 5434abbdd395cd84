use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use plethy_core::arith::{IntPoly, IntPolys, Integers, PrimeField, Rationals, Ring, Scalar, Variable};
use plethy_core::characters::{qchar, qchar_of_desc, schur_hook_principal};
use plethy_core::combinatorics::{enumerate_semistandard, pair_order};
use plethy_core::conjecture::{jordan_fingerprint, jordan_type};
use plethy_core::delta::delta_space_unchecked;
use plethy_core::dump::MatrixDump;
use plethy_core::linalg::LinearMap;
use plethy_core::spaces::{wedge_normalize, LieOp, Space, SpaceDesc};
use plethy_core::Error;

fn small_desc() -> impl Strategy<Value = SpaceDesc> {
    prop_oneof![
        (0u32..5).prop_map(SpaceDesc::Sym),
        (0usize..4, 0u32..5).prop_map(|(r, c)| SpaceDesc::wedge(r, SpaceDesc::Sym(c))),
        (0usize..3, 0u32..3).prop_map(|(r, c)| SpaceDesc::sym_pow(r, SpaceDesc::Sym(c))),
        (0u32..3, 0usize..3, 1u32..4)
            .prop_map(|(a, r, c)| SpaceDesc::tensor(SpaceDesc::Sym(a), SpaceDesc::wedge(r, SpaceDesc::Sym(c)))),
        (0u32..3, 0u32..4).prop_map(|(k, c)| SpaceDesc::tensor(SpaceDesc::Det(k), SpaceDesc::Sym(c))),
    ]
}

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..20, 0..5).prop_map(|c| IntPoly::from_i64s(&c))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn matrix_mod(p: u32) -> impl Strategy<Value = [[u32; 2]; 2]> {
    prop::array::uniform2(prop::array::uniform2(0..p))
}

fn mat_mul(f: &PrimeField, a: &[[u32; 2]; 2], b: &[[u32; 2]; 2]) -> [[u32; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = f.add(&f.mul(&a[i][0], &b[0][j]), &f.mul(&a[i][1], &b[1][j]));
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        let r = IntPolys::new(Variable::Gamma);
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.sub(&r.add(&a, &b), &b), a);
    }

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        use plethy_core::arith::Field;
        let q = Rationals;
        prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
        if !q.is_zero(&b) {
            prop_assert_eq!(q.mul(&q.div(&a, &b).unwrap(), &b), a);
        }
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in -10_000i64..10_000, b in -10_000i64..10_000, pi in 0usize..4) {
        let f = PrimeField::new([2, 3, 5, 7][pi]).unwrap();
        let (ba, bb) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(f.from_int(&(&ba + &bb)), f.add(&f.from_int(&ba), &f.from_int(&bb)));
        prop_assert_eq!(f.from_int(&(&ba * &bb)), f.mul(&f.from_int(&ba), &f.from_int(&bb)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in -5i64..5) {
        let x = BigInt::from(x);
        prop_assert_eq!(a.mul(&b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        prop_assert_eq!(a.add(&b).eval_int(&x), a.eval_int(&x) + b.eval_int(&x));
    }

    #[test]
    fn scalars_refuse_mixed_rings(n in -9i64..9) {
        let mixed = Scalar::int(n).add(&Scalar::modp(n, 5).unwrap());
        prop_assert!(matches!(mixed, Err(Error::RingMismatch(_, _))), "{:?}", mixed);
    }

    #[test]
    fn pair_order_is_a_total_order(n in 1usize..4, d in 0u32..5, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let pairs = enumerate_semistandard(n, d);
        prop_assume!(!pairs.is_empty());
        let [a, b, c] = [0, 1, 2].map(|t| &pairs[picks[t].index(pairs.len())]);
        let ab = pair_order(a, b).unwrap();
        prop_assert_eq!(ab.reverse(), pair_order(b, a).unwrap());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
        if ab.is_le() && pair_order(b, c).unwrap().is_le() {
            prop_assert!(pair_order(a, c).unwrap().is_le());
        }
    }

    #[test]
    fn wedge_sign_is_permutation_parity(perm in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle()) {
        let inversions = (0..perm.len())
            .flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let (sorted, sign) = wedge_normalize(&perm, 5).unwrap().unwrap();
        prop_assert_eq!(sorted.entries(), &[0, 1, 2, 3, 4, 5][..]);
        prop_assert_eq!(sign, if inversions % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn group_action_is_multiplicative(desc in small_desc(), g in matrix_mod(5), h in matrix_mod(5)) {
        let f = PrimeField::new(5).unwrap();
        let space = Space::build(&desc);
        let lhs = space.group_matrix(&f, &mat_mul(&f, &g, &h));
        let rhs = space.group_matrix(&f, &g).compose(&space.group_matrix(&f, &h)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_bracket_is_weight(desc in small_desc()) {
        let space = Space::build(&desc);
        let e = space.lie_matrix(&Integers, LieOp::E).unwrap();
        let f = space.lie_matrix(&Integers, LieOp::F).unwrap();
        let bracket = e.compose(&f).unwrap().sub(&f.compose(&e).unwrap()).unwrap();
        let top = desc.functor_degree() as i64;
        let cols = space
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &y)| vec![(i, BigInt::from(top - 2 * y as i64))])
            .collect();
        prop_assert_eq!(bracket, LinearMap::from_columns(Integers, space.dim(), cols).unwrap());
    }

    #[test]
    fn polynomial_action_specialises(desc in small_desc(), c in -3i64..4) {
        let zg = IntPolys::new(Variable::Gamma);
        let space = Space::build(&desc);
        let symbolic = space.group_matrix(&zg, &plethy_core::spaces::unipotent(&zg, IntPoly::x()));
        let value = BigInt::from(c);
        let evaluated = symbolic.map_ring(&Integers, |p| p.eval_int(&value));
        let direct = space.group_matrix(&Integers, &plethy_core::spaces::unipotent(&Integers, value.clone()));
        prop_assert_eq!(evaluated, direct);
    }

    #[test]
    fn qchar_is_multiplicative(a in small_desc(), b in small_desc()) {
        let t = SpaceDesc::tensor(a.clone(), b.clone());
        prop_assert_eq!(qchar(&Space::build(&t)), qchar_of_desc(&a).mul(&qchar_of_desc(&b)));
    }

    #[test]
    fn hook_principal_is_palindromic(m in 1usize..4, n in 1usize..4, d in 0u32..6) {
        prop_assert!(schur_hook_principal(m, n, d).is_palindromic());
    }

    #[test]
    fn jordan_type_survives_conjugation(desc in small_desc(), entries in prop::collection::vec((0usize..64, 0usize..64, 1u32..3), 0..12)) {
        let f = PrimeField::new(3).unwrap();
        let space = Space::build(&desc);
        let n = space.dim();
        prop_assume!(n > 0);
        // random lower unitriangular change of basis
        let mut cols: Vec<Vec<(usize, u32)>> = (0..n).map(|i| vec![(i, 1)]).collect();
        for (a, b, v) in entries {
            let (r, c) = (a % n, b % n);
            if r > c {
                cols[c].push((r, v));
            }
        }
        let p = LinearMap::from_columns(f, n, cols).unwrap();
        let p_inv = p.unitriangular_inverse().unwrap();
        let u = space.group_matrix(&f, &plethy_core::spaces::unipotent(&f, 1));
        let conj = p.compose(&u).unwrap().compose(&p_inv).unwrap();
        let basis: Vec<_> = (0..n).map(|i| vec![(i, 1u32)]).collect();
        prop_assert_eq!(jordan_type(&f, &conj, &basis).unwrap(), jordan_fingerprint(&space, &f).unwrap());
    }

    #[test]
    fn kernel_elements_round_trip(n in 1usize..4, d in 0u32..5, coeffs in prop::collection::vec(-5i64..6, 1..20)) {
        let ds = delta_space_unchecked(n, d).unwrap();
        prop_assume!(ds.dim() > 0);
        let coords: Vec<(usize, BigInt)> = coeffs
            .iter()
            .enumerate()
            .map(|(t, c)| ((t * 7) % ds.dim(), BigInt::from(*c)))
            .collect();
        let coords = plethy_core::linalg::normalize(&Integers, coords);
        let v = ds.reconstruct(&Integers, &coords);
        prop_assert_eq!(ds.express(&Integers, &v).unwrap(), coords.clone());
        let q = v.coeffs().iter().map(|(i, x)| (*i, BigRational::from_integer(x.clone()))).collect();
        let vq = plethy_core::spaces::ModuleElement::from_sparse(ds.ambient().clone(), q);
        let by_elimination = ds.express_by_elimination(&Rationals, &vq).unwrap();
        let want: Vec<_> = coords.iter().map(|(t, x)| (*t, BigRational::from_integer(x.clone()))).collect();
        prop_assert_eq!(by_elimination, want);
    }

    #[test]
    fn matrix_dump_json_round_trip(rows in 0usize..5, entries in prop::collection::vec((0usize..5, 0usize..5, -9i64..10), 0..15)) {
        let cols = 4;
        let mut columns = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            if rows > 0 {
                columns[c % cols].push((r % rows, BigInt::from(v)));
            }
        }
        let m = LinearMap::from_columns(Integers, rows, columns).unwrap();
        let dump = MatrixDump::new(
            &m,
            (0..rows).map(|r| format!("r{r}")).collect(),
            (0..cols).map(|c| format!("({c},{c})")).collect(),
        );
        prop_assert_eq!(MatrixDump::from_json(&dump.to_json()).unwrap(), dump);
    }
}
