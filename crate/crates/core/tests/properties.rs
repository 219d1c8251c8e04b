mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_idempotent, FIELDS};
use wcp_core::examples::algebras::truncated;
use wcp_core::examples::laws::graded_twist;
use wcp_core::examples::{mine_wdl, quadruple_from_twisting_map, quadruple_from_wdl, MinerConfig};
use wcp_core::preunit::derive_psi_sigma;
use wcp_core::wcp::{check_nabla, check_wmeas, nabla, product_mu};
use wcp_core::{compose, split_idempotent, tensor, FMor, FObj, Field, Mat};

fn field() -> impl Strategy<Value = Field> {
    proptest::sample::select(FIELDS.to_vec())
}

fn mat(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |v| Mat::from_i64(f, rows, cols, &v).unwrap())
}

fn mor(f: Field, x: &FObj, y: &FObj) -> impl Strategy<Value = FMor> {
    let (x, y) = (x.clone(), y.clone());
    mat(f, y.dim(), x.dim()).prop_map(move |m| FMor::new(x.clone(), y.clone(), m).unwrap())
}

fn obj(name: &'static str) -> impl Strategy<Value = FObj> {
    (1usize..=3).prop_map(move |d| FObj::named(name, d))
}

/// `f, f′: X -> X′ -> X″`, `g, g′: Y -> Y′ -> Y″`.
fn interchange_data() -> impl Strategy<Value = (FMor, FMor, FMor, FMor)> {
    (field(), obj("X"), obj("X1"), obj("X2"), obj("Y"), obj("Y1"), obj("Y2")).prop_flat_map(|(f, x, x1, x2, y, y1, y2)| {
        (mor(f, &x1, &x2), mor(f, &x, &x1), mor(f, &y1, &y2), mor(f, &y, &y1))
    })
}

fn triple_data() -> impl Strategy<Value = (FMor, FMor, FMor)> {
    (field(), obj("X"), obj("Y"), obj("Z"), obj("U"))
        .prop_flat_map(|(f, x, y, z, u)| (mor(f, &z, &u), mor(f, &y, &z), mor(f, &x, &y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interchange((f, f1, g, g1) in interchange_data()) {
        let lhs = compose!(tensor!(f, g), tensor!(f1, g1)).unwrap();
        let rhs = tensor!(compose!(f, f1).unwrap(), compose!(g, g1).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative_and_unital((h, g, f) in triple_data()) {
        let left = compose!(compose!(h, g).unwrap(), f).unwrap();
        let right = compose!(h, compose!(g, f).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let k = f.field();
        prop_assert_eq!(&compose!(FMor::identity(k, &f.cod), f).unwrap(), &f);
        prop_assert_eq!(&compose!(f, FMor::identity(k, &f.dom)).unwrap(), &f);
    }

    #[test]
    fn tensor_is_associative_and_unital((h, g, f) in triple_data()) {
        let left = tensor!(tensor!(h, g), f);
        let right = tensor!(h, tensor!(g, f));
        prop_assert_eq!(left.mat, right.mat);
        let k = FMor::identity(f.field(), &FObj::unit());
        prop_assert_eq!(&tensor!(k, f), &f);
        prop_assert_eq!(&tensor!(f, k), &f);
    }

    #[test]
    fn swap_is_natural((_, f, _, g) in interchange_data()) {
        let k = f.field();
        let lhs = compose!(tensor!(g, f), FMor::swap(k, &f.dom, &g.dom)).unwrap();
        let rhs = compose!(FMor::swap(k, &f.cod, &g.cod), tensor!(f, g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_idempotents_split(seed in any::<u64>(), k in 0usize..5, n in 1usize..=6, r0 in 0usize..6) {
        let f = FIELDS[k];
        let r = 1 + r0 % n;
        let e = random_idempotent(&mut ChaCha8Rng::seed_from_u64(seed), f, n, r);
        let s = split_idempotent(&e).unwrap();
        prop_assert_eq!(s.rank, r);
        prop_assert_eq!(s.inj.compose(&s.proj).unwrap(), e.clone());
        prop_assert_eq!(s.proj.compose(&s.inj).unwrap(), Mat::identity(f, r));
        prop_assert_eq!(split_idempotent(&e).unwrap(), s);
    }

    #[test]
    fn graded_twists_give_wcps(p in proptest::sample::select(vec![5u64, 7]), q in 1i64..7, d in 2usize..=3) {
        let f = Field::Prime(p);
        prop_assume!(q % p as i64 != 0);
        let a = truncated(f, "A", d);
        let b = truncated(f, "B", 2);
        let quad = quadruple_from_twisting_map(&a, &b, &graded_twist(&a, &b, q)).unwrap();
        prop_assert!(check_wmeas(&quad).unwrap().pass);
        prop_assert!(check_nabla(&quad, &nabla(&quad).unwrap()).unwrap().all_pass());
        let nu = tensor!(a.unit, b.unit);
        let mu = product_mu(&quad).unwrap();
        let (back, r) = derive_psi_sigma(&a, &quad.v, &mu, &nu).unwrap();
        prop_assert!(r.all_pass());
        prop_assert_eq!(product_mu(&back).unwrap(), mu);
    }
}

#[test]
fn mined_laws_give_idempotent_linear_nablas() {
    let out = mine_wdl(&MinerConfig::exhaustive(2, (2, 2))).unwrap();
    for l in &out.laws {
        let (q, nu) = quadruple_from_wdl(&l.a, &l.b, &l.lambda).unwrap();
        let nab = nabla(&q).unwrap();
        assert!(check_wmeas(&q).unwrap().pass);
        assert!(check_nabla(&q, &nab).unwrap().all_pass());
        assert_eq!(nab.mat.rank(), l.nabla_rank);
        let mu = product_mu(&q).unwrap();
        let (back, r) = derive_psi_sigma(&l.a, &q.v, &mu, &nu).unwrap();
        assert!(r.all_pass(), "{}", r.render_text());
        assert_eq!(product_mu(&back).unwrap(), mu);
    }
}
