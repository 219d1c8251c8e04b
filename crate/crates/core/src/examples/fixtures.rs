//! Named fixtures used by the tests, the acceptance suite and the CLI bundle.

use crate::examples::algebras::{cyclic_group_algebra, diagonal, poly_quotient, truncated};
use crate::examples::laws::{flip, graded_twist, law, quadruple_from_twisting_map, quadruple_from_wdl};
use crate::examples::triples::{LawKind, LawTriple};
use crate::fdvect::{FMor, MonoidData};
use crate::iterate::IterSetup;
use crate::kernel::{Field, Mat};
use crate::wcp::Quadruple;
use crate::tensor;

/// `k[x]/(x²-1)`.
pub fn skew_base(field: Field) -> MonoidData {
    poly_quotient(field, "A", &[-1, 0])
}

/// Three algebras of dimension 2 with every law the flip.
pub fn flip_triple(field: Field) -> LawTriple {
    let a = truncated(field, "A", 2);
    let b = cyclic_group_algebra(field, "B", 2);
    let c = diagonal(field, "C", 2);
    LawTriple {
        kind: LawKind::Distributive,
        l1: flip(&a, &b),
        l2: flip(&b, &c),
        l3: flip(&a, &c),
        a,
        b,
        c,
    }
}

/// `k[x]/(x²)`, `k[y]/(y²)`, `k[z]/(z²)` over GF(5) with `q`-commutation laws.
pub fn quantum_plane_triple() -> LawTriple {
    let field = Field::Prime(5);
    let a = truncated(field, "A", 2);
    let b = truncated(field, "B", 2);
    let c = truncated(field, "C", 2);
    LawTriple {
        kind: LawKind::Distributive,
        l1: graded_twist(&a, &b, 2),
        l2: graded_twist(&b, &c, 3),
        l3: graded_twist(&a, &c, 4),
        a,
        b,
        c,
    }
}

/// `ℤ/2` acting on `GF(3)[x]/(x²-1)` by `x ↦ -x`, twice, with the flip between
/// the two group algebras.
pub fn skew_group_double() -> LawTriple {
    let field = Field::Prime(3);
    let a = skew_base(field);
    let v = cyclic_group_algebra(field, "V", 2);
    let w = cyclic_group_algebra(field, "W", 2);
    LawTriple {
        kind: LawKind::Distributive,
        l1: graded_twist(&a, &v, -1),
        l2: flip(&v, &w),
        l3: graded_twist(&a, &w, -1),
        a,
        b: v,
        c: w,
    }
}

/// The weak law on `k²⊗k²` keeping only matching idempotents:
/// `f_j⊗e_i ↦ δ_ij e_i⊗f_j`.
pub fn diagonal_weak_law(a: &MonoidData, b: &MonoidData) -> FMor {
    let (da, db) = (a.dim(), b.dim());
    let m = Mat::from_fn(a.field(), da * db, da * db, |r, c| {
        let (j, i) = (c / da, c % da);
        (i == j && r == i * db + j) as i64
    });
    law(a, b, m).expect("square law")
}

/// A triple of genuinely weak laws over GF(2), found by the exhaustive miner on
/// `k²⊗k²` and checked against the hexagon.
pub fn mined_wdl_triple() -> LawTriple {
    let field = Field::Prime(2);
    let a = diagonal(field, "A", 2);
    let b = diagonal(field, "B", 2);
    let c = diagonal(field, "C", 2);
    LawTriple {
        kind: LawKind::Weak,
        l1: diagonal_weak_law(&a, &b),
        l2: diagonal_weak_law(&b, &c),
        l3: diagonal_weak_law(&a, &c),
        a,
        b,
        c,
    }
}

/// The five triples of the iteration suites, by name.
pub fn triples() -> Vec<(&'static str, LawTriple)> {
    vec![
        ("flip-Q", flip_triple(Field::Rationals)),
        ("flip-GF3", flip_triple(Field::Prime(3))),
        ("quantum-plane-GF5", quantum_plane_triple()),
        ("skew-group-double", skew_group_double()),
        ("mined-wdl-GF2", mined_wdl_triple()),
    ]
}

/// A single quadruple with a preunit.
#[derive(Clone, Debug)]
pub struct QuadFixture {
    pub name: &'static str,
    pub quad: Quadruple,
    pub nu: FMor,
}

/// `A⊗V` with the flip and `ν = η_A⊗η_V`.
pub fn ordinary_tensor(field: Field) -> QuadFixture {
    let a = truncated(field, "A", 2);
    let v = cyclic_group_algebra(field, "V", 2);
    let quad = quadruple_from_twisting_map(&a, &v, &flip(&a, &v)).expect("flip is a distributive law");
    QuadFixture {
        name: "ordinary-tensor",
        nu: tensor!(a.unit, v.unit),
        quad,
    }
}

/// The skew group algebra `GF(3)[x]/(x²-1) ⋊ ℤ/2` with `ν = η_A⊗e`.
pub fn skew_group() -> QuadFixture {
    let field = Field::Prime(3);
    let a = skew_base(field);
    let v = cyclic_group_algebra(field, "V", 2);
    let quad = quadruple_from_twisting_map(&a, &v, &graded_twist(&a, &v, -1)).expect("action is a distributive law");
    QuadFixture {
        name: "skew-group",
        nu: tensor!(a.unit, v.unit),
        quad,
    }
}

/// The weak wreath of [`diagonal_weak_law`] over GF(2) with `ν = ∇∘(η_A⊗η_B)`.
pub fn mined_weak() -> QuadFixture {
    let field = Field::Prime(2);
    let a = diagonal(field, "A", 2);
    let v = diagonal(field, "V", 2);
    let (quad, nu) = quadruple_from_wdl(&a, &v, &diagonal_weak_law(&a, &v)).expect("weak law");
    QuadFixture {
        name: "mined-weak",
        quad,
        nu,
    }
}

pub fn quadruples() -> Vec<QuadFixture> {
    vec![
        ordinary_tensor(Field::Rationals),
        skew_group(),
        mined_weak(),
    ]
}

/// [`skew_group`] with one entry of `σ` changed, so the cocycle condition fails.
pub fn corrupted_skew_group() -> QuadFixture {
    let mut f = skew_group();
    let s = &mut f.quad.sigma.mat;
    let bumped = (s.get(0, 0).to_i64().expect("residue") + 1) % 3;
    s.set_i64(0, 0, bumped);
    f.name = "corrupted";
    f
}

/// Two copies of the skew group algebra over the same base, each with `η_V = e`,
/// twisted by the flip: a Brzeziński pair with trivial link.
pub fn skew_group_dp() -> (IterSetup, FMor, FMor) {
    let field = Field::Prime(3);
    let a = skew_base(field);
    let v = cyclic_group_algebra(field, "V", 2);
    let w = cyclic_group_algebra(field, "W", 2);
    let qv = quadruple_from_twisting_map(&a, &v, &graded_twist(&a, &v, -1)).expect("action is a distributive law");
    let qw = quadruple_from_twisting_map(&a, &w, &graded_twist(&a, &w, -1)).expect("action is a distributive law");
    let tau = flip(&v, &w);
    let setup = IterSetup::new(qv, qw, Mat::identity(field, 4), tau.mat).expect("shared base");
    (setup, v.unit.clone(), w.unit.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::triples::check_triple;

    #[test]
    fn triples_satisfy_their_laws() {
        for (name, t) in triples() {
            let r = check_triple(&t).unwrap();
            assert!(r.all_pass(), "{name}\n{}", r.render_text());
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = triples().iter().map(|(n, _)| *n).collect();
        names.extend(quadruples().iter().map(|q| q.name));
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn corruption_touches_one_entry() {
        let (good, bad) = (skew_group(), corrupted_skew_group());
        let diff = good
            .quad
            .sigma
            .mat
            .scalars()
            .iter()
            .zip(bad.quad.sigma.mat.scalars())
            .filter(|(x, y)| *x != y)
            .count();
        assert_eq!(diff, 1);
    }
}
