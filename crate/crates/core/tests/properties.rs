use proptest::prelude::*;

use homleibniz::algebra::{ideal_closure, yau_twist, HomAlgebra};
use homleibniz::connections::connection_classes;
use homleibniz::diagnostics::check_ideal_homogeneous;
use homleibniz::io::{parse_algebra_str, write_algebra};
use homleibniz::linalg::{
    format_scalar, frac, int, kernel, parse_scalar, rref, simultaneous_eigenspaces, Matrix, Scalar, Subspace, Vector,
};
use homleibniz::roots::verify_split;
use homleibniz::{corpus, decompose};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), n)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(vector(cols), rows).prop_map(|r| Matrix::from_rows(r).unwrap())
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(vector(n), 0..=n).prop_map(move |vs| Subspace::span(n, vs).unwrap())
}

fn sparse(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec((0..n, -2i64..=2), 1..=3).prop_map(move |entries| {
        let mut v = vec![int(0); n];
        for (i, c) in entries {
            v[i] = int(c);
        }
        v
    })
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    prop_oneof![(1i64..=5).prop_map(int), (1i64..=5).prop_map(|q| frac(1, q)), (1i64..=5).prop_map(|p| int(-p))]
}

fn diag_twist(c: &Scalar) -> Matrix {
    Matrix::diagonal(&[int(1), c.clone(), c.recip()])
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let (r, pivots) = rref(&m);
        let (rr, pivots2) = rref(&r);
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let k = kernel(&m);
        prop_assert_eq!(k.dim() + m.rank(), 6);
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(4, 4)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(4));
            prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(4));
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn grassmann_identity(u in subspace(5), w in subspace(5)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&w).unwrap());
        prop_assert!(u.contains(&i).unwrap() && w.contains(&i).unwrap());
    }

    #[test]
    fn span_is_canonical(vs in prop::collection::vec(vector(4), 1..4), c in nonzero()) {
        let a = Subspace::span(4, vs.clone()).unwrap();
        let scaled: Vec<Vector> = vs.iter().rev().map(|v| v.iter().map(|x| x * &c).collect()).collect();
        prop_assert_eq!(a, Subspace::span(4, scaled).unwrap());
    }

    #[test]
    fn eigen_pieces_are_joint_eigenvectors(d in prop::collection::vec(-3i64..=3, 4), p in matrix(4, 4)) {
        let Some(pinv) = p.inverse() else { return Ok(()) };
        let diag = Matrix::diagonal(&d.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let op = p.mul(&diag).unwrap().mul(&pinv).unwrap();
        let sq = op.mul(&op).unwrap();
        let pieces = simultaneous_eigenspaces(&[op.clone(), sq.clone()], 4).unwrap();
        let total: usize = pieces.iter().map(|(_, s)| s.dim()).sum();
        prop_assert_eq!(total, 4);
        for (values, space) in &pieces {
            for v in space.basis() {
                let scaled: Vector = v.iter().map(|x| x * &values[0]).collect();
                prop_assert_eq!(op.mul_vec(v).unwrap(), scaled);
                let scaled: Vector = v.iter().map(|x| x * &values[1]).collect();
                prop_assert_eq!(sq.mul_vec(v).unwrap(), scaled);
            }
        }
    }

    #[test]
    fn scalar_text_roundtrip(s in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&s)), Some(s));
    }

    #[test]
    fn closure_is_a_closure_operator(
        name in prop::sample::select(vec!["sl2", "sl2v1", "d6", "nml", "split_j"]),
        seed in prop::collection::vec(0usize..64, 1..3),
        extra in 0usize..64,
    ) {
        let (a, _) = corpus::load(name).unwrap();
        let n = a.dim();
        let pick = |i: usize| homleibniz::linalg::unit_vector(n, i % n);
        let s = Subspace::span(n, seed.iter().map(|&i| pick(i))).unwrap();
        let t = s.sum(&Subspace::span(n, [pick(extra)]).unwrap()).unwrap();
        let cs = ideal_closure(&a, &s).unwrap();
        let ct = ideal_closure(&a, &t).unwrap();
        prop_assert!(cs.contains(&s).unwrap());
        prop_assert_eq!(&ideal_closure(&a, &cs).unwrap(), &cs);
        prop_assert!(ct.contains(&cs).unwrap());
    }

    #[test]
    fn closure_of_sparse_generator_is_homogeneous(name in prop::sample::select(vec!["sl2v1", "nml", "split_j"]), g in sparse(10)) {
        let (a, h) = corpus::load(name).unwrap();
        let d = decompose(&a, &h).unwrap();
        let g: Vector = g.into_iter().take(a.dim()).collect();
        let ideal = ideal_closure(&a, &Subspace::span(a.dim(), [g]).unwrap()).unwrap();
        prop_assert!(check_ideal_homogeneous(&d, &ideal).unwrap().holds);
    }

    #[test]
    fn yau_twist_roundtrip(c in nonzero()) {
        let sl2 = corpus::sl2();
        let psi = diag_twist(&c);
        let t = yau_twist(&sl2, &psi).unwrap();
        prop_assert_eq!(yau_twist(&t, &psi.inverse().unwrap()).unwrap(), sl2);
    }

    #[test]
    fn twisted_sl2_splits(c in nonzero(), flip in any::<bool>()) {
        let (sl2, h) = corpus::load("sl2").unwrap();
        let mut psi = diag_twist(&c);
        if flip {
            psi = Matrix::from_i64(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]).mul(&psi).unwrap();
        }
        let t = yau_twist(&sl2, &psi).unwrap();
        let d = decompose(&t, &h).unwrap();
        prop_assert_eq!(d.roots().len(), 2);
        prop_assert!(verify_split(&d).unwrap().iter().all(|r| r.holds));
        prop_assert_eq!(connection_classes(&d).unwrap().len(), 1);
    }

    #[test]
    fn root_twist_powers_compose(name in prop::sample::select(vec!["sl2c", "sl2v1", "d6"]), a in -4i64..=4, b in -4i64..=4) {
        let (alg, h) = corpus::load(name).unwrap();
        let d = decompose(&alg, &h).unwrap();
        let sys = d.system();
        for r in d.roots() {
            prop_assert_eq!(sys.twist_pow(&sys.twist_pow(r, a), b), sys.twist_pow(r, a + b));
        }
    }
}

#[test]
fn corpus_files_roundtrip_through_text() {
    for name in corpus::names() {
        let (a, h) = corpus::load(name).unwrap();
        let text = write_algebra(&a, &h);
        let (b, h2): (HomAlgebra, Vec<Vector>) = parse_algebra_str(&text, name).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(Subspace::span(a.dim(), h).unwrap(), Subspace::span(a.dim(), h2.clone()).unwrap(), "{name}");
        assert_eq!(write_algebra(&b, &h2), text, "{name}");
    }
}
