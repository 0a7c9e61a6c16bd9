use eigenweights::chevalley::CentralizerBasis;
use eigenweights::invariants::{
    b_lambda, b_minuscule_closed, eigenweights, epsilon1_closed, halve, kappa_lambda, reduce_b, reduce_epsilon,
    spectral_data, Engine, EigenweightReport, Provenance, ReportOptions, SpectralData, TripleInputs,
};
use eigenweights::linalg::Matrix;
use eigenweights::repbuilder::{adjoint_module, general_module, DEFAULT_DIM_CAP};
use eigenweights::rootdata::RootDatum;
use eigenweights::scalar::{big, frac, int, QuadExt, Rational};
use num::traits::Zero;
use num::BigInt;

fn engine(t: &str) -> Engine {
    Engine::new(t.parse().unwrap()).unwrap()
}

fn report(e: &Engine, w: &[i64]) -> EigenweightReport {
    e.report(w, ReportOptions::default()).unwrap()
}

fn ints(v: &[i64]) -> Vec<QuadExt> {
    v.iter().map(|&x| QuadExt::rational(int(x))).collect()
}

fn data(e: &Engine, w: &[i64]) -> SpectralData {
    e.data(w, DEFAULT_DIM_CAP).unwrap().0
}

#[test]
fn deg_examples() {
    let a3 = engine("A3");
    let r = report(&a3, &[0, 1, 0]);
    assert_eq!((r.d, r.deg.clone()), (4, BigInt::from(2)));
    let b4 = engine("B4");
    let r = b4.report(&[0, 0, 1, 0], ReportOptions { with_b: false, ..Default::default() }).unwrap();
    assert_eq!(r.deg, "2867724288".parse::<BigInt>().unwrap());
}

#[test]
fn trivial_report() {
    let e = engine("C3");
    let r = report(&e, &[0, 0, 0]);
    assert_eq!(r.d, 0);
    assert_eq!(r.deg, BigInt::from(1));
    assert!(r.epsilon.iter().all(|q| q.is_rational() && q.a.is_zero()));
    assert_eq!(r.b, Some(Rational::zero()));
    assert_eq!(r.provenance, Provenance::Trivial);
}

#[test]
fn negative_weights_rejected() {
    let e = engine("A2");
    assert!(e.report(&[1, -1], ReportOptions::default()).is_err());
    assert!(e.report(&[1], ReportOptions::default()).is_err());
}

#[test]
fn eigenweight_examples() {
    assert_eq!(report(&engine("A4"), &[0, 1, 0, 0]).epsilon, ints(&[14, 6, 9, 13]));
    assert_eq!(report(&engine("A2"), &[1, 0]).epsilon, ints(&[1, 1]));
    let d4 = report(&engine("D4"), &[1, 0, 0, 0]);
    assert_eq!(d4.epsilon, ints(&[4, 4, 4, 2]));
    let block = d4.block.unwrap();
    assert_eq!(block.slots, (1, 3));
    assert_eq!(block.matrix, [[int(4), int(0)], [int(0), int(2)]]);
    let f4 = engine("F4");
    let qm = f4.datum().quasi_minuscule_weight();
    assert_eq!(f4.report(&qm, ReportOptions { with_b: false, ..Default::default() }).unwrap().epsilon, ints(&[52224, 27648, 32640, 47232]));
}

#[test]
fn mixed_degree_pairing_vanishes() {
    let e = engine("A3");
    let m = e.module(&[1, 0, 0], DEFAULT_DIM_CAP).unwrap();
    let v = kappa_lambda(&e.alg, &m, &e.basis.f_side[1], &e.basis.e_side[0]).unwrap();
    assert!(v.is_zero());
    let w = kappa_lambda(&e.alg, &m, &e.basis.f_side[0], &e.basis.e_side[0]).unwrap();
    assert!(!w.is_zero());
    assert!(kappa_lambda(&e.alg, &m, &e.basis.e_side[0], &e.basis.e_side[0]).is_err());
}

#[test]
fn epsilon1_formula_examples() {
    let a2 = RootDatum::new("A2".parse().unwrap());
    assert_eq!(epsilon1_closed(&a2, 2, &int(1)), int(1));
    let f4 = RootDatum::new("F4".parse().unwrap());
    assert_eq!(epsilon1_closed(&f4, 16, &int(4992)), int(52224));
    let b2 = RootDatum::new("B2".parse().unwrap());
    assert_eq!(epsilon1_closed(&b2, 4, &int(8)), int(32));
}

#[test]
fn epsilon1_formula_matches_matrix_route() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "D5", "G2"] {
        let e = engine(t);
        for k in 0..e.datum().rank {
            let w = e.datum().fundamental_weight(k);
            let r = e.report(&w, ReportOptions { with_b: false, ..Default::default() }).unwrap();
            let closed = epsilon1_closed(e.datum(), r.d, &big(&r.deg));
            assert_eq!(r.epsilon[0], QuadExt::rational(closed), "{} w{}", t, k + 1);
        }
    }
}

#[test]
fn minuscule_b_examples() {
    for (t, expect) in [("E6", 884), ("E7", 275310)] {
        let e = engine(t);
        let w = e.datum().minuscule_weights()[0].clone();
        let r = report(&e, &w);
        assert_eq!(b_minuscule_closed(e.datum(), &w, &big(&r.deg)).unwrap(), int(expect), "{}", t);
        assert_eq!(r.b, Some(int(expect)), "{}", t);
    }
}

#[test]
fn minuscule_b_matches_matrix_route() {
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5"] {
        let e = engine(t);
        for w in e.datum().minuscule_weights() {
            let r = report(&e, &w);
            assert_eq!(Some(b_minuscule_closed(e.datum(), &w, &big(&r.deg)).unwrap()), r.b, "{} {:?}", t, w);
        }
    }
    for n in 2..=5 {
        let e = engine(&format!("C{}", n));
        let r = report(&e, &e.datum().fundamental_weight(0));
        assert_eq!(r.b, Some(int(2 * n)));
    }
    let a2 = RootDatum::new("A2".parse().unwrap());
    assert!(b_minuscule_closed(&a2, &[1, 1], &int(1)).is_err());
}

#[test]
fn adjoint_b_g2() {
    let e = engine("G2");
    assert_eq!(report(&e, &e.datum().adjoint_weight()).b, Some(int(279936)));
}

#[test]
fn regular_nilpotent_cases() {
    for n in 1..=6usize {
        let e = engine(&format!("A{}", n));
        assert_eq!(report(&e, &e.datum().fundamental_weight(0)).epsilon, ints(&vec![1; n]));
    }
    for n in 2..=6usize {
        let e = engine(&format!("C{}", n));
        assert_eq!(report(&e, &e.datum().fundamental_weight(0)).epsilon, ints(&vec![4; n]));
    }
    let g2 = engine("G2");
    let r = report(&g2, &g2.datum().quasi_minuscule_weight());
    assert_eq!(r.epsilon, ints(&[108, 108]));
}

#[test]
fn type_a_duality() {
    for n in 2..=5usize {
        let e = engine(&format!("A{}", n));
        for k in 0..n {
            let a = report(&e, &e.datum().fundamental_weight(k));
            let b = report(&e, &e.datum().fundamental_weight(n - 1 - k));
            assert_eq!((a.d, &a.deg, &a.epsilon, &a.b), (b.d, &b.deg, &b.epsilon, &b.b), "A{} w{}", n, k + 1);
        }
    }
}

#[test]
fn d_even_block_vanishes_off_spin() {
    for t in ["D4", "D6"] {
        let e = engine(t);
        let n = e.datum().rank;
        for k in 0..n - 2 {
            let r = e.report(&e.datum().fundamental_weight(k), ReportOptions { with_b: false, ..Default::default() }).unwrap();
            let b = r.block.unwrap();
            assert!(b.matrix[0][1].is_zero() && b.matrix[1][0].is_zero(), "{} w{}", t, k + 1);
        }
    }
}

#[test]
fn d_even_spin_block_is_not_diagonal() {
    let e = engine("D4");
    let r = report(&e, &[0, 0, 0, 1]);
    let b = r.block.unwrap();
    assert_eq!(b.matrix, [[frac(5, 2), frac(3, 2)], [frac(1, 2), frac(7, 2)]]);
    let (x, y) = b.eigenvalues();
    let mut ev = [x, y];
    ev.sort_by(|p, q| p.a.cmp(&q.a));
    assert_eq!(ev.to_vec(), ints(&[2, 4]));
}

#[test]
fn half_spin_reports_differ_only_in_the_block() {
    let e = engine("D4");
    let a = report(&e, &[0, 0, 1, 0]);
    let b = report(&e, &[0, 0, 0, 1]);
    assert_eq!((a.d, &a.deg, &a.b), (b.d, &b.deg, &b.b));
    let (ba, bb) = (a.block.unwrap(), b.block.unwrap());
    assert_eq!(ba.matrix[0][0], bb.matrix[0][0]);
    assert_eq!(ba.matrix[0][1], -bb.matrix[0][1].clone());
}

#[test]
fn rescaled_centralizer_bases_leave_epsilon_unchanged() {
    for (t, w) in [("B3", vec![0, 1, 0]), ("G2", vec![1, 0]), ("D4", vec![1, 0, 0, 0])] {
        let e = engine(t);
        let m = e.module(&w, DEFAULT_DIM_CAP).unwrap();
        let scale = |v: &Vec<Rational>, c: &Rational| v.iter().map(|x| x * c).collect::<Vec<_>>();
        let e_side: Vec<_> = e.basis.e_side.iter().enumerate().map(|(j, v)| scale(v, &int(j as i64 + 2))).collect();
        let f_side: Vec<_> = e.basis.f_side.iter().enumerate().map(|(j, v)| scale(v, &frac(-3, j as i64 + 1))).collect();
        let n = e_side.len();
        let mut pairings = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                pairings.set(a, b, e.alg.kappa_min(&f_side[a], &e_side[b]));
            }
        }
        let scaled = CentralizerBasis { degrees: e.basis.degrees.clone(), e_side, f_side, pairings, normalization: e.basis.normalization };
        let before = eigenweights(&spectral_data(&e.alg, &m, &e.basis).unwrap(), &e.basis).unwrap().0;
        let after = eigenweights(&spectral_data(&e.alg, &m, &scaled).unwrap(), &scaled).unwrap().0;
        assert_eq!(before, after, "{}", t);
    }
}

#[test]
fn reduction_with_zero_is_identity() {
    let e = engine("B3");
    let a = data(&e, &[0, 1, 0]);
    let zero = SpectralData::trivial(&e.basis.degrees, e.basis.normalization);
    assert_eq!(reduce_epsilon(&a, &zero).unwrap(), a);
    assert_eq!(reduce_epsilon(&zero, &a).unwrap(), a);
}

#[test]
fn reduction_reproduces_the_adjoint_of_a2() {
    let e = engine("A2");
    let sum = reduce_epsilon(&data(&e, &[1, 0]), &data(&e, &[0, 1])).unwrap();
    let adj = spectral_data(&e.alg, &adjoint_module(&e.alg).unwrap(), &e.basis).unwrap();
    assert_eq!(sum.deg, adj.deg);
    assert_eq!(sum.kappa, adj.kappa);
    let direct = report(&e, &[1, 1]);
    let reduced = e.report_from_data(&[1, 1], &sum, None, Provenance::ExplicitClassical).unwrap();
    assert_eq!((reduced.d, &reduced.deg, &reduced.epsilon), (direct.d, &direct.deg, &direct.epsilon));
}

#[test]
fn reduction_reproduces_sym2_of_a1() {
    let e = engine("A1");
    let one = data(&e, &[1]);
    let sum = reduce_epsilon(&one, &one).unwrap();
    let direct = spectral_data(&e.alg, &general_module(&e.alg, &[2], DEFAULT_DIM_CAP).unwrap(), &e.basis).unwrap();
    assert_eq!(sum, direct);
    assert_eq!(halve(&sum).unwrap(), one);
}

#[test]
fn reduction_rejects_mixed_bases() {
    let e = engine("A2");
    let mut a = data(&e, &[1, 0]);
    let b = data(&e, &[0, 1]);
    a.degrees.reverse();
    assert!(reduce_epsilon(&a, &b).is_err());
}

#[test]
fn three_weight_b_identity() {
    let e = engine("A1");
    let m = |k: i64| general_module(&e.alg, &[k], DEFAULT_DIM_CAP).unwrap();
    let one = (1, big(&report(&e, &[1]).deg), b_lambda(&e.alg, &m(1)));
    let two = report(&e, &[2]);
    let pair = (big(&two.deg), b_lambda(&e.alg, &m(2)));
    let inp = TripleInputs { single: [one.clone(), one.clone(), one], pairs: [pair.clone(), pair.clone(), pair] };
    assert_eq!(reduce_b(&inp), b_lambda(&e.alg, &m(3)));
}

#[test]
fn three_weight_b_identity_collapses() {
    let e = engine("A2");
    let r1 = report(&e, &[1, 0]);
    let r2 = report(&e, &[0, 1]);
    let r12 = report(&e, &[1, 1]);
    let zero = (0, int(1), int(0));
    let inp = TripleInputs {
        single: [(r1.d, big(&r1.deg), r1.b.clone().unwrap()), (r2.d, big(&r2.deg), r2.b.clone().unwrap()), zero],
        pairs: [
            (big(&r2.deg), r2.b.clone().unwrap()),
            (big(&r1.deg), r1.b.clone().unwrap()),
            (big(&r12.deg), r12.b.clone().unwrap()),
        ],
    };
    assert_eq!(Some(reduce_b(&inp)), r12.b);
}

#[test]
fn three_weight_b_is_order_independent() {
    let e = engine("A2");
    let r = |w: &[i64]| report(&e, w);
    let single = |w: &[i64]| {
        let x = r(w);
        (x.d, big(&x.deg), x.b.unwrap())
    };
    let pair = |w: &[i64]| {
        let x = r(w);
        (big(&x.deg), x.b.unwrap())
    };
    let a = TripleInputs {
        single: [single(&[1, 0]), single(&[1, 0]), single(&[0, 1])],
        pairs: [pair(&[1, 1]), pair(&[1, 1]), pair(&[2, 0])],
    };
    let b = TripleInputs {
        single: [single(&[0, 1]), single(&[1, 0]), single(&[1, 0])],
        pairs: [pair(&[2, 0]), pair(&[1, 1]), pair(&[1, 1])],
    };
    assert_eq!(reduce_b(&a), reduce_b(&b));
    assert_eq!(Some(reduce_b(&a)), r(&[2, 1]).b);
}
