use eigenweights::invariants::{Block, EigenweightReport, Engine, ReportOptions};
use eigenweights::rootdata::RootDatum;
use eigenweights::scalar::{frac, int, QuadExt, Rational};
use eigenweights::volume::{
    apply_operators, empty_product_value, joint_eigenvalues, series, single_leg_form, zeta_jet, zeta_product_jet,
    Jet, VolumeOptions, ZetaCurve,
};
use eigenweights::Error;
use num::traits::{ToPrimitive, Zero};

fn engine(t: &str) -> Engine {
    Engine::new(t.parse().unwrap()).unwrap()
}

fn report(e: &Engine, w: &[i64]) -> EigenweightReport {
    e.report(w, ReportOptions::default()).unwrap()
}

fn opts() -> VolumeOptions {
    VolumeOptions::default()
}

fn genus_one() -> ZetaCurve {
    ZetaCurve::new(3, 1, vec![1, -2, 3]).unwrap()
}

fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap()
}

/// (∂_t)^m Z(q^{−d}e^t) at t = 0 from Z(u) = Σ_k c_k u^k.
fn zeta_derivative_oracle(curve: &ZetaCurve, d: i64, m: u32) -> f64 {
    let q = curve.q as f64;
    let x = q.powi(-(d as i32));
    let count = |k: i64| if k < 0 { 0.0 } else { (q.powi(k as i32 + 1) - 1.0) / (q - 1.0) };
    let mut acc = 0.0;
    for k in 0..4000i64 {
        let ck: f64 = curve.numerator.iter().enumerate().map(|(i, &a)| a as f64 * count(k - i as i64)).sum();
        let term = ck * (k as f64).powi(m as i32) * x.powi(k as i32);
        acc += term;
        if k > 50 && term.abs() < 1e-30 * acc.abs().max(1.0) {
            break;
        }
    }
    acc
}

/// Expands ∏_i (c_i + Σ_j ε_ij ∂_j) over all choices and applies it to ∏_j Z_j.
fn volume_oracle(curve: &ZetaCurve, datum: &RootDatum, legs: &[(f64, Vec<f64>)]) -> f64 {
    let n = datum.rank;
    let mut total = 0.0;
    let choices = (n + 1).pow(legs.len() as u32);
    for mut code in 0..choices {
        let mut coef = 1.0;
        let mut orders = vec![0u32; n];
        for (c, eps) in legs {
            let pick = code % (n + 1);
            code /= n + 1;
            if pick == n {
                coef *= c;
            } else {
                coef *= eps[pick];
                orders[pick] += 1;
            }
        }
        if coef == 0.0 {
            continue;
        }
        let prod: f64 =
            datum.degrees.iter().zip(&orders).map(|(&d, &m)| zeta_derivative_oracle(curve, d, m)).product();
        total += coef * prod;
    }
    let pi1 = datum.center_order as f64;
    pi1 * (curve.q as f64).powi((curve.genus as i32 - 1) * datum.dim_g as i32) * total
}

fn legs_of(curve: &ZetaCurve, reports: &[EigenweightReport]) -> Vec<(f64, Vec<f64>)> {
    reports
        .iter()
        .map(|r| {
            let c = (2.0 * curve.genus as f64 - 2.0) * to_f64(r.b.as_ref().unwrap());
            (c, r.epsilon.iter().map(|e| to_f64(&e.a)).collect())
        })
        .collect()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1e-300)
}

#[test]
fn curve_validation() {
    assert!(ZetaCurve::projective_line(7).is_ok());
    assert!(ZetaCurve::projective_line(6).is_err());
    assert!(ZetaCurve::projective_line(1).is_err());
    for a in -2..=2 {
        let c = ZetaCurve::new(2, 1, vec![1, a, 2]).unwrap();
        assert!(c.warnings().is_empty());
    }
    assert!(ZetaCurve::new(2, 1, vec![1, 1, 3]).is_err());
    assert!(ZetaCurve::new(2, 1, vec![2, 1, 2]).is_err());
    assert!(ZetaCurve::new(2, 1, vec![1, 1]).is_err());
    assert!(ZetaCurve::new(2, 0, vec![1, 0, 0]).is_err());
    assert!(ZetaCurve::new(4, 2, vec![1, 3, 5, 12, 16]).is_ok());
    assert!(ZetaCurve::new(4, 2, vec![1, 3, 5, 13, 16]).is_err());
    assert!(matches!(ZetaCurve::new(9, 0, vec![3]), Err(Error::InvalidCurve(_))));
}

#[test]
fn hasse_bound_is_a_warning() {
    let c = ZetaCurve::new(2, 1, vec![1, 3, 2]).unwrap();
    assert_eq!(c.warnings().len(), 1);
    assert!(genus_one().warnings().is_empty());
}

#[test]
fn zeta_values() {
    let p1 = ZetaCurve::projective_line(2).unwrap();
    assert_eq!(p1.zeta(2).unwrap(), frac(8, 3));
    assert_eq!(genus_one().zeta(2).unwrap(), frac(11, 8));
    assert!(p1.z_value(&int(1)).is_err());
    assert!(p1.z_value(&frac(1, 2)).is_err());
}

#[test]
fn order_zero_jet_is_the_zeta_value() {
    for curve in [ZetaCurve::projective_line(3).unwrap(), genus_one()] {
        for d in 2..=5 {
            let j: Jet<Rational> = zeta_jet(&curve, d, 2, 1, 0).unwrap();
            assert_eq!(j.constant_term(), curve.zeta(d).unwrap());
        }
    }
}

#[test]
fn linear_coefficient_on_the_line() {
    let p1 = ZetaCurve::projective_line(2).unwrap();
    let j: Jet<Rational> = zeta_jet(&p1, 2, 1, 0, 1).unwrap();
    assert_eq!(j.constant_term(), frac(8, 3));
    assert_eq!(j.coefficient(&[1]), frac(32, 9));
    assert!(close(to_f64(&frac(32, 9)), zeta_derivative_oracle(&p1, 2, 1)));
}

#[test]
fn jet_coefficients_match_the_series_oracle() {
    for curve in [ZetaCurve::projective_line(2).unwrap(), ZetaCurve::projective_line(5).unwrap(), genus_one()] {
        for d in 2..=4 {
            let j: Jet<Rational> = zeta_jet(&curve, d, 1, 0, 4).unwrap();
            let mut fact = 1.0;
            for m in 0..=4u32 {
                if m > 0 {
                    fact *= m as f64;
                }
                let exact = to_f64(&j.coefficient(&[m])) * fact;
                assert!(close(exact, zeta_derivative_oracle(&curve, d, m)), "q={} d={} m={}", curve.q, d, m);
            }
        }
    }
}

#[test]
fn jet_derivative_lowers_order() {
    let curve = genus_one();
    let j: Jet<Rational> = zeta_product_jet(&curve, &[2, 3], 3).unwrap();
    let dj = j.derivative(0);
    assert_eq!(dj.order, 2);
    assert_eq!(dj.coefficient(&[1, 1]), j.coefficient(&[2, 1]) * int(2));
    let prod = j.mul(&j.derivative(1));
    let other = j.derivative(1).mul(&j);
    assert_eq!(prod, other);
}

#[test]
fn series_inverse_and_exp() {
    let a = vec![int(1), int(2), int(3)];
    let inv = series::inverse(&a, 3).unwrap();
    assert_eq!(series::mul(&a, &inv, 3), vec![int(1), int(0), int(0), int(0)]);
    assert!(series::inverse(&[int(0), int(1)], 2).is_none());
    let e = series::scaled_exp(&int(1), &int(2), 3);
    assert_eq!(e, vec![int(1), int(2), int(2), frac(4, 3)]);
}

#[test]
fn empty_products() {
    let a1 = RootDatum::new("A1".parse().unwrap());
    let a2 = RootDatum::new("A2".parse().unwrap());
    let p1 = ZetaCurve::projective_line(2).unwrap();
    assert_eq!(empty_product_value(&p1, &a1, &opts()).unwrap(), frac(2, 3));
    let direct = int(3) * frac(1, 256) * frac(8, 3) * frac(32, 21);
    assert_eq!(empty_product_value(&p1, &a2, &opts()).unwrap(), direct);
    assert_eq!(apply_operators(&[], &p1, &a2, &opts()).unwrap().value, frac(1, 21));
    assert_eq!(apply_operators(&[], &genus_one(), &a1, &opts()).unwrap().value, frac(11, 4));
}

#[test]
fn a1_two_legs_on_the_line() {
    let e = engine("A1");
    let w = report(&e, &[1]);
    let p1 = ZetaCurve::projective_line(2).unwrap();
    let v = apply_operators(&[w.clone(), w.clone()], &p1, e.datum(), &opts()).unwrap();
    assert!(v.pi1_class_zero);
    assert_eq!(v.value, frac(46, 27));
    assert_eq!(single_leg_form(&w, &p1, e.datum(), 2, &opts()).unwrap().value, v.value);
}

#[test]
fn theorem_forms_agree() {
    let curves = [ZetaCurve::projective_line(2).unwrap(), ZetaCurve::projective_line(3).unwrap(), genus_one()];
    for (t, w) in [("A1", vec![1]), ("A1", vec![2]), ("A2", vec![1, 0]), ("A2", vec![1, 1]), ("B2", vec![0, 1])] {
        let e = engine(t);
        let rep = report(&e, &w);
        for curve in &curves {
            for r in 1..=3usize {
                let legs = vec![rep.clone(); r];
                let a = apply_operators(&legs, curve, e.datum(), &opts()).unwrap();
                let b = single_leg_form(&rep, curve, e.datum(), r, &opts()).unwrap();
                assert_eq!(a, b, "{} {:?} q={} g={} r={}", t, w, curve.q, curve.genus, r);
                if a.pi1_class_zero {
                    let oracle = volume_oracle(curve, e.datum(), &legs_of(curve, &legs));
                    assert!(close(to_f64(&a.value), oracle), "{} {:?} r={}: {} vs {}", t, w, r, a.value, oracle);
                } else {
                    assert!(a.value.is_zero());
                }
            }
        }
    }
}

#[test]
fn mixed_legs_match_the_oracle() {
    let e = engine("A2");
    let legs = vec![report(&e, &[1, 0]), report(&e, &[0, 1]), report(&e, &[1, 1])];
    for curve in [ZetaCurve::projective_line(2).unwrap(), genus_one()] {
        let v = apply_operators(&legs, &curve, e.datum(), &opts()).unwrap();
        assert!(v.pi1_class_zero);
        let oracle = volume_oracle(&curve, e.datum(), &legs_of(&curve, &legs));
        assert!(close(to_f64(&v.value), oracle));
    }
}

#[test]
fn leg_order_is_irrelevant() {
    let e = engine("B2");
    let legs = vec![report(&e, &[1, 0]), report(&e, &[0, 2]), report(&e, &[1, 1])];
    let mut rev = legs.clone();
    rev.reverse();
    let curve = genus_one();
    assert_eq!(
        apply_operators(&legs, &curve, e.datum(), &opts()).unwrap().value,
        apply_operators(&rev, &curve, e.datum(), &opts()).unwrap().value
    );
}

#[test]
fn truncation_is_safe() {
    let e = engine("A2");
    let legs = vec![report(&e, &[1, 0]); 3];
    let curve = genus_one();
    let base = apply_operators(&legs, &curve, e.datum(), &opts()).unwrap();
    let wide = apply_operators(&legs, &curve, e.datum(), &VolumeOptions { extra_order: 2, ..opts() }).unwrap();
    assert_eq!(base, wide);
    let single = single_leg_form(&legs[0], &curve, e.datum(), 3, &VolumeOptions { extra_order: 2, ..opts() }).unwrap();
    assert_eq!(base.value, single.value);
}

#[test]
fn nonzero_class_gives_zero() {
    let e = engine("A2");
    let w = report(&e, &[1, 0]);
    let curve = ZetaCurve::projective_line(2).unwrap();
    let v = apply_operators(&[w.clone(), w.clone()], &curve, e.datum(), &opts()).unwrap();
    assert!(!v.pi1_class_zero);
    assert!(v.value.is_zero());
    assert!(!single_leg_form(&w, &curve, e.datum(), 1, &opts()).unwrap().pi1_class_zero);
}

#[test]
fn b_only_degenerate_case() {
    let e = engine("A1");
    let mut w = report(&e, &[2]);
    for x in w.epsilon.iter_mut() {
        *x = QuadExt::zero();
    }
    for curve in [ZetaCurve::projective_line(2).unwrap(), genus_one()] {
        let base = empty_product_value(&curve, e.datum(), &opts()).unwrap();
        let expect = int(2 * curve.genus as i64 - 2) * w.b.clone().unwrap() * &base;
        assert_eq!(apply_operators(&[w.clone()], &curve, e.datum(), &opts()).unwrap().value, expect);
        assert_eq!(single_leg_form(&w, &curve, e.datum(), 1, &opts()).unwrap().value, expect);
    }
}

#[test]
fn pi1_override() {
    let e = engine("A1");
    let curve = ZetaCurve::projective_line(2).unwrap();
    let one = VolumeOptions { pi1_order: Some(1), ..opts() };
    assert_eq!(empty_product_value(&curve, e.datum(), &one).unwrap(), frac(1, 3));
}

#[test]
fn reports_without_b_are_refused() {
    let e = engine("A1");
    let w = e.report(&[2], ReportOptions { with_b: false, ..Default::default() }).unwrap();
    let curve = ZetaCurve::projective_line(2).unwrap();
    assert!(apply_operators(&[w], &curve, e.datum(), &opts()).is_err());
    let other = report(&engine("A2"), &[1, 1]);
    assert!(apply_operators(&[other], &curve, e.datum(), &opts()).is_err());
}

#[test]
fn d6_spin_irrational_part_cancels() {
    let e = engine("D6");
    let w = report(&e, &[0, 0, 0, 0, 1, 0]);
    assert!(!w.is_rational());
    let curve = ZetaCurve::projective_line(2).unwrap();
    let legs = vec![w.clone(), w.clone()];
    let a = apply_operators(&legs, &curve, e.datum(), &opts()).unwrap();
    assert!(a.pi1_class_zero);
    let b = single_leg_form(&w, &curve, e.datum(), 2, &opts()).unwrap();
    assert_eq!(a.value, b.value);
}

#[test]
fn non_commuting_blocks_are_refused() {
    let e = engine("D4");
    let v = report(&e, &[1, 0, 0, 0]);
    let s = report(&e, &[0, 0, 0, 1]);
    let curve = ZetaCurve::projective_line(2).unwrap();
    let r = apply_operators(&[v.clone(), v, s.clone(), s], &curve, e.datum(), &opts());
    assert!(matches!(r, Err(Error::NonCommuting(_))));
}

#[test]
fn joint_eigenvalues_pair_consistently() {
    let b0 = Block { slots: (1, 3), matrix: [[frac(5, 2), frac(3, 2)], [frac(1, 2), frac(7, 2)]] };
    let scalar = Block { slots: (1, 3), matrix: [[int(3), int(0)], [int(0), int(3)]] };
    let combo = Block { slots: (1, 3), matrix: [[int(6), int(3)], [int(1), int(8)]] };
    let ev = joint_eigenvalues(&[b0, scalar, combo]).unwrap();
    assert_eq!(ev[1], (QuadExt::rational(int(3)), QuadExt::rational(int(3))));
    // combo = 1 + 2·b0
    let lift = |x: &QuadExt| QuadExt::rational(int(1)) + QuadExt::rational(int(2)) * x.clone();
    assert_eq!(ev[2], (lift(&ev[0].0), lift(&ev[0].1)));
}
