use eigenweights::rootdata::{CartanType, RootDatum, Series};
use eigenweights::scalar::{frac, int, Rational};
use num::traits::Zero;

fn datum(s: &str) -> RootDatum {
    RootDatum::new(s.parse().unwrap())
}

fn all_types() -> Vec<String> {
    let mut v = Vec::new();
    for n in 1..=7 {
        v.push(format!("A{}", n));
    }
    for n in 2..=6 {
        v.push(format!("B{}", n));
        v.push(format!("C{}", n));
    }
    for n in 4..=7 {
        v.push(format!("D{}", n));
    }
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v
}

#[test]
fn a2_constants() {
    let d = datum("A2");
    assert_eq!(d.degrees, vec![2, 3]);
    assert_eq!(d.dual_coxeter, 3);
    assert_eq!(d.lacing, 1);
    assert_eq!(d.center_order, 3);
    assert_eq!(d.dim_g, 8);
}

#[test]
fn d4_degree_order() {
    assert_eq!(datum("D4").degrees, vec![2, 4, 6, 4]);
    assert_eq!(datum("D5").degrees, vec![2, 4, 6, 8, 5]);
}

#[test]
fn e8_constants() {
    let d = datum("E8");
    assert_eq!(d.degrees, vec![2, 8, 12, 14, 18, 20, 24, 30]);
    assert_eq!(d.dim_g, 248);
    assert_eq!(d.center_order, 1);
}

#[test]
fn dual_coxeter_lacing_center() {
    let expect = [
        ("A4", 5, 1, 5),
        ("B3", 5, 2, 2),
        ("C3", 4, 2, 2),
        ("D5", 8, 1, 4),
        ("G2", 4, 3, 1),
        ("F4", 9, 2, 1),
        ("E6", 12, 1, 3),
        ("E7", 18, 1, 2),
        ("E8", 30, 1, 1),
    ];
    for (t, h, l, z) in expect {
        let d = datum(t);
        assert_eq!((d.dual_coxeter, d.lacing, d.center_order), (h, l, z), "{}", t);
    }
}

#[test]
fn degree_sums() {
    for t in all_types() {
        let d = datum(&t);
        let n = d.rank as i64;
        assert_eq!(d.degrees.iter().map(|x| 2 * x - 1).sum::<i64>(), d.dim_g as i64, "{}", t);
        assert_eq!(2 * d.degrees.iter().sum::<i64>(), d.dim_g as i64 + n, "{}", t);
        assert_eq!(d.num_positive_roots() * 2 + d.rank, d.dim_g, "{}", t);
        // d_n = n for type D comes last
        let head = if d.cartan_type.series == Series::D { &d.degrees[..d.rank - 1] } else { &d.degrees[..] };
        for w in head.windows(2) {
            assert!(w[0] < w[1], "{}", t);
        }
    }
}

#[test]
fn pairing_2rho_type_a() {
    for n in 1..=7 {
        let d = datum(&format!("A{}", n));
        for k in 1..=n {
            let w = d.fundamental_weight(k - 1);
            assert_eq!(d.pairing_2rho(&w).unwrap(), (k * (n + 1 - k)) as i64);
        }
        assert_eq!(d.pairing_2rho(&vec![0; n]).unwrap(), 0);
    }
}

#[test]
fn pairing_2rho_e8_adjoint() {
    let d = datum("E8");
    assert_eq!(d.pairing_2rho(&d.adjoint_weight()).unwrap(), 58);
}

#[test]
fn pairing_2rho_rejects_negative() {
    let d = datum("A2");
    assert!(d.pairing_2rho(&[1, -1]).is_err());
    assert!(d.pairing_2rho(&[1, 0, 0]).is_err());
}

#[test]
fn pairing_2rho_is_additive() {
    for t in ["B3", "C4", "D4", "G2", "F4"] {
        let d = datum(t);
        let n = d.rank;
        for i in 0..n {
            for j in 0..n {
                let a = d.fundamental_weight(i);
                let b = d.fundamental_weight(j);
                let s: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                assert_eq!(d.pairing_2rho(&s).unwrap(), d.pairing_2rho(&a).unwrap() + d.pairing_2rho(&b).unwrap());
            }
        }
    }
}

#[test]
fn basic_form_type_a_fundamental() {
    for n in 1..=7i64 {
        let d = datum(&format!("A{}", n));
        for k in 1..=n {
            let w = d.fundamental_weight(k as usize - 1);
            assert_eq!(d.basic_form_int(&w, &w), frac(k * (n + 1 - k), n + 1));
        }
    }
}

#[test]
fn basic_form_minuscule_values() {
    let e6 = datum("E6");
    let m = e6.minuscule_weights();
    assert_eq!(m.len(), 2);
    for w in &m {
        assert_eq!(e6.basic_form_int(w, w), frac(4, 3));
    }
    let e7 = datum("E7");
    let w = &e7.minuscule_weights()[0];
    assert_eq!(e7.basic_form_int(w, w), frac(3, 2));
    for n in 2..=6usize {
        let b = datum(&format!("B{}", n));
        let spin = b.fundamental_weight(n - 1);
        assert_eq!(b.basic_form_int(&spin, &spin), frac(n as i64, 2));
        let c = datum(&format!("C{}", n));
        let std = c.fundamental_weight(0);
        assert_eq!(c.basic_form_int(&std, &std), int(1));
    }
    for n in 4..=7usize {
        let d = datum(&format!("D{}", n));
        let spin = d.fundamental_weight(n - 1);
        assert_eq!(d.basic_form_int(&spin, &spin), frac(n as i64, 4));
        let std = d.fundamental_weight(0);
        assert_eq!(d.basic_form_int(&std, &std), int(1));
    }
}

#[test]
fn basic_form_zero_and_symmetry() {
    for t in all_types() {
        let d = datum(&t);
        let n = d.rank;
        let zero = vec![Rational::zero(); n];
        for i in 0..n {
            let w: Vec<Rational> = d.fundamental_weight(i).iter().map(|&x| int(x)).collect();
            assert!(d.basic_form_value(&zero, &w).is_zero());
            for j in 0..n {
                let v: Vec<Rational> = d.fundamental_weight(j).iter().map(|&x| int(x)).collect();
                assert_eq!(d.basic_form_value(&w, &v), d.basic_form_value(&v, &w));
            }
        }
    }
}

#[test]
fn short_roots_have_length_two() {
    for t in all_types() {
        let d = datum(&t);
        let min = d.positive_roots.iter().map(|r| d.root_length(r)).min().unwrap();
        let max = d.positive_roots.iter().map(|r| d.root_length(r)).max().unwrap();
        assert_eq!(min, int(2), "{}", t);
        assert_eq!(max, int(2 * d.lacing), "{}", t);
    }
}

#[test]
fn basic_form_weyl_invariant() {
    for t in all_types() {
        let d = datum(&t);
        let n = d.rank;
        let weights: Vec<Vec<i64>> =
            (0..n).map(|i| d.fundamental_weight(i)).chain(std::iter::once(vec![1; n])).collect();
        for mu in &weights {
            for nu in &weights {
                for i in 0..n {
                    let a = d.reflect_weight(mu, i);
                    let b = d.reflect_weight(nu, i);
                    assert_eq!(d.basic_form_int(&a, &b), d.basic_form_int(mu, nu), "{} s_{}", t, i + 1);
                }
            }
        }
    }
}

#[test]
fn invalid_types_rejected() {
    for s in ["A0", "B1", "C1", "D2", "D3", "E5", "E9", "F3", "G3", "X2", "A"] {
        assert!(s.parse::<CartanType>().is_err(), "{}", s);
    }
    assert!(CartanType::new(Series::E, 6).is_ok());
}

#[test]
fn dualization_swaps_b_and_c() {
    let b: CartanType = "B3".parse().unwrap();
    assert_eq!(b.dual(), "C3".parse().unwrap());
    let g: CartanType = "G2".parse().unwrap();
    assert_eq!(g.dual(), g);
}

#[test]
fn weyl_dimensions() {
    let d = datum("E8");
    assert_eq!(d.weyl_dimension(&d.adjoint_weight()), 248u32.into());
    let g2 = datum("G2");
    assert_eq!(g2.weyl_dimension(&g2.quasi_minuscule_weight()), 7u32.into());
    let a4 = datum("A4");
    assert_eq!(a4.weyl_dimension(&[0, 1, 0, 0]), 10u32.into());
}
