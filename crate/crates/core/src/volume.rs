//! Exact evaluation of the derivative-of-zeta volume formulas.
//!
//! With u_j = q^{−d_j}·e^{t_j} and t_j = −(log q)·s_j, the operator
//! −(log q)^{−1}∂_{s_j} becomes ∂_{t_j}, so every coefficient stays in ℚ
//! (or ℚ(√Δ) for the repeated degree of D_n, n even).

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{Block, EigenweightReport};
use crate::rootdata::RootDatum;
use crate::scalar::{big, format_rational, int, QuadExt, Rational, Scalar};

/// ζ_C(s) = Z(q^{−s}) with Z(u) = P(u)/((1−u)(1−qu)).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaCurve {
    pub q: u64,
    pub genus: u32,
    /// a_0, …, a_{2g}.
    pub numerator: Vec<i64>,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        return true;
    }
    let mut m = q;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

impl ZetaCurve {
    pub fn new(q: u64, genus: u32, numerator: Vec<i64>) -> Result<Self> {
        let c = ZetaCurve { q, genus, numerator };
        c.validate()?;
        Ok(c)
    }

    pub fn projective_line(q: u64) -> Result<Self> {
        Self::new(q, 0, vec![1])
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime_power(self.q) {
            return Err(Error::InvalidCurve(format!("q = {} is not a prime power", self.q)));
        }
        let g = self.genus as usize;
        if self.numerator.len() != 2 * g + 1 {
            return Err(Error::InvalidCurve(format!(
                "numerator has {} coefficients, genus {} needs {}",
                self.numerator.len(),
                g,
                2 * g + 1
            )));
        }
        if self.numerator[0] != 1 {
            return Err(Error::InvalidCurve("a_0 must be 1".into()));
        }
        let q = BigInt::from(self.q);
        for i in 0..=g {
            let lhs = BigInt::from(self.numerator[2 * g - i]);
            let rhs = num::pow::pow(q.clone(), g - i) * BigInt::from(self.numerator[i]);
            if lhs != rhs {
                return Err(Error::InvalidCurve(format!(
                    "functional equation fails: a_{} = {} but q^{}·a_{} = {}",
                    2 * g - i,
                    lhs,
                    g - i,
                    i,
                    rhs
                )));
            }
        }
        Ok(())
    }

    /// Violations of the Hasse–Weil bound |a_1| ≤ 2g√q; advisory only.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.genus > 0 {
            let a1 = self.numerator[1] as i128;
            let bound = 4 * (self.genus as i128).pow(2) * self.q as i128;
            if a1 * a1 > bound {
                out.push(format!("|a_1| = {} exceeds the Hasse-Weil bound 2g·sqrt(q)", a1.abs()));
            }
        }
        out
    }

    pub fn q_rational(&self) -> Rational {
        big(&BigInt::from(self.q))
    }

    /// q^e for any integer e.
    pub fn q_pow(&self, e: i64) -> Rational {
        let p = num::pow::pow(BigInt::from(self.q), e.unsigned_abs() as usize);
        if e >= 0 {
            big(&p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    }

    /// Z(u) at a rational point.
    pub fn z_value(&self, u: &Rational) -> Result<Rational> {
        let p = self.numerator.iter().rev().fold(Rational::zero(), |acc, &a| acc * u + int(a));
        let den = (Rational::one() - u) * (Rational::one() - self.q_rational() * u);
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("Z has a pole at u = {}", u)));
        }
        Ok(p / den)
    }

    /// ζ_C(s) at an integer s.
    pub fn zeta(&self, s: i64) -> Result<Rational> {
        self.z_value(&self.q_pow(-s))
    }
}

/// Truncated univariate power series helpers; index k holds the τ^k coefficient.
pub mod series {
    use super::*;

    pub fn mul<T: Scalar>(a: &[T], b: &[T], order: usize) -> Vec<T> {
        let mut out = vec![T::zero(); order + 1];
        for (i, x) in a.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        out
    }

    /// 1/a; requires a_0 ≠ 0.
    pub fn inverse<T: Scalar>(a: &[T], order: usize) -> Option<Vec<T>> {
        if a.is_empty() || a[0].is_zero() {
            return None;
        }
        let inv0 = T::one() / a[0].clone();
        let mut out = vec![T::zero(); order + 1];
        out[0] = inv0.clone();
        for k in 1..=order {
            let mut acc = T::zero();
            for i in 1..=k.min(a.len() - 1) {
                acc = acc + a[i].clone() * out[k - i].clone();
            }
            out[k] = -(acc * inv0.clone());
        }
        Some(out)
    }

    /// c·e^{ετ}.
    pub fn scaled_exp<T: Scalar>(c: &T, eps: &T, order: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(order + 1);
        let mut term = c.clone();
        for k in 0..=order {
            out.push(term.clone());
            term = term * eps.clone() / <T as Scalar>::from_i64(k as i64 + 1);
        }
        out
    }
}

/// Taylor series of Z(q^{−d}·e^{ε τ}) in τ up to τ^order.
pub fn zeta_series<T: Scalar>(curve: &ZetaCurve, d: i64, eps: &T, order: usize) -> Result<Vec<T>> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("shift d = {} would hit a pole of ζ", d)));
    }
    let u = series::scaled_exp(&T::from_rational(&curve.q_pow(-d)), eps, order);
    let mut p = vec![T::zero(); order + 1];
    for &a in curve.numerator.iter().rev() {
        p = series::mul(&p, &u, order);
        p[0] = p[0].clone() + <T as Scalar>::from_i64(a);
    }
    let one_minus = |scale: &T| -> Vec<T> {
        let mut v: Vec<T> = u.iter().map(|x| -(scale.clone() * x.clone())).collect();
        v[0] = v[0].clone() + T::one();
        v
    };
    let den = series::mul(&one_minus(&T::one()), &one_minus(&T::from_rational(&curve.q_rational())), order);
    let inv = series::inverse(&den, order).ok_or_else(|| Error::InvalidInput("Z has a pole at u = q^{-d}".into()))?;
    Ok(series::mul(&p, &inv, order))
}

/// A truncated power series in t_1, …, t_n of total order ≤ `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    pub nvars: usize,
    pub order: usize,
    coeffs: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Jet<T> {
    pub fn constant(nvars: usize, order: usize, c: T) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(vec![0; nvars], c);
        }
        Jet { nvars, order, coeffs }
    }

    /// Σ_k s_k t_var^k.
    pub fn univariate(nvars: usize, order: usize, var: usize, s: &[T]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in s.iter().enumerate().take(order + 1) {
            if !c.is_zero() {
                let mut m = vec![0; nvars];
                m[var] = k as u32;
                coeffs.insert(m, c.clone());
            }
        }
        Jet { nvars, order, coeffs }
    }

    pub fn coefficient(&self, monomial: &[u32]) -> T {
        self.coeffs.get(monomial).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> T {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.coeffs.iter()
    }

    fn insert_add(map: &mut BTreeMap<Vec<u32>, T>, m: Vec<u32>, c: T) {
        let entry = map.entry(m).or_insert_with(T::zero);
        *entry = entry.clone() + c;
    }

    fn pruned(mut self) -> Self {
        self.coeffs.retain(|_, c| !c.is_zero());
        self
    }

    pub fn add(&self, o: &Jet<T>) -> Jet<T> {
        let order = self.order.min(o.order);
        let mut coeffs = BTreeMap::new();
        for (m, c) in self.coeffs.iter().chain(o.coeffs.iter()) {
            if m.iter().sum::<u32>() as usize <= order {
                Self::insert_add(&mut coeffs, m.clone(), c.clone());
            }
        }
        Jet { nvars: self.nvars, order, coeffs }.pruned()
    }

    pub fn scaled(&self, a: &T) -> Jet<T> {
        let coeffs = self.coeffs.iter().map(|(m, c)| (m.clone(), c.clone() * a.clone())).collect();
        Jet { nvars: self.nvars, order: self.order, coeffs }.pruned()
    }

    pub fn mul(&self, o: &Jet<T>) -> Jet<T> {
        let order = self.order.min(o.order);
        let mut coeffs = BTreeMap::new();
        for (m1, c1) in &self.coeffs {
            let d1: u32 = m1.iter().sum();
            for (m2, c2) in &o.coeffs {
                if (d1 + m2.iter().sum::<u32>()) as usize > order {
                    continue;
                }
                let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                Self::insert_add(&mut coeffs, m, c1.clone() * c2.clone());
            }
        }
        Jet { nvars: self.nvars, order, coeffs }.pruned()
    }

    /// ∂/∂t_var; the order drops by one.
    pub fn derivative(&self, var: usize) -> Jet<T> {
        let mut coeffs = BTreeMap::new();
        for (m, c) in &self.coeffs {
            if m[var] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            coeffs.insert(m2, c.clone() * <T as Scalar>::from_i64(m[var] as i64));
        }
        Jet { nvars: self.nvars, order: self.order.saturating_sub(1), coeffs }
    }
}

/// Jet of Z(q^{−d}·e^{t_var}).
pub fn zeta_jet<T: Scalar>(curve: &ZetaCurve, d: i64, nvars: usize, var: usize, order: usize) -> Result<Jet<T>> {
    let s = zeta_series(curve, d, &T::one(), order)?;
    Ok(Jet::univariate(nvars, order, var, &s))
}

/// ∏_j Z(q^{−d_j}·e^{t_j}).
pub fn zeta_product_jet<T: Scalar>(curve: &ZetaCurve, degrees: &[i64], order: usize) -> Result<Jet<T>> {
    let n = degrees.len();
    let mut acc = Jet::constant(n, order, T::one());
    for (j, &d) in degrees.iter().enumerate() {
        acc = acc.mul(&zeta_jet(curve, d, n, j, order)?);
    }
    Ok(acc)
}

/// D = c + Σ_j ε_j ∂_{t_j}.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOperator {
    pub constant: Rational,
    pub coefficients: Vec<QuadExt>,
}

impl DiffOperator {
    pub fn apply(&self, jet: &Jet<QuadExt>) -> Jet<QuadExt> {
        let mut out = jet.scaled(&QuadExt::rational(self.constant.clone()));
        out.order = jet.order.saturating_sub(1);
        for (j, e) in self.coefficients.iter().enumerate() {
            if !e.is_zero() {
                out = out.add(&jet.derivative(j).scaled(e));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VolumeOptions {
    /// Overrides |π₁(G)|; G adjoint by default.
    pub pi1_order: Option<i64>,
    /// Extra jet order beyond the number of operators.
    pub extra_order: usize,
}

/// Value of a volume formula's right-hand side.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeResult {
    pub value: Rational,
    pub pi1_class_zero: bool,
    pub r: usize,
    pub group: String,
    pub lambdas: Vec<Vec<i64>>,
}

impl VolumeResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "value": format_rational(&self.value),
            "pi1_class_zero": self.pi1_class_zero,
            "r": self.r,
            "group": self.group,
            "lambdas": self.lambdas,
            "label": "formula value",
        })
    }
}

/// |π₁(G)|·q^{(g−1)·dim G}.
pub fn prefactor(curve: &ZetaCurve, datum: &RootDatum, opts: &VolumeOptions) -> Rational {
    let pi1 = opts.pi1_order.unwrap_or(datum.center_order);
    int(pi1) * curve.q_pow((curve.genus as i64 - 1) * datum.dim_g as i64)
}

fn class_is_zero(datum: &RootDatum, lambdas: &[Vec<i64>]) -> bool {
    let n = datum.rank;
    let sum: Vec<i64> = (0..n).map(|i| lambdas.iter().map(|l| l[i]).sum()).collect();
    datum.in_root_lattice(&sum)
}

fn check_reports(datum: &RootDatum, reports: &[EigenweightReport]) -> Result<()> {
    for r in reports {
        if r.cartan_type != datum.cartan_type || r.epsilon.len() != datum.rank {
            return Err(Error::InvalidInput(format!("report for {} does not match {}", r.cartan_type, datum.cartan_type)));
        }
        if r.b.is_none() {
            return Err(Error::InvalidInput(format!("report for {:?} carries no b_λ", r.lambda)));
        }
    }
    Ok(())
}

fn raw_block(datum: &RootDatum, r: &EigenweightReport) -> Result<Block> {
    if let Some(b) = &r.block {
        return Ok(b.clone());
    }
    let n = datum.rank;
    let (p, q) = (n / 2 - 1, n - 1);
    let rat = |i: usize| {
        r.epsilon[i]
            .is_rational()
            .then(|| r.epsilon[i].a.clone())
            .ok_or_else(|| Error::InvalidInput("irrational eigenweights without a block".into()))
    };
    Ok(Block { slots: (p, q), matrix: [[rat(p)?, Rational::zero()], [Rational::zero(), rat(q)?]] })
}

/// Eigenvalues of each block on a joint eigenbasis, in slot order.
pub fn joint_eigenvalues(blocks: &[Block]) -> Result<Vec<(QuadExt, QuadExt)>> {
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::NonCommuting(
                    "the eigenweight blocks on the repeated degree must pairwise commute".into(),
                ));
            }
        }
    }
    let is_scalar = |b: &Block| b.is_diagonal() && b.matrix[0][0] == b.matrix[1][1];
    let Some(b0) = blocks.iter().find(|b| !is_scalar(b)) else {
        return Ok(blocks.iter().map(|b| (QuadExt::rational(b.matrix[0][0].clone()), QuadExt::rational(b.matrix[0][0].clone()))).collect());
    };
    let (mu_p, mu_q) = b0.eigenvalues();
    let m0 = &b0.matrix;
    blocks
        .iter()
        .map(|b| {
            let m = &b.matrix;
            // commuting with a non-scalar 2×2 matrix means b = α + β·b0
            let beta = if !m0[0][1].is_zero() {
                &m[0][1] / &m0[0][1]
            } else if !m0[1][0].is_zero() {
                &m[1][0] / &m0[1][0]
            } else {
                (&m[0][0] - &m[1][1]) / (&m0[0][0] - &m0[1][1])
            };
            let alpha = &m[0][0] - &beta * &m0[0][0];
            let lift = |mu: &QuadExt| QuadExt::rational(alpha.clone()) + QuadExt::rational(beta.clone()) * mu.clone();
            Ok((lift(&mu_p), lift(&mu_q)))
        })
        .collect()
}

/// Operators of a family, with the D-even slots on a joint eigenbasis.
pub fn family_operators(curve: &ZetaCurve, datum: &RootDatum, reports: &[EigenweightReport]) -> Result<Vec<DiffOperator>> {
    let two_g_minus_2 = int(2 * curve.genus as i64 - 2);
    let mut ops: Vec<DiffOperator> = reports
        .iter()
        .map(|r| DiffOperator {
            constant: &two_g_minus_2 * r.b.clone().unwrap_or_default(),
            coefficients: r.epsilon.clone(),
        })
        .collect();
    if datum.cartan_type.is_d_even() && !reports.is_empty() {
        let blocks = reports.iter().map(|r| raw_block(datum, r)).collect::<Result<Vec<_>>>()?;
        let eig = joint_eigenvalues(&blocks)?;
        for ((op, blk), (x, y)) in ops.iter_mut().zip(&blocks).zip(eig) {
            op.coefficients[blk.slots.0] = x;
            op.coefficients[blk.slots.1] = y;
        }
    }
    Ok(ops)
}

fn into_rational(v: QuadExt) -> Result<Rational> {
    if !v.is_rational() {
        return Err(Error::Internal(format!("irrational part of {} did not cancel", v)));
    }
    Ok(v.a)
}

/// |π₁|·q^{(g−1)dim G}·(∏_i D_{λ_i}) ∏_j Z(q^{−d_j}e^{t_j}) at t = 0.
pub fn apply_operators(
    reports: &[EigenweightReport],
    curve: &ZetaCurve,
    datum: &RootDatum,
    opts: &VolumeOptions,
) -> Result<VolumeResult> {
    check_reports(datum, reports)?;
    let lambdas: Vec<Vec<i64>> = reports.iter().map(|r| r.lambda.clone()).collect();
    let r = reports.len();
    let mut result =
        VolumeResult { value: Rational::zero(), pi1_class_zero: false, r, group: datum.cartan_type.to_string(), lambdas };
    let ops = family_operators(curve, datum, reports)?;
    if !class_is_zero(datum, &result.lambdas) {
        return Ok(result);
    }
    result.pi1_class_zero = true;
    let mut jet = zeta_product_jet::<QuadExt>(curve, &datum.degrees, r + opts.extra_order)?;
    for op in &ops {
        jet = op.apply(&jet);
    }
    result.value = prefactor(curve, datum, opts) * into_rational(jet.constant_term())?;
    Ok(result)
}

/// |π₁|·q^{(g−1)dim G}·(d/dτ)^r [e^{(2g−2)bτ} ∏_j Z(q^{−d_j}e^{ε_j τ})] at τ = 0.
pub fn single_leg_form(
    report: &EigenweightReport,
    curve: &ZetaCurve,
    datum: &RootDatum,
    r: usize,
    opts: &VolumeOptions,
) -> Result<VolumeResult> {
    check_reports(datum, std::slice::from_ref(report))?;
    let lambdas = vec![report.lambda.clone(); r];
    let mut result =
        VolumeResult { value: Rational::zero(), pi1_class_zero: false, r, group: datum.cartan_type.to_string(), lambdas };
    if !class_is_zero(datum, &result.lambdas) {
        return Ok(result);
    }
    result.pi1_class_zero = true;
    let order = r + opts.extra_order;
    let b = report.b.clone().unwrap_or_default();
    let c = QuadExt::rational(int(2 * curve.genus as i64 - 2) * b);
    let mut acc = series::scaled_exp(&QuadExt::one(), &c, order);
    for (j, &d) in datum.degrees.iter().enumerate() {
        acc = series::mul(&acc, &zeta_series(curve, d, &report.epsilon[j], order)?, order);
    }
    let r_fact = (1..=r as i64).fold(Rational::one(), |f, k| f * int(k));
    let value = into_rational(acc[r].clone())? * r_fact;
    result.value = prefactor(curve, datum, opts) * value;
    Ok(result)
}

/// The r = 0 value |π₁|·q^{(g−1)dim G}·∏_j ζ_C(d_j), by direct evaluation.
pub fn empty_product_value(curve: &ZetaCurve, datum: &RootDatum, opts: &VolumeOptions) -> Result<Rational> {
    let mut acc = prefactor(curve, datum, opts);
    for &d in &datum.degrees {
        acc *= curve.zeta(d)?;
    }
    Ok(acc)
}

impl std::fmt::Display for VolumeResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format_rational(&self.value))?;
        if !self.pi1_class_zero {
            write!(f, " (nonzero class in π₁)")?;
        }
        Ok(())
    }
}
