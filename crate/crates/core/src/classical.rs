//! Closed-form invariants of fundamental weights for the classical types,
//! as signed multinomial sums over symmetric groups.
//!
//! Types are those of Ǧ. All values are in the matrix-power normalization
//! of the standard representations (κ_min(f_j, e_j) = 1), so the diagonal
//! κ-values are the eigenweights outside the D-even block.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants::{Block, EigenweightReport, Provenance};
use crate::rootdata::{CartanType, Series};
use crate::scalar::{big, binomial, factorial, int, rational_sqrt, QuadExt, Rational};

/// Calls `visit(σ, sgn σ)` for every permutation of {1, …, k} (Heap's algorithm).
pub fn for_each_permutation(k: usize, mut visit: impl FnMut(&[i64], i64)) {
    let mut perm: Vec<i64> = (1..=k as i64).collect();
    let mut c = vec![0usize; k];
    let mut sign = 1;
    visit(&perm, sign);
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// N!/∏ m_i!, zero when some m_i is negative.
pub fn multinomial(total: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&m| m < 0) {
        return BigInt::zero();
    }
    debug_assert_eq!(parts.iter().sum::<i64>(), total);
    let den = parts.iter().fold(BigInt::one(), |acc, &m| acc * factorial(m as u64));
    factorial(total as u64) / den
}

fn pow2(e: i64) -> Rational {
    if e >= 0 {
        big(&(BigInt::one() << e as usize))
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn bin(n: i64, k: i64) -> Rational {
    big(&binomial(n, k))
}

/// Σ_σ sgn σ · multinomial(total; base_i + σ(i) − i + shift_i).
fn signed_sum(k: usize, total: i64, entry: impl Fn(usize, i64) -> i64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut parts = vec![0i64; k];
    for_each_permutation(k, |sigma, sign| {
        for i in 0..k {
            parts[i] = entry(i, sigma[i]);
        }
        let m = multinomial(total, &parts);
        if sign > 0 {
            acc += m;
        } else {
            acc -= m;
        }
    });
    acc
}

/// Invariants of ϖ_k for SL_{n+1}, with k′ = n + 1 − k.
pub mod type_a {
    use super::*;

    pub fn d(n: i64, k: i64) -> i64 {
        k * (n + 1 - k)
    }

    pub fn deg(n: i64, k: i64) -> BigInt {
        let kp = n + 1 - k;
        let mut den = BigInt::one();
        for i in 1..=k {
            for j in 1..=kp {
                den *= BigInt::from(i + j - 1);
            }
        }
        factorial((k * kp) as u64) / den
    }

    fn base(kp: i64, i: usize, s: i64) -> i64 {
        kp + (s - (i as i64 + 1))
    }

    pub fn s(n: i64, k: i64, j: i64) -> BigInt {
        let kp = n + 1 - k;
        (0..k as usize)
            .map(|a| {
                signed_sum(k as usize, k * kp - j, |i, s| base(kp, i, s) - if i == a { j } else { 0 })
            })
            .sum()
    }

    pub fn t(n: i64, k: i64, j: i64) -> BigInt {
        let kp = n + 1 - k;
        (0..k as usize)
            .map(|b| {
                signed_sum(k as usize, k * kp + j + 1, |i, s| base(kp, i, s) + if i == b { j + 1 } else { 0 })
            })
            .sum()
    }

    pub fn epsilon(n: i64, k: i64, j: i64) -> BigInt {
        let kp = n + 1 - k;
        let mut acc = BigInt::zero();
        for a in 0..k as usize {
            for b in 0..k as usize {
                acc += signed_sum(k as usize, k * kp + 1, |i, s| {
                    let mut m = base(kp, i, s);
                    if a == b {
                        if i == a {
                            m += 1;
                        }
                    } else if i == a {
                        m -= j;
                    } else if i == b {
                        m += j + 1;
                    }
                    m
                });
            }
        }
        acc
    }
}

/// Closed-form data for one fundamental weight of a classical Ǧ.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalInvariantSet {
    pub cartan_type: CartanType,
    /// One-based index of the fundamental weight.
    pub k: usize,
    pub d: i64,
    pub deg: Rational,
    pub s: Vec<Rational>,
    pub t: Vec<Rational>,
    /// κ_λ(f_j, e_j).
    pub kappa: Vec<Rational>,
    /// (κ_λ(f_n, e_{n/2}), κ_λ(f_{n/2}, e_n)) in type D_n, n even.
    pub block_offdiag: Option<(Rational, Rational)>,
}

impl ClassicalInvariantSet {
    pub fn lambda(&self) -> Vec<i64> {
        let mut l = vec![0; self.cartan_type.rank];
        l[self.k - 1] = 1;
        l
    }

    pub fn block(&self) -> Option<Block> {
        let n = self.cartan_type.rank;
        self.block_offdiag.as_ref().map(|(fq_ep, fp_eq)| {
            let (p, q) = (n / 2 - 1, n - 1);
            Block {
                slots: (p, q),
                matrix: [[self.kappa[p].clone(), fq_ep.clone()], [fp_eq.clone(), self.kappa[q].clone()]],
            }
        })
    }

    pub fn epsilon(&self) -> Vec<QuadExt> {
        let mut eps: Vec<QuadExt> = self.kappa.iter().cloned().map(QuadExt::rational).collect();
        if let Some(b) = self.block() {
            let (x, y) = b.eigenvalues();
            eps[b.slots.0] = x;
            eps[b.slots.1] = y;
        }
        eps
    }

    pub fn to_report(&self) -> EigenweightReport {
        EigenweightReport {
            cartan_type: self.cartan_type,
            lambda: self.lambda(),
            d: self.d,
            deg: self.deg.to_integer(),
            epsilon: self.epsilon(),
            block: self.block(),
            b: None,
            s: Some(self.s.clone()),
            t: Some(self.t.clone()),
            provenance: Provenance::ClosedForm,
        }
    }
}

fn check_deg(deg: Rational) -> Result<Rational> {
    if !deg.is_integer() || !deg.is_positive() {
        return Err(Error::Internal(format!("closed-form deg {} is not a positive integer", deg)));
    }
    Ok(deg)
}

fn spin_deg(radicand: Rational) -> Result<Rational> {
    let deg = rational_sqrt(&radicand)
        .ok_or_else(|| Error::Internal(format!("spin degree radicand {} is not a square", radicand)))?;
    check_deg(deg)
}

/// Ǧ = SL_{n+1}.
pub fn type_a_set(n: usize, k: usize) -> Result<ClassicalInvariantSet> {
    let t = CartanType::new(Series::A, n)?;
    check_index(k, n)?;
    let (ni, ki) = (n as i64, k as i64);
    let js = 1..=ni;
    Ok(ClassicalInvariantSet {
        cartan_type: t,
        k,
        d: type_a::d(ni, ki),
        deg: check_deg(big(&type_a::deg(ni, ki)))?,
        s: js.clone().map(|j| big(&type_a::s(ni, ki, j))).collect(),
        t: js.clone().map(|j| big(&type_a::t(ni, ki, j))).collect(),
        kappa: js.map(|j| big(&type_a::epsilon(ni, ki, j))).collect(),
        block_offdiag: None,
    })
}

/// Ǧ = Sp_{2n}: scaled invariants of A_{2n−1} at odd indices.
pub fn type_c_set(n: usize, k: usize) -> Result<ClassicalInvariantSet> {
    let t = CartanType::new(Series::C, n)?;
    check_index(k, n)?;
    let (ni, ki) = (n as i64, k as i64);
    let m = 2 * ni - 1;
    Ok(ClassicalInvariantSet {
        cartan_type: t,
        k,
        d: ki * (2 * ni - ki),
        deg: check_deg(pow2(ki) * big(&type_a::deg(m, ki)))?,
        s: (1..=ni).map(|j| pow2(ki) * big(&type_a::s(m, ki, 2 * j - 1))).collect(),
        t: (1..=ni).map(|j| pow2(ki + 1) * big(&type_a::t(m, ki, 2 * j - 1))).collect(),
        kappa: (1..=ni).map(|j| pow2(ki + 1) * big(&type_a::epsilon(m, ki, 2 * j - 1))).collect(),
        block_offdiag: None,
    })
}

/// Ǧ = Spin_{2n+1}: scaled invariants of A_{2n}, the spin weight through
/// the tensor square.
pub fn type_b_set(n: usize, k: usize) -> Result<ClassicalInvariantSet> {
    let t = CartanType::new(Series::B, n)?;
    check_index(k, n)?;
    let (ni, ki) = (n as i64, k as i64);
    let m = 2 * ni;
    if k < n {
        let e = ki * (2 * ni - ki);
        return Ok(ClassicalInvariantSet {
            cartan_type: t,
            k,
            d: ki * (2 * ni + 1 - ki),
            deg: check_deg(pow2(e) * big(&type_a::deg(m, ki)))?,
            s: (1..=ni).map(|j| pow2(e) * big(&type_a::s(m, ki, 2 * j - 1))).collect(),
            t: (1..=ni).map(|j| pow2(e + 2) * big(&type_a::t(m, ki, 2 * j - 1))).collect(),
            kappa: (1..=ni).map(|j| pow2(e + 2) * big(&type_a::epsilon(m, ki, 2 * j - 1))).collect(),
            block_offdiag: None,
        });
    }
    let d = ni * (ni + 1) / 2;
    let nn = ni * ni;
    let deg = spin_deg(pow2(nn) * big(&type_a::deg(m, ni)) / bin(2 * d, d))?;
    let mut s = Vec::new();
    let mut tt = Vec::new();
    let mut kappa = Vec::new();
    for j in 1..=ni {
        let sj = pow2(nn - 1) * big(&type_a::s(m, ni, 2 * j - 1)) / (bin(2 * d - 2 * j + 1, d) * &deg);
        let tj = pow2(nn + 1) * big(&type_a::t(m, ni, 2 * j - 1)) / (bin(2 * d + 2 * j, d) * &deg);
        let kj = (pow2(nn + 1) * big(&type_a::epsilon(m, ni, 2 * j - 1)) - bin(2 * d + 1, d - 2 * j + 1) * &sj * &tj)
            / (bin(2 * d + 1, d) * &deg);
        s.push(sj);
        tt.push(tj);
        kappa.push(kj);
    }
    Ok(ClassicalInvariantSet { cartan_type: t, k, d, deg, s, t: tt, kappa, block_offdiag: None })
}

/// Ǧ = Spin_{2n}, degrees ordered with d_n = n last.
pub fn type_d_set(n: usize, k: usize) -> Result<ClassicalInvariantSet> {
    let t = CartanType::new(Series::D, n)?;
    check_index(k, n)?;
    let (ni, ki) = (n as i64, k as i64);
    let m = 2 * ni - 2;
    if k + 2 <= n {
        let mut s: Vec<Rational> = (1..ni).map(|j| pow2(ki) * big(&type_a::s(m, ki, 2 * j - 1))).collect();
        let mut tt: Vec<Rational> = (1..ni).map(|j| pow2(ki + 1) * big(&type_a::t(m, ki, 2 * j - 1))).collect();
        let mut kappa: Vec<Rational> =
            (1..ni).map(|j| pow2(ki + 1) * big(&type_a::epsilon(m, ki, 2 * j - 1))).collect();
        s.push(Rational::zero());
        tt.push(Rational::zero());
        let total = ki * (2 * ni - 1 - ki) + 1;
        let last = signed_sum(k, total, |i, sg| {
            let shift = sg - (i as i64 + 1);
            if i == 0 {
                2 * ni - ki + shift
            } else {
                2 * ni - ki - 1 + shift
            }
        });
        kappa.push(pow2(ki) * big(&last));
        let block_offdiag = (n % 2 == 0).then(|| (Rational::zero(), Rational::zero()));
        return Ok(ClassicalInvariantSet {
            cartan_type: t,
            k,
            d: ki * (2 * ni - 1 - ki),
            deg: check_deg(pow2(ki) * big(&type_a::deg(m, ki)))?,
            s,
            t: tt,
            kappa,
            block_offdiag,
        });
    }

    // half-spin weights, Bourbaki labels; the ϖ_{n−1} values are the ϖ_n
    // values with the j = n invariants negated
    let sign_n = if k + 1 == n { -1 } else { 1 };
    let d = ni * (ni - 1) / 2;
    let deg = spin_deg(pow2(ni - 1) * big(&type_a::deg(m, ni - 1)) / bin(2 * d, d))?;
    let mut s = Vec::new();
    let mut tt = Vec::new();
    let mut kappa = Vec::new();
    for j in 1..ni {
        let sj = pow2(ni - 2) * big(&type_a::s(m, ni - 1, 2 * j - 1)) / (bin(2 * d - 2 * j + 1, d) * &deg);
        let tj = pow2(ni - 1) * big(&type_a::t(m, ni - 1, 2 * j - 1)) / (bin(2 * d + 2 * j, d) * &deg);
        let kj = (pow2(ni - 1) * big(&type_a::epsilon(m, ni - 1, 2 * j - 1))
            - bin(2 * d + 1, d - 2 * j + 1) * &sj * &tj)
            / (bin(2 * d + 1, d) * &deg);
        s.push(sj);
        tt.push(tj);
        kappa.push(kj);
    }
    let parity = if (ni - 1) % 2 == 0 { int(1) } else { int(-1) };
    let s_n = parity * pow2(ni - 2) * big(&type_a::deg(2 * ni - 3, ni - 1)) / (bin(2 * d - ni + 1, d) * &deg);
    let t_sum = signed_sum(n, ni * ni, |i, sg| {
        if i + 1 < n {
            ni - 1 + (sg - (i as i64 + 1))
        } else {
            ni - 1 + sg
        }
    });
    let t_n = pow2(ni - 2) * big(&t_sum) / (bin(2 * d + ni, d) * &deg);
    let eps_sum = signed_sum(n - 1, ni * (ni - 1) + 1, |i, sg| {
        let shift = sg - (i as i64 + 1);
        if i == 0 {
            ni + 1 + shift
        } else {
            ni + shift
        }
    });
    let eps_mixed = pow2(ni - 1) * big(&eps_sum);
    let k_n = (eps_mixed / int(2) + bin(2 * d + 1, d - ni + 1) * &s_n * &t_n) / (bin(2 * d + 1, d) * &deg);
    s.push(int(sign_n) * &s_n);
    tt.push(int(sign_n) * &t_n);
    kappa.push(k_n);

    let block_offdiag = if n % 2 == 0 {
        let half = n / 2 - 1;
        let mut acc = BigInt::zero();
        for a in 0..n - 1 {
            acc += signed_sum(n, ni * (ni - 1) + 1, |i, sg| {
                let shift = sg - (i as i64 + 1);
                if i == a {
                    shift
                } else if i + 1 < n {
                    ni - 1 + shift
                } else {
                    ni - 1 + sg
                }
            });
        }
        let sq_fn_ep = pow2(ni - 1) * big(&acc);
        let sq_fp_en = -pow2(ni) * big(&type_a::t(2 * ni - 3, ni - 1, ni - 1));
        let c = bin(2 * d + 1, d + 1 - ni);
        let den = bin(2 * d + 1, d) * &deg;
        let fn_ep = (sq_fn_ep / int(2) - &c * &t_n * &s[half]) / &den;
        let fp_en = (sq_fp_en / int(2) - &c * &tt[half] * &s_n) / &den;
        Some((int(sign_n) * fn_ep, int(sign_n) * fp_en))
    } else {
        None
    };
    Ok(ClassicalInvariantSet { cartan_type: t, k, d, deg, s, t: tt, kappa, block_offdiag })
}

fn check_index(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidWeight(format!("fundamental index {} out of range 1..={}", k, n)));
    }
    Ok(())
}

/// Closed-form data for the k-th fundamental weight (one-based) of Ǧ.
pub fn closed_form(t: CartanType, k: usize) -> Result<ClassicalInvariantSet> {
    match t.series {
        Series::A => type_a_set(t.rank, k),
        Series::B => type_b_set(t.rank, k),
        Series::C => type_c_set(t.rank, k),
        Series::D => type_d_set(t.rank, k),
        _ => Err(Error::InvalidType(format!("{} has no closed forms", t))),
    }
}

/// The k with λ = ϖ_k, if λ is fundamental.
pub fn fundamental_index(lambda: &[i64]) -> Option<usize> {
    let nz: Vec<usize> = (0..lambda.len()).filter(|&i| lambda[i] != 0).collect();
    (nz.len() == 1 && lambda[nz[0]] == 1).then(|| nz[0] + 1)
}
