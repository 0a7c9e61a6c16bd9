//! Root data of the simply connected dual group.
//!
//! Weights live in fundamental-weight coordinates, roots in simple-root
//! coordinates, coroots in simple-coroot coordinates. The Cartan matrix
//! convention is `cartan[i][j] = ⟨α_j, α_i∨⟩`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{format_rational, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    /// Series of the Langlands dual: B and C swap.
    pub fn dual(self) -> Series {
        match self {
            Series::B => Series::C,
            Series::C => Series::B,
            s => s,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Series::A | Series::B | Series::C | Series::D)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// A Dynkin type such as `B4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{}{} is not an almost-simple type", series, rank)))
        }
    }

    pub fn dual(self) -> CartanType {
        CartanType { series: self.series.dual(), rank: self.rank }
    }

    /// True for D_n with n even, where two degrees coincide.
    pub fn is_d_even(self) -> bool {
        self.series == Series::D && self.rank % 2 == 0
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::InvalidType(format!("cannot parse type {:?}", s))),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::InvalidType(format!("cannot parse rank in {:?}", s)))?;
        CartanType::new(series, rank)
    }
}

pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.series {
        Series::A | Series::B | Series::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 3..n - 1 {
                link(i, i + 1);
            }
        }
        Series::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Series::G => link(0, 1),
    }
    match t.series {
        // α_n short
        Series::B => a[n - 1][n - 2] = -2,
        // α_n long
        Series::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Series::F => a[2][1] = -2,
        // α_1 long, α_2 short
        Series::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Degrees of the fundamental invariants, D_n carrying d_n = n last.
pub fn degrees(t: CartanType) -> Vec<i64> {
    let n = t.rank as i64;
    match t.series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
        Series::D => (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect(),
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    }
}

pub fn dual_coxeter(t: CartanType) -> i64 {
    let n = t.rank as i64;
    match t.series {
        Series::A => n + 1,
        Series::B => 2 * n - 1,
        Series::C => n + 1,
        Series::D => 2 * n - 2,
        Series::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Series::F => 9,
        Series::G => 4,
    }
}

pub fn lacing(t: CartanType) -> i64 {
    match t.series {
        Series::B | Series::C | Series::F => 2,
        Series::G => 3,
        _ => 1,
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically; the first `rank` are the simple roots.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates, aligned with
    /// `positive_roots`.
    pub positive_coroots: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots, short roots having length 2.
    pub simple_root_lengths: Vec<i64>,
    /// 2ρ∨ in simple-coroot coordinates.
    pub two_rho_coroot: Vec<i64>,
    /// 2ρ (sum of positive roots) in simple-root coordinates.
    pub two_rho_root: Vec<i64>,
    pub degrees: Vec<i64>,
    pub dual_coxeter: i64,
    /// Dual Coxeter number of the dual type.
    pub dual_coxeter_of_dual: i64,
    pub lacing: i64,
    /// Gram matrix of κ_min on weights, fundamental-weight coordinates.
    pub basic_form: Matrix<Rational>,
    /// Gram matrix of κ_min on the simple coroots.
    pub coroot_form: Matrix<Rational>,
    pub center_order: i64,
    pub dim_g: usize,
    cartan_inverse: Matrix<Rational>,
    root_index: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    pub fn new(t: CartanType) -> Self {
        build_root_datum(t)
    }

    pub fn series(&self) -> Series {
        self.cartan_type.series
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// Index of a root in simple-root coordinates: positive roots map to
    /// `0..N`, negative roots to `N..2N`.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        if let Some(&i) = self.root_index.get(root) {
            return Some(i);
        }
        let neg: Vec<i64> = root.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&i| i + self.positive_roots.len())
    }

    /// Root with the given index in the ±-range of [`root_index`].
    pub fn root(&self, idx: usize) -> Vec<i64> {
        let n = self.positive_roots.len();
        if idx < n {
            self.positive_roots[idx].clone()
        } else {
            self.positive_roots[idx - n].iter().map(|x| -x).collect()
        }
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_index(v).is_some()
    }

    /// ⟨β, α_i∨⟩ for β in simple-root coordinates.
    pub fn pair_root_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(b, a)| b * a).sum()
    }

    /// Simple root α_j in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    /// Root (simple-root coordinates) to fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank).map(|i| self.pair_root_coroot(beta, i)).collect()
    }

    /// Simple-root coordinates of a weight, which may be fractional.
    pub fn weight_to_root_coords(&self, mu: &[i64]) -> Vec<Rational> {
        let v: Vec<Rational> = mu.iter().map(|&x| int(x)).collect();
        self.cartan_inverse.mul_vec(&v)
    }

    pub fn in_root_lattice(&self, mu: &[i64]) -> bool {
        self.weight_to_root_coords(mu).iter().all(|x| x.is_integer())
    }

    /// d_λ = ⟨2ρ∨, λ⟩.
    pub fn pairing_2rho(&self, lambda: &[i64]) -> Result<i64> {
        self.check_weight(lambda)?;
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("{:?} is not dominant", lambda)));
        }
        Ok(self.two_rho_coroot.iter().zip(lambda).map(|(m, l)| m * l).sum())
    }

    /// ⟨μ, 2ρ∨⟩ for arbitrary μ.
    pub fn height_of_weight(&self, mu: &[i64]) -> i64 {
        self.two_rho_coroot.iter().zip(mu).map(|(m, l)| m * l).sum()
    }

    pub fn check_weight(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "weight {:?} has {} coordinates, {} expects {}",
                lambda,
                lambda.len(),
                self.cartan_type,
                self.rank
            )));
        }
        Ok(())
    }

    pub fn basic_form_value(&self, mu: &[Rational], nu: &[Rational]) -> Rational {
        let g = self.basic_form.mul_vec(nu);
        mu.iter().zip(&g).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn basic_form_int(&self, mu: &[i64], nu: &[i64]) -> Rational {
        let a: Vec<Rational> = mu.iter().map(|&x| int(x)).collect();
        let b: Vec<Rational> = nu.iter().map(|&x| int(x)).collect();
        self.basic_form_value(&a, &b)
    }

    /// κ_min(α, α) on roots (simple-root coordinates).
    pub fn root_length(&self, beta: &[i64]) -> Rational {
        let w = self.root_to_weight(beta);
        self.basic_form_int(&w, &w)
    }

    /// Simple reflection s_i on a weight.
    pub fn reflect_weight(&self, mu: &[i64], i: usize) -> Vec<i64> {
        let a = self.simple_root_weight(i);
        mu.iter().zip(&a).map(|(m, x)| m - mu[i] * x).collect()
    }

    pub fn dominant_conjugate(&self, mu: &[i64]) -> Vec<i64> {
        let mut v = mu.to_vec();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = self.reflect_weight(&v, i);
        }
        v
    }

    /// Lowest weight w₀λ of V_λ.
    pub fn lowest_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        while let Some(i) = v.iter().position(|&x| x > 0) {
            v = self.reflect_weight(&v, i);
        }
        v
    }

    pub fn weyl_dimension(&self, lambda: &[i64]) -> num::BigInt {
        let mut num = Rational::one();
        for c in &self.positive_coroots {
            let top: i64 = c.iter().zip(lambda).map(|(ci, l)| ci * (l + 1)).sum();
            let bot: i64 = c.iter().sum();
            num = num * Rational::new(top.into(), bot.into());
        }
        num.to_integer()
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots.last().unwrap().clone()
    }

    /// Highest root as a weight (the adjoint highest weight).
    pub fn adjoint_weight(&self) -> Vec<i64> {
        self.root_to_weight(&self.highest_root())
    }

    /// Highest short root as a weight.
    pub fn quasi_minuscule_weight(&self) -> Vec<i64> {
        let short = self
            .positive_roots
            .iter()
            .filter(|r| self.root_length(r) == int(2))
            .max_by_key(|r| Self::height(r))
            .unwrap();
        self.root_to_weight(short)
    }

    pub fn is_minuscule(&self, lambda: &[i64]) -> bool {
        self.positive_coroots
            .iter()
            .all(|c| c.iter().zip(lambda).map(|(a, b)| a * b).sum::<i64>() <= 1)
    }

    /// Fundamental weights that are minuscule.
    pub fn minuscule_weights(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|k| {
                let mut w = vec![0; self.rank];
                w[k] = 1;
                w
            })
            .filter(|w| self.is_minuscule(w))
            .collect()
    }

    pub fn fundamental_weight(&self, k: usize) -> Vec<i64> {
        let mut w = vec![0; self.rank];
        w[k] = 1;
        w
    }

    /// Σ over all coroots of Ǧ of ⟨μ, α∨⟩², divided by 4h∨ of the dual
    /// type; equals κ_min(μ, μ)/2.
    pub fn casimir_coroot_sum(&self, mu: &[i64]) -> Rational {
        let s: i64 = self
            .positive_coroots
            .iter()
            .map(|c| {
                let p: i64 = c.iter().zip(mu).map(|(a, b)| a * b).sum();
                2 * p * p
            })
            .sum();
        Rational::new(s.into(), (4 * self.dual_coxeter_of_dual).into())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &Matrix<Rational>| -> Vec<Vec<String>> {
            (0..m.rows).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
        };
        serde_json::json!({
            "series": self.cartan_type.series.to_string(),
            "rank": self.rank,
            "cartan": self.cartan,
            "positive_roots": self.positive_roots,
            "positive_coroots": self.positive_coroots,
            "simple_coroots": self.cartan,
            "two_rho_coroot": self.two_rho_coroot,
            "two_rho_root": self.two_rho_root,
            "degrees": self.degrees,
            "dual_coxeter": self.dual_coxeter,
            "lacing": self.lacing,
            "basic_form": mat(&self.basic_form),
            "center_order": self.center_order,
            "dim_g": self.dim_g,
        })
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut s: Vec<Option<Rational>> = vec![None; n];
    s[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && s[j].is_none() {
                // (α_i,α_j) = A_ij s_i/2 = A_ji s_j/2
                let sj = s[i].clone().unwrap() * int(cartan[i][j]) / int(cartan[j][i]);
                s[j] = Some(sj);
                queue.push_back(j);
            }
        }
    }
    let s: Vec<Rational> = s.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = s.iter().min().unwrap().clone();
    s.iter().map(|x| (x * int(2) / &min).to_integer().try_into().unwrap()).collect()
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all: Vec<Vec<i64>> = simple.clone();
    let mut seen: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let pairing: i64 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| {
        RootDatum::height(a).cmp(&RootDatum::height(b)).then_with(|| b.cmp(a))
    });
    all
}

pub fn build_root_datum(t: CartanType) -> RootDatum {
    let n = t.rank;
    let cartan = cartan_matrix(t);
    let lengths = symmetrizer(&cartan);
    let roots = positive_roots(&cartan);

    let root_len = |r: &[i64]| -> i64 {
        // (α,α) = Σ r_i r_j (α_i,α_j), (α_i,α_j) = A_ij s_i/2
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += r[i] * r[j] * cartan[i][j] * lengths[i];
            }
        }
        s / 2
    };
    let coroots: Vec<Vec<i64>> = roots
        .iter()
        .map(|r| {
            let l = root_len(r);
            (0..n)
                .map(|k| {
                    let v = r[k] * lengths[k];
                    assert_eq!(v % l, 0, "coroot coordinates are integral");
                    v / l
                })
                .collect()
        })
        .collect();
    let mut two_rho_coroot = vec![0; n];
    let mut two_rho_root = vec![0; n];
    for (r, c) in roots.iter().zip(&coroots) {
        for k in 0..n {
            two_rho_coroot[k] += c[k];
            two_rho_root[k] += r[k];
        }
    }

    let a = Matrix::from_rows(
        &cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>(),
    );
    let a_inv = a.inverse().expect("Cartan matrix is invertible");
    let mut basic = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            basic.set(i, j, a_inv.get(i, j) * int(lengths[i]) / int(2));
        }
    }
    let mut coroot_form = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            coroot_form.set(i, j, Rational::new((2 * cartan[i][j]).into(), lengths[j].into()));
        }
    }
    let det = {
        let mut m = a.clone();
        let mut d = Rational::one();
        // Gaussian elimination determinant
        for c in 0..n {
            let p = (c..n).find(|&i| !m.get(i, c).is_zero()).unwrap();
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                d = -d;
            }
            let pv = m.get(c, c).clone();
            d *= pv.clone();
            for i in c + 1..n {
                let f = m.get(i, c) / &pv;
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        d.to_integer()
    };
    let root_index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let dim_g = 2 * roots.len() + n;
    RootDatum {
        cartan_type: t,
        rank: n,
        cartan,
        positive_coroots: coroots,
        simple_root_lengths: lengths,
        two_rho_coroot,
        two_rho_root,
        degrees: degrees(t),
        dual_coxeter: dual_coxeter(t),
        dual_coxeter_of_dual: dual_coxeter(t.dual()),
        lacing: lacing(t),
        basic_form: basic,
        coroot_form,
        center_order: det.try_into().unwrap(),
        dim_g,
        cartan_inverse: a_inv,
        root_index,
        positive_roots: roots,
    }
}
