//! Explicit standard representations of SL_{n+1}, Sp_{2n}, SO_{2n+1} and
//! SO_{2n} on ℤ^N with basis u_1, …, u_N, and their exterior powers.
//!
//! The principal nilpotent raises weights: e·u_{i+1} = c_i·u_i, so u_1 spans
//! the highest weight line. Simple root vectors are the weight-α_i parts of
//! e divided by the coefficient a_i of e = Σ a_i x_i.

use std::collections::HashMap;

use num::traits::{One, Zero};

use crate::chevalley::{ChevalleyAlgebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::rootdata::{CartanType, Series};
use crate::scalar::{frac, int, Rational};

#[derive(Clone, Debug)]
pub struct StdModel {
    pub cartan_type: CartanType,
    pub size: usize,
    /// ε-coordinates of the weight of each u_i.
    pub eps_weights: Vec<Vec<i64>>,
    /// Fundamental-weight coordinates of the weight of each u_i.
    pub weights: Vec<Vec<i64>>,
    pub e: Matrix<Rational>,
    pub raise: Vec<Matrix<Rational>>,
    pub lower: Vec<Matrix<Rational>>,
    /// Images of every Chevalley basis element.
    pub images: Vec<Matrix<Rational>>,
    /// κ_min = κ_Std / kappa_scale.
    pub kappa_scale: Rational,
}

fn eps(len: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(i, x) in entries {
        v[i] += x;
    }
    v
}

impl StdModel {
    pub fn new(alg: &ChevalleyAlgebra) -> Result<Self> {
        let t = alg.datum.cartan_type;
        let n = t.rank;
        let (size, elen) = match t.series {
            Series::A => (n + 1, n + 1),
            Series::B => (2 * n + 1, n),
            Series::C | Series::D => (2 * n, n),
            _ => return Err(Error::NotRealizable(format!("{} has no classical standard model", t))),
        };
        // weights of u_1..u_N and coroots, in ε-coordinates
        let eps_weights: Vec<Vec<i64>> = (0..size)
            .map(|i| match t.series {
                Series::A => eps(elen, &[(i, 1)]),
                Series::B => {
                    if i < n {
                        eps(elen, &[(i, 1)])
                    } else if i == n {
                        vec![0; elen]
                    } else {
                        eps(elen, &[(2 * n - i, -1)])
                    }
                }
                _ => {
                    if i < n {
                        eps(elen, &[(i, 1)])
                    } else {
                        eps(elen, &[(2 * n - 1 - i, -1)])
                    }
                }
            })
            .collect();
        let coroots: Vec<Vec<i64>> = (0..n)
            .map(|k| {
                if k + 1 < n || t.series == Series::A {
                    eps(elen, &[(k, 1), (k + 1, -1)])
                } else {
                    match t.series {
                        Series::B => eps(elen, &[(k, 2)]),
                        Series::C => eps(elen, &[(k, 1)]),
                        _ => eps(elen, &[(k - 1, 1), (k, 1)]),
                    }
                }
            })
            .collect();
        let simple_roots: Vec<Vec<i64>> = (0..n)
            .map(|k| {
                if k + 1 < n || t.series == Series::A {
                    eps(elen, &[(k, 1), (k + 1, -1)])
                } else {
                    match t.series {
                        Series::B => eps(elen, &[(k, 1)]),
                        Series::C => eps(elen, &[(k, 2)]),
                        _ => eps(elen, &[(k - 1, 1), (k, 1)]),
                    }
                }
            })
            .collect();
        let pair = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let weights: Vec<Vec<i64>> =
            eps_weights.iter().map(|w| coroots.iter().map(|c| pair(w, c)).collect()).collect();

        // e with e·u_{i+1} = c_i u_i (1-based), stored as e[i-1][i]
        let mut e = Matrix::zeros(size, size);
        let set = |e: &mut Matrix<Rational>, tgt: usize, src: usize, v: i64| {
            e.set(tgt - 1, src - 1, int(v));
        };
        match t.series {
            Series::A => {
                for i in 1..size {
                    set(&mut e, i, i + 1, 1);
                }
            }
            Series::C => {
                for i in 1..size {
                    let c = if i < n {
                        1
                    } else if i == n {
                        2
                    } else {
                        -1
                    };
                    set(&mut e, i, i + 1, c);
                }
            }
            Series::B => {
                for i in 1..size {
                    let c = if i < n {
                        2
                    } else if i == n {
                        1
                    } else {
                        -2
                    };
                    set(&mut e, i, i + 1, c);
                }
            }
            Series::D => {
                for i in 1..n - 1 {
                    set(&mut e, i, i + 1, 1);
                }
                set(&mut e, n - 1, n, 1);
                set(&mut e, n - 1, n + 1, 1);
                set(&mut e, n, n + 2, -1);
                set(&mut e, n + 1, n + 2, -1);
                for i in n + 2..size {
                    set(&mut e, i, i + 1, -1);
                }
            }
            _ => unreachable!(),
        }

        let diff = |r: usize, c: usize| -> Vec<i64> {
            eps_weights[r].iter().zip(&eps_weights[c]).map(|(a, b)| a - b).collect()
        };
        let mut raise = Vec::with_capacity(n);
        let mut lower = Vec::with_capacity(n);
        for k in 0..n {
            let a = &alg.simple_coeffs[k];
            let mut x = Matrix::zeros(size, size);
            for r in 0..size {
                for c in 0..size {
                    if !e.get(r, c).is_zero() && diff(r, c) == simple_roots[k] {
                        x.set(r, c, e.get(r, c) / a);
                    }
                }
            }
            let h: Vec<Rational> = eps_weights.iter().map(|w| int(pair(w, &coroots[k]))).collect();
            let neg: Vec<i64> = simple_roots[k].iter().map(|v| -v).collect();
            let slots: Vec<(usize, usize)> = (0..size)
                .flat_map(|r| (0..size).map(move |c| (r, c)))
                .filter(|&(r, c)| diff(r, c) == neg)
                .collect();
            // [x, Y] = h on the slots of weight −α_k
            let mut sys = Matrix::zeros(size * size, slots.len());
            for (u, &(r, c)) in slots.iter().enumerate() {
                let mut unit = Matrix::zeros(size, size);
                unit.set(r, c, Rational::one());
                let br = x.commutator(&unit);
                for (idx, v) in br.data.iter().enumerate() {
                    sys.set(idx, u, v.clone());
                }
            }
            let mut target = vec![Rational::zero(); size * size];
            for i in 0..size {
                target[i * size + i] = h[i].clone();
            }
            let sol = sys
                .solve(&target)
                .ok_or_else(|| Error::Internal(format!("no lowering partner for x_{} in {}", k + 1, t)))?;
            if !sys.kernel().is_empty() {
                return Err(Error::Internal(format!("lowering partner for x_{} is not unique", k + 1)));
            }
            let mut y = Matrix::zeros(size, size);
            for (u, &(r, c)) in slots.iter().enumerate() {
                y.set(r, c, sol[u].clone());
            }
            raise.push(x);
            lower.push(y);
        }
        let e_check = (0..n).fold(Matrix::zeros(size, size), |acc, k| acc.add(&raise[k].scaled(&alg.simple_coeffs[k])));
        if e_check != e {
            return Err(Error::Internal(format!("e of the {} model is not a sum of simple root vectors", t)));
        }

        // signs: the builder's unsigned x_i acts as s_i·X_i so that x'_i acts as X_i
        let sparse_raise: Vec<SparseMatrix<Rational>> =
            (0..n).map(|k| raise[k].to_sparse().scaled(&int(alg.signs[k]))).collect();
        let sparse_lower: Vec<SparseMatrix<Rational>> =
            (0..n).map(|k| lower[k].to_sparse().scaled(&int(alg.signs[k]))).collect();
        let images: Vec<Matrix<Rational>> = alg
            .extend_representation(&sparse_raise, &sparse_lower, &weights)
            .iter()
            .map(|m| m.to_dense())
            .collect();
        let kappa_scale = int(match t.series {
            Series::A => 1,
            Series::B => 4,
            _ => 2,
        });
        Ok(StdModel { cartan_type: t, size, eps_weights, weights, e, raise, lower, images, kappa_scale })
    }

    pub fn act(&self, z: &[Rational]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(self.size, self.size);
        for (k, c) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = m.add(&self.images[k].scaled(c));
        }
        m
    }

    /// The algebra element acting as the given matrix, if any.
    pub fn preimage(&self, m: &Matrix<Rational>) -> Option<Element> {
        let dim = self.images.len();
        let mut sys = Matrix::zeros(self.size * self.size, dim);
        for (k, img) in self.images.iter().enumerate() {
            for (idx, v) in img.data.iter().enumerate() {
                if !v.is_zero() {
                    sys.set(idx, k, v.clone());
                }
            }
        }
        let z = sys.solve(&m.data)?;
        (self.act(&z) == *m).then_some(z)
    }

    pub fn kappa_std(&self, x: &Matrix<Rational>, y: &Matrix<Rational>) -> Rational {
        x.mul(y).trace()
    }

    /// e_j and f_j in the matrix-power normalization, κ_min(f_j, e_j) = 1.
    pub fn centralizer_elements(&self, alg: &ChevalleyAlgebra) -> Result<(Vec<Element>, Vec<Element>)> {
        let t = self.cartan_type;
        let n = t.rank;
        let f = self.act(&alg.f);
        let e = self.act(&alg.e);
        let power = |m: &Matrix<Rational>, p: i64| -> Matrix<Rational> {
            (0..p).fold(Matrix::identity(self.size), |acc, _| acc.mul(m))
        };
        let mut e_side = Vec::with_capacity(n);
        let mut f_side = Vec::with_capacity(n);
        for j in 0..n {
            let (ej, fj) = if t.series == Series::D && j == n - 1 {
                let mut em = Matrix::zeros(self.size, self.size);
                let mut fm = Matrix::zeros(self.size, self.size);
                // 1-based: E u_n = u_1, E u_{n+1} = −u_1, E u_{2n} = u_n − u_{n+1}
                em.set(0, n - 1, int(1));
                em.set(0, n, int(-1));
                em.set(n - 1, 2 * n - 1, int(1));
                em.set(n, 2 * n - 1, int(-1));
                // F u_1 = (u_n − u_{n+1})/2, F u_n = u_{2n}/2, F u_{n+1} = −u_{2n}/2
                fm.set(n - 1, 0, frac(1, 2));
                fm.set(n, 0, frac(-1, 2));
                fm.set(2 * n - 1, n - 1, frac(1, 2));
                fm.set(2 * n - 1, n, frac(-1, 2));
                (em, fm)
            } else {
                let p = alg.datum.degrees[j] - 1;
                (power(&e, p), power(&f, p))
            };
            let pairing = self.kappa_std(&fj, &ej);
            if pairing.is_zero() {
                return Err(Error::Internal(format!("κ_Std(f_{}, e_{}) vanishes", j + 1, j + 1)));
            }
            let fj = fj.scaled(&(self.kappa_scale.clone() / pairing));
            let ez = self
                .preimage(&ej)
                .ok_or_else(|| Error::Internal(format!("e_{} is not in the image of ǧ", j + 1)))?;
            let fz = self
                .preimage(&fj)
                .ok_or_else(|| Error::Internal(format!("f_{} is not in the image of ǧ", j + 1)))?;
            if !crate::linalg::is_zero_vec(&alg.bracket(&alg.e, &ez))
                || !crate::linalg::is_zero_vec(&alg.bracket(&alg.f, &fz))
            {
                return Err(Error::Internal(format!("classical e_{}/f_{} not centralized", j + 1, j + 1)));
            }
            e_side.push(ez);
            f_side.push(fz);
        }
        Ok((e_side, f_side))
    }
}

/// The k-th exterior power of a matrix model, with basis the increasing
/// k-subsets of {0, …, N−1} in lexicographic order.
#[derive(Clone, Debug)]
pub struct Wedge {
    pub size: usize,
    pub k: usize,
    pub basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Wedge {
    pub fn new(size: usize, k: usize) -> Self {
        let mut basis = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        if k <= size {
            loop {
                basis.push(cur.clone());
                let Some(pos) = (0..k).rev().find(|&p| cur[p] < size - k + p) else { break };
                cur[pos] += 1;
                for q in pos + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Wedge { size, k, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        self.index.get(subset).copied()
    }

    /// Derivation action of a matrix on Λ^k.
    pub fn derivation(&self, m: &Matrix<Rational>) -> SparseMatrix<Rational> {
        let mut trip = Vec::new();
        for (col, set) in self.basis.iter().enumerate() {
            for p in 0..self.k {
                let src = set[p];
                for r in 0..self.size {
                    let v = m.get(r, src);
                    if v.is_zero() || (r != src && set.contains(&r)) {
                        continue;
                    }
                    let mut word = set.clone();
                    word[p] = r;
                    let (sorted, sign) = sort_with_sign(word);
                    let row = self.index[&sorted];
                    trip.push((row, col, v * int(sign)));
                }
            }
        }
        SparseMatrix::from_triplets(self.dim(), self.dim(), trip)
    }
}

fn sort_with_sign(mut w: Vec<usize>) -> (Vec<usize>, i64) {
    let mut sign = 1;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (w, sign)
}
