//! Highest-weight modules of ǧ with an integral lattice and normalized
//! extremal vectors u_{λ,−}, u*_{λ,+}.
//!
//! Three routes: wedge powers of the explicit classical standard
//! representations, the adjoint representation on ǧ_ℤ, and the general
//! highest-weight builder with the minimal admissible lattice.

pub mod highest_weight;
pub mod matrix_model;

use num::traits::{One, Signed, Zero};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, unit, zeros, SparseMatrix, Subspace};
use crate::rootdata::Series;
use crate::scalar::{int, Rational};
use highest_weight::build_highest_weight;
use matrix_model::{StdModel, Wedge};

pub const DEFAULT_DIM_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Exterior power of an explicit standard representation, or the
    /// submodule of it generated by the signed lowest vector.
    ExplicitClassical,
    /// ǧ itself with the Chevalley lattice ǧ_ℤ.
    ChevalleyAdjoint,
    /// General highest-weight builder, minimal admissible lattice.
    MinimalAdmissible,
}

#[derive(Clone, Debug)]
pub struct WeightModule {
    pub lambda: Vec<i64>,
    pub route: Route,
    pub weights: Vec<Vec<i64>>,
    /// Action of every Chevalley basis element of the algebra.
    pub images: Vec<SparseMatrix<Rational>>,
    pub e: SparseMatrix<Rational>,
    pub f: SparseMatrix<Rational>,
    pub u_minus: Vec<Rational>,
    pub u_plus_dual: Vec<Rational>,
    pub d_lambda: i64,
    /// Whether the basis is a ℤ-basis of the lattice.
    pub lattice_basis: bool,
    /// Set when u_minus had to be negated to make deg_λ positive.
    pub sign_flipped: bool,
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn act(&self, z: &[Rational]) -> SparseMatrix<Rational> {
        let mut m = SparseMatrix::zeros(self.dim(), self.dim());
        for (k, c) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = m.lin_comb(&Rational::one(), &self.images[k], c);
        }
        m
    }

    pub fn apply(&self, z: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = zeros(self.dim());
        for (k, c) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let w = self.images[k].mul_vec(v);
            crate::linalg::axpy(&mut out, c, &w);
        }
        out
    }

    /// ⟨e^{d_λ} u_−, u*_+⟩.
    pub fn extremal_pairing(&self) -> Rational {
        let mut v = self.u_minus.clone();
        for _ in 0..self.d_lambda {
            v = self.e.mul_vec(&v);
        }
        dot(&v, &self.u_plus_dual)
    }

    fn normalize(mut self) -> Result<Self> {
        let mut top = self.u_minus.clone();
        for _ in 0..=self.d_lambda {
            top = self.e.mul_vec(&top);
        }
        if !is_zero_vec(&top) {
            return Err(Error::Internal("e^{d_λ+1} u_− ≠ 0".into()));
        }
        let p = self.extremal_pairing();
        if p.is_zero() {
            return Err(Error::Internal(format!("deg vanishes for λ = {:?}", self.lambda)));
        }
        if p.is_negative() {
            self.u_minus = self.u_minus.iter().map(|x| -x).collect();
            self.sign_flipped = true;
        }
        Ok(self)
    }

    /// ρ([a, b]) = [ρ(a), ρ(b)] for all pairs of simple generators x_i, y_i, h_i.
    pub fn check_generator_brackets(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        let n = alg.rank();
        let gens: Vec<usize> = (0..n).flat_map(|i| [alg.pos(i), alg.neg(i), alg.cartan(i)]).collect();
        self.check_brackets_on(alg, &gens)
    }

    /// Bracket compatibility on every pair of basis elements.
    pub fn check_all_brackets(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        let all: Vec<usize> = (0..alg.dim).collect();
        self.check_brackets_on(alg, &all)
    }

    fn check_brackets_on(&self, alg: &ChevalleyAlgebra, idx: &[usize]) -> Result<()> {
        for (p, &a) in idx.iter().enumerate() {
            for &b in &idx[p + 1..] {
                let br = alg.bracket(&alg.basis_vector(a), &alg.basis_vector(b));
                if self.act(&br) != self.images[a].commutator(&self.images[b]) {
                    return Err(Error::Internal(format!("module action fails bracket ({}, {})", a, b)));
                }
            }
        }
        Ok(())
    }

    pub fn check_weyl_dimension(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        let w = alg.datum.weyl_dimension(&self.lambda);
        if w != num::BigInt::from(self.dim()) {
            return Err(Error::Internal(format!("dimension {} but Weyl dimension {}", self.dim(), w)));
        }
        Ok(())
    }

    /// Every basis action and every divided power x_α^s/s! of a root vector
    /// is integral; s runs until x_α^s vanishes.
    pub fn check_admissibility(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        if !self.lattice_basis {
            return Err(Error::NotRealizable("module basis is not a lattice basis".into()));
        }
        if let Some(k) = self.images.iter().position(|m| !m.is_integral()) {
            return Err(Error::Internal(format!("basis element {} acts non-integrally", k)));
        }
        for k in 0..2 * alg.num_pos {
            let x = &self.images[k];
            let mut p = x.clone();
            let mut s = 1i64;
            while !p.is_zero() {
                if !p.is_integral() {
                    return Err(Error::Internal(format!("divided power {} of root vector {} is not integral", s, k)));
                }
                s += 1;
                p = p.mul(x).scaled(&Rational::new(1.into(), s.into()));
            }
        }
        Ok(())
    }
}

fn module_from_images(
    alg: &ChevalleyAlgebra,
    lambda: &[i64],
    route: Route,
    weights: Vec<Vec<i64>>,
    images: Vec<SparseMatrix<Rational>>,
    u_minus: Vec<Rational>,
    u_plus_dual: Vec<Rational>,
    lattice_basis: bool,
) -> Result<WeightModule> {
    let d_lambda = alg.datum.pairing_2rho(lambda)?;
    let module = WeightModule {
        lambda: lambda.to_vec(),
        route,
        e: SparseMatrix::zeros(weights.len(), weights.len()),
        f: SparseMatrix::zeros(weights.len(), weights.len()),
        weights,
        images,
        u_minus,
        u_plus_dual,
        d_lambda,
        lattice_basis,
        sign_flipped: false,
    };
    let e = module.act(&alg.e);
    let f = module.act(&alg.f);
    WeightModule { e, f, ..module }.normalize()
}

/// V_λ from the general builder.
pub fn general_module(alg: &ChevalleyAlgebra, lambda: &[i64], dim_cap: usize) -> Result<WeightModule> {
    let rep = build_highest_weight(&alg.datum, lambda, dim_cap)?;
    let images = alg.extend_representation(&rep.raise, &rep.lower, &rep.weights);
    let dim = rep.dim;
    module_from_images(
        alg,
        lambda,
        Route::MinimalAdmissible,
        rep.weights,
        images,
        unit(dim, dim - 1),
        unit(dim, 0),
        true,
    )
}

/// ǧ with the lattice ǧ_ℤ; u_− = x_{−θ}, u*_+ reads the x_θ coefficient.
pub fn adjoint_module(alg: &ChevalleyAlgebra) -> Result<WeightModule> {
    let datum = &alg.datum;
    let weights: Vec<Vec<i64>> = (0..alg.dim)
        .map(|b| if b < 2 * alg.num_pos { datum.root_to_weight(&datum.root(b)) } else { vec![0; alg.rank()] })
        .collect();
    let images: Vec<SparseMatrix<Rational>> = (0..alg.dim).map(|b| alg.ad(&alg.basis_vector(b))).collect();
    let theta = datum.root_index(&datum.highest_root()).expect("highest root");
    module_from_images(
        alg,
        &datum.adjoint_weight(),
        Route::ChevalleyAdjoint,
        weights,
        images,
        unit(alg.dim, alg.neg(theta)),
        unit(alg.dim, alg.pos(theta)),
        true,
    )
}

/// Sign of the lowest wedge monomial as fixed by the explicit models.
fn lowest_sign(series: Series, n: usize, k: usize, lambda: &[i64]) -> i64 {
    let parity = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    let (n, k) = (n as i64, k as i64);
    match series {
        Series::A => 1,
        Series::C => parity((k * (2 * n - k - 1) / 2) as usize),
        Series::B => {
            if k == n {
                parity((n * (n + 1) / 2) as usize)
            } else {
                parity((k * (2 * n - k + 1) / 2) as usize)
            }
        }
        _ => {
            let tail = lambda[(n - 2) as usize] + lambda[(n - 1) as usize];
            if tail > 0 {
                parity((n * (n - 1) / 2) as usize)
            } else {
                parity((k * (2 * n - k - 1) / 2) as usize)
            }
        }
    }
}

/// Weights λ realized by the classical wedge route for the given type.
pub fn is_wedge_realizable(alg: &ChevalleyAlgebra, lambda: &[i64]) -> bool {
    let t = alg.datum.cartan_type;
    let n = t.rank;
    let nonzero: Vec<usize> = (0..n).filter(|&i| lambda[i] != 0).collect();
    let single = |k: usize, c: i64| nonzero == [k] && lambda[k] == c;
    match t.series {
        Series::A | Series::C => nonzero.len() == 1 && lambda[nonzero[0]] == 1,
        Series::B => (nonzero.len() == 1 && nonzero[0] < n - 1 && lambda[nonzero[0]] == 1) || single(n - 1, 2),
        Series::D => {
            (nonzero.len() == 1 && nonzero[0] < n - 2 && lambda[nonzero[0]] == 1)
                || (nonzero == [n - 2, n - 1] && lambda[n - 2] == 1 && lambda[n - 1] == 1)
                || single(n - 2, 2)
                || single(n - 1, 2)
        }
        _ => false,
    }
}

/// V_λ inside Λ^k of the explicit standard representation.
pub fn classical_module(alg: &ChevalleyAlgebra, lambda: &[i64]) -> Result<WeightModule> {
    let t = alg.datum.cartan_type;
    alg.datum.check_weight(lambda)?;
    if !is_wedge_realizable(alg, lambda) {
        return Err(Error::NotRealizable(format!(
            "{:?} is not a wedge weight of {}; use the spin relations or the general builder",
            lambda, t
        )));
    }
    let model = StdModel::new(alg)?;
    let lowest = alg.datum.lowest_weight(lambda);
    let n = t.rank;
    let mono_weight = |w: &Wedge, i: usize| -> Vec<i64> {
        let mut acc = vec![0; n];
        for &u in &w.basis[i] {
            for (a, b) in acc.iter_mut().zip(&model.weights[u]) {
                *a += b;
            }
        }
        acc
    };
    let (wedge, top, bottom) = (1..=model.size)
        .find_map(|k| {
            let w = Wedge::new(model.size, k);
            let tops: Vec<usize> = (0..w.dim()).filter(|&i| mono_weight(&w, i) == lambda).collect();
            let bots: Vec<usize> = (0..w.dim()).filter(|&i| mono_weight(&w, i) == lowest).collect();
            (tops.len() == 1 && bots.len() == 1).then(|| (w, tops[0], bots[0]))
        })
        .ok_or_else(|| Error::Internal(format!("no wedge power realizes {:?}", lambda)))?;
    let dim = wedge.dim();
    let ambient: Vec<SparseMatrix<Rational>> = model.images.iter().map(|m| wedge.derivation(m)).collect();
    let sign = lowest_sign(t.series, n, wedge.k, lambda);
    let u = unit::<Rational>(dim, bottom).into_iter().map(|x| x * int(sign)).collect::<Vec<_>>();
    for i in 0..n {
        if !is_zero_vec(&ambient[alg.neg(i)].mul_vec(&u)) {
            return Err(Error::Internal(format!("wedge monomial for {:?} is not a lowest vector", lambda)));
        }
    }

    // closure of u under the simple raising operators
    let mut sub = Subspace::new(dim);
    sub.insert(u.clone());
    let mut basis = vec![u];
    let mut weights = vec![lowest.clone()];
    let mut head = 0;
    while head < basis.len() {
        for i in 0..n {
            let v = ambient[alg.pos(i)].mul_vec(&basis[head]);
            if !is_zero_vec(&v) && sub.insert(v.clone()) {
                let w: Vec<i64> = weights[head].iter().zip(alg.datum.simple_root_weight(i)).map(|(a, b)| a + b).collect();
                basis.push(v);
                weights.push(w);
            }
        }
        head += 1;
    }
    let module = if basis.len() == dim {
        let weights = (0..dim).map(|i| mono_weight(&wedge, i)).collect();
        module_from_images(alg, lambda, Route::ExplicitClassical, weights, ambient, basis[0].clone(), unit(dim, top), true)?
    } else {
        let m = basis.len();
        let images: Vec<SparseMatrix<Rational>> = ambient
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Rational>> = basis
                    .iter()
                    .map(|b| {
                        sub.coordinates(&a.mul_vec(b))
                            .ok_or_else(|| Error::Internal("wedge submodule is not stable".into()))
                    })
                    .collect::<Result<_>>()?;
                Ok(SparseMatrix::from_columns(m, &cols))
            })
            .collect::<Result<_>>()?;
        let u_plus: Vec<Rational> = basis.iter().map(|b| b[top].clone()).collect();
        module_from_images(alg, lambda, Route::ExplicitClassical, weights, images, unit(m, 0), u_plus, false)?
    };
    module.check_weyl_dimension(alg)?;
    Ok(module)
}

