//! Spectral invariants of a weight module: deg_λ, κ_λ, S_λ, T_λ, b_λ and
//! the eigenweights ε_{λ,j}, with closed-form shortcuts and the reduction
//! identities for sums of weights.
//!
//! All matrix coefficients are evaluated on the pair (u_−, u*_+) by
//! precomputing w_k = e^k·u_− and c_s = u*_+·e^s, so that
//! ⟨Σ_s e^s X Y e^{d−s} u_−, u*_+⟩ = Σ_s c_s·X·Y·w_{d−s}.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::chevalley::{
    build_chevalley, centralizer_bases, classical_centralizer_bases, ChevalleyAlgebra, CentralizerBasis,
    Element, Normalization,
};
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, Matrix};
use crate::repbuilder::{
    adjoint_module, classical_module, general_module, is_wedge_realizable, Route, WeightModule,
};
use crate::rootdata::{build_root_datum, CartanType, RootDatum, Series};
use crate::scalar::{big, binomial, format_rational, int, rational_sqrt, QuadExt, Rational};

/// The data entering the reduction identities, in a fixed centralizer basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub d: i64,
    pub deg: Rational,
    pub degrees: Vec<i64>,
    /// kappa[a][b] = κ_λ(f_a, e_b), zero unless d_a = d_b.
    pub kappa: Matrix<Rational>,
    /// s[j] = S_λ(e_j).
    pub s: Vec<Rational>,
    /// t[j] = T_λ(f_j).
    pub t: Vec<Rational>,
    pub normalization: Normalization,
}

fn bin(n: i64, k: i64) -> Rational {
    big(&binomial(n, k))
}

impl SpectralData {
    /// Data of the trivial module.
    pub fn trivial(degrees: &[i64], normalization: Normalization) -> Self {
        let n = degrees.len();
        SpectralData {
            d: 0,
            deg: Rational::one(),
            degrees: degrees.to_vec(),
            kappa: Matrix::zeros(n, n),
            s: vec![Rational::zero(); n],
            t: vec![Rational::zero(); n],
            normalization,
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn kappa_diag(&self, j: usize) -> &Rational {
        self.kappa.get(j, j)
    }
}

/// Cached extremal orbits of a normalized module.
struct Orbits {
    w: Vec<Vec<Rational>>,
    c: Vec<Vec<Rational>>,
}

impl Orbits {
    fn new(module: &WeightModule) -> Self {
        let d = module.d_lambda as usize;
        let mut w = vec![module.u_minus.clone()];
        let mut c = vec![module.u_plus_dual.clone()];
        for k in 0..d {
            w.push(module.e.mul_vec(&w[k]));
            c.push(module.e.vec_mul(&c[k]));
        }
        Orbits { w, c }
    }
}

fn check_centralizes(alg: &ChevalleyAlgebra, z: &[Rational], side: &[Rational], name: &str) -> Result<()> {
    if !is_zero_vec(&alg.bracket(side, z)) {
        return Err(Error::NotInCentralizer(name.to_string()));
    }
    Ok(())
}

/// deg_λ = ⟨e^{d_λ} u_−, u*_+⟩.
pub fn deg_lambda(module: &WeightModule) -> Result<BigInt> {
    let p = module.extremal_pairing();
    if !p.is_integer() || !p.is_positive() {
        return Err(Error::Internal(format!("deg_λ = {} is not a positive integer", format_rational(&p))));
    }
    Ok(p.to_integer())
}

fn kappa_with(module: &WeightModule, orbits: &Orbits, x: &Element, y: &Element) -> Rational {
    let d = module.d_lambda as usize;
    let mut acc = Rational::zero();
    for s in 0..=d {
        let yv = module.apply(y, &orbits.w[d - s]);
        if is_zero_vec(&yv) {
            continue;
        }
        let xyv = module.apply(x, &yv);
        acc += dot(&orbits.c[s], &xyv);
    }
    acc
}

fn s_with(module: &WeightModule, orbits: &Orbits, y: &Element, dj: i64) -> Rational {
    let s = module.d_lambda - dj + 1;
    if s < 0 {
        return Rational::zero();
    }
    dot(&orbits.c[s as usize], &module.apply(y, &module.u_minus))
}

fn t_with(module: &WeightModule, orbits: &Orbits, x: &Element, dj: i64) -> Rational {
    let d = module.d_lambda;
    let total = d + dj - 1;
    let mut acc = Rational::zero();
    for s in (dj - 1).max(0)..=d {
        let v = module.apply(x, &orbits.w[(total - s) as usize]);
        acc += dot(&orbits.c[s as usize], &v);
    }
    acc
}

/// κ_λ(X, Y) for X ∈ ǧ_f, Y ∈ ǧ_e.
pub fn kappa_lambda(alg: &ChevalleyAlgebra, module: &WeightModule, x: &Element, y: &Element) -> Result<Rational> {
    check_centralizes(alg, x, &alg.f, "X must commute with f")?;
    check_centralizes(alg, y, &alg.e, "Y must commute with e")?;
    Ok(kappa_with(module, &Orbits::new(module), x, y))
}

/// S_λ(Y) for Y ∈ ǧ_{e, d_j − 1}.
pub fn s_invariant(alg: &ChevalleyAlgebra, module: &WeightModule, y: &Element, dj: i64) -> Result<Rational> {
    check_centralizes(alg, y, &alg.e, "Y must commute with e")?;
    Ok(s_with(module, &Orbits::new(module), y, dj))
}

/// T_λ(X) for X ∈ ǧ_{f, −d_j + 1}.
pub fn t_invariant(alg: &ChevalleyAlgebra, module: &WeightModule, x: &Element, dj: i64) -> Result<Rational> {
    check_centralizes(alg, x, &alg.f, "X must commute with f")?;
    Ok(t_with(module, &Orbits::new(module), x, dj))
}

/// b_λ with H₂ acting on V_λ(μ) by κ_min(μ, μ)/2.
pub fn b_lambda(alg: &ChevalleyAlgebra, module: &WeightModule) -> Rational {
    let orbits = Orbits::new(module);
    let d = module.d_lambda as usize;
    let h2: Vec<Rational> =
        module.weights.iter().map(|mu| alg.datum.basic_form_int(mu, mu) / int(2)).collect();
    let mut acc = Rational::zero();
    for s in 0..=d {
        let v: Vec<Rational> = orbits.w[d - s].iter().zip(&h2).map(|(x, h)| x * h).collect();
        acc += dot(&orbits.c[s], &v);
    }
    acc
}

/// All κ/S/T data of a module in the given centralizer basis.
pub fn spectral_data(alg: &ChevalleyAlgebra, module: &WeightModule, basis: &CentralizerBasis) -> Result<SpectralData> {
    for j in 0..basis.rank() {
        check_centralizes(alg, &basis.e_side[j], &alg.e, "e_j must commute with e")?;
        check_centralizes(alg, &basis.f_side[j], &alg.f, "f_j must commute with f")?;
    }
    let orbits = Orbits::new(module);
    let n = basis.rank();
    let mut kappa = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            if basis.degrees[a] == basis.degrees[b] {
                kappa.set(a, b, kappa_with(module, &orbits, &basis.f_side[a], &basis.e_side[b]));
            }
        }
    }
    let s = (0..n).map(|j| s_with(module, &orbits, &basis.e_side[j], basis.degrees[j])).collect();
    let t = (0..n).map(|j| t_with(module, &orbits, &basis.f_side[j], basis.degrees[j])).collect();
    Ok(SpectralData {
        d: module.d_lambda,
        deg: big(&deg_lambda(module)?),
        degrees: basis.degrees.clone(),
        kappa,
        s,
        t,
        normalization: basis.normalization,
    })
}

/// The raw 2×2 block on the repeated degree of D_n, n even.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    /// Zero-based slots (n/2 − 1, n − 1).
    pub slots: (usize, usize),
    /// [[κ(f_p, e_p), κ(f_q, e_p)], [κ(f_p, e_q), κ(f_q, e_q)]] over κ_min.
    pub matrix: [[Rational; 2]; 2],
}

impl Block {
    pub fn is_diagonal(&self) -> bool {
        self.matrix[0][1].is_zero() && self.matrix[1][0].is_zero()
    }

    pub fn trace(&self) -> Rational {
        &self.matrix[0][0] + &self.matrix[1][1]
    }

    pub fn det(&self) -> Rational {
        &self.matrix[0][0] * &self.matrix[1][1] - &self.matrix[0][1] * &self.matrix[1][0]
    }

    pub fn discriminant(&self) -> Rational {
        let t = self.trace();
        &t * &t - int(4) * self.det()
    }

    /// Eigenvalues in slot order: the diagonal entries for a diagonal block,
    /// otherwise (tr + √Δ)/2 before (tr − √Δ)/2.
    pub fn eigenvalues(&self) -> (QuadExt, QuadExt) {
        if self.is_diagonal() {
            return (QuadExt::rational(self.matrix[0][0].clone()), QuadExt::rational(self.matrix[1][1].clone()));
        }
        let half = self.trace() / int(2);
        let delta = self.discriminant();
        let plus = QuadExt::new(half.clone(), Rational::new(1.into(), 2.into()), delta.clone());
        let minus = QuadExt::new(half, Rational::new((-1).into(), 2.into()), delta);
        (plus, minus)
    }

    pub fn commutes_with(&self, o: &Block) -> bool {
        let m = |x: &[[Rational; 2]; 2], y: &[[Rational; 2]; 2], i: usize, j: usize| -> Rational {
            &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j]
        };
        (0..2).all(|i| (0..2).all(|j| m(&self.matrix, &o.matrix, i, j) == m(&o.matrix, &self.matrix, i, j)))
    }
}

/// ε_{λ,j} = κ_λ(f_j, e_j)/κ_min(f_j, e_j), with the block eigenvalues in
/// the repeated-degree slots of D_n, n even.
pub fn eigenweights(data: &SpectralData, basis: &CentralizerBasis) -> Result<(Vec<QuadExt>, Option<Block>)> {
    let n = data.rank();
    let mut eps: Vec<QuadExt> =
        (0..n).map(|j| QuadExt::rational(data.kappa.get(j, j) / basis.pairings.get(j, j))).collect();
    let block = match basis.block_slots() {
        None => None,
        Some((p, q)) => {
            if !basis.pairings.get(p, q).is_zero() || !basis.pairings.get(q, p).is_zero() {
                return Err(Error::Internal("κ_min does not separate the repeated degree".into()));
            }
            let k = |a: usize, b: usize| data.kappa.get(a, b) / basis.pairings.get(b, b);
            let block = Block { slots: (p, q), matrix: [[k(p, p), k(q, p)], [k(p, q), k(q, q)]] };
            let (x, y) = block.eigenvalues();
            eps[p] = x;
            eps[q] = y;
            Some(block)
        }
    };
    Ok((eps, block))
}

/// ε_{λ,1} from d_λ and deg_λ alone.
pub fn epsilon1_closed(datum: &RootDatum, d: i64, deg: &Rational) -> Rational {
    let num = int(2 * datum.dual_coxeter * datum.lacing * d * (d + 1) * (d + 2)) * deg;
    let den: i64 = datum.degrees.iter().map(|&dj| (2 * dj - 2) * (2 * dj - 1) * 2 * dj).sum();
    num / int(den)
}

/// b_λ = ½ κ_min(λ, λ)(d_λ + 1) deg_λ for minuscule λ.
pub fn b_minuscule_closed(datum: &RootDatum, lambda: &[i64], deg: &Rational) -> Result<Rational> {
    if !datum.is_minuscule(lambda) {
        return Err(Error::InvalidWeight(format!("{:?} is not minuscule", lambda)));
    }
    let d = datum.pairing_2rho(lambda)?;
    Ok(datum.basic_form_int(lambda, lambda) * int(d + 1) * deg / int(2))
}

/// Data of λ₁ + λ₂ from the data of λ₁ and λ₂.
pub fn reduce_epsilon(a: &SpectralData, b: &SpectralData) -> Result<SpectralData> {
    if a.normalization != b.normalization || a.degrees != b.degrees {
        return Err(Error::InvalidInput("reduction inputs use different centralizer bases".into()));
    }
    let n = a.rank();
    let (d1, d2) = (a.d, b.d);
    let dd = d1 + d2;
    let mut kappa = Matrix::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            let dj = a.degrees[i];
            if dj != a.degrees[k] {
                continue;
            }
            let v = bin(dd + 1, d1 + 1) * a.kappa.get(i, k) * &b.deg
                + bin(dd + 1, d2 + 1) * b.kappa.get(i, k) * &a.deg
                + bin(dd + 1, d1 - dj + 1) * &b.t[i] * &a.s[k]
                + bin(dd + 1, d2 - dj + 1) * &a.t[i] * &b.s[k];
            kappa.set(i, k, v);
        }
    }
    let s = (0..n)
        .map(|j| {
            let dj = a.degrees[j];
            bin(dd - dj + 1, d1 - dj + 1) * &a.s[j] * &b.deg + bin(dd - dj + 1, d2 - dj + 1) * &b.s[j] * &a.deg
        })
        .collect();
    let t = (0..n)
        .map(|j| {
            let dj = a.degrees[j];
            bin(dd + dj, d1 + dj) * &a.t[j] * &b.deg + bin(dd + dj, d2 + dj) * &b.t[j] * &a.deg
        })
        .collect();
    Ok(SpectralData {
        d: dd,
        deg: bin(dd, d1) * &a.deg * &b.deg,
        degrees: a.degrees.clone(),
        kappa,
        s,
        t,
        normalization: a.normalization,
    })
}

/// Inputs of the three-weight identity for b.
#[derive(Clone, Debug)]
pub struct TripleInputs {
    /// (d, deg, b) of λ₁, λ₂, λ₃.
    pub single: [(i64, Rational, Rational); 3],
    /// (deg, b) of λ₂+λ₃, λ₁+λ₃, λ₁+λ₂.
    pub pairs: [(Rational, Rational); 3],
}

/// b_{λ₁+λ₂+λ₃} from the single and pairwise data.
pub fn reduce_b(inp: &TripleInputs) -> Rational {
    let dd: i64 = inp.single.iter().map(|x| x.0).sum();
    let mut acc = Rational::zero();
    for i in 0..3 {
        let (di, degi, bi) = &inp.single[i];
        let (deg_pair, b_pair) = &inp.pairs[i];
        acc += bin(dd + 1, *di) * degi * b_pair;
        acc -= bin(dd + 1, di + 1) * bi * deg_pair;
    }
    acc
}

/// Recovers the data of λ from the data of 2λ via the tensor-square identities.
pub fn halve(data: &SpectralData) -> Result<SpectralData> {
    if data.d % 2 != 0 {
        return Err(Error::InvalidInput("d_{2λ} must be even".into()));
    }
    let n = data.rank();
    let d = data.d / 2;
    let deg_sq = &data.deg / bin(2 * d, d);
    let deg = rational_sqrt(&deg_sq)
        .ok_or_else(|| Error::Internal(format!("deg_{{2λ}}/C(2d,d) = {} is not a square", format_rational(&deg_sq))))?;
    let solve = |total: &Rational, coef: Rational, name: &str| -> Result<Rational> {
        if coef.is_zero() {
            if !total.is_zero() {
                return Err(Error::Internal(format!("{} of 2λ is nonzero but its halving coefficient vanishes", name)));
            }
            return Ok(Rational::zero());
        }
        Ok(total / coef)
    };
    let mut s = Vec::with_capacity(n);
    let mut t = Vec::with_capacity(n);
    for j in 0..n {
        let dj = data.degrees[j];
        s.push(solve(&data.s[j], int(2) * bin(2 * d - dj + 1, d - dj + 1) * &deg, "S")?);
        t.push(solve(&data.t[j], int(2) * bin(2 * d + dj, d + dj) * &deg, "T")?);
    }
    let mut kappa = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let dj = data.degrees[a];
            if dj != data.degrees[b] {
                continue;
            }
            let rest = data.kappa.get(a, b) - int(2) * bin(2 * d + 1, d - dj + 1) * &t[a] * &s[b];
            kappa.set(a, b, rest / (int(2) * bin(2 * d + 1, d + 1) * &deg));
        }
    }
    Ok(SpectralData { d, deg, degrees: data.degrees.clone(), kappa, s, t, normalization: data.normalization })
}

/// Which construction produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Trivial,
    ExplicitClassical,
    /// Halved from the explicit module of 2λ.
    SpinFromSquare,
    ChevalleyAdjoint,
    MinimalAdmissible,
    ClosedForm,
}

impl From<Route> for Provenance {
    fn from(r: Route) -> Self {
        match r {
            Route::ExplicitClassical => Provenance::ExplicitClassical,
            Route::ChevalleyAdjoint => Provenance::ChevalleyAdjoint,
            Route::MinimalAdmissible => Provenance::MinimalAdmissible,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenweightReport {
    pub cartan_type: CartanType,
    pub lambda: Vec<i64>,
    pub d: i64,
    pub deg: BigInt,
    pub epsilon: Vec<QuadExt>,
    pub block: Option<Block>,
    pub b: Option<Rational>,
    /// s/t-invariants, reported in the classical normalizations only.
    pub s: Option<Vec<Rational>>,
    pub t: Option<Vec<Rational>>,
    pub provenance: Provenance,
}

fn quad_json(q: &QuadExt) -> serde_json::Value {
    if q.is_rational() {
        serde_json::Value::String(format_rational(&q.a))
    } else {
        serde_json::json!({ "a": format_rational(&q.a), "b": format_rational(&q.b), "delta": q.delta.to_string() })
    }
}

fn rationals_json(v: &[Rational]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(|x| serde_json::Value::String(format_rational(x))).collect())
}

impl EigenweightReport {
    pub fn trivial(datum: &RootDatum) -> Self {
        let n = datum.rank;
        EigenweightReport {
            cartan_type: datum.cartan_type,
            lambda: vec![0; n],
            d: 0,
            deg: BigInt::one(),
            epsilon: vec![QuadExt::zero(); n],
            block: None,
            b: Some(Rational::zero()),
            s: None,
            t: None,
            provenance: Provenance::Trivial,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.epsilon.iter().all(QuadExt::is_rational)
    }

    pub fn epsilon_rational(&self) -> Option<Vec<Rational>> {
        self.epsilon.iter().map(|q| q.is_rational().then(|| q.a.clone())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let block = self.block.as_ref().map(|b| {
            serde_json::json!({
                "slots": [b.slots.0 + 1, b.slots.1 + 1],
                "matrix": [rationals_json(&b.matrix[0]), rationals_json(&b.matrix[1])],
            })
        });
        serde_json::json!({
            "type": self.cartan_type.to_string(),
            "lambda": self.lambda,
            "d": self.d,
            "deg": self.deg.to_string(),
            "epsilon": self.epsilon.iter().map(quad_json).collect::<Vec<_>>(),
            "epsilon_block": block,
            "b": self.b.as_ref().map(format_rational),
            "s": self.s.as_deref().map(rationals_json),
            "t": self.t.as_deref().map(rationals_json),
            "provenance": self.provenance,
        })
    }
}

/// Options for [`Engine::report`].
#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub dim_cap: usize,
    /// Compute b_λ (for spin weights this builds V_λ with the general builder).
    pub with_b: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { dim_cap: crate::repbuilder::DEFAULT_DIM_CAP, with_b: true }
    }
}

/// A Chevalley algebra together with its centralizer bases.
#[derive(Clone, Debug)]
pub struct Engine {
    pub alg: ChevalleyAlgebra,
    pub basis: CentralizerBasis,
}

impl Engine {
    /// Classical normalizations for A–D, generic ones otherwise.
    pub fn new(t: CartanType) -> Result<Self> {
        let alg = build_chevalley(&build_root_datum(t))?;
        Self::from_algebra(alg)
    }

    pub fn from_algebra(alg: ChevalleyAlgebra) -> Result<Self> {
        let basis = if alg.datum.series().is_classical() {
            classical_centralizer_bases(&alg)?
        } else {
            centralizer_bases(&alg)?
        };
        Ok(Engine { alg, basis })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.alg.datum
    }

    /// Half of a spin weight's double realized in a wedge power, if λ is spin.
    pub fn spin_double(&self, lambda: &[i64]) -> Option<Vec<i64>> {
        let t = self.datum().cartan_type;
        let n = t.rank;
        let nonzero: Vec<usize> = (0..n).filter(|&i| lambda[i] != 0).collect();
        let spin = match t.series {
            Series::B => nonzero == [n - 1] && lambda[n - 1] == 1,
            Series::D => nonzero.len() == 1 && nonzero[0] >= n - 2 && lambda[nonzero[0]] == 1,
            _ => false,
        };
        spin.then(|| lambda.iter().map(|x| 2 * x).collect())
    }

    /// The module of the matrix route for λ.
    pub fn module(&self, lambda: &[i64], dim_cap: usize) -> Result<WeightModule> {
        if is_wedge_realizable(&self.alg, lambda) {
            classical_module(&self.alg, lambda)
        } else if lambda == self.datum().adjoint_weight().as_slice() && !self.datum().series().is_classical() {
            adjoint_module(&self.alg)
        } else {
            general_module(&self.alg, lambda, dim_cap)
        }
    }

    /// Spectral data along the matrix route (spin weights via 2λ).
    pub fn data(&self, lambda: &[i64], dim_cap: usize) -> Result<(SpectralData, Provenance)> {
        self.datum().check_weight(lambda)?;
        if lambda.iter().all(|&x| x == 0) {
            return Ok((SpectralData::trivial(&self.basis.degrees, self.basis.normalization), Provenance::Trivial));
        }
        if let Some(double) = self.spin_double(lambda) {
            let m = classical_module(&self.alg, &double)?;
            let data = spectral_data(&self.alg, &m, &self.basis)?;
            return Ok((halve(&data)?, Provenance::SpinFromSquare));
        }
        let m = self.module(lambda, dim_cap)?;
        Ok((spectral_data(&self.alg, &m, &self.basis)?, m.route.into()))
    }

    pub fn report(&self, lambda: &[i64], opts: ReportOptions) -> Result<EigenweightReport> {
        self.datum().check_weight(lambda)?;
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("{:?} is not dominant", lambda)));
        }
        if lambda.iter().all(|&x| x == 0) {
            return Ok(EigenweightReport::trivial(self.datum()));
        }
        let (data, provenance) = self.data(lambda, opts.dim_cap)?;
        let b = if !opts.with_b {
            None
        } else if provenance == Provenance::SpinFromSquare {
            let m = general_module(&self.alg, lambda, opts.dim_cap)?;
            Some(b_lambda(&self.alg, &m))
        } else {
            let m = self.module(lambda, opts.dim_cap)?;
            Some(b_lambda(&self.alg, &m))
        };
        self.report_from_data(lambda, &data, b, provenance)
    }

    pub fn report_from_data(
        &self,
        lambda: &[i64],
        data: &SpectralData,
        b: Option<Rational>,
        provenance: Provenance,
    ) -> Result<EigenweightReport> {
        let (epsilon, block) = eigenweights(data, &self.basis)?;
        if !data.deg.is_integer() || !data.deg.is_positive() {
            return Err(Error::Internal("deg_λ is not a positive integer".into()));
        }
        let classical = self.basis.normalization == Normalization::Classical;
        Ok(EigenweightReport {
            cartan_type: self.datum().cartan_type,
            lambda: lambda.to_vec(),
            d: data.d,
            deg: data.deg.to_integer(),
            epsilon,
            block,
            b,
            s: classical.then(|| data.s.clone()),
            t: classical.then(|| data.t.clone()),
            provenance,
        })
    }
}
