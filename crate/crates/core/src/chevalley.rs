//! Chevalley basis of ǧ, the principal sl2-triple and graded centralizers.
//!
//! Basis order: positive root vectors x_α (indices `0..N`, in the order of
//! [`RootDatum::positive_roots`]), negative root vectors x_{−α}
//! (`N..2N`), then the simple coroots h_i (`2N..2N+n`).
//!
//! For a non-simple positive root α the vector x_α is defined by
//! x_α = [x_i, x_β]/(p+1) with i minimal such that β = α − α_i is a root
//! and p the length of the α_i-string below β; x_{−α} = [x_{−β}, y_i]/(p+1).
//! Structure constants are read off from a faithful representation built by
//! the highest-weight builder.

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, zeros, Matrix, SparseMatrix};
use crate::repbuilder::highest_weight::build_highest_weight;
use crate::rootdata::{RootDatum, Series};
use crate::scalar::{int, Rational};

pub type Element = Vec<Rational>;

/// How a non-simple positive root vector is generated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootStep {
    pub simple: usize,
    pub beta: usize,
    pub p: i64,
}

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub datum: RootDatum,
    pub dim: usize,
    pub num_pos: usize,
    pub steps: Vec<Option<RootStep>>,
    /// Signs s_α applied to the root vector pair (x_α, x_{−α}).
    pub signs: Vec<i64>,
    /// (2N)×(2N) table: root-index pair to (index of the sum, N_{γ,δ}).
    table: Vec<Option<(usize, i64)>>,
    /// Coefficients a_i of e = Σ a_i x_i.
    pub simple_coeffs: Vec<Rational>,
    pub e: Element,
    pub h: Element,
    pub f: Element,
}

impl ChevalleyAlgebra {
    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn pos(&self, k: usize) -> usize {
        k
    }

    pub fn neg(&self, k: usize) -> usize {
        self.num_pos + k
    }

    pub fn cartan(&self, i: usize) -> usize {
        2 * self.num_pos + i
    }

    pub fn basis_vector(&self, idx: usize) -> Element {
        let mut v = zeros(self.dim);
        v[idx] = Rational::one();
        v
    }

    /// ad(ρ)-degree of a basis vector: the height of its root, 0 on ǧ_0.
    pub fn basis_degree(&self, idx: usize) -> i64 {
        if idx < 2 * self.num_pos {
            RootDatum::height(&self.datum.root(idx))
        } else {
            0
        }
    }

    /// Coroot of the root with index `idx` as a Cartan element.
    fn coroot_element(&self, idx: usize) -> Vec<(usize, Rational)> {
        let (k, sign) = if idx < self.num_pos { (idx, 1) } else { (idx - self.num_pos, -1) };
        self.datum.positive_coroots[k]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.cartan(i), int(sign * c)))
            .collect()
    }

    /// [b_a, b_b] for basis vectors, as sparse (index, coefficient) pairs.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        let two_n = 2 * self.num_pos;
        match (a < two_n, b < two_n) {
            (true, true) => {
                let opposite = if a < self.num_pos { a + self.num_pos } else { a - self.num_pos };
                if b == opposite {
                    return self.coroot_element(a);
                }
                match self.table[a * two_n + b] {
                    Some((s, c)) => vec![(s, int(c))],
                    None => Vec::new(),
                }
            }
            (false, true) => {
                let i = a - two_n;
                let c = self.datum.pair_root_coroot(&self.datum.root(b), i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(b, int(c))]
                }
            }
            (true, false) => {
                let i = b - two_n;
                let c = self.datum.pair_root_coroot(&self.datum.root(a), i);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(a, int(-c))]
                }
            }
            (false, false) => Vec::new(),
        }
    }

    /// Structure constant N_{γ,δ} for root indices, if γ+δ is a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        self.table[a * 2 * self.num_pos + b]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Element {
        let mut out = zeros(self.dim);
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xa * yb;
                for (s, v) in self.bracket_basis(a, b) {
                    out[s] += &c * v;
                }
            }
        }
        out
    }

    pub fn ad(&self, x: &[Rational]) -> SparseMatrix<Rational> {
        let cols: Vec<Vec<Rational>> =
            (0..self.dim).map(|b| self.bracket(x, &self.basis_vector(b))).collect();
        SparseMatrix::from_columns(self.dim, &cols)
    }

    /// κ_min on basis vectors: (x_α, x_{−α}) ↦ 2/(α,α), Cartan part from
    /// the coroot Gram matrix.
    pub fn kappa_basis(&self, a: usize, b: usize) -> Rational {
        let two_n = 2 * self.num_pos;
        if a < two_n && b < two_n {
            let opposite = if a < self.num_pos { a + self.num_pos } else { a - self.num_pos };
            if b != opposite {
                return Rational::zero();
            }
            let k = a % self.num_pos;
            int(2) / self.datum.root_length(&self.datum.positive_roots[k])
        } else if a >= two_n && b >= two_n {
            self.datum.coroot_form.get(a - two_n, b - two_n).clone()
        } else {
            Rational::zero()
        }
    }

    pub fn kappa_min(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let two_n = 2 * self.num_pos;
            if a < two_n {
                let b = if a < self.num_pos { a + self.num_pos } else { a - self.num_pos };
                if !y[b].is_zero() {
                    acc += xa * &y[b] * self.kappa_basis(a, b);
                }
            } else {
                for j in 0..self.rank() {
                    let b = two_n + j;
                    if !y[b].is_zero() {
                        acc += xa * &y[b] * self.kappa_basis(a, b);
                    }
                }
            }
        }
        acc
    }

    /// Trace form of the adjoint representation.
    pub fn kappa_ad(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.ad(x).trace_product(&self.ad(y))
    }

    /// Images of every basis element under the representation whose simple
    /// generators act by `raise`/`lower` and whose Cartan generators act
    /// diagonally on basis vectors of the given weights.
    pub fn extend_representation(
        &self,
        raise: &[SparseMatrix<Rational>],
        lower: &[SparseMatrix<Rational>],
        weights: &[Vec<i64>],
    ) -> Vec<SparseMatrix<Rational>> {
        extend_representation(&self.datum, &self.steps, &self.signs, raise, lower, weights)
    }

    /// Elements of ǧ_e (`side = 1`) or ǧ_f (`side = −1`) of ad(ρ)-degree
    /// `side·deg`, as a basis of the exact kernel.
    pub fn centralizer_piece(&self, side: i64, deg: i64) -> Vec<Element> {
        let (src, tgt): (Vec<usize>, Vec<usize>) = {
            let of_degree = |d: i64| -> Vec<usize> {
                (0..self.dim).filter(|&b| self.basis_degree(b) == d).collect()
            };
            (of_degree(side * deg), of_degree(side * (deg + 1)))
        };
        let z = if side > 0 { &self.e } else { &self.f };
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (c, &b) in src.iter().enumerate() {
            let img = self.bracket(z, &self.basis_vector(b));
            for (r, &t) in tgt.iter().enumerate() {
                m.set(r, c, img[t].clone());
            }
        }
        m.kernel()
            .into_iter()
            .map(|k| {
                let mut v = zeros(self.dim);
                for (c, &b) in src.iter().enumerate() {
                    v[b] = k[c].clone();
                }
                primitive(v)
            })
            .collect()
    }

    /// Graded dimensions of ker(ad e) by ad(ρ)-degree.
    pub fn centralizer_grading(&self) -> Vec<(i64, usize)> {
        let max = RootDatum::height(&self.datum.highest_root());
        (1..=max)
            .map(|d| (d, self.centralizer_piece(1, d).len()))
            .filter(|(_, k)| *k > 0)
            .collect()
    }

    /// The diagram involution swapping the two end nodes of D_n, extended to
    /// ǧ through the root-vector construction.
    pub fn diagram_involution(&self, v: &[Rational]) -> Result<Element> {
        let t = self.datum.cartan_type;
        if t.series != Series::D {
            return Err(Error::InvalidType(format!("{} has no end-node involution", t)));
        }
        let n = t.rank;
        let perm = |i: usize| -> usize {
            if i == n - 2 {
                n - 1
            } else if i == n - 1 {
                n - 2
            } else {
                i
            }
        };
        let np = self.num_pos;
        let mut images: Vec<Element> = vec![Vec::new(); self.dim];
        // σ(x'_i) = x'_{σi}, σ(y'_i) = y'_{σi} for the signed generators
        for i in 0..n {
            images[self.pos(i)] = self.basis_vector(self.pos(perm(i)));
            images[self.neg(i)] = self.basis_vector(self.neg(perm(i)));
            images[self.cartan(i)] = self.basis_vector(self.cartan(perm(i)));
        }
        for k in n..np {
            let st = self.steps[k].unwrap();
            let sign = self.signs[k] * self.signs[st.simple] * self.signs[st.beta];
            let c = Rational::new(sign.into(), (st.p + 1).into());
            let xi = images[self.pos(st.simple)].clone();
            let xb = images[self.pos(st.beta)].clone();
            images[self.pos(k)] = self.bracket(&xi, &xb).iter().map(|x| x * &c).collect();
            let yb = images[self.neg(st.beta)].clone();
            let yi = images[self.neg(st.simple)].clone();
            images[self.neg(k)] = self.bracket(&yb, &yi).iter().map(|x| x * &c).collect();
        }
        let mut out = zeros(self.dim);
        for (b, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            axpy(&mut out, c, &images[b]);
        }
        Ok(out)
    }

    /// Verifies [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    pub fn check_sl2(&self) -> Result<()> {
        let he = self.bracket(&self.h, &self.e);
        let hf = self.bracket(&self.h, &self.f);
        let ef = self.bracket(&self.e, &self.f);
        let two_e: Element = self.e.iter().map(|x| x * int(2)).collect();
        let m_two_f: Element = self.f.iter().map(|x| x * int(-2)).collect();
        if he != two_e || hf != m_two_f || ef != self.h {
            return Err(Error::Internal("principal triple fails the sl2 relations".into()));
        }
        Ok(())
    }

    /// Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let ab = self.bracket(&self.basis_vector(a), &self.basis_vector(b));
                for c in b + 1..self.dim {
                    let vc = self.basis_vector(c);
                    let va = self.basis_vector(a);
                    let vb = self.basis_vector(b);
                    let t1 = self.bracket(&ab, &vc);
                    let t2 = self.bracket(&self.bracket(&vb, &vc), &va);
                    let t3 = self.bracket(&self.bracket(&vc, &va), &vb);
                    let s: Element = t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vec(&s) {
                        return Err(Error::Internal(format!("Jacobi fails on ({}, {}, {})", a, b, c)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let two_n = 2 * self.num_pos;
        let mut constants = Vec::new();
        for a in 0..two_n {
            for b in 0..two_n {
                if let Some((s, c)) = self.table[a * two_n + b] {
                    constants.push(serde_json::json!({
                        "alpha": self.datum.root(a),
                        "beta": self.datum.root(b),
                        "sum": self.datum.root(s),
                        "n": c,
                    }));
                }
            }
        }
        let fmt = |v: &Element| -> Vec<String> { v.iter().map(crate::scalar::format_rational).collect() };
        serde_json::json!({
            "type": self.datum.cartan_type.to_string(),
            "dim": self.dim,
            "structure_constants": constants,
            "e": fmt(&self.e),
            "h": fmt(&self.h),
            "f": fmt(&self.f),
        })
    }
}

/// Scales to a primitive integer vector whose first nonzero entry is positive.
pub fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    use num::Integer;
    let mut den = num::BigInt::one();
    for x in &v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<num::BigInt> = v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    let mut g = num::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    let first_neg = ints.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
    if first_neg {
        g = -g;
    }
    ints.into_iter().map(|x| Rational::new(x, g.clone())).collect()
}

fn root_steps(datum: &RootDatum) -> Vec<Option<RootStep>> {
    let n = datum.rank;
    datum
        .positive_roots
        .iter()
        .enumerate()
        .map(|(k, alpha)| {
            if k < n {
                return None;
            }
            let (simple, beta) = (0..n)
                .find_map(|i| {
                    let mut b = alpha.clone();
                    b[i] -= 1;
                    datum.root_index(&b).filter(|&idx| idx < datum.num_positive_roots()).map(|idx| (i, idx))
                })
                .expect("non-simple positive root has a simple predecessor");
            let mut p = 0;
            let mut down = datum.positive_roots[beta].clone();
            loop {
                down[simple] -= 1;
                if datum.is_root(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            Some(RootStep { simple, beta, p })
        })
        .collect()
}

fn extend_representation(
    datum: &RootDatum,
    steps: &[Option<RootStep>],
    signs: &[i64],
    raise: &[SparseMatrix<Rational>],
    lower: &[SparseMatrix<Rational>],
    weights: &[Vec<i64>],
) -> Vec<SparseMatrix<Rational>> {
    let n = datum.rank;
    let np = datum.num_positive_roots();
    let dim = weights.len();
    let mut images: Vec<SparseMatrix<Rational>> = vec![SparseMatrix::zeros(dim, dim); 2 * np + n];
    for i in 0..n {
        let s = int(signs[i]);
        images[i] = raise[i].scaled(&s);
        images[np + i] = lower[i].scaled(&s);
        let d: Vec<Rational> = weights.iter().map(|w| int(w[i])).collect();
        images[2 * np + i] = SparseMatrix::diagonal(&d);
    }
    for k in n..np {
        let st = steps[k].unwrap();
        // x_α = s_α [x_i, x_β]/(p+1) with the unsigned x_i, x_β
        let c = Rational::new((signs[k] * signs[st.simple] * signs[st.beta]).into(), (st.p + 1).into());
        images[k] = images[st.simple].commutator(&images[st.beta]).scaled(&c);
        images[np + k] = images[np + st.beta].commutator(&images[np + st.simple]).scaled(&c);
    }
    images
}

/// Fundamental weight index with the smallest module, used as the faithful
/// representation from which structure constants are read.
fn faithful_weight(datum: &RootDatum) -> Vec<i64> {
    (0..datum.rank)
        .map(|k| datum.fundamental_weight(k))
        .min_by_key(|w| datum.weyl_dimension(w))
        .unwrap()
}

pub fn build_chevalley(datum: &RootDatum) -> Result<ChevalleyAlgebra> {
    build_chevalley_signed(datum, &vec![1; datum.num_positive_roots()])
}

/// Chevalley algebra with root vector pairs rescaled by signs s_α = ±1.
pub fn build_chevalley_signed(datum: &RootDatum, signs: &[i64]) -> Result<ChevalleyAlgebra> {
    let n = datum.rank;
    let np = datum.num_positive_roots();
    if signs.len() != np || signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::InvalidInput("one sign ±1 per positive root is required".into()));
    }
    let steps = root_steps(datum);
    let lambda = faithful_weight(datum);
    let rep = build_highest_weight(datum, &lambda, usize::MAX)?;
    let images = extend_representation(datum, &steps, signs, &rep.raise, &rep.lower, &rep.weights);

    for k in 0..np {
        let br = images[k].commutator(&images[np + k]);
        let mut h = SparseMatrix::zeros(rep.dim, rep.dim);
        for (i, &c) in datum.positive_coroots[k].iter().enumerate() {
            if c != 0 {
                h = h.add(&images[2 * np + i].scaled(&int(c)));
            }
        }
        if br != h {
            return Err(Error::Internal(format!(
                "[x_α, x_-α] ≠ h_α for α = {:?}",
                datum.positive_roots[k]
            )));
        }
    }

    let two_n = 2 * np;
    let mut table = vec![None; two_n * two_n];
    // a nonzero entry of each root vector image, used to read coefficients
    let probe: Vec<(usize, usize, Rational)> = (0..two_n)
        .map(|g| {
            images[g]
                .cols_data
                .iter()
                .enumerate()
                .find_map(|(c, col)| col.first().map(|(r, v)| (r.to_owned(), c, v.clone())))
                .expect("faithful representation")
        })
        .collect();
    for a in 0..two_n {
        let ra = datum.root(a);
        for b in 0..two_n {
            let rb = datum.root(b);
            let sum: Vec<i64> = ra.iter().zip(&rb).map(|(x, y)| x + y).collect();
            let Some(s) = datum.root_index(&sum) else { continue };
            let (r, c, v) = &probe[s];
            let col_b = images[b].column(*c);
            let col_a = images[a].column(*c);
            let w: Vec<Rational> = images[a]
                .mul_vec(&col_b)
                .iter()
                .zip(images[b].mul_vec(&col_a))
                .map(|(x, y)| x - y)
                .collect();
            let coeff = &w[*r] / v;
            let expected: Vec<Rational> = images[s].column(*c).iter().map(|x| x * &coeff).collect();
            if w != expected || !coeff.is_integer() || coeff.is_zero() {
                return Err(Error::Internal(format!(
                    "structure constant for {:?} + {:?} is not an integer multiple",
                    ra, rb
                )));
            }
            let nval: i64 = coeff.to_integer().try_into().unwrap();
            table[a * two_n + b] = Some((s, nval));
        }
    }

    let dim = two_n + n;
    let simple_coeffs: Vec<Rational> =
        (0..n).map(|i| Rational::new(datum.simple_root_lengths[i].into(), 2.into())).collect();
    let mut e = zeros(dim);
    let mut h = zeros(dim);
    let mut f = zeros(dim);
    for i in 0..n {
        e[i] = simple_coeffs[i].clone();
        h[two_n + i] = int(datum.two_rho_coroot[i]);
        f[np + i] = int(datum.two_rho_coroot[i]) / &simple_coeffs[i];
    }
    let alg = ChevalleyAlgebra { datum: datum.clone(), dim, num_pos: np, steps, signs: signs.to_vec(), table, simple_coeffs, e, h, f };
    alg.check_sl2()?;
    let grading = alg.centralizer_grading();
    let total: usize = grading.iter().map(|(_, k)| k).sum();
    if total != n {
        return Err(Error::Internal(format!("dim ker(ad e) = {} ≠ rank {}", total, n)));
    }
    for (d, k) in &grading {
        let expected = datum.degrees.iter().filter(|&&dj| dj - 1 == *d).count();
        if expected != *k {
            return Err(Error::Internal(format!("centralizer grading mismatch in degree {}", d)));
        }
    }
    Ok(alg)
}

/// Graded bases e_j ∈ ǧ_{e,d_j−1}, f_j ∈ ǧ_{f,−d_j+1}.
#[derive(Clone, Debug)]
pub struct CentralizerBasis {
    pub degrees: Vec<i64>,
    pub e_side: Vec<Element>,
    pub f_side: Vec<Element>,
    /// pairings[j][k] = κ_min(f_j, e_k).
    pub pairings: Matrix<Rational>,
    pub normalization: Normalization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// Matrix-power bases of the classical standard representations, with
    /// κ_min(f_j, e_j) = 1.
    Classical,
    /// Primitive integral kernel vectors, f_j scaled so κ_min(f_j, e_j) = 1.
    Generic,
}

impl CentralizerBasis {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Slots (n/2, n) forming the D-even block, zero-based.
    pub fn block_slots(&self) -> Option<(usize, usize)> {
        let n = self.degrees.len();
        (0..n).find_map(|a| ((a + 1)..n).find(|&b| self.degrees[a] == self.degrees[b]).map(|b| (a, b)))
    }

    fn from_parts(alg: &ChevalleyAlgebra, e_side: Vec<Element>, f_side: Vec<Element>, normalization: Normalization) -> Result<Self> {
        let n = e_side.len();
        let mut pairings = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                pairings.set(j, k, alg.kappa_min(&f_side[j], &e_side[k]));
            }
        }
        for j in 0..n {
            if pairings.get(j, j).is_zero() {
                return Err(Error::Internal(format!("degenerate pairing κ_min(f_{}, e_{}) = 0", j + 1, j + 1)));
            }
        }
        Ok(CentralizerBasis { degrees: alg.datum.degrees.clone(), e_side, f_side, pairings, normalization })
    }
}

/// Centralizer bases in the generic normalization; in type D_n with n even
/// the repeated degree is split into eigenlines of the diagram involution,
/// the fixed line in slot n/2 and the negated line in slot n.
pub fn centralizer_bases(alg: &ChevalleyAlgebra) -> Result<CentralizerBasis> {
    let degrees = &alg.datum.degrees;
    let n = degrees.len();
    let mut e_side: Vec<Element> = vec![Vec::new(); n];
    let mut f_side: Vec<Element> = vec![Vec::new(); n];
    let mut j = 0;
    while j < n {
        let d = degrees[j] - 1;
        let slots: Vec<usize> = (0..n).filter(|&k| degrees[k] - 1 == d).collect();
        if slots[0] != j {
            j += 1;
            continue;
        }
        let es = alg.centralizer_piece(1, d);
        let fs = alg.centralizer_piece(-1, d);
        if es.len() != slots.len() || fs.len() != slots.len() {
            return Err(Error::Internal(format!("centralizer piece of degree {} has wrong dimension", d)));
        }
        if slots.len() == 1 {
            let ej = if j == 0 { alg.e.clone() } else { es[0].clone() };
            let fj = if j == 0 { alg.f.clone() } else { fs[0].clone() };
            e_side[j] = ej;
            f_side[j] = fj;
        } else {
            let (plus_e, minus_e) = involution_split(alg, &es)?;
            let (plus_f, minus_f) = involution_split(alg, &fs)?;
            e_side[slots[0]] = plus_e;
            e_side[slots[1]] = minus_e;
            f_side[slots[0]] = plus_f;
            f_side[slots[1]] = minus_f;
        }
        j += 1;
    }
    for k in 0..n {
        let p = alg.kappa_min(&f_side[k], &e_side[k]);
        if p.is_zero() {
            return Err(Error::Internal(format!("degenerate pairing in slot {}", k + 1)));
        }
        f_side[k] = f_side[k].iter().map(|x| x / &p).collect();
    }
    CentralizerBasis::from_parts(alg, e_side, f_side, Normalization::Generic)
}

fn involution_split(alg: &ChevalleyAlgebra, basis: &[Element]) -> Result<(Element, Element)> {
    let mut plus = None;
    let mut minus = None;
    for v in basis {
        let s = alg.diagram_involution(v)?;
        let p: Element = v.iter().zip(&s).map(|(a, b)| a + b).collect();
        let m: Element = v.iter().zip(&s).map(|(a, b)| a - b).collect();
        if plus.is_none() && !is_zero_vec(&p) {
            plus = Some(primitive(p));
        }
        if minus.is_none() && !is_zero_vec(&m) {
            minus = Some(primitive(m));
        }
    }
    match (plus, minus) {
        (Some(p), Some(m)) => Ok((p, m)),
        _ => Err(Error::Internal("diagram involution does not split the repeated degree".into())),
    }
}

/// Classical normalization: bases taken from matrix powers in the standard
/// representation (and the explicit Pfaffian-type pair in type D).
pub fn classical_centralizer_bases(alg: &ChevalleyAlgebra) -> Result<CentralizerBasis> {
    let model = crate::repbuilder::matrix_model::StdModel::new(alg)?;
    let (e_side, f_side) = model.centralizer_elements(alg)?;
    CentralizerBasis::from_parts(alg, e_side, f_side, Normalization::Classical)
}
