//! Irreducible highest-weight modules from the Cartan matrix alone.
//!
//! Weight spaces are filled breadth-first by depth below λ. At weight μ the
//! candidates are f_j·w for w in V_{μ+α_j}, enumerated by (j, basis index).
//! A candidate is recorded by its raising images
//! e_i f_j w = f_j e_i w + δ_ij ⟨μ+α_j, α_i∨⟩ w ∈ ⊕_i V_{μ+α_i};
//! since V_λ has no singular vectors below λ, this map is injective and
//! the independent candidates form a basis of V_μ (the quotient by the
//! contravariant-form radical).
//!
//! The basis is then replaced, weight space by weight space, by a ℤ-basis
//! of the minimal admissible lattice Σ_j Σ_{a≥1} f_j^{(a)} L_{μ+aα_j}.

use std::collections::{BTreeMap, HashMap};

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{lattice_basis, Matrix, SparseMatrix, Subspace};
use crate::rootdata::RootDatum;
use crate::scalar::{big, factorial, int, Rational};

#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Vec<i64>,
    pub depth: usize,
    pub offset: usize,
    pub dim: usize,
}

/// Highest-weight module with raising/lowering matrices for the simple
/// Chevalley generators, in a basis adapted to the weight decomposition.
#[derive(Clone, Debug)]
pub struct HighestWeightRep {
    pub lambda: Vec<i64>,
    pub spaces: Vec<WeightSpace>,
    pub weights: Vec<Vec<i64>>,
    pub raise: Vec<SparseMatrix<Rational>>,
    pub lower: Vec<SparseMatrix<Rational>>,
    pub dim: usize,
}

impl HighestWeightRep {
    pub fn highest_index(&self) -> usize {
        0
    }

    pub fn lowest_index(&self) -> usize {
        self.dim - 1
    }
}

type Local = HashMap<(usize, usize), Matrix<Rational>>;

/// Builds V_λ with the minimal admissible lattice as basis.
pub fn build_highest_weight(datum: &RootDatum, lambda: &[i64], dim_cap: usize) -> Result<HighestWeightRep> {
    datum.check_weight(lambda)?;
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::InvalidWeight(format!("{:?} is not dominant", lambda)));
    }
    let expected = datum.weyl_dimension(lambda);
    if expected > BigInt::from(dim_cap) {
        return Err(Error::DimensionCap { dim: expected.to_string(), cap: dim_cap });
    }
    let n = datum.rank;
    let alpha: Vec<Vec<i64>> = (0..n).map(|j| datum.simple_root_weight(j)).collect();
    let shift = |mu: &[i64], j: usize, sign: i64| -> Vec<i64> {
        mu.iter().zip(&alpha[j]).map(|(m, a)| m + sign * a).collect()
    };

    let mut spaces: Vec<(Vec<i64>, usize, usize)> = vec![(lambda.to_vec(), 0, 1)];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(lambda.to_vec(), 0)]);
    // e_loc[(s, i)]: V_s → V_{s+α_i};  f_loc[(s, j)]: V_s → V_{s−α_j}
    let mut e_loc: Local = HashMap::new();
    let mut f_loc: Local = HashMap::new();

    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut targets: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        for &s in &frontier {
            for j in 0..n {
                targets.insert(shift(&spaces[s].0, j, -1), ());
            }
        }
        let mut next = Vec::new();
        // descending order of weight vectors for determinism
        for mu in targets.into_keys().rev() {
            let above: Vec<Option<usize>> =
                (0..n).map(|i| index.get(&shift(&mu, i, 1)).copied()).collect();
            let block_len: Vec<usize> =
                above.iter().map(|a| a.map_or(0, |s| spaces[s].2)).collect();
            let total: usize = block_len.iter().sum();
            let mut sub = Subspace::new(total);
            let mut accepted: Vec<Vec<Rational>> = Vec::new();
            let mut candidates: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
            for j in 0..n {
                let Some(src) = above[j] else { continue };
                for b in 0..spaces[src].2 {
                    let mut image = Vec::with_capacity(total);
                    for i in 0..n {
                        let Some(tgt) = above[i] else { continue };
                        let mut block = vec![Rational::zero(); spaces[tgt].2];
                        // f_j e_i w
                        if let Some(m) = e_loc.get(&(src, i)) {
                            let ei_w = m.col(b);
                            let sigma = index[&shift(&spaces[src].0, i, 1)];
                            let fj = &f_loc[&(sigma, j)];
                            let v = fj.mul_vec(&ei_w);
                            for (x, y) in block.iter_mut().zip(v) {
                                *x += y;
                            }
                        }
                        if i == j {
                            block[b] += int(spaces[src].0[i]);
                        }
                        image.extend(block);
                    }
                    if sub.insert(image.clone()) {
                        accepted.push(image.clone());
                    }
                    candidates.push((j, b, image));
                }
            }
            let dim = accepted.len();
            if dim == 0 {
                continue;
            }
            let s = spaces.len();
            spaces.push((mu.clone(), depth, dim));
            index.insert(mu.clone(), s);
            next.push(s);
            // E_i: V_μ → V_{μ+α_i} read off from the image blocks
            let mut start = 0;
            for i in 0..n {
                if above[i].is_none() {
                    continue;
                }
                let len = block_len[i];
                let cols: Vec<Vec<Rational>> =
                    accepted.iter().map(|img| img[start..start + len].to_vec()).collect();
                let m = Matrix::from_cols(&cols, len);
                if !m.is_zero() {
                    e_loc.insert((s, i), m);
                }
                start += len;
            }
            // F_j: V_{μ+α_j} → V_μ via coordinates of the candidate images
            for j in 0..n {
                let Some(src) = above[j] else { continue };
                let cols: Vec<Vec<Rational>> = candidates
                    .iter()
                    .filter(|(cj, _, _)| *cj == j)
                    .map(|(_, _, img)| {
                        sub.coordinates(img).ok_or_else(|| {
                            Error::Internal("candidate image outside its span".into())
                        })
                    })
                    .collect::<Result<_>>()?;
                f_loc.insert((src, j), Matrix::from_cols(&cols, dim));
            }
        }
        frontier = next;
    }

    let total: usize = spaces.iter().map(|s| s.2).sum();
    if BigInt::from(total) != expected {
        return Err(Error::Internal(format!(
            "built dimension {} differs from Weyl dimension {} for {:?}",
            total, expected, lambda
        )));
    }

    // minimal admissible lattice, weight space by weight space
    let mut bases: Vec<Matrix<Rational>> = Vec::with_capacity(spaces.len());
    bases.push(Matrix::identity(1));
    for s in 1..spaces.len() {
        let (mu, _, dim) = &spaces[s];
        let mut gens: Vec<Vec<Rational>> = Vec::new();
        for j in 0..n {
            let mut a = 1i64;
            loop {
                let src_w: Vec<i64> = mu.iter().zip(&alpha[j]).map(|(m, x)| m + a * x).collect();
                let Some(&src) = index.get(&src_w) else { break };
                let fact = big(&factorial(a as u64));
                for col in 0..bases[src].cols {
                    let mut v = bases[src].col(col);
                    let mut cur = src;
                    for _ in 0..a {
                        v = f_loc[&(cur, j)].mul_vec(&v);
                        cur = index[&shift(&spaces[cur].0, j, -1)];
                    }
                    gens.push(v.into_iter().map(|x| x / &fact).collect());
                }
                a += 1;
            }
        }
        let basis = lattice_basis(&gens);
        if basis.len() != *dim {
            return Err(Error::Internal(format!(
                "lattice at weight {:?} has rank {} instead of {}",
                mu,
                basis.len(),
                dim
            )));
        }
        bases.push(Matrix::from_cols(&basis, *dim));
    }
    let inverses: Vec<Matrix<Rational>> = bases
        .iter()
        .map(|b| b.inverse().ok_or_else(|| Error::Internal("singular lattice basis".into())))
        .collect::<Result<_>>()?;

    let mut offsets = Vec::with_capacity(spaces.len());
    let mut acc = 0;
    for s in &spaces {
        offsets.push(acc);
        acc += s.2;
    }
    let assemble = |loc: &Local, sign: i64, gen: usize| -> SparseMatrix<Rational> {
        let mut trip = Vec::new();
        for (s, (mu, _, _)) in spaces.iter().enumerate() {
            let Some(m) = loc.get(&(s, gen)) else { continue };
            let t = index[&shift(mu, gen, sign)];
            let conj = inverses[t].mul(m).mul(&bases[s]);
            for r in 0..conj.rows {
                for c in 0..conj.cols {
                    let v = conj.get(r, c);
                    if !v.is_zero() {
                        trip.push((offsets[t] + r, offsets[s] + c, v.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(total, total, trip)
    };
    let raise: Vec<SparseMatrix<Rational>> = (0..n).map(|i| assemble(&e_loc, 1, i)).collect();
    let lower: Vec<SparseMatrix<Rational>> = (0..n).map(|j| assemble(&f_loc, -1, j)).collect();

    let mut weights = Vec::with_capacity(total);
    let mut out_spaces = Vec::with_capacity(spaces.len());
    for (s, (mu, d, dim)) in spaces.iter().enumerate() {
        for _ in 0..*dim {
            weights.push(mu.clone());
        }
        out_spaces.push(WeightSpace { weight: mu.clone(), depth: *d, offset: offsets[s], dim: *dim });
    }
    let rep = HighestWeightRep { lambda: lambda.to_vec(), spaces: out_spaces, weights, raise, lower, dim: total };
    debug_assert!(rep.spaces.last().map_or(true, |s| s.dim == 1));
    Ok(rep)
}
