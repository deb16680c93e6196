//! Reduced Burau representation and fraction-free determinants.

use super::laurent::LaurentPoly;
use crate::braid::BraidWord;

/// Square matrix over `Z[t, t^{-1}]`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        BurauMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    /// Right multiplication by the matrix of one letter.
    ///
    /// The generator matrix differs from the identity only in row `i`:
    /// `(t, -t, 1)` for `σ_i` and `(1, -t^{-1}, t^{-1})` for `σ_i^{-1}`,
    /// at columns `i-1, i, i+1` (entries outside the matrix dropped).
    fn apply_letter(&mut self, v: i32) {
        let d = self.dim();
        let i = v.unsigned_abs() as usize - 1;
        let (left, mid, right) = if v > 0 {
            (LaurentPoly::t(), -&LaurentPoly::t(), LaurentPoly::one())
        } else {
            (LaurentPoly::one(), LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(1, -1))
        };
        for row in self.rows.iter_mut() {
            let pivot = std::mem::take(&mut row[i]);
            if pivot.is_zero() {
                continue;
            }
            if i > 0 {
                row[i - 1] = &row[i - 1] + &(&pivot * &left);
            }
            if i + 1 < d {
                row[i + 1] = &row[i + 1] + &(&pivot * &right);
            }
            row[i] = &pivot * &mid;
        }
    }

    /// `ρ(w) = ρ(v_1) ρ(v_2) ⋯` on `n - 1` dimensions.
    pub fn of_word(w: &BraidWord) -> Self {
        let mut m = BurauMatrix::identity(w.strands().saturating_sub(1));
        for &v in w.letters() {
            m.apply_letter(v);
        }
        m
    }

    /// `I - self`.
    pub fn identity_minus(&self) -> Self {
        let d = self.dim();
        let mut out = self.clone();
        for (i, row) in out.rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = if i == j { &LaurentPoly::one() - x } else { -&*x };
            }
        }
        debug_assert_eq!(out.dim(), d);
        out
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        let d = self.dim();
        let mut rows = vec![vec![LaurentPoly::zero(); d]; d];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                for k in 0..d {
                    *x = &*x + &(&self.rows[i][k] * &other.rows[k][j]);
                }
            }
        }
        BurauMatrix { rows }
    }

    /// Bareiss elimination; every division is exact in the Laurent ring.
    pub fn determinant(&self) -> LaurentPoly {
        let d = self.dim();
        if d == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.rows.clone();
        let mut sign = false;
        let mut prev = LaurentPoly::one();
        for k in 0..d - 1 {
            if a[k][k].is_zero() {
                match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[d - 1][d - 1].clone();
        if sign {
            -&det
        } else {
            det
        }
    }
}
