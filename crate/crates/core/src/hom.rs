//! Intertwiners between matrix representations, solved over the fraction
//! field of `A` with fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::Laurent2;
use crate::matrix::Matrix;

/// A matrix over the fraction field: `num / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub num: Matrix,
    pub den: Laurent2,
}

impl RationalMatrix {
    pub fn from_matrix(num: Matrix) -> Self {
        RationalMatrix {
            num,
            den: Laurent2::one(),
        }
    }

    /// The entries in `A`, if the denominator is a unit.
    pub fn to_matrix(&self) -> Option<Matrix> {
        if !self.den.is_unit() {
            return None;
        }
        let inv = self.den.bar().scale(&self.den.terms().next()?.1.clone());
        Some(self.num.scale(&inv))
    }
}

/// Fraction-free Gauss-Jordan elimination in place. Returns the pivot
/// columns; every pivot entry ends up equal to the last pivot.
fn fraction_free_rref(a: &mut Matrix) -> Result<Vec<usize>> {
    let (m, n) = (a.rows(), a.cols());
    let mut prev = Laurent2::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let piv = a[(r, c)].clone();
        for i in (0..m).filter(|&i| i != r) {
            let f = a[(i, c)].clone();
            for j in (0..n).filter(|&j| j != c) {
                let num = &(&piv * &a[(i, j)]) - &(&f * &a[(r, j)]);
                a[(i, j)] = num
                    .try_div(&prev)
                    .ok_or_else(|| Error::Invariant("inexact fraction-free division".into()))?;
            }
            a[(i, c)] = Laurent2::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// A basis of the right kernel of `a`, with entries in `A`.
pub fn nullspace(a: &Matrix) -> Result<Vec<Vec<Laurent2>>> {
    let mut a = a.clone();
    let pivots = fraction_free_rref(&mut a)?;
    let d = match pivots.last() {
        Some(&c) => a[(pivots.len() - 1, c)].clone(),
        None => Laurent2::one(),
    };
    let n = a.cols();
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Laurent2::zero(); n];
        x[f] = d.clone();
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = -a[(k, f)].clone();
        }
        out.push(normalize(x));
    }
    Ok(out)
}

/// Divides out the largest factor that some entry shares with all others,
/// then monomial and integer content, and makes the leading sign positive.
pub fn normalize(mut v: Vec<Laurent2>) -> Vec<Laurent2> {
    let mut candidates: Vec<Laurent2> = v.iter().filter(|x| !x.is_zero()).cloned().collect();
    candidates.sort_by_key(|x| x.len());
    for c in candidates {
        if c.is_unit() {
            break;
        }
        let divided: Option<Vec<Laurent2>> = v.iter().map(|x| x.try_div(&c)).collect();
        if let Some(d) = divided {
            v = d;
            break;
        }
    }
    let nonzero: Vec<&Laurent2> = v.iter().filter(|x| !x.is_zero()).collect();
    if nonzero.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    let (mut mi, mut mj) = (i32::MAX, i32::MAX);
    for x in &nonzero {
        g = g.gcd(&x.integer_content());
        let (i, j) = x.min_exponent().expect("nonzero");
        mi = mi.min(i);
        mj = mj.min(j);
    }
    let lead_negative = nonzero[0]
        .terms()
        .last()
        .is_some_and(|(_, c)| c.is_negative());
    if lead_negative {
        g = -g;
    }
    v.iter()
        .map(|x| {
            x.mul_monomial((-mi, -mj))
                .try_div(&Laurent2::term(g.clone(), (0, 0)))
                .expect("content divides")
        })
        .collect()
}

/// Basis of `{X : rep2[g] X = X rep1[g] for all g}` over the fraction field.
pub fn hom_space(rep1: &[Matrix], rep2: &[Matrix]) -> Result<Vec<RationalMatrix>> {
    if rep1.len() != rep2.len() {
        return Err(Error::Precondition(format!(
            "representations have {} and {} generators",
            rep1.len(),
            rep2.len()
        )));
    }
    let d1 = rep1.first().map_or(0, Matrix::rows);
    let d2 = rep2.first().map_or(0, Matrix::rows);
    if rep1.iter().any(|m| m.rows() != d1 || m.cols() != d1)
        || rep2.iter().any(|m| m.rows() != d2 || m.cols() != d2)
    {
        return Err(Error::Precondition(
            "generator matrices must be square of a common size".into(),
        ));
    }
    let var = |i: usize, j: usize| i * d1 + j;
    let mut eqs = Matrix::zeros(rep1.len() * d2 * d1, d2 * d1);
    for (g, (a, b)) in rep1.iter().zip(rep2).enumerate() {
        for i in 0..d2 {
            for j in 0..d1 {
                let row = (g * d2 + i) * d1 + j;
                for k in 0..d2 {
                    eqs[(row, var(k, j))] += &b[(i, k)];
                }
                for k in 0..d1 {
                    eqs[(row, var(i, k))] -= &a[(k, j)];
                }
            }
        }
    }
    Ok(nullspace(&eqs)?
        .into_iter()
        .map(|x| {
            let rows = x.chunks(d1).map(<[Laurent2]>::to_vec).collect();
            RationalMatrix::from_matrix(Matrix::from_rows(rows).expect("rectangular"))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::parse_rows(rows).unwrap()
    }

    fn l(s: &str) -> Laurent2 {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_of_small_systems() {
        let a = m(&[&["V", "v"], &["V^2", "V*v"]]);
        let k = nullspace(&a).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(a.mul_vec(&k[0]), vec![Laurent2::zero(), Laurent2::zero()]);
        assert_eq!(k[0], vec![l("v"), l("-V")]);
        assert!(nullspace(&Matrix::identity(3)).unwrap().is_empty());
        assert_eq!(nullspace(&Matrix::zeros(2, 3)).unwrap().len(), 3);
    }

    #[test]
    fn kernel_vectors_are_exact() {
        let a = m(&[
            &["V + v", "1", "v^-1", "0"],
            &["1", "V", "0", "v"],
            &["V + v + 1", "1 + V", "v^-1", "v"],
        ]);
        let k = nullspace(&a).unwrap();
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(a.mul_vec(x).iter().all(Laurent2::is_zero));
        }
    }

    #[test]
    fn normalization() {
        let v = vec![l("V*v + V^2"), l("0"), l("2*V*v^3 + 2*V^2*v^2")];
        assert_eq!(normalize(v), vec![l("1"), l("0"), l("2*v^2")]);
        let w = vec![l("-2*V"), l("4*V*v")];
        assert_eq!(normalize(w), vec![l("1"), l("-2*v")]);
    }

    #[test]
    fn scalar_representations() {
        // the sign and trivial one-dimensional representations
        let triv = vec![m(&[&["V"]]), m(&[&["v"]])];
        let sign = vec![m(&[&["-V^-1"]]), m(&[&["-v^-1"]])];
        assert_eq!(hom_space(&triv, &triv).unwrap().len(), 1);
        assert!(hom_space(&triv, &sign).unwrap().is_empty());
        assert!(hom_space(&triv, &sign[..1]).is_err());
    }
}
