#![allow(dead_code)]

use rand::Rng;
use sextic_core::form::monomials;
use sextic_core::random::Rng64;
use sextic_core::{Matrix, Rational, TernaryForm};

pub fn int(v: i64) -> Rational {
    Rational::from(v)
}

pub fn random_form(rng: &mut Rng64, degree: u32, bound: i64) -> TernaryForm {
    let coeffs: Vec<Rational> = monomials(degree)
        .iter()
        .map(|_| int(rng.gen_range(-bound..=bound)))
        .collect();
    TernaryForm::from_coefficients(degree, &coeffs)
}

pub fn random_matrix(rng: &mut Rng64, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data: Vec<Vec<Rational>> = (0..rows)
        .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect();
    Matrix::from_rows(&data)
}

pub fn random_rational_matrix(rng: &mut Rng64, n: usize) -> Matrix {
    let data: Vec<Vec<Rational>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
                .collect()
        })
        .collect();
    Matrix::from_rows(&data)
}

/// Rank modulo `p` by plain Gaussian elimination on residues.
pub fn rank_mod(m: &Matrix, p: u64) -> usize {
    let (r, c) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..c).map(|j| m[(i, j)].mod_p(p).expect("p divides a denominator")).collect())
        .collect();
    let inv = |x: u64| {
        let (mut base, mut e, mut acc) = (x as u128, p - 2, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    };
    let mut rank = 0;
    for col in 0..c {
        let Some(piv) = (rank..r).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][col]);
        for i in 0..r {
            if i != rank && a[i][col] != 0 {
                let f = (a[i][col] as u128 * iv as u128 % p as u128) as u64;
                for j in 0..c {
                    let sub = (f as u128 * a[rank][j] as u128 % p as u128) as u64;
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}
