//! Word-size arithmetic modulo 30-bit primes, used to pre-screen exact
//! computations before they are confirmed over the rationals.

/// Primes just below 2^30.
pub const SCREEN_PRIMES: [u64; 3] = [1_073_741_789, 1_073_741_783, 1_073_741_741];

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be nonzero mod `p`.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

/// Rank of a row-major matrix over F_p.
pub fn rank(rows: usize, cols: usize, data: &[u64], p: u64) -> usize {
    let mut m = data.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        for k in 0..cols {
            m.swap(rank * cols + k, piv * cols + k);
        }
        let iv = inv(m[rank * cols + c], p);
        for r in 0..rows {
            if r == rank || m[r * cols + c] == 0 {
                continue;
            }
            let f = mul(m[r * cols + c], iv, p);
            for k in c..cols {
                m[r * cols + k] = sub(m[r * cols + k], mul(f, m[rank * cols + k], p), p);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Dense univariate polynomial over F_p, little-endian and trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFp {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn rem(&self, other: &PolyFp) -> PolyFp {
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dg = other.coeffs.len() - 1;
        let lead_inv = inv(other.coeffs[dg], p);
        while r.len() > dg {
            let top = r.len() - 1;
            let f = mul(r[top], lead_inv, p);
            if f != 0 {
                for (k, &g) in other.coeffs.iter().enumerate() {
                    let idx = top - dg + k;
                    r[idx] = sub(r[idx], mul(f, g, p), p);
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        PolyFp::new(p, r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &PolyFp) -> PolyFp {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.coeffs.last() {
            let li = inv(lead, a.p);
            for c in a.coeffs.iter_mut() {
                *c = mul(*c, li, a.p);
            }
        }
        a
    }
}
