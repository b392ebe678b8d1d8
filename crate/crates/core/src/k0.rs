//! The Serre functor on K0: M = Z^T Z^{-1} in the basis of simples, its finite
//! order, and the Coxeter polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{build_lattice, zeta_matrix, GridLattice};

pub type IMat = Vec<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreK0Matrix {
    pub m: IMat,
}

fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let k = b.len();
    let c = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); c]; n];
    for i in 0..n {
        for t in 0..k {
            let x = &a[i][t];
            if x.is_zero() {
                continue;
            }
            for j in 0..c {
                if !b[t][j].is_zero() {
                    out[i][j] += x * &b[t][j];
                }
            }
        }
    }
    out
}

pub fn mat_pow(a: &IMat, mut e: u32) -> IMat {
    let mut base = a.clone();
    let mut acc = identity(a.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

/// Inverse of an upper unitriangular integer matrix (the Moebius matrix of Z).
fn unitriangular_inverse(z: &IMat) -> IMat {
    let n = z.len();
    let mut inv = identity(n);
    // Solve Z X = I column by column, bottom-up.
    for col in 0..n {
        for i in (0..n).rev() {
            let mut acc = if i == col { BigInt::one() } else { BigInt::zero() };
            for t in i + 1..n {
                if !z[i][t].is_zero() {
                    acc -= &z[i][t] * &inv[t][col];
                }
            }
            inv[i][col] = acc;
        }
    }
    inv
}

fn to_big(z: &[Vec<i64>]) -> IMat {
    z.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

fn transpose(a: &IMat) -> IMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].clone()).collect()).collect()
}

/// M = Z^T Z^{-1}; checks M [P_x] = [I_x] for every x, i.e. M Z = Z^T.
pub fn serre_k0_matrix(l: &GridLattice) -> Result<SerreK0Matrix> {
    let z = to_big(&zeta_matrix(l));
    let zt = transpose(&z);
    let m = mat_mul(&zt, &unitriangular_inverse(&z));
    if mat_mul(&m, &z) != zt {
        return Err(Error::Invariant("the K0 Serre matrix does not send [P_x] to [I_x]".into()));
    }
    Ok(SerreK0Matrix { m })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterReport {
    pub m: usize,
    pub n: i32,
    pub exponent: u32,
    pub sign: i32,
    pub holds: bool,
    /// First entry (row, col) where M^exponent differs from sign * Id.
    pub first_failure: Option<(usize, usize)>,
}

/// M^{m+n+1} = (-1)^{mn} Id.
pub fn coxeter_order_check(m: usize, n: i32) -> Result<CoxeterReport> {
    let sign = if (m as i64 * i64::from(n)) % 2 == 0 { 1 } else { -1 };
    coxeter_check_with_sign(m, n, sign)
}

/// M^{m+n+1} = sign * Id.
pub fn coxeter_check_with_sign(m: usize, n: i32, sign: i32) -> Result<CoxeterReport> {
    let l = build_lattice(m, n)?;
    let s = serre_k0_matrix(&l)?;
    let exponent = (m as u32) + (n as u32) + 1;
    let p = mat_pow(&s.m, exponent);
    let mut first_failure = None;
    'outer: for (i, row) in p.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j { BigInt::from(sign) } else { BigInt::zero() };
            if *v != want {
                first_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(CoxeterReport { m, n, exponent, sign, holds: first_failure.is_none(), first_failure })
}

/// Integer polynomial, coefficients from the constant term up.
pub type Poly = Vec<BigInt>;

/// Characteristic polynomial det(t I - A) by Faddeev-LeVerrier (exact divisions over Z).
pub fn char_poly(a: &IMat) -> Poly {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = identity(n);
    for k in 1..=n {
        let am = mat_mul(a, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -tr / BigInt::from(k);
        coeffs[n - k] = c.clone();
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    coeffs
}

/// Characteristic polynomial of the Coxeter transformation -M.
pub fn coxeter_polynomial(l: &GridLattice) -> Result<Poly> {
    let s = serre_k0_matrix(l)?;
    let neg: IMat = s.m.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
    Ok(char_poly(&neg))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder of a by the monic polynomial b.
fn poly_rem_monic(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = r.pop().unwrap();
        let shift = r.len() - db;
        if !lead.is_zero() {
            for (i, c) in b[..db].iter().enumerate() {
                r[shift + i] -= &lead * c;
            }
        }
    }
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    r
}

/// All roots are period-th roots of unity, hence on the unit circle: p divides (t^period - 1)^deg.
pub fn roots_on_unit_circle(p: &Poly, period: usize) -> bool {
    let deg = p.len() - 1;
    let mut base = vec![BigInt::zero(); period + 1];
    base[0] = -BigInt::one();
    base[period] = BigInt::one();
    let mut acc: Poly = vec![BigInt::one()];
    for _ in 0..deg {
        acc = poly_rem_monic(&poly_mul(&acc, &base), p);
        if acc.is_empty() {
            return true;
        }
    }
    acc.is_empty()
}

/// "t^2 + t + 1" style rendering.
pub fn poly_string(p: &Poly) -> String {
    let mut parts = Vec::new();
    for (d, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let var = match d {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{d}"),
        };
        let body = if d > 0 && mag.is_one() { var } else { format!("{mag}{var}") };
        let sign = if c.is_negative() { "-" } else { "+" };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}
