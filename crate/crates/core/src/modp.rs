//! Polynomials over a prime field F_p with word-sized p, and Berlekamp factorization.
//!
//! Polynomials are coefficient vectors, lowest degree first, without trailing zeros.
//! All routines assume `p < 2^32` so that products fit in a `u64`.

use alloc::vec;
use alloc::vec::Vec;

pub type PolyP = Vec<u64>;

pub fn normalized(mut f: PolyP) -> PolyP {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.len().checked_sub(1)
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    normalized(
        (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    normalized(out)
}

pub fn scale(a: &[u64], s: u64, p: u64) -> PolyP {
    normalized(a.iter().map(|&x| mulm(x, s, p)).collect())
}

pub fn monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub fn derivative(a: &[u64], p: u64) -> PolyP {
    normalized(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulm(c, k as u64 % p, p))
            .collect(),
    )
}

/// Quotient and remainder; `b` must be nonzero.
pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP) {
    let db = degree(b).expect("division by zero polynomial");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(b[db], p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = rem[k + db];
        if top == 0 {
            continue;
        }
        let q = mulm(top, inv, p);
        quot[k] = q;
        for (j, &c) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - mulm(q, c, p)) % p;
        }
    }
    rem.truncate(db);
    (normalized(quot), normalized(rem))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    div_rem(a, b, p).1
}

/// Monic gcd.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
        t0 = core::mem::replace(&mut t1, t);
    }
    let Some(&lc) = r0.last() else {
        return (Vec::new(), Vec::new(), Vec::new());
    };
    let inv = inv_mod(lc, p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> PolyP {
    rem(&mul(a, b, p), m, p)
}

/// `z^e mod m`.
pub fn pow_z_mod(e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc = rem(&[1], m, p);
    let mut base = rem(&[0, 1], m, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        base = mul_mod(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

/// Null space basis of the Berlekamp map `v -> v^p - v` on F_p[z]/(f).
///
/// `f` must be monic and squarefree. The first basis vector is the constant 1.
fn berlekamp_kernel(f: &[u64], p: u64) -> Vec<PolyP> {
    let n = degree(f).expect("nonzero");
    let xp = pow_z_mod(p, f, p);
    // Column j holds z^(p*j) mod f minus e_j.
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut power = vec![1u64];
    for j in 0..n {
        let mut col = power.clone();
        col.resize(n, 0);
        col[j] = (col[j] + p - 1) % p;
        cols.push(col);
        power = mul_mod(&power, &xp, f, p);
    }
    // Row-reduce the n x n matrix A[k][j] = cols[j][k].
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|k| (0..n).map(|j| cols[j][k]).collect())
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    let mut is_pivot = vec![false; n];
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        let pivot_row = a[row].clone();
        for (r, target) in a.iter_mut().enumerate() {
            if r != row && target[col] != 0 {
                let factor = target[col];
                for (x, &y) in target.iter_mut().zip(&pivot_row) {
                    let sub = mulm(factor, y, p);
                    *x = (*x + p - sub) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        is_pivot[col] = true;
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - a[r][free]) % p;
        }
        basis.push(normalized(v));
    }
    basis.sort_by_key(|v| v.len());
    basis
}

/// Number of distinct monic irreducible factors of a monic squarefree `f`.
pub fn berlekamp_count(f: &[u64], p: u64) -> usize {
    berlekamp_kernel(f, p).len()
}

/// Monic irreducible factors of a monic squarefree `f`, sorted by (degree, coefficients).
pub fn berlekamp_factors(f: &[u64], p: u64) -> Vec<PolyP> {
    let basis = berlekamp_kernel(f, p);
    let target = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in basis.iter().skip(1) {
        if factors.len() == target {
            break;
        }
        let mut next = Vec::new();
        for g in factors {
            if g.len() <= 2 {
                next.push(g);
                continue;
            }
            let mut rest = g;
            for s in 0..p {
                if rest.len() <= 1 {
                    break;
                }
                let shifted = sub(v, &[s], p);
                let h = gcd(&rest, &shifted, p);
                if h.len() > 1 {
                    rest = div_rem(&rest, &h, p).0;
                    next.push(h);
                }
            }
            if rest.len() > 1 {
                next.push(rest);
            }
        }
        factors = next;
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}
