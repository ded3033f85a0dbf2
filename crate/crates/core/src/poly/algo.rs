//! Determinants, resultants and gcds over `Q[x, y, z, w]`.

use alloc::vec::Vec;

use super::MultiPoly;

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>, nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let mut negate = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone().with_nvars(nvars.max(m[n - 1][n - 1].nvars()));
    if negate {
        -d
    } else {
        d
    }
}

/// Resultant of `p` and `q` with respect to `var`: the determinant of the
/// Sylvester matrix with the coefficients of `p` in the top rows.
///
/// Returns `None` when either input is zero.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: usize) -> Option<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return None;
    }
    let nvars = p.nvars().max(q.nvars());
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    if dp == 0 && dq == 0 {
        return Some(MultiPoly::one(nvars));
    }
    if dp == 0 {
        return Some(pc[0].pow(dq as u32).with_nvars(nvars));
    }
    if dq == 0 {
        return Some(qc[0].pow(dp as u32).with_nvars(nvars));
    }
    let size = dp + dq;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dq {
        let mut row = alloc::vec![MultiPoly::zero(nvars); size];
        for (i, c) in pc.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..dp {
        let mut row = alloc::vec![MultiPoly::zero(nvars); size];
        for (i, c) in qc.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    Some(determinant(rows, nvars))
}

/// Pseudo-remainder of `a` by `b` as univariate polynomials in `var`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var);
    let lb = b.leading_coeff_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.leading_coeff_in(var);
        let mut shift = super::Monomial::ONE;
        shift.0[var] = dr - db;
        let lifted = MultiPoly::monomial(r.nvars(), shift, num_traits::One::one());
        r = &(&lb * &r) - &(&(&lr * &lifted) * b);
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(p.nvars());
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(p.nvars());
        }
    }
    g
}

fn primitive_part(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content_in(p, var);
    p.exact_div(&c).expect("content divides").normalize()
}

fn main_var(p: &MultiPoly, q: &MultiPoly) -> Option<usize> {
    let n = p.nvars().max(q.nvars());
    (0..n).rev().find(|&v| p.involves(v) || q.involves(v))
}

fn gcd_rec(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let nvars = p.nvars().max(q.nvars());
    if p.is_zero() {
        return q.normalize().with_nvars(nvars);
    }
    if q.is_zero() {
        return p.normalize().with_nvars(nvars);
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(nvars);
    }
    let var = main_var(p, q).expect("non-constant input has a variable");
    if !p.involves(var) {
        return gcd_rec(p, &content_in(q, var));
    }
    if !q.involves(var) {
        return gcd_rec(&content_in(p, var), q);
    }
    let c = gcd_rec(&content_in(p, var), &content_in(q, var));
    let mut a = primitive_part(p, var);
    let mut b = primitive_part(q, var);
    if a.degree_in(var) < b.degree_in(var) {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            b = MultiPoly::one(nvars);
            break;
        }
        a = b;
        b = primitive_part(&r, var);
    }
    (&c * &b).normalize()
}

/// Greatest common divisor, normalized to integer coefficients with gcd 1 and
/// positive leading coefficient. `gcd(p, 0)` is `p` normalized.
pub fn gcd_poly(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    gcd_rec(p, q).normalize()
}
