//! Dixon's modular method: simultaneous eigenvectors of the class-sum
//! matrices over `F_p`, then an exact lift of every value to `ℤ[ζ_e]`.

use crate::cohomology::modular::inv_mod;
use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::structure::{conjugacy_classes, exponent};

use super::cyclotomic::{Cyclotomic, CyclotomicField};

const PRIME_BOUND: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn dixon_prime(n: usize, e: usize) -> Result<u64> {
    let e = e as u64;
    let mut p = e + 1;
    while p * p <= 4 * n as u64 {
        p += e;
    }
    while p < PRIME_BOUND {
        if is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::NoPrime(PRIME_BOUND))
}

fn pow_mod(mut b: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        k >>= 1;
    }
    r
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (1..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Row-reduced basis of a subspace of `F_p^r` with its pivot columns.
#[derive(Clone, Debug)]
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn rref(p: u64, mut rows: Vec<Vec<u64>>, cols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let (a, b) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&mut hi[0], &lo[r])
                };
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{c : A c = 0}` for a square matrix `A` given by rows.
fn nullspace(p: u64, a: Vec<Vec<u64>>, n: usize) -> Vec<Vec<u64>> {
    let (rows, pivots) = rref(p, a, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Output of the modular stage, before sorting.
pub(crate) struct DixonOutput {
    pub prime: u64,
    pub exponent: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub field: CyclotomicField,
    pub degrees: Vec<usize>,
    pub values: Vec<Vec<Cyclotomic>>,
    pub residues: Vec<Vec<u64>>,
}

pub(crate) fn dixon(g: &GroupTable) -> Result<DixonOutput> {
    let n = g.order();
    let e = exponent(g);
    let p = dixon_prime(n, e)?;
    let classes = conjugacy_classes(g);
    let r = classes.len();
    let mut class_of = vec![0; n];
    for (k, cls) in classes.iter().enumerate() {
        for &x in cls {
            class_of[x] = k;
        }
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();

    // (M_j)_{kl} = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for &x in &classes[j] {
            let xi = g.inv(x);
            for (l, &z) in reps.iter().enumerate() {
                m[class_of[g.mul(xi, z)]][l] += 1;
            }
        }
        m
    };

    let mut spaces = vec![Space {
        basis: (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect(),
        pivots: (0..r).collect(),
    }];
    for j in 1..r {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            let dim = s.basis.len();
            if dim == 1 {
                next.push(s);
                continue;
            }
            // restriction of M_j to the invariant subspace, in basis coordinates
            let mut a = vec![vec![0u64; dim]; dim];
            for (i, b) in s.basis.iter().enumerate() {
                for (row, &pc) in a.iter_mut().zip(&s.pivots) {
                    row[i] = m[pc].iter().zip(b).fold(0, |acc, (&x, &y)| (acc + x % p * y) % p);
                }
            }
            let mut found = 0;
            for lambda in 0..p {
                let mut shifted = a.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + p - lambda) % p;
                }
                let null = nullspace(p, shifted, dim);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let vecs: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (ci, b) in c.iter().zip(&s.basis) {
                            for (x, &y) in v.iter_mut().zip(b) {
                                *x = (*x + ci * y) % p;
                            }
                        }
                        v
                    })
                    .collect();
                let (basis, pivots) = rref(p, vecs, r);
                next.push(Space { basis, pivots });
                if found == dim {
                    break;
                }
            }
            if found != dim {
                return Err(Error::CharacterVerification(format!(
                    "class-sum matrix {j} is not diagonalisable over F_{p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::CharacterVerification(format!(
            "found {} common eigenvectors for {r} classes",
            spaces.len()
        )));
    }

    let inv_class: Vec<usize> = reps.iter().map(|&x| class_of[g.inv(x)]).collect();
    let mut degrees = Vec::with_capacity(r);
    let mut residues = Vec::with_capacity(r);
    for s in &spaces {
        let v = &s.basis[0];
        if v[0] == 0 {
            return Err(Error::CharacterVerification("eigenvector vanishes on the identity".into()));
        }
        let c = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|&x| x * c % p).collect();
        // Σ ω_k ω_{k*} / h_k = |G| / χ(1)²
        let t = (0..r).fold(0, |acc, k| (acc + w[k] * w[inv_class[k]] % p * inv_mod(sizes[k] % p, p)) % p);
        if t == 0 {
            return Err(Error::CharacterVerification("degree equation has no solution".into()));
        }
        let target = (n as u64 % p) * inv_mod(t, p) % p;
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == target)
            .ok_or_else(|| Error::CharacterVerification("no integral degree".into()))?;
        degrees.push(d as usize);
        residues.push((0..r).map(|k| w[k] * d % p * inv_mod(sizes[k] % p, p) % p).collect::<Vec<u64>>());
    }

    // lift: χ(g) = Σ_t m_t ζ^t with m_t the multiplicity of the eigenvalue ζ^t
    let field = CyclotomicField::new(e);
    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let zpow: Vec<u64> = (0..e as u64).map(|i| pow_mod(z, i, p)).collect();
    let power_class: Vec<Vec<usize>> = reps
        .iter()
        .map(|&x| {
            let mut out = Vec::with_capacity(e);
            let mut y = g.identity();
            for _ in 0..e {
                out.push(class_of[y]);
                y = g.mul(y, x);
            }
            out
        })
        .collect();
    let inv_e = inv_mod(e as u64 % p, p);
    let mut values = Vec::with_capacity(r);
    for (chi, &d) in residues.iter().zip(&degrees) {
        let mut row = Vec::with_capacity(r);
        for pc in &power_class {
            let mut mult = vec![0i64; e];
            for (t, m) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (s, &cls) in pc.iter().enumerate() {
                    acc = (acc + chi[cls] * zpow[(e - (t * s) % e) % e]) % p;
                }
                let mt = acc * inv_e % p;
                if mt > d as u64 {
                    return Err(Error::CharacterVerification(format!(
                        "eigenvalue multiplicity {mt} exceeds degree {d}"
                    )));
                }
                *m = mt as i64;
            }
            row.push(field.from_root_multiplicities(&mult));
        }
        values.push(row);
    }
    Ok(DixonOutput {
        prime: p,
        exponent: e,
        classes,
        class_of,
        field,
        degrees,
        values,
        residues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // |G| = 27, e = 3: p ≡ 1 mod 3 and p > 2√27 ≈ 10.4
        assert_eq!(dixon_prime(27, 3).unwrap(), 13);
        assert_eq!(dixon_prime(6, 6).unwrap(), 7);
        assert_eq!(dixon_prime(1, 1).unwrap(), 3);
        assert_eq!(primitive_root(13), 2);
        assert_eq!(primitive_root(7), 3);
    }

    #[test]
    fn nullspace_small() {
        let p = 7;
        let ns = nullspace(p, vec![vec![1, 2], vec![2, 4]], 2);
        assert_eq!(ns, vec![vec![5, 1]]);
    }
}
