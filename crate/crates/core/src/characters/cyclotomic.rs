//! Exact arithmetic in `ℤ[ζ_e]`, stored in the power basis
//! `1, ζ, …, ζ^{φ(e)−1}` modulo the cyclotomic polynomial `Φ_e`.

use std::fmt;

/// An element of `ℤ[ζ_e]`; coefficients of `ζ^0 … ζ^{φ(e)−1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic(pub Vec<i64>);

impl Cyclotomic {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The integer value if the element is rational.
    pub fn as_integer(&self) -> Option<i64> {
        self.0[1..].iter().all(|&c| c == 0).then_some(self.0[0])
    }
}

/// Context for arithmetic in `ℤ[ζ_e]`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    e: usize,
    /// `Φ_e`, lowest degree first, monic.
    phi: Vec<i64>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / den[dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "inexact polynomial division");
    q
}

/// `Φ_e` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(e: usize) -> Vec<i64> {
    // x^e − 1 divided by Φ_d for every proper divisor d of e
    let mut p = vec![0i64; e + 1];
    p[0] = -1;
    p[e] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl CyclotomicField {
    pub fn new(e: usize) -> Self {
        assert!(e >= 1);
        Self {
            e,
            phi: cyclotomic_polynomial(e),
        }
    }

    pub fn conductor(&self) -> usize {
        self.e
    }

    /// `φ(e)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut c: Vec<i64>) -> Cyclotomic {
        let d = self.degree();
        for i in (d..c.len()).rev() {
            let x = c[i];
            if x != 0 {
                for (j, &p) in self.phi.iter().enumerate() {
                    c[i - d + j] -= x * p;
                }
            }
        }
        c.truncate(d);
        c.resize(d, 0);
        Cyclotomic(c)
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic(vec![0; self.degree()])
    }

    pub fn from_int(&self, n: i64) -> Cyclotomic {
        let mut c = vec![0; self.degree()];
        c[0] = n;
        Cyclotomic(c)
    }

    /// `ζ^k`.
    pub fn zeta(&self, k: i64) -> Cyclotomic {
        let k = k.rem_euclid(self.e as i64) as usize;
        let mut c = vec![0; self.e.max(self.degree())];
        c[k] = 1;
        self.reduce(c)
    }

    /// `Σ m_t ζ^t`.
    pub fn from_root_multiplicities(&self, m: &[i64]) -> Cyclotomic {
        let mut c = vec![0; self.e.max(self.degree())];
        for (t, &x) in m.iter().enumerate() {
            c[t % self.e] += x;
        }
        self.reduce(c)
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, a: &Cyclotomic, k: i64) -> Cyclotomic {
        Cyclotomic(a.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let d = self.degree();
        let mut c = vec![0i64; 2 * d];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        self.reduce(c)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        let mut c = vec![0i64; self.e.max(self.degree())];
        for (i, &x) in a.0.iter().enumerate() {
            c[(self.e - i) % self.e] += x;
        }
        self.reduce(c)
    }

    /// `k` with `a = n·ζ^k`, if any.
    pub fn root_of_unity_multiple(&self, a: &Cyclotomic, n: i64) -> Option<usize> {
        (0..self.e).find(|&k| self.scale(&self.zeta(k as i64), n) == *a)
    }

    pub fn display(&self, a: &Cyclotomic) -> String {
        CycDisplay { field: self, value: a }.to_string()
    }
}

struct CycDisplay<'a> {
    field: &'a CyclotomicField,
    value: &'a Cyclotomic,
}

impl fmt::Display for CycDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.field.e;
        let mut terms = Vec::new();
        for (i, &c) in self.value.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, _) => c.to_string(),
                (_, 1) => format!("z{e}^{i}"),
                (_, -1) => format!("-z{e}^{i}"),
                _ => format!("{c}*z{e}^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(9).len(), 7);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_sum_to_zero() {
        let k = CyclotomicField::new(9);
        let mut s = k.zero();
        for i in 0..9 {
            s = k.add(&s, &k.zeta(i));
        }
        assert!(s.is_zero());
        // ζ · ζ^8 = 1 and conj(ζ) = ζ^8
        assert_eq!(k.mul(&k.zeta(1), &k.zeta(8)), k.from_int(1));
        assert_eq!(k.conj(&k.zeta(1)), k.zeta(8));
    }

    #[test]
    fn norm_of_cube_root() {
        let k = CyclotomicField::new(3);
        let w = k.zeta(1);
        assert_eq!(k.mul(&w, &k.conj(&w)), k.from_int(1));
        assert_eq!(k.root_of_unity_multiple(&k.scale(&w, 3), 3), Some(1));
        assert_eq!(k.display(&w), "z3^1");
    }

    #[test]
    fn trivial_conductor() {
        let k = CyclotomicField::new(1);
        assert_eq!(k.degree(), 1);
        assert_eq!(k.zeta(5), k.from_int(1));
        assert_eq!(k.mul(&k.from_int(2), &k.from_int(3)), k.from_int(6));
    }
}
