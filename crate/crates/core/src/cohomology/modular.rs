//! Linear algebra over the local rings `ℤ/p^k`: incremental row echelon
//! reduction and Smith normal form with tracked column transforms.

/// `ℤ/p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalRing {
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

impl LocalRing {
    pub fn new(p: u64, k: u32) -> Self {
        Self { p, k, q: p.pow(k) }
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    /// `p`-adic valuation, `k` for zero.
    pub fn val(&self, mut x: u64) -> u32 {
        x %= self.q;
        if x == 0 {
            return self.k;
        }
        let mut v = 0;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.q)
    }

    /// Writes `x = p^v · u` and returns `(v, u)`; `u` is a unit unless `x = 0`.
    pub fn split(&self, x: u64) -> (u32, u64) {
        let v = self.val(x);
        if v == self.k {
            return (v, 0);
        }
        (v, (x % self.q) / self.p.pow(v))
    }

    /// `b / a` for `val(a) ≤ val(b)`: some `t` with `a·t = b`.
    pub fn div(&self, b: u64, a: u64) -> u64 {
        let (va, ua) = self.split(a);
        let (vb, ub) = self.split(b);
        if vb == self.k {
            return 0;
        }
        debug_assert!(va <= vb);
        self.mul(self.p.pow(vb - va), self.mul(ub, self.inv(ua)))
    }
}

/// Inverse of `a` modulo `m`; `a` must be coprime to `m`.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not a unit mod {m}");
    t0.rem_euclid(m as i64) as u64
}

/// Row module of a matrix over `ℤ/p^k`, kept in echelon form with one row
/// per pivot column. Rows are inserted one at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    ring: LocalRing,
    cols: usize,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Echelon {
    pub fn new(ring: LocalRing, cols: usize) -> Self {
        Self {
            ring,
            cols,
            pivots: vec![None; cols],
        }
    }

    pub fn insert(&mut self, mut row: Vec<u64>) {
        let r = self.ring;
        let mut c = 0;
        while c < self.cols {
            if row[c] == 0 {
                c += 1;
                continue;
            }
            match &mut self.pivots[c] {
                None => {
                    self.pivots[c] = Some(row);
                    return;
                }
                Some(piv) => {
                    if r.val(row[c]) < r.val(piv[c]) {
                        std::mem::swap(piv, &mut row);
                    }
                    let t = r.div(row[c], piv[c]);
                    for j in c..self.cols {
                        if piv[j] != 0 {
                            row[j] = r.sub(row[j], r.mul(t, piv[j]));
                        }
                    }
                    debug_assert_eq!(row[c], 0);
                    c += 1;
                }
            }
        }
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.pivots.iter().flatten().cloned().collect()
    }
}

/// `A · V = U⁻¹ · D` with `D` diagonal; only the column transform is kept.
#[derive(Clone, Debug)]
pub struct LocalSnf {
    pub ring: LocalRing,
    /// Valuation of each diagonal entry, one per column (`k` when zero).
    pub diag_val: Vec<u32>,
    /// Column transform `V`, row-major `cols × cols`.
    pub v: Vec<Vec<u64>>,
    /// `V⁻¹`.
    pub v_inv: Vec<Vec<u64>>,
}

/// Smith normal form over `ℤ/p^k`; the diagonal valuations come out
/// non-decreasing.
pub fn local_snf(ring: LocalRing, rows: Vec<Vec<u64>>, cols: usize) -> LocalSnf {
    let r = ring;
    let mut a = rows;
    let nrows = a.len();
    let mut v: Vec<Vec<u64>> = (0..cols).map(|i| unit_row(cols, i)).collect();
    let mut v_inv = v.clone();
    let mut diag_val = vec![r.k; cols];
    let mut t = 0;
    while t < nrows.min(cols) {
        // entry of minimal valuation in the remaining block
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let vx = r.val(x);
                    if best.is_none_or(|(b, _, _)| vx < b) {
                        best = Some((vx, i, j));
                        if vx == 0 {
                            break;
                        }
                    }
                }
            }
            if best.is_some_and(|(b, _, _)| b == 0) {
                break;
            }
        }
        let Some((pv, bi, bj)) = best else { break };
        a.swap(t, bi);
        if bj != t {
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            for row in v.iter_mut() {
                row.swap(t, bj);
            }
            v_inv.swap(t, bj);
        }
        // normalise the pivot to p^pv by a unit row scaling
        let (_, u) = r.split(a[t][t]);
        let ui = r.inv(u);
        for x in a[t].iter_mut() {
            *x = r.mul(*x, ui);
        }
        let piv = a[t][t];
        for i in t + 1..nrows {
            if a[i][t] != 0 {
                let c = r.div(a[i][t], piv);
                let (top, rest) = a.split_at_mut(i);
                let prow = &top[t];
                for (x, &y) in rest[0].iter_mut().zip(prow.iter()).skip(t) {
                    *x = r.sub(*x, r.mul(c, y));
                }
            }
        }
        for j in t + 1..cols {
            let x = a[t][j];
            if x == 0 {
                continue;
            }
            let c = r.div(x, piv);
            // column j -= c · column t
            for row in a.iter_mut() {
                row[j] = r.sub(row[j], r.mul(c, row[t]));
            }
            for row in v.iter_mut() {
                row[j] = r.sub(row[j], r.mul(c, row[t]));
            }
            // V⁻¹: row t += c · row j
            let (lo, hi) = if t < j { v_inv.split_at_mut(j) } else { unreachable!() };
            for (x, &y) in lo[t].iter_mut().zip(hi[0].iter()) {
                *x = r.add(*x, r.mul(c, y));
            }
        }
        diag_val[t] = pv;
        t += 1;
    }
    LocalSnf {
        ring,
        diag_val,
        v,
        v_inv,
    }
}

fn unit_row(n: usize, i: usize) -> Vec<u64> {
    let mut r = vec![0; n];
    r[i] = 1;
    r
}

impl LocalSnf {
    pub fn cols(&self) -> usize {
        self.diag_val.len()
    }

    /// Generators of the kernel `{x : A x = 0}` with their order exponents:
    /// `p^{k−eᵢ} · V[:, i]` has order `p^{eᵢ}`. Zero generators are dropped.
    pub fn kernel(&self) -> Vec<(Vec<u64>, u32)> {
        let r = self.ring;
        let mut out = Vec::new();
        for (i, &a) in self.diag_val.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let scale = r.p.pow(r.k - a) % r.q;
            let g: Vec<u64> = self.v.iter().map(|row| r.mul(scale, row[i])).collect();
            out.push((g, a));
        }
        out
    }

    /// `V⁻¹ x`.
    pub fn apply_inverse(&self, x: &[u64]) -> Vec<u64> {
        let r = self.ring;
        self.v_inv
            .iter()
            .map(|row| row.iter().zip(x).fold(0, |acc, (&a, &b)| r.add(acc, r.mul(a, b))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matvec(r: LocalRing, a: &[Vec<u64>], x: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| row.iter().zip(x).fold(0, |acc, (&p, &q)| r.add(acc, r.mul(p, q))))
            .collect()
    }

    #[test]
    fn ring_ops() {
        let r = LocalRing::new(3, 2);
        assert_eq!(r.val(0), 2);
        assert_eq!(r.val(3), 1);
        assert_eq!(r.val(5), 0);
        assert_eq!(r.mul(r.inv(5), 5), 1);
        assert_eq!(r.mul(r.div(6, 3), 3), 6);
    }

    #[test]
    fn kernel_over_z9() {
        let r = LocalRing::new(3, 2);
        // 3x + 6y = 0, x + 4y = 0 over ℤ/9
        let a = vec![vec![3, 6], vec![1, 4]];
        let mut e = Echelon::new(r, 2);
        for row in &a {
            e.insert(row.clone());
        }
        let snf = local_snf(r, e.rows(), 2);
        let ker = snf.kernel();
        // x = -4y forces 3y = 0: kernel is cyclic of order 3
        assert_eq!(ker.iter().map(|(_, e)| r.p.pow(*e)).product::<u64>(), 3);
        for (g, _) in &ker {
            assert!(matvec(r, &a, g).iter().all(|&x| x == 0));
        }
        let w = snf.apply_inverse(&ker[0].0);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn inverse_is_inverse() {
        let r = LocalRing::new(2, 3);
        let a = vec![vec![2, 4, 6], vec![1, 3, 5], vec![4, 0, 4]];
        let snf = local_snf(r, a, 3);
        for i in 0..3 {
            for j in 0..3 {
                let x: u64 = (0..3).fold(0, |acc, t| r.add(acc, r.mul(snf.v[i][t], snf.v_inv[t][j])));
                assert_eq!(x, u64::from(i == j));
            }
        }
    }
}
