//! Normal-form product rules for the catalogue groups.
//!
//! Two kinds of rule are implemented:
//!
//! * the closed-form rule for `(β, γ₁, γ₂, σ) = z^β ξ₁^γ₁ ξ₂^γ₂ w^σ` where
//!   `ξ₂ξ₁ = z⁻¹ξ₁ξ₂` and `w` inverts both `ξᵢ` (dropping `β` gives the
//!   order-18 quotient);
//! * collection for tuples `(central…, γ₁, γ₂, γ₃)`: the top generator `ξ₃` is
//!   moved to the right past `ξ₁`, `ξ₂` using a literal table of the
//!   conjugates `ξ₃^a ξⱼ^b ξ₃^-a`, each of which lies in the subgroup
//!   `K = ⟨central, ξ₁, ξ₂⟩`, followed by reduction inside `K` using
//!   `ξ₂^a ξ₁^b = [ξ₁,ξ₂]^{-ab} ξ₁^b ξ₂^a`.

use crate::error::{Error, Result};

/// Mixed-radix encoding of parameter tuples; the first parameter is the most
/// significant digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadix {
    moduli: Vec<u32>,
}

impl MixedRadix {
    pub fn new(moduli: Vec<u32>) -> Self {
        assert!(moduli.iter().all(|&m| m > 0));
        Self { moduli }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn size(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn check(&self, params: &[u32]) -> Result<()> {
        if params.len() != self.moduli.len() {
            return Err(Error::InvalidTuple(format!(
                "expected {} parameters, got {}",
                self.moduli.len(),
                params.len()
            )));
        }
        if let Some((p, m)) = params.iter().zip(&self.moduli).find(|(p, m)| p >= m) {
            return Err(Error::InvalidTuple(format!("residue {p} not below modulus {m}")));
        }
        Ok(())
    }

    pub fn encode(&self, params: &[u32]) -> usize {
        params
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&p, &m)| acc * m as usize + p as usize)
    }

    pub fn decode(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u32;
            index /= m as usize;
        }
        out
    }

    pub fn render(params: &[u32]) -> String {
        let inner: Vec<String> = params.iter().map(u32::to_string).collect();
        format!("({})", inner.join(","))
    }
}

/// Closed-form product of `(β,γ₁,γ₂,σ)` tuples (moduli 3,3,3,2); with
/// `with_center = false` the tuples are `(γ₁,γ₂,σ)` and `β` is dropped.
pub fn dihedral_heisenberg_product(with_center: bool, t: &[u32], u: &[u32]) -> Vec<u32> {
    let off = usize::from(with_center);
    let (g1, g2, s) = (t[off] as i64, t[off + 1] as i64, t[off + 2] as i64);
    let (h1, h2, s2) = (u[off] as i64, u[off + 1] as i64, u[off + 2] as i64);
    let sign = if s == 0 { 1 } else { -1 };
    let m3 = |x: i64| x.rem_euclid(3) as u32;
    let gamma1 = m3(g1 + sign * h1);
    let gamma2 = m3(g2 + sign * h2);
    let sigma = ((s + s2) % 2) as u32;
    if with_center {
        let beta = m3(t[0] as i64 + u[0] as i64 - g2 * sign * h1);
        vec![beta, gamma1, gamma2, sigma]
    } else {
        vec![gamma1, gamma2, sigma]
    }
}

/// Element `c · ξ₁^g1 · ξ₂^g2` of the subgroup `K`; `c` holds exponents of the
/// central generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KElem {
    pub c: [u32; 2],
    pub g1: u32,
    pub g2: u32,
}

impl KElem {
    pub const fn new(c: [u32; 2], g1: u32, g2: u32) -> Self {
        Self { c, g1, g2 }
    }
}

/// Collection data for a group of exponent-3 normal forms
/// `z^c ξ₁^γ₁ ξ₂^γ₂ ξ₃^γ₃`.
#[derive(Clone, Debug)]
pub struct Collector {
    /// Number of central generators in front (0, 1 or 2).
    pub central: usize,
    /// `[ξ₁, ξ₂]` as a central exponent vector.
    pub commutator: [u32; 2],
    /// `ξ₁³` as a central exponent vector.
    pub xi1_cube: [u32; 2],
    /// `ξ₃³` as a central exponent vector.
    pub xi3_cube: [u32; 2],
    /// `conj[j][a-1][b-1] = ξ₃^a ξ_{j+1}^b ξ₃^{-a}`.
    pub conj: [[[KElem; 2]; 2]; 2],
}

const P: u32 = 3;

impl Collector {
    pub fn moduli(&self) -> Vec<u32> {
        vec![P; self.central + 3]
    }

    fn add_c(&self, a: [u32; 2], b: [u32; 2]) -> [u32; 2] {
        [(a[0] + b[0]) % P, (a[1] + b[1]) % P]
    }

    fn k_mul(&self, x: KElem, y: KElem) -> KElem {
        // ξ₂^a ξ₁^b = [ξ₁,ξ₂]^{-ab} ξ₁^b ξ₂^a
        let cross = (x.g2 * y.g1) % P;
        let mut c = self.add_c(x.c, y.c);
        for (slot, &k) in c.iter_mut().zip(&self.commutator) {
            *slot = (*slot + P * P - cross * k) % P;
        }
        let mut g1 = x.g1 + y.g1;
        if g1 >= P {
            g1 -= P;
            c = self.add_c(c, self.xi1_cube);
        }
        KElem {
            c,
            g1,
            g2: (x.g2 + y.g2) % P,
        }
    }

    /// `ξ₃^a ξ_j^b ξ₃^{-a}` for `j ∈ {1, 2}`.
    fn conjugate(&self, a: u32, j: usize, b: u32) -> KElem {
        if b == 0 {
            return KElem::new([0, 0], 0, 0);
        }
        if a == 0 {
            return if j == 1 {
                KElem::new([0, 0], b, 0)
            } else {
                KElem::new([0, 0], 0, b)
            };
        }
        self.conj[j - 1][(a - 1) as usize][(b - 1) as usize]
    }

    fn split(&self, t: &[u32]) -> ([u32; 2], u32, u32, u32) {
        let k = self.central;
        let mut c = [0u32; 2];
        c[..k].copy_from_slice(&t[..k]);
        (c, t[k], t[k + 1], t[k + 2])
    }

    pub fn product(&self, t: &[u32], u: &[u32]) -> Vec<u32> {
        let (c, g1, g2, g3) = self.split(t);
        let (d, h1, h2, h3) = self.split(u);
        let mut acc = KElem::new(c, g1, g2);
        acc = self.k_mul(acc, self.conjugate(g3, 1, h1));
        acc = self.k_mul(acc, self.conjugate(g3, 2, h2));
        acc.c = self.add_c(acc.c, d);
        let mut top = g3 + h3;
        if top >= P {
            top -= P;
            acc.c = self.add_c(acc.c, self.xi3_cube);
        }
        let mut out: Vec<u32> = acc.c[..self.central].to_vec();
        out.extend([acc.g1, acc.g2, top]);
        out
    }
}

/// `(C3×C3)⋊C3` via `x₁, x₂, x₃` with `x₂` central and `[x₁,x₃] = x₂`:
/// the order-81 table below with the central generator dropped.
pub fn g39_collector() -> Collector {
    Collector {
        central: 0,
        commutator: [0, 0],
        xi1_cube: [0, 0],
        xi3_cube: [0, 0],
        conj: [
            [
                [KElem::new([0, 0], 1, 2), KElem::new([0, 0], 2, 1)],
                [KElem::new([0, 0], 1, 1), KElem::new([0, 0], 2, 2)],
            ],
            [
                [KElem::new([0, 0], 0, 1), KElem::new([0, 0], 0, 2)],
                [KElem::new([0, 0], 0, 1), KElem::new([0, 0], 0, 2)],
            ],
        ],
    }
}

/// Order-81 extension, optionally with `ξ₁³ = z^a`, `ξ₃³ = z^b`.
pub fn g81_collector(a: u32, b: u32) -> Collector {
    Collector {
        central: 1,
        commutator: [1, 0],
        xi1_cube: [a % P, 0],
        xi3_cube: [b % P, 0],
        conj: [
            [
                // ξ₃ξ₁ξ₃⁻¹ = z ξ₁ ξ₂²,  ξ₃ξ₁²ξ₃⁻¹ = ξ₁² ξ₂
                [KElem::new([1, 0], 1, 2), KElem::new([0, 0], 2, 1)],
                // ξ₃²ξ₁ξ₃⁻² = z² ξ₁ ξ₂,  ξ₃²ξ₁²ξ₃⁻² = ξ₁² ξ₂²
                [KElem::new([2, 0], 1, 1), KElem::new([0, 0], 2, 2)],
            ],
            [
                [KElem::new([0, 0], 0, 1), KElem::new([0, 0], 0, 2)],
                [KElem::new([0, 0], 0, 1), KElem::new([0, 0], 0, 2)],
            ],
        ],
    }
}

/// Order-243 extension with central `z₁₂, z₂₃`.
pub fn g243_collector() -> Collector {
    Collector {
        central: 2,
        commutator: [1, 0],
        xi1_cube: [0, 0],
        xi3_cube: [0, 0],
        conj: [
            [
                // η₃η₁η₃⁻¹ = z₁₂ η₁ η₂²,  η₃η₁²η₃⁻¹ = η₁² η₂
                [KElem::new([1, 0], 1, 2), KElem::new([0, 0], 2, 1)],
                // η₃²η₁η₃⁻² = z₁₂² z₂₃ η₁ η₂,  η₃²η₁²η₃⁻² = z₂₃² η₁² η₂²
                [KElem::new([2, 1], 1, 1), KElem::new([0, 2], 2, 2)],
            ],
            [
                // η₃η₂η₃⁻¹ = z₂₃² η₂,  η₃η₂²η₃⁻¹ = z₂₃ η₂²
                [KElem::new([0, 2], 0, 1), KElem::new([0, 1], 0, 2)],
                // η₃²η₂η₃⁻² = z₂₃ η₂,  η₃²η₂²η₃⁻² = z₂₃² η₂²
                [KElem::new([0, 1], 0, 1), KElem::new([0, 2], 0, 2)],
            ],
        ],
    }
}
