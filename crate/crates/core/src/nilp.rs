//! Finite test algebras C = (O/π^m)[t_1, …, t_s]/(t_1^{k_1}, …, t_s^{k_s}).
//!
//! Elements are stored on the Z-basis π^j t^α with j < min(e, m); the
//! coordinate of π^j t^α lives in Z/p^{⌈(m−j)/e⌉}.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{Base, KElement, OElement};
use crate::ring::Ring;

pub const MAX_DIM: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct NElem(pub [u32; MAX_DIM]);

/// The shape of a test algebra: π^m = 0 and t_i^{k_i} = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub m: u32,
    #[serde(default)]
    pub t: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct NilpAlgebra {
    base: Arc<Base>,
    pub spec: AlgebraSpec,
    name: String,
    // (π-exponent, t-exponents) per basis element; entry 0 is 1.
    basis: Vec<(u32, Vec<u32>)>,
    moduli: Vec<u64>,
    // table[i][j]: coordinates of basis_i · basis_j as (k, c).
    table: Arc<Vec<Vec<Vec<(u8, u64)>>>>,
    size: u64,
}

impl NilpAlgebra {
    pub fn new(base: &Arc<Base>, spec: AlgebraSpec) -> Result<Self> {
        let (p, e) = (base.p(), base.e() as u32);
        if spec.m == 0 {
            return Err(Error::InvalidAlgebra("m must be at least 1".into()));
        }
        if spec.t.iter().any(|&k| k == 0) {
            return Err(Error::InvalidAlgebra("nilpotency orders t must be at least 1".into()));
        }
        let mut monos: Vec<Vec<u32>> = vec![Vec::new()];
        for &k in &spec.t {
            monos = monos
                .into_iter()
                .flat_map(|m| {
                    (0..k).map(move |a| {
                        let mut m = m.clone();
                        m.push(a);
                        m
                    })
                })
                .collect();
        }
        monos.sort_by_key(|m| (m.iter().sum::<u32>(), m.clone()));
        let mut basis = Vec::new();
        for mono in &monos {
            for j in 0..e.min(spec.m) {
                basis.push((j, mono.clone()));
            }
        }
        basis.sort_by_key(|(j, m)| (m.iter().sum::<u32>() + *j, m.clone(), *j));
        let moduli: Vec<u64> = basis.iter().map(|(j, _)| p.pow((spec.m - j).div_ceil(e))).collect();
        if basis.len() > MAX_DIM {
            return Err(Error::InvalidAlgebra(format!("dimension {} exceeds {MAX_DIM}", basis.len())));
        }
        if moduli.iter().any(|&m| m > 1 << 16) {
            return Err(Error::InvalidAlgebra("coordinate modulus too large".into()));
        }
        let mut size: u128 = 1;
        for &m in &moduli {
            size *= m as u128;
        }
        if size > 1 << 40 {
            return Err(Error::SizeGuard { size, limit: 1 << 40 });
        }
        let index = |j: u32, m: &[u32]| basis.iter().position(|(bj, bm)| *bj == j && bm == m);
        let mut table = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for (a, (ja, ma)) in basis.iter().enumerate() {
            for (b, (jb, mb)) in basis.iter().enumerate() {
                let mono: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                if mono.iter().zip(&spec.t).any(|(x, k)| x >= k) {
                    continue;
                }
                let pw = base.pi_pow(ja + jb);
                let mut entries = Vec::new();
                for (j, c) in pw.0.iter().enumerate() {
                    if let Some(k) = index(j as u32, &mono) {
                        let c = c.mod_floor(&BigInt::from(moduli[k])).to_u64().unwrap();
                        if c != 0 {
                            entries.push((k as u8, c));
                        }
                    }
                }
                table[a][b] = entries;
            }
        }
        let name = spec.name.clone().unwrap_or_else(|| default_name(base, &spec));
        Ok(NilpAlgebra { base: base.clone(), spec, name, basis, moduli, table: Arc::new(table), size: size as u64 })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// m^N = 0 for the maximal ideal m = (π, t).
    pub fn nilpotency_index(&self) -> u32 {
        self.spec.m + self.spec.t.iter().map(|k| k - 1).sum::<u32>()
    }

    /// p^k = 0 in C.
    pub fn p_exponent(&self) -> u32 {
        self.spec.m.div_ceil(self.base.e() as u32)
    }

    pub fn encode(&self, a: &NElem) -> u64 {
        let mut code = 0u64;
        for k in (0..self.dim()).rev() {
            code = code * self.moduli[k] + a.0[k] as u64;
        }
        code
    }

    pub fn decode(&self, mut code: u64) -> NElem {
        let mut out = NElem::default();
        for k in 0..self.dim() {
            out.0[k] = (code % self.moduli[k]) as u32;
            code /= self.moduli[k];
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = NElem> + '_ {
        (0..self.size).map(|c| self.decode(c))
    }

    pub fn is_unit(&self, a: &NElem) -> bool {
        a.0[0] as u64 % self.base.p() != 0
    }

    pub fn is_nilpotent(&self, a: &NElem) -> bool {
        !self.is_unit(a)
    }

    pub fn from_i64(&self, n: i64) -> NElem {
        let mut out = NElem::default();
        out.0[0] = n.rem_euclid(self.moduli[0] as i64) as u32;
        out
    }

    /// t_i as an element.
    pub fn generator(&self, i: usize) -> NElem {
        let mut mono = vec![0; self.spec.t.len()];
        mono[i] = 1;
        let mut out = NElem::default();
        if let Some(k) = self.basis.iter().position(|(j, m)| *j == 0 && *m == mono) {
            out.0[k] = 1;
        }
        out
    }

    /// Image of a p-integral element of K.
    pub fn from_k(&self, a: &KElement) -> Option<NElem> {
        self.base.k_reduce(a, self.p_exponent()).map(|o| self.from_o(&o))
    }

    pub fn inverse(&self, a: &NElem) -> Option<NElem> {
        if !self.is_unit(a) {
            return None;
        }
        // a^{-1} = a^{|C^×| − 1} with |C^×| = |C| − |C|/p.
        let order = self.size - self.size / self.base.p();
        Some(self.pow(a, order - 1))
    }

    pub fn fmt(&self, a: &NElem) -> String {
        let mut parts = Vec::new();
        for (k, (j, mono)) in self.basis.iter().enumerate() {
            let c = a.0[k];
            if c == 0 {
                continue;
            }
            let mut factors = Vec::new();
            match j {
                0 => {}
                1 => factors.push("pi".to_string()),
                _ => factors.push(format!("pi^{j}")),
            }
            for (i, &ex) in mono.iter().enumerate() {
                let t = if self.spec.t.len() == 1 { "t".to_string() } else { format!("t{}", i + 1) };
                match ex {
                    0 => {}
                    1 => factors.push(t),
                    _ => factors.push(format!("{t}^{ex}")),
                }
            }
            parts.push(match (c, factors.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => factors.join("*"),
                _ => format!("{c}*{}", factors.join("*")),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn default_name(base: &Base, spec: &AlgebraSpec) -> String {
    let p = base.p();
    let coeff = if base.e() == 1 {
        match spec.m {
            1 => format!("F_{p}"),
            m => format!("Z/{}", p.pow(m)),
        }
    } else if spec.m == 1 {
        format!("F_{p}")
    } else {
        format!("O/pi^{}", spec.m)
    };
    if spec.t.is_empty() {
        return coeff;
    }
    let coeff = if coeff.contains('/') { format!("({coeff})") } else { coeff };
    if spec.t.len() == 1 {
        format!("{coeff}[t]/(t^{})", spec.t[0])
    } else {
        let vars: Vec<String> = (1..=spec.t.len()).map(|i| format!("t{i}")).collect();
        let rels: Vec<String> = spec.t.iter().enumerate().map(|(i, k)| format!("t{}^{k}", i + 1)).collect();
        format!("{coeff}[{}]/({})", vars.join(","), rels.join(","))
    }
}

impl Ring for NilpAlgebra {
    type Elem = NElem;

    fn base(&self) -> &Arc<Base> {
        &self.base
    }
    fn zero(&self) -> NElem {
        NElem::default()
    }
    fn one(&self) -> NElem {
        self.from_i64(1)
    }
    fn add(&self, a: &NElem, b: &NElem) -> NElem {
        let mut out = NElem::default();
        for k in 0..self.dim() {
            out.0[k] = ((a.0[k] as u64 + b.0[k] as u64) % self.moduli[k]) as u32;
        }
        out
    }
    fn neg(&self, a: &NElem) -> NElem {
        let mut out = NElem::default();
        for k in 0..self.dim() {
            out.0[k] = ((self.moduli[k] - a.0[k] as u64) % self.moduli[k]) as u32;
        }
        out
    }
    fn mul(&self, a: &NElem, b: &NElem) -> NElem {
        let d = self.dim();
        let mut acc = [0u64; MAX_DIM];
        for i in 0..d {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..d {
                if b.0[j] == 0 {
                    continue;
                }
                // Coordinates and table entries are below 2^16, so at most
                // MAX_DIM^2 products of size < 2^48 fit in the accumulator.
                let prod = a.0[i] as u64 * b.0[j] as u64;
                for &(k, c) in &self.table[i][j] {
                    acc[k as usize] += prod * c;
                }
            }
        }
        let mut out = NElem::default();
        for k in 0..d {
            out.0[k] = (acc[k] % self.moduli[k]) as u32;
        }
        out
    }
    fn mul_add_assign(&self, acc: &mut NElem, a: &NElem, b: &NElem) {
        let t = self.mul(a, b);
        for k in 0..self.dim() {
            acc.0[k] = ((acc.0[k] as u64 + t.0[k] as u64) % self.moduli[k]) as u32;
        }
    }
    fn is_zero(&self, a: &NElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
    fn from_o(&self, c: &OElement) -> NElem {
        let mut out = NElem::default();
        for (j, x) in c.0.iter().enumerate() {
            if let Some(k) = self.basis.iter().position(|(bj, m)| *bj == j as u32 && m.iter().all(|&a| a == 0)) {
                out.0[k] = x.mod_floor(&BigInt::from(self.moduli[k])).to_u64().unwrap() as u32;
            }
        }
        out
    }
}

/// The default catalog: Z/p^2, Z/p^3, F_p[t]/(t^3) and (Z/p^2)[t]/(t^2),
/// read as O/π^m in place of Z/p^m on ramified bases.
pub fn default_catalog() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec { name: None, m: 2, t: vec![] },
        AlgebraSpec { name: None, m: 3, t: vec![] },
        AlgebraSpec { name: None, m: 1, t: vec![3] },
        AlgebraSpec { name: None, m: 2, t: vec![2] },
    ]
}

pub fn catalog(base: &Arc<Base>, specs: &[AlgebraSpec]) -> Result<Vec<NilpAlgebra>> {
    specs.iter().map(|s| NilpAlgebra::new(base, s.clone())).collect()
}

/// O/π^m, which is Z/p^m when e = 1.
pub fn zp(m: u32) -> AlgebraSpec {
    AlgebraSpec { name: None, m, t: vec![] }
}

/// (O/π^m)[t]/(t^k).
pub fn truncated(m: u32, k: u32) -> AlgebraSpec {
    AlgebraSpec { name: None, m, t: vec![k] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::make_base;

    #[test]
    fn names_and_sizes() {
        let b = make_base(3, 1, &[1, -3]).unwrap();
        let c: Vec<NilpAlgebra> = catalog(&b, &default_catalog()).unwrap();
        let names: Vec<&str> = c.iter().map(|a| a.name()).collect();
        assert_eq!(names, ["Z/9", "Z/27", "F_3[t]/(t^3)", "(Z/9)[t]/(t^2)"]);
        let sizes: Vec<u64> = c.iter().map(|a| a.size()).collect();
        assert_eq!(sizes, [9, 27, 27, 81]);
    }

    #[test]
    fn ramified_quotient() {
        // O = Z[√3]: O/π^3 has basis 1, π with moduli 9, 3.
        let b = make_base(3, 2, &[1, 0, -3]).unwrap();
        let c = NilpAlgebra::new(&b, zp(3)).unwrap();
        assert_eq!(c.moduli(), &[9, 3]);
        let pi = c.from_o(&b.pi());
        assert!(!c.is_zero(&c.mul(&pi, &pi)));
        assert!(c.is_zero(&c.pow(&pi, 3)));
    }
}
