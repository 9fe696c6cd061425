//! Finite abelian groups given by an enumerated carrier of u64 codes and an
//! operation closure, with p-power orders and invariant factors.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Op = Arc<dyn Fn(u64, u64) -> u64>;
pub type Unary = Arc<dyn Fn(u64) -> u64>;

/// Marks an element whose order is not a power of p.
pub const NOT_P_POWER: u32 = u32::MAX;

#[derive(Clone)]
pub struct FiniteGroup {
    pub name: String,
    pub p: u64,
    elems: Vec<u64>,
    index: FxHashMap<u64, u32>,
    pub identity: u64,
    op: Op,
    pow_p: Unary,
    orders: OnceLock<Arc<Vec<u32>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.elems.len())
    }
}

/// Invariant factors p^{λ_1} ≥ p^{λ_2} ≥ ⋯ of a finite abelian p-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub p: u64,
    pub exponents: Vec<u32>,
}

impl AbelianInvariants {
    pub fn factors(&self) -> Vec<u64> {
        self.exponents.iter().map(|&l| self.p.pow(l)).collect()
    }

    pub fn order(&self) -> u128 {
        self.exponents.iter().map(|&l| (self.p as u128).pow(l)).product()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.factors().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", fs.join(", "))
    }
}

impl FiniteGroup {
    /// `pow_p` defaults to p-fold iteration of `op`.
    pub fn new(name: impl Into<String>, p: u64, elems: Vec<u64>, identity: u64, op: Op, pow_p: Option<Unary>) -> Self {
        let index = elems.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let pow_p = pow_p.unwrap_or_else(|| {
            let op = op.clone();
            Arc::new(move |a| {
                let mut acc = a;
                for _ in 1..p {
                    acc = op(acc, a);
                }
                acc
            })
        });
        FiniteGroup { name: name.into(), p, elems, index, identity, op, pow_p, orders: OnceLock::new() }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn contains(&self, a: u64) -> bool {
        self.index.contains_key(&a)
    }

    pub fn op(&self, a: u64, b: u64) -> u64 {
        (self.op)(a, b)
    }

    pub fn op_fn(&self) -> Op {
        self.op.clone()
    }

    pub fn pow_p(&self, a: u64) -> u64 {
        (self.pow_p)(a)
    }

    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        let mut acc = self.identity;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.op(acc, b);
            }
            k >>= 1;
            if k > 0 {
                b = self.op(b, b);
            }
        }
        acc
    }

    /// The elements satisfying `keep`, with the same operation.
    pub fn subgroup(&self, name: impl Into<String>, keep: impl Fn(u64) -> bool) -> FiniteGroup {
        let elems: Vec<u64> = self.elems.iter().copied().filter(|&c| keep(c)).collect();
        FiniteGroup::new(name, self.p, elems, self.identity, self.op.clone(), Some(self.pow_p.clone()))
    }

    /// Per element: k with order p^k, or NOT_P_POWER.
    pub fn p_exponents(&self) -> Arc<Vec<u32>> {
        self.orders
            .get_or_init(|| {
                let n = self.elems.len();
                let id = self.index.get(&self.identity).copied();
                let next: Vec<Option<u32>> = self.elems.iter().map(|&c| self.index.get(&self.pow_p(c)).copied()).collect();
                let mut bound = 0u32;
                let mut size = 1u128;
                while size < n as u128 {
                    size *= self.p as u128;
                    bound += 1;
                }
                let out = (0..n)
                    .map(|i| {
                        let mut cur = Some(i as u32);
                        for k in 0..=bound {
                            match cur {
                                Some(c) if Some(c) == id => return k,
                                Some(c) => cur = next[c as usize],
                                None => return NOT_P_POWER,
                            }
                        }
                        NOT_P_POWER
                    })
                    .collect();
                Arc::new(out)
            })
            .clone()
    }

    /// Order p^k of one element, or None.
    pub fn p_exponent_of(&self, a: u64) -> Option<u32> {
        let i = *self.index.get(&a)? as usize;
        let e = self.p_exponents()[i];
        (e != NOT_P_POWER).then_some(e)
    }

    /// G[p^∞].
    pub fn p_power_torsion(&self) -> FiniteGroup {
        let ex = self.p_exponents();
        let keep: rustc_hash::FxHashSet<u64> =
            self.elems.iter().zip(ex.iter()).filter(|(_, &e)| e != NOT_P_POWER).map(|(&c, _)| c).collect();
        self.subgroup(format!("{}[p^inf]", self.name), |c| keep.contains(&c))
    }

    /// G[p^ν].
    pub fn p_torsion(&self, nu: u32) -> FiniteGroup {
        let ex = self.p_exponents();
        let keep: rustc_hash::FxHashSet<u64> =
            self.elems.iter().zip(ex.iter()).filter(|(_, &e)| e <= nu).map(|(&c, _)| c).collect();
        self.subgroup(format!("{}[p^{nu}]", self.name), |c| keep.contains(&c))
    }

    pub fn is_p_group(&self) -> bool {
        self.p_exponents().iter().all(|&e| e != NOT_P_POWER)
    }

    /// Exhaustive below 100 elements, otherwise `samples` seeded random pairs.
    pub fn check_abelian(&self, samples: usize, seed: u64) -> Result<()> {
        let bad = |a: u64, b: u64| Error::NonAbelian(format!("{}: {a}·{b} ≠ {b}·{a}", self.name));
        for (a, b) in self.pairs(samples, seed) {
            if self.op(a, b) != self.op(b, a) {
                return Err(bad(a, b));
            }
        }
        Ok(())
    }

    /// Associativity on seeded random triples; the offending triple on failure.
    pub fn check_associative(&self, samples: usize, seed: u64) -> std::result::Result<(), (u64, u64, u64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.elems.len();
        for _ in 0..samples {
            let (a, b, c) = (self.elems[rng.gen_range(0..n)], self.elems[rng.gen_range(0..n)], self.elems[rng.gen_range(0..n)]);
            if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                return Err((a, b, c));
            }
        }
        Ok(())
    }

    /// All pairs when that is at most `samples`, otherwise seeded random pairs.
    pub fn pairs(&self, samples: usize, seed: u64) -> Vec<(u64, u64)> {
        let n = self.elems.len();
        if n * n <= samples.max(1) {
            return self.elems.iter().flat_map(|&a| self.elems.iter().map(move |&b| (a, b))).collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| (self.elems[rng.gen_range(0..n)], self.elems[rng.gen_range(0..n)])).collect()
    }

    /// Invariant factors from N_k = #{g : p^k g = 0}, using
    /// log_p N_k = Σ_i min(k, λ_i).
    pub fn invariants(&self) -> Result<AbelianInvariants> {
        self.check_abelian(256, 0x5eed)?;
        let ex = self.p_exponents();
        if let Some(i) = ex.iter().position(|&e| e == NOT_P_POWER) {
            return Err(Error::NotPGroup(format!("{}: element {} has order prime to or beyond p-powers", self.name, self.elems[i])));
        }
        let top = ex.iter().copied().max().unwrap_or(0);
        let mut logs = Vec::with_capacity(top as usize + 1);
        for k in 0..=top {
            let count = ex.iter().filter(|&&e| e <= k).count() as u128;
            let mut l = 0u32;
            let mut pw = 1u128;
            while pw < count {
                pw *= self.p as u128;
                l += 1;
            }
            if pw != count {
                return Err(Error::NotPGroup(format!("{}: |G[p^{k}]| = {count} is not a power of p", self.name)));
            }
            logs.push(l);
        }
        // r_k = #{i : λ_i ≥ k} = log N_k − log N_{k−1}.
        let r: Vec<u32> = (1..=top as usize).map(|k| logs[k] - logs[k - 1]).collect();
        let mut exponents = Vec::new();
        for k in (1..=top as usize).rev() {
            let above = if k < r.len() { r[k] } else { 0 };
            for _ in 0..(r[k - 1] - above) {
                exponents.push(k as u32);
            }
        }
        Ok(AbelianInvariants { p: self.p, exponents })
    }
}

/// Z/p^a_1 × ⋯ as a FiniteGroup, for tests and comparisons.
pub fn cyclic_product(p: u64, exps: &[u32]) -> FiniteGroup {
    let mods: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
    let size: u64 = mods.iter().product();
    let m2 = mods.clone();
    let op: Op = Arc::new(move |a, b| {
        let (mut a, mut b, mut out, mut scale) = (a, b, 0u64, 1u64);
        for &m in &m2 {
            out += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        out
    });
    FiniteGroup::new(format!("{mods:?}"), p, (0..size).collect(), 0, op, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_of_products() {
        for exps in [vec![2], vec![2, 1], vec![1, 1, 1], vec![3, 1, 1]] {
            let g = cyclic_product(3, &exps);
            assert_eq!(g.invariants().unwrap().exponents, exps);
        }
    }

    #[test]
    fn torsion_of_units_mod_nine() {
        let units: Vec<u64> = (1..9).filter(|x| x % 3 != 0).collect();
        let g = FiniteGroup::new("(Z/9)^x", 3, units, 1, Arc::new(|a, b| a * b % 9), None);
        let t = g.p_power_torsion();
        assert_eq!(t.elements(), &[1, 4, 7]);
        assert!(g.invariants().is_err());
        assert_eq!(t.invariants().unwrap().factors(), vec![3]);
    }
}
