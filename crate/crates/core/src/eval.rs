//! Evaluation plans: polynomials over O compiled against a target ring.
//!
//! Coefficients are mapped into the target once and coefficients that vanish
//! there are dropped. The inputs carrying the largest exponents index a
//! Horner trie; the remaining inputs are folded into a table of the distinct
//! monomials they form, computed once per call, so most terms cost a single
//! multiply-add.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::poly::{OPoly, Var};
use crate::ring::Ring;

/// Where a polynomial variable is read from.
pub enum Slot<E> {
    Input(usize),
    Const(E),
}

type Key = SmallVec<[(u16, u32); 6]>;

// Terms at a node: (tail monomial id, coefficient); id 0 is the empty monomial.
struct Node<E> {
    leaf: Vec<(u32, E)>,
    // (input slot, index into that slot's power table, subtree)
    kids: Vec<(u16, u16, Node<E>)>,
}

pub struct Compiled<S: Ring> {
    outputs: Vec<Option<Node<S::Elem>>>,
    // Sorted exponents needed for each input slot.
    needed: Vec<Vec<u32>>,
    // Tail monomials as (prefix tail id, slot, power index); entry 0 is the
    // empty monomial and every prefix precedes its extensions.
    tails: Vec<(u32, u16, u16)>,
    terms: usize,
}

fn build<E: Clone>(terms: &mut [(Key, u32, E)], depth: usize, needed: &[Vec<u32>]) -> Node<E> {
    let mut node = Node { leaf: Vec::new(), kids: Vec::new() };
    let mut i = 0;
    while i < terms.len() && terms[i].0.len() == depth {
        node.leaf.push((terms[i].1, terms[i].2.clone()));
        i += 1;
    }
    while i < terms.len() {
        let (s, e) = terms[i].0[depth];
        let mut j = i + 1;
        while j < terms.len() && terms[j].0[depth] == (s, e) {
            j += 1;
        }
        let pos = needed[s as usize].binary_search(&e).unwrap() as u16;
        node.kids.push((s, pos, build(&mut terms[i..j], depth + 1, needed)));
        i = j;
    }
    node
}

impl<S: Ring> Compiled<S> {
    pub fn new(polys: &[&OPoly], target: &S, slots: usize, slot_of: impl Fn(Var) -> Slot<S::Elem>) -> Self {
        let mut needed: Vec<Vec<u32>> = vec![Vec::new(); slots];
        let mut raw: Vec<FxHashMap<Key, S::Elem>> = Vec::new();
        for p in polys {
            let mut merged: FxHashMap<Key, S::Elem> = FxHashMap::default();
            for (m, c) in &p.terms {
                let mut coeff = target.from_o(c);
                let mut fs: Key = SmallVec::new();
                for &(v, e) in &m.0 {
                    match slot_of(v) {
                        Slot::Input(s) => fs.push((s as u16, e)),
                        Slot::Const(x) => coeff = target.mul(&coeff, &target.pow(&x, e as u64)),
                    }
                }
                if target.is_zero(&coeff) {
                    continue;
                }
                fs.sort_unstable();
                match merged.entry(fs) {
                    std::collections::hash_map::Entry::Occupied(mut o) => target.add_assign(o.get_mut(), &coeff),
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(coeff);
                    }
                }
            }
            merged.retain(|_, c| !target.is_zero(c));
            for fs in merged.keys() {
                for &(s, e) in fs {
                    needed[s as usize].push(e);
                }
            }
            raw.push(merged);
        }
        for n in needed.iter_mut() {
            n.sort_unstable();
            n.dedup();
        }
        // Inputs reaching the largest exponent form the trie; the rest go to the tail.
        let top_exp = needed.iter().filter_map(|n| n.last().copied()).max().unwrap_or(0);
        let in_trie: Vec<bool> = needed.iter().map(|n| top_exp > 1 && n.last() == Some(&top_exp)).collect();
        let mut tails: Vec<(u32, u16, u16)> = vec![(0, 0, 0)];
        let mut tail_ids: FxHashMap<SmallVec<[(u16, u16); 6]>, u32> = FxHashMap::default();
        tail_ids.insert(SmallVec::new(), 0);
        fn intern(
            t: &[(u16, u16)],
            ids: &mut FxHashMap<SmallVec<[(u16, u16); 6]>, u32>,
            tails: &mut Vec<(u32, u16, u16)>,
        ) -> u32 {
            if let Some(&id) = ids.get(t) {
                return id;
            }
            let prefix = intern(&t[..t.len() - 1], ids, tails);
            let (s, k) = t[t.len() - 1];
            tails.push((prefix, s, k));
            let id = tails.len() as u32 - 1;
            ids.insert(t.into(), id);
            id
        }
        let mut terms = 0;
        let outputs = raw
            .into_iter()
            .map(|merged| {
                terms += merged.len();
                let mut ts: Vec<(Key, u32, S::Elem)> = merged
                    .into_iter()
                    .map(|(fs, c)| {
                        let head: Key = fs.iter().copied().filter(|&(s, _)| in_trie[s as usize]).collect();
                        let tail: SmallVec<[(u16, u16); 6]> = fs
                            .iter()
                            .filter(|&&(s, _)| !in_trie[s as usize])
                            .map(|&(s, e)| (s, needed[s as usize].binary_search(&e).unwrap() as u16))
                            .collect();
                        (head, intern(&tail, &mut tail_ids, &mut tails), c)
                    })
                    .collect();
                ts.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
                if ts.is_empty() {
                    None
                } else {
                    Some(build(&mut ts, 0, &needed))
                }
            })
            .collect();
        Compiled { outputs, needed, tails, terms }
    }

    pub fn tail_count(&self) -> usize {
        self.tails.len()
    }

    pub fn term_count(&self) -> usize {
        self.terms
    }

    fn eval_node(target: &S, node: &Node<S::Elem>, powers: &[Vec<S::Elem>], tails: &[S::Elem]) -> S::Elem {
        let mut acc = target.zero();
        for (id, c) in &node.leaf {
            if *id == 0 {
                target.add_assign(&mut acc, c);
            } else {
                target.mul_add_lazy(&mut acc, c, &tails[*id as usize]);
            }
        }
        for (s, k, kid) in &node.kids {
            let inner = Self::eval_node(target, kid, powers, tails);
            target.mul_add_lazy(&mut acc, &powers[*s as usize][*k as usize], &inner);
        }
        target.settle(&mut acc);
        acc
    }

    pub fn eval(&self, target: &S, inputs: &[S::Elem]) -> Vec<S::Elem> {
        let mut powers: Vec<Vec<S::Elem>> = Vec::with_capacity(self.needed.len());
        for (s, es) in self.needed.iter().enumerate() {
            let mut ps: Vec<S::Elem> = Vec::with_capacity(es.len());
            let mut cur_e = 0u32;
            for &e in es {
                let step = target.pow(&inputs[s], (e - cur_e) as u64);
                let next = match ps.last() {
                    None => step,
                    Some(c) => target.mul(c, &step),
                };
                ps.push(next);
                cur_e = e;
            }
            powers.push(ps);
        }
        let mut tails: Vec<S::Elem> = Vec::with_capacity(self.tails.len());
        tails.push(target.one());
        for &(prefix, s, k) in &self.tails[1..] {
            let pw = &powers[s as usize][k as usize];
            let t = if prefix == 0 { pw.clone() } else { target.mul(&tails[prefix as usize], pw) };
            tails.push(t);
        }
        self.outputs
            .iter()
            .map(|o| match o {
                Some(node) => Self::eval_node(target, node, &powers, &tails),
                None => target.zero(),
            })
            .collect()
    }
}
