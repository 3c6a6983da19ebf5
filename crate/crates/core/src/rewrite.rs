//! Normalization of dendriform monomials.
//!
//! Arbitrary monomials in the two dendriform operations are rewritten
//! into linear combinations of normal DD-monomials by the four directed
//! rules (with x, y, z, v arbitrary subtrees):
//!
//! ```text
//! (x>y)<z       ->  x>(y<z)
//! (x<y)<z       ->  x<(y<z) + x<(y>z)
//! (x<y)>z       ->  x>(y>z) - (x>y)>z
//! ((x>y)>z)>v   ->  (x>y)>(z>v) - (x>(y<z))>v
//! ```
//!
//! The rules are terminating and confluent on the dendriform ideal, so
//! the normal form does not depend on the application order; the
//! production path below uses innermost (bottom-up) reduction with a
//! memo table, and a strategy-driven single-step engine is provided so
//! tests can compare reduction orders.

use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::freealg::{DdOp, DdTree};
use crate::modlinalg::Gf;

/// Finite linear combination of monomials with coefficients in GF(p).
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<M: std::hash::Hash + Eq> {
    terms: FxHashMap<M, u8>,
}

impl<M: std::hash::Hash + Eq + Clone> Default for LinComb<M> {
    fn default() -> Self {
        LinComb::zero()
    }
}

impl<M: std::hash::Hash + Eq + Clone> LinComb<M> {
    pub fn zero() -> LinComb<M> {
        LinComb {
            terms: FxHashMap::default(),
        }
    }

    pub fn from_term(m: M, c: u8) -> LinComb<M> {
        let mut terms = FxHashMap::default();
        if c != 0 {
            terms.insert(m, c);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> u8 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &u8)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, u8)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, m: M, c: u8, gf: Gf) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let v = gf.add(*o.get(), c);
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<M>, c: u8, gf: Gf) {
        if c == 0 {
            return;
        }
        for (m, &a) in other.iter() {
            self.add_term(m.clone(), gf.mul(a, c), gf);
        }
    }

    pub fn scale(&self, c: u8, gf: Gf) -> LinComb<M> {
        let mut out = LinComb::zero();
        out.add_scaled(self, c, gf);
        out
    }

    pub fn sub(&self, other: &LinComb<M>, gf: Gf) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(other, gf.neg(1), gf);
        out
    }

    /// Apply a monomial transformation, collecting coefficients.
    pub fn map_monomials<N: std::hash::Hash + Eq + Clone>(
        &self,
        gf: Gf,
        mut f: impl FnMut(&M) -> N,
    ) -> LinComb<N> {
        let mut out = LinComb::zero();
        for (m, &c) in self.iter() {
            out.add_term(f(m), c, gf);
        }
        out
    }
}

/// True when the monomial lies in the normal-form grammar:
/// a variable, x<v, x>v, or (x>u1)>u2 with x a variable and v, u1, u2
/// normal.
pub fn is_normal_dd(m: &DdTree) -> bool {
    match m {
        DdTree::Var(_) => true,
        DdTree::App(DdOp::Left, l, r) => matches!(**l, DdTree::Var(_)) && is_normal_dd(r),
        DdTree::App(DdOp::Right, l, r) => match &**l {
            DdTree::Var(_) => is_normal_dd(r),
            DdTree::App(DdOp::Right, x, u1) => {
                matches!(**x, DdTree::Var(_)) && is_normal_dd(u1) && is_normal_dd(r)
            }
            _ => false,
        },
    }
}

/// Hard cap on rule applications per top-level monomial; the rewrite
/// system terminates, so hitting the cap means a bug and fails loudly.
const STEP_LIMIT: u64 = 1_000_000;

/// Memoizing normalizer. Results are shared per distinct subtree, so
/// repeated expansions of the same operation placements are cheap.
pub struct Normalizer {
    gf: Gf,
    memo: FxHashMap<DdTree, Rc<LinComb<DdTree>>>,
    steps: u64,
}

impl Normalizer {
    pub fn new(gf: Gf) -> Normalizer {
        Normalizer {
            gf,
            memo: FxHashMap::default(),
            steps: 0,
        }
    }

    pub fn gf(&self) -> Gf {
        self.gf
    }

    /// Normal form of a monomial as a combination of normal DD-monomials.
    pub fn normalize(&mut self, m: &DdTree) -> LinComb<DdTree> {
        self.steps = 0;
        (*self.normalize_rc(m)).clone()
    }

    /// Termwise normalization of a combination.
    pub fn normalize_lincomb(&mut self, c: &LinComb<DdTree>) -> LinComb<DdTree> {
        let gf = self.gf;
        let mut out = LinComb::zero();
        for (m, &coeff) in c.iter() {
            self.steps = 0;
            let n = self.normalize_rc(m);
            out.add_scaled(&n, coeff, gf);
        }
        out
    }

    fn normalize_rc(&mut self, m: &DdTree) -> Rc<LinComb<DdTree>> {
        if let Some(r) = self.memo.get(m) {
            return Rc::clone(r);
        }
        let result = Rc::new(self.normalize_uncached(m));
        self.memo.insert(m.clone(), Rc::clone(&result));
        result
    }

    fn normalize_uncached(&mut self, m: &DdTree) -> LinComb<DdTree> {
        match m {
            DdTree::Var(_) => LinComb::from_term(m.clone(), 1),
            DdTree::App(op, l, r) => {
                let ln = self.normalize_rc(l);
                let rn = self.normalize_rc(r);
                let gf = self.gf;
                let mut out = LinComb::zero();
                for (lm, &lc) in ln.clone().iter() {
                    for (rm, &rc) in rn.iter() {
                        let pair = self.combine_normal(*op, lm, rm);
                        out.add_scaled(&pair, gf.mul(lc, rc), gf);
                    }
                }
                out
            }
        }
    }

    /// Normal form of a o b where a and b are already normal monomials.
    fn combine_normal(&mut self, op: DdOp, a: &DdTree, b: &DdTree) -> LinComb<DdTree> {
        self.steps += 1;
        assert!(
            self.steps < STEP_LIMIT,
            "rewrite step limit exceeded: non-terminating reduction"
        );
        let gf = self.gf;
        let one = 1u8;
        let minus = gf.neg(1);
        match (op, a) {
            // x < b and x > b are normal outright
            (_, DdTree::Var(_)) => LinComb::from_term(
                DdTree::App(op, Box::new(a.clone()), Box::new(b.clone())),
                one,
            ),
            (DdOp::Left, DdTree::App(DdOp::Right, x, v)) => {
                // (x>v) < b -> x > (v<b); covers the left-combed case too
                let inner = self.combine_normal(DdOp::Left, v, b);
                self.prepend(DdOp::Right, x, &inner)
            }
            (DdOp::Left, DdTree::App(DdOp::Left, x, v)) => {
                // (x<v) < b -> x<(v<b) + x<(v>b)
                let lo = self.combine_normal(DdOp::Left, v, b);
                let hi = self.combine_normal(DdOp::Right, v, b);
                let mut out = self.prepend(DdOp::Left, x, &lo);
                let second = self.prepend(DdOp::Left, x, &hi);
                out.add_scaled(&second, one, gf);
                out
            }
            (DdOp::Right, DdTree::App(DdOp::Left, x, v)) => {
                // (x<v) > b -> x>(v>b) - (x>v)>b
                let inner = self.combine_normal(DdOp::Right, v, b);
                let mut out = self.prepend(DdOp::Right, x, &inner);
                let head = DdTree::App(DdOp::Right, x.clone(), v.clone());
                out.add_term(
                    DdTree::App(DdOp::Right, Box::new(head), Box::new(b.clone())),
                    minus,
                    gf,
                );
                out
            }
            (DdOp::Right, DdTree::App(DdOp::Right, x, v)) => match &**x {
                DdTree::Var(_) => {
                    // ((x>v)) > b is normal when x is a variable
                    LinComb::from_term(
                        DdTree::App(DdOp::Right, Box::new(a.clone()), Box::new(b.clone())),
                        one,
                    )
                }
                DdTree::App(DdOp::Right, y, u1) => {
                    // ((y>u1)>v) > b -> (y>u1)>(v>b) - (y>(u1<v))>b
                    let tail = self.combine_normal(DdOp::Right, v, b);
                    let head = DdTree::App(DdOp::Right, y.clone(), u1.clone());
                    let mut out = self.prepend(DdOp::Right, &head, &tail);
                    let mid = self.combine_normal(DdOp::Left, u1, v);
                    let shifted = self.prepend(DdOp::Right, y, &mid);
                    for (m2, &c2) in shifted.clone().iter() {
                        let t = self.combine_normal(DdOp::Right, m2, b);
                        out.add_scaled(&t, gf.mul(c2, minus), gf);
                    }
                    out
                }
                DdTree::App(DdOp::Left, ..) => {
                    // inner (x<..)>v would itself be reducible; cannot
                    // occur since a is normal
                    unreachable!("left factor of a normal right comb must be a variable")
                }
            },
        }
    }

    /// head op m for every monomial m of `c`; each attachment must
    /// already be normal.
    fn prepend(&mut self, op: DdOp, head: &DdTree, c: &LinComb<DdTree>) -> LinComb<DdTree> {
        let gf = self.gf;
        let mut out = LinComb::zero();
        for (m, &coeff) in c.iter() {
            out.add_term(
                DdTree::App(op, Box::new(head.clone()), Box::new(m.clone())),
                coeff,
                gf,
            );
        }
        out
    }
}

/// Redex selection order for the single-step engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    LeftmostInnermost,
    LeftmostOutermost,
}

/// One rewrite of the redex at the root, if the root matches a rule.
fn root_rewrite(m: &DdTree, gf: Gf) -> Option<LinComb<DdTree>> {
    let DdTree::App(op, l, r) = m else {
        return None;
    };
    let minus = gf.neg(1);
    match (op, &**l) {
        (DdOp::Left, DdTree::App(DdOp::Right, x, y)) => {
            // (x>y)<z -> x>(y<z)
            let inner = DdTree::App(DdOp::Left, y.clone(), r.clone());
            Some(LinComb::from_term(
                DdTree::App(DdOp::Right, x.clone(), Box::new(inner)),
                1,
            ))
        }
        (DdOp::Left, DdTree::App(DdOp::Left, x, y)) => {
            // (x<y)<z -> x<(y<z) + x<(y>z)
            let mut out = LinComb::zero();
            for inner_op in [DdOp::Left, DdOp::Right] {
                let inner = DdTree::App(inner_op, y.clone(), r.clone());
                out.add_term(DdTree::App(DdOp::Left, x.clone(), Box::new(inner)), 1, gf);
            }
            Some(out)
        }
        (DdOp::Right, DdTree::App(DdOp::Left, x, y)) => {
            // (x<y)>z -> x>(y>z) - (x>y)>z
            let mut out = LinComb::zero();
            let inner = DdTree::App(DdOp::Right, y.clone(), r.clone());
            out.add_term(DdTree::App(DdOp::Right, x.clone(), Box::new(inner)), 1, gf);
            let head = DdTree::App(DdOp::Right, x.clone(), y.clone());
            out.add_term(
                DdTree::App(DdOp::Right, Box::new(head), r.clone()),
                minus,
                gf,
            );
            Some(out)
        }
        (DdOp::Right, DdTree::App(DdOp::Right, xy, z)) => {
            let DdTree::App(DdOp::Right, x, y) = &**xy else {
                return None;
            };
            // ((x>y)>z)>v -> (x>y)>(z>v) - (x>(y<z))>v
            let mut out = LinComb::zero();
            let tail = DdTree::App(DdOp::Right, z.clone(), r.clone());
            out.add_term(DdTree::App(DdOp::Right, xy.clone(), Box::new(tail)), 1, gf);
            let mid = DdTree::App(DdOp::Left, y.clone(), z.clone());
            let head = DdTree::App(DdOp::Right, x.clone(), Box::new(mid));
            out.add_term(
                DdTree::App(DdOp::Right, Box::new(head), r.clone()),
                minus,
                gf,
            );
            Some(out)
        }
        _ => None,
    }
}

/// Rewrite the selected redex (per strategy) once; None when normal.
fn step(m: &DdTree, strategy: Strategy, gf: Gf) -> Option<LinComb<DdTree>> {
    match strategy {
        Strategy::LeftmostOutermost => {
            if let Some(res) = root_rewrite(m, gf) {
                return Some(res);
            }
            step_children(m, strategy, gf)
        }
        Strategy::LeftmostInnermost => {
            if let Some(res) = step_children(m, strategy, gf) {
                return Some(res);
            }
            root_rewrite(m, gf)
        }
    }
}

fn step_children(m: &DdTree, strategy: Strategy, gf: Gf) -> Option<LinComb<DdTree>> {
    let DdTree::App(op, l, r) = m else {
        return None;
    };
    if let Some(ln) = step(l, strategy, gf) {
        let mut out = LinComb::zero();
        for (lm, &c) in ln.iter() {
            out.add_term(DdTree::App(*op, Box::new(lm.clone()), r.clone()), c, gf);
        }
        return Some(out);
    }
    if let Some(rn) = step(r, strategy, gf) {
        let mut out = LinComb::zero();
        for (rm, &c) in rn.iter() {
            out.add_term(DdTree::App(*op, l.clone(), Box::new(rm.clone())), c, gf);
        }
        return Some(out);
    }
    None
}

/// Normalize by repeated single steps under the given strategy. Slow;
/// exists to check that the normal form is strategy independent.
pub fn normalize_with_strategy(m: &DdTree, strategy: Strategy, gf: Gf) -> LinComb<DdTree> {
    let mut pending: Vec<(DdTree, u8)> = vec![(m.clone(), 1)];
    let mut done: LinComb<DdTree> = LinComb::zero();
    let mut steps = 0u64;
    while let Some((t, c)) = pending.pop() {
        steps += 1;
        assert!(steps < STEP_LIMIT, "rewrite step limit exceeded");
        match step(&t, strategy, gf) {
            None => done.add_term(t, c, gf),
            Some(res) => {
                for (t2, &c2) in res.iter() {
                    pending.push((t2.clone(), gf.mul(c, c2)));
                }
            }
        }
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{dd_basis, parse_tt_term, render_dd};

    fn gf() -> Gf {
        Gf::new(101, 7).unwrap()
    }

    fn v(k: u8) -> DdTree {
        DdTree::var(k)
    }

    fn l(a: DdTree, b: DdTree) -> DdTree {
        DdTree::app(DdOp::Left, a, b)
    }

    fn r(a: DdTree, b: DdTree) -> DdTree {
        DdTree::app(DdOp::Right, a, b)
    }

    #[test]
    fn normal_form_grammar() {
        assert!(is_normal_dd(&r(v(1), l(v(2), v(3))))); // a>(b<c)
        assert!(!is_normal_dd(&l(l(v(1), v(2)), v(3)))); // (a<b)<c
        assert!(is_normal_dd(&r(r(v(1), v(2)), v(3)))); // (a>b)>c
        assert!(!is_normal_dd(&l(r(v(1), v(2)), v(3)))); // (a>b)<c
        assert!(!is_normal_dd(&r(r(r(v(1), v(2)), v(3)), v(4)))); // ((a>b)>c)>d
    }

    #[test]
    fn normalize_rule_examples() {
        let g = gf();
        let mut norm = Normalizer::new(g);

        // (a<b)<c -> a<(b<c) + a<(b>c)
        let out = norm.normalize(&l(l(v(1), v(2)), v(3)));
        let mut expected = LinComb::zero();
        expected.add_term(l(v(1), l(v(2), v(3))), 1, g);
        expected.add_term(l(v(1), r(v(2), v(3))), 1, g);
        assert_eq!(out, expected);

        // (a>b)<c -> a>(b<c)
        let out = norm.normalize(&l(r(v(1), v(2)), v(3)));
        assert_eq!(out, LinComb::from_term(r(v(1), l(v(2), v(3))), 1));

        // ((a>b)>c)>d -> (a>b)>(c>d) - (a>(b<c))>d
        let out = norm.normalize(&r(r(r(v(1), v(2)), v(3)), v(4)));
        let mut expected = LinComb::zero();
        expected.add_term(r(r(v(1), v(2)), r(v(3), v(4))), 1, g);
        expected.add_term(r(r(v(1), l(v(2), v(3))), v(4)), g.neg(1), g);
        assert_eq!(out, expected);
    }

    #[test]
    fn normalize_outputs_are_normal() {
        let g = gf();
        let mut norm = Normalizer::new(g);
        for shape_idx in 0..all_degree4_monomials().len() {
            let m = &all_degree4_monomials()[shape_idx];
            let out = norm.normalize(m);
            for (t, _) in out.iter() {
                assert!(
                    is_normal_dd(t),
                    "non-normal output {} from {}",
                    render_dd(t),
                    render_dd(m)
                );
            }
        }
    }

    #[test]
    fn normalize_lincomb_linearity_and_idempotence() {
        let g = gf();
        let mut norm = Normalizer::new(g);
        let m = l(l(v(1), v(2)), v(3));
        let mut c = LinComb::zero();
        c.add_term(m.clone(), 2, g);
        let out = norm.normalize_lincomb(&c);
        assert_eq!(out.len(), 2);
        assert!(out.iter().all(|(_, &c)| c == 2));
        // m - m normalizes to zero
        let mut z = LinComb::zero();
        z.add_term(m.clone(), 1, g);
        z.add_term(m.clone(), g.neg(1), g);
        assert!(z.is_zero());
        // idempotence on an already-normal combination
        let again = norm.normalize_lincomb(&out);
        assert_eq!(again, out);
    }

    /// All 2-op association types of degree 4 with identity leaf labels.
    fn all_degree4_monomials() -> Vec<DdTree> {
        fn shapes(n: u8, next: u8) -> Vec<(DdTree, u8)> {
            if n == 1 {
                return vec![(DdTree::Var(next), next + 1)];
            }
            let mut out = Vec::new();
            for i in 1..n {
                for (lt, mid) in shapes(i, next) {
                    for (rt, end) in shapes(n - i, mid) {
                        for op in [DdOp::Left, DdOp::Right] {
                            out.push((
                                DdTree::App(op, Box::new(lt.clone()), Box::new(rt.clone())),
                                end,
                            ));
                        }
                    }
                }
            }
            out
        }
        shapes(4, 1).into_iter().map(|(t, _)| t).collect()
    }

    #[test]
    fn confluence_on_multilinear_degree4() {
        let g = gf();
        let mut norm = Normalizer::new(g);
        let perms = crate::symmetric::Perm::all(4);
        let mut count = 0;
        for shape in all_degree4_monomials() {
            for p in &perms {
                let m = shape.relabel(p);
                let inner = normalize_with_strategy(&m, Strategy::LeftmostInnermost, g);
                let outer = normalize_with_strategy(&m, Strategy::LeftmostOutermost, g);
                assert_eq!(inner, outer, "strategies disagree on {}", render_dd(&m));
                assert_eq!(norm.normalize(&m), inner, "memoized path disagrees");
                count += 1;
            }
        }
        assert_eq!(count, 40 * 24);
    }

    #[test]
    fn normal_monomial_count_matches_type_count() {
        // every degree-4 multilinear monomial normalizes into the normal
        // basis, and the basis index round-trips
        let g = gf();
        let mut norm = Normalizer::new(g);
        let basis = dd_basis(4);
        assert_eq!(basis.dim(), 14 * 24);
        for shape in all_degree4_monomials() {
            let out = norm.normalize(&shape);
            for (t, _) in out.iter() {
                basis.index_of(t).expect("normalized monomial must index");
            }
        }
    }

    #[test]
    fn parse_helper_in_scope() {
        // keep the parser honest on a term used by downstream tables
        assert!(parse_tt_term("[[a,b,c]_1,d,e]_2").is_ok());
    }
}
