//! The trilinear operations under study and the expansion map.
//!
//! A TT-monomial expands into the free dendriform dialgebra by replacing
//! the formal brackets with the chosen pair of trilinear operations and
//! normalizing. For the pre-Lie product a.b = a<b - b>a and the
//! pre-Jordan product a.b = a>b + b<a, the brackets are (a.b).c and
//! a.(b.c); the left/right variant pairs the two triple products built
//! from anticommutators of left and right multiplications instead.

use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::freealg::{DdOp, DdTree, TtOp, TtShape, TtTree};
use crate::modlinalg::Gf;
use crate::rewrite::{LinComb, Normalizer};

/// Which pair of trilinear operations generates the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperationKind {
    PreLie,
    PreJordan,
    /// The two pre-Jordan triple products in operator form, used for the
    /// degree-3 analysis only.
    PreJordanLR,
}

impl OperationKind {
    pub fn parse(s: &str) -> Option<OperationKind> {
        match s {
            "prelie" => Some(OperationKind::PreLie),
            "prejordan" => Some(OperationKind::PreJordan),
            "prejordan-lr" => Some(OperationKind::PreJordanLR),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OperationKind::PreLie => "prelie",
            OperationKind::PreJordan => "prejordan",
            OperationKind::PreJordanLR => "prejordan-lr",
        }
    }
}

impl std::fmt::Display for OperationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The binary product underlying an operation kind, built term by term
/// without normalization.
fn raw_dot(op: OperationKind, a: &LinComb<DdTree>, b: &LinComb<DdTree>, gf: Gf) -> LinComb<DdTree> {
    let minus = gf.neg(1);
    let mut out = LinComb::zero();
    for (ma, &ca) in a.iter() {
        for (mb, &cb) in b.iter() {
            let c = gf.mul(ca, cb);
            match op {
                OperationKind::PreLie => {
                    // a.b = a<b - b>a
                    out.add_term(DdTree::app(DdOp::Left, ma.clone(), mb.clone()), c, gf);
                    out.add_term(
                        DdTree::app(DdOp::Right, mb.clone(), ma.clone()),
                        gf.mul(c, minus),
                        gf,
                    );
                }
                OperationKind::PreJordan | OperationKind::PreJordanLR => {
                    // a.b = a>b + b<a
                    out.add_term(DdTree::app(DdOp::Right, ma.clone(), mb.clone()), c, gf);
                    out.add_term(DdTree::app(DdOp::Left, mb.clone(), ma.clone()), c, gf);
                }
            }
        }
    }
    out
}

fn raw_bracket(
    op: OperationKind,
    which: TtOp,
    a: &LinComb<DdTree>,
    b: &LinComb<DdTree>,
    c: &LinComb<DdTree>,
    gf: Gf,
) -> LinComb<DdTree> {
    match op {
        OperationKind::PreLie | OperationKind::PreJordan => match which {
            TtOp::Op1 => raw_dot(op, &raw_dot(op, a, b, gf), c, gf),
            TtOp::Op2 => raw_dot(op, a, &raw_dot(op, b, c, gf), gf),
        },
        OperationKind::PreJordanLR => {
            // (a.b).c + a.(b.c) minus the operator correction term
            let mut out = raw_dot(op, &raw_dot(op, a, b, gf), c, gf);
            let a_bc = raw_dot(op, a, &raw_dot(op, b, c, gf), gf);
            out.add_scaled(&a_bc, 1, gf);
            let correction = match which {
                TtOp::Op1 => raw_dot(op, &raw_dot(op, a, c, gf), b, gf),
                TtOp::Op2 => raw_dot(op, b, &raw_dot(op, c, a, gf), gf),
            };
            out.add_scaled(&correction, gf.neg(1), gf);
            out
        }
    }
}

/// Expansion of a TT-monomial without normalization; exposes the raw
/// term counts of the trilinear substitution.
pub fn expand_raw(op: OperationKind, m: &TtTree, gf: Gf) -> LinComb<DdTree> {
    match m {
        TtTree::Var(v) => LinComb::from_term(DdTree::var(*v), 1),
        TtTree::App(which, args) => {
            let a = expand_raw(op, &args[0], gf);
            let b = expand_raw(op, &args[1], gf);
            let c = expand_raw(op, &args[2], gf);
            raw_bracket(op, *which, &a, &b, &c, gf)
        }
    }
}

/// Expansion engine with per-type caching.
///
/// The normalized expansion of a monomial is the leaf-relabeled
/// expansion of its type, since expansion commutes with relabeling; only
/// one normalization per operation placement is ever computed.
pub struct Expander {
    op: OperationKind,
    norm: Normalizer,
    per_type: FxHashMap<TtShape, Rc<LinComb<DdTree>>>,
}

impl Expander {
    pub fn new(op: OperationKind, gf: Gf) -> Expander {
        Expander {
            op,
            norm: Normalizer::new(gf),
            per_type: FxHashMap::default(),
        }
    }

    pub fn op(&self) -> OperationKind {
        self.op
    }

    pub fn gf(&self) -> Gf {
        self.norm.gf()
    }

    /// Normalized trilinear product of three normalized combinations.
    pub fn expand_bracket(
        &mut self,
        which: TtOp,
        a: &LinComb<DdTree>,
        b: &LinComb<DdTree>,
        c: &LinComb<DdTree>,
    ) -> LinComb<DdTree> {
        let raw = raw_bracket(self.op, which, a, b, c, self.gf());
        self.norm.normalize_lincomb(&raw)
    }

    /// Normalized expansion of the identity-labeled monomial of a type.
    pub fn expansion_of_type(&mut self, shape: &TtShape) -> Rc<LinComb<DdTree>> {
        if let Some(e) = self.per_type.get(shape) {
            return Rc::clone(e);
        }
        let expanded = self.expand_tree(&shape.fill_identity());
        let rc = Rc::new(expanded);
        self.per_type.insert(shape.clone(), Rc::clone(&rc));
        rc
    }

    fn expand_tree(&mut self, m: &TtTree) -> LinComb<DdTree> {
        match m {
            TtTree::Var(v) => LinComb::from_term(DdTree::var(*v), 1),
            TtTree::App(which, args) => {
                let a = self.expand_tree(&args[0]);
                let b = self.expand_tree(&args[1]);
                let c = self.expand_tree(&args[2]);
                self.expand_bracket(*which, &a, &b, &c)
            }
        }
    }

    /// Normalized expansion of a multilinear TT-monomial.
    pub fn expand_monomial(&mut self, m: &TtTree) -> LinComb<DdTree> {
        let gf = self.gf();
        let word = m.leaf_word();
        let identity_labels = word.iter().enumerate().all(|(k, &v)| v as usize == k + 1);
        let base = self.expansion_of_type(&m.shape());
        if identity_labels {
            return (*base).clone();
        }
        let sigma = crate::symmetric::Perm::from_images(word)
            .expect("expand_monomial needs multilinear input");
        base.map_monomials(gf, |t| t.relabel(&sigma))
    }

    /// Normalized expansion of a TT linear combination.
    pub fn expand_lincomb(&mut self, f: &LinComb<TtTree>) -> LinComb<DdTree> {
        let gf = self.gf();
        let mut out = LinComb::zero();
        for (m, &c) in f.iter() {
            let e = self.expand_monomial(m);
            out.add_scaled(&e, c, gf);
        }
        out
    }

    /// Whether a TT polynomial expands to zero, i.e. is an identity of
    /// the operations.
    pub fn is_identity(&mut self, f: &LinComb<TtTree>) -> bool {
        self.expand_lincomb(f).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{dd_basis, render_dd, tt_basis};
    use crate::symmetric::Perm;

    fn gf() -> Gf {
        Gf::new(101, 7).unwrap()
    }

    fn bracket_abc(op: TtOp) -> TtTree {
        TtTree::app(op, TtTree::var(1), TtTree::var(2), TtTree::var(3))
    }

    fn render_sorted(c: &LinComb<DdTree>, g: Gf) -> Vec<(String, i64)> {
        let mut v: Vec<(String, i64)> = c
            .iter()
            .map(|(m, &cf)| (render_dd(m), g.symmetric_rep(cf)))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn pre_lie_degree3_expansions() {
        let g = gf();
        let mut ex = Expander::new(OperationKind::PreLie, g);
        // (a.b).c = a<(b<c) + a<(b>c) - b>(a<c) - c>(a<b) + c>(b>a)
        let e1 = ex.expand_monomial(&bracket_abc(TtOp::Op1));
        assert_eq!(
            render_sorted(&e1, g),
            vec![
                ("a<(b<c)".to_string(), 1),
                ("a<(b>c)".to_string(), 1),
                ("b>(a<c)".to_string(), -1),
                ("c>(a<b)".to_string(), -1),
                ("c>(b>a)".to_string(), 1),
            ]
        );
        // a.(b.c) = a<(b<c) - a<(c>b) + (b>c)>a - b>(c>a) + (c>b)>a
        let e2 = ex.expand_monomial(&bracket_abc(TtOp::Op2));
        assert_eq!(
            render_sorted(&e2, g),
            vec![
                ("(b>c)>a".to_string(), 1),
                ("(c>b)>a".to_string(), 1),
                ("a<(b<c)".to_string(), 1),
                ("a<(c>b)".to_string(), -1),
                ("b>(c>a)".to_string(), -1),
            ]
        );
    }

    #[test]
    fn raw_term_counts() {
        let g = gf();
        for op in [OperationKind::PreLie, OperationKind::PreJordan] {
            let m3 = bracket_abc(TtOp::Op1);
            assert_eq!(expand_raw(op, &m3, g).len(), 4);
            let basis = tt_basis(5).unwrap();
            for t in 0..12 {
                let m5 = basis.monomial_at(t * 120);
                assert_eq!(expand_raw(op, &m5, g).len(), 16, "{op} type {t}");
            }
        }
    }

    #[test]
    fn pre_lie_degree5_normalized_term_counts() {
        let g = gf();
        let mut ex = Expander::new(OperationKind::PreLie, g);
        let basis = tt_basis(5).unwrap();
        let counts: Vec<usize> = basis
            .types()
            .iter()
            .map(|t| ex.expansion_of_type(t).len())
            .collect();
        assert_eq!(counts, vec![41, 33, 41, 33, 32, 29, 44, 35, 27, 36, 35, 46]);
    }

    #[test]
    fn expansion_lands_in_normal_basis() {
        let g = gf();
        let basis5 = dd_basis(5);
        for op in [OperationKind::PreLie, OperationKind::PreJordan] {
            let mut ex = Expander::new(op, g);
            let tb = tt_basis(5).unwrap();
            for t in tb.types() {
                let e = ex.expansion_of_type(t);
                for (m, _) in e.iter() {
                    basis5.index_of(m).expect("expansion term must be normal");
                }
            }
        }
    }

    #[test]
    fn expansion_commutes_with_relabeling() {
        let g = gf();
        let basis = tt_basis(5).unwrap();
        for op in [
            OperationKind::PreLie,
            OperationKind::PreJordan,
            OperationKind::PreJordanLR,
        ] {
            let mut ex = Expander::new(op, g);
            let m = basis.monomial_at(3 * 120); // type 3, identity labels
            let sigma = Perm::from_images(vec![3, 1, 5, 2, 4]).unwrap();
            let direct = ex.expand_monomial(&m.relabel(&sigma));
            // recompute the relabeled monomial from scratch, bypassing the cache
            let mut fresh = Expander::new(op, g);
            let via_tree = fresh.expand_tree(&m.relabel(&sigma));
            assert_eq!(direct, via_tree, "{op}");
        }
    }

    #[test]
    fn right_symmetric_combination_expands_to_zero() {
        let g = gf();
        let mut ex = Expander::new(OperationKind::PreLie, g);
        // [a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2
        let swap = Perm::from_images(vec![1, 3, 2]).unwrap();
        let mut f: LinComb<TtTree> = LinComb::zero();
        f.add_term(bracket_abc(TtOp::Op1), 1, g);
        f.add_term(bracket_abc(TtOp::Op1).relabel(&swap), g.neg(1), g);
        f.add_term(bracket_abc(TtOp::Op2), g.neg(1), g);
        f.add_term(bracket_abc(TtOp::Op2).relabel(&swap), 1, g);
        assert!(ex.is_identity(&f));
        // but it is not an identity for the pre-Jordan products
        let mut exj = Expander::new(OperationKind::PreJordan, g);
        assert!(!exj.is_identity(&f));
    }

    #[test]
    fn degree7_expansions_have_64_raw_and_bounded_normalized_terms() {
        let g = gf();
        let basis = tt_basis(7).unwrap();
        // raw count on a couple of types; the full sweep runs in the
        // degree-7 pipeline anyway
        for &t in &[0usize, 40, 95] {
            let m = basis.types()[t].fill_identity();
            assert_eq!(expand_raw(OperationKind::PreLie, &m, g).len(), 64);
        }
        let mut ex = Expander::new(OperationKind::PreLie, g);
        for &t in &[0usize, 40, 95] {
            let n = ex.expansion_of_type(&basis.types()[t]).len();
            assert!(
                (171..=447).contains(&n),
                "type {t} has {n} normalized terms"
            );
        }
    }
}
