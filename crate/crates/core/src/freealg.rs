//! Monomials and canonical ordered bases of the multilinear spaces.
//!
//! TT-monomials are ternary trees over two formal bracket operations;
//! DD-monomials are binary trees over the two dendriform operations. The
//! multilinear basis of either space is ordered first by the recursively
//! enumerated operation placement (the "type") and then by lexicographic
//! order of the leaf permutation.

use std::fmt::Write as _;
use std::sync::{Arc, LazyLock, Mutex};

use rustc_hash::FxHashMap;

use crate::error::Error;
use crate::symmetric::Perm;

/// The two formal ternary brackets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TtOp {
    Op1,
    Op2,
}

impl TtOp {
    pub fn index(self) -> u8 {
        match self {
            TtOp::Op1 => 1,
            TtOp::Op2 => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<TtOp> {
        match i {
            1 => Some(TtOp::Op1),
            2 => Some(TtOp::Op2),
            _ => None,
        }
    }
}

/// The two dendriform operations; `Left` is ≺ (rendered "<") and `Right`
/// is ≻ (rendered ">").
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DdOp {
    Left,
    Right,
}

impl DdOp {
    pub fn symbol(self) -> char {
        match self {
            DdOp::Left => '<',
            DdOp::Right => '>',
        }
    }
}

/// Multilinear TT-monomial: leaves carry variable indices 1..n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TtTree {
    Var(u8),
    App(TtOp, Box<[TtTree; 3]>),
}

impl std::fmt::Debug for TtTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_tt(self))
    }
}

impl TtTree {
    pub fn var(v: u8) -> TtTree {
        TtTree::Var(v)
    }

    pub fn app(op: TtOp, a: TtTree, b: TtTree, c: TtTree) -> TtTree {
        TtTree::App(op, Box::new([a, b, c]))
    }

    pub fn degree(&self) -> usize {
        match self {
            TtTree::Var(_) => 1,
            TtTree::App(_, args) => args.iter().map(|a| a.degree()).sum(),
        }
    }

    /// Leaf variables read left to right.
    pub fn leaf_word(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            TtTree::Var(v) => out.push(*v),
            TtTree::App(_, args) => args.iter().for_each(|a| a.collect_leaves(out)),
        }
    }

    pub fn shape(&self) -> TtShape {
        match self {
            TtTree::Var(_) => TtShape::Slot,
            TtTree::App(op, args) => TtShape::App(
                *op,
                Box::new([args[0].shape(), args[1].shape(), args[2].shape()]),
            ),
        }
    }

    /// Relabel leaves v -> sigma(v); the tree shape is unchanged.
    pub fn relabel(&self, sigma: &Perm) -> TtTree {
        match self {
            TtTree::Var(v) => TtTree::Var(sigma.apply(*v)),
            TtTree::App(op, args) => TtTree::App(
                *op,
                Box::new([
                    args[0].relabel(sigma),
                    args[1].relabel(sigma),
                    args[2].relabel(sigma),
                ]),
            ),
        }
    }

    /// Replace leaf `v` by a subtree.
    pub fn substitute(&self, v: u8, replacement: &TtTree) -> TtTree {
        match self {
            TtTree::Var(w) if *w == v => replacement.clone(),
            TtTree::Var(w) => TtTree::Var(*w),
            TtTree::App(op, args) => TtTree::App(
                *op,
                Box::new([
                    args[0].substitute(v, replacement),
                    args[1].substitute(v, replacement),
                    args[2].substitute(v, replacement),
                ]),
            ),
        }
    }
}

/// TT-type: operation placement with unlabeled leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TtShape {
    Slot,
    App(TtOp, Box<[TtShape; 3]>),
}

impl std::fmt::Debug for TtShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_tt(&self.fill_identity()))
    }
}

impl TtShape {
    pub fn degree(&self) -> usize {
        match self {
            TtShape::Slot => 1,
            TtShape::App(_, args) => args.iter().map(|a| a.degree()).sum(),
        }
    }

    /// Fill the slots with variables 1..n left to right.
    pub fn fill_identity(&self) -> TtTree {
        let mut next = 1u8;
        self.fill_with(&mut next)
    }

    fn fill_with(&self, next: &mut u8) -> TtTree {
        match self {
            TtShape::Slot => {
                let v = *next;
                *next += 1;
                TtTree::Var(v)
            }
            TtShape::App(op, args) => TtTree::App(
                *op,
                Box::new([
                    args[0].fill_with(next),
                    args[1].fill_with(next),
                    args[2].fill_with(next),
                ]),
            ),
        }
    }

    /// Fill the slots with the given leaf word.
    pub fn fill_word(&self, word: &[u8]) -> TtTree {
        assert_eq!(word.len(), self.degree());
        let mut it = word.iter();
        self.fill_from(&mut it)
    }

    fn fill_from(&self, it: &mut std::slice::Iter<u8>) -> TtTree {
        match self {
            TtShape::Slot => TtTree::Var(*it.next().unwrap()),
            TtShape::App(op, args) => TtTree::App(
                *op,
                Box::new([
                    args[0].fill_from(it),
                    args[1].fill_from(it),
                    args[2].fill_from(it),
                ]),
            ),
        }
    }
}

/// Multilinear DD-monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DdTree {
    Var(u8),
    App(DdOp, Box<DdTree>, Box<DdTree>),
}

impl std::fmt::Debug for DdTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_dd(self))
    }
}

impl DdTree {
    pub fn var(v: u8) -> DdTree {
        DdTree::Var(v)
    }

    pub fn app(op: DdOp, l: DdTree, r: DdTree) -> DdTree {
        DdTree::App(op, Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            DdTree::Var(_) => 1,
            DdTree::App(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn leaf_word(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            DdTree::Var(v) => out.push(*v),
            DdTree::App(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn shape(&self) -> DdShape {
        match self {
            DdTree::Var(_) => DdShape::Slot,
            DdTree::App(op, l, r) => DdShape::App(*op, Box::new(l.shape()), Box::new(r.shape())),
        }
    }

    pub fn relabel(&self, sigma: &Perm) -> DdTree {
        match self {
            DdTree::Var(v) => DdTree::Var(sigma.apply(*v)),
            DdTree::App(op, l, r) => {
                DdTree::App(*op, Box::new(l.relabel(sigma)), Box::new(r.relabel(sigma)))
            }
        }
    }
}

/// Normal DD-type: operation placement with unlabeled leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DdShape {
    Slot,
    App(DdOp, Box<DdShape>, Box<DdShape>),
}

impl std::fmt::Debug for DdShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_dd(&self.fill_identity()))
    }
}

impl DdShape {
    pub fn degree(&self) -> usize {
        match self {
            DdShape::Slot => 1,
            DdShape::App(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn fill_identity(&self) -> DdTree {
        let mut next = 1u8;
        self.fill_with(&mut next)
    }

    fn fill_with(&self, next: &mut u8) -> DdTree {
        match self {
            DdShape::Slot => {
                let v = *next;
                *next += 1;
                DdTree::Var(v)
            }
            DdShape::App(op, l, r) => {
                let lt = l.fill_with(next);
                let rt = r.fill_with(next);
                DdTree::App(*op, Box::new(lt), Box::new(rt))
            }
        }
    }
}

/// TT-types of (odd) degree n in their canonical total order.
///
/// The order is recursive: the outer bracket splits the degree as
/// (n-i-j, j, i) with i and j running over odd values, and each split
/// contributes the bracket with operation 1 and then operation 2.
pub fn enumerate_tt_types(n: usize) -> Result<Vec<TtShape>, Error> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::BadDegree {
            degree: n,
            reason: "TT spaces exist in odd degree only",
        });
    }
    let mut table: Vec<Vec<TtShape>> = vec![Vec::new(); n + 1];
    table[1] = vec![TtShape::Slot];
    for m in (3..=n).step_by(2) {
        let mut list = Vec::new();
        let mut i = 1;
        while i <= m - 2 {
            let mut j = 1;
            while j <= m - i - 1 {
                for x in &table[m - i - j] {
                    for y in &table[j] {
                        for z in &table[i] {
                            for op in [TtOp::Op1, TtOp::Op2] {
                                list.push(TtShape::App(
                                    op,
                                    Box::new([x.clone(), y.clone(), z.clone()]),
                                ));
                            }
                        }
                    }
                }
                j += 2;
            }
            i += 2;
        }
        table[m] = list;
    }
    Ok(table.swap_remove(n))
}

/// Normal DD-types of degree n in their canonical total order.
///
/// Degree n extends degree n-1 by prefixing a variable with either
/// operation, followed by the left-combed splittings (x > v) > w.
pub fn enumerate_dd_types(n: usize) -> Vec<DdShape> {
    assert!(n >= 1);
    let mut table: Vec<Vec<DdShape>> = vec![Vec::new(); n + 1];
    table[1] = vec![DdShape::Slot];
    for m in 2..=n {
        let mut list = Vec::new();
        for w in &table[m - 1] {
            list.push(DdShape::App(
                DdOp::Left,
                Box::new(DdShape::Slot),
                Box::new(w.clone()),
            ));
            list.push(DdShape::App(
                DdOp::Right,
                Box::new(DdShape::Slot),
                Box::new(w.clone()),
            ));
        }
        for i in 1..=m.saturating_sub(2) {
            for v in &table[i] {
                for w in &table[m - 1 - i] {
                    let head =
                        DdShape::App(DdOp::Right, Box::new(DdShape::Slot), Box::new(v.clone()));
                    list.push(DdShape::App(
                        DdOp::Right,
                        Box::new(head),
                        Box::new(w.clone()),
                    ));
                }
            }
        }
        table[m] = list;
    }
    table.swap_remove(n)
}

/// Position of a monomial in the ordered basis: type rank, then the
/// lexicographic rank of the leaf permutation (both 0-based). The linear
/// index is `type_rank * n! + perm_rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisIndex {
    pub type_rank: usize,
    pub perm_rank: usize,
}

impl BasisIndex {
    pub fn linear(&self, factorial: usize) -> usize {
        self.type_rank * factorial + self.perm_rank
    }

    pub fn from_linear(idx: usize, factorial: usize) -> BasisIndex {
        BasisIndex {
            type_rank: idx / factorial,
            perm_rank: idx % factorial,
        }
    }
}

/// Ordered multilinear basis of the TT space of one degree.
pub struct TtBasis {
    degree: usize,
    factorial: usize,
    types: Vec<TtShape>,
    rank_of_type: FxHashMap<TtShape, usize>,
}

impl TtBasis {
    pub fn new(degree: usize) -> Result<TtBasis, Error> {
        let types = enumerate_tt_types(degree)?;
        let rank_of_type = types.iter().cloned().zip(0..).collect();
        let factorial = (1..=degree).product();
        Ok(TtBasis {
            degree,
            factorial,
            types,
            rank_of_type,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factorial(&self) -> usize {
        self.factorial
    }

    pub fn types(&self) -> &[TtShape] {
        &self.types
    }

    pub fn num_types(&self) -> usize {
        self.types.len()
    }

    pub fn dim(&self) -> usize {
        self.types.len() * self.factorial
    }

    pub fn type_rank(&self, shape: &TtShape) -> Option<usize> {
        self.rank_of_type.get(shape).copied()
    }

    /// Decompose a multilinear monomial into (type rank, leaf permutation).
    pub fn split(&self, m: &TtTree) -> Result<(usize, Perm), Error> {
        let word = m.leaf_word();
        if word.len() != self.degree {
            return Err(Error::NotMultilinear);
        }
        let perm = Perm::from_images(word)?;
        let rank = self
            .rank_of_type
            .get(&m.shape())
            .copied()
            .ok_or(Error::NotMultilinear)?;
        Ok((rank, perm))
    }

    pub fn index_of(&self, m: &TtTree) -> Result<usize, Error> {
        let (t, perm) = self.split(m)?;
        Ok(BasisIndex {
            type_rank: t,
            perm_rank: perm.lex_rank(),
        }
        .linear(self.factorial))
    }

    pub fn monomial_at(&self, idx: usize) -> TtTree {
        assert!(idx < self.dim());
        let bi = BasisIndex::from_linear(idx, self.factorial);
        let perm = Perm::from_lex_rank(self.degree, bi.perm_rank);
        self.types[bi.type_rank].fill_word(perm.images())
    }
}

/// Ordered multilinear basis of the normal DD monomials of one degree.
pub struct DdBasis {
    degree: usize,
    factorial: usize,
    types: Vec<DdShape>,
    rank_of_type: FxHashMap<DdShape, usize>,
}

impl DdBasis {
    pub fn new(degree: usize) -> DdBasis {
        let types = enumerate_dd_types(degree);
        let rank_of_type = types.iter().cloned().zip(0..).collect();
        let factorial = (1..=degree).product();
        DdBasis {
            degree,
            factorial,
            types,
            rank_of_type,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factorial(&self) -> usize {
        self.factorial
    }

    pub fn types(&self) -> &[DdShape] {
        &self.types
    }

    pub fn num_types(&self) -> usize {
        self.types.len()
    }

    pub fn dim(&self) -> usize {
        self.types.len() * self.factorial
    }

    pub fn type_rank(&self, shape: &DdShape) -> Option<usize> {
        self.rank_of_type.get(shape).copied()
    }

    /// Decompose a normal multilinear monomial; non-normal monomials are
    /// rejected since their shape is outside the normal type list.
    pub fn split(&self, m: &DdTree) -> Result<(usize, Perm), Error> {
        let word = m.leaf_word();
        if word.len() != self.degree {
            return Err(Error::NotMultilinear);
        }
        let perm = Perm::from_images(word)?;
        let rank = self
            .rank_of_type
            .get(&m.shape())
            .copied()
            .ok_or(Error::NotNormal)?;
        Ok((rank, perm))
    }

    pub fn index_of(&self, m: &DdTree) -> Result<usize, Error> {
        let (t, perm) = self.split(m)?;
        Ok(BasisIndex {
            type_rank: t,
            perm_rank: perm.lex_rank(),
        }
        .linear(self.factorial))
    }

    pub fn monomial_at(&self, idx: usize) -> DdTree {
        assert!(idx < self.dim());
        let bi = BasisIndex::from_linear(idx, self.factorial);
        let perm = Perm::from_lex_rank(self.degree, bi.perm_rank);
        let tree = self.types[bi.type_rank].fill_identity();
        tree.relabel(&perm)
    }
}

static TT_CACHE: LazyLock<Mutex<FxHashMap<usize, Arc<TtBasis>>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));
static DD_CACHE: LazyLock<Mutex<FxHashMap<usize, Arc<DdBasis>>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));

/// Shared TT basis for a degree (cached).
pub fn tt_basis(degree: usize) -> Result<Arc<TtBasis>, Error> {
    let mut cache = TT_CACHE.lock().unwrap();
    if let Some(b) = cache.get(&degree) {
        return Ok(Arc::clone(b));
    }
    let b = Arc::new(TtBasis::new(degree)?);
    cache.insert(degree, Arc::clone(&b));
    Ok(b)
}

/// Shared DD basis for a degree (cached).
pub fn dd_basis(degree: usize) -> Arc<DdBasis> {
    let mut cache = DD_CACHE.lock().unwrap();
    if let Some(b) = cache.get(&degree) {
        return Arc::clone(b);
    }
    let b = Arc::new(DdBasis::new(degree));
    cache.insert(degree, Arc::clone(&b));
    b
}

/// Variable name for index 1..26 (a, b, c, ...).
pub fn var_name(v: u8) -> char {
    (b'a' + v - 1) as char
}

fn var_index(c: char) -> Option<u8> {
    if c.is_ascii_lowercase() {
        Some(c as u8 - b'a' + 1)
    } else {
        None
    }
}

/// Text form "[a,b,c]_1", nested as needed.
pub fn render_tt(m: &TtTree) -> String {
    match m {
        TtTree::Var(v) => var_name(*v).to_string(),
        TtTree::App(op, args) => {
            let mut s = String::from("[");
            for (k, a) in args.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&render_tt(a));
            }
            let _ = write!(s, "]_{}", op.index());
            s
        }
    }
}

/// Text form "(a<b)<c": operands are parenthesized when compound.
pub fn render_dd(m: &DdTree) -> String {
    fn part(m: &DdTree, s: &mut String) {
        match m {
            DdTree::Var(v) => s.push(var_name(*v)),
            DdTree::App(..) => {
                s.push('(');
                top(m, s);
                s.push(')');
            }
        }
    }
    fn top(m: &DdTree, s: &mut String) {
        match m {
            DdTree::Var(v) => s.push(var_name(*v)),
            DdTree::App(op, l, r) => {
                part(l, s);
                s.push(op.symbol());
                part(r, s);
            }
        }
    }
    let mut s = String::new();
    top(m, &mut s);
    s
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Lexer {
        Lexer {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

/// Parse a single TT term such as "[[a,b,c]_1,d,e]_2" (the underscore is
/// optional). Inverse of [`render_tt`].
pub fn parse_tt_term(text: &str) -> Result<TtTree, Error> {
    let mut lex = Lexer::new(text);
    let tree = parse_tt_inner(&mut lex, text)?;
    if !lex.done() {
        return Err(Error::BadPolynomial(format!("trailing input in {text:?}")));
    }
    Ok(tree)
}

/// Parse a signed sum of TT terms such as
/// "[[a,b,c]_1,d,e]_2 - 2 [a,[b,c,d]_1,e]_1". Returns the raw signed
/// terms in source order; coefficients default to 1.
pub fn parse_tt_polynomial(text: &str) -> Result<Vec<(i64, TtTree)>, Error> {
    let mut lex = Lexer::new(text);
    let mut out = Vec::new();
    while !lex.done() {
        let mut sign = 1i64;
        match lex.peek() {
            Some('+') => {
                lex.next();
            }
            Some('-') => {
                sign = -1;
                lex.next();
            }
            _ => {
                if !out.is_empty() {
                    return Err(Error::BadPolynomial(format!("missing sign in {text:?}")));
                }
            }
        }
        let mut coeff = 0i64;
        let mut saw_digit = false;
        while let Some(d) = lex.peek().and_then(|c| c.to_digit(10)) {
            // a digit here is a coefficient only if not directly an op index
            coeff = coeff * 10 + d as i64;
            saw_digit = true;
            lex.next();
        }
        if !saw_digit {
            coeff = 1;
        }
        if lex.peek() == Some('*') {
            lex.next();
        }
        let term = parse_tt_inner(&mut lex, text)?;
        out.push((sign * coeff, term));
    }
    if out.is_empty() {
        return Err(Error::BadPolynomial(format!("empty polynomial {text:?}")));
    }
    Ok(out)
}

fn parse_tt_inner(lex: &mut Lexer, full: &str) -> Result<TtTree, Error> {
    let bad = || Error::BadPolynomial(format!("malformed term in {full:?}"));
    match lex.peek() {
        Some('[') => {
            lex.next();
            let a = parse_tt_inner(lex, full)?;
            if lex.next() != Some(',') {
                return Err(bad());
            }
            let b = parse_tt_inner(lex, full)?;
            if lex.next() != Some(',') {
                return Err(bad());
            }
            let c = parse_tt_inner(lex, full)?;
            if lex.next() != Some(']') {
                return Err(bad());
            }
            if lex.peek() == Some('_') {
                lex.next();
            }
            let op = lex
                .next()
                .and_then(|d| d.to_digit(10))
                .and_then(|d| TtOp::from_index(d as u8))
                .ok_or_else(bad)?;
            Ok(TtTree::app(op, a, b, c))
        }
        Some(c) => {
            lex.next();
            var_index(c).map(TtTree::Var).ok_or_else(bad)
        }
        None => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tt_type_counts() {
        assert_eq!(enumerate_tt_types(1).unwrap().len(), 1);
        assert_eq!(enumerate_tt_types(3).unwrap().len(), 2);
        assert_eq!(enumerate_tt_types(5).unwrap().len(), 12);
        assert_eq!(enumerate_tt_types(7).unwrap().len(), 96);
        assert!(enumerate_tt_types(2).is_err());
        assert!(enumerate_tt_types(0).is_err());
    }

    #[test]
    fn dd_type_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_dd_types(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn dd_types_degree3_order() {
        let types = enumerate_dd_types(3);
        let rendered: Vec<String> = types
            .iter()
            .map(|t| render_dd(&t.fill_identity()))
            .collect();
        assert_eq!(
            rendered,
            vec!["a<(b<c)", "a>(b<c)", "a<(b>c)", "a>(b>c)", "(a>b)>c"]
        );
    }

    #[test]
    fn tt_degree5_type_order() {
        let types = enumerate_tt_types(5).unwrap();
        let rendered: Vec<String> = types
            .iter()
            .map(|t| render_tt(&t.fill_identity()))
            .collect();
        assert_eq!(
            rendered,
            vec![
                "[[a,b,c]_1,d,e]_1",
                "[[a,b,c]_1,d,e]_2",
                "[[a,b,c]_2,d,e]_1",
                "[[a,b,c]_2,d,e]_2",
                "[a,[b,c,d]_1,e]_1",
                "[a,[b,c,d]_1,e]_2",
                "[a,[b,c,d]_2,e]_1",
                "[a,[b,c,d]_2,e]_2",
                "[a,b,[c,d,e]_1]_1",
                "[a,b,[c,d,e]_1]_2",
                "[a,b,[c,d,e]_2]_1",
                "[a,b,[c,d,e]_2]_2",
            ]
        );
    }

    #[test]
    fn basis_dims() {
        assert_eq!(tt_basis(3).unwrap().dim(), 12);
        assert_eq!(dd_basis(3).dim(), 30);
        assert_eq!(tt_basis(5).unwrap().dim(), 1440);
        assert_eq!(dd_basis(5).dim(), 5040);
        assert_eq!(tt_basis(7).unwrap().dim(), 96 * 5040);
        assert_eq!(dd_basis(7).dim(), 429 * 5040);
    }

    #[test]
    fn first_tt_index_is_identity_bracket() {
        let basis = tt_basis(3).unwrap();
        let m = basis.monomial_at(0);
        assert_eq!(render_tt(&m), "[a,b,c]_1");
        assert_eq!(basis.index_of(&m).unwrap(), 0);
    }

    #[test]
    fn index_roundtrip_full_bases() {
        for n in [1usize, 3, 5] {
            let basis = tt_basis(n).unwrap();
            for idx in 0..basis.dim() {
                let m = basis.monomial_at(idx);
                assert_eq!(basis.index_of(&m).unwrap(), idx);
            }
        }
        for n in 1usize..=5 {
            let basis = dd_basis(n);
            for idx in 0..basis.dim() {
                let m = basis.monomial_at(idx);
                assert_eq!(basis.index_of(&m).unwrap(), idx);
            }
        }
    }

    #[test]
    fn non_normal_and_non_multilinear_rejected() {
        let basis = dd_basis(3);
        // (a<b)<c is not normal
        let m = DdTree::app(
            DdOp::Left,
            DdTree::app(DdOp::Left, DdTree::var(1), DdTree::var(2)),
            DdTree::var(3),
        );
        assert_eq!(basis.index_of(&m), Err(Error::NotNormal));
        // a<(b<b) is not multilinear
        let m = DdTree::app(
            DdOp::Left,
            DdTree::var(1),
            DdTree::app(DdOp::Left, DdTree::var(2), DdTree::var(2)),
        );
        assert!(basis.index_of(&m).is_err());
        // degree mismatch
        assert_eq!(basis.index_of(&DdTree::var(1)), Err(Error::NotMultilinear));
    }

    #[test]
    fn relabel_is_an_action() {
        let basis = tt_basis(5).unwrap();
        let m = basis.monomial_at(777);
        let s = Perm::from_images(vec![2, 3, 1, 5, 4]).unwrap();
        let t = Perm::from_images(vec![1, 4, 2, 5, 3]).unwrap();
        let left = m.relabel(&t).relabel(&s);
        let right = m.relabel(&s.compose(&t));
        assert_eq!(left, right);
        assert_eq!(m.relabel(&Perm::identity(5)), m);
        // type rank invariant under relabeling
        let (t0, _) = basis.split(&m).unwrap();
        let (t1, _) = basis.split(&left).unwrap();
        assert_eq!(t0, t1);
    }

    #[test]
    fn render_and_parse_roundtrip() {
        let basis = tt_basis(5).unwrap();
        for idx in [0usize, 100, 555, 1439] {
            let m = basis.monomial_at(idx);
            let text = render_tt(&m);
            assert_eq!(parse_tt_term(&text).unwrap(), m);
        }
        assert!(parse_tt_term("[a,b]_1").is_err());
        assert!(parse_tt_term("[a,b,c]_3").is_err());
        let poly = parse_tt_polynomial("[[a,b,c]_1,d,e]_2 - 2 [a,[b,c,d]_1,e]_1 + e").unwrap();
        assert_eq!(poly.len(), 3);
        assert_eq!(poly[0].0, 1);
        assert_eq!(poly[1].0, -2);
        assert_eq!(poly[2], (1, TtTree::var(5)));
        assert!(parse_tt_polynomial("").is_err());
        assert!(parse_tt_polynomial("a b").is_err());
        assert_eq!(
            render_dd(&DdTree::app(
                DdOp::Left,
                DdTree::app(DdOp::Left, DdTree::var(1), DdTree::var(2)),
                DdTree::var(3)
            )),
            "(a<b)<c"
        );
    }
}
