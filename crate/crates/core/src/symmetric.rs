//! Symmetric-group combinatorics: permutations, partitions, standard
//! Young tableaux, Clifton matrices for the natural representation, and
//! the group-algebra matrix units built from row/column symmetrizers.

use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::error::Error;
use crate::modlinalg::{Gf, ModMatrix};

/// Permutation of {1..n} in one-line notation: `images[k]` is the image
/// of k+1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm(")?;
        for x in &self.images {
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm, Error> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::NotMultilinear);
            }
            seen[v as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a point (1-based).
    #[inline]
    pub fn apply(&self, x: u8) -> u8 {
        self.images[(x - 1) as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Functional composition: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[(v - 1) as usize] = k as u8 + 1;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    /// Parity: +1 for even, -1 for odd.
    pub fn sign(&self) -> i8 {
        let mut sign = 1i8;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// Rank in lexicographic order of one-line words, 0-based.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut fact = (1..n).product::<usize>().max(1);
        let mut used = vec![false; n + 1];
        for (k, &v) in self.images.iter().enumerate() {
            let smaller = (1..v).filter(|&u| !used[u as usize]).count();
            rank += smaller * fact;
            used[v as usize] = true;
            if k + 2 < n {
                fact /= n - k - 1;
            }
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Perm {
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut fact: usize = (1..n).product::<usize>().max(1);
        let mut images = Vec::with_capacity(n);
        for k in 0..n {
            let idx = rank / fact;
            rank %= fact;
            images.push(avail.remove(idx));
            if k + 1 < n {
                fact /= n - k - 1;
            }
        }
        Perm { images }
    }

    /// All permutations of {1..n} in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let total: usize = (1..=n).product();
        (0..total).map(|r| Perm::from_lex_rank(n, r)).collect()
    }
}

/// Partition of n: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u8>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    /// Concatenated digits, e.g. "421" or "31111".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.parts {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Partition, Error> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::BadPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Parse a digit string such as "421"; only single-digit parts occur
    /// for the degrees treated here.
    pub fn parse(s: &str) -> Result<Partition, Error> {
        let parts: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match parts {
            Some(p) if !p.is_empty() => Partition::new(p),
            _ => Err(Error::BadPartition(s.to_string())),
        }
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u8)
            .collect();
        Partition { parts }
    }

    /// Dimension of the corresponding irreducible representation, by the
    /// hook length formula.
    pub fn hook_dimension(&self) -> usize {
        let n = self.n();
        let conj = self.conjugate();
        let mut num: u128 = 1;
        for k in 1..=n as u128 {
            num *= k;
        }
        let mut den: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len as usize {
                let hook = (len as usize - c) + (conj.parts[c] as usize - r) - 1;
                den *= hook as u128;
            }
        }
        (num / den) as usize
    }
}

/// All partitions of n in descending lexicographic order, from (n) down
/// to (1^n).
pub fn partitions(n: usize) -> Vec<Partition> {
    assert!(n >= 1);
    fn generate(n: u8, max: u8, prefix: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let first_max = max.min(n);
        for first in (1..=first_max).rev() {
            prefix.push(first);
            generate(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    generate(n as u8, n as u8, &mut Vec::new(), &mut out);
    out
}

/// Standard Young tableau: rows increase left to right, columns top to
/// bottom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for &v in r {
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entries read row by row, left to right.
    pub fn row_word(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }

    /// row_of[v] = 0-based row index of value v (index 0 unused).
    pub fn row_of_table(&self) -> Vec<u8> {
        let n = self.shape.n();
        let mut row_of = vec![0u8; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r as u8;
            }
        }
        row_of
    }

    /// Column c entries by increasing row.
    pub fn columns(&self) -> Vec<Vec<u8>> {
        let ncols = self.shape.parts()[0] as usize;
        let mut cols = vec![Vec::new(); ncols];
        for row in &self.rows {
            for (c, &v) in row.iter().enumerate() {
                cols[c].push(v);
            }
        }
        cols
    }
}

/// All standard tableaux of the given shape, ordered lexicographically by
/// row-reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    let parts = shape.parts();
    let mut fill = vec![0usize; parts.len()];
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();

    fn place(
        v: u8,
        n: u8,
        parts: &[u8],
        fill: &mut [usize],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<StandardTableau>,
        shape: &Partition,
    ) {
        if v > n {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..parts.len() {
            let can = fill[r] < parts[r] as usize && (r == 0 || fill[r - 1] > fill[r]);
            if can {
                fill[r] += 1;
                rows[r].push(v);
                place(v + 1, n, parts, fill, rows, out, shape);
                rows[r].pop();
                fill[r] -= 1;
            }
        }
    }

    place(1, n as u8, parts, &mut fill, &mut rows, &mut out, shape);
    out.sort_by_key(|t| t.row_word());
    out
}

/// Clifton matrix A^lambda(pi) on the standard tableaux basis.
///
/// Entry (i,j) is zero when two entries from one row of T_i land in one
/// column of pi.T_j; otherwise it is the sign of the unique column
/// permutation of pi.T_j that aligns it row-wise with T_i.
pub fn clifton_matrix(lambda: &Partition, pi: &Perm, gf: Gf) -> ModMatrix {
    let tableaux = standard_tableaux(lambda);
    clifton_matrix_with(lambda, &tableaux, pi, gf)
}

fn clifton_matrix_with(
    lambda: &Partition,
    tableaux: &[StandardTableau],
    pi: &Perm,
    gf: Gf,
) -> ModMatrix {
    let d = tableaux.len();
    let row_tables: Vec<Vec<u8>> = tableaux.iter().map(|t| t.row_of_table()).collect();
    let col_sets: Vec<Vec<Vec<u8>>> = tableaux.iter().map(|t| t.columns()).collect();
    let ncols = lambda.parts()[0] as usize;
    let mut m = ModMatrix::zeros(d, d, gf);
    let minus_one = gf.neg(1);

    let mut permuted: Vec<Vec<u8>> = vec![Vec::new(); ncols];
    for j in 0..d {
        for (c, col) in col_sets[j].iter().enumerate() {
            permuted[c].clear();
            permuted[c].extend(col.iter().map(|&v| pi.apply(v)));
        }
        'entry: for i in 0..d {
            let row_of = &row_tables[i];
            let mut sign = 1i8;
            for col in permuted.iter().take(ncols) {
                let len = col.len();
                if len == 0 {
                    continue;
                }
                // target rows must be a permutation of 0..len
                let mut seen = 0u16;
                for &v in col {
                    let r = row_of[v as usize] as usize;
                    if r >= len || seen & (1 << r) != 0 {
                        continue 'entry;
                    }
                    seen |= 1 << r;
                }
                // parity of the map (position -> target row)
                for a in 0..len {
                    for b in a + 1..len {
                        if row_of[col[a] as usize] > row_of[col[b] as usize] {
                            sign = -sign;
                        }
                    }
                }
            }
            m.set(i, j, if sign > 0 { 1 } else { minus_one });
        }
    }
    m
}

/// Invert a square matrix over GF(p); None when singular.
pub fn invert(m: &ModMatrix) -> Option<ModMatrix> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let gf = m.gf();
    let mut aug = ModMatrix::zeros(n, 2 * n, gf);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, n + r, 1);
    }
    if aug.rcf() != n {
        return None;
    }
    let mut inv = ModMatrix::zeros(n, n, gf);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, aug.get(r, n + c));
        }
    }
    Some(inv)
}

/// Natural irreducible representation of S_n for one shape, with a
/// per-permutation cache.
///
/// R(pi) is the inverse-transpose twist of the raw Clifton matrices,
/// (A(id)^{-1} A(pi^{-1}))^t. This is still a homomorphism for
/// functional composition, and it is the variant under which the matrix
/// units built from the row/column symmetrizers act as elementary
/// matrices, which the identity extraction relies on.
pub struct NaturalRep {
    lambda: Partition,
    gf: Gf,
    tableaux: Vec<StandardTableau>,
    dim: usize,
    a_id: ModMatrix,
    a_id_inv: ModMatrix,
    cache: RefCell<FxHashMap<Perm, Rc<ModMatrix>>>,
}

impl NaturalRep {
    pub fn new(lambda: &Partition, gf: Gf) -> Result<NaturalRep, Error> {
        let tableaux = standard_tableaux(lambda);
        let dim = tableaux.len();
        let id = Perm::identity(lambda.n());
        let a_id = clifton_matrix_with(lambda, &tableaux, &id, gf);
        let a_id_inv = invert(&a_id).ok_or_else(|| Error::SingularCliftonBase {
            lambda: lambda.to_string(),
        })?;
        Ok(NaturalRep {
            lambda: lambda.clone(),
            gf,
            tableaux,
            dim,
            a_id,
            a_id_inv,
            cache: RefCell::new(FxHashMap::default()),
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gf(&self) -> Gf {
        self.gf
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// Whether A(id) is the identity matrix (required for matrix units).
    pub fn base_is_identity(&self) -> bool {
        self.a_id == ModMatrix::identity(self.dim, self.gf)
    }

    /// Representation matrix R(pi), cached per permutation.
    pub fn rep(&self, pi: &Perm) -> Rc<ModMatrix> {
        if let Some(m) = self.cache.borrow().get(pi) {
            return Rc::clone(m);
        }
        let a = clifton_matrix_with(&self.lambda, &self.tableaux, &pi.inverse(), self.gf);
        let r = Rc::new(self.a_id_inv.mul(&a).transpose());
        self.cache.borrow_mut().insert(pi.clone(), Rc::clone(&r));
        r
    }

    /// The raw Clifton quotient A(id)^{-1} A(pi), without the twist.
    pub fn clifton_rep(&self, pi: &Perm) -> ModMatrix {
        let a = clifton_matrix_with(&self.lambda, &self.tableaux, pi, self.gf);
        self.a_id_inv.mul(&a)
    }

    /// Representation matrix of a group algebra element.
    pub fn rep_of_element(&self, x: &GroupAlgebraElement) -> ModMatrix {
        let mut out = ModMatrix::zeros(self.dim, self.dim, self.gf);
        for (perm, &coeff) in x.terms() {
            let r = self.rep(perm);
            for a in 0..self.dim {
                for b in 0..self.dim {
                    out.add_at(a, b, self.gf.mul(coeff, r.get(a, b)));
                }
            }
        }
        out
    }
}

/// Element of the group algebra of S_n over GF(p); no zero coefficients
/// are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: FxHashMap<Perm, u8>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> GroupAlgebraElement {
        GroupAlgebraElement {
            n,
            terms: FxHashMap::default(),
        }
    }

    pub fn from_perm(p: Perm) -> GroupAlgebraElement {
        let n = p.n();
        let mut terms = FxHashMap::default();
        terms.insert(p, 1u8);
        GroupAlgebraElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &u8)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Perm) -> u8 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Perm, c: u8, gf: Gf) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
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

    pub fn scale(&self, c: u8, gf: Gf) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n);
        if c == 0 {
            return out;
        }
        for (p, &a) in &self.terms {
            out.add_term(p.clone(), gf.mul(a, c), gf);
        }
        out
    }

    pub fn add(&self, other: &GroupAlgebraElement, gf: Gf) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c, gf);
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgebraElement, gf: Gf) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), gf.neg(c), gf);
        }
        out
    }

    /// Convolution product.
    pub fn mul(&self, other: &GroupAlgebraElement, gf: Gf) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (p, &a) in &self.terms {
            for (q, &b) in &other.terms {
                out.add_term(p.compose(q), gf.mul(a, b), gf);
            }
        }
        out
    }

    /// Right translate by a single permutation.
    pub fn mul_perm(&self, q: &Perm, gf: Gf) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (p, &a) in &self.terms {
            out.add_term(p.compose(q), a, gf);
        }
        out
    }
}

fn permutations_of(items: &[u8]) -> Vec<Vec<u8>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Permutations of {1..n} stabilizing each block setwise.
pub fn stabilizer_of(n: usize, blocks: &[Vec<u8>]) -> Vec<Perm> {
    let mut result = vec![Perm::identity(n)];
    for block in blocks {
        let arrangements = permutations_of(block);
        let mut next = Vec::with_capacity(result.len() * arrangements.len());
        for base in &result {
            for arr in &arrangements {
                let mut images = base.images().to_vec();
                for (slot, &val) in block.iter().zip(arr) {
                    images[(*slot - 1) as usize] = val;
                }
                next.push(Perm { images });
            }
        }
        result = next;
    }
    result
}

/// Permutation taking T_i to T_j entry-wise: s(T_i(cell)) = T_j(cell).
pub fn tableau_transition(ti: &StandardTableau, tj: &StandardTableau) -> Perm {
    let n = ti.shape().n();
    let mut images = vec![0u8; n];
    for (ri, rj) in ti.rows().iter().zip(tj.rows()) {
        for (&a, &b) in ri.iter().zip(rj) {
            images[(a - 1) as usize] = b;
        }
    }
    Perm { images }
}

/// Natural representation matrix of one permutation; see
/// [`NaturalRep::rep`] for the cached variant used by the pipelines.
pub fn natural_rep(lambda: &Partition, pi: &Perm, gf: Gf) -> Result<ModMatrix, Error> {
    Ok((*NaturalRep::new(lambda, gf)?.rep(pi)).clone())
}

/// Matrix unit D_ij of the group algebra for the given shape (1-based
/// tableau indices).
///
/// D_ii is the row-symmetrized, column-antisymmetrized sum over the row
/// and column stabilizers of T_i, scaled by d/n!; D_ij = D_ii s_ij^{-1}.
/// Only shapes whose base Clifton matrix is the identity are accepted,
/// since the matrix unit relations are not otherwise guaranteed.
pub fn matrix_unit_element(
    lambda: &Partition,
    i: usize,
    j: usize,
    gf: Gf,
) -> Result<GroupAlgebraElement, Error> {
    let rep = NaturalRep::new(lambda, gf)?;
    matrix_unit_with(&rep, i, j)
}

/// As [`matrix_unit_element`], reusing an existing representation table.
pub fn matrix_unit_with(
    rep: &NaturalRep,
    i: usize,
    j: usize,
) -> Result<GroupAlgebraElement, Error> {
    let gf = rep.gf();
    let lambda = rep.lambda();
    let tableaux = rep.tableaux();
    let d = rep.dim();
    assert!(
        i >= 1 && i <= d && j >= 1 && j <= d,
        "tableau index out of range"
    );
    if !rep.base_is_identity() {
        return Err(Error::MatrixUnitUnavailable {
            lambda: lambda.to_string(),
        });
    }
    let n = lambda.n();
    let ti = &tableaux[i - 1];
    let rows: Vec<Vec<u8>> = ti.rows().to_vec();
    let cols: Vec<Vec<u8>> = ti.columns();
    let row_group = stabilizer_of(n, &rows);
    let col_group = stabilizer_of(n, &cols);

    let mut factorial = 1u64;
    for k in 2..=n as u64 {
        factorial = factorial * k % gf.p() as u64;
    }
    let scale = gf.mul(gf.from_i64(d as i64), gf.inv(factorial as u8));

    // Row factor first, column factor second. Under the twisted natural
    // representation R(D_ij) is exactly the elementary matrix e_ij; with
    // the opposite order one gets a conjugated system of matrix units.
    let mut d_ii = GroupAlgebraElement::zero(n);
    for sigma in &row_group {
        for tau in &col_group {
            let coeff = if tau.sign() > 0 { scale } else { gf.neg(scale) };
            d_ii.add_term(sigma.compose(tau), coeff, gf);
        }
    }
    if i == j {
        return Ok(d_ii);
    }
    let s_ij = tableau_transition(ti, &tableaux[j - 1]);
    Ok(d_ii.mul_perm(&s_ij.inverse(), gf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf() -> Gf {
        Gf::new(101, 7).unwrap()
    }

    #[test]
    fn perm_compose_inverse() {
        let p = Perm::from_images(vec![2, 3, 1]).unwrap();
        let q = Perm::from_images(vec![1, 3, 2]).unwrap();
        // (p.compose(q))(x) = p(q(x))
        assert_eq!(p.compose(&q).images(), &[2, 1, 3]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.sign(), 1);
        assert_eq!(q.sign(), -1);
    }

    #[test]
    fn perm_lex_ranks() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for (k, p) in all.iter().enumerate() {
            assert_eq!(p.lex_rank(), k);
            assert_eq!(&Perm::from_lex_rank(4, k), p);
        }
        assert_eq!(all[0], Perm::identity(4));
        assert!(all.windows(2).all(|w| w[0].images() < w[1].images()));
    }

    #[test]
    fn partitions_order_and_counts() {
        let p7 = partitions(7);
        assert_eq!(p7.len(), 15);
        assert_eq!(p7[0].to_string(), "7");
        assert_eq!(p7[14].to_string(), "1111111");
        assert_eq!(partitions(1).len(), 1);
        assert_eq!(partitions(5).len(), 7);
        let order: Vec<String> = p7.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            order,
            vec![
                "7", "61", "52", "511", "43", "421", "4111", "331", "322", "3211", "31111", "2221",
                "22111", "211111", "1111111"
            ]
        );
    }

    #[test]
    fn partition_parse_and_conjugate() {
        let p = Partition::parse("421").unwrap();
        assert_eq!(p.parts(), &[4, 2, 1]);
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert!(Partition::parse("124").is_err());
        assert!(Partition::parse("").is_err());
    }

    #[test]
    fn tableau_counts_match_hook_formula() {
        for n in [3usize, 5, 7] {
            let mut total = 0usize;
            for lam in partitions(n) {
                let d = standard_tableaux(&lam).len();
                assert_eq!(d, lam.hook_dimension(), "shape {lam}");
                total += d * d;
            }
            let fact: usize = (1..=n).product();
            assert_eq!(total, fact, "sum of squares for n={n}");
        }
    }

    #[test]
    fn tableaux_31111_are_display_ordered() {
        let lam = Partition::parse("31111").unwrap();
        let tabs = standard_tableaux(&lam);
        assert_eq!(tabs.len(), 15);
        assert_eq!(tabs[0].rows()[0], vec![1, 2, 3]);
        // first rows run 123,124,...,167 in lexicographic order
        let first_rows: Vec<Vec<u8>> = tabs.iter().map(|t| t.rows()[0].clone()).collect();
        let mut sorted = first_rows.clone();
        sorted.sort();
        assert_eq!(first_rows, sorted);
        assert_eq!(first_rows[14], vec![1, 6, 7]);
        // single column below the first row
        for t in &tabs {
            assert_eq!(t.rows().len(), 5);
        }
    }

    #[test]
    fn clifton_identity_cases() {
        let g = gf();
        let lam = Partition::parse("31111").unwrap();
        let a = clifton_matrix(&lam, &Perm::identity(7), g);
        assert_eq!(a, ModMatrix::identity(15, g));

        // single row: trivial representation
        let row = Partition::parse("7").unwrap();
        for pi in [
            Perm::from_images(vec![2, 1, 3, 4, 5, 6, 7]).unwrap(),
            Perm::identity(7),
        ] {
            let a = clifton_matrix(&row, &pi, g);
            assert_eq!(a.get(0, 0), 1);
        }

        // single column: sign representation
        let col = Partition::new(vec![1; 5]).unwrap();
        let swap = Perm::from_images(vec![2, 1, 3, 4, 5]).unwrap();
        let a = clifton_matrix(&col, &swap, g);
        assert_eq!(a.get(0, 0), g.neg(1));
    }

    #[test]
    fn natural_rep_is_homomorphism_s4() {
        let g = gf();
        let perms = Perm::all(4);
        for lam in partitions(4) {
            let rep = NaturalRep::new(&lam, g).unwrap();
            assert_eq!(rep.dim(), lam.hook_dimension());
            assert_eq!(
                *rep.rep(&Perm::identity(4)),
                ModMatrix::identity(rep.dim(), g)
            );
            for p in &perms {
                for q in &perms {
                    let lhs = rep.rep(&p.compose(q));
                    let rhs = rep.rep(p).mul(&rep.rep(q));
                    assert_eq!(*lhs, rhs, "shape {lam}, {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn group_algebra_mul_is_associative() {
        let g = gf();
        let mut a = GroupAlgebraElement::from_perm(Perm::from_images(vec![2, 3, 1]).unwrap());
        a.add_term(Perm::identity(3), 5, g);
        let b = GroupAlgebraElement::from_perm(Perm::from_images(vec![1, 3, 2]).unwrap());
        let mut c = GroupAlgebraElement::from_perm(Perm::from_images(vec![3, 2, 1]).unwrap());
        c.add_term(Perm::from_images(vec![2, 1, 3]).unwrap(), 7, g);
        let lhs = a.mul(&b, g).mul(&c, g);
        let rhs = a.mul(&b.mul(&c, g), g);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn full_symmetrizer_is_idempotent() {
        let g = gf();
        let row = Partition::parse("4").unwrap();
        let d11 = matrix_unit_element(&row, 1, 1, g).unwrap();
        assert_eq!(d11.len(), 24);
        let sq = d11.mul(&d11, g);
        assert_eq!(sq, d11);
    }

    #[test]
    fn matrix_unit_relations_31111() {
        let g = gf();
        let lam = Partition::parse("31111").unwrap();
        let rep = NaturalRep::new(&lam, g).unwrap();
        let d12 = matrix_unit_with(&rep, 1, 2).unwrap();
        let d23 = matrix_unit_with(&rep, 2, 3).unwrap();
        let d13 = matrix_unit_with(&rep, 1, 3).unwrap();
        let d31 = matrix_unit_with(&rep, 3, 1).unwrap();
        assert!(d12.len() <= 720);
        assert_eq!(d12.mul(&d23, g), d13);
        assert!(d12.mul(&d13, g).is_empty());
        let d11 = matrix_unit_with(&rep, 1, 1).unwrap();
        assert_eq!(d13.mul(&d31, g), d11);
    }

    #[test]
    fn matrix_units_realize_elementary_matrices_31111() {
        let g = gf();
        let lam = Partition::parse("31111").unwrap();
        let rep = NaturalRep::new(&lam, g).unwrap();
        for (i, j) in [(1usize, 1usize), (1, 2), (2, 5), (1, 15)] {
            let dij = matrix_unit_with(&rep, i, j).unwrap();
            let m = rep.rep_of_element(&dij);
            let mut expected = ModMatrix::zeros(15, 15, g);
            expected.set(i - 1, j - 1, 1);
            assert_eq!(m, expected, "D_{i}{j}");
        }
    }

    #[test]
    fn matrix_unit_rejected_when_base_not_identity() {
        let g = gf();
        // lambda = 22: A(id) has an off-diagonal entry
        let lam = Partition::parse("22").unwrap();
        let gf4 = Gf::new(101, 4).unwrap();
        let err = matrix_unit_element(&lam, 1, 1, gf4);
        let rep = NaturalRep::new(&lam, g).unwrap();
        if rep.base_is_identity() {
            assert!(err.is_ok());
        } else {
            assert!(matches!(err, Err(Error::MatrixUnitUnavailable { .. })));
        }
    }
}
