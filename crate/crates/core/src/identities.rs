//! Identity discovery in degrees 3 and 5: expansion matrices, liftings,
//! symmetric-group module spans, greedy module generators, and the
//! degree-3 submodule lattice of the free binary 2-operation algebra.

use serde::Serialize;

use crate::error::Error;
use crate::freealg::{TtBasis, TtOp, TtTree, dd_basis, parse_tt_polynomial, render_tt, tt_basis};
use crate::modlinalg::{Gf, IdentityVector, ModMatrix, RowSpan, sort_by_length};
use crate::products::{Expander, OperationKind};
use crate::rewrite::LinComb;
use crate::symmetric::Perm;

/// Convert a TT polynomial to its coefficient vector over the ordered
/// monomial basis.
pub fn to_vector(f: &LinComb<TtTree>, basis: &TtBasis) -> Result<IdentityVector, Error> {
    let mut coeffs = vec![0u8; basis.dim()];
    for (m, &c) in f.iter() {
        coeffs[basis.index_of(m)?] = c;
    }
    Ok(IdentityVector::new(coeffs))
}

/// Inverse of [`to_vector`].
pub fn from_vector(v: &IdentityVector, basis: &TtBasis, gf: Gf) -> LinComb<TtTree> {
    let mut out = LinComb::zero();
    for (idx, &c) in v.coeffs.iter().enumerate() {
        if c != 0 {
            out.add_term(basis.monomial_at(idx), c, gf);
        }
    }
    out
}

/// Human-readable signed sum, terms in basis order, coefficients as
/// symmetric representatives.
pub fn render_polynomial(f: &LinComb<TtTree>, basis: &TtBasis, gf: Gf) -> String {
    let mut terms: Vec<(usize, &TtTree, u8)> = f
        .iter()
        .map(|(m, &c)| {
            (
                basis
                    .index_of(m)
                    .expect("renderable terms must be in basis"),
                m,
                c,
            )
        })
        .collect();
    terms.sort_by_key(|&(idx, _, _)| idx);
    let mut s = String::new();
    for (_, m, c) in terms {
        let r = gf.symmetric_rep(c);
        s.push_str(if r < 0 { "- " } else { "+ " });
        let mag = r.unsigned_abs();
        if mag != 1 {
            s.push_str(&mag.to_string());
            s.push(' ');
        }
        s.push_str(&render_tt(m));
        s.push(' ');
    }
    s.pop();
    s
}

/// Parse a signed sum of TT terms into a combination mod p.
pub fn polynomial_from_text(text: &str, gf: Gf) -> Result<LinComb<TtTree>, Error> {
    let mut out = LinComb::zero();
    for (c, m) in parse_tt_polynomial(text)? {
        out.add_term(m, gf.from_i64(c), gf);
    }
    Ok(out)
}

/// The ternary right-symmetric combination
/// [a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2.
pub fn ternary_right_symmetric(gf: Gf) -> LinComb<TtTree> {
    polynomial_from_text("[a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2", gf)
        .expect("fixed text parses")
}

/// The three degree-5 generators for the pre-Lie triple products beyond
/// the right-symmetric consequences.
pub fn pre_lie_degree5_identities(gf: Gf) -> Vec<LinComb<TtTree>> {
    PRE_LIE_5_TEXT
        .iter()
        .map(|t| polynomial_from_text(t, gf).expect("fixed text parses"))
        .collect()
}

const PRE_LIE_5_TEXT: [&str; 3] = [
    "[[a,b,c]_1,d,e]_2 - [[a,d,e]_2,b,c]_1 + [a,[d,e,b]_1,c]_1 - [a,[b,d,e]_2,c]_1 \
     + [a,b,[d,e,c]_1]_1 - [a,b,[c,d,e]_2]_1",
    "[[a,b,c]_1,d,e]_1 - [[a,d,b]_1,c,e]_1 + [[a,d,c]_1,b,e]_1 - [[a,c,b]_1,d,e]_1 \
     - [a,[b,c,d]_1,e]_1 + [a,[d,b,c]_1,e]_1 - [a,[d,c,b]_1,e]_1 + [a,[c,b,d]_1,e]_1",
    "[[a,b,c]_1,d,e]_2 - [[a,d,e]_2,b,c]_1 + [[a,d,e]_2,b,c]_2 - [[a,b,c]_2,d,e]_2 \
     + [a,[d,e,b]_1,c]_1 + [a,[d,e,c]_1,b]_1 - [a,[b,c,e]_1,d]_1 - [a,[d,e,c]_1,b]_2 \
     + [a,[b,c,e]_1,d]_2 - [a,[b,d,e]_2,c]_1 - [a,[c,d,e]_2,b]_1 - [a,[d,b,c]_2,e]_2 \
     + [a,[b,d,e]_2,c]_2 + [a,[c,d,e]_2,b]_2 + [a,d,[b,c,e]_1]_1 - [a,d,[e,b,c]_2]_2",
];

/// The five degree-5 generators for the pre-Jordan triple products.
pub fn pre_jordan_degree5_identities(gf: Gf) -> Vec<LinComb<TtTree>> {
    PRE_JORDAN_5_TEXT
        .iter()
        .map(|t| polynomial_from_text(t, gf).expect("fixed text parses"))
        .collect()
}

const PRE_JORDAN_5_TEXT: [&str; 5] = [
    // 1
    "[[a,b,c]_1,d,e]_1 + [[b,a,c]_1,d,e]_1 + [[c,a,b]_2,d,e]_1 + [[c,b,a]_2,d,e]_1 \
     - [a,[b,c,d]_1,e]_1 - [a,[c,b,d]_1,e]_1 - [b,[a,c,d]_1,e]_1 - [b,[c,a,d]_1,e]_1 \
     - [c,[a,b,d]_1,e]_1 - [c,[b,a,d]_1,e]_1 + [a,[c,b,d]_2,e]_1 + [b,[c,a,d]_2,e]_1",
    // 2
    "[[b,d,a]_1,c,e]_2 + [[b,d,c]_1,a,e]_2 + [[a,b,d]_2,c,e]_2 + [[c,b,d]_2,a,e]_2 \
     - [a,[b,d,c]_1,e]_2 - [c,[b,d,a]_1,e]_2 - [a,[c,b,d]_2,e]_2 - [c,[a,b,d]_2,e]_2 \
     + [a,c,[b,d,e]_1]_1 - [b,d,[a,c,e]_1]_1 - [b,d,[c,a,e]_1]_1 + [c,a,[b,d,e]_1]_1",
    // 3
    "[[b,c,d]_1,a,e]_1 + [[d,b,c]_2,a,e]_1 + [a,[b,c,d]_1,e]_1 - [a,[b,c,d]_1,e]_2 \
     - [d,[b,c,a]_1,e]_2 + [a,[d,b,c]_2,e]_1 - [a,[d,b,c]_2,e]_2 - [d,[a,b,c]_2,e]_2 \
     - [b,c,[a,d,e]_1]_1 - [b,c,[d,a,e]_1]_1 + [d,a,[b,c,e]_1]_2 + [b,c,[a,d,e]_2]_1",
    // 4
    "[a,[b,c,d]_1,e]_2 + [a,[c,b,d]_1,e]_2 + [a,[d,b,c]_2,e]_2 + [a,[d,c,b]_2,e]_2 \
     - [a,b,[c,d,e]_1]_2 - [a,b,[d,c,e]_1]_2 - [a,c,[b,d,e]_1]_2 - [a,c,[d,b,e]_1]_2 \
     - [a,d,[b,c,e]_1]_2 - [a,d,[c,b,e]_1]_2 + [a,b,[d,c,e]_2]_2 + [a,c,[d,b,e]_2]_2",
    // 5
    "[[a,c,b]_1,d,e]_2 + [[a,c,d]_1,b,e]_2 + [[c,a,b]_1,d,e]_2 + [[c,a,d]_1,b,e]_2 \
     + [[c,d,b]_1,a,e]_2 + [[d,a,b]_1,c,e]_2 + [[d,a,c]_1,b,e]_2 + [[d,b,a]_1,c,e]_2 \
     + [[d,b,c]_1,a,e]_2 + [[d,c,b]_1,a,e]_2 + [[a,d,b]_2,c,e]_2 + [[b,a,c]_2,d,e]_2 \
     + [[b,c,a]_2,d,e]_2 + [[b,c,d]_2,a,e]_2 + [[b,d,a]_2,c,e]_2 + [[b,d,c]_2,a,e]_2 \
     + [[c,d,a]_2,b,e]_2 + [[c,d,b]_2,a,e]_2 + [[d,a,c]_2,b,e]_2 + [[d,c,a]_2,b,e]_2 \
     - [a,[b,c,d]_1,e]_1 - [a,[b,d,c]_1,e]_1 - [a,[c,b,d]_1,e]_1 - [a,[c,d,b]_1,e]_1 \
     - [a,[d,b,c]_1,e]_1 - [a,[d,c,b]_1,e]_1 - [b,[a,c,d]_1,e]_1 - [b,[a,d,c]_1,e]_1 \
     - [b,[c,a,d]_1,e]_1 - [b,[c,d,a]_1,e]_1 - [b,[d,a,c]_1,e]_1 - [b,[d,c,a]_1,e]_1 \
     - [c,[a,b,d]_1,e]_1 - [c,[a,d,b]_1,e]_1 - [c,[b,a,d]_1,e]_1 - [c,[b,d,a]_1,e]_1 \
     - [c,[d,a,b]_1,e]_1 - [c,[d,b,a]_1,e]_1 - [d,[a,b,c]_1,e]_1 - [d,[a,c,b]_1,e]_1 \
     - [d,[b,a,c]_1,e]_1 - [d,[b,c,a]_1,e]_1 - [d,[c,a,b]_1,e]_1 - [d,[c,b,a]_1,e]_1 \
     - [a,[d,b,c]_1,e]_2 + [b,[a,d,c]_1,e]_2 + [c,[a,d,b]_1,e]_2 - [c,[d,b,a]_1,e]_2 \
     - [a,[c,d,b]_2,e]_2 + [b,[c,a,d]_2,e]_2 - [c,[a,d,b]_2,e]_2 + [c,[b,a,d]_2,e]_2 \
     + [a,b,[c,d,e]_1]_1 + [a,b,[d,c,e]_1]_1 + [a,c,[d,b,e]_1]_1 + [a,d,[b,c,e]_1]_1 \
     + [a,d,[c,b,e]_1]_1 + [b,a,[c,d,e]_1]_1 + [b,a,[d,c,e]_1]_1 + [b,c,[d,a,e]_1]_1 \
     + [b,d,[a,c,e]_1]_1 + [b,d,[c,a,e]_1]_1 + [c,a,[d,b,e]_1]_1 + [c,b,[d,a,e]_1]_1 \
     - [b,a,[c,d,e]_1]_2 - [b,a,[d,c,e]_1]_2 - [b,c,[a,d,e]_1]_2 - [b,c,[d,a,e]_1]_2 \
     - [b,d,[a,c,e]_1]_2 - [b,d,[c,a,e]_1]_2 - [c,a,[d,b,e]_2]_2 - [d,a,[c,b,e]_2]_2",
];

/// The expansion matrix of one degree: entry (i, j) is the coefficient
/// of the i-th normal DD-monomial in the normalized expansion of the
/// j-th TT-monomial.
pub fn build_expansion_matrix(
    degree: usize,
    op: OperationKind,
    gf: Gf,
) -> Result<ModMatrix, Error> {
    if degree != 3 && degree != 5 {
        return Err(Error::BadDegree {
            degree,
            reason: "full expansion matrices are built in degrees 3 and 5 only",
        });
    }
    let tb = tt_basis(degree)?;
    let db = dd_basis(degree);
    let mut ex = Expander::new(op, gf);
    let mut m = ModMatrix::zeros(db.dim(), tb.dim(), gf);
    for j in 0..tb.dim() {
        let mono = tb.monomial_at(j);
        let e = ex.expand_monomial(&mono);
        for (t, &c) in e.iter() {
            m.set(db.index_of(t)?, j, c);
        }
    }
    Ok(m)
}

/// The 2(n+3) canonical embeddings of a degree-n polynomial into degree
/// n+2: substitute a bracket of the two new variables into each old
/// variable, then bracket the polynomial with the new variables in the
/// three positions; each for both operations.
pub fn liftings(f: &LinComb<TtTree>, degree: usize, gf: Gf) -> Vec<LinComb<TtTree>> {
    let n = degree as u8;
    let x1 = n + 1;
    let x2 = n + 2;
    let mut out = Vec::with_capacity(2 * (degree + 3));
    for k in 1..=n {
        for op in [TtOp::Op1, TtOp::Op2] {
            let replacement = TtTree::app(op, TtTree::var(k), TtTree::var(x1), TtTree::var(x2));
            out.push(f.map_monomials(gf, |m| m.substitute(k, &replacement)));
        }
    }
    for pos in 0..3 {
        for op in [TtOp::Op1, TtOp::Op2] {
            out.push(f.map_monomials(gf, |m| match pos {
                0 => TtTree::app(op, m.clone(), TtTree::var(x1), TtTree::var(x2)),
                1 => TtTree::app(op, TtTree::var(x1), m.clone(), TtTree::var(x2)),
                _ => TtTree::app(op, TtTree::var(x1), TtTree::var(x2), m.clone()),
            }));
        }
    }
    out
}

/// Index map on permutation ranks induced by left multiplication:
/// rank(tau) -> rank(sigma o tau).
pub fn perm_rank_map(sigma: &Perm, n: usize) -> Vec<usize> {
    Perm::all(n)
        .iter()
        .map(|tau| sigma.compose(tau).lex_rank())
        .collect()
}

/// Relabel an identity vector by a permutation, block by block per type.
pub fn permute_vector(v: &[u8], map: &[usize], factorial: usize) -> Vec<u8> {
    let mut out = vec![0u8; v.len()];
    for t in 0..v.len() / factorial {
        let base = t * factorial;
        for (rt, &mapped) in map.iter().enumerate() {
            out[base + mapped] = v[base + rt];
        }
    }
    out
}

/// Rank (and RCF) of the span of all permutations of the given
/// polynomials, as vectors over the TT basis.
pub fn symmetrized_span_rank(
    gens: &[LinComb<TtTree>],
    degree: usize,
    gf: Gf,
) -> Result<(usize, ModMatrix), Error> {
    let basis = tt_basis(degree)?;
    let perms = Perm::all(degree);
    let mut rows = Vec::with_capacity(gens.len() * perms.len());
    for g in gens {
        let base = to_vector(g, &basis)?;
        for sigma in &perms {
            let map = perm_rank_map(sigma, degree);
            rows.push(permute_vector(&base.coeffs, &map, basis.factorial()));
        }
    }
    let mut m = ModMatrix::from_rows(&rows, basis.dim(), gf);
    let rank = m.rcf();
    Ok((rank, m))
}

/// One candidate examined by the greedy module-generator scan.
#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    /// Position in the length-sorted nullspace basis (0-based).
    pub null_index: usize,
    /// Rank of the running span after absorbing all its permutations.
    pub rank_after: usize,
    /// False when the candidate was later found dependent on the others.
    pub kept: bool,
}

/// Result of the greedy module-generator algorithm.
#[derive(Clone, Debug)]
pub struct ModuleGenerators {
    pub base_rank: usize,
    pub candidates: Vec<Candidate>,
    /// Vectors of the kept generators, in candidate order.
    pub generators: Vec<IdentityVector>,
}

impl ModuleGenerators {
    /// base_rank followed by the rank after each accepted candidate.
    pub fn rank_trace(&self) -> Vec<usize> {
        let mut t = vec![self.base_rank];
        t.extend(self.candidates.iter().map(|c| c.rank_after));
        t
    }
}

/// Greedy scan: absorb each sorted nullspace vector's permutations into
/// the running span; record the vectors that grow the rank; then drop
/// any recorded vector lying in the module generated by the others.
pub fn module_generators(
    sorted_null: &[IdentityVector],
    old: &[LinComb<TtTree>],
    degree: usize,
    gf: Gf,
) -> Result<ModuleGenerators, Error> {
    let basis = tt_basis(degree)?;
    let factorial = basis.factorial();
    let perms = Perm::all(degree);
    let maps: Vec<Vec<usize>> = perms.iter().map(|s| perm_rank_map(s, degree)).collect();

    let mut span = RowSpan::new(basis.dim(), gf);
    for g in old {
        let v = to_vector(g, &basis)?;
        for map in &maps {
            span.absorb(&permute_vector(&v.coeffs, map, factorial));
        }
    }
    let base_rank = span.rank();

    let mut candidates = Vec::new();
    let mut accepted: Vec<usize> = Vec::new();
    for (idx, v) in sorted_null.iter().enumerate() {
        let mut grew = false;
        for map in &maps {
            if span.absorb(&permute_vector(&v.coeffs, map, factorial)) {
                grew = true;
            }
        }
        if grew {
            candidates.push(Candidate {
                null_index: idx,
                rank_after: span.rank(),
                kept: true,
            });
            accepted.push(idx);
        }
    }

    // Dependence pruning: a candidate is dropped when it lies in the
    // span of the old identities together with all other retained
    // candidates.
    let mut retained: Vec<bool> = vec![true; accepted.len()];
    for k in 0..accepted.len() {
        let mut others = RowSpan::new(basis.dim(), gf);
        for g in old {
            let v = to_vector(g, &basis)?;
            for map in &maps {
                others.absorb(&permute_vector(&v.coeffs, map, factorial));
            }
        }
        for (k2, &idx2) in accepted.iter().enumerate() {
            if k2 == k || !retained[k2] {
                continue;
            }
            for map in &maps {
                others.absorb(&permute_vector(&sorted_null[idx2].coeffs, map, factorial));
            }
        }
        if others.contains(&sorted_null[accepted[k]].coeffs) {
            retained[k] = false;
            candidates[k].kept = false;
        }
    }

    let generators = accepted
        .iter()
        .enumerate()
        .filter(|&(k, _)| retained[k])
        .map(|(_, &idx)| sorted_null[idx].clone())
        .collect();
    Ok(ModuleGenerators {
        base_rank,
        candidates,
        generators,
    })
}

/// Whether a TT polynomial expands and normalizes to zero.
pub fn verify_identity(f: &LinComb<TtTree>, op: OperationKind, gf: Gf) -> bool {
    Expander::new(op, gf).is_identity(f)
}

/// Expansion check through dense index accumulation instead of tree
/// maps; the right tool for polynomials with tens of thousands of terms.
pub fn verify_identity_dense(
    f: &LinComb<TtTree>,
    op: OperationKind,
    gf: Gf,
) -> Result<bool, Error> {
    let Some((first, _)) = f.iter().next() else {
        return Ok(true);
    };
    let degree = first.degree();
    let tb = tt_basis(degree)?;
    let db = dd_basis(degree);
    let mut ex = Expander::new(op, gf);
    // per TT type: the normalized expansion as (dd type, leaf word, coeff)
    let mut per_type: Vec<Option<Vec<(usize, Perm, u8)>>> = vec![None; tb.num_types()];
    let mut acc = vec![0u8; db.dim()];
    let factorial = db.factorial();
    for (m, &c) in f.iter() {
        let (t, sigma) = tb.split(m)?;
        if per_type[t].is_none() {
            let e = ex.expansion_of_type(&tb.types()[t]);
            let mut entries = Vec::with_capacity(e.len());
            for (dd, &cc) in e.iter() {
                let (j, tau) = db.split(dd)?;
                entries.push((j, tau, cc));
            }
            per_type[t] = Some(entries);
        }
        for (j, tau, cc) in per_type[t].as_ref().unwrap() {
            let idx = j * factorial + sigma.compose(tau).lex_rank();
            acc[idx] = gf.add(acc[idx], gf.mul(c, *cc));
        }
    }
    Ok(acc.iter().all(|&x| x == 0))
}

/// Dimensions of the submodule lattice of the 48-dimensional degree-3
/// multilinear space on two binary operations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub dias: usize,
    pub dend: usize,
    pub tlie: usize,
    pub tjor: usize,
    pub dias_plus_tlie: usize,
    pub dias_cap_tlie: usize,
    pub dend_plus_tlie: usize,
    pub dend_cap_tlie: usize,
    pub dias_plus_tjor: usize,
    pub dias_cap_tjor: usize,
    pub dend_plus_tjor: usize,
    pub dend_cap_tjor: usize,
    pub dend_plus_tlie_plus_tjor: usize,
    pub dias_plus_tlie_plus_tjor: usize,
}

/// A monomial of the free algebra on two binary operations in degree 3:
/// association side, the two operation indices, and the variable word.
#[derive(Clone, Copy)]
struct Bb3Term {
    right_assoc: bool,
    op_outerless: (u8, u8),
    word: [u8; 3],
    coeff: i8,
}

fn bb3_index(right_assoc: bool, ops: (u8, u8), word: &[u8; 3]) -> usize {
    let rank = Perm::from_images(word.to_vec())
        .expect("bb3 word")
        .lex_rank();
    (right_assoc as usize) * 24 + ((ops.0 as usize - 1) * 2 + (ops.1 as usize - 1)) * 6 + rank
}

fn bb3_vector(terms: &[Bb3Term], gf: Gf) -> Vec<u8> {
    let mut v = vec![0u8; 48];
    for t in terms {
        let idx = bb3_index(t.right_assoc, t.op_outerless, &t.word);
        v[idx] = gf.add(v[idx], gf.from_i64(t.coeff as i64));
    }
    v
}

/// Rows of the S_3-span of the given degree-3 vectors.
fn bb3_span_rows(gens: &[Vec<u8>], gf: Gf) -> Vec<Vec<u8>> {
    let perms = Perm::all(3);
    let mut rows = Vec::new();
    for g in gens {
        for sigma in &perms {
            let map = perm_rank_map(sigma, 3);
            rows.push(permute_vector(g, &map, 6));
        }
    }
    let _ = gf;
    rows
}

fn bb3_rank(rowsets: &[&[Vec<u8>]], gf: Gf) -> usize {
    let all: Vec<Vec<u8>> = rowsets.iter().flat_map(|r| r.iter().cloned()).collect();
    let mut m = ModMatrix::from_rows(&all, 48, gf);
    m.rcf()
}

/// Compute the full degree-3 lattice.
pub fn degree3_lattice(gf: Gf) -> LatticeReport {
    let t = |ra: bool, ops: (u8, u8), w: [u8; 3], c: i8| Bb3Term {
        right_assoc: ra,
        op_outerless: ops,
        word: w,
        coeff: c,
    };
    let abc = [1, 2, 3];
    let left = false;
    let right = true;

    // Axioms for algebras with two associative-style products, as
    // differences in the 48-dimensional space (op 1 = left product,
    // op 2 = right product).
    let dias_axioms: Vec<Vec<u8>> = vec![
        bb3_vector(&[t(left, (1, 1), abc, 1), t(right, (1, 1), abc, -1)], gf),
        bb3_vector(&[t(right, (1, 1), abc, 1), t(right, (1, 2), abc, -1)], gf),
        bb3_vector(&[t(left, (2, 1), abc, 1), t(right, (2, 1), abc, -1)], gf),
        bb3_vector(&[t(left, (1, 2), abc, 1), t(right, (2, 2), abc, -1)], gf),
        bb3_vector(&[t(left, (2, 2), abc, 1), t(right, (2, 2), abc, -1)], gf),
    ];
    // Dendriform axioms (op 1 = <, op 2 = >).
    let dend_axioms: Vec<Vec<u8>> = vec![
        bb3_vector(&[t(left, (2, 1), abc, 1), t(right, (2, 1), abc, -1)], gf),
        bb3_vector(
            &[
                t(left, (1, 1), abc, 1),
                t(right, (1, 1), abc, -1),
                t(right, (1, 2), abc, -1),
            ],
            gf,
        ),
        bb3_vector(
            &[
                t(right, (2, 2), abc, 1),
                t(left, (2, 2), abc, -1),
                t(left, (1, 2), abc, -1),
            ],
            gf,
        ),
    ];
    // Triple products of the pre-Lie product a.b = a o1 b - b o2 a.
    let tlie_gens: Vec<Vec<u8>> = vec![
        bb3_vector(
            &[
                t(left, (1, 1), [1, 2, 3], 1),
                t(left, (2, 1), [2, 1, 3], -1),
                t(right, (2, 1), [3, 1, 2], -1),
                t(right, (2, 2), [3, 2, 1], 1),
            ],
            gf,
        ),
        bb3_vector(
            &[
                t(right, (1, 1), [1, 2, 3], 1),
                t(right, (1, 2), [1, 3, 2], -1),
                t(left, (1, 2), [2, 3, 1], -1),
                t(left, (2, 2), [3, 2, 1], 1),
            ],
            gf,
        ),
    ];
    // Triple products of the pre-Jordan product a.b = a o2 b + b o1 a.
    let tjor_gens: Vec<Vec<u8>> = vec![
        bb3_vector(
            &[
                t(left, (2, 2), [1, 2, 3], 1),
                t(left, (1, 2), [2, 1, 3], 1),
                t(right, (1, 2), [3, 1, 2], 1),
                t(right, (1, 1), [3, 2, 1], 1),
            ],
            gf,
        ),
        bb3_vector(
            &[
                t(right, (2, 2), [1, 2, 3], 1),
                t(right, (2, 1), [1, 3, 2], 1),
                t(left, (2, 1), [2, 3, 1], 1),
                t(left, (1, 1), [3, 2, 1], 1),
            ],
            gf,
        ),
    ];

    let dias = bb3_span_rows(&dias_axioms, gf);
    let dend = bb3_span_rows(&dend_axioms, gf);
    let tlie = bb3_span_rows(&tlie_gens, gf);
    let tjor = bb3_span_rows(&tjor_gens, gf);

    let dim_dias = bb3_rank(&[&dias], gf);
    let dim_dend = bb3_rank(&[&dend], gf);
    let dim_tlie = bb3_rank(&[&tlie], gf);
    let dim_tjor = bb3_rank(&[&tjor], gf);
    let dias_plus_tlie = bb3_rank(&[&dias, &tlie], gf);
    let dend_plus_tlie = bb3_rank(&[&dend, &tlie], gf);
    let dias_plus_tjor = bb3_rank(&[&dias, &tjor], gf);
    let dend_plus_tjor = bb3_rank(&[&dend, &tjor], gf);

    LatticeReport {
        dias: dim_dias,
        dend: dim_dend,
        tlie: dim_tlie,
        tjor: dim_tjor,
        dias_plus_tlie,
        dias_cap_tlie: dim_dias + dim_tlie - dias_plus_tlie,
        dend_plus_tlie,
        dend_cap_tlie: dim_dend + dim_tlie - dend_plus_tlie,
        dias_plus_tjor,
        dias_cap_tjor: dim_dias + dim_tjor - dias_plus_tjor,
        dend_plus_tjor,
        dend_cap_tjor: dim_dend + dim_tjor - dend_plus_tjor,
        dend_plus_tlie_plus_tjor: bb3_rank(&[&dend, &tlie, &tjor], gf),
        dias_plus_tlie_plus_tjor: bb3_rank(&[&dias, &tlie, &tjor], gf),
    }
}

/// One reported module generator.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    /// 1-based ordinal among the accepted candidates.
    pub candidate: usize,
    /// Number of monomials.
    pub terms: usize,
    /// Rendered polynomial.
    pub text: String,
    /// Sparse coefficient vector: (basis index, symmetric representative),
    /// by increasing index.
    pub vector: Vec<(usize, i64)>,
}

/// JSON-facing result of a degree-3/5 analysis run.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub degree: usize,
    pub op: String,
    pub prime: u16,
    pub tt_dim: usize,
    pub dd_dim: usize,
    pub rank: usize,
    pub nullity: usize,
    pub base_rank: usize,
    pub rank_trace: Vec<usize>,
    pub candidates: Vec<Candidate>,
    pub generators: Vec<GeneratorReport>,
    pub warnings: Vec<String>,
    pub checks_passed: bool,
}

/// Full analysis pipeline for degree 3 or 5: expansion matrix, rank and
/// canonical nullspace, then module generators over the consequences of
/// the lower degree.
pub fn analyze(degree: usize, op: OperationKind, gf: Gf) -> Result<AnalyzeReport, Error> {
    let basis = tt_basis(degree)?;
    let mut matrix = build_expansion_matrix(degree, op, gf)?;
    let dd_dim = matrix.rows();
    let rank = matrix.rcf();
    let nullity = basis.dim() - rank;
    let null = matrix.nullspace_basis();
    let sorted = sort_by_length(null, gf);

    let old: Vec<LinComb<TtTree>> = if degree == 5 && op == OperationKind::PreLie {
        liftings(&ternary_right_symmetric(gf), 3, gf)
    } else {
        Vec::new()
    };
    let gens = module_generators(&sorted, &old, degree, gf)?;

    let mut warnings = Vec::new();
    if degree == 5 && op == OperationKind::PreLie {
        warnings.push(format!(
            "rank(E_5) = {rank} and nullity = {nullity}: rank + nullity = {} columns; \
             a published dimension figure of {nullity} can only refer to the nullity, \
             not the rank",
            basis.dim()
        ));
    }

    let mut checks_passed = rank + nullity == basis.dim();
    let mut generators = Vec::new();
    let mut expander = Expander::new(op, gf);
    let kept_indices: Vec<usize> = gens
        .candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kept)
        .map(|(k, _)| k)
        .collect();
    for (slot, &k) in kept_indices.iter().enumerate() {
        let poly = from_vector(&gens.generators[slot], &basis, gf);
        if !expander.is_identity(&poly) {
            checks_passed = false;
            warnings.push(format!("candidate {} failed expansion verification", k + 1));
        }
        let vector: Vec<(usize, i64)> = gens.generators[slot]
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(idx, &c)| (idx, gf.symmetric_rep(c)))
            .collect();
        generators.push(GeneratorReport {
            candidate: k + 1,
            terms: poly.len(),
            text: render_polynomial(&poly, &basis, gf),
            vector,
        });
    }

    Ok(AnalyzeReport {
        schema: 1,
        degree,
        op: op.as_str().to_string(),
        prime: gf.p(),
        tt_dim: basis.dim(),
        dd_dim,
        rank,
        nullity,
        base_rank: gens.base_rank,
        rank_trace: gens.rank_trace(),
        candidates: gens.candidates.clone(),
        generators,
        warnings,
        checks_passed,
    })
}
