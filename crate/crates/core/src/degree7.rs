//! Degree-7 analysis, one irreducible representation of S_7 at a time.
//!
//! The full degree-7 expansion matrix (2162160 x 483840) is far too
//! large to reduce directly, so the problem splits per partition: every
//! multilinear space becomes a block matrix whose (i, j) block is the
//! sum of coefficient-weighted natural representation matrices of the
//! term permutations. Comparing the rank of the lifted-identity block
//! matrix L with the nullity of the expansion block matrix X decides
//! whether new identities exist in that representation, and the rows of
//! RCF(K) whose leading columns are not leading columns of RCF(L) yield
//! explicit new identities through the group-algebra matrix units.

use serde::Serialize;

use crate::error::Error;
use crate::freealg::{TtTree, dd_basis, tt_basis};
use crate::identities::{
    liftings, pre_jordan_degree5_identities, pre_lie_degree5_identities, render_polynomial,
    ternary_right_symmetric, verify_identity,
};
use crate::modlinalg::{Gf, ModMatrix};
use crate::products::{Expander, OperationKind};
use crate::rewrite::LinComb;
use crate::symmetric::{NaturalRep, Partition, Perm, matrix_unit_with, partitions};

/// Sparse block description of a stack of polynomials: one row block per
/// polynomial, entries (column block, term permutation, coefficient).
pub struct TermTable {
    pub col_blocks: usize,
    pub rows: Vec<Vec<(usize, Perm, u8)>>,
}

/// The degree-7 consequences generators: every degree-5 module generator
/// lifted in all 16 ways. Pre-Lie has 15 degree-5 generators (the 12
/// liftings of the right-symmetric identity plus the three degree-5
/// generators), pre-Jordan has 5.
pub fn lifted_generators(op: OperationKind, gf: Gf) -> Result<Vec<LinComb<TtTree>>, Error> {
    let degree5: Vec<LinComb<TtTree>> = match op {
        OperationKind::PreLie => {
            let mut gens = liftings(&ternary_right_symmetric(gf), 3, gf);
            gens.extend(pre_lie_degree5_identities(gf));
            gens
        }
        OperationKind::PreJordan => pre_jordan_degree5_identities(gf),
        OperationKind::PreJordanLR => {
            return Err(Error::BadDegree {
                degree: 7,
                reason: "the operator-form pair is analyzed in degree 3 only",
            });
        }
    };
    let mut lifted = Vec::with_capacity(degree5.len() * 16);
    for g in &degree5 {
        lifted.extend(liftings(g, 5, gf));
    }
    Ok(lifted)
}

/// Term table of the lifted identities over the degree-7 TT basis.
pub fn lifted_term_table(lifted: &[LinComb<TtTree>]) -> Result<TermTable, Error> {
    let basis = tt_basis(7)?;
    let mut rows = Vec::with_capacity(lifted.len());
    for f in lifted {
        let mut row = Vec::with_capacity(f.len());
        for (m, &c) in f.iter() {
            let (t, sigma) = basis.split(m)?;
            row.push((t, sigma, c));
        }
        row.sort_by(|a, b| (a.0, a.1.images()).cmp(&(b.0, b.1.images())));
        rows.push(row);
    }
    Ok(TermTable {
        col_blocks: basis.num_types(),
        rows,
    })
}

/// Term table of the normalized expansions of the 96 TT-types over the
/// degree-7 normal DD types.
pub fn expansion_term_table(op: OperationKind, gf: Gf) -> Result<TermTable, Error> {
    let tb = tt_basis(7)?;
    let db = dd_basis(7);
    let mut ex = Expander::new(op, gf);
    let mut rows = Vec::with_capacity(tb.num_types());
    for shape in tb.types() {
        let e = ex.expansion_of_type(shape);
        let mut row = Vec::with_capacity(e.len());
        for (m, &c) in e.iter() {
            let (j, sigma) = db.split(m)?;
            row.push((j, sigma, c));
        }
        row.sort_by(|a, b| (a.0, a.1.images()).cmp(&(b.0, b.1.images())));
        rows.push(row);
    }
    Ok(TermTable {
        col_blocks: db.num_types(),
        rows,
    })
}

/// Assemble the block matrix of a term table in one representation;
/// block (i, j) is the sum of coeff * R(sigma) over the entries, or its
/// transpose into block (j, i) when `transposed`.
pub fn build_block_matrix(table: &TermTable, rep: &NaturalRep, transposed: bool) -> ModMatrix {
    let d = rep.dim();
    let gf = rep.gf();
    let (rows, cols) = if transposed {
        (table.col_blocks * d, table.rows.len() * d)
    } else {
        (table.rows.len() * d, table.col_blocks * d)
    };
    let mut m = ModMatrix::zeros(rows, cols, gf);
    for (i, row) in table.rows.iter().enumerate() {
        for (j, sigma, c) in row {
            let r = rep.rep(sigma);
            for a in 0..d {
                for b in 0..d {
                    let v = gf.mul(*c, r.get(a, b));
                    if v != 0 {
                        if transposed {
                            m.add_at(j * d + b, i * d + a, v);
                        } else {
                            m.add_at(i * d + a, j * d + b, v);
                        }
                    }
                }
            }
        }
    }
    m
}

/// The lifted-identity block matrix of one partition (G d x 96 d).
pub fn build_l_matrix(lambda: &Partition, op: OperationKind, gf: Gf) -> Result<ModMatrix, Error> {
    let lifted = lifted_generators(op, gf)?;
    let table = lifted_term_table(&lifted)?;
    let rep = NaturalRep::new(lambda, gf)?;
    Ok(build_block_matrix(&table, &rep, false))
}

/// The expansion block matrix of one partition (96 d x 429 d).
pub fn build_x_matrix(lambda: &Partition, op: OperationKind, gf: Gf) -> Result<ModMatrix, Error> {
    let table = expansion_term_table(op, gf)?;
    let rep = NaturalRep::new(lambda, gf)?;
    Ok(build_block_matrix(&table, &rep, false))
}

/// Outcome of one partition: the rank data and, when new identities
/// exist, the canonical rows that witness them.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub lambda: String,
    pub d: usize,
    pub lifted_rows: usize,
    pub lifted_cols: usize,
    pub lifrank: usize,
    pub expansion_rows: usize,
    pub expansion_cols: usize,
    pub exprank: usize,
    pub allrank: usize,
    pub new_count: usize,
    /// Leading columns of RCF(K) that are not leading columns of RCF(L),
    /// 1-based.
    pub leading_column_diff: Vec<usize>,
    /// Internal cross-checks: rank-nullity, leading-column containment,
    /// and RCF(L) = RCF(K) whenever new_count is zero.
    pub consistent: bool,
}

/// An explicit new identity extracted from a row of RCF(K): per TT-type
/// coefficients of the matrix units D_{1,j}.
#[derive(Clone, Debug, Serialize)]
pub struct ExtractedIdentity {
    pub lambda: String,
    /// 1-based row of RCF(K) and its 1-based leading column.
    pub row: usize,
    pub leading_column: usize,
    /// Distinct nonzero residues appearing in the raw row.
    pub raw_entries: Vec<u8>,
    /// Scalar applied before taking symmetric representatives.
    pub scale: u8,
    /// (tt_type 1-based, [(coefficient, j)] for D_{1,j}), type-ordered.
    pub groups: Vec<(usize, Vec<(i64, usize)>)>,
    pub text: String,
}

/// Full analysis artifacts for one partition.
pub struct PartitionAnalysis {
    pub report: PartitionReport,
    /// RCF of the nullspace-basis matrix; rows are the canonical basis
    /// of the identity space in this representation.
    pub rcf_k: ModMatrix,
    /// RCF of the lifted matrix, zero rows dropped.
    pub rcf_l_rows: Vec<Vec<u8>>,
}

/// Run the block-matrix comparison for one partition.
pub fn analyze_partition(
    lambda: &Partition,
    lifted: &TermTable,
    expansion: &TermTable,
    gf: Gf,
) -> Result<PartitionAnalysis, Error> {
    let rep = NaturalRep::new(lambda, gf)?;
    let d = rep.dim();

    let mut l = build_block_matrix(lifted, &rep, false);
    let lifted_rows = l.rows();
    let lifted_cols = l.cols();
    let lifrank = l.rcf();
    let l_pivots = l.pivot_columns();
    let rcf_l_rows: Vec<Vec<u8>> = l.nonzero_rows().iter().map(|r| r.to_vec()).collect();
    drop(l);

    // X is assembled directly in transposed orientation; its RCF yields
    // the expansion rank and the canonical nullspace on the TT side.
    let mut xt = build_block_matrix(expansion, &rep, true);
    let expansion_rows = xt.cols();
    let expansion_cols = xt.rows();
    let exprank = xt.rcf();
    let allrank = expansion_rows - exprank;
    let null = xt.nullspace_basis();
    drop(xt);
    let rows: Vec<Vec<u8>> = null.into_iter().map(|v| v.coeffs).collect();
    let mut k = ModMatrix::from_rows(&rows, 96 * d, gf);
    drop(rows);
    let krank = k.rcf();
    let k_pivots = k.pivot_columns();

    let mut consistent = krank == allrank && lifrank <= allrank;
    // leading(L) must sit inside leading(K)
    let mut kp = k_pivots.iter().copied();
    consistent &= l_pivots.iter().all(|c| kp.any(|x| x == *c));
    let new_count = allrank - lifrank;
    if new_count == 0 {
        let k_rows: Vec<&[u8]> = (0..krank).map(|r| k.row(r)).collect();
        consistent &= rcf_l_rows.len() == k_rows.len()
            && rcf_l_rows
                .iter()
                .zip(&k_rows)
                .all(|(a, b)| a.as_slice() == *b);
    }
    let leading_column_diff: Vec<usize> = k_pivots
        .iter()
        .filter(|c| !l_pivots.contains(c))
        .map(|c| c + 1)
        .collect();
    consistent &= leading_column_diff.len() == new_count;

    Ok(PartitionAnalysis {
        report: PartitionReport {
            lambda: lambda.to_string(),
            d,
            lifted_rows,
            lifted_cols,
            lifrank,
            expansion_rows,
            expansion_cols,
            exprank,
            allrank,
            new_count,
            leading_column_diff,
            consistent,
        },
        rcf_k: k,
        rcf_l_rows,
    })
}

/// Interpret the new rows of RCF(K) through the matrix units D_{1,j}.
/// Available only for shapes whose base Clifton matrix is the identity.
pub fn extract_new_identities(
    analysis: &PartitionAnalysis,
    lambda: &Partition,
    scale: u8,
    gf: Gf,
) -> Result<Vec<ExtractedIdentity>, Error> {
    let rep = NaturalRep::new(lambda, gf)?;
    if !rep.base_is_identity() {
        return Err(Error::MatrixUnitUnavailable {
            lambda: lambda.to_string(),
        });
    }
    let d = rep.dim();
    let k = &analysis.rcf_k;
    let mut out = Vec::new();
    for r in 0..k.rows() {
        let lead = match k.row(r).iter().position(|&x| x != 0) {
            Some(c) => c + 1,
            None => continue,
        };
        if !analysis.report.leading_column_diff.contains(&lead) {
            continue;
        }
        let mut raw_entries: Vec<u8> = k.row(r).iter().copied().filter(|&x| x != 0).collect();
        raw_entries.sort_unstable();
        raw_entries.dedup();
        let mut groups = Vec::new();
        let mut text = String::new();
        for t in 0..96 {
            let mut coeffs = Vec::new();
            for j in 0..d {
                let c = k.get(r, t * d + j);
                if c != 0 {
                    coeffs.push((gf.symmetric_rep(gf.mul(c, scale)), j + 1));
                }
            }
            if coeffs.is_empty() {
                continue;
            }
            if !text.is_empty() {
                text.push_str(" + ");
            }
            text.push_str("[ ");
            for (idx, &(c, j)) in coeffs.iter().enumerate() {
                if idx > 0 {
                    text.push_str(if c < 0 { "- " } else { "+ " });
                } else if c < 0 {
                    text.push_str("- ");
                }
                let mag = c.unsigned_abs();
                if mag != 1 {
                    text.push_str(&mag.to_string());
                    text.push(' ');
                }
                text.push_str(&format!("D_{{1,{j}}} "));
            }
            text.push_str(&format!("]_{}", t + 1));
            groups.push((t + 1, coeffs));
        }
        out.push(ExtractedIdentity {
            lambda: lambda.to_string(),
            row: r + 1,
            leading_column: lead,
            raw_entries,
            scale,
            groups,
            text,
        });
    }
    Ok(out)
}

/// Expand an extracted row into a multilinear TT polynomial by replacing
/// each D_{1,j} with its permutation terms (unscaled row coefficients).
pub fn extracted_row_polynomial(
    analysis: &PartitionAnalysis,
    lambda: &Partition,
    row_1based: usize,
    gf: Gf,
) -> Result<LinComb<TtTree>, Error> {
    let rep = NaturalRep::new(lambda, gf)?;
    if !rep.base_is_identity() {
        return Err(Error::MatrixUnitUnavailable {
            lambda: lambda.to_string(),
        });
    }
    let d = rep.dim();
    let basis = tt_basis(7)?;
    let k = &analysis.rcf_k;
    let r = row_1based - 1;
    let mut units = Vec::new();
    for j in 1..=d {
        units.push(matrix_unit_with(&rep, 1, j)?);
    }
    let mut poly: LinComb<TtTree> = LinComb::zero();
    for t in 0..96 {
        for j in 0..d {
            let c = k.get(r, t * d + j);
            if c == 0 {
                continue;
            }
            for (sigma, &dc) in units[j].terms() {
                let m = basis.types()[t].fill_word(sigma.images());
                poly.add_term(m, gf.mul(c, dc), gf);
            }
        }
    }
    Ok(poly)
}

/// A new-identity row reported verbatim when the shape does not admit
/// the matrix-unit interpretation (base Clifton matrix not the
/// identity): the raw RCF(K) row over the 96 d-sized type blocks.
#[derive(Clone, Debug, Serialize)]
pub struct RawNewRow {
    pub lambda: String,
    /// 1-based row of RCF(K) and its 1-based leading column.
    pub row: usize,
    pub leading_column: usize,
    /// The full row, residues mod p.
    pub entries: Vec<u8>,
}

/// Rows of RCF(K) whose leading columns witness new identities, without
/// interpretation.
pub fn raw_new_rows(analysis: &PartitionAnalysis) -> Vec<RawNewRow> {
    let k = &analysis.rcf_k;
    let mut out = Vec::new();
    for r in 0..k.rows() {
        let Some(lead) = k.row(r).iter().position(|&x| x != 0).map(|c| c + 1) else {
            continue;
        };
        if analysis.report.leading_column_diff.contains(&lead) {
            out.push(RawNewRow {
                lambda: analysis.report.lambda.clone(),
                row: r + 1,
                leading_column: lead,
                entries: k.row(r).to_vec(),
            });
        }
    }
    out
}

/// Options for a degree-7 run.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub op: OperationKind,
    pub gf: Gf,
    /// Restrict to one partition (digit string) when set.
    pub partition: Option<Partition>,
    /// Worker threads for the per-partition jobs; 0 picks the default.
    pub jobs: usize,
    /// Attach matrix-unit extractions for new-identity partitions where
    /// the base Clifton matrix is the identity.
    pub extract: bool,
    /// Scalar applied to extracted rows before symmetric representatives.
    pub extract_scale: u8,
}

/// JSON-facing result of a degree-7 run.
#[derive(Clone, Debug, Serialize)]
pub struct Degree7Report {
    pub schema: u32,
    pub op: String,
    pub prime: u16,
    pub partitions: Vec<PartitionReport>,
    pub total_new: usize,
    pub extractions: Vec<ExtractedIdentity>,
    /// New rows for shapes without the matrix-unit interpretation.
    pub raw_new_rows: Vec<RawNewRow>,
    pub checks_passed: bool,
}

/// Run the full per-partition sweep (optionally restricted), in parallel
/// across partitions.
pub fn run_degree7(opts: &RunOptions) -> Result<Degree7Report, Error> {
    let gf = opts.gf;
    let lifted = lifted_generators(opts.op, gf)?;
    let lifted_table = lifted_term_table(&lifted)?;
    let expansion_table = expansion_term_table(opts.op, gf)?;

    let lambdas: Vec<Partition> = match &opts.partition {
        Some(l) => vec![l.clone()],
        None => partitions(7),
    };

    type JobResult = (PartitionReport, Vec<ExtractedIdentity>, Vec<RawNewRow>);
    let run_one = |lambda: &Partition| -> Result<JobResult, Error> {
        let analysis = analyze_partition(lambda, &lifted_table, &expansion_table, gf)?;
        let mut extractions = Vec::new();
        let mut raws = Vec::new();
        if opts.extract && analysis.report.new_count > 0 {
            let rep = NaturalRep::new(lambda, gf)?;
            if rep.base_is_identity() {
                extractions = extract_new_identities(&analysis, lambda, opts.extract_scale, gf)?;
            } else {
                raws = raw_new_rows(&analysis);
            }
        }
        Ok((analysis.report, extractions, raws))
    };

    let results: Vec<Result<JobResult, Error>> = if opts.jobs == 1 {
        lambdas.iter().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Inconsistency(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            lambdas.par_iter().map(run_one).collect()
        })
    };

    let mut reports = Vec::with_capacity(lambdas.len());
    let mut extractions = Vec::new();
    let mut raw_rows = Vec::new();
    let mut checks_passed = true;
    for r in results {
        let (report, ex, raws) = r?;
        checks_passed &= report.consistent;
        reports.push(report);
        extractions.extend(ex);
        raw_rows.extend(raws);
    }
    let total_new = reports.iter().map(|r| r.new_count).sum();
    Ok(Degree7Report {
        schema: 1,
        op: opts.op.as_str().to_string(),
        prime: gf.p(),
        partitions: reports,
        total_new,
        extractions,
        raw_new_rows: raw_rows,
        checks_passed,
    })
}

/// Tab-separated table mirroring the per-partition rank layout.
pub fn report_tsv(report: &Degree7Report) -> String {
    let mut s =
        String::from("lambda\td\tlrows\tlcols\tlifrank\txrows\txcols\texprank\tnull\tnew\n");
    for p in &report.partitions {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            p.lambda,
            p.d,
            p.lifted_rows,
            p.lifted_cols,
            p.lifrank,
            p.expansion_rows,
            p.expansion_cols,
            p.exprank,
            p.allrank,
            p.new_count
        ));
    }
    s
}

/// Verify a handful of lifted generators by direct expansion; used by
/// the CLI consistency gate (full verification lives in the test suite).
pub fn spot_check_lifted(op: OperationKind, gf: Gf, count: usize) -> Result<bool, Error> {
    let lifted = lifted_generators(op, gf)?;
    let step = (lifted.len() / count.max(1)).max(1);
    Ok(lifted
        .iter()
        .step_by(step)
        .take(count)
        .all(|f| verify_identity(f, op, gf)))
}

/// Render a degree-7 polynomial for reports.
pub fn render_degree7(f: &LinComb<TtTree>, gf: Gf) -> Result<String, Error> {
    let basis = tt_basis(7)?;
    Ok(render_polynomial(f, &basis, gf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf() -> Gf {
        Gf::new(101, 7).unwrap()
    }

    #[test]
    fn lifted_generator_counts() {
        let g = gf();
        assert_eq!(
            lifted_generators(OperationKind::PreLie, g).unwrap().len(),
            240
        );
        assert_eq!(
            lifted_generators(OperationKind::PreJordan, g)
                .unwrap()
                .len(),
            80
        );
        assert!(lifted_generators(OperationKind::PreJordanLR, g).is_err());
    }

    #[test]
    fn sampled_lifted_generators_verify() {
        let g = gf();
        assert!(spot_check_lifted(OperationKind::PreLie, g, 5).unwrap());
        assert!(spot_check_lifted(OperationKind::PreJordan, g, 5).unwrap());
    }

    #[test]
    fn trivial_partitions_match_reference_ranks() {
        let g = gf();
        let lam7 = Partition::parse("7").unwrap();
        let lam1 = Partition::parse("1111111").unwrap();

        let lifted = lifted_generators(OperationKind::PreLie, g).unwrap();
        let lt = lifted_term_table(&lifted).unwrap();
        let et = expansion_term_table(OperationKind::PreLie, g).unwrap();
        let a = analyze_partition(&lam7, &lt, &et, g).unwrap();
        assert_eq!(
            (a.report.lifrank, a.report.exprank, a.report.allrank),
            (48, 48, 48)
        );
        assert_eq!(a.report.new_count, 0);
        assert!(a.report.consistent);
        let a = analyze_partition(&lam1, &lt, &et, g).unwrap();
        assert_eq!(
            (a.report.lifrank, a.report.exprank, a.report.allrank),
            (80, 16, 80)
        );
        assert_eq!(a.report.new_count, 0);
        assert!(a.report.consistent);

        let lifted = lifted_generators(OperationKind::PreJordan, g).unwrap();
        let lt = lifted_term_table(&lifted).unwrap();
        let et = expansion_term_table(OperationKind::PreJordan, g).unwrap();
        let a = analyze_partition(&lam7, &lt, &et, g).unwrap();
        assert_eq!(
            (a.report.lifrank, a.report.allrank, a.report.new_count),
            (61, 61, 0)
        );
        assert!(a.report.consistent);
        let a = analyze_partition(&lam1, &lt, &et, g).unwrap();
        assert_eq!(
            (a.report.lifrank, a.report.allrank, a.report.new_count),
            (24, 24, 0)
        );
        assert!(a.report.consistent);
    }

    #[test]
    fn block_matrix_wrappers() {
        let g = gf();
        let lam = Partition::parse("7").unwrap();
        let mut l = build_l_matrix(&lam, OperationKind::PreLie, g).unwrap();
        assert_eq!((l.rows(), l.cols()), (240, 96));
        assert_eq!(l.rcf(), 48);
        let x = build_x_matrix(&lam, OperationKind::PreLie, g).unwrap();
        assert_eq!((x.rows(), x.cols()), (96, 429));
        let mut xt = x.transpose();
        assert_eq!(xt.rcf(), 48);
        let m = crate::symmetric::natural_rep(&lam, &Perm::identity(7), g).unwrap();
        assert_eq!(m, crate::modlinalg::ModMatrix::identity(1, g));
    }

    #[test]
    fn ranks_stable_across_primes() {
        // the rank data cannot depend on the modulus for p > 7
        let lam = Partition::parse("61").unwrap();
        for p in [101u64, 103, 251] {
            let g = Gf::new(p, 7).unwrap();
            let lifted = lifted_generators(OperationKind::PreJordan, g).unwrap();
            let lt = lifted_term_table(&lifted).unwrap();
            let et = expansion_term_table(OperationKind::PreJordan, g).unwrap();
            let a = analyze_partition(&lam, &lt, &et, g).unwrap();
            assert_eq!(
                (a.report.lifrank, a.report.allrank, a.report.new_count),
                (322, 322, 0),
                "p = {p}"
            );
        }
    }

    #[test]
    fn parallel_jobs_match_sequential() {
        let g = gf();
        let base = RunOptions {
            op: OperationKind::PreJordan,
            gf: g,
            partition: Some(Partition::parse("61").unwrap()),
            jobs: 1,
            extract: false,
            extract_scale: 2,
        };
        let seq = run_degree7(&base).unwrap();
        let par = run_degree7(&RunOptions { jobs: 2, ..base }).unwrap();
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            serde_json::to_string(&par).unwrap()
        );
    }

    #[test]
    fn raw_rows_reported_when_units_unavailable() {
        let g = gf();
        // 2221 has one new identity, and its base Clifton matrix is not
        // the identity, so the row is reported verbatim
        let opts = RunOptions {
            op: OperationKind::PreJordan,
            gf: g,
            partition: Some(Partition::parse("2221").unwrap()),
            jobs: 1,
            extract: true,
            extract_scale: 2,
        };
        let report = run_degree7(&opts).unwrap();
        assert_eq!(report.total_new, 1);
        assert!(report.extractions.is_empty());
        assert_eq!(report.raw_new_rows.len(), 1);
        let raw = &report.raw_new_rows[0];
        assert_eq!(
            raw.leading_column,
            report.partitions[0].leading_column_diff[0]
        );
        assert_eq!(raw.entries.len(), 96 * 14);
    }

    #[test]
    fn hook_shapes_admit_matrix_units() {
        let g = gf();
        for (name, expect) in [
            ("7", true),
            ("61", true),
            ("52", false),
            ("511", true),
            ("421", false),
            ("4111", true),
            ("31111", true),
            ("211111", true),
            ("1111111", true),
        ] {
            let lam = Partition::parse(name).unwrap();
            let rep = NaturalRep::new(&lam, g).unwrap();
            assert_eq!(rep.base_is_identity(), expect, "{name}");
        }
    }

    #[test]
    fn tsv_layout() {
        let g = gf();
        let opts = RunOptions {
            op: OperationKind::PreLie,
            gf: g,
            partition: Some(Partition::parse("7").unwrap()),
            jobs: 1,
            extract: false,
            extract_scale: 2,
        };
        let report = run_degree7(&opts).unwrap();
        let tsv = report_tsv(&report);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "7\t1\t240\t96\t48\t96\t429\t48\t48\t0");
    }
}
