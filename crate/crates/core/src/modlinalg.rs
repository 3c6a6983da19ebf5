//! Dense exact linear algebra over GF(p) for small primes.
//!
//! Everything downstream reduces to row canonical forms (RCF), ranks and
//! canonical nullspace bases of matrices with entries in GF(p), p < 256.
//! Entries are stored one byte each; elimination stages the matrix into
//! `u32` and delays modular reduction in the inner loops, so the hot axpy
//! is a plain integer multiply-add that the compiler can vectorize.

use crate::error::Error;

/// Prime field context. The modulus must be prime, fit in a byte, and
/// exceed the working degree so that the group algebra stays semisimple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u16,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    /// Field of the given modulus, validated against the working degree.
    pub fn new(p: u64, degree: usize) -> Result<Gf, Error> {
        if !is_prime(p) || p <= degree as u64 || p >= 256 {
            return Err(Error::BadPrime { p, degree });
        }
        Ok(Gf { p: p as u16 })
    }

    /// The default modulus used throughout: 101.
    pub fn default_for(degree: usize) -> Gf {
        Gf::new(101, degree).expect("101 is valid for degrees below 101")
    }

    #[inline]
    pub fn p(&self) -> u16 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + self.p - b as u16;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 { 0 } else { (self.p - a as u16) as u8 }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p as u32) as u8
    }

    /// Reduce a signed integer into [0, p).
    #[inline]
    pub fn from_i64(&self, x: i64) -> u8 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u8
    }

    pub fn pow(&self, mut a: u8, mut e: u64) -> u8 {
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    /// Symmetric representative in [-(p-1)/2, (p-1)/2].
    #[inline]
    pub fn symmetric_rep(&self, x: u8) -> i64 {
        let x = x as i64;
        let p = self.p as i64;
        if x > (p - 1) / 2 { x - p } else { x }
    }
}

/// Dense matrix over GF(p), row major, one byte per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    gf: Gf,
    data: Vec<u8>,
}

impl std::fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModMatrix({}x{} mod {})",
            self.rows,
            self.cols,
            self.gf.p()
        )
    }
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, gf: Gf) -> ModMatrix {
        ModMatrix {
            rows,
            cols,
            gf,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, gf: Gf) -> ModMatrix {
        let mut m = ModMatrix::zeros(n, n, gf);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from an iterator of rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<u8>], cols: usize, gf: Gf) -> ModMatrix {
        let mut m = ModMatrix::zeros(rows.len(), cols, gf);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn gf(&self) -> Gf {
        self.gf
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u8) {
        let e = &mut self.data[r * self.cols + c];
        *e = self.gf.add(*e, v);
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix::zeros(self.cols, self.rows, self.gf);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Matrix product (small operands only; used for representation checks).
    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.gf.p() as u64;
        let mut out = ModMatrix::zeros(self.rows, other.cols, self.gf);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = ((*d as u64 + a * s as u64) % p) as u8;
                }
            }
        }
        out
    }

    /// Matrix-vector product M*v.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.gf.p() as u64;
        let mut out = vec![0u8; self.rows];
        for r in 0..self.rows {
            let mut acc: u64 = 0;
            for (a, &b) in self.row(r).iter().zip(v) {
                acc += *a as u64 * b as u64;
                if acc >= u64::MAX - 65536 {
                    acc %= p;
                }
            }
            out[r] = (acc % p) as u8;
        }
        out
    }

    /// Reduce to row canonical form in place; returns the rank.
    ///
    /// Gauss-Jordan with the pivot chosen as the first row holding a
    /// nonzero entry in the pivot column. The work happens in a widened
    /// u32 copy: an axpy adds at most (p-1)^2 < 2^14 per entry, so with
    /// fewer than 2^17 pivots nothing overflows and the inner loops are
    /// reduction free.
    pub fn rcf(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        if rows == 0 || cols == 0 {
            return 0;
        }
        let p = self.gf.p() as u32;
        let gf = self.gf;
        let mut w: Vec<u32> = self.data.iter().map(|&x| x as u32).collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();

        // Forward pass: echelon form with unit pivots, zeros below.
        let mut r = 0;
        for c in 0..cols {
            let mut pivot_row = None;
            for i in r..rows {
                let v = w[i * cols + c] % p;
                w[i * cols + c] = v;
                if v != 0 {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(i) = pivot_row else { continue };
            if i != r {
                for j in c..cols {
                    w.swap(r * cols + j, i * cols + j);
                }
            }
            for j in c..cols {
                w[r * cols + j] %= p;
            }
            let lead = w[r * cols + c];
            if lead != 1 {
                let inv = gf.inv(lead as u8) as u32;
                for j in c..cols {
                    w[r * cols + j] = w[r * cols + j] * inv % p;
                }
            }
            for i in (r + 1)..rows {
                let m = w[i * cols + c] % p;
                w[i * cols + c] = 0;
                if m != 0 {
                    let mm = p - m;
                    let (pre, post) = w.split_at_mut(i * cols);
                    let src = &pre[r * cols + c + 1..r * cols + cols];
                    let dst = &mut post[c + 1..cols];
                    axpy(dst, src, mm);
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == rows {
                break;
            }
        }

        // Backward pass: zeros above each pivot.
        for &(r, c) in pivots.iter().rev() {
            for j in c + 1..cols {
                w[r * cols + j] %= p;
            }
            for i in 0..r {
                let m = w[i * cols + c] % p;
                w[i * cols + c] = 0;
                if m != 0 {
                    let mm = p - m;
                    let (pre, post) = w.split_at_mut(r * cols);
                    let src = &post[c + 1..cols];
                    let dst = &mut pre[i * cols + c + 1..i * cols + cols];
                    axpy(dst, src, mm);
                }
            }
        }

        for (d, s) in self.data.iter_mut().zip(w) {
            *d = (s % p) as u8;
        }
        pivots.len()
    }

    /// Columns holding the leading 1 of each nonzero row. Meaningful on a
    /// matrix already in RCF.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut pivots = Vec::new();
        for r in 0..self.rows {
            if let Some(c) = self.row(r).iter().position(|&x| x != 0) {
                pivots.push(c);
            } else {
                break;
            }
        }
        pivots
    }

    /// Canonical basis of the (right) nullspace of a matrix in RCF.
    ///
    /// One vector per free column, in increasing column order: the free
    /// coordinate is set to 1, the other free coordinates to 0, and the
    /// pivot coordinates are solved by back substitution.
    pub fn nullspace_basis(&self) -> Vec<IdentityVector> {
        let pivots = self.pivot_columns();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = self.gf.neg(self.get(r, f));
            }
            basis.push(IdentityVector { coeffs: v });
        }
        basis
    }

    /// Nonzero rows, for comparing two row canonical forms.
    pub fn nonzero_rows(&self) -> Vec<&[u8]> {
        (0..self.rows)
            .map(|r| self.row(r))
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect()
    }

    /// Snapshot format: header "rows cols p", then row-major entries as
    /// decimal residues, whitespace separated.
    pub fn write_snapshot(&self, out: &mut impl std::io::Write) -> std::io::Result<()> {
        writeln!(out, "{} {} {}", self.rows, self.cols, self.gf.p())?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }

    pub fn read_snapshot(input: &str) -> Result<ModMatrix, Error> {
        let mut it = input.split_ascii_whitespace();
        let mut next = |what: &str| -> Result<u64, Error> {
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::BadSnapshot(what.to_string()))
        };
        let rows = next("rows")? as usize;
        let cols = next("cols")? as usize;
        let p = next("p")?;
        let gf = Gf::new(p, 0)?;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            let v = next("entry")?;
            if v >= p {
                return Err(Error::BadSnapshot(format!("entry {v} out of range")));
            }
            data.push(v as u8);
        }
        Ok(ModMatrix {
            rows,
            cols,
            gf,
            data,
        })
    }
}

/// dst += m * src, no reduction. Callers guarantee headroom in u32.
#[inline]
fn axpy(dst: &mut [u32], src: &[u32], m: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += m * s;
    }
}

/// dst += m * src with a narrow source row, no reduction.
#[inline]
fn axpy_u8(dst: &mut [u32], src: &[u8], m: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += m * s as u32;
    }
}

/// Coefficient vector of a polynomial identity over the ordered monomial
/// basis of the relevant multilinear space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVector {
    pub coeffs: Vec<u8>,
}

impl IdentityVector {
    pub fn new(coeffs: Vec<u8>) -> IdentityVector {
        IdentityVector { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Squared Euclidean length of the symmetric-representative lift.
    pub fn squared_length(&self, gf: Gf) -> u64 {
        self.coeffs
            .iter()
            .map(|&c| {
                let s = gf.symmetric_rep(c);
                (s * s) as u64
            })
            .sum()
    }
}

/// Stable sort by increasing squared Euclidean length of the symmetric
/// representatives; ties keep the incoming order.
pub fn sort_by_length(vs: Vec<IdentityVector>, gf: Gf) -> Vec<IdentityVector> {
    let mut vs = vs;
    vs.sort_by_key(|v| v.squared_length(gf));
    vs
}

/// Incrementally maintained row space in echelon form, for rank scans
/// that absorb many candidate rows one at a time.
pub struct RowSpan {
    cols: usize,
    gf: Gf,
    /// Reduced rows with unit leading entries, sorted by pivot column.
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(cols: usize, gf: Gf) -> RowSpan {
        RowSpan {
            cols,
            gf,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the span; returns the reduced remainder.
    fn reduce(&self, row: &[u8]) -> Vec<u32> {
        assert_eq!(row.len(), self.cols);
        let p = self.gf.p() as u32;
        let mut w: Vec<u32> = row.iter().map(|&x| x as u32).collect();
        for (b, &c) in self.rows.iter().zip(&self.pivots) {
            let m = w[c] % p;
            w[c] = 0;
            if m != 0 {
                axpy_u8(&mut w[c + 1..], &b[c + 1..], p - m);
            }
        }
        w
    }

    /// Add a row to the span. Returns true when the rank grew.
    pub fn absorb(&mut self, row: &[u8]) -> bool {
        let p = self.gf.p() as u32;
        let mut w = self.reduce(row);
        for x in w.iter_mut() {
            *x %= p;
        }
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.gf.inv(w[c] as u8) as u32;
        let reduced: Vec<u8> = w.iter().map(|&x| (x * inv % p) as u8).collect();
        let at = self.pivots.partition_point(|&pc| pc < c);
        self.rows.insert(at, reduced);
        self.pivots.insert(at, c);
        true
    }

    /// Whether a row already lies in the span.
    pub fn contains(&self, row: &[u8]) -> bool {
        let p = self.gf.p() as u32;
        self.reduce(row).iter().all(|&x| x % p == 0)
    }
}
