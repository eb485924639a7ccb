//! Exact dense matrices over an arbitrary exact field, the row-reduction
//! and factorization kernels, and the matrix *-ring carriers with
//! closed-form constructions of the whole inverse family.
//!
//! All decisions (pivot choice, canonical right inverses) are deterministic
//! so that every derived witness is reproducible.

use std::fmt;

use crate::ring::{
    verify_drazin, verify_dual_pseudo_core_eqs, verify_penrose, verify_pseudo_core_eqs,
    ExistenceResult, InverseKind, Inverses, InverseWitness, Involution, NotExistsReason,
    PenroseEqs, StarRing, StarRingDescriptor,
};
use crate::scalar::{Field, FiniteField, GaussianField, PrimeField};
use crate::Error;

/// A dense row-major matrix with entries in some exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone + PartialEq + fmt::Debug> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        assert!(r >= 1);
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn generate(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> Self {
        Matrix::generate(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map(&self, f: impl FnMut(&T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Horizontal concatenation; row counts must agree.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::generate(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::generate(self.rows, cols.len(), |r, j| self.at(r, cols[j]).clone())
    }

    pub fn zeros<F: Field<Elem = T>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::generate(rows, cols, |_, _| f.zero())
    }

    pub fn identity<F: Field<Elem = T>>(f: &F, n: usize) -> Self {
        Matrix::generate(n, n, |r, c| if r == c { f.one() } else { f.zero() })
    }

    pub fn is_zero<F: Field<Elem = T>>(&self, f: &F) -> bool {
        self.entries.iter().all(|e| f.is_zero(e))
    }

    pub fn add<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn neg<F: Field<Elem = T>>(&self, f: &F) -> Self {
        self.map(|e| f.neg(e))
    }

    pub fn sub<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        self.add(f, &other.neg(f))
    }

    pub fn mul<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::generate(self.rows, other.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                acc = f.add(&acc, &f.mul(self.at(r, k), other.at(k, c)));
            }
            acc
        })
    }

    pub fn scale<F: Field<Elem = T>>(&self, f: &F, s: &T) -> Self {
        self.map(|e| f.mul(s, e))
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow<F: Field<Elem = T>>(&self, f: &F, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(f, self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination with leftmost-pivot selection.
pub struct Rref<T> {
    pub mat: Matrix<T>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Exact reduced row-echelon form. Deterministic: each pivot is the first
/// nonzero entry at or below the current row in the leftmost unfinished
/// column.
// TODO: a fraction-free elimination (clearing denominators up front) would
// cut the per-step gcd overhead of rational entries, the dominant cost for
// 4x4 inputs in the randomized sweeps.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !f.is_zero(a.at(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..cols {
                let tmp = a.at(p, c).clone();
                *a.at_mut(p, c) = a.at(row, c).clone();
                *a.at_mut(row, c) = tmp;
            }
        }
        let inv = f.inv(a.at(row, col)).expect("pivot is nonzero");
        for c in 0..cols {
            let v = f.mul(a.at(row, c), &inv);
            *a.at_mut(row, c) = v;
        }
        for r in 0..rows {
            if r != row && !f.is_zero(a.at(r, col)) {
                let factor = a.at(r, col).clone();
                for c in 0..cols {
                    let v = f.sub(a.at(r, c), &f.mul(&factor, a.at(row, c)));
                    *a.at_mut(r, c) = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let rank = pivots.len();
    Rref { mat: a, pivots, rank }
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).rank
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    assert!(m.is_square());
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(f, n));
    let red = rref(f, &aug);
    if red.pivots.iter().take_while(|&&p| p < n).count() < n {
        return None;
    }
    Some(Matrix::generate(n, n, |r, c| red.mat.at(r, n + c).clone()))
}

/// A = left · right with `left` of full column rank and `right` of full row
/// rank: `left` is the pivot columns of A, `right` the nonzero rows of
/// rref(A).
pub struct FullRankFactorization<T> {
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    pub rank: usize,
}

/// `None` exactly for the zero matrix (rank 0 has no factorization here;
/// callers special-case it).
pub fn full_rank_factorization<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
) -> Option<FullRankFactorization<F::Elem>> {
    let red = rref(f, m);
    if red.rank == 0 {
        return None;
    }
    let left = m.select_columns(&red.pivots);
    let right = Matrix::generate(red.rank, m.cols(), |r, c| red.mat.at(r, c).clone());
    Some(FullRankFactorization {
        left,
        right,
        rank: red.rank,
    })
}

/// The canonical right inverse of a full-row-rank matrix `g`: solves
/// `g · X = I` with free variables set to zero (leftmost-pivot solve).
pub fn right_inverse<F: Field>(f: &F, g: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let rows = g.rows();
    let aug = g.hstack(&Matrix::identity(f, rows));
    let red = rref(f, &aug);
    assert_eq!(red.rank, rows, "matrix does not have full row rank");
    let mut x = Matrix::zeros(f, g.cols(), rows);
    for (i, &p) in red.pivots.iter().enumerate() {
        for c in 0..rows {
            *x.at_mut(p, c) = red.mat.at(i, g.cols() + c).clone();
        }
    }
    x
}

/// A perturbed right inverse of `g`: `g_r + (I - g_r·g)·v`, which again
/// satisfies `g · X = I`.
pub fn right_inverse_perturbed<F: Field>(
    f: &F,
    g: &Matrix<F::Elem>,
    v: &Matrix<F::Elem>,
) -> Matrix<F::Elem> {
    let gr = right_inverse(f, g);
    let proj = Matrix::identity(f, g.cols()).sub(f, &gr.mul(f, g));
    gr.add(f, &proj.mul(f, v))
}

/// A basis of the (right) null space of `m`, as column vectors.
pub fn null_space_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Matrix<F::Elem>> {
    let red = rref(f, m);
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|c| !red.pivots.contains(c)) {
        let mut v = Matrix::zeros(f, m.cols(), 1);
        *v.at_mut(free, 0) = f.one();
        for (i, &p) in red.pivots.iter().enumerate() {
            *v.at_mut(p, 0) = f.neg(red.mat.at(i, free));
        }
        basis.push(v);
    }
    basis
}

/// Ties a scalar field to the carrier descriptor and entry validity of the
/// matrix ring built over it.
pub trait MatrixScalar: Field {
    fn matrix_descriptor(&self, n: usize, involution: Involution) -> StarRingDescriptor;
    fn valid_entry(&self, _e: &Self::Elem) -> bool {
        true
    }
}

impl MatrixScalar for GaussianField {
    fn matrix_descriptor(&self, n: usize, involution: Involution) -> StarRingDescriptor {
        StarRingDescriptor::GaussianRationalMatrix { n, involution }
    }
}

impl MatrixScalar for PrimeField {
    fn matrix_descriptor(&self, n: usize, involution: Involution) -> StarRingDescriptor {
        StarRingDescriptor::ZpMatrix {
            p: self.p(),
            k: n,
            involution,
        }
    }
    fn valid_entry(&self, e: &u64) -> bool {
        *e < self.p()
    }
}

/// Square matrices of a fixed size over an exact field, as a *-ring whose
/// involution is the transpose composed with entrywise conjugation when
/// `conjugate` is set.
#[derive(Clone, Debug)]
pub struct MatrixStarRing<F: Field> {
    field: F,
    n: usize,
    involution: Involution,
    conjugate: bool,
}

/// n×n matrices over Q(i) with a conjugate-transpose or plain-transpose
/// involution.
pub type GaussianMatrixRing = MatrixStarRing<GaussianField>;

/// k×k matrices over F_p with the transpose involution.
pub type FpMatrixRing = MatrixStarRing<PrimeField>;

impl GaussianMatrixRing {
    pub fn new(n: usize, involution: Involution) -> Result<Self, Error> {
        let desc = StarRingDescriptor::GaussianRationalMatrix { n, involution };
        desc.validate()?;
        Ok(MatrixStarRing {
            field: GaussianField,
            n,
            involution,
            conjugate: involution == Involution::ConjugateTranspose,
        })
    }
}

impl FpMatrixRing {
    pub fn new(p: u64, k: usize) -> Result<Self, Error> {
        let desc = StarRingDescriptor::ZpMatrix {
            p,
            k,
            involution: Involution::Transpose,
        };
        desc.validate()?;
        let field = PrimeField::new(p).expect("validated prime");
        Ok(MatrixStarRing {
            field,
            n: k,
            involution: Involution::Transpose,
            conjugate: false,
        })
    }
}

impl<F: MatrixScalar> MatrixStarRing<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn involution(&self) -> Involution {
        self.involution
    }

    fn star_of(&self, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let t = a.transpose();
        if self.conjugate {
            t.map(|e| self.field.conj(e))
        } else {
            t
        }
    }

    /// The carrier involution applied to a rectangular matrix.
    pub fn star_rect(&self, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        self.star_of(a)
    }

    /// Column-space containment: range(x) ⊆ range(y).
    pub fn range_contained(
        &self,
        x: &Matrix<F::Elem>,
        y: &Matrix<F::Elem>,
    ) -> Result<bool, Error> {
        if x.rows() != y.rows() {
            return Err(Error::ShapeMismatch);
        }
        let f = &self.field;
        Ok(rank(f, &y.hstack(x)) == rank(f, y))
    }

    /// Column-space equality: range(x) = range(y).
    pub fn range_equal(&self, x: &Matrix<F::Elem>, y: &Matrix<F::Elem>) -> Result<bool, Error> {
        Ok(self.range_contained(x, y)? && self.range_contained(y, x)?)
    }

    /// Left-annihilator containment: {v : vx = 0} ⊆ {v : vy = 0}, which for
    /// matrices over a field is equivalent to range(y) ⊆ range(x).
    pub fn left_null_contained(
        &self,
        x: &Matrix<F::Elem>,
        y: &Matrix<F::Elem>,
    ) -> Result<bool, Error> {
        self.range_contained(y, x)
    }

    fn witness(
        &self,
        kind: InverseKind,
        a: &Matrix<F::Elem>,
        value: Matrix<F::Elem>,
        index: Option<u32>,
    ) -> InverseWitness<Matrix<F::Elem>> {
        let verified = match kind {
            InverseKind::MoorePenrose => {
                verify_penrose(self, a, &value, PenroseEqs::ALL).expect("same carrier")
            }
            InverseKind::OneThree => {
                verify_penrose(self, a, &value, PenroseEqs::ONE_THREE).expect("same carrier")
            }
            InverseKind::Group => verify_drazin(self, a, &value, 1).expect("same carrier"),
            InverseKind::Drazin => {
                verify_drazin(self, a, &value, index.unwrap()).expect("same carrier")
            }
            InverseKind::Core => verify_pseudo_core_eqs(self, a, &value, 1).expect("same carrier"),
            InverseKind::PseudoCore => {
                verify_pseudo_core_eqs(self, a, &value, index.unwrap()).expect("same carrier")
            }
            InverseKind::DualPseudoCore => {
                verify_dual_pseudo_core_eqs(self, a, &value, index.unwrap()).expect("same carrier")
            }
        };
        assert!(
            verified,
            "constructed {kind} witness failed its defining equations"
        );
        InverseWitness {
            kind,
            value,
            index,
            verified,
        }
    }

    /// Smallest k >= 1 with rank(a^k) = rank(a^(k+1)). Never exceeds n.
    pub fn rank_stabilization_index(&self, a: &Matrix<F::Elem>) -> u32 {
        let f = &self.field;
        let mut prev = rank(f, a);
        let mut power = a.clone();
        let mut k = 1u32;
        loop {
            power = power.mul(f, a);
            let r = rank(f, &power);
            if r == prev {
                return k;
            }
            prev = r;
            k += 1;
            assert!(k as usize <= self.n, "index exceeded matrix dimension");
        }
    }

    fn drazin_witness(&self, a: &Matrix<F::Elem>) -> InverseWitness<Matrix<F::Elem>> {
        let f = &self.field;
        if a.is_zero(f) {
            return self.witness(InverseKind::Drazin, a, self.zero(), Some(1));
        }
        if let Some(inv) = invert(f, a) {
            return self.witness(InverseKind::Drazin, a, inv, Some(1));
        }
        let index = self.rank_stabilization_index(a);
        // Cline recursion: factor a = B1·C1, then C1·B1 = B2·C2, ... until
        // the square core Ck·Bk is invertible (or vanishes: nilpotent case).
        let mut left: Option<Matrix<F::Elem>> = None;
        let mut right: Option<Matrix<F::Elem>> = None;
        let mut cur = a.clone();
        let mut step = 0u32;
        let value = loop {
            step += 1;
            if cur.is_zero(f) {
                break self.zero();
            }
            let frf = full_rank_factorization(f, &cur).expect("nonzero matrix");
            left = Some(match left {
                None => frf.left.clone(),
                Some(l) => l.mul(f, &frf.left),
            });
            right = Some(match right {
                None => frf.right.clone(),
                Some(r) => frf.right.mul(f, &r),
            });
            let core = frf.right.mul(f, &frf.left);
            if let Some(core_inv) = invert(f, &core) {
                let mid = core_inv.pow(f, step + 1);
                break left.unwrap().mul(f, &mid).mul(f, &right.unwrap());
            }
            cur = core;
        };
        self.witness(InverseKind::Drazin, a, value, Some(index))
    }

    fn mp_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        let f = &self.field;
        if a.is_zero(f) {
            return ExistenceResult::Exists(self.witness(
                InverseKind::MoorePenrose,
                a,
                self.zero(),
                None,
            ));
        }
        if let Some(inv) = invert(f, a) {
            return ExistenceResult::Exists(self.witness(InverseKind::MoorePenrose, a, inv, None));
        }
        let frf = full_rank_factorization(f, a).expect("nonzero matrix");
        let ls = self.star_of(&frf.left);
        let rs = self.star_of(&frf.right);
        let gram_r = frf.right.mul(f, &rs);
        let gram_l = ls.mul(f, &frf.left);
        match (invert(f, &gram_r), invert(f, &gram_l)) {
            (Some(gr_inv), Some(gl_inv)) => {
                let x = rs.mul(f, &gr_inv).mul(f, &gl_inv).mul(f, &ls);
                ExistenceResult::Exists(self.witness(InverseKind::MoorePenrose, a, x, None))
            }
            _ => ExistenceResult::NotExists(NotExistsReason::FormDegenerate),
        }
    }

    /// The canonical {1,3}-inverse built from an arbitrary right inverse of
    /// the factor `right` of the full-rank factorization.
    pub fn one_three_from_right_inverse(
        &self,
        a: &Matrix<F::Elem>,
        right_inv: &Matrix<F::Elem>,
    ) -> Option<Matrix<F::Elem>> {
        let f = &self.field;
        let frf = full_rank_factorization(f, a)?;
        let ls = self.star_of(&frf.left);
        let gram_l = ls.mul(f, &frf.left);
        let gl_inv = invert(f, &gram_l)?;
        Some(right_inv.mul(f, &gl_inv).mul(f, &ls))
    }

    fn one_three_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        let f = &self.field;
        if a.is_zero(f) {
            return ExistenceResult::Exists(self.witness(
                InverseKind::OneThree,
                a,
                self.zero(),
                None,
            ));
        }
        if let Some(inv) = invert(f, a) {
            return ExistenceResult::Exists(self.witness(InverseKind::OneThree, a, inv, None));
        }
        let frf = full_rank_factorization(f, a).expect("nonzero matrix");
        let gr = right_inverse(f, &frf.right);
        match self.one_three_from_right_inverse(a, &gr) {
            Some(x) => ExistenceResult::Exists(self.witness(InverseKind::OneThree, a, x, None)),
            // The star-Gram form on range(a) is degenerate: no star-symmetric
            // projector onto range(a), hence no {1,3}-inverse.
            None => ExistenceResult::NotExists(NotExistsReason::FormDegenerate),
        }
    }

    fn pseudo_core_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        let f = &self.field;
        let d = self.drazin_witness(a);
        let m = d.index();
        // No smaller index is possible: x·a^(m+1) = a^m forces the rank of
        // the powers to have stabilized, and range(a^k) is constant from the
        // Drazin index on, so {1,3}-invertibility of a^k is constant too.
        let am = a.pow(f, m);
        match self.one_three_witness(&am) {
            ExistenceResult::Exists(ot) => {
                let x = d.value.mul(f, &am).mul(f, &ot.value);
                ExistenceResult::Exists(self.witness(InverseKind::PseudoCore, a, x, Some(m)))
            }
            ExistenceResult::NotExists(_) => {
                ExistenceResult::NotExists(NotExistsReason::NoOneThreeInverseOfPower(m))
            }
        }
    }

    /// Composes the pseudo core inverse from an explicitly supplied
    /// {1,3}-inverse of `a^m`; the result must not depend on the choice.
    pub fn pseudo_core_from_one_three(
        &self,
        a: &Matrix<F::Elem>,
        one_three_of_power: &Matrix<F::Elem>,
    ) -> Option<(Matrix<F::Elem>, u32)> {
        let f = &self.field;
        let d = self.drazin_witness(a);
        let m = d.index();
        let am = a.pow(f, m);
        if !verify_penrose(self, &am, one_three_of_power, PenroseEqs::ONE_THREE).ok()? {
            return None;
        }
        let x = d.value.mul(f, &am).mul(f, one_three_of_power);
        verify_pseudo_core_eqs(self, a, &x, m)
            .ok()?
            .then_some((x, m))
    }
}

impl<F: MatrixScalar> StarRing for MatrixStarRing<F> {
    type Elem = Matrix<F::Elem>;

    fn descriptor(&self) -> StarRingDescriptor {
        self.field.matrix_descriptor(self.n, self.involution)
    }

    fn contains(&self, a: &Matrix<F::Elem>) -> bool {
        a.rows() == self.n
            && a.cols() == self.n
            && a.entries().iter().all(|e| self.field.valid_entry(e))
    }

    fn zero(&self) -> Matrix<F::Elem> {
        Matrix::zeros(&self.field, self.n, self.n)
    }

    fn one(&self) -> Matrix<F::Elem> {
        Matrix::identity(&self.field, self.n)
    }

    fn add(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.add(&self.field, b)
    }

    fn neg(&self, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.neg(&self.field)
    }

    fn mul(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.mul(&self.field, b)
    }

    fn star(&self, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        self.star_of(a)
    }

    fn power(&self, a: &Matrix<F::Elem>, k: u32) -> Matrix<F::Elem> {
        a.pow(&self.field, k)
    }
}

impl<F: MatrixScalar> MatrixStarRing<F> {
    /// Deterministic small-entry probe used to vary {1,3}-inverses inside
    /// their affine family.
    fn probe_matrix(&self, tag: usize) -> Matrix<F::Elem> {
        let f = &self.field;
        Matrix::generate(self.n, self.n, |r, c| {
            let h = (tag as u64)
                .wrapping_mul(0x9e3779b97f4a7c15)
                .wrapping_add(((r as u64) << 32) | c as u64)
                .wrapping_mul(0xbf58476d1ce4e5b9);
            f.embed_i64(((h >> 33) % 7) as i64 - 3)
        })
    }

    /// Canonical {1,3}-inverse, any special candidates that happen to
    /// qualify, and `probes` members of the affine family
    /// x0 + (1 - x0·a)·w.
    fn one_three_family_sampled(&self, a: &Matrix<F::Elem>, probes: usize) -> Vec<Matrix<F::Elem>> {
        let f = &self.field;
        let Some(base) = self.one_three_witness(a).into_witness() else {
            return Vec::new();
        };
        let x0 = base.value;
        let mut family = vec![x0.clone()];
        let push_checked = |family: &mut Vec<Matrix<F::Elem>>, x: Matrix<F::Elem>| {
            if !family.contains(&x)
                && verify_penrose(self, a, &x, PenroseEqs::ONE_THREE).expect("same carrier")
            {
                family.push(x);
            }
        };
        if let Some(mp) = self.mp_witness(a).into_witness() {
            push_checked(&mut family, mp.value);
        }
        let d = self.drazin_witness(a);
        if d.index() == 1 {
            push_checked(&mut family, d.value);
        }
        let hull = Matrix::identity(f, self.n).sub(f, &x0.mul(f, a));
        for tag in 0..probes {
            let x = x0.add(f, &hull.mul(f, &self.probe_matrix(tag)));
            push_checked(&mut family, x);
        }
        family
    }

    fn group_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        let d = self.drazin_witness(a);
        match d.index() {
            1 => ExistenceResult::Exists(self.witness(InverseKind::Group, a, d.value, None)),
            m => ExistenceResult::NotExists(NotExistsReason::IndexAboveOne(m)),
        }
    }

    fn core_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        match self.pseudo_core_witness(a) {
            ExistenceResult::Exists(w) if w.index() == 1 => {
                ExistenceResult::Exists(self.witness(InverseKind::Core, a, w.value, None))
            }
            ExistenceResult::Exists(w) => {
                ExistenceResult::NotExists(NotExistsReason::IndexAboveOne(w.index()))
            }
            ExistenceResult::NotExists(r) => ExistenceResult::NotExists(r),
        }
    }

    fn dual_pseudo_core_witness(&self, a: &Matrix<F::Elem>) -> ExistenceResult<Matrix<F::Elem>> {
        let sa = self.star_of(a);
        match self.pseudo_core_witness(&sa) {
            ExistenceResult::Exists(w) => {
                let m = w.index();
                let x = self.star_of(&w.value);
                ExistenceResult::Exists(self.witness(InverseKind::DualPseudoCore, a, x, Some(m)))
            }
            ExistenceResult::NotExists(r) => ExistenceResult::NotExists(r),
        }
    }

    fn unit_check(&self, a: &Matrix<F::Elem>) -> bool {
        rank(&self.field, a) == self.n
    }

    fn special_candidates(&self, a: &Matrix<F::Elem>) -> Vec<Matrix<F::Elem>> {
        let mut out = vec![self.zero(), self.one(), self.drazin_witness(a).value];
        let push = |out: &mut Vec<Matrix<F::Elem>>, x: Matrix<F::Elem>| {
            if !out.contains(&x) {
                out.push(x);
            }
        };
        if let Some(pc) = self.pseudo_core_witness(a).into_witness() {
            push(&mut out, pc.value);
        }
        if let Some(dpc) = self.dual_pseudo_core_witness(a).into_witness() {
            push(&mut out, self.star_of(&dpc.value));
            push(&mut out, dpc.value);
        }
        out
    }

    fn left_ideal_check(&self, x: &Matrix<F::Elem>, y: &Matrix<F::Elem>) -> bool {
        // R·x ⊆ R·y is row-space containment, i.e. column-space containment
        // of the plain transposes.
        self.range_contained(&x.transpose(), &y.transpose())
            .expect("same shape")
    }
}

macro_rules! impl_matrix_inverses {
    ($field:ty, $family:ident, $cands:ident) => {
        impl Inverses for MatrixStarRing<$field> {
            fn drazin(&self, a: &Self::Elem) -> InverseWitness<Self::Elem> {
                self.drazin_witness(a)
            }
            fn moore_penrose(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.mp_witness(a)
            }
            fn one_three(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.one_three_witness(a)
            }
            fn one_three_family(&self, a: &Self::Elem, probes: usize) -> Vec<Self::Elem> {
                self.$family(a, probes)
            }
            fn group(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.group_witness(a)
            }
            fn core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.core_witness(a)
            }
            fn pseudo_core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.pseudo_core_witness(a)
            }
            fn dual_pseudo_core(&self, a: &Self::Elem) -> ExistenceResult<Self::Elem> {
                self.dual_pseudo_core_witness(a)
            }
            fn equation_candidates(&self, a: &Self::Elem) -> Vec<Self::Elem> {
                self.$cands(a)
            }
            fn is_unit(&self, a: &Self::Elem) -> bool {
                self.unit_check(a)
            }
            fn left_ideal_contained(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
                self.left_ideal_check(x, y)
            }
            fn index_bound(&self, _a: &Self::Elem) -> u32 {
                self.n.max(1) as u32
            }
        }
    };
}

impl_matrix_inverses!(GaussianField, one_three_family_sampled, special_candidates);
impl_matrix_inverses!(PrimeField, one_three_family_exhaustive, candidates_exhaustive);

impl MatrixStarRing<PrimeField> {
    /// Every element, when the carrier is small enough for exhaustive
    /// quantification; constructed specials otherwise.
    fn candidates_exhaustive(&self, a: &Matrix<u64>) -> Vec<Matrix<u64>> {
        let total = self.carrier_size();
        if total <= 1 << 16 {
            (0..total).map(|i| self.element_at(i)).collect()
        } else {
            self.special_candidates(a)
        }
    }

    /// Every {1,3}-inverse, by scanning the whole finite carrier.
    fn one_three_family_exhaustive(&self, a: &Matrix<u64>, _probes: usize) -> Vec<Matrix<u64>> {
        let total = self
            .field
            .order()
            .checked_pow((self.n * self.n) as u32)
            .expect("carrier fits in u64");
        (0..total)
            .map(|i| self.element_at(i))
            .filter(|x| verify_penrose(self, a, x, PenroseEqs::ONE_THREE).expect("same carrier"))
            .collect()
    }

    /// The i-th matrix in the fixed enumeration: row-major base-p digits,
    /// most significant digit first.
    pub fn element_at(&self, i: u64) -> Matrix<u64> {
        let p = self.field.order();
        let cells = self.n * self.n;
        let mut digits = vec![0u64; cells];
        let mut v = i;
        for d in (0..cells).rev() {
            digits[d] = v % p;
            v /= p;
        }
        Matrix::new(self.n, self.n, digits)
    }

    pub fn element_index(&self, a: &Matrix<u64>) -> u64 {
        let p = self.field.order();
        a.entries().iter().fold(0u64, |acc, &e| acc * p + e)
    }

    pub fn carrier_size(&self) -> u64 {
        self.field
            .order()
            .checked_pow((self.n * self.n) as u32)
            .expect("carrier fits in u64")
    }
}
