//! Matrix factorizations of f = x^m + y^n + z^2 and the module W they
//! present.
//!
//! A matrix factorization is a pair of square matrices (φ, ψ) over the
//! polynomial ring with φψ = ψφ = f·I, identities that hold literally before
//! any reduction. The pair studied here is the rank-4 family indexed by
//! 1 ≤ k ≤ m, 1 ≤ l ≤ n. The cokernel W of φ is then a module over the
//! hypersurface ring, and the factorization identity makes two questions
//! decidable by a single matrix multiply:
//!
//! * a vector v lies in the column span of φ over A iff ψ·v ≡ 0 mod f
//!   (forward: ψφu = f·u ≡ 0; backward: ψv = f·u gives f·v = φψv = f·φu,
//!   and f is a nonzerodivisor, so v = φu);
//! * an operator M on A⁴ induces zero on W iff ψ·M ≡ 0 mod f entrywise.
//!
//! ```
//! use lrlab::matfac::MatrixFactorization;
//! use lrlab::ring::HypersurfaceRing;
//!
//! let ring = HypersurfaceRing::new(2, 2).unwrap();
//! let mf = MatrixFactorization::new(ring, 1, 1).unwrap();
//! assert!(mf.mf_check().is_empty());
//! ```

use crate::grobner::{self, FreeModuleElem, ModuleBasis};
use crate::monomial::Var;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::{HypersurfaceRing, RingElem};
use std::fmt;

/// Error from constructing a factorization with out-of-range indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatFacError {
    #[error("indices must satisfy 1 <= k <= m and 1 <= l <= n, got k = {k}, l = {l} for m = {m}, n = {n}")]
    IndexOutOfRange { m: u32, n: u32, k: u32, l: u32 },
}

/// A dense matrix of ring elements over one hypersurface ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    ring: HypersurfaceRing,
    rows: usize,
    cols: usize,
    entries: Vec<RingElem>,
}

impl RingMatrix {
    pub fn from_rows(ring: HypersurfaceRing, rows: Vec<Vec<Poly>>) -> Self {
        let nrows = rows.len();
        assert!(nrows > 0, "matrix must have rows");
        let ncols = rows[0].len();
        assert!(ncols > 0, "matrix must have columns");
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for p in row {
                entries.push(ring.elem(p));
            }
        }
        RingMatrix {
            ring,
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn zero(ring: HypersurfaceRing, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: HypersurfaceRing, size: usize) -> Self {
        let mut m = RingMatrix::zero(ring, size, size);
        for i in 0..size {
            m.entries[i * size + i] = ring.one();
        }
        m
    }

    /// Diagonal matrix with constant rational entries.
    pub fn diagonal(ring: HypersurfaceRing, diag: &[Rational]) -> Self {
        let mut m = RingMatrix::zero(ring, diag.len(), diag.len());
        for (i, c) in diag.iter().enumerate() {
            m.entries[i * diag.len() + i] = ring.elem(&Poly::constant(c.clone()));
        }
        m
    }

    pub fn ring(&self) -> HypersurfaceRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &RingElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: RingElem) {
        assert_eq!(v.ring(), self.ring, "entry from a different ring");
        self.entries[r * self.cols + c] = v;
    }

    /// Column as polynomial normal forms.
    pub fn column_polys(&self, c: usize) -> Vec<Poly> {
        (0..self.rows).map(|r| self.entry(r, c).repr().clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    fn same_shape(&self, other: &RingMatrix) {
        assert_eq!(self.ring, other.ring, "matrices over different rings");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
    }

    pub fn add(&self, other: &RingMatrix) -> RingMatrix {
        self.same_shape(other);
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RingMatrix) -> RingMatrix {
        self.same_shape(other);
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> RingMatrix {
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(RingElem::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RingMatrix {
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Multiplies every entry by one ring element.
    pub fn scale_elem(&self, a: &RingElem) -> RingMatrix {
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(a)).collect(),
        }
    }

    pub fn mul(&self, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.ring, other.ring, "matrices over different rings");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = RingMatrix::zero(self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.ring.zero();
                for t in 0..self.cols {
                    acc = acc.add(&self.entry(r, t).mul(other.entry(t, c)));
                }
                out.entries[r * other.cols + c] = acc;
            }
        }
        out
    }

    /// Matrix-vector product over the polynomial ring, then reduced mod f.
    pub fn apply_to_polys(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Poly::zero();
                for (c, vc) in v.iter().enumerate() {
                    acc = acc.add(&self.entry(r, c).repr().mul(vc));
                }
                self.ring.normal_form(&acc)
            })
            .collect()
    }

    pub fn trace(&self) -> RingElem {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = self.ring.zero();
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    /// Applies `op` to the normal-form representative of every entry and
    /// reduces the result.
    pub fn map_entries(&self, op: impl Fn(&Poly) -> Poly) -> RingMatrix {
        RingMatrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| self.ring.elem(&op(e.repr())))
                .collect(),
        }
    }
}

impl fmt::Display for RingMatrix {
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
                write!(f, "{}", self.entry(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Which product of the factorization pair an entry failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductSide {
    PhiPsi,
    PsiPhi,
}

impl fmt::Display for ProductSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductSide::PhiPsi => write!(f, "phi*psi"),
            ProductSide::PsiPhi => write!(f, "psi*phi"),
        }
    }
}

/// One entry of a factorization product that differs from f·I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationFailure {
    pub side: ProductSide,
    pub row: usize,
    pub col: usize,
    pub got: Poly,
    pub expected: Poly,
}

impl fmt::Display for FactorizationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} entry ({}, {}): got {}, expected {}",
            self.side,
            self.row + 1,
            self.col + 1,
            self.got,
            self.expected
        )
    }
}

/// The rank-4 factorization pair for f = x^m + y^n + z^2 at indices (k, l),
/// together with the module W = coker φ it presents.
#[derive(Clone, Debug)]
pub struct MatrixFactorization {
    ring: HypersurfaceRing,
    k: u32,
    l: u32,
    phi: RingMatrix,
    psi: RingMatrix,
}

fn check_indices(ring: HypersurfaceRing, k: u32, l: u32) -> Result<(), MatFacError> {
    if k < 1 || k > ring.m() || l < 1 || l > ring.n() {
        return Err(MatFacError::IndexOutOfRange {
            m: ring.m(),
            n: ring.n(),
            k,
            l,
        });
    }
    Ok(())
}

/// The first matrix of the pair:
/// [[x^{m-k}, y^{n-l}, 0, z], [y^l, -x^k, z, 0],
///  [z, 0, -y^{n-l}, -x^k], [0, z, x^{m-k}, -y^l]].
pub fn build_phi(ring: HypersurfaceRing, k: u32, l: u32) -> Result<RingMatrix, MatFacError> {
    check_indices(ring, k, l)?;
    let (m, n) = (ring.m(), ring.n());
    let xmk = Poly::var_pow(Var::X, m - k);
    let xk = Poly::var_pow(Var::X, k);
    let ynl = Poly::var_pow(Var::Y, n - l);
    let yl = Poly::var_pow(Var::Y, l);
    let z = Poly::var(Var::Z);
    let o = Poly::zero();
    Ok(RingMatrix::from_rows(
        ring,
        vec![
            vec![xmk.clone(), ynl.clone(), o.clone(), z.clone()],
            vec![yl.clone(), xk.neg(), z.clone(), o.clone()],
            vec![z.clone(), o.clone(), ynl.neg(), xk.neg()],
            vec![o, z, xmk, yl.neg()],
        ],
    ))
}

/// The second matrix of the pair:
/// [[x^k, y^{n-l}, z, 0], [y^l, -x^{m-k}, 0, z],
///  [0, z, -y^l, x^k], [z, 0, -x^{m-k}, -y^{n-l}]].
pub fn build_psi(ring: HypersurfaceRing, k: u32, l: u32) -> Result<RingMatrix, MatFacError> {
    check_indices(ring, k, l)?;
    let (m, n) = (ring.m(), ring.n());
    let xmk = Poly::var_pow(Var::X, m - k);
    let xk = Poly::var_pow(Var::X, k);
    let ynl = Poly::var_pow(Var::Y, n - l);
    let yl = Poly::var_pow(Var::Y, l);
    let z = Poly::var(Var::Z);
    let o = Poly::zero();
    Ok(RingMatrix::from_rows(
        ring,
        vec![
            vec![xk.clone(), ynl.clone(), z.clone(), o.clone()],
            vec![yl.clone(), xmk.neg(), o.clone(), z.clone()],
            vec![o.clone(), z.clone(), yl.neg(), xk],
            vec![z, o, xmk.neg(), ynl.neg()],
        ],
    ))
}

/// Both products of two 4×4 matrices, computed in Q[x, y, z] with no
/// reduction, compared literally against f·I.
pub fn factorization_failures(
    ring: HypersurfaceRing,
    phi: &RingMatrix,
    psi: &RingMatrix,
) -> Vec<FactorizationFailure> {
    assert_eq!(phi.rows(), phi.cols(), "phi must be square");
    assert_eq!(psi.rows(), psi.cols(), "psi must be square");
    assert_eq!(phi.rows(), psi.rows(), "pair size mismatch");
    let size = phi.rows();
    let f = ring.f();
    let mut failures = Vec::new();
    for (side, a, b) in [
        (ProductSide::PhiPsi, phi, psi),
        (ProductSide::PsiPhi, psi, phi),
    ] {
        for r in 0..size {
            for c in 0..size {
                let mut acc = Poly::zero();
                for t in 0..size {
                    acc = acc.add(&a.entry(r, t).repr().mul(b.entry(t, c).repr()));
                }
                let expected = if r == c { f.clone() } else { Poly::zero() };
                if acc != expected {
                    failures.push(FactorizationFailure {
                        side,
                        row: r,
                        col: c,
                        got: acc,
                        expected,
                    });
                }
            }
        }
    }
    failures
}

impl MatrixFactorization {
    pub fn new(ring: HypersurfaceRing, k: u32, l: u32) -> Result<Self, MatFacError> {
        let phi = build_phi(ring, k, l)?;
        let psi = build_psi(ring, k, l)?;
        Ok(MatrixFactorization {
            ring,
            k,
            l,
            phi,
            psi,
        })
    }

    pub fn ring(&self) -> HypersurfaceRing {
        self.ring
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn phi(&self) -> &RingMatrix {
        &self.phi
    }

    pub fn psi(&self) -> &RingMatrix {
        &self.psi
    }

    /// Entries where φψ or ψφ differs from f·I in Q[x, y, z]; empty means
    /// the pair is a genuine matrix factorization.
    pub fn mf_check(&self) -> Vec<FactorizationFailure> {
        factorization_failures(self.ring, &self.phi, &self.psi)
    }

    /// Whether `v` lies in the column span of φ over A, decided by the
    /// ψ-test: v ∈ im φ ⟺ ψ·v ≡ 0 mod f.
    pub fn column_in_image(&self, v: &FreeModuleElem) -> bool {
        assert_eq!(v.rank(), 4, "vectors over W have rank 4");
        self.psi
            .apply_to_polys(v.components())
            .iter()
            .all(Poly::is_zero)
    }

    /// Independent decision of the same membership through a Gröbner basis
    /// of the column span of φ augmented by f·eᵢ. Slow; used to cross-check
    /// [`Self::column_in_image`].
    pub fn column_in_image_groebner(&self, v: &FreeModuleElem) -> bool {
        self.image_basis().member(v).is_some()
    }

    /// Gröbner basis of im φ + f·A⁴ over the polynomial ring. Reusable for
    /// many membership queries.
    pub fn image_basis(&self) -> grobner::GroebnerBasis {
        let mut gens: Vec<FreeModuleElem> = (0..4)
            .map(|c| FreeModuleElem::new(self.phi.column_polys(c)))
            .collect();
        for i in 0..4 {
            gens.push(FreeModuleElem::unit(4, i, self.ring.f()));
        }
        grobner::buchberger(&ModuleBasis::new(gens))
    }

    /// Whether the A-linear operator `op` induces zero on W = coker φ,
    /// decided entrywise by ψ·op ≡ 0 mod f.
    pub fn operator_zero_on_w(&self, op: &RingMatrix) -> bool {
        assert_eq!((op.rows(), op.cols()), (4, 4), "operators on W are 4x4");
        self.psi.mul(op).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn ring(m: u32, n: u32) -> HypersurfaceRing {
        HypersurfaceRing::new(m, n).unwrap()
    }

    fn matrix(r: HypersurfaceRing, rows: [[&str; 4]; 4]) -> RingMatrix {
        RingMatrix::from_rows(
            r,
            rows.iter()
                .map(|row| row.iter().map(|s| p(s)).collect())
                .collect(),
        )
    }

    #[test]
    fn phi_2211_is_explicit() {
        let r = ring(2, 2);
        let phi = build_phi(r, 1, 1).unwrap();
        let expect = matrix(
            r,
            [
                ["x", "y", "0", "z"],
                ["y", "-x", "z", "0"],
                ["z", "0", "-y", "-x"],
                ["0", "z", "x", "-y"],
            ],
        );
        assert_eq!(phi, expect);
    }

    #[test]
    fn psi_2211_is_explicit() {
        let r = ring(2, 2);
        let psi = build_psi(r, 1, 1).unwrap();
        let expect = matrix(
            r,
            [
                ["x", "y", "z", "0"],
                ["y", "-x", "0", "z"],
                ["0", "z", "-y", "x"],
                ["z", "0", "-x", "-y"],
            ],
        );
        assert_eq!(psi, expect);
    }

    #[test]
    fn exponent_placement() {
        let phi = build_phi(ring(3, 2), 1, 1).unwrap();
        assert_eq!(phi.entry(0, 0).repr(), &p("x^2"));
        assert_eq!(phi.entry(0, 1).repr(), &p("y"));
        assert_eq!(phi.entry(0, 2).repr(), &p("0"));
        assert_eq!(phi.entry(0, 3).repr(), &p("z"));

        let psi = build_psi(ring(3, 3), 2, 1).unwrap();
        assert_eq!(psi.entry(0, 0).repr(), &p("x^2"));
    }

    #[test]
    fn zero_pattern() {
        for (m, n, k, l) in [(2, 2, 1, 1), (4, 3, 2, 3), (6, 6, 6, 6), (5, 2, 1, 2)] {
            let phi = build_phi(ring(m, n), k, l).unwrap();
            assert!(phi.entry(0, 2).is_zero());
            assert!(phi.entry(3, 0).is_zero());
        }
    }

    #[test]
    fn index_range_enforced() {
        let r = ring(3, 4);
        assert!(build_phi(r, 0, 1).is_err());
        assert!(build_phi(r, 4, 1).is_err());
        assert!(build_phi(r, 1, 5).is_err());
        assert!(MatrixFactorization::new(r, 3, 4).is_ok());
    }

    #[test]
    fn factorization_identity_holds_on_samples() {
        for (m, n, k, l) in [
            (2, 2, 1, 1),
            (3, 2, 1, 1),
            (3, 3, 2, 1),
            (5, 4, 3, 2),
            (6, 6, 6, 6),
            (2, 6, 2, 5),
        ] {
            let mf = MatrixFactorization::new(ring(m, n), k, l).unwrap();
            assert!(mf.mf_check().is_empty(), "({m},{n},{k},{l})");
        }
    }

    #[test]
    fn product_is_f_times_identity_before_reduction() {
        let r = ring(2, 2);
        let phi = build_phi(r, 1, 1).unwrap();
        let psi = build_psi(r, 1, 1).unwrap();
        for row in 0..4 {
            for col in 0..4 {
                let mut acc = Poly::zero();
                for t in 0..4 {
                    acc = acc.add(&phi.entry(row, t).repr().mul(psi.entry(t, col).repr()));
                }
                if row == col {
                    assert_eq!(acc, p("x^2 + y^2 + z^2"));
                } else {
                    assert!(acc.is_zero());
                }
            }
        }
    }

    #[test]
    fn perturbed_entry_is_reported() {
        let r = ring(2, 2);
        let mut phi = build_phi(r, 1, 1).unwrap();
        let psi = build_psi(r, 1, 1).unwrap();
        let bumped = phi.entry(0, 0).add(&r.one());
        phi.set_entry(0, 0, bumped);
        let failures = factorization_failures(r, &phi, &psi);
        assert!(!failures.is_empty());
        // Row 1 of phi*psi and column 1 of psi*phi are now wrong.
        assert!(failures
            .iter()
            .any(|f| f.side == ProductSide::PhiPsi && f.row == 0 && f.col == 0));
        let diag = failures
            .iter()
            .find(|f| f.side == ProductSide::PhiPsi && f.row == 0 && f.col == 0)
            .unwrap();
        assert_eq!(diag.got, p("x^2 + y^2 + z^2 + x"));
        assert_eq!(diag.expected, p("x^2 + y^2 + z^2"));
    }

    #[test]
    fn membership_examples() {
        let mf = MatrixFactorization::new(ring(2, 2), 1, 1).unwrap();

        let col1 = FreeModuleElem::new(mf.phi().column_polys(0));
        assert!(mf.column_in_image(&col1));

        let e1 = FreeModuleElem::unit(4, 0, Poly::one());
        assert!(!mf.column_in_image(&e1));

        let fe1 = FreeModuleElem::unit(4, 0, mf.ring().f());
        assert!(mf.column_in_image(&fe1));
    }

    #[test]
    fn membership_matches_groebner_oracle() {
        let mf = MatrixFactorization::new(ring(2, 3), 2, 1).unwrap();
        let basis = mf.image_basis();
        let mut probes = vec![
            FreeModuleElem::unit(4, 0, Poly::one()),
            FreeModuleElem::unit(4, 2, p("x*y - z")),
            FreeModuleElem::unit(4, 1, mf.ring().f().mul(&p("x + 1"))),
        ];
        for c in 0..4 {
            probes.push(FreeModuleElem::new(mf.phi().column_polys(c)));
            probes.push(FreeModuleElem::new(mf.phi().column_polys(c)).mul_poly(&p("y*z - 2")));
        }
        for v in &probes {
            assert_eq!(
                mf.column_in_image(v),
                basis.member(v).is_some(),
                "disagreement on {v}"
            );
        }
    }

    #[test]
    fn operator_zero_examples() {
        let mf = MatrixFactorization::new(ring(2, 2), 1, 1).unwrap();
        assert!(mf.operator_zero_on_w(mf.phi()));
        assert!(!mf.operator_zero_on_w(&RingMatrix::identity(mf.ring(), 4)));

        let any = matrix(
            mf.ring(),
            [
                ["x*y", "1", "0", "z"],
                ["0", "y^2", "3", "0"],
                ["z", "0", "-1/2", "x"],
                ["1", "2", "3", "4"],
            ],
        );
        let f_elem = mf.ring().elem(&mf.ring().f());
        assert!(mf.operator_zero_on_w(&any.scale_elem(&f_elem)));
    }

    #[test]
    fn operator_zero_is_linear() {
        let mf = MatrixFactorization::new(ring(3, 2), 2, 1).unwrap();
        let a = mf.phi().clone();
        let b = mf.phi().scale_elem(&mf.ring().elem(&p("x*z - 3")));
        assert!(mf.operator_zero_on_w(&a));
        assert!(mf.operator_zero_on_w(&b));
        assert!(mf.operator_zero_on_w(&a.add(&b)));
        assert!(mf.operator_zero_on_w(&a.scale_elem(&mf.ring().elem(&p("y + 5")))));
    }

    #[test]
    fn matrix_display_is_bracketed() {
        let r = ring(2, 2);
        let m = matrix(
            r,
            [
                ["x", "y", "0", "z"],
                ["y", "-x", "z", "0"],
                ["z", "0", "-y", "-x"],
                ["0", "z", "x", "-y"],
            ],
        );
        let s = m.to_string();
        assert!(s.starts_with("[[x, y, 0, z], "));
        assert!(s.ends_with("[0, z, x, -y]]"));
    }
}
