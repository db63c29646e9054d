//! Connection operators on the module W = coker φ.
//!
//! A connection assigns to each derivation δ an operator ∇_δ = δ(−) + A·(−)
//! on column vectors, where δ acts entrywise and A is a 4×4 matrix over A.
//! The operator acts on W exactly when it maps the column span of φ into
//! itself; [`ConnectionOperator::descends`] checks this through the ψ-test.
//!
//! [`standard_connection`] builds the closed-form matrices A₀, …, A₃ paired
//! with the standard generators. They are defined for 1 ≤ k < m and
//! 1 ≤ l < n; at k = m or l = n a formula exponent would be negative and
//! construction reports a domain violation. [`lift_solver`] instead finds a
//! companion matrix for any single derivation by exact degree-bounded linear
//! algebra, with no exponent restriction.
//!
//! Flatness is the statement that every [`curvature`] operator vanishes on
//! W; its trace is the scalar invariant that must vanish for the induced
//! line bundle data to be trivial.
//!
//! ```
//! use lrlab::connections::standard_connection;
//! use lrlab::matfac::MatrixFactorization;
//! use lrlab::ring::HypersurfaceRing;
//!
//! let ring = HypersurfaceRing::new(2, 2).unwrap();
//! let mf = MatrixFactorization::new(ring, 1, 1).unwrap();
//! let conn = standard_connection(&mf).unwrap();
//! for op in &conn.ops {
//!     assert!(op.descends(&mf));
//! }
//! ```

use crate::derivations::{
    monomials_of_weight, represent, standard_generators, Derivation, GeneratorSet, RepresentError,
};
use crate::linsolve;
use crate::matfac::{MatrixFactorization, RingMatrix};
use crate::monomial::{Monomial, Var};
use crate::poly::Poly;
use crate::rational::{rational, Rational};
use crate::ring::{HypersurfaceRing, RingElem};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// Construction failure for the closed-form connection matrices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectionError {
    #[error(
        "connection formulas need k < m and l < n \
         (x-exponent m-k-1 or y-exponent n-l-1 is negative at m = {m}, n = {n}, k = {k}, l = {l})"
    )]
    DomainViolation { m: u32, n: u32, k: u32, l: u32 },
}

/// One derivation paired with its companion matrix: the operator
/// v ↦ δ(v) + A·v on column vectors.
#[derive(Clone, Debug)]
pub struct ConnectionOperator {
    der: Derivation,
    mat: RingMatrix,
}

impl ConnectionOperator {
    pub fn new(der: Derivation, mat: RingMatrix) -> Self {
        assert_eq!(der.ring(), mat.ring(), "mixed rings");
        assert_eq!((mat.rows(), mat.cols()), (4, 4), "companion matrix is 4x4");
        ConnectionOperator { der, mat }
    }

    pub fn der(&self) -> &Derivation {
        &self.der
    }

    pub fn mat(&self) -> &RingMatrix {
        &self.mat
    }

    /// Applies the operator to a column vector.
    pub fn apply_column(&self, v: &[RingElem]) -> Vec<RingElem> {
        assert_eq!(v.len(), 4, "column vector of length 4");
        let polys: Vec<Poly> = v.iter().map(|e| e.repr().clone()).collect();
        let mv = self.mat.apply_to_polys(&polys);
        v.iter()
            .zip(mv)
            .map(|(e, m)| self.der.apply(e).add(&self.der.ring().elem(&m)))
            .collect()
    }

    /// Whether the operator preserves the column span of φ, so acts on
    /// W = coker φ: every column of δ(φ) + A·φ must pass the ψ-test.
    pub fn descends(&self, mf: &MatrixFactorization) -> bool {
        let moved = self.der.apply_matrix(mf.phi()).add(&self.mat.mul(mf.phi()));
        mf.operator_zero_on_w(&moved)
    }
}

/// A connection: one operator per standard generator, plus the relation set
/// used for consistency checks.
#[derive(Clone, Debug)]
pub struct Connection {
    pub mf: MatrixFactorization,
    pub gens: GeneratorSet,
    pub ops: [ConnectionOperator; 4],
}

/// The closed-form companion matrices (A₀, A₁, A₂, A₃) for the standard
/// generators at indices (k, l). Defined for 1 ≤ k < m, 1 ≤ l < n.
pub fn connection_matrices(
    ring: HypersurfaceRing,
    k: u32,
    l: u32,
) -> Result<[RingMatrix; 4], ConnectionError> {
    let (m, n) = (ring.m(), ring.n());
    if k == m || l == n {
        return Err(ConnectionError::DomainViolation { m, n, k, l });
    }
    let (mi, ni, ki, li) = (i64::from(m), i64::from(n), i64::from(k), i64::from(l));
    let (mn, nk, ml) = (mi * ni, ni * ki, mi * li);

    let a0 = RingMatrix::diagonal(
        ring,
        &[
            rational(2 * nk + 2 * ml - mn, 2),
            rational(3 * mn - 2 * ml - 2 * nk, 2),
            rational(mn + 2 * ml - 2 * nk, 2),
            rational(mn + 2 * nk - 2 * ml, 2),
        ],
    );

    let xy = |num: i64, den: i64, xe: u32, ye: u32| {
        Poly::term(Monomial::new(xe, ye, 0), rational(num, den))
    };
    let o = Poly::zero;

    let b1 = xy(mn - 2 * nk - 2 * ml, 4, k - 1, l - 1);
    let b2 = xy(3 * mn - 2 * ml - 2 * nk, 4, m - k - 1, n - l - 1);
    let b3 = xy(2 * nk - mn - 2 * ml, 4, m - k - 1, l - 1);
    let b4 = xy(2 * nk - 2 * ml + mn, 4, k - 1, n - l - 1);
    let a1 = RingMatrix::from_rows(
        ring,
        vec![
            vec![o(), b2, o(), o()],
            vec![b1, o(), o(), o()],
            vec![o(), o(), o(), b4],
            vec![o(), o(), b3, o()],
        ],
    );

    let c1 = xy(mn - 2 * ml - 2 * nk, 2 * ni, k - 1, 0);
    let c2 = xy(3 * mn - 2 * ml - 2 * nk, 2 * ni, m - k - 1, 0);
    let c3 = xy(mn + 2 * ml - 2 * nk, 2 * ni, m - k - 1, 0);
    let c4 = xy(2 * ml - 2 * nk - mn, 2 * ni, k - 1, 0);
    let a2 = RingMatrix::from_rows(
        ring,
        vec![
            vec![o(), o(), c3, o()],
            vec![o(), o(), o(), c4],
            vec![c1, o(), o(), o()],
            vec![o(), c2, o(), o()],
        ],
    );

    let d1 = xy(mn - 2 * ml - 2 * nk, 2 * mi, 0, l - 1);
    let d2 = xy(2 * ml + 2 * nk - 3 * mn, 2 * mi, 0, n - l - 1);
    let d3 = xy(mn + 2 * ml - 2 * nk, 2 * mi, 0, l - 1);
    let d4 = xy(mn - 2 * ml + 2 * nk, 2 * mi, 0, n - l - 1);
    let a3 = RingMatrix::from_rows(
        ring,
        vec![
            vec![o(), o(), o(), d4],
            vec![o(), o(), d3, o()],
            vec![o(), d2, o(), o()],
            vec![d1, o(), o(), o()],
        ],
    );

    Ok([a0, a1, a2, a3])
}

/// Builds the connection pairing each standard generator with its
/// closed-form companion matrix.
pub fn standard_connection(mf: &MatrixFactorization) -> Result<Connection, ConnectionError> {
    let ring = mf.ring();
    let gens = standard_generators(ring);
    let [a0, a1, a2, a3] = connection_matrices(ring, mf.k(), mf.l())?;
    let [d0, d1, d2, d3] = gens.gens.clone();
    Ok(Connection {
        mf: mf.clone(),
        gens,
        ops: [
            ConnectionOperator::new(d0, a0),
            ConnectionOperator::new(d1, a1),
            ConnectionOperator::new(d2, a2),
            ConnectionOperator::new(d3, a3),
        ],
    })
}

/// Indices of relations that the connection fails to respect. For a
/// relation (a₀, …, a₃) with Σ aᵢδᵢ = 0, the combined operator Σ aᵢ∇ᵢ is
/// multiplication by Σ aᵢAᵢ and must vanish on W.
pub fn a_linearity_failures(conn: &Connection) -> Vec<usize> {
    let ring = conn.mf.ring();
    let mut failures = Vec::new();
    for (idx, rel) in conn.gens.syz.relations.iter().enumerate() {
        let mut combined = RingMatrix::zero(ring, 4, 4);
        for (coeff, op) in rel.iter().zip(&conn.ops) {
            combined = combined.add(&op.mat().scale_elem(&ring.elem(coeff)));
        }
        if !conn.mf.operator_zero_on_w(&combined) {
            failures.push(idx);
        }
    }
    failures
}

/// The curvature operator of one generator pair, as a matrix acting on W.
#[derive(Clone, Debug)]
pub struct CurvatureValue {
    i: usize,
    j: usize,
    matrix: RingMatrix,
}

impl CurvatureValue {
    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    /// Whether the curvature operator vanishes on W.
    pub fn is_zero_on_module(&self, mf: &MatrixFactorization) -> bool {
        mf.operator_zero_on_w(&self.matrix)
    }

    /// The trace, reduced mod f. Vanishing traces for all pairs mean the
    /// induced first Chern form is zero.
    pub fn trace(&self) -> RingElem {
        self.matrix.trace()
    }
}

/// Curvature R(δᵢ, δⱼ) = ∇ᵢ∇ⱼ − ∇ⱼ∇ᵢ − ∇_{[δᵢ,δⱼ]}, where the bracket
/// operator is formed through [`represent`]. The derivation parts cancel,
/// leaving multiplication by
/// δᵢ(Aⱼ) − δⱼ(Aᵢ) + AᵢAⱼ − AⱼAᵢ − Σ aₜAₜ.
pub fn curvature(
    conn: &Connection,
    i: usize,
    j: usize,
    degree_bound: u32,
) -> Result<CurvatureValue, RepresentError> {
    let (di, dj) = (conn.ops[i].der(), conn.ops[j].der());
    let (ai, aj) = (conn.ops[i].mat(), conn.ops[j].mat());
    let bracket = di.bracket(dj);
    let combo = represent(&bracket, &conn.gens, degree_bound)?;
    let mut matrix = di
        .apply_matrix(aj)
        .sub(&dj.apply_matrix(ai))
        .add(&ai.mul(aj))
        .sub(&aj.mul(ai));
    for (coeff, op) in combo.coeffs.iter().zip(&conn.ops) {
        matrix = matrix.sub(&op.mat().scale_elem(coeff));
    }
    Ok(CurvatureValue { i, j, matrix })
}

/// Failure to find a companion matrix within the degree bound.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("no companion matrix with entries of degree <= {degree_bound} (weight {weight} component unsolvable)")]
    NoSolutionWithinBound { degree_bound: u32, weight: i64 },
}

/// Quasi-homogeneous row and column weights of φ at indices (k, l):
/// wt(φ_{rc}) = col[c] − row[r] for every nonzero entry.
fn phi_weights(ring: HypersurfaceRing, k: u32, l: u32) -> ([i64; 4], [i64; 4]) {
    let (m, n) = (i64::from(ring.m()), i64::from(ring.n()));
    let (kk, ll) = (i64::from(k), i64::from(l));
    let rows = [
        0,
        2 * n * (m - kk) - 2 * m * ll,
        2 * n * (m - kk) - m * n,
        2 * m * (n - ll) - m * n,
    ];
    let cols = [
        2 * n * (m - kk),
        2 * m * (n - ll),
        2 * n * (m - kk) - 2 * m * ll + m * n,
        m * n,
    ];
    (rows, cols)
}

/// Splits a derivation into weight-homogeneous components, sorted by shift.
fn weight_components(d: &Derivation) -> Vec<(i64, Derivation)> {
    let ring = d.ring();
    let (m, n) = (ring.m(), ring.n());
    let var_weights: [i64; 3] = [
        Monomial::var_pow(Var::X, 1).weight(m, n),
        Monomial::var_pow(Var::Y, 1).weight(m, n),
        Monomial::var_pow(Var::Z, 1).weight(m, n),
    ];
    let mut shifts = BTreeSet::new();
    for (slot, v) in Var::ALL.iter().enumerate() {
        for (mono, _) in d.value(*v).repr().iter() {
            shifts.insert(mono.weight(m, n) - var_weights[slot]);
        }
    }
    shifts
        .into_iter()
        .map(|w| {
            let pick = |slot: usize, v: Var| {
                let mut part = Poly::zero();
                for (mono, c) in d.value(v).repr().iter() {
                    if mono.weight(m, n) - var_weights[slot] == w {
                        part.add_term(*mono, c.clone());
                    }
                }
                part
            };
            let component = Derivation::new(
                ring,
                &pick(0, Var::X),
                &pick(1, Var::Y),
                &pick(2, Var::Z),
            );
            (w, component)
        })
        .collect()
}

/// Finds a companion matrix M for the derivation `d` on W = coker φ: the
/// operator d(−) + M·(−) must map the column span of φ into itself. Works
/// for any derivation and any indices (k, l), including those outside the
/// domain of the closed-form matrices.
///
/// The problem splits along quasi-homogeneous weight. For each component
/// the candidate entries M_{rc} range over normal-form monomials of the
/// forced weight up to `degree_bound`, and the ψ-test on δ(φ) + M·φ becomes
/// an exact linear system, solved by row reduction with free variables
/// pinned to zero. The result is canonical for a fixed bound and is
/// verified by back-substitution before returning.
pub fn lift_solver(
    d: &Derivation,
    mf: &MatrixFactorization,
    degree_bound: u32,
) -> Result<RingMatrix, LiftError> {
    let ring = mf.ring();
    assert_eq!(d.ring(), ring, "mixed rings");
    let (row_w, _col_w) = phi_weights(ring, mf.k(), mf.l());

    // P[r][c][rp][cp] = nf(ψ_{rp,r}·φ_{c,cp}): the multiplier of unknown
    // entry M_{rc} in equation slot (rp, cp) of ψ·(δ(φ) + M·φ).
    let mut p = vec![vec![vec![vec![Poly::zero(); 4]; 4]; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            for rp in 0..4 {
                for cp in 0..4 {
                    p[r][c][rp][cp] = mf
                        .psi()
                        .entry(rp, r)
                        .mul(mf.phi().entry(c, cp))
                        .repr()
                        .clone();
                }
            }
        }
    }

    let mut total = RingMatrix::zero(ring, 4, 4);
    for (w, component) in weight_components(d) {
        // Constant side: ψ·δ_w(φ), one polynomial per equation slot.
        let q = mf.psi().mul(&component.apply_matrix(mf.phi()));

        // Unknown columns: (r, c, monomial), r and c ascending, monomials
        // descending grevlex within one cell.
        let mut columns: Vec<(usize, usize, Monomial)> = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                let target = w + row_w[c] - row_w[r];
                for mono in monomials_of_weight(ring, target, degree_bound) {
                    columns.push((r, c, mono));
                }
            }
        }

        let one = Rational::from_integer(1.into());
        let col_values: Vec<Vec<Poly>> = columns
            .iter()
            .map(|(r, c, mono)| {
                (0..16)
                    .map(|slot| {
                        let (rp, cp) = (slot / 4, slot % 4);
                        ring.normal_form(&p[*r][*c][rp][cp].mul_term(mono, &one))
                    })
                    .collect()
            })
            .collect();

        // Row index set per equation slot.
        let mut row_monos: Vec<BTreeSet<Monomial>> = vec![BTreeSet::new(); 16];
        for vals in &col_values {
            for (slot, poly) in vals.iter().enumerate() {
                for (mono, _) in poly.iter() {
                    row_monos[slot].insert(*mono);
                }
            }
        }
        for slot in 0..16 {
            for (mono, _) in q.entry(slot / 4, slot % 4).repr().iter() {
                row_monos[slot].insert(*mono);
            }
        }

        let mut matrix: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for slot in 0..16 {
            for mono in row_monos[slot].iter().rev() {
                matrix.push(col_values.iter().map(|vals| vals[slot].coeff(mono)).collect());
                rhs.push(-q.entry(slot / 4, slot % 4).repr().coeff(mono));
            }
        }

        let solution =
            linsolve::solve(&matrix, &rhs).ok_or(LiftError::NoSolutionWithinBound {
                degree_bound,
                weight: w,
            })?;
        for ((r, c, mono), coeff) in columns.iter().zip(solution) {
            if !coeff.is_zero() {
                let updated = total
                    .entry(*r, *c)
                    .add(&ring.elem(&Poly::term(*mono, coeff)));
                total.set_entry(*r, *c, updated);
            }
        }
    }

    let op = ConnectionOperator::new(d.clone(), total.clone());
    assert!(
        op.descends(mf),
        "companion matrix back-substitution failed; solver invariant broken"
    );
    Ok(total)
}

impl fmt::Display for CurvatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({}, {}) = {}", self.i, self.j, self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_int;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn mf(m: u32, n: u32, k: u32, l: u32) -> MatrixFactorization {
        let ring = HypersurfaceRing::new(m, n).unwrap();
        MatrixFactorization::new(ring, k, l).unwrap()
    }

    #[test]
    fn matrices_at_2_2_1_1() {
        let m = mf(2, 2, 1, 1);
        let [a0, a1, a2, a3] = connection_matrices(m.ring(), 1, 1).unwrap();
        assert_eq!(
            a0,
            RingMatrix::diagonal(m.ring(), &vec![rational_int(2); 4])
        );
        let e = |mat: &RingMatrix, r: usize, c: usize, s: &str| {
            assert_eq!(mat.entry(r, c), &m.ring().elem(&p(s)), "entry ({r},{c})");
        };
        e(&a1, 0, 1, "1");
        e(&a1, 1, 0, "-1");
        e(&a1, 2, 3, "1");
        e(&a1, 3, 2, "-1");
        e(&a2, 0, 2, "1");
        e(&a2, 1, 3, "-1");
        e(&a2, 2, 0, "-1");
        e(&a2, 3, 1, "1");
        e(&a3, 0, 3, "1");
        e(&a3, 1, 2, "1");
        e(&a3, 2, 1, "-1");
        e(&a3, 3, 0, "-1");
        // Off-pattern entries are zero.
        for mat in [&a1, &a2, &a3] {
            let nonzero: usize = (0..4)
                .flat_map(|r| (0..4).map(move |c| (r, c)))
                .filter(|(r, c)| !mat.entry(*r, *c).is_zero())
                .count();
            assert_eq!(nonzero, 4);
        }
    }

    #[test]
    fn euler_matrix_trace() {
        for (m, n, k, l) in [(2, 2, 1, 1), (3, 2, 2, 1), (5, 4, 3, 2)] {
            let fac = mf(m, n, k, l);
            let [a0, a1, a2, a3] = connection_matrices(fac.ring(), k, l).unwrap();
            let mn = rational_int(2 * i64::from(m) * i64::from(n));
            assert_eq!(a0.trace(), fac.ring().elem(&Poly::constant(mn)));
            for a in [&a1, &a2, &a3] {
                assert!(a.trace().is_zero());
            }
        }
    }

    #[test]
    fn domain_violation_at_boundary_indices() {
        let ring = HypersurfaceRing::new(2, 3).unwrap();
        assert!(matches!(
            connection_matrices(ring, 2, 1),
            Err(ConnectionError::DomainViolation { k: 2, .. })
        ));
        assert!(matches!(
            connection_matrices(ring, 1, 3),
            Err(ConnectionError::DomainViolation { l: 3, .. })
        ));
        assert!(connection_matrices(ring, 1, 2).is_ok());
    }

    #[test]
    fn standard_connection_descends() {
        for (m, n, k, l) in [(2, 2, 1, 1), (3, 2, 2, 1), (4, 3, 3, 2)] {
            let fac = mf(m, n, k, l);
            let conn = standard_connection(&fac).unwrap();
            for (i, op) in conn.ops.iter().enumerate() {
                assert!(op.descends(&fac), "({m},{n},{k},{l}) operator {i}");
            }
        }
    }

    #[test]
    fn a_linearity_holds() {
        for (m, n, k, l) in [(2, 2, 1, 1), (3, 2, 2, 1), (4, 3, 3, 2)] {
            let conn = standard_connection(&mf(m, n, k, l)).unwrap();
            assert!(a_linearity_failures(&conn).is_empty(), "({m},{n},{k},{l})");
        }
    }

    #[test]
    fn scalar_shift_preserves_descent_but_breaks_a_linearity() {
        // Adding the identity to one companion matrix leaves every column
        // of δ(φ) + A·φ in the span of φ, but the relation set detects it.
        let fac = mf(2, 2, 1, 1);
        let mut conn = standard_connection(&fac).unwrap();
        let shifted = conn.ops[0]
            .mat()
            .add(&RingMatrix::identity(fac.ring(), 4));
        conn.ops[0] = ConnectionOperator::new(conn.ops[0].der().clone(), shifted);
        assert!(conn.ops[0].descends(&fac));
        assert!(!a_linearity_failures(&conn).is_empty());
    }

    #[test]
    fn curvature_vanishes_on_module() {
        for (m, n, k, l) in [(2, 2, 1, 1), (3, 2, 2, 1), (4, 3, 3, 2)] {
            let fac = mf(m, n, k, l);
            let conn = standard_connection(&fac).unwrap();
            let bound = 2 * (m + n);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let r = curvature(&conn, i, j, bound).unwrap();
                    assert!(r.is_zero_on_module(&fac), "({m},{n},{k},{l}) R({i},{j})");
                    assert!(r.trace().is_zero(), "({m},{n},{k},{l}) trace({i},{j})");
                }
            }
        }
    }

    #[test]
    fn perturbed_matrix_breaks_flatness() {
        let fac = mf(2, 2, 1, 1);
        let mut conn = standard_connection(&fac).unwrap();
        let mut mat = conn.ops[1].mat().clone();
        mat.set_entry(0, 0, fac.ring().elem(&p("x")));
        conn.ops[1] = ConnectionOperator::new(conn.ops[1].der().clone(), mat);
        let r = curvature(&conn, 0, 1, 8).unwrap();
        assert!(!r.is_zero_on_module(&fac));
    }

    #[test]
    fn lift_of_zero_derivation_is_zero() {
        let fac = mf(3, 2, 2, 1);
        let zero = Derivation::zero(fac.ring());
        let lifted = lift_solver(&zero, &fac, 10).unwrap();
        assert!(lifted.is_zero());
    }

    #[test]
    fn lift_solver_succeeds_on_generators() {
        for (m, n, k, l) in [(2, 2, 1, 1), (3, 2, 2, 1)] {
            let fac = mf(m, n, k, l);
            let gens = standard_generators(fac.ring());
            let bound = 2 * (m + n);
            for (i, d) in gens.gens.iter().enumerate() {
                let mat = lift_solver(d, &fac, bound)
                    .unwrap_or_else(|e| panic!("({m},{n},{k},{l}) generator {i}: {e}"));
                assert!(ConnectionOperator::new(d.clone(), mat).descends(&fac));
            }
        }
    }

    #[test]
    fn lift_solver_handles_boundary_indices() {
        // k = m and l = n are outside the closed-form domain; the solver
        // still finds companion matrices there.
        for (m, n, k, l) in [(2, 2, 2, 1), (2, 2, 1, 2), (3, 2, 3, 2), (2, 3, 2, 3)] {
            let fac = mf(m, n, k, l);
            assert!(connection_matrices(fac.ring(), k, l).is_err());
            let gens = standard_generators(fac.ring());
            let bound = 2 * (m + n);
            for (i, d) in gens.gens.iter().enumerate() {
                assert!(
                    lift_solver(d, &fac, bound).is_ok(),
                    "({m},{n},{k},{l}) generator {i}"
                );
            }
        }
    }

    #[test]
    fn solver_and_formula_differ_by_a_lift_of_zero() {
        let fac = mf(3, 2, 2, 1);
        let conn = standard_connection(&fac).unwrap();
        for i in 0..4 {
            let solved = lift_solver(conn.ops[i].der(), &fac, 10).unwrap();
            let diff = solved.sub(conn.ops[i].mat());
            let op = ConnectionOperator::new(Derivation::zero(fac.ring()), diff);
            assert!(op.descends(&fac), "operator {i}");
        }
    }

    #[test]
    fn weight_components_split_and_recombine() {
        let ring = HypersurfaceRing::new(3, 2).unwrap();
        let d = Derivation::new(ring, &p("x + z"), &p("y"), &p("0"));
        let parts = weight_components(&d);
        assert!(parts.len() > 1);
        let mut sum = Derivation::zero(ring);
        for (_, part) in &parts {
            sum = sum.add(part);
        }
        assert_eq!(sum, d);
    }

    #[test]
    fn apply_column_matches_definition() {
        let fac = mf(2, 2, 1, 1);
        let conn = standard_connection(&fac).unwrap();
        let ring = fac.ring();
        let v = [
            ring.elem(&p("x")),
            ring.elem(&p("y")),
            ring.elem(&p("z")),
            ring.one(),
        ];
        let out = conn.ops[0].apply_column(&v);
        for (r, got) in out.iter().enumerate() {
            let mut expect = conn.ops[0].der().apply(&v[r]);
            for (c, vc) in v.iter().enumerate() {
                expect = expect.add(&conn.ops[0].mat().entry(r, c).mul(vc));
            }
            assert_eq!(got, &expect);
        }
    }
}
