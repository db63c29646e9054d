//! Gröbner bases for submodules of free modules over Q[x, y, z].
//!
//! Elements live in a free module of fixed rank with [`Poly`] components.
//! The module order is position-over-term: a term in an earlier component
//! beats every term in a later one, and ties within a component fall back to
//! grevlex. Under this order the computations stay fully deterministic:
//! S-pairs leave a queue keyed by (lcm degree, insertion index), division
//! always tries basis elements in listed order, and the final basis is
//! reduced, monic, and sorted by descending lead term.
//!
//! Position-over-term is also an elimination order, which is what
//! [`syzygies_poly`] exploits: augmenting each generator with a unit vector
//! in a trailing block and intersecting the Gröbner basis with that block
//! yields a generating set for the module of relations. [`syzygies_over_quotient`]
//! pushes this through the hypersurface ring by adjoining `f` times each unit
//! vector before extracting relations.
//!
//! ```
//! use lrlab::grobner::{syzygies_poly, FreeModuleElem};
//! use lrlab::poly::Poly;
//!
//! let x = FreeModuleElem::new(vec!["x".parse().unwrap()]);
//! let y = FreeModuleElem::new(vec!["y".parse().unwrap()]);
//! let relations = syzygies_poly(&[x, y]);
//! // x and y satisfy the Koszul relation y*x - x*y = 0.
//! assert_eq!(relations.len(), 1);
//! assert_eq!(relations[0][0], "y".parse::<Poly>().unwrap());
//! assert_eq!(relations[0][1], "-x".parse::<Poly>().unwrap());
//! ```

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::HypersurfaceRing;
use num_traits::One;
use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

/// An element of a free module Q[x, y, z]^rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModuleElem {
    components: Vec<Poly>,
}

/// The lead term of a module element under position-over-term order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeadTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Position-over-term comparison: earlier positions dominate, grevlex breaks
/// ties within a position.
fn cmp_pot(a_pos: usize, a_mono: &Monomial, b_pos: usize, b_mono: &Monomial) -> Ordering {
    match b_pos.cmp(&a_pos) {
        Ordering::Equal => a_mono.cmp(b_mono),
        other => other,
    }
}

impl FreeModuleElem {
    pub fn new(components: Vec<Poly>) -> Self {
        assert!(!components.is_empty(), "rank must be positive");
        FreeModuleElem { components }
    }

    pub fn zero(rank: usize) -> Self {
        FreeModuleElem::new(vec![Poly::zero(); rank])
    }

    /// The standard basis vector `p * e_pos`.
    pub fn unit(rank: usize, pos: usize, p: Poly) -> Self {
        let mut components = vec![Poly::zero(); rank];
        components[pos] = p;
        FreeModuleElem::new(components)
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, pos: usize) -> &Poly {
        &self.components[pos]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Largest term under position-over-term order.
    pub fn lead_term(&self) -> Option<LeadTerm> {
        for (pos, p) in self.components.iter().enumerate() {
            if let Some((mono, coeff)) = p.leading_term() {
                return Some(LeadTerm {
                    pos,
                    mono: *mono,
                    coeff: coeff.clone(),
                });
            }
        }
        None
    }

    fn same_rank(&self, other: &FreeModuleElem) {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
    }

    pub fn add(&self, other: &FreeModuleElem) -> FreeModuleElem {
        self.same_rank(other);
        FreeModuleElem::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &FreeModuleElem) -> FreeModuleElem {
        self.same_rank(other);
        FreeModuleElem::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    pub fn neg(&self) -> FreeModuleElem {
        FreeModuleElem::new(self.components.iter().map(Poly::neg).collect())
    }

    pub fn scale(&self, c: &Rational) -> FreeModuleElem {
        FreeModuleElem::new(self.components.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplies every component by the term `c * mono`.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> FreeModuleElem {
        FreeModuleElem::new(
            self.components
                .iter()
                .map(|p| p.mul_term(mono, c))
                .collect(),
        )
    }

    pub fn mul_poly(&self, p: &Poly) -> FreeModuleElem {
        FreeModuleElem::new(self.components.iter().map(|q| q.mul(p)).collect())
    }
}

impl fmt::Display for FreeModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A list of generators of a submodule, all of equal rank.
///
/// Zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    rank: usize,
    gens: Vec<FreeModuleElem>,
}

impl ModuleBasis {
    pub fn new(gens: Vec<FreeModuleElem>) -> Self {
        let gens: Vec<FreeModuleElem> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let rank = gens.first().map_or(1, FreeModuleElem::rank);
        for g in &gens {
            assert_eq!(g.rank(), rank, "generators of mixed rank");
        }
        ModuleBasis { rank, gens }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElem] {
        &self.gens
    }
}

/// Division with remainder by a list of module elements.
///
/// Returns quotients q and remainder r with `v = Σ qᵢ·basisᵢ + r` exactly,
/// where no term of r is divisible by any basis lead term. Basis elements are
/// tried in listed order at every step, so the result is deterministic.
pub fn divide(v: &FreeModuleElem, basis: &[FreeModuleElem]) -> (Vec<Poly>, FreeModuleElem) {
    let leads: Vec<LeadTerm> = basis
        .iter()
        .map(|b| b.lead_term().expect("zero element in dividing basis"))
        .collect();
    let mut p = v.clone();
    let mut rem = FreeModuleElem::zero(v.rank());
    let mut q = vec![Poly::zero(); basis.len()];
    'outer: while let Some(lt) = p.lead_term() {
        for (i, bl) in leads.iter().enumerate() {
            if bl.pos == lt.pos && bl.mono.divides(&lt.mono) {
                let t = lt.mono.div(&bl.mono).expect("divisibility checked");
                let c = &lt.coeff / &bl.coeff;
                p = p.sub(&basis[i].mul_term(&t, &c));
                q[i].add_term(t, c);
                continue 'outer;
            }
        }
        // Lead term irreducible: move it to the remainder.
        rem.components[lt.pos].add_term(lt.mono, lt.coeff.clone());
        p.components[lt.pos].add_term(lt.mono, -lt.coeff);
    }
    (q, rem)
}

/// A completed Gröbner basis that remembers how each element is written in
/// the original generators, enabling exact membership certificates.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    rank: usize,
    elements: Vec<FreeModuleElem>,
    /// `elements[i] = Σ_k expr[i][k] · original generator k`.
    expr: Vec<Vec<Poly>>,
    n_original: usize,
}

impl GroebnerBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[FreeModuleElem] {
        &self.elements
    }

    /// Normal form of `v` modulo the submodule.
    pub fn normal_form(&self, v: &FreeModuleElem) -> FreeModuleElem {
        divide(v, &self.elements).1
    }

    /// Membership with certificate: returns quotients against the original
    /// generators with `v = Σ qᵢ·genᵢ` exactly, or `None` if `v` is not in
    /// the submodule.
    pub fn member(&self, v: &FreeModuleElem) -> Option<Vec<Poly>> {
        let (q, rem) = divide(v, &self.elements);
        if !rem.is_zero() {
            return None;
        }
        let mut out = vec![Poly::zero(); self.n_original];
        for (qi, expr) in q.iter().zip(&self.expr) {
            if qi.is_zero() {
                continue;
            }
            for (k, e) in expr.iter().enumerate() {
                if !e.is_zero() {
                    out[k] = out[k].add(&qi.mul(e));
                }
            }
        }
        Some(out)
    }
}

struct Tracked {
    elem: FreeModuleElem,
    expr: Vec<Poly>,
}

/// Buchberger's algorithm, yielding the reduced Gröbner basis.
///
/// S-pairs are formed only between elements whose leads share a position.
/// The coprime-lead shortcut is sound only in rank 1 and is applied only
/// there. The queue is ordered by (lcm total degree, insertion index), so
/// the run is reproducible.
pub fn buchberger(basis: &ModuleBasis) -> GroebnerBasis {
    let n_original = basis.gens.len();
    let mut elems: Vec<Tracked> = basis
        .gens
        .iter()
        .enumerate()
        .map(|(k, g)| Tracked {
            elem: g.clone(),
            expr: {
                let mut e = vec![Poly::zero(); n_original];
                e[k] = Poly::one();
                e
            },
        })
        .collect();
    // Mirror of the element vectors, kept so division can borrow a slice.
    let mut bare: Vec<FreeModuleElem> = elems.iter().map(|t| t.elem.clone()).collect();

    // Queue entries: (Reverse((lcm degree, sequence)), i, j).
    let mut queue: BinaryHeap<(Reverse<(u32, u64)>, usize, usize)> = BinaryHeap::new();
    let mut seq: u64 = 0;
    fn push_pairs(
        queue: &mut BinaryHeap<(Reverse<(u32, u64)>, usize, usize)>,
        seq: &mut u64,
        elems: &[Tracked],
        j: usize,
    ) {
        let lj = elems[j].elem.lead_term().expect("nonzero basis element");
        for (i, other) in elems.iter().enumerate().take(j) {
            let li = other.elem.lead_term().expect("nonzero basis element");
            if li.pos != lj.pos {
                continue;
            }
            let deg = li.mono.lcm(&lj.mono).degree();
            queue.push((Reverse((deg, *seq)), i, j));
            *seq += 1;
        }
    }
    for j in 0..elems.len() {
        push_pairs(&mut queue, &mut seq, &elems, j);
    }

    let rank = basis.rank;
    while let Some((_, i, j)) = queue.pop() {
        let li = elems[i].elem.lead_term().expect("nonzero");
        let lj = elems[j].elem.lead_term().expect("nonzero");
        debug_assert_eq!(li.pos, lj.pos);
        if rank == 1 && li.mono.coprime(&lj.mono) {
            // Coprime-lead S-pairs reduce to zero, but only over the ring
            // itself; the shortcut fails for module ranks above 1.
            continue;
        }
        let l = li.mono.lcm(&lj.mono);
        let ti = l.div(&li.mono).expect("lcm divisible");
        let tj = l.div(&lj.mono).expect("lcm divisible");
        let ci = li.coeff.recip();
        let cj = lj.coeff.recip();
        let s_elem = elems[i]
            .elem
            .mul_term(&ti, &ci)
            .sub(&elems[j].elem.mul_term(&tj, &cj));
        if s_elem.is_zero() {
            continue;
        }
        let (q, rem) = divide(&s_elem, &bare);
        if rem.is_zero() {
            continue;
        }
        let mut expr: Vec<Poly> = (0..n_original)
            .map(|k| {
                elems[i].expr[k]
                    .mul_term(&ti, &ci)
                    .sub(&elems[j].expr[k].mul_term(&tj, &cj))
            })
            .collect();
        for (qt, t) in q.iter().zip(&elems) {
            if qt.is_zero() {
                continue;
            }
            for (k, e) in expr.iter_mut().enumerate() {
                if !t.expr[k].is_zero() {
                    *e = e.sub(&qt.mul(&t.expr[k]));
                }
            }
        }
        bare.push(rem.clone());
        elems.push(Tracked { elem: rem, expr });
        let j_new = elems.len() - 1;
        push_pairs(&mut queue, &mut seq, &elems, j_new);
    }

    let reduced = reduce_basis(elems);
    debug_assert!(reduced
        .elements
        .iter()
        .zip(&reduced.expr)
        .all(|(elem, expr)| reconstruct(expr, &basis.gens) == *elem));
    GroebnerBasis {
        rank,
        elements: reduced.elements,
        expr: reduced.expr,
        n_original,
    }
}

struct ReducedParts {
    elements: Vec<FreeModuleElem>,
    expr: Vec<Vec<Poly>>,
}

/// Minimalizes and inter-reduces a completed basis, keeping expressions in
/// the original generators consistent.
fn reduce_basis(mut elems: Vec<Tracked>) -> ReducedParts {
    // Minimal set: scan leads in ascending order (stable on insertion order)
    // and drop any element whose lead is divisible by a kept lead.
    elems.sort_by(|a, b| {
        let la = a.elem.lead_term().expect("nonzero");
        let lb = b.elem.lead_term().expect("nonzero");
        cmp_pot(la.pos, &la.mono, lb.pos, &lb.mono)
    });
    let mut kept: Vec<Tracked> = Vec::new();
    'cand: for t in elems {
        let lt = t.elem.lead_term().expect("nonzero");
        for k in &kept {
            let kl = k.elem.lead_term().expect("nonzero");
            if kl.pos == lt.pos && kl.mono.divides(&lt.mono) {
                continue 'cand;
            }
        }
        kept.push(t);
    }

    // Inter-reduce: tails are rewritten against the other kept elements.
    // Lead terms are pairwise indivisible, so each lead survives and the
    // irreducibility of the result depends only on the fixed set of leads.
    for i in 0..kept.len() {
        let others: Vec<FreeModuleElem> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, t)| t.elem.clone())
            .collect();
        if others.is_empty() {
            break;
        }
        let others_expr: Vec<Vec<Poly>> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, t)| t.expr.clone())
            .collect();
        let (q, rem) = divide(&kept[i].elem, &others);
        if q.iter().all(Poly::is_zero) {
            continue;
        }
        let mut expr = kept[i].expr.clone();
        for (qt, oe) in q.iter().zip(&others_expr) {
            if qt.is_zero() {
                continue;
            }
            for (k, e) in expr.iter_mut().enumerate() {
                if !oe[k].is_zero() {
                    *e = e.sub(&qt.mul(&oe[k]));
                }
            }
        }
        kept[i] = Tracked { elem: rem, expr };
    }

    // Monic, sorted by descending lead.
    for t in &mut kept {
        let lc = t.elem.lead_term().expect("nonzero").coeff;
        if !lc.is_one() {
            let inv = lc.recip();
            t.elem = t.elem.scale(&inv);
            t.expr = t.expr.iter().map(|p| p.scale(&inv)).collect();
        }
    }
    kept.sort_by(|a, b| {
        let la = a.elem.lead_term().expect("nonzero");
        let lb = b.elem.lead_term().expect("nonzero");
        cmp_pot(lb.pos, &lb.mono, la.pos, &la.mono)
    });

    let mut elements = Vec::with_capacity(kept.len());
    let mut expr = Vec::with_capacity(kept.len());
    for t in kept {
        elements.push(t.elem);
        expr.push(t.expr);
    }
    ReducedParts { elements, expr }
}

fn reconstruct(coeffs: &[Poly], gens: &[FreeModuleElem]) -> FreeModuleElem {
    let rank = gens.first().map_or(1, FreeModuleElem::rank);
    let mut acc = FreeModuleElem::zero(rank);
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc = acc.add(&g.mul_poly(c));
        }
    }
    acc
}

/// Decides membership of `v` in the submodule spanned by `basis`, returning
/// exact certificate quotients against the original generators on success.
pub fn submodule_membership(v: &FreeModuleElem, basis: &ModuleBasis) -> Option<Vec<Poly>> {
    if v.is_zero() {
        return Some(vec![Poly::zero(); basis.gens.len()]);
    }
    assert_eq!(v.rank(), basis.rank(), "rank mismatch");
    buchberger(basis).member(v)
}

/// Generating set for the syzygies of `gens` over the polynomial ring:
/// all vectors (a₁, …, a_s) with Σ aᵢ·gensᵢ = 0.
///
/// Each generator is augmented with a unit vector in a trailing block;
/// position-over-term makes the leading block an elimination block, so the
/// Gröbner basis elements vanishing there carry the relations.
pub fn syzygies_poly(gens: &[FreeModuleElem]) -> Vec<Vec<Poly>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let rank = gens[0].rank();
    let s = gens.len();
    let aug: Vec<FreeModuleElem> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut components = g.components().to_vec();
            components.resize(rank + s, Poly::zero());
            components[rank + j] = Poly::one();
            FreeModuleElem::new(components)
        })
        .collect();
    let gb = buchberger(&ModuleBasis::new(aug));
    let mut relations = Vec::new();
    for elem in gb.elements() {
        if elem.components()[..rank].iter().all(Poly::is_zero) {
            relations.push(elem.components()[rank..].to_vec());
        }
    }
    relations
}

/// Relations among module elements over the hypersurface ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygySet {
    /// Each relation has one coefficient per generator; contracting it
    /// against the generators gives zero componentwise mod f.
    pub relations: Vec<Vec<Poly>>,
}

impl SyzygySet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Gröbner basis for the span of the relations over the hypersurface
    /// ring, realized over the polynomial ring by adjoining f times each
    /// unit vector. Build once and reuse for repeated membership queries.
    pub fn span_basis(&self, ring: &HypersurfaceRing) -> GroebnerBasis {
        let s = self
            .relations
            .first()
            .map(Vec::len)
            .expect("span basis needs at least one relation to fix the rank");
        let mut gens: Vec<FreeModuleElem> = self
            .relations
            .iter()
            .map(|r| FreeModuleElem::new(r.clone()))
            .collect();
        for i in 0..s {
            gens.push(FreeModuleElem::unit(s, i, ring.f()));
        }
        buchberger(&ModuleBasis::new(gens))
    }

    /// Whether `candidate` lies in the span of the relations over the
    /// hypersurface ring.
    pub fn spans(&self, candidate: &[Poly], ring: &HypersurfaceRing) -> bool {
        if candidate.iter().all(Poly::is_zero) {
            return true;
        }
        if self.relations.is_empty() {
            // Span is f·A^rank; reduce each component mod f.
            return candidate.iter().all(|p| ring.is_zero_mod_f(p));
        }
        let v = FreeModuleElem::new(candidate.to_vec());
        self.span_basis(ring).member(&v).is_some()
    }
}

/// Generating set for the syzygies of `gens` over A = Q[x, y, z]/(f).
///
/// Computes polynomial-ring syzygies of the list extended by f·e₁, …, f·e_r,
/// projects each relation onto the original generators, and reduces mod f.
/// Zero relations are dropped.
pub fn syzygies_over_quotient(gens: &[FreeModuleElem], ring: &HypersurfaceRing) -> SyzygySet {
    if gens.is_empty() {
        return SyzygySet {
            relations: Vec::new(),
        };
    }
    let rank = gens[0].rank();
    let s = gens.len();
    let mut aug = gens.to_vec();
    for i in 0..rank {
        aug.push(FreeModuleElem::unit(rank, i, ring.f()));
    }
    let mut relations = Vec::new();
    for rel in syzygies_poly(&aug) {
        let projected: Vec<Poly> = rel[..s].iter().map(|p| ring.normal_form(p)).collect();
        if projected.iter().all(Poly::is_zero) {
            continue;
        }
        if !relations.contains(&projected) {
            relations.push(projected);
        }
    }
    SyzygySet { relations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn e1(s: &str) -> FreeModuleElem {
        FreeModuleElem::new(vec![p(s)])
    }

    fn ring22() -> HypersurfaceRing {
        HypersurfaceRing::new(2, 2).unwrap()
    }

    #[test]
    fn pot_order_prefers_earlier_positions() {
        let v = FreeModuleElem::new(vec![p("x"), p("y^5")]);
        let lt = v.lead_term().unwrap();
        assert_eq!(lt.pos, 0);
        assert_eq!(lt.mono, Monomial::new(1, 0, 0));
    }

    #[test]
    fn divide_examples() {
        let f = ring22().f();
        // f·e1 by {f·e1}: quotient 1, remainder 0.
        let (q, r) = divide(&e1(&f.to_string()), &[e1(&f.to_string())]);
        assert_eq!(q, vec![Poly::one()]);
        assert!(r.is_zero());

        // x·e1 by {y·e1}: nothing divides, remainder is the input.
        let (q, r) = divide(&e1("x"), &[e1("y")]);
        assert_eq!(q, vec![Poly::zero()]);
        assert_eq!(r, e1("x"));

        // (x^2 y + x)·e1 by {x·e1}: quotient x y + 1.
        let (q, r) = divide(&e1("x^2*y + x"), &[e1("x")]);
        assert_eq!(q, vec![p("x*y + 1")]);
        assert!(r.is_zero());
    }

    #[test]
    fn divide_identity_holds() {
        let basis = vec![
            FreeModuleElem::new(vec![p("x^2 + y"), p("z")]),
            FreeModuleElem::new(vec![p("y"), p("x - 1")]),
        ];
        let v = FreeModuleElem::new(vec![p("x^3*y - z + 1"), p("x*y*z^2")]);
        let (q, r) = divide(&v, &basis);
        let mut recon = r.clone();
        for (qi, b) in q.iter().zip(&basis) {
            recon = recon.add(&b.mul_poly(qi));
        }
        assert_eq!(recon, v);
        // Remainder terms are irreducible by the basis leads.
        for (pos, comp) in r.components().iter().enumerate() {
            for (mono, _) in comp.iter() {
                for b in &basis {
                    let bl = b.lead_term().unwrap();
                    assert!(!(bl.pos == pos && bl.mono.divides(mono)));
                }
            }
        }
    }

    #[test]
    fn buchberger_examples() {
        // {x, y} is already a Gröbner basis.
        let gb = buchberger(&ModuleBasis::new(vec![e1("x"), e1("y")]));
        assert_eq!(gb.elements(), &[e1("x"), e1("y")]);

        // A single generator is its own basis.
        let f = ring22().f().to_string();
        let gb = buchberger(&ModuleBasis::new(vec![e1(&f)]));
        assert_eq!(gb.elements(), &[e1(&f)]);

        // {x^2, x^2 + y} reveals y.
        let gb = buchberger(&ModuleBasis::new(vec![e1("x^2"), e1("x^2 + y")]));
        assert!(gb.elements().contains(&e1("y")));
        assert!(gb.elements().contains(&e1("x^2")));
    }

    #[test]
    fn groebner_expressions_reconstruct_elements() {
        let gens = vec![e1("x^2 + y^2"), e1("x*y - 1")];
        let gb = buchberger(&ModuleBasis::new(gens.clone()));
        for (elem, expr) in gb.elements().iter().zip(&gb.expr) {
            assert_eq!(&reconstruct(expr, &gens), elem);
        }
    }

    #[test]
    fn membership_examples() {
        let f = ring22().f();
        // Zero is always a member.
        let basis = ModuleBasis::new(vec![e1(&f.to_string())]);
        assert!(submodule_membership(&FreeModuleElem::zero(1), &basis).is_some());

        // x is not in (f) for degree reasons.
        assert!(submodule_membership(&e1("x"), &basis).is_none());

        // f^2·e2 in {f·e2} with quotient f.
        let rank2 = ModuleBasis::new(vec![FreeModuleElem::unit(2, 1, f.clone())]);
        let target = FreeModuleElem::unit(2, 1, f.mul(&f));
        let q = submodule_membership(&target, &rank2).unwrap();
        assert_eq!(q, vec![f.clone()]);
    }

    #[test]
    fn membership_certificate_reconstructs() {
        let gens = vec![
            FreeModuleElem::new(vec![p("x"), p("y")]),
            FreeModuleElem::new(vec![p("y"), p("x")]),
            FreeModuleElem::new(vec![p("0"), p("z^2")]),
        ];
        let combo = gens[0]
            .mul_poly(&p("x*y - 3"))
            .add(&gens[1].mul_poly(&p("z + 1/2")))
            .add(&gens[2].mul_poly(&p("x - y")));
        let basis = ModuleBasis::new(gens.clone());
        let q = submodule_membership(&combo, &basis).unwrap();
        assert_eq!(reconstruct(&q, &gens), combo);
    }

    #[test]
    fn koszul_syzygy() {
        let relations = syzygies_poly(&[e1("x"), e1("y")]);
        assert!(relations.contains(&vec![p("y"), p("-x")]));
        // Every relation annihilates the generators.
        for rel in &relations {
            let sum = rel[0].mul(&p("x")).add(&rel[1].mul(&p("y")));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn quotient_syzygies_of_koszul_pair() {
        let ring = ring22();
        let syz = syzygies_over_quotient(&[e1("x"), e1("y")], &ring);
        assert!(syz.relations.contains(&vec![p("y"), p("-x")]));
        for rel in &syz.relations {
            let sum = rel[0].mul(&p("x")).add(&rel[1].mul(&p("y")));
            assert!(ring.is_zero_mod_f(&sum));
        }
        assert!(syz.spans(&[p("y"), p("-x")], &ring));
        assert!(syz.spans(&[p("x*y"), p("-x^2")], &ring));
        assert!(!syz.spans(&[p("1"), p("0")], &ring));
    }

    #[test]
    fn quotient_syzygies_of_unit_are_trivial() {
        let ring = ring22();
        let syz = syzygies_over_quotient(&[e1("1")], &ring);
        assert!(syz.is_empty());
    }

    #[test]
    fn coprime_skip_not_applied_above_rank_one() {
        // In rank 2 the coprime-lead shortcut is unsound; this basis needs
        // its S-pair. Generators: (x, y), (y, x). S-pair gives
        // y(x,y) - x(y,x) = (0, y^2 - x^2), which must appear in the basis.
        let gens = vec![
            FreeModuleElem::new(vec![p("x"), p("y")]),
            FreeModuleElem::new(vec![p("y"), p("x")]),
        ];
        let gb = buchberger(&ModuleBasis::new(gens));
        let probe = FreeModuleElem::new(vec![p("0"), p("y^2 - x^2")]);
        assert!(gb.member(&probe).is_some());
    }
}
