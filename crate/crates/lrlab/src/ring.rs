//! The hypersurface ring A = Q[x, y, z] / (x^m + y^n + z^2).
//!
//! Every residue class has a unique representative of z-degree at most 1,
//! obtained by rewriting z^2 to -(x^m + y^n) until no term contains z^2.
//! [`HypersurfaceRing::normal_form`] computes that representative, and all
//! ring arithmetic reduces through it, so equality of [`RingElem`] values is
//! ordinary structural equality.
//!
//! ```
//! use lrlab::ring::HypersurfaceRing;
//!
//! let ring = HypersurfaceRing::new(2, 2).unwrap();
//! let z2 = ring.elem(&"z^2".parse().unwrap());
//! assert_eq!(z2.to_string(), "-x^2 - y^2");
//! assert!(ring.elem(&ring.f()).is_zero());
//! ```

use crate::monomial::{Monomial, Var};
use crate::poly::Poly;
use crate::rational::Rational;
use std::fmt;

/// Error constructing a ring or an operator on one.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("exponents must satisfy m >= 2 and n >= 2, got m = {m}, n = {n}")]
    ExponentOutOfRange { m: u32, n: u32 },
}

/// The ring Q[x, y, z] / (x^m + y^n + z^2) for fixed m, n >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HypersurfaceRing {
    m: u32,
    n: u32,
}

impl HypersurfaceRing {
    pub fn new(m: u32, n: u32) -> Result<Self, RingError> {
        if m < 2 || n < 2 {
            return Err(RingError::ExponentOutOfRange { m, n });
        }
        Ok(HypersurfaceRing { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The defining polynomial x^m + y^n + z^2.
    pub fn f(&self) -> Poly {
        Poly::var_pow(Var::X, self.m)
            .add(&Poly::var_pow(Var::Y, self.n))
            .add(&Poly::var_pow(Var::Z, 2))
    }

    /// The unique representative of `p + (f)` with z-degree at most 1.
    ///
    /// Each pass splits off every term divisible by z^2 and replaces that
    /// factor with -(x^m + y^n); each pass strictly lowers the maximum
    /// z-exponent, so the loop terminates.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut cur = p.clone();
        let neg_xm_yn = Poly::var_pow(Var::X, self.m)
            .add(&Poly::var_pow(Var::Y, self.n))
            .neg();
        while cur.z_degree() >= 2 {
            let mut next = Poly::zero();
            for (mono, c) in cur.iter() {
                if mono.z() >= 2 {
                    let stub = Monomial::new(mono.x(), mono.y(), mono.z() - 2);
                    next = next.add(&neg_xm_yn.mul_term(&stub, c));
                } else {
                    next.add_term(*mono, c.clone());
                }
            }
            cur = next;
        }
        cur
    }

    /// Whether `p` lies in the ideal (f).
    pub fn is_zero_mod_f(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Wraps a polynomial as a ring element, reducing to normal form.
    pub fn elem(&self, p: &Poly) -> RingElem {
        RingElem {
            ring: *self,
            repr: self.normal_form(p),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.elem(&Poly::zero())
    }

    pub fn one(&self) -> RingElem {
        self.elem(&Poly::one())
    }
}

/// An element of a [`HypersurfaceRing`], stored in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElem {
    ring: HypersurfaceRing,
    repr: Poly,
}

impl RingElem {
    pub fn ring(&self) -> HypersurfaceRing {
        self.ring
    }

    /// The normal-form representative in Q[x, y, z].
    pub fn repr(&self) -> &Poly {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    fn same_ring(&self, other: &RingElem) {
        assert_eq!(
            self.ring, other.ring,
            "mixed elements of different hypersurface rings"
        );
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        self.same_ring(other);
        // Sum of z-degree <= 1 representatives needs no further reduction.
        RingElem {
            ring: self.ring,
            repr: self.repr.add(&other.repr),
        }
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.same_ring(other);
        RingElem {
            ring: self.ring,
            repr: self.repr.sub(&other.repr),
        }
    }

    pub fn neg(&self) -> RingElem {
        RingElem {
            ring: self.ring,
            repr: self.repr.neg(),
        }
    }

    pub fn mul(&self, other: &RingElem) -> RingElem {
        self.same_ring(other);
        self.ring.elem(&self.repr.mul(&other.repr))
    }

    pub fn scale(&self, c: &Rational) -> RingElem {
        RingElem {
            ring: self.ring,
            repr: self.repr.scale(c),
        }
    }

    pub fn pow(&self, e: u32) -> RingElem {
        let mut out = self.ring.one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}
