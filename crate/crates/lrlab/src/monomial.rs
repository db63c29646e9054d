//! Monomials in the three variables x, y, z.
//!
//! The fixed admissible order everywhere in this crate is graded reverse
//! lexicographic (grevlex) with x > y > z: higher total degree wins, and
//! ties are broken by the smaller exponent on the last differing variable,
//! scanning from z back to x.

use std::cmp::Ordering;
use std::fmt;

/// One of the three polynomial variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    /// All variables, in order.
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    /// Index into an exponent triple.
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    /// The variable's display letter.
    pub fn letter(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

/// An exponent triple `x^a * y^b * z^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u32; 3],
}

impl Monomial {
    /// The monomial 1.
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { exps: [x, y, z] }
    }

    /// A single variable raised to a power.
    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut exps = [0, 0, 0];
        exps[v.index()] = e;
        Monomial { exps }
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn x(&self) -> u32 {
        self.exps[0]
    }

    pub fn y(&self) -> u32 {
        self.exps[1]
    }

    pub fn z(&self) -> u32 {
        self.exps[2]
    }

    /// Total degree: the sum of the three exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: [
                    self.exps[0] - other.exps[0],
                    self.exps[1] - other.exps[1],
                    self.exps[2] - other.exps[2],
                ],
            })
        } else {
            None
        }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, b: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0].max(b.exps[0]),
                self.exps[1].max(b.exps[1]),
                self.exps[2].max(b.exps[2]),
            ],
        }
    }

    /// Whether the two monomials share no variable.
    pub fn coprime(&self, b: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] == 0 || b.exps[i] == 0)
    }

    /// Quasi-homogeneous weight under wt(x) = 2n, wt(y) = 2m, wt(z) = mn,
    /// the weights that make x^m + y^n + z^2 homogeneous of weight 2mn.
    pub fn weight(&self, m: u32, n: u32) -> i64 {
        let (m, n) = (i64::from(m), i64::from(n));
        2 * n * i64::from(self.exps[0]) + 2 * m * i64::from(self.exps[1]) + m * n * i64::from(self.exps[2])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse-lex tiebreak: smaller exponent on the last differing
        // variable (scanning z, y, x) is the greater monomial.
        for i in (0..3).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.letter())?;
            } else {
                write!(f, "{}^{}", v.letter(), e)?;
            }
        }
        Ok(())
    }
}
