use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{GroupModule, Representation};

/// `re + om * ω` with `ω^2 + ω + 1 = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QOmega {
    pub re: BigRational,
    pub om: BigRational,
}

impl QOmega {
    pub fn rational(q: BigRational) -> Self {
        QOmega {
            re: q,
            om: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn omega() -> Self {
        QOmega {
            re: BigRational::zero(),
            om: BigRational::one(),
        }
    }

    /// Complex conjugation sends ω to ω^2 = -1 - ω.
    pub fn conj(&self) -> Self {
        QOmega {
            re: &self.re - &self.om,
            om: -self.om.clone(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QOmega {
            re: &self.re * q,
            om: &self.om * q,
        }
    }
}

impl Add for &QOmega {
    type Output = QOmega;
    fn add(self, rhs: &QOmega) -> QOmega {
        QOmega {
            re: &self.re + &rhs.re,
            om: &self.om + &rhs.om,
        }
    }
}

impl Mul for &QOmega {
    type Output = QOmega;
    fn mul(self, rhs: &QOmega) -> QOmega {
        // (a + bω)(c + dω) = ac - bd + (ad + bc - bd)ω
        let bd = &self.om * &rhs.om;
        QOmega {
            re: &self.re * &rhs.re - &bd,
            om: &self.re * &rhs.om + &self.om * &rhs.re - bd,
        }
    }
}

impl fmt::Display for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.om.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}ω", self.om);
        }
        let sign = if self.om.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}ω", self.re, sign, self.om.abs())
    }
}

impl fmt::Debug for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Class function on A4, stored at the representatives 1, a1, b, b^2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Character {
    pub values: [QOmega; 4],
}

const CLASS_SIZES: [i64; 4] = [1, 3, 4, 4];

impl Character {
    pub fn of(rep: &Representation) -> Character {
        let e = rep.element_matrices();
        // indices in enumerate_g: 1 -> 0, a1 -> 1, b -> 4, b^2 -> 8
        let tr = |k: usize| QOmega::rational(e[k].trace().to_big_rational());
        Character {
            values: [tr(0), tr(1), tr(4), tr(8)],
        }
    }

    pub fn degree(&self) -> BigRational {
        self.values[0].re.clone()
    }

    pub fn at_a1(&self) -> &QOmega {
        &self.values[1]
    }

    pub fn at_b(&self) -> &QOmega {
        &self.values[2]
    }

    pub fn at_b2(&self) -> &QOmega {
        &self.values[3]
    }

    /// The complex irreducible characters: trivial, the two linear characters
    /// with `b -> ω` and `b -> ω^2`, and the one of degree 3.
    pub fn complex_irreducibles() -> [Character; 4] {
        let w = QOmega::omega();
        let w2 = &w * &w;
        [
            Character {
                values: [QOmega::int(1), QOmega::int(1), QOmega::int(1), QOmega::int(1)],
            },
            Character {
                values: [QOmega::int(1), QOmega::int(1), w.clone(), w2.clone()],
            },
            Character {
                values: [QOmega::int(1), QOmega::int(1), w2, w],
            },
            Character {
                values: [QOmega::int(3), QOmega::int(-1), QOmega::int(0), QOmega::int(0)],
            },
        ]
    }

    /// `(1/12) Σ |class| χ(g) conj(ψ(g))`.
    pub fn inner(&self, other: &Character) -> QOmega {
        let mut acc = QOmega::int(0);
        for k in 0..4 {
            let t = &self.values[k] * &other.values[k].conj();
            acc = &acc + &t.scale(&BigRational::from_integer(CLASS_SIZES[k].into()));
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(12)))
    }

    pub fn sum(&self, other: &Character) -> Character {
        Character {
            values: std::array::from_fn(|k| &self.values[k] + &other.values[k]),
        }
    }

    pub fn product(&self, other: &Character) -> Character {
        Character {
            values: std::array::from_fn(|k| &self.values[k] * &other.values[k]),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[1: {}, a1: {}, b: {}, b^2: {}]",
            self.values[0], self.values[1], self.values[2], self.values[3]
        )
    }
}

/// Multiplicities of the irreducible representations over the 2-adic field:
/// the trivial one, the fused pair of ω-conjugate linear characters (degree
/// 2, since `x^2 + x + 1` is irreducible mod 2), and the degree-3 one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RationalMultiplicities {
    pub trivial: u32,
    pub omega_pair: u32,
    pub three: u32,
}

impl RationalMultiplicities {
    pub fn degree(&self) -> u32 {
        self.trivial + 2 * self.omega_pair + 3 * self.three
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(&self, other: &Self) -> bool {
        self.trivial <= other.trivial && self.omega_pair <= other.omega_pair && self.three <= other.three
    }
}

impl fmt::Display for RationalMultiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*1 + {}*(ω,ω²) + {}*3", self.trivial, self.omega_pair, self.three)
    }
}

/// Decomposes the character against the complex table and fuses the
/// ω-conjugate pair. Returns `None` if the inner products are not
/// nonnegative integers or the pair is not balanced (not a character of a
/// representation over the 2-adic field).
pub fn rational_multiplicities(chi: &Character) -> Option<RationalMultiplicities> {
    let irr = Character::complex_irreducibles();
    let m: Vec<QOmega> = irr.iter().map(|x| chi.inner(x)).collect();
    let as_u32 = |q: &QOmega| -> Option<u32> {
        if !q.is_rational() || !q.re.is_integer() || q.re.is_negative() {
            return None;
        }
        u32::try_from(q.re.to_integer()).ok()
    };
    let (t, w1, w2, th) = (as_u32(&m[0])?, as_u32(&m[1])?, as_u32(&m[2])?, as_u32(&m[3])?);
    if w1 != w2 {
        return None;
    }
    Some(RationalMultiplicities {
        trivial: t,
        omega_pair: w1,
        three: th,
    })
}

/// A lattice is irreducible iff the representation over the 2-adic field is,
/// i.e. iff its character is one of the three fused irreducible characters.
pub fn is_irreducible(rep: &Representation) -> bool {
    match rational_multiplicities(&rep.character()) {
        Some(m) => m.trivial + m.omega_pair + m.three == 1,
        None => false,
    }
}
