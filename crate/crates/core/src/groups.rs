//! The alternating group A4 = H ⋊ <b> and its Klein four-subgroup H.
//!
//! Composition is right-to-left: `compose(p, q)` applies `q` first. With
//! `a1 = (1,2)(3,4)`, `a2 = (1,4)(2,3)` and `b = (1,2,3)` this convention
//! gives `b a1 b^-1 = a2` and `b a2 b^-1 = a1 a2`; the generator matrices in
//! [`crate::reps`] are built on that assumption.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of {1,2,3,4}, stored 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4 {
    images: [u8; 4],
}

/// `a1^e1 * a2^e2 * b^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactoredElement {
    pub e1: u8,
    pub e2: u8,
    pub j: u8,
}

impl FactoredElement {
    /// Position in [`enumerate_g`].
    pub fn index(&self) -> usize {
        self.j as usize * 4 + self.h_index()
    }

    /// Position of the Sylow part in [`enumerate_h`].
    pub fn h_index(&self) -> usize {
        self.e1 as usize + 2 * self.e2 as usize
    }
}

impl Perm4 {
    /// From 1-based images; the permutation must be even.
    pub fn from_images(images: [u8; 4]) -> Result<Self> {
        let p = Self::from_images_unchecked(images)?;
        if !p.is_even() {
            return Err(Error::OddPermutation(p.to_string()));
        }
        Ok(p)
    }

    fn from_images_unchecked(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        let mut zero_based = [0u8; 4];
        for (k, &x) in images.iter().enumerate() {
            if !(1..=4).contains(&x) || seen[(x - 1) as usize] {
                return Err(Error::Parse(format!("{:?} is not a permutation of 1..4", images)));
            }
            seen[(x - 1) as usize] = true;
            zero_based[k] = x - 1;
        }
        Ok(Perm4 { images: zero_based })
    }

    pub const fn identity() -> Self {
        Perm4 { images: [0, 1, 2, 3] }
    }

    /// Image of the point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0u8; 4];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm4 { images: inv }
    }

    pub fn is_even(&self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Perm4::identity(), |acc, _| compose(&acc, self))
    }

    /// Disjoint cycles of length > 1, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push(k + 1);
                k = self.images[k] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

/// `p ∘ q`: apply `q` first, then `p`.
pub fn compose(p: &Perm4, q: &Perm4) -> Perm4 {
    let mut images = [0u8; 4];
    for (i, img) in images.iter_mut().enumerate() {
        *img = p.images[q.images[i] as usize];
    }
    Perm4 { images }
}

pub fn inverse(p: &Perm4) -> Perm4 {
    p.inverse()
}

/// (1,2)(3,4)
pub fn a1() -> Perm4 {
    "(1,2)(3,4)".parse().unwrap()
}

/// (1,4)(2,3)
pub fn a2() -> Perm4 {
    "(1,4)(2,3)".parse().unwrap()
}

/// (1,2,3)
pub fn b() -> Perm4 {
    "(1,2,3)".parse().unwrap()
}

/// H in the order 1, a1, a2, a1a2.
pub fn enumerate_h() -> Vec<Perm4> {
    vec![Perm4::identity(), a1(), a2(), compose(&a1(), &a2())]
}

/// G as `h * b^j`, ordered by `(j, position of h in enumerate_h)`.
pub fn enumerate_g() -> Vec<Perm4> {
    let h = enumerate_h();
    let b = b();
    (0..3)
        .flat_map(|j| {
            let bj = b.pow(j);
            h.iter().map(move |x| compose(x, &bj)).collect::<Vec<_>>()
        })
        .collect()
}

/// Unique `(e1, e2, j)` with `a1^e1 a2^e2 b^j = g`.
pub fn factor(g: &Perm4) -> Result<FactoredElement> {
    if !g.is_even() {
        return Err(Error::OddPermutation(g.to_string()));
    }
    let binv = b().inverse();
    let h = enumerate_h();
    for j in 0..3u8 {
        let sylow = compose(g, &binv.pow(j as u32));
        if let Some(k) = h.iter().position(|x| *x == sylow) {
            return Ok(FactoredElement {
                e1: (k & 1) as u8,
                e2: (k >> 1) as u8,
                j,
            });
        }
    }
    unreachable!("every even permutation of four points lies in A4")
}

/// Inverse of [`factor`].
pub fn unfactor(f: FactoredElement) -> Perm4 {
    let h = compose(&a1().pow(f.e1 as u32), &a2().pow(f.e2 as u32));
    compose(&h, &b().pow(f.j as u32))
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm4 {
    type Err = Error;

    /// Parses cycle notation such as `(1,2)(3,4)` or `()`. Cycles are
    /// composed right-to-left, matching [`compose`].
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut acc = Perm4::identity();
        let mut rest = s.as_str();
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation `{}`", s)))?;
            cycles.push(body.0.to_string());
            rest = body.1;
        }
        for c in cycles.iter().rev() {
            if c.is_empty() {
                continue;
            }
            let pts: Vec<u8> = c
                .split(',')
                .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(format!("bad point `{}`", t))))
                .collect::<Result<_>>()?;
            let mut images = [1u8, 2, 3, 4];
            for (k, &p) in pts.iter().enumerate() {
                if !(1..=4).contains(&p) {
                    return Err(Error::Parse(format!("point {} out of range", p)));
                }
                images[(p - 1) as usize] = pts[(k + 1) % pts.len()];
            }
            let cyc = Perm4::from_images_unchecked(images)?;
            acc = compose(&acc, &cyc);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_examples() {
        assert_eq!(compose(&a1(), &a1()), Perm4::identity());
        assert_eq!(compose(&b(), &compose(&a1(), &b().inverse())), a2());
        assert_eq!(compose(&b(), &b()), "(1,3,2)".parse().unwrap());
    }

    #[test]
    fn defining_relations() {
        let e = Perm4::identity();
        assert_eq!(a1().pow(2), e);
        assert_eq!(a2().pow(2), e);
        assert_eq!(b().pow(3), e);
        let conj = |x: &Perm4| compose(&b(), &compose(x, &b().inverse()));
        assert_eq!(conj(&a1()), a2());
        assert_eq!(conj(&a2()), compose(&a1(), &a2()));
    }

    #[test]
    fn factor_examples() {
        let f = |e1, e2, j| FactoredElement { e1, e2, j };
        assert_eq!(factor(&Perm4::identity()).unwrap(), f(0, 0, 0));
        assert_eq!(factor(&compose(&a1(), &b())).unwrap(), f(1, 0, 1));
        assert_eq!(factor(&"(1,3,2)".parse().unwrap()).unwrap(), f(0, 0, 2));
        let odd: Perm4 = "(1,2)".parse().unwrap();
        assert!(matches!(factor(&odd), Err(Error::OddPermutation(_))));
        assert!(Perm4::from_images([2, 1, 3, 4]).is_err());
    }

    #[test]
    fn enumeration_order_and_bijection() {
        let g = enumerate_g();
        assert_eq!(enumerate_h().len(), 4);
        assert_eq!(g.len(), 12);
        assert_eq!(g[0], Perm4::identity());
        let mut seen = std::collections::BTreeSet::new();
        for (i, x) in g.iter().enumerate() {
            let fx = factor(x).unwrap();
            assert_eq!(fx.index(), i);
            assert_eq!(unfactor(fx), *x);
            seen.insert(fx);
        }
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn cycle_notation_round_trip() {
        for g in enumerate_g() {
            let s = g.to_string();
            assert_eq!(s.parse::<Perm4>().unwrap(), g, "{}", s);
        }
        assert_eq!(a1().to_string(), "(1,2)(3,4)");
        assert_eq!(b().apply(1), 2);
    }
}
