use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{fmt_coeff, rat};
use crate::error::{Error, Result};

/// Exponents of `x^a y^b z^c`; `a` may be negative.
type Exps = (i64, u32, u32);

/// A Laurent polynomial in `x` and a polynomial in `y, z` with rational
/// coefficients, before reduction.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exps, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial((0, 0, 0), c)
    }

    pub fn monomial(e: Exps, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial((1, 0, 0), BigRational::one())
    }

    pub fn y() -> Self {
        Self::monomial((0, 1, 0), BigRational::one())
    }

    pub fn z() -> Self {
        Self::monomial((0, 0, 1), BigRational::one())
    }

    fn add_term(&mut self, e: Exps, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c * s);
        }
        out
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), x * y);
            }
        }
        out
    }

    // c x^k, if that is the whole polynomial
    fn as_x_monomial(&self) -> Option<(i64, BigRational)> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [((k, 0, 0), c)] => Some((*k, (*c).clone())),
            _ => None,
        }
    }

    fn inverse(&self) -> Result<Polynomial> {
        let (k, c) = self
            .as_x_monomial()
            .ok_or_else(|| Error::Parse("only c·x^k can be inverted".into()))?;
        Ok(Polynomial::monomial((-k, 0, 0), c.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<Polynomial> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Polynomial::constant(BigRational::one());
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Value at `(y, z)` as a Laurent polynomial in `x`.
    pub fn evaluate_yz(&self, y: &BigRational, z: &BigRational) -> BTreeMap<i64, BigRational> {
        let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
        for ((k, b, c), v) in &self.terms {
            let t = v * pow_rat(y, *b) * pow_rat(z, *c);
            *out.entry(*k).or_insert_with(BigRational::zero) += t;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a BigRational)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let a = c.abs();
        match (m.is_empty(), a.is_one()) {
            (true, _) => f.write_str(&fmt_coeff(&a))?,
            (false, true) => f.write_str(&m)?,
            (false, false) => write!(f, "{}{}", fmt_coeff(&a), m)?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn monomial_text(k: i64, b: u32, c: u32) -> String {
    let mut parts = Vec::new();
    match k {
        0 => {}
        1 => parts.push("x".to_string()),
        _ => parts.push(format!("x^{}", k)),
    }
    for (name, e) in [("y", b), ("z", c)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    parts.join("")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by_key(|t| std::cmp::Reverse((t.0 .0, t.0 .1 + t.0 .2, t.0 .1)));
        write_terms(f, ts.into_iter().map(|((k, b, c), v)| (monomial_text(*k, *b, *c), v)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// `+ - * / ^`, parentheses, juxtaposition as product, integers and the
    /// variables `x, y, z`; division and negative powers only by `c·x^k`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("unexpected `{}` in `{}`", p.chars[p.pos], s)));
        }
        Ok(e)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some('/') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?.inverse()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.scale(&-BigRational::one()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let e = self.integer()?;
        let e: i64 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
        base.pow(if neg { -e } else { e })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at position {}", start)));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse(s))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('x') => {
                self.pos += 1;
                Ok(Polynomial::x())
            }
            Some('y') => {
                self.pos += 1;
                Ok(Polynomial::y())
            }
            Some('z') => {
                self.pos += 1;
                Ok(Polynomial::z())
            }
            Some(c) if c.is_ascii_digit() => Ok(Polynomial::constant(BigRational::from_integer(self.integer()?))),
            Some(c) => Err(Error::Parse(format!("unexpected `{}`", c))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Basis monomial `x^k·m`, `m` in `{1, y, z, yz}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub x: i64,
    pub y: bool,
    pub z: bool,
}

impl Monomial {
    pub fn new(x: i64, y: bool, z: bool) -> Self {
        Monomial { x, y, z }
    }

    fn exps(&self) -> Exps {
        (self.x, self.y as u32, self.z as u32)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = monomial_text(self.x, self.y as u32, self.z as u32);
        f.write_str(if t.is_empty() { "1" } else { &t })
    }
}

/// A reduced element: a combination of basis monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NormalFormElement {
    coeffs: BTreeMap<Monomial, BigRational>,
}

impl NormalFormElement {
    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.coeffs.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &self.coeffs {
            p.add_term(m.exps(), c.clone());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (m, c) in terms {
            let slot = coeffs.entry(m).or_insert_with(BigRational::zero);
            *slot += c;
        }
        coeffs.retain(|_, c: &mut BigRational| !c.is_zero());
        NormalFormElement { coeffs }
    }
}

impl fmt::Display for NormalFormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // descending x power, then yz, z, y, 1
        let mut ts: Vec<_> = self.coeffs.iter().collect();
        let rank = |m: &Monomial| (m.y as u8 + m.z as u8, m.z);
        ts.sort_by_key(|t| std::cmp::Reverse((t.0.x, rank(t.0))));
        write_terms(
            f,
            ts.into_iter().map(|(m, c)| (monomial_text(m.x, m.y as u32, m.z as u32), c)),
        )
    }
}

impl fmt::Debug for NormalFormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NormalFormElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Rewriting rule `y^b z^c -> rhs`.
#[derive(Clone, Debug)]
struct Rule {
    lhs: (u32, u32),
    rhs: Polynomial,
}

/// `<1, x, 1/x, y, z | y^2 = y + 2, z^2 = 2z + y + 1>` with rewriting to
/// the basis `x^k {1, y, z, yz}`; `z`-powers are reduced before `y`-powers.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    rules: Vec<Rule>,
}

impl Default for PresentedAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl PresentedAlgebra {
    pub fn new() -> Self {
        let (y, z) = (Polynomial::y(), Polynomial::z());
        let two = Polynomial::constant(rat(2, 1));
        let one = Polynomial::constant(rat(1, 1));
        PresentedAlgebra {
            rules: vec![
                Rule {
                    lhs: (0, 2),
                    rhs: z.scale(&rat(2, 1)).add(&y).add(&one),
                },
                Rule {
                    lhs: (2, 0),
                    rhs: y.add(&two),
                },
            ],
        }
    }

    /// The defining relations as polynomials that vanish: `y^2 - y - 2` and
    /// `z^2 - 2z - y - 1`.
    pub fn relations(&self) -> Vec<(String, Polynomial)> {
        let y2: Polynomial = "y^2 - y - 2".parse().expect("static");
        let z2: Polynomial = "z^2 - 2z - y - 1".parse().expect("static");
        vec![("y^2 = y + 2".into(), y2), ("z^2 = 2z + y + 1".into(), z2)]
    }

    // one rewrite of the first reducible term, by the first applicable rule
    fn step(&self, p: &Polynomial) -> Option<Polynomial> {
        for rule in &self.rules {
            let hit = p.terms.iter().find(|((_, b, c), _)| *b >= rule.lhs.0 && *c >= rule.lhs.1);
            if let Some((&(k, b, c), v)) = hit {
                let mut out = p.clone();
                out.terms.remove(&(k, b, c));
                let rest = Polynomial::monomial((k, b - rule.lhs.0, c - rule.lhs.1), v.clone());
                return Some(out.add(&rest.mul(&rule.rhs)));
            }
        }
        None
    }

    fn reduce(&self, mut p: Polynomial) -> Polynomial {
        while let Some(q) = self.step(&p) {
            p = q;
        }
        p
    }

    pub fn normalize(&self, p: &Polynomial) -> NormalFormElement {
        let r = self.reduce(p.clone());
        NormalFormElement::from_terms(
            r.terms
                .into_iter()
                .map(|((k, b, c), v)| (Monomial::new(k, b == 1, c == 1), v)),
        )
    }

    pub fn normalize_str(&self, s: &str) -> Result<NormalFormElement> {
        Ok(self.normalize(&s.parse()?))
    }

    pub fn multiply(&self, a: &NormalFormElement, b: &NormalFormElement) -> NormalFormElement {
        self.normalize(&a.to_polynomial().mul(&b.to_polynomial()))
    }

    /// Every critical pair (the lcm of two rule heads, rewritten by either
    /// rule first) reaches the same normal form.
    pub fn locally_confluent(&self) -> bool {
        for (i, r) in self.rules.iter().enumerate() {
            for s in &self.rules[i + 1..] {
                let l = (r.lhs.0.max(s.lhs.0), r.lhs.1.max(s.lhs.1));
                let via = |rule: &Rule| {
                    let rest = Polynomial::monomial((0, l.0 - rule.lhs.0, l.1 - rule.lhs.1), BigRational::one());
                    self.normalize(&rest.mul(&rule.rhs))
                };
                if via(r) != via(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Products of the basis `1, y, z, yz` in normal form.
    pub fn structure_constants(&self) -> Vec<(Monomial, Monomial, NormalFormElement)> {
        let basis = basis_yz();
        let mut out = Vec::new();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                let p = Polynomial::monomial(a.exps(), BigRational::one()).mul(&Polynomial::monomial(b.exps(), BigRational::one()));
                out.push((*a, *b, self.normalize(&p)));
            }
        }
        out
    }
}

fn basis_yz() -> [Monomial; 4] {
    [
        Monomial::new(0, false, false),
        Monomial::new(0, true, false),
        Monomial::new(0, false, true),
        Monomial::new(0, true, true),
    ]
}

/// The four evaluations `(y, z)` of the presented algebra onto Laurent
/// polynomials in `x`.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentCertificate {
    pub points: Vec<(i64, i64)>,
    /// Per point: both relations evaluate to zero.
    pub relations_vanish: Vec<bool>,
    /// Rows: points; columns: `1, y, z, yz`.
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Vec<Vec<BigRational>>,
    #[serde(serialize_with = "ser_rat")]
    pub determinant: BigRational,
}

fn ser_rat<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&fmt_coeff(x))
}

fn ser_matrix<S: Serializer>(m: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        seq.serialize_element(&row.iter().map(fmt_coeff).collect::<Vec<_>>())?;
    }
    seq.end()
}

impl ComponentCertificate {
    pub fn passes(&self) -> bool {
        self.relations_vanish.iter().all(|&b| b) && !self.determinant.is_zero()
    }

    /// Image of `u` in the four components.
    pub fn evaluate(&self, u: &NormalFormElement) -> Vec<BTreeMap<i64, BigRational>> {
        let p = u.to_polynomial();
        self.points
            .iter()
            .map(|&(y, z)| p.evaluate_yz(&rat(y, 1), &rat(z, 1)))
            .collect()
    }
}

pub(crate) fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            let f = &m[r][c] / &piv;
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// Evaluations at `(2, 3), (2, -1), (-1, 0), (-1, 2)`: the roots of
/// `z^2 - 2z - y - 1` over the roots `y = 2, -1` of `y^2 - y - 2`.
pub fn component_maps() -> ComponentCertificate {
    let alg = PresentedAlgebra::new();
    let points = vec![(2, 3), (2, -1), (-1, 0), (-1, 2)];
    let relations_vanish = points
        .iter()
        .map(|&(y, z)| {
            alg.relations()
                .iter()
                .all(|(_, r)| r.evaluate_yz(&rat(y, 1), &rat(z, 1)).is_empty())
        })
        .collect();
    let matrix: Vec<Vec<BigRational>> = points
        .iter()
        .map(|&(y, z)| vec![rat(1, 1), rat(y, 1), rat(z, 1), rat(y * z, 1)])
        .collect();
    let determinant = determinant(matrix.clone());
    ComponentCertificate {
        points,
        relations_vanish,
        matrix,
        determinant,
    }
}
