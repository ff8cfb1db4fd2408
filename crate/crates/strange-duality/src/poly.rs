use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Maximum number of variables: x, y, z and the auxiliary variable t.
pub const MAX_VARS: usize = 4;

pub const VAR_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "t"];

/// A monomial as an exponent vector over (x, y, z, t).
///
/// `Ord` is the graded reverse lexicographic order with variable order
/// x < y < z < t: total degree decides first; at equal degree the monomial
/// with the smaller exponent on the smallest differing variable is larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u64; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&e| u128::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = [0u64; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = other.0[i] - self.0[i];
        }
        Monomial(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = [0u64; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i].max(other.0[i]);
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u64; MAX_VARS];
        for i in 0..MAX_VARS {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    /// True when the supports are disjoint (gcd of the monomials is 1).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in 0..MAX_VARS {
            if self.0[i] != other.0[i] {
                return if self.0[i] < other.0[i] {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
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

/// A sparse polynomial with exact integer coefficients over up to four
/// variables. No zero coefficients are stored; terms are kept in grevlex
/// order so the last entry is the leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term([0; MAX_VARS], c);
        p
    }

    pub fn term(nvars: usize, exps: [u64; MAX_VARS], c: BigInt) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Reinterprets the polynomial in a ring with more variables.
    pub fn extended_to(&self, nvars: usize) -> SparsePoly {
        assert!(nvars >= self.nvars && nvars <= MAX_VARS);
        SparsePoly {
            nvars,
            terms: self.terms.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_coefficient(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> u128 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: [u64; MAX_VARS], c: BigInt) {
        debug_assert!(exps[self.nvars..].iter().all(|&e| e == 0));
        if c.is_zero() {
            return;
        }
        let mono = Monomial(exps);
        let entry = self.terms.entry(mono).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.0, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.0, -c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigInt) -> SparsePoly {
        if k.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// `self * k * x^mono`.
    pub fn mul_term(&self, mono: &Monomial, k: &BigInt) -> SparsePoly {
        if k.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * k))
                .collect(),
        }
    }

    /// Exact formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> SparsePoly {
        assert!(var < self.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in self.terms() {
            let e = m.0[var];
            if e > 0 {
                let mut exps = m.0;
                exps[var] = e - 1;
                out.add_term(exps, c * BigInt::from(e));
            }
        }
        out
    }

    /// The gcd of the absolute coefficient values (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> SparsePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().1.is_negative() {
            g = -g;
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c / &g)).collect(),
        }
    }

    /// Substitutes 0 for variable `var`, dropping every term that contains it.
    pub fn substitute_zero(&self, var: usize) -> SparsePoly {
        assert!(var < self.nvars);
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// If the polynomial involves only variable `var`, its coefficient list
    /// as (exponent, coefficient) pairs sorted by exponent.
    pub fn as_univariate(&self, var: usize) -> Option<Vec<(u64, BigInt)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                if i != var && e != 0 {
                    return None;
                }
            }
            out.push((m.0[var], c.clone()));
        }
        out.sort_by_key(|&(e, _)| e);
        Some(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert!(point.len() >= self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in self.terms() {
            let mut v = BigRational::from(c.clone());
            for (i, &e) in m.0.iter().enumerate().take(self.nvars) {
                if e > 0 {
                    v *= rat_pow(&point[i], e);
                }
            }
            acc += v;
        }
        acc
    }
}

/// `base^exp` by binary exponentiation.
pub fn rat_pow(base: &BigRational, exp: u64) -> BigRational {
    let mut result = BigRational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // print in descending lexicographic order of exponent vectors,
        // matching the usual typography of normal forms
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms().collect();
        terms.sort_by(|a, b| b.0 .0.cmp(&a.0 .0));
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate().take(self.nvars) {
                match e {
                    0 => {}
                    1 => factors.push(VAR_NAMES[i].to_string()),
                    _ => factors.push(format!("{}^{}", VAR_NAMES[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
