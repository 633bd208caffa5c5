use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::kasteleyn::Semiring;

/// A variable `x_i` or `y_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    Y(u32),
}

impl Var {
    pub fn index(self) -> u32 {
        match self {
            Var::X(i) | Var::Y(i) => i,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Product of variables; exponents are stored doubled so that square roots
/// stay integral.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// `v^(half_steps / 2)`.
    pub fn var(v: Var, half_steps: u32) -> Monomial {
        let mut m = BTreeMap::new();
        if half_steps > 0 {
            m.insert(v, half_steps);
        }
        Monomial(m)
    }

    /// Exponents in doubled units.
    pub fn doubled_exponents(&self) -> &BTreeMap<Var, u32> {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn is_integral(&self) -> bool {
        self.0.values().all(|e| e % 2 == 0)
    }

    pub fn contains(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.0.keys().any(|&v| pred(v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| match e {
                2 => v.to_string(),
                e if e % 2 == 0 => format!("{v}^{}", e / 2),
                e => format!("{v}^({e}/2)"),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial in the `x_i`, `y_j` with integer coefficients. No zero
/// coefficient is ever stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl WeightPolynomial {
    pub fn zero() -> WeightPolynomial {
        WeightPolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> WeightPolynomial {
        WeightPolynomial::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> WeightPolynomial {
        let mut p = WeightPolynomial::zero();
        p.add_term(m, c.into());
        p
    }

    /// The variable itself, `v^1`.
    pub fn var(v: Var) -> WeightPolynomial {
        WeightPolynomial::term(Monomial::var(v, 2), 1)
    }

    /// `sqrt(v)`.
    pub fn sqrt_var(v: Var) -> WeightPolynomial {
        WeightPolynomial::term(Monomial::var(v, 1), 1)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = WeightPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Every monomial has whole-number exponents.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(Monomial::is_integral)
    }

    /// Drops every monomial that mentions a variable matching `pred`,
    /// i.e. sets those variables to zero.
    pub fn set_zero(&self, pred: impl Fn(Var) -> bool) -> WeightPolynomial {
        WeightPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains(&pred))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Value with every variable set to 1.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let c = c.abs();
            match (c.is_one(), m.0.is_empty()) {
                (true, _) => write!(f, "{m}")?,
                (false, true) => write!(f, "{c}")?,
                (false, false) => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

impl Semiring for WeightPolynomial {
    fn zero_elem() -> Self {
        WeightPolynomial::zero()
    }
    fn one_elem() -> Self {
        WeightPolynomial::constant(1)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}
