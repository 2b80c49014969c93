//! Exact arithmetic on monomial ideals at desk scale.
//!
//! Ideals are kept as their minimal generating set in lexicographic order on
//! exponent vectors, so two ideals are equal exactly when their generator
//! lists are equal.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::EdgeSubset;

/// A monomial `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// Index 0 of the vector is the exponent of `x1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The variable `x_{index+1}`.
    pub fn var(n: usize, index: usize) -> Self {
        let mut m = Self::one(n);
        m.exponents[index] = 1;
        m
    }

    /// Squarefree product of the listed variables (0-based indices).
    pub fn squarefree(n: usize, support: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &i in support {
            m.exponents[i] = 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.checked_add(b).expect("exponent overflow"))
    }

    /// `self / gcd(self, divisor)`.
    pub fn quotient_by_gcd(&self, divisor: &Monomial) -> Monomial {
        self.zip_with(divisor, |a, b| a.saturating_sub(b))
    }

    /// The squarefree monomial with the same support.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Componentwise minimum with `caps`.
    pub fn capped(&self, caps: &[u32]) -> Monomial {
        self.zip_exps(caps, |a, b| a.min(b))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        self.zip_exps(&other.exponents, f)
    }

    fn zip_exps(&self, other: &[u32], f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(other)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealWire", into = "IdealWire")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl From<MonomialIdeal> for IdealWire {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealWire {
            n: ideal.n,
            generators: ideal.generators.into_iter().map(|m| m.exponents).collect(),
        }
    }
}

impl TryFrom<IdealWire> for MonomialIdeal {
    type Error = Error;

    fn try_from(wire: IdealWire) -> Result<Self> {
        minimalize(wire.n, wire.generators.into_iter().map(Monomial::new))
    }
}

/// Reduce a generating set to its divisibility-minimal, sorted, deduplicated form.
pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    if let Some(bad) = gens.iter().find(|m| m.n() != n) {
        return Err(Error::VariableMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    // Sorting by degree first means a divisor always precedes its multiples.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    Ok(MonomialIdeal {
        n,
        generators: kept,
    })
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial::one(n)],
        }
    }

    /// The prime generated by the listed variables (0-based indices).
    pub fn variables(n: usize, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| Monomial::var(n, i));
        minimalize(n, gens).expect("generators built with matching n")
    }

    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(n, gens)
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents<I, V>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u32>>,
    {
        minimalize(n, gens.into_iter().map(|v| Monomial::new(v.into())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    fn check_n(&self, found: usize) -> Result<()> {
        if self.n == found {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                expected: self.n,
                found,
            })
        }
    }

    /// Membership: some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        self.check_n(f.n())?;
        Ok(self.generators.iter().any(|g| g.divides(f)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        let lcms = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)));
        minimalize(self.n, lcms)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_n(other.n)?;
        let prods = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)));
        minimalize(self.n, prods)
    }

    /// `I^t`; `I^0` is the unit ideal.
    pub fn power(&self, t: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..t {
            acc = acc.product(self).expect("same ambient ring");
        }
        acc
    }

    /// `I : u`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_n(u.n())?;
        minimalize(self.n, self.generators.iter().map(|m| m.quotient_by_gcd(u)))
    }

    pub fn radical(&self) -> MonomialIdeal {
        minimalize(self.n, self.generators.iter().map(Monomial::radical))
            .expect("generators share n")
    }

    /// Per-variable maximum exponent over all generators.
    pub fn exponent_caps(&self) -> Vec<u32> {
        let mut caps = vec![0u32; self.n];
        for g in &self.generators {
            for (c, &e) in caps.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        caps
    }

    /// Enumerate `assrad(I)`: every `sqrt(I : u)` over monomials `u` not in `I`.
    ///
    /// `u` ranges over the box capped per variable at [`Self::exponent_caps`],
    /// which loses nothing since `I : u` only depends on the capped `u`.
    /// `max_box` bounds the number of candidate monomials visited.
    pub fn assrad_enumerate(&self, max_box: u128) -> Result<BTreeSet<MonomialIdeal>> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::Precondition(
                "assrad needs an ideal that is neither zero nor unit".into(),
            ));
        }
        let caps = self.exponent_caps();
        let volume: u128 = caps.iter().map(|&c| u128::from(c) + 1).product();
        if volume > max_box {
            return Err(Error::BudgetExceeded {
                what: "assrad box",
                required: volume,
                limit: max_box,
            });
        }
        let mut out = BTreeSet::new();
        let mut u = vec![0u32; self.n];
        loop {
            let mono = Monomial::new(u.clone());
            if !self.generators.iter().any(|g| g.divides(&mono)) {
                out.insert(self.colon(&mono)?.radical());
            }
            if !odometer_step(&mut u, &caps) {
                break;
            }
        }
        Ok(out)
    }
}

/// Advance `digits` to the next vector in the box `0..=caps[i]`; false once exhausted.
pub(crate) fn odometer_step(digits: &mut [u32], caps: &[u32]) -> bool {
    for (d, &c) in digits.iter_mut().zip(caps) {
        if *d < c {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// The edge prime `(x_i, x_{i+1})` for the 1-based path edge `i`.
pub fn edge_prime(n: usize, edge: usize) -> MonomialIdeal {
    MonomialIdeal::variables(n, &[edge - 1, edge])
}

/// `J(P_n)`, the cover ideal of the path on `n` vertices.
pub fn cover_ideal_path(n: usize) -> Result<MonomialIdeal> {
    if n < 2 {
        return Err(Error::domain(format!("path needs n >= 2, got {n}")));
    }
    let mut acc = edge_prime(n, 1);
    for i in 2..n {
        acc = acc.intersect(&edge_prime(n, i))?;
    }
    Ok(acc)
}

/// Intersection of the edge primes over `edges`; the unit ideal when `edges` is empty.
pub fn cover_ideal_edges(n: usize, edges: &EdgeSubset) -> Result<MonomialIdeal> {
    edges.iter().try_fold(MonomialIdeal::unit(n), |acc, i| {
        acc.intersect(&edge_prime(n, i))
    })
}

/// Intersection of `(x_i, x_{i+1})^s` over every path edge.
pub fn symbolic_power_path(n: usize, s: u32) -> Result<MonomialIdeal> {
    if n < 2 {
        return Err(Error::domain(format!("path needs n >= 2, got {n}")));
    }
    (1..n).try_fold(MonomialIdeal::unit(n), |acc, i| {
        acc.intersect(&edge_prime(n, i).power(s))
    })
}

/// Membership in `J(P_n)^(s)`: every consecutive exponent pair sums to at least `s`.
pub fn symbolic_power_contains(n: usize, s: u32, f: &Monomial) -> Result<bool> {
    if f.n() != n {
        return Err(Error::VariableMismatch {
            expected: n,
            found: f.n(),
        });
    }
    Ok(f.exponents().windows(2).all(|w| w[0] + w[1] >= s))
}

/// The edge ideal `I(G_S)`, generated by `x_i x_{i+1}` for `i` in `S`.
pub fn edge_ideal_path_subset(n: usize, edges: &EdgeSubset) -> Result<MonomialIdeal> {
    minimalize(
        n,
        edges.iter().map(|i| Monomial::squarefree(n, &[i - 1, i])),
    )
}
