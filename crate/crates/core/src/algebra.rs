//! Finite commutative rings `Z_{n_1} x ... x Z_{n_k}` and their ideals.
//!
//! Every ideal of such a ring is a product of principal ideals `(d_i)` with
//! `d_i | n_i`, so an ideal is stored as its divisor tuple. `d_i = n_i`
//! encodes the zero component and `d_i = 1` the full component; ideal
//! equality is tuple equality.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

/// A finite product of residue rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    moduli: Vec<u64>,
}

/// A ring element as a residue tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    residues: Vec<u64>,
}

/// An ideal in canonical divisor form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    divisors: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Product,
    Intersection,
}

/// Basic facts about a ring, found by exhaustive scans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub is_reduced: bool,
    pub nilradical: Ideal,
    pub zero_divisors: Vec<RingElem>,
    pub idempotents: Vec<RingElem>,
}

/// Largest ring order the element-wise helpers will iterate over.
pub const MAX_RING_ORDER: u64 = 1 << 22;

impl RingSpec {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("at least one modulus is required".into()));
        }
        if let Some(bad) = moduli.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidRing(format!("modulus {bad} is below 2")));
        }
        let mut order: u64 = 1;
        for &n in &moduli {
            order = order
                .checked_mul(n)
                .filter(|&o| o <= MAX_RING_ORDER)
                .ok_or_else(|| Error::InvalidRing(format!("ring order exceeds {MAX_RING_ORDER}")))?;
        }
        Ok(Self { moduli })
    }

    /// `Z_n` as a one-slot ring.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn zero(&self) -> RingElem {
        RingElem {
            residues: vec![0; self.arity()],
        }
    }

    pub fn one(&self) -> RingElem {
        RingElem {
            residues: vec![1; self.arity()],
        }
    }

    pub fn elem(&self, residues: Vec<u64>) -> Result<RingElem> {
        if residues.len() != self.arity() {
            return Err(Error::RingMismatch);
        }
        let residues = residues.iter().zip(&self.moduli).map(|(r, n)| r % n).collect();
        Ok(RingElem { residues })
    }

    /// Mixed-radix decoding; slot 0 is the least significant digit.
    pub fn elem_from_code(&self, mut code: u64) -> RingElem {
        let residues = self
            .moduli
            .iter()
            .map(|&n| {
                let r = code % n;
                code /= n;
                r
            })
            .collect();
        RingElem { residues }
    }

    pub fn code_of(&self, e: &RingElem) -> u64 {
        e.residues
            .iter()
            .zip(&self.moduli)
            .rev()
            .fold(0, |acc, (&r, &n)| acc * n + r)
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.order()).map(move |c| self.elem_from_code(c))
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.zip_with(a, b, |x, y, n| (x + y) % n)
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.zip_with(a, b, |x, y, n| (x + n - y) % n)
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.zip_with(a, b, |x, y, n| (x * y) % n)
    }

    fn zip_with(&self, a: &RingElem, b: &RingElem, f: impl Fn(u64, u64, u64) -> u64) -> RingElem {
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.moduli)
            .map(|((&x, &y), &n)| f(x, y, n))
            .collect();
        RingElem { residues }
    }

    pub fn is_idempotent(&self, e: &RingElem) -> bool {
        self.mul(e, e) == *e
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            divisors: self.moduli.clone(),
        }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal {
            divisors: vec![1; self.arity()],
        }
    }

    /// Builds an ideal from divisors, checking `d_i | n_i`.
    pub fn ideal(&self, divisors: Vec<u64>) -> Result<Ideal> {
        let ideal = Ideal { divisors };
        self.check_ideal(&ideal)?;
        Ok(ideal)
    }

    /// The ideal generated by arbitrary per-slot generators: `d_i = gcd(g_i, n_i)`.
    pub fn ideal_from_generators(&self, generators: &[u64]) -> Result<Ideal> {
        if generators.len() != self.arity() {
            return Err(Error::RingMismatch);
        }
        let divisors = generators.iter().zip(&self.moduli).map(|(&g, &n)| g.gcd(&n)).collect();
        Ok(Ideal { divisors })
    }

    pub fn principal(&self, e: &RingElem) -> Ideal {
        let divisors = e.residues.iter().zip(&self.moduli).map(|(&r, &n)| r.gcd(&n)).collect();
        Ideal { divisors }
    }

    pub fn check_ideal(&self, ideal: &Ideal) -> Result<()> {
        if ideal.divisors.len() != self.arity() {
            return Err(Error::RingMismatch);
        }
        if ideal.divisors.iter().zip(&self.moduli).any(|(&d, &n)| d == 0 || n % d != 0) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Componentwise sum, product or intersection of two ideals.
    pub fn combine(&self, a: &Ideal, b: &Ideal, mode: CombineMode) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        Ok(self.combine_unchecked(a, b, mode))
    }

    pub(crate) fn combine_unchecked(&self, a: &Ideal, b: &Ideal, mode: CombineMode) -> Ideal {
        let divisors = a
            .divisors
            .iter()
            .zip(&b.divisors)
            .zip(&self.moduli)
            .map(|((&x, &y), &n)| match mode {
                CombineMode::Sum => x.gcd(&y),
                CombineMode::Product => (x * y).gcd(&n),
                CombineMode::Intersection => x.lcm(&y).min(n),
            })
            .collect();
        Ideal { divisors }
    }

    pub fn contains(&self, ideal: &Ideal, e: &RingElem) -> bool {
        ideal.divisors.iter().zip(&e.residues).all(|(&d, &r)| r % d == 0)
    }

    /// `a ⊆ b` iff every divisor of `b` divides the matching divisor of `a`.
    pub fn ideal_le(&self, a: &Ideal, b: &Ideal) -> bool {
        a.divisors.iter().zip(&b.divisors).all(|(&x, &y)| x % y == 0)
    }

    pub fn is_zero_ideal(&self, ideal: &Ideal) -> bool {
        ideal.divisors == self.moduli
    }

    /// Number of elements of an ideal.
    pub fn ideal_order(&self, ideal: &Ideal) -> u64 {
        ideal.divisors.iter().zip(&self.moduli).map(|(&d, &n)| n / d).product()
    }

    pub fn ideal_elements(&self, ideal: &Ideal) -> Vec<RingElem> {
        self.elements().filter(|e| self.contains(ideal, e)).collect()
    }

    /// Prime ideals of a product of residue rings: a prime `p | n_i` in one
    /// slot, the full component everywhere else.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        let non_unit: Vec<usize> = (0..self.arity()).filter(|&i| ideal.divisors[i] != 1).collect();
        match non_unit.as_slice() {
            [i] => is_prime(ideal.divisors[*i]),
            _ => false,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.moduli.iter().all(|&n| radical(n) == n)
    }

    pub fn nilradical(&self) -> Ideal {
        Ideal {
            divisors: self.moduli.iter().map(|&n| radical(n)).collect(),
        }
    }
}

impl RingElem {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

impl Ideal {
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }
}

/// Minimal primes of the ring. Every prime of a finite ring is maximal, so
/// these are all of its prime ideals.
pub fn minimal_primes(ring: &RingSpec) -> Vec<Ideal> {
    let mut out = Vec::new();
    for (slot, &n) in ring.moduli.iter().enumerate() {
        for p in prime_factors(n) {
            let mut divisors = vec![1; ring.arity()];
            divisors[slot] = p;
            out.push(Ideal { divisors });
        }
    }
    out
}

pub fn ring_summary(ring: &RingSpec) -> RingSummary {
    let elems: Vec<RingElem> = ring.elements().collect();
    let idempotents = elems.iter().filter(|e| ring.is_idempotent(e)).cloned().collect();
    let zero_divisors = elems
        .iter()
        .filter(|r| elems.iter().any(|s| !s.is_zero() && ring.mul(r, s).is_zero()))
        .cloned()
        .collect();
    RingSummary {
        is_reduced: ring.is_reduced(),
        nilradical: ring.nilradical(),
        zero_divisors,
        idempotents,
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime-power factorization `[(p, e)]` in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    prime_factors(n)
        .into_iter()
        .map(|p| {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            (p, e)
        })
        .collect()
}

/// Product of the distinct prime divisors.
pub fn radical(n: u64) -> u64 {
    prime_factors(n).into_iter().product()
}

pub fn divisors_of(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: &[u64], parens: bool) -> fmt::Result {
    let body = values.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    if parens {
        write!(f, "({body})")
    } else {
        write!(f, "{body}")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.moduli, false)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.divisors, true)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.residues, self.residues.len() > 1)
    }
}

macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}
serialize_as_display!(RingSpec, Ideal, RingElem);

/// Parses a comma-separated list of non-negative integers, reporting byte
/// positions relative to `offset`.
pub(crate) fn parse_uint_list(text: &str, offset: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        if trimmed.is_empty() {
            return Err(parse_err(offset + pos + lead, "expected an integer"));
        }
        let value = trimmed
            .parse::<u64>()
            .map_err(|_| parse_err(offset + pos + lead, format!("invalid integer '{trimmed}'")))?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Strips one pair of surrounding parentheses, returning the inner text and
/// its offset.
pub(crate) fn strip_parens(text: &str, offset: usize) -> Result<(&str, usize)> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    match (t.starts_with('('), t.ends_with(')')) {
        (true, true) if t.len() >= 2 => Ok((&t[1..t.len() - 1], offset + lead + 1)),
        (false, false) => Ok((t, offset + lead)),
        (true, _) => Err(parse_err(offset + lead + t.len(), "missing ')'")),
        (false, true) => Err(parse_err(offset + lead + t.len() - 1, "unexpected ')'")),
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let moduli = parse_uint_list(s, 0)?;
        RingSpec::new(moduli)
    }
}

impl RingSpec {
    /// Parses `(6)` or `(2,3)`; the parentheses are optional.
    pub fn parse_ideal(&self, text: &str) -> Result<Ideal> {
        let (inner, offset) = strip_parens(text, 0)?;
        let gens = parse_uint_list(inner, offset)?;
        if gens.len() != self.arity() {
            return Err(parse_err(
                offset,
                format!("expected {} entries, found {}", self.arity(), gens.len()),
            ));
        }
        self.ideal_from_generators(&gens)
    }
}
