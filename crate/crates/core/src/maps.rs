//! Linear maps from two-coordinate groups onto cyclic groups, and an
//! element-by-element verifier for order comparisons.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{cyclic_order, gcd, is_prime, mul_mod, reduce_signed};
use crate::error::{Error, Result};
use crate::group::{Element, Family, GroupSpec};
use crate::DEFAULT_ENUMERATION_BOUND;

/// Predicate `P(o(g), o(f(g)))` a map must satisfy on every element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonMode {
    /// `o(g)` divides `o(f(g))`.
    Divides,
    /// `o(f(g))` divides `o(g)`.
    DividedBy,
    /// `o(g) >= o(f(g))`.
    Geq,
    /// `o(g) <= o(f(g))`.
    Leq,
}

impl ComparisonMode {
    pub const ALL: [ComparisonMode; 4] = [
        ComparisonMode::Divides,
        ComparisonMode::DividedBy,
        ComparisonMode::Geq,
        ComparisonMode::Leq,
    ];

    pub fn holds(self, domain_order: u64, image_order: u64) -> bool {
        match self {
            ComparisonMode::Divides => domain_order != 0 && image_order.is_multiple_of(domain_order),
            ComparisonMode::DividedBy => image_order != 0 && domain_order.is_multiple_of(image_order),
            ComparisonMode::Geq => domain_order >= image_order,
            ComparisonMode::Leq => domain_order <= image_order,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ComparisonMode::Divides => "divides",
            ComparisonMode::DividedBy => "divided-by",
            ComparisonMode::Geq => "geq",
            ComparisonMode::Leq => "leq",
        }
    }
}

impl fmt::Display for ComparisonMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComparisonMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComparisonMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown comparison mode {s:?}")))
    }
}

/// `f(first, second) = coeff_a * first + coeff_b * second mod |domain|`.
///
/// For a dihedral domain `first` is the reflection exponent `a` and
/// `second` the rotation exponent `b` of `s^a r^b`; for a two-factor product
/// they are the two residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearMapSpec {
    domain: GroupSpec,
    codomain: GroupSpec,
    coeff_a: u64,
    coeff_b: u64,
    modulus: u64,
}

impl LinearMapSpec {
    /// Linear map from `domain` onto the cyclic group of the same order.
    /// Coefficients are reduced modulo that order.
    pub fn new(domain: GroupSpec, coeff_a: i64, coeff_b: i64) -> Result<Self> {
        match domain.family() {
            Family::Dihedral => {}
            Family::DirectProductCyclic if domain.params().len() == 2 => {}
            _ => {
                return Err(Error::domain(format!(
                    "linear maps need a dihedral or two-factor product domain, got {domain}"
                )))
            }
        }
        let modulus = domain.order();
        Ok(LinearMapSpec {
            codomain: GroupSpec::cyclic(modulus)?,
            domain,
            coeff_a: reduce_signed(coeff_a, modulus),
            coeff_b: reduce_signed(coeff_b, modulus),
            modulus,
        })
    }

    pub fn domain(&self) -> &GroupSpec {
        &self.domain
    }

    pub fn codomain(&self) -> &GroupSpec {
        &self.codomain
    }

    pub fn coeff_a(&self) -> u64 {
        self.coeff_a
    }

    pub fn coeff_b(&self) -> u64 {
        self.coeff_b
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Image residue of `x` in the codomain.
    pub fn eval(&self, x: &Element) -> Result<u64> {
        self.domain.check(x)?;
        let (first, second) = match x {
            Element::Dihedral { a, b } => (*a as u64, *b),
            Element::Product(v) => (v[0], v[1]),
            _ => unreachable!("domain family fixed at construction"),
        };
        let m = self.modulus;
        Ok(
            (mul_mod(self.coeff_a, first, m) as u128 + mul_mod(self.coeff_b, second, m) as u128).rem_euclid(m as u128)
                as u64,
        )
    }

    pub fn verify(&self, mode: ComparisonMode) -> Result<VerificationReport> {
        self.verify_bounded(mode, DEFAULT_ENUMERATION_BOUND)
    }

    /// Evaluates the map on every domain element, in canonical order, and
    /// checks injectivity and the order predicate row by row.
    pub fn verify_bounded(&self, mode: ComparisonMode, bound: u64) -> Result<VerificationReport> {
        let elements = self.domain.enumerate_bounded(bound)?;
        let mut seen: Vec<Option<usize>> = vec![None; self.modulus as usize];
        let mut collision = None;
        let mut rows = Vec::with_capacity(elements.len());
        for (idx, element) in elements.into_iter().enumerate() {
            let image = self.eval(&element)?;
            let domain_order = self.domain.element_order(&element)?;
            let image_order = cyclic_order(self.modulus, image);
            match seen[image as usize] {
                Some(first) if collision.is_none() => collision = Some((first, idx)),
                Some(_) => {}
                None => seen[image as usize] = Some(idx),
            }
            rows.push(VerificationRow {
                holds: mode.holds(domain_order, image_order),
                element,
                domain_order,
                image,
                image_order,
            });
        }
        let bijective = collision.is_none();
        let failure = match rows.iter().position(|r| !r.holds) {
            Some(row) => Some(FailureWitness::Predicate {
                row,
                element: rows[row].element.clone(),
                domain_order: rows[row].domain_order,
                image: rows[row].image,
                image_order: rows[row].image_order,
            }),
            None => collision.map(|(first, second)| FailureWitness::Collision {
                first: rows[first].element.clone(),
                second: rows[second].element.clone(),
                image: rows[first].image,
            }),
        };
        Ok(VerificationReport {
            map: self.clone(),
            mode,
            bijective,
            verdict: failure.is_none(),
            rows,
            failure,
        })
    }
}

impl fmt::Display for LinearMapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = match self.domain.family() {
            Family::Dihedral => "f(s^a r^b)",
            _ => "f((a, b))",
        };
        write!(
            f,
            "{lhs} = {}a + {}b mod {} on {} -> {}",
            self.coeff_a, self.coeff_b, self.modulus, self.domain, self.codomain
        )
    }
}

/// `f(s^a r^b) = k a + 2 b` on `D_2n -> Z_2n`, for odd `k`.
pub fn dihedral_paper_map(n: u64, k: i64) -> Result<LinearMapSpec> {
    if k % 2 == 0 {
        return Err(Error::precondition(format!("k must be an odd integer, got {k}")));
    }
    LinearMapSpec::new(GroupSpec::dihedral(n)?, k, 2)
}

/// `f((a, b)) = m k a + p b` on `Z_p x Z_kp -> Z_kp^2`.
///
/// Requires `p` an odd prime, `gcd(p, k) = 1` and `gcd(m, p) = 1`; `m = 1`
/// gives the unscaled map.
pub fn product_paper_map(p: u64, k: u64, m: i64) -> Result<LinearMapSpec> {
    if p == 2 || !is_prime(p) {
        return Err(Error::precondition(format!("p must be an odd prime, got {p}")));
    }
    if k == 0 {
        return Err(Error::precondition("k must be a positive integer"));
    }
    if gcd(p, k) != 1 {
        return Err(Error::precondition(format!("gcd(p, k) = gcd({p}, {k}) must be 1")));
    }
    if gcd(reduce_signed(m, p), p) != 1 {
        return Err(Error::precondition(format!("gcd(m, p) = gcd({m}, {p}) must be 1")));
    }
    let kp = k
        .checked_mul(p)
        .filter(|kp| kp.checked_mul(p).is_some())
        .ok_or_else(|| Error::precondition(format!("k * p^2 overflows u64 for k = {k}, p = {p}")))?;
    let domain = GroupSpec::product(vec![p, kp])?;
    let modulus = domain.order();
    let coeff_a = mul_mod(reduce_signed(m, modulus), k % modulus, modulus);
    let coeff_b = p % modulus;
    Ok(LinearMapSpec {
        codomain: GroupSpec::cyclic(modulus)?,
        domain,
        coeff_a,
        coeff_b,
        modulus,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub element: Element,
    pub domain_order: u64,
    pub image: u64,
    pub image_order: u64,
    pub holds: bool,
}

/// Why a verification failed. Predicate failures take precedence over
/// collisions; within each kind the earliest row is reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailureWitness {
    Predicate {
        row: usize,
        element: Element,
        domain_order: u64,
        image: u64,
        image_order: u64,
    },
    Collision {
        first: Element,
        second: Element,
        image: u64,
    },
}

impl fmt::Display for FailureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureWitness::Predicate {
                element,
                domain_order,
                image,
                image_order,
                ..
            } => write!(f, "{element} -> {image}: orders {domain_order} and {image_order}"),
            FailureWitness::Collision { first, second, image } => {
                write!(f, "{first} and {second} both map to {image}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub map: LinearMapSpec,
    pub mode: ComparisonMode,
    pub bijective: bool,
    pub verdict: bool,
    pub rows: Vec<VerificationRow>,
    pub failure: Option<FailureWitness>,
}
