//! Group catalog, normal-form elements and their arithmetic.
//!
//! Normal forms:
//!
//! | family | element | meaning |
//! |---|---|---|
//! | `Z_n` | `Cyclic(b)` | residue `b` in `[0, n)` |
//! | `D_2n` | `Dihedral { a, b }` | `s^a r^b`, `a` in `{0,1}`, `b` in `[0, n)` |
//! | `Z_n1 x ... x Z_nt` | `Product(v)` | residue tuple, `v[i]` in `[0, n_i)` |
//! | `Q_4m` | `Quaternion { i, j }` | `x^i y^j`, `i` in `[0, 2m)`, `j` in `{0,1}` |
//!
//! The dihedral relations are `r^n = s^2 = 1`, `rs = sr^-1`; the quaternion
//! relations are `x^2m = 1`, `y^2 = x^m`, `y^-1 x y = x^-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{cyclic_order, divisors, lcm};
use crate::error::{Error, Result};
use crate::spectrum::OrderSpectrum;
use crate::DEFAULT_ENUMERATION_BOUND;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Dihedral,
    DirectProductCyclic,
    GeneralizedQuaternion,
}

/// One finite group from the catalog.
///
/// `params` are `[n]` for `Z_n`, `[n]` for `D_2n` (order `2n`), `[n1, .., nt]`
/// (at least two factors) for a product of cyclic groups, and `[m]` with
/// `m >= 2` for `Q_4m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    params: Vec<u64>,
    order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Cyclic(u64),
    Dihedral { a: u8, b: u64 },
    Product(Vec<u64>),
    Quaternion { i: u64, j: u8 },
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("cyclic group order must be at least 1"));
        }
        Ok(GroupSpec {
            family: Family::Cyclic,
            params: vec![n],
            order: n,
        })
    }

    /// `D_2n`, the dihedral group of order `2n`.
    pub fn dihedral(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::precondition("dihedral parameter n must be at least 1"));
        }
        let order = n
            .checked_mul(2)
            .ok_or_else(|| Error::precondition(format!("order of D_2n with n = {n} overflows u64")))?;
        Ok(GroupSpec {
            family: Family::Dihedral,
            params: vec![n],
            order,
        })
    }

    pub fn product(moduli: Vec<u64>) -> Result<Self> {
        if moduli.len() < 2 {
            return Err(Error::precondition(
                "a direct product needs at least two factors; use a cyclic group instead",
            ));
        }
        if moduli.contains(&0) {
            return Err(Error::precondition("every product factor must have order at least 1"));
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::precondition(format!("order of product {moduli:?} overflows u64")))?;
        Ok(GroupSpec {
            family: Family::DirectProductCyclic,
            params: moduli,
            order,
        })
    }

    /// `Q_4m`, the generalized quaternion (dicyclic) group of order `4m`.
    pub fn quaternion(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::precondition("quaternion parameter m must be at least 2"));
        }
        let order = m
            .checked_mul(4)
            .ok_or_else(|| Error::precondition(format!("order of Q_4m with m = {m} overflows u64")))?;
        Ok(GroupSpec {
            family: Family::GeneralizedQuaternion,
            params: vec![m],
            order,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Checks that `x` is a normal-form element of this group.
    pub fn check(&self, x: &Element) -> Result<()> {
        let ok = match (self.family, x) {
            (Family::Cyclic, Element::Cyclic(b)) => *b < self.params[0],
            (Family::Dihedral, Element::Dihedral { a, b }) => *a < 2 && *b < self.params[0],
            (Family::DirectProductCyclic, Element::Product(v)) => {
                v.len() == self.params.len() && v.iter().zip(&self.params).all(|(r, n)| r < n)
            }
            (Family::GeneralizedQuaternion, Element::Quaternion { i, j }) => *j < 2 && *i < 2 * self.params[0],
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("element {x} does not belong to {self}")))
        }
    }

    pub fn identity(&self) -> Element {
        match self.family {
            Family::Cyclic => Element::Cyclic(0),
            Family::Dihedral => Element::Dihedral { a: 0, b: 0 },
            Family::DirectProductCyclic => Element::Product(vec![0; self.params.len()]),
            Family::GeneralizedQuaternion => Element::Quaternion { i: 0, j: 0 },
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Cyclic(p), Element::Cyclic(q)) => Element::Cyclic(add_mod(*p, *q, self.params[0])),
            (Element::Dihedral { a: a1, b: b1 }, Element::Dihedral { a: a2, b: b2 }) => {
                // r^b1 s = s r^-b1
                let n = self.params[0];
                let b1 = if *a2 == 1 { neg_mod(*b1, n) } else { *b1 };
                Element::Dihedral {
                    a: (a1 + a2) % 2,
                    b: add_mod(b1, *b2, n),
                }
            }
            (Element::Product(u), Element::Product(v)) => Element::Product(
                u.iter()
                    .zip(v)
                    .zip(&self.params)
                    .map(|((p, q), n)| add_mod(*p, *q, *n))
                    .collect(),
            ),
            (Element::Quaternion { i: i1, j: j1 }, Element::Quaternion { i: i2, j: j2 }) => {
                let m = self.params[0];
                let two_m = 2 * m;
                match (j1, j2) {
                    (0, _) => Element::Quaternion {
                        i: add_mod(*i1, *i2, two_m),
                        j: *j2,
                    },
                    // y x^i2 = x^-i2 y
                    (_, 0) => Element::Quaternion {
                        i: add_mod(*i1, neg_mod(*i2, two_m), two_m),
                        j: 1,
                    },
                    // y^2 = x^m
                    _ => Element::Quaternion {
                        i: add_mod(add_mod(*i1, neg_mod(*i2, two_m), two_m), m, two_m),
                        j: 0,
                    },
                }
            }
            _ => unreachable!("operands checked against the group"),
        }
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(match x {
            Element::Cyclic(b) => Element::Cyclic(neg_mod(*b, self.params[0])),
            Element::Dihedral { a: 0, b } => Element::Dihedral {
                a: 0,
                b: neg_mod(*b, self.params[0]),
            },
            Element::Dihedral { .. } => x.clone(),
            Element::Product(v) => Element::Product(v.iter().zip(&self.params).map(|(r, n)| neg_mod(*r, *n)).collect()),
            Element::Quaternion { i, j: 0 } => Element::Quaternion {
                i: neg_mod(*i, 2 * self.params[0]),
                j: 0,
            },
            // (x^i y)^-1 = x^(i+m) y
            Element::Quaternion { i, .. } => Element::Quaternion {
                i: add_mod(*i, self.params[0], 2 * self.params[0]),
                j: 1,
            },
        })
    }

    /// `x^e` by square-and-multiply.
    pub fn pow(&self, x: &Element, mut e: u64) -> Result<Element> {
        self.check(x)?;
        let mut base = x.clone();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    /// Smallest `t >= 1` with `x^t = 1`.
    ///
    /// Closed forms for cyclic, dihedral and product elements; quaternion
    /// elements are resolved by powering over the divisors of the group order.
    pub fn element_order(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        Ok(match x {
            Element::Cyclic(b) => cyclic_order(self.params[0], *b),
            Element::Dihedral { a: 1, .. } => 2,
            Element::Dihedral { b, .. } => cyclic_order(self.params[0], *b),
            Element::Product(v) => v
                .iter()
                .zip(&self.params)
                .fold(1, |acc, (r, n)| lcm(acc, cyclic_order(*n, *r))),
            Element::Quaternion { .. } => {
                let id = self.identity();
                divisors(self.order)
                    .into_iter()
                    .find(|&d| self.pow(x, d).expect("checked") == id)
                    .expect("Lagrange: x^|G| = 1")
            }
        })
    }

    /// Element order by plain repeated multiplication.
    ///
    /// Independent of [`GroupSpec::element_order`]; used to cross-check it.
    ///
    /// # Panics
    /// If no power up to `|G|` is the identity, which would mean the
    /// multiplication table is broken.
    pub fn order_by_iteration(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        let id = self.identity();
        let mut acc = x.clone();
        let mut t = 1u64;
        while acc != id {
            t += 1;
            assert!(t <= self.order, "no power of {x} up to |{self}| is the identity");
            acc = self.mul_unchecked(&acc, x);
        }
        Ok(t)
    }

    /// Every element exactly once, in canonical order.
    ///
    /// Cyclic: residue ascending. Dihedral: `a` then `b` ascending (rotations
    /// first). Product: lexicographic, first factor most significant.
    /// Quaternion: `j` then `i` ascending.
    pub fn enumerate(&self) -> Result<Vec<Element>> {
        self.enumerate_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_bounded(&self, bound: u64) -> Result<Vec<Element>> {
        Error::check_bound("group order", self.order, bound)?;
        let n = self.params[0];
        Ok(match self.family {
            Family::Cyclic => (0..n).map(Element::Cyclic).collect(),
            Family::Dihedral => (0..2u8)
                .flat_map(|a| (0..n).map(move |b| Element::Dihedral { a, b }))
                .collect(),
            Family::GeneralizedQuaternion => (0..2u8)
                .flat_map(|j| (0..2 * n).map(move |i| Element::Quaternion { i, j }))
                .collect(),
            Family::DirectProductCyclic => {
                let mut out = Vec::with_capacity(self.order as usize);
                let mut cur = vec![0u64; self.params.len()];
                loop {
                    out.push(Element::Product(cur.clone()));
                    // odometer, last factor fastest
                    let mut pos = cur.len();
                    loop {
                        if pos == 0 {
                            return Ok(out);
                        }
                        pos -= 1;
                        cur[pos] += 1;
                        if cur[pos] < self.params[pos] {
                            break;
                        }
                        cur[pos] = 0;
                    }
                }
            }
        })
    }

    pub fn order_spectrum(&self) -> Result<OrderSpectrum> {
        self.order_spectrum_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    /// Order spectrum; closed form `{d -> phi(d) : d | n}` for `Z_n`,
    /// enumeration otherwise.
    pub fn order_spectrum_bounded(&self, bound: u64) -> Result<OrderSpectrum> {
        Error::check_bound("group order", self.order, bound)?;
        match self.family {
            Family::Cyclic => Ok(OrderSpectrum::of_cyclic(self.order)),
            _ => self.order_spectrum_by_enumeration(bound),
        }
    }

    /// Order spectrum by visiting every element.
    pub fn order_spectrum_by_enumeration(&self, bound: u64) -> Result<OrderSpectrum> {
        let elems = self.enumerate_bounded(bound)?;
        let orders = elems
            .iter()
            .map(|x| self.element_order(x).expect("enumerated elements belong to the group"));
        Ok(OrderSpectrum::from_orders(self.order, orders))
    }

    /// A generator if the group is cyclic.
    ///
    /// Products of cyclic groups are cyclic exactly when their moduli are
    /// pairwise coprime, and then the all-ones tuple generates.
    pub fn is_cyclic(&self) -> Option<Element> {
        match self.family {
            Family::Cyclic => Some(Element::Cyclic(1 % self.params[0])),
            // D_2 = {1, s}
            Family::Dihedral => (self.params[0] == 1).then_some(Element::Dihedral { a: 1, b: 0 }),
            Family::DirectProductCyclic => {
                let coprime = self
                    .params
                    .iter()
                    .enumerate()
                    .all(|(i, &p)| self.params[i + 1..].iter().all(|&q| crate::arith::gcd(p, q) == 1));
                coprime.then(|| Element::Product(self.params.iter().map(|n| 1 % n).collect()))
            }
            // largest element order is 2m < 4m
            Family::GeneralizedQuaternion => None,
        }
    }

    /// Canonical descriptor, e.g. `Z6`, `D6`, `Q8`, `Z3xZ6`.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }

    /// Every catalog group of order at most `max_order`: each `Z_n`, `D_2n`
    /// and `Q_4m`, and each product `Z_n1 x .. x Z_nt` with
    /// `2 <= n1 <= .. <= nt`. Sorted by order, then family, then parameters.
    pub fn catalog(max_order: u64) -> Vec<GroupSpec> {
        fn products(max: u64, min_factor: u64, prefix: &mut Vec<u64>, acc: u64, out: &mut Vec<GroupSpec>) {
            let mut f = min_factor;
            while acc.saturating_mul(f) <= max {
                prefix.push(f);
                if prefix.len() >= 2 {
                    out.push(GroupSpec::product(prefix.clone()).expect("bounded"));
                }
                products(max, f, prefix, acc * f, out);
                prefix.pop();
                f += 1;
            }
        }
        let mut out = Vec::new();
        for n in 1..=max_order {
            out.push(GroupSpec::cyclic(n).expect("positive"));
            if n % 2 == 0 {
                out.push(GroupSpec::dihedral(n / 2).expect("positive"));
            }
            if n % 4 == 0 && n >= 8 {
                out.push(GroupSpec::quaternion(n / 4).expect("m >= 2"));
            }
        }
        products(max_order, 2, &mut Vec::new(), 1, &mut out);
        out.sort_by(|a, b| (a.order, a.family, &a.params).cmp(&(b.order, b.family, &b.params)));
        out
    }
}

fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % n as u128) as u64
}

fn neg_mod(a: u64, n: u64) -> u64 {
    if a == 0 {
        0
    } else {
        n - a
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Cyclic => write!(f, "Z{}", self.params[0]),
            Family::Dihedral => write!(f, "D{}", self.order),
            Family::GeneralizedQuaternion => write!(f, "Q{}", self.order),
            Family::DirectProductCyclic => {
                for (i, n) in self.params.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "Z{n}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if s.is_empty() {
            return Err(fail("empty descriptor"));
        }
        let mut factors = Vec::new();
        for part in s.split('x') {
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| fail("empty factor"))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(fail("each factor is a letter followed by a decimal order"));
            }
            let value: u64 = digits.parse().map_err(|_| fail("order does not fit in u64"))?;
            factors.push((letter, value));
        }
        let wrap = |e: Error| match e {
            Error::Precondition(reason) => Error::Parse {
                input: input.to_string(),
                reason,
            },
            other => other,
        };
        if factors.len() == 1 {
            let (letter, value) = factors[0];
            return match letter {
                'Z' => GroupSpec::cyclic(value).map_err(wrap),
                'D' if value >= 2 && value % 2 == 0 => GroupSpec::dihedral(value / 2).map_err(wrap),
                'D' => Err(fail("dihedral groups are named by their even order, at least 2")),
                'Q' if value >= 8 && value % 4 == 0 => GroupSpec::quaternion(value / 4).map_err(wrap),
                'Q' => Err(fail(
                    "quaternion groups are named by their order, a multiple of 4 at least 8",
                )),
                _ => Err(fail("unknown family letter")),
            };
        }
        if factors.iter().any(|(letter, _)| *letter != 'Z') {
            return Err(fail("only cyclic factors Z<n> may appear in a product"));
        }
        GroupSpec::product(factors.into_iter().map(|(_, n)| n).collect()).map_err(wrap)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, sym: &str, e: u64) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => f.write_str(sym),
                _ => write!(f, "{sym}^{e}"),
            }
        }
        match self {
            Element::Cyclic(b) => write!(f, "{b}"),
            Element::Dihedral { a: 0, b: 0 } | Element::Quaternion { i: 0, j: 0 } => f.write_str("1"),
            Element::Dihedral { a, b } => {
                if *a == 1 {
                    f.write_str("s")?;
                }
                power(f, "r", *b)
            }
            Element::Quaternion { i, j } => {
                power(f, "x", *i)?;
                if *j == 1 {
                    f.write_str("y")?;
                }
                Ok(())
            }
            Element::Product(v) => {
                f.write_str("(")?;
                for (k, r) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{r}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u8, b: u64) -> Element {
        Element::Dihedral { a, b }
    }

    #[test]
    fn dihedral_relation_rs_is_s_r_inverse() {
        let g = GroupSpec::dihedral(3).unwrap();
        let r = d(0, 1);
        let s = d(1, 0);
        assert_eq!(g.multiply(&s, &r).unwrap(), d(1, 1));
        assert_eq!(g.multiply(&r, &s).unwrap(), d(1, 2));
        let sr = d(1, 1);
        assert_eq!(g.multiply(&sr, &sr).unwrap(), g.identity());
    }

    #[test]
    fn identities() {
        assert_eq!(GroupSpec::cyclic(6).unwrap().identity(), Element::Cyclic(0));
        assert_eq!(GroupSpec::dihedral(3).unwrap().identity(), d(0, 0));
        assert_eq!(
            GroupSpec::product(vec![3, 6]).unwrap().identity(),
            Element::Product(vec![0, 0])
        );
        for g in ["Z6", "D6", "Z3xZ6", "Q12"] {
            let g: GroupSpec = g.parse().unwrap();
            for x in g.enumerate().unwrap() {
                assert_eq!(g.multiply(&g.identity(), &x).unwrap(), x);
                assert_eq!(g.multiply(&x, &g.identity()).unwrap(), x);
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        for m in 2..8 {
            let g = GroupSpec::quaternion(m).unwrap();
            let x = Element::Quaternion { i: 1, j: 0 };
            let y = Element::Quaternion { i: 0, j: 1 };
            assert_eq!(g.pow(&x, 2 * m).unwrap(), g.identity());
            assert_eq!(g.pow(&y, 2).unwrap(), g.pow(&x, m).unwrap());
            let yinv = g.inverse(&y).unwrap();
            let conj = g.multiply(&g.multiply(&yinv, &x).unwrap(), &y).unwrap();
            assert_eq!(conj, g.inverse(&x).unwrap());
            for e in g.enumerate().unwrap() {
                assert_eq!(g.multiply(&e, &g.inverse(&e).unwrap()).unwrap(), g.identity());
            }
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let g: GroupSpec = "Q8".parse().unwrap();
        let spec = g.order_spectrum().unwrap();
        assert_eq!(spec.entries(), &[(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn order_examples() {
        let z6 = GroupSpec::cyclic(6).unwrap();
        assert_eq!(z6.element_order(&Element::Cyclic(2)).unwrap(), 3);
        let d6 = GroupSpec::dihedral(3).unwrap();
        assert_eq!(d6.element_order(&d(1, 0)).unwrap(), 2);
        let p = GroupSpec::product(vec![3, 6]).unwrap();
        let x = Element::Product(vec![1, 1]);
        assert_eq!(p.element_order(&x).unwrap(), 6);
        assert_eq!(p.order_by_iteration(&x).unwrap(), 6);
    }

    #[test]
    fn incompatible_elements_are_rejected() {
        let d6 = GroupSpec::dihedral(3).unwrap();
        assert!(matches!(d6.element_order(&Element::Cyclic(1)), Err(Error::Domain(_))));
        assert!(matches!(d6.element_order(&d(0, 3)), Err(Error::Domain(_))));
        assert!(matches!(d6.multiply(&d(2, 0), &d(0, 0)), Err(Error::Domain(_))));
        let p = GroupSpec::product(vec![2, 2]).unwrap();
        assert!(p.check(&Element::Product(vec![1, 1, 0])).is_err());
        assert!(p.check(&Element::Product(vec![1, 2])).is_err());
        let q = GroupSpec::quaternion(2).unwrap();
        assert!(q.check(&Element::Quaternion { i: 4, j: 0 }).is_err());
    }

    #[test]
    fn enumeration_orders() {
        let names: Vec<String> = GroupSpec::dihedral(3)
            .unwrap()
            .enumerate()
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(names, ["1", "r", "r^2", "s", "sr", "sr^2"]);
        assert_eq!(
            GroupSpec::cyclic(3).unwrap().enumerate().unwrap(),
            vec![Element::Cyclic(0), Element::Cyclic(1), Element::Cyclic(2)]
        );
        let p: Vec<String> = GroupSpec::product(vec![2, 2])
            .unwrap()
            .enumerate()
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(p, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        let q: Vec<String> = GroupSpec::quaternion(2)
            .unwrap()
            .enumerate()
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(q, ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]);
    }

    #[test]
    fn enumeration_bound() {
        let g = GroupSpec::cyclic(11).unwrap();
        assert_eq!(
            g.enumerate_bounded(10),
            Err(Error::Resource {
                what: "group order",
                requested: 11,
                bound: 10
            })
        );
        assert!(GroupSpec::cyclic(2_000_000).unwrap().order_spectrum().is_err());
    }

    #[test]
    fn cyclicity() {
        let p = GroupSpec::product(vec![3, 2]).unwrap();
        let w = p.is_cyclic().unwrap();
        assert_eq!(w, Element::Product(vec![1, 1]));
        assert_eq!(p.element_order(&w).unwrap(), 6);
        assert_eq!(GroupSpec::cyclic(7).unwrap().is_cyclic(), Some(Element::Cyclic(1)));
        assert_eq!(GroupSpec::cyclic(1).unwrap().is_cyclic(), Some(Element::Cyclic(0)));
        assert_eq!(GroupSpec::dihedral(3).unwrap().is_cyclic(), None);
        assert!(GroupSpec::dihedral(1).unwrap().is_cyclic().is_some());
        assert!(GroupSpec::product(vec![2, 2]).unwrap().is_cyclic().is_none());
        assert!(GroupSpec::product(vec![2, 3, 5]).unwrap().is_cyclic().is_some());
        assert!(GroupSpec::product(vec![2, 3, 4]).unwrap().is_cyclic().is_none());
    }

    #[test]
    fn constructor_rejections() {
        assert!(GroupSpec::cyclic(0).is_err());
        assert!(GroupSpec::dihedral(0).is_err());
        assert!(GroupSpec::dihedral(u64::MAX).is_err());
        assert!(GroupSpec::quaternion(1).is_err());
        assert!(GroupSpec::quaternion(u64::MAX / 2).is_err());
        assert!(GroupSpec::product(vec![6]).is_err());
        assert!(GroupSpec::product(vec![2, 0]).is_err());
        assert!(GroupSpec::product(vec![u64::MAX, 2]).is_err());
        assert_eq!(GroupSpec::product(vec![1 << 32, 1 << 31]).unwrap().order(), 1 << 63);
    }

    #[test]
    fn descriptors() {
        let cases = [
            ("Z6", GroupSpec::cyclic(6).unwrap()),
            ("D6", GroupSpec::dihedral(3).unwrap()),
            ("D2", GroupSpec::dihedral(1).unwrap()),
            ("Q8", GroupSpec::quaternion(2).unwrap()),
            ("Z3xZ6", GroupSpec::product(vec![3, 6]).unwrap()),
            ("Z2xZ2xZ2", GroupSpec::product(vec![2, 2, 2]).unwrap()),
        ];
        for (text, g) in cases {
            assert_eq!(text.parse::<GroupSpec>().unwrap(), g);
            assert_eq!(g.to_string(), text);
        }
        for bad in [
            "",
            "Z",
            "Z0",
            "D7",
            "D0",
            "Q6",
            "Q4",
            "X5",
            "Z3xD6",
            "Z3x",
            "z6",
            "Z-1",
            "Z99999999999999999999",
        ] {
            assert!(matches!(bad.parse::<GroupSpec>(), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn catalog_small_orders() {
        let names: Vec<String> = GroupSpec::catalog(8).iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            [
                "Z1", "Z2", "D2", "Z3", "Z4", "D4", "Z2xZ2", "Z5", "Z6", "D6", "Z2xZ3", "Z7", "Z8", "D8", "Z2xZ2xZ2",
                "Z2xZ4", "Q8"
            ]
        );
    }
}
