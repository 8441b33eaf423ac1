use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{divisors, totients};
use crate::error::{Error, Result};

/// Multiset of element orders of a finite group: order `d` -> number of
/// elements of order `d`, sorted by `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrderSpectrum {
    group_order: u64,
    #[serde(serialize_with = "serialize_entries")]
    entries: Vec<(u64, u64)>,
}

#[derive(Serialize)]
struct Entry {
    order: u64,
    count: u64,
}

fn serialize_entries<S: serde::Serializer>(entries: &[(u64, u64)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(entries.iter().map(|&(order, count)| Entry { order, count }))
}

impl OrderSpectrum {
    /// `{d -> phi(d) : d | n}`, the spectrum of `Z_n`.
    pub fn of_cyclic(n: u64) -> Self {
        let table = totients(n as usize);
        let entries = divisors(n).into_iter().map(|d| (d, table.phi(d as usize))).collect();
        OrderSpectrum {
            group_order: n,
            entries,
        }
    }

    pub fn from_orders(group_order: u64, orders: impl IntoIterator<Item = u64>) -> Self {
        let mut counts = BTreeMap::new();
        for d in orders {
            *counts.entry(d).or_insert(0u64) += 1;
        }
        OrderSpectrum {
            group_order,
            entries: counts.into_iter().collect(),
        }
    }

    /// Builds a spectrum from explicit `(order, count)` pairs and checks the
    /// invariants every group spectrum satisfies.
    pub fn from_entries(group_order: u64, entries: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (d, c) in entries {
            if c > 0 {
                *counts.entry(d).or_insert(0u64) += c;
            }
        }
        let spectrum = OrderSpectrum {
            group_order,
            entries: counts.into_iter().collect(),
        };
        spectrum.validate()?;
        Ok(spectrum)
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// `(order, count)` pairs, ascending by order, counts all positive.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn count(&self, order: u64) -> u64 {
        self.entries
            .binary_search_by_key(&order, |e| e.0)
            .map_or(0, |i| self.entries[i].1)
    }

    /// Counts sum to the group order, every order divides it, exactly one
    /// element has order 1.
    pub fn validate(&self) -> Result<()> {
        let total: u128 = self.entries.iter().map(|e| e.1 as u128).sum();
        if total != self.group_order as u128 {
            return Err(Error::domain(format!(
                "spectrum counts sum to {total}, not the group order {}",
                self.group_order
            )));
        }
        if let Some(&(d, _)) = self
            .entries
            .iter()
            .find(|(d, _)| *d == 0 || !self.group_order.is_multiple_of(*d))
        {
            return Err(Error::domain(format!(
                "element order {d} does not divide the group order {}",
                self.group_order
            )));
        }
        if self.count(1) != 1 {
            return Err(Error::domain("a spectrum has exactly one element of order 1"));
        }
        Ok(())
    }
}

impl fmt::Display for OrderSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        Ok(())
    }
}
