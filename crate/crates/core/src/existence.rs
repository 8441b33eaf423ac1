//! Existence of order-comparing bijections, decided on order spectra.
//!
//! Every [`ComparisonMode`] looks only at element orders, so a bijection
//! `G -> C` exists iff the order classes of `G` can be matched to those of
//! `C` with counts preserved: a transportation problem on the bipartite
//! *class graph*. It is solved by integral max-flow
//! (source -> source class, capacity = count; class edge, capacity = |G|;
//! target class -> sink, capacity = count). A saturating flow is the
//! assignment; otherwise the source classes on the source side of the
//! minimum cut form a Hall violator.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::group::{Element, GroupSpec};
use crate::maps::ComparisonMode;
use crate::spectrum::OrderSpectrum;
use crate::DEFAULT_ENUMERATION_BOUND;

/// Largest group order [`brute_force_exists`] accepts.
pub const BRUTE_FORCE_MAX_ORDER: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGraph {
    pub mode: ComparisonMode,
    pub source_classes: Vec<(u64, u64)>,
    pub target_classes: Vec<(u64, u64)>,
    /// `(d, e)` with `mode.holds(d, e)`, sorted.
    pub edges: Vec<(u64, u64)>,
}

impl ClassGraph {
    pub fn has_edge(&self, d: u64, e: u64) -> bool {
        self.edges.binary_search(&(d, e)).is_ok()
    }
}

pub fn build_class_graph(src: &OrderSpectrum, dst: &OrderSpectrum, mode: ComparisonMode) -> Result<ClassGraph> {
    if src.group_order() != dst.group_order() {
        return Err(Error::domain(format!(
            "group orders differ: {} vs {}",
            src.group_order(),
            dst.group_order()
        )));
    }
    let mut edges = Vec::new();
    for &(d, _) in src.entries() {
        for &(e, _) in dst.entries() {
            if mode.holds(d, e) {
                edges.push((d, e));
            }
        }
    }
    Ok(ClassGraph {
        mode,
        source_classes: src.entries().to_vec(),
        target_classes: dst.entries().to_vec(),
        edges,
    })
}

/// How many order-`source_order` elements go to order-`target_order` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassAssignment {
    pub source_order: u64,
    pub target_order: u64,
    pub count: u64,
}

/// Source classes whose total size exceeds the total size of every target
/// class they may map to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallWitness {
    pub source_orders: Vec<u64>,
    pub source_count: u64,
    pub neighbour_orders: Vec<u64>,
    pub neighbour_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceCertificate {
    pub mode: ComparisonMode,
    pub source: OrderSpectrum,
    pub target: OrderSpectrum,
    pub feasible: bool,
    pub flow_value: u64,
    /// Nonzero class assignments sorted by `(source_order, target_order)`;
    /// present iff feasible.
    pub assignment: Option<Vec<ClassAssignment>>,
    /// Present iff infeasible.
    pub witness: Option<HallWitness>,
}

/// Decides whether a bijection respecting `mode` exists between groups with
/// spectra `src` and `dst`.
pub fn exists_bijection(
    src: &OrderSpectrum,
    dst: &OrderSpectrum,
    mode: ComparisonMode,
) -> Result<ExistenceCertificate> {
    let graph = build_class_graph(src, dst, mode)?;
    let s_len = graph.source_classes.len();
    let t_len = graph.target_classes.len();
    let source = 0;
    let sink = 1 + s_len + t_len;
    let total = src.group_order();
    let mut net = FlowNetwork::new(sink + 1);
    for (i, &(_, c)) in graph.source_classes.iter().enumerate() {
        net.add_edge(source, 1 + i, c);
    }
    let mut middle = Vec::new();
    for (i, &(d, _)) in graph.source_classes.iter().enumerate() {
        for (j, &(e, _)) in graph.target_classes.iter().enumerate() {
            if graph.has_edge(d, e) {
                middle.push((d, e, net.add_edge(1 + i, 1 + s_len + j, total)));
            }
        }
    }
    for (j, &(_, c)) in graph.target_classes.iter().enumerate() {
        net.add_edge(1 + s_len + j, sink, c);
    }
    let flow_value = net.max_flow(source, sink);

    if flow_value == total {
        let assignment = middle
            .into_iter()
            .map(|(d, e, id)| ClassAssignment {
                source_order: d,
                target_order: e,
                count: net.flow_on(id),
            })
            .filter(|a| a.count > 0)
            .collect();
        return Ok(ExistenceCertificate {
            mode,
            source: src.clone(),
            target: dst.clone(),
            feasible: true,
            flow_value,
            assignment: Some(assignment),
            witness: None,
        });
    }

    let reach = net.residual_reachable(source);
    let chosen: Vec<(u64, u64)> = graph
        .source_classes
        .iter()
        .enumerate()
        .filter(|(i, _)| reach[1 + i])
        .map(|(_, &c)| c)
        .collect();
    let neighbours: Vec<(u64, u64)> = graph
        .target_classes
        .iter()
        .filter(|&&(e, _)| chosen.iter().any(|&(d, _)| graph.has_edge(d, e)))
        .copied()
        .collect();
    let witness = HallWitness {
        source_orders: chosen.iter().map(|c| c.0).collect(),
        source_count: chosen.iter().map(|c| c.1).sum(),
        neighbour_orders: neighbours.iter().map(|c| c.0).collect(),
        neighbour_count: neighbours.iter().map(|c| c.1).sum(),
    };
    debug_assert!(witness.source_count > witness.neighbour_count);
    Ok(ExistenceCertificate {
        mode,
        source: src.clone(),
        target: dst.clone(),
        feasible: false,
        flow_value,
        assignment: None,
        witness: Some(witness),
    })
}

/// Re-derives a certificate's claims by direct summation, without flow.
pub fn check_certificate(cert: &ExistenceCertificate) -> Result<()> {
    let bad = |msg: String| Err(Error::domain(msg));
    match (&cert.assignment, &cert.witness, cert.feasible) {
        (Some(assignment), None, true) => {
            for a in assignment {
                if !cert.mode.holds(a.source_order, a.target_order) {
                    return bad(format!(
                        "assignment uses non-edge ({}, {})",
                        a.source_order, a.target_order
                    ));
                }
            }
            for &(d, c) in cert.source.entries() {
                let row: u64 = assignment.iter().filter(|a| a.source_order == d).map(|a| a.count).sum();
                if row != c {
                    return bad(format!("row {d} sums to {row}, expected {c}"));
                }
            }
            for &(e, c) in cert.target.entries() {
                let col: u64 = assignment.iter().filter(|a| a.target_order == e).map(|a| a.count).sum();
                if col != c {
                    return bad(format!("column {e} sums to {col}, expected {c}"));
                }
            }
            let total: u64 = assignment.iter().map(|a| a.count).sum();
            if total != cert.source.group_order() {
                return bad(format!("assignment covers {total} elements"));
            }
            Ok(())
        }
        (None, Some(w), false) => {
            let source_count: u64 = w.source_orders.iter().map(|&d| cert.source.count(d)).sum();
            let neighbour_count: u64 = cert
                .target
                .entries()
                .iter()
                .filter(|&&(e, _)| w.source_orders.iter().any(|&d| cert.mode.holds(d, e)))
                .map(|&(_, c)| c)
                .sum();
            if source_count != w.source_count || neighbour_count != w.neighbour_count {
                return bad("witness counts do not match the spectra".into());
            }
            if source_count <= neighbour_count {
                return bad(format!(
                    "witness is not a Hall violator: {source_count} <= {neighbour_count}"
                ));
            }
            Ok(())
        }
        _ => bad("certificate must carry exactly one of assignment or witness".into()),
    }
}

/// Backtracking search over class assignments; an oracle for
/// [`exists_bijection`] at small orders.
pub fn brute_force_exists(src: &OrderSpectrum, dst: &OrderSpectrum, mode: ComparisonMode) -> Result<bool> {
    Error::check_bound("group order", src.group_order(), BRUTE_FORCE_MAX_ORDER)?;
    if src.group_order() != dst.group_order() {
        return Err(Error::domain("group orders differ"));
    }
    let sources = src.entries();
    let targets = dst.entries();
    let mut capacity: Vec<u64> = targets.iter().map(|t| t.1).collect();

    fn place(
        sources: &[(u64, u64)],
        targets: &[(u64, u64)],
        mode: ComparisonMode,
        capacity: &mut [u64],
        class: usize,
        target: usize,
        left: u64,
    ) -> bool {
        if class == sources.len() {
            return true;
        }
        if left == 0 {
            let next = sources.get(class + 1).map_or(0, |s| s.1);
            return place(sources, targets, mode, capacity, class + 1, 0, next);
        }
        if target == targets.len() {
            return false;
        }
        let max = if mode.holds(sources[class].0, targets[target].0) {
            left.min(capacity[target])
        } else {
            0
        };
        for take in (0..=max).rev() {
            capacity[target] -= take;
            let ok = place(sources, targets, mode, capacity, class, target + 1, left - take);
            capacity[target] += take;
            if ok {
                return true;
            }
        }
        false
    }

    let first = sources.first().map_or(0, |s| s.1);
    Ok(place(sources, targets, mode, &mut capacity, 0, 0, first))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedRow {
    pub element: Element,
    pub element_order: u64,
    pub image: Element,
    pub image_order: u64,
    pub holds: bool,
}

/// An explicit element-level bijection expanded from a feasible certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizedBijection {
    pub domain: GroupSpec,
    pub codomain: GroupSpec,
    pub mode: ComparisonMode,
    /// One row per domain element, in canonical enumeration order.
    pub rows: Vec<RealizedRow>,
    pub verdict: bool,
}

impl RealizedBijection {
    /// Recomputes both orders of every row from the groups and checks the
    /// table is a bijection satisfying the mode.
    pub fn recheck(&self) -> Result<bool> {
        let domain = self.domain.enumerate()?;
        if domain.len() != self.rows.len() || domain.iter().zip(&self.rows).any(|(x, r)| *x != r.element) {
            return Ok(false);
        }
        let mut images: Vec<&Element> = self.rows.iter().map(|r| &r.image).collect();
        images.sort();
        images.dedup();
        if images.len() != self.rows.len() {
            return Ok(false);
        }
        for row in &self.rows {
            let d = self.domain.element_order(&row.element)?;
            let e = self.codomain.element_order(&row.image)?;
            if !self.mode.holds(d, e) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Expands a feasible certificate for `domain -> codomain` into an explicit
/// bijection. Within each order class elements are consumed in canonical
/// enumeration order; assignments are consumed in certificate order.
pub fn realize_bijection(
    domain: &GroupSpec,
    codomain: &GroupSpec,
    cert: &ExistenceCertificate,
) -> Result<RealizedBijection> {
    realize_bijection_bounded(domain, codomain, cert, DEFAULT_ENUMERATION_BOUND)
}

pub fn realize_bijection_bounded(
    domain: &GroupSpec,
    codomain: &GroupSpec,
    cert: &ExistenceCertificate,
    bound: u64,
) -> Result<RealizedBijection> {
    let assignment = match (&cert.assignment, cert.feasible) {
        (Some(a), true) => a,
        _ => return Err(Error::domain("cannot realize an infeasible certificate")),
    };
    let src_elems = domain.enumerate_bounded(bound)?;
    let dst_elems = codomain.enumerate_bounded(bound)?;
    let src_orders: Vec<u64> = src_elems
        .iter()
        .map(|x| domain.element_order(x))
        .collect::<Result<_>>()?;
    let dst_orders: Vec<u64> = dst_elems
        .iter()
        .map(|x| codomain.element_order(x))
        .collect::<Result<_>>()?;
    if OrderSpectrum::from_orders(domain.order(), src_orders.iter().copied()) != cert.source
        || OrderSpectrum::from_orders(codomain.order(), dst_orders.iter().copied()) != cert.target
    {
        return Err(Error::domain(format!(
            "certificate spectra do not match {domain} -> {codomain}"
        )));
    }

    // next unused index per order class
    let class_queue = |orders: &[u64], d: u64| -> Vec<usize> {
        orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o == d)
            .map(|(i, _)| i)
            .rev()
            .collect()
    };
    let mut src_pool: std::collections::BTreeMap<u64, Vec<usize>> = Default::default();
    let mut dst_pool: std::collections::BTreeMap<u64, Vec<usize>> = Default::default();
    let mut image_of: Vec<Option<usize>> = vec![None; src_elems.len()];
    for a in assignment {
        let srcs = src_pool
            .entry(a.source_order)
            .or_insert_with(|| class_queue(&src_orders, a.source_order));
        let dsts = dst_pool
            .entry(a.target_order)
            .or_insert_with(|| class_queue(&dst_orders, a.target_order));
        for _ in 0..a.count {
            match (srcs.pop(), dsts.pop()) {
                (Some(i), Some(j)) => image_of[i] = Some(j),
                _ => return Err(Error::domain("assignment overdraws an order class")),
            }
        }
    }

    let mut rows = Vec::with_capacity(src_elems.len());
    for (i, element) in src_elems.into_iter().enumerate() {
        let j = image_of[i].ok_or_else(|| Error::domain("assignment leaves an element unmapped"))?;
        rows.push(RealizedRow {
            holds: cert.mode.holds(src_orders[i], dst_orders[j]),
            element,
            element_order: src_orders[i],
            image: dst_elems[j].clone(),
            image_order: dst_orders[j],
        });
    }
    let verdict = rows.iter().all(|r| r.holds);
    Ok(RealizedBijection {
        domain: domain.clone(),
        codomain: codomain.clone(),
        mode: cert.mode,
        rows,
        verdict,
    })
}
