//! Products of two graphs on the vertex set `V(a) × V(b)`.
//!
//! The pair `(i, j)` is vertex `i·|V(b)| + j`, the same encoding
//! [`FiniteGroup::direct_product`](crate::group::FiniteGroup::direct_product)
//! uses for group elements, so a power graph of a product group and a
//! product of power graphs can be compared vertex for vertex.
//!
//! Naming follows the source material rather than the usual literature:
//! "cartesian" here is the box product `□`, and "normal" is what most texts
//! call the strong product `⊠`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::ap::ApPair;
use crate::graph::{SimpleGraph, Vertex};
use crate::power::Generalization;

/// Largest product vertex count the constructors accept.
pub const DEFAULT_PRODUCT_CAP: usize = 10_000;

const PARALLEL_THRESHOLD: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("product would have {count} vertices; cap is {cap}")]
    SizeCap { count: usize, cap: usize },
    #[error("generalization covers {weights} vertices but the graph has {vertices}")]
    WeightMismatch { weights: usize, vertices: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Direct,
    Cartesian,
    Normal,
    /// Needs a [`Generalization`] on each factor.
    Generalized,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Direct,
        ProductKind::Cartesian,
        ProductKind::Normal,
        ProductKind::Generalized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Normal => "normal",
            ProductKind::Generalized => "generalized",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown product kind {s:?}"))
    }
}

/// The weight constructions that realize each classical product as a
/// generalized product. `Cartesian` needs different weights on the two
/// factors, hence the left/right split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalWeights {
    /// Arcs `(1,1)`, diagonal `(0,0)`.
    Direct,
    /// Arcs `(1,0)`, diagonal `(1,1)`.
    CartesianLeft,
    /// Arcs `(2,0)`, diagonal `(1,1)`.
    CartesianRight,
    /// Arcs `(1,0)`, diagonal `(1,1)`.
    Normal,
}

/// Builds the weight function of `kind` over `g`. Non-adjacent distinct
/// pairs get the sentinel `(0,0)`.
pub fn classical_weights(kind: ClassicalWeights, g: &SimpleGraph) -> Generalization {
    let (arc, diagonal) = match kind {
        ClassicalWeights::Direct => (ApPair::new(1, 1), ApPair::new(0, 0)),
        ClassicalWeights::CartesianLeft => (ApPair::new(1, 0), ApPair::new(1, 1)),
        ClassicalWeights::CartesianRight => (ApPair::new(2, 0), ApPair::new(1, 1)),
        ClassicalWeights::Normal => (ApPair::new(1, 0), ApPair::new(1, 1)),
    };
    Generalization::from_fn(g.vertex_count(), |u, v| {
        if u == v {
            diagonal
        } else if g.adjacent(u, v) {
            arc
        } else {
            ApPair::SENTINEL
        }
    })
}

/// Left and right weights that turn the generalized product into the
/// classical product `kind`. `None` for [`ProductKind::Generalized`].
pub fn classical_weight_pair(
    kind: ProductKind,
    a: &SimpleGraph,
    b: &SimpleGraph,
) -> Option<(Generalization, Generalization)> {
    let (left, right) = match kind {
        ProductKind::Direct => (ClassicalWeights::Direct, ClassicalWeights::Direct),
        ProductKind::Cartesian => (
            ClassicalWeights::CartesianLeft,
            ClassicalWeights::CartesianRight,
        ),
        ProductKind::Normal => (ClassicalWeights::Normal, ClassicalWeights::Normal),
        ProductKind::Generalized => return None,
    };
    Some((classical_weights(left, a), classical_weights(right, b)))
}

pub fn direct_product_graph(a: &SimpleGraph, b: &SimpleGraph) -> Result<SimpleGraph, ProductError> {
    build(a, b, |u, v| a.adjacent(u.0, v.0) && b.adjacent(u.1, v.1))
}

pub fn cartesian_product_graph(
    a: &SimpleGraph,
    b: &SimpleGraph,
) -> Result<SimpleGraph, ProductError> {
    build(a, b, |u, v| {
        (u.0 == v.0 && b.adjacent(u.1, v.1)) || (a.adjacent(u.0, v.0) && u.1 == v.1)
    })
}

pub fn normal_product_graph(a: &SimpleGraph, b: &SimpleGraph) -> Result<SimpleGraph, ProductError> {
    build(a, b, |u, v| {
        let left = u.0 == v.0 || a.adjacent(u.0, v.0);
        let right = u.1 == v.1 || b.adjacent(u.1, v.1);
        left && right
    })
}

/// Distinct `(u1, u2)` and `(v1, v2)` are adjacent iff
/// `AP(wa(u1,v1)) ∩ AP(wb(u2,v2))` or `AP(wa(v1,u1)) ∩ AP(wb(v2,u2))`
/// contains a positive integer. The factor graphs contribute only their
/// vertex counts and labels; adjacency comes entirely from the weights.
pub fn generalized_product_graph(
    a: &SimpleGraph,
    wa: &Generalization,
    b: &SimpleGraph,
    wb: &Generalization,
) -> Result<SimpleGraph, ProductError> {
    for (g, w) in [(a, wa), (b, wb)] {
        if g.vertex_count() != w.size() {
            return Err(ProductError::WeightMismatch {
                weights: w.size(),
                vertices: g.vertex_count(),
            });
        }
    }
    build(a, b, |u, v| {
        wa.get(u.0, v.0).intersects_positively(wb.get(u.1, v.1))
            || wa.get(v.0, u.0).intersects_positively(wb.get(v.1, u.1))
    })
}

/// Dispatch on `kind`; `weights` is only read for
/// [`ProductKind::Generalized`] and must then be present.
pub fn product_graph(
    kind: ProductKind,
    a: &SimpleGraph,
    b: &SimpleGraph,
    weights: Option<(&Generalization, &Generalization)>,
) -> Result<SimpleGraph, ProductError> {
    match kind {
        ProductKind::Direct => direct_product_graph(a, b),
        ProductKind::Cartesian => cartesian_product_graph(a, b),
        ProductKind::Normal => normal_product_graph(a, b),
        ProductKind::Generalized => {
            let (wa, wb) = weights.expect("generalized product needs weights on both factors");
            generalized_product_graph(a, wa, b, wb)
        }
    }
}

/// Builds the product on `V(a) × V(b)` from a symmetric adjacency rule on
/// distinct coordinate pairs. Rows are computed in parallel for products
/// of at least [`PARALLEL_THRESHOLD`] vertices.
fn build<F>(a: &SimpleGraph, b: &SimpleGraph, adjacent: F) -> Result<SimpleGraph, ProductError>
where
    F: Fn((Vertex, Vertex), (Vertex, Vertex)) -> bool + Sync,
{
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let count = na.saturating_mul(nb);
    if count > DEFAULT_PRODUCT_CAP {
        return Err(ProductError::SizeCap {
            count,
            cap: DEFAULT_PRODUCT_CAP,
        });
    }
    let labels = a
        .labels()
        .iter()
        .flat_map(|la| b.labels().iter().map(move |lb| format!("({la},{lb})")))
        .collect();
    let split = |x: Vertex| (x / nb, x % nb);
    let row = |x: Vertex| -> Vec<Vertex> {
        (x + 1..count)
            .filter(|&y| adjacent(split(x), split(y)))
            .collect()
    };
    let rows: Vec<Vec<Vertex>> = if count >= PARALLEL_THRESHOLD {
        (0..count).into_par_iter().map(row).collect()
    } else {
        (0..count).map(row).collect()
    };
    let mut graph = SimpleGraph::new(labels);
    for (x, row) in rows.into_iter().enumerate() {
        for y in row {
            graph.insert_edge(x, y);
        }
    }
    Ok(graph)
}
