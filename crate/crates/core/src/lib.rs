//! Power graphs of finite groups and products of graphs.
//!
//! The power graph `P(G)` of a finite group has the elements of `G` as
//! vertices, with two distinct elements adjacent when one is a positive
//! power of the other. This crate builds power graphs from Cayley tables,
//! implements the direct, cartesian and normal products of graphs, and the
//! *generalized product*, whose adjacency is decided by whether two
//! arithmetic progressions attached to the coordinate pairs share a positive
//! integer. With the exponent weights `W(a, b) = (t, o(a))` the generalized
//! product of `P(G1)` and `P(G2)` is exactly `P(G1 × G2)`.
//!
//! ```
//! use powergraph::{generalized_product_graph, graphs_equal_labeled, parse_group, PowerGraphBundle};
//!
//! let c2 = parse_group("C2").unwrap();
//! let c3 = parse_group("C3").unwrap();
//! let (p2, p3) = (PowerGraphBundle::new(&c2), PowerGraphBundle::new(&c3));
//! let product = generalized_product_graph(&p2.graph, &p2.weights, &p3.graph, &p3.weights).unwrap();
//!
//! let c2xc3 = c2.direct_product(&c3).unwrap();
//! assert!(graphs_equal_labeled(&product, &PowerGraphBundle::new(&c2xc3).graph));
//! assert_eq!(product.edge_count(), 13);
//! ```
//!
//! The `book/` directory at the repository root walks through the same
//! material chapter by chapter; its code blocks are compiled as doctests of
//! this crate.

pub mod ap;
pub mod graph;
pub mod group;
pub mod groupspec;
pub mod power;
pub mod product;
pub mod verify;

pub use ap::ApPair;
pub use graph::{are_isomorphic, graphs_equal_labeled, ExportFormat, GraphError, SimpleGraph};
pub use group::{Element, FiniteGroup, GroupError};
pub use groupspec::{parse_group, GroupSpec, SpecError};
pub use power::{
    exponent_set_window, power_graph, power_weights, Generalization, PowerGraphBundle,
};
pub use product::{
    cartesian_product_graph, classical_weights, direct_product_graph, generalized_product_graph,
    normal_product_graph, ClassicalWeights, ProductError, ProductKind,
};
pub use verify::{verify_all, Claim, SweepConfig, VerificationReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/power-graphs.md")]
    mod power_graphs {}
    #[doc = include_str!("../../../book/src/progressions.md")]
    mod progressions {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/generalized-product.md")]
    mod generalized_product {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
