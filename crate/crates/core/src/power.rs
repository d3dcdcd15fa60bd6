//! Power graphs of finite groups and their exponent weights.
//!
//! For elements `a, b` the weight `W(a, b)` is `(t, o(a))` where `t` is the
//! least positive exponent with `a^t = b`, or the sentinel `(0, 0)` when `b`
//! is not a power of `a`. The set of all exponents `m ≥ 1` with `a^m = b`
//! is then exactly the progression `AP(t, o(a))`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ap::ApPair;
use crate::graph::{SimpleGraph, Vertex};
use crate::group::{Element, FiniteGroup};

/// Weight function on the ordered vertex pairs of a graph, diagonal
/// included. Pairs outside the intended domain hold [`ApPair::SENTINEL`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generalization {
    size: usize,
    table: Vec<ApPair>,
}

impl Generalization {
    pub fn from_fn(size: usize, mut weight: impl FnMut(Vertex, Vertex) -> ApPair) -> Self {
        let mut table = Vec::with_capacity(size * size);
        for u in 0..size {
            for v in 0..size {
                table.push(weight(u, v));
            }
        }
        Generalization { size, table }
    }

    /// Every pair mapped to the sentinel.
    pub fn sentinel(size: usize) -> Self {
        Generalization {
            size,
            table: vec![ApPair::SENTINEL; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> ApPair {
        assert!(u < self.size && v < self.size, "vertex out of range");
        self.table[u * self.size + v]
    }

    /// Debug dump, one `u v : (t,d)` line per ordered pair.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for u in 0..self.size {
            for v in 0..self.size {
                let _ = writeln!(out, "{u} {v} : {}", self.get(u, v));
            }
        }
        out
    }
}

/// A group together with its power graph and exponent weights.
#[derive(Debug, Clone)]
pub struct PowerGraphBundle<'g> {
    pub group: &'g FiniteGroup,
    pub graph: SimpleGraph,
    pub weights: Generalization,
}

impl<'g> PowerGraphBundle<'g> {
    /// The graph is read off the weights: distinct `a, b` are adjacent iff
    /// either direction carries a non-sentinel weight.
    pub fn new(group: &'g FiniteGroup) -> Self {
        let weights = power_weights(group);
        let mut graph = SimpleGraph::new(group.labels().to_vec());
        let n = group.order();
        for a in 0..n {
            for b in a + 1..n {
                if !weights.get(a, b).is_sentinel() || !weights.get(b, a).is_sentinel() {
                    graph.insert_edge(a, b);
                }
            }
        }
        PowerGraphBundle {
            group,
            graph,
            weights,
        }
    }
}

/// The undirected power graph: distinct `a, b` adjacent iff one is a
/// positive power of the other. Vertices carry the group's element labels.
pub fn power_graph(group: &FiniteGroup) -> SimpleGraph {
    PowerGraphBundle::new(group).graph
}

/// `W(a, b) = (t, o(a))` for the least `t ≥ 1` with `a^t = b`, else `(0, 0)`.
pub fn power_weights(group: &FiniteGroup) -> Generalization {
    let n = group.order();
    let mut table = vec![ApPair::SENTINEL; n * n];
    for a in group.elements() {
        let order = group.element_order(a) as u64;
        // Walk a, a², …, a^o(a) once; the first visit to b is the least exponent.
        let mut x = a;
        for t in 1..=order {
            table[a * n + x] = ApPair::new(t, order);
            x = group.multiply(x, a);
        }
    }
    Generalization { size: n, table }
}

/// `{m ∈ [1, bound] : a^m = b}` by direct iteration.
///
/// Panics if `bound > 10·o(a)`.
pub fn exponent_set_window(
    group: &FiniteGroup,
    a: Element,
    b: Element,
    bound: u64,
) -> BTreeSet<u64> {
    assert!(
        bound <= 10 * group.element_order(a) as u64,
        "window bound {bound} exceeds 10·o(a)"
    );
    let mut out = BTreeSet::new();
    let mut x = a;
    for m in 1..=bound {
        if x == b {
            out.insert(m);
        }
        x = group.multiply(x, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graphs_equal_labeled;

    /// Definition-direct builder: a ~ b iff some a^m = b or b^m = a, found by
    /// iterating the table up to |G| steps.
    fn power_graph_by_definition(g: &FiniteGroup) -> SimpleGraph {
        let n = g.order();
        let reaches = |a: usize, b: usize| {
            let mut x = a;
            for _ in 0..n {
                if x == b {
                    return true;
                }
                x = g.multiply(x, a);
            }
            false
        };
        let mut graph = SimpleGraph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if reaches(a, b) || reaches(b, a) {
                    graph.insert_edge(a, b);
                }
            }
        }
        graph
    }

    fn family() -> Vec<FiniteGroup> {
        let mut gs: Vec<FiniteGroup> = (1..=12).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
        gs.extend((3..=5).map(|n| FiniteGroup::dihedral(n).unwrap()));
        gs.extend((3..=4).map(|n| FiniteGroup::symmetric(n).unwrap()));
        gs.push(FiniteGroup::quaternion8());
        let c2 = FiniteGroup::cyclic(2).unwrap();
        gs.push(c2.direct_product(&c2).unwrap());
        gs.push(c2.direct_product(&FiniteGroup::cyclic(4).unwrap()).unwrap());
        gs
    }

    #[test]
    fn small_examples() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let klein = power_graph(&c2.direct_product(&c2).unwrap());
        assert_eq!(klein.edge_count(), 3);
        assert!(klein.edges().all(|(u, _)| u == 0));

        let trivial = power_graph(&FiniteGroup::cyclic(1).unwrap());
        assert_eq!((trivial.vertex_count(), trivial.edge_count()), (1, 0));

        let z6 = power_graph(&FiniteGroup::cyclic(6).unwrap());
        assert_eq!(z6.edge_count(), 13);
        let missing: Vec<_> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !z6.adjacent(u, v))
            .collect();
        assert_eq!(missing, vec![(2, 3), (3, 4)]);
    }

    #[test]
    fn weight_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(power_weights(&z4).get(1, 3), ApPair::new(3, 4));
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let w = power_weights(&z6);
        assert_eq!(w.get(2, 3), ApPair::SENTINEL);
        for a in z6.elements() {
            assert_eq!(w.get(a, a), ApPair::new(1, z6.element_order(a) as u64));
        }
    }

    #[test]
    fn window_examples() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(
            exponent_set_window(&z2, 0, 0, 6),
            (1..=6).collect::<BTreeSet<_>>()
        );
        let z6 = FiniteGroup::cyclic(6).unwrap();
        // 2m ≡ 4 (mod 6) iff m ≡ 2 (mod 3); 2m ≡ 2 iff m ≡ 1.
        assert_eq!(exponent_set_window(&z6, 2, 4, 9), BTreeSet::from([2, 5, 8]));
        assert_eq!(exponent_set_window(&z6, 2, 2, 9), BTreeSet::from([1, 4, 7]));
        assert!(exponent_set_window(&z6, 2, 3, 9).is_empty());
    }

    #[test]
    #[should_panic(expected = "exceeds 10·o(a)")]
    fn window_cap() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        exponent_set_window(&z6, 2, 4, 31);
    }

    #[test]
    fn bundle_invariants_and_oracle() {
        for g in family() {
            let bundle = PowerGraphBundle::new(&g);
            let e = g.identity();
            assert!(
                graphs_equal_labeled(&bundle.graph, &power_graph_by_definition(&g)),
                "{}",
                g.name()
            );
            for a in g.elements() {
                assert_eq!(
                    bundle.weights.get(a, a),
                    ApPair::new(1, g.element_order(a) as u64)
                );
                if a != e {
                    assert!(bundle.weights.get(e, a).is_sentinel());
                }
                for b in g.elements().filter(|&b| b != a) {
                    let weighted = !bundle.weights.get(a, b).is_sentinel()
                        || !bundle.weights.get(b, a).is_sentinel();
                    assert_eq!(bundle.graph.adjacent(a, b), weighted);
                }
            }
            if g.order() >= 2 {
                assert_eq!(bundle.graph.degree(e), g.order() - 1);
            }
        }
    }

    #[test]
    fn adjacency_is_cyclic_subgroup_containment() {
        for g in family() {
            let subgroups: Vec<BTreeSet<usize>> = g
                .elements()
                .map(|a| g.cyclic_subgroup(a).into_iter().collect())
                .collect();
            let pg = power_graph(&g);
            for a in g.elements() {
                for b in g.elements().filter(|&b| b != a) {
                    let nested = subgroups[a].is_subset(&subgroups[b])
                        || subgroups[b].is_subset(&subgroups[a]);
                    assert_eq!(pg.adjacent(a, b), nested, "{} {a} {b}", g.name());
                }
            }
        }
    }

    #[test]
    fn exponent_sets_are_progressions() {
        for g in family() {
            let w = power_weights(&g);
            for a in g.elements() {
                let window = 3 * g.element_order(a) as u64;
                for b in g.elements() {
                    let brute = exponent_set_window(&g, a, b, window);
                    let from_weight: BTreeSet<u64> =
                        (1..=window).filter(|&m| w.get(a, b).contains(m)).collect();
                    assert_eq!(brute, from_weight, "{} {a} {b}", g.name());
                    if let Some(t) = g.smallest_exponent(a, b) {
                        let o = g.element_order(a) as u64;
                        let t = t as u64;
                        assert_eq!(brute, BTreeSet::from([t, t + o, t + 2 * o]));
                    }
                }
            }
        }
    }

    #[test]
    fn prime_cyclic_groups_are_complete() {
        for p in [2, 3, 5, 7, 11] {
            let pg = power_graph(&FiniteGroup::cyclic(p).unwrap());
            assert_eq!(pg.edge_count(), p * (p - 1) / 2);
        }
    }

    #[test]
    fn dump_format() {
        let w = power_weights(&FiniteGroup::cyclic(2).unwrap());
        assert_eq!(
            w.dump(),
            "0 0 : (1,1)\n0 1 : (0,0)\n1 0 : (2,2)\n1 1 : (1,2)\n"
        );
    }
}
