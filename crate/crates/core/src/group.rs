//! Finite groups given by their full multiplication (Cayley) table.
//!
//! Elements are dense indices `0..n`. Every group, whether built in or
//! loaded from a file, is a flat `n × n` table plus a detected identity and
//! the eagerly computed order of every element.

use std::fmt;
use std::path::Path;

use itertools::Itertools;
use thiserror::Error;

/// Element of a [`FiniteGroup`], addressed by its row in the Cayley table.
pub type Element = usize;

/// Largest group order any constructor will produce.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Tables up to this order get the full `n³` associativity scan; larger ones
/// use Light's test over a generating set.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty Cayley table")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("value at ({row}, {col}) repeats in its {line}; table is not a Latin square")]
    NotLatinSquare {
        row: usize,
        col: usize,
        line: &'static str,
    },
    #[error("({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid parameter {n} for {family}")]
    InvalidOrder { family: &'static str, n: usize },
    #[error("group order {order} exceeds cap {cap}")]
    OrderOverflow { order: usize, cap: usize },
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

/// A finite group stored as a validated Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Element>,
    identity: Element,
    element_orders: Vec<usize>,
    name: String,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates `table` (row `i`, column `j` holds `i·j`) and builds a group.
    ///
    /// Checks run in a fixed order (shape, closure, identity, Latin square,
    /// associativity) and the error names the first violating cell.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(GroupError::OrderOverflow {
                order: n,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let group = Self::validated(flat, n)?;
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(group.with_names(format!("cayley({n})"), labels))
    }

    fn validated(flat: Vec<usize>, n: usize) -> Result<Self, GroupError> {
        if let Some(pos) = flat.iter().position(|&v| v >= n) {
            return Err(GroupError::NotClosed {
                row: pos / n,
                col: pos % n,
                value: flat[pos],
                order: n,
            });
        }
        let at = |i: usize, j: usize| flat[i * n + j];
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or(GroupError::NoIdentity)?;
        check_latin(&flat, n)?;
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            check_associative_exhaustive(&flat, n)?;
        } else {
            check_associative_light(&flat, n)?;
        }
        Ok(Self::from_trusted(flat, n, identity))
    }

    /// Builds from a table known to be a group (built-in families).
    fn from_trusted(table: Vec<Element>, order: usize, identity: Element) -> Self {
        let mut group = FiniteGroup {
            order,
            table,
            identity,
            element_orders: Vec::new(),
            name: String::new(),
            labels: Vec::new(),
        };
        group.element_orders = (0..order).map(|a| group.order_by_iteration(a)).collect();
        group
    }

    fn with_names(mut self, name: String, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.name = name;
        self.labels = labels;
        self
    }

    /// Parses the text Cayley-table format: the order `n` on the first
    /// non-comment line, then `n` rows of `n` whitespace-separated indices.
    /// Lines starting with `#` are skipped.
    pub fn parse_cayley(text: &str) -> Result<Self, GroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(GroupError::Parse {
            line: 0,
            message: "missing order line".into(),
        })?;
        let n: usize = header.parse().map_err(|_| GroupError::Parse {
            line,
            message: format!("expected group order, found {header:?}"),
        })?;
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        let mut rows = Vec::with_capacity(n);
        for (line, text) in lines {
            if rows.len() == n {
                return Err(GroupError::Parse {
                    line,
                    message: format!("more than {n} table rows"),
                });
            }
            let row = text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| GroupError::Parse {
                        line,
                        message: format!("bad element index {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(GroupError::Parse {
                line: text.lines().count(),
                message: format!("expected {n} table rows, found {}", rows.len()),
            });
        }
        Self::from_cayley_table(&rows)
    }

    pub fn load_cayley(path: impl AsRef<Path>) -> Result<Self, GroupError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let group = Self::parse_cayley(&text)?;
        let name = format!("cayley:{}", path.display());
        let labels = group.labels.clone();
        Ok(group.with_names(name, labels))
    }

    /// Serializes to the text format read by [`FiniteGroup::parse_cayley`].
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            out.push_str(&row.iter().join(" "));
            out.push('\n');
        }
        out
    }

    /// The cyclic group `Z_n`, written additively.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder {
                family: "cyclic",
                n,
            });
        }
        check_cap(n, DEFAULT_ORDER_CAP)?;
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(Self::from_trusted(table, n, 0).with_names(format!("C{n}"), labels))
    }

    /// The dihedral group of order `2n`.
    ///
    /// Indices `0..n` are the rotations `r^k` and `n..2n` the reflections
    /// `s·r^k`, with `r·s = s·r⁻¹`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidOrder {
                family: "dihedral",
                n,
            });
        }
        check_cap(2 * n, DEFAULT_ORDER_CAP)?;
        let mul = |x: usize, y: usize| -> usize {
            let (xs, xk) = (x >= n, x % n);
            let (ys, yk) = (y >= n, y % n);
            // s^a r^b · s^c r^d = s^(a+c) r^(±b + d), sign flipped when c = 1.
            let k = if ys { (n - xk + yk) % n } else { (xk + yk) % n };
            if xs ^ ys {
                n + k
            } else {
                k
            }
        };
        let order = 2 * n;
        let table = (0..order)
            .flat_map(|i| (0..order).map(move |j| mul(i, j)))
            .collect();
        let labels = (0..n)
            .map(|k| format!("r{k}"))
            .chain((0..n).map(|k| format!("s{k}")))
            .collect();
        Ok(Self::from_trusted(table, order, 0).with_names(format!("D{n}"), labels))
    }

    /// The symmetric group on `n ≤ 5` points. Elements are permutations in
    /// lexicographic order of their one-line notation (identity first);
    /// the product `p·q` applies `q` first.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if !(1..=5).contains(&n) {
            return Err(GroupError::InvalidOrder {
                family: "symmetric",
                n,
            });
        }
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let order = perms.len();
        let mut table = Vec::with_capacity(order * order);
        for p in &perms {
            for q in &perms {
                let composed: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                table.push(index(&composed));
            }
        }
        let labels = perms.iter().map(|p| p.iter().join("")).collect();
        Ok(Self::from_trusted(table, order, 0).with_names(format!("S{n}"), labels))
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`, indexed in that order.
    pub fn quaternion8() -> Self {
        // unit * unit -> (sign flip, unit) for units 1, i, j, k.
        const UNIT_MUL: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mul = |x: usize, y: usize| {
            let (flip, unit) = UNIT_MUL[x / 2][y / 2];
            let negative = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
            2 * unit + usize::from(negative)
        };
        let table = (0..8)
            .flat_map(|i| (0..8).map(move |j| mul(i, j)))
            .collect();
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .map(String::from)
            .to_vec();
        Self::from_trusted(table, 8, 0).with_names("Q8".into(), labels)
    }

    /// `self × other` with the default order cap.
    ///
    /// The pair `(i, j)` is element `i·|other| + j`; see [`Self::encode_pair`].
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self, GroupError> {
        self.direct_product_capped(other, DEFAULT_ORDER_CAP)
    }

    pub fn direct_product_capped(
        &self,
        other: &FiniteGroup,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let (n1, n2) = (self.order, other.order);
        let order = n1.saturating_mul(n2);
        check_cap(order, cap)?;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (x1, x2) = (x / n2, x % n2);
            for y in 0..order {
                let (y1, y2) = (y / n2, y % n2);
                table.push(self.multiply(x1, y1) * n2 + other.multiply(x2, y2));
            }
        }
        let identity = self.identity * n2 + other.identity;
        let labels = self
            .labels
            .iter()
            .cartesian_product(&other.labels)
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        let name = format!("{}x{}", self.name, other.name);
        Ok(Self::from_trusted(table, order, identity).with_names(name, labels))
    }

    /// Index of the pair `(left, right)` in a product whose right factor has
    /// `right_order` elements.
    pub fn encode_pair(left: Element, right: Element, right_order: usize) -> Element {
        left * right_order + right
    }

    pub fn decode_pair(element: Element, right_order: usize) -> (Element, Element) {
        (element / right_order, element % right_order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn check_element(&self, a: Element) -> Result<Element, GroupError> {
        if a < self.order {
            Ok(a)
        } else {
            Err(GroupError::ElementOutOfRange {
                element: a,
                order: self.order,
            })
        }
    }

    /// `a·b`. Panics if either index is out of range.
    #[inline]
    pub fn multiply(&self, a: Element, b: Element) -> Element {
        assert!(a < self.order && b < self.order, "element out of range");
        self.table[a * self.order + b]
    }

    /// Least `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: Element) -> usize {
        self.element_orders[a]
    }

    fn order_by_iteration(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.multiply(x, a);
            k += 1;
        }
        k
    }

    /// `a^k`, with `a^0 = e`. The exponent is reduced modulo `o(a)` first.
    pub fn power(&self, a: Element, k: u64) -> Element {
        let reduced = k % self.element_orders[a] as u64;
        (0..reduced).fold(self.identity, |x, _| self.multiply(x, a))
    }

    /// Least `t ≥ 1` with `a^t = b`, or `None` when `b ∉ ⟨a⟩`.
    pub fn smallest_exponent(&self, a: Element, b: Element) -> Option<usize> {
        assert!(b < self.order, "element out of range");
        let mut x = a;
        for t in 1..=self.element_orders[a] {
            if x == b {
                return Some(t);
            }
            x = self.multiply(x, a);
        }
        None
    }

    /// The cyclic subgroup `⟨a⟩` as a list `[a, a², …, e]`.
    pub fn cyclic_subgroup(&self, a: Element) -> Vec<Element> {
        std::iter::successors(Some(a), |&x| Some(self.multiply(x, a)))
            .take(self.element_orders[a])
            .collect()
    }

    /// The raw table as rows, for serialization and testing.
    pub fn table_rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }
}

fn check_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::OrderOverflow { order, cap })
    } else {
        Ok(())
    }
}

fn check_latin(flat: &[usize], n: usize) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; n];
    for row in 0..n {
        for col in 0..n {
            let v = flat[row * n + col];
            if seen[v] == row {
                return Err(GroupError::NotLatinSquare {
                    row,
                    col,
                    line: "row",
                });
            }
            seen[v] = row;
        }
    }
    seen.fill(usize::MAX);
    for col in 0..n {
        for row in 0..n {
            let v = flat[row * n + col];
            if seen[v] == col {
                return Err(GroupError::NotLatinSquare {
                    row,
                    col,
                    line: "column",
                });
            }
            seen[v] = col;
        }
    }
    Ok(())
}

fn check_associative_exhaustive(flat: &[usize], n: usize) -> Result<(), GroupError> {
    let at = |i: usize, j: usize| flat[i * n + j];
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Light's associativity test. The set of `g` with `(x·g)·y = x·(g·y)` for
/// all `x, y` is closed under the operation, so checking a generating set
/// suffices. Generators are picked greedily until their right-multiplication
/// closure covers the table.
fn check_associative_light(flat: &[usize], n: usize) -> Result<(), GroupError> {
    let at = |i: usize, j: usize| flat[i * n + j];
    let mut generators: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    while let Some(next) = reached.iter().position(|r| !r) {
        generators.push(next);
        let mut stack: Vec<usize> = generators.clone();
        for &g in &generators {
            reached[g] = true;
        }
        while let Some(x) = stack.pop() {
            for &g in &generators {
                let y = at(x, g);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    for &g in &generators {
        for a in 0..n {
            let ag = at(a, g);
            for c in 0..n {
                if at(ag, c) != at(a, at(g, c)) {
                    return Err(GroupError::NotAssociative { a, b: g, c });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group_axioms(g: &FiniteGroup) {
        let rows = g.table_rows();
        let rebuilt = FiniteGroup::from_cayley_table(&rows).expect("valid table");
        assert_eq!(rebuilt.identity(), g.identity());
        assert_eq!(rebuilt.element_orders(), g.element_orders());
        for a in g.elements() {
            assert_eq!(
                g.order() % g.element_order(a),
                0,
                "Lagrange in {}",
                g.name()
            );
        }
        assert_eq!(g.element_order(g.identity()), 1);
    }

    fn sorted_orders(g: &FiniteGroup) -> Vec<usize> {
        let mut v = g.element_orders().to_vec();
        v.sort_unstable();
        v
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn identity_need_not_be_zero() {
        // Z2 with the identity stored at index 1.
        let g = FiniteGroup::from_cayley_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.element_orders(), &[2, 1]);
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatinSquare {
                row: 1,
                col: 1,
                line: "row"
            })
        );
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::NotClosed {
                row: 0,
                col: 1,
                value: 2,
                order: 2
            })
        );
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![1, 0], vec![1, 0]]),
            Err(GroupError::NoIdentity)
        );
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert_eq!(
            FiniteGroup::from_cayley_table(&[]),
            Err(GroupError::EmptyTable)
        );
    }

    #[test]
    fn non_associative_loop_rejected() {
        // The smallest non-associative loop (order 5); Latin square with identity 0.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&table),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn light_test_agrees_with_exhaustive_scan() {
        let table = [
            0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0,
        ];
        assert!(check_associative_light(&table, 5).is_err());
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let flat: Vec<usize> = s4.table_rows().concat();
        assert!(check_associative_light(&flat, 24).is_ok());
        assert!(check_associative_exhaustive(&flat, 24).is_ok());
    }

    #[test]
    fn large_table_uses_light_test() {
        let s5 = FiniteGroup::symmetric(5).unwrap();
        assert!(FiniteGroup::from_cayley_table(&s5.table_rows()).is_ok());
        // Product of the order-5 non-associative loop with C14: a loop of
        // order 70, past the exhaustive-scan limit.
        let lp = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let m = 14;
        let rows: Vec<Vec<usize>> = (0..5 * m)
            .map(|x| {
                (0..5 * m)
                    .map(|y| lp[x / m][y / m] * m + (x % m + y % m) % m)
                    .collect()
            })
            .collect();
        assert!(matches!(
            FiniteGroup::from_cayley_table(&rows),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn cyclic_family() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::cyclic(2).unwrap().element_order(1), 2);
        assert_eq!(
            FiniteGroup::cyclic(6).unwrap().element_orders(),
            &[1, 6, 3, 2, 3, 6]
        );
        assert_eq!(
            FiniteGroup::cyclic(0),
            Err(GroupError::InvalidOrder {
                family: "cyclic",
                n: 0
            })
        );
    }

    #[test]
    fn other_families() {
        assert_eq!(FiniteGroup::dihedral(3).unwrap().order(), 6);
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(sorted_orders(&s3), vec![1, 2, 2, 2, 3, 3]);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(FiniteGroup::symmetric(0).is_err());
        assert!(FiniteGroup::dihedral(0).is_err());
    }

    #[test]
    fn built_ins_satisfy_axioms() {
        let mut groups: Vec<FiniteGroup> =
            (1..=12).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
        groups.extend((1..=8).map(|n| FiniteGroup::dihedral(n).unwrap()));
        groups.extend((1..=4).map(|n| FiniteGroup::symmetric(n).unwrap()));
        groups.push(FiniteGroup::quaternion8());
        let c2 = FiniteGroup::cyclic(2).unwrap();
        groups.push(c2.direct_product(&c2).unwrap());
        groups.push(
            FiniteGroup::dihedral(4)
                .unwrap()
                .direct_product(&c2)
                .unwrap(),
        );
        for g in &groups {
            assert_group_axioms(g);
        }
    }

    #[test]
    fn dihedral_relations() {
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let (r, s) = (1, 5);
        assert_eq!(d5.element_order(r), 5);
        assert_eq!(d5.element_order(s), 2);
        // r·s = s·r⁻¹
        assert_eq!(d5.multiply(r, s), d5.multiply(s, d5.power(r, 4)));
        assert_eq!(d5.label(s), "s0");
    }

    #[test]
    fn direct_products() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c2c3 = c2.direct_product(&c3).unwrap();
        assert_eq!(c2c3.order(), 6);
        assert_eq!(c2c3.name(), "C2xC3");
        assert_eq!(
            sorted_orders(&c2c3),
            sorted_orders(&FiniteGroup::cyclic(6).unwrap())
        );
        let klein = c2.direct_product(&c2).unwrap();
        let one_one = FiniteGroup::encode_pair(1, 1, 2);
        assert_eq!(klein.element_order(one_one), 2);
        assert_eq!(klein.label(one_one), "(1,1)");
        let big = FiniteGroup::cyclic(200).unwrap();
        assert_eq!(
            big.direct_product(&big).unwrap_err(),
            GroupError::OrderOverflow {
                order: 40_000,
                cap: DEFAULT_ORDER_CAP
            }
        );
    }

    #[test]
    fn pair_encoding_round_trips() {
        for n2 in 1..7 {
            for i in 0..5 {
                for j in 0..n2 {
                    let x = FiniteGroup::encode_pair(i, j, n2);
                    assert_eq!(FiniteGroup::decode_pair(x, n2), (i, j));
                }
            }
        }
    }

    #[test]
    fn orders_powers_exponents() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.element_order(z6.identity()), 1);
        assert_eq!(z6.element_order(2), 3);
        assert_eq!(z6.element_order(5), 6);
        assert_eq!(z6.power(3, 0), 0);
        assert_eq!(z6.power(2, 2), 4);
        assert_eq!(z6.power(5, 6), 0);
        assert_eq!(z6.power(5, 6_000_000_001), 5);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.smallest_exponent(1, 3), Some(3));
        assert_eq!(z4.smallest_exponent(2, 2), Some(1));
        assert_eq!(z6.smallest_exponent(2, 3), None);
        assert_eq!(z6.cyclic_subgroup(2), vec![2, 4, 0]);
    }

    #[test]
    fn cayley_text_round_trip_and_comments() {
        let q8 = FiniteGroup::quaternion8();
        let text = format!("# quaternions\n{}", q8.to_cayley_text());
        let parsed = FiniteGroup::parse_cayley(&text).unwrap();
        assert_eq!(parsed.table_rows(), q8.table_rows());
        assert!(matches!(
            FiniteGroup::parse_cayley("2\n0 1\n"),
            Err(GroupError::Parse { .. })
        ));
        assert!(matches!(
            FiniteGroup::parse_cayley("x\n"),
            Err(GroupError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::parse_cayley("1\n0\n0\n"),
            Err(GroupError::Parse { line: 3, .. })
        ));
    }
}
