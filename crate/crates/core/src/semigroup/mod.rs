//! Finite commutative semigroups with a two-sided zero, presented by their
//! multiplication tables.
//!
//! The central type is [`CayleySemigroup`]: a validated multiplication table
//! over elements `0..order` in which element `0` is the zero (`0 * x = 0` for
//! every `x`).  Tables loaded from text may declare the zero anywhere; the
//! loader re-indexes so the zero always lands at element `0`, which keeps
//! every downstream algorithm free of a "where is zero" parameter.
//!
//! Besides validated dense tables, the module provides the family of
//! power-set semigroups: the subsets of an `n`-element set under
//! intersection, encoded so that element `i` *is* the bitmask `i` and the
//! product is bitwise AND.  Those are represented implicitly — a dense table
//! of order `2^20` would need a terabyte — but answer `product(i, j)` through
//! the same interface.

pub mod text;

use crate::bits::Bitset;
use thiserror::Error;

/// Largest order accepted for dense multiplication tables.
pub const MAX_TABLE_ORDER: usize = 4096;

/// Largest ground-set size accepted by [`powerset_semigroup`].
pub const MAX_POWERSET_N: usize = 20;

/// Power-set semigroups carry subset labels only up to this ground-set size;
/// beyond it (order > 4096) elements fall back to index labels and the
/// semigroup cannot be written in the table text format.
pub const MAX_LABELED_POWERSET_N: usize = 12;

/// A set of semigroup elements, stored as a bitmask over element indices.
pub type ElementSet = Bitset;

/// One violation of the semigroup axioms, with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("table is empty")]
    EmptyTable,
    #[error("table has order {order}, above the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry at ({i}, {j}) is {value}, outside 0..{order}")]
    BadIndex {
        i: usize,
        j: usize,
        value: usize,
        order: usize,
    },
    #[error("declared zero index {zero_index} is outside 0..{order}")]
    BadZeroIndex { zero_index: usize, order: usize },
    #[error("product of {i} and {j} depends on the order of the factors")]
    NotCommutative { i: usize, j: usize },
    #[error("({i}*{j})*{k} differs from {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("zero does not absorb element {i}")]
    ZeroNotAbsorbing { i: usize },
}

/// Error from [`powerset_semigroup`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ground-set size {n} is outside 1..={max}")]
pub struct PowersetError {
    pub n: usize,
    pub max: usize,
}

/// Error from [`CayleySemigroup::fold_product`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("product of an empty list of elements is undefined")]
    Empty,
    #[error("element {element} is outside 0..{order}")]
    BadElement { element: usize, order: usize },
}

/// How products are computed.
#[derive(Clone)]
enum ProductRule {
    /// Row-major `order * order` table of element indices.
    Dense(Vec<u32>),
    /// Element `i` is the bitmask `i`; the product is bitwise AND.
    BitAnd,
}

/// A finite commutative semigroup with zero, queryable by `product(i, j)`.
///
/// Invariants (enforced by the constructors):
/// * element `0` is a two-sided zero;
/// * the operation is commutative and associative;
/// * if `identity_index()` is `Some(e)`, then `e * x = x` for all `x`.
#[derive(Clone)]
pub struct CayleySemigroup {
    order: usize,
    rule: ProductRule,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
}

impl CayleySemigroup {
    /// Checks every semigroup axiom on `table` and, on success, returns the
    /// semigroup re-indexed so the declared zero sits at element `0`.
    ///
    /// All violations are reported, each with the indices that witness it —
    /// a rejected table comes back with the full list, not just the first
    /// failure.  Witnesses refer to the table as given (pre-re-indexing).
    /// `labels`, when provided, must have one entry per element and are
    /// carried through the re-indexing.
    pub fn validate(
        table: &[Vec<usize>],
        zero_index: usize,
        labels: Option<Vec<String>>,
    ) -> Result<CayleySemigroup, Vec<ValidationError>> {
        let order = table.len();
        let mut errors = Vec::new();
        if order == 0 {
            return Err(vec![ValidationError::EmptyTable]);
        }
        if order > MAX_TABLE_ORDER {
            return Err(vec![ValidationError::OrderTooLarge {
                order,
                max: MAX_TABLE_ORDER,
            }]);
        }
        if zero_index >= order {
            errors.push(ValidationError::BadZeroIndex { zero_index, order });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                errors.push(ValidationError::NotSquare {
                    row: i,
                    expected: order,
                    found: row.len(),
                });
                continue;
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= order {
                    errors.push(ValidationError::BadIndex { i, j, value, order });
                }
            }
        }
        // Shape problems make the algebraic checks meaningless; stop here.
        if !errors.is_empty() {
            return Err(errors);
        }

        for i in 0..order {
            for j in (i + 1)..order {
                if table[i][j] != table[j][i] {
                    errors.push(ValidationError::NotCommutative { i, j });
                }
            }
        }
        for i in 0..order {
            if table[zero_index][i] != zero_index || table[i][zero_index] != zero_index {
                errors.push(ValidationError::ZeroNotAbsorbing { i });
            }
        }
        'triples: for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        errors.push(ValidationError::NotAssociative { i, j, k });
                        if errors.len() >= 1000 {
                            // A garbage table can fail on most of its
                            // order^3 triples; cap the list at something a
                            // human can still scroll through.
                            break 'triples;
                        }
                    }
                }
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }

        // Re-index so the zero lands at element 0: swap 0 <-> zero_index.
        let perm: Vec<usize> = (0..order)
            .map(|i| {
                if i == 0 {
                    zero_index
                } else if i == zero_index {
                    0
                } else {
                    i
                }
            })
            .collect();
        let mut dense = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let product = table[perm[i]][perm[j]];
                dense[i * order + j] = perm[product] as u32;
            }
        }
        let labels = labels.map(|input| {
            assert_eq!(input.len(), order, "one label per element");
            perm.iter().map(|&p| input[p].clone()).collect()
        });
        let mut s = CayleySemigroup {
            order,
            rule: ProductRule::Dense(dense),
            identity: None,
            labels,
        };
        s.identity = s.detect_identity();
        Ok(s)
    }

    /// Wraps a table without checking the semigroup axioms.
    ///
    /// The table must be square with in-range entries and is taken as-is:
    /// element `0` is *treated* as the zero whether or not it absorbs.  This
    /// exists for diagnostics — running the equation suite against a
    /// deliberately corrupted table, say — and must not be used where a
    /// validated semigroup is expected.
    pub fn from_raw_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> CayleySemigroup {
        let order = table.len();
        assert!(order > 0 && order <= MAX_TABLE_ORDER);
        let mut dense = vec![0u32; order * order];
        for (i, row) in table.iter().enumerate() {
            assert_eq!(row.len(), order, "row {i} must have {order} entries");
            for (j, &value) in row.iter().enumerate() {
                assert!(value < order, "entry ({i}, {j}) out of range");
                dense[i * order + j] = value as u32;
            }
        }
        if let Some(ref l) = labels {
            assert_eq!(l.len(), order, "one label per element");
        }
        let mut s = CayleySemigroup {
            order,
            rule: ProductRule::Dense(dense),
            identity: None,
            labels,
        };
        s.identity = s.detect_identity();
        s
    }

    fn detect_identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.product(e, x) == x))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of the zero element; always `0` in canonical storage.
    pub fn zero_index(&self) -> usize {
        0
    }

    /// Index of the unity, when the semigroup has one.
    pub fn identity_index(&self) -> Option<usize> {
        self.identity
    }

    /// The product of elements `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        assert!(i < self.order && j < self.order, "element out of range");
        match &self.rule {
            ProductRule::Dense(t) => t[i * self.order + j] as usize,
            ProductRule::BitAnd => i & j,
        }
    }

    /// The label of element `i`, when labels are attached.
    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The element carrying `label`, when labels are attached.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|candidate| candidate == label))
    }

    /// Label of element `i`, falling back to `e<i>` for unlabeled tables.
    pub fn display_label(&self, i: usize) -> String {
        match self.label(i) {
            Some(l) => l.to_owned(),
            None => format!("e{i}"),
        }
    }

    /// The product of a non-empty list of elements.
    ///
    /// Commutativity and associativity make the result independent of both
    /// the order of `elements` and the fold direction; repeated elements are
    /// multiplied as often as they appear.
    pub fn fold_product(&self, elements: &[usize]) -> Result<usize, FoldError> {
        let (&first, rest) = elements.split_first().ok_or(FoldError::Empty)?;
        let mut acc = first;
        if acc >= self.order {
            return Err(FoldError::BadElement {
                element: acc,
                order: self.order,
            });
        }
        for &x in rest {
            if x >= self.order {
                return Err(FoldError::BadElement {
                    element: x,
                    order: self.order,
                });
            }
            acc = self.product(acc, x);
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.product(x, x) == x
    }

    pub fn all_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.is_idempotent(x))
    }

    /// The nonzero elements that annihilate some nonzero element: the
    /// vertex set of the zero-divisor graph.
    pub fn zero_divisor_set(&self) -> ElementSet {
        let mut zd = Bitset::new(self.order);
        for x in 1..self.order {
            if (1..self.order).any(|y| self.product(x, y) == 0) {
                zd.insert(x);
            }
        }
        zd
    }

    /// Materializes the multiplication table row-major.
    pub fn dense_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.product(i, j)).collect())
            .collect()
    }

    /// True when both semigroups have the same order and identical products
    /// for every pair of element indices.
    pub fn products_equal(&self, other: &CayleySemigroup) -> bool {
        self.order == other.order
            && (0..self.order)
                .all(|i| (0..self.order).all(|j| self.product(i, j) == other.product(i, j)))
    }
}

impl std::fmt::Debug for CayleySemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleySemigroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("labeled", &self.labels.is_some())
            .finish()
    }
}

/// The semigroup of subsets of `{x1, .., xn}` under intersection.
///
/// Element `i` is the subset whose characteristic bitmask is `i`: the empty
/// set is the zero at index `0`, the full set is the unity at index
/// `2^n - 1`, and `product(i, j) = i & j`.  Supported for `1 <= n <= 20`;
/// subset labels (`0`, `1`, `a3`, `b1`, `x2x4`, ...) are attached for
/// `n <= 12`.
pub fn powerset_semigroup(n: usize) -> Result<CayleySemigroup, PowersetError> {
    if n == 0 || n > MAX_POWERSET_N {
        return Err(PowersetError {
            n,
            max: MAX_POWERSET_N,
        });
    }
    let order = 1usize << n;
    let labels = (n <= MAX_LABELED_POWERSET_N)
        .then(|| (0..order).map(|mask| subset_label(mask, n)).collect());
    Ok(CayleySemigroup {
        order,
        rule: ProductRule::BitAnd,
        identity: Some(order - 1),
        labels,
    })
}

/// Canonical label for the subset with characteristic bitmask `mask`.
///
/// Singletons `{xi}` are written `a<i>` and co-singletons (the full set
/// minus `xi`) are written `b<i>`; other proper subsets list their members,
/// e.g. `x2x4`.  The empty set is `0` and the full set is `1`, matching the
/// reserved labels of the table text format.
fn subset_label(mask: usize, n: usize) -> String {
    let full = (1usize << n) - 1;
    if mask == 0 {
        return "0".to_owned();
    }
    if mask == full {
        return "1".to_owned();
    }
    if mask.count_ones() == 1 {
        return format!("a{}", mask.trailing_zeros() + 1);
    }
    if mask.count_ones() as usize == n - 1 {
        let missing = (!mask & full).trailing_zeros();
        return format!("b{}", missing + 1);
    }
    let mut label = String::new();
    for i in 0..n {
        if mask >> i & 1 == 1 {
            label.push('x');
            label.push_str(&(i + 1).to_string());
        }
    }
    label
}
