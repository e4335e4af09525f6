//! Reference layouts for `IO_3`.
//!
//! A fixed presentation of `IO_3` with hand-chosen row and column orders and
//! bracket-text cells, used to emit tables in that layout and as golden data
//! in tests. In the product grids the cell at row `r`, column `c` is `r ∘ c`.
//! Zero and the identity are left out of the product grids.
//!
//! The traditional source/target listing misprints the first label of its
//! right-hand block as `[1][2]`; its two idempotent columns only fit
//! `[31][2]`, which is what [`SOURCE_TARGET`] carries.

use crate::monoid::{FiniteInverseMonoid, MonoidError};

/// A labelled grid: `columns` heads, one `(row label, cells)` per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Layout {
    /// Reads a whitespace-separated grid whose first line is `.` followed by
    /// the column heads.
    pub fn parse(text: &str) -> Layout {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let columns = lines
            .next()
            .map(|l| l.split_whitespace().skip(1).map(str::to_owned).collect())
            .unwrap_or_default();
        let rows = lines
            .map(|l| {
                let mut cells = l.split_whitespace().map(str::to_owned);
                let head = cells.next().unwrap_or_default();
                (head, cells.collect())
            })
            .collect();
        Layout { columns, rows }
    }

    /// Cells that differ from `other`, as `(row, column, ours, theirs)`.
    pub fn diff(&self, other: &Layout) -> Vec<(String, String, String, String)> {
        let mut out = Vec::new();
        if self.columns != other.columns || self.rows.len() != other.rows.len() {
            out.push(("<shape>".into(), "<shape>".into(), format!("{:?}", self.columns), format!("{:?}", other.columns)));
            return out;
        }
        for ((ra, ca), (rb, cb)) in self.rows.iter().zip(&other.rows) {
            if ra != rb || ca.len() != cb.len() {
                out.push((ra.clone(), "<row>".into(), ra.clone(), rb.clone()));
                continue;
            }
            for ((col, a), b) in self.columns.iter().zip(ca).zip(cb) {
                if a != b {
                    out.push((ra.clone(), col.clone(), a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

/// The twenty elements of `IO_3`, in the customary listing order.
pub const ELEMENTS: [&str; 20] = [
    "[1]", "[2]", "[3]", "[12]", "[21]", "[23]", "[32]", "[123]", "[321]", "[1][2]", "[1][3]", "[2][3]", "[31][2]",
    "[13][2]", "[32][1]", "[23][1]", "[12][3]", "[21][3]", "0", "i",
];

/// Products among the rank-one elements.
pub const PRODUCTS_RANK1_RANK1: &str = "\
.       [2][3]  [12][3] [13][2] [21][3] [1][3]  [23][1] [31][2] [32][1] [1][2]
[2][3]  [2][3]  0       0       [21][3] 0       0       [31][2] 0       0
[12][3] [12][3] 0       0       [1][3]  0       0       [32][1] 0       0
[13][2] [13][2] 0       0       [23][1] 0       0       [1][2]  0       0
[21][3] 0       [2][3]  0       0       [21][3] 0       0       [31][2] 0
[1][3]  0       [12][3] 0       0       [1][3]  0       0       [32][1] 0
[23][1] 0       [13][2] 0       0       [23][1] 0       0       [1][2]  0
[31][2] 0       0       [2][3]  0       0       [21][3] 0       0       [31][2]
[32][1] 0       0       [12][3] 0       0       [1][3]  0       0       [32][1]
[1][2]  0       0       [13][2] 0       0       [23][1] 0       0       [1][2]
";

/// Rank-one rows against rank-two columns.
pub const PRODUCTS_RANK1_RANK2: &str = "\
.       [3]     [23]    [123]   [32]    [2]     [12]    [321]   [21]    [1]
[2][3]  [2][3]  [2][3]  0       [2][3]  [2][3]  0       [21][3] [21][3] 0
[12][3] [12][3] [12][3] 0       [12][3] [12][3] 0       [1][3]  [1][3]  0
[13][2] [13][2] [13][2] 0       [13][2] [13][2] 0       [23][1] [23][1] 0
[21][3] [21][3] 0       [2][3]  [31][2] 0       [2][3]  [31][2] 0       [21][3]
[1][3]  [1][3]  0       [12][3] [32][1] 0       [12][3] [32][1] 0       [1][3]
[23][1] [23][1] 0       [13][2] [1][2]  0       [13][2] [1][2]  0       [23][1]
[31][2] 0       [21][3] [21][3] 0       [31][2] [31][2] 0       [31][2] [31][2]
[32][1] 0       [1][3]  [1][3]  0       [32][1] [32][1] 0       [32][1] [32][1]
[1][2]  0       [23][1] [23][1] 0       [1][2]  [1][2]  0       [1][2]  [1][2]
";

/// Rank-two rows against rank-one columns.
pub const PRODUCTS_RANK2_RANK1: &str = "\
.       [2][3]  [12][3] [13][2] [21][3] [1][3]  [23][1] [31][2] [32][1] [1][2]
[3]     [2][3]  [12][3] 0       [21][3] [1][3]  0       [31][2] [32][1] 0
[23]    [2][3]  [13][2] 0       [21][3] [23][1] 0       [31][2] [1][2]  0
[123]   [12][3] [13][2] 0       [1][3]  [23][1] 0       [32][1] [1][2]  0
[32]    [2][3]  0       [12][3] [21][3] 0       [1][3]  [31][2] 0       [32][1]
[2]     [2][3]  0       [13][2] [21][3] 0       [23][1] [31][2] 0       [1][2]
[12]    [12][3] 0       [13][2] [1][3]  0       [23][1] [32][1] 0       [1][2]
[321]   0       [2][3]  [12][3] 0       [21][3] [1][3]  0       [31][2] [32][1]
[21]    0       [2][3]  [13][2] 0       [21][3] [23][1] 0       [31][2] [1][2]
[1]     0       [12][3] [13][2] 0       [1][3]  [23][1] 0       [32][1] [1][2]
";

/// Products among the rank-two elements.
pub const PRODUCTS_RANK2_RANK2: &str = "\
.       [3]     [23]    [123]   [32]    [2]     [12]    [321]   [21]    [1]
[3]     [3]     [2][3]  [12][3] [32]    [2][3]  [12][3] [321]   [21][3] [1][3]
[23]    [23]    [2][3]  [13][2] [2]     [2][3]  [13][2] [21]    [21][3] [23][1]
[123]   [123]   [12][3] [13][2] [12]    [12][3] [13][2] [1]     [1][3]  [23][1]
[32]    [2][3]  [3]     [1][3]  [2][3]  [32]    [32][1] [21][3] [321]   [32][1]
[2]     [2][3]  [23]    [23][1] [2][3]  [2]     [1][2]  [21][3] [21]    [1][2]
[12]    [12][3] [123]   [23][1] [12][3] [12]    [1][2]  [1][3]  [1]     [1][2]
[321]   [21][3] [1][3]  [3]     [31][2] [32][1] [32]    [31][2] [32][1] [321]
[21]    [21][3] [23][1] [23]    [31][2] [1][2]  [2]     [31][2] [1][2]  [21]
[1]     [1][3]  [23][1] [123]   [32][1] [1][2]  [12]    [32][1] [1][2]  [1]
";

/// Products of idempotents.
pub const IDEMPOTENT_CAYLEY: &str = "\
.      0      i      [1]    [2]    [3]    [1][2] [1][3] [2][3]
0      0      0      0      0      0      0      0      0
i      0      i      [1]    [2]    [3]    [1][2] [1][3] [2][3]
[1]    0      [1]    [1]    [1][2] [1][3] [1][2] [1][3] 0
[2]    0      [2]    [1][2] [2]    [2][3] [1][2] 0      [2][3]
[3]    0      [3]    [1][3] [2][3] [3]    0      [1][3] [2][3]
[1][2] 0      [1][2] [1][2] [1][2] 0      [1][2] 0      0
[1][3] 0      [1][3] [1][3] 0      [1][3] 0      [1][3] 0
[2][3] 0      [2][3] 0      [2][3] [2][3] 0      0      [2][3]
";

/// Inverse of each element other than 0 and i, in two-block order
/// (left block top to bottom, then right block).
pub const INVERSES: &[(&str, &str)] = &[
    ("[1]", "[1]"),
    ("[2]", "[2]"),
    ("[3]", "[3]"),
    ("[12]", "[21]"),
    ("[21]", "[12]"),
    ("[23]", "[32]"),
    ("[32]", "[23]"),
    ("[123]", "[321]"),
    ("[321]", "[123]"),
    ("[2][3]", "[2][3]"),
    ("[1][2]", "[1][2]"),
    ("[1][3]", "[1][3]"),
    ("[13][2]", "[31][2]"),
    ("[31][2]", "[13][2]"),
    ("[12][3]", "[21][3]"),
    ("[21][3]", "[12][3]"),
    ("[23][1]", "[32][1]"),
    ("[32][1]", "[23][1]"),
];

/// `(s, s⁻¹s, ss⁻¹)` in two-block order.
pub const SOURCE_TARGET: &[(&str, &str, &str)] = &[
    ("[12]", "[2]", "[1]"),
    ("[21]", "[1]", "[2]"),
    ("[23]", "[3]", "[2]"),
    ("[32]", "[2]", "[3]"),
    ("[123]", "[3]", "[1]"),
    ("[321]", "[1]", "[3]"),
    ("[12][3]", "[2][3]", "[1][3]"),
    ("[21][3]", "[1][3]", "[2][3]"),
    ("[13][2]", "[2][3]", "[1][2]"),
    ("[31][2]", "[1][2]", "[2][3]"),
    ("[32][1]", "[1][2]", "[1][3]"),
    ("[23][1]", "[1][3]", "[1][2]"),
    ("[1][2]", "[1][2]", "[1][2]"),
    ("[2][3]", "[2][3]", "[2][3]"),
    ("[1][3]", "[1][3]", "[1][3]"),
    ("[1]", "[1]", "[1]"),
    ("[2]", "[2]", "[2]"),
    ("[3]", "[3]", "[3]"),
];

/// Each idempotent followed by everything above it in `E(IO_3)`.
pub const ORDER_LINES: &[(&str, &[&str])] = &[
    ("0", &["0", "i", "[1]", "[2]", "[3]", "[1][2]", "[1][3]", "[2][3]"]),
    ("i", &["i"]),
    ("[1]", &["i", "[1]"]),
    ("[2]", &["i", "[2]"]),
    ("[3]", &["i", "[3]"]),
    ("[1][2]", &["i", "[1]", "[2]", "[1][2]"]),
    ("[1][3]", &["i", "[1]", "[3]", "[1][3]"]),
    ("[2][3]", &["i", "[2]", "[3]", "[2][3]"]),
];

/// Cover pairs `(lower, upper)` of `E(IO_3)`.
pub const HASSE_COVERS: &[(&str, &str)] = &[
    ("0", "[1][2]"),
    ("0", "[1][3]"),
    ("0", "[2][3]"),
    ("[1][2]", "[1]"),
    ("[1][2]", "[2]"),
    ("[1][3]", "[1]"),
    ("[1][3]", "[3]"),
    ("[2][3]", "[2]"),
    ("[2][3]", "[3]"),
    ("[1]", "i"),
    ("[2]", "i"),
    ("[3]", "i"),
];

/// Transversal of the idempotent D-classes used for `C_F(IO_3)`.
pub const TRANSVERSAL: [&str; 4] = ["0", "[1]", "[1][2]", "i"];

/// Non-empty hom-sets of `C_F(IO_3)`: `(dom, cod, morphisms as (s,e))`.
pub const HOM_SETS: &[(&str, &str, &[&str])] = &[
    ("i", "[1][2]", &["([13][2],i)", "([23][1],i)", "([1][2],i)"]),
    ("i", "[1]", &["([1],i)", "([12],i)", "([123],i)"]),
    ("i", "0", &["(0,i)"]),
    ("[1]", "[1][2]", &["([23][1],[1])", "([1][2],[1])"]),
    ("[1]", "0", &["(0,[1])"]),
    ("[1][2]", "0", &["(0,[1][2])"]),
    ("i", "i", &["(i,i)"]),
    ("[1]", "[1]", &["([1],[1])"]),
    ("[1][2]", "[1][2]", &["([1][2],[1][2])"]),
    ("0", "0", &["(0,0)"]),
];

/// The displayed composites `later · earlier = result` in `C_F(IO_3)`.
pub const COMPOSITIONS: &[(&str, &str, &str)] = &[
    ("([23][1],[1])", "([1],i)", "([23][1],i)"),
    ("([23][1],[1])", "([12],i)", "([13][2],i)"),
    ("([23][1],[1])", "([123],i)", "([13][2],i)"),
    ("([1][2],[1])", "([1],i)", "([1][2],i)"),
    ("([1][2],[1])", "([12],i)", "([1][2],i)"),
    ("([1][2],[1])", "([123],i)", "([23][1],i)"),
];

/// Which grid to rebuild.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Product grid 1 to 4: rank-1 x rank-1, rank-1 x rank-2,
    /// rank-2 x rank-1, rank-2 x rank-2.
    Composition(usize),
    IdempotentCayley,
}

impl Table {
    pub fn reference(self) -> Layout {
        Layout::parse(match self {
            Table::Composition(1) => PRODUCTS_RANK1_RANK1,
            Table::Composition(2) => PRODUCTS_RANK1_RANK2,
            Table::Composition(3) => PRODUCTS_RANK2_RANK1,
            Table::Composition(4) => PRODUCTS_RANK2_RANK2,
            Table::Composition(k) => panic!("no composition table {k}"),
            Table::IdempotentCayley => IDEMPOTENT_CAYLEY,
        })
    }
}

/// Recomputes a product grid over the reference row and column labels.
pub fn rebuild_product(m: &FiniteInverseMonoid, table: Table) -> Result<Layout, MonoidError> {
    let reference = table.reference();
    let cols: Vec<usize> = reference.columns.iter().map(|c| m.find(c)).collect::<Result<_, _>>()?;
    let rows = reference
        .rows
        .iter()
        .map(|(r, _)| {
            let row = m.find(r)?;
            Ok((r.clone(), cols.iter().map(|&c| m.label(m.mul(row, c)).to_owned()).collect()))
        })
        .collect::<Result<_, MonoidError>>()?;
    Ok(Layout { columns: reference.columns, rows })
}

/// Recomputes [`INVERSES`] in the same order.
pub fn rebuild_inverses(m: &FiniteInverseMonoid) -> Result<Vec<(String, String)>, MonoidError> {
    INVERSES
        .iter()
        .map(|(s, _)| {
            let x = m.find(s)?;
            Ok((s.to_string(), m.label(m.inverse(x)).to_owned()))
        })
        .collect()
}

/// Recomputes [`SOURCE_TARGET`] in the same order.
pub fn rebuild_source_target(m: &FiniteInverseMonoid) -> Result<Vec<(String, String, String)>, MonoidError> {
    SOURCE_TARGET
        .iter()
        .map(|(s, _, _)| {
            let x = m.find(s)?;
            Ok((s.to_string(), m.label(m.source_idempotent(x)).to_owned(), m.label(m.target_idempotent(x)).to_owned()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::enumerate_io;

    #[test]
    fn reference_shapes() {
        for k in 1..=4 {
            let t = Table::Composition(k).reference();
            assert_eq!(t.columns.len(), 9);
            assert_eq!(t.rows.len(), 9);
            assert!(t.rows.iter().all(|(_, c)| c.len() == 9));
        }
        let e = Table::IdempotentCayley.reference();
        assert_eq!((e.columns.len(), e.rows.len()), (8, 8));
    }

    #[test]
    fn rebuilt_tables_match() {
        let m = enumerate_io(3).unwrap();
        for t in [1, 2, 3, 4].map(Table::Composition).into_iter().chain([Table::IdempotentCayley]) {
            let rebuilt = rebuild_product(&m, t).unwrap();
            assert_eq!(rebuilt.diff(&t.reference()), vec![], "{t:?}");
        }
        let inv = rebuild_inverses(&m).unwrap();
        assert!(inv.iter().zip(INVERSES).all(|((a, b), (c, d))| a == c && b == d));
        let st = rebuild_source_target(&m).unwrap();
        assert!(st.iter().zip(SOURCE_TARGET).all(|((a, b, c), (d, e, f))| a == d && b == e && c == f));
    }

    #[test]
    fn diff_reports_cells() {
        let a = Layout::parse(". x y\nr 1 2");
        let b = Layout::parse(". x y\nr 1 3");
        assert_eq!(a.diff(&b), vec![("r".into(), "y".into(), "2".into(), "3".into())]);
    }
}
