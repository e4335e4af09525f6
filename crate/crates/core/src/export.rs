//! Text renderings: CSV, JSON and Graphviz DOT.
//!
//! CSV cells are bracket text; fields holding commas (morphism labels such
//! as `(0,i)`) are quoted. JSON documents follow the serde structs in this
//! module, which double as the schema.

use serde::Serialize;

use crate::category::{DivisionCategory, FiniteCategory};
use crate::io3::Layout;
use crate::monoid::{FiniteInverseMonoid, IdempotentPoset};
use crate::seqcat::SeqCategory;

/// Writes rows as CSV.
pub fn csv<I, R, S>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8 input")
}

/// Aligned plain-text grid.
pub fn text_grid(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// A layout as rows with a leading header row (top-left cell blank).
pub fn layout_rows(layout: &Layout) -> Vec<Vec<String>> {
    let mut rows = vec![std::iter::once(String::new()).chain(layout.columns.iter().cloned()).collect()];
    rows.extend(layout.rows.iter().map(|(h, cells)| std::iter::once(h.clone()).chain(cells.iter().cloned()).collect()));
    rows
}

/// Full Cayley table over `elements` in monoid order, header row first.
pub fn cayley_rows(m: &FiniteInverseMonoid, elements: &[usize]) -> Vec<Vec<String>> {
    let mut rows = vec![std::iter::once(String::new()).chain(elements.iter().map(|&x| m.label(x).to_owned())).collect()];
    for &a in elements {
        let mut row = vec![m.label(a).to_owned()];
        row.extend(elements.iter().map(|&b| m.label(m.mul(a, b)).to_owned()));
        rows.push(row);
    }
    rows
}

pub fn inverse_rows(m: &FiniteInverseMonoid) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["s".to_owned(), "inverse".to_owned()]];
    rows.extend((0..m.len()).map(|x| vec![m.label(x).to_owned(), m.label(m.inverse(x)).to_owned()]));
    rows
}

/// `s, s⁻¹s, ss⁻¹` per element.
pub fn source_target_rows(m: &FiniteInverseMonoid) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["s".to_owned(), "s^-1 s".to_owned(), "s s^-1".to_owned()]];
    rows.extend((0..m.len()).map(|x| {
        vec![m.label(x).to_owned(), m.label(m.source_idempotent(x)).to_owned(), m.label(m.target_idempotent(x)).to_owned()]
    }));
    rows
}

/// Every related pair `e ≤ f` of the poset.
pub fn order_rows(m: &FiniteInverseMonoid, p: &IdempotentPoset) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["lower".to_owned(), "upper".to_owned()]];
    for &e in p.members() {
        for f in p.up_set(e) {
            rows.push(vec![m.label(e).to_owned(), m.label(f).to_owned()]);
        }
    }
    rows
}

pub fn hasse_rows(m: &FiniteInverseMonoid, p: &IdempotentPoset) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["lower".to_owned(), "upper".to_owned()]];
    rows.extend(p.hasse_edges().iter().map(|&(a, b)| vec![m.label(a).to_owned(), m.label(b).to_owned()]));
    rows
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram, edges pointing upwards from lower to upper.
pub fn hasse_dot(m: &FiniteInverseMonoid, p: &IdempotentPoset) -> String {
    let mut out = String::from("digraph hasse {\n    rankdir=BT;\n    node [shape=plaintext];\n");
    for &e in p.members() {
        out.push_str(&format!("    n{e} [label=\"{}\"];\n", dot_escape(m.label(e))));
    }
    for &(a, b) in p.hasse_edges() {
        out.push_str(&format!("    n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Objects as nodes and one labelled edge per morphism, identities included.
pub fn category_dot(cat: &FiniteCategory) -> String {
    let mut out = String::from("digraph category {\n    node [shape=circle];\n");
    for (k, o) in cat.objects().iter().enumerate() {
        out.push_str(&format!("    o{k} [label=\"{}\"];\n", dot_escape(o)));
    }
    for mor in cat.morphisms() {
        out.push_str(&format!("    o{} -> o{} [label=\"{}\"];\n", mor.dom, mor.cod, dot_escape(&mor.label)));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize)]
pub struct ElementRecord {
    pub label: String,
    pub rank: usize,
    pub domain: Vec<usize>,
    pub range: Vec<usize>,
}

pub fn element_records(m: &FiniteInverseMonoid) -> Vec<ElementRecord> {
    m.elements()
        .iter()
        .enumerate()
        .map(|(x, f)| ElementRecord { label: m.label(x).to_owned(), rank: f.rank(), domain: f.domain(), range: f.range() })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct GreenRecord {
    pub r: Vec<Vec<String>>,
    pub l: Vec<Vec<String>>,
    pub h: Vec<Vec<String>>,
    pub d: Vec<Vec<String>>,
}

pub fn green_record(m: &FiniteInverseMonoid) -> GreenRecord {
    let g = m.green();
    let name = |p: &crate::monoid::Partition| -> Vec<Vec<String>> {
        p.classes().iter().map(|c| c.iter().map(|&x| m.label(x).to_owned()).collect()).collect()
    };
    GreenRecord { r: name(&g.r), l: name(&g.l), h: name(&g.h), d: name(&g.d) }
}

#[derive(Debug, Serialize)]
pub struct MorphismRecord {
    pub label: String,
    pub dom: String,
    pub cod: String,
    pub identity: bool,
}

#[derive(Debug, Serialize)]
pub struct CompositionRecord {
    pub later: String,
    pub earlier: String,
    pub result: String,
}

#[derive(Debug, Serialize)]
pub struct CategoryRecord {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismRecord>,
    pub compositions: Vec<CompositionRecord>,
}

pub fn category_record(cat: &FiniteCategory) -> CategoryRecord {
    let obj = |k: usize| cat.objects()[k].clone();
    let morphisms = cat
        .morphisms()
        .iter()
        .enumerate()
        .map(|(x, m)| MorphismRecord { label: m.label.clone(), dom: obj(m.dom), cod: obj(m.cod), identity: cat.is_identity(x) })
        .collect();
    let mut compositions = Vec::new();
    for earlier in 0..cat.morphism_count() {
        for later in 0..cat.morphism_count() {
            if let Some(r) = cat.compose(later, earlier) {
                compositions.push(CompositionRecord {
                    later: cat.morphism(later).label.clone(),
                    earlier: cat.morphism(earlier).label.clone(),
                    result: cat.morphism(r).label.clone(),
                });
            }
        }
    }
    CategoryRecord { objects: cat.objects().to_vec(), morphisms, compositions }
}

/// Non-identity composites only, as `later · earlier = result` rows.
pub fn composition_rows(cat: &FiniteCategory) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["later".to_owned(), "earlier".to_owned(), "result".to_owned()]];
    for earlier in 0..cat.morphism_count() {
        for later in 0..cat.morphism_count() {
            if cat.is_identity(later) || cat.is_identity(earlier) {
                continue;
            }
            if let Some(r) = cat.compose(later, earlier) {
                rows.push(vec![cat.morphism(later).label.clone(), cat.morphism(earlier).label.clone(), cat.morphism(r).label.clone()]);
            }
        }
    }
    rows
}

/// One row per non-empty hom-set: `dom, cod, size, members`.
pub fn hom_rows(cat: &FiniteCategory) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["dom".to_owned(), "cod".to_owned(), "size".to_owned(), "morphisms".to_owned()]];
    for a in 0..cat.object_count() {
        for b in 0..cat.object_count() {
            let hs = cat.hom(a, b);
            if hs.is_empty() {
                continue;
            }
            let names: Vec<&str> = hs.iter().map(|&x| cat.morphism(x).label.as_str()).collect();
            rows.push(vec![cat.objects()[a].clone(), cat.objects()[b].clone(), hs.len().to_string(), names.join(" ")]);
        }
    }
    rows
}

/// `(s,e)` labels of a division category with their monoid data.
pub fn division_rows(m: &FiniteInverseMonoid, dc: &DivisionCategory) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["morphism".to_owned(), "s".to_owned(), "e".to_owned(), "s^-1 s".to_owned(), "cod".to_owned()]];
    for (x, &(s, e)) in dc.pairs().iter().enumerate() {
        rows.push(vec![
            dc.category().morphism(x).label.clone(),
            m.label(s).to_owned(),
            m.label(e).to_owned(),
            m.label(m.source_idempotent(s)).to_owned(),
            m.label(m.target_idempotent(s)).to_owned(),
        ]);
    }
    rows
}

#[derive(Debug, Serialize)]
pub struct SeqRecord {
    pub i: usize,
    pub j: usize,
    pub tuple: Vec<usize>,
    pub label: String,
    pub mu: i64,
}

/// Hom listing of `C_n` with closed-form μ, keyed by `(i, j, tuple)`.
pub fn seq_records(c: &SeqCategory) -> Vec<SeqRecord> {
    c.sequences()
        .iter()
        .map(|s| SeqRecord {
            i: s.source(),
            j: s.target(),
            tuple: s.entries().to_vec(),
            label: s.to_string(),
            mu: crate::seqcat::mu_closed_form(s),
        })
        .collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::build_reduced;
    use crate::monoid::enumerate_io;

    #[test]
    fn csv_quotes_morphism_labels() {
        let out = csv([vec!["(0,i)", "[1]"]]);
        assert_eq!(out, "\"(0,i)\",[1]\n");
    }

    #[test]
    fn hasse_dot_has_twelve_edges_for_io3() {
        let m = enumerate_io(3).unwrap();
        let dot = hasse_dot(&m, &m.idempotent_poset());
        assert_eq!(dot.matches(" -> ").count(), 12);
        assert!(dot.contains("label=\"[1][2]\""));
    }

    #[test]
    fn category_dot_has_one_edge_per_morphism() {
        let m = enumerate_io(3).unwrap();
        let c = build_reduced(&m, &m.choose_transversal()).unwrap();
        let dot = category_dot(c.category());
        assert_eq!(dot.matches(" -> ").count(), 15);
        assert!(dot.contains("label=\"([13][2],i)\""));
        let json: serde_json::Value = serde_json::from_str(&to_json(&category_record(c.category()))).unwrap();
        assert_eq!(json["morphisms"].as_array().unwrap().len(), 15);
        assert_eq!(json["objects"].as_array().unwrap().len(), 4);
    }
}
