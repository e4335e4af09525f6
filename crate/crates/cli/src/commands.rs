use std::fmt::Write as _;

use divcat_core::category::{build_reduced, CategoryError, DivisionCategory};
use divcat_core::export;
use divcat_core::incidence::{mobius_via_lattice, IncidenceAlgebra};
use divcat_core::io3::{self, Layout, Table};
use divcat_core::monoid::{all_transversals, MonoidError, MonoidKind, Transversal};
use divcat_core::pbij::{self, PartialBijection, MAX_BRACKET_N};
use divcat_core::seqcat::{build_cn, mu_closed_form, SeqError};
use divcat_core::verify::{self, VerifyConfig};
use divcat_core::{enumerate as enumerate_monoid, FiniteInverseMonoid, IncidenceError};
use serde::Serialize;
use thiserror::Error;

use crate::{CategoryArgs, CategoryCheck, Common, Format, MonoidArg, Which};

/// Largest `n` for which `I(M_n)` is listed; `|I(M_8)|` is already 1.4e7.
const MAX_SYMMETRIC_LISTING: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error(transparent)]
    Monoid(MonoidError),
    #[error(transparent)]
    Category(CategoryError),
    #[error(transparent)]
    Incidence(IncidenceError),
    #[error(transparent)]
    Seq(SeqError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::SizeGuard(_) => 3,
            CliError::Monoid(MonoidError::TooLarge { .. }) => 3,
            CliError::Monoid(MonoidError::UnknownElement(_) | MonoidError::InvalidTransversal(_) | MonoidError::Element(_)) => 2,
            CliError::Category(CategoryError::SizeGuard { .. }) => 3,
            CliError::Category(CategoryError::Monoid(_)) => 2,
            CliError::Seq(SeqError::OutOfRange(_)) => 2,
            _ => 1,
        }
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        CliError::Monoid(e)
    }
}

impl From<CategoryError> for CliError {
    fn from(e: CategoryError) -> Self {
        CliError::Category(e)
    }
}

impl From<IncidenceError> for CliError {
    fn from(e: IncidenceError) -> Self {
        CliError::Incidence(e)
    }
}

impl From<SeqError> for CliError {
    fn from(e: SeqError) -> Self {
        CliError::Seq(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_n(n: usize) -> Result<(), CliError> {
    if !(1..=MAX_BRACKET_N).contains(&n) {
        return Err(usage(format!("--n must lie in 1..={MAX_BRACKET_N}, got {n}")));
    }
    Ok(())
}

fn kind(common: &Common) -> MonoidKind {
    match common.monoid {
        MonoidArg::Io => MonoidKind::OrderPreserving,
        MonoidArg::Symmetric => MonoidKind::Symmetric,
    }
}

fn load(common: &Common) -> Result<FiniteInverseMonoid, CliError> {
    check_n(common.n)?;
    Ok(enumerate_monoid(kind(common), common.n)?)
}

fn unsupported(format: Format, what: &str) -> CliError {
    usage(format!("format {format:?} is not available for {what}").to_lowercase())
}

/// Rows rendered in the requested tabular format.
fn tabular(rows: &[Vec<String>], format: Format, what: &str) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(export::text_grid(rows)),
        Format::Csv => Ok(export::csv(rows)),
        Format::Json => {
            let (header, body) = rows.split_first().ok_or_else(|| usage("empty table"))?;
            let records: Vec<serde_json::Map<String, serde_json::Value>> = body
                .iter()
                .map(|r| {
                    header
                        .iter()
                        .enumerate()
                        .map(|(k, h)| {
                            let key = if h.is_empty() { "row".to_owned() } else { h.clone() };
                            (key, serde_json::Value::String(r[k].clone()))
                        })
                        .collect()
                })
                .collect();
            Ok(export::to_json(&records))
        }
        Format::Dot => Err(unsupported(format, what)),
    }
}

fn set(items: &[usize]) -> String {
    let body: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(","))
}

pub fn enumerate(common: &Common) -> Result<String, CliError> {
    check_n(common.n)?;
    // listing avoids the Cayley table, so every n up to the text bound works
    let elements = match common.monoid {
        MonoidArg::Io => pbij::order_preserving_partial_bijections(common.n),
        MonoidArg::Symmetric if common.n > MAX_SYMMETRIC_LISTING => {
            return Err(CliError::SizeGuard(format!(
                "listing I(M_n) is limited to n <= {MAX_SYMMETRIC_LISTING}, got {}",
                common.n
            )))
        }
        MonoidArg::Symmetric => pbij::all_partial_bijections(common.n),
    }
    .map_err(MonoidError::from)?;
    let mut keyed: Vec<(String, PartialBijection)> = elements.into_iter().map(|f| (f.render_key(), f)).collect();
    keyed.sort_by(|(ka, a), (kb, b)| b.rank().cmp(&a.rank()).then_with(|| ka.cmp(kb)));

    let label = |f: &PartialBijection| f.to_bracket().expect("n is within the text bound");
    match common.format {
        Format::Text => Ok(keyed.iter().fold(String::new(), |mut out, (_, f)| {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", label(f), f.rank(), set(&f.domain()), set(&f.range()));
            out
        })),
        Format::Csv => {
            let mut rows = vec![vec!["element".to_owned(), "rank".to_owned(), "domain".to_owned(), "range".to_owned()]];
            rows.extend(keyed.iter().map(|(_, f)| vec![label(f), f.rank().to_string(), set(&f.domain()), set(&f.range())]));
            Ok(export::csv(&rows))
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Element {
                label: String,
                rank: usize,
                domain: Vec<usize>,
                range: Vec<usize>,
            }
            let records: Vec<Element> = keyed
                .iter()
                .map(|(_, f)| Element { label: label(f), rank: f.rank(), domain: f.domain(), range: f.range() })
                .collect();
            Ok(export::to_json(&records))
        }
        Format::Dot => Err(unsupported(common.format, "enumerate")),
    }
}

fn layout_for(which: Which) -> Option<Vec<Table>> {
    match which {
        Which::Cayley => Some((1..=4).map(Table::Composition).collect()),
        Which::ECayley => Some(vec![Table::IdempotentCayley]),
        _ => None,
    }
}

pub fn tables(common: &Common, which: Which, paper_layout: Option<usize>) -> Result<String, CliError> {
    if let Some(k) = paper_layout {
        if k != 3 || common.n != 3 || common.monoid != MonoidArg::Io {
            return Err(usage("--paper-layout is only defined for --paper-layout 3 with --monoid io --n 3"));
        }
    }
    let m = load(common)?;
    let p = m.idempotent_poset();
    let paper = paper_layout.is_some();

    if paper {
        if let Some(grids) = layout_for(which) {
            let mut blocks = Vec::new();
            for t in grids {
                let rebuilt: Layout = io3::rebuild_product(&m, t)?;
                blocks.push(tabular(&export::layout_rows(&rebuilt), common.format, "tables")?);
            }
            return Ok(blocks.join("\n"));
        }
    }

    let rows = match which {
        Which::Cayley => {
            let all: Vec<usize> = (0..m.len()).collect();
            export::cayley_rows(&m, &all)
        }
        Which::ECayley => export::cayley_rows(&m, m.idempotents()),
        Which::Inverses if paper => {
            let mut rows = vec![vec!["s".to_owned(), "inverse".to_owned()]];
            rows.extend(io3::rebuild_inverses(&m)?.into_iter().map(|(a, b)| vec![a, b]));
            rows
        }
        Which::Inverses => export::inverse_rows(&m),
        Which::Rl if paper => {
            let mut rows = vec![vec!["s".to_owned(), "s^-1 s".to_owned(), "s s^-1".to_owned()]];
            rows.extend(io3::rebuild_source_target(&m)?.into_iter().map(|(a, b, c)| vec![a, b, c]));
            rows
        }
        Which::Rl => export::source_target_rows(&m),
        Which::Order if paper => {
            // one line per idempotent: itself, then everything above it
            let mut rows = Vec::new();
            for (lower, _) in io3::ORDER_LINES {
                let e = m.find(lower)?;
                let mut line = vec![lower.to_string()];
                line.extend(io3::ORDER_LINES.iter().map(|(f, _)| *f).filter(|f| {
                    m.find(f).ok().and_then(|f| p.leq(e, f)) == Some(true)
                }).map(str::to_owned));
                rows.push(line);
            }
            return match common.format {
                Format::Text => Ok(rows.iter().map(|r| format!("{} ≤ {}\n", r[0], r[1..].join(", "))).collect()),
                Format::Csv => Ok(export::csv(&rows)),
                _ => Err(unsupported(common.format, "tables --which order --paper-layout 3")),
            };
        }
        Which::Order => export::order_rows(&m, &p),
        Which::Hasse if common.format == Format::Dot => return Ok(export::hasse_dot(&m, &p)),
        Which::Hasse => export::hasse_rows(&m, &p),
        Which::Green => {
            if paper {
                return Err(usage("no reference layout for Green classes"));
            }
            let g = export::green_record(&m);
            return match common.format {
                Format::Json => Ok(export::to_json(&g)),
                Format::Text => {
                    let mut out = String::new();
                    for (name, classes) in [("R", &g.r), ("L", &g.l), ("H", &g.h), ("D", &g.d)] {
                        let shown: Vec<String> = classes.iter().map(|c| format!("{{{}}}", c.join(" "))).collect();
                        let _ = writeln!(out, "{name} ({} classes): {}", classes.len(), shown.join(" "));
                    }
                    Ok(out)
                }
                Format::Csv => {
                    let mut rows = vec![vec!["relation".to_owned(), "class".to_owned(), "element".to_owned()]];
                    for (name, classes) in [("R", &g.r), ("L", &g.l), ("H", &g.h), ("D", &g.d)] {
                        for (k, c) in classes.iter().enumerate() {
                            rows.extend(c.iter().map(|x| vec![name.to_owned(), k.to_string(), x.clone()]));
                        }
                    }
                    Ok(export::csv(&rows))
                }
                Format::Dot => Err(unsupported(common.format, "green classes")),
            };
        }
    };
    tabular(&rows, common.format, "tables")
}

fn transversal(m: &FiniteInverseMonoid, args: &CategoryArgs) -> Result<Transversal, CliError> {
    match &args.transversal {
        None => Ok(m.choose_transversal()),
        Some(text) => {
            let parts: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            Transversal::parse(m, &parts).map_err(|e| usage(format!("--transversal: {e}")))
        }
    }
}

fn reduced(common: &Common, args: &CategoryArgs) -> Result<(FiniteInverseMonoid, DivisionCategory), CliError> {
    let m = load(common)?;
    let t = transversal(&m, args)?;
    let c = build_reduced(&m, &t)?;
    Ok((m, c))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn category(common: &Common, args: &CategoryArgs, checks: &[CategoryCheck]) -> Result<(String, bool), CliError> {
    let (m, c) = reduced(common, args)?;
    let cat = c.category();

    let mut check_lines = Vec::new();
    let mut ok = true;
    for check in checks {
        let (name, passed) = match check {
            CategoryCheck::Pushouts => ("has pushouts", cat.has_pushouts(args.pushout_guard)?),
            CategoryCheck::Transversals => {
                let mut all = true;
                for t in all_transversals(&m) {
                    all &= cat.is_isomorphic(build_reduced(&m, &t)?.category(), args.iso_guard)?;
                }
                ("independent of the transversal", all)
            }
            CategoryCheck::Sequences => {
                let cn = build_cn(common.n)?;
                (
                    "isomorphic to C_n",
                    common.monoid == MonoidArg::Io && cat.is_isomorphic(cn.category(), args.iso_guard)?,
                )
            }
        };
        ok &= passed;
        check_lines.push(format!("{name}: {}", yes_no(passed)));
    }

    let out = match common.format {
        Format::Dot => export::category_dot(cat),
        Format::Json => export::to_json(&export::category_record(cat)),
        Format::Csv => export::csv(export::hom_rows(cat)),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "objects: {}", cat.objects().join(" "));
            let _ = writeln!(out, "morphisms: {}", cat.morphism_count());
            for a in 0..cat.object_count() {
                for b in 0..cat.object_count() {
                    let hs = cat.hom(a, b);
                    if hs.is_empty() {
                        continue;
                    }
                    let names: Vec<&str> = hs.iter().map(|&x| cat.morphism(x).label.as_str()).collect();
                    let _ = writeln!(out, "Hom({},{}) = {{{}}}", cat.objects()[a], cat.objects()[b], names.join(", "));
                }
            }
            let _ = writeln!(out, "compositions:");
            for row in export::composition_rows(cat).iter().skip(1) {
                let _ = writeln!(out, "  {} · {} = {}", row[0], row[1], row[2]);
            }
            let label = |x: &usize| cat.morphism(*x).label.clone();
            let indecomposable: Vec<String> = cat.indecomposables().iter().map(label).collect();
            let _ = writeln!(out, "indecomposable: {}", indecomposable.join(" "));
            let not_epi: Vec<String> =
                (0..cat.morphism_count()).filter(|&x| !cat.is_epimorphism(x)).map(|x| label(&x)).collect();
            let not_mono: Vec<String> =
                (0..cat.morphism_count()).filter(|&x| !cat.is_monomorphism(x)).map(|x| label(&x)).collect();
            let _ = writeln!(out, "all epimorphisms: {}", yes_no(not_epi.is_empty()));
            let _ = writeln!(out, "not monomorphisms: {}", not_mono.join(" "));
            let quasi: Vec<&str> = cat.quasi_initial_objects().iter().map(|&o| cat.objects()[o].as_str()).collect();
            let _ = writeln!(out, "quasi-initial: {}", quasi.join(" "));
            out
        }
    };
    let mut out = out;
    if !check_lines.is_empty() {
        if common.format == Format::Text {
            for l in &check_lines {
                let _ = writeln!(out, "{l}");
            }
        } else {
            // keep structured output parseable; report checks on stderr
            for l in &check_lines {
                eprintln!("{l}");
            }
        }
    }
    Ok((out, ok))
}

#[derive(Serialize)]
struct MobiusRow {
    morphism: String,
    dom: String,
    cod: String,
    convolution: i64,
    lattice: Option<i64>,
    closed_form: Option<i64>,
    agree: bool,
}

fn sign(k: usize) -> i64 {
    (-1i64).pow(k as u32)
}

pub fn mobius(common: &Common, args: &CategoryArgs, sequences: bool) -> Result<(String, bool), CliError> {
    check_n(common.n)?;
    let mut rows = Vec::new();
    let summary = if sequences {
        if args.transversal.is_some() {
            return Err(usage("--transversal does not apply to --sequences"));
        }
        let cn = build_cn(common.n)?;
        let alg = IncidenceAlgebra::new(cn.category());
        let mu = alg.mobius()?.to_integers()?;
        for (x, s) in cn.sequences().iter().enumerate() {
            let closed = mu_closed_form(s);
            rows.push(MobiusRow {
                morphism: s.to_string(),
                dom: s.source().to_string(),
                cod: s.target().to_string(),
                convolution: mu[x],
                lattice: None,
                closed_form: Some(closed),
                agree: mu[x] == closed,
            });
        }
        String::new()
    } else {
        let (m, c) = reduced(common, args)?;
        let cat = c.category();
        let alg = IncidenceAlgebra::new(cat);
        let mu = alg.mobius()?.to_integers()?;
        let combinatorial = m.is_combinatorial();
        for (x, &value) in mu.iter().enumerate() {
            let mor = cat.morphism(x);
            let lattice = if combinatorial { Some(mobius_via_lattice(&m, &c, x)?) } else { None };
            // objects of C_F(IO_n) correspond to ranks, so the C_n formula transfers
            let closed = match common.monoid {
                MonoidArg::Io => {
                    let (dom, cod) = (c.object_idempotents()[mor.dom], c.object_idempotents()[mor.cod]);
                    Some(sign(m.rank(dom) - m.rank(cod)))
                }
                MonoidArg::Symmetric => None,
            };
            let agree = lattice.iter().all(|&v| v == value) && closed.iter().all(|&v| v == value);
            rows.push(MobiusRow {
                morphism: mor.label.clone(),
                dom: cat.objects()[mor.dom].clone(),
                cod: cat.objects()[mor.cod].clone(),
                convolution: value,
                lattice,
                closed_form: closed,
                agree,
            });
        }
        case_split(&m, &c, &mu)
    };
    let ok = rows.iter().all(|r| r.agree);

    let cell = |v: Option<i64>| v.map_or("n/a".to_owned(), |v| v.to_string());
    let out = match common.format {
        Format::Json => export::to_json(&rows),
        Format::Csv | Format::Text => {
            let mut table = vec![["morphism", "dom", "cod", "convolution", "lattice", "closed_form", "agree"]
                .map(str::to_owned)
                .to_vec()];
            table.extend(rows.iter().map(|r| {
                vec![
                    r.morphism.clone(),
                    r.dom.clone(),
                    r.cod.clone(),
                    r.convolution.to_string(),
                    cell(r.lattice),
                    cell(r.closed_form),
                    if r.agree { "yes".to_owned() } else { "DISAGREE".to_owned() },
                ]
            }));
            if common.format == Format::Csv {
                export::csv(&table)
            } else {
                let mut out = export::text_grid(&table);
                out.push_str(&summary);
                out
            }
        }
        Format::Dot => return Err(unsupported(common.format, "mobius")),
    };
    Ok((out, ok))
}

/// Which morphisms got `-1` and which `+1`, against the rule "`-1` iff the
/// morphism runs from the top object to the bottom one or is a non-identity
/// indecomposable".
fn case_split(m: &FiniteInverseMonoid, c: &DivisionCategory, mu: &[i64]) -> String {
    let cat = c.category();
    let indecomposable = cat.indecomposables();
    let top = c.object_of(m.identity());
    let bottom = m.zero().and_then(|z| c.object_of(z));
    let label = |x: usize| cat.morphism(x).label.clone();
    let minus: Vec<String> = (0..mu.len()).filter(|&x| mu[x] == -1).map(label).collect();
    let plus: Vec<String> = (0..mu.len()).filter(|&x| mu[x] == 1).map(label).collect();
    let rule_holds = (0..mu.len()).all(|x| {
        let mor = cat.morphism(x);
        let top_to_bottom = Some(mor.dom) == top && Some(mor.cod) == bottom;
        let predicted = if top_to_bottom || indecomposable.contains(&x) { -1 } else { 1 };
        predicted == mu[x]
    });
    let mut out = String::new();
    let _ = writeln!(out, "mu = -1 ({}): {}", minus.len(), minus.join(" "));
    let _ = writeln!(out, "mu = +1 ({}): {}", plus.len(), plus.join(" "));
    let _ = writeln!(
        out,
        "rule \"-1 iff top->bottom or non-identity indecomposable, else +1\": {}",
        if rule_holds { "holds" } else { "does not hold" }
    );
    out
}

pub fn verify(common: &Common, cfg: VerifyConfig) -> Result<(String, bool), CliError> {
    check_n(common.n)?;
    if common.monoid != MonoidArg::Io {
        return Err(usage("verify always covers both monoids; drop --monoid"));
    }
    if common.format != Format::Text {
        return Err(unsupported(common.format, "verify"));
    }
    let report = verify::run(&cfg);
    Ok((format!("{report}\n"), report.passed()))
}
