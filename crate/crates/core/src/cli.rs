//! The `dalg` command line: instance files, check suites, constructors and the property dossier.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::ProductTable;
use crate::antipode::{solve_antipode, AntipodeMap};
use crate::double::{Corner, DoubleAlgebra};
use crate::families::{
    commutative_double, double_category_double, dual_numbers, frobenius_extension_double, groupoid_double,
    hopf_group_double, matrix_algebra, matrix_double_over, matrix_labels, split_algebra, wha_double, DoubleCategory,
    FrobeniusExtension, Group, Groupoid, WeakHopfData,
};
use crate::frobenius::{frobenius_report, Frobenius, MaschkeReport};
use crate::report::Report;
use crate::scalar::{Field, Scalar};
use crate::structure::{
    check_distributivity, distributive_report, extract_hopf_algebroids, frobenius_integrals, hgd_round_trip, pairings,
    takeuchi_double,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed instance file: {0}")]
    Format(String),
    #[error("bad parameters: {0}")]
    Params(String),
    #[error("construction rejected: {0}")]
    Rejected(String),
}

impl CliError {
    /// Exit code: 1 for a rejected construction, 2 for unreadable input or bad usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Rejected(_) => 1,
            _ => 2,
        }
    }
}

fn format_err(e: impl fmt::Display) -> CliError {
    CliError::Format(e.to_string())
}

/// Artifacts recorded when an instance is constructed, compared again by `check --suite all`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    /// Antipode matrix by rows, or `None` when no antipode exists.
    pub antipode: Option<Vec<Vec<String>>>,
    /// Dimensions of L, R, B, T.
    pub base_dims: BTreeMap<String, usize>,
    /// Verdict of each suite.
    pub suites: BTreeMap<String, bool>,
}

/// On-disk form of a double algebra; structure constants are flattened in `[i][j][k]` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub version: u32,
    pub field: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub vertical: Vec<String>,
    pub horizontal: Vec<String>,
    pub e: Vec<String>,
    pub i: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl InstanceFile {
    pub fn from_algebra(d: &DoubleAlgebra) -> InstanceFile {
        let default_labels: Vec<String> = (0..d.dim()).map(|k| format!("x{k}")).collect();
        InstanceFile {
            version: FORMAT_VERSION,
            field: d.field().descriptor(),
            dim: d.dim(),
            labels: (d.labels() != default_labels.as_slice()).then(|| d.labels().to_vec()),
            vertical: strings(d.vertical().constants()),
            horizontal: strings(d.horizontal().constants()),
            e: strings(d.e()),
            i: strings(d.i()),
            expected: None,
        }
    }

    pub fn parse(text: &str) -> Result<InstanceFile, CliError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(format_err)?;
        if file.version != FORMAT_VERSION {
            return Err(CliError::Format(format!("unsupported format version {}", file.version)));
        }
        let n = file.dim;
        if n == 0 {
            return Err(CliError::Format("dimension must be positive".into()));
        }
        for (name, len, want) in [
            ("vertical", file.vertical.len(), n * n * n),
            ("horizontal", file.horizontal.len(), n * n * n),
            ("e", file.e.len(), n),
            ("i", file.i.len(), n),
        ] {
            if len != want {
                return Err(CliError::Format(format!("{name} has {len} entries, expected {want}")));
            }
        }
        if file.labels.as_ref().is_some_and(|l| l.len() != n) {
            return Err(CliError::Format(format!("labels must have {n} entries")));
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<InstanceFile, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        InstanceFile::parse(&text)
    }

    /// Canonical serialization: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files serialize");
        s.push('\n');
        s
    }

    pub fn field(&self) -> Result<Field, CliError> {
        Field::from_descriptor(&self.field).map_err(format_err)
    }

    /// Builds the algebra without checking the axioms, reading scalars in `field` (or the declared field).
    pub fn to_algebra(&self, field: Option<Field>) -> Result<DoubleAlgebra, CliError> {
        let field = match field {
            Some(f) => f,
            None => self.field()?,
        };
        let parse = |v: &[String]| -> Result<Vec<Scalar>, CliError> {
            v.iter().map(|s| field.parse(s).map_err(format_err)).collect()
        };
        let n = self.dim;
        let vertical = ProductTable::new_unchecked(field, n, parse(&self.vertical)?, parse(&self.e)?).map_err(format_err)?;
        let horizontal = ProductTable::new_unchecked(field, n, parse(&self.horizontal)?, parse(&self.i)?).map_err(format_err)?;
        let d = DoubleAlgebra::new_unchecked(vertical, horizontal).map_err(format_err)?;
        Ok(match &self.labels {
            Some(l) => d.with_labels(l.clone()),
            None => d,
        })
    }
}

/// The check suites, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Base,
    Frobenius,
    Galois,
    Maschke,
    Antipode,
    Distributive,
    Hopf,
    All,
}

impl Suite {
    pub const ORDERED: [Suite; 8] =
        [Suite::Axioms, Suite::Base, Suite::Frobenius, Suite::Galois, Suite::Maschke, Suite::Antipode, Suite::Distributive, Suite::Hopf];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Base => "base",
            Suite::Frobenius => "frobenius",
            Suite::Galois => "galois",
            Suite::Maschke => "maschke",
            Suite::Antipode => "antipode",
            Suite::Distributive => "distributive",
            Suite::Hopf => "hopf",
            Suite::All => "all",
        }
    }

    /// Expands `all` and sorts into report order.
    pub fn expand(selected: &[Suite]) -> Vec<Suite> {
        let mut out: Vec<Suite> =
            if selected.is_empty() || selected.contains(&Suite::All) { Suite::ORDERED.to_vec() } else { selected.to_vec() };
        out.sort();
        out.dedup();
        out
    }
}

fn axiom_report(d: &DoubleAlgebra) -> Report {
    let ax = d.check_axioms();
    let labels = d.labels();
    let mut rep = Report::new("axioms");
    for o in &ax.outcomes {
        match &o.witness {
            None => rep.check(o.axiom.to_string(), true),
            Some(w) => rep.check_with(
                o.axiom.to_string(),
                false,
                format!("fails at ({}, {}): [{}] ≠ [{}]", labels[w.a], labels[w.b], w.lhs.join(", "), w.rhs.join(", ")),
            ),
        };
    }
    rep.check("unit forms agree with base-map forms", ax.forms_agree());
    rep
}

fn precondition(title: &str, name: &str, detail: String) -> Report {
    let mut rep = Report::new(title);
    rep.check_with(name, false, detail);
    rep
}

/// Runs the selected suites in report order. Suites after a failed axiom check are replaced by a
/// failing precondition, as are suites whose preconditions (Frobenius, distributive) do not hold.
pub fn run_suites(d: &DoubleAlgebra, selected: &[Suite]) -> Vec<Report> {
    let suites = Suite::expand(selected);
    let valid = d.check_axioms().passed();
    let (frob_rep, fr) = if valid { frobenius_report(d) } else { (Report::new("frobenius"), None) };
    let mut out = Vec::new();
    for s in suites {
        let title = s.name();
        if s != Suite::Axioms && !valid {
            out.push(precondition(title, "instance is a double algebra", "the axiom suite fails".into()));
            continue;
        }
        let need_fr = |f: &dyn Fn(&Frobenius) -> Report| match &fr {
            Some(fr) => f(fr),
            None => precondition(title, "all four corners are Frobenius", "some base map has no dual basis".into()),
        };
        let rep = match s {
            Suite::Axioms => axiom_report(d),
            Suite::Base => d.check_base_lemmas(),
            Suite::Frobenius => {
                let mut rep = frob_rep.clone();
                if let Some(fr) = &fr {
                    // The unit formulas for the index elements presuppose the Galois identities.
                    if (1..=8).all(|k| fr.galois_identity_holds(k)) {
                        rep.absorb("index: ", fr.index_report());
                    } else {
                        rep.fact("index", "not compared: Galois identities fail");
                    }
                }
                rep
            }
            Suite::Galois => need_fr(&|fr| fr.galois_report()),
            Suite::Maschke => MaschkeReport::new(d).report(),
            Suite::Antipode => need_fr(&|fr| match fr.antipode_report() {
                Ok((rep, _)) => rep,
                Err(e) => precondition(title, "antipode equations are solvable", e.to_string()),
            }),
            Suite::Distributive => need_fr(&|fr| {
                let exists = solve_antipode(d).ok().flatten().is_some();
                distributive_report(fr, exists).0
            }),
            Suite::Hopf => need_fr(&hopf_suite),
            Suite::All => unreachable!("expanded"),
        };
        out.push(rep);
    }
    out
}

fn hopf_suite(fr: &Frobenius) -> Report {
    let mut rep = Report::new("hopf");
    let dist = check_distributivity(fr);
    if !rep.check("distributive", dist.distributive()) {
        return rep;
    }
    match extract_hopf_algebroids(fr) {
        Ok(h) => rep.absorb("", h.report),
        Err(e) => {
            rep.check_with("Hopf algebroids extracted", false, e.to_string());
        }
    }
    match hgd_round_trip(fr) {
        Ok(r) => rep.absorb("round trip: ", r),
        Err(e) => {
            rep.check_with("round trip", false, e.to_string());
        }
    }
    match frobenius_integrals(fr) {
        Ok(ic) => rep.absorb("integrals: ", ic.report),
        Err(e) => {
            rep.check_with("integrals", false, e.to_string());
        }
    }
    match pairings(fr) {
        Ok((_, r)) => rep.absorb("pairings: ", r),
        Err(e) => {
            rep.check_with("pairings", false, e.to_string());
        }
    }
    match takeuchi_double(fr) {
        Ok(td) => {
            rep.check("takeuchi: A×_B A satisfies the axioms", td.algebra.check_axioms().passed());
            rep.absorb("takeuchi: ", td.report);
        }
        Err(e) => {
            rep.check_with("takeuchi product", false, e.to_string());
        }
    }
    rep
}

fn antipode_rows(s: &AntipodeMap) -> Vec<Vec<String>> {
    s.matrix.row_vectors().iter().map(|r| strings(r)).collect()
}

fn base_dims(d: &DoubleAlgebra) -> BTreeMap<String, usize> {
    Corner::ALL.iter().map(|&c| (c.to_string(), d.base_ideal(c).dim())).collect()
}

/// Computes the expected-artifact block of a valid instance.
pub fn expected_artifacts(d: &DoubleAlgebra) -> Expected {
    let reports = run_suites(d, &[Suite::All]);
    Expected {
        antipode: solve_antipode(d).ok().flatten().map(|s| antipode_rows(&s)),
        base_dims: base_dims(d),
        suites: Suite::ORDERED.iter().zip(&reports).map(|(s, r)| (s.name().to_string(), r.passed())).collect(),
    }
}

fn compare_expected(d: &DoubleAlgebra, expected: &Expected, reports: &[Report]) -> Report {
    let mut rep = Report::new("expected");
    let antipode = solve_antipode(d).ok().flatten().map(|s| antipode_rows(&s));
    rep.check("antipode matches the recorded one", antipode == expected.antipode);
    rep.check("base ideal dimensions match", base_dims(d) == expected.base_dims);
    for r in reports {
        if let Some(&want) = expected.suites.get(&r.title) {
            rep.check_with(format!("{} verdict matches", r.title), r.passed() == want, format!("recorded {want}, got {}", r.passed()));
        }
    }
    rep
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    passed: bool,
    suites: &'a [Report],
}

/// `check`: returns the rendered output and the exit code (0 all pass, 1 some failure).
pub fn cmd_check(file: &InstanceFile, suites: &[Suite], json: bool, field: Option<Field>) -> Result<(String, i32), CliError> {
    let d = file.to_algebra(field)?;
    let mut reports = run_suites(&d, suites);
    let full = suites.is_empty() || suites.contains(&Suite::All);
    let same_field = field.is_none_or(|f| Some(f) == file.field().ok());
    if let (true, true, Some(exp)) = (full, same_field, &file.expected) {
        if d.check_axioms().passed() {
            let cmp = compare_expected(&d, exp, &reports);
            reports.push(cmp);
        }
    }
    let passed = reports.iter().all(Report::passed);
    let text = if json {
        let mut s = serde_json::to_string_pretty(&CheckOutput { passed, suites: &reports }).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut s: String = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
        let _ = writeln!(s, "\nverdict: {}", if passed { "PASS" } else { "FAIL" });
        s
    };
    Ok((text, if passed { 0 } else { 1 }))
}

/// Parameters for `construct`; which ones apply depends on the family.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct ConstructParams {
    /// Matrix size for `matrix`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Group for `hopf-group`: `cyclic:N`, `s3` or `trivial`.
    #[arg(long)]
    pub group: Option<String>,
    /// Group table file `{"order": n, "table": [...]}` for `hopf-group`.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Groupoid for `groupoid` and `wha`: `+`-separated terms `pair:N`, `cyclic:N`, `s3`, `trivial`.
    #[arg(long)]
    pub groupoid: Option<String>,
    /// Algebra for `commutative`: `split:N`, `dual-numbers` or `matrix:N`.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Extension for `frobext`: `trivial`, `trace:N`, `diagonal:N` or `s2-in-s3`.
    #[arg(long)]
    pub extension: Option<String>,
    /// Number of 0-cells for `doublecat`.
    #[arg(long)]
    pub points: Option<usize>,
    /// Horizontal preorder for `doublecat`, as `a>b` pairs separated by commas; reflexive pairs are implied.
    #[arg(long)]
    pub horizontal: Option<String>,
    /// Vertical preorder for `doublecat`.
    #[arg(long)]
    pub vertical: Option<String>,
    /// Source instance file for `takeuchi`.
    #[arg(long)]
    pub from: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Commutative,
    Matrix,
    Groupoid,
    Doublecat,
    Frobext,
    HopfGroup,
    Wha,
    Takeuchi,
}

fn params_err(msg: impl Into<String>) -> CliError {
    CliError::Params(msg.into())
}

fn rejected(e: impl fmt::Display) -> CliError {
    CliError::Rejected(e.to_string())
}

fn required<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| params_err(format!("--{flag} is required")))
}

fn number(text: &str) -> Result<usize, CliError> {
    text.parse().map_err(|_| params_err(format!("expected a number, got {text:?}")))
}

fn parse_group(spec: &str) -> Result<Group, CliError> {
    match spec.split_once(':') {
        Some(("cyclic", n)) => Ok(Group::cyclic(number(n)?)),
        None if spec == "s3" => Ok(Group::symmetric3()),
        None if spec == "trivial" => Ok(Group::trivial()),
        _ => Err(params_err(format!("unknown group {spec:?}"))),
    }
}

fn parse_groupoid(spec: &str) -> Result<Groupoid, CliError> {
    let mut out: Option<Groupoid> = None;
    for term in spec.split('+') {
        let g = match term.trim().split_once(':') {
            Some(("pair", n)) => Groupoid::pair(number(n)?),
            _ => Groupoid::from_group(&parse_group(term.trim())?),
        };
        out = Some(match out {
            Some(acc) => acc.disjoint_union(&g),
            None => g,
        });
    }
    out.ok_or_else(|| params_err("empty groupoid"))
}

#[derive(Deserialize)]
struct GroupTableFile {
    order: usize,
    table: Vec<usize>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

fn load_group_table(path: &Path) -> Result<Group, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    let t: GroupTableFile = serde_json::from_str(&text).map_err(|e| params_err(format!("group table: {e}")))?;
    let labels = t.labels.unwrap_or_else(|| (0..t.order).map(|g| format!("g{g}")).collect());
    Group::from_table(t.order, t.table, labels).map_err(rejected)
}

fn parse_preorder(points: usize, spec: &Option<String>) -> Result<Vec<(usize, usize)>, CliError> {
    let mut pairs: Vec<(usize, usize)> = (0..points).map(|x| (x, x)).collect();
    for item in spec.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('>').ok_or_else(|| params_err(format!("expected a>b, got {item:?}")))?;
        let pair = (number(a.trim())?, number(b.trim())?);
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    }
    Ok(pairs)
}

/// Builds a validated double algebra of the given family.
pub fn construct(family: Family, params: &ConstructParams, field: Field) -> Result<DoubleAlgebra, CliError> {
    match family {
        Family::Matrix => matrix_double_over(field, required(&params.n, "n")?).map_err(rejected),
        Family::Commutative => {
            let spec = required(&params.algebra, "algebra")?;
            let (table, labels) = match spec.split_once(':') {
                Some(("split", n)) => (split_algebra(field, number(n)?), None),
                Some(("matrix", n)) => {
                    let n = number(n)?;
                    (matrix_algebra(field, n), Some(matrix_labels(n)))
                }
                None if spec == "dual-numbers" => (dual_numbers(field), None),
                _ => return Err(params_err(format!("unknown algebra {spec:?}"))),
            };
            let d = commutative_double(table.map_err(rejected)?).map_err(rejected)?;
            Ok(match labels {
                Some(l) => d.with_labels(l),
                None => d,
            })
        }
        Family::Groupoid => groupoid_double(&parse_groupoid(&required(&params.groupoid, "groupoid")?)?, field).map_err(rejected),
        Family::HopfGroup => {
            let g = match (&params.table, &params.group) {
                (Some(path), _) => load_group_table(path)?,
                (None, Some(spec)) => parse_group(spec)?,
                (None, None) => return Err(params_err("--group or --table is required")),
            };
            hopf_group_double(&g, field).map_err(rejected)
        }
        Family::Wha => {
            let g = parse_groupoid(&required(&params.groupoid, "groupoid")?)?;
            let w = wha_double(&WeakHopfData::groupoid(&g, field).map_err(rejected)?).map_err(rejected)?;
            Ok(w.algebra.with_labels(g.labels().to_vec()))
        }
        Family::Frobext => {
            let spec = required(&params.extension, "extension")?;
            let ext = match spec.split_once(':') {
                Some(("trace", n)) => FrobeniusExtension::matrix_trace(field, number(n)?),
                Some(("diagonal", n)) => FrobeniusExtension::matrix_diagonal(field, number(n)?),
                None if spec == "trivial" => Ok(FrobeniusExtension::trivial(field)),
                None if spec == "s2-in-s3" => FrobeniusExtension::group_subgroup(&Group::symmetric3(), &[0, 1], field),
                _ => return Err(params_err(format!("unknown extension {spec:?}"))),
            }
            .map_err(rejected)?;
            Ok(frobenius_extension_double(&ext).map_err(rejected)?.algebra)
        }
        Family::Doublecat => {
            let points = params.points.unwrap_or(1);
            let h = parse_preorder(points, &params.horizontal)?;
            let v = parse_preorder(points, &params.vertical)?;
            let dc = DoubleCategory::from_preorders(points, &h, &v).map_err(rejected)?;
            let outcome = double_category_double(&dc, field).map_err(rejected)?;
            match outcome.algebra {
                Some(d) => Ok(d),
                None => {
                    let failing = outcome.axioms.failing().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
                    Err(CliError::Rejected(format!(
                        "not a double algebra ({failing} fail); non-invertible 1-cells: {}",
                        outcome.non_invertible.join(", ")
                    )))
                }
            }
        }
        Family::Takeuchi => {
            let path = required(&params.from, "from")?;
            let source = InstanceFile::load(&path)?.to_algebra(Some(field))?;
            if !source.check_axioms().passed() {
                return Err(CliError::Rejected("the source instance is not a double algebra".into()));
            }
            let fr = Frobenius::new(&source).map_err(rejected)?;
            Ok(takeuchi_double(&fr).map_err(rejected)?.algebra)
        }
    }
}

/// `construct`: a validated instance file with its expected-artifact block.
pub fn cmd_construct(family: Family, params: &ConstructParams, field: Field) -> Result<InstanceFile, CliError> {
    let d = construct(family, params, field)?;
    let mut file = InstanceFile::from_algebra(&d);
    file.expected = Some(expected_artifacts(&d));
    Ok(file)
}

/// The one-page property summary printed by `report`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dossier {
    pub field: String,
    pub dimension: usize,
    /// `None` when the axioms hold, otherwise the first failure.
    pub axiom_failure: Option<String>,
    pub base_dims: BTreeMap<String, usize>,
    pub connected: bool,
    pub coconnected: bool,
    pub frobenius_corners: Vec<String>,
    /// Failing Galois identities, when all corners are Frobenius.
    pub galois_failures: Option<Vec<String>>,
    /// Regularity witness `j` for `i` in V and for `e` in H.
    pub maschke: [Option<String>; 2],
    /// `S(b) = image` for each basis element.
    pub antipode: Option<Vec<String>>,
    /// Failing distributive laws, when Frobenius.
    pub distributive_failures: Option<Vec<String>>,
    pub index: Vec<String>,
    pub integrals: Vec<String>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn dossier(d: &DoubleAlgebra) -> Dossier {
    let ax = d.check_axioms();
    let labels = d.labels();
    let axiom_failure = ax.first_failure().map(|o| {
        let w = o.witness.as_ref().expect("failure has a witness");
        format!("{} fails at ({}, {})", o.axiom, labels[w.a], labels[w.b])
    });
    let mut out = Dossier {
        field: d.field().descriptor(),
        dimension: d.dim(),
        axiom_failure,
        base_dims: BTreeMap::new(),
        connected: false,
        coconnected: false,
        frobenius_corners: Vec::new(),
        galois_failures: None,
        maschke: [None, None],
        antipode: None,
        distributive_failures: None,
        index: Vec::new(),
        integrals: Vec::new(),
    };
    if out.axiom_failure.is_some() {
        return out;
    }
    out.base_dims = base_dims(d);
    let n = d.dim();
    let bt = d.base_ideal(Corner::Bottom).intersect(d.base_ideal(Corner::Top));
    let lr = d.base_ideal(Corner::Left).intersect(d.base_ideal(Corner::Right));
    out.connected = bt.dim() == 1 && bt.contains(d.i());
    out.coconnected = lr.dim() == 1 && lr.contains(d.e());
    out.frobenius_corners = Corner::ALL
        .iter()
        .filter(|&&c| crate::frobenius::solve_dual_basis(d, c).is_some())
        .map(|c| c.to_string())
        .collect();
    let m = MaschkeReport::new(d);
    out.maschke = [m.vertical.regular.clone(), m.horizontal.regular.clone()];
    out.antipode = solve_antipode(d).ok().flatten().map(|s| {
        (0..n).map(|k| format!("S({})={}", labels[k], d.render(&s.matrix.column(k)))).collect()
    });
    if let Ok(fr) = Frobenius::new(d) {
        out.galois_failures = Some((1..=8).filter(|&k| !fr.galois_identity_holds(k)).map(|k| format!("G{k}")).collect());
        let names = ["DB", "DL", "DT", "DR"];
        let dist = check_distributivity(&fr);
        out.distributive_failures =
            Some(dist.laws.iter().zip(names).filter(|(l, _)| !l.holds).map(|(_, name)| name.to_string()).collect());
        out.index = fr.index_elements().iter().map(|ix| format!("Ind Φ_{} = {}", ix.corner, d.render(&ix.from_dual_basis))).collect();
        if let Ok(ic) = frobenius_integrals(&fr) {
            out.integrals = ic.report.facts.iter().map(|(k, v)| format!("{k} {v}")).collect();
        }
    }
    out
}

impl fmt::Display for Dossier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "dimension: {}", self.dimension)?;
        if let Some(fail) = &self.axiom_failure {
            return writeln!(f, "double algebra: NO ({fail})");
        }
        writeln!(f, "double algebra: yes")?;
        let dims: Vec<String> = ["L", "R", "B", "T"].iter().map(|c| format!("{c} {}", self.base_dims[*c])).collect();
        writeln!(f, "base ideals: {}", dims.join(", "))?;
        writeln!(f, "connected: {}", yes_no(self.connected))?;
        writeln!(f, "coconnected: {}", yes_no(self.coconnected))?;
        let frob = if self.frobenius_corners.is_empty() { "none".to_string() } else { self.frobenius_corners.join(", ") };
        writeln!(f, "frobenius corners: {frob}")?;
        match &self.galois_failures {
            None => writeln!(f, "galois: n/a (not Frobenius)")?,
            Some(v) if v.is_empty() => writeln!(f, "galois: all eight identities hold")?,
            Some(v) => writeln!(f, "galois: {} fail", v.join(", "))?,
        }
        let maschke: Vec<String> = [("i", &self.maschke[0]), ("e", &self.maschke[1])]
            .iter()
            .map(|(u, j)| match j {
                Some(j) => format!("{u} regular (j = {j})"),
                None => format!("{u} not regular"),
            })
            .collect();
        writeln!(f, "maschke: {}", maschke.join("; "))?;
        match &self.antipode {
            Some(s) => writeln!(f, "antipode: yes ({})", s.join(", "))?,
            None => writeln!(f, "antipode: no")?,
        }
        match &self.distributive_failures {
            None => writeln!(f, "distributive: n/a (not Frobenius)")?,
            Some(v) if v.is_empty() => writeln!(f, "distributive: yes")?,
            Some(v) => writeln!(f, "distributive: no ({} fail)", v.join(", "))?,
        }
        if !self.index.is_empty() {
            writeln!(f, "index: {}", self.index.join(", "))?;
        }
        if !self.integrals.is_empty() {
            writeln!(f, "frobenius integrals: {}", self.integrals.join(", "))?;
        }
        Ok(())
    }
}

pub fn cmd_report(file: &InstanceFile, json: bool, field: Option<Field>) -> Result<(String, i32), CliError> {
    let d = file.to_algebra(field)?;
    let dos = dossier(&d);
    let code = if dos.axiom_failure.is_some() { 1 } else { 0 };
    let text = if json {
        let mut s = serde_json::to_string_pretty(&dos).expect("dossier serializes");
        s.push('\n');
        s
    } else {
        dos.to_string()
    };
    Ok((text, code))
}

#[derive(Debug, Parser)]
#[command(name = "dalg", about = "Exact checks and constructions for finite double algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field: `Q` or `Fp:<p>`. For `check` and `report`, reinterprets the file's scalars.
    #[arg(long, global = true)]
    pub field: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run check suites on an instance file.
    Check {
        path: PathBuf,
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
    },
    /// Build an instance of a family and write it as an instance file.
    Construct {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        params: ConstructParams,
    },
    /// Print the property dossier of an instance file.
    Report { path: PathBuf },
}

/// What the binary prints and the code it exits with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let field = cli.field.as_deref().map(Field::from_descriptor).transpose().map_err(|e| params_err(e.to_string()))?;
    let (text, code) = match &cli.command {
        Command::Check { path, suites } => cmd_check(&InstanceFile::load(path)?, suites, cli.json, field)?,
        Command::Report { path } => cmd_report(&InstanceFile::load(path)?, cli.json, field)?,
        Command::Construct { family, params } => {
            let file = cmd_construct(*family, params, field.unwrap_or(Field::Rational))?;
            (file.to_json(), 0)
        }
    };
    match &cli.out {
        Some(path) => {
            write_out(path, &text)?;
            Ok((format!("wrote {}\n", path.display()), code))
        }
        None => Ok((text, code)),
    }
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
