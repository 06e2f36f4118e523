//! Command implementations. Each returns the text to print and an exit code,
//! or a [`CliError`] carrying its own exit code.

use std::fmt;

use num_bigint::BigInt;
use ppwb::dimer::{build_hex_graph, kasteleyn_count, pp_to_tiling, tiling_to_pp};
use ppwb::gogmagog::{asm_to_mt, conjecture_tables, mt_to_asm, Asm, OverlapConvention};
use ppwb::lgv::{box_det_count, paths_to_pp, pp_to_paths};
use ppwb::plane::{enumerate_box, parse_int_rows};
use ppwb::qseries::class_formula;
use ppwb::schur::{pp_box_to_ssyt, ssyt_to_pp_box};
use ppwb::symmetry::{branch_cells, class_gf, enumerate_class};
use ppwb::trace::{stanley_map, stanley_unmap};
use ppwb::{BoxDims, PlanePartition, QPolynomial, SymmetryClass, Weight};

use crate::suites::run_suite;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

pub const DEFAULT_MAX_CELLS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl fmt::Display) -> Self {
        CliError {
            code: EXIT_USAGE,
            msg: msg.to_string(),
        }
    }

    pub fn internal(msg: impl fmt::Display) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            msg: msg.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<ppwb::Error> for CliError {
    fn from(e: ppwb::Error) -> Self {
        CliError::usage(e)
    }
}

/// Printed output plus the exit code it should end with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: impl Into<String>) -> Self {
        Outcome {
            stdout: stdout.into(),
            code: EXIT_OK,
        }
    }
}

pub type CmdResult = std::result::Result<Outcome, CliError>;

/// Limit on branched cells for brute-force requests, from `PPWB_MAX_CELLS`.
pub fn max_cells_from_env() -> std::result::Result<usize, CliError> {
    match std::env::var("PPWB_MAX_CELLS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("PPWB_MAX_CELLS={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

pub fn parse_box(s: &str) -> std::result::Result<BoxDims, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected a,b,c but got `{s}`"));
    }
    let num = |t: &str| t.parse::<u32>().map_err(|_| format!("`{t}` is not a non-negative integer"));
    let (a, b, c) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
    BoxDims::new(a as usize, b as usize, c).map_err(|e| e.to_string())
}

/// How a box is given on the command line: explicitly, or through the
/// formula parameters `a` and `c`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DimsSpec {
    pub boxed: Option<BoxDims>,
    pub a: Option<usize>,
    pub c: Option<usize>,
}

/// Classes 1-5 read `--a A [--c C]` as `A x A x C` (`C` defaulting to `A`),
/// classes 6 and 7 as `A x A x 2C`, and classes 8-10 as the `2A` cube.
pub fn resolve_dims(class: u8, spec: DimsSpec) -> std::result::Result<BoxDims, CliError> {
    if let Some(d) = spec.boxed {
        if spec.a.is_some() || spec.c.is_some() {
            return Err(CliError::usage("give either --box or --a/--c, not both"));
        }
        return Ok(d);
    }
    let a = spec
        .a
        .ok_or_else(|| CliError::usage("missing box: give --box a,b,c or --a"))?;
    let dims = match class {
        1..=5 => BoxDims::new(a, a, spec.c.unwrap_or(a) as u32),
        6 | 7 => {
            let c = spec
                .c
                .ok_or_else(|| CliError::usage(format!("class {class} needs --c (box a x a x 2c)")))?;
            BoxDims::new(a, a, 2 * c as u32)
        }
        _ => {
            if spec.c.is_some() {
                return Err(CliError::usage(format!("class {class} takes only --a (box 2a x 2a x 2a)")));
            }
            BoxDims::cube(2 * a)
        }
    };
    Ok(dims?)
}

fn class(id: u8) -> std::result::Result<SymmetryClass, CliError> {
    Ok(SymmetryClass::new(id)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Formula,
    Brute,
    Lgv,
    Kasteleyn,
}

/// The weight each class's count formula is stated for.
fn default_weight(id: u8) -> Weight {
    if id == 4 {
        Weight::Orbit
    } else {
        Weight::Size
    }
}

fn guard(cls: SymmetryClass, dims: BoxDims, max_cells: usize) -> std::result::Result<(), CliError> {
    let cells = branch_cells(cls, dims);
    if cells > max_cells {
        return Err(CliError::usage(format!(
            "brute force in {dims} branches over {cells} cells, above the limit of {max_cells} (PPWB_MAX_CELLS)"
        )));
    }
    Ok(())
}

pub fn cmd_count(id: u8, spec: DimsSpec, method: CountMethod, max_cells: usize) -> CmdResult {
    let cls = class(id)?;
    let dims = resolve_dims(id, spec)?;
    if matches!(method, CountMethod::Lgv | CountMethod::Kasteleyn) && id != 1 {
        return Err(CliError::usage(format!("method {method:?} applies to class 1 only").to_lowercase()));
    }
    let formula = class_formula(cls, dims, default_weight(id)).map(|v| v.count());
    let value = match method {
        CountMethod::Formula => formula.clone()?,
        CountMethod::Brute => {
            guard(cls, dims, max_cells)?;
            let n = if id == 1 {
                enumerate_box(dims).count()
            } else {
                enumerate_class(cls, dims).count()
            };
            BigInt::from(n)
        }
        CountMethod::Lgv => box_det_count(dims),
        CountMethod::Kasteleyn => {
            kasteleyn_count(&build_hex_graph(dims).graph).map_err(CliError::internal)?
        }
    };
    if let Ok(f) = formula {
        if f != value {
            return Err(CliError::internal(format!(
                "cross-check failed for class {id} in {dims}: {method:?} gives {value}, formula gives {f}"
            )));
        }
    }
    Ok(Outcome::ok(format!("{value}\n")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightArg {
    Size,
    Half,
    Orbit,
}

/// `half` names the orbit weight for class 4, whose generating function is
/// not a polynomial in `|π|_0`.
fn weight_for(id: u8, w: WeightArg) -> std::result::Result<Weight, CliError> {
    let bad = || CliError::usage(format!("class {id} has no generating function for weight {w:?}").to_lowercase());
    match (id, w) {
        (1 | 3, WeightArg::Size) => Ok(Weight::Size),
        (2, WeightArg::Size) => Ok(Weight::Size),
        (2, WeightArg::Half) => Ok(Weight::HalfSize),
        (4, WeightArg::Orbit | WeightArg::Half) => Ok(Weight::Orbit),
        _ => Err(bad()),
    }
}

pub fn cmd_gf(
    id: u8,
    spec: DimsSpec,
    weight: Option<WeightArg>,
    brute: bool,
    at_q: Option<&BigInt>,
    max_cells: usize,
) -> CmdResult {
    if !(1..=4).contains(&id) {
        return Err(CliError::usage(format!(
            "class {id} has a count formula only; generating functions exist for classes 1-4"
        )));
    }
    let cls = class(id)?;
    let dims = resolve_dims(id, spec)?;
    let default = if id == 4 { WeightArg::Orbit } else { WeightArg::Size };
    let w = weight_for(id, weight.unwrap_or(default))?;
    let formula = class_formula(cls, dims, w)?;
    let formula = formula
        .as_poly()
        .cloned()
        .ok_or_else(|| CliError::internal("formula is not a polynomial"))?;
    let poly: QPolynomial = if brute {
        guard(cls, dims, max_cells)?;
        let p = class_gf(cls, dims, w);
        if p != formula {
            return Err(CliError::internal(format!(
                "cross-check failed for class {id} in {dims}: enumeration gives {p}, formula gives {formula}"
            )));
        }
        p
    } else {
        formula
    };
    let text = match at_q {
        Some(q) => poly.eval(q).to_string(),
        None => poly.to_string(),
    };
    Ok(Outcome::ok(format!("{text}\n")))
}

pub fn cmd_verify(suite: &str, json: bool) -> CmdResult {
    let report = run_suite(suite).ok_or_else(|| CliError::usage(format!("unknown suite `{suite}`")))?;
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&report.to_json()).map_err(CliError::internal)?;
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    Ok(Outcome {
        stdout,
        code: if report.pass() { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bijection {
    PpPaths,
    PpTiling,
    PpSsyt,
    Stanley,
    AsmMt,
}

fn parse_pp(text: &str) -> std::result::Result<PlanePartition, CliError> {
    text.parse::<PlanePartition>().map_err(|e| CliError::usage(format!("input: {e}")))
}

fn box_for(pp: &PlanePartition, dims: Option<BoxDims>) -> std::result::Result<BoxDims, CliError> {
    let d = dims.unwrap_or_else(|| pp.tight_box());
    if !pp.fits(d) {
        return Err(CliError::usage(format!("input does not fit in the {d} box")));
    }
    Ok(d)
}

fn roundtrip_line(ok: bool, out: &mut String) -> u8 {
    if ok {
        out.push_str("roundtrip: ok\n");
        EXIT_OK
    } else {
        out.push_str("roundtrip: MISMATCH\n");
        EXIT_FAILURE
    }
}

pub fn cmd_bijection(name: Bijection, input: &str, dims: Option<BoxDims>, roundtrip: bool) -> CmdResult {
    let mut out = String::new();
    let mut back_ok = true;
    match name {
        Bijection::PpPaths => {
            let pp = parse_pp(input)?;
            let d = box_for(&pp, dims)?;
            let f = pp_to_paths(&pp, d)?;
            out.push_str(&format!("# box {d}\n{f}"));
            if roundtrip {
                back_ok = paths_to_pp(&f, d).is_ok_and(|b| b == pp);
            }
        }
        Bijection::PpTiling => {
            let pp = parse_pp(input)?;
            let d = box_for(&pp, dims)?;
            let t = pp_to_tiling(&pp, d)?;
            out.push_str(&format!("# box {d}\n{t}"));
            if roundtrip {
                back_ok = tiling_to_pp(&t).is_ok_and(|b| b == pp);
            }
        }
        Bijection::PpSsyt => {
            let pp = parse_pp(input)?;
            let d = dims.ok_or_else(|| CliError::usage("pp-ssyt needs --box a,b,c"))?;
            let d = box_for(&pp, Some(d))?;
            let t = pp_box_to_ssyt(&pp, d)?;
            out.push_str(&t.to_string());
            if roundtrip {
                back_ok = ssyt_to_pp_box(&t, d).is_ok_and(|b| b == pp);
            }
        }
        Bijection::Stanley => {
            let pp = parse_pp(input)?;
            let m = stanley_map(&pp);
            out.push_str(&m.to_string());
            out.push_str(&format!(
                "# sum m = {}, sum (i+j-1) m = {}, size = {}, trace = {}\n",
                m.total(),
                m.weighted_sum(-1),
                pp.size(),
                pp.trace()
            ));
            if m.total() != pp.trace() || m.weighted_sum(-1) != pp.size() as i64 {
                return Err(CliError::internal("statistics not transported"));
            }
            if roundtrip {
                back_ok = stanley_unmap(&m).is_ok_and(|b| b == pp);
            }
        }
        Bijection::AsmMt => {
            let rows = parse_int_rows(input).map_err(|e| CliError::usage(format!("input: {e}")))?;
            let a = Asm::new(rows).map_err(|e| CliError::usage(format!("input: {e}")))?;
            let t = asm_to_mt(&a);
            out.push_str(&t.to_string());
            if roundtrip {
                back_ok = mt_to_asm(&t).is_ok_and(|b| b == a);
            }
        }
    }
    let code = if roundtrip { roundtrip_line(back_ok, &mut out) } else { EXIT_OK };
    Ok(Outcome { stdout: out, code })
}

/// Largest `m` accepted by the conjecture command.
pub const MAX_CONJECTURE_M: usize = 8;

pub fn cmd_conjecture(
    m: usize,
    n: usize,
    k: usize,
    convention: OverlapConvention,
    json: bool,
    max_cells: usize,
) -> CmdResult {
    if n == 0 || k == 0 || k > n {
        return Err(CliError::usage(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let cells = n * (n + 1) / 2 - (n - k) * (n - k + 1) / 2;
    if cells > max_cells || m > MAX_CONJECTURE_M {
        return Err(CliError::usage(format!(
            "({m},{n},{k}) trapezoids have {cells} cells; limits are {max_cells} cells (PPWB_MAX_CELLS) and m <= {MAX_CONJECTURE_M}"
        )));
    }
    let tables = conjecture_tables(m, n, k, convention)?;
    let equal = tables.equal();
    let stdout = if json {
        let mut v = tables.to_json();
        v["convention"] = serde_json::Value::from(convention.name());
        v["unswapped_equal"] = serde_json::Value::from(tables.unswapped_equal());
        let mut s = serde_json::to_string_pretty(&v).map_err(CliError::internal)?;
        s.push('\n');
        s
    } else {
        let mut s = format!("params m={m} n={n} k={k} convention={}\n", convention.name());
        s.push_str("magog (s maxima in first row, t minima):\n");
        for ((a, b), c) in tables.magog.entries() {
            s.push_str(&format!("  {a} {b} {c}\n"));
        }
        s.push_str("gog (s minima, t maxima in column k):\n");
        for ((a, b), c) in tables.gog.entries() {
            s.push_str(&format!("  {a} {b} {c}\n"));
        }
        s.push_str(&format!("totals magog={} gog={}\n", tables.magog.total(), tables.gog.total()));
        s.push_str(&format!(
            "unswapped comparison: {}\n",
            if tables.unswapped_equal() { "equal" } else { "different" }
        ));
        s.push_str(if equal { "EQUAL\n" } else { "NOT-EQUAL\n" });
        s
    };
    Ok(Outcome {
        stdout,
        code: if equal { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_argument() {
        assert_eq!(parse_box("2, 3,4").unwrap(), BoxDims::new(2, 3, 4).unwrap());
        assert!(parse_box("2,3").is_err());
        assert!(parse_box("2,x,3").is_err());
        assert!(parse_box("-1,2,3").is_err());
    }

    #[test]
    fn formula_parameters() {
        let spec = |a, c| DimsSpec { boxed: None, a: Some(a), c };
        assert_eq!(resolve_dims(2, spec(3, Some(1))).unwrap(), BoxDims::new(3, 3, 1).unwrap());
        assert_eq!(resolve_dims(4, spec(2, None)).unwrap(), BoxDims::cube(2).unwrap());
        assert_eq!(resolve_dims(6, spec(2, Some(3))).unwrap(), BoxDims::new(2, 2, 6).unwrap());
        assert_eq!(resolve_dims(10, spec(3, None)).unwrap(), BoxDims::cube(6).unwrap());
        assert_eq!(resolve_dims(7, spec(3, None)).unwrap_err().code, EXIT_USAGE);
        assert_eq!(resolve_dims(9, spec(1, Some(1))).unwrap_err().code, EXIT_USAGE);
        let both = DimsSpec {
            boxed: Some(BoxDims::cube(1).unwrap()),
            a: Some(1),
            c: None,
        };
        assert!(resolve_dims(1, both).is_err());
    }

    #[test]
    fn count_cross_checks_methods() {
        let spec = DimsSpec {
            boxed: Some(BoxDims::new(2, 2, 3).unwrap()),
            ..DimsSpec::default()
        };
        for m in [CountMethod::Formula, CountMethod::Brute, CountMethod::Lgv, CountMethod::Kasteleyn] {
            assert_eq!(cmd_count(1, spec, m, DEFAULT_MAX_CELLS).unwrap().stdout, "50\n");
        }
    }
}
