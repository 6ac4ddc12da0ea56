use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dehn::coloring::{fox_count_bruteforce, structure_count, ColoringKind, DEFAULT_ENUMERATION_CAP};
use dehn::goeritz::{goeritz_index, matrix_from_json, matrix_to_json, MatrixJsonError};
use dehn::intlattice::GroupDescriptor;
use dehn::shading::{checkerboard_graphs, Shade};
use dehn::{
    coloring_equivalent, dehn_count_bruteforce, dehn_count_linear, realize, smith_normal_form, ColoringError,
    ColoringReport, DiagramError, Error, IntMatrix, RealizationSpec, ShadedDiagram,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dehn", version, about = "Goeritz matrices and Dehn coloring groups of link diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complementary regions and the quadrant-to-region map.
    Regions(Common),
    /// Checkerboard shading, checkerboard graphs and Goeritz indices.
    Shade(Shaded),
    /// Goeritz matrix over the unshaded regions.
    Matrix {
        #[command(flatten)]
        shaded: Shaded,
        /// Append the zero block for extra shaded components.
        #[arg(long)]
        adjusted: bool,
    },
    /// Smith normal form of a matrix, or of a diagram's adjusted Goeritz matrix.
    Snf(Shaded),
    /// Dehn coloring group structure, with counts over Z/m.
    Colorings {
        #[command(flatten)]
        shaded: Shaded,
        #[arg(long, short)]
        modulus: Option<u64>,
        /// Also count by enumerating region colorings.
        #[arg(long, requires = "modulus")]
        bruteforce: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Fox coloring count over Z/m by enumerating arc colorings.
    Fox {
        #[command(flatten)]
        shaded: Shaded,
        #[arg(long, short)]
        modulus: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Diagram whose adjusted Goeritz matrix is diag(0, phi_1, ..., phi_n).
    Realize {
        /// Comma-separated factors, e.g. 0,3,3,1.
        #[arg(allow_hyphen_values = true)]
        phis: String,
        #[arg(long)]
        plain: bool,
    },
    /// Whether two diagrams have isomorphic Dehn coloring groups.
    Compare {
        first: String,
        second: String,
        #[arg(long)]
        plain: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Input file, or `-` for standard input.
    input: String,
    #[arg(long)]
    plain: bool,
}

#[derive(Args)]
struct Shaded {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    shading: u8,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Diagram(DiagramError::NonPlanar { .. }) => 3,
            Error::Coloring(ColoringError::CapExceeded { .. }) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        Error::from(e).into()
    }
}

impl From<MatrixJsonError> for Failure {
    fn from(e: MatrixJsonError) -> Self {
        Failure::input(format!("matrix: {e}"))
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
    }
}

fn load(s: &Shaded) -> Result<ShadedDiagram, Failure> {
    Ok(ShadedDiagram::parse(&read_input(&s.common.input)?, usize::from(s.shading))?)
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|v| Value::String(v.to_string())).collect())
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn descriptor_json(g: &GroupDescriptor) -> Value {
    json!({
        "free_rank": g.free_rank.to_string(),
        "torsion": strings(&g.torsion),
        "group": g.to_string(),
    })
}

fn matrix_plain(m: &IntMatrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        format!("{}x{} matrix\n", m.rows(), m.cols())
    } else {
        m.to_string()
    }
}

/// Output is either a JSON value or preformatted text.
enum Output {
    Json(Value),
    Text(String),
}

fn regions(c: &Common) -> Result<Output, Failure> {
    let sd = ShadedDiagram::parse(&read_input(&c.input)?, 0)?;
    let rm = &sd.regions;
    if c.plain {
        let mut out = format!("{} regions, unbounded region {}\n", rm.region_count(), rm.unbounded_region());
        for q in 0..rm.crossing_count() {
            out += &format!("{}: {}\n", sd.diagram.crossings()[q], joined(rm.quadrants(q)));
        }
        for &(inside, outside) in rm.circle_regions() {
            out += &format!("O: {inside} in {outside}\n");
        }
        return Ok(Output::Text(out));
    }
    Ok(Output::Json(json!({
        "crossings": sd.diagram.crossing_count().to_string(),
        "regions": rm.region_count().to_string(),
        "unbounded": rm.unbounded_region().to_string(),
        "quadrants": (0..rm.crossing_count()).map(|c| strings(rm.quadrants(c))).collect::<Vec<_>>(),
        "circles": rm.circle_regions().iter().map(|&(i, o)| strings([i, o])).collect::<Vec<_>>(),
        "components": rm.components().iter().map(strings).collect::<Vec<_>>(),
    })))
}

fn shade(s: &Shaded) -> Result<Output, Failure> {
    let sd = load(s)?;
    let (rm, sh) = (&sd.regions, &sd.shading);
    let (shaded_graph, unshaded_graph) = checkerboard_graphs(rm, sh);
    let eta: Vec<i32> = (0..rm.crossing_count()).map(|c| goeritz_index(rm, sh, c)).collect();
    if s.common.plain {
        return Ok(Output::Text(format!(
            "shaded: {}\nunshaded: {}\nshaded components: {}\ngoeritz index: {}\n",
            joined(sh.regions_with(Shade::Shaded)),
            joined(sh.regions_with(Shade::Unshaded)),
            shaded_graph.component_count,
            joined(&eta),
        )));
    }
    let edges = |g: &dehn::CheckerboardGraph| g.edges.iter().map(|&(a, b)| strings([a, b])).collect::<Vec<_>>();
    Ok(Output::Json(json!({
        "shading": sh.index().to_string(),
        "shaded": strings(sh.regions_with(Shade::Shaded)),
        "unshaded": strings(sh.regions_with(Shade::Unshaded)),
        "shaded_graph": { "edges": edges(&shaded_graph), "components": shaded_graph.component_count.to_string() },
        "unshaded_graph": { "edges": edges(&unshaded_graph), "components": unshaded_graph.component_count.to_string() },
        "goeritz_index": strings(&eta),
    })))
}

fn matrix(s: &Shaded, adjusted: bool) -> Result<Output, Failure> {
    let g = load(s)?.goeritz();
    let m = if adjusted { &g.adjusted } else { &g.matrix };
    if s.common.plain {
        return Ok(Output::Text(matrix_plain(m)));
    }
    Ok(Output::Json(matrix_to_json(m)))
}

/// Accepts a matrix JSON array, an object with an `adjusted` matrix, text
/// with a line holding a matrix JSON array, or a diagram.
fn snf_input(text: &str, shading: usize) -> Result<IntMatrix, Failure> {
    if let Ok(v) = serde_json::from_str::<Value>(text) {
        return match &v {
            Value::Object(o) => {
                let m = o.get("adjusted").ok_or_else(|| Failure::input("object has no \"adjusted\" matrix"))?;
                Ok(matrix_from_json(m)?)
            }
            _ => Ok(matrix_from_json(&v)?),
        };
    }
    if let Some(line) = text.lines().map(str::trim).find(|l| l.starts_with('[')) {
        return Ok(dehn::goeritz::matrix_from_json_str(line)?);
    }
    Ok(ShadedDiagram::parse(text, shading)?.goeritz().adjusted)
}

fn snf(s: &Shaded) -> Result<Output, Failure> {
    let m = snf_input(&read_input(&s.common.input)?, usize::from(s.shading))?;
    let r = smith_normal_form(&m);
    let report = ColoringReport::from_factors(r.phi.clone());
    let cokernel = GroupDescriptor::from_factors(&r.phi, false);
    if s.common.plain {
        return Ok(Output::Text(format!(
            "phi: {}\nrank: {}\ncokernel: {}\ndehn: {}\n",
            joined(&r.phi),
            r.rank,
            cokernel.integer_group(),
            report.dehn
        )));
    }
    Ok(Output::Json(json!({
        "rows": m.rows().to_string(),
        "cols": m.cols().to_string(),
        "phi": strings(&r.phi),
        "rank": r.rank.to_string(),
        "cokernel": cokernel.integer_group(),
        "dehn": descriptor_json(&report.dehn),
        "fox": descriptor_json(&report.fox),
        "u1": matrix_to_json(&r.u1),
        "u2": matrix_to_json(&r.u2),
    })))
}

fn colorings(s: &Shaded, modulus: Option<u64>, bruteforce: bool, cap: usize) -> Result<Output, Failure> {
    let sd = load(s)?;
    let report = sd.report();
    let mut out = json!({
        "shading": sd.shading.index().to_string(),
        "phi": strings(&report.phi),
        "dehn": descriptor_json(&report.dehn),
        "fox": descriptor_json(&report.fox),
    });
    let mut text = format!("phi: {}\ndehn: {}\nfox: {}\n", joined(&report.phi), report.dehn, report.fox);
    if let Some(m) = modulus {
        let mb = BigUint::from(m);
        let linear = dehn_count_linear(&sd.regions, m)?;
        let dehn_order = structure_count(&report, &mb, ColoringKind::Dehn);
        let fox_order = structure_count(&report, &mb, ColoringKind::Fox);
        out["modulus"] = json!(m.to_string());
        out["dehn_order_mod_m"] = json!(dehn_order.to_string());
        out["fox_order_mod_m"] = json!(fox_order.to_string());
        out["linear"] = json!(linear.to_string());
        text += &format!("Z/{m}: dehn {dehn_order}, fox {fox_order}, linear {linear}\n");
        if bruteforce {
            let count = dehn_count_bruteforce(&sd.regions, m, cap)?;
            out["bruteforce"] = json!(count.to_string());
            text += &format!("enumeration: {count}\n");
        }
    }
    if s.common.plain {
        return Ok(Output::Text(text));
    }
    Ok(Output::Json(out))
}

fn fox(s: &Shaded, m: u64, cap: usize) -> Result<Output, Failure> {
    let sd = load(s)?;
    let count = fox_count_bruteforce(&sd.diagram, m, cap)?;
    let predicted = structure_count(&sd.report(), &BigUint::from(m), ColoringKind::Fox);
    if s.common.plain {
        return Ok(Output::Text(format!("Z/{m}: fox {count}, predicted {predicted}\n")));
    }
    Ok(Output::Json(json!({
        "modulus": m.to_string(),
        "arcs": dehn::coloring::arcs(&sd.diagram).arc_count.to_string(),
        "bruteforce": count.to_string(),
        "predicted": predicted.to_string(),
    })))
}

fn realize_cmd(phis: &str, plain: bool) -> Result<Output, Failure> {
    let spec = RealizationSpec::parse(phis).map_err(|e| Failure::input(format!("factor list {phis:?}: {e}")))?;
    let r = realize(&spec);
    let matrix = matrix_to_json(&r.goeritz.adjusted);
    if plain {
        return Ok(Output::Text(format!("{}\n{}\n", r.diagram, matrix)));
    }
    Ok(Output::Json(json!({
        "diagram": r.diagram.to_string(),
        "shading": r.shading.to_string(),
        "adjusted": matrix,
    })))
}

fn compare(first: &str, second: &str, plain: bool) -> Result<Output, Failure> {
    let a = read_input(first)?;
    let b = read_input(second)?;
    let g = |text: &str, i: usize| -> Result<_, Failure> { Ok(ShadedDiagram::parse(text, i)?.goeritz()) };
    let (a0, a1, b0, b1) = (g(&a, 0)?, g(&a, 1)?, g(&b, 0)?, g(&b, 1)?);
    let shading0 = coloring_equivalent(&a0, &b0);
    let shading1 = coloring_equivalent(&a1, &b1);
    if plain {
        let verdict = if shading0 { "equivalent" } else { "not equivalent" };
        return Ok(Output::Text(format!("{verdict}\nshading 0: {shading0}\nshading 1: {shading1}\n")));
    }
    Ok(Output::Json(json!({
        "equivalent": shading0,
        "shading0": shading0,
        "shading1": shading1,
    })))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Regions(c) => regions(&c),
        Command::Shade(s) => shade(&s),
        Command::Matrix { shaded, adjusted } => matrix(&shaded, adjusted),
        Command::Snf(s) => snf(&s),
        Command::Colorings { shaded, modulus, bruteforce, cap } => colorings(&shaded, modulus, bruteforce, cap),
        Command::Fox { shaded, modulus, cap } => fox(&shaded, modulus, cap),
        Command::Realize { phis, plain } => realize_cmd(&phis, plain),
        Command::Compare { first, second, plain } => compare(&first, &second, plain),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Json(v)) => {
            let text = if v.is_array() { serde_json::to_string(&v) } else { serde_json::to_string_pretty(&v) };
            println!("{}", text.expect("serializable"));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("dehn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
