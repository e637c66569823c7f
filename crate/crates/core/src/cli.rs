//! The `qdb` command line: classification, W-sets, constructions,
//! verification sweeps and searches, all as plain-text batch operations.
//!
//! Exit codes: 0 on a clean run, 1 when `verify` emits a counterexample,
//! 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::balance::{classify, w_partition};
use crate::constructions::{
    complete_bipartite, complete_graph, complete_with_pendants, cycle, empty_graph, g1, g2, g3, g4, g5, h_graph,
    incidence_k4, path, star, HGraphSpec, Labeled, QuasiFamily,
};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, Graph};
use crate::graph6::{parse_graph6, to_graph6};
use crate::verification::{
    check_bipartite_theorem, check_corona, check_edge_removal_all, check_families, check_hgraph_characterization,
    check_pendant_proposition, check_tensor, check_transmission_regular, count, findings_text, read_graph6_list,
    search_conjecture, search_problem_biregular, search_problem_edge_transitive, EnumerationScope, Finding, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qdb", version, about = "Quasi-(lambda,n)-distance-balanced graph analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify every input graph at distance n.
    Classify(ClassifyArgs),
    /// Print W_u, W_v and the equidistant set of a vertex pair.
    Wsets(WsetsArgs),
    /// Build a named construction and print it as graph6.
    Construct(ConstructArgs),
    /// Run an exhaustive check; exit 1 if any counterexample is found.
    Verify(VerifyArgs),
    /// Run an open-ended search; always exits 0.
    Search(SearchArgs),
    /// Describe the input and output formats.
    Formats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Input file; standard input when omitted.
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Overrides detection by file extension and content.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct WsetsArgs {
    pub u: usize,
    pub v: usize,
    /// Graph given inline as graph6.
    #[arg(long, conflicts_with = "input")]
    pub graph: Option<String>,
    /// Input file holding one graph; standard input when neither is given.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Empty,
    Complete,
    Cycle,
    Path,
    Star,
    #[value(name = "kbip", alias = "complete-bipartite")]
    CompleteBipartite,
    #[value(name = "k4-incidence")]
    K4Incidence,
    G1,
    G2,
    G3,
    G4,
    G5,
    Hgraph,
    Pendants,
    Fig7,
    Fig8,
    Fig9,
    #[value(name = "even", alias = "fig10")]
    Even,
    Fig11,
    #[value(name = "odd", alias = "fig12")]
    Odd,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Number of pendants, attached to vertices 0..roots.
    #[arg(long, conflicts_with = "root_list")]
    pub roots: Option<usize>,
    /// Explicit comma-separated pendant roots.
    #[arg(long, value_delimiter = ',')]
    pub root_list: Option<Vec<usize>>,
    /// H-graph core: k4-incidence, q3, cN (even cycle), crownN, ka,b, or
    /// g6:<graph6>.
    #[arg(long)]
    pub core: Option<String>,
    /// Use the core's other colour class as the side joined to A.
    #[arg(long)]
    pub swap: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    BipartiteTheorem,
    EdgeRemoval,
    Corona,
    Tensor,
    PendantProposition,
    HGraph,
    Families,
    TransmissionRegular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchTarget {
    Conjecture,
    Biregular,
    EdgeTransitive,
}

#[derive(Args, Debug, Clone)]
pub struct ScopeArgs {
    /// Largest order enumerated (largest factor order for corona/tensor).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Worker threads; 0 uses every core. Never changes the output.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Findings file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// graph6 list replacing in-process enumeration.
    #[arg(long)]
    pub ingest: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: CheckName,
    #[command(flatten)]
    pub scope: ScopeArgs,
    /// Largest pad size m, k for the h-graph sweep.
    #[arg(long, default_value_t = 4)]
    pub max_pad: usize,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(value_enum)]
    pub target: SearchTarget,
    #[command(flatten)]
    pub scope: ScopeArgs,
}

/// Parses the process arguments and runs the command, returning the exit
/// code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(cli, &mut out);
    let _ = out.flush();
    code
}

pub fn run(cli: Cli, out: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Wsets(a) => cmd_wsets(&a, out),
        Command::Construct(a) => cmd_construct(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Search(a) => cmd_search(&a, out),
        Command::Formats => write_out(out, FORMATS).map(|_| EXIT_OK),
    };
    result.unwrap_or_else(|msg| {
        eprintln!("error: {msg}");
        EXIT_USAGE
    })
}

type CmdResult = std::result::Result<i32, String>;

fn write_out(out: &mut dyn Write, s: &str) -> std::result::Result<(), String> {
    out.write_all(s.as_bytes()).map_err(|e| format!("write failed: {e}"))
}

fn read_input(input: Option<&Path>) -> std::result::Result<String, String> {
    match input {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(s)
        }
    }
}

/// Explicit flag, then extension, then content: an edge list starts with a
/// bare vertex count, which is never valid graph6.
fn detect_format(explicit: Option<Format>, path: Option<&Path>, text: &str) -> Format {
    if let Some(f) = explicit {
        return f;
    }
    match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => return Format::Graph6,
        Some("el" | "edges" | "edgelist") => return Format::Edgelist,
        _ => {}
    }
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        Some(l) if l.parse::<usize>().is_ok() => Format::Edgelist,
        _ => Format::Graph6,
    }
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.n == 0 {
        return Err(Error::ZeroDistance.to_string());
    }
    let text = read_input(a.input.as_deref())?;
    let mut bad_input = false;
    let mut report = String::new();
    let mut emit = |label: String, g: &Graph| {
        report.push_str(&format!("# {label}\n"));
        match classify(g, a.n) {
            Ok(r) => report.push_str(&r.to_string()),
            Err(e) => report.push_str(&format!("error: {e}\n")),
        }
    };
    match detect_format(a.format, a.input.as_deref(), &text) {
        Format::Edgelist => match parse_edge_list(&text) {
            Ok(g) => emit(format!("edgelist order={}", g.order()), &g),
            Err(e) => {
                eprintln!("error: {e}");
                bad_input = true;
            }
        },
        Format::Graph6 => {
            for (i, line) in text.lines().enumerate() {
                let t = line.trim();
                if t.is_empty() || t.starts_with('#') {
                    continue;
                }
                match parse_graph6(t) {
                    Ok(g) => emit(format!("line {} {t}", i + 1), &g),
                    Err(e) => {
                        eprintln!("error: line {}: {e}", i + 1);
                        bad_input = true;
                    }
                }
            }
        }
    }
    write_out(out, &report)?;
    Ok(if bad_input { EXIT_USAGE } else { EXIT_OK })
}

fn single_graph(
    graph: Option<&str>,
    input: Option<&Path>,
    format: Option<Format>,
) -> std::result::Result<Graph, String> {
    if let Some(s) = graph {
        return parse_graph6(s.trim()).map_err(|e| e.to_string());
    }
    let text = read_input(input)?;
    match detect_format(format, input, &text) {
        Format::Edgelist => parse_edge_list(&text).map_err(|e| e.to_string()),
        Format::Graph6 => read_graph6_list(&text)
            .map_err(|e| e.to_string())?
            .into_iter()
            .next()
            .ok_or_else(|| "no graph in input".to_string()),
    }
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn cmd_wsets(a: &WsetsArgs, out: &mut dyn Write) -> CmdResult {
    let g = single_graph(a.graph.as_deref(), a.input.as_deref(), a.format)?;
    let d = DistanceMatrix::new(&g).map_err(|e| e.to_string())?;
    let p = w_partition(&g, &d, a.u, a.v).map_err(|e| e.to_string())?;
    write_out(
        out,
        &format!(
            "Wu={} Wv={} eq={}\n|Wu|={} |Wv|={} |eq|={} dist={}\n",
            set(&p.closer_to_u),
            set(&p.closer_to_v),
            set(&p.equidistant),
            p.closer_to_u.len(),
            p.closer_to_v.len(),
            p.equidistant.len(),
            p.n
        ),
    )?;
    Ok(EXIT_OK)
}

fn need(v: Option<usize>, family: &str, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Construction(format!("{family} needs --{flag}")))
}

fn plain(g: Graph) -> Labeled {
    Labeled { graph: g, blocks: Vec::new(), cliques: Vec::new() }
}

/// Resolves an H-graph core name.
pub fn parse_core(name: &str) -> Result<Graph> {
    let bad = || Error::Construction(format!("unknown core {name:?}"));
    let lower = name.to_ascii_lowercase();
    if let Some(g6) = name.strip_prefix("g6:") {
        return parse_graph6(g6);
    }
    match lower.as_str() {
        "k4-incidence" | "incidence-k4" => return Ok(incidence_k4()),
        "q3" => {
            let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(u, v)| u < v);
            return Graph::from_edges(8, edges);
        }
        _ => {}
    }
    if let Some(rest) = lower.strip_prefix("crown") {
        let n: usize = rest.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(Error::Construction(format!("crown needs at least 2 vertices per side, got {n}")));
        }
        let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
        return Graph::from_edges(2 * n, edges);
    }
    if let Some(rest) = lower.strip_prefix('c') {
        let n: usize = rest.parse().map_err(|_| bad())?;
        return cycle(n);
    }
    if let Some(rest) = lower.strip_prefix('k') {
        let (a, b) = rest.split_once(',').ok_or_else(bad)?;
        return complete_bipartite(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    }
    Err(bad())
}

/// Builds the construction named by `a`.
pub fn build_family(a: &ConstructArgs) -> Result<Labeled> {
    let name = a.family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let name = name.as_str();
    let (m, n, d, k, p, q) = (
        || need(a.m, name, "m"),
        || need(a.n, name, "n"),
        || need(a.d, name, "d"),
        || need(a.k, name, "k"),
        || need(a.p, name, "p"),
        || need(a.q, name, "q"),
    );
    Ok(match a.family {
        Family::Empty => plain(empty_graph(m()?)?),
        Family::Complete => plain(complete_graph(q()?)?),
        Family::Cycle => plain(cycle(q()?)?),
        Family::Path => plain(path(q()?)?),
        Family::Star => plain(star(q()?)?),
        Family::CompleteBipartite => plain(complete_bipartite(m()?, n()?)?),
        Family::K4Incidence => plain(incidence_k4()),
        Family::G1 => g1(m()?, n()?)?,
        Family::G2 => g2(m()?, n()?)?,
        Family::G3 => g3(m()?, n()?, d()?)?,
        Family::G4 => g4(),
        Family::G5 => g5(),
        Family::Hgraph => {
            let core = parse_core(a.core.as_deref().ok_or_else(|| Error::Construction("hgraph needs --core".into()))?)?;
            let mut spec = HGraphSpec::new(m()?, core, k()?);
            if a.swap {
                spec = spec.swapped();
            }
            h_graph(&spec)?
        }
        Family::Pendants => {
            let roots: Vec<usize> = match (&a.root_list, a.roots) {
                (Some(list), _) => list.clone(),
                (None, Some(r)) => (0..r).collect(),
                (None, None) => return Err(Error::Construction("pendants needs --roots or --root-list".into())),
            };
            complete_with_pendants(q()?, &roots)?
        }
        Family::Fig7 => QuasiFamily::Fig7 { n: n()?, d: d()?, m: m()? }.build()?,
        Family::Fig8 => QuasiFamily::Fig8 { n: n()?, d: d()?, m: m()? }.build()?,
        Family::Fig9 => QuasiFamily::Fig9 { n: n()?, m: m()? }.build()?,
        Family::Even => QuasiFamily::Even { k: k()?, n: n()?, m: m()? }.build()?,
        Family::Fig11 => QuasiFamily::Odd { k: 2, p: p()?, n: n()?, m: m()? }.build()?,
        Family::Odd => QuasiFamily::Odd { k: k()?, p: p()?, n: n()?, m: m()? }.build()?,
    })
}

fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let l = build_family(a).map_err(|e| e.to_string())?;
    let g6 = to_graph6(&l.graph).map_err(|e| e.to_string())?;
    write_out(out, &format!("{g6}\n# {}\n", l.metadata()))?;
    Ok(EXIT_OK)
}

fn scope_for(s: &ScopeArgs, default_max: usize) -> Result<EnumerationScope> {
    let mut scope = EnumerationScope::up_to(s.max_n.unwrap_or(default_max));
    if let Some(p) = &s.ingest {
        let text =
            fs::read_to_string(p).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", p.display())))?;
        scope = scope.with_ingest(read_graph6_list(&text)?);
    }
    scope.validate()?;
    Ok(scope)
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> std::result::Result<T, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
    Ok(pool.install(f))
}

fn emit_findings(
    findings: &[Finding],
    label: &str,
    s: &ScopeArgs,
    out: &mut dyn Write,
) -> std::result::Result<(), String> {
    let text = findings_text(findings);
    match &s.output {
        Some(p) => fs::write(p, &text).map_err(|e| format!("cannot write {}: {e}", p.display()))?,
        None => write_out(out, &text)?,
    }
    eprintln!(
        "{label}: {} findings, {} confirmed, {} counterexample, {} mismatch",
        findings.len(),
        count(findings, Verdict::Confirmed),
        count(findings, Verdict::Counterexample),
        count(findings, Verdict::Mismatch)
    );
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let s = &a.scope;
    let run = || -> Result<Vec<Finding>> {
        match a.check {
            CheckName::BipartiteTheorem => check_bipartite_theorem(&scope_for(s, 8)?),
            CheckName::EdgeRemoval => check_edge_removal_all(&scope_for(s, 8)?),
            CheckName::TransmissionRegular => check_transmission_regular(&scope_for(s, 7)?),
            CheckName::PendantProposition => check_pendant_proposition(&scope_for(s, 7)?),
            CheckName::Corona => check_corona(s.max_n.unwrap_or(4)),
            CheckName::Tensor => check_tensor(s.max_n.unwrap_or(5)),
            CheckName::HGraph => check_hgraph_characterization(a.max_pad),
            CheckName::Families => check_families(),
        }
    };
    let findings = in_pool(s.jobs, run)?.map_err(|e| e.to_string())?;
    let label = a.check.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    emit_findings(&findings, &label, s, out)?;
    Ok(if count(&findings, Verdict::Counterexample) > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> CmdResult {
    let s = &a.scope;
    let scope = scope_for(s, 8).map_err(|e| e.to_string())?;
    let findings = in_pool(s.jobs, || match a.target {
        SearchTarget::Conjecture => search_conjecture(&scope),
        SearchTarget::Biregular => search_problem_biregular(&scope),
        SearchTarget::EdgeTransitive => search_problem_edge_transitive(&scope),
    })?
    .map_err(|e| e.to_string())?;
    let label = a.target.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    emit_findings(&findings, &label, s, out)?;
    Ok(EXIT_OK)
}

const FORMATS: &str = "\
input formats
  graph6     one graph per line in the short graph6 format (order <= 62);
             blank lines and lines starting with # are skipped
  edgelist   first line: vertex count; then one \"u v\" pair per line,
             vertices numbered from 0; # starts a comment
  detection  --format, else extension (.g6 .graph6 / .el .edges .edgelist),
             else an edge list if the first line is a bare integer

classification report
  n=<n> verdict=<balanced|quasi|unbalanced|no-pairs> lambda=<p/q|->
  then one line per pair at distance n: u v |Wu| |Wv| |eq|

findings (verify, search)
  check<TAB>graph6<TAB>confirmed|counterexample|mismatch<TAB>detail
  detail starts with the graph's classification header (or disconnected),
  then \"; \" and the clause checked; lines are sorted and deduplicated

construct
  graph6 line, then \"# blocks NAME=start..end ...\"

environment
  QDB_MAX_ORDER lowers the enumeration ceiling (default 10)
";

#[cfg(test)]
mod tests {
    use super::*;

    fn construct(args: &[&str]) -> Result<Labeled> {
        let mut full = vec!["qdb", "construct"];
        full.extend_from_slice(args);
        match Cli::try_parse_from(full).unwrap().command {
            Command::Construct(a) => build_family(&a),
            _ => unreachable!(),
        }
    }

    #[test]
    fn construct_examples() {
        assert_eq!(construct(&["g1", "--m", "3", "--n", "2"]).unwrap().graph.order(), 8);
        assert_eq!(construct(&["hgraph", "--m", "3", "--core", "k4-incidence", "--k", "2"]).unwrap().graph.order(), 15);
        assert_eq!(construct(&["pendants", "--q", "4", "--roots", "2"]).unwrap().graph.order(), 6);
        assert_eq!(construct(&["fig10", "--k", "2", "--n", "6", "--m", "5"]).unwrap().graph.order(), 21);
    }

    #[test]
    fn construct_errors_name_the_bound() {
        let e = construct(&["fig8", "--n", "5", "--d", "8", "--m", "2"]).unwrap_err().to_string();
        assert!(e.contains("m >= 3"), "{e}");
        let e = construct(&["g3", "--m", "3", "--n", "2"]).unwrap_err().to_string();
        assert!(e.contains("--d"), "{e}");
    }

    #[test]
    fn cores() {
        assert_eq!(parse_core("C6").unwrap().size(), 6);
        assert_eq!(parse_core("k2,3").unwrap().size(), 6);
        assert_eq!(parse_core("crown4").unwrap().size(), 12);
        assert_eq!(parse_core("q3").unwrap().size(), 12);
        assert!(parse_core("petersen").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format(None, None, "3\n0 1\n"), Format::Edgelist);
        assert_eq!(detect_format(None, None, "Bw\n"), Format::Graph6);
        assert_eq!(detect_format(None, Some(Path::new("x.g6")), "3\n"), Format::Graph6);
        assert_eq!(detect_format(Some(Format::Edgelist), None, "Bw"), Format::Edgelist);
    }
}
