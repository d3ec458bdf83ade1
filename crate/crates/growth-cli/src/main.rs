//! `growth`: exact growth series of the right-angled structures attached to a
//! finite simple graph.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use growth::exact::RationalFunction;
use growth::geodesic::{
    branching_matrix_weak, diagonal_matrix, geodesic_gf_exact, geodesic_type_series,
};
use growth::link_regular::geodesic_gf_link_regular;
use growth::oracle::{count_elements_by_type, count_geodesics_by_type, DEFAULT_CAP};
use growth::spherical::{
    branching_matrix_strict, polynomial_json, spherical_gf_closed, spherical_gf_restricted,
    spherical_type_series, verify_functional_relations,
};
use growth::{
    clique_polynomial, enumerate_cliques, link_regular_profile, Graph, Int, IntMatrix,
    IntPolynomial, IntRational, IntSeries, Structure,
};

#[derive(Parser)]
#[command(name = "growth", version, about = "Exact growth series of trace monoids, right-angled Artin groups and right-angled Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StructureArg {
    Monoid,
    Raag,
    Racg,
}

impl From<StructureArg> for Structure {
    fn from(s: StructureArg) -> Structure {
        match s {
            StructureArg::Monoid => Structure::Monoid,
            StructureArg::Raag => Structure::Raag,
            StructureArg::Racg => Structure::Racg,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the clique polynomial of the graph.
    CliquePoly { graph: PathBuf },
    /// Spherical growth series (elements by length).
    Spherical {
        graph: PathBuf,
        #[arg(long, value_enum)]
        structure: StructureArg,
        /// Print the closed form (the default when --series is absent).
        #[arg(long)]
        rational: bool,
        /// Also expand to this order.
        #[arg(long, value_name = "N")]
        series: Option<usize>,
        /// Restrict to elements whose type lies in this comma-separated node
        /// set, e.g. "1,3".
        #[arg(long, value_name = "NODES")]
        allowed: Option<String>,
    },
    /// Geodesic growth series (reduced words by length).
    Geodesic {
        graph: PathBuf,
        #[arg(long, value_enum)]
        structure: StructureArg,
        #[arg(long)]
        rational: bool,
        #[arg(long, value_name = "N")]
        series: Option<usize>,
        /// Compute from the link-size profile; fails on graphs that are not
        /// link-regular.
        #[arg(long)]
        link_regular: bool,
    },
    /// Cross-check every formula against brute-force enumeration.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Print the link-size profile, or report that none exists.
    LinkRegular { graph: PathBuf },
    /// Check the functional relations between the three structures.
    Relations {
        graph: PathBuf,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let pretty = cli.pretty;
    match cli.command {
        Command::CliquePoly { graph } => {
            let g = load_graph(&graph)?;
            let p: IntPolynomial = clique_polynomial(&g);
            if pretty {
                println!("{p}");
            } else {
                println!("{}", polynomial_json(&p));
            }
            Ok(true)
        }
        Command::Spherical {
            graph,
            structure,
            rational,
            series,
            allowed,
        } => {
            let g = load_graph(&graph)?;
            let s = structure.into();
            let gf: IntRational = match &allowed {
                Some(list) => spherical_gf_restricted(&g, s, &parse_nodes(list)?)?,
                None => spherical_gf_closed(&g, s),
            };
            emit_function(&gf, rational, series, pretty)?;
            Ok(true)
        }
        Command::Geodesic {
            graph,
            structure,
            rational,
            series,
            link_regular,
        } => {
            let g = load_graph(&graph)?;
            let s = structure.into();
            let gf: IntRational = if link_regular {
                let profile = link_regular_profile(&g)
                    .ok_or_else(|| anyhow!("graph is not link-regular"))?;
                geodesic_gf_link_regular(&profile, s)?
            } else {
                geodesic_gf_exact(&g, s)
            };
            emit_function(&gf, rational, series, pretty)?;
            Ok(true)
        }
        Command::Verify { graph, depth } => {
            let g = load_graph(&graph)?;
            verify(&g, depth, oracle_cap()?)
        }
        Command::LinkRegular { graph } => {
            let g = load_graph(&graph)?;
            match link_regular_profile(&g) {
                Some(profile) => {
                    if pretty {
                        let ls: Vec<String> =
                            profile.link_sizes().iter().map(|l| l.to_string()).collect();
                        println!("m={} d={} L=[{}]", profile.m(), profile.d(), ls.join(","));
                    } else {
                        println!("{}", profile.to_json_string());
                    }
                }
                None => {
                    if pretty {
                        println!("not link-regular");
                    } else {
                        println!("\"not link-regular\"");
                    }
                }
            }
            Ok(true)
        }
        Command::Relations { graph, order } => {
            let g = load_graph(&graph)?;
            let report = verify_functional_relations::<Int>(&g, order);
            if pretty {
                if report.ok() {
                    println!("all functional relations hold through order {order}");
                } else {
                    for m in &report.mismatches {
                        println!(
                            "mismatch: {} at type {} order {}: {} vs {}",
                            m.relation.label(),
                            m.clique,
                            m.n,
                            m.lhs,
                            m.rhs
                        );
                    }
                }
            } else {
                println!("{}", report.to_json_string());
            }
            Ok(report.ok())
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let input = fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    Ok(Graph::parse(&input)?)
}

fn parse_nodes(list: &str) -> Result<Vec<usize>> {
    let mut nodes = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        nodes.push(
            part.parse::<usize>()
                .with_context(|| format!("bad node label `{part}` in --allowed"))?,
        );
    }
    Ok(nodes)
}

fn oracle_cap() -> Result<usize> {
    match std::env::var("GROWTH_CAP") {
        Ok(raw) => raw
            .parse::<usize>()
            .context("GROWTH_CAP must be a non-negative integer"),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Renders the rational form, the series, or both. With no flag the rational
/// form is printed; the series of the rational form is always its exact
/// expansion, so requesting both never disagrees.
fn emit_function(
    gf: &IntRational,
    rational: bool,
    series: Option<usize>,
    pretty: bool,
) -> Result<()> {
    let series_value: Option<IntSeries> = match series {
        Some(order) => Some(gf.expand(order)?),
        None => None,
    };
    let want_rational = rational || series.is_none();
    match (want_rational, series_value) {
        (true, None) => {
            if pretty {
                println!("{gf}");
            } else {
                println!("{}", gf.to_json_string());
            }
        }
        (false, Some(s)) => {
            if pretty {
                println!("{s}");
            } else {
                println!("{}", s.to_json_string());
            }
        }
        (true, Some(s)) => {
            if pretty {
                println!("rational: {gf}");
                println!("series:   {s}");
            } else {
                println!(
                    "{{\"rational\":{},\"series\":{}}}",
                    gf.to_json_string(),
                    s.to_json_string()
                );
            }
        }
        (false, None) => unreachable!("no-flag case defaults to rational"),
    }
    Ok(())
}

struct Checks {
    failures: usize,
}

impl Checks {
    fn record(&mut self, name: &str, ok: bool) {
        println!("{} {name}", if ok { "ok  " } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

/// Runs every oracle-vs-formula comparison plus the structural cross-checks,
/// printing one line per check.
fn verify(g: &Graph, depth: usize, cap: usize) -> Result<bool> {
    let mut checks = Checks { failures: 0 };
    let m = g.node_count();

    for s in Structure::ALL {
        let elements = count_elements_by_type::<Int>(g, s, depth, cap)
            .map_err(|e| anyhow!("{e} (set GROWTH_CAP to raise the limit)"))?;
        let words = count_geodesics_by_type::<Int>(g, s, depth, cap)
            .map_err(|e| anyhow!("{e} (set GROWTH_CAP to raise the limit)"))?;
        let spherical_table = spherical_type_series::<Int>(g, s, depth);
        let geodesic_table = geodesic_type_series::<Int>(g, s, depth);

        checks.record(
            &format!("{s}: per-type element counts match the branching recurrence (depth {depth})"),
            elements == spherical_table,
        );
        checks.record(
            &format!("{s}: per-type word counts match the weak branching recurrence (depth {depth})"),
            words == geodesic_table,
        );
        let closed = spherical_gf_closed::<Int>(g, s);
        checks.record(
            &format!("{s}: closed spherical form expands to the element totals"),
            closed.expand(depth)?.coeffs() == spherical_table.totals(),
        );
        let geodesic_gf = geodesic_gf_exact::<Int>(g, s);
        checks.record(
            &format!("{s}: geodesic series expands to the word totals"),
            geodesic_gf.expand(depth)?.coeffs() == geodesic_table.totals(),
        );
        if m <= 12 {
            let mut all_match = true;
            for bits in 0u32..(1 << m) {
                let allowed: Vec<usize> = (1..=m).filter(|v| bits >> (v - 1) & 1 == 1).collect();
                let gf = spherical_gf_restricted::<Int>(g, s, &allowed)?;
                if gf.expand(depth)?.coeffs() != elements.restricted_totals(&allowed) {
                    all_match = false;
                    break;
                }
            }
            checks.record(
                &format!("{s}: restricted identities over all {} node subsets", 1u32 << m),
                all_match,
            );
        }
    }

    let report = verify_functional_relations::<Int>(g, depth);
    checks.record(
        &format!("functional relations between the three structures (order {depth})"),
        report.ok(),
    );

    let monoid_gf = geodesic_gf_exact::<Int>(g, Structure::Monoid);
    let geometric = RationalFunction::from_i64(&[1], &[1, -(m as i64)])?;
    checks.record("monoid geodesic series equals 1/(1 - mt)", monoid_gf == geometric);

    if let Some(profile) = link_regular_profile(g) {
        for s in Structure::ALL {
            let fast = geodesic_gf_link_regular::<Int>(&profile, s)?;
            let full = geodesic_gf_exact::<Int>(g, s);
            checks.record(
                &format!("{s}: link-regular profile computation equals the full method"),
                fast == full,
            );
        }
    } else {
        println!("note: graph is not link-regular; profile cross-check skipped");
    }

    checks.record(
        &format!("resolvent closed forms equal iteration (order {depth})"),
        resolvents_agree(g, depth)?,
    );

    if checks.failures == 0 {
        println!("all checks passed");
        Ok(true)
    } else {
        println!("{} check(s) failed", checks.failures);
        Ok(false)
    }
}

fn resolvents_agree(g: &Graph, order: usize) -> Result<bool> {
    let idx = enumerate_cliques(g);
    if idx.is_empty() {
        return Ok(true);
    }
    let two = Int::from(2);
    let ones: Vec<Int> = idx
        .cliques()
        .iter()
        .map(|c| Int::from((c.size() == 1) as i64))
        .collect();
    let doubled: Vec<Int> = ones.iter().map(|v| v * &two).collect();
    let b0: IntMatrix = branching_matrix_strict(g, &idx);
    let b1: IntMatrix = branching_matrix_weak(g, &idx);
    let d: IntMatrix = diagonal_matrix(&idx);
    let id = IntMatrix::identity(idx.len());
    let cases: Vec<(IntMatrix, &Vec<Int>)> = vec![
        (id.add(&b0), &ones),
        (id.add(&b0.scaled(&two)), &doubled),
        (b0, &ones),
        (d.add(&b1), &ones),
        (d.add(&b1.scaled(&two)), &doubled),
        (b1, &ones),
    ];
    for (matrix, v1) in &cases {
        let exact = matrix.resolvent_exact(v1)?;
        let applied = matrix.resolvent_apply(v1, order)?;
        for (i, component) in exact.iter().enumerate() {
            let series = component.expand(order)?;
            for (n, vn) in applied.iter().enumerate() {
                if series.coeff(n + 1) != &vn[i] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
