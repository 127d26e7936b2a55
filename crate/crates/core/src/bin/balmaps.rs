use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use balmaps::balance::{is_balanced, is_balanced_by_curves, CURVE_VERTEX_CAP};
use balmaps::corpus::build_corpus;
use balmaps::decompose::decompose_full;
use balmaps::dps::{graph_to_tree, tree_to_graph, verify_chain};
use balmaps::generate::{colored_with_blue, octahedron, quadratic, turkshead};
use balmaps::hurwitz::{census_by, enumerate_classes, hurwitz_count, verify_labelings_per_graph, CensusKey};
use balmaps::io::{
    read_json, to_dot, to_json, BalanceFile, CensusFile, ClassesFile, DecompositionFile, DualFile, MapFile,
    RealizationFile, TreeFile, TupleFile,
};
use balmaps::realize::{graph_from_monodromy, monodromy, realize_generic};
use balmaps::Error;

#[derive(Parser)]
#[command(name = "balmaps", version, about = "Balanced 4-valent planar maps and generic branched covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a map file describes a connected sphere map.
    Validate { map: String },
    /// Decide balance; exit 1 when unbalanced.
    Balance {
        map: String,
        #[arg(long, value_enum, default_value_t = Oracle::Flow)]
        oracle: Oracle,
        #[arg(long)]
        witness: bool,
    },
    /// Realize a balanced map as a generic cover.
    Realize { map: String },
    /// The colored 4-valent graph of a transposition tuple.
    FromTuple {
        tuple: String,
        /// Print the diagram with its 2-valent vertices instead.
        #[arg(long)]
        diagram: bool,
    },
    #[command(subcommand)]
    Hurwitz(HurwitzCommand),
    /// Generic covers of degree d grouped by underlying graph.
    Census(CensusArgs),
    #[command(subcommand)]
    Dps(DpsCommand),
    /// Decompose a diagram along two- and four-point cuts.
    Decompose {
        map: String,
        #[arg(long)]
        tree: Option<String>,
    },
    /// Print a standard diagram.
    Generate {
        #[arg(value_enum)]
        kind: Family,
        /// Turkshead parameter.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Face to color blue.
        #[arg(long, default_value_t = 0)]
        blue_face: usize,
    },
    /// All colored 4-valent sphere maps with at most this many vertices.
    Corpus {
        max_vertices: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Graphviz rendering of a map.
    ExportDot { map: String },
}

#[derive(Subcommand)]
enum HurwitzCommand {
    /// The closed formula (2d-2)! d^(d-3) / d!.
    Count { d: usize },
    /// Enumerate conjugacy classes of transposition tuples.
    Enumerate {
        d: usize,
        #[arg(long)]
        out: Option<String>,
    },
    Census(CensusArgs),
}

#[derive(clap::Args)]
struct CensusArgs {
    d: usize,
    #[arg(long, value_enum, default_value_t = Key::Graph)]
    key: Key,
    /// Recount every entry from its graph.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum DpsCommand {
    /// Face-labeled dual to tree.
    Encode { dual: String },
    /// Tree to face-labeled dual.
    Decode { tree: String },
    /// Run the counting chain and round trips for degree d.
    Verify {
        d: usize,
        #[arg(long, default_value_t = 100)]
        schedules: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Flow,
    Curves,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Key {
    Graph,
    Diagram,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Quadratic,
    Octahedron,
    Turkshead,
}

/// Result of a subcommand: JSON or text for stdout, and whether the verdict
/// was positive.
enum Output {
    Json(serde_json::Value, bool),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(t) = std::env::var("BALMAPS_THREADS") {
        match t.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("ignoring BALMAPS_THREADS={t}"),
        }
    }
    match run(cli.command) {
        Ok(Output::Json(v, ok)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NotBalanced | Error::NoGenericRealization | Error::NotApplicable(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn write_file(path: &str, text: &str) -> balmaps::Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn run(cmd: Command) -> balmaps::Result<Output> {
    Ok(match cmd {
        Command::Validate { map } => {
            let f: MapFile = read_json(&map)?;
            let cm = f.to_colored()?;
            let m = cm.map();
            Output::Json(
                json!({
                    "valid": true,
                    "vertices": m.vertex_count(),
                    "edges": m.edge_count(),
                    "faces": m.face_count(),
                    "four_valent": m.is_four_valent(),
                    "blue_faces": cm.blue_count(),
                    "white_faces": cm.white_count(),
                }),
                true,
            )
        }
        Command::Balance { map, oracle, witness } => {
            let cm = read_json::<MapFile>(&map)?.to_colored()?;
            match oracle {
                Oracle::Flow => {
                    let r = is_balanced(&cm);
                    Output::Json(value(&BalanceFile::from_report(&r, "flow", witness)), r.balanced())
                }
                Oracle::Curves => {
                    let r = is_balanced_by_curves(&cm, CURVE_VERTEX_CAP)?;
                    Output::Json(value(&BalanceFile::from_report(&r, "curves", witness)), r.balanced())
                }
                Oracle::Both => {
                    let a = is_balanced(&cm);
                    let b = is_balanced_by_curves(&cm, CURVE_VERTEX_CAP)?;
                    let mut v = value(&BalanceFile::from_report(&a, "both", witness));
                    v["agree"] = json!(a.balanced() == b.balanced());
                    if witness {
                        v["curve_witness"] = value(&b.witness.as_ref().map(balmaps::io::WitnessFile::from));
                    }
                    Output::Json(v, a.balanced() && b.balanced())
                }
            }
        }
        Command::Realize { map } => {
            let cm = read_json::<MapFile>(&map)?.to_colored()?;
            let (em, lab) = realize_generic(&cm)?;
            let t = monodromy(&em, &lab)?;
            Output::Json(value(&RealizationFile::new(&em, &lab, &t)), true)
        }
        Command::FromTuple { tuple, diagram } => {
            let t = read_json::<TupleFile>(&tuple)?.to_tuple()?;
            let (g, em, _) = graph_from_monodromy(&t)?;
            let cm = if diagram { em.enriched } else { g };
            Output::Json(value(&MapFile::from_colored(&cm)), true)
        }
        Command::Hurwitz(HurwitzCommand::Count { d }) => {
            let h = hurwitz_count(d)?;
            Output::Json(json!({"d": d, "count": h.to_string()}), true)
        }
        Command::Hurwitz(HurwitzCommand::Enumerate { d, out }) => {
            let e = enumerate_classes(d)?;
            let file = ClassesFile::from_enumeration(&e);
            let formula = hurwitz_count(d).ok().map(|h| h.to_string());
            let matches = formula.as_deref().is_none_or(|h| h == e.classes.len().to_string());
            if let Some(path) = out {
                write_file(&path, &to_json(&file))?;
            }
            Output::Json(
                json!({
                    "d": d,
                    "classes": e.classes.len(),
                    "raw_tuples": e.raw_tuples,
                    "formula": formula,
                    "matches_formula": matches,
                    "tuples": file.classes,
                }),
                matches,
            )
        }
        Command::Hurwitz(HurwitzCommand::Census(args)) | Command::Census(args) => census(args)?,
        Command::Dps(DpsCommand::Encode { dual }) => {
            let g = read_json::<DualFile>(&dual)?.to_graph()?;
            Output::Json(value(&TreeFile::from_tree(&graph_to_tree(&g)?)), true)
        }
        Command::Dps(DpsCommand::Decode { tree }) => {
            let t = read_json::<TreeFile>(&tree)?.to_tree()?;
            Output::Json(value(&DualFile::from_graph(&tree_to_graph(&t)?)), true)
        }
        Command::Dps(DpsCommand::Verify { d, schedules, seed }) => {
            let r = verify_chain(d, schedules, seed)?;
            Output::Json(
                json!({
                    "d": r.d,
                    "classes": r.classes,
                    "duals": r.duals,
                    "trees": r.trees,
                    "expected_trees": r.expected_trees.to_string(),
                    "forward_distinct": r.forward_distinct,
                    "round_trips": r.round_trips,
                    "schedules_per_dual": r.schedules_per_dual,
                    "schedule_mismatches": r.schedule_mismatches,
                    "ok": r.ok(),
                }),
                r.ok(),
            )
        }
        Command::Decompose { map, tree } => {
            let cm = read_json::<MapFile>(&map)?.to_colored()?;
            let t = decompose_full(&cm)?;
            let file = DecompositionFile::from_tree(&t);
            if let Some(path) = tree {
                write_file(&path, &to_json(&file))?;
            }
            let leaves: Vec<_> = t
                .leaves()
                .iter()
                .map(|(m, k)| json!({"vertices": m.map().vertex_count(), "kind": format!("{k:?}").to_lowercase()}))
                .collect();
            Output::Json(json!({"cuts": t.cuts().len(), "leaves": leaves, "tree": value(&file)}), true)
        }
        Command::Generate { kind, n, blue_face } => {
            let m = match kind {
                Family::Quadratic => quadratic(),
                Family::Octahedron => octahedron(),
                Family::Turkshead => turkshead(n)?,
            };
            if blue_face >= m.face_count() {
                return Err(Error::InvalidInput(format!("map has {} faces", m.face_count())));
            }
            Output::Json(value(&MapFile::from_colored(&colored_with_blue(&m, blue_face)?)), true)
        }
        Command::Corpus { max_vertices, out } => {
            let c = build_corpus(max_vertices)?;
            let mut by_vertices = std::collections::BTreeMap::new();
            for m in &c.maps {
                *by_vertices.entry(m.map().vertex_count()).or_insert(0usize) += 1;
            }
            if let Some(path) = out {
                let maps: Vec<MapFile> = c.maps.iter().map(MapFile::from_colored).collect();
                write_file(&path, &to_json(&maps))?;
            }
            Output::Json(
                json!({
                    "max_vertices": max_vertices,
                    "uncolored": c.uncolored.len(),
                    "colored": c.maps.len(),
                    "colored_by_vertices": by_vertices,
                }),
                true,
            )
        }
        Command::ExportDot { map } => {
            let cm = read_json::<MapFile>(&map)?.to_colored()?;
            Output::Text(to_dot(cm.map(), Some(cm.blue_flags())))
        }
    })
}

fn census(args: CensusArgs) -> balmaps::Result<Output> {
    let key = match args.key {
        Key::Graph => CensusKey::Graph,
        Key::Diagram => CensusKey::Diagram,
    };
    let entries = census_by(args.d, key)?;
    let mut v = value(&CensusFile::from_census(args.d, key, &entries));
    if args.verify {
        let recounts: Vec<usize> = entries.iter().map(verify_labelings_per_graph).collect::<balmaps::Result<_>>()?;
        v["recounts"] = json!(recounts);
    }
    Ok(Output::Json(v, true))
}
