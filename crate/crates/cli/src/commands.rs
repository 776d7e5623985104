use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use egomap_core::community::{girvan_newman, modularity, Partition, StopRule};
use egomap_core::eval::{
    membership_confusion, partition_similarity, planted_partition, precision, recall,
};
use egomap_core::graph::{
    ego_graph, undirected_projection, DirectedGraph, UndirectedGraph, VertexId,
};
use egomap_core::interest::{build_interest_map, detect, Detector, MapConfig};
use egomap_core::io::{
    assemble_graph, export_map, parse_edges, parse_metadata, render_edges, EdgeRecord,
};

use crate::args::{Command, DetectArgs, EvalArgs, GraphInput, MapArgs, SynthArgs};
use crate::cache::{content_hash, GraphCache};
use crate::failure::{Blame, Failure};
use crate::manifest::{InputFile, RunManifest};
use crate::Cli;

pub(crate) fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ingest(args) => ingest(&args),
        Command::Detect(args) => detect_cmd(&args),
        Command::Map(args) => map(&args),
        Command::Synth(args) => synth(&args),
        Command::Eval(args) => eval(&args),
    }
}

/// Writes through a temp file in the destination directory, then renames.
pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)?;
    Ok(())
}

struct LoadedGraph {
    graph: DirectedGraph,
    inputs: Vec<InputFile>,
    key: String,
    cache_hit: bool,
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).input(format!("cannot read {}", path.display()))
}

fn load_graph(input: &GraphInput) -> Result<LoadedGraph, Failure> {
    let edge_bytes = read_input(&input.edges)?;
    let meta_bytes = input.meta.as_deref().map(read_input).transpose()?;
    let key = content_hash(&edge_bytes, meta_bytes.as_deref());
    let mut inputs = vec![InputFile {
        path: input.edges.display().to_string(),
        sha256: content_hash(&edge_bytes, None),
    }];
    if let (Some(path), Some(bytes)) = (&input.meta, &meta_bytes) {
        inputs.push(InputFile {
            path: path.display().to_string(),
            sha256: content_hash(bytes, None),
        });
    }

    let cache = GraphCache::from_env();
    if let Some(graph) = cache.get(&key) {
        log::info!("graph cache hit {key}");
        return Ok(LoadedGraph {
            graph,
            inputs,
            key,
            cache_hit: true,
        });
    }

    let edges = parse_edges(edge_bytes.as_slice()).input(input.edges.display())?;
    let meta = match (&input.meta, &meta_bytes) {
        (Some(path), Some(bytes)) => {
            parse_metadata(bytes.as_slice())
                .input(path.display())?
                .records
        }
        _ => Default::default(),
    };
    let graph = assemble_graph(&edges, meta).input("invalid graph")?;
    if let Err(e) = cache.put(&key, &graph) {
        log::warn!(
            "could not write graph cache in {}: {e:#}",
            cache.dir().display()
        );
    }
    Ok(LoadedGraph {
        graph,
        inputs,
        key,
        cache_hit: false,
    })
}

fn vertex_id(raw: &str) -> Result<VertexId, Failure> {
    VertexId::new(raw).input("--ego")
}

fn ingest(args: &GraphInput) -> Result<(), Failure> {
    let loaded = load_graph(args)?;
    println!(
        "{} {}: {} vertices, {} edges",
        if loaded.cache_hit {
            "cached"
        } else {
            "ingested"
        },
        loaded.key,
        loaded.graph.vertex_count(),
        loaded.graph.edge_count()
    );
    Ok(())
}

fn detect_cmd(args: &DetectArgs) -> Result<(), Failure> {
    if args.k.is_some() && args.detector != Detector::GirvanNewman {
        return Err(Failure::input(
            "--k applies only to --detector girvan-newman",
        ));
    }
    let loaded = load_graph(&args.input)?;
    let view: UndirectedGraph = match &args.ego {
        Some(ego) => {
            undirected_projection(&ego_graph(&loaded.graph, &vertex_id(ego)?).input("--ego")?)
        }
        None => undirected_projection(&loaded.graph),
    };
    if view.vertex_count() == 0 {
        return Err(Failure::input("graph has no vertices"));
    }

    let partition = match args.k {
        Some(k) => {
            girvan_newman::<f64>(&view, StopRule::Communities(k))
                .input("girvan-newman")?
                .1
        }
        None => detect(&view, args.detector, args.walk_length, args.seed).input(args.detector)?,
    };

    let mut report = String::new();
    writeln!(report, "detector: {}", args.detector).unwrap();
    writeln!(report, "communities: {}", partition.k()).unwrap();
    match modularity::<f64>(&view, &partition) {
        Ok(q) => writeln!(report, "Q: {:.6}", q.q).unwrap(),
        Err(_) => writeln!(report, "Q: undefined (no edges)").unwrap(),
    }
    for (c, members) in partition.communities().iter().enumerate() {
        let names: Vec<&str> = members.iter().map(VertexId::as_str).collect();
        writeln!(report, "{c}: {}", names.join(" ")).unwrap();
    }
    print!("{report}");

    if let Some(out) = &args.out {
        write_partition(out, &partition)?;
    }
    Ok(())
}

fn map(args: &MapArgs) -> Result<(), Failure> {
    let cfg = MapConfig {
        detector: args.detector,
        min_community_size: args.min_size,
        label_top_k: args.top_k,
        walk_length: args.walk_length,
        seed: args.seed,
    };
    cfg.validate().input("invalid map settings")?;
    let loaded = load_graph(&args.input)?;
    let ego = vertex_id(&args.ego)?;
    let interest_map = build_interest_map(&loaded.graph, &ego, &cfg).input("map")?;
    let bytes = export_map(&interest_map, args.format);

    match &args.out {
        Some(out) => {
            write_atomic(out, &bytes).internal(format!("cannot write {}", out.display()))?;
            let manifest = RunManifest::new(loaded.inputs, loaded.key, args.ego.clone(), cfg);
            let manifest_bytes = serde_json::to_vec_pretty(&manifest).internal("manifest")?;
            let path = RunManifest::path_for(out);
            write_atomic(&path, &manifest_bytes)
                .internal(format!("cannot write {}", path.display()))?;
        }
        None => std::io::stdout().write_all(&bytes).internal("stdout")?,
    }
    Ok(())
}

fn synth(args: &SynthArgs) -> Result<(), Failure> {
    let planted = planted_partition(
        args.blocks,
        args.block_size,
        args.p_in,
        args.p_out,
        args.seed,
    )
    .input("synth")?;
    let g = &planted.graph;
    let records: Vec<EdgeRecord> = g
        .edges()
        .iter()
        .map(|&(u, v)| EdgeRecord {
            source: g.id(u).clone(),
            target: g.id(v).clone(),
        })
        .collect();
    write_atomic(&args.out, render_edges(&records).as_bytes())
        .internal(format!("cannot write {}", args.out.display()))?;
    write_partition(&args.truth, &planted.truth)?;
    println!(
        "planted {} blocks x {}: {} vertices, {} edges",
        args.blocks,
        args.block_size,
        g.vertex_count(),
        g.edge_count()
    );
    Ok(())
}

fn eval(args: &EvalArgs) -> Result<(), Failure> {
    let pred = read_partition(&args.pred)?;
    let truth = read_partition(&args.truth)?;
    let sim = partition_similarity::<f64>(&pred, &truth).input("partitions are not comparable")?;
    let counts = membership_confusion(&pred, &truth).input("partitions are not comparable")?;
    let show = |r: Result<f64, _>| {
        r.map_or_else(
            |e: egomap_core::EvalError| e.to_string(),
            |v| format!("{v:.6}"),
        )
    };
    println!("precision: {}", show(precision(&counts)));
    println!("recall: {}", show(recall(&counts)));
    println!("NMI: {:.6}", sim.nmi);
    println!("ARI: {:.6}", sim.ari);
    Ok(())
}

fn write_partition(path: &Path, p: &Partition) -> Result<(), Failure> {
    let mut bytes = serde_json::to_vec_pretty(p).internal("partition")?;
    bytes.push(b'\n');
    write_atomic(path, &bytes).internal(format!("cannot write {}", path.display()))
}

fn read_partition(path: &Path) -> Result<Partition, Failure> {
    let bytes = read_input(path)?;
    serde_json::from_slice(&bytes).input(format!("{} is not a partition", path.display()))
}
