//! Resolving `--fixture`, `--family` and `--file` into graphs.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use spanlab::graph::parse_graph;
use spanlab::structure::families::{fixture, Family};
use spanlab::{Format, Graph};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in example graph: figure1, figure2, figure3 or figure3_base
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// Generated graph, e.g. cycle:6, random:8:0.3, random_interval:9
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
    /// Graph file in graph6 or edge-list form
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: Source,
    /// Format of --file; guessed from the extension when omitted (.g6 and
    /// .graph6 are graph6, anything else an edge list)
    #[arg(long, value_enum, value_name = "FORMAT")]
    pub input_format: Option<InputFormat>,
    /// Seed for random families
    #[arg(long)]
    pub seed: Option<u64>,
}

/// A graph plus a short description of where it came from.
pub struct Loaded {
    pub source: String,
    pub graph: Graph,
}

fn guess_format(path: &Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => InputFormat::Graph6,
        _ => InputFormat::Edgelist,
    }
}

impl InputArgs {
    /// The family named by `--family`, with `--seed` applied.
    pub fn family(&self) -> Result<Option<Family>, Failure> {
        let Some(spec) = &self.source.family else {
            return Ok(None);
        };
        let family: Family = spec.parse()?;
        Ok(Some(match self.seed {
            Some(seed) => family.with_seed(seed),
            None => family,
        }))
    }

    pub fn load(&self) -> Result<Loaded, Failure> {
        if let Some(name) = &self.source.fixture {
            return Ok(Loaded {
                source: format!("fixture:{name}"),
                graph: fixture(name)?,
            });
        }
        if let Some(family) = self.family()? {
            return Ok(Loaded {
                source: family.to_string(),
                graph: family.generate()?,
            });
        }
        let path = self.source.file.as_ref().expect("clap requires one input source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let format = match self.input_format.unwrap_or_else(|| guess_format(path)) {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::Edgelist => Format::EdgeList,
        };
        Ok(Loaded {
            source: format!("file:{}", path.display()),
            graph: parse_graph(&text, format)?,
        })
    }
}
