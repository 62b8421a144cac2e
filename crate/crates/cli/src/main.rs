use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use maxchain::crown::{self, Verdict};
use maxchain::face::{self, FaceTag};
use maxchain::geometry::{face_oracle, family_rank};
use maxchain::report::{to_json, ClosureJson, GridJson, LatticeJson, ScheduleJson, StructureJson};
use maxchain::schedule::{critical_chains, ActivityWeights};
use maxchain::{corpus, ChainFamily, Poset};

#[derive(Parser)]
#[command(name = "maxchain", version, about = "Faces of maximal chain polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PosetArgs {
    /// Poset file (`p <size>` then `c <x> <y>` cover lines). A missing file
    /// named after a bundled poset (e.g. `p2.poset`) loads the bundled one.
    #[arg(long, group = "source")]
    poset: Option<PathBuf>,
    /// Bundled poset: p1 … p5, or a grid such as 3x4.
    #[arg(long, group = "source")]
    builtin: Option<String>,
    /// The m×n grid, e.g. 4x4.
    #[arg(long, group = "source")]
    grid: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Chains separated by `;`, e.g. "125;1368;478".
    #[arg(long, group = "fam")]
    family: Option<String>,
    /// File with one comma-separated chain per line.
    #[arg(long, group = "fam")]
    family_file: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal chains.
    Chains {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Report every guided crown and star of a family.
    Structure {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Only look for crowns up to this length.
        #[arg(long)]
        max_rho: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Classify a family as simplex face, non-simplex face or not a face.
    Face {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Smallest closed family containing the given one.
    Closure {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Print every intermediate step.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate the face lattice.
    Lattice {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, default_value_t = face::DEFAULT_CAP)]
        max_chains: usize,
        /// Test every subfamily instead of generating closures.
        #[arg(long)]
        brute_force: bool,
        /// Graphviz Hasse diagram.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension of the polytope.
    Dim {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Flag of closed families through the m×n grid.
    Grid {
        /// Grid size, e.g. 3x4.
        size: String,
        #[command(flatten)]
        out: Output,
    },
    /// Earliest finishing time and critical chains for activity weights.
    Schedule {
        #[command(flatten)]
        poset: PosetArgs,
        /// Lines `<element> <num>/<den>`.
        #[arg(long)]
        weights: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the combinatorial verdict with the LP oracle, on one family or
    /// on every nonempty subfamily.
    OracleCheck {
        #[command(flatten)]
        poset: PosetArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = face::DEFAULT_CAP)]
        max_chains: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] maxchain::Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("oracle disagreement on {0} families")]
    Disagreement(usize, String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(maxchain::Error::CapExceeded { .. }) => 3,
            CliError::Disagreement(..) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_poset(args: &PosetArgs) -> Result<Poset> {
    if let Some(path) = &args.poset {
        if !path.exists() {
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
            if corpus::source(stem).is_some() {
                return Ok(corpus::builtin(stem)?);
            }
        }
        return Ok(Poset::parse(&read(path)?)?);
    }
    if let Some(name) = &args.builtin {
        return Ok(corpus::builtin(name)?);
    }
    if let Some(spec) = &args.grid {
        let (m, n) = corpus::parse_grid(spec)
            .ok_or_else(|| CliError::Usage(format!("bad grid size `{spec}`")))?;
        return Ok(Poset::grid(m, n)?);
    }
    Err(CliError::Usage(
        "one of --poset, --builtin or --grid is required".into(),
    ))
}

fn load_family(poset: &Poset, args: &FamilyArgs) -> Result<Option<ChainFamily>> {
    let family = match (&args.family, &args.family_file) {
        (Some(text), _) => ChainFamily::parse(poset, text)?,
        (None, Some(path)) => ChainFamily::parse_lines(poset, &read(path)?)?,
        (None, None) => return Ok(None),
    };
    Ok(Some(family))
}

fn require_family(poset: &Poset, args: &FamilyArgs) -> Result<ChainFamily> {
    let family = load_family(poset, args)?
        .ok_or_else(|| CliError::Usage("--family or --family-file is required".into()))?;
    if family.is_empty() {
        return Err(maxchain::Error::EmptyFamily.into());
    }
    Ok(family)
}

fn seq(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli) -> Result<String> {
    let mut s = String::new();
    match cli.command {
        Command::Chains { poset, out } => {
            let p = load_poset(&poset)?;
            let chains = p.maximal_chains();
            if out.json {
                s = to_json(&chains.labels());
            } else {
                for c in &chains {
                    let _ = writeln!(s, "{c}");
                }
            }
        }
        Command::Structure {
            poset,
            family,
            max_rho,
            out,
        } => {
            let p = load_poset(&poset)?;
            let f = require_family(&p, &family)?;
            let mut report = crown::classify_structure(&p, &f);
            if let Some(limit) = max_rho {
                report.crowns.retain(|c| c.item.rho() <= limit);
            }
            if out.json {
                s = to_json(&StructureJson::from(&report));
            } else {
                let _ = writeln!(s, "verdict: {:?}", report.verdict);
                for c in &report.crowns {
                    let _ = write!(s, "crown ({})", seq(&c.item.sequence()));
                    write_status(&mut s, c.complete, &c.missing);
                }
                for st in &report.stars {
                    let (a1, b1, a2, b2) = st.item.tuple();
                    let _ = write!(
                        s,
                        "star ({a1},{b1},{a2},{b2}) via {}",
                        seq(&st.item.gammas())
                    );
                    write_status(&mut s, st.complete, &st.missing);
                }
            }
        }
        Command::Face { poset, family, out } => {
            let p = load_poset(&poset)?;
            let f = require_family(&p, &family)?;
            let class = face::face_class(&p, &f)?;
            if out.json {
                s = to_json(&class);
            } else {
                match class.dim {
                    Some(d) => {
                        let _ = writeln!(s, "{:?} dim {d}", class.tag);
                    }
                    None => {
                        let _ = writeln!(s, "{:?}", class.tag);
                    }
                }
            }
        }
        Command::Closure {
            poset,
            family,
            trace,
            out,
        } => {
            let p = load_poset(&poset)?;
            let f = require_family(&p, &family)?;
            let mut steps = face::closure_trace(&p, &f);
            if !trace {
                steps.drain(..steps.len() - 1);
            }
            if out.json {
                s = to_json(&ClosureJson::new(&steps));
            } else if trace {
                for (i, step) in steps.iter().enumerate() {
                    let _ = writeln!(s, "step {i}: {step}");
                }
            } else {
                let _ = writeln!(s, "{}", steps[0]);
            }
        }
        Command::Lattice {
            poset,
            max_chains,
            brute_force,
            dot,
            out,
        } => {
            let p = load_poset(&poset)?;
            let lattice = if brute_force {
                face::face_lattice_brute_force(&p, max_chains)?
            } else {
                face::face_lattice(&p, max_chains)?
            };
            if dot {
                s = lattice.to_dot();
            } else if out.json {
                s = to_json(&LatticeJson::from(&lattice));
            } else {
                for (f, d) in lattice.faces.iter().zip(&lattice.dims) {
                    let _ = writeln!(s, "dim {d}: {f}");
                }
                let _ = writeln!(s, "f-vector: {:?}", lattice.f_vector());
            }
        }
        Command::Dim { poset, out } => {
            let p = load_poset(&poset)?;
            let d = face::polytope_dim(&p);
            s = if out.json {
                format!("{{\"dim\": {d}}}\n")
            } else {
                format!("{d}\n")
            };
        }
        Command::Grid { size, out } => {
            let (m, n) = corpus::parse_grid(&size)
                .ok_or_else(|| CliError::Usage(format!("bad grid size `{size}`")))?;
            let flag = face::grid_flag(m, n)?;
            let coverings = flag.verify()?;
            if out.json {
                s = to_json(&GridJson::new(&flag, coverings));
            } else {
                let dims = flag.dims();
                for (stage, d) in flag.stages.iter().zip(&dims[1..]) {
                    let _ = writeln!(
                        s,
                        "({},{}) dim {d}: {} chains",
                        stage.x,
                        stage.y,
                        stage.family.len()
                    );
                }
                let _ = writeln!(s, "coverings: {coverings}");
            }
        }
        Command::Schedule {
            poset,
            weights,
            out,
        } => {
            let p = load_poset(&poset)?;
            let w = ActivityWeights::parse(&read(&weights)?)?;
            let report = critical_chains(&p, &w)?;
            if out.json {
                s = to_json(&ScheduleJson::from(&report));
            } else {
                let _ = writeln!(s, "eft: {}", report.eft);
                let _ = writeln!(s, "critical: {}", report.critical);
                for (c, t) in &report.totals {
                    let _ = writeln!(s, "{c} {t}");
                }
            }
        }
        Command::OracleCheck {
            poset,
            family,
            max_chains,
            out,
        } => {
            let p = load_poset(&poset)?;
            let families = match load_family(&p, &family)? {
                Some(f) => vec![f],
                None => {
                    let all = p.maximal_chains().to_vec();
                    let limit = max_chains.min(24);
                    if all.len() > limit {
                        return Err(maxchain::Error::CapExceeded {
                            count: all.len(),
                            cap: limit,
                        }
                        .into());
                    }
                    (1u32..1 << all.len())
                        .map(|mask| {
                            all.iter()
                                .enumerate()
                                .filter(|(i, _)| mask >> i & 1 == 1)
                                .map(|(_, c)| c.clone())
                                .collect()
                        })
                        .collect()
                }
            };
            let mut bad = Vec::new();
            for f in &families {
                if !oracle_agrees(&p, f)? {
                    bad.push(f.to_string());
                }
            }
            s = if out.json {
                format!(
                    "{{\"checked\": {}, \"disagreements\": {}}}\n",
                    families.len(),
                    bad.len()
                )
            } else {
                format!("checked {} families, {} disagreements\n", families.len(), bad.len())
            };
            if !bad.is_empty() {
                return Err(CliError::Disagreement(bad.len(), s + &bad.join("\n")));
            }
        }
    }
    Ok(s)
}

fn write_status(s: &mut String, complete: bool, missing: &[maxchain::Chain]) {
    if complete {
        let _ = writeln!(s, " complete");
    } else {
        let missing: Vec<String> = missing.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(s, " incomplete, missing {}", missing.join(" "));
    }
}

/// Verdict and LP oracle agree on face-ness, and simplices have full rank.
fn oracle_agrees(p: &Poset, f: &ChainFamily) -> Result<bool> {
    let verdict = crown::verdict(p, f);
    let is_face = face_oracle(p, f)?.is_some();
    let class = face::face_class(p, f)?;
    let rank = family_rank(p.size(), f)?;
    let simplex_ok = (class.tag == FaceTag::SimplexFace) == (is_face && rank + 1 == f.len());
    Ok((verdict != Verdict::IncompleteStructure) == is_face && simplex_ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Disagreement(_, report)) => {
            print!("{report}");
            eprintln!("error: oracle disagreement");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
