//! `mforge`: compose, link, minimize, complete and decompose spaces, graphs
//! and matroids given in the text formats of the library crates.

mod error;
mod load;
mod verify;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_core::{enumerate_bases, write_bases, GroundSet, Matroid};
use matroid_link::{conditional_minimize, general_minimize, LinkInstance};
use vcompose::CompositionPair;
use vspace::write_matrix;

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "mforge", version, about = "Composition and decomposition of spaces, graphs and matroids")]
struct Cli {
    /// Cross-check the result against definitional brute force.
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rc,
    Rr,
    Cc,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank of the matroid, or of `--T`.
    Rank {
        file: PathBuf,
        #[arg(long = "T")]
        t: Option<String>,
    },
    /// All bases, canonically ordered.
    Bases { file: PathBuf },
    /// Bases of the dual.
    Dual { file: PathBuf },
    /// `(M ∘ T1) × T2`.
    Minor {
        file: PathBuf,
        #[arg(long = "T1")]
        t1: String,
        #[arg(long = "T2")]
        t2: String,
    },
    /// `M_SP ↔ M_PQ` over the shared labels.
    Link { left: PathBuf, right: PathBuf },
    /// Shrink the shared labels of a linked pair.
    Minimize {
        left: PathBuf,
        right: PathBuf,
        /// Use the exact-size reduction; needs matching minors on P.
        #[arg(long)]
        conditional: bool,
    },
    /// `λ(S) = r(S) + r(Q) − r(M)`.
    Connectivity {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
    },
    /// Matched composition of two matrices.
    VsCompose { left: PathBuf, right: PathBuf },
    /// Shrink the shared columns of a matrix pair, keeping the composition.
    VsMinimize { left: PathBuf, right: PathBuf },
    /// Minimal decomposition of a matrix's row space through `P`.
    VsDecompose {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "Q")]
        q: Option<String>,
    },
    /// Compose two graphs: by overlay with a vertex map file, or as a row space.
    GraphCompose {
        left: PathBuf,
        right: PathBuf,
        /// Lines `right-vertex left-vertex`.
        #[arg(long, conflicts_with = "space_only")]
        overlay: Option<PathBuf>,
        #[arg(long)]
        space_only: bool,
    },
    /// Bases of the `{S,Q}`-completion.
    Complete {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "Q")]
        q: Option<String>,
    },
    /// Whether the matroid is `{S,Q}`-complete, with a missing corner if not.
    CompleteCheck {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "Q")]
        q: Option<String>,
    },
    /// Minimal decomposition of a complete matroid.
    Decompose {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "Q")]
        q: Option<String>,
        #[arg(long)]
        multiport: bool,
    },
    /// Free product of two matroids on disjoint grounds.
    FreeProduct {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Rank of the `RR` part; required for `rr` and `cc`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Principal sum of two matroids through `A` and `B`.
    PrincipalSum {
        left: PathBuf,
        right: PathBuf,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Three bases of `M` whose fourth corner is the given completion base.
    Witness {
        file: PathBuf,
        #[arg(long = "S")]
        s: String,
        #[arg(long = "Q")]
        q: Option<String>,
        #[arg(long)]
        base: String,
    },
}

fn set(spec: &str) -> Result<GroundSet, CliError> {
    GroundSet::parse_list(spec).map_err(|e| CliError::parse(format!("bad set `{spec}`: {e}")))
}

/// `S` and `Q`; `Q` defaults to the rest of the ground.
fn sides(ground: &GroundSet, s: &str, q: &Option<String>) -> Result<(GroundSet, GroundSet), CliError> {
    let s = set(s)?;
    let q = match q {
        Some(q) => set(q)?,
        None => ground.minus(&s),
    };
    Ok((s, q))
}

fn bases_text(m: &Matroid) -> Result<String, CliError> {
    Ok(write_bases(&enumerate_bases(m)?))
}

fn sections(parts: &[(&str, String)]) -> String {
    parts.iter().map(|(name, body)| format!("# {name}\n{body}")).collect()
}

fn overlay_map(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let w: Vec<&str> = line.split('#').next().unwrap_or("").split_whitespace().collect();
        match w.as_slice() {
            [] => {}
            [from, to] => {
                if map.insert(from.to_string(), to.to_string()).is_some() {
                    return Err(CliError::parse(format!("{}:{}: `{from}` mapped twice", path.display(), i + 1)));
                }
            }
            _ => return Err(CliError::parse(format!("{}:{}: expected `vertex vertex`", path.display(), i + 1))),
        }
    }
    Ok(map)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let check = cli.verify;
    let out = match &cli.cmd {
        Cmd::Rank { file, t } => {
            let m = load::matroid(file)?;
            let x = match t {
                Some(t) => m.mask_of(&set(t)?)?,
                None => m.full(),
            };
            if check {
                verify::rank(&m, x)?;
            }
            format!("{}\n", m.rank(x))
        }
        Cmd::Bases { file } => {
            let m = load::matroid(file)?;
            if check {
                verify::consistent(&m)?;
            }
            bases_text(&m)?
        }
        Cmd::Dual { file } => {
            let m = load::matroid(file)?;
            let d = m.dual();
            if check {
                verify::dual(&m, &d)?;
            }
            bases_text(&d)?
        }
        Cmd::Minor { file, t1, t2 } => {
            let m = load::matroid(file)?;
            let (t1, t2) = (set(t1)?, set(t2)?);
            let n = m.minor(&t1, &t2)?;
            if check {
                verify::minor(&m, &t1, &t2, &n)?;
            }
            bases_text(&n)?
        }
        Cmd::Link { left, right } => {
            let (a, b) = (load::matroid(left)?, load::matroid(right)?);
            let l = matroid_link::link(&a, &b)?;
            if check {
                verify::link(&a, &b, &l)?;
            }
            bases_text(&l)?
        }
        Cmd::Minimize { left, right, conditional } => {
            let inst = LinkInstance::new(load::matroid(left)?, load::matroid(right)?);
            let out = if *conditional { conditional_minimize(&inst)? } else { general_minimize(&inst)? };
            if check {
                verify::minimize(&inst, &out)?;
            }
            sections(&[("left", bases_text(&out.left)?), ("right", bases_text(&out.right)?)])
        }
        Cmd::Connectivity { file, s } => {
            let m = load::matroid(file)?;
            let s = set(s)?;
            let lam = matroid_link::connectivity(&m, &s)?;
            if check {
                verify::connectivity(&m, &s, lam)?;
            }
            format!("{lam}\n")
        }
        Cmd::VsCompose { left, right } => {
            let pair = CompositionPair::new(load::matrix(left)?, load::matrix(right)?)?;
            let v = pair.compose();
            if check {
                verify::vs_compose(&pair, &v)?;
            }
            write_matrix(&v)
        }
        Cmd::VsMinimize { left, right } => {
            let pair = CompositionPair::new(load::matrix(left)?, load::matrix(right)?)?;
            let out = vcompose::min_overlap(&pair);
            if check {
                verify::vs_minimize(&pair, &out)?;
            }
            sections(&[("left", write_matrix(&out.left)), ("right", write_matrix(&out.right))])
        }
        Cmd::VsDecompose { file, s, q } => {
            let v = load::matrix(file)?;
            let (s, q) = sides(v.columns(), s, q)?;
            let out = vcompose::decompose(&v, &s, &q)?;
            if check {
                verify::vs_decompose(&v, &s, &out)?;
            }
            sections(&[("left", write_matrix(&out.left)), ("right", write_matrix(&out.right))])
        }
        Cmd::GraphCompose { left, right, overlay, space_only } => {
            let (a, b) = (load::graph(left)?, load::graph(right)?);
            match (overlay, space_only) {
                (Some(map), _) => {
                    let g = graphspace::overlay_compose(&a, &b, &overlay_map(map)?)?;
                    if check {
                        verify::overlay(&a, &b, &g)?;
                    }
                    graphspace::write_graph(&g)
                }
                (None, true) => write_matrix(&graphspace::compose_space(&a, &b)?),
                (None, false) => return Err(CliError::parse("graph-compose needs --overlay <map> or --space-only")),
            }
        }
        Cmd::Complete { file, s, q } => {
            let m = load::matroid(file)?;
            let (s, q) = sides(m.ground(), s, q)?;
            let c = sq_complete::completion(&m, &s, &q)?;
            if check {
                verify::completion(&m, &s, &c)?;
            }
            bases_text(&c)?
        }
        Cmd::CompleteCheck { file, s, q } => {
            let m = load::matroid(file)?;
            let (s, q) = sides(m.ground(), s, q)?;
            let yes = sq_complete::is_complete(&m, &s, &q)?;
            if check {
                verify::is_complete(&m, &s, yes)?;
            }
            if yes {
                "complete\n".to_string()
            } else {
                format!("incomplete\n{}", missing_corner(&m, &s, &q)?)
            }
        }
        Cmd::Decompose { file, s, q, multiport } => {
            let m = load::matroid(file)?;
            let (s, q) = sides(m.ground(), s, q)?;
            if *multiport {
                let out = sq_complete::multiport_decompose_complete(&m, &s, &q)?;
                if check {
                    verify::multiport(&m, &out)?;
                }
                sections(&[
                    ("left", bases_text(&out.left)?),
                    ("right", bases_text(&out.right)?),
                    ("ports", bases_text(&out.ports)?),
                ])
            } else {
                let out = sq_complete::decompose_complete(&m, &s, &q)?;
                if check {
                    verify::link(&out.left, &out.right, &m)?;
                }
                sections(&[("left", bases_text(&out.left)?), ("right", bases_text(&out.right)?)])
            }
        }
        Cmd::FreeProduct { left, right, kind, k } => {
            let (a, b) = (load::matroid(left)?, load::matroid(right)?);
            let need_k = || k.ok_or_else(|| CliError::parse("--k is required for rr and cc"));
            let p = match kind {
                Kind::Rc => sq_complete::free_rc(&a, &b)?,
                Kind::Rr => sq_complete::free_rr(&a, &b, need_k()?)?,
                Kind::Cc => sq_complete::free_cc(&a, &b, need_k()?)?,
            };
            if check {
                verify::complete_product(&p, a.ground())?;
            }
            bases_text(&p)?
        }
        Cmd::PrincipalSum { left, right, a, b } => {
            let (ms, mq) = (load::matroid(left)?, load::matroid(right)?);
            let p = sq_complete::principal_sum(&ms, &mq, &set(a)?, &set(b)?)?;
            if check {
                verify::complete_product(&p, ms.ground())?;
            }
            bases_text(&p)?
        }
        Cmd::Witness { file, s, q, base } => {
            let m = load::matroid(file)?;
            let (s, q) = sides(m.ground(), s, q)?;
            let t = m.mask_of(&set(base)?)?;
            let w = sq_complete::completion_witness(&m, &s, &q, t)?;
            if check {
                verify::witness(&m, &s, t, &w)?;
            }
            let g = m.ground();
            format!("b_S+b_Q {}\nb^_S+b_Q {}\nb_S+b^_Q {}\n", g.show(w.base_bb), g.show(w.base_hb), g.show(w.base_bh))
        }
    };
    Ok(if check { format!("{out}# verify: agrees with brute force\n") } else { out })
}

/// For an incomplete matroid: a completion base that is not a base, and the
/// three bases it is the fourth corner of.
fn missing_corner(m: &Matroid, s: &GroundSet, q: &GroundSet) -> Result<String, CliError> {
    let c = sq_complete::completion_bruteforce(m, s, q)?;
    let t = c.bases().iter().copied().find(|&b| !m.is_base(b)).expect("incomplete means a new corner");
    let w = sq_complete::completion_witness(m, s, q, t)?;
    let g = m.ground();
    Ok(format!(
        "# {} is not a base, yet {}, {} and {} are\n",
        g.show(t),
        g.show(w.base_bb),
        g.show(w.base_hb),
        g.show(w.base_bh)
    ))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { error::PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("mforge: {}", e.msg);
            if let Some(w) = &e.witness {
                eprintln!("counterexample: {w}");
            }
            ExitCode::from(e.code)
        }
    }
}
