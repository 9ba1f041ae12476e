//! `siginterval` command-line tool.
//!
//! Every command prints one JSON object on stdout carrying a `status` field
//! and exits with the matching code: 0 `yes`, 1 `no`, 2 `error` (bad input),
//! 3 `internal` (a certificate failed re-verification).

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use siginterval::biarc::{biarc_from_min_ordering, ordering_generated, realize_biarc, BiArcModel};
use siginterval::graph::{as_bipartite_digraph, Diagonal, Digraph};
use siginterval::hom::{brute_force_hom, solve_list_hom, ListAssignment};
use siginterval::interval::{
    cott_from_min_ordering, cott_to_signed, cott_to_threshold_tolerance, interval_model_from_min_ordering,
    min_ordering_from_signed, realize_cott, realize_signed, signed_from_min_ordering, standard_cott_lift, CoTTModel,
    SignedIntervalModel, ThresholdToleranceModel,
};
use siginterval::io::{parse_graph, parse_matrix};
use siginterval::matrix::{
    augment, find_pattern, gamma_free_independent, gamma_free_simultaneous, independent_kl_free, is_free_of,
    is_kl_free, min_orderable, occurs_at, transform, BinaryMatrix, Pattern, Transform,
};
use siginterval::obstruction::{
    find_asteroidal_triple, find_induced_cycle, find_invertible_pair, is_induced_cycle, lekkerkerker_boland,
    IntervalVerdict, Obstruction,
};
use siginterval::ordering::{extrema, find_min_ordering, verify_min_ordering, verify_via_extrema, VertexOrdering};
use siginterval::rays::{min_ordering_from_rays, rays_from_signed, realize_rays, RayModel};
use siginterval::{sweep, Error, Result};

#[derive(Parser)]
#[command(
    name = "siginterval",
    version,
    about = "Min orderings, signed-interval and bi-arc models of digraphs"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a min ordering and the models it yields.
    Recognize {
        /// Graph file (`-` for stdin).
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::All)]
        emit: Emit,
    },
    /// Check whether an ordering is a min ordering.
    CheckOrdering {
        graph: PathBuf,
        /// Vertices in order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<usize>,
    },
    /// Realize a model as a digraph.
    Realize {
        /// Model JSON file (`-` for stdin).
        model: PathBuf,
        #[arg(long, value_enum)]
        kind: ModelKind,
        /// Drop loops from a co-TT realization.
        #[arg(long)]
        standard_cott: bool,
    },
    /// Convert between graphs, models and orderings.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// For `graph -> cott`: read an irreflexive graph and model its loop lift.
        #[arg(long)]
        standard_cott: bool,
    },
    /// Search a reflexive graph for obstructions to being an interval graph.
    Obstruct {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Find::All)]
        find: Find,
    },
    /// List homomorphism from an input digraph to a template.
    Hom {
        #[arg(long)]
        template: PathBuf,
        #[arg(long)]
        input: PathBuf,
        /// JSON object mapping input vertices to allowed template vertices.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Exhaustive search instead of arc consistency; works for any template.
        #[arg(long)]
        brute_force: bool,
    },
    /// 0/1 matrix operations.
    Matrix {
        #[command(subcommand)]
        op: MatrixOp,
    },
    /// Cross-check all representations on every small digraph and on random
    /// reflexive graphs.
    Sweep {
        /// Largest vertex count for the exhaustive part (at most 4).
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Largest vertex count for the random reflexive graphs.
        #[arg(long, default_value_t = 7)]
        random_n: usize,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum MatrixOp {
    /// First occurrence of a 2×2 pattern (0-based rows i1 < i2, columns j1 < j2).
    Find {
        matrix: PathBuf,
        #[arg(long)]
        pattern: Pattern,
    },
    /// Is the matrix free of K and L?
    KlFree { matrix: PathBuf },
    Transform {
        matrix: PathBuf,
        /// rotate180, transpose, reverse-rows or reverse-cols.
        #[arg(long)]
        op: Transform,
    },
    /// Embed a k×l matrix into the (k+l)×(k+l) augmented matrix.
    Augment { matrix: PathBuf },
    /// Permutation(s) making the matrix K,L-free.
    Orderable {
        matrix: PathBuf,
        /// Permute rows and columns independently.
        #[arg(long)]
        independent: bool,
    },
    /// Permutation(s) making the matrix Gamma-free, by exhaustive search.
    GammaFree {
        matrix: PathBuf,
        #[arg(long)]
        independent: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Ordering,
    Model,
    Biarc,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    Signed,
    Cott,
    Tt,
    Biarc,
    Rays,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph,
    Ordering,
    Signed,
    Cott,
    Tt,
    Interval,
    Biarc,
    Rays,
}

#[derive(Clone, Copy, ValueEnum)]
enum Find {
    All,
    Cycle,
    Asteroidal,
    Invertible,
}

struct Reply {
    yes: bool,
    body: Map<String, Value>,
}

impl Reply {
    fn yes() -> Self {
        Reply {
            yes: true,
            body: Map::new(),
        }
    }

    fn no() -> Self {
        Reply {
            yes: false,
            body: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: impl serde::Serialize) -> Self {
        self.body
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Digraph> {
    parse_graph(&read_text(path)?)
}

fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    parse_matrix(&read_text(path)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn certify(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("{what} failed re-verification")))
    }
}

fn certify_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<()> {
    certify(verify_min_ordering(h, ord)?.is_none(), "min ordering")
}

fn read_tt(path: &Path) -> Result<ThresholdToleranceModel> {
    let m: ThresholdToleranceModel = read_json(path)?;
    if m.w.len() != m.t.len() {
        return Err(Error::Invalid(format!(
            "{} weights but {} tolerances",
            m.w.len(),
            m.t.len()
        )));
    }
    Ok(m)
}

fn recognize(graph: &Path, emit: Emit) -> Result<Reply> {
    let h = read_graph(graph)?;
    let Some(ord) = find_min_ordering(&h) else {
        return Ok(Reply::no());
    };
    certify_ordering(&h, &ord)?;
    let mut reply = Reply::yes().with("ordering", &ord);
    if matches!(emit, Emit::Model | Emit::All) {
        let model = signed_from_min_ordering(&h, &ord)?;
        certify(realize_signed(&model) == h, "signed-interval model")?;
        reply = reply.with("signed_model", &model);
    }
    if matches!(emit, Emit::Biarc | Emit::All) {
        let model = biarc_from_min_ordering(&h, &ord)?;
        certify(realize_biarc(&model) == h, "bi-arc model")?;
        certify(ordering_generated(&model)? == ord, "bi-arc ordering")?;
        reply = reply.with("biarc_model", &model);
    }
    Ok(reply)
}

fn check_ordering(graph: &Path, order: Vec<usize>) -> Result<Reply> {
    let h = read_graph(graph)?;
    let ord = VertexOrdering::new(order)?;
    let violation = verify_min_ordering(&h, &ord)?;
    let counterexample = verify_via_extrema(&h, &ord)?;
    certify(
        violation.is_none() == counterexample.is_none(),
        "extrema characterisation",
    )?;
    let reply = match violation {
        None => Reply::yes(),
        Some(v) => {
            certify(v.holds(&h, &ord), "violation")?;
            Reply::no()
                .with("violation", v)
                .with("extrema_counterexample", counterexample)
        }
    };
    Ok(reply.with("ordering", &ord).with("extrema", extrema(&h, &ord)?))
}

fn realize(model: &Path, kind: ModelKind, standard_cott: bool) -> Result<Reply> {
    if standard_cott && !matches!(kind, ModelKind::Cott) {
        return Err(Error::Invalid("--standard-cott applies to co-TT models only".into()));
    }
    let graph = match kind {
        ModelKind::Signed => realize_signed(&read_json::<SignedIntervalModel>(model)?),
        ModelKind::Cott => {
            let g = realize_cott(&read_json::<CoTTModel>(model)?);
            if standard_cott {
                g.without_loops()
            } else {
                g
            }
        }
        ModelKind::Tt => read_tt(model)?.realize(),
        ModelKind::Biarc => realize_biarc(&read_json::<BiArcModel>(model)?),
        ModelKind::Rays => {
            let b = realize_rays(&read_json::<RayModel>(model)?);
            return Ok(Reply::yes()
                .with("graph", b.graph())
                .with("part_a", b.part_a())
                .with("part_b", b.part_b()));
        }
    };
    Ok(Reply::yes().with("graph", graph))
}

fn convert_graph(h: Digraph, to: Format, standard_cott: bool) -> Result<Reply> {
    if standard_cott {
        if to != Format::Cott {
            return Err(Error::Invalid("--standard-cott applies to `--to cott` only".into()));
        }
        let lifted = standard_cott_lift(&h)?;
        let Some(ord) = find_min_ordering(&lifted) else {
            return Ok(Reply::no().with("lifted_graph", &lifted));
        };
        let model = cott_from_min_ordering(&lifted, &ord)?;
        certify(
            realize_cott(&model).without_loops() == h,
            "co-TT model on distinct pairs",
        )?;
        return Ok(Reply::yes()
            .with("lifted_graph", &lifted)
            .with("ordering", &ord)
            .with("model", &model));
    }
    if to == Format::Rays {
        let b = as_bipartite_digraph(&h)?;
        let Some(ord) = find_min_ordering(b.graph()) else {
            return Ok(Reply::no());
        };
        let model = rays_from_signed(&b, &signed_from_min_ordering(b.graph(), &ord)?)?;
        certify(realize_rays(&model) == b, "ray model")?;
        certify_ordering(b.graph(), &min_ordering_from_rays(&model)?)?;
        return Ok(Reply::yes().with("model", &model));
    }
    let Some(ord) = find_min_ordering(&h) else {
        return Ok(Reply::no());
    };
    certify_ordering(&h, &ord)?;
    let reply = Reply::yes().with("ordering", &ord);
    Ok(match to {
        Format::Ordering => reply,
        Format::Signed => {
            let m = signed_from_min_ordering(&h, &ord)?;
            certify(realize_signed(&m) == h, "signed-interval model")?;
            reply.with("model", m)
        }
        Format::Cott => {
            let m = cott_from_min_ordering(&h, &ord)?;
            certify(realize_cott(&m) == h, "co-TT model")?;
            reply.with("model", m)
        }
        Format::Interval => {
            let m = interval_model_from_min_ordering(&h, &ord)?;
            certify(m.is_interval_model() && realize_signed(&m) == h, "interval model")?;
            reply.with("model", &m).with("intervals", intervals_json(&m))
        }
        Format::Biarc => {
            let m = biarc_from_min_ordering(&h, &ord)?;
            certify(realize_biarc(&m) == h, "bi-arc model")?;
            reply.with("model", m)
        }
        Format::Tt => {
            let m = cott_from_min_ordering(&h, &ord)?;
            certify(realize_cott(&m) == h, "co-TT model")?;
            let tt = cott_to_threshold_tolerance(&m);
            certify(
                tt.realize() == h.complement(Diagonal::Preserve).without_loops(),
                "threshold-tolerance model",
            )?;
            reply.with("model", tt)
        }
        Format::Graph | Format::Rays => unreachable!("handled above"),
    })
}

fn intervals_json(m: &SignedIntervalModel) -> Value {
    let ivs = m.intervals().unwrap_or_default();
    Value::Array(
        ivs.iter()
            .map(|(l, r)| json!([siginterval::rational::format(l), siginterval::rational::format(r)]))
            .collect(),
    )
}

fn convert(input: &Path, from: Format, to: Format, standard_cott: bool) -> Result<Reply> {
    if standard_cott && from != Format::Graph {
        return Err(Error::Invalid("--standard-cott applies to `--from graph` only".into()));
    }
    let unsupported = || Err(Error::Invalid("unsupported conversion".into()));
    match from {
        Format::Graph => convert_graph(read_graph(input)?, to, standard_cott),
        Format::Cott => {
            let m: CoTTModel = read_json(input)?;
            let h = realize_cott(&m);
            match to {
                Format::Signed => {
                    let s = cott_to_signed(&m);
                    certify(realize_signed(&s) == h, "signed form")?;
                    Ok(Reply::yes().with("model", s))
                }
                Format::Tt => {
                    let tt = cott_to_threshold_tolerance(&m);
                    certify(
                        tt.realize() == h.complement(Diagonal::Preserve).without_loops(),
                        "threshold-tolerance model",
                    )?;
                    Ok(Reply::yes().with("model", tt))
                }
                Format::Ordering => {
                    let ord = min_ordering_from_signed(&cott_to_signed(&m))?;
                    certify_ordering(&h, &ord)?;
                    Ok(Reply::yes().with("ordering", ord))
                }
                Format::Graph => Ok(Reply::yes().with("graph", h)),
                _ => unsupported(),
            }
        }
        Format::Signed => {
            let m: SignedIntervalModel = read_json(input)?;
            let h = realize_signed(&m);
            match to {
                Format::Ordering => {
                    let ord = min_ordering_from_signed(&m)?;
                    certify_ordering(&h, &ord)?;
                    Ok(Reply::yes().with("ordering", ord))
                }
                Format::Graph => Ok(Reply::yes().with("graph", h)),
                Format::Biarc => convert_graph(h, Format::Biarc, false),
                _ => unsupported(),
            }
        }
        Format::Biarc => {
            let m: BiArcModel = read_json(input)?;
            let h = realize_biarc(&m);
            match to {
                Format::Ordering => {
                    let ord = ordering_generated(&m)?;
                    certify_ordering(&h, &ord)?;
                    Ok(Reply::yes().with("ordering", ord))
                }
                Format::Graph => Ok(Reply::yes().with("graph", h)),
                Format::Signed => convert_graph(h, Format::Signed, false),
                _ => unsupported(),
            }
        }
        Format::Rays => {
            let m: RayModel = read_json(input)?;
            let b = realize_rays(&m);
            match to {
                Format::Ordering => {
                    let ord = min_ordering_from_rays(&m)?;
                    certify_ordering(b.graph(), &ord)?;
                    Ok(Reply::yes().with("ordering", ord))
                }
                Format::Graph => Ok(Reply::yes().with("graph", b.graph())),
                _ => unsupported(),
            }
        }
        Format::Tt => {
            let m = read_tt(input)?;
            match to {
                Format::Graph => Ok(Reply::yes().with("graph", m.realize())),
                _ => unsupported(),
            }
        }
        Format::Ordering | Format::Interval => unsupported(),
    }
}

fn obstruct(graph: &Path, find: Find) -> Result<Reply> {
    let h = read_graph(graph)?;
    match find {
        Find::All => {
            let obstruction = match lekkerkerker_boland(&h)? {
                IntervalVerdict::Interval => None,
                IntervalVerdict::Obstructed { obstruction } => Some(obstruction),
            };
            if let Some(o) = &obstruction {
                let ok = match o {
                    Obstruction::InducedCycle { cycle } => is_induced_cycle(&h, cycle),
                    Obstruction::AsteroidalTriple(at) => at.is_valid(&h),
                };
                certify(ok, "obstruction")?;
            }
            let ordering = find_min_ordering(&h);
            certify(
                ordering.is_some() == obstruction.is_none(),
                "interval verdict against min ordering",
            )?;
            let reply = if obstruction.is_some() {
                Reply::yes()
            } else {
                Reply::no()
            };
            Ok(reply
                .with("interval", obstruction.is_none())
                .with("obstruction", obstruction)
                .with("ordering", ordering))
        }
        Find::Cycle => {
            let lengths: Vec<usize> = (4..=h.vertex_count().max(4)).collect();
            match find_induced_cycle(&h, &lengths)? {
                Some(c) => {
                    certify(is_induced_cycle(&h, &c), "induced cycle")?;
                    Ok(Reply::yes().with("cycle", c))
                }
                None => Ok(Reply::no()),
            }
        }
        Find::Asteroidal => match find_asteroidal_triple(&h)? {
            Some(at) => {
                certify(at.is_valid(&h), "asteroidal triple")?;
                Ok(Reply::yes().with("asteroidal_triple", at))
            }
            None => Ok(Reply::no()),
        },
        Find::Invertible => match find_invertible_pair(&h)? {
            Some(ip) => {
                certify(ip.is_valid(&h), "invertible pair")?;
                Ok(Reply::yes().with("invertible_pair", ip))
            }
            None => Ok(Reply::no()),
        },
    }
}

fn hom(template: &Path, input: &Path, lists: Option<&Path>, brute_force: bool) -> Result<Reply> {
    let h = read_graph(template)?;
    let g = read_graph(input)?;
    let lists = match lists {
        Some(p) => ListAssignment::from_map(
            &read_json::<BTreeMap<String, Vec<usize>>>(p)?,
            g.vertex_count(),
            h.vertex_count(),
        )?,
        None => ListAssignment::full(g.vertex_count(), h.vertex_count()),
    };
    let (found, ord) = if brute_force {
        (brute_force_hom(&g, &h, &lists)?, None)
    } else {
        let ord = find_min_ordering(&h)
            .ok_or_else(|| Error::Precondition("template has no min ordering; use --brute-force".into()))?;
        (solve_list_hom(&g, &h, &ord, &lists)?, Some(ord))
    };
    let reply = match found {
        Some(f) => {
            certify(f.is_valid(&g, &h, Some(&lists)), "homomorphism")?;
            Reply::yes().with("map", f)
        }
        None => Reply::no(),
    };
    Ok(match ord {
        Some(ord) => reply.with("template_ordering", ord),
        None => reply,
    })
}

fn rows_json(m: &BinaryMatrix) -> Value {
    serde_json::to_value(m).expect("serializable")
}

fn matrix(op: MatrixOp) -> Result<Reply> {
    match op {
        MatrixOp::Find { matrix, pattern } => {
            let m = read_matrix(&matrix)?;
            match find_pattern(&m, pattern) {
                Some(occ) => {
                    certify(occurs_at(&m, pattern, occ), "occurrence")?;
                    let (i1, i2, j1, j2) = occ;
                    Ok(Reply::yes().with("occurrence", [i1, i2, j1, j2]))
                }
                None => Ok(Reply::no()),
            }
        }
        MatrixOp::KlFree { matrix } => {
            let m = read_matrix(&matrix)?;
            if is_kl_free(&m) {
                return Ok(Reply::yes());
            }
            let (pattern, (i1, i2, j1, j2)) = [Pattern::K, Pattern::L]
                .into_iter()
                .find_map(|p| find_pattern(&m, p).map(|o| (p, o)))
                .ok_or_else(|| Error::Internal("pattern scan disagrees with K,L-freeness".into()))?;
            Ok(Reply::no()
                .with("pattern", pattern)
                .with("occurrence", [i1, i2, j1, j2]))
        }
        MatrixOp::Transform { matrix, op } => {
            Ok(Reply::yes().with("matrix", rows_json(&transform(&read_matrix(&matrix)?, op))))
        }
        MatrixOp::Augment { matrix } => Ok(Reply::yes().with("matrix", rows_json(&augment(&read_matrix(&matrix)?)))),
        MatrixOp::Orderable { matrix, independent } => {
            let m = read_matrix(&matrix)?;
            let found = if independent {
                independent_kl_free(&m)
            } else {
                min_orderable(&m)?.map(|p| (p.clone(), p))
            };
            permutation_reply(&m, found, &[Pattern::K, Pattern::L])
        }
        MatrixOp::GammaFree { matrix, independent } => {
            let m = read_matrix(&matrix)?;
            let found = if independent {
                gamma_free_independent(&m)?
            } else {
                gamma_free_simultaneous(&m)?.map(|p| (p.clone(), p))
            };
            permutation_reply(&m, found, &[Pattern::Gamma])
        }
    }
}

fn permutation_reply(m: &BinaryMatrix, found: Option<(Vec<usize>, Vec<usize>)>, avoid: &[Pattern]) -> Result<Reply> {
    let Some((rows, cols)) = found else {
        return Ok(Reply::no());
    };
    let permuted = m.permuted(&rows, &cols);
    certify(is_free_of(&permuted, avoid), "permuted matrix")?;
    Ok(Reply::yes()
        .with("rows", rows)
        .with("cols", cols)
        .with("matrix", rows_json(&permuted)))
}

fn run(command: Command) -> Result<Reply> {
    match command {
        Command::Recognize { graph, emit } => recognize(&graph, emit),
        Command::CheckOrdering { graph, order } => check_ordering(&graph, order),
        Command::Realize {
            model,
            kind,
            standard_cott,
        } => realize(&model, kind, standard_cott),
        Command::Convert {
            input,
            from,
            to,
            standard_cott,
        } => convert(&input, from, to, standard_cott),
        Command::Obstruct { graph, find } => obstruct(&graph, find),
        Command::Hom {
            template,
            input,
            lists,
            brute_force,
        } => hom(&template, &input, lists.as_deref(), brute_force),
        Command::Matrix { op } => matrix(op),
        Command::Sweep {
            n,
            random_n,
            samples,
            seed,
        } => {
            let report = sweep::full(n, random_n, samples, seed)?;
            let reply = if report.passed() { Reply::yes() } else { Reply::no() };
            Ok(reply.with("report", report).with("seed", seed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (status, code, mut body) = match run(cli.command) {
        Ok(Reply { yes: true, body }) => ("yes", 0, body),
        Ok(Reply { yes: false, body }) => ("no", 1, body),
        Err(e) => {
            let (status, code) = if matches!(e, Error::Internal(_)) {
                ("internal", 3)
            } else {
                ("error", 2)
            };
            let mut body = Map::new();
            body.insert("message".into(), Value::String(e.to_string()));
            (status, code, body)
        }
    };
    body.insert("status".into(), Value::String(status.into()));
    let value = Value::Object(body);
    let text = if cli.pretty {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    };
    println!("{}", text.expect("JSON values always serialize"));
    ExitCode::from(code)
}
