//! The `bouquet-o` command line.
//!
//! [`run`] parses arguments and returns the exit code with the text destined
//! for stdout and stderr, so the binary is a thin wrapper and tests can call
//! commands in process.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use bouquet_core::exact::rational::{self, serde_rational, Rational};
use bouquet_core::hypertoric::{
    block_decomposition, bounded_vectors, feasible_vectors, pbf, restrict_with_shift, support_dim,
    SignVector,
};
use bouquet_core::io::{chamber_tsv_row, tsv, ArrangementFile, CHAMBER_TSV_HEADER};
use bouquet_core::paramcat::{
    audit_at, classify, hom_digraph, multiplicity_table, reflect, res_table, socle_table, support_dims_ambient,
    support_dims_from_slice, CheckStatus, Convention, LambdaClass, SlicePart,
};
use bouquet_core::quiver::{
    dims, fixed_components, fixed_points, leaves, slice_labels, slice_spec, BouquetParams, SliceLabel,
    SubgroupKind,
};
use bouquet_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Dot,
    Ascii,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Tsv => "tsv",
            Format::Dot => "dot",
            Format::Ascii => "ascii",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "bouquet-o", version, about = "Category O computations for the bouquet quiver variety and its slice")]
pub struct Cli {
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub out: Option<Format>,
    /// Seed for sampled inputs (`classify --sample`).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Wall shift `s` of the negative half-spaces: `−` means `g ≤ −s`.
    #[arg(long, global = true, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub hshift: u8,
    /// Log timings to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Slice arrangement at λ̃: chambers, vertices, subquotients, blocks, supports.
    Slice {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda_tilde: String,
        /// Print only the arrangement file.
        #[arg(long)]
        emit_arrangement: bool,
    },
    /// Feasible, bounded and bounded-feasible sign vectors of an arrangement file (`-` for stdin).
    SignVectors {
        file: String,
        /// Use the classical arrangement (base point `eta`).
        #[arg(long)]
        classical: bool,
    },
    /// Torus fixed points of the bouquet quiver variety.
    FixedPoints { n: usize, ell: usize },
    /// Fixed components of a one-parameter subgroup on the rank-2 variety.
    FixedComponents {
        ell: usize,
        kind: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Symplectic leaves of the affine quotient.
    Leaves { n: usize, ell: usize },
    /// Dimensions of the resolution and its central fiber.
    Dims { n: usize, ell: usize },
    /// Singularity, localization and regime of λ.
    Classify {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Classify this many random rationals instead (uses --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Hom digraph between standards.
    Homs {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Multiplicities `[S_k : Δ_i]`.
    Mult {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Socles of the standards.
    Socles {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Restriction of standards and simples to the slice.
    Res {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Support dimensions of simples, ambient and through the slice.
    Support { ell: usize },
    /// Compare the restriction tables with the slice engine.
    Audit {
        ell: usize,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// The reflection λ ↦ −1 − λ.
    Reflect {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let mut stderr = String::new();
    let result = execute(&cli);
    if cli.verbose {
        stderr.push_str(&format!("[bouquet-o] {:?} in {:.3?}\n", cli.command, start.elapsed()));
    }
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome { code: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

fn q(s: &str) -> Result<Rational, Error> {
    rational::parse(s)
}

/// The requested format, or the first allowed one.
fn pick(cli: &Cli, allowed: &[Format], command: &str) -> Result<Format, Error> {
    match cli.out {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Error::Invalid(format!(
            "{command} does not write {f}; choose one of {}",
            allowed.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn execute(cli: &Cli) -> Result<String, Error> {
    use Format::*;
    match &cli.command {
        Command::Slice { ell, lambda_tilde, emit_arrangement } => {
            let lt = q(lambda_tilde)?;
            let spec = slice_spec(*ell, &lt)?;
            if *emit_arrangement {
                pick(cli, &[Json], "slice --emit-arrangement")?;
                return Ok(ArrangementFile::from_parts(&spec.quantized, Some(&spec.arrangement.eta))?.to_json());
            }
            let fmt = pick(cli, &[Json, Tsv], "slice")?;
            cmd_slice(&spec, Rational::from_integer(cli.hshift.into()), fmt)
        }
        Command::SignVectors { file, classical } => {
            let fmt = pick(cli, &[Json, Tsv], "sign-vectors")?;
            let text = if file == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?
            } else {
                std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))?
            };
            let a = ArrangementFile::from_json(&text)?;
            let quant = if *classical { a.to_polarized()?.as_quantized() } else { a.to_quantized()? };
            let r = restrict_with_shift(&quant, Rational::from_integer(cli.hshift.into()))?;
            cmd_sign_vectors(&r, fmt)
        }
        Command::FixedPoints { n, ell } => {
            let fmt = pick(cli, &[Json, Ascii], "fixed-points")?;
            let s = fixed_points(BouquetParams::new(*n, *ell)?)?;
            Ok(match fmt {
                Ascii => {
                    let mut out = String::new();
                    for (k, d) in s.diagrams.iter().enumerate() {
                        out.push_str(&format!("# {} {}\n{}\n", k + 1, d.family, d.ascii().trim_end()));
                        out.push('\n');
                    }
                    out
                }
                _ => json(&s),
            })
        }
        Command::FixedComponents { ell, kind, lambda } => {
            let fmt = pick(cli, &[Json, Tsv], "fixed-components")?;
            let kind: SubgroupKind = kind.parse()?;
            let d = fixed_components(*ell, kind, &q(lambda)?)?;
            Ok(match fmt {
                Tsv => tsv(
                    &["label", "dim", "quantization", "period"],
                    &d.components
                        .iter()
                        .map(|c| {
                            vec![
                                c.label.clone(),
                                c.dim.to_string(),
                                c.quantization_label.clone().unwrap_or_default(),
                                c.period.as_ref().map(rational::fmt).unwrap_or_default(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => json(&d),
            })
        }
        Command::Leaves { n, ell } => {
            let fmt = pick(cli, &[Json, Tsv], "leaves")?;
            let l = leaves(BouquetParams::new(*n, *ell)?)?;
            Ok(match fmt {
                Tsv => tsv(
                    &["type", "dimension_vectors", "dim", "stabilizer", "namikawa_group"],
                    &l.iter()
                        .map(|d| {
                            vec![
                                d.leaf_type.to_string(),
                                d.dim_vector_decomposition.clone(),
                                d.leaf_dim.to_string(),
                                d.stabilizer.clone(),
                                d.namikawa_group.clone(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => json(&l),
            })
        }
        Command::Dims { n, ell } => {
            let fmt = pick(cli, &[Json, Tsv], "dims")?;
            let d = dims(BouquetParams::new(*n, *ell)?);
            Ok(match fmt {
                Tsv => tsv(
                    &["resolution_dim", "half_dim", "central_fiber_dim", "central_fiber_flag"],
                    &[vec![
                        d.resolution_dim.to_string(),
                        d.half_dim.to_string(),
                        d.central_fiber_dim.to_string(),
                        serde_json::to_value(d.central_fiber_flag).expect("flag").as_str().unwrap_or("").to_string(),
                    ]],
                ),
                _ => json(&d),
            })
        }
        Command::Classify { ell, lambda, sample } => {
            let fmt = pick(cli, &[Json, Tsv], "classify")?;
            let classes: Vec<LambdaClass> = match (lambda, sample) {
                (Some(l), None) => vec![classify(*ell, &q(l)?)?],
                (None, Some(k)) => sample_lambdas(*ell, *k, cli.seed)
                    .iter()
                    .map(|l| classify(*ell, l))
                    .collect::<Result<_, _>>()?,
                _ => return Err(Error::Invalid("give either λ or --sample K".into())),
            };
            Ok(match fmt {
                Tsv => tsv(
                    &["lambda", "singular", "abelian_localization", "finite_hom_dim", "regime"],
                    &classes
                        .iter()
                        .map(|c| {
                            vec![
                                rational::fmt(&c.lambda),
                                c.singular.to_string(),
                                c.abelian_localization.to_string(),
                                c.finite_hom_dim.to_string(),
                                c.regime.to_string(),
                            ]
                        })
                        .collect::<Vec<_>>(),
                ),
                _ if sample.is_none() => json(&classes[0]),
                _ => json(&classes),
            })
        }
        Command::Homs { ell, lambda } => {
            let fmt = pick(cli, &[Json, Dot, Tsv], "homs")?;
            let g = hom_digraph(*ell, classify(*ell, &q(lambda)?)?.regime)?;
            Ok(match fmt {
                Dot => g.to_dot(),
                Tsv => tsv(
                    &["source", "target"],
                    &g.edges.iter().map(|(a, b)| vec![format!("Δ{a}"), format!("Δ{b}")]).collect::<Vec<_>>(),
                ),
                _ => json(&g),
            })
        }
        Command::Mult { ell, lambda } => {
            let fmt = pick(cli, &[Tsv, Json], "mult")?;
            let m = multiplicity_table(*ell, classify(*ell, &q(lambda)?)?.regime)?;
            Ok(match fmt {
                Json => json(&m),
                _ => m.to_tsv(),
            })
        }
        Command::Socles { ell, lambda } => {
            let fmt = pick(cli, &[Json, Tsv], "socles")?;
            let s = socle_table(*ell, classify(*ell, &q(lambda)?)?.regime)?;
            Ok(match fmt {
                Tsv => tsv(
                    &["standard", "socle", "standard_is_simple"],
                    &s.iter()
                        .map(|r| {
                            let soc: Vec<String> = r.socle.iter().map(|k| format!("S{k}")).collect();
                            vec![format!("Δ{}", r.k), soc.join(","), r.standard_is_simple.to_string()]
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => json(&s),
            })
        }
        Command::Res { ell, lambda } => {
            let fmt = pick(cli, &[Json, Tsv], "res")?;
            let t = res_table(*ell, classify(*ell, &q(lambda)?)?.regime)?;
            let show = |p: &SlicePart| match p {
                SlicePart::Sum(v) => v.iter().map(ToString::to_string).collect::<Vec<_>>().join("+"),
                SlicePart::Zero => "0".into(),
                SlicePart::Ambiguous(_) => "AMBIGUOUS".into(),
            };
            Ok(match fmt {
                Tsv => tsv(
                    &["i", "res_standard", "res_simple"],
                    &t.delta_images
                        .iter()
                        .map(|(i, d)| vec![i.to_string(), show(d), show(&t.simple_images[i])])
                        .collect::<Vec<_>>(),
                ),
                _ => json(&t),
            })
        }
        Command::Support { ell } => {
            let fmt = pick(cli, &[Json, Tsv], "support")?;
            cmd_support(*ell, fmt)
        }
        Command::Audit { ell, lambda } => {
            let fmt = pick(cli, &[Json, Tsv], "audit")?;
            let r = audit_at(*ell, &q(lambda)?)?;
            Ok(match fmt {
                Tsv => tsv(
                    &["check", "index", "status", "detail"],
                    &r.checks
                        .iter()
                        .map(|c| {
                            let status = match c.status {
                                CheckStatus::Pass => "PASS",
                                CheckStatus::Fail => "FAIL",
                                CheckStatus::Ambiguous => "AMBIGUOUS",
                            };
                            vec![c.name.clone(), c.index.to_string(), status.into(), c.detail.clone()]
                        })
                        .collect::<Vec<_>>(),
                ),
                _ => json(&r),
            })
        }
        Command::Reflect { lambda } => {
            let fmt = pick(cli, &[Json, Tsv], "reflect")?;
            #[derive(Serialize)]
            struct Reflected {
                #[serde(with = "serde_rational")]
                lambda: Rational,
                #[serde(with = "serde_rational")]
                reflected: Rational,
            }
            let l = q(lambda)?;
            let r = Reflected { reflected: reflect(&l), lambda: l };
            Ok(match fmt {
                Tsv => tsv(&["lambda", "reflected"], &[vec![rational::fmt(&r.lambda), rational::fmt(&r.reflected)]]),
                _ => json(&r),
            })
        }
    }
}

/// Rationals with denominator at most 12 and `|λ| ≤ ℓ + 3`.
pub fn sample_lambdas(ell: usize, count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = ell as i64 + 3;
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=12);
            rational::ratio(rng.gen_range(-bound * d..=bound * d), d)
        })
        .collect()
}

#[derive(Serialize)]
struct SliceChamber {
    label: Option<SliceLabel>,
    sign_vector: SignVector,
    #[serde(with = "serde_rational::vec")]
    vertex: Vec<Rational>,
    #[serde(with = "serde_rational")]
    xi_value: Rational,
    subquotients: Vec<SignVector>,
    socle: Vec<SignVector>,
    block: usize,
    support_dim: usize,
}

#[derive(Serialize)]
struct SliceOutput {
    ell: usize,
    #[serde(with = "serde_rational")]
    lambda_tilde: Rational,
    #[serde(with = "serde_rational")]
    hshift: Rational,
    arrangement: ArrangementFile,
    hyperplanes: Vec<bouquet_core::quiver::HyperplaneRow>,
    integrality_set: Vec<usize>,
    chambers: Vec<SliceChamber>,
    blocks: Vec<Vec<SignVector>>,
}

fn cmd_slice(spec: &bouquet_core::quiver::SliceSpec, shift: Rational, fmt: Format) -> Result<String, Error> {
    let r = restrict_with_shift(&spec.quantized, shift.clone())?;
    let d = block_decomposition(&r)?;
    let labels: BTreeMap<SignVector, SliceLabel> =
        slice_labels(spec.ell)?.into_iter().map(|(l, a)| (a, l)).collect();
    let mut chambers = Vec::new();
    let mut rows = Vec::new();
    for c in &d.chambers {
        let block = d.blocks.iter().position(|b| b.members.contains(&c.alpha)).expect("every chamber has a block");
        let sq = d.subquotients(&c.alpha).cloned().unwrap_or_default();
        rows.push(chamber_tsv_row(c, &sq));
        chambers.push(SliceChamber {
            label: labels.get(&c.alpha).copied(),
            sign_vector: c.alpha.clone(),
            vertex: c.vertex_w.clone(),
            xi_value: c.xi_value.clone(),
            socle: d.socle(&c.alpha).cloned().unwrap_or_default(),
            subquotients: sq,
            block,
            support_dim: support_dim(&r, &c.alpha, &spec.weight_matrix),
        });
    }
    Ok(match fmt {
        Format::Tsv => {
            let mut s = String::from(CHAMBER_TSV_HEADER);
            s.push('\n');
            for row in rows {
                s.push_str(&row);
                s.push('\n');
            }
            s
        }
        _ => json(&SliceOutput {
            ell: spec.ell,
            lambda_tilde: spec.lambda_tilde.clone(),
            hshift: shift,
            arrangement: ArrangementFile::from_parts(&spec.quantized, Some(&spec.arrangement.eta))?,
            hyperplanes: spec.hyperplane_table.clone(),
            integrality_set: r.integrality_set.clone(),
            chambers,
            blocks: d.blocks.iter().map(|b| b.members.clone()).collect(),
        }),
    })
}

fn cmd_sign_vectors(r: &bouquet_core::hypertoric::RestrictedArrangement, fmt: Format) -> Result<String, Error> {
    #[derive(Serialize)]
    struct Row {
        sign_vector: SignVector,
        feasible: bool,
        bounded: bool,
    }
    #[derive(Serialize)]
    struct Out {
        integrality_set: Vec<usize>,
        feasible: Vec<SignVector>,
        bounded: Vec<SignVector>,
        chambers: Vec<SignVector>,
    }
    let f = feasible_vectors(r);
    let b = bounded_vectors(r);
    let chambers: Vec<SignVector> = pbf(r)?.into_iter().map(|c| c.alpha).collect();
    Ok(match fmt {
        Format::Tsv => {
            let rows: Vec<Vec<String>> = r
                .all_sign_vectors()
                .into_iter()
                .map(|a| Row { feasible: f.contains(&a), bounded: b.contains(&a), sign_vector: a })
                .filter(|row| row.feasible || row.bounded)
                .map(|row| vec![row.sign_vector.to_string(), row.feasible.to_string(), row.bounded.to_string()])
                .collect();
            tsv(&["sign_vector", "feasible", "bounded"], &rows)
        }
        _ => json(&Out {
            integrality_set: r.integrality_set.clone(),
            feasible: f.into_iter().collect(),
            bounded: b.into_iter().collect(),
            chambers,
        }),
    })
}

fn cmd_support(ell: usize, fmt: Format) -> Result<String, Error> {
    #[derive(Serialize)]
    struct SliceRow {
        label: SliceLabel,
        sign_vector: SignVector,
        dim: usize,
    }
    #[derive(Serialize)]
    struct Out {
        ell: usize,
        ambient: BTreeMap<usize, i64>,
        slice: Vec<SliceRow>,
        from_slice: BTreeMap<Convention, BTreeMap<usize, Option<i64>>>,
    }
    let ambient = support_dims_ambient(ell)?;
    let spec = slice_spec(ell, &rational::int(-(ell as i64) - 1))?;
    let r = restrict_with_shift(&spec.quantized, rational::zero())?;
    let slice = slice_labels(ell)?
        .into_iter()
        .map(|(label, a)| SliceRow { dim: support_dim(&r, &a, &spec.weight_matrix), label, sign_vector: a })
        .collect();
    let from_slice: BTreeMap<Convention, BTreeMap<usize, Option<i64>>> = [Convention::Printed, Convention::Shifted]
        .into_iter()
        .map(|c| Ok((c, support_dims_from_slice(ell, c)?)))
        .collect::<Result<_, Error>>()?;
    Ok(match fmt {
        Format::Tsv => {
            let show = |v: Option<i64>| v.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            tsv(
                &["i", "ambient", "printed", "shifted"],
                &ambient
                    .iter()
                    .map(|(i, d)| {
                        vec![
                            format!("S{i}"),
                            d.to_string(),
                            show(from_slice[&Convention::Printed][i]),
                            show(from_slice[&Convention::Shifted][i]),
                        ]
                    })
                    .collect::<Vec<_>>(),
            )
        }
        _ => json(&Out { ell, ambient, slice, from_slice }),
    })
}
