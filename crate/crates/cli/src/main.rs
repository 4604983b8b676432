use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dessin_core::classify::{self, Presentation, QuotientKind};
use dessin_core::dessin::{parse_perm_dessin, write_graph, write_perm_dessin};
use dessin_core::ops::{self, OmegaStarOp};
use dessin_core::paley::{self, CurveVariant, Limits};
use dessin_core::{Error, PaleyParams};

#[derive(Parser)]
#[command(name = "gpdessin", version, about = "Generalised Paley dessins")]
struct Cli {
    /// Largest field order that may be constructed.
    #[arg(long, global = true, default_value_t = Limits::default().max_q)]
    max_q: u64,
    /// Largest edge count that may be constructed.
    #[arg(long, global = true, default_value_t = Limits::default().max_edges)]
    max_edges: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the isomorphism classes GP(n, p), optionally one colour only.
    Enumerate {
        n: u64,
        p: u64,
        #[arg(long)]
        c: Option<u64>,
    },
    /// Type, genus, chirality and sub-structure predicates.
    Info {
        n: u64,
        p: u64,
        c: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
    },
    /// Orbit under dualities, trialities and the mirror.
    Orbit {
        n: u64,
        p: u64,
        c: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
    },
    /// Which of the twelve operations fix the dessin.
    Invariance { n: u64, p: u64, c: u64 },
    /// Whether the dessins in GP(n, p) are real or chiral.
    Chirality { n: u64, p: u64 },
    /// Some i with p^i = -1 mod n.
    MinusOne { n: u64, p: u64 },
    /// Genus of the quotient by the translation subgroup.
    QuotientGenus { n: u64, c: u64 },
    /// Galois orbit and field of definition degree.
    Galois { n: u64, p: u64, c: u64 },
    /// Exponents of the plane curve model over a prime field.
    CurveModel {
        n: u64,
        p: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
        #[arg(long, value_enum, default_value_t = Variant::C0)]
        variant: Variant,
    },
    /// k-fold cyclic cover with lifted colour c_tilde.
    Cover {
        n: u64,
        p: u64,
        c: u64,
        k: u64,
        c_tilde: u64,
    },
    /// Analyse a dessin file and recognise it if it is generalised Paley.
    Classify { file: PathBuf },
    /// Parameters satisfying the relators in a file.
    Match {
        n: u64,
        p: u64,
        #[arg(long)]
        relators: PathBuf,
    },
    /// Write the dessin as permutations or as an edge list.
    Export {
        n: u64,
        p: u64,
        c: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
        #[arg(long, value_enum, default_value_t = Format::Perm)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    C0,
    Cm1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Perm,
    Graph,
}

enum Failure {
    Domain(String),
    Size(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeBound { .. } => Failure::Size(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

fn kind_name(kind: QuotientKind) -> &'static str {
    match kind {
        QuotientKind::RegularPrimeDegree => "regular_prime_degree",
        QuotientKind::Frobenius => "frobenius",
        QuotientKind::Other => "other",
    }
}

fn type_line(t: &paley::TypeGenus) -> String {
    format!(
        "type=({},{},{}) genus={} chi={}",
        t.n, t.m, t.l, t.genus, t.chi
    )
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits {
        max_q: cli.max_q,
        max_edges: cli.max_edges,
    };
    let mut out = String::new();
    match cli.command {
        Command::Enumerate { n, p, c } => {
            let real = paley::is_real(n, p)?;
            for params in paley::enumerate(n, p, c)? {
                let t = paley::type_genus(n, p, params.c)?;
                writeln!(out, "{params} {} real={real}", type_line(&t)).unwrap();
            }
        }
        Command::Info { n, p, c, j } => {
            let params = PaleyParams::new(n, p, c, j)?;
            let t = paley::type_genus(n, p, c)?;
            let s = paley::substructure_predicates(n, p, c)?;
            writeln!(out, "{}", params.canonicalize()).unwrap();
            writeln!(out, "{}", type_line(&t)).unwrap();
            writeln!(out, "real={}", paley::is_real(n, p)?).unwrap();
            writeln!(
                out,
                "white_primitive={} face_primitive={} is_map={} defined_over_q={}",
                s.white_primitive, s.face_primitive, s.is_map, s.defined_over_q
            )
            .unwrap();
            let g = paley::galois_data(n, p, c)?;
            writeln!(out, "galois_degree={}", g.field_degree).unwrap();
        }
        Command::Orbit { n, p, c, j } => {
            let params = PaleyParams::new(n, p, c, j)?;
            let orbit = ops::omega_orbits(&params, limits)?;
            writeln!(
                out,
                "omega_length={} omega_star_length={}",
                orbit.omega_length, orbit.omega_star_length
            )
            .unwrap();
            for m in &orbit.members {
                let names: Vec<String> = m.ops.iter().map(OmegaStarOp::name).collect();
                let (a, b, cc) = m.dessin_type;
                let what = m.paley.map_or("not-paley".to_string(), |p| p.to_string());
                writeln!(out, "{} type=({a},{b},{cc}) {what}", names.join(",")).unwrap();
            }
        }
        Command::Invariance { n, p, c } => {
            let t = ops::invariance_table(n, p, c)?;
            for (op, b) in &t.entries {
                writeln!(out, "{op}={b}").unwrap();
            }
            writeln!(out, "k={} k_star={}", t.k(), t.k_star()).unwrap();
            writeln!(out, "hole_invariant={}", t.hole_invariant).unwrap();
            writeln!(out, "kaleidoscopic={}", t.kaleidoscopic).unwrap();
        }
        Command::Chirality { n, p } => {
            let real = paley::is_real(n, p)?;
            let total = paley::count(n, p)?;
            let pairs = if real { 0 } else { total / 2 };
            writeln!(out, "real={real} dessins={total} chiral_pairs={pairs}").unwrap();
        }
        Command::MinusOne { n, p } => match paley::minus_one_exponent(n, p)? {
            Some(i) => writeln!(out, "i={i}").unwrap(),
            None => writeln!(out, "i=none").unwrap(),
        },
        Command::QuotientGenus { n, c } => {
            writeln!(out, "genus={}", paley::quotient_genus(n, c)?).unwrap();
        }
        Command::Galois { n, p, c } => {
            let g = paley::galois_data(n, p, c)?;
            writeln!(out, "field_degree={}", g.field_degree).unwrap();
            for params in g.orbit {
                writeln!(out, "{params}").unwrap();
            }
        }
        Command::CurveModel { n, p, j, variant } => {
            let variant = match variant {
                Variant::C0 => CurveVariant::Zero,
                Variant::Cm1 => CurveVariant::MinusOne,
            };
            let m = paley::curve_model(n, p, j, variant)?;
            let exps: Vec<String> = m.exponents.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "u={} variant={} exponents={}",
                m.u,
                m.variant,
                exps.join(",")
            )
            .unwrap();
        }
        Command::Cover {
            n,
            p,
            c,
            k,
            c_tilde,
        } => {
            let params = PaleyParams::new(n, p, c, 1)?;
            let cover = paley::cyclic_cover_bounded(&params, k, c_tilde, limits)?;
            let d = &cover.dessin;
            let (a, b, cc) = d.dessin_type();
            let (chi, genus) = d.euler_and_genus();
            writeln!(
                out,
                "edges={} type=({a},{b},{cc}) genus={genus} chi={chi}",
                d.edge_count()
            )
            .unwrap();
            let base = paley::construct_bounded(&params, limits)?;
            let back = d.quotient(&cover.kernel)?.is_isomorphic(&base);
            writeln!(
                out,
                "kernel_order={} quotient_is_base={back}",
                cover.kernel.len()
            )
            .unwrap();
            writeln!(out, "complement={}", cover.group.complement().is_some()).unwrap();
        }
        Command::Classify { file } => {
            let d = parse_perm_dessin(&read(&file)?)?.to_regular()?;
            let r = classify::recognize_paley(&d)?;
            let rep = &r.report;
            let what = match (&r.params, &r.diagnosis) {
                (Some(p), _) => p.to_string(),
                (None, Some(why)) => format!("not-paley ({why})"),
                (None, None) => "not-paley".to_string(),
            };
            writeln!(
                out,
                "primitive={} faithful={} {what}",
                rep.primitive, rep.faithful
            )
            .unwrap();
            let (a, b, cc) = d.dessin_type();
            writeln!(
                out,
                "edges={} type=({a},{b},{cc}) genus={}",
                d.edge_count(),
                d.genus()
            )
            .unwrap();
            writeln!(
                out,
                "black_count={} transitive={} regular_on_black={}",
                rep.black_count, rep.transitive, rep.regular_on_black
            )
            .unwrap();
            writeln!(
                out,
                "kernel_order={} kernel_cyclic={} kernel_central={} quotient_kind={}",
                rep.kernel_order,
                rep.kernel_cyclic,
                rep.kernel_central,
                kind_name(rep.quotient_kind)
            )
            .unwrap();
        }
        Command::Match { n, p, relators } => {
            let pres = Presentation::parse(&read(&relators)?)?;
            let colours: Vec<String> = classify::abelianized_colours(n, &pres)
                .iter()
                .map(u64::to_string)
                .collect();
            writeln!(out, "abelianized_c={}", colours.join(",")).unwrap();
            for m in classify::match_presentation(n, p, &pres)? {
                let r = m.r.map_or("none".to_string(), |r| r.to_string());
                writeln!(out, "{} c={} r={r}", m.params, m.params.c).unwrap();
            }
        }
        Command::Export { n, p, c, j, format } => {
            let params = PaleyParams::new(n, p, c, j)?;
            let d = paley::construct_bounded(&params, limits)?.to_perm_dessin();
            out = match format {
                Format::Perm => write_perm_dessin(&d),
                Format::Graph => write_graph(&d),
            };
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Size(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
