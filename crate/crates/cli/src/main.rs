mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use schubaut::report::{parse_word, single_report, survey, survey_elements, CohomologyRequest, ReportOptions};
use schubaut::weyl::DEFAULT_CAP;
use schubaut::{Error, RootSystem, TypeLetter};

/// Automorphism groups of Schubert varieties in G/B.
///
/// Words are comma-separated 1-based simple-root labels in Bourbaki numbering,
/// e.g. `--word 2,1` for s2 s1.
#[derive(Debug, Parser)]
#[command(name = "schubaut", version)]
struct Args {
    /// Cartan type letter, A to G.
    #[arg(long = "type", value_name = "LETTER")]
    letter: String,

    #[arg(long)]
    rank: usize,

    /// Reduced or unreduced word for w; `e` or an empty string for the identity.
    #[arg(long, value_name = "I,J,K", conflicts_with = "survey", required_unless_present = "survey")]
    word: Option<String>,

    /// One row per element of the Weyl group.
    #[arg(long)]
    survey: bool,

    #[arg(long, requires = "survey")]
    smooth_only: bool,

    #[arg(long)]
    json: bool,

    /// Describe the kernel of P_w -> Aut0 (simply-laced types only).
    #[arg(long, conflicts_with = "survey")]
    kernel: bool,

    /// Bundle to report: `b`, `g/b` or `line:c1,...` (root coordinates). Repeatable;
    /// defaults to g/b and b.
    #[arg(long, value_name = "BUNDLE", conflicts_with = "survey")]
    cohomology: Vec<String>,

    /// Maximum number of group or interval elements to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(usize))]
    cap: usize,

    /// Directory for the enumerated-group cache used by surveys.
    #[arg(long = "cache", value_name = "DIR", env = "SCHUBAUT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::Parse(_)
            | Error::InvalidType { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NotARoot(_)
            | Error::NotSimple(_)
            | Error::NotDominant(_)
            | Error::Dimension { .. },
        ) => 2,
        Some(Error::TooLarge { .. }) => 3,
        Some(Error::Invariant(_)) => 4,
        Some(Error::Unsupported(_)) => 5,
        _ => 1,
    }
}

fn system(args: &Args) -> schubaut::Result<RootSystem> {
    let mut chars = args.letter.chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => TypeLetter::from_char(c),
        _ => None,
    }
    .ok_or_else(|| Error::Parse(format!("--type expects one letter A..G, got {:?}", args.letter)))?;
    RootSystem::build(letter, args.rank)
}

fn run(args: &Args) -> anyhow::Result<String> {
    if args.cap == 0 {
        return Err(Error::Parse("--cap must be positive".into()).into());
    }
    let rs = system(args)?;
    if args.survey {
        let report = match &args.cache_dir {
            Some(dir) => {
                let cached = cache::load_or_build(dir, &rs, args.cap)?;
                survey_elements(&rs, &cached.group, args.smooth_only, args.cap)?
            }
            None => survey(&rs, args.smooth_only, args.cap)?,
        };
        return Ok(if args.json {
            serde_json::to_string_pretty(&report)? + "\n"
        } else {
            render::survey(&report)
        });
    }

    let w = parse_word(&rs, args.word.as_deref().unwrap_or(""))?;
    let mut options = ReportOptions {
        kernel: args.kernel,
        cap: args.cap,
        ..ReportOptions::default()
    };
    if !args.cohomology.is_empty() {
        options.cohomology = args
            .cohomology
            .iter()
            .map(|s| CohomologyRequest::parse(s).map_err(Error::Parse))
            .collect::<Result<_, _>>()?;
    }
    let report = single_report(&rs, &w, &options)?;
    Ok(if args.json {
        serde_json::to_string_pretty(&report)? + "\n"
    } else {
        render::query(&report)
    })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
