use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use shikit::cli::{
    bijection_records, count, invert, records_to_csv, records_to_json, region_records,
    CountMethod,
};
use shikit::error::Error;
use shikit::geometry::Family;
use shikit::lab::{gf_statistic, verify, Mode, Statistic, Suite};
use shikit::plot::render_svg;

/// Exact counting, bijections and statistics for the regions of the Shi
/// arrangements of types A and C.
#[derive(Parser)]
#[command(name = "shikit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count regions (geometrically, combinatorially, or both when unset)
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// geometric | combinatorial
        #[arg(long)]
        method: Option<String>,
    },
    /// Enumerate regions geometrically, one record per region
    Regions {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Copy index for shi-a sequences (default 1)
        #[arg(long)]
        copy: Option<usize>,
        /// json | csv
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The full bijection table over (copy ×) window × antichain
    Bijection {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Restrict shi-a output to one copy
        #[arg(long)]
        copy: Option<usize>,
        /// json | csv
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Invert a sequence to its region address
    Invert {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sequence: String,
    },
    /// Print a statistic polynomial as its coefficient list
    Stats {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// ceilings | floors | sequence-distinct
        #[arg(long)]
        statistic: String,
        /// geometric | combinatorial (default combinatorial)
        #[arg(long)]
        mode: Option<String>,
    },
    /// Run a verification suite; exit 1 on any failed check
    Verify {
        /// counts | theorem2 | theorem4 | bijectivity | classes | identities
        /// | geometry-cross-check | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// table | json
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Write an SVG picture of a small arrangement
    Plot {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> shikit::Result<ExitCode> {
    match cli.command {
        Command::Count { family, n, method } => {
            let family: Family = family.parse()?;
            let method = method.map(|m| m.parse::<CountMethod>()).transpose()?;
            let outcome = count(family, n, method)?;
            println!("{}", outcome.value);
            if let Some((geo, comb)) = outcome.mismatch {
                eprintln!("error: methods disagree (geometric {geo}, combinatorial {comb})");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Regions { family, n, copy, format, output } => {
            let family: Family = family.parse()?;
            let records = region_records(family, n, copy)?;
            emit(&format, &records, output.as_deref())
        }
        Command::Bijection { family, n, copy, format, output } => {
            let family: Family = family.parse()?;
            let records = bijection_records(family, n, copy)?;
            emit(&format, &records, output.as_deref())
        }
        Command::Invert { family, n, sequence } => {
            let family: Family = family.parse()?;
            print!("{}", invert(family, n, &sequence)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { family, n, statistic, mode } => {
            let family: Family = family.parse()?;
            let statistic: Statistic = statistic.parse()?;
            let mode = match mode {
                Some(m) => m.parse::<Mode>()?,
                None => Mode::Combinatorial,
            };
            println!("{}", gf_statistic(family, n, statistic, mode)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_n, format } => {
            let suite: Suite = suite.parse()?;
            let report = verify(suite, max_n);
            match format.as_str() {
                "table" => println!("{report}"),
                "json" => println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?
                ),
                other => return Err(Error::Parse(format!("unknown format `{other}`"))),
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Plot { family, n, output } => {
            let family: Family = family.parse()?;
            let svg = render_svg(family, n)?;
            std::fs::File::create(&output)
                .and_then(|mut f| f.write_all(svg.as_bytes()))
                .map_err(|e| Error::Internal(format!("cannot write {}: {e}", output.display())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(
    format: &str,
    records: &[shikit::cli::RegionRecord],
    output: Option<&std::path::Path>,
) -> shikit::Result<ExitCode> {
    let text = match format {
        "json" => records_to_json(records)?,
        "csv" => records_to_csv(records),
        other => return Err(Error::Parse(format!("unknown format `{other}`"))),
    };
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
