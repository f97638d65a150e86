//! `seifert` — exact invariants of Seifert fibred 3-manifolds from the
//! command line. Exit codes: 0 success/agreement, 1 content mismatch,
//! 2 input error, 3 I/O error.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use seifert_core::applications::census::{enumerate_census, CensusBounds, CensusFilter};
use seifert_core::{
    admits_horizontal_foliation, euclidean_table, euler_class_vanishes, spherical_table,
    trefoil_ctf, trefoil_surgery, trefoil_zero_euler_ctf, vanishes_via_oracle,
    FoliationCertificate, FoliationVerdict, SeifertInvariants, SurgerySlope, VanishingVerdict,
};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const GOLDEN_TEXT: &str = include_str!("../golden/tables.txt");
const GOLDEN_CSV: &str = include_str!("../golden/tables.csv");

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "seifert",
    version,
    about = "Euler class of the normal bundle, horizontal foliations and trefoil surgeries \
             for Seifert fibred 3-manifolds, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one manifold descriptor
    Analyze {
        /// Compact form "g;b;a1/b1,a2/b2,..." (third field empty when
        /// there are no cone points) or JSON
        /// {"genus":g,"b":b,"cone":\[\[a1,b1\],...\]}
        descriptor: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Enumerate every normalized tuple in a box, with derived invariants
    Census {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 7)]
        max_cone_order: i64,
        #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
        b_min: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        b_max: i64,
        #[arg(long, default_value_t = 0)]
        genus_max: u32,
        /// "all" or "ctf-no-zero-euler" (rational homology spheres with a
        /// taut foliation but nonvanishing Euler class)
        #[arg(long, default_value = "all")]
        filter: String,
        /// csv (default) or json for JSON lines
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify p/q surgery on the right-handed trefoil
    Trefoil {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Regenerate the classification tables and diff against a golden copy
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Compare against this file instead of the embedded copy
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Sweep a box comparing the closed-form decision against the
    /// cohomological oracle
    OracleCheck {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_cone_order: i64,
        #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
        b_min: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        b_max: i64,
        #[arg(long, default_value_t = 1)]
        genus_max: u32,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

type CliResult = Result<(), (u8, String)>;

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Analyze { descriptor, format } => analyze(&descriptor, format),
        Command::Census {
            max_n,
            max_cone_order,
            b_min,
            b_max,
            genus_max,
            filter,
            format,
            out,
        } => {
            let bounds = CensusBounds {
                genus_max,
                b_min,
                b_max,
                max_cone_points: max_n,
                max_cone_order,
            };
            census(&bounds, &filter, format, out.as_deref())
        }
        Command::Trefoil { p, q, format } => trefoil(p, q, format),
        Command::Tables { format, golden } => tables(format, golden.as_deref()),
        Command::OracleCheck {
            max_n,
            max_cone_order,
            b_min,
            b_max,
            genus_max,
        } => {
            let bounds = CensusBounds {
                genus_max,
                b_min,
                b_max,
                max_cone_points: max_n,
                max_cone_order,
            };
            oracle_check(&bounds)
        }
    }
}

fn parse_descriptor(text: &str) -> Result<SeifertInvariants, (u8, String)> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        SeifertInvariants::from_json(trimmed).map_err(|e| (EXIT_INPUT, e.to_string()))
    } else {
        trimmed
            .parse::<SeifertInvariants>()
            .map_err(|e| (EXIT_INPUT, e.to_string()))
    }
}

fn certificate_json(verdict: &FoliationVerdict) -> serde_json::Value {
    match verdict.certificate {
        None => serde_json::Value::Null,
        Some(FoliationCertificate::BInRange) => json!({"condition": 1}),
        Some(FoliationCertificate::Fractions { c, d, i, j }) => {
            json!({"condition": 2, "c": c, "d": d, "i": i, "j": j})
        }
        Some(FoliationCertificate::Complements { c, d, i, j }) => {
            json!({"condition": 3, "c": c, "d": d, "i": i, "j": j})
        }
    }
}

fn big_opt(x: &Option<BigInt>) -> serde_json::Value {
    x.as_ref()
        .map_or(serde_json::Value::Null, |m| json!(m.to_string()))
}

fn analysis_report(input: &str, m: &SeifertInvariants) -> serde_json::Value {
    let norm = m.normalize();
    let verdict: VanishingVerdict = euler_class_vanishes(&norm);
    let oracle = vanishes_via_oracle(&norm);
    let foliation = admits_horizontal_foliation(&norm);
    let h1 = norm.first_homology();
    json!({
        "input": input,
        "invariants": m,
        "normalized": &norm,
        "descriptor": norm.to_string(),
        "geometry": norm.base_geometry().to_string(),
        "e": norm.euler_number().to_string(),
        "chi": norm.orbifold_euler_char().to_string(),
        "h1": {
            "rank": h1.rank,
            "torsion": h1.torsion.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "display": h1.to_string(),
        },
        "euler_class": {
            "vanishes": verdict.vanishes,
            "witness_m": big_opt(&verdict.witness_m),
            "reason": verdict.reason.to_string(),
        },
        "foliation": {
            "answer": foliation.answer.to_string(),
            "certificate": certificate_json(&foliation),
        },
        "oracle": {
            "vanishes": oracle.is_some(),
            "witness_m": big_opt(&oracle),
        },
        "agreement": verdict.vanishes == oracle.is_some(),
    })
}

fn analyze(descriptor: &str, format: Format) -> CliResult {
    let m = parse_descriptor(descriptor)?;
    let report = analysis_report(descriptor, &m);
    match format {
        Format::Json | Format::Csv => println!("{report:#}"),
        Format::Text => {
            let norm = m.normalize();
            println!("input:       {descriptor}");
            println!("normalized:  {norm}");
            println!("geometry:    {}", report["geometry"].as_str().unwrap());
            println!("e(M):        {}", report["e"].as_str().unwrap());
            println!("chi(B):      {}", report["chi"].as_str().unwrap());
            println!("H1:          {}", report["h1"]["display"].as_str().unwrap());
            println!(
                "euler class: {} ({}, witness m = {})",
                if report["euler_class"]["vanishes"].as_bool().unwrap() {
                    "zero"
                } else {
                    "nonzero"
                },
                report["euler_class"]["reason"].as_str().unwrap(),
                report["euler_class"]["witness_m"].as_str().unwrap_or("-"),
            );
            println!(
                "foliation:   {}",
                report["foliation"]["answer"].as_str().unwrap()
            );
            println!(
                "oracle:      agrees = {}",
                report["agreement"].as_bool().unwrap()
            );
        }
    }
    Ok(())
}

fn census(
    bounds: &CensusBounds,
    filter: &str,
    format: Format,
    out: Option<&std::path::Path>,
) -> CliResult {
    bounds.validate().map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let filter: CensusFilter = filter.parse().map_err(|e| (EXIT_INPUT, e))?;
    let records = enumerate_census(bounds).filter(move |r| filter.keeps(r));

    let mut buffer = Vec::new();
    let io_err = |e: std::io::Error| (EXIT_IO, e.to_string());
    match format {
        Format::Json => {
            seifert_core::applications::census::write_jsonl(records, &mut buffer).map_err(io_err)?
        }
        Format::Csv | Format::Text => {
            seifert_core::applications::census::write_csv(records, &mut buffer).map_err(io_err)?
        }
    }
    match out {
        Some(path) => std::fs::write(path, &buffer)
            .map_err(|e| (EXIT_IO, format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(&buffer).map_err(io_err)?,
    }
    Ok(())
}

fn trefoil(p: i64, q: i64, format: Format) -> CliResult {
    let slope = SurgerySlope::new(p, q).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let m = trefoil_surgery(slope);
    let ctf = trefoil_ctf(slope);
    let zero = trefoil_zero_euler_ctf(slope);
    // the closed-form classification this build is calibrated against
    let predicted_ctf = slope.p() < slope.q();
    let predicted_zero = predicted_ctf
        && if slope.p() == 0 {
            slope.q() == 1
        } else {
            (slope.q() - 1) % slope.p().abs() == 0
        };
    let agreement = ctf == predicted_ctf && zero == predicted_zero;

    let report = json!({
        "slope": {"p": slope.p(), "q": slope.q(), "display": slope.to_string()},
        "surgery": {
            "descriptor": m.to_string(),
            "invariants": &m,
            "geometry": m.base_geometry().to_string(),
            "e": m.euler_number().to_string(),
        },
        "ctf": ctf,
        "zero_euler_ctf": zero,
        "predicted": {"ctf": predicted_ctf, "zero_euler_ctf": predicted_zero},
        "agreement": agreement,
    });
    match format {
        Format::Json | Format::Csv => println!("{report:#}"),
        Format::Text => {
            println!("slope:          {slope}");
            println!("surgery:        {m}");
            println!("geometry:       {}", m.base_geometry());
            println!("ctf:            {ctf} (predicted {predicted_ctf})");
            println!("zero euler ctf: {zero} (predicted {predicted_zero})");
            println!("agreement:      {agreement}");
        }
    }
    if agreement {
        Ok(())
    } else {
        Err((
            EXIT_MISMATCH,
            format!("classification disagrees at slope {slope}"),
        ))
    }
}

fn tables(format: Format, golden: Option<&std::path::Path>) -> CliResult {
    let spherical = spherical_table();
    let euclidean = euclidean_table();
    let mut mismatches: Vec<String> = spherical.mismatches.clone();
    mismatches.extend(euclidean.mismatches.clone());
    if !mismatches.is_empty() {
        for m in &mismatches {
            eprintln!("table mismatch: {m}");
        }
        return Err((
            EXIT_MISMATCH,
            "table regeneration disagrees with the sweeps".into(),
        ));
    }

    let rendered = match format {
        Format::Text => {
            seifert_core::applications::tables::render_text(&spherical.rows, &euclidean.rows)
        }
        Format::Csv => {
            seifert_core::applications::tables::render_csv(&spherical.rows, &euclidean.rows)
        }
        Format::Json => return Err((EXIT_INPUT, "tables supports --format text or csv".into())),
    };
    let golden_content = match golden {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| (EXIT_IO, format!("{}: {e}", path.display())))?,
        None => match format {
            Format::Text => GOLDEN_TEXT.to_string(),
            _ => GOLDEN_CSV.to_string(),
        },
    };

    print!("{rendered}");
    if rendered == golden_content {
        Ok(())
    } else {
        for (i, (got, want)) in rendered.lines().zip(golden_content.lines()).enumerate() {
            if got != want {
                eprintln!("line {}: got  {got}", i + 1);
                eprintln!("line {}: want {want}", i + 1);
            }
        }
        let (g, w) = (rendered.lines().count(), golden_content.lines().count());
        if g != w {
            eprintln!("line counts differ: got {g}, want {w}");
        }
        Err((
            EXIT_MISMATCH,
            "regenerated tables differ from the golden copy".into(),
        ))
    }
}

fn oracle_check(bounds: &CensusBounds) -> CliResult {
    bounds.validate().map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let mut checked = 0usize;
    let mut disagreements = Vec::new();
    for record in enumerate_census(bounds) {
        let closed = record.enu_vanishes;
        let oracle = record.oracle_witness();
        if closed != oracle.is_some() {
            disagreements.push(record.invariants.to_string());
        }
        checked += 1;
    }
    println!(
        "checked {checked} tuples: {} disagreement(s)",
        disagreements.len()
    );
    if disagreements.is_empty() {
        Ok(())
    } else {
        for d in &disagreements {
            eprintln!("disagrees: {d}");
        }
        Err((EXIT_MISMATCH, "closed form and oracle disagree".into()))
    }
}
