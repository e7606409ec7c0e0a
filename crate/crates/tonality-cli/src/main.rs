//! Command line front end: cadence listings, single-modulation quanta,
//! the full modulation catalog, and nerve statistics, over any scale in
//! any supported tone space.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tonality::wire::{rows_to_wire, tetradic_major_reference_json, wires_from_json, CatalogRowWire};
use tonality::{
    complex_stats, compute_nerve, compute_quantum_with_rigidity, minimal_cadential_sets,
    modulation_catalog, parse_degree_set, AffineSymmetry, CatalogOptions, CatalogRow, Error,
    Interpretation, Modulation, Modulus, Scale, SymmetryGroup,
};

#[derive(Parser)]
#[command(
    name = "tonality",
    version,
    about = "Cadential sets, modulation quanta, and chord-cover nerves over cyclic tone spaces"
)]
struct Cli {
    /// Number of pitch classes in the tone space
    #[arg(long, global = true, default_value_t = 12)]
    modulus: i64,

    /// Scale residues, comma separated
    #[arg(long, global = true, default_value = "0,2,4,5,7,9,11")]
    scale: String,

    /// Chord width: 3 stacks triads, 4 stacks seventh chords
    #[arg(long, global = true, default_value_t = 3)]
    width: usize,

    /// Output format; dot applies to the nerve only
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the minimal cadential sets of the scale's tonality orbit
    Cadences,
    /// Compute the quantum of one modulation into a transposed tonality
    Quantum {
        /// Transposition distance to the target tonality
        #[arg(long)]
        target_distance: i64,
        /// Scale-to-scale symmetry, e.g. T6, T6.11 or T6.-1
        #[arg(long)]
        modulator: String,
        /// Cadence degrees of the target, e.g. V or II7,V7
        #[arg(long)]
        cadence: String,
        /// Test rigidity against every unit multiplier, not just x -> -x
        #[arg(long)]
        widen_rigidity: bool,
    },
    /// Sweep all distances, minimal cadences and modulators
    Catalog {
        /// Keep only rows whose pivots cover the whole trace
        #[arg(long)]
        require_cover: bool,
        /// Test rigidity against every unit multiplier, not just x -> -x
        #[arg(long)]
        widen_rigidity: bool,
        /// Compare against the bundled reference catalog; exit 1 on any difference
        #[arg(long)]
        check_golden: bool,
    },
    /// Shape of the chord-cover nerve
    Nerve,
}

/// A diagnostic plus the exit code it deserves: 2 for bad input, 3 when a
/// computation would exceed the supported problem size.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            code: if error.is_capacity() { 3 } else { 2 },
            message: error.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn parse_scale(modulus: Modulus, text: &str) -> Result<Scale, Failure> {
    let mut residues = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let value: i64 = part
            .parse()
            .map_err(|_| Failure::invalid(format!("scale residue {part:?} is not an integer")))?;
        residues.push(value);
    }
    Scale::from_residues(modulus, residues).map_err(Failure::from)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let modulus = Modulus::new(cli.modulus)?;
    let scale = parse_scale(modulus, &cli.scale)?;
    let interpretation = Interpretation::new(scale, cli.width)?;
    let width = cli.width;

    match cli.command {
        Command::Cadences => {
            let catalog = minimal_cadential_sets(&interpretation.orbit())?;
            let rendered = match cli.format {
                Format::Text => render::cadences_text(catalog.minimal_sets(), width),
                Format::Csv => render::cadences_csv(catalog.minimal_sets(), width),
                Format::Json => render::cadences_json(catalog.minimal_sets(), width),
                Format::Dot => {
                    return Err(Failure::invalid("dot output exists only for the nerve"))
                }
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Quantum {
            target_distance,
            modulator,
            cadence,
            widen_rigidity,
        } => {
            let orbit = interpretation.orbit();
            let symmetry = AffineSymmetry::parse(modulus, &modulator)?;
            let degrees = parse_degree_set(&cadence)?;
            let modulation = Modulation::new(
                orbit.representative().clone(),
                orbit.member_at_distance(target_distance).clone(),
                symmetry,
                degrees,
            )?;
            let pool = if widen_rigidity {
                SymmetryGroup::full_affine(modulus)
            } else {
                SymmetryGroup::special_affine(modulus)
            };
            let outcome = compute_quantum_with_rigidity(&modulation, &pool)?;
            let rendered = match cli.format {
                Format::Text => render::quantum_text(&modulation, &outcome, width),
                Format::Csv => render::quantum_csv(&modulation, &outcome, width),
                Format::Json => render::quantum_json(&modulation, &outcome, width),
                Format::Dot => {
                    return Err(Failure::invalid("dot output exists only for the nerve"))
                }
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog {
            require_cover,
            widen_rigidity,
            check_golden,
        } => {
            let options = CatalogOptions {
                require_cover,
                widen_rigidity,
                ..CatalogOptions::default()
            };
            let rows = modulation_catalog(&interpretation.orbit(), &options)?;
            if check_golden {
                return golden_check(&rows, width);
            }
            let rendered = match cli.format {
                Format::Text => render::catalog_text(&rows, width),
                Format::Csv => render::catalog_csv(&rows, width),
                Format::Json => render::catalog_json(&rows, width),
                Format::Dot => {
                    return Err(Failure::invalid("dot output exists only for the nerve"))
                }
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Nerve => {
            let nerve = compute_nerve(&interpretation)?;
            let stats = complex_stats(&nerve);
            let rendered = match cli.format {
                Format::Text => render::nerve_text(&stats, width),
                Format::Json => render::nerve_json(&stats, width),
                Format::Dot => {
                    let mut edges = Vec::new();
                    for a in 0..nerve.vertex_count() {
                        for b in (a + 1)..nerve.vertex_count() {
                            if nerve.has_edge(a, b) {
                                edges.push((a, b));
                            }
                        }
                    }
                    render::nerve_dot(nerve.vertex_count(), width, &edges)
                }
                Format::Csv => {
                    return Err(Failure::invalid("the nerve has no csv form; use text, json or dot"))
                }
            };
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn show_wire(w: &CatalogRowWire) -> String {
    format!(
        "tr={} cadence={} quantum={} modulator={} pivots={} covered={}",
        w.tr,
        w.cadence.join(","),
        w.quantum
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(","),
        w.modulator,
        w.pivots.join(","),
        w.covered
    )
}

/// Compares the computed catalog with the bundled reference rows. Any
/// difference is listed on standard error and turns into exit code 1.
fn golden_check(rows: &[CatalogRow], width: usize) -> Result<ExitCode, Failure> {
    let produced = rows_to_wire(rows, width);
    let reference = wires_from_json(tetradic_major_reference_json())?;
    if produced == reference {
        println!(
            "golden check: all {} rows match the bundled reference",
            produced.len()
        );
        return Ok(ExitCode::SUCCESS);
    }
    eprintln!(
        "golden check failed: catalog has {} rows, bundled reference has {}",
        produced.len(),
        reference.len()
    );
    for row in reference.iter().filter(|r| !produced.contains(r)) {
        eprintln!("missing from catalog: {}", show_wire(row));
    }
    for row in produced.iter().filter(|r| !reference.contains(r)) {
        eprintln!("absent from reference: {}", show_wire(row));
    }
    Ok(ExitCode::from(1))
}
