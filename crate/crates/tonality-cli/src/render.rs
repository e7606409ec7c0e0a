//! Turns library results into the four output dialects.
//!
//! Text is for eyes, aligned into columns. CSV keeps one catalog field
//! per column and joins set members with semicolons so no field ever
//! needs quoting. JSON goes through the crate's wire schema. DOT renders
//! the nerve's 1-skeleton.

use serde_json::{json, Value};

use tonality::wire::{rows_to_wire, wires_to_json};
use tonality::{
    CatalogRow, ComplexStats, DegreeSet, Modulation, PitchClassSet, QuantumOutcome,
};

fn residue_items(set: &PitchClassSet) -> Vec<Value> {
    set.residues().map(|r| json!(r)).collect()
}

fn label_items(set: DegreeSet, width: usize) -> Vec<Value> {
    set.indices().map(|i| json!(tonality::degree_label(i, width))).collect()
}

/// Semicolon-joined ascending residues; empty sets become empty fields.
fn csv_set(set: &PitchClassSet) -> String {
    set.residues()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_labels(set: DegreeSet, width: usize) -> String {
    set.labels(width).replace(',', ";")
}

pub fn cadences_text(sets: &[DegreeSet], width: usize) -> String {
    let mut out = String::new();
    for set in sets {
        out.push_str(&set.labels(width));
        out.push('\n');
    }
    out
}

pub fn cadences_csv(sets: &[DegreeSet], width: usize) -> String {
    let mut out = String::from("cadence\n");
    for set in sets {
        out.push_str(&csv_labels(*set, width));
        out.push('\n');
    }
    out
}

pub fn cadences_json(sets: &[DegreeSet], width: usize) -> String {
    let value: Vec<Value> = sets.iter().map(|s| Value::Array(label_items(*s, width))).collect();
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

pub fn quantum_text(modulation: &Modulation, outcome: &QuantumOutcome, width: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!("source:    {}\n", modulation.source().scale()));
    out.push_str(&format!("target:    {}\n", modulation.target().scale()));
    out.push_str(&format!("modulator: {}\n", modulation.modulator()));
    out.push_str(&format!("cadence:   {}\n", modulation.cadence().labels(width)));
    match outcome {
        QuantumOutcome::Quantized(result) => {
            out.push_str(&format!("quantum:   {}\n", result.quantum));
            out.push_str(&format!("trace:     {}\n", result.trace));
            out.push_str(&format!("pivots:    {}\n", result.pivots.labels(width)));
            out.push_str(&format!("covered:   {}\n", result.covered));
        }
        QuantumOutcome::NotQuantized { trace, offending } => {
            out.push_str("not quantized\n");
            out.push_str(&format!("trace:     {}\n", trace));
            out.push_str(&format!("fixed by:  {}\n", offending));
        }
    }
    out
}

pub fn quantum_csv(modulation: &Modulation, outcome: &QuantumOutcome, width: usize) -> String {
    let mut out =
        String::from("quantized,modulator,cadence,quantum,trace,pivots,covered,fixed_by\n");
    let row = match outcome {
        QuantumOutcome::Quantized(result) => format!(
            "true,{},{},{},{},{},{},\n",
            modulation.modulator(),
            csv_labels(modulation.cadence(), width),
            csv_set(&result.quantum),
            csv_set(&result.trace),
            csv_labels(result.pivots, width),
            result.covered
        ),
        QuantumOutcome::NotQuantized { trace, offending } => format!(
            "false,{},{},,{},,,{}\n",
            modulation.modulator(),
            csv_labels(modulation.cadence(), width),
            csv_set(trace),
            offending
        ),
    };
    out.push_str(&row);
    out
}

pub fn quantum_json(modulation: &Modulation, outcome: &QuantumOutcome, width: usize) -> String {
    let value = match outcome {
        QuantumOutcome::Quantized(result) => json!({
            "quantized": true,
            "source": residue_items(&modulation.source().scale()),
            "target": residue_items(&modulation.target().scale()),
            "modulator": modulation.modulator().to_string(),
            "cadence": label_items(modulation.cadence(), width),
            "quantum": residue_items(&result.quantum),
            "trace": residue_items(&result.trace),
            "pivots": label_items(result.pivots, width),
            "covered": result.covered,
        }),
        QuantumOutcome::NotQuantized { trace, offending } => json!({
            "quantized": false,
            "source": residue_items(&modulation.source().scale()),
            "target": residue_items(&modulation.target().scale()),
            "modulator": modulation.modulator().to_string(),
            "cadence": label_items(modulation.cadence(), width),
            "trace": residue_items(trace),
            "fixed_by": offending.to_string(),
        }),
    };
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

fn annotation_list(row: &CatalogRow) -> String {
    row.annotations
        .iter()
        .map(|a| a.as_str())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn catalog_text(rows: &[CatalogRow], width: usize) -> String {
    let header = [
        "tr".to_string(),
        "cadence".to_string(),
        "quantum".to_string(),
        "modulator".to_string(),
        "pivots".to_string(),
        "covered".to_string(),
        "annotations".to_string(),
    ];
    let mut table: Vec<[String; 7]> = vec![header];
    for row in rows {
        table.push([
            row.distance.to_string(),
            row.cadence.labels(width),
            row.quantum.to_string(),
            row.modulator.to_string(),
            row.pivots.labels(width),
            row.covered.to_string(),
            annotation_list(row),
        ]);
    }
    let mut widths = [0usize; 7];
    for line in &table {
        for (i, cell) in line.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for line in &table {
        let mut rendered = String::new();
        for (i, cell) in line.iter().enumerate() {
            rendered.push_str(cell);
            if i + 1 < line.len() {
                for _ in cell.chars().count()..widths[i] + 2 {
                    rendered.push(' ');
                }
            }
        }
        out.push_str(rendered.trim_end());
        out.push('\n');
    }
    out
}

pub fn catalog_csv(rows: &[CatalogRow], width: usize) -> String {
    let mut out = String::from("tr,cadence,quantum,modulator,pivots,covered,annotations\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.distance,
            csv_labels(row.cadence, width),
            csv_set(&row.quantum),
            row.modulator,
            csv_labels(row.pivots, width),
            row.covered,
            annotation_list(row)
        ));
    }
    out
}

pub fn catalog_json(rows: &[CatalogRow], width: usize) -> String {
    wires_to_json(&rows_to_wire(rows, width))
}

pub fn nerve_text(stats: &ComplexStats, width: usize) -> String {
    let mut out = String::new();
    let counts: Vec<String> = stats.f_vector.counts().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("f-vector:             {}\n", counts.join(",")));
    out.push_str(&format!(
        "euler characteristic: {}\n",
        stats.euler_characteristic
    ));
    out.push_str(&format!(
        "complete 1-skeleton:  {}\n",
        stats.skeleton_complete
    ));
    out.push_str("maximal faces:\n");
    for face in &stats.maximal_faces {
        out.push_str(&format!("  {}\n", face.labels(width)));
    }
    out
}

pub fn nerve_json(stats: &ComplexStats, width: usize) -> String {
    let value = json!({
        "f_vector": stats.f_vector.counts(),
        "euler_characteristic": stats.euler_characteristic,
        "complete_skeleton": stats.skeleton_complete,
        "maximal_faces": stats
            .maximal_faces
            .iter()
            .map(|f| Value::Array(label_items(*f, width)))
            .collect::<Vec<Value>>(),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}

/// Undirected 1-skeleton as a DOT graph, vertices and edges in ascending
/// label order.
pub fn nerve_dot(vertex_count: usize, width: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::from("graph nerve {\n");
    for v in 0..vertex_count {
        out.push_str(&format!("  \"{}\";\n", tonality::degree_label(v, width)));
    }
    for (a, b) in edges {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            tonality::degree_label(*a, width),
            tonality::degree_label(*b, width)
        ));
    }
    out.push_str("}\n");
    out
}
