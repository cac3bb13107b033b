//! Text and markdown rendering.

use cubic_k3::hassett::ConditionTable;
use cubic_k3::lattice::{FiniteQuadraticForm, Sublattice};
use cubic_k3::periods::DivisorReport;
use serde::Serialize;

const ROW_LABELS: [&str; 3] = ["(*)", "(**)", "(**')"];

/// Markdown table with check-mark/blank cells, mirroring the published
/// filled/empty layout. Columns are the values satisfying `(*)`.
pub fn table_markdown(t: &ConditionTable) -> String {
    let mut out = String::new();
    let mut header = String::from("| condition |");
    let mut sep = String::from("| --- |");
    for d in &t.columns {
        header.push_str(&format!(" {d} |"));
        sep.push_str(" --- |");
    }
    out.push_str(&header);
    out.push('\n');
    out.push_str(&sep);
    out.push('\n');
    for (label, members) in rows(t) {
        out.push_str(&format!("| {label} |"));
        for d in &t.columns {
            if members.contains(d) {
                out.push_str(" \u{2713} |");
            } else {
                out.push_str("  |");
            }
        }
        out.push('\n');
    }
    out
}

/// Fixed-width text table with explicit check/cross marks.
pub fn table_text(t: &ConditionTable) -> String {
    let mut out = String::new();
    if t.columns.is_empty() {
        out.push_str(&format!(
            "no even d in [{}, {}] satisfies (*)\n",
            t.from, t.to
        ));
        return out;
    }
    let width = t
        .columns
        .iter()
        .map(|d| d.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3)
        + 1;
    out.push_str(&format!("{:<10}", "d"));
    for d in &t.columns {
        out.push_str(&format!("{d:>width$}"));
    }
    out.push('\n');
    for (label, members) in rows(t) {
        out.push_str(&format!("{label:<10}"));
        for d in &t.columns {
            let mark = if members.contains(d) {
                "\u{2713}"
            } else {
                "\u{2717}"
            };
            out.push_str(&format!("{mark:>width$}"));
        }
        out.push('\n');
    }
    out
}

fn rows(t: &ConditionTable) -> [(&'static str, &Vec<i64>); 3] {
    [
        (ROW_LABELS[0], &t.star),
        (ROW_LABELS[1], &t.star2),
        (ROW_LABELS[2], &t.star2prime),
    ]
}

pub fn divisor_text(r: &DivisorReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("d = {}\n", r.d));
    out.push_str(&format!("v = {:?}  (complement coordinates)\n", r.v));
    out.push_str(&format!("(v)^2 = {}\n", r.v_sq));
    out.push_str(&format!("saturation index of A2 + Zv: {}\n", r.sat_index));
    out.push_str(&format!("disc(Gamma_d) = {}\n", r.disc_gamma));
    out.push_str(&format!("K3 associated (**): {}\n", r.k3));
    out.push_str(&format!("twisted K3 associated (**'): {}\n", r.k3prime));
    match r.sph.status.as_str() {
        "contains" => out.push_str(&format!(
            "spherical: contains, witness {:?}\n",
            r.sph.witness.as_ref().expect("witness present")
        )),
        "empty" => out.push_str(&format!(
            "spherical: empty ({})\n",
            r.sph.obstruction.as_deref().unwrap_or("certified")
        )),
        _ => out.push_str("spherical: unknown within the search bound\n"),
    }
    if !r.factorizations.is_empty() {
        let fs: Vec<String> = r
            .factorizations
            .iter()
            .map(|(k, d0)| format!("{}^2 * {}", k, d0))
            .collect();
        out.push_str(&format!("factorizations d = k^2 d0: {}\n", fs.join(", ")));
        let orders: Vec<String> = r.brauer_orders.iter().map(i64::to_string).collect();
        out.push_str(&format!(
            "admissible Brauer orders: {}\n",
            orders.join(", ")
        ));
    }
    out
}

pub fn divisor_markdown(r: &DivisorReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# divisor d = {}\n\n", r.d));
    out.push_str("| field | value |\n| --- | --- |\n");
    out.push_str(&format!("| (v)^2 | {} |\n", r.v_sq));
    out.push_str(&format!("| saturation index | {} |\n", r.sat_index));
    out.push_str(&format!("| disc(Gamma_d) | {} |\n", r.disc_gamma));
    out.push_str(&format!("| (**) | {} |\n", mark(r.k3)));
    out.push_str(&format!("| (**') | {} |\n", mark(r.k3prime)));
    out.push_str(&format!("| spherical | {} |\n", r.sph.status));
    if !r.factorizations.is_empty() {
        let fs: Vec<String> = r
            .factorizations
            .iter()
            .map(|(k, d0)| format!("{}^2*{}", k, d0))
            .collect();
        out.push_str(&format!("| k^2 d0 | {} |\n", fs.join(", ")));
        let orders: Vec<String> = r.brauer_orders.iter().map(i64::to_string).collect();
        out.push_str(&format!("| Brauer orders | {} |\n", orders.join(", ")));
    }
    out
}

fn mark(b: bool) -> &'static str {
    if b {
        "\u{2713}"
    } else {
        ""
    }
}

pub fn sublattice_text(title: &str, s: &Sublattice) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{title} in {} (rank {}):\n",
        s.ambient().label(),
        s.rank()
    ));
    for i in 0..s.rank() {
        let row: Vec<String> = s.basis().row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  [{}]\n", row.join(", ")));
    }
    out
}

/// JSON form of a finite quadratic form: invariant factors plus the
/// `q`/`b` matrix as exact fraction strings.
#[derive(Serialize)]
pub struct DiscGroupWire {
    invariant_factors: Vec<String>,
    q_values: Vec<Vec<String>>,
    even: bool,
}

impl From<&FiniteQuadraticForm> for DiscGroupWire {
    fn from(f: &FiniteQuadraticForm) -> Self {
        let k = f.num_generators();
        DiscGroupWire {
            invariant_factors: f
                .invariant_factors()
                .iter()
                .map(|d| d.to_string())
                .collect(),
            q_values: (0..k)
                .map(|i| (0..k).map(|j| f.q_values()[(i, j)].to_string()).collect())
                .collect(),
            even: f.is_even(),
        }
    }
}
