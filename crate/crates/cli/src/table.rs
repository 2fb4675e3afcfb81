//! Text and TSV renderings of weight and root tables.

use clw_core::roots::{RootSystem, WeightEntry, WeightTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Tsv,
}

fn header(n: usize, m: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("H{i}"))
        .chain((1..=m).map(|j| format!("K{j}")))
        .chain(["parity", "isotropic", "multiplicity"].map(String::from))
        .collect()
}

fn row(e: &WeightEntry) -> Vec<String> {
    let mut cells: Vec<String> = e.weight.coords().map(|c| c.to_string()).collect();
    cells.push(e.parity.map_or("-".into(), |p| p.to_string()));
    cells.push(match e.isotropic {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => "-".into(),
    });
    cells.push(e.multiplicity.to_string());
    cells
}

fn render(n: usize, m: usize, entries: &[&WeightEntry], format: Format) -> String {
    let mut rows = vec![header(n, m)];
    rows.extend(entries.iter().map(|e| row(e)));
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for r in rows {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
        }
        Format::Table => {
            let widths: Vec<usize> = (0..rows[0].len()).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
            for r in rows {
                let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
        }
    }
    out
}

/// One row per weight, columns `H1..Hn K1..Km parity isotropic multiplicity`.
pub fn emit_table(table: &WeightTable, format: Format) -> String {
    render(table.n, table.m, &table.entries.iter().collect::<Vec<_>>(), format)
}

/// Even roots followed by odd roots in one table.
pub fn emit_roots(roots: &RootSystem, format: Format) -> String {
    let entries: Vec<&WeightEntry> = roots.even.entries.iter().chain(&roots.odd.entries).collect();
    render(roots.even.n, roots.even.m, &entries, format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clw_core::roots::{roots, weights_on, Rep};
    use clw_core::SuperSpace;

    #[test]
    fn empty_table_is_header_only() {
        let t = WeightTable { n: 1, m: 1, entries: vec![] };
        assert_eq!(emit_table(&t, Format::Tsv), "H1\tK1\tparity\tisotropic\tmultiplicity\n");
        assert_eq!(emit_table(&t, Format::Table), "H1  K1  parity  isotropic  multiplicity\n");
    }

    #[test]
    fn row_counts() {
        let r = roots(&SuperSpace::witt(2, false, 0)).unwrap();
        assert_eq!(emit_roots(&r, Format::Tsv).lines().count(), 1 + 4);
        let r = roots(&SuperSpace::witt(0, false, 2)).unwrap();
        assert_eq!(emit_roots(&r, Format::Tsv).lines().count(), 1 + 8);
    }

    #[test]
    fn weight_rows() {
        let t = weights_on(&SuperSpace::witt(1, false, 0), Rep::Ext(1)).unwrap();
        assert_eq!(emit_table(&t, Format::Tsv), "H1\tparity\tisotropic\tmultiplicity\n1\t-\t-\t1\n-1\t-\t-\t1\n");
    }
}
