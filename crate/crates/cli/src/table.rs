use crate::Format;

/// Rows under a header, rendered as aligned text or as TSV.
#[derive(Debug, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        let lines = std::iter::once(&self.header).chain(&self.rows);
        match format {
            Format::Tsv => lines.map(|r| r.join("\t") + "\n").collect(),
            Format::Text => {
                let mut widths = vec![0; self.header.len()];
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let mut out = String::new();
                for row in lines {
                    let cells: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    out.push_str(cells.join("  ").trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_and_tab_separated() {
        let mut t = Table::new(&["n", "count"]);
        t.push(vec!["1".into(), "2".into()]);
        t.push(vec!["10".into(), "2196".into()]);
        assert_eq!(t.render(Format::Text), "n   count\n1   2\n10  2196\n");
        assert_eq!(t.render(Format::Tsv), "n\tcount\n1\t2\n10\t2196\n");
    }
}
