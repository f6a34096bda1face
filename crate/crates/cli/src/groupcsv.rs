//! Group multiplication tables as CSV: a header row `*,a,b,…` and one row
//! per element `a,a·a,a·b,…`, entries by name.

use std::path::Path;

pub fn parse(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>), String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| e.to_string())?.clone();
    let names: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    if names.is_empty() {
        return Err("header row lists no elements".into());
    }
    let index = |s: &str, line: u64| {
        names
            .iter()
            .position(|x| x == s)
            .ok_or_else(|| format!("line {line}: '{s}' is not in the header"))
    };
    let mut table = vec![None; names.len()];
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != names.len() + 1 {
            return Err(format!(
                "line {line}: expected {} fields, found {}",
                names.len() + 1,
                record.len()
            ));
        }
        let a = index(&record[0], line)?;
        let row = record
            .iter()
            .skip(1)
            .map(|s| index(s, line))
            .collect::<Result<Vec<_>, _>>()?;
        if table[a].replace(row).is_some() {
            return Err(format!("line {line}: row '{}' given twice", &record[0]));
        }
    }
    if let Some(i) = table.iter().position(Option::is_none) {
        return Err(format!("no row for '{}'", names[i]));
    }
    Ok((names, table.into_iter().flatten().collect()))
}

pub fn read(path: &Path) -> Result<(Vec<String>, Vec<Vec<usize>>), String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four() {
        let text = "*,e,a,b,ab\ne,e,a,b,ab\na,a,e,ab,b\nb,b,ab,e,a\nab,ab,b,a,e\n";
        let (names, table) = parse(text).unwrap();
        assert_eq!(names, ["e", "a", "b", "ab"]);
        assert_eq!(table[1][2], 3);
    }

    #[test]
    fn rows_may_come_in_any_order() {
        let (_, table) = parse("*, e, a\na, a, e\ne, e, a\n").unwrap();
        assert_eq!(table, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn bad_tables() {
        assert!(parse("*,e,a\ne,e,a\n")
            .unwrap_err()
            .contains("no row for 'a'"));
        assert!(parse("*,e\ne,x\n").unwrap_err().contains("'x'"));
    }
}
