use std::fs;
use std::path::Path;

use stdbasis::code::RawMatrix;
use stdbasis::{parse_poly, GeneratorMatrix, MonomialOrder, Polynomial, Ring};

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_matrix(path: &Path) -> Result<GeneratorMatrix, CliError> {
    let text = read_text(path)?;
    GeneratorMatrix::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_raw_matrix(path: &Path) -> Result<RawMatrix, CliError> {
    let text = read_text(path)?;
    RawMatrix::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// A list of divisors for `nf`: either a polynomial list
///
/// ```text
/// p=3
/// n=1
/// X1+2X1^2
/// ```
///
/// or a matrix file, which stands for its code ideal basis.
pub struct BasisFile {
    pub ring: Ring,
    pub polys: Vec<Polynomial>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn header_value(line: usize, text: &str, key: &str) -> Result<u64, String> {
    text.strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix('='))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| format!("line {line}: expected `{key}=<int>`, found `{text}`"))
}

pub fn parse_basis(text: &str, order: MonomialOrder) -> Result<BasisFile, String> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or("line 1: missing `p=<prime>` line")?;
    let p = header_value(line, first, "p")?;
    let (line, second) = lines
        .next()
        .ok_or(format!("line {}: missing `n=<int>` line", line + 1))?;
    if second.starts_with('k') {
        let g = GeneratorMatrix::parse(text).map_err(|e| e.to_string())?;
        let polys = if order.is_local() {
            g.closed_form_basis()
        } else {
            g.lex_code_basis().iter().map(|f| f.with_order(order)).collect()
        };
        return Ok(BasisFile {
            ring: g.ring(order),
            polys,
        });
    }
    let n = header_value(line, second, "n")? as usize;
    let ring = Ring::new(p, n, order).map_err(|e| format!("line 1: {e}"))?;
    let mut polys = Vec::new();
    for (line, src) in lines {
        let f = parse_poly(src, &ring).map_err(|e| format!("line {line}: {e}"))?;
        polys.push(f);
    }
    Ok(BasisFile { ring, polys })
}

pub fn read_basis(path: &Path, order: MonomialOrder) -> Result<BasisFile, CliError> {
    let text = read_text(path)?;
    parse_basis(&text, order).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_list() {
        let b = parse_basis("p=3\nn=1 # one variable\n\nX1+2X1^2\n", MonomialOrder::NegDegLex).unwrap();
        assert_eq!(b.polys.len(), 1);
        assert_eq!(b.polys[0].to_string(), "X1+2X1^2");
    }

    #[test]
    fn matrix_as_basis() {
        let text = "p=3\nk=1 n=2\n1 2\n";
        let b = parse_basis(text, MonomialOrder::Lex).unwrap();
        assert_eq!(
            b.polys.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            ["X1+2X2", "X2^3+2"]
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_basis("p=3\nn=2\nX1\nX3\n", MonomialOrder::Lex).err().unwrap();
        assert!(err.starts_with("line 4:"), "{err}");
        assert!(parse_basis("p=4\nn=2\n", MonomialOrder::Lex).is_err());
        assert!(parse_basis("q=3\n", MonomialOrder::Lex).is_err());
    }
}
