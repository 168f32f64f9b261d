use std::collections::BTreeMap;
use std::fmt::Write;

use nalgebra::DMatrix;

use super::NumericError;

pub type Matrix = DMatrix<f64>;

/// Default tolerance on normalized residuals.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Concrete `m × m` values for named blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockAssignment {
    m: usize,
    blocks: BTreeMap<String, Matrix>,
    pub tolerance: f64,
}

impl BlockAssignment {
    pub fn new(m: usize) -> Self {
        BlockAssignment { m, blocks: BTreeMap::new(), tolerance: DEFAULT_TOLERANCE }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn insert(&mut self, name: &str, value: Matrix) -> Result<(), NumericError> {
        if value.nrows() != self.m || value.ncols() != self.m {
            return Err(NumericError::Dimension { name: name.to_string(), expected: self.m });
        }
        self.blocks.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Matrix> {
        self.blocks.get(name)
    }

    pub fn require(&self, name: &str) -> Result<&Matrix, NumericError> {
        self.get(name).ok_or_else(|| NumericError::MissingSymbol(name.to_string()))
    }

    pub fn blocks(&self) -> &BTreeMap<String, Matrix> {
        &self.blocks
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut Matrix> {
        self.blocks.get_mut(name)
    }

    /// Largest absolute entry over all blocks.
    pub fn max_abs(&self) -> f64 {
        self.blocks.values().map(|b| b.amax()).fold(0.0, f64::max)
    }

    /// ```text
    /// m=2
    /// k1:
    /// 1 0
    /// 0 1
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.m);
        for (name, b) in &self.blocks {
            writeln!(out, "{name}:").unwrap();
            for r in 0..self.m {
                let row: Vec<String> = (0..self.m).map(|c| format!("{}", b[(r, c)])).collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, NumericError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, message: &str| NumericError::Parse { line, message: message.to_string() };
        let (l, head) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
        let m: usize = head
            .strip_prefix("m=")
            .and_then(|v| v.trim().parse().ok())
            .filter(|&m| m > 0)
            .ok_or_else(|| bad(l, "expected `m=<positive integer>`"))?;
        let mut out = BlockAssignment::new(m);
        while let Some((l, header)) = lines.next() {
            let name = header.strip_suffix(':').map(str::trim).filter(|n| !n.is_empty());
            let name = name.ok_or_else(|| bad(l, "expected `name:`"))?;
            let mut data = Vec::with_capacity(m * m);
            for _ in 0..m {
                let (l, row) = lines.next().ok_or_else(|| bad(l, "block ends early"))?;
                let vals: Vec<f64> = row
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad(l, "expected decimal numbers"))?;
                if vals.len() != m {
                    return Err(bad(l, &format!("expected {m} entries")));
                }
                data.extend(vals);
            }
            if out.blocks.contains_key(name) {
                return Err(bad(l, "duplicate block"));
            }
            out.insert(name, Matrix::from_row_slice(m, m, &data))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let mut a = BlockAssignment::new(2);
        a.insert("k1", Matrix::from_row_slice(2, 2, &[1.0, -0.1, 1e-17, 3.25])).unwrap();
        a.insert("Inv", Matrix::identity(2, 2)).unwrap();
        let back = BlockAssignment::parse(&a.to_text()).unwrap();
        assert_eq!(back, a);
        assert!(a.insert("k2", Matrix::identity(3, 3)).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(BlockAssignment::parse("").is_err());
        assert!(BlockAssignment::parse("m=2\nk1:\n1 2\n").is_err());
        assert!(BlockAssignment::parse("m=1\nk1:\nx\n").is_err());
        assert!(BlockAssignment::parse("m=1\nk1\n1\n").is_err());
    }
}
