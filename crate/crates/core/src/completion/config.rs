use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, Result};

/// Which blocks of `A` and `B` are unknown. Both masks are row-major
/// `n × n`, `true` marking an unknown block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    n: usize,
    mask_a: Vec<bool>,
    mask_b: Vec<bool>,
}

impl Configuration {
    pub fn new(n: usize, mask_a: Vec<bool>, mask_b: Vec<bool>) -> Result<Self> {
        if n == 0 || mask_a.len() != n * n || mask_b.len() != n * n {
            return Err(AlgebraError::InvalidConfiguration(format!("masks must both hold {} entries", n * n)));
        }
        Ok(Configuration { n, mask_a, mask_b })
    }

    /// Every block known.
    pub fn all_known(n: usize) -> Self {
        Configuration { n, mask_a: vec![false; n * n], mask_b: vec![false; n * n] }
    }

    /// Builds from the `2n²` flags of `A` then `B`, row-major.
    pub fn from_flags(n: usize, flags: &[bool]) -> Result<Self> {
        if flags.len() != 2 * n * n {
            return Err(AlgebraError::InvalidConfiguration(format!("expected {} flags", 2 * n * n)));
        }
        let (a, b) = flags.split_at(n * n);
        Self::new(n, a.to_vec(), b.to_vec())
    }

    /// Parses the `k`/`u` string; whitespace is ignored and `n` is inferred
    /// from the length.
    pub fn parse(text: &str) -> Result<Self> {
        let mut flags = Vec::with_capacity(text.len());
        for c in text.chars().filter(|c| !c.is_whitespace()) {
            match c {
                'k' | 'K' => flags.push(false),
                'u' | 'U' => flags.push(true),
                other => return Err(AlgebraError::InvalidConfiguration(format!("unexpected character `{other}`"))),
            }
        }
        let half = flags.len() / 2;
        let n = (half as f64).sqrt().round() as usize;
        if flags.is_empty() || flags.len() % 2 != 0 || n * n != half {
            return Err(AlgebraError::InvalidConfiguration(format!(
                "length {} is not twice a perfect square",
                flags.len()
            )));
        }
        Self::from_flags(n, &flags)
    }

    /// Parses two `n`-line grids of `k`/`u` separated by a blank line.
    pub fn parse_grid(text: &str) -> Result<Self> {
        let blocks: Vec<Vec<&str>> = text
            .split("\n\n")
            .map(|b| b.lines().map(str::trim).filter(|l| !l.is_empty()).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        if blocks.len() != 2 || blocks[0].len() != blocks[1].len() {
            return Err(AlgebraError::InvalidConfiguration("expected two grids of equal height".into()));
        }
        let cfg = Self::parse(&blocks.concat().concat())?;
        if cfg.n != blocks[0].len() {
            return Err(AlgebraError::InvalidConfiguration("grids must be square".into()));
        }
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask_a(&self) -> &[bool] {
        &self.mask_a
    }

    pub fn mask_b(&self) -> &[bool] {
        &self.mask_b
    }

    /// Both masks concatenated, `A` first.
    pub fn flags(&self) -> Vec<bool> {
        [self.mask_a.as_slice(), self.mask_b.as_slice()].concat()
    }

    pub fn unknown_count(&self) -> usize {
        self.mask_a.iter().chain(&self.mask_b).filter(|&&u| u).count()
    }

    pub fn known_count(&self) -> usize {
        2 * self.n * self.n - self.unknown_count()
    }

    pub fn a_unknown(&self, r: usize, c: usize) -> bool {
        self.mask_a[r * self.n + c]
    }

    pub fn b_unknown(&self, r: usize, c: usize) -> bool {
        self.mask_b[r * self.n + c]
    }

    /// The two masks as grids, `A` above `B`, separated by a blank line.
    pub fn to_grid(&self) -> String {
        let row = |m: &[bool], r: usize| -> String {
            m[r * self.n..(r + 1) * self.n].iter().map(|&u| if u { 'u' } else { 'k' }).collect()
        };
        let mut out = String::new();
        for r in 0..self.n {
            out.push_str(&row(&self.mask_a, r));
            out.push('\n');
        }
        out.push('\n');
        for r in 0..self.n {
            out.push_str(&row(&self.mask_b, r));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &u in self.mask_a.iter().chain(&self.mask_b) {
            f.write_str(if u { "u" } else { "k" })?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        let cfg = Configuration::parse("kuuk ukku").unwrap();
        assert_eq!(cfg.n(), 2);
        assert_eq!(cfg.unknown_count(), 4);
        assert!(cfg.a_unknown(0, 1) && cfg.b_unknown(1, 1) && !cfg.b_unknown(0, 1));
        assert_eq!(cfg.to_string(), "kuukukku");
        assert_eq!(Configuration::parse_grid(&cfg.to_grid()).unwrap(), cfg);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "kuk", "kukukukx", "kkkkkkkkkkkk"] {
            assert!(Configuration::parse(bad).is_err(), "{bad}");
        }
        assert!(Configuration::parse_grid("ku\nuk\n").is_err());
        assert!(Configuration::parse_grid("kuk\n\nkuk\n").is_err());
    }
}
