//! Integer-symbol texts.
//!
//! Input bytes map to symbols `0..=255`. Values from [`FIRST_DELIMITER`] up are
//! reserved for out-of-band separators so they can never collide with content.

use crate::error::{Error, Result};

/// Alphabet bound of a text decoded from bytes.
pub const BYTE_ALPHABET: u32 = 256;

/// First reserved delimiter symbol.
pub const FIRST_DELIMITER: u32 = 256;

/// A sequence of integer symbols together with an exclusive alphabet bound.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolText {
    symbols: Vec<u32>,
    alphabet_bound: u32,
}

impl SymbolText {
    /// Builds a text from raw symbols, checking every symbol is below `alphabet_bound`.
    pub fn new(symbols: Vec<u32>, alphabet_bound: u32) -> Result<Self> {
        if let Some((pos, &s)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s >= alphabet_bound)
        {
            return Err(Error::InvalidInput(format!(
                "symbol {s} at position {pos} exceeds alphabet bound {alphabet_bound}"
            )));
        }
        Ok(Self {
            symbols,
            alphabet_bound,
        })
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self {
            symbols: bytes.iter().map(|&b| u32::from(b)).collect(),
            alphabet_bound: BYTE_ALPHABET,
        }
    }

    pub fn empty() -> Self {
        Self::from_bytes(&[])
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_bound(&self) -> u32 {
        self.alphabet_bound
    }

    /// True if any symbol lies in the reserved delimiter range.
    pub fn contains_delimiter(&self) -> bool {
        self.symbols.iter().any(|&s| s >= FIRST_DELIMITER)
    }

    /// Concatenates `parts`, inserting delimiter `FIRST_DELIMITER + i` after part `i`
    /// for every part except the last.
    pub(crate) fn join_delimited(parts: &[&SymbolText]) -> SymbolText {
        let total = parts.iter().map(|p| p.len()).sum::<usize>() + parts.len().saturating_sub(1);
        let mut symbols = Vec::with_capacity(total);
        let mut bound = BYTE_ALPHABET;
        for (i, part) in parts.iter().enumerate() {
            symbols.extend_from_slice(&part.symbols);
            bound = bound.max(part.alphabet_bound);
            if i + 1 < parts.len() {
                let delim = FIRST_DELIMITER + i as u32;
                symbols.push(delim);
                bound = bound.max(delim + 1);
            }
        }
        SymbolText {
            symbols,
            alphabet_bound: bound,
        }
    }
}

impl From<&str> for SymbolText {
    fn from(s: &str) -> Self {
        Self::from_bytes(s.as_bytes())
    }
}

impl From<&[u8]> for SymbolText {
    fn from(b: &[u8]) -> Self {
        Self::from_bytes(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_symbol_out_of_bound() {
        assert!(SymbolText::new(vec![0, 3, 4], 4).is_err());
        assert!(SymbolText::new(vec![0, 3], 4).is_ok());
    }

    #[test]
    fn bytes_never_produce_delimiters() {
        let all: Vec<u8> = (0..=255).collect();
        let t = SymbolText::from_bytes(&all);
        assert!(!t.contains_delimiter());
        assert_eq!(t.alphabet_bound(), 256);
    }

    #[test]
    fn join_inserts_distinct_delimiters() {
        let a = SymbolText::from("ab");
        let b = SymbolText::from("c");
        let c = SymbolText::from("");
        let j = SymbolText::join_delimited(&[&a, &b, &c]);
        assert_eq!(j.symbols(), &[97, 98, 256, 99, 257]);
        assert_eq!(j.alphabet_bound(), 258);
    }
}
