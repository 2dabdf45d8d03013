//! Values files: ASCII integers separated by whitespace or newlines.

use std::fmt;
use std::io::Read;

use num_bigint::BigInt;

#[derive(Debug)]
pub enum ValuesError {
    Io(std::io::Error),
    BadToken { index: usize, token: String },
}

impl fmt::Display for ValuesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuesError::Io(e) => write!(f, "cannot read values: {e}"),
            ValuesError::BadToken { index, token } => {
                write!(f, "value #{index} is not an integer: {token:?}")
            }
        }
    }
}

impl std::error::Error for ValuesError {}

pub fn parse_values(text: &str) -> Result<Vec<BigInt>, ValuesError> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<BigInt>().map_err(|_| ValuesError::BadToken {
                index: i + 1,
                token: tok.to_string(),
            })
        })
        .collect()
}

pub fn read_values(mut source: impl Read) -> Result<Vec<BigInt>, ValuesError> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(ValuesError::Io)?;
    parse_values(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_separators() {
        let v = parse_values(" 1 -2\n3\t\n\n 40000000000000000000000 ").unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v[1], BigInt::from(-2));
    }

    #[test]
    fn rejects_non_integers() {
        let err = parse_values("1 2 x3").unwrap_err();
        assert!(matches!(err, ValuesError::BadToken { index: 3, .. }));
        assert!(parse_values("1.5").is_err());
        assert!(parse_values("").unwrap().is_empty());
    }
}
