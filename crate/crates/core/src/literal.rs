//! Text literals accepted on the command line.
//!
//! * partition: `"5,3,3,1"`; the empty string is the empty partition
//! * leg sequence: `"0,1,2,1,2"`; the empty string is the empty sequence
//! * staircase: `"v:2,1,2;h:1,2"` (vertical pieces bottom to top, then the
//!   horizontal pieces between them)
//!
//! Surrounding whitespace is ignored, and so is whitespace around each
//! number. Nothing else is tolerated.

use thiserror::Error;

use crate::partition::{Partition, PartitionError};
use crate::staircase::{Staircase, StaircaseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("invalid number {token:?} at position {index}")]
    Number { index: usize, token: String },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
    #[error("staircase literal must look like \"v:2,1;h:1\", got {0:?}")]
    StaircaseShape(String),
}

/// Comma-separated non-negative integers.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>, LiteralError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(index, token)| {
            let token = token.trim();
            // `usize::from_str` accepts a leading '+'; we do not.
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(LiteralError::Number {
                    index,
                    token: token.to_string(),
                });
            }
            token.parse::<usize>().map_err(|_| LiteralError::Number {
                index,
                token: token.to_string(),
            })
        })
        .collect()
}

pub fn parse_partition(text: &str) -> Result<Partition, LiteralError> {
    Ok(Partition::new(parse_sequence(text)?)?)
}

pub fn parse_staircase(text: &str) -> Result<Staircase, LiteralError> {
    let text = text.trim();
    let shape_err = || LiteralError::StaircaseShape(text.to_string());
    let (vert, horiz) = text.split_once(';').ok_or_else(shape_err)?;
    let vert = vert.trim().strip_prefix("v:").ok_or_else(shape_err)?;
    let horiz = horiz.trim().strip_prefix("h:").ok_or_else(shape_err)?;
    let vertical = parse_sequence(vert)?;
    let horizontal = parse_sequence(horiz)?;
    Ok(Staircase::new(vertical, horizontal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        assert_eq!(parse_sequence("0,1,2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_sequence("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_sequence(" 3 , 4 ").unwrap(), vec![3, 4]);
        assert!(parse_sequence("1,,2").is_err());
        assert!(parse_sequence("+1").is_err());
        assert!(parse_sequence("-1").is_err());
        assert!(parse_sequence("1,2,").is_err());
        assert!(parse_sequence("99999999999999999999999").is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("5,2,1").unwrap().parts(), &[5, 2, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(matches!(
            parse_partition("3,5"),
            Err(LiteralError::Partition(PartitionError::Increasing { .. }))
        ));
        assert!(parse_partition("0").is_err());
        let mu: Partition = "4,4,1".parse().unwrap();
        assert_eq!(mu.to_string(), "4,4,1");
    }

    #[test]
    fn staircases() {
        let s = parse_staircase("v:2,1,2,2,1,2;h:1,2,1,1,2").unwrap();
        assert_eq!(s.vertical(), &[2, 1, 2, 2, 1, 2]);
        assert_eq!(s.horizontal(), &[1, 2, 1, 1, 2]);
        assert_eq!(s.to_string(), "v:2,1,2,2,1,2;h:1,2,1,1,2");
        let single = parse_staircase("v:3;h:").unwrap();
        assert_eq!(single.height(), 3);
        let empty = parse_staircase("v:;h:").unwrap();
        assert_eq!(empty.height(), 0);
        assert_eq!(empty.to_string(), "v:;h:");
        assert!(parse_staircase("v:1,2;h:").is_err());
        assert!(parse_staircase("v:;h:1").is_err());
        assert!(parse_staircase("h:1;v:1,1").is_err());
        assert!(parse_staircase("v:1,1").is_err());
    }
}
