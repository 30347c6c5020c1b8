//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },

    #[error("block {index} repeats the letter {letter}")]
    RepeatedLetter { index: usize, letter: u32 },

    #[error("block {index}: expected a positive integer, got {text:?}")]
    BadLetter { index: usize, text: String },

    #[error("empty partition text")]
    EmptyInput,

    #[error("declared n = {declared} does not match the {actual} letters present")]
    WrongLetterCount { declared: usize, actual: usize },

    #[error("declared k = {declared} does not match the {actual} blocks present")]
    WrongBlockCount { declared: usize, actual: usize },

    #[error("alphabet bound {bound} is smaller than the largest letter {letter}")]
    AlphabetTooSmall { bound: u32, letter: u32 },

    #[error("invalid descent data: {0}")]
    BadDescentData(String),

    #[error("invalid shape: {0}")]
    BadShape(String),

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("not in the image of the column reading map: {0}")]
    NotInReadImage(String),

    #[error("the standard-tableau formula needs r >= n, got r = {r} and n = {n}")]
    AlphabetBelowDegree { r: u32, n: usize },

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),
}
