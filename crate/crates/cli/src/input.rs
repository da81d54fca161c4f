//! Turning command-line strings into validated margin vectors.

use lrtables::{GlWeight, MarginSpec, Partition, SymMarginSpec};

use crate::error::CliError;

/// Parses a full weight tuple such as `[3,1,0,0,-2]`. Whitespace around
/// entries is ignored.
pub fn parse_weight(text: &str) -> Result<GlWeight, lrtables::Error> {
    text.parse()
}

/// A partition written `[2,1]`, `2,1`, or left blank for the empty one.
pub fn parse_partition(text: &str) -> Result<Partition, lrtables::Error> {
    let t = text.trim();
    if t.is_empty() {
        Ok(Partition::empty())
    } else if t.starts_with('[') {
        t.parse()
    } else {
        format!("[{t}]").parse()
    }
}

enum Token {
    Tuple(GlWeight),
    Pair(Partition, Partition),
}

impl Token {
    fn parse(text: &str) -> Result<Token, lrtables::Error> {
        match text.split_once('/') {
            Some((plus, minus)) => Ok(Token::Pair(parse_partition(plus)?, parse_partition(minus)?)),
            None => parse_weight(text).map(Token::Tuple),
        }
    }

    fn depth(&self) -> usize {
        match self {
            Token::Tuple(w) => w.depth(),
            Token::Pair(a, b) => a.length() + b.length(),
        }
    }

    fn at_rank(&self, n: usize) -> Result<GlWeight, lrtables::Error> {
        match self {
            Token::Tuple(w) => w.with_rank(n),
            Token::Pair(a, b) => GlWeight::new(a.clone(), b.clone(), n),
        }
    }
}

/// Weights for GL_n, plus the optional target weight, all at one rank.
pub struct GlInput {
    pub margins: MarginSpec,
    pub target: Option<GlWeight>,
}

impl GlInput {
    pub fn parse(
        weights: &[String],
        target: Option<&str>,
        n: Option<usize>,
    ) -> Result<Self, CliError> {
        if weights.is_empty() {
            return Err(CliError::Invalid("at least one weight is required".into()));
        }
        let tokens = weights
            .iter()
            .map(|w| Token::parse(w))
            .collect::<Result<Vec<_>, _>>()?;
        let target = target.map(Token::parse).transpose()?;

        let tuple_ranks: Vec<usize> = tokens
            .iter()
            .chain(&target)
            .filter_map(|t| match t {
                Token::Tuple(w) => Some(w.rank()),
                Token::Pair(..) => None,
            })
            .collect();
        let rank = match (n, tuple_ranks.first()) {
            (Some(n), _) => n,
            (None, Some(&first)) => {
                if let Some(&other) = tuple_ranks.iter().find(|&&r| r != first) {
                    return Err(lrtables::Error::RankMismatch(first, other).into());
                }
                first
            }
            (None, None) => tokens
                .iter()
                .chain(&target)
                .map(Token::depth)
                .sum::<usize>()
                .max(1),
        };

        let weights = tokens
            .iter()
            .map(|t| t.at_rank(rank))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GlInput {
            margins: MarginSpec::new(weights)?,
            target: target.map(|t| t.at_rank(rank)).transpose()?,
        })
    }

    /// The margins whose invariants give the requested number.
    pub fn effective(&self) -> Result<MarginSpec, lrtables::Error> {
        match &self.target {
            Some(t) => lrtables::contingency::extended_margins(t, &self.margins),
            None => Ok(self.margins.clone()),
        }
    }
}

pub fn parse_sym(margins: &[String], n: Option<usize>) -> Result<SymMarginSpec, CliError> {
    if margins.is_empty() {
        return Err(CliError::Invalid("at least one margin is required".into()));
    }
    let parts = margins
        .iter()
        .map(|m| parse_partition(m))
        .collect::<Result<Vec<_>, _>>()?;
    let n = n.unwrap_or_else(|| (2 * parts.iter().map(Partition::length).sum::<usize>()).max(1));
    Ok(SymMarginSpec::new(parts, n)?)
}
