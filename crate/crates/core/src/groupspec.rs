//! One-token group expressions such as `C2xC3`, `D4`, `Q8xS3` or
//! `cayley:table.txt`.
//!
//! ```text
//! atom := "C"<n> | "D"<n> | "S"<n> | "Q8" | "cayley:"<path>
//! expr := atom ("x" atom)*
//! ```
//!
//! `x` is the direct product and associates to the left. A `cayley:` path
//! runs until the next `x` that is immediately followed by the start of
//! another atom (`C`, `D`, `S` or `Q` plus a digit, or `cayley:`).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupAtom {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    Cayley(String),
}

impl GroupAtom {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupAtom::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupAtom::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupAtom::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupAtom::Quaternion8 => Ok(FiniteGroup::quaternion8()),
            GroupAtom::Cayley(path) => FiniteGroup::load_cayley(path),
        }
    }
}

impl fmt::Display for GroupAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupAtom::Cyclic(n) => write!(f, "C{n}"),
            GroupAtom::Dihedral(n) => write!(f, "D{n}"),
            GroupAtom::Symmetric(n) => write!(f, "S{n}"),
            GroupAtom::Quaternion8 => f.write_str("Q8"),
            GroupAtom::Cayley(path) => write!(f, "cayley:{path}"),
        }
    }
}

/// A parsed group expression: a left-associated direct product of atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<GroupAtom>,
}

impl GroupSpec {
    /// Builds `((f1 × f2) × f3) × …`.
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let mut factors = self.factors.iter();
        let first = factors.next().expect("at least one factor").build()?;
        factors.try_fold(first, |acc, atom| acc.direct_product(&atom.build()?))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        let mut pos = 0;
        loop {
            let (atom, next) = parse_atom(s, pos)?;
            factors.push(atom);
            if next == s.len() {
                return Ok(GroupSpec { factors });
            }
            if !s[next..].starts_with('x') {
                return Err(parse_error(next, "expected 'x' between factors"));
            }
            pos = next + 1;
        }
    }
}

/// Parses `text` and builds the group.
pub fn parse_group(text: &str) -> Result<FiniteGroup, SpecError> {
    Ok(text.parse::<GroupSpec>()?.build()?)
}

fn parse_error(position: usize, message: impl Into<String>) -> SpecError {
    SpecError::Parse {
        position,
        message: message.into(),
    }
}

fn starts_atom(rest: &str) -> bool {
    let bytes = rest.as_bytes();
    rest.starts_with("cayley:")
        || (bytes.len() >= 2 && b"CDSQ".contains(&bytes[0]) && bytes[1].is_ascii_digit())
}

fn parse_atom(s: &str, pos: usize) -> Result<(GroupAtom, usize), SpecError> {
    let rest = &s[pos..];
    if let Some(path) = rest.strip_prefix("cayley:") {
        let start = pos + "cayley:".len();
        let end = path
            .match_indices('x')
            .map(|(i, _)| i)
            .find(|&i| starts_atom(&path[i + 1..]))
            .unwrap_or(path.len());
        if end == 0 {
            return Err(parse_error(start, "empty cayley path"));
        }
        return Ok((GroupAtom::Cayley(path[..end].to_string()), start + end));
    }
    let Some(head) = rest.chars().next() else {
        return Err(parse_error(pos, "expected a group atom"));
    };
    let digits = rest[1..].bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Err(parse_error(
            pos,
            format!("expected C<n>, D<n>, S<n>, Q8 or cayley:<path>, found {rest:?}"),
        ));
    }
    let end = pos + 1 + digits;
    let n: usize = s[pos + 1..end]
        .parse()
        .map_err(|_| parse_error(pos + 1, "number out of range"))?;
    let atom = match head {
        'C' => GroupAtom::Cyclic(n),
        'D' => GroupAtom::Dihedral(n),
        'S' => GroupAtom::Symmetric(n),
        'Q' if n == 8 => GroupAtom::Quaternion8,
        'Q' => return Err(parse_error(pos, "only Q8 is supported")),
        _ => return Err(parse_error(pos, format!("unknown group family {head:?}"))),
    };
    Ok((atom, end))
}
