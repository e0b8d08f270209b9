use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::SyntaxError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }

    pub fn is_pos(self) -> bool {
        self == Polarity::Pos
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Pos => "+",
            Polarity::Neg => "-",
        })
    }
}

impl FromStr for Polarity {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+" | "pos" => Ok(Polarity::Pos),
            "-" | "neg" => Ok(Polarity::Neg),
            other => Err(SyntaxError::new(
                0,
                format!("expected + or -, found {other:?}"),
            )),
        }
    }
}

/// Total assignment of polarities to atom names: explicit overrides plus a default.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiasMap {
    overrides: BTreeMap<String, Polarity>,
    default: Polarity,
}

impl Default for BiasMap {
    fn default() -> Self {
        BiasMap::uniform(Polarity::Pos)
    }
}

impl BiasMap {
    pub fn uniform(default: Polarity) -> Self {
        BiasMap {
            overrides: BTreeMap::new(),
            default,
        }
    }

    pub fn with(mut self, atom: impl Into<String>, pol: Polarity) -> Self {
        self.overrides.insert(atom.into(), pol);
        self
    }

    pub fn set(&mut self, atom: impl Into<String>, pol: Polarity) {
        self.overrides.insert(atom.into(), pol);
    }

    pub fn get(&self, atom: &str) -> Polarity {
        self.overrides.get(atom).copied().unwrap_or(self.default)
    }

    pub fn default_polarity(&self) -> Polarity {
        self.default
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&str, Polarity)> {
        self.overrides.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Parses `"a=+,b=-"`; an empty string gives the bare default.
    pub fn parse(text: &str, default: Polarity) -> Result<Self, SyntaxError> {
        let mut map = BiasMap::uniform(default);
        let mut offset = 0;
        for item in text.split(',') {
            let trimmed = item.trim();
            if !trimmed.is_empty() {
                let (name, pol) = trimmed.split_once('=').ok_or_else(|| {
                    SyntaxError::new(offset, format!("bias entry {trimmed:?} lacks '='"))
                })?;
                let name = name.trim();
                if name.is_empty() {
                    return Err(SyntaxError::new(offset, "empty atom name in bias"));
                }
                let pol = pol
                    .parse::<Polarity>()
                    .map_err(|e| SyntaxError::new(offset, e.message))?;
                map.set(name, pol);
            }
            offset += item.len() + 1;
        }
        Ok(map)
    }
}

impl fmt::Display for BiasMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.overrides {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        if !first {
            f.write_str(",")?;
        }
        write!(f, "*={}", self.default)
    }
}
