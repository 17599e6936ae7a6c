use std::fmt;

use super::{AlgebraError, Elem, FiniteGroup};

/// Whether a boundary point is read as `g` (downward strand) or `g*` (upward strand).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plain,
    Starred,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plain => Sign::Starred,
            Sign::Starred => Sign::Plain,
        }
    }
}

/// A word in the symbols `a` and `a*`, i.e. a boundary enhancement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnhancedWord {
    pub entries: Vec<(Elem, Sign)>,
}

impl EnhancedWord {
    pub fn new(entries: Vec<(Elem, Sign)>) -> EnhancedWord {
        EnhancedWord { entries }
    }

    pub fn empty() -> EnhancedWord {
        EnhancedWord::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|e| e.1).collect()
    }

    /// Reverse the word and flip every sign.
    pub fn reverse_star(&self) -> EnhancedWord {
        EnhancedWord { entries: self.entries.iter().rev().map(|&(g, s)| (g, s.flip())).collect() }
    }

    pub fn concat(&self, other: &EnhancedWord) -> EnhancedWord {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        EnhancedWord { entries }
    }

    /// Parse comma-separated element names, `*` suffix for starred entries.
    ///
    /// Commas nested inside brackets or parentheses belong to the name, so
    /// matrix literals such as `[[1,0],[0,1]]` work.
    pub fn parse(group: &FiniteGroup, text: &str) -> Result<EnhancedWord, AlgebraError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(EnhancedWord::empty());
        }
        let mut entries = Vec::new();
        for tok in split_top_level(text) {
            let tok = tok.trim();
            let (name, sign) = match tok.strip_suffix('*') {
                Some(n) => (n, Sign::Starred),
                None => (tok, Sign::Plain),
            };
            entries.push((group.lookup(name)?, sign));
        }
        Ok(EnhancedWord { entries })
    }

    pub fn display<'a>(&'a self, group: &'a FiniteGroup) -> WordDisplay<'a> {
        WordDisplay { word: self, group }
    }
}

pub(crate) fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

pub struct WordDisplay<'a> {
    word: &'a EnhancedWord,
    group: &'a FiniteGroup,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(g, s)) in self.word.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.group.name_of(g))?;
            if s == Sign::Starred {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

/// Product of the word left to right, starred entries inverted; the empty word gives 1.
pub fn evaluate_word(group: &FiniteGroup, w: &EnhancedWord) -> Elem {
    w.entries.iter().fold(group.identity(), |acc, &(g, s)| {
        let g = match s {
            Sign::Plain => g,
            Sign::Starred => group.inv(g),
        };
        group.mul(acc, g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric_group;

    #[test]
    fn evaluation_basics() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(evaluate_word(&s3, &EnhancedWord::empty()), s3.identity());
        let g = s3.lookup("(12)").unwrap();
        let w = EnhancedWord::new(vec![(g, Sign::Plain), (g, Sign::Starred)]);
        assert_eq!(evaluate_word(&s3, &w), s3.identity());
        let w = EnhancedWord::parse(&s3, "(12),(23)").unwrap();
        assert_eq!(s3.name_of(evaluate_word(&s3, &w)), "(132)");
    }

    #[test]
    fn parse_and_display() {
        let s3 = symmetric_group(3).unwrap();
        let w = EnhancedWord::parse(&s3, "(12), id*,(123)*").unwrap();
        assert_eq!(w.signs(), vec![Sign::Plain, Sign::Starred, Sign::Starred]);
        assert_eq!(w.display(&s3).to_string(), "(12),id*,(123)*");
        assert!(EnhancedWord::parse(&s3, "(45)").is_err());
        assert_eq!(split_top_level("[[1,0],[0,1]],[[2,0],[0,1]]*").len(), 2);
    }
}
