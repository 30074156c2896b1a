//! Words in the generators. The display order follows composition notation:
//! the leftmost letter is applied last. Internally evaluation walks the
//! letters in application order (rightmost first).

use crate::cone::SignedGen;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    /// Letters in display order (leftmost first, applied last).
    letters: Vec<SignedGen>,
}

impl Word {
    pub fn from_display(letters: Vec<SignedGen>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: vec![] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn display_letters(&self) -> &[SignedGen] {
        &self.letters
    }

    /// Letters in the order they are applied to a point.
    pub fn application_order(&self) -> impl Iterator<Item = SignedGen> + '_ {
        self.letters.iter().rev().copied()
    }

    /// The inverse word: letters reversed and each inverted.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Parses a whitespace-separated word. A trailing apostrophe or `^-1`
    /// marks an inverse letter, e.g. `"s2 s1' s2 s1 s1 s1"`.
    pub fn parse(input: &str, generator_names: &[String]) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in input.split_whitespace() {
            let (name, inverse) = if let Some(base) = tok.strip_suffix("^-1") {
                (base, true)
            } else if let Some(base) = tok.strip_suffix('\'') {
                (base, true)
            } else {
                (tok, false)
            };
            if name.is_empty() {
                return Err(Error::WordSyntax(format!("empty generator in `{tok}`")));
            }
            let index = generator_names
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            letters.push(SignedGen::new(index, inverse));
        }
        Ok(Word { letters })
    }

    /// Renders back to the parseable form (apostrophes for inverses).
    pub fn unparse(&self, generator_names: &[String]) -> String {
        self.letters
            .iter()
            .map(|l| {
                let mut s = generator_names[l.index].clone();
                if l.inverse {
                    s.push('\'');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<String> {
        vec!["s1".to_string(), "s2".to_string()]
    }

    #[test]
    fn parse_roundtrip() {
        let w = Word::parse("s2 s1' s2 s1 s1 s1", &gens()).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.unparse(&gens()), "s2 s1' s2 s1 s1 s1");
        let w2 = Word::parse(&w.unparse(&gens()), &gens()).unwrap();
        assert_eq!(w, w2);
    }

    #[test]
    fn caret_notation() {
        let w = Word::parse("s1^-1 s2", &gens()).unwrap();
        assert_eq!(w.unparse(&gens()), "s1' s2");
    }

    #[test]
    fn application_order_is_rightmost_first() {
        let w = Word::parse("s2 s1", &gens()).unwrap();
        let order: Vec<SignedGen> = w.application_order().collect();
        assert_eq!(order[0], SignedGen::new(0, false)); // s1 applied first
        assert_eq!(order[1], SignedGen::new(1, false));
    }

    #[test]
    fn inverse_word() {
        let w = Word::parse("s2 s1' s2 s1 s1 s1", &gens()).unwrap();
        assert_eq!(w.inverse().unparse(&gens()), "s1' s1' s1' s2' s1 s2'");
    }

    #[test]
    fn unknown_generator_and_empty_word() {
        assert!(matches!(
            Word::parse("s3", &gens()),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(Word::parse("", &gens()).unwrap().is_empty());
    }
}
