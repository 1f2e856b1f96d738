/// Word tokens: whitespace-split, case and punctuation preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TokenSequence {
    tokens: Vec<String>,
    source_text: String,
}

impl TokenSequence {
    pub fn new(text: &str) -> Self {
        Self {
            tokens: text.split_whitespace().map(str::to_owned).collect(),
            source_text: text.to_owned(),
        }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Tokens joined by single spaces.
    pub fn normalized(&self) -> String {
        self.tokens.join(" ")
    }
}

impl From<&str> for TokenSequence {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn keeps_case_and_punctuation() {
        let t = TokenSequence::new("  Hello, World!\n foo\tbar ");
        assert_eq!(t.tokens(), &["Hello,", "World!", "foo", "bar"]);
    }

    proptest! {
        #[test]
        fn join_then_split_is_idempotent(s in "[ a-zA-Z\\t\\n.,]{0,60}") {
            let t = TokenSequence::new(&s);
            let again = TokenSequence::new(&t.normalized());
            prop_assert_eq!(t.tokens(), again.tokens());
        }
    }
}
