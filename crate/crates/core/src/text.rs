//! Arabic tweet normalization and tokenization.

use serde::{Deserialize, Serialize};

const TATWEEL: char = '\u{0640}';

fn is_diacritic(c: char) -> bool {
    ('\u{064B}'..='\u{0652}').contains(&c)
}

fn is_zero_width(c: char) -> bool {
    matches!(c, '\u{200B}'..='\u{200F}' | '\u{2060}' | '\u{FEFF}')
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

fn fold_letter(c: char) -> char {
    match c {
        '\u{0623}' | '\u{0625}' | '\u{0622}' => '\u{0627}', // أ إ آ -> ا
        '\u{0649}' => '\u{064A}',                           // ى -> ي
        '\u{0629}' => '\u{0647}',                           // ة -> ه
        other => other,
    }
}

/// Normalize raw tweet text.
///
/// Strips diacritics (U+064B..U+0652) and tatweel, folds alef variants to
/// bare alef, alef maqsura to ya and ta marbuta to ha, caps runs of one
/// repeated letter at two, and collapses whitespace. The result is a fixed
/// point: `normalize(&normalize(s)) == normalize(s)`.
pub fn normalize(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    let mut prev: Option<char> = None;
    let mut run = 0usize;
    let mut pending_space = false;
    for c in raw.chars() {
        if is_diacritic(c) || c == TATWEEL {
            continue;
        }
        if c.is_whitespace() {
            pending_space = !out.is_empty();
            prev = None;
            run = 0;
            continue;
        }
        let c = fold_letter(c);
        if pending_space {
            out.push(' ');
            pending_space = false;
        }
        if Some(c) == prev {
            run += 1;
        } else {
            prev = Some(c);
            run = 1;
        }
        if c.is_alphabetic() && run > 2 {
            continue;
        }
        out.push(c);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Word,
    Emoticon,
    QuestionMark,
    ExclamationMark,
    OtherPunct,
    Mention,
    Url,
    Hashtag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(kind: TokenKind, surface: impl Into<String>) -> Self {
        Self { surface: surface.into(), kind }
    }

    /// Whether the token's text takes part in lexicon lookups (words and
    /// hashtag bodies).
    pub fn is_lexical(&self) -> bool {
        matches!(self.kind, TokenKind::Word | TokenKind::Hashtag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedTweet {
    pub tweet_id: String,
    pub tokens: Vec<Token>,
    /// Word tokens plus hashtag bodies.
    pub word_count: usize,
}

impl TokenizedTweet {
    pub fn from_tokens(tweet_id: impl Into<String>, tokens: Vec<Token>) -> Self {
        let word_count = tokens.iter().filter(|t| t.is_lexical()).count();
        Self { tweet_id: tweet_id.into(), tokens, word_count }
    }
}

/// Longest-match matcher over the emoticon marker lists.
#[derive(Debug, Clone, Default)]
pub struct EmoticonMatcher {
    // (chars, surface), longest first
    patterns: Vec<(Vec<char>, String)>,
}

impl EmoticonMatcher {
    pub fn new<I, S>(emoticons: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut patterns: Vec<(Vec<char>, String)> = emoticons
            .into_iter()
            .map(|s| s.as_ref().to_string())
            .filter(|s| !s.is_empty())
            .map(|s| (s.chars().collect(), s))
            .collect();
        patterns.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.1.cmp(&b.1)));
        patterns.dedup_by(|a, b| a.1 == b.1);
        Self { patterns }
    }

    fn longest_at(&self, chars: &[char]) -> Option<&(Vec<char>, String)> {
        self.patterns.iter().find(|(p, _)| chars.starts_with(p))
    }
}

fn starts_with_ignore_ascii_case(chars: &[char], prefix: &str) -> bool {
    let mut it = chars.iter();
    prefix.chars().all(|p| it.next().is_some_and(|c| c.eq_ignore_ascii_case(&p)))
}

/// Split normalized text into tokens.
///
/// At each token start the longest emoticon match wins; then URLs
/// (`http://`, `https://`, `www.`), mentions (`@name`), hashtags (`#body`,
/// surface is the body), question marks (`?` and `؟`), exclamation marks,
/// letter/digit runs as words, and any other single character as
/// punctuation. Whitespace and zero-width characters separate tokens.
pub fn tokenize(tweet_id: &str, normalized: &str, emoticons: &EmoticonMatcher) -> TokenizedTweet {
    let chars: Vec<char> = normalized.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let run_end = |from: usize, pred: &dyn Fn(char) -> bool| {
        let mut j = from;
        while j < chars.len() && pred(chars[j]) {
            j += 1;
        }
        j
    };
    let collect = |a: usize, b: usize| chars[a..b].iter().collect::<String>();

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || is_zero_width(c) {
            i += 1;
            continue;
        }
        if let Some((pat, surface)) = emoticons.longest_at(&chars[i..]) {
            tokens.push(Token::new(TokenKind::Emoticon, surface.clone()));
            i += pat.len();
            continue;
        }
        let rest = &chars[i..];
        if starts_with_ignore_ascii_case(rest, "http://")
            || starts_with_ignore_ascii_case(rest, "https://")
            || starts_with_ignore_ascii_case(rest, "www.")
        {
            let end = run_end(i, &|c: char| !c.is_whitespace() && !is_zero_width(c));
            tokens.push(Token::new(TokenKind::Url, collect(i, end)));
            i = end;
            continue;
        }
        match c {
            '@' => {
                let end = run_end(i + 1, &|c: char| is_word_char(c) || c == '_');
                if end > i + 1 {
                    tokens.push(Token::new(TokenKind::Mention, collect(i, end)));
                } else {
                    tokens.push(Token::new(TokenKind::OtherPunct, "@"));
                }
                i = end.max(i + 1);
            }
            '#' => {
                let end = run_end(i + 1, &is_word_char);
                if end > i + 1 {
                    tokens.push(Token::new(TokenKind::Hashtag, collect(i + 1, end)));
                } else {
                    tokens.push(Token::new(TokenKind::OtherPunct, "#"));
                }
                i = end.max(i + 1);
            }
            '?' | '\u{061F}' => {
                tokens.push(Token::new(TokenKind::QuestionMark, c.to_string()));
                i += 1;
            }
            '!' => {
                tokens.push(Token::new(TokenKind::ExclamationMark, "!"));
                i += 1;
            }
            c if is_word_char(c) => {
                let end = run_end(i, &is_word_char);
                tokens.push(Token::new(TokenKind::Word, collect(i, end)));
                i = end;
            }
            c => {
                tokens.push(Token::new(TokenKind::OtherPunct, c.to_string()));
                i += 1;
            }
        }
    }
    TokenizedTweet::from_tokens(tweet_id, tokens)
}
