//! Braid words over Artin generators `σᵢ`, band generators `a_{i,j}`, and
//! the Garside elements `Δ` and `δ`.
//!
//! Text form: whitespace-separated tokens `base ("^" power)?` where `base`
//! is one of `s<i>`, `a<i>,<j>`, `D` (for `Δ`) or `d` (for `δ`), e.g.
//! `"s1 s2^-1 a1,3^2 d^-1"`. The empty string is the trivial braid.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `σᵢ`, `1 ≤ i ≤ n−1`.
    Artin(usize),
    /// `a_{i,j}` with `i < j`.
    Band(usize, usize),
    /// `Δ`, the positive half twist.
    BigDelta,
    /// `δ = σ_{n−1}⋯σ₁`.
    SmallDelta,
}

impl Generator {
    /// Number of Artin letters in the positive generator.
    pub fn weight(self, n: usize) -> i64 {
        match self {
            Generator::Artin(_) | Generator::Band(..) => 1,
            Generator::SmallDelta => n as i64 - 1,
            Generator::BigDelta => (n * (n - 1) / 2) as i64,
        }
    }

    /// Band generator with the pair put in increasing order.
    pub fn band(i: usize, j: usize) -> Generator {
        Generator::Band(i.min(j), i.max(j))
    }

    fn validate(self, n: usize) -> Result<()> {
        let bad = |detail: String| Err(Error::IndexOutOfRange { n, detail });
        match self {
            Generator::Artin(i) if i == 0 || i >= n => bad(format!("s{i}")),
            Generator::Band(i, j) if i == j => bad(format!("a{i},{j} has equal indices")),
            Generator::Band(i, j) if i == 0 || j > n || i > j => bad(format!("a{i},{j}")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Artin(i) => write!(f, "s{i}"),
            Generator::Band(i, j) => write!(f, "a{i},{j}"),
            Generator::BigDelta => f.write_str("D"),
            Generator::SmallDelta => f.write_str("d"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub generator: Generator,
    pub power: i64,
}

impl Token {
    pub fn new(generator: Generator, power: i64) -> Token {
        Token { generator, power }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.power)
        }
    }
}

/// A word in `B_n`. Powers are kept on the tokens and expanded by consumers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    tokens: Vec<Token>,
}

impl BraidWord {
    /// The empty word in `B_n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        Ok(BraidWord { n, tokens: Vec::new() })
    }

    pub fn from_tokens(n: usize, tokens: Vec<Token>) -> Result<Self> {
        let mut w = Self::identity(n)?;
        for t in tokens {
            w.push(t)?;
        }
        Ok(w)
    }

    /// Artin word from signed indices: `[2, -1]` is `σ₂σ₁⁻¹`.
    pub fn artin(n: usize, letters: &[i32]) -> Result<Self> {
        let tokens = letters
            .iter()
            .map(|&l| {
                if l == 0 {
                    Err(Error::IndexOutOfRange { n, detail: "s0".into() })
                } else {
                    Ok(Token::new(Generator::Artin(l.unsigned_abs() as usize), l.signum() as i64))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_tokens(n, tokens)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut w = Self::identity(n)?;
        for (pos, raw) in split_tokens(text) {
            let tok = parse_token(raw, pos)?;
            tok.generator.validate(n).map_err(|e| match e {
                Error::IndexOutOfRange { n, detail } => Error::IndexOutOfRange {
                    n,
                    detail: format!("{detail} at byte {pos}"),
                },
                other => other,
            })?;
            w.tokens.push(tok);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, t: Token) -> Result<()> {
        if t.power == 0 {
            return Err(Error::Input("token power must be nonzero".into()));
        }
        let t = match t.generator {
            Generator::Band(i, j) => Token::new(Generator::band(i, j), t.power),
            _ => t,
        };
        t.generator.validate(self.n)?;
        self.tokens.push(t);
        Ok(())
    }

    pub fn push_generator(&mut self, g: Generator, power: i64) -> Result<()> {
        self.push(Token::new(g, power))
    }

    /// `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { expected: self.n, got: other.n });
        }
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Ok(BraidWord { n: self.n, tokens })
    }

    /// Group inverse: reversed tokens with negated powers.
    pub fn invert(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            tokens: self
                .tokens
                .iter()
                .rev()
                .map(|t| Token::new(t.generator, -t.power))
                .collect(),
        }
    }

    /// Image under the abelianization `B_n → Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.tokens
            .iter()
            .map(|t| t.power * t.generator.weight(self.n))
            .sum()
    }

    /// Expands powers into single letters `(generator, positive?)`.
    pub fn letters(&self) -> impl Iterator<Item = (Generator, bool)> + '_ {
        self.tokens.iter().flat_map(|t| {
            std::iter::repeat_n((t.generator, t.power > 0), t.power.unsigned_abs() as usize)
        })
    }

    /// Rewrites every letter as Artin letters; `+i` is `σᵢ`, `−i` is `σᵢ⁻¹`.
    pub fn to_artin_letters(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for (g, pos) in self.letters() {
            let word = generator_artin_letters(g, self.n);
            if pos {
                out.extend_from_slice(&word);
            } else {
                out.extend(word.iter().rev().map(|&l| -l));
            }
        }
        out
    }

    pub fn to_artin(&self) -> BraidWord {
        BraidWord::artin(self.n, &self.to_artin_letters()).expect("indices already validated")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.tokens {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            word: &'a str,
        }
        Repr { n: self.n, word: &self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            word: String,
        }
        let r = Repr::deserialize(d)?;
        BraidWord::parse(&r.word, r.n).map_err(serde::de::Error::custom)
    }
}

/// Positive Artin letters of a single generator.
pub(crate) fn generator_artin_letters(g: Generator, n: usize) -> Vec<i32> {
    match g {
        Generator::Artin(i) => vec![i as i32],
        Generator::Band(i, j) => band_letters(i, j),
        Generator::SmallDelta => (1..n as i32).rev().collect(),
        Generator::BigDelta => {
            // (σ₁σ₂⋯σ_{n−1})(σ₁⋯σ_{n−2})⋯(σ₁)
            let mut out = Vec::with_capacity(n * (n - 1) / 2);
            for top in (1..n as i32).rev() {
                out.extend(1..=top);
            }
            out
        }
    }
}

fn band_letters(i: usize, j: usize) -> Vec<i32> {
    let (i, j) = (i.min(j) as i32, i.max(j) as i32);
    // (σ_{j−2}⋯σ_i)⁻¹ σ_{j−1} (σ_{j−2}⋯σ_i)
    let conj: Vec<i32> = (i..=j - 2).rev().collect();
    let mut out: Vec<i32> = conj.iter().rev().map(|&l| -l).collect();
    out.push(j - 1);
    out.extend_from_slice(&conj);
    out
}

/// Artin word for the band generator `a_{i,j}`, `1 ≤ i < j ≤ n`.
pub fn band_to_artin(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if i >= j || i == 0 || j > n {
        return Err(Error::IndexOutOfRange { n, detail: format!("a{i},{j}") });
    }
    BraidWord::artin(n, &band_letters(i, j))
}

fn split_tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

fn parse_token(raw: &str, pos: usize) -> Result<Token> {
    let syntax = |offset: usize, message: &str| Error::Syntax {
        position: pos + offset,
        message: message.to_string(),
    };
    let (base, power) = match raw.find('^') {
        Some(k) => {
            let p = &raw[k + 1..];
            let power: i64 = parse_signed(p).ok_or_else(|| syntax(k + 1, "expected a signed integer power"))?;
            if power == 0 {
                return Err(syntax(k + 1, "power must be nonzero"));
            }
            (&raw[..k], power)
        }
        None => (raw, 1),
    };
    let generator = match base.as_bytes().first() {
        Some(b'D') if base.len() == 1 => Generator::BigDelta,
        Some(b'd') if base.len() == 1 => Generator::SmallDelta,
        Some(b's') => {
            let i = parse_index(&base[1..]).ok_or_else(|| syntax(1, "expected a positive index after 's'"))?;
            Generator::Artin(i)
        }
        Some(b'a') => {
            let body = &base[1..];
            let comma = body.find(',').ok_or_else(|| syntax(1, "expected 'a<i>,<j>'"))?;
            let i = parse_index(&body[..comma]).ok_or_else(|| syntax(1, "expected a positive index after 'a'"))?;
            let j = parse_index(&body[comma + 1..])
                .ok_or_else(|| syntax(comma + 2, "expected a positive index after ','"))?;
            if i == j {
                return Err(syntax(0, "band generator needs two distinct indices"));
            }
            Generator::band(i, j)
        }
        _ => return Err(syntax(0, "unknown generator; expected s<i>, a<i>,<j>, D or d")),
    };
    Ok(Token::new(generator, power))
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok().filter(|&v: &usize| v > 0)
}

fn parse_signed(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    i64::from_str(s).ok()
}
