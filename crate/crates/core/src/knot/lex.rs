use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Word(String),
    Int(i64),
    Open(char),
    Close(char),
    Comma,
    Equals,
}

/// Split into tokens, recording the byte offset of each.
pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '[' | '(' => {
                chars.next();
                out.push((pos, Tok::Open(c)));
            }
            ']' | ')' => {
                chars.next();
                out.push((pos, Tok::Close(c)));
            }
            ',' => {
                chars.next();
                out.push((pos, Tok::Comma));
            }
            '=' => {
                chars.next();
                out.push((pos, Tok::Equals));
            }
            '-' | '0'..='9' => {
                let mut s = String::new();
                s.push(c);
                chars.next();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = s
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad integer '{s}'")))?;
                out.push((pos, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Word(s)));
            }
            other => return Err(Error::parse(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// Cursor over a token list that reports positions in errors.
pub(crate) struct Cursor {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self> {
        Ok(Cursor {
            toks: tokenize(text)?,
            at: 0,
            end: text.len(),
        })
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    pub(crate) fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        match self.next() {
            Some(t) if &t == want => Ok(()),
            Some(t) => Err(Error::parse(pos, format!("expected {what}, found {t:?}"))),
            None => Err(Error::parse(pos, format!("expected {what}, found end of input"))),
        }
    }

    /// Accept either bracket style for an opening token; returns the
    /// matching close character.
    pub(crate) fn open(&mut self) -> Result<char> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Open('[')) => Ok(']'),
            Some(Tok::Open('(')) => Ok(')'),
            _ => Err(Error::parse(pos, "expected '[' or '('")),
        }
    }

    pub(crate) fn int(&mut self) -> Result<(usize, i64)> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Int(n)) => Ok((pos, n)),
            Some(t) => Err(Error::parse(pos, format!("expected an integer, found {t:?}"))),
            None => Err(Error::parse(pos, "expected an integer, found end of input")),
        }
    }

    /// Integers separated by commas or whitespace, up to the closing bracket `close`.
    pub(crate) fn int_list(&mut self, close: char) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Close(close)) {
            self.next();
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Comma) => {
                    self.next();
                }
                Some(Tok::Close(c)) if *c == close => {
                    self.next();
                    return Ok(out);
                }
                Some(Tok::Int(_)) => {}
                _ => return Err(Error::parse(pos, format!("expected ',' or '{close}'"))),
            }
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at < self.toks.len() {
            Err(Error::parse(self.pos(), "trailing input"))
        } else {
            Ok(())
        }
    }
}
