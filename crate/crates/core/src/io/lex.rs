use crate::io::FormatError;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tok<'a> {
    pub text: &'a str,
    pub line: usize,
    pub offset: usize,
}

impl<'a> Tok<'a> {
    pub fn err(&self, expected: impl Into<String>) -> FormatError {
        FormatError {
            line: self.line,
            offset: self.offset,
            expected: expected.into(),
            found: self.text.to_string(),
        }
    }

    pub fn expect(&self, word: &str) -> Result<(), FormatError> {
        if self.text == word {
            Ok(())
        } else {
            Err(self.err(format!("`{word}`")))
        }
    }

    pub fn uint(&self, what: &str) -> Result<usize, FormatError> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.err(what));
        }
        self.text.parse().map_err(|_| self.err(what))
    }

    pub fn u64(&self, what: &str) -> Result<u64, FormatError> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.err(what));
        }
        self.text.parse().map_err(|_| self.err(what))
    }

    pub fn int(&self, what: &str) -> Result<i64, FormatError> {
        self.text.parse().map_err(|_| self.err(what))
    }

    /// A 1-based index in `1..=max`, returned 0-based.
    pub fn index(&self, max: usize, what: &str) -> Result<usize, FormatError> {
        let v = self.uint(what)?;
        if v == 0 || v > max {
            return Err(self.err(format!("{what} in 1..={max}")));
        }
        Ok(v - 1)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub no: usize,
    pub start: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    pub fn tokens(&self) -> Vec<Tok<'a>> {
        let mut out = Vec::new();
        let bytes = self.text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let s = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if s < i {
                out.push(Tok {
                    text: &self.text[s..i],
                    line: self.no,
                    offset: self.start + s,
                });
            }
        }
        out
    }

    pub fn is_comment(&self) -> bool {
        self.text.starts_with('c') && (self.text.len() == 1 || self.text.as_bytes()[1] == b' ')
    }

    pub fn is_blank(&self) -> bool {
        self.text.trim().is_empty()
    }

    /// Position just past the last character, for "missing token" errors.
    pub fn end(&self, expected: impl Into<String>) -> FormatError {
        FormatError {
            line: self.no,
            offset: self.start + self.text.len(),
            expected: expected.into(),
            found: "end of line".into(),
        }
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, raw) in text.split('\n').enumerate() {
        let next = start + raw.len() + 1;
        let body = raw.strip_suffix('\r').unwrap_or(raw);
        out.push(Line {
            no: i + 1,
            start,
            text: body,
        });
        start = next;
    }
    if out.last().is_some_and(|l| l.text.is_empty()) {
        out.pop();
    }
    out
}

pub(crate) fn end_of_input(text: &str, expected: impl Into<String>) -> FormatError {
    FormatError {
        line: text.split('\n').count(),
        offset: text.len(),
        expected: expected.into(),
        found: "end of input".into(),
    }
}

/// Splits off the `p <kind> ...` header, skipping comments and blanks before
/// it. Returns the header tokens after `p <kind>` and the remaining lines.
pub(crate) fn header<'a>(
    text: &'a str,
    kind: &str,
) -> Result<(Line<'a>, Vec<Tok<'a>>, Vec<Line<'a>>), FormatError> {
    let all = lines(text);
    let mut it = all.into_iter();
    for line in it.by_ref() {
        if line.is_blank() || line.is_comment() {
            continue;
        }
        let toks = line.tokens();
        toks[0].expect("p")?;
        let k = toks.get(1).ok_or_else(|| line.end(format!("`{kind}`")))?;
        k.expect(kind)?;
        let rest = toks[2..].to_vec();
        return Ok((line.clone(), rest, it.collect()));
    }
    Err(end_of_input(text, format!("`p {kind}` header")))
}

pub(crate) fn arg<'a>(line: &Line<'a>, toks: &[Tok<'a>], i: usize, what: &str) -> Result<Tok<'a>, FormatError> {
    toks.get(i).copied().ok_or_else(|| line.end(what))
}

pub(crate) fn no_more(toks: &[Tok<'_>], used: usize) -> Result<(), FormatError> {
    match toks.get(used) {
        Some(t) => Err(t.err("end of line")),
        None => Ok(()),
    }
}
