use std::fmt;

use super::ParseError;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub enum Sexp {
    Atom(String, Pos),
    /// Items, position of `(`, position of `)`.
    List(Vec<Sexp>, Pos, Pos),
}

impl Sexp {
    pub fn atom(s: impl Into<String>) -> Self {
        Sexp::Atom(s.into(), Pos::default())
    }

    pub fn list(items: Vec<Sexp>) -> Self {
        Sexp::List(items, Pos::default(), Pos::default())
    }

    /// `(head items…)`
    pub fn tagged(head: &str, items: impl IntoIterator<Item = Sexp>) -> Self {
        let mut v = vec![Sexp::atom(head)];
        v.extend(items);
        Sexp::list(v)
    }

    pub fn pos(&self) -> Pos {
        match self {
            Sexp::Atom(_, p) | Sexp::List(_, p, _) => *p,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            Sexp::List(..) => None,
        }
    }

    pub fn error(&self, expected: impl Into<String>) -> ParseError {
        let p = self.pos();
        ParseError::new(p.line, p.col, expected)
    }
}

// structural equality, ignoring positions
impl PartialEq for Sexp {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Sexp::Atom(a, _), Sexp::Atom(b, _)) => a == b,
            (Sexp::List(a, ..), Sexp::List(b, ..)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Sexp {}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(s, _) => f.write_str(s),
            Sexp::List(items, ..) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Sexp, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        match self.chars.peek() {
            None => Err(ParseError::new(start.line, start.col, "an atom or `(`")),
            Some(')') => Err(ParseError::new(start.line, start.col, "an atom or `(`, found `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.chars.peek() {
                        None => return Err(ParseError::new(self.pos.line, self.pos.col, "`)`")),
                        Some(')') => {
                            let end = self.pos;
                            self.bump();
                            return Ok(Sexp::List(items, start, end));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(Sexp::Atom(s, start))
            }
        }
    }
}

/// Reads exactly one s-expression; `;` starts a line comment.
pub fn read(text: &str) -> Result<Sexp, ParseError> {
    let mut r = Reader {
        chars: text.chars().peekable(),
        pos: Pos { line: 1, col: 1 },
    };
    let sexp = r.read()?;
    r.skip_trivia();
    if r.chars.peek().is_some() {
        return Err(ParseError::new(r.pos.line, r.pos.col, "end of input"));
    }
    Ok(sexp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions() {
        let s = read("(a\n  (b c) ; note\n d)").unwrap();
        let Sexp::List(items, open, close) = &s else { panic!() };
        assert_eq!(*open, Pos { line: 1, col: 1 });
        assert_eq!(items[1].pos(), Pos { line: 2, col: 3 });
        assert_eq!(items[2].pos(), Pos { line: 3, col: 2 });
        assert_eq!(*close, Pos { line: 3, col: 3 });
        assert_eq!(s.to_string(), "(a (b c) d)");
    }

    #[test]
    fn errors() {
        assert_eq!(read("(a b").unwrap_err(), ParseError::new(1, 5, "`)`"));
        assert_eq!(read("a b").unwrap_err(), ParseError::new(1, 3, "end of input"));
        assert_eq!(read("").unwrap_err().line, 1);
        assert_eq!(read(")").unwrap_err().col, 1);
    }
}
