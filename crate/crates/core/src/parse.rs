//! Cycle-notation reader.
//!
//! ```text
//! perm  := cycle*
//! cycle := '(' label (',' label)+ ')'
//! label := [0-9]+ ( "'" | "''" | "+" )?
//! ```
//!
//! ASCII spaces may appear between tokens. Cycles must be disjoint: a label
//! may appear only once in the whole text, so products of overlapping cycles
//! have to be built with explicit composition.

use std::sync::Arc;

use crate::error::{ParseError, ParseErrorKind, PermError};
use crate::perm::{Domain, Permutation};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_spaces(&mut self) {
        while self.peek() == Some(' ') {
            self.pos += 1;
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        self.error(ParseErrorKind::Unexpected {
            found: self.peek(),
            expected,
        })
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    /// Reads one label token, returning its text and start offset.
    fn label(&mut self) -> Result<(&'a str, usize), ParseError> {
        self.skip_spaces();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected("a label"));
        }
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('\'') => {
                self.pos += 1;
                if self.peek() == Some('\'') {
                    self.pos += 1;
                }
            }
            _ => {}
        }
        Ok((&self.text[start..self.pos], start))
    }
}

pub fn parse_cycles(text: &str, domain: &Arc<Domain>) -> Result<Permutation, PermError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut used = vec![false; domain.len()];
    let mut cycles = Vec::new();

    loop {
        cur.skip_spaces();
        match cur.peek() {
            None => break,
            Some('(') => cur.pos += 1,
            Some(_) => return Err(cur.unexpected("'('").into()),
        }
        let open = cur.pos - 1;
        let mut cycle = Vec::new();
        loop {
            let (name, at) = cur.label()?;
            let point = domain.position(name).ok_or(ParseError {
                position: at,
                kind: ParseErrorKind::UnknownLabel(name.to_string()),
            })?;
            if std::mem::replace(&mut used[point], true) {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::DuplicateLabel(name.to_string()),
                }
                .into());
            }
            cycle.push(point);
            cur.skip_spaces();
            match cur.peek() {
                Some(',') => cur.pos += 1,
                Some(')') => break,
                _ => return Err(cur.unexpected("',' or ')'").into()),
            }
        }
        cur.expect(')', "')'")?;
        if cycle.len() < 2 {
            return Err(ParseError {
                position: open,
                kind: ParseErrorKind::ShortCycle,
            }
            .into());
        }
        cycles.push(cycle);
    }

    Permutation::from_cycles(domain, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five() -> Arc<Domain> {
        Arc::new(Domain::from_text("1 2 3 4 5").unwrap())
    }

    fn ico() -> Arc<Domain> {
        Arc::new(Domain::from_text("1 2 3 1' 2' 3' 1+ 2+ 3+ 1'' 2'' 3''").unwrap())
    }

    fn err(text: &str, domain: &Arc<Domain>) -> ParseError {
        match parse_cycles(text, domain) {
            Err(PermError::Parse(e)) => e,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn empty_text_is_identity() {
        assert!(parse_cycles("", &five()).unwrap().is_identity());
        assert!(parse_cycles("   ", &five()).unwrap().is_identity());
    }

    #[test]
    fn reads_three_cycle() {
        let p = parse_cycles("(1,4,5)", &five()).unwrap();
        assert_eq!(p.images(), &[3, 1, 2, 4, 0]);
    }

    #[test]
    fn reads_primed_and_plus_labels() {
        let d = ico();
        let p = parse_cycles("(1,2+,2'',3'',3+)(2,3,3',1'',2')", &d).unwrap();
        assert_eq!(p.apply_label("2+").unwrap().as_str(), "2''");
        assert_eq!(p.apply_label("2'").unwrap().as_str(), "2");
        assert_eq!(p.fixed_points(), vec![3, 6]);
    }

    #[test]
    fn spaces_between_tokens() {
        let a = parse_cycles(" ( 1 , 4 ,5 ) (2,3)", &five()).unwrap();
        assert_eq!(a, parse_cycles("(1,4,5)(2,3)", &five()).unwrap());
    }

    #[test]
    fn unknown_label_has_position() {
        let e = err("(1,2,7)", &five());
        assert_eq!(e.position, 5);
        assert_eq!(e.kind, ParseErrorKind::UnknownLabel("7".into()));
        let e = err("(1,2')", &five());
        assert_eq!(e.kind, ParseErrorKind::UnknownLabel("2'".into()));
        assert_eq!(e.position, 3);
    }

    #[test]
    fn duplicate_label_across_cycles() {
        let e = err("(1,2)(3,1)", &five());
        assert_eq!(e.position, 8);
        assert_eq!(e.kind, ParseErrorKind::DuplicateLabel("1".into()));
    }

    #[test]
    fn malformed_syntax() {
        assert!(matches!(
            err("1,2", &five()).kind,
            ParseErrorKind::Unexpected { .. }
        ));
        assert_eq!(err("(1,2", &five()).position, 4);
        assert!(matches!(
            err("(1,,2)", &five()).kind,
            ParseErrorKind::Unexpected {
                expected: "a label",
                ..
            }
        ));
        assert_eq!(err("(1)", &five()).kind, ParseErrorKind::ShortCycle);
        assert!(matches!(
            err("()", &five()).kind,
            ParseErrorKind::Unexpected { .. }
        ));
        // Three primes is a label followed by a stray quote.
        assert!(matches!(
            err("(1''',2)", &ico()).kind,
            ParseErrorKind::Unexpected {
                found: Some('\''),
                ..
            }
        ));
    }

    #[test]
    fn error_message_reports_one_based_column() {
        let e = err("(1,9)", &five());
        assert_eq!(e.to_string(), "at column 4: unknown label \"9\"");
    }
}
