//! Text grammar for trees, forests and words.
//!
//! ```text
//! vertex := "f" digits [ "[" list "]" ] | "[" list "]"
//! list   := ε | vertex ( "," vertex )*
//! forest := "I" | vertex ( " "+ vertex )*
//! word   := "1" | "f" digits ( "." "f" digits )*
//! ```
//!
//! Errors carry the byte offset where parsing stopped.

use crate::error::{Error, Result};
use crate::trees::{Forest, OrderedForest, PlanarTree, Tree};
use crate::words::{DualWord, Word};

struct Raw {
    label: Option<u32>,
    children: Vec<Raw>,
}

impl Raw {
    fn tree(&self) -> Tree {
        Tree::node(self.label, self.children.iter().map(Raw::tree).collect())
    }

    fn planar(&self) -> PlanarTree {
        PlanarTree::node(self.label, self.children.iter().map(Raw::planar).collect())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => err(self.pos, format!("expected '{}', found '{}'", b as char, c as char)),
            None => err(self.pos, format!("expected '{}', found end of input", b as char)),
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(self.pos, "expected a letter index");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        match text.parse::<u32>() {
            Ok(k) if k > 0 => Ok(k),
            _ => err(start, format!("invalid letter index {text}")),
        }
    }

    fn letter(&mut self) -> Result<u32> {
        self.expect(b'f')?;
        self.number()
    }

    fn vertex(&mut self) -> Result<Raw> {
        let label = match self.peek() {
            Some(b'f') => Some(self.letter()?),
            Some(b'[') => None,
            Some(c) => return err(self.pos, format!("unexpected '{}'", c as char)),
            None => return err(self.pos, "unexpected end of input"),
        };
        let mut children = Vec::new();
        if label.is_none() || self.peek() == Some(b'[') {
            self.expect(b'[')?;
            if self.peek() != Some(b']') {
                children.push(self.vertex()?);
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    children.push(self.vertex()?);
                }
            }
            if self.peek().is_none() {
                return err(self.pos, "unbalanced bracket");
            }
            self.expect(b']')?;
        }
        Ok(Raw { label, children })
    }

    fn forest(&mut self) -> Result<Vec<Raw>> {
        if self.peek() == Some(b'I') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut trees = vec![self.vertex()?];
        while self.peek() == Some(b' ') {
            while self.peek() == Some(b' ') {
                self.pos += 1;
            }
            trees.push(self.vertex()?);
        }
        Ok(trees)
    }

    fn word(&mut self) -> Result<Word> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let mut letters = vec![self.letter()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            letters.push(self.letter()?);
        }
        Ok(Word::new(letters))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => err(self.pos, format!("unexpected trailing '{}'", c as char)),
        }
    }
}

fn run<T>(text: &str, f: impl FnOnce(&mut Parser<'_>) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(text);
    let v = f(&mut p)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    run(text, |p| p.vertex()).map(|r| r.tree())
}

pub fn parse_forest(text: &str) -> Result<Forest> {
    run(text, |p| p.forest()).map(|v| Forest::new(v.iter().map(Raw::tree).collect()))
}

pub fn parse_planar(text: &str) -> Result<PlanarTree> {
    run(text, |p| p.vertex()).map(|r| r.planar())
}

pub fn parse_ordered_forest(text: &str) -> Result<OrderedForest> {
    run(text, |p| p.forest()).map(|v| OrderedForest(v.iter().map(Raw::planar).collect()))
}

pub fn parse_word(text: &str) -> Result<Word> {
    run(text, |p| p.word())
}

/// A dual word `w*`; the trailing star is optional.
pub fn parse_dual_word(text: &str) -> Result<DualWord> {
    let body = text.strip_suffix('*').unwrap_or(text);
    parse_word(body).map(DualWord)
}

/// What kind of element a piece of text denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Tree,
    Forest,
    Word,
    Planar,
}

/// A parsed element of one of the supported kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Tree(Tree),
    Forest(Forest),
    Word(Word),
    Planar(PlanarTree),
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expr::Tree(t) => t.fmt(f),
            Expr::Forest(u) => u.fmt(f),
            Expr::Word(w) => w.fmt(f),
            Expr::Planar(t) => t.fmt(f),
        }
    }
}

pub fn parse_expression(text: &str, kind: ExprKind) -> Result<Expr> {
    Ok(match kind {
        ExprKind::Tree => Expr::Tree(parse_tree(text)?),
        ExprKind::Forest => Expr::Forest(parse_forest(text)?),
        ExprKind::Word => Expr::Word(parse_word(text)?),
        ExprKind::Planar => Expr::Planar(parse_planar(text)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_round_trip() {
        for s in ["[]", "[[],[]]", "[[[]]]", "f2[f1]", "f1", "f3[f1,f2[f1]]", "[[],f1]"] {
            assert_eq!(parse_tree(s).unwrap().to_string(), s, "{s}");
        }
        assert_eq!(parse_tree("f1[]").unwrap(), Tree::leaf(1));
    }

    #[test]
    fn canonical_after_parse() {
        assert_eq!(parse_tree("[[[]],[]]").unwrap().to_string(), "[[],[[]]]");
        assert_eq!(parse_planar("[[[]],[]]").unwrap().to_string(), "[[[]],[]]");
    }

    #[test]
    fn labeled_example() {
        let t = parse_tree("f2[f1]").unwrap();
        assert_eq!(t.label(), Some(2));
        assert_eq!(t.children(), &[Tree::leaf(1)]);
    }

    #[test]
    fn forests() {
        assert_eq!(parse_forest("I").unwrap(), Forest::empty());
        let u = parse_forest("[[]] []").unwrap();
        assert_eq!(u.to_string(), "[] [[]]");
        assert_eq!(parse_ordered_forest("[[]] []").unwrap().to_string(), "[[]] []");
    }

    #[test]
    fn words() {
        let w = parse_word("f1.f2.f1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.weight(), 4);
        assert_eq!(parse_word("1").unwrap(), Word::empty());
        assert_eq!(parse_dual_word("f1.f2*").unwrap(), DualWord(Word::new(vec![1, 2])));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_tree("[[]"),
            Err(Error::Parse {
                offset: 3,
                message: "unbalanced bracket".into()
            })
        );
        assert!(matches!(parse_tree("[]x"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_word("f1.g2"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_word("f0"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_tree(""), Err(Error::Parse { offset: 0, .. })));
    }
}
