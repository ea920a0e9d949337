//! The canonical text format for trees, hypertrees and forests.
//!
//! Grammar (whitespace-insensitive between tokens):
//!
//! ```text
//! reduced := "|" | "(" reduced reduced+ ")" deco?
//! hyper   := "*" edges? ;  edges := "[" edge+ "]" ;  edge := "(" member+ ")" deco?
//! member  := hyper | "(" member ")"
//! deco    := "@" identifier
//! forest  := term (";" term)*      -- the empty string is the unit
//! ```
//!
//! The canonical printer separates siblings with one space, wraps an edge
//! member in parentheses exactly when that member carries edges of its own,
//! and prints the unit forest as the empty string. `parse . print` is the
//! identity on values and `print . parse` is the identity on canonical text.

use std::fmt;

use thiserror::Error;

use crate::trees::{HyperEdge, HyperForest, HyperTree, ReducedForest, ReducedTree};

/// A syntax or arity error, with the 1-based character position it was
/// detected at.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Any expression the command line accepts: a single tree of either kind, or
/// a forest of either kind. Single terms parse as trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Reduced(ReducedTree),
    Hyper(HyperTree),
    ReducedForest(ReducedForest),
    HyperForest(HyperForest),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Reduced(t) => f.write_str(&print_reduced(t)),
            Expr::Hyper(t) => f.write_str(&print_hyper(t)),
            Expr::ReducedForest(x) => f.write_str(&print_reduced_forest(x)),
            Expr::HyperForest(x) => f.write_str(&print_hyper_forest(x)),
        }
    }
}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn err_at<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: pos + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.err(format!("expected `{want}`, found `{c}`")),
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    // deco := "@" identifier ; identifiers are [A-Za-z_][A-Za-z0-9_]*
    fn parse_deco(&mut self) -> Result<Option<String>, ParseError> {
        if self.peek() != Some('@') {
            return Ok(None);
        }
        self.bump();
        let start = self.pos;
        while let Some(c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return self.err("expected identifier after `@`");
        }
        let ident: String = self.chars[start..self.pos].iter().collect();
        if ident.chars().next().unwrap().is_ascii_digit() {
            return self.err_at(start, "identifier may not start with a digit");
        }
        Ok(Some(ident))
    }

    fn parse_reduced(&mut self) -> Result<ReducedTree, ParseError> {
        match self.peek() {
            Some('|') => {
                self.bump();
                Ok(ReducedTree::Leaf)
            }
            Some('(') => {
                let open = self.pos;
                self.bump();
                let mut children = Vec::new();
                loop {
                    match self.peek() {
                        Some(')') => {
                            self.bump();
                            break;
                        }
                        Some('|') | Some('(') => children.push(self.parse_reduced()?),
                        Some(c) => return self.err(format!("unexpected `{c}` in node")),
                        None => return self.err("unclosed `(`"),
                    }
                }
                if children.len() < 2 {
                    return self.err_at(open, format!("node arity {}", children.len()));
                }
                let tag = self.parse_deco()?;
                Ok(ReducedTree::Node { children, tag })
            }
            Some(c) => self.err(format!("expected `|` or `(`, found `{c}`")),
            None => self.err("expected `|` or `(`, found end of input"),
        }
    }

    fn parse_hyper(&mut self) -> Result<HyperTree, ParseError> {
        self.expect('*')?;
        let mut edges = Vec::new();
        if self.peek() == Some('[') {
            self.bump();
            loop {
                match self.peek() {
                    Some(']') => {
                        self.bump();
                        break;
                    }
                    Some('(') => edges.push(self.parse_edge()?),
                    Some(c) => return self.err(format!("unexpected `{c}` in edge list")),
                    None => return self.err("unclosed `[`"),
                }
            }
            if edges.is_empty() {
                return self.err("empty edge list");
            }
        }
        Ok(HyperTree { edges })
    }

    fn parse_edge(&mut self) -> Result<HyperEdge, ParseError> {
        let open = self.pos;
        self.expect('(')?;
        let mut members = Vec::new();
        loop {
            match self.peek() {
                Some(')') => {
                    self.bump();
                    break;
                }
                Some('*') => members.push(self.parse_hyper()?),
                // a member with edges of its own appears parenthesized
                Some('(') => members.push(self.parse_member_parens()?),
                Some(c) => return self.err(format!("unexpected `{c}` in edge")),
                None => return self.err("unclosed `(`"),
            }
        }
        if members.is_empty() {
            return self.err_at(open, "empty edge");
        }
        let tag = self.parse_deco()?;
        Ok(HyperEdge { members, tag })
    }

    fn parse_member_parens(&mut self) -> Result<HyperTree, ParseError> {
        self.expect('(')?;
        let inner = match self.peek() {
            Some('*') => self.parse_hyper()?,
            Some('(') => self.parse_member_parens()?,
            Some(c) => return self.err(format!("expected member, found `{c}`")),
            None => return self.err("expected member, found end of input"),
        };
        self.expect(')')?;
        Ok(inner)
    }
}

/// Parses a single reduced tree; trailing input is an error.
pub fn parse_reduced(text: &str) -> Result<ReducedTree, ParseError> {
    let mut s = Scanner::new(text);
    let t = s.parse_reduced()?;
    if !s.at_end() {
        return s.err("trailing input");
    }
    Ok(t)
}

/// Parses a single hypertree; trailing input is an error.
pub fn parse_hyper(text: &str) -> Result<HyperTree, ParseError> {
    let mut s = Scanner::new(text);
    let t = s.parse_hyper()?;
    if !s.at_end() {
        return s.err("trailing input");
    }
    Ok(t)
}

/// Parses a `;`-separated word of reduced trees. The empty string is the
/// unit forest, and unit trees are absorbed.
pub fn parse_reduced_forest(text: &str) -> Result<ReducedForest, ParseError> {
    let mut s = Scanner::new(text);
    if s.at_end() {
        return Ok(ReducedForest::unit());
    }
    let mut trees = vec![s.parse_reduced()?];
    while !s.at_end() {
        s.expect(';')?;
        trees.push(s.parse_reduced()?);
    }
    Ok(ReducedForest::from_trees(trees))
}

/// Parses a `;`-separated word of hypertrees; the empty string is the unit.
pub fn parse_hyper_forest(text: &str) -> Result<HyperForest, ParseError> {
    let mut s = Scanner::new(text);
    if s.at_end() {
        return Ok(HyperForest::unit());
    }
    let mut trees = vec![s.parse_hyper()?];
    while !s.at_end() {
        s.expect(';')?;
        trees.push(s.parse_hyper()?);
    }
    Ok(HyperForest::from_trees(trees))
}

/// Parses an expression of either kind, deciding the grammar from the first
/// token: `|` and `(` open the reduced grammar, `*` the hyper one. A single
/// term comes back as a tree, anything else as a forest.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        // ambiguous unit; reduced by convention, callers may coerce
        return Ok(Expr::ReducedForest(ReducedForest::unit()));
    }
    let hyper = trimmed.starts_with('*');
    let has_sep = has_top_level_semicolon(text);
    match (hyper, has_sep) {
        (false, false) => Ok(Expr::Reduced(parse_reduced(text)?)),
        (false, true) => Ok(Expr::ReducedForest(parse_reduced_forest(text)?)),
        (true, false) => Ok(Expr::Hyper(parse_hyper(text)?)),
        (true, true) => Ok(Expr::HyperForest(parse_hyper_forest(text)?)),
    }
}

fn has_top_level_semicolon(text: &str) -> bool {
    text.contains(';')
}

fn push_deco(out: &mut String, tag: &Option<String>) {
    if let Some(t) = tag {
        out.push('@');
        out.push_str(t);
    }
}

pub fn print_reduced(t: &ReducedTree) -> String {
    let mut out = String::new();
    fmt_reduced(t, &mut out);
    out
}

fn fmt_reduced(t: &ReducedTree, out: &mut String) {
    match t {
        ReducedTree::Leaf => out.push('|'),
        ReducedTree::Node { children, tag } => {
            out.push('(');
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                fmt_reduced(c, out);
            }
            out.push(')');
            push_deco(out, tag);
        }
    }
}

pub fn print_hyper(t: &HyperTree) -> String {
    let mut out = String::new();
    fmt_hyper(t, &mut out);
    out
}

fn fmt_hyper(t: &HyperTree, out: &mut String) {
    out.push('*');
    if t.edges.is_empty() {
        return;
    }
    out.push('[');
    for e in &t.edges {
        out.push('(');
        for (i, m) in e.members.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            if m.edges.is_empty() {
                out.push('*');
            } else {
                out.push('(');
                fmt_hyper(m, out);
                out.push(')');
            }
        }
        out.push(')');
        push_deco(out, &e.tag);
    }
    out.push(']');
}

pub fn print_reduced_forest(f: &ReducedForest) -> String {
    f.trees()
        .iter()
        .map(print_reduced)
        .collect::<Vec<_>>()
        .join(";")
}

pub fn print_hyper_forest(f: &HyperForest) -> String {
    f.trees()
        .iter()
        .map(print_hyper)
        .collect::<Vec<_>>()
        .join(";")
}
