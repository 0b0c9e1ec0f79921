//! Lexer, syntax tree, parser and printer for instance files.
//!
//! ```text
//! # comment
//! ring R = poly(x, y);
//! ring Q = poly(x1..x4) / [x4^3] cm;
//! ideal I = [x^2, x*y, y^2];
//! candidate J = [x^2, y^2];
//! filtration F = adic(I);
//! filtration G = product(normal(I), adic(J));
//! task verify northcott F;
//! task defect F window=-2..6;
//! expect coeffs F = [1, 0, 0];
//! ```

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError { pos, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Comment(String),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Comment(_) => f.write_str("comment"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: Pos,
    /// Blank lines between this token and the previous one.
    blank_before: bool,
    /// Starts a new line.
    line_start: bool,
}

const SYMBOLS: [&str; 11] = ["..", "=", ";", ",", "[", "]", "(", ")", "^", "*", "/"];

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let mut newlines = 1usize;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            newlines += 1;
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let pos = Pos { line, col };
        let blank_before = newlines >= 2 && !out.is_empty();
        let line_start = newlines >= 1;
        newlines = 0;
        let start = i;
        let tok = if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            Tok::Comment(chars[start + 1..i].iter().collect::<String>().trim().to_string())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '-') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c == '-' {
            // a lone minus; joined with the following integer or word by the parser
            i += 1;
            Tok::Sym("-")
        } else {
            let rest: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
                Some(s) => {
                    i += s.len();
                    Tok::Sym(s)
                }
                None => return Err(ParseError::new(pos, format!("unexpected character `{c}`"))),
            }
        };
        col += i - start;
        out.push(Token { tok, pos, blank_before, line_start });
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col }, blank_before: false, line_start: true });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub var: Ident,
    pub exponent: Option<u32>,
}

/// A product of variables, or the literal `1` when `factors` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub pos: Pos,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarSpec {
    Single(Ident),
    Range(Ident, Ident),
}

/// `name` or `name(arg, ...)` or an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Name(Ident),
    Call(Ident, Vec<Term>),
    Int(u32, Pos),
}

impl Term {
    pub fn pos(&self) -> Pos {
        match self {
            Term::Name(i) | Term::Call(i, _) => i.pos,
            Term::Int(_, p) => *p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArgValue {
    Int(i64),
    Range(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub key: Ident,
    pub value: ArgValue,
}

/// Argument keys; any other word is part of the task head.
pub const ARG_KEYS: [&str; 3] = ["n", "window", "axis"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskSpec {
    pub words: Vec<Ident>,
    pub args: Vec<Arg>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Word(String),
    Monomial(Monomial),
    List(Vec<Value>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Comment { text: String, inline: bool },
    Ring { name: Ident, vars: Vec<VarSpec>, quotient: Option<Vec<Monomial>>, cm: bool },
    Ideal { name: Ident, gens: Vec<Monomial> },
    Candidate { name: Ident, gens: Vec<Monomial> },
    Filtration { name: Ident, term: Term },
    Task(TaskSpec),
    Expect { spec: TaskSpec, value: Value },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub statement: Statement,
    pub pos: Pos,
    pub blank_before: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InstanceFile {
    pub items: Vec<Item>,
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let t = self.peek();
        ParseError::new(t.pos, format!("expected {wanted}, found {}", t.tok))
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.next();
            true
        } else {
            false
        }
    }

    fn sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{s}`")))
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let id = Ident { name: s.clone(), pos: self.peek().pos };
                self.next();
                Ok(id)
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.next();
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(v) => {
                self.next();
                u32::try_from(v).map_err(|_| ParseError::new(t.pos, format!("{what} {v} is too large")))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat_sym("-");
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(v) => {
                self.next();
                let v = i64::try_from(v).map_err(|_| ParseError::new(t.pos, format!("integer {v} is too large")))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        let pos = self.peek().pos;
        if let Tok::Int(v) = &self.peek().tok {
            if *v == BigInt::from(1) {
                self.next();
                return Ok(Monomial { pos, factors: Vec::new() });
            }
            return Err(ParseError::new(pos, format!("coefficient `{v}` in a monomial; only `1` is allowed")));
        }
        let mut factors = Vec::new();
        loop {
            let var = self.ident()?;
            let exponent = if self.eat_sym("^") {
                let p = self.peek().pos;
                let e = self.small_int("exponent")?;
                if e == 0 {
                    return Err(ParseError::new(p, "exponents must be positive"));
                }
                Some(e)
            } else {
                None
            };
            factors.push(Factor { var, exponent });
            if !self.eat_sym("*") {
                break;
            }
        }
        Ok(Monomial { pos, factors })
    }

    fn monomial_list(&mut self) -> Result<Vec<Monomial>, ParseError> {
        self.sym("[")?;
        let mut out = Vec::new();
        if self.eat_sym("]") {
            return Ok(out);
        }
        loop {
            out.push(self.monomial()?);
            if self.eat_sym("]") {
                return Ok(out);
            }
            self.sym(",")?;
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if let Tok::Int(_) = self.peek().tok {
            let pos = self.peek().pos;
            return Ok(Term::Int(self.small_int("integer")?, pos));
        }
        let head = self.ident()?;
        if !self.eat_sym("(") {
            return Ok(Term::Name(head));
        }
        let mut args = vec![self.term()?];
        while self.eat_sym(",") {
            args.push(self.term()?);
        }
        self.sym(")")?;
        Ok(Term::Call(head, args))
    }

    fn var_spec(&mut self) -> Result<VarSpec, ParseError> {
        let a = self.ident()?;
        if self.eat_sym("..") {
            Ok(VarSpec::Range(a, self.ident()?))
        } else {
            Ok(VarSpec::Single(a))
        }
    }

    fn task_spec(&mut self) -> Result<TaskSpec, ParseError> {
        let mut words = Vec::new();
        let mut args = Vec::new();
        loop {
            let is_arg = matches!(&self.peek().tok, Tok::Ident(s) if ARG_KEYS.contains(&s.as_str()))
                && matches!(self.peek_at(1), Tok::Sym("="));
            if is_arg {
                let key = self.ident()?;
                self.sym("=")?;
                let lo = self.signed()?;
                let value = if self.eat_sym("..") { ArgValue::Range(lo, self.signed()?) } else { ArgValue::Int(lo) };
                args.push(Arg { key, value });
            } else if matches!(self.peek().tok, Tok::Ident(_)) {
                if !args.is_empty() {
                    return Err(self.unexpected("argument or `;`"));
                }
                words.push(self.ident()?);
            } else {
                break;
            }
        }
        if words.is_empty() {
            return Err(self.unexpected("task name"));
        }
        Ok(TaskSpec { words, args })
    }

    /// Bare words inside a list are monomials; outside they are verdicts or `none`.
    fn value(&mut self, in_list: bool) -> Result<Value, ParseError> {
        if !in_list && self.eat_sym("[") {
            let mut items = Vec::new();
            if self.eat_sym("]") {
                return Ok(Value::List(items));
            }
            loop {
                items.push(self.value(true)?);
                if self.eat_sym("]") {
                    return Ok(Value::List(items));
                }
                self.sym(",")?;
            }
        }
        if self.eat_sym("-") {
            let t = self.peek().clone();
            return match &t.tok {
                Tok::Int(v) => {
                    self.next();
                    Ok(Value::Int(-v))
                }
                Tok::Ident(s) => {
                    self.next();
                    Ok(Value::Word(format!("-{s}")))
                }
                _ => Err(self.unexpected("integer or word")),
            };
        }
        match &self.peek().tok {
            Tok::Int(v) => {
                let v = v.clone();
                self.next();
                Ok(Value::Int(v))
            }
            Tok::Ident(s) => {
                if in_list || matches!(self.peek_at(1), Tok::Sym("^") | Tok::Sym("*")) {
                    Ok(Value::Monomial(self.monomial()?))
                } else {
                    let s = s.clone();
                    self.next();
                    Ok(Value::Word(s))
                }
            }
            _ => Err(self.unexpected("value")),
        }
    }

    fn statement(&mut self) -> Result<Item, ParseError> {
        let head = self.peek().clone();
        let pos = head.pos;
        let blank_before = head.blank_before;
        if let Tok::Comment(text) = &head.tok {
            self.next();
            let inline = !head.line_start;
            return Ok(Item { statement: Statement::Comment { text: text.clone(), inline }, pos, blank_before });
        }
        let kw = self.ident()?;
        let statement = match kw.name.as_str() {
            "ring" => {
                let name = self.ident()?;
                self.sym("=")?;
                self.keyword("poly")?;
                self.sym("(")?;
                let mut vars = vec![self.var_spec()?];
                while self.eat_sym(",") {
                    vars.push(self.var_spec()?);
                }
                self.sym(")")?;
                let quotient = if self.eat_sym("/") { Some(self.monomial_list()?) } else { None };
                let cm = matches!(&self.peek().tok, Tok::Ident(s) if s == "cm");
                if cm {
                    self.next();
                }
                Statement::Ring { name, vars, quotient, cm }
            }
            "ideal" | "candidate" => {
                let name = self.ident()?;
                self.sym("=")?;
                let gens = self.monomial_list()?;
                if kw.name == "ideal" {
                    Statement::Ideal { name, gens }
                } else {
                    Statement::Candidate { name, gens }
                }
            }
            "filtration" => {
                let name = self.ident()?;
                self.sym("=")?;
                Statement::Filtration { name, term: self.term()? }
            }
            "task" => Statement::Task(self.task_spec()?),
            "expect" => {
                let spec = self.task_spec()?;
                self.sym("=")?;
                Statement::Expect { spec, value: self.value(false)? }
            }
            other => {
                return Err(ParseError::new(
                    kw.pos,
                    format!("unknown statement `{other}`; expected ring, ideal, candidate, filtration, task or expect"),
                ))
            }
        };
        self.sym(";")?;
        Ok(Item { statement, pos, blank_before })
    }
}

/// Parses the syntax of an instance file. Names are resolved later.
pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let mut items = Vec::new();
    while p.peek().tok != Tok::Eof {
        items.push(p.statement()?);
    }
    Ok(InstanceFile { items })
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&fac.var.name)?;
            if let Some(e) = fac.exponent {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for VarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSpec::Single(a) => write!(f, "{a}"),
            VarSpec::Range(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Name(i) => write!(f, "{i}"),
            Term::Int(v, _) => write!(f, "{v}"),
            Term::Call(h, args) => write!(f, "{h}({})", join(args)),
        }
    }
}

impl fmt::Display for ArgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgValue::Int(v) => write!(f, "{v}"),
            ArgValue::Range(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl fmt::Display for TaskSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.words.iter().map(|w| w.name.clone()).collect();
        parts.extend(self.args.iter().map(|a| format!("{}={}", a.key, a.value)));
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Word(w) => f.write_str(w),
            Value::Monomial(m) => write!(f, "{m}"),
            Value::List(items) => write!(f, "[{}]", join(items)),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Comment { text, .. } if text.is_empty() => f.write_str("#"),
            Statement::Comment { text, .. } => write!(f, "# {text}"),
            Statement::Ring { name, vars, quotient, cm } => {
                write!(f, "ring {name} = poly({})", join(vars))?;
                if let Some(q) = quotient {
                    write!(f, " / [{}]", join(q))?;
                }
                if *cm {
                    f.write_str(" cm")?;
                }
                f.write_str(";")
            }
            Statement::Ideal { name, gens } => write!(f, "ideal {name} = [{}];", join(gens)),
            Statement::Candidate { name, gens } => write!(f, "candidate {name} = [{}];", join(gens)),
            Statement::Filtration { name, term } => write!(f, "filtration {name} = {term};"),
            Statement::Task(spec) => write!(f, "task {spec};"),
            Statement::Expect { spec, value } => write!(f, "expect {spec} = {value};"),
        }
    }
}

impl fmt::Display for InstanceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, item) in self.items.iter().enumerate() {
            match &item.statement {
                Statement::Comment { inline: true, .. } if k > 0 => {
                    write!(out, "  {}", item.statement)?;
                    continue;
                }
                _ => {}
            }
            if k > 0 {
                out.push('\n');
                if item.blank_before {
                    out.push('\n');
                }
            }
            write!(out, "{}", item.statement)?;
        }
        if !out.is_empty() {
            out.push('\n');
        }
        f.write_str(&out)
    }
}

/// Canonical text of a parsed file.
pub fn format(file: &InstanceFile) -> String {
    file.to_string()
}
