//! Lexer and recursive-descent parser for session scripts.

use std::collections::BTreeMap;
use std::fmt;

use super::{Command, CommandKind, IdealExpr, IdealOp, Method, Session, Statement, Target, VerifySpec};
use crate::error::Error;
use crate::monomial::{Monomial, Variables};
use crate::poset::Poset;

/// Where in the input something happened (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    Syntax(String),
    Undeclared { what: &'static str, name: String },
    Duplicate(String),
    /// A declaration that is well formed but mathematically invalid, such as a
    /// poset that is not naturally labeled.
    Invalid(Error),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub location: Location,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.location)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::Undeclared { what, name } => write!(f, "undeclared {what} `{name}`"),
            ParseErrorKind::Duplicate(name) => write!(f, "`{name}` is already declared"),
            ParseErrorKind::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(u64),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(k) => write!(f, "`{k}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const PUNCT: &str = ";{}()[]<,*^=+:&";

fn lex(text: &str) -> Result<Vec<(Tok, Location)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    let bump = |c: char, line: &mut usize, column: &mut usize| {
        if c == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let loc = Location { line, column };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut column);
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                bump(c, &mut line, &mut column);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                s.push(c);
                chars.next();
                bump(c, &mut line, &mut column);
            }
            out.push((Tok::Ident(s), loc));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                chars.next();
                bump(c, &mut line, &mut column);
            }
            let k = s.parse().map_err(|_| ParseError {
                location: loc,
                kind: ParseErrorKind::Syntax(format!("integer `{s}` is too large")),
            })?;
            out.push((Tok::Int(k), loc));
        } else if PUNCT.contains(c) {
            chars.next();
            bump(c, &mut line, &mut column);
            out.push((Tok::Punct(c), loc));
        } else {
            return Err(ParseError { location: loc, kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")) });
        }
    }
    out.push((Tok::Eof, Location { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Location)>,
    pos: usize,
    vars: Option<Variables>,
    posets: BTreeMap<String, Poset>,
    last_poset: Option<String>,
    ideals: Vec<String>,
    statements: Vec<Statement>,
    commands: usize,
}

type PResult<T> = Result<T, ParseError>;

fn syntax<T>(location: Location, msg: impl Into<String>) -> PResult<T> {
    Err(ParseError { location, kind: ParseErrorKind::Syntax(msg.into()) })
}

impl Parser {
    fn new(text: &str, vars: Option<Variables>) -> PResult<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            vars,
            posets: BTreeMap::new(),
            last_poset: None,
            ideals: Vec::new(),
            statements: Vec::new(),
            commands: 0,
        })
    }

    fn finish(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            syntax(self.loc(), format!("unexpected {}", self.peek()))
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn loc(&self) -> Location {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, Location) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.loc(), format!("expected `{c}`, found {}", self.peek()))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Location)> {
        match self.next() {
            (Tok::Ident(s), loc) => Ok((s, loc)),
            (t, loc) => syntax(loc, format!("expected {what}, found {t}")),
        }
    }

    fn int(&mut self, what: &str) -> PResult<u64> {
        match self.next() {
            (Tok::Int(k), _) => Ok(k),
            (t, loc) => syntax(loc, format!("expected {what}, found {t}")),
        }
    }

    fn small_int(&mut self, what: &str) -> PResult<u32> {
        let loc = self.loc();
        let k = self.int(what)?;
        u32::try_from(k).or_else(|_| syntax(loc, format!("{what} {k} is too large")))
    }

    fn vars(&self, loc: Location) -> PResult<&Variables> {
        self.vars.as_ref().ok_or(ParseError { location: loc, kind: ParseErrorKind::Syntax("no `vars` declaration yet".into()) })
    }

    fn fresh_name(&self, name: &str, loc: Location) -> PResult<()> {
        if self.posets.contains_key(name) || self.ideals.iter().any(|n| n == name) {
            return Err(ParseError { location: loc, kind: ParseErrorKind::Duplicate(name.into()) });
        }
        Ok(())
    }

    fn var_index(&self, name: &str, loc: Location) -> PResult<usize> {
        self.vars(loc)?.index_of(name).ok_or(ParseError {
            location: loc,
            kind: ParseErrorKind::Undeclared { what: "variable", name: name.into() },
        })
    }

    fn session(mut self) -> PResult<Session> {
        while *self.peek() != Tok::Eof {
            let (kw, loc) = self.ident("a statement")?;
            match kw.as_str() {
                "vars" => self.vars_decl(loc)?,
                "poset" => self.poset_decl()?,
                "ideal" => self.ideal_decl()?,
                "cmd" => self.command(loc)?,
                _ => return syntax(loc, format!("unknown statement `{kw}`")),
            }
        }
        Ok(Session {
            vars: self.vars.unwrap_or_else(|| Variables::standard(0)),
            posets: self.posets,
            statements: self.statements,
        })
    }

    fn vars_decl(&mut self, loc: Location) -> PResult<()> {
        if self.vars.is_some() {
            return syntax(loc, "variables are already declared");
        }
        let mut names: Vec<String> = Vec::new();
        while let Tok::Ident(_) = self.peek() {
            let (name, nloc) = self.ident("a variable name")?;
            if names.contains(&name) {
                return Err(ParseError { location: nloc, kind: ParseErrorKind::Duplicate(name) });
            }
            names.push(name);
        }
        self.expect(';')?;
        let vars = Variables::new(names).map_err(|e| ParseError { location: loc, kind: ParseErrorKind::Invalid(e) })?;
        self.vars = Some(vars);
        Ok(())
    }

    fn poset_decl(&mut self) -> PResult<()> {
        let (name, loc) = self.ident("a poset name")?;
        self.fresh_name(&name, loc)?;
        let n = self.vars(loc)?.len();
        let poset = if self.eat('=') {
            let (kind, kloc) = self.ident("`chain`, `antichain` or `y`")?;
            self.eat(';');
            match kind.as_str() {
                "chain" => Poset::chain(n),
                "antichain" => Poset::antichain(n),
                "y" if n >= 3 => Poset::y_poset(n - 2),
                "y" => return syntax(kloc, "the Y poset needs at least 3 variables"),
                _ => return syntax(kloc, format!("unknown builtin poset `{kind}`")),
            }
        } else {
            self.expect('{')?;
            let mut rel = Vec::new();
            let mut first_loc = None;
            while !self.eat('}') {
                let (a, aloc) = self.ident("a variable")?;
                first_loc.get_or_insert(aloc);
                let mut prev = self.var_index(&a, aloc)?;
                self.expect('<')?;
                loop {
                    let (b, bloc) = self.ident("a variable")?;
                    let cur = self.var_index(&b, bloc)?;
                    rel.push((prev, cur));
                    prev = cur;
                    if !self.eat('<') {
                        break;
                    }
                }
                if !self.eat(';') && *self.peek() != Tok::Punct('}') {
                    return syntax(self.loc(), format!("expected `;` or `}}`, found {}", self.peek()));
                }
            }
            self.eat(';');
            Poset::new(n, rel).map_err(|e| ParseError { location: first_loc.unwrap_or(loc), kind: ParseErrorKind::Invalid(e) })?
        };
        self.posets.insert(name.clone(), poset);
        self.last_poset = Some(name);
        Ok(())
    }

    fn ideal_decl(&mut self) -> PResult<()> {
        let (name, loc) = self.ident("an ideal name")?;
        self.fresh_name(&name, loc)?;
        self.vars(loc)?;
        self.expect('=')?;
        let expr = self.ideal_expr()?;
        self.expect(';')?;
        self.ideals.push(name.clone());
        self.statements.push(Statement::Ideal { name, expr, location: loc });
        Ok(())
    }

    fn ideal_expr(&mut self) -> PResult<IdealExpr> {
        let mut lhs = self.ideal_atom()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('+') => IdealOp::Sum,
                Tok::Punct('*') => IdealOp::Product,
                Tok::Punct('&') => IdealOp::Intersect,
                Tok::Punct(':') => IdealOp::Quotient,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.ideal_atom()?;
            lhs = IdealExpr::Op(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn ideal_atom(&mut self) -> PResult<IdealExpr> {
        let loc = self.loc();
        match self.peek().clone() {
            Tok::Punct('(') => Ok(IdealExpr::Plain(self.generator_list()?)),
            Tok::Ident(s) if s == "Q" && matches!(self.peek_at(1), Tok::Punct('[') | Tok::Punct('(')) => {
                self.next();
                let poset = if self.eat('[') {
                    let (p, ploc) = self.ident("a poset name")?;
                    if !self.posets.contains_key(&p) {
                        return Err(ParseError { location: ploc, kind: ParseErrorKind::Undeclared { what: "poset", name: p } });
                    }
                    self.expect(']')?;
                    p
                } else {
                    self.last_poset.clone().ok_or(ParseError {
                        location: loc,
                        kind: ParseErrorKind::Syntax("`Q(...)` needs a declared poset; write `Q[P](...)`".into()),
                    })?
                };
                let gens = self.generator_list()?;
                Ok(IdealExpr::Closure { poset, gens })
            }
            Tok::Ident(s) => {
                self.next();
                if self.ideals.contains(&s) {
                    Ok(IdealExpr::Named(s))
                } else {
                    Err(ParseError { location: loc, kind: ParseErrorKind::Undeclared { what: "ideal", name: s } })
                }
            }
            t => syntax(loc, format!("expected an ideal, found {t}")),
        }
    }

    fn generator_list(&mut self) -> PResult<Vec<Monomial>> {
        self.expect('(')?;
        let mut gens = Vec::new();
        if self.eat(')') {
            return Ok(gens);
        }
        loop {
            gens.push(self.monomial()?);
            if self.eat(')') {
                return Ok(gens);
            }
            self.expect(',')?;
        }
    }

    fn monomial(&mut self) -> PResult<Monomial> {
        let loc = self.loc();
        let n = self.vars(loc)?.len();
        let mut exps = vec![0u64; n];
        loop {
            let (tok, floc) = self.next();
            match tok {
                Tok::Int(1) => {}
                Tok::Ident(s) => {
                    let factors = self.split_word(&s, floc)?;
                    let last = factors.len() - 1;
                    let power = if self.eat('^') { self.int("an exponent")? } else { 1 };
                    for (k, (v, e)) in factors.into_iter().enumerate() {
                        let e = if k == last { e.saturating_mul(power) } else { e };
                        exps[v] = exps[v].saturating_add(e);
                    }
                }
                t => return syntax(floc, format!("expected a monomial, found {t}")),
            }
            if !self.eat('*') {
                break;
            }
        }
        let exps: Option<Vec<u32>> = exps.into_iter().map(|e| u32::try_from(e).ok()).collect();
        exps.map(Monomial::new)
            .ok_or(ParseError { location: loc, kind: ParseErrorKind::Invalid(Error::ExponentOverflow) })
    }

    /// Split a word such as `a2bc` into `(variable, exponent)` pairs, taking
    /// the longest declared variable name at each step.
    fn split_word(&self, word: &str, loc: Location) -> PResult<Vec<(usize, u64)>> {
        let vars = self.vars(loc)?;
        let mut out = Vec::new();
        let mut rest = word;
        while !rest.is_empty() {
            let best = (0..vars.len())
                .filter(|&v| rest.starts_with(vars.name(v)))
                .max_by_key(|&v| vars.name(v).len());
            let Some(v) = best else {
                return Err(ParseError { location: loc, kind: ParseErrorKind::Undeclared { what: "variable", name: rest.into() } });
            };
            rest = &rest[vars.name(v).len()..];
            let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
            let e = if digits == 0 {
                1
            } else {
                rest[..digits].parse().or_else(|_| syntax(loc, format!("exponent in `{word}` is too large")))?
            };
            rest = &rest[digits..];
            out.push((v, e));
        }
        Ok(out)
    }

    fn ideal_ref(&mut self) -> PResult<String> {
        let (name, loc) = self.ident("an ideal name")?;
        if self.ideals.contains(&name) {
            Ok(name)
        } else {
            Err(ParseError { location: loc, kind: ParseErrorKind::Undeclared { what: "ideal", name } })
        }
    }

    fn poset_ref(&mut self) -> PResult<Option<String>> {
        let Tok::Ident(name) = self.peek().clone() else { return Ok(None) };
        let loc = self.loc();
        self.next();
        if self.posets.contains_key(&name) {
            Ok(Some(name))
        } else {
            Err(ParseError { location: loc, kind: ParseErrorKind::Undeclared { what: "poset", name } })
        }
    }

    fn last_or_ideal(&mut self) -> PResult<Target> {
        if matches!(self.peek(), Tok::Ident(s) if s == "last") {
            self.next();
            Ok(Target::Last)
        } else {
            Ok(Target::Ideal(self.ideal_ref()?))
        }
    }

    fn command(&mut self, loc: Location) -> PResult<()> {
        let start = self.pos;
        let (name, nloc) = self.ident("a command")?;
        let kind = match name.as_str() {
            "close" => CommandKind::Close(self.ideal_ref()?),
            "isqborel" => CommandKind::IsQBorel(self.ideal_ref()?, self.poset_ref()?),
            "maxposet" => CommandKind::MaxPoset(self.ideal_ref()?),
            "qgens" => CommandKind::QGens(self.ideal_ref()?, self.poset_ref()?),
            "factor" => CommandKind::Factor(self.ideal_ref()?),
            "primary" => CommandKind::Primary(self.ideal_ref()?),
            "assprimes" => CommandKind::AssPrimes(self.ideal_ref()?),
            "irreducible" => CommandKind::Irreducible(self.ideal_ref()?),
            "colon" => {
                let i = self.ideal_ref()?;
                let j = if matches!(self.peek(), Tok::Ident(_)) { Some(self.ideal_ref()?) } else { None };
                CommandKind::Colon(i, j)
            }
            "pdim" => CommandKind::Pdim(self.ideal_ref()?),
            "codim" => CommandKind::Codim(self.ideal_ref()?),
            "cm" => CommandKind::Cm(self.ideal_ref()?),
            "resolve" => self.resolve()?,
            "betti" => CommandKind::Betti(self.last_or_ideal()?),
            "show" => {
                let (t, tloc) = self.ident("`last`")?;
                if t != "last" {
                    return syntax(tloc, format!("`show` applies to `last`, found `{t}`"));
                }
                CommandKind::Show
            }
            "verify" => self.verify()?,
            _ => return syntax(nloc, format!("unknown command `{name}`")),
        };
        let end = self.pos;
        self.expect(';')?;
        let text: Vec<String> = self.toks[start..end].iter().map(|(t, _)| token_text(t)).collect();
        self.statements.push(Statement::Command(Command {
            index: self.commands,
            kind,
            text: join_tokens(&text),
            location: loc,
        }));
        self.commands += 1;
        Ok(())
    }

    fn resolve(&mut self) -> PResult<CommandKind> {
        let (m, mloc) = self.ident("a resolution method")?;
        let method = match m.as_str() {
            "ek" => Method::Ek,
            "y" => Method::Y,
            "taylor" => Method::Taylor,
            "lq" => Method::Lq,
            "truncated" => Method::Truncated,
            _ => return syntax(mloc, format!("unknown resolution method `{m}`")),
        };
        let ideal = self.ideal_ref()?;
        let (mut degree, mut cancel) = (None, false);
        while let Tok::Ident(opt) = self.peek().clone() {
            let oloc = self.loc();
            self.next();
            match opt.as_str() {
                "d" if method == Method::Truncated => {
                    self.expect('=')?;
                    degree = Some(self.small_int("a degree")?);
                }
                "cancel" if method == Method::Truncated => cancel = true,
                _ => return syntax(oloc, format!("unknown option `{opt}` for `resolve {m}`")),
            }
        }
        Ok(CommandKind::Resolve { method, ideal, degree, cancel })
    }

    fn verify(&mut self) -> PResult<CommandKind> {
        let (target, tloc) = self.ident("`last`")?;
        if target != "last" {
            return syntax(tloc, format!("`verify` applies to `last`, found `{target}`"));
        }
        let (mode, mloc) = self.ident("`d2`, `exactness` or `band`")?;
        let bound = |p: &mut Self| -> PResult<Option<u32>> {
            if let Tok::Int(_) = p.peek() {
                Ok(Some(p.small_int("a degree bound")?))
            } else {
                Ok(None)
            }
        };
        let spec = match mode.as_str() {
            "d2" => VerifySpec::D2,
            "exactness" => VerifySpec::Exactness(bound(self)?),
            "band" => VerifySpec::Band(bound(self)?),
            _ => return syntax(mloc, format!("unknown verification mode `{mode}`")),
        };
        Ok(CommandKind::Verify(spec))
    }
}

fn token_text(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => s.clone(),
        Tok::Int(k) => k.to_string(),
        Tok::Punct(c) => c.to_string(),
        Tok::Eof => String::new(),
    }
}

/// Space-separated words, with no space around `=`.
fn join_tokens(parts: &[String]) -> String {
    let mut out = String::new();
    for (k, p) in parts.iter().enumerate() {
        let glue = k > 0 && p != "=" && parts[k - 1] != "=";
        if glue {
            out.push(' ');
        }
        out.push_str(p);
    }
    out
}

/// Parse a session script.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    Parser::new(text, None)?.session()
}

/// Parse a single monomial over `vars`, in either `a^2*b` or `a2b` form.
pub fn parse_monomial(vars: &Variables, text: &str) -> Result<Monomial, ParseError> {
    let mut p = Parser::new(text, Some(vars.clone()))?;
    let m = p.monomial()?;
    p.finish()?;
    Ok(m)
}

/// Parse a generator list `(m1, m2, ...)` over `vars`.
pub fn parse_generators(vars: &Variables, text: &str) -> Result<Vec<Monomial>, ParseError> {
    let mut p = Parser::new(text, Some(vars.clone()))?;
    let gens = p.generator_list()?;
    p.finish()?;
    Ok(gens)
}

/// Parse a poset body `{ a < b; b < c }` over `vars`.
pub fn parse_poset(vars: &Variables, text: &str) -> Result<Poset, ParseError> {
    let mut p = Parser::new(&format!("P {text}"), Some(vars.clone()))?;
    p.poset_decl()?;
    p.finish()?;
    Ok(p.posets.remove("P").expect("just declared"))
}
