//! A small batch language: declare variables, posets and ideals, then run
//! commands against them.
//!
//! ```text
//! vars a b c d e f;
//! poset P { a < d < f; c < f; b < e; c < e }
//! ideal I = Q[P](d*e*f);
//! cmd primary I;
//! ```
//!
//! Statements:
//!
//! - `vars x y z;` declares the ring variables, in index order. It must come
//!   first and appear once.
//! - `poset P { a < b < c; a < d }` lists relations (chains allowed). The
//!   relations generate the order by transitive closure and must respect the
//!   variable order. `poset C = chain;`, `= antichain;` and `= y;` give the
//!   builtin posets on all variables.
//! - `ideal I = <expr>;` where an expression is a generator list `(a^2, a*b)`,
//!   a closure `Q[P](d*e*f)` (or `Q(...)` for the last declared poset), the
//!   name of an earlier ideal, or a combination with `+` (sum), `*`
//!   (product), `&` (intersection) and `:` (colon), evaluated left to right.
//!   Monomials are written `a^2*b` or `a2b`; `1` is the unit monomial.
//! - `cmd <command>;` runs a command. `#` starts a comment.
//!
//! Commands:
//!
//! | command | result |
//! |---|---|
//! | `close I` | minimal generators of `I` |
//! | `isqborel I [P]` | whether `I` is Borel for `P` |
//! | `maxposet I` | the maximal stabilizing poset |
//! | `qgens I [P]` | minimal Q-generators |
//! | `factor I` | prime factorization of a principal `Q(m)` |
//! | `primary I` | irredundant primary decomposition of `Q(m)` |
//! | `assprimes I` | associated primes of `Q(m)` |
//! | `irreducible I` | irreducible decomposition |
//! | `colon I` / `colon I J` | colon representation of `Q(m)` / the ideal `I : J` |
//! | `pdim I`, `codim I`, `cm I` | invariants of `S/Q(m)` |
//! | `resolve ek\|y\|taylor\|lq\|truncated I [d=N] [cancel]` | a resolution, kept as `last` |
//! | `betti I` / `betti last` | Betti table from Koszul homology / of `last` |
//! | `verify last d2\|exactness [N]\|band [N]` | certificate for `last` |
//! | `show last` | the full complex |
//!
//! Where a poset is needed and none is attached to the ideal (plain
//! generator lists and mixed combinations), the maximal stabilizing poset
//! is used.

mod exec;
mod parse;
mod render;

use std::collections::BTreeMap;

use crate::monomial::{Monomial, Variables};
use crate::poset::Poset;

pub use exec::{execute, Config, ExecError, Execution, LastResolution, Output, OutputValue};
pub use parse::{parse_generators, parse_monomial, parse_poset, parse_session, Location, ParseError, ParseErrorKind};
pub use render::{render, render_error, render_parse_error, Format};

/// A parsed script.
#[derive(Clone, Debug)]
pub struct Session {
    pub vars: Variables,
    pub posets: BTreeMap<String, Poset>,
    /// Ideal declarations and commands, in source order.
    pub statements: Vec<Statement>,
}

impl Session {
    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Command(c) => Some(c),
            Statement::Ideal { .. } => None,
        })
    }

    pub fn ideal_names(&self) -> impl Iterator<Item = &str> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Ideal { name, .. } => Some(name.as_str()),
            Statement::Command(_) => None,
        })
    }
}

#[derive(Clone, Debug)]
pub enum Statement {
    Ideal { name: String, expr: IdealExpr, location: Location },
    Command(Command),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdealExpr {
    Plain(Vec<Monomial>),
    Closure { poset: String, gens: Vec<Monomial> },
    Named(String),
    Op(IdealOp, Box<IdealExpr>, Box<IdealExpr>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
    Quotient,
}

#[derive(Clone, Debug)]
pub struct Command {
    /// Position among the commands of the session, from 0.
    pub index: usize,
    pub kind: CommandKind,
    /// The command as written, tokens separated by single spaces.
    pub text: String,
    pub location: Location,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CommandKind {
    Close(String),
    IsQBorel(String, Option<String>),
    MaxPoset(String),
    QGens(String, Option<String>),
    Factor(String),
    Primary(String),
    AssPrimes(String),
    Irreducible(String),
    Colon(String, Option<String>),
    Pdim(String),
    Codim(String),
    Cm(String),
    Resolve { method: Method, ideal: String, degree: Option<u32>, cancel: bool },
    Betti(Target),
    Verify(VerifySpec),
    Show,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Ek,
    Y,
    Taylor,
    Lq,
    Truncated,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Ek => "ek",
            Method::Y => "y",
            Method::Taylor => "taylor",
            Method::Lq => "lq",
            Method::Truncated => "truncated",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Target {
    Last,
    Ideal(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifySpec {
    D2,
    Exactness(Option<u32>),
    Band(Option<u32>),
}

#[cfg(test)]
mod tests;
