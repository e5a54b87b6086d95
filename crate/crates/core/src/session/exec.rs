//! Evaluation of ideals and dispatch of commands.

use std::collections::HashMap;

use super::{Command, CommandKind, IdealExpr, IdealOp, Location, Method, Session, Statement, Target, VerifySpec};
use crate::borel::{
    is_q_borel, max_stabilizing_poset, min_q_generators, principal_factorization, q_closure, PrimeFactorization,
    QBorelIdeal, DEFAULT_NODE_LIMIT,
};
use crate::decomp::{
    associated_primes, colon_representation, irreducible_decomposition, principal_primary_decomposition,
    ColonRepresentation, IrreducibleComponent, PrimePowerIntersection,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Variables};
use crate::poset::Poset;
use crate::prime::MonomialPrime;
use crate::resolution::{
    codim_principal, ek_resolution, is_cohen_macaulay, koszul_betti, lq_resolution, pdim_principal,
    taylor_resolution, truncated_resolution, verify_complex, y_resolution, BettiTable, Certificate, CmCase,
    FreeComplex, GeneratorOrder, PowerMismatch, TruncatedOptions, VerifyMode, YConstruction,
};

/// Limits shared by every command of a run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Config {
    /// Default degree for `resolve truncated`, `verify` and `betti`.
    pub degree_bound: Option<u32>,
    /// Node limit for closures and for the truncated recursion.
    pub node_limit: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum OutputValue {
    Ideal(MonomialIdeal),
    Bool(bool),
    Poset(Poset),
    QGenerators(Vec<Monomial>),
    Factorization(PrimeFactorization),
    Primary(PrimePowerIntersection),
    Primes(Vec<MonomialPrime>),
    Irreducible(Vec<IrreducibleComponent>),
    Colon(ColonRepresentation),
    Number { name: &'static str, value: usize },
    Cm(CmCase),
    Resolution { method: Method, construction: String, betti: BettiTable, minimal: bool },
    Betti(BettiTable),
    Certificate(Certificate),
    Complex(FreeComplex),
}

#[derive(Clone, Debug)]
pub struct Output {
    pub index: usize,
    pub command: String,
    pub value: OutputValue,
}

/// A failed command, with its position in the session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExecError {
    pub index: usize,
    pub command: String,
    pub location: Location,
    pub error: Error,
}

impl std::fmt::Display for ExecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "command {} (`{}`, {}): {}", self.index, self.command, self.location, self.error)
    }
}

impl std::error::Error for ExecError {}

/// The most recent resolution, the target of `verify last` and `show last`.
#[derive(Clone, Debug)]
pub struct LastResolution {
    pub complex: FreeComplex,
    pub ideal: MonomialIdeal,
    /// The degree `d` of a truncated complex.
    pub band: Option<u32>,
}

/// Outputs of the commands that ran. Execution stops at the first failure,
/// which is recorded in `error`.
#[derive(Clone, Debug)]
pub struct Execution {
    pub vars: Variables,
    pub outputs: Vec<Output>,
    pub error: Option<ExecError>,
    pub last: Option<LastResolution>,
}

#[derive(Clone, Debug)]
struct IdealValue {
    ideal: MonomialIdeal,
    q: Option<QBorelIdeal>,
}

struct Executor<'a> {
    session: &'a Session,
    config: Config,
    ideals: HashMap<&'a str, IdealValue>,
    last: Option<LastResolution>,
}

/// Run every statement of `session` in order.
pub fn execute(session: &Session, config: &Config) -> Execution {
    let mut ex = Executor { session, config: *config, ideals: HashMap::new(), last: None };
    let mut outputs = Vec::new();
    let mut error = None;
    for st in &session.statements {
        match st {
            Statement::Ideal { name, expr, location } => {
                match ex.eval(expr) {
                    Ok(v) => {
                        ex.ideals.insert(name, v);
                    }
                    Err(e) => {
                        // A failed declaration is reported under the next command's index.
                        let index = outputs.len();
                        error = Some(ExecError { index, command: format!("ideal {name}"), location: *location, error: e });
                        break;
                    }
                }
            }
            Statement::Command(cmd) => match ex.run(cmd) {
                Ok(value) => outputs.push(Output { index: cmd.index, command: cmd.text.clone(), value }),
                Err(e) => {
                    error = Some(ExecError { index: cmd.index, command: cmd.text.clone(), location: cmd.location, error: e });
                    break;
                }
            },
        }
    }
    Execution { vars: session.vars.clone(), outputs, error, last: ex.last }
}

fn not_principal(cmd: &str) -> Error {
    Error::HypothesesViolated(format!("`{cmd}` needs a principal Q-Borel ideal Q(m)"))
}

impl<'a> Executor<'a> {
    fn nvars(&self) -> usize {
        self.session.vars.len()
    }

    fn node_limit(&self) -> usize {
        self.config.node_limit.unwrap_or(DEFAULT_NODE_LIMIT)
    }

    fn eval(&self, expr: &IdealExpr) -> Result<IdealValue> {
        let n = self.nvars();
        Ok(match expr {
            IdealExpr::Plain(gens) => IdealValue { ideal: MonomialIdeal::new(n, gens.iter().cloned()), q: None },
            IdealExpr::Closure { poset, gens } => {
                let q = q_closure(&self.session.posets[poset], gens, self.node_limit())?;
                IdealValue { ideal: q.expansion().clone(), q: Some(q) }
            }
            IdealExpr::Named(name) => self.ideals[name.as_str()].clone(),
            IdealExpr::Op(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                let ideal = match op {
                    IdealOp::Sum => a.ideal.sum(&b.ideal),
                    IdealOp::Product => a.ideal.product(&b.ideal),
                    IdealOp::Intersect => a.ideal.intersect(&b.ideal),
                    IdealOp::Quotient => a.ideal.quotient(&b.ideal),
                };
                let q = match (&a.q, &b.q) {
                    (Some(x), Some(y)) if x.poset() == y.poset() => QBorelIdeal::from_ideal(x.poset(), ideal.clone()).ok(),
                    _ => None,
                };
                IdealValue { ideal, q }
            }
        })
    }

    fn value(&self, name: &str) -> &IdealValue {
        &self.ideals[name]
    }

    fn poset_of(&self, v: &IdealValue, explicit: Option<&String>) -> Poset {
        match (explicit, &v.q) {
            (Some(p), _) => self.session.posets[p].clone(),
            (None, Some(q)) => q.poset().clone(),
            (None, None) => max_stabilizing_poset(&v.ideal),
        }
    }

    fn q_borel(&self, v: &IdealValue) -> Result<QBorelIdeal> {
        match &v.q {
            Some(q) => Ok(q.clone()),
            None => QBorelIdeal::from_ideal(&max_stabilizing_poset(&v.ideal), v.ideal.clone()),
        }
    }

    fn principal(&self, name: &str, cmd: &str) -> Result<(Poset, Monomial)> {
        let q = self.q_borel(self.value(name))?;
        match q.q_generators() {
            [m] => Ok((q.poset().clone(), m.clone())),
            _ => Err(not_principal(cmd)),
        }
    }

    fn run(&mut self, cmd: &Command) -> Result<OutputValue> {
        Ok(match &cmd.kind {
            CommandKind::Close(i) => OutputValue::Ideal(self.value(i).ideal.clone()),
            CommandKind::IsQBorel(i, p) => {
                let v = self.value(i);
                OutputValue::Bool(is_q_borel(&self.poset_of(v, p.as_ref()), &v.ideal))
            }
            CommandKind::MaxPoset(i) => OutputValue::Poset(max_stabilizing_poset(&self.value(i).ideal)),
            CommandKind::QGens(i, p) => {
                let v = self.value(i);
                OutputValue::QGenerators(min_q_generators(&self.poset_of(v, p.as_ref()), &v.ideal)?)
            }
            CommandKind::Factor(i) => {
                let (p, m) = self.principal(i, "factor")?;
                OutputValue::Factorization(principal_factorization(&p, &m)?)
            }
            CommandKind::Primary(i) => {
                let (p, m) = self.principal(i, "primary")?;
                OutputValue::Primary(principal_primary_decomposition(&p, &m)?)
            }
            CommandKind::AssPrimes(i) => {
                let (p, m) = self.principal(i, "assprimes")?;
                OutputValue::Primes(associated_primes(&p, &m)?)
            }
            CommandKind::Irreducible(i) => {
                OutputValue::Irreducible(irreducible_decomposition(&self.q_borel(self.value(i))?)?)
            }
            CommandKind::Colon(i, Some(j)) => OutputValue::Ideal(self.value(i).ideal.quotient(&self.value(j).ideal)),
            CommandKind::Colon(i, None) => {
                let (p, m) = self.principal(i, "colon")?;
                let decomp = principal_primary_decomposition(&p, &m)?;
                let family = decomp.primes().sum_closure();
                OutputValue::Colon(colon_representation(&decomp, &family)?)
            }
            CommandKind::Pdim(i) => {
                let (p, m) = self.principal(i, "pdim")?;
                OutputValue::Number { name: "pdim", value: pdim_principal(&p, &m)? }
            }
            CommandKind::Codim(i) => {
                let (p, m) = self.principal(i, "codim")?;
                OutputValue::Number { name: "codim", value: codim_principal(&p, &m)? }
            }
            CommandKind::Cm(i) => {
                let (p, m) = self.principal(i, "cm")?;
                OutputValue::Cm(is_cohen_macaulay(&p, &m)?)
            }
            CommandKind::Resolve { method, ideal, degree, cancel } => self.resolve(*method, ideal, *degree, *cancel)?,
            CommandKind::Betti(Target::Last) => OutputValue::Betti(self.last()?.complex.betti()),
            CommandKind::Betti(Target::Ideal(i)) => {
                let ideal = &self.value(i).ideal;
                let bound = self.config.degree_bound.unwrap_or_else(|| ideal.lcm().degree());
                OutputValue::Betti(koszul_betti(ideal, bound).graded())
            }
            CommandKind::Show => OutputValue::Complex(self.last()?.complex.clone()),
            CommandKind::Verify(spec) => {
                let last = self.last()?;
                let mode = match *spec {
                    VerifySpec::D2 => VerifyMode::D2,
                    VerifySpec::Exactness(b) => VerifyMode::Exactness {
                        bound: b.or(self.config.degree_bound).unwrap_or_else(|| last.ideal.lcm().degree() + 1),
                    },
                    VerifySpec::Band(b) => VerifyMode::Band {
                        band: b.or(last.band).or(self.config.degree_bound).ok_or_else(|| {
                            Error::HypothesesViolated("`verify last band` needs a degree".into())
                        })?,
                    },
                };
                let cert = verify_complex(&last.complex, &last.ideal, mode)
                    .map_err(|f| Error::CertificationFailed(f.to_string()))?;
                OutputValue::Certificate(cert)
            }
        })
    }

    fn last(&self) -> Result<&LastResolution> {
        self.last.as_ref().ok_or_else(|| Error::HypothesesViolated("no resolution has been computed yet".into()))
    }

    fn resolve(&mut self, method: Method, name: &str, degree: Option<u32>, cancel: bool) -> Result<OutputValue> {
        let v = self.value(name).clone();
        let ideal = &v.ideal;
        let mut band = None;
        let (complex, construction) = match method {
            Method::Ek => (ek_resolution(ideal)?, "Eliahou-Kervaire".to_string()),
            Method::Taylor => (taylor_resolution(ideal)?, "Taylor".to_string()),
            Method::Y => {
                let n = self.nvars();
                if n < 3 {
                    return Err(Error::NotYBorel);
                }
                let (cx, how) = y_resolution(n - 2, ideal)?;
                let how = match how {
                    YConstruction::Formula(PowerMismatch::Absorb) => "explicit differential (absorb)".to_string(),
                    YConstruction::Formula(PowerMismatch::Drop) => "explicit differential (drop)".to_string(),
                    YConstruction::Cone => "mapping cone with cancellation".to_string(),
                };
                (cx, how)
            }
            Method::Lq => {
                let cx = lq_resolution(ideal, GeneratorOrder::DescendingRevlex)
                    .or_else(|_| lq_resolution(ideal, GeneratorOrder::AscendingRevlex))?;
                (cx, "iterated mapping cone over linear quotients".to_string())
            }
            Method::Truncated => {
                let q = self.q_borel(&v)?;
                let d = degree
                    .or(self.config.degree_bound)
                    .or_else(|| q.q_generators().iter().map(Monomial::degree).max())
                    .ok_or(Error::ZeroIdeal)?;
                let mut opts = TruncatedOptions { cancel, ..Default::default() };
                if let Some(limit) = self.config.node_limit {
                    opts.node_limit = limit;
                }
                band = Some(d);
                let how = if cancel { format!("truncated at d={d}, cancelled") } else { format!("truncated at d={d}") };
                (truncated_resolution(q.poset(), &q, d, opts)?, how)
            }
        };
        let out = OutputValue::Resolution {
            method,
            construction,
            betti: complex.betti(),
            minimal: complex.is_minimal(),
        };
        self.last = Some(LastResolution { complex, ideal: ideal.clone(), band });
        Ok(out)
    }
}
