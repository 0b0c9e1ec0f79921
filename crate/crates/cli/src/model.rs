//! Name resolution: turns a parsed file into rings, ideals, filtrations and
//! typed tasks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use filtralab_core::{AmbientRing, AxisKind, ExponentVector, Filtration, MonomialIdeal, RrConfig};

use crate::instance::{ArgValue, Ident, InstanceFile, Monomial, ParseError, Pos, Statement, TaskSpec, Term, Value, VarSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Northcott,
    HunekeOoishi,
    Sally,
    Nonneg,
    Cohomology,
    ItohE2,
    Mgho,
    E2ZeroMulti,
    ItohE3,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Northcott,
        Theorem::HunekeOoishi,
        Theorem::Sally,
        Theorem::Nonneg,
        Theorem::Cohomology,
        Theorem::ItohE2,
        Theorem::Mgho,
        Theorem::E2ZeroMulti,
        Theorem::ItohE3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::Northcott => "northcott",
            Theorem::HunekeOoishi => "huneke-ooishi",
            Theorem::Sally => "sally",
            Theorem::Nonneg => "nonneg",
            Theorem::Cohomology => "cohomology",
            Theorem::ItohE2 => "itoh-e2",
            Theorem::Mgho => "mgho",
            Theorem::E2ZeroMulti => "e2zero-multi",
            Theorem::ItohE3 => "itoh-e3",
        }
    }

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Checkers stated for a single ideal rather than a filtration.
    pub fn wants_ideal(&self) -> bool {
        matches!(self, Theorem::ItohE2 | Theorem::ItohE3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TaskKind {
    Coeffs,
    Mixed,
    Function,
    Defect,
    Postulation,
    Rr,
    IntClosure,
    Cohomology,
    Torsion,
    Reduction,
    Verify(Theorem),
}

impl TaskKind {
    pub const SIMPLE: [TaskKind; 10] = [
        TaskKind::Coeffs,
        TaskKind::Mixed,
        TaskKind::Function,
        TaskKind::Defect,
        TaskKind::Postulation,
        TaskKind::Rr,
        TaskKind::IntClosure,
        TaskKind::Cohomology,
        TaskKind::Torsion,
        TaskKind::Reduction,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TaskKind::Coeffs => "coeffs",
            TaskKind::Mixed => "mixed",
            TaskKind::Function => "function",
            TaskKind::Defect => "defect",
            TaskKind::Postulation => "postulation",
            TaskKind::Rr => "rr",
            TaskKind::IntClosure => "intclosure",
            TaskKind::Cohomology => "cohomology",
            TaskKind::Torsion => "torsion",
            TaskKind::Reduction => "reduction",
            TaskKind::Verify(_) => "verify",
        }
    }

    /// Tasks whose target is an ideal; the rest take a filtration.
    pub fn wants_ideal(&self) -> bool {
        match self {
            TaskKind::IntClosure => true,
            TaskKind::Verify(t) => t.wants_ideal(),
            _ => false,
        }
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaskKind::Verify(t) => write!(f, "verify {}", t.name()),
            k => f.write_str(k.name()),
        }
    }
}

/// Why a declared filtration could not be built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildError {
    pub message: String,
    /// The construction is outside what the library handles, as opposed to
    /// bad input such as a base ideal that is not m-primary.
    pub unsupported: bool,
}

impl From<filtralab_core::Error> for BuildError {
    fn from(e: filtralab_core::Error) -> Self {
        let unsupported = matches!(e, filtralab_core::Error::Unsupported(_));
        BuildError { message: e.to_string(), unsupported }
    }
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// What a task name refers to.
#[derive(Clone, Debug)]
pub enum Target {
    Ideal(MonomialIdeal),
    /// Filtrations whose construction failed keep the error for task time.
    Filtration(Result<Arc<Filtration>, BuildError>),
}

#[derive(Clone, Debug)]
pub struct Task {
    pub kind: TaskKind,
    pub target: String,
    /// Restricts `reduction` to one candidate.
    pub candidate: Option<String>,
    pub n: Option<i64>,
    pub window: Option<(i64, i64)>,
    pub axis: Option<usize>,
    pub expect: Option<Value>,
    /// Names of the candidates declared before the task.
    pub candidates: Vec<String>,
}

impl Task {
    pub fn new(kind: TaskKind, target: impl Into<String>) -> Task {
        Task {
            kind,
            target: target.into(),
            candidate: None,
            n: None,
            window: None,
            axis: None,
            expect: None,
            candidates: Vec::new(),
        }
    }

    /// The task in instance syntax, without the expected value.
    pub fn text(&self) -> String {
        let mut parts = vec![self.kind.to_string(), self.target.clone()];
        if let Some(c) = &self.candidate {
            parts.push(c.clone());
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some((a, b)) = self.window {
            parts.push(format!("window={a}..{b}"));
        }
        if let Some(a) = self.axis {
            parts.push(format!("axis={}", a + 1));
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, Default)]
pub struct Model {
    pub ring: Option<Arc<AmbientRing>>,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub candidates: BTreeMap<String, MonomialIdeal>,
    pub filtrations: BTreeMap<String, Result<Arc<Filtration>, BuildError>>,
    /// Declaration order of ideals and filtrations.
    pub order: Vec<String>,
    pub candidate_order: Vec<String>,
    pub tasks: Vec<Task>,
}

enum Decl {
    Ideal,
    Candidate,
    Filtration,
}

fn expand_range(a: &Ident, b: &Ident) -> Result<Vec<String>, ParseError> {
    let split = |id: &Ident| -> Result<(String, u32), ParseError> {
        let cut = id.name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (stem, digits) = id.name.split_at(cut);
        let k = digits
            .parse()
            .map_err(|_| ParseError::new(id.pos, format!("`{}` has no numeric suffix for a range", id.name)))?;
        Ok((stem.to_string(), k))
    };
    let (sa, ka) = split(a)?;
    let (sb, kb) = split(b)?;
    if sa != sb || ka > kb {
        return Err(ParseError::new(b.pos, format!("bad variable range `{}..{}`", a.name, b.name)));
    }
    Ok((ka..=kb).map(|k| format!("{sa}{k}")).collect())
}

fn exponents(ring: &AmbientRing, m: &Monomial) -> Result<ExponentVector, ParseError> {
    let mut e = vec![0u32; ring.num_vars()];
    for f in &m.factors {
        let Some(i) = ring.variables().iter().position(|v| *v == f.var.name) else {
            return Err(ParseError::new(f.var.pos, format!("undeclared identifier `{}`", f.var.name)));
        };
        e[i] = e[i]
            .checked_add(f.exponent.unwrap_or(1))
            .ok_or_else(|| ParseError::new(f.var.pos, "exponent overflow"))?;
    }
    Ok(ExponentVector::new(e))
}

impl Model {
    fn declared(&self, name: &str) -> Option<Decl> {
        if self.ideals.contains_key(name) {
            Some(Decl::Ideal)
        } else if self.candidates.contains_key(name) {
            Some(Decl::Candidate)
        } else if self.filtrations.contains_key(name) {
            Some(Decl::Filtration)
        } else {
            None
        }
    }

    fn ring_at(&self, pos: Pos) -> Result<&Arc<AmbientRing>, ParseError> {
        self.ring.as_ref().ok_or_else(|| ParseError::new(pos, "no ring declared before this statement"))
    }

    fn fresh(&self, name: &Ident) -> Result<(), ParseError> {
        if self.declared(&name.name).is_some() {
            return Err(ParseError::new(name.pos, format!("`{}` is already declared", name.name)));
        }
        Ok(())
    }

    fn ideal_of(&self, gens: &[Monomial], pos: Pos) -> Result<MonomialIdeal, ParseError> {
        let ring = self.ring_at(pos)?;
        let vs = gens.iter().map(|m| exponents(ring, m)).collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::from_generators(ring, vs).map_err(|e| ParseError::new(pos, e.to_string()))
    }

    fn lookup_ideal(&self, id: &Ident) -> Result<MonomialIdeal, ParseError> {
        match self.declared(&id.name) {
            Some(Decl::Ideal) => Ok(self.ideals[&id.name].clone()),
            Some(Decl::Candidate) => Ok(self.candidates[&id.name].clone()),
            Some(Decl::Filtration) => Err(ParseError::new(id.pos, format!("`{}` is a filtration, expected an ideal", id.name))),
            None => Err(ParseError::new(id.pos, format!("undeclared identifier `{}`", id.name))),
        }
    }

    fn term_ideal(&self, t: &Term) -> Result<MonomialIdeal, ParseError> {
        match t {
            Term::Name(id) => self.lookup_ideal(id),
            _ => Err(ParseError::new(t.pos(), "expected an ideal name")),
        }
    }

    fn axis_kind(&self, t: &Term) -> Result<(MonomialIdeal, AxisKind), ParseError> {
        match t {
            Term::Call(h, args) if args.len() == 1 && (h.name == "adic" || h.name == "normal") => {
                let kind = if h.name == "adic" { AxisKind::Adic } else { AxisKind::Normal };
                Ok((self.term_ideal(&args[0])?, kind))
            }
            Term::Name(_) => Ok((self.term_ideal(t)?, AxisKind::Adic)),
            _ => Err(ParseError::new(t.pos(), "expected `adic(I)` or `normal(I)`")),
        }
    }

    /// Syntax errors and unknown names fail here; mathematical errors such
    /// as a base ideal that is not m-primary become the inner `Err`.
    fn filtration(&self, t: &Term, rr: RrConfig) -> Result<Result<Arc<Filtration>, BuildError>, ParseError> {
        let lift = |r: filtralab_core::Result<Arc<Filtration>>| r.map_err(BuildError::from);
        match t {
            Term::Name(id) => match self.declared(&id.name) {
                Some(Decl::Filtration) => Ok(self.filtrations[&id.name].clone()),
                Some(_) => Ok(lift(Filtration::adic(&self.lookup_ideal(id)?))),
                None => Err(ParseError::new(id.pos, format!("undeclared identifier `{}`", id.name))),
            },
            Term::Int(_, p) => Err(ParseError::new(*p, "expected a filtration")),
            Term::Call(h, args) => match h.name.as_str() {
                "adic" | "normal" => {
                    let ideals = args.iter().map(|a| self.term_ideal(a)).collect::<Result<Vec<_>, _>>()?;
                    Ok(match (h.name.as_str(), ideals.len()) {
                        ("adic", 1) => lift(Filtration::adic(&ideals[0])),
                        ("normal", 1) => lift(Filtration::normal(&ideals[0])),
                        ("adic", _) => lift(Filtration::product(ideals.into_iter().map(|i| (i, AxisKind::Adic)).collect())),
                        _ => lift(Filtration::normal_product(ideals)),
                    })
                }
                "product" => {
                    let axes = args.iter().map(|a| self.axis_kind(a)).collect::<Result<Vec<_>, _>>()?;
                    Ok(lift(Filtration::product(axes)))
                }
                "rr" => {
                    if args.len() != 1 {
                        return Err(ParseError::new(h.pos, "`rr` takes one filtration"));
                    }
                    Ok(self.filtration(&args[0], rr)?.map(|f| Filtration::ratliff_rush(&f, rr)))
                }
                "axis" => match args.as_slice() {
                    [inner, Term::Int(k, p)] => {
                        if *k == 0 {
                            return Err(ParseError::new(*p, "axes are numbered from 1"));
                        }
                        let inner = self.filtration(inner, rr)?;
                        Ok(inner.and_then(|f| lift(Filtration::axis(&f, *k as usize - 1))))
                    }
                    _ => Err(ParseError::new(h.pos, "`axis` takes a filtration and an axis number")),
                },
                other => Err(ParseError::new(
                    h.pos,
                    format!("unknown filtration `{other}`; expected adic, normal, product, rr or axis"),
                )),
            },
        }
    }

    fn task(&self, spec: &TaskSpec, expect: Option<Value>) -> Result<Task, ParseError> {
        let mut words = spec.words.iter();
        let head = words.next().expect("parser guarantees a word");
        let kind = if head.name == "verify" {
            let Some(t) = words.next() else {
                return Err(ParseError::new(head.pos, "`verify` needs a theorem name"));
            };
            match Theorem::parse(&t.name) {
                Some(th) => TaskKind::Verify(th),
                None => {
                    let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
                    return Err(ParseError::new(
                        t.pos,
                        format!("unknown theorem `{}`; expected one of {}", t.name, names.join(", ")),
                    ));
                }
            }
        } else {
            match TaskKind::SIMPLE.into_iter().find(|k| k.name() == head.name) {
                Some(k) => k,
                None => return Err(ParseError::new(head.pos, format!("unknown task `{}`", head.name))),
            }
        };
        let Some(target) = words.next() else {
            return Err(ParseError::new(head.pos, "task needs a target"));
        };
        match self.declared(&target.name) {
            None => return Err(ParseError::new(target.pos, format!("undeclared identifier `{}`", target.name))),
            Some(Decl::Candidate) => {
                return Err(ParseError::new(target.pos, format!("`{}` is a reduction candidate", target.name)))
            }
            Some(Decl::Filtration) if kind.wants_ideal() => {
                return Err(ParseError::new(target.pos, format!("`{}` is a filtration, expected an ideal", target.name)))
            }
            _ => {}
        }
        let mut task = Task::new(kind, target.name.clone());
        task.expect = expect;
        task.candidates = self.candidate_order.clone();
        if let Some(c) = words.next() {
            if kind != TaskKind::Reduction {
                return Err(ParseError::new(c.pos, format!("unexpected word `{}`", c.name)));
            }
            self.lookup_ideal(c)?;
            task.candidate = Some(c.name.clone());
        }
        if let Some(extra) = words.next() {
            return Err(ParseError::new(extra.pos, format!("unexpected word `{}`", extra.name)));
        }
        for arg in &spec.args {
            match (arg.key.name.as_str(), &arg.value) {
                ("n", ArgValue::Int(n)) if *n >= 0 => task.n = Some(*n),
                ("window", ArgValue::Range(a, b)) if a <= b => task.window = Some((*a, *b)),
                ("axis", ArgValue::Int(a)) if *a >= 1 => task.axis = Some(*a as usize - 1),
                (k, v) => return Err(ParseError::new(arg.key.pos, format!("invalid argument `{k}={v}`"))),
            }
        }
        Ok(task)
    }

    pub fn target(&self, name: &str) -> Option<Target> {
        if let Some(i) = self.ideals.get(name) {
            return Some(Target::Ideal(i.clone()));
        }
        self.filtrations.get(name).map(|f| Target::Filtration(f.clone()))
    }

    /// Ideal, candidate or filtration of that name.
    pub fn ideal_or_candidate(&self, name: &str) -> Option<&MonomialIdeal> {
        self.ideals.get(name).or_else(|| self.candidates.get(name))
    }
}

/// Resolves every name in file order. Each name must be declared before use.
pub fn resolve(file: &InstanceFile, rr: RrConfig) -> Result<Model, ParseError> {
    let mut m = Model::default();
    for item in &file.items {
        match &item.statement {
            Statement::Comment { .. } => {}
            Statement::Ring { name, vars, quotient, cm } => {
                if m.ring.is_some() {
                    return Err(ParseError::new(name.pos, "only one ring per instance"));
                }
                let mut names = Vec::new();
                for v in vars {
                    match v {
                        VarSpec::Single(id) => names.push(id.name.clone()),
                        VarSpec::Range(a, b) => names.extend(expand_range(a, b)?),
                    }
                }
                for (k, n) in names.iter().enumerate() {
                    if names[..k].contains(n) {
                        return Err(ParseError::new(item.pos, format!("variable `{n}` declared twice")));
                    }
                }
                let poly = AmbientRing::polynomial(names.clone());
                let ring = match quotient {
                    None => poly,
                    Some(q) => {
                        let gens = q.iter().map(|g| exponents(&poly, g)).collect::<Result<Vec<_>, _>>()?;
                        AmbientRing::with_quotient(names, gens, *cm).map_err(|e| ParseError::new(item.pos, e.to_string()))?
                    }
                };
                if *cm && quotient.is_none() {
                    return Err(ParseError::new(item.pos, "`cm` is only meaningful for a quotient ring"));
                }
                m.ring = Some(ring);
            }
            Statement::Ideal { name, gens } => {
                m.fresh(name)?;
                let i = m.ideal_of(gens, item.pos)?;
                m.ideals.insert(name.name.clone(), i);
                m.order.push(name.name.clone());
            }
            Statement::Candidate { name, gens } => {
                m.fresh(name)?;
                let i = m.ideal_of(gens, item.pos)?;
                m.candidates.insert(name.name.clone(), i);
                m.candidate_order.push(name.name.clone());
            }
            Statement::Filtration { name, term } => {
                m.fresh(name)?;
                m.ring_at(item.pos)?;
                let f = m.filtration(term, rr)?;
                m.filtrations.insert(name.name.clone(), f);
                m.order.push(name.name.clone());
            }
            Statement::Task(spec) => {
                let t = m.task(spec, None)?;
                m.tasks.push(t);
            }
            Statement::Expect { spec, value } => {
                let t = m.task(spec, Some(value.clone()))?;
                m.tasks.push(t);
            }
        }
    }
    Ok(m)
}
