//! Command-line driver for the exobi engine.
//!
//! Every command builds a [`Report`]: an ordered list of tagged lines, each either a
//! check (pass/fail), a warning or plain information. The report renders as text or
//! as tab-separated `tag status value` lines.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use exobi::bialgebra::{self, tilde_alphabet};
use exobi::catalog;
use exobi::duality::{antipode_solve, dual_registry, dual_words, s03_prime, solve_left_product, DualAlgebra, SolveOutcome};
use exobi::freealg::{parse_relations, NcPoly};
use exobi::induced::{self, HatActions, InducedBasis};
use exobi::reps::{self, Decomposition, ModuleRep, RegularAlgebra, RepContext};
use exobi::rtt::{self, GeneratorChange, RMatrix};
use exobi::{Error, Field, Gauss, RatFunc};

pub const PRESENTATIONS: [&str; 4] = bialgebra::REGISTRY;
pub const DUALS: [&str; 3] = ["s03", "s14", "s14o"];

#[derive(Parser, Debug)]
#[command(name = "exobi", version, about = "Exact engine for the exotic bialgebras S03, S14, S14o and their duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Maximal degree for pairing and basis checks.
    #[arg(long, global = true, default_value_t = 8)]
    pub maxdeg: usize,
    /// Truncation of infinite-dimensional modules.
    #[arg(long = "L", global = true, default_value_t = 12)]
    pub truncation: usize,
    /// Tab-separated `tag status value` output.
    #[arg(long, global = true)]
    pub machine: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Extract RTT relations from an R-matrix.
    Relations {
        /// Registry key: S03, S14, S14q1, S14qm1, S21, R0.
        #[arg(value_parser = rtt::REGISTRY)]
        rmatrix_key: Option<String>,
        /// Specialize `q`.
        #[arg(long)]
        q: Option<String>,
        /// R-matrix file: 16 entries, row-major.
        #[arg(long)]
        rmatrix: Option<PathBuf>,
    },
    /// Run the verification suite of an algebra.
    Verify {
        #[arg(value_parser = all_algebras())]
        algebra: String,
    },
    /// Representation catalogs.
    Reps {
        #[arg(value_parser = DUALS)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Source::Lrr)]
        source: Source,
        /// Restrict π_R to one degree space.
        #[arg(long)]
        degree: Option<usize>,
        /// Weight module `X=λ`, e.g. `D=1`.
        #[arg(long)]
        weight: Option<String>,
        /// Induced module with parameters ν ρ.
        #[arg(long, num_args = 2, value_names = ["NU", "RHO"], allow_negative_numbers = true)]
        induced: Option<Vec<i64>>,
        /// Use the η basis for induced modules.
        #[arg(long)]
        eta: bool,
    },
    /// Gauge equivalences and Yang–Baxter checks.
    Gauge {
        /// Also check an R-matrix file.
        #[arg(long)]
        rmatrix: Option<PathBuf>,
    },
    /// Graded basis counts and confluence.
    Basis {
        #[arg(value_parser = PRESENTATIONS)]
        algebra: String,
        /// List the basis words of this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Evaluate a pairing `⟨U, f⟩`.
    Pair {
        #[arg(value_parser = DUALS)]
        algebra: String,
        /// Element of the dual, e.g. `B C`.
        u: String,
        /// Element of the bialgebra, e.g. `at bt`.
        f: String,
    },
}

fn all_algebras() -> Vec<&'static str> {
    DUALS.iter().chain(PRESENTATIONS.iter()).copied().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Left regular representation.
    Lrr,
    /// Right regular representation.
    Rrr,
    /// π_R on degree spaces.
    Pir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Warn,
    Info,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub tag: String,
    pub status: Status,
    pub text: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub lines: Vec<Line>,
}

impl Report {
    fn push(&mut self, tag: impl Into<String>, status: Status, text: impl Into<String>) {
        self.lines.push(Line { tag: tag.into(), status, text: text.into() });
    }
    pub fn info(&mut self, tag: impl Into<String>, text: impl Into<String>) {
        self.push(tag, Status::Info, text);
    }
    pub fn warn(&mut self, tag: impl Into<String>, text: impl Into<String>) {
        self.push(tag, Status::Warn, text);
    }
    pub fn check(&mut self, tag: impl Into<String>, ok: bool, text: impl Into<String>) {
        self.push(tag, if ok { Status::Pass } else { Status::Fail }, text);
    }
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status == Status::Fail).count()
    }
    pub fn render(&self, machine: bool) -> String {
        let mut s = String::new();
        for l in &self.lines {
            if machine {
                let st = match l.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Warn => "warn",
                    Status::Info => "info",
                };
                let _ = writeln!(s, "{}\t{}\t{}", l.tag, st, l.text.replace(['\n', '\t'], " "));
            } else {
                let prefix = match l.status {
                    Status::Pass => "PASS  ",
                    Status::Fail => "FAIL  ",
                    Status::Warn => "WARN  ",
                    Status::Info => "      ",
                };
                let _ = writeln!(s, "{prefix}{}", l.text);
            }
        }
        if machine {
            let _ = writeln!(s, "summary\t{}\t{} failed", if self.passed() { "pass" } else { "fail" }, self.failures());
        } else {
            let _ = writeln!(s, "{} check(s) failed", self.failures());
        }
        s
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> exobi::Result<Report> {
    match &cli.command {
        Command::Relations { rmatrix_key, q, rmatrix } => relations(rmatrix_key.as_deref(), q.as_deref(), rmatrix.as_ref()),
        Command::Verify { algebra } => verify(algebra, cli.maxdeg),
        Command::Reps { algebra, source, degree, weight, induced, eta } => {
            let opts = RepsOptions {
                source: *source,
                degree: *degree,
                weight: weight.clone(),
                induced: induced.as_ref().map(|v| (v[0], v[1])),
                eta: *eta,
                maxdeg: cli.maxdeg,
                truncation: cli.truncation,
            };
            reps_cmd(algebra, &opts)
        }
        Command::Gauge { rmatrix } => gauge(rmatrix.as_ref()),
        Command::Basis { algebra, degree } => basis(algebra, cli.maxdeg, *degree),
        Command::Pair { algebra, u, f } => pair(algebra, u, f),
    }
}

/// Parses a number of `Q(i)` such as `-1`, `1/2` or `2 - i`.
pub fn parse_scalar(s: &str) -> exobi::Result<Gauss> {
    let r = RatFunc::parse(s)?;
    if !r.num().is_constant() || !r.den().is_constant() {
        return Err(Error::Invalid(format!("`{s}` is not a constant")));
    }
    r.specialize(&Gauss::from_i64(0))
}

fn read_rmatrix(path: &PathBuf) -> exobi::Result<RMatrix<RatFunc>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    RMatrix::parse(&text)
}

fn relations(key: Option<&str>, q: Option<&str>, path: Option<&PathBuf>) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let (mut r, name) = match (key, path) {
        (Some(k), None) => (rtt::registry(k)?, k.to_string()),
        (None, Some(p)) => (read_rmatrix(p)?, p.display().to_string()),
        (Some(_), Some(_)) => return Err(Error::Invalid("give a registry key or --rmatrix, not both".into())),
        (None, None) => return Err(Error::Invalid("give a registry key or --rmatrix".into())),
    };
    let q0 = q.map(parse_scalar).transpose()?;
    if let Some(q0) = &q0 {
        r = r.specialize(q0)?;
        rep.info("source", format!("R-matrix {name} at q = {q0}"));
    } else {
        rep.info("source", format!("R-matrix {name}"));
    }
    rep.check("nonsingular", r.is_nonsingular(), format!("det R = {}", r.det()));
    rep.check("yang_baxter", rtt::yang_baxter_check(&r), "Yang–Baxter equation");
    let rels = rtt::rtt_relations(&r);
    let alphabet = rtt::matrix_alphabet();
    if rels.is_empty() {
        rep.info("relations.count", "no relations");
    } else {
        rep.info("relations.count", format!("{} relations", rels.len()));
        for (i, r) in rels.iter().enumerate() {
            rep.info(format!("relations.{i:02}"), format!("{} = 0", r.display(&alphabet)));
        }
    }
    let q_is = |v: i64| q0.as_ref().is_some_and(|x| *x == Gauss::from_i64(v));
    let reference: Option<(&str, &str, bool)> = match (key, q0.is_some()) {
        (Some("S03"), false) => Some(("S03", rtt::printed::S03, false)),
        (Some("S14"), false) => Some(("S14", rtt::printed::S14, false)),
        (Some("S14"), true) if q_is(1) => Some(("S14o", rtt::printed::S14_Q1, true)),
        (Some("S14q1"), false) => Some(("S14o", rtt::printed::S14_Q1, true)),
        _ => None,
    };
    if let Some((label, text, tilde)) = reference {
        let printed = rtt::printed_relations::<RatFunc>(text);
        let cmp = rtt::compare_ideals(&rels, &printed, 4, 4);
        rep.check("ideal.printed", cmp.equal(), format!("ideal equals the printed {label} set (degree ≤ 4), dims {:?}", cmp.dims));
        if tilde {
            let set = parse_relations::<RatFunc>(&tilde_alphabet(), bialgebra::relations::S14O)?;
            let changed = rtt::change_generators(&rels, &GeneratorChange::tilde());
            let cmp = rtt::compare_ideals(&changed, &set, 4, 4);
            rep.check("ideal.tilde", cmp.equal(), format!("ideal equals the tilde {label} set (degree ≤ 4)"));
        }
    }
    Ok(rep)
}

fn verify(algebra: &str, maxdeg: usize) -> exobi::Result<Report> {
    if PRESENTATIONS.contains(&algebra) {
        return verify_presentation(algebra, maxdeg);
    }
    let mut rep = Report::default();
    let dual = dual_registry::<Gauss>(algebra)?;
    let cat = catalog::catalog(algebra).ok_or_else(|| Error::Unknown(algebra.to_string()))?;
    if maxdeg == 0 {
        rep.warn("maxdeg", "maxdeg 0: only pairings with the unit are checked");
    }
    let mut counters = std::collections::BTreeMap::new();
    for line in catalog::run(&dual, cat, maxdeg) {
        let n = counters.entry(line.kind).or_insert(0usize);
        let text = if line.passed { format!("{} {}", line.kind, line.label) } else { format!("{} {}: {}", line.kind, line.label, line.detail) };
        rep.check(format!("{algebra}.{}.{:02}", line.kind, n), line.passed, text);
        *n += 1;
    }
    match algebra {
        "s03" => {
            let f = s03_prime(&dual)?;
            rep.info("s03.prime.dim", format!("s03′ has dimension {}", f.dim()));
            let b = f.index("B").ok_or_else(|| Error::Unknown("B".into()))?;
            let out = antipode_solve(&f, b);
            rep.check("s03.antipode.B", !out.is_feasible(), format!("γ(B̃) infeasible in s03′: {}", outcome(&out)));
            rep.check("s03.antipode.unit", antipode_solve(&f, 0).is_feasible(), "γ(1) solvable in s03′");
        }
        "s14" => {
            let span = dual_words::<Gauss>(&dual.primary_letters(), 2);
            let out = solve_left_product(&dual, &dual.gen("E"), &span, &NcPoly::one(), 4);
            rep.check("s14.antipode.E", !out.is_feasible(), format!("γ(E) infeasible in words of length ≤ 2, pairings to degree 4: {}", outcome(&out)));
        }
        _ => {
            let om = induced::omega_checks::<Gauss>()?;
            rep.check("s14o.omega.central", om.central, "ω central");
            rep.check("s14o.omega.coproduct", om.coproduct, "δω = ω ⊗ ω");
            rep.check("s14o.omega.counit", om.counit, "ε(ω) = 1");
            rep.check("s14o.omega.m_adj", om.antipode.m_adj, "M adj(M) = ω");
            rep.check("s14o.omega.adj_m", om.antipode.adj_m, "adj(M) M = ω");
            rep.check("s14o.omega.m_gamma", om.antipode.m_gamma, "M γ(M) = 1");
            rep.check("s14o.omega.gamma_m", om.antipode.gamma_m, "γ(M) M = 1");
            rep.info("s14o.omega.gamma_m_omega", format!("γ(M) M = ω: {}", om.antipode.gamma_m_is_omega));
            let sl2 = induced::sl2_check(&dual, maxdeg)?;
            for (i, (label, ok)) in sl2.relations.iter().enumerate() {
                rep.check(format!("s14o.sl2.{i:02}"), *ok, format!("sl(2) {label}"));
            }
            rep.check("s14o.sl2.counit", sl2.counit, "sl(2) counits");
        }
    }
    Ok(rep)
}

fn outcome<F: Field>(o: &SolveOutcome<F>) -> String {
    match o {
        SolveOutcome::Feasible(_) => "solution found".into(),
        SolveOutcome::Infeasible { rank, augmented_rank } => format!("rank {rank} < augmented rank {augmented_rank}"),
    }
}

fn verify_presentation(name: &str, maxdeg: usize) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let p = bialgebra::registry::<Gauss>(name)?;
    let degree = maxdeg.min(4);
    let c = p.check_compatibility(degree);
    rep.check(
        format!("{name}.compatibility"),
        c.passed(),
        format!("coproduct and counit respect {} relations, axioms on {} words (degree ≤ {degree})", c.relations_checked, c.words_checked),
    );
    for f in &c.failures {
        rep.check(format!("{name}.compatibility"), false, f.clone());
    }
    for s in &c.skipped {
        rep.info(format!("{name}.skipped"), format!("no coproduct: {s}"));
    }
    Ok(rep)
}

struct RepsOptions {
    source: Source,
    degree: Option<usize>,
    weight: Option<String>,
    induced: Option<(i64, i64)>,
    eta: bool,
    maxdeg: usize,
    truncation: usize,
}

fn reps_cmd(algebra: &str, o: &RepsOptions) -> exobi::Result<Report> {
    let dual = dual_registry::<Gauss>(algebra)?;
    if let Some((nu, rho)) = o.induced {
        if algebra != "s14o" {
            return Err(Error::Unsupported(format!("induced modules need s14o, not {algebra}")));
        }
        return induced_cmd(&dual, nu, rho, o.truncation, o.eta);
    }
    let ctx = RepContext::new(&dual)?;
    let mut rep = Report::default();
    if let Some(w) = &o.weight {
        let (x, lambda) = w.split_once('=').ok_or_else(|| Error::Invalid(format!("weight `{w}` is not of the form X=λ")))?;
        let lambda = parse_scalar(lambda.trim())?;
        let reg = regular(&dual, o.truncation)?;
        let m = reps::weight_module(&reg, &ctx, x.trim(), &lambda)?;
        rep.info("weight", format!("{algebra}: weight module {} = {lambda}", x.trim()));
        describe_module(&mut rep, &ctx, &m, "weight")?;
        return Ok(rep);
    }
    match o.source {
        Source::Lrr | Source::Rrr => {
            let reg = regular(&dual, o.truncation)?;
            let (m, side) = if o.source == Source::Lrr { (reps::left_regular(&reg), "left") } else { (reps::right_regular(&reg), "right") };
            rep.info("regular", format!("{}: {side} regular representation, dimension {}", reg.name, m.dim()));
            describe_module(&mut rep, &ctx, &m, "regular")?;
        }
        Source::Pir => {
            let degrees: Vec<usize> = match o.degree {
                Some(n) => vec![n],
                None => (0..=o.maxdeg).collect(),
            };
            for n in degrees {
                if algebra == "s14" {
                    s14_degree(&mut rep, &dual, n)?;
                } else {
                    let m = reps::pi_r_module(&dual, n, reps::pi_r_generators(algebra));
                    rep.info(format!("pir.{n}"), format!("degree {n}: dimension {}", m.dim()));
                    let rel = m.check_relations(&ctx.alphabet, &ctx.relations);
                    rep.check(format!("pir.{n}.relations"), rel.passed(), format!("degree {n}: {} relations hold", rel.checked));
                    if algebra == "s03" {
                        summarize(&mut rep, &format!("pir.{n}"), &reps::decompose(&m, &ctx)?);
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn regular(dual: &DualAlgebra<Gauss>, l: usize) -> exobi::Result<RegularAlgebra<Gauss>> {
    match dual.name.as_str() {
        "s03" => reps::s03_prime_regular(dual),
        "s14" => reps::s14_prime_regular(dual, l),
        other => Err(Error::Unsupported(format!("{other} has no finite regular quotient"))),
    }
}

fn describe_module(rep: &mut Report, ctx: &RepContext<Gauss>, m: &ModuleRep<Gauss>, tag: &str) -> exobi::Result<()> {
    let rel = m.check_relations(&ctx.alphabet, &ctx.relations);
    rep.check(format!("{tag}.relations"), rel.passed(), format!("{} relations hold, {} skipped by truncation", rel.checked, rel.skipped));
    for f in &rel.failures {
        rep.check(format!("{tag}.relations"), false, f.clone());
    }
    let d = reps::decompose(m, ctx)?;
    summarize(rep, tag, &d);
    Ok(())
}

fn summarize(rep: &mut Report, tag: &str, d: &Decomposition<Gauss>) {
    let kind = if d.direct_sum { "direct sum" } else { "composition factors" };
    let trunc = if d.truncated { ", truncated" } else { "" };
    rep.info(format!("{tag}.factors"), format!("irreducible factors: {} ({kind}{trunc})", d.factors.len()));
    for (i, (desc, mult)) in d.summary().into_iter().enumerate() {
        rep.info(format!("{tag}.irrep.{i:02}"), format!("{mult} × [{desc}]"));
    }
}

fn s14_degree(rep: &mut Report, dual: &DualAlgebra<Gauss>, n: usize) -> exobi::Result<()> {
    let r = reps::s14_degree_report(dual, n)?;
    let expected = reps::HalfSpectrum::expected(n);
    for (h, half) in r.halves.iter().enumerate() {
        let spec: Vec<String> = half.spectrum.iter().map(|(t, m)| if *m == 1 { t.to_string() } else { format!("{t}^{m}") }).collect();
        rep.check(
            format!("pir.{n}.half.{h}"),
            half.spectrum == expected,
            format!("degree {n}, half {}: dimension {}, π_R(D̃) spectrum {{{}}}", half.letters, half.dim, spec.join(", ")),
        );
    }
    if let Some(b) = r.binomial_kernel {
        rep.check(format!("pir.{n}.kernel"), b, format!("degree {n}: kernel is the binomial vector"));
    }
    rep.check(format!("pir.{n}.recursions"), r.recursions, format!("degree {n}: eigenvector coefficients satisfy the recursions"));
    Ok(())
}

fn induced_cmd(dual: &DualAlgebra<Gauss>, nu: i64, rho: i64, l: usize, eta: bool) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let actions = HatActions::new(dual)?;
    let basis = if eta { InducedBasis::Eta } else { InducedBasis::U };
    let m = induced::induce(&actions, nu, rho, l, basis)?;
    let r = induced::induced_report(dual, &m)?;
    let bname = if eta { "η" } else { "u" };
    rep.info("induced", format!("ν = {nu}, ρ = {rho}, L = {l}, basis {bname}, dimension {}", m.module.dim()));
    rep.check("induced.closed_form", r.closed_form, "actions match the closed forms");
    rep.check("induced.casimir", r.casimir, format!("Ã = {}", -rho));
    rep.check("induced.spectrum", r.spectrum, format!("B̃ spectrum {{ν - 2ℓ}} = {{{}, {}, …}}", nu, nu - 2));
    rep.check("induced.highest_weight", r.highest_weight, format!("X⁺ {bname}₀ = 0"));
    rep.check("induced.grading", r.grading, "X^± shift ℓ by ∓1");
    rep.check(
        "induced.relations",
        r.relations_checked > 0 && r.relation_failures.is_empty(),
        format!("{} relation checks, {} failures", r.relations_checked, r.relation_failures.len()),
    );
    for f in &r.relation_failures {
        rep.check("induced.relations", false, f.clone());
    }
    let dims: Vec<String> = r.invariant_dims.iter().map(|d| d.to_string()).collect();
    let found = if dims.is_empty() { "none".to_string() } else { dims.join(", ") };
    rep.check("induced.submodules", r.invariant_dims == r.expected_invariants(), format!("invariant submodules below the boundary: dimension {found}"));
    if let Some(irr) = r.finite_irreducible {
        rep.check("induced.irreducible", irr, format!("the {}-dimensional submodule is irreducible", nu + 1));
    }
    if eta {
        let c = induced::eta_comparison(&actions, nu, rho, l)?;
        let signs: Vec<String> = c.signs.iter().map(|s| if *s > 0 { "+".to_string() } else { "-".to_string() }).collect();
        rep.check("eta.intertwiner", c.intertwines, format!("diagonal intertwiner with signs {}", signs.join("")));
        rep.check("eta.sign_free", c.sign_free, "η-basis actions are sign-free");
        rep.check("eta.vector_field", c.vector_field, "η basis matches the vector fields on z^ℓ");
    }
    Ok(rep)
}

fn basis(name: &str, maxdeg: usize, degree: Option<usize>) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let p = bialgebra::registry::<Gauss>(name)?;
    let expected = |n: usize| -> Option<usize> {
        match name {
            "S03" => Some(if n == 0 { 1 } else { 1 << (n + 1) }),
            "S14" => Some(if n == 0 { 1 } else { 2 * n + 2 }),
            "S14o" => Some((n + 1) * (n + 2) * (n + 3) / 6),
            _ => None,
        }
    };
    for n in 0..=maxdeg {
        let got = p.basis(n).len();
        match expected(n) {
            Some(e) => rep.check(format!("{name}.dim.{n}"), got == e, format!("degree {n}: {got} basis words (expected {e})")),
            None => rep.info(format!("{name}.dim.{n}"), format!("degree {n}: {got} basis words")),
        }
    }
    let probe = if name == "S14o-hatted" { maxdeg.min(4) } else { maxdeg.min(6) };
    let c = p.rules.confluence_probe(probe);
    rep.check(
        format!("{name}.confluence"),
        c.is_clean(),
        format!("confluence probe to degree {probe}: {} words, {} divergences", c.words_checked, c.divergences.len()),
    );
    if let Some(n) = degree {
        for (i, w) in p.basis(n).iter().enumerate() {
            rep.info(format!("{name}.word.{n}.{i:03}"), p.alphabet.fmt_word(w));
        }
    }
    Ok(rep)
}

fn pair(algebra: &str, u: &str, f: &str) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let dual = dual_registry::<Gauss>(algebra)?;
    let v = dual.pair_text(u, f)?;
    rep.info("pair", format!("⟨{u}, {f}⟩ = {v}"));
    Ok(rep)
}

fn gauge(path: Option<&PathBuf>) -> exobi::Result<Report> {
    let mut rep = Report::default();
    let r0 = rtt::registry("R0")?;
    for (key, plus, u) in [("S14q1", true, "U₊"), ("S14qm1", false, "U₋")] {
        let g = rtt::gauge_conjugate(&rtt::registry(key)?, &rtt::gauge_u::<RatFunc>(plus))?;
        rep.check(format!("gauge.{key}"), g == r0, format!("({u}⊗{u}) R_{key} ({u}⊗{u})⁻¹ = R0"));
    }
    let s03 = rtt::registry("S03")?;
    let id = rtt::gauge_conjugate(&s03, &exobi::linalg::Matrix::identity(2))?;
    rep.check("gauge.identity", id == s03, "conjugation by the identity fixes R_S03");
    for key in rtt::REGISTRY {
        rep.check(format!("ybe.{key}"), rtt::yang_baxter_check(&rtt::registry(key)?), format!("Yang–Baxter equation for {key}"));
    }
    if let Some(p) = path {
        let r = read_rmatrix(p)?;
        rep.check("ybe.file", rtt::yang_baxter_check(&r), format!("Yang–Baxter equation for {}", p.display()));
    }
    Ok(rep)
}
