//! Front end for `tymod`: parses group and form specifications, runs one
//! analysis and renders it as JSON, CSV or plain text.
//!
//! JSON output of `classify` has the top-level fields, in this order,
//! `input`, `induced`, `equivariant`, `obstructed`, `group_theoretical`,
//! `lagrangians`, `fiber_functor_count`, `e_groups`. Elements are coordinate
//! arrays, subgroups are sorted element lists, forms are `;`/`,` matrices of
//! rationals and `ν` is a map from `H̄`-elements to rationals.

pub mod report;

use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;
use tymod_core::abelian::{enumerate_subgroups, parse_elements, parse_group};
use tymod_core::battery::{battery, battery_groups, battery_metrics, parse_sweep_line};
use tymod_core::checks;
use tymod_core::classify::{dual_report, fiber_functors, is_sigma_fixed, sigma_act, VecAPair};
use tymod_core::forms::{alternating_forms, lagrangians, parse_bicharacter, parse_matrix, render_matrix, Sign};
use tymod_core::{classify, AlternatingForm, Bicharacter, ClassifyOptions, FinAbGroup, Subgroup, TyData};

use report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Subgroups,
    Forms,
    Lagrangians,
    Sigma,
    Fiber,
    Dual,
    Sweep,
    Selfcheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format `{s}` (json, csv, text)")),
        }
    }
}

/// Everything one invocation needs; equal configs give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub group_spec: Option<String>,
    pub chi_spec: Option<String>,
    pub tau: Option<Sign>,
    /// Generators of `H`, e.g. `(1,0);(0,2)`.
    pub h_spec: Option<String>,
    /// Form on `H` in the basis listed by `subgroups`.
    pub xi_spec: Option<String>,
    pub format: Format,
    pub budget: usize,
    pub seed: u64,
    pub sweep: Option<PathBuf>,
    /// `0` uses the global thread pool.
    pub workers: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            group_spec: None,
            chi_spec: None,
            tau: None,
            h_spec: None,
            xi_spec: None,
            format: Format::Json,
            budget: tymod_core::abelian::DEFAULT_BUDGET,
            seed: 1,
            sweep: None,
            workers: 0,
        }
    }

    fn options(&self) -> ClassifyOptions {
        ClassifyOptions::default().with_budget(self.budget).with_workers(self.workers)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<tymod_core::Error> for CliError {
    fn from(e: tymod_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

impl From<tymod_core::ParseError> for CliError {
    fn from(e: tymod_core::ParseError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("output: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(format!("csv output: {e}"))
    }
}

type CliResult<T> = Result<T, CliError>;

/// Runs one command. Returns the exit code: 0 on success, 1 on invalid
/// input, 2 when an internal consistency check fails.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<i32> {
    match cfg.command {
        Command::Classify => cmd_classify(cfg, out),
        Command::Subgroups => cmd_subgroups(cfg, out),
        Command::Forms => cmd_forms(cfg, out),
        Command::Lagrangians => cmd_lagrangians(cfg, out),
        Command::Sigma => cmd_sigma(cfg, out),
        Command::Fiber => cmd_fiber(cfg, out),
        Command::Dual => cmd_dual(cfg, out),
        Command::Sweep => cmd_sweep(cfg, out),
        Command::Selfcheck => cmd_selfcheck(cfg, out),
    }?;
    Ok(0)
}

fn require<'a>(v: &'a Option<String>, flag: &str) -> CliResult<&'a str> {
    v.as_deref().ok_or_else(|| CliError::Validation(format!("missing {flag}")))
}

fn group(cfg: &RunConfig) -> CliResult<FinAbGroup> {
    let g = parse_group(require(&cfg.group_spec, "--group")?)?;
    if g.order() > cfg.budget {
        return Err(CliError::Validation(format!(
            "group order {} exceeds budget {}",
            g.order(),
            cfg.budget
        )));
    }
    Ok(g)
}

fn chi(cfg: &RunConfig, g: &FinAbGroup) -> CliResult<Bicharacter> {
    Ok(parse_bicharacter(require(&cfg.chi_spec, "--chi")?, g)?)
}

/// TY data; `τ` defaults to `+` for commands that do not depend on it.
fn ty_data(cfg: &RunConfig, need_tau: bool) -> CliResult<TyData> {
    let g = group(cfg)?;
    let c = chi(cfg, &g)?;
    let tau = match cfg.tau {
        Some(t) => t,
        None if need_tau => return Err(CliError::Validation("missing --tau".into())),
        None => Sign::Plus,
    };
    Ok(TyData::new(c, tau)?)
}

fn pair(cfg: &RunConfig, g: &FinAbGroup) -> CliResult<VecAPair> {
    let gens = parse_elements(require(&cfg.h_spec, "--H")?, g)?;
    let h = Subgroup::generated(g, &gens);
    let xi = match &cfg.xi_spec {
        None => AlternatingForm::zero(h.group()),
        Some(spec) => {
            let b = Bicharacter::new(h.group().clone(), parse_matrix(spec)?)
                .map_err(|e| CliError::Validation(format!("--xi on H of type {}: {e}", h.group())))?;
            if !b.is_alternating() {
                return Err(CliError::Validation(format!("--xi {spec} is not alternating")));
            }
            AlternatingForm::new(b)?
        }
    };
    Ok(VecAPair::new(h, xi)?)
}

fn json(out: &mut dyn Write, v: &impl Serialize) -> CliResult<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().from_writer(out)
}

fn cmd_classify(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ty = ty_data(cfg, true)?;
    let r = classify(&ty, &cfg.options())?;
    let view = ClassifyJson::new(&r);
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["kind", "H", "xi", "hbar", "s", "nu", "sign"])?;
            for o in &view.induced {
                for m in &o.members {
                    w.write_record(["induced", &element_set(&m.h.elements), &m.xi, "", "", "", ""])?;
                }
            }
            for e in &view.equivariant {
                w.write_record([
                    "equivariant",
                    &element_set(&e.pair.h.elements),
                    &e.pair.xi,
                    &group_name(&e.hbar),
                    &int_matrix_text(&e.s),
                    &nu_text(&e.nu),
                    &e.sign,
                ])?;
            }
            for p in &view.obstructed {
                w.write_record(["obstructed", &element_set(&p.h.elements), &p.xi, "", "", "", ""])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "TY({}, chi = {}, tau = {})", ty.group(), ty.chi(), ty.tau())?;
            writeln!(out, "pairs (H, xi): {}", r.pair_count())?;
            writeln!(out, "module categories: {}", r.module_count())?;
            writeln!(out, "induced from sigma-orbits of size 2: {}", r.induced.len())?;
            for o in &r.induced {
                writeln!(out, "  {} <-> {}", o.members[0], o.members[1])?;
            }
            writeln!(out, "equivariant on sigma-fixed pairs: {}", r.equivariant.len())?;
            for e in &r.equivariant {
                writeln!(
                    out,
                    "  {}  s = [{}]  nu = {}  sign {}",
                    e.pair,
                    int_matrix_text(e.s.matrix()),
                    nu_text(&e.nu),
                    e.sign
                )?;
            }
            writeln!(out, "obstructed fixed pairs: {}", r.obstructed_fixed.len())?;
            for p in &r.obstructed_fixed {
                writeln!(out, "  {p}")?;
            }
            let lags: Vec<String> = r.lagrangians.iter().map(|l| l.to_string()).collect();
            writeln!(
                out,
                "group-theoretical: {}{}",
                if r.group_theoretical { "yes" } else { "no" },
                if lags.is_empty() { String::new() } else { format!(" (Lagrangians {})", lags.join(", ")) }
            )?;
            writeln!(out, "fiber functors: {}", r.fiber_functor_count)?;
            writeln!(out, "E groups:")?;
            for pa in &r.pairs {
                let d = pa.dual_report();
                writeln!(
                    out,
                    "  {}  E = {}{}",
                    pa.pair,
                    group_name(&d.e_type),
                    if d.dual_pointed { "  (dual pointed)" } else { "" }
                )?;
            }
            Ok(())
        }
    }
}

fn cmd_subgroups(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let g = group(cfg)?;
    let subs = enumerate_subgroups(&g, cfg.budget)?;
    let view = SubgroupsJson {
        group: g.to_string(),
        subgroups: subs.iter().map(SubgroupJson::new).collect(),
    };
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["order", "type", "basis", "elements"])?;
            for s in &view.subgroups {
                w.write_record([
                    &s.elements.len().to_string(),
                    &group_name(&s.group_type),
                    &element_set(&s.basis),
                    &element_set(&s.elements),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{} subgroups of {}", subs.len(), g)?;
            for s in &view.subgroups {
                writeln!(
                    out,
                    "  {} of type {}, basis {}",
                    element_set(&s.elements),
                    group_name(&s.group_type),
                    element_set(&s.basis)
                )?;
            }
            Ok(())
        }
    }
}

fn cmd_forms(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let g = group(cfg)?;
    let target = match &cfg.h_spec {
        Some(spec) => Subgroup::generated(&g, &parse_elements(spec, &g)?).group().clone(),
        None => g,
    };
    let forms: Vec<String> = alternating_forms(&target).iter().map(|f| render_matrix(f.matrix())).collect();
    let view = FormsJson {
        group: target.to_string(),
        count: forms.len(),
        forms,
    };
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["group", "xi"])?;
            for f in &view.forms {
                w.write_record([view.group.as_str(), f])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{} alternating forms on {}", view.count, view.group)?;
            for f in &view.forms {
                writeln!(out, "  [{f}]")?;
            }
            Ok(())
        }
    }
}

fn cmd_lagrangians(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ty = ty_data(cfg, false)?;
    let lags = lagrangians(ty.chi(), cfg.budget)?;
    let view = LagrangiansJson {
        input: InputJson::new(&ty),
        lagrangians: lags.iter().map(subgroup_elements).collect(),
    };
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["order", "elements"])?;
            for l in &view.lagrangians {
                w.write_record([&l.len().to_string(), &element_set(l)])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "Lagrangian subgroups of ({}, {}): {}", ty.group(), ty.chi(), lags.len())?;
            for l in &view.lagrangians {
                writeln!(out, "  {}", element_set(l))?;
            }
            Ok(())
        }
    }
}

fn cmd_sigma(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ty = ty_data(cfg, false)?;
    let p = pair(cfg, ty.group())?;
    let image = sigma_act(&ty, &p)?;
    let fixed = is_sigma_fixed(&ty, &p)?;
    let view = SigmaJson {
        input: InputJson::new(&ty),
        pair: PairJson::new(&p),
        image: PairJson::new(&image),
        fixed: fixed.is_some(),
        hbar: fixed.as_ref().map(|f| f.hbar().orders().to_vec()),
        s: fixed.as_ref().map(|f| f.s.matrix().clone()),
    };
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["H", "xi", "image_H", "image_xi", "fixed", "s"])?;
            w.write_record([
                &element_set(&view.pair.h.elements),
                &view.pair.xi,
                &element_set(&view.image.h.elements),
                &view.image.xi,
                &view.fixed.to_string(),
                &view.s.as_deref().map(int_matrix_text).unwrap_or_default(),
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "sigma {} = {}", p, image)?;
            match &fixed {
                Some(f) => writeln!(out, "fixed; s on {} = [{}]", f.hbar(), int_matrix_text(f.s.matrix()))?,
                None => writeln!(out, "not fixed")?,
            }
            Ok(())
        }
    }
}

fn cmd_fiber(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ty = ty_data(cfg, true)?;
    if ty.group().order() > cfg.budget {
        return Err(CliError::Validation("group exceeds budget".into()));
    }
    let ff = fiber_functors(&ty)?;
    if ff.count != ff.tambara {
        return Err(CliError::Internal(format!(
            "{} fiber functors from nu, {} from (s, mu)",
            ff.count, ff.tambara
        )));
    }
    let view = FiberJson::new(&ty, &ff);
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["xi", "s", "nu", "sign"])?;
            for c in &view.classes {
                w.write_record([&c.pair.xi, &int_matrix_text(&c.s), &nu_text(&c.nu), &c.sign])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "fiber functors: {} (via (s, mu): {})", ff.count, ff.tambara)?;
            for c in &ff.classes {
                writeln!(out, "  {}  s = [{}]  nu = {}", c.pair, int_matrix_text(c.s.matrix()), nu_text(&c.nu))?;
            }
            Ok(())
        }
    }
}

fn cmd_dual(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ty = ty_data(cfg, false)?;
    let p = pair(cfg, ty.group())?;
    let d = dual_report(&ty, &p)?;
    let view = DualJson {
        input: InputJson::new(&ty),
        pair: PairJson::new(&p),
        e_type: d.e_type.clone(),
        dual_pointed: d.dual_pointed,
    };
    match cfg.format {
        Format::Json => json(out, &view),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["H", "xi", "E", "dual_pointed"])?;
            w.write_record([
                &element_set(&view.pair.h.elements),
                &view.pair.xi,
                &group_name(&view.e_type),
                &view.dual_pointed.to_string(),
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{}: E = {}, dual {}", p, group_name(&d.e_type), if d.dual_pointed { "pointed" } else { "not pointed" })?;
            Ok(())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LineStatus {
    Ok,
    Invalid,
    Internal,
}

fn sweep_line(cfg: &RunConfig, lineno: usize, line: &str) -> Option<(SweepJson, LineStatus)> {
    let ty = match parse_sweep_line(line) {
        Ok(None) => return None,
        Ok(Some(t)) => t,
        Err(e) => return Some((SweepJson::err(lineno, e.to_string()), LineStatus::Invalid)),
    };
    // lines are already processed in parallel
    let opts = ClassifyOptions::default().with_budget(cfg.budget);
    Some(match classify(&ty, &opts) {
        Ok(r) => (SweepJson::ok(lineno, &r), LineStatus::Ok),
        Err(e) if e.is_internal() => (SweepJson::err(lineno, e.to_string()), LineStatus::Internal),
        Err(e) => (SweepJson::err(lineno, e.to_string()), LineStatus::Invalid),
    })
}

fn cmd_sweep(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let path = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::Validation("missing --sweep FILE".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let work = || -> Vec<(SweepJson, LineStatus)> {
        lines.par_iter().filter_map(|&(n, l)| sweep_line(cfg, n, l)).collect()
    };
    let results = if cfg.workers == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| CliError::Internal(e.to_string()))?
            .install(work)
    };
    match cfg.format {
        Format::Json => {
            for (r, _) in &results {
                let s = serde_json::to_string(r).map_err(|e| CliError::Internal(e.to_string()))?;
                writeln!(out, "{s}")?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "line", "group", "chi", "tau", "pairs", "induced", "equivariant", "obstructed",
                "fiber_functors", "group_theoretical", "lagrangians", "error",
            ])?;
            for (r, _) in &results {
                let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
                let (g, c, t) = r
                    .input
                    .as_ref()
                    .map(|i| (i.group.clone(), i.chi.clone(), i.tau.clone()))
                    .unwrap_or_default();
                w.write_record([
                    r.line.to_string(),
                    g,
                    c,
                    t,
                    opt(r.pairs),
                    opt(r.induced),
                    opt(r.equivariant),
                    opt(r.obstructed),
                    opt(r.fiber_functor_count),
                    r.group_theoretical.map(|b| b.to_string()).unwrap_or_default(),
                    opt(r.lagrangians),
                    r.error.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for (r, _) in &results {
                match (&r.input, &r.error) {
                    (Some(i), _) => writeln!(
                        out,
                        "line {}: {}|{}|{}  induced {}  equivariant {}  obstructed {}  fiber functors {}  group-theoretical {}",
                        r.line,
                        i.group,
                        i.chi,
                        i.tau,
                        r.induced.unwrap_or(0),
                        r.equivariant.unwrap_or(0),
                        r.obstructed.unwrap_or(0),
                        r.fiber_functor_count.unwrap_or(0),
                        r.group_theoretical.unwrap_or(false)
                    )?,
                    (None, Some(e)) => writeln!(out, "line {}: error: {e}", r.line)?,
                    (None, None) => {}
                }
            }
        }
    }
    let count = |st: LineStatus| results.iter().filter(|(_, s)| *s == st).count();
    let (internal, invalid) = (count(LineStatus::Internal), count(LineStatus::Invalid));
    if internal > 0 {
        return Err(CliError::Internal(format!("{internal} sweep line(s) failed a consistency check")));
    }
    if invalid > 0 {
        return Err(CliError::Validation(format!("{invalid} sweep line(s) are invalid")));
    }
    Ok(())
}

/// The oracle suites at full size, seeded by `--seed`.
pub fn selfcheck_suites(seed: u64) -> Vec<checks::CheckOutcome> {
    let metrics = battery_metrics();
    let groups = battery_groups();
    vec![
        checks::sigma_involution(&metrics),
        checks::alt_form_bijection(&groups),
        checks::coboundary_random(&groups, 500, seed),
        checks::nu_vs_bruteforce(&metrics, 4),
        checks::nu_representative_independence(&metrics, 5, seed),
        checks::gauss_soundness(&metrics),
        checks::e_group_checks(&metrics),
        checks::tambara_agreement(&battery()),
        checks::group_theoreticity(&metrics, 20, 16, seed),
    ]
}

fn cmd_selfcheck(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let outcomes = selfcheck_suites(cfg.seed);
    match cfg.format {
        Format::Json => {
            let view: Vec<CheckJson> = outcomes
                .iter()
                .map(|o| CheckJson {
                    name: o.name.clone(),
                    passed: o.passed,
                    detail: o.detail.clone(),
                })
                .collect();
            json(out, &view)?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["check", "passed", "detail"])?;
            for o in &outcomes {
                w.write_record([o.name.as_str(), &o.passed.to_string(), &o.detail])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
        }
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
    if !failed.is_empty() {
        return Err(CliError::Internal(format!("failed checks: {}", failed.join(", "))));
    }
    Ok(())
}
