//! Step operations. Each takes a TOML argument table and produces string
//! fields (compared by expectations) plus an optional typed payload that
//! later steps can reference with `@id`.

use std::collections::BTreeMap;

use fpp_core::cover::{
    cover_invariants, discriminant_certificate, p2_quotient_analysis, CoverSpec, MonomialAction,
    PreimageType,
};
use fpp_core::exact::{int, parse_rational, Rational};
use fpp_core::fibration::{
    base_change_degree3, enumerate_configurations, hurwitz_branch_count,
    multiple_fiber_consistency, BaseChangeResult, Fiber, FiberConfiguration, FiberCover,
    GeneralFiber, KodairaFiberType, Multisection,
};
use fpp_core::ledger::{
    cusp_count_scan, derived_invariants, fibred_rank_bound, format_singularities, qhpp_check,
};
use fpp_core::lefschetz::{
    a_coeff, hodge_trace_enumerate, solve_fixed_points, topological_euler_fixed, CurveComponent,
    HodgeTraceQuery, LefschetzProblem, LefschetzSolution,
};
use fpp_core::singularity::discrepancy;
use fpp_core::{CyclicQuotientSingularity, ExceptionalChain, SurfaceLedger};
use toml::{Table, Value};

use crate::error::StepError;

/// Typed result a later step can consume.
#[derive(Clone, Debug, Default)]
pub enum Payload {
    #[default]
    None,
    Ledger(SurfaceLedger),
    Configurations(Vec<FiberConfiguration>),
    BaseChange(BaseChangeResult),
}

#[derive(Clone, Debug, Default)]
pub struct StepOutput {
    pub fields: BTreeMap<String, String>,
    pub payload: Payload,
}

impl StepOutput {
    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.insert(key.into(), value.to_string());
    }
}

/// Names of all operations, for `--help` style listings.
pub const OPERATIONS: &[&str] = &[
    "resolve",
    "adjunction",
    "ledger",
    "qhpp",
    "cusp_scan",
    "rank_bound",
    "cover",
    "discriminant",
    "p2_quotient",
    "a_coeff",
    "lefschetz",
    "hodge",
    "euler_fixed",
    "fibers",
    "base_change",
    "multiple_fibers",
    "hurwitz",
    "assumption",
    "reference",
];

struct Args<'a> {
    table: &'a Table,
    prior: &'a BTreeMap<String, StepOutput>,
}

fn type_name(v: &Value) -> &'static str {
    v.type_str()
}

impl<'a> Args<'a> {
    fn get(&self, name: &str) -> Option<&'a Value> {
        self.table.get(name)
    }

    fn req(&self, name: &str) -> Result<&'a Value, StepError> {
        self.get(name)
            .ok_or_else(|| StepError::arg(name, "missing"))
    }

    fn int(&self, name: &str) -> Result<i64, StepError> {
        match self.req(name)? {
            Value::Integer(n) => Ok(*n),
            v => Err(StepError::arg(
                name,
                format!("expected an integer, got {}", type_name(v)),
            )),
        }
    }

    fn int_or(&self, name: &str, default: i64) -> Result<i64, StepError> {
        if self.get(name).is_some() {
            self.int(name)
        } else {
            Ok(default)
        }
    }

    fn u32(&self, name: &str) -> Result<u32, StepError> {
        u32::try_from(self.int(name)?).map_err(|_| StepError::arg(name, "out of range"))
    }

    fn u32_or(&self, name: &str, default: u32) -> Result<u32, StepError> {
        u32::try_from(self.int_or(name, default as i64)?)
            .map_err(|_| StepError::arg(name, "out of range"))
    }

    fn bool_or(&self, name: &str, default: bool) -> Result<bool, StepError> {
        match self.get(name) {
            None => Ok(default),
            Some(Value::Boolean(b)) => Ok(*b),
            Some(v) => Err(StepError::arg(
                name,
                format!("expected a boolean, got {}", type_name(v)),
            )),
        }
    }

    fn string(&self, name: &str) -> Result<&'a str, StepError> {
        match self.req(name)? {
            Value::String(s) => Ok(s),
            v => Err(StepError::arg(
                name,
                format!("expected a string, got {}", type_name(v)),
            )),
        }
    }

    fn rational(&self, name: &str) -> Result<Rational, StepError> {
        rational_value(name, self.req(name)?)
    }

    /// A list of strings; a bare string counts as a one-element list.
    fn strings(&self, name: &str) -> Result<Vec<String>, StepError> {
        strings_value(name, self.req(name)?)
    }

    fn strings_or_empty(&self, name: &str) -> Result<Vec<String>, StepError> {
        match self.get(name) {
            None => Ok(Vec::new()),
            Some(v) => strings_value(name, v),
        }
    }

    fn indices(&self, name: &str) -> Result<Vec<usize>, StepError> {
        match self.req(name)? {
            Value::Array(items) => items
                .iter()
                .map(|v| match v {
                    Value::Integer(n) if *n >= 0 => Ok(*n as usize),
                    _ => Err(StepError::arg(name, "expected nonnegative integers")),
                })
                .collect(),
            _ => Err(StepError::arg(name, "expected an array")),
        }
    }

    fn reference(&self, name: &str) -> Result<Option<(&'a str, &'a StepOutput)>, StepError> {
        let Some(Value::String(s)) = self.get(name) else {
            return Ok(None);
        };
        let Some(id) = s.strip_prefix('@') else {
            return Ok(None);
        };
        let out = self
            .prior
            .get(id)
            .ok_or_else(|| StepError::WrongReference(id.to_string()))?;
        if out.fields.contains_key("error") {
            return Err(StepError::Upstream(id.to_string()));
        }
        Ok(Some((id, out)))
    }

    fn ledger(&self, name: &str) -> Result<SurfaceLedger, StepError> {
        if let Some((id, out)) = self.reference(name)? {
            return match &out.payload {
                Payload::Ledger(l) => Ok(l.clone()),
                _ => Err(StepError::WrongReference(id.to_string())),
            };
        }
        match self.req(name)? {
            Value::Table(t) => ledger_from_table(t, self.prior),
            _ => Err(StepError::arg(
                name,
                "expected `@step` or an inline ledger table",
            )),
        }
    }

    fn configuration(&self) -> Result<FiberConfiguration, StepError> {
        if let Some((id, out)) = self.reference("config")? {
            let Payload::Configurations(list) = &out.payload else {
                return Err(StepError::WrongReference(id.to_string()));
            };
            let pick = self.string("pick")?;
            return list
                .iter()
                .find(|c| c.to_string() == pick)
                .cloned()
                .ok_or_else(|| {
                    StepError::arg("pick", format!("no configuration {pick:?} in @{id}"))
                });
        }
        let fibers = self
            .strings("fibers")?
            .iter()
            .map(|s| parse_fiber(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiberConfiguration::from_fibers(fibers))
    }
}

fn rational_value(name: &str, v: &Value) -> Result<Rational, StepError> {
    match v {
        Value::Integer(n) => Ok(int(*n)),
        Value::String(s) => Ok(parse_rational(s)?),
        v => Err(StepError::arg(
            name,
            format!("expected a rational, got {}", type_name(v)),
        )),
    }
}

fn strings_value(name: &str, v: &Value) -> Result<Vec<String>, StepError> {
    match v {
        Value::String(s) => Ok(vec![s.clone()]),
        Value::Array(items) => items
            .iter()
            .map(|v| match v {
                Value::String(s) => Ok(s.clone()),
                _ => Err(StepError::arg(name, "expected strings")),
            })
            .collect(),
        v => Err(StepError::arg(
            name,
            format!("expected a string list, got {}", type_name(v)),
        )),
    }
}

fn ledger_from_table(
    t: &Table,
    prior: &BTreeMap<String, StepOutput>,
) -> Result<SurfaceLedger, StepError> {
    let args = Args { table: t, prior };
    let label = match args.get("label") {
        Some(_) => args.string("label")?.to_string(),
        None => "S".to_string(),
    };
    let singularities = args
        .strings_or_empty("singularities")?
        .iter()
        .map(|s| s.parse::<CyclicQuotientSingularity>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SurfaceLedger::new(
        label,
        args.rational("K2")?,
        args.int("e")?,
        args.u32_or("pg", 0)?,
        args.u32_or("q", 0)?,
        singularities,
    )?)
}

fn parse_fiber(s: &str) -> Result<Fiber, StepError> {
    let s = s.trim();
    let digits = s.chars().take_while(char::is_ascii_digit).count();
    let multiplicity = if digits == 0 {
        1
    } else {
        s[..digits]
            .parse()
            .map_err(|_| StepError::arg("fibers", format!("bad multiplicity in {s:?}")))?
    };
    let kind: KodairaFiberType = s[digits..].parse()?;
    Ok(Fiber::with_multiplicity(kind, multiplicity))
}

/// `A2`, `A2 x4`, a singularity literal such as `1/7(1,5)`, or either of
/// these followed by `xN`.
fn parse_chains(specs: &[String]) -> Result<Vec<ExceptionalChain>, StepError> {
    let mut out = Vec::new();
    for spec in specs {
        let spec = spec.trim();
        let (body, count) = match spec.rsplit_once(['x', '×']) {
            Some((b, n)) if !b.trim().is_empty() && n.trim().parse::<usize>().is_ok() => {
                (b.trim(), n.trim().parse::<usize>().expect("checked"))
            }
            _ => (spec, 1),
        };
        let chain = if let Some(k) = body.strip_prefix(['A', 'a']) {
            let k: usize = k
                .parse()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| StepError::arg("chains", format!("bad chain {spec:?}")))?;
            ExceptionalChain::a_chain(k)
        } else {
            body.parse::<CyclicQuotientSingularity>()?.resolve()
        };
        out.extend(std::iter::repeat_n(chain, count));
    }
    Ok(out)
}

fn parse_multisection(s: &str) -> Result<Multisection, StepError> {
    let bad = || StepError::arg("multisection", format!("expected `deg=D,sq=S`, got {s:?}"));
    let mut degree = None;
    let mut self_square = None;
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        match k.trim() {
            "deg" => degree = Some(v.trim().parse().map_err(|_| bad())?),
            "sq" => self_square = Some(v.trim().parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    Ok(Multisection {
        degree: degree.ok_or_else(bad)?,
        self_square: self_square.ok_or_else(bad)?,
    })
}

fn parse_general(s: &str) -> Result<GeneralFiber, StepError> {
    match s.trim() {
        "connected" => Ok(GeneralFiber::Connected),
        "split" => Ok(GeneralFiber::Split {
            extra_branch_points: 0,
        }),
        other => other
            .strip_prefix("split:")
            .and_then(|n| n.trim().parse().ok())
            .map(|extra_branch_points| GeneralFiber::Split {
                extra_branch_points,
            })
            .ok_or_else(|| StepError::arg("general", format!("bad general fibre {s:?}"))),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn bracket<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    format!("[{}]", join(items, ", "))
}

fn ledger_fields(out: &mut StepOutput, l: &SurfaceLedger) {
    let d = derived_invariants(l);
    out.set("label", l.label());
    out.set("resolution_k2", l.resolution_k2());
    out.set("resolution_e", l.resolution_e());
    out.set("resolution_b2", l.resolution_b2());
    out.set("pg", l.pg());
    out.set("q", l.q());
    let sings = format_singularities(l.singularities());
    out.set(
        "singularities",
        if sings.is_empty() {
            "none".into()
        } else {
            sings
        },
    );
    out.set("singular_count", l.singularities().len());
    out.set("noether", if l.noether_holds() { "holds" } else { "fails" });
    out.set("k2_singular", d.k2_singular);
    out.set("e_singular", d.e_singular);
    out.set("e_smooth_part", d.e_smooth_part);
}

fn qhpp_fields(out: &mut StepOutput, l: &SurfaceLedger) {
    let r = qhpp_check(l);
    out.set("is_qhpp_candidate", r.is_qhpp_candidate);
    out.set("b2_singular", r.b2_singular);
    out.set(
        "square_criterion_value",
        r.square_criterion_value
            .map_or_else(|| "inapplicable".to_string(), |v| v.to_string()),
    );
    out.set("square_criterion_holds", r.square_criterion_holds);
    out.set("k2_singular", r.k2_singular);
}

fn solution_families(s: &LefschetzSolution) -> String {
    let parts: Vec<String> = s
        .families()
        .into_iter()
        .filter(|(_, total)| *total > 0)
        .map(|(members, total)| {
            let names: Vec<String> = members.iter().map(|i| format!("r{i}")).collect();
            format!("{}={total}", names.join("+"))
        })
        .collect();
    parts.join(", ")
}

pub fn execute(
    op: &str,
    table: &Table,
    prior: &BTreeMap<String, StepOutput>,
) -> Result<StepOutput, StepError> {
    let args = Args { table, prior };
    let mut out = StepOutput::default();
    match op {
        "resolve" => {
            let s: CyclicQuotientSingularity = args.string("singularity")?.parse()?;
            let chain = s.resolve();
            let d = discrepancy(&chain);
            out.set("singularity", s);
            out.set("chain", &chain);
            out.set("length", chain.len());
            out.set("continued_fraction", chain.continued_fraction());
            out.set("determinant", chain.abs_determinant());
            out.set("discrepancy", bracket(&d.coefficients));
            out.set("discrepancy_square", &d.self_square);
            out.set("rational_double_point", s.is_rational_double_point());
        }
        "adjunction" => {
            let sings = args
                .strings("singularities")?
                .iter()
                .map(|s| s.parse::<CyclicQuotientSingularity>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut total = int(0);
            for (k, s) in sings.iter().enumerate() {
                let d = discrepancy(&s.resolve());
                out.set(format!("d{}", k + 1), bracket(&d.coefficients));
                out.set(format!("d{}_square", k + 1), &d.self_square);
                total += d.self_square;
            }
            out.set("sum_d_square", &total);
            if args.get("resolution_k2").is_some() {
                out.set("k2_singular", args.rational("resolution_k2")? - total);
            }
        }
        "ledger" => {
            let l = ledger_from_table(table, prior)?;
            ledger_fields(&mut out, &l);
            out.payload = Payload::Ledger(l);
        }
        "qhpp" => {
            let l = args.ledger("ledger")?;
            qhpp_fields(&mut out, &l);
        }
        "cusp_scan" => {
            let rows = cusp_count_scan(args.u32("kmax")?);
            for r in &rows {
                out.set(format!("value_k{}", r.k), &r.value);
                out.set(format!("square_k{}", r.k), r.is_square);
            }
            out.set(
                "squares",
                bracket(rows.iter().filter(|r| r.is_square).map(|r| r.k)),
            );
        }
        "rank_bound" => {
            let l = args.ledger("ledger")?;
            let b = fibred_rank_bound(&l, args.u32("curves")? as usize)?;
            out.set("required", b.required);
            out.set("available", b.available);
            out.set("overrun", b.overrun);
        }
        "cover" => {
            let base = args.ledger("base")?;
            let preimages = match args.get("preimages") {
                None => None,
                Some(v) => Some(
                    strings_value("preimages", v)?
                        .iter()
                        .map(|s| s.parse::<PreimageType>())
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let label = match args.get("label") {
                Some(_) => args.string("label")?.to_string(),
                None => format!("{}~", base.label()),
            };
            let spec = CoverSpec::new(
                label,
                args.u32("degree")?,
                base,
                args.indices("branch")?,
                preimages,
            )?
            .with_irregularity(args.u32_or("pg", 0)?, args.u32_or("q", 0)?);
            let l = cover_invariants(&spec)?;
            ledger_fields(&mut out, &l);
            out.payload = Payload::Ledger(l);
        }
        "discriminant" => {
            let chains = parse_chains(&args.strings("chains")?)?;
            let c = discriminant_certificate(
                args.u32("p")?,
                &chains,
                args.u32("ambient_rank")? as usize,
            )?;
            out.set("divisors", bracket(c.nontrivial_divisors()));
            out.set("length", c.length);
            out.set("p_elementary", c.is_p_elementary);
            out.set("exceptional_rank", c.exceptional_rank);
            out.set("complement_rank", c.complement_rank);
            out.set("glue_required", c.glue_required);
            out.set("assumptions", join(&c.assumptions, "; "));
        }
        "p2_quotient" => {
            let action: MonomialAction = args.string("action")?.parse()?;
            let a = p2_quotient_analysis(&action)?;
            out.set("action", a.action);
            out.set("fixed_points", a.fixed_points.len());
            out.set(
                "fixed_types",
                join(
                    a.fixed_points
                        .iter()
                        .map(|f| format!("{}@{} {}", f.stage, f.location, f.local_type)),
                    "; ",
                ),
            );
            out.set("stages", a.stages.len());
            let q = a.quotient().clone();
            ledger_fields(&mut out, &q);
            qhpp_fields(&mut out, &q);
            out.payload = Payload::Ledger(q);
        }
        "a_coeff" => {
            let p = args.u32("p")?;
            if args.get("i").is_some() {
                out.set("value", a_coeff(p, args.u32("i")?)?);
            } else {
                let all = (1..p)
                    .map(|i| a_coeff(p, i))
                    .collect::<Result<Vec<_>, _>>()?;
                for (i, a) in all.iter().enumerate() {
                    out.set(format!("a{}", i + 1), a);
                }
                out.set("coefficients", bracket(&all));
            }
        }
        "lefschetz" => {
            let curves = args
                .strings_or_empty("curves")?
                .iter()
                .map(|c| {
                    let bad = || StepError::arg("curves", format!("expected `g,R2`, got {c:?}"));
                    let (g, r) = c.split_once(',').ok_or_else(bad)?;
                    Ok(CurveComponent {
                        genus: g.trim().parse().map_err(|_| bad())?,
                        self_square: r.trim().parse().map_err(|_| bad())?,
                    })
                })
                .collect::<Result<Vec<_>, StepError>>()?;
            let problem =
                LefschetzProblem::new(args.u32("p")?, args.rational("lhs")?, args.u32("total")?)
                    .with_curves(curves);
            let sols = solve_fixed_points(&problem)?;
            out.set("isolated_target", problem.isolated_target());
            out.set("count", sols.len());
            out.set("solutions", join(&sols, "; "));
            let mut families: Vec<String> = Vec::new();
            for s in &sols {
                let f = solution_families(s);
                if !families.contains(&f) {
                    families.push(f);
                }
            }
            out.set("families", families.join(" | "));
            if let [only] = sols.as_slice() {
                out.set(
                    "quotient_singularities",
                    format_singularities(&only.quotient_singularities()),
                );
            }
        }
        "hodge" => {
            let query = HodgeTraceQuery {
                p: args.u32("p")?,
                pg: args.u32("pg")?,
                q: args.u32("q")?,
                h11_rank: args.u32("h11_rank")?,
                forced_invariant_h11: args.u32_or("forced_invariant", 0)?,
                forbid_free_action: args.bool_or("forbid_free_action", false)?,
            };
            let mut cases = hodge_trace_enumerate(&query)?;
            if args.get("quotient_pg").is_some() {
                let pg = args.u32("quotient_pg")?;
                cases.retain(|c| c.quotient_pg == pg);
            }
            out.set("count", cases.len());
            for (k, c) in cases.iter().enumerate() {
                out.set(
                    format!("case{}", k + 1),
                    format!(
                        "quotient (pg,q)=({},{}) tr_h1={} tr_h2={} tr_h11={} e_fixed={} lhs={} b2={}",
                        c.quotient_pg, c.quotient_q, c.tr_h1, c.tr_h2, c.tr_h11, c.euler_fixed, c.lhs, c.quotient_b2
                    ),
                );
            }
            let mut euler: Vec<i64> = cases.iter().map(|c| c.euler_fixed).collect();
            euler.sort();
            out.set("euler_values", bracket(euler));
            let mut h11: Vec<i64> = cases.iter().map(|c| c.tr_h11).collect();
            h11.sort();
            h11.dedup();
            out.set("tr_h11_values", bracket(h11));
            let mut b2: Vec<u32> = cases.iter().map(|c| c.quotient_b2).collect();
            b2.sort();
            b2.dedup();
            out.set("quotient_b2_values", bracket(b2));
        }
        "euler_fixed" => {
            let traces = match args.req("traces")? {
                Value::Array(items) => items
                    .iter()
                    .enumerate()
                    .map(|(d, v)| match v {
                        Value::Integer(t) => Ok((d as u32, *t)),
                        _ => Err(StepError::arg("traces", "expected integers")),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                _ => return Err(StepError::arg("traces", "expected an array")),
            };
            out.set("euler", topological_euler_fixed(&traces)?);
        }
        "fibers" => {
            let chains = parse_chains(&args.strings_or_empty("chains")?)?;
            let ms = match args.get("multisection") {
                Some(_) => Some(parse_multisection(args.string("multisection")?)?),
                None => None,
            };
            let configs =
                enumerate_configurations(args.u32("euler")?, args.u32("budget")?, &chains, ms)?;
            out.set("count", configs.len());
            out.set("configurations", join(&configs, " | "));
            for (k, c) in configs.iter().enumerate() {
                out.set(format!("config{}", k + 1), c);
                out.set(format!("picard_bound{}", k + 1), c.picard_lower_bound());
                let forced: Vec<String> = c
                    .multisection_incidence
                    .iter()
                    .filter(|f| f.intersection > 0)
                    .map(|f| format!("{}[{}]={}", c.fibers[f.fiber], f.component, f.intersection))
                    .collect();
                if ms.is_some() {
                    out.set(format!("forced{}", k + 1), forced.join(", "));
                }
            }
            out.payload = Payload::Configurations(configs);
        }
        "base_change" => {
            let config = args.configuration()?;
            let plan = args
                .strings("plan")?
                .iter()
                .map(|s| s.parse::<FiberCover>())
                .collect::<Result<Vec<_>, _>>()?;
            let general = match args.get("general") {
                Some(_) => parse_general(args.string("general")?)?,
                None => GeneralFiber::Connected,
            };
            let r = base_change_degree3(&config, &plan, general)?;
            out.set("source", &config);
            out.set(
                "images",
                join(
                    r.fiber_images
                        .iter()
                        .map(|i| format!("{} -> {}", i.source, join(&i.images, " + "))),
                    "; ",
                ),
            );
            let mut fibers = r.output_fibers();
            fibers.sort_by_key(|f| (f.kind, f.multiplicity));
            out.set("output_fibers", join(&fibers, " + "));
            out.set("total_euler", r.total_euler);
            out.set("picard_lower_bound", r.picard_lower_bound);
            out.set("branch_points_used", r.branch_points_used);
            if args.get("picard_rank").is_some() {
                let available = args.u32("picard_rank")?;
                out.set("picard_available", available);
                out.set("rank_overrun", r.picard_lower_bound > available);
            }
            out.payload = Payload::BaseChange(r);
        }
        "multiple_fibers" => {
            let config = args.configuration()?;
            out.set(
                "consistent",
                multiple_fiber_consistency(args.u32("a")?, args.u32("b")?, &config),
            );
        }
        "hurwitz" => {
            out.set(
                "branch_points",
                hurwitz_branch_count(
                    args.u32("degree")?,
                    args.u32_or("base_genus", 0)?,
                    args.u32_or("cover_genus", 0)?,
                )?,
            );
        }
        "assumption" => {
            out.set("text", args.string("text")?);
            out.set("status", "recorded, not derived");
        }
        "reference" => {
            let name = args.string("table")?;
            let t = crate::builtin::reference_table(name)
                .ok_or_else(|| StepError::arg("table", format!("unknown table {name:?}")))?;
            out.set("title", &t.title);
            out.set("entries", join(&t.entries, "; "));
            out.set("count", t.entries.len());
        }
        other => return Err(StepError::UnknownOp(other.to_string())),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(op: &str, toml_args: &str) -> Result<StepOutput, StepError> {
        let table: Table = toml::from_str(toml_args).unwrap();
        execute(op, &table, &BTreeMap::new())
    }

    #[test]
    fn resolve_seven() {
        let out = run("resolve", r#"singularity = "1/7(1,5)""#).unwrap();
        assert_eq!(out.fields["chain"], "(-2)-(-2)-(-3)");
        assert_eq!(out.fields["discrepancy"], "[1/7, 2/7, 3/7]");
        assert_eq!(out.fields["discrepancy_square"], "-3/7");
        assert_eq!(out.fields["determinant"], "7");
    }

    #[test]
    fn chain_specs() {
        let c = parse_chains(&["A2 x4".into(), "1/7(1,5)".into()]).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c[4].self_intersections(), &[-2, -2, -3]);
        assert!(parse_chains(&["B2".into()]).is_err());
        assert!(parse_chains(&["A0".into()]).is_err());
    }

    #[test]
    fn fiber_literals() {
        let f = parse_fiber("2I3").unwrap();
        assert_eq!((f.kind, f.multiplicity), (KodairaFiberType::I(3), 2));
        assert_eq!(parse_fiber("IV*").unwrap().multiplicity, 1);
        assert!(parse_fiber("V").is_err());
    }

    #[test]
    fn multisection_literal() {
        assert_eq!(
            parse_multisection("deg=6,sq=-3").unwrap(),
            Multisection {
                degree: 6,
                self_square: -3
            }
        );
        assert!(parse_multisection("deg=6").is_err());
    }

    #[test]
    fn argument_errors() {
        let e = run("resolve", "").unwrap_err();
        assert_eq!(e.kind(), "ArgumentError");
        let e = run("nope", "").unwrap_err();
        assert_eq!(e.kind(), "UnknownOp");
        let e = run("resolve", r#"singularity = "1/4(1,2)""#).unwrap_err();
        assert_eq!(e.kind(), "ParseError");
    }
}
