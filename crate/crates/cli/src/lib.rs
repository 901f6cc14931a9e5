//! Command-line front end for `arikoike-core`.

pub mod format;
pub mod suites;

use arikoike_core::basicset::{assemble_basic_set, assemble_basic_set_gpn, BasicSet, GpnSpec};
use arikoike_core::combinatorics::{
    a_value_combinatorial, a_value_combinatorial_with_size, a_value_hook_formula, enumerate_multipartitions,
    ChargeData, Multipartition,
};
use arikoike_core::schur::{
    ariki_poly_specialised, is_defect_zero, is_semisimple, schur_cancellation_free, schur_gim, schur_mathas,
    CycloSpec,
};
use arikoike_core::Rational;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{multipartition_json, parse_int_list, parse_multipartition, IntList};
use crate::suites::{Bounds, Runner, Suite};

#[derive(Debug, Parser)]
#[command(name = "arikoike", version, about = "Schur elements, a-values and basic sets for Ariki-Koike algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for `verify` (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schur element of a multipartition as a Laurent polynomial in q, Q_0, ….
    Schur {
        /// Multipartition literal, e.g. '[[2,1],[],[1]]'.
        #[arg(long, value_parser = parse_multipartition)]
        lambda: Multipartition,
        #[arg(long, value_enum, default_value_t = Formula::Cancel)]
        formula: Formula,
        /// Beta-number count for the beta-number formula (default: the length of lambda).
        #[arg(long)]
        symbol_size: Option<usize>,
    },
    /// Whether the specialised algebra of G(l,1,n) is semisimple.
    Semisimple {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: SpecArgs,
    },
    /// Defect-0 test at q = η, Q_j = η^{v_j} with η a primitive e-th root of unity.
    Defect0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: i64,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        v: IntList,
        #[arg(long, value_parser = parse_multipartition, conflicts_with = "all", required_unless_present = "all")]
        lambda: Option<Multipartition>,
        /// List every defect-0 multipartition of n.
        #[arg(long)]
        all: bool,
    },
    /// a-value of a multipartition for charges m_j = r_j / r.
    Avalue {
        #[arg(long, value_parser = parse_multipartition)]
        lambda: Multipartition,
        #[arg(long)]
        r: i64,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        charges: IntList,
        #[arg(long, value_enum, default_value_t = Method::Combinatorial)]
        method: Method,
        /// Symbol size for the combinatorial route (default: smallest valid).
        #[arg(long)]
        symbol_size: Option<usize>,
    },
    /// Canonical basic set for G(l,1,n) at η = exp(2πik/e).
    Basicset {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: i64,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long)]
        r: i64,
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        charges: IntList,
    },
    /// Basic set for G(l,p,n) as shift orbits of the ambient basic set.
    BasicsetGpn {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: i64,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long)]
        r: i64,
        /// The d = l/p charges.
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        charges: IntList,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_l: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// Either `--charges` with `--r` (q = η^r, Q_j = η_l^j η^{r_j}) or `--v`
/// (q = η, Q_j = η^{v_j}).
#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long)]
    e: i64,
    #[arg(long, default_value_t = 1)]
    k: i64,
    #[arg(long, default_value_t = 1, conflicts_with = "v")]
    r: i64,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true, required_unless_present = "v")]
    charges: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true, conflicts_with = "charges")]
    v: Option<IntList>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Cancel,
    Mathas,
    Gim,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Combinatorial,
    Hooks,
    Valuation,
    All,
}

/// What a command produced: stdout text, stderr notes and whether it
/// succeeded (a disagreement or a failed suite is not a success).
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub notes: Vec<String>,
    pub success: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            notes: Vec::new(),
            success: true,
        }
    }
}

fn core(e: arikoike_core::Error) -> String {
    e.to_string()
}

fn json_text(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

pub fn run(cli: &Cli) -> Result<Output, String> {
    match &cli.command {
        Command::Schur {
            lambda,
            formula,
            symbol_size,
        } => schur(lambda, *formula, *symbol_size, cli.json),
        Command::Semisimple { l, n, params } => semisimple(*l, *n, params, cli.json),
        Command::Defect0 { n, e, k, v, lambda, all } => defect0(*n, *e, *k, &v.0, lambda.as_ref(), *all, cli.json),
        Command::Avalue {
            lambda,
            r,
            charges,
            method,
            symbol_size,
        } => avalue(lambda, *r, &charges.0, *method, *symbol_size, cli.json),
        Command::Basicset { l, n, e, k, r, charges } => {
            expect_len("--charges", &charges.0, *l)?;
            let spec = CycloSpec::cyclotomic(*e, *k, *r, charges.0.clone()).map_err(core)?;
            let b = assemble_basic_set(&spec, *n).map_err(core)?;
            let mut out = if cli.json {
                Output::ok(json_text(json!({
                    "params": {"l": l, "n": n, "e": e, "k": k, "r": r, "charges": charges.0},
                    "elements": b.elements().iter().map(multipartition_json).collect::<Vec<_>>(),
                })))
            } else {
                Output::ok(b.elements().iter().map(|x| format!("{}\n", x)).collect())
            };
            out.notes = basic_set_notes(&b);
            Ok(out)
        }
        Command::BasicsetGpn {
            l,
            p,
            n,
            e,
            k,
            r,
            charges,
        } => {
            let spec = GpnSpec {
                e: *e,
                k: *k,
                r: *r,
                charges: charges.0.clone(),
                l: *l,
                p: *p,
                n: *n,
            };
            let (b, orbits) = assemble_basic_set_gpn(&spec).map_err(core)?;
            let mut out = if cli.json {
                let items: Vec<Value> = orbits
                    .iter()
                    .map(|o| {
                        json!({
                            "representative": multipartition_json(o.representative()),
                            "orbitSize": o.orbit_size(),
                            "stabilizerSize": o.stabilizer_size(),
                            "labels": o.labels(),
                        })
                    })
                    .collect();
                Output::ok(json_text(json!({ "orbits": items })))
            } else {
                Output::ok(
                    orbits
                        .iter()
                        .map(|o| {
                            format!(
                                "{} orbitSize={} stabilizerSize={}\n",
                                o.representative(),
                                o.orbit_size(),
                                o.stabilizer_size()
                            )
                        })
                        .collect(),
                )
            };
            out.notes = basic_set_notes(&b);
            Ok(out)
        }
        Command::Verify { suite, max_l, max_n } => {
            let runner = Runner::new(cli.jobs);
            let bounds = Bounds {
                max_l: *max_l,
                max_n: *max_n,
            };
            let checks = suites::run_suite(*suite, bounds, &runner);
            let failed = checks.iter().filter(|c| !c.passed()).count();
            let stdout = if cli.json {
                let items: Vec<Value> = checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "pass": c.passed(),
                            "checked": c.checked,
                            "failed": c.failed,
                            "firstFailure": c.first_failure,
                        })
                    })
                    .collect();
                json_text(json!({ "checks": items, "pass": failed == 0 }))
            } else {
                let mut s: String = checks.iter().map(|c| format!("{}\n", c)).collect();
                if failed == 0 {
                    s.push_str("ALL PASS\n");
                } else {
                    s.push_str(&format!("FAILED {} of {}\n", failed, checks.len()));
                }
                s
            };
            Ok(Output {
                stdout,
                notes: Vec::new(),
                success: failed == 0,
            })
        }
    }
}

fn expect_len(flag: &str, values: &[i64], l: usize) -> Result<(), String> {
    if values.len() == l {
        Ok(())
    } else {
        Err(format!("{} has {} entries, expected l = {}", flag, values.len(), l))
    }
}

fn basic_set_notes(b: &BasicSet) -> Vec<String> {
    let mut notes = Vec::new();
    if b.is_semisimple() {
        notes.push("semisimple: basic set is every multipartition".to_string());
        return notes;
    }
    for (i, (class, charge)) in b.dm_partition().classes().iter().zip(b.charges()).enumerate() {
        notes.push(format!(
            "class {}: parameters {:?}, e' = {}, charge {:?}",
            i,
            class,
            charge.e_prime(),
            charge.s()
        ));
        notes.extend(charge.diagnostics().iter().cloned());
    }
    notes
}

fn schur(lambda: &Multipartition, formula: Formula, symbol_size: Option<usize>, as_json: bool) -> Result<Output, String> {
    let big_l = symbol_size.unwrap_or_else(|| lambda.length());
    let computed: Vec<(&str, String)> = match formula {
        Formula::Cancel => vec![("cancel", schur_cancellation_free(lambda).map_err(core)?.to_string())],
        Formula::Mathas => vec![("mathas", schur_mathas(lambda).map_err(core)?.to_string())],
        Formula::Gim => vec![("gim", schur_gim(lambda, big_l).map_err(core)?.to_string())],
        Formula::All => vec![
            ("cancel", schur_cancellation_free(lambda).map_err(core)?.to_string()),
            ("mathas", schur_mathas(lambda).map_err(core)?.to_string()),
            ("gim", schur_gim(lambda, big_l).map_err(core)?.to_string()),
        ],
    };
    let agree = computed.windows(2).all(|w| w[0].1 == w[1].1);
    let stdout = if as_json {
        let mut obj = serde_json::Map::new();
        obj.insert("lambda".into(), multipartition_json(lambda));
        for (name, value) in &computed {
            obj.insert((*name).into(), Value::String(value.clone()));
        }
        if computed.len() > 1 {
            obj.insert("agree".into(), Value::Bool(agree));
        }
        json_text(Value::Object(obj))
    } else if computed.len() == 1 {
        format!("{}\n", computed[0].1)
    } else {
        let mut s: String = computed.iter().map(|(n, v)| format!("{}: {}\n", n, v)).collect();
        s.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
        s
    };
    Ok(Output {
        stdout,
        notes: Vec::new(),
        success: agree,
    })
}

fn semisimple(l: usize, n: usize, params: &SpecArgs, as_json: bool) -> Result<Output, String> {
    let spec = match (&params.charges, &params.v) {
        (Some(c), None) => {
            expect_len("--charges", &c.0, l)?;
            CycloSpec::cyclotomic(params.e, params.k, params.r, c.0.clone())
        }
        (None, Some(v)) => {
            expect_len("--v", &v.0, l)?;
            CycloSpec::root_of_unity(params.e, params.k, v.0.clone())
        }
        _ => return Err("give exactly one of --charges and --v".into()),
    }
    .map_err(core)?;
    let verdict = is_semisimple(&spec, n).map_err(core)?;
    let stdout = if as_json {
        let p = ariki_poly_specialised(&spec, n).map_err(core)?;
        json_text(json!({
            "l": l,
            "n": n,
            "semisimple": verdict,
            "specialisedPoincare": p.to_string(),
        }))
    } else if verdict {
        "SEMISIMPLE\n".to_string()
    } else {
        "NOT SEMISIMPLE\n".to_string()
    };
    Ok(Output::ok(stdout))
}

#[allow(clippy::too_many_arguments)]
fn defect0(
    n: usize,
    e: i64,
    k: i64,
    v: &[i64],
    lambda: Option<&Multipartition>,
    all: bool,
    as_json: bool,
) -> Result<Output, String> {
    CycloSpec::root_of_unity(e, k, v.to_vec()).map_err(core)?;
    if let Some(mp) = lambda {
        if mp.level() != v.len() || mp.rank() != n {
            return Err(format!(
                "--lambda must have {} components and {} nodes, got {}",
                v.len(),
                n,
                mp
            ));
        }
        let d = is_defect_zero(mp, e, v).map_err(core)?;
        let stdout = if as_json {
            json_text(json!({"lambda": multipartition_json(mp), "defectZero": d}))
        } else {
            format!("{}\n", if d { "DEFECT 0" } else { "NOT DEFECT 0" })
        };
        return Ok(Output::ok(stdout));
    }
    debug_assert!(all);
    let mut hits = Vec::new();
    for mp in enumerate_multipartitions(v.len(), n) {
        if is_defect_zero(&mp, e, v).map_err(core)? {
            hits.push(mp);
        }
    }
    let stdout = if as_json {
        json_text(json!({
            "defectZero": hits.iter().map(multipartition_json).collect::<Vec<_>>(),
            "count": hits.len(),
        }))
    } else {
        let mut s: String = hits.iter().map(|x| format!("{}\n", x)).collect();
        s.push_str(&format!("count: {}\n", hits.len()));
        s
    };
    Ok(Output::ok(stdout))
}

fn avalue(
    lambda: &Multipartition,
    r: i64,
    charges: &[i64],
    method: Method,
    symbol_size: Option<usize>,
    as_json: bool,
) -> Result<Output, String> {
    expect_len("--charges", charges, lambda.level())?;
    let m = ChargeData::new(r, charges.to_vec()).map_err(core)?;
    let combinatorial = || -> Result<Rational, String> {
        match symbol_size {
            Some(s) => a_value_combinatorial_with_size(lambda, &m, s).map_err(core),
            None => a_value_combinatorial(lambda, &m).map_err(core),
        }
    };
    let hooks = || a_value_hook_formula(lambda, &m).map_err(core);
    let valuation =
        || arikoike_core::schur::a_value_via_valuation(lambda, &m).map(Rational::from_integer).map_err(core);
    let computed: Vec<(&str, Rational)> = match method {
        Method::Combinatorial => vec![("combinatorial", combinatorial()?)],
        Method::Hooks => vec![("hooks", hooks()?)],
        Method::Valuation => vec![("valuation", valuation()?)],
        Method::All => vec![
            ("combinatorial", combinatorial()?),
            ("hooks", hooks()?),
            ("valuation", valuation()?),
        ],
    };
    let agree = computed.windows(2).all(|w| w[0].1 == w[1].1);
    let stdout = if as_json {
        let mut obj = serde_json::Map::new();
        obj.insert("lambda".into(), multipartition_json(lambda));
        for (name, value) in &computed {
            obj.insert((*name).into(), Value::String(value.to_string()));
        }
        if computed.len() > 1 {
            obj.insert("agree".into(), Value::Bool(agree));
        }
        json_text(Value::Object(obj))
    } else if computed.len() == 1 {
        format!("{}\n", computed[0].1)
    } else {
        let mut s: String = computed.iter().map(|(n, v)| format!("{}: {}\n", n, v)).collect();
        s.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
        s
    };
    Ok(Output {
        stdout,
        notes: Vec::new(),
        success: agree,
    })
}
