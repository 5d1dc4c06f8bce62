//! Command-line surface: parse an ideal, dispatch one computation, print a
//! human-readable or JSON answer.
//!
//! Exit codes: 0 success, 2 usage error, 3 invalid input, 4 resource cap
//! exceeded, 5 failed internal cross-check.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::ideal::{parse_auto, parse_ideal, ExponentVector, IdealDocument, IdealFormat};
use crate::invariants;
use crate::oracle::{self, Caps};
use crate::polyhedra::{newton_facets, symbolic_polyhedron_auto};
use crate::rat::{rat_string, Rat};

#[derive(Parser)]
#[command(
    name = "resurge",
    version,
    about = "Exact asymptotic resurgence, Waldschmidt constants and containment data for monomial ideals"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Facets,
    Recursive,
    Both,
}

/// The ideal argument is an inline ideal when it contains a colon (terse)
/// or starts with a brace (JSON); otherwise it names a file in either
/// format.
const INPUT_HELP: &str = "Inline terse ideal (`abc: ab ac bc`), inline JSON, or a file path";

#[derive(Subcommand)]
enum Command {
    /// Full invariant report
    Report {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// Also compute the K_r-driven resurgence upper bound up to this r
        #[arg(long)]
        upper_rmax: Option<u64>,
    },
    /// Asymptotic resurgence
    #[command(name = "rho-a")]
    RhoA {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// facets (default), recursive, or both with a consistency check
        #[arg(long, value_enum, default_value = "facets")]
        method: Method,
    },
    /// Waldschmidt constant (minimum degree over the symbolic polyhedron)
    Waldschmidt {
        #[arg(help = INPUT_HELP)]
        input: String,
    },
    /// Defining half-spaces of the Newton polyhedron
    Facets {
        #[arg(help = INPUT_HELP)]
        input: String,
    },
    /// Half-spaces of the symbolic polyhedron
    Sp {
        #[arg(help = INPUT_HELP)]
        input: String,
    },
    /// One membership query against a symbolic power, ordinary power or
    /// integral closure
    Member {
        #[arg(help = INPUT_HELP)]
        input: String,
        /// Monomial: variable string (`aab`) or exponent vector (`2,1,0`)
        #[arg(long)]
        mono: String,
        /// Test membership in I^(s)
        #[arg(long, value_name = "S")]
        symbolic: Option<u64>,
        /// Test membership in I^r
        #[arg(long, value_name = "R")]
        power: Option<u64>,
        /// Test membership in the integral closure of I^r
        #[arg(long, value_name = "R")]
        closure: Option<u64>,
    },
    /// One containment check I^(s) in I^r (or its integral closure)
    Contain {
        #[arg(help = INPUT_HELP)]
        input: String,
        #[arg(short)]
        s: u64,
        #[arg(short)]
        r: u64,
        /// Compare against the integral closure of I^r instead of I^r
        #[arg(long)]
        closure: bool,
    },
    /// Best resurgence lower-bound witness within the given bounds
    Witness {
        #[arg(help = INPUT_HELP)]
        input: String,
        #[arg(long)]
        smax: u64,
        #[arg(long)]
        rmax: u64,
    },
    /// K_r: least s with the closure of I^s inside I^r
    Kr {
        #[arg(help = INPUT_HELP)]
        input: String,
        #[arg(short)]
        r: u64,
        /// Search cap for s (default r + n - 1, which always suffices)
        #[arg(long)]
        scap: Option<u64>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse(); // exits 2 on usage errors
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) => 3,
                Error::Cap(_) => 4,
                Error::Internal(_) => 5,
            }
        }
    }
}

fn caps_from_env() -> Result<Caps, Error> {
    let mut caps = Caps::default();
    if let Ok(v) = std::env::var("RESURGE_CAP_GENS") {
        caps.max_gens = v
            .parse()
            .map_err(|_| Error::Input(format!("bad RESURGE_CAP_GENS `{v}`")))?;
    }
    if let Ok(v) = std::env::var("RESURGE_CAP_LATTICE") {
        caps.max_lattice = v
            .parse()
            .map_err(|_| Error::Input(format!("bad RESURGE_CAP_LATTICE `{v}`")))?;
    }
    Ok(caps)
}

fn load_ideal(input: &str) -> Result<IdealDocument, Error> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        parse_ideal(trimmed, IdealFormat::Json)
    } else if trimmed.contains(':') {
        parse_ideal(trimmed, IdealFormat::Terse)
    } else {
        let text = std::fs::read_to_string(trimmed)
            .map_err(|e| Error::Input(format!("cannot read `{trimmed}`: {e}")))?;
        parse_auto(&text)
    }
}

/// Monomials arrive either as a variable string with repetition (`aab`)
/// or as a comma/space-separated exponent vector (`2,1,0`).
fn parse_monomial(doc: &IdealDocument, text: &str) -> Result<ExponentVector, Error> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let n = doc.ideal.num_vars();
    let looks_numeric = trimmed
        .chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace());
    if looks_numeric && trimmed.chars().any(|c| c.is_ascii_digit()) {
        let exps = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Input(format!("bad exponent `{t}`")))
            })
            .collect::<Result<Vec<u64>, Error>>()?;
        if exps.len() != n {
            return Err(Error::Input(format!(
                "monomial has {} entries, ambient has {n} variables",
                exps.len()
            )));
        }
        return Ok(ExponentVector::new(exps));
    }
    let mut exps = vec![0u64; n];
    for c in trimmed.chars() {
        if c.is_whitespace() {
            continue;
        }
        let idx = doc
            .ideal
            .vars()
            .iter()
            .position(|v| v == &c.to_string())
            .ok_or_else(|| Error::Input(format!("unknown variable `{c}` in monomial")))?;
        exps[idx] += 1;
    }
    Ok(ExponentVector::new(exps))
}

fn require_squarefree(doc: &IdealDocument, what: &str) -> Result<(), Error> {
    if !doc.ideal.is_squarefree() {
        return Err(Error::Input(format!(
            "{what} needs symbolic-power generators, which require a squarefree ideal; \
             only closure-side queries (member --closure, kr) work with a supplied SP"
        )));
    }
    Ok(())
}

fn halfspace_list_json(hs: &[crate::polyhedra::HalfSpace]) -> Result<serde_json::Value, Error> {
    Ok(serde_json::Value::Array(
        hs.iter().map(|h| h.to_json()).collect::<Result<_, _>>()?,
    ))
}

fn execute(cli: Cli) -> Result<i32, Error> {
    let caps = caps_from_env()?;
    match cli.command {
        Command::Report { input, upper_rmax } => {
            let doc = load_ideal(&input)?;
            let report = invariants::build_report(&doc, upper_rmax)?;
            if report.method_agreement == Some(false) {
                return Err(Error::Internal(
                    "facet and recursive methods disagree".into(),
                ));
            }
            if cli.json {
                println!("{}", report.to_json()?);
            } else {
                print_report(&doc, &report);
            }
            Ok(0)
        }
        Command::RhoA { input, method } => {
            let doc = load_ideal(&input)?;
            let (value, agreement) = rho_a_by_method(&doc, method)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "rhoA": rat_string(&value),
                        "methodAgreement": agreement,
                    })
                );
            } else {
                match agreement {
                    Some(true) => println!("rhoA = {} (methods agree)", rat_string(&value)),
                    _ => println!("rhoA = {}", rat_string(&value)),
                }
            }
            Ok(0)
        }
        Command::Waldschmidt { input } => {
            let doc = load_ideal(&input)?;
            let alpha_hat = invariants::waldschmidt(&doc)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "alphaHat": rat_string(&alpha_hat) })
                );
            } else {
                println!("alphaHat = {}", rat_string(&alpha_hat));
            }
            Ok(0)
        }
        Command::Facets { input } => {
            let doc = load_ideal(&input)?;
            let facets = newton_facets(&doc.ideal)?;
            if cli.json {
                println!("{}", halfspace_list_json(&facets)?);
            } else {
                for h in &facets {
                    println!("{}", h.render(doc.ideal.vars()));
                }
            }
            Ok(0)
        }
        Command::Sp { input } => {
            let doc = load_ideal(&input)?;
            let sp = symbolic_polyhedron_auto(&doc)?;
            if cli.json {
                println!("{}", halfspace_list_json(sp.halfspaces())?);
            } else {
                for h in sp.halfspaces() {
                    println!("{}", h.render(doc.ideal.vars()));
                }
            }
            Ok(0)
        }
        Command::Member {
            input,
            mono,
            symbolic,
            power,
            closure,
        } => {
            let doc = load_ideal(&input)?;
            let m = parse_monomial(&doc, &mono)?;
            let chosen = [symbolic.is_some(), power.is_some(), closure.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if chosen != 1 {
                // Flag misuse, not bad mathematical input.
                eprintln!("error: pass exactly one of --symbolic, --power, --closure");
                return Ok(2);
            }
            let (kind, index, result) = if let Some(s) = symbolic {
                if s == 0 {
                    return Err(Error::Input("symbolic power index must be positive".into()));
                }
                let sp = symbolic_polyhedron_auto(&doc)?;
                let scale = Rat::new(1.into(), s.into());
                let point: Vec<Rat> = m
                    .exps()
                    .iter()
                    .map(|&e| Rat::from_integer(e.into()) * &scale)
                    .collect();
                ("symbolic", s, sp.contains(&point))
            } else if let Some(r) = power {
                ("power", r, oracle::in_ordinary_power(&doc.ideal, &m, r)?)
            } else {
                let r = closure.unwrap();
                ("closure", r, oracle::in_closure_power(&doc.ideal, &m, r)?)
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "kind": kind,
                        "index": index,
                        "member": result,
                    })
                );
            } else {
                println!("{result}");
            }
            Ok(0)
        }
        Command::Contain {
            input,
            s,
            r,
            closure,
        } => {
            let doc = load_ideal(&input)?;
            require_squarefree(&doc, "a containment check")?;
            let covers = Hypergraph::from_ideal(&doc.ideal)?.minimal_covers()?;
            let symbolic = oracle::symbolic_power(&doc.ideal, &covers, s, &caps)?;
            let mut witness: Option<ExponentVector> = None;
            for g in symbolic.gens() {
                let inside = if closure {
                    oracle::in_closure_power(&doc.ideal, g, r)?
                } else {
                    oracle::in_ordinary_power(&doc.ideal, g, r)?
                };
                if !inside {
                    witness = Some(g.clone());
                    break;
                }
            }
            let contained = witness.is_none();
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "s": s,
                        "r": r,
                        "closure": closure,
                        "contained": contained,
                        "witness": witness.as_ref().map(|w| w.exps().to_vec()),
                    })
                );
            } else {
                let target = if closure {
                    format!("closure(I^{r})")
                } else {
                    format!("I^{r}")
                };
                match &witness {
                    None => println!("I^({s}) in {target}: true"),
                    Some(w) => println!(
                        "I^({s}) in {target}: false (witness {})",
                        doc.ideal.monomial_string(w)
                    ),
                }
            }
            Ok(0)
        }
        Command::Witness { input, smax, rmax } => {
            let doc = load_ideal(&input)?;
            require_squarefree(&doc, "witness search")?;
            let result = oracle::witness_search(&doc.ideal, smax, rmax, &caps)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "bestRatio": rat_string(&result.best_ratio),
                        "record": result.record.as_ref().map(|rec| serde_json::json!({
                            "s": rec.s,
                            "r": rec.r,
                            "witness": rec.witness.as_ref().map(|w| w.exps().to_vec()),
                        })),
                        "truncated": result.truncated,
                    })
                );
            } else {
                match &result.record {
                    Some(rec) => {
                        let w = rec
                            .witness
                            .as_ref()
                            .map(|w| doc.ideal.monomial_string(w))
                            .unwrap_or_default();
                        println!(
                            "rho(I) >= {} via (s, r) = ({}, {}), witness {w}",
                            rat_string(&result.best_ratio),
                            rec.s,
                            rec.r
                        );
                    }
                    None => println!(
                        "no containment failure up to (s, r) = ({smax}, {rmax}); rho >= 1"
                    ),
                }
                for s in &result.truncated {
                    println!("note: I^({s}) exceeded the generator cap and was skipped");
                }
            }
            if result.truncated.is_empty() {
                Ok(0)
            } else {
                // Partial sweep: loud and nonzero.
                Ok(4)
            }
        }
        Command::Kr { input, r, scap } => {
            let doc = load_ideal(&input)?;
            let n = doc.ideal.num_vars() as u64;
            let scap = scap.unwrap_or(r + n - 1);
            let kr = oracle::compute_kr(&doc.ideal, r, scap, &caps)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "r": r,
                        "kr": kr,
                        "brianconSkodaFallback": r + n - 1,
                    })
                );
            } else {
                match kr {
                    Some(k) => println!("K_{r} = {k}"),
                    None => println!(
                        "K_{r} not found for s <= {scap}; r + n - 1 = {} always works",
                        r + n - 1
                    ),
                }
            }
            Ok(0)
        }
    }
}

fn rho_a_by_method(doc: &IdealDocument, method: Method) -> Result<(Rat, Option<bool>), Error> {
    match method {
        Method::Facets => Ok((invariants::rho_a_facets(doc)?.0, None)),
        Method::Recursive => Ok((invariants::rho_a_recursive(&doc.ideal)?, None)),
        Method::Both => {
            let facets = invariants::rho_a_facets(doc)?.0;
            let mut recursive = invariants::rho_a_recursive(&doc.ideal)?;
            // Test hook: lets the suite exercise the cross-check failure
            // path, which is unreachable on real input.
            if std::env::var("RESURGE_FAULT_INJECT").as_deref() == Ok("method-disagree") {
                recursive += Rat::one();
            }
            if facets != recursive {
                return Err(Error::Internal(format!(
                    "method disagreement: facets give {}, recursion gives {}",
                    rat_string(&facets),
                    rat_string(&recursive)
                )));
            }
            Ok((facets, Some(true)))
        }
    }
}

fn print_report(doc: &IdealDocument, report: &invariants::InvariantReport) {
    println!("ideal      = {}", doc.ideal);
    println!("alpha      = {}", report.alpha);
    println!("omega      = {}", report.omega);
    println!("alphaHat   = {}", rat_string(&report.alpha_hat));
    println!("rhoA       = {}", rat_string(&report.rho_a));
    println!(
        "rhoA >= alpha/alphaHat = {}",
        rat_string(&report.lower_bound)
    );
    if let Some(upper) = &report.rho_upper {
        println!("rho  <= {}", rat_string(upper));
    }
    if let Some(chi) = &report.chi_f {
        println!("chiF       = {}", rat_string(chi));
    }
    match report.method_agreement {
        Some(agree) => println!("method agreement (facets vs recursion): {agree}"),
        None => println!("method agreement: n/a (recursion needs squarefree input)"),
    }
    println!("Newton facets with skew data (vI / vHat = vA):");
    for e in &report.entries {
        let h = crate::polyhedra::HalfSpace::new(e.valuation.clone(), e.v_ideal.clone())
            .expect("entry offsets are nonnegative");
        println!(
            "  {:<30} vHat = {:<8} vA = {}",
            h.render(doc.ideal.vars()),
            rat_string(&e.v_hat),
            rat_string(&e.v_a)
        );
    }
}
