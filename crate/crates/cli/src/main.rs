//! `gring`: command-line surface over the group-ring algebra library.
//!
//! Every subcommand emits JSON by default; `--format table` switches to a
//! human-readable rendering. `verify` exits nonzero when any suite case
//! fails, so the binary slots directly into CI pipelines.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gring::census::ideal_census;
use gring::classifier::classify_principal;
use gring::element::{make_element_signed, ElementData, GroupRingElement};
use gring::group::{make_group, FiniteAbelianGroup, Subgroup};
use gring::laurent::{classify_laurent, make_laurent, LaurentElement, LaurentVerdict};
use gring::quotient::{quotient_structure, verify_quotient_iso};
use gring::radicals::{jacobson_closed_form, ClosedForm};
use gring::ring::{make_ring, RingDescriptor};
use gring::subspace::{ideal_generated, in_phi_image, phi, psi, IdealSubspace};
use gring::suites::{run_suite, SuiteBounds};

#[derive(Parser)]
#[command(name = "gring", version, about = "Group-ring algebra over Z/n: subgroup-induced ideals, radicals, classifiers, censuses")]
struct Cli {
    /// Output format for every subcommand.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct RingGroupArgs {
    /// Coefficient modulus n of Z/n.
    #[arg(long)]
    modulus: u64,
    /// Cyclic factor orders of the group, e.g. `12` or `2,4`.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    group: Vec<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the principal ideal xRG of F_p C_m against the subgroup-induced family.
    ///
    /// Takes the element from --modulus/--group/--coeffs, or, when --coeffs is
    /// omitted, as a JSON object {"modulus":n,"group":[m],"coeffs":[..]} on stdin.
    Classify {
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        group: Option<Vec<u64>>,
        /// Comma-separated coefficients c_0,c_1,... in element-index order.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// Classify a principal ideal of the Laurent ring R[g, g^-1].
    ///
    /// Takes --terms as exponent:coefficient pairs (e.g. `3:1,-1:-1`), or,
    /// when omitted, a JSON object {"modulus":p,"terms":{"3":1,"-1":-1}} on
    /// stdin. Modulus 0 means integer coefficients.
    ClassifyLaurent {
        #[arg(long, default_value_t = 0)]
        modulus: u64,
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
    },
    /// Compute the induced ideal of a subgroup: the span of { h - 1 : h in N } RG.
    Phi {
        #[command(flatten)]
        ring_group: RingGroupArgs,
        /// Subgroup generators as exponent vectors, `;`-separated: `4` or `1,0;0,2`.
        #[arg(long, default_value = "")]
        subgroup_gens: String,
    },
    /// Recover the subgroup { g : g - 1 in J } from ideal generators.
    Psi {
        #[command(flatten)]
        ring_group: RingGroupArgs,
        /// Generator of the ideal as comma-separated coefficients; repeatable.
        #[arg(long, allow_hyphen_values = true, action = clap::ArgAction::Append, required = true)]
        coeffs: Vec<String>,
    },
    /// Report the nilradical of (Z/n)G: closed form when one applies, generators always.
    Radical {
        #[command(flatten)]
        ring_group: RingGroupArgs,
    },
    /// Census of the subgroup lattice, its induced ideals, and (small cases) all ideals.
    Census {
        #[command(flatten)]
        ring_group: RingGroupArgs,
    },
    /// Run a verification suite: section1 | section2 | section3 | section4 | all.
    Verify {
        suite: String,
        /// Coefficient field characteristics to sweep.
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = vec![2u64, 3, 5])]
        primes: Vec<u64>,
        /// Cap on |G| for the correspondence sweeps.
        #[arg(long, default_value_t = 24)]
        max_order: u64,
        /// Seed for the randomized membership batteries.
        #[arg(long, default_value_t = 0x1d5a)]
        seed: u64,
    },
    /// Check RG/phi(N) against R(G/N) as structure constants.
    QuotientCheck {
        #[command(flatten)]
        ring_group: RingGroupArgs,
        #[arg(long, default_value = "")]
        subgroup_gens: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command, cli.format) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, format: Format) -> Result<ExitCode, String> {
    match command {
        Command::Classify { modulus, group, coeffs } => {
            let x = element_from_args(modulus, group, coeffs)?;
            let report = classify_principal(&x).map_err(|e| e.to_string())?;
            if format == Format::Table {
                print_classify_table(&report);
            } else {
                print_json(&serde_json::to_value(&report).map_err(|e| e.to_string())?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyLaurent { modulus, terms } => {
            let x = laurent_from_args(modulus, terms)?;
            let verdict = classify_laurent(&x);
            let mut body = json!({ "verdict": verdict.label() });
            if let LaurentVerdict::InImage { power } = verdict {
                body["power"] = json!(power);
                body["subgroup"] = json!(format!("<g^{power}>"));
            }
            match format {
                Format::Table => print_pairs(flatten_object(&body)),
                Format::Json => print_json(&body),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi { ring_group, subgroup_gens } => {
            let (ring, group) = make_ring_group(&ring_group)?;
            let subgroup = parse_subgroup(&group, &subgroup_gens)?;
            let ideal = phi(&ring, &group, &subgroup).map_err(|e| e.to_string())?;
            let body = json!({
                "modulus": ring.modulus(),
                "group": group.orders(),
                "subgroup": subgroup_json(&subgroup),
                "dimension": ideal.dimension(),
                "basis": ideal.basis(),
            });
            match format {
                Format::Table => {
                    println!("subgroup elements: {:?}", subgroup.elements());
                    println!("ideal dimension:   {}", ideal.dimension());
                    print_basis(&ideal);
                }
                Format::Json => print_json(&body),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Psi { ring_group, coeffs } => {
            let (ring, group) = make_ring_group(&ring_group)?;
            let generators = coeffs
                .iter()
                .map(|s| parse_element(&ring, &group, s))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = ideal_generated(&ring, &group, &generators).map_err(|e| e.to_string())?;
            let subgroup = psi(&ideal);
            let preimage = in_phi_image(&ideal).map_err(|e| e.to_string())?;
            let body = json!({
                "modulus": ring.modulus(),
                "group": group.orders(),
                "ideal_dimension": ideal.dimension(),
                "psi": subgroup_json(&subgroup),
                "in_phi_image": preimage.is_some(),
            });
            match format {
                Format::Table => {
                    println!("ideal dimension: {}", ideal.dimension());
                    println!("psi elements:    {:?}", subgroup.elements());
                    println!("psi order:       {}", subgroup.order());
                    println!("in phi image:    {}", preimage.is_some());
                }
                Format::Json => print_json(&body),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { ring_group } => {
            let (ring, group) = make_ring_group(&ring_group)?;
            let report = jacobson_closed_form(&ring, &group);
            let closed_form = match &report.closed_form {
                ClosedForm::Zero => json!({ "tag": "zero" }),
                ClosedForm::PhiOfSylow { prime, subgroup } => json!({
                    "tag": "phi-of-sylow",
                    "prime": prime,
                    "sylow": subgroup_json(subgroup),
                }),
                ClosedForm::NoClosedFormInScope => json!({ "tag": "no-closed-form-in-scope" }),
            };
            let body = json!({
                "modulus": ring.modulus(),
                "group": group.orders(),
                "closed_form": closed_form,
                "containment_facts": report.containment_facts,
                "dimension": report.dimension(),
                "basis": report.subspace.as_ref().map(|s| s.basis().to_vec()),
                "generators": report.generators.iter().map(|x| x.coeffs().to_vec()).collect::<Vec<_>>(),
            });
            match format {
                Format::Table => {
                    println!("closed form: {}", closed_form["tag"].as_str().unwrap_or("?"));
                    if let Some(dim) = report.dimension() {
                        println!("dimension:   {dim}");
                    }
                    for fact in &report.containment_facts {
                        println!("fact: {fact}");
                    }
                    if let Some(subspace) = &report.subspace {
                        print_basis(subspace);
                    }
                }
                Format::Json => print_json(&body),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { ring_group } => {
            let (ring, group) = make_ring_group(&ring_group)?;
            let census = ideal_census(&ring, &group).map_err(|e| e.to_string())?;
            match format {
                Format::Table => {
                    println!("subgroups:  {}", census.subgroup_count);
                    match census.ideal_count {
                        Some(count) => println!("ideals:     {count} (non-unit, exhaustive scan)"),
                        None => println!("ideals:     not scanned (lattice too large)"),
                    }
                    println!("phi image:");
                    for entry in &census.phi_image {
                        println!("  N = {:?}  dim phi(N) = {}", entry.subgroup, entry.dimension);
                    }
                    if let Some(fibers) = &census.fiber_sizes {
                        println!("psi fibers:");
                        for fiber in fibers {
                            println!("  N = {:?}  ideals = {}", fiber.subgroup, fiber.count);
                        }
                    }
                }
                Format::Json => {
                    print_json(&serde_json::to_value(&census).map_err(|e| e.to_string())?)
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, primes, max_order, seed } => {
            let bounds = SuiteBounds {
                primes,
                max_group_order: max_order,
                quotient_iso_max_order: max_order.min(16),
                radical_max_order: max_order.min(12),
                seed,
            };
            let result = run_suite(&suite, &bounds).map_err(|e| e.to_string())?;
            match format {
                Format::Table => {
                    println!(
                        "suite {}: {} cases, {} failures, {} ms",
                        result.name,
                        result.cases,
                        result.failures.len(),
                        result.wall_ms
                    );
                    for failure in &result.failures {
                        println!(
                            "  FAIL {} expected={} actual={}",
                            failure.case, failure.expected, failure.actual
                        );
                    }
                }
                Format::Json => {
                    print_json(&serde_json::to_value(&result).map_err(|e| e.to_string())?)
                }
            }
            if result.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::QuotientCheck { ring_group, subgroup_gens } => {
            let (ring, group) = make_ring_group(&ring_group)?;
            let subgroup = parse_subgroup(&group, &subgroup_gens)?;
            let isomorphic =
                verify_quotient_iso(&ring, &group, &subgroup).map_err(|e| e.to_string())?;
            let ideal = phi(&ring, &group, &subgroup).map_err(|e| e.to_string())?;
            let quotient_dim = quotient_structure(&ideal).map_err(|e| e.to_string())?.dim();
            let body = json!({
                "modulus": ring.modulus(),
                "group": group.orders(),
                "subgroup": subgroup_json(&subgroup),
                "ideal_dimension": ideal.dimension(),
                "quotient_dimension": quotient_dim,
                "isomorphic_to_quotient_group_ring": isomorphic,
            });
            match format {
                Format::Table => {
                    println!("subgroup elements:  {:?}", subgroup.elements());
                    println!("ideal dimension:    {}", ideal.dimension());
                    println!("quotient dimension: {quotient_dim}");
                    println!("isomorphic:         {isomorphic}");
                }
                Format::Json => print_json(&body),
            }
            if isomorphic {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn make_ring_group(args: &RingGroupArgs) -> Result<(RingDescriptor, FiniteAbelianGroup), String> {
    let ring = make_ring(args.modulus).map_err(|e| e.to_string())?;
    let group = make_group(&args.group).map_err(|e| e.to_string())?;
    Ok((ring, group))
}

fn parse_signed_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad coefficient '{}'", t.trim())))
        .collect()
}

fn parse_element(
    ring: &RingDescriptor,
    group: &FiniteAbelianGroup,
    coeffs: &str,
) -> Result<GroupRingElement, String> {
    let signed = parse_signed_list(coeffs)?;
    make_element_signed(ring, group, &signed).map_err(|e| e.to_string())
}

fn element_from_args(
    modulus: Option<u64>,
    group: Option<Vec<u64>>,
    coeffs: Option<String>,
) -> Result<GroupRingElement, String> {
    match (modulus, group, coeffs) {
        (Some(n), Some(orders), Some(coeffs)) => {
            let ring = make_ring(n).map_err(|e| e.to_string())?;
            let group = make_group(&orders).map_err(|e| e.to_string())?;
            parse_element(&ring, &group, &coeffs)
        }
        (None, None, None) => {
            let data: ElementData = serde_json::from_str(&read_stdin()?)
                .map_err(|e| format!("bad element JSON on stdin: {e}"))?;
            GroupRingElement::try_from(data).map_err(|e| e.to_string())
        }
        _ => Err("give all of --modulus/--group/--coeffs, or none and JSON on stdin".into()),
    }
}

fn laurent_from_args(modulus: u64, terms: Option<String>) -> Result<LaurentElement, String> {
    match terms {
        Some(text) => {
            let mut pairs = Vec::new();
            for part in text.split(',').filter(|p| !p.trim().is_empty()) {
                let (exp, coeff) = part
                    .split_once(':')
                    .ok_or_else(|| format!("bad term '{part}', expected exponent:coefficient"))?;
                let exp: i64 =
                    exp.trim().parse().map_err(|_| format!("bad exponent '{}'", exp.trim()))?;
                let coeff: i64 = coeff
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad coefficient '{}'", coeff.trim()))?;
                pairs.push((exp, coeff));
            }
            make_laurent(modulus, &pairs).map_err(|e| e.to_string())
        }
        None => serde_json::from_str::<LaurentElement>(&read_stdin()?)
            .map_err(|e| format!("bad Laurent JSON on stdin: {e}")),
    }
}

fn parse_subgroup(group: &FiniteAbelianGroup, text: &str) -> Result<Subgroup, String> {
    let mut generators = Vec::new();
    for chunk in text.split(';').filter(|c| !c.trim().is_empty()) {
        let exponents = chunk
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad exponent '{}'", t.trim())))
            .collect::<Result<Vec<_>, _>>()?;
        generators.push(exponents);
    }
    group.subgroup_generated(&generators).map_err(|e| e.to_string())
}

fn subgroup_json(subgroup: &Subgroup) -> Value {
    json!({
        "elements": subgroup.elements(),
        "generators": subgroup.generators(),
        "order": subgroup.order(),
    })
}

fn read_stdin() -> Result<String, String> {
    let mut buffer = String::new();
    std::io::stdin()
        .read_to_string(&mut buffer)
        .map_err(|e| format!("failed to read stdin: {e}"))?;
    Ok(buffer)
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON value renders"));
}

fn print_basis(subspace: &IdealSubspace) {
    for row in subspace.basis() {
        let rendered: Vec<String> = row.iter().map(u64::to_string).collect();
        println!("  [{}]", rendered.join(" "));
    }
}

fn flatten_object(value: &Value) -> Vec<(String, String)> {
    match value.as_object() {
        Some(map) => map
            .iter()
            .map(|(k, v)| (k.clone(), v.as_str().map_or_else(|| v.to_string(), String::from)))
            .collect(),
        None => vec![("value".into(), value.to_string())],
    }
}

fn print_pairs(pairs: Vec<(String, String)>) {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (key, value) in pairs {
        println!("{key:width$}  {value}");
    }
}

fn print_classify_table(report: &gring::classifier::ClassificationReport) {
    let value = serde_json::to_value(report).expect("report serializes");
    print_pairs(flatten_object(&value));
}
