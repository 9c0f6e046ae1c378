//! Command-line front end: parse group and field specs, run
//! decompositions and classifications, emit JSON records (one per line) or
//! aligned tables, and run the invariant verification suites.
//!
//! Exit codes: 0 success, 1 invalid input or failed verification,
//! 2 unsupported combination or undetermined verdict.

use clap::{Parser, Subcommand};
use schurkit::classify::{exceptional_cases, kg_kleinian, unit_group_structure, UnitOptions};
use schurkit::csa::{classify_schur_kleinian, is_kleinian_csa, Kleinian, SimpleComponent};
use schurkit::cyclofield::parse_field;
use schurkit::groups::{fingerprint, parse_group_with_cap, DEFAULT_PRODUCT_CAP};
use schurkit::grpalg::{c_set_over, wedderburn_with_options, WedderburnOptions};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "schurkit",
    about = "Exact Wedderburn decomposition, component recognition, Kleinian type and unit group classification for group algebras of metabelian groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Aligned human-readable output instead of JSON records.
    #[arg(long, global = true)]
    pretty: bool,
    /// Override the verified-d list for the SL2 free-by-free conjecture.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    sl2_verified: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum Command {
    /// Full Wedderburn decomposition of QG.
    Decompose {
        #[arg(short, long)]
        group: String,
        /// Also verify orthogonality and span dimensions of the idempotents.
        #[arg(long)]
        verify_dimensions: bool,
    },
    /// Noncommutative simple components of KG up to isomorphism.
    Cset {
        #[arg(short, long)]
        group: String,
        #[arg(short = 'k', long, default_value = "Q")]
        field: String,
    },
    /// Per-component Kleinian and Schur-Kleinian classification of KG.
    ClassifyAlgebra {
        #[arg(short, long)]
        group: String,
        #[arg(short = 'k', long, default_value = "Q")]
        field: String,
    },
    /// Is KG of Kleinian type?
    Kleinian {
        #[arg(short, long)]
        group: String,
        #[arg(short = 'k', long, default_value = "Q")]
        field: String,
    },
    /// Virtual structure of the unit group of RG for orders R in K.
    UnitStructure {
        #[arg(short, long)]
        group: String,
        #[arg(short = 'k', long, default_value = "Q")]
        field: String,
    },
    /// List the built-in family instances.
    Catalog,
    /// Run the invariant verification suites.
    Verify {
        /// all, groups, cyclofield, grpalg, csa or classify.
        #[arg(default_value = "all")]
        scope: String,
    },
}

fn size_cap() -> usize {
    std::env::var("SCHURKIT_SIZE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PRODUCT_CAP)
}

struct Output {
    pretty: bool,
}

impl Output {
    fn record(&self, v: Value) {
        if self.pretty {
            self.pretty_print(&v, 0);
            println!();
        } else {
            println!("{v}");
        }
    }

    fn pretty_print(&self, v: &Value, indent: usize) {
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    if k == "schema" {
                        continue;
                    }
                    match val {
                        Value::Array(items)
                            if items.iter().all(|i| i.is_object()) && !items.is_empty() =>
                        {
                            println!("{:indent$}{k}:", "");
                            for item in items {
                                self.pretty_print(item, indent + 2);
                            }
                        }
                        Value::Object(_) => {
                            println!("{:indent$}{k}:", "");
                            self.pretty_print(val, indent + 2);
                        }
                        _ => println!("{:indent$}{k:<20} {val}", ""),
                    }
                }
            }
            other => println!("{:indent$}{other}", ""),
        }
    }
}

fn component_record(c: &SimpleComponent) -> Value {
    let mut v = serde_json::to_value(c).expect("component serializes");
    v["display"] = json!(c.to_string());
    v
}

fn fail(code: i32, kind: &str, msg: impl std::fmt::Display) -> ! {
    eprintln!(
        "{}",
        json!({"schema": 1, "error": kind, "message": msg.to_string()})
    );
    std::process::exit(code)
}

fn main() {
    let cli = Cli::parse();
    let out = Output { pretty: cli.pretty };
    let opts = UnitOptions {
        sl2_verified: cli
            .sl2_verified
            .clone()
            .unwrap_or_else(|| UnitOptions::default().sl2_verified),
    };
    let cap = size_cap();
    let parse_g =
        |spec: &str| parse_group_with_cap(spec, cap).unwrap_or_else(|e| fail(1, "group_parse", e));
    let parse_k = |spec: &str| parse_field(spec).unwrap_or_else(|e| fail(1, "field_parse", e));
    match &cli.command {
        Command::Decompose {
            group,
            verify_dimensions,
        } => {
            let g = parse_g(group);
            let wopts = WedderburnOptions {
                verify_orthogonality: *verify_dimensions,
                verify_dimensions: *verify_dimensions,
                subgroup_cap: Some(cap),
            };
            let comps =
                wedderburn_with_options(&g, wopts).unwrap_or_else(|e| fail(2, "decompose", e));
            for c in &comps {
                let mut rec = component_record(c);
                rec["schema"] = json!(1);
                rec["kind_record"] = json!("component");
                out.record(rec);
            }
            out.record(json!({
                "schema": 1,
                "kind_record": "summary",
                "group": group,
                "order": g.order(),
                "components": comps.len(),
                "dimension_over_Q": comps.iter().map(|c| c.dimension_over_q()).sum::<usize>(),
            }));
        }
        Command::Cset { group, field } => {
            let g = parse_g(group);
            let k = parse_k(field);
            let comps = c_set_over(&k, &g).unwrap_or_else(|e| fail(2, "cset", e));
            for c in &comps {
                let mut rec = component_record(c);
                rec["schema"] = json!(1);
                rec["kind_record"] = json!("component");
                out.record(rec);
            }
            out.record(json!({
                "schema": 1,
                "kind_record": "summary",
                "group": group,
                "field": field,
                "components": comps.len(),
            }));
        }
        Command::ClassifyAlgebra { group, field } => {
            let g = parse_g(group);
            let k = parse_k(field);
            let comps = c_set_over(&k, &g).unwrap_or_else(|e| fail(2, "classify-algebra", e));
            for c in &comps {
                let mut rec = component_record(c);
                rec["schema"] = json!(1);
                rec["kind_record"] = json!("component");
                rec["kleinian"] = serde_json::to_value(is_kleinian_csa(c)).unwrap();
                rec["schur_kleinian_case"] = json!(classify_schur_kleinian(c).case());
                let (class, _) = schurkit::classify::component_unit_class(c, &opts);
                rec["unit_class"] = serde_json::to_value(class).unwrap();
                out.record(rec);
            }
        }
        Command::Kleinian { group, field } => {
            let g = parse_g(group);
            let k = parse_k(field);
            let v = kg_kleinian(&k, &g).unwrap_or_else(|e| fail(2, "kleinian", e));
            out.record(json!({
                "schema": 1,
                "kind_record": "kleinian",
                "group": group,
                "field": field,
                "kleinian": v.verdict,
                "witnesses": v.witnesses,
            }));
            if v.verdict == Kleinian::Undetermined {
                std::process::exit(2);
            }
        }
        Command::UnitStructure { group, field } => {
            let g = parse_g(group);
            let k = parse_k(field);
            let v = unit_group_structure(&k, &g, &opts)
                .unwrap_or_else(|e| fail(2, "unit-structure", e));
            let kleinian = kg_kleinian(&k, &g)
                .map(|kv| kv.verdict)
                .unwrap_or(Kleinian::Undetermined);
            let exceptional = if kleinian == Kleinian::Yes {
                exceptional_cases(&k, &g, &opts).ok().flatten()
            } else {
                None
            };
            out.record(json!({
                "schema": 1,
                "kind_record": "unit_structure",
                "group": group,
                "field": field,
                "kleinian": kleinian,
                "unit_class": v.class.as_str(),
                "components": v.components.iter().map(|(c, cl)| {
                    let mut rec = component_record(c);
                    rec["unit_class"] = serde_json::to_value(cl).unwrap();
                    rec
                }).collect::<Vec<_>>(),
                "exceptional_case": exceptional,
                "conjecture_dependent": v.conjecture_dependent,
                "notes": v.notes,
            }));
        }
        Command::Catalog => {
            for spec in schurkit::verify::catalog_small() {
                let g = parse_g(spec);
                let fp = fingerprint(&g);
                out.record(json!({
                    "schema": 1,
                    "kind_record": "catalog",
                    "spec": spec,
                    "order": fp.order,
                    "exponent": fp.exponent,
                    "abelian": fp.is_abelian,
                    "center_order": fp.center_order,
                    "derived_order": fp.derived_order,
                }));
            }
        }
        Command::Verify { scope } => {
            let results = schurkit::verify::run(scope);
            if results.is_empty() {
                fail(1, "verify", format!("unknown scope {scope:?}"));
            }
            let mut failed = 0;
            for r in &results {
                out.record(json!({
                    "schema": 1,
                    "kind_record": "check",
                    "scope": r.scope,
                    "name": r.name,
                    "pass": r.pass,
                    "detail": r.detail,
                }));
                if !r.pass {
                    failed += 1;
                }
            }
            out.record(json!({
                "schema": 1,
                "kind_record": "summary",
                "checks": results.len(),
                "failed": failed,
            }));
            if failed > 0 {
                std::process::exit(1);
            }
        }
    }
}
