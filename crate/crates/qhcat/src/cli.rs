//! Command-line front end: `validate`, `analyze`, `certify`, `standard`.
//!
//! Exit codes are a stable contract: 0 pass, 1 mathematical failure (with
//! witness data in the report), 2 usage or parse error, 3 resource bound
//! exceeded. Reports are deterministic: same input and seed give
//! byte-identical JSON. Stage order is fixed:
//! validate → split → green → algebra → radical → heredity → modules.

use crate::algebra::CategoryAlgebra;
use crate::category::FiniteCategory;
use crate::cocycle::Cocycle;
use crate::exactla::{fmt_rat, parse_rat};
use crate::generators::{self, GeneratorError};
use crate::green::{self, OrderPolicy};
use crate::heredity;
use crate::modrep::{self, ModError, ModOpts};
use serde::Serialize;
use serde_json::{json, Value};

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;
pub const DEFAULT_MAX_DIM: usize = 512;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Serialize, Clone, Debug)]
pub struct StageReport {
    pub name: String,
    pub pass: bool,
    pub data: Value,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub seed: u64,
    pub pass: bool,
    pub stages: Vec<StageReport>,
}

impl Report {
    fn new(command: &str, input: &str, seed: u64) -> Self {
        Report {
            schema_version: 1,
            command: command.to_string(),
            input: input.to_string(),
            seed,
            pass: true,
            stages: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, pass: bool, data: Value) {
        self.stages.push(StageReport {
            name: name.to_string(),
            pass,
            data,
        });
        self.pass &= pass;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "qhcat {} {} (seed {})\n",
            self.command, self.input, self.seed
        ));
        for stage in &self.stages {
            out.push_str(&format!(
                "[{}] {}\n",
                if stage.pass { "pass" } else { "FAIL" },
                stage.name
            ));
            render_value(&mut out, &stage.data, 2);
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{:indent$}{}:\n", "", k, indent = indent));
                        render_value(out, val, indent + 2);
                    }
                    _ => out.push_str(&format!("{:indent$}{}: {}\n", "", k, val, indent = indent)),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{:indent$}-\n", "", indent = indent));
                        render_value(out, item, indent + 2);
                    }
                    _ => out.push_str(&format!("{:indent$}- {}\n", "", item, indent = indent)),
                }
            }
        }
        Value::Null => {}
        _ => out.push_str(&format!("{:indent$}{}\n", "", v, indent = indent)),
    }
}

pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

#[derive(Clone, Debug)]
struct Options {
    json: bool,
    seed: u64,
    max_dim: usize,
    stage: Option<String>,
}

const STAGES: [&str; 7] = [
    "validate", "split", "green", "algebra", "radical", "heredity", "modules",
];

fn usage() -> String {
    "usage: qhcat <validate|analyze|certify|standard> <input> [--json] [--seed N] [--max-dim N] [--stage NAME]\n\
     input: a category file path, or builtin:<family>:<n>[:<p>/<q>]\n\
     builtins: builtin:t:N (transformation monoid), builtin:tl:N:D, builtin:brauer:N:D,\n\
     builtin:partition:N:D (D a fraction, default 1), builtin:n3 (non-split counterexample)\n"
        .to_string()
}

/// Entry point used by the `qhcat` binary; also callable from tests.
pub fn run(args: &[String], env_max_dim: Option<usize>) -> Outcome {
    let mut positional: Vec<&String> = Vec::new();
    let mut opts = Options {
        json: false,
        seed: DEFAULT_SEED,
        max_dim: env_max_dim.unwrap_or(DEFAULT_MAX_DIM),
        stage: None,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => opts.json = true,
            "--seed" => match it.next().and_then(|v| v.parse().ok()) {
                Some(v) => opts.seed = v,
                None => return usage_outcome("--seed needs an integer"),
            },
            "--max-dim" => match it.next().and_then(|v| v.parse().ok()) {
                Some(v) => opts.max_dim = v,
                None => return usage_outcome("--max-dim needs an integer"),
            },
            "--stage" => match it.next() {
                Some(v) if STAGES.contains(&v.as_str()) => opts.stage = Some(v.clone()),
                Some(v) => return usage_outcome(&format!("unknown stage {}", v)),
                None => return usage_outcome("--stage needs a name"),
            },
            "--help" | "-h" => {
                return Outcome {
                    exit_code: EXIT_PASS,
                    output: usage(),
                }
            }
            other if other.starts_with("--") => {
                return usage_outcome(&format!("unknown flag {}", other))
            }
            _ => positional.push(arg),
        }
    }
    if positional.len() != 2 {
        return usage_outcome("expected a command and an input");
    }
    let command = positional[0].as_str();
    let input = positional[1].as_str();
    if !["validate", "analyze", "certify", "standard"].contains(&command) {
        return usage_outcome(&format!("unknown command {}", command));
    }
    let (category, cocycle) = match resolve_input(input) {
        Ok(pair) => pair,
        Err(outcome) => return outcome,
    };
    if category.num_morphisms() > opts.max_dim {
        return Outcome {
            exit_code: EXIT_RESOURCE,
            output: format!(
                "input has {} morphisms, above the cap {} (QHCAT_MAX_DIM / --max-dim)\n",
                category.num_morphisms(),
                opts.max_dim
            ),
        };
    }
    let (exit_code, report) = pipeline(command, input, &category, &cocycle, &opts);
    let output = if opts.json {
        report.to_json() + "\n"
    } else {
        report.to_human()
    };
    Outcome { exit_code, output }
}

fn usage_outcome(msg: &str) -> Outcome {
    Outcome {
        exit_code: EXIT_USAGE,
        output: format!("error: {}\n{}", msg, usage()),
    }
}

fn resolve_input(input: &str) -> Result<(FiniteCategory, Cocycle), Outcome> {
    if let Some(rest) = input.strip_prefix("builtin:") {
        return resolve_builtin(rest);
    }
    // Files are only parsed here; the axiom checks run in the validate
    // stage so that violations land in the report with witnesses.
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            return Err(Outcome {
                exit_code: EXIT_USAGE,
                output: format!("cannot read {}: {}\n", input, e),
            })
        }
    };
    match generators::parse_from_str(&text) {
        Ok(pair) => Ok(pair),
        Err(generators::FileError::Validation(msg)) => Err(Outcome {
            exit_code: EXIT_MATH,
            output: format!("validation failed: {}\n", msg),
        }),
        Err(e) => Err(Outcome {
            exit_code: EXIT_USAGE,
            output: format!("cannot read {}: {}\n", input, e),
        }),
    }
}

fn resolve_builtin(spec: &str) -> Result<(FiniteCategory, Cocycle), Outcome> {
    let parts: Vec<&str> = spec.split(':').collect();
    let parse_n = |s: &str| -> Result<usize, Outcome> {
        s.parse()
            .map_err(|_| usage_err(&format!("bad size {:?} in builtin spec", s)))
    };
    let parse_delta = |parts: &[&str]| -> Result<crate::exactla::Rat, Outcome> {
        match parts.get(2) {
            None => Ok(crate::exactla::rat(1)),
            Some(s) => parse_rat(s)
                .ok_or_else(|| usage_err(&format!("bad fraction {:?} in builtin spec", s))),
        }
    };
    fn usage_err(msg: &str) -> Outcome {
        Outcome {
            exit_code: EXIT_USAGE,
            output: format!("error: {}\n{}", msg, usage()),
        }
    }
    fn generator_err(e: GeneratorError) -> Outcome {
        match e {
            GeneratorError::ZeroDelta => Outcome {
                exit_code: EXIT_MATH,
                output: "cocycle values must be nonzero: delta = 0 rejected\n".to_string(),
            },
            GeneratorError::SizeOutOfRange { .. } => Outcome {
                exit_code: EXIT_USAGE,
                output: format!("error: {}\n", e),
            },
        }
    }
    match parts.first().copied() {
        Some("t") => {
            let n = parse_n(parts.get(1).copied().unwrap_or(""))?;
            let c = generators::full_transformation_monoid(n).map_err(generator_err)?;
            let a = Cocycle::trivial(&c);
            Ok((c, a))
        }
        Some("tl") => {
            let n = parse_n(parts.get(1).copied().unwrap_or(""))?;
            let delta = parse_delta(&parts)?;
            let d = generators::temperley_lieb(n, delta).map_err(generator_err)?;
            Ok((d.category, d.cocycle))
        }
        Some("brauer") => {
            let n = parse_n(parts.get(1).copied().unwrap_or(""))?;
            let delta = parse_delta(&parts)?;
            let d = generators::brauer(n, delta).map_err(generator_err)?;
            Ok((d.category, d.cocycle))
        }
        Some("partition") => {
            let n = parse_n(parts.get(1).copied().unwrap_or(""))?;
            let delta = parse_delta(&parts)?;
            let d = generators::partition_category(n, delta).map_err(generator_err)?;
            Ok((d.category, d.cocycle))
        }
        Some("n3") => {
            let c = generators::n3_monoid();
            let a = Cocycle::trivial(&c);
            Ok((c, a))
        }
        _ => Err(usage_err(&format!("unknown builtin {:?}", spec))),
    }
}

/// Run the staged pipeline for one command, stopping at `--stage` or at the
/// command's natural depth; returns the exit code and the report.
fn pipeline(
    command: &str,
    input: &str,
    category: &FiniteCategory,
    cocycle: &Cocycle,
    opts: &Options,
) -> (i32, Report) {
    let mut report = Report::new(command, input, opts.seed);
    let depth = match command {
        "validate" => 1,
        "analyze" => 3,
        _ => 7,
    };
    let stage_cut = opts
        .stage
        .as_ref()
        .map(|s| STAGES.iter().position(|t| t == s).unwrap() + 1)
        .unwrap_or(7)
        .min(depth);
    let policy = OrderPolicy::default();
    let mod_opts = ModOpts::with_seed(opts.seed);

    // Stage 1: validate.
    let vreport = category.validate();
    let creport = cocycle.validate(category);
    let pass = vreport.ok() && creport.ok();
    report.push(
        "validate",
        pass,
        json!({
            "objects": category.num_objects(),
            "morphisms": category.num_morphisms(),
            "category_violations": vreport.violations.iter().map(|v| format!("{:?}", v)).collect::<Vec<_>>(),
            "cocycle_violations": creport.violations.iter().map(|v| format!("{:?}", v)).collect::<Vec<_>>(),
            "cocycle_trivial": cocycle.is_trivial(),
        }),
    );
    if !pass || stage_cut == 1 {
        return (finish(&report), report);
    }

    // Stage 2: split.
    let witness = category.is_split();
    match &witness {
        Ok(_) => report.push("split", true, json!({"split": true})),
        Err(s) => report.push(
            "split",
            false,
            json!({
                "split": false,
                "witness": category.morphism_name(*s),
                "witness_id": s,
            }),
        ),
    }
    let witness = match witness {
        Ok(w) => w,
        Err(_) => return (finish(&report), report),
    };
    if stage_cut == 2 {
        return (finish(&report), report);
    }

    // Stage 3: green.
    let jdec = match green::j_decompose(category, policy) {
        Ok(j) => j,
        Err(e) => {
            report.push("green", false, json!({"error": e.to_string()}));
            return (finish(&report), report);
        }
    };
    let local = match green::local_data(category, &jdec) {
        Ok(l) => l,
        Err(e) => {
            report.push("green", false, json!({"error": e.to_string()}));
            return (finish(&report), report);
        }
    };
    let lemmas = green::check_ideal_structure(category, &jdec, &witness);
    let hasse = hasse_relations(&jdec);
    let classes_json: Vec<Value> = (0..jdec.num_classes())
        .map(|i| {
            json!({
                "index": i + 1,
                "size": jdec.classes[i].len(),
                "rep": category.morphism_name(jdec.reps[i]),
                "idempotents": jdec.classes[i].iter().filter(|&&x| category.is_idempotent(x)).count(),
                "gamma_order": local.gamma[i].len(),
                "epsilon_size": local.epsilon[i].len(),
                "j_lower_dim": local.jset[i].len(),
            })
        })
        .collect();
    report.push(
        "green",
        lemmas.ok(),
        json!({
            "classes": classes_json,
            "hasse": hasse,
            "ideal_structure_ok": lemmas.ok(),
        }),
    );
    if stage_cut == 3 {
        return (finish(&report), report);
    }

    // Stage 4: algebra.
    let alg = CategoryAlgebra::new(category.clone(), cocycle.clone());
    let assoc = alg.associative_on_basis();
    report.push(
        "algebra",
        assoc,
        json!({
            "dim": alg.dim(),
            "associative_on_basis": assoc,
        }),
    );
    if !assoc || stage_cut == 4 {
        return (finish(&report), report);
    }

    // Stage 5: radical, two independent ways.
    let radical = alg.radical_corner_criterion(&jdec, &local);
    let oracle = alg.radical_trace_form();
    let agree = radical == oracle;
    let nilpotent = alg.is_nilpotent_subspace(&radical);
    report.push(
        "radical",
        agree && nilpotent,
        json!({
            "corner_criterion_dim": radical.dim(),
            "trace_form_dim": oracle.dim(),
            "methods_agree": agree,
            "nilpotent": nilpotent,
            "semisimple": radical.dim() == 0,
        }),
    );
    if !(agree && nilpotent) || stage_cut == 5 {
        return (finish(&report), report);
    }

    // Stage 6: heredity chain conditions.
    let chain = heredity::build_chain(&alg, &jdec);
    let mut layer_rows = Vec::new();
    let mut heredity_ok = true;
    for i in 1..=jdec.num_classes() {
        let generation = heredity::check_generation(&alg, &jdec, &chain, i);
        let (radical_square, rsq_witness) =
            heredity::check_radical_square(&alg, &chain, i, &radical);
        let (projectivity, block_dims) = heredity::check_projectivity(&alg, &local, &chain, i);
        heredity_ok &= generation && radical_square && projectivity;
        layer_rows.push(json!({
            "layer": i,
            "class_size": jdec.classes[i - 1].len(),
            "quotient_dim": chain.spans[i].dim() - chain.spans[i - 1].dim(),
            "generation": generation,
            "radical_square": radical_square,
            "radical_square_witness": rsq_witness.map(|(s, t)| {
                json!([category.morphism_name(s), category.morphism_name(t)])
            }),
            "projectivity": projectivity,
            "epsilon_size": local.epsilon[i - 1].len(),
            "block_dims": block_dims,
        }));
    }
    report.push(
        "heredity",
        heredity_ok,
        json!({
            "chain_dims": chain.dims(),
            "layers": layer_rows,
        }),
    );
    if !heredity_ok || stage_cut == 6 {
        return (finish(&report), report);
    }

    // Stage 7: modules (standard family; full detail for `standard`).
    let family = match modrep::standard_modules(&alg, &jdec, &local, &radical, &mod_opts) {
        Ok(f) => f,
        Err(e) => {
            report.push("modules", false, json!({"error": e.to_string()}));
            let code = match e {
                ModError::InstanceTooLarge(_) => EXIT_RESOURCE,
                _ => EXIT_MATH,
            };
            return (code, report);
        }
    };
    let mut ledger_rows = Vec::new();
    let mut ledger_ok = true;
    for i in 0..jdec.num_classes() {
        let quotient_dim = chain.spans[i + 1].dim() - chain.spans[i].dim();
        let eps = local.epsilon[i].len();
        let predicted: usize = family
            .layer_members(i)
            .iter()
            .map(|&a| family.n_ir[a] * family.delta[a].dim)
            .sum::<usize>()
            * eps;
        ledger_ok &= predicted == quotient_dim;
        ledger_rows.push(json!({
            "layer": i + 1,
            "quotient_dim": quotient_dim,
            "epsilon_size": eps,
            "predicted_dim": predicted,
            "ok": predicted == quotient_dim,
        }));
    }
    if command == "certify" {
        let lambda_json: Vec<Value> = (0..family.len())
            .map(|a| {
                let (i, r) = family.lambda[a];
                json!({
                    "layer": i + 1,
                    "r": r + 1,
                    "delta_dim": family.delta[a].dim,
                    "simple_dim": family.simple[a].dim,
                    "n_ir": family.n_ir[a],
                })
            })
            .collect();
        report.push(
            "modules",
            ledger_ok,
            json!({
                "lambda": lambda_json,
                "layer_ledger": ledger_rows,
            }),
        );
        return (finish(&report), report);
    }

    // `standard`: covers, decomposition matrix, axiom suite.
    let run_standard = || -> Result<(Value, bool), ModError> {
        let covers = modrep::projective_covers(&alg, &jdec, &family, &radical, &mod_opts)?;
        let dec = modrep::decomposition_matrix(&family, &covers)?;
        let axioms =
            modrep::verify_standard_axioms(&alg, &jdec, &family, &covers, &radical, &mod_opts)?;
        let ledger = modrep::check_layer_decomposition(&alg, &jdec, &local, &family, &covers)?;
        let audit: usize = (0..family.len())
            .map(|a| family.simple[a].dim * covers[a].module.dim)
            .sum();
        let audit_ok = audit == alg.dim();
        let unitriangular = check_unitriangular(&jdec, &family, &dec);
        let lambda_json: Vec<Value> = (0..family.len())
            .map(|a| {
                let (i, r) = family.lambda[a];
                json!({
                    "layer": i + 1,
                    "r": r + 1,
                    "delta_dim": family.delta[a].dim,
                    "simple_dim": family.simple[a].dim,
                    "n_ir": family.n_ir[a],
                    "end_dim": family.end_dims[a],
                    "cover_dim": covers[a].module.dim,
                })
            })
            .collect();
        let axioms_json: Vec<Value> = axioms
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "witness": c.witness,
                })
            })
            .collect();
        let ledger_json: Vec<Value> = ledger
            .rows
            .iter()
            .map(|r| {
                json!({
                    "layer": r.layer + 1,
                    "quotient_dim": r.quotient_dim,
                    "epsilon_size": r.epsilon_size,
                    "predicted_dim": r.predicted_dim,
                    "dims_ok": r.dims_match,
                    "multiplicities_ok": r.multiplicities_match,
                })
            })
            .collect();
        let pass = audit_ok && unitriangular && axioms.ok() && ledger.ok() && ledger_ok;
        Ok((
            json!({
                "lambda": lambda_json,
                "decomposition_matrix": dec,
                "unitriangular": unitriangular,
                "regular_audit_ok": audit_ok,
                "layer_ledger": ledger_json,
                "axioms": axioms_json,
            }),
            pass,
        ))
    };
    match run_standard() {
        Ok((data, pass)) => {
            report.push("modules", pass, data);
            (finish(&report), report)
        }
        Err(e) => {
            report.push("modules", false, json!({"error": e.to_string()}));
            let code = match e {
                ModError::InstanceTooLarge(_) => EXIT_RESOURCE,
                _ => EXIT_MATH,
            };
            (code, report)
        }
    }
}

fn finish(report: &Report) -> i32 {
    if report.pass {
        EXIT_PASS
    } else {
        EXIT_MATH
    }
}

/// Hasse diagram of the strict J-order (covering relations only), 1-based.
fn hasse_relations(jdec: &green::JClassDecomposition) -> Vec<[usize; 2]> {
    let n = jdec.num_classes();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !jdec.strictly_below(i, j) {
                continue;
            }
            let covered = (0..n).any(|k| jdec.strictly_below(i, k) && jdec.strictly_below(k, j));
            if !covered {
                out.push([i + 1, j + 1]);
            }
        }
    }
    out
}

/// Unitriangularity in the Λ-order: diagonal 1, off-diagonal entries only
/// where (col) < (row).
fn check_unitriangular(
    jdec: &green::JClassDecomposition,
    family: &modrep::StandardFamily,
    dec: &[Vec<usize>],
) -> bool {
    for a in 0..family.len() {
        if dec[a][a] != 1 {
            return false;
        }
        for b in 0..family.len() {
            if a != b && dec[a][b] != 0 && !family.lambda_less(jdec, b, a) {
                return false;
            }
        }
    }
    true
}

/// Format a rational for reports.
pub fn display_rat(r: &crate::exactla::Rat) -> String {
    fmt_rat(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run(&owned, None)
    }

    #[test]
    fn validate_builtin_t2_passes() {
        let out = run_args(&["validate", "builtin:t:2"]);
        assert_eq!(out.exit_code, EXIT_PASS, "{}", out.output);
    }

    #[test]
    fn validate_rejects_zero_delta() {
        let out = run_args(&["validate", "builtin:tl:3:0/1"]);
        assert_eq!(out.exit_code, EXIT_MATH, "{}", out.output);
        assert!(out.output.contains("nonzero"));
    }

    #[test]
    fn analyze_t2_reports_two_classes() {
        let out = run_args(&["analyze", "builtin:t:2", "--json"]);
        assert_eq!(out.exit_code, EXIT_PASS, "{}", out.output);
        let v: Value = serde_json::from_str(out.output.trim()).unwrap();
        let green = &v["stages"][2];
        assert_eq!(green["name"], "green");
        assert_eq!(green["data"]["classes"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn analyze_n3_fails_with_witness() {
        let out = run_args(&["analyze", "builtin:n3", "--json"]);
        assert_eq!(out.exit_code, EXIT_MATH);
        assert!(out.output.contains("\"witness\": \"x\""), "{}", out.output);
    }

    #[test]
    fn certify_tl3_passes_and_records_radical() {
        let out = run_args(&["certify", "builtin:tl:3:1/1", "--json"]);
        assert_eq!(out.exit_code, EXIT_PASS, "{}", out.output);
        let v: Value = serde_json::from_str(out.output.trim()).unwrap();
        let radical = &v["stages"][4];
        assert_eq!(radical["name"], "radical");
        assert!(radical["data"]["corner_criterion_dim"].as_u64().unwrap() > 0);
        assert_eq!(radical["data"]["methods_agree"], Value::Bool(true));
    }

    #[test]
    fn standard_t2_gold_run() {
        let out = run_args(&["standard", "builtin:t:2", "--json"]);
        assert_eq!(out.exit_code, EXIT_PASS, "{}", out.output);
        let v: Value = serde_json::from_str(out.output.trim()).unwrap();
        let modules = &v["stages"][6];
        assert_eq!(modules["name"], "modules");
        let lambda = modules["data"]["lambda"].as_array().unwrap();
        let delta_dims: Vec<u64> = lambda
            .iter()
            .map(|l| l["delta_dim"].as_u64().unwrap())
            .collect();
        assert_eq!(delta_dims, vec![2, 1, 1]);
        assert_eq!(modules["data"]["unitriangular"], Value::Bool(true));
        assert_eq!(modules["data"]["regular_audit_ok"], Value::Bool(true));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run_args(&["frobnicate", "builtin:t:2"]).exit_code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["certify"]).exit_code, EXIT_USAGE);
        assert_eq!(
            run_args(&["certify", "builtin:unknown:1"]).exit_code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["certify", "builtin:t:2", "--stage", "bogus"]).exit_code,
            EXIT_USAGE
        );
    }

    #[test]
    fn max_dim_cap_exits_3() {
        let owned: Vec<String> = ["certify", "builtin:t:3", "--max-dim", "10"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let out = run(&owned, None);
        assert_eq!(out.exit_code, EXIT_RESOURCE);
    }

    #[test]
    fn stage_flag_stops_early() {
        let out = run_args(&["certify", "builtin:t:2", "--stage", "radical", "--json"]);
        assert_eq!(out.exit_code, EXIT_PASS, "{}", out.output);
        let v: Value = serde_json::from_str(out.output.trim()).unwrap();
        assert_eq!(v["stages"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn deterministic_json_reports() {
        let a = run_args(&["standard", "builtin:brauer:2:1/1", "--json", "--seed", "7"]);
        let b = run_args(&["standard", "builtin:brauer:2:1/1", "--json", "--seed", "7"]);
        assert_eq!(a.exit_code, EXIT_PASS);
        assert_eq!(a.output, b.output);
    }
}
