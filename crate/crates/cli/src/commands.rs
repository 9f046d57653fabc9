use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use qgarnier::catalog::{self, catalog_to_json, Catalog, GarnierName};
use qgarnier::derive::{run_pipeline, DerivationReport, DeriveError, FlowConvention, PipelineConfig};
use qgarnier::verify::{
    classify_diff, compare_reference, run_suite, summary_markdown, summary_text, CheckKind, DiffClass, SuiteInput,
};
use qgarnier::weyl::json::element_to_json;
use qgarnier::weyl::VarSet;

use crate::render;
use crate::{CatalogArgs, DeriveArgs, ExportArgs, Format, VerifyArgs, What};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn allow(format: Format, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
        Err(CliError::Usage(format!(
            "{command} supports --format {}",
            names.join(", ")
        )))
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub struct Derived {
    pub system: GarnierName,
    pub flow: usize,
    pub convention: FlowConvention,
    pub result: Result<DerivationReport, DeriveError>,
}

impl Derived {
    pub fn reference_class(&self) -> Option<DiffClass> {
        let r = self.result.as_ref().ok()?;
        Some(classify_diff(&r.hamiltonian, catalog::reference_hamiltonian(self.system, self.flow)))
    }

    /// Unique and equal to the reference up to registered errata.
    pub fn ok(&self) -> bool {
        match (&self.result, self.reference_class()) {
            (Ok(r), Some(c)) => r.is_unique() && c.is_ok(),
            _ => false,
        }
    }
}

/// Runs the pipeline for every (system, flow) pair; the result order follows
/// the catalog whatever the thread count.
pub fn derive_all(systems: &[GarnierName], flow: Option<u8>, convention: FlowConvention) -> Vec<Derived> {
    let flows: Vec<usize> = match flow {
        Some(f) => vec![f as usize],
        None => vec![1, 2],
    };
    let items: Vec<(GarnierName, usize)> = systems.iter().flat_map(|s| flows.iter().map(move |f| (*s, *f))).collect();
    let cfg = PipelineConfig {
        convention,
        ..Default::default()
    };
    items
        .par_iter()
        .map(|&(system, flow)| Derived {
            system,
            flow,
            convention,
            result: run_pipeline(system, flow, &cfg),
        })
        .collect()
}

pub fn derive(args: &DeriveArgs) -> Result<bool, CliError> {
    allow(args.format, &[Format::Text, Format::Json, Format::Latex], "derive")?;
    let derived = derive_all(&args.common.systems(), args.flow, args.convention);
    let text = match args.format {
        Format::Json => json_text(&Value::Array(derived.iter().map(derived_json).collect())),
        Format::Latex => derived.iter().map(render::derived_latex).collect(),
        _ => derived.iter().map(render::derived_text).collect::<Vec<_>>().join("\n"),
    };
    write_out(args.common.output.as_deref(), &text)?;
    Ok(derived.iter().all(Derived::ok))
}

fn derived_json(d: &Derived) -> Value {
    match &d.result {
        Ok(r) => {
            let mut v = r.to_json();
            let reference = catalog::reference_hamiltonian(d.system, d.flow);
            let diff = compare_reference(&r.hamiltonian, reference);
            v["reference"] = json!({
                "verdict": render::class_text(&d.reference_class().expect("derivation succeeded")),
                "diff": diff.to_json(),
            });
            v["ok"] = Value::Bool(d.ok());
            v
        }
        Err(e) => json!({
            "system": d.system.as_str(),
            "flow": d.flow,
            "flow_convention": d.convention.as_str(),
            "error": e.to_string(),
            "ok": false,
        }),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<bool, CliError> {
    allow(args.format, &[Format::Text, Format::Json, Format::Markdown], "verify")?;
    let checks = if args.checks.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        args.checks.clone()
    };
    let input = SuiteInput {
        systems: args.common.systems(),
        checks,
        convention: args.convention,
        seed: args.seed,
        samples: args.samples,
    };
    let reports = run_suite(&input).map_err(|e| CliError::Failed(e.to_string()))?;
    let ok = reports.iter().all(|r| r.verdict.is_ok());
    let text = match args.format {
        Format::Json => json_text(&json!({
            "flow_convention": args.convention.as_str(),
            "seed": args.seed,
            "samples": args.samples,
            "ok": ok,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        Format::Markdown => {
            let mut s = summary_markdown(&reports);
            for r in reports.iter().filter(|r| !matches!(r.verdict, qgarnier::verify::Verdict::Pass)) {
                s.push_str(&format!("\n- `{}` {}: {}", r.check, r.subject, r.verdict));
            }
            s.push('\n');
            s
        }
        _ => {
            let mut s: String = reports.iter().map(|r| r.to_text() + "\n").collect();
            s.push('\n');
            s.push_str(&summary_text(&reports));
            s
        }
    };
    write_out(args.common.output.as_deref(), &text)?;
    Ok(ok)
}

fn selected_catalog(systems: &[GarnierName]) -> Catalog {
    Catalog {
        systems: systems.iter().map(|s| catalog::catalog().system(*s).clone()).collect(),
    }
}

fn errata_json(systems: &[GarnierName]) -> Value {
    let entries: Vec<Value> = systems
        .iter()
        .flat_map(|s| catalog::errata(*s))
        .map(|e| serde_json::to_value(e).expect("errata serialize"))
        .collect();
    Value::Array(entries)
}

pub fn catalog(args: &CatalogArgs) -> Result<bool, CliError> {
    allow(args.format, &[Format::Text, Format::Json], "catalog")?;
    let systems = args.common.systems();
    let text = match args.format {
        Format::Json => {
            let mut v = catalog_to_json(&selected_catalog(&systems));
            v["errata"] = errata_json(&systems);
            json_text(&v)
        }
        _ => systems.iter().map(|s| render::catalog_text(*s)).collect::<Vec<_>>().join("\n"),
    };
    write_out(args.common.output.as_deref(), &text)?;
    Ok(true)
}

pub fn export(args: &ExportArgs) -> Result<bool, CliError> {
    allow(args.format, &[Format::Json, Format::Latex], "export")?;
    let systems = args.common.systems();
    let with_h = matches!(args.what, What::Hamiltonians | What::All);
    let with_c = matches!(args.what, What::Catalog | What::All);
    let derived = if with_h {
        derive_all(&systems, args.flow, args.convention)
    } else {
        Vec::new()
    };
    if let Some(d) = derived.iter().find(|d| d.result.is_err()) {
        let e = d.result.as_ref().expect_err("checked");
        return Err(CliError::Failed(format!("{} H{}: {e}", d.system, d.flow)));
    }
    let text = match args.format {
        Format::Json => {
            let mut v = json!({});
            if with_h {
                v["hamiltonians"] = Value::Array(
                    derived
                        .iter()
                        .map(|d| {
                            let h = &d.result.as_ref().expect("checked").hamiltonian;
                            json!({
                                "system": d.system.as_str(),
                                "flow": d.flow,
                                "flow_convention": d.convention.as_str(),
                                "element": element_to_json(h),
                                "text": h.to_text(VarSet::Old),
                            })
                        })
                        .collect(),
                );
            }
            if with_c {
                v["catalog"] = catalog_to_json(&selected_catalog(&systems));
            }
            json_text(&v)
        }
        _ => {
            let mut s = String::new();
            if with_h {
                s.extend(derived.iter().map(render::derived_latex));
            }
            if with_c {
                s.extend(systems.iter().map(|sys| render::catalog_latex(*sys)));
            }
            s
        }
    };
    write_out(args.common.output.as_deref(), &text)?;
    Ok(true)
}
