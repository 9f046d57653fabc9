use qgarnier::catalog::{self, Direction, GarnierName};
use qgarnier::verify::{compare_reference, DiffClass};
use qgarnier::weyl::{SubstMap, VarSet};

use crate::commands::Derived;

pub fn class_text(c: &DiffClass) -> String {
    match c {
        DiffClass::Empty => "pass".into(),
        DiffClass::Explained(ids) => format!("expected-fail({})", ids.join(",")),
        DiffClass::Unexplained => "fail".into(),
    }
}

pub fn derived_text(d: &Derived) -> String {
    let mut s = format!("{} H{} [{}]\n", d.system, d.flow, d.convention);
    let r = match &d.result {
        Ok(r) => r,
        Err(e) => {
            s.push_str(&format!("  error: {e}\n"));
            return s;
        }
    };
    for st in &r.stages {
        s.push_str(&format!(
            "  {}: {} transformations, {} conditions, rank {}, nullity {}\n",
            st.name,
            st.transformations.len(),
            st.conditions,
            st.rank,
            st.nullity
        ));
    }
    s.push_str(&format!("  normalization: {}, final nullity {}\n", r.normalization.as_str(), r.nullity()));
    let class = d.reference_class().expect("derivation succeeded");
    s.push_str(&format!("  reference: {}", class_text(&class)));
    let diff = compare_reference(&r.hamiltonian, catalog::reference_hamiltonian(d.system, d.flow));
    if let Some(ratio) = &diff.scalar_ratio {
        s.push_str(&format!(", printed = ({}) * derived", ratio.to_text()));
    } else if !diff.is_empty() {
        let monos: Vec<String> = diff.monomials().iter().map(|m| m.render(VarSet::Old)).collect();
        s.push_str(&format!(" on {}", monos.join(", ")));
    }
    s.push('\n');
    s.push_str(&format!("  H{} = {}\n", d.flow, r.hamiltonian.to_text(VarSet::Old)));
    s
}

pub fn derived_latex(d: &Derived) -> String {
    match &d.result {
        Ok(r) => format!(
            "% {} flow t{}\n\\begin{{equation}}\nH_{{{}}} = {}\n\\end{{equation}}\n",
            d.system,
            d.flow,
            d.flow,
            r.hamiltonian.to_latex(VarSet::Old)
        ),
        Err(e) => format!("% {} flow t{}: {e}\n", d.system, d.flow),
    }
}

fn map_text(m: &SubstMap) -> String {
    let target = m.target();
    m.source
        .names()
        .iter()
        .zip(&m.images)
        .map(|(n, img)| format!("      {n} = {}\n", img.to_text(target)))
        .collect()
}

pub fn catalog_text(system: GarnierName) -> String {
    let entry = catalog::catalog().system(system);
    let params: Vec<&str> = entry.ty.parameters.iter().map(|p| p.name()).collect();
    let mut s = format!("{} ({})\n  parameters: {}\n", system, entry.ty.label, params.join(", "));
    for r in &entry.transformations {
        let times: Vec<&str> = r.t_dependent.iter().map(|t| t.name()).collect();
        let dep = if times.is_empty() { String::new() } else { format!(" [depends on {}]", times.join(", ")) };
        s.push_str(&format!("  r{}{dep}\n    forward (corrected):\n", r.index));
        s.push_str(&map_text(r.map(Direction::Forward, true)));
        s.push_str("    backward (corrected):\n");
        s.push_str(&map_text(r.map(Direction::Backward, true)));
    }
    for e in catalog::errata(system) {
        let adopted = e.adopted().map(|r| r.label).unwrap_or("-");
        s.push_str(&format!("  erratum {}: {} (adopted: {adopted})\n", e.id, e.nature));
    }
    s
}

fn map_latex(m: &SubstMap) -> String {
    let target = m.target();
    m.source
        .latex_names()
        .iter()
        .zip(&m.images)
        .map(|(n, img)| format!("{n} &= {} \\\\\n", img.to_latex(target)))
        .collect()
}

pub fn catalog_latex(system: GarnierName) -> String {
    let mut s = String::new();
    for r in catalog::transformations(system) {
        s.push_str(&format!("% {} r{}\n\\begin{{align*}}\n", system, r.index));
        s.push_str(&map_latex(r.map(Direction::Forward, true)));
        s.push_str(&map_latex(r.map(Direction::Backward, true)));
        s.push_str("\\end{align*}\n");
    }
    s
}
