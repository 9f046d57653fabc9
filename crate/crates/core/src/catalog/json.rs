use serde_json::{json, Map, Value};

use crate::field::ParamSymbol;
use crate::weyl::json::{element_from_json, element_to_json};
use crate::weyl::{SubstMap, VarSet, WeylElement};

use super::{Catalog, CatalogError, GarnierName, GarnierType, ReferenceHamiltonian, SystemEntry, Transformation};

fn err(msg: impl Into<String>) -> CatalogError {
    CatalogError::Json(msg.into())
}

fn map_to_json(m: &SubstMap) -> Value {
    let mut obj = Map::new();
    for (name, img) in m.source.names().iter().zip(&m.images) {
        obj.insert(name.to_string(), element_to_json(img));
    }
    Value::Object(obj)
}

fn map_from_json(v: &Value, source: VarSet) -> Result<SubstMap, CatalogError> {
    let mut images = Vec::new();
    for name in source.names() {
        let e = v.get(name).ok_or_else(|| err(format!("map lacks image of {name}")))?;
        images.push(element_from_json(e).map_err(|e| err(e.to_string()))?);
    }
    Ok(SubstMap::new(source, images.try_into().expect("four images")))
}

fn params_to_json<'a>(ps: impl IntoIterator<Item = &'a ParamSymbol>) -> Value {
    Value::Array(ps.into_iter().map(|p| Value::String(p.name().to_string())).collect())
}

fn params_from_json(v: &Value) -> Result<Vec<ParamSymbol>, CatalogError> {
    v.as_array()
        .ok_or_else(|| err("parameter list"))?
        .iter()
        .map(|p| {
            p.as_str()
                .and_then(ParamSymbol::from_name)
                .ok_or_else(|| err(format!("bad parameter {p}")))
        })
        .collect()
}

fn strings(v: &Value) -> Result<Vec<String>, CatalogError> {
    v.as_array()
        .ok_or_else(|| err("string list"))?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| err("string expected")))
        .collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CatalogError> {
    v.get(key).ok_or_else(|| err(format!("missing field `{key}`")))
}

fn element(v: &Value, key: &str) -> Result<WeylElement, CatalogError> {
    element_from_json(field(v, key)?).map_err(|e| err(e.to_string()))
}

fn transformation_to_json(t: &Transformation) -> Value {
    json!({
        "index": t.index,
        "t_dependent": params_to_json(&t.t_dependent),
        "source": t.source,
        "forward": map_to_json(&t.forward),
        "backward": map_to_json(&t.backward),
        "corrected_forward": map_to_json(&t.corrected_forward),
        "corrected_backward": map_to_json(&t.corrected_backward),
    })
}

fn reference_to_json(r: &ReferenceHamiltonian) -> Value {
    json!({
        "flow": r.flow,
        "source": r.source,
        "element": element_to_json(&r.element),
        "corrected": element_to_json(&r.corrected),
    })
}

pub fn catalog_to_json(c: &Catalog) -> Value {
    let systems: Vec<Value> = c
        .systems
        .iter()
        .map(|s| {
            json!({
                "name": s.ty.name.as_str(),
                "label": s.ty.label,
                "parameters": params_to_json(&s.ty.parameters),
                "correspondence": s.ty.correspondence,
                "transformations": s.transformations.iter().map(transformation_to_json).collect::<Vec<_>>(),
                "hamiltonians": s.references.iter().map(reference_to_json).collect::<Vec<_>>(),
                "errata": super::errata(s.ty.name).iter().map(|e| e.id).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "systems": systems })
}

fn usize_field(v: &Value, key: &str) -> Result<usize, CatalogError> {
    field(v, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| err(format!("`{key}` must be an integer")))
}

pub fn catalog_from_json(v: &Value) -> Result<Catalog, CatalogError> {
    let mut systems = Vec::new();
    for s in field(v, "systems")?.as_array().ok_or_else(|| err("systems"))? {
        let name: GarnierName = field(s, "name")?.as_str().ok_or_else(|| err("name"))?.parse()?;
        let mut transformations = Vec::new();
        for t in field(s, "transformations")?.as_array().ok_or_else(|| err("transformations"))? {
            let source: [String; 8] = strings(field(t, "source")?)?
                .try_into()
                .map_err(|_| err("eight source images"))?;
            transformations.push(Transformation {
                system: name,
                index: usize_field(t, "index")?,
                forward: map_from_json(field(t, "forward")?, VarSet::Old)?,
                backward: map_from_json(field(t, "backward")?, VarSet::New)?,
                corrected_forward: map_from_json(field(t, "corrected_forward")?, VarSet::Old)?,
                corrected_backward: map_from_json(field(t, "corrected_backward")?, VarSet::New)?,
                t_dependent: params_from_json(field(t, "t_dependent")?)?.into_iter().collect(),
                source,
            });
        }
        let mut references = Vec::new();
        for r in field(s, "hamiltonians")?.as_array().ok_or_else(|| err("hamiltonians"))? {
            references.push(ReferenceHamiltonian {
                system: name,
                flow: usize_field(r, "flow")?,
                element: element(r, "element")?,
                corrected: element(r, "corrected")?,
                source: field(r, "source")?.as_str().ok_or_else(|| err("source"))?.to_string(),
            });
        }
        let ty = GarnierType {
            name,
            label: field(s, "label")?.as_str().ok_or_else(|| err("label"))?.to_string(),
            parameters: params_from_json(field(s, "parameters")?)?,
            transformation_count: transformations.len(),
            correspondence: strings(field(s, "correspondence")?)?,
        };
        systems.push(SystemEntry {
            ty,
            transformations,
            references: references.try_into().map_err(|_| err("exactly two hamiltonians"))?,
        });
    }
    Ok(Catalog { systems })
}
