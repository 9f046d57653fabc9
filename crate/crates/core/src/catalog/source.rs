//! Line-oriented reader for the catalog text files.
//!
//! ```text
//! system G11111
//! label G(1,1,1,1,1)
//! correspondence <free text>
//! transform r1
//!   q1 = ...        (forward images q1 p1 q2 p2, then backward x1 y1 x2 y2)
//! hamiltonian 1
//!   <expression, may span several lines>
//! ```
//!
//! Lines starting with `#` are comments. An expression continues until the
//! next directive or assignment.

use super::CatalogError;

pub(crate) const IMAGE_NAMES: [&str; 8] = ["q1", "p1", "q2", "p2", "x1", "y1", "x2", "y2"];

#[derive(Clone, Debug, Default)]
pub(crate) struct SourceTransform {
    pub index: usize,
    pub images: [String; 8],
}

#[derive(Clone, Debug, Default)]
pub(crate) struct SourceSystem {
    pub name: String,
    pub label: String,
    pub correspondence: Vec<String>,
    pub transforms: Vec<SourceTransform>,
    pub hamiltonians: [String; 2],
}

enum Slot {
    None,
    Image(usize),
    Hamiltonian(usize),
}

fn bad(line: usize, msg: impl Into<String>) -> CatalogError {
    CatalogError::Format {
        line,
        message: msg.into(),
    }
}

pub(crate) fn read_system(text: &str) -> Result<SourceSystem, CatalogError> {
    let mut sys = SourceSystem::default();
    let mut slot = Slot::None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "system" => sys.name = rest.to_string(),
            "label" => sys.label = rest.to_string(),
            "correspondence" => sys.correspondence.push(rest.to_string()),
            "transform" => {
                let index = rest
                    .strip_prefix('r')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad(line_no, "transform needs a name like r1"))?;
                if index != sys.transforms.len() + 1 {
                    return Err(bad(line_no, "transforms must be numbered consecutively"));
                }
                sys.transforms.push(SourceTransform {
                    index,
                    ..Default::default()
                });
                slot = Slot::None;
            }
            "hamiltonian" => {
                let flow: usize = rest
                    .parse()
                    .ok()
                    .filter(|f| *f == 1 || *f == 2)
                    .ok_or_else(|| bad(line_no, "hamiltonian flow must be 1 or 2"))?;
                slot = Slot::Hamiltonian(flow - 1);
            }
            _ => {
                if let Some((lhs, rhs)) = line.split_once('=') {
                    let lhs = lhs.trim();
                    let k = IMAGE_NAMES
                        .iter()
                        .position(|v| *v == lhs)
                        .ok_or_else(|| bad(line_no, format!("unknown image `{lhs}`")))?;
                    let t = sys
                        .transforms
                        .last_mut()
                        .ok_or_else(|| bad(line_no, "image outside a transform block"))?;
                    if !t.images[k].is_empty() {
                        return Err(bad(line_no, format!("duplicate image `{lhs}`")));
                    }
                    t.images[k] = rhs.trim().to_string();
                    slot = Slot::Image(k);
                } else {
                    let target = match slot {
                        Slot::Image(k) => &mut sys.transforms.last_mut().expect("open transform").images[k],
                        Slot::Hamiltonian(f) => &mut sys.hamiltonians[f],
                        Slot::None => return Err(bad(line_no, "stray expression line")),
                    };
                    if !target.is_empty() {
                        target.push(' ');
                    }
                    target.push_str(line);
                }
            }
        }
    }
    if sys.name.is_empty() {
        return Err(bad(0, "missing system line"));
    }
    for t in &sys.transforms {
        if let Some(k) = t.images.iter().position(String::is_empty) {
            return Err(bad(0, format!("{} r{}: missing image {}", sys.name, t.index, IMAGE_NAMES[k])));
        }
    }
    if sys.hamiltonians.iter().any(String::is_empty) {
        return Err(bad(0, format!("{}: both hamiltonians are required", sys.name)));
    }
    Ok(sys)
}
