//! JSON documents for groups, extensions, cocycles and factor systems, and
//! the plain-text rendering of reports.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::aut::GroupAction;
use crate::catalog::by_name;
use crate::cocycles::{FactorSystem, TwoCocycle};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

/// Either nested rows or one flat row-major list.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum Table {
    Rows(Vec<Vec<usize>>),
    Flat(Vec<usize>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub cayley: Table,
}

/// A catalog name or an explicit table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Doc(GroupDoc),
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDoc {
            name: g.name().map(str::to_string),
            order: Some(g.order()),
            cayley: Table::Rows(g.rows()),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        let g = match &self.cayley {
            Table::Rows(rows) => FiniteGroup::from_rows(rows)?,
            Table::Flat(flat) => {
                let n = match self.order {
                    Some(n) => n,
                    None => (flat.len() as f64).sqrt().round() as usize,
                };
                FiniteGroup::from_flat(n, flat.clone())?
            }
        };
        if let Some(n) = self.order {
            if n != g.order() {
                return Err(Error::Parse(format!("order {n} does not match the table")));
            }
        }
        Ok(match &self.name {
            Some(name) => g.with_name(name.clone()),
            None => g,
        })
    }
}

impl GroupSpec {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Name(n) => by_name(n),
            GroupSpec::Doc(d) => d.to_group(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExtensionDoc {
    pub sub: GroupSpec,
    pub total: GroupSpec,
    pub quot: GroupSpec,
    pub incl: Vec<usize>,
    pub proj: Vec<usize>,
}

impl ExtensionDoc {
    pub fn from_extension(e: &Extension) -> Self {
        let spec = |g: &FiniteGroup| GroupSpec::Doc(GroupDoc::from_group(g));
        ExtensionDoc {
            sub: spec(e.sub()),
            total: spec(e.total()),
            quot: spec(e.quot()),
            incl: e.incl().map().to_vec(),
            proj: e.proj().map().to_vec(),
        }
    }

    pub fn to_extension(&self) -> Result<Extension> {
        let sub = self.sub.to_group()?;
        let total = self.total.to_group()?;
        let quot = self.quot.to_group()?;
        let incl = GroupHom::new(&sub, &total, self.incl.clone())?;
        let proj = GroupHom::new(&total, &quot, self.proj.clone())?;
        Extension::new(&sub, &total, &quot, incl, proj)
    }
}

/// Header `(group, coeff, action)` with a flat `G × G` table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CocycleDoc {
    pub group: GroupSpec,
    pub coeff: GroupSpec,
    pub action: Vec<Vec<usize>>,
    pub table: Vec<usize>,
}

impl CocycleDoc {
    pub fn from_cocycle(f: &TwoCocycle) -> Self {
        CocycleDoc {
            group: GroupSpec::Doc(GroupDoc::from_group(f.group())),
            coeff: GroupSpec::Doc(GroupDoc::from_group(f.coeff())),
            action: f.action().images().to_vec(),
            table: f.map().to_vec(),
        }
    }

    pub fn to_cocycle(&self) -> Result<TwoCocycle> {
        let g = self.group.to_group()?;
        let a = self.coeff.to_group()?;
        let action = GroupAction::new(&g, &a, self.action.clone())?;
        TwoCocycle::new(&action, self.table.clone())
    }
}

/// Header `(group, kernel)` with lift tables and a flat twist table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FactorSystemDoc {
    pub group: GroupSpec,
    pub kernel: GroupSpec,
    pub lift: Vec<Vec<usize>>,
    pub twist: Vec<usize>,
}

impl FactorSystemDoc {
    pub fn from_factor_system(fs: &FactorSystem) -> Self {
        FactorSystemDoc {
            group: GroupSpec::Doc(GroupDoc::from_group(fs.group())),
            kernel: GroupSpec::Doc(GroupDoc::from_group(fs.kernel())),
            lift: fs.lift().to_vec(),
            twist: fs.twist_table().to_vec(),
        }
    }

    pub fn to_factor_system(&self) -> Result<FactorSystem> {
        FactorSystem::new(&self.group.to_group()?, &self.kernel.to_group()?, self.lift.clone(), self.twist.clone())
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// A path to a group document, or a catalog name.
pub fn load_group(arg: &str) -> Result<FiniteGroup> {
    let path = Path::new(arg);
    if path.is_file() {
        parse::<GroupSpec>(&read(path)?)?.to_group()
    } else {
        by_name(arg)
    }
}

pub fn load_extension(path: &Path) -> Result<Extension> {
    parse::<ExtensionDoc>(&read(path)?)?.to_extension()
}

pub fn parse_extension(text: &str) -> Result<Extension> {
    parse::<ExtensionDoc>(text)?.to_extension()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented `key: value` lines with the same structure and order as the
/// JSON document.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    render(&v, 0, &mut out);
    out
}
