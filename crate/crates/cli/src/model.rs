//! Model files: spaces, maps and predicates in JSON, resolved by label.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use kh_tripos::logic::Model;
use kh_tripos::topology::{product_all, SpaceDescriptor, DEFAULT_POINT_CAP};
use kh_tripos::{ContMap, Error, FinSpace, Space};

use crate::error::InputError;

const EXAMPLE: &str = include_str!("../models/example.json");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    #[serde(default)]
    spaces: Vec<SpaceEntry>,
    #[serde(default)]
    maps: Vec<MapEntry>,
    #[serde(default)]
    predicates: Vec<PredicateEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceEntry {
    name: String,
    points: Vec<String>,
    #[serde(default)]
    opens: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapEntry {
    name: String,
    dom: String,
    cod: String,
    table: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Signature {
    One(String),
    Many(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PointRef {
    Label(String),
    Tuple(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PredicateEntry {
    name: String,
    space: Signature,
    extent: Vec<PointRef>,
}

/// A validated model: spaces in file order, maps, and the logic model
/// that formulas are evaluated in.
#[derive(Debug, Clone)]
pub struct LoadedModel {
    pub spaces: Vec<Space>,
    pub maps: Vec<ContMap>,
    pub logic: Model,
}

impl LoadedModel {
    pub fn space(&self, name: &str) -> Result<&Space, InputError> {
        self.spaces
            .iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| InputError::Schema(format!("unknown space `{name}`")))
    }
}

pub fn load_model(path: &Path) -> Result<LoadedModel, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_model(&text)
}

/// The bundled example model, used when no `--model` is given.
pub fn example_model() -> LoadedModel {
    parse_model(EXAMPLE).expect("bundled example model is valid")
}

fn validation(item: String, e: Error) -> InputError {
    InputError::Validation {
        item,
        message: e.to_string(),
    }
}

fn resolve(space: &Space, label: &str, item: &str) -> Result<usize, InputError> {
    space.index_of(label).ok_or_else(|| {
        InputError::Schema(format!(
            "{item}: `{label}` is not a point of `{}`",
            space.name()
        ))
    })
}

pub fn parse_model(text: &str) -> Result<LoadedModel, InputError> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| InputError::Schema(e.to_string()))?;

    let mut by_name: BTreeMap<String, Space> = BTreeMap::new();
    let mut spaces = Vec::new();
    for entry in file.spaces {
        let item = format!("space `{}`", entry.name);
        if by_name.contains_key(&entry.name) {
            return Err(InputError::Schema(format!("{item} is declared twice")));
        }
        let d = SpaceDescriptor {
            name: entry.name.clone(),
            points: entry.points,
            opens: entry.opens,
        };
        let s = FinSpace::from_descriptor(&d).map_err(|e| validation(item, e))?;
        by_name.insert(entry.name, s.clone());
        spaces.push(s);
    }
    let lookup = |name: &str, item: &str| {
        by_name.get(name).cloned().ok_or_else(|| {
            InputError::Schema(format!("{item} refers to undeclared space `{name}`"))
        })
    };

    let mut maps: Vec<ContMap> = Vec::new();
    for entry in file.maps {
        let item = format!("map `{}`", entry.name);
        if maps.iter().any(|m| m.name() == entry.name) {
            return Err(InputError::Schema(format!("{item} is declared twice")));
        }
        let dom = lookup(&entry.dom, &item)?;
        let cod = lookup(&entry.cod, &item)?;
        let table = entry
            .table
            .iter()
            .map(|l| resolve(&cod, l, &item))
            .collect::<Result<Vec<_>, _>>()?;
        let map = ContMap::new(entry.name.clone(), dom.clone(), cod.clone(), table).map_err(|e| {
            match e {
                // Name the failing open by its labels.
                Error::NotContinuous { open, preimage, .. } => InputError::Validation {
                    item: item.clone(),
                    message: format!(
                        "not continuous: the preimage {} of the open {} of `{}` is not open in `{}`",
                        fmt_labels(&dom, &preimage),
                        fmt_labels(&cod, &open),
                        cod.name(),
                        dom.name()
                    ),
                },
                other => validation(item.clone(), other),
            }
        })?;
        maps.push(map);
    }

    let mut logic = Model::new();
    for s in &spaces {
        logic.add_space(s.clone());
    }
    let mut seen = Vec::new();
    for entry in file.predicates {
        let item = format!("predicate `{}`", entry.name);
        if seen.contains(&entry.name) {
            return Err(InputError::Schema(format!("{item} is declared twice")));
        }
        seen.push(entry.name.clone());
        let names = match entry.space {
            Signature::One(n) => vec![n],
            Signature::Many(ns) => ns,
        };
        let signature = names
            .iter()
            .map(|n| lookup(n, &item))
            .collect::<Result<Vec<_>, _>>()?;
        let prod = product_all(&signature, DEFAULT_POINT_CAP).map_err(|e| validation(item.clone(), e))?;
        let mut extent = Vec::with_capacity(entry.extent.len());
        for point in &entry.extent {
            let labels: Vec<&str> = match point {
                PointRef::Label(l) => vec![l.as_str()],
                PointRef::Tuple(ls) => ls.iter().map(String::as_str).collect(),
            };
            if labels.len() != signature.len() {
                return Err(InputError::Schema(format!(
                    "{item}: point {labels:?} does not have {} coordinate(s)",
                    signature.len()
                )));
            }
            let coords = labels
                .iter()
                .zip(&signature)
                .map(|(l, s)| resolve(s, l, &item))
                .collect::<Result<Vec<_>, _>>()?;
            extent.push(prod.index(&coords));
        }
        logic
            .add_predicate(entry.name.clone(), signature, &extent)
            .map_err(|e| match e {
                Error::NotClopen { extent, .. } => InputError::Validation {
                    item: item.clone(),
                    message: format!(
                        "extent {} is not clopen in `{}`",
                        fmt_labels(&prod.space, &extent),
                        prod.space.name()
                    ),
                },
                other => validation(item.clone(), other),
            })?;
    }
    Ok(LoadedModel {
        spaces,
        maps,
        logic,
    })
}

fn fmt_labels(space: &Space, points: &[usize]) -> String {
    let labels: Vec<&str> = points.iter().map(|&p| space.label(p)).collect();
    format!("{{{}}}", labels.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_loads() {
        let m = example_model();
        assert_eq!(m.spaces.len(), 4);
        assert_eq!(m.maps.len(), 5);
        assert!(m.logic.predicate("near").is_ok());
    }

    #[test]
    fn one_discrete_space() {
        let m = parse_model(r#"{"spaces":[{"name":"X","points":["a"]}]}"#).unwrap();
        assert!(m.maps.is_empty());
        assert!(m.spaces[0].is_discrete());
    }

    #[test]
    fn discontinuous_map_names_the_open() {
        let text = r#"{
            "spaces": [
                {"name": "T", "points": ["a", "b"], "opens": [[], [0], [0, 1]]},
                {"name": "S", "points": ["0", "1"], "opens": [[], [1], [0, 1]]}
            ],
            "maps": [{"name": "h", "dom": "T", "cod": "S", "table": ["0", "1"]}]
        }"#;
        match parse_model(text).unwrap_err() {
            InputError::Validation { item, message } => {
                assert_eq!(item, "map `h`");
                assert!(message.contains("the open {1} of `S`"), "{message}");
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn undeclared_space_is_a_schema_error() {
        let text = r#"{"maps": [{"name": "h", "dom": "X", "cod": "X", "table": []}]}"#;
        assert!(matches!(parse_model(text), Err(InputError::Schema(_))));
    }

    #[test]
    fn non_topology_is_a_validation_error() {
        let text = r#"{"spaces": [{"name": "T", "points": ["a", "b", "c"], "opens": [[], [0], [1], [0, 1, 2]]}]}"#;
        assert!(matches!(parse_model(text), Err(InputError::Validation { .. })));
    }

    #[test]
    fn non_clopen_predicate_rejected() {
        let text = r#"{
            "spaces": [{"name": "S", "points": ["0", "1"], "opens": [[], [1], [0, 1]]}],
            "predicates": [{"name": "up", "space": "S", "extent": ["1"]}]
        }"#;
        assert!(matches!(parse_model(text), Err(InputError::Validation { .. })));
    }
}
