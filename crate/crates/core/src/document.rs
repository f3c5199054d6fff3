//! The JSON document format: a field, and named objects that refer to each other by name.
//!
//! Rationals are canonical strings (`"3"`, `"-1/2"`), prime-field elements are
//! integers in `0..p`. Structure constants are sparse integer-index tuples;
//! emission is canonical, so `emit(parse(emit(d))) == emit(d)` byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::{catalog_dk, catalog_entwining, CatalogEntry, CatalogObject};
use crate::doikoppinen::{
    alt_dk_entwining, check_cointegral, check_integral, coextension_quotient, verify_dk_compat, verify_dk_morphism,
    DkStructure, HExtension, Ingredient,
};
use crate::entwining::{verify_entwined_module, verify_entwining_morphism};
use crate::report::Report;
use crate::entwining::Entwining;
use crate::error::{expect_dim, Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::structures::{
    default_labels, Action, Algebra, Coaction, Coalgebra, ModulePresentation, PairingPresentation, Side, StructureKind,
    StructurePresentation,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Structure(StructurePresentation),
    Pairing {
        algebra: String,
        coalgebra: String,
        matrix: Matrix,
    },
    Entwining {
        algebra: String,
        coalgebra: String,
        psi: Matrix,
    },
    /// A module, comodule or entwined module. `entwining` excludes the other two references.
    Module {
        entwining: Option<String>,
        algebra: Option<String>,
        coalgebra: Option<String>,
        module: ModulePresentation,
    },
    /// Right comodule algebra `algebra` (`A -> A ⊗ H`), right module coalgebra `coalgebra` (`C ⊗ H -> C`).
    Dk {
        hopf: String,
        algebra: String,
        coaction: Matrix,
        coalgebra: String,
        action: Matrix,
    },
    /// Right module algebra `algebra` (`A ⊗ H -> A`), right comodule coalgebra `coalgebra` (`C -> C ⊗ H`).
    AltDk {
        hopf: String,
        algebra: String,
        action: Matrix,
        coalgebra: String,
        coaction: Matrix,
    },
    Extension {
        hopf: String,
        algebra: String,
        coaction: Matrix,
        integral: Option<Matrix>,
    },
    Coextension {
        hopf: String,
        coalgebra: String,
        action: Matrix,
        cointegral: Option<Matrix>,
    },
    /// A linear map between two modules.
    Morphism {
        source: String,
        target: String,
        matrix: Matrix,
    },
    EntwiningMorphism {
        source: String,
        target: String,
        gamma: Matrix,
        delta: Matrix,
    },
    DkMorphism {
        source: String,
        target: String,
        beta: Matrix,
        gamma: Matrix,
        delta: Matrix,
    },
}

impl Object {
    pub fn type_name(&self) -> &'static str {
        match self {
            Object::Structure(_) => "structure",
            Object::Pairing { .. } => "pairing",
            Object::Entwining { .. } => "entwining",
            Object::Module { .. } => "module",
            Object::Dk { .. } => "dk",
            Object::AltDk { .. } => "alt-dk",
            Object::Extension { .. } => "extension",
            Object::Coextension { .. } => "coextension",
            Object::Morphism { .. } => "morphism",
            Object::EntwiningMorphism { .. } => "entwining-morphism",
            Object::DkMorphism { .. } => "dk-morphism",
        }
    }

    fn references(&self) -> Vec<(&'static str, &str)> {
        match self {
            Object::Structure(_) => vec![],
            Object::Pairing { algebra, coalgebra, .. } | Object::Entwining { algebra, coalgebra, .. } => {
                vec![("algebra", algebra), ("coalgebra", coalgebra)]
            }
            Object::Module {
                entwining,
                algebra,
                coalgebra,
                ..
            } => [("entwining", entwining), ("algebra", algebra), ("coalgebra", coalgebra)]
                .into_iter()
                .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
                .collect(),
            Object::Dk {
                hopf, algebra, coalgebra, ..
            }
            | Object::AltDk {
                hopf, algebra, coalgebra, ..
            } => vec![("hopf", hopf), ("algebra", algebra), ("coalgebra", coalgebra)],
            Object::Extension { hopf, algebra, .. } => vec![("hopf", hopf), ("algebra", algebra)],
            Object::Coextension { hopf, coalgebra, .. } => vec![("hopf", hopf), ("coalgebra", coalgebra)],
            Object::Morphism { source, target, .. }
            | Object::EntwiningMorphism { source, target, .. }
            | Object::DkMorphism { source, target, .. } => vec![("source", source), ("target", target)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: FieldSpec,
    pub objects: BTreeMap<String, Object>,
}

type Raw4 = (usize, usize, usize, Value);
type Raw3 = (usize, usize, Value);
type Raw5 = (usize, usize, usize, usize, Value);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: u32,
    field: RawField,
    objects: BTreeMap<String, RawObject>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawField {
    Named(String),
    Prime { p: u32 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    side: Side,
    entries: Vec<Raw4>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
enum RawObject {
    Structure {
        kind: StructureKind,
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mul: Option<Vec<Raw4>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<Vec<Value>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        comul: Option<Vec<Raw4>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counit: Option<Vec<Value>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode: Option<Vec<Raw3>>,
    },
    Pairing {
        algebra: String,
        coalgebra: String,
        matrix: Vec<Raw3>,
    },
    Entwining {
        algebra: String,
        coalgebra: String,
        psi: Vec<Raw5>,
    },
    Module {
        dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        entwining: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        algebra: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coalgebra: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        action: Option<RawAction>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coaction: Option<RawAction>,
    },
    Dk {
        hopf: String,
        algebra: String,
        coaction: Vec<Raw4>,
        coalgebra: String,
        action: Vec<Raw4>,
    },
    AltDk {
        hopf: String,
        algebra: String,
        action: Vec<Raw4>,
        coalgebra: String,
        coaction: Vec<Raw4>,
    },
    Extension {
        hopf: String,
        algebra: String,
        coaction: Vec<Raw4>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        integral: Option<Vec<Raw3>>,
    },
    Coextension {
        hopf: String,
        coalgebra: String,
        action: Vec<Raw4>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cointegral: Option<Vec<Raw3>>,
    },
    Morphism {
        source: String,
        target: String,
        matrix: Vec<Raw3>,
    },
    EntwiningMorphism {
        source: String,
        target: String,
        gamma: Vec<Raw3>,
        delta: Vec<Raw3>,
    },
    DkMorphism {
        source: String,
        target: String,
        beta: Vec<Raw3>,
        gamma: Vec<Raw3>,
        delta: Vec<Raw3>,
    },
}

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("{path}: {msg}"))
}

fn scalar_in(fs: FieldSpec, v: &Value, path: &str) -> Result<Scalar> {
    match (fs, v) {
        (FieldSpec::Rational, Value::String(s)) => fs.parse_scalar(s).map_err(|e| at(path, e)),
        (FieldSpec::Prime(_), Value::Number(n)) => {
            let text = n.to_string();
            fs.parse_scalar(&text).map_err(|e| at(path, e))
        }
        (FieldSpec::Rational, _) => Err(at(path, format!("rational scalars are strings, found {v}"))),
        (FieldSpec::Prime(_), _) => Err(at(path, format!("prime-field scalars are integers, found {v}"))),
    }
}

fn scalar_out(x: &Scalar) -> Value {
    match x {
        Scalar::Rat(r) => Value::String(r.to_string()),
        Scalar::Mod { value, .. } => Value::from(*value),
    }
}

fn vector_in(fs: FieldSpec, v: &[Value], len: usize, path: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(at(path, format!("expected {len} scalars, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, x)| scalar_in(fs, x, &format!("{path}[{i}]"))).collect()
}

fn quads_in(fs: FieldSpec, v: &[Raw4], path: &str) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    v.iter()
        .enumerate()
        .map(|(t, (a, b, c, x))| Ok((*a, *b, *c, scalar_in(fs, x, &format!("{path}[{t}]"))?)))
        .collect()
}

fn quads_out(v: &[(usize, usize, usize, Scalar)]) -> Vec<Raw4> {
    v.iter().map(|(a, b, c, x)| (*a, *b, *c, scalar_out(x))).collect()
}

fn matrix_in(fs: FieldSpec, v: &[Raw3], rows: usize, cols: usize, path: &str) -> Result<Matrix> {
    let mut m = Matrix::zeros(fs, rows, cols);
    for (t, (i, j, x)) in v.iter().enumerate() {
        if *i >= rows || *j >= cols {
            return Err(at(&format!("{path}[{t}]"), format!("index ({i}, {j}) out of range {rows}x{cols}")));
        }
        m.entry_mut(*i, *j).add_assign_ref(&scalar_in(fs, x, &format!("{path}[{t}]"))?);
    }
    Ok(m)
}

fn matrix_out(m: &Matrix) -> Vec<Raw3> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            if !x.is_zero() {
                out.push((i, j, scalar_out(x)));
            }
        }
    }
    out
}

fn action_in(fs: FieldSpec, raw: &[Raw4], dim: usize, other: usize, path: &str) -> Result<Matrix> {
    let entries = quads_in(fs, raw, path)?;
    Ok(Action::from_entries(fs, Side::Right, dim, other, &entries).map_err(|e| at(path, e))?.map)
}

fn coaction_in(fs: FieldSpec, raw: &[Raw4], dim: usize, other: usize, path: &str) -> Result<Matrix> {
    let entries = quads_in(fs, raw, path)?;
    Ok(Coaction::from_entries(fs, Side::Right, dim, other, &entries).map_err(|e| at(path, e))?.map)
}

fn action_out(map: &Matrix, other: usize) -> Vec<Raw4> {
    quads_out(&Action::new(Side::Right, map.clone()).entries(other))
}

fn coaction_out(map: &Matrix, other: usize) -> Vec<Raw4> {
    quads_out(&Coaction::new(Side::Right, map.clone()).entries(other))
}

impl Document {
    pub fn new(field: FieldSpec) -> Self {
        Document {
            field,
            objects: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, name: impl Into<String>, object: Object) {
        self.objects.insert(name.into(), object);
    }

    pub fn get(&self, name: &str) -> Result<&Object> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::Malformed(format!("no object named '{name}'")))
    }

    pub fn structure(&self, name: &str) -> Result<&StructurePresentation> {
        match self.get(name)? {
            Object::Structure(s) => Ok(s),
            other => Err(wrong_type(name, "structure", other)),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<&Algebra> {
        self.structure(name)?.algebra()
    }

    pub fn coalgebra(&self, name: &str) -> Result<&Coalgebra> {
        self.structure(name)?.coalgebra()
    }

    pub fn pairing(&self, name: &str) -> Result<PairingPresentation> {
        match self.get(name)? {
            Object::Pairing {
                algebra,
                coalgebra,
                matrix,
            } => PairingPresentation::new(self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone(), matrix.clone()),
            other => Err(wrong_type(name, "pairing", other)),
        }
    }

    pub fn entwining(&self, name: &str) -> Result<Entwining> {
        match self.get(name)? {
            Object::Entwining { algebra, coalgebra, psi } => {
                Entwining::new(self.algebra(algebra)?.clone(), self.coalgebra(coalgebra)?.clone(), psi.clone())
            }
            other => Err(wrong_type(name, "entwining", other)),
        }
    }

    /// The module and the name of the entwining it is entwined over, if any.
    pub fn module(&self, name: &str) -> Result<(&ModulePresentation, Option<&str>)> {
        match self.get(name)? {
            Object::Module { module, entwining, .. } => Ok((module, entwining.as_deref())),
            other => Err(wrong_type(name, "module", other)),
        }
    }

    pub fn dk(&self, name: &str) -> Result<DkStructure> {
        match self.get(name)? {
            Object::Dk {
                hopf,
                algebra,
                coaction,
                coalgebra,
                action,
            } => DkStructure::new(
                self.structure(hopf)?.clone(),
                self.algebra(algebra)?.clone(),
                coaction.clone(),
                self.coalgebra(coalgebra)?.clone(),
                action.clone(),
            ),
            other => Err(wrong_type(name, "dk", other)),
        }
    }

    pub fn alt_dk(&self, name: &str) -> Result<(StructurePresentation, Ingredient, Ingredient)> {
        match self.get(name)? {
            Object::AltDk {
                hopf,
                algebra,
                action,
                coalgebra,
                coaction,
            } => Ok((
                self.structure(hopf)?.clone(),
                Ingredient::ModuleAlgebra {
                    side: Side::Right,
                    algebra: self.algebra(algebra)?.clone(),
                    action: action.clone(),
                },
                Ingredient::ComoduleCoalgebra {
                    side: Side::Right,
                    coalgebra: self.coalgebra(coalgebra)?.clone(),
                    coaction: coaction.clone(),
                },
            )),
            other => Err(wrong_type(name, "alt-dk", other)),
        }
    }

    /// Names of objects of the given type, in name order.
    pub fn names_of(&self, type_name: &str) -> Vec<&str> {
        self.objects
            .iter()
            .filter(|(_, o)| o.type_name() == type_name)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Objects no other object refers to, in name order.
    pub fn roots(&self) -> Vec<&str> {
        let referenced: Vec<&str> = self.objects.values().flat_map(|o| o.references().into_iter().map(|(_, r)| r)).collect();
        self.objects
            .keys()
            .map(String::as_str)
            .filter(|n| !referenced.contains(n))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Document> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut value = match value {
            Value::Object(m) => m,
            _ => return Err(at("document", "expected an object")),
        };
        let objects = match value.remove("objects") {
            Some(Value::Object(m)) => m,
            Some(_) => return Err(at("objects", "expected an object")),
            None => return Err(at("document", "missing field `objects`")),
        };
        value.insert("objects".into(), Value::Object(Default::default()));
        let mut raw: RawDocument = serde_json::from_value(Value::Object(value)).map_err(|e| at("document", e))?;
        for (name, o) in objects {
            let obj = serde_json::from_value(o).map_err(|e| at(&format!("objects.{name}"), e))?;
            raw.objects.insert(name, obj);
        }
        if raw.version != FORMAT_VERSION {
            return Err(at("version", format!("unsupported version {}", raw.version)));
        }
        let field = match raw.field {
            RawField::Named(ref s) if s == "Q" => FieldSpec::Rational,
            RawField::Named(s) => return Err(at("field", format!("unknown field '{s}'"))),
            RawField::Prime { p } => FieldSpec::prime(p).map_err(|e| at("field", e))?,
        };
        let mut doc = Document::new(field);
        let mut pending: Vec<(String, RawObject)> = raw.objects.into_iter().collect();
        // Objects are built after the ones they refer to.
        let mut progress = true;
        while !pending.is_empty() && progress {
            progress = false;
            let mut rest = Vec::new();
            for (name, obj) in pending {
                let refs = raw_references(&obj);
                if refs.iter().all(|(_, r)| doc.objects.contains_key(*r)) {
                    let built = doc.build(&name, &obj)?;
                    doc.objects.insert(name, built);
                    progress = true;
                } else {
                    rest.push((name, obj));
                }
            }
            pending = rest;
        }
        if let Some((name, obj)) = pending.first() {
            let names: Vec<&str> = pending.iter().map(|(n, _)| n.as_str()).collect();
            let (field, target) = raw_references(obj)
                .into_iter()
                .find(|(_, r)| !doc.objects.contains_key(*r))
                .expect("unresolved reference");
            if names.contains(&target) {
                return Err(Error::DanglingReference(format!("objects.{name}.{field}: reference cycle through '{target}'")));
            }
            return Err(Error::DanglingReference(format!("objects.{name}.{field}: no object named '{target}'")));
        }
        Ok(doc)
    }

    fn build(&self, name: &str, raw: &RawObject) -> Result<Object> {
        let fs = self.field;
        let path = |f: &str| format!("objects.{name}.{f}");
        let dim_of = |r: &str| -> Result<usize> {
            match self.get(r)? {
                Object::Structure(s) => Ok(s.dim()),
                Object::Module { module, .. } => Ok(module.dim),
                other => Err(at(&format!("objects.{name}"), format!("'{r}' is a {}", other.type_name()))),
            }
        };
        let need = |r: &str, field: &str, part: fn(&StructurePresentation) -> bool, what: &str| -> Result<()> {
            let s = self.structure(r).map_err(|e| at(&path(field), e))?;
            if part(s) {
                Ok(())
            } else {
                Err(at(&path(field), format!("'{r}' has no {what}")))
            }
        };
        let has_alg = |s: &StructurePresentation| s.algebra.is_some();
        let has_co = |s: &StructurePresentation| s.coalgebra.is_some();
        let has_both = |s: &StructurePresentation| s.algebra.is_some() && s.coalgebra.is_some();
        Ok(match raw {
            RawObject::Structure {
                kind,
                dim,
                labels,
                mul,
                unit,
                comul,
                counit,
                antipode,
            } => {
                let n = *dim;
                let labels = labels.clone().unwrap_or_else(|| default_labels("e", n));
                if labels.len() != n {
                    return Err(at(&path("labels"), format!("expected {n} labels, found {}", labels.len())));
                }
                let algebra = match (mul, unit) {
                    (Some(m), Some(u)) => Some(
                        Algebra::from_table(fs, n, &quads_in(fs, m, &path("mul"))?, vector_in(fs, u, n, &path("unit"))?)
                            .map_err(|e| at(&path("mul"), e))?,
                    ),
                    (None, None) => None,
                    _ => return Err(at(&format!("objects.{name}"), "mul and unit come together")),
                };
                let coalgebra = match (comul, counit) {
                    (Some(m), Some(u)) => Some(
                        Coalgebra::from_table(fs, n, &quads_in(fs, m, &path("comul"))?, vector_in(fs, u, n, &path("counit"))?)
                            .map_err(|e| at(&path("comul"), e))?,
                    ),
                    (None, None) => None,
                    _ => return Err(at(&format!("objects.{name}"), "comul and counit come together")),
                };
                let antipode = match antipode {
                    Some(s) => Some(matrix_in(fs, s, n, n, &path("antipode"))?),
                    None => None,
                };
                let s = StructurePresentation {
                    kind: *kind,
                    field: fs,
                    labels,
                    algebra,
                    coalgebra,
                    antipode,
                };
                s.validate().map_err(|e| at(&format!("objects.{name}"), e))?;
                Object::Structure(s)
            }
            RawObject::Pairing {
                algebra,
                coalgebra,
                matrix,
            } => {
                need(algebra, "algebra", has_alg, "multiplication")?;
                need(coalgebra, "coalgebra", has_co, "comultiplication")?;
                Object::Pairing {
                    matrix: matrix_in(fs, matrix, dim_of(algebra)?, dim_of(coalgebra)?, &path("matrix"))?,
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                }
            }
            RawObject::Entwining { algebra, coalgebra, psi } => {
                need(algebra, "algebra", has_alg, "multiplication")?;
                need(coalgebra, "coalgebra", has_co, "comultiplication")?;
                let (n, d) = (dim_of(algebra)?, dim_of(coalgebra)?);
                let mut m = Matrix::zeros(fs, n * d, d * n);
                for (t, (k, i, j, l, x)) in psi.iter().enumerate() {
                    let p = format!("{}[{t}]", path("psi"));
                    if *k >= d || *i >= n || *j >= n || *l >= d {
                        return Err(at(&p, format!("index ({k}, {i}, {j}, {l}) out of range")));
                    }
                    m.entry_mut(j * d + l, k * n + i).add_assign_ref(&scalar_in(fs, x, &p)?);
                }
                Object::Entwining {
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                    psi: m,
                }
            }
            RawObject::Module {
                dim,
                entwining,
                algebra,
                coalgebra,
                action,
                coaction,
            } => {
                let (alg_dim, co_dim) = match entwining {
                    Some(e) => {
                        if algebra.is_some() || coalgebra.is_some() {
                            return Err(at(&format!("objects.{name}"), "a module over an entwining names no algebra or coalgebra"));
                        }
                        match self.get(e)? {
                            Object::Entwining { algebra, coalgebra, .. } => (Some(dim_of(algebra)?), Some(dim_of(coalgebra)?)),
                            other => return Err(at(&path("entwining"), format!("'{e}' is a {}", other.type_name()))),
                        }
                    }
                    None => {
                        if let Some(a) = algebra {
                            need(a, "algebra", has_alg, "multiplication")?;
                        }
                        if let Some(c) = coalgebra {
                            need(c, "coalgebra", has_co, "comultiplication")?;
                        }
                        (algebra.as_deref().map(dim_of).transpose()?, coalgebra.as_deref().map(dim_of).transpose()?)
                    }
                };
                let mut module = ModulePresentation::zero(fs);
                module.dim = *dim;
                if let Some(raw) = action {
                    let n = alg_dim.ok_or_else(|| at(&path("action"), "an action needs an algebra or entwining"))?;
                    let entries = quads_in(fs, &raw.entries, &path("action"))?;
                    module.action = Some(Action::from_entries(fs, raw.side, *dim, n, &entries).map_err(|e| at(&path("action"), e))?);
                }
                if let Some(raw) = coaction {
                    let d = co_dim.ok_or_else(|| at(&path("coaction"), "a coaction needs a coalgebra or entwining"))?;
                    let entries = quads_in(fs, &raw.entries, &path("coaction"))?;
                    module.coaction = Some(Coaction::from_entries(fs, raw.side, *dim, d, &entries).map_err(|e| at(&path("coaction"), e))?);
                }
                Object::Module {
                    entwining: entwining.clone(),
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                    module,
                }
            }
            RawObject::Dk {
                hopf,
                algebra,
                coaction,
                coalgebra,
                action,
            } => {
                need(hopf, "hopf", has_both, "bialgebra structure")?;
                need(algebra, "algebra", has_alg, "multiplication")?;
                need(coalgebra, "coalgebra", has_co, "comultiplication")?;
                let h = dim_of(hopf)?;
                Object::Dk {
                    coaction: coaction_in(fs, coaction, dim_of(algebra)?, h, &path("coaction"))?,
                    action: action_in(fs, action, dim_of(coalgebra)?, h, &path("action"))?,
                    hopf: hopf.clone(),
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                }
            }
            RawObject::AltDk {
                hopf,
                algebra,
                action,
                coalgebra,
                coaction,
            } => {
                need(hopf, "hopf", has_both, "bialgebra structure")?;
                need(algebra, "algebra", has_alg, "multiplication")?;
                need(coalgebra, "coalgebra", has_co, "comultiplication")?;
                let h = dim_of(hopf)?;
                Object::AltDk {
                    action: action_in(fs, action, dim_of(algebra)?, h, &path("action"))?,
                    coaction: coaction_in(fs, coaction, dim_of(coalgebra)?, h, &path("coaction"))?,
                    hopf: hopf.clone(),
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                }
            }
            RawObject::Extension {
                hopf,
                algebra,
                coaction,
                integral,
            } => {
                need(hopf, "hopf", has_both, "bialgebra structure")?;
                need(algebra, "algebra", has_alg, "multiplication")?;
                let (h, b) = (dim_of(hopf)?, dim_of(algebra)?);
                Object::Extension {
                    coaction: coaction_in(fs, coaction, b, h, &path("coaction"))?,
                    integral: integral.as_ref().map(|m| matrix_in(fs, m, b, h, &path("integral"))).transpose()?,
                    hopf: hopf.clone(),
                    algebra: algebra.clone(),
                }
            }
            RawObject::Coextension {
                hopf,
                coalgebra,
                action,
                cointegral,
            } => {
                need(hopf, "hopf", has_both, "bialgebra structure")?;
                need(coalgebra, "coalgebra", has_co, "comultiplication")?;
                let (h, d) = (dim_of(hopf)?, dim_of(coalgebra)?);
                Object::Coextension {
                    action: action_in(fs, action, d, h, &path("action"))?,
                    cointegral: cointegral.as_ref().map(|m| matrix_in(fs, m, h, d, &path("cointegral"))).transpose()?,
                    hopf: hopf.clone(),
                    coalgebra: coalgebra.clone(),
                }
            }
            RawObject::Morphism { source, target, matrix } => {
                for (f, r) in [("source", source), ("target", target)] {
                    if !matches!(self.get(r)?, Object::Module { .. }) {
                        return Err(at(&path(f), format!("'{r}' is not a module")));
                    }
                }
                Object::Morphism {
                    matrix: matrix_in(fs, matrix, dim_of(target)?, dim_of(source)?, &path("matrix"))?,
                    source: source.clone(),
                    target: target.clone(),
                }
            }
            RawObject::EntwiningMorphism {
                source,
                target,
                gamma,
                delta,
            } => {
                let parts = |r: &str, f: &str| -> Result<(usize, usize)> {
                    match self.get(r)? {
                        Object::Entwining { algebra, coalgebra, .. } => Ok((dim_of(algebra)?, dim_of(coalgebra)?)),
                        other => Err(at(&path(f), format!("'{r}' is a {}", other.type_name()))),
                    }
                };
                let ((sa, sc), (ta, tc)) = (parts(source, "source")?, parts(target, "target")?);
                Object::EntwiningMorphism {
                    gamma: matrix_in(fs, gamma, ta, sa, &path("gamma"))?,
                    delta: matrix_in(fs, delta, tc, sc, &path("delta"))?,
                    source: source.clone(),
                    target: target.clone(),
                }
            }
            RawObject::DkMorphism {
                source,
                target,
                beta,
                gamma,
                delta,
            } => {
                let parts = |r: &str, f: &str| -> Result<(usize, usize, usize)> {
                    match self.get(r)? {
                        Object::Dk {
                            hopf, algebra, coalgebra, ..
                        } => Ok((dim_of(hopf)?, dim_of(algebra)?, dim_of(coalgebra)?)),
                        other => Err(at(&path(f), format!("'{r}' is a {}", other.type_name()))),
                    }
                };
                let ((sh, sa, sc), (th, ta, tc)) = (parts(source, "source")?, parts(target, "target")?);
                Object::DkMorphism {
                    beta: matrix_in(fs, beta, th, sh, &path("beta"))?,
                    gamma: matrix_in(fs, gamma, ta, sa, &path("gamma"))?,
                    delta: matrix_in(fs, delta, tc, sc, &path("delta"))?,
                    source: source.clone(),
                    target: target.clone(),
                }
            }
        })
    }

    fn dim_of(&self, name: &str) -> usize {
        match self.objects.get(name) {
            Some(Object::Structure(s)) => s.dim(),
            Some(Object::Module { module, .. }) => module.dim,
            _ => 0,
        }
    }

    fn raw(&self, object: &Object) -> RawObject {
        match object {
            Object::Structure(s) => RawObject::Structure {
                kind: s.kind,
                dim: s.dim(),
                labels: Some(s.labels.clone()),
                mul: s.algebra.as_ref().map(|a| quads_out(&a.table())),
                unit: s.algebra.as_ref().map(|a| a.one().iter().map(scalar_out).collect()),
                comul: s.coalgebra.as_ref().map(|c| quads_out(&c.table())),
                counit: s.coalgebra.as_ref().map(|c| c.counit_vec().iter().map(scalar_out).collect()),
                antipode: s.antipode.as_ref().map(matrix_out),
            },
            Object::Pairing {
                algebra,
                coalgebra,
                matrix,
            } => RawObject::Pairing {
                algebra: algebra.clone(),
                coalgebra: coalgebra.clone(),
                matrix: matrix_out(matrix),
            },
            Object::Entwining { algebra, coalgebra, psi } => {
                let (n, d) = (self.dim_of(algebra), self.dim_of(coalgebra));
                let mut out = Vec::new();
                for k in 0..d {
                    for i in 0..n {
                        for j in 0..n {
                            for l in 0..d {
                                let x = psi.get(j * d + l, k * n + i);
                                if !x.is_zero() {
                                    out.push((k, i, j, l, scalar_out(x)));
                                }
                            }
                        }
                    }
                }
                RawObject::Entwining {
                    algebra: algebra.clone(),
                    coalgebra: coalgebra.clone(),
                    psi: out,
                }
            }
            Object::Module {
                entwining,
                algebra,
                coalgebra,
                module,
            } => RawObject::Module {
                dim: module.dim,
                entwining: entwining.clone(),
                algebra: algebra.clone(),
                coalgebra: coalgebra.clone(),
                action: module.action.as_ref().map(|a| RawAction {
                    side: a.side,
                    entries: quads_out(&a.entries(a.algebra_dim())),
                }),
                coaction: module.coaction.as_ref().map(|c| RawAction {
                    side: c.side,
                    entries: quads_out(&c.entries(c.coalgebra_dim())),
                }),
            },
            Object::Dk {
                hopf,
                algebra,
                coaction,
                coalgebra,
                action,
            } => {
                let h = self.dim_of(hopf);
                RawObject::Dk {
                    hopf: hopf.clone(),
                    algebra: algebra.clone(),
                    coaction: coaction_out(coaction, h),
                    coalgebra: coalgebra.clone(),
                    action: action_out(action, h),
                }
            }
            Object::AltDk {
                hopf,
                algebra,
                action,
                coalgebra,
                coaction,
            } => {
                let h = self.dim_of(hopf);
                RawObject::AltDk {
                    hopf: hopf.clone(),
                    algebra: algebra.clone(),
                    action: action_out(action, h),
                    coalgebra: coalgebra.clone(),
                    coaction: coaction_out(coaction, h),
                }
            }
            Object::Extension {
                hopf,
                algebra,
                coaction,
                integral,
            } => RawObject::Extension {
                hopf: hopf.clone(),
                algebra: algebra.clone(),
                coaction: coaction_out(coaction, self.dim_of(hopf)),
                integral: integral.as_ref().map(matrix_out),
            },
            Object::Coextension {
                hopf,
                coalgebra,
                action,
                cointegral,
            } => RawObject::Coextension {
                hopf: hopf.clone(),
                coalgebra: coalgebra.clone(),
                action: action_out(action, self.dim_of(hopf)),
                cointegral: cointegral.as_ref().map(matrix_out),
            },
            Object::Morphism { source, target, matrix } => RawObject::Morphism {
                source: source.clone(),
                target: target.clone(),
                matrix: matrix_out(matrix),
            },
            Object::EntwiningMorphism {
                source,
                target,
                gamma,
                delta,
            } => RawObject::EntwiningMorphism {
                source: source.clone(),
                target: target.clone(),
                gamma: matrix_out(gamma),
                delta: matrix_out(delta),
            },
            Object::DkMorphism {
                source,
                target,
                beta,
                gamma,
                delta,
            } => RawObject::DkMorphism {
                source: source.clone(),
                target: target.clone(),
                beta: matrix_out(beta),
                gamma: matrix_out(gamma),
                delta: matrix_out(delta),
            },
        }
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let raw = RawDocument {
            version: FORMAT_VERSION,
            field: match self.field {
                FieldSpec::Rational => RawField::Named("Q".into()),
                FieldSpec::Prime(p) => RawField::Prime { p },
            },
            objects: self.objects.iter().map(|(n, o)| (n.clone(), self.raw(o))).collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Adds `s` under `name` as a structure object.
    pub fn add_structure(&mut self, name: &str, s: &StructurePresentation) -> String {
        self.insert(name, Object::Structure(s.clone()));
        name.to_string()
    }

    /// Adds `A`, `C` and the entwining; components are named `{name}_A`, `{name}_C`.
    pub fn add_entwining(&mut self, name: &str, e: &Entwining) -> String {
        let a = format!("{name}_A");
        let c = format!("{name}_C");
        self.insert(&a, Object::Structure(StructurePresentation::from_algebra(default_labels("a", e.alg_dim()), e.algebra.clone())));
        self.insert(&c, Object::Structure(StructurePresentation::from_coalgebra(default_labels("c", e.co_dim()), e.coalgebra.clone())));
        self.insert(
            name,
            Object::Entwining {
                algebra: a,
                coalgebra: c,
                psi: e.psi.clone(),
            },
        );
        name.to_string()
    }

    pub fn add_module(&mut self, name: &str, entwining: &str, m: &ModulePresentation) {
        self.insert(
            name,
            Object::Module {
                entwining: Some(entwining.to_string()),
                algebra: None,
                coalgebra: None,
                module: m.clone(),
            },
        );
    }

    pub fn add_dk(&mut self, name: &str, s: &DkStructure) {
        let h = format!("{name}_H");
        let a = format!("{name}_A");
        let c = format!("{name}_C");
        self.insert(&h, Object::Structure(s.hopf.clone()));
        self.insert(&a, Object::Structure(StructurePresentation::from_algebra(default_labels("a", s.algebra.dim()), s.algebra.clone())));
        self.insert(&c, Object::Structure(StructurePresentation::from_coalgebra(default_labels("c", s.coalgebra.dim()), s.coalgebra.clone())));
        self.insert(
            name,
            Object::Dk {
                hopf: h,
                algebra: a,
                coaction: s.coaction.clone(),
                coalgebra: c,
                action: s.action.clone(),
            },
        );
    }

    /// The document holding a catalog entry and everything it refers to.
    pub fn from_catalog(entry: &CatalogEntry) -> Result<Document> {
        let mut doc = Document::new(entry.field);
        let name = entry.name.as_str();
        match &entry.object {
            CatalogObject::Structure(s) => {
                doc.add_structure(name, s);
            }
            CatalogObject::Entwining(e) => {
                doc.add_entwining(name, e);
            }
            CatalogObject::Dk(s) => doc.add_dk(name, s),
            CatalogObject::AltDk { hopf, algebra, coalgebra } => {
                let (h, a, c) = (format!("{name}_H"), format!("{name}_A"), format!("{name}_C"));
                doc.insert(&h, Object::Structure(hopf.clone()));
                let (alg, action) = match algebra {
                    Ingredient::ModuleAlgebra { algebra, action, .. } => (algebra, action),
                    _ => return Err(Error::Malformed("alternative instance needs a module algebra".into())),
                };
                let (coalg, coaction) = match coalgebra {
                    Ingredient::ComoduleCoalgebra { coalgebra, coaction, .. } => (coalgebra, coaction),
                    _ => return Err(Error::Malformed("alternative instance needs a comodule coalgebra".into())),
                };
                doc.insert(&a, Object::Structure(StructurePresentation::from_algebra(default_labels("a", alg.dim()), alg.clone())));
                doc.insert(&c, Object::Structure(StructurePresentation::from_coalgebra(default_labels("c", coalg.dim()), coalg.clone())));
                doc.insert(
                    name,
                    Object::AltDk {
                        hopf: h,
                        algebra: a,
                        action: action.clone(),
                        coalgebra: c,
                        coaction: coaction.clone(),
                    },
                );
            }
            CatalogObject::Module { entwining, module } => {
                doc.add_entwining(entwining, &catalog_entwining(entwining)?);
                doc.add_module(name, entwining, module);
            }
            CatalogObject::Extension { extension, integral } => {
                let (h, b) = (format!("{name}_H"), format!("{name}_B"));
                doc.insert(&h, Object::Structure(extension.hopf.clone()));
                doc.insert(
                    &b,
                    Object::Structure(StructurePresentation::from_algebra(
                        default_labels("b", extension.algebra.dim()),
                        extension.algebra.clone(),
                    )),
                );
                doc.insert(
                    name,
                    Object::Extension {
                        hopf: h,
                        algebra: b,
                        coaction: extension.coaction.clone(),
                        integral: Some(integral.clone()),
                    },
                );
            }
            CatalogObject::Coextension {
                hopf,
                coalgebra,
                action,
                cointegral,
            } => {
                let (h, d) = (format!("{name}_H"), format!("{name}_D"));
                doc.insert(&h, Object::Structure(hopf.clone()));
                doc.insert(
                    &d,
                    Object::Structure(StructurePresentation::from_coalgebra(default_labels("d", coalgebra.dim()), coalgebra.clone())),
                );
                doc.insert(
                    name,
                    Object::Coextension {
                        hopf: h,
                        coalgebra: d,
                        action: action.clone(),
                        cointegral: Some(cointegral.clone()),
                    },
                );
            }
            CatalogObject::DkMorphism {
                source,
                target,
                beta,
                gamma,
                delta,
            } => {
                doc.add_dk(source, &catalog_dk(source)?);
                if target != source {
                    doc.add_dk(target, &catalog_dk(target)?);
                }
                doc.insert(
                    name,
                    Object::DkMorphism {
                        source: source.clone(),
                        target: target.clone(),
                        beta: beta.clone(),
                        gamma: gamma.clone(),
                        delta: delta.clone(),
                    },
                );
            }
        }
        Ok(doc)
    }
}

impl Document {
    /// The algebra and coalgebra a module object is over.
    pub fn module_context(&self, name: &str) -> Result<(Option<Algebra>, Option<Coalgebra>)> {
        match self.get(name)? {
            Object::Module {
                entwining: Some(e), ..
            } => {
                let e = self.entwining(e)?;
                Ok((Some(e.algebra), Some(e.coalgebra)))
            }
            Object::Module { algebra, coalgebra, .. } => Ok((
                algebra.as_deref().map(|a| self.algebra(a).cloned()).transpose()?,
                coalgebra.as_deref().map(|c| self.coalgebra(c).cloned()).transpose()?,
            )),
            other => Err(wrong_type(name, "module", other)),
        }
    }

    /// Verifies the object against the laws of its type.
    pub fn verify(&self, name: &str) -> Result<Report> {
        let mut r = Report::new(format!("{} {name}", self.get(name)?.type_name()));
        match self.get(name)? {
            Object::Structure(s) => {
                r.absorb("structure", s.verify());
            }
            Object::Pairing { .. } => {
                r.absorb("pairing", self.pairing(name)?.verify());
            }
            Object::Entwining { .. } => {
                r.absorb("entwining", self.entwining(name)?.verify());
            }
            Object::Module { entwining, module, .. } => match entwining {
                Some(e) => {
                    r.absorb("entwined module", verify_entwined_module(&self.entwining(e)?, module));
                }
                None => {
                    let (a, c) = self.module_context(name)?;
                    r.absorb("module", module.verify(a.as_ref(), c.as_ref()));
                }
            },
            Object::Dk { .. } => {
                r.absorb("Doi-Koppinen", self.dk(name)?.verify());
            }
            Object::AltDk { .. } => {
                let (hopf, algebra, coalgebra) = self.alt_dk(name)?;
                let (ha, hc) = (hopf.algebra()?, hopf.coalgebra()?);
                r.absorb("algebra", verify_dk_compat(ha, hc, &algebra));
                r.absorb("coalgebra", verify_dk_compat(ha, hc, &coalgebra));
                if r.passed() {
                    r.absorb("entwining", alt_dk_entwining(&hopf, &algebra, &coalgebra)?.1);
                }
            }
            Object::Extension {
                hopf,
                algebra,
                coaction,
                integral,
            } => {
                let h = self.structure(hopf)?;
                let ing = Ingredient::ComoduleAlgebra {
                    side: Side::Right,
                    algebra: self.algebra(algebra)?.clone(),
                    coaction: coaction.clone(),
                };
                r.absorb("comodule algebra", verify_dk_compat(h.algebra()?, h.coalgebra()?, &ing));
                if let (true, Some(g)) = (r.passed(), integral) {
                    let ext = HExtension::new(h.clone(), self.algebra(algebra)?.clone(), coaction.clone())?;
                    r.absorb("integral", check_integral(&ext, g)?.report);
                }
            }
            Object::Coextension {
                hopf,
                coalgebra,
                action,
                cointegral,
            } => {
                let (coext, rep) = coextension_quotient(self.structure(hopf)?.clone(), self.coalgebra(coalgebra)?.clone(), action.clone())?;
                r.absorb("quotient", rep);
                if let Some(w) = cointegral {
                    r.absorb("cointegral", check_cointegral(&coext, w)?.report);
                }
            }
            Object::Morphism { source, target, matrix } => {
                let (m, _) = self.module(source)?;
                let (n, _) = self.module(target)?;
                r.absorb("morphism", module_morphism(m, n, matrix)?);
            }
            Object::EntwiningMorphism {
                source,
                target,
                gamma,
                delta,
            } => {
                let (e, f) = (self.entwining(source)?, self.entwining(target)?);
                r.absorb("source", e.verify());
                r.absorb("target", f.verify());
                r.absorb("morphism", verify_entwining_morphism(&e, &f, gamma, delta));
            }
            Object::DkMorphism {
                source,
                target,
                beta,
                gamma,
                delta,
            } => {
                r.absorb("morphism", verify_dk_morphism(&self.dk(source)?, &self.dk(target)?, beta, gamma, delta)?);
            }
        }
        Ok(r)
    }
}

/// Linearity and colinearity of `f: M -> N` for whatever structure both carry.
pub fn module_morphism(m: &ModulePresentation, n: &ModulePresentation, f: &Matrix) -> Result<Report> {
    expect_dim("morphism rows", n.dim, f.rows())?;
    expect_dim("morphism columns", m.dim, f.cols())?;
    let mut r = Report::new("module morphism");
    let fs = f.field();
    match (&m.action, &n.action) {
        (Some(a), Some(b)) if a.side == b.side => {
            let k = a.algebra_dim();
            let id = Matrix::identity(fs, k);
            let lifted = match a.side {
                Side::Right => f.kron(&id),
                Side::Left => id.kron(f),
            };
            r.check_maps("linear", &(f * &a.map), &(&b.map * &lifted), &[m.dim, k]);
        }
        (None, None) => {}
        _ => {
            r.check("same action side", false, "actions differ in presence or side");
        }
    }
    match (&m.coaction, &n.coaction) {
        (Some(a), Some(b)) if a.side == b.side => {
            let k = a.coalgebra_dim();
            let id = Matrix::identity(fs, k);
            let lifted = match a.side {
                Side::Right => f.kron(&id),
                Side::Left => id.kron(f),
            };
            r.check_maps("colinear", &(&b.map * f), &(&lifted * &a.map), &[m.dim]);
        }
        (None, None) => {}
        _ => {
            r.check("same coaction side", false, "coactions differ in presence or side");
        }
    }
    Ok(r)
}

fn wrong_type(name: &str, expected: &str, found: &Object) -> Error {
    Error::Malformed(format!("'{name}' is a {}, expected a {expected}", found.type_name()))
}

fn raw_references(o: &RawObject) -> Vec<(&'static str, &str)> {
    match o {
        RawObject::Structure { .. } => vec![],
        RawObject::Pairing { algebra, coalgebra, .. } | RawObject::Entwining { algebra, coalgebra, .. } => {
            vec![("algebra", algebra), ("coalgebra", coalgebra)]
        }
        RawObject::Module {
            entwining,
            algebra,
            coalgebra,
            ..
        } => [("entwining", entwining), ("algebra", algebra), ("coalgebra", coalgebra)]
            .into_iter()
            .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
            .collect(),
        RawObject::Dk {
            hopf, algebra, coalgebra, ..
        }
        | RawObject::AltDk {
            hopf, algebra, coalgebra, ..
        } => vec![("hopf", hopf), ("algebra", algebra), ("coalgebra", coalgebra)],
        RawObject::Extension { hopf, algebra, .. } => vec![("hopf", hopf), ("algebra", algebra)],
        RawObject::Coextension { hopf, coalgebra, .. } => vec![("hopf", hopf), ("coalgebra", coalgebra)],
        RawObject::Morphism { source, target, .. }
        | RawObject::EntwiningMorphism { source, target, .. }
        | RawObject::DkMorphism { source, target, .. } => vec![("source", source), ("target", target)],
    }
}
