//! The `entwine` command line: verification and constructions on JSON documents.
//!
//! Exit codes: 0 when every check passes, 1 when a law or theorem check fails
//! (the report carries the witness), 2 on input errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use entwine::catalog::{catalog_get, catalog_names, verify_entry};
use entwine::document::{Document, Object};
use entwine::doikoppinen::{
    alt_dk_entwining, check_cointegral, check_integral, coextension_quotient, dk_entwining, dual_dk, dual_dk_morphism,
    dualize_coextension, koppinen_smash, verify_dk_compat, HCoextension, HExtension,
};
use entwine::duality::{adjunction_check, dual_entwining, dual_entwining_morphism, dual_module_r, dual_morphism_r};
use entwine::entwining::{build_coring, build_smash, free_entwined_module, hom_entwined, nu_iso, Entwining};
use entwine::exactlin::FieldSpec;
use entwine::structures::{compute_antipode, default_labels, verify_antipode, StructureKind, StructurePresentation};
use entwine::{Error, Report};

#[derive(Parser, Debug)]
#[command(name = "entwine", version, about = "Exact verification of Hopf algebras, entwining structures and their duals")]
struct Cli {
    /// Print a structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the emitted document to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify every object of a document, or just one.
    Check {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Dualize a structure, entwining, Doi-Koppinen structure, module, morphism or coextension.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Build and verify the smash ring of an entwining and its nu-isomorphism.
    Smash {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Build and verify the coring A ⊗ C of an entwining.
    Coring {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Compute the antipode of a bialgebra.
    Antipode {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// The rational dual M_r of an entwined module.
    Rat {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
    },
    /// Check the adjunction between M and a module K over the dual entwining.
    Adjunction {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
        /// Module over the dual entwining; the free module when omitted.
        #[arg(long)]
        dual_module: Option<String>,
    },
    /// Verify a Doi-Koppinen structure, its entwining and the Koppinen smash product.
    Dk {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
        /// Also build and emit the dual structure.
        #[arg(long)]
        dual: bool,
    },
    /// Check an integral of a comodule algebra for cleftness.
    Cleft {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Check a cointegral of a module coalgebra and dualize to a cleft extension.
    Cocleft {
        file: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Browse and export the built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List entry names, kinds and descriptions.
    List,
    /// Describe and verify one entry.
    Show { name: String },
    /// Emit an entry as a document.
    Export { name: String },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Listing {
    name: String,
    kind: &'static str,
    field: String,
    description: String,
}

#[derive(Default)]
struct Session {
    reports: Vec<Report>,
    document: Option<Document>,
    listing: Option<Vec<Listing>>,
    text: Vec<String>,
}

impl Session {
    fn push(&mut self, r: Report) {
        self.reports.push(r);
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

#[derive(Serialize)]
struct JsonOutcome<'a> {
    command: &'a str,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    reports: &'a [Report],
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<&'a [Listing]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<Value>,
}

fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "Q".into(),
        FieldSpec::Prime(p) => format!("F{p}"),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unverified(_) | Error::Internal(_) | Error::Closure(_) | Error::AlphaCondition { .. } => 1,
        _ => 2,
    }
}

fn load(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    Document::parse(&text)
}

/// Chooses the object a command acts on: the one named, else the unique
/// unreferenced object of a fitting type, else the unique object of one.
fn pick(doc: &Document, named: Option<&str>, types: &[&str]) -> Result<String, Error> {
    if let Some(n) = named {
        let t = doc.get(n)?.type_name();
        if !types.contains(&t) {
            return Err(Error::Precondition(format!("'{n}' is a {t}; expected one of {}", types.join(", "))));
        }
        return Ok(n.to_string());
    }
    let fits = |n: &&str| types.contains(&doc.objects[*n].type_name());
    let roots: Vec<&str> = doc.roots().into_iter().filter(fits).collect();
    if roots.len() == 1 {
        return Ok(roots[0].to_string());
    }
    let all: Vec<&str> = doc.objects.keys().map(String::as_str).filter(fits).collect();
    match (roots.len(), all.len()) {
        (_, 1) => Ok(all[0].to_string()),
        (_, 0) => Err(Error::Precondition(format!("the document has no {}", types.join(" or ")))),
        (0, _) => Err(Error::Precondition(format!("several candidates ({}); pass --object", all.join(", ")))),
        _ => Err(Error::Precondition(format!("several candidates ({}); pass --object", roots.join(", ")))),
    }
}

fn verified(r: Report) -> Result<Report, Error> {
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::Unverified(Box::new(r)))
    }
}

/// The entwining of an entwining, Doi-Koppinen or alternative object, verified.
fn entwining_of(doc: &Document, name: &str, s: &mut Session) -> Result<Entwining, Error> {
    match doc.get(name)? {
        Object::Entwining { .. } => {
            let e = doc.entwining(name)?;
            s.push(verified(e.verify())?);
            Ok(e)
        }
        Object::Dk { .. } => {
            let d = doc.dk(name)?;
            s.push(verified(d.verify())?);
            let (e, r) = dk_entwining(&d)?;
            s.push(r);
            Ok(e)
        }
        Object::AltDk { .. } => {
            let (h, a, c) = doc.alt_dk(name)?;
            let mut r = Report::new("alternative Doi-Koppinen ingredients");
            r.absorb("algebra", verify_dk_compat(h.algebra()?, h.coalgebra()?, &a));
            r.absorb("coalgebra", verify_dk_compat(h.algebra()?, h.coalgebra()?, &c));
            s.push(verified(r)?);
            let (e, r) = alt_dk_entwining(&h, &a, &c)?;
            s.push(r);
            Ok(e)
        }
        other => Err(Error::Precondition(format!("'{name}' is a {}", other.type_name()))),
    }
}

const ENTWINING_TYPES: &[&str] = &["entwining", "dk", "alt-dk"];

fn entwined_module(doc: &Document, name: &str, s: &mut Session) -> Result<(String, Entwining, entwine::structures::ModulePresentation), Error> {
    let (m, over) = doc.module(name)?;
    let over = over.ok_or_else(|| Error::Precondition(format!("module '{name}' is not over an entwining")))?;
    let e = doc.entwining(over)?;
    s.push(verified(e.verify())?);
    Ok((over.to_string(), e, m.clone()))
}

fn coextension(doc: &Document, name: &str, s: &mut Session) -> Result<(HCoextension, Option<entwine::exactlin::Matrix>), Error> {
    match doc.get(name)? {
        Object::Coextension {
            hopf,
            coalgebra,
            action,
            cointegral,
        } => {
            let (coext, r) = coextension_quotient(doc.structure(hopf)?.clone(), doc.coalgebra(coalgebra)?.clone(), action.clone())?;
            s.push(r);
            Ok((coext, cointegral.clone()))
        }
        other => Err(Error::Precondition(format!("'{name}' is a {}", other.type_name()))),
    }
}

fn dual_extension_document(field: FieldSpec, name: &str, ext: &HExtension, integral: Option<entwine::exactlin::Matrix>) -> Document {
    let mut doc = Document::new(field);
    let (h, b) = (format!("{name}_H"), format!("{name}_B"));
    doc.insert(&h, Object::Structure(ext.hopf.clone()));
    doc.insert(
        &b,
        Object::Structure(StructurePresentation::from_algebra(default_labels("b", ext.algebra.dim()), ext.algebra.clone())),
    );
    doc.insert(
        name,
        Object::Extension {
            hopf: h,
            algebra: b,
            coaction: ext.coaction.clone(),
            integral,
        },
    );
    doc
}

fn check(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let names: Vec<String> = match object {
        Some(n) => vec![doc.get(n).map(|_| n.to_string())?],
        None => doc.objects.keys().cloned().collect(),
    };
    for n in names {
        match doc.verify(&n) {
            Ok(r) => s.push(r),
            Err(Error::Unverified(r)) => s.push(*r),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn dualize(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let types = [
        "structure",
        "entwining",
        "dk",
        "alt-dk",
        "module",
        "morphism",
        "entwining-morphism",
        "dk-morphism",
        "coextension",
    ];
    let name = pick(doc, object, &types)?;
    let fs = doc.field;
    let dual_name = format!("{name}_dual");
    let mut out = Document::new(fs);
    match doc.get(&name)? {
        Object::Structure(st) => {
            s.push(verified(st.verify())?);
            let d = st.dual();
            s.push(verified(d.verify()).map_err(|e| internal(e, "dual structure"))?);
            out.add_structure(&dual_name, &d);
        }
        Object::Entwining { .. } => {
            let e = entwining_of(doc, &name, s)?;
            let dd = dual_entwining(&e, None, None)?;
            s.push(dd.report.clone());
            out.add_entwining(&dual_name, &dd.dual);
        }
        Object::Dk { .. } => {
            let d = doc.dk(&name)?;
            s.push(verified(d.verify())?);
            let (dual, r) = dual_dk(&d)?;
            s.push(r);
            out.add_dk(&dual_name, &dual);
            out.add_entwining(&format!("{dual_name}_entwining"), &dk_entwining(&dual)?.0);
        }
        Object::AltDk { .. } => {
            return Err(Error::Unsupported(
                "dualizing an alternative Doi-Koppinen structure need not yield a comodule coalgebra".into(),
            ))
        }
        Object::Module { .. } => return rat(doc, Some(&name), s),
        Object::Morphism { source, target, matrix } => {
            let (over, e, m) = entwined_module(doc, source, s)?;
            let (over_n, _, n) = entwined_module(doc, target, s)?;
            if over != over_n {
                return Err(Error::Precondition("source and target are over different entwinings".into()));
            }
            s.push(verified(hom_entwined(&e, &m, &n, matrix)?)?);
            let dd = dual_entwining(&e, None, None)?;
            let mr = dual_module_r(&dd, &m)?;
            let nr = dual_module_r(&dd, &n)?;
            let fr = dual_morphism_r(&dd, &m, &n, matrix)?;
            let mut r = Report::new("dual morphism f_r: N_r -> M_r");
            r.absorb("f_r", hom_entwined(&dd.dual, &nr.module, &mr.module, &fr)?);
            s.push(mr.report);
            s.push(nr.report);
            s.push(r);
            let ed = format!("{over}_dual");
            out.add_entwining(&ed, &dd.dual);
            out.add_module(&format!("{source}_r"), &ed, &mr.module);
            out.add_module(&format!("{target}_r"), &ed, &nr.module);
            out.insert(
                &dual_name,
                Object::Morphism {
                    source: format!("{target}_r"),
                    target: format!("{source}_r"),
                    matrix: fr,
                },
            );
        }
        Object::EntwiningMorphism {
            source,
            target,
            gamma,
            delta,
        } => {
            let e = entwining_of(doc, source, s)?;
            let f = entwining_of(doc, target, s)?;
            let de = dual_entwining(&e, None, None)?;
            let df = dual_entwining(&f, None, None)?;
            s.push(dual_entwining_morphism(&de, &df, gamma, delta)?);
            out.add_entwining(&format!("{source}_dual"), &de.dual);
            if target != source {
                out.add_entwining(&format!("{target}_dual"), &df.dual);
            }
            out.insert(
                &dual_name,
                Object::EntwiningMorphism {
                    source: format!("{target}_dual"),
                    target: format!("{source}_dual"),
                    gamma: delta.transpose(),
                    delta: gamma.transpose(),
                },
            );
        }
        Object::DkMorphism {
            source,
            target,
            beta,
            gamma,
            delta,
        } => {
            let (sd, td) = (doc.dk(source)?, doc.dk(target)?);
            s.push(verified(sd.verify())?);
            s.push(verified(td.verify())?);
            s.push(dual_dk_morphism(&sd, &td, beta, gamma, delta)?);
            out.add_dk(&format!("{source}_dual"), &dual_dk(&sd)?.0);
            if target != source {
                out.add_dk(&format!("{target}_dual"), &dual_dk(&td)?.0);
            }
            out.insert(
                &dual_name,
                Object::DkMorphism {
                    source: format!("{target}_dual"),
                    target: format!("{source}_dual"),
                    beta: beta.transpose(),
                    gamma: delta.transpose(),
                    delta: gamma.transpose(),
                },
            );
        }
        Object::Coextension { .. } => {
            let (coext, omega) = coextension(doc, &name, s)?;
            let dual = dualize_coextension(&coext, omega.as_ref())?;
            s.push(dual.report.clone());
            let integral = dual.integral.as_ref().and(omega.as_ref().map(|w| w.transpose()));
            out = dual_extension_document(fs, &dual_name, &dual.extension, integral);
        }
        other => return Err(Error::Precondition(format!("cannot dualize a {}", other.type_name()))),
    }
    s.document = Some(out);
    Ok(())
}

fn internal(e: Error, what: &str) -> Error {
    match e {
        Error::Unverified(r) => Error::Internal(r),
        other => Error::Precondition(format!("{what}: {other}")),
    }
}

fn smash(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, ENTWINING_TYPES)?;
    let e = entwining_of(doc, &name, s)?;
    let (ring, r) = build_smash(&e)?;
    s.push(r);
    let (_, r) = nu_iso(&e)?;
    s.push(r);
    if let Object::Dk { .. } = doc.get(&name)? {
        let (_, r) = koppinen_smash(&doc.dk(&name)?)?;
        s.push(r);
    }
    let mut out = Document::new(doc.field);
    out.add_structure(
        &format!("{name}_smash"),
        &StructurePresentation::from_algebra(default_labels("f", ring.ring.dim()), ring.ring),
    );
    s.document = Some(out);
    Ok(())
}

fn coring(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, ENTWINING_TYPES)?;
    let e = entwining_of(doc, &name, s)?;
    let (k, r) = build_coring(&e)?;
    s.text.push(format!("coring A ⊗ C of dimension {}", k.dim()));
    s.push(r);
    Ok(())
}

fn antipode(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, &["structure"])?;
    let st = doc.structure(&name)?;
    let (a, c) = (st.algebra()?, st.coalgebra()?);
    let mut base = st.clone();
    base.kind = StructureKind::Bialgebra;
    base.antipode = None;
    s.push(verified(base.verify())?);
    let mut r = Report::new("antipode");
    match compute_antipode(a, c)? {
        Some(sm) => {
            r.absorb("convolution inverse of the identity", verify_antipode(a, c, &sm));
            if let Some(given) = &st.antipode {
                r.check_maps("agrees with the stored antipode", &sm, given, &[st.dim()]);
            }
            let mut out = Document::new(doc.field);
            let mut h = st.clone();
            h.kind = StructureKind::Hopf;
            h.antipode = Some(sm);
            out.add_structure(&name, &h);
            s.document = Some(out);
        }
        None => {
            r.check("antipode exists", false, "the identity is not convolution invertible");
        }
    }
    s.push(r);
    Ok(())
}

fn rat(doc: &Document, module: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, module, &["module"])?;
    let (over, e, m) = entwined_module(doc, &name, s)?;
    let dd = dual_entwining(&e, None, None)?;
    s.push(dd.report.clone());
    let mr = dual_module_r(&dd, &m)?;
    s.push(mr.report);
    let ed = format!("{over}_dual");
    let mut out = Document::new(doc.field);
    out.add_entwining(&ed, &dd.dual);
    out.add_module(&format!("{name}_r"), &ed, &mr.module);
    s.document = Some(out);
    Ok(())
}

fn adjunction(doc: &Document, module: Option<&str>, dual_module: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = match (module, dual_module) {
        (Some(m), _) => m.to_string(),
        (None, Some(k)) => {
            let others: Vec<&str> = doc.names_of("module").into_iter().filter(|n| *n != k).collect();
            match others.as_slice() {
                [one] => one.to_string(),
                _ => return Err(Error::Precondition("pass --module".into())),
            }
        }
        (None, None) => pick(doc, None, &["module"])?,
    };
    let (_, e, m) = entwined_module(doc, &name, s)?;
    let dd = dual_entwining(&e, None, None)?;
    s.push(dd.report.clone());
    let k = match dual_module {
        Some(k) => {
            let (_, f, km) = entwined_module(doc, k, s)?;
            if f != dd.dual {
                return Err(Error::Precondition(format!("'{k}' is not over the dual entwining")));
            }
            km
        }
        None => {
            s.text.push("K: free module over the dual entwining".into());
            free_entwined_module(&dd.dual)
        }
    };
    let adj = adjunction_check(&dd, &m, &k)?;
    s.push(adj.report);
    Ok(())
}

fn dk(doc: &Document, object: Option<&str>, dual: bool, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, &["dk", "alt-dk"])?;
    if let Object::AltDk { .. } = doc.get(&name)? {
        entwining_of(doc, &name, s)?;
        if dual {
            return Err(Error::Unsupported(
                "dualizing an alternative Doi-Koppinen structure need not yield a comodule coalgebra".into(),
            ));
        }
        return Ok(());
    }
    entwining_of(doc, &name, s)?;
    let d = doc.dk(&name)?;
    let (_, r) = koppinen_smash(&d)?;
    s.push(r);
    if dual {
        let (dd, r) = dual_dk(&d)?;
        s.push(r);
        let mut out = Document::new(doc.field);
        out.add_dk(&format!("{name}_dual"), &dd);
        s.document = Some(out);
    }
    Ok(())
}

fn cleft(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, &["extension"])?;
    let Object::Extension {
        hopf,
        algebra,
        coaction,
        integral,
    } = doc.get(&name)?
    else {
        unreachable!("picked an extension")
    };
    let ext = HExtension::new(doc.structure(hopf)?.clone(), doc.algebra(algebra)?.clone(), coaction.clone())?;
    s.text.push(format!("coinvariants: dimension {} of {}", ext.coinvariants.dim(), ext.algebra.dim()));
    let gamma = integral
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("extension '{name}' gives no integral")))?;
    let ir = check_integral(&ext, gamma)?;
    let mut r = ir.report;
    r.check("cleft", ir.cleft, "the integral is not cleft");
    s.push(r);
    Ok(())
}

fn cocleft(doc: &Document, object: Option<&str>, s: &mut Session) -> Result<(), Error> {
    let name = pick(doc, object, &["coextension"])?;
    let (coext, omega) = coextension(doc, &name, s)?;
    let w = omega.ok_or_else(|| Error::Precondition(format!("coextension '{name}' gives no cointegral")))?;
    let cr = check_cointegral(&coext, &w)?;
    let mut r = cr.report;
    let cocleft = cr.cocleft;
    r.check("cocleft", cocleft, "the cointegral is not cocleft");
    s.push(r);
    if cocleft {
        let dual = dualize_coextension(&coext, Some(&w))?;
        s.push(dual.report.clone());
        s.document = Some(dual_extension_document(doc.field, &format!("{name}_dual"), &dual.extension, Some(w.transpose())));
    }
    Ok(())
}

fn catalog(action: &CatalogCommand, s: &mut Session) -> Result<(), Error> {
    match action {
        CatalogCommand::List => {
            let mut rows = Vec::new();
            for name in catalog_names() {
                let e = catalog_get(&name)?;
                rows.push(Listing {
                    kind: e.object.kind(),
                    field: field_name(e.field),
                    description: e.description,
                    name,
                });
            }
            s.listing = Some(rows);
        }
        CatalogCommand::Show { name } => {
            let e = catalog_get(name)?;
            s.text.push(format!("{name} ({}, over {}): {}", e.object.kind(), field_name(e.field), e.description));
            match verify_entry(&e) {
                Ok(r) => s.push(r),
                Err(Error::Unverified(r)) => s.push(*r),
                Err(err) => return Err(err),
            }
        }
        CatalogCommand::Export { name } => {
            s.document = Some(Document::from_catalog(&catalog_get(name)?)?);
        }
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Dualize { .. } => "dualize",
        Command::Smash { .. } => "smash",
        Command::Coring { .. } => "coring",
        Command::Antipode { .. } => "antipode",
        Command::Rat { .. } => "rat",
        Command::Adjunction { .. } => "adjunction",
        Command::Dk { .. } => "dk",
        Command::Cleft { .. } => "cleft",
        Command::Cocleft { .. } => "cocleft",
        Command::Catalog { action } => match action {
            CatalogCommand::List => "catalog list",
            CatalogCommand::Show { .. } => "catalog show",
            CatalogCommand::Export { .. } => "catalog export",
        },
    }
}

fn execute(cli: &Cli, s: &mut Session) -> Result<(), Error> {
    match &cli.command {
        Command::Check { file, object } => check(&load(file)?, object.as_deref(), s),
        Command::Dualize { file, object } => dualize(&load(file)?, object.as_deref(), s),
        Command::Smash { file, object } => smash(&load(file)?, object.as_deref(), s),
        Command::Coring { file, object } => coring(&load(file)?, object.as_deref(), s),
        Command::Antipode { file, object } => antipode(&load(file)?, object.as_deref(), s),
        Command::Rat { file, module } => rat(&load(file)?, module.as_deref(), s),
        Command::Adjunction {
            file,
            module,
            dual_module,
        } => adjunction(&load(file)?, module.as_deref(), dual_module.as_deref(), s),
        Command::Dk { file, object, dual } => dk(&load(file)?, object.as_deref(), *dual, s),
        Command::Cleft { file, object } => cleft(&load(file)?, object.as_deref(), s),
        Command::Cocleft { file, object } => cocleft(&load(file)?, object.as_deref(), s),
        Command::Catalog { action } => catalog(action, s),
    }
}

fn render_text(s: &Session, error: Option<&Error>, code: i32, document_inline: Option<&str>) -> String {
    let mut out = String::new();
    for line in &s.text {
        out.push_str(line);
        out.push('\n');
    }
    if let Some(rows) = &s.listing {
        let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let kind_width = rows.iter().map(|r| r.kind.len()).max().unwrap_or(0);
        for r in rows {
            out.push_str(&format!(
                "{:width$}  {:kind_width$}  {:3}  {}\n",
                r.name, r.kind, r.field, r.description
            ));
        }
    }
    for r in &s.reports {
        out.push_str(&r.to_string());
    }
    if let Some(e) = error {
        if let Error::Unverified(r) | Error::Internal(r) = e {
            out.push_str(&r.to_string());
        }
        out.push_str(&format!("error: {}\n", headline(e)));
    }
    if !(s.reports.is_empty() && error.is_none()) {
        out.push_str(match code {
            0 => "result: PASS\n",
            1 => "result: FAIL\n",
            _ => "result: ERROR\n",
        });
    }
    if let Some(d) = document_inline {
        out.push_str(d);
    }
    out
}

fn headline(e: &Error) -> String {
    match e {
        Error::Unverified(_) => "input failed verification".into(),
        Error::Internal(_) => "internal consistency failure".into(),
        other => other.to_string(),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut s = Session::default();
    let result = execute(&cli, &mut s);
    let mut error = result.err();
    let mut code = match &error {
        Some(e) => exit_code(e),
        None if s.passed() => 0,
        None => 1,
    };
    let emitted = s.document.as_ref().map(Document::emit);
    let mut document_inline = None;
    if let (Some(text), 0) = (&emitted, code) {
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    error = Some(Error::Precondition(format!("{}: {e}", path.display())));
                    code = 2;
                }
            }
            None => document_inline = Some(text.as_str()),
        }
    }
    let command = command_name(&cli.command);
    let stdout = if cli.json {
        let mut reports = s.reports.clone();
        if let Some(Error::Unverified(r) | Error::Internal(r)) = &error {
            reports.push((**r).clone());
        }
        let status = match code {
            0 => "pass",
            1 => "fail",
            _ => "error",
        };
        let j = JsonOutcome {
            command,
            status,
            error: error.as_ref().map(headline),
            reports: &reports,
            entries: s.listing.as_deref(),
            document: document_inline.map(|d| serde_json::from_str(d).expect("emitted documents are JSON")),
        };
        let mut t = serde_json::to_string_pretty(&j).expect("reports serialize");
        t.push('\n');
        t
    } else if command == "catalog export" && error.is_none() {
        document_inline.unwrap_or_default().to_string()
    } else {
        render_text(&s, error.as_ref(), code, document_inline)
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
