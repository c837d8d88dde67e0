use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use deformap::leibniz::{check_leibniz, check_representation, LeibnizReport};
use deformap::linfty::{
    controlling_algebra, governing_algebra, mc_defect, restrict_a, GradedElement, PairAlgebra,
};
use deformap::prototwilled::{
    check_proto_twilled, deformation_cohomology, induced_bracket, induced_representation,
    is_deformation_map, twist_omega, OmegaStructure, COMPONENTS,
};
use deformap::zoo::fixtures::{fixture, Fixture, FIXTURE_NAMES};
use deformap::zoo::{
    candidate_count, enumerate_deformation_maps, equivalence_check, linear_map_from_index, RSet,
    StructureClass, DEFAULT_BUDGET,
};
use deformap::{Field, MultiMap, SplitSpace, Subspace};
use serde_json::{json, Value};

use crate::document::{parse_field, sparse_to_json, tensor_to_json, AlgebraDocument};
use crate::error::CliResult;
use crate::report::{Format, Report};

/// Truncation used for the pair algebra: degree-0 pairs see `l̃₁ … l̃₄`.
pub const PAIR_TRUNCATION: usize = 4;

/// Violations listed in a report before the rest are only counted.
const LISTED_VIOLATIONS: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "deformap",
    version,
    about = "Exact checks for Leibniz algebras, proto-twilled structures and deformation maps",
    after_help = "Exit status: 0 when the verdict is pass, 1 when it is fail, 2 on usage, input or engine errors."
)]
pub struct Cli {
    /// Field to read the document in (Q, F2, F5, ...), overriding the declared one.
    #[arg(long, global = true, value_parser = field_arg)]
    pub field: Option<Field>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout. For zoo-build this is the document path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SubalgebraArg {
    Full,
    BPrime,
    BDoublePrime,
    M,
}

impl SubalgebraArg {
    fn subspace(self) -> Subspace {
        match self {
            SubalgebraArg::Full => Subspace::Full,
            SubalgebraArg::BPrime => Subspace::BPrime,
            SubalgebraArg::BDoublePrime => Subspace::BDoublePrime,
            SubalgebraArg::M => Subspace::M,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SubalgebraArg::Full => "full",
            SubalgebraArg::BPrime => "b-prime",
            SubalgebraArg::BDoublePrime => "b-double-prime",
            SubalgebraArg::M => "m",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Leibniz identity of the bracket on 𝔤 ⊕ 𝔥, with ⟦Ω,Ω⟧ alongside.
    CheckLeibniz { document: PathBuf },
    /// Leibniz identity plus the five component equations and the structure class.
    CheckProto { document: PathBuf },
    /// Whether a named map r: 𝔥 → 𝔤 is a deformation map, with its residual.
    IsDeformationMap {
        document: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// The Leibniz algebra 𝔥_r and its representation on 𝔤.
    Induced {
        document: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// The twisted structure Ω_r and its four components.
    Twist {
        document: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Cohomology dimensions of 𝔥_r with coefficients in 𝔤.
    Cohomology {
        document: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Maurer-Cartan defect of r in the controlling algebra.
    McCheck {
        document: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// MC elements of the algebra twisted by r against deformation maps r + r'.
    GoverningCheck {
        document: PathBuf,
        #[arg(long)]
        map: String,
        /// A single r'; without it every r' over the finite field is scanned.
        #[arg(long)]
        perturbation: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Maurer-Cartan defect of the pair (s⁻¹Ω, r).
    PairMcCheck {
        document: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long, value_enum, default_value_t = SubalgebraArg::Full)]
        subalgebra: SubalgebraArg,
    },
    /// Every deformation map over the finite field, in enumeration order.
    Enumerate {
        document: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Writes a zoo fixture as a document (default field F5).
    ZooBuild { name: String },
    /// Class, operator equivalence and predicate agreement on zoo fixtures (default field F2).
    ZooVerify {
        #[arg(default_value = "all")]
        name: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

/// What a run produced: a report, and for `zoo-build` without `--out` the document itself.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub document: Option<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            document: None,
        }
    }
}

struct Ctx {
    field: Option<Field>,
    args: BTreeMap<String, Value>,
}

impl Ctx {
    fn arg(&mut self, k: &str, v: impl Into<Value>) {
        self.args.insert(k.to_string(), v.into());
    }

    fn load(&mut self, path: &std::path::Path) -> CliResult<AlgebraDocument> {
        self.arg("document", path.display().to_string());
        AlgebraDocument::load(path, self.field)
    }

    fn finish(self, command: &'static str, verdict: bool, evidence: Value) -> Report {
        let mut r = Report::new(command, verdict, evidence);
        r.args = self.args;
        r
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let mut ctx = Ctx {
        field: cli.field,
        args: BTreeMap::new(),
    };
    if let Some(f) = cli.field {
        ctx.arg("field", f.to_string());
    }
    let outcome = match &cli.command {
        Command::CheckLeibniz { document } => {
            let doc = ctx.load(document)?;
            let rep = check_leibniz(doc.structure.omega())?;
            ctx.finish("check-leibniz", rep.holds, leibniz_evidence(&rep))
                .into()
        }
        Command::CheckProto { document } => {
            let doc = ctx.load(document)?;
            let (holds, ev) = proto_evidence(&doc.structure)?;
            ctx.finish("check-proto", holds, ev).into()
        }
        Command::IsDeformationMap { document, map } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            let r = doc.map(map)?;
            let rep = is_deformation_map(&doc.structure, r)?;
            let ev = json!({
                "is_deformation_map": rep.is_deformation_map,
                "graph_closed": rep.graph_closed,
                "residual": tensor_to_json(&rep.residual),
                "residual_nonzero": sparse_to_json(&rep.residual),
            });
            ctx.finish("is-deformation-map", rep.is_deformation_map, ev)
                .into()
        }
        Command::Induced { document, map } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            let s = &doc.structure;
            let r = doc.map(map)?;
            match not_deformation_map(s, r)? {
                Some(ev) => ctx.finish("induced", false, ev).into(),
                None => {
                    let alg = induced_bracket(s, r)?;
                    let rep = induced_representation(s, r)?;
                    let leib = check_leibniz(alg.bracket())?;
                    let rep_ok = check_representation(&alg, &rep)?;
                    let ev = json!({
                        "is_deformation_map": true,
                        "bracket": tensor_to_json(alg.bracket()),
                        "psi_l": tensor_to_json(rep.rho_l()),
                        "psi_r": tensor_to_json(rep.rho_r()),
                        "leibniz_holds": leib.holds,
                        "representation_holds": rep_ok.holds,
                        "failed_identities": rep_ok.identities.iter().filter(|i| !i.holds).map(|i| i.name).collect::<Vec<_>>(),
                    });
                    ctx.finish("induced", leib.holds && rep_ok.holds, ev).into()
                }
            }
        }
        Command::Twist { document, map } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            let s = &doc.structure;
            let r = doc.map(map)?;
            let tw = twist_omega(s, r)?;
            let is_def = is_deformation_map(s, r)?.is_deformation_map;
            let leib = check_leibniz(tw.structure.omega())?;
            let eta_zero = tw.eta_r.is_zero();
            let maps: serde_json::Map<String, Value> = COMPONENTS
                .iter()
                .map(|(name, _, _)| {
                    let m = tw.structure.maps().get(name).expect("known component");
                    (name.to_string(), tensor_to_json(m))
                })
                .collect();
            let ev = json!({
                "is_deformation_map": is_def,
                "twisted_leibniz_holds": leib.holds,
                "eta_r_vanishes": eta_zero,
                "theta_r": sparse_to_json(&tw.theta_r),
                "mu_r": sparse_to_json(&tw.mu_r),
                "nu_r": sparse_to_json(&tw.nu_r),
                "eta_r": sparse_to_json(&tw.eta_r),
                "maps": maps,
            });
            ctx.finish("twist", leib.holds && (!is_def || eta_zero), ev)
                .into()
        }
        Command::Cohomology {
            document,
            map,
            max_degree,
        } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            ctx.arg("max_degree", *max_degree);
            let s = &doc.structure;
            let r = doc.map(map)?;
            match not_deformation_map(s, r)? {
                Some(ev) => ctx.finish("cohomology", false, ev).into(),
                None => {
                    let dims = deformation_cohomology(s, r, *max_degree)?;
                    let table: Vec<Value> = dims
                        .iter()
                        .map(|d| {
                            json!({
                                "n": d.n,
                                "cochains": d.cochains,
                                "cocycles": d.cocycles,
                                "coboundaries": d.coboundaries,
                                "cohomology": d.cohomology,
                            })
                        })
                        .collect();
                    let ev = json!({"is_deformation_map": true, "dimensions": table});
                    ctx.finish("cohomology", true, ev).into()
                }
            }
        }
        Command::McCheck { document, map } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            let s = &doc.structure;
            let r = doc.map(map)?;
            let c = controlling_algebra(s)?;
            let defect = mc_defect(&c, &c.element(r)?)?;
            let is_def = is_deformation_map(s, r)?.is_deformation_map;
            let zero = defect.is_zero();
            let ev = json!({
                "mc_defect_vanishes": zero,
                "defect": element_evidence(s.space(), &defect)?,
                "is_deformation_map": is_def,
                "agrees_with_deformation_map": zero == is_def,
            });
            ctx.finish("mc-check", zero, ev).into()
        }
        Command::GoverningCheck {
            document,
            map,
            perturbation,
            budget,
        } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            let s = &doc.structure;
            let r = doc.map(map)?;
            let tw = governing_algebra(s, r)?;
            let check = |p: &MultiMap| -> CliResult<(bool, bool)> {
                let mc = mc_defect(&tw, &tw.inner().element(p)?)?.is_zero();
                let sum = r.add(p)?;
                Ok((mc, is_deformation_map(s, &sum)?.is_deformation_map))
            };
            match perturbation {
                Some(name) => {
                    ctx.arg("perturbation", name.as_str());
                    let (mc, def) = check(doc.map(name)?)?;
                    let ev = json!({
                        "mc_defect_vanishes": mc,
                        "sum_is_deformation_map": def,
                    });
                    ctx.finish("governing-check", mc == def, ev).into()
                }
                None => {
                    ctx.arg("budget", budget.to_string());
                    let (field, h, g) = (s.field(), s.space().dim_h(), s.space().dim_g());
                    let n = scan_size(field, h, g, *budget)?;
                    let mut solutions = Vec::new();
                    let mut disagreements = Vec::new();
                    for t in 0..n {
                        let p = linear_map_from_index(field, h, g, t as u128);
                        let (mc, def) = check(&p)?;
                        if mc {
                            solutions.push(t);
                        }
                        if mc != def {
                            disagreements.push(json!({"index": t, "mc_defect_vanishes": mc, "sum_is_deformation_map": def}));
                        }
                    }
                    let ev = json!({
                        "tested": n,
                        "mc_solutions": solutions.len(),
                        "mc_solution_indices": solutions,
                        "disagreements": disagreements,
                    });
                    ctx.finish("governing-check", disagreements.is_empty(), ev)
                        .into()
                }
            }
        }
        Command::PairMcCheck {
            document,
            map,
            subalgebra,
        } => {
            let doc = ctx.load(document)?;
            ctx.arg("map", map.as_str());
            ctx.arg("subalgebra", subalgebra.name());
            let s = &doc.structure;
            let r = doc.map(map)?;
            let l = PairAlgebra::new(*s.space(), subalgebra.subspace(), PAIR_TRUNCATION)?;
            let defect = mc_defect(&l, &l.element(s.omega(), r)?)?;
            let proto = check_proto_twilled(s)?.holds;
            let is_def = is_deformation_map(s, r)?.is_deformation_map;
            let zero = defect.is_zero();
            let ev = json!({
                "mc_defect_vanishes": zero,
                "defect": element_evidence(s.space(), &defect)?,
                "proto_twilled": proto,
                "is_deformation_map": is_def,
                "agrees_with_pair_condition": zero == (proto && is_def),
            });
            ctx.finish("pair-mc-check", zero, ev).into()
        }
        Command::Enumerate { document, budget } => {
            let doc = ctx.load(document)?;
            ctx.arg("budget", budget.to_string());
            let s = &doc.structure;
            let needed = candidate_count(s.field(), s.space().dim_h(), s.space().dim_g())?;
            let found = enumerate_deformation_maps(s, *budget)?;
            let ev = json!({
                "candidates": needed.to_string(),
                "count": found.len(),
                "maps": found.iter().map(tensor_to_json).collect::<Vec<_>>(),
            });
            ctx.finish("enumerate", true, ev).into()
        }
        Command::ZooBuild { name } => {
            let field = cli.field.unwrap_or(Field::Prime(5));
            ctx.arg("name", name.as_str());
            ctx.arg("field", field.to_string());
            let fx = fixture(name, field)?;
            let doc = AlgebraDocument::from_fixture(&fx);
            let proto = check_proto_twilled(&fx.structure)?.holds;
            let ev = json!({
                "proto_twilled": proto,
                "class": class_name(StructureClass::of(&fx.structure)),
                "maps": doc.linear_maps.keys().cloned().collect::<Vec<_>>(),
            });
            let text = doc.to_json_string();
            match &cli.out {
                Some(path) => {
                    doc.write(path)?;
                    ctx.arg("out", path.display().to_string());
                    ctx.finish("zoo-build", proto, ev).into()
                }
                None => Outcome {
                    report: ctx.finish("zoo-build", proto, ev),
                    document: Some(text),
                },
            }
        }
        Command::ZooVerify { name, budget } => {
            let field = cli.field.unwrap_or(Field::Prime(2));
            ctx.arg("name", name.as_str());
            ctx.arg("field", field.to_string());
            ctx.arg("budget", budget.to_string());
            let names: Vec<&str> = if name == "all" {
                FIXTURE_NAMES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let mut all = true;
            let mut per = serde_json::Map::new();
            for n in names {
                let fx = fixture(n, field)?;
                let (ok, ev) = verify_fixture(&fx, *budget)?;
                all &= ok;
                per.insert(n.to_string(), ev);
            }
            ctx.finish("zoo-verify", all, json!({ "fixtures": per }))
                .into()
        }
    };
    Ok(outcome)
}

fn scan_size(field: Field, dim_in: usize, dim_out: usize, budget: u128) -> CliResult<u64> {
    let needed = candidate_count(field, dim_in, dim_out)?;
    if needed > budget || needed > u64::MAX as u128 {
        return Err(deformap::Error::BudgetExceeded { needed, budget }.into());
    }
    Ok(needed as u64)
}

fn class_name(c: StructureClass) -> &'static str {
    match c {
        StructureClass::Proto => "proto-twilled",
        StructureClass::QuasiTwilled => "quasi-twilled",
        StructureClass::Twilled => "twilled",
    }
}

fn leibniz_evidence(rep: &LeibnizReport) -> Value {
    let listed: Vec<Value> = rep
        .violations
        .iter()
        .take(LISTED_VIOLATIONS)
        .map(|v| {
            json!({
                "triple": v.triple,
                "residual": v.residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "leibniz_holds": rep.holds,
        "violation_count": rep.violations.len(),
        "violations": listed,
        "square_vanishes": rep.square_vanishes,
        "diamond_vanishes": rep.diamond_vanishes,
    })
}

fn proto_evidence(s: &OmegaStructure) -> CliResult<(bool, Value)> {
    let rep = check_proto_twilled(s)?;
    let eqs: Vec<Value> = rep
        .equations
        .iter()
        .map(|e| {
            json!({
                "equation": e.name,
                "holds": e.holds,
                "residual_nonzero": sparse_to_json(&e.residual),
            })
        })
        .collect();
    let ev = json!({
        "leibniz": leibniz_evidence(&rep.leibniz),
        "equations": eqs,
        "equations_hold": rep.equations_hold,
        "class": class_name(StructureClass::of(s)),
    });
    Ok((rep.holds, ev))
}

/// `Some(evidence)` when `r` is not a deformation map.
fn not_deformation_map(s: &OmegaStructure, r: &MultiMap) -> CliResult<Option<Value>> {
    let rep = is_deformation_map(s, r)?;
    Ok((!rep.is_deformation_map).then(|| {
        json!({
            "is_deformation_map": false,
            "residual": tensor_to_json(&rep.residual),
            "residual_nonzero": sparse_to_json(&rep.residual),
        })
    }))
}

/// Nonzero coefficients of both parts; the base part is also shown on `𝔥^{⊗n} → 𝔤`.
fn element_evidence(space: &SplitSpace, e: &GradedElement) -> CliResult<Value> {
    let mut out = serde_json::Map::new();
    out.insert("degree".into(), json!(e.degree()));
    if let Some(m) = e.shifted_part() {
        out.insert("shifted_nonzero".into(), sparse_to_json(m));
    }
    if let Some(m) = e.base_part() {
        out.insert("base_nonzero".into(), sparse_to_json(m));
        out.insert("base_on_h".into(), tensor_to_json(&restrict_a(space, m)?));
    }
    Ok(Value::Object(out))
}

/// Structure class, operator equivalence (for built examples) and, on each
/// listed map, agreement of residual, graph closure and MC defect.
fn verify_fixture(fx: &Fixture, budget: u128) -> CliResult<(bool, Value)> {
    let s = &fx.structure;
    let (proto, proto_ev) = proto_evidence(s)?;
    let class = StructureClass::of(s);
    let mut ok = proto;
    let mut ev = serde_json::Map::new();
    ev.insert("proto_twilled".into(), json!(proto));
    ev.insert("class".into(), json!(class_name(class)));
    if !proto {
        ev.insert("proto_evidence".into(), proto_ev);
    }
    if let (Some(kind), Some(inputs)) = (fx.kind, &fx.inputs) {
        let class_ok = class >= kind.expected_class();
        ok &= class_ok;
        ev.insert("kind".into(), json!(kind.name()));
        ev.insert(
            "expected_class".into(),
            json!(class_name(kind.expected_class())),
        );
        ev.insert("class_ok".into(), json!(class_ok));
        let eq = equivalence_check(kind, inputs, &RSet::Exhaustive { budget })?;
        ok &= eq.holds;
        ev.insert(
            "equivalence".into(),
            json!({
                "operator": kind.operator(),
                "holds": eq.holds,
                "tested": eq.tested,
                "positives": eq.positives,
                "disagreements": eq.disagreements.iter().map(|d| json!({
                    "r": tensor_to_json(&d.r),
                    "classified": d.classified,
                    "deformation_map": d.deformation_map,
                })).collect::<Vec<_>>(),
            }),
        );
    }
    // The controlling algebra has l₃, so its MC equation needs 2 and 3 invertible.
    let mc_available = s.field().characteristic() == 0 || s.field().characteristic() > 3;
    let controlling = if mc_available && proto {
        Some(controlling_algebra(s)?)
    } else {
        None
    };
    let mut maps = serde_json::Map::new();
    for (name, r) in &fx.maps {
        let rep = is_deformation_map(s, r)?;
        let mut agree = rep.is_deformation_map == rep.graph_closed;
        let mc = match &controlling {
            Some(c) => {
                let z = mc_defect(c, &c.element(r)?)?.is_zero();
                agree &= z == rep.is_deformation_map;
                json!(z)
            }
            None => json!("skipped: characteristic too small"),
        };
        ok &= agree;
        maps.insert(
            name.clone(),
            json!({
                "is_deformation_map": rep.is_deformation_map,
                "graph_closed": rep.graph_closed,
                "mc_defect_vanishes": mc,
                "agree": agree,
            }),
        );
    }
    ev.insert("maps".into(), Value::Object(maps));
    ev.insert("ok".into(), json!(ok));
    Ok((ok, Value::Object(ev)))
}
