//! Command-line front end: model files in, tables, result documents and
//! diagrams out.

pub mod diagram;
pub mod document;
pub mod render;
pub mod spec;

use clap::{Parser, Subcommand};
use document::{
    critical_rows, dims, fixed_point_rows, flagged_singular, kirwan_doc, les_rows, verdict_name, LinkDoc, PolygonDoc,
    ResultDocument,
};
use quotient_core::analysis::{analyze, LevelAnalysis};
use quotient_core::desing::desing_poincare;
use quotient_core::les::{les_assemble, link_cohomology, LinkData};
use quotient_core::polygon::apol_report;
use quotient_core::wallcross::{projective_reduced_poincare, reduced_poincare, ChamberQuery};
use quotient_core::{parse_rational, LevelKind, Rational};
use spec::{load_spec, LoadedSpec, Model};
use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Core(quotient_core::Error),
}

impl From<quotient_core::Error> for CliError {
    fn from(e: quotient_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{}", e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_internal() => 3,
            _ => 2,
        }
    }
}

/// Exact Betti numbers of circle quotients of products of 2-spheres.
#[derive(Parser, Debug)]
#[command(name = "qcoh", version)]
pub struct Cli {
    /// Also write the result document as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the fixed points with their values and weights.
    FixedPoints { spec: PathBuf },
    /// List the critical values with the number of fixed points over each.
    CriticalValues { spec: PathBuf },
    /// Betti numbers of the reduced space at a regular level.
    Reduce {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Betti numbers of the partial desingularization at the spec level.
    Desing { spec: PathBuf },
    /// Betti numbers of the quotient at the spec level, with derivation flags.
    SingularBetti { spec: PathBuf },
    /// The exact sequence relating the quotient, its desingularization and the cokernel.
    LesTable { spec: PathBuf },
    /// Cohomology of the link of an isolated singular point.
    Link {
        #[arg(long)]
        lplus: usize,
        #[arg(long)]
        lminus: usize,
    },
    /// Abelian polygon space with side lengths r1 .. rn (the last side is the level).
    Apol {
        #[arg(required = true, num_args = 3..)]
        lengths: Vec<String>,
    },
    /// Everything at the spec level.
    Report { spec: PathBuf },
    /// Momentum-line diagram as SVG.
    Diagram {
        spec: PathBuf,
        #[arg(long, value_name = "PATH")]
        svg: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::FixedPoints { .. } => "fixed-points",
            Command::CriticalValues { .. } => "critical-values",
            Command::Reduce { .. } => "reduce",
            Command::Desing { .. } => "desing",
            Command::SingularBetti { .. } => "singular-betti",
            Command::LesTable { .. } => "les-table",
            Command::Link { .. } => "link",
            Command::Apol { .. } => "apol",
            Command::Report { .. } => "report",
            Command::Diagram { .. } => "diagram",
        }
    }
}

fn fill_fixed_points(doc: &mut ResultDocument, spec: &LoadedSpec) {
    let points = match &spec.model {
        Model::Projective(m) => m.projective_fixed_components(),
        Model::Spheres(m) | Model::Polygon(_, m) => m.enumerate_fixed_points(),
    };
    doc.fixed_points = Some(fixed_point_rows(&points));
}

fn fill_critical_values(doc: &mut ResultDocument, spec: &LoadedSpec) {
    let levels = match &spec.model {
        Model::Projective(m) => m.critical_values(),
        Model::Spheres(m) | Model::Polygon(_, m) => m.critical_values(),
    };
    doc.critical_values = Some(critical_rows(&levels));
}

fn link_doc(point: Option<String>, l: &LinkData) -> LinkDoc {
    let h = link_cohomology(l);
    LinkDoc {
        point,
        ell_plus: l.ell_plus,
        ell_minus: l.ell_minus,
        dimension: l.dimension(),
        betti: dims(&h, l.dimension()),
    }
}

fn fill_analysis(doc: &mut ResultDocument, a: &LevelAnalysis) -> Result<(), CliError> {
    let top = a.model.quotient_dimension();
    doc.verdict = Some(verdict_name(a.verdict).into());
    if a.verdict == quotient_core::analysis::LevelVerdict::Regular {
        doc.reduced = Some(dims(&a.betti, top));
    }
    doc.desing = a.desing.as_ref().map(|d| dims(d, top));
    doc.singular = Some(flagged_singular(a)?);
    doc.les = a.les.as_ref().map(les_rows);
    if !a.singular_points.is_empty() {
        doc.links = Some(
            a.singular_points
                .iter()
                .map(|s| link_doc(Some(s.point.label().to_string()), &s.link))
                .collect(),
        );
    }
    doc.kirwan = a.kirwan.as_ref().map(kirwan_doc);
    Ok(())
}

fn report(doc: &mut ResultDocument, spec: &LoadedSpec) -> Result<(), CliError> {
    fill_fixed_points(doc, spec);
    fill_critical_values(doc, spec);
    match &spec.model {
        Model::Projective(m) => {
            let kind = m.is_regular(&spec.level);
            doc.verdict = Some(
                match kind {
                    LevelKind::Regular => "regular",
                    LevelKind::Critical => "singular",
                    LevelKind::OutsideImage => "empty",
                }
                .into(),
            );
            if kind != LevelKind::Critical {
                let p = projective_reduced_poincare(m, &spec.level)?;
                doc.reduced = Some(dims(&p, m.quotient_dimension()));
            }
        }
        Model::Spheres(m) => fill_analysis(doc, &analyze(m, &spec.level)?)?,
        Model::Polygon(p, m) => {
            let r = apol_report(p)?;
            fill_analysis(doc, &r.analysis)?;
            doc.polygon = Some(PolygonDoc {
                verdict: verdict_name(r.verdict).into(),
                betti: dims(&r.betti, m.quotient_dimension()),
                duality_defect: r.duality_defect().to_vec(),
            });
        }
    }
    Ok(())
}

fn parse_level(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(CliError::from)
}

pub fn run(cli: &Cli) -> Result<ResultDocument, CliError> {
    let name = cli.command.name();
    let doc = match &cli.command {
        Command::FixedPoints { spec } => {
            let spec = load_spec(spec)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            fill_fixed_points(&mut doc, &spec);
            doc
        }
        Command::CriticalValues { spec } => {
            let spec = load_spec(spec)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            fill_critical_values(&mut doc, &spec);
            doc
        }
        Command::Reduce { spec, level } => {
            let spec = load_spec(spec)?;
            let level = parse_level(level)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            doc.level = Some(quotient_core::exactalg::format_rational(&level));
            let reduced = match &spec.model {
                Model::Projective(m) => dims(&projective_reduced_poincare(m, &level)?, m.quotient_dimension()),
                Model::Spheres(m) | Model::Polygon(_, m) => dims(
                    &reduced_poincare(&ChamberQuery::new(m, level.clone()))?,
                    m.quotient_dimension(),
                ),
            };
            doc.verdict = Some("regular".into());
            doc.reduced = Some(reduced);
            doc
        }
        Command::Desing { spec } => {
            let spec = load_spec(spec)?;
            let m = spec.require_spheres(name)?;
            let p = desing_poincare(&m.recentered(&spec.level))?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            doc.desing = Some(dims(&p, m.quotient_dimension()));
            doc
        }
        Command::SingularBetti { spec } => {
            let spec = load_spec(spec)?;
            let m = spec.require_spheres(name)?;
            let a = analyze(m, &spec.level)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            doc.verdict = Some(verdict_name(a.verdict).into());
            doc.singular = Some(flagged_singular(&a)?);
            doc
        }
        Command::LesTable { spec } => {
            let spec = load_spec(spec)?;
            let m = spec.require_spheres(name)?;
            let les = les_assemble(&m.recentered(&spec.level))?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            doc.les = Some(les_rows(&les));
            doc
        }
        Command::Link { lplus, lminus } => {
            let l = LinkData::new(*lplus, *lminus)?;
            let mut doc = ResultDocument::new(name, None);
            doc.links = Some(vec![link_doc(None, &l)]);
            doc
        }
        Command::Apol { lengths } => {
            let lengths = lengths.iter().map(|s| parse_level(s)).collect::<Result<Vec<_>, _>>()?;
            let spec = spec::polygon(lengths)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            report(&mut doc, &spec)?;
            doc
        }
        Command::Report { spec } => {
            let spec = load_spec(spec)?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            report(&mut doc, &spec)?;
            doc
        }
        Command::Diagram { spec, svg } => {
            let spec = load_spec(spec)?;
            let levels = match &spec.model {
                Model::Projective(m) => m.critical_values(),
                Model::Spheres(m) | Model::Polygon(_, m) => m.critical_values(),
            };
            let title = format!("{} at level {}", spec.echo.kind, spec.echo.level);
            std::fs::write(svg, diagram::render_svg(&title, &levels, &spec.level))
                .map_err(|e| CliError::Invalid(format!("cannot write {}: {}", svg.display(), e)))?;
            let mut doc = ResultDocument::new(name, Some(&spec));
            doc.critical_values = Some(critical_rows(&levels));
            doc
        }
    };
    Ok(doc)
}
