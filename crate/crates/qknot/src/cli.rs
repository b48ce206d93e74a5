//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, CatalogEntry};
use crate::curve::{Ambient, RationalCurve};
use crate::error::Error;
use crate::geometry::{
    infinity_analysis, project_from_node, project_off_curve, project_on_curve, pullback, Projection,
};
use crate::glue::{find_quadric_point_off, glue_q32, glue_rp3, unique_intersection};
use crate::io::{parse_param, parse_point, to_json, CurveFile, PointFile, TransformFile};
use crate::jacobian::rank_report;
use crate::singular::{double_points, is_knot, NodeReport};
use crate::svg::diagram_svg;
use crate::writhe::{plane_diagram, projection_point, writhe, writhe_q32};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qknot",
    version,
    about = "Real rational knots on the (3,2) quadric in RP4"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Curves are JSON files, or `catalog:<id>` for a catalog entry.
#[derive(Subcommand, Debug)]
enum Cmd {
    /// Quadric membership and singular points.
    Verify { curve: String },
    /// Project a quadric curve to RP3 (default: from the first quadric point off it).
    Project {
        curve: String,
        /// Projection center on the quadric, `[a:b:c:d:e]`.
        #[arg(long, conflicts_with_all = ["param", "node"])]
        point: Option<String>,
        /// Project from the curve point at this parameter (`x`, `[s:t]` or `inf`).
        #[arg(long, conflicts_with = "node")]
        param: Option<String>,
        /// Project from the k-th real double point (0-based).
        #[arg(long)]
        node: Option<usize>,
    },
    /// Inverse projection of an RP3 curve onto the quadric.
    Pullback { curve: String },
    /// Glue two knots meeting at exactly one point.
    Glue {
        first: String,
        second: String,
        #[arg(long)]
        reverse: bool,
    },
    /// Encomplexed writhe.
    Writhe { curve: String },
    /// Draw a plane diagram; the crossing table goes to stdout.
    Diagram {
        curve: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rank of the quadric constraint differential.
    Jacobian { curve: String },
    /// Built-in representatives.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Verify {
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    /// Print the curve of an entry as JSON.
    Export {
        id: String,
    },
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
struct Fail {
    code: i32,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Invalid(_) | Error::NotOnQuadric | Error::OnCurve => {
                EXIT_INPUT
            }
            _ => EXIT_FAILED,
        };
        Fail {
            code,
            msg: e.to_string(),
        }
    }
}

fn input(msg: impl Into<String>) -> Fail {
    Fail {
        code: EXIT_INPUT,
        msg: msg.into(),
    }
}

type Out = (String, i32);

fn load_curve(spec: &str) -> Result<RationalCurve, Fail> {
    if let Some(id) = spec.strip_prefix("catalog:") {
        return Ok(find_entry(id)?.curve()?);
    }
    let text =
        std::fs::read_to_string(Path::new(spec)).map_err(|e| input(format!("{spec}: {e}")))?;
    let f: CurveFile = serde_json::from_str(&text)
        .map_err(|e| input(format!("{spec}: malformed curve JSON: {e}")))?;
    Ok(f.to_curve()?)
}

fn find_entry(id: &str) -> Result<CatalogEntry, Fail> {
    catalog::entry(id).ok_or_else(|| input(format!("unknown catalog entry '{id}'")))
}

fn nodes_json(nodes: &[NodeReport]) -> serde_json::Value {
    json!(nodes.iter().map(NodeReport::to_json).collect::<Vec<_>>())
}

fn verify(c: &RationalCurve) -> Result<Out, Fail> {
    let mut doc = serde_json::Map::new();
    doc.insert("ambient".into(), json!(c.ambient()));
    doc.insert("degree".into(), json!(c.degree()));
    let mut ok = true;
    if c.ambient() == Ambient::Rp4 {
        let r = c.quadric_residual()?;
        ok = r.is_zero();
        doc.insert("on_quadric".into(), json!(ok));
        if !ok {
            doc.insert("residual".into(), json!(r.to_string()));
        }
    } else {
        doc.insert("infinity".into(), json!(infinity_analysis(c)?.to_json()));
    }
    doc.insert("certificate".into(), json!(is_knot(c)?));
    doc.insert("singular_points".into(), nodes_json(&double_points(c)?));
    Ok((to_json(&doc), if ok { EXIT_OK } else { EXIT_FAILED }))
}

fn projection_doc(pr: &Projection) -> Result<String, Fail> {
    let f = CurveFile::from_curve(&pr.curve)
        .with_metadata("center", json!(PointFile::from_point(&pr.center)))
        .with_metadata(
            "transform",
            json!(TransformFile::from_transform(&pr.transform)),
        )
        .with_metadata("removed", json!(pr.removed.to_string()))
        .with_metadata("infinity", json!(infinity_analysis(&pr.curve)?.to_json()));
    let f = match pr.contact {
        Some(k) => f.with_metadata("contact", json!(k)),
        None => f,
    };
    let f = if pr.notes.is_empty() {
        f
    } else {
        f.with_metadata("notes", json!(pr.notes))
    };
    Ok(to_json(&f))
}

fn project(
    c: &RationalCurve,
    point: Option<String>,
    param: Option<String>,
    node: Option<usize>,
) -> Result<Out, Fail> {
    let pr = if let Some(p) = point {
        project_off_curve(c, &parse_point(&p)?)?
    } else if let Some(t) = param {
        let (s, t) = parse_param(&t)?;
        project_on_curve(c, &s, &t)?
    } else if let Some(k) = node {
        let nodes: Vec<NodeReport> = double_points(c)?
            .into_iter()
            .filter(NodeReport::is_real)
            .collect();
        let n = nodes.get(k).ok_or_else(|| {
            input(format!(
                "curve has {} real singular points, no index {k}",
                nodes.len()
            ))
        })?;
        project_from_node(c, n)?
    } else {
        project_off_curve(c, &find_quadric_point_off(std::slice::from_ref(c))?)?
    };
    Ok((projection_doc(&pr)?, EXIT_OK))
}

fn pullback_cmd(c: &RationalCurve) -> Result<Out, Fail> {
    let inf = infinity_analysis(c)?;
    let pb = pullback(c)?;
    let f = CurveFile::from_curve(&pb.curve)
        .with_metadata("removed", json!(pb.removed.to_string()))
        .with_metadata("on_conic_multiplicity", json!(inf.on_conic_multiplicity));
    Ok((to_json(&f), EXIT_OK))
}

fn glue(c1: &RationalCurve, c2: &RationalCurve, reverse: bool) -> Result<Out, Fail> {
    let (out, recipe) = match (c1.ambient(), c2.ambient()) {
        (Ambient::Rp4, Ambient::Rp4) => glue_q32(c1, c2, reverse, None)?,
        (Ambient::Rp3Slice, Ambient::Rp3Slice) => {
            glue_rp3(c1, c2, &unique_intersection(c1, c2)?, reverse)?
        }
        _ => return Err(input("both curves must live in the same space")),
    };
    let f = CurveFile::from_curve(&out).with_metadata("recipe", json!(recipe));
    Ok((to_json(&f), EXIT_OK))
}

fn writhe_cmd(c: &RationalCurve) -> Result<Out, Fail> {
    let text = match c.ambient() {
        Ambient::Rp4 => to_json(&writhe_q32(c, None)?),
        Ambient::Rp3Slice => to_json(&writhe(c)?),
    };
    Ok((text, EXIT_OK))
}

fn diagram(c: &RationalCurve, output: &Path) -> Result<Out, Fail> {
    let slice = match c.ambient() {
        Ambient::Rp3Slice => c.clone(),
        Ambient::Rp4 => project_off_curve(c, &projection_point(c)?)?.curve,
    };
    let dg = plane_diagram(&slice)?;
    std::fs::write(output, diagram_svg(&dg))
        .map_err(|e| input(format!("{}: {e}", output.display())))?;
    let doc = json!({
        "writhe": dg.writhe(),
        "center": dg.center.to_strings(),
        "crossings": dg.crossing_table(),
        "genericity": dg.genericity,
    });
    Ok((to_json(&doc), EXIT_OK))
}

fn jacobian(c: &RationalCurve) -> Result<Out, Fail> {
    let r = rank_report(c)?;
    Ok((
        to_json(&r),
        if r.full_rank() { EXIT_OK } else { EXIT_FAILED },
    ))
}

#[derive(Serialize)]
struct ListRow<'a> {
    id: &'a str,
    degree: usize,
    claims: &'a catalog::Claims,
    source: &'a str,
    label: &'a str,
}

fn catalog_cmd(cmd: CatalogCmd) -> Result<Out, Fail> {
    match cmd {
        CatalogCmd::List => {
            let v = catalog::list_entries();
            let rows: Vec<ListRow> = v
                .iter()
                .map(|e| ListRow {
                    id: e.id,
                    degree: e.degree,
                    claims: &e.claims,
                    source: e.source,
                    label: e.label,
                })
                .collect();
            Ok((to_json(&rows), EXIT_OK))
        }
        CatalogCmd::Verify { id, all } => {
            let entries = match (id, all) {
                (Some(id), _) => vec![find_entry(&id)?],
                (None, true) => catalog::list_entries(),
                (None, false) => return Err(input("give an entry id or --all")),
            };
            let reports = catalog::verify_entries(&entries);
            let failed = reports.iter().filter(|r| !r.passed).count();
            let doc = json!({ "entries": reports.len(), "failed": failed, "reports": reports });
            Ok((
                to_json(&doc),
                if failed == 0 { EXIT_OK } else { EXIT_FAILED },
            ))
        }
        CatalogCmd::Export { id } => {
            let e = find_entry(&id)?;
            let f = CurveFile::from_curve(&e.curve()?)
                .with_metadata("id", e.id)
                .with_metadata("label", e.label)
                .with_metadata("source", e.source);
            Ok((to_json(&f), EXIT_OK))
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<Out, Fail> {
    match cmd {
        Cmd::Verify { curve } => verify(&load_curve(&curve)?),
        Cmd::Project {
            curve,
            point,
            param,
            node,
        } => project(&load_curve(&curve)?, point, param, node),
        Cmd::Pullback { curve } => pullback_cmd(&load_curve(&curve)?),
        Cmd::Glue {
            first,
            second,
            reverse,
        } => glue(&load_curve(&first)?, &load_curve(&second)?, reverse),
        Cmd::Writhe { curve } => writhe_cmd(&load_curve(&curve)?),
        Cmd::Diagram { curve, output } => diagram(&load_curve(&curve)?, &output),
        Cmd::Jacobian { curve } => jacobian(&load_curve(&curve)?),
        Cmd::Catalog { cmd } => catalog_cmd(cmd),
    }
}

/// Run with the given arguments (including the program name), writing to the
/// given streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}
