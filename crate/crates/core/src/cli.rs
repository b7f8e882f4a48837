//! The `grpext` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::identify;
use crate::cocycles::{aut_extension, schreier_enumerate};
use crate::error::{Error, Result};
use crate::extension::{find_section, is_split, Extension};
use crate::group::FiniteGroup;
use crate::io::{load_extension, load_group, to_json, to_text, ExtensionDoc};
use crate::outer::same_outer_action;
use crate::report::{classify_with, display_name, outer_partition, ClassifyOptions, DEFAULT_BOUND};
use crate::outer::OuterProfile;
use crate::torsor::{act, diff, torsor_report, ExtClassSet, TorsorReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "grpext", about = "Classify and compare extensions of finite groups")]
pub struct Cli {
    /// Largest |G|·|H| to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Accepted for compatibility; output is always deterministic
    #[arg(long, global = true)]
    pub seedless: bool,
    /// Add per-phase durations to classification reports
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: classes, outer classes, torsor and split checks
    Classify { g: String, h: String },
    /// List the extension classes of G by H
    Enumerate {
        g: String,
        h: String,
        /// Include an extension document per class
        #[arg(long)]
        documents: bool,
    },
    /// Action tables of Ext(G, Z) on every outer class
    TorsorCheck { g: String, h: String },
    /// Automorphisms of an extension
    Aut { extension: PathBuf },
    /// Whether an extension splits
    Split { extension: PathBuf },
    /// The extension of G by Z connecting two extensions
    Diff { e1: PathBuf, e2: PathBuf },
    /// Act on an extension by an extension of G by Z(H)
    Act { e: PathBuf, eprime: PathBuf },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ViolationFound(_) => EXIT_VIOLATION,
        Error::UnknownGroup(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Serialize)]
struct ClassLine {
    label: String,
    total: String,
    split: bool,
    central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<ExtensionDoc>,
}

#[derive(Serialize)]
struct Enumeration {
    pair: (String, String),
    count: usize,
    classes: Vec<ClassLine>,
}

#[derive(Serialize)]
struct TorsorClass {
    members: Vec<String>,
    zgroup_order: usize,
    report: TorsorReport,
}

#[derive(Serialize)]
struct TorsorCheck {
    pair: (String, String),
    outer_classes: Vec<TorsorClass>,
}

#[derive(Serialize)]
struct AutListing {
    count: usize,
    cocycle_count: usize,
    automorphisms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct SplitVerdict {
    split: bool,
    verdict: &'static str,
    section: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct Derived {
    total: String,
    order: usize,
    extension: ExtensionDoc,
}

fn derived(e: &Extension) -> Derived {
    Derived {
        total: identify(e.total()).unwrap_or_else(|| format!("order {}", e.total().order())),
        order: e.total().order(),
        extension: ExtensionDoc::from_extension(e),
    }
}

fn pair(g: &FiniteGroup, h: &FiniteGroup) -> (String, String) {
    (display_name(g), display_name(h))
}

fn emit<T: Serialize>(format: Format, value: &T) -> String {
    match format {
        Format::Json => to_json(value) + "\n",
        Format::Text => to_text(value),
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let f = cli.format;
    match &cli.command {
        Command::Classify { g, h } => {
            let (g, h) = (load_group(g)?, load_group(h)?);
            let opts = ClassifyOptions { timing: cli.timing };
            Ok(emit(f, &classify_with(&g, &h, cli.bound, &opts)?))
        }
        Command::Enumerate { g, h, documents } => {
            let (g, h) = (load_group(g)?, load_group(h)?);
            let classes: Vec<ClassLine> = schreier_enumerate(&g, &h, cli.bound)?
                .iter()
                .enumerate()
                .map(|(i, e)| ClassLine {
                    label: format!("E{i}"),
                    total: display_name(e.total()),
                    split: is_split(e),
                    central: e.is_central(),
                    document: documents.then(|| ExtensionDoc::from_extension(e)),
                })
                .collect();
            Ok(emit(
                f,
                &Enumeration {
                    pair: pair(&g, &h),
                    count: classes.len(),
                    classes,
                },
            ))
        }
        Command::TorsorCheck { g, h } => {
            let (g, h) = (load_group(g)?, load_group(h)?);
            let members = schreier_enumerate(&g, &h, cli.bound)?;
            let profiles: Vec<OuterProfile> = members.iter().map(OuterProfile::new).collect();
            let mut outer_classes = Vec::new();
            let mut failure = None;
            for part in outer_partition(&profiles)? {
                let exts: Vec<Extension> = part.iter().map(|&i| members[i].clone()).collect();
                let set = ExtClassSet::from_members(&exts[0], &exts)?;
                let report = torsor_report(&set)?;
                if let (None, Some(c)) = (&failure, &report.counterexample) {
                    failure = Some(c.clone());
                }
                outer_classes.push(TorsorClass {
                    members: part.iter().map(|i| format!("E{i}")).collect(),
                    zgroup_order: set.zgroup().len(),
                    report,
                });
            }
            let text = emit(
                f,
                &TorsorCheck {
                    pair: pair(&g, &h),
                    outer_classes,
                },
            );
            match failure {
                Some(c) => Err(Error::ViolationFound(format!("{c}\n{text}"))),
                None => Ok(text),
            }
        }
        Command::Aut { extension } => {
            let e = load_extension(extension)?;
            let auts = aut_extension(&e)?;
            Ok(emit(
                f,
                &AutListing {
                    count: auts.len(),
                    cocycle_count: auts.cocycles.len(),
                    automorphisms: auts.direct.iter().map(|a| a.map().map().to_vec()).collect(),
                },
            ))
        }
        Command::Split { extension } => {
            let e = load_extension(extension)?;
            let section = find_section(&e);
            Ok(emit(
                f,
                &SplitVerdict {
                    split: section.is_some(),
                    verdict: if section.is_some() { "split" } else { "not split" },
                    section: section.map(|s| s.map().to_vec()),
                },
            ))
        }
        Command::Diff { e1, e2 } => {
            let (e1, e2) = (load_extension(e1)?, load_extension(e2)?);
            let w = same_outer_action(&e1, &e2)?.ok_or(Error::NotSameOuterAction)?;
            Ok(emit(f, &derived(&diff(&e1, &e2, &w)?)))
        }
        Command::Act { e, eprime } => {
            let (e, ep) = (load_extension(e)?, load_extension(eprime)?);
            Ok(emit(f, &derived(&act(&e, &ep)?)))
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
