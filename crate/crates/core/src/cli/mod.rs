//! Command-line front end: `check`, `hilbert`, `list`.

mod config;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::paperchecks::{CheckConfig, CheckError, Registry};
use crate::presented::RingPresentation;

pub use config::{parse_config, ConfigError, ConfigFile};
pub use report::{exit_code, report_json, report_text, ConfigEcho, REPORT_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chowcheck",
    version,
    about = "Exact checks of the Chow ring computations for BPGL3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one check or all of them.
    #[command(group(ArgGroup::new("which").required(true).args(["all", "name"])))]
    Check {
        /// Run every registered check.
        #[arg(long)]
        all: bool,
        /// Check name; may be repeated.
        #[arg(long, value_name = "ID")]
        name: Vec<String>,
        /// Degree bound for the degree-bounded checks.
        #[arg(long, value_name = "N")]
        max_degree: Option<u32>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Config file with degree overrides and a default format.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
    /// Graded components of a presented ring.
    Hilbert {
        /// `builtin:Rstar`, `builtin:NAME` for a presentation in `--config`, or a config file.
        #[arg(long, value_name = "PATH|builtin:NAME")]
        spec: String,
        #[arg(long, value_name = "N")]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Config file whose presentations `builtin:NAME` can refer to.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
    /// List the registered checks.
    List {
        /// Also describe the groups, representations and presentations of a config file.
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
    },
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Diagnostics that end a command early.
enum Halt {
    Usage(String),
    Internal(String),
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile, Halt> {
    let Some(p) = path else {
        return Ok(ConfigFile::default());
    };
    let text =
        std::fs::read_to_string(p).map_err(|e| Halt::Usage(format!("{}: {e}", p.display())))?;
    parse_config(&text).map_err(|e| Halt::Usage(format!("{}: {e}", p.display())))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            all,
            name,
            max_degree,
            format,
            config,
        } => cmd_check(all, &name, max_degree, format, &config, out),
        Command::Hilbert {
            spec,
            max_degree,
            format,
            config,
        } => cmd_hilbert(&spec, max_degree, format, &config, out),
        Command::List { config } => cmd_list(&config, out),
    };
    match result {
        Ok(code) => code,
        Err(Halt::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Halt::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn cmd_check(
    all: bool,
    names: &[String],
    max_degree: Option<u32>,
    format: Option<Format>,
    config: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Halt> {
    let file = load_config(config)?;
    let registry = Registry::standard();
    let cfg = CheckConfig {
        max_degree: max_degree.or(file.max_degree),
        per_check: file.per_check.clone(),
    };
    let format = format.or(file.format).unwrap_or(Format::Text);
    let selected: Vec<String> = if all {
        registry
            .list_checks()
            .iter()
            .map(|s| s.name.to_string())
            .collect()
    } else {
        names.to_vec()
    };
    let refs: Vec<&str> = selected.iter().map(String::as_str).collect();
    let report = match registry.run_selected(&refs, &cfg) {
        Ok(r) => r,
        Err(e @ (CheckError::UnknownCheck(_) | CheckError::OutOfRange { .. })) => {
            return Err(Halt::Usage(e.to_string()))
        }
        Err(CheckError::Internal(e)) => return Err(Halt::Internal(e)),
    };
    let echo = ConfigEcho {
        max_degree: cfg.max_degree,
        per_check: cfg.per_check.clone(),
        format: format.as_str().to_string(),
        config: config.as_ref().map(|p| p.display().to_string()),
    };
    let text = match format {
        Format::Text => report_text(&report),
        Format::Json => report_json(&report, &echo) + "\n",
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Halt::Internal(e.to_string()))?;
    Ok(exit_code(&report))
}

fn resolve_presentation(spec: &str, config: &Option<PathBuf>) -> Result<RingPresentation, Halt> {
    let file = load_config(config)?;
    if let Some(name) = spec.strip_prefix("builtin:") {
        if name == "Rstar" {
            return Ok(RingPresentation::rstar());
        }
        return file
            .presentations
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Halt::Usage(format!("unknown presentation `{name}`")));
    }
    let (path, pick) = match spec.split_once('#') {
        Some((p, n)) => (p, Some(n)),
        None => (spec, None),
    };
    let text = std::fs::read_to_string(path).map_err(|e| Halt::Usage(format!("{path}: {e}")))?;
    let parsed = parse_config(&text).map_err(|e| Halt::Usage(format!("{path}: {e}")))?;
    let mut ps = parsed.presentations;
    match pick {
        Some(n) => ps
            .into_iter()
            .find(|p| p.name() == n)
            .ok_or_else(|| Halt::Usage(format!("{path}: no presentation `{n}`"))),
        None if ps.len() == 1 => Ok(ps.remove(0)),
        None => Err(Halt::Usage(format!(
            "{path}: expected exactly one presentation, found {}; select one with `{path}#NAME`",
            ps.len()
        ))),
    }
}

fn cmd_hilbert(
    spec: &str,
    max_degree: u32,
    format: Format,
    config: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Halt> {
    let p = resolve_presentation(spec, config)?;
    let rows = match p.hilbert_table(max_degree) {
        Ok(r) => r,
        Err(e) => return Err(Halt::Internal(e.to_string())),
    };
    let text = match format {
        Format::Text => report::hilbert_text(&rows),
        Format::Json => report::hilbert_json(p.name(), &rows) + "\n",
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Halt::Internal(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_list(config: &Option<PathBuf>, out: &mut dyn Write) -> Result<i32, Halt> {
    let file = load_config(config)?;
    let mut s = String::new();
    for spec in Registry::standard().list_checks() {
        let bound = spec.degree_bound.map_or(String::new(), |(d, max)| {
            format!(" (max_degree {d}, at most {max})")
        });
        s.push_str(&format!(
            "{}\t{}\t{}{bound}\n",
            spec.name, spec.anchor, spec.description
        ));
    }
    for (name, g) in &file.groups {
        s.push_str(&format!(
            "group {name}: order {} on {}\n",
            g.order(),
            g.ctx().names().join(", ")
        ));
    }
    for (name, r) in &file.representations {
        let total = r
            .total_chern()
            .map(|cs| {
                cs.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .unwrap_or_else(|e| e.to_string());
        s.push_str(&format!(
            "representation {name}: dim {}, chern classes [{total}]\n",
            r.dim()
        ));
    }
    for p in &file.presentations {
        s.push_str(&format!(
            "presentation {}: generators {}, {} relations\n",
            p.name(),
            p.ctx().names().join(", "),
            p.relations().len()
        ));
    }
    out.write_all(s.as_bytes())
        .map_err(|e| Halt::Internal(e.to_string()))?;
    Ok(EXIT_OK)
}
