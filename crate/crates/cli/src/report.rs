use anyhow::bail;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One pretty-printed JSON document per run.
    Structured,
    Csv,
    Svg,
}

/// Rendered output plus the overall verdict (exit status 0 iff `success`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

pub trait Report: Serialize {
    const COMMAND: &'static str;

    fn text(&self) -> String;

    fn csv(&self) -> Option<String> {
        None
    }

    fn svg(&self) -> Option<String> {
        None
    }

    fn success(&self) -> bool {
        true
    }
}

#[derive(Serialize)]
struct Envelope<'a, R> {
    command: &'static str,
    passed: bool,
    report: &'a R,
}

pub fn render<R: Report>(report: &R, format: Format) -> anyhow::Result<Outcome> {
    let success = report.success();
    let output = match format {
        Format::Text => report.text(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&Envelope {
                command: R::COMMAND,
                passed: success,
                report,
            })?;
            s.push('\n');
            s
        }
        Format::Csv => match report.csv() {
            Some(s) => s,
            None => bail!("`{}` has no csv output", R::COMMAND),
        },
        Format::Svg => match report.svg() {
            Some(s) => s,
            None => bail!("`{}` has no svg output", R::COMMAND),
        },
    };
    Ok(Outcome { output, success })
}
