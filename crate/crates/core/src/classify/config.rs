use std::path::PathBuf;
use std::str::FromStr;

use super::{ClassifyError, SearchOptions};
use crate::criteria::Family;
use crate::field::parse_order;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Tsv,
    Jsonl,
}

impl FromStr for ReportFormat {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<ReportFormat, ClassifyError> {
        match s {
            "tsv" => Ok(ReportFormat::Tsv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            _ => Err(ClassifyError::Config(format!("unknown format `{s}`"))),
        }
    }
}

/// A search run read from `key=value` lines. Recognized keys: `q`,
/// `family`, `normalize`, `use_prefilter`, `parallel_width`, `output`,
/// `format`. Blank lines and `#` comments are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub q: Option<u64>,
    pub family: Family,
    pub normalize: bool,
    pub use_prefilter: bool,
    pub parallel_width: usize,
    pub output: Option<PathBuf>,
    pub format: ReportFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q: None,
            family: Family::General,
            normalize: false,
            use_prefilter: true,
            parallel_width: 1,
            output: None,
            format: ReportFormat::Tsv,
        }
    }
}

fn parse_bool(key: &str, v: &str) -> Result<bool, ClassifyError> {
    match v {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        _ => Err(ClassifyError::Config(format!("{key}: expected a boolean, got `{v}`"))),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<RunConfig, ClassifyError> {
        let mut cfg = RunConfig::default();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ClassifyError::Config(format!("expected key=value: `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "q" => {
                    cfg.q = Some(
                        parse_order(value).ok_or_else(|| ClassifyError::Config(format!("q: `{value}`")))?,
                    )
                }
                "family" => cfg.family = value.parse()?,
                "normalize" => cfg.normalize = parse_bool(key, value)?,
                "use_prefilter" => cfg.use_prefilter = parse_bool(key, value)?,
                "parallel_width" => {
                    cfg.parallel_width = value
                        .parse()
                        .ok()
                        .filter(|&w| w > 0)
                        .ok_or_else(|| ClassifyError::Config(format!("parallel_width: `{value}`")))?
                }
                "output" => cfg.output = Some(PathBuf::from(value)),
                "format" => cfg.format = value.parse()?,
                _ => return Err(ClassifyError::Config(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn search_options(&self) -> SearchOptions {
        SearchOptions {
            use_prefilter: self.use_prefilter,
            normalize: self.normalize,
            width: self.parallel_width,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = RunConfig::parse(
            "# run\nq = 3^5\nfamily=char3x2\nnormalize=true\nuse_prefilter=false\n\
             parallel_width=8\noutput=out.jsonl\nformat=jsonl\n",
        )
        .unwrap();
        assert_eq!(cfg.q, Some(243));
        assert_eq!(cfg.family, Family::Char3X2);
        assert!(cfg.normalize && !cfg.use_prefilter);
        assert_eq!(cfg.parallel_width, 8);
        assert_eq!(cfg.output, Some(PathBuf::from("out.jsonl")));
        assert_eq!(cfg.format, ReportFormat::Jsonl);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(RunConfig::parse("q 5").is_err());
        assert!(RunConfig::parse("colour=red").is_err());
        assert!(RunConfig::parse("parallel_width=0").is_err());
        assert!(RunConfig::parse("normalize=maybe").is_err());
        assert!(RunConfig::parse("family=cubic").is_err());
    }
}
