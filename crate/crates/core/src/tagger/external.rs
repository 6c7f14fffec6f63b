//! Adapter for external Penn Treebank taggers.
//!
//! Protocol, one exchange per identifier: the request is the tokens joined
//! by single spaces on one line; the response is one line of
//! `token/PENNTAG` pairs separated by single spaces.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};

use thiserror::Error;

use crate::ingest::Category;
use crate::tagset::{map_penn_label, GrammarPattern};

use super::{joined, TagContext, TagError, Tagger};

/// Environment variable naming the adapter command.
pub const ADAPTER_ENV: &str = "NAMEGRAM_ADAPTER_CMD";

#[derive(Debug, Error)]
pub enum AdapterError {
    #[error("cannot start `{command}`: {source}")]
    Spawn {
        command: String,
        #[source]
        source: std::io::Error,
    },
    #[error("adapter I/O failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("adapter closed its output")]
    Closed,
    #[error("malformed response item `{item}` in `{line}`")]
    Protocol { line: String, item: String },
}

/// One request/response exchange with a Penn tagger.
pub trait PennAdapter {
    /// Returns one Penn label per submitted word.
    fn tag_words(&mut self, words: &[String]) -> Result<Vec<String>, AdapterError>;
}

/// Split a response line into its Penn labels.
pub fn parse_response(line: &str) -> Result<Vec<String>, AdapterError> {
    let line = line.trim_end_matches(['\r', '\n']);
    if line.trim().is_empty() {
        return Ok(Vec::new());
    }
    line.trim_end()
        .split(' ')
        .map(|item| match item.rsplit_once('/') {
            Some((word, tag)) if !word.is_empty() && !tag.is_empty() => Ok(tag.to_string()),
            _ => Err(AdapterError::Protocol {
                line: line.to_string(),
                item: item.to_string(),
            }),
        })
        .collect()
}

/// A tagger running as a child process, spoken to over stdin/stdout.
/// One request is in flight at a time.
pub struct ProcessAdapter {
    command: String,
    child: Child,
    stdin: Option<ChildStdin>,
    stdout: BufReader<ChildStdout>,
}

impl ProcessAdapter {
    /// Start `command` through `sh -c`.
    pub fn spawn(command: &str) -> Result<Self, AdapterError> {
        let spawn_err = |source| AdapterError::Spawn {
            command: command.to_string(),
            source,
        };
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn()
            .map_err(spawn_err)?;
        let stdin = child.stdin.take();
        let stdout = BufReader::new(child.stdout.take().expect("piped stdout"));
        Ok(ProcessAdapter {
            command: command.to_string(),
            child,
            stdin,
            stdout,
        })
    }

    pub fn command(&self) -> &str {
        &self.command
    }
}

impl PennAdapter for ProcessAdapter {
    fn tag_words(&mut self, words: &[String]) -> Result<Vec<String>, AdapterError> {
        let stdin = self.stdin.as_mut().ok_or(AdapterError::Closed)?;
        writeln!(stdin, "{}", words.join(" "))?;
        stdin.flush()?;
        let mut line = String::new();
        if self.stdout.read_line(&mut line)? == 0 {
            return Err(AdapterError::Closed);
        }
        parse_response(&line)
    }
}

impl Drop for ProcessAdapter {
    fn drop(&mut self) {
        drop(self.stdin.take());
        if let Ok(None) = self.child.try_wait() {
            let _ = self.child.kill();
        }
        let _ = self.child.wait();
    }
}

/// Tag through an adapter. Function names are submitted as `I <tokens>`
/// so the first word reads as a verb, and the extra label is dropped.
pub fn external_tag(
    tokens: &[String],
    ctx: &TagContext<'_>,
    adapter: &mut dyn PennAdapter,
) -> Result<GrammarPattern, TagError> {
    let function = ctx.category == Category::Function;
    let mut words = Vec::with_capacity(tokens.len() + 1);
    if function {
        words.push("I".to_string());
    }
    words.extend(tokens.iter().cloned());

    let labels = adapter
        .tag_words(&words)
        .map_err(|source| TagError::Adapter {
            identifier: joined(tokens),
            source,
        })?;
    if labels.len() != words.len() {
        return Err(TagError::Alignment {
            identifier: joined(tokens),
            expected: words.len(),
            got: labels.len(),
        });
    }
    let skip = usize::from(function);
    let tags = labels[skip..]
        .iter()
        .map(|l| {
            map_penn_label(l, ctx.category)
                .map(|m| m.tag())
                .map_err(|source| TagError::UnknownTag {
                    identifier: joined(tokens),
                    source,
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GrammarPattern::new(tags).expect("token lists are non-empty"))
}

/// [`external_tag`] over an owned adapter.
pub struct ExternalTagger {
    adapter: Box<dyn PennAdapter + Send>,
}

impl ExternalTagger {
    pub fn new(adapter: Box<dyn PennAdapter + Send>) -> Self {
        ExternalTagger { adapter }
    }

    pub fn spawn(command: &str) -> Result<Self, AdapterError> {
        Ok(Self::new(Box::new(ProcessAdapter::spawn(command)?)))
    }
}

impl Tagger for ExternalTagger {
    fn id(&self) -> &str {
        "external"
    }

    fn tag(&mut self, tokens: &[String], ctx: &TagContext<'_>) -> Result<GrammarPattern, TagError> {
        external_tag(tokens, ctx, self.adapter.as_mut())
    }
}
