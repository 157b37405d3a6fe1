//! Progress file for long searches. The first line names the format and a
//! hash of the result-relevant configuration; each further line is one
//! top-level subtree: its root in graph6, a tab, and either `-` or the
//! subtree's counts as JSON.

use std::fs;
use std::path::{Path, PathBuf};

use super::{Partial, SearchConfig};
use crate::error::{Error, Result};

const MAGIC: &str = "oddcol-checkpoint-v1";

pub(crate) struct Checkpoint {
    path: Option<PathBuf>,
    hash: u64,
    keys: Vec<String>,
    results: Vec<Option<Partial>>,
}

/// FNV-1a over the configuration fields that change the outcome.
pub(crate) fn config_hash(cfg: &SearchConfig) -> u64 {
    let text = format!(
        "{} {} {} {:?} {:?} {}",
        cfg.k, cfg.l, cfg.n_max, cfg.prune_rules, cfg.class, cfg.parallel_width
    );
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

impl Checkpoint {
    pub(crate) fn in_memory(keys: &[String]) -> Checkpoint {
        Checkpoint {
            path: None,
            hash: 0,
            keys: keys.to_vec(),
            results: vec![None; keys.len()],
        }
    }

    /// Loads `path` if it exists, checking that it belongs to this search;
    /// otherwise starts a fresh file.
    pub(crate) fn open(path: &Path, cfg: &SearchConfig, keys: &[String]) -> Result<Checkpoint> {
        let hash = config_hash(cfg);
        let mut ck = Checkpoint {
            path: Some(path.to_path_buf()),
            hash,
            ..Checkpoint::in_memory(keys)
        };
        if !path.exists() {
            ck.save()?;
            return Ok(ck);
        }
        let text = fs::read_to_string(path)?;
        let bad = |m: String| Error::Checkpoint(format!("{}: {m}", path.display()));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
        let expected = format!("{MAGIC} {hash:016x}");
        if header != expected {
            return Err(bad(format!(
                "header {header:?} does not match this search ({expected:?})"
            )));
        }
        let body: Vec<&str> = lines.filter(|l| !l.is_empty()).collect();
        if body.len() != keys.len() {
            return Err(bad(format!(
                "{} subtrees recorded, {} expected",
                body.len(),
                keys.len()
            )));
        }
        for (i, line) in body.iter().enumerate() {
            let (key, state) = line
                .split_once('\t')
                .ok_or_else(|| bad(format!("line {}: missing tab", i + 2)))?;
            if key != keys[i] {
                return Err(bad(format!("line {}: subtree {key} expected {}", i + 2, keys[i])));
            }
            if state != "-" {
                let p: Partial = serde_json::from_str(state)
                    .map_err(|e| bad(format!("line {}: {e}", i + 2)))?;
                if p.enumerated.len() != cfg.n_max + 1 {
                    return Err(bad(format!("line {}: wrong number of orders", i + 2)));
                }
                ck.results[i] = Some(p);
            }
        }
        Ok(ck)
    }

    pub(crate) fn is_done(&self, i: usize) -> bool {
        self.results[i].is_some()
    }

    pub(crate) fn results(&self) -> &[Option<Partial>] {
        &self.results
    }

    pub(crate) fn finish(&mut self, i: usize, partial: Partial) -> Result<()> {
        self.results[i] = Some(partial);
        self.save()
    }

    pub(crate) fn progress_line(&self) -> String {
        let done = self.results.iter().filter(|r| r.is_some()).count();
        serde_json::json!({"subtrees_done": done, "subtrees_total": self.keys.len()}).to_string()
    }

    fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut out = format!("{MAGIC} {:016x}\n", self.hash);
        for (key, r) in self.keys.iter().zip(&self.results) {
            let state = match r {
                Some(p) => serde_json::to_string(p).expect("counts serialize"),
                None => "-".into(),
            };
            out.push_str(&format!("{key}\t{state}\n"));
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, out)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
