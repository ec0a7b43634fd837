//! Stream plumbing: read graph6 lines, shard work across a thread pool,
//! re-serialize results in input order.

use anyhow::{Context, Result};
use serde::Serialize;
use std::fs;
use std::io::{Read, Write};

/// Whole input, lines exposed with blank lines dropped.
pub struct StreamInput {
    pub raw: String,
}

impl StreamInput {
    pub fn read(path: &str) -> Result<StreamInput> {
        let raw = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            buf
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {path}"))?
        };
        Ok(StreamInput { raw })
    }

    pub fn lines(&self) -> Vec<&str> {
        self.raw
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect()
    }
}

/// Maps `job` over the lines, in input order, on `threads` workers.
pub fn map_lines<T: Send>(
    lines: &[&str],
    threads: usize,
    job: impl Fn(usize, &str) -> T + Sync,
) -> Vec<T> {
    if threads <= 1 {
        lines.iter().enumerate().map(|(i, l)| job(i, l)).collect()
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            lines
                .par_iter()
                .enumerate()
                .map(|(i, l)| job(i, l))
                .collect()
        })
    }
}

/// '-' is stdout, anything else a file created fresh.
pub fn open_output(path: &str) -> Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(std::io::stdout().lock()))
    } else {
        let file = fs::File::create(path).with_context(|| format!("creating {path}"))?;
        Ok(Box::new(std::io::BufWriter::new(file)))
    }
}

pub fn write_jsonl<T: Serialize>(out: &mut dyn Write, records: &[T]) -> Result<()> {
    for record in records {
        serde_json::to_writer(&mut *out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}
