//! Resumable on-disk cache of superabundant records.
//!
//! One record per line, three space-separated fields:
//!
//! ```text
//! 5040 2^4*3^2*5*7 403/105
//! ```
//!
//! `n` in decimal, the factorization as `p^a` terms joined by `*` (`1` for
//! the empty product, exponent 1 written bare), and `I(n)` as `num/den`.
//! Records are flushed every [`FLUSH_EVERY`] records, so an interrupted run
//! leaves a valid prefix plus at most one partial line, which a resume
//! discards.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::ratio::ExactRatio;
use crate::superabundant::{
    superabundant_bruteforce_from, superabundant_structured_from, SuperabundantRecord,
};

pub const FLUSH_EVERY: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    Structured,
}

pub fn format_record(r: &SuperabundantRecord) -> String {
    format!("{} {} {}", r.n, r.factorization, r.index)
}

/// Parses one cache line and re-derives `n` and `I(n)` from the
/// factorization; any mismatch is an error.
pub fn parse_record(line: &str) -> Result<SuperabundantRecord> {
    let bad = |why: &str| Error::Cache(format!("{why}: {line:?}"));
    let mut fields = line.split(' ');
    let (Some(n), Some(f), Some(i), None) = (fields.next(), fields.next(), fields.next(), fields.next()) else {
        return Err(bad("expected 3 fields"));
    };
    let n: BigUint = n.parse().map_err(|_| bad("bad n"))?;
    let factorization: Factorization = f.parse()?;
    let index: ExactRatio = i.parse()?;
    let record = SuperabundantRecord::from_factorization(factorization);
    if record.n != n || record.index != index || format_record(&record) != line {
        return Err(bad("inconsistent record"));
    }
    Ok(record)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Cache(e.to_string())
}

/// Reads the longest valid prefix of a cache file: complete lines that parse,
/// verify, and strictly increase in both `n` and index. Returns the records
/// and the byte length of that prefix.
pub fn read_cache(path: &Path) -> Result<(Vec<SuperabundantRecord>, u64)> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((Vec::new(), 0)),
        Err(e) => return Err(io_err(e)),
    };
    let mut reader = BufReader::new(file);
    let mut records: Vec<SuperabundantRecord> = Vec::new();
    let mut valid_len = 0u64;
    let mut line = String::new();
    loop {
        line.clear();
        let read = reader.read_line(&mut line).map_err(io_err)?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        let Ok(r) = parse_record(line.trim_end_matches('\n')) else { break };
        if let Some(prev) = records.last() {
            if r.n <= prev.n || r.index <= prev.index {
                break;
            }
        }
        records.push(r);
        valid_len += read as u64;
    }
    Ok((records, valid_len))
}

/// Enumerates superabundant numbers up to `limit` through the cache at
/// `path`. A fresh run truncates the cache; a resumed run keeps its valid
/// prefix and continues after the last cached record. `on_new` sees every
/// record computed in this run (not the ones read back).
pub fn enumerate_with_cache(
    limit: &BigUint,
    method: Method,
    path: &Path,
    resume: bool,
    on_new: &mut dyn FnMut(&SuperabundantRecord),
) -> Result<Vec<SuperabundantRecord>> {
    let (mut records, valid_len) = if resume { read_cache(path)? } else { (Vec::new(), 0) };
    if records.last().is_some_and(|r| &r.n >= limit) {
        records.retain(|r| &r.n <= limit);
        return Ok(records);
    }
    let mut file = OpenOptions::new().create(true).write(true).truncate(false).open(path).map_err(io_err)?;
    file.set_len(valid_len).map_err(io_err)?;
    file.seek(SeekFrom::End(0)).map_err(io_err)?;
    let mut writer = BufWriter::new(file);
    let mut pending = 0usize;
    let last = records.last().cloned();
    let mut sink = |r: SuperabundantRecord| -> Result<()> {
        writeln!(writer, "{}", format_record(&r)).map_err(io_err)?;
        pending += 1;
        if pending == FLUSH_EVERY {
            writer.flush().map_err(io_err)?;
            pending = 0;
        }
        on_new(&r);
        records.push(r);
        Ok(())
    };
    match method {
        Method::Structured => superabundant_structured_from(limit, last.as_ref(), &mut sink)?,
        Method::BruteForce => {
            let l = u64::try_from(limit.clone()).map_err(|_| Error::TooLarge(limit.to_string()))?;
            superabundant_bruteforce_from(l, last.as_ref(), &mut sink)?
        }
    }
    writer.flush().map_err(io_err)?;
    Ok(records)
}
