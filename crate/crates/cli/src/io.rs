use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use subword_core::polyring::{format_rational, parse_rational, Q};
use subword_core::tensors::{bcl_parameter_tensor, cyclic_b2_tensor, dual_cauchy_tensor, BclTensor, ParameterTensor};

/// `1,2,7/2` → rationals.
pub fn parse_x(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).with_context(|| format!("bad x value {t:?}")))
        .collect()
}

/// `x_i = i`.
pub fn default_x(len: usize) -> Vec<Q> {
    (1..=len as i64).map(|i| Q::from_integer(i.into())).collect()
}

fn json_cell(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::String(s) => Ok(parse_rational(s)?),
        serde_json::Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        other => bail!("matrix entries must be strings or numbers, got {other}"),
    }
}

/// A rational matrix from CSV (one row per line) or JSON (array of rows).
pub fn read_matrix(path: &Path) -> Result<Vec<Vec<Q>>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let rows: Vec<Vec<Q>> = if text.trim_start().starts_with('[') {
        let v: serde_json::Value = serde_json::from_str(&text)?;
        let arr = v.as_array().context("expected a JSON array of rows")?;
        arr.iter()
            .map(|row| {
                row.as_array()
                    .context("expected each row to be an array")?
                    .iter()
                    .map(json_cell)
                    .collect()
            })
            .collect::<Result<_>>()?
    } else {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        reader
            .records()
            .map(|rec| {
                rec?.iter()
                    .map(|c| parse_rational(c).with_context(|| format!("bad entry {c:?}")))
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    if rows.is_empty() || rows[0].is_empty() {
        bail!("{} holds no matrix entries", path.display());
    }
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        bail!("rows of {} have different lengths", path.display());
    }
    Ok(rows)
}

/// `builtin:model4`, `builtin:a3-s1s2s3`, `builtin:dual-cauchy:2,4`, or a JSON file.
pub fn read_tensor(spec: &str, m: Option<&Q>) -> Result<ParameterTensor> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        if name == "model4" {
            return Ok(cyclic_b2_tensor());
        }
        if let Some(ab) = name.strip_prefix("dual-cauchy:") {
            let (a, b) = ab.split_once(',').context("expected dual-cauchy:a,b")?;
            return Ok(dual_cauchy_tensor(a.trim().parse()?, b.trim().parse()?));
        }
        let which: BclTensor = name.parse()?;
        return Ok(bcl_parameter_tensor(which, m));
    }
    let text = fs::read_to_string(spec).with_context(|| format!("cannot read tensor file {spec}"))?;
    let tensor = ParameterTensor::from_json(&serde_json::from_str(&text)?)?;
    Ok(match m {
        Some(v) => tensor.specialize_m(v),
        None => tensor,
    })
}

pub fn matrix_csv(rows: &[Vec<Q>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in rows {
        w.write_record(r.iter().map(format_rational))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Where command output goes.
pub fn sink(out: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}
