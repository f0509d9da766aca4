//! Line-oriented text format for algebras (`.slsa`).
//!
//! Layout: a header (`name`, optional `family`, repeated `param`, `field Q`),
//! one `basis` line per basis vector, `bracket i j` lines for the nonzero
//! products with i <= j, and optional `deg` lines carrying a grading.
//! `#` starts a comment; serialization is canonical, so parse/serialize
//! round-trips are byte-exact.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use supergrade_core::grading::Grading;
use supergrade_core::scalar;
use supergrade_core::space::{Parity, SuperSpace};
use supergrade_core::svec::SVec;
use supergrade_core::LieSuperalgebra;

#[derive(Debug)]
pub struct AlgebraFile {
    pub name: String,
    pub family: Option<String>,
    pub params: Vec<(String, String)>,
    pub algebra: LieSuperalgebra,
    pub grading: Option<Grading>,
}

pub fn serialize(
    alg: &LieSuperalgebra,
    family: Option<&str>,
    params: &[(String, String)],
    degrees: Option<&[i64]>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("name {}\n", alg.name()));
    if let Some(f) = family {
        out.push_str(&format!("family {}\n", f));
    }
    for (k, v) in params {
        out.push_str(&format!("param {} {}\n", k, v));
    }
    out.push_str("field Q\n");
    let dim = alg.dim();
    for i in 0..dim {
        let parity = match alg.space().parity(i) {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        let label = alg.space().label(i).replace(char::is_whitespace, "_");
        out.push_str(&format!("basis {} {} {}\n", i, parity, label));
    }
    for i in 0..dim {
        for j in i..dim {
            let v = alg.bracket_basis(i, j);
            if v.is_empty() {
                continue;
            }
            out.push_str(&format!("bracket {} {}", i, j));
            for (k, c) in &v {
                out.push_str(&format!(" {}:{}", k, scalar::format(c)));
            }
            out.push('\n');
        }
    }
    if let Some(deg) = degrees {
        for (i, d) in deg.iter().enumerate() {
            out.push_str(&format!("deg {} {}\n", i, d));
        }
    }
    out
}

pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut name = None;
    let mut family = None;
    let mut params = Vec::new();
    let mut basis: Vec<(usize, Parity, String)> = Vec::new();
    let mut brackets: BTreeMap<(usize, usize), SVec> = BTreeMap::new();
    let mut degrees: BTreeMap<usize, i64> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| anyhow!("line {}: {}", lineno + 1, msg);
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap();
        match head {
            "name" => {
                name = Some(
                    toks.next()
                        .ok_or_else(|| err("name needs a value".into()))?
                        .to_string(),
                )
            }
            "family" => {
                family = Some(
                    toks.next()
                        .ok_or_else(|| err("family needs a value".into()))?
                        .to_string(),
                )
            }
            "param" => {
                let k = toks.next().ok_or_else(|| err("param needs a key".into()))?;
                let v = toks
                    .next()
                    .ok_or_else(|| err("param needs a value".into()))?;
                params.push((k.to_string(), v.to_string()));
            }
            "field" => {
                let f = toks.next().unwrap_or("");
                if f != "Q" {
                    bail!(err(format!("unsupported field {:?}", f)));
                }
            }
            "basis" => {
                let idx: usize = toks
                    .next()
                    .ok_or_else(|| err("basis needs an index".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad index: {}", e)))?;
                let parity = match toks.next() {
                    Some("even") => Parity::Even,
                    Some("odd") => Parity::Odd,
                    other => bail!(err(format!("bad parity {:?}", other))),
                };
                let label = toks
                    .next()
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("e{}", idx));
                if idx != basis.len() {
                    bail!(err(format!("basis indices must be 0,1,… (got {})", idx)));
                }
                basis.push((idx, parity, label));
            }
            "bracket" => {
                let i: usize = toks
                    .next()
                    .ok_or_else(|| err("bracket needs two indices".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad index: {}", e)))?;
                let j: usize = toks
                    .next()
                    .ok_or_else(|| err("bracket needs two indices".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad index: {}", e)))?;
                if i > j {
                    bail!(err(format!("bracket lines need i <= j (got {} {})", i, j)));
                }
                let mut v: SVec = Vec::new();
                for t in toks {
                    let (k, c) = t
                        .split_once(':')
                        .ok_or_else(|| err(format!("bad term {:?}", t)))?;
                    let k: usize = k.parse().map_err(|e| err(format!("bad index: {}", e)))?;
                    let c = scalar::parse(c).map_err(|e| err(e))?;
                    v.push((k, c));
                }
                v.sort_by_key(|(k, _)| *k);
                if brackets.insert((i, j), v).is_some() {
                    bail!(err(format!("duplicate bracket {} {}", i, j)));
                }
            }
            "deg" => {
                let idx: usize = toks
                    .next()
                    .ok_or_else(|| err("deg needs an index".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad index: {}", e)))?;
                let d: i64 = toks
                    .next()
                    .ok_or_else(|| err("deg needs a value".into()))?
                    .parse()
                    .map_err(|e| err(format!("bad degree: {}", e)))?;
                if degrees.insert(idx, d).is_some() {
                    bail!(err(format!("duplicate deg {}", idx)));
                }
            }
            other => bail!(err(format!("unknown directive {:?}", other))),
        }
    }
    let name = name.ok_or_else(|| anyhow!("missing name line"))?;
    let space = SuperSpace::new(basis.into_iter().map(|(_, p, l)| (l, p)).collect());
    let dim = space.dim();
    for (&(i, j), _) in &brackets {
        if j >= dim {
            bail!("bracket index {} out of range (dim {})", j, dim);
        }
        let _ = i;
    }
    let algebra = LieSuperalgebra::new(name, space, brackets)
        .map_err(|e| anyhow!("inconsistent table: {}", e))?;
    let grading = if degrees.is_empty() {
        None
    } else {
        if degrees.len() != dim {
            bail!("deg lines must cover all {} basis vectors", dim);
        }
        let degs: Vec<i64> = (0..dim).map(|i| degrees[&i]).collect();
        Some(
            Grading::from_degrees(&algebra, degs)
                .map_err(|e| anyhow!("grading incompatible with brackets: {}", e))?,
        )
    };
    Ok(AlgebraFile {
        name: algebra.name().to_string(),
        family,
        params,
        algebra,
        grading,
    })
}

pub fn read(path: &std::path::Path) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}
