//! Text formats for ideals, linear families and maps.
//!
//! Ideal file: a header `ring p=<prime> vars=<v1,...,vn> order=<grevlex|lex|elim:k>`
//! followed by one polynomial per line. Family file: a header
//! `family p=<prime> params=<l1,...> vars=<v1,...>` followed by lines
//! `<param>: <form>`. Map file: a header
//! `map p=<prime> source=<v1,...> target=<w1,...> order=<...>` followed by
//! one form per target coordinate. Blank lines and lines starting with `#`
//! are ignored everywhere.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modfield::PrimeField;
use crate::polyring::{MonomialOrder, ParametricFamily, Polynomial, Ring, RingDescriptor};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header_fields<'a>(line: &'a str, keyword: &str) -> Result<HashMap<&'a str, &'a str>> {
    let mut it = line.split_whitespace();
    if it.next() != Some(keyword) {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected `{keyword}` header"),
        });
    }
    let mut out = HashMap::new();
    for kv in it {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("malformed header field `{kv}`"),
        })?;
        out.insert(k, v);
    }
    Ok(out)
}

fn field_from(fields: &HashMap<&str, &str>, prime: Option<u32>) -> Result<PrimeField> {
    if let Some(p) = prime {
        return PrimeField::new(p as u64);
    }
    let p = fields.get("p").ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "missing p=".into(),
    })?;
    let p: u64 = p.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad prime `{p}`"),
    })?;
    PrimeField::new(p)
}

fn names(fields: &HashMap<&str, &str>, key: &str) -> Result<Vec<String>> {
    let v = fields.get(key).ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("missing {key}="),
    })?;
    Ok(v.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect())
}

fn order_from(fields: &HashMap<&str, &str>) -> Result<MonomialOrder> {
    match fields.get("order") {
        None => Ok(MonomialOrder::Grevlex),
        Some(t) => MonomialOrder::from_token(t),
    }
}

fn at_line<T>(r: Result<T>, line: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos,
            msg: format!("line {line}: {msg}"),
        },
        other => other,
    })
}

/// Parses a ring header line. `prime` overrides the header's modulus.
pub fn parse_ring_header(line: &str, prime: Option<u32>) -> Result<Ring> {
    let f = header_fields(line, "ring")?;
    RingDescriptor::new(field_from(&f, prime)?, names(&f, "vars")?, order_from(&f)?)
}

/// Reads an ideal file.
pub fn read_ideal(text: &str, prime: Option<u32>) -> Result<Ideal> {
    let (ring, lists) = read_ideal_list(text, prime)?;
    let gens = lists.into_iter().flat_map(|i| i.gens().to_vec()).collect();
    Ok(Ideal::new(&ring, gens))
}

/// Reads an ideal file whose body lines each hold one ideal, generators
/// separated by `;`.
pub fn read_ideal_list(text: &str, prime: Option<u32>) -> Result<(Ring, Vec<Ideal>)> {
    let mut lines = content_lines(text);
    let (_, head) = lines.next().ok_or(Error::Parse {
        pos: 0,
        msg: "empty ideal file".into(),
    })?;
    let ring = parse_ring_header(head, prime)?;
    let mut out = Vec::new();
    for (no, l) in lines {
        let gens = l
            .split(';')
            .map(|s| at_line(Polynomial::parse(s, &ring), no))
            .collect::<Result<Vec<_>>>()?;
        out.push(Ideal::new(&ring, gens));
    }
    Ok((ring, out))
}

/// Writes an ideal in the ideal file format.
pub fn write_ideal(i: &Ideal) -> Result<String> {
    let r = i.ring();
    let mut s = format!(
        "ring p={} vars={} order={}\n",
        r.field().modulus(),
        r.vars().join(","),
        r.order().token()?
    );
    for g in i.gens() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    Ok(s)
}

/// Reads a family file; `geom` (if given) supplies the geometric ring.
pub fn read_family(text: &str, prime: Option<u32>, geom: Option<&Ring>) -> Result<ParametricFamily> {
    let mut lines = content_lines(text);
    let (_, head) = lines.next().ok_or(Error::Parse {
        pos: 0,
        msg: "empty family file".into(),
    })?;
    let f = header_fields(head, "family")?;
    let params = names(&f, "params")?;
    let ring = match geom {
        Some(r) => r.clone(),
        None => RingDescriptor::new(field_from(&f, prime)?, names(&f, "vars")?, MonomialOrder::Grevlex)?,
    };
    if ring.vars() != names(&f, "vars")?.as_slice() {
        return Err(Error::RingMismatch);
    }
    let mut members = vec![None; params.len()];
    for (no, l) in lines {
        let (name, form) = l.split_once(':').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("line {no}: expected `<param>: <form>`"),
        })?;
        let k = params
            .iter()
            .position(|p| p == name.trim())
            .ok_or_else(|| Error::UnknownVariable(name.trim().into()))?;
        members[k] = Some(at_line(Polynomial::parse(form, &ring), no)?);
    }
    let members = members
        .into_iter()
        .zip(&params)
        .map(|(m, p)| m.ok_or_else(|| Error::MissingLabel(p.clone())))
        .collect::<Result<Vec<_>>>()?;
    ParametricFamily::new(&ring, params, members)
}

/// Parsed map file: source ring, target ring and forms.
pub struct MapText {
    pub source: Ring,
    pub target: Ring,
    pub forms: Vec<Polynomial>,
}

/// Reads a map file. Existing rings with matching names may be supplied so
/// that forms land in them.
pub fn read_map(
    text: &str,
    prime: Option<u32>,
    source: Option<&Ring>,
    target: Option<&Ring>,
) -> Result<MapText> {
    let mut lines = content_lines(text);
    let (_, head) = lines.next().ok_or(Error::Parse {
        pos: 0,
        msg: "empty map file".into(),
    })?;
    let f = header_fields(head, "map")?;
    let field = field_from(&f, prime)?;
    let order = order_from(&f)?;
    let pick = |given: Option<&Ring>, key: &str| -> Result<Ring> {
        let vars = names(&f, key)?;
        match given {
            Some(r) if r.vars() == vars.as_slice() => Ok(r.clone()),
            Some(_) => Err(Error::RingMismatch),
            None => RingDescriptor::new(field, vars, order.clone()),
        }
    };
    let source = pick(source, "source")?;
    let target = pick(target, "target")?;
    let forms = lines
        .map(|(no, l)| at_line(Polynomial::parse(l, &source), no))
        .collect::<Result<Vec<_>>>()?;
    if forms.len() != target.nvars() {
        return Err(Error::LengthMismatch {
            expected: target.nvars(),
            got: forms.len(),
        });
    }
    Ok(MapText { source, target, forms })
}
