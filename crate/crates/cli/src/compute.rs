use anyhow::bail;
use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};
use torus_ideals::hilbert::{cn_via_odd_divisors, pg, pn_from_cn};
use torus_ideals::zeta::{hasse_weil_factors, local_zeta_factors, render_local_zeta};
use torus_ideals::{fpoly, tcheb, HasseWeilFactorization, IntPoly, LaurentPoly, ZetaFactorization};

use crate::render;
use crate::{Format, Output, UsageError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Object {
    Tcheb,
    Fpoly,
    Pg,
    Cn,
    Pn,
    Zeta,
}

impl Object {
    fn name(self) -> &'static str {
        match self {
            Object::Tcheb => "tcheb",
            Object::Fpoly => "fpoly",
            Object::Pg => "pg",
            Object::Cn => "cn",
            Object::Pn => "pn",
            Object::Zeta => "zeta",
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ZetaOutput {
    pub local: ZetaFactorization,
    pub hasse_weil: HasseWeilFactorization,
}

#[derive(Serialize)]
struct Evaluation {
    object: Object,
    n: u64,
    at: i64,
    value: String,
}

/// `--n` (row) or `--k` (direct family index).
#[derive(Copy, Clone, Debug)]
pub enum Index {
    Row(u64),
    Direct(u64),
}

impl Index {
    pub fn from_args(n: Option<u64>, k: Option<u64>) -> Self {
        match (n, k) {
            (_, Some(k)) => Index::Direct(k),
            (Some(n), None) => Index::Row(n),
            (None, None) => unreachable!("clap requires one of --n, --k"),
        }
    }
}

enum Value {
    X(IntPoly),
    Q(LaurentPoly),
}

fn laurent_at(p: &LaurentPoly, at: i64) -> anyhow::Result<BigInt> {
    let at = BigInt::from(at);
    let mut acc = BigInt::zero();
    for (e, c) in p.terms() {
        if e < 0 {
            bail!(UsageError::Invalid("negative exponent in evaluation".into()));
        }
        acc += c * Pow::pow(&at, e as u64);
    }
    Ok(acc)
}

fn build(object: Object, index: Index) -> anyhow::Result<(u64, Value)> {
    let row = |i: Index| match i {
        Index::Row(0) => bail!(UsageError::Invalid(format!("{} needs --n >= 1", object.name()))),
        Index::Row(n) => Ok(n),
        Index::Direct(_) => bail!(UsageError::Invalid(format!("{} takes --n, not --k", object.name()))),
    };
    Ok(match (object, index) {
        (Object::Tcheb, Index::Row(k) | Index::Direct(k)) => (k, Value::X(tcheb(k as usize))),
        (Object::Fpoly, Index::Direct(k)) => (k, Value::X(fpoly(k as usize))),
        (Object::Fpoly, Index::Row(n)) => {
            let n = row(Index::Row(n))?;
            (n - 1, Value::X(fpoly(n as usize - 1)))
        }
        (Object::Pg, i) => {
            let n = row(i)?;
            (n, Value::X(pg(n)))
        }
        (Object::Cn, i) => {
            let n = row(i)?;
            (n, Value::Q(cn_via_odd_divisors(n).full))
        }
        (Object::Pn, i) => {
            let n = row(i)?;
            (n, Value::Q(pn_from_cn(n)?))
        }
        (Object::Zeta, _) => unreachable!(),
    })
}

fn zeta(index: Index, format: Format) -> anyhow::Result<Output> {
    let n = match index {
        Index::Row(n) if n >= 1 => n,
        _ => bail!(UsageError::Invalid("zeta needs --n >= 1".into())),
    };
    let z = ZetaOutput {
        local: local_zeta_factors(n),
        hasse_weil: hasse_weil_factors(n),
    };
    let body = match format {
        Format::Text => format!("Z(t) = {}\nzeta(s) = {}\n", render_local_zeta(n), z.hasse_weil),
        Format::Json => render::json(&z)?,
        Format::Csv => {
            let rows = [
                ("local", "num", &z.local.numerator),
                ("local", "den", &z.local.denominator),
                ("hasse_weil", "num", &z.hasse_weil.numerator_shifts),
                ("hasse_weil", "den", &z.hasse_weil.denominator_shifts),
            ]
            .into_iter()
            .flat_map(|(kind, side, v)| {
                v.iter().map(move |e| vec![kind.to_string(), side.to_string(), e.to_string()])
            });
            render::csv(&["kind", "side", "exponent"], rows)?
        }
    };
    Ok(Output::ok(body))
}

pub fn run(object: Object, index: Index, eval: Option<i64>, format: Format) -> anyhow::Result<Output> {
    if object == Object::Zeta {
        if eval.is_some() {
            bail!(UsageError::Invalid("zeta factorizations are symbolic; --eval is not supported".into()));
        }
        return zeta(index, format);
    }
    let (n, value) = build(object, index)?;
    if let Some(at) = eval {
        let v = match &value {
            Value::X(p) => p.eval_i64(at),
            Value::Q(p) => laurent_at(p, at)?,
        };
        let rec = Evaluation {
            object,
            n,
            at,
            value: v.to_string(),
        };
        let body = match format {
            Format::Text => format!("{}\n", rec.value),
            Format::Json => render::json(&rec)?,
            Format::Csv => render::csv(
                &["object", "n", "at", "value"],
                [[
                    object.name().to_string(),
                    n.to_string(),
                    at.to_string(),
                    rec.value.clone(),
                ]],
            )?,
        };
        return Ok(Output::ok(body));
    }
    let body = match (&value, format) {
        (Value::X(p), Format::Text) => format!("{p}\n"),
        (Value::Q(p), Format::Text) => format!("{p}\n"),
        (Value::X(p), Format::Json) => render::json(p)?,
        (Value::Q(p), Format::Json) => render::json(p)?,
        (Value::X(p), Format::Csv) => render::csv(
            &["exponent", "coefficient"],
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| [e.to_string(), c.to_string()]),
        )?,
        (Value::Q(p), Format::Csv) => render::csv(
            &["exponent", "coefficient"],
            p.terms()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| [e.to_string(), c.to_string()]),
        )?,
    };
    Ok(Output::ok(body))
}
