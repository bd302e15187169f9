use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, Coeff, QRat, QRatJson, Rational, VPoly};
use crate::rootdata::Weight;

use super::LaurentPoly;

/// JSON and LaTeX rendering of exact coefficients.
pub trait CoeffFormat: Coeff {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
    fn to_latex(&self) -> String;
}

impl CoeffFormat for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
            other => Err(Error::Parse(format!("expected rational string, got {other}"))),
        }
    }

    fn to_latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            let sign = if self.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", self.numer().magnitude(), self.denom())
        }
    }
}

impl CoeffFormat for QRat {
    fn to_json(&self) -> Value {
        serde_json::to_value(self.to_json()).expect("plain data")
    }

    fn from_json(v: &Value) -> Result<Self> {
        let j: QRatJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        QRat::from_json(&j)
    }

    fn to_latex(&self) -> String {
        if self.den().is_one() && self.num().degree().unwrap_or(0) == 0 {
            return self.num().coeff(0).to_latex();
        }
        let num = self.num().fmt_var("v").replace('*', "");
        if self.den().is_one() {
            format!("\\left({num}\\right)")
        } else {
            let den = self.den().fmt_var("v").replace('*', "");
            format!("\\frac{{{num}}}{{{den}}}")
        }
    }
}

impl CoeffFormat for VPoly {
    fn to_json(&self) -> Value {
        serde_json::to_value(self.to_pairs()).expect("plain data")
    }

    fn from_json(v: &Value) -> Result<Self> {
        let pairs: Vec<(usize, String)> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        VPoly::from_pairs(&pairs)
    }

    fn to_latex(&self) -> String {
        format!("\\left({}\\right)", self.fmt_var("v").replace('*', ""))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coeff: Value,
}

/// `{"terms": [{"exp": [..], "coeff": ..}, ...]}`, graded-lex sorted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

impl<C: CoeffFormat> LaurentPoly<C> {
    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            terms: self
                .terms()
                .map(|(w, c)| TermJson {
                    exp: w.coords().to_vec(),
                    coeff: c.to_json(),
                })
                .collect(),
        }
    }

    /// Parses the JSON form; every exponent must have length `rank`.
    pub fn from_json(j: &LaurentJson, rank: usize) -> Result<Self> {
        let mut p = Self::zero(rank);
        for t in &j.terms {
            if t.exp.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: t.exp.len(),
                });
            }
            p.add_term(Weight::new(&t.exp), &C::from_json(&t.coeff)?);
        }
        Ok(p)
    }

    /// Renders `Σ c_μ e^{i<μ,x>}` with `μ` written in fundamental weights.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms() {
            let exp = if w.is_zero() {
                String::new()
            } else {
                format!("e^{{i\\langle {}, x\\rangle}}", latex_weight(w))
            };
            let coeff = c.to_latex();
            parts.push(match (coeff.as_str(), exp.is_empty()) {
                (_, true) => coeff,
                ("1", false) => exp,
                ("-1", false) => format!("-{exp}"),
                _ => format!("{coeff}\\,{exp}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn latex_weight(w: &Weight) -> String {
    let mut out = String::new();
    for (i, &c) in w.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sym = format!("\\varpi_{}", i + 1);
        let term = match c {
            1 => sym,
            -1 => format!("-{sym}"),
            _ => format!("{c}{sym}"),
        };
        if !out.is_empty() && c > 0 {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}
