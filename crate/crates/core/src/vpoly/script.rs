//! Scripts of named `beta` equations, evaluated top to bottom.

use serde::{Deserialize, Serialize};

use super::{beta_expr_in, Env, PieceExpr, VpolyError};
use crate::ring::LaurentPoly;

/// Which of the four blow-up quantities is unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    X,
    C,
    E,
    Bl,
}

impl std::str::FromStr for Slot {
    type Err = VpolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" => Ok(Slot::X),
            "C" => Ok(Slot::C),
            "E" => Ok(Slot::E),
            "Bl" => Ok(Slot::Bl),
            other => Err(VpolyError::Blowup(format!("unknown slot {other:?}"))),
        }
    }
}

/// `beta(Bl_C X) - beta(E) = beta(X) - beta(C)` with one side unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlowupRelation {
    pub x: Option<LaurentPoly>,
    pub c: Option<LaurentPoly>,
    pub e: Option<LaurentPoly>,
    pub bl: Option<LaurentPoly>,
}

/// Solves the blow-up relation for its single unknown.
pub fn blowup_solve(r: &BlowupRelation) -> Result<(Slot, LaurentPoly), VpolyError> {
    let known = [&r.x, &r.c, &r.e, &r.bl].iter().filter(|v| v.is_some()).count();
    if known != 3 {
        return Err(VpolyError::Blowup(format!(
            "exactly one of X, C, E, Bl must be unknown ({} unknown)",
            4 - known
        )));
    }
    let get = |v: &Option<LaurentPoly>| v.clone().unwrap_or_default();
    let (x, c, e, bl) = (get(&r.x), get(&r.c), get(&r.e), get(&r.bl));
    Ok(if r.x.is_none() {
        (Slot::X, &(&bl - &e) + &c)
    } else if r.c.is_none() {
        (Slot::C, &(&x - &bl) + &e)
    } else if r.e.is_none() {
        (Slot::E, &(&bl - &x) + &c)
    } else {
        (Slot::Bl, &(&x - &c) + &e)
    })
}

/// A blow-up step as written in a script file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<PieceExpr>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<PieceExpr>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<PieceExpr>,
    #[serde(rename = "Bl", default, skip_serializing_if = "Option::is_none")]
    pub bl: Option<PieceExpr>,
    pub solve_for: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Definition {
    Expr { name: String, expr: PieceExpr },
    Blowup { name: String, blowup: BlowupStep },
}

impl Definition {
    pub fn name(&self) -> &str {
        match self {
            Definition::Expr { name, .. } | Definition::Blowup { name, .. } => name,
        }
    }
}

/// `{"defs": [...]}`
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaScript {
    pub defs: Vec<Definition>,
}

impl BetaScript {
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Symbol values in definition order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScriptValues {
    pub values: Vec<(String, LaurentPoly)>,
}

impl ScriptValues {
    pub fn get(&self, name: &str) -> Option<&LaurentPoly> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

pub fn run_script(s: &BetaScript) -> Result<ScriptValues, VpolyError> {
    let mut env = Env::new();
    let mut out = ScriptValues::default();
    for def in &s.defs {
        let name = def.name();
        if env.contains_key(name) {
            return Err(VpolyError::DuplicateSymbol(name.to_string()));
        }
        let value = match def {
            Definition::Expr { expr, .. } => beta_expr_in(expr, &env)?,
            Definition::Blowup { blowup, .. } => {
                let slot: Slot = blowup.solve_for.parse()?;
                let eval = |v: &Option<PieceExpr>| -> Result<Option<LaurentPoly>, VpolyError> {
                    v.as_ref().map(|e| beta_expr_in(e, &env)).transpose()
                };
                let rel = BlowupRelation {
                    x: eval(&blowup.x)?,
                    c: eval(&blowup.c)?,
                    e: eval(&blowup.e)?,
                    bl: eval(&blowup.bl)?,
                };
                let (solved, value) = blowup_solve(&rel)?;
                if solved != slot {
                    return Err(VpolyError::Blowup(format!(
                        "step {name:?} declares solve_for {:?} but {solved:?} is the missing value",
                        blowup.solve_for
                    )));
                }
                value
            }
        };
        env.insert(name.to_string(), value.clone());
        out.values.push((name.to_string(), value));
    }
    Ok(out)
}
