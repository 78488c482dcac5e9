//! Degree-based edge weight functions.
//!
//! Each catalog entry assigns an edge `{i, j}` the weight `f(d_i, d_j)`
//! where `d` is the vertex degree; the weighted adjacency matrix `A(f)`
//! has that value at the edge positions and zero elsewhere. The catalog:
//!
//! | id              | f(d_i, d_j)                                   |
//! |-----------------|-----------------------------------------------|
//! | `unit`          | 1                                             |
//! | `zagreb_m1`     | d_i + d_j                                     |
//! | `zagreb_m2`     | d_i * d_j                                     |
//! | `randic`        | (d_i * d_j)^(-1/2)                            |
//! | `general_randic`| (d_i * d_j)^alpha                             |
//! | `abc`           | sqrt((d_i + d_j - 2) / (d_i * d_j))           |
//! | `azi`           | (d_i * d_j / (d_i + d_j - 2))^3               |
//! | `ag1`           | 2 sqrt(d_i * d_j) / (d_i + d_j)               |
//! | `harmonic`      | 2 / (d_i + d_j)                               |
//! | `sci`           | 1 / sqrt(d_i + d_j)                           |
//! | `mzagreb1`      | ln(d_i)/d_i + ln(d_j)/d_j                     |
//! | `mzagreb1_star` | ln(d_i + d_j)                                 |
//! | `mzagreb2`      | ln(d_i) + ln(d_j)                             |
//! | `lanzhou`       | (n-1)(d_i + d_j) - (d_i^2 + d_j^2)            |
//!
//! Only `lanzhou` reads the graph order `n`. Formulas are partial:
//! `azi` has no value when `d_i + d_j <= 2`, the logarithmic and
//! Randić-type entries need strictly positive degrees, and `abc` needs
//! `d_i + d_j >= 2`. Domain violations surface as [`WeightError`], never
//! as silent NaN.
//!
//! The evaluation rule extends to real arguments, which is how the center
//! value `f(np, np)` (the weight at the typical degree) is defined; the
//! centering transform divides `A(f)` by that scalar and subtracts `p`
//! from every off-diagonal entry.

use crate::graph::Graph;
use crate::spectral::SymmetricMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("{id} is undefined at degrees ({di}, {dj}): {reason}")]
    Undefined {
        id: &'static str,
        di: f64,
        dj: f64,
        reason: &'static str,
    },
    #[error("{id} is undefined at edge ({i}, {j}) with degrees ({di}, {dj}): {reason}")]
    UndefinedAtEdge {
        id: &'static str,
        i: u32,
        j: u32,
        di: u32,
        dj: u32,
        reason: &'static str,
    },
    #[error("center value of {id} at n = {n}, p = {p} is zero")]
    CenterZero { id: &'static str, n: usize, p: f64 },
    #[error("center scale must be nonzero and finite, got {fc}")]
    BadCenterScale { fc: f64 },
    #[error("unknown weight id {0:?}")]
    UnknownId(String),
    #[error("general_randic requires a finite --alpha value")]
    MissingAlpha,
}

/// A degree-based weight rule from the catalog in the module docs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFunction {
    Unit,
    ZagrebM1,
    ZagrebM2,
    Randic,
    GeneralRandic { alpha: f64 },
    Abc,
    Azi,
    Ag1,
    Harmonic,
    Sci,
    MZagreb1,
    MZagreb1Star,
    MZagreb2,
    Lanzhou,
}

use WeightFunction::*;

impl WeightFunction {
    /// Stable identifier used in CLI flags, config files and output rows.
    #[must_use]
    pub fn id(&self) -> &'static str {
        match self {
            Unit => "unit",
            ZagrebM1 => "zagreb_m1",
            ZagrebM2 => "zagreb_m2",
            Randic => "randic",
            GeneralRandic { .. } => "general_randic",
            Abc => "abc",
            Azi => "azi",
            Ag1 => "ag1",
            Harmonic => "harmonic",
            Sci => "sci",
            MZagreb1 => "mzagreb1",
            MZagreb1Star => "mzagreb1_star",
            MZagreb2 => "mzagreb2",
            Lanzhou => "lanzhou",
        }
    }

    /// Exponent for `general_randic`, absent for every other entry.
    #[must_use]
    pub fn alpha(&self) -> Option<f64> {
        match self {
            GeneralRandic { alpha } => Some(*alpha),
            _ => None,
        }
    }

    /// Whether the formula reads the graph order (only `lanzhou` does).
    #[must_use]
    pub fn needs_n(&self) -> bool {
        matches!(self, Lanzhou)
    }

    /// Looks up a catalog id; `alpha` is required for `general_randic`
    /// and ignored elsewhere.
    pub fn from_id(id: &str, alpha: Option<f64>) -> Result<Self, WeightError> {
        let spec = match id {
            "unit" => Unit,
            "zagreb_m1" => ZagrebM1,
            "zagreb_m2" => ZagrebM2,
            "randic" => Randic,
            "general_randic" => match alpha {
                Some(a) if a.is_finite() => return Ok(GeneralRandic { alpha: a }),
                _ => return Err(WeightError::MissingAlpha),
            },
            "abc" => Abc,
            "azi" => Azi,
            "ag1" => Ag1,
            "harmonic" => Harmonic,
            "sci" => Sci,
            "mzagreb1" => MZagreb1,
            "mzagreb1_star" => MZagreb1Star,
            "mzagreb2" => MZagreb2,
            "lanzhou" => Lanzhou,
            other => return Err(WeightError::UnknownId(other.to_string())),
        };
        Ok(spec)
    }

    /// Every catalog entry, with `general_randic` at the conventional
    /// exponent `alpha = 1/2`.
    #[must_use]
    pub fn catalog() -> Vec<Self> {
        vec![
            Unit,
            ZagrebM1,
            ZagrebM2,
            Randic,
            GeneralRandic { alpha: 0.5 },
            Abc,
            Azi,
            Ag1,
            Harmonic,
            Sci,
            MZagreb1,
            MZagreb1Star,
            MZagreb2,
            Lanzhou,
        ]
    }

    /// Evaluates the formula at integer degrees.
    pub fn eval(&self, di: u32, dj: u32, n: usize) -> Result<f64, WeightError> {
        self.eval_real(di as f64, dj as f64, n).map_err(|e| match e {
            WeightError::Undefined { id, reason, .. } => WeightError::Undefined {
                id,
                di: di as f64,
                dj: dj as f64,
                reason,
            },
            other => other,
        })
    }

    /// Evaluates the formula at real arguments. This is the rule behind
    /// both edge weights and the center value `f(np, np)`.
    pub fn eval_real(&self, x: f64, y: f64, n: usize) -> Result<f64, WeightError> {
        let fail = |reason: &'static str| WeightError::Undefined {
            id: self.id(),
            di: x,
            dj: y,
            reason,
        };
        if !(x.is_finite() && y.is_finite()) {
            return Err(fail("non-finite degree"));
        }
        let v = match self {
            Unit => 1.0,
            ZagrebM1 => x + y,
            ZagrebM2 => x * y,
            Randic => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                1.0 / (x * y).sqrt()
            }
            GeneralRandic { alpha } => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                // Exact specializations: alpha = 1 is the second Zagreb
                // product, alpha = -1/2 the Randić rule, bit for bit.
                if *alpha == 1.0 {
                    x * y
                } else if *alpha == -0.5 {
                    1.0 / (x * y).sqrt()
                } else {
                    (x * y).powf(*alpha)
                }
            }
            Abc => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                let t = (x + y - 2.0) / (x * y);
                if t < 0.0 {
                    return Err(fail("degree sum below 2"));
                }
                t.sqrt()
            }
            Azi => {
                if x + y <= 2.0 {
                    return Err(fail("degree sum at most 2"));
                }
                let r = x * y / (x + y - 2.0);
                r * r * r
            }
            Ag1 => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                2.0 * (x * y).sqrt() / (x + y)
            }
            Harmonic => {
                if x + y <= 0.0 {
                    return Err(fail("nonpositive degree sum"));
                }
                2.0 / (x + y)
            }
            Sci => {
                if x + y <= 0.0 {
                    return Err(fail("nonpositive degree sum"));
                }
                1.0 / (x + y).sqrt()
            }
            MZagreb1 => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                x.ln() / x + y.ln() / y
            }
            MZagreb1Star => {
                if x + y <= 0.0 {
                    return Err(fail("nonpositive degree sum"));
                }
                (x + y).ln()
            }
            MZagreb2 => {
                if x <= 0.0 || y <= 0.0 {
                    return Err(fail("nonpositive degree"));
                }
                x.ln() + y.ln()
            }
            Lanzhou => (n as f64 - 1.0) * (x + y) - (x * x + y * y),
        };
        if !v.is_finite() {
            return Err(fail("non-finite result"));
        }
        Ok(v)
    }

    /// The weight at the typical degree, `f(np, np)`; the scalar the
    /// centering transform divides by. Zero and undefined centers are
    /// rejected because downstream predictions divide by this value.
    pub fn center_value(&self, n: usize, p: f64) -> Result<f64, WeightError> {
        let np = n as f64 * p;
        let v = self.eval_real(np, np, n)?;
        if v == 0.0 {
            return Err(WeightError::CenterZero {
                id: self.id(),
                n,
                p,
            });
        }
        Ok(v)
    }
}

/// Builds the weighted adjacency matrix `A(f)`: entry `(i, j)` is
/// `f(d_i, d_j)` for each edge, zero on the diagonal and at non-edges.
pub fn build_weighted_adjacency(
    g: &Graph,
    spec: &WeightFunction,
) -> Result<SymmetricMatrix, WeightError> {
    let mut a = SymmetricMatrix::zeros(g.n());
    for &(i, j) in g.edges() {
        let di = g.degree(i as usize);
        let dj = g.degree(j as usize);
        let w = spec.eval(di, dj, g.n()).map_err(|e| match e {
            WeightError::Undefined { id, reason, .. } => {
                WeightError::UndefinedAtEdge {
                    id,
                    i,
                    j,
                    di,
                    dj,
                    reason,
                }
            }
            other => other,
        })?;
        a.set(i as usize, j as usize, w);
    }
    Ok(a)
}

/// Centers and scales a weighted adjacency: off-diagonal entries become
/// `a[i][j] / fc - p`, the diagonal stays zero. With `fc = f(np, np)` this
/// is the matrix whose spectrum follows the semicircle law after `1/sqrt(n)`
/// scaling.
pub fn center_scale(
    a: &SymmetricMatrix,
    fc: f64,
    p: f64,
) -> Result<SymmetricMatrix, WeightError> {
    if !(fc.is_finite() && fc != 0.0) {
        return Err(WeightError::BadCenterScale { fc });
    }
    let n = a.n();
    let mut out = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            out.set(i, j, a.get(i, j) / fc - p);
        }
    }
    Ok(out)
}
