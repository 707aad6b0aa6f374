//! Finite-dimensional bialgebras in vector spaces or super vector spaces.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{HopfError, Result};
use crate::matrix::{Matrix, Witness};
use crate::scalar::{Modulus, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Braiding {
    Flip,
    /// Koszul signs on odd ⊗ odd
    Super,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bialgebra {
    pub n: usize,
    pub grading: Vec<u8>,
    pub braiding: Braiding,
    /// n × n²
    pub m: Matrix,
    /// n × 1
    pub u: Matrix,
    /// n² × n
    pub delta: Matrix,
    /// 1 × n
    pub eps: Matrix,
    pub field: Option<Arc<Modulus>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub axioms: Vec<AxiomResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|a| a.pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }
}

pub const AXIOMS: [&str; 7] = ["assoc", "unit", "coassoc", "counit", "bialgebra", "unit-counit", "grading"];

impl Bialgebra {
    pub fn id(&self) -> Matrix {
        Matrix::identity(self.n)
    }

    /// The braiding `B ⊗ B → B ⊗ B`.
    pub fn br(&self) -> Matrix {
        let n = self.n;
        let mut b = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                let odd = self.braiding == Braiding::Super && self.grading[i] == 1 && self.grading[j] == 1;
                b.set(j * n + i, i * n + j, if odd { Scalar::from_int(-1) } else { Scalar::one() });
            }
        }
        b
    }

    pub fn degree(&self, i: usize) -> u8 {
        self.grading[i]
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.n;
        let want = [
            ("m", &self.m, n, n * n),
            ("u", &self.u, n, 1),
            ("delta", &self.delta, n * n, n),
            ("epsilon", &self.eps, 1, n),
        ];
        for (name, m, r, c) in want {
            if m.rows != r || m.cols != c {
                return Err(HopfError::Shape(format!("{name} is {}×{}, expected {r}×{c}", m.rows, m.cols)));
            }
        }
        if self.grading.len() != n || self.grading.iter().any(|&d| d > 1) {
            return Err(HopfError::Shape("grading must list n degrees in {0,1}".into()));
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Bialgebra> {
        let f: BialgebraFile = serde_json::from_str(s).map_err(|e| HopfError::Parse(e.to_string()))?;
        f.into_bialgebra()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&BialgebraFile::from(self)).expect("serializable")
    }
}

fn compare(axiom: &'static str, pairs: &[(&str, Matrix, Matrix)]) -> Result<AxiomResult> {
    for (what, l, r) in pairs {
        if let Some(w) = l.first_difference(r)? {
            return Ok(AxiomResult { axiom, pass: false, detail: Some(what.to_string()), witness: Some(w) });
        }
    }
    Ok(AxiomResult { axiom, pass: true, detail: None, witness: None })
}

/// All seven axioms, each with the first differing coordinate on failure.
pub fn check_bialgebra(b: &Bialgebra) -> Result<Report> {
    b.check_shapes()?;
    let id = b.id();
    let (m, u, d, e) = (&b.m, &b.u, &b.delta, &b.eps);
    let mut axioms = Vec::new();
    axioms.push(compare(
        "assoc",
        &[("m(m⊗id) vs m(id⊗m)", m.mul(&m.kron(&id))?, m.mul(&id.kron(m))?)],
    )?);
    axioms.push(compare(
        "unit",
        &[("m(u⊗id) vs id", m.mul(&u.kron(&id))?, id.clone()), ("m(id⊗u) vs id", m.mul(&id.kron(u))?, id.clone())],
    )?);
    axioms.push(compare(
        "coassoc",
        &[("(Δ⊗id)Δ vs (id⊗Δ)Δ", d.kron(&id).mul(d)?, id.kron(d).mul(d)?)],
    )?);
    axioms.push(compare(
        "counit",
        &[("(ε⊗id)Δ vs id", e.kron(&id).mul(d)?, id.clone()), ("(id⊗ε)Δ vs id", id.kron(e).mul(d)?, id.clone())],
    )?);
    let lhs = m.kron(m).mul(&id.kron(&b.br()).kron(&id))?.mul(&d.kron(d))?;
    axioms.push(compare("bialgebra", &[("(m⊗m)(id⊗br⊗id)(Δ⊗Δ) vs Δm", lhs, d.mul(m)?)])?);
    axioms.push(compare(
        "unit-counit",
        &[
            ("Δu vs u⊗u", d.mul(u)?, u.kron(u)),
            ("εm vs ε⊗ε", e.mul(m)?, e.kron(e)),
            ("εu vs 1", e.mul(u)?, Matrix::identity(1)),
        ],
    )?);
    axioms.push(grading(b));
    Ok(Report { axioms })
}

/// Structure maps must preserve degree.
fn grading(b: &Bialgebra) -> AxiomResult {
    let n = b.n;
    let deg2 = |k: usize| (b.grading[k / n] + b.grading[k % n]) % 2;
    let checks: [(&str, &Matrix, Box<dyn Fn(usize) -> u8>, Box<dyn Fn(usize) -> u8>); 4] = [
        ("m", &b.m, Box::new(|i| b.grading[i]), Box::new(deg2)),
        ("u", &b.u, Box::new(|i| b.grading[i]), Box::new(|_| 0)),
        ("delta", &b.delta, Box::new(deg2), Box::new(|j| b.grading[j])),
        ("epsilon", &b.eps, Box::new(|_| 0), Box::new(|j| b.grading[j])),
    ];
    for (name, mat, dr, dc) in checks {
        for i in 0..mat.rows {
            for j in 0..mat.cols {
                let x = mat.get(i, j);
                if !x.is_zero() && dr(i) != dc(j) {
                    return AxiomResult {
                        axiom: "grading",
                        pass: false,
                        detail: Some(format!("{name} is not even")),
                        witness: Some(Witness { row: i, col: j, lhs: x.clone(), rhs: Scalar::zero() }),
                    };
                }
            }
        }
    }
    AxiomResult { axiom: "grading", pass: true, detail: None, witness: None }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Ext { ext: String },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BialgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default)]
    pub grading: Option<Vec<u8>>,
    #[serde(default = "flip")]
    pub braiding: Braiding,
    pub m: Value,
    pub u: Value,
    pub delta: Value,
    pub epsilon: Value,
}

fn flip() -> Braiding {
    Braiding::Flip
}

/// Nested rows, or a flat row-major list, of scalar strings (numbers accepted).
pub fn read_matrix(v: &Value, rows: usize, cols: usize, field: Option<&Arc<Modulus>>, name: &str) -> Result<Matrix> {
    let scalar = |x: &Value| -> Result<Scalar> {
        match x {
            Value::String(s) => Scalar::parse(s, field),
            Value::Number(k) => Scalar::parse(&k.to_string(), field),
            _ => Err(HopfError::Parse(format!("{name}: entries must be strings"))),
        }
    };
    let Value::Array(items) = v else {
        return Err(HopfError::Parse(format!("{name}: expected an array")));
    };
    let flat: Vec<Scalar> = if items.iter().all(|x| x.is_array()) {
        let mut out = Vec::new();
        for r in items {
            let r = r.as_array().unwrap();
            if r.len() != cols {
                return Err(HopfError::Shape(format!("{name}: row of length {}, expected {cols}", r.len())));
            }
            for x in r {
                out.push(scalar(x)?);
            }
        }
        out
    } else {
        items.iter().map(scalar).collect::<Result<_>>()?
    };
    if flat.len() != rows * cols {
        return Err(HopfError::Shape(format!("{name}: {} entries, expected {rows}×{cols}", flat.len())));
    }
    Ok(Matrix { rows, cols, data: flat })
}

pub fn write_matrix(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array((0..m.cols).map(|j| Value::String(m.get(i, j).to_string())).collect()))
            .collect(),
    )
}

impl BialgebraFile {
    pub fn into_bialgebra(self) -> Result<Bialgebra> {
        let field = match &self.field {
            FieldSpec::Named(s) if s == "Q" => None,
            FieldSpec::Named(s) => return Err(HopfError::Parse(format!("unknown field `{s}`"))),
            FieldSpec::Ext { ext } => Some(Modulus::parse(ext)?),
        };
        let n = self.dim;
        let f = field.as_ref();
        let b = Bialgebra {
            n,
            grading: self.grading.unwrap_or_else(|| vec![0; n]),
            braiding: self.braiding,
            m: read_matrix(&self.m, n, n * n, f, "m")?,
            u: read_matrix(&self.u, n, 1, f, "u")?,
            delta: read_matrix(&self.delta, n * n, n, f, "delta")?,
            eps: read_matrix(&self.epsilon, 1, n, f, "epsilon")?,
            field,
        };
        b.check_shapes()?;
        Ok(b)
    }
}

impl From<&Bialgebra> for BialgebraFile {
    fn from(b: &Bialgebra) -> Self {
        BialgebraFile {
            field: match &b.field {
                None => FieldSpec::Named("Q".into()),
                Some(f) => FieldSpec::Ext { ext: f.text.clone() },
            },
            dim: b.n,
            grading: Some(b.grading.clone()),
            braiding: b.braiding,
            m: write_matrix(&b.m),
            u: write_matrix(&b.u),
            delta: write_matrix(&b.delta),
            epsilon: write_matrix(&b.eps),
        }
    }
}
