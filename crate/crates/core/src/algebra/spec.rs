use super::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Subspace};
use serde::{Deserialize, Serialize};

/// JSON interchange form of an algebra. `table[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub p: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<u32>,
    pub table: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<Vec<u32>>>,
}

impl AlgebraSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn build(&self) -> Result<FinDimAlgebra> {
        let fp = Fp::new(self.p)?;
        let dim = self.dim;
        let labels = self.labels.clone().unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect());
        if labels.len() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: labels.len() });
        }
        if self.table.len() != dim || self.table.iter().any(|row| row.len() != dim) {
            return Err(Error::Malformed(format!("table must be {dim} x {dim}")));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::Malformed(format!("table[{i}][{j}] has length {}", v.len())));
                }
                flat.extend_from_slice(v);
            }
        }
        let mut alg = FinDimAlgebra::new(fp, labels, flat, self.unit.clone())?;
        if let Some(form) = &self.form {
            alg = alg.with_form(Matrix::from_rows(fp, dim, form)?)?;
        }
        if let Some(rad) = &self.radical {
            alg = alg.with_radical(Subspace::span(fp, dim, rad.iter().cloned())?)?;
        }
        Ok(alg)
    }
}

impl FinDimAlgebra {
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        spec.build()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        AlgebraSpec::from_json(s)?.build()
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        let table = (0..self.dim).map(|i| (0..self.dim).map(|j| self.structure(i, j).to_vec()).collect()).collect();
        AlgebraSpec {
            p: self.p() as u64,
            dim: self.dim,
            labels: Some(self.labels.clone()),
            unit: self.unit.clone(),
            table,
            form: self.form.as_ref().map(|g| g.row_vecs().collect()),
            radical: self.radical.as_ref().map(|r| r.vectors().collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;

    #[test]
    fn json_round_trip() {
        for (_, alg) in all_fixtures() {
            let json = alg.to_spec().to_json();
            assert_eq!(FinDimAlgebra::from_json(&json).unwrap(), alg);
        }
    }

    #[test]
    fn parses_the_documented_example() {
        let s = r#"{"p":2,"dim":2,"labels":["1","x"],"unit":[1,0],"table":[[[1,0],[0,1]],[[0,1],[0,0]]]}"#;
        let a = FinDimAlgebra::from_json(s).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.multiply(&[0, 1], &[0, 1]), vec![0, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FinDimAlgebra::from_json("{"), Err(Error::Malformed(_))));
        let s = r#"{"p":4,"dim":1,"unit":[1],"table":[[[1]]]}"#;
        assert_eq!(FinDimAlgebra::from_json(s), Err(Error::NotPrime(4)));
        let s = r#"{"p":2,"dim":2,"unit":[1,0],"table":[[[1,0],[0,1]],[[0,1],[0,0]]],"form":[[1,0],[0,1]]}"#;
        assert!(matches!(FinDimAlgebra::from_json(s), Err(Error::InvalidForm(_))));
    }
}
