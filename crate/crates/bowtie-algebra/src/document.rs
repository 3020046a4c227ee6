//! Dense structure-constant documents: JSON import/export of a matched
//! pair.
//!
//! A structure is fully determined by the values of its four bilinear maps
//! on basis pairs. The document stores those values as flat row-major
//! arrays, so a structure defined by closed-form callables can be exported,
//! shipped, and re-imported as an exactly equivalent tensor-backed
//! structure (JSON float round-tripping is lossless: numbers are written in
//! shortest-round-trip form).

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::structure::{BilinearMap, MatchedPairStructure};
use crate::Result;

/// Index convention, embedded in every document for self-description.
const INDEX_CONVENTION: &str = "entry (i,j,k) of a map f at flat index (i*cols + j)*out + k holds the k-th \
     component of f(basis_i, basis_j); bracket_g: i,j,k over dim_g; bracket_h: \
     i,j,k over dim_h; act_left (eta |> xi): i over dim_h, j over dim_g, k over \
     dim_g; act_right (eta <| xi): i over dim_h, j over dim_g, k over dim_h";

/// A matched-pair structure as dense structure-constant arrays.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureDocument {
    /// Format tag for forward compatibility.
    pub format: String,
    /// Human-readable statement of the array layout.
    pub index_convention: String,
    /// Dimension of `𝔤`.
    pub dim_g: usize,
    /// Dimension of `𝔥`.
    pub dim_h: usize,
    /// `[eᵢ,eⱼ]_𝔤` constants, `dim_g³` entries.
    pub bracket_g: Vec<f64>,
    /// `[fᵢ,fⱼ]_𝔥` constants, `dim_h³` entries.
    pub bracket_h: Vec<f64>,
    /// `fᵢ ▷ eⱼ` constants, `dim_h·dim_g·dim_g` entries.
    pub act_left: Vec<f64>,
    /// `fᵢ ◁ eⱼ` constants, `dim_h·dim_g·dim_h` entries.
    pub act_right: Vec<f64>,
}

fn sample_tensor(
    f: impl Fn(&DVector<f64>, &DVector<f64>) -> DVector<f64>,
    rows: usize,
    cols: usize,
    out: usize,
) -> Vec<f64> {
    let mut tensor = vec![0.0; rows * cols * out];
    for i in 0..rows {
        let mut ei = DVector::zeros(rows);
        ei[i] = 1.0;
        for j in 0..cols {
            let mut ej = DVector::zeros(cols);
            ej[j] = 1.0;
            let val = f(&ei, &ej);
            for k in 0..out {
                // Canonicalize -0.0 so an exported document is byte-stable
                // regardless of how the sampled map produced its zeros.
                tensor[(i * cols + j) * out + k] = val[k] + 0.0;
            }
        }
    }
    tensor
}

/// Evaluates a sampled tensor as a bilinear map. Accumulation order is
/// fixed (i outer, j inner) for reproducibility.
fn tensor_eval(tensor: &[f64], rows: usize, cols: usize, out: usize) -> BilinearMap {
    let tensor = tensor.to_vec();
    Box::new(move |u: &DVector<f64>, v: &DVector<f64>| {
        let mut result = DVector::zeros(out);
        for i in 0..rows {
            let ui = u[i];
            if ui == 0.0 {
                continue;
            }
            for j in 0..cols {
                let w = ui * v[j];
                for k in 0..out {
                    result[k] += w * tensor[(i * cols + j) * out + k];
                }
            }
        }
        result
    })
}

impl StructureDocument {
    /// Samples a structure's four maps on the standard bases.
    pub fn from_structure(s: &MatchedPairStructure) -> Self {
        let dg = s.dim_g();
        let dh = s.dim_h();
        Self {
            format: "matched-pair-structure/1".to_owned(),
            index_convention: INDEX_CONVENTION.to_owned(),
            dim_g: dg,
            dim_h: dh,
            bracket_g: sample_tensor(|a, b| s.bracket_g(a, b), dg, dg, dg),
            bracket_h: sample_tensor(|a, b| s.bracket_h(a, b), dh, dh, dh),
            act_left: sample_tensor(|a, b| s.act_left(a, b), dh, dg, dg),
            act_right: sample_tensor(|a, b| s.act_right(a, b), dh, dg, dh),
        }
    }

    /// Builds a tensor-backed structure from the stored constants.
    pub fn to_structure(&self) -> Result<MatchedPairStructure> {
        self.validate()?;
        let (dg, dh) = (self.dim_g, self.dim_h);
        MatchedPairStructure::new(
            dg,
            dh,
            tensor_eval(&self.bracket_g, dg, dg, dg),
            tensor_eval(&self.bracket_h, dh, dh, dh),
            tensor_eval(&self.act_left, dh, dg, dg),
            tensor_eval(&self.act_right, dh, dg, dh),
        )
    }

    fn validate(&self) -> Result<()> {
        if self.dim_g == 0 || self.dim_h == 0 {
            return Err(AlgebraError::InvalidDimension {
                dim_g: self.dim_g,
                dim_h: self.dim_h,
            });
        }
        let expect = [
            ("bracket_g", self.bracket_g.len(), self.dim_g.pow(3)),
            ("bracket_h", self.bracket_h.len(), self.dim_h.pow(3)),
            (
                "act_left",
                self.act_left.len(),
                self.dim_h * self.dim_g * self.dim_g,
            ),
            (
                "act_right",
                self.act_right.len(),
                self.dim_h * self.dim_g * self.dim_h,
            ),
        ];
        for (name, got, want) in expect {
            if got != want {
                return Err(AlgebraError::Document(format!(
                    "{name} has {got} entries, expected {want}"
                )));
            }
        }
        if !self
            .bracket_g
            .iter()
            .chain(&self.bracket_h)
            .chain(&self.act_left)
            .chain(&self.act_right)
            .all(|v| v.is_finite())
        {
            return Err(AlgebraError::Document(
                "non-finite structure constant".to_owned(),
            ));
        }
        Ok(())
    }

    /// Serializes to pretty JSON.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses a document from JSON and validates array lengths.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    fn cross(a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
        dvector![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]
        ]
    }

    fn sample() -> MatchedPairStructure {
        MatchedPairStructure::new(
            3,
            3,
            Box::new(cross),
            Box::new(cross),
            Box::new(|_, xi| DVector::zeros(xi.len())),
            Box::new(|eta, _| DVector::zeros(eta.len())),
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let doc = StructureDocument::from_structure(&sample());
        let text = doc.to_json().unwrap();
        let back = StructureDocument::from_json(&text).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn tensor_backed_structure_reproduces_the_maps() {
        let s = sample();
        let doc = StructureDocument::from_structure(&s);
        let t = doc.to_structure().unwrap();
        let a = dvector![0.3, -1.2, 0.7];
        let b = dvector![1.0, 0.25, -0.5];
        // Cross products of basis vectors are exact, and the inputs have
        // exactly representable products, so the tensor route agrees to a
        // few ulps.
        let diff = (s.bracket_g(&a, &b) - t.bracket_g(&a, &b)).amax();
        assert!(diff < 1e-15, "diff = {diff}");
    }

    #[test]
    fn truncated_arrays_are_rejected() {
        let mut doc = StructureDocument::from_structure(&sample());
        doc.bracket_g.pop();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(StructureDocument::from_json(&text).is_err());
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(StructureDocument::from_json("{ not json").is_err());
    }
}
