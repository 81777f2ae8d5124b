//! Deterministic structural reports for the command-line front end.

use crate::product::NAryProduct;
use crate::structure::{
    characteristic_sequence, derivation_algebra, derived_series, diagonal_derivation_weights,
    generators_quotient_dim, has_nonsingular_derivation, is_filiform, lower_central_series,
    CharacteristicSequence,
};

/// Everything `analyze` prints, in one struct so the two output formats
/// cannot drift apart.
#[derive(Debug, Clone)]
pub struct AnalyzeReport {
    pub arity: usize,
    pub dim: usize,
    pub symmetry: String,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub nilpotent: bool,
    pub solvable: bool,
    pub generators_dim: usize,
    pub characteristic: Option<(CharacteristicSequence, bool)>,
    pub filiform: Option<bool>,
    pub derivation_dim: usize,
    pub has_nonsingular_derivation: bool,
    pub diagonal_rank: usize,
}

/// Runs the full structural analysis; `seed` feeds the characteristic
/// sequence's random candidate tuples.
pub fn analyze(prod: &NAryProduct, seed: u64) -> AnalyzeReport {
    let lc = lower_central_series(prod);
    let ds = derived_series(prod);
    let nilpotent = lc.vanishes();
    let characteristic = if nilpotent {
        characteristic_sequence(prod, &[], seed).ok()
    } else {
        None
    };
    let filiform = if nilpotent {
        is_filiform(prod).ok()
    } else {
        None
    };
    AnalyzeReport {
        arity: prod.arity(),
        dim: prod.dim(),
        symmetry: prod.symmetry().to_string(),
        lower_central_dims: lc.dims(),
        derived_dims: ds.dims(),
        nilpotent,
        solvable: ds.vanishes(),
        generators_dim: generators_quotient_dim(prod),
        characteristic,
        filiform,
        derivation_dim: derivation_algebra(prod).len(),
        has_nonsingular_derivation: has_nonsingular_derivation(prod),
        diagonal_rank: diagonal_derivation_weights(prod).solution_dim,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dims(v: &[usize]) -> String {
    v.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl AnalyzeReport {
    /// Flat `key = value` form, one line per field, fixed order.
    pub fn to_flat(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("arity = {}\n", self.arity));
        out.push_str(&format!("dim = {}\n", self.dim));
        out.push_str(&format!("symmetry = {}\n", self.symmetry));
        out.push_str(&format!(
            "lower_central_dims = {}\n",
            dims(&self.lower_central_dims)
        ));
        out.push_str(&format!("derived_dims = {}\n", dims(&self.derived_dims)));
        out.push_str(&format!("nilpotent = {}\n", yes_no(self.nilpotent)));
        out.push_str(&format!("solvable = {}\n", yes_no(self.solvable)));
        out.push_str(&format!("generators_dim = {}\n", self.generators_dim));
        match &self.characteristic {
            Some((seq, certified)) => {
                out.push_str(&format!(
                    "characteristic_sequence = {}\n",
                    dims(seq.parts())
                ));
                out.push_str(&format!(
                    "characteristic_certified = {}\n",
                    yes_no(*certified)
                ));
            }
            None => {
                out.push_str("characteristic_sequence = n/a\n");
                out.push_str("characteristic_certified = n/a\n");
            }
        }
        match self.filiform {
            Some(f) => out.push_str(&format!("filiform = {}\n", yes_no(f))),
            None => out.push_str("filiform = n/a\n"),
        }
        out.push_str(&format!("derivation_dim = {}\n", self.derivation_dim));
        out.push_str(&format!(
            "nonsingular_derivation = {}\n",
            yes_no(self.has_nonsingular_derivation)
        ));
        out.push_str(&format!("diagonal_rank = {}\n", self.diagonal_rank));
        out
    }

    /// Human-readable form; same content and order as the flat form.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}-ary algebra on K^{} ({} constants)\n",
            self.arity, self.dim, self.symmetry
        ));
        out.push_str(&format!(
            "lower central series dims: {}\n",
            dims(&self.lower_central_dims)
        ));
        out.push_str(&format!("derived series dims:       {}\n", dims(&self.derived_dims)));
        out.push_str(&format!(
            "nilpotent: {}   solvable: {}\n",
            yes_no(self.nilpotent),
            yes_no(self.solvable)
        ));
        out.push_str(&format!("dim V/V^2 (generators): {}\n", self.generators_dim));
        match &self.characteristic {
            Some((seq, certified)) => out.push_str(&format!(
                "characteristic sequence: {seq}{}\n",
                if *certified { " (certified)" } else { " (lower bound)" }
            )),
            None => out.push_str("characteristic sequence: n/a (not nilpotent)\n"),
        }
        match self.filiform {
            Some(f) => out.push_str(&format!("filiform: {}\n", yes_no(f))),
            None => out.push_str("filiform: n/a\n"),
        }
        out.push_str(&format!("dim Der(V): {}\n", self.derivation_dim));
        out.push_str(&format!(
            "nonsingular derivation: {}\n",
            yes_no(self.has_nonsingular_derivation)
        ));
        out.push_str(&format!(
            "diagonal derivation rank (this basis): {}\n",
            self.diagonal_rank
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn filiform_report() {
        let prod = catalog::filiform_model(3, 5);
        let r = analyze(&prod, 0);
        assert!(r.nilpotent && r.solvable);
        assert_eq!(r.lower_central_dims, vec![5, 2, 1, 0]);
        assert_eq!(r.generators_dim, 3);
        let (seq, certified) = r.characteristic.as_ref().unwrap();
        assert_eq!(seq.parts(), &[3, 1, 1]);
        assert!(*certified);
        assert_eq!(r.filiform, Some(true));
        assert_eq!(r.diagonal_rank, 3);
        // flat output is stable
        assert_eq!(analyze(&prod, 0).to_flat(), r.to_flat());
    }

    #[test]
    fn counterexample_report() {
        let prod = catalog::counterexample_algebra(3).unwrap();
        let r = analyze(&prod, 0);
        assert!(!r.nilpotent);
        assert!(r.has_nonsingular_derivation);
        assert!(r.to_flat().contains("characteristic_sequence = n/a"));
    }

    #[test]
    fn abelian_report() {
        let prod = catalog::abelian(3, 4);
        let r = analyze(&prod, 0);
        assert_eq!(r.derivation_dim, 16);
        let (seq, _) = r.characteristic.as_ref().unwrap();
        assert_eq!(seq.parts(), &[1, 1, 1, 1]);
    }
}
