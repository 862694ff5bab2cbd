//! JSON instance files. Rationals are strings (`"p/q"` or `"p"`); matrices
//! are arrays of rows; structure constants are `mult[i][j]` = coordinates
//! of `e_i e_j`.
//!
//! ```json
//! {
//!   "name": "group2",
//!   "hopf": {
//!     "total": { "unit": ["1", "0"], "mult": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]] },
//!     "left":  { "base": …, "source": …, "target": …, "delta": …, "counit": … },
//!     "right": { … },
//!     "antipode": [["1", "0"], ["0", "1"]],
//!     "antipode_inv": null
//!   },
//!   "right_algebra": { "algebra": …, "action": [matrix, …] },
//!   "left_algebra": null,
//!   "right_coeffs": { "dim": 1, "action": […], "rho_l": …, "rho_r": …, "base_l": […], "base_r": […] },
//!   "left_coeffs": null,
//!   "category": null,
//!   "witness": null
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::category::{HCategory, HomSpace, SeparationWitness};
use crate::error::{Error, Result};
use crate::hopf::{Bialgebroid, HopfAlgebroid, Side};
use crate::instances::InstanceBundle;
use crate::linalg::{Matrix, SparseMatrix, SparseVec};
use crate::modules::{HModule, HopfComodule, ModuleAlgebra, Orientation, StableModuleComodule};
use crate::scalar::Scalar;

type Rows = Vec<Vec<Scalar>>;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AlgebraFile {
    pub unit: Vec<Scalar>,
    pub mult: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BialgebroidFile {
    pub base: AlgebraFile,
    pub source: Rows,
    pub target: Rows,
    pub delta: Rows,
    pub counit: Rows,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct HopfFile {
    pub total: AlgebraFile,
    pub left: BialgebroidFile,
    pub right: BialgebroidFile,
    pub antipode: Rows,
    #[serde(default)]
    pub antipode_inv: Option<Rows>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ModuleAlgebraFile {
    pub algebra: AlgebraFile,
    pub action: Vec<Rows>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CoefficientsFile {
    pub dim: usize,
    pub action: Vec<Rows>,
    pub rho_l: Rows,
    pub rho_r: Rows,
    pub base_l: Vec<Rows>,
    pub base_r: Vec<Rows>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct HomFile {
    pub dim: usize,
    pub action: Vec<Rows>,
}

/// `compose[x][y][z][g * dim(x,y) + f]` is `g ∘ f` for `f : x -> y`, `g : y -> z`.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub homs: Vec<Vec<HomFile>>,
    pub compose: Vec<Vec<Vec<Vec<Vec<Scalar>>>>>,
    pub identity: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PieceFile {
    pub object: usize,
    pub u: Vec<Scalar>,
    pub v: Vec<Scalar>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WitnessFile {
    pub subcategory: Vec<usize>,
    pub pieces: Vec<Vec<PieceFile>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct InstanceFile {
    pub name: String,
    pub hopf: HopfFile,
    #[serde(default)]
    pub right_algebra: Option<ModuleAlgebraFile>,
    #[serde(default)]
    pub left_algebra: Option<ModuleAlgebraFile>,
    #[serde(default)]
    pub right_coeffs: Option<CoefficientsFile>,
    #[serde(default)]
    pub left_coeffs: Option<CoefficientsFile>,
    #[serde(default)]
    pub category: Option<CategoryFile>,
    #[serde(default)]
    pub witness: Option<WitnessFile>,
}

/// A parsed instance: the bundle plus optional category data.
#[derive(Clone, Debug)]
pub struct LoadedInstance {
    pub bundle: InstanceBundle,
    pub category: Option<HCategory>,
    pub witness: Option<(Vec<usize>, SeparationWitness)>,
}

fn rows_of(m: &SparseMatrix) -> Rows {
    Matrix::from_sparse(m).to_rows()
}

fn matrix(key: &str, rows: &Rows, nrows: usize, ncols: usize) -> Result<SparseMatrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse {
            path: key.into(),
            message: format!("expected a {nrows}x{ncols} matrix"),
        });
    }
    Ok(if nrows == 0 {
        SparseMatrix::zero(0, ncols)
    } else {
        Matrix::from_rows(rows.clone()).to_sparse()
    })
}

fn vector(key: &str, v: &[Scalar], len: usize) -> Result<SparseVec> {
    if v.len() != len {
        return Err(Error::Parse {
            path: key.into(),
            message: format!("expected a vector of length {len}"),
        });
    }
    Ok(SparseVec::from_dense(v))
}

fn family(key: &str, ms: &[Rows], count: usize, nrows: usize, ncols: usize) -> Result<Vec<SparseMatrix>> {
    if ms.len() != count {
        return Err(Error::Parse {
            path: key.into(),
            message: format!("expected {count} matrices"),
        });
    }
    ms.iter()
        .enumerate()
        .map(|(i, m)| matrix(&format!("{key}[{i}]"), m, nrows, ncols))
        .collect()
}

impl AlgebraFile {
    fn from_algebra(a: &FiniteAlgebra) -> Self {
        let (unit, mult) = a.to_dense();
        AlgebraFile { unit, mult }
    }

    fn to_algebra(&self, key: &str) -> Result<FiniteAlgebra> {
        FiniteAlgebra::from_dense(&self.unit, &self.mult).map_err(|e| Error::Parse {
            path: key.into(),
            message: e.to_string(),
        })
    }
}

impl BialgebroidFile {
    fn from_bialgebroid(b: &Bialgebroid) -> Self {
        BialgebroidFile {
            base: AlgebraFile::from_algebra(b.base()),
            source: rows_of(b.source()),
            target: rows_of(b.target()),
            delta: rows_of(b.delta_lift()),
            counit: rows_of(b.counit()),
        }
    }

    fn to_bialgebroid(&self, key: &str, side: Side, total: &FiniteAlgebra) -> Result<Bialgebroid> {
        let base = self.base.to_algebra(&format!("{key}.base"))?;
        let (h, b) = (total.dim(), base.dim());
        Bialgebroid::new(
            side,
            total.clone(),
            base,
            matrix(&format!("{key}.source"), &self.source, h, b)?,
            matrix(&format!("{key}.target"), &self.target, h, b)?,
            matrix(&format!("{key}.delta"), &self.delta, h * h, h)?,
            matrix(&format!("{key}.counit"), &self.counit, b, h)?,
        )
    }
}

impl HopfFile {
    fn from_hopf(h: &HopfAlgebroid) -> Self {
        HopfFile {
            total: AlgebraFile::from_algebra(h.total()),
            left: BialgebroidFile::from_bialgebroid(&h.left),
            right: BialgebroidFile::from_bialgebroid(&h.right),
            antipode: rows_of(&h.antipode),
            antipode_inv: Some(rows_of(&h.antipode_inv)),
        }
    }

    fn to_hopf(&self) -> Result<HopfAlgebroid> {
        let total = self.total.to_algebra("hopf.total")?;
        let d = total.dim();
        let left = self.left.to_bialgebroid("hopf.left", Side::Left, &total)?;
        let right = self.right.to_bialgebroid("hopf.right", Side::Right, &total)?;
        let s = matrix("hopf.antipode", &self.antipode, d, d)?;
        let s_inv = self
            .antipode_inv
            .as_ref()
            .map(|m| matrix("hopf.antipode_inv", m, d, d))
            .transpose()?;
        HopfAlgebroid::new(left, right, s, s_inv)
    }
}

impl ModuleAlgebraFile {
    fn from_module_algebra(a: &ModuleAlgebra) -> Self {
        ModuleAlgebraFile {
            algebra: AlgebraFile::from_algebra(&a.algebra),
            action: a.module.action.iter().map(rows_of).collect(),
        }
    }

    fn to_module_algebra(&self, key: &str, side: Side, hd: usize) -> Result<ModuleAlgebra> {
        let algebra = self.algebra.to_algebra(&format!("{key}.algebra"))?;
        let n = algebra.dim();
        let action = family(&format!("{key}.action"), &self.action, hd, n, n)?;
        Ok(ModuleAlgebra {
            algebra,
            module: HModule::new(side, n, action),
        })
    }
}

impl CoefficientsFile {
    fn from_coefficients(m: &StableModuleComodule) -> Self {
        let c = &m.comodule;
        CoefficientsFile {
            dim: m.dim(),
            action: m.module.action.iter().map(rows_of).collect(),
            rho_l: rows_of(&c.rho_l),
            rho_r: rows_of(&c.rho_r),
            base_l: c.base_l.iter().map(rows_of).collect(),
            base_r: c.base_r.iter().map(rows_of).collect(),
        }
    }

    fn to_coefficients(&self, key: &str, orientation: Orientation, h: &HopfAlgebroid) -> Result<StableModuleComodule> {
        let (hd, md) = (h.dim(), self.dim);
        let side = match orientation {
            Orientation::Right => Side::Right,
            Orientation::Left => Side::Left,
        };
        Ok(StableModuleComodule {
            module: HModule::new(side, md, family(&format!("{key}.action"), &self.action, hd, md, md)?),
            comodule: HopfComodule {
                orientation,
                dim: md,
                rho_l: matrix(&format!("{key}.rho_l"), &self.rho_l, md * hd, md)?,
                rho_r: matrix(&format!("{key}.rho_r"), &self.rho_r, md * hd, md)?,
                base_l: family(&format!("{key}.base_l"), &self.base_l, h.left.base().dim(), md, md)?,
                base_r: family(&format!("{key}.base_r"), &self.base_r, h.right.base().dim(), md, md)?,
            },
        })
    }
}

impl CategoryFile {
    pub fn from_category(c: &HCategory) -> Self {
        let k = c.len();
        CategoryFile {
            objects: c.objects.clone(),
            homs: (0..k)
                .map(|x| {
                    (0..k)
                        .map(|y| HomFile {
                            dim: c.hom_dim(x, y),
                            action: c.homs[x][y].action.iter().map(rows_of).collect(),
                        })
                        .collect()
                })
                .collect(),
            compose: (0..k)
                .map(|x| {
                    (0..k)
                        .map(|y| {
                            (0..k)
                                .map(|z| c.compose[x][y][z].iter().map(|v| v.to_dense(c.hom_dim(x, z))).collect())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            identity: (0..k).map(|x| c.identity[x].to_dense(c.hom_dim(x, x))).collect(),
        }
    }

    fn to_category(&self, hd: usize) -> Result<HCategory> {
        let k = self.objects.len();
        let bad = |path: String, message: String| Error::Parse { path, message };
        if self.homs.len() != k || self.homs.iter().any(|r| r.len() != k) {
            return Err(bad("category.homs".into(), format!("expected a {k}x{k} table")));
        }
        let dim = |x: usize, y: usize| self.homs[x][y].dim;
        let mut homs = Vec::with_capacity(k);
        for x in 0..k {
            let mut row = Vec::with_capacity(k);
            for y in 0..k {
                let key = format!("category.homs[{x}][{y}].action");
                row.push(HomSpace {
                    dim: dim(x, y),
                    action: family(&key, &self.homs[x][y].action, hd, dim(x, y), dim(x, y))?,
                });
            }
            homs.push(row);
        }
        let mut compose = vec![vec![vec![Vec::new(); k]; k]; k];
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let key = format!("category.compose[{x}][{y}][{z}]");
                    let table = self
                        .compose
                        .get(x)
                        .and_then(|t| t.get(y))
                        .and_then(|t| t.get(z))
                        .ok_or_else(|| bad(key.clone(), "missing table".into()))?;
                    if table.len() != dim(y, z) * dim(x, y) {
                        return Err(bad(key, format!("expected {} entries", dim(y, z) * dim(x, y))));
                    }
                    compose[x][y][z] = table
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vector(&format!("{key}[{i}]"), v, dim(x, z)))
                        .collect::<Result<_>>()?;
                }
            }
        }
        if self.identity.len() != k {
            return Err(bad("category.identity".into(), format!("expected {k} vectors")));
        }
        let identity = (0..k)
            .map(|x| vector(&format!("category.identity[{x}]"), &self.identity[x], dim(x, x)))
            .collect::<Result<_>>()?;
        Ok(HCategory {
            objects: self.objects.clone(),
            homs,
            compose,
            identity,
            realization: None,
        })
    }
}

impl WitnessFile {
    pub fn from_witness(xi: &[usize], w: &SeparationWitness, c: &HCategory) -> Self {
        WitnessFile {
            subcategory: xi.to_vec(),
            pieces: w
                .pieces
                .iter()
                .enumerate()
                .map(|(x, ps)| {
                    ps.iter()
                        .map(|(o, u, v)| PieceFile {
                            object: *o,
                            u: u.to_dense(c.hom_dim(x, *o)),
                            v: v.to_dense(c.hom_dim(*o, x)),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn to_witness(&self, c: &HCategory) -> Result<(Vec<usize>, SeparationWitness)> {
        let k = c.len();
        let check_obj = |key: String, o: usize| {
            if o < k {
                Ok(o)
            } else {
                Err(Error::Parse {
                    path: key,
                    message: format!("object {o} out of range"),
                })
            }
        };
        for (i, &o) in self.subcategory.iter().enumerate() {
            check_obj(format!("witness.subcategory[{i}]"), o)?;
        }
        if self.pieces.len() != k {
            return Err(Error::Parse {
                path: "witness.pieces".into(),
                message: format!("expected {k} families"),
            });
        }
        let pieces = self
            .pieces
            .iter()
            .enumerate()
            .map(|(x, ps)| {
                ps.iter()
                    .enumerate()
                    .map(|(i, p)| {
                        let key = format!("witness.pieces[{x}][{i}]");
                        let o = check_obj(format!("{key}.object"), p.object)?;
                        Ok((
                            o,
                            vector(&format!("{key}.u"), &p.u, c.hom_dim(x, o))?,
                            vector(&format!("{key}.v"), &p.v, c.hom_dim(o, x))?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok((self.subcategory.clone(), SeparationWitness { pieces }))
    }
}

impl InstanceFile {
    pub fn from_bundle(b: &InstanceBundle) -> Self {
        InstanceFile {
            name: b.name.clone(),
            hopf: HopfFile::from_hopf(&b.hopf),
            right_algebra: b.right_algebra.as_ref().map(ModuleAlgebraFile::from_module_algebra),
            left_algebra: b.left_algebra.as_ref().map(ModuleAlgebraFile::from_module_algebra),
            right_coeffs: b.right_coeffs.as_ref().map(CoefficientsFile::from_coefficients),
            left_coeffs: b.left_coeffs.as_ref().map(CoefficientsFile::from_coefficients),
            category: None,
            witness: None,
        }
    }

    pub fn load(&self) -> Result<LoadedInstance> {
        let hopf = self.hopf.to_hopf()?;
        let hd = hopf.dim();
        let bundle = InstanceBundle {
            name: self.name.clone(),
            right_algebra: self
                .right_algebra
                .as_ref()
                .map(|a| a.to_module_algebra("right_algebra", Side::Right, hd))
                .transpose()?,
            left_algebra: self
                .left_algebra
                .as_ref()
                .map(|a| a.to_module_algebra("left_algebra", Side::Left, hd))
                .transpose()?,
            right_coeffs: self
                .right_coeffs
                .as_ref()
                .map(|m| m.to_coefficients("right_coeffs", Orientation::Right, &hopf))
                .transpose()?,
            left_coeffs: self
                .left_coeffs
                .as_ref()
                .map(|m| m.to_coefficients("left_coeffs", Orientation::Left, &hopf))
                .transpose()?,
            hopf,
        };
        let category = self.category.as_ref().map(|c| c.to_category(hd)).transpose()?;
        let witness = match (&self.witness, &category) {
            (Some(w), Some(c)) => Some(w.to_witness(c)?),
            (Some(_), None) => {
                return Err(Error::Parse {
                    path: "witness".into(),
                    message: "a witness needs a category".into(),
                })
            }
            (None, _) => None,
        };
        Ok(LoadedInstance {
            bundle,
            category,
            witness,
        })
    }
}

/// Parses an instance document. Syntax errors carry the key path and the
/// line and column.
pub fn parse_instance(text: &str) -> Result<LoadedInstance> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: InstanceFile = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })?;
    file.load()
}

pub fn to_json(b: &InstanceBundle) -> String {
    serde_json::to_string_pretty(&InstanceFile::from_bundle(b)).expect("instance serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{build_free_cat, free_witness};
    use crate::instances::{builtin, instance_group, BUILTIN_NAMES};

    #[test]
    fn builtins_round_trip() {
        for name in BUILTIN_NAMES {
            let b = builtin(name).unwrap();
            let text = to_json(&b);
            let back = parse_instance(&text).unwrap().bundle;
            assert_eq!(to_json(&back), text, "{name}");
            assert!(back.validate().passed(), "{name}");
        }
    }

    #[test]
    fn category_and_witness_round_trip() {
        let b = instance_group(2);
        let c = build_free_cat(&b.hopf, b.left_algebra.as_ref().unwrap(), 2).unwrap();
        let w = free_witness(&c).unwrap();
        let mut file = InstanceFile::from_bundle(&b);
        file.category = Some(CategoryFile::from_category(&c));
        file.witness = Some(WitnessFile::from_witness(&[0], &w, &c));
        let text = serde_json::to_string(&file).unwrap();
        let loaded = parse_instance(&text).unwrap();
        let lc = loaded.category.unwrap();
        assert_eq!(lc.compose, c.compose);
        assert_eq!(lc.identity, c.identity);
        let (xi, lw) = loaded.witness.unwrap();
        assert_eq!(xi, vec![0]);
        assert_eq!(lw.pieces, w.pieces);
    }

    #[test]
    fn zero_denominator_is_a_parse_error_with_path() {
        let text = to_json(&instance_group(2)).replacen("\"1\"", "\"1/0\"", 1);
        match parse_instance(&text) {
            Err(Error::Parse { path, message }) => {
                assert!(path.starts_with("hopf.total"), "{path}");
                assert!(message.contains("line"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_shape_names_the_key() {
        let mut file = InstanceFile::from_bundle(&instance_group(2));
        file.hopf.antipode.pop();
        let text = serde_json::to_string(&file).unwrap();
        match parse_instance(&text) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "hopf.antipode"),
            other => panic!("{other:?}"),
        }
    }
}
