//! Finite-dimensional algebras, bimodules and balanced tensor products.

use crate::error::{Error, Result};
use crate::linalg::{Accumulator, QuotientSpace, SparseMatrix, SparseVec, Subspace};
use crate::report::Report;
use crate::scalar::Scalar;

/// Unital associative algebra given by structure constants:
/// `mult[i][j]` is the coordinate vector of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    unit: SparseVec,
    mult: Vec<Vec<SparseVec>>,
}

impl FiniteAlgebra {
    /// No validation; see [`check_algebra`].
    pub fn new(unit: SparseVec, mult: Vec<Vec<SparseVec>>) -> Self {
        let dim = mult.len();
        assert!(mult.iter().all(|r| r.len() == dim), "structure constants must be square");
        FiniteAlgebra { dim, unit, mult }
    }

    pub fn from_dense(unit: &[Scalar], mult: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let dim = unit.len();
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::InvalidInstance(format!(
                "structure constants must be {dim}x{dim}x{dim}"
            )));
        }
        Ok(FiniteAlgebra::new(
            SparseVec::from_dense(unit),
            mult.iter()
                .map(|r| r.iter().map(|c| SparseVec::from_dense(c)).collect())
                .collect(),
        ))
    }

    pub fn to_dense(&self) -> (Vec<Scalar>, Vec<Vec<Vec<Scalar>>>) {
        (
            self.unit.to_dense(self.dim),
            self.mult
                .iter()
                .map(|r| r.iter().map(|c| c.to_dense(self.dim)).collect())
                .collect(),
        )
    }

    /// The ground field ℚ.
    pub fn ground() -> Self {
        FiniteAlgebra::product(1)
    }

    /// ℚ^n with componentwise product; basis = the primitive idempotents.
    pub fn product(n: usize) -> Self {
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { SparseVec::unit(i) } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        let unit = SparseVec::from_dense(&vec![Scalar::one(); n]);
        FiniteAlgebra::new(unit, mult)
    }

    /// ℚ[ℤ/n] with basis g^0, …, g^{n-1}.
    pub fn group_algebra(n: usize) -> Self {
        let mult = (0..n)
            .map(|i| (0..n).map(|j| SparseVec::unit((i + j) % n)).collect())
            .collect();
        FiniteAlgebra::new(SparseVec::unit(0), mult)
    }

    /// ℚ[x]/(x^k) with basis 1, x, …, x^{k-1}.
    pub fn truncated_polynomial(k: usize) -> Self {
        let mult = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i + j < k { SparseVec::unit(i + j) } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        FiniteAlgebra::new(SparseVec::unit(0), mult)
    }

    /// M_n(ℚ) with matrix units E_ij at index i*n + j.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let mut mult = vec![vec![SparseVec::new(); d]; d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mult[i * n + j][j * n + l] = SparseVec::unit(i * n + l);
                }
            }
        }
        let unit = SparseVec::from_pairs((0..n).map(|i| (i * n + i, Scalar::one())));
        FiniteAlgebra::new(unit, mult)
    }

    /// `self ⊗ other` with basis index `i * other.dim + j`.
    pub fn tensor(&self, other: &FiniteAlgebra) -> FiniteAlgebra {
        let (m, n) = (self.dim, other.dim);
        let mut mult = vec![vec![SparseVec::new(); m * n]; m * n];
        for i in 0..m {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..n {
                        mult[i * n + j][k * n + l] = self.mult[i][k].kron(&other.mult[j][l], n);
                    }
                }
            }
        }
        FiniteAlgebra::new(self.unit.kron(&other.unit, n), mult)
    }

    pub fn opposite(&self) -> FiniteAlgebra {
        let mult = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        FiniteAlgebra::new(self.unit.clone(), mult)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&(x * y), &self.mult[i][j]);
            }
        }
        acc.finish()
    }

    pub fn mul_basis(&self, i: usize, v: &SparseVec) -> SparseVec {
        self.mul(&SparseVec::unit(i), v)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self, a: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.dim,
            (0..self.dim).map(|j| self.mul(a, &SparseVec::unit(j))).collect(),
        )
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.dim,
            (0..self.dim).map(|j| self.mul(&SparseVec::unit(j), a)).collect(),
        )
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Product of a sequence, left to right; the unit for an empty sequence.
    pub fn product_of<'a, I: IntoIterator<Item = &'a SparseVec>>(&self, xs: I) -> SparseVec {
        xs.into_iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }
}

pub fn check_algebra(a: &FiniteAlgebra) -> Report {
    let mut r = Report::new("algebra");
    let n = a.dim();
    let ax = r.axiom("associativity");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let lhs = a.mul(ij, &SparseVec::unit(k));
                let rhs = a.mul(&SparseVec::unit(i), a.basis_product(j, k));
                ax.compare(&[i, j, k], &lhs, &rhs);
            }
        }
    }
    let ax = r.axiom("left unit");
    for i in 0..n {
        ax.compare(&[i], &a.mul(a.unit(), &SparseVec::unit(i)), &SparseVec::unit(i));
    }
    let ax = r.axiom("right unit");
    for i in 0..n {
        ax.compare(&[i], &a.mul(&SparseVec::unit(i), a.unit()), &SparseVec::unit(i));
    }
    r
}

/// A linear map between algebras that is meant to be multiplicative.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: FiniteAlgebra,
    pub target: FiniteAlgebra,
    pub matrix: SparseMatrix,
}

impl AlgebraMap {
    pub fn new(source: FiniteAlgebra, target: FiniteAlgebra, matrix: SparseMatrix) -> Self {
        AlgebraMap { source, target, matrix }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }
}

pub fn check_algebra_map(f: &AlgebraMap) -> Report {
    let mut r = Report::new("algebra map");
    let (s, t) = (&f.source, &f.target);
    if f.matrix.ncols() != s.dim() || f.matrix.nrows() != t.dim() {
        r.note(
            "shape",
            false,
            format!("{}x{} for {} -> {}", f.matrix.nrows(), f.matrix.ncols(), s.dim(), t.dim()),
        );
        return r;
    }
    r.axiom("unit").compare(&[], &f.apply(s.unit()), t.unit());
    let ax = r.axiom("multiplicativity");
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let lhs = f.apply(s.basis_product(i, j));
            let rhs = t.mul(f.matrix.col(i), f.matrix.col(j));
            ax.compare(&[i, j], &lhs, &rhs);
        }
    }
    r
}

/// A B-C bimodule: `left[b]` is `m ↦ e_b·m`, `right[c]` is `m ↦ m·e_c`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub left_algebra: FiniteAlgebra,
    pub right_algebra: FiniteAlgebra,
    pub dim: usize,
    pub left: Vec<SparseMatrix>,
    pub right: Vec<SparseMatrix>,
}

impl Bimodule {
    /// An algebra as a bimodule over itself.
    pub fn regular(a: &FiniteAlgebra) -> Self {
        let n = a.dim();
        Bimodule {
            left_algebra: a.clone(),
            right_algebra: a.clone(),
            dim: n,
            left: (0..n).map(|i| a.left_mul_matrix(&SparseVec::unit(i))).collect(),
            right: (0..n).map(|i| a.right_mul_matrix(&SparseVec::unit(i))).collect(),
        }
    }

    /// A k-space with trivial actions of ℚ on both sides.
    pub fn plain(dim: usize) -> Self {
        Bimodule {
            left_algebra: FiniteAlgebra::ground(),
            right_algebra: FiniteAlgebra::ground(),
            dim,
            left: vec![SparseMatrix::identity(dim)],
            right: vec![SparseMatrix::identity(dim)],
        }
    }

    pub fn zero(left: &FiniteAlgebra, right: &FiniteAlgebra) -> Self {
        Bimodule {
            left_algebra: left.clone(),
            right_algebra: right.clone(),
            dim: 0,
            left: vec![SparseMatrix::zero(0, 0); left.dim()],
            right: vec![SparseMatrix::zero(0, 0); right.dim()],
        }
    }

    /// Action matrix of an arbitrary left-algebra element.
    pub fn left_matrix(&self, b: &SparseVec) -> SparseMatrix {
        combine(self.dim, &self.left, b)
    }

    pub fn right_matrix(&self, c: &SparseVec) -> SparseMatrix {
        combine(self.dim, &self.right, c)
    }
}

fn combine(dim: usize, mats: &[SparseMatrix], coeffs: &SparseVec) -> SparseMatrix {
    let mut out = SparseMatrix::zero(dim, dim);
    for (i, a) in coeffs.iter() {
        out = out.add_scaled(a, &mats[i]);
    }
    out
}

pub fn check_bimodule(m: &Bimodule) -> Report {
    let mut r = Report::new("bimodule");
    let (b, c) = (&m.left_algebra, &m.right_algebra);
    let id = SparseMatrix::identity(m.dim);
    r.axiom("left unital").expect(&[], m.left_matrix(b.unit()) == id, || {
        ("1·m".into(), "m".into())
    });
    r.axiom("right unital").expect(&[], m.right_matrix(c.unit()) == id, || {
        ("m·1".into(), "m".into())
    });
    let ax = r.axiom("left associative");
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            let lhs = m.left_matrix(b.basis_product(i, j));
            let rhs = m.left[i].compose(&m.left[j]);
            ax.expect(&[i, j], lhs == rhs, || ("(b b')·m".into(), "b·(b'·m)".into()));
        }
    }
    let ax = r.axiom("right associative");
    for i in 0..c.dim() {
        for j in 0..c.dim() {
            let lhs = m.right_matrix(c.basis_product(i, j));
            let rhs = m.right[j].compose(&m.right[i]);
            ax.expect(&[i, j], lhs == rhs, || ("m·(c c')".into(), "(m·c)·c'".into()));
        }
    }
    let ax = r.axiom("actions commute");
    for i in 0..b.dim() {
        for j in 0..c.dim() {
            let lhs = m.right[j].compose(&m.left[i]);
            let rhs = m.left[i].compose(&m.right[j]);
            ax.expect(&[i, j], lhs == rhs, || ("(b·m)·c".into(), "b·(m·c)".into()));
        }
    }
    r
}

/// Mixed-radix indexing for plain tensor products, first factor most
/// significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radix {
    dims: Vec<usize>,
    strides: Vec<usize>,
    total: usize,
}

impl Radix {
    pub fn new(dims: &[usize]) -> Self {
        let mut strides = vec![1; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        Radix {
            dims: dims.to_vec(),
            strides,
            total: dims.iter().product(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.strides).map(|(d, s)| d * s).sum()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (k, s) in self.strides.iter().enumerate() {
            out[k] = idx / s;
            idx %= s;
        }
        out
    }
}

/// Tensor product of vectors, one per factor.
pub fn kron_all(vs: &[&SparseVec], dims: &[usize]) -> SparseVec {
    let mut out = SparseVec::unit(0);
    for (v, d) in vs.iter().zip(dims) {
        out = out.kron(v, *d);
    }
    out
}

/// `f_1 ⊗ … ⊗ f_k` applied to a vector in the plain tensor product.
pub fn apply_kron(fs: &[&SparseMatrix], v: &SparseVec) -> SparseVec {
    let src = Radix::new(&fs.iter().map(|f| f.ncols()).collect::<Vec<_>>());
    let dst_dims: Vec<usize> = fs.iter().map(|f| f.nrows()).collect();
    let mut acc = Accumulator::new();
    for (idx, a) in v.iter() {
        let digits = src.decode(idx);
        let cols: Vec<&SparseVec> = digits.iter().zip(fs).map(|(&d, f)| f.col(d)).collect();
        acc.add_scaled(a, &kron_all(&cols, &dst_dims));
    }
    acc.finish()
}

/// Balancing data between two adjacent tensor factors.
#[derive(Clone, Debug)]
pub struct Junction {
    pub right: Vec<SparseMatrix>,
    pub left: Vec<SparseMatrix>,
}

impl Junction {
    pub fn is_trivial(&self) -> bool {
        self.right.len() == 1 && self.right[0].is_identity() && self.left[0].is_identity()
    }
}

/// `f` applied to tensor factor `p` of the basis tensor `idx`.
pub fn apply_on_factor(radix: &Radix, idx: usize, p: usize, f: &SparseMatrix) -> SparseVec {
    let mut digits = radix.decode(idx);
    let col = f.col(digits[p]);
    SparseVec::from_pairs(col.iter().map(|(i, a)| {
        digits[p] = i;
        (radix.encode(&digits), a.clone())
    }))
}

/// A chain `M_0 ⊗_B M_1 ⊗_B … ⊗_B M_k` over a single base algebra B,
/// realized as a quotient of the plain tensor product.
#[derive(Clone, Debug)]
pub struct TensorChain {
    pub radix: Radix,
    pub quotient: QuotientSpace,
}

impl TensorChain {
    pub fn new(factors: &[&Bimodule], base: &FiniteAlgebra) -> Result<Self> {
        let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
        for (p, f) in factors.iter().enumerate() {
            if p + 1 < factors.len() && f.right_algebra.dim() != base.dim() {
                return Err(Error::DimensionMismatch {
                    context: format!("right base action of tensor factor {p}"),
                    expected: base.dim(),
                    found: f.right_algebra.dim(),
                });
            }
            if p > 0 && f.left_algebra.dim() != base.dim() {
                return Err(Error::DimensionMismatch {
                    context: format!("left base action of tensor factor {p}"),
                    expected: base.dim(),
                    found: f.left_algebra.dim(),
                });
            }
        }
        let junctions: Vec<Junction> = factors
            .windows(2)
            .map(|w| Junction {
                right: w[0].right.clone(),
                left: w[1].left.clone(),
            })
            .collect();
        Ok(TensorChain::with_junctions(&dims, &junctions))
    }

    /// General chain: junction `p` balances the right action on factor `p`
    /// against the left action on factor `p + 1`, one matrix pair per base
    /// basis element. Junctions whose base is ℚ acting by identities add no
    /// relations.
    pub fn with_junctions(dims: &[usize], junctions: &[Junction]) -> Self {
        assert_eq!(junctions.len() + 1, dims.len().max(1));
        let radix = Radix::new(dims);
        let mut rels = Vec::new();
        for (p, j) in junctions.iter().enumerate() {
            if j.is_trivial() {
                continue;
            }
            for (r, l) in j.right.iter().zip(&j.left) {
                for idx in 0..radix.total() {
                    let rel = apply_on_factor(&radix, idx, p, r).sub(&apply_on_factor(&radix, idx, p + 1, l));
                    if !rel.is_zero() {
                        rels.push(rel);
                    }
                }
            }
        }
        let killed = Subspace::span_owned(radix.total(), rels);
        TensorChain {
            radix,
            quotient: QuotientSpace::new(killed),
        }
    }

    /// The plain tensor product, no relations.
    pub fn plain(dims: &[usize]) -> Self {
        let radix = Radix::new(dims);
        let total = radix.total();
        TensorChain {
            radix,
            quotient: QuotientSpace::identity(total),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.radix.total()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.quotient.project(v)
    }

    pub fn lift(&self, c: &SparseVec) -> SparseVec {
        self.quotient.section(c)
    }

    /// Class of an elementary tensor.
    pub fn pure(&self, vs: &[&SparseVec]) -> SparseVec {
        self.project(&kron_all(vs, self.radix.dims()))
    }
}

/// The two-factor case `m ⊗_B n`, with the outer actions that survive.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub chain: TensorChain,
    pub left_dim: usize,
    pub right_dim: usize,
}

pub fn balanced_tensor(m: &Bimodule, n: &Bimodule, base: &FiniteAlgebra) -> Result<BalancedTensor> {
    Ok(BalancedTensor {
        chain: TensorChain::new(&[m, n], base)?,
        left_dim: m.dim,
        right_dim: n.dim,
    })
}

impl BalancedTensor {
    pub fn dim(&self) -> usize {
        self.chain.dim()
    }

    /// Outer bimodule structure: `m`'s left algebra and `n`'s right algebra.
    pub fn outer_bimodule(&self, m: &Bimodule, n: &Bimodule) -> Result<Bimodule> {
        let q = &self.chain.quotient;
        let idn = SparseMatrix::identity(n.dim);
        let idm = SparseMatrix::identity(m.dim);
        let left = m
            .left
            .iter()
            .map(|l| QuotientSpace::induced_map(&l.kron(&idn), q, q))
            .collect::<Result<Vec<_>>>()?;
        let right = n
            .right
            .iter()
            .map(|r| QuotientSpace::induced_map(&idm.kron(r), q, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Bimodule {
            left_algebra: m.left_algebra.clone(),
            right_algebra: n.right_algebra.clone(),
            dim: self.dim(),
            left,
            right,
        })
    }
}

/// The map induced on quotient coordinates by `f_1 ⊗ … ⊗ f_k`.
pub fn lift_maps_to_chain(fs: &[&SparseMatrix], src: &TensorChain, dst: &TensorChain) -> Result<SparseMatrix> {
    let mut full = fs[0].clone();
    for f in &fs[1..] {
        full = full.kron(f);
    }
    QuotientSpace::induced_map(&full, &src.quotient, &dst.quotient)
}

pub fn lift_map_to_tensor(f: &SparseMatrix, g: &SparseMatrix, src: &BalancedTensor, dst: &BalancedTensor) -> Result<SparseMatrix> {
    lift_maps_to_chain(&[f, g], &src.chain, &dst.chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_pass() {
        for a in [
            FiniteAlgebra::ground(),
            FiniteAlgebra::product(3),
            FiniteAlgebra::group_algebra(3),
            FiniteAlgebra::truncated_polynomial(3),
            FiniteAlgebra::matrix_algebra(2),
        ] {
            assert!(check_algebra(&a).passed());
            assert!(check_algebra(&a.opposite()).passed());
            assert_eq!(a.opposite().opposite(), a);
        }
    }

    #[test]
    fn perturbed_constant_fails_associativity() {
        let (u, mut m) = FiniteAlgebra::group_algebra(2).to_dense();
        m[0][0][0] = &m[0][0][0] + &Scalar::one();
        let r = check_algebra(&FiniteAlgebra::from_dense(&u, &m).unwrap());
        assert!(!r.passed());
        assert!(!r.axioms[0].witnesses.is_empty());
    }

    #[test]
    fn opposite_of_matrix_algebra_flips_products() {
        let a = FiniteAlgebra::matrix_algebra(2);
        let op = a.opposite();
        // E_01 E_10 = E_00 in A, so E_10 *op E_01 = E_00.
        assert_eq!(op.basis_product(2, 1), &SparseVec::unit(0));
        assert!(op.basis_product(1, 2) == &SparseVec::unit(3));
    }

    #[test]
    fn unit_map_and_broken_map() {
        let q = FiniteAlgebra::ground();
        let g = FiniteAlgebra::group_algebra(2);
        let eta = SparseMatrix::from_columns(2, vec![SparseVec::unit(0)]);
        assert!(check_algebra_map(&AlgebraMap::new(q.clone(), g.clone(), eta)).passed());
        let zero = SparseMatrix::zero(2, 1);
        let r = check_algebra_map(&AlgebraMap::new(q, g, zero));
        assert!(r.has_failure("unit"));
    }

    #[test]
    fn balanced_tensor_dims() {
        let l = FiniteAlgebra::product(2);
        let reg = Bimodule::regular(&l);
        assert_eq!(balanced_tensor(&reg, &reg, &l).unwrap().dim(), 2);
        let p = Bimodule::plain(3);
        assert_eq!(balanced_tensor(&p, &p, &FiniteAlgebra::ground()).unwrap().dim(), 9);
        let z = Bimodule::zero(&l, &l);
        assert_eq!(balanced_tensor(&z, &reg, &l).unwrap().dim(), 0);
    }

    #[test]
    fn unbalanced_map_is_rejected() {
        let l = FiniteAlgebra::product(2);
        let reg = Bimodule::regular(&l);
        let t = balanced_tensor(&reg, &reg, &l).unwrap();
        let id = SparseMatrix::identity(2);
        assert!(lift_map_to_tensor(&id, &id, &t, &t).unwrap().is_identity());
        let swap = SparseMatrix::from_columns(2, vec![SparseVec::unit(1), SparseVec::unit(0)]);
        assert!(matches!(
            lift_map_to_tensor(&swap, &id, &t, &t),
            Err(Error::WellDefinedness(_))
        ));
    }

    #[test]
    fn associativity_of_chains() {
        let l = FiniteAlgebra::product(2);
        let reg = Bimodule::regular(&l);
        let three = TensorChain::new(&[&reg, &reg, &reg], &l).unwrap();
        let two = balanced_tensor(&reg, &reg, &l).unwrap();
        let outer = two.outer_bimodule(&reg, &reg).unwrap();
        let bracketed = TensorChain::new(&[&outer, &reg], &l).unwrap();
        assert_eq!(three.dim(), bracketed.dim());
        assert!(check_bimodule(&outer).passed());
    }

    #[test]
    fn radix_roundtrip() {
        let r = Radix::new(&[2, 3, 4]);
        for i in 0..24 {
            assert_eq!(r.encode(&r.decode(i)), i);
        }
        assert_eq!(r.decode(5), vec![0, 1, 1]);
    }
}
