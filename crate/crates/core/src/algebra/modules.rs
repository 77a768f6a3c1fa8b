use super::{BoundQuiverAlgebra, ModuleMap, Representation};
use crate::exactla::{Field, Matrix};

/// Direct sum of indecomposable projectives `P_{v_1} ⊕ ... ⊕ P_{v_r}`.
///
/// `P_v(w)` has the basis paths `v -> w`; in a sum the coordinates of
/// `P(w)` are the summands' blocks in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSum {
    pub tops: Vec<usize>,
}

impl ProjectiveSum {
    pub fn offset<F: Field>(&self, a: &BoundQuiverAlgebra<F>, w: usize, summand: usize) -> usize {
        self.tops[..summand].iter().map(|&v| a.block_dim(v, w)).sum()
    }

    pub fn dim_at<F: Field>(&self, a: &BoundQuiverAlgebra<F>, w: usize) -> usize {
        self.tops.iter().map(|&v| a.block_dim(v, w)).sum()
    }
}

/// Morphism `P -> M` out of a projective sum given by the images of its top
/// generators, `images[k] ∈ M(tops[k])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap<F: Field> {
    pub source: ProjectiveSum,
    pub images: Vec<Vec<F>>,
}

impl<F: Field> BoundQuiverAlgebra<F> {
    pub fn simple(&self, v: usize) -> Representation<F> {
        let n = self.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| usize::from(w == v)).collect();
        let maps = self.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Representation { dims, maps }
    }

    pub fn projective(&self, v: usize) -> Representation<F> {
        self.projective_sum(&ProjectiveSum { tops: vec![v] })
    }

    pub fn projective_sum(&self, p: &ProjectiveSum) -> Representation<F> {
        let q = self.quiver();
        let dims: Vec<usize> = (0..self.vertex_count()).map(|w| p.dim_at(self, w)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (k, &v) in p.tops.iter().enumerate() {
                    let (rs, ct) = (p.offset(self, a.source, k), p.offset(self, a.target, k));
                    for b in 0..self.block_dim(v, a.source) {
                        let mut path = self.basis_path(v, a.source, b).to_vec();
                        path.push(ai);
                        for (r, x) in self.normal_form(v, a.target, &path).into_iter().enumerate() {
                            m[(ct + r, rs + b)] = x;
                        }
                    }
                }
                m
            })
            .collect();
        Representation { dims, maps }
    }

    /// Module map `P -> M` determined by generator images: the basis path `b`
    /// of summand `k` goes to `M(b) images[k]`.
    pub fn generator_map(&self, target: &Representation<F>, g: &GeneratorMap<F>) -> ModuleMap<F> {
        let n = self.vertex_count();
        let components = (0..n)
            .map(|w| {
                let mut m = Matrix::zeros(target.dims[w], g.source.dim_at(self, w));
                for (k, &v) in g.source.tops.iter().enumerate() {
                    let off = g.source.offset(self, w, k);
                    for b in 0..self.block_dim(v, w) {
                        let col = target.path_map(v, self.basis_path(v, w, b)).mul_vec(&g.images[k]);
                        for (r, x) in col.into_iter().enumerate() {
                            m[(r, off + b)] = x;
                        }
                    }
                }
                m
            })
            .collect();
        ModuleMap { components }
    }

    /// `rad M(v) = Σ im M(a)` over arrows ending at `v`, as spanning columns.
    pub fn radical_span(&self, m: &Representation<F>, v: usize) -> Matrix<F> {
        let mut span = Matrix::zeros(m.dims[v], 0);
        for a in self.quiver().in_arrows(v) {
            span = span.hstack(&m.maps[a]);
        }
        span
    }

    /// Projective cover `P -> M`: generators are unit vectors completing the
    /// radical at each vertex.
    pub fn projective_cover(&self, m: &Representation<F>) -> GeneratorMap<F> {
        let mut tops = Vec::new();
        let mut images = Vec::new();
        for v in 0..self.vertex_count() {
            for i in self.radical_span(m, v).complement_units() {
                let mut e = vec![F::zero(); m.dims[v]];
                e[i] = F::one();
                tops.push(v);
                images.push(e);
            }
        }
        GeneratorMap { source: ProjectiveSum { tops }, images }
    }

    /// Dimension vector of the top `M / rad M`.
    pub fn top_dims(&self, m: &Representation<F>) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| m.dims[v] - self.radical_span(m, v).rank()).collect()
    }

    /// Basis of `Hom(M, N)`.
    pub fn hom_basis(&self, m: &Representation<F>, n: &Representation<F>) -> Vec<ModuleMap<F>> {
        let q = self.quiver();
        let nv = self.vertex_count();
        let offsets: Vec<usize> = (0..nv)
            .scan(0, |acc, v| {
                let o = *acc;
                *acc += n.dims[v] * m.dims[v];
                Some(o)
            })
            .collect();
        let unknowns: usize = (0..nv).map(|v| n.dims[v] * m.dims[v]).sum();
        let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            // (N(a) f_s - f_t M(a))[r][c] = 0
            for r in 0..n.dims[t] {
                for c in 0..m.dims[s] {
                    let mut row = vec![F::zero(); unknowns];
                    for k in 0..n.dims[s] {
                        let x = n.maps[ai][(r, k)].clone();
                        if !x.is_zero() {
                            row[var(s, k, c)] = row[var(s, k, c)].clone() + &x;
                        }
                    }
                    for k in 0..m.dims[t] {
                        let x = m.maps[ai][(k, c)].clone();
                        if !x.is_zero() {
                            row[var(t, r, k)] = row[var(t, r, k)].clone() - &x;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() { Matrix::identity(unknowns) } else { Matrix::from_rows(rows).kernel() };
        (0..kernel.cols())
            .map(|j| {
                let col = kernel.column(j);
                let components = (0..nv)
                    .map(|v| {
                        let data = col[offsets[v]..offsets[v] + n.dims[v] * m.dims[v]].to_vec();
                        Matrix::from_vec(n.dims[v], m.dims[v], data)
                    })
                    .collect();
                ModuleMap { components }
            })
            .collect()
    }

    pub fn hom_dim(&self, m: &Representation<F>, n: &Representation<F>) -> usize {
        self.hom_basis(m, n).len()
    }

    /// Submodule spanned at each vertex by the columns of `basis[v]`, which
    /// must be independent and closed under the arrows. Returns the
    /// submodule and its inclusion.
    pub fn submodule(&self, m: &Representation<F>, basis: Vec<Matrix<F>>) -> (Representation<F>, ModuleMap<F>) {
        let q = self.quiver();
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let image = m.maps[ai].mul(&basis[a.source]);
                basis[a.target].solve(&image).expect("subspaces are closed under arrows")
            })
            .collect();
        (Representation { dims, maps }, ModuleMap { components: basis })
    }

    /// Kernel of a module map with its inclusion.
    pub fn kernel(&self, source: &Representation<F>, f: &ModuleMap<F>) -> (Representation<F>, ModuleMap<F>) {
        let basis = f
            .components
            .iter()
            .zip(&source.dims)
            .map(|(c, &d)| if c.rows() == 0 { Matrix::identity(d) } else { c.kernel() })
            .collect();
        self.submodule(source, basis)
    }

    /// Dimension vector `dim Hom(P_v, M) = dim M(v)` check.
    pub fn yoneda_holds(&self, m: &Representation<F>) -> bool {
        (0..self.vertex_count()).all(|v| self.hom_dim(&self.projective(v), m) == m.dims[v])
    }
}
