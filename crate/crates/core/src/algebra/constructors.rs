use super::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Subspace};
use std::collections::HashMap;

/// An arrow of a quiver, between vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(name: impl Into<String>, source: usize, target: usize) -> Self {
        Arrow { name: name.into(), source, target }
    }
}

/// Largest basis a monomial quiver algebra may have before we give up.
const MAX_PATHS: usize = 20_000;

fn contains_relation(path: &[usize], relations: &[Vec<usize>]) -> bool {
    // only suffixes need checking: every proper prefix was already nonzero
    relations.iter().any(|r| path.len() >= r.len() && path[path.len() - r.len()..] == r[..])
}

impl FinDimAlgebra {
    /// Path algebra of a quiver modulo zero relations (arrow-index paths).
    ///
    /// Paths compose left to right: `ab` is `a` followed by `b`. The basis is
    /// the trivial paths followed by the nonzero paths ordered by length and
    /// then lexicographically. The span of paths of positive length is
    /// recorded as the radical.
    pub fn monomial_quiver_algebra(fp: Fp, vertices: usize, arrows: &[Arrow], relations: &[Vec<usize>]) -> Result<Self> {
        for a in arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(Error::Malformed(format!("arrow {} has an endpoint outside the quiver", a.name)));
            }
        }
        for r in relations {
            if r.is_empty() {
                return Err(Error::Malformed("empty relation".into()));
            }
            if r.iter().any(|&i| i >= arrows.len()) {
                return Err(Error::Malformed("relation uses an unknown arrow".into()));
            }
            if r.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
                return Err(Error::Malformed("relation is not a path".into()));
            }
        }
        // A nonzero path longer than the number of automaton states (end
        // vertex plus last k-1 arrows) can be pumped, so the algebra is
        // infinite-dimensional.
        let k = relations.iter().map(Vec::len).max().unwrap_or(1);
        let states = (arrows.len().max(1) as u128)
            .checked_pow(k as u32 - 1)
            .and_then(|s| s.checked_mul(vertices.max(1) as u128))
            .unwrap_or(u128::MAX);
        let bound = states.saturating_add(k as u128);

        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
        frontier.retain(|p| !contains_relation(p, relations));
        let mut len = 1u128;
        while !frontier.is_empty() {
            if len >= bound {
                return Err(Error::InfinitePaths);
            }
            paths.extend(frontier.iter().cloned());
            if paths.len() + vertices > MAX_PATHS {
                return Err(Error::Malformed(format!("more than {MAX_PATHS} nonzero paths")));
            }
            let mut next = Vec::new();
            for p in &frontier {
                let end = arrows[*p.last().unwrap()].target;
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source == end {
                        let mut q = p.clone();
                        q.push(ai);
                        if !contains_relation(&q, relations) {
                            next.push(q);
                        }
                    }
                }
            }
            frontier = next;
            len += 1;
        }

        let dim = vertices + paths.len();
        let index: HashMap<&[usize], usize> = paths.iter().enumerate().map(|(i, p)| (p.as_slice(), vertices + i)).collect();
        let src = |i: usize| if i < vertices { i } else { arrows[paths[i - vertices][0]].source };
        let tgt = |i: usize| if i < vertices { i } else { arrows[*paths[i - vertices].last().unwrap()].target };

        let mut table = vec![0u32; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if tgt(i) != src(j) {
                    continue;
                }
                let prod = match (i < vertices, j < vertices) {
                    (true, _) => Some(j),
                    (false, true) => Some(i),
                    (false, false) => {
                        let mut q = paths[i - vertices].clone();
                        q.extend_from_slice(&paths[j - vertices]);
                        index.get(q.as_slice()).copied()
                    }
                };
                if let Some(k) = prod {
                    table[(i * dim + j) * dim + k] = 1;
                }
            }
        }
        let mut labels: Vec<String> = if vertices == 1 { vec!["1".into()] } else { (0..vertices).map(|v| format!("e{v}")).collect() };
        labels.extend(paths.iter().map(|p| p.iter().map(|&a| arrows[a].name.as_str()).collect::<String>()));
        let mut unit = vec![0u32; dim];
        unit[..vertices].iter_mut().for_each(|u| *u = 1);

        let alg = FinDimAlgebra::new(fp, labels, table, unit)?;
        let rad = Subspace::span(fp, dim, (vertices..dim).map(|i| alg.basis_vec(i)))?;
        alg.with_radical(rad)
    }

    /// Group algebra of a finite group given by its Cayley table, with the
    /// symmetrizing form `(g, h) = [gh = 1]` attached.
    ///
    /// The radical is recorded when it is known for free: the augmentation
    /// ideal for p-groups and zero when p does not divide the group order.
    pub fn group_algebra(fp: Fp, cayley: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if cayley.iter().any(|row| row.len() != n || row.iter().any(|&g| g >= n)) {
            return Err(Error::NotAGroup("table is not an n x n table over 0..n".into()));
        }
        let m = |a: usize, b: usize| cayley[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let e =
            (0..n).find(|&e| (0..n).all(|g| m(e, g) == g && m(g, e) == g)).ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        if let Some(g) = (0..n).find(|&g| !(0..n).any(|h| m(g, h) == e && m(h, g) == e)) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|g| if g == e { "1".into() } else { format!("g{g}") }).collect());
        if labels.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: labels.len() });
        }
        let mut table = vec![0u32; n * n * n];
        for a in 0..n {
            for b in 0..n {
                table[(a * n + b) * n + m(a, b)] = 1;
            }
        }
        let mut unit = vec![0u32; n];
        unit[e] = 1;
        let alg = FinDimAlgebra::new(fp, labels, table, unit)?;
        let gram = Matrix::from_fn(fp, n, n, |g, h| u32::from(m(g, h) == e));
        let alg = alg.with_form(gram)?;

        let p = fp.p() as usize;
        let mut order = n;
        while order.is_multiple_of(p) {
            order /= p;
        }
        if order == 1 {
            let aug = (0..n).filter(|&g| g != e).map(|g| {
                let mut v = vec![0u32; n];
                v[g] = 1;
                v[e] = fp.neg(1);
                v
            });
            let rad = Subspace::span(fp, n, aug)?;
            alg.with_radical(rad)
        } else if order == n {
            alg.with_radical(Subspace::zero(fp, n))
        } else {
            Ok(alg)
        }
    }

    /// The full matrix algebra `M_n(self)`.
    ///
    /// Basis `E_ab ⊗ e_i` sits at index `(a*n + b)*dim + i`. A form on the
    /// base becomes `(X, Y) = Σ (X_ab, Y_ba)`, and a known radical `J`
    /// becomes `M_n(J)`.
    pub fn matrix_algebra(&self, n: usize) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        let d = self.dim;
        let dim = n * n * d;
        let idx = |a: usize, b: usize, i: usize| (a * n + b) * d + i;
        let fp = self.fp;
        let mut table = vec![0u32; dim * dim * dim];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for i in 0..d {
                        for j in 0..d {
                            let row = (idx(a, b, i) * dim + idx(b, c, j)) * dim;
                            for (k, &v) in self.structure(i, j).iter().enumerate() {
                                table[row + idx(a, c, k)] = v;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u32; dim];
        for a in 0..n {
            for i in 0..d {
                unit[idx(a, a, i)] = self.unit[i];
            }
        }
        let labels = if n == 1 {
            self.labels.clone()
        } else {
            let mut l = Vec::with_capacity(dim);
            for a in 0..n {
                for b in 0..n {
                    for i in 0..d {
                        l.push(format!("E{}{}*{}", a + 1, b + 1, self.labels[i]));
                    }
                }
            }
            l
        };
        let form = self.form.as_ref().map(|g| {
            Matrix::from_fn(fp, dim, dim, |x, y| {
                let (ab, i) = (x / d, x % d);
                let (cd, j) = (y / d, y % d);
                let (a, b) = (ab / n, ab % n);
                let (c, dd) = (cd / n, cd % n);
                if b == c && a == dd {
                    g.get(i, j)
                } else {
                    0
                }
            })
        });
        let radical = self.radical().ok().map(|j| {
            let vecs = j.vectors().collect::<Vec<_>>();
            let mut out = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for v in &vecs {
                        let mut w = vec![0u32; dim];
                        w[idx(a, b, 0)..idx(a, b, 0) + d].copy_from_slice(v);
                        out.push(w);
                    }
                }
            }
            Subspace::span(fp, dim, out).expect("block vectors have the right length")
        });
        FinDimAlgebra { fp, dim, labels, table, unit, form, radical }
    }
}
