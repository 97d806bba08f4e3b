//! Calabi-Yau traces, the pairing between center and abelianization, and `ζ_r`.

use super::GradedCategory;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use std::fmt;

/// A dimension `d` and, for every object `x`, a functional on `Hom_d(x, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceData {
    pub d: i32,
    pub functionals: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyViolation {
    Shape {
        object: usize,
    },
    Window {
        degree: i32,
    },
    /// The pairing `Hom_m(x, y) × Hom_{d-m}(y, x) → k` is degenerate.
    Degenerate {
        source: usize,
        target: usize,
        degree: i32,
    },
    /// `tr_x(f∘g) ≠ (-1)^{m(d-m)} tr_y(g∘f)` for basis `g ∈ Hom_m(x, y)`, `f ∈ Hom_{d-m}(y, x)`.
    Symmetry {
        source: usize,
        target: usize,
        degree: i32,
        f: usize,
        g: usize,
    },
}

impl fmt::Display for CyViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyViolation::Shape { object } => write!(out, "trace on object {object} has the wrong length"),
            CyViolation::Window { degree } => write!(out, "degree {degree} lies outside the window"),
            CyViolation::Degenerate { source, target, degree } => {
                write!(out, "pairing on Hom_{degree}({source},{target}) is degenerate")
            }
            CyViolation::Symmetry { source, target, degree, f, g } => {
                write!(out, "trace symmetry fails for g = basis {g} of Hom_{degree}({source},{target}) and f = basis {f} of the dual Hom")
            }
        }
    }
}

/// `ζ_r` on the degree-`source` center component. `target` is `None` when
/// `p^r` does not divide `d - source`, in which case the map is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaMap {
    pub source: i32,
    pub target: Option<i32>,
    /// Images of the center basis vectors, as families in degree `target`.
    pub images: Vec<Vec<u32>>,
}

impl GradedCategory {
    fn trace_of(&self, trace: &TraceData, x: usize, v: &[u32]) -> u32 {
        self.fp.dot(&trace.functionals[x], v)
    }

    /// Checks nondegeneracy of every in-window pairing and the graded trace
    /// symmetry, the latter only in degree 0 when `weak`.
    pub fn cy_check(&self, trace: &TraceData, weak: bool) -> std::result::Result<(), CyViolation> {
        let d = trace.d;
        let n = self.n_objects();
        let window = |degree| CyViolation::Window { degree };
        for x in 0..n {
            let dim = self.hom_dim(x, x, d).map_err(|_| window(d))?;
            if trace.functionals.get(x).map(Vec::len) != Some(dim) {
                return Err(CyViolation::Shape { object: x });
            }
        }
        for m in -self.window..=self.window {
            if (d - m).abs() > self.window {
                continue;
            }
            let sign = self.fp.sign(super::koszul(m, d - m));
            for x in 0..n {
                for y in 0..n {
                    let dg = self.hom_dim(x, y, m).map_err(|_| window(m))?;
                    let df = self.hom_dim(y, x, d - m).map_err(|_| window(d - m))?;
                    let mut gram = Matrix::zeros(self.fp, dg, df);
                    for g in 0..dg {
                        let eg = self.basis(x, y, m, g);
                        for f in 0..df {
                            let ef = self.basis(y, x, d - m, f);
                            let fg = self.compose(x, y, x, m, d - m, &ef, &eg).map_err(|_| window(d))?;
                            let gf = self.compose(y, x, y, d - m, m, &eg, &ef).map_err(|_| window(d))?;
                            let left = self.trace_of(trace, x, &fg);
                            gram.set(g, f, left);
                            if (!weak || m == 0) && left != self.fp.mul(sign, self.trace_of(trace, y, &gf)) {
                                return Err(CyViolation::Symmetry { source: x, target: y, degree: m, f, g });
                            }
                        }
                    }
                    if dg != df || gram.rank() != dg {
                        return Err(CyViolation::Degenerate { source: x, target: y, degree: m });
                    }
                }
            }
        }
        Ok(())
    }

    fn require_cy(&self, trace: &TraceData) -> Result<()> {
        self.cy_check(trace, false).map_err(|v| Error::NotCalabiYau(v.to_string()))
    }

    /// `Θ(η, g) = Σ_x tr_x(η_x∘g_x)` for `η` of degree `n` and `g` of degree `d - n`.
    pub fn theta(&self, trace: &TraceData, n: i32, eta: &[u32], g: &[u32]) -> Result<u32> {
        let prod = self.multiply_families(n, eta, trace.d - n, g)?;
        let offsets = self.end_offsets(trace.d)?;
        let fp = self.fp;
        Ok((0..self.n_objects()).fold(0, |acc, x| fp.add(acc, self.trace_of(trace, x, &prod[offsets[x]..offsets[x + 1]]))))
    }

    /// `T_r^⊥` in degree `n`: center elements pairing to zero with `T_r(d - n)`.
    pub fn k_r_via_perp(&self, trace: &TraceData, r: usize, n: i32) -> Result<Subspace> {
        self.require_cy(trace)?;
        let z = self.center_component(n)?;
        let m = trace.d - n;
        let ab = self.ab_component(m)?;
        let zbasis: Vec<Vec<u32>> = z.space.vectors().collect();
        let rows = self
            .t_r(r, m)?
            .vectors()
            .map(|t| {
                let v = ab.quotient.lift(&t);
                zbasis.iter().map(|a| self.theta(trace, n, a, &v)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let eqs = Matrix::from_rows(self.fp, zbasis.len(), &rows)?;
        let zmat = Matrix::from_columns(self.fp, z.space.ambient_dim(), &zbasis);
        eqs.kernel().map(&zmat)
    }

    /// `ζ_r = Θ⁻¹ ∘ (ξ_p^r)^* ∘ Θ` on the degree-`m` center component.
    pub fn zeta_r(&self, trace: &TraceData, r: usize, m: i32) -> Result<ZetaMap> {
        self.require_cy(trace)?;
        let z = self.center_component(m)?;
        let d = trace.d;
        let pr = (self.fp.p() as i64).pow(r as u32);
        if (d - m) as i64 % pr != 0 {
            let zeros = vec![Vec::new(); z.dim()];
            return Ok(ZetaMap { source: m, target: None, images: zeros });
        }
        let target = d - ((d - m) as i64 / pr) as i32;
        let zt: Vec<Vec<u32>> = self.center_component(target)?.space.vectors().collect();
        let ab = self.ab_component(d - target)?;
        let ab_src = self.ab_component(d - m)?;
        let rows = zt
            .iter()
            .map(|z| (0..ab.dim()).map(|k| self.theta(trace, target, z, &ab.quotient.rep(k))).collect())
            .collect::<Result<Vec<Vec<u32>>>>()?;
        let gram = Matrix::from_rows(self.fp, ab.dim(), &rows)?;
        let gram_t = gram.transpose();
        let target_dim = *self.end_offsets(target)?.last().expect("nonempty");
        if gram.rows() != gram.cols() || gram.rank() != gram.rows() {
            return Err(Error::NotCalabiYau(format!("Θ is degenerate in degree {target}")));
        }
        let xi = self.xi_power(d - target, r)?;
        let images = z
            .space
            .vectors()
            .map(|f| {
                let rhs =
                    (0..ab.dim()).map(|k| self.theta(trace, m, &f, &ab_src.quotient.lift(&xi.column(k)))).collect::<Result<Vec<_>>>()?;
                let c = gram_t.solve(&rhs).ok_or_else(|| Error::SolveFailed("Θ is not invertible".into()))?;
                let mut out = vec![0u32; target_dim];
                for (ci, zi) in c.iter().zip(&zt) {
                    self.fp.axpy(&mut out, *ci, zi);
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZetaMap { source: m, target: Some(target), images })
    }

    /// `Im ζ_r` in degree `n`.
    pub fn zeta_image(&self, trace: &TraceData, r: usize, n: i32) -> Result<Subspace> {
        let pr = (self.fp.p() as i64).pow(r as u32);
        let m = i32::try_from(trace.d as i64 - (trace.d - n) as i64 * pr).map_err(|_| Error::WindowTooSmall { degree: n })?;
        let map = self.zeta_r(trace, r, m)?;
        Subspace::span(self.fp, *self.end_offsets(n)?.last().expect("nonempty"), map.images)
    }
}
