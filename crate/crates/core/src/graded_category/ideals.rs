//! The graded ideals `K_{r,s}`, `K_r`, `R_s` and `R` of the graded center.

use super::GradedCategory;
use crate::error::Result;
use crate::exactla::{Matrix, Subspace};
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// Which products must vanish in the annihilator condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `a·v = 0`
    Left,
    /// `v·a = 0`
    Right,
    Both,
}

/// One degree of a graded ideal, as a subspace of `⊕_x Hom_n(x, x)`.
/// `range` lists the `s` (or `r`) values the intersection actually ran over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealComponent {
    pub degree: i32,
    pub space: Subspace,
    pub range: Vec<i32>,
}

/// Per-degree components; `None` marks a degree the window cannot certify.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedIdeal {
    pub components: BTreeMap<i32, Option<IdealComponent>>,
}

impl GradedIdeal {
    pub fn get(&self, n: i32) -> Option<&IdealComponent> {
        self.components.get(&n).and_then(Option::as_ref)
    }

    pub fn certified_degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.components.iter().filter(|(_, c)| c.is_some()).map(|(&n, _)| n)
    }

    /// Degreewise containment on the degrees certified in both.
    pub fn is_subideal_of(&self, other: &GradedIdeal) -> bool {
        self.components.iter().all(|(n, c)| match (c, other.get(*n)) {
            (Some(a), Some(b)) => a.space.is_subspace_of(&b.space).unwrap_or(false),
            _ => true,
        })
    }
}

fn collect(degrees: RangeInclusive<i32>, f: impl Fn(i32) -> Result<IdealComponent>) -> GradedIdeal {
    GradedIdeal { components: degrees.map(|n| (n, f(n).ok())).collect() }
}

impl GradedCategory {
    /// `{a ∈ Z_n : a·v = v·a = 0 in Ab_s for v ∈ T_r(s - n)}` (or one side only).
    pub fn k_rs_component(&self, r: usize, s: i32, n: i32, side: Side) -> Result<Subspace> {
        let z = self.center_component(n)?;
        let m = s - n;
        let t = self.t_r(r, m)?;
        let source = self.ab_component(m)?;
        let target = self.ab_component(s)?;
        let zbasis: Vec<Vec<u32>> = z.space.vectors().collect();
        let mut eqs = Matrix::zeros(self.fp, 0, zbasis.len());
        for tv in t.vectors() {
            let v = source.quotient.lift(&tv);
            let mut sides = Vec::new();
            if side != Side::Right {
                sides.push(true);
            }
            if side != Side::Left {
                sides.push(false);
            }
            for left in sides {
                let cols = zbasis
                    .iter()
                    .map(|a| {
                        let prod = if left { self.multiply_families(n, a, m, &v)? } else { self.multiply_families(m, &v, n, a)? };
                        target.quotient.project(&prod)
                    })
                    .collect::<Result<Vec<_>>>()?;
                eqs = eqs.vstack(&Matrix::from_columns(self.fp, target.dim(), &cols));
            }
        }
        let zmat = Matrix::from_columns(self.fp, z.space.ambient_dim(), &zbasis);
        eqs.kernel().map(&zmat)
    }

    pub fn k_rs(&self, r: usize, s: i32, degrees: RangeInclusive<i32>) -> GradedIdeal {
        collect(degrees, |n| {
            let space = self.k_rs_component(r, s, n, Side::Both)?;
            Ok(IdealComponent { degree: n, space, range: vec![s] })
        })
    }

    /// `K_r` in degree `n`: the intersection of `K_{r,s}` over every certifiable `s`.
    pub fn k_r_component(&self, r: usize, n: i32) -> Result<IdealComponent> {
        let mut space = self.center_component(n)?.space;
        let mut range = Vec::new();
        for s in n - self.window..=n + self.window {
            if let Ok(k) = self.k_rs_component(r, s, n, Side::Both) {
                space = space.intersect(&k)?;
                range.push(s);
            }
        }
        Ok(IdealComponent { degree: n, space, range })
    }

    pub fn k_r(&self, r: usize, degrees: RangeInclusive<i32>) -> GradedIdeal {
        collect(degrees, |n| self.k_r_component(r, n))
    }

    /// The `r` values after which `T_r` in degree `m` can no longer grow, as far as the window sees.
    fn t_range(&self, m: i32) -> Result<Vec<usize>> {
        let full = self.ab_component(m)?.dim();
        let mut prev = self.t_r(0, m)?;
        let mut out = vec![0];
        for r in 1..=64 {
            if prev.dim() == full {
                break;
            }
            let Ok(t) = self.t_r(r, m) else { break };
            out.push(r);
            // in degree 0 ξ is an endomorphism, so one repeat means the chain is stable
            let stalled = m == 0 && t == prev;
            prev = t;
            if stalled {
                break;
            }
        }
        Ok(out)
    }

    /// `R_s` in degree `n`: the intersection of `K_{r,s}` over `r`.
    pub fn r_s_component(&self, s: i32, n: i32) -> Result<IdealComponent> {
        let mut space = self.center_component(n)?.space;
        let range = self.t_range(s - n)?;
        for &r in &range {
            space = space.intersect(&self.k_rs_component(r, s, n, Side::Both)?)?;
        }
        Ok(IdealComponent { degree: n, space, range: range.into_iter().map(|r| r as i32).collect() })
    }

    pub fn r_s(&self, s: i32, degrees: RangeInclusive<i32>) -> GradedIdeal {
        collect(degrees, |n| self.r_s_component(s, n))
    }

    /// `R` in degree `n`: the intersection of `R_s` over every certifiable `s`.
    pub fn reynolds_component(&self, n: i32) -> Result<IdealComponent> {
        let mut space = self.center_component(n)?.space;
        let mut range = Vec::new();
        for s in n - self.window..=n + self.window {
            if let Ok(rs) = self.r_s_component(s, n) {
                space = space.intersect(&rs.space)?;
                range.push(s);
            }
        }
        Ok(IdealComponent { degree: n, space, range })
    }

    pub fn reynolds_graded(&self, degrees: RangeInclusive<i32>) -> GradedIdeal {
        collect(degrees, |n| self.reynolds_component(n))
    }
}
