//! JSON formats for graded categories and for orbit inputs (a finite category
//! with named automorphisms).
//!
//! Basis labels must be unique across the whole category, so a label
//! determines its Hom space. Composition entries map `"(g,f,h)"` to the
//! coefficient of `h` in `g∘f`; missing entries are zero.

use super::{Generator, GradedCategory, TraceData};
use crate::category::{CatAutomorphism, LinearCategory};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A graded category with explicit Homs in the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategorySpec {
    pub p: u64,
    pub objects: Vec<String>,
    pub window: i32,
    #[serde(default)]
    pub bounded: bool,
    /// `"(x,y,n)"` → basis labels of `Hom_n(x, y)`.
    pub homs: BTreeMap<String, Vec<String>>,
    pub compose: BTreeMap<String, i64>,
    /// Object → coordinates of its identity in `Hom_0(x, x)`.
    pub identities: BTreeMap<String, Vec<i64>>,
    /// Generators as label → coefficient maps inside one Hom; all basis
    /// morphisms when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<BTreeMap<String, i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismSpec {
    /// Object → image object.
    pub perm: BTreeMap<String, String>,
    /// `"(x,y)"` → matrix `Hom(x, y) → Hom(σx, σy)`, as rows.
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSpec {
    pub d: i32,
    /// Object → functional on `Hom_d(x, x)`.
    pub functionals: BTreeMap<String, Vec<i64>>,
}

/// A finite category with named automorphisms and an optional trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInput {
    pub p: u64,
    pub objects: Vec<String>,
    /// `"(x,y)"` → basis labels of `Hom(x, y)`.
    pub homs: BTreeMap<String, Vec<String>>,
    pub compose: BTreeMap<String, i64>,
    pub identities: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    pub automorphisms: BTreeMap<String, AutomorphismSpec>,
    #[serde(default)]
    pub trace: Option<TraceSpec>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn tuple(key: &str) -> Result<Vec<String>> {
    let inner = key
        .trim()
        .strip_prefix('(')
        .and_then(|k| k.strip_suffix(')'))
        .ok_or_else(|| bad(format!("key {key:?} is not a parenthesized tuple")))?;
    Ok(inner.split(',').map(|s| s.trim().to_string()).collect())
}

struct Objects(HashMap<String, usize>);

impl Objects {
    fn new(names: &[String]) -> Result<Self> {
        let map: HashMap<String, usize> = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        if map.len() != names.len() {
            return Err(bad("object names repeat"));
        }
        Ok(Objects(map))
    }
    fn get(&self, name: &str) -> Result<usize> {
        self.0.get(name).copied().ok_or_else(|| bad(format!("unknown object {name:?}")))
    }
}

/// Where a label lives: the Hom key and the basis index.
struct Labels<K>(HashMap<String, (K, usize)>);

impl<K: Copy> Labels<K> {
    fn new<'a>(entries: impl Iterator<Item = (K, &'a Vec<String>)>) -> Result<Self> {
        let mut map = HashMap::new();
        for (key, labels) in entries {
            for (i, l) in labels.iter().enumerate() {
                if map.insert(l.clone(), (key, i)).is_some() {
                    return Err(bad(format!("basis label {l:?} is used twice")));
                }
            }
        }
        Ok(Labels(map))
    }
    fn get(&self, l: &str) -> Result<(K, usize)> {
        self.0.get(l).copied().ok_or_else(|| bad(format!("unknown basis label {l:?}")))
    }
}

fn coords(fp: Fp, v: &[i64], len: usize, what: &str) -> Result<Vec<u32>> {
    if v.len() != len {
        return Err(bad(format!("{what} has length {} instead of {len}", v.len())));
    }
    Ok(v.iter().map(|&c| fp.from_i64(c)).collect())
}

impl CategorySpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| bad(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("specs always serialize")
    }

    pub fn build(&self) -> Result<GradedCategory> {
        let fp = Fp::new(self.p)?;
        let objs = Objects::new(&self.objects)?;
        let n = self.objects.len();
        let mut homs: HashMap<(usize, usize, i32), &Vec<String>> = HashMap::new();
        for (key, labels) in &self.homs {
            let t = tuple(key)?;
            if t.len() != 3 {
                return Err(bad(format!("hom key {key:?} needs (x,y,n)")));
            }
            let deg: i32 = t[2].parse().map_err(|_| bad(format!("bad degree in {key:?}")))?;
            if deg.abs() > self.window {
                return Err(bad(format!("hom key {key:?} lies outside the window")));
            }
            homs.insert((objs.get(&t[0])?, objs.get(&t[1])?, deg), labels);
        }
        let labels = Labels::new(homs.iter().map(|(&k, &v)| (k, v)))?;
        let dim = |x: usize, y: usize, d: i32| homs.get(&(x, y, d)).map_or(0, |v| v.len());
        // (x, y, z, deg g, deg f, g, f) -> nonzero (h, coefficient) pairs of the composite
        type Key = (usize, usize, usize, i32, i32, usize, usize);
        let mut by_pair: HashMap<Key, Vec<(usize, u32)>> = HashMap::new();
        for (key, &c) in &self.compose {
            let t = tuple(key)?;
            if t.len() != 3 {
                return Err(bad(format!("composition key {key:?} needs (g,f,h)")));
            }
            let ((y, z, j), g) = labels.get(&t[0])?;
            let ((x, fy, i), f) = labels.get(&t[1])?;
            let ((hx, hz, k), h) = labels.get(&t[2])?;
            if fy != y || hx != x || hz != z || k != i + j {
                return Err(bad(format!("composition entry {key:?} does not match sources, targets and degrees")));
            }
            by_pair.entry((x, y, z, i, j, g, f)).or_default().push((h, fp.from_i64(c)));
        }
        let compose = |x, y, z, i: i32, j: i32, g, f| {
            let mut v = vec![0u32; dim(x, z, i + j)];
            for &(h, c) in by_pair.get(&(x, y, z, i, j, g, f)).into_iter().flatten() {
                v[h] = fp.add(v[h], c);
            }
            v
        };
        let identities = (0..n)
            .map(|x| {
                let name = &self.objects[x];
                let v = self.identities.get(name).ok_or_else(|| bad(format!("object {name:?} has no identity")))?;
                coords(fp, v, dim(x, x, 0), &format!("identity of {name:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        let generators = match &self.generators {
            None => None,
            Some(gens) => Some(
                gens.iter()
                    .map(|combo| {
                        let mut hom = None;
                        let mut coords = Vec::new();
                        for (l, &c) in combo {
                            let (key, b) = labels.get(l)?;
                            if hom.is_some_and(|h| h != key) {
                                return Err(bad("a generator mixes basis labels of different Homs"));
                            }
                            let (x, y, d) = key;
                            coords.resize(dim(x, y, d), 0);
                            coords[b] = fp.add(coords[b], fp.from_i64(c));
                            hom = Some(key);
                        }
                        let (source, target, degree) = hom.ok_or_else(|| bad("empty generator"))?;
                        Ok(Generator { source, target, degree, coords })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        GradedCategory::from_fn(fp, self.objects.clone(), self.window, self.bounded, dim, compose, identities, generators)
    }

    /// Writes out every in-window Hom and nonzero composite with generated labels.
    pub fn from_category(cat: &GradedCategory) -> Self {
        let label = |x: usize, y: usize, d: i32, b: usize| format!("{}>{}@{d}#{b}", cat.objects()[x], cat.objects()[y]);
        let (n, w) = (cat.n_objects(), cat.window());
        let mut homs = BTreeMap::new();
        let mut compose = BTreeMap::new();
        let dim = |x, y, d| cat.hom_dim(x, y, d).expect("in window");
        for x in 0..n {
            for y in 0..n {
                for d in -w..=w {
                    let dxy = dim(x, y, d);
                    if dxy > 0 {
                        homs.insert(
                            format!("({},{},{d})", cat.objects()[x], cat.objects()[y]),
                            (0..dxy).map(|b| label(x, y, d, b)).collect(),
                        );
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for i in -w..=w {
                        for j in (-w - i).max(-w)..=(w - i).min(w) {
                            for f in 0..dim(x, y, i) {
                                for g in 0..dim(y, z, j) {
                                    let v = cat.compose(x, y, z, i, j, &cat.basis(y, z, j, g), &cat.basis(x, y, i, f)).expect("in window");
                                    for (h, &c) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
                                        let key = format!("({},{},{})", label(y, z, j, g), label(x, y, i, f), label(x, z, i + j, h));
                                        compose.insert(key, cat.fp().signed(c));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let identities = (0..n).map(|x| (cat.objects()[x].clone(), cat.identity(x).iter().map(|&c| c as i64).collect())).collect();
        let generators = cat
            .generators()
            .iter()
            .map(|g| {
                g.coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(b, &c)| (label(g.source, g.target, g.degree, b), cat.fp().signed(c)))
                    .collect()
            })
            .collect();
        CategorySpec {
            p: cat.fp().p() as u64,
            objects: cat.objects().to_vec(),
            window: w,
            bounded: cat.is_bounded(),
            homs,
            compose,
            identities,
            generators: Some(generators),
        }
    }
}

/// A finite category together with its automorphisms and trace, ready for orbit construction.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub category: LinearCategory,
    pub automorphisms: BTreeMap<String, CatAutomorphism>,
    pub trace: Option<TraceData>,
}

impl OrbitInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| bad(e.to_string()))
    }

    pub fn build(&self) -> Result<OrbitData> {
        let fp = Fp::new(self.p)?;
        let objs = Objects::new(&self.objects)?;
        let n = self.objects.len();
        let mut homs: HashMap<(usize, usize), &Vec<String>> = HashMap::new();
        for (key, labels) in &self.homs {
            let t = tuple(key)?;
            if t.len() != 2 {
                return Err(bad(format!("hom key {key:?} needs (x,y)")));
            }
            homs.insert((objs.get(&t[0])?, objs.get(&t[1])?), labels);
        }
        let labels = Labels::new(homs.iter().map(|(&k, &v)| (k, v)))?;
        let dim = |x: usize, y: usize| homs.get(&(x, y)).map_or(0, |v| v.len());
        let dims: Vec<usize> = (0..n * n).map(|i| dim(i / n, i % n)).collect();
        let mut comp: Vec<Vec<u32>> = (0..n * n * n)
            .map(|i| {
                let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
                vec![0; dim(y, z) * dim(x, y) * dim(x, z)]
            })
            .collect();
        for (key, &c) in &self.compose {
            let t = tuple(key)?;
            if t.len() != 3 {
                return Err(bad(format!("composition key {key:?} needs (g,f,h)")));
            }
            let ((y, z), g) = labels.get(&t[0])?;
            let ((x, fy), f) = labels.get(&t[1])?;
            let ((hx, hz), h) = labels.get(&t[2])?;
            if fy != y || hx != x || hz != z {
                return Err(bad(format!("composition entry {key:?} does not match sources and targets")));
            }
            let block = &mut comp[(x * n + y) * n + z];
            let idx = (g * dim(x, y) + f) * dim(x, z) + h;
            block[idx] = fp.add(block[idx], fp.from_i64(c));
        }
        let identities = (0..n)
            .map(|x| {
                let name = &self.objects[x];
                let v = self.identities.get(name).ok_or_else(|| bad(format!("object {name:?} has no identity")))?;
                coords(fp, v, dim(x, x), &format!("identity of {name:?}"))
            })
            .collect::<Result<Vec<_>>>()?;
        let category = LinearCategory::new(fp, self.objects.clone(), dims.clone(), comp, identities)?;
        let mut automorphisms = BTreeMap::new();
        for (name, a) in &self.automorphisms {
            let mut perm = vec![usize::MAX; n];
            for (src, dst) in &a.perm {
                perm[objs.get(src)?] = objs.get(dst)?;
            }
            let mut maps = vec![None; n * n];
            for (key, rows) in &a.maps {
                let t = tuple(key)?;
                if t.len() != 2 {
                    return Err(bad(format!("automorphism map key {key:?} needs (x,y)")));
                }
                let (x, y) = (objs.get(&t[0])?, objs.get(&t[1])?);
                let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&c| fp.from_i64(c)).collect()).collect();
                maps[x * n + y] = Some(Matrix::from_rows(fp, dim(x, y), &rows)?);
            }
            if perm.contains(&usize::MAX) {
                return Err(bad(format!("automorphism {name:?} does not move every object")));
            }
            // omitted maps are only allowed between zero Homs
            let maps = maps
                .into_iter()
                .enumerate()
                .map(|(i, m)| match m {
                    Some(m) => Ok(m),
                    None if dims[i] == 0 => Ok(Matrix::zeros(fp, 0, 0)),
                    None => Err(bad(format!("automorphism {name:?} misses the map on a nonzero Hom"))),
                })
                .collect::<Result<Vec<_>>>()?;
            automorphisms.insert(name.clone(), CatAutomorphism::new(&category, perm, maps)?);
        }
        let trace = match &self.trace {
            None => None,
            Some(t) => Some(TraceData {
                d: t.d,
                functionals: self
                    .objects
                    .iter()
                    .map(|name| {
                        t.functionals
                            .get(name)
                            .map(|v| v.iter().map(|&c| fp.from_i64(c)).collect())
                            .ok_or_else(|| bad(format!("trace misses object {name:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            }),
        };
        Ok(OrbitData { category, automorphisms, trace })
    }
}
