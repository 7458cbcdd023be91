use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::graph::{DirectedGraph, Mt3};
use crate::error::{Error, Result};
use crate::finring::{is_prime_ring, FiniteRing};

/// A path in the graph; length zero paths are vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    edges: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path { start: v, edges: Vec::new() }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    fn extended(&self, tail: &[usize]) -> Path {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(tail);
        Path { start: self.start, edges }
    }

    fn is_prefix_of(&self, other: &Path) -> bool {
        self.start == other.start && other.edges.starts_with(&self.edges)
    }
}

/// Shortlex over edge indices; vertices by index.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.start.cmp(&other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite `R`-linear combination of normal-form monomials `αβ*`, keyed
/// by `(α, β)`. Coefficients are ring element indices and sit on the left.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LpaElement {
    terms: BTreeMap<(Path, Path), usize>,
}

impl LpaElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Path, usize)> {
        self.terms.iter().map(|((a, b), &c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `deg(αβ*) = |α| − |β|`.
pub fn lpa_degree(real: &Path, ghost: &Path) -> i64 {
    real.len() as i64 - ghost.len() as i64
}

/// The Leavitt path ring `L_R(E)` of a finite graph over a finite unital
/// ring, with elements kept in a normal form: at every regular vertex the
/// last declared edge `f` never occurs as a trailing `f f*`.
#[derive(Debug, Clone)]
pub struct LeavittRing {
    graph: DirectedGraph,
    coeff: FiniteRing,
    one: usize,
}

impl LeavittRing {
    pub fn new(graph: DirectedGraph, coeff: FiniteRing) -> Result<Self> {
        let one = coeff
            .unit()
            .ok_or_else(|| Error::Precondition("the coefficient ring must be unital".into()))?;
        if coeff.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        if graph.vertex_count() == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        Ok(LeavittRing { graph, coeff, one })
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn coefficients(&self) -> &FiniteRing {
        &self.coeff
    }

    pub fn range(&self, p: &Path) -> usize {
        match p.edges.last() {
            Some(&f) => self.graph.edge(f).range,
            None => p.start,
        }
    }

    /// Validates a path given by edge indices; `start` matters only for
    /// vertices.
    pub fn path(&self, start: usize, edges: &[usize]) -> Result<Path> {
        if start >= self.graph.vertex_count() {
            return Err(Error::InvalidElement(format!("vertex {start} out of range")));
        }
        let mut at = start;
        for &f in edges {
            if f >= self.graph.edge_count() {
                return Err(Error::InvalidElement(format!("edge {f} out of range")));
            }
            let e = self.graph.edge(f);
            if e.source != at {
                return Err(Error::InvalidElement(format!("edge {} does not continue the path", e.name)));
            }
            at = e.range;
        }
        Ok(Path {
            start,
            edges: edges.to_vec(),
        })
    }

    pub fn edge_path(&self, f: usize) -> Path {
        Path {
            start: self.graph.edge(f).source,
            edges: vec![f],
        }
    }

    /// `r αβ*`, reduced to normal form.
    pub fn monomial(&self, r: usize, real: &Path, ghost: &Path) -> Result<LpaElement> {
        self.coeff.check_element(r)?;
        self.path(real.start, &real.edges)?;
        self.path(ghost.start, &ghost.edges)?;
        if self.range(real) != self.range(ghost) {
            return Err(Error::InvalidElement("real and ghost paths end at different vertices".into()));
        }
        let mut out = LpaElement::default();
        self.accumulate(&mut out, r, real.clone(), ghost.clone());
        Ok(out)
    }

    pub fn zero(&self) -> LpaElement {
        LpaElement::default()
    }

    pub fn vertex(&self, v: usize) -> LpaElement {
        self.monomial(self.one, &Path::vertex(v), &Path::vertex(v))
            .expect("vertex in range")
    }

    pub fn edge(&self, f: usize) -> LpaElement {
        let p = self.edge_path(f);
        let r = Path::vertex(self.graph.edge(f).range);
        self.monomial(self.one, &p, &r).expect("edge in range")
    }

    pub fn ghost(&self, f: usize) -> LpaElement {
        let p = self.edge_path(f);
        let r = Path::vertex(self.graph.edge(f).range);
        self.monomial(self.one, &r, &p).expect("edge in range")
    }

    /// `α β*` with coefficient one.
    pub fn path_monomial(&self, real: &Path, ghost: &Path) -> Result<LpaElement> {
        self.monomial(self.one, real, ghost)
    }

    /// Adds `c αβ*` into `acc`, rewriting a trailing `f f*` with `f`
    /// special at `v = s(f)` as `v − Σ_{g ≠ f} g g*`.
    fn accumulate(&self, acc: &mut LpaElement, c: usize, mut real: Path, mut ghost: Path) {
        let zero = self.coeff.zero();
        if c == zero {
            return;
        }
        loop {
            let (Some(&a), Some(&b)) = (real.edges.last(), ghost.edges.last()) else {
                break;
            };
            let v = self.graph.edge(a).source;
            if a != b || self.graph.special_edge(v) != Some(a) {
                break;
            }
            real.edges.pop();
            ghost.edges.pop();
            let minus = self.coeff.neg(c);
            for &g in self.graph.out_edges(v) {
                if g != a {
                    self.add_term(acc, minus, real.extended(&[g]), ghost.extended(&[g]));
                }
            }
        }
        self.add_term(acc, c, real, ghost);
    }

    fn add_term(&self, acc: &mut LpaElement, c: usize, real: Path, ghost: Path) {
        let zero = self.coeff.zero();
        let key = (real, ghost);
        let sum = self.coeff.add(acc.terms.get(&key).copied().unwrap_or(zero), c);
        if sum == zero {
            acc.terms.remove(&key);
        } else {
            acc.terms.insert(key, sum);
        }
    }

    fn check(&self, a: &LpaElement) -> Result<()> {
        for ((real, ghost), &c) in &a.terms {
            self.coeff.check_element(c)?;
            self.path(real.start, &real.edges)?;
            self.path(ghost.start, &ghost.edges)?;
            if self.range(real) != self.range(ghost) {
                return Err(Error::InvalidElement("monomial with mismatched ranges".into()));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        let mut out = a.clone();
        for ((real, ghost), &c) in &b.terms {
            self.add_term(&mut out, c, real.clone(), ghost.clone());
        }
        out
    }

    pub fn neg(&self, a: &LpaElement) -> LpaElement {
        LpaElement {
            terms: a
                .terms
                .iter()
                .map(|(k, &c)| (k.clone(), self.coeff.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        self.add(a, &self.neg(b))
    }

    /// `r · a`.
    pub fn scale(&self, r: usize, a: &LpaElement) -> LpaElement {
        let mut out = LpaElement::default();
        for ((real, ghost), &c) in &a.terms {
            self.accumulate(&mut out, self.coeff.mul(r, c), real.clone(), ghost.clone());
        }
        out
    }

    /// Product in normal form. Fails if an operand mentions paths or
    /// coefficients foreign to this ring.
    pub fn mul(&self, a: &LpaElement, b: &LpaElement) -> Result<LpaElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &LpaElement, b: &LpaElement) -> LpaElement {
        let mut out = LpaElement::default();
        for ((alpha, beta), &r) in &a.terms {
            for ((gamma, delta), &s) in &b.terms {
                let c = self.coeff.mul(r, s);
                if c == self.coeff.zero() {
                    continue;
                }
                // β*γ collapses to a real or ghost tail when one path
                // extends the other, and vanishes otherwise.
                if beta.is_prefix_of(gamma) {
                    let tail = &gamma.edges[beta.len()..];
                    self.accumulate(&mut out, c, alpha.extended(tail), delta.clone());
                } else if gamma.is_prefix_of(beta) {
                    let tail = &beta.edges[gamma.len()..];
                    self.accumulate(&mut out, c, alpha.clone(), delta.extended(tail));
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &LpaElement, b: &LpaElement, c: &LpaElement) -> Result<LpaElement> {
        let ab = self.mul(a, b)?;
        self.mul(&ab, c)
    }

    /// The common degree of all monomials, if there is one. Zero has no
    /// degree.
    pub fn degree(&self, a: &LpaElement) -> Option<i64> {
        let mut degrees = a.terms.keys().map(|(real, ghost)| lpa_degree(real, ghost));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// All paths of length at most `max_len`, in path order.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.graph.vertex_count()).map(Path::vertex).collect();
        let mut frontier = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for &f in self.graph.out_edges(self.range(p)) {
                    next.push(p.extended(&[f]));
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }

    /// Searches `α, β` of length at most `max_len` with `α* a β = r v` for
    /// a vertex `v` and nonzero `r`. The first hit in path order (on `α`,
    /// then `β`) is returned. Not finding one proves nothing.
    pub fn corner_reduce(&self, a: &LpaElement, max_len: usize) -> Result<Option<CornerWitness>> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::Precondition("corner reduction needs a nonzero element".into()));
        }
        let paths = self.paths_up_to(max_len);
        for alpha in &paths {
            let left = self.mul_unchecked(&self.ghost_of(alpha), a);
            if left.is_zero() {
                continue;
            }
            for beta in &paths {
                let prod = self.mul_unchecked(&left, &self.real_of(beta));
                if prod.len() != 1 {
                    continue;
                }
                let (real, ghost, r) = prod.terms().next().expect("one term");
                if real.is_vertex() && real == ghost {
                    return Ok(Some(CornerWitness {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        coeff: r,
                        vertex: real.start,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// `α = α r(α)*`.
    pub fn real_of(&self, p: &Path) -> LpaElement {
        let r = Path::vertex(self.range(p));
        self.path_monomial(p, &r).expect("valid path")
    }

    /// `α* = r(α) α*`.
    pub fn ghost_of(&self, p: &Path) -> LpaElement {
        let r = Path::vertex(self.range(p));
        self.path_monomial(&r, p).expect("valid path")
    }

    /// For vertices `v, w` with no common descendant, checks `v αβ* w = 0`
    /// for every monomial with `|α|, |β| ≤ max_len`.
    pub fn verify_corner_orthogonality(&self, v: usize, w: usize, max_len: usize) -> Result<bool> {
        let n = self.graph.vertex_count();
        if v >= n || w >= n {
            return Err(Error::InvalidElement("vertex out of range".into()));
        }
        let reach = self.graph.reachability();
        if (0..n).any(|u| reach[v][u] && reach[w][u]) {
            return Err(Error::Precondition(format!(
                "{} and {} have a common descendant",
                self.graph.vertex_name(v),
                self.graph.vertex_name(w)
            )));
        }
        let (vv, ww) = (self.vertex(v), self.vertex(w));
        let paths = self.paths_up_to(max_len);
        for alpha in &paths {
            let left = self.mul_unchecked(&vv, &self.real_of(alpha));
            if left.is_zero() {
                continue;
            }
            for beta in paths.iter().filter(|b| self.range(b) == self.range(alpha)) {
                let m = self.mul_unchecked(&left, &self.ghost_of(beta));
                if !self.mul_unchecked(&m, &ww).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn display(&self, a: &LpaElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let name = |p: &Path| -> String {
            p.edges
                .iter()
                .map(|&f| self.graph.edge(f).name.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        a.terms()
            .map(|(real, ghost, c)| {
                let mut s = c.to_string();
                if real.is_vertex() && ghost.is_vertex() {
                    s.push(' ');
                    s.push_str(self.graph.vertex_name(real.start));
                }
                if !real.is_vertex() {
                    s.push(' ');
                    s.push_str(&name(real));
                }
                if !ghost.is_vertex() {
                    s.push_str(&format!(" ({})*", name(ghost)));
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerWitness {
    pub alpha: Path,
    pub beta: Path,
    pub coeff: usize,
    pub vertex: usize,
}

/// Verdict on primeness of `L_R(E)` together with the MT-3 outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeavittVerdict {
    pub coefficients_prime: bool,
    pub mt3: Mt3,
}

impl LeavittVerdict {
    pub fn is_prime(&self) -> bool {
        self.coefficients_prime && self.mt3.holds()
    }
}

/// `L_R(E)` is prime iff `R` is prime and `E` satisfies MT-3.
pub fn is_leavitt_prime(graph: &DirectedGraph, coeff: &FiniteRing) -> Result<LeavittVerdict> {
    if coeff.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    if coeff.unit().is_none() {
        return Err(Error::Precondition("the coefficient ring must be unital".into()));
    }
    let mt3 = graph.satisfies_mt3()?;
    Ok(LeavittVerdict {
        coefficients_prime: is_prime_ring(coeff)?,
        mt3,
    })
}
